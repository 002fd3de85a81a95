#pragma once

#include <optional>
#include <string>
#include <vector>

#include "fuzzmat/bam.hpp"
#include "fuzzmat/cetd.hpp"
#include "fuzzmat/frm.hpp"

namespace fuzzmat {

enum class ModelKind { CetdMatrix, Bam, Frm, Fam };

std::string to_string(ModelKind kind);
ModelKind model_kind_from_string(const std::string& name);

/// Registry of model-to-model transformations: at most one transform per
/// ordered pair, no self-edges.
class TransformRegistry {
public:
    struct Edge {
        ModelKind from;
        ModelKind to;
        std::string name;  // which procedure the edge is bound to
    };

    void add(ModelKind from, ModelKind to, std::string name);
    bool has(ModelKind from, ModelKind to) const;
    const std::vector<Edge>& edges() const { return edges_; }

private:
    std::vector<Edge> edges_;
};

/// The transforms described alongside the models: CETD <-> BAM and
/// FRM <-> BAM. No FAM edges exist.
TransformRegistry paper_registry();

/// Identity transformation: the CETD matrix becomes the BAM synaptic matrix
/// on the scale [-k, k], k the number of alphas.
SynapticModel cetd_to_bam(const StageMatrix& cetd);

/// Divide every entry by the scale; the result re-enters the pipeline as an
/// ATD matrix.
StageMatrix bam_to_atd(const SynapticModel& model);

/// Combined FRM of p experts taken as a BAM on the scale [-p, p].
SynapticModel cfrm_to_bam(const std::vector<RelationalModel>& models);

/// Threshold the scaled entries through the band (c-eps, c+eps):
/// <= c-eps maps to -1, >= c+eps to +1, inside the band to 0.
RelationalModel bam_to_frm(const SynapticModel& model, double c, double eps);

struct AdaptivityReport {
    bool full_n_adaptive = false;
    std::optional<std::vector<ModelKind>> directed_chain;
    int max_semi_directed_r = 1;
};

/// Classify a collection of n >= 2 distinct kinds against the registry:
/// fully adaptive when every ordered pair has a transform, directed when a
/// chain ordering exists, and semi-directed r for the longest chained
/// subset.
AdaptivityReport classify(const TransformRegistry& registry, const std::vector<ModelKind>& kinds);

}  // namespace fuzzmat
