#include "fuzzmat/transforms.hpp"

#include <algorithm>
#include <cctype>
#include <cmath>
#include <set>

namespace fuzzmat {

std::string to_string(ModelKind kind) {
    switch (kind) {
        case ModelKind::CetdMatrix: return "CETD";
        case ModelKind::Bam: return "BAM";
        case ModelKind::Frm: return "FRM";
        case ModelKind::Fam: return "FAM";
    }
    return "?";
}

ModelKind model_kind_from_string(const std::string& name) {
    std::string up;
    for (char c : name) up.push_back(static_cast<char>(std::toupper(static_cast<unsigned char>(c))));
    if (up == "CETD" || up == "CETD_MATRIX") return ModelKind::CetdMatrix;
    if (up == "BAM") return ModelKind::Bam;
    if (up == "FRM") return ModelKind::Frm;
    if (up == "FAM") return ModelKind::Fam;
    throw input_error("unknown model kind '" + name + "' (expected CETD, BAM, FRM or FAM)");
}

void TransformRegistry::add(ModelKind from, ModelKind to, std::string name) {
    if (from == to) throw engine_error("transform registry: self-edges are not allowed");
    if (has(from, to))
        throw engine_error("transform registry: a transform " + to_string(from) + " -> " +
                           to_string(to) + " is already registered");
    edges_.push_back(Edge{from, to, std::move(name)});
}

bool TransformRegistry::has(ModelKind from, ModelKind to) const {
    return std::any_of(edges_.begin(), edges_.end(),
                       [&](const Edge& e) { return e.from == from && e.to == to; });
}

TransformRegistry paper_registry() {
    TransformRegistry reg;
    reg.add(ModelKind::CetdMatrix, ModelKind::Bam, "cetd_to_bam");
    reg.add(ModelKind::Bam, ModelKind::CetdMatrix, "bam_to_atd");
    reg.add(ModelKind::Frm, ModelKind::Bam, "cfrm_to_bam");
    reg.add(ModelKind::Bam, ModelKind::Frm, "bam_to_frm");
    return reg;
}

SynapticModel cetd_to_bam(const StageMatrix& cetd) {
    if (cetd.stage != Stage::Cetd)
        throw engine_error("cetd_to_bam: input matrix is not a CETD matrix");
    if (cetd.alphas.empty())
        throw engine_error("cetd_to_bam: CETD matrix carries no alpha parameters");
    SynapticModel model;
    model.matrix = cetd.data;
    model.scale = static_cast<int>(cetd.alphas.size());
    model.x_labels = cetd.row_labels;
    model.y_labels = cetd.col_labels;
    model.validate();
    return model;
}

StageMatrix bam_to_atd(const SynapticModel& model) {
    model.validate();
    Matrix data = model.matrix;
    for (double& v : data.entries()) v /= model.scale;
    return StageMatrix{Stage::Atd, std::nullopt, {}, std::move(data), model.x_labels,
                       model.y_labels};
}

SynapticModel cfrm_to_bam(const std::vector<RelationalModel>& models) {
    if (models.empty()) throw engine_error("cfrm_to_bam: at least one expert model is required");
    SynapticModel model;
    model.matrix = combine(models);
    model.scale = static_cast<int>(models.size());
    model.x_labels = models.front().domain_labels;
    model.y_labels = models.front().range_labels;
    model.validate();
    return model;
}

RelationalModel bam_to_frm(const SynapticModel& model, double c, double eps) {
    model.validate();
    if (!(eps > 0.0 && eps < c))
        throw engine_error("bam_to_frm: parameters must satisfy 0 < eps < c");
    Matrix out(model.matrix.rows(), model.matrix.cols());
    for (std::size_t k = 0; k < out.entries().size(); ++k) {
        const double v = model.matrix.entries()[k] / model.scale;
        out.entries()[k] = v <= c - eps ? -1.0 : (v >= c + eps ? 1.0 : 0.0);
    }
    RelationalModel frm{model.x_labels, model.y_labels, std::move(out)};
    if (frm.domain_labels.empty())
        frm.domain_labels.assign(model.matrix.rows(), "");
    if (frm.range_labels.empty())
        frm.range_labels.assign(model.matrix.cols(), "");
    for (std::size_t i = 0; i < frm.domain_labels.size(); ++i)
        if (frm.domain_labels[i].empty()) frm.domain_labels[i] = "D" + std::to_string(i + 1);
    for (std::size_t j = 0; j < frm.range_labels.size(); ++j)
        if (frm.range_labels[j].empty()) frm.range_labels[j] = "R" + std::to_string(j + 1);
    return frm;
}

namespace {

// Longest simple directed path, in vertices, over at most 8 kinds.
void longest_path(const std::vector<std::vector<bool>>& adj, std::size_t at,
                  std::vector<bool>& used, int depth, int& best,
                  std::vector<std::size_t>& path, std::vector<std::size_t>* best_path) {
    if (depth > best) {
        best = depth;
        if (best_path) *best_path = path;
    }
    for (std::size_t next = 0; next < adj.size(); ++next) {
        if (used[next] || !adj[at][next]) continue;
        used[next] = true;
        path.push_back(next);
        longest_path(adj, next, used, depth + 1, best, path, best_path);
        path.pop_back();
        used[next] = false;
    }
}

}  // namespace

AdaptivityReport classify(const TransformRegistry& registry,
                          const std::vector<ModelKind>& kinds) {
    const std::size_t n = kinds.size();
    if (n < 2) throw engine_error("classify: at least two distinct models are required");
    if (std::set<ModelKind>(kinds.begin(), kinds.end()).size() != n)
        throw engine_error("classify: model kinds must be distinct");

    std::vector<std::vector<bool>> adj(n, std::vector<bool>(n, false));
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            if (i != j) adj[i][j] = registry.has(kinds[i], kinds[j]);

    AdaptivityReport report;
    report.full_n_adaptive = true;
    for (std::size_t i = 0; i < n && report.full_n_adaptive; ++i)
        for (std::size_t j = 0; j < n; ++j)
            if (i != j && !adj[i][j]) {
                report.full_n_adaptive = false;
                break;
            }

    int best = 0;
    std::vector<std::size_t> best_path;
    for (std::size_t start = 0; start < n; ++start) {
        std::vector<bool> used(n, false);
        used[start] = true;
        std::vector<std::size_t> path{start};
        longest_path(adj, start, used, 1, best, path, &best_path);
    }
    report.max_semi_directed_r = best;
    if (best == static_cast<int>(n)) {
        std::vector<ModelKind> chain;
        chain.reserve(n);
        for (std::size_t idx : best_path) chain.push_back(kinds[idx]);
        report.directed_chain = std::move(chain);
    }
    return report;
}

}  // namespace fuzzmat
