#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace fuzzmat {

/// Everything a run needs, assembled by the CLI (or a test) up front.
struct JobConfig {
    enum class Kind { Cetd, Frm, Cfrm, Bam, Fam, Transform, Classify };

    Kind kind = Kind::Cetd;
    std::vector<std::string> inputs;  // data files; several experts for cfrm

    std::vector<double> alphas;          // cetd stages
    std::vector<double> initial;         // frm / bam input vector
    std::string side;                    // frm: domain|range, bam: x|y
    std::string policy;                  // frm: strict|ternary, bam: binary|bipolar
    bool update_both_sides = false;      // frm reference-program update variant
    std::optional<std::vector<double>> prev_y;  // bam initial F_Y signal

    std::vector<double> fit;  // fam
    std::string direction;    // fam: forward|backward

    std::string from, to;     // transform
    double c = 0.0, eps = 0.0;
    int scale = 0;            // bam / transform: 0 means infer from entries

    std::string registry_path;        // classify
    std::vector<std::string> kinds;   // classify subset; empty = registry kinds

    std::string out_dir;                // empty: report to stdout only
    std::vector<std::string> formats;   // subset of report,tsv,svg; empty = all
};

struct JobResult {
    std::string report_text;
    // Relative file name -> exact bytes; written under out_dir when set.
    std::vector<std::pair<std::string, std::string>> files;
};

/// Dispatch a validated config to the matching engine and assemble the
/// report plus output files. Deterministic: identical configs and inputs
/// produce byte-identical results.
JobResult run_job(const JobConfig& config);

/// Write result files under dir (created if needed).
void write_outputs(const JobResult& result, const std::string& dir);

}  // namespace fuzzmat
