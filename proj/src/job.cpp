#include "fuzzmat/job.hpp"

#include <algorithm>
#include <cmath>
#include <filesystem>
#include <fstream>
#include <set>

#include "fuzzmat/bam.hpp"
#include "fuzzmat/cetd.hpp"
#include "fuzzmat/chart.hpp"
#include "fuzzmat/csv.hpp"
#include "fuzzmat/fam.hpp"
#include "fuzzmat/frm.hpp"
#include "fuzzmat/report.hpp"
#include "fuzzmat/transforms.hpp"

namespace fuzzmat {

namespace {

std::vector<std::string> default_labels(const char* prefix, std::size_t n) {
    std::vector<std::string> out;
    out.reserve(n);
    for (std::size_t i = 0; i < n; ++i) out.push_back(prefix + std::to_string(i + 1));
    return out;
}

void fill_labels(LabeledMatrix& lm, const char* row_prefix, const char* col_prefix) {
    if (lm.row_labels.empty()) lm.row_labels = default_labels(row_prefix, lm.matrix.rows());
    if (lm.col_labels.empty()) lm.col_labels = default_labels(col_prefix, lm.matrix.cols());
}

bool wants(const JobConfig& cfg, const std::string& format) {
    return cfg.formats.empty() ||
           std::find(cfg.formats.begin(), cfg.formats.end(), format) != cfg.formats.end();
}

void emit(const JobConfig& cfg, JobResult& result, const std::string& name,
          const std::string& bytes, const std::string& format) {
    if (wants(cfg, format)) result.files.emplace_back(name, bytes);
}

std::string state_str(const StateVector& s) {
    std::string out = "(";
    for (std::size_t i = 0; i < s.size(); ++i) {
        if (i) out += " ";
        out += std::to_string(s[i]);
    }
    return out + ")";
}

// Engine failures surface with the stage that raised them.
template <typename F>
auto stage(const char* name, F&& f) -> decltype(f()) {
    try {
        return f();
    } catch (const engine_error& e) {
        throw engine_error(std::string(name) + ": " + e.what());
    }
}

std::string alpha_tag(double a) {
    std::string s = format_real(a);
    return s;
}

int infer_scale(const Matrix& m) {
    double maxabs = 0.0;
    for (double v : m.entries()) maxabs = std::max(maxabs, std::abs(v));
    return std::max(1, static_cast<int>(std::ceil(maxabs)));
}

JobResult run_cetd(const JobConfig& cfg) {
    if (cfg.inputs.size() != 1) throw input_error("cetd: exactly one table file is required");
    if (cfg.alphas.empty()) throw input_error("cetd: --alphas is required");
    RawDataTable table = require_table(load_table(cfg.inputs[0]), cfg.inputs[0]);

    Report rep;
    rep.kv("report", "cetd");
    rep.kv("input", cfg.inputs[0]);
    rep.vector_line("alphas", cfg.alphas, false);
    rep.section("stage IRD");
    rep.note("raw counts; per-row divisors are explicit inputs");
    rep.vector_line("divisors", table.row_divisors, false);
    rep.matrix("matrix", table.counts, table.row_labels, table.col_labels, true);

    StageMatrix atd = stage("to_atd", [&] { return to_atd(table); });
    rep.section("stage ATD");
    rep.note("each row of the raw table divided by its divisor; zero divisors give zero rows");
    rep.matrix("matrix", atd.data, atd.row_labels, atd.col_labels, false);

    JobResult result;
    for (double a : cfg.alphas) {
        StageMatrix rtd = stage("to_rtd", [&] { return to_rtd(atd, a); });
        const std::vector<double> sums = row_sums(rtd);
        rep.section("stage RTD alpha=" + alpha_tag(a));
        rep.note("entries thresholded into {-1,0,1} against column mean +/- alpha*sd bands");
        rep.matrix("matrix", rtd.data, rtd.row_labels, rtd.col_labels, true);
        rep.vector_line("row sums", sums, true);
        rep.raw(text_bar_chart(sums, rtd.row_labels));
        emit(cfg, result, "rtd_alpha" + alpha_tag(a) + ".tsv",
             matrix_tsv(rtd.data, rtd.row_labels, rtd.col_labels, true), "tsv");
        emit(cfg, result, "rtd_alpha" + alpha_tag(a) + ".svg",
             svg_bar_chart(sums, rtd.row_labels, "RTD row sums, alpha=" + alpha_tag(a)), "svg");
    }

    StageMatrix cetd = stage("to_cetd", [&] { return to_cetd(atd, cfg.alphas); });
    const std::vector<double> sums = row_sums(cetd);
    rep.section("stage CETD");
    rep.note("entrywise sum of the RTD matrices over all alphas");
    rep.matrix("matrix", cetd.data, cetd.row_labels, cetd.col_labels, true);
    rep.vector_line("row sums", sums, true);
    rep.raw(text_bar_chart(sums, cetd.row_labels));

    emit(cfg, result, "atd.tsv", matrix_tsv(atd.data, atd.row_labels, atd.col_labels, false),
         "tsv");
    emit(cfg, result, "cetd.tsv", matrix_tsv(cetd.data, cetd.row_labels, cetd.col_labels, true),
         "tsv");
    emit(cfg, result, "cetd.svg", svg_bar_chart(sums, cetd.row_labels, "CETD row sums"), "svg");
    result.report_text = rep.text();
    return result;
}

SignalPolicy frm_policy(const std::string& name) {
    if (name.empty() || name == "strict") return SignalPolicy{SignalKind::BinaryStrict, {}};
    if (name == "ternary") return SignalPolicy{SignalKind::Ternary, {}};
    throw input_error("frm: unknown policy '" + name + "' (expected strict or ternary)");
}

StateVector to_state(const std::vector<double>& v, Alphabet alphabet) {
    std::vector<int> iv;
    iv.reserve(v.size());
    for (double x : v) {
        if (x != std::floor(x))
            throw input_error("state vector entry " + format_real(x) + " is not an integer");
        iv.push_back(static_cast<int>(x));
    }
    try {
        return StateVector(alphabet, std::move(iv));
    } catch (const engine_error& e) {
        throw input_error(e.what());
    }
}

JobResult run_frm(const JobConfig& cfg) {
    if (cfg.inputs.size() != 1) throw input_error("frm: exactly one model file is required");
    if (cfg.initial.empty()) throw input_error("frm: --input is required");
    LabeledMatrix lm = require_matrix(load_table(cfg.inputs[0]), cfg.inputs[0]);
    fill_labels(lm, "D", "R");
    RelationalModel model{lm.row_labels, lm.col_labels, lm.matrix};
    try {
        model.validate();
    } catch (const engine_error& e) {
        throw input_error(cfg.inputs[0] + ": " + e.what());
    }

    Side side = Side::Domain;
    if (cfg.side == "range")
        side = Side::Range;
    else if (!cfg.side.empty() && cfg.side != "domain")
        throw input_error("frm: unknown side '" + cfg.side + "' (expected domain or range)");
    SignalPolicy policy = frm_policy(cfg.policy);
    StateVector initial = to_state(cfg.initial, signal_alphabet(policy.kind));

    HiddenPattern hp = stage("hidden_pattern", [&] {
        return hidden_pattern(model, initial, side, policy,
                              cfg.update_both_sides ? UpdateMode::BothSides
                                                    : UpdateMode::InputSide);
    });

    Report rep;
    rep.kv("report", "frm");
    rep.kv("input", cfg.inputs[0]);
    rep.kv("side", side == Side::Domain ? "domain" : "range");
    rep.kv("policy", cfg.policy.empty() ? "strict" : cfg.policy);
    rep.kv("update", cfg.update_both_sides ? "both-sides" : "input-side");
    rep.kv("initial", state_str(initial));
    rep.section("model");
    rep.matrix("relational matrix", model.matrix, model.domain_labels, model.range_labels, true);
    rep.section("trajectory");
    for (std::size_t i = 0; i < hp.trajectory.size(); ++i)
        rep.kv("pair " + std::to_string(i), state_str(hp.trajectory[i].first) + " / " +
                                                state_str(hp.trajectory[i].second));
    rep.section("hidden pattern");
    rep.kv("kind", hp.kind == HiddenPattern::Kind::FixedPoint ? "fixed point" : "limit cycle");
    rep.kv("domain state", state_str(hp.domain_state));
    rep.kv("range state", state_str(hp.range_state));
    rep.kv("half-steps", std::to_string(hp.steps));
    rep.kv("settled after", std::to_string(hp.settled_after));
    if (hp.kind == HiddenPattern::Kind::LimitCycle) {
        for (std::size_t i = 0; i < hp.cycle.size(); ++i)
            rep.kv("cycle " + std::to_string(i),
                   state_str(hp.cycle[i].first) + " / " + state_str(hp.cycle[i].second));
    }

    JobResult result;
    emit(cfg, result, "model.tsv",
         matrix_tsv(model.matrix, model.domain_labels, model.range_labels, true), "tsv");
    result.report_text = rep.text();
    return result;
}

JobResult run_cfrm(const JobConfig& cfg) {
    if (cfg.inputs.empty()) throw input_error("cfrm: at least one --expert file is required");
    std::vector<RelationalModel> experts;
    for (const std::string& path : cfg.inputs) {
        LabeledMatrix lm = require_matrix(load_table(path), path);
        fill_labels(lm, "D", "R");
        RelationalModel model{lm.row_labels, lm.col_labels, lm.matrix};
        try {
            model.validate();
        } catch (const engine_error& e) {
            throw input_error(path + ": " + e.what());
        }
        experts.push_back(std::move(model));
    }
    Matrix combined = stage("combine", [&] { return combine(experts); });

    Report rep;
    rep.kv("report", "cfrm");
    for (std::size_t i = 0; i < cfg.inputs.size(); ++i)
        rep.kv("expert " + std::to_string(i + 1), cfg.inputs[i]);
    rep.section("combined relational matrix");
    rep.note("entrywise sum of the expert matrices; entries range in [-p, p] for p experts");
    rep.matrix("matrix", combined, experts.front().domain_labels, experts.front().range_labels,
               true);

    JobResult result;
    emit(cfg, result, "cfrm.tsv",
         matrix_tsv(combined, experts.front().domain_labels, experts.front().range_labels, true),
         "tsv");
    result.report_text = rep.text();
    return result;
}

SignalKind bam_policy(const std::string& name) {
    if (name.empty() || name == "binary") return SignalKind::BamBinaryMemory;
    if (name == "bipolar") return SignalKind::BamBipolarMemory;
    throw input_error("bam: unknown policy '" + name + "' (expected binary or bipolar)");
}

JobResult run_bam(const JobConfig& cfg) {
    if (cfg.inputs.size() != 1) throw input_error("bam: exactly one model file is required");
    if (cfg.initial.empty()) throw input_error("bam: --input is required");
    LabeledMatrix lm = require_matrix(load_table(cfg.inputs[0]), cfg.inputs[0]);
    fill_labels(lm, "X", "Y");

    SynapticModel model;
    model.matrix = lm.matrix;
    model.x_labels = lm.row_labels;
    model.y_labels = lm.col_labels;
    model.scale = cfg.scale > 0 ? cfg.scale : infer_scale(lm.matrix);
    model.policy = bam_policy(cfg.policy);
    try {
        model.validate();
    } catch (const engine_error& e) {
        throw input_error(cfg.inputs[0] + ": " + e.what());
    }

    bool on_y = false;
    if (cfg.side == "y")
        on_y = true;
    else if (!cfg.side.empty() && cfg.side != "x")
        throw input_error("bam: unknown side '" + cfg.side + "' (expected x or y)");
    SynapticModel run_model = on_y ? transposed(model) : model;

    std::optional<StateVector> prev;
    if (cfg.prev_y)
        prev = to_state(*cfg.prev_y, signal_alphabet(model.policy));

    StableResult res =
        stage("bam_run", [&] { return bam_run(run_model, cfg.initial, prev); });

    Report rep;
    rep.kv("report", "bam");
    rep.kv("input", cfg.inputs[0]);
    rep.kv("scale", std::to_string(model.scale));
    rep.kv("policy", cfg.policy.empty() ? "binary" : cfg.policy);
    rep.kv("side", on_y ? "y" : "x");
    rep.vector_line("activation", cfg.initial, false);
    rep.section("model");
    rep.matrix("synaptic matrix", model.matrix, model.x_labels, model.y_labels, true);
    rep.section("trajectory");
    for (std::size_t i = 0; i < res.trajectory.size(); ++i) {
        const HalfStep& h = res.trajectory[i];
        rep.kv("half-step " + std::to_string(i + 1) + " " +
                   (h.direction == Direction::Forward ? "forward" : "backward"),
               "raw (" + join_reals(h.raw, " ") + ") -> signal " + state_str(h.signal));
    }
    rep.section("stable pair");
    rep.kv("x signal", state_str(res.x_signal));
    rep.kv("y signal", state_str(res.y_signal));
    rep.kv("half-steps", std::to_string(res.half_steps));
    rep.kv("stabilized at half-step", std::to_string(res.stabilized_at));
    rep.kv("energy", energy(run_model, res.x_signal, res.y_signal));

    JobResult result;
    emit(cfg, result, "model.tsv",
         matrix_tsv(model.matrix, model.x_labels, model.y_labels, true), "tsv");
    result.report_text = rep.text();
    return result;
}

JobResult run_fam(const JobConfig& cfg) {
    if (cfg.inputs.size() != 1) throw input_error("fam: exactly one relation file is required");
    if (cfg.fit.empty()) throw input_error("fam: --fit is required");
    if (cfg.direction != "forward" && cfg.direction != "backward")
        throw input_error("fam: --direction must be forward or backward");
    LabeledMatrix lm = require_matrix(load_table(cfg.inputs[0]), cfg.inputs[0]);
    fill_labels(lm, "W", "R");
    FuzzyRelation rel{lm.matrix, lm.row_labels, lm.col_labels};
    try {
        rel.validate();
    } catch (const engine_error& e) {
        throw input_error(cfg.inputs[0] + ": " + e.what());
    }
    FitVector fit{cfg.fit};

    Report rep;
    rep.kv("report", "fam");
    rep.kv("input", cfg.inputs[0]);
    rep.kv("direction", cfg.direction);
    rep.vector_line("fit", fit.values, false);
    rep.section("relation");
    rep.matrix("fuzzy relation", rel.matrix, rel.row_labels, rel.col_labels, false);

    FitVector out;
    std::vector<std::string> out_labels;
    if (cfg.direction == "backward") {
        out = stage("fam_backward", [&] { return fam_backward(rel, fit); });
        out_labels = rel.row_labels;
    } else {
        out = stage("fam_forward", [&] { return fam_forward(fit, rel); });
        out_labels = rel.col_labels;
    }
    rep.section("result");
    rep.vector_line("fit vector", out.values, false);
    const std::vector<GradeGroup> grades =
        stage("top_grades", [&] { return top_grades(out, out_labels); });
    for (std::size_t i = 0; i < grades.size(); ++i) {
        std::string names;
        for (std::size_t k = 0; k < grades[i].labels.size(); ++k) {
            if (k) names += ", ";
            names += grades[i].labels[k];
        }
        rep.kv("grade " + std::to_string(i + 1) + " (" + format_real(grades[i].value) + ")",
               names);
    }

    JobResult result;
    result.report_text = rep.text();
    return result;
}

JobResult run_transform(const JobConfig& cfg) {
    const std::string from = cfg.from, to = cfg.to;
    Report rep;
    rep.kv("report", "transform");
    rep.kv("from", from);
    rep.kv("to", to);
    JobResult result;

    if (from == "cetd" && to == "bam") {
        if (cfg.inputs.size() != 1) throw input_error("transform: one table file is required");
        if (cfg.alphas.empty()) throw input_error("transform cetd->bam: --alphas is required");
        RawDataTable table = require_table(load_table(cfg.inputs[0]), cfg.inputs[0]);
        rep.kv("input", cfg.inputs[0]);
        rep.vector_line("alphas", cfg.alphas, false);
        StageMatrix cetd = stage("to_cetd", [&] { return to_cetd(to_atd(table), cfg.alphas); });
        SynapticModel bam = stage("cetd_to_bam", [&] { return cetd_to_bam(cetd); });
        rep.section("bam model");
        rep.note("identity transformation: the CETD matrix becomes the synaptic matrix");
        rep.kv("scale", std::to_string(bam.scale));
        rep.matrix("matrix", bam.matrix, bam.x_labels, bam.y_labels, true);
        emit(cfg, result, "bam.tsv", matrix_tsv(bam.matrix, bam.x_labels, bam.y_labels, true),
             "tsv");
    } else if (from == "bam" && to == "cetd") {
        if (cfg.inputs.size() != 1) throw input_error("transform: one matrix file is required");
        LabeledMatrix lm = require_matrix(load_table(cfg.inputs[0]), cfg.inputs[0]);
        fill_labels(lm, "X", "Y");
        SynapticModel model;
        model.matrix = lm.matrix;
        model.x_labels = lm.row_labels;
        model.y_labels = lm.col_labels;
        model.scale = cfg.scale > 0 ? cfg.scale : infer_scale(lm.matrix);
        rep.kv("input", cfg.inputs[0]);
        rep.kv("scale", std::to_string(model.scale));
        StageMatrix atd = stage("bam_to_atd", [&] { return bam_to_atd(model); });
        rep.section("atd matrix");
        rep.note("every entry divided by the scale; feeds the fuzzy-matrix pipeline");
        rep.matrix("matrix", atd.data, atd.row_labels, atd.col_labels, false);
        emit(cfg, result, "atd.tsv", matrix_tsv(atd.data, atd.row_labels, atd.col_labels, false),
             "tsv");
        if (!cfg.alphas.empty()) {
            StageMatrix cetd = stage("to_cetd", [&] { return to_cetd(atd, cfg.alphas); });
            rep.section("cetd matrix");
            rep.vector_line("alphas", cfg.alphas, false);
            rep.matrix("matrix", cetd.data, cetd.row_labels, cetd.col_labels, true);
            rep.vector_line("row sums", row_sums(cetd), true);
            emit(cfg, result, "cetd.tsv",
                 matrix_tsv(cetd.data, cetd.row_labels, cetd.col_labels, true), "tsv");
        }
    } else if (from == "frm" && to == "bam") {
        if (cfg.inputs.empty()) throw input_error("transform frm->bam: expert files are required");
        std::vector<RelationalModel> experts;
        for (const std::string& path : cfg.inputs) {
            LabeledMatrix lm = require_matrix(load_table(path), path);
            fill_labels(lm, "D", "R");
            experts.push_back(RelationalModel{lm.row_labels, lm.col_labels, lm.matrix});
        }
        SynapticModel bam = stage("cfrm_to_bam", [&] { return cfrm_to_bam(experts); });
        for (std::size_t i = 0; i < cfg.inputs.size(); ++i)
            rep.kv("expert " + std::to_string(i + 1), cfg.inputs[i]);
        rep.section("bam model");
        rep.note("combined FRM of p experts taken on the scale [-p, p]");
        rep.kv("scale", std::to_string(bam.scale));
        rep.matrix("matrix", bam.matrix, bam.x_labels, bam.y_labels, true);
        emit(cfg, result, "bam.tsv", matrix_tsv(bam.matrix, bam.x_labels, bam.y_labels, true),
             "tsv");
    } else if (from == "bam" && to == "frm") {
        if (cfg.inputs.size() != 1) throw input_error("transform: one matrix file is required");
        LabeledMatrix lm = require_matrix(load_table(cfg.inputs[0]), cfg.inputs[0]);
        fill_labels(lm, "X", "Y");
        SynapticModel model;
        model.matrix = lm.matrix;
        model.x_labels = lm.row_labels;
        model.y_labels = lm.col_labels;
        model.scale = cfg.scale > 0 ? cfg.scale : infer_scale(lm.matrix);
        rep.kv("input", cfg.inputs[0]);
        rep.kv("scale", std::to_string(model.scale));
        rep.kv("c", cfg.c);
        rep.kv("eps", cfg.eps);
        RelationalModel frm = stage("bam_to_frm", [&] { return bam_to_frm(model, cfg.c, cfg.eps); });
        rep.section("frm model");
        rep.note("scaled entries thresholded through the (c-eps, c+eps) band");
        rep.matrix("matrix", frm.matrix, frm.domain_labels, frm.range_labels, true);
        emit(cfg, result, "frm.tsv",
             matrix_tsv(frm.matrix, frm.domain_labels, frm.range_labels, true), "tsv");
    } else {
        throw input_error("transform: no transformation registered for " + from + " -> " + to);
    }
    result.report_text = rep.text();
    return result;
}

JobResult run_classify(const JobConfig& cfg) {
    if (cfg.registry_path.empty()) throw input_error("classify: --registry is required");
    TransformRegistry registry = load_registry(cfg.registry_path);

    std::vector<ModelKind> kinds;
    if (!cfg.kinds.empty()) {
        for (const std::string& k : cfg.kinds) kinds.push_back(model_kind_from_string(k));
    } else {
        std::set<ModelKind> seen;
        for (const auto& e : registry.edges()) {
            if (seen.insert(e.from).second) kinds.push_back(e.from);
            if (seen.insert(e.to).second) kinds.push_back(e.to);
        }
    }

    AdaptivityReport ar = stage("classify", [&] { return classify(registry, kinds); });

    Report rep;
    rep.kv("report", "classify");
    rep.kv("registry", cfg.registry_path);
    std::string kind_names;
    for (std::size_t i = 0; i < kinds.size(); ++i) {
        if (i) kind_names += ", ";
        kind_names += to_string(kinds[i]);
    }
    rep.kv("kinds", kind_names);
    rep.section("adaptivity");
    rep.kv("full " + std::to_string(kinds.size()) + "-adaptive",
           ar.full_n_adaptive ? "yes" : "no");
    if (ar.directed_chain) {
        std::string chain;
        for (std::size_t i = 0; i < ar.directed_chain->size(); ++i) {
            if (i) chain += " -> ";
            chain += to_string((*ar.directed_chain)[i]);
        }
        rep.kv("directed chain", chain);
    } else {
        rep.kv("directed chain", "none");
    }
    rep.kv("max semi-directed r", std::to_string(ar.max_semi_directed_r));

    JobResult result;
    result.report_text = rep.text();
    return result;
}

}  // namespace

JobResult run_job(const JobConfig& config) {
    JobResult result;
    switch (config.kind) {
        case JobConfig::Kind::Cetd: result = run_cetd(config); break;
        case JobConfig::Kind::Frm: result = run_frm(config); break;
        case JobConfig::Kind::Cfrm: result = run_cfrm(config); break;
        case JobConfig::Kind::Bam: result = run_bam(config); break;
        case JobConfig::Kind::Fam: result = run_fam(config); break;
        case JobConfig::Kind::Transform: result = run_transform(config); break;
        case JobConfig::Kind::Classify: result = run_classify(config); break;
    }
    if (wants(config, "report"))
        result.files.emplace_back("report.txt", result.report_text);
    return result;
}

void write_outputs(const JobResult& result, const std::string& dir) {
    std::filesystem::create_directories(dir);
    for (const auto& [name, bytes] : result.files) {
        const std::filesystem::path path = std::filesystem::path(dir) / name;
        std::ofstream out(path, std::ios::binary);
        if (!out) throw input_error("cannot write " + path.string());
        out.write(bytes.data(), static_cast<std::streamsize>(bytes.size()));
    }
}

}  // namespace fuzzmat
