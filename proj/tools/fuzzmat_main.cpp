#include <cstdio>
#include <iostream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "fuzzmat/errors.hpp"
#include "fuzzmat/job.hpp"

namespace {

std::vector<double> parse_vector(const std::string& text, const std::string& what) {
    std::vector<double> out;
    std::string field;
    std::stringstream in(text);
    while (std::getline(in, field, ',')) {
        char* end = nullptr;
        const double v = std::strtod(field.c_str(), &end);
        if (end != field.c_str() + field.size() || field.empty())
            throw fuzzmat::input_error(what + ": cannot parse '" + field + "' as a number");
        out.push_back(v);
    }
    if (out.empty()) throw fuzzmat::input_error(what + ": empty vector");
    return out;
}

std::vector<std::string> parse_names(const std::string& text) {
    std::vector<std::string> out;
    std::string field;
    std::stringstream in(text);
    while (std::getline(in, field, ',')) out.push_back(field);
    return out;
}

struct RawArgs {
    std::string table, alphas, input, side, policy, fit, direction, from, to;
    std::string prev_y, registry, kinds, out, formats;
    std::vector<std::string> experts;
    double c = 0.0, eps = 0.0;
    int scale = 0;
    bool both_sides = false;
};

void add_out_options(CLI::App* cmd, RawArgs& args) {
    cmd->add_option("--out", args.out, "output directory (default: report to stdout)");
    cmd->add_option("--formats", args.formats, "comma list of report,tsv,svg (default: all)");
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"matrix-based fuzzy model toolkit: CETD pipeline, FRM, BAM, FAM and the "
                 "transformations between them"};
    app.require_subcommand(1);

    RawArgs args;
    fuzzmat::JobConfig cfg;

    CLI::App* cetd = app.add_subcommand("cetd", "five-stage fuzzy-matrix analysis of a raw table");
    cetd->add_option("table", args.table, "raw data CSV with label and divisor columns")
        ->required();
    cetd->add_option("--alphas", args.alphas, "comma list of alpha parameters in [0,1]")
        ->required();
    add_out_options(cetd, args);

    CLI::App* frm = app.add_subcommand("frm", "hidden pattern of a fuzzy relational map");
    frm->add_option("model", args.table, "relational matrix CSV")->required();
    frm->add_option("--input", args.input, "initial state vector, comma separated")->required();
    frm->add_option("--side", args.side, "domain|range (default domain)");
    frm->add_option("--policy", args.policy, "strict|ternary (default strict)");
    frm->add_flag("--both-sides", args.both_sides,
                  "fold the first output into later states on both sides");
    add_out_options(frm, args);

    CLI::App* cfrm = app.add_subcommand("cfrm", "combine expert maps into a combined FRM");
    cfrm->add_option("--expert", args.experts, "expert relational matrix CSV (repeatable)")
        ->required();
    add_out_options(cfrm, args);

    CLI::App* bam = app.add_subcommand("bam", "stable pair of a bidirectional associative memory");
    bam->add_option("model", args.table, "synaptic matrix CSV")->required();
    bam->add_option("--input", args.input, "initial activation vector, comma separated")
        ->required();
    bam->add_option("--side", args.side, "x|y: which field receives the input (default x)");
    bam->add_option("--scale", args.scale, "scale t of the matrix (default: max |entry|)");
    bam->add_option("--policy", args.policy, "binary|bipolar (default binary)");
    bam->add_option("--prev-y", args.prev_y, "initial signal on the opposite field");
    add_out_options(bam, args);

    CLI::App* fam = app.add_subcommand("fam", "max-min composition against a fuzzy relation");
    fam->add_option("relation", args.table, "fuzzy relation CSV with entries in [0,1]")
        ->required();
    fam->add_option("--fit", args.fit, "fit vector, comma separated grades in [0,1]")->required();
    fam->add_option("--direction", args.direction, "forward|backward")->required();
    add_out_options(fam, args);

    CLI::App* transform = app.add_subcommand("transform", "convert one model into another");
    transform->add_option("data", args.experts, "input file(s) for the source model");
    transform->add_option("--from", args.from, "source kind: cetd|bam|frm")->required();
    transform->add_option("--to", args.to, "target kind: cetd|bam|frm")->required();
    transform->add_option("--alphas", args.alphas, "alphas for the CETD stages");
    transform->add_option("--scale", args.scale, "scale of the source BAM");
    transform->add_option("--c", args.c, "band center for bam->frm");
    transform->add_option("--eps", args.eps, "band half-width for bam->frm, 0 < eps < c");
    add_out_options(transform, args);

    CLI::App* classify = app.add_subcommand("classify", "adaptivity class of a transform registry");
    classify->add_option("--registry", args.registry, "CSV of from,to transform edges")
        ->required();
    classify->add_option("--kinds", args.kinds, "comma list of kinds (default: registry kinds)");
    add_out_options(classify, args);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : 1;
    }

    try {
        using Kind = fuzzmat::JobConfig::Kind;
        if (cetd->parsed()) cfg.kind = Kind::Cetd;
        if (frm->parsed()) cfg.kind = Kind::Frm;
        if (cfrm->parsed()) cfg.kind = Kind::Cfrm;
        if (bam->parsed()) cfg.kind = Kind::Bam;
        if (fam->parsed()) cfg.kind = Kind::Fam;
        if (transform->parsed()) cfg.kind = Kind::Transform;
        if (classify->parsed()) cfg.kind = Kind::Classify;

        if (!args.table.empty()) cfg.inputs.push_back(args.table);
        for (const std::string& e : args.experts) cfg.inputs.push_back(e);
        if (!args.alphas.empty()) cfg.alphas = parse_vector(args.alphas, "--alphas");
        if (!args.input.empty()) cfg.initial = parse_vector(args.input, "--input");
        if (!args.fit.empty()) cfg.fit = parse_vector(args.fit, "--fit");
        if (!args.prev_y.empty()) cfg.prev_y = parse_vector(args.prev_y, "--prev-y");
        if (!args.kinds.empty()) cfg.kinds = parse_names(args.kinds);
        if (!args.formats.empty()) cfg.formats = parse_names(args.formats);
        cfg.side = args.side;
        cfg.policy = args.policy;
        cfg.direction = args.direction;
        cfg.update_both_sides = args.both_sides;
        cfg.from = args.from;
        cfg.to = args.to;
        cfg.c = args.c;
        cfg.eps = args.eps;
        cfg.scale = args.scale;
        cfg.registry_path = args.registry;
        cfg.out_dir = args.out;

        const fuzzmat::JobResult result = fuzzmat::run_job(cfg);
        if (cfg.out_dir.empty()) {
            std::cout << result.report_text;
        } else {
            fuzzmat::write_outputs(result, cfg.out_dir);
            std::cout << "wrote " << result.files.size() << " file(s) to " << cfg.out_dir << "\n";
        }
        return 0;
    } catch (const fuzzmat::input_error& e) {
        std::cerr << "input error: " << e.what() << "\n";
        return 1;
    } catch (const fuzzmat::engine_error& e) {
        std::cerr << "engine error: " << e.what() << "\n";
        return 2;
    }
}
