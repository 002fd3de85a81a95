#include "fuzzmat/fam.hpp"

#include <algorithm>
#include <cstdint>
#include <map>
#include <string>

namespace fuzzmat {

namespace {

constexpr std::int64_t kOmpMinWork = 1 << 14;

void check_unit(double v, const char* what) {
    if (!(v >= 0.0 && v <= 1.0))
        throw engine_error(std::string(what) + " value " + std::to_string(v) +
                           " is outside [0, 1]");
}

}  // namespace

void FuzzyRelation::validate() const {
    for (double v : matrix.entries()) check_unit(v, "fuzzy relation");
    if (!row_labels.empty() && row_labels.size() != matrix.rows())
        throw engine_error("fuzzy relation: row labels do not match the row count");
    if (!col_labels.empty() && col_labels.size() != matrix.cols())
        throw engine_error("fuzzy relation: column labels do not match the column count");
}

void FitVector::validate() const {
    for (double v : values) check_unit(v, "fit vector");
}

FitVector fam_backward(const FuzzyRelation& m, const FitVector& b) {
    m.validate();
    b.validate();
    if (b.size() != m.matrix.cols())
        throw engine_error("fam_backward: fit vector length " + std::to_string(b.size()) +
                           " does not match " + std::to_string(m.matrix.cols()) + " columns");
    const std::size_t rows = m.matrix.rows(), cols = m.matrix.cols();
    FitVector out;
    out.values.assign(rows, 0.0);
#pragma omp parallel for if (static_cast<std::int64_t>(rows) * static_cast<std::int64_t>(cols) >= kOmpMinWork)
    for (std::int64_t i = 0; i < static_cast<std::int64_t>(rows); ++i) {
        double best = 0.0;
        for (std::size_t j = 0; j < cols; ++j)
            best = std::max(best, std::min(m.matrix.at(static_cast<std::size_t>(i), j), b.values[j]));
        out.values[static_cast<std::size_t>(i)] = best;
    }
    return out;
}

FitVector fam_forward(const FitVector& a, const FuzzyRelation& m) {
    m.validate();
    a.validate();
    if (a.size() != m.matrix.rows())
        throw engine_error("fam_forward: fit vector length " + std::to_string(a.size()) +
                           " does not match " + std::to_string(m.matrix.rows()) + " rows");
    const std::size_t rows = m.matrix.rows(), cols = m.matrix.cols();
    FitVector out;
    out.values.assign(cols, 0.0);
#pragma omp parallel for if (static_cast<std::int64_t>(rows) * static_cast<std::int64_t>(cols) >= kOmpMinWork)
    for (std::int64_t j = 0; j < static_cast<std::int64_t>(cols); ++j) {
        double best = 0.0;
        for (std::size_t i = 0; i < rows; ++i)
            best = std::max(best, std::min(a.values[i], m.matrix.at(i, static_cast<std::size_t>(j))));
        out.values[static_cast<std::size_t>(j)] = best;
    }
    return out;
}

std::vector<GradeGroup> top_grades(const FitVector& v, const std::vector<std::string>& labels) {
    if (v.values.empty()) throw engine_error("top_grades: empty fit vector");
    if (labels.size() != v.values.size())
        throw engine_error("top_grades: " + std::to_string(labels.size()) + " labels for " +
                           std::to_string(v.values.size()) + " values");
    std::map<double, std::vector<std::string>, std::greater<double>> groups;
    for (std::size_t i = 0; i < v.values.size(); ++i) groups[v.values[i]].push_back(labels[i]);
    std::vector<GradeGroup> out;
    out.reserve(groups.size());
    for (auto& [value, group] : groups) out.push_back(GradeGroup{value, std::move(group)});
    return out;
}

FitVector weighted_combine(const std::vector<FitVector>& parts,
                           const std::vector<double>& weights) {
    if (parts.empty()) throw engine_error("weighted_combine: no parts given");
    if (weights.size() != parts.size())
        throw engine_error("weighted_combine: " + std::to_string(weights.size()) +
                           " weights for " + std::to_string(parts.size()) + " parts");
    double total = 0.0;
    for (double w : weights) {
        if (w < 0.0) throw engine_error("weighted_combine: negative weight");
        total += w;
    }
    if (total <= 0.0) throw engine_error("weighted_combine: weights sum to zero");
    const std::size_t n = parts.front().size();
    for (const FitVector& part : parts) {
        part.validate();
        if (part.size() != n) throw engine_error("weighted_combine: parts have mismatched lengths");
    }
    FitVector out;
    out.values.assign(n, 0.0);
    for (std::size_t k = 0; k < parts.size(); ++k)
        for (std::size_t i = 0; i < n; ++i)
            out.values[i] += weights[k] / total * parts[k].values[i];
    return out;
}

double centroid(const FitVector& b, const std::vector<double>& support) {
    b.validate();
    if (support.size() != b.size())
        throw engine_error("centroid: " + std::to_string(support.size()) +
                           " support positions for " + std::to_string(b.size()) + " grades");
    double num = 0.0, den = 0.0;
    for (std::size_t j = 0; j < b.size(); ++j) {
        num += b.values[j] * support[j];
        den += b.values[j];
    }
    if (den <= 0.0) throw engine_error("centroid: all grades are zero, centroid undefined");
    return num / den;
}

}  // namespace fuzzmat
