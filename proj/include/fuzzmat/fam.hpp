#pragma once

#include <string>
#include <vector>

#include "fuzzmat/matrix.hpp"

namespace fuzzmat {

/// Fuzzy relation matrix with membership grades in [0, 1].
struct FuzzyRelation {
    Matrix matrix;
    std::vector<std::string> row_labels;
    std::vector<std::string> col_labels;

    void validate() const;
};

/// Vector of membership grades in [0, 1].
struct FitVector {
    std::vector<double> values;

    void validate() const;
    std::size_t size() const { return values.size(); }
};

/// a_i = max over j of min(m[i][j], b_j).
FitVector fam_backward(const FuzzyRelation& m, const FitVector& b);

/// b_j = max over i of min(a_i, m[i][j]).
FitVector fam_forward(const FitVector& a, const FuzzyRelation& m);

/// Labels grouped by equal grade, ordered by descending grade. Ties are
/// exact equality of the stored doubles.
struct GradeGroup {
    double value = 0.0;
    std::vector<std::string> labels;
};
std::vector<GradeGroup> top_grades(const FitVector& v, const std::vector<std::string>& labels);

/// Normalized weighted average of fit vectors; weights must not all be zero.
FitVector weighted_combine(const std::vector<FitVector>& parts,
                           const std::vector<double>& weights);

/// Fuzzy centroid of b over the output positions: sum(b_j y_j) / sum(b_j).
double centroid(const FitVector& b, const std::vector<double>& support);

}  // namespace fuzzmat
