#pragma once

#include <optional>
#include <string>
#include <vector>

#include "fuzzmat/matrix.hpp"

namespace fuzzmat {

/// Labeled raw-count table: rows are time periods (age groups), columns are
/// attributes, and each row carries the divisor (interval width or cohort
/// size) used to average it. Divisors are always explicit inputs; they are
/// never inferred from the row labels.
struct RawDataTable {
    std::vector<std::string> row_labels;
    std::vector<double> row_divisors;
    std::vector<std::string> col_labels;
    Matrix counts;

    void validate() const;
};

enum class Stage { Atd, Rtd, Cetd };

/// A pipeline matrix tagged with its stage and the alpha parameter(s) that
/// produced it.
struct StageMatrix {
    Stage stage = Stage::Atd;
    std::optional<double> alpha;  // present iff stage == Rtd
    std::vector<double> alphas;   // present iff stage == Cetd
    Matrix data;
    std::vector<std::string> row_labels;
    std::vector<std::string> col_labels;
};

/// Average the raw counts: atd[i][j] = counts[i][j] / divisor[i].
/// A zero divisor yields an all-zero row (empty cohort).
StageMatrix to_atd(const RawDataTable& table);

/// Threshold each ATD column into {-1,0,1} against mean +/- alpha*sd bands.
/// Boundary hits are inclusive (>= / <=); a zero-sd column maps to zeros.
StageMatrix to_rtd(const StageMatrix& atd, double alpha);

/// Entrywise sum of the RTD matrices over all alphas.
StageMatrix to_cetd(const StageMatrix& atd, const std::vector<double>& alphas);

std::vector<double> row_sums(const Matrix& m);
std::vector<double> row_sums(const StageMatrix& m);

}  // namespace fuzzmat
