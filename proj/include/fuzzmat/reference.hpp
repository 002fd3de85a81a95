#pragma once

#include <utility>
#include <vector>

#include "fuzzmat/cetd.hpp"
#include "fuzzmat/matrix.hpp"

namespace fuzzmat::ref {

// Plain serial implementations of the numeric kernels, kept deliberately
// independent of the parallel versions: tests compare the two and the
// benchmark measures them against each other. The *_cellwise variants
// re-derive every branch condition from scratch per cell and serve as
// brute-force oracles at desk scale.

std::vector<double> left_multiply(const std::vector<double>& v, const Matrix& m);
Matrix transpose(const Matrix& m);
std::vector<double> row_sums(const Matrix& m);

Matrix atd(const Matrix& counts, const std::vector<double>& divisors);
Matrix rtd(const Matrix& atd, double alpha);
Matrix cetd(const Matrix& atd, const std::vector<double>& alphas);

/// Oracle RTD: recomputes the column mean and deviation from scratch for
/// every single cell and evaluates each branch condition independently.
Matrix rtd_cellwise(const Matrix& atd, double alpha);

std::vector<double> max_min_backward(const Matrix& m, const std::vector<double>& b);
std::vector<double> max_min_forward(const std::vector<double>& a, const Matrix& m);

/// Naive synchronous BAM settle with zero thresholds and inputs. Returns
/// the stable binary pair. Independent of the engine's bam_run.
std::pair<std::vector<int>, std::vector<int>> bam_settle(const Matrix& m,
                                                         const std::vector<double>& x_activation,
                                                         const std::vector<int>& prev_y);

double bam_energy(const Matrix& m, const std::vector<int>& x, const std::vector<int>& y);

}  // namespace fuzzmat::ref
