#include "fuzzmat/matrix.hpp"

#include <cmath>
#include <cstdint>
#include <string>

namespace fuzzmat {

namespace {

// Loops below this many output elements are not worth forking threads for;
// paper-scale models are tiny, survey batches are not.
constexpr std::int64_t kOmpMinWork = 1 << 14;

std::string dim_str(std::size_t r, std::size_t c) {
    return std::to_string(r) + "x" + std::to_string(c);
}

}  // namespace

Matrix::Matrix(std::size_t rows, std::size_t cols, double fill)
    : rows_(rows), cols_(cols), data_(rows * cols, fill) {
    if (rows_ == 0 || cols_ == 0)
        throw engine_error("matrix dimensions must be at least 1x1, got " + dim_str(rows, cols));
}

Matrix::Matrix(std::initializer_list<std::initializer_list<double>> rows) {
    rows_ = rows.size();
    if (rows_ == 0) throw engine_error("matrix must have at least one row");
    cols_ = rows.begin()->size();
    if (cols_ == 0) throw engine_error("matrix must have at least one column");
    data_.reserve(rows_ * cols_);
    for (const auto& r : rows) {
        if (r.size() != cols_)
            throw engine_error("ragged matrix initializer: expected " + std::to_string(cols_) +
                               " columns, got " + std::to_string(r.size()));
        data_.insert(data_.end(), r.begin(), r.end());
    }
}

bool Matrix::is_integral() const {
    for (double v : data_)
        if (v != std::floor(v)) return false;
    return true;
}

StateVector::StateVector(Alphabet alphabet, std::vector<int> values)
    : alphabet_(alphabet), values_(std::move(values)) {
    for (int v : values_) {
        bool ok = false;
        switch (alphabet_) {
            case Alphabet::Binary: ok = v == 0 || v == 1; break;
            case Alphabet::Ternary: ok = v == -1 || v == 0 || v == 1; break;
            case Alphabet::Bipolar: ok = v == -1 || v == 1; break;
        }
        if (!ok)
            throw engine_error("state value " + std::to_string(v) +
                               " is outside the declared alphabet");
    }
}

StateVector StateVector::all_off(Alphabet alphabet, std::size_t n) {
    int off = alphabet == Alphabet::Bipolar ? -1 : 0;
    return StateVector(alphabet, std::vector<int>(n, off));
}

Alphabet signal_alphabet(SignalKind kind) {
    switch (kind) {
        case SignalKind::BinaryStrict:
        case SignalKind::BamBinaryMemory: return Alphabet::Binary;
        case SignalKind::BamBipolarMemory: return Alphabet::Bipolar;
        case SignalKind::Ternary: return Alphabet::Ternary;
    }
    return Alphabet::Binary;
}

std::vector<double> left_multiply(const std::vector<double>& v, const Matrix& m) {
    if (v.size() != m.rows())
        throw engine_error("left_multiply: vector length " + std::to_string(v.size()) +
                           " does not match matrix rows " + std::to_string(m.rows()) + " (matrix is " +
                           dim_str(m.rows(), m.cols()) + ")");
    const std::size_t rows = m.rows(), cols = m.cols();
    std::vector<double> out(cols, 0.0);
    const double* data = m.entries().data();
#pragma omp parallel for if (static_cast<std::int64_t>(rows) * static_cast<std::int64_t>(cols) >= kOmpMinWork)
    for (std::int64_t j = 0; j < static_cast<std::int64_t>(cols); ++j) {
        double acc = 0.0;
        for (std::size_t i = 0; i < rows; ++i) acc += v[i] * data[i * cols + j];
        out[static_cast<std::size_t>(j)] = acc;
    }
    return out;
}

std::vector<double> left_multiply(const StateVector& v, const Matrix& m) {
    std::vector<double> vv(v.values().begin(), v.values().end());
    return left_multiply(vv, m);
}

Matrix transpose(const Matrix& m) {
    Matrix out(m.cols(), m.rows());
    const std::size_t rows = m.rows(), cols = m.cols();
#pragma omp parallel for if (static_cast<std::int64_t>(rows) * static_cast<std::int64_t>(cols) >= kOmpMinWork)
    for (std::int64_t i = 0; i < static_cast<std::int64_t>(rows); ++i)
        for (std::size_t j = 0; j < cols; ++j) out.at(j, static_cast<std::size_t>(i)) = m.at(static_cast<std::size_t>(i), j);
    return out;
}

StateVector apply_signal(const std::vector<double>& raw, const SignalPolicy& policy,
                         const StateVector& prev) {
    const std::size_t n = raw.size();
    if (prev.size() != n)
        throw engine_error("apply_signal: previous-signal length " + std::to_string(prev.size()) +
                           " does not match raw length " + std::to_string(n));
    if (!policy.thresholds.empty() && policy.thresholds.size() != n)
        throw engine_error("apply_signal: threshold length " + std::to_string(policy.thresholds.size()) +
                           " does not match raw length " + std::to_string(n));
    const Alphabet out_alpha = signal_alphabet(policy.kind);
    if ((policy.kind == SignalKind::BamBinaryMemory || policy.kind == SignalKind::BamBipolarMemory) &&
        prev.alphabet() != out_alpha)
        throw engine_error("apply_signal: previous signal alphabet does not match the policy");

    std::vector<int> out(n, 0);
#pragma omp parallel for if (static_cast<std::int64_t>(n) >= kOmpMinWork)
    for (std::int64_t ii = 0; ii < static_cast<std::int64_t>(n); ++ii) {
        const std::size_t i = static_cast<std::size_t>(ii);
        const double u = policy.thresholds.empty() ? 0.0 : policy.thresholds[i];
        const double x = raw[i];
        int s = 0;
        switch (policy.kind) {
            case SignalKind::BinaryStrict:
                s = x > u ? 1 : 0;
                break;
            case SignalKind::BamBinaryMemory:
                s = x > u ? 1 : (x < u ? 0 : prev[i]);
                break;
            case SignalKind::BamBipolarMemory:
                s = x > u ? 1 : (x < u ? -1 : prev[i]);
                break;
            case SignalKind::Ternary:
                s = x > u ? 1 : (x < u ? -1 : 0);
                break;
        }
        out[i] = s;
    }
    return StateVector(out_alpha, std::move(out));
}

ColumnStats population_stats(const std::vector<double>& column) {
    if (column.empty()) throw engine_error("population_stats: empty column");
    const double n = static_cast<double>(column.size());
    double sum = 0.0;
    for (double v : column) sum += v;
    const double mean = sum / n;
    double ss = 0.0;
    for (double v : column) ss += (v - mean) * (v - mean);
    return ColumnStats{mean, std::sqrt(ss / n)};
}

}  // namespace fuzzmat
