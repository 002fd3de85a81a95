#pragma once

#include <cstddef>
#include <initializer_list>
#include <vector>

#include "fuzzmat/errors.hpp"

namespace fuzzmat {

/// Dense row-major matrix. Entries are doubles throughout; the discrete
/// models (FRM, BAM, RTD, CETD) only ever store small integers in them,
/// so all of their arithmetic stays exact.
class Matrix {
public:
    Matrix() = default;
    Matrix(std::size_t rows, std::size_t cols, double fill = 0.0);
    Matrix(std::initializer_list<std::initializer_list<double>> rows);

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }

    double& at(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
    double at(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

    const std::vector<double>& entries() const { return data_; }
    std::vector<double>& entries() { return data_; }

    bool operator==(const Matrix& other) const {
        return rows_ == other.rows_ && cols_ == other.cols_ && data_ == other.data_;
    }
    bool operator!=(const Matrix& other) const { return !(*this == other); }

    /// True when every entry stores an integral value.
    bool is_integral() const;

private:
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<double> data_;
};

/// Alphabet of a state vector. Binary is the paper's default for FRM and
/// BAM fixed points; bipolar replaces 0 with -1; ternary allows all three.
enum class Alphabet { Binary, Ternary, Bipolar };

/// On/off (or signed) node states for the discrete dynamical systems.
class StateVector {
public:
    StateVector() = default;
    StateVector(Alphabet alphabet, std::vector<int> values);

    /// All-off vector: 0 for binary/ternary, -1 for bipolar.
    static StateVector all_off(Alphabet alphabet, std::size_t n);

    Alphabet alphabet() const { return alphabet_; }
    std::size_t size() const { return values_.size(); }
    int operator[](std::size_t i) const { return values_[i]; }
    const std::vector<int>& values() const { return values_; }

    bool operator==(const StateVector& other) const {
        return alphabet_ == other.alphabet_ && values_ == other.values_;
    }
    bool operator!=(const StateVector& other) const { return !(*this == other); }

private:
    Alphabet alphabet_ = Alphabet::Binary;
    std::vector<int> values_;
};

/// Per-coordinate threshold (signal) functions shared by all engines.
///
/// BamBinaryMemory / BamBipolarMemory keep the previous signal at an exact
/// threshold hit; BinaryStrict maps it to off; Ternary takes the sign.
enum class SignalKind { BinaryStrict, BamBinaryMemory, BamBipolarMemory, Ternary };

struct SignalPolicy {
    SignalKind kind = SignalKind::BinaryStrict;
    // Empty means all-zero thresholds; otherwise the length must match the
    // vector the policy is applied to.
    std::vector<double> thresholds;
};

/// Alphabet of the signals a policy emits.
Alphabet signal_alphabet(SignalKind kind);

/// v * M for a length-rows vector; result has length cols.
std::vector<double> left_multiply(const std::vector<double>& v, const Matrix& m);
std::vector<double> left_multiply(const StateVector& v, const Matrix& m);

Matrix transpose(const Matrix& m);

/// Threshold a raw activation vector into a signal vector. `prev` supplies
/// the memory rule's previous signals and must share the policy's alphabet.
StateVector apply_signal(const std::vector<double>& raw, const SignalPolicy& policy,
                         const StateVector& prev);

struct ColumnStats {
    double mean = 0.0;
    double sd = 0.0;  // population form: divisor n
};

ColumnStats population_stats(const std::vector<double>& column);

}  // namespace fuzzmat
