#pragma once

#include <string>
#include <vector>

#include "fuzzmat/matrix.hpp"

namespace fuzzmat {

/// %.6g formatting used everywhere a real is serialized.
std::string format_real(double v);

/// Integer stages print as integers, real stages with 6 significant digits.
std::string format_entry(double v, bool integral);

std::string join_reals(const std::vector<double>& v, const std::string& sep = ", ");

/// Tab-separated serialization of a (possibly labeled) matrix; reloadable
/// through load_table.
std::string matrix_tsv(const Matrix& m, const std::vector<std::string>& row_labels,
                       const std::vector<std::string>& col_labels, bool integral);

/// Builder for the single structured-text report a job emits: key/value
/// lines plus embedded matrices, deterministic by construction.
class Report {
public:
    void kv(const std::string& key, const std::string& value);
    void kv(const std::string& key, double value);
    void section(const std::string& name);
    void note(const std::string& text);
    void matrix(const std::string& title, const Matrix& m,
                const std::vector<std::string>& row_labels,
                const std::vector<std::string>& col_labels, bool integral);
    void vector_line(const std::string& key, const std::vector<double>& v, bool integral);
    void raw(const std::string& text);

    const std::string& text() const { return text_; }

private:
    std::string text_;
};

}  // namespace fuzzmat
