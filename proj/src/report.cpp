#include "fuzzmat/report.hpp"

#include <cstdio>
#include <sstream>

namespace fuzzmat {

std::string format_real(double v) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.6g", v);
    return buf;
}

std::string format_entry(double v, bool integral) {
    if (integral) {
        char buf[32];
        std::snprintf(buf, sizeof buf, "%lld", static_cast<long long>(v));
        return buf;
    }
    return format_real(v);
}

std::string join_reals(const std::vector<double>& v, const std::string& sep) {
    std::string out;
    for (std::size_t i = 0; i < v.size(); ++i) {
        if (i) out += sep;
        out += format_real(v[i]);
    }
    return out;
}

std::string matrix_tsv(const Matrix& m, const std::vector<std::string>& row_labels,
                       const std::vector<std::string>& col_labels, bool integral) {
    std::ostringstream out;
    const bool labeled = !row_labels.empty();
    if (labeled) {
        out << "label";
        for (std::size_t j = 0; j < m.cols(); ++j)
            out << '\t' << (j < col_labels.size() ? col_labels[j] : "C" + std::to_string(j + 1));
        out << '\n';
    }
    for (std::size_t i = 0; i < m.rows(); ++i) {
        if (labeled) out << row_labels[i] << '\t';
        for (std::size_t j = 0; j < m.cols(); ++j) {
            if (j) out << '\t';
            out << format_entry(m.at(i, j), integral);
        }
        out << '\n';
    }
    return out.str();
}

void Report::kv(const std::string& key, const std::string& value) {
    text_ += key + ": " + value + "\n";
}

void Report::kv(const std::string& key, double value) { kv(key, format_real(value)); }

void Report::section(const std::string& name) { text_ += "\n[" + name + "]\n"; }

void Report::note(const std::string& text) { text_ += "note: " + text + "\n"; }

void Report::matrix(const std::string& title, const Matrix& m,
                    const std::vector<std::string>& row_labels,
                    const std::vector<std::string>& col_labels, bool integral) {
    text_ += title + " (" + std::to_string(m.rows()) + "x" + std::to_string(m.cols()) + "):\n";
    text_ += matrix_tsv(m, row_labels, col_labels, integral);
}

void Report::vector_line(const std::string& key, const std::vector<double>& v, bool integral) {
    std::string line;
    for (std::size_t i = 0; i < v.size(); ++i) {
        if (i) line += ", ";
        line += format_entry(v[i], integral);
    }
    kv(key, line);
}

void Report::raw(const std::string& text) { text_ += text; }

}  // namespace fuzzmat
