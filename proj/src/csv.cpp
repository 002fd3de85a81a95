#include "fuzzmat/csv.hpp"

#include <cstdlib>
#include <fstream>
#include <set>
#include <sstream>

namespace fuzzmat {

namespace {

std::string trim(const std::string& s) {
    std::size_t a = s.find_first_not_of(" \t\r");
    if (a == std::string::npos) return "";
    std::size_t b = s.find_last_not_of(" \t\r");
    return s.substr(a, b - a + 1);
}

std::vector<std::string> split(const std::string& line, char delim) {
    std::vector<std::string> out;
    std::string field;
    std::istringstream in(line);
    while (std::getline(in, field, delim)) out.push_back(trim(field));
    if (!line.empty() && line.back() == delim) out.push_back("");
    return out;
}

double parse_number(const std::string& field, const std::string& origin, std::size_t row,
                    std::size_t col) {
    const std::string t = trim(field);
    if (!t.empty()) {
        char* end = nullptr;
        const double v = std::strtod(t.c_str(), &end);
        if (end == t.c_str() + t.size()) return v;
    }
    throw input_error(origin + ": row " + std::to_string(row + 1) + ", column " +
                      std::to_string(col + 1) + ": non-numeric cell '" + field + "'");
}

bool looks_numeric(const std::string& field) {
    const std::string t = trim(field);
    if (t.empty()) return false;
    char* end = nullptr;
    std::strtod(t.c_str(), &end);
    return end == t.c_str() + t.size();
}

void check_unique(const std::vector<std::string>& labels, const std::string& origin,
                  const char* what) {
    std::set<std::string> seen;
    for (std::size_t i = 0; i < labels.size(); ++i)
        if (!seen.insert(labels[i]).second)
            throw input_error(origin + ": duplicate " + what + " label '" + labels[i] + "' at " +
                              what + " " + std::to_string(i + 1));
}

Matrix build_matrix(const std::vector<std::vector<double>>& rows, const std::string& origin) {
    if (rows.empty() || rows.front().empty()) throw input_error(origin + ": no data rows");
    Matrix m(rows.size(), rows.front().size());
    for (std::size_t i = 0; i < rows.size(); ++i)
        for (std::size_t j = 0; j < rows[i].size(); ++j) m.at(i, j) = rows[i][j];
    return m;
}

}  // namespace

TableFile parse_table(const std::string& text, const std::string& origin) {
    std::vector<std::string> lines;
    {
        std::istringstream in(text);
        std::string line;
        while (std::getline(in, line)) {
            line = trim(line);
            if (!line.empty()) lines.push_back(line);
        }
    }
    if (lines.empty()) throw input_error(origin + ": empty file");

    const char delim = lines.front().find('\t') != std::string::npos ? '\t' : ',';
    std::vector<std::string> header = split(lines.front(), delim);
    const bool has_header = !header.empty() && !looks_numeric(header.front());

    if (!has_header) {
        // bare numeric matrix, no labels
        std::vector<std::vector<double>> rows;
        for (std::size_t li = 0; li < lines.size(); ++li) {
            std::vector<std::string> fields = split(lines[li], delim);
            if (li > 0 && fields.size() != rows.front().size())
                throw input_error(origin + ": row " + std::to_string(li + 1) + ": expected " +
                                  std::to_string(rows.front().size()) + " fields, got " +
                                  std::to_string(fields.size()));
            std::vector<double> row;
            for (std::size_t j = 0; j < fields.size(); ++j)
                row.push_back(parse_number(fields[j], origin, li, j));
            rows.push_back(std::move(row));
        }
        return LabeledMatrix{{}, {}, build_matrix(rows, origin)};
    }

    if (trim(header.front()) != "label")
        throw input_error(origin + ": header must start with 'label', got '" + header.front() +
                          "'");
    const bool has_divisor = header.size() >= 2 && trim(header[1]) == "divisor";
    const std::size_t first_col = has_divisor ? 2 : 1;
    if (header.size() <= first_col) throw input_error(origin + ": header declares no data columns");
    std::vector<std::string> col_labels(header.begin() + static_cast<std::ptrdiff_t>(first_col),
                                        header.end());
    check_unique(col_labels, origin, "column");

    std::vector<std::string> row_labels;
    std::vector<double> divisors;
    std::vector<std::vector<double>> rows;
    for (std::size_t li = 1; li < lines.size(); ++li) {
        std::vector<std::string> fields = split(lines[li], delim);
        if (fields.size() != header.size())
            throw input_error(origin + ": row " + std::to_string(li + 1) + ": expected " +
                              std::to_string(header.size()) + " fields, got " +
                              std::to_string(fields.size()));
        row_labels.push_back(fields[0]);
        if (has_divisor) divisors.push_back(parse_number(fields[1], origin, li, 1));
        std::vector<double> row;
        for (std::size_t j = first_col; j < fields.size(); ++j)
            row.push_back(parse_number(fields[j], origin, li, j));
        rows.push_back(std::move(row));
    }
    check_unique(row_labels, origin, "row");
    Matrix m = build_matrix(rows, origin);

    if (has_divisor) {
        RawDataTable table{std::move(row_labels), std::move(divisors), std::move(col_labels),
                           std::move(m)};
        table.validate();
        return table;
    }
    return LabeledMatrix{std::move(row_labels), std::move(col_labels), std::move(m)};
}

TableFile load_table(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw input_error(path + ": cannot open file");
    std::ostringstream buf;
    buf << in.rdbuf();
    return parse_table(buf.str(), path);
}

RawDataTable require_table(TableFile file, const std::string& origin) {
    if (auto* t = std::get_if<RawDataTable>(&file)) return std::move(*t);
    throw input_error(origin + ": expected a raw data table with a 'divisor' column");
}

LabeledMatrix require_matrix(TableFile file, const std::string& origin) {
    if (auto* m = std::get_if<LabeledMatrix>(&file)) return std::move(*m);
    throw input_error(origin + ": expected a plain matrix file, found a divisor column");
}

TransformRegistry load_registry(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw input_error(path + ": cannot open file");
    TransformRegistry reg;
    std::string line;
    std::size_t li = 0;
    bool saw_header = false;
    while (std::getline(in, line)) {
        ++li;
        line = trim(line);
        if (line.empty() || line.front() == '#') continue;
        const char delim = line.find('\t') != std::string::npos ? '\t' : ',';
        std::vector<std::string> fields = split(line, delim);
        if (!saw_header && !fields.empty() && trim(fields[0]) == "from") {
            saw_header = true;
            continue;
        }
        if (fields.size() < 2)
            throw input_error(path + ": row " + std::to_string(li) +
                              ": expected 'from,to', got '" + line + "'");
        try {
            reg.add(model_kind_from_string(fields[0]), model_kind_from_string(fields[1]),
                    fields[0] + "->" + fields[1]);
        } catch (const engine_error& e) {
            throw input_error(path + ": row " + std::to_string(li) + ": " + e.what());
        }
    }
    if (reg.edges().empty()) throw input_error(path + ": registry declares no transforms");
    return reg;
}

}  // namespace fuzzmat
