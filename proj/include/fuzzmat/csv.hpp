#pragma once

#include <string>
#include <variant>
#include <vector>

#include "fuzzmat/cetd.hpp"
#include "fuzzmat/matrix.hpp"
#include "fuzzmat/transforms.hpp"

namespace fuzzmat {

/// A labeled (or bare, when the file has no header) numeric matrix.
struct LabeledMatrix {
    std::vector<std::string> row_labels;  // empty for bare matrices
    std::vector<std::string> col_labels;
    Matrix matrix;
};

using TableFile = std::variant<RawDataTable, LabeledMatrix>;

/// Load a CSV (or TSV, as written by the reports) file.
///
/// Header `label,divisor,<attr...>` yields a RawDataTable, header
/// `label,<col...>` a labeled matrix, and a file whose first cell is
/// numeric a bare matrix. Ragged rows, non-numeric cells and duplicate
/// labels are rejected with their coordinates.
TableFile load_table(const std::string& path);

/// Same parser over an in-memory document (used by tests and round trips).
TableFile parse_table(const std::string& text, const std::string& origin = "<memory>");

RawDataTable require_table(TableFile file, const std::string& origin);
LabeledMatrix require_matrix(TableFile file, const std::string& origin);

/// Registry file: header `from,to`, one transform edge per row.
TransformRegistry load_registry(const std::string& path);

}  // namespace fuzzmat
