#include "fuzzmat/cetd.hpp"

#include <cstdint>
#include <string>

namespace fuzzmat {

namespace {

constexpr std::int64_t kOmpMinWork = 1 << 14;

void require_stage(const StageMatrix& m, Stage want, const char* op) {
    if (m.stage != want)
        throw engine_error(std::string(op) + ": input matrix is not at the expected pipeline stage");
}

void check_alpha(double alpha) {
    if (!(alpha >= 0.0 && alpha <= 1.0))
        throw engine_error("alpha " + std::to_string(alpha) + " is outside [0, 1]");
}

}  // namespace

void RawDataTable::validate() const {
    if (row_divisors.size() != counts.rows())
        throw input_error("table has " + std::to_string(counts.rows()) + " rows but " +
                          std::to_string(row_divisors.size()) + " divisors");
    if (row_labels.size() != counts.rows())
        throw input_error("table has " + std::to_string(counts.rows()) + " rows but " +
                          std::to_string(row_labels.size()) + " row labels");
    if (col_labels.size() != counts.cols())
        throw input_error("table has " + std::to_string(counts.cols()) + " columns but " +
                          std::to_string(col_labels.size()) + " column labels");
    for (double d : row_divisors)
        if (d < 0.0) throw input_error("negative row divisor " + std::to_string(d));
    for (double v : counts.entries())
        if (v < 0.0) throw input_error("negative count " + std::to_string(v));
}

StageMatrix to_atd(const RawDataTable& table) {
    table.validate();
    const std::size_t rows = table.counts.rows(), cols = table.counts.cols();
    Matrix out(rows, cols);
    for (std::size_t i = 0; i < rows; ++i) {
        const double d = table.row_divisors[i];
        if (d == 0.0) continue;  // empty cohort: row stays zero
        for (std::size_t j = 0; j < cols; ++j) out.at(i, j) = table.counts.at(i, j) / d;
    }
    return StageMatrix{Stage::Atd, std::nullopt, {}, std::move(out), table.row_labels,
                       table.col_labels};
}

StageMatrix to_rtd(const StageMatrix& atd, double alpha) {
    require_stage(atd, Stage::Atd, "to_rtd");
    check_alpha(alpha);
    const std::size_t rows = atd.data.rows(), cols = atd.data.cols();
    Matrix out(rows, cols);
#pragma omp parallel for if (static_cast<std::int64_t>(rows) * static_cast<std::int64_t>(cols) >= kOmpMinWork)
    for (std::int64_t jj = 0; jj < static_cast<std::int64_t>(cols); ++jj) {
        const std::size_t j = static_cast<std::size_t>(jj);
        std::vector<double> col(rows);
        for (std::size_t i = 0; i < rows; ++i) col[i] = atd.data.at(i, j);
        const ColumnStats st = population_stats(col);
        if (st.sd == 0.0) continue;  // no variation, no signal
        const double lo = st.mean - alpha * st.sd;
        const double hi = st.mean + alpha * st.sd;
        for (std::size_t i = 0; i < rows; ++i) {
            const double a = col[i];
            out.at(i, j) = a <= lo ? -1.0 : (a >= hi ? 1.0 : 0.0);
        }
    }
    return StageMatrix{Stage::Rtd, alpha, {}, std::move(out), atd.row_labels, atd.col_labels};
}

StageMatrix to_cetd(const StageMatrix& atd, const std::vector<double>& alphas) {
    require_stage(atd, Stage::Atd, "to_cetd");
    if (alphas.empty()) throw engine_error("to_cetd: empty alpha list");
    for (double a : alphas) check_alpha(a);
    Matrix acc(atd.data.rows(), atd.data.cols());
    for (double a : alphas) {
        const StageMatrix rtd = to_rtd(atd, a);
        for (std::size_t k = 0; k < acc.entries().size(); ++k)
            acc.entries()[k] += rtd.data.entries()[k];
    }
    return StageMatrix{Stage::Cetd, std::nullopt, alphas, std::move(acc), atd.row_labels,
                       atd.col_labels};
}

std::vector<double> row_sums(const Matrix& m) {
    const std::size_t rows = m.rows(), cols = m.cols();
    std::vector<double> out(rows, 0.0);
#pragma omp parallel for if (static_cast<std::int64_t>(rows) * static_cast<std::int64_t>(cols) >= kOmpMinWork)
    for (std::int64_t i = 0; i < static_cast<std::int64_t>(rows); ++i) {
        double acc = 0.0;
        for (std::size_t j = 0; j < cols; ++j) acc += m.at(static_cast<std::size_t>(i), j);
        out[static_cast<std::size_t>(i)] = acc;
    }
    return out;
}

std::vector<double> row_sums(const StageMatrix& m) { return row_sums(m.data); }

}  // namespace fuzzmat
