#include "fuzzmat/reference.hpp"

#include <cmath>
#include <stdexcept>

namespace fuzzmat::ref {

std::vector<double> left_multiply(const std::vector<double>& v, const Matrix& m) {
    std::vector<double> out(m.cols(), 0.0);
    for (std::size_t i = 0; i < m.rows(); ++i)
        for (std::size_t j = 0; j < m.cols(); ++j) out[j] += v[i] * m.at(i, j);
    return out;
}

Matrix transpose(const Matrix& m) {
    Matrix out(m.cols(), m.rows());
    for (std::size_t j = 0; j < m.cols(); ++j)
        for (std::size_t i = 0; i < m.rows(); ++i) out.at(j, i) = m.at(i, j);
    return out;
}

std::vector<double> row_sums(const Matrix& m) {
    std::vector<double> out(m.rows(), 0.0);
    for (std::size_t i = 0; i < m.rows(); ++i)
        for (std::size_t j = 0; j < m.cols(); ++j) out[i] += m.at(i, j);
    return out;
}

Matrix atd(const Matrix& counts, const std::vector<double>& divisors) {
    Matrix out(counts.rows(), counts.cols());
    for (std::size_t i = 0; i < counts.rows(); ++i)
        for (std::size_t j = 0; j < counts.cols(); ++j)
            out.at(i, j) = divisors[i] == 0.0 ? 0.0 : counts.at(i, j) / divisors[i];
    return out;
}

namespace {

double col_mean(const Matrix& m, std::size_t j) {
    double s = 0.0;
    for (std::size_t i = 0; i < m.rows(); ++i) s += m.at(i, j);
    return s / static_cast<double>(m.rows());
}

double col_sd(const Matrix& m, std::size_t j) {
    const double mu = col_mean(m, j);
    double ss = 0.0;
    for (std::size_t i = 0; i < m.rows(); ++i) ss += (m.at(i, j) - mu) * (m.at(i, j) - mu);
    return std::sqrt(ss / static_cast<double>(m.rows()));
}

}  // namespace

Matrix rtd(const Matrix& a, double alpha) {
    Matrix out(a.rows(), a.cols());
    for (std::size_t j = 0; j < a.cols(); ++j) {
        const double mu = col_mean(a, j);
        const double sd = col_sd(a, j);
        if (sd == 0.0) continue;
        for (std::size_t i = 0; i < a.rows(); ++i) {
            const double v = a.at(i, j);
            if (v <= mu - alpha * sd)
                out.at(i, j) = -1.0;
            else if (v >= mu + alpha * sd)
                out.at(i, j) = 1.0;
        }
    }
    return out;
}

Matrix cetd(const Matrix& a, const std::vector<double>& alphas) {
    Matrix out(a.rows(), a.cols());
    for (double alpha : alphas) {
        Matrix e = rtd(a, alpha);
        for (std::size_t k = 0; k < out.entries().size(); ++k)
            out.entries()[k] += e.entries()[k];
    }
    return out;
}

Matrix rtd_cellwise(const Matrix& a, double alpha) {
    Matrix out(a.rows(), a.cols());
    for (std::size_t i = 0; i < a.rows(); ++i) {
        for (std::size_t j = 0; j < a.cols(); ++j) {
            const double v = a.at(i, j);
            // every condition is re-derived from scratch for this one cell
            if (col_sd(a, j) == 0.0) {
                out.at(i, j) = 0.0;
                continue;
            }
            const bool low = v <= col_mean(a, j) - alpha * col_sd(a, j);
            const bool high = v >= col_mean(a, j) + alpha * col_sd(a, j);
            const bool mid = v > col_mean(a, j) - alpha * col_sd(a, j) &&
                             v < col_mean(a, j) + alpha * col_sd(a, j);
            if (low + high + mid != 1) throw std::logic_error("rtd_cellwise: branches overlap");
            out.at(i, j) = low ? -1.0 : (high ? 1.0 : 0.0);
        }
    }
    return out;
}

std::vector<double> max_min_backward(const Matrix& m, const std::vector<double>& b) {
    std::vector<double> a(m.rows(), 0.0);
    for (std::size_t i = 0; i < m.rows(); ++i)
        for (std::size_t j = 0; j < m.cols(); ++j) {
            const double v = m.at(i, j) < b[j] ? m.at(i, j) : b[j];
            if (v > a[i]) a[i] = v;
        }
    return a;
}

std::vector<double> max_min_forward(const std::vector<double>& a, const Matrix& m) {
    std::vector<double> b(m.cols(), 0.0);
    for (std::size_t j = 0; j < m.cols(); ++j)
        for (std::size_t i = 0; i < m.rows(); ++i) {
            const double v = a[i] < m.at(i, j) ? a[i] : m.at(i, j);
            if (v > b[j]) b[j] = v;
        }
    return b;
}

std::pair<std::vector<int>, std::vector<int>> bam_settle(const Matrix& m,
                                                         const std::vector<double>& x_activation,
                                                         const std::vector<int>& prev_y) {
    const std::size_t n = m.rows(), p = m.cols();
    std::vector<int> x(n, 0), y = prev_y.empty() ? std::vector<int>(p, 0) : prev_y;
    for (std::size_t i = 0; i < n; ++i) x[i] = x_activation[i] > 0.0 ? 1 : 0;
    while (true) {
        bool changed = false;
        std::vector<int> ny(p, 0);
        for (std::size_t j = 0; j < p; ++j) {
            double s = 0.0;
            for (std::size_t i = 0; i < n; ++i) s += x[i] * m.at(i, j);
            ny[j] = s > 0.0 ? 1 : (s < 0.0 ? 0 : y[j]);
            if (ny[j] != y[j]) changed = true;
        }
        y = ny;
        std::vector<int> nx(n, 0);
        for (std::size_t i = 0; i < n; ++i) {
            double s = 0.0;
            for (std::size_t j = 0; j < p; ++j) s += y[j] * m.at(i, j);
            nx[i] = s > 0.0 ? 1 : (s < 0.0 ? 0 : x[i]);
            if (nx[i] != x[i]) changed = true;
        }
        x = nx;
        if (!changed) return {x, y};
    }
}

double bam_energy(const Matrix& m, const std::vector<int>& x, const std::vector<int>& y) {
    double e = 0.0;
    for (std::size_t i = 0; i < m.rows(); ++i)
        for (std::size_t j = 0; j < m.cols(); ++j) e -= x[i] * m.at(i, j) * y[j];
    return e;
}

}  // namespace fuzzmat::ref
