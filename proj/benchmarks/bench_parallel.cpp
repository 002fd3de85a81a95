// Times the OpenMP kernels against the serial reference implementation on
// survey-sized synthetic tables and checks both produce identical results.
//
// usage: fuzzmat_bench [rows cols [repeats]]

#include <cstdio>
#include <cstdlib>
#include <random>
#include <vector>

#ifdef _OPENMP
#include <omp.h>
#else
#include <chrono>
#endif

#include "fuzzmat/cetd.hpp"
#include "fuzzmat/fam.hpp"
#include "fuzzmat/matrix.hpp"
#include "fuzzmat/reference.hpp"

using namespace fuzzmat;

namespace {

double now() {
#ifdef _OPENMP
    return omp_get_wtime();
#else
    return std::chrono::duration<double>(
               std::chrono::steady_clock::now().time_since_epoch())
        .count();
#endif
}

template <typename F>
double time_best(int repeats, F&& f) {
    double best = 1e30;
    for (int r = 0; r < repeats; ++r) {
        const double t0 = now();
        f();
        const double dt = now() - t0;
        if (dt < best) best = dt;
    }
    return best;
}

void report(const char* kernel, double serial, double parallel) {
    std::printf("%-22s %10.4f ms %10.4f ms %8.2fx\n", kernel, serial * 1e3, parallel * 1e3,
                serial / parallel);
}

}  // namespace

int main(int argc, char** argv) {
    std::size_t rows = 4000, cols = 256;
    int repeats = 5;
    if (argc >= 3) {
        rows = static_cast<std::size_t>(std::strtoull(argv[1], nullptr, 10));
        cols = static_cast<std::size_t>(std::strtoull(argv[2], nullptr, 10));
    }
    if (argc >= 4) repeats = std::atoi(argv[3]);

    std::mt19937 rng(20260810);
    std::uniform_int_distribution<int> count(0, 50), div(1, 9);

    RawDataTable table;
    table.counts = Matrix(rows, cols);
    for (double& v : table.counts.entries()) v = count(rng);
    for (std::size_t i = 0; i < rows; ++i) {
        table.row_labels.push_back("r" + std::to_string(i));
        table.row_divisors.push_back(div(rng));
    }
    for (std::size_t j = 0; j < cols; ++j) table.col_labels.push_back("c" + std::to_string(j));

#ifdef _OPENMP
    std::printf("table %zux%zu, %d repeats, %d threads\n", rows, cols, repeats,
                omp_get_max_threads());
#else
    std::printf("table %zux%zu, %d repeats, OpenMP disabled\n", rows, cols, repeats);
#endif
    std::printf("%-22s %13s %13s %9s\n", "kernel", "serial", "parallel", "speedup");

    const StageMatrix atd = to_atd(table);
    const std::vector<double> alphas{1.0, 0.7, 0.2};

    Matrix rtd_par, rtd_ser;
    const double t_rtd_ser = time_best(repeats, [&] { rtd_ser = ref::rtd(atd.data, 0.7); });
    const double t_rtd_par = time_best(repeats, [&] { rtd_par = to_rtd(atd, 0.7).data; });
    if (rtd_par != rtd_ser) {
        std::fprintf(stderr, "rtd kernels disagree\n");
        return 1;
    }
    report("rtd threshold", t_rtd_ser, t_rtd_par);

    Matrix cetd_par, cetd_ser;
    const double t_cetd_ser = time_best(repeats, [&] { cetd_ser = ref::cetd(atd.data, alphas); });
    const double t_cetd_par =
        time_best(repeats, [&] { cetd_par = to_cetd(atd, alphas).data; });
    if (cetd_par != cetd_ser) {
        std::fprintf(stderr, "cetd kernels disagree\n");
        return 1;
    }
    report("cetd accumulate", t_cetd_ser, t_cetd_par);

    std::vector<double> rs_par, rs_ser;
    const double t_rs_ser = time_best(repeats, [&] { rs_ser = ref::row_sums(cetd_ser); });
    const double t_rs_par = time_best(repeats, [&] { rs_par = row_sums(cetd_par); });
    if (rs_par != rs_ser) {
        std::fprintf(stderr, "row_sums kernels disagree\n");
        return 1;
    }
    report("row sums", t_rs_ser, t_rs_par);

    std::vector<double> v(rows);
    std::uniform_int_distribution<int> weight(-3, 3);
    for (double& x : v) x = weight(rng);
    std::vector<double> mv_par, mv_ser;
    const double t_mv_ser =
        time_best(repeats, [&] { mv_ser = ref::left_multiply(v, atd.data); });
    const double t_mv_par = time_best(repeats, [&] { mv_par = left_multiply(v, atd.data); });
    if (mv_par != mv_ser) {
        std::fprintf(stderr, "left_multiply kernels disagree\n");
        return 1;
    }
    report("left multiply", t_mv_ser, t_mv_par);

    Matrix rel(rows, cols);
    std::uniform_real_distribution<double> unit(0.0, 1.0);
    for (double& x : rel.entries()) x = unit(rng);
    FitVector fit;
    fit.values.resize(cols);
    for (double& x : fit.values) x = unit(rng);
    const FuzzyRelation relation{rel, {}, {}};
    std::vector<double> fam_ser;
    FitVector fam_par;
    const double t_fam_ser =
        time_best(repeats, [&] { fam_ser = ref::max_min_backward(rel, fit.values); });
    const double t_fam_par =
        time_best(repeats, [&] { fam_par = fam_backward(relation, fit); });
    if (fam_par.values != fam_ser) {
        std::fprintf(stderr, "max-min kernels disagree\n");
        return 1;
    }
    report("max-min backward", t_fam_ser, t_fam_par);

    return 0;
}
