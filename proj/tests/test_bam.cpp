#include <doctest.h>

#include <random>

#include "fuzzmat/bam.hpp"
#include "fuzzmat/reference.hpp"
#include "support/paper_fixtures.hpp"

using namespace fuzzmat;

namespace {

SynapticModel model_from(Matrix m, int scale) {
    SynapticModel model;
    model.matrix = std::move(m);
    model.scale = scale;
    return model;
}

SynapticModel m1() { return model_from(fixtures::migration_bam(), 5); }
SynapticModel m2() { return model_from(fixtures::government_bam(), 5); }

std::vector<int> vi(std::initializer_list<int> v) { return std::vector<int>(v); }

SynapticModel random_model(std::mt19937& rng, std::size_t max_dim = 8) {
    std::uniform_int_distribution<std::size_t> dim(1, max_dim);
    std::uniform_int_distribution<int> w(-5, 5);
    Matrix m(dim(rng), dim(rng));
    for (double& v : m.entries()) v = w(rng);
    return model_from(std::move(m), 5);
}

}  // namespace

TEST_CASE("bam_step worked values") {
    const StateVector none4 = StateVector::all_off(Alphabet::Binary, 4);
    const BamStep fwd = bam_step(m1(), StateVector(Alphabet::Binary, {1, 1, 0, 0, 0, 1}),
                                 Direction::Forward, none4);
    CHECK(fwd.raw == std::vector<double>{9, 6, 11, 7});
    CHECK(fwd.signal.values() == vi({1, 1, 1, 1}));

    const BamStep fwd2 = bam_step(m2(), StateVector(Alphabet::Binary, {0, 1, 0, 0, 1}),
                                  Direction::Forward,
                                  StateVector::all_off(Alphabet::Binary, 6));
    CHECK(fwd2.raw == std::vector<double>{8, 6, 3, 2, 1, 8});

    // zero matrix: every raw is an exact threshold hit, the memory rule holds
    SynapticModel zero = model_from(Matrix(3, 2), 1);
    const StateVector prev(Alphabet::Binary, {1, 0});
    const BamStep z = bam_step(zero, StateVector(Alphabet::Binary, {1, 1, 0}),
                               Direction::Forward, prev);
    CHECK(z.raw == std::vector<double>{0, 0});
    CHECK(z.signal == prev);

    CHECK_THROWS_AS(bam_step(m1(), prev, Direction::Forward, none4), engine_error);
}

TEST_CASE("migration model settles to the all-on pair") {
    const StableResult r = bam_run(m1(), {3, 4, -1, -3, -2, 1});
    CHECK(r.x_signal.values() == vi({1, 1, 1, 1, 1, 1}));
    CHECK(r.y_signal.values() == vi({1, 1, 1, 1}));
    CHECK(r.stabilized_at == 2);
    REQUIRE(r.trajectory.size() >= 3);
    CHECK(r.trajectory[0].raw == std::vector<double>{9, 6, 11, 7});
    CHECK(r.trajectory[1].raw == std::vector<double>{15, 15, 1, 6, 12, 3});
    CHECK(r.trajectory[2].raw == std::vector<double>{10, 12, 20, 10});
}

TEST_CASE("a single strong activation drags every node on") {
    const StableResult r = bam_run(m1(), {0, 0, 0, 0, 0, 4});
    CHECK(r.x_signal.values() == vi({1, 1, 1, 1, 1, 1}));
    CHECK(r.y_signal.values() == vi({1, 1, 1, 1}));
    CHECK(r.stabilized_at == 3);
    REQUIRE(r.trajectory.size() >= 2);
    CHECK(r.trajectory[0].raw == std::vector<double>{0, 1, 2, 0});
    CHECK(r.trajectory[0].signal.values() == vi({0, 1, 1, 0}));
    CHECK(r.trajectory[1].raw == std::vector<double>{6, 8, 2, 6, 7, 3});
}

TEST_CASE("government model keeps one attribute off through the memory rule") {
    const StableResult r = bam_run(m2(), {-3, 4, -2, -1, 3});
    CHECK(r.x_signal.values() == vi({1, 1, 1, 1, 1}));
    CHECK(r.y_signal.values() == vi({1, 1, 0, 1, 1, 1}));
    CHECK(r.stabilized_at == 3);
    REQUIRE(r.trajectory.size() >= 4);
    CHECK(r.trajectory[0].raw == std::vector<double>{8, 6, 3, 2, 1, 8});
    CHECK(r.trajectory[1].raw == std::vector<double>{9, 15, 11, 3, 13});
    // the third step hits threshold 0 exactly at A4 while A3 goes negative
    CHECK(r.trajectory[2].raw == std::vector<double>{14, 16, -1, 0, 4, 18});
    CHECK(r.trajectory[3].raw == std::vector<double>{11, 12, 11, 5, 13});
}

TEST_CASE("field-Y input runs through the transposed model") {
    SynapticModel model = model_from(fixtures::awareness_cetd_bam(), 5);
    const StableResult r = bam_run(transposed(model), {3, -1, 0, -2, 0, 1, -2, 1, 0, 5, 0, 4});
    CHECK(r.x_signal.values() == vi({1, 0, 0, 0, 1, 0, 0, 0, 1, 1, 1, 1}));
    CHECK(r.y_signal.values() == vi({1, 1, 1, 1, 1, 1}));
    REQUIRE(r.trajectory.size() >= 4);
    CHECK(r.trajectory[0].raw == std::vector<double>{5, -2, 1, 1, -3, 3});
    CHECK(r.trajectory[1].raw ==
          std::vector<double>{6, -17, -2, -14, 3, -18, -9, -1, 18, 20, 12, 3});
    CHECK(r.trajectory[2].raw == std::vector<double>{18, 9, 12, 16, 13, 16});
    CHECK(r.trajectory[3].raw ==
          std::vector<double>{6, -22, -7, -22, 6, -28, -16, -6, 25, 28, 14, 5});
}

TEST_CASE("refined-age model matches the serial reference settle") {
    const Matrix m = fixtures::awareness_refined_bam();
    const Matrix mt = ref::transpose(m);
    const std::vector<double> act{3, -1, 0, -2, 0, 1, -2, 1, 0, 5, 0, 4};
    const StableResult r = bam_run(model_from(mt, 5), act);
    const auto [rx, ry] = ref::bam_settle(mt, act, {});
    CHECK(r.x_signal.values() == rx);
    CHECK(r.y_signal.values() == ry);
}

TEST_CASE("the stable pair replays bit-exactly") {
    std::mt19937 rng(71);
    for (int trial = 0; trial < 300; ++trial) {
        const SynapticModel model = random_model(rng);
        std::vector<double> act(model.matrix.rows());
        std::uniform_int_distribution<int> a(-6, 6);
        for (double& v : act) v = a(rng);
        const StableResult r = bam_run(model, act);

        const BamStep fwd = bam_step(model, r.x_signal, Direction::Forward, r.y_signal);
        CHECK(fwd.signal == r.y_signal);
        const BamStep bwd = bam_step(model, fwd.signal, Direction::Backward, r.x_signal);
        CHECK(bwd.signal == r.x_signal);
    }
}

TEST_CASE("energy") {
    const SynapticModel model = m1();
    CHECK(energy(model, StateVector::all_off(Alphabet::Binary, 6),
                 StateVector::all_off(Alphabet::Binary, 4)) == 0.0);
    // negated sum of all 24 entries
    double total = 0.0;
    for (double v : model.matrix.entries()) total += v;
    CHECK(total == 52.0);
    CHECK(energy(model, StateVector(Alphabet::Binary, {1, 1, 1, 1, 1, 1}),
                 StateVector(Alphabet::Binary, {1, 1, 1, 1})) == -52.0);
    CHECK(energy(model, StateVector(Alphabet::Binary, {1, 1, 1, 1, 1, 1}),
                 StateVector(Alphabet::Binary, {1, 1, 1, 1})) ==
          ref::bam_energy(model.matrix, {1, 1, 1, 1, 1, 1}, {1, 1, 1, 1}));
}

TEST_CASE("energy never increases along a trajectory") {
    std::mt19937 rng(73);
    for (int trial = 0; trial < 200; ++trial) {
        const SynapticModel model = random_model(rng);
        std::vector<double> act(model.matrix.rows());
        std::uniform_int_distribution<int> a(-6, 6);
        for (double& v : act) v = a(rng);
        const StableResult r = bam_run(model, act);

        SignalPolicy x_pol{model.policy, {}};
        StateVector x = apply_signal(act, x_pol,
                                     StateVector::all_off(Alphabet::Binary, model.matrix.rows()));
        StateVector y = StateVector::all_off(Alphabet::Binary, model.matrix.cols());
        double e = energy(model, x, y);
        for (const HalfStep& h : r.trajectory) {
            if (h.direction == Direction::Forward)
                y = h.signal;
            else
                x = h.signal;
            const double e2 = energy(model, x, y);
            CHECK(e2 <= e);
            e = e2;
        }
    }
}

TEST_CASE("model validation") {
    SynapticModel bad = model_from(fixtures::migration_bam(), 4);  // entry 5 exceeds scale 4
    CHECK_THROWS_AS(bad.validate(), engine_error);
    SynapticModel strict = m1();
    strict.policy = SignalKind::BinaryStrict;
    CHECK_THROWS_AS(strict.validate(), engine_error);
    SynapticModel thresholds = m1();
    thresholds.x_thresholds = {1, 2};
    CHECK_THROWS_AS(thresholds.validate(), engine_error);
    CHECK_THROWS_AS(bam_run(m1(), {1, 2}), engine_error);
}

TEST_CASE("an explicit initial F_Y signal seeds the memory rule") {
    SynapticModel zero = model_from(Matrix(2, 3), 1);
    const StateVector seed(Alphabet::Binary, {1, 0, 1});
    const StableResult r = bam_run(zero, {1, -1}, seed);
    CHECK(r.y_signal == seed);  // all raws are 0, the seed persists
    CHECK(r.stabilized_at == 0);
}
