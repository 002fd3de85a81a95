#include "fuzzmat/frm.hpp"

#include <algorithm>
#include <cstdlib>
#include <map>
#include <string>

namespace fuzzmat {

namespace {

std::size_t side_size(const RelationalModel& model, Side side) {
    return side == Side::Domain ? model.matrix.rows() : model.matrix.cols();
}

// Appendix-style additive update: add the reference vector where the sum
// stays inside [-1, 1], otherwise keep the computed signal.
StateVector fold_update(const StateVector& state, const StateVector& reference) {
    std::vector<int> v = state.values();
    for (std::size_t i = 0; i < v.size(); ++i) {
        const int sum = v[i] + reference[i];
        if (std::abs(sum) <= 1) v[i] = sum;
    }
    Alphabet a = state.alphabet();
    if (a == Alphabet::Binary)
        for (int x : v)
            if (x < 0) a = Alphabet::Ternary;
    return StateVector(a, std::move(v));
}

StateVector clamp_on(const StateVector& state, const StateVector& clamp) {
    std::vector<int> v = state.values();
    Alphabet a = state.alphabet();
    for (std::size_t i = 0; i < v.size(); ++i)
        if (clamp[i] != 0) v[i] = 1;
    return StateVector(a, std::move(v));
}

}  // namespace

void RelationalModel::validate() const {
    if (domain_labels.size() != matrix.rows())
        throw engine_error("relational model has " + std::to_string(matrix.rows()) +
                           " domain rows but " + std::to_string(domain_labels.size()) + " labels");
    if (range_labels.size() != matrix.cols())
        throw engine_error("relational model has " + std::to_string(matrix.cols()) +
                           " range columns but " + std::to_string(range_labels.size()) + " labels");
    for (double v : matrix.entries())
        if (v != -1.0 && v != 0.0 && v != 1.0)
            throw engine_error("relational matrix entry " + std::to_string(v) +
                               " is outside {-1, 0, 1}");
}

StateVector frm_step(const RelationalModel& model, const StateVector& state, Side side,
                     const SignalPolicy& policy, const std::optional<StateVector>& clamp) {
    const std::size_t from = side_size(model, side);
    const std::size_t to = side_size(model, side == Side::Domain ? Side::Range : Side::Domain);
    if (state.size() != from)
        throw engine_error("frm_step: state length " + std::to_string(state.size()) +
                           " does not match " + std::to_string(from) + " nodes on the source side");
    std::vector<double> raw = side == Side::Domain ? left_multiply(state, model.matrix)
                                                   : left_multiply(state, transpose(model.matrix));
    StateVector out =
        apply_signal(raw, policy, StateVector::all_off(signal_alphabet(policy.kind), to));
    if (clamp) {
        if (clamp->size() != to)
            throw engine_error("frm_step: clamp length " + std::to_string(clamp->size()) +
                               " does not match " + std::to_string(to) + " target nodes");
        out = clamp_on(out, *clamp);
    }
    return out;
}

HiddenPattern hidden_pattern(const RelationalModel& model, const StateVector& initial, Side side,
                             const SignalPolicy& policy, UpdateMode mode) {
    model.validate();
    const std::size_t n = model.matrix.rows(), m = model.matrix.cols();
    if (n + m > 30)
        throw engine_error("hidden_pattern: model with " + std::to_string(n + m) +
                           " nodes exceeds the supported limit of 30");
    if (initial.size() != side_size(model, side))
        throw engine_error("hidden_pattern: initial state length " + std::to_string(initial.size()) +
                           " does not match the input side");
    if (std::all_of(initial.values().begin(), initial.values().end(),
                    [](int v) { return v == 0; }))
        throw engine_error("hidden_pattern: no node of the initial vector is switched on");

    const Side other = side == Side::Domain ? Side::Range : Side::Domain;
    const Alphabet alpha = signal_alphabet(policy.kind);

    StateVector input_state = mode == UpdateMode::InputSide ? clamp_on(initial, initial) : initial;
    StateVector other_state = StateVector::all_off(alpha, side_size(model, other));
    std::optional<StateVector> first_output;  // BothSides folds later visits with this

    auto make_pair = [&]() -> HiddenPattern::Pair {
        return side == Side::Domain ? HiddenPattern::Pair{input_state, other_state}
                                    : HiddenPattern::Pair{other_state, input_state};
    };

    HiddenPattern result;
    result.trajectory.push_back(make_pair());

    // Cycle detection keys on (pair, which side steps next); the dynamics
    // continue differently from the same pair at different parity.
    std::map<std::vector<int>, std::size_t> seen;
    auto make_key = [&](const HiddenPattern::Pair& p, bool input_next) {
        std::vector<int> key = p.first.values();
        key.push_back(9);
        key.insert(key.end(), p.second.values().begin(), p.second.values().end());
        key.push_back(input_next ? 0 : 1);
        return key;
    };
    // Pigeonhole guarantees repetition well inside this; it is a diagnostic.
    constexpr std::size_t kMaxSteps = std::size_t{1} << 22;

    std::size_t step = 0;
    HiddenPattern::Pair prev_pair = make_pair();
    bool at_input = true;
    seen[make_key(prev_pair, at_input)] = 0;
    while (true) {
        ++step;
        if (step > kMaxSteps)
            throw engine_error("hidden_pattern: no repetition within the state-space bound");
        if (at_input) {
            StateVector out = frm_step(model, input_state, side, policy);
            if (mode == UpdateMode::BothSides) {
                if (!first_output)
                    first_output = out;
                else
                    out = fold_update(out, *first_output);
            }
            other_state = std::move(out);
        } else {
            StateVector out = frm_step(model, other_state, other, policy);
            input_state = mode == UpdateMode::InputSide ? clamp_on(out, initial)
                                                        : fold_update(out, initial);
        }
        at_input = !at_input;
        HiddenPattern::Pair pair = make_pair();
        result.trajectory.push_back(pair);
        if (pair == prev_pair) {
            result.kind = HiddenPattern::Kind::FixedPoint;
            break;
        }
        std::vector<int> key = make_key(pair, at_input);
        auto it = seen.find(key);
        if (it != seen.end()) {
            result.kind = HiddenPattern::Kind::LimitCycle;
            result.cycle.assign(result.trajectory.begin() + static_cast<std::ptrdiff_t>(it->second),
                                result.trajectory.end() - 1);
            break;
        }
        seen[key] = step;
        prev_pair = pair;
    }

    result.steps = step;
    HiddenPattern::Pair terminal = result.trajectory.back();
    result.domain_state = terminal.first;
    result.range_state = terminal.second;
    std::size_t settled = result.trajectory.size() - 1;
    while (settled > 0 && result.trajectory[settled - 1] == terminal) --settled;
    result.settled_after = settled;
    return result;
}

Matrix combine(const std::vector<RelationalModel>& models) {
    if (models.empty()) throw engine_error("combine: no models given");
    const RelationalModel& first = models.front();
    Matrix acc(first.matrix.rows(), first.matrix.cols());
    for (const RelationalModel& m : models) {
        m.validate();
        if (m.matrix.rows() != first.matrix.rows() || m.matrix.cols() != first.matrix.cols())
            throw engine_error("combine: expert matrices have mismatched dimensions");
        if (m.domain_labels != first.domain_labels || m.range_labels != first.range_labels)
            throw engine_error("combine: expert matrices have mismatched node labels");
        for (std::size_t k = 0; k < acc.entries().size(); ++k)
            acc.entries()[k] += m.matrix.entries()[k];
    }
    return acc;
}

}  // namespace fuzzmat
