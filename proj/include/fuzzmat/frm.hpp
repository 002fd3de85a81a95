#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "fuzzmat/matrix.hpp"

namespace fuzzmat {

/// A fuzzy relational map: a rectangular causal model between disjoint
/// domain and range node sets with edge weights in {-1, 0, 1}.
struct RelationalModel {
    std::vector<std::string> domain_labels;
    std::vector<std::string> range_labels;
    Matrix matrix;  // domain x range

    void validate() const;
};

enum class Side { Domain, Range };

/// How the iteration folds the switched-on input back into later states.
/// InputSide clamps the initially-on input-side coordinates to 1 (the
/// hand-computation rule used throughout the worked models). BothSides is
/// the additive saturating update the FRM reference program applies to both
/// sides, kept for differential comparison.
enum class UpdateMode { InputSide, BothSides };

/// One propagation half-step: multiply across the relational matrix
/// (transposed when stepping from the range side), threshold, then force
/// any clamped coordinates on the target side to 1.
StateVector frm_step(const RelationalModel& model, const StateVector& state, Side side,
                     const SignalPolicy& policy,
                     const std::optional<StateVector>& clamp = std::nullopt);

/// Terminal object of the iteration.
struct HiddenPattern {
    enum class Kind { FixedPoint, LimitCycle };
    using Pair = std::pair<StateVector, StateVector>;  // (domain_state, range_state)

    Kind kind = Kind::FixedPoint;
    StateVector domain_state;
    StateVector range_state;
    std::vector<Pair> cycle;       // repeating segment, for limit cycles
    std::vector<Pair> trajectory;  // every pair visited, in order
    std::size_t steps = 0;         // half-steps (side visits) executed
    std::size_t settled_after = 0; // half-step at which the terminal pair first held
};

/// Iterate the map from an initial state until the (domain, range) pair
/// repeats. The initially-on coordinates of the input side stay clamped on
/// every return to that side.
HiddenPattern hidden_pattern(const RelationalModel& model, const StateVector& initial, Side side,
                             const SignalPolicy& policy = SignalPolicy{},
                             UpdateMode mode = UpdateMode::InputSide);

/// Combined FRM: entrywise sum of the experts' relational matrices.
/// Entries range in [-p, p] and are not clipped.
Matrix combine(const std::vector<RelationalModel>& models);

}  // namespace fuzzmat
