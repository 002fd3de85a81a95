#pragma once

#include <optional>
#include <string>
#include <vector>

#include "fuzzmat/matrix.hpp"

namespace fuzzmat {

/// Discrete additive bidirectional associative memory. The matrix couples
/// the F_X field (rows) to the F_Y field (columns); backward projection
/// always uses the transpose. Entries live on the integer scale [-t, t].
struct SynapticModel {
    Matrix matrix;  // n x p
    int scale = 1;
    std::vector<std::string> x_labels;
    std::vector<std::string> y_labels;
    // Empty threshold/input vectors mean all-zero.
    std::vector<double> x_thresholds;  // U, per F_X neuron
    std::vector<double> y_thresholds;  // V, per F_Y neuron
    std::vector<double> x_inputs;      // I
    std::vector<double> y_inputs;      // J
    SignalKind policy = SignalKind::BamBinaryMemory;

    void validate() const;
};

enum class Direction { Forward, Backward };

struct BamStep {
    std::vector<double> raw;
    StateVector signal;
};

/// One synchronous half-step. Forward: raw = signal * M + J thresholded
/// with V; backward: raw = signal * M^T + I thresholded with U. The memory
/// rule keeps `prev` at an exact threshold hit.
BamStep bam_step(const SynapticModel& model, const StateVector& signal, Direction direction,
                 const StateVector& prev);

struct HalfStep {
    Direction direction;
    std::vector<double> raw;
    StateVector signal;
};

/// Bidirectionally stable terminal pair plus the trajectory that reached it.
struct StableResult {
    StateVector x_signal;
    StateVector y_signal;
    std::size_t half_steps = 0;     // executed, including the confirming cycle
    std::size_t stabilized_at = 0;  // last half-step that changed a signal
    std::vector<HalfStep> trajectory;
};

/// Run the synchronous dynamics from an initial F_X activation until one
/// full forward/backward cycle leaves both signals unchanged.
StableResult bam_run(const SynapticModel& model, const std::vector<double>& initial_activation,
                     const std::optional<StateVector>& initial_prev_y = std::nullopt);

/// Mirror model for feeding inputs on the F_Y side: bam_run on the
/// transposed model gives the mirrored dynamics.
SynapticModel transposed(const SynapticModel& model);

/// Convergence diagnostic: E = -(x * M) . y - I.x - J.y. Non-increasing
/// along every trajectory of the synchronous dynamics.
double energy(const SynapticModel& model, const StateVector& x_signal, const StateVector& y_signal);

}  // namespace fuzzmat
