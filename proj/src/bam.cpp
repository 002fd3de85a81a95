#include "fuzzmat/bam.hpp"

#include <cmath>
#include <string>

namespace fuzzmat {

namespace {

void check_len(const std::vector<double>& v, std::size_t want, const char* what) {
    if (!v.empty() && v.size() != want)
        throw engine_error(std::string("synaptic model: ") + what + " has length " +
                           std::to_string(v.size()) + ", expected " + std::to_string(want));
}

std::vector<double> add_inputs(std::vector<double> raw, const std::vector<double>& inputs) {
    if (!inputs.empty())
        for (std::size_t i = 0; i < raw.size(); ++i) raw[i] += inputs[i];
    return raw;
}

}  // namespace

void SynapticModel::validate() const {
    if (scale < 1) throw engine_error("synaptic model: scale must be a positive integer");
    if (policy != SignalKind::BamBinaryMemory && policy != SignalKind::BamBipolarMemory)
        throw engine_error("synaptic model: policy must be a memory signal function");
    for (double v : matrix.entries())
        if (std::abs(v) > scale)
            throw engine_error("synaptic model: entry " + std::to_string(v) +
                               " exceeds the scale [-" + std::to_string(scale) + ", " +
                               std::to_string(scale) + "]");
    check_len(x_thresholds, matrix.rows(), "x_thresholds");
    check_len(y_thresholds, matrix.cols(), "y_thresholds");
    check_len(x_inputs, matrix.rows(), "x_inputs");
    check_len(y_inputs, matrix.cols(), "y_inputs");
    if (!x_labels.empty() && x_labels.size() != matrix.rows())
        throw engine_error("synaptic model: x_labels do not match the row count");
    if (!y_labels.empty() && y_labels.size() != matrix.cols())
        throw engine_error("synaptic model: y_labels do not match the column count");
}

BamStep bam_step(const SynapticModel& model, const StateVector& signal, Direction direction,
                 const StateVector& prev) {
    const std::size_t from = direction == Direction::Forward ? model.matrix.rows() : model.matrix.cols();
    if (signal.size() != from)
        throw engine_error("bam_step: signal length " + std::to_string(signal.size()) +
                           " does not match " + std::to_string(from) + " source neurons");
    std::vector<double> raw;
    SignalPolicy pol{model.policy, {}};
    if (direction == Direction::Forward) {
        raw = add_inputs(left_multiply(signal, model.matrix), model.y_inputs);
        pol.thresholds = model.y_thresholds;
    } else {
        raw = add_inputs(left_multiply(signal, transpose(model.matrix)), model.x_inputs);
        pol.thresholds = model.x_thresholds;
    }
    StateVector out = apply_signal(raw, pol, prev);
    return BamStep{std::move(raw), std::move(out)};
}

StableResult bam_run(const SynapticModel& model, const std::vector<double>& initial_activation,
                     const std::optional<StateVector>& initial_prev_y) {
    model.validate();
    const std::size_t n = model.matrix.rows(), p = model.matrix.cols();
    if (initial_activation.size() != n)
        throw engine_error("bam_run: initial activation length " +
                           std::to_string(initial_activation.size()) + " does not match " +
                           std::to_string(n) + " F_X neurons");
    const Alphabet alpha = signal_alphabet(model.policy);

    SignalPolicy x_pol{model.policy, model.x_thresholds};
    StateVector x = apply_signal(initial_activation, x_pol, StateVector::all_off(alpha, n));
    StateVector y = initial_prev_y ? *initial_prev_y : StateVector::all_off(alpha, p);
    if (y.size() != p)
        throw engine_error("bam_run: initial F_Y signal length " + std::to_string(y.size()) +
                           " does not match " + std::to_string(p) + " F_Y neurons");

    StableResult result;
    const std::size_t guard =
        n + p >= 40 ? ~std::size_t{0} : (std::size_t{1} << (n + p)) + 4;
    std::size_t half = 0;
    std::size_t last_change = 0;
    while (true) {
        ++half;
        BamStep fwd = bam_step(model, x, Direction::Forward, y);
        bool y_changed = fwd.signal != y;
        if (y_changed) last_change = half;
        y = fwd.signal;
        result.trajectory.push_back(HalfStep{Direction::Forward, std::move(fwd.raw), y});

        ++half;
        BamStep bwd = bam_step(model, y, Direction::Backward, x);
        bool x_changed = bwd.signal != x;
        if (x_changed) last_change = half;
        x = bwd.signal;
        result.trajectory.push_back(HalfStep{Direction::Backward, std::move(bwd.raw), x});

        if (!y_changed && !x_changed) break;
        if (half > guard)
            throw engine_error("bam_run: no convergence within 2^(n+p) half-steps");
    }
    result.x_signal = x;
    result.y_signal = y;
    result.half_steps = half;
    result.stabilized_at = last_change;
    return result;
}

SynapticModel transposed(const SynapticModel& model) {
    SynapticModel out;
    out.matrix = transpose(model.matrix);
    out.scale = model.scale;
    out.x_labels = model.y_labels;
    out.y_labels = model.x_labels;
    out.x_thresholds = model.y_thresholds;
    out.y_thresholds = model.x_thresholds;
    out.x_inputs = model.y_inputs;
    out.y_inputs = model.x_inputs;
    out.policy = model.policy;
    return out;
}

double energy(const SynapticModel& model, const StateVector& x_signal,
              const StateVector& y_signal) {
    if (x_signal.size() != model.matrix.rows() || y_signal.size() != model.matrix.cols())
        throw engine_error("energy: signal lengths do not match the synaptic matrix");
    const std::vector<double> xm = left_multiply(x_signal, model.matrix);
    double e = 0.0;
    for (std::size_t j = 0; j < xm.size(); ++j) e -= xm[j] * y_signal[j];
    if (!model.x_inputs.empty())
        for (std::size_t i = 0; i < x_signal.size(); ++i) e -= model.x_inputs[i] * x_signal[i];
    if (!model.y_inputs.empty())
        for (std::size_t j = 0; j < y_signal.size(); ++j) e -= model.y_inputs[j] * y_signal[j];
    return e;
}

}  // namespace fuzzmat
