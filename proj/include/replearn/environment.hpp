#pragma once

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "replearn/rng.hpp"

namespace replearn {

/// Binary input vector. For the default environment these are the
/// length-10 vectors with between one and four ones.
struct InputPattern {
    std::vector<std::uint8_t> bits;

    int ones_count() const;
    std::string to_bit_string() const;
    static InputPattern from_bit_string(const std::string& s);

    bool operator==(const InputPattern&) const = default;
};

/// A symmetric Boolean function: its value depends only on the input's
/// ones-count, so it is stored as a truth table over the admissible
/// counts. Constant tables are rejected.
struct SymmetricTask {
    int ones_min = 1;
    std::vector<std::uint8_t> table;  // outputs for counts ones_min .. ones_min+table.size()-1

    double evaluate(const InputPattern& x) const;
    /// Truth table as a bit string in ones-count order, e.g. "1010" = parity.
    std::string to_bit_string() const;
    static SymmetricTask from_bit_string(const std::string& s, int ones_min = 1);

    bool operator==(const SymmetricTask&) const = default;
};

/// The task environment: input length, admissible ones-count range and
/// the implied family of non-constant symmetric tasks. Defaults give the
/// 385-pattern / 14-task setup; smaller spaces are used by tests that
/// want cheap exhaustive oracles.
struct EnvironmentSpec {
    int input_length = 10;
    int ones_min = 1;
    int ones_max = 4;

    void validate() const;
    int category_count() const { return ones_max - ones_min + 1; }
    /// 2^categories - 2 (the two constant tables are excluded).
    int task_count() const;
};

/// Input marginal. category-uniform draws the ones-count uniformly and
/// then the positions uniformly; flat-uniform is uniform over the whole
/// enumerated input space.
struct InputMeasure {
    enum class Mode { CategoryUniform, FlatUniform };
    Mode mode = Mode::CategoryUniform;

    static const char* mode_name(Mode m);
    static Mode parse_mode(const std::string& name);
};

/// Noise-free labelled sample for one task.
struct TrainingSet {
    SymmetricTask task;
    std::vector<std::pair<InputPattern, double>> pairs;
};

/// Every admissible pattern in lexicographic order (bit string order).
std::vector<InputPattern> enumerate_inputs(const EnvironmentSpec& spec);

/// All non-constant symmetric tasks, ordered by truth table read as an
/// integer (most significant bit = lowest ones-count).
std::vector<SymmetricTask> enumerate_tasks(const EnvironmentSpec& spec);

double eval_task(const SymmetricTask& task, const InputPattern& x);

/// n i.i.d. uniform draws from the task family, with replacement.
std::vector<SymmetricTask> sample_tasks(const EnvironmentSpec& spec, int n, rng::Stream& stream);

InputPattern sample_input(const EnvironmentSpec& spec, const InputMeasure& measure, rng::Stream& stream);

TrainingSet build_training_set(const SymmetricTask& task, int m, const EnvironmentSpec& spec,
                               const InputMeasure& measure, rng::Stream& stream);

/// Probability of a single pattern under the measure.
double measure_weight(const EnvironmentSpec& spec, const InputMeasure& measure, const InputPattern& x);

/// Weights aligned with enumerate_inputs(spec); they sum to 1.
std::vector<double> measure_weights(const EnvironmentSpec& spec, const InputMeasure& measure);

/// Number of admissible patterns per ones-count category, ones_min first.
std::vector<std::uint64_t> category_sizes(const EnvironmentSpec& spec);

}  // namespace replearn
