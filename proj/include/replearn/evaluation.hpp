#pragma once

#include <cstdint>
#include <functional>
#include <span>
#include <vector>

#include "replearn/environment.hpp"
#include "replearn/network.hpp"
#include "replearn/training.hpp"

namespace replearn {

using Predictor = std::function<double(const InputPattern&)>;

/// Exact generalisation error by full enumeration: the measure-weighted
/// sum over every admissible input of (prediction - label)^2.
double true_error(const Predictor& predictor, const SymmetricTask& task,
                  const EnvironmentSpec& spec, const InputMeasure& measure);

struct ErrorReport {
    std::vector<double> per_task_errors;
    double mean_error = 0.0;
    InputMeasure::Mode measure_mode = InputMeasure::Mode::CategoryUniform;
};

/// Exact per-task true error of g_i o f against task i, plus the mean.
ErrorReport average_true_error(const MultitaskNetwork& netw, std::span<const SymmetricTask> tasks,
                               const EnvironmentSpec& spec, const InputMeasure& measure);

struct OracleConfig {
    int restarts = 5;  // restart 0 is zero-initialized, the rest random
    double init_scale = 0.5;
    std::uint64_t seed = 0;
    TrainConfig train{.learning_rate = 2.0,
                      .max_epochs = 20000,
                      .target_empirical_error = 1e-4,
                      .seed = 0};
};

struct RepresentationErrorReport {
    std::vector<double> per_task_infima;  // enumerate_tasks order
    std::vector<std::uint8_t> per_task_converged;
    double mean = 0.0;
    int oracle_restarts = 0;
    InputMeasure::Mode measure_mode = InputMeasure::Mode::CategoryUniform;
};

/// How good a frozen representation is for the whole task family: for
/// every task, the best exact true error over output nets found by
/// multi-restart output-only training on the fully enumerated,
/// measure-weighted input space. The untrained zero net (constant 0.5)
/// is always among the candidates, so no infimum exceeds 0.25.
RepresentationErrorReport representation_error(const RepresentationNet& rep, const EnvironmentSpec& spec,
                                               const InputMeasure& measure, const OracleConfig& oracle);

struct ScatterPoint {
    InputPattern input;
    int ones_count = 0;
    std::vector<double> rep_output;
};

/// One record per enumerated input, for CSV/SVG emission.
std::vector<ScatterPoint> representation_scatter(const RepresentationNet& rep, const EnvironmentSpec& spec);

/// Nearest-centroid classification accuracy of the ones-count from the
/// representation outputs, weighted category-uniformly (each category
/// counts 1/C regardless of its size). Centroid ties go to the lowest
/// ones-count.
double category_separation(std::span<const ScatterPoint> scatter);

}  // namespace replearn
