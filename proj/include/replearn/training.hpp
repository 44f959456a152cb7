#pragma once

#include <cstdint>
#include <span>
#include <stdexcept>
#include <utility>
#include <vector>

#include "replearn/environment.hpp"
#include "replearn/network.hpp"

namespace replearn {

/// Thrown when a training loss becomes non-finite. Surfacing bad
/// hyperparameters beats silently corrupting sweep statistics.
struct DivergenceError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct TrainConfig {
    double learning_rate = 2.0;
    long max_epochs = 200000;
    double target_empirical_error = 0.005;
    std::uint64_t seed = 0;  // recorded in manifests; plain gradient descent draws nothing

    void validate() const {
        if (learning_rate <= 0) throw std::invalid_argument("learning_rate must be positive");
        if (max_epochs < 1) throw std::invalid_argument("max_epochs must be >= 1");
        if (target_empirical_error < 0) throw std::invalid_argument("target error must be >= 0");
    }
};

struct TrainTrace {
    std::vector<double> errors;  // empirical error before each applied update
    bool converged = false;
    long epochs = 0;             // number of weight updates applied
    double final_error = 0.0;    // empirical error of the returned weights
};

/// Mean squared error (1/m) * sum (h(x_i) - y_i)^2.
double empirical_error(std::span<const double> predictions, std::span<const double> labels);

/// Mean over tasks of task i's empirical error on bundle i. This is the
/// loss train_multitask descends.
double multitask_empirical_error(const MultitaskNetwork& netw, std::span<const TrainingSet> bundles);

/// Full-batch gradient descent on the multitask empirical error. One
/// weight update per epoch, after the gradients from all n training sets
/// have been accumulated. Stops as soon as the error reaches
/// target_empirical_error, or after max_epochs updates.
std::pair<MultitaskNetwork, TrainTrace> train_multitask(MultitaskNetwork netw,
                                                        std::span<const TrainingSet> bundles,
                                                        const TrainConfig& cfg);

/// Gradient descent over the output-net weights only, against a frozen
/// representation. Optional per-example weights (summing to 1) replace
/// the uniform 1/m weighting; the representation-error oracle uses this
/// to train on the fully enumerated, measure-weighted input space.
std::pair<OutputNet, TrainTrace> train_output_only(const RepresentationNet& rep,
                                                   const TrainingSet& training_set,
                                                   const TrainConfig& cfg, OutputNet init,
                                                   std::span<const double> example_weights = {});

/// As above with a zero-initialized output net.
std::pair<OutputNet, TrainTrace> train_output_only(const RepresentationNet& rep,
                                                   const TrainingSet& training_set,
                                                   const TrainConfig& cfg);

/// Output-only training in feature space: `features` are the frozen
/// representation's outputs for each example. The frozen-representation
/// paths use this directly so the representation is evaluated once.
std::pair<OutputNet, TrainTrace> train_output_on_features(std::span<const std::vector<double>> features,
                                                          std::span<const double> labels,
                                                          std::span<const double> example_weights,
                                                          const TrainConfig& cfg, OutputNet init);

}  // namespace replearn
