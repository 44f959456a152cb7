#pragma once

#include <cmath>
#include <cstdint>
#include <span>
#include <vector>

#include "replearn/environment.hpp"
#include "replearn/rng.hpp"

namespace replearn {

inline double sigmoid(double z) { return 1.0 / (1.0 + std::exp(-z)); }

/// One fully connected layer. Weights are row-major, one row per output
/// unit; the last column of each row is the bias.
struct DenseLayer {
    int fan_in = 0;
    int fan_out = 0;
    std::vector<double> w;  // fan_out * (fan_in + 1)

    static DenseLayer zeros(int fan_in, int fan_out);
    int weight_count() const { return fan_out * (fan_in + 1); }
    const double* row(int r) const { return w.data() + static_cast<std::size_t>(r) * (fan_in + 1); }
    double* row(int r) { return w.data() + static_cast<std::size_t>(r) * (fan_in + 1); }
};

/// The shared representation network f: a stack of sigmoid layers from
/// the input bits to a k-dimensional representation.
struct RepresentationNet {
    std::vector<DenseLayer> layers;

    static RepresentationNet zeros(int input_dim, std::span<const int> hidden, int rep_dim);

    int input_dim() const { return layers.front().fan_in; }
    int output_dim() const { return layers.back().fan_out; }
    std::vector<int> layer_sizes() const;
    /// W_R: sum over layers of (fan_in + 1) * fan_out.
    int weight_count() const;

    /// Forward pass writing every layer's activations into `acts`
    /// (resized as needed; acts[l] holds layer l's outputs).
    void forward(const InputPattern& x, std::vector<std::vector<double>>& acts) const;
};

/// A per-task output network g_i: a single unit over the representation,
/// sigmoid by default. The linear option exists for oracles that want a
/// convex problem.
struct OutputNet {
    enum class Activation { Sigmoid, Linear };

    int fan_in = 0;
    std::vector<double> w;  // fan_in + 1, last entry is the bias
    Activation activation = Activation::Sigmoid;

    static OutputNet zeros(int fan_in, Activation act = Activation::Sigmoid);
    /// W_O = k + 1.
    int weight_count() const { return fan_in + 1; }

    double forward(std::span<const double> rep_out) const;
};

/// Shared representation plus one output network per task.
struct MultitaskNetwork {
    RepresentationNet rep;
    std::vector<OutputNet> outputs;

    int task_count() const { return static_cast<int>(outputs.size()); }
    int rep_weight_count() const { return rep.weight_count(); }
    int output_weight_count() const { return outputs.empty() ? 0 : outputs.front().weight_count(); }
};

struct NetworkConfig {
    std::vector<int> hidden_sizes{8};
    int rep_dim = 2;
    double weight_init_scale = 0.5;
};

/// Fresh multitask network with all weights i.i.d. uniform on
/// [-weight_init_scale, +weight_init_scale]. Draw order is fixed:
/// representation layers first (row-major), then output nets in task order.
MultitaskNetwork init_multitask(const NetworkConfig& config, int input_dim, int n, rng::Stream& stream);

/// Convenience single-input forward through the representation.
std::vector<double> rep_forward(const RepresentationNet& rep, const InputPattern& x);

/// g_i(f(x)) for task task_index.
double predict(const MultitaskNetwork& netw, int task_index, const InputPattern& x);

/// Gradient buffers mirroring a MultitaskNetwork's weight layout.
struct NetGrads {
    std::vector<std::vector<double>> rep_layers;  // same shapes as rep.layers[i].w
    std::vector<std::vector<double>> outputs;     // same shapes as outputs[i].w

    static NetGrads zeros_like(const MultitaskNetwork& netw);
    double max_abs() const;
};

/// Exact gradient of the multitask empirical error (mean over tasks of
/// per-task mean squared error) with respect to every weight. Also
/// reports the error itself, which the gradient pass computes for free.
/// The cross-task reduction into the shared representation gradient is
/// performed in value-sorted order so the result is invariant under
/// permutations of the bundles.
NetGrads backprop_grads(const MultitaskNetwork& netw, std::span<const TrainingSet> bundles,
                        double* empirical_error_out = nullptr);

}  // namespace replearn
