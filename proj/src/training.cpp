#include "replearn/training.hpp"

#include <algorithm>
#include <cmath>

namespace replearn {

double empirical_error(std::span<const double> predictions, std::span<const double> labels) {
    if (predictions.empty() || predictions.size() != labels.size())
        throw std::invalid_argument("empirical_error: need equal, nonempty sequences");
    double s = 0.0;
    for (std::size_t i = 0; i < predictions.size(); ++i) {
        const double r = predictions[i] - labels[i];
        s += r * r;
    }
    return s / static_cast<double>(predictions.size());
}

double multitask_empirical_error(const MultitaskNetwork& netw, std::span<const TrainingSet> bundles) {
    const int n = netw.task_count();
    if (static_cast<int>(bundles.size()) != n)
        throw std::invalid_argument("bundle count must equal the number of output networks");
    std::vector<double> task_losses(n);
    std::vector<std::vector<double>> acts;
    for (int i = 0; i < n; ++i) {
        const auto& pairs = bundles[i].pairs;
        if (pairs.empty()) throw std::invalid_argument("empty training set");
        double loss = 0.0;
        for (const auto& [x, y] : pairs) {
            netw.rep.forward(x, acts);
            const double r = netw.outputs[i].forward(acts.back()) - y;
            loss += r * r;
        }
        task_losses[i] = loss / static_cast<double>(pairs.size());
    }
    // Value-sorted reduction, matching backprop_grads, so the loss is
    // invariant under bundle permutations.
    std::sort(task_losses.begin(), task_losses.end());
    double s = 0.0;
    for (double v : task_losses) s += v;
    return s / static_cast<double>(n);
}

std::pair<MultitaskNetwork, TrainTrace> train_multitask(MultitaskNetwork netw,
                                                        std::span<const TrainingSet> bundles,
                                                        const TrainConfig& cfg) {
    cfg.validate();
    TrainTrace trace;
    for (long epoch = 0; epoch < cfg.max_epochs; ++epoch) {
        double loss = 0.0;
        NetGrads grads = backprop_grads(netw, bundles, &loss);
        if (!std::isfinite(loss)) throw DivergenceError("multitask training diverged (non-finite loss)");
        if (loss <= cfg.target_empirical_error) {
            trace.converged = true;
            trace.final_error = loss;
            return {std::move(netw), std::move(trace)};
        }
        const double lr = cfg.learning_rate;
        for (std::size_t l = 0; l < netw.rep.layers.size(); ++l) {
            auto& w = netw.rep.layers[l].w;
            const auto& g = grads.rep_layers[l];
            for (std::size_t i = 0; i < w.size(); ++i) w[i] -= lr * g[i];
        }
        for (int t = 0; t < netw.task_count(); ++t) {
            auto& w = netw.outputs[t].w;
            const auto& g = grads.outputs[t];
            for (std::size_t i = 0; i < w.size(); ++i) w[i] -= lr * g[i];
        }
        trace.errors.push_back(loss);
        trace.epochs += 1;
    }
    trace.final_error = multitask_empirical_error(netw, bundles);
    if (!std::isfinite(trace.final_error)) throw DivergenceError("multitask training diverged (non-finite loss)");
    trace.converged = trace.final_error <= cfg.target_empirical_error;
    return {std::move(netw), std::move(trace)};
}

std::pair<OutputNet, TrainTrace> train_output_on_features(std::span<const std::vector<double>> features,
                                                          std::span<const double> labels,
                                                          std::span<const double> example_weights,
                                                          const TrainConfig& cfg, OutputNet out) {
    cfg.validate();
    if (features.empty() || features.size() != labels.size())
        throw std::invalid_argument("train_output_on_features: need equal, nonempty sequences");
    if (!example_weights.empty() && example_weights.size() != features.size())
        throw std::invalid_argument("example weight count mismatch");
    const int k = out.fan_in;
    const double uniform_w = 1.0 / static_cast<double>(features.size());
    const bool sig = out.activation == OutputNet::Activation::Sigmoid;

    TrainTrace trace;
    std::vector<double> grad(k + 1);
    for (long epoch = 0; epoch < cfg.max_epochs; ++epoch) {
        std::fill(grad.begin(), grad.end(), 0.0);
        double loss = 0.0;
        for (std::size_t e = 0; e < features.size(); ++e) {
            const double wgt = example_weights.empty() ? uniform_w : example_weights[e];
            const auto& f = features[e];
            double z = out.w[k];
            for (int j = 0; j < k; ++j) z += out.w[j] * f[j];
            const double p = sig ? sigmoid(z) : z;
            const double resid = p - labels[e];
            loss += wgt * resid * resid;
            double dz = 2.0 * wgt * resid;
            if (sig) dz *= p * (1.0 - p);
            for (int j = 0; j < k; ++j) grad[j] += dz * f[j];
            grad[k] += dz;
        }
        if (!std::isfinite(loss)) throw DivergenceError("output-net training diverged (non-finite loss)");
        if (loss <= cfg.target_empirical_error) {
            trace.converged = true;
            trace.final_error = loss;
            return {std::move(out), std::move(trace)};
        }
        for (int j = 0; j <= k; ++j) out.w[j] -= cfg.learning_rate * grad[j];
        trace.errors.push_back(loss);
        trace.epochs += 1;
    }
    // Final error of the returned weights.
    double loss = 0.0;
    for (std::size_t e = 0; e < features.size(); ++e) {
        const double wgt = example_weights.empty() ? uniform_w : example_weights[e];
        const double r = out.forward(features[e]) - labels[e];
        loss += wgt * r * r;
    }
    if (!std::isfinite(loss)) throw DivergenceError("output-net training diverged (non-finite loss)");
    trace.final_error = loss;
    trace.converged = loss <= cfg.target_empirical_error;
    return {std::move(out), std::move(trace)};
}

std::pair<OutputNet, TrainTrace> train_output_only(const RepresentationNet& rep,
                                                   const TrainingSet& training_set,
                                                   const TrainConfig& cfg, OutputNet init,
                                                   std::span<const double> example_weights) {
    if (training_set.pairs.empty()) throw std::invalid_argument("empty training set");
    // The representation is frozen, so its outputs are computed once.
    std::vector<std::vector<double>> features;
    std::vector<double> labels;
    features.reserve(training_set.pairs.size());
    labels.reserve(training_set.pairs.size());
    for (const auto& [x, y] : training_set.pairs) {
        features.push_back(rep_forward(rep, x));
        labels.push_back(y);
    }
    return train_output_on_features(features, labels, example_weights, cfg, std::move(init));
}

std::pair<OutputNet, TrainTrace> train_output_only(const RepresentationNet& rep,
                                                   const TrainingSet& training_set,
                                                   const TrainConfig& cfg) {
    return train_output_only(rep, training_set, cfg, OutputNet::zeros(rep.output_dim()));
}

}  // namespace replearn
