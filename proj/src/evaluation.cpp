#include "replearn/evaluation.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <stdexcept>

namespace replearn {

double true_error(const Predictor& predictor, const SymmetricTask& task,
                  const EnvironmentSpec& spec, const InputMeasure& measure) {
    const auto inputs = enumerate_inputs(spec);
    const auto weights = measure_weights(spec, measure);
    double err = 0.0;
    for (std::size_t i = 0; i < inputs.size(); ++i) {
        const double r = predictor(inputs[i]) - task.evaluate(inputs[i]);
        err += weights[i] * r * r;
    }
    return err;
}

ErrorReport average_true_error(const MultitaskNetwork& netw, std::span<const SymmetricTask> tasks,
                               const EnvironmentSpec& spec, const InputMeasure& measure) {
    const int n = netw.task_count();
    if (static_cast<int>(tasks.size()) != n)
        throw std::invalid_argument("task count must match the number of output networks");
    const auto inputs = enumerate_inputs(spec);
    const auto weights = measure_weights(spec, measure);

    ErrorReport report;
    report.measure_mode = measure.mode;
    report.per_task_errors.assign(n, 0.0);
    std::vector<std::vector<double>> acts;
    for (std::size_t i = 0; i < inputs.size(); ++i) {
        netw.rep.forward(inputs[i], acts);
        const auto& r = acts.back();
        for (int t = 0; t < n; ++t) {
            const double d = netw.outputs[t].forward(r) - tasks[t].evaluate(inputs[i]);
            report.per_task_errors[t] += weights[i] * d * d;
        }
    }
    double s = 0.0;
    for (double e : report.per_task_errors) s += e;
    report.mean_error = s / static_cast<double>(n);
    return report;
}

namespace {

double weighted_error_on_features(const OutputNet& out, std::span<const std::vector<double>> features,
                                  std::span<const double> labels, std::span<const double> weights) {
    double err = 0.0;
    for (std::size_t i = 0; i < features.size(); ++i) {
        const double r = out.forward(features[i]) - labels[i];
        err += weights[i] * r * r;
    }
    return err;
}

std::uint64_t task_id(const SymmetricTask& task) {
    std::uint64_t v = 0;
    for (auto b : task.table) v = (v << 1) | b;
    return v;
}

}  // namespace

RepresentationErrorReport representation_error(const RepresentationNet& rep, const EnvironmentSpec& spec,
                                               const InputMeasure& measure, const OracleConfig& oracle) {
    if (oracle.restarts < 1) throw std::invalid_argument("oracle needs at least one restart");
    const auto inputs = enumerate_inputs(spec);
    const auto weights = measure_weights(spec, measure);
    const auto tasks = enumerate_tasks(spec);
    const int k = rep.output_dim();

    // The representation is frozen: evaluate it once over the whole space.
    std::vector<std::vector<double>> features;
    features.reserve(inputs.size());
    for (const auto& x : inputs) features.push_back(rep_forward(rep, x));

    RepresentationErrorReport report;
    report.oracle_restarts = oracle.restarts;
    report.measure_mode = measure.mode;
    report.per_task_infima.reserve(tasks.size());
    report.per_task_converged.reserve(tasks.size());

    std::vector<double> labels(inputs.size());
    for (const auto& task : tasks) {
        for (std::size_t i = 0; i < inputs.size(); ++i) labels[i] = task.evaluate(inputs[i]);

        // The untrained zero net predicts 0.5 everywhere; it is always a
        // candidate, capping every infimum at 0.25.
        double best = weighted_error_on_features(OutputNet::zeros(k), features, labels, weights);
        bool converged = false;
        for (int r = 0; r < oracle.restarts; ++r) {
            OutputNet init = OutputNet::zeros(k);
            if (r > 0) {
                // Seeded by task identity, not enumeration position, so a
                // permutation of the task order cannot change any infimum.
                rng::Stream stream(rng::derive_seed(oracle.seed, task_id(task), static_cast<std::uint64_t>(r)));
                for (auto& w : init.w) w = stream.uniform(-oracle.init_scale, oracle.init_scale);
            }
            auto [trained, trace] =
                train_output_on_features(features, labels, weights, oracle.train, std::move(init));
            converged = converged || trace.converged;
            best = std::min(best, weighted_error_on_features(trained, features, labels, weights));
        }
        report.per_task_infima.push_back(best);
        report.per_task_converged.push_back(converged ? 1 : 0);
    }
    double s = 0.0;
    for (double v : report.per_task_infima) s += v;
    report.mean = s / static_cast<double>(report.per_task_infima.size());
    return report;
}

std::vector<ScatterPoint> representation_scatter(const RepresentationNet& rep, const EnvironmentSpec& spec) {
    const auto inputs = enumerate_inputs(spec);
    std::vector<ScatterPoint> scatter;
    scatter.reserve(inputs.size());
    for (const auto& x : inputs) {
        ScatterPoint p;
        p.input = x;
        p.ones_count = x.ones_count();
        p.rep_output = rep_forward(rep, x);
        scatter.push_back(std::move(p));
    }
    return scatter;
}

double category_separation(std::span<const ScatterPoint> scatter) {
    if (scatter.empty()) throw std::invalid_argument("empty scatter");
    const std::size_t dim = scatter.front().rep_output.size();

    // Centroid per category, in ascending ones-count order.
    std::map<int, std::pair<std::vector<double>, int>> sums;
    for (const auto& p : scatter) {
        auto& [sum, count] = sums[p.ones_count];
        sum.resize(dim, 0.0);
        for (std::size_t d = 0; d < dim; ++d) sum[d] += p.rep_output[d];
        count += 1;
    }
    std::vector<int> cats;
    std::vector<std::vector<double>> centroids;
    std::vector<double> cat_sizes;
    for (auto& [cat, entry] : sums) {
        cats.push_back(cat);
        auto& [sum, count] = entry;
        for (auto& v : sum) v /= count;
        centroids.push_back(sum);
        cat_sizes.push_back(static_cast<double>(count));
    }

    // Category-uniform accuracy: each category contributes 1/C times the
    // fraction of its points that classify correctly. Ties between
    // centroids resolve to the lowest ones-count (cats is ascending).
    const double cat_share = 1.0 / static_cast<double>(cats.size());
    double accuracy = 0.0;
    for (const auto& p : scatter) {
        std::size_t best = 0;
        double best_d2 = std::numeric_limits<double>::infinity();
        for (std::size_t c = 0; c < centroids.size(); ++c) {
            double d2 = 0.0;
            for (std::size_t d = 0; d < dim; ++d) {
                const double diff = p.rep_output[d] - centroids[c][d];
                d2 += diff * diff;
            }
            if (d2 < best_d2) {
                best_d2 = d2;
                best = c;
            }
        }
        if (cats[best] == p.ones_count)
            accuracy += cat_share / cat_sizes[best];
    }
    return accuracy;
}

}  // namespace replearn
