#include "replearn/network.hpp"

#include <algorithm>
#include <stdexcept>

namespace replearn {

DenseLayer DenseLayer::zeros(int fan_in, int fan_out) {
    if (fan_in < 1 || fan_out < 1) throw std::invalid_argument("layer sizes must be positive");
    DenseLayer l;
    l.fan_in = fan_in;
    l.fan_out = fan_out;
    l.w.assign(static_cast<std::size_t>(fan_out) * (fan_in + 1), 0.0);
    return l;
}

RepresentationNet RepresentationNet::zeros(int input_dim, std::span<const int> hidden, int rep_dim) {
    if (rep_dim < 1) throw std::invalid_argument("rep_dim must be >= 1");
    RepresentationNet rep;
    int in = input_dim;
    for (int h : hidden) {
        rep.layers.push_back(DenseLayer::zeros(in, h));
        in = h;
    }
    rep.layers.push_back(DenseLayer::zeros(in, rep_dim));
    return rep;
}

std::vector<int> RepresentationNet::layer_sizes() const {
    std::vector<int> sizes;
    sizes.push_back(layers.front().fan_in);
    for (const auto& l : layers) sizes.push_back(l.fan_out);
    return sizes;
}

int RepresentationNet::weight_count() const {
    int total = 0;
    for (const auto& l : layers) total += l.weight_count();
    return total;
}

void RepresentationNet::forward(const InputPattern& x, std::vector<std::vector<double>>& acts) const {
    if (static_cast<int>(x.bits.size()) != input_dim())
        throw std::invalid_argument("input dimension mismatch");
    acts.resize(layers.size());
    for (std::size_t l = 0; l < layers.size(); ++l) {
        const DenseLayer& layer = layers[l];
        acts[l].resize(layer.fan_out);
        for (int u = 0; u < layer.fan_out; ++u) {
            const double* wr = layer.row(u);
            double z = wr[layer.fan_in];  // bias
            if (l == 0) {
                for (int i = 0; i < layer.fan_in; ++i)
                    if (x.bits[i]) z += wr[i];
            } else {
                const auto& prev = acts[l - 1];
                for (int i = 0; i < layer.fan_in; ++i) z += wr[i] * prev[i];
            }
            acts[l][u] = sigmoid(z);
        }
    }
}

OutputNet OutputNet::zeros(int fan_in, Activation act) {
    if (fan_in < 1) throw std::invalid_argument("output net fan_in must be >= 1");
    OutputNet o;
    o.fan_in = fan_in;
    o.w.assign(fan_in + 1, 0.0);
    o.activation = act;
    return o;
}

double OutputNet::forward(std::span<const double> rep_out) const {
    if (static_cast<int>(rep_out.size()) != fan_in)
        throw std::invalid_argument("representation dimension mismatch");
    double z = w[fan_in];
    for (int i = 0; i < fan_in; ++i) z += w[i] * rep_out[i];
    return activation == Activation::Sigmoid ? sigmoid(z) : z;
}

MultitaskNetwork init_multitask(const NetworkConfig& config, int input_dim, int n, rng::Stream& stream) {
    if (n < 1) throw std::invalid_argument("init_multitask: n must be >= 1");
    MultitaskNetwork netw;
    netw.rep = RepresentationNet::zeros(input_dim, config.hidden_sizes, config.rep_dim);
    const double s = config.weight_init_scale;
    for (auto& layer : netw.rep.layers)
        for (auto& w : layer.w) w = stream.uniform(-s, s);
    netw.outputs.reserve(n);
    for (int i = 0; i < n; ++i) {
        OutputNet o = OutputNet::zeros(config.rep_dim);
        for (auto& w : o.w) w = stream.uniform(-s, s);
        netw.outputs.push_back(std::move(o));
    }
    return netw;
}

std::vector<double> rep_forward(const RepresentationNet& rep, const InputPattern& x) {
    std::vector<std::vector<double>> acts;
    rep.forward(x, acts);
    return acts.back();
}

double predict(const MultitaskNetwork& netw, int task_index, const InputPattern& x) {
    if (task_index < 0 || task_index >= netw.task_count())
        throw std::out_of_range("task_index out of range");
    std::vector<std::vector<double>> acts;
    netw.rep.forward(x, acts);
    return netw.outputs[task_index].forward(acts.back());
}

NetGrads NetGrads::zeros_like(const MultitaskNetwork& netw) {
    NetGrads g;
    g.rep_layers.reserve(netw.rep.layers.size());
    for (const auto& l : netw.rep.layers) g.rep_layers.emplace_back(l.w.size(), 0.0);
    g.outputs.reserve(netw.outputs.size());
    for (const auto& o : netw.outputs) g.outputs.emplace_back(o.w.size(), 0.0);
    return g;
}

double NetGrads::max_abs() const {
    double m = 0.0;
    for (const auto& v : rep_layers)
        for (double g : v) m = std::max(m, std::abs(g));
    for (const auto& v : outputs)
        for (double g : v) m = std::max(m, std::abs(g));
    return m;
}

namespace {

// Sum of n values independent of their ordering: sort first, then add.
// Falls back to a plain sum if anything is non-finite (the caller
// detects divergence from the loss).
double order_invariant_sum(std::vector<double>& vals) {
    bool finite = true;
    for (double v : vals)
        if (!std::isfinite(v)) { finite = false; break; }
    if (finite) std::sort(vals.begin(), vals.end());
    double s = 0.0;
    for (double v : vals) s += v;
    return s;
}

}  // namespace

NetGrads backprop_grads(const MultitaskNetwork& netw, std::span<const TrainingSet> bundles,
                        double* empirical_error_out) {
    const int n = netw.task_count();
    if (static_cast<int>(bundles.size()) != n)
        throw std::invalid_argument("bundle count must equal the number of output networks");
    for (const auto& b : bundles)
        if (b.pairs.empty()) throw std::invalid_argument("empty training set");

    const auto& rep = netw.rep;
    const std::size_t L = rep.layers.size();
    const int k = rep.output_dim();

    NetGrads grads = NetGrads::zeros_like(netw);

    // Per-task shared-representation gradients are kept separate and
    // reduced at the end in value-sorted order, so that the result does
    // not depend on the order the bundles are presented in.
    std::vector<std::vector<std::vector<double>>> task_rep_grads(
        n, std::vector<std::vector<double>>(L));
    for (int i = 0; i < n; ++i)
        for (std::size_t l = 0; l < L; ++l)
            task_rep_grads[i][l].assign(rep.layers[l].w.size(), 0.0);

    std::vector<std::vector<double>> acts;    // layer activations
    std::vector<std::vector<double>> deltas;  // layer blames
    deltas.resize(L);
    for (std::size_t l = 0; l < L; ++l) deltas[l].resize(rep.layers[l].fan_out);

    std::vector<double> task_losses(n, 0.0);

    for (int i = 0; i < n; ++i) {
        const auto& pairs = bundles[i].pairs;
        const OutputNet& out = netw.outputs[i];
        const double inv_m = 1.0 / static_cast<double>(pairs.size());
        auto& out_grad = grads.outputs[i];
        auto& rep_grad = task_rep_grads[i];
        double loss = 0.0;

        for (const auto& [x, y] : pairs) {
            rep.forward(x, acts);
            const auto& r = acts.back();
            const double p = out.forward(r);
            const double resid = p - y;
            loss += resid * resid;

            // d(loss_i)/dz for the output unit; the 1/(n*m) factor of the
            // multitask error is folded in here.
            double dz = 2.0 * resid * inv_m / static_cast<double>(n);
            if (out.activation == OutputNet::Activation::Sigmoid) dz *= p * (1.0 - p);
            for (int j = 0; j < k; ++j) out_grad[j] += dz * r[j];
            out_grad[k] += dz;

            // Blame on the representation output, then backwards through f.
            auto& top = deltas[L - 1];
            for (int j = 0; j < k; ++j) top[j] = dz * out.w[j] * r[j] * (1.0 - r[j]);

            for (std::size_t l = L; l-- > 0;) {
                const DenseLayer& layer = rep.layers[l];
                auto& d = deltas[l];
                auto& g = rep_grad[l];
                if (l == 0) {
                    for (int u = 0; u < layer.fan_out; ++u) {
                        double* gr = g.data() + static_cast<std::size_t>(u) * (layer.fan_in + 1);
                        for (int c = 0; c < layer.fan_in; ++c)
                            if (x.bits[c]) gr[c] += d[u];
                        gr[layer.fan_in] += d[u];
                    }
                } else {
                    const auto& prev = acts[l - 1];
                    auto& dprev = deltas[l - 1];
                    std::fill(dprev.begin(), dprev.end(), 0.0);
                    for (int u = 0; u < layer.fan_out; ++u) {
                        const double* wr = layer.row(u);
                        double* gr = g.data() + static_cast<std::size_t>(u) * (layer.fan_in + 1);
                        for (int c = 0; c < layer.fan_in; ++c) {
                            gr[c] += d[u] * prev[c];
                            dprev[c] += d[u] * wr[c];
                        }
                        gr[layer.fan_in] += d[u];
                    }
                    // Apply the sigmoid derivative of the previous layer.
                    for (int c = 0; c < layer.fan_in; ++c)
                        dprev[c] *= prev[c] * (1.0 - prev[c]);
                }
            }
        }
        task_losses[i] = loss * inv_m;
    }

    std::vector<double> vals(n);
    for (std::size_t l = 0; l < L; ++l) {
        auto& g = grads.rep_layers[l];
        for (std::size_t wi = 0; wi < g.size(); ++wi) {
            for (int i = 0; i < n; ++i) vals[i] = task_rep_grads[i][l][wi];
            g[wi] = order_invariant_sum(vals);
        }
    }

    if (empirical_error_out) {
        std::vector<double> losses = task_losses;
        *empirical_error_out = order_invariant_sum(losses) / static_cast<double>(n);
    }
    return grads;
}

}  // namespace replearn
