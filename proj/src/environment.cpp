#include "replearn/environment.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace replearn {

int InputPattern::ones_count() const {
    int c = 0;
    for (auto b : bits) c += b;
    return c;
}

std::string InputPattern::to_bit_string() const {
    std::string s;
    s.reserve(bits.size());
    for (auto b : bits) s.push_back(b ? '1' : '0');
    return s;
}

InputPattern InputPattern::from_bit_string(const std::string& s) {
    InputPattern x;
    x.bits.reserve(s.size());
    for (char c : s) {
        if (c != '0' && c != '1') throw std::invalid_argument("input bit string must be 0/1: " + s);
        x.bits.push_back(c == '1' ? 1 : 0);
    }
    return x;
}

double SymmetricTask::evaluate(const InputPattern& x) const {
    const int c = x.ones_count();
    const int idx = c - ones_min;
    if (idx < 0 || idx >= static_cast<int>(table.size()))
        throw std::out_of_range("ones-count " + std::to_string(c) + " outside task table domain");
    return static_cast<double>(table[idx]);
}

std::string SymmetricTask::to_bit_string() const {
    std::string s;
    s.reserve(table.size());
    for (auto b : table) s.push_back(b ? '1' : '0');
    return s;
}

SymmetricTask SymmetricTask::from_bit_string(const std::string& s, int ones_min) {
    SymmetricTask t;
    t.ones_min = ones_min;
    bool any0 = false, any1 = false;
    for (char c : s) {
        if (c != '0' && c != '1') throw std::invalid_argument("task bit string must be 0/1: " + s);
        t.table.push_back(c == '1' ? 1 : 0);
        (c == '1' ? any1 : any0) = true;
    }
    if (!any0 || !any1) throw std::invalid_argument("constant task table: " + s);
    return t;
}

void EnvironmentSpec::validate() const {
    if (input_length < 1) throw std::invalid_argument("input_length must be positive");
    if (!(1 <= ones_min && ones_min <= ones_max && ones_max <= input_length))
        throw std::invalid_argument("require 1 <= ones_min <= ones_max <= input_length");
    if (category_count() > 30) throw std::invalid_argument("ones-count range too large");
}

int EnvironmentSpec::task_count() const {
    return (1 << category_count()) - 2;
}

const char* InputMeasure::mode_name(Mode m) {
    return m == Mode::CategoryUniform ? "category-uniform" : "flat-uniform";
}

InputMeasure::Mode InputMeasure::parse_mode(const std::string& name) {
    if (name == "category-uniform") return Mode::CategoryUniform;
    if (name == "flat-uniform") return Mode::FlatUniform;
    throw std::invalid_argument("unknown measure mode: " + name);
}

std::vector<InputPattern> enumerate_inputs(const EnvironmentSpec& spec) {
    spec.validate();
    if (spec.input_length > 24) throw std::invalid_argument("input_length too large to enumerate");
    const int L = spec.input_length;
    std::vector<InputPattern> out;
    // Ascending integers with the first bit as most significant bit is
    // exactly lexicographic order on the bit strings.
    for (std::uint32_t v = 0; v < (1u << L); ++v) {
        int ones = __builtin_popcount(v);
        if (ones < spec.ones_min || ones > spec.ones_max) continue;
        InputPattern x;
        x.bits.resize(L);
        for (int i = 0; i < L; ++i) x.bits[i] = (v >> (L - 1 - i)) & 1u;
        out.push_back(std::move(x));
    }
    return out;
}

std::vector<SymmetricTask> enumerate_tasks(const EnvironmentSpec& spec) {
    spec.validate();
    const int k = spec.category_count();
    std::vector<SymmetricTask> out;
    out.reserve(spec.task_count());
    for (std::uint32_t v = 1; v + 1 < (1u << k); ++v) {
        SymmetricTask t;
        t.ones_min = spec.ones_min;
        t.table.resize(k);
        for (int i = 0; i < k; ++i) t.table[i] = (v >> (k - 1 - i)) & 1u;
        out.push_back(std::move(t));
    }
    return out;
}

double eval_task(const SymmetricTask& task, const InputPattern& x) {
    return task.evaluate(x);
}

std::vector<SymmetricTask> sample_tasks(const EnvironmentSpec& spec, int n, rng::Stream& stream) {
    if (n < 1) throw std::invalid_argument("sample_tasks: n must be >= 1");
    const auto family = enumerate_tasks(spec);
    std::vector<SymmetricTask> out;
    out.reserve(n);
    for (int i = 0; i < n; ++i)
        out.push_back(family[stream.below(family.size())]);
    return out;
}

std::vector<std::uint64_t> category_sizes(const EnvironmentSpec& spec) {
    spec.validate();
    std::vector<std::uint64_t> sizes;
    sizes.reserve(spec.category_count());
    for (int c = spec.ones_min; c <= spec.ones_max; ++c) {
        // binomial(input_length, c)
        std::uint64_t b = 1;
        for (int i = 0; i < c; ++i) b = b * (spec.input_length - i) / (i + 1);
        sizes.push_back(b);
    }
    return sizes;
}

namespace {

// Uniform random pattern with exactly `ones` ones: partial Fisher-Yates
// over the index set.
InputPattern random_pattern_with_ones(int length, int ones, rng::Stream& stream) {
    std::vector<int> idx(length);
    for (int i = 0; i < length; ++i) idx[i] = i;
    InputPattern x;
    x.bits.assign(length, 0);
    for (int i = 0; i < ones; ++i) {
        int j = i + static_cast<int>(stream.below(length - i));
        std::swap(idx[i], idx[j]);
        x.bits[idx[i]] = 1;
    }
    return x;
}

}  // namespace

InputPattern sample_input(const EnvironmentSpec& spec, const InputMeasure& measure, rng::Stream& stream) {
    spec.validate();
    int count;
    if (measure.mode == InputMeasure::Mode::CategoryUniform) {
        count = stream.uniform_int(spec.ones_min, spec.ones_max);
    } else {
        // flat-uniform: pick the category with probability proportional to
        // its size, then uniformly within it.
        const auto sizes = category_sizes(spec);
        std::uint64_t total = 0;
        for (auto s : sizes) total += s;
        std::uint64_t r = stream.below(total);
        int ci = 0;
        while (r >= sizes[ci]) r -= sizes[ci], ++ci;
        count = spec.ones_min + ci;
    }
    return random_pattern_with_ones(spec.input_length, count, stream);
}

TrainingSet build_training_set(const SymmetricTask& task, int m, const EnvironmentSpec& spec,
                               const InputMeasure& measure, rng::Stream& stream) {
    if (m < 1) throw std::invalid_argument("build_training_set: m must be >= 1");
    TrainingSet ts;
    ts.task = task;
    ts.pairs.reserve(m);
    for (int i = 0; i < m; ++i) {
        InputPattern x = sample_input(spec, measure, stream);
        double y = task.evaluate(x);
        ts.pairs.emplace_back(std::move(x), y);
    }
    return ts;
}

double measure_weight(const EnvironmentSpec& spec, const InputMeasure& measure, const InputPattern& x) {
    const auto sizes = category_sizes(spec);
    const int c = x.ones_count();
    if (c < spec.ones_min || c > spec.ones_max)
        throw std::invalid_argument("pattern ones-count outside environment range");
    if (measure.mode == InputMeasure::Mode::CategoryUniform)
        return 1.0 / (static_cast<double>(spec.category_count()) * static_cast<double>(sizes[c - spec.ones_min]));
    std::uint64_t total = 0;
    for (auto s : sizes) total += s;
    return 1.0 / static_cast<double>(total);
}

std::vector<double> measure_weights(const EnvironmentSpec& spec, const InputMeasure& measure) {
    const auto inputs = enumerate_inputs(spec);
    std::vector<double> w;
    w.reserve(inputs.size());
    for (const auto& x : inputs) w.push_back(measure_weight(spec, measure, x));
    return w;
}

}  // namespace replearn
