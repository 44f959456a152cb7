#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <map>
#include <set>
#include <stdexcept>

#include "replearn/environment.hpp"

using namespace replearn;

namespace {

// Brute-force oracle: walk all 2^L bit vectors and count the ones in
// each admissible category. Independent of enumerate_inputs.
std::map<int, int> brute_force_category_counts(int length, int ones_min, int ones_max) {
    std::map<int, int> counts;
    for (std::uint32_t v = 0; v < (1u << length); ++v) {
        const int ones = __builtin_popcount(v);
        if (ones >= ones_min && ones <= ones_max) counts[ones] += 1;
    }
    return counts;
}

}  // namespace

TEST_CASE("enumerate_inputs: default spec yields the 385 patterns") {
    EnvironmentSpec spec;
    const auto inputs = enumerate_inputs(spec);
    CHECK(inputs.size() == 385);

    // Counts per category, frozen from the brute-force oracle.
    const auto oracle = brute_force_category_counts(10, 1, 4);
    std::map<int, int> seen;
    for (const auto& x : inputs) seen[x.ones_count()] += 1;
    CHECK(seen == oracle);
    CHECK(seen[1] == 10);
    CHECK(seen[2] == 45);
    CHECK(seen[3] == 120);
    CHECK(seen[4] == 210);
}

TEST_CASE("enumerate_inputs: lexicographic order, no duplicates") {
    EnvironmentSpec spec;
    const auto inputs = enumerate_inputs(spec);
    std::set<std::string> distinct;
    std::string prev;
    for (const auto& x : inputs) {
        const std::string s = x.to_bit_string();
        CHECK(s.size() == 10);
        if (!prev.empty()) CHECK(prev < s);
        prev = s;
        distinct.insert(s);
    }
    CHECK(distinct.size() == inputs.size());
}

TEST_CASE("enumerate_inputs: one-hot space") {
    EnvironmentSpec spec;
    spec.ones_min = spec.ones_max = 1;
    const auto inputs = enumerate_inputs(spec);
    REQUIRE(inputs.size() == 10);
    for (const auto& x : inputs) CHECK(x.ones_count() == 1);
}

TEST_CASE("enumerate_inputs: invalid specs rejected") {
    EnvironmentSpec spec;
    spec.ones_min = 5;
    spec.ones_max = 4;
    CHECK_THROWS_AS(enumerate_inputs(spec), std::invalid_argument);
    spec = EnvironmentSpec{};
    spec.ones_max = 11;
    CHECK_THROWS_AS(enumerate_inputs(spec), std::invalid_argument);
    spec = EnvironmentSpec{};
    spec.ones_min = 0;
    CHECK_THROWS_AS(enumerate_inputs(spec), std::invalid_argument);
}

TEST_CASE("enumerate_tasks: the fourteen non-constant symmetric tasks") {
    EnvironmentSpec spec;
    const auto tasks = enumerate_tasks(spec);
    CHECK(tasks.size() == 14);
    CHECK(spec.task_count() == 14);

    std::set<std::string> tables;
    for (const auto& t : tasks) tables.insert(t.to_bit_string());
    CHECK(tables.size() == 14);
    CHECK(tables.count("0000") == 0);
    CHECK(tables.count("1111") == 0);
    CHECK(tables.count("1010") == 1);  // parity

    // Canonical order: table read as a 4-bit integer, ascending.
    CHECK(tasks.front().to_bit_string() == "0001");
    CHECK(tasks.back().to_bit_string() == "1110");
}

TEST_CASE("enumerate_tasks: symmetry within every category") {
    EnvironmentSpec spec;
    const auto tasks = enumerate_tasks(spec);
    const auto inputs = enumerate_inputs(spec);
    for (const auto& t : tasks) {
        std::map<int, double> value_by_count;
        for (const auto& x : inputs) {
            const double y = eval_task(t, x);
            auto [it, fresh] = value_by_count.emplace(x.ones_count(), y);
            if (!fresh) CHECK(it->second == y);
        }
    }
}

TEST_CASE("eval_task: table lookups and permutation invariance") {
    const auto parity = SymmetricTask::from_bit_string("1010");
    InputPattern three_ones = InputPattern::from_bit_string("1110000000");
    CHECK(eval_task(parity, three_ones) == 1.0);

    const auto t0111 = SymmetricTask::from_bit_string("0111");
    CHECK(eval_task(t0111, InputPattern::from_bit_string("0000100000")) == 0.0);

    // Permuting the bits never changes the output.
    InputPattern a = InputPattern::from_bit_string("1100000000");
    InputPattern b = InputPattern::from_bit_string("0000000011");
    for (const auto& t : enumerate_tasks(EnvironmentSpec{})) CHECK(eval_task(t, a) == eval_task(t, b));

    // Ones-count outside the table domain.
    InputPattern five = InputPattern::from_bit_string("1111100000");
    CHECK_THROWS_AS(eval_task(parity, five), std::out_of_range);
}

TEST_CASE("sample_tasks: support, determinism and uniformity") {
    EnvironmentSpec spec;
    const auto family = enumerate_tasks(spec);

    rng::Stream s1(42);
    const auto one = sample_tasks(spec, 1, s1);
    REQUIRE(one.size() == 1);
    CHECK(std::count(family.begin(), family.end(), one[0]) == 1);

    rng::Stream s2(123), s3(123);
    CHECK(sample_tasks(spec, 50, s2) == sample_tasks(spec, 50, s3));

    CHECK_THROWS_AS(sample_tasks(spec, 0, s1), std::invalid_argument);

    // Frequency test: 10,000 draws, each task within 3 standard errors of 1/14.
    rng::Stream s4(2024);
    const int draws = 10000;
    std::map<std::string, int> freq;
    for (const auto& t : sample_tasks(spec, draws, s4)) freq[t.to_bit_string()] += 1;
    const double p = 1.0 / 14.0;
    const double se = std::sqrt(p * (1 - p) / draws);
    for (const auto& t : family) {
        const double f = freq[t.to_bit_string()] / static_cast<double>(draws);
        CHECK(std::abs(f - p) <= 3 * se);
    }
}

TEST_CASE("sample_input: category-uniform frequencies") {
    EnvironmentSpec spec;
    InputMeasure measure{InputMeasure::Mode::CategoryUniform};
    rng::Stream stream(7);
    const int draws = 40000;
    std::map<int, int> freq;
    for (int i = 0; i < draws; ++i) {
        const auto x = sample_input(spec, measure, stream);
        REQUIRE(x.bits.size() == 10);
        const int ones = x.ones_count();
        REQUIRE(ones >= 1);
        REQUIRE(ones <= 4);
        freq[ones] += 1;
    }
    const double p = 0.25;
    const double se = std::sqrt(p * (1 - p) / draws);
    for (int c = 1; c <= 4; ++c)
        CHECK(std::abs(freq[c] / static_cast<double>(draws) - p) <= 3 * se);
}

TEST_CASE("sample_input: flat-uniform covers the 385 patterns uniformly") {
    EnvironmentSpec spec;
    InputMeasure measure{InputMeasure::Mode::FlatUniform};
    rng::Stream stream(11);
    const int draws = 77000;
    std::map<std::string, int> freq;
    for (int i = 0; i < draws; ++i) freq[sample_input(spec, measure, stream).to_bit_string()] += 1;
    CHECK(freq.size() == 385);
    const double p = 1.0 / 385.0;
    const double se = std::sqrt(p * (1 - p) / draws);
    for (const auto& x : enumerate_inputs(spec)) {
        const double f = freq[x.to_bit_string()] / static_cast<double>(draws);
        // 385 simultaneous checks: allow 4 standard errors per pattern.
        CHECK(std::abs(f - p) <= 4 * se);
    }
}

TEST_CASE("measure weights: total mass 1 in both modes") {
    EnvironmentSpec spec;
    for (auto mode : {InputMeasure::Mode::CategoryUniform, InputMeasure::Mode::FlatUniform}) {
        const auto w = measure_weights(spec, InputMeasure{mode});
        REQUIRE(w.size() == 385);
        double total = 0.0;
        for (double v : w) total += v;
        CHECK(std::abs(total - 1.0) <= 1e-12);
    }
    // Category-uniform puts 1/4 on each category.
    const auto w = measure_weights(spec, InputMeasure{InputMeasure::Mode::CategoryUniform});
    const auto inputs = enumerate_inputs(spec);
    std::map<int, double> mass;
    for (std::size_t i = 0; i < inputs.size(); ++i) mass[inputs[i].ones_count()] += w[i];
    for (int c = 1; c <= 4; ++c) CHECK(std::abs(mass[c] - 0.25) <= 1e-12);
}

TEST_CASE("build_training_set: labels, determinism, edge cases") {
    EnvironmentSpec spec;
    InputMeasure measure;
    const auto parity = SymmetricTask::from_bit_string("1010");

    rng::Stream s1(5);
    const auto single = build_training_set(parity, 1, spec, measure, s1);
    REQUIRE(single.pairs.size() == 1);
    CHECK(single.pairs[0].second == eval_task(parity, single.pairs[0].first));

    rng::Stream s2(99);
    const auto ts = build_training_set(parity, 200, spec, measure, s2);
    for (const auto& [x, y] : ts.pairs) CHECK(y == eval_task(parity, x));

    rng::Stream s3(1234), s4(1234);
    const auto a = build_training_set(parity, 64, spec, measure, s3);
    const auto b = build_training_set(parity, 64, spec, measure, s4);
    REQUIRE(a.pairs.size() == b.pairs.size());
    for (std::size_t i = 0; i < a.pairs.size(); ++i) {
        CHECK(a.pairs[i].first == b.pairs[i].first);
        CHECK(a.pairs[i].second == b.pairs[i].second);
    }

    CHECK_THROWS_AS(build_training_set(parity, 0, spec, measure, s1), std::invalid_argument);
}

TEST_CASE("task/pattern bit-string round trips") {
    const auto tasks = enumerate_tasks(EnvironmentSpec{});
    for (const auto& t : tasks) CHECK(SymmetricTask::from_bit_string(t.to_bit_string()) == t);
    CHECK_THROWS_AS(SymmetricTask::from_bit_string("0000"), std::invalid_argument);
    CHECK_THROWS_AS(SymmetricTask::from_bit_string("10x0"), std::invalid_argument);

    const auto inputs = enumerate_inputs(EnvironmentSpec{});
    CHECK(InputPattern::from_bit_string(inputs[17].to_bit_string()) == inputs[17]);
}

TEST_CASE("smaller parameterized environment agrees with its brute-force oracle") {
    EnvironmentSpec spec;
    spec.input_length = 6;
    spec.ones_min = 1;
    spec.ones_max = 3;
    const auto inputs = enumerate_inputs(spec);
    const auto oracle = brute_force_category_counts(6, 1, 3);
    int total = 0;
    for (const auto& [cat, count] : oracle) total += count;
    CHECK(static_cast<int>(inputs.size()) == total);
    CHECK(spec.task_count() == 6);
    CHECK(enumerate_tasks(spec).size() == 6);
}
