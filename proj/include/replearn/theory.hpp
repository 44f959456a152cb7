#pragma once

#include <string>
#include <vector>

namespace replearn {

/// Inputs to the sample-complexity calculators. The c_* values are the
/// undetermined constants inside every O(.); all outputs are "up to
/// undetermined constants" and default them to 1.
struct BoundInputs {
    double rep_weights = 0.0;     // W_R
    double output_weights = 0.0;  // W_O
    int tasks = 1;                // n
    double epsilon = 0.1;
    double delta = 0.05;
    double c_cap = 1.0;
    double c_sample = 1.0;

    void validate() const;
};

struct BoundReport {
    double m_bound = 0.0;  // examples per task
    double a_term = 0.0;   // m_bound == a_term + b_term / n, exactly
    double b_term = 0.0;
    double n_bound = 0.0;  // number of tasks
    double gain = 0.0;     // n-task gain, 1 <= gain <= n
    double novel_task_m_bound = 0.0;
};

/// Per-task capacity logarithm c_cap * (W_O + W_R/n) * ln(1/eps).
double capacity_log_composite(double rep_weights, double output_weights, int tasks, double epsilon,
                              double c_cap);

struct MBound {
    double value = 0.0;
    double a_term = 0.0;
    double b_term = 0.0;
};

/// Examples per task for generalisation across n tasks:
/// c_sample/eps^2 * [(W_O + W_R/n) ln(1/eps) + (1/n) ln(1/delta)],
/// decomposed as a_term + b_term/n.
MBound m_bound(const BoundInputs& in);

/// Number of tasks needed before the learnt representation transfers:
/// c_sample/eps^2 * (c_cap * W_R * ln(1/eps) + ln(1/delta)).
double n_bound(double rep_weights, double epsilon, double delta, double c_cap, double c_sample);

/// (W_O + W_R) / (W_O + W_R/n); equals 1 at n = 1 and approaches n when
/// the representation dominates.
double n_task_gain(double rep_weights, double output_weights, int tasks);

/// Examples needed for a novel task once the representation is fixed:
/// c_sample/eps^2 * (W_O ln(1/eps) + ln(1/delta)). Independent of W_R.
double novel_task_m_bound(double output_weights, double epsilon, double delta, double c_sample);

/// All the above for one n.
BoundReport bound_report(const BoundInputs& in);

/// CSV table over a range of n values, with the constants noted in a
/// leading comment. Columns: n,m_bound,a_term,b_term,gain,novel_task_m_bound.
std::string bounds_table_csv(const BoundInputs& base, const std::vector<int>& n_values);

}  // namespace replearn
