#include "replearn/theory.hpp"

#include <cmath>
#include <cstdio>
#include <stdexcept>

namespace replearn {

void BoundInputs::validate() const {
    if (rep_weights <= 0 || output_weights <= 0)
        throw std::invalid_argument("weight counts must be positive");
    if (tasks < 1) throw std::invalid_argument("n must be >= 1");
    if (!(epsilon > 0 && epsilon < 1)) throw std::invalid_argument("epsilon must lie in (0,1)");
    if (!(delta > 0 && delta < 1)) throw std::invalid_argument("delta must lie in (0,1)");
    if (c_cap <= 0 || c_sample <= 0) throw std::invalid_argument("constants must be positive");
}

double capacity_log_composite(double rep_weights, double output_weights, int tasks, double epsilon,
                              double c_cap) {
    BoundInputs in{rep_weights, output_weights, tasks, epsilon, 0.5, c_cap, 1.0};
    in.validate();
    return c_cap * (output_weights + rep_weights / tasks) * std::log(1.0 / epsilon);
}

MBound m_bound(const BoundInputs& in) {
    in.validate();
    const double log_eps = std::log(1.0 / in.epsilon);
    const double log_delta = std::log(1.0 / in.delta);
    const double per_eps2 = in.c_sample / (in.epsilon * in.epsilon);
    MBound out;
    out.a_term = per_eps2 * in.output_weights * log_eps;
    out.b_term = per_eps2 * (in.rep_weights * log_eps + log_delta);
    out.value = out.a_term + out.b_term / in.tasks;
    return out;
}

double n_bound(double rep_weights, double epsilon, double delta, double c_cap, double c_sample) {
    BoundInputs in{rep_weights, 1.0, 1, epsilon, delta, c_cap, c_sample};
    in.validate();
    return c_sample / (epsilon * epsilon) * (c_cap * rep_weights * std::log(1.0 / epsilon) + std::log(1.0 / delta));
}

double n_task_gain(double rep_weights, double output_weights, int tasks) {
    if (rep_weights <= 0 || output_weights <= 0)
        throw std::invalid_argument("weight counts must be positive");
    if (tasks < 1) throw std::invalid_argument("n must be >= 1");
    return (output_weights + rep_weights) / (output_weights + rep_weights / tasks);
}

double novel_task_m_bound(double output_weights, double epsilon, double delta, double c_sample) {
    BoundInputs in{1.0, output_weights, 1, epsilon, delta, 1.0, c_sample};
    in.validate();
    return c_sample / (epsilon * epsilon) * (output_weights * std::log(1.0 / epsilon) + std::log(1.0 / delta));
}

BoundReport bound_report(const BoundInputs& in) {
    in.validate();
    BoundReport r;
    const MBound m = m_bound(in);
    r.m_bound = m.value;
    r.a_term = m.a_term;
    r.b_term = m.b_term;
    r.n_bound = n_bound(in.rep_weights, in.epsilon, in.delta, in.c_cap, in.c_sample);
    r.gain = n_task_gain(in.rep_weights, in.output_weights, in.tasks);
    r.novel_task_m_bound = novel_task_m_bound(in.output_weights, in.epsilon, in.delta, in.c_sample);
    return r;
}

std::string bounds_table_csv(const BoundInputs& base, const std::vector<int>& n_values) {
    if (n_values.empty()) throw std::invalid_argument("need at least one n value");
    char buf[256];
    std::string csv;
    std::snprintf(buf, sizeof(buf),
                  "# bounds up to undetermined constants: W_R=%g W_O=%g eps=%g delta=%g c_cap=%g c_sample=%g\n",
                  base.rep_weights, base.output_weights, base.epsilon, base.delta, base.c_cap, base.c_sample);
    csv += buf;
    csv += "n,m_bound,a_term,b_term,gain,novel_task_m_bound\n";
    for (int n : n_values) {
        BoundInputs in = base;
        in.tasks = n;
        const BoundReport r = bound_report(in);
        std::snprintf(buf, sizeof(buf), "%d,%.17g,%.17g,%.17g,%.17g,%.17g\n", n, r.m_bound, r.a_term,
                      r.b_term, r.gain, r.novel_task_m_bound);
        csv += buf;
    }
    return csv;
}

}  // namespace replearn
