#include "replearn/experiments.hpp"

#include <algorithm>
#include <cmath>
#include <future>
#include <map>
#include <set>
#include <sstream>
#include <stdexcept>

#include "json_detail.hpp"
#include "replearn/checkpoint.hpp"
#include "replearn/csv.hpp"

namespace replearn {

void SweepGrid::validate() const {
    if (n_values.empty() || m_values.empty() || seeds.empty())
        throw std::invalid_argument("sweep grid sequences must be nonempty");
    for (int n : n_values)
        if (n < 1) throw std::invalid_argument("grid n values must be >= 1");
    for (int m : m_values)
        if (m < 1) throw std::invalid_argument("grid m values must be >= 1");
    for (int s : seeds)
        if (s < 0) throw std::invalid_argument("grid seeds must be >= 0");
}

void SweepConfig::validate() const {
    env.validate();
    grid.validate();
    train.validate();
    if (net.rep_dim < 1) throw std::invalid_argument("rep_dim must be >= 1");
    if (checkpoint_train_gate < 0) throw std::invalid_argument("checkpoint gate must be >= 0");
    if (threads < 1) throw std::invalid_argument("threads must be >= 1");
}

CellResult run_cell(const SweepConfig& cfg, int n, int m, int seed) {
    cfg.validate();
    const std::uint64_t cell_seed = rng::derive_seed(cfg.global_seed, static_cast<std::uint64_t>(n),
                                                     static_cast<std::uint64_t>(m),
                                                     static_cast<std::uint64_t>(seed));
    rng::Stream task_stream(rng::derive_seed(cell_seed, 1));
    rng::Stream data_stream(rng::derive_seed(cell_seed, 2));
    rng::Stream init_stream(rng::derive_seed(cell_seed, 3));

    CellResult cell;
    cell.record.n = n;
    cell.record.m = m;
    cell.record.seed = seed;
    cell.record.measure_mode = cfg.measure.mode;

    cell.tasks = sample_tasks(cfg.env, n, task_stream);
    std::vector<TrainingSet> bundles;
    bundles.reserve(n);
    for (const auto& task : cell.tasks)
        bundles.push_back(build_training_set(task, m, cfg.env, cfg.measure, data_stream));
    MultitaskNetwork netw = init_multitask(cfg.net, cfg.env.input_length, n, init_stream);

    try {
        auto [trained, trace] = train_multitask(std::move(netw), bundles, cfg.train);
        const ErrorReport report = average_true_error(trained, cell.tasks, cfg.env, cfg.measure);
        cell.record.gen_error = report.mean_error;
        cell.record.train_error = trace.final_error;
        cell.record.converged = trace.converged;
        cell.record.epochs = trace.epochs;
        if (trace.final_error <= cfg.checkpoint_train_gate) cell.checkpoint = std::move(trained);
    } catch (const DivergenceError&) {
        cell.record.diverged = true;
        cell.record.gen_error = std::numeric_limits<double>::quiet_NaN();
        cell.record.train_error = std::numeric_limits<double>::quiet_NaN();
    }
    return cell;
}

std::vector<CellResult> run_sweep(const SweepConfig& cfg,
                                  const std::function<void(const CellResult&)>& on_cell) {
    cfg.validate();
    struct Coord {
        int n, m, seed;
    };
    std::vector<Coord> coords;
    coords.reserve(cfg.grid.cell_count());
    for (int n : cfg.grid.n_values)
        for (int m : cfg.grid.m_values)
            for (int s : cfg.grid.seeds) coords.push_back({n, m, s});

    std::vector<CellResult> results;
    results.reserve(coords.size());
    if (cfg.threads <= 1) {
        for (const auto& c : coords) {
            results.push_back(run_cell(cfg, c.n, c.m, c.seed));
            if (on_cell) on_cell(results.back());
        }
        return results;
    }
    // Windowed fan-out: cells are independent, and results are collected
    // in grid order so downstream output is identical to a serial run.
    for (std::size_t base = 0; base < coords.size(); base += cfg.threads) {
        const std::size_t end = std::min(coords.size(), base + cfg.threads);
        std::vector<std::future<CellResult>> window;
        for (std::size_t i = base; i < end; ++i)
            window.push_back(std::async(std::launch::async, [&cfg, c = coords[i]] {
                return run_cell(cfg, c.n, c.m, c.seed);
            }));
        for (auto& f : window) {
            results.push_back(f.get());
            if (on_cell) on_cell(results.back());
        }
    }
    return results;
}

std::vector<SummaryCell> surface_summary(std::span<const SurfaceRecord> records) {
    if (records.empty()) throw std::invalid_argument("no records to summarize");
    std::map<std::pair<int, int>, std::pair<std::vector<double>, int>> groups;
    for (const auto& r : records) {
        auto& [values, excluded] = groups[{r.n, r.m}];
        if (r.diverged || std::isnan(r.gen_error))
            excluded += 1;
        else
            values.push_back(r.gen_error);
    }
    std::vector<SummaryCell> out;
    out.reserve(groups.size());
    for (auto& [key, entry] : groups) {
        auto& [values, excluded] = entry;
        SummaryCell cell;
        cell.n = key.first;
        cell.m = key.second;
        cell.excluded = excluded;
        cell.count = static_cast<int>(values.size());
        if (!values.empty()) {
            // Sorted reductions keep the summary independent of record order.
            std::sort(values.begin(), values.end());
            double s = 0.0;
            for (double v : values) s += v;
            cell.mean_gen_error = s / static_cast<double>(values.size());
            if (values.size() > 1) {
                double ss = 0.0;
                for (double v : values) ss += (v - cell.mean_gen_error) * (v - cell.mean_gen_error);
                cell.stderr_gen_error =
                    std::sqrt(ss / static_cast<double>(values.size() - 1)) /
                    std::sqrt(static_cast<double>(values.size()));
            }
        }
        out.push_back(cell);
    }
    return out;
}

std::string RepArchive::source_id() const {
    return "n" + std::to_string(n) + "_m" + std::to_string(m) + "_s" + std::to_string(seed);
}

std::vector<RepArchive> extract_representations(std::span<const CellResult> cells,
                                                const EnvironmentSpec& env, double threshold) {
    std::vector<RepArchive> archives;
    for (const auto& cell : cells) {
        if (!cell.checkpoint || cell.record.diverged) continue;
        // Re-verify the extraction criterion from the stored network, not
        // the record: the archive must hold on load as well as at creation.
        InputMeasure measure{cell.record.measure_mode};
        const double gen =
            average_true_error(*cell.checkpoint, cell.tasks, env, measure).mean_error;
        if (!(gen < threshold)) continue;
        RepArchive a;
        a.env = env;
        a.n = cell.record.n;
        a.m = cell.record.m;
        a.seed = cell.record.seed;
        a.gen_error = gen;
        a.rep = cell.checkpoint->rep;
        a.source_tasks = cell.tasks;
        a.measure_mode = cell.record.measure_mode;
        archives.push_back(std::move(a));
    }
    return archives;
}

std::vector<RepErrorPoint> rep_error_curve(std::span<const RepArchive> archives,
                                           const EnvironmentSpec& env, const InputMeasure& measure,
                                           const OracleConfig& oracle) {
    std::map<int, std::vector<double>> groups;
    for (const auto& a : archives)
        groups[a.n].push_back(representation_error(a.rep, env, measure, oracle).mean);
    std::vector<RepErrorPoint> curve;
    curve.reserve(groups.size());
    for (auto& [n, values] : groups) {
        std::sort(values.begin(), values.end());
        double s = 0.0;
        for (double v : values) s += v;
        curve.push_back({n, s / static_cast<double>(values.size()), static_cast<int>(values.size())});
    }
    return curve;
}

const char* TransferRecord::mode_name(Mode m) {
    return m == Mode::FrozenRep ? "frozen-rep" : "from-scratch";
}

namespace {

std::uint64_t task_bits_id(const SymmetricTask& task) {
    std::uint64_t v = 0;
    for (auto b : task.table) v = (v << 1) | b;
    return v;
}

}  // namespace

std::vector<TransferRecord> transfer_study(const RepArchive& archive, const EnvironmentSpec& env,
                                           const InputMeasure& measure, const std::vector<int>& m_values,
                                           int seed_count, const NetworkConfig& net_cfg,
                                           const TrainConfig& train_cfg, std::uint64_t study_seed) {
    if (m_values.empty() || seed_count < 1)
        throw std::invalid_argument("transfer study needs m values and seeds");
    std::set<std::string> trained;
    for (const auto& t : archive.source_tasks) trained.insert(t.to_bit_string());
    std::vector<SymmetricTask> held_out;
    for (const auto& t : enumerate_tasks(env))
        if (!trained.count(t.to_bit_string())) held_out.push_back(t);
    if (held_out.empty())
        throw DataError("no held-out tasks: the archive was trained on the whole family");

    std::vector<TransferRecord> records;
    for (const auto& task : held_out) {
        const std::uint64_t tid = task_bits_id(task);
        for (int m : m_values) {
            for (int seed = 0; seed < seed_count; ++seed) {
                // Both modes train on the same data.
                rng::Stream data_stream(
                    rng::derive_seed(study_seed, tid, static_cast<std::uint64_t>(m),
                                     static_cast<std::uint64_t>(seed), 1));
                const TrainingSet ts = build_training_set(task, m, env, measure, data_stream);

                TransferRecord frozen;
                frozen.source = archive.source_id();
                frozen.task_bits = task.to_bit_string();
                frozen.m_novel = m;
                frozen.seed = seed;
                frozen.mode = TransferRecord::Mode::FrozenRep;
                try {
                    OutputNet init = OutputNet::zeros(archive.rep.output_dim());
                    rng::Stream init_stream(
                        rng::derive_seed(study_seed, tid, static_cast<std::uint64_t>(m),
                                         static_cast<std::uint64_t>(seed), 2));
                    for (auto& w : init.w)
                        w = init_stream.uniform(-net_cfg.weight_init_scale, net_cfg.weight_init_scale);
                    auto [out, trace] = train_output_only(archive.rep, ts, train_cfg, std::move(init));
                    frozen.converged = trace.converged;
                    frozen.true_error = true_error(
                        [&](const InputPattern& x) {
                            return out.forward(rep_forward(archive.rep, x));
                        },
                        task, env, measure);
                } catch (const DivergenceError&) {
                    frozen.diverged = true;
                    frozen.true_error = std::numeric_limits<double>::quiet_NaN();
                }
                records.push_back(std::move(frozen));

                TransferRecord scratch;
                scratch.source = archive.source_id();
                scratch.task_bits = task.to_bit_string();
                scratch.m_novel = m;
                scratch.seed = seed;
                scratch.mode = TransferRecord::Mode::FromScratch;
                try {
                    rng::Stream init_stream(
                        rng::derive_seed(study_seed, tid, static_cast<std::uint64_t>(m),
                                         static_cast<std::uint64_t>(seed), 3));
                    MultitaskNetwork netw = init_multitask(net_cfg, env.input_length, 1, init_stream);
                    std::vector<TrainingSet> bundle{ts};
                    auto [trainedNet, trace] = train_multitask(std::move(netw), bundle, train_cfg);
                    scratch.converged = trace.converged;
                    scratch.true_error =
                        average_true_error(trainedNet, std::vector<SymmetricTask>{task}, env, measure)
                            .mean_error;
                } catch (const DivergenceError&) {
                    scratch.diverged = true;
                    scratch.true_error = std::numeric_limits<double>::quiet_NaN();
                }
                records.push_back(std::move(scratch));
            }
        }
    }
    return records;
}

// --- file formats ----------------------------------------------------------

std::string results_csv_header() { return "n,m,seed,gen_error,train_error,converged,epochs"; }

std::string record_to_csv_line(const SurfaceRecord& r) {
    std::string line;
    line += std::to_string(r.n);
    line += ',';
    line += std::to_string(r.m);
    line += ',';
    line += std::to_string(r.seed);
    line += ',';
    line += format_double(r.gen_error);
    line += ',';
    line += format_double(r.train_error);
    line += ',';
    line += r.converged ? '1' : '0';
    line += ',';
    line += std::to_string(r.epochs);
    return line;
}

std::string records_to_csv(std::span<const SurfaceRecord> records) {
    std::string csv = results_csv_header() + "\n";
    for (const auto& r : records) csv += record_to_csv_line(r) + "\n";
    return csv;
}

namespace {

double parse_double_field(const std::string& field, const std::string& where) {
    if (field == "nan") return std::numeric_limits<double>::quiet_NaN();
    std::size_t used = 0;
    double v;
    try {
        v = std::stod(field, &used);
    } catch (const std::exception&) {
        throw DataError(where + ": bad number '" + field + "'");
    }
    if (used != field.size()) throw DataError(where + ": bad number '" + field + "'");
    return v;
}

long parse_long_field(const std::string& field, const std::string& where) {
    std::size_t used = 0;
    long v;
    try {
        v = std::stol(field, &used);
    } catch (const std::exception&) {
        throw DataError(where + ": bad integer '" + field + "'");
    }
    if (used != field.size()) throw DataError(where + ": bad integer '" + field + "'");
    return v;
}

}  // namespace

std::vector<SurfaceRecord> parse_results_csv(const std::string& text, InputMeasure::Mode mode) {
    std::istringstream in(text);
    std::string line;
    if (!std::getline(in, line) || line != results_csv_header())
        throw DataError("results CSV line 1: expected header '" + results_csv_header() + "'");
    std::vector<SurfaceRecord> records;
    int lineno = 1;
    while (std::getline(in, line)) {
        ++lineno;
        if (line.empty()) continue;
        const std::string where = "results CSV line " + std::to_string(lineno);
        const auto fields = split_csv_line(line);
        if (fields.size() != 7) throw DataError(where + ": expected 7 fields");
        SurfaceRecord r;
        r.n = static_cast<int>(parse_long_field(fields[0], where));
        r.m = static_cast<int>(parse_long_field(fields[1], where));
        r.seed = static_cast<int>(parse_long_field(fields[2], where));
        r.gen_error = parse_double_field(fields[3], where);
        r.train_error = parse_double_field(fields[4], where);
        if (fields[5] != "0" && fields[5] != "1") throw DataError(where + ": bad converged flag");
        r.converged = fields[5] == "1";
        r.epochs = parse_long_field(fields[6], where);
        r.diverged = std::isnan(r.gen_error);
        r.measure_mode = mode;
        records.push_back(r);
    }
    if (records.empty()) throw DataError("results CSV contains no records");
    return records;
}

std::string summary_to_csv(std::span<const SummaryCell> summary) {
    std::string csv = "n,m,mean_gen_error,stderr_gen_error,count,excluded\n";
    for (const auto& c : summary) {
        csv += std::to_string(c.n) + "," + std::to_string(c.m) + "," + format_double(c.mean_gen_error) +
               "," + format_double(c.stderr_gen_error) + "," + std::to_string(c.count) + "," +
               std::to_string(c.excluded) + "\n";
    }
    return csv;
}

std::string rep_error_curve_to_csv(std::span<const RepErrorPoint> curve) {
    std::string csv = "n,mean_rep_error,archives\n";
    for (const auto& p : curve)
        csv += std::to_string(p.n) + "," + format_double(p.mean_rep_error) + "," +
               std::to_string(p.archive_count) + "\n";
    return csv;
}

std::string transfer_records_to_csv(std::span<const TransferRecord> records) {
    std::string csv = "source,task,m_novel,seed,mode,true_error,converged\n";
    for (const auto& r : records) {
        csv += r.source + "," + r.task_bits + "," + std::to_string(r.m_novel) + "," +
               std::to_string(r.seed) + "," + TransferRecord::mode_name(r.mode) + "," +
               format_double(r.true_error) + "," + (r.converged ? "1" : "0") + "\n";
    }
    return csv;
}

std::string trace_to_csv(const TrainTrace& trace) {
    std::string csv = "epoch,empirical_error\n";
    for (std::size_t i = 0; i < trace.errors.size(); ++i)
        csv += std::to_string(i + 1) + "," + format_double(trace.errors[i]) + "\n";
    return csv;
}

std::string sweep_config_to_manifest(const SweepConfig& cfg) {
    std::vector<int> hidden = cfg.net.hidden_sizes;
    std::string s;
    s += "# sweep manifest: reload with --config to reproduce this run exactly\n";
    s += "input-length = " + std::to_string(cfg.env.input_length) + "\n";
    s += "ones-min = " + std::to_string(cfg.env.ones_min) + "\n";
    s += "ones-max = " + std::to_string(cfg.env.ones_max) + "\n";
    s += std::string("measure = ") + InputMeasure::mode_name(cfg.measure.mode) + "\n";
    s += "hidden = " + format_int_list(hidden) + "\n";
    s += "rep-dim = " + std::to_string(cfg.net.rep_dim) + "\n";
    s += "init-scale = " + format_double(cfg.net.weight_init_scale) + "\n";
    s += "learning-rate = " + format_double(cfg.train.learning_rate) + "\n";
    s += "max-epochs = " + std::to_string(cfg.train.max_epochs) + "\n";
    s += "target-error = " + format_double(cfg.train.target_empirical_error) + "\n";
    s += "train-seed = " + std::to_string(cfg.train.seed) + "\n";
    s += "n-values = " + format_int_list(cfg.grid.n_values) + "\n";
    s += "m-values = " + format_int_list(cfg.grid.m_values) + "\n";
    s += "seeds = " + format_int_list(cfg.grid.seeds) + "\n";
    s += "global-seed = " + std::to_string(cfg.global_seed) + "\n";
    s += "checkpoint-gate = " + format_double(cfg.checkpoint_train_gate) + "\n";
    s += "threads = " + std::to_string(cfg.threads) + "\n";
    return s;
}

namespace {

std::string trim(const std::string& s) {
    std::size_t b = s.find_first_not_of(" \t\r");
    if (b == std::string::npos) return "";
    std::size_t e = s.find_last_not_of(" \t\r");
    return s.substr(b, e - b + 1);
}

}  // namespace

SweepConfig sweep_config_from_manifest(const std::string& text) {
    SweepConfig cfg;
    std::istringstream in(text);
    std::string line;
    int lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        const std::string t = trim(line);
        if (t.empty() || t[0] == '#') continue;
        const std::size_t eq = t.find('=');
        if (eq == std::string::npos)
            throw DataError("manifest line " + std::to_string(lineno) + ": expected key = value");
        const std::string key = trim(t.substr(0, eq));
        const std::string value = trim(t.substr(eq + 1));
        try {
            if (key == "input-length")
                cfg.env.input_length = std::stoi(value);
            else if (key == "ones-min")
                cfg.env.ones_min = std::stoi(value);
            else if (key == "ones-max")
                cfg.env.ones_max = std::stoi(value);
            else if (key == "measure")
                cfg.measure.mode = InputMeasure::parse_mode(value);
            else if (key == "hidden")
                cfg.net.hidden_sizes = parse_int_list(value);
            else if (key == "rep-dim")
                cfg.net.rep_dim = std::stoi(value);
            else if (key == "init-scale")
                cfg.net.weight_init_scale = std::stod(value);
            else if (key == "learning-rate")
                cfg.train.learning_rate = std::stod(value);
            else if (key == "max-epochs")
                cfg.train.max_epochs = std::stol(value);
            else if (key == "target-error")
                cfg.train.target_empirical_error = std::stod(value);
            else if (key == "train-seed")
                cfg.train.seed = std::stoull(value);
            else if (key == "n-values")
                cfg.grid.n_values = parse_int_list(value);
            else if (key == "m-values")
                cfg.grid.m_values = parse_int_list(value);
            else if (key == "seeds")
                cfg.grid.seeds = parse_int_list(value);
            else if (key == "global-seed")
                cfg.global_seed = std::stoull(value);
            else if (key == "checkpoint-gate")
                cfg.checkpoint_train_gate = std::stod(value);
            else if (key == "threads")
                cfg.threads = std::stoi(value);
            else
                throw DataError("manifest line " + std::to_string(lineno) + ": unknown key '" + key + "'");
        } catch (const DataError&) {
            throw;
        } catch (const std::exception&) {
            throw DataError("manifest line " + std::to_string(lineno) + ": bad value '" + value + "'");
        }
    }
    cfg.validate();
    return cfg;
}

std::string cell_checkpoint_to_json(const CellResult& cell, const EnvironmentSpec& env) {
    if (!cell.checkpoint) throw std::invalid_argument("cell has no checkpointed network");
    nlohmann::json j;
    j["format"] = "multitask-cell-v1";
    j["env"] = {{"input_length", env.input_length}, {"ones_min", env.ones_min}, {"ones_max", env.ones_max}};
    j["measure"] = InputMeasure::mode_name(cell.record.measure_mode);
    j["n"] = cell.record.n;
    j["m"] = cell.record.m;
    j["seed"] = cell.record.seed;
    j["gen_error"] = cell.record.gen_error;
    j["train_error"] = cell.record.train_error;
    j["converged"] = cell.record.converged;
    j["epochs"] = cell.record.epochs;
    nlohmann::json tasks = nlohmann::json::array();
    for (const auto& t : cell.tasks) tasks.push_back(t.to_bit_string());
    j["tasks"] = std::move(tasks);
    j["rep"] = detail::rep_to_json_obj(cell.checkpoint->rep);
    nlohmann::json outs = nlohmann::json::array();
    for (const auto& o : cell.checkpoint->outputs) outs.push_back(detail::output_to_json_obj(o));
    j["outputs"] = std::move(outs);
    return j.dump(1) + "\n";
}

CellResult cell_checkpoint_from_json(const std::string& text, EnvironmentSpec* env_out) {
    nlohmann::json j;
    try {
        j = nlohmann::json::parse(text);
    } catch (const nlohmann::json::exception& e) {
        throw DataError(std::string("bad cell checkpoint: ") + e.what());
    }
    try {
        if (j.at("format").get<std::string>() != "multitask-cell-v1")
            throw DataError("unknown cell checkpoint format");
        CellResult cell;
        if (env_out) {
            env_out->input_length = j.at("env").at("input_length").get<int>();
            env_out->ones_min = j.at("env").at("ones_min").get<int>();
            env_out->ones_max = j.at("env").at("ones_max").get<int>();
        }
        const int ones_min = j.at("env").at("ones_min").get<int>();
        cell.record.measure_mode = InputMeasure::parse_mode(j.at("measure").get<std::string>());
        cell.record.n = j.at("n").get<int>();
        cell.record.m = j.at("m").get<int>();
        cell.record.seed = j.at("seed").get<int>();
        cell.record.gen_error = j.at("gen_error").get<double>();
        cell.record.train_error = j.at("train_error").get<double>();
        cell.record.converged = j.at("converged").get<bool>();
        cell.record.epochs = j.at("epochs").get<long>();
        for (const auto& t : j.at("tasks"))
            cell.tasks.push_back(SymmetricTask::from_bit_string(t.get<std::string>(), ones_min));
        MultitaskNetwork netw;
        netw.rep = detail::rep_from_json_obj(j.at("rep"));
        for (const auto& o : j.at("outputs")) netw.outputs.push_back(detail::output_from_json_obj(o));
        if (static_cast<int>(netw.outputs.size()) != cell.record.n)
            throw DataError("cell checkpoint output count mismatch");
        cell.checkpoint = std::move(netw);
        return cell;
    } catch (const nlohmann::json::exception& e) {
        throw DataError(std::string("bad cell checkpoint: ") + e.what());
    }
}

std::string archive_to_json(const RepArchive& archive) {
    nlohmann::json j;
    j["format"] = "rep-archive-v1";
    j["env"] = {{"input_length", archive.env.input_length},
                {"ones_min", archive.env.ones_min},
                {"ones_max", archive.env.ones_max}};
    j["n"] = archive.n;
    j["m"] = archive.m;
    j["seed"] = archive.seed;
    j["gen_error"] = archive.gen_error;
    j["measure"] = InputMeasure::mode_name(archive.measure_mode);
    nlohmann::json tasks = nlohmann::json::array();
    for (const auto& t : archive.source_tasks) tasks.push_back(t.to_bit_string());
    j["source_tasks"] = std::move(tasks);
    j["rep"] = detail::rep_to_json_obj(archive.rep);
    return j.dump(1) + "\n";
}

RepArchive archive_from_json(const std::string& text) {
    nlohmann::json j;
    try {
        j = nlohmann::json::parse(text);
    } catch (const nlohmann::json::exception& e) {
        throw DataError(std::string("bad archive: ") + e.what());
    }
    try {
        if (j.at("format").get<std::string>() != "rep-archive-v1")
            throw DataError("unknown archive format");
        RepArchive a;
        a.env.input_length = j.at("env").at("input_length").get<int>();
        a.env.ones_min = j.at("env").at("ones_min").get<int>();
        a.env.ones_max = j.at("env").at("ones_max").get<int>();
        a.n = j.at("n").get<int>();
        a.m = j.at("m").get<int>();
        a.seed = j.at("seed").get<int>();
        a.gen_error = j.at("gen_error").get<double>();
        a.measure_mode = InputMeasure::parse_mode(j.at("measure").get<std::string>());
        for (const auto& t : j.at("source_tasks"))
            a.source_tasks.push_back(SymmetricTask::from_bit_string(t.get<std::string>(), a.env.ones_min));
        a.rep = detail::rep_from_json_obj(j.at("rep"));
        return a;
    } catch (const nlohmann::json::exception& e) {
        throw DataError(std::string("bad archive: ") + e.what());
    }
}

}  // namespace replearn
