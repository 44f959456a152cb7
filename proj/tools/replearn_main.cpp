// replearn: multitask representation learning on symmetric Boolean
// functions. Subcommands drive the sweep, the figure exports and the
// closed-form sample-complexity tables.

#include <CLI11.hpp>

#include <algorithm>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>

#include "replearn/checkpoint.hpp"
#include "replearn/csv.hpp"
#include "replearn/environment.hpp"
#include "replearn/evaluation.hpp"
#include "replearn/experiments.hpp"
#include "replearn/svg.hpp"
#include "replearn/theory.hpp"

namespace fs = std::filesystem;
using namespace replearn;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitUsage = 1;
constexpr int kExitData = 2;

std::string default_out_dir() {
    const char* env = std::getenv("REPLEARN_OUT_DIR");
    return env && *env ? env : ".";
}

struct SweepFlags {
    std::string config_path;
    std::string out_dir = default_out_dir();
    // optional overrides; applied only when the flag was given
    int input_length = 0, ones_min = 0, ones_max = 0, rep_dim = 0, threads = 0;
    std::string measure, hidden, n_values, m_values, seeds;
    double init_scale = 0, learning_rate = 0, target_error = 0, checkpoint_gate = 0;
    long max_epochs = 0;
    std::uint64_t global_seed = 0;
};

int cmd_sweep(const CLI::App& cmd, SweepFlags& f) {
    SweepConfig cfg = sweep_config_from_manifest(load_text_file(f.config_path));
    if (cmd.count("--input-length")) cfg.env.input_length = f.input_length;
    if (cmd.count("--ones-min")) cfg.env.ones_min = f.ones_min;
    if (cmd.count("--ones-max")) cfg.env.ones_max = f.ones_max;
    if (cmd.count("--measure")) cfg.measure.mode = InputMeasure::parse_mode(f.measure);
    if (cmd.count("--hidden")) cfg.net.hidden_sizes = parse_int_list(f.hidden);
    if (cmd.count("--rep-dim")) cfg.net.rep_dim = f.rep_dim;
    if (cmd.count("--init-scale")) cfg.net.weight_init_scale = f.init_scale;
    if (cmd.count("--learning-rate")) cfg.train.learning_rate = f.learning_rate;
    if (cmd.count("--max-epochs")) cfg.train.max_epochs = f.max_epochs;
    if (cmd.count("--target-error")) cfg.train.target_empirical_error = f.target_error;
    if (cmd.count("--n-values")) cfg.grid.n_values = parse_int_list(f.n_values);
    if (cmd.count("--m-values")) cfg.grid.m_values = parse_int_list(f.m_values);
    if (cmd.count("--seeds")) cfg.grid.seeds = parse_int_list(f.seeds);
    if (cmd.count("--global-seed")) cfg.global_seed = f.global_seed;
    if (cmd.count("--checkpoint-gate")) cfg.checkpoint_train_gate = f.checkpoint_gate;
    if (cmd.count("--threads")) cfg.threads = f.threads;
    cfg.validate();

    fs::create_directories(f.out_dir);
    const fs::path out(f.out_dir);
    const fs::path ckpt_dir = out / "checkpoints";
    fs::create_directories(ckpt_dir);

    // Effective config first, so an interrupted run is reproducible.
    save_text_file((out / "manifest.txt").string(), sweep_config_to_manifest(cfg));

    std::ofstream results((out / "results.csv").string(), std::ios::binary);
    if (!results) throw std::runtime_error("cannot write results.csv in " + f.out_dir);
    results << results_csv_header() << "\n" << std::flush;

    std::size_t done = 0;
    const std::size_t total = cfg.grid.cell_count();
    run_sweep(cfg, [&](const CellResult& cell) {
        results << record_to_csv_line(cell.record) << "\n" << std::flush;
        if (cell.checkpoint) {
            const std::string name = "cell_n" + std::to_string(cell.record.n) + "_m" +
                                     std::to_string(cell.record.m) + "_s" +
                                     std::to_string(cell.record.seed) + ".json";
            save_text_file((ckpt_dir / name).string(), cell_checkpoint_to_json(cell, cfg.env));
        }
        ++done;
        std::cerr << "[" << done << "/" << total << "] n=" << cell.record.n << " m=" << cell.record.m
                  << " seed=" << cell.record.seed << " gen=" << format_double(cell.record.gen_error)
                  << (cell.record.diverged ? " (diverged)" : "") << "\n";
    });
    std::cout << "wrote " << (out / "results.csv").string() << " (" << total << " records)\n";
    return kExitOk;
}

int cmd_surface_plot(const std::string& results_path, const std::string& out_dir) {
    const auto records =
        parse_results_csv(load_text_file(results_path), InputMeasure::Mode::CategoryUniform);
    const auto summary = surface_summary(records);
    fs::create_directories(out_dir);
    const fs::path out(out_dir);
    save_text_file((out / "summary.csv").string(), summary_to_csv(summary));
    save_text_file((out / "surface.svg").string(), svg_heatmap(summary));
    std::cout << "wrote " << (out / "summary.csv").string() << " and " << (out / "surface.svg").string()
              << "\n";
    return kExitOk;
}

std::vector<fs::path> sorted_json_files(const std::string& dir) {
    if (!fs::is_directory(dir)) throw DataError("not a directory: " + dir);
    std::vector<fs::path> paths;
    for (const auto& entry : fs::directory_iterator(dir))
        if (entry.is_regular_file() && entry.path().extension() == ".json") paths.push_back(entry.path());
    std::sort(paths.begin(), paths.end());
    return paths;
}

int cmd_extract_reps(const std::string& ckpt_dir, const std::string& out_dir, double threshold) {
    const auto paths = sorted_json_files(ckpt_dir);
    if (paths.empty()) throw DataError("no checkpoint files in " + ckpt_dir);
    std::vector<CellResult> cells;
    EnvironmentSpec env;
    for (const auto& p : paths) {
        EnvironmentSpec cell_env;
        cells.push_back(cell_checkpoint_from_json(load_text_file(p.string()), &cell_env));
        env = cell_env;
    }
    const auto archives = extract_representations(cells, env, threshold);
    fs::create_directories(out_dir);
    for (const auto& a : archives)
        save_text_file((fs::path(out_dir) / ("rep_" + a.source_id() + ".json")).string(),
                       archive_to_json(a));
    std::cout << "archived " << archives.size() << " of " << cells.size()
              << " checkpoints (threshold " << format_double(threshold) << ")\n";
    return kExitOk;
}

int cmd_rep_error(const std::string& archive_dir, const std::string& out_dir, const OracleConfig& oracle,
                  const std::string& measure_name) {
    const auto paths = sorted_json_files(archive_dir);
    if (paths.empty()) throw DataError("no archives in " + archive_dir);
    std::vector<RepArchive> archives;
    for (const auto& p : paths) archives.push_back(archive_from_json(load_text_file(p.string())));
    const InputMeasure measure{InputMeasure::parse_mode(measure_name)};
    const auto curve = rep_error_curve(archives, archives.front().env, measure, oracle);
    fs::create_directories(out_dir);
    const fs::path out = fs::path(out_dir) / "rep_error.csv";
    save_text_file(out.string(), rep_error_curve_to_csv(curve));
    std::cout << "wrote " << out.string() << "\n";
    return kExitOk;
}

int cmd_rep_scatter(const std::string& archive_path, const std::string& svg_path,
                    const std::string& csv_path) {
    const std::string text = load_text_file(archive_path);
    EnvironmentSpec env;
    RepresentationNet rep;
    if (text.find("rep-archive-v1") != std::string::npos) {
        RepArchive a = archive_from_json(text);
        env = a.env;
        rep = std::move(a.rep);
    } else {
        rep = rep_from_json(text);
        env.input_length = rep.input_dim();
    }
    const auto scatter = representation_scatter(rep, env);
    if (!csv_path.empty()) {
        std::string csv = "input,ones_count";
        for (int d = 0; d < rep.output_dim(); ++d) csv += ",rep_" + std::to_string(d + 1);
        csv += "\n";
        for (const auto& p : scatter) {
            csv += p.input.to_bit_string() + "," + std::to_string(p.ones_count);
            for (double v : p.rep_output) csv += "," + format_double(v);
            csv += "\n";
        }
        save_text_file(csv_path, csv);
        std::cout << "wrote " << csv_path << "\n";
    }
    if (rep.output_dim() != 2) {
        if (!csv_path.empty()) return kExitOk;
        throw DataError("representation dimension is " + std::to_string(rep.output_dim()) +
                        ", not 2; use --csv FILE to export raw outputs instead");
    }
    save_text_file(svg_path, svg_scatter(scatter));
    std::cout << "wrote " << svg_path << "\n";
    return kExitOk;
}

int cmd_transfer(const std::string& archive_path, const std::string& out_dir,
                 const std::string& m_values, int seeds, const NetworkConfig& net_cfg,
                 const TrainConfig& train_cfg, std::uint64_t study_seed,
                 const std::string& measure_name) {
    const RepArchive archive = archive_from_json(load_text_file(archive_path));
    const InputMeasure measure{InputMeasure::parse_mode(measure_name)};
    const auto records = transfer_study(archive, archive.env, measure, parse_int_list(m_values), seeds,
                                        net_cfg, train_cfg, study_seed);
    fs::create_directories(out_dir);
    const fs::path out = fs::path(out_dir) / "transfer.csv";
    save_text_file(out.string(), transfer_records_to_csv(records));
    std::cout << "wrote " << out.string() << " (" << records.size() << " records)\n";
    return kExitOk;
}

int cmd_bounds(const BoundInputs& base, const std::string& n_values, const std::string& out_path) {
    const std::string csv = bounds_table_csv(base, parse_int_list(n_values));
    if (out_path.empty() || out_path == "-") {
        std::cout << csv;
    } else {
        save_text_file(out_path, csv);
        std::cout << "wrote " << out_path << "\n";
    }
    return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"multitask representation learning on symmetric Boolean functions"};
    app.require_subcommand(1);

    // sweep
    SweepFlags sf;
    auto* sweep = app.add_subcommand("sweep", "run the (n, m, seed) learning sweep");
    sweep->add_option("--config", sf.config_path, "config file (flat key = value lines)")
        ->required()
        ->check(CLI::ExistingFile);
    sweep->add_option("--out", sf.out_dir, "output directory (default $REPLEARN_OUT_DIR or .)");
    sweep->add_option("--input-length", sf.input_length, "override: input vector length");
    sweep->add_option("--ones-min", sf.ones_min, "override: minimum ones-count");
    sweep->add_option("--ones-max", sf.ones_max, "override: maximum ones-count");
    sweep->add_option("--measure", sf.measure, "override: category-uniform | flat-uniform");
    sweep->add_option("--hidden", sf.hidden, "override: hidden layer sizes, comma list");
    sweep->add_option("--rep-dim", sf.rep_dim, "override: representation dimension");
    sweep->add_option("--init-scale", sf.init_scale, "override: weight init scale");
    sweep->add_option("--learning-rate", sf.learning_rate, "override: learning rate");
    sweep->add_option("--max-epochs", sf.max_epochs, "override: epoch cap");
    sweep->add_option("--target-error", sf.target_error, "override: empirical error stop threshold");
    sweep->add_option("--n-values", sf.n_values, "override: task counts, comma list");
    sweep->add_option("--m-values", sf.m_values, "override: examples per task, comma list");
    sweep->add_option("--seeds", sf.seeds, "override: seed indices, comma list");
    sweep->add_option("--global-seed", sf.global_seed, "override: global seed");
    sweep->add_option("--checkpoint-gate", sf.checkpoint_gate, "override: train-error checkpoint gate");
    sweep->add_option("--threads", sf.threads, "override: concurrent cells");

    // surface-plot
    std::string sp_results, sp_out = default_out_dir();
    auto* splot = app.add_subcommand("surface-plot", "summary CSV + SVG heatmap from results.csv");
    splot->add_option("--results", sp_results, "results.csv from a sweep")->required()->check(CLI::ExistingFile);
    splot->add_option("--out", sp_out, "output directory");

    // extract-reps
    std::string er_ckpts, er_out = default_out_dir();
    double er_threshold = 0.01;
    auto* extract = app.add_subcommand("extract-reps", "archive representations with exact gen error below the threshold");
    extract->add_option("--checkpoints", er_ckpts, "sweep checkpoint directory")->required();
    extract->add_option("--out", er_out, "archive output directory");
    extract->add_option("--threshold", er_threshold, "generalisation error threshold (default 0.01)");

    // rep-error
    std::string re_archives, re_out = default_out_dir(), re_measure = "category-uniform";
    OracleConfig re_oracle;
    auto* rep_err = app.add_subcommand("rep-error", "representation error curve over archives, by source n");
    rep_err->add_option("--archives", re_archives, "archive directory")->required();
    rep_err->add_option("--out", re_out, "output directory");
    rep_err->add_option("--measure", re_measure, "category-uniform | flat-uniform");
    rep_err->add_option("--restarts", re_oracle.restarts, "oracle restarts (default 5)");
    rep_err->add_option("--oracle-epochs", re_oracle.train.max_epochs, "oracle epoch cap");
    rep_err->add_option("--oracle-lr", re_oracle.train.learning_rate, "oracle learning rate");
    rep_err->add_option("--oracle-target", re_oracle.train.target_empirical_error, "oracle stop threshold");
    rep_err->add_option("--oracle-seed", re_oracle.seed, "oracle restart seed");

    // rep-scatter
    std::string rs_archive, rs_svg = "scatter.svg", rs_csv;
    auto* rscatter = app.add_subcommand("rep-scatter", "scatter SVG of a 2-D representation's outputs");
    rscatter->add_option("--archive", rs_archive, "rep archive (or raw representation checkpoint)")
        ->required()
        ->check(CLI::ExistingFile);
    rscatter->add_option("--out", rs_svg, "output SVG path");
    rscatter->add_option("--csv", rs_csv, "also export raw outputs as CSV");

    // transfer
    std::string tr_archive, tr_out = default_out_dir(), tr_m = "1,11,21,31,41,51,61,71,81,91";
    std::string tr_measure = "category-uniform";
    int tr_seeds = 10;
    std::uint64_t tr_seed = 1;
    NetworkConfig tr_net;
    TrainConfig tr_train;
    auto* transfer = app.add_subcommand("transfer", "frozen-rep vs from-scratch learning of held-out tasks");
    transfer->add_option("--archive", tr_archive, "rep archive")->required()->check(CLI::ExistingFile);
    transfer->add_option("--out", tr_out, "output directory");
    transfer->add_option("--m-values", tr_m, "novel-task sample sizes, comma list");
    transfer->add_option("--seeds", tr_seeds, "seeds per (task, m)");
    transfer->add_option("--study-seed", tr_seed, "global seed for the study");
    transfer->add_option("--measure", tr_measure, "category-uniform | flat-uniform");
    transfer->add_option("--hidden", tr_net.hidden_sizes, "from-scratch hidden sizes")->delimiter(',');
    transfer->add_option("--rep-dim", tr_net.rep_dim, "from-scratch representation dimension");
    transfer->add_option("--init-scale", tr_net.weight_init_scale, "weight init scale");
    transfer->add_option("--learning-rate", tr_train.learning_rate, "learning rate");
    transfer->add_option("--max-epochs", tr_train.max_epochs, "epoch cap");
    transfer->add_option("--target-error", tr_train.target_empirical_error, "stop threshold");

    // bounds
    BoundInputs bi;
    std::string b_n = "1,5,9,13,17,21", b_out = "-";
    auto* bounds = app.add_subcommand("bounds", "sample-complexity bound table (up to undetermined constants)");
    bounds->add_option("--wr", bi.rep_weights, "W_R, representation weight count")->required();
    bounds->add_option("--wo", bi.output_weights, "W_O, output net weight count")->required();
    bounds->add_option("--n-values", b_n, "task counts, comma list");
    bounds->add_option("--epsilon", bi.epsilon, "accuracy parameter in (0,1)");
    bounds->add_option("--delta", bi.delta, "confidence parameter in (0,1)");
    bounds->add_option("--c-cap", bi.c_cap, "capacity O(.) constant");
    bounds->add_option("--c-sample", bi.c_sample, "sample O(.) constant");
    bounds->add_option("--out", b_out, "output file, or - for stdout");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        std::cerr << "error: " << e.what() << "\n";
        std::cerr << "run '" << (argc > 0 ? argv[0] : "replearn") << " --help' for usage\n";
        return kExitUsage;
    }

    try {
        if (sweep->parsed()) return cmd_sweep(*sweep, sf);
        if (splot->parsed()) return cmd_surface_plot(sp_results, sp_out);
        if (extract->parsed()) return cmd_extract_reps(er_ckpts, er_out, er_threshold);
        if (rep_err->parsed()) return cmd_rep_error(re_archives, re_out, re_oracle, re_measure);
        if (rscatter->parsed()) return cmd_rep_scatter(rs_archive, rs_svg, rs_csv);
        if (transfer->parsed())
            return cmd_transfer(tr_archive, tr_out, tr_m, tr_seeds, tr_net, tr_train, tr_seed, tr_measure);
        if (bounds->parsed()) return cmd_bounds(bi, b_n, b_out);
    } catch (const DataError& e) {
        std::cerr << "data error: " << e.what() << "\n";
        return kExitData;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    }
    return kExitUsage;
}
