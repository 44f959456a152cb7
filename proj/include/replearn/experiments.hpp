#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "replearn/environment.hpp"
#include "replearn/evaluation.hpp"
#include "replearn/network.hpp"
#include "replearn/training.hpp"

namespace replearn {

struct SweepGrid {
    std::vector<int> n_values{1, 5, 9, 13, 17, 21};
    std::vector<int> m_values{1,  11,  21,  31,  41,  51,  61,  71,  81,
                              91, 101, 111, 121, 131, 141, 151, 161, 171};
    std::vector<int> seeds{0, 1, 2, 3, 4, 5, 6, 7, 8, 9};

    void validate() const;
    std::size_t cell_count() const { return n_values.size() * m_values.size() * seeds.size(); }
};

struct SweepConfig {
    EnvironmentSpec env;
    InputMeasure measure;
    NetworkConfig net;
    TrainConfig train;
    SweepGrid grid;
    std::uint64_t global_seed = 1;
    /// Cells whose final training error passes this gate keep their full
    /// network for later representation extraction.
    double checkpoint_train_gate = 0.01;
    int threads = 1;

    void validate() const;
};

/// One cell of the (n, m, seed) sweep. gen_error is the exact
/// generalisation error computed by full enumeration; diverged cells
/// carry NaN errors and are excluded from summaries.
struct SurfaceRecord {
    int n = 0;
    int m = 0;
    int seed = 0;
    double gen_error = 0.0;
    double train_error = 0.0;
    bool converged = false;
    bool diverged = false;
    long epochs = 0;
    InputMeasure::Mode measure_mode = InputMeasure::Mode::CategoryUniform;
};

struct CellResult {
    SurfaceRecord record;
    std::vector<SymmetricTask> tasks;
    std::optional<MultitaskNetwork> checkpoint;  // present iff the train gate passed
};

/// Runs a single cell. Every cell derives its streams from
/// (global_seed, n, m, seed), so any cell is reproducible in isolation.
CellResult run_cell(const SweepConfig& cfg, int n, int m, int seed);

/// Runs the whole grid in a fixed order (n outer, then m, then seed).
/// on_cell, when given, observes each finished cell in that order.
std::vector<CellResult> run_sweep(const SweepConfig& cfg,
                                  const std::function<void(const CellResult&)>& on_cell = {});

struct SummaryCell {
    int n = 0;
    int m = 0;
    double mean_gen_error = 0.0;
    double stderr_gen_error = 0.0;
    int count = 0;     // records included
    int excluded = 0;  // diverged records
};

/// Per-(n, m) mean and standard error over seeds, diverged cells
/// excluded and counted. Invariant under record reordering.
std::vector<SummaryCell> surface_summary(std::span<const SurfaceRecord> records);

struct RepArchive {
    int n = 0;
    int m = 0;
    int seed = 0;
    double gen_error = 0.0;  // recomputed from the checkpoint at extraction
    EnvironmentSpec env;
    RepresentationNet rep;
    std::vector<SymmetricTask> source_tasks;
    InputMeasure::Mode measure_mode = InputMeasure::Mode::CategoryUniform;

    std::string source_id() const;
};

/// Archives the representation of every checkpointed cell whose exact
/// generalisation error, recomputed from the stored network, is below
/// the threshold (0.01 unless overridden).
std::vector<RepArchive> extract_representations(std::span<const CellResult> cells,
                                                const EnvironmentSpec& env, double threshold = 0.01);

struct RepErrorPoint {
    int n = 0;
    double mean_rep_error = 0.0;
    int archive_count = 0;
};

/// Mean representation error of the archives grouped by source n,
/// ascending. Groups with no archives simply do not appear.
std::vector<RepErrorPoint> rep_error_curve(std::span<const RepArchive> archives,
                                           const EnvironmentSpec& env, const InputMeasure& measure,
                                           const OracleConfig& oracle);

struct TransferRecord {
    enum class Mode { FrozenRep, FromScratch };

    std::string source;     // archive id
    std::string task_bits;  // held-out task truth table
    int m_novel = 0;
    int seed = 0;
    Mode mode = Mode::FrozenRep;
    double true_error = 0.0;
    bool converged = false;
    bool diverged = false;

    static const char* mode_name(Mode m);
};

/// For every task the archive was NOT trained on, every m in m_values
/// and every seed: train an output net on the frozen representation, and
/// train an identical fresh network from scratch on the same data, then
/// record both exact true errors.
std::vector<TransferRecord> transfer_study(const RepArchive& archive, const EnvironmentSpec& env,
                                           const InputMeasure& measure, const std::vector<int>& m_values,
                                           int seed_count, const NetworkConfig& net_cfg,
                                           const TrainConfig& train_cfg, std::uint64_t study_seed);

// --- file formats ---------------------------------------------------------

std::string results_csv_header();
std::string record_to_csv_line(const SurfaceRecord& r);
std::string records_to_csv(std::span<const SurfaceRecord> records);
/// Throws DataError naming the offending line.
std::vector<SurfaceRecord> parse_results_csv(const std::string& text, InputMeasure::Mode mode);

std::string summary_to_csv(std::span<const SummaryCell> summary);
std::string rep_error_curve_to_csv(std::span<const RepErrorPoint> curve);
std::string transfer_records_to_csv(std::span<const TransferRecord> records);
std::string trace_to_csv(const TrainTrace& trace);

/// The run manifest: every knob of the sweep as flat `key = value`
/// lines. Reloading a manifest reproduces the run exactly.
std::string sweep_config_to_manifest(const SweepConfig& cfg);
SweepConfig sweep_config_from_manifest(const std::string& text);

std::string cell_checkpoint_to_json(const CellResult& cell, const EnvironmentSpec& env);
CellResult cell_checkpoint_from_json(const std::string& text, EnvironmentSpec* env_out = nullptr);

std::string archive_to_json(const RepArchive& archive);
RepArchive archive_from_json(const std::string& text);

}  // namespace replearn
