#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "jamllr/channel.hpp"
#include "jamllr/codes.hpp"
#include "jamllr/inference.hpp"
#include "jamllr/orbgrand.hpp"

namespace jamllr {

enum class LlrStrategy { baseline_awgn, pointwise, anchored, exact_smoothing, genie };
enum class CodeKind { rlc, ca_polar };
enum class SinrConvention { jammer_power, total_power };

const char* strategy_name(LlrStrategy s);
LlrStrategy parse_strategy(const std::string& name);  // throws std::invalid_argument
const char* code_kind_name(CodeKind k);
CodeKind parse_code_kind(const std::string& name);
const char* sinr_convention_name(SinrConvention c);
SinrConvention parse_sinr_convention(const std::string& name);

// Genie estimates corrupted with exact-count random flips per frame.
struct GenieConfig {
    double fp_rate = 0.0;  // fraction of clean bits marked jammed
    double fn_rate = 0.0;  // fraction of jammed bits marked clean
};

struct ExperimentConfig {
    CodeKind code = CodeKind::rlc;
    std::size_t n = 128;
    std::size_t k = 105;
    std::uint64_t code_seed = 0x5eedc0de;

    double snr_a_db = 12.0;
    std::vector<double> jammer_sinr_db;
    SinrConvention sinr_convention = SinrConvention::jammer_power;
    double b = 0.01;
    double g = 0.25;

    LlrStrategy strategy = LlrStrategy::anchored;
    double anchor_threshold = 0.2;
    std::size_t max_propagation = 0;
    GenieConfig genie;
    std::vector<GenieConfig> genie_rates;  // genie-sweep points

    std::uint64_t max_queries = 1'000'000;
    std::uint64_t trials = 10'000;
    std::uint64_t target_block_errors = 100;  // 0 = always run all trials
    std::uint64_t master_seed = 1;
    int threads = 0;  // 0 = all available, 1 = serial reference

    // Curve emission controls.
    double grid_max = 3.0;
    double grid_step = 0.01;
    std::uint64_t curve_frames = 2000;
    std::string curve_mode = "first";  // "first" or "refined"

    void validate() const;  // throws std::invalid_argument
};

struct SweepRow {
    std::string strategy;
    std::string code_label;
    std::size_t n = 0, k = 0;
    double snr_a_db = 0, jammer_sinr_db = 0, b = 0, g = 0, anchor_threshold = 0;
    std::uint64_t max_queries = 0, trials = 0, block_errors = 0;
    double bler = 0, bler_ci95 = 0, mean_queries = 0, abandonment_rate = 0;
    double est_fn_rate = 0, est_fp_rate = 0;  // NaN when undefined
    std::uint64_t master_seed = 0;
    double wall_seconds = 0;
};

// Half-width of the 95% Wilson score interval.
double wilson_halfwidth(std::uint64_t errors, std::uint64_t trials);

// Jammer interference variance for a SINR point under the chosen convention.
// Throws std::invalid_argument if the point is unreachable (total_power below
// the thermal floor).
double sinr_db_to_sigma2_v(double sinr_db, double sigma2_a, SinrConvention convention);

LinearCode build_code(const ExperimentConfig& cfg);

// Monte Carlo BLER at one SINR point. The serial variant is the reference
// implementation; the parallel one distributes fixed-size trial batches over
// OpenMP threads and aggregates in trial order, so both produce identical
// rows (wall time aside) for any thread count. Early stopping is evaluated
// at batch boundaries only.
SweepRow run_bler_point_serial(const ExperimentConfig& cfg, const LinearCode& code,
                               double jammer_sinr_db);
SweepRow run_bler_point(const ExperimentConfig& cfg, const LinearCode& code,
                        double jammer_sinr_db);

// One row per configured SINR point; rows are streamed to csv as they finish
// when a stream is given.
std::vector<SweepRow> run_sweep(const ExperimentConfig& cfg, std::ostream* csv = nullptr);
// One row per corruption pair at a fixed SINR point.
std::vector<SweepRow> run_genie_sweep(const ExperimentConfig& cfg,
                                      const std::vector<GenieConfig>& rates,
                                      double jammer_sinr_db, std::ostream* csv = nullptr);

void write_csv_header(std::ostream& os);
void write_csv_row(std::ostream& os, const SweepRow& row);
void write_rows_csv(std::ostream& os, const std::vector<SweepRow>& rows);
// JSON mirror: config echo plus all rows.
void write_rows_json(std::ostream& os, const ExperimentConfig& cfg,
                     const std::vector<SweepRow>& rows);

// Single-frame drill-down for inspection.
struct FrameDebug {
    FrameRecord frame;
    std::vector<double> posteriors;  // empty for strategies without an estimate
    std::vector<double> llrs;
    orbgrand::DecodeOutcome outcome;
    bool success = false;
    ConfusionCounts confusion;
    bool has_confusion = false;
};
FrameDebug run_single_frame(const ExperimentConfig& cfg, const LinearCode& code,
                            double jammer_sinr_db, std::uint64_t trial);

struct PosteriorCurvePoint {
    double snr_j_db = 0, mag = 0, posterior = 0;
};
// First-step posterior against signal magnitude, one series per SINR point.
std::vector<PosteriorCurvePoint> first_step_posterior_curve(const ExperimentConfig& cfg);
void write_posterior_curve_csv(std::ostream& os, const std::vector<PosteriorCurvePoint>& pts);

struct RefinedCurveRow {
    double snr_j_db = 0, mag_bin_center = 0;
    JamState state = JamState::A;
    double mean_pointwise = 0, mean_refined = 0;
    std::uint64_t count = 0;
};
// Monte Carlo means of pointwise and refined posteriors binned by magnitude,
// split by the true state.
std::vector<RefinedCurveRow> refined_posterior_curve(const ExperimentConfig& cfg);
void write_refined_curve_csv(std::ostream& os, const std::vector<RefinedCurveRow>& rows);

struct LlrCurveRow {
    double y = 0, llr_awgn = 0, llr_jam = 0, llr_blended = 0, posterior = 0;
};
// LLR variants against the received value at the first configured SINR point.
std::vector<LlrCurveRow> llr_curve(const ExperimentConfig& cfg);
void write_llr_curve_csv(std::ostream& os, const std::vector<LlrCurveRow>& rows);

// Configuration file handling.
struct ConfigError : std::runtime_error {
    using std::runtime_error::runtime_error;
};
ExperimentConfig config_from_json_text(const std::string& text, const std::string& origin);
ExperimentConfig load_config(const std::string& path);
std::string config_to_json_text(const ExperimentConfig& cfg);

}  // namespace jamllr
