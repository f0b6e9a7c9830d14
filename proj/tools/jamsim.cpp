#include <fstream>
#include <iostream>
#include <map>
#include <optional>
#include <sstream>

#include "CLI11.hpp"
#include "json.hpp"

#include "jamllr/harness.hpp"
#include "jamllr/version.hpp"

namespace {

using namespace jamllr;

struct CliValues {
    std::string config, out, json_out;
    std::uint64_t seed = 0;
    int threads = 0;
    std::uint64_t trials = 0, max_queries = 0, stop_errors = 0;
    std::string strategy, code, sinr_convention, mode, rates;
    std::uint64_t n = 0, k = 0, code_seed = 0;
    double snr_a = 0, b = 0, g = 0, threshold = 0;
    std::vector<double> sinr;
    std::uint64_t max_prop = 0;
    double grid_max = 0, grid_step = 0;
    std::uint64_t frames = 0;
    double fp = 0, fn = 0;
    std::uint64_t trial = 0;
    std::map<std::string, CLI::Option*> opts;

    bool given(const std::string& name) const {
        auto it = opts.find(name);
        return it != opts.end() && it->second->count() > 0;
    }
};

void add_common_options(CLI::App* sub, CliValues& v) {
    v.opts["config"] = sub->add_option("--config", v.config, "JSON config file");
    v.opts["seed"] = sub->add_option("--seed", v.seed, "master RNG seed");
    v.opts["threads"] = sub->add_option("--threads", v.threads, "worker threads (0 = all)");
    v.opts["trials"] = sub->add_option("--trials", v.trials, "frames per point");
    v.opts["max-queries"] = sub->add_option("--max-queries", v.max_queries,
                                            "decoder query budget per frame");
    v.opts["strategy"] = sub->add_option(
        "--strategy", v.strategy,
        "baseline_awgn | pointwise | anchored | exact_smoothing | genie");
    v.opts["code"] = sub->add_option("--code", v.code, "rlc | ca_polar");
    v.opts["n"] = sub->add_option("--n", v.n, "block length");
    v.opts["k"] = sub->add_option("--k", v.k, "information bits");
    v.opts["code-seed"] = sub->add_option("--code-seed", v.code_seed, "rlc construction seed");
    v.opts["snr-a"] = sub->add_option("--snr-a", v.snr_a, "thermal SNR in dB");
    v.opts["sinr"] =
        sub->add_option("--sinr,--snr-j", v.sinr, "jammer SINR points in dB")->delimiter(',');
    v.opts["sinr-convention"] = sub->add_option("--sinr-convention", v.sinr_convention,
                                                "jammer_power | total_power");
    v.opts["b"] = sub->add_option("--b", v.b, "P(A->J) transition probability");
    v.opts["g"] = sub->add_option("--g", v.g, "P(J->A) transition probability");
    v.opts["threshold"] = sub->add_option("--threshold", v.threshold, "anchor threshold");
    v.opts["max-propagation"] =
        sub->add_option("--max-propagation", v.max_prop, "anchor hop cap (0 = unbounded)");
    v.opts["stop-errors"] = sub->add_option("--stop-errors", v.stop_errors,
                                            "stop a point after this many block errors (0 = never)");
    v.opts["grid-max"] = sub->add_option("--grid-max", v.grid_max, "curve grid maximum");
    v.opts["grid-step"] = sub->add_option("--grid-step", v.grid_step, "curve grid step");
    v.opts["frames"] = sub->add_option("--frames", v.frames, "frames for curve estimates");
    v.opts["mode"] = sub->add_option("--mode", v.mode, "posterior curve mode: first | refined");
}

ExperimentConfig resolve_config(const CliValues& v) {
    ExperimentConfig cfg = v.config.empty() ? ExperimentConfig{} : load_config(v.config);
    try {
        if (v.given("seed")) cfg.master_seed = v.seed;
        if (v.given("threads")) cfg.threads = v.threads;
        if (v.given("trials")) cfg.trials = v.trials;
        if (v.given("max-queries")) cfg.max_queries = v.max_queries;
        if (v.given("strategy")) cfg.strategy = parse_strategy(v.strategy);
        if (v.given("code")) cfg.code = parse_code_kind(v.code);
        if (v.given("n")) cfg.n = v.n;
        if (v.given("k")) cfg.k = v.k;
        if (v.given("code-seed")) cfg.code_seed = v.code_seed;
        if (v.given("snr-a")) cfg.snr_a_db = v.snr_a;
        if (v.given("sinr")) cfg.jammer_sinr_db = v.sinr;
        if (v.given("sinr-convention"))
            cfg.sinr_convention = parse_sinr_convention(v.sinr_convention);
        if (v.given("b")) cfg.b = v.b;
        if (v.given("g")) cfg.g = v.g;
        if (v.given("threshold")) cfg.anchor_threshold = v.threshold;
        if (v.given("max-propagation")) cfg.max_propagation = v.max_prop;
        if (v.given("stop-errors")) cfg.target_block_errors = v.stop_errors;
        if (v.given("grid-max")) cfg.grid_max = v.grid_max;
        if (v.given("grid-step")) cfg.grid_step = v.grid_step;
        if (v.given("frames")) cfg.curve_frames = v.frames;
        if (v.given("mode")) cfg.curve_mode = v.mode;
        if (v.given("fp")) cfg.genie.fp_rate = v.fp;
        if (v.given("fn")) cfg.genie.fn_rate = v.fn;
        if (v.given("rates")) {
            cfg.genie_rates.clear();
            std::istringstream ss(v.rates);
            std::string item;
            while (std::getline(ss, item, ',')) {
                auto colon = item.find(':');
                if (colon == std::string::npos)
                    throw std::invalid_argument("--rates expects fp:fn pairs");
                cfg.genie_rates.push_back(
                    {std::stod(item.substr(0, colon)), std::stod(item.substr(colon + 1))});
            }
        }
        cfg.validate();
    } catch (const std::invalid_argument& e) {
        throw ConfigError(std::string("command line: ") + e.what());
    }
    return cfg;
}

template <typename Fn>
void with_output(const std::string& path, Fn fn) {
    if (path.empty()) {
        fn(std::cout);
        return;
    }
    std::ofstream os(path);
    if (!os) throw std::runtime_error("cannot open output file " + path);
    fn(os);
    if (!os) throw std::runtime_error("write failed for " + path);
}

void maybe_write_json(const std::string& path, const ExperimentConfig& cfg,
                      const std::vector<SweepRow>& rows) {
    if (path.empty()) return;
    with_output(path, [&](std::ostream& os) { write_rows_json(os, cfg, rows); });
}

int cmd_bler_sweep(const CliValues& v) {
    ExperimentConfig cfg = resolve_config(v);
    if (cfg.jammer_sinr_db.empty())
        throw ConfigError("bler-sweep: no SINR points (use --sinr or config jammer_sinr_db)");
    std::vector<SweepRow> rows;
    with_output(v.out, [&](std::ostream& os) { rows = run_sweep(cfg, &os); });
    maybe_write_json(v.json_out, cfg, rows);
    return 0;
}

int cmd_genie_sweep(const CliValues& v) {
    ExperimentConfig cfg = resolve_config(v);
    if (cfg.jammer_sinr_db.empty())
        throw ConfigError("genie-sweep: no SINR point (use --sinr or config jammer_sinr_db)");
    if (cfg.genie_rates.empty())
        throw ConfigError("genie-sweep: no corruption rates (use --rates or config genie_rates)");
    std::vector<SweepRow> rows;
    with_output(v.out, [&](std::ostream& os) {
        rows = run_genie_sweep(cfg, cfg.genie_rates, cfg.jammer_sinr_db.front(), &os);
    });
    ExperimentConfig echo = cfg;
    echo.strategy = LlrStrategy::genie;
    maybe_write_json(v.json_out, echo, rows);
    return 0;
}

int cmd_posterior_curves(const CliValues& v) {
    ExperimentConfig cfg = resolve_config(v);
    if (cfg.jammer_sinr_db.empty())
        throw ConfigError("posterior-curves: no SINR points (use --sinr or config jammer_sinr_db)");
    if (cfg.curve_mode == "refined") {
        std::vector<RefinedCurveRow> rows = refined_posterior_curve(cfg);
        with_output(v.out, [&](std::ostream& os) { write_refined_curve_csv(os, rows); });
    } else {
        std::vector<PosteriorCurvePoint> pts = first_step_posterior_curve(cfg);
        with_output(v.out, [&](std::ostream& os) { write_posterior_curve_csv(os, pts); });
    }
    return 0;
}

int cmd_llr_curves(const CliValues& v) {
    ExperimentConfig cfg = resolve_config(v);
    if (cfg.jammer_sinr_db.empty())
        throw ConfigError("llr-curves: no SINR point (use --sinr or config jammer_sinr_db)");
    std::vector<LlrCurveRow> rows = llr_curve(cfg);
    with_output(v.out, [&](std::ostream& os) { write_llr_curve_csv(os, rows); });
    return 0;
}

int cmd_decode_frame(const CliValues& v) {
    ExperimentConfig cfg = resolve_config(v);
    if (cfg.jammer_sinr_db.empty())
        throw ConfigError("decode-frame: no SINR point (use --sinr or config jammer_sinr_db)");
    LinearCode code = build_code(cfg);
    double sinr = cfg.jammer_sinr_db.front();
    FrameDebug dbg = run_single_frame(cfg, code, sinr, v.trial);

    std::size_t jammed = 0;
    for (JamState s : dbg.frame.states) jammed += (s == JamState::J);
    std::size_t hard_errors = 0;
    for (std::size_t i = 0; i < dbg.llrs.size(); ++i)
        hard_errors += (dbg.llrs[i] < 0.0) != (dbg.frame.bits[i] != 0);

    std::cout << "code: " << code.label << '\n'
              << "strategy: " << strategy_name(cfg.strategy) << '\n'
              << "jammer_sinr_db: " << sinr << '\n'
              << "trial: " << v.trial << '\n'
              << "jammed_bits: " << jammed << '/' << dbg.frame.bits.size() << '\n'
              << "hard_decision_errors: " << hard_errors << '\n'
              << "queries: " << dbg.outcome.queries << '\n'
              << "abandoned: " << (dbg.outcome.abandoned ? "yes" : "no") << '\n'
              << "decoded_ok: " << (dbg.success ? "yes" : "no") << '\n';
    if (dbg.has_confusion) {
        auto fnr = dbg.confusion.fn_rate();
        auto fpr = dbg.confusion.fp_rate();
        std::cout << "est_fn_rate: " << (fnr ? std::to_string(*fnr) : "n/a") << '\n'
                  << "est_fp_rate: " << (fpr ? std::to_string(*fpr) : "n/a") << '\n';
    }

    if (!v.out.empty()) {
        nlohmann::json j;
        j["version"] = std::string(kVersion);
        j["code_label"] = code.label;
        j["strategy"] = strategy_name(cfg.strategy);
        j["jammer_sinr_db"] = sinr;
        j["trial"] = v.trial;
        j["jammed_bits"] = jammed;
        j["hard_decision_errors"] = hard_errors;
        j["queries"] = dbg.outcome.queries;
        j["abandoned"] = dbg.outcome.abandoned;
        j["decoded_ok"] = dbg.success;
        std::string states(dbg.frame.states.size(), 'A');
        for (std::size_t i = 0; i < dbg.frame.states.size(); ++i)
            if (dbg.frame.states[i] == JamState::J) states[i] = 'J';
        j["states"] = states;
        j["received"] = dbg.frame.received;
        j["llrs"] = dbg.llrs;
        if (!dbg.posteriors.empty()) j["posteriors"] = dbg.posteriors;
        with_output(v.out, [&](std::ostream& os) { os << j.dump(2) << '\n'; });
    }
    return 0;
}

int cmd_make_code(const CliValues& v) {
    ExperimentConfig cfg = resolve_config(v);
    if (v.out.empty()) throw ConfigError("make-code: --out prefix is required");
    LinearCode code = build_code(cfg);
    write_code_files(code, v.out);
    std::cout << code.label << " -> " << v.out << ".G.txt, " << v.out << ".H.txt\n";
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"bursty-jamming LLR preprocessing simulator"};
    app.set_version_flag("--version", std::string(jamllr::kVersion));
    app.require_subcommand(1);

    int rc = 0;
    CliValues sweep_v, genie_v, post_v, llr_v, frame_v, code_v;

    CLI::App* sweep = app.add_subcommand("bler-sweep", "BLER vs jammer SINR Monte Carlo sweep");
    add_common_options(sweep, sweep_v);
    sweep->add_option("--out", sweep_v.out, "CSV output path (default stdout)");
    sweep->add_option("--json-out", sweep_v.json_out, "JSON mirror output path");
    sweep_v.opts["fp"] = sweep->add_option("--fp", sweep_v.fp, "genie false-positive rate");
    sweep_v.opts["fn"] = sweep->add_option("--fn", sweep_v.fn, "genie false-negative rate");
    sweep->callback([&] { rc = cmd_bler_sweep(sweep_v); });

    CLI::App* genie = app.add_subcommand("genie-sweep",
                                         "BLER across genie corruption rates at one SINR point");
    add_common_options(genie, genie_v);
    genie->add_option("--out", genie_v.out, "CSV output path (default stdout)");
    genie->add_option("--json-out", genie_v.json_out, "JSON mirror output path");
    genie_v.opts["rates"] =
        genie->add_option("--rates", genie_v.rates, "fp:fn pairs, e.g. 0:0,0.05:0,0:0.1");
    genie->callback([&] { rc = cmd_genie_sweep(genie_v); });

    CLI::App* post = app.add_subcommand("posterior-curves",
                                        "jamming posterior vs signal magnitude");
    add_common_options(post, post_v);
    post->add_option("--out", post_v.out, "CSV output path (default stdout)");
    post->callback([&] { rc = cmd_posterior_curves(post_v); });

    CLI::App* llrs = app.add_subcommand("llr-curves", "LLR variants vs received value");
    add_common_options(llrs, llr_v);
    llrs->add_option("--out", llr_v.out, "CSV output path (default stdout)");
    llrs->callback([&] { rc = cmd_llr_curves(llr_v); });

    CLI::App* frame = app.add_subcommand("decode-frame", "decode one frame and dump details");
    add_common_options(frame, frame_v);
    frame->add_option("--trial", frame_v.trial, "frame index within the seed's stream");
    frame->add_option("--out", frame_v.out, "JSON detail output path");
    frame->callback([&] { rc = cmd_decode_frame(frame_v); });

    CLI::App* make = app.add_subcommand("make-code", "construct a code and export G/H matrices");
    add_common_options(make, code_v);
    make->add_option("--out", code_v.out, "output path prefix (required)");
    make->callback([&] { rc = cmd_make_code(code_v); });

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 2;
    } catch (const jamllr::ConfigError& e) {
        std::cerr << "config error: " << e.what() << '\n';
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 1;
    }
    return rc;
}
