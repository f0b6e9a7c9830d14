#include "jamllr/harness.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <limits>
#include <ostream>

#include "jamllr/rng.hpp"

#ifdef _OPENMP
#include <omp.h>
#endif

namespace jamllr {

namespace {

constexpr double kNaN = std::numeric_limits<double>::quiet_NaN();
// Trials per scheduling batch; the early-stop rule only fires at batch
// boundaries so results do not depend on the thread count.
constexpr std::uint64_t kTrialBatch = 512;

}  // namespace

const char* strategy_name(LlrStrategy s) {
    switch (s) {
        case LlrStrategy::baseline_awgn: return "baseline_awgn";
        case LlrStrategy::pointwise: return "pointwise";
        case LlrStrategy::anchored: return "anchored";
        case LlrStrategy::exact_smoothing: return "exact_smoothing";
        case LlrStrategy::genie: return "genie";
    }
    return "?";
}

LlrStrategy parse_strategy(const std::string& name) {
    for (LlrStrategy s : {LlrStrategy::baseline_awgn, LlrStrategy::pointwise,
                          LlrStrategy::anchored, LlrStrategy::exact_smoothing,
                          LlrStrategy::genie})
        if (name == strategy_name(s)) return s;
    throw std::invalid_argument("unknown strategy '" + name + "'");
}

const char* code_kind_name(CodeKind k) {
    return k == CodeKind::rlc ? "rlc" : "ca_polar";
}

CodeKind parse_code_kind(const std::string& name) {
    if (name == "rlc") return CodeKind::rlc;
    if (name == "ca_polar") return CodeKind::ca_polar;
    throw std::invalid_argument("unknown code kind '" + name + "'");
}

const char* sinr_convention_name(SinrConvention c) {
    return c == SinrConvention::jammer_power ? "jammer_power" : "total_power";
}

SinrConvention parse_sinr_convention(const std::string& name) {
    if (name == "jammer_power") return SinrConvention::jammer_power;
    if (name == "total_power") return SinrConvention::total_power;
    throw std::invalid_argument("unknown sinr convention '" + name + "'");
}

void ExperimentConfig::validate() const {
    if (n == 0 || k == 0 || k >= n)
        throw std::invalid_argument("ExperimentConfig: need 0 < k < n");
    if (!(b >= 0 && b <= 1) || !(g >= 0 && g <= 1))
        throw std::invalid_argument("ExperimentConfig: b and g must be in [0,1]");
    if (b + g <= 0)
        throw std::invalid_argument("ExperimentConfig: b + g must be > 0");
    if (!(anchor_threshold >= 0 && anchor_threshold <= 1))
        throw std::invalid_argument("ExperimentConfig: anchor_threshold must be in [0,1]");
    if (!(genie.fp_rate >= 0 && genie.fp_rate <= 1) ||
        !(genie.fn_rate >= 0 && genie.fn_rate <= 1))
        throw std::invalid_argument("ExperimentConfig: genie rates must be in [0,1]");
    for (const GenieConfig& gc : genie_rates)
        if (!(gc.fp_rate >= 0 && gc.fp_rate <= 1) || !(gc.fn_rate >= 0 && gc.fn_rate <= 1))
            throw std::invalid_argument("ExperimentConfig: genie rates must be in [0,1]");
    if (max_queries == 0)
        throw std::invalid_argument("ExperimentConfig: max_queries must be > 0");
    if (trials == 0)
        throw std::invalid_argument("ExperimentConfig: trials must be > 0");
    if (threads < 0)
        throw std::invalid_argument("ExperimentConfig: threads must be >= 0");
    if (!(grid_step > 0) || !(grid_max >= 0))
        throw std::invalid_argument("ExperimentConfig: bad curve grid");
    if (curve_mode != "first" && curve_mode != "refined")
        throw std::invalid_argument("ExperimentConfig: curve_mode must be 'first' or 'refined'");
    for (double sinr : jammer_sinr_db)
        sinr_db_to_sigma2_v(sinr, snr_db_to_sigma2(snr_a_db), sinr_convention);
}

double wilson_halfwidth(std::uint64_t errors, std::uint64_t trials) {
    if (trials == 0) return kNaN;
    constexpr double z = 1.959963984540054;
    double nt = static_cast<double>(trials);
    double p = static_cast<double>(errors) / nt;
    double z2 = z * z;
    return z * std::sqrt(p * (1.0 - p) / nt + z2 / (4.0 * nt * nt)) / (1.0 + z2 / nt);
}

double sinr_db_to_sigma2_v(double sinr_db, double sigma2_a, SinrConvention convention) {
    double total = snr_db_to_sigma2(sinr_db);
    if (convention == SinrConvention::jammer_power) return total;
    double v = total - sigma2_a;
    if (v < 0)
        throw std::invalid_argument("sinr_db_to_sigma2_v: total-power SINR above the thermal floor");
    return v;
}

LinearCode build_code(const ExperimentConfig& cfg) {
    if (cfg.code == CodeKind::rlc) {
        std::mt19937_64 rng(mix_seed(cfg.code_seed, 0));
        return make_rlc(cfg.n, cfg.k, rng);
    }
    CaPolarSpec spec = default_ca_polar_spec();
    if (cfg.n != spec.n || cfg.k != spec.k)
        throw std::invalid_argument("build_code: built-in ca_polar construction is [128,105]");
    return make_ca_polar(spec);
}

namespace {

struct PointSetup {
    const LinearCode* code = nullptr;
    ChannelParams params;
    LlrStrategy strategy = LlrStrategy::baseline_awgn;
    double prior_j = 0;
    double anchor_threshold = 0.2;
    AnchorConfig anchor_cfg;
    GenieConfig genie;
    orbgrand::DecoderConfig dec;
    std::uint64_t master_seed = 0;
};

PointSetup make_setup(const ExperimentConfig& cfg, const LinearCode& code, double sinr_db) {
    cfg.validate();
    PointSetup s;
    s.code = &code;
    s.params.sigma2_a = snr_db_to_sigma2(cfg.snr_a_db);
    s.params.sigma2_v = sinr_db_to_sigma2_v(sinr_db, s.params.sigma2_a, cfg.sinr_convention);
    s.params.b = cfg.b;
    s.params.g = cfg.g;
    s.params.validate();
    s.strategy = cfg.strategy;
    s.prior_j = stationary_jam_prob(s.params);
    s.anchor_threshold = cfg.anchor_threshold;
    s.anchor_cfg = AnchorConfig{cfg.anchor_threshold, cfg.max_propagation};
    s.genie = cfg.genie;
    s.dec = orbgrand::DecoderConfig{cfg.max_queries, 0};
    s.master_seed = cfg.master_seed;
    return s;
}

// Picks `want` entries into the front of idx via partial Fisher-Yates.
std::size_t pick_front(std::vector<std::uint32_t>& idx, double rate, std::mt19937_64& rng) {
    auto want = static_cast<std::size_t>(
        std::llround(rate * static_cast<double>(idx.size())));
    want = std::min(want, idx.size());
    std::uniform_int_distribution<std::size_t> dist;
    for (std::size_t i = 0; i < want; ++i) {
        std::size_t j = dist(rng, decltype(dist)::param_type(i, idx.size() - 1));
        std::swap(idx[i], idx[j]);
    }
    return want;
}

void strategy_llrs(const PointSetup& s, const FrameRecord& fr, std::mt19937_64& rng,
                   std::vector<double>& llrs, std::vector<double>* post_out,
                   ConfusionCounts* conf, bool* has_conf) {
    const ChannelParams& P = s.params;
    std::size_t n = fr.received.size();
    *has_conf = false;
    switch (s.strategy) {
        case LlrStrategy::baseline_awgn: {
            llrs.resize(n);
            for (std::size_t i = 0; i < n; ++i) llrs[i] = llr_awgn(fr.received[i], P.sigma2_a);
            break;
        }
        case LlrStrategy::pointwise:
        case LlrStrategy::anchored:
        case LlrStrategy::exact_smoothing: {
            std::vector<double> post;
            if (s.strategy == LlrStrategy::exact_smoothing) {
                post = exact_posterior_smoothing(fr.received, P);
            } else {
                post = pointwise_posteriors(fr.received, P, s.prior_j);
                if (s.strategy == LlrStrategy::anchored)
                    post = refine_posteriors(post, P, s.anchor_cfg);
            }
            llrs = blended_llrs(fr.received, post, P);
            *conf = estimator_confusion(post, fr.states, s.anchor_threshold);
            *has_conf = true;
            if (post_out) *post_out = std::move(post);
            break;
        }
        case LlrStrategy::genie: {
            std::vector<std::uint32_t> a_idx, j_idx;
            for (std::size_t i = 0; i < n; ++i)
                (fr.states[i] == JamState::J ? j_idx : a_idx).push_back(
                    static_cast<std::uint32_t>(i));
            std::vector<double> est(n, 0.0);
            for (std::uint32_t i : j_idx) est[i] = 1.0;
            std::size_t fp_n = a_idx.empty() ? 0 : pick_front(a_idx, s.genie.fp_rate, rng);
            std::size_t fn_n = j_idx.empty() ? 0 : pick_front(j_idx, s.genie.fn_rate, rng);
            for (std::size_t i = 0; i < fp_n; ++i) est[a_idx[i]] = 1.0;
            for (std::size_t i = 0; i < fn_n; ++i) est[j_idx[i]] = 0.0;
            llrs.resize(n);
            double s2a = P.sigma2_a, s2j = P.sigma2_j();
            for (std::size_t i = 0; i < n; ++i)
                llrs[i] = est[i] > 0.5 ? llr_jam(fr.received[i], s2j)
                                       : llr_awgn(fr.received[i], s2a);
            conf->fn_miss = fn_n;
            conf->jam_total = j_idx.size();
            conf->fp_hit = fp_n;
            conf->awgn_total = a_idx.size();
            *has_conf = true;
            if (post_out) *post_out = std::move(est);
            break;
        }
    }
}

struct TrialOutcome {
    std::uint8_t error = 0;
    std::uint8_t abandoned = 0;
    std::uint64_t queries = 0;
    ConfusionCounts confusion;
    std::uint8_t has_confusion = 0;
};

TrialOutcome run_trial(const PointSetup& s, std::uint64_t trial) {
    std::mt19937_64 rng = make_frame_rng(s.master_seed, trial);
    std::vector<std::uint8_t> msg(s.code->k);
    for (std::uint8_t& bit : msg) bit = static_cast<std::uint8_t>(rng() & 1);
    std::vector<std::uint8_t> cw = encode(*s.code, msg);
    FrameRecord fr = transmit(cw, s.params, rng);

    TrialOutcome out;
    std::vector<double> llrs;
    bool has_conf = false;
    strategy_llrs(s, fr, rng, llrs, nullptr, &out.confusion, &has_conf);
    out.has_confusion = has_conf;

    orbgrand::DecodeOutcome dec = orbgrand::decode(llrs, *s.code, s.dec);
    out.queries = dec.queries;
    out.abandoned = dec.abandoned;
    out.error = dec.abandoned || *dec.codeword != fr.bits;
    return out;
}

SweepRow run_point_core(const ExperimentConfig& cfg, const LinearCode& code,
                        double jammer_sinr_db, int threads) {
    PointSetup setup = make_setup(cfg, code, jammer_sinr_db);
    auto t0 = std::chrono::steady_clock::now();

    std::uint64_t done = 0, errors = 0, abandoned = 0, queries = 0;
    ConfusionCounts conf;
    bool any_conf = false;
    std::vector<TrialOutcome> buf;
    for (std::uint64_t start = 0; start < cfg.trials; start += kTrialBatch) {
        std::uint64_t m = std::min(kTrialBatch, cfg.trials - start);
        buf.resize(m);
        if (threads > 1) {
#ifdef _OPENMP
#pragma omp parallel for schedule(dynamic) num_threads(threads)
#endif
            for (std::int64_t i = 0; i < static_cast<std::int64_t>(m); ++i)
                buf[i] = run_trial(setup, start + static_cast<std::uint64_t>(i));
        } else {
            for (std::uint64_t i = 0; i < m; ++i) buf[i] = run_trial(setup, start + i);
        }
        for (std::uint64_t i = 0; i < m; ++i) {
            const TrialOutcome& t = buf[i];
            errors += t.error;
            abandoned += t.abandoned;
            queries += t.queries;
            if (t.has_confusion) {
                conf.accumulate(t.confusion);
                any_conf = true;
            }
        }
        done += m;
        if (cfg.target_block_errors > 0 && errors >= cfg.target_block_errors) break;
    }

    double wall = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    SweepRow row;
    row.strategy = strategy_name(cfg.strategy);
    row.code_label = code.label;
    row.n = code.n;
    row.k = code.k;
    row.snr_a_db = cfg.snr_a_db;
    row.jammer_sinr_db = jammer_sinr_db;
    row.b = cfg.b;
    row.g = cfg.g;
    row.anchor_threshold = cfg.anchor_threshold;
    row.max_queries = cfg.max_queries;
    row.trials = done;
    row.block_errors = errors;
    row.bler = static_cast<double>(errors) / static_cast<double>(done);
    row.bler_ci95 = wilson_halfwidth(errors, done);
    row.mean_queries = static_cast<double>(queries) / static_cast<double>(done);
    row.abandonment_rate = static_cast<double>(abandoned) / static_cast<double>(done);
    row.est_fn_rate = any_conf && conf.fn_rate() ? *conf.fn_rate() : kNaN;
    row.est_fp_rate = any_conf && conf.fp_rate() ? *conf.fp_rate() : kNaN;
    row.master_seed = cfg.master_seed;
    row.wall_seconds = wall;
    return row;
}

int resolve_threads(int threads) {
    if (threads > 0) return threads;
#ifdef _OPENMP
    return omp_get_max_threads();
#else
    return 1;
#endif
}

}  // namespace

SweepRow run_bler_point_serial(const ExperimentConfig& cfg, const LinearCode& code,
                               double jammer_sinr_db) {
    return run_point_core(cfg, code, jammer_sinr_db, 1);
}

SweepRow run_bler_point(const ExperimentConfig& cfg, const LinearCode& code,
                        double jammer_sinr_db) {
    return run_point_core(cfg, code, jammer_sinr_db, resolve_threads(cfg.threads));
}

std::vector<SweepRow> run_sweep(const ExperimentConfig& cfg, std::ostream* csv) {
    cfg.validate();
    LinearCode code = build_code(cfg);
    if (csv) {
        write_csv_header(*csv);
        csv->flush();
    }
    std::vector<SweepRow> rows;
    rows.reserve(cfg.jammer_sinr_db.size());
    for (double sinr : cfg.jammer_sinr_db) {
        rows.push_back(run_bler_point(cfg, code, sinr));
        if (csv) {
            write_csv_row(*csv, rows.back());
            csv->flush();
        }
    }
    return rows;
}

std::vector<SweepRow> run_genie_sweep(const ExperimentConfig& cfg,
                                      const std::vector<GenieConfig>& rates,
                                      double jammer_sinr_db, std::ostream* csv) {
    ExperimentConfig point_cfg = cfg;
    point_cfg.strategy = LlrStrategy::genie;
    point_cfg.validate();
    LinearCode code = build_code(point_cfg);
    if (csv) {
        write_csv_header(*csv);
        csv->flush();
    }
    std::vector<SweepRow> rows;
    rows.reserve(rates.size());
    for (const GenieConfig& gc : rates) {
        point_cfg.genie = gc;
        rows.push_back(run_bler_point(point_cfg, code, jammer_sinr_db));
        if (csv) {
            write_csv_row(*csv, rows.back());
            csv->flush();
        }
    }
    return rows;
}

namespace {

std::string fmt_g(double v) {
    if (std::isnan(v)) return "nan";
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.10g", v);
    return buf;
}

std::string csv_field(const std::string& s) {
    if (s.find_first_of(",\"\n") == std::string::npos) return s;
    std::string out = "\"";
    for (char c : s) {
        if (c == '"') out += '"';
        out += c;
    }
    out += '"';
    return out;
}

}  // namespace

void write_csv_header(std::ostream& os) {
    os << "strategy,code_label,n,k,snr_a_db,jammer_sinr_db,b,g,anchor_threshold,"
          "max_queries,trials,block_errors,bler,bler_ci95,mean_queries,"
          "abandonment_rate,est_fn_rate,est_fp_rate,master_seed,wall_seconds\n";
}

void write_csv_row(std::ostream& os, const SweepRow& r) {
    os << csv_field(r.strategy) << ',' << csv_field(r.code_label) << ',' << r.n << ',' << r.k << ','
       << fmt_g(r.snr_a_db) << ',' << fmt_g(r.jammer_sinr_db) << ',' << fmt_g(r.b) << ','
       << fmt_g(r.g) << ',' << fmt_g(r.anchor_threshold) << ',' << r.max_queries << ','
       << r.trials << ',' << r.block_errors << ',' << fmt_g(r.bler) << ','
       << fmt_g(r.bler_ci95) << ',' << fmt_g(r.mean_queries) << ','
       << fmt_g(r.abandonment_rate) << ',' << fmt_g(r.est_fn_rate) << ','
       << fmt_g(r.est_fp_rate) << ',' << r.master_seed << ',' << fmt_g(r.wall_seconds)
       << '\n';
}

void write_rows_csv(std::ostream& os, const std::vector<SweepRow>& rows) {
    write_csv_header(os);
    for (const SweepRow& r : rows) write_csv_row(os, r);
}

FrameDebug run_single_frame(const ExperimentConfig& cfg, const LinearCode& code,
                            double jammer_sinr_db, std::uint64_t trial) {
    PointSetup setup = make_setup(cfg, code, jammer_sinr_db);
    FrameDebug dbg;
    std::mt19937_64 rng = make_frame_rng(setup.master_seed, trial);
    std::vector<std::uint8_t> msg(code.k);
    for (std::uint8_t& bit : msg) bit = static_cast<std::uint8_t>(rng() & 1);
    std::vector<std::uint8_t> cw = encode(code, msg);
    dbg.frame = transmit(cw, setup.params, rng);

    bool has_conf = false;
    strategy_llrs(setup, dbg.frame, rng, dbg.llrs, &dbg.posteriors, &dbg.confusion, &has_conf);
    dbg.has_confusion = has_conf;
    dbg.outcome = orbgrand::decode(dbg.llrs, code, setup.dec);
    dbg.success = !dbg.outcome.abandoned && *dbg.outcome.codeword == dbg.frame.bits;
    return dbg;
}

std::vector<PosteriorCurvePoint> first_step_posterior_curve(const ExperimentConfig& cfg) {
    cfg.validate();
    std::size_t npts = static_cast<std::size_t>(std::llround(cfg.grid_max / cfg.grid_step)) + 1;
    std::vector<PosteriorCurvePoint> pts;
    pts.reserve(npts * cfg.jammer_sinr_db.size());
    for (double sinr : cfg.jammer_sinr_db) {
        ChannelParams params;
        params.sigma2_a = snr_db_to_sigma2(cfg.snr_a_db);
        params.sigma2_v = sinr_db_to_sigma2_v(sinr, params.sigma2_a, cfg.sinr_convention);
        params.b = cfg.b;
        params.g = cfg.g;
        double prior = stationary_jam_prob(params);
        for (std::size_t i = 0; i < npts; ++i) {
            double mag = static_cast<double>(i) * cfg.grid_step;
            pts.push_back({sinr, mag, posterior_pointwise(mag, params, prior)});
        }
    }
    return pts;
}

void write_posterior_curve_csv(std::ostream& os, const std::vector<PosteriorCurvePoint>& pts) {
    os << "snr_j_db,mag,posterior\n";
    for (const PosteriorCurvePoint& p : pts)
        os << fmt_g(p.snr_j_db) << ',' << fmt_g(p.mag) << ',' << fmt_g(p.posterior) << '\n';
}

std::vector<RefinedCurveRow> refined_posterior_curve(const ExperimentConfig& cfg) {
    cfg.validate();
    std::size_t nbins = static_cast<std::size_t>(std::llround(cfg.grid_max / cfg.grid_step));
    std::vector<RefinedCurveRow> rows;
    for (std::size_t si = 0; si < cfg.jammer_sinr_db.size(); ++si) {
        double sinr = cfg.jammer_sinr_db[si];
        ChannelParams params;
        params.sigma2_a = snr_db_to_sigma2(cfg.snr_a_db);
        params.sigma2_v = sinr_db_to_sigma2_v(sinr, params.sigma2_a, cfg.sinr_convention);
        params.b = cfg.b;
        params.g = cfg.g;
        double prior = stationary_jam_prob(params);
        AnchorConfig anchor{cfg.anchor_threshold, cfg.max_propagation};

        // [bin][state] accumulators
        std::vector<double> sum_pw(nbins * 2, 0.0), sum_rf(nbins * 2, 0.0);
        std::vector<std::uint64_t> cnt(nbins * 2, 0);
        for (std::uint64_t f = 0; f < cfg.curve_frames; ++f) {
            std::mt19937_64 rng =
                make_frame_rng(cfg.master_seed, si * cfg.curve_frames + f);
            std::vector<std::uint8_t> bits(cfg.n);
            for (std::uint8_t& bit : bits) bit = static_cast<std::uint8_t>(rng() & 1);
            FrameRecord fr = transmit(bits, params, rng);
            std::vector<double> pw = pointwise_posteriors(fr.received, params, prior);
            std::vector<double> rf = refine_posteriors(pw, params, anchor);
            for (std::size_t i = 0; i < cfg.n; ++i) {
                double mag = std::abs(fr.received[i]);
                auto bin = static_cast<std::size_t>(mag / cfg.grid_step);
                if (bin >= nbins) continue;
                std::size_t slot = bin * 2 + (fr.states[i] == JamState::J ? 1 : 0);
                sum_pw[slot] += pw[i];
                sum_rf[slot] += rf[i];
                ++cnt[slot];
            }
        }
        for (std::size_t bin = 0; bin < nbins; ++bin)
            for (int st = 0; st < 2; ++st) {
                std::size_t slot = bin * 2 + st;
                if (cnt[slot] == 0) continue;
                RefinedCurveRow row;
                row.snr_j_db = sinr;
                row.mag_bin_center = (static_cast<double>(bin) + 0.5) * cfg.grid_step;
                row.state = st ? JamState::J : JamState::A;
                row.mean_pointwise = sum_pw[slot] / static_cast<double>(cnt[slot]);
                row.mean_refined = sum_rf[slot] / static_cast<double>(cnt[slot]);
                row.count = cnt[slot];
                rows.push_back(row);
            }
    }
    return rows;
}

void write_refined_curve_csv(std::ostream& os, const std::vector<RefinedCurveRow>& rows) {
    os << "snr_j_db,mag_bin_center,state,mean_pointwise,mean_refined,count\n";
    for (const RefinedCurveRow& r : rows)
        os << fmt_g(r.snr_j_db) << ',' << fmt_g(r.mag_bin_center) << ','
           << (r.state == JamState::J ? 'J' : 'A') << ',' << fmt_g(r.mean_pointwise) << ','
           << fmt_g(r.mean_refined) << ',' << r.count << '\n';
}

std::vector<LlrCurveRow> llr_curve(const ExperimentConfig& cfg) {
    cfg.validate();
    if (cfg.jammer_sinr_db.empty())
        throw std::invalid_argument("llr_curve: need at least one SINR point");
    ChannelParams params;
    params.sigma2_a = snr_db_to_sigma2(cfg.snr_a_db);
    params.sigma2_v =
        sinr_db_to_sigma2_v(cfg.jammer_sinr_db.front(), params.sigma2_a, cfg.sinr_convention);
    params.b = cfg.b;
    params.g = cfg.g;
    double prior = stationary_jam_prob(params);
    std::size_t npts =
        2 * static_cast<std::size_t>(std::llround(cfg.grid_max / cfg.grid_step)) + 1;
    std::vector<LlrCurveRow> rows;
    rows.reserve(npts);
    for (std::size_t i = 0; i < npts; ++i) {
        double y = -cfg.grid_max + static_cast<double>(i) * cfg.grid_step;
        LlrCurveRow row;
        row.y = y;
        row.llr_awgn = llr_awgn(y, params.sigma2_a);
        row.llr_jam = llr_jam(y, params.sigma2_j());
        row.posterior = posterior_pointwise(std::abs(y), params, prior);
        row.llr_blended = blended_llr(y, row.posterior, params);
        rows.push_back(row);
    }
    return rows;
}

void write_llr_curve_csv(std::ostream& os, const std::vector<LlrCurveRow>& rows) {
    os << "y,llr_awgn,llr_jam,llr_blended,posterior_j\n";
    for (const LlrCurveRow& r : rows)
        os << fmt_g(r.y) << ',' << fmt_g(r.llr_awgn) << ',' << fmt_g(r.llr_jam) << ','
           << fmt_g(r.llr_blended) << ',' << fmt_g(r.posterior) << '\n';
}

}  // namespace jamllr
