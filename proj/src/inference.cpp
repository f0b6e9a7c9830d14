#include "jamllr/inference.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace jamllr {

namespace {

constexpr double kInvSqrt2Pi = 0.39894228040143267794;

double clamp01(double x) { return std::min(1.0, std::max(0.0, x)); }

void check_sigma2(double sigma2) {
    if (!(sigma2 > 0.0)) throw std::invalid_argument("noise variance must be > 0");
}

// log folded_pdf, stable for large mag/sigma2 ratios.
double folded_log_pdf(double mag, double sigma2) {
    double sd = std::sqrt(sigma2);
    double base = -0.5 * (mag - 1.0) * (mag - 1.0) / sigma2;
    double delta = -2.0 * mag / sigma2;
    return std::log(kInvSqrt2Pi / sd) + base + std::log1p(std::exp(delta));
}

}  // namespace

double llr_awgn(double y, double sigma2_a) {
    check_sigma2(sigma2_a);
    return 2.0 * y / sigma2_a;
}

double llr_jam(double y, double sigma2_j) {
    check_sigma2(sigma2_j);
    return 2.0 * y / sigma2_j;
}

double folded_pdf(double mag, double sigma2) {
    check_sigma2(sigma2);
    if (!(mag >= 0.0)) throw std::invalid_argument("folded_pdf: mag must be >= 0");
    double sd = std::sqrt(sigma2);
    double a = (mag - 1.0) / sd;
    double b = (mag + 1.0) / sd;
    return kInvSqrt2Pi / sd * (std::exp(-0.5 * a * a) + std::exp(-0.5 * b * b));
}

double posterior_pointwise(double mag, const ChannelParams& params, double prior_j) {
    params.validate();
    if (!(prior_j >= 0.0 && prior_j <= 1.0))
        throw std::invalid_argument("posterior_pointwise: prior_j must be in [0,1]");
    if (prior_j == 0.0) return 0.0;
    if (prior_j == 1.0) return 1.0;
    double fj = folded_pdf(mag, params.sigma2_j());
    double fa = folded_pdf(mag, params.sigma2_a);
    double num = prior_j * fj;
    double denom = num + (1.0 - prior_j) * fa;
    if (denom > 0.0 && std::isfinite(denom)) return num / denom;
    // Underflow fallback in log domain.
    double t = std::log(prior_j) - std::log1p(-prior_j) + folded_log_pdf(mag, params.sigma2_j()) -
               folded_log_pdf(mag, params.sigma2_a);
    return 1.0 / (1.0 + std::exp(-t));
}

double anchor_update_single(double p_neighbor, const ChannelParams& params) {
    return params.b * (1.0 - p_neighbor) + (1.0 - params.g) * p_neighbor;
}

double anchor_update_double(double p_left, double p_right, const ChannelParams& params) {
    double b = params.b, g = params.g;
    auto ratio = [](double num, double denom) { return denom > 0.0 ? num / denom : 0.0; };
    double w_jj = ratio((1.0 - g) * (1.0 - g), (1.0 - g) * (1.0 - g) + b * g);
    double w_aj = ratio(1.0 - g, (1.0 - g) + (1.0 - b));
    double w_aa = ratio(b * g, b * g + (1.0 - b) * (1.0 - b));
    double pl = p_left, pr = p_right;
    return w_jj * pl * pr + w_aj * (pl * (1.0 - pr) + (1.0 - pl) * pr) +
           w_aa * (1.0 - pl) * (1.0 - pr);
}

std::vector<double> pointwise_posteriors(const std::vector<double>& received,
                                         const ChannelParams& params, double prior_j) {
    std::vector<double> out(received.size());
    for (std::size_t i = 0; i < received.size(); ++i)
        out[i] = posterior_pointwise(std::abs(received[i]), params, prior_j);
    return out;
}

std::vector<double> refine_posteriors(const std::vector<double>& initial,
                                      const ChannelParams& params, const AnchorConfig& cfg) {
    params.validate();
    std::size_t n = initial.size();
    std::vector<double> out = initial;
    if (n == 0) return out;

    struct Front {
        std::size_t cell;
        int dir;
        std::size_t hops;
        double value;
    };

    std::vector<std::uint8_t> claimed(n, 0);
    std::vector<Front> active;
    for (std::size_t i = 0; i < n; ++i) {
        if (initial[i] >= cfg.threshold) {
            claimed[i] = 1;
            active.push_back({i, -1, 0, initial[i]});
            active.push_back({i, +1, 0, initial[i]});
        }
    }

    struct Proposal {
        bool has_left = false, has_right = false;  // direction the front travels in
        double left_value = 0.0, right_value = 0.0;
        std::size_t left_hops = 0, right_hops = 0;
    };
    std::vector<Proposal> props(n);
    std::vector<std::size_t> touched;

    while (!active.empty()) {
        touched.clear();
        for (const Front& f : active) {
            if (cfg.max_propagation > 0 && f.hops >= cfg.max_propagation) continue;
            if (f.dir < 0 && f.cell == 0) continue;
            std::size_t t = (f.dir < 0) ? f.cell - 1 : f.cell + 1;
            if (t >= n || claimed[t]) continue;
            Proposal& p = props[t];
            if (!p.has_left && !p.has_right) touched.push_back(t);
            if (f.dir > 0) {
                p.has_left = true;
                p.left_value = f.value;
                p.left_hops = f.hops + 1;
            } else {
                p.has_right = true;
                p.right_value = f.value;
                p.right_hops = f.hops + 1;
            }
        }
        active.clear();
        std::sort(touched.begin(), touched.end());
        for (std::size_t t : touched) {
            Proposal& p = props[t];
            double v;
            if (p.has_left && p.has_right)
                v = anchor_update_double(p.left_value, p.right_value, params);
            else if (p.has_left)
                v = anchor_update_single(p.left_value, params);
            else
                v = anchor_update_single(p.right_value, params);
            v = clamp01(v);
            out[t] = v;
            claimed[t] = 1;
            if (v >= cfg.threshold) {
                if (p.has_left) active.push_back({t, +1, p.left_hops, v});
                if (p.has_right) active.push_back({t, -1, p.right_hops, v});
            }
            p = Proposal{};
        }
    }
    for (double& v : out) v = clamp01(v);
    return out;
}

double blended_llr(double y, double p_j, const ChannelParams& params) {
    params.validate();
    if (!(p_j >= 0.0 && p_j <= 1.0))
        throw std::invalid_argument("blended_llr: p_j must be in [0,1]");
    return llr_awgn(y, params.sigma2_a) * (1.0 - p_j) + llr_jam(y, params.sigma2_j()) * p_j;
}

std::vector<double> blended_llrs(const std::vector<double>& received,
                                 const std::vector<double>& posteriors,
                                 const ChannelParams& params) {
    if (received.size() != posteriors.size())
        throw std::invalid_argument("blended_llrs: size mismatch");
    std::vector<double> out(received.size());
    for (std::size_t i = 0; i < received.size(); ++i)
        out[i] = blended_llr(received[i], posteriors[i], params);
    return out;
}

namespace {

// Per-index emissions for states {A, J}, scaled so max(e_a, e_j) == 1.
// A zero pair (double underflow under both states) becomes uninformative.
void scaled_emissions(const std::vector<double>& received, const ChannelParams& params,
                      std::vector<double>& e_a, std::vector<double>& e_j) {
    double s2a = params.sigma2_a, s2j = params.sigma2_j();
    std::size_t n = received.size();
    e_a.resize(n);
    e_j.resize(n);
    for (std::size_t i = 0; i < n; ++i) {
        double m = std::abs(received[i]);
        double ea = folded_pdf(m, s2a);
        double ej = folded_pdf(m, s2j);
        double top = std::max(ea, ej);
        if (top > 0.0) {
            e_a[i] = ea / top;
            e_j[i] = ej / top;
        } else {
            e_a[i] = 1.0;
            e_j[i] = 1.0;
        }
    }
}

}  // namespace

std::vector<double> exact_posterior_bruteforce(const std::vector<double>& received,
                                               const ChannelParams& params) {
    std::size_t n = received.size();
    if (n == 0) return {};
    if (n > 20) throw std::invalid_argument("exact_posterior_bruteforce: n > 20");
    double pi_j = stationary_jam_prob(params);
    std::vector<double> e_a, e_j;
    scaled_emissions(received, params, e_a, e_j);

    double trans[2][2] = {{1.0 - params.b, params.b}, {params.g, 1.0 - params.g}};
    double prior[2] = {1.0 - pi_j, pi_j};

    std::vector<double> jam_mass(n, 0.0);
    double total = 0.0;
    for (std::uint32_t mask = 0; mask < (1u << n); ++mask) {
        int s0 = mask & 1;
        double w = prior[s0] * (s0 ? e_j[0] : e_a[0]);
        int prev = s0;
        for (std::size_t i = 1; i < n && w > 0.0; ++i) {
            int s = (mask >> i) & 1;
            w *= trans[prev][s] * (s ? e_j[i] : e_a[i]);
            prev = s;
        }
        if (w <= 0.0) continue;
        total += w;
        for (std::size_t i = 0; i < n; ++i)
            if ((mask >> i) & 1) jam_mass[i] += w;
    }
    std::vector<double> out(n);
    for (std::size_t i = 0; i < n; ++i) out[i] = jam_mass[i] / total;
    return out;
}

std::vector<double> exact_posterior_smoothing(const std::vector<double>& received,
                                              const ChannelParams& params) {
    std::size_t n = received.size();
    if (n == 0) return {};
    double pi_j = stationary_jam_prob(params);
    std::vector<double> e_a, e_j;
    scaled_emissions(received, params, e_a, e_j);

    double trans[2][2] = {{1.0 - params.b, params.b}, {params.g, 1.0 - params.g}};

    std::vector<double> alpha_a(n), alpha_j(n), scale(n);
    double fa = (1.0 - pi_j) * e_a[0];
    double fj = pi_j * e_j[0];
    scale[0] = fa + fj;
    if (scale[0] <= 0.0) scale[0] = 1.0;
    alpha_a[0] = fa / scale[0];
    alpha_j[0] = fj / scale[0];
    for (std::size_t i = 1; i < n; ++i) {
        fa = (alpha_a[i - 1] * trans[0][0] + alpha_j[i - 1] * trans[1][0]) * e_a[i];
        fj = (alpha_a[i - 1] * trans[0][1] + alpha_j[i - 1] * trans[1][1]) * e_j[i];
        scale[i] = fa + fj;
        if (scale[i] <= 0.0) scale[i] = 1.0;
        alpha_a[i] = fa / scale[i];
        alpha_j[i] = fj / scale[i];
    }

    std::vector<double> out(n);
    double beta_a = 1.0, beta_j = 1.0;
    for (std::size_t ii = n; ii-- > 0;) {
        double ga = alpha_a[ii] * beta_a;
        double gj = alpha_j[ii] * beta_j;
        double tot = ga + gj;
        out[ii] = tot > 0.0 ? gj / tot : pi_j;
        if (ii > 0) {
            double na = (trans[0][0] * e_a[ii] * beta_a + trans[0][1] * e_j[ii] * beta_j) / scale[ii];
            double nj = (trans[1][0] * e_a[ii] * beta_a + trans[1][1] * e_j[ii] * beta_j) / scale[ii];
            beta_a = na;
            beta_j = nj;
        }
    }
    return out;
}

void ConfusionCounts::accumulate(const ConfusionCounts& other) {
    fn_miss += other.fn_miss;
    jam_total += other.jam_total;
    fp_hit += other.fp_hit;
    awgn_total += other.awgn_total;
}

ConfusionCounts estimator_confusion(const std::vector<double>& estimate,
                                    const std::vector<JamState>& truth, double threshold) {
    if (estimate.size() != truth.size())
        throw std::invalid_argument("estimator_confusion: size mismatch");
    ConfusionCounts c;
    for (std::size_t i = 0; i < estimate.size(); ++i) {
        bool flagged = estimate[i] >= threshold;
        if (truth[i] == JamState::J) {
            ++c.jam_total;
            if (!flagged) ++c.fn_miss;
        } else {
            ++c.awgn_total;
            if (flagged) ++c.fp_hit;
        }
    }
    return c;
}

}  // namespace jamllr
