#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "jamllr/channel.hpp"

namespace jamllr {

// Matched-filter LLR for BPSK assuming noise variance sigma2: 2*y/sigma2.
double llr_awgn(double y, double sigma2_a);
double llr_jam(double y, double sigma2_j);

// Density of |X| for X ~ N(+-1, sigma2) with equiprobable signs.
// mag must be >= 0.
double folded_pdf(double mag, double sigma2);

// P(state J | |y|) from the folded-Gaussian likelihoods and a prior.
double posterior_pointwise(double mag, const ChannelParams& params, double prior_j);

// One-step Markov prediction from a single neighbour: b*(1-p) + (1-g)*p.
double anchor_update_single(double p_neighbor, const ChannelParams& params);
// Prediction from two opposite neighbours, weighting each joint neighbour
// configuration by its conditional agreement probability.
double anchor_update_double(double p_left, double p_right, const ChannelParams& params);

std::vector<double> pointwise_posteriors(const std::vector<double>& received,
                                         const ChannelParams& params, double prior_j);

struct AnchorConfig {
    double threshold = 0.2;
    std::size_t max_propagation = 0;  // 0 = unbounded
};

// Keeps entries at or above the threshold as anchors and replaces the rest by
// Markov predictions propagated outward from the anchors, one index per round.
// Fronts arriving at the same index in the same round combine via the double
// update; a front stops once its prediction falls below the threshold or the
// hop cap is reached. Untouched entries keep their input value. Output is
// clamped to [0,1].
std::vector<double> refine_posteriors(const std::vector<double>& initial,
                                      const ChannelParams& params, const AnchorConfig& cfg);

double blended_llr(double y, double p_j, const ChannelParams& params);

std::vector<double> blended_llrs(const std::vector<double>& received,
                                 const std::vector<double>& posteriors,
                                 const ChannelParams& params);

// Exact per-index jamming posteriors by enumerating all 2^n state sequences
// (stationary start). Throws std::invalid_argument for n > 20.
std::vector<double> exact_posterior_bruteforce(const std::vector<double>& received,
                                               const ChannelParams& params);
// Forward-backward smoothing; same quantity in O(n).
std::vector<double> exact_posterior_smoothing(const std::vector<double>& received,
                                              const ChannelParams& params);

struct ConfusionCounts {
    std::uint64_t fn_miss = 0;    // jammed bits estimated below threshold
    std::uint64_t jam_total = 0;
    std::uint64_t fp_hit = 0;     // clean bits estimated at or above threshold
    std::uint64_t awgn_total = 0;

    std::optional<double> fn_rate() const {
        if (jam_total == 0) return std::nullopt;
        return double(fn_miss) / double(jam_total);
    }
    std::optional<double> fp_rate() const {
        if (awgn_total == 0) return std::nullopt;
        return double(fp_hit) / double(awgn_total);
    }
    void accumulate(const ConfusionCounts& other);
};

ConfusionCounts estimator_confusion(const std::vector<double>& estimate,
                                    const std::vector<JamState>& truth, double threshold);

}  // namespace jamllr
