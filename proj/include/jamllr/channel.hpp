#pragma once

#include <cstdint>
#include <random>
#include <vector>

namespace jamllr {

enum class JamState : std::uint8_t { A = 0, J = 1 };

// BPSK over AWGN with a two-state Markov jammer. In state J the jammer adds
// independent Gaussian interference on top of the thermal noise.
struct ChannelParams {
    double sigma2_a = 1.0;  // thermal noise variance (state A)
    double sigma2_v = 0.0;  // jammer interference variance
    double b = 0.0;         // P(A -> J)
    double g = 0.0;         // P(J -> A)

    double sigma2_j() const { return sigma2_a + sigma2_v; }
    // Throws std::invalid_argument on out-of-range parameters.
    void validate() const;
};

// Unit-energy BPSK: snr_db = -10*log10(sigma2).
double snr_db_to_sigma2(double snr_db);

// Stationary probability of state J, b/(b+g). Throws if b+g == 0.
double stationary_jam_prob(const ChannelParams& params);

struct FrameRecord {
    std::vector<std::uint8_t> bits;
    std::vector<double> symbols;   // 1 - 2*bit
    std::vector<JamState> states;
    std::vector<double> received;
};

// Chain started from the stationary distribution.
std::vector<JamState> sample_state_sequence(const ChannelParams& params, std::size_t n,
                                            std::mt19937_64& rng);
std::vector<JamState> sample_state_sequence_from(const ChannelParams& params, std::size_t n,
                                                 JamState initial, std::mt19937_64& rng);

// Draws states then per-bit noise scaled by the active state's deviation.
// Throws std::invalid_argument on empty input or invalid params.
FrameRecord transmit(const std::vector<std::uint8_t>& bits, const ChannelParams& params,
                     std::mt19937_64& rng);

}  // namespace jamllr
