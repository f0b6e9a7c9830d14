#include "jamllr/channel.hpp"

#include <cmath>
#include <stdexcept>

namespace jamllr {

void ChannelParams::validate() const {
    if (!(sigma2_a > 0.0)) throw std::invalid_argument("ChannelParams: sigma2_a must be > 0");
    if (!(sigma2_v >= 0.0)) throw std::invalid_argument("ChannelParams: sigma2_v must be >= 0");
    if (!(b >= 0.0 && b <= 1.0)) throw std::invalid_argument("ChannelParams: b must be in [0,1]");
    if (!(g >= 0.0 && g <= 1.0)) throw std::invalid_argument("ChannelParams: g must be in [0,1]");
}

double snr_db_to_sigma2(double snr_db) {
    return std::pow(10.0, -snr_db / 10.0);
}

double stationary_jam_prob(const ChannelParams& params) {
    params.validate();
    if (params.b + params.g == 0.0)
        throw std::invalid_argument("stationary_jam_prob: b + g must be > 0");
    return params.b / (params.b + params.g);
}

std::vector<JamState> sample_state_sequence_from(const ChannelParams& params, std::size_t n,
                                                 JamState initial, std::mt19937_64& rng) {
    params.validate();
    std::vector<JamState> states(n);
    std::uniform_real_distribution<double> uni(0.0, 1.0);
    JamState s = initial;
    for (std::size_t i = 0; i < n; ++i) {
        states[i] = s;
        double u = uni(rng);
        if (s == JamState::A)
            s = (u < params.b) ? JamState::J : JamState::A;
        else
            s = (u < params.g) ? JamState::A : JamState::J;
    }
    return states;
}

std::vector<JamState> sample_state_sequence(const ChannelParams& params, std::size_t n,
                                            std::mt19937_64& rng) {
    double pi_j = stationary_jam_prob(params);
    std::uniform_real_distribution<double> uni(0.0, 1.0);
    JamState init = (uni(rng) < pi_j) ? JamState::J : JamState::A;
    return sample_state_sequence_from(params, n, init, rng);
}

FrameRecord transmit(const std::vector<std::uint8_t>& bits, const ChannelParams& params,
                     std::mt19937_64& rng) {
    if (bits.empty()) throw std::invalid_argument("transmit: empty frame");
    FrameRecord fr;
    fr.bits = bits;
    fr.symbols.resize(bits.size());
    for (std::size_t i = 0; i < bits.size(); ++i) fr.symbols[i] = 1.0 - 2.0 * bits[i];

    fr.states = sample_state_sequence(params, bits.size(), rng);

    double sd_a = std::sqrt(params.sigma2_a);
    double sd_j = std::sqrt(params.sigma2_j());
    std::normal_distribution<double> std_norm(0.0, 1.0);
    fr.received.resize(bits.size());
    for (std::size_t i = 0; i < bits.size(); ++i) {
        double sd = (fr.states[i] == JamState::J) ? sd_j : sd_a;
        fr.received[i] = fr.symbols[i] + sd * std_norm(rng);
    }
    return fr;
}

}  // namespace jamllr
