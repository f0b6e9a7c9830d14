#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "jamllr/codes.hpp"

namespace jamllr::orbgrand {

struct DecoderConfig {
    std::uint64_t max_queries = 1'000'000;
    std::uint64_t max_logistic_weight = 0;  // 0 = unbounded
};

struct DecodeOutcome {
    std::optional<std::vector<std::uint8_t>> codeword;
    std::uint64_t queries = 0;
    bool abandoned = false;
};

// Indices ordered by ascending |llr|; ties broken towards the lower index.
// Element r holds the index with reliability rank r+1.
std::vector<std::size_t> rank_by_reliability(const std::vector<double>& llrs);

// Streams error patterns as sets of reliability ranks (1-based, ascending),
// i.e. partitions of the logistic weight into distinct parts <= n. Order:
// ascending weight, then ascending part count, then lexicographic. The first
// emission is the empty pattern.
class PatternStream {
public:
    explicit PatternStream(std::size_t n, std::uint64_t max_weight = 0);

    // Next pattern, or nullptr once exhausted. The pointee is reused.
    const std::vector<std::size_t>* next();

    std::uint64_t weight() const { return weight_; }

private:
    bool complete_from(std::size_t slot, std::size_t floor_value);
    bool next_within_shape();
    bool advance_shape();

    std::size_t n_;
    std::uint64_t cap_;
    std::uint64_t weight_ = 0;
    std::size_t part_count_ = 0;
    std::vector<std::size_t> parts_;
    bool started_ = false;
    bool done_ = false;
};

// Guesses noise patterns in logistic-weight order until the flipped hard
// decision passes the parity check or the query budget runs out. Queries
// count tested patterns including the empty one.
DecodeOutcome decode(const std::vector<double>& llrs, const LinearCode& code,
                     const DecoderConfig& cfg);

}  // namespace jamllr::orbgrand
