#include "jamllr/orbgrand.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <stdexcept>

namespace jamllr::orbgrand {

std::vector<std::size_t> rank_by_reliability(const std::vector<double>& llrs) {
    std::vector<std::size_t> idx(llrs.size());
    std::iota(idx.begin(), idx.end(), std::size_t{0});
    std::stable_sort(idx.begin(), idx.end(), [&](std::size_t a, std::size_t b) {
        return std::abs(llrs[a]) < std::abs(llrs[b]);
    });
    return idx;
}

PatternStream::PatternStream(std::size_t n, std::uint64_t max_weight) : n_(n) {
    std::uint64_t full = std::uint64_t(n) * (n + 1) / 2;
    cap_ = (max_weight == 0) ? full : std::min(max_weight, full);
}

// Fills parts_[slot..] with the lexicographically smallest ascending distinct
// values <= n_ summing to the remaining weight, with parts_[slot] >= floor_value.
bool PatternStream::complete_from(std::size_t slot, std::size_t floor_value) {
    std::uint64_t used = 0;
    for (std::size_t i = 0; i < slot; ++i) used += parts_[i];
    std::size_t prev = (slot > 0) ? parts_[slot - 1] : 0;
    for (std::size_t j = slot; j < part_count_; ++j) {
        std::uint64_t rem = weight_ - used;
        std::uint64_t r = part_count_ - j;  // slots left including this one
        std::uint64_t lo = (j == slot) ? std::max<std::uint64_t>(prev + 1, floor_value) : prev + 1;
        if (r == 1) {
            if (rem < lo || rem > n_) return false;
            parts_[j] = static_cast<std::size_t>(rem);
            return true;
        }
        std::uint64_t tail_min = r * (r - 1) / 2;  // strictly increasing follow-up
        if (rem < tail_min) return false;
        std::uint64_t hi = (rem - tail_min) / r;
        std::uint64_t max_tail = (r - 1) * n_ - (r - 1) * (r - 2) / 2;
        std::uint64_t lo_sum = (rem > max_tail) ? rem - max_tail : 0;
        std::uint64_t c = std::max(lo, lo_sum);
        if (c > hi) return false;
        parts_[j] = static_cast<std::size_t>(c);
        used += c;
        prev = static_cast<std::size_t>(c);
    }
    return false;  // part_count_ == 0 never reaches here with slot == 0
}

bool PatternStream::next_within_shape() {
    if (part_count_ < 2) return false;
    for (std::size_t i = part_count_ - 1; i-- > 0;)
        if (complete_from(i, parts_[i] + 1)) return true;
    return false;
}

bool PatternStream::advance_shape() {
    for (;;) {
        for (std::uint64_t m = part_count_ + 1;
             m <= n_ && m * (m + 1) / 2 <= weight_; ++m) {
            part_count_ = static_cast<std::size_t>(m);
            parts_.resize(part_count_);
            if (complete_from(0, 1)) return true;
        }
        if (weight_ + 1 > cap_) {
            done_ = true;
            return false;
        }
        ++weight_;
        part_count_ = 0;
    }
}

const std::vector<std::size_t>* PatternStream::next() {
    if (done_) return nullptr;
    if (!started_) {
        started_ = true;
        weight_ = 0;
        part_count_ = 0;
        parts_.clear();
        return &parts_;
    }
    if (next_within_shape()) return &parts_;
    if (advance_shape()) return &parts_;
    return nullptr;
}

DecodeOutcome decode(const std::vector<double>& llrs, const LinearCode& code,
                     const DecoderConfig& cfg) {
    if (llrs.size() != code.n) throw std::invalid_argument("decode: llr length != n");

    std::vector<std::size_t> perm = rank_by_reliability(llrs);
    std::vector<std::uint8_t> hard(code.n);
    for (std::size_t i = 0; i < code.n; ++i) hard[i] = llrs[i] < 0.0;

    std::size_t words = code.h_words;
    std::vector<std::uint64_t> s0(words, 0), s(words);
    for (std::size_t i = 0; i < code.n; ++i)
        if (hard[i]) {
            const std::uint64_t* col = code.column(i);
            for (std::size_t w = 0; w < words; ++w) s0[w] ^= col[w];
        }

    DecodeOutcome out;
    PatternStream ps(code.n, cfg.max_logistic_weight);
    while (const std::vector<std::size_t>* pat = ps.next()) {
        if (out.queries >= cfg.max_queries) {
            out.abandoned = true;
            return out;
        }
        ++out.queries;
        bool zero;
        if (words == 1) {
            std::uint64_t acc = s0[0];
            for (std::size_t r : *pat) acc ^= code.column(perm[r - 1])[0];
            zero = (acc == 0);
        } else {
            std::copy(s0.begin(), s0.end(), s.begin());
            for (std::size_t r : *pat) {
                const std::uint64_t* col = code.column(perm[r - 1]);
                for (std::size_t w = 0; w < words; ++w) s[w] ^= col[w];
            }
            zero = std::all_of(s.begin(), s.end(), [](std::uint64_t w) { return w == 0; });
        }
        if (!zero) continue;
        std::vector<std::uint8_t> cw = hard;
        for (std::size_t r : *pat) cw[perm[r - 1]] ^= 1;
        out.codeword = std::move(cw);
        return out;
    }
    out.abandoned = true;  // pattern space exhausted below the query budget
    return out;
}

}  // namespace jamllr::orbgrand
