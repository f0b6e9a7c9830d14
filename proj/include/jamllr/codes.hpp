#pragma once

#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include "jamllr/gf2.hpp"

namespace jamllr {

// Binary linear block code held as generator plus parity-check matrix, with
// parity-check columns pre-packed for fast syndrome accumulation.
struct LinearCode {
    std::size_t n = 0;
    std::size_t k = 0;
    std::string label;
    gf2::BitMatrix generator;     // k x n
    gf2::BitMatrix parity_check;  // (n-k) x n
    std::size_t h_words = 0;      // words per packed column
    std::vector<std::uint64_t> h_cols;  // column j at [j*h_words, (j+1)*h_words)

    const std::uint64_t* column(std::size_t j) const { return h_cols.data() + j * h_words; }
};

// Validates shape, rank and G * H^T = 0; throws std::invalid_argument.
LinearCode make_code(gf2::BitMatrix generator, gf2::BitMatrix parity_check, std::string label);

// Systematic random linear code: G = [I_k | P] with uniform P.
LinearCode make_rlc(std::size_t n, std::size_t k, std::mt19937_64& rng);

struct CaPolarSpec {
    std::size_t n = 0;        // block length, power of two
    std::size_t k = 0;        // information bits
    std::size_t crc_len = 0;
    // Channel indices from least to most reliable; size n.
    std::vector<std::uint16_t> reliability_order;
    std::vector<std::uint8_t> crc_poly;  // MSB first, size crc_len + 1
    std::string version;
};

// Built-in construction for the [128,105] code with an 11-bit CRC.
CaPolarSpec default_ca_polar_spec();
// Reads the text asset written alongside the sources; throws std::runtime_error
// on parse or consistency failures.
CaPolarSpec load_ca_polar_spec(const std::string& path);

// CRC appended to the message, both placed on the most reliable positions,
// remaining positions frozen to zero, then the polar butterfly transform.
LinearCode make_ca_polar(const CaPolarSpec& spec);

std::vector<std::uint8_t> encode(const LinearCode& code, const std::vector<std::uint8_t>& message);
bool is_member(const LinearCode& code, const std::vector<std::uint8_t>& word);

// Remainder of data * x^(deg poly) modulo poly, MSB-first; zero-initialised
// register, so the map data -> remainder is linear.
std::vector<std::uint8_t> crc_remainder(const std::vector<std::uint8_t>& data,
                                        const std::vector<std::uint8_t>& poly);

// In-place butterfly x = u * F^{log2 n} in natural order; self-inverse.
std::vector<std::uint8_t> polar_transform(std::vector<std::uint8_t> u);

// prefix.G.txt and prefix.H.txt, one row per line of 0/1 characters.
void write_code_files(const LinearCode& code, const std::string& prefix);
LinearCode read_code_files(const std::string& g_path, const std::string& h_path,
                           std::string label);

}  // namespace jamllr
