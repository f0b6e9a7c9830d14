#pragma once

#include <cstddef>
#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

namespace jamllr::gf2 {

// Bit vector packed into 64-bit words, LSB-first within each word.
class BitVec {
public:
    BitVec() = default;
    explicit BitVec(std::size_t size) : size_(size), words_((size + 63) / 64, 0) {}

    std::size_t size() const { return size_; }
    std::size_t word_count() const { return words_.size(); }
    std::uint64_t word(std::size_t w) const { return words_[w]; }
    const std::uint64_t* data() const { return words_.data(); }

    bool get(std::size_t i) const { return (words_[i >> 6] >> (i & 63)) & 1u; }
    void set(std::size_t i, bool v) {
        std::uint64_t mask = std::uint64_t(1) << (i & 63);
        if (v) words_[i >> 6] |= mask; else words_[i >> 6] &= ~mask;
    }
    void flip(std::size_t i) { words_[i >> 6] ^= std::uint64_t(1) << (i & 63); }

    void xor_with(const BitVec& other);
    // Inner product over GF(2).
    bool dot(const BitVec& other) const;
    bool any() const;

    bool operator==(const BitVec& other) const = default;

private:
    std::size_t size_ = 0;
    std::vector<std::uint64_t> words_;
};

BitVec bitvec_from_bits(const std::vector<std::uint8_t>& bits);
std::vector<std::uint8_t> bits_from_bitvec(const BitVec& v);

// Dense matrix over GF(2), stored as one BitVec per row.
class BitMatrix {
public:
    BitMatrix() = default;
    BitMatrix(std::size_t rows, std::size_t cols);

    static BitMatrix identity(std::size_t n);

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }
    BitVec& row(std::size_t r) { return data_[r]; }
    const BitVec& row(std::size_t r) const { return data_[r]; }

    bool get(std::size_t r, std::size_t c) const { return data_[r].get(c); }
    void set(std::size_t r, std::size_t c, bool v) { data_[r].set(c, v); }

    BitMatrix transposed() const;
    // In-place reduced row echelon form; returns pivot column per pivot row.
    std::vector<std::size_t> rref();
    std::size_t rank() const;
    // Basis of the right nullspace, one vector per row (may have 0 rows).
    BitMatrix nullspace() const;
    // this * other^T
    BitMatrix multiply_transposed(const BitMatrix& other) const;
    bool is_zero() const;

    bool operator==(const BitMatrix& other) const = default;

private:
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<BitVec> data_;
};

// Text form: one row per line of '0'/'1' characters.
std::string matrix_to_text(const BitMatrix& m);
void write_matrix_text(std::ostream& os, const BitMatrix& m);
// Throws std::runtime_error on bad characters or ragged rows.
BitMatrix matrix_from_text(std::istream& is);
BitMatrix matrix_from_text(const std::string& text);

}  // namespace jamllr::gf2
