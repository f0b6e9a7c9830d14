#include "jamllr/gf2.hpp"

#include <bit>
#include <istream>
#include <ostream>
#include <sstream>
#include <stdexcept>

namespace jamllr::gf2 {

void BitVec::xor_with(const BitVec& other) {
    if (other.size_ != size_) throw std::invalid_argument("BitVec::xor_with: size mismatch");
    for (std::size_t w = 0; w < words_.size(); ++w) words_[w] ^= other.words_[w];
}

bool BitVec::dot(const BitVec& other) const {
    if (other.size_ != size_) throw std::invalid_argument("BitVec::dot: size mismatch");
    std::uint64_t acc = 0;
    for (std::size_t w = 0; w < words_.size(); ++w) acc ^= words_[w] & other.words_[w];
    return std::popcount(acc) & 1;
}

bool BitVec::any() const {
    for (std::uint64_t w : words_)
        if (w) return true;
    return false;
}

BitVec bitvec_from_bits(const std::vector<std::uint8_t>& bits) {
    BitVec v(bits.size());
    for (std::size_t i = 0; i < bits.size(); ++i)
        if (bits[i]) v.set(i, true);
    return v;
}

std::vector<std::uint8_t> bits_from_bitvec(const BitVec& v) {
    std::vector<std::uint8_t> bits(v.size());
    for (std::size_t i = 0; i < v.size(); ++i) bits[i] = v.get(i);
    return bits;
}

BitMatrix::BitMatrix(std::size_t rows, std::size_t cols)
    : rows_(rows), cols_(cols), data_(rows, BitVec(cols)) {}

BitMatrix BitMatrix::identity(std::size_t n) {
    BitMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m.set(i, i, true);
    return m;
}

BitMatrix BitMatrix::transposed() const {
    BitMatrix t(cols_, rows_);
    for (std::size_t r = 0; r < rows_; ++r)
        for (std::size_t c = 0; c < cols_; ++c)
            if (get(r, c)) t.set(c, r, true);
    return t;
}

std::vector<std::size_t> BitMatrix::rref() {
    std::vector<std::size_t> pivots;
    std::size_t pr = 0;
    for (std::size_t c = 0; c < cols_ && pr < rows_; ++c) {
        std::size_t sel = pr;
        while (sel < rows_ && !get(sel, c)) ++sel;
        if (sel == rows_) continue;
        std::swap(data_[sel], data_[pr]);
        for (std::size_t r = 0; r < rows_; ++r)
            if (r != pr && get(r, c)) data_[r].xor_with(data_[pr]);
        pivots.push_back(c);
        ++pr;
    }
    return pivots;
}

std::size_t BitMatrix::rank() const {
    BitMatrix copy = *this;
    return copy.rref().size();
}

BitMatrix BitMatrix::nullspace() const {
    BitMatrix r = *this;
    std::vector<std::size_t> pivots = r.rref();
    std::vector<std::size_t> pivot_of_col(cols_, SIZE_MAX);
    for (std::size_t i = 0; i < pivots.size(); ++i) pivot_of_col[pivots[i]] = i;

    std::vector<std::size_t> free_cols;
    for (std::size_t c = 0; c < cols_; ++c)
        if (pivot_of_col[c] == SIZE_MAX) free_cols.push_back(c);

    BitMatrix ns(free_cols.size(), cols_);
    for (std::size_t i = 0; i < free_cols.size(); ++i) {
        std::size_t f = free_cols[i];
        ns.set(i, f, true);
        for (std::size_t j = 0; j < pivots.size(); ++j)
            if (r.get(j, f)) ns.set(i, pivots[j], true);
    }
    return ns;
}

BitMatrix BitMatrix::multiply_transposed(const BitMatrix& other) const {
    if (other.cols_ != cols_)
        throw std::invalid_argument("BitMatrix::multiply_transposed: inner dimension mismatch");
    BitMatrix out(rows_, other.rows_);
    for (std::size_t r = 0; r < rows_; ++r)
        for (std::size_t c = 0; c < other.rows_; ++c)
            if (data_[r].dot(other.data_[c])) out.set(r, c, true);
    return out;
}

bool BitMatrix::is_zero() const {
    for (const BitVec& r : data_)
        if (r.any()) return false;
    return true;
}

std::string matrix_to_text(const BitMatrix& m) {
    std::ostringstream os;
    write_matrix_text(os, m);
    return os.str();
}

void write_matrix_text(std::ostream& os, const BitMatrix& m) {
    for (std::size_t r = 0; r < m.rows(); ++r) {
        for (std::size_t c = 0; c < m.cols(); ++c) os.put(m.get(r, c) ? '1' : '0');
        os.put('\n');
    }
}

BitMatrix matrix_from_text(std::istream& is) {
    std::vector<std::string> lines;
    std::string line;
    while (std::getline(is, line)) {
        if (!line.empty() && line.back() == '\r') line.pop_back();
        if (line.empty()) continue;
        lines.push_back(line);
    }
    if (lines.empty()) throw std::runtime_error("matrix_from_text: no rows");
    std::size_t cols = lines[0].size();
    BitMatrix m(lines.size(), cols);
    for (std::size_t r = 0; r < lines.size(); ++r) {
        if (lines[r].size() != cols)
            throw std::runtime_error("matrix_from_text: ragged row " + std::to_string(r));
        for (std::size_t c = 0; c < cols; ++c) {
            char ch = lines[r][c];
            if (ch != '0' && ch != '1')
                throw std::runtime_error("matrix_from_text: bad character in row " + std::to_string(r));
            m.set(r, c, ch == '1');
        }
    }
    return m;
}

BitMatrix matrix_from_text(const std::string& text) {
    std::istringstream is(text);
    return matrix_from_text(is);
}

}  // namespace jamllr::gf2
