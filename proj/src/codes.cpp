#include "jamllr/codes.hpp"

#include <algorithm>
#include <bit>
#include <fstream>
#include <sstream>
#include <stdexcept>

namespace jamllr {

namespace {

void pack_columns(LinearCode& code) {
    std::size_t r = code.n - code.k;
    code.h_words = (r + 63) / 64;
    code.h_cols.assign(code.n * code.h_words, 0);
    for (std::size_t j = 0; j < code.n; ++j)
        for (std::size_t i = 0; i < r; ++i)
            if (code.parity_check.get(i, j))
                code.h_cols[j * code.h_words + (i >> 6)] |= std::uint64_t(1) << (i & 63);
}

}  // namespace

LinearCode make_code(gf2::BitMatrix generator, gf2::BitMatrix parity_check, std::string label) {
    std::size_t k = generator.rows();
    std::size_t n = generator.cols();
    if (k == 0 || n == 0 || k > n)
        throw std::invalid_argument("make_code: need 0 < k <= n");
    if (parity_check.rows() != n - k || parity_check.cols() != n)
        throw std::invalid_argument("make_code: parity-check shape must be (n-k) x n");
    if (generator.rank() != k)
        throw std::invalid_argument("make_code: generator is rank-deficient");
    if (n > k && parity_check.rank() != n - k)
        throw std::invalid_argument("make_code: parity-check is rank-deficient");
    if (!generator.multiply_transposed(parity_check).is_zero())
        throw std::invalid_argument("make_code: generator and parity-check are not orthogonal");

    LinearCode code;
    code.n = n;
    code.k = k;
    code.label = std::move(label);
    code.generator = std::move(generator);
    code.parity_check = std::move(parity_check);
    pack_columns(code);
    return code;
}

LinearCode make_rlc(std::size_t n, std::size_t k, std::mt19937_64& rng) {
    if (k == 0 || k >= n) throw std::invalid_argument("make_rlc: need 0 < k < n");
    std::size_t r = n - k;
    gf2::BitMatrix p(k, r);
    for (std::size_t i = 0; i < k; ++i)
        for (std::size_t j = 0; j < r; ++j)
            p.set(i, j, rng() & 1);

    gf2::BitMatrix gen(k, n);
    for (std::size_t i = 0; i < k; ++i) {
        gen.set(i, i, true);
        for (std::size_t j = 0; j < r; ++j) gen.set(i, k + j, p.get(i, j));
    }
    gf2::BitMatrix par(r, n);
    for (std::size_t i = 0; i < r; ++i) {
        for (std::size_t j = 0; j < k; ++j) par.set(i, j, p.get(j, i));
        par.set(i, k + i, true);
    }
    std::ostringstream label;
    label << "RLC[" << n << "," << k << "]";
    return make_code(std::move(gen), std::move(par), label.str());
}

std::vector<std::uint8_t> crc_remainder(const std::vector<std::uint8_t>& data,
                                        const std::vector<std::uint8_t>& poly) {
    if (poly.size() < 2 || poly[0] != 1)
        throw std::invalid_argument("crc_remainder: polynomial must start with 1 and have degree >= 1");
    std::size_t deg = poly.size() - 1;
    std::vector<std::uint8_t> reg(deg, 0);
    for (std::uint8_t bit : data) {
        std::uint8_t fb = (bit & 1) ^ reg[0];
        for (std::size_t i = 0; i + 1 < deg; ++i)
            reg[i] = reg[i + 1] ^ (fb & poly[i + 1]);
        reg[deg - 1] = fb & poly[deg];
    }
    return reg;
}

std::vector<std::uint8_t> polar_transform(std::vector<std::uint8_t> u) {
    std::size_t n = u.size();
    if (n == 0 || (n & (n - 1)) != 0)
        throw std::invalid_argument("polar_transform: length must be a power of two");
    for (std::size_t len = 1; len < n; len <<= 1)
        for (std::size_t i = 0; i < n; i += len << 1)
            for (std::size_t j = 0; j < len; ++j)
                u[i + j] ^= u[i + j + len];
    return u;
}

LinearCode make_ca_polar(const CaPolarSpec& spec) {
    std::size_t n = spec.n;
    if (n == 0 || (n & (n - 1)) != 0)
        throw std::invalid_argument("make_ca_polar: n must be a power of two");
    if (spec.k == 0 || spec.k + spec.crc_len > n)
        throw std::invalid_argument("make_ca_polar: need 0 < k + crc_len <= n");
    if (spec.reliability_order.size() != n)
        throw std::invalid_argument("make_ca_polar: reliability order must list all n indices");
    std::vector<std::uint8_t> seen(n, 0);
    for (std::uint16_t idx : spec.reliability_order) {
        if (idx >= n || seen[idx])
            throw std::invalid_argument("make_ca_polar: reliability order is not a permutation");
        seen[idx] = 1;
    }
    if (spec.crc_poly.size() != spec.crc_len + 1)
        throw std::invalid_argument("make_ca_polar: crc polynomial length must be crc_len + 1");

    std::size_t data_len = spec.k + spec.crc_len;
    std::vector<std::uint16_t> data_pos(spec.reliability_order.end() - data_len,
                                        spec.reliability_order.end());
    std::sort(data_pos.begin(), data_pos.end());

    gf2::BitMatrix gen(spec.k, n);
    std::vector<std::uint8_t> msg(spec.k, 0);
    for (std::size_t row = 0; row < spec.k; ++row) {
        msg[row] = 1;
        std::vector<std::uint8_t> crc = crc_remainder(msg, spec.crc_poly);
        std::vector<std::uint8_t> u(n, 0);
        for (std::size_t t = 0; t < data_len; ++t)
            u[data_pos[t]] = (t < spec.k) ? msg[t] : crc[t - spec.k];
        std::vector<std::uint8_t> x = polar_transform(std::move(u));
        for (std::size_t c = 0; c < n; ++c)
            if (x[c]) gen.set(row, c, true);
        msg[row] = 0;
    }

    gf2::BitMatrix par = gen.nullspace();
    std::ostringstream label;
    label << "CA-Polar[" << n << "," << spec.k << "]";
    return make_code(std::move(gen), std::move(par), label.str());
}

std::vector<std::uint8_t> encode(const LinearCode& code, const std::vector<std::uint8_t>& message) {
    if (message.size() != code.k) throw std::invalid_argument("encode: message length != k");
    gf2::BitVec acc(code.n);
    for (std::size_t i = 0; i < code.k; ++i)
        if (message[i] & 1) acc.xor_with(code.generator.row(i));
    return gf2::bits_from_bitvec(acc);
}

bool is_member(const LinearCode& code, const std::vector<std::uint8_t>& word) {
    if (word.size() != code.n) throw std::invalid_argument("is_member: word length != n");
    gf2::BitVec w = gf2::bitvec_from_bits(word);
    for (std::size_t r = 0; r < code.n - code.k; ++r)
        if (code.parity_check.row(r).dot(w)) return false;
    return true;
}

void write_code_files(const LinearCode& code, const std::string& prefix) {
    for (int which = 0; which < 2; ++which) {
        std::string path = prefix + (which == 0 ? ".G.txt" : ".H.txt");
        std::ofstream os(path);
        if (!os) throw std::runtime_error("write_code_files: cannot open " + path);
        gf2::write_matrix_text(os, which == 0 ? code.generator : code.parity_check);
        if (!os) throw std::runtime_error("write_code_files: write failed for " + path);
    }
}

LinearCode read_code_files(const std::string& g_path, const std::string& h_path,
                           std::string label) {
    std::ifstream gs(g_path);
    if (!gs) throw std::runtime_error("read_code_files: cannot open " + g_path);
    gf2::BitMatrix gen = gf2::matrix_from_text(gs);
    std::ifstream hs(h_path);
    if (!hs) throw std::runtime_error("read_code_files: cannot open " + h_path);
    gf2::BitMatrix par = gf2::matrix_from_text(hs);
    return make_code(std::move(gen), std::move(par), std::move(label));
}

namespace {

std::vector<std::string> read_asset_fields(std::istream& is, const std::string& path) {
    std::vector<std::string> lines;
    std::string line;
    while (std::getline(is, line)) {
        if (!line.empty() && line.back() == '\r') line.pop_back();
        if (line.empty() || line[0] == '#') continue;
        lines.push_back(line);
    }
    if (lines.empty()) throw std::runtime_error("load_ca_polar_spec: empty asset " + path);
    return lines;
}

}  // namespace

CaPolarSpec load_ca_polar_spec(const std::string& path) {
    std::ifstream is(path);
    if (!is) throw std::runtime_error("load_ca_polar_spec: cannot open " + path);
    CaPolarSpec spec;
    bool have_n = false, have_k = false, have_crc = false, have_rel = false, have_ver = false;
    for (const std::string& line : read_asset_fields(is, path)) {
        std::istringstream ls(line);
        std::string key;
        ls >> key;
        if (key == "version") {
            ls >> spec.version;
            have_ver = true;
        } else if (key == "n") {
            ls >> spec.n;
            have_n = true;
        } else if (key == "k") {
            ls >> spec.k;
            have_k = true;
        } else if (key == "crc_poly") {
            std::string bits;
            ls >> bits;
            for (char c : bits) {
                if (c != '0' && c != '1')
                    throw std::runtime_error("load_ca_polar_spec: bad crc_poly digit in " + path);
                spec.crc_poly.push_back(c == '1');
            }
            if (spec.crc_poly.size() < 2)
                throw std::runtime_error("load_ca_polar_spec: crc_poly too short in " + path);
            spec.crc_len = spec.crc_poly.size() - 1;
            have_crc = true;
        } else if (key == "reliability") {
            unsigned v;
            while (ls >> v) spec.reliability_order.push_back(static_cast<std::uint16_t>(v));
            have_rel = true;
        } else {
            throw std::runtime_error("load_ca_polar_spec: unknown field '" + key + "' in " + path);
        }
        if (ls.fail() && !ls.eof())
            throw std::runtime_error("load_ca_polar_spec: malformed field '" + key + "' in " + path);
    }
    if (!have_n || !have_k || !have_crc || !have_rel || !have_ver)
        throw std::runtime_error("load_ca_polar_spec: missing fields in " + path);
    if (spec.reliability_order.size() != spec.n)
        throw std::runtime_error("load_ca_polar_spec: reliability list length != n in " + path);
    return spec;
}

}  // namespace jamllr
