#include "jamllr/codes.hpp"

namespace jamllr {

namespace {

// Channel indices for block length 128, least reliable first.
constexpr std::uint16_t kReliabilityN128[128] = {
    0,   1,   2,   4,   8,   16,  32,  3,   5,   64,  9,   6,   17,  10,  18,  12,
    33,  65,  20,  34,  24,  36,  7,   66,  11,  40,  68,  19,  13,  48,  14,  72,
    21,  35,  26,  80,  37,  25,  22,  38,  96,  67,  41,  28,  69,  42,  49,  74,
    70,  44,  81,  50,  73,  15,  52,  23,  76,  82,  56,  27,  97,  39,  84,  29,
    43,  98,  88,  30,  71,  45,  100, 51,  46,  75,  104, 53,  77,  54,  83,  57,
    112, 78,  85,  58,  99,  86,  60,  89,  101, 31,  90,  102, 105, 92,  47,  106,
    55,  113, 79,  108, 59,  114, 87,  116, 61,  91,  120, 62,  103, 93,  107, 94,
    109, 110, 117, 118, 121, 122, 63,  124, 95,  111, 115, 119, 123, 125, 126, 127};

// x^11 + x^10 + x^9 + x^5 + 1
constexpr std::uint8_t kCrc11Poly[12] = {1, 1, 1, 0, 0, 0, 1, 0, 0, 0, 0, 1};

}  // namespace

CaPolarSpec default_ca_polar_spec() {
    CaPolarSpec spec;
    spec.n = 128;
    spec.k = 105;
    spec.crc_len = 11;
    spec.reliability_order.assign(kReliabilityN128, kReliabilityN128 + 128);
    spec.crc_poly.assign(kCrc11Poly, kCrc11Poly + 12);
    spec.version = "1";
    return spec;
}

}  // namespace jamllr
