#pragma once

#include <boost/multiprecision/cpp_bin_float.hpp>
#include <boost/multiprecision/cpp_int.hpp>

#include <array>
#include <cstdint>
#include <limits>
#include <stdexcept>
#include <string>

namespace fig8 {

namespace bmp = boost::multiprecision;

/// Binary floating-point type with `Bits` bits of mantissa.
/// Expression templates are off so values behave like plain scalars.
template <unsigned Bits>
using RealOf = bmp::number<bmp::cpp_bin_float<Bits, bmp::digit_base_2>, bmp::et_off>;

using BigInt = bmp::cpp_int;
using BigRat = bmp::cpp_rational;

/// Precisions the engine is compiled for.  A requested bit count is
/// rounded up to the next entry; anything above the last is rejected.
inline constexpr std::array<unsigned, 3> kSupportedPrecisions{128, 256, 512};
inline constexpr unsigned kDefaultPrecisionBits = 128;
inline constexpr unsigned kMinPrecisionBits = 53;

inline unsigned effective_precision(unsigned requested) {
    if (requested < kMinPrecisionBits)
        throw std::invalid_argument("precision must be at least 53 bits");
    for (unsigned p : kSupportedPrecisions)
        if (requested <= p) return p;
    throw std::invalid_argument("precision above " +
                                std::to_string(kSupportedPrecisions.back()) +
                                " bits is not supported");
}

template <class R>
constexpr unsigned precision_bits_of() {
    return static_cast<unsigned>(std::numeric_limits<R>::digits);
}

/// Unit roundoff of R (2^-bits).
template <class R>
R machine_eps() {
    return std::numeric_limits<R>::epsilon();
}

/// Cheap log2 estimate of a positive value, for root radius heuristics.
template <class R>
double log2_approx(const R& x) {
    if (x == 0) return -1e9;
    int e = 0;
    R m = frexp(x, &e);
    return static_cast<double>(e) + std::log2(static_cast<double>(m));
}

inline double log2_approx(const BigInt& x) {
    if (x == 0) return -1e9;
    BigInt a = abs(x);
    auto bits = msb(a);  // index of highest set bit
    if (bits <= 52) return std::log2(static_cast<double>(a));
    BigInt top = a >> static_cast<unsigned>(bits - 52);
    return std::log2(static_cast<double>(top)) + static_cast<double>(bits - 52);
}

/// Full round-trip decimal representation.
template <class R>
std::string to_full_string(const R& x) {
    return x.str(std::numeric_limits<R>::max_digits10);
}

}  // namespace fig8
