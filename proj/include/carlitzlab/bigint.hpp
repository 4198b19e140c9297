#ifndef CARLITZLAB_BIGINT_HPP
#define CARLITZLAB_BIGINT_HPP

#include <cstdint>
#include <optional>
#include <string>

#include <boost/multiprecision/cpp_int.hpp>

namespace carlitzlab {

using BigInt = boost::multiprecision::cpp_int;

inline BigInt bigint_pow(BigInt base, std::uint64_t exp) {
    BigInt r = 1;
    while (exp) {
        if (exp & 1) r *= base;
        base *= base;
        exp >>= 1;
    }
    return r;
}

/// If v = base^e with e >= 1, return e.
inline std::optional<std::uint64_t> exact_log(const BigInt& v, const BigInt& base) {
    if (base < 2 || v < base) return std::nullopt;
    BigInt x = v;
    std::uint64_t e = 0;
    while (x > 1) {
        if (x % base != 0) return std::nullopt;
        x /= base;
        ++e;
    }
    return e;
}

inline std::string to_string(const BigInt& v) { return v.str(); }

}  // namespace carlitzlab

#endif
