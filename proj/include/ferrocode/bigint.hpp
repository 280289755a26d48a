// Exact integers for code-size bounds (q^e overflows 64 bits quickly).

#ifndef FERROCODE_BIGINT_HPP
#define FERROCODE_BIGINT_HPP

#include <boost/multiprecision/cpp_int.hpp>
#include <cstdint>

namespace ferrocode {

using BigInt = boost::multiprecision::cpp_int;

inline BigInt big_pow(std::uint64_t base, std::uint64_t exp) {
    BigInt b = base;
    BigInt r = 1;
    while (exp > 0) {
        if (exp & 1) r *= b;
        exp >>= 1;
        if (exp > 0) b *= b;
    }
    return r;
}

}  // namespace ferrocode

#endif
