#ifndef FLAGFROB_BIGINT_HPP_
#define FLAGFROB_BIGINT_HPP_

#include <boost/multiprecision/cpp_int.hpp>

#include <cstdint>
#include <string>

namespace flagfrob {

using BigInt = boost::multiprecision::cpp_int;

inline std::string to_string(const BigInt& v) { return v.str(); }

inline BigInt ipow(const BigInt& base, unsigned exp)
{
    BigInt r = 1;
    for (unsigned i = 0; i < exp; ++i) r *= base;
    return r;
}

inline BigInt binomial(int64_t n, int64_t k)
{
    if (k < 0 || k > n) return 0;
    BigInt r = 1;
    for (int64_t i = 1; i <= k; ++i) {
        r *= (n - k + i);
        r /= i;
    }
    return r;
}

inline bool is_prime(int64_t p)
{
    if (p < 2) return false;
    for (int64_t d = 2; d * d <= p; ++d)
        if (p % d == 0) return false;
    return true;
}

}  // namespace flagfrob

#endif  // FLAGFROB_BIGINT_HPP_
