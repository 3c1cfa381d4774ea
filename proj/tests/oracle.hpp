#pragma once

// Reference computations written independently of the library: they work in
// fundamental-weight coordinates with explicit reflections and rational
// products, never through the epsilon-coordinate machinery.

#include "flagfrob/bigint.hpp"

#include <boost/multiprecision/cpp_int.hpp>
#include <boost/rational.hpp>

#include <algorithm>
#include <numeric>
#include <optional>
#include <stdexcept>
#include <vector>

namespace oracle {

using Vec = std::vector<int64_t>;
using flagfrob::BigInt;

// <lambda, (e_i - e_j)^vee> for 0 <= i < j < n
inline int64_t pair(const Vec& l, int i, int j)
{
    int64_t s = 0;
    for (int k = i; k < j; ++k) s += l[k];
    return s;
}

inline BigInt weyl_dim_product(const Vec& l)
{
    const int n = static_cast<int>(l.size()) + 1;
    using Q = boost::rational<BigInt>;
    Q prod(1);
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) {
            int64_t num = j - i;
            for (int k = i; k < j; ++k) num += l[k];
            prod *= Q(BigInt(num), BigInt(j - i));
        }
    if (prod.denominator() != 1) throw std::logic_error("non-integral Weyl product");
    return prod.numerator();
}

// s_i(l) = l - <l, alpha_i^vee> alpha_i, alpha_i a row of the Cartan matrix
inline Vec reflect(const Vec& l, int i)
{
    Vec r = l;
    const int64_t c = l[i - 1];
    const int m = static_cast<int>(l.size());
    r[i - 1] -= 2 * c;
    if (i - 2 >= 0) r[i - 2] += c;
    if (i < m) r[i] += c;
    return r;
}

inline Vec dot(const Vec& l, int i)
{
    Vec x = l;
    for (auto& a : x) ++a;
    x = reflect(x, i);
    for (auto& a : x) --a;
    return x;
}

// w = s_{word[0]} ... s_{word[k-1]}, rightmost first
inline Vec dot_word(Vec l, const std::vector<int>& word)
{
    for (auto it = word.rbegin(); it != word.rend(); ++it) l = dot(l, *it);
    return l;
}

struct Bott {
    bool acyclic = true;
    int degree = 0;
    BigInt dim = 0;
    Vec dominant;
};

// Breadth-first search over the Weyl group by simple dot reflections; the
// first dominant weight reached has the minimal length.
inline Bott borel_weil_bott(const Vec& l)
{
    const int m = static_cast<int>(l.size());
    auto dominant = [](const Vec& v) { return std::all_of(v.begin(), v.end(), [](int64_t a) { return a >= 0; }); };
    std::vector<Vec> layer{l}, seen{l};
    for (int len = 0; len <= (m + 1) * m / 2; ++len) {
        for (const auto& v : layer)
            if (dominant(v)) return Bott{false, len, weyl_dim_product(v), v};
        std::vector<Vec> next;
        for (const auto& v : layer)
            for (int i = 1; i <= m; ++i) {
                Vec u = dot(v, i);
                if (std::find(seen.begin(), seen.end(), u) == seen.end()) {
                    seen.push_back(u);
                    next.push_back(u);
                }
            }
        layer = std::move(next);
    }
    return {};
}

inline BigInt binom_poly(int64_t a, int r)
{
    // C(a + r, r) as a polynomial in a, valid for all integers a
    BigInt num = 1, den = 1;
    for (int k = 1; k <= r; ++k) {
        num *= BigInt(a + k);
        den *= k;
    }
    return num / den;
}

// chi(O(a, b)) on the (1,1) hypersurface of P^{n-1} x P^{n-1}
inline BigInt incidence_euler(int n, int64_t a, int64_t b)
{
    return binom_poly(a, n - 1) * binom_poly(b, n - 1) - binom_poly(a - 1, n - 1) * binom_poly(b - 1, n - 1);
}

}  // namespace oracle
