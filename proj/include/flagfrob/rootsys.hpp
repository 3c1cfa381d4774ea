#ifndef FLAGFROB_ROOTSYS_HPP_
#define FLAGFROB_ROOTSYS_HPP_

// Type A_{n-1} root datum for SL_n. Weights live in fundamental-weight
// coordinates; the permutation (epsilon) model is used internally for
// everything involving the Weyl group.

#include "bigint.hpp"

#include <algorithm>
#include <compare>
#include <cstdint>
#include <initializer_list>
#include <map>
#include <numeric>
#include <span>
#include <sstream>
#include <stdexcept>
#include <string>
#include <variant>
#include <vector>

namespace flagfrob {

class DimensionError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

class DomainError : public std::domain_error {
public:
    using std::domain_error::domain_error;
};

//-----------------------------------------------------------------------------
/// Integer weight, coefficient of omega_{i+1} at index i.
class Weight {
    std::vector<int64_t> c_;

public:
    Weight() = default;
    explicit Weight(std::vector<int64_t> coeffs) : c_(std::move(coeffs)) {}
    Weight(std::initializer_list<int64_t> coeffs) : c_(coeffs) {}

    static Weight zero(int n) { return Weight(std::vector<int64_t>(n - 1, 0)); }
    static Weight rho(int n) { return Weight(std::vector<int64_t>(n - 1, 1)); }
    /// omega_i, 1-based as in the usual notation.
    static Weight fundamental(int n, int i)
    {
        if (i < 1 || i > n - 1) throw DimensionError("fundamental weight index out of range");
        Weight w = zero(n);
        w.c_[i - 1] = 1;
        return w;
    }

    [[nodiscard]] std::size_t size() const noexcept { return c_.size(); }
    [[nodiscard]] int rank_n() const noexcept { return static_cast<int>(c_.size()) + 1; }
    [[nodiscard]] int64_t operator[](std::size_t i) const { return c_[i]; }
    int64_t& operator[](std::size_t i) { return c_[i]; }
    [[nodiscard]] std::span<const int64_t> coeffs() const noexcept { return c_; }

    [[nodiscard]] bool is_dominant() const
    {
        return std::all_of(c_.begin(), c_.end(), [](int64_t a) { return a >= 0; });
    }
    [[nodiscard]] bool is_zero() const
    {
        return std::all_of(c_.begin(), c_.end(), [](int64_t a) { return a == 0; });
    }

    Weight& operator+=(const Weight& o)
    {
        check_same(o);
        for (std::size_t i = 0; i < c_.size(); ++i) c_[i] += o.c_[i];
        return *this;
    }
    Weight& operator-=(const Weight& o)
    {
        check_same(o);
        for (std::size_t i = 0; i < c_.size(); ++i) c_[i] -= o.c_[i];
        return *this;
    }
    friend Weight operator+(Weight a, const Weight& b) { return a += b; }
    friend Weight operator-(Weight a, const Weight& b) { return a -= b; }
    friend Weight operator-(Weight a)
    {
        for (auto& x : a.c_) x = -x;
        return a;
    }
    friend Weight operator*(int64_t k, Weight a)
    {
        for (auto& x : a.c_) x *= k;
        return a;
    }

    /// Image under -w_0, i.e. the highest weight of the dual module.
    [[nodiscard]] Weight reversed() const
    {
        return Weight(std::vector<int64_t>(c_.rbegin(), c_.rend()));
    }

    friend auto operator<=>(const Weight&, const Weight&) = default;
    friend bool operator==(const Weight&, const Weight&) = default;

    [[nodiscard]] std::string str() const
    {
        std::ostringstream os;
        os << '(';
        for (std::size_t i = 0; i < c_.size(); ++i) os << (i ? "," : "") << c_[i];
        os << ')';
        return os.str();
    }

    /// Human form, e.g. "-w1+2w3"; "0" for the zero weight.
    [[nodiscard]] std::string pretty() const
    {
        std::ostringstream os;
        bool first = true;
        for (std::size_t i = 0; i < c_.size(); ++i) {
            const int64_t a = c_[i];
            if (a == 0) continue;
            if (a < 0) os << '-';
            else if (!first) os << '+';
            if (a != 1 && a != -1) os << (a < 0 ? -a : a);
            os << 'w' << (i + 1);
            first = false;
        }
        return first ? "0" : os.str();
    }

private:
    void check_same(const Weight& o) const
    {
        if (o.c_.size() != c_.size()) throw DimensionError("weight length mismatch");
    }
};

//-----------------------------------------------------------------------------
/// Coordinates in the epsilon basis, normalized so that the last entry is 0.
inline std::vector<int64_t> to_epsilon(const Weight& w)
{
    const std::size_t n = w.size() + 1;
    std::vector<int64_t> x(n, 0);
    for (std::size_t j = n - 1; j-- > 0;) x[j] = x[j + 1] + w[j];
    return x;
}

inline Weight from_epsilon(std::span<const int64_t> x)
{
    std::vector<int64_t> c(x.size() - 1);
    for (std::size_t i = 0; i + 1 < x.size(); ++i) c[i] = x[i] - x[i + 1];
    return Weight(std::move(c));
}

/// <lambda, alpha_{ij}^vee> for the positive root e_i - e_j (0-based, i < j).
inline int64_t coroot_pairing(const Weight& w, std::size_t i, std::size_t j)
{
    int64_t s = 0;
    for (std::size_t k = i; k < j; ++k) s += w[k];
    return s;
}

//-----------------------------------------------------------------------------
class RankedLattice {
    int n_;
    std::vector<std::vector<int>> positive_roots_;

public:
    explicit RankedLattice(int n) : n_(n)
    {
        if (n < 2) throw DimensionError("SL_n needs n >= 2");
        for (int i = 0; i < n; ++i)
            for (int j = i + 1; j < n; ++j) {
                std::vector<int> coeff(n - 1, 0);
                for (int k = i; k < j; ++k) coeff[k] = 1;
                positive_roots_.push_back(std::move(coeff));
            }
    }

    [[nodiscard]] int n() const noexcept { return n_; }
    [[nodiscard]] int rank() const noexcept { return n_ - 1; }
    /// dim G/B
    [[nodiscard]] int num_positive_roots() const noexcept { return n_ * (n_ - 1) / 2; }
    [[nodiscard]] const std::vector<std::vector<int>>& positive_roots() const noexcept
    {
        return positive_roots_;
    }
    [[nodiscard]] Weight rho() const { return Weight::rho(n_); }
    [[nodiscard]] Weight omega(int i) const { return Weight::fundamental(n_, i); }
    /// Simple root alpha_i in fundamental-weight coordinates (Cartan matrix row).
    [[nodiscard]] Weight simple_root(int i) const
    {
        Weight a = Weight::zero(n_);
        a[i - 1] = 2;
        if (i > 1) a[i - 2] = -1;
        if (i < n_ - 1) a[i] = -1;
        return a;
    }
    [[nodiscard]] Weight weight(std::vector<int64_t> coeffs) const
    {
        if (static_cast<int>(coeffs.size()) != n_ - 1)
            throw DimensionError("weight has length " + std::to_string(coeffs.size()) +
                                 ", expected " + std::to_string(n_ - 1));
        return Weight(std::move(coeffs));
    }
};

//-----------------------------------------------------------------------------
/// Weyl group element stored as a permutation: (w x)[i] = x[perm[i]] on
/// epsilon coordinates.
class WeylElt {
    std::vector<int> perm_;

public:
    explicit WeylElt(int n) : perm_(n) { std::iota(perm_.begin(), perm_.end(), 0); }

    static WeylElt from_permutation(std::vector<int> perm)
    {
        WeylElt w(static_cast<int>(perm.size()));
        w.perm_ = std::move(perm);
        return w;
    }

    /// word {k1,...,km} is s_{k1} s_{k2} ... s_{km} (1-based indices); the
    /// rightmost reflection acts first.
    static WeylElt from_word(int n, std::span<const int> word)
    {
        WeylElt w(n);
        for (auto it = word.rbegin(); it != word.rend(); ++it) w = simple(n, *it) * w;
        return w;
    }
    static WeylElt from_word(int n, std::initializer_list<int> word)
    {
        std::vector<int> v(word);
        return from_word(n, v);
    }

    static WeylElt simple(int n, int k)
    {
        if (k < 1 || k > n - 1) throw DimensionError("simple reflection index out of range");
        WeylElt s(n);
        std::swap(s.perm_[k - 1], s.perm_[k]);
        return s;
    }

    static WeylElt longest(int n)
    {
        WeylElt w(n);
        std::reverse(w.perm_.begin(), w.perm_.end());
        return w;
    }

    [[nodiscard]] int n() const noexcept { return static_cast<int>(perm_.size()); }
    [[nodiscard]] const std::vector<int>& permutation() const noexcept { return perm_; }

    [[nodiscard]] int length() const
    {
        int inv = 0;
        for (std::size_t i = 0; i < perm_.size(); ++i)
            for (std::size_t j = i + 1; j < perm_.size(); ++j)
                if (perm_[i] > perm_[j]) ++inv;
        return inv;
    }

    /// Reduced word, recovered by peeling left descents.
    [[nodiscard]] std::vector<int> reduced_word() const
    {
        std::vector<int> p = perm_;
        std::vector<int> word;
        bool again = true;
        while (again) {
            again = false;
            for (std::size_t i = 0; i + 1 < p.size(); ++i) {
                if (p[i] > p[i + 1]) {
                    std::swap(p[i], p[i + 1]);
                    word.push_back(static_cast<int>(i) + 1);
                    again = true;
                    break;
                }
            }
        }
        return word;
    }

    friend WeylElt operator*(const WeylElt& v, const WeylElt& w)
    {
        if (v.n() != w.n()) throw DimensionError("Weyl group rank mismatch");
        WeylElt r(v.n());
        for (int i = 0; i < v.n(); ++i) r.perm_[i] = w.perm_[v.perm_[i]];
        return r;
    }

    /// Linear action on epsilon coordinates.
    [[nodiscard]] std::vector<int64_t> apply(std::span<const int64_t> x) const
    {
        std::vector<int64_t> y(x.size());
        for (std::size_t i = 0; i < x.size(); ++i) y[i] = x[perm_[i]];
        return y;
    }

    friend bool operator==(const WeylElt&, const WeylElt&) = default;
};

/// w . lambda = w(lambda + rho) - rho
inline Weight dot_action(const WeylElt& w, const Weight& lambda)
{
    if (static_cast<int>(lambda.size()) + 1 != w.n())
        throw DimensionError("weight length does not match the Weyl group");
    const auto x = to_epsilon(lambda + Weight::rho(w.n()));
    return from_epsilon(w.apply(x)) - Weight::rho(w.n());
}

/// s_alpha_i . lambda = lambda - <lambda+rho, alpha_i^vee> alpha_i
inline Weight simple_dot(int i, const Weight& lambda)
{
    const int n = lambda.rank_n();
    const int64_t c = lambda[i - 1] + 1;
    Weight r = lambda;
    r[i - 1] -= 2 * c;
    if (i > 1) r[i - 2] += c;
    if (i < n - 1) r[i] += c;
    return r;
}

struct Regular {
    WeylElt w;
    Weight dominant;
};
struct Singular {};
using DominantResult = std::variant<Regular, Singular>;

inline DominantResult make_dominant_dot(const Weight& lambda)
{
    const int n = lambda.rank_n();
    const auto y = to_epsilon(lambda + Weight::rho(n));
    std::vector<int> order(n);
    std::iota(order.begin(), order.end(), 0);
    std::stable_sort(order.begin(), order.end(), [&](int a, int b) { return y[a] > y[b]; });
    for (int i = 0; i + 1 < n; ++i)
        if (y[order[i]] == y[order[i + 1]]) return Singular{};
    auto w = WeylElt::from_permutation(order);
    return Regular{w, from_epsilon(w.apply(y)) - Weight::rho(n)};
}

inline bool is_singular(const Weight& lambda)
{
    return std::holds_alternative<Singular>(make_dominant_dot(lambda));
}

namespace detail {

/// prod_{i<j} (x_i - x_j) / prod_{i<j} (j - i); exact for integer x.
inline BigInt vandermonde_quotient(std::span<const int64_t> x)
{
    const std::size_t n = x.size();
    __int128 acc = 1;
    BigInt big = 1;
    bool use_big = false;
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j) {
            const int64_t d = x[i] - x[j];
            if (d == 0) return 0;
            if (!use_big) {
                __int128 next;
                if (__builtin_mul_overflow(acc, static_cast<__int128>(d), &next)) {
                    use_big = true;
                    // cpp_int has no direct __int128 constructor on all platforms
                    const bool neg = acc < 0;
                    unsigned __int128 mag = neg ? -static_cast<unsigned __int128>(acc)
                                                : static_cast<unsigned __int128>(acc);
                    BigInt hi = static_cast<uint64_t>(mag >> 64);
                    big = (hi << 64) + static_cast<uint64_t>(mag);
                    if (neg) big = -big;
                    big *= d;
                } else {
                    acc = next;
                }
            } else {
                big *= d;
            }
        }
    int64_t den = 1;
    for (std::size_t k = 1; k < n; ++k)
        for (std::size_t m = 1; m <= k; ++m) den *= static_cast<int64_t>(m);
    if (!use_big) {
        const __int128 q = acc / den;
        const bool neg = q < 0;
        unsigned __int128 mag = neg ? -static_cast<unsigned __int128>(q)
                                    : static_cast<unsigned __int128>(q);
        BigInt hi = static_cast<uint64_t>(mag >> 64);
        BigInt r = (hi << 64) + static_cast<uint64_t>(mag);
        return neg ? BigInt(-r) : r;
    }
    return big / den;
}

}  // namespace detail

/// dim nabla_lambda (Weyl dimension formula), lambda dominant.
inline BigInt weyl_dim(const Weight& lambda)
{
    if (!lambda.is_dominant()) throw DomainError("weyl_dim requires a dominant weight " + lambda.str());
    const auto x = to_epsilon(lambda + Weight::rho(lambda.rank_n()));
    return detail::vandermonde_quotient(x);
}

/// Euler characteristic of L_lambda on G/B: 0 on singular weights, otherwise
/// (-1)^{l(w)} dim nabla_{w.lambda}. This is the Weyl polynomial evaluated
/// at lambda, which carries the sign automatically.
inline BigInt weyl_polynomial(const Weight& lambda)
{
    const auto x = to_epsilon(lambda + Weight::rho(lambda.rank_n()));
    return detail::vandermonde_quotient(x);
}

//-----------------------------------------------------------------------------
/// Weight multiset of nabla_lambda (same in every characteristic), computed
/// from Gelfand-Tsetlin patterns.
inline std::map<Weight, BigInt> weyl_character(const Weight& lambda)
{
    if (!lambda.is_dominant()) throw DomainError("character requires a dominant weight");
    const int n = lambda.rank_n();
    const auto top = to_epsilon(lambda);  // partition, last part 0
    std::map<Weight, BigInt> out;
    // rows[k] has k+1 entries; rows[n-1] = top
    std::vector<std::vector<int64_t>> rows(n);
    rows[n - 1] = top;
    std::vector<int64_t> content(n, 0);

    auto sum = [](const std::vector<int64_t>& r) {
        return std::accumulate(r.begin(), r.end(), int64_t{0});
    };

    // recursive fill of row k from row k+1 using interlacing
    auto rec = [&](auto&& self, int k) -> void {
        if (k < 0) {
            std::vector<int64_t> c(n);
            int64_t prev = 0;
            for (int r = 0; r < n; ++r) {
                const int64_t s = sum(rows[r]);
                c[r] = s - prev;
                prev = s;
            }
            out[from_epsilon(c)] += 1;
            return;
        }
        const auto& up = rows[k + 1];
        rows[k].assign(k + 1, 0);
        auto fill = [&](auto&& fself, int idx) -> void {
            if (idx > k) {
                self(self, k - 1);
                return;
            }
            for (int64_t v = up[idx + 1]; v <= up[idx]; ++v) {
                rows[k][idx] = v;
                fself(fself, idx + 1);
            }
        };
        fill(fill, 0);
    };
    rec(rec, n - 2);
    return out;
}

}  // namespace flagfrob

#endif  // FLAGFROB_ROOTSYS_HPP_
