#ifndef FLAGFROB_KCLASS_HPP_
#define FLAGFROB_KCLASS_HPP_

#include "rootsys.hpp"

#include <map>
#include <mutex>
#include <sstream>
#include <string>
#include <unordered_map>
#include <vector>

namespace flagfrob {

/// Integer combination of line-bundle classes [L_lambda] on SL_n/B.
/// Also used for B-characters (multisets of weights), where every
/// coefficient is a nonnegative multiplicity.
class KClass {
    int n_ = 2;
    std::map<Weight, BigInt> c_;

public:
    KClass() = default;
    explicit KClass(int n) : n_(n) {}

    static KClass line(const Weight& w, BigInt coeff = 1)
    {
        KClass k(w.rank_n());
        k.add(w, std::move(coeff));
        return k;
    }
    static KClass trivial(int n, BigInt mult = 1) { return line(Weight::zero(n), std::move(mult)); }
    static KClass from_character(int n, const std::map<Weight, BigInt>& ch)
    {
        KClass k(n);
        for (const auto& [w, m] : ch) k.add(w, m);
        return k;
    }

    [[nodiscard]] int n() const noexcept { return n_; }
    [[nodiscard]] const std::map<Weight, BigInt>& terms() const noexcept { return c_; }
    [[nodiscard]] bool is_zero() const noexcept { return c_.empty(); }
    [[nodiscard]] std::size_t size() const noexcept { return c_.size(); }

    void add(const Weight& w, const BigInt& coeff)
    {
        if (static_cast<int>(w.size()) + 1 != n_) throw DimensionError("weight does not live on SL_" + std::to_string(n_));
        if (coeff == 0) return;
        auto [it, fresh] = c_.try_emplace(w, coeff);
        if (!fresh) {
            it->second += coeff;
            if (it->second == 0) c_.erase(it);
        }
    }

    [[nodiscard]] BigInt coeff(const Weight& w) const
    {
        auto it = c_.find(w);
        return it == c_.end() ? BigInt(0) : it->second;
    }

    [[nodiscard]] BigInt rank() const
    {
        BigInt r = 0;
        for (const auto& [w, m] : c_) r += m;
        return r;
    }

    [[nodiscard]] bool is_effective() const
    {
        for (const auto& [w, m] : c_)
            if (m < 0) return false;
        return true;
    }

    KClass& operator+=(const KClass& o)
    {
        check(o);
        for (const auto& [w, m] : o.c_) add(w, m);
        return *this;
    }
    KClass& operator-=(const KClass& o)
    {
        check(o);
        for (const auto& [w, m] : o.c_) add(w, -m);
        return *this;
    }
    friend KClass operator+(KClass a, const KClass& b) { return a += b; }
    friend KClass operator-(KClass a, const KClass& b) { return a -= b; }
    friend KClass operator-(const KClass& a) { return a * BigInt(-1); }
    friend KClass operator*(const KClass& a, const BigInt& s)
    {
        KClass r(a.n_);
        if (s == 0) return r;
        for (const auto& [w, m] : a.c_) r.c_.emplace(w, m * s);
        return r;
    }
    friend KClass operator*(const BigInt& s, const KClass& a) { return a * s; }

    /// Convolution product [L_a][L_b] = [L_{a+b}].
    friend KClass operator*(const KClass& a, const KClass& b)
    {
        a.check(b);
        KClass r(a.n_);
        for (const auto& [w1, m1] : a.c_)
            for (const auto& [w2, m2] : b.c_) r.add(w1 + w2, m1 * m2);
        return r;
    }

    [[nodiscard]] KClass twist(const Weight& w) const
    {
        KClass r(n_);
        for (const auto& [v, m] : c_) r.c_.emplace(v + w, m);
        return r;
    }
    [[nodiscard]] KClass dual() const
    {
        KClass r(n_);
        for (const auto& [v, m] : c_) r.c_.emplace(-v, m);
        return r;
    }
    [[nodiscard]] KClass frobenius_twist(int64_t p) const
    {
        KClass r(n_);
        for (const auto& [v, m] : c_) r.c_.emplace(p * v, m);
        return r;
    }

    friend bool operator==(const KClass& a, const KClass& b) { return a.n_ == b.n_ && a.c_ == b.c_; }

    [[nodiscard]] std::string str() const
    {
        if (c_.empty()) return "0";
        std::ostringstream os;
        bool first = true;
        for (const auto& [w, m] : c_) {
            if (m < 0) os << (first ? "-" : " - ");
            else if (!first) os << " + ";
            const BigInt a = m < 0 ? BigInt(-m) : m;
            if (a != 1) os << a << '*';
            os << "L" << w.str();
            first = false;
        }
        return os.str();
    }

private:
    void check(const KClass& o) const
    {
        if (o.n_ != n_) throw DimensionError("K-classes live on different flag varieties");
    }
};

inline KClass tensor(const KClass& a, const KClass& b) { return a * b; }
inline KClass dual(const KClass& a) { return a.dual(); }
inline KClass frobenius_twist(const KClass& a, int64_t p) { return a.frobenius_twist(p); }
inline BigInt rank(const KClass& a) { return a.rank(); }

/// Elementary symmetric class e_k of a list of line-bundle classes.
inline KClass elementary_symmetric(int n, const std::vector<KClass>& xs, int k)
{
    std::vector<KClass> e(k + 1, KClass(n));
    e[0] = KClass::trivial(n);
    for (const auto& x : xs)
        for (int j = k; j >= 1; --j) e[j] += e[j - 1] * x;
    return e[k];
}

/// chi(G/B, L_lambda).
inline BigInt euler_char(const Weight& lambda) { return weyl_polynomial(lambda); }

inline BigInt euler_char(const KClass& k)
{
    BigInt s = 0;
    for (const auto& [w, m] : k.terms()) s += m * weyl_polynomial(w);
    return s;
}

/// chi(a, b) = sum (-1)^i dim Ext^i(a, b).
inline BigInt euler_pairing(const KClass& a, const KClass& b) { return euler_char(a.dual() * b); }

namespace detail {

inline const std::vector<Weight>& pairing_simplex(int n)
{
    static std::mutex mu;
    static std::unordered_map<int, std::vector<Weight>> cache;
    std::lock_guard lock(mu);
    auto it = cache.find(n);
    if (it != cache.end()) return it->second;
    const int N = n * (n - 1) / 2;
    std::vector<Weight> pts;
    std::vector<int64_t> cur(n - 1, 0);
    auto rec = [&](auto&& self, int idx, int left) -> void {
        if (idx == n - 1) {
            pts.emplace_back(cur);
            return;
        }
        for (int v = 0; v <= left; ++v) {
            cur[idx] = v;
            self(self, idx + 1, left - v);
        }
    };
    rec(rec, 0, N);
    return cache.emplace(n, std::move(pts)).first->second;
}

}  // namespace detail

/// Equality in K_0(G/B). The Euler pairing is perfect and chi(x * L_mu) is a
/// polynomial of degree dim G/B in mu, so vanishing on the simplex
/// {mu >= 0, |mu| <= dim G/B} is equivalent to x = 0.
inline bool k_equal(const KClass& a, const KClass& b)
{
    const KClass d = a - b;
    if (d.is_zero()) return true;
    for (const auto& mu : detail::pairing_simplex(a.n()))
        if (euler_char(d.twist(mu)) != 0) return false;
    return true;
}

/// Returns +1 / -1 if a = +-b in K_0, 0 otherwise.
inline int k_sign(const KClass& a, const KClass& b)
{
    if (k_equal(a, b)) return 1;
    if (k_equal(a, -b)) return -1;
    return 0;
}

}  // namespace flagfrob

#endif  // FLAGFROB_KCLASS_HPP_
