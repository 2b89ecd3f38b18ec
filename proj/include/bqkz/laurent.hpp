#pragma once

#include <map>
#include <optional>
#include <vector>

#include "bqkz/ratqk.hpp"

namespace bqkz {

using ExpVec = std::vector<int>;

inline int total_degree(const ExpVec& e) {
    int s = 0;
    for (int x : e) s += x;
    return s;
}

// coefficient-zero tests for the coefficient rings we nest
inline bool coeff_is_zero(const RatQK& c) { return c.is_zero(); }
inline bool coeff_is_zero(const std::complex<double>& c) {
    return c == std::complex<double>(0);
}
template <class Derived>
bool coeff_is_zero(const Eigen::MatrixBase<Derived>& m) {
    for (Eigen::Index i = 0; i < m.rows(); ++i)
        for (Eigen::Index j = 0; j < m.cols(); ++j)
            if (!coeff_is_zero(m(i, j))) return false;
    return true;
}

template <class C>
class LaurentPoly;
template <class C>
bool coeff_is_zero(const LaurentPoly<C>& p);

/// Sparse Laurent polynomial in x_1..x_n with coefficients in C.
/// Terms with zero coefficient are never stored.
template <class C>
class LaurentPoly {
public:
    using Map = std::map<ExpVec, C>;

    LaurentPoly() : n_(0) {}
    LaurentPoly(long v) : n_(0) {  // NOLINT: scalar literals, Eigen relies on it
        add_term(ExpVec{}, C(v));
    }
    LaurentPoly(int nvars, const C& constant) : n_(nvars) {
        add_term(ExpVec(nvars, 0), constant);
    }
    static LaurentPoly zero(int nvars) {
        LaurentPoly p;
        p.n_ = nvars;
        return p;
    }
    static LaurentPoly monomial(int nvars, const C& c, const ExpVec& e) {
        LaurentPoly p = zero(nvars);
        p.add_term(e, c);
        return p;
    }
    /// widen a 0-variable constant to n variables
    LaurentPoly promoted(int nvars) const {
        if (n_ == nvars) return *this;
        if (n_ != 0 || !is_constant())
            throw std::invalid_argument("LaurentPoly: cannot promote");
        LaurentPoly r = zero(nvars);
        if (!is_zero()) r.add_term(ExpVec(nvars, 0), t_.begin()->second);
        return r;
    }

    int nvars() const { return n_; }
    bool is_zero() const { return t_.empty(); }
    bool is_constant() const {
        return t_.empty() ||
               (t_.size() == 1 && t_.begin()->first == ExpVec(n_, 0));
    }
    bool is_monomial() const { return t_.size() == 1; }
    size_t n_terms() const { return t_.size(); }
    const Map& terms() const { return t_; }

    C constant_term() const {
        auto it = t_.find(ExpVec(n_, 0));
        return it == t_.end() ? C() : it->second;
    }
    C coeff(const ExpVec& e) const {
        auto it = t_.find(e);
        return it == t_.end() ? C() : it->second;
    }

    void add_term(const ExpVec& e, const C& c) {
        if (coeff_is_zero(c)) return;
        auto [it, fresh] = t_.emplace(e, c);
        if (!fresh) {
            it->second = it->second + c;
            if (coeff_is_zero(it->second)) t_.erase(it);
        }
    }

    friend LaurentPoly operator+(const LaurentPoly& a, const LaurentPoly& b) {
        // 0-variable constants (scalar literals) adapt to either side;
        // Eigen's generic kernels rely on this
        if (a.n_ != b.n_) {
            if (a.n_ == 0) return a.promoted(b.n_) + b;
            if (b.n_ == 0) return a + b.promoted(a.n_);
        }
        check_same(a, b);
        LaurentPoly r = a;
        for (const auto& [e, c] : b.t_) r.add_term(e, c);
        return r;
    }
    friend LaurentPoly operator-(const LaurentPoly& a, const LaurentPoly& b) {
        return a + (-b);
    }
    LaurentPoly operator-() const {
        LaurentPoly r = zero(n_);
        for (const auto& [e, c] : t_) r.t_.emplace(e, -c);
        return r;
    }
    friend LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b) {
        if (a.n_ != b.n_) {
            if (a.n_ == 0) return a.promoted(b.n_) * b;
            if (b.n_ == 0) return a * b.promoted(a.n_);
        }
        check_same(a, b);
        LaurentPoly r = zero(a.n_);
        for (const auto& [ea, ca] : a.t_)
            for (const auto& [eb, cb] : b.t_) {
                ExpVec e(a.n_);
                for (int i = 0; i < a.n_; ++i) e[i] = ea[i] + eb[i];
                r.add_term(e, ca * cb);
            }
        return r;
    }
    LaurentPoly& operator+=(const LaurentPoly& o) { return *this = *this + o; }
    LaurentPoly& operator-=(const LaurentPoly& o) { return *this = *this - o; }
    LaurentPoly& operator*=(const LaurentPoly& o) { return *this = *this * o; }
    bool operator==(const LaurentPoly& o) const {
        return n_ == o.n_ && t_ == o.t_;
    }
    bool operator!=(const LaurentPoly& o) const { return !(*this == o); }

    template <class S>
    LaurentPoly scaled(const S& s) const {
        LaurentPoly r = zero(n_);
        for (const auto& [e, c] : t_) r.add_term(e, c * s);
        return r;
    }

    /// Multiplicative inverse, defined for monomials only.
    LaurentPoly inverse() const {
        if (t_.size() != 1)
            throw std::domain_error("LaurentPoly: only monomials invert");
        const auto& [e, c] = *t_.begin();
        ExpVec ie(n_);
        for (int i = 0; i < n_; ++i) ie[i] = -e[i];
        return monomial(n_, inv_coeff(c), ie);
    }

    /// Substitute x_i -> values[i]; result in the coefficient ring.
    template <class S>
    auto eval(const std::vector<S>& values) const {
        using R = decltype(std::declval<C>() * std::declval<S>());
        R sum{};
        bool first = true;
        for (const auto& [e, c] : t_) {
            S m = pow_vec(values, e);
            R term = c * m;
            if (first) {
                sum = term;
                first = false;
            } else {
                sum = sum + term;
            }
        }
        if (first) return R{};
        return sum;
    }

    /// Apply a permutation to the variables: x_i -> x_{perm(i)} (1-based
    /// images). Matches the action (w f)(x) = f(w^{-1} x) on exponents.
    LaurentPoly permuted(const std::vector<int>& image) const {
        LaurentPoly r = zero(n_);
        for (const auto& [e, c] : t_) {
            ExpVec pe(n_);
            for (int i = 0; i < n_; ++i) pe[image[i] - 1] = e[i];
            r.add_term(pe, c);
        }
        return r;
    }

    ExpVec min_exponents() const {
        ExpVec m(n_, 0);
        bool first = true;
        for (const auto& [e, c] : t_) {
            (void)c;
            if (first) {
                m = e;
                first = false;
            } else {
                for (int i = 0; i < n_; ++i) m[i] = std::min(m[i], e[i]);
            }
        }
        return m;
    }

    template <class Fn>
    void for_each(Fn&& fn) const {
        for (const auto& [e, c] : t_) fn(e, c);
    }

private:
    int n_;
    Map t_;

    static void check_same(const LaurentPoly& a, const LaurentPoly& b) {
        if (a.n_ != b.n_)
            throw std::invalid_argument("LaurentPoly: variable count mismatch");
    }
    static RatQK inv_coeff(const RatQK& c) { return c.inverse(); }
    static std::complex<double> inv_coeff(const std::complex<double>& c) {
        return 1.0 / c;
    }
    template <class S>
    static S pow_vec(const std::vector<S>& v, const ExpVec& e) {
        S r = const_one<S>();
        for (size_t i = 0; i < v.size(); ++i) {
            int n = e[i];
            if (n == 0) continue;
            S base = n > 0 ? v[i] : inv_scalar(v[i]);
            for (int j = 0; j < std::abs(n); ++j) r = r * base;
        }
        return r;
    }
    template <class S>
    static S const_one() {
        return S(1);
    }
    static RatQK inv_scalar(const RatQK& c) { return c.inverse(); }
    static std::complex<double> inv_scalar(const std::complex<double>& c) {
        return 1.0 / c;
    }
};

template <class C>
bool coeff_is_zero(const LaurentPoly<C>& p) {
    return p.is_zero();
}

/// Exact division of f by a scalar-coefficient divisor g; nullopt when the
/// division leaves a remainder. V*RatQK must be defined.
template <class V>
std::optional<LaurentPoly<V>> divide_exact(const LaurentPoly<V>& f,
                                           const LaurentPoly<RatQK>& g) {
    if (g.is_zero()) throw DivideByZeroError();
    const int n = f.nvars();
    if (f.is_zero()) return LaurentPoly<V>::zero(n);
    // shift both to ordinary polynomials; units (monomials) never obstruct
    ExpVec sf = f.min_exponents(), sg = g.min_exponents();

    auto grlex_less = [](const ExpVec& a, const ExpVec& b) {
        int da = total_degree(a), db = total_degree(b);
        if (da != db) return da < db;
        return a < b;
    };

    using TermMap = std::map<ExpVec, V>;
    TermMap rest;
    f.for_each([&](const ExpVec& e, const V& c) {
        ExpVec s(n);
        for (int i = 0; i < n; ++i) s[i] = e[i] - sf[i];
        rest.emplace(s, c);
    });
    // leading term of the shifted divisor under grlex
    ExpVec glead;
    RatQK gc;
    bool first = true;
    g.for_each([&](const ExpVec& e, const RatQK& c) {
        ExpVec s(n);
        for (int i = 0; i < n; ++i) s[i] = e[i] - sg[i];
        if (first || grlex_less(glead, s)) {
            glead = s;
            gc = c;
            first = false;
        }
    });
    RatQK gcinv = gc.inverse();

    LaurentPoly<V> quot = LaurentPoly<V>::zero(n);
    while (!rest.empty()) {
        auto lead = rest.begin();
        for (auto it = rest.begin(); it != rest.end(); ++it)
            if (grlex_less(lead->first, it->first)) lead = it;
        ExpVec qe(n);
        for (int i = 0; i < n; ++i) {
            qe[i] = lead->first[i] - glead[i];
            if (qe[i] < 0) return std::nullopt;
        }
        V qc = lead->second * gcinv;
        // record quotient term back in Laurent coordinates
        ExpVec qe_l(n);
        for (int i = 0; i < n; ++i) qe_l[i] = qe[i] + sf[i] - sg[i];
        quot.add_term(qe_l, qc);
        g.for_each([&](const ExpVec& e, const RatQK& c) {
            ExpVec s(n);
            for (int i = 0; i < n; ++i) s[i] = e[i] - sg[i] + qe[i];
            auto [it, fresh] = rest.emplace(s, V());
            V delta = qc * c;
            if (fresh)
                it->second = -delta;
            else
                it->second = it->second - delta;
            if (coeff_is_zero(it->second)) rest.erase(it);
        });
    }
    return quot;
}

}  // namespace bqkz

namespace Eigen {

template <class C>
struct NumTraits<bqkz::LaurentPoly<C>>
    : GenericNumTraits<bqkz::LaurentPoly<C>> {
    typedef bqkz::LaurentPoly<C> Real;
    typedef bqkz::LaurentPoly<C> NonInteger;
    typedef bqkz::LaurentPoly<C> Nested;
    typedef bqkz::LaurentPoly<C> Literal;
    enum {
        IsComplex = 0,
        IsInteger = 0,
        IsSigned = 1,
        RequireInitialization = 1,
        ReadCost = 4,
        AddCost = 40,
        MulCost = 80
    };
    static inline Real epsilon() { return Real(); }
    static inline Real dummy_precision() { return Real(); }
    static inline int digits10() { return 0; }
};

}  // namespace Eigen
