#pragma once

#include <map>
#include <stdexcept>
#include <vector>

#include "bqkz/laurent.hpp"

namespace bqkz {

/// Multivariate power series in z_1..z_M truncated at total degree D,
/// sparse over coefficients V (a ring: scalars, vectors or matrices).
template <class V>
class TruncSeries {
public:
    using Map = std::map<ExpVec, V>;

    TruncSeries() : m_(0), d_(0) {}
    TruncSeries(int nvars, int degree) : m_(nvars), d_(degree) {}
    static TruncSeries constant(int nvars, int degree, const V& v) {
        TruncSeries s(nvars, degree);
        s.add_term(ExpVec(nvars, 0), v);
        return s;
    }

    int nvars() const { return m_; }
    int degree() const { return d_; }
    bool is_zero() const { return t_.empty(); }
    const Map& terms() const { return t_; }

    V coeff(const ExpVec& m) const {
        auto it = t_.find(m);
        return it == t_.end() ? V() : it->second;
    }
    bool has(const ExpVec& m) const { return t_.count(m) != 0; }

    void add_term(const ExpVec& m, const V& v) {
        if (total_degree(m) > d_) return;
        for (int x : m)
            if (x < 0) throw std::invalid_argument("TruncSeries: negative index");
        if (coeff_is_zero(v)) return;
        auto [it, fresh] = t_.emplace(m, v);
        if (!fresh) {
            it->second = it->second + v;
            if (coeff_is_zero(it->second)) t_.erase(it);
        }
    }

    friend TruncSeries operator+(const TruncSeries& a, const TruncSeries& b) {
        check(a, b);
        TruncSeries r = a;
        for (const auto& [m, v] : b.t_) r.add_term(m, v);
        return r;
    }
    friend TruncSeries operator-(const TruncSeries& a, const TruncSeries& b) {
        return a + b.negated();
    }
    TruncSeries negated() const {
        TruncSeries r(m_, d_);
        for (const auto& [m, v] : t_) r.t_.emplace(m, -v);
        return r;
    }

    template <class S>
    TruncSeries scaled(const S& s) const {
        TruncSeries r(m_, d_);
        for (const auto& [m, v] : t_) {
            V sv = v * s;
            if (!coeff_is_zero(sv)) r.t_.emplace(m, std::move(sv));
        }
        return r;
    }

    /// Multiply by a single monomial c * z^e (e >= 0), degrees beyond D drop.
    TruncSeries shifted(const ExpVec& e, const V& c) const;

    template <class Fn>
    void for_each(Fn&& fn) const {
        for (const auto& [m, v] : t_) fn(m, v);
    }

    bool operator==(const TruncSeries& o) const {
        return m_ == o.m_ && d_ == o.d_ && t_ == o.t_;
    }

private:
    int m_, d_;
    Map t_;

    static void check(const TruncSeries& a, const TruncSeries& b) {
        if (a.m_ != b.m_ || a.d_ != b.d_)
            throw std::invalid_argument("TruncSeries: shape mismatch");
    }

    template <class A, class B>
    friend auto series_mul(const TruncSeries<A>& a, const TruncSeries<B>& b);
};

/// Coefficient of m in the product is sum_{l<=m} a_l b_{m-l}; total degrees
/// beyond D are discarded.
template <class A, class B>
auto series_mul(const TruncSeries<A>& a, const TruncSeries<B>& b) {
    using V = decltype(std::declval<A>() * std::declval<B>());
    if (a.nvars() != b.nvars() || a.degree() != b.degree())
        throw std::invalid_argument("series_mul: shape mismatch");
    TruncSeries<V> r(a.nvars(), a.degree());
    for (const auto& [ma, va] : a.terms()) {
        int da = total_degree(ma);
        for (const auto& [mb, vb] : b.terms()) {
            if (da + total_degree(mb) > a.degree()) continue;
            ExpVec m(a.nvars());
            for (int i = 0; i < a.nvars(); ++i) m[i] = ma[i] + mb[i];
            r.add_term(m, V(va * vb));
        }
    }
    return r;
}

/// Truncated expansion of 1/(1 - c z^mono) = sum_n c^n z^(n mono).
/// mono must be nonzero: the scalar case has no series meaning here.
template <class C>
TruncSeries<C> series_geom(const C& c, const ExpVec& mono, int nvars,
                           int degree) {
    if ((int)mono.size() != nvars)
        throw std::invalid_argument("series_geom: bad monomial size");
    int step = total_degree(mono);
    bool zero = true;
    for (int x : mono) {
        if (x < 0) throw std::invalid_argument("series_geom: negative exponent");
        if (x != 0) zero = false;
    }
    if (zero)
        throw std::invalid_argument(
            "series_geom: zero monomial; invert the scalar instead");
    TruncSeries<C> r(nvars, degree);
    C cn(1);
    ExpVec m(nvars, 0);
    for (int n = 0; n * step <= degree; ++n) {
        r.add_term(m, cn);
        cn = cn * c;
        for (int i = 0; i < nvars; ++i) m[i] += mono[i];
    }
    return r;
}

template <class V>
TruncSeries<V> TruncSeries<V>::shifted(const ExpVec& e, const V& c) const {
    TruncSeries r(m_, d_);
    for (const auto& [m, v] : t_) {
        ExpVec me(m_);
        for (int i = 0; i < m_; ++i) me[i] = m[i] + e[i];
        r.add_term(me, V(v * c));
    }
    return r;
}

}  // namespace bqkz
