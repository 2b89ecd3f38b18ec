#pragma once

#include <Eigen/Dense>
#include <map>

#include "bqkz/numeric.hpp"
#include "bqkz/ratqk.hpp"
#include "bqkz/weyl.hpp"

namespace bqkz {

template <class C>
using HeckeVec = Eigen::Matrix<C, Eigen::Dynamic, 1>;
template <class C>
using HeckeMat = Eigen::Matrix<C, Eigen::Dynamic, Eigen::Dynamic>;

struct DegeneracyError : std::domain_error {
    using std::domain_error::domain_error;
};

/// Fixed enumeration of S_N (lexicographic on image arrays); every
/// HeckeVec / HeckeMat is expressed in the resulting T_w basis.
class SnBasis {
public:
    explicit SnBasis(int n) : n_(n) {
        std::vector<int> img(n);
        for (int i = 0; i < n; ++i) img[i] = i + 1;
        do {
            index_.emplace(img, (int)elems_.size());
            elems_.emplace_back(img);
        } while (std::next_permutation(img.begin(), img.end()));
        len_.reserve(elems_.size());
        for (const auto& w : elems_) len_.push_back(w.length());
        left_si_.assign(n - 1, std::vector<int>(elems_.size()));
        for (int i = 1; i < n; ++i) {
            Permutation s = Permutation::transposition(n, i);
            for (size_t w = 0; w < elems_.size(); ++w)
                left_si_[i - 1][w] = index(s * elems_[w]);
        }
    }

    int n() const { return n_; }
    int size() const { return (int)elems_.size(); }
    const Permutation& perm(int i) const { return elems_[i]; }
    int index(const Permutation& w) const { return index_.at(w.image()); }
    int length(int i) const { return len_[i]; }
    int identity() const { return 0; }
    int w0() const { return index(Permutation::longest(n_)); }
    int left_mult_si(int i, int w) const { return left_si_[i - 1][w]; }

private:
    int n_;
    std::vector<Permutation> elems_;
    std::map<std::vector<int>, int> index_;
    std::vector<int> len_;
    std::vector<std::vector<int>> left_si_;
};

/// The scalar pair (k, k^{-1}) in the coefficient ring at hand; q is only
/// needed where points carry it.
template <class C>
struct HeckeScalars {
    C k, kinv;
};

inline RatQK inv_of(const RatQK& c) { return c.inverse(); }
inline Cplx inv_of(const Cplx& c) { return 1.0 / c; }
template <class C>
LaurentPoly<C> inv_of(const LaurentPoly<C>& p) {
    return p.inverse();
}

inline HeckeScalars<RatQK> exact_scalars() {
    return {RatQK::k(), RatQK::k().inverse()};
}
inline HeckeScalars<Cplx> numeric_scalars(Cplx k) { return {k, 1.0 / k}; }
inline HeckeScalars<LaurentPoly<RatQK>> laurent_scalars(int nvars) {
    return {LaurentPoly<RatQK>(nvars, RatQK::k()),
            LaurentPoly<RatQK>(nvars, RatQK::k().inverse())};
}

template <class C>
HeckeVec<C> basis_vector(const SnBasis& b, int idx) {
    HeckeVec<C> v = HeckeVec<C>::Constant(b.size(), C(0));
    v(idx) = C(1);
    return v;
}

/// Left multiplication by T_i in the T_w basis (eta of a finite generator).
template <class C>
HeckeVec<C> hecke_mul_gen(const SnBasis& b, int i, const HeckeVec<C>& v,
                          const HeckeScalars<C>& sc) {
    HeckeVec<C> r = HeckeVec<C>::Constant(b.size(), C(0));
    C kk = sc.k - sc.kinv;
    for (int w = 0; w < b.size(); ++w) {
        if (coeff_is_zero(v(w))) continue;
        int sw = b.left_mult_si(i, w);
        if (b.length(sw) > b.length(w)) {
            r(sw) = r(sw) + v(w);
        } else {
            r(w) = r(w) + kk * v(w);
            r(sw) = r(sw) + v(w);
        }
    }
    return r;
}

template <class C>
HeckeVec<C> hecke_mul_gen_inv(const SnBasis& b, int i, const HeckeVec<C>& v,
                              const HeckeScalars<C>& sc) {
    // T_i^{-1} = T_i - (k - k^{-1})
    HeckeVec<C> r = hecke_mul_gen(b, i, v, sc);
    C kk = sc.k - sc.kinv;
    for (int w = 0; w < b.size(); ++w) r(w) = r(w) - kk * v(w);
    return r;
}

/// Product T_u . v, expanding T_u along a reduced word.
template <class C>
HeckeVec<C> hecke_mul_basis(const SnBasis& b, const Permutation& u,
                            const HeckeVec<C>& v, const HeckeScalars<C>& sc) {
    auto word = u.reduced_word();
    HeckeVec<C> r = v;
    for (auto it = word.rbegin(); it != word.rend(); ++it)
        r = hecke_mul_gen(b, *it, r, sc);
    return r;
}

/// Bilinear product on H_0.
template <class C>
HeckeVec<C> hecke_mul(const SnBasis& b, const HeckeVec<C>& a,
                      const HeckeVec<C>& v, const HeckeScalars<C>& sc) {
    HeckeVec<C> r = HeckeVec<C>::Constant(b.size(), C(0));
    for (int u = 0; u < b.size(); ++u) {
        if (coeff_is_zero(a(u))) continue;
        r += a(u) * hecke_mul_basis(b, b.perm(u), v, sc);
    }
    return r;
}

template <class C>
HeckeMat<C> eta_T(const SnBasis& b, int i, const HeckeScalars<C>& sc) {
    HeckeMat<C> m = HeckeMat<C>::Constant(b.size(), b.size(), C(0));
    for (int w = 0; w < b.size(); ++w) {
        HeckeVec<C> col = hecke_mul_gen(b, i, basis_vector<C>(b, w), sc);
        m.col(w) = col;
    }
    return m;
}

template <class C>
HeckeMat<C> eta_T_inv(const SnBasis& b, int i, const HeckeScalars<C>& sc) {
    HeckeMat<C> m = eta_T(b, i, sc);
    C kk = sc.k - sc.kinv;
    for (int w = 0; w < b.size(); ++w) m(w, w) = m(w, w) - kk;
    return m;
}

/// eta(pi)(gamma): T_w -> gamma_{w^{-1}(N)} T_{sigma w}.
template <class C>
HeckeMat<C> eta_pi(const SnBasis& b, const std::vector<C>& gamma) {
    const int n = b.n();
    Permutation sig = Permutation::rotation(n);
    HeckeMat<C> m = HeckeMat<C>::Constant(b.size(), b.size(), C(0));
    for (int w = 0; w < b.size(); ++w) {
        int dst = b.index(sig * b.perm(w));
        m(dst, w) = gamma[b.perm(w).inverse()(n) - 1];
    }
    return m;
}

/// Inverse of eta(pi)(gamma): T_u -> gamma_{u^{-1}(1)}^{-1} T_{sigma^{-1} u}.
template <class C>
HeckeMat<C> eta_pi_inv(const SnBasis& b, const std::vector<C>& gamma) {
    const int n = b.n();
    Permutation siginv = Permutation::rotation(n).inverse();
    HeckeMat<C> m = HeckeMat<C>::Constant(b.size(), b.size(), C(0));
    for (int u = 0; u < b.size(); ++u) {
        int dst = b.index(siginv * b.perm(u));
        m(dst, u) = inv_of(gamma[b.perm(u).inverse()(1) - 1]);
    }
    return m;
}

/// eta(Y_j)(gamma) = eta(T_{j-1})^{-1}...eta(T_1)^{-1} eta(pi)
///                   eta(T_{N-1})...eta(T_j).
template <class C>
HeckeMat<C> eta_Y(const SnBasis& b, int j, const std::vector<C>& gamma,
                  const HeckeScalars<C>& sc) {
    HeckeMat<C> m = eta_pi(b, gamma);
    for (int i = 1; i <= j - 1; ++i) m = HeckeMat<C>(eta_T_inv(b, i, sc) * m);
    for (int i = b.n() - 1; i >= j; --i) m = HeckeMat<C>(m * eta_T(b, i, sc));
    return m;
}

template <class C>
HeckeMat<C> eta_Y_inv(const SnBasis& b, int j, const std::vector<C>& gamma,
                      const HeckeScalars<C>& sc) {
    // Y_j^{-1} = T_j^{-1}...T_{N-1}^{-1} pi^{-1} T_1 ... T_{j-1}
    HeckeMat<C> m = eta_pi_inv(b, gamma);
    for (int i = b.n() - 1; i >= j; --i) m = HeckeMat<C>(eta_T_inv(b, i, sc) * m);
    for (int i = 1; i <= j - 1; ++i) m = HeckeMat<C>(m * eta_T(b, i, sc));
    return m;
}

/// eta(Y^mu)(gamma) for an integer vector mu.
template <class C>
HeckeMat<C> eta_Y_power(const SnBasis& b, const ExpVec& mu,
                        const std::vector<C>& gamma,
                        const HeckeScalars<C>& sc) {
    HeckeMat<C> m = HeckeMat<C>::Identity(b.size(), b.size());
    for (int j = 1; j <= b.n(); ++j) {
        int e = mu[j - 1];
        if (e == 0) continue;
        HeckeMat<C> f = e > 0 ? eta_Y(b, j, gamma, sc)
                              : eta_Y_inv(b, j, gamma, sc);
        for (int r = 0; r < std::abs(e); ++r) m = m * f;
    }
    return m;
}

/// eta(S~_i^*)(gamma) =
///   (eta(T_i) - k)(1 - eta(Y_i Y_{i+1}^{-1})) + k - k^{-1} eta(Y_i Y_{i+1}^{-1})
template <class C>
HeckeMat<C> eta_intertwiner_star(const SnBasis& b, int i,
                                 const std::vector<C>& gamma,
                                 const HeckeScalars<C>& sc) {
    const int d = b.size();
    HeckeMat<C> yy = eta_Y(b, i, gamma, sc) * eta_Y_inv(b, i + 1, gamma, sc);
    HeckeMat<C> ti = eta_T(b, i, sc);
    HeckeMat<C> id = HeckeMat<C>::Identity(d, d);
    HeckeMat<C> tk = ti - HeckeMat<C>(sc.k * id);
    return HeckeMat<C>(tk * (id - yy)) + HeckeMat<C>(sc.k * id) -
           HeckeMat<C>(sc.kinv * yy);
}

/// xi_w(gamma) by the intertwiner recursion; xi_e = T_e.
template <class C>
HeckeVec<C> xi_w(const SnBasis& b, const Permutation& w,
                 const std::vector<C>& gamma, const HeckeScalars<C>& sc) {
    auto word = w.reduced_word();
    HeckeVec<C> v = basis_vector<C>(b, b.identity());
    for (auto it = word.rbegin(); it != word.rend(); ++it)
        v = eta_intertwiner_star(b, *it, gamma, sc) * v;
    return v;
}

/// chi_+(T_w) = k^{l(w)}, extended linearly.
template <class C>
C chi_plus(const SnBasis& b, const HeckeVec<C>& v, const HeckeScalars<C>& sc) {
    C s(0);
    for (int w = 0; w < b.size(); ++w) {
        if (coeff_is_zero(v(w))) continue;
        C kl(1);
        for (int l = 0; l < b.length(w); ++l) kl = kl * sc.k;
        s = s + kl * v(w);
    }
    return s;
}

/// v_+ = sum_w k^{l(w)} T_w.
template <class C>
HeckeVec<C> v_plus(const SnBasis& b, const HeckeScalars<C>& sc) {
    HeckeVec<C> v(b.size());
    for (int w = 0; w < b.size(); ++w) {
        C kl(1);
        for (int l = 0; l < b.length(w); ++l) kl = kl * sc.k;
        v(w) = kl;
    }
    return v;
}

/// C_iota on vectors: T_w -> T_{w^{-1}}.
template <class C>
HeckeVec<C> c_iota(const SnBasis& b, const HeckeVec<C>& v) {
    HeckeVec<C> r(b.size());
    for (int w = 0; w < b.size(); ++w) r(b.index(b.perm(w).inverse())) = v(w);
    return r;
}

/// C_iota on matrices: A -> C_iota A C_iota.
template <class C>
HeckeMat<C> c_iota(const SnBasis& b, const HeckeMat<C>& a) {
    HeckeMat<C> r(b.size(), b.size());
    for (int i = 0; i < b.size(); ++i)
        for (int j = 0; j < b.size(); ++j)
            r(b.index(b.perm(i).inverse()), b.index(b.perm(j).inverse())) =
                a(i, j);
    return r;
}

/// The vectors T_{w0} T_w, columns of the standard eigenbasis matrix.
template <class C>
HeckeMat<C> tw0_basis(const SnBasis& b, const HeckeScalars<C>& sc) {
    HeckeMat<C> m(b.size(), b.size());
    Permutation w0 = Permutation::longest(b.n());
    for (int w = 0; w < b.size(); ++w)
        m.col(w) = hecke_mul_basis(b, w0, basis_vector<C>(b, w), sc);
    return m;
}

/// Gauss-Jordan inverse over an exact field; throws if singular.
template <class C>
HeckeMat<C> exact_inverse(HeckeMat<C> a) {
    const int n = (int)a.rows();
    HeckeMat<C> inv = HeckeMat<C>::Identity(n, n);
    for (int col = 0; col < n; ++col) {
        int piv = -1;
        for (int r = col; r < n; ++r)
            if (!coeff_is_zero(a(r, col))) {
                piv = r;
                break;
            }
        if (piv < 0) throw std::domain_error("exact_inverse: singular matrix");
        if (piv != col) {
            a.row(piv).swap(a.row(col));
            inv.row(piv).swap(inv.row(col));
        }
        C d = inv_of(a(col, col));
        for (int c = 0; c < n; ++c) {
            a(col, c) = a(col, c) * d;
            inv(col, c) = inv(col, c) * d;
        }
        for (int r = 0; r < n; ++r) {
            if (r == col || coeff_is_zero(a(r, col))) continue;
            C f = a(r, col);
            for (int c = 0; c < n; ++c) {
                a(r, c) = a(r, c) - f * a(col, c);
                inv(r, c) = inv(r, c) - f * inv(col, c);
            }
        }
    }
    return inv;
}

/// Torus point with monomial coordinates t_i = q^{a_i} k^{b_i}.
struct MonoPoint {
    ExpVec a, b;

    MonoPoint() = default;
    MonoPoint(ExpVec a_, ExpVec b_) : a(std::move(a_)), b(std::move(b_)) {}
    static MonoPoint q_power(const ExpVec& lam) {
        return MonoPoint(lam, ExpVec(lam.size(), 0));
    }
    static MonoPoint k_power(const ExpVec& mu) {
        return MonoPoint(ExpVec(mu.size(), 0), mu);
    }
    /// q^{lam} k^{mu}
    static MonoPoint qk_power(const ExpVec& lam, const ExpVec& mu) {
        return MonoPoint(lam, mu);
    }

    int n() const { return (int)a.size(); }
    RatQK coord(int i) const {  // 1-based
        return RatQK::monomial(Int(1), a[i - 1], b[i - 1]);
    }
    std::vector<RatQK> coords() const {
        std::vector<RatQK> r;
        for (int i = 1; i <= n(); ++i) r.push_back(coord(i));
        return r;
    }
    /// t^m as an exact monomial
    RatQK pow(const ExpVec& m) const {
        return RatQK::monomial(Int(1), (int)dot(a, m), (int)dot(b, m));
    }
    MonoPoint inverse() const {
        MonoPoint r = *this;
        for (auto& x : r.a) x = -x;
        for (auto& x : r.b) x = -x;
        return r;
    }
    /// action of lam.u: permute, then multiply by q^{lam}
    MonoPoint acted(const AffElt& g) const {
        MonoPoint r(g.perm.act_weight(a), g.perm.act_weight(b));
        for (int i = 0; i < n(); ++i) r.a[i] += g.lam[i];
        return r;
    }
    std::vector<Cplx> eval(Cplx q, Cplx k) const {
        std::vector<Cplx> r;
        for (int i = 0; i < n(); ++i)
            r.push_back(std::pow(q, a[i]) * std::pow(k, b[i]));
        return r;
    }
    bool operator==(const MonoPoint& o) const { return a == o.a && b == o.b; }
};

}  // namespace bqkz
