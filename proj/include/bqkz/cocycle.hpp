#pragma once

#include <sstream>

#include "bqkz/hecke.hpp"

namespace bqkz {

struct PoleError : std::runtime_error {
    using std::runtime_error::runtime_error;
};
struct ModeError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// ---- scalar glue for the three coefficient modes ----

inline std::string scalar_str(const RatQK& c) { return c.str(); }
inline std::string scalar_str(const Cplx& c) {
    std::ostringstream os;
    os << c.real() << (c.imag() < 0 ? "" : "+") << c.imag() << "i";
    return os.str();
}
template <class C>
std::string scalar_str(const LaurentPoly<C>& p) {
    std::ostringstream os;
    os << "[laurent:" << p.n_terms() << " terms]";
    if (p.is_constant()) os << " " << scalar_str(p.constant_term());
    return os.str();
}

inline bool is_k2_pole(const RatQK& z) {
    return z == RatQK::monomial(Int(1), 0, -2);
}
inline bool is_k2_pole(const LaurentPoly<RatQK>& z) {
    return z.is_constant() && is_k2_pole(z.constant_term());
}

/// c_k(z)^{-1} = k (1-z) / (1-k^2 z); the only pole of R_i is z = k^{-2}.
inline RatQK ck_inverse(const RatQK& z, const HeckeScalars<RatQK>& sc) {
    if (is_k2_pole(z))
        throw PoleError("R-matrix pole: z = k^-2, z = " + z.str());
    return sc.k * (RatQK(1) - z) * (RatQK(1) - sc.k * sc.k * z).inverse();
}
inline LaurentPoly<RatQK> ck_inverse(const LaurentPoly<RatQK>& z,
                                     const HeckeScalars<LaurentPoly<RatQK>>& sc) {
    if (!z.is_constant())
        throw ModeError("R-matrix argument is not scalar in symbolic mode");
    RatQK zc = z.constant_term();
    HeckeScalars<RatQK> rs = exact_scalars();
    return LaurentPoly<RatQK>(std::max(z.nvars(), sc.k.nvars()),
                              ck_inverse(zc, rs));
}
inline Cplx ck_inverse(const Cplx& z, const HeckeScalars<Cplx>& sc) {
    Cplx den = 1.0 - sc.k * sc.k * z;
    if (std::abs(den) < 1e-13)
        throw PoleError("R-matrix pole (numeric): z ~ k^-2, z = " +
                        scalar_str(z));
    return sc.k * (1.0 - z) / den;
}

/// Evaluation context: the basis plus the values of q, k in C.
template <class C>
struct CocycleCtx {
    const SnBasis* basis;
    C q;
    HeckeScalars<C> sc;
};

inline CocycleCtx<RatQK> exact_ctx(const SnBasis& b) {
    return {&b, RatQK::q(), exact_scalars()};
}
inline CocycleCtx<LaurentPoly<RatQK>> symbolic_ctx(const SnBasis& b) {
    int n = b.n();
    return {&b, LaurentPoly<RatQK>(n, RatQK::q()), laurent_scalars(n)};
}
inline CocycleCtx<Cplx> numeric_ctx(const SnBasis& b, Cplx q, Cplx k) {
    return {&b, q, numeric_scalars(k)};
}

/// R_i(z) = c_k(z)^{-1} (eta(T_i) - k) + 1.
template <class C>
HeckeMat<C> r_matrix(const CocycleCtx<C>& ctx, int i, const C& z) {
    const SnBasis& b = *ctx.basis;
    C c;
    try {
        c = ck_inverse(z, ctx.sc);
    } catch (const PoleError& e) {
        throw PoleError("R_" + std::to_string(i) + ": " + e.what());
    }
    HeckeMat<C> m = eta_T(b, i, ctx.sc);
    for (int w = 0; w < b.size(); ++w) m(w, w) = m(w, w) - ctx.sc.k;
    m = HeckeMat<C>(c * m);
    for (int w = 0; w < b.size(); ++w) m(w, w) = m(w, w) + C(1);
    return m;
}

/// Fraction-free form: R_i(z) = num / den with polynomial entries;
/// num = k(1-z)(eta(T_i)-k) + (1-k^2 z), den = 1 - k^2 z. Used for the
/// symbolic-z Yang-Baxter identities.
inline std::pair<HeckeMat<LaurentPoly<RatQK>>, LaurentPoly<RatQK>>
r_matrix_fraction_free(const SnBasis& b, int i, const LaurentPoly<RatQK>& z) {
    auto sc = laurent_scalars(z.nvars());
    LaurentPoly<RatQK> one(z.nvars(), RatQK(1));
    LaurentPoly<RatQK> den = one - sc.k * sc.k * z;
    HeckeMat<LaurentPoly<RatQK>> m = eta_T(b, i, sc);
    for (int w = 0; w < b.size(); ++w) m(w, w) = m(w, w) - sc.k;
    LaurentPoly<RatQK> pre = sc.k * (one - z);
    m = HeckeMat<LaurentPoly<RatQK>>(pre * m);
    for (int w = 0; w < b.size(); ++w) m(w, w) = m(w, w) + den;
    return {m, den};
}

// ---- the cocycle engine ----

struct CocTok {
    enum Kind { S1, Pi1, S2, Pi2, Iota } kind;
    int i = 0;    // S1/S2 letter
    int pow = 0;  // Pi1/Pi2 exponent, +-1
};

/// Token factorization of (w, e) over s_1..s_{N-1} and pi^{+-1}; the
/// translation part is factored over the varpi basis.
inline void append_slot_tokens(std::vector<CocTok>& out, const AffElt& w,
                               bool second) {
    const int n = w.n();
    CocTok::Kind sk = second ? CocTok::S2 : CocTok::S1;
    CocTok::Kind pk = second ? CocTok::Pi2 : CocTok::Pi1;
    for (int i = 1; i <= n; ++i) {
        int c = i < n ? w.lam[i - 1] - w.lam[i] : w.lam[n - 1];
        if (c == 0) continue;
        std::vector<int> si = sigma_power_word(n, i == n ? 0 : i);
        for (int rep = 0; rep < std::abs(c); ++rep) {
            if (c > 0) {
                for (int r = 0; r < i; ++r) out.push_back({pk, 0, +1});
                for (auto it = si.rbegin(); it != si.rend(); ++it)
                    out.push_back({sk, *it, 0});
            } else {
                for (int l : si) out.push_back({sk, l, 0});
                for (int r = 0; r < i; ++r) out.push_back({pk, 0, -1});
            }
        }
    }
    for (int l : w.perm.reduced_word()) out.push_back({sk, l, 0});
}

inline std::vector<CocTok> cocycle_tokens(int iota_pow, const AffElt& w1,
                                          const AffElt& w2) {
    std::vector<CocTok> toks;
    if (iota_pow % 2 != 0) toks.push_back({CocTok::Iota, 0, 0});
    append_slot_tokens(toks, w1, false);
    append_slot_tokens(toks, w2, true);
    return toks;
}

/// A point of T x T with coordinates in C.
template <class C>
struct PointPair {
    std::vector<C> t, g;
};

inline PointPair<RatQK> exact_pair(const MonoPoint& t, const MonoPoint& g) {
    return {t.coords(), g.coords()};
}
inline PointPair<Cplx> numeric_pair(const ComplexPoint& t,
                                    const ComplexPoint& g) {
    return {t.coords, g.coords};
}
/// t symbolic (coordinates x_1..x_N), gamma at an exact monomial point.
inline PointPair<LaurentPoly<RatQK>> symbolic_t_pair(const MonoPoint& gamma) {
    int n = gamma.n();
    PointPair<LaurentPoly<RatQK>> p;
    for (int i = 0; i < n; ++i) {
        ExpVec e(n, 0);
        e[i] = 1;
        p.t.push_back(LaurentPoly<RatQK>::monomial(n, RatQK(1), e));
        p.g.push_back(LaurentPoly<RatQK>(n, gamma.coord(i + 1)));
    }
    return p;
}

template <class C>
C pow_scalar(const C& base, int e, bool invertible_needed = true) {
    (void)invertible_needed;
    if (e == 0) return C(1);
    C b = e > 0 ? base : inv_of(base);
    C r = b;
    for (int i = 1; i < std::abs(e); ++i) r = r * b;
    return r;
}

/// w . t for w = lam.u: permute coordinates, then scale by q^{lam}.
template <class C>
std::vector<C> act_coords(const AffElt& w, const std::vector<C>& t,
                          const C& qval) {
    std::vector<C> r = w.perm.act(t);
    for (size_t i = 0; i < r.size(); ++i)
        if (w.lam[i] != 0) r[i] = r[i] * pow_scalar(qval, w.lam[i]);
    return r;
}

template <class C>
void apply_w_inverse(const CocycleCtx<C>& ctx, const CocTok& tok,
                     PointPair<C>& p) {
    const int n = ctx.basis->n();
    switch (tok.kind) {
        case CocTok::S1:
            p.t = act_coords(AffElt::s(n, tok.i), p.t, ctx.q);
            break;
        case CocTok::Pi1: {
            AffElt g = tok.pow > 0 ? AffElt::pi(n).inverse() : AffElt::pi(n);
            p.t = act_coords(g, p.t, ctx.q);
            break;
        }
        case CocTok::S2:
            p.g = act_coords(AffElt::s(n, tok.i), p.g, ctx.q);
            break;
        case CocTok::Pi2: {
            AffElt g = tok.pow > 0 ? AffElt::pi(n).inverse() : AffElt::pi(n);
            p.g = act_coords(g.diamond(), p.g, ctx.q);
            break;
        }
        case CocTok::Iota: {
            std::swap(p.t, p.g);
            for (auto& c : p.t) c = inv_of(c);
            for (auto& c : p.g) c = inv_of(c);
            break;
        }
    }
}

template <class C>
HeckeMat<C> c_iota_matrix(const SnBasis& b) {
    HeckeMat<C> m = HeckeMat<C>::Constant(b.size(), b.size(), C(0));
    for (int w = 0; w < b.size(); ++w)
        m(b.index(b.perm(w).inverse()), w) = C(1);
    return m;
}

template <class C>
std::vector<C> inverted_coords(const std::vector<C>& v) {
    std::vector<C> r;
    r.reserve(v.size());
    for (const auto& c : v) r.push_back(inv_of(c));
    return r;
}

template <class C>
HeckeMat<C> token_value(const CocycleCtx<C>& ctx, const CocTok& tok,
                        const PointPair<C>& p) {
    const SnBasis& b = *ctx.basis;
    switch (tok.kind) {
        case CocTok::S1:
            // C_{(s_i,e)}(t,gamma) = R_i(t_i / t_{i+1})
            return r_matrix(ctx, tok.i, C(p.t[tok.i - 1] * inv_of(p.t[tok.i])));
        case CocTok::Pi1:
            return tok.pow > 0 ? eta_pi(b, p.g) : eta_pi_inv(b, p.g);
        case CocTok::S2:
            // C_{(e,s_i)}(t,gamma) = C_iota R_i(gamma^{-alpha_i}) C_iota
            return c_iota(
                b, r_matrix(ctx, tok.i, C(p.g[tok.i] * inv_of(p.g[tok.i - 1]))));
        case CocTok::Pi2: {
            auto tinv = inverted_coords(p.t);
            return c_iota(b, tok.pow > 0 ? eta_pi(b, tinv)
                                         : eta_pi_inv(b, tinv));
        }
        case CocTok::Iota:
            return c_iota_matrix<C>(b);
    }
    throw std::logic_error("unreachable");
}

/// Cocycle value along a token word: C_{g1 g2 ...}(p) =
/// C_{g1}(p) C_{g2}(g1^{-1} p) ...; the value depends only on the product
/// element (cocycle law), not on the factorization.
template <class C>
HeckeMat<C> cocycle_from_tokens(const CocycleCtx<C>& ctx,
                                const std::vector<CocTok>& toks,
                                PointPair<C> p) {
    const SnBasis& b = *ctx.basis;
    HeckeMat<C> m = HeckeMat<C>::Identity(b.size(), b.size());
    for (const auto& tok : toks) {
        m = HeckeMat<C>(m * token_value(ctx, tok, p));
        apply_w_inverse(ctx, tok, p);
    }
    return m;
}

/// C_w for w = iota^a (w1, w2) at the point p.
template <class C>
HeckeMat<C> cocycle_value(const CocycleCtx<C>& ctx, int iota_pow,
                          const AffElt& w1, const AffElt& w2,
                          const PointPair<C>& p) {
    return cocycle_from_tokens(ctx, cocycle_tokens(iota_pow, w1, w2), p);
}

/// q-connection matrix C_{(lam,mu)}(t,gamma) of BqKZ.
template <class C>
HeckeMat<C> connection_matrix(const CocycleCtx<C>& ctx, const ExpVec& lam,
                              const ExpVec& mu, const PointPair<C>& p) {
    return cocycle_value(ctx, 0, AffElt::translation(lam),
                         AffElt::translation(mu), p);
}

// ---- singularity predicates ----

/// Exact membership tests for monomial points; the q-exponent window only
/// matters for the numeric margin test.
struct SingularSetPredicate {
    enum Kind { S, SPlus, SPlusInv, GenericK } kind;
    int q_window = 64;

    bool contains(const MonoPoint& t) const {
        const int n = t.n();
        switch (kind) {
            case S:
                for (int i = 0; i < n; ++i)
                    for (int j = 0; j < n; ++j)
                        if (i != j && t.b[i] - t.b[j] == -2) return true;
                return false;
            case SPlus:
                for (int i = 0; i < n; ++i)
                    for (int j = i + 1; j < n; ++j)
                        if (t.b[i] - t.b[j] == -2 && t.a[i] - t.a[j] <= -1)
                            return true;
                return false;
            case SPlusInv:
                return SingularSetPredicate{SPlus, q_window}.contains(
                    t.inverse());
            case GenericK:
                // formal q,k are independent; eq-generic holds identically
                return false;
        }
        return false;
    }

    /// numeric margin check; true when the point is too close to the set
    bool near_violation(const std::vector<Cplx>& t, Cplx q, Cplx k,
                        double margin = 1e-8) const {
        const int n = (int)t.size();
        auto close_orbit = [&](Cplx v, int lo, int hi) {
            for (int m = lo; m <= hi; ++m)
                if (std::abs(v * std::pow(q, (double)m) - 1.0) < margin)
                    return true;
            return false;
        };
        switch (kind) {
            case S:
                for (int i = 0; i < n; ++i)
                    for (int j = 0; j < n; ++j)
                        if (i != j &&
                            close_orbit(t[i] / t[j] * k * k, -q_window,
                                        q_window))
                            return true;
                return false;
            case SPlus:
                for (int i = 0; i < n; ++i)
                    for (int j = i + 1; j < n; ++j)
                        if (close_orbit(t[i] / t[j] * k * k, 1, q_window))
                            return true;
                return false;
            case SPlusInv: {
                std::vector<Cplx> ti;
                for (auto& c : t) ti.push_back(1.0 / c);
                return SingularSetPredicate{SPlus, q_window}.near_violation(
                    ti, q, k, margin);
            }
            case GenericK: {
                for (int j = 1; j <= n; ++j)
                    if (close_orbit(std::pow(k, 2.0 * j), -q_window, q_window))
                        return true;
                return false;
            }
        }
        return false;
    }
};

/// Regularity of gamma -> C_{(e,lam)}(., gamma) at a monomial point,
/// for dominant lam: the possible poles sit at gamma^alpha in k^{-2} q^{-N},
/// alpha a positive root.
inline bool shift_regular_at(const MonoPoint& zeta) {
    return !SingularSetPredicate{SingularSetPredicate::SPlus}.contains(zeta);
}

/// The shift operator SOL_{w^{diamond -1} zeta} -> SOL_zeta:
/// f |-> C_{(e,w)}(., zeta) f, applied to samples of f.
template <class C>
std::vector<HeckeVec<C>> shift_solution(
    const CocycleCtx<C>& ctx, const AffElt& w,
    const std::vector<PointPair<C>>& sample_points,
    const std::vector<HeckeVec<C>>& sample_values) {
    if (sample_points.size() != sample_values.size())
        throw std::invalid_argument("shift_solution: sample size mismatch");
    std::vector<HeckeVec<C>> out;
    out.reserve(sample_values.size());
    AffElt e = AffElt::identity(w.n());
    for (size_t s = 0; s < sample_points.size(); ++s) {
        HeckeMat<C> m = cocycle_value(ctx, 0, e, w, sample_points[s]);
        out.push_back(HeckeVec<C>(m * sample_values[s]));
    }
    return out;
}

}  // namespace bqkz
