#include <doctest.h>

#include <random>

#include "bqkz/cocycle.hpp"

using namespace bqkz;

namespace {
const RatQK K = RatQK::k();

// monomial points with k-exponents spread out so no R-argument hits k^{-2}
MonoPoint random_point(int n, std::mt19937& rng) {
    std::uniform_int_distribution<int> da(-3, 3), db(0, 2);
    ExpVec a(n), b(n);
    for (int i = 0; i < n; ++i) {
        a[i] = da(rng);
        b[i] = 7 * i + db(rng) + (i == 0 ? 13 : 0);
    }
    std::shuffle(b.begin(), b.end(), rng);
    return MonoPoint(a, b);
}

ExpVec random_small_vec(int n, std::mt19937& rng) {
    std::uniform_int_distribution<int> d(-1, 1);
    ExpVec v(n);
    for (auto& x : v) x = d(rng);
    return v;
}

Permutation random_perm(int n, std::mt19937& rng) {
    std::vector<int> img(n);
    for (int i = 0; i < n; ++i) img[i] = i + 1;
    std::shuffle(img.begin(), img.end(), rng);
    return Permutation(img);
}
}  // namespace

TEST_CASE("R-matrix: inverse pair, constant solution, pole, z->0 limit") {
    for (int n : {2, 3}) {
        SnBasis b(n);
        auto ctx = exact_ctx(b);
        auto z = LaurentPoly<RatQK>::monomial(1, RatQK(1), {1});
        for (int i = 1; i < n; ++i) {
            // R_i(z) R_i(z^{-1}) = id over Q(q,k)(z), cross-multiplied
            auto [nump, denp] = r_matrix_fraction_free(b, i, z);
            auto [numm, denm] = r_matrix_fraction_free(b, i, z.inverse());
            HeckeMat<LaurentPoly<RatQK>> prod = nump * numm;
            LaurentPoly<RatQK> dd = denp * denm;
            for (int r = 0; r < b.size(); ++r)
                for (int c = 0; c < b.size(); ++c)
                    CHECK(prod(r, c) ==
                          (r == c ? dd : LaurentPoly<RatQK>::zero(1)));
            // R_i(z) v_+ = v_+ (symbolic z)
            auto sc = laurent_scalars(1);
            HeckeVec<LaurentPoly<RatQK>> vp = v_plus(b, sc);
            HeckeVec<LaurentPoly<RatQK>> lhs = nump * vp;
            for (int r = 0; r < b.size(); ++r) CHECK(lhs(r) == denp * vp(r));
        }
        CHECK_THROWS_AS(r_matrix(ctx, 1, RatQK::monomial(Int(1), 0, -2)),
                        PoleError);
        HeckeMat<RatQK> r0 = r_matrix(ctx, 1, RatQK(0));
        HeckeMat<RatQK> expect = K * eta_T_inv(b, 1, ctx.sc);
        CHECK(coeff_is_zero(HeckeMat<RatQK>(r0 - expect)));
    }
}

TEST_CASE("Yang-Baxter braid relation, symbolic z and z', N=3,4") {
    for (int n : {3, 4}) {
        SnBasis b(n);
        auto z = LaurentPoly<RatQK>::monomial(2, RatQK(1), {1, 0});
        auto zp = LaurentPoly<RatQK>::monomial(2, RatQK(1), {0, 1});
        auto zz = z * zp;
        for (int j = 1; j + 1 < n; ++j) {
            auto [a1, d1] = r_matrix_fraction_free(b, j, z);
            auto [a2, d2] = r_matrix_fraction_free(b, j + 1, zz);
            auto [a3, d3] = r_matrix_fraction_free(b, j, zp);
            auto [b1, e1] = r_matrix_fraction_free(b, j + 1, zp);
            auto [b2, e2] = r_matrix_fraction_free(b, j, zz);
            auto [b3, e3] = r_matrix_fraction_free(b, j + 1, z);
            CHECK(d1 * d2 * d3 == e1 * e2 * e3);
            HeckeMat<LaurentPoly<RatQK>> lhs = a1 * a2 * a3;
            HeckeMat<LaurentPoly<RatQK>> rhs = b1 * b2 * b3;
            CHECK(coeff_is_zero(HeckeMat<LaurentPoly<RatQK>>(lhs - rhs)));
        }
    }
}

TEST_CASE("cocycle values match the explicit product formulas") {
    std::mt19937 rng(101);
    for (int n : {2, 3}) {
        SnBasis b(n);
        auto ctx = exact_ctx(b);
        MonoPoint tp = random_point(n, rng), gp = random_point(n, rng);
        auto p = exact_pair(tp, gp);
        const int d = b.size();

        // C_{(varpi_N, e)} = gamma^{varpi_N} id
        HeckeMat<RatQK> cN = cocycle_value(ctx, 0, AffElt::varpi(n, n),
                                           AffElt::identity(n), p);
        RatQK scal = gp.pow(ExpVec(n, 1));
        CHECK(coeff_is_zero(HeckeMat<RatQK>(
            cN - HeckeMat<RatQK>(scal * HeckeMat<RatQK>::Identity(d, d)))));

        // C_{(eps_j, e)}: R_{j-1}(t_{j-1}/t_j)...R_1(t_1/t_j) eta(pi)
        //                 R_{N-1}(q t_N/t_j)...R_j(q t_{j+1}/t_j)
        for (int j = 1; j <= n; ++j) {
            HeckeMat<RatQK> got = cocycle_value(ctx, 0, AffElt::eps(n, j),
                                                AffElt::identity(n), p);
            HeckeMat<RatQK> expect = HeckeMat<RatQK>::Identity(d, d);
            for (int i = j - 1; i >= 1; --i)
                expect = HeckeMat<RatQK>(
                    expect * r_matrix(ctx, i, tp.coord(i) / tp.coord(j)));
            expect = HeckeMat<RatQK>(expect * eta_pi(b, p.g));
            for (int i = n - 1; i >= j; --i)
                expect = HeckeMat<RatQK>(
                    expect * r_matrix(ctx, i,
                                      RatQK::q() * tp.coord(i + 1) / tp.coord(j)));
            CHECK(coeff_is_zero(HeckeMat<RatQK>(got - expect)));
        }

        // C_{(e,s_i)}(gamma) = C_iota R_i(gamma^{-alpha_i}) C_iota
        for (int i = 1; i < n; ++i) {
            HeckeMat<RatQK> got = cocycle_value(ctx, 0, AffElt::identity(n),
                                                AffElt::s(n, i), p);
            HeckeMat<RatQK> expect =
                c_iota(b, r_matrix(ctx, i, gp.coord(i + 1) / gp.coord(i)));
            CHECK(coeff_is_zero(HeckeMat<RatQK>(got - expect)));
        }

        // C_{(e, varpi_j)}: the eq. (fundamental) product
        for (int j = 1; j < n; ++j) {
            HeckeMat<RatQK> got = cocycle_value(ctx, 0, AffElt::identity(n),
                                                AffElt::varpi(n, j), p);
            auto tinv = inverted_coords(p.t);
            HeckeMat<RatQK> mid = HeckeMat<RatQK>::Identity(d, d);
            for (int r = 0; r < j; ++r)
                mid = HeckeMat<RatQK>(mid * eta_pi(b, tinv));
            for (int r = 1; r <= j; ++r)
                for (int s = n; s >= j + 1; --s) {
                    int idx = r + s - (j + 1);
                    mid = HeckeMat<RatQK>(
                        mid *
                        r_matrix(ctx, idx, RatQK::q() * gp.coord(r) / gp.coord(s)));
                }
            HeckeMat<RatQK> expect = c_iota(b, mid);
            CHECK(coeff_is_zero(HeckeMat<RatQK>(got - expect)));
        }
    }
}

TEST_CASE("cocycle law on random pairs, N<=3, exact") {
    std::mt19937 rng(2024);
    for (int n : {2, 3}) {
        SnBasis b(n);
        auto ctx = exact_ctx(b);
        int wanted = n == 2 ? 200 : 100, done = 0;
        while (done < wanted) {
            AffElt w1(random_small_vec(n, rng), random_perm(n, rng));
            AffElt w2(random_small_vec(n, rng), random_perm(n, rng));
            AffElt u1(random_small_vec(n, rng), random_perm(n, rng));
            AffElt u2(random_small_vec(n, rng), random_perm(n, rng));
            int i1 = (int)(rng() % 2), i2 = (int)(rng() % 2);
            auto p = exact_pair(random_point(n, rng), random_point(n, rng));
            try {
                // rhs: C_v(p) C_w(v^{-1}p)
                auto vtoks = cocycle_tokens(i1, w1, w2);
                PointPair<RatQK> vp = p;
                for (auto& tok : vtoks) apply_w_inverse(ctx, tok, vp);
                HeckeMat<RatQK> rhs =
                    HeckeMat<RatQK>(cocycle_value(ctx, i1, w1, w2, p) *
                                    cocycle_value(ctx, i2, u1, u2, vp));
                // lhs: the product element iota^{i1+i2} (w1',w2')(u1,u2),
                // slots swapping when iota^{i2} moves left
                int itot = (i1 + i2) % 2;
                AffElt c1 = (i2 ? w2 : w1) * u1;
                AffElt c2 = (i2 ? w1 : w2) * u2;
                HeckeMat<RatQK> lhs = cocycle_value(ctx, itot, c1, c2, p);
                CHECK(coeff_is_zero(HeckeMat<RatQK>(lhs - rhs)));
                ++done;
            } catch (const PoleError&) {
                continue;
            }
        }
    }
}

TEST_CASE("connection matrices: identity, compatibility, iota symmetry") {
    std::mt19937 rng(77);
    for (int n : {2, 3}) {
        SnBasis b(n);
        auto ctx = exact_ctx(b);
        const int d = b.size();
        auto p0 = exact_pair(random_point(n, rng), random_point(n, rng));
        CHECK(coeff_is_zero(HeckeMat<RatQK>(
            connection_matrix(ctx, ExpVec(n, 0), ExpVec(n, 0), p0) -
            HeckeMat<RatQK>::Identity(d, d))));

        int done = 0;
        while (done < 10) {
            ExpVec lam = random_small_vec(n, rng), mu = random_small_vec(n, rng);
            ExpVec nu = random_small_vec(n, rng), xi = random_small_vec(n, rng);
            MonoPoint tp = random_point(n, rng), gp = random_point(n, rng);
            try {
                auto p = exact_pair(tp, gp);
                MonoPoint t1 = tp, g1 = gp, t2 = tp, g2 = gp;
                for (int i = 0; i < n; ++i) {
                    t1.a[i] -= lam[i];
                    g1.a[i] += mu[i];
                    t2.a[i] -= nu[i];
                    g2.a[i] += xi[i];
                }
                HeckeMat<RatQK> lhs = HeckeMat<RatQK>(
                    connection_matrix(ctx, lam, mu, p) *
                    connection_matrix(ctx, nu, xi, exact_pair(t1, g1)));
                HeckeMat<RatQK> rhs = HeckeMat<RatQK>(
                    connection_matrix(ctx, nu, xi, p) *
                    connection_matrix(ctx, lam, mu, exact_pair(t2, g2)));
                CHECK(coeff_is_zero(HeckeMat<RatQK>(lhs - rhs)));
                // iota-symmetry
                HeckeMat<RatQK> a = cocycle_value(
                    ctx, 0, AffElt::identity(n), AffElt::translation(lam), p);
                HeckeMat<RatQK> c = c_iota(
                    b, cocycle_value(ctx, 0, AffElt::translation(lam),
                                     AffElt::identity(n),
                                     exact_pair(gp.inverse(), tp.inverse())));
                CHECK(coeff_is_zero(HeckeMat<RatQK>(a - c)));
                ++done;
            } catch (const PoleError&) {
                continue;
            }
        }

        // structural: C_{(w,e)} gamma-independent, C_{(e,w)} t-independent
        for (int i = 1; i < n; ++i) {
            MonoPoint tp = random_point(n, rng);
            MonoPoint ga = random_point(n, rng), gb = random_point(n, rng);
            HeckeMat<RatQK> m1 =
                cocycle_value(ctx, 0, AffElt::s(n, i), AffElt::identity(n),
                              exact_pair(tp, ga));
            HeckeMat<RatQK> m2 =
                cocycle_value(ctx, 0, AffElt::s(n, i), AffElt::identity(n),
                              exact_pair(tp, gb));
            CHECK(coeff_is_zero(HeckeMat<RatQK>(m1 - m2)));
            HeckeMat<RatQK> m3 =
                cocycle_value(ctx, 0, AffElt::identity(n), AffElt::s(n, i),
                              exact_pair(ga, tp));
            HeckeMat<RatQK> m4 =
                cocycle_value(ctx, 0, AffElt::identity(n), AffElt::s(n, i),
                              exact_pair(gb, tp));
            CHECK(coeff_is_zero(HeckeMat<RatQK>(m3 - m4)));
        }
    }
}

TEST_CASE("reduced-word independence of cocycle values") {
    std::mt19937 rng(5);
    for (int n : {2, 3}) {
        SnBasis b(n);
        auto ctx = exact_ctx(b);
        auto p = exact_pair(random_point(n, rng), random_point(n, rng));
        for (int i = 1; i + 1 < n; ++i) {
            std::vector<CocTok> w1 = {{CocTok::S1, i, 0},
                                      {CocTok::S1, i + 1, 0},
                                      {CocTok::S1, i, 0}};
            std::vector<CocTok> w2 = {{CocTok::S1, i + 1, 0},
                                      {CocTok::S1, i, 0},
                                      {CocTok::S1, i + 1, 0}};
            HeckeMat<RatQK> a = cocycle_from_tokens(ctx, w1, p);
            HeckeMat<RatQK> c = cocycle_from_tokens(ctx, w2, p);
            CHECK(coeff_is_zero(HeckeMat<RatQK>(a - c)));
        }
        // translation factorization independence: eps_1 + eps_2, both orders
        ExpVec e1(n, 0), e2(n, 0);
        e1[0] = 1;
        e2[1] = 1;
        std::vector<CocTok> t12, t21;
        append_slot_tokens(t12, AffElt::translation(e1), false);
        append_slot_tokens(t12, AffElt::translation(e2), false);
        append_slot_tokens(t21, AffElt::translation(e2), false);
        append_slot_tokens(t21, AffElt::translation(e1), false);
        HeckeMat<RatQK> a = cocycle_from_tokens(ctx, t12, p);
        HeckeMat<RatQK> c = cocycle_from_tokens(ctx, t21, p);
        CHECK(coeff_is_zero(HeckeMat<RatQK>(a - c)));
    }
}

TEST_CASE("singular set predicates") {
    using P = SingularSetPredicate;
    MonoPoint t({5, 0}, {-2, 0});
    CHECK(P{P::S}.contains(t));
    CHECK_FALSE(P{P::SPlus}.contains(t));
    MonoPoint t2({-3, 0}, {-2, 0});
    CHECK(P{P::SPlus}.contains(t2));
    CHECK(P{P::SPlusInv}.contains(t2.inverse()));
    MonoPoint ok({1, 0}, {7, 0});
    CHECK_FALSE(P{P::S}.contains(ok));
    CHECK_FALSE(P{P::GenericK}.contains(ok));
    Cplx q(0.3, 0), k(0.7, 0);
    std::vector<Cplx> near = {k * k * std::pow(q, 3.0), 1.0};
    CHECK(P{P::S}.near_violation({1.0 / near[0], 1.0}, q, k));
    std::vector<Cplx> fine = {Cplx(0.47, 0.1), Cplx(1.2, -0.4)};
    CHECK_FALSE(P{P::S}.near_violation(fine, q, k));
}

TEST_CASE("shift operator: identity map and S_N-equivariance") {
    std::mt19937 rng(31);
    for (int n : {2, 3}) {
        SnBasis b(n);
        auto ctx = exact_ctx(b);
        auto pt = exact_pair(random_point(n, rng), random_point(n, rng));
        auto vp = v_plus(b, ctx.sc);
        auto shifted = shift_solution(ctx, AffElt::identity(n), {pt}, {vp});
        CHECK(coeff_is_zero(HeckeVec<RatQK>(shifted[0] - vp)));

        int done = 0;
        while (done < 5) {
            MonoPoint tp = random_point(n, rng), zp = random_point(n, rng);
            ExpVec lam = random_small_vec(n, rng);
            AffElt w = AffElt::translation(lam);
            try {
                for (int i = 1; i < n; ++i) {
                    AffElt v = AffElt::s(n, i);
                    auto p = exact_pair(tp, zp);
                    auto pv = exact_pair(tp.acted(v.inverse()), zp);
                    MonoPoint zshift = zp.acted(w.diamond().inverse());
                    HeckeMat<RatQK> lhs = HeckeMat<RatQK>(
                        cocycle_value(ctx, 0, v, AffElt::identity(n), p) *
                        cocycle_value(ctx, 0, AffElt::identity(n), w, pv));
                    HeckeMat<RatQK> rhs = HeckeMat<RatQK>(
                        cocycle_value(ctx, 0, AffElt::identity(n), w, p) *
                        cocycle_value(ctx, 0, v, AffElt::identity(n),
                                      exact_pair(tp, zshift)));
                    CHECK(coeff_is_zero(HeckeMat<RatQK>(lhs - rhs)));
                }
                ++done;
            } catch (const PoleError&) {
                continue;
            }
        }
        MonoPoint baddish(ExpVec(n, 0), ExpVec(n, 0));
        baddish.a[0] = -3;
        baddish.b[0] = -2;
        CHECK_FALSE(shift_regular_at(baddish));
    }
}
