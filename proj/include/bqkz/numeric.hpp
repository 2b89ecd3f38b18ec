#pragma once

#include <complex>
#include <stdexcept>
#include <vector>

#include <Eigen/Dense>

namespace bqkz {

using Cplx = std::complex<double>;

constexpr int kThetaTruncDefault = 64;

/// Renormalized Jacobi theta function, truncated product
/// prod_{m=0}^{M-1} (1 - q^m z)(1 - q^{m+1}/z).
/// For |q| <= 0.9 and z in an annulus bounded away from 0 and infinity the
/// omitted tail is below 1e-14 at the default M: the tail factors are
/// 1 + O(q^M) and |q|^64 < 1e-14 already at |q| = 0.9 up to moderate |z|.
inline Cplx theta_num(Cplx z, Cplx q, int M = kThetaTruncDefault) {
    if (std::abs(q) >= 1.0) throw std::domain_error("theta_num: |q| >= 1");
    if (z == Cplx(0)) throw std::domain_error("theta_num: z = 0");
    Cplx r = 1.0, qm = 1.0;
    for (int m = 0; m < M; ++m) {
        r *= (1.0 - qm * z);
        qm *= q;
        r *= (1.0 - qm / z);
    }
    return r;
}

/// Truncated q-shifted factorial (z;q)_infty = prod_{m=0}^{M-1}(1 - q^m z).
inline Cplx qpoch_num(Cplx z, Cplx q, int M = kThetaTruncDefault) {
    if (std::abs(q) >= 1.0) throw std::domain_error("qpoch_num: |q| >= 1");
    Cplx r = 1.0, qm = 1.0;
    for (int m = 0; m < M; ++m) {
        r *= (1.0 - qm * z);
        qm *= q;
    }
    return r;
}

/// Numeric point of T = (C*)^N together with the numeric parameters.
struct ComplexPoint {
    std::vector<Cplx> coords;
    Cplx q, k, kappa;

    ComplexPoint(std::vector<Cplx> t, Cplx q_, Cplx k_, Cplx kappa_ = Cplx(1))
        : coords(std::move(t)), q(q_), k(k_), kappa(kappa_) {
        if (std::abs(q) >= 1.0)
            throw std::domain_error("ComplexPoint: |q| >= 1 required");
        for (const auto& c : coords)
            if (c == Cplx(0))
                throw std::domain_error("ComplexPoint: zero coordinate");
    }
    int n() const { return (int)coords.size(); }
};

}  // namespace bqkz
