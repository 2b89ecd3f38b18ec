#pragma once

#include <Eigen/Core>
#include <stdexcept>

#include "bqkz/qk_poly.hpp"

namespace bqkz {

struct DivideByZeroError : std::domain_error {
    DivideByZeroError() : std::domain_error("RatQK: division by zero") {}
};

/// Element of Q(q,k), stored as num/den in canonical form:
/// gcd(num,den) = 1 (including integer contents) and den has positive
/// leading coefficient under graded-lex with q < k. Equality of values
/// is equality of representations.
class RatQK {
public:
    RatQK() : num_(), den_(1) {}
    RatQK(long v) : num_(v), den_(1) {}  // NOLINT: implicit by design
    explicit RatQK(const Int& v) : num_(v), den_(1) {}
    explicit RatQK(PolyQK p) : num_(std::move(p)), den_(1) {}
    RatQK(PolyQK num, PolyQK den);  // reduces to canonical form

    static RatQK q() { return RatQK(PolyQK::var_q()); }
    static RatQK k() { return RatQK(PolyQK::var_k()); }
    /// q^a k^b with integer coefficient c (a,b may be negative)
    static RatQK monomial(const Int& c, int a, int b);

    const PolyQK& num() const { return num_; }
    const PolyQK& den() const { return den_; }

    bool is_zero() const { return num_.is_zero(); }
    bool is_one() const { return num_.is_one() && den_.is_one(); }
    /// c * q^a k^b form; fills outputs when true
    bool as_monomial(Int& c, int& a, int& b) const;

    friend RatQK operator+(const RatQK& a, const RatQK& b);
    friend RatQK operator-(const RatQK& a, const RatQK& b);
    friend RatQK operator*(const RatQK& a, const RatQK& b);
    friend RatQK operator/(const RatQK& a, const RatQK& b);
    RatQK operator-() const;
    RatQK inverse() const;
    RatQK pow(long e) const;

    RatQK& operator+=(const RatQK& o) { *this = *this + o; return *this; }
    RatQK& operator-=(const RatQK& o) { *this = *this - o; return *this; }
    RatQK& operator*=(const RatQK& o) { *this = *this * o; return *this; }
    RatQK& operator/=(const RatQK& o) { *this = *this / o; return *this; }

    bool operator==(const RatQK& o) const {
        return num_ == o.num_ && den_ == o.den_;
    }
    bool operator!=(const RatQK& o) const { return !(*this == o); }

    std::complex<double> eval(std::complex<double> q,
                              std::complex<double> k) const;

    std::string str() const;  // "P" or "(P)/(Q)", round-trips via parse
    static RatQK parse(const std::string& s);

private:
    PolyQK num_, den_;
    void reduce();
};

inline RatQK operator*(long a, const RatQK& b) { return RatQK(a) * b; }

}  // namespace bqkz

namespace Eigen {

template <>
struct NumTraits<bqkz::RatQK> : GenericNumTraits<bqkz::RatQK> {
    typedef bqkz::RatQK Real;
    typedef bqkz::RatQK NonInteger;
    typedef bqkz::RatQK Nested;
    typedef bqkz::RatQK Literal;
    enum {
        IsComplex = 0,
        IsInteger = 0,
        IsSigned = 1,
        RequireInitialization = 1,
        ReadCost = 2,
        AddCost = 20,
        MulCost = 40
    };
    static inline Real epsilon() { return bqkz::RatQK(0); }
    static inline Real dummy_precision() { return bqkz::RatQK(0); }
    static inline int digits10() { return 0; }
};

}  // namespace Eigen
