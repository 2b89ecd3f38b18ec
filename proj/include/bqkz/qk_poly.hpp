#pragma once

#include <gmpxx.h>
#include <complex>
#include <cstdint>
#include <string>
#include <vector>

namespace bqkz {

using Int = mpz_class;

/// Sparse polynomial in Z[q,k]. Terms are kept sorted in descending
/// graded-lex order with q < k (total degree first, then k-exponent).
class PolyQK {
public:
    struct Term {
        int32_t eq = 0;  // exponent of q
        int32_t ek = 0;  // exponent of k
        Int c;
    };

    PolyQK() = default;
    explicit PolyQK(long v);
    explicit PolyQK(const Int& v);
    static PolyQK monomial(const Int& c, int eq, int ek);
    static PolyQK var_q() { return monomial(Int(1), 1, 0); }
    static PolyQK var_k() { return monomial(Int(1), 0, 1); }

    bool is_zero() const { return terms_.empty(); }
    bool is_one() const;
    bool is_constant() const;
    bool is_monomial() const { return terms_.size() == 1; }
    int total_degree() const;
    size_t n_terms() const { return terms_.size(); }
    const std::vector<Term>& terms() const { return terms_; }
    const Term& leading() const { return terms_.front(); }

    friend PolyQK operator+(const PolyQK& a, const PolyQK& b);
    friend PolyQK operator-(const PolyQK& a, const PolyQK& b);
    friend PolyQK operator*(const PolyQK& a, const PolyQK& b);
    PolyQK operator-() const;
    bool operator==(const PolyQK& o) const;
    bool operator!=(const PolyQK& o) const { return !(*this == o); }

    PolyQK& operator+=(const PolyQK& o) { *this = *this + o; return *this; }
    PolyQK& operator-=(const PolyQK& o) { *this = *this - o; return *this; }
    PolyQK& operator*=(const PolyQK& o) { *this = *this * o; return *this; }

    // Integer content (gcd of coefficients, nonnegative) and min exponents.
    Int content() const;
    void min_exponents(int& eq, int& ek) const;

    // Exact division; returns false and leaves quot untouched if not divisible.
    static bool div_exact(const PolyQK& num, const PolyQK& den, PolyQK& quot);

    std::complex<double> eval(std::complex<double> q, std::complex<double> k) const;

    std::string str() const;            // canonical text, round-trips via parse
    static PolyQK parse(const std::string& s);

    // internal: terms must end up sorted/merged; used by builders
    static PolyQK from_terms(std::vector<Term> ts);

private:
    std::vector<Term> terms_;
    void normalize();
};

PolyQK gcd(const PolyQK& a, const PolyQK& b);

}  // namespace bqkz
