#include "bqkz/ratqk.hpp"

#include <sstream>

namespace bqkz {

RatQK::RatQK(PolyQK num, PolyQK den) : num_(std::move(num)), den_(std::move(den)) {
    if (den_.is_zero()) throw DivideByZeroError();
    reduce();
}

void RatQK::reduce() {
    if (num_.is_zero()) {
        den_ = PolyQK(1);
        return;
    }
    if (!den_.is_one()) {
        PolyQK g = gcd(num_, den_);
        PolyQK n, d;
        if (!PolyQK::div_exact(num_, g, n) || !PolyQK::div_exact(den_, g, d))
            throw std::logic_error("RatQK::reduce: gcd does not divide");
        num_ = std::move(n);
        den_ = std::move(d);
    }
    if (den_.leading().c < 0) {
        num_ = -num_;
        den_ = -den_;
    }
}

RatQK RatQK::monomial(const Int& c, int a, int b) {
    PolyQK n = PolyQK::monomial(c, a > 0 ? a : 0, b > 0 ? b : 0);
    PolyQK d = PolyQK::monomial(Int(1), a < 0 ? -a : 0, b < 0 ? -b : 0);
    return RatQK(std::move(n), std::move(d));
}

bool RatQK::as_monomial(Int& c, int& a, int& b) const {
    if (!num_.is_monomial() || !den_.is_monomial()) return false;
    if (den_.leading().c != 1) return false;
    c = num_.leading().c;
    a = num_.leading().eq - den_.leading().eq;
    b = num_.leading().ek - den_.leading().ek;
    return true;
}

RatQK operator+(const RatQK& a, const RatQK& b) {
    if (a.is_zero()) return b;
    if (b.is_zero()) return a;
    PolyQK g = gcd(a.den_, b.den_);
    PolyQK da, db;
    PolyQK::div_exact(a.den_, g, da);
    PolyQK::div_exact(b.den_, g, db);
    return RatQK(a.num_ * db + b.num_ * da, a.den_ * db);
}

RatQK operator-(const RatQK& a, const RatQK& b) { return a + (-b); }

RatQK RatQK::operator-() const {
    RatQK r = *this;
    r.num_ = -r.num_;
    return r;
}

RatQK operator*(const RatQK& a, const RatQK& b) {
    if (a.is_zero() || b.is_zero()) return RatQK();
    // cross-reduce first to keep the final gcd trivial
    PolyQK g1 = gcd(a.num_, b.den_), g2 = gcd(b.num_, a.den_);
    PolyQK an, bn, ad, bd;
    PolyQK::div_exact(a.num_, g1, an);
    PolyQK::div_exact(b.den_, g1, bd);
    PolyQK::div_exact(b.num_, g2, bn);
    PolyQK::div_exact(a.den_, g2, ad);
    RatQK r;
    r.num_ = an * bn;
    r.den_ = ad * bd;
    if (r.den_.leading().c < 0) {
        r.num_ = -r.num_;
        r.den_ = -r.den_;
    }
    return r;
}

RatQK RatQK::inverse() const {
    if (is_zero()) throw DivideByZeroError();
    RatQK r;
    r.num_ = den_;
    r.den_ = num_;
    if (r.den_.leading().c < 0) {
        r.num_ = -r.num_;
        r.den_ = -r.den_;
    }
    return r;
}

RatQK operator/(const RatQK& a, const RatQK& b) { return a * b.inverse(); }

RatQK RatQK::pow(long e) const {
    if (e == 0) return RatQK(1);
    RatQK base = e < 0 ? inverse() : *this;
    long n = e < 0 ? -e : e;
    RatQK r(1);
    while (n > 0) {
        if (n & 1) r *= base;
        base *= base;
        n >>= 1;
    }
    return r;
}

std::complex<double> RatQK::eval(std::complex<double> q,
                                 std::complex<double> k) const {
    return num_.eval(q, k) / den_.eval(q, k);
}

std::string RatQK::str() const {
    if (den_.is_one()) return num_.str();
    std::ostringstream os;
    os << "(" << num_.str() << ")/(" << den_.str() << ")";
    return os.str();
}

RatQK RatQK::parse(const std::string& s) {
    // "(P)/(Q)" or "P"
    size_t depth = 0;
    for (size_t i = 0; i < s.size(); ++i) {
        char c = s[i];
        if (c == '(') ++depth;
        if (c == ')') --depth;
        if (c == '/' && depth == 0) {
            auto strip = [](std::string t) {
                size_t a = t.find_first_not_of(" \t");
                size_t b = t.find_last_not_of(" \t");
                t = t.substr(a, b - a + 1);
                if (t.size() >= 2 && t.front() == '(' && t.back() == ')')
                    t = t.substr(1, t.size() - 2);
                return t;
            };
            return RatQK(PolyQK::parse(strip(s.substr(0, i))),
                         PolyQK::parse(strip(s.substr(i + 1))));
        }
    }
    return RatQK(PolyQK::parse(s));
}

}  // namespace bqkz
