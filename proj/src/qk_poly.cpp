#include "bqkz/qk_poly.hpp"

#include <algorithm>
#include <cctype>
#include <cmath>
#include <sstream>
#include <stdexcept>

namespace bqkz {

namespace {

// grlex with q < k: higher total degree first, then higher k-exponent.
inline bool mono_less(int aq, int ak, int bq, int bk) {
    int da = aq + ak, db = bq + bk;
    if (da != db) return da < db;
    return ak < bk;
}

Int igcd(const Int& a, const Int& b) {
    Int r;
    mpz_gcd(r.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    return r;
}

// ---- univariate Z[q] helpers for the bivariate gcd ----
// dense, up[i] = coefficient of q^i, trailing zeros trimmed
using UP = std::vector<Int>;

void up_trim(UP& p) {
    while (!p.empty() && p.back() == 0) p.pop_back();
}

UP up_mul(const UP& a, const UP& b) {
    if (a.empty() || b.empty()) return {};
    UP r(a.size() + b.size() - 1, Int(0));
    for (size_t i = 0; i < a.size(); ++i)
        for (size_t j = 0; j < b.size(); ++j)
            r[i + j] += a[i] * b[j];
    up_trim(r);
    return r;
}

UP up_scale(const UP& a, const Int& c) {
    if (c == 0) return {};
    UP r = a;
    for (auto& x : r) x *= c;
    return r;
}

UP up_sub(const UP& a, const UP& b) {
    UP r = a;
    if (b.size() > r.size()) r.resize(b.size(), Int(0));
    for (size_t i = 0; i < b.size(); ++i) r[i] -= b[i];
    up_trim(r);
    return r;
}

Int up_content(const UP& a) {
    Int g(0);
    for (const auto& x : a) {
        g = igcd(g, x);
        if (g == 1) break;
    }
    return g;
}

bool up_divexact(const UP& n, const UP& d, UP& quot) {
    if (d.empty()) throw std::runtime_error("UP division by zero");
    UP r = n;
    UP q(r.size() > d.size() ? r.size() - d.size() + 1 : 1, Int(0));
    while (!r.empty()) {
        if (r.size() < d.size()) return false;
        Int c;
        mpz_tdiv_qr(c.get_mpz_t(), Int().get_mpz_t(), r.back().get_mpz_t(),
                    d.back().get_mpz_t());
        if (c * d.back() != r.back()) return false;
        size_t sh = r.size() - d.size();
        q[sh] = c;
        for (size_t i = 0; i < d.size(); ++i) r[sh + i] -= c * d[i];
        up_trim(r);
    }
    up_trim(q);
    quot = q;
    return true;
}

// primitive gcd in Z[q] via primitive PRS
UP up_gcd(UP a, UP b) {
    up_trim(a);
    up_trim(b);
    if (a.empty()) return b;
    if (b.empty()) return a;
    Int ca = up_content(a), cb = up_content(b), cg = igcd(ca, cb);
    for (auto& x : a) x /= ca;
    for (auto& x : b) x /= cb;
    while (!b.empty()) {
        // pseudo-remainder of a by b
        UP r = a;
        while (r.size() >= b.size() && !r.empty()) {
            Int c = r.back();
            size_t sh = r.size() - b.size();
            // lc(b)*r - c*q^sh*b
            for (auto& x : r) x *= b.back();
            for (size_t i = 0; i < b.size(); ++i) r[sh + i] -= c * b[i];
            up_trim(r);
        }
        a = std::move(b);
        Int cr = up_content(r);
        if (cr != 0)
            for (auto& x : r) x /= cr;
        b = std::move(r);
    }
    if (!a.empty() && a.back() < 0)
        for (auto& x : a) x = -x;
    for (auto& x : a) x *= cg;
    return a;
}

// ---- bivariate recursive view: poly in k with UP coefficients ----
// rec[j] = coefficient of k^j in Z[q]
using Rec = std::vector<UP>;

void rec_trim(Rec& p) {
    while (!p.empty() && p.back().empty()) p.pop_back();
}

Rec to_rec(const PolyQK& p) {
    Rec r;
    for (const auto& t : p.terms()) {
        if ((size_t)t.ek >= r.size()) r.resize(t.ek + 1);
        UP& u = r[t.ek];
        if ((size_t)t.eq >= u.size()) u.resize(t.eq + 1, Int(0));
        u[t.eq] = t.c;
    }
    for (auto& u : r) up_trim(u);
    return r;
}

PolyQK from_rec(const Rec& r) {
    std::vector<PolyQK::Term> ts;
    for (size_t ek = 0; ek < r.size(); ++ek)
        for (size_t eq = 0; eq < r[ek].size(); ++eq)
            if (r[ek][eq] != 0)
                ts.push_back({(int32_t)eq, (int32_t)ek, r[ek][eq]});
    return PolyQK::from_terms(std::move(ts));
}

UP rec_content(const Rec& p) {
    UP g;
    for (const auto& u : p) {
        g = up_gcd(g, u);
        if (g.size() == 1 && (g[0] == 1 || g[0] == -1)) break;
    }
    return g;
}

Rec rec_divexact_up(const Rec& p, const UP& d) {
    Rec r(p.size());
    for (size_t i = 0; i < p.size(); ++i) {
        if (p[i].empty()) continue;
        if (!up_divexact(p[i], d, r[i]))
            throw std::runtime_error("rec_divexact_up: not divisible");
    }
    return r;
}

Rec rec_mul_up(const Rec& p, const UP& d) {
    Rec r(p.size());
    for (size_t i = 0; i < p.size(); ++i) r[i] = up_mul(p[i], d);
    return r;
}

// pseudo-remainder in (Z[q])[k]
Rec rec_prem(Rec a, const Rec& b) {
    rec_trim(a);
    if (b.empty()) throw std::runtime_error("rec_prem by zero");
    const UP& lb = b.back();
    while (a.size() >= b.size() && !a.empty()) {
        UP la = a.back();
        size_t sh = a.size() - b.size();
        // r = lb*a - la*k^sh*b ; degree in k drops by at least one
        Rec r(a.size(), UP{});
        for (size_t i = 0; i + 1 < a.size(); ++i) r[i] = up_mul(a[i], lb);
        for (size_t i = 0; i + 1 < b.size(); ++i)
            r[sh + i] = up_sub(r[sh + i], up_mul(la, b[i]));
        rec_trim(r);
        a = std::move(r);
    }
    return a;
}

}  // namespace

PolyQK::PolyQK(long v) {
    if (v != 0) terms_.push_back({0, 0, Int(v)});
}

PolyQK::PolyQK(const Int& v) {
    if (v != 0) terms_.push_back({0, 0, v});
}

PolyQK PolyQK::monomial(const Int& c, int eq, int ek) {
    PolyQK p;
    if (c != 0) p.terms_.push_back({(int32_t)eq, (int32_t)ek, c});
    return p;
}

bool PolyQK::is_one() const {
    return terms_.size() == 1 && terms_[0].eq == 0 && terms_[0].ek == 0 &&
           terms_[0].c == 1;
}

bool PolyQK::is_constant() const {
    return terms_.empty() ||
           (terms_.size() == 1 && terms_[0].eq == 0 && terms_[0].ek == 0);
}

int PolyQK::total_degree() const {
    if (terms_.empty()) return -1;
    return terms_.front().eq + terms_.front().ek;
}

void PolyQK::normalize() {
    std::sort(terms_.begin(), terms_.end(), [](const Term& a, const Term& b) {
        return mono_less(b.eq, b.ek, a.eq, a.ek);  // descending
    });
    std::vector<Term> out;
    out.reserve(terms_.size());
    for (auto& t : terms_) {
        if (!out.empty() && out.back().eq == t.eq && out.back().ek == t.ek)
            out.back().c += t.c;
        else
            out.push_back(std::move(t));
        if (!out.empty() && out.back().c == 0) out.pop_back();
    }
    terms_ = std::move(out);
}

PolyQK PolyQK::from_terms(std::vector<Term> ts) {
    PolyQK p;
    p.terms_ = std::move(ts);
    p.normalize();
    return p;
}

PolyQK operator+(const PolyQK& a, const PolyQK& b) {
    // merge of two sorted term lists
    std::vector<PolyQK::Term> ts;
    ts.reserve(a.terms_.size() + b.terms_.size());
    size_t i = 0, j = 0;
    while (i < a.terms_.size() || j < b.terms_.size()) {
        if (j == b.terms_.size() ||
            (i < a.terms_.size() &&
             mono_less(b.terms_[j].eq, b.terms_[j].ek, a.terms_[i].eq,
                       a.terms_[i].ek))) {
            ts.push_back(a.terms_[i++]);
        } else if (i == a.terms_.size() ||
                   mono_less(a.terms_[i].eq, a.terms_[i].ek, b.terms_[j].eq,
                             b.terms_[j].ek)) {
            ts.push_back(b.terms_[j++]);
        } else {
            PolyQK::Term t = a.terms_[i++];
            t.c += b.terms_[j++].c;
            if (t.c != 0) ts.push_back(std::move(t));
        }
    }
    PolyQK r;
    r.terms_ = std::move(ts);
    return r;
}

PolyQK PolyQK::operator-() const {
    PolyQK r = *this;
    for (auto& t : r.terms_) t.c = -t.c;
    return r;
}

PolyQK operator-(const PolyQK& a, const PolyQK& b) { return a + (-b); }

PolyQK operator*(const PolyQK& a, const PolyQK& b) {
    if (a.is_zero() || b.is_zero()) return PolyQK();
    std::vector<PolyQK::Term> ts;
    ts.reserve(a.terms_.size() * b.terms_.size());
    for (const auto& ta : a.terms_)
        for (const auto& tb : b.terms_)
            ts.push_back({ta.eq + tb.eq, ta.ek + tb.ek, ta.c * tb.c});
    return PolyQK::from_terms(std::move(ts));
}

bool PolyQK::operator==(const PolyQK& o) const {
    if (terms_.size() != o.terms_.size()) return false;
    for (size_t i = 0; i < terms_.size(); ++i)
        if (terms_[i].eq != o.terms_[i].eq || terms_[i].ek != o.terms_[i].ek ||
            terms_[i].c != o.terms_[i].c)
            return false;
    return true;
}

Int PolyQK::content() const {
    Int g(0);
    for (const auto& t : terms_) {
        g = igcd(g, t.c);
        if (g == 1) break;
    }
    return g;
}

void PolyQK::min_exponents(int& eq, int& ek) const {
    eq = ek = 0;
    bool first = true;
    for (const auto& t : terms_) {
        if (first) {
            eq = t.eq;
            ek = t.ek;
            first = false;
        } else {
            eq = std::min(eq, (int)t.eq);
            ek = std::min(ek, (int)t.ek);
        }
    }
}

bool PolyQK::div_exact(const PolyQK& num, const PolyQK& den, PolyQK& quot) {
    if (den.is_zero()) throw std::runtime_error("PolyQK division by zero");
    if (num.is_zero()) {
        quot = PolyQK();
        return true;
    }
    PolyQK r = num;
    std::vector<Term> q;
    while (!r.is_zero()) {
        const Term& lr = r.leading();
        const Term& ld = den.leading();
        if (lr.eq < ld.eq || lr.ek < ld.ek) return false;
        Int c;
        mpz_tdiv_qr(c.get_mpz_t(), Int().get_mpz_t(), lr.c.get_mpz_t(),
                    ld.c.get_mpz_t());
        if (c * ld.c != lr.c) return false;
        Term t{lr.eq - ld.eq, lr.ek - ld.ek, c};
        q.push_back(t);
        r = r - den * monomial(t.c, t.eq, t.ek);
    }
    quot = from_terms(std::move(q));
    return true;
}

std::complex<double> PolyQK::eval(std::complex<double> q,
                                  std::complex<double> k) const {
    std::complex<double> s = 0;
    for (const auto& t : terms_)
        s += mpz_get_d(t.c.get_mpz_t()) * std::pow(q, t.eq) * std::pow(k, t.ek);
    return s;
}

PolyQK gcd(const PolyQK& a, const PolyQK& b) {
    if (a.is_zero()) return b;
    if (b.is_zero()) return a;

    // common monomial + integer content come out first
    int aq, ak, bq, bk;
    a.min_exponents(aq, ak);
    b.min_exponents(bq, bk);
    int mq = std::min(aq, bq), mk = std::min(ak, bk);
    Int cg = igcd(a.content(), b.content());

    PolyQK pa, pb;
    bool ok = PolyQK::div_exact(a, PolyQK::monomial(a.content(), aq, ak), pa) &&
              PolyQK::div_exact(b, PolyQK::monomial(b.content(), bq, bk), pb);
    if (!ok) throw std::logic_error("gcd: content division failed");

    if (pa.is_one() || pb.is_one() || a.is_monomial() || b.is_monomial())
        return PolyQK::monomial(cg, mq, mk);
    if (pa == pb) return PolyQK::monomial(cg, mq, mk) * pa;

    // try cheap exact divisions before the PRS
    PolyQK q;
    if (PolyQK::div_exact(pa, pb, q)) return PolyQK::monomial(cg, mq, mk) * pb;
    if (PolyQK::div_exact(pb, pa, q)) return PolyQK::monomial(cg, mq, mk) * pa;

    // primitive PRS in (Z[q])[k]
    Rec ra = to_rec(pa), rb = to_rec(pb);
    UP ca = rec_content(ra), cb = rec_content(rb);
    UP cc = up_gcd(ca, cb);
    ra = rec_divexact_up(ra, ca);
    rb = rec_divexact_up(rb, cb);
    if (ra.size() < rb.size()) std::swap(ra, rb);
    while (!rb.empty()) {
        Rec r = rec_prem(ra, rb);
        ra = std::move(rb);
        if (!r.empty()) {
            UP cr = rec_content(r);
            r = rec_divexact_up(r, cr);
        }
        rb = std::move(r);
    }
    // ra is gcd of the primitive parts up to a unit; restore contents
    ra = rec_mul_up(ra, cc);
    PolyQK g = from_rec(ra);
    // normalize sign: positive leading coefficient, integer content folded in
    Int gc = g.content();
    PolyQK gp;
    PolyQK::div_exact(g, PolyQK(g.leading().c < 0 ? -gc : gc), gp);
    return PolyQK::monomial(cg, mq, mk) * gp;
}

std::string PolyQK::str() const {
    if (terms_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& t : terms_) {
        Int c = t.c;
        if (first) {
            if (c < 0) {
                os << "-";
                c = -c;
            }
            first = false;
        } else {
            if (c < 0) {
                os << " - ";
                c = -c;
            } else {
                os << " + ";
            }
        }
        bool has_mono = t.eq != 0 || t.ek != 0;
        if (!has_mono || c != 1) {
            os << c.get_str();
            if (has_mono) os << "*";
        }
        if (t.eq != 0) {
            os << "q";
            if (t.eq != 1) os << "^" << t.eq;
            if (t.ek != 0) os << "*";
        }
        if (t.ek != 0) {
            os << "k";
            if (t.ek != 1) os << "^" << t.ek;
        }
    }
    return os.str();
}

namespace {

struct Parser {
    const std::string& s;
    size_t i = 0;
    explicit Parser(const std::string& str) : s(str) {}

    void skip() {
        while (i < s.size() && std::isspace((unsigned char)s[i])) ++i;
    }
    bool peek(char c) {
        skip();
        return i < s.size() && s[i] == c;
    }
    bool eat(char c) {
        if (peek(c)) {
            ++i;
            return true;
        }
        return false;
    }
    [[noreturn]] void fail(const std::string& msg) {
        throw std::runtime_error("PolyQK parse error at " + std::to_string(i) +
                                 ": " + msg);
    }

    Int number() {
        skip();
        size_t j = i;
        while (i < s.size() && std::isdigit((unsigned char)s[i])) ++i;
        if (j == i) fail("expected number");
        return Int(s.substr(j, i - j));
    }

    int exponent() {
        if (eat('^')) {
            bool neg = eat('-');
            Int n = number();
            int e = (int)n.get_si();
            return neg ? -e : e;
        }
        return 1;
    }

    // factor := number | q[^e] | k[^e]
    // term   := factor (* factor)*
    PolyQK term() {
        PolyQK r(1);
        bool one = true;
        do {
            skip();
            if (i < s.size() && s[i] == 'q') {
                ++i;
                int e = exponent();
                r *= PolyQK::monomial(Int(1), e, 0);
            } else if (i < s.size() && s[i] == 'k') {
                ++i;
                int e = exponent();
                r *= PolyQK::monomial(Int(1), 0, e);
            } else {
                r *= PolyQK(number());
            }
            one = false;
        } while (eat('*'));
        if (one) fail("empty term");
        return r;
    }

    PolyQK poly() {
        PolyQK r;
        bool neg = eat('-');
        r = term();
        if (neg) r = -r;
        while (true) {
            skip();
            if (eat('+'))
                r += term();
            else if (eat('-'))
                r -= term();
            else
                break;
        }
        return r;
    }
};

}  // namespace

PolyQK PolyQK::parse(const std::string& s) {
    Parser p(s);
    PolyQK r = p.poly();
    p.skip();
    if (p.i != s.size()) p.fail("trailing characters");
    return r;
}

}  // namespace bqkz
