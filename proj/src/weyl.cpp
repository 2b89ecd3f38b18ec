#include "bqkz/weyl.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace bqkz {

Permutation::Permutation(int n) : img_(n) {
    std::iota(img_.begin(), img_.end(), 1);
}

Permutation::Permutation(std::vector<int> image) : img_(std::move(image)) {
    std::vector<bool> seen(img_.size(), false);
    for (int v : img_) {
        if (v < 1 || v > (int)img_.size() || seen[v - 1])
            throw std::invalid_argument("Permutation: not a bijection");
        seen[v - 1] = true;
    }
}

Permutation Permutation::inverse() const {
    std::vector<int> inv(img_.size());
    for (int i = 1; i <= n(); ++i) inv[img_[i - 1] - 1] = i;
    return Permutation(std::move(inv));
}

Permutation operator*(const Permutation& a, const Permutation& b) {
    if (a.n() != b.n()) throw std::invalid_argument("Permutation: size mismatch");
    std::vector<int> img(a.n());
    for (int i = 1; i <= a.n(); ++i) img[i - 1] = a(b(i));
    return Permutation(std::move(img));
}

bool Permutation::is_identity() const {
    for (int i = 1; i <= n(); ++i)
        if (img_[i - 1] != i) return false;
    return true;
}

int Permutation::length() const {
    int l = 0;
    for (int i = 0; i < n(); ++i)
        for (int j = i + 1; j < n(); ++j)
            if (img_[i] > img_[j]) ++l;
    return l;
}

std::vector<int> Permutation::reduced_word() const {
    std::vector<int> letters;
    Permutation u = *this;
    while (!u.is_identity()) {
        for (int i = 1; i < n(); ++i) {
            if (u(i) > u(i + 1)) {
                u = u * transposition(n(), i);
                letters.push_back(i);
                break;
            }
        }
    }
    std::reverse(letters.begin(), letters.end());
    return letters;
}

Permutation Permutation::transposition(int n, int i) {
    if (i < 1 || i >= n) throw std::invalid_argument("s_i: index out of range");
    Permutation p(n);
    std::swap(p.img_[i - 1], p.img_[i]);
    return p;
}

Permutation Permutation::longest(int n) {
    std::vector<int> img(n);
    for (int i = 0; i < n; ++i) img[i] = n - i;
    return Permutation(std::move(img));
}

Permutation Permutation::rotation(int n) {
    std::vector<int> img(n);
    for (int i = 1; i < n; ++i) img[i - 1] = i + 1;
    img[n - 1] = 1;
    return Permutation(std::move(img));
}

ExpVec Permutation::act_weight(const ExpVec& mu) const {
    Permutation inv = inverse();
    ExpVec r(mu.size());
    for (int i = 1; i <= n(); ++i) r[i - 1] = mu[inv(i) - 1];
    return r;
}

AffElt operator*(const AffElt& a, const AffElt& b) {
    ExpVec lam = a.lam;
    ExpVec bl = a.perm.act_weight(b.lam);
    for (size_t i = 0; i < lam.size(); ++i) lam[i] += bl[i];
    return AffElt(std::move(lam), a.perm * b.perm);
}

AffElt AffElt::inverse() const {
    Permutation pinv = perm.inverse();
    ExpVec l = pinv.act_weight(lam);
    for (auto& x : l) x = -x;
    return AffElt(std::move(l), std::move(pinv));
}

AffElt AffElt::diamond() const {
    ExpVec l = lam;
    for (auto& x : l) x = -x;
    return AffElt(std::move(l), perm);
}

int AffElt::length() const {
    // l(t_lam u) = sum_{alpha>0, u^-1 alpha>0} |<lam,alpha>|
    //            + sum_{alpha>0, u^-1 alpha<0} |<lam,alpha> - 1|
    const int N = n();
    Permutation uinv = perm.inverse();
    int l = 0;
    for (int i = 1; i <= N; ++i)
        for (int j = i + 1; j <= N; ++j) {
            int pairing = lam[i - 1] - lam[j - 1];  // <lam, e_i - e_j>
            bool neg = uinv(i) > uinv(j);           // u^-1(alpha) < 0
            l += neg ? std::abs(pairing - 1) : std::abs(pairing);
        }
    return l;
}

AffElt AffElt::translation(ExpVec lam) {
    int n = (int)lam.size();
    return AffElt(std::move(lam), Permutation(n));
}

AffElt AffElt::from_perm(Permutation u) {
    int n = u.n();
    return AffElt(ExpVec(n, 0), std::move(u));
}

AffElt AffElt::s(int n, int i) {
    if (i == 0) {
        ExpVec l(n, 0);
        l[0] = 1;
        l[n - 1] = -1;
        std::vector<int> img(n);
        std::iota(img.begin(), img.end(), 1);
        std::swap(img[0], img[n - 1]);
        return AffElt(std::move(l), Permutation(std::move(img)));
    }
    return from_perm(Permutation::transposition(n, i));
}

AffElt AffElt::pi(int n) {
    ExpVec l(n, 0);
    l[0] = 1;
    return AffElt(std::move(l), Permutation::rotation(n));
}

AffElt AffElt::eps(int n, int j) {
    ExpVec l(n, 0);
    l[j - 1] = 1;
    return translation(std::move(l));
}

AffElt AffElt::varpi(int n, int i) {
    ExpVec l(n, 0);
    for (int j = 0; j < i; ++j) l[j] = 1;
    return translation(std::move(l));
}

AffElt Word::eval() const {
    AffElt e = AffElt::identity(n);
    AffElt p = AffElt::pi(n);
    AffElt pinv = p.inverse();
    for (int m = 0; m < std::abs(pi_power); ++m)
        e = e * (pi_power > 0 ? p : pinv);
    for (int i : letters) e = e * AffElt::s(n, i);
    return e;
}

std::string Word::str() const {
    std::ostringstream os;
    bool any = false;
    if (pi_power != 0) {
        os << "pi";
        if (pi_power != 1) os << "^" << pi_power;
        any = true;
    }
    for (int i : letters) {
        if (any) os << " ";
        os << "s" << i;
        any = true;
    }
    if (!any) return "e";
    return os.str();
}

Word Word::parse(int n, const std::string& s) {
    Word w;
    w.n = n;
    std::istringstream is(s);
    std::string tok;
    while (is >> tok) {
        if (tok == "e") continue;
        if (tok.rfind("pi", 0) == 0) {
            if (tok.size() == 2)
                w.pi_power += 1;
            else if (tok[2] == '^')
                w.pi_power += std::stoi(tok.substr(3));
            else
                throw std::invalid_argument("Word::parse: bad token " + tok);
        } else if (tok[0] == 's') {
            w.letters.push_back(std::stoi(tok.substr(1)));
        } else {
            throw std::invalid_argument("Word::parse: bad token " + tok);
        }
    }
    return w;
}

std::vector<int> sigma_power_word(int n, int i) {
    // sigma^i = (s_i...s_{n-1})(s_{i-1}...s_{n-2})...(s_1...s_{n-i})
    std::vector<int> w;
    for (int b = 0; b < i; ++b)
        for (int l = i - b; l <= n - 1 - b; ++l) w.push_back(l);
    return w;
}

namespace {

// Move all pi factors of a token word to the front: s_j pi^e = pi^e s_{j-e}.
Word normalize_tokens(int n, const std::vector<std::pair<int, int>>& toks) {
    // toks: (kind, value) with kind 0 = letter s_value, kind 1 = pi^value
    Word w;
    w.n = n;
    int total = 0;
    for (auto& [kind, v] : toks)
        if (kind == 1) total += v;
    int after = total;
    for (auto& [kind, v] : toks) {
        if (kind == 1) {
            after -= v;
        } else {
            int idx = ((v - after) % n + n) % n;
            w.letters.push_back(idx);
        }
    }
    w.pi_power = total;
    return w;
}

}  // namespace

Word reduced_word(const AffElt& e) {
    const int n = e.n();
    bool pure_perm = true;
    for (int x : e.lam) pure_perm = pure_perm && x == 0;
    if (pure_perm) {
        Word w;
        w.n = n;
        w.letters = e.perm.reduced_word();
        return w;
    }
    if (e.perm.is_identity()) {
        // eps_j = pi s_{j-2}...s_1 s_0 s_{n-1}...s_j  (leading-pi form)
        for (int j = 1; j <= n; ++j) {
            if (e == AffElt::eps(n, j)) {
                Word w;
                w.n = n;
                w.pi_power = 1;
                for (int l = j - 2; l >= 0; --l) w.letters.push_back(l);
                for (int l = n - 1; l >= j; --l) w.letters.push_back(l);
                return w;
            }
        }
        // varpi_i = pi^i sigma^{-i}
        for (int i = 1; i <= n; ++i) {
            if (e == AffElt::varpi(n, i)) {
                Word w;
                w.n = n;
                w.pi_power = i;
                std::vector<int> si = sigma_power_word(n, i);
                w.letters.assign(si.rbegin(), si.rend());
                return w;
            }
        }
    }
    // general case: factor the translation over the varpi basis, then the
    // finite part; normalize pi factors to the front
    std::vector<std::pair<int, int>> toks;
    for (int i = 1; i <= n; ++i) {
        int c = i < n ? e.lam[i - 1] - e.lam[i] : e.lam[n - 1];
        if (c == 0) continue;
        std::vector<int> si = sigma_power_word(n, i);
        for (int rep = 0; rep < std::abs(c); ++rep) {
            if (c > 0) {
                toks.push_back({1, i});
                for (auto it = si.rbegin(); it != si.rend(); ++it)
                    toks.push_back({0, *it});
            } else {
                for (int l : si) toks.push_back({0, l});
                toks.push_back({1, -i});
            }
        }
    }
    for (int l : e.perm.reduced_word()) toks.push_back({0, l});
    Word w = normalize_tokens(n, toks);
    if (w.eval() != e)
        throw std::logic_error("reduced_word: normalization failed");
    return w;
}

bool is_dominant(const ExpVec& lam) {
    for (size_t i = 0; i + 1 < lam.size(); ++i)
        if (lam[i] < lam[i + 1]) return false;
    return true;
}

bool dominance_leq(const ExpVec& lam, const ExpVec& mu) {
    if (lam.size() != mu.size())
        throw std::invalid_argument("dominance_leq: size mismatch");
    if (!is_dominant(lam) || !is_dominant(mu))
        throw std::invalid_argument("dominance_leq: arguments must be dominant");
    long sl = 0, sm = 0;
    for (size_t i = 0; i < lam.size(); ++i) {
        sl += lam[i];
        sm += mu[i];
    }
    if (sl != sm)
        throw std::invalid_argument("dominance_leq: unequal coordinate sums");
    long part = 0;
    for (size_t i = 0; i + 1 < lam.size(); ++i) {
        part += mu[i] - lam[i];
        if (part < 0) return false;
    }
    return true;
}

ExpVec delta_vec(int n) {
    ExpVec d(n);
    for (int i = 0; i < n; ++i) d[i] = n - 1 - 2 * i;
    return d;
}

}  // namespace bqkz
