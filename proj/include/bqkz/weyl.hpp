#pragma once

#include <string>
#include <vector>

#include "bqkz/laurent.hpp"

namespace bqkz {

/// Permutation of {1..n}, stored by its image array (1-based values).
class Permutation {
public:
    explicit Permutation(int n);
    explicit Permutation(std::vector<int> image);

    int n() const { return (int)img_.size(); }
    int operator()(int i) const { return img_[i - 1]; }  // 1-based
    const std::vector<int>& image() const { return img_; }

    Permutation inverse() const;
    friend Permutation operator*(const Permutation& a, const Permutation& b);
    bool operator==(const Permutation& o) const { return img_ == o.img_; }
    bool operator!=(const Permutation& o) const { return !(*this == o); }
    bool operator<(const Permutation& o) const { return img_ < o.img_; }

    bool is_identity() const;
    int length() const;  // number of inversions
    std::vector<int> reduced_word() const;  // letters in 1..n-1

    static Permutation transposition(int n, int i);  // s_i, 1 <= i < n
    static Permutation longest(int n);               // w0: i -> n+1-i
    static Permutation rotation(int n);              // sigma = s_1...s_{n-1}

    /// coordinate action (w t)_i = t_{w^{-1}(i)}
    template <class T>
    std::vector<T> act(const std::vector<T>& t) const {
        Permutation inv = inverse();
        std::vector<T> r(t.size());
        for (int i = 1; i <= n(); ++i) r[i - 1] = t[inv(i) - 1];
        return r;
    }
    /// weight action w(mu), mu an integer vector
    ExpVec act_weight(const ExpVec& mu) const;

private:
    std::vector<int> img_;
};

/// Element lambda . u of W = S_N x| Z^N  (translation times permutation).
struct AffElt {
    ExpVec lam;
    Permutation perm;

    explicit AffElt(int n) : lam(n, 0), perm(n) {}
    AffElt(ExpVec l, Permutation u) : lam(std::move(l)), perm(std::move(u)) {}

    int n() const { return perm.n(); }
    bool operator==(const AffElt& o) const {
        return lam == o.lam && perm == o.perm;
    }
    bool operator!=(const AffElt& o) const { return !(*this == o); }

    friend AffElt operator*(const AffElt& a, const AffElt& b);
    AffElt inverse() const;
    AffElt diamond() const;  // trivial on S_N, negation on translations
    int length() const;      // sum over positive roots (finite + affine)

    static AffElt identity(int n) { return AffElt(n); }
    static AffElt translation(ExpVec lam);
    static AffElt from_perm(Permutation u);
    static AffElt s(int n, int i);   // s_i, i in Z_N (s_0 affine)
    static AffElt pi(int n);         // pi = eps_1 . sigma
    static AffElt eps(int n, int j); // basis translation
    static AffElt varpi(int n, int i);  // fundamental weight translation
};

/// Word pi^piPower s_{letters[0]} ... s_{letters[r-1]}, letters in Z_N.
struct Word {
    int n = 0;
    int pi_power = 0;
    std::vector<int> letters;

    AffElt eval() const;
    std::string str() const;
    static Word parse(int n, const std::string& s);
};

/// Normal-form word for e. Genuinely reduced for S_N elements and for the
/// eps_j / varpi_i families (paper formulas); other elements get the
/// varpi-factorization word, which may be longer than l(e).
Word reduced_word(const AffElt& e);

/// sigma^i as a reduced letter sequence (the nested-block expression).
std::vector<int> sigma_power_word(int n, int i);

/// true iff lam <= mu in dominance order (mu - lam a nonnegative sum of
/// simple roots). Both must be weakly decreasing with equal coordinate sums.
bool dominance_leq(const ExpVec& lam, const ExpVec& mu);

bool is_dominant(const ExpVec& lam);

/// delta = (N-1, N-3, ..., 1-N)
ExpVec delta_vec(int n);

inline long dot(const ExpVec& a, const ExpVec& b) {
    long s = 0;
    for (size_t i = 0; i < a.size(); ++i) s += (long)a[i] * b[i];
    return s;
}

}  // namespace bqkz
