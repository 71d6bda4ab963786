#pragma once

#include <cstdint>
#include <functional>
#include <map>
#include <string>
#include <vector>

#include "zm/matching.hpp"
#include "zm/partition.hpp"

namespace zm {

/// Bijection of the signed domain {-n,...,-1,1,...,n}; an element of S(2n).
/// Stored as an image table over the same index range as Matching.
class SignedPermutation {
  public:
    SignedPermutation() = default;
    explicit SignedPermutation(int level);  // identity

    /// From the one-line image list over (-n,...,-1,1,...,n) in that order.
    static SignedPermutation from_images(int level, const std::vector<int>& images);

    int level() const { return n_; }
    int apply(int value) const { return value_of(images_[index_of(value)]); }

    /// One-line notation over (-n,...,-1,1,...,n).
    std::vector<int> images() const;

    /// Composition in action order: x.(a.then(b)) == (x.a).b.
    SignedPermutation then(const SignedPermutation& o) const;
    SignedPermutation inverse() const;

    /// Membership in the hyperoctahedral subgroup: g(-k) = -g(k) for all k.
    bool is_hyperoctahedral() const;

    /// Embeds into S(2m), m >= n, fixing all added points.
    SignedPermutation lift(int m) const;

    friend bool operator==(const SignedPermutation& a, const SignedPermutation& b) {
        return a.n_ == b.n_ && a.images_ == b.images_;
    }
    friend bool operator<(const SignedPermutation& a, const SignedPermutation& b) {
        return a.n_ != b.n_ ? a.n_ < b.n_ : a.images_ < b.images_;
    }

    std::string to_string() const;

    int index_of(int value) const;
    int value_of(int index) const;
    const std::vector<std::int8_t>& raw() const { return images_; }

  private:
    int n_ = 0;
    std::vector<std::int8_t> images_;
};

SignedPermutation identity_permutation(int n);

/// The fixed-point-free involution k -> -k whose centralizer is H(n).
SignedPermutation negation_involution(int n);

/// The transposition (a b) of two signed-domain elements.
SignedPermutation transposition(int n, int a, int b);

/// All transpositions (a b), a < b, in lexicographic order; the generating
/// set used by the quasi-invariance and cocycle scans.
std::vector<SignedPermutation> all_transpositions(int n);

/// H(n): all g with g(-k) = -g(k); 2^n n! elements, deterministic order.
std::vector<SignedPermutation> enumerate_hyperoctahedral(int n);

/// Full S(2n) in one-line lexicographic order; intended for small n only.
void for_each_permutation(int n, const std::function<void(const SignedPermutation&)>& visit);
std::vector<SignedPermutation> enumerate_permutations(int n);

/// Right action of S(2n) on X(n): x.g = {{g(i),g(j)} : {i,j} in x}.
Matching act(const Matching& x, const SignedPermutation& g);

/// Cycle type of g as an abstract permutation of 2n points.
Partition permutation_cycle_type(const SignedPermutation& g);

/// Coset type of the double coset H(n) g H(n): the cycle type of the matching
/// (identity matching).g, a partition of n.
Partition coset_type(const SignedPermutation& g);

/// Fundamental cocycle c(x; g) = [x.g]_n - [x]_n; an integer in [-(n-1), n-1].
int cocycle(const Matching& x, const SignedPermutation& g);

struct QuasiInvarianceReport {
    bool pass = true;
    int n = 0;
    std::string counterexample;
};

/// Verifies the cylinder identity μ_t(x.g) = t^{c(x;g)} μ_t(x) exactly for
/// every x in X(n) and every transposition g.
QuasiInvarianceReport check_quasi_invariance(const Rational& t, int n, bool parallel = true);

/// Irreducible character χ^μ(ρ) of the symmetric group, |μ| = |ρ|, by the
/// Murnaghan–Nakayama rule (border-strip recursion over beta-numbers).
/// Values are memoized per (μ, ρ-suffix) in a thread-safe cache.
long long character(const Partition& mu, const Partition& rho);

/// Full character table of S(m): values[(μ, ρ)] for all μ, ρ partitions of m.
struct CharacterTable {
    unsigned degree = 0;  // m = 2n
    std::map<std::pair<Partition, Partition>, long long> values;
    long long at(const Partition& mu, const Partition& rho) const;
};
CharacterTable character_table(unsigned m, bool parallel = true);

}  // namespace zm
