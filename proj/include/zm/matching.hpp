#pragma once

#include <cstdint>
#include <functional>
#include <string>
#include <utility>
#include <vector>

#include "zm/partition.hpp"
#include "zm/random.hpp"
#include "zm/rational.hpp"

namespace zm {

/// Hard cap on the level of a matching (indices fit in int8_t storage).
inline constexpr int kMatchingLevelCap = 12;
/// Default enumeration bound; |X(8)| = 2,027,025.
inline constexpr int kMatchingEnumBound = 8;

/// Perfect pairing of {-n,...,-1,1,...,n} into n unordered pairs; an element
/// of the coset space X(n). Stored as the partner involution over the index
/// range [0, 2n) where index k maps to value k-n for k < n and k-n+1 otherwise.
class Matching {
  public:
    Matching() = default;
    Matching(int level, std::vector<std::pair<int, int>> pairs);

    int level() const { return n_; }

    /// Signed-value partner lookup.
    int partner(int value) const { return value_of(partner_[index_of(value)]); }

    /// Canonical pair list: within a pair the element of smaller absolute
    /// value first (-k before k on ties); pairs sorted by |first|.
    std::vector<std::pair<int, int>> pairs() const;

    /// True if {-m, m} is one of the pairs.
    bool has_diagonal_pair(int m) const { return partner(m) == -m; }

    friend bool operator==(const Matching& a, const Matching& b) {
        return a.n_ == b.n_ && a.partner_ == b.partner_;
    }
    friend bool operator<(const Matching& a, const Matching& b) {
        return a.n_ != b.n_ ? a.n_ < b.n_ : a.partner_ < b.partner_;
    }

    std::string to_string() const;  // "{{-2,-1},{1,2}}"

    int index_of(int value) const;  // signed value -> storage index
    int value_of(int index) const;  // storage index -> signed value

    /// Raw involution over indices; exposed for the group action.
    const std::vector<std::int8_t>& raw() const { return partner_; }
    static Matching from_raw(int level, std::vector<std::int8_t> partner);

  private:
    int n_ = 0;
    std::vector<std::int8_t> partner_;
};

/// One traversal cycle and the full decomposition of a matching. A cycle
/// alternates partner and negation steps; elements() lists the visited signed
/// values e0, e1 = partner(e0), e2 = -e1, ... The circle points are the even
/// positions; the point at e is drawn clockwise iff e > 0.
struct Cycle {
    std::vector<int> elements;
    unsigned pair_count() const { return static_cast<unsigned>(elements.size() / 2); }
};

struct CycleDecomposition {
    std::vector<Cycle> cycles;
    unsigned cycle_count = 0;  // [x]_n
    Partition type;            // pair counts, sorted decreasing; a partition of n
};

/// The matching {{-1,1},...,{-n,n}}; the base point of X(n) (image of the
/// identity coset), with the maximal cycle count n.
Matching identity_matching(int n);

/// (2n-1)!! as an exact integer.
Integer double_factorial_odd(int n);

/// Matchings are ordered by rank: repeatedly pair the smallest free index
/// with the r-th smallest remaining free index. Rank digits are mixed-radix
/// (2n-1, 2n-3, ..., 1). This gives random access for parallel scans.
Matching matching_from_rank(int n, const Integer& rank);

/// Position of x in the rank order; inverse of matching_from_rank.
Integer rank_of_matching(const Matching& x);

/// All of X(n) in rank order. Throws CapacityError for n beyond `bound`.
std::vector<Matching> enumerate_matchings(int n, int bound = kMatchingEnumBound);

/// Streaming visit of X(n) in rank order (no materialization).
void for_each_matching(int n, const std::function<void(const Matching&)>& visit,
                       int bound = kMatchingEnumBound);

CycleDecomposition cycle_decomposition(const Matching& x);

/// Number of cycles [x]_n without building the full decomposition.
unsigned cycle_count(const Matching& x);

/// Coset type of the matching: pair counts of its cycles, a partition of n.
Partition matching_type(const Matching& x);

/// p_{n,n+1}: delete the pair {-(n+1), n+1} if present, otherwise join the
/// two orphaned partners of -(n+1) and n+1.
Matching canonical_projection(const Matching& x);

/// Embedding X(n) -> X(n+1): add the pair {-(n+1), n+1}.
Matching lift_matching(const Matching& x);

/// μ_t^(n)(x) = t^{[x]_n} / (t(t+2)...(t+2n-2)).
Rational ewens_weight(const Rational& t, const Matching& x);

/// t(t+2)...(t+2n-2).
Rational ewens_denominator(const Rational& t, int n);

struct PushforwardReport {
    bool pass = true;
    int n = 0;
    std::string counterexample;  // empty when pass
};

/// Verifies  μ_t^(n+1)(p^{-1}{x}) = μ_t^(n)(x)  exactly for every x in X(n),
/// and that every preimage has exactly 2n+1 elements.
PushforwardReport check_pushforward(const Rational& t, int n, bool parallel = true);

/// Sequential growth sampler for μ_t^(n): at level k -> k+1 create the pair
/// {-(k+1), k+1} with probability t/(t+2k), else split one of the k existing
/// pairs in one of 2k equally likely ways. The law is exactly μ_t^(n).
Matching sample_matching(const Rational& t, int n, Rng& rng);
Matching sample_matching(const Rational& t, int n, std::uint64_t seed);

/// Text form of the cycle picture, one circle per line: "(1+ 3- 5+ 2+)".
/// A point m+ carries a clockwise arrow, m- counterclockwise.
std::string render_cycles(const Matching& x);

/// Inverse of render_cycles (round-trips any matching).
Matching parse_cycles(const std::string& text);

}  // namespace zm
