#pragma once

#include <compare>
#include <cstdint>
#include <initializer_list>
#include <string>
#include <vector>

#include "zm/rational.hpp"

namespace zm {

/// Young diagram: weakly decreasing positive parts, stored without trailing
/// zeros. The empty partition is the unique diagram with 0 boxes.
class Partition {
  public:
    Partition() = default;
    Partition(std::initializer_list<unsigned> parts) : parts_(parts) { validate(); }
    explicit Partition(std::vector<unsigned> parts) : parts_(std::move(parts)) { validate(); }

    const std::vector<unsigned>& parts() const { return parts_; }
    unsigned size() const;                       // |λ|, number of boxes
    unsigned length() const { return static_cast<unsigned>(parts_.size()); }  // l(λ)
    unsigned part(unsigned i) const { return i < parts_.size() ? parts_[i] : 0; }
    bool empty() const { return parts_.empty(); }

    Partition transposed() const;

    /// Diagram with every row doubled: λ -> 2λ = (2λ_1, 2λ_2, ...).
    Partition doubled() const;

    friend auto operator<=>(const Partition& a, const Partition& b) = default;

    std::string to_string() const;  // "(3,1,1)"; "()" for empty

  private:
    void validate() const;
    std::vector<unsigned> parts_;
};

inline Partition transpose(const Partition& p) { return p.transposed(); }

/// All partitions of n in reverse-lexicographic order: (n) first, (1^n) last.
/// n = 0 yields the single empty partition. Throws CapacityError above `bound`.
std::vector<Partition> enumerate_partitions(unsigned n, unsigned bound = 60);

/// Classical partition count p(n) (enumeration-free, via Euler recurrence).
Integer partition_count(unsigned n);

/// Pochhammer symbol a(a+1)...(a+n-1); 1 for n = 0.
GaussianRational pochhammer(const GaussianRational& a, unsigned n);

/// Product over boxes (i,j) of λ of (z + (j-1) - (i-1)θ).
GaussianRational generalized_pochhammer(const GaussianRational& z, const Partition& lambda,
                                        const Rational& theta);

struct HookProducts {
    Rational h;        // ∏ ((λ_i - j) + (λ'_j - i)θ + 1)
    Rational h_prime;  // ∏ ((λ_i - j) + (λ'_j - i)θ + θ)
};
HookProducts hook_products(const Partition& lambda, const Rational& theta);

/// Product of hook lengths ∏ (arm + leg + 1); equals H(λ,1) = H'(λ,1).
Integer hook_length_product(const Partition& lambda);

/// |λ|! / h(λ); throws InternalError if the division is not exact.
Integer dimension(const Partition& lambda);

/// True if a >= b in dominance order (requires |a| = |b|).
bool dominates(const Partition& a, const Partition& b);

/// z_ρ = ∏ i^{m_i} m_i! where m_i = multiplicity of i in ρ.
Integer z_weight(const Partition& rho);

}  // namespace zm
