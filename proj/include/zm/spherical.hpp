#pragma once

#include <map>
#include <string>
#include <utility>
#include <vector>

#include "zm/coset_function.hpp"
#include "zm/matching.hpp"
#include "zm/partition.hpp"
#include "zm/perm.hpp"
#include "zm/rational.hpp"
#include "zm/zmeasure.hpp"

namespace zm {

/// Zonal spherical function values w^λ(ρ) of the pair (S(2n), H(n)), indexed
/// by (diagram λ ⊢ n, coset type ρ ⊢ n). All values are rational.
struct SphericalTable {
    int n = 0;
    std::map<std::pair<Partition, Partition>, Rational> values;

    const Rational& at(const Partition& lambda, const Partition& rho) const;
};

enum class ZonalRoute {
    BruteForce,  // average χ^{2λ}(g_ρ h) over h in H(n); needs n <= 5
    Jack,        // read w^λ(ρ) off the power-sum expansion of J_λ^{(2)}; n <= 8
};

/// Canonical representative g_ρ of the double coset with type ρ: maps the
/// identity matching onto the block matching whose circles have sizes ρ_i on
/// consecutive points.
SignedPermutation coset_representative(const Partition& rho, int n);

/// Matching counts per coset type: |{x in X(n) : type(x) = ρ}|.
std::map<Partition, Integer> matchings_by_type(int n, bool parallel = true);

SphericalTable zonal_spherical_table(int n, ZonalRoute route, bool parallel = true);

/// Jack-route table, cross-checked against the brute-force route when
/// n <= check_limit; throws InternalError on disagreement.
SphericalTable zonal_spherical_table_checked(int n, int check_limit = 4, bool parallel = true);

/// Restriction of the spherical function of the z-deformed regular
/// representation to S(2n), by coset type:
///   φ_z(g) = c_n (1/|X(n)|) Σ_x z^{[x.g]} conj(z)^{[x]},
///   c_n = (2n-1)!! / (t(t+2)...(t+2n-2)),  t = z conj(z).
CosetFunction spherical_function_phi(const GaussianRational& z, int n, bool parallel = true);

/// Serial reference implementations kept for testing and benchmarking; the
/// parallel kernels above must match these exactly.
namespace reference {
CosetFunction spherical_function_phi(const GaussianRational& z, int n);
SphericalTable zonal_brute_table(int n);
}  // namespace reference

/// The measure λ -> dim(2λ) c_n |(1/|X|) Σ_x z^{[x]} w^λ(x)|². Exact; the
/// square roots of the underlying unit vectors cancel inside |.|².
MeasureTable zmeasure_by_inner_product(const GaussianRational& z, int n, bool parallel = true);

/// Closed hook-product form of the same measure:
///   n!/( (z conj(z)/2)_n ) · ∏_{(i,j)∈λ} (z+2(j-1)-(i-1))(conj(z)+2(j-1)-(i-1)) / h(2λ).
GaussianRational explicit_zmeasure(const GaussianRational& z, int n, const Partition& lambda);

struct CheckReport {
    bool pass = true;
    int n = 0;
    std::string counterexample;
};

/// w^λ(1^n) = 1, orthogonality (w^λ, w^μ) = δ/dim 2λ under the uniform
/// measure on X(n), and (when exhaustive) the reproducing identity
/// (1/|X|) Σ_x w^λ(x.g) w^μ(x) = δ w^λ(g)/dim 2λ over every g in S(2n).
CheckReport check_spherical_orthogonality(int n, bool exhaustive_reproducing = true);

/// φ_z(g) = Σ_λ M(λ) w^λ(g) on every coset type; when exhaustive, also
/// verifies φ_z is constant on each double coset by scanning all of S(2n).
CheckReport check_decomposition(const GaussianRational& z, int n, bool exhaustive = false);

/// explicit_zmeasure == inner-product measure == the general-θ measure at
/// parameters (z/2, conj(z)/2, θ = 1/2), for every λ ⊢ n.
CheckReport check_explicit_formula(const GaussianRational& z, int n);

/// The level-raising operator L on functions over X(n):
///   (Lf)(x') = s z f(x'|_n)        if {-(n+1), n+1} is a pair of x',
///   (Lf)(x') = s f(p_{n,n+1}(x'))  otherwise,      s² = (2n+1)/(2n+t).
/// Verifies exact isometry on the indicator basis (squared factors are
/// rational), the intertwining relation with the right regular action of
/// S(2n), and that lifted cyclic subspaces stay inside cyclic subspaces.
CheckReport check_embedding(const GaussianRational& z, int n);

}  // namespace zm
