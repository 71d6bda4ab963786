#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "zm/partition.hpp"
#include "zm/random.hpp"
#include "zm/rational.hpp"

namespace zm {

inline constexpr unsigned kZMeasureLevelBound = 60;

/// Parameter tuple (z, z', θ, n); t = zz'/θ is derived, never stored.
struct ZMeasureParams {
    GaussianRational z;
    GaussianRational zp;
    Rational theta = 1;
    unsigned n = 1;

    GaussianRational t() const { return z * zp / GaussianRational(theta); }
    std::string to_string() const;
};

/// Which reading of the second degenerate-series branch to use. The printed
/// condition "(z' = -m, z < m-1)" is asymmetric to its sibling branch
/// "(z = -m, z' < -m+1)"; Mirrored replaces it by z < -m+1, which is the
/// transposition-dual of the first branch. Classification reports flag any
/// input on which the two readings disagree.
enum class DegenerateReading { AsPrinted, Mirrored };

enum class ParameterSeries { Principal, Complementary, Degenerate, NonAdmissible };

std::string to_string(ParameterSeries s);

struct ClassificationReport {
    ParameterSeries series = ParameterSeries::NonAdmissible;
    DegenerateReading reading = DegenerateReading::Mirrored;
    bool reading_sensitive = false;  // true if AsPrinted and Mirrored disagree here
    std::string detail;
};

/// Series classification of (z, z', θ):
///  - Principal: z' = conj(z) and z not in Z_{<=0} + Z_{>=0}θ (for rational
///    θ = p/q in lowest terms that set is all of (1/q)Z, so the test is
///    "z real with qz integral").
///  - Complementary: z, z' real, both strictly inside one interval between
///    consecutive points of the lattice Z + Zθ = (1/q)Z.
///  - Degenerate: z = mθ with integer m >= 1 and z' real > (m-1)θ, or the
///    same with z, z' swapped; or z = -m with z' real < -m+1 (sibling branch
///    per `reading`).
///  - NonAdmissible otherwise (weights may be complex or negative).
ClassificationReport classify_parameters(const GaussianRational& z, const GaussianRational& zp,
                                         const Rational& theta,
                                         DegenerateReading reading = DegenerateReading::Mirrored);

/// M^(n)(λ) = n! (z)_{λ,θ} (z')_{λ,θ} / ((t)_n H(λ,θ) H'(λ,θ)).
/// Throws PoleError when (t)_n = 0.
GaussianRational zmeasure_weight(const ZMeasureParams& params, const Partition& lambda);

/// Plancherel weight n! θ^n / (H(λ,θ) H'(λ,θ)); the z,z' -> ∞ limit.
Rational plancherel_weight(const Rational& theta, unsigned n, const Partition& lambda);

struct MeasureTable {
    unsigned n = 0;
    std::string params;  // printable parameter record
    std::vector<std::pair<Partition, GaussianRational>> entries;  // enumeration order
    bool normalized = false;  // Σ weights == 1 verified exactly

    GaussianRational sum() const;
    const GaussianRational& at(const Partition& lambda) const;
};

/// Full table over all λ ⊢ n; records the exact Σ = 1 check.
MeasureTable zmeasure_table(const ZMeasureParams& params, bool parallel = true);

/// Table of the θ-Plancherel measure over all λ ⊢ n.
MeasureTable plancherel_table(const Rational& theta, unsigned n, bool parallel = true);

struct SymmetryReport {
    bool pass = true;
    unsigned n = 0;
    std::string counterexample;
};

/// Verifies M_{z,z',θ}(λ) = M_{-z/θ,-z'/θ,1/θ}(λ') exactly for every λ ⊢ n.
SymmetryReport check_transposition_symmetry(const ZMeasureParams& params);

/// i.i.d. draws by inverse CDF over the exact table (cumulative numerators
/// over the common denominator; the uniform variate is an exact big integer,
/// so the sampling law equals the table exactly). Requires every weight to be
/// real and nonnegative; rejects other parameters with the classification in
/// the error message.
std::vector<Partition> sample_partitions(const MeasureTable& table, std::size_t count, Rng& rng);
std::vector<Partition> sample_partitions(const MeasureTable& table, std::size_t count,
                                         std::uint64_t seed);
std::vector<Partition> sample_partitions(const ZMeasureParams& params, std::size_t count,
                                         std::uint64_t seed);
std::vector<Partition> sample_partitions_plancherel(const Rational& theta, unsigned n,
                                                    std::size_t count, std::uint64_t seed);

}  // namespace zm
