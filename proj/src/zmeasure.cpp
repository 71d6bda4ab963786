#include "zm/zmeasure.hpp"

#include <algorithm>

#include "zm/errors.hpp"
#include "zm/parallel.hpp"

namespace zm {

std::string ZMeasureParams::to_string() const {
    return "z=" + zm::to_string(z) + " z'=" + zm::to_string(zp) + " theta=" + zm::to_string(theta) +
           " n=" + std::to_string(n);
}

std::string to_string(ParameterSeries s) {
    switch (s) {
        case ParameterSeries::Principal: return "principal";
        case ParameterSeries::Complementary: return "complementary";
        case ParameterSeries::Degenerate: return "degenerate";
        case ParameterSeries::NonAdmissible: return "non-admissible";
    }
    return "?";
}

namespace {

// For θ = p/q in lowest terms, Z + Zθ = (1/q)Z; "qv is an integer".
bool on_lattice(const Rational& v, const Rational& theta) {
    Rational scaled = v * theta.get_den();
    return scaled.get_den() == 1;
}

// z = mθ for an integer m >= 1?
bool positive_multiple_of_theta(const Rational& v, const Rational& theta, Integer& m_out) {
    Rational m = v / theta;
    if (m.get_den() != 1 || m <= 0) return false;
    m_out = m.get_num();
    return true;
}

bool degenerate_pair(const Rational& a, const Rational& b, const Rational& theta) {
    // (a = mθ, b > (m-1)θ), m integer >= 1
    Integer m;
    if (!positive_multiple_of_theta(a, theta, m)) return false;
    return b > Rational(m - 1) * theta;
}

bool degenerate_negative_first(const Rational& a, const Rational& b) {
    // (a = -m, b < -m+1), m integer >= 1
    if (a.get_den() != 1 || a >= 0) return false;
    Integer m = -a.get_num();
    return b < Rational(1 - m);
}

bool degenerate_negative_printed(const Rational& a, const Rational& b) {
    // the printed sibling: (a = -m, b < m-1)
    if (a.get_den() != 1 || a >= 0) return false;
    Integer m = -a.get_num();
    return b < Rational(m - 1);
}

}  // namespace

ClassificationReport classify_parameters(const GaussianRational& z, const GaussianRational& zp,
                                         const Rational& theta, DegenerateReading reading) {
    if (theta <= 0) throw DomainError("theta must be positive");
    ClassificationReport rep;
    rep.reading = reading;

    if (zp == z.conj() && !(z.is_real() && on_lattice(z.re, theta))) {
        rep.series = ParameterSeries::Principal;
        rep.detail = "z' = conj(z), z off the lattice (1/q)Z";
        return rep;
    }
    if (z.is_real() && zp.is_real()) {
        const Rational q(theta.get_den());
        if (!on_lattice(z.re, theta) && !on_lattice(zp.re, theta)) {
            Integer fz, fzp;
            mpz_fdiv_q(fz.get_mpz_t(), Rational(z.re * q).get_num().get_mpz_t(),
                       Rational(z.re * q).get_den().get_mpz_t());
            mpz_fdiv_q(fzp.get_mpz_t(), Rational(zp.re * q).get_num().get_mpz_t(),
                       Rational(zp.re * q).get_den().get_mpz_t());
            if (fz == fzp) {
                rep.series = ParameterSeries::Complementary;
                rep.detail = "z, z' in the open lattice interval (" + to_string(Rational(fz) / q) +
                             ", " + to_string(Rational(fz + 1) / q) + ")";
                return rep;
            }
        }
        // Degenerate branch (1): z = mθ or z' = mθ.
        if (degenerate_pair(z.re, zp.re, theta) || degenerate_pair(zp.re, z.re, theta)) {
            rep.series = ParameterSeries::Degenerate;
            rep.detail = "z or z' a positive integer multiple of theta";
            return rep;
        }
        // Degenerate branch (2): z = -m (columns bounded); sibling per reading.
        const bool first = degenerate_negative_first(z.re, zp.re);
        const bool mirrored = degenerate_negative_first(zp.re, z.re);
        const bool printed = degenerate_negative_printed(zp.re, z.re);
        if (mirrored != printed) rep.reading_sensitive = true;
        const bool second = reading == DegenerateReading::Mirrored ? mirrored : printed;
        if (first || second) {
            rep.series = ParameterSeries::Degenerate;
            rep.detail = std::string("negative-integer degenerate branch") +
                         (rep.reading_sensitive ? " (reading-sensitive)" : "");
            return rep;
        }
    }
    rep.series = ParameterSeries::NonAdmissible;
    rep.detail = "no series condition matched";
    return rep;
}

GaussianRational zmeasure_weight(const ZMeasureParams& params, const Partition& lambda) {
    if (lambda.size() != params.n) throw DomainError("|lambda| must equal n");
    const GaussianRational tn = pochhammer(params.t(), params.n);
    if (tn.is_zero())
        throw PoleError("(t)_n = 0 at " + params.to_string() + "; t = " + to_string(params.t()));
    Integer nfact = 1;
    for (unsigned i = 2; i <= params.n; ++i) nfact *= i;
    const auto hooks = hook_products(lambda, params.theta);
    GaussianRational num = GaussianRational(Rational(nfact)) *
                           generalized_pochhammer(params.z, lambda, params.theta) *
                           generalized_pochhammer(params.zp, lambda, params.theta);
    return num / (tn * GaussianRational(hooks.h * hooks.h_prime));
}

Rational plancherel_weight(const Rational& theta, unsigned n, const Partition& lambda) {
    if (lambda.size() != n) throw DomainError("|lambda| must equal n");
    const auto hooks = hook_products(lambda, theta);
    Integer nfact = 1;
    for (unsigned i = 2; i <= n; ++i) nfact *= i;
    return Rational(nfact) * pow(theta, n) / (hooks.h * hooks.h_prime);
}

GaussianRational MeasureTable::sum() const {
    GaussianRational s(0);
    for (const auto& [lam, w] : entries) s += w;
    return s;
}

const GaussianRational& MeasureTable::at(const Partition& lambda) const {
    for (const auto& [lam, w] : entries) {
        if (lam == lambda) return w;
    }
    throw DomainError("partition not in table: " + lambda.to_string());
}

MeasureTable zmeasure_table(const ZMeasureParams& params, bool parallel) {
    if (params.n > kZMeasureLevelBound)
        throw CapacityError("z-measure level bound exceeded: n = " + std::to_string(params.n));
    MeasureTable table;
    table.n = params.n;
    table.params = params.to_string();
    const auto parts = enumerate_partitions(params.n);
    table.entries.resize(parts.size());
    // Trigger the pole check once up front (cheap) so parallel workers cannot race on throws.
    (void)zmeasure_weight(params, parts[0]);
    parallel_for(
        parts.size(),
        [&](std::size_t i) {
            table.entries[i] = {parts[i], zmeasure_weight(params, parts[i])};
        },
        parallel);
    table.normalized = table.sum() == GaussianRational(1);
    return table;
}

MeasureTable plancherel_table(const Rational& theta, unsigned n, bool parallel) {
    if (n > kZMeasureLevelBound)
        throw CapacityError("z-measure level bound exceeded: n = " + std::to_string(n));
    MeasureTable table;
    table.n = n;
    table.params = "plancherel theta=" + to_string(theta) + " n=" + std::to_string(n);
    const auto parts = enumerate_partitions(n);
    table.entries.resize(parts.size());
    parallel_for(
        parts.size(),
        [&](std::size_t i) {
            table.entries[i] = {parts[i], GaussianRational(plancherel_weight(theta, n, parts[i]))};
        },
        parallel);
    table.normalized = table.sum() == GaussianRational(1);
    return table;
}

SymmetryReport check_transposition_symmetry(const ZMeasureParams& params) {
    SymmetryReport rep;
    rep.n = params.n;
    ZMeasureParams dual;
    dual.z = -params.z / GaussianRational(params.theta);
    dual.zp = -params.zp / GaussianRational(params.theta);
    dual.theta = 1 / params.theta;
    dual.n = params.n;
    for (const auto& lam : enumerate_partitions(params.n)) {
        if (zmeasure_weight(params, lam) != zmeasure_weight(dual, lam.transposed())) {
            rep.pass = false;
            rep.counterexample = lam.to_string();
            return rep;
        }
    }
    return rep;
}

std::vector<Partition> sample_partitions(const MeasureTable& table, std::size_t count, Rng& rng) {
    // Exact inverse CDF: weights n_i/d_i over common denominator D; a uniform
    // integer in [0, D) picks the bin. Law is exactly the table.
    Integer common = 1;
    for (const auto& [lam, w] : table.entries) {
        if (!w.is_real() || w.re < 0) {
            throw DomainError("sampling requires a nonnegative real table; weight at " +
                              lam.to_string() + " is " + to_string(w) + " (" + table.params + ")");
        }
        mpz_lcm(common.get_mpz_t(), common.get_mpz_t(), w.re.get_den().get_mpz_t());
    }
    std::vector<Integer> cumulative;
    cumulative.reserve(table.entries.size());
    Integer acc = 0;
    for (const auto& [lam, w] : table.entries) {
        acc += w.re.get_num() * (common / w.re.get_den());
        cumulative.push_back(acc);
    }
    if (acc != common) throw DomainError("table does not sum to 1; refusing to sample");
    std::vector<Partition> out;
    out.reserve(count);
    for (std::size_t k = 0; k < count; ++k) {
        Integer u = uniform_below(rng, common);
        std::size_t lo = 0, hi = cumulative.size() - 1;
        while (lo < hi) {
            std::size_t mid = (lo + hi) / 2;
            if (u < cumulative[mid])
                hi = mid;
            else
                lo = mid + 1;
        }
        out.push_back(table.entries[lo].first);
    }
    return out;
}

std::vector<Partition> sample_partitions(const MeasureTable& table, std::size_t count,
                                         std::uint64_t seed) {
    Rng rng(seed);
    return sample_partitions(table, count, rng);
}

std::vector<Partition> sample_partitions(const ZMeasureParams& params, std::size_t count,
                                         std::uint64_t seed) {
    const MeasureTable table = zmeasure_table(params);
    for (const auto& [lam, w] : table.entries) {
        if (!w.is_real() || w.re < 0) {
            const auto cls = classify_parameters(params.z, params.zp, params.theta);
            throw DomainError("sampling needs a probability measure, but parameters classified '" +
                              to_string(cls.series) + "' give weight " + to_string(w) + " at " +
                              lam.to_string());
        }
    }
    return sample_partitions(table, count, seed);
}

std::vector<Partition> sample_partitions_plancherel(const Rational& theta, unsigned n,
                                                    std::size_t count, std::uint64_t seed) {
    return sample_partitions(plancherel_table(theta, n), count, seed);
}

}  // namespace zm
