#pragma once

#include <map>
#include <string>
#include <vector>

#include "zm/coset_function.hpp"
#include "zm/partition.hpp"
#include "zm/rational.hpp"

namespace zm {

inline constexpr unsigned kSymFuncDegreeBound = 12;

enum class Basis { Monomial, PowerSum };

/// Homogeneous symmetric function of fixed degree n: a finite linear
/// combination of m_μ or p_ρ, μ, ρ partitions of n, with exact coefficients.
struct SymFunc {
    unsigned degree = 0;
    Basis basis = Basis::Monomial;
    std::map<Partition, GaussianRational> coeff;

    GaussianRational at(const Partition& key) const;
    SymFunc& trim();  // drop zero coefficients

    friend bool operator==(const SymFunc& a, const SymFunc& b);
};

SymFunc operator+(SymFunc a, const SymFunc& b);
SymFunc operator*(const GaussianRational& c, SymFunc f);

/// Exact basis conversion (round-trip is the identity). The power-sum to
/// monomial matrix is derived combinatorially: the m_μ coefficient of p_ρ
/// counts the assignments of the parts of ρ onto the rows of μ filling each
/// row exactly; the reverse direction inverts that matrix.
SymFunc convert_basis(const SymFunc& f, Basis target);

/// ⟨p_ρ, p_σ⟩ = δ_{ρσ} α^{l(ρ)} z_ρ, extended bilinearly.
GaussianRational jack_inner_product(const SymFunc& f, const SymFunc& g, const Rational& alpha);

struct JackPolynomial {
    Partition lambda;
    Rational alpha;
    SymFunc expansion;  // monomial basis, integral form: [m_{1^n}] = n!
};

/// Integral-form Jack polynomial J_λ^{(α)}: the unique symmetric function
/// that is dominance-triangular over the monomial basis, orthogonal to every
/// J_μ (μ ≠ λ) under ⟨.,.⟩_α, with m_{(1^n)} coefficient n!. Computed by
/// Gram–Schmidt along a linear extension of dominance order; the result is
/// independent of the extension chosen.
JackPolynomial jack_polynomial(const Partition& lambda, const Rational& alpha);

/// All J_λ^{(α)}, λ ⊢ n, sharing one conversion matrix; faster than repeated
/// single calls.
std::vector<JackPolynomial> jack_basis(unsigned n, const Rational& alpha, bool parallel = true);

/// Evaluation at m ones via the specialization homomorphism p_k -> m;
/// accepts any exact m (used with m = N in the binomial generating identity).
GaussianRational evaluate_at_ones(const SymFunc& f, const Rational& m);

/// ch''(f) = |H(n)| Σ_ρ z_ρ^{-1} 2^{-l(ρ)} p_ρ f(ρ); power-sum output.
SymFunc characteristic_map(const CosetFunction& f);

struct GeneratingIdentityReport {
    bool pass = true;
    unsigned n = 0;
    std::string counterexample;
};

/// Compares the degree-n component of ∏_{i<=m}(1-x_i)^{-N/2} with
/// Σ_λ J_λ^{(2)}(x) ∏_{(i,j)∈λ}(N+2(j-1)-(i-1)) / h(2λ), both expanded as
/// polynomials in m variables with exact coefficients.
GeneratingIdentityReport check_generating_identity(const Rational& N, unsigned n, unsigned m_vars);

}  // namespace zm
