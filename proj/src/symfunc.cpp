#include "zm/symfunc.hpp"

#include <algorithm>
#include <mutex>

#include "zm/errors.hpp"
#include "zm/parallel.hpp"

namespace zm {

const GaussianRational& CosetFunction::at(const Partition& rho) const {
    auto it = values.find(rho);
    if (it == values.end()) throw DomainError("coset function has no value at " + rho.to_string());
    return it->second;
}

GaussianRational SymFunc::at(const Partition& key) const {
    auto it = coeff.find(key);
    return it == coeff.end() ? GaussianRational(0) : it->second;
}

SymFunc& SymFunc::trim() {
    for (auto it = coeff.begin(); it != coeff.end();) {
        if (it->second.is_zero())
            it = coeff.erase(it);
        else
            ++it;
    }
    return *this;
}

bool operator==(const SymFunc& a, const SymFunc& b) {
    if (a.degree != b.degree || a.basis != b.basis) return false;
    SymFunc x = a, y = b;
    x.trim();
    y.trim();
    return x.coeff == y.coeff;
}

SymFunc operator+(SymFunc a, const SymFunc& b) {
    if (a.degree != b.degree || a.basis != b.basis) throw DomainError("adding incompatible SymFuncs");
    for (const auto& [k, v] : b.coeff) a.coeff[k] += v;
    return a;
}

SymFunc operator*(const GaussianRational& c, SymFunc f) {
    for (auto& [k, v] : f.coeff) v *= c;
    return f;
}

namespace {

// Number of ways to assign the parts of rho (as a sequence) to the rows of mu
// so that every row is filled exactly; the m_mu coefficient of p_rho.
Integer distribution_count(const std::vector<unsigned>& rho, const Partition& mu) {
    std::vector<long> remaining(mu.parts().begin(), mu.parts().end());
    Integer count = 0;
    std::function<void(std::size_t)> rec = [&](std::size_t i) {
        if (i == rho.size()) {
            for (long r : remaining)
                if (r != 0) return;
            count += 1;
            return;
        }
        for (auto& r : remaining) {
            if (r >= static_cast<long>(rho[i])) {
                r -= rho[i];
                rec(i + 1);
                r += rho[i];
            }
        }
    };
    rec(0);
    return count;
}

struct ConversionMatrices {
    std::vector<Partition> parts;                       // reverse-lex order
    std::map<Partition, std::size_t> index;
    std::vector<std::vector<Rational>> p_to_m;          // row ρ, col μ: p_ρ = Σ c m_μ
    std::vector<std::vector<Rational>> m_to_p;          // inverse
};

const ConversionMatrices& conversions(unsigned n) {
    static std::mutex mu;
    static std::map<unsigned, ConversionMatrices> cache;
    std::lock_guard<std::mutex> lock(mu);
    auto it = cache.find(n);
    if (it != cache.end()) return it->second;
    if (n > kSymFuncDegreeBound)
        throw CapacityError("symmetric-function degree bound exceeded: n = " + std::to_string(n));

    ConversionMatrices cm;
    cm.parts = enumerate_partitions(n);
    for (std::size_t i = 0; i < cm.parts.size(); ++i) cm.index[cm.parts[i]] = i;
    const std::size_t k = cm.parts.size();
    cm.p_to_m.assign(k, std::vector<Rational>(k, Rational(0)));
    for (std::size_t r = 0; r < k; ++r)
        for (std::size_t c = 0; c < k; ++c)
            cm.p_to_m[r][c] = Rational(distribution_count(cm.parts[r].parts(), cm.parts[c]));

    // Invert by Gauss-Jordan (exact).
    std::vector<std::vector<Rational>> aug(k, std::vector<Rational>(2 * k, Rational(0)));
    for (std::size_t r = 0; r < k; ++r) {
        for (std::size_t c = 0; c < k; ++c) aug[r][c] = cm.p_to_m[r][c];
        aug[r][k + r] = 1;
    }
    for (std::size_t col = 0; col < k; ++col) {
        std::size_t piv = col;
        while (piv < k && aug[piv][col] == 0) ++piv;
        if (piv == k) throw InternalError("power-sum transition matrix is singular");
        std::swap(aug[piv], aug[col]);
        Rational pv = aug[col][col];
        for (auto& x : aug[col]) x /= pv;
        for (std::size_t r = 0; r < k; ++r) {
            if (r == col || aug[r][col] == 0) continue;
            Rational f = aug[r][col];
            for (std::size_t c = 0; c < 2 * k; ++c) aug[r][c] -= f * aug[col][c];
        }
    }
    // p = A m  =>  m = A^{-1} p; row μ of A^{-1} gives m_μ in power sums.
    cm.m_to_p.assign(k, std::vector<Rational>(k, Rational(0)));
    for (std::size_t r = 0; r < k; ++r)
        for (std::size_t c = 0; c < k; ++c) cm.m_to_p[r][c] = aug[r][k + c];

    auto [pos, ok] = cache.emplace(n, std::move(cm));
    (void)ok;
    return pos->second;
}

}  // namespace

SymFunc convert_basis(const SymFunc& f, Basis target) {
    if (f.basis == target) return f;
    const auto& cm = conversions(f.degree);
    const auto& mat = f.basis == Basis::PowerSum ? cm.p_to_m : cm.m_to_p;
    SymFunc out;
    out.degree = f.degree;
    out.basis = target;
    for (const auto& [key, c] : f.coeff) {
        if (c.is_zero()) continue;
        const std::size_t row = cm.index.at(key);
        for (std::size_t col = 0; col < cm.parts.size(); ++col) {
            if (mat[row][col] == 0) continue;
            out.coeff[cm.parts[col]] += GaussianRational(mat[row][col]) * c;
        }
    }
    return out.trim();
}

GaussianRational jack_inner_product(const SymFunc& f, const SymFunc& g, const Rational& alpha) {
    if (f.degree != g.degree) throw DomainError("inner product needs equal degrees");
    SymFunc fp = convert_basis(f, Basis::PowerSum);
    SymFunc gp = convert_basis(g, Basis::PowerSum);
    GaussianRational acc(0);
    for (const auto& [rho, cf] : fp.coeff) {
        auto it = gp.coeff.find(rho);
        if (it == gp.coeff.end()) continue;
        Rational weight = pow(alpha, rho.length()) * Rational(z_weight(rho));
        acc += cf * it->second * GaussianRational(weight);
    }
    return acc;
}

std::vector<JackPolynomial> jack_basis(unsigned n, const Rational& alpha, bool parallel) {
    if (n > 10) throw CapacityError("Jack polynomial degree bound exceeded: n = " + std::to_string(n));
    const auto& cm = conversions(n);
    const std::size_t k = cm.parts.size();

    // Gram matrix of the monomial basis (symmetric; cells are independent).
    std::vector<std::vector<Rational>> gram(k, std::vector<Rational>(k, Rational(0)));
    std::vector<std::pair<std::size_t, std::size_t>> cells;
    for (std::size_t i = 0; i < k; ++i)
        for (std::size_t j = i; j < k; ++j) cells.emplace_back(i, j);
    parallel_for(
        cells.size(),
        [&](std::size_t c) {
            auto [i, j] = cells[c];
            Rational acc(0);
            for (std::size_t r = 0; r < k; ++r) {
                if (cm.m_to_p[i][r] == 0 || cm.m_to_p[j][r] == 0) continue;
                acc += cm.m_to_p[i][r] * cm.m_to_p[j][r] * pow(alpha, cm.parts[r].length()) *
                       Rational(z_weight(cm.parts[r]));
            }
            gram[i][j] = acc;
            gram[j][i] = std::move(acc);
        },
        parallel);

    auto pair_vectors = [&](const std::vector<Rational>& a, const std::vector<Rational>& b) {
        Rational acc(0);
        for (std::size_t i = 0; i < k; ++i) {
            if (a[i] == 0) continue;
            for (std::size_t j = 0; j < k; ++j) {
                if (b[j] == 0) continue;
                acc += a[i] * b[j] * gram[i][j];
            }
        }
        return acc;
    };

    // Process partitions from (1^n) upward (ascending reverse-lex refines
    // dominance-up), orthogonalizing against everything already done.
    std::vector<std::vector<Rational>> basis(k, std::vector<Rational>(k, Rational(0)));
    std::vector<Rational> norms(k);
    for (std::size_t step = 0; step < k; ++step) {
        const std::size_t lam = k - 1 - step;
        auto& v = basis[lam];
        v[lam] = 1;
        for (std::size_t done = 0; done < step; ++done) {
            const std::size_t mu = k - 1 - done;
            // projection coefficient ⟨m_lam, J_mu⟩ / ⟨J_mu, J_mu⟩
            Rational num(0);
            for (std::size_t j = 0; j < k; ++j) {
                if (basis[mu][j] == 0) continue;
                num += basis[mu][j] * gram[lam][j];
            }
            if (num == 0) continue;
            Rational cproj = num / norms[mu];
            for (std::size_t j = 0; j < k; ++j) v[j] -= cproj * basis[mu][j];
        }
        norms[lam] = pair_vectors(v, v);
        if (norms[lam] == 0) throw InternalError("Jack Gram-Schmidt hit a null vector");
    }

    Integer nfact = 1;
    for (unsigned i = 2; i <= n; ++i) nfact *= i;
    const Partition ones = n == 0 ? Partition() : Partition(std::vector<unsigned>(n, 1));
    const std::size_t ones_idx = cm.index.at(ones);

    std::vector<JackPolynomial> out;
    out.reserve(k);
    for (std::size_t lam = 0; lam < k; ++lam) {
        const Rational lead = basis[lam][ones_idx];
        if (lead == 0) throw InternalError("Jack polynomial missing m_(1^n) coefficient");
        const Rational scale = Rational(nfact) / lead;
        JackPolynomial jp;
        jp.lambda = cm.parts[lam];
        jp.alpha = alpha;
        jp.expansion.degree = n;
        jp.expansion.basis = Basis::Monomial;
        for (std::size_t j = 0; j < k; ++j) {
            if (basis[lam][j] == 0) continue;
            jp.expansion.coeff[cm.parts[j]] = GaussianRational(scale * basis[lam][j]);
        }
        out.push_back(std::move(jp));
    }
    return out;
}

JackPolynomial jack_polynomial(const Partition& lambda, const Rational& alpha) {
    auto all = jack_basis(lambda.size(), alpha, false);
    for (auto& jp : all) {
        if (jp.lambda == lambda) return std::move(jp);
    }
    throw InternalError("jack_basis missed a partition");
}

GaussianRational evaluate_at_ones(const SymFunc& f, const Rational& m) {
    SymFunc fp = convert_basis(f, Basis::PowerSum);
    GaussianRational acc(0);
    for (const auto& [rho, c] : fp.coeff) acc += c * GaussianRational(pow(m, rho.length()));
    return acc;
}

SymFunc characteristic_map(const CosetFunction& f) {
    const unsigned n = static_cast<unsigned>(f.n);
    SymFunc out;
    out.degree = n;
    out.basis = Basis::PowerSum;
    Rational hs = 1;  // |H(n)| = 2^n n!
    for (unsigned i = 1; i <= n; ++i) hs *= 2 * i;
    for (const auto& [rho, val] : f.values) {
        Rational w = hs / (Rational(z_weight(rho)) * pow(Rational(2), rho.length()));
        out.coeff[rho] += GaussianRational(w) * val;
    }
    return out.trim();
}

GeneratingIdentityReport check_generating_identity(const Rational& N, unsigned n, unsigned m_vars) {
    GeneratingIdentityReport rep;
    rep.n = n;
    if (m_vars < n) throw DomainError("need at least n variables for a degree-n comparison");
    // Degree-n coefficient of the specific monomial x^μ on the left equals
    // ∏_j binom(N/2 + μ_j - 1, μ_j); on the right it is the m_μ coefficient.
    auto binom_rising = [&](const Rational& a, unsigned e) {
        Rational r = 1;
        for (unsigned i = 0; i < e; ++i) r *= (a + i) / (i + 1);
        return r;
    };
    const Rational half = N / 2;
    auto jacks = jack_basis(n, Rational(2), false);

    std::map<Partition, Rational> rhs;
    for (const auto& jp : jacks) {
        Rational boxprod = 1;
        const auto& parts = jp.lambda.parts();
        for (unsigned i = 1; i <= parts.size(); ++i)
            for (unsigned j = 1; j <= parts[i - 1]; ++j)
                boxprod *= N + 2 * (static_cast<long>(j) - 1) - (static_cast<long>(i) - 1);
        const Rational scale = boxprod / Rational(hook_length_product(jp.lambda.doubled()));
        for (const auto& [mu, c] : jp.expansion.coeff) {
            if (mu.length() > m_vars) continue;
            if (!c.is_real()) throw InternalError("Jack coefficients must be rational");
            rhs[mu] += scale * c.re;
        }
    }
    for (const auto& mu : enumerate_partitions(n)) {
        if (mu.length() > m_vars) continue;
        Rational lhs = 1;
        for (unsigned part : mu.parts()) lhs *= binom_rising(half, part);
        Rational r = rhs.count(mu) ? rhs[mu] : Rational(0);
        if (lhs != r) {
            rep.pass = false;
            rep.counterexample = "m_" + mu.to_string() + ": " + to_string(lhs) + " vs " + to_string(r);
            return rep;
        }
    }
    return rep;
}

}  // namespace zm
