#include "zm/spherical.hpp"

#include <algorithm>

#include "zm/errors.hpp"
#include "zm/parallel.hpp"
#include "zm/symfunc.hpp"

namespace zm {

const Rational& SphericalTable::at(const Partition& lambda, const Partition& rho) const {
    auto it = values.find({lambda, rho});
    if (it == values.end())
        throw DomainError("no spherical value at " + lambda.to_string() + ", " + rho.to_string());
    return it->second;
}

SignedPermutation coset_representative(const Partition& rho, int n) {
    if (static_cast<int>(rho.size()) != n) throw DomainError("coset type must be a partition of n");
    // Block matching: circle of size k on points {a+1..a+k} has pairs
    // {a+i, -(a+i+1)} and the closing pair {a+k, -(a+1)}.
    std::vector<std::pair<int, int>> pairs;
    int base = 0;
    for (unsigned k : rho.parts()) {
        for (unsigned i = 1; i < k; ++i)
            pairs.emplace_back(base + static_cast<int>(i), -(base + static_cast<int>(i) + 1));
        pairs.emplace_back(base + static_cast<int>(k), -(base + 1));
        base += static_cast<int>(k);
    }
    // g sends the pair {-m, m} onto the m-th pair of the block matching.
    Matching target(n, pairs);
    auto ordered = target.pairs();
    std::vector<int> images(2 * static_cast<std::size_t>(n));
    auto slot = [&](int v) { return v < 0 ? v + n : n + v - 1; };
    for (int m = 1; m <= n; ++m) {
        images[static_cast<std::size_t>(slot(-m))] = ordered[static_cast<std::size_t>(m - 1)].first;
        images[static_cast<std::size_t>(slot(m))] = ordered[static_cast<std::size_t>(m - 1)].second;
    }
    auto g = SignedPermutation::from_images(n, images);
    if (coset_type(g) != rho) throw InternalError("coset representative has wrong type");
    return g;
}

std::map<Partition, Integer> matchings_by_type(int n, bool parallel) {
    using Acc = std::map<Partition, Integer>;
    const Integer total = double_factorial_odd(n);
    if (!total.fits_ulong_p()) throw CapacityError("matching space too large to scan");
    const std::size_t count = total.get_ui();
    if (n > kMatchingEnumBound)
        throw CapacityError("matching enumeration bound exceeded: n = " + std::to_string(n));
    return parallel_reduce(
        count, Acc{},
        [&](Acc& acc, std::size_t i) { acc[matching_type(matching_from_rank(n, Integer(static_cast<unsigned long>(i))))] += 1; },
        [](Acc a, Acc b) {
            for (auto& [k, v] : b) a[k] += v;
            return a;
        },
        parallel);
}

namespace {

SphericalTable zonal_table_jack(int n, bool parallel) {
    if (n > 8) throw CapacityError("Jack route bounded at n = 8");
    SphericalTable tbl;
    tbl.n = n;
    const auto jacks = jack_basis(static_cast<unsigned>(n), Rational(2), parallel);
    Rational hsize = 1;  // |H(n)| = 2^n n!
    for (int i = 1; i <= n; ++i) hsize *= 2 * i;
    for (const auto& jp : jacks) {
        SymFunc ps = convert_basis(jp.expansion, Basis::PowerSum);
        for (const auto& rho : enumerate_partitions(static_cast<unsigned>(n))) {
            GaussianRational c = ps.at(rho);
            if (!c.is_real()) throw InternalError("Jack expansion must be rational");
            tbl.values[{jp.lambda, rho}] =
                c.re * Rational(z_weight(rho)) * pow(Rational(2), rho.length()) / hsize;
        }
    }
    return tbl;
}

SphericalTable zonal_table_brute(int n, bool parallel) {
    if (n > 5) throw CapacityError("brute-force zonal route bounded at n = 5");
    SphericalTable tbl;
    tbl.n = n;
    const auto parts = enumerate_partitions(static_cast<unsigned>(n));
    const auto hgroup = enumerate_hyperoctahedral(n);
    std::vector<SignedPermutation> reps;
    reps.reserve(parts.size());
    for (const auto& rho : parts) reps.push_back(coset_representative(rho, n));

    std::vector<std::pair<Partition, Partition>> cells;
    for (const auto& lam : parts)
        for (const auto& rho : parts) cells.emplace_back(lam, rho);
    std::vector<Rational> vals(cells.size());
    parallel_for(
        cells.size(),
        [&](std::size_t c) {
            const auto& [lam, rho] = cells[c];
            const Partition two = lam.doubled();
            std::size_t rep_idx = 0;
            while (parts[rep_idx] != rho) ++rep_idx;
            const SignedPermutation& g = reps[rep_idx];
            Integer sum = 0;
            for (const auto& h : hgroup)
                sum += Integer(static_cast<long>(character(two, permutation_cycle_type(g.then(h)))));
            vals[c] = Rational(sum) / Rational(static_cast<long>(hgroup.size()));
        },
        parallel);
    for (std::size_t c = 0; c < cells.size(); ++c) tbl.values[cells[c]] = vals[c];
    return tbl;
}

}  // namespace

SphericalTable zonal_spherical_table(int n, ZonalRoute route, bool parallel) {
    return route == ZonalRoute::Jack ? zonal_table_jack(n, parallel) : zonal_table_brute(n, parallel);
}

SphericalTable zonal_spherical_table_checked(int n, int check_limit, bool parallel) {
    SphericalTable jack = zonal_table_jack(n, parallel);
    if (n <= check_limit) {
        SphericalTable brute = zonal_table_brute(n, parallel);
        if (jack.values != brute.values)
            throw InternalError("zonal spherical routes disagree at n = " + std::to_string(n));
    }
    return jack;
}

namespace {

struct PhiParts {
    Rational c_n;
    std::vector<GaussianRational> z_pow;     // z^k, k = 0..n
    std::vector<GaussianRational> zbar_pow;  // conj(z)^k
};

PhiParts phi_parts(const GaussianRational& z, int n) {
    if (z.is_zero()) throw DomainError("z must be nonzero");
    PhiParts pp;
    const Rational t = z.norm();
    pp.c_n = Rational(double_factorial_odd(n)) / ewens_denominator(t, n);
    pp.z_pow.resize(static_cast<std::size_t>(n) + 1);
    pp.zbar_pow.resize(static_cast<std::size_t>(n) + 1);
    for (int k = 0; k <= n; ++k) {
        pp.z_pow[static_cast<std::size_t>(k)] = pow(z, static_cast<unsigned long>(k));
        pp.zbar_pow[static_cast<std::size_t>(k)] = pow(z.conj(), static_cast<unsigned long>(k));
    }
    return pp;
}

}  // namespace

CosetFunction spherical_function_phi(const GaussianRational& z, int n, bool parallel) {
    if (n > 7) throw CapacityError("spherical scan bounded at n = 7");
    const PhiParts pp = phi_parts(z, n);
    const std::vector<Matching> xs = enumerate_matchings(n);
    std::vector<std::uint8_t> base_count(xs.size());
    parallel_for(
        xs.size(), [&](std::size_t i) { base_count[i] = static_cast<std::uint8_t>(cycle_count(xs[i])); },
        parallel);
    const Rational xsize(static_cast<long>(xs.size()));
    CosetFunction phi;
    phi.n = n;
    for (const auto& rho : enumerate_partitions(static_cast<unsigned>(n))) {
        const SignedPermutation g = coset_representative(rho, n);
        GaussianRational sum = parallel_reduce(
            xs.size(), GaussianRational(0),
            [&](GaussianRational& acc, std::size_t i) {
                acc += pp.z_pow[cycle_count(act(xs[i], g))] * pp.zbar_pow[base_count[i]];
            },
            [](GaussianRational a, GaussianRational b) { return a + b; },
            parallel);
        phi.values[rho] = GaussianRational(pp.c_n) * sum / GaussianRational(xsize);
    }
    return phi;
}

namespace reference {

CosetFunction spherical_function_phi(const GaussianRational& z, int n) {
    const PhiParts pp = phi_parts(z, n);
    const Integer xsize = double_factorial_odd(n);
    CosetFunction phi;
    phi.n = n;
    for (const auto& rho : enumerate_partitions(static_cast<unsigned>(n))) {
        const SignedPermutation g = coset_representative(rho, n);
        GaussianRational sum(0);
        for_each_matching(n, [&](const Matching& x) {
            sum += pp.z_pow[cycle_count(act(x, g))] * pp.zbar_pow[cycle_count(x)];
        });
        phi.values[rho] = GaussianRational(pp.c_n) * sum / GaussianRational(Rational(xsize));
    }
    return phi;
}

SphericalTable zonal_brute_table(int n) { return zonal_table_brute(n, false); }

}  // namespace reference

MeasureTable zmeasure_by_inner_product(const GaussianRational& z, int n, bool parallel) {
    if (n > 5) throw CapacityError("inner-product measure bounded at n = 5");
    const PhiParts pp = phi_parts(z, n);
    const auto counts = matchings_by_type(n, parallel);
    const SphericalTable w = zonal_spherical_table(n, ZonalRoute::Jack, parallel);
    const Rational xsize(double_factorial_odd(n));

    MeasureTable table;
    table.n = static_cast<unsigned>(n);
    table.params = "inner-product z=" + to_string(z) + " n=" + std::to_string(n);
    for (const auto& lam : enumerate_partitions(static_cast<unsigned>(n))) {
        GaussianRational overlap(0);  // (1/|X|) Σ_x z^{[x]} w^λ(type x)
        for (const auto& [rho, cnt] : counts)
            overlap += pp.z_pow[rho.length()] * GaussianRational(Rational(cnt) * w.at(lam, rho));
        overlap /= GaussianRational(xsize);
        Rational m = Rational(dimension(lam.doubled())) * pp.c_n * overlap.norm();
        table.entries.emplace_back(lam, GaussianRational(m));
    }
    table.normalized = table.sum() == GaussianRational(1);
    if (!table.normalized) throw InternalError("inner-product measure failed to normalize");
    return table;
}

GaussianRational explicit_zmeasure(const GaussianRational& z, int n, const Partition& lambda) {
    if (z.is_zero()) throw DomainError("z must be nonzero");
    if (lambda.size() != static_cast<unsigned>(n)) throw DomainError("|lambda| must equal n");
    Integer nfact = 1;
    for (int i = 2; i <= n; ++i) nfact *= i;
    const GaussianRational t_half(z.norm() / 2);
    const GaussianRational denom = pochhammer(t_half, static_cast<unsigned>(n));
    GaussianRational boxes(1);
    const auto& parts = lambda.parts();
    for (unsigned i = 1; i <= parts.size(); ++i) {
        for (unsigned j = 1; j <= parts[i - 1]; ++j) {
            const GaussianRational shift(Rational(2 * (static_cast<long>(j) - 1) - (static_cast<long>(i) - 1)));
            boxes *= (z + shift) * (z.conj() + shift);
        }
    }
    return GaussianRational(Rational(nfact)) * boxes /
           (denom * GaussianRational(Rational(hook_length_product(lambda.doubled()))));
}

CheckReport check_spherical_orthogonality(int n, bool exhaustive_reproducing) {
    CheckReport rep;
    rep.n = n;
    const auto parts = enumerate_partitions(static_cast<unsigned>(n));
    const SphericalTable w = zonal_spherical_table_checked(n);
    const auto counts = matchings_by_type(n);
    const Rational xsize(double_factorial_odd(n));
    const Partition identity_type(std::vector<unsigned>(static_cast<std::size_t>(n), 1));

    for (const auto& lam : parts) {
        if (w.at(lam, identity_type) != 1) {
            rep.pass = false;
            rep.counterexample = "w^" + lam.to_string() + "(e) != 1";
            return rep;
        }
    }
    for (const auto& lam : parts) {
        for (const auto& mu : parts) {
            Rational ip(0);
            for (const auto& [rho, cnt] : counts) ip += Rational(cnt) * w.at(lam, rho) * w.at(mu, rho);
            ip /= xsize;
            const Rational expected =
                lam == mu ? Rational(1) / Rational(dimension(lam.doubled())) : Rational(0);
            if (ip != expected) {
                rep.pass = false;
                rep.counterexample = "(w^" + lam.to_string() + ", w^" + mu.to_string() + ") = " +
                                     to_string(ip);
                return rep;
            }
        }
    }
    if (exhaustive_reproducing) {
        if (n > 3) throw CapacityError("exhaustive reproducing check bounded at n = 3");
        const auto xs = enumerate_matchings(n);
        std::vector<Partition> types;
        types.reserve(xs.size());
        for (const auto& x : xs) types.push_back(matching_type(x));
        std::string bad;
        bool ok = true;
        for_each_permutation(n, [&](const SignedPermutation& g) {
            if (!ok) return;
            std::vector<Partition> acted;
            acted.reserve(xs.size());
            for (const auto& x : xs) acted.push_back(matching_type(act(x, g)));
            const Partition gtype = coset_type(g);
            for (const auto& lam : parts) {
                for (const auto& mu : parts) {
                    Rational lhs(0);
                    for (std::size_t i = 0; i < xs.size(); ++i)
                        lhs += w.at(lam, acted[i]) * w.at(mu, types[i]);
                    lhs /= xsize;
                    Rational rhs = lam == mu
                                       ? w.at(lam, gtype) / Rational(dimension(lam.doubled()))
                                       : Rational(0);
                    if (lhs != rhs) {
                        ok = false;
                        bad = "reproducing identity at g = " + g.to_string();
                        return;
                    }
                }
            }
        });
        if (!ok) {
            rep.pass = false;
            rep.counterexample = bad;
        }
    }
    return rep;
}

CheckReport check_decomposition(const GaussianRational& z, int n, bool exhaustive) {
    CheckReport rep;
    rep.n = n;
    const CosetFunction phi = spherical_function_phi(z, n);
    const MeasureTable m = zmeasure_by_inner_product(z, n);
    const SphericalTable w = zonal_spherical_table(n, ZonalRoute::Jack);
    for (const auto& [rho, lhs] : phi.values) {
        GaussianRational rhs(0);
        for (const auto& [lam, weight] : m.entries) rhs += weight * GaussianRational(w.at(lam, rho));
        if (lhs != rhs) {
            rep.pass = false;
            rep.counterexample = "coset type " + rho.to_string() + ": phi = " + to_string(lhs) +
                                 ", sum = " + to_string(rhs);
            return rep;
        }
    }
    if (exhaustive) {
        if (n > 3) throw CapacityError("exhaustive double-coset scan bounded at n = 3");
        // φ_z(g) recomputed from scratch for every g must coincide with the
        // tabulated value of its coset type.
        const PhiParts pp = phi_parts(z, n);
        const auto xs = enumerate_matchings(n);
        const Rational xsize(double_factorial_odd(n));
        std::string bad;
        bool ok = true;
        for_each_permutation(n, [&](const SignedPermutation& g) {
            if (!ok) return;
            GaussianRational sum(0);
            for (const auto& x : xs)
                sum += pp.z_pow[cycle_count(act(x, g))] * pp.zbar_pow[cycle_count(x)];
            GaussianRational val = GaussianRational(pp.c_n) * sum / GaussianRational(xsize);
            if (val != phi.at(coset_type(g))) {
                ok = false;
                bad = "phi not constant on double coset of " + g.to_string();
            }
        });
        if (!ok) {
            rep.pass = false;
            rep.counterexample = bad;
        }
    }
    return rep;
}

CheckReport check_explicit_formula(const GaussianRational& z, int n) {
    CheckReport rep;
    rep.n = n;
    const MeasureTable inner = zmeasure_by_inner_product(z, n);
    // The general-θ measure matching this one lives at (z/2, conj(z)/2, 1/2).
    ZMeasureParams sec2;
    sec2.z = z / GaussianRational(2);
    sec2.zp = z.conj() / GaussianRational(2);
    sec2.theta = Rational(1, 2);
    sec2.n = static_cast<unsigned>(n);
    for (const auto& [lam, viaInner] : inner.entries) {
        const GaussianRational viaHooks = explicit_zmeasure(z, n, lam);
        const GaussianRational viaTheta = zmeasure_weight(sec2, lam);
        if (viaHooks != viaInner) {
            rep.pass = false;
            rep.counterexample = "explicit vs inner-product at " + lam.to_string();
            return rep;
        }
        if (viaTheta != viaInner) {
            rep.pass = false;
            rep.counterexample = "theta=1/2 correspondence at " + lam.to_string();
            return rep;
        }
    }
    return rep;
}

namespace {

using Vec = std::vector<GaussianRational>;

// Rank of a list of vectors by exact Gaussian elimination.
std::size_t rank_of(std::vector<Vec> rows) {
    std::size_t rank = 0;
    const std::size_t cols = rows.empty() ? 0 : rows[0].size();
    std::size_t col = 0;
    for (std::size_t r = 0; r < rows.size() && col < cols; ++col) {
        std::size_t piv = r;
        while (piv < rows.size() && rows[piv][col].is_zero()) ++piv;
        if (piv == rows.size()) continue;
        std::swap(rows[r], rows[piv]);
        const GaussianRational inv = GaussianRational(1) / rows[r][col];
        for (auto& x : rows[r]) x *= inv;
        for (std::size_t rr = 0; rr < rows.size(); ++rr) {
            if (rr == r || rows[rr][col].is_zero()) continue;
            const GaussianRational f = rows[rr][col];
            for (std::size_t c = 0; c < cols; ++c) rows[rr][c] -= f * rows[r][c];
        }
        ++r;
        ++rank;
    }
    return rank;
}

}  // namespace

CheckReport check_embedding(const GaussianRational& z, int n) {
    CheckReport rep;
    rep.n = n;
    if (n > 4) throw CapacityError("embedding check bounded at n = 4");
    if (z.is_zero()) throw DomainError("z must be nonzero");
    const auto xs = enumerate_matchings(n);
    const auto ups = enumerate_matchings(n + 1);
    std::map<Matching, std::size_t> low_index, up_index;
    for (std::size_t i = 0; i < xs.size(); ++i) low_index[xs[i]] = i;
    for (std::size_t i = 0; i < ups.size(); ++i) up_index[ups[i]] = i;

    const Rational t = z.norm();
    const Rational s2 = Rational(2 * n + 1) / (Rational(2 * n) + t);

    // L without the common factor s = sqrt(s2).
    auto apply_L = [&](const Vec& f) {
        Vec out(ups.size(), GaussianRational(0));
        for (std::size_t i = 0; i < ups.size(); ++i) {
            const Matching& up = ups[i];
            const std::size_t j = low_index.at(canonical_projection(up));
            out[i] = up.has_diagonal_pair(n + 1) ? z * f[j] : f[j];
        }
        return out;
    };
    auto inner_low = [&](const Vec& a, const Vec& b) {
        GaussianRational acc(0);
        for (std::size_t i = 0; i < xs.size(); ++i) acc += a[i] * b[i].conj();
        return acc / GaussianRational(Rational(static_cast<long>(xs.size())));
    };
    auto inner_up = [&](const Vec& a, const Vec& b) {
        GaussianRational acc(0);
        for (std::size_t i = 0; i < ups.size(); ++i) acc += a[i] * b[i].conj();
        return acc / GaussianRational(Rational(static_cast<long>(ups.size())));
    };

    // Isometry on the indicator basis: s² (Lδ_y, Lδ_y') = (δ_y, δ_y').
    std::vector<Vec> lifted(xs.size());
    for (std::size_t y = 0; y < xs.size(); ++y) {
        Vec f(xs.size(), GaussianRational(0));
        f[y] = GaussianRational(1);
        lifted[y] = apply_L(f);
    }
    for (std::size_t a = 0; a < xs.size(); ++a) {
        Vec da(xs.size(), GaussianRational(0));
        da[a] = GaussianRational(1);
        for (std::size_t b = a; b < xs.size(); ++b) {
            Vec db(xs.size(), GaussianRational(0));
            db[b] = GaussianRational(1);
            GaussianRational lhs = GaussianRational(s2) * inner_up(lifted[a], lifted[b]);
            GaussianRational rhs = inner_low(da, db);
            if (lhs != rhs) {
                rep.pass = false;
                rep.counterexample = "isometry fails on indicators " + xs[a].to_string() + ", " +
                                     xs[b].to_string();
                return rep;
            }
        }
    }

    // Intertwining on all transpositions of S(2n): L(f∘g) = (Lf)∘g-lifted.
    auto act_on_vec_low = [&](const Vec& f, const SignedPermutation& g) {
        Vec out(xs.size());
        for (std::size_t i = 0; i < xs.size(); ++i) out[i] = f[low_index.at(act(xs[i], g))];
        return out;
    };
    auto act_on_vec_up = [&](const Vec& f, const SignedPermutation& g) {
        Vec out(ups.size());
        for (std::size_t i = 0; i < ups.size(); ++i) out[i] = f[up_index.at(act(ups[i], g))];
        return out;
    };
    for (const auto& g : all_transpositions(n)) {
        const SignedPermutation gup = g.lift(n + 1);
        for (std::size_t y = 0; y < xs.size(); ++y) {
            Vec f(xs.size(), GaussianRational(0));
            f[y] = GaussianRational(1);
            if (apply_L(act_on_vec_low(f, g)) != act_on_vec_up(lifted[y], gup)) {
                rep.pass = false;
                rep.counterexample = "intertwining fails at transposition " + g.to_string();
                return rep;
            }
        }
    }

    // Cyclic-subspace stability (small n): span{L(f0∘g)} ⊆ span{(Lf0)∘h}.
    if (n <= 2) {
        Vec f0(xs.size());
        for (std::size_t i = 0; i < xs.size(); ++i)
            f0[i] = pow(z, cycle_count(xs[i]));
        std::vector<Vec> big;
        for_each_permutation(n + 1, [&](const SignedPermutation& h) {
            big.push_back(act_on_vec_up(apply_L(f0), h));
        });
        const std::size_t base_rank = rank_of(big);
        bool ok = true;
        for_each_permutation(n, [&](const SignedPermutation& g) {
            if (!ok) return;
            auto probe = big;
            probe.push_back(apply_L(act_on_vec_low(f0, g)));
            if (rank_of(probe) != base_rank) ok = false;
        });
        if (!ok) {
            rep.pass = false;
            rep.counterexample = "lifted cyclic subspace escapes";
            return rep;
        }
    }
    return rep;
}

}  // namespace zm
