#include "zm/verify.hpp"

#include <json.hpp>

#include <algorithm>
#include <chrono>
#include <map>

#include "zm/errors.hpp"
#include "zm/matching.hpp"
#include "zm/parallel.hpp"
#include "zm/perm.hpp"
#include "zm/random.hpp"
#include "zm/spherical.hpp"
#include "zm/symfunc.hpp"
#include "zm/zmeasure.hpp"

namespace zm {

bool VerifyReport::all_pass() const {
    return std::all_of(cases.begin(), cases.end(), [](const VerifyCase& c) { return c.pass; });
}

const std::vector<std::string>& suite_names() {
    static const std::vector<std::string> names = {
        "normalization", "transposition",     "pushforward", "cocycle",
        "quasi-invariance", "orthogonality",  "decomposition", "explicit-formula",
        "embedding",     "generating-identity"};
    return names;
}

namespace {

using Clock = std::chrono::steady_clock;

struct GridPoint {
    GaussianRational z;
    GaussianRational zp;
    Rational theta;
};

// The documented parameter grid for the measure-level identities.
std::vector<GridPoint> parameter_grid(const VerifyOptions& opt) {
    std::vector<GridPoint> grid;
    std::vector<GaussianRational> zs;
    if (opt.z)
        zs.push_back(*opt.z);
    else
        zs = {GaussianRational(2), GaussianRational(Rational(5, 3)), GaussianRational(Rational(1), Rational(1))};
    std::vector<Rational> thetas;
    if (opt.theta)
        thetas.push_back(*opt.theta);
    else
        thetas = {Rational(1, 2), Rational(1), Rational(2)};
    for (const auto& z : zs) {
        std::vector<GaussianRational> zps;
        if (opt.zp)
            zps.push_back(*opt.zp);
        else
            zps = {GaussianRational(3), z.conj()};
        for (const auto& zp : zps)
            for (const auto& th : thetas) grid.push_back({z, zp, th});
    }
    return grid;
}

std::vector<Rational> t_values(const VerifyOptions& opt, std::vector<Rational> defaults) {
    if (opt.t) return {*opt.t};
    return defaults;
}

std::vector<GaussianRational> z_values(const VerifyOptions& opt, std::vector<GaussianRational> defaults) {
    if (opt.z) return {*opt.z};
    return defaults;
}

// Levels to run: a single --n, or 1..cap with --max-n lowering the default.
std::vector<int> levels(const VerifyOptions& opt, int default_cap) {
    if (opt.n > 0) return {opt.n};
    int cap = opt.max_n > 0 ? opt.max_n : default_cap;
    std::vector<int> out;
    for (int k = 1; k <= cap; ++k) out.push_back(k);
    return out;
}

void suite_normalization(const VerifyOptions& opt, VerifyReport& rep) {
    for (const auto& gp : parameter_grid(opt)) {
        VerifyCase c;
        c.identity = "normalization";
        c.anchor = "sum over |lambda|=n of M_{z,z',theta}(lambda) = 1";
        c.params = "z=" + to_string(gp.z) + " z'=" + to_string(gp.zp) + " theta=" + to_string(gp.theta);
        c.pass = true;
        for (int n : levels(opt, 20)) {
            c.n = n;
            ZMeasureParams params{gp.z, gp.zp, gp.theta, static_cast<unsigned>(n)};
            MeasureTable tbl = zmeasure_table(params, opt.parallel);
            if (!tbl.normalized) {
                c.pass = false;
                c.counterexample = "sum = " + to_string(tbl.sum()) + " at n = " + std::to_string(n);
                break;
            }
        }
        rep.cases.push_back(std::move(c));
    }
    // Plancherel limit tables normalize as well.
    for (const Rational& th : {Rational(1, 2), Rational(1), Rational(2)}) {
        VerifyCase c;
        c.identity = "plancherel-normalization";
        c.anchor = "sum over |lambda|=n of n! theta^n / (H H') = 1";
        c.params = "theta=" + to_string(th);
        c.pass = true;
        for (int n : levels(opt, 20)) {
            c.n = n;
            if (!plancherel_table(th, static_cast<unsigned>(n), opt.parallel).normalized) {
                c.pass = false;
                c.counterexample = "n = " + std::to_string(n);
                break;
            }
        }
        rep.cases.push_back(std::move(c));
    }
}

void suite_transposition(const VerifyOptions& opt, VerifyReport& rep) {
    for (const auto& gp : parameter_grid(opt)) {
        VerifyCase c;
        c.identity = "transposition";
        c.anchor = "M_{z,z',theta}(lambda) = M_{-z/theta,-z'/theta,1/theta}(lambda')";
        c.params = "z=" + to_string(gp.z) + " z'=" + to_string(gp.zp) + " theta=" + to_string(gp.theta);
        c.pass = true;
        for (int n : levels(opt, 10)) {
            c.n = n;
            ZMeasureParams params{gp.z, gp.zp, gp.theta, static_cast<unsigned>(n)};
            auto r = check_transposition_symmetry(params);
            if (!r.pass) {
                c.pass = false;
                c.counterexample = r.counterexample + " at n = " + std::to_string(n);
                break;
            }
        }
        rep.cases.push_back(std::move(c));
    }
}

void suite_pushforward(const VerifyOptions& opt, VerifyReport& rep) {
    for (const Rational& t : t_values(opt, {Rational(1, 2), Rational(1), Rational(3, 2), Rational(5)})) {
        {
            VerifyCase c;
            c.identity = "ewens-normalization";
            c.anchor = "sum over X(n) of t^{[x]_n} / (t(t+2)...(t+2n-2)) = 1";
            c.params = "t=" + to_string(t);
            c.pass = true;
            for (int n : levels(opt, 5)) {
                c.n = n;
                Rational sum = 0;
                for_each_matching(n, [&](const Matching& x) { sum += ewens_weight(t, x); });
                if (sum != 1) {
                    c.pass = false;
                    c.counterexample = "sum = " + to_string(sum) + " at n = " + std::to_string(n);
                    break;
                }
            }
            rep.cases.push_back(std::move(c));
        }
        {
            VerifyCase c;
            c.identity = "pushforward";
            c.anchor = "mu_t^{n+1}(p_{n,n+1}^{-1}{x}) = mu_t^n(x)";
            c.params = "t=" + to_string(t);
            c.pass = true;
            for (int n : levels(opt, 5)) {
                c.n = n;
                auto r = check_pushforward(t, n, opt.parallel);
                if (!r.pass) {
                    c.pass = false;
                    c.counterexample = r.counterexample + " at n = " + std::to_string(n);
                    break;
                }
            }
            rep.cases.push_back(std::move(c));
        }
    }
}

// Index tables for one level: all of S(2n), composition ranks, and the
// cocycle matrix C[x][g] = [x.g] - [x] over all x in X(n).
struct GroupTables {
    std::vector<SignedPermutation> perms;
    std::map<std::vector<std::int8_t>, std::size_t> perm_index;
    std::vector<Matching> xs;
    std::map<Matching, std::size_t> x_index;
    std::vector<std::vector<std::int16_t>> cocycles;  // [x][g]
    std::vector<std::vector<std::size_t>> acted;      // [x][g] -> index of x.g
};

GroupTables group_tables(int n, bool parallel) {
    GroupTables gt;
    gt.perms = enumerate_permutations(n);
    for (std::size_t i = 0; i < gt.perms.size(); ++i) gt.perm_index[gt.perms[i].raw()] = i;
    gt.xs = enumerate_matchings(n);
    for (std::size_t i = 0; i < gt.xs.size(); ++i) gt.x_index[gt.xs[i]] = i;
    gt.cocycles.assign(gt.xs.size(), {});
    gt.acted.assign(gt.xs.size(), {});
    parallel_for(
        gt.xs.size(),
        [&](std::size_t xi) {
            const int base = static_cast<int>(cycle_count(gt.xs[xi]));
            auto& row = gt.cocycles[xi];
            auto& arow = gt.acted[xi];
            row.resize(gt.perms.size());
            arow.resize(gt.perms.size());
            for (std::size_t gi = 0; gi < gt.perms.size(); ++gi) {
                Matching moved = act(gt.xs[xi], gt.perms[gi]);
                row[gi] = static_cast<std::int16_t>(static_cast<int>(cycle_count(moved)) - base);
                arow[gi] = gt.x_index.at(moved);
            }
        },
        parallel);
    return gt;
}

void suite_cocycle(const VerifyOptions& opt, VerifyReport& rep) {
    // Stability under the level lift, exhaustive for small n.
    {
        VerifyCase c;
        c.identity = "cocycle-stability";
        c.anchor = "[p(x).g]_n - [p(x)]_n = [x.g]_{n+1} - [x]_{n+1}";
        c.pass = true;
        for (int n : levels(opt, 3)) {
            c.n = n;
            const auto uppers = enumerate_matchings(n + 1);
            const auto gens = enumerate_permutations(n);
            std::vector<std::string> bads(uppers.size());
            parallel_for(
                uppers.size(),
                [&](std::size_t i) {
                    const Matching& up = uppers[i];
                    const Matching down = canonical_projection(up);
                    for (const auto& g : gens) {
                        if (cocycle(down, g) != cocycle(up, g.lift(n + 1))) {
                            bads[i] = up.to_string() + " with g = " + g.to_string();
                            return;
                        }
                    }
                },
                opt.parallel);
            for (const auto& bad : bads) {
                if (!bad.empty()) {
                    c.pass = false;
                    c.counterexample = bad + " at n = " + std::to_string(n);
                    break;
                }
            }
            if (!c.pass) break;
        }
        rep.cases.push_back(std::move(c));
    }
    // Randomized stability at n = 4.
    if (opt.n < 0 && (opt.max_n < 0 || opt.max_n >= 4)) {
        VerifyCase c;
        c.identity = "cocycle-stability-randomized";
        c.anchor = "[p(x).g]_n - [p(x)]_n = [x.g]_{n+1} - [x]_{n+1}";
        c.n = 4;
        c.params = "10^4 random cases, seed 20260810";
        c.pass = true;
        Rng rng(20260810);
        const Integer upper_count = double_factorial_odd(5);
        for (int trial = 0; trial < 10000; ++trial) {
            Matching up = matching_from_rank(5, uniform_below(rng, upper_count));
            // random permutation of S(8) by Fisher-Yates over one-line images
            std::vector<int> im;
            for (int v = -4; v <= 4; ++v)
                if (v != 0) im.push_back(v);
            for (std::size_t i = im.size(); i > 1; --i)
                std::swap(im[i - 1], im[uniform_below(rng, static_cast<std::uint64_t>(i))]);
            SignedPermutation g = SignedPermutation::from_images(4, im);
            if (cocycle(canonical_projection(up), g) != cocycle(up, g.lift(5))) {
                c.pass = false;
                c.counterexample = up.to_string() + " with g = " + g.to_string();
                break;
            }
        }
        rep.cases.push_back(std::move(c));
    }
    // Additivity c(x; gh) = c(x.g; h) + c(x; g), exhaustive over S(2n)^2.
    {
        VerifyCase c;
        c.identity = "cocycle-additivity";
        c.anchor = "c(x; g h) = c(x.g; h) + c(x; g)";
        c.pass = true;
        for (int n : levels(opt, 3)) {
            c.n = n;
            GroupTables gt = group_tables(n, opt.parallel);
            std::vector<std::size_t> comp(gt.perms.size() * gt.perms.size());
            parallel_for(
                gt.perms.size(),
                [&](std::size_t gi) {
                    for (std::size_t hi = 0; hi < gt.perms.size(); ++hi)
                        comp[gi * gt.perms.size() + hi] =
                            gt.perm_index.at(gt.perms[gi].then(gt.perms[hi]).raw());
                },
                opt.parallel);
            std::vector<std::string> bads(gt.xs.size());
            parallel_for(
                gt.xs.size(),
                [&](std::size_t xi) {
                    for (std::size_t gi = 0; gi < gt.perms.size(); ++gi) {
                        const std::size_t xg = gt.acted[xi][gi];
                        const int c1 = gt.cocycles[xi][gi];
                        if (std::abs(c1) > n - 1) {
                            bads[xi] = "cocycle out of range at x = " + gt.xs[xi].to_string();
                            return;
                        }
                        for (std::size_t hi = 0; hi < gt.perms.size(); ++hi) {
                            const int lhs = gt.cocycles[xi][comp[gi * gt.perms.size() + hi]];
                            if (lhs != gt.cocycles[xg][hi] + c1) {
                                bads[xi] = gt.xs[xi].to_string() + " with g = " +
                                           gt.perms[gi].to_string() + ", h = " + gt.perms[hi].to_string();
                                return;
                            }
                        }
                    }
                },
                opt.parallel);
            for (const auto& bad : bads) {
                if (!bad.empty()) {
                    c.pass = false;
                    c.counterexample = bad + " at n = " + std::to_string(n);
                    break;
                }
            }
            if (!c.pass) break;
        }
        rep.cases.push_back(std::move(c));
    }
    // Randomized additivity at n = 4.
    if (opt.n < 0 && (opt.max_n < 0 || opt.max_n >= 4)) {
        VerifyCase c;
        c.identity = "cocycle-additivity-randomized";
        c.anchor = "c(x; g h) = c(x.g; h) + c(x; g)";
        c.n = 4;
        c.params = "10^4 random cases, seed 20260811";
        c.pass = true;
        Rng rng(20260811);
        const Integer xcount = double_factorial_odd(4);
        auto random_perm = [&]() {
            std::vector<int> im;
            for (int v = -4; v <= 4; ++v)
                if (v != 0) im.push_back(v);
            for (std::size_t i = im.size(); i > 1; --i)
                std::swap(im[i - 1], im[uniform_below(rng, static_cast<std::uint64_t>(i))]);
            return SignedPermutation::from_images(4, im);
        };
        for (int trial = 0; trial < 10000; ++trial) {
            Matching x = matching_from_rank(4, uniform_below(rng, xcount));
            SignedPermutation g = random_perm(), h = random_perm();
            if (cocycle(x, g.then(h)) != cocycle(act(x, g), h) + cocycle(x, g)) {
                c.pass = false;
                c.counterexample = x.to_string();
                break;
            }
        }
        rep.cases.push_back(std::move(c));
    }
    // Hyperoctahedral elements never change the cycle count; transposition
    // merges across cycles always drop it by one.
    {
        VerifyCase c;
        c.identity = "cocycle-cases";
        c.anchor = "c(x; h) = 0 for h in H(n); c(x; (i j)) = -1 when i, j lie in different cycles";
        c.pass = true;
        for (int n : levels(opt, 3)) {
            c.n = n;
            const auto xs = enumerate_matchings(n);
            for (const auto& h : enumerate_hyperoctahedral(n)) {
                for (const auto& x : xs) {
                    if (cocycle(x, h) != 0) {
                        c.pass = false;
                        c.counterexample = "H-element moved the cycle count at " + x.to_string();
                        break;
                    }
                }
                if (!c.pass) break;
            }
            if (!c.pass) break;
            for (const auto& x : xs) {
                auto dec = cycle_decomposition(x);
                auto cycle_of = [&](int v) {
                    for (std::size_t ci = 0; ci < dec.cycles.size(); ++ci)
                        for (int e : dec.cycles[ci].elements)
                            if (e == v) return ci;
                    throw InternalError("element missing from cycle decomposition");
                };
                for (const auto& g : all_transpositions(n)) {
                    // recover the two moved points
                    int i = 0, j = 0;
                    for (int v = -n; v <= n; ++v) {
                        if (v == 0) continue;
                        if (g.apply(v) != v) {
                            if (i == 0)
                                i = v;
                            else
                                j = v;
                        }
                    }
                    const int cc = cocycle(x, g);
                    const bool same = cycle_of(i) == cycle_of(j);
                    if ((!same && cc != -1) || (same && cc != 0 && cc != 1)) {
                        c.pass = false;
                        c.counterexample =
                            x.to_string() + " with " + g.to_string() + ": c = " + std::to_string(cc);
                        break;
                    }
                }
                if (!c.pass) break;
            }
            if (!c.pass) break;
        }
        rep.cases.push_back(std::move(c));
    }
}

void suite_quasi_invariance(const VerifyOptions& opt, VerifyReport& rep) {
    for (const Rational& t : t_values(opt, {Rational(1, 2), Rational(1), Rational(2)})) {
        VerifyCase c;
        c.identity = "quasi-invariance";
        c.anchor = "mu_t({x.g}) = t^{[x.g]_n - [x]_n} mu_t({x})";
        c.params = "t=" + to_string(t);
        c.pass = true;
        for (int n : levels(opt, 4)) {
            c.n = n;
            auto r = check_quasi_invariance(t, n, opt.parallel);
            if (!r.pass) {
                c.pass = false;
                c.counterexample = r.counterexample + " at n = " + std::to_string(n);
                break;
            }
        }
        rep.cases.push_back(std::move(c));
    }
}

void suite_orthogonality(const VerifyOptions& opt, VerifyReport& rep) {
    {
        VerifyCase c;
        c.identity = "zonal-routes";
        c.anchor = "H(n)-average of chi^{2 lambda} equals the power-sum expansion of J^{(2)}";
        c.pass = true;
        for (int n : levels(opt, 3)) {
            c.n = n;
            try {
                (void)zonal_spherical_table_checked(n, /*check_limit=*/5, opt.parallel);
            } catch (const InternalError& e) {
                c.pass = false;
                c.counterexample = e.what();
                break;
            }
        }
        rep.cases.push_back(std::move(c));
    }
    {
        VerifyCase c;
        c.identity = "orthogonality";
        c.anchor = "w^lambda(e) = 1; (w^lambda, w^mu) = delta / dim 2lambda; reproducing identity";
        c.pass = true;
        for (int n : levels(opt, 3)) {
            c.n = n;
            auto r = check_spherical_orthogonality(n, /*exhaustive_reproducing=*/n <= 3);
            if (!r.pass) {
                c.pass = false;
                c.counterexample = r.counterexample + " at n = " + std::to_string(n);
                break;
            }
        }
        rep.cases.push_back(std::move(c));
    }
}

void suite_decomposition(const VerifyOptions& opt, VerifyReport& rep) {
    for (const auto& z : z_values(opt, {GaussianRational(2), GaussianRational(Rational(1), Rational(1)),
                                        GaussianRational(Rational(5, 3))})) {
        VerifyCase c;
        c.identity = "decomposition";
        c.anchor = "phi_z|S(2n)(g) = sum over |lambda|=n of M(lambda) w^lambda(g)";
        c.params = "z=" + to_string(z);
        c.pass = true;
        for (int n : levels(opt, 3)) {
            c.n = n;
            auto r = check_decomposition(z, n, /*exhaustive=*/n <= 3);
            if (!r.pass) {
                c.pass = false;
                c.counterexample = r.counterexample + " at n = " + std::to_string(n);
                break;
            }
        }
        rep.cases.push_back(std::move(c));
    }
}

void suite_explicit_formula(const VerifyOptions& opt, VerifyReport& rep) {
    {
        VerifyCase c;
        c.identity = "hook-reconciliation";
        c.anchor = "h(2 lambda) = 4^n H(lambda,1/2) H'(lambda,1/2)";
        c.pass = true;
        for (int n : levels(opt, 10)) {
            c.n = n;
            for (const auto& lam : enumerate_partitions(static_cast<unsigned>(n))) {
                auto hooks = hook_products(lam, Rational(1, 2));
                if (Rational(hook_length_product(lam.doubled())) !=
                    pow(Rational(4), static_cast<unsigned>(n)) * hooks.h * hooks.h_prime) {
                    c.pass = false;
                    c.counterexample = lam.to_string();
                    break;
                }
            }
            if (!c.pass) break;
        }
        rep.cases.push_back(std::move(c));
    }
    for (const auto& z : z_values(opt, {GaussianRational(2), GaussianRational(Rational(1), Rational(1)),
                                        GaussianRational(Rational(5, 3))})) {
        VerifyCase c;
        c.identity = "explicit-formula";
        c.anchor =
            "M(lambda) = n!/( (z zbar/2)_n ) prod (z+2(j-1)-(i-1))(zbar+2(j-1)-(i-1)) / h(2 lambda)"
            " = M_{z/2, zbar/2, theta=1/2}(lambda)";
        c.params = "z=" + to_string(z);
        c.pass = true;
        for (int n : levels(opt, 4)) {
            c.n = n;
            auto r = check_explicit_formula(z, n);
            if (!r.pass) {
                c.pass = false;
                c.counterexample = r.counterexample + " at n = " + std::to_string(n);
                break;
            }
        }
        rep.cases.push_back(std::move(c));
    }
}

void suite_embedding(const VerifyOptions& opt, VerifyReport& rep) {
    for (const auto& z : z_values(opt, {GaussianRational(2), GaussianRational(Rational(1), Rational(1))})) {
        VerifyCase c;
        c.identity = "embedding";
        c.anchor = "L_z isometry and intertwining between consecutive regular representations";
        c.params = "z=" + to_string(z);
        c.pass = true;
        for (int n : levels(opt, 3)) {
            c.n = n;
            auto r = check_embedding(z, n);
            if (!r.pass) {
                c.pass = false;
                c.counterexample = r.counterexample + " at n = " + std::to_string(n);
                break;
            }
        }
        rep.cases.push_back(std::move(c));
    }
}

void suite_generating_identity(const VerifyOptions& opt, VerifyReport& rep) {
    for (const Rational& N : {Rational(2), Rational(4), Rational(7, 3)}) {
        VerifyCase c;
        c.identity = "generating-identity";
        c.anchor =
            "degree-n part of prod (1-x_i)^{-N/2} = sum J^{(2)}_lambda(x) prod(N+2(j-1)-(i-1)) / h(2 lambda)";
        c.params = "N=" + to_string(N) + " m=3";
        c.pass = true;
        for (int n : levels(opt, 3)) {
            c.n = n;
            auto r = check_generating_identity(N, static_cast<unsigned>(n), 3);
            if (!r.pass) {
                c.pass = false;
                c.counterexample = r.counterexample + " at n = " + std::to_string(n);
                break;
            }
        }
        rep.cases.push_back(std::move(c));
    }
}

}  // namespace

VerifyReport run_suite(const std::string& suite, const VerifyOptions& opt) {
    VerifyReport rep;
    rep.suite = suite;
    const auto start = Clock::now();
    auto dispatch = [&](const std::string& name) {
        if (name == "normalization") suite_normalization(opt, rep);
        else if (name == "transposition") suite_transposition(opt, rep);
        else if (name == "pushforward") suite_pushforward(opt, rep);
        else if (name == "cocycle") suite_cocycle(opt, rep);
        else if (name == "quasi-invariance") suite_quasi_invariance(opt, rep);
        else if (name == "orthogonality") suite_orthogonality(opt, rep);
        else if (name == "decomposition") suite_decomposition(opt, rep);
        else if (name == "explicit-formula") suite_explicit_formula(opt, rep);
        else if (name == "embedding") suite_embedding(opt, rep);
        else if (name == "generating-identity") suite_generating_identity(opt, rep);
        else throw ParseError("unknown suite: " + name);
    };
    if (suite == "all") {
        for (const auto& name : suite_names()) dispatch(name);
    } else {
        dispatch(suite);
    }
    rep.elapsed_ms =
        std::chrono::duration_cast<std::chrono::duration<double, std::milli>>(Clock::now() - start)
            .count();
    return rep;
}

std::string report_to_json(const VerifyReport& report) {
    nlohmann::json j;
    j["suite"] = report.suite;
    j["elapsed_ms"] = report.elapsed_ms;
    j["cases"] = nlohmann::json::array();
    for (const auto& c : report.cases) {
        nlohmann::json cj;
        cj["identity"] = c.identity;
        cj["anchor"] = c.anchor;
        cj["n"] = c.n;
        cj["params"] = c.params;
        cj["status"] = c.pass ? "pass" : "fail";
        if (!c.counterexample.empty()) cj["counterexample"] = c.counterexample;
        j["cases"].push_back(cj);
    }
    return j.dump(2);
}

}  // namespace zm
