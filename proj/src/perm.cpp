#include "zm/perm.hpp"

#include <algorithm>
#include <mutex>
#include <sstream>
#include <unordered_map>

#include "zm/errors.hpp"
#include "zm/parallel.hpp"

namespace zm {

int SignedPermutation::index_of(int value) const {
    if (value == 0 || value > n_ || value < -n_) throw DomainError("value outside signed domain");
    return value < 0 ? value + n_ : n_ + value - 1;
}

int SignedPermutation::value_of(int index) const { return index < n_ ? index - n_ : index - n_ + 1; }

SignedPermutation::SignedPermutation(int level) : n_(level) {
    if (level < 1 || level > kMatchingLevelCap) throw DomainError("permutation level out of range");
    images_.resize(2 * static_cast<std::size_t>(level));
    for (std::size_t i = 0; i < images_.size(); ++i) images_[i] = static_cast<std::int8_t>(i);
}

SignedPermutation SignedPermutation::from_images(int level, const std::vector<int>& images) {
    SignedPermutation g(level);
    if (images.size() != 2 * static_cast<std::size_t>(level))
        throw DomainError("one-line notation needs 2n images");
    std::vector<bool> hit(images.size(), false);
    for (std::size_t i = 0; i < images.size(); ++i) {
        int idx = g.index_of(images[i]);
        if (hit[static_cast<std::size_t>(idx)]) throw DomainError("images must be a bijection");
        hit[static_cast<std::size_t>(idx)] = true;
        g.images_[i] = static_cast<std::int8_t>(idx);
    }
    return g;
}

std::vector<int> SignedPermutation::images() const {
    std::vector<int> out(images_.size());
    for (std::size_t i = 0; i < images_.size(); ++i) out[i] = value_of(images_[i]);
    return out;
}

SignedPermutation SignedPermutation::then(const SignedPermutation& o) const {
    if (n_ != o.n_) throw LevelMismatchError("composing permutations of different levels");
    SignedPermutation r(n_);
    for (std::size_t i = 0; i < images_.size(); ++i)
        r.images_[i] = o.images_[static_cast<std::size_t>(images_[i])];
    return r;
}

SignedPermutation SignedPermutation::inverse() const {
    SignedPermutation r(n_);
    for (std::size_t i = 0; i < images_.size(); ++i)
        r.images_[static_cast<std::size_t>(images_[i])] = static_cast<std::int8_t>(i);
    return r;
}

bool SignedPermutation::is_hyperoctahedral() const {
    for (int k = 1; k <= n_; ++k) {
        if (apply(-k) != -apply(k)) return false;
    }
    return true;
}

SignedPermutation SignedPermutation::lift(int m) const {
    if (m < n_) throw LevelMismatchError("lift target below current level");
    SignedPermutation r(m);
    for (int v = -n_; v <= n_; ++v) {
        if (v == 0) continue;
        r.images_[static_cast<std::size_t>(r.index_of(v))] =
            static_cast<std::int8_t>(r.index_of(apply(v)));
    }
    return r;
}

std::string SignedPermutation::to_string() const {
    std::ostringstream os;
    os << '[';
    auto im = images();
    for (std::size_t i = 0; i < im.size(); ++i) {
        if (i) os << ',';
        os << im[i];
    }
    os << ']';
    return os.str();
}

SignedPermutation identity_permutation(int n) { return SignedPermutation(n); }

SignedPermutation negation_involution(int n) {
    SignedPermutation g(n);
    std::vector<int> im;
    im.reserve(2 * static_cast<std::size_t>(n));
    for (int v = -n; v <= n; ++v) {
        if (v == 0) continue;
        im.push_back(-v);
    }
    return SignedPermutation::from_images(n, im);
}

SignedPermutation transposition(int n, int a, int b) {
    if (a == b) throw DomainError("transposition needs distinct points");
    SignedPermutation g(n);
    std::vector<int> im;
    im.reserve(2 * static_cast<std::size_t>(n));
    for (int v = -n; v <= n; ++v) {
        if (v == 0) continue;
        im.push_back(v == a ? b : v == b ? a : v);
    }
    return SignedPermutation::from_images(n, im);
}

std::vector<SignedPermutation> all_transpositions(int n) {
    std::vector<SignedPermutation> out;
    std::vector<int> domain;
    for (int v = -n; v <= n; ++v)
        if (v != 0) domain.push_back(v);
    for (std::size_t i = 0; i < domain.size(); ++i)
        for (std::size_t j = i + 1; j < domain.size(); ++j)
            out.push_back(transposition(n, domain[i], domain[j]));
    return out;
}

std::vector<SignedPermutation> enumerate_hyperoctahedral(int n) {
    std::vector<SignedPermutation> out;
    std::vector<int> perm(n);
    for (int i = 0; i < n; ++i) perm[i] = i + 1;
    do {
        for (unsigned mask = 0; mask < (1u << n); ++mask) {
            std::vector<int> im(2 * static_cast<std::size_t>(n));
            auto slot = [&](int v) { return v < 0 ? v + n : n + v - 1; };
            for (int k = 1; k <= n; ++k) {
                int target = (mask >> (k - 1)) & 1 ? -perm[k - 1] : perm[k - 1];
                im[static_cast<std::size_t>(slot(k))] = target;
                im[static_cast<std::size_t>(slot(-k))] = -target;
            }
            out.push_back(SignedPermutation::from_images(n, im));
        }
    } while (std::next_permutation(perm.begin(), perm.end()));
    return out;
}

void for_each_permutation(int n, const std::function<void(const SignedPermutation&)>& visit) {
    std::vector<int> im;
    for (int v = -n; v <= n; ++v)
        if (v != 0) im.push_back(v);
    std::sort(im.begin(), im.end());
    do {
        visit(SignedPermutation::from_images(n, im));
    } while (std::next_permutation(im.begin(), im.end()));
}

std::vector<SignedPermutation> enumerate_permutations(int n) {
    std::vector<SignedPermutation> out;
    for_each_permutation(n, [&](const SignedPermutation& g) { out.push_back(g); });
    return out;
}

Matching act(const Matching& x, const SignedPermutation& g) {
    if (x.level() != g.level()) throw LevelMismatchError("acting with mismatched levels");
    std::vector<std::int8_t> part(x.raw().size());
    for (std::size_t i = 0; i < part.size(); ++i) {
        std::size_t gi = static_cast<std::size_t>(g.raw()[i]);
        part[gi] = g.raw()[static_cast<std::size_t>(x.raw()[i])];
    }
    return Matching::from_raw(x.level(), std::move(part));
}

Partition permutation_cycle_type(const SignedPermutation& g) {
    const auto& im = g.raw();
    std::vector<bool> seen(im.size(), false);
    std::vector<unsigned> lens;
    for (std::size_t s = 0; s < im.size(); ++s) {
        if (seen[s]) continue;
        unsigned len = 0;
        std::size_t a = s;
        while (!seen[a]) {
            seen[a] = true;
            a = static_cast<std::size_t>(im[a]);
            ++len;
        }
        lens.push_back(len);
    }
    std::sort(lens.begin(), lens.end(), std::greater<>());
    return Partition(std::move(lens));
}

Partition coset_type(const SignedPermutation& g) {
    return matching_type(act(identity_matching(g.level()), g));
}

int cocycle(const Matching& x, const SignedPermutation& g) {
    if (x.level() != g.level()) throw LevelMismatchError("cocycle needs matching levels");
    return static_cast<int>(cycle_count(act(x, g))) - static_cast<int>(cycle_count(x));
}

QuasiInvarianceReport check_quasi_invariance(const Rational& t, int n, bool parallel) {
    QuasiInvarianceReport rep;
    rep.n = n;
    const auto xs = enumerate_matchings(n);
    const auto gens = all_transpositions(n);
    std::vector<std::string> bad(xs.size());
    parallel_for(
        xs.size(),
        [&](std::size_t i) {
            const Matching& x = xs[i];
            const Rational mu_x = ewens_weight(t, x);
            for (const auto& g : gens) {
                const Matching xg = act(x, g);
                const int c = cocycle(x, g);
                Rational lhs = ewens_weight(t, xg);
                Rational factor =
                    c >= 0 ? pow(t, static_cast<unsigned long>(c)) : 1 / pow(t, static_cast<unsigned long>(-c));
                if (lhs != factor * mu_x) {
                    bad[i] = x.to_string() + " . " + g.to_string();
                    return;
                }
            }
        },
        parallel);
    for (const auto& b : bad) {
        if (!b.empty()) {
            rep.pass = false;
            rep.counterexample = b;
            return rep;
        }
    }
    return rep;
}

namespace {

using PartsKey = std::vector<unsigned>;

struct MNKey {
    PartsKey mu;
    PartsKey rho;
    bool operator==(const MNKey& o) const { return mu == o.mu && rho == o.rho; }
};

struct MNKeyHash {
    std::size_t operator()(const MNKey& k) const {
        std::size_t h = 1469598103934665603ull;
        auto mix = [&](unsigned v) {
            h ^= v + 0x9e3779b97f4a7c15ull + (h << 6) + (h >> 2);
        };
        for (auto v : k.mu) mix(v);
        mix(0xffffffffu);
        for (auto v : k.rho) mix(v);
        return h;
    }
};

long long mn_recurse(const PartsKey& mu, const PartsKey& rho, std::size_t rho_at,
                     std::unordered_map<MNKey, long long, MNKeyHash>& memo) {
    if (mu.empty()) return 1;
    MNKey key{mu, PartsKey(rho.begin() + static_cast<std::ptrdiff_t>(rho_at), rho.end())};
    auto it = memo.find(key);
    if (it != memo.end()) return it->second;
    const unsigned r = rho[rho_at];
    const std::size_t len = mu.size();
    // Beta-numbers mu_i + (len-1-i); removing a border strip of length r is
    // replacing some b by b-r >= 0 with b-r not already present. The sign is
    // (-1)^{number of beta-numbers strictly between}.
    std::vector<long> beta(len);
    for (std::size_t i = 0; i < len; ++i) beta[i] = static_cast<long>(mu[i]) + static_cast<long>(len - 1 - i);
    long long total = 0;
    for (std::size_t i = 0; i < len; ++i) {
        const long nb = beta[i] - static_cast<long>(r);
        if (nb < 0) continue;
        bool clash = false;
        int between = 0;
        for (std::size_t j = 0; j < len; ++j) {
            if (j == i) continue;
            if (beta[j] == nb) clash = true;
            if (beta[j] > nb && beta[j] < beta[i]) ++between;
        }
        if (clash) continue;
        std::vector<long> nbeta = beta;
        nbeta[i] = nb;
        std::sort(nbeta.begin(), nbeta.end(), std::greater<>());
        PartsKey nmu;
        for (std::size_t k = 0; k < nbeta.size(); ++k) {
            long part = nbeta[k] - static_cast<long>(len - 1 - k);
            if (part > 0) nmu.push_back(static_cast<unsigned>(part));
        }
        const long long sub = mn_recurse(nmu, rho, rho_at + 1, memo);
        total += (between % 2 == 0) ? sub : -sub;
    }
    memo.emplace(std::move(key), total);
    return total;
}

}  // namespace

long long character(const Partition& mu, const Partition& rho) {
    if (mu.size() != rho.size()) throw DomainError("character needs |mu| = |rho|");
    thread_local std::unordered_map<MNKey, long long, MNKeyHash> memo;
    return mn_recurse(mu.parts(), rho.parts(), 0, memo);
}

long long CharacterTable::at(const Partition& mu, const Partition& rho) const {
    auto it = values.find({mu, rho});
    if (it == values.end()) throw DomainError("character table lookup outside degree");
    return it->second;
}

CharacterTable character_table(unsigned m, bool parallel) {
    CharacterTable tbl;
    tbl.degree = m;
    const auto parts = enumerate_partitions(m);
    std::vector<std::pair<Partition, Partition>> cells;
    for (const auto& mu : parts)
        for (const auto& rho : parts) cells.emplace_back(mu, rho);
    std::vector<long long> vals(cells.size());
    parallel_for(
        cells.size(), [&](std::size_t i) { vals[i] = character(cells[i].first, cells[i].second); },
        parallel);
    for (std::size_t i = 0; i < cells.size(); ++i) tbl.values.emplace(cells[i], vals[i]);
    return tbl;
}

}  // namespace zm
