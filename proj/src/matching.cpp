#include "zm/matching.hpp"

#include <algorithm>
#include <cctype>
#include <cstdlib>
#include <map>
#include <sstream>

#include "zm/errors.hpp"
#include "zm/parallel.hpp"

namespace zm {

int Matching::index_of(int value) const {
    if (value == 0 || value > n_ || value < -n_) throw DomainError("value outside signed domain");
    return value < 0 ? value + n_ : n_ + value - 1;
}

int Matching::value_of(int index) const { return index < n_ ? index - n_ : index - n_ + 1; }

Matching::Matching(int level, std::vector<std::pair<int, int>> pairs) : n_(level) {
    if (level < 1 || level > kMatchingLevelCap) throw DomainError("matching level out of range");
    if (static_cast<int>(pairs.size()) != level) throw DomainError("matching needs exactly n pairs");
    partner_.assign(2 * static_cast<std::size_t>(level), -1);
    for (auto [a, b] : pairs) {
        int ia = index_of(a), ib = index_of(b);
        if (ia == ib || partner_[ia] != -1 || partner_[ib] != -1)
            throw DomainError("pairs must cover every element exactly once");
        partner_[ia] = static_cast<std::int8_t>(ib);
        partner_[ib] = static_cast<std::int8_t>(ia);
    }
}

Matching Matching::from_raw(int level, std::vector<std::int8_t> partner) {
    Matching m;
    m.n_ = level;
    m.partner_ = std::move(partner);
    return m;
}

std::vector<std::pair<int, int>> Matching::pairs() const {
    std::vector<std::pair<int, int>> out;
    out.reserve(n_);
    auto key = [](int v) { return std::pair<int, int>(std::abs(v), v); };
    std::vector<bool> used(partner_.size(), false);
    for (std::size_t i = 0; i < partner_.size(); ++i) {
        if (used[i]) continue;
        std::size_t j = static_cast<std::size_t>(partner_[i]);
        used[i] = used[j] = true;
        int a = value_of(static_cast<int>(i)), b = value_of(static_cast<int>(j));
        if (key(b) < key(a)) std::swap(a, b);
        out.emplace_back(a, b);
    }
    std::sort(out.begin(), out.end(),
              [&](const auto& p, const auto& q) { return key(p.first) < key(q.first); });
    return out;
}

std::string Matching::to_string() const {
    std::ostringstream os;
    os << '{';
    bool first = true;
    for (auto [a, b] : pairs()) {
        if (!first) os << ',';
        first = false;
        os << '{' << a << ',' << b << '}';
    }
    os << '}';
    return os.str();
}

Matching identity_matching(int n) {
    std::vector<std::pair<int, int>> p;
    p.reserve(n);
    for (int k = 1; k <= n; ++k) p.emplace_back(-k, k);
    return Matching(n, std::move(p));
}

Integer double_factorial_odd(int n) {
    Integer r = 1;
    for (int k = 1; k <= 2 * n - 1; k += 2) r *= k;
    return r;
}

Matching matching_from_rank(int n, const Integer& rank) {
    if (n < 1 || n > kMatchingLevelCap) throw DomainError("matching level out of range");
    std::vector<std::int8_t> partner(2 * static_cast<std::size_t>(n), -1);
    std::vector<int> free_idx(2 * static_cast<std::size_t>(n));
    for (std::size_t i = 0; i < free_idx.size(); ++i) free_idx[i] = static_cast<int>(i);
    Integer rem = rank;
    while (free_idx.size() > 0) {
        const std::size_t choices = free_idx.size() - 1;
        Integer digit;
        if (free_idx.size() == 2) {
            digit = rem;  // final digit has radix 1; rem must be 0
        } else {
            // this step has `choices` options, each followed by (choices-2)!! completions
            Integer tail = 1;
            for (std::size_t c = choices - 2; c >= 1; c -= 2) {
                tail *= c;
                if (c < 2) break;
            }
            Integer q, r;
            mpz_fdiv_qr(q.get_mpz_t(), r.get_mpz_t(), rem.get_mpz_t(), tail.get_mpz_t());
            digit = q;
            rem = r;
        }
        const int a = free_idx[0];
        const std::size_t pick = 1 + static_cast<std::size_t>(digit.get_ui());
        const int b = free_idx[pick];
        partner[a] = static_cast<std::int8_t>(b);
        partner[b] = static_cast<std::int8_t>(a);
        free_idx.erase(free_idx.begin() + static_cast<std::ptrdiff_t>(pick));
        free_idx.erase(free_idx.begin());
    }
    return Matching::from_raw(n, std::move(partner));
}

Integer rank_of_matching(const Matching& x) {
    const int n = x.level();
    std::vector<int> free_idx(2 * static_cast<std::size_t>(n));
    for (std::size_t i = 0; i < free_idx.size(); ++i) free_idx[i] = static_cast<int>(i);
    Integer rank = 0;
    while (free_idx.size() > 2) {
        const int a = free_idx[0];
        const int b = static_cast<int>(x.raw()[static_cast<std::size_t>(a)]);
        std::size_t pick = 0;
        while (free_idx[pick] != b) ++pick;
        Integer tail = 1;
        for (std::size_t c = free_idx.size() - 3; c >= 1; c -= 2) {
            tail *= c;
            if (c < 2) break;
        }
        rank += Integer(static_cast<long>(pick - 1)) * tail;
        free_idx.erase(free_idx.begin() + static_cast<std::ptrdiff_t>(pick));
        free_idx.erase(free_idx.begin());
    }
    return rank;
}

void for_each_matching(int n, const std::function<void(const Matching&)>& visit, int bound) {
    if (n > bound)
        throw CapacityError("matching enumeration bound exceeded: n = " + std::to_string(n) + " > " +
                            std::to_string(bound));
    if (n < 1) throw DomainError("matching level must be >= 1");
    std::vector<std::int8_t> partner(2 * static_cast<std::size_t>(n), -1);
    // Depth-first: pair the smallest free index with each larger free index in
    // ascending order; this coincides with rank order.
    std::function<void()> rec = [&]() {
        int a = -1;
        for (std::size_t i = 0; i < partner.size(); ++i) {
            if (partner[i] == -1) {
                a = static_cast<int>(i);
                break;
            }
        }
        if (a < 0) {
            visit(Matching::from_raw(n, partner));
            return;
        }
        for (std::size_t b = static_cast<std::size_t>(a) + 1; b < partner.size(); ++b) {
            if (partner[b] != -1) continue;
            partner[a] = static_cast<std::int8_t>(b);
            partner[b] = static_cast<std::int8_t>(a);
            rec();
            partner[a] = -1;
            partner[b] = -1;
        }
    };
    rec();
}

std::vector<Matching> enumerate_matchings(int n, int bound) {
    std::vector<Matching> out;
    out.reserve(double_factorial_odd(n).get_ui());
    for_each_matching(n, [&](const Matching& m) { out.push_back(m); }, bound);
    return out;
}

CycleDecomposition cycle_decomposition(const Matching& x) {
    CycleDecomposition dec;
    const int n = x.level();
    std::vector<bool> seen(2 * static_cast<std::size_t>(n), false);
    std::vector<unsigned> sizes;
    for (int start = 1; start <= n; ++start) {
        int si = x.index_of(start);
        if (seen[si]) continue;
        Cycle cyc;
        int a = si;
        do {
            int b = x.raw()[a];
            seen[static_cast<std::size_t>(a)] = true;
            seen[static_cast<std::size_t>(b)] = true;
            cyc.elements.push_back(x.value_of(a));
            cyc.elements.push_back(x.value_of(b));
            a = x.index_of(-x.value_of(b));
        } while (a != si);
        sizes.push_back(cyc.pair_count());
        dec.cycles.push_back(std::move(cyc));
    }
    dec.cycle_count = static_cast<unsigned>(dec.cycles.size());
    std::sort(sizes.begin(), sizes.end(), std::greater<>());
    dec.type = Partition(std::move(sizes));
    return dec;
}

unsigned cycle_count(const Matching& x) {
    const int n = x.level();
    unsigned count = 0;
    std::vector<bool> seen(2 * static_cast<std::size_t>(n), false);
    for (int start = 1; start <= n; ++start) {
        int si = x.index_of(start);
        if (seen[si]) continue;
        ++count;
        int a = si;
        do {
            int b = x.raw()[a];
            seen[static_cast<std::size_t>(a)] = true;
            seen[static_cast<std::size_t>(b)] = true;
            a = x.index_of(-x.value_of(b));
        } while (a != si);
    }
    return count;
}

Partition matching_type(const Matching& x) { return cycle_decomposition(x).type; }

Matching canonical_projection(const Matching& x) {
    const int n1 = x.level();
    if (n1 < 2) throw DomainError("cannot project below level 1");
    auto ps = x.pairs();
    std::vector<std::pair<int, int>> out;
    int orphan_a = 0, orphan_b = 0;
    for (auto [a, b] : ps) {
        bool a_top = std::abs(a) == n1, b_top = std::abs(b) == n1;
        if (a_top && b_top) continue;  // the pair {-(n+1), n+1}: drop it
        if (b_top) {
            (b == n1 ? orphan_b : orphan_a) = a;
        } else if (a_top) {
            (a == n1 ? orphan_b : orphan_a) = b;
        } else {
            out.emplace_back(a, b);
        }
    }
    if (orphan_a != 0 || orphan_b != 0) out.emplace_back(orphan_a, orphan_b);
    return Matching(n1 - 1, std::move(out));
}

Matching lift_matching(const Matching& x) {
    auto ps = x.pairs();
    ps.emplace_back(-(x.level() + 1), x.level() + 1);
    return Matching(x.level() + 1, std::move(ps));
}

Rational ewens_denominator(const Rational& t, int n) {
    Rational d = 1;
    for (int k = 0; k < n; ++k) d *= t + 2 * k;
    return d;
}

Rational ewens_weight(const Rational& t, const Matching& x) {
    if (t <= 0) throw DomainError("Ewens parameter t must be positive");
    return pow(t, cycle_count(x)) / ewens_denominator(t, x.level());
}

PushforwardReport check_pushforward(const Rational& t, int n, bool parallel) {
    PushforwardReport rep;
    rep.n = n;
    // Aggregate μ_t^{(n+1)} numerator mass t^{[x']} per projected image (in a
    // rank-indexed vector), then compare with μ_t^{(n)} exactly. Also count
    // preimage sizes.
    using Mass = std::vector<std::pair<Rational, long>>;
    const std::vector<Matching> upper = enumerate_matchings(n + 1);
    const std::size_t lower_count = double_factorial_odd(n).get_ui();
    Mass total = parallel_reduce(
        upper.size(), Mass(lower_count, {Rational(0), 0}),
        [&](Mass& acc, std::size_t i) {
            const Matching& up = upper[i];
            const std::size_t slot = rank_of_matching(canonical_projection(up)).get_ui();
            acc[slot].first += pow(t, cycle_count(up));
            acc[slot].second += 1;
        },
        [](Mass a, Mass b) {
            for (std::size_t i = 0; i < a.size(); ++i) {
                a[i].first += b[i].first;
                a[i].second += b[i].second;
            }
            return a;
        },
        parallel);
    const Rational den_up = ewens_denominator(t, n + 1);
    for (std::size_t i = 0; i < total.size(); ++i) {
        const Matching x = matching_from_rank(n, Integer(static_cast<unsigned long>(i)));
        if (total[i].second != 2 * n + 1) {
            rep.pass = false;
            rep.counterexample =
                x.to_string() + " has preimage of size " + std::to_string(total[i].second);
            return rep;
        }
        if (total[i].first / den_up != ewens_weight(t, x)) {
            rep.pass = false;
            rep.counterexample = x.to_string();
            return rep;
        }
    }
    return rep;
}

Matching sample_matching(const Rational& t, int n, Rng& rng) {
    if (t <= 0) throw DomainError("Ewens parameter t must be positive");
    if (n < 1 || n > kMatchingLevelCap) throw DomainError("matching level out of range");
    // Work over signed pair lists; start at level 1.
    std::vector<std::pair<int, int>> pairs{{-1, 1}};
    const Integer p = t.get_num();
    const Integer q = t.get_den();
    for (int k = 1; k < n; ++k) {
        // new circle with probability t/(t+2k) = p/(p + 2kq)
        Integer total = p + 2 * k * q;
        Integer draw = uniform_below(rng, total);
        if (draw < p) {
            pairs.emplace_back(-(k + 1), k + 1);
        } else {
            Integer off = draw - p;  // uniform over [0, 2kq)
            unsigned long slot = mpz_fdiv_ui(off.get_mpz_t(), 2 * static_cast<unsigned long>(k));
            auto [a, b] = pairs[slot / 2];
            pairs.erase(pairs.begin() + static_cast<std::ptrdiff_t>(slot / 2));
            if (slot % 2 == 0) {
                pairs.emplace_back(a, k + 1);
                pairs.emplace_back(-(k + 1), b);
            } else {
                pairs.emplace_back(a, -(k + 1));
                pairs.emplace_back(k + 1, b);
            }
        }
    }
    return Matching(n, std::move(pairs));
}

Matching sample_matching(const Rational& t, int n, std::uint64_t seed) {
    Rng rng(seed);
    return sample_matching(t, n, rng);
}

std::string render_cycles(const Matching& x) {
    auto dec = cycle_decomposition(x);
    std::ostringstream os;
    os << "X(" << x.level() << ")";
    for (const auto& cyc : dec.cycles) {
        os << " (";
        for (std::size_t i = 0; i < cyc.elements.size(); i += 2) {
            if (i) os << ' ';
            int e = cyc.elements[i];
            os << std::abs(e) << (e > 0 ? '+' : '-');
        }
        os << ')';
    }
    return os.str();
}

Matching parse_cycles(const std::string& text) {
    std::istringstream is(text);
    std::string head;
    is >> head;
    if (head.size() < 4 || head.substr(0, 2) != "X(" || head.back() != ')')
        throw ParseError("cycle text must start with X(n)");
    int n = std::atoi(head.substr(2, head.size() - 3).c_str());
    std::vector<std::pair<int, int>> pairs;
    std::string tok;
    std::vector<int> current;  // signed circle points j_1..j_k
    auto flush = [&]() {
        if (current.empty()) return;
        // pairs of the cycle: {j_m, -j_{m+1}} cyclically
        for (std::size_t m = 0; m < current.size(); ++m) {
            int a = current[m];
            int b = -current[(m + 1) % current.size()];
            pairs.emplace_back(a, b);
        }
        current.clear();
    };
    while (is >> tok) {
        std::size_t pos = 0;
        while (pos < tok.size()) {
            if (tok[pos] == '(') {
                flush();
                ++pos;
                continue;
            }
            if (tok[pos] == ')') {
                flush();
                ++pos;
                continue;
            }
            std::size_t start = pos;
            while (pos < tok.size() && std::isdigit(static_cast<unsigned char>(tok[pos]))) ++pos;
            if (pos == start || pos >= tok.size() || (tok[pos] != '+' && tok[pos] != '-'))
                throw ParseError("malformed cycle point in: " + text);
            int m = std::atoi(tok.substr(start, pos - start).c_str());
            current.push_back(tok[pos] == '+' ? m : -m);
            ++pos;
        }
    }
    flush();
    return Matching(n, std::move(pairs));
}

}  // namespace zm
