#include "zm/partition.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

#include "zm/errors.hpp"

namespace zm {

void Partition::validate() const {
    for (std::size_t i = 0; i < parts_.size(); ++i) {
        if (parts_[i] == 0) throw DomainError("partition parts must be positive");
        if (i > 0 && parts_[i] > parts_[i - 1]) throw DomainError("partition parts must be weakly decreasing");
    }
}

unsigned Partition::size() const {
    return std::accumulate(parts_.begin(), parts_.end(), 0u);
}

Partition Partition::transposed() const {
    if (parts_.empty()) return {};
    std::vector<unsigned> t(parts_[0]);
    for (unsigned j = 0; j < parts_[0]; ++j) {
        t[j] = static_cast<unsigned>(
            std::count_if(parts_.begin(), parts_.end(), [&](unsigned p) { return p >= j + 1; }));
    }
    return Partition(std::move(t));
}

Partition Partition::doubled() const {
    std::vector<unsigned> d(parts_);
    for (auto& p : d) p *= 2;
    return Partition(std::move(d));
}

std::string Partition::to_string() const {
    std::ostringstream os;
    os << '(';
    for (std::size_t i = 0; i < parts_.size(); ++i) {
        if (i) os << ',';
        os << parts_[i];
    }
    os << ')';
    return os.str();
}

std::vector<Partition> enumerate_partitions(unsigned n, unsigned bound) {
    if (n > bound) {
        throw CapacityError("partition enumeration bound exceeded: n = " + std::to_string(n) +
                            " > " + std::to_string(bound));
    }
    std::vector<Partition> out;
    if (n == 0) {
        out.emplace_back();
        return out;
    }
    // Descending lexicographic generation: start from (n), repeatedly find the
    // rightmost part > 1, decrement it and re-spread the remainder.
    std::vector<unsigned> cur{n};
    while (true) {
        out.emplace_back(cur);
        int k = static_cast<int>(cur.size()) - 1;
        while (k >= 0 && cur[k] == 1) --k;
        if (k < 0) break;
        unsigned rem = static_cast<unsigned>(cur.size()) - static_cast<unsigned>(k);
        cur.resize(static_cast<std::size_t>(k) + 1);
        cur[k] -= 1;
        while (rem > 0) {
            unsigned next = std::min(rem, cur[k]);
            cur.push_back(next);
            rem -= next;
        }
    }
    return out;
}

Integer partition_count(unsigned n) {
    // Euler pentagonal-number recurrence.
    std::vector<Integer> p(n + 1);
    p[0] = 1;
    for (unsigned m = 1; m <= n; ++m) {
        Integer acc = 0;
        for (unsigned k = 1;; ++k) {
            unsigned g1 = k * (3 * k - 1) / 2;
            unsigned g2 = k * (3 * k + 1) / 2;
            if (g1 > m && g2 > m) break;
            int sign = (k % 2 == 1) ? 1 : -1;
            if (g1 <= m) acc += sign * p[m - g1];
            if (g2 <= m) acc += sign * p[m - g2];
        }
        p[m] = acc;
    }
    return p[n];
}

GaussianRational pochhammer(const GaussianRational& a, unsigned n) {
    GaussianRational acc(1);
    GaussianRational term = a;
    for (unsigned k = 0; k < n; ++k) {
        acc *= term;
        term += GaussianRational(1);
    }
    return acc;
}

GaussianRational generalized_pochhammer(const GaussianRational& z, const Partition& lambda,
                                        const Rational& theta) {
    GaussianRational acc(1);
    const auto& parts = lambda.parts();
    for (unsigned i = 1; i <= parts.size(); ++i) {
        for (unsigned j = 1; j <= parts[i - 1]; ++j) {
            Rational shift = Rational(static_cast<long>(j) - 1) - Rational(static_cast<long>(i) - 1) * theta;
            acc *= z + GaussianRational(shift);
        }
    }
    return acc;
}

HookProducts hook_products(const Partition& lambda, const Rational& theta) {
    if (theta <= 0) throw DomainError("theta must be positive");
    HookProducts hp{Rational(1), Rational(1)};
    const auto trans = lambda.transposed();
    const auto& parts = lambda.parts();
    for (unsigned i = 1; i <= parts.size(); ++i) {
        for (unsigned j = 1; j <= parts[i - 1]; ++j) {
            Rational arm(static_cast<long>(parts[i - 1]) - static_cast<long>(j));
            Rational leg(static_cast<long>(trans.part(j - 1)) - static_cast<long>(i));
            hp.h *= arm + leg * theta + 1;
            hp.h_prime *= arm + leg * theta + theta;
        }
    }
    return hp;
}

Integer hook_length_product(const Partition& lambda) {
    Integer h = 1;
    const auto trans = lambda.transposed();
    const auto& parts = lambda.parts();
    for (unsigned i = 1; i <= parts.size(); ++i) {
        for (unsigned j = 1; j <= parts[i - 1]; ++j) {
            h *= (parts[i - 1] - j) + (trans.part(j - 1) - i) + 1;
        }
    }
    return h;
}

Integer dimension(const Partition& lambda) {
    Integer fact = 1;
    for (unsigned k = 2; k <= lambda.size(); ++k) fact *= k;
    Integer h = hook_length_product(lambda);
    Integer q, r;
    mpz_tdiv_qr(q.get_mpz_t(), r.get_mpz_t(), fact.get_mpz_t(), h.get_mpz_t());
    if (r != 0) throw InternalError("hook-length formula produced a non-integer dimension");
    return q;
}

bool dominates(const Partition& a, const Partition& b) {
    long sa = 0, sb = 0;
    unsigned len = std::max(a.length(), b.length());
    for (unsigned i = 0; i < len; ++i) {
        sa += a.part(i);
        sb += b.part(i);
        if (sa < sb) return false;
    }
    return sa == sb;
}

Integer z_weight(const Partition& rho) {
    Integer z = 1;
    const auto& parts = rho.parts();
    std::size_t i = 0;
    while (i < parts.size()) {
        std::size_t j = i;
        while (j < parts.size() && parts[j] == parts[i]) ++j;
        const std::size_t mult = j - i;
        for (std::size_t m = 1; m <= mult; ++m) z *= parts[i] * m;
        i = j;
    }
    return z;
}

}  // namespace zm
