#include <doctest.h>

#include <set>

#include "zm/errors.hpp"
#include "zm/io.hpp"
#include "zm/partition.hpp"

using namespace zm;

namespace {

// Independent counting oracle: number of partitions of n with parts <= cap.
long count_partitions(long n, long cap) {
    if (n == 0) return 1;
    if (cap == 0) return 0;
    long total = 0;
    for (long first = std::min(n, cap); first >= 1; --first) total += count_partitions(n - first, first);
    return total;
}

// Independent transpose oracle: reflect the cell incidence set.
Partition transpose_by_cells(const Partition& p) {
    std::set<std::pair<unsigned, unsigned>> cells;
    for (unsigned i = 0; i < p.length(); ++i)
        for (unsigned j = 0; j < p.part(i); ++j) cells.insert({j, i});
    std::vector<unsigned> rows;
    for (auto [i, j] : cells) {
        (void)j;
        if (i >= rows.size()) rows.resize(i + 1, 0);
        rows[i]++;
    }
    return Partition(rows);
}

}  // namespace

TEST_CASE("partition enumeration") {
    CHECK(enumerate_partitions(0).size() == 1);
    CHECK(enumerate_partitions(0)[0].empty());
    CHECK(enumerate_partitions(1) == std::vector<Partition>{Partition{1}});

    for (unsigned n = 1; n <= 12; ++n) {
        auto all = enumerate_partitions(n);
        CHECK(static_cast<long>(all.size()) == count_partitions(n, n));
        CHECK(Integer(static_cast<long>(all.size())) == partition_count(n));
        // exactly once, reverse-lexicographic
        std::set<Partition> seen(all.begin(), all.end());
        CHECK(seen.size() == all.size());
        for (std::size_t i = 1; i < all.size(); ++i) CHECK(all[i - 1].parts() > all[i].parts());
        CHECK(all.front() == Partition{n});
        CHECK(all.back() == Partition(std::vector<unsigned>(n, 1)));
        for (const auto& p : all) CHECK(p.size() == n);
    }
    CHECK(enumerate_partitions(4).size() == 5);
    CHECK(enumerate_partitions(10).size() == 42);
    CHECK_THROWS_AS(enumerate_partitions(61), CapacityError);
}

TEST_CASE("transpose") {
    CHECK(transpose(Partition{2}) == Partition{1, 1});
    CHECK(transpose(Partition{3, 1}) == Partition{2, 1, 1});
    CHECK(transpose(Partition()) == Partition());
    for (unsigned n = 0; n <= 8; ++n) {
        for (const auto& p : enumerate_partitions(n)) {
            CHECK(transpose(p) == transpose_by_cells(p));
            CHECK(transpose(transpose(p)) == p);
            CHECK(transpose(p).size() == p.size());
        }
    }
}

TEST_CASE("pochhammer") {
    CHECK(pochhammer(GaussianRational(3), 2) == GaussianRational(12));
    CHECK(pochhammer(GaussianRational(Rational(1, 2)), 3) == GaussianRational(Rational(15, 8)));
    CHECK(pochhammer(GaussianRational(Rational(7, 3)), 0) == GaussianRational(1));
    // complex argument: (i)_2 = i(1+i) = -1+i
    CHECK(pochhammer(GaussianRational(Rational(0), Rational(1)), 2) ==
          GaussianRational(Rational(-1), Rational(1)));
}

TEST_CASE("generalized pochhammer") {
    const GaussianRational z(Rational(7, 5), Rational(2));
    CHECK(generalized_pochhammer(z, Partition{1}, Rational(1, 3)) == z);
    CHECK(generalized_pochhammer(GaussianRational(2), Partition{2}, Rational(1, 2)) ==
          GaussianRational(6));

    // symmetry (z)_{λ,θ} = (-θ)^{|λ|} (-z/θ)_{λ',1/θ} at five rational z values
    const std::vector<GaussianRational> zs = {GaussianRational(2), GaussianRational(Rational(5, 3)),
                                              GaussianRational(Rational(-7, 2)),
                                              GaussianRational(Rational(1), Rational(1)),
                                              GaussianRational(Rational(3, 4), Rational(-2, 5))};
    for (const Rational& theta : {Rational(1, 2), Rational(1), Rational(2), Rational(3, 5)}) {
        for (unsigned n = 0; n <= 10; ++n) {
            for (const auto& lam : enumerate_partitions(n)) {
                for (const auto& zv : zs) {
                    GaussianRational lhs = generalized_pochhammer(zv, lam, theta);
                    GaussianRational rhs =
                        pow(GaussianRational(-theta), n) *
                        generalized_pochhammer(-zv / GaussianRational(theta), lam.transposed(),
                                               1 / theta);
                    CHECK(lhs == rhs);
                }
            }
        }
    }
}

TEST_CASE("hook products") {
    for (const Rational& theta : {Rational(1, 2), Rational(3)}) {
        auto hp = hook_products(Partition{1}, theta);
        CHECK(hp.h == 1);
        CHECK(hp.h_prime == theta);
    }
    auto hp2 = hook_products(Partition{2}, Rational(1, 2));
    CHECK(hp2.h == 2);
    CHECK(hp2.h_prime == Rational(3, 4));

    // H(λ,θ) = θ^{|λ|} H'(λ',1/θ)
    for (const Rational& theta : {Rational(1, 2), Rational(1), Rational(2), Rational(3, 5)}) {
        for (unsigned n = 0; n <= 10; ++n) {
            for (const auto& lam : enumerate_partitions(n)) {
                auto a = hook_products(lam, theta);
                auto b = hook_products(lam.transposed(), 1 / theta);
                CHECK(a.h == pow(theta, n) * b.h_prime);
            }
        }
    }
}

TEST_CASE("hook lengths and dimensions") {
    CHECK(hook_length_product(Partition{4}) == 24);
    CHECK(hook_length_product(Partition{2, 2}) == 12);
    CHECK(hook_length_product(Partition{1}) == 1);
    CHECK(dimension(Partition{4}) == 1);
    CHECK(dimension(Partition{2, 2}) == 2);
    for (unsigned n = 1; n <= 20; ++n) CHECK(dimension(Partition{n}) == 1);

    // h(λ) = H(λ,1) = H'(λ,1)
    for (unsigned n = 0; n <= 8; ++n) {
        for (const auto& lam : enumerate_partitions(n)) {
            auto hp = hook_products(lam, Rational(1));
            CHECK(Rational(hook_length_product(lam)) == hp.h);
            CHECK(hp.h == hp.h_prime);
        }
    }

    // sum of dim² over partitions of n equals n!
    for (unsigned n = 1; n <= 10; ++n) {
        Integer sum = 0, fact = 1;
        for (unsigned k = 2; k <= n; ++k) fact *= k;
        for (const auto& lam : enumerate_partitions(n)) sum += dimension(lam) * dimension(lam);
        CHECK(sum == fact);
    }
}

TEST_CASE("doubled-diagram hook identity") {
    // h(2λ) = 4^{|λ|} H(λ,1/2) H'(λ,1/2)
    for (unsigned n = 0; n <= 10; ++n) {
        for (const auto& lam : enumerate_partitions(n)) {
            auto hp = hook_products(lam, Rational(1, 2));
            CHECK(Rational(hook_length_product(lam.doubled())) == pow(Rational(4), n) * hp.h * hp.h_prime);
        }
    }
}

TEST_CASE("dominance order") {
    CHECK(dominates(Partition{4}, Partition{2, 2}));
    CHECK(dominates(Partition{2, 2}, Partition{2, 1, 1}));
    CHECK(!dominates(Partition{2, 2}, Partition{3, 1}));
    CHECK(!dominates(Partition{3, 3}, Partition{4, 1, 1}));
    CHECK(!dominates(Partition{4, 1, 1}, Partition{3, 3}));  // incomparable pair
    for (const auto& p : enumerate_partitions(6)) CHECK(dominates(p, p));
}

TEST_CASE("z_rho") {
    CHECK(z_weight(Partition{1}) == 1);
    CHECK(z_weight(Partition{2}) == 2);
    CHECK(z_weight(Partition{1, 1}) == 2);
    CHECK(z_weight(Partition{2, 1}) == 2);
    CHECK(z_weight(Partition{3, 1, 1}) == 6);
    // class sizes n!/z_ρ sum to n!
    for (unsigned n = 1; n <= 9; ++n) {
        Integer fact = 1, sum = 0;
        for (unsigned k = 2; k <= n; ++k) fact *= k;
        for (const auto& rho : enumerate_partitions(n)) sum += fact / z_weight(rho);
        CHECK(sum == fact);
    }
}

TEST_CASE("invalid partitions rejected") {
    CHECK_THROWS_AS(Partition(std::vector<unsigned>{1, 2}), DomainError);
    CHECK_THROWS_AS(Partition(std::vector<unsigned>{2, 0}), DomainError);
}

TEST_CASE("partition text round-trip") {
    for (unsigned n = 0; n <= 7; ++n) {
        for (const auto& p : enumerate_partitions(n)) CHECK(parse_partition(p.to_string()) == p);
    }
    CHECK(parse_partition("3,1") == Partition{3, 1});
    CHECK(parse_partition("()") == Partition());
    CHECK_THROWS_AS(parse_partition("(1,2)"), ParseError);
    CHECK_THROWS_AS(parse_partition("(a)"), ParseError);
}
