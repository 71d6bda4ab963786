#include <doctest.h>

#include <map>

#include "zm/errors.hpp"
#include "zm/zmeasure.hpp"

using namespace zm;

namespace {

ZMeasureParams params_of(const GaussianRational& z, const GaussianRational& zp, const Rational& theta,
                         unsigned n) {
    ZMeasureParams p;
    p.z = z;
    p.zp = zp;
    p.theta = theta;
    p.n = n;
    return p;
}

const GaussianRational kOnePlusI(Rational(1), Rational(1));

}  // namespace

TEST_CASE("exact literal parsing") {
    CHECK(parse_rational("3") == Rational(3));
    CHECK(parse_rational("-5/7") == Rational(-5, 7));
    CHECK(parse_rational("6/4") == Rational(3, 2));  // canonical form
    CHECK(parse_gaussian("2") == GaussianRational(2));
    CHECK(parse_gaussian("5/3") == GaussianRational(Rational(5, 3)));
    CHECK(parse_gaussian("1+1i") == kOnePlusI);
    CHECK(parse_gaussian("1-2i") == GaussianRational(Rational(1), Rational(-2)));
    CHECK(parse_gaussian("3/2+1/2i") == GaussianRational(Rational(3, 2), Rational(1, 2)));
    CHECK(parse_gaussian("-3-4i") == GaussianRational(Rational(-3), Rational(-4)));
    CHECK(parse_gaussian("i") == GaussianRational(Rational(0), Rational(1)));
    CHECK(parse_gaussian("-i") == GaussianRational(Rational(0), Rational(-1)));
    CHECK(parse_gaussian("2i") == GaussianRational(Rational(0), Rational(2)));
    CHECK(parse_gaussian("1/2i") == GaussianRational(Rational(0), Rational(1, 2)));
    CHECK_THROWS_AS(parse_rational(""), ParseError);
    CHECK_THROWS_AS(parse_rational("1/0"), ParseError);
    CHECK_THROWS_AS(parse_rational("1.5"), ParseError);
    CHECK_THROWS_AS(parse_gaussian("1+"), ParseError);
    CHECK_THROWS_AS(parse_gaussian("nonsense"), ParseError);
    // round-trip through the canonical text form
    for (const auto& v : {kOnePlusI, GaussianRational(Rational(-7, 3), Rational(2, 5)),
                          GaussianRational(Rational(0), Rational(-1)), GaussianRational(4)})
        CHECK(parse_gaussian(to_string(v)) == v);
}

TEST_CASE("weights at the worked level-2 point") {
    auto p = params_of(GaussianRational(2), GaussianRational(3), Rational(1), 2);
    CHECK(zmeasure_weight(p, Partition{2}) == GaussianRational(Rational(6, 7)));
    CHECK(zmeasure_weight(p, Partition{1, 1}) == GaussianRational(Rational(1, 7)));
    CHECK(p.t() == GaussianRational(6));
}

TEST_CASE("level 1 is always normalized") {
    for (const auto& z : {GaussianRational(2), kOnePlusI, GaussianRational(Rational(5, 3))}) {
        auto p = params_of(z, GaussianRational(3), Rational(1, 2), 1);
        CHECK(zmeasure_weight(p, Partition{1}) == GaussianRational(1));
    }
}

TEST_CASE("tables normalize exactly on the grid") {
    for (const auto& z : {GaussianRational(2), GaussianRational(Rational(5, 3)), kOnePlusI}) {
        for (const auto& zp : {GaussianRational(3), z.conj()}) {
            for (const Rational& theta : {Rational(1, 2), Rational(1), Rational(2)}) {
                for (unsigned n = 1; n <= 8; ++n) {
                    auto tbl = zmeasure_table(params_of(z, zp, theta, n));
                    CHECK(tbl.normalized);
                    CHECK(tbl.entries.size() == enumerate_partitions(n).size());
                }
            }
        }
    }
}

TEST_CASE("pole detection") {
    // z = 1, z' = -2, theta = 1: t = -2, so (t)_n = 0 once n >= 3
    auto good = params_of(GaussianRational(1), GaussianRational(-2), Rational(1), 2);
    CHECK_NOTHROW(zmeasure_weight(good, Partition{2}));
    auto bad = params_of(GaussianRational(1), GaussianRational(-2), Rational(1), 3);
    CHECK_THROWS_AS(zmeasure_weight(bad, Partition{3}), PoleError);
    CHECK_THROWS_AS(zmeasure_table(bad), PoleError);
    CHECK_THROWS_AS(zmeasure_table(params_of(GaussianRational(2), GaussianRational(3), Rational(1), 61)),
                    CapacityError);
}

TEST_CASE("plancherel weights") {
    CHECK(plancherel_weight(Rational(1), 2, Partition{2}) == Rational(1, 2));
    CHECK(plancherel_weight(Rational(1), 2, Partition{1, 1}) == Rational(1, 2));
    // theta = 1 reduces to dim(λ)² / n!
    for (unsigned n = 1; n <= 8; ++n) {
        Integer fact = 1;
        for (unsigned k = 2; k <= n; ++k) fact *= k;
        for (const auto& lam : enumerate_partitions(n)) {
            CHECK(plancherel_weight(Rational(1), n, lam) ==
                  Rational(dimension(lam) * dimension(lam)) / Rational(fact));
        }
        for (const Rational& theta : {Rational(1, 2), Rational(2)})
            CHECK(plancherel_table(theta, n).normalized);
    }
}

TEST_CASE("plancherel is the large-z limit") {
    // at z = z' = 10^6 the relative deviation is at most 10 n / 10^6
    const GaussianRational big(Rational(1000000));
    for (const Rational& theta : {Rational(1, 2), Rational(1)}) {
        for (unsigned n = 1; n <= 6; ++n) {
            auto tbl = zmeasure_table(params_of(big, big, theta, n));
            const Rational bound = Rational(10 * static_cast<long>(n)) / Rational(1000000);
            for (const auto& [lam, w] : tbl.entries) {
                REQUIRE(w.is_real());
                Rational rel = w.re / plancherel_weight(theta, n, lam) - 1;
                if (rel < 0) rel = -rel;
                CHECK(rel <= bound);
            }
        }
    }
}

TEST_CASE("series classification") {
    CHECK(classify_parameters(kOnePlusI, kOnePlusI.conj(), Rational(1, 2)).series ==
          ParameterSeries::Principal);
    CHECK(classify_parameters(GaussianRational(Rational(1, 3)), GaussianRational(Rational(1, 4)),
                              Rational(1, 2))
              .series == ParameterSeries::Complementary);
    CHECK(classify_parameters(GaussianRational(Rational(3, 2)), GaussianRational(Rational(7, 5)),
                              Rational(1, 2))
              .series == ParameterSeries::Degenerate);
    // real z with qz integral is excluded from the principal series
    CHECK(classify_parameters(GaussianRational(Rational(3, 2)), GaussianRational(Rational(3, 2)),
                              Rational(1, 2))
              .series != ParameterSeries::Principal);
    // real non-lattice z with z' = z is principal (and also complementary)
    CHECK(classify_parameters(GaussianRational(Rational(1, 3)), GaussianRational(Rational(1, 3)),
                              Rational(1, 2))
              .series == ParameterSeries::Principal);
    // complex non-conjugate pair
    CHECK(classify_parameters(kOnePlusI, GaussianRational(3), Rational(1)).series ==
          ParameterSeries::NonAdmissible);
    // complementary needs both in the same lattice interval
    CHECK(classify_parameters(GaussianRational(Rational(1, 3)), GaussianRational(Rational(3, 4)),
                              Rational(1, 2))
              .series == ParameterSeries::NonAdmissible);
}

TEST_CASE("the two readings of the second degenerate branch") {
    // z' = -3, z = 1/5, theta = 1/3: the printed condition (z < m-1 = 2)
    // accepts, the mirrored one (z < -m+1 = -2) rejects.
    const GaussianRational z(Rational(1, 5));
    const GaussianRational zp(Rational(-3));
    auto printed = classify_parameters(z, zp, Rational(1, 3), DegenerateReading::AsPrinted);
    auto mirrored = classify_parameters(z, zp, Rational(1, 3), DegenerateReading::Mirrored);
    CHECK(printed.series == ParameterSeries::Degenerate);
    CHECK(mirrored.series == ParameterSeries::NonAdmissible);
    CHECK(printed.reading_sensitive);
    CHECK(mirrored.reading_sensitive);

    // The printed reading is untenable: it admits parameters whose weights
    // go negative, so it cannot define a probability measure.
    auto tbl = zmeasure_table(params_of(z, zp, Rational(1, 3), 2));
    bool negative = false;
    for (const auto& [lam, w] : tbl.entries) negative |= (w.is_real() && w.re < 0);
    CHECK(negative);

    // The mirrored branch does give nonnegative weights.
    auto good = zmeasure_table(params_of(GaussianRational(Rational(-5, 2)), zp, Rational(1, 3), 3));
    CHECK(classify_parameters(GaussianRational(Rational(-5, 2)), zp, Rational(1, 3)).series ==
          ParameterSeries::Degenerate);
    for (const auto& [lam, w] : good.entries) {
        CHECK(w.is_real());
        CHECK(w.re >= 0);
    }
}

TEST_CASE("admissible weights are nonnegative") {
    // principal and complementary points, checked exactly up to n = 12
    const std::vector<std::pair<GaussianRational, GaussianRational>> points = {
        {kOnePlusI, kOnePlusI.conj()},
        {GaussianRational(Rational(1, 3)), GaussianRational(Rational(1, 4))},
    };
    for (const auto& [z, zp] : points) {
        for (const Rational& theta : {Rational(1, 2), Rational(1), Rational(2)}) {
            for (unsigned n = 1; n <= 12; ++n) {
                for (const auto& [lam, w] : zmeasure_table(params_of(z, zp, theta, n)).entries) {
                    CHECK(w.is_real());
                    CHECK(w.re >= 0);
                }
            }
        }
    }
}

TEST_CASE("transposition symmetry") {
    for (unsigned n = 1; n <= 8; ++n) {
        CHECK(check_transposition_symmetry(params_of(GaussianRational(2), GaussianRational(3), Rational(2), n))
                  .pass);
        CHECK(check_transposition_symmetry(params_of(kOnePlusI, kOnePlusI.conj(), Rational(1, 2), n)).pass);
        CHECK(check_transposition_symmetry(params_of(GaussianRational(Rational(5, 3)), GaussianRational(3),
                                                     Rational(1), n))
                  .pass);
    }
}

TEST_CASE("partition sampler") {
    auto tbl = zmeasure_table(params_of(GaussianRational(2), GaussianRational(3), Rational(1), 2));
    CHECK(sample_partitions(tbl, 0, 1).empty());
    CHECK(sample_partitions(tbl, 20, 9) == sample_partitions(tbl, 20, 9));

    // frequencies within 3 sigma of (6/7, 1/7) at 70000 draws
    auto draws = sample_partitions(tbl, 70000, 1);
    std::map<Partition, int> counts;
    for (const auto& lam : draws) counts[lam]++;
    const double p = 6.0 / 7;
    const double sigma = std::sqrt(70000 * p * (1 - p));
    CHECK(std::abs(counts[Partition{2}] - 70000 * p) <= 3 * sigma);

    // plancherel draws at theta = 1, n = 2: both diagrams equally likely
    auto ptbl = plancherel_table(Rational(1), 2);
    auto pdraws = sample_partitions(ptbl, 40000, 5);
    int twos = 0;
    for (const auto& lam : pdraws) twos += lam == Partition{2};
    CHECK(std::abs(twos - 20000) < 3 * std::sqrt(40000 * 0.25));

    // complex weights are rejected with a message
    auto bad = zmeasure_table(params_of(kOnePlusI, GaussianRational(3), Rational(1), 2));
    CHECK_THROWS_AS(sample_partitions(bad, 1, 1), DomainError);

    // the parameter-level entry points agree with the table-level one
    auto params3 = params_of(GaussianRational(2), GaussianRational(3), Rational(1), 3);
    CHECK(sample_partitions(params3, 25, 8) == sample_partitions(zmeasure_table(params3), 25, 8));
    CHECK(sample_partitions_plancherel(Rational(1), 3, 25, 8) ==
          sample_partitions(plancherel_table(Rational(1), 3), 25, 8));
}
