#include <dedekind/sums.hpp>

#include <catch2/catch_amalgamated.hpp>

#include <numeric>

using namespace dedekind;

namespace {

// Definition-level oracle, written with Rational arithmetic only, used to
// cross-check the integer-numerator loop on small inputs.
Rational S_by_definition(long long p, long long q) {
    Rational total;
    for (long long r = 1; r < q; ++r)
        total += Rational(r, q).frac() * Rational(r * p, q).frac();
    return total;
}

Rational s_by_definition(long long p, long long q) {
    Rational total;
    for (long long r = 1; r < q; ++r)
        total += sawtooth_b1(Rational(r, q)) * sawtooth_b1(Rational(r * p, q));
    return total;
}

}  // namespace

TEST_CASE("CoprimePair validates its domain") {
    CHECK_NOTHROW(CoprimePair(1, 1));
    CHECK_NOTHROW(CoprimePair(7, 3));  // p > q is allowed; values stored unreduced
    CHECK(CoprimePair(7, 3).p() == 7);
    CHECK_THROWS_AS(CoprimePair(4, 2), std::invalid_argument);
    CHECK_THROWS_AS(CoprimePair(0, 5), std::invalid_argument);
    CHECK_THROWS_AS(CoprimePair(3, 0), std::invalid_argument);
}

TEST_CASE("sawtooth values") {
    CHECK(sawtooth_b1(Rational(1, 3)) == Rational(-1, 6));
    CHECK(sawtooth_b1(Rational(7, 1)) == Rational(0));
    CHECK(sawtooth_b1(Rational(-1, 4)) == Rational(1, 4));
    CHECK(sawtooth_b1(Rational(1, 2)) == Rational(0, 1));
}

TEST_CASE("integer numerator of S") {
    CHECK(numerator_n(CoprimePair(3, 7)) == 70);  // 3+12+6+20+5+24
    CHECK(numerator_n(CoprimePair(1, 1)) == 0);
    CHECK(numerator_n(CoprimePair(2, 5)) == 25);  // 2+8+3+12
}

TEST_CASE("brute-force S") {
    CHECK(naive_S(CoprimePair(3, 7)) == Rational(10, 7));
    CHECK(naive_S(CoprimePair(5, 1)) == Rational(0));
    CHECK(naive_S(CoprimePair(1, 3)) == Rational(5, 9));
    CHECK(naive_S(CoprimePair(2, 3)) == Rational(4, 9));
    CHECK(naive_S(CoprimePair(1, 4)) == Rational(7, 8));
    CHECK(naive_S(CoprimePair(3, 4)) == Rational(5, 8));
}

TEST_CASE("brute-force s") {
    CHECK(naive_s(CoprimePair(3, 7)) == Rational(-1, 14));
    CHECK(naive_s(CoprimePair(1, 3)) == Rational(1, 18));
    CHECK(naive_s(CoprimePair(5, 1)) == Rational(0));
}

TEST_CASE("numerator loop matches the definition") {
    for (long long q = 1; q <= 40; ++q) {
        for (long long p = 1; p <= 2 * q; ++p) {
            if (std::gcd(p, q) != 1) continue;
            CoprimePair pair{p, q};
            CHECK(naive_S(pair) == S_by_definition(p, q));
            CHECK(naive_s(pair) == s_by_definition(p, q));
        }
    }
}

TEST_CASE("residue split") {
    auto check_split = [](long long p, long long q, long long a, long long b) {
        EuclidSplit split = residue_split(CoprimePair(p, q));
        CHECK(split.a == a);
        CHECK(split.b == b);
    };
    check_split(3, 7, 2, 1);
    check_split(3, 5, 1, 2);
    check_split(5, 9, 1, 4);

    CHECK_THROWS_AS(residue_split(CoprimePair(1, 5)), std::domain_error);
    CHECK_THROWS_AS(residue_split(CoprimePair(5, 3)), std::domain_error);
    CHECK_THROWS_AS(residue_split(CoprimePair(1, 1)), std::domain_error);
}

TEST_CASE("split invariants") {
    for (long long q = 3; q <= 60; ++q) {
        for (long long p = 2; p < q; ++p) {
            if (std::gcd(p, q) != 1) continue;
            CoprimePair pair{p, q};
            EuclidSplit split = residue_split(pair);
            CHECK(split.a * p + split.b == q);
            CHECK(split.b >= 1);
            CHECK(split.b <= p - 1);
            CHECK(gcd(split.b, Integer(p)) == 1);
            // b = p * {q/p}
            CHECK(Rational(split.b) == Rational(p) * Rational(q, p).frac());
        }
    }
}

TEST_CASE("finite-sum closed forms used by the oracle") {
    for (long long q = 1; q <= 50; ++q) {
        Integer sum_r = 0, sum_r2 = 0;
        for (long long r = 1; r < q; ++r) {
            sum_r += r;
            sum_r2 += Integer(r) * r;
        }
        CHECK(sum_r == Integer(q) * (q - 1) / 2);
        CHECK(sum_r2 == Integer(q) * (q - 1) * (2 * q - 1) / 6);
    }
}

TEST_CASE("oracle invariants over an exhaustive range") {
    for (long long q = 1; q <= 80; ++q) {
        for (long long p = 1; p <= q; ++p) {
            if (std::gcd(p, q) != 1) continue;
            CoprimePair pair{p, q};

            // q^2 * S is the nonnegative integer numerator
            Rational S = naive_S(pair);
            Rational scaled = S * Rational(Integer(q) * q);
            CHECK(scaled.is_integer());
            CHECK(scaled.num() >= 0);

            // periodicity in the first argument
            CHECK(naive_S(CoprimePair(p + q, q)) == S);

            // sawtooth sum vanishes
            Rational b1_total;
            for (long long r = 1; r < q; ++r) b1_total += sawtooth_b1(Rational(r * p, q));
            CHECK(b1_total == Rational(0));

            // shift between the two sums
            CHECK(naive_s(pair) == S - Rational(q - 1, 4));

            // complement
            if (p < q) CHECK(naive_S(CoprimePair(q - p, q)) == Rational(q - 1, 2) - S);
        }
    }
}

TEST_CASE("numerator fast path agrees with the arbitrary-precision loop") {
    // same computation forced down the generic path via large p
    CoprimePair small{3, 1000};
    CoprimePair shifted{Integer(3) + Integer(1000) * (Integer(1) << 40), 1000};
    CHECK(numerator_n(small) == numerator_n(shifted));  // periodicity, exercised across paths
}
