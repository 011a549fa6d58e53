#include <dedekind/closed_forms.hpp>
#include <dedekind/sums.hpp>

#include <catch2/catch_amalgamated.hpp>

#include <numeric>

using namespace dedekind;

TEST_CASE("S(1,q) closed form") {
    CHECK(S_one(3) == Rational(5, 9));
    CHECK(S_one(1) == Rational(0));
    CHECK(S_one(6) == Rational(55, 36));
    CHECK(S_one(100) == Rational(6567, 200));
}

TEST_CASE("complement identity") {
    CHECK(complement_S(CoprimePair(3, 5), Rational(1)) == Rational(1));
    CHECK(complement_S(CoprimePair(1, 4), Rational(7, 8)) == Rational(5, 8));
    CHECK(complement_S(CoprimePair(1, 2), Rational(1, 4)) == Rational(1, 4));
    CHECK_THROWS_AS(complement_S(CoprimePair(5, 3), Rational(0)), std::domain_error);
}

TEST_CASE("small modulus closed forms") {
    CHECK(small_modulus_S(7, 2) == Rational(1, 4));
    CHECK(small_modulus_S(2, 3) == Rational(4, 9));
    CHECK(small_modulus_S(3, 4) == Rational(5, 8));
    CHECK(small_modulus_S(1, 3) == Rational(5, 9));
    CHECK(small_modulus_S(1, 4) == Rational(7, 8));
    CHECK_THROWS_AS(small_modulus_S(6, 3), std::invalid_argument);
    CHECK_THROWS_AS(small_modulus_S(2, 4), std::invalid_argument);
    CHECK_THROWS_AS(small_modulus_S(3, 5), std::invalid_argument);
}

TEST_CASE("small numerator closed forms") {
    CHECK(small_numerator_S(2, 5) == Rational(1));
    CHECK(small_numerator_S(3, 5) == Rational(1));
    CHECK(small_numerator_S(4, 7) == Rational(11, 7));
    CHECK(small_numerator_S(2, 1) == Rational(0));
    CHECK_THROWS_AS(small_numerator_S(2, 6), std::invalid_argument);
    CHECK_THROWS_AS(small_numerator_S(5, 7), std::invalid_argument);
}

TEST_CASE("residue-class closed form") {
    CHECK(residue_class_S(CoprimePair(3, 7)) == Rational(10, 7));   // b = 1
    CHECK(residue_class_S(CoprimePair(3, 5)) == Rational(1));       // b = 2
    CHECK(residue_class_S(CoprimePair(5, 9)) == Rational(58, 27));  // b = 4
    CHECK_THROWS_AS(residue_class_S(CoprimePair(11, 61)), std::domain_error);  // b = 6
    CHECK_THROWS_AS(residue_class_S(CoprimePair(1, 9)), std::domain_error);
    CHECK_THROWS_AS(residue_class_S(CoprimePair(9, 5)), std::domain_error);
}

TEST_CASE("complementary-class closed form, corrected variant") {
    // returns S(q-p, q)
    CHECK(complement_class_S(CoprimePair(3, 5), FormulaVariant::corrected) == Rational(1));       // S(2,5)
    CHECK(complement_class_S(CoprimePair(5, 7), FormulaVariant::corrected) == Rational(11, 7));   // S(2,7)
    CHECK(complement_class_S(CoprimePair(5, 6), FormulaVariant::corrected) == Rational(55, 36));  // S(1,6)
    CHECK_THROWS_AS(complement_class_S(CoprimePair(11, 61), FormulaVariant::corrected),
                    std::domain_error);
}

TEST_CASE("printed variant reproduces the published discrepancy") {
    Rational printed = complement_class_S(CoprimePair(3, 5), FormulaVariant::printed);
    CHECK(printed == Rational(10, 9));
    CHECK(naive_S(CoprimePair(2, 5)) == Rational(1));
    CHECK(printed - naive_S(CoprimePair(2, 5)) == Rational(1, 9));  // stable gap, reported not patched
}

TEST_CASE("corrected variant equals the complement of brute force exhaustively") {
    for (long long q = 3; q <= 150; ++q) {
        for (long long p = 2; p < q; ++p) {
            if (std::gcd(p, q) != 1) continue;
            long long k = p - q % p;
            if (k < 1 || k > 4) continue;
            CoprimePair pair{p, q};
            CHECK(complement_class_S(pair, FormulaVariant::corrected) ==
                  naive_S(CoprimePair(q - p, q)));
        }
    }
}

TEST_CASE("residue-class form equals brute force exhaustively") {
    for (long long q = 3; q <= 150; ++q) {
        for (long long p = 2; p < q; ++p) {
            if (std::gcd(p, q) != 1) continue;
            long long b = q % p;
            if (b > 4) continue;
            CoprimePair pair{p, q};
            CHECK(residue_class_S(pair) == naive_S(pair));
        }
    }
}

TEST_CASE("dispatcher") {
    auto value = [](long long p, long long q) {
        auto r = closed_form_S(CoprimePair(p, q));
        REQUIRE(r.has_value());
        return r->value;
    };
    auto rule = [](long long p, long long q) {
        auto r = closed_form_S(CoprimePair(p, q));
        REQUIRE(r.has_value());
        return r->rule;
    };

    CHECK(value(1, 100) == Rational(6567, 200));
    CHECK(rule(1, 100) == RuleId::S1Q);
    CHECK(value(7, 9) == naive_S(CoprimePair(7, 9)));
    CHECK(rule(7, 9) == RuleId::MOD2);
    CHECK_FALSE(closed_form_S(CoprimePair(11, 61)).has_value());

    CHECK(rule(7, 4) == RuleId::SMALLQ4);  // reduced mod q first
    CHECK(value(7, 4) == Rational(5, 8));
    CHECK(rule(9, 2) == RuleId::S1Q);
    CHECK(value(5, 1) == Rational(0));

    // complementary classes route through the complement of the corrected form
    CHECK(rule(7, 12) == RuleId::MODP2);  // 12 mod 7 = 5 = 7-2
    CHECK(value(7, 12) == naive_S(CoprimePair(7, 12)));
}

TEST_CASE("overlapping classes prefer the direct rule and agree") {
    // p = 5: b = 1 is both q = 1 (mod 5) and q = 5-4 (mod 5)
    for (long long q : {6, 11, 16, 21, 26, 31}) {
        CoprimePair pair{5, q};
        auto r = closed_form_S(pair);
        REQUIRE(r.has_value());
        CHECK(r->rule == RuleId::MOD1);
        Rational via_complement =
            complement_S(pair, complement_class_S(pair, FormulaVariant::corrected));
        CHECK(residue_class_S(pair) == via_complement);
        CHECK(r->value == via_complement);
    }
    // p = 3: b = 1 is also 3-2, b = 2 is also 3-1
    for (long long q : {4, 5, 7, 8, 10, 11}) {
        CoprimePair pair{3, q};
        Rational direct = residue_class_S(pair);
        Rational via_complement =
            complement_S(pair, complement_class_S(pair, FormulaVariant::corrected));
        CHECK(direct == via_complement);
    }
}

TEST_CASE("dispatcher agrees with brute force wherever it answers") {
    long long answered = 0;
    for (long long q = 1; q <= 120; ++q) {
        for (long long p = 1; p < q || (p == 1 && q == 1); ++p) {
            if (std::gcd(p, q) != 1) continue;
            CoprimePair pair{p, q};
            auto r = closed_form_S(pair);
            if (!r) continue;
            ++answered;
            CHECK(r->value == naive_S(pair));
        }
    }
    CHECK(answered > 500);
}
