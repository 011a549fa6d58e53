#pragma once

#include "sums.hpp"

#include <optional>
#include <stdexcept>

namespace dedekind {

/// Residue-class rules the dispatcher knows about, in precedence order.
/// MODk covers q mod p == k, MODPk covers q mod p == p-k.
enum class RuleId {
    S1Q,
    SMALLQ2,
    SMALLQ3,
    SMALLQ4,
    MOD1,
    MOD2,
    MOD3,
    MOD4,
    MODP1,
    MODP2,
    MODP3,
    MODP4,
    NUM2,
    NUM3,
    NUM4,
    COMPLEMENT,
};

/// The complementary-class formulas exist in two variants: "printed" keeps
/// a sign convention that fails numeric verification; "corrected" is the
/// variant derived from the complement identity, the reciprocity law and
/// the small-numerator formulas, and agrees with the brute-force oracle.
enum class FormulaVariant { printed, corrected };

/// S(1,q) = (q-1)(2q-1) / (6q).
inline Rational S_one(const Integer& q) {
    if (q < 1) throw std::invalid_argument("S_one: q must be positive");
    return Rational((q - 1) * (2 * q - 1), 6 * q);
}

/// Complement identity: S(q-p, q) = (q-1)/2 - S(p,q), for p < q.
inline Rational complement_S(const CoprimePair& pq, const Rational& known_S) {
    if (pq.p() >= pq.q())
        throw std::domain_error("complement_S: requires p < q");
    return Rational(pq.q() - 1, 2) - known_S;
}

/// S(p, m) for m in {2, 3, 4}:
///   S(p,2) = 1/4
///   S(p,3) = (1/3)(2 - {p/3})
///   S(p,4) = 1 - (1/2){p/4}
inline Rational small_modulus_S(const Integer& p, int m) {
    if (m < 2 || m > 4) throw std::invalid_argument("small_modulus_S: m must be 2, 3 or 4");
    if (p < 1 || gcd(p, Integer(m)) != 1)
        throw std::invalid_argument("small_modulus_S: p must be positive and coprime to m");
    switch (m) {
        case 2: return Rational(1, 4);
        case 3: return Rational(1, 3) * (Rational(2) - Rational(p, 3).frac());
        default: return Rational(1) - Rational(1, 2) * Rational(p, 4).frac();
    }
}

/// S(m, p) for m in {2, 3, 4}:
///   S(2,p) = 7p/24 + 5/(24p) - 1/2
///   S(3,p) = 5p/18 + 5/(18p) + (1/3){p/3} - 2/3
///   S(4,p) = 13p/48 + 17/(48p) + (1/2){p/4} - 3/4
inline Rational small_numerator_S(int m, const Integer& p) {
    if (m < 2 || m > 4) throw std::invalid_argument("small_numerator_S: m must be 2, 3 or 4");
    if (p < 1 || gcd(Integer(m), p) != 1)
        throw std::invalid_argument("small_numerator_S: p must be positive and coprime to m");
    switch (m) {
        case 2:
            return Rational(7 * p, 24) + Rational(5, 24 * p) - Rational(1, 2);
        case 3:
            return Rational(5 * p, 18) + Rational(5, 18 * p) +
                   Rational(1, 3) * Rational(p, 3).frac() - Rational(2, 3);
        default:
            return Rational(13 * p, 48) + Rational(17, 48 * p) +
                   Rational(1, 2) * Rational(p, 4).frac() - Rational(3, 4);
    }
}

namespace detail {

// (p^2 + q^2 + 1) / (12pq)
inline Rational cross_term(const Integer& p, const Integer& q) {
    return Rational(p * p + q * q + 1, 12 * p * q);
}

// Class-dependent tail shared by the direct residue-class formulas:
//   k=1: p/12 + 1/(6p)  + 1/4
//   k=2: p/24 + 5/(24p) + 1/4
//   k=3: p/36 + 5/(18p) + (1/3){p/3} + 1/12
//   k=4: p/48 + 17/(48p) + (1/2){p/4}
inline Rational residue_tail(int k, const Integer& p) {
    switch (k) {
        case 1: return Rational(p, 12) + Rational(1, 6 * p) + Rational(1, 4);
        case 2: return Rational(p, 24) + Rational(5, 24 * p) + Rational(1, 4);
        case 3:
            return Rational(p, 36) + Rational(5, 18 * p) +
                   Rational(1, 3) * Rational(p, 3).frac() + Rational(1, 12);
        default:
            return Rational(p, 48) + Rational(17, 48 * p) +
                   Rational(1, 2) * Rational(p, 4).frac();
    }
}

}  // namespace detail

/// Direct closed form for S(p,q) when b = q mod p lies in {1, 2, 3, 4}:
///   S(p,q) = (p^2+q^2+1)/(12pq) + q/4 - tail(b, p)
/// Requires 2 <= p < q; other residues raise a not-applicable error.
inline Rational residue_class_S(const CoprimePair& pq) {
    const Integer& p = pq.p();
    const Integer& q = pq.q();
    if (p < 2 || p >= q)
        throw std::domain_error("residue_class_S: requires 2 <= p < q");
    Integer b = q % p;
    if (b < 1 || b > 4)
        throw std::domain_error("residue_class_S: q mod p not in {1,2,3,4}");
    return detail::cross_term(p, q) + Rational(q, 4) -
           detail::residue_tail(b.convert_to<int>(), p);
}

/// Complementary-class formulas: for b = q mod p = p-k with k in {1,2,3,4},
/// returns S(q-p, q).  The corrected variant is
///   q/4 - (p^2+q^2+1)/(12pq) - (tail(k, p) - 1/2)
/// and the printed variant carries the opposite sign on the tail.
inline Rational complement_class_S(const CoprimePair& pq, FormulaVariant variant) {
    const Integer& p = pq.p();
    const Integer& q = pq.q();
    if (p < 2 || p >= q)
        throw std::domain_error("complement_class_S: requires 2 <= p < q");
    Integer k = p - q % p;
    if (k < 1 || k > 4)
        throw std::domain_error("complement_class_S: q mod p not in {p-1,...,p-4}");
    Rational tail = detail::residue_tail(k.convert_to<int>(), p) - Rational(1, 2);
    Rational head = Rational(q, 4) - detail::cross_term(p, q);
    return variant == FormulaVariant::printed ? head + tail : head - tail;
}

struct ClosedForm {
    RuleId rule;
    Rational value;
};

/// Dispatcher: picks the first applicable rule for S(p,q), reducing p mod q
/// first, with precedence S1Q, SMALLQ, MOD1..4, MODP1..4 (corrected
/// variant).  Returns nothing when no rule covers the pair.
inline std::optional<ClosedForm> closed_form_S(const CoprimePair& pq) {
    const Integer& q = pq.q();
    if (q == 1) return ClosedForm{RuleId::S1Q, Rational(0)};
    Integer p = pq.p() % q;  // nonzero: gcd(p,q) = 1 and q >= 2
    if (p == 1) return ClosedForm{RuleId::S1Q, S_one(q)};
    if (q <= 4) {
        int m = q.convert_to<int>();
        RuleId rule = m == 2 ? RuleId::SMALLQ2 : m == 3 ? RuleId::SMALLQ3 : RuleId::SMALLQ4;
        return ClosedForm{rule, small_modulus_S(pq.p(), m)};
    }
    CoprimePair reduced(p, q);
    Integer b = q % p;
    if (b <= 4) {
        int k = b.convert_to<int>();
        RuleId rule = k == 1   ? RuleId::MOD1
                      : k == 2 ? RuleId::MOD2
                      : k == 3 ? RuleId::MOD3
                               : RuleId::MOD4;
        return ClosedForm{rule, residue_class_S(reduced)};
    }
    if (p - b <= 4) {
        int k = (p - b).convert_to<int>();
        RuleId rule = k == 1   ? RuleId::MODP1
                      : k == 2 ? RuleId::MODP2
                      : k == 3 ? RuleId::MODP3
                               : RuleId::MODP4;
        Rational value = complement_S(reduced, complement_class_S(reduced, FormulaVariant::corrected));
        return ClosedForm{rule, std::move(value)};
    }
    return std::nullopt;
}

}  // namespace dedekind
