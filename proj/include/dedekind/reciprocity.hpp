#pragma once

#include "closed_forms.hpp"
#include "sums.hpp"

#include <utility>

namespace dedekind {

namespace detail {

// (p^2 + q^2 + 1)/(12pq) + (p+q)/4 - 3/4 over the common denominator 12pq.
inline Rational reciprocity_rhs_raw(const Integer& p, const Integer& q) {
    return Rational(p * p + q * q + 1 + 3 * p * q * (p + q - 3), 12 * p * q);
}

}  // namespace detail

/// Right-hand side of the reciprocity law: the exact value of
/// S(p,q) + S(q,p).
inline Rational reciprocity_rhs(const CoprimePair& pq) {
    return detail::reciprocity_rhs_raw(pq.p(), pq.q());
}

struct FastEval {
    Rational value;
    int depth = 0;  // number of reciprocity steps taken down the Euclid chain
};

/// Evaluates S(p,q) in O(log min(p,q)) steps: reduce p mod q, then walk the
/// Euclidean remainder chain applying S(p,q) = rhs(p,q) - S(q mod p, p)
/// until p = 1, where S(1,q) = (q-1)(2q-1)/(6q) closes the recursion.
/// Implemented iteratively with an explicit accumulator and alternating
/// sign; intermediate values are normalized rationals at every step.
inline FastEval fast_S_traced(const CoprimePair& pq) {
    FastEval out;
    Integer q = pq.q();
    if (q == 1) {
        out.value = Rational(0);
        return out;
    }
    Integer p = pq.p() % q;  // in [1, q-1]: q >= 2 and gcd(p,q) = 1
    Rational acc;
    bool negate = false;
    while (p != 1) {
        Rational term = detail::reciprocity_rhs_raw(p, q);
        acc += negate ? -term : term;
        negate = !negate;
        Integer r = q % p;  // >= 1, strictly decreasing
        q = std::move(p);
        p = std::move(r);
        ++out.depth;
    }
    Rational base = S_one(q);
    acc += negate ? -base : base;
    out.value = std::move(acc);
    return out;
}

inline Rational fast_S(const CoprimePair& pq) { return fast_S_traced(pq).value; }

/// s(p,q) = S(p,q) - (q-1)/4, with S from the fast evaluator.
inline Rational fast_s(const CoprimePair& pq) {
    return fast_S(pq) - Rational(pq.q() - 1, 4);
}

/// Exact form of the depth bound 2*log2(min(p,q)) + 2: for depth > 2 this
/// checks 2^(depth-2) <= min(p,q)^2.
inline bool depth_within_bound(int depth, const CoprimePair& pq) {
    if (depth <= 2) return true;
    const Integer& m = pq.p() < pq.q() ? pq.p() : pq.q();
    return (Integer(1) << static_cast<unsigned>(depth - 2)) <= m * m;
}

}  // namespace dedekind
