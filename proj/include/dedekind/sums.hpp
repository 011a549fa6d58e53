#pragma once

#include "rational.hpp"

#include <cstdint>
#include <limits>
#include <stdexcept>
#include <utility>

namespace dedekind {

/// Validated pair (p, q) with p >= 1, q >= 1 and gcd(p, q) = 1.  The values
/// are stored exactly as given; evaluators that rely on periodicity reduce
/// p mod q on entry themselves.
class CoprimePair {
public:
    CoprimePair(Integer p, Integer q) : p_(std::move(p)), q_(std::move(q)) {
        if (p_ < 1 || q_ < 1)
            throw std::invalid_argument("CoprimePair: p and q must be positive");
        if (gcd(p_, q_) != 1)
            throw std::invalid_argument("CoprimePair: p and q must be coprime");
    }

    const Integer& p() const noexcept { return p_; }
    const Integer& q() const noexcept { return q_; }

private:
    Integer p_;
    Integer q_;
};

/// Euclidean split q = a*p + b with 1 <= b <= p-1.
struct EuclidSplit {
    Integer a;
    Integer b;
};

/// First sawtooth function (normalized Bernoulli B1): {x} - 1/2 away from
/// the integers, 0 on them.
inline Rational sawtooth_b1(const Rational& x) {
    if (x.is_integer()) return Rational(0);
    return x.frac() - Rational(1, 2);
}

namespace detail {

// Loop counters and residues fit comfortably in 64 bits below this bound,
// and every accumulator below stays under 2^93 < 2^127.
inline bool fits_word(const Integer& q) {
    return q <= std::numeric_limits<std::int32_t>::max();
}

}  // namespace detail

/// Integer numerator N = sum_{r=1}^{q-1} r * (r*p mod q), so that
/// S(p,q) = N / q^2.  Pure integer O(q) loop; this is the brute-force
/// oracle everything else is checked against.
inline Integer numerator_n(const CoprimePair& pq) {
    const Integer& q = pq.q();
    if (q == 1) return 0;  // empty sum
    const Integer step = pq.p() % q;
    if (detail::fits_word(q)) {
        const auto qq = q.convert_to<std::uint64_t>();
        const auto st = step.convert_to<std::uint64_t>();
        unsigned __int128 acc = 0;
        std::uint64_t m = 0;
        for (std::uint64_t r = 1; r < qq; ++r) {
            m += st;
            if (m >= qq) m -= qq;
            acc += static_cast<unsigned __int128>(r) * m;
        }
        return from_u128(acc);
    }
    Integer acc = 0;
    Integer m = 0;
    for (Integer r = 1; r < q; ++r) {
        m += step;
        if (m >= q) m -= q;
        acc += r * m;
    }
    return acc;
}

/// S(p,q) = sum_{r=1}^{q-1} {r/q} {rp/q}, exactly, as N / q^2.
inline Rational naive_S(const CoprimePair& pq) {
    return Rational(numerator_n(pq), pq.q() * pq.q());
}

/// s(p,q) = sum_{r=1}^{q-1} B1(r/q) B1(rp/q), exactly.  For 1 <= r <= q-1
/// neither r/q nor rp/q is an integer (gcd(p,q) = 1), so each factor is
/// (2r-q)/(2q) resp. (2m-q)/(2q) with m = rp mod q, and the sum is
/// M / (4 q^2) with an integer M.
inline Rational naive_s(const CoprimePair& pq) {
    const Integer& q = pq.q();
    if (q == 1) return Rational(0);
    const Integer step = pq.p() % q;
    if (detail::fits_word(q)) {
        const auto qq = q.convert_to<std::int64_t>();
        const auto st = step.convert_to<std::int64_t>();
        __int128 acc = 0;
        std::int64_t m = 0;
        for (std::int64_t r = 1; r < qq; ++r) {
            m += st;
            if (m >= qq) m -= qq;
            acc += static_cast<__int128>(2 * r - qq) * (2 * m - qq);
        }
        return Rational(from_i128(acc), 4 * q * q);
    }
    Integer acc = 0;
    Integer m = 0;
    for (Integer r = 1; r < q; ++r) {
        m += step;
        if (m >= q) m -= q;
        acc += (2 * r - q) * (2 * m - q);
    }
    return Rational(acc, 4 * q * q);
}

/// Euclidean division q = a*p + b with 1 <= b <= p-1; defined for
/// 2 <= p < q (b cannot vanish because gcd(p,q) = 1).
inline EuclidSplit residue_split(const CoprimePair& pq) {
    if (pq.p() < 2 || pq.p() >= pq.q())
        throw std::domain_error("residue_split: requires 2 <= p < q");
    Integer b = pq.q() % pq.p();
    Integer a = (pq.q() - b) / pq.p();
    return {std::move(a), std::move(b)};
}

}  // namespace dedekind
