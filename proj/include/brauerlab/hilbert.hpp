/**
 * @file hilbert.hpp
 * @brief Hilbert symbols (a,b)_v over Q at every place and the invariant map
 *        of the associated quaternion algebra.
 *
 * The symbol is +1 iff z^2 = a x^2 + b y^2 has a nontrivial solution over the
 * completion at v. Evaluation uses the standard local formulas: sign test at
 * the real place, Legendre symbols on the unit parts at odd p, and the unit
 * classes mod 8 at p = 2. Inputs are nonzero integers; a rational symbol
 * reduces to this case by clearing square denominators.
 */
#pragma once

#include <map>
#include <vector>

#include "brauerlab/qz.hpp"

namespace brauerlab {

/// A place of Q: the real place or a finite place at a prime p.
class Place {
    bool real_;
    Integer p_;  // prime when finite, 0 otherwise

    Place(bool real, Integer p) : real_(real), p_(std::move(p)) {}

public:
    static Place real() { return Place(true, 0); }

    static Place finite(Integer p) {
        if (!is_prime(p)) throw std::invalid_argument("Place: finite place needs a prime");
        return Place(false, std::move(p));
    }

    bool is_real() const { return real_; }
    bool is_finite() const { return !real_; }
    const Integer& prime() const {
        if (real_) throw std::logic_error("Place: no prime at the real place");
        return p_;
    }

    /// "real" or the decimal prime.
    std::string str() const { return real_ ? "real" : p_.get_str(); }

    /// Real place first, then primes ascending (the report order).
    friend bool operator<(const Place& a, const Place& b) {
        if (a.real_ != b.real_) return a.real_;
        return a.p_ < b.p_;
    }
    friend bool operator==(const Place& a, const Place& b) {
        return a.real_ == b.real_ && a.p_ == b.p_;
    }
};

struct QuaternionSymbol {
    Integer a;
    Integer b;

    QuaternionSymbol(Integer a_, Integer b_) : a(std::move(a_)), b(std::move(b_)) {
        if (a == 0 || b == 0)
            throw std::domain_error("QuaternionSymbol: coefficients must be nonzero");
    }
};

/// Legendre symbol (a|p) for an odd prime p; 0 when p | a.
int legendre_symbol(const Integer& a, const Integer& p);

/// p-adic valuation and unit part: n = p^k * u with p coprime to u.
int valuation(Integer n, const Integer& p, Integer& unit);

/// Odd prime divisors of |n|, ascending.
std::vector<Integer> odd_prime_divisors(const Integer& n);

/// (a,b)_v in {+1,-1}.
int hilbert_symbol(const QuaternionSymbol& q, const Place& v);

/// Local invariants of the quaternion algebra (a,b): 1/2 where the symbol is
/// -1 and 0/1 elsewhere. The map lists every candidate place (real, 2, and
/// the odd primes dividing a*b); the symbol is +1 at all other places.
std::map<Place, InvariantClass> quaternion_invariants(const QuaternionSymbol& q);

/// Self-test oracle: the local invariants always sum to 0 in Q/Z.
bool product_formula_check(const QuaternionSymbol& q);

}  // namespace brauerlab
