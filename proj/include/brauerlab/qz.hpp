/**
 * @file qz.hpp
 * @brief Exact arithmetic in Q/Z and the cyclic-subgroup bookkeeping used for
 *        local Brauer invariants.
 *
 * Classes in Q/Z are stored as fully reduced fractions with a representative
 * in [0,1); zero is always 0/1. All integers are arbitrary precision (GMP),
 * so denominators can grow under lcm without silent overflow.
 */
#pragma once

#include <gmpxx.h>

#include <stdexcept>
#include <string>
#include <vector>

namespace brauerlab {

using Integer = mpz_class;

inline Integer to_integer(long long v) {
    static_assert(sizeof(long) >= sizeof(long long), "64-bit long assumed");
    return Integer(static_cast<long>(v));
}

inline Integer gcd(const Integer& a, const Integer& b) {
    Integer g;
    mpz_gcd(g.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    return g;
}

inline Integer lcm(const Integer& a, const Integer& b) {
    Integer l;
    mpz_lcm(l.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    return l;
}

/// d | n with the usual convention that every positive d divides 0.
inline bool divides(const Integer& d, const Integer& n) {
    if (d == 0) throw std::domain_error("divides: zero divisor");
    return n % d == 0;
}

/// Deterministic for every operand size that occurs here (GMP uses BPSW +
/// Miller-Rabin rounds; 2 means proven, 1 probable).
inline bool is_prime(const Integer& n) {
    if (n < 2) return false;
    return mpz_probab_prime_p(n.get_mpz_t(), 40) > 0;
}

inline bool is_power_of(Integer n, const Integer& p) {
    if (n < 1 || p < 2) return false;
    while (n % p == 0) n /= p;
    return n == 1;
}

/// An element of Q/Z: the value of a local Brauer invariant inv_v(alpha).
class InvariantClass {
    Integer num_;  // 0 <= num_ < den_
    Integer den_;  // >= 1, coprime to num_

    void reduce() {
        if (den_ == 0) throw std::domain_error("InvariantClass: zero denominator");
        if (den_ < 0) {
            num_ = -num_;
            den_ = -den_;
        }
        mpz_mod(num_.get_mpz_t(), num_.get_mpz_t(), den_.get_mpz_t());
        Integer g = gcd(num_, den_);
        if (g > 1) {
            num_ /= g;
            den_ /= g;
        }
        if (num_ == 0) den_ = 1;
    }

public:
    InvariantClass() : num_(0), den_(1) {}
    InvariantClass(Integer numerator, Integer denominator)
        : num_(std::move(numerator)), den_(std::move(denominator)) {
        reduce();
    }

    static InvariantClass zero() { return InvariantClass(); }
    static InvariantClass half() { return InvariantClass(1, 2); }

    const Integer& numerator() const { return num_; }
    const Integer& denominator() const { return den_; }
    bool is_zero() const { return num_ == 0; }

    friend bool operator==(const InvariantClass& a, const InvariantClass& b) {
        return a.num_ == b.num_ && a.den_ == b.den_;
    }
    friend bool operator!=(const InvariantClass& a, const InvariantClass& b) { return !(a == b); }
    friend bool operator<(const InvariantClass& a, const InvariantClass& b) {
        // compare as rationals in [0,1); denominators positive
        return a.num_ * b.den_ < b.num_ * a.den_;
    }

    /// Rendered as "k/n" even for zero ("0/1"); the interchange format.
    std::string str() const { return num_.get_str() + "/" + den_.get_str(); }

    static InvariantClass parse(const std::string& s) {
        auto pos = s.find('/');
        if (pos == std::string::npos || pos == 0 || pos + 1 == s.size())
            throw std::invalid_argument("InvariantClass: expected \"k/n\", got \"" + s + "\"");
        Integer n(s.substr(0, pos)), d(s.substr(pos + 1));
        return InvariantClass(n, d);
    }
};

/// Group law of Br(K) = Q/Z: reduced representative of a+b mod 1.
inline InvariantClass qz_add(const InvariantClass& a, const InvariantClass& b) {
    return InvariantClass(a.numerator() * b.denominator() + b.numerator() * a.denominator(),
                          a.denominator() * b.denominator());
}

inline InvariantClass operator+(const InvariantClass& a, const InvariantClass& b) {
    return qz_add(a, b);
}

inline InvariantClass qz_neg(const InvariantClass& a) {
    return InvariantClass(-a.numerator(), a.denominator());
}

/// k-fold sum k*a in Q/Z (k may be negative).
inline InvariantClass qz_scale(const Integer& k, const InvariantClass& a) {
    return InvariantClass(k * a.numerator(), a.denominator());
}

/// Order of a in Q/Z = the reduced denominator.
inline Integer qz_order(const InvariantClass& a) { return a.denominator(); }

/// True iff the order of a is p^k for some k >= 0 (the zero class passes for
/// every prime: the trivial group is a vacuous p-group).
inline bool is_prime_power_order(const InvariantClass& a, const Integer& p) {
    if (!is_prime(p)) throw std::invalid_argument("is_prime_power_order: p must be prime");
    return is_power_of(qz_order(a), p);
}

/// The subgroup (1/n)Z/Z of Q/Z.
class CyclicSubgroup {
    Integer order_;

public:
    explicit CyclicSubgroup(Integer order) : order_(std::move(order)) {
        if (order_ < 1) throw std::domain_error("CyclicSubgroup: order must be positive");
    }

    const Integer& order() const { return order_; }

    /// a/b lies in (1/n)Z/Z iff b | n.
    bool contains(const InvariantClass& a) const { return divides(qz_order(a), order_); }

    /// All n elements k/n, k = 0..n-1. Desk-scale enumeration only.
    std::vector<InvariantClass> elements() const {
        if (order_ > 1000000) throw std::domain_error("CyclicSubgroup: enumeration too large");
        std::vector<InvariantClass> out;
        long n = order_.get_si();
        out.reserve(static_cast<size_t>(n));
        for (long k = 0; k < n; ++k) out.emplace_back(Integer(k), order_);
        return out;
    }

    friend bool operator==(const CyclicSubgroup& a, const CyclicSubgroup& b) {
        return a.order_ == b.order_;
    }
};

/// Shape of the relative Brauer group of a curve over a p-adic local field:
/// the full group is (1/ix)Z/Z, the degree-0 part (1/pe)Z/Z, and the quotient
/// (the Neron-Severi part pe*Z/ix*Z) has order ix/pe.
struct RelativeBrauerShape {
    Integer period;
    Integer index;
    CyclicSubgroup full;         // order = index
    CyclicSubgroup degree_zero;  // order = period
    Integer ns_order;            // index / period
};

inline RelativeBrauerShape relative_brauer_local(const Integer& period, const Integer& index) {
    if (period < 1 || index < 1)
        throw std::domain_error("relative_brauer_local: period and index must be positive");
    if (!divides(period, index))
        throw std::domain_error("relative_brauer_local: period must divide index");
    return RelativeBrauerShape{period, index, CyclicSubgroup(index), CyclicSubgroup(period),
                               index / period};
}

}  // namespace brauerlab
