/**
 * @file cocycle.hpp
 * @brief Galois 2-cocycle arithmetic over finite cyclic groups, crossed
 *        product algebra tables, and cyclic-group cohomology via the norm map.
 *
 * The Galois module universe is a cyclic group Z/N on which the generator
 * sigma of G = Z/m acts by multiplication by a unit t with t^m = 1 mod N.
 * This one shape serves both the toy additive modules and the unit groups of
 * finite fields: F_{q^m}^* is Z/(q^m - 1) in exponent coordinates relative to
 * a fixed generator, where the Frobenius x -> x^q becomes e -> q*e. Module
 * arithmetic below is written additively; for field units it is understood as
 * multiplication of exponents' underlying elements.
 */
#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace brauerlab {

/// A cyclic group G = <sigma> of order m acting on the cyclic module Z/N by
/// sigma(x) = t*x mod N.
class CyclicGaloisAction {
    long long group_order_;
    long long module_order_;
    long long multiplier_;
    std::vector<long long> t_powers_;  // t^0..t^{m-1} mod N

public:
    CyclicGaloisAction(long long group_order, long long module_order, long long multiplier);

    /// Gal(F_{q^m}/F_q) acting on F_{q^m}^* in exponent coordinates:
    /// module Z/(q^m - 1), multiplier q. q must be a prime power.
    static CyclicGaloisAction finite_field_units(long long q, long long m);

    static CyclicGaloisAction trivial(long long group_order, long long module_order) {
        return CyclicGaloisAction(group_order, module_order, module_order == 1 ? 0 : 1);
    }

    long long group_order() const { return group_order_; }
    long long module_order() const { return module_order_; }
    long long multiplier() const { return multiplier_; }

    long long reduce(long long x) const;
    long long add(long long x, long long y) const;
    long long neg(long long x) const;
    /// sigma^i applied to x.
    long long act(long long i, long long x) const;
    /// x + sigma(x) + ... + sigma^{m-1}(x).
    long long norm(long long x) const;
    /// The norm map is multiplication by this scalar.
    long long norm_multiplier() const;
};

/// f_sigma for each group element, indexed by the exponent of sigma.
class OneCochain {
    std::vector<long long> values_;

public:
    OneCochain(const CyclicGaloisAction& a, std::vector<long long> values);
    long long operator()(long long i) const { return values_.at(static_cast<size_t>(i)); }
    size_t size() const { return values_.size(); }
};

/// c(sigma^i, sigma^j) on all m^2 pairs.
class TwoCochain {
    std::vector<std::vector<long long>> values_;

public:
    TwoCochain(const CyclicGaloisAction& a, std::vector<std::vector<long long>> values);
    long long operator()(long long i, long long j) const {
        return values_.at(static_cast<size_t>(i)).at(static_cast<size_t>(j));
    }
    size_t size() const { return values_.size(); }
    /// c(1,tau) = c(sigma,1) = identity for all arguments.
    bool normalized(const CyclicGaloisAction& a) const;
};

/// (d f)(sigma,tau) = sigma(f_tau) - f_{sigma tau} + f_sigma.
TwoCochain coboundary(const CyclicGaloisAction& a, const OneCochain& f);

/// sigma(c(tau,rho)) + c(sigma, tau rho) = c(sigma tau, rho) + c(sigma, tau)
/// on all triples.
bool is_cocycle(const CyclicGaloisAction& a, const TwoCochain& c);

/// H^2 of a cyclic group with the module above, presented as
/// invariants-modulo-norms: M^G / N(M).
struct H2Description {
    long long invariants_order;  // |M^G|
    long long norms_order;       // |N(M)|
    long long h2_order;          // |M^G / N(M)|, a cyclic group
};

H2Description h2_cyclic(const CyclicGaloisAction& a);

/// Multiplication table of the crossed product: basis monomials u*x_{sigma^i}
/// with (u x_sigma)(v x_tau) = u sigma(v) c(sigma,tau) x_{sigma tau}.
class CrossedProductTable {
    CyclicGaloisAction action_;
    TwoCochain cocycle_;

    CrossedProductTable(CyclicGaloisAction a, TwoCochain c)
        : action_(std::move(a)), cocycle_(std::move(c)) {}

public:
    struct Monomial {
        long long coeff;  // module element (additive / exponent coordinates)
        long long grade;  // exponent of sigma
        friend bool operator==(const Monomial&, const Monomial&) = default;
    };

    /// Table from an arbitrary 2-cochain, without the cocycle check. Exists
    /// for the associativity self-test; everything else goes through
    /// crossed_product().
    static CrossedProductTable unchecked(const CyclicGaloisAction& a, const TwoCochain& c) {
        return CrossedProductTable(a, c);
    }

    const CyclicGaloisAction& action() const { return action_; }
    const TwoCochain& cocycle() const { return cocycle_; }

    Monomial multiply(const Monomial& x, const Monomial& y) const;
    Monomial identity() const { return Monomial{0, 0}; }

    /// Exhaustive associativity over all monomial triples. Desk scale only.
    bool associative() const;

    /// Number of monomials commuting with every monomial; for the trivial
    /// cocycle over F_{q^m}/F_q this is q-1, the units of the center F_q.
    long long central_monomial_count() const;

    size_t monomial_count() const {
        return static_cast<size_t>(action_.module_order()) *
               static_cast<size_t>(action_.group_order());
    }
};

/// Builds the table after verifying c is a normalized cocycle; a non-cocycle
/// is rejected since the table would not be associative.
CrossedProductTable crossed_product(const CyclicGaloisAction& a, const TwoCochain& c);

/// Self-test oracle: table associativity (checked by multiplying monomials)
/// is equivalent to the cocycle condition. Always true for a correct
/// implementation.
bool associativity_iff_cocycle(const CyclicGaloisAction& a, const TwoCochain& c);

}  // namespace brauerlab
