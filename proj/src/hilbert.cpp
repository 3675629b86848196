#include "brauerlab/hilbert.hpp"

#include <algorithm>

namespace brauerlab {

int legendre_symbol(const Integer& a, const Integer& p) {
    if (p < 3 || !is_prime(p)) throw std::invalid_argument("legendre_symbol: p must be an odd prime");
    Integer r;
    mpz_mod(r.get_mpz_t(), a.get_mpz_t(), p.get_mpz_t());
    if (r == 0) return 0;
    Integer e = (p - 1) / 2, s;
    mpz_powm(s.get_mpz_t(), r.get_mpz_t(), e.get_mpz_t(), p.get_mpz_t());
    return s == 1 ? 1 : -1;
}

int valuation(Integer n, const Integer& p, Integer& unit) {
    if (n == 0) throw std::domain_error("valuation: zero has no finite valuation");
    int k = 0;
    while (n % p == 0) {
        n /= p;
        ++k;
    }
    unit = n;
    return k;
}

std::vector<Integer> odd_prime_divisors(const Integer& n) {
    Integer m = abs(n);
    std::vector<Integer> out;
    while (m % 2 == 0) m /= 2;
    for (Integer d = 3; d * d <= m; d += 2) {
        if (m % d != 0) continue;
        out.push_back(d);
        while (m % d == 0) m /= d;
        // once the cofactor is prime, trial division is done
        if (m > 1 && is_prime(m)) break;
    }
    if (m > 1) out.push_back(m);
    return out;
}

namespace {

// (u-1)/2 mod 2 for odd u: 1 iff u = 3 mod 4
int eps2(const Integer& u) {
    Integer m;
    mpz_mod(m.get_mpz_t(), u.get_mpz_t(), Integer(4).get_mpz_t());
    return m == 3 ? 1 : 0;
}

// (u^2-1)/8 mod 2 for odd u: 1 iff u = 3,5 mod 8
int omega2(const Integer& u) {
    Integer m;
    mpz_mod(m.get_mpz_t(), u.get_mpz_t(), Integer(8).get_mpz_t());
    return (m == 3 || m == 5) ? 1 : 0;
}

}  // namespace

int hilbert_symbol(const QuaternionSymbol& q, const Place& v) {
    if (v.is_real()) return (q.a < 0 && q.b < 0) ? -1 : 1;

    const Integer& p = v.prime();
    Integer u, w;
    int alpha = valuation(q.a, p, u);
    int beta = valuation(q.b, p, w);

    if (p == 2) {
        int e = eps2(u) * eps2(w) + alpha * omega2(w) + beta * omega2(u);
        return (e % 2 == 0) ? 1 : -1;
    }

    // (a,b)_p = (-1|p)^{alpha*beta} (u|p)^beta (w|p)^alpha
    int s = 1;
    if ((alpha & 1) && (beta & 1)) s *= legendre_symbol(p - 1, p);
    if (beta & 1) s *= legendre_symbol(u, p);
    if (alpha & 1) s *= legendre_symbol(w, p);
    return s;
}

std::map<Place, InvariantClass> quaternion_invariants(const QuaternionSymbol& q) {
    std::vector<Place> candidates = {Place::real(), Place::finite(2)};
    for (const Integer& p : odd_prime_divisors(q.a * q.b)) candidates.push_back(Place::finite(p));

    std::map<Place, InvariantClass> inv;
    for (const Place& v : candidates)
        inv[v] = hilbert_symbol(q, v) == -1 ? InvariantClass::half() : InvariantClass::zero();
    return inv;
}

bool product_formula_check(const QuaternionSymbol& q) {
    InvariantClass sum;
    for (const auto& [place, value] : quaternion_invariants(q)) sum = qz_add(sum, value);
    return sum.is_zero();
}

}  // namespace brauerlab
