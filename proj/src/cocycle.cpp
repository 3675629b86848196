#include "brauerlab/cocycle.hpp"

#include <numeric>

namespace brauerlab {

namespace {

long long mulmod(long long a, long long b, long long n) {
    return static_cast<long long>(static_cast<__int128>(a) * b % n);
}

long long powmod(long long base, long long exp, long long n) {
    long long r = 1 % n;
    base %= n;
    while (exp > 0) {
        if (exp & 1) r = mulmod(r, base, n);
        base = mulmod(base, base, n);
        exp >>= 1;
    }
    return r;
}

bool is_prime_power_ll(long long q) {
    if (q < 2) return false;
    for (long long p = 2; p * p <= q; ++p) {
        if (q % p != 0) continue;
        while (q % p == 0) q /= p;
        return q == 1;
    }
    return true;  // q itself prime
}

}  // namespace

CyclicGaloisAction::CyclicGaloisAction(long long group_order, long long module_order,
                                       long long multiplier)
    : group_order_(group_order), module_order_(module_order), multiplier_(multiplier) {
    if (group_order_ < 1) throw std::domain_error("CyclicGaloisAction: group order must be >= 1");
    if (module_order_ < 1) throw std::domain_error("CyclicGaloisAction: module order must be >= 1");
    multiplier_ = ((multiplier_ % module_order_) + module_order_) % module_order_;
    if (std::gcd(multiplier_, module_order_) != 1)
        throw std::domain_error("CyclicGaloisAction: multiplier must be a unit mod N");
    if (powmod(multiplier_, group_order_, module_order_) != 1 % module_order_)
        throw std::domain_error("CyclicGaloisAction: multiplier^m must be 1 mod N");
    t_powers_.resize(static_cast<size_t>(group_order_));
    t_powers_[0] = 1 % module_order_;
    for (long long i = 1; i < group_order_; ++i)
        t_powers_[static_cast<size_t>(i)] =
            mulmod(t_powers_[static_cast<size_t>(i - 1)], multiplier_, module_order_);
}

CyclicGaloisAction CyclicGaloisAction::finite_field_units(long long q, long long m) {
    if (!is_prime_power_ll(q))
        throw std::domain_error("finite_field_units: q must be a prime power >= 2");
    if (m < 1) throw std::domain_error("finite_field_units: m must be >= 1");
    long long n = 1;
    for (long long i = 0; i < m; ++i) {
        if (n > (1LL << 62) / q) throw std::domain_error("finite_field_units: q^m too large");
        n *= q;
    }
    return CyclicGaloisAction(m, n - 1, q % (n - 1));
}

long long CyclicGaloisAction::reduce(long long x) const {
    return ((x % module_order_) + module_order_) % module_order_;
}

long long CyclicGaloisAction::add(long long x, long long y) const {
    return (reduce(x) + reduce(y)) % module_order_;
}

long long CyclicGaloisAction::neg(long long x) const { return reduce(-reduce(x)); }

long long CyclicGaloisAction::act(long long i, long long x) const {
    i = ((i % group_order_) + group_order_) % group_order_;
    return mulmod(t_powers_[static_cast<size_t>(i)], reduce(x), module_order_);
}

long long CyclicGaloisAction::norm_multiplier() const {
    long long s = 0;
    for (long long tp : t_powers_) s = (s + tp) % module_order_;
    return s;
}

long long CyclicGaloisAction::norm(long long x) const {
    return mulmod(norm_multiplier(), reduce(x), module_order_);
}

OneCochain::OneCochain(const CyclicGaloisAction& a, std::vector<long long> values)
    : values_(std::move(values)) {
    if (values_.size() != static_cast<size_t>(a.group_order()))
        throw std::invalid_argument("OneCochain: need one value per group element");
    for (auto& v : values_) v = a.reduce(v);
}

TwoCochain::TwoCochain(const CyclicGaloisAction& a, std::vector<std::vector<long long>> values)
    : values_(std::move(values)) {
    size_t m = static_cast<size_t>(a.group_order());
    if (values_.size() != m)
        throw std::invalid_argument("TwoCochain: need an m x m table of values");
    for (auto& row : values_) {
        if (row.size() != m) throw std::invalid_argument("TwoCochain: need an m x m table of values");
        for (auto& v : row) v = a.reduce(v);
    }
}

bool TwoCochain::normalized(const CyclicGaloisAction& a) const {
    for (long long i = 0; i < a.group_order(); ++i)
        if ((*this)(0, i) != 0 || (*this)(i, 0) != 0) return false;
    return true;
}

TwoCochain coboundary(const CyclicGaloisAction& a, const OneCochain& f) {
    long long m = a.group_order();
    std::vector<std::vector<long long>> c(static_cast<size_t>(m),
                                          std::vector<long long>(static_cast<size_t>(m)));
    for (long long i = 0; i < m; ++i)
        for (long long j = 0; j < m; ++j)
            c[static_cast<size_t>(i)][static_cast<size_t>(j)] =
                a.add(a.add(a.act(i, f(j)), a.neg(f((i + j) % m))), f(i));
    return TwoCochain(a, std::move(c));
}

bool is_cocycle(const CyclicGaloisAction& a, const TwoCochain& c) {
    long long m = a.group_order();
    for (long long i = 0; i < m; ++i)
        for (long long j = 0; j < m; ++j)
            for (long long k = 0; k < m; ++k) {
                long long lhs = a.add(a.act(i, c(j, k)), c(i, (j + k) % m));
                long long rhs = a.add(c((i + j) % m, k), c(i, j));
                if (lhs != rhs) return false;
            }
    return true;
}

H2Description h2_cyclic(const CyclicGaloisAction& a) {
    long long n = a.module_order();
    long long t = a.multiplier();
    // fixed points: (t-1)x = 0 mod n; norm image: generated by gcd(n, s)
    long long invariants = std::gcd(n, ((t - 1) % n + n) % n);
    long long norms = n / std::gcd(n, a.norm_multiplier());
    // N(M) sits inside M^G, so the quotient order is exact
    if (invariants % norms != 0)
        throw std::logic_error("h2_cyclic: norm image not contained in invariants");
    return H2Description{invariants, norms, invariants / norms};
}

CrossedProductTable::Monomial CrossedProductTable::multiply(const Monomial& x,
                                                            const Monomial& y) const {
    long long m = action_.group_order();
    long long i = ((x.grade % m) + m) % m;
    long long j = ((y.grade % m) + m) % m;
    long long coeff = action_.add(action_.add(action_.reduce(x.coeff), action_.act(i, y.coeff)),
                                  cocycle_(i, j));
    return Monomial{coeff, (i + j) % m};
}

bool CrossedProductTable::associative() const {
    size_t total = monomial_count();
    if (total > 500) throw std::domain_error("CrossedProductTable: associativity check too large");
    std::vector<Monomial> ms;
    ms.reserve(total);
    for (long long u = 0; u < action_.module_order(); ++u)
        for (long long g = 0; g < action_.group_order(); ++g) ms.push_back(Monomial{u, g});
    for (const auto& x : ms)
        for (const auto& y : ms)
            for (const auto& z : ms)
                if (multiply(multiply(x, y), z) != multiply(x, multiply(y, z))) return false;
    return true;
}

long long CrossedProductTable::central_monomial_count() const {
    size_t total = monomial_count();
    if (total > 2000) throw std::domain_error("CrossedProductTable: center scan too large");
    std::vector<Monomial> ms;
    ms.reserve(total);
    for (long long u = 0; u < action_.module_order(); ++u)
        for (long long g = 0; g < action_.group_order(); ++g) ms.push_back(Monomial{u, g});
    long long count = 0;
    for (const auto& x : ms) {
        bool central = true;
        for (const auto& y : ms)
            if (multiply(x, y) != multiply(y, x)) {
                central = false;
                break;
            }
        if (central) ++count;
    }
    return count;
}

CrossedProductTable crossed_product(const CyclicGaloisAction& a, const TwoCochain& c) {
    if (!c.normalized(a))
        throw std::invalid_argument("crossed_product: cocycle must be normalized");
    if (!is_cocycle(a, c))
        throw std::invalid_argument("crossed_product: not a cocycle, table would not associate");
    return CrossedProductTable::unchecked(a, c);
}

bool associativity_iff_cocycle(const CyclicGaloisAction& a, const TwoCochain& c) {
    return CrossedProductTable::unchecked(a, c).associative() == is_cocycle(a, c);
}

}  // namespace brauerlab
