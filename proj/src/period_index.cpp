#include "brauerlab/period_index.hpp"

#include <algorithm>
#include <stdexcept>

namespace brauerlab {

namespace {

// sign-agnostic, with d | 0 for every positive d
bool divides_ll(long long d, long long n) { return d != 0 && n % d == 0; }

bool is_prime_ll(long long p) {
    if (p < 2) return false;
    for (long long d = 2; d * d <= p; ++d)
        if (p % d == 0) return false;
    return true;
}

bool is_power_of_ll(long long n, long long p) {
    if (n < 1) return false;
    while (n % p == 0) n /= p;
    return n == 1;
}

std::vector<long long> divisors_of(long long n) {
    std::vector<long long> small, large;
    for (long long d = 1; d * d <= n; ++d) {
        if (n % d != 0) continue;
        small.push_back(d);
        if (d != n / d) large.push_back(n / d);
    }
    small.insert(small.end(), large.rbegin(), large.rend());
    return small;
}

}  // namespace

AdmissibilityResult lichtenbaum_admissible(const PITriple& t) {
    if (t.g < 1) throw std::domain_error("lichtenbaum_admissible: genus must be >= 1");
    if (t.pe < 1 || t.ix < 1)
        throw std::domain_error("lichtenbaum_admissible: period and index must be positive");

    std::vector<std::string> violations;
    if (!divides_ll(t.ix, t.pe + 1 - t.g))
        violations.push_back("index divides period + 1 - genus");
    if (!divides_ll(t.pe, t.g - 1)) violations.push_back("period divides genus - 1");
    if (!(divides_ll(t.pe, t.ix) && divides_ll(t.ix, 2 * t.pe)))
        violations.push_back("period divides index divides twice the period");
    if (t.ix == 2 * t.pe && divides_ll(t.pe, t.g - 1) && ((t.g - 1) / t.pe) % 2 == 0)
        violations.push_back("index = 2*period forces (genus-1)/period odd");
    return AdmissibilityResult{violations.empty(), std::move(violations)};
}

std::vector<std::pair<long long, long long>> enumerate_admissible(
    long long g, std::optional<long long> pe_bound) {
    if (g < 1) throw std::domain_error("enumerate_admissible: genus must be >= 1");

    std::vector<long long> periods;
    if (g == 1) {
        if (!pe_bound)
            throw std::domain_error(
                "enumerate_admissible: g = 1 admits every period, a bound is required");
        for (long long pe = 1; pe <= *pe_bound; ++pe) periods.push_back(pe);
    } else {
        periods = divisors_of(g - 1);
    }

    std::vector<std::pair<long long, long long>> out;
    for (long long pe : periods)
        for (long long ix : {pe, 2 * pe})
            if (lichtenbaum_admissible(PITriple{g, pe, ix}).admissible) out.emplace_back(pe, ix);
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

long long hurwitz_genus(long long g, long long degree) {
    if (g < 1) throw std::domain_error("hurwitz_genus: genus must be >= 1");
    if (degree < 1) throw std::domain_error("hurwitz_genus: degree must be >= 1");
    __int128 r = static_cast<__int128>(degree) * (g - 1) + 1;
    if (r > (static_cast<__int128>(1) << 62)) throw std::overflow_error("hurwitz_genus: overflow");
    return static_cast<long long>(r);
}

bool step1_equivalence_holds(const PITriple& t) {
    if (!lichtenbaum_admissible(t).admissible)
        throw std::invalid_argument("step1_equivalence_holds: triple is not admissible");
    return (t.pe == t.ix) == divides_ll(t.ix, t.g - 1);
}

DeductionReport section_consequences(const SectionContext& ctx) {
    if (ctx.g < 1) throw std::domain_error("section_consequences: genus must be positive");
    if (!is_prime_ll(ctx.p)) throw std::invalid_argument("section_consequences: p must be prime");

    DeductionReport report;
    if (!ctx.has_section) return report;

    std::string p = std::to_string(ctx.p);
    report.conclusions.push_back({"pe(X) is a power of " + p, "section-period-p-power"});
    report.conclusions.push_back({"ix(X) is a power of " + p, "section-index-p-power"});
    if (ctx.p % 2 == 1)
        report.conclusions.push_back({"pe(X) = ix(X)", "odd-p-period-index-equality"});
    if (ctx.even_cover_with_section)
        report.conclusions.push_back({"pe(X) = ix(X)", "even-cover-period-index-equality"});

    if (ctx.g >= 2) {
        std::vector<PITriple> surviving;
        for (auto [pe, ix] : admissible_with_section(ctx.g, ctx.p))
            surviving.push_back(PITriple{ctx.g, pe, ix});
        report.surviving_triples = std::move(surviving);
    }
    return report;
}

std::vector<std::pair<long long, long long>> admissible_with_section(long long g, long long p) {
    if (g < 2) throw std::domain_error("admissible_with_section: genus must be >= 2");
    if (!is_prime_ll(p)) throw std::invalid_argument("admissible_with_section: p must be prime");

    std::vector<std::pair<long long, long long>> out;
    for (auto [pe, ix] : enumerate_admissible(g)) {
        if (!is_power_of_ll(pe, p) || !is_power_of_ll(ix, p)) continue;
        if (p % 2 == 1 && pe != ix) continue;
        out.emplace_back(pe, ix);
    }
    return out;
}

}  // namespace brauerlab
