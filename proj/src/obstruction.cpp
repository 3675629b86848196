#include "brauerlab/obstruction.hpp"

#include <algorithm>
#include <set>

namespace brauerlab {

namespace {

void validate_descriptor(const CurveDescriptor& c) {
    if (const auto* d = std::get_if<DiagonalForm>(&c)) {
        if (d->n < 1) throw std::domain_error("DiagonalForm: n must be >= 1");
        if (d->a == 0 || d->b == 0)
            throw std::domain_error("DiagonalForm: coefficients must be nonzero");
    } else if (const auto* cc = std::get_if<ConicCover>(&c)) {
        if (cc->a == 0 || cc->b == 0)
            throw std::domain_error("ConicCover: coefficients must be nonzero");
        if (cc->cover_degree < 1) throw std::domain_error("ConicCover: degree must be >= 1");
        if (cc->genus < 1) throw std::domain_error("ConicCover: genus must be >= 1");
    } else {
        const auto& m = std::get<ModelCurve>(c);
        if (m.genus < 1) throw std::domain_error("ModelCurve: genus must be >= 1");
        if (!is_prime(m.place_prime)) throw std::domain_error("ModelCurve: place must be prime");
        validate_fibre(m.fibre);
    }
}

// conic coefficients of a curve mapping to a conic, if any
std::optional<QuaternionSymbol> conic_symbol(const CurveDescriptor& c) {
    if (const auto* d = std::get_if<DiagonalForm>(&c)) return QuaternionSymbol(d->a, d->b);
    if (const auto* cc = std::get_if<ConicCover>(&c)) return QuaternionSymbol(cc->a, cc->b);
    return std::nullopt;
}

}  // namespace

long long genus_of(const CurveDescriptor& c) {
    validate_descriptor(c);
    if (const auto* d = std::get_if<DiagonalForm>(&c))
        return (2 * d->n - 1) * (2 * d->n - 2) / 2;  // smooth plane curve of degree 2n
    if (const auto* cc = std::get_if<ConicCover>(&c)) return cc->genus;
    return std::get<ModelCurve>(c).genus;
}

bool real_points_diagonal(const Integer& a, const Integer& b) {
    if (a == 0 || b == 0)
        throw std::domain_error("real_points_diagonal: coefficients must be nonzero");
    // a > 0 gives Z = 0, X/Y = a^{1/2n}; symmetrically for b; both negative
    // forces X^{2n} = aY^{2n} + bZ^{2n} <= 0, so only the trivial solution.
    return !(a < 0 && b < 0);
}

InvariantClass local_brauer_class(const CurveDescriptor& c, const Place& v) {
    validate_descriptor(c);
    auto q = conic_symbol(c);
    if (!q)
        throw std::invalid_argument(
            "local_brauer_class: curve has no conic structure (model-curve input)");
    return hilbert_symbol(*q, v) == -1 ? InvariantClass::half() : InvariantClass::zero();
}

PlaceVerdict section_verdict(const CurveDescriptor& c, const Place& v) {
    long long g = genus_of(c);
    if (g < 1) throw std::domain_error("section_verdict: positive genus required");

    PlaceVerdict out{v, VerdictKind::NoInformation, "", "", std::nullopt};

    if (v.is_real()) {
        if (const auto* d = std::get_if<DiagonalForm>(&c)) {
            bool pts = real_points_diagonal(d->a, d->b);
            out.has_local_points_known = pts;
            if (!pts) {
                out.verdict = VerdictKind::NoSection;
                out.rule = "real-section-criterion";
                out.detail = "empty real locus: a real curve of positive genus has sections "
                             "exactly when it has real points";
            }
        }
        // abstract covers and model curves: the real criterion is not applied
        return out;
    }

    const Integer& p = v.prime();
    if (const auto* m = std::get_if<ModelCurve>(&c)) {
        if (m->place_prime == p) {
            Integer ix = index_from_model(m->fibre);
            if (!is_power_of(ix, p)) {
                out.verdict = VerdictKind::NoSection;
                out.rule = "index-p-power-obstruction";
                out.detail = "special-fibre index " + ix.get_str() + " is not a power of " +
                             p.get_str() + "; a section would force a p-power index";
                out.has_local_points_known = false;
            }
        }
        return out;
    }

    InvariantClass cls = local_brauer_class(c, v);
    if (!is_prime_power_order(cls, p)) {
        out.verdict = VerdictKind::NoSection;
        out.rule = "index-p-power-obstruction";
        out.detail = "local invariant " + cls.str() + " of the conic class has order " +
                     qz_order(cls).get_str() + ", not a power of " + p.get_str() +
                     "; a section would force the relative Brauer group to be a p-group";
        out.has_local_points_known = false;
    }
    return out;
}

GlobalReport global_report(const CurveDescriptor& c) {
    validate_descriptor(c);
    GlobalReport report;
    report.curve = c;
    report.genus = genus_of(c);

    std::set<Place> places = {Place::real()};
    if (auto q = conic_symbol(c)) {
        places.insert(Place::finite(2));
        for (const Integer& p : odd_prime_divisors(q->a * q->b)) places.insert(Place::finite(p));
    }
    if (const auto* m = std::get_if<ModelCurve>(&c)) places.insert(Place::finite(m->place_prime));

    for (const Place& v : places) report.place_verdicts.push_back(section_verdict(c, v));

    if (const auto* d = std::get_if<DiagonalForm>(&c))
        report.real_points = real_points_diagonal(d->a, d->b);

    auto hit = std::find_if(report.place_verdicts.begin(), report.place_verdicts.end(),
                            [](const PlaceVerdict& pv) {
                                return pv.verdict == VerdictKind::NoSection;
                            });
    if (hit != report.place_verdicts.end()) {
        report.global_sections_excluded = true;
        report.global_points_excluded = true;  // a rational point would give a section
        report.witness = hit->place;
        if (report.genus >= 2)
            report.conclusion = GlobalConclusion::SectionConjectureHoldsTrivially;
    }
    return report;
}

std::vector<std::vector<InvariantClass>> hasse_brauer_noether_deduce(
    const std::vector<std::pair<Place, CyclicSubgroup>>& constraints) {
    std::set<Place> seen;
    for (const auto& [place, group] : constraints)
        if (!seen.insert(place).second)
            throw std::invalid_argument("hasse_brauer_noether_deduce: repeated place " +
                                        place.str());

    Integer total = 1;
    for (const auto& [place, group] : constraints) {
        total *= group.order();
        if (total > 50000000)
            throw std::domain_error("hasse_brauer_noether_deduce: enumeration too large");
    }

    std::vector<std::vector<InvariantClass>> out;
    std::vector<InvariantClass> current(constraints.size());
    // lexicographic enumeration over the product of the allowed groups
    auto recurse = [&](auto&& self, size_t idx, const InvariantClass& sum) -> void {
        if (idx == constraints.size()) {
            if (sum.is_zero()) out.push_back(current);
            return;
        }
        const Integer& n = constraints[idx].second.order();
        for (Integer k = 0; k < n; ++k) {
            current[idx] = InvariantClass(k, n);
            self(self, idx + 1, qz_add(sum, current[idx]));
        }
    };
    recurse(recurse, 0, InvariantClass::zero());
    return out;
}

DeductionReport corollary_q_deduce(long long g, bool has_section,
                                   const std::vector<Integer>& bad_primes) {
    if (g < 1) throw std::domain_error("corollary_q_deduce: genus must be positive");
    for (const Integer& p : bad_primes)
        if (!is_prime(p))
            throw std::invalid_argument("corollary_q_deduce: bad prime list contains " +
                                        p.get_str());

    DeductionReport report;
    if (!has_section) return report;

    // Over Q every residue characteristic has exactly one place, so the
    // one-bad-place-per-prime condition holds for any bad-prime set: each
    // local invariant is of p-power order with distinct p, and the zero sum
    // forces every invariant to vanish.
    report.conclusions.push_back(
        {"Br(X/Q) = 0: every Brauer obstruction for line bundles vanishes",
         "hasse-brauer-noether-over-Q"});
    report.conclusions.push_back({"pe(X) = ix(X)", "hasse-brauer-noether-over-Q"});
    return report;
}

}  // namespace brauerlab
