/**
 * @file period_index.hpp
 * @brief Admissibility of (genus, period, index) triples over p-adic local
 *        fields, their enumeration, the Hurwitz genus formula, and the
 *        deduction rules a split fundamental extension triggers.
 *
 * A triple is admissible when ix | pe + 1 - g together with the derived
 * conditions pe | g-1, pe | ix | 2pe, and (ix = 2pe implies (g-1)/pe odd).
 * Every admissible triple is realized by some curve, so enumeration is a
 * faithful description of the possible invariants.
 */
#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace brauerlab {

struct PITriple {
    long long g;   // genus
    long long pe;  // period
    long long ix;  // index
    friend bool operator==(const PITriple&, const PITriple&) = default;
};

struct AdmissibilityResult {
    bool admissible;
    std::vector<std::string> violations;  // names of the failed conditions
};

/// g >= 1 required; g = 0 is outside the theorem's setting and throws.
AdmissibilityResult lichtenbaum_admissible(const PITriple& t);

/// All admissible (pe, ix) for the given genus, sorted and duplicate-free.
/// For g = 1 the admissible set is infinite (pe | 0 admits every pe), so a
/// bound on pe is required; the bound is ignored for g >= 2.
std::vector<std::pair<long long, long long>> enumerate_admissible(
    long long g, std::optional<long long> pe_bound = std::nullopt);

/// g' with g' - 1 = degree * (g - 1) for a finite etale cover.
long long hurwitz_genus(long long g, long long degree);

/// Oracle for the equivalence [pe = ix <=> ix | g-1] on an admissible triple;
/// rejects inadmissible input.
bool step1_equivalence_holds(const PITriple& t);

struct SectionContext {
    long long p;                   // residue characteristic
    long long g;                   // genus, must be positive
    bool has_section;              // the fundamental extension splits
    // An even-degree finite etale cover with split fundamental extension is
    // available. The equality rule is stated both with the curve as source
    // and as target of such a cover; this single flag covers both phrasings.
    bool even_cover_with_section;
};

struct Conclusion {
    std::string statement;
    std::string rule;  // identifier of the single rule the conclusion cites
};

struct DeductionReport {
    std::vector<Conclusion> conclusions;
    std::optional<std::vector<PITriple>> surviving_triples;
};

/// Consequences of a section over a p-adic field: period and index are
/// p-powers; for odd p (or given an even split cover) they are equal.
/// No conclusions without a section. For g >= 2 the report also lists the
/// admissible triples surviving the filter.
DeductionReport section_consequences(const SectionContext& ctx);

/// enumerate_admissible(g) filtered to pe, ix powers of p, plus pe = ix when
/// p is odd. Requires g >= 2.
std::vector<std::pair<long long, long long>> admissible_with_section(long long g, long long p);

}  // namespace brauerlab
