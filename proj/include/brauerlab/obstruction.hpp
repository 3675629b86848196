/**
 * @file obstruction.hpp
 * @brief End-to-end section-obstruction analysis of diagonal-form covers of
 *        conics over Q and of curves given by reduction data: per-place
 *        verdicts, the global report, and the local-global deductions.
 *
 * A diagonal form X^{2n} - aY^{2n} - bZ^{2n} = 0 maps onto the conic
 * X^2 - aY^2 - bZ^2 = 0 by raising coordinates to the n-th power, which puts
 * the quaternion class (a,b) into the relative Brauer group of the curve at
 * every completion. A local invariant of order not a power of the residue
 * characteristic rules out sections there; an empty real locus rules them out
 * at the real place. Verdicts never claim that a section exists.
 */
#pragma once

#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "brauerlab/hilbert.hpp"
#include "brauerlab/models.hpp"
#include "brauerlab/period_index.hpp"
#include "brauerlab/qz.hpp"

namespace brauerlab {

/// The plane curve X^{2n} - aY^{2n} - bZ^{2n} = 0 over Q; smooth of genus
/// (2n-1)(2n-2)/2 since a, b are nonzero.
struct DiagonalForm {
    long long n;
    Integer a;
    Integer b;
};

/// An abstract branched cover of the conic X^2 - aY^2 - bZ^2 = 0 with stated
/// degree and genus.
struct ConicCover {
    Integer a;
    Integer b;
    long long cover_degree;
    long long genus;
};

/// A curve known through its reduction data at a single finite place.
struct ModelCurve {
    long long genus;
    Integer place_prime;
    SpecialFibre fibre;
};

using CurveDescriptor = std::variant<DiagonalForm, ConicCover, ModelCurve>;

long long genus_of(const CurveDescriptor& c);

/// True iff the real locus of the diagonal form is nonempty, which holds
/// exactly when a and b are not both negative.
bool real_points_diagonal(const Integer& a, const Integer& b);

/// The quaternion invariant of (a,b) at v, an element of the relative Brauer
/// group of the curve at v. Rejects ModelCurve (no conic structure).
InvariantClass local_brauer_class(const CurveDescriptor& c, const Place& v);

enum class VerdictKind { NoSection, NoInformation };

struct PlaceVerdict {
    Place place;
    VerdictKind verdict;
    std::string rule;    // identifier of the rule behind a NoSection verdict
    std::string detail;  // human-readable explanation
    // Points give sections, so NoSection also excludes local points; true
    // records known local points, nullopt means undetermined.
    std::optional<bool> has_local_points_known;
};

/// Per-place verdict; requires positive genus (the obstruction theorems do).
PlaceVerdict section_verdict(const CurveDescriptor& c, const Place& v);

enum class GlobalConclusion {
    // genus >= 2 and some place rules out sections: neither sections nor
    // rational points exist, so the point-to-section map is vacuously bijective
    SectionConjectureHoldsTrivially,
    // the relative Brauer group is known to vanish globally; reached only
    // under a section hypothesis (see corollary_q_deduce), never from the
    // unassisted scan in global_report
    GlobalBrauerVanishes,
    Inconclusive,
};

struct GlobalReport {
    CurveDescriptor curve;
    long long genus = 0;
    std::vector<PlaceVerdict> place_verdicts;  // real first, then primes ascending
    GlobalConclusion conclusion = GlobalConclusion::Inconclusive;
    std::optional<Place> witness;              // place carrying the obstruction
    std::optional<bool> real_points;           // known for diagonal forms only
    bool global_sections_excluded = false;     // some place rules out sections
    bool global_points_excluded = false;       // follows: points give sections
};

/// Scans the real place and every finite place in the support of the curve's
/// quaternion class (plus the model place); invariants vanish elsewhere, so
/// the scan is complete. Concludes the section conjecture holds trivially
/// when genus >= 2 and some place rules out sections.
GlobalReport global_report(const CurveDescriptor& c);

/// All vectors of local invariants (one per place, within the allowed cyclic
/// group at that place) summing to zero in Q/Z. With pairwise coprime group
/// orders only the zero vector survives, which is the mechanism killing
/// global Brauer classes of mixed prime-power local orders.
std::vector<std::vector<InvariantClass>> hasse_brauer_noether_deduce(
    const std::vector<std::pair<Place, CyclicSubgroup>>& constraints);

/// Over Q each residue characteristic has one place, so a section makes every
/// Brauer obstruction for line bundles vanish and forces pe = ix.
DeductionReport corollary_q_deduce(long long g, bool has_section,
                                   const std::vector<Integer>& bad_primes);

}  // namespace brauerlab
