/**
 * @file models.hpp
 * @brief Index of the generic fibre from regular-model special-fibre data,
 *        and the circle-gluing semistable degeneration.
 *
 * A model is ingested as component data: each component of the reduced
 * special fibre carries its multiplicity e and the degree f of its field of
 * constants over the residue field. The index of the generic fibre is
 * gcd over components of e*f. Computing (e, f) from equations is a full
 * computer-algebra problem and is out of scope; f is taken as given.
 */
#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "brauerlab/qz.hpp"

namespace brauerlab {

struct FibreComponent {
    std::string label;
    long long e;  // multiplicity in the special fibre
    long long f;  // constant-field degree of the normalized component
};

/// Reduced special fibre of a regular model. The dual graph (over the
/// algebraic closure) is optional metadata: the index formula never reads
/// it, but when supplied it must be connected, mirroring the geometrically
/// connected fibre hypothesis. Its vertices are closure components and are
/// not matched against the base-field component labels.
struct SpecialFibre {
    std::vector<FibreComponent> components;
    std::optional<std::vector<std::pair<std::string, std::string>>> dual_graph;
};

/// Throws std::domain_error on an empty component list, e or f < 1, or a
/// disconnected dual graph.
void validate_fibre(const SpecialFibre& fb);

/// gcd over components of e*f.
Integer index_from_model(const SpecialFibre& fb);

/// Gluing datum: the degree-n constant-field extension of F_q glued along a
/// conjugate pair of points of a genus-g building block C.
struct GluingSpec {
    long long n;        // extension degree = circle length, >= 2
    long long q;        // base finite field size, a prime power
    long long genus_c;  // genus of C
    // Aut(C x closure) = 1 is required for the deformation step but is not
    // verified here; the flag records the assumption.
    bool assumes_no_automorphisms = true;
};

/// One base component (e = 1, f = n) whose closure dual graph is a cycle of
/// length n; the resulting index is n. For n = 2 the cycle degenerates to a
/// double edge between the two conjugate copies.
SpecialFibre glue_circle(const GluingSpec& spec);

/// True iff index_from_model(fb) is not a power of p: then no section exists
/// over the completion. The caller asserts positive genus.
bool obstructs_section(const SpecialFibre& fb, const Integer& p);

}  // namespace brauerlab
