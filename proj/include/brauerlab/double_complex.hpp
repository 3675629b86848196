/**
 * @file double_complex.hpp
 * @brief Finite double complexes of abelian groups and the first-quadrant
 *        E_2 differential d_2^{0,1} computed on the total complex.
 *
 * A complex stores a grid of finite abelian groups with horizontal maps d'
 * and raw vertical maps d_v whose squares commute; the effective vertical
 * differential is d'' = (-1)^p d_v, which anticommutes with d' so that
 * d = d' + d'' squares to zero on the total complex.
 *
 * For a class [x] at position (0,1) with d''(x) = 0 and d'(x) = d''(y), the
 * differential is d_2^{0,1}([x]) = [-d'(y)] in E_2^{2,0}; the class does not
 * depend on the witness y.
 */
#pragma once

#include <map>
#include <optional>
#include <set>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace brauerlab {

/// Product of cyclic groups Z/m_1 x ... x Z/m_r; elements are residue vectors.
class FiniteAbelianGroup {
    std::vector<long long> moduli_;

public:
    using Elem = std::vector<long long>;

    FiniteAbelianGroup() = default;  // trivial group (empty product)
    explicit FiniteAbelianGroup(std::vector<long long> moduli);

    const std::vector<long long>& moduli() const { return moduli_; }
    size_t rank() const { return moduli_.size(); }
    long long size() const;

    Elem zero() const { return Elem(moduli_.size(), 0); }
    Elem reduce(Elem e) const;
    Elem add(const Elem& a, const Elem& b) const;
    Elem neg(const Elem& a) const;
    bool is_zero(const Elem& e) const;

    /// Odometer step through all elements; returns false after the last one.
    bool next(Elem& e) const;
    /// All elements; guarded to desk scale.
    std::vector<Elem> elements() const;
};

/// Homomorphism between two such groups, as a matrix: generator j of the
/// source maps to sum_i mat[i][j] * (generator i of the target).
class Hom {
    FiniteAbelianGroup from_;
    FiniteAbelianGroup to_;
    std::vector<std::vector<long long>> mat_;  // rows = to.rank(), cols = from.rank()

public:
    Hom(FiniteAbelianGroup from, FiniteAbelianGroup to, std::vector<std::vector<long long>> mat);

    static Hom zero(const FiniteAbelianGroup& from, const FiniteAbelianGroup& to);

    const FiniteAbelianGroup& from() const { return from_; }
    const FiniteAbelianGroup& to() const { return to_; }
    const std::vector<std::vector<long long>>& matrix() const { return mat_; }

    FiniteAbelianGroup::Elem apply(const FiniteAbelianGroup::Elem& x) const;
    Hom negated() const;
    bool is_zero_map() const;
};

Hom compose(const Hom& g, const Hom& f);  // g after f
bool homs_equal(const Hom& f, const Hom& g);

/// Grid of groups at positions (p,q), 0 <= p < width, 0 <= q < height, with
/// horizontal maps (p,q)->(p+1,q) and raw vertical maps (p,q)->(p,q+1).
class DoubleComplex {
    int width_ = 0;
    int height_ = 0;
    std::vector<std::vector<FiniteAbelianGroup>> groups_;  // [p][q]
    std::vector<std::vector<Hom>> horiz_;                  // [p][q], p < width-1
    std::vector<std::vector<Hom>> vert_;                   // [p][q], q < height-1

public:
    DoubleComplex(int width, int height, std::vector<std::vector<FiniteAbelianGroup>> groups,
                  std::vector<std::vector<Hom>> horiz, std::vector<std::vector<Hom>> vert);

    int width() const { return width_; }
    int height() const { return height_; }
    const FiniteAbelianGroup& group(int p, int q) const;

    /// d' out of (p,q); the zero map off the right edge.
    Hom d_horiz(int p, int q) const;
    /// raw vertical map out of (p,q); the zero map off the top edge.
    Hom d_vert_raw(int p, int q) const;
    /// d'' = (-1)^p * raw vertical map.
    Hom d_vert(int p, int q) const;

    /// Shapes, d'd' = 0, d_v d_v = 0, and commuting squares (so the signed
    /// differentials anticommute). Throws std::invalid_argument on failure.
    void validate() const;
};

/// Element of the total complex in degree n: components indexed by (p,q),
/// p+q = n. Missing positions are zero.
using TotalElem = std::map<std::pair<int, int>, FiniteAbelianGroup::Elem>;

/// d = d' + d'' applied to a degree-n element; the result sits in degree n+1.
TotalElem total_differential(const DoubleComplex& dc, const TotalElem& x);

bool total_elem_is_zero(const DoubleComplex& dc, const TotalElem& x);

/// A class in E_2^{2,0} = ker(d' on ker d'' at (2,0)) / d'(ker d'' at (1,0)),
/// stored by a canonical coset representative.
struct SpectralClass {
    FiniteAbelianGroup group;                  // ambient group at (2,0)
    FiniteAbelianGroup::Elem representative;   // lexicographically least in its coset
    long long denominator_size;                // |d'(ker d'' at (1,0))|

    friend bool operator==(const SpectralClass& a, const SpectralClass& b) {
        return a.representative == b.representative;
    }
};

/// d_2^{0,1}([x]) for x in the group at (0,1). Requires d''(x) = 0 and
/// d'(x) in the image of d'' (the witness is found by exhaustive search);
/// throws std::domain_error otherwise.
SpectralClass total_complex_d2(const DoubleComplex& dc, const FiniteAbelianGroup::Elem& x);

/// All witnesses y at (1,0) with d''(y) = d'(x); used to check witness
/// independence.
std::vector<FiniteAbelianGroup::Elem> d2_witnesses(const DoubleComplex& dc,
                                                   const FiniteAbelianGroup::Elem& x);

/// The class of -d'(y) in E_2^{2,0} for a given witness y.
SpectralClass d2_class_of_witness(const DoubleComplex& dc, const FiniteAbelianGroup::Elem& y);

}  // namespace brauerlab
