#include "brauerlab/double_complex.hpp"

#include <algorithm>

namespace brauerlab {

FiniteAbelianGroup::FiniteAbelianGroup(std::vector<long long> moduli)
    : moduli_(std::move(moduli)) {
    for (long long m : moduli_)
        if (m < 1) throw std::domain_error("FiniteAbelianGroup: moduli must be >= 1");
}

long long FiniteAbelianGroup::size() const {
    long long s = 1;
    for (long long m : moduli_) {
        if (s > (1LL << 62) / m) throw std::domain_error("FiniteAbelianGroup: size overflow");
        s *= m;
    }
    return s;
}

FiniteAbelianGroup::Elem FiniteAbelianGroup::reduce(Elem e) const {
    if (e.size() != moduli_.size())
        throw std::invalid_argument("FiniteAbelianGroup: wrong element rank");
    for (size_t i = 0; i < e.size(); ++i) e[i] = ((e[i] % moduli_[i]) + moduli_[i]) % moduli_[i];
    return e;
}

FiniteAbelianGroup::Elem FiniteAbelianGroup::add(const Elem& a, const Elem& b) const {
    Elem r = reduce(a);
    Elem s = reduce(b);
    for (size_t i = 0; i < r.size(); ++i) r[i] = (r[i] + s[i]) % moduli_[i];
    return r;
}

FiniteAbelianGroup::Elem FiniteAbelianGroup::neg(const Elem& a) const {
    Elem r = reduce(a);
    for (size_t i = 0; i < r.size(); ++i) r[i] = (moduli_[i] - r[i]) % moduli_[i];
    return r;
}

bool FiniteAbelianGroup::is_zero(const Elem& e) const {
    Elem r = reduce(e);
    return std::all_of(r.begin(), r.end(), [](long long v) { return v == 0; });
}

bool FiniteAbelianGroup::next(Elem& e) const {
    for (size_t i = 0; i < e.size(); ++i) {
        if (++e[i] < moduli_[i]) return true;
        e[i] = 0;
    }
    return false;
}

std::vector<FiniteAbelianGroup::Elem> FiniteAbelianGroup::elements() const {
    if (size() > 1000000) throw std::domain_error("FiniteAbelianGroup: enumeration too large");
    std::vector<Elem> out;
    Elem e = zero();
    do {
        out.push_back(e);
    } while (next(e));
    return out;
}

Hom::Hom(FiniteAbelianGroup from, FiniteAbelianGroup to, std::vector<std::vector<long long>> mat)
    : from_(std::move(from)), to_(std::move(to)), mat_(std::move(mat)) {
    if (mat_.size() != to_.rank()) throw std::invalid_argument("Hom: wrong row count");
    for (size_t i = 0; i < mat_.size(); ++i) {
        if (mat_[i].size() != from_.rank()) throw std::invalid_argument("Hom: wrong column count");
        for (size_t j = 0; j < mat_[i].size(); ++j) {
            long long mi = to_.moduli()[i];
            mat_[i][j] = ((mat_[i][j] % mi) + mi) % mi;
            // generator j has order from.moduli[j], so its image must too
            if (static_cast<__int128>(mat_[i][j]) * from_.moduli()[j] % mi != 0)
                throw std::invalid_argument("Hom: matrix entry does not respect generator order");
        }
    }
}

Hom Hom::zero(const FiniteAbelianGroup& from, const FiniteAbelianGroup& to) {
    return Hom(from, to,
               std::vector<std::vector<long long>>(to.rank(),
                                                   std::vector<long long>(from.rank(), 0)));
}

FiniteAbelianGroup::Elem Hom::apply(const FiniteAbelianGroup::Elem& x) const {
    FiniteAbelianGroup::Elem in = from_.reduce(x);
    FiniteAbelianGroup::Elem out = to_.zero();
    for (size_t i = 0; i < to_.rank(); ++i) {
        __int128 acc = 0;
        for (size_t j = 0; j < from_.rank(); ++j)
            acc += static_cast<__int128>(mat_[i][j]) * in[j];
        out[i] = static_cast<long long>(acc % to_.moduli()[i]);
    }
    return out;
}

Hom Hom::negated() const {
    auto m = mat_;
    for (size_t i = 0; i < m.size(); ++i)
        for (auto& v : m[i]) v = (to_.moduli()[i] - v) % to_.moduli()[i];
    return Hom(from_, to_, std::move(m));
}

bool Hom::is_zero_map() const {
    for (size_t i = 0; i < mat_.size(); ++i)
        for (long long v : mat_[i])
            if (v % to_.moduli()[i] != 0) return false;
    return true;
}

Hom compose(const Hom& g, const Hom& f) {
    if (!(f.to().moduli() == g.from().moduli()))
        throw std::invalid_argument("compose: middle groups differ");
    std::vector<std::vector<long long>> m(g.to().rank(),
                                          std::vector<long long>(f.from().rank(), 0));
    for (size_t i = 0; i < g.to().rank(); ++i)
        for (size_t k = 0; k < f.from().rank(); ++k) {
            __int128 acc = 0;
            for (size_t j = 0; j < f.to().rank(); ++j)
                acc += static_cast<__int128>(g.matrix()[i][j]) * f.matrix()[j][k];
            m[i][k] = static_cast<long long>(acc % g.to().moduli()[i]);
        }
    return Hom(f.from(), g.to(), std::move(m));
}

bool homs_equal(const Hom& f, const Hom& g) {
    if (!(f.from().moduli() == g.from().moduli()) || !(f.to().moduli() == g.to().moduli()))
        return false;
    for (size_t i = 0; i < f.to().rank(); ++i)
        for (size_t j = 0; j < f.from().rank(); ++j)
            if ((f.matrix()[i][j] - g.matrix()[i][j]) % f.to().moduli()[i] != 0) return false;
    return true;
}

DoubleComplex::DoubleComplex(int width, int height,
                             std::vector<std::vector<FiniteAbelianGroup>> groups,
                             std::vector<std::vector<Hom>> horiz, std::vector<std::vector<Hom>> vert)
    : width_(width), height_(height), groups_(std::move(groups)), horiz_(std::move(horiz)),
      vert_(std::move(vert)) {
    validate();
}

const FiniteAbelianGroup& DoubleComplex::group(int p, int q) const {
    if (p < 0 || p >= width_ || q < 0 || q >= height_)
        throw std::out_of_range("DoubleComplex: position outside the grid");
    return groups_[static_cast<size_t>(p)][static_cast<size_t>(q)];
}

Hom DoubleComplex::d_horiz(int p, int q) const {
    if (p + 1 >= width_) return Hom::zero(group(p, q), FiniteAbelianGroup());
    return horiz_[static_cast<size_t>(p)][static_cast<size_t>(q)];
}

Hom DoubleComplex::d_vert_raw(int p, int q) const {
    if (q + 1 >= height_) return Hom::zero(group(p, q), FiniteAbelianGroup());
    return vert_[static_cast<size_t>(p)][static_cast<size_t>(q)];
}

Hom DoubleComplex::d_vert(int p, int q) const {
    Hom raw = d_vert_raw(p, q);
    return (p % 2 == 0) ? raw : raw.negated();
}

void DoubleComplex::validate() const {
    if (width_ < 1 || height_ < 1)
        throw std::invalid_argument("DoubleComplex: grid must be nonempty");
    if (groups_.size() != static_cast<size_t>(width_))
        throw std::invalid_argument("DoubleComplex: group grid shape mismatch");
    for (const auto& col : groups_)
        if (col.size() != static_cast<size_t>(height_))
            throw std::invalid_argument("DoubleComplex: group grid shape mismatch");
    if (width_ > 1) {
        if (horiz_.size() != static_cast<size_t>(width_ - 1))
            throw std::invalid_argument("DoubleComplex: horizontal map grid shape mismatch");
        for (const auto& col : horiz_)
            if (col.size() != static_cast<size_t>(height_))
                throw std::invalid_argument("DoubleComplex: horizontal map grid shape mismatch");
    }
    if (height_ > 1) {
        if (vert_.size() != static_cast<size_t>(width_))
            throw std::invalid_argument("DoubleComplex: vertical map grid shape mismatch");
        for (const auto& col : vert_)
            if (col.size() != static_cast<size_t>(height_ - 1))
                throw std::invalid_argument("DoubleComplex: vertical map grid shape mismatch");
    }

    auto same = [](const FiniteAbelianGroup& a, const FiniteAbelianGroup& b) {
        return a.moduli() == b.moduli();
    };
    for (int p = 0; p + 1 < width_; ++p)
        for (int q = 0; q < height_; ++q) {
            const Hom& h = horiz_[static_cast<size_t>(p)][static_cast<size_t>(q)];
            if (!same(h.from(), group(p, q)) || !same(h.to(), group(p + 1, q)))
                throw std::invalid_argument("DoubleComplex: horizontal map endpoints mismatch");
        }
    for (int p = 0; p < width_; ++p)
        for (int q = 0; q + 1 < height_; ++q) {
            const Hom& v = vert_[static_cast<size_t>(p)][static_cast<size_t>(q)];
            if (!same(v.from(), group(p, q)) || !same(v.to(), group(p, q + 1)))
                throw std::invalid_argument("DoubleComplex: vertical map endpoints mismatch");
        }

    for (int p = 0; p + 2 < width_; ++p)
        for (int q = 0; q < height_; ++q)
            if (!compose(d_horiz(p + 1, q), d_horiz(p, q)).is_zero_map())
                throw std::invalid_argument("DoubleComplex: d' does not square to zero");
    for (int p = 0; p < width_; ++p)
        for (int q = 0; q + 2 < height_; ++q)
            if (!compose(d_vert_raw(p, q + 1), d_vert_raw(p, q)).is_zero_map())
                throw std::invalid_argument("DoubleComplex: raw d_v does not square to zero");
    for (int p = 0; p + 1 < width_; ++p)
        for (int q = 0; q + 1 < height_; ++q)
            if (!homs_equal(compose(d_horiz(p, q + 1), d_vert_raw(p, q)),
                            compose(d_vert_raw(p + 1, q), d_horiz(p, q))))
                throw std::invalid_argument("DoubleComplex: squares do not commute");
}

TotalElem total_differential(const DoubleComplex& dc, const TotalElem& x) {
    TotalElem out;
    auto accumulate = [&dc, &out](int p, int q, const FiniteAbelianGroup::Elem& v) {
        if (p >= dc.width() || q >= dc.height()) return;
        const FiniteAbelianGroup& g = dc.group(p, q);
        auto it = out.find({p, q});
        if (it == out.end())
            out[{p, q}] = g.reduce(v);
        else
            it->second = g.add(it->second, v);
    };
    for (const auto& [pos, val] : x) {
        auto [p, q] = pos;
        if (p + 1 < dc.width()) accumulate(p + 1, q, dc.d_horiz(p, q).apply(val));
        if (q + 1 < dc.height()) accumulate(p, q + 1, dc.d_vert(p, q).apply(val));
    }
    return out;
}

bool total_elem_is_zero(const DoubleComplex& dc, const TotalElem& x) {
    for (const auto& [pos, val] : x)
        if (!dc.group(pos.first, pos.second).is_zero(val)) return false;
    return true;
}

namespace {

// subgroup d'(ker d'') at (1,0), as a sorted set of elements of the group at (2,0)
std::set<FiniteAbelianGroup::Elem> e2_denominator(const DoubleComplex& dc) {
    std::set<FiniteAbelianGroup::Elem> den;
    const FiniteAbelianGroup& g10 = dc.group(1, 0);
    Hom dv = dc.d_vert(1, 0);
    Hom dh = dc.d_horiz(1, 0);
    FiniteAbelianGroup::Elem z = g10.zero();
    do {
        bool in_kernel = dc.height() < 2 || dc.group(1, 1).is_zero(dv.apply(z));
        if (in_kernel) den.insert(dh.apply(z));
    } while (g10.next(z));
    return den;
}

FiniteAbelianGroup::Elem canonical_rep(const FiniteAbelianGroup& g,
                                       const FiniteAbelianGroup::Elem& c,
                                       const std::set<FiniteAbelianGroup::Elem>& den) {
    FiniteAbelianGroup::Elem best = g.reduce(c);
    for (const auto& d : den) best = std::min(best, g.add(c, d));
    return best;
}

}  // namespace

SpectralClass d2_class_of_witness(const DoubleComplex& dc, const FiniteAbelianGroup::Elem& y) {
    if (dc.width() < 3) throw std::domain_error("total_complex_d2: grid too narrow for E_2^{2,0}");
    const FiniteAbelianGroup& g20 = dc.group(2, 0);
    FiniteAbelianGroup::Elem rep = g20.neg(dc.d_horiz(1, 0).apply(y));
    auto den = e2_denominator(dc);
    return SpectralClass{g20, canonical_rep(g20, rep, den), static_cast<long long>(den.size())};
}

std::vector<FiniteAbelianGroup::Elem> d2_witnesses(const DoubleComplex& dc,
                                                   const FiniteAbelianGroup::Elem& x) {
    if (dc.width() < 2 || dc.height() < 2)
        throw std::domain_error("total_complex_d2: grid too small");
    const FiniteAbelianGroup& g01 = dc.group(0, 1);
    const FiniteAbelianGroup& g10 = dc.group(1, 0);
    const FiniteAbelianGroup& g11 = dc.group(1, 1);

    FiniteAbelianGroup::Elem target = dc.d_horiz(0, 1).apply(g01.reduce(x));
    std::vector<FiniteAbelianGroup::Elem> out;
    Hom dv = dc.d_vert(1, 0);
    FiniteAbelianGroup::Elem y = g10.zero();
    do {
        if (g11.reduce(dv.apply(y)) == g11.reduce(target)) out.push_back(y);
    } while (g10.next(y));
    return out;
}

SpectralClass total_complex_d2(const DoubleComplex& dc, const FiniteAbelianGroup::Elem& x) {
    if (dc.width() < 3 || dc.height() < 2)
        throw std::domain_error("total_complex_d2: grid too small for E_2^{2,0}");
    const FiniteAbelianGroup& g01 = dc.group(0, 1);
    FiniteAbelianGroup::Elem xr = g01.reduce(x);

    if (dc.height() > 2 && !dc.group(0, 2).is_zero(dc.d_vert(0, 1).apply(xr)))
        throw std::domain_error("total_complex_d2: x is not a d''-cocycle");

    auto witnesses = d2_witnesses(dc, xr);
    if (witnesses.empty())
        throw std::domain_error("total_complex_d2: d'(x) is not a d''-boundary");
    return d2_class_of_witness(dc, witnesses.front());
}

}  // namespace brauerlab
