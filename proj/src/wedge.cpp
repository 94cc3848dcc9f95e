#include "sp6/wedge.hpp"

#include <algorithm>
#include <stdexcept>

#include "sp6/matlie.hpp"
#include "sp6/uchar.hpp"

namespace sp6 {

namespace {

/// Root of p+ (side = +1) or p− (side = −1) at the pinned index.
Weight side_root(int side, int idx) {
    const Weight& w = noncompact_positive_roots()[static_cast<size_t>(idx)].w;
    return side > 0 ? w : -w;
}

/// Index of alpha within the pinned enumeration of the given side, or −1.
int side_index(int side, const Weight& alpha) {
    for (int i = 0; i < 6; ++i)
        if (side_root(side, i) == alpha) return i;
    return -1;
}

void check_subset(const std::vector<int>& s) {
    for (size_t i = 0; i < s.size(); ++i) {
        if (s[i] < 0 || s[i] > 5)
            throw std::invalid_argument("wedge basis index out of range");
        if (i > 0 && s[i] <= s[i - 1])
            throw std::invalid_argument("wedge basis subset not strictly increasing");
    }
}

/// Replaces slot t of the strictly increasing subset s by value b, sorts, and
/// reports the permutation sign; zero (nullopt) when b collides with another
/// slot.
std::optional<std::pair<std::vector<int>, int>> replace_slot(const std::vector<int>& s,
                                                             size_t t, int b) {
    std::vector<int> out = s;
    out[t] = b;
    int sign = 1;
    // Bubble the replaced entry into place, counting transpositions.
    for (size_t i = t; i + 1 < out.size() && out[i] > out[i + 1]; ++i) {
        std::swap(out[i], out[i + 1]);
        sign = -sign;
    }
    for (size_t i = t; i > 0 && out[i - 1] > out[i]; --i) {
        std::swap(out[i - 1], out[i]);
        sign = -sign;
    }
    for (size_t i = 0; i + 1 < out.size(); ++i)
        if (out[i] == out[i + 1]) return std::nullopt;
    return std::make_pair(std::move(out), sign);
}

/// Exact expansion of [X_c, X_(side,idx)] as a combination of same-side root
/// vectors, computed from matrix brackets and cached.  The action of a
/// compact root vector preserves p+ and p−; any component outside the
/// acting side's 6 roots is a consistency error.
const std::vector<std::pair<int, GaussRat>>& bracket_on_side(const Weight& compact_root,
                                                             int side, int idx) {
    struct Key {
        Weight c;
        int side;
        int idx;
        bool operator<(const Key& o) const {
            if (!(c == o.c)) return c < o.c;
            if (side != o.side) return side < o.side;
            return idx < o.idx;
        }
    };
    static std::map<Key, std::vector<std::pair<int, GaussRat>>> cache;

    Key key{compact_root, side, idx};
    auto it = cache.find(key);
    if (it != cache.end()) return it->second;

    GaussRatMatrix br = bracket(root_vector(compact_root), root_vector(side_root(side, idx)));
    std::vector<std::pair<int, GaussRat>> entry;
    if (!br.is_zero()) {
        auto coords = expand_in_generators(br);
        if (!coords)
            throw std::logic_error("bracket fell outside the generator span");
        for (size_t g = 0; g < 21; ++g) {
            if ((*coords)[g].is_zero()) continue;
            if (g < 3)
                throw std::logic_error("compact action produced a Cartan component");
            const Weight& beta = all_roots()[g - 3].w;
            int bidx = side_index(side, beta);
            if (bidx < 0)
                throw std::logic_error("compact action left the graded piece");
            entry.emplace_back(bidx, (*coords)[g]);
        }
    }
    return cache.emplace(key, std::move(entry)).first->second;
}

}  // namespace

Weight WedgeBasisIndex::weight() const {
    Weight w{0, 0, 0};
    for (int i : pos) w = w + side_root(+1, i);
    for (int i : neg) w = w + side_root(-1, i);
    return w;
}

void WedgeVector::add_term(const WedgeBasisIndex& idx, const GaussRat& c) {
    if (c.is_zero()) return;
    auto [it, inserted] = coeffs.emplace(idx, c);
    if (!inserted) {
        it->second += c;
        if (it->second.is_zero()) coeffs.erase(it);
    }
}

WedgeVector operator+(const WedgeVector& a, const WedgeVector& b) {
    if (!a.is_zero() && !b.is_zero() && (a.p != b.p || a.q != b.q))
        throw std::invalid_argument("wedge vectors of different gradings");
    WedgeVector r = a.is_zero() ? b : a;
    if (a.is_zero() || b.is_zero()) return r;
    r = a;
    for (const auto& [idx, c] : b.coeffs) r.add_term(idx, c);
    return r;
}

WedgeVector operator*(const GaussRat& c, const WedgeVector& v) {
    WedgeVector r;
    r.p = v.p;
    r.q = v.q;
    if (c.is_zero()) return r;
    for (const auto& [idx, x] : v.coeffs) r.coeffs.emplace(idx, c * x);
    return r;
}

std::optional<GaussRat> WedgeVector::as_multiple_of(const WedgeVector& unit) const {
    if (unit.is_zero()) return std::nullopt;
    if (is_zero()) return GaussRat(0);
    const auto& [ref_idx, ref_c] = *unit.coeffs.begin();
    auto it = coeffs.find(ref_idx);
    if (it == coeffs.end()) return std::nullopt;
    GaussRat ratio = it->second / ref_c;
    if (!(*this == ratio * unit)) return std::nullopt;
    return ratio;
}

WedgeVector basis_vector(const WedgeBasisIndex& idx) {
    check_subset(idx.pos);
    check_subset(idx.neg);
    WedgeVector v;
    v.p = static_cast<int>(idx.pos.size());
    v.q = static_cast<int>(idx.neg.size());
    v.coeffs.emplace(idx, GaussRat(1));
    return v;
}

WedgeVector x0() {
    return basis_vector(WedgeBasisIndex{{0, 1, 2}, {0, 1, 2}});
}

WedgeVector highest_weight_vector(const Weight& target) {
    // Sorted monomials; both written orders in the source computation are
    // even permutations of the sorted ones, so the signs are +1.
    if (target == Weight{2, 2, -4})
        return basis_vector(WedgeBasisIndex{{0, 1, 3}, {2, 4, 5}});
    if (target == Weight{4, -2, -2})
        return basis_vector(WedgeBasisIndex{{0, 3, 4}, {1, 2, 5}});
    throw std::invalid_argument("no pinned highest-weight vector for " + target.str());
}

WedgeVector ad(const Root& root, const WedgeVector& v) {
    if (!root.is_compact())
        throw std::invalid_argument("ad: " + root.w.str() + " is not a compact root");
    WedgeVector out;
    out.p = v.p;
    out.q = v.q;
    for (const auto& [idx, coeff] : v.coeffs) {
        // Leibniz rule across the p+ slots, then the p− slots.
        for (int side : {+1, -1}) {
            const std::vector<int>& subset = side > 0 ? idx.pos : idx.neg;
            for (size_t t = 0; t < subset.size(); ++t) {
                for (const auto& [bidx, c] : bracket_on_side(root.w, side, subset[t])) {
                    auto replaced = replace_slot(subset, t, bidx);
                    if (!replaced) continue;
                    WedgeBasisIndex nidx = idx;
                    (side > 0 ? nidx.pos : nidx.neg) = replaced->first;
                    out.add_term(nidx, coeff * c * GaussRat(replaced->second));
                }
            }
        }
    }
    return out;
}

WedgeVector ad(const Weight& compact_root, const WedgeVector& v) {
    return ad(Root{compact_root, RootKind::compact}, v);
}

std::map<Weight, WedgeVector> weight_decompose(const WedgeVector& v) {
    std::map<Weight, WedgeVector> parts;
    for (const auto& [idx, c] : v.coeffs) {
        WedgeVector& part = parts[idx.weight()];
        part.p = v.p;
        part.q = v.q;
        part.add_term(idx, c);
    }
    return parts;
}

namespace {

WedgeVector ad_squared(const Weight& root, const WedgeVector& v) {
    return ad(root, ad(root, v));
}

Rat exact_rational_multiple(const WedgeVector& v, const WedgeVector& unit,
                            const char* what) {
    auto c = v.as_multiple_of(unit);
    if (!c || !c->is_rational())
        throw std::logic_error(std::string("projector: ") + what +
                               " is not a rational multiple of the target vector");
    return c->re;
}

}  // namespace

ProjectorData projector_data(const Weight& target) {
    // Raising/lowering ladders between weight 0 and the highest weight; the
    // (4,−2,−2) ladders mirror the (2,2,−4) ones under the coordinate
    // symmetry (k1,k2,k3) -> (−k3,−k2,−k1).
    std::vector<Weight> raise, lower;  // in application order
    if (target == Weight{2, 2, -4}) {
        raise = {Weight{0, 1, -1}, Weight{1, 0, -1}};   // e2−e3 then e1−e3
        lower = {Weight{-1, 0, 1}, Weight{0, -1, 1}};   // e3−e1 then e3−e2
    } else if (target == Weight{4, -2, -2}) {
        raise = {Weight{1, -1, 0}, Weight{1, 0, -1}};   // e1−e2 then e1−e3
        lower = {Weight{-1, 0, 1}, Weight{-1, 1, 0}};   // e3−e1 then e2−e1
    } else {
        throw std::invalid_argument("projector_data: unsupported target " + target.str());
    }

    // Multiplicity-one guard: the target weight space of Λ^3(p+) ⊗ Λ^3(p−)
    // must be one-dimensional for the ratio to define the projection.
    LaurentChar ambient = wedge_char(PSpace::plus, 3) * wedge_char(PSpace::minus, 3);
    if (ambient.coeff(target) != 1)
        throw std::invalid_argument("projector_data: weight " + target.str() +
                                    " is not multiplicity-free in the ambient space");

    const WedgeVector xt = highest_weight_vector(target);

    WedgeVector up = x0();
    for (const Weight& r : raise) up = ad_squared(r, up);
    Rat c1 = exact_rational_multiple(up, xt, "raising composite on x0");

    // One pass of the ladder chain: each lowering operator once (in order),
    // then each raising operator once.  A pass returns to the target weight,
    // which is multiplicity-free in the ambient space, so it acts on x_target
    // by a rational scalar; the round-trip constant iterates the chain twice.
    // Evaluation order matters here: the iterated chain (ad_{r4} ad_{r3}
    // ad_{r2} ad_{r1})^2 and the per-operator squares ad_{r4}^2 ... ad_{r1}^2
    // give different scalars, because raising and lowering steps do not
    // commute.  The projector normalization is defined by the iterated chain.
    auto chain_pass = [&](WedgeVector v) {
        for (const Weight& r : lower) v = ad(r, v);
        for (const Weight& r : raise) v = ad(r, v);
        return v;
    };
    WedgeVector cycle = chain_pass(chain_pass(xt));
    Rat c2 = exact_rational_multiple(cycle, xt, "round-trip chain");

    if (c2.is_zero()) throw std::logic_error("projector: round-trip scalar vanished");
    return ProjectorData{target, c1, c2, c1 / c2};
}

Rat projection_coefficient(const Weight& target) {
    return projector_data(target).alpha;
}

}  // namespace sp6
