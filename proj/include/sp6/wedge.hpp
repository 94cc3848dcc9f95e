// The graded spaces Λ^p(p+) ⊗ Λ^q(p−) with their monomial root-vector basis,
// the derivation action of compact root vectors, highest-weight vectors, and
// the exact projector constants.
//
// Basis enumeration (pinned): p+ root order 2e1, 2e2, 2e3, e1+e2, e1+e3,
// e2+e3 (indices 0..5); p− uses the negatives in the same order.  A basis
// monomial is a strictly increasing index subset on each side; coefficients
// carry the permutation sign needed to sort wedge slots into that order.

#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <vector>

#include "sp6/rational.hpp"
#include "sp6/rootsys.hpp"

namespace sp6 {

struct WedgeBasisIndex {
    std::vector<int> pos;  // strictly increasing indices into the p+ roots
    std::vector<int> neg;  // strictly increasing indices into the p− roots

    friend bool operator==(const WedgeBasisIndex& a, const WedgeBasisIndex& b) {
        return a.pos == b.pos && a.neg == b.neg;
    }
    friend bool operator<(const WedgeBasisIndex& a, const WedgeBasisIndex& b) {
        return a.pos != b.pos ? a.pos < b.pos : a.neg < b.neg;
    }

    /// Sum of the root labels: the Cartan weight of the monomial.
    Weight weight() const;
};

/// Element of Λ^p(p+) ⊗ Λ^q(p−) with exact coefficients.
struct WedgeVector {
    int p = 0;
    int q = 0;
    std::map<WedgeBasisIndex, GaussRat> coeffs;

    bool is_zero() const { return coeffs.empty(); }
    void add_term(const WedgeBasisIndex& idx, const GaussRat& c);

    friend WedgeVector operator+(const WedgeVector& a, const WedgeVector& b);
    friend WedgeVector operator*(const GaussRat& c, const WedgeVector& v);
    friend bool operator==(const WedgeVector& a, const WedgeVector& b) {
        return a.p == b.p && a.q == b.q && a.coeffs == b.coeffs;
    }

    /// If v == c * unit, returns c; nullopt when v is not that multiple.
    std::optional<GaussRat> as_multiple_of(const WedgeVector& unit) const;
};

/// Unit vector on a monomial; throws std::invalid_argument on malformed
/// subsets (out-of-range or non-increasing indices).
WedgeVector basis_vector(const WedgeBasisIndex& idx);

/// The generator of Λ^3(p+) ⊗ Λ^3(p−) at
/// (X_{2e1} ∧ X_{2e2} ∧ X_{2e3}) ⊗ (X_{−2e1} ∧ X_{−2e2} ∧ X_{−2e3});
/// a weight-(0,0,0) vector.
WedgeVector x0();

/// Highest-weight vectors in Λ^3(p+) ⊗ Λ^3(p−) for the two extreme K-types:
///   (2,2,−4): (X_{2e1} ∧ X_{2e2} ∧ X_{e1+e2}) ⊗ (X_{−e1−e3} ∧ X_{−e2−e3} ∧ X_{−2e3})
///   (4,−2,−2): (X_{2e1} ∧ X_{e1+e2} ∧ X_{e1+e3}) ⊗ (X_{−e2−e3} ∧ X_{−2e2} ∧ X_{−2e3})
WedgeVector highest_weight_vector(const Weight& target);

/// Derivation (Leibniz) action of the compact root vector X_root on both
/// tensor factors.  Brackets are taken in the matrix algebra and re-expanded
/// in the root-vector basis exactly; compact roots preserve each graded
/// piece.  Throws std::invalid_argument if root is not compact.
WedgeVector ad(const Root& root, const WedgeVector& v);

/// Convenience overload identifying the root by weight.
WedgeVector ad(const Weight& compact_root, const WedgeVector& v);

/// Groups the terms of v by Cartan weight.
std::map<Weight, WedgeVector> weight_decompose(const WedgeVector& v);

/// Exact data behind the projection of x0() onto the K-isotypic component of
/// the target: raising x0 to the highest weight gives c1 * X_target, and the
/// round trip highest weight -> weight 0 -> highest weight gives c2 * X_target;
/// the projection coefficient is c1/c2.
struct ProjectorData {
    Weight target;
    Rat c1;     // raising composite applied to x0
    Rat c2;     // 4-fold composite applied to the highest-weight vector
    Rat alpha;  // c1 / c2
};

/// Computes ProjectorData for target in {(2,2,−4), (4,−2,−2)}; verifies the
/// target weight space of Λ^3(p+) ⊗ Λ^3(p−) is one-dimensional before
/// trusting the ratio.  Throws std::invalid_argument otherwise.
ProjectorData projector_data(const Weight& target);

/// The scalar alpha = c1/c2 (1/3600 for both admissible targets).
Rat projection_coefficient(const Weight& target);

}  // namespace sp6
