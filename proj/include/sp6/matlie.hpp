// Explicit 6x6 matrices over Q(i) realizing the compact Cartan T1,T2,T3 and
// the 18 root vectors of sp6, with exact commutators, weight extraction, and
// re-expansion of matrices in the 21-generator basis.
//
// Block conventions (all blocks 3x3):
//   T_j           = -i * [[0, D_j], [-D_j, 0]]
//   X_{±2e_j}     = [[D_j, ±i D_j], [±i D_j, -D_j]]
//   X_{±(e_j+e_k)} = [[E_jk, ±i E_jk], [±i E_jk, -E_jk]]
//   X_{±(e_j−e_k)} = [[±F_jk, -i E_jk], [i E_jk, ±F_jk]]
// with D_j the unit diagonal matrix at (j,j), E_jk symmetric with ones at
// (j,k),(k,j), and F_jk antisymmetric with +1 at (j,k), −1 at (k,j).

#pragma once

#include <array>
#include <optional>
#include <string>
#include <vector>

#include "sp6/rational.hpp"
#include "sp6/rootsys.hpp"

namespace sp6 {

/// Dense 6x6 matrix over Q(i).
struct GaussRatMatrix {
    std::array<GaussRat, 36> a{};

    GaussRat& at(int r, int c) { return a[static_cast<size_t>(6 * r + c)]; }
    const GaussRat& at(int r, int c) const { return a[static_cast<size_t>(6 * r + c)]; }

    bool is_zero() const {
        for (const auto& x : a)
            if (!x.is_zero()) return false;
        return true;
    }

    GaussRatMatrix transpose() const {
        GaussRatMatrix t;
        for (int r = 0; r < 6; ++r)
            for (int c = 0; c < 6; ++c) t.at(c, r) = at(r, c);
        return t;
    }

    friend GaussRatMatrix operator+(const GaussRatMatrix& x, const GaussRatMatrix& y) {
        GaussRatMatrix z;
        for (size_t i = 0; i < 36; ++i) z.a[i] = x.a[i] + y.a[i];
        return z;
    }
    friend GaussRatMatrix operator-(const GaussRatMatrix& x, const GaussRatMatrix& y) {
        GaussRatMatrix z;
        for (size_t i = 0; i < 36; ++i) z.a[i] = x.a[i] - y.a[i];
        return z;
    }
    friend GaussRatMatrix operator*(const GaussRat& c, const GaussRatMatrix& x) {
        GaussRatMatrix z;
        for (size_t i = 0; i < 36; ++i) z.a[i] = c * x.a[i];
        return z;
    }
    friend GaussRatMatrix operator*(const GaussRatMatrix& x, const GaussRatMatrix& y) {
        GaussRatMatrix z;
        for (int r = 0; r < 6; ++r)
            for (int k = 0; k < 6; ++k) {
                if (x.at(r, k).is_zero()) continue;
                for (int c = 0; c < 6; ++c) {
                    if (y.at(k, c).is_zero()) continue;
                    z.at(r, c) += x.at(r, k) * y.at(k, c);
                }
            }
        return z;
    }
    friend bool operator==(const GaussRatMatrix& x, const GaussRatMatrix& y) {
        return x.a == y.a;
    }
};

/// Commutator AB − BA.
inline GaussRatMatrix bracket(const GaussRatMatrix& A, const GaussRatMatrix& B) {
    return A * B - B * A;
}

/// Cartan generator T_j, j in 1..3.
GaussRatMatrix cartan_generator(int j);

/// Root vector X_alpha for any of the 18 roots, identified by its weight.
/// Throws std::invalid_argument for a non-root weight.
GaussRatMatrix root_vector(const Weight& alpha);

/// Generator by textual label: "T1".."T3" or "X[a,b,c]" with (a,b,c) a root.
GaussRatMatrix generator(const std::string& label);

/// The 21 generators in pinned order: T1,T2,T3 then the 18 roots in
/// all_roots() order.  Labels follow generator()'s syntax.
struct GeneratorBasis {
    std::vector<std::string> labels;       // size 21
    std::vector<GaussRatMatrix> matrices;  // size 21
};
const GeneratorBasis& generator_basis();

/// Extracts (c1,c2,c3) with [T_j, M] = c_j M for all j, provided every c_j is
/// an integer; returns nullopt otherwise.  The zero matrix is a weight vector
/// for every weight at once, so it also yields nullopt.
std::optional<Weight> weight_of(const GaussRatMatrix& M);

/// Exact coordinates of M in the 21-generator basis (same order as
/// generator_basis()); nullopt if M lies outside the span.
std::optional<std::array<GaussRat, 21>> expand_in_generators(const GaussRatMatrix& M);

/// The symplectic form J = [[0, I3], [−I3, 0]]; every generator X satisfies
/// tX·J + J·X = 0.
GaussRatMatrix symplectic_form();

/// Membership test for sp6 relative to symplectic_form().
inline bool in_sp6(const GaussRatMatrix& X) {
    const GaussRatMatrix J = symplectic_form();
    return (X.transpose() * J + J * X).is_zero();
}

}  // namespace sp6
