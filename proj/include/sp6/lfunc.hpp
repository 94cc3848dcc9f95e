#pragma once

// Local Spin L-factors from Satake data, partial Spin L-functions with a
// Dirichlet-series cross-check path, and archimedean Γ-factors with exact
// pole orders at integer points.

#include <array>
#include <complex>
#include <cstdint>
#include <vector>

#include "sp6/rational.hpp"

namespace sp6 {

/// Restriction of a character to the unit group, modeled in a caller-declared
/// finite cyclic group Z/m: residue 0 means unramified.  Labels compose
/// additively under character multiplication; mixed moduli embed into Z/lcm.
struct UnitCharLabel {
    std::int64_t modulus = 1;
    std::int64_t residue = 0;

    /// Reduces residue mod modulus; throws std::invalid_argument if modulus < 1.
    void normalize();
    bool unramified() const { return residue % modulus == 0; }

    /// Label of the product character.
    friend UnitCharLabel operator*(const UnitCharLabel& a, const UnitCharLabel& b);
    friend bool operator==(const UnitCharLabel& a, const UnitCharLabel& b) {
        return a.modulus == b.modulus && a.residue == b.residue;
    }
};

/// One character datum: its value at the uniformizer plus its unit label.
/// Values are carried either exactly (rational) or as complex doubles; a
/// single computation never mixes the two representations.
struct SatakeChar {
    bool exact = true;
    Rat exact_value{1};
    std::complex<double> float_value{1.0, 0.0};
    UnitCharLabel label{};

    std::complex<double> as_complex() const;
    bool is_zero_value() const;
};

/// Satake datum at one prime: the four characters χ₀, χ₁, χ₂, χ₃.
struct SatakeData {
    std::int64_t prime = 2;
    std::array<SatakeChar, 4> chi{};

    bool all_exact() const;
    /// Throws std::invalid_argument on prime < 2 or a zero character value.
    void validate() const;
};

/// A local Spin factor 1/D(t) in t = ℓ^{−s}: the denominator polynomial D,
/// constant term 1, degree ≤ 8 (one linear factor per subset S ⊆ {1,2,3}
/// whose character χ₀·∏_{i∈S}χᵢ is unramified).
struct SpinFactorExact {
    std::int64_t prime = 2;
    std::vector<Rat> denom;  // denom[k] = coefficient of t^k, denom[0] = 1
};
struct SpinFactorFloat {
    std::int64_t prime = 2;
    std::vector<std::complex<double>> denom;
};

/// Exact-coefficient local factor; throws std::invalid_argument unless every
/// character value in d is exact.
SpinFactorExact spin_factor_exact(const SatakeData& d);

/// Floating local factor (exact inputs are converted).
SpinFactorFloat spin_factor(const SatakeData& d);

/// 1/D(ℓ^{−s}); throws std::domain_error naming the prime when ℓ^{−s} hits a
/// zero of D.
std::complex<double> evaluate_local(const SpinFactorFloat& f, double s);

/// Coefficients c_0..c_kmax of the ℓ-power Dirichlet expansion of one local
/// factor, 1/D(t) = Σ_k c_k t^k, obtained by series inversion of D.
std::vector<std::complex<double>> local_series(const SpinFactorFloat& f, int kmax);

/// Partial Spin L-function ∏_{ℓ ≤ cutoff} 1/D_ℓ(ℓ^{−s}) over the primes
/// present in data.  Duplicate primes are rejected.
std::complex<double> partial_l(const std::vector<SatakeData>& data, double s,
                               std::int64_t cutoff);

/// The same value through the truncated local Dirichlet expansions
/// (kmax + 1 terms per prime) — the independent cross-check path.
std::complex<double> partial_l_dirichlet(const std::vector<SatakeData>& data, double s,
                                         std::int64_t cutoff, int kmax = 64);

// ---------------------------------------------------------------------------
// Archimedean factors.

/// Hodge numbers of a weight-6 structure: h[p] = h^{p,6−p} for p = 0..6 with
/// h[p] = h[6−p], and the splitting h[3] = h3plus + h3minus.
struct HodgeNumbers {
    std::array<int, 7> h{};
    int h3plus = 0;
    int h3minus = 0;

    /// Throws std::invalid_argument on negativity, asymmetry, or a bad split.
    void validate() const;
};

enum class GammaKind { R, C };

/// One factor Γ_kind(s − shift)^exponent.
struct GammaFactor {
    GammaKind kind;
    int shift;
    int exponent;
};
using GammaFactorList = std::vector<GammaFactor>;

/// The archimedean factor attached to h: Γ_C(s−p)^{h^{p,q}} for the pairs
/// p < q, and Γ_R(s−3)^{h3plus} Γ_R(s−2)^{h3minus}.  Exponent-0 entries are
/// omitted.
GammaFactorList gamma_factor(const HodgeNumbers& h);

/// Order of the pole of the archimedean factor at s = m (closed form):
/// Σ_{m≤p<q} h^{p,q}, plus h3plus for odd m ≤ 3 and h3minus for even m ≤ 3.
int pole_order(const HodgeNumbers& h, std::int64_t m);

/// Γ_R(s) = π^{−s/2} Γ(s/2) and Γ_C(s) = 2 (2π)^{−s} Γ(s), for real s away
/// from poles; Γ_C(s) = Γ_R(s) Γ_R(s+1) holds identically.
double gamma_R(double s);
double gamma_C(double s);

}  // namespace sp6
