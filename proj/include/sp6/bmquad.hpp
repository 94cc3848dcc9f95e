#pragma once

// Desk-scale numerical verification of the Bochner–Martinelli operator on the
// punctured disc Δ*₁/₂ (one complex variable): the ∂̄-homotopy identity and
// the logarithmic-decay estimate for rapidly decreasing (0,1)-forms.
//
// Working convention (fixed by the f = ∂̄g test, not assumed): for a (0,1)-
// form η = h·dw̄,
//     (Kη)(z) = (1/π) ∬ h(w)/(z−w) dA(w),
// which satisfies K(∂̄g) = g for compactly supported smooth g and ∂̄(Kη) = η.
// The textbook normalization (1/2πi)∫ h/(z−w) dw∧dw̄ equals the NEGATIVE of
// this operator (dw∧dw̄ = −2i dA), so the identity pins the sign above.
//
// Decay estimate: for h = f·(1/w̄) with radial f(ρ) = |log ρ|^{−N}·bump(ρ),
// Kη(z) = −2∫_{|z|}^{1/2} f(ρ) dρ/ρ exactly, which tends to a nonzero
// constant c∞ at the puncture.  The |log|z||^{−N+1} bound therefore governs
// the deviation Kη(z) − c∞ = 2∫_0^{|z|} f dρ/ρ, and the decay sweep fits the
// exponent of that deviation, measured stably through the difference kernel
// Kη(z) − Kη(0) = K[h·z/w](z).

#include <complex>
#include <functional>
#include <vector>

namespace sp6 {

/// Radial test profile F(ρ) = |log ρ|^{−N} · smooth bump, with closed-form
/// radial derivative and ∂/∂z̄.  N = 0 drops the logarithmic factor.  The
/// bump steps down from 1 to 0 over [outer/2, outer]; when inner > 0 it also
/// steps up from 0 to 1 over [inner, 2·inner], making the support compact
/// away from the puncture.
struct RadialTestForm {
    int N = 6;
    double outer = 0.4;
    double inner = 0.0;

    double value(double rho) const;
    double derivative(double rho) const;

    /// Coefficient h(z) = value(|z|) of the (0,1)-form value(|w|)·dw̄.
    std::complex<double> coefficient(std::complex<double> z) const;
    /// ∂/∂z̄ of the radial function: derivative(|z|) · z / (2|z|).
    std::complex<double> dbar(std::complex<double> z) const;
};

struct QuadratureConfig {
    int radial = 16;             ///< Gauss–Legendre points per log-dyadic annulus
    int angular = 160;           ///< trapezoid points per annulus
    double inner_radius = 1e-7;  ///< truncation radius ε around the puncture
    double tol = 1e-3;           ///< self-check / residual tolerance
    bool self_check = true;      ///< recompute on a doubled grid and compare

    /// Throws std::invalid_argument on point counts < 4 or ε ≤ 0.
    void validate() const;
    QuadratureConfig refined() const;  ///< doubled point counts
};

using Coefficient = std::function<std::complex<double>(std::complex<double>)>;

/// (Kη)(z) = (1/π)∬_{ε<|w|<1/2} h(w)/(z−w) dA(w).  The singular disc around
/// w = z is integrated in polar coordinates centered at z (the 1/|z−w|
/// singularity cancels against the area element); the rest uses log-dyadic
/// annuli with a smooth partition of unity.  Throws std::domain_error when
/// |z| is outside (2ε, 1/2); throws std::runtime_error with diagnostics when
/// the doubled-grid self-check disagrees beyond tol.
std::complex<double> bm_apply(const Coefficient& h, std::complex<double> z,
                              const QuadratureConfig& cfg);

/// n grid points spread over rings with radii in [0.1, 0.3].
std::vector<std::complex<double>> default_grid(int n);

struct HomotopyResult {
    double residual = 0.0;  ///< max |K(∂̄g)(z) − g(z)| over the usable grid
    int skipped = 0;        ///< grid points inside the truncation zone
};

/// Function-side homotopy identity K(∂̄g) = g for the compactly supported
/// test function g, checked over the grid.
HomotopyResult homotopy_residual(const RadialTestForm& g,
                                 const std::vector<std::complex<double>>& grid,
                                 const QuadratureConfig& cfg);

/// Form-side identity ∂̄(K(g·dw̄)) = g: ∂̄ of the quadrature by central
/// finite differences; returns max |∂̄(Kη)(z) − g(z)| over the usable grid.
double dbar_consistency(const RadialTestForm& g,
                        const std::vector<std::complex<double>>& grid,
                        const QuadratureConfig& cfg);

struct DecaySweepResult {
    int N = 0;
    std::vector<double> radii;      ///< sweep radii 2⁻⁴ … 2⁻¹⁰
    std::vector<double> deviation;  ///< |Kη(z) − c∞| via the difference kernel
    double c_infinity = 0.0;        ///< lim_{z→0} Kη(z) = −2∫₀^{1/2} f dρ/ρ (1-D quadrature)
    double fitted_exponent = 0.0;   ///< least-squares slope of −log dev vs log|log ρ|
    double consistency = 0.0;       ///< max |Kη(z) − (c∞ + deviation)| (direct vs split)
};

/// Measures the decay of Kη − c∞ for the rapidly decreasing form with
/// logarithmic exponent N; the fitted exponent should approach N − 1.
DecaySweepResult decay_sweep(int N, const QuadratureConfig& cfg);

}  // namespace sp6
