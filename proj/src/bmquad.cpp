#include "sp6/bmquad.hpp"

#include <cmath>
#include <map>
#include <sstream>
#include <stdexcept>

namespace sp6 {

namespace {

constexpr double kOuterRadius = 0.5;  // the puncture's ambient disc radius

// --- C^∞ step function ------------------------------------------------------

double bump_exp(double t) { return t > 0.0 ? std::exp(-1.0 / t) : 0.0; }
double bump_exp_prime(double t) {
    return t > 0.0 ? std::exp(-1.0 / t) / (t * t) : 0.0;
}

/// 0 for t ≤ 0, 1 for t ≥ 1, smooth throughout.
double smooth_step(double t) {
    if (t <= 0.0) return 0.0;
    if (t >= 1.0) return 1.0;
    const double a = bump_exp(t);
    const double b = bump_exp(1.0 - t);
    return a / (a + b);
}

double smooth_step_prime(double t) {
    if (t <= 0.0 || t >= 1.0) return 0.0;
    const double a = bump_exp(t);
    const double b = bump_exp(1.0 - t);
    const double da = bump_exp_prime(t);
    const double db = -bump_exp_prime(1.0 - t);
    const double s = a + b;
    return (da * s - a * (da + db)) / (s * s);
}

// --- Gauss–Legendre rules ----------------------------------------------------

struct GLRule {
    std::vector<double> x, w;  // nodes and weights on [−1, 1]
};

/// Nodes by Newton iteration on the Legendre recurrence; cached per order.
const GLRule& gl_rule(int n) {
    static std::map<int, GLRule> cache;
    auto it = cache.find(n);
    if (it != cache.end()) return it->second;

    GLRule r;
    r.x.assign(static_cast<std::size_t>(n), 0.0);
    r.w.assign(static_cast<std::size_t>(n), 0.0);
    for (int i = 0; i < (n + 1) / 2; ++i) {
        double z = std::cos(M_PI * (i + 0.75) / (n + 0.5));
        double pp = 0.0;
        for (int iter = 0; iter < 100; ++iter) {
            double p1 = 1.0, p2 = 0.0;
            for (int j = 1; j <= n; ++j) {
                const double p3 = p2;
                p2 = p1;
                p1 = ((2.0 * j - 1.0) * z * p2 - (j - 1.0) * p3) / j;
            }
            pp = n * (z * p1 - p2) / (z * z - 1.0);
            const double dz = p1 / pp;
            z -= dz;
            if (std::abs(dz) < 1e-15) break;
        }
        r.x[static_cast<std::size_t>(i)] = -z;
        r.x[static_cast<std::size_t>(n - 1 - i)] = z;
        r.w[static_cast<std::size_t>(i)] = 2.0 / ((1.0 - z * z) * pp * pp);
        r.w[static_cast<std::size_t>(n - 1 - i)] = r.w[static_cast<std::size_t>(i)];
    }
    return cache.emplace(n, std::move(r)).first->second;
}

// --- the kernel quadrature ---------------------------------------------------

/// One full pass of (1/π)∬ h(w)/(z−w) dA at the given point counts.  The
/// plane is split by a smooth partition of unity at scale smax around z: the
/// near part in polar coordinates centered at z (where the 1/|z−w| factor
/// cancels against the area element), the far part over log-dyadic annuli
/// from ε to 1/2.
std::complex<double> integrate_kernel(const Coefficient& h, std::complex<double> z,
                                      double smax, double eps, int nr, int na) {
    const GLRule& rule = gl_rule(nr);
    const double dth = 2.0 * M_PI / na;

    // Near part: w = z + s·e^{iθ}, integrand −h(w)·cut(s)·e^{−iθ} ds dθ.
    std::complex<double> near(0.0, 0.0);
    for (int i = 0; i < nr; ++i) {
        const double s = 0.5 * smax * (rule.x[static_cast<std::size_t>(i)] + 1.0);
        const double ws = 0.5 * smax * rule.w[static_cast<std::size_t>(i)];
        const double cut = 1.0 - smooth_step(2.0 * s / smax - 1.0);
        if (cut == 0.0) continue;
        std::complex<double> ang(0.0, 0.0);
        for (int j = 0; j < na; ++j) {
            const double th = dth * j;
            const std::complex<double> dir(std::cos(th), std::sin(th));
            ang += h(z + s * dir) * std::conj(dir);
        }
        near -= ws * cut * dth * ang;
    }

    // Far part: log-dyadic annuli; dA = ρ² du dθ with u = log ρ.
    std::complex<double> far(0.0, 0.0);
    for (double lo = eps; lo < kOuterRadius; lo *= 2.0) {
        const double hi = std::min(2.0 * lo, kOuterRadius);
        const double ulo = std::log(lo), uhi = std::log(hi);
        for (int i = 0; i < nr; ++i) {
            const double u = 0.5 * (uhi - ulo) * (rule.x[static_cast<std::size_t>(i)] + 1.0) + ulo;
            const double wu = 0.5 * (uhi - ulo) * rule.w[static_cast<std::size_t>(i)];
            const double rho = std::exp(u);
            std::complex<double> ang(0.0, 0.0);
            for (int j = 0; j < na; ++j) {
                const double th = dth * j;
                const std::complex<double> w(rho * std::cos(th), rho * std::sin(th));
                const double cut = smooth_step(2.0 * std::abs(w - z) / smax - 1.0);
                if (cut == 0.0) continue;  // inside the near zone: skip before dividing
                ang += h(w) * (cut / (z - w));
            }
            far += wu * rho * rho * dth * ang;
        }
    }
    return (near + far) / M_PI;
}

double partition_scale(double r) { return std::min(r / 2.0, (kOuterRadius - r) / 2.0); }

}  // namespace

// --- RadialTestForm ----------------------------------------------------------

double RadialTestForm::value(double rho) const {
    if (rho <= 0.0 || rho >= outer || rho >= 1.0) return 0.0;
    double v = N > 0 ? std::pow(-std::log(rho), -N) : 1.0;
    v *= smooth_step((outer - rho) / (0.5 * outer));
    if (inner > 0.0) v *= smooth_step(rho / inner - 1.0);
    return v;
}

double RadialTestForm::derivative(double rho) const {
    if (rho <= 0.0 || rho >= outer || rho >= 1.0) return 0.0;
    double L = 1.0, dL = 0.0;
    if (N > 0) {
        const double u = -std::log(rho);
        L = std::pow(u, -N);
        dL = N * std::pow(u, -N - 1) / rho;
    }
    const double td = (outer - rho) / (0.5 * outer);
    const double D = smooth_step(td);
    const double dD = -smooth_step_prime(td) * 2.0 / outer;
    double U = 1.0, dU = 0.0;
    if (inner > 0.0) {
        const double tu = rho / inner - 1.0;
        U = smooth_step(tu);
        dU = smooth_step_prime(tu) / inner;
    }
    return dL * D * U + L * dD * U + L * D * dU;
}

std::complex<double> RadialTestForm::coefficient(std::complex<double> z) const {
    return {value(std::abs(z)), 0.0};
}

std::complex<double> RadialTestForm::dbar(std::complex<double> z) const {
    const double rho = std::abs(z);
    if (rho == 0.0) return {0.0, 0.0};
    return derivative(rho) * z / (2.0 * rho);
}

// --- QuadratureConfig --------------------------------------------------------

void QuadratureConfig::validate() const {
    if (radial < 4 || angular < 4)
        throw std::invalid_argument("quadrature point counts must be at least 4");
    if (inner_radius <= 0.0 || inner_radius >= 0.1)
        throw std::invalid_argument("inner truncation radius must lie in (0, 0.1)");
    if (tol <= 0.0) throw std::invalid_argument("quadrature tolerance must be positive");
}

QuadratureConfig QuadratureConfig::refined() const {
    QuadratureConfig r = *this;
    r.radial *= 2;
    r.angular *= 2;
    return r;
}

// --- operator application ----------------------------------------------------

std::complex<double> bm_apply(const Coefficient& h, std::complex<double> z,
                              const QuadratureConfig& cfg) {
    cfg.validate();
    const double r = std::abs(z);
    if (!(r > 2.0 * cfg.inner_radius && r < kOuterRadius)) {
        std::ostringstream msg;
        msg << "bm_apply: |z| = " << r << " outside the admissible band ("
            << 2.0 * cfg.inner_radius << ", " << kOuterRadius << ")";
        throw std::domain_error(msg.str());
    }
    const double smax = partition_scale(r);
    const std::complex<double> coarse =
        integrate_kernel(h, z, smax, cfg.inner_radius, cfg.radial, cfg.angular);
    if (!cfg.self_check) return coarse;
    const std::complex<double> fine =
        integrate_kernel(h, z, smax, cfg.inner_radius, 2 * cfg.radial, 2 * cfg.angular);
    if (std::abs(coarse - fine) > cfg.tol) {
        std::ostringstream msg;
        msg << "bm_apply: doubled-grid self-check disagrees at z = (" << z.real() << ", "
            << z.imag() << "): |" << std::abs(coarse - fine) << "| > tol " << cfg.tol
            << " (radial " << cfg.radial << ", angular " << cfg.angular << ")";
        throw std::runtime_error(msg.str());
    }
    return fine;
}

std::vector<std::complex<double>> default_grid(int n) {
    if (n < 1) throw std::invalid_argument("default_grid: need at least one point");
    static const double rings[] = {0.1, 0.15, 0.22, 0.3};
    std::vector<std::complex<double>> grid;
    grid.reserve(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) {
        const double rho = rings[i % 4];
        const double th = 2.0 * M_PI * std::fmod(0.6180339887498949 * i, 1.0);
        grid.emplace_back(rho * std::cos(th), rho * std::sin(th));
    }
    return grid;
}

HomotopyResult homotopy_residual(const RadialTestForm& g,
                                 const std::vector<std::complex<double>>& grid,
                                 const QuadratureConfig& cfg) {
    cfg.validate();
    HomotopyResult out;
    const Coefficient dbar_g = [&g](std::complex<double> w) { return g.dbar(w); };
    for (const std::complex<double>& z : grid) {
        const double r = std::abs(z);
        if (r <= 2.0 * cfg.inner_radius || r >= kOuterRadius) {
            ++out.skipped;
            continue;
        }
        const double res = std::abs(bm_apply(dbar_g, z, cfg) - g.value(r));
        out.residual = std::max(out.residual, res);
    }
    return out;
}

double dbar_consistency(const RadialTestForm& g,
                        const std::vector<std::complex<double>>& grid,
                        const QuadratureConfig& cfg) {
    cfg.validate();
    const Coefficient coeff = [&g](std::complex<double> w) { return g.coefficient(w); };
    const double delta = 1e-4;
    double worst = 0.0;
    for (const std::complex<double>& z : grid) {
        const double r = std::abs(z);
        if (r <= 2.0 * cfg.inner_radius + delta || r >= kOuterRadius - delta) continue;
        const std::complex<double> ux =
            bm_apply(coeff, z + delta, cfg) - bm_apply(coeff, z - delta, cfg);
        const std::complex<double> uy = bm_apply(coeff, z + std::complex<double>(0, delta), cfg) -
                                        bm_apply(coeff, z - std::complex<double>(0, delta), cfg);
        const std::complex<double> dbar_u = (ux + std::complex<double>(0, 1) * uy) / (4.0 * delta);
        worst = std::max(worst, std::abs(dbar_u - g.coefficient(z)));
    }
    return worst;
}

DecaySweepResult decay_sweep(int N, const QuadratureConfig& cfg) {
    cfg.validate();
    if (N < 2) throw std::invalid_argument("decay_sweep: need a decay exponent N >= 2");
    const RadialTestForm f{N, 0.4, 0.0};
    const double eps = cfg.inner_radius;

    // Mass of the difference kernel below the truncation radius, where the
    // bump is identically 1: 2∫₀^ε f dρ/ρ = 2|log ε|^{1−N}/(N−1).  (The
    // direct kernel's inner tail vanishes: its angular integral is zero.)
    const double inner_tail = 2.0 * std::pow(-std::log(eps), 1.0 - N) / (N - 1.0);

    // c∞ = −2∫₀^{1/2} f dρ/ρ: per-octave Gauss–Legendre in log ρ above ε.
    double cinf = -inner_tail;
    const GLRule& rule = gl_rule(32);
    for (double lo = eps; lo < kOuterRadius; lo *= 2.0) {
        const double hi = std::min(2.0 * lo, kOuterRadius);
        const double ulo = std::log(lo), uhi = std::log(hi);
        for (std::size_t i = 0; i < rule.x.size(); ++i) {
            const double u = 0.5 * (uhi - ulo) * (rule.x[i] + 1.0) + ulo;
            cinf -= 2.0 * 0.5 * (uhi - ulo) * rule.w[i] * f.value(std::exp(u));
        }
    }

    DecaySweepResult out;
    out.N = N;
    out.c_infinity = cinf;

    const Coefficient h = [&f](std::complex<double> w) {
        return f.coefficient(w) / std::conj(w);
    };
    for (int k = 4; k <= 10; ++k) {
        const double rho = std::pow(2.0, -k);
        const std::complex<double> z(rho, 0.0);
        // Difference kernel K[h·z/w](z) = Kη(z) − Kη(0): no cancellation of
        // the large constant, so the small deviation is measured directly.
        const Coefficient h_diff = [&h, z](std::complex<double> w) { return h(w) * (z / w); };
        const std::complex<double> dev = bm_apply(h_diff, z, cfg) + inner_tail;
        const std::complex<double> direct = bm_apply(h, z, cfg);
        out.radii.push_back(rho);
        out.deviation.push_back(std::abs(dev));
        out.consistency = std::max(out.consistency, std::abs(direct - (cinf + dev)));
    }

    // Least-squares slope of log(deviation) against log|log ρ|; the model
    // deviation = (2/(N−1))·|log ρ|^{1−N} predicts slope 1−N.
    double sx = 0, sy = 0, sxx = 0, sxy = 0;
    const auto n = static_cast<double>(out.radii.size());
    for (std::size_t i = 0; i < out.radii.size(); ++i) {
        const double x = std::log(-std::log(out.radii[i]));
        const double y = std::log(out.deviation[i]);
        sx += x;
        sy += y;
        sxx += x * x;
        sxy += x * y;
    }
    const double slope = (n * sxy - sx * sy) / (n * sxx - sx * sx);
    out.fitted_exponent = -slope;
    return out;
}

}  // namespace sp6
