#include "sp6/lfunc.hpp"

#include <cmath>
#include <numeric>
#include <set>
#include <stdexcept>
#include <string>

namespace sp6 {

void UnitCharLabel::normalize() {
    if (modulus < 1) throw std::invalid_argument("unit label modulus must be positive");
    residue %= modulus;
    if (residue < 0) residue += modulus;
}

UnitCharLabel operator*(const UnitCharLabel& a, const UnitCharLabel& b) {
    UnitCharLabel x = a, y = b, r;
    x.normalize();
    y.normalize();
    r.modulus = std::lcm(x.modulus, y.modulus);
    r.residue = x.residue * (r.modulus / x.modulus) + y.residue * (r.modulus / y.modulus);
    r.normalize();
    return r;
}

std::complex<double> SatakeChar::as_complex() const {
    return exact ? std::complex<double>(exact_value.to_double(), 0.0) : float_value;
}

bool SatakeChar::is_zero_value() const {
    return exact ? exact_value.is_zero() : float_value == std::complex<double>(0.0, 0.0);
}

bool SatakeData::all_exact() const {
    for (const SatakeChar& c : chi)
        if (!c.exact) return false;
    return true;
}

void SatakeData::validate() const {
    if (prime < 2) throw std::invalid_argument("Satake prime must be >= 2");
    for (const SatakeChar& c : chi) {
        if (c.label.modulus < 1)
            throw std::invalid_argument("unit label modulus must be positive");
        if (c.is_zero_value())
            throw std::invalid_argument("Satake character values must be nonzero");
    }
}

namespace {

/// Multiplies the polynomial poly (coefficients in t) by (1 − a·t) in place.
template <typename Scalar>
void multiply_linear_factor(std::vector<Scalar>& poly, const Scalar& a) {
    poly.push_back(Scalar(0));
    for (std::size_t k = poly.size() - 1; k > 0; --k) poly[k] = poly[k] - a * poly[k - 1];
}

/// Denominator polynomial of the local Spin factor: one factor (1 − a_S·t)
/// per subset S ⊆ {1,2,3} with χ₀·∏_{i∈S}χᵢ unramified, a_S the product of
/// the values; ramified subsets contribute the factor 1.
template <typename Scalar, typename Value>
std::vector<Scalar> spin_denominator(const SatakeData& d, Value value_of) {
    std::vector<Scalar> poly{Scalar(1)};
    for (int mask = 0; mask < 8; ++mask) {
        UnitCharLabel total = d.chi[0].label;
        Scalar a = value_of(d.chi[0]);
        for (int i = 1; i <= 3; ++i) {
            if (!(mask & (1 << (i - 1)))) continue;
            total = total * d.chi[static_cast<std::size_t>(i)].label;
            a = a * value_of(d.chi[static_cast<std::size_t>(i)]);
        }
        if (total.unramified()) multiply_linear_factor(poly, a);
    }
    return poly;
}

}  // namespace

SpinFactorExact spin_factor_exact(const SatakeData& d) {
    d.validate();
    if (!d.all_exact())
        throw std::invalid_argument("spin_factor_exact requires exact character values");
    return SpinFactorExact{
        d.prime, spin_denominator<Rat>(d, [](const SatakeChar& c) { return c.exact_value; })};
}

SpinFactorFloat spin_factor(const SatakeData& d) {
    d.validate();
    return SpinFactorFloat{d.prime, spin_denominator<std::complex<double>>(
                                        d, [](const SatakeChar& c) { return c.as_complex(); })};
}

std::complex<double> evaluate_local(const SpinFactorFloat& f, double s) {
    const double t = std::pow(static_cast<double>(f.prime), -s);
    std::complex<double> den(0.0, 0.0);
    for (std::size_t k = f.denom.size(); k-- > 0;) den = den * t + f.denom[k];
    if (std::abs(den) < 1e-14)
        throw std::domain_error("local Spin factor has a pole at prime " +
                                std::to_string(f.prime) + " for s = " + std::to_string(s));
    return 1.0 / den;
}

std::vector<std::complex<double>> local_series(const SpinFactorFloat& f, int kmax) {
    if (kmax < 0) throw std::invalid_argument("local_series: kmax must be nonnegative");
    std::vector<std::complex<double>> c(static_cast<std::size_t>(kmax) + 1);
    c[0] = 1.0;  // denom[0] = 1 by construction
    const std::size_t deg = f.denom.size() - 1;
    for (std::size_t k = 1; k <= static_cast<std::size_t>(kmax); ++k) {
        std::complex<double> acc(0.0, 0.0);
        for (std::size_t j = 1; j <= std::min(k, deg); ++j) acc += f.denom[j] * c[k - j];
        c[k] = -acc;
    }
    return c;
}

namespace {

std::vector<SatakeData> primes_in_range(const std::vector<SatakeData>& data,
                                        std::int64_t cutoff) {
    std::set<std::int64_t> seen;
    std::vector<SatakeData> used;
    for (const SatakeData& d : data) {
        d.validate();
        if (!seen.insert(d.prime).second)
            throw std::invalid_argument("duplicate Satake datum for prime " +
                                        std::to_string(d.prime));
        if (d.prime <= cutoff) used.push_back(d);
    }
    return used;
}

}  // namespace

std::complex<double> partial_l(const std::vector<SatakeData>& data, double s,
                               std::int64_t cutoff) {
    std::complex<double> prod(1.0, 0.0);
    for (const SatakeData& d : primes_in_range(data, cutoff))
        prod *= evaluate_local(spin_factor(d), s);
    return prod;
}

std::complex<double> partial_l_dirichlet(const std::vector<SatakeData>& data, double s,
                                         std::int64_t cutoff, int kmax) {
    std::complex<double> prod(1.0, 0.0);
    for (const SatakeData& d : primes_in_range(data, cutoff)) {
        const auto c = local_series(spin_factor(d), kmax);
        const double t = std::pow(static_cast<double>(d.prime), -s);
        std::complex<double> sum(0.0, 0.0);
        for (std::size_t k = c.size(); k-- > 0;) sum = sum * t + c[k];
        prod *= sum;
    }
    return prod;
}

// ---------------------------------------------------------------------------

void HodgeNumbers::validate() const {
    for (int p = 0; p <= 6; ++p) {
        if (h[static_cast<std::size_t>(p)] < 0)
            throw std::invalid_argument("Hodge numbers must be nonnegative");
        if (h[static_cast<std::size_t>(p)] != h[static_cast<std::size_t>(6 - p)])
            throw std::invalid_argument("Hodge numbers must satisfy h(p,q) = h(q,p)");
    }
    if (h3plus < 0 || h3minus < 0 || h3plus + h3minus != h[3])
        throw std::invalid_argument("h3plus + h3minus must equal h(3,3)");
}

GammaFactorList gamma_factor(const HodgeNumbers& hn) {
    hn.validate();
    GammaFactorList out;
    for (int p = 0; p <= 2; ++p)
        if (hn.h[static_cast<std::size_t>(p)] > 0)
            out.push_back({GammaKind::C, p, hn.h[static_cast<std::size_t>(p)]});
    if (hn.h3plus > 0) out.push_back({GammaKind::R, 3, hn.h3plus});
    if (hn.h3minus > 0) out.push_back({GammaKind::R, 2, hn.h3minus});
    return out;
}

int pole_order(const HodgeNumbers& hn, std::int64_t m) {
    hn.validate();
    int total = 0;
    for (int p = 0; p <= 2; ++p)
        if (m <= p) total += hn.h[static_cast<std::size_t>(p)];
    if (m <= 3) total += (m % 2 != 0) ? hn.h3plus : hn.h3minus;
    return total;
}

double gamma_R(double s) { return std::pow(M_PI, -s / 2.0) * std::tgamma(s / 2.0); }

double gamma_C(double s) { return 2.0 * std::pow(2.0 * M_PI, -s) * std::tgamma(s); }

}  // namespace sp6
