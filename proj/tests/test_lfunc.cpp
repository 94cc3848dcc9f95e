#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "sp6/lfunc.hpp"

#include <algorithm>
#include <cmath>
#include <random>

using namespace sp6;

namespace {

SatakeChar exact_char(Rat v) {
    SatakeChar c;
    c.exact = true;
    c.exact_value = v;
    return c;
}

SatakeData exact_data(std::int64_t prime, Rat a0, Rat a1, Rat a2, Rat a3) {
    SatakeData d;
    d.prime = prime;
    d.chi = {exact_char(a0), exact_char(a1), exact_char(a2), exact_char(a3)};
    return d;
}

Rat random_nonzero(std::mt19937& rng) {
    std::uniform_int_distribution<int> num(-6, 6);
    std::uniform_int_distribution<int> den(1, 5);
    Rat r;
    do {
        r = Rat(num(rng), den(rng));
    } while (r.is_zero());
    return r;
}

}  // namespace

TEST_CASE("unramified factor: degree 8, unit constant term") {
    SatakeData d = exact_data(7, Rat(2), Rat(1, 3), Rat(-1), Rat(5));
    SpinFactorExact f = spin_factor_exact(d);
    CHECK(f.prime == 7);
    REQUIRE(f.denom.size() == 9);
    CHECK(f.denom[0] == Rat(1));

    // hand identities for the unramified case: the eight roots are
    // a0 * prod_{i in S} a_i over subsets S of {1,2,3}
    // linear coefficient: -a0 (1+a1)(1+a2)(1+a3)
    Rat a0 = Rat(2), a1 = Rat(1, 3), a2 = Rat(-1), a3 = Rat(5);
    CHECK(f.denom[1] == Rat(-1) * a0 * (Rat(1) + a1) * (Rat(1) + a2) * (Rat(1) + a3));
    // top coefficient: a0^8 (a1 a2 a3)^4
    Rat top = Rat(1);
    for (int i = 0; i < 8; ++i) top = top * a0;
    Rat prod = a1 * a2 * a3;
    Rat prod4 = prod * prod * prod * prod;
    CHECK(f.denom[8] == top * prod4);
}

TEST_CASE("all-ones characters give (1-t)^8") {
    SpinFactorExact f = spin_factor_exact(exact_data(5, Rat(1), Rat(1), Rat(1), Rat(1)));
    static const std::int64_t binom[9] = {1, -8, 28, -56, 70, -56, 28, -8, 1};
    REQUIRE(f.denom.size() == 9);
    for (size_t k = 0; k < 9; ++k) CHECK(f.denom[k] == Rat(binom[k]));
}

TEST_CASE("factor is symmetric under permutations of chi_1..chi_3") {
    std::mt19937 rng(987123);
    for (int trial = 0; trial < 100; ++trial) {
        Rat a0 = random_nonzero(rng), a1 = random_nonzero(rng), a2 = random_nonzero(rng),
            a3 = random_nonzero(rng);
        SpinFactorExact base = spin_factor_exact(exact_data(11, a0, a1, a2, a3));
        Rat perm[6][3] = {{a1, a2, a3}, {a1, a3, a2}, {a2, a1, a3},
                          {a2, a3, a1}, {a3, a1, a2}, {a3, a2, a1}};
        for (auto& p : perm) {
            SpinFactorExact other = spin_factor_exact(exact_data(11, a0, p[0], p[1], p[2]));
            CHECK(other.denom == base.denom);
        }
    }
}

TEST_CASE("ramified characters drop linear factors") {
    // chi_1 ramified with label Z/3 residue 1: subsets containing 1 alone
    // keep their ramification unless another chi cancels it
    SatakeData d = exact_data(13, Rat(1), Rat(2), Rat(3), Rat(5));
    d.chi[1].label = UnitCharLabel{3, 1};
    SpinFactorExact f = spin_factor_exact(d);
    // subsets S with chi_0 prod chi_i unramified: those not containing 1 -> degree 4
    REQUIRE(f.denom.size() == 5);
    CHECK(f.denom[0] == Rat(1));

    // two ramified characters whose labels cancel: {1,2} contributes again
    SatakeData d2 = exact_data(13, Rat(1), Rat(2), Rat(3), Rat(5));
    d2.chi[1].label = UnitCharLabel{3, 1};
    d2.chi[2].label = UnitCharLabel{3, 2};
    SpinFactorExact f2 = spin_factor_exact(d2);
    // unramified subsets: {}, {3}, {1,2}, {1,2,3} -> degree 4
    REQUIRE(f2.denom.size() == 5);
    // the label algebra embeds mixed moduli via the lcm
    UnitCharLabel mixed = UnitCharLabel{3, 1} * UnitCharLabel{2, 1};
    CHECK(mixed.modulus == 6);
    CHECK_FALSE(mixed.unramified());
    CHECK((UnitCharLabel{3, 1} * UnitCharLabel{3, 2}).unramified());
}

TEST_CASE("validate rejects bad data") {
    SatakeData ok = exact_data(2, Rat(1), Rat(1), Rat(1), Rat(1));
    CHECK_NOTHROW(ok.validate());
    SatakeData badp = ok;
    badp.prime = 1;
    CHECK_THROWS_AS(badp.validate(), std::invalid_argument);
    SatakeData zero = ok;
    zero.chi[2].exact_value = Rat(0);
    CHECK_THROWS_AS(zero.validate(), std::invalid_argument);
    UnitCharLabel bad{0, 0};
    CHECK_THROWS_AS(bad.normalize(), std::invalid_argument);
}

TEST_CASE("spin_factor_exact requires exact inputs") {
    SatakeData d = exact_data(2, Rat(1), Rat(1), Rat(1), Rat(1));
    d.chi[3].exact = false;
    d.chi[3].float_value = {0.5, 0.25};
    CHECK_THROWS_AS(spin_factor_exact(d), std::invalid_argument);
    CHECK_NOTHROW(spin_factor(d));  // float path accepts mixed input
}

TEST_CASE("evaluate_local matches the exact rational value at integer s") {
    // all-ones: local factor is (1 - p^{-s})^{-8}; at p = 2, s = 3:
    // (1 - 1/8)^{-8} = (8/7)^8
    SpinFactorFloat f = spin_factor(exact_data(2, Rat(1), Rat(1), Rat(1), Rat(1)));
    double got = evaluate_local(f, 3.0).real();
    double expected = std::pow(8.0 / 7.0, 8.0);
    CHECK(std::abs(got - expected) < 1e-12 * expected);
}

TEST_CASE("evaluate_local pole reports the prime") {
    // chi all ones, s = 0 makes t = 1 a root of (1-t)^8
    SpinFactorFloat f = spin_factor(exact_data(3, Rat(1), Rat(1), Rat(1), Rat(1)));
    try {
        evaluate_local(f, 0.0);
        FAIL("expected domain_error");
    } catch (const std::domain_error& e) {
        CHECK(std::string(e.what()).find("3") != std::string::npos);
    }
}

TEST_CASE("local_series inverts the denominator") {
    SpinFactorFloat f = spin_factor(exact_data(5, Rat(1, 2), Rat(2), Rat(-1, 3), Rat(4)));
    auto c = local_series(f, 24);
    REQUIRE(c.size() == 25);
    CHECK(std::abs(c[0] - std::complex<double>(1.0)) < 1e-15);
    // multiply back: D(t) * series(t) = 1 + O(t^25).  The coefficients grow
    // geometrically with the largest root, so compare the cancellation
    // against the magnitude of the summands.
    for (size_t k = 1; k < 25; ++k) {
        std::complex<double> conv = 0.0;
        double scale = 0.0;
        for (size_t j = 0; j <= std::min(k, f.denom.size() - 1); ++j) {
            conv += f.denom[j] * c[k - j];
            scale = std::max(scale, std::abs(f.denom[j] * c[k - j]));
        }
        CHECK(std::abs(conv) <= 1e-12 * std::max(1.0, scale));
    }
}

TEST_CASE("partial L product agrees with the Dirichlet path to 1e-10") {
    std::vector<SatakeData> data = {
        exact_data(2, Rat(1), Rat(1), Rat(-1), Rat(1, 2)),
        exact_data(3, Rat(1), Rat(2), Rat(1), Rat(-1, 3)),
        exact_data(5, Rat(1), Rat(1), Rat(1), Rat(1)),
        exact_data(7, Rat(1, 2), Rat(3), Rat(1, 4), Rat(-2)),
    };
    std::complex<double> prod = partial_l(data, 3.0, 100);
    std::complex<double> dirichlet = partial_l_dirichlet(data, 3.0, 100);
    CHECK(std::abs(prod - dirichlet) <= 1e-10 * std::max(1.0, std::abs(prod)));

    // cutoff filters primes
    std::complex<double> only23 = partial_l(data, 3.0, 4);
    std::complex<double> expect23 = partial_l({data[0], data[1]}, 3.0, 100);
    CHECK(std::abs(only23 - expect23) < 1e-14 * std::abs(expect23));
}

TEST_CASE("duplicate primes are rejected") {
    std::vector<SatakeData> data = {exact_data(2, Rat(1), Rat(1), Rat(1), Rat(1)),
                                    exact_data(2, Rat(1), Rat(2), Rat(1), Rat(1))};
    CHECK_THROWS_AS(partial_l(data, 3.0, 100), std::invalid_argument);
}

// ---------------------------------------------------------------------------

namespace {

HodgeNumbers sample_hodge() {
    HodgeNumbers h;
    h.h = {1, 0, 2, 3, 2, 0, 1};
    h.h3plus = 2;
    h.h3minus = 1;
    return h;
}

/// Independent pole-counting oracle: walk the factor list and count, for each
/// Γ_C(s−p), a pole at m iff m ≤ p; for each Γ_R(s−shift), a pole at m iff
/// m ≤ shift and m ≡ shift (mod 2).
int pole_oracle(const GammaFactorList& factors, std::int64_t m) {
    int order = 0;
    for (const auto& f : factors) {
        if (f.kind == GammaKind::C) {
            if (m <= f.shift) order += f.exponent;
        } else {
            if (m <= f.shift && (m - f.shift) % 2 == 0) order += f.exponent;
        }
    }
    return order;
}

}  // namespace

TEST_CASE("gamma_factor lists the expected shape") {
    GammaFactorList fl = gamma_factor(sample_hodge());
    REQUIRE(fl.size() == 4);  // h[1] = 0 omitted
    CHECK(fl[0].kind == GammaKind::C);
    CHECK(fl[0].shift == 0);
    CHECK(fl[0].exponent == 1);
    CHECK(fl[1].kind == GammaKind::C);
    CHECK(fl[1].shift == 2);
    CHECK(fl[1].exponent == 2);
    CHECK(fl[2].kind == GammaKind::R);
    CHECK(fl[2].shift == 3);
    CHECK(fl[2].exponent == 2);
    CHECK(fl[3].kind == GammaKind::R);
    CHECK(fl[3].shift == 2);
    CHECK(fl[3].exponent == 1);
}

TEST_CASE("pole_order: closed form equals the counting oracle") {
    std::mt19937 rng(424242);
    std::uniform_int_distribution<int> small(0, 4);
    for (int trial = 0; trial < 50; ++trial) {
        HodgeNumbers h;
        int h0 = small(rng), h1 = small(rng), h2 = small(rng);
        int hp = small(rng), hm = small(rng);
        h.h = {h0, h1, h2, hp + hm, h2, h1, h0};
        h.h3plus = hp;
        h.h3minus = hm;
        h.validate();
        GammaFactorList fl = gamma_factor(h);
        for (std::int64_t m = -10; m <= 10; ++m)
            CHECK(pole_order(h, m) == pole_oracle(fl, m));
    }
}

TEST_CASE("pole_order at m = 3 is h3plus") {
    HodgeNumbers h = sample_hodge();
    CHECK(pole_order(h, 3) == h.h3plus);
}

TEST_CASE("HodgeNumbers validation") {
    HodgeNumbers h = sample_hodge();
    CHECK_NOTHROW(h.validate());
    HodgeNumbers neg = h;
    neg.h[0] = -1;
    neg.h[6] = -1;
    CHECK_THROWS_AS(neg.validate(), std::invalid_argument);
    HodgeNumbers asym = h;
    asym.h[1] = 1;  // breaks h[1] == h[5]
    CHECK_THROWS_AS(asym.validate(), std::invalid_argument);
    HodgeNumbers split = h;
    split.h3plus = 1;  // 1 + 1 != h[3] = 3
    CHECK_THROWS_AS(split.validate(), std::invalid_argument);
}

TEST_CASE("gamma_R / gamma_C duplication identity") {
    for (double s : {0.7, 1.3, 2.5, 4.1, 6.9}) {
        double lhs = gamma_C(s);
        double rhs = gamma_R(s) * gamma_R(s + 1.0);
        CHECK(std::abs(lhs - rhs) < 1e-12 * std::abs(lhs));
    }
    // spot value: gamma_R(1) = pi^{-1/2} Gamma(1/2) = 1
    CHECK(std::abs(gamma_R(1.0) - 1.0) < 1e-14);
    // gamma_C(1) = 2 (2pi)^{-1} = 1/pi
    CHECK(std::abs(gamma_C(1.0) - 1.0 / std::acos(-1.0)) < 1e-14);
}
