#include "sp6/uchar.hpp"

#include <algorithm>
#include <array>
#include <bit>
#include <cstdlib>

namespace sp6 {

LaurentChar LaurentChar::monomial(const Weight& w, std::int64_t c) {
    LaurentChar p;
    p.add_term(w, c);
    return p;
}

std::int64_t LaurentChar::coeff(const Weight& w) const {
    auto it = terms_.find(w);
    return it == terms_.end() ? 0 : it->second;
}

const Weight& LaurentChar::leading_weight() const {
    if (terms_.empty()) throw std::logic_error("leading_weight of zero polynomial");
    return terms_.begin()->first;
}

std::int64_t LaurentChar::eval_at_one() const {
    std::int64_t s = 0;
    for (const auto& [w, c] : terms_) s += c;
    return s;
}

void LaurentChar::add_term(const Weight& w, std::int64_t c) {
    if (c == 0) return;
    auto [it, inserted] = terms_.emplace(w, c);
    if (!inserted) {
        it->second += c;
        if (it->second == 0) terms_.erase(it);
    }
}

LaurentChar operator+(const LaurentChar& a, const LaurentChar& b) {
    LaurentChar r = a;
    for (const auto& [w, c] : b.terms_) r.add_term(w, c);
    return r;
}

LaurentChar operator-(const LaurentChar& a, const LaurentChar& b) {
    LaurentChar r = a;
    for (const auto& [w, c] : b.terms_) r.add_term(w, -c);
    return r;
}

LaurentChar operator*(const LaurentChar& a, const LaurentChar& b) {
    LaurentChar r;
    for (const auto& [wa, ca] : a.terms_)
        for (const auto& [wb, cb] : b.terms_) r.add_term(wa + wb, ca * cb);
    return r;
}

LaurentChar operator*(std::int64_t c, const LaurentChar& a) {
    LaurentChar r;
    if (c == 0) return r;
    for (const auto& [w, k] : a.terms_) r.add_term(w, c * k);
    return r;
}

bool LaurentChar::is_symmetric() const {
    // Generated by the transpositions (12) and (23).
    for (const auto& [w, c] : terms_) {
        if (coeff(Weight{w[1], w[0], w[2]}) != c) return false;
        if (coeff(Weight{w[0], w[2], w[1]}) != c) return false;
    }
    return true;
}

std::int64_t DecompTable::total_dim() const {
    std::int64_t s = 0;
    for (const auto& [hw, mult] : entries) s += mult * dim(hw);
    return s;
}

namespace {

/// Alternant A_mu = sum over S3 of sgn(s) x^{s(mu)}; mu has distinct entries
/// in all uses here, so the six terms never collide.
LaurentChar alternant(const Weight& mu) {
    static const std::array<std::array<int, 3>, 6> perms = {{
        {0, 1, 2}, {1, 0, 2}, {0, 2, 1}, {2, 1, 0}, {1, 2, 0}, {2, 0, 1},
    }};
    static const std::array<std::int64_t, 6> sgn = {1, -1, -1, -1, 1, 1};
    LaurentChar p;
    for (size_t i = 0; i < 6; ++i) {
        Weight w{mu[perms[i][0]], mu[perms[i][1]], mu[perms[i][2]]};
        p.add_term(w, sgn[i]);
    }
    return p;
}

/// Exact division of Laurent polynomials where the divisor's leading term is
/// the monomial x^{(2,1,0)} with coefficient 1 (the denominator alternant).
/// Each step cancels the current leading term; a nonzero remainder means the
/// dividend was not divisible and raises NotACharacterError.
LaurentChar divide_by_denominator_alternant(LaurentChar num) {
    static const LaurentChar den = alternant(Weight{2, 1, 0});
    static const Weight den_lead{2, 1, 0};
    LaurentChar q;
    // Each step appends one quotient term and strictly lowers the leading
    // weight, so for a divisible dividend the step count equals the quotient's
    // term count, and every quotient weight lies in the bounding box of the
    // dividend's support (expanded by the divisor's exponent range).  Cap the
    // step count by that box volume so non-divisible inputs still trip.
    std::int64_t guard = 0;
    std::int64_t max_steps = 16;
    if (!num.is_zero()) {
        Weight lo = num.terms().begin()->first, hi = lo;
        for (const auto& [w, c] : num.terms()) {
            for (int j = 0; j < 3; ++j) {
                lo[j] = std::min(lo[j], w[j]);
                hi[j] = std::max(hi[j], w[j]);
            }
        }
        std::int64_t volume = 1;
        for (int j = 0; j < 3; ++j) volume *= hi[j] - lo[j] + 5;
        max_steps += volume;
    }
    while (!num.is_zero()) {
        if (++guard > max_steps)
            throw NotACharacterError("alternant division does not terminate");
        const Weight& lw = num.leading_weight();
        std::int64_t lc = num.terms().begin()->second;
        Weight shift = lw - den_lead;
        q.add_term(shift, lc);
        num = num - lc * (LaurentChar::monomial(shift) * den);
    }
    return q;
}

}  // namespace

LaurentChar irrep_char(const Weight& hw) {
    if (!hw.is_k_dominant())
        throw std::invalid_argument("irrep_char: " + hw.str() + " is not dominant");
    // Weyl character formula: A_{hw + (2,1,0)} / A_{(2,1,0)}.
    LaurentChar num = alternant(hw + Weight{2, 1, 0});
    LaurentChar ch = divide_by_denominator_alternant(num);
    return ch;
}

std::int64_t dim(const Weight& hw) {
    if (!hw.is_k_dominant())
        throw std::invalid_argument("dim: " + hw.str() + " is not dominant");
    std::int64_t a = hw[0], b = hw[1], c = hw[2];
    return (a - b + 1) * (b - c + 1) * (a - c + 2) / 2;
}

LaurentChar wedge_char(PSpace space, int k) {
    if (k < 0 || k > 6) throw std::invalid_argument("wedge_char: k out of range 0..6");
    LaurentChar r;
    // Elementary symmetric polynomial: sum over k-subsets of the six weights.
    const auto& roots = noncompact_positive_roots();
    for (int mask = 0; mask < 64; ++mask) {
        if (std::popcount(static_cast<unsigned>(mask)) != k) continue;
        Weight w{0, 0, 0};
        for (int i = 0; i < 6; ++i)
            if (mask >> i & 1) w = w + roots[static_cast<size_t>(i)].w;
        if (space == PSpace::minus) w = -w;
        r.add_term(w, 1);
    }
    return r;
}

DecompTable decompose(const LaurentChar& ch) {
    DecompTable table;
    LaurentChar rest = ch;
    std::int64_t total = rest.eval_at_one();
    if (total < 0) throw NotACharacterError("negative dimension at evaluation");
    std::int64_t rounds = 0;
    while (!rest.is_zero()) {
        if (++rounds > total + 1)
            throw NotACharacterError("decomposition does not terminate");
        const Weight& lw = rest.leading_weight();
        std::int64_t mult = rest.terms().begin()->second;
        if (mult < 0)
            throw NotACharacterError("negative leading coefficient at " + lw.str());
        if (!lw.is_k_dominant())
            throw NotACharacterError("non-dominant leading weight " + lw.str());
        rest = rest - mult * irrep_char(lw);
        table.entries[lw] += mult;
    }
    return table;
}

}  // namespace sp6
