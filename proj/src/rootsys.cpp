#include "sp6/rootsys.hpp"

#include <algorithm>
#include <stdexcept>

namespace sp6 {

namespace {

Weight e(int j) {
    Weight w;
    w[j - 1] = 1;
    return w;
}

std::array<Root, 18> build_all_roots() {
    std::array<Root, 18> r{};
    size_t n = 0;
    // Long roots ±2e_j and short sums ±(e_j + e_k): noncompact.
    for (int j = 1; j <= 3; ++j) {
        r[n++] = {2 * e(j), RootKind::noncompact};
        r[n++] = {-(2 * e(j)), RootKind::noncompact};
    }
    for (int j = 1; j <= 3; ++j)
        for (int k = j + 1; k <= 3; ++k) {
            r[n++] = {e(j) + e(k), RootKind::noncompact};
            r[n++] = {-(e(j) + e(k)), RootKind::noncompact};
        }
    // Differences ±(e_j − e_k): compact.
    for (int j = 1; j <= 3; ++j)
        for (int k = j + 1; k <= 3; ++k) {
            r[n++] = {e(j) - e(k), RootKind::compact};
            r[n++] = {e(k) - e(j), RootKind::compact};
        }
    return r;
}

}  // namespace

const std::array<Root, 18>& all_roots() {
    static const std::array<Root, 18> roots = build_all_roots();
    return roots;
}

const std::array<Root, 9>& positive_roots() {
    static const std::array<Root, 9> roots = [] {
        std::array<Root, 9> r{};
        const auto& nc = noncompact_positive_roots();
        const auto& c = compact_positive_roots();
        std::copy(nc.begin(), nc.end(), r.begin());
        std::copy(c.begin(), c.end(), r.begin() + 6);
        return r;
    }();
    return roots;
}

const std::array<Root, 6>& noncompact_positive_roots() {
    static const std::array<Root, 6> roots = {{
        {{2, 0, 0}, RootKind::noncompact},
        {{0, 2, 0}, RootKind::noncompact},
        {{0, 0, 2}, RootKind::noncompact},
        {{1, 1, 0}, RootKind::noncompact},
        {{1, 0, 1}, RootKind::noncompact},
        {{0, 1, 1}, RootKind::noncompact},
    }};
    return roots;
}

const std::array<Root, 3>& compact_positive_roots() {
    static const std::array<Root, 3> roots = {{
        {{1, -1, 0}, RootKind::compact},
        {{1, 0, -1}, RootKind::compact},
        {{0, 1, -1}, RootKind::compact},
    }};
    return roots;
}

SignedPermutation compose(const SignedPermutation& a, const SignedPermutation& b) {
    // (a∘b)(v)_i = a.signs[i] * (b v)[a.perm[i]]
    //            = a.signs[i] * b.signs[a.perm[i]] * v[b.perm[a.perm[i]]].
    SignedPermutation c;
    for (size_t i = 0; i < 3; ++i) {
        c.perm[i] = b.perm[static_cast<size_t>(a.perm[i])];
        c.signs[i] = a.signs[i] * b.signs[static_cast<size_t>(a.perm[i])];
    }
    return c;
}

SignedPermutation inverse(const SignedPermutation& w) {
    SignedPermutation inv;
    for (size_t i = 0; i < 3; ++i) {
        inv.perm[static_cast<size_t>(w.perm[i])] = static_cast<int>(i);
        inv.signs[static_cast<size_t>(w.perm[i])] = w.signs[i];
    }
    return inv;
}

SignedPermutation sigma_flip(int j) {
    if (j < 1 || j > 3) throw std::invalid_argument("sigma_flip: index out of range");
    SignedPermutation w;
    w.signs[static_cast<size_t>(j - 1)] = -1;
    return w;
}

SignedPermutation sigma_swap(int j, int k) {
    if (j < 1 || j > 3 || k < 1 || k > 3 || j == k)
        throw std::invalid_argument("sigma_swap: bad indices");
    SignedPermutation w;
    std::swap(w.perm[static_cast<size_t>(j - 1)], w.perm[static_cast<size_t>(k - 1)]);
    return w;
}

const std::vector<SignedPermutation>& group_elements() {
    static const std::vector<SignedPermutation> elems = [] {
        std::vector<SignedPermutation> v;
        std::array<int, 3> p{0, 1, 2};
        do {
            for (int mask = 0; mask < 8; ++mask) {
                SignedPermutation w;
                w.perm = p;
                for (int i = 0; i < 3; ++i)
                    w.signs[static_cast<size_t>(i)] = (mask >> i) & 1 ? -1 : 1;
                v.push_back(w);
            }
        } while (std::next_permutation(p.begin(), p.end()));
        return v;
    }();
    return elems;
}

const std::array<SignedPermutation, 8>& coset_representatives() {
    // Each representative is reconstructed from its pinned image of rho:
    // since rho = (3,2,1) has distinct nonzero entries, the image determines
    // the signed permutation uniquely.
    static const std::array<SignedPermutation, 8> reps = [] {
        const std::array<Weight, 8> images = {{
            {3, 2, 1},
            {3, 2, -1},
            {3, 1, -2},
            {2, 1, -3},
            {3, -1, -2},
            {2, -1, -3},
            {1, -2, -3},
            {-1, -2, -3},
        }};
        std::array<SignedPermutation, 8> reps{};
        for (size_t i = 0; i < 8; ++i) {
            SignedPermutation w;
            for (int pos = 0; pos < 3; ++pos) {
                std::int64_t t = images[i][pos];
                std::int64_t a = t < 0 ? -t : t;
                w.perm[static_cast<size_t>(pos)] = static_cast<int>(3 - a);  // |rho| = (3,2,1)
                w.signs[static_cast<size_t>(pos)] = t < 0 ? -1 : 1;
            }
            if (!(w.apply(rho()) == images[i]))
                throw std::logic_error("coset representative reconstruction failed");
            reps[i] = w;
        }
        return reps;
    }();
    return reps;
}

}  // namespace sp6
