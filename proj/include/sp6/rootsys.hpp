// The C3 root system of sp6 in compact-Cartan coordinates, together with the
// ambient Weyl group {±1}^3 ⋊ S3 and the eight coset representatives modulo
// the Weyl group of U(3).
//
// Weights are integer triples (k1,k2,k3) = k1*e1 + k2*e2 + k3*e3.  The 18
// roots are ±2e_j and ±(e_j ± e_k); a root is compact exactly when it has the
// form ±(e_j − e_k).

#pragma once

#include <array>
#include <cstdint>
#include <string>
#include <vector>

namespace sp6 {

struct Weight {
    std::array<std::int64_t, 3> k{0, 0, 0};

    Weight() = default;
    Weight(std::int64_t a, std::int64_t b, std::int64_t c) : k{a, b, c} {}

    std::int64_t operator[](int i) const { return k[static_cast<size_t>(i)]; }
    std::int64_t& operator[](int i) { return k[static_cast<size_t>(i)]; }

    /// k1 >= k2 >= k3 (ties allowed).
    bool is_k_dominant() const { return k[0] >= k[1] && k[1] >= k[2]; }
    /// k1 >= k2 >= k3 >= 0, the dominance cone for Sp6.
    bool is_sp6_dominant() const { return is_k_dominant() && k[2] >= 0; }

    friend Weight operator+(const Weight& a, const Weight& b) {
        return {a.k[0] + b.k[0], a.k[1] + b.k[1], a.k[2] + b.k[2]};
    }
    friend Weight operator-(const Weight& a, const Weight& b) {
        return {a.k[0] - b.k[0], a.k[1] - b.k[1], a.k[2] - b.k[2]};
    }
    friend Weight operator*(std::int64_t c, const Weight& w) {
        return {c * w.k[0], c * w.k[1], c * w.k[2]};
    }
    Weight operator-() const { return {-k[0], -k[1], -k[2]}; }

    friend bool operator==(const Weight& a, const Weight& b) { return a.k == b.k; }
    /// Lexicographic order (k1, then k2, then k3); the leading-term order
    /// used throughout the character module.
    friend bool operator<(const Weight& a, const Weight& b) { return a.k < b.k; }
    friend bool operator>(const Weight& a, const Weight& b) { return b < a; }

    std::string str() const {
        return "(" + std::to_string(k[0]) + "," + std::to_string(k[1]) + "," +
               std::to_string(k[2]) + ")";
    }
};

/// Standard scalar product on the coordinate space.
inline std::int64_t pairing(const Weight& a, const Weight& b) {
    return a.k[0] * b.k[0] + a.k[1] * b.k[1] + a.k[2] * b.k[2];
}

enum class RootKind { compact, noncompact };

struct Root {
    Weight w;
    RootKind kind;

    bool is_compact() const { return kind == RootKind::compact; }
    friend bool operator==(const Root& a, const Root& b) {
        return a.w == b.w && a.kind == b.kind;
    }
};

/// All 18 roots: 6 compact ±(e_j − e_k), 12 noncompact ±2e_j, ±(e_j + e_k).
const std::array<Root, 18>& all_roots();

/// The 9 positive roots: 2e_j, e_j + e_k (noncompact) and e_j − e_k, j<k (compact).
const std::array<Root, 9>& positive_roots();

/// The 6 noncompact positive roots in the pinned enumeration
/// 2e1, 2e2, 2e3, e1+e2, e1+e3, e2+e3 — the basis order for p+ (p− uses the
/// negatives in the same order).
const std::array<Root, 6>& noncompact_positive_roots();

/// The 3 compact positive roots e1−e2, e1−e3, e2−e3.
const std::array<Root, 3>& compact_positive_roots();

/// Half-sum of the positive roots: (3,2,1).
inline Weight rho() { return {3, 2, 1}; }

/// Half-sum of the positive compact roots: (1,0,−1).
inline Weight delta_k() { return {1, 0, -1}; }

/// Element of the Weyl group {±1}^3 ⋊ S3 of Sp6.  Acts on weights by
/// permuting coordinates and then flipping signs:
///   (w·v)_i = signs[i] * v[perm[i]].
struct SignedPermutation {
    std::array<int, 3> perm{0, 1, 2};   // 0-based positions
    std::array<int, 3> signs{1, 1, 1};  // each ±1

    Weight apply(const Weight& v) const {
        Weight r;
        for (int i = 0; i < 3; ++i)
            r[i] = signs[static_cast<size_t>(i)] * v[perm[static_cast<size_t>(i)]];
        return r;
    }

    bool is_identity() const {
        return perm == std::array<int, 3>{0, 1, 2} &&
               signs == std::array<int, 3>{1, 1, 1};
    }
    friend bool operator==(const SignedPermutation& a, const SignedPermutation& b) {
        return a.perm == b.perm && a.signs == b.signs;
    }
};

inline Weight apply(const SignedPermutation& w, const Weight& v) { return w.apply(v); }

/// Composition satisfying apply(compose(a,b), v) == apply(a, apply(b, v)).
SignedPermutation compose(const SignedPermutation& a, const SignedPermutation& b);

SignedPermutation inverse(const SignedPermutation& w);

/// Sign flip on coordinate j (1-based), e.g. sigma(1) sends (3,2,1) to (−3,2,1).
SignedPermutation sigma_flip(int j);

/// Transposition of coordinates j,k (1-based), e.g. sigma_swap(1,2) sends
/// (3,2,1) to (2,3,1).
SignedPermutation sigma_swap(int j, int k);

/// All 48 group elements (order: signs within permutations, deterministic).
const std::vector<SignedPermutation>& group_elements();

/// The 8 representatives w1..w8 of the cosets modulo the U(3) Weyl group
/// (permutations with all signs +1), pinned so that w_i(rho) runs through
///   (3,2,1), (3,2,−1), (3,1,−2), (2,1,−3), (3,−1,−2), (2,−1,−3),
///   (1,−2,−3), (−1,−2,−3).
/// Each w_i maps the dominant cone into the K-dominant cone.
const std::array<SignedPermutation, 8>& coset_representatives();

}  // namespace sp6
