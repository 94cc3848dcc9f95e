#pragma once

// Discrete-series packets for Sp(6,R) at a fixed infinitesimal character.
//
// For a dominant regular integral parameter the discrete series with that
// infinitesimal character are indexed by the cosets W(C3)/W(K); we enumerate
// them through the pinned coset representatives of rootsys.hpp.  Each member
// carries its Harish-Chandra parameter, its minimal K-type, and the Hodge
// bidegree of the coherent-cohomology stratum it contributes to.

#include <cstdint>
#include <vector>

#include "sp6/rootsys.hpp"

namespace sp6 {

/// One member of a discrete-series packet.
struct DiscreteSeriesDescriptor {
    int index = 0;                 ///< position in the packet, 1-based
    Weight hc_param{};             ///< Harish-Chandra parameter Λ
    Weight min_ktype{};            ///< highest weight of the minimal K-type
    int hodge_p = 0;               ///< Hodge bidegree (p,q), p+q = 6
    int hodge_q = 0;
    bool holomorphic = false;      ///< Λ dominant for all of Δ⁺
    bool antiholomorphic = false;  ///< Λ anti-dominant for Δ⁺ₙ꜀
};

/// Hodge bidegree (p,q) attached to a regular Harish-Chandra parameter:
/// p counts noncompact positive roots pairing positively with Λ, q = 6 − p.
/// Throws std::invalid_argument when Λ is singular for some noncompact root.
std::pair<int, int> hodge_type(const Weight& hc_param);

/// Minimal K-type of the discrete series with Harish-Chandra parameter Λ,
/// Λ = w(λ+ρ): the highest weight Λ + w·ρ − 2δ_K.
Weight minimal_k_type(const Weight& hc_param, const SignedPermutation& w);

/// The discrete-series packet with infinitesimal character λ+ρ, for λ a
/// Δ⁺-dominant integral weight.  Members are listed in the pinned coset
/// order, from the holomorphic one (index 1) to the antiholomorphic (8).
/// Throws std::invalid_argument when λ is not dominant.
std::vector<DiscreteSeriesDescriptor> packet(const Weight& lambda);

}  // namespace sp6
