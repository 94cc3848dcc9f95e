#include "sp6/packets.hpp"

#include <stdexcept>
#include <string>

namespace sp6 {

std::pair<int, int> hodge_type(const Weight& hc_param) {
    int p = 0;
    for (const Root& a : noncompact_positive_roots()) {
        const std::int64_t c = pairing(hc_param, a.w);
        if (c == 0)
            throw std::invalid_argument("hodge_type: parameter " + hc_param.str() +
                                        " is singular for the noncompact root " + a.w.str());
        if (c > 0) ++p;
    }
    return {p, 6 - p};
}

Weight minimal_k_type(const Weight& hc_param, const SignedPermutation& w) {
    // Blattner parameter of the discrete series with Harish-Chandra
    // parameter Λ = w(λ+ρ): the K-dominant weight Λ + w·ρ − 2δ_K.
    return hc_param + w.apply(rho()) - 2 * delta_k();
}

std::vector<DiscreteSeriesDescriptor> packet(const Weight& lambda) {
    if (!lambda.is_sp6_dominant())
        throw std::invalid_argument("packet: parameter " + lambda.str() +
                                    " is not dominant (need k1 >= k2 >= k3 >= 0)");
    std::vector<DiscreteSeriesDescriptor> out;
    const auto& reps = coset_representatives();
    out.reserve(reps.size());
    const Weight infl = lambda + rho();
    for (std::size_t i = 0; i < reps.size(); ++i) {
        const SignedPermutation& w = reps[i];
        DiscreteSeriesDescriptor d;
        d.index = static_cast<int>(i) + 1;
        d.hc_param = w.apply(infl);
        d.min_ktype = minimal_k_type(d.hc_param, w);
        auto [p, q] = hodge_type(d.hc_param);
        d.hodge_p = p;
        d.hodge_q = q;
        d.holomorphic = (p == 6);
        d.antiholomorphic = (p == 0);
        out.push_back(d);
    }
    return out;
}

}  // namespace sp6
