#pragma once

#include <string>
#include <utility>

#include "persuasion/network.hpp"
#include "persuasion/rational.hpp"

namespace persuasion {

/// A persuasion problem: spillover network, common prior on the good state,
/// and the critical mass k of x-actions needed for outcome x.
struct Instance {
    Network network;
    Rational prior_x;
    int k = 1;
    bool boundary_prior = false;  // prior_x == k/(n+k), accepted only on request

    int n() const { return network.n; }
    Rational prior_y() const { return Rational(1) - prior_x; }

    Instance with_network(Network g) const {
        Instance copy = *this;
        if (g.n != network.n)
            throw Error(Errc::bad_parameters, "replacement network has a different receiver count");
        copy.network = std::move(g);
        return copy;
    }
};

inline int simple_majority(int n) { return (n + 1) / 2; }

/// Checks all instance invariants. The boundary prior k/(n+k) is rejected by
/// default and accepted only with allow_boundary.
inline Instance validate_instance(Network network, Rational prior_x, int k,
                                  bool allow_boundary = false) {
    const int n = network.n;
    if (prior_x <= Rational(0) || prior_x >= Rational(1))
        throw Error(Errc::prior_out_of_range, "prior must lie strictly between 0 and 1");
    if (k < simple_majority(n))
        throw Error(Errc::quota_below_majority,
                    "critical mass " + std::to_string(k) + " is below simple majority " +
                        std::to_string(simple_majority(n)));
    if (k > n)
        throw Error(Errc::quota_out_of_range,
                    "critical mass " + std::to_string(k) + " exceeds receiver count " + std::to_string(n));
    const Rational cutoff = Rational(k) / Rational(n + k);
    bool boundary = prior_x == cutoff;
    if (prior_x > cutoff)
        throw Error(Errc::prior_out_of_range,
                    "prior " + prior_x.str() + " exceeds k/(n+k) = " + cutoff.str());
    if (boundary && !allow_boundary)
        throw Error(Errc::boundary_prior_rejected,
                    "prior equals k/(n+k) = " + cutoff.str() + "; pass the boundary flag to accept");
    return Instance{std::move(network), std::move(prior_x), k, boundary};
}

/// Fully-private optimum (n+k)/k * prior_x; the upper bound for every network.
inline Rational v_upper(const Instance& inst) {
    return Rational(inst.n() + inst.k) / Rational(inst.k) * inst.prior_x;
}

/// Public-signaling value 2 * prior_x, independent of network and quota.
inline Rational v_public(const Instance& inst) { return Rational(2) * inst.prior_x; }

/// Conditional-on-Y persuasion probability at the optimum: n*prior/(k*(1-prior)).
inline Rational v_tilde(const Instance& inst) {
    return Rational(inst.n()) * inst.prior_x / (Rational(inst.k) * inst.prior_y());
}

} // namespace persuasion
