#pragma once

#include <stdexcept>
#include <string>

namespace persuasion {

enum class Errc {
    // input / validation
    invalid_network,
    invalid_experiment,
    prior_out_of_range,
    quota_below_majority,
    quota_out_of_range,
    boundary_prior_rejected,
    bad_parameters,
    io_error,
    unknown_command,
    // family recognizers
    not_stellar,
    no_universal_node,
    subnetwork_not_stellar,
    not_constellation,
    component_without_center,
    non_clique_component,
    unequal_sizes,
    not_cluster_network,
    // evaluation
    signal_not_in_support,
    zero_mass_information_set,
    // constructions
    not_a_circle,
    quota_too_large_for_blocks,
    // transforms
    neighborhoods_differ,
    not_a_star_component,
    component_too_small,
    // extension builders
    degree_too_high,
    too_small,
    not_enough_outside_nodes,
    not_halo,
    size_out_of_range,
    premise_violated,
    not_galaxy,
    component_size_out_of_range,
    subset_sums_to_quota,
    not_an_extension_chain,
    certificate_violation,
    // LP / oracle
    infeasible,
    unbounded,
    too_large,
};

inline const char* errc_name(Errc c) {
    switch (c) {
        case Errc::invalid_network: return "InvalidNetwork";
        case Errc::invalid_experiment: return "InvalidExperiment";
        case Errc::prior_out_of_range: return "PriorOutOfRange";
        case Errc::quota_below_majority: return "QuotaBelowMajority";
        case Errc::quota_out_of_range: return "QuotaOutOfRange";
        case Errc::boundary_prior_rejected: return "BoundaryPriorRejected";
        case Errc::bad_parameters: return "BadParameters";
        case Errc::io_error: return "IoError";
        case Errc::unknown_command: return "UnknownCommand";
        case Errc::not_stellar: return "NotStellar";
        case Errc::no_universal_node: return "NoUniversalNode";
        case Errc::subnetwork_not_stellar: return "SubnetworkNotStellar";
        case Errc::not_constellation: return "NotConstellation";
        case Errc::component_without_center: return "ComponentWithoutCenter";
        case Errc::non_clique_component: return "NonCliqueComponent";
        case Errc::unequal_sizes: return "UnequalSizes";
        case Errc::not_cluster_network: return "NotClusterNetwork";
        case Errc::signal_not_in_support: return "SignalNotInSupport";
        case Errc::zero_mass_information_set: return "ZeroMassInformationSet";
        case Errc::not_a_circle: return "NotACircle";
        case Errc::quota_too_large_for_blocks: return "QuotaTooLargeForBlocks";
        case Errc::neighborhoods_differ: return "NeighborhoodsDiffer";
        case Errc::not_a_star_component: return "NotAStarComponent";
        case Errc::component_too_small: return "ComponentTooSmall";
        case Errc::degree_too_high: return "DegreeTooHigh";
        case Errc::too_small: return "TooSmall";
        case Errc::not_enough_outside_nodes: return "NotEnoughOutsideNodes";
        case Errc::not_halo: return "NotHalo";
        case Errc::size_out_of_range: return "SizeOutOfRange";
        case Errc::premise_violated: return "PremiseViolated";
        case Errc::not_galaxy: return "NotGalaxy";
        case Errc::component_size_out_of_range: return "ComponentSizeOutOfRange";
        case Errc::subset_sums_to_quota: return "SubsetSumsToQuota";
        case Errc::not_an_extension_chain: return "NotAnExtensionChain";
        case Errc::certificate_violation: return "CertificateViolation";
        case Errc::infeasible: return "Infeasible";
        case Errc::unbounded: return "Unbounded";
        case Errc::too_large: return "TooLarge";
    }
    return "UnknownError";
}

/// Exit code 3 for infeasibility and cap errors, 2 for everything else.
inline int exit_code_for(Errc c) {
    switch (c) {
        case Errc::infeasible:
        case Errc::unbounded:
        case Errc::too_large: return 3;
        default: return 2;
    }
}

class Error : public std::runtime_error {
public:
    Error(Errc code, const std::string& message)
        : std::runtime_error(std::string(errc_name(code)) + ": " + message), code_(code) {}

    Errc code() const { return code_; }

private:
    Errc code_;
};

} // namespace persuasion
