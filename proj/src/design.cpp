#include "jc/design.hpp"

#include <cmath>
#include <numbers>
#include <sstream>

#include "jc/model.hpp"

namespace jc {

VectorXd WaveguideGeometry::positions_um() const {
    VectorXd pos(n_guides);
    pos[0] = 0.0;
    for (int i = 0; i + 1 < n_guides; ++i)
        pos[i + 1] = pos[i] + spacings_um[i];
    return pos;
}

InverseLength index_gradient(const FabricationConstants& fab, Length pitch,
                             Length bend_radius) {
    fab.validate();
    if (!(pitch.um > 0.0) || !(bend_radius.um > 0.0))
        throw std::invalid_argument("index_gradient: lengths must be > 0");
    return {2.0 * std::numbers::pi * fab.n_s * pitch.um /
            (bend_radius.um * fab.lambda.um)};
}

Length spacing_from_coupling(InverseLength kappa, const FabricationConstants& fab) {
    fab.validate();
    if (!(kappa.per_um > 0.0))
        throw std::invalid_argument("spacing_from_coupling: kappa must be > 0");
    if (kappa.per_um >= fab.A.per_um) {
        std::ostringstream msg;
        msg << "spacing_from_coupling: kappa = " << kappa.per_um
            << " um^-1 >= A = " << fab.A.per_um << " um^-1 (non-positive spacing)";
        throw InfeasibleDesignError(msg.str());
    }
    return {std::log(fab.A.per_um / kappa.per_um) / fab.gamma.per_um};
}

InverseLength coupling_from_spacing(Length d, const FabricationConstants& fab) {
    fab.validate();
    if (!(d.um > 0.0))
        throw std::invalid_argument("coupling_from_spacing: spacing must be > 0");
    return {fab.A.per_um * std::exp(-fab.gamma.per_um * d.um)};
}

WaveguideGeometry design_array(const JCParams& params, const FabricationConstants& fab,
                               Length bend_radius, Length pitch, bool strict) {
    params.validate();
    fab.validate();

    WaveguideGeometry geo;
    geo.bend_radius = bend_radius;
    geo.pitch = pitch;
    geo.n_guides = params.n_sites;
    geo.g_per_um = params.g;
    geo.spacings_um.resize(params.n_sites - 1);
    for (int n = 0; n + 1 < params.n_sites; ++n) {
        const double kappa = coupling(n, params.g);
        if (kappa >= fab.A.per_um) {
            std::ostringstream msg;
            msg << "design_array: kappa_" << n << " = " << kappa
                << " um^-1 >= A = " << fab.A.per_um << " um^-1; first infeasible bond n = "
                << n;
            throw InfeasibleDesignError(msg.str());
        }
        geo.spacings_um[n] = spacing_from_coupling({kappa}, fab).um;
    }

    geo.omega_per_um = index_gradient(fab, pitch, bend_radius).per_um;
    const double rel = std::abs(geo.omega_per_um - params.omega) / params.omega;
    if (rel > 1e-3) {
        std::ostringstream msg;
        msg << "index gradient " << geo.omega_per_um << " um^-1 deviates from requested omega "
            << params.omega << " um^-1 by " << rel * 100.0 << "%";
        geo.omega_consistent = false;
        geo.diagnostic = msg.str();
        if (strict)
            throw ConfigError("design_array: " + geo.diagnostic);
    }
    return geo;
}

}  // namespace jc
