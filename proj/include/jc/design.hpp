#pragma once

#include <string>

#include "jc/types.hpp"

namespace jc {

/// Length in the single declared base unit of this module, micrometers.
/// Construct through the named helpers so mixed-unit call sites are
/// impossible to write by accident.
struct Length {
    double um = 0.0;
};

constexpr Length micrometers(double v) { return {v}; }
constexpr Length nanometers(double v) { return {v * 1e-3}; }
constexpr Length millimeters(double v) { return {v * 1e3}; }
constexpr Length centimeters(double v) { return {v * 1e4}; }

/// Rate (inverse length) in um^-1.
struct InverseLength {
    double per_um = 0.0;
};

constexpr InverseLength per_micrometer(double v) { return {v}; }
constexpr InverseLength per_millimeter(double v) { return {v * 1e-3}; }

/// Femtosecond-laser-written waveguide constants: coupling law
/// kappa = A exp(-gamma d), substrate index and working wavelength.
/// The core diameter rho = 5 um and index change 0.002 underlying A and
/// gamma are metadata only and enter no computation here.
struct FabricationConstants {
    InverseLength A = per_millimeter(24.6);
    InverseLength gamma = per_micrometer(0.466);
    double n_s = 1.45;
    Length lambda = nanometers(633.0);

    void validate() const {
        if (!(A.per_um > 0.0) || !(gamma.per_um > 0.0) || !(n_s > 0.0) ||
            !(lambda.um > 0.0))
            throw std::invalid_argument("FabricationConstants: all fields must be > 0");
    }
};

/// Physical curved-array description. Spacings d_n (n = 0..N-2) decrease
/// strictly with n when g > 0 since kappa_n = g sqrt(n+1) increases.
struct WaveguideGeometry {
    Length bend_radius;
    Length pitch;               // horizontal spacing a
    VectorXd spacings_um;       // d_n, length n_guides - 1
    int n_guides = 0;
    double omega_per_um = 0.0;  // index gradient implied by (fab, a, R)
    double g_per_um = 0.0;
    bool omega_consistent = true;
    std::string diagnostic;     // set when index gradient mismatches params.omega

    /// Waveguide center positions, guide 0 at the origin.
    VectorXd positions_um() const;
};

/// Index gradient omega = 2 pi n_s a / (R lambda); the revival period is
/// T = 2 pi / omega.
InverseLength index_gradient(const FabricationConstants& fab, Length pitch,
                             Length bend_radius);

/// d = (1/gamma) ln(A / kappa). Throws InfeasibleDesignError for
/// kappa >= A (non-positive spacing).
Length spacing_from_coupling(InverseLength kappa, const FabricationConstants& fab);

/// kappa = A exp(-gamma d); exact inverse of spacing_from_coupling.
InverseLength coupling_from_spacing(Length d, const FabricationConstants& fab);

/// Geometry realizing kappa_n = g sqrt(n+1) for params.n_sites guides.
/// params.omega and params.g are physical rates in um^-1 here. When the
/// index gradient implied by (fab, pitch, bend_radius) differs from
/// params.omega by more than 0.1% a diagnostic is attached; with
/// strict = true that becomes a ConfigError.
WaveguideGeometry design_array(const JCParams& params, const FabricationConstants& fab,
                               Length bend_radius, Length pitch, bool strict = false);

}  // namespace jc
