#pragma once

#include "nanofcs/units.hpp"

namespace nanofcs {

// The five photokinetic rates of the S0/S1/T three-level scheme plus the
// excitation cross-section and the detection-side collection efficiency.
struct RateSet {
    double sigma = 0.0;   // excitation cross-section [cm^2]
    double k_rad = 0.0;   // radiative S1->S0 rate [1/s]
    double k_nrad = 0.0;  // internal conversion S1->S0 rate [1/s]
    double k_isc = 0.0;   // intersystem crossing S1->T rate [1/s]
    double k_ph = 0.0;    // triplet deexcitation T->S0 rate [1/s]
    double kappa = 0.0;   // collection efficiency, (0,1]

    // Derived, never stored: keeps k_tot/phi consistent with the rates.
    double k_tot() const { return k_rad + k_nrad + k_isc; }
    double phi() const { return k_rad / k_tot(); }

    void validate() const;  // throws physics_error
};

// Measurable saturation quadruple: the slopes of brightness, triplet fraction
// and triplet relaxation rate versus excitation intensity, plus the shared
// saturation intensity. `unit` declares the intensity axis the values refer to.
struct SaturationCoefficients {
    double alpha_F = 0.0;       // [counts/s per intensity-unit]
    double alpha_T = 0.0;       // [1/intensity-unit]
    double alpha_invtau = 0.0;  // [1/s per intensity-unit]
    double I_s = 0.0;           // [intensity-unit]
    IntensityUnit unit = IntensityUnit::PhotonFlux;

    void validate() const;  // throws physics_error

    // Re-express on the other intensity axis via the context bridge.
    SaturationCoefficients in_unit(IntensityUnit to, const ExcitationContext& ctx) const;
};

// Steady-state occupancy of the three electronic states.
struct ThreeLevelState {
    double p_s0 = 1.0;
    double p_s1 = 0.0;
    double p_t = 0.0;
};

}  // namespace nanofcs
