#pragma once

#include "nanofcs/rates.hpp"

namespace nanofcs {

// Saturation intensity (k_tot/sigma)/(1 + k_isc/k_ph) in photons/s/cm^2.
double saturation_intensity(const RateSet& rates);

// Unique stationary distribution of the three-level kinetic scheme
//   S0 -> S1 at sigma*I_e,  S1 -> S0 at k_rad+k_nrad,
//   S1 -> T  at k_isc,      T  -> S0 at k_ph
// for excitation intensity I_e [photons/s/cm^2].
ThreeLevelState steady_state(const RateSet& rates, double intensity);

// Detected fluorescence rate per molecule, kappa*k_rad*p_S1 [counts/s].
double forward_brightness(const RateSet& rates, double intensity);

// Steady-state triplet population T_eq at the given intensity.
double triplet_fraction(const RateSet& rates, double intensity);

// Triplet relaxation rate 1/tau_bT = k_ph + sigma*I*k_isc/(sigma*I + k_rad + k_nrad).
double triplet_rate(const RateSet& rates, double intensity);

// Saturation coefficients implied by the rates, expressed on the requested
// intensity axis:
//   alpha_F      = kappa * phi * sigma
//   alpha_T      = sigma * k_isc / (k_ph * k_tot)
//   alpha_invtau = sigma * k_isc / (k_rad + k_nrad)
//   I_s          = (k_tot / sigma) / (1 + k_isc / k_ph)
SaturationCoefficients forward_saturation(const RateSet& rates, const ExcitationContext& ctx,
                                          IntensityUnit unit);

// Nonzero eigenvalue pair of the 3x3 kinetic matrix, as positive decay rates.
// `slow` is the smaller-magnitude one, the relaxation rate a correlation
// measurement actually sees; the closed form above approximates it.
struct TripletEigenrates {
    double slow = 0.0;
    double fast = 0.0;
    bool degenerate = false;  // |slow - fast| within ~1e-9 relative
};
TripletEigenrates exact_triplet_eigenrate(const RateSet& rates, double intensity);

}  // namespace nanofcs
