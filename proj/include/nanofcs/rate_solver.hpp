#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "nanofcs/rates.hpp"

namespace nanofcs {

struct ValueWithError {
    double value = 0.0;
    double sigma = 0.0;  // 1-sigma; 0 means exact/not estimated
};

// The measured quantities the inversion consumes: the saturation quadruple
// from power-series fits, the total deexcitation rate from the lifetime fit,
// and the collection efficiency from calibration. The alphas live on the
// `coeff_unit` intensity axis; I_s may be reported on either axis.
struct MeasuredInputs {
    ValueWithError alpha_F;
    ValueWithError alpha_T;
    ValueWithError alpha_invtau;
    ValueWithError I_s;
    IntensityUnit coeff_unit = IntensityUnit::MicrowattAtFocus;
    IntensityUnit I_s_unit = IntensityUnit::PhotonFlux;
    ValueWithError k_tot;
    ValueWithError kappa;
    ExcitationContext context;

    void validate() const;  // throws physics_error / config_error

    double I_s_on_coeff_axis() const;  // I_s expressed in coeff_unit
    double I_s_photon_flux() const;    // I_s expressed as photon flux
};

struct RateUncertainty {
    double sigma = 0.0;
    double k_rad = 0.0;
    double k_nrad = 0.0;
    double k_isc = 0.0;
    double k_ph = 0.0;
    double phi = 0.0;
};

// Inversion output. `central` may carry a negative k_nrad when the inputs are
// inconsistent; that case is flagged, never clamped, so validate() on the
// central RateSet is deliberately not implied.
struct SolvedRates {
    RateSet central;
    RateUncertainty err;
    double phi = 0.0;
    std::vector<std::string> flags;

    bool flagged(const std::string& prefix) const;
};

// Closed-form inversion of the measured coefficients:
//   sigma  = k_tot (1 - alpha_T I_s) / I_s          [I_s as photon flux]
//   k_rad  = (alpha_F / kappa) I_s / (1 - alpha_T I_s)
//   k_isc  = alpha_invtau I_s / (1 - alpha_T I_s)
//   k_ph   = alpha_invtau / alpha_T
//   k_nrad = k_tot - k_rad - k_isc
SolvedRates invert(const MeasuredInputs& m);

// Monte-Carlo uncertainty propagation: independent Gaussian draws of the
// inputs truncated to the inversion's validity region, inverted one by one.
// Deterministic for a given seed; draws are keyed by index so the result does
// not depend on evaluation order. Also runs the linearized propagation as a
// cross check and flags per-rate disagreements above 30%.
SolvedRates propagate_uncertainty(const MeasuredInputs& m, int n_draws, uint64_t seed);

// First-order (finite-difference Jacobian) propagation.
RateUncertainty linearized_uncertainty(const MeasuredInputs& m);

// The kappa that makes the inversion reproduce a known reference quantum
// yield.
double calibrate_kappa(double phi_reference, const MeasuredInputs& m);

struct SolvedColumn {
    MeasuredInputs inputs;
    SolvedRates rates;
};

// Ratios nanoaperture/solution. eta_F is the alpha_F ratio (low-power limit);
// the factorization product eta_kappa*eta_phi*eta_sigma_ie is reported
// alongside for the consistency check.
struct EnhancementReport {
    ValueWithError eta_F;
    ValueWithError eta_kappa;
    ValueWithError eta_phi;
    ValueWithError eta_sigma_ie;
    ValueWithError product;  // eta_kappa * eta_phi * eta_sigma_ie
    ValueWithError alpha_T_ratio;
    ValueWithError alpha_invtau_ratio;
    ValueWithError I_s_ratio;
    ValueWithError k_tot_ratio;
    ValueWithError k_rad_ratio;
    ValueWithError k_nrad_ratio;
    ValueWithError k_isc_ratio;
    ValueWithError k_ph_ratio;
};

EnhancementReport enhancement(const SolvedColumn& solution, const SolvedColumn& aperture);

}  // namespace nanofcs
