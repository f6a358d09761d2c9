#include "nanofcs/rates.hpp"

#include <cmath>

#include "nanofcs/errors.hpp"

namespace nanofcs {

namespace {

void require_positive_finite(double x, const char* name) {
    if (!std::isfinite(x) || !(x > 0.0))
        throw physics_error(std::string(name) + " must be strictly positive and finite");
}

}  // namespace

void RateSet::validate() const {
    require_positive_finite(sigma, "RateSet.sigma");
    require_positive_finite(k_rad, "RateSet.k_rad");
    require_positive_finite(k_nrad, "RateSet.k_nrad");
    require_positive_finite(k_isc, "RateSet.k_isc");
    require_positive_finite(k_ph, "RateSet.k_ph");
    require_positive_finite(kappa, "RateSet.kappa");
    if (kappa > 1.0) throw physics_error("RateSet.kappa must not exceed 1");
}

void SaturationCoefficients::validate() const {
    require_positive_finite(alpha_F, "SaturationCoefficients.alpha_F");
    require_positive_finite(alpha_T, "SaturationCoefficients.alpha_T");
    require_positive_finite(alpha_invtau, "SaturationCoefficients.alpha_invtau");
    require_positive_finite(I_s, "SaturationCoefficients.I_s");
    if (!(alpha_T * I_s < 1.0))
        throw physics_error("SaturationCoefficients: alpha_T * I_s must be < 1");
}

SaturationCoefficients SaturationCoefficients::in_unit(IntensityUnit to,
                                                       const ExcitationContext& ctx) const {
    if (to == unit) return *this;
    SaturationCoefficients out = *this;
    out.unit = to;
    // The alphas are "per intensity": they scale inversely to the axis values.
    const double c = ctx.conversion();
    if (unit == IntensityUnit::MicrowattAtFocus && to == IntensityUnit::PhotonFlux) {
        out.alpha_F = alpha_F / c;
        out.alpha_T = alpha_T / c;
        out.alpha_invtau = alpha_invtau / c;
        out.I_s = I_s * c;
    } else {
        out.alpha_F = alpha_F * c;
        out.alpha_T = alpha_T * c;
        out.alpha_invtau = alpha_invtau * c;
        out.I_s = I_s / c;
    }
    return out;
}

}  // namespace nanofcs
