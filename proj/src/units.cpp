#include "nanofcs/units.hpp"

#include <cmath>
#include <numbers>

#include "nanofcs/errors.hpp"

namespace nanofcs {

std::string to_string(IntensityUnit unit) {
    switch (unit) {
        case IntensityUnit::MicrowattAtFocus: return "uW_at_focus";
        case IntensityUnit::PhotonFlux: return "photons_s_cm2";
    }
    throw config_error("unknown intensity unit tag");
}

IntensityUnit intensity_unit_from_string(const std::string& s) {
    if (s == "uW_at_focus" || s == "uW") return IntensityUnit::MicrowattAtFocus;
    if (s == "photons_s_cm2" || s == "photon_flux") return IntensityUnit::PhotonFlux;
    throw config_error("unknown intensity unit tag: '" + s + "'");
}

double photon_energy_J(double wavelength_nm) {
    if (!(wavelength_nm > 0.0)) throw config_error("wavelength must be positive");
    return kPlanck_J_s * kSpeedOfLight_m_s / (wavelength_nm * 1e-9);
}

double default_power_to_intensity(double wavelength_nm, double waist_nm) {
    if (!(waist_nm > 0.0)) throw config_error("beam waist must be positive");
    const double waist_cm = waist_nm * 1e-7;
    const double area_cm2 = std::numbers::pi * waist_cm * waist_cm;
    return 1e-6 / (photon_energy_J(wavelength_nm) * area_cm2);
}

double ExcitationContext::conversion() const {
    if (power_to_intensity > 0.0) return power_to_intensity;
    return default_power_to_intensity(wavelength_nm, waist_nm);
}

double ExcitationContext::convert(double x, IntensityUnit from, IntensityUnit to) const {
    if (from == to) return x;
    const double c = conversion();
    if (from == IntensityUnit::MicrowattAtFocus) return x * c;
    return x / c;
}

void ExcitationContext::validate() const {
    if (!(wavelength_nm > 0.0) || !std::isfinite(wavelength_nm))
        throw config_error("ExcitationContext.wavelength_nm must be positive");
    if (!(waist_nm > 0.0) || !std::isfinite(waist_nm))
        throw config_error("ExcitationContext.waist_nm must be positive");
    if (!(conversion() > 0.0) || !std::isfinite(conversion()))
        throw config_error("ExcitationContext.power_to_intensity must be positive");
}

}  // namespace nanofcs
