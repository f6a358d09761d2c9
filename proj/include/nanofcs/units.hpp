#pragma once

#include <string>

namespace nanofcs {

inline constexpr double kPlanck_J_s = 6.62607015e-34;
inline constexpr double kSpeedOfLight_m_s = 2.99792458e8;

// Excitation intensity is carried in one of two units: microwatt of laser
// power at the focus, or photon flux in photons/s/cm^2. All internal physics
// uses photon flux; microwatts appear only at the boundaries.
enum class IntensityUnit {
    MicrowattAtFocus,
    PhotonFlux,  // photons / s / cm^2
};

std::string to_string(IntensityUnit unit);
IntensityUnit intensity_unit_from_string(const std::string& s);

// Beam geometry plus the power -> photon-flux bridge c_I.
//
// When power_to_intensity is not supplied it is derived from the focal spot:
// a power P [uW] spread over the waist area pi*w^2 carries
// P / (E_photon * pi * w^2) photons/s/cm^2, with E_photon = h*c/lambda.
struct ExcitationContext {
    double wavelength_nm = 488.0;
    double waist_nm = 220.0;
    // c_I [photons/s/cm^2 per uW]; <= 0 means "derive from wavelength/waist".
    double power_to_intensity = 0.0;

    // The active conversion factor c_I.
    double conversion() const;

    // x in `from` units -> same physical quantity in `to` units.
    double convert(double x, IntensityUnit from, IntensityUnit to) const;

    double to_photon_flux(double x, IntensityUnit from) const {
        return convert(x, from, IntensityUnit::PhotonFlux);
    }
    double to_microwatt(double x, IntensityUnit from) const {
        return convert(x, from, IntensityUnit::MicrowattAtFocus);
    }

    void validate() const;
};

// Photon energy h*c/lambda in joules.
double photon_energy_J(double wavelength_nm);

// c_I for a given wavelength/waist pair (the default-formula bridge).
double default_power_to_intensity(double wavelength_nm, double waist_nm);

}  // namespace nanofcs
