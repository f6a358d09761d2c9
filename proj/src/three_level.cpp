#include "nanofcs/three_level.hpp"

#include <Eigen/Dense>
#include <Eigen/Eigenvalues>
#include <cmath>

#include "nanofcs/errors.hpp"

namespace nanofcs {

namespace {

void require_intensity(double intensity) {
    if (!std::isfinite(intensity) || intensity < 0.0)
        throw physics_error("excitation intensity must be finite and >= 0");
}

}  // namespace

double saturation_intensity(const RateSet& rates) {
    rates.validate();
    return (rates.k_tot() / rates.sigma) / (1.0 + rates.k_isc / rates.k_ph);
}

ThreeLevelState steady_state(const RateSet& rates, double intensity) {
    rates.validate();
    require_intensity(intensity);
    if (intensity == 0.0) return {1.0, 0.0, 0.0};

    // Flux balance: sigma*I*p0 = k_tot*p1 and k_isc*p1 = k_ph*pT,
    // normalized to p0 + p1 + pT = 1.
    const double ke = rates.sigma * intensity;
    const double inv_p1 = rates.k_tot() / ke + 1.0 + rates.k_isc / rates.k_ph;
    ThreeLevelState s;
    s.p_s1 = 1.0 / inv_p1;
    s.p_t = s.p_s1 * rates.k_isc / rates.k_ph;
    s.p_s0 = 1.0 - s.p_s1 - s.p_t;
    return s;
}

double forward_brightness(const RateSet& rates, double intensity) {
    rates.validate();
    require_intensity(intensity);
    const double i_s = saturation_intensity(rates);
    return rates.kappa * rates.phi() * rates.sigma * intensity / (1.0 + intensity / i_s);
}

double triplet_fraction(const RateSet& rates, double intensity) {
    rates.validate();
    require_intensity(intensity);
    const double i_s = saturation_intensity(rates);
    const double alpha_t = rates.sigma * rates.k_isc / (rates.k_ph * rates.k_tot());
    return alpha_t * intensity / (1.0 + intensity / i_s);
}

double triplet_rate(const RateSet& rates, double intensity) {
    rates.validate();
    require_intensity(intensity);
    const double ke = rates.sigma * intensity;
    return rates.k_ph + ke * rates.k_isc / (ke + rates.k_rad + rates.k_nrad);
}

SaturationCoefficients forward_saturation(const RateSet& rates, const ExcitationContext& ctx,
                                          IntensityUnit unit) {
    rates.validate();
    SaturationCoefficients c;
    c.unit = IntensityUnit::PhotonFlux;
    c.alpha_F = rates.kappa * rates.phi() * rates.sigma;
    c.alpha_T = rates.sigma * rates.k_isc / (rates.k_ph * rates.k_tot());
    c.alpha_invtau = rates.sigma * rates.k_isc / (rates.k_rad + rates.k_nrad);
    c.I_s = saturation_intensity(rates);
    return c.in_unit(unit, ctx);
}

TripletEigenrates exact_triplet_eigenrate(const RateSet& rates, double intensity) {
    rates.validate();
    require_intensity(intensity);

    const double ke = rates.sigma * intensity;
    const double k10 = rates.k_rad + rates.k_nrad;

    Eigen::Matrix3d m;
    // d/dt (p0, p1, pT); columns are source states.
    m << -ke, k10, rates.k_ph,
         ke, -(k10 + rates.k_isc), 0.0,
         0.0, rates.k_isc, -rates.k_ph;

    const Eigen::EigenSolver<Eigen::Matrix3d> solver(m);
    const auto evals = solver.eigenvalues();

    // One eigenvalue is 0 (probability conservation); drop the smallest
    // magnitude and keep the relaxation pair.
    int zero_idx = 0;
    for (int i = 1; i < 3; ++i)
        if (std::abs(evals[i]) < std::abs(evals[zero_idx])) zero_idx = i;

    double r[2];
    bool complex_pair = false;
    int n = 0;
    for (int i = 0; i < 3; ++i) {
        if (i == zero_idx) continue;
        if (std::abs(evals[i].imag()) > 1e-9 * std::abs(evals[i])) complex_pair = true;
        r[n++] = -evals[i].real();
    }

    TripletEigenrates out;
    if (complex_pair) {
        // Underdamped pair: equal envelope decay rates.
        out.slow = out.fast = 0.5 * (r[0] + r[1]);
        out.degenerate = true;
        return out;
    }
    out.slow = std::min(r[0], r[1]);
    out.fast = std::max(r[0], r[1]);
    out.degenerate = (out.fast - out.slow) <= 1e-9 * out.fast;
    return out;
}

}  // namespace nanofcs
