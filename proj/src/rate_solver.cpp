#include "nanofcs/rate_solver.hpp"

#include <algorithm>
#include <cmath>

#include "nanofcs/errors.hpp"
#include "nanofcs/rng.hpp"

namespace nanofcs {

namespace {

void require_nonneg_sigma(const ValueWithError& v, const char* name) {
    if (v.sigma < 0.0 || !std::isfinite(v.sigma))
        throw physics_error(std::string(name) + " uncertainty must be >= 0 and finite");
    if (!std::isfinite(v.value))
        throw physics_error(std::string(name) + " must be finite");
}

}  // namespace

void MeasuredInputs::validate() const {
    context.validate();
    require_nonneg_sigma(alpha_F, "alpha_F");
    require_nonneg_sigma(alpha_T, "alpha_T");
    require_nonneg_sigma(alpha_invtau, "alpha_invtau");
    require_nonneg_sigma(I_s, "I_s");
    require_nonneg_sigma(k_tot, "k_tot");
    require_nonneg_sigma(kappa, "kappa");
    if (!(alpha_F.value > 0.0) || !(alpha_T.value > 0.0) || !(alpha_invtau.value > 0.0) ||
        !(I_s.value > 0.0) || !(k_tot.value > 0.0) || !(kappa.value > 0.0))
        throw physics_error("MeasuredInputs central values must be strictly positive");
    const double sat = alpha_T.value * I_s_on_coeff_axis();
    if (!(sat < 1.0))
        throw physics_error(
            "saturation inconsistency: alpha_T * I_s >= 1 at central values");
}

double MeasuredInputs::I_s_on_coeff_axis() const {
    return context.convert(I_s.value, I_s_unit, coeff_unit);
}

double MeasuredInputs::I_s_photon_flux() const {
    return context.convert(I_s.value, I_s_unit, IntensityUnit::PhotonFlux);
}

bool SolvedRates::flagged(const std::string& prefix) const {
    return std::any_of(flags.begin(), flags.end(), [&](const std::string& f) {
        return f.rfind(prefix, 0) == 0;
    });
}

namespace {

struct RawInputs {
    double alpha_F, alpha_T, alpha_invtau, I_s_axis, I_s_flux, k_tot, kappa;
};

bool invert_raw(const RawInputs& in, RateSet& out, double& phi,
                std::vector<std::string>* flags) {
    const double sat = in.alpha_T * in.I_s_axis;
    if (!(sat < 1.0)) return false;
    const double one_minus = 1.0 - sat;
    out.sigma = in.k_tot * one_minus / in.I_s_flux;
    out.k_rad = (in.alpha_F / in.kappa) * in.I_s_axis / one_minus;
    out.k_isc = in.alpha_invtau * in.I_s_axis / one_minus;
    out.k_ph = in.alpha_invtau / in.alpha_T;
    out.k_nrad = in.k_tot - out.k_rad - out.k_isc;
    out.kappa = in.kappa;
    phi = out.k_rad / in.k_tot;
    if (out.k_nrad < 0.0 && flags)
        flags->push_back("unphysical: k_rad + k_isc > k_tot");
    return true;
}

RawInputs central_raw(const MeasuredInputs& m) {
    return {m.alpha_F.value, m.alpha_T.value,      m.alpha_invtau.value,
            m.I_s_on_coeff_axis(), m.I_s_photon_flux(), m.k_tot.value,
            m.kappa.value};
}

}  // namespace

SolvedRates invert(const MeasuredInputs& m) {
    m.validate();
    SolvedRates out;
    if (!invert_raw(central_raw(m), out.central, out.phi, &out.flags))
        throw physics_error("saturation inconsistency: alpha_T * I_s >= 1");
    return out;
}

RateUncertainty linearized_uncertainty(const MeasuredInputs& m) {
    m.validate();
    // Central differences of the inversion with respect to the six inputs.
    const double* sigmas[6] = {&m.alpha_F.sigma,      &m.alpha_T.sigma, &m.alpha_invtau.sigma,
                               &m.I_s.sigma,          &m.k_tot.sigma,   &m.kappa.sigma};
    RateUncertainty acc;
    for (int i = 0; i < 6; ++i) {
        if (*sigmas[i] == 0.0) continue;
        MeasuredInputs hi = m, lo = m;
        ValueWithError* hv[6] = {&hi.alpha_F, &hi.alpha_T, &hi.alpha_invtau,
                                 &hi.I_s,     &hi.k_tot,   &hi.kappa};
        ValueWithError* lv[6] = {&lo.alpha_F, &lo.alpha_T, &lo.alpha_invtau,
                                 &lo.I_s,     &lo.k_tot,   &lo.kappa};
        const double h = 1e-6 * hv[i]->value;
        hv[i]->value += h;
        lv[i]->value -= h;
        RateSet rh, rl;
        double ph, pl;
        if (!invert_raw(central_raw(hi), rh, ph, nullptr) ||
            !invert_raw(central_raw(lo), rl, pl, nullptr))
            throw physics_error("linearized propagation stepped outside the validity region");
        const double scale = *sigmas[i] / (2.0 * h);
        acc.sigma += std::pow((rh.sigma - rl.sigma) * scale, 2);
        acc.k_rad += std::pow((rh.k_rad - rl.k_rad) * scale, 2);
        acc.k_nrad += std::pow((rh.k_nrad - rl.k_nrad) * scale, 2);
        acc.k_isc += std::pow((rh.k_isc - rl.k_isc) * scale, 2);
        acc.k_ph += std::pow((rh.k_ph - rl.k_ph) * scale, 2);
        acc.phi += std::pow((ph - pl) * scale, 2);
    }
    acc.sigma = std::sqrt(acc.sigma);
    acc.k_rad = std::sqrt(acc.k_rad);
    acc.k_nrad = std::sqrt(acc.k_nrad);
    acc.k_isc = std::sqrt(acc.k_isc);
    acc.k_ph = std::sqrt(acc.k_ph);
    acc.phi = std::sqrt(acc.phi);
    return acc;
}

SolvedRates propagate_uncertainty(const MeasuredInputs& m, int n_draws, uint64_t seed) {
    m.validate();
    if (n_draws < 1000) throw config_error("propagate_uncertainty requires n_draws >= 1000");

    SolvedRates out = invert(m);

    const double ci = m.context.conversion();
    const bool is_on_coeff_axis = (m.I_s_unit == m.coeff_unit);
    const double axis_to_flux =
        (m.coeff_unit == IntensityUnit::PhotonFlux) ? 1.0 : ci;

    long accepted = 0, rejected = 0;
    // Accumulate mean/M2 per output (Welford) over accepted draws.
    constexpr int kOut = 6;
    double mean[kOut] = {0}, m2[kOut] = {0};

    for (int d = 0; d < n_draws; ++d) {
        Philox2x64 rng(seed, static_cast<uint64_t>(d));
        auto gauss = [&rng]() {
            // Box-Muller on two counter-based uniforms.
            double u1;
            do { u1 = rng.next_double(); } while (u1 == 0.0);
            const double u2 = rng.next_double();
            return std::sqrt(-2.0 * std::log(u1)) * std::cos(6.283185307179586 * u2);
        };
        RawInputs in;
        in.alpha_F = m.alpha_F.value + m.alpha_F.sigma * gauss();
        in.alpha_T = m.alpha_T.value + m.alpha_T.sigma * gauss();
        in.alpha_invtau = m.alpha_invtau.value + m.alpha_invtau.sigma * gauss();
        const double i_s = m.I_s.value + m.I_s.sigma * gauss();
        in.k_tot = m.k_tot.value + m.k_tot.sigma * gauss();
        in.kappa = m.kappa.value + m.kappa.sigma * gauss();
        in.I_s_axis = is_on_coeff_axis ? i_s : m.context.convert(i_s, m.I_s_unit, m.coeff_unit);
        in.I_s_flux = in.I_s_axis * axis_to_flux;

        const bool positive = in.alpha_F > 0 && in.alpha_T > 0 && in.alpha_invtau > 0 &&
                              in.I_s_axis > 0 && in.k_tot > 0 && in.kappa > 0;
        RateSet r;
        double phi = 0.0;
        if (!positive || !invert_raw(in, r, phi, nullptr)) {
            ++rejected;
            continue;
        }
        ++accepted;
        const double vals[kOut] = {r.sigma, r.k_rad, r.k_nrad, r.k_isc, r.k_ph, phi};
        for (int j = 0; j < kOut; ++j) {
            const double delta = vals[j] - mean[j];
            mean[j] += delta / static_cast<double>(accepted);
            m2[j] += delta * (vals[j] - mean[j]);
        }
    }

    if (rejected * 2 > n_draws)
        throw physics_error("input uncertainties inconsistent with model: >50% of draws invalid");

    const double denom = std::max<long>(accepted - 1, 1);
    out.err.sigma = std::sqrt(m2[0] / denom);
    out.err.k_rad = std::sqrt(m2[1] / denom);
    out.err.k_nrad = std::sqrt(m2[2] / denom);
    out.err.k_isc = std::sqrt(m2[3] / denom);
    out.err.k_ph = std::sqrt(m2[4] / denom);
    out.err.phi = std::sqrt(m2[5] / denom);

    // Cross-check against the linearized propagation.
    const RateUncertainty lin = linearized_uncertainty(m);
    struct Pair {
        const char* name;
        double mc, lin;
    };
    const Pair pairs[] = {{"sigma", out.err.sigma, lin.sigma},
                          {"k_rad", out.err.k_rad, lin.k_rad},
                          {"k_nrad", out.err.k_nrad, lin.k_nrad},
                          {"k_isc", out.err.k_isc, lin.k_isc},
                          {"k_ph", out.err.k_ph, lin.k_ph},
                          {"phi", out.err.phi, lin.phi}};
    for (const auto& p : pairs) {
        if (p.mc <= 0.0 && p.lin <= 0.0) continue;
        const double ref = std::max(p.mc, p.lin);
        if (std::abs(p.mc - p.lin) > 0.3 * ref)
            out.flags.push_back(std::string("nonlinearity: ") + p.name);
    }
    return out;
}

double calibrate_kappa(double phi_reference, const MeasuredInputs& m) {
    if (!(phi_reference > 0.0) || phi_reference > 1.0)
        throw physics_error("reference quantum yield must lie in (0, 1]");
    // kappa uses only the saturation coefficients and k_tot; whatever kappa
    // is stored in m is ignored.
    const double i_s_axis = m.I_s_on_coeff_axis();
    const double sat = m.alpha_T.value * i_s_axis;
    if (!(sat < 1.0)) throw physics_error("saturation inconsistency: alpha_T * I_s >= 1");
    return m.alpha_F.value * i_s_axis / ((1.0 - sat) * phi_reference * m.k_tot.value);
}

namespace {

ValueWithError ratio(const ValueWithError& num, const ValueWithError& den, const char* what) {
    if (den.value == 0.0) throw physics_error(std::string("enhancement: division by zero in ") + what);
    ValueWithError r;
    r.value = num.value / den.value;
    const double rel2 = std::pow(num.sigma / num.value, 2) + std::pow(den.sigma / den.value, 2);
    r.sigma = std::abs(r.value) * std::sqrt(rel2);
    return r;
}

ValueWithError vw(double value, double sigma) { return {value, sigma}; }

}  // namespace

EnhancementReport enhancement(const SolvedColumn& solution, const SolvedColumn& aperture) {
    const auto& s = solution;
    const auto& a = aperture;
    if (s.inputs.coeff_unit != a.inputs.coeff_unit)
        throw physics_error("enhancement: columns use different coefficient units");
    if (std::abs(s.inputs.context.conversion() - a.inputs.context.conversion()) >
        1e-9 * s.inputs.context.conversion())
        throw physics_error("enhancement: columns were solved with different contexts");
    if (s.rates.flagged("unphysical") || a.rates.flagged("unphysical"))
        throw physics_error("enhancement: refusing to take ratios of flagged rates");

    EnhancementReport r;
    r.eta_F = ratio(a.inputs.alpha_F, s.inputs.alpha_F, "alpha_F");
    r.alpha_T_ratio = ratio(a.inputs.alpha_T, s.inputs.alpha_T, "alpha_T");
    r.alpha_invtau_ratio = ratio(a.inputs.alpha_invtau, s.inputs.alpha_invtau, "alpha_invtau");
    r.I_s_ratio = ratio(a.inputs.I_s, s.inputs.I_s, "I_s");
    r.eta_kappa = ratio(a.inputs.kappa, s.inputs.kappa, "kappa");
    r.eta_phi = ratio(vw(a.rates.phi, a.rates.err.phi), vw(s.rates.phi, s.rates.err.phi), "phi");
    r.eta_sigma_ie = ratio(vw(a.rates.central.sigma, a.rates.err.sigma),
                           vw(s.rates.central.sigma, s.rates.err.sigma), "sigma");
    r.k_tot_ratio = ratio(a.inputs.k_tot, s.inputs.k_tot, "k_tot");
    r.k_rad_ratio = ratio(vw(a.rates.central.k_rad, a.rates.err.k_rad),
                          vw(s.rates.central.k_rad, s.rates.err.k_rad), "k_rad");
    r.k_nrad_ratio = ratio(vw(a.rates.central.k_nrad, a.rates.err.k_nrad),
                           vw(s.rates.central.k_nrad, s.rates.err.k_nrad), "k_nrad");
    r.k_isc_ratio = ratio(vw(a.rates.central.k_isc, a.rates.err.k_isc),
                          vw(s.rates.central.k_isc, s.rates.err.k_isc), "k_isc");
    r.k_ph_ratio = ratio(vw(a.rates.central.k_ph, a.rates.err.k_ph),
                         vw(s.rates.central.k_ph, s.rates.err.k_ph), "k_ph");

    r.product.value = r.eta_kappa.value * r.eta_phi.value * r.eta_sigma_ie.value;
    const double rel2 = std::pow(r.eta_kappa.sigma / r.eta_kappa.value, 2) +
                        std::pow(r.eta_phi.sigma / std::max(r.eta_phi.value, 1e-300), 2) +
                        std::pow(r.eta_sigma_ie.sigma / std::max(r.eta_sigma_ie.value, 1e-300), 2);
    r.product.sigma = r.product.value * std::sqrt(rel2);
    return r;
}

}  // namespace nanofcs
