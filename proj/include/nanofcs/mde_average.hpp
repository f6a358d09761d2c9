#pragma once

#include <cstddef>
#include <vector>

namespace nanofcs {

// Profile averages over the product-Gaussian detection volume.
//
// With relative intensity v(r) = exp(-2q), q = (x^2+y^2)/w^2 + z^2 s^2 / w^2,
// the level sets are ellipsoids and the volume element reduces to
// dV = c * sqrt(q) dq, so any profile integral of a function of the local
// intensity becomes one-dimensional:
//   integral f(v(r)) dV = c * integral_0^inf sqrt(q) f(exp(-2q)) dq.
// The constant c cancels in every ratio used here.
class GaussianProfile {
  public:
    static const GaussianProfile& instance();

    // integral_0^inf sqrt(q) f(exp(-2q)) dq
    template <class F>
    double integrate(F&& f) const {
        double acc = 0.0;
        for (std::size_t i = 0; i < v_.size(); ++i) acc += w_[i] * f(v_[i]);
        return acc;
    }

    std::size_t size() const { return v_.size(); }

  private:
    GaussianProfile();
    std::vector<double> v_;  // exp(-2 q_i)
    std::vector<double> w_;  // quadrature weight including sqrt(q_i)
};

// Gauss-Legendre nodes/weights on [a, b].
void gauss_legendre(int n, double a, double b, std::vector<double>& nodes,
                    std::vector<double>& weights);

// Saturating three-level responses averaged over the Gaussian profile, as a
// function of the nominal (peak-referenced) intensity x. These are the
// forward models for observables estimated from correlation amplitudes, where
// each position contributes with weight proportional to its squared mean
// brightness:
//   brightness     B_avg(x)  = S2 / S1,              Sk = <B^k>
//   triplet frac   T_avg(x)  = n/(1+n), n = <B^2 nT> / <B^2>
//   triplet rate   R_avg(x)  = k_ph-free weighted mean of local rates,
//                              weights B^2 nT (the local component amplitudes)
// with B, T, nT, rate the uniform-illumination closed forms evaluated at the
// local intensity x*v.
struct MdeAveragedSeries {
    double alpha_F = 0.0;
    double alpha_T = 0.0;
    double alpha_invtau = 0.0;
    double I_s = 0.0;
    double k_ph = 0.0;

    double brightness(double x) const;
    double triplet_fraction(double x) const;
    double triplet_rate(double x) const;
};

// Linear-regime averaging factors (closed forms used as quadrature oracles):
// amplitude-referenced brightness picks up (1/2)^{3/2}, the squared-brightness
// weighted mean intensity picks up (2/3)^{3/2}.
inline constexpr double kLinearBrightnessFactor = 0.35355339059327379;   // 2^-1.5
inline constexpr double kLinearTripletFactor = 0.54433105395181736;      // (2/3)^1.5

}  // namespace nanofcs
