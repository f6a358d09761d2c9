#include "nanofcs/mde_average.hpp"

#include <cmath>
#include <numbers>

#include "nanofcs/errors.hpp"

namespace nanofcs {

void gauss_legendre(int n, double a, double b, std::vector<double>& nodes,
                    std::vector<double>& weights) {
    nodes.resize(n);
    weights.resize(n);
    const int m = (n + 1) / 2;
    const double xm = 0.5 * (b + a);
    const double xl = 0.5 * (b - a);
    for (int i = 0; i < m; ++i) {
        // Newton on P_n with Chebyshev initial guess.
        double z = std::cos(std::numbers::pi * (i + 0.75) / (n + 0.5));
        double pp = 0.0;
        for (int iter = 0; iter < 100; ++iter) {
            double p0 = 1.0, p1 = 0.0;
            for (int j = 0; j < n; ++j) {
                const double p2 = p1;
                p1 = p0;
                p0 = ((2.0 * j + 1.0) * z * p1 - j * p2) / (j + 1.0);
            }
            pp = n * (z * p0 - p1) / (z * z - 1.0);
            const double dz = p0 / pp;
            z -= dz;
            if (std::abs(dz) < 1e-15) break;
        }
        nodes[i] = xm - xl * z;
        nodes[n - 1 - i] = xm + xl * z;
        weights[i] = 2.0 * xl / ((1.0 - z * z) * pp * pp);
        weights[n - 1 - i] = weights[i];
    }
}

const GaussianProfile& GaussianProfile::instance() {
    static const GaussianProfile profile;
    return profile;
}

GaussianProfile::GaussianProfile() {
    std::vector<double> nodes, weights;

    // [0,1] with q = t^2 to absorb the sqrt singularity in slope.
    gauss_legendre(32, 0.0, 1.0, nodes, weights);
    for (std::size_t i = 0; i < nodes.size(); ++i) {
        const double t = nodes[i];
        const double q = t * t;
        v_.push_back(std::exp(-2.0 * q));
        w_.push_back(weights[i] * 2.0 * t * t);
    }

    // Tail panels; the integrand decays like exp(-2q) or faster.
    const double edges[] = {1.0, 4.0, 10.0, 22.0, 45.0};
    for (int p = 0; p < 4; ++p) {
        gauss_legendre(32, edges[p], edges[p + 1], nodes, weights);
        for (std::size_t i = 0; i < nodes.size(); ++i) {
            v_.push_back(std::exp(-2.0 * nodes[i]));
            w_.push_back(weights[i] * std::sqrt(nodes[i]));
        }
    }
}

namespace {

inline double saturating(double amplitude, double u, double i_s) {
    return amplitude * u / (1.0 + u / i_s);
}

}  // namespace

double MdeAveragedSeries::brightness(double x) const {
    if (!(x > 0.0)) return 0.0;
    const auto& g = GaussianProfile::instance();
    const double s1 = g.integrate([&](double v) { return saturating(alpha_F, x * v, I_s); });
    const double s2 = g.integrate([&](double v) {
        const double b = saturating(alpha_F, x * v, I_s);
        return b * b;
    });
    return s2 / s1;
}

double MdeAveragedSeries::triplet_fraction(double x) const {
    if (!(x > 0.0)) return 0.0;
    const auto& g = GaussianProfile::instance();
    const double w2 = g.integrate([&](double v) {
        const double b = saturating(alpha_F, x * v, I_s);
        return b * b;
    });
    const double wn = g.integrate([&](double v) {
        const double b = saturating(alpha_F, x * v, I_s);
        const double t = saturating(alpha_T, x * v, I_s);
        return b * b * t / (1.0 - t);
    });
    const double n = wn / w2;
    return n / (1.0 + n);
}

double MdeAveragedSeries::triplet_rate(double x) const {
    if (!(x > 0.0)) return k_ph;
    const auto& g = GaussianProfile::instance();
    const double wn = g.integrate([&](double v) {
        const double b = saturating(alpha_F, x * v, I_s);
        const double t = saturating(alpha_T, x * v, I_s);
        return b * b * t / (1.0 - t);
    });
    const double wnr = g.integrate([&](double v) {
        const double b = saturating(alpha_F, x * v, I_s);
        const double t = saturating(alpha_T, x * v, I_s);
        const double rate = k_ph + saturating(alpha_invtau, x * v, I_s);
        return b * b * t / (1.0 - t) * rate;
    });
    if (!(wn > 0.0)) throw physics_error("triplet amplitude vanished in profile average");
    return wnr / wn;
}

}  // namespace nanofcs
