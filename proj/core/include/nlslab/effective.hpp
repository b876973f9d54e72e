#pragma once

#include <array>
#include <functional>
#include <span>
#include <string>
#include <vector>

#include "nlslab/soliton.hpp"

namespace nlslab {

struct EffectiveState {
    double mu = 1.0;
    double a = 0.0;
    double theta = 0.0;
    double v = 0.0;
    int sigma = 0;
};

// Theorem system: mu' = (-1)^s (8a-4) v e^{-2a}, a' = v,
// theta' = mu^2/2 + v^2/(2 mu^2) + 18 (-1)^s e^{-2a}, v' = -4 (-1)^s e^{-2a}.
std::array<double, 4> rhs_theorem(const EffectiveState& s);

// Same system with the next-order a' term: a' = v/mu + (-1)^s (-4a + 2pi^2/3) v e^{-2a}.
std::array<double, 4> rhs_reduced(const EffectiveState& s);

enum class TailMode { quadrature, asymptotic };

// alpha(xi,a) = \int e^{-i x xi} phi^3(x-a) phi(x+a) dx and its expansion
// e^{-2a} [4 + (2-4a) i xi + (-pi^2/6 + 2a - 2a^2) xi^2].
Complex tail_alpha(double xi, double a, TailMode mode);
// beta(xi,a) = \int e^{-i x xi} (phi^3)'(x-a) phi(x+a) dx ~ e^{-2a} [4 + (6-4a) i xi].
Complex tail_beta(double xi, double a, TailMode mode);
Complex tail_alpha_xi(double xi, double a, TailMode mode);  // d alpha / d xi
Complex tail_beta_xi(double xi, double a, TailMode mode);

// The symmetric reduced system written in terms of alpha and beta at xi = -2v
// (the form the final substitution starts from).
std::array<double, 4> rhs_tail(const EffectiveState& s, TailMode mode);

// Closed forms for (a, v) started from (a0, 0):
// sigma = 0: a = a0 - log sec(2ht), v = -2h tan(2ht)   (valid while 2ht < pi/2)
// sigma = 1: a = a0 + log cosh(2ht), v = 2h tanh(2ht)
// The sign of v in the sigma = 0 branch is chosen so that a' = v.
std::pair<double, double> closed_form(double a0, int sigma, double t);

double effective_energy(const EffectiveState& s);  // v^2 - 4 (-1)^s e^{-2a}

// <H_p'(eta_2), eta_1> = -Re \int |eta_2|^2 eta_2 conj(eta_1), adaptive quadrature.
double interaction_integral(const ZCoords& z);
// Same quantity as a grid inner product <-|eta_2|^2 eta_2, eta_1> (oracle route).
double interaction_integral_grid(const ZCoords& z, const Grid& g);
// Central finite differences of interaction_integral in all 8 coordinates.
std::array<double, 8> interaction_gradient(const ZCoords& z);

// The full eight-dimensional system with quadrature-evaluated interaction terms.
std::array<double, 8> rhs_general(const ZCoords& z);

struct OdeMeta {
    double dt = 0.0;
    int sample_stride = 1;
    bool aborted = false;
    double t_last = 0.0;
};

struct OdeTrajectory {
    std::vector<double> times;
    std::vector<std::vector<double>> states;
    OdeMeta meta;

    const std::vector<double>& back() const { return states.back(); }
};

using OdeRhs = std::function<void(double t, std::span<const double> y, std::span<double> dy)>;

// Classical fixed-step RK4; samples every `sample_stride` steps (and the
// endpoints). Non-finite states abort the run, keeping the last valid sample.
OdeTrajectory integrate_ode(const OdeRhs& rhs, std::span<const double> y0, double t_end,
                            double dt, int sample_stride = 1);

OdeRhs make_rhs(const std::string& variant, int sigma);  // "theorem" | "reduced" | "general"

std::string trajectory_csv(const OdeTrajectory& traj, bool general);

}  // namespace nlslab
