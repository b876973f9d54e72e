#pragma once

#include <array>
#include <functional>
#include <string>

#include "nlslab/grid.hpp"

namespace nlslab {

// Parameters of eta(x) = e^{i theta} e^{i v (x-a)/mu} mu sech(mu (x-a)).
struct SolitonParams {
    double mu = 1.0;
    double a = 0.0;
    double theta = 0.0;  // stored unwrapped
    double v = 0.0;
};

// Two-soliton coordinates in the order (mu1, a1, mu2, a2, theta1, v1, theta2, v2).
// Left-soliton indices {0,1,4,5}, right {2,3,6,7}.
struct ZCoords {
    std::array<double, 8> z{1.0, 0.0, 1.0, 0.0, 0.0, 0.0, 0.0, 0.0};

    double& operator[](int i) { return z[i]; }
    double operator[](int i) const { return z[i]; }

    double mu1() const { return z[0]; }
    double a1() const { return z[1]; }
    double mu2() const { return z[2]; }
    double a2() const { return z[3]; }
    double theta1() const { return z[4]; }
    double v1() const { return z[5]; }
    double theta2() const { return z[6]; }
    double v2() const { return z[7]; }

    SolitonParams left() const { return {mu1(), a1(), theta1(), v1()}; }
    SolitonParams right() const { return {mu2(), a2(), theta2(), v2()}; }
    double separation() const { return z[3] - z[1]; }

    // Exchange the two solitons (coordinates 1 <-> 2).
    ZCoords swapped() const;
};

// Even/odd reduced state: z = (mu, -a, mu, a, theta + sigma*pi, -v, theta, v).
struct SymmetricState {
    double mu = 1.0;
    double a = 0.0;
    double theta = 0.0;
    double v = 0.0;
    int sigma = 0;          // 0 same phase (even), 1 opposite phase (odd)
    double h = 0.0;         // e^{-a0} for the initial half-separation a0

    static SymmetricState initial(double a0, int sigma);
};

ZCoords embed_symmetric(const SymmetricState& s);
// Reduce a (near-)symmetric z; sigma is recovered from theta1 - theta2.
SymmetricState symmetric_part(const ZCoords& z);
// Embed reduced velocities (mu', a', theta', v') as an 8-vector z'.
std::array<double, 8> embed_symmetric_velocity(const std::array<double, 4>& sdot);

std::string to_json_string(const SolitonParams& p);
std::string to_json_string(const ZCoords& z);
SolitonParams soliton_params_from_json(const std::string& text);
ZCoords zcoords_from_json(const std::string& text);

Complex eval_soliton_at(const SolitonParams& p, double x);
Field eval_soliton(const SolitonParams& p, const Grid& g);

// Exact solution of the free single-soliton flow:
// a(t) = a0 + t v0/mu0, theta(t) = theta0 + t (mu0^2 + v0^2/mu0^2)/2.
SolitonParams free_flow(const SolitonParams& p0, double t);

// Closed-form parameter derivatives (d_mu, d_a, d_theta, d_v) eta.
std::array<Complex, 4> tangent_frame_at(const SolitonParams& p, double x);
std::array<Field, 4> tangent_frame(const SolitonParams& p, const Grid& g);

Field two_soliton(const ZCoords& z, const Grid& g);
std::array<Field, 8> two_soliton_tangent(const ZCoords& z, const Grid& g);

// Case 0/1 initial data: eta(x,1,-a0,sigma*pi,0) + eta(x,1,a0,0,0).
// Rejects a0 < 3 (separation too small for the widely-separated regime).
Field case_initial_data(double a0, int sigma, const Grid& g);

// --- group action -----------------------------------------------------------
// (g rho)(x) = e^{i theta} e^{i v (x-a)/mu} mu rho(mu (x-a)), with inverse
// g^{-1} rho(x) = e^{-i theta} e^{-i v x/mu^2} rho(x/mu + a)/mu and adjoint
// g* = mu g^{-1}.

// Analytic profiles: arbitrary complex functions of x, composed exactly.
using Profile = std::function<Complex(double)>;

Profile group_apply(const SolitonParams& p, Profile rho);
Profile group_inverse(const SolitonParams& p, Profile rho);
Profile group_adjoint(const SolitonParams& p, Profile rho);
Field sample(const Profile& f, const Grid& g);
Profile sech_profile();

// Trigonometric interpolation of a sampled field, for evaluating g on
// general (non-analytic) fields. Evaluation is O(n) per point.
class FourierInterpolant {
  public:
    explicit FourierInterpolant(const Field& u);
    Complex operator()(double x) const;
    const Grid& grid() const { return grid_; }

  private:
    Grid grid_;
    std::vector<Complex> coef_;  // forward DFT / n
};

// Band-limited resampling; throws when the dilated/modulated content exceeds
// the target grid bandwidth.
Field group_apply(const SolitonParams& p, const Field& rho, const Grid& target);
Field group_inverse(const SolitonParams& p, const Field& rho, const Grid& target);
Field group_adjoint(const SolitonParams& p, const Field& rho, const Grid& target);

}  // namespace nlslab
