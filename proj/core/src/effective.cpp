#include "nlslab/effective.hpp"

#include <cmath>
#include <numbers>
#include <sstream>
#include <stdexcept>

#include "nlslab/errors.hpp"
#include "nlslab/field_io.hpp"
#include "nlslab/quadrature.hpp"
#include "nlslab/spectral.hpp"

namespace nlslab {

namespace {

constexpr double pi = std::numbers::pi;

double sign_of(int sigma) { return sigma == 0 ? 1.0 : -1.0; }  // (-1)^sigma

double sech(double x) { return 1.0 / std::cosh(x); }

}  // namespace

std::array<double, 4> rhs_theorem(const EffectiveState& s) {
    const double sg = sign_of(s.sigma);
    const double e2a = std::exp(-2.0 * s.a);
    return {sg * (8.0 * s.a - 4.0) * s.v * e2a, s.v,
            0.5 * s.mu * s.mu + 0.5 * s.v * s.v / (s.mu * s.mu) + 18.0 * sg * e2a,
            -4.0 * sg * e2a};
}

std::array<double, 4> rhs_reduced(const EffectiveState& s) {
    auto d = rhs_theorem(s);
    const double sg = sign_of(s.sigma);
    const double e2a = std::exp(-2.0 * s.a);
    d[1] = s.v / s.mu + sg * (-4.0 * s.a + 2.0 * pi * pi / 3.0) * s.v * e2a;
    return d;
}

Complex tail_alpha(double xi, double a, TailMode mode) {
    if (mode == TailMode::asymptotic) {
        if (a < 2.0) throw std::invalid_argument("tail_alpha: asymptotic mode needs a >= 2");
        if (std::abs(xi) > 0.5)
            throw std::invalid_argument("tail_alpha: asymptotic mode needs |xi| <= 0.5");
        const double e2a = std::exp(-2.0 * a);
        return e2a * Complex(4.0 + (-pi * pi / 6.0 + 2.0 * a - 2.0 * a * a) * xi * xi,
                             (2.0 - 4.0 * a) * xi);
    }
    auto f = [xi, a](double x) {
        const double p = sech(x - a);
        return std::polar(p * p * p * sech(x + a), -x * xi);
    };
    return integrate(f, -a - 40.0, a + 40.0);
}

Complex tail_beta(double xi, double a, TailMode mode) {
    if (mode == TailMode::asymptotic) {
        if (a < 2.0) throw std::invalid_argument("tail_beta: asymptotic mode needs a >= 2");
        if (std::abs(xi) > 0.5)
            throw std::invalid_argument("tail_beta: asymptotic mode needs |xi| <= 0.5");
        const double e2a = std::exp(-2.0 * a);
        return e2a * Complex(4.0, (6.0 - 4.0 * a) * xi);
    }
    auto f = [xi, a](double x) {
        const double s = sech(x - a);
        const double d3 = -3.0 * s * s * s * std::tanh(x - a);  // (phi^3)'
        return std::polar(1.0, -x * xi) * (d3 * sech(x + a));
    };
    return integrate(f, -a - 40.0, a + 40.0);
}

Complex tail_alpha_xi(double xi, double a, TailMode mode) {
    if (mode == TailMode::asymptotic) {
        const double e2a = std::exp(-2.0 * a);
        return e2a * Complex(2.0 * (-pi * pi / 6.0 + 2.0 * a - 2.0 * a * a) * xi, 2.0 - 4.0 * a);
    }
    auto f = [xi, a](double x) {
        const double p = sech(x - a);
        return Complex(0.0, -x) * std::polar(p * p * p * sech(x + a), -x * xi);
    };
    return integrate(f, -a - 40.0, a + 40.0);
}

Complex tail_beta_xi(double xi, double a, TailMode mode) {
    if (mode == TailMode::asymptotic) {
        const double e2a = std::exp(-2.0 * a);
        return e2a * Complex(0.0, 6.0 - 4.0 * a);
    }
    auto f = [xi, a](double x) {
        const double s = sech(x - a);
        const double d3 = -3.0 * s * s * s * std::tanh(x - a);
        return Complex(0.0, -x) * std::polar(1.0, -x * xi) * (d3 * sech(x + a));
    };
    return integrate(f, -a - 40.0, a + 40.0);
}

std::array<double, 4> rhs_tail(const EffectiveState& s, TailMode mode) {
    const double sg = sign_of(s.sigma);
    const double xi = -2.0 * s.v;
    const Complex al = tail_alpha(xi, s.a, mode);
    const Complex al_xi = tail_alpha_xi(xi, s.a, mode);
    const Complex be = tail_beta(xi, s.a, mode);
    const Complex be_xi = tail_beta_xi(xi, s.a, mode);
    const Complex I(0.0, 1.0);

    const double mu_dot = sg * std::real(-I * al);
    const double a_dot = s.v / s.mu + sg * std::real(I * s.a * al + al_xi);
    const double theta_dot = 0.5 * s.mu * s.mu + 0.5 * s.v * s.v / (s.mu * s.mu) +
                             sg * (std::real((I * s.v * s.a + 3.0) * al + s.v * al_xi) +
                                   std::real(s.a * be - I * be_xi));
    const double v_dot = sg * std::real(-I * s.v * al - be);
    return {mu_dot, a_dot, theta_dot, v_dot};
}

std::pair<double, double> closed_form(double a0, int sigma, double t) {
    const double h = std::exp(-a0);
    const double ph = 2.0 * h * t;
    if (sigma == 0) {
        if (ph >= 0.5 * pi) throw CollisionTimeError("collision time exceeded (2ht >= pi/2)");
        return {a0 + std::log(std::cos(ph)), -2.0 * h * std::tan(ph)};
    }
    if (sigma != 1) throw std::invalid_argument("sigma must be 0 or 1");
    // log cosh without overflow for large arguments
    const double lc = std::abs(ph) + std::log1p(std::exp(-2.0 * std::abs(ph))) - std::log(2.0);
    return {a0 + lc, 2.0 * h * std::tanh(ph)};
}

double effective_energy(const EffectiveState& s) {
    return s.v * s.v - 4.0 * sign_of(s.sigma) * std::exp(-2.0 * s.a);
}

namespace {

double interaction_integral_j(const ZCoords& z, int j) {
    // <H_p'(eta_j), eta_{3-j}> with H_p'(u) = -|u|^2 u
    const SolitonParams pj = (j == 2) ? z.right() : z.left();
    const SolitonParams pk = (j == 2) ? z.left() : z.right();
    if (std::abs(z.a2() - z.a1()) < 2.0)
        throw std::invalid_argument("interaction integral: solitons overlap (|a2-a1| < 2)");
    const double lo = std::min(pj.a, pk.a) - 40.0;
    const double hi = std::max(pj.a, pk.a) + 40.0;
    auto f = [&pj, &pk](double x) {
        const Complex ej = eval_soliton_at(pj, x);
        const Complex ek = eval_soliton_at(pk, x);
        return std::norm(ej) * ej * std::conj(ek);
    };
    return -integrate(f, lo, hi).real();
}

}  // namespace

double interaction_integral(const ZCoords& z) { return interaction_integral_j(z, 2); }

double interaction_integral_grid(const ZCoords& z, const Grid& g) {
    const Field e1 = eval_soliton(z.left(), g);
    const Field e2 = eval_soliton(z.right(), g);
    Field hp(g);  // H_p'(eta_2) = -|eta_2|^2 eta_2
    for (int j = 0; j < g.n; ++j) hp[j] = -std::norm(e2[j]) * e2[j];
    return inner(hp, e1);
}

namespace {

std::array<double, 8> interaction_gradient_j(const ZCoords& z, int j) {
    std::array<double, 8> grad{};
    for (int m = 0; m < 8; ++m) {
        const double step = 1e-6;
        ZCoords zp = z, zm = z;
        zp[m] += step;
        zm[m] -= step;
        grad[m] = (interaction_integral_j(zp, j) - interaction_integral_j(zm, j)) / (2.0 * step);
    }
    return grad;
}

}  // namespace

std::array<double, 8> interaction_gradient(const ZCoords& z) {
    return interaction_gradient_j(z, 2);
}

std::array<double, 8> rhs_general(const ZCoords& z) {
    // grad1 of <H_p'(eta_1), eta_2>, grad2 of <H_p'(eta_2), eta_1>
    const auto grad1 = interaction_gradient_j(z, 1);
    const auto grad2 = interaction_gradient_j(z, 2);
    const double single_a1 = z.v1() / z.mu1();  // d_{v} H(eta) = v / mu
    const double single_a2 = z.v2() / z.mu2();
    // -d_{mu} H(eta) = mu^2/2 + v^2 mu^{-2}/2
    const double single_th1 = 0.5 * z.mu1() * z.mu1() + 0.5 * z.v1() * z.v1() / (z.mu1() * z.mu1());
    const double single_th2 = 0.5 * z.mu2() * z.mu2() + 0.5 * z.v2() * z.v2() / (z.mu2() * z.mu2());
    return {
        grad1[4],               // mu1'  = d_{theta1} <H_p'(eta_1), eta_2>
        single_a1 + grad1[5],   // a1'   = d_{v1} H(eta_1) + d_{v1} <...>
        grad2[6],               // mu2'
        single_a2 + grad2[7],   // a2'
        single_th1 - grad1[0],  // theta1' = -d_{mu1} H(eta_1) - d_{mu1} <...>
        -grad1[1],              // v1'   = -d_{a1} <...>
        single_th2 - grad2[2],  // theta2'
        -grad2[3],              // v2'
    };
}

OdeTrajectory integrate_ode(const OdeRhs& rhs, std::span<const double> y0, double t_end,
                            double dt, int sample_stride) {
    if (!(dt > 0.0) || dt > 0.05) throw std::invalid_argument("integrate_ode: need 0 < dt <= 0.05");
    if (t_end / dt > 1e8) throw std::invalid_argument("integrate_ode: too many steps");
    if (sample_stride < 1) sample_stride = 1;

    const int dim = static_cast<int>(y0.size());
    const long nsteps = std::max(1L, std::lround(t_end / dt));
    const double step = t_end / static_cast<double>(nsteps);

    std::vector<double> y(y0.begin(), y0.end());
    std::vector<double> k1(dim), k2(dim), k3(dim), k4(dim), tmp(dim);

    OdeTrajectory traj;
    traj.meta.dt = step;
    traj.meta.sample_stride = sample_stride;
    traj.times.push_back(0.0);
    traj.states.push_back(y);

    auto finite = [&y]() {
        for (double x : y)
            if (!std::isfinite(x)) return false;
        return true;
    };

    for (long i = 0; i < nsteps; ++i) {
        const double t = i * step;
        rhs(t, y, k1);
        for (int d = 0; d < dim; ++d) tmp[d] = y[d] + 0.5 * step * k1[d];
        rhs(t + 0.5 * step, tmp, k2);
        for (int d = 0; d < dim; ++d) tmp[d] = y[d] + 0.5 * step * k2[d];
        rhs(t + 0.5 * step, tmp, k3);
        for (int d = 0; d < dim; ++d) tmp[d] = y[d] + step * k3[d];
        rhs(t + step, tmp, k4);
        for (int d = 0; d < dim; ++d)
            y[d] += step / 6.0 * (k1[d] + 2.0 * k2[d] + 2.0 * k3[d] + k4[d]);

        if (!finite()) {
            traj.meta.aborted = true;
            traj.meta.t_last = traj.times.back();
            return traj;
        }
        if ((i + 1) % sample_stride == 0 || i + 1 == nsteps) {
            traj.times.push_back((i + 1) * step);
            traj.states.push_back(y);
        }
    }
    traj.meta.t_last = traj.times.back();
    return traj;
}

OdeRhs make_rhs(const std::string& variant, int sigma) {
    if (variant == "theorem" || variant == "reduced") {
        const bool reduced = variant == "reduced";
        return [sigma, reduced](double, std::span<const double> y, std::span<double> dy) {
            EffectiveState s{y[0], y[1], y[2], y[3], sigma};
            const auto d = reduced ? rhs_reduced(s) : rhs_theorem(s);
            for (int i = 0; i < 4; ++i) dy[i] = d[i];
        };
    }
    if (variant == "general") {
        return [](double, std::span<const double> y, std::span<double> dy) {
            ZCoords z;
            for (int i = 0; i < 8; ++i) z[i] = y[i];
            const auto d = rhs_general(z);
            for (int i = 0; i < 8; ++i) dy[i] = d[i];
        };
    }
    throw std::invalid_argument("unknown ODE variant: " + variant);
}

std::string trajectory_csv(const OdeTrajectory& traj, bool general) {
    std::ostringstream os;
    os << (general ? "t,mu1,a1,mu2,a2,theta1,v1,theta2,v2" : "t,mu,a,theta,v") << '\n';
    for (size_t i = 0; i < traj.times.size(); ++i) {
        os << format_double(traj.times[i]);
        for (double x : traj.states[i]) os << ',' << format_double(x);
        os << '\n';
    }
    return os.str();
}

}  // namespace nlslab
