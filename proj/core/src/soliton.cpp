#include "nlslab/soliton.hpp"

#include <atomic>
#include <cmath>
#include <cstdio>
#include <numbers>
#include <stdexcept>

#include <nlohmann/json.hpp>

#include "nlslab/errors.hpp"
#include "nlslab/fft.hpp"

namespace nlslab {

namespace {

constexpr double pi = std::numbers::pi;

double sech(double x) { return 1.0 / std::cosh(x); }

void warn_once(std::atomic<bool>& flag, const char* msg) {
    if (!flag.exchange(true)) std::fprintf(stderr, "nlslab: warning: %s\n", msg);
}

std::atomic<bool> warned_boundary{false};

}  // namespace

ZCoords ZCoords::swapped() const {
    ZCoords s;
    s.z = {z[2], z[3], z[0], z[1], z[6], z[7], z[4], z[5]};
    return s;
}

SymmetricState SymmetricState::initial(double a0, int sigma) {
    if (sigma != 0 && sigma != 1) throw std::invalid_argument("sigma must be 0 or 1");
    SymmetricState s;
    s.mu = 1.0;
    s.a = a0;
    s.theta = 0.0;
    s.v = 0.0;
    s.sigma = sigma;
    s.h = std::exp(-a0);
    return s;
}

ZCoords embed_symmetric(const SymmetricState& s) {
    ZCoords z;
    z.z = {s.mu, -s.a, s.mu, s.a, s.theta + s.sigma * pi, -s.v, s.theta, s.v};
    return z;
}

SymmetricState symmetric_part(const ZCoords& z) {
    SymmetricState s;
    s.mu = 0.5 * (z.mu1() + z.mu2());
    s.a = 0.5 * (z.a2() - z.a1());
    s.theta = z.theta2();
    s.v = 0.5 * (z.v2() - z.v1());
    const long k = std::lround((z.theta1() - z.theta2()) / pi);
    s.sigma = static_cast<int>(((k % 2) + 2) % 2);
    s.h = std::exp(-s.a);
    return s;
}

std::array<double, 8> embed_symmetric_velocity(const std::array<double, 4>& d) {
    // d = (mu', a', theta', v'); both thetas advance together.
    return {d[0], -d[1], d[0], d[1], d[2], -d[3], d[2], d[3]};
}

std::string to_json_string(const SolitonParams& p) {
    nlohmann::ordered_json j;
    j["mu"] = p.mu;
    j["a"] = p.a;
    j["theta"] = p.theta;
    j["v"] = p.v;
    return j.dump();
}

std::string to_json_string(const ZCoords& z) {
    nlohmann::ordered_json j;
    const char* names[8] = {"mu1", "a1", "mu2", "a2", "theta1", "v1", "theta2", "v2"};
    for (int i = 0; i < 8; ++i) j[names[i]] = z[i];
    return j.dump();
}

SolitonParams soliton_params_from_json(const std::string& text) {
    auto j = nlohmann::json::parse(text);
    return {j.at("mu").get<double>(), j.at("a").get<double>(), j.at("theta").get<double>(),
            j.at("v").get<double>()};
}

ZCoords zcoords_from_json(const std::string& text) {
    auto j = nlohmann::json::parse(text);
    ZCoords z;
    const char* names[8] = {"mu1", "a1", "mu2", "a2", "theta1", "v1", "theta2", "v2"};
    for (int i = 0; i < 8; ++i) z[i] = j.at(names[i]).get<double>();
    return z;
}

Complex eval_soliton_at(const SolitonParams& p, double x) {
    const double y = x - p.a;
    const double phase = p.theta + p.v * y / p.mu;
    return std::polar(p.mu * sech(p.mu * y), phase);
}

Field eval_soliton(const SolitonParams& p, const Grid& g) {
    if (p.mu <= 0.0) throw std::invalid_argument("eval_soliton: mu must be positive");
    const double dist =
        std::min(std::abs(0.5 * g.length - p.a), std::abs(-0.5 * g.length - p.a));
    if (sech(p.mu * dist) >= 1e-14)
        warn_once(warned_boundary, "soliton tail exceeds 1e-14 at the domain boundary");
    Field u(g);
    for (int j = 0; j < g.n; ++j) u[j] = eval_soliton_at(p, g.node(j));
    return u;
}

SolitonParams free_flow(const SolitonParams& p0, double t) {
    SolitonParams p = p0;
    p.a = p0.a + t * p0.v / p0.mu;
    p.theta = p0.theta + 0.5 * t * (p0.mu * p0.mu + p0.v * p0.v / (p0.mu * p0.mu));
    return p;
}

std::array<Complex, 4> tangent_frame_at(const SolitonParams& p, double x) {
    const double y = x - p.a;
    const double my = p.mu * y;
    const double s = sech(my);
    const double sp = -s * std::tanh(my);  // phi'(mu y)
    const Complex ph = std::polar(1.0, p.theta + p.v * y / p.mu);
    const Complex eta = ph * (p.mu * s);
    const Complex d_mu = ph * Complex(s + my * sp, -(p.v * y / p.mu) * s);
    const Complex d_a = ph * Complex(-p.mu * p.mu * sp, -p.v * s);
    const Complex d_theta = Complex(0.0, 1.0) * eta;
    const Complex d_v = ph * Complex(0.0, y * s);
    return {d_mu, d_a, d_theta, d_v};
}

std::array<Field, 4> tangent_frame(const SolitonParams& p, const Grid& g) {
    std::array<Field, 4> out{Field(g), Field(g), Field(g), Field(g)};
    for (int j = 0; j < g.n; ++j) {
        const auto d = tangent_frame_at(p, g.node(j));
        for (int i = 0; i < 4; ++i) out[i][j] = d[i];
    }
    return out;
}

Field two_soliton(const ZCoords& z, const Grid& g) {
    Field u(g);
    const SolitonParams p1 = z.left(), p2 = z.right();
    for (int j = 0; j < g.n; ++j) {
        const double x = g.node(j);
        u[j] = eval_soliton_at(p1, x) + eval_soliton_at(p2, x);
    }
    return u;
}

std::array<Field, 8> two_soliton_tangent(const ZCoords& z, const Grid& g) {
    std::array<Field, 8> out{Field(g), Field(g), Field(g), Field(g),
                             Field(g), Field(g), Field(g), Field(g)};
    const SolitonParams p1 = z.left(), p2 = z.right();
    for (int j = 0; j < g.n; ++j) {
        const double x = g.node(j);
        const auto d1 = tangent_frame_at(p1, x);
        const auto d2 = tangent_frame_at(p2, x);
        // order (mu1, a1, mu2, a2, theta1, v1, theta2, v2)
        out[0][j] = d1[0];
        out[1][j] = d1[1];
        out[2][j] = d2[0];
        out[3][j] = d2[1];
        out[4][j] = d1[2];
        out[5][j] = d1[3];
        out[6][j] = d2[2];
        out[7][j] = d2[3];
    }
    return out;
}

Field case_initial_data(double a0, int sigma, const Grid& g) {
    if (sigma != 0 && sigma != 1) throw std::invalid_argument("sigma must be 0 or 1");
    if (a0 < 3.0) throw std::invalid_argument("separation too small: need a0 >= 3");
    return two_soliton(embed_symmetric(SymmetricState::initial(a0, sigma)), g);
}

// --- group action ------------------------------------------------------------

Profile group_apply(const SolitonParams& p, Profile rho) {
    return [p, rho = std::move(rho)](double x) {
        const double y = x - p.a;
        return std::polar(1.0, p.theta + p.v * y / p.mu) * p.mu * rho(p.mu * y);
    };
}

Profile group_inverse(const SolitonParams& p, Profile rho) {
    return [p, rho = std::move(rho)](double x) {
        return std::polar(1.0, -p.theta - p.v * x / (p.mu * p.mu)) * rho(x / p.mu + p.a) / p.mu;
    };
}

Profile group_adjoint(const SolitonParams& p, Profile rho) {
    Profile inv = group_inverse(p, std::move(rho));
    return [mu = p.mu, inv = std::move(inv)](double x) { return mu * inv(x); };
}

Field sample(const Profile& f, const Grid& g) {
    Field u(g);
    for (int j = 0; j < g.n; ++j) u[j] = f(g.node(j));
    return u;
}

Profile sech_profile() {
    return [](double x) { return Complex(sech(x), 0.0); };
}

FourierInterpolant::FourierInterpolant(const Field& u) : grid_(u.grid), coef_(fft::forward(u)) {
    for (Complex& c : coef_) c /= grid_.n;
}

Complex FourierInterpolant::operator()(double x) const {
    const int n = grid_.n;
    const double omega = 2.0 * pi / grid_.length;
    const double dlt = x - grid_.node(0);
    const Complex w = std::polar(1.0, omega * dlt);
    Complex acc = 0.0;
    // signed modes -n/2+1 .. n/2-1 by recurrence, refreshed periodically
    Complex W = std::polar(1.0, omega * dlt * (-n / 2 + 1));
    for (int s = -n / 2 + 1; s <= n / 2 - 1; ++s) {
        if (((s + n) & 31) == 0) W = std::polar(1.0, omega * dlt * s);
        const int m = s >= 0 ? s : s + n;
        acc += coef_[m] * W;
        W *= w;
    }
    // Nyquist mode as a cosine
    acc += coef_[n / 2] * std::cos(omega * dlt * (n / 2));
    return acc;
}

namespace {

// Checks that the dilated and modulated content fits the target bandwidth.
void check_bandwidth(double content, double target_nyquist) {
    if (content > target_nyquist)
        throw NumericalError("interpolation degradation: dilated bandwidth exceeds target grid");
}

}  // namespace

Field group_apply(const SolitonParams& p, const Field& rho, const Grid& target) {
    const double k_src = pi / rho.grid.dx();
    check_bandwidth(p.mu * k_src + std::abs(p.v) / p.mu, pi / target.dx());
    const FourierInterpolant interp(rho);
    const double half = 0.5 * rho.grid.length;
    Field out(target);
    for (int j = 0; j < target.n; ++j) {
        const double x = target.node(j);
        const double y = p.mu * (x - p.a);
        if (y < -half || y >= half) continue;  // outside the source domain
        out[j] = std::polar(1.0, p.theta + p.v * (x - p.a) / p.mu) * p.mu * interp(y);
    }
    return out;
}

Field group_inverse(const SolitonParams& p, const Field& rho, const Grid& target) {
    const double k_src = pi / rho.grid.dx();
    check_bandwidth(k_src / p.mu + std::abs(p.v) / (p.mu * p.mu), pi / target.dx());
    const FourierInterpolant interp(rho);
    const double half = 0.5 * rho.grid.length;
    Field out(target);
    for (int j = 0; j < target.n; ++j) {
        const double x = target.node(j);
        const double y = x / p.mu + p.a;
        if (y < -half || y >= half) continue;
        out[j] = std::polar(1.0 / p.mu, -p.theta - p.v * x / (p.mu * p.mu)) * interp(y);
    }
    return out;
}

Field group_adjoint(const SolitonParams& p, const Field& rho, const Grid& target) {
    Field out = group_inverse(p, rho, target);
    out *= Complex(p.mu, 0.0);
    return out;
}

}  // namespace nlslab
