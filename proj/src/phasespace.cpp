#include "relhyd/phasespace.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <numbers>
#include <string>
#include <thread>
#include <vector>

#include "relhyd/special.hpp"

namespace relhyd {

namespace {

constexpr double kPi = std::numbers::pi;
constexpr double kFourPi = 4.0 * std::numbers::pi;

// exp(u) below this cannot contribute at double precision
constexpr double kExpFloor = -700.0;

} // namespace

double orbit_energy(double R, const Coupling& coupling) {
    if (!(R > 0.0))
        throw DomainError("orbit scale R must be positive");
    if (coupling.zero())
        return 1.0;
    double a = coupling.a2();
    return std::sqrt(1.0 + a * a / (R * R)) - a / R;
}

double orbit_scale(double E, const Coupling& coupling) {
    if (coupling.zero())
        throw DomainError("orbit_scale is indeterminate at zero coupling");
    if (!(E > 0.0 && E < 1.0))
        throw Unbound("orbit_scale requires 0 < E < 1");
    return 2.0 * coupling.a2() * E / (1.0 - E * E);
}

OrbitalElements orbital_elements(const PhasePoint& pt, const Coupling& coupling) {
    double r = pt.position.norm();
    if (!(r > 0.0))
        throw DomainError("phase point at the origin");
    double p2 = pt.momentum.norm2();
    double L = pt.position.cross(pt.momentum).norm();
    double a = coupling.a2();

    OrbitalElements el;
    el.L = L;
    if (coupling.zero()) {
        double eps = 0.5 * p2 - 1.0 / r;  // Kepler energy; E = 1 + a*eps as a -> 0
        if (eps >= 0.0)
            throw Unbound("phase point is not on a bound orbit");
        el.E = 1.0;
        el.R = -1.0 / eps;
        el.omega = 1.0;
        return el;
    }
    double gamma = std::sqrt(1.0 + a * p2);
    double E = gamma - a / r;
    if (E >= 1.0)
        throw Unbound("phase point is not on a bound orbit (E = " + std::to_string(E) + ")");
    if (L < coupling.alpha_z * (1.0 - 1e-12))
        throw SubBarrier("L = " + std::to_string(L) + " below the barrier alpha*Z = " +
                         std::to_string(coupling.alpha_z));
    el.E = E;
    el.R = 2.0 * a * E / (1.0 - E * E);
    el.omega = std::sqrt(std::max(0.0, 1.0 - a / (L * L)));
    return el;
}

namespace {

struct Frame {
    Vec3 e1, e2, e3;
};

// orthonormal frame with e3 along the position direction (theta, phi)
Frame lab_frame(double theta, double phi) {
    double st = std::sin(theta), ct = std::cos(theta);
    double sp = std::sin(phi), cp = std::cos(phi);
    Frame f;
    f.e1 = {ct * cp, ct * sp, -st};
    f.e2 = {-sp, cp, 0.0};
    f.e3 = {st * cp, st * sp, ct};
    return f;
}

} // namespace

PhasePoint chart_to_phase(const ChartPoint& cp, const Coupling& coupling, double E) {
    if (!(cp.r > 0.0) || cp.r > cp.R)
        throw DomainError("chart point requires 0 < r <= R");
    double q2 = 2.0 * E * (1.0 / cp.r - 1.0 / cp.R);
    double q = std::sqrt(std::max(0.0, q2));
    double pr = q * std::cos(cp.mu);
    double wl = cp.r * q * std::sin(cp.mu);
    double L = std::sqrt(wl * wl + coupling.a2());
    double pperp = L / cp.r;

    Frame f = lab_frame(cp.theta, cp.phi);
    PhasePoint pt;
    pt.position = cp.r * f.e3;
    pt.momentum = pperp * std::cos(cp.nu) * f.e1 + pperp * std::sin(cp.nu) * f.e2 + pr * f.e3;
    return pt;
}

ChartPoint phase_to_chart(const PhasePoint& pt, const Coupling& coupling) {
    OrbitalElements el = orbital_elements(pt, coupling);
    double r = pt.position.norm();

    ChartPoint cp;
    cp.r = r;
    cp.R = el.R;
    cp.theta = std::acos(std::clamp(pt.position.z / r, -1.0, 1.0));
    cp.phi = std::atan2(pt.position.y, pt.position.x);

    Frame f = lab_frame(cp.theta, cp.phi);
    double pr = pt.momentum.dot(f.e3);
    double wl = el.omega * el.L;
    cp.mu = std::atan2(wl / r, pr);  // in [0, pi] since wl >= 0
    double c1 = pt.momentum.dot(f.e1);
    double c2 = pt.momentum.dot(f.e2);
    cp.nu = std::atan2(c2, c1);
    if (cp.nu < 0.0)
        cp.nu += 2.0 * kPi;
    return cp;
}

double measure_factor(const ChartPoint& cp, const Coupling& coupling, double E) {
    if (!(cp.r > 0.0) || cp.r > cp.R)
        throw DomainError("chart point requires 0 < r <= R");
    double a = coupling.a2();
    double phi_e = std::sqrt(1.0 + a * a / (cp.R * cp.R)) / (2.0 * E * E);
    double root = std::sqrt(std::max(0.0, 2.0 / (E * cp.r) - 2.0 / (E * cp.R)));
    return root * std::sin(cp.mu) / (2.0 * cp.R * cp.R * phi_e);
}

// ---------------------------------------------------------------------------
// StateDensity
// ---------------------------------------------------------------------------

namespace {

// log of the main prefactor of the yrast density
double yrast_log_coef(double ell, double E) {
    return (5.0 + 8.0 * ell) * std::numbers::ln2 + (5.0 + 4.0 * ell) * std::log(E) -
           2.0 * std::log(kPi) - (6.0 + 4.0 * ell) * std::log1p(ell) -
           log_gamma(3.0 + 4.0 * ell);
}

double two_s_a_log_coef(double ell) {
    double s2 = 4.0 + 3.0 * ell;
    return (8.0 + 8.0 * ell) * std::numbers::ln2 - std::log(2.0 + ell) -
           2.0 * std::log(kPi) - log_gamma(6.0 + 4.0 * ell) -
           (4.5 + 2.0 * ell) * std::log(s2);
}

double two_s_b_log_coef(double ell) {
    double s2 = 4.0 + 3.0 * ell;
    return (6.0 + 4.0 * ell) * std::numbers::ln2 + std::log1p(ell) -
           std::log(2.0 + ell) - 2.0 * log_gamma(3.0 + 2.0 * ell) -
           (3.5 + 2.0 * ell) * std::log(s2) - std::log(2.0 * kPi) -
           std::log(beta_fn(1.5 + 2.0 * ell, 0.5));
}

} // namespace

StateDensity StateDensity::yrast(int n, const Coupling& coupling) {
    if (n < 1)
        throw OutOfRange("yrast density requires n >= 1");
    StateDensity sd;
    sd.kind_ = Kind::yrast;
    sd.n_ = n;
    sd.coupling_ = coupling;
    sd.ell_ = effective_ell(n - 1, coupling);
    sd.energy_ = level_energy(QuantumNumbers(n, n - 1), coupling);
    return sd;
}

StateDensity StateDensity::two_s_a(const Coupling& coupling) {
    StateDensity sd = two_s_mix(0.0, coupling);
    sd.kind_ = Kind::two_s_a;
    return sd;
}

StateDensity StateDensity::two_s_b(const Coupling& coupling) {
    StateDensity sd = two_s_mix(1.0, coupling);
    sd.kind_ = Kind::two_s_b;
    return sd;
}

StateDensity StateDensity::two_s_mix(double lambda, const Coupling& coupling) {
    if (!(lambda >= 0.0 && lambda <= 1.0))
        throw OutOfRange("mix parameter lambda must lie in [0, 1]");
    StateDensity sd;
    sd.kind_ = Kind::two_s_mix;
    sd.n_ = 2;
    sd.lambda_ = lambda;
    sd.coupling_ = coupling;
    sd.ell_ = effective_ell(0, coupling);
    sd.energy_ = (2.0 + sd.ell_) / std::sqrt(4.0 + 3.0 * sd.ell_);
    return sd;
}

double StateDensity::radial_phase_density(const OrbitalElements& el) const {
    double a = coupling_.a2();
    double wl2 = std::max(0.0, el.L * el.L - a);
    double R = el.R;
    double Eo = el.E;
    double x = wl2 * R / (2.0 * Eo);
    double phi_e = std::sqrt(1.0 + a * a / (R * R)) / (2.0 * Eo * Eo);
    // omega L * x^{2 ell} = sqrt(2 Eo / R) * x^{1/2 + 2 ell}; keeps the
    // wl -> 0 limit well defined for slightly negative ell
    double angular = std::sqrt(2.0 * Eo / R) * std::pow(x, 0.5 + 2.0 * ell_);

    if (kind_ == Kind::yrast) {
        double expo = yrast_log_coef(ell_, energy_) - 2.0 * R * energy_ / (1.0 + ell_);
        if (expo < kExpFloor)
            return 0.0;
        return std::exp(expo) * angular * R * R * R * phi_e;
    }

    double s2 = 4.0 + 3.0 * ell_;
    double s = std::sqrt(s2);
    double decay = -2.0 * R / s;
    if (decay < kExpFloor)
        return 0.0;
    double common = angular * R * R * R * phi_e * std::exp(decay);

    double value = 0.0;
    double wa = 1.0 - lambda_, wb = lambda_;
    if (kind_ == Kind::two_s_a) { wa = 1.0; wb = 0.0; }
    if (kind_ == Kind::two_s_b) { wa = 0.0; wb = 1.0; }
    if (wa != 0.0) {
        double br = (1.0 + ell_) * (1.0 + ell_) * s2 * s2 * (3.0 + 4.0 * ell_) * (5.0 + 4.0 * ell_) -
                    8.0 * (1.0 + ell_) * s2 * (5.0 + 4.0 * ell_) * x + 16.0 * x * x;
        value += wa * std::exp(two_s_a_log_coef(ell_)) * br * common;
    }
    if (wb != 0.0) {
        double q = (1.0 + ell_) * s2 * (7.0 + 8.0 * ell_) - 8.0 * (1.0 + ell_) * s * R + 2.0 * R * R;
        value += wb * std::exp(two_s_b_log_coef(ell_)) * q * common;
    }
    return value;
}

double density_from_elements(const StateDensity& sd, const OrbitalElements& el) {
    return sd.radial_phase_density(el) / kFourPi;
}

double density_eval(const StateDensity& sd, const PhasePoint& pt) {
    return density_from_elements(sd, orbital_elements(pt, sd.coupling()));
}

double momentum_marginal(const StateDensity& sd, double r) {
    if (r < 0.0)
        throw OutOfRange("momentum_marginal requires r >= 0");
    RadialState state = sd.is_yrast() ? RadialState::yrast(sd.n(), sd.coupling())
                                      : RadialState::two_s(sd.coupling());
    double w = radial_wavefunction(state, r);
    return w * w / kFourPi;
}

namespace {

// marginal density of R for the yrast family
double yrast_r_marginal(double ell, double E, double R) {
    double expo = (3.0 + 4.0 * ell) * std::numbers::ln2 + (5.0 + 4.0 * ell) * std::log(E) -
                  (6.0 + 4.0 * ell) * std::log1p(ell) - log_gamma(4.0 + 4.0 * ell) +
                  (4.0 + 4.0 * ell) * std::log(R) - 2.0 * R * E / (1.0 + ell);
    return expo < kExpFloor ? 0.0 : std::exp(expo);
}

double two_s_a_r_marginal(double ell, double R) {
    double s2 = 4.0 + 3.0 * ell;
    double lc = (9.0 + 4.0 * ell) * std::numbers::ln2 + std::log(3.0 + 2.0 * ell) -
                (4.5 + 2.0 * ell) * std::log(s2) - log_gamma(9.0 + 4.0 * ell);
    double br = (1.0 + ell) * (1.0 + ell) * s2 * s2 * (5.0 + 4.0 * ell) * (7.0 + 4.0 * ell) -
                2.0 * (1.0 + ell) * s2 * (7.0 + 4.0 * ell) * R * R + R * R * R * R;
    double expo = lc + (4.0 + 4.0 * ell) * std::log(R) - 2.0 * R / std::sqrt(s2);
    return expo < kExpFloor ? 0.0 : std::exp(expo) * br;
}

double two_s_b_r_marginal(double ell, double R) {
    double s2 = 4.0 + 3.0 * ell;
    double s = std::sqrt(s2);
    double lc = (6.0 + 4.0 * ell) * std::numbers::ln2 + std::log1p(ell) -
                std::log(2.0 + ell) - 2.0 * log_gamma(3.0 + 2.0 * ell) -
                (3.5 + 2.0 * ell) * std::log(s2) +
                std::log(beta_fn(3.0 + 2.0 * ell, 2.0 + 2.0 * ell));
    double q = (1.0 + ell) * s2 * (7.0 + 8.0 * ell) - 8.0 * (1.0 + ell) * s * R + 2.0 * R * R;
    double expo = lc + (4.0 + 4.0 * ell) * std::log(R) - 2.0 * R / s;
    return expo < kExpFloor ? 0.0 : std::exp(expo) * q;
}

// (mu, nu)-integrated density at fixed r, per unit dR (radial convention)
double munu_integrated(const StateDensity& sd, double r, double R) {
    double ell = sd.ell();
    if (!(R > r))
        return 0.0;
    double lpow = 2.0 * ell * std::log(r) + (1.0 + 2.0 * ell) * std::log(R - r);
    if (sd.is_yrast()) {
        double E = sd.energy();
        double expo = (4.0 + 4.0 * ell) * std::numbers::ln2 + (5.0 + 4.0 * ell) * std::log(E) -
                      (6.0 + 4.0 * ell) * std::log1p(ell) - 2.0 * log_gamma(2.0 + 2.0 * ell) +
                      lpow - 2.0 * R * E / (1.0 + ell);
        return expo < kExpFloor ? 0.0 : std::exp(expo);
    }
    double s2 = 4.0 + 3.0 * ell;
    double s = std::sqrt(s2);
    double y = r * (R - r);
    double wa = 1.0 - sd.mix_lambda(), wb = sd.mix_lambda();
    if (sd.kind() == StateDensity::Kind::two_s_a) { wa = 1.0; wb = 0.0; }
    if (sd.kind() == StateDensity::Kind::two_s_b) { wa = 0.0; wb = 1.0; }
    double value = 0.0;
    double base = lpow - 2.0 * R / s;
    if (base < kExpFloor)
        return 0.0;
    if (wa != 0.0) {
        double lc = (8.0 + 4.0 * ell) * std::numbers::ln2 - (4.5 + 2.0 * ell) * std::log(s2) -
                    log_gamma(3.0 + 2.0 * ell) - log_gamma(5.0 + 2.0 * ell);
        double br = (1.0 + ell) * (1.0 + ell) * (1.0 + ell) * (3.0 + 2.0 * ell) * s2 * s2 -
                    2.0 * (1.0 + ell) * (3.0 + 2.0 * ell) * s2 * y + 2.0 * y * y;
        value += wa * std::exp(lc + base) * br;
    }
    if (wb != 0.0) {
        double lc = (6.0 + 4.0 * ell) * std::numbers::ln2 + std::log1p(ell) -
                    std::log(2.0 + ell) - 2.0 * log_gamma(3.0 + 2.0 * ell) -
                    (3.5 + 2.0 * ell) * std::log(s2);
        double q = (1.0 + ell) * s2 * (7.0 + 8.0 * ell) - 8.0 * (1.0 + ell) * s * R + 2.0 * R * R;
        value += wb * std::exp(lc + base) * q;
    }
    return value;
}

} // namespace

double r_marginal(const StateDensity& sd, double R) {
    if (R < 0.0)
        throw OutOfRange("r_marginal requires R >= 0");
    if (R == 0.0)
        return 0.0;
    switch (sd.kind()) {
        case StateDensity::Kind::yrast:
            return yrast_r_marginal(sd.ell(), sd.energy(), R);
        case StateDensity::Kind::two_s_a:
            return two_s_a_r_marginal(sd.ell(), R);
        case StateDensity::Kind::two_s_b:
            return two_s_b_r_marginal(sd.ell(), R);
        case StateDensity::Kind::two_s_mix:
            return (1.0 - sd.mix_lambda()) * two_s_a_r_marginal(sd.ell(), R) +
                   sd.mix_lambda() * two_s_b_r_marginal(sd.ell(), R);
    }
    return 0.0;
}

double radial_density(const StateDensity& sd, double r, double R) {
    if (r < 0.0 || R < 0.0)
        throw OutOfRange("radial_density requires r, R >= 0");
    if (r == 0.0 || r >= R)
        return 0.0;  // r^{2+2ell} and (R-r)^{1+2ell} weights vanish (2ell > -1)
    return r * r * munu_integrated(sd, r, R);
}

// ---------------------------------------------------------------------------
// negativity scan
// ---------------------------------------------------------------------------

namespace {

// full-convention density on the chart slice (theta, phi, nu do not enter)
double chart_density(const StateDensity& sd, double t, double R, double mu) {
    if (!(t > 0.0) || !(t < 1.0) || !(R > 0.0))
        return 0.0;
    double r = t * R;
    double Eo = orbit_energy(R, sd.coupling());
    OrbitalElements el;
    el.E = Eo;
    el.R = R;
    double wl2 = 2.0 * Eo * r * (R - r) / R * std::sin(mu) * std::sin(mu);
    el.L = std::sqrt(wl2 + sd.coupling().a2());
    el.omega = el.L > 0.0 ? std::sqrt(wl2) / el.L : 1.0;
    return sd.radial_phase_density(el) / kFourPi;
}

struct Candidate {
    double value;
    std::array<double, 3> x;  // (t, R, mu)
};

// compact Nelder-Mead on (t, R, mu) with domain clamping
Candidate nelder_mead(const StateDensity& sd, std::array<double, 3> start, double scale_R) {
    auto eval = [&](std::array<double, 3> v) {
        double t = std::clamp(v[0], 1e-9, 1.0 - 1e-9);
        double R = std::clamp(v[1], 1e-9, 400.0 * scale_R);
        double mu = std::clamp(v[2], 0.0, kPi);
        return chart_density(sd, t, R, mu);
    };
    std::array<std::array<double, 3>, 4> sim;
    std::array<double, 4> fv;
    sim[0] = start;
    sim[1] = {start[0] + 0.05, start[1], start[2]};
    sim[2] = {start[0], start[1] + 0.1 * scale_R, start[2]};
    sim[3] = {start[0], start[1], start[2] + 0.05};
    for (int i = 0; i < 4; ++i)
        fv[i] = eval(sim[i]);

    for (int iter = 0; iter < 400; ++iter) {
        std::array<int, 4> idx = {0, 1, 2, 3};
        std::sort(idx.begin(), idx.end(), [&](int a, int b) { return fv[a] < fv[b]; });
        std::array<std::array<double, 3>, 4> s2;
        std::array<double, 4> f2;
        for (int i = 0; i < 4; ++i) {
            s2[i] = sim[idx[i]];
            f2[i] = fv[idx[i]];
        }
        sim = s2;
        fv = f2;

        double size = 0.0;
        for (int i = 1; i < 4; ++i)
            for (int d = 0; d < 3; ++d)
                size = std::max(size, std::fabs(sim[i][d] - sim[0][d]) /
                                          (d == 1 ? scale_R : 1.0));
        if (size < 1e-8)
            break;

        std::array<double, 3> cen = {0, 0, 0};
        for (int i = 0; i < 3; ++i)
            for (int d = 0; d < 3; ++d)
                cen[d] += sim[i][d] / 3.0;
        auto blend = [&](double alpha) {
            std::array<double, 3> v;
            for (int d = 0; d < 3; ++d)
                v[d] = cen[d] + alpha * (sim[3][d] - cen[d]);
            return v;
        };
        auto xr = blend(-1.0);
        double fr = eval(xr);
        if (fr < fv[0]) {
            auto xe = blend(-2.0);
            double fe = eval(xe);
            if (fe < fr) { sim[3] = xe; fv[3] = fe; }
            else { sim[3] = xr; fv[3] = fr; }
        } else if (fr < fv[2]) {
            sim[3] = xr;
            fv[3] = fr;
        } else {
            auto xc = blend(0.5);
            double fc = eval(xc);
            if (fc < fv[3]) { sim[3] = xc; fv[3] = fc; }
            else {
                for (int i = 1; i < 4; ++i) {
                    for (int d = 0; d < 3; ++d)
                        sim[i][d] = sim[0][d] + 0.5 * (sim[i][d] - sim[0][d]);
                    fv[i] = eval(sim[i]);
                }
            }
        }
    }
    int best = 0;
    for (int i = 1; i < 4; ++i)
        if (fv[i] < fv[best])
            best = i;
    return {fv[best], sim[best]};
}

} // namespace

ScanResult negativity_scan(const StateDensity& sd, int resolution, int workers) {
    if (resolution < 2)
        throw OutOfRange("negativity_scan requires resolution >= 2");
    // decay scale of the density in R
    double scale = sd.is_yrast() ? (1.0 + sd.ell()) / sd.energy()
                                 : std::sqrt(4.0 + 3.0 * sd.ell()) / 2.0;
    double Rmax = 40.0 * scale;
    const int nres = resolution;

    std::vector<Candidate> grid_best;
    std::vector<std::thread> pool;
    std::vector<std::vector<Candidate>> partial(std::max(1, workers));
    auto worker_fn = [&](int w, int lo, int hi) {
        Candidate best{0.0, {0.5, scale, kPi / 2}};
        for (int j = lo; j < hi; ++j) {
            double R = (j + 0.5) / nres * Rmax;
            for (int i = 0; i < nres; ++i) {
                double t = (i + 0.5) / nres;
                for (int k = 0; k < nres; ++k) {
                    double mu = (k + 0.5) / nres * kPi;
                    double v = chart_density(sd, t, R, mu);
                    if (v < best.value)
                        best = {v, {t, R, mu}};
                }
            }
        }
        partial[w].push_back(best);
    };
    int W = std::max(1, workers);
    for (int w = 0; w < W; ++w) {
        int lo = w * nres / W, hi = (w + 1) * nres / W;
        pool.emplace_back(worker_fn, w, lo, hi);
    }
    for (auto& th : pool)
        th.join();
    for (const auto& pv : partial)
        grid_best.insert(grid_best.end(), pv.begin(), pv.end());

    Candidate best{0.0, {0.5, scale, kPi / 2}};
    for (const auto& c : grid_best)
        if (c.value < best.value)
            best = c;

    // refine only when the grid already sees a negative cell; yrast densities
    // are non-negative and keep the zero minimum
    if (best.value < 0.0)
        best = nelder_mead(sd, best.x, scale);

    ScanResult res;
    res.min_value = best.value;
    res.location.r = best.x[0] * best.x[1];
    res.location.R = best.x[1];
    res.location.mu = best.x[2];
    res.location.theta = kPi / 2;
    res.location.phi = 0.0;
    res.location.nu = 0.0;
    return res;
}

} // namespace relhyd
