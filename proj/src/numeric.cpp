#include "sc/numeric.hpp"

#include <cmath>
#include <string>
#include <vector>

#include "sc/errors.hpp"

namespace sc {

namespace {

Cplx expi(Cplx z) { return std::exp(kTwoPiI * z); }

Cplx sq(Cplx z) { return z * z; }
Cplx cube(Cplx z) { return z * z * z; }

}  // namespace

Cplx lambda_numeric() {
    return std::sqrt(2.0 * kPi) * std::polar(1.0, kPi / 4.0);
}

EllipticNumeric::EllipticNumeric(Cplx tau, int terms)
    : tau_(tau), q_(expi(tau)), terms_(terms) {
    if (tau.imag() <= 0.0)
        throw ConvergenceFailure("Im(tau) must be positive, got " +
                                 std::to_string(tau.imag()));
    // Lambert sums: E2, q dE2/dq, E4, E6.
    Cplx s1{}, s1d{}, s3{}, s5{};
    Cplx qm = 1.0;
    for (int m = 1; m <= terms_; ++m) {
        qm *= q_;
        Cplx d = 1.0 - qm;
        Cplx t = qm / d;
        double md = m;
        s1 += md * t;
        s1d += md * md * qm / (d * d);
        s3 += md * md * md * t;
        s5 += md * md * md * md * md * t;
    }
    Cplx e2 = 1.0 - 24.0 * s1;
    Cplx e2p = -24.0 * s1d;  // q dE2/dq
    Cplx e4 = 1.0 + 240.0 * s3;
    Cplx e6 = 1.0 - 504.0 * s5;
    Cplx pi2 = sq(kTwoPiI);
    eta1_ = -pi2 * e2 / 12.0;
    eta1_dot_ = -pi2 * kTwoPiI * e2p / 12.0;
    g2_ = sq(pi2) * e4 / 12.0;
    g3_ = -cube(pi2) * e6 / 216.0;
}

Cplx EllipticNumeric::reduce(Cplx z, long* m_out, long* n_out) const {
    long n = std::lround(z.imag() / tau_.imag());
    Cplx zr = z - static_cast<double>(n) * tau_;
    long m = std::lround(zr.real());
    zr -= static_cast<double>(m);
    if (m_out) *m_out = m;
    if (n_out) *n_out = n;
    if (std::abs(zr) < 1e-12)
        throw PoleAt("z = " + std::to_string(z.real()) + " + " +
                     std::to_string(z.imag()) + "i");
    return zr;
}

Cplx EllipticNumeric::zeta1_raw(Cplx z) const {
    Cplx u = expi(z);
    Cplx s = -0.5 + 1.0 / (1.0 - u);
    Cplx qm = 1.0;
    for (int m = 1; m <= terms_; ++m) {
        qm *= q_;
        s += 1.0 / (1.0 - qm * u) - 1.0 / (1.0 - qm / u);
    }
    return s;
}

Cplx EllipticNumeric::zeta1_prime_raw(Cplx z) const {
    Cplx u = expi(z);
    Cplx s = u / sq(1.0 - u);
    Cplx qm = 1.0;
    for (int m = 1; m <= terms_; ++m) {
        qm *= q_;
        s += qm * (u / sq(1.0 - qm * u) + (1.0 / u) / sq(1.0 - qm / u));
    }
    return kTwoPiI * s;
}

Cplx EllipticNumeric::zeta1_dot_raw(Cplx z) const {
    Cplx u = expi(z);
    Cplx s{};
    Cplx qm = 1.0;
    for (int m = 1; m <= terms_; ++m) {
        qm *= q_;
        s += static_cast<double>(m) * qm *
             (u / sq(1.0 - qm * u) - (1.0 / u) / sq(1.0 - qm / u));
    }
    return kTwoPiI * s;
}

Cplx EllipticNumeric::wp_raw(Cplx z) const {
    return kTwoPiI * zeta1_prime_raw(z) - eta1_;
}

Cplx EllipticNumeric::wp_prime_raw(Cplx z) const {
    Cplx u = expi(z);
    Cplx v = 1.0 / u;
    Cplx s = u * (1.0 + u) / cube(1.0 - u);
    Cplx qm = 1.0;
    for (int m = 1; m <= terms_; ++m) {
        qm *= q_;
        s += qm * (u * (1.0 + qm * u) / cube(1.0 - qm * u) -
                   v * (1.0 + qm * v) / cube(1.0 - qm * v));
    }
    return cube(kTwoPiI) * s;
}

Cplx EllipticNumeric::wp_dot_raw(Cplx z) const {
    // wp_dot = 2 pi i * d/dz(zeta1_dot) - eta1_dot.
    Cplx u = expi(z);
    Cplx v = 1.0 / u;
    Cplx s{};
    Cplx qm = 1.0;
    for (int m = 1; m <= terms_; ++m) {
        qm *= q_;
        s += static_cast<double>(m) * qm *
             (u * (1.0 + qm * u) / cube(1.0 - qm * u) +
              v * (1.0 + qm * v) / cube(1.0 - qm * v));
    }
    return kTwoPiI * sq(kTwoPiI) * s - eta1_dot_;
}

Cplx EllipticNumeric::zeta1(Cplx z) const {
    long m, n;
    Cplx zr = reduce(z, &m, &n);
    return zeta1_raw(zr) + static_cast<double>(n);
}

Cplx EllipticNumeric::zeta1_prime(Cplx z) const {
    return zeta1_prime_raw(reduce(z, nullptr, nullptr));
}

Cplx EllipticNumeric::zeta1_dot(Cplx z) const {
    long m, n;
    Cplx zr = reduce(z, &m, &n);
    return zeta1_dot_raw(zr) - static_cast<double>(n) * zeta1_prime_raw(zr);
}

Cplx EllipticNumeric::wp(Cplx z) const {
    return wp_raw(reduce(z, nullptr, nullptr));
}

Cplx EllipticNumeric::wp_prime(Cplx z) const {
    return wp_prime_raw(reduce(z, nullptr, nullptr));
}

Cplx EllipticNumeric::wp_dot(Cplx z) const {
    long m, n;
    Cplx zr = reduce(z, &m, &n);
    return wp_dot_raw(zr) - static_cast<double>(n) * wp_prime_raw(zr);
}

Cplx EllipticNumeric::zeta1_prime_dot(Cplx z) const {
    return (wp_dot(z) + eta1_dot_) / kTwoPiI;
}

Cplx EllipticNumeric::zeta(Cplx z) const {
    return -kTwoPiI * zeta1(z) + eta1_ * z;
}

Cplx EllipticNumeric::eta2() const {
    // Honest quasi-period from unreduced series values of zeta on a pair of
    // points differing by tau, both within the strip of convergence.
    Cplx z0 = Cplx(0.1234, 0.0567) - 0.5 * tau_;
    auto zeta_unred = [&](Cplx z) { return -kTwoPiI * zeta1_raw(z) + eta1_ * z; };
    return zeta_unred(z0 + tau_) - zeta_unred(z0);
}

Cplx num_eval(const EllipticNumeric& en, const std::string& name, Cplx z) {
    if (name == "wp") return en.wp(z);
    if (name == "wp_prime") return en.wp_prime(z);
    if (name == "wp_dot") return en.wp_dot(z);
    if (name == "zeta") return en.zeta(z);
    if (name == "zeta1") return en.zeta1(z);
    if (name == "zeta1_prime") return en.zeta1_prime(z);
    if (name == "zeta1_dot") return en.zeta1_dot(z);
    if (name == "zeta1_prime_dot") return en.zeta1_prime_dot(z);
    throw UnknownName(name);
}

GrassNum psi1_numeric(const EllipticNumeric& en, Cplx z) {
    return {Cplx{}, Cplx{1.0}, -en.zeta1(z), Cplx{}};
}

GrassNum psi2_numeric(const EllipticNumeric& en, Cplx z) {
    return {Cplx{}, en.zeta1_prime(z), en.zeta1_dot(z), Cplx{}};
}

double invariance_defect(const EllipticNumeric& en, const std::string& name,
                         Cplx z) {
    // Components of F = A0 + theta B0 + phi A1 + theta phi B1, plus dA0/dz.
    struct Comp {
        std::function<Cplx(Cplx)> a0, b0, a1, b1, a0p;
    };
    Comp c;
    auto zero = [](Cplx) { return Cplx{}; };
    if (name == "Psi1") {
        c = {zero, [](Cplx) { return Cplx{1.0}; },
             [&](Cplx w) { return -en.zeta1(w); }, zero, zero};
    } else if (name == "Psi2") {
        c = {zero, [&](Cplx w) { return en.zeta1_prime(w); },
             [&](Cplx w) { return en.zeta1_dot(w); }, zero, zero};
    } else if (name == "theta") {
        // not a section: picks up a phi component under the second shift
        c = {zero, [](Cplx) { return Cplx{1.0}; }, zero, zero, zero};
    } else {
        throw UnknownName(name);
    }
    auto at = [&](Cplx w) {
        return GrassNum{c.a0(w), c.b0(w), c.a1(w), c.b1(w)};
    };
    GrassNum orig = at(z);
    // (z, theta) -> (z + 1, theta).
    double d1 = (at(z + 1.0) - orig).norm();
    // (z, theta) -> (z + tau + theta phi, theta + phi): expanding by the
    // nilpotent Taylor rule gives components
    //   (A0, B0, B0 + A1, A0' + B1) at z + tau.
    Cplx w = z + en.tau();
    GrassNum t2{c.a0(w), c.b0(w), c.b0(w) + c.a1(w), c.a0p(w) + c.b1(w)};
    double d2 = (t2 - orig).norm();
    return std::max(d1, d2);
}

namespace {

// Gauss-Legendre nodes/weights on [-1, 1] by Newton iteration.
void gauss_legendre(int n, std::vector<double>& xs, std::vector<double>& ws) {
    xs.resize(n);
    ws.resize(n);
    for (int i = 0; i < n; ++i) {
        double x = std::cos(kPi * (i + 0.75) / (n + 0.5));
        for (int it = 0; it < 100; ++it) {
            double p0 = 1.0, p1 = x;
            for (int k = 2; k <= n; ++k) {
                double p2 = ((2.0 * k - 1.0) * x * p1 - (k - 1.0) * p0) / k;
                p0 = p1;
                p1 = p2;
            }
            double dp = n * (x * p1 - p0) / (x * x - 1.0);
            double dx = p1 / dp;
            x -= dx;
            if (std::abs(dx) < 1e-15) break;
        }
        double p0 = 1.0, p1 = x;
        for (int k = 2; k <= n; ++k) {
            double p2 = ((2.0 * k - 1.0) * x * p1 - (k - 1.0) * p0) / k;
            p0 = p1;
            p1 = p2;
        }
        double dp = n * (x * p1 - p0) / (x * x - 1.0);
        xs[i] = x;
        ws[i] = 2.0 / ((1.0 - x * x) * dp * dp);
    }
}

}  // namespace

Cplx integrate_segment(const std::function<Cplx(Cplx)>& f, Cplx z0, Cplx z1,
                       int panels, int nodes) {
    std::vector<double> xs, ws;
    gauss_legendre(nodes, xs, ws);
    Cplx total{};
    Cplx step = (z1 - z0) / static_cast<double>(panels);
    for (int p = 0; p < panels; ++p) {
        Cplx a = z0 + static_cast<double>(p) * step;
        Cplx mid = a + 0.5 * step;
        for (int i = 0; i < nodes; ++i)
            total += ws[i] * f(mid + 0.5 * step * xs[i]);
    }
    return total * step * 0.5;
}

PeriodQuad period_quadrature(const EllipticNumeric& en, Cplx z0, int panels,
                             int nodes) {
    Cplx tau = en.tau();
    auto guard = [&](Cplx a, Cplx b) {
        for (int i = 0; i <= 64; ++i) {
            Cplx z = a + (b - a) * (static_cast<double>(i) / 64.0);
            long m = std::lround((z.imag() / tau.imag()));
            Cplx zr = z - static_cast<double>(m) * tau;
            zr -= std::round(zr.real());
            double dist = std::abs(zr);
            for (Cplx p : {Cplx{1.0}, Cplx{-1.0}, tau, -tau})
                dist = std::min(dist, std::abs(zr - p));
            if (dist < 0.02)
                throw SegmentThroughPole(
                    "segment passes within 0.02 of a lattice point");
        }
    };
    guard(z0, z0 + 1.0);
    guard(z0, z0 + tau);
    auto one = [](Cplx) { return Cplx{1.0}; };
    auto z1p = [&](Cplx z) { return en.zeta1_prime(z); };
    PeriodQuad r;
    r.a_dz = integrate_segment(one, z0, z0 + 1.0, panels, nodes);
    r.b_dz = integrate_segment(one, z0, z0 + tau, panels, nodes);
    r.a_zeta = integrate_segment(z1p, z0, z0 + 1.0, panels, nodes);
    r.b_zeta = integrate_segment(z1p, z0, z0 + tau, panels, nodes);
    return r;
}

double legendre_defect(const EllipticNumeric& en) {
    return std::abs(en.tau() * en.eta1() - en.eta2() - kTwoPiI);
}

}  // namespace sc
