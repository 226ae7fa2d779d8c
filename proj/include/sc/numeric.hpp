#pragma once

#include <complex>
#include <functional>

#include "sc/verdict.hpp"

namespace sc {

using Cplx = std::complex<double>;

inline constexpr double kPi = 3.141592653589793238462643383279502884;
inline const Cplx kTwoPiI{0.0, 2.0 * kPi};

// Numeric value of the formal normalization constant: lambda^2 = 2*pi*i, so
// lambda = sqrt(2*pi) * exp(i*pi/4).
Cplx lambda_numeric();

// Numeric elliptic/Weierstrass evaluator at fixed tau (Im tau > 0), using
// q-expansions with argument reduction into the fundamental domain
// |Im z / Im tau| <= 1/2, |Re(z - (Im z/Im tau) tau)| <= 1/2.
class EllipticNumeric {
  public:
    explicit EllipticNumeric(Cplx tau, int terms = 64);

    Cplx tau() const { return tau_; }
    Cplx q() const { return q_; }

    Cplx zeta1(Cplx z) const;       // -(2 pi i)^{-1}(zeta(z) - eta1 z)
    Cplx zeta1_prime(Cplx z) const;
    Cplx zeta1_dot(Cplx z) const;       // d/dtau at fixed z
    Cplx zeta1_prime_dot(Cplx z) const;
    Cplx wp(Cplx z) const;
    Cplx wp_prime(Cplx z) const;
    Cplx wp_dot(Cplx z) const;
    Cplx zeta(Cplx z) const;  // classical Weierstrass zeta

    Cplx eta1() const { return eta1_; }
    Cplx eta1_dot() const { return eta1_dot_; }
    // Quasi-period eta2 = zeta(z + tau) - zeta(z), evaluated honestly from
    // unreduced series.
    Cplx eta2() const;
    Cplx g2() const { return g2_; }
    Cplx g3() const { return g3_; }

    // Raw series values at reduced z (no argument reduction); exposed for
    // quasi-period computation and testing.
    Cplx zeta1_raw(Cplx z) const;
    Cplx zeta1_prime_raw(Cplx z) const;
    Cplx zeta1_dot_raw(Cplx z) const;
    Cplx wp_raw(Cplx z) const;
    Cplx wp_prime_raw(Cplx z) const;
    Cplx wp_dot_raw(Cplx z) const;

  private:
    // Split z = zr + m + n*tau with zr in the fundamental cell; returns zr
    // and the lattice counts.
    Cplx reduce(Cplx z, long* m_out, long* n_out) const;

    Cplx tau_, q_;
    int terms_;
    Cplx eta1_, eta1_dot_, g2_, g3_;
};

// A Grassmann number over the two odd generators: a + theta*b + phi*c +
// theta*phi*d with complex components.
struct GrassNum {
    Cplx a{}, b{}, c{}, d{};

    GrassNum operator+(const GrassNum& o) const {
        return {a + o.a, b + o.b, c + o.c, d + o.d};
    }
    GrassNum operator-(const GrassNum& o) const {
        return {a - o.a, b - o.b, c - o.c, d - o.d};
    }
    GrassNum operator*(const GrassNum& o) const {
        return {a * o.a, a * o.b + b * o.a, a * o.c + c * o.a,
                a * o.d + d * o.a + b * o.c - c * o.b};
    }
    GrassNum operator*(Cplx s) const { return {a * s, b * s, c * s, d * s}; }
    double norm() const {
        return std::abs(a) + std::abs(b) + std::abs(c) + std::abs(d);
    }
};

// Named evaluation; name is one of wp, wp_prime, wp_dot, zeta, zeta1,
// zeta1_prime, zeta1_dot, zeta1_prime_dot.  Throws UnknownName.
Cplx num_eval(const EllipticNumeric& en, const std::string& name, Cplx z);

// Numeric values of Psi1, Psi2 at a point (z; theta, phi formal): returns the
// GrassNum expansion.
GrassNum psi1_numeric(const EllipticNumeric& en, Cplx z);
GrassNum psi2_numeric(const EllipticNumeric& en, Cplx z);

// Check invariance of Psi1 or Psi2 under (z, theta) -> (z + 1, theta) and
// (z, theta) -> (z + tau + theta*phi, theta + phi), at the given sample
// point, using the nilpotent Taylor rule F(z+tau+theta*phi) = F(z+tau) +
// theta*phi*F'(z+tau); returns the max component deviation over both
// transformations.
double invariance_defect(const EllipticNumeric& en, const std::string& name,
                         Cplx z);

// Composite Gauss-Legendre quadrature of f over the straight segment
// [z0, z1] with `panels` panels of `nodes` points each.
Cplx integrate_segment(const std::function<Cplx(Cplx)>& f, Cplx z0, Cplx z1,
                       int panels = 16, int nodes = 12);

// Quadrature of dz and zeta1' dz along the segments [z0, z0+1] and
// [z0, z0+tau]; expected (1, tau, 0, 1).  Throws SegmentThroughPole when a
// segment passes too close to a lattice point.
struct PeriodQuad {
    Cplx a_dz, b_dz, a_zeta, b_zeta;
};
PeriodQuad period_quadrature(const EllipticNumeric& en, Cplx z0,
                             int panels = 16, int nodes = 12);

// Legendre relation defect |tau*eta1 - eta2 - 2 pi i| with eta1, eta2 the
// numeric quasi-periods of zeta.
double legendre_defect(const EllipticNumeric& en);

}  // namespace sc
