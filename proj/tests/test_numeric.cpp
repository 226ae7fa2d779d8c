#include "doctest.h"

#include "sc/errors.hpp"
#include "sc/numeric.hpp"
#include "sc/weierstrass.hpp"

#include <cmath>

using namespace sc;

TEST_CASE("quasi-period at the square lattice") {
    EllipticNumeric en(Cplx(0.0, 1.0));
    CHECK(std::abs(en.eta1() - Cplx(kPi, 0.0)) < 1e-12);
}

TEST_CASE("legendre relation at several moduli") {
    for (Cplx tau : {Cplx(0.0, 1.0), Cplx(0.3, 1.2), Cplx(-0.45, 0.9)}) {
        EllipticNumeric en(tau);
        CHECK(legendre_defect(en) < 1e-9);
    }
}

TEST_CASE("periodicity and quasi-periodicity of zeta1") {
    EllipticNumeric en(Cplx(0.3, 1.2));
    Cplx z0(0.17, 0.23);
    CHECK(std::abs(en.zeta1(z0 + 1.0) - en.zeta1(z0)) < 1e-12);
    CHECK(std::abs(en.zeta1(z0 + en.tau()) - en.zeta1(z0) - 1.0) < 1e-12);
    // zeta picks up eta2 across the tau period
    CHECK(std::abs(en.zeta(z0 + en.tau()) - en.zeta(z0) - en.eta2()) < 1e-9);
}

TEST_CASE("invariance of the global sections at sample points") {
    EllipticNumeric en(Cplx(0.3, 1.2));
    Cplx z(0.23, 0.11);
    CHECK(invariance_defect(en, "Psi1", z) < 1e-10);
    CHECK(invariance_defect(en, "Psi2", z) < 1e-10);
    // theta alone is not invariant under the second transformation
    CHECK(invariance_defect(en, "theta", z) > 0.1);
    CHECK_THROWS_AS(invariance_defect(en, "bogus", z), UnknownName);
}

TEST_CASE("period quadrature returns the lattice data") {
    EllipticNumeric en(Cplx(0.3, 1.2));
    PeriodQuad p = period_quadrature(en, Cplx(-0.5, 0.45));
    CHECK(std::abs(p.a_dz - 1.0) < 1e-10);
    CHECK(std::abs(p.b_dz - en.tau()) < 1e-10);
    CHECK(std::abs(p.a_zeta) < 1e-8);
    CHECK(std::abs(p.b_zeta - 1.0) < 1e-8);
}

TEST_CASE("segments through lattice points are rejected") {
    EllipticNumeric en(Cplx(0.3, 1.2));
    CHECK_THROWS_AS(period_quadrature(en, Cplx(-0.5, 0.005)),
                    SegmentThroughPole);
}

TEST_CASE("evaluation at a lattice point reports the pole") {
    EllipticNumeric en(Cplx(0.3, 1.2));
    CHECK_THROWS_AS(en.wp(Cplx(0.0, 0.0)), PoleAt);
    CHECK_THROWS_AS(en.zeta1(en.tau() + 1.0), PoleAt);
}

TEST_CASE("unknown named evaluator") {
    EllipticNumeric en(Cplx(0.0, 1.0));
    CHECK_THROWS_AS(num_eval(en, "bogus", Cplx(0.1, 0.1)), UnknownName);
}

TEST_CASE("symbolic series match numeric values") {
    Cplx tau(0.3, 1.2);
    EllipticNumeric en(tau);
    WeierstrassSet ws({24, 10});
    Cplx q = en.q();
    Cplx lam = lambda_numeric();
    Cplx z(0.1, 0.0);

    auto eval_qs = [&](const QSeries& s) {
        Cplx acc = 0.0;
        for (int n = 0; n <= s.known_degree(); ++n) {
            Cplx c = 0.0;
            Scalar cn = s.coeff(n);
            for (const auto& [k, v] : cn.terms())
                c += std::pow(lam, k) * v.get_d();
            acc += c * std::pow(q, n);
        }
        return acc;
    };
    auto eval_body = [&](const SuperField& f) {
        Cplx acc = 0.0;
        for (const auto& [n, g] : f.terms())
            acc += eval_qs(g.c1) * std::pow(z, n);
        return acc;
    };

    CHECK(std::abs(eval_body(ws.wp(0)) - en.wp(z)) < 1e-9);
    CHECK(std::abs(eval_body(ws.zeta1()) - en.zeta1(z)) < 1e-9);
    CHECK(std::abs(eval_body(ws.zeta1_dot()) - en.zeta1_dot(z)) < 1e-9);
}
