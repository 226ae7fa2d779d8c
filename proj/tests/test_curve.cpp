#include <doctest.h>

#include "sc/curve.hpp"

using namespace sc;

namespace {

const Chart& chart() {
    static Chart ch({14, 8});
    return ch;
}

}  // namespace

TEST_CASE("leading terms of the standard sections") {
    const Chart& ch = chart();
    // Psi1 = theta + lambda^-2 phi z^-1 + O(z)
    CHECK((ch.Psi1().coeff(0).cth - QSeries(Scalar(1))).is_zero_to_accuracy().ok());
    CHECK((ch.Psi1().coeff(-1).cph - QSeries(Scalar::lambda_pow(-2)))
              .is_zero_to_accuracy()
              .ok());
    // Psi2 has leading theta-term lambda^-2 z^-2
    CHECK((ch.Psi2().coeff(-2).cth - QSeries(Scalar::lambda_pow(-2)))
              .is_zero_to_accuracy()
              .ok());
    // x = lambda^-4 z^-2 + ...
    CHECK((ch.x().coeff(-2).c1 - QSeries(Scalar::lambda_pow(-4)))
              .is_zero_to_accuracy()
              .ok());
    // D^2 R = -2 z^-3 + ..., DR = -2 theta z^-3 + ...
    CHECK((ch.DnR(2).coeff(-3).c1 - QSeries(Scalar(-2))).is_zero_to_accuracy().ok());
    CHECK((ch.DnR(1).coeff(-3).cth - QSeries(Scalar(-2))).is_zero_to_accuracy().ok());
    // y x has leading -2 lambda^-10 z^-5
    CHECK(((ch.y() * ch.x()).coeff(-5).c1 -
           QSeries(Scalar::lambda_pow(-10, Rat(-2))))
              .is_zero_to_accuracy()
              .ok());
}

TEST_CASE("D^2 acts as d/dz on R") {
    const Chart& ch = chart();
    CHECK((ch.DnR(2) - ch.R().d_z()).is_zero_to_order(8).ok());
}

TEST_CASE("structural relations hold") {
    const Chart& ch = chart();
    for (const auto& name : Chart::relation_names()) {
        INFO(name);
        CHECK(ch.relation(name).is_zero_to_order(6).ok());
    }
    CHECK_THROWS_AS(ch.relation("nonsense"), UnknownName);
}

TEST_CASE("Dtilde operator consistency") {
    const Chart& ch = chart();
    // Dt(psi) = 1 + phitilde psi x  (one of the structural relations, applied
    // through the public operator)
    SuperField lhs = ch.Dt(ch.psi());
    SuperField rhs = SuperField::one() + ch.phitilde() * ch.psi() * ch.x();
    CHECK((lhs - rhs).is_zero_to_order(6).ok());
}

TEST_CASE("relations are stable under order changes") {
    // raising orders never flips a verdict
    Chart small({10, 4});
    for (const auto& name : Chart::relation_names()) {
        INFO(name);
        CHECK(small.relation(name).is_zero_to_order(3).ok());
    }
}
