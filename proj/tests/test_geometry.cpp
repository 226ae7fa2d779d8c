#include "doctest.h"

#include "sc/geometry.hpp"

using namespace sc;

namespace {

const Chart& chart() {
    static Chart ch({14, 8});
    return ch;
}

}  // namespace

TEST_CASE("eisenstein derivative defects vanish") {
    for (int k : {2, 4, 6}) {
        QSeries d = ramanujan_defect(k, 8);
        CHECK(d.is_zero_known());
    }
}

TEST_CASE("classical function identities") {
    const Chart& ch = chart();
    int zm = ch.params().nz - 6;
    for (const auto& name : weierstrass_identity_names()) {
        SuperField defect = weierstrass_identity(name, ch);
        Verdict v = defect.is_zero_to_order(zm);
        INFO(name, ": ", v.str());
        CHECK(v.ok());
    }
}

TEST_CASE("vector field on the odd direction kills psi") {
    const Chart& ch = chart();
    Verdict v = D_phi(ch.psi(), ch).is_zero_to_order(ch.params().nz - 6);
    CHECK(v.ok());
}

TEST_CASE("commutator defects vanish on sample fields") {
    const Chart& ch = chart();
    int zm = ch.params().nz - 8;
    SuperField samples[] = {
        SuperField::one(),
        SuperField::theta(),
        SuperField::z_pow(1),
        ch.R() * ch.Psi1() + SuperField::theta() * ch.x(),
    };
    for (const auto& g : samples) {
        CHECK(commutator_tau_defect(g, ch).is_zero_to_order(zm).ok());
        CHECK(commutator_phi_defect(g, ch).is_zero_to_order(zm).ok());
    }
}

TEST_CASE("closure formulas for the flow of the basis sections") {
    const Chart& ch = chart();
    int zm = ch.params().nz - 8;
    for (const auto& name : closure_formula_names()) {
        Verdict v = closure_formula(name, ch).is_zero_to_order(zm);
        INFO(name, ": ", v.str());
        CHECK(v.ok());
    }
    CHECK_THROWS_AS(closure_formula("bogus", ch), UnknownName);
}

TEST_CASE("quasimodular fit recovers a known combination") {
    int nq = 8;
    QSeries e2 = eisenstein(2, nq), e4 = eisenstein(4, nq), e6 = eisenstein(6, nq);
    QSeries target = (e2 * e4 + e6 * Scalar(3)) * Scalar(Rat(1, 7));
    QuasimodularFit fit = quasimodular_fit(target);
    CHECK(fit.weight == 6);
    CHECK((fit.recombine(nq) - target).is_zero_known());
    CHECK(fit.coeffs.at({1, 1, 0}) == Scalar(Rat(1, 7)));
    CHECK(fit.coeffs.at({0, 0, 1}) == Scalar(Rat(3, 7)));
}

TEST_CASE("series outside the ring are rejected") {
    // 1 + q is not a quasimodular form of any bounded weight
    QSeries s = QSeries(Scalar(1)) + QSeries::q_pow(1);
    CHECK_THROWS_AS(quasimodular_fit(s.truncated(10), 4), UnsupportedWeight);
}

TEST_CASE("algebra decomposition round-trips") {
    const Chart& ch = chart();
    SuperField f = ch.x() * ch.x() * ch.psi() * Scalar(Rat(2, 3)) +
                   ch.y() * ch.x() * QSeries::q_pow(1) +
                   ch.phitilde() * ch.y() * ch.psi() * Scalar(5);
    AlgebraDecomposition d = algebra_decompose(f, ch);
    CHECK(d.remainder_zero.ok());
    CHECK((d.coeffs.at({0, 2, 1}).first - QSeries(Scalar(Rat(2, 3)))).is_zero_known());
    CHECK((d.coeffs.at({1, 1, 0}).first - QSeries::q_pow(1)).is_zero_known());
    CHECK((d.coeffs.at({1, 0, 1}).second - QSeries(Scalar(5))).is_zero_known());
    SuperField back = algebra_recombine(d, ch);
    CHECK((f - back).is_zero_to_order(ch.params().nz - 8).ok());
}

TEST_CASE("odd-order pole cannot be decomposed") {
    const Chart& ch = chart();
    CHECK_THROWS_AS(algebra_decompose(SuperField::z_pow(-1), ch),
                    ResidueObstruction);
}

TEST_CASE("local expansions at the marked point") {
    const Chart& ch = chart();
    Rat h(1, 2);

    SuperField e = blowup_expansion("inv_y", ch);
    CHECK(e.coeff(3).c1.coeff(0) == Scalar::lambda_pow(6, -h));
    CHECK(e.coeff(0).c1.is_zero_known());

    e = blowup_expansion("x_over_y", ch);
    CHECK(e.coeff(1).c1.coeff(0) == Scalar::lambda_pow(2, -h));

    e = blowup_expansion("psi_over_y", ch);
    CHECK(e.coeff(2).cph.coeff(0) == Scalar::lambda_pow(5, -h));
    CHECK(e.coeff(3).cth.coeff(0) == Scalar::lambda_pow(7, -h));

    e = blowup_expansion("phi_prime", ch);
    CHECK(e.coeff(3).cth.coeff(0) == Scalar::lambda_pow(7, -h));

    e = blowup_expansion("phi_prime_y", ch);
    CHECK(e.coeff(0).cth.coeff(0) == Scalar::lambda_pow(1));

    e = blowup_expansion("sbar_rel", ch);
    CHECK(e.coeff(0).c1.coeff(0) == Scalar::lambda_pow(1));
    CHECK(e.coeff(0).cthph.coeff(1) ==
          Scalar::lambda_pow(3, Rat(-2)));  // q-coefficient of the top slot

    e = blowup_expansion("step2", ch);
    CHECK(e.coeff(0).cth.coeff(0) == Scalar::lambda_pow(1));

    CHECK_THROWS_AS(blowup_expansion("bogus", ch), UnknownName);
}
