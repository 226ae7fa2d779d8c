#include <doctest.h>

#include "sc/qseries.hpp"

using namespace sc;

TEST_CASE("scalar arithmetic and canonicalization") {
    Scalar a(Rat(2, 4));
    CHECK(a.coeff(0) == Rat(1, 2));
    CHECK((a + a).coeff(0) == Rat(1));
    CHECK((a - a).is_zero());
    Scalar z(Rat(0, 3));
    CHECK(z.is_zero());

    Scalar l = Scalar::lambda_pow(3, Rat(2, 6));
    CHECK(l.coeff(3) == Rat(1, 3));
    CHECK((l * l).coeff(6) == Rat(1, 9));
    CHECK(l.inv().coeff(-3) == Rat(3));
    CHECK_THROWS_AS((Scalar(1) + l).inv(), NonUnitConstantTerm);
}

TEST_CASE("qseries product and inverse") {
    QSeries one{Scalar(1)};
    QSeries q = QSeries::q_pow(1);
    CHECK(((one + q) * (one - q)).coeff(2) == Scalar(-1));
    CHECK(((one + q) * (one - q)).coeff(1) == Scalar(0));

    QSeries g = (one - q).inv(8);
    for (int n = 0; n <= 8; ++n) CHECK(g.coeff(n) == Scalar(1));

    QSeries lam{Scalar::lambda_pow(2)};
    CHECK(lam.inv().coeff(0) == Scalar::lambda_pow(-2));
    CHECK(lam.inv().exact());

    CHECK_THROWS_AS((q + QSeries::q_pow(2)).inv(), NonUnitConstantTerm);
}

TEST_CASE("qseries accuracy propagation") {
    QSeries a = eisenstein(2, 4);
    QSeries b = eisenstein(4, 7);
    CHECK(a.accuracy() == 4);
    CHECK((a * b).accuracy() == 4);
    CHECK((a + b).accuracy() == 4);
    CHECK(a.truncated(2).accuracy() == 2);
    // E2*E2 at Nq=2: 1 - 48q + 432q^2
    QSeries sq = (a * a).truncated(2);
    CHECK(sq.coeff(0) == Scalar(1));
    CHECK(sq.coeff(1) == Scalar(-48));
    CHECK(sq.coeff(2) == Scalar(432));
}

TEST_CASE("eisenstein series coefficients") {
    QSeries e2 = eisenstein(2, 4);
    CHECK(e2.coeff(0) == Scalar(1));
    CHECK(e2.coeff(1) == Scalar(-24));
    CHECK(e2.coeff(2) == Scalar(-72));
    CHECK(e2.coeff(3) == Scalar(-96));
    CHECK(e2.coeff(4) == Scalar(-168));

    QSeries e4 = eisenstein(4, 3);
    CHECK(e4.coeff(1) == Scalar(240));
    CHECK(e4.coeff(2) == Scalar(2160));
    CHECK(e4.coeff(3) == Scalar(6720));

    QSeries e6 = eisenstein(6, 2);
    CHECK(e6.coeff(1) == Scalar(-504));
    CHECK(e6.coeff(2) == Scalar(-16632));

    CHECK_THROWS_AS(eisenstein(8, 2), UnsupportedWeight);
}

TEST_CASE("ramanujan derivative identities") {
    int nq = 10;
    QSeries e2 = eisenstein(2, nq), e4 = eisenstein(4, nq),
            e6 = eisenstein(6, nq);
    CHECK((Scalar(12) * e2.partial() - (e2 * e2 - e4))
              .is_zero_to_accuracy()
              .ok());
    CHECK((Scalar(3) * e4.partial() - (e2 * e4 - e6)).is_zero_to_accuracy().ok());
    CHECK((Scalar(2) * e6.partial() - (e2 * e6 - e4 * e4))
              .is_zero_to_accuracy()
              .ok());
    CHECK(QSeries(Scalar(1)).partial().is_zero_known());
}

TEST_CASE("named quasimodular constants") {
    QSeries eta1 = named_constant("eta1", 1);
    CHECK(eta1.coeff(0) == Scalar::lambda_pow(4, Rat(-1, 12)));
    CHECK(eta1.coeff(1) == Scalar::lambda_pow(4, Rat(2)));

    QSeries g3 = named_constant("g3", 0);
    CHECK(g3.coeff(0) == Scalar::lambda_pow(12, Rat(-1, 216)));

    QSeries g2 = named_constant("g2", 0);
    CHECK(g2.coeff(0) == Scalar::lambda_pow(8, Rat(1, 12)));

    CHECK(named_constant("eta1_dot", 0).is_zero_known());
    // eta1_dot = -lambda^6 * partial(E2)/12 = -lambda^6 (E2^2-E4)/144
    QSeries ed = named_constant("eta1_dot", 3);
    QSeries e2 = eisenstein(2, 3), e4 = eisenstein(4, 3);
    QSeries expect =
        Scalar::lambda_pow(6, Rat(-1, 144)) * (e2 * e2 - e4);
    CHECK((ed - expect).is_zero_to_accuracy().ok());

    CHECK_THROWS_AS(named_constant("bogus", 2), UnknownName);
}
