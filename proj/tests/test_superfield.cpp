#include <doctest.h>

#include "sc/superfield.hpp"

using namespace sc;

namespace {

bool exact_equal(const SuperField& a, const SuperField& b, int zmax) {
    return a.eq_to_order(b, zmax).ok();
}

}  // namespace

TEST_CASE("grassmann products") {
    SuperField th = SuperField::theta();
    SuperField ph = SuperField::phi();
    CHECK(exact_equal(th * ph, SuperField::theta_phi(), 0));
    CHECK(exact_equal(ph * th, -SuperField::theta_phi(), 0));
    CHECK((th * th).empty());
    CHECK((ph * ph).empty());

    // (z^-1 + theta)(z + phi) = 1 + z^-1 phi + theta z + theta phi
    SuperField a = SuperField::z_pow(-1) + th;
    SuperField b = SuperField::z_pow(1) + ph;
    SuperField expect = SuperField::one() +
                        SuperField::z_pow(-1) * ph +
                        th * SuperField::z_pow(1) + SuperField::theta_phi();
    CHECK(exact_equal(a * b, expect, 2));
}

TEST_CASE("superfield inverse") {
    CHECK(exact_equal(SuperField::z_pow(1).inv(), SuperField::z_pow(-1), 0));
    SuperField u = SuperField::one() + SuperField::theta_phi();
    CHECK(exact_equal(u.inv(), SuperField::one() - SuperField::theta_phi(), 0));
    CHECK(exact_equal(u * u.inv(), SuperField::one(), 0));

    SuperField f = SuperField::z_pow(-2, Scalar(3)) + SuperField::one() +
                   SuperField::theta();
    SuperField g = f.inv(10);
    CHECK(exact_equal(f * g, SuperField::one(), 6));

    CHECK_THROWS_AS(SuperField::theta().inv(), NonUnitLeading);
}

TEST_CASE("derivations") {
    SuperField thph = SuperField::theta_phi();
    CHECK(exact_equal(thph.d_theta(), SuperField::phi(), 0));
    CHECK(exact_equal(thph.d_phi(), -SuperField::theta(), 0));

    CHECK(exact_equal(SuperField::theta().D(), SuperField::one(), 0));
    CHECK(exact_equal(SuperField::z_pow(1).D(), SuperField::theta(), 1));

    // D^2 = d/dz on f = z^-2 + theta z
    SuperField f = SuperField::z_pow(-2) + SuperField::theta() * SuperField::z_pow(1);
    CHECK(exact_equal(f.D().D(), f.d_z(), 2));

    // d_tau multiplies q^n coefficients by lambda^2 n
    SuperField e2 = SuperField::from_qseries(eisenstein(2, 4));
    SuperField dt = e2.d_tau();
    QSeries expect = Scalar::lambda_pow(2) * eisenstein(2, 4).partial();
    CHECK((dt.coeff(0).c1 - expect).is_zero_to_accuracy().ok());
}

TEST_CASE("parity projections") {
    SuperField f = SuperField::one() + SuperField::theta() +
                   SuperField::phi(Scalar(2)) + SuperField::theta_phi(Scalar(3));
    CHECK(exact_equal(f.even_part() + f.odd_part(), f, 0));
    CHECK(f.even_part().is_even_known());
    CHECK(f.odd_part().is_odd_known());
    CHECK_FALSE(f.is_even_known());
}

TEST_CASE("z-accuracy propagation in products") {
    SuperField a = SuperField::z_pow(-2) + SuperField::z_pow(5);
    SuperField t = a.truncated_z(3);  // knows z^-2 through z^3
    CHECK(t.zacc() == 3);
    CHECK(t.nmin() == -2);
    SuperField p = t * t;  // accuracy 3 + (-2) = 1
    CHECK(p.zacc() == 1);
    SuperField e = SuperField::z_pow(-2) * SuperField::z_pow(-2);
    CHECK(e.z_exact());
}

TEST_CASE("q-accuracy survives exact cancellation") {
    SuperField a = SuperField::from_qseries(eisenstein(2, 5));
    SuperField diff = a - a;
    CHECK(diff.empty());
    CHECK(diff.qacc() == 5);
    Verdict v = diff.is_zero_to_order(0);
    CHECK(v.ok());
    CHECK(v.q_order == 5);
}

TEST_CASE("zero verdicts") {
    SuperField f = SuperField::z_pow(2, Scalar(Rat(1, 7)));
    Verdict v = f.is_zero_to_order(3);
    CHECK(v.status == Verdict::Status::fails);
    SuperField g = SuperField::zero();
    CHECK(g.is_zero_to_order(10).ok());
    SuperField t = f.truncated_z(1);
    CHECK(t.is_zero_to_order(5).status == Verdict::Status::insufficient);
}
