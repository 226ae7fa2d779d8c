#pragma once

#include "sc/curve.hpp"
#include "sc/forms.hpp"

namespace sc {

// A function on the base: body(q) + phi * ph(q).
struct BaseFunction {
    QSeries body, ph;

    bool is_zero_known() const { return body.is_zero_known() && ph.is_zero_known(); }
    BaseFunction operator+(const BaseFunction& o) const {
        return {body + o.body, ph + o.ph};
    }
    BaseFunction operator-(const BaseFunction& o) const {
        return {body - o.body, ph - o.ph};
    }
    BaseFunction operator-() const { return {-body, -ph}; }
    BaseFunction operator*(const Scalar& s) const { return {body * s, ph * s}; }
    BaseFunction operator*(const QSeries& s) const { return {body * s, ph * s}; }
    SuperField as_field() const {
        return SuperField::from_qseries(body) + SuperField::phi() * ph;
    }
    std::string str() const;
};

// Coordinates of a global function over the standard spanning set
//   1, Psi1, Psi2, D^n R (0 <= n <= depth),
// with BaseFunction coefficients, plus a remainder whose vanishing verdict
// records the orders through which the decomposition is certified.
struct Decomposition {
    BaseFunction c_one, c_psi1, c_psi2;
    std::vector<BaseFunction> c_dnr;
    SuperField remainder;
    Verdict remainder_zero{Verdict::Status::insufficient, 0, 0, ""};
};

Decomposition decompose(const SuperField& f, const Chart& ch,
                        int depth = kDefaultDepth);
SuperField recombine(const Decomposition& d, const Chart& ch);

// A polynomial a0 + tau*a1 in the formal variable tau with base-function
// coefficients; tau-derivative is lambda^2 q d/dq plus the a1 shift.
struct TauPoly {
    BaseFunction a0, a1;

    bool is_zero_known() const { return a0.is_zero_known() && a1.is_zero_known(); }
    TauPoly operator+(const TauPoly& o) const { return {a0 + o.a0, a1 + o.a1}; }
    TauPoly operator-(const TauPoly& o) const { return {a0 - o.a0, a1 - o.a1}; }
    TauPoly operator-() const { return {-a0, -a1}; }
    TauPoly d_tau() const;
    std::string str() const;
};

// A cohomology class written over the basis [s Psi1], [s Psi2].
struct CohClass {
    TauPoly c1, c2;

    CohClass operator+(const CohClass& o) const { return {c1 + o.c1, c2 + o.c2}; }
    CohClass operator-(const CohClass& o) const { return {c1 - o.c1, c2 - o.c2}; }
    Verdict is_zero(int zmax) const;
    std::string str() const;
};

// Reduce the class of s*f in the cokernel of D to the basis [s Psi1],
// [s Psi2], using [D^{n>=1} R] = 0, [R] = -eta1 [1], [1] = -phi [Psi2].
CohClass reduce_coker(const SuperField& f, const Chart& ch,
                      int depth = kDefaultDepth);

// The Gauss-Manin connection on the two basis classes, computed through the
// full pipeline: lift to a total 1-form, take d, reduce modulo the relative
// directions, contract against s, and reduce in the cokernel.
struct GMConnection {
    // nabla [s Psi_i] = tau_mat[i][0] [s Psi1] + tau_mat[i][1] [s Psi2]
    // tensor dtau, plus the same with phi_mat tensor dphi.
    CohClass tau_row[2];
    CohClass phi_row[2];
};

GMConnection gm_connection(const Chart& ch, int depth = kDefaultDepth);

// The total lifted 1-forms used by gm_connection (exposed for testing).
Form gm_lift(int i, const Chart& ch);

// Apply nabla_tau / nabla_phi to a general class, using the computed
// connection together with the Leibniz rule on TauPoly coefficients.
CohClass nabla_tau(const CohClass& c, const GMConnection& gm);
CohClass nabla_phi(const CohClass& c, const GMConnection& gm);

// Check that e = [s Psi1] - tau [s Psi2] and f = [s Psi2] are horizontal.
Verdict horizontal_check(const Chart& ch, const GMConnection& gm, int zmax);

// Check the relations [s] = [s Psi2] phi and [s theta phi] = [s Psi1] phi in
// the cokernel model.
Verdict period_relations(const Chart& ch, int zmax);

}  // namespace sc
