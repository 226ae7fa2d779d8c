#pragma once

#include "sc/curve.hpp"

namespace sc {

// The lifts of d/dtau and d/dphi to vector fields on the total space:
//   D_tau = d/dtau + (zeta1 + theta phi zeta1_dot) d^2/dz^2-part via D^2,
// implemented directly in coordinates:
//   D_tau = d_tau + (zeta1 + 1/2 theta phi zeta1_dot) d_z
//                 + 1/2 (theta zeta1' + phi zeta1_dot) d_theta,
//   D_phi = d_phi + (phi zeta1^2 - theta zeta1) d_z
//                 + (zeta1 - theta phi zeta1 zeta1') d_theta.
SuperField D_tau(const SuperField& f, const Chart& ch);
SuperField D_phi(const SuperField& f, const Chart& ch);

// Commutators with the superderivative D, as operator identities evaluated
// on a test field g:
//   [D_tau, D](g) = -1/2 D(Psi2) D(g),
//   {D_phi, D}(g) = zeta1' Psi1 D(g).
SuperField commutator_tau_defect(const SuperField& g, const Chart& ch);
SuperField commutator_phi_defect(const SuperField& g, const Chart& ch);

// The four closure formulas, returned as (lhs - rhs):
//   Dtau_Psi1, Dtau_Psi2, Dphi_psi, Dphi_Psi2.
SuperField closure_formula(const std::string& name, const Chart& ch);
const std::vector<std::string>& closure_formula_names();

// The three quasi-periodic Weierstrass identities, as (lhs - rhs):
//   zeta1dot:    zeta1_dot + zeta1 zeta1' - 1/2 lambda^-4 wp'
//   wpdot:       wp_dot + zeta1 wp' - lambda^-2 (2 wp^2 + lambda^4 (E2/6) wp - g2/3)
//   wpdot_prime: wp_dot' + zeta1 wp'' - 3 lambda^-2 (wp + lambda^4 E2/12) wp'
SuperField weierstrass_identity(const std::string& name, const Chart& ch);
const std::vector<std::string>& weierstrass_identity_names();

// Ramanujan derivative defects (zero iff the identity holds):
//   k=2: 12*qdq(E2) - (E2^2 - E4), k=4: 3*qdq(E4) - (E2 E4 - E6),
//   k=6: 2*qdq(E6) - (E2 E6 - E4^2).
QSeries ramanujan_defect(int k, int nq);

// Express a base q-series as an isobaric polynomial in E2, E4, E6 of a
// single weight; tries weights 0,2,...,max_weight and returns the monomial
// coefficients keyed by (a,b,c) with 2a+4b+6c = weight.  Throws
// UnsupportedWeight if no weight fits to the series' accuracy.
struct QuasimodularFit {
    int weight = 0;
    std::map<std::array<int, 3>, Scalar> coeffs;
    QSeries recombine(int nq) const;
    std::string str() const;
};
QuasimodularFit quasimodular_fit(const QSeries& s, int max_weight = 16);

// Decompose a global function over the affine-coordinate basis
//   x^n, y x^n, x^n psi, y x^n psi
// with base-function coefficients (body + phitilde part), by matching pole
// orders and parities.
struct AlgebraDecomposition {
    // keyed by (uses_y, power of x, uses_psi) -> coefficient a(q) + phitilde*b(q)
    std::map<std::tuple<int, int, int>, std::pair<QSeries, QSeries>> coeffs;
    SuperField remainder;
    Verdict remainder_zero{Verdict::Status::insufficient, 0, 0, ""};
};
AlgebraDecomposition algebra_decompose(const SuperField& f, const Chart& ch);
SuperField algebra_recombine(const AlgebraDecomposition& d, const Chart& ch);

// Expansions at the marked point of the blow-up chart data: each entry is
// the named quantity expanded in z, for comparison with the closed forms.
// Names: inv_y, x_over_y, psi_over_y, phi_prime, phi_prime_y, sbar_rel,
// step2.
SuperField blowup_expansion(const std::string& name, const Chart& ch);
const std::vector<std::string>& blowup_names();

}  // namespace sc
