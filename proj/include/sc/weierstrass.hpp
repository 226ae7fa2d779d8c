#pragma once

#include "sc/superfield.hpp"

namespace sc {

// Expansion parameters for the symbolic Weierstrass/elliptic data.
struct ExpandParams {
    int nz = kDefaultNz;  // z-accuracy: coefficients through z^nz
    int nq = kDefaultNq;  // q-accuracy: coefficients through q^nq
};

// The classical Weierstrass functions as bodies (plain superfields with only
// c1 components), expanded around z = 0 over the ring of q-series.
//
// wp has leading term z^-2; zeta is the odd antiderivative of -wp with
// leading z^-1.  zeta1 = -lambda^-2 (zeta - eta1 z) and its derivatives and
// tau-derivatives are the normalized versions used throughout.
class WeierstrassSet {
  public:
    explicit WeierstrassSet(ExpandParams p = {});

    const ExpandParams& params() const { return p_; }

    // n-th z-derivative of wp (n >= 0), cached.
    const SuperField& wp(int n = 0) const;
    // d/dtau of wp^(n) (tau-derivative includes the lambda^2 from dq/dtau).
    const SuperField& wp_dot(int n = 0) const;

    const SuperField& zeta() const { return zeta_; }
    const SuperField& zeta1() const { return zeta1_; }
    const SuperField& zeta1p() const { return zeta1p_; }    // d/dz zeta1
    const SuperField& zeta1pp() const { return zeta1pp_; }  // d^2/dz^2 zeta1
    const SuperField& zeta1_dot() const { return zeta1_dot_; }
    const SuperField& zeta1p_dot() const { return zeta1p_dot_; }
    const SuperField& zeta1pp_dot() const { return zeta1pp_dot_; }

    QSeries eta1() const { return eta1_; }
    QSeries g2() const { return g2_; }
    QSeries g3() const { return g3_; }

  private:
    ExpandParams p_;
    QSeries eta1_, g2_, g3_;
    mutable std::vector<SuperField> wp_, wp_dot_;
    SuperField zeta_, zeta1_, zeta1p_, zeta1pp_;
    SuperField zeta1_dot_, zeta1p_dot_, zeta1pp_dot_;
};

}  // namespace sc
