#pragma once

#include "sc/weierstrass.hpp"

namespace sc {

// A chart on the universal odd-spin genus-1 supercurve: all the standard
// superfields expanded around z = 0, with lazy caching of D^n R.
class Chart {
  public:
    explicit Chart(ExpandParams p = {});

    const ExpandParams& params() const { return p_; }
    const WeierstrassSet& ws() const { return ws_; }

    // R = wp + theta phi wp_dot and its superderivatives D^n R (n >= 0).
    const SuperField& DnR(int n) const;
    const SuperField& R() const { return DnR(0); }

    const SuperField& Psi1() const { return Psi1_; }
    const SuperField& Psi2() const { return Psi2_; }

    // Normalized coordinates and sections.
    const SuperField& x() const { return x_; }
    const SuperField& y() const { return y_; }
    const SuperField& psi() const { return psi_; }          // lambda Psi1
    const SuperField& phitilde() const { return phitilde_; }  // lambda phi
    const SuperField& Psi2t() const { return Psi2t_; }      // lambda^-1 Psi2

    // Dtilde = lambda^-1 (1 - lambda^2 E2/12 theta phi) D, as an operator.
    SuperField Dt(const SuperField& f) const;

    // The seven structural relations, each returned as (lhs - rhs); names:
    // DPsi1, DPsi2, Psi2eq, DRx, D3Ry, Dpsi, cubic.
    SuperField relation(const std::string& name) const;
    static const std::vector<std::string>& relation_names();

  private:
    ExpandParams p_;
    WeierstrassSet ws_;
    mutable std::vector<SuperField> dnr_;
    SuperField Psi1_, Psi2_, x_, y_, psi_, phitilde_, Psi2t_;
    QSeries e2_;
};

}  // namespace sc
