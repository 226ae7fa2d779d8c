#include "sc/weierstrass.hpp"

namespace sc {

WeierstrassSet::WeierstrassSet(ExpandParams p) : p_(p) {
    eta1_ = named_constant("eta1", p.nq);
    g2_ = named_constant("g2", p.nq);
    g3_ = named_constant("g3", p.nq);

    // wp = z^-2 + sum_{k>=1} c_k z^{2k}; the Laurent coefficients follow
    // from the differential equation (wp')^2 = 4 wp^3 - g2 wp - g3.
    int kmax = std::max(p.nz / 2, 2);
    std::vector<QSeries> c(kmax + 1);
    c[1] = Scalar(Rat(1, 20)) * g2_;
    c[2] = Scalar(Rat(1, 28)) * g3_;
    for (int k = 3; k <= kmax; ++k) {
        QSeries s;
        for (int m = 1; m <= k - 2; ++m) s += c[m] * c[k - 1 - m];
        c[k] = Scalar(Rat(3, (2 * k + 3) * (k - 2))) * s;
    }

    SuperField wp0(p.nz);
    wp0.add_term(-2, GrassCoeff(QSeries(Scalar(1))));
    for (int k = 1; k <= kmax; ++k)
        wp0.add_term(2 * k, GrassCoeff(c[k]));
    wp_.push_back(wp0);

    // zeta: odd antiderivative of -wp with principal part 1/z.
    zeta_ = SuperField(p.nz);
    zeta_.add_term(-1, GrassCoeff(QSeries(Scalar(1))));
    for (int k = 1; k <= kmax; ++k)
        zeta_.add_term(2 * k + 1, GrassCoeff(Scalar(Rat(-1, 2 * k + 1)) * c[k]));

    SuperField t = zeta_ - SuperField::z_pow(1) * eta1_;
    zeta1_ = Scalar::lambda_pow(-2, Rat(-1)) * t;
    zeta1p_ = zeta1_.d_z();
    zeta1pp_ = zeta1p_.d_z();
    zeta1_dot_ = zeta1_.d_tau();
    zeta1p_dot_ = zeta1p_.d_tau();
    zeta1pp_dot_ = zeta1pp_.d_tau();
}

const SuperField& WeierstrassSet::wp(int n) const {
    while (static_cast<int>(wp_.size()) <= n) wp_.push_back(wp_.back().d_z());
    return wp_[n];
}

const SuperField& WeierstrassSet::wp_dot(int n) const {
    while (static_cast<int>(wp_dot_.size()) <= n)
        wp_dot_.push_back(wp(static_cast<int>(wp_dot_.size())).d_tau());
    return wp_dot_[n];
}

}  // namespace sc
