#include "sc/curve.hpp"

namespace sc {

Chart::Chart(ExpandParams p) : p_(p), ws_(p) {
    e2_ = eisenstein(2, p.nq);

    const SuperField th = SuperField::theta();
    const SuperField ph = SuperField::phi();

    Psi1_ = th - ph * ws_.zeta1();
    Psi2_ = ph * ws_.zeta1_dot() + th * ws_.zeta1p();

    dnr_.push_back(ws_.wp(0) + SuperField::theta_phi() * ws_.wp_dot(0));

    SuperField pref_x =
        SuperField::one() + SuperField::theta_phi(Scalar::lambda_pow(2, Rat(-1, 6))) * e2_;
    SuperField pref_y =
        SuperField::one() + SuperField::theta_phi(Scalar::lambda_pow(2, Rat(-1, 4))) * e2_;
    x_ = Scalar::lambda_pow(-4) * (pref_x * R());
    y_ = Scalar::lambda_pow(-6) * (pref_y * DnR(2));
    psi_ = Scalar::lambda_pow(1) * Psi1_;
    phitilde_ = SuperField::phi(Scalar::lambda_pow(1));
    Psi2t_ = Scalar::lambda_pow(-1) * Psi2_;
}

const SuperField& Chart::DnR(int n) const {
    while (static_cast<int>(dnr_.size()) <= n) dnr_.push_back(dnr_.back().D());
    return dnr_[n];
}

SuperField Chart::Dt(const SuperField& f) const {
    SuperField pref =
        SuperField::one() + SuperField::theta_phi(Scalar::lambda_pow(2, Rat(-1, 12))) * e2_;
    return Scalar::lambda_pow(-1) * (pref * f.D());
}

const std::vector<std::string>& Chart::relation_names() {
    static const std::vector<std::string> names = {
        "DPsi1", "DPsi2", "Psi2eq", "DRx", "D3Ry", "Dpsi", "cubic"};
    return names;
}

SuperField Chart::relation(const std::string& name) const {
    const SuperField ph = SuperField::phi();
    auto qs = [&](const std::string& n) {
        return SuperField::from_qseries(named_constant(n, p_.nq));
    };
    if (name == "DPsi1")
        return Psi1_.D() - SuperField::one() - ph * Psi2_;
    // In DPsi2 the constant is eta1(tau + theta*phi) = eta1 + theta*phi*eta1_dot,
    // matching the shifted argument in R.
    if (name == "DPsi2")
        return Psi2_.D() -
               Scalar::lambda_pow(-2) *
                   (R() + qs("eta1") + SuperField::theta_phi() * named_constant("eta1_dot", p_.nq));
    if (name == "Psi2eq")
        return Psi2t_ - (x_ * psi_ + Scalar(Rat(1, 2)) * phitilde_ * y_ -
                         Scalar(Rat(1, 12)) * (qs("E2") * psi_));
    if (name == "DRx")
        return Dt(x_) - (y_ * psi_ +
                         phitilde_ * (Scalar(2) * x_ * x_ -
                                      Scalar(Rat(1, 36)) * qs("E4")));
    if (name == "D3Ry")
        return Dt(y_) - ((Scalar(6) * x_ * x_ - Scalar(Rat(1, 24)) * qs("E4")) * psi_ +
                         Scalar(3) * phitilde_ * x_ * y_);
    if (name == "Dpsi")
        return Dt(psi_) - (SuperField::one() + phitilde_ * psi_ * x_);
    if (name == "cubic")
        return y_ * y_ - Scalar(4) * x_ * x_ * x_ +
               Scalar(Rat(1, 12)) *
                   ((qs("E4") - Scalar(Rat(1, 3)) * (qs("E6") * (psi_ * phitilde_))) * x_) -
               Scalar(Rat(1, 216)) *
                   (qs("E6") - Scalar(Rat(1, 2)) * (qs("E4") * qs("E4") * (psi_ * phitilde_)));
    throw UnknownName("relation " + name);
}

}  // namespace sc
