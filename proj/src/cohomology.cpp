#include "sc/cohomology.hpp"

namespace sc {

namespace {

enum Component { kBody, kTheta, kPhi, kThetaPhi };

QSeries component(const GrassCoeff& g, Component c) {
    switch (c) {
        case kBody: return g.c1;
        case kTheta: return g.cth;
        case kPhi: return g.cph;
        case kThetaPhi: return g.cthph;
    }
    return {};
}

// Divide off the exact leading scalar of cand's `comp` component at z^n and
// subtract; returns the extracted base coefficient.
QSeries eliminate(SuperField& r, const SuperField& cand, Component comp, int n) {
    QSeries target = component(r.coeff(n), comp);
    if (target.is_zero_known()) return {};
    QSeries lead = component(cand.coeff(n), comp);
    // principal parts of the basis elements are exact scalar monomials
    Scalar l0 = lead.coeff(0);
    QSeries b = l0.inv() * target;
    r = r - cand * b;
    return b;
}

}  // namespace

std::string BaseFunction::str() const {
    std::string s;
    if (!body.is_zero_known()) s += "(" + body.str() + ")";
    if (!ph.is_zero_known()) {
        if (!s.empty()) s += " + ";
        s += "phi*(" + ph.str() + ")";
    }
    return s.empty() ? "0" : s;
}

Decomposition decompose(const SuperField& f, const Chart& ch, int depth) {
    Decomposition d;
    d.c_dnr.assign(depth + 1, BaseFunction{});
    const SuperField ph = SuperField::phi();
    SuperField r = f;

    auto need = [&](int idx, int dd) {
        if (idx > depth)
            throw DepthExceeded("pole of depth " + std::to_string(dd) +
                                " needs D^" + std::to_string(idx) +
                                "R beyond depth cap " + std::to_string(depth));
        return idx;
    };

    int deepest = -r.nmin();
    // Pass 1: body and theta components against 1, Psi1, Psi2, D^n R.
    for (int dd = deepest; dd >= 2; --dd) {
        if (!component(r.coeff(-dd), kBody).is_zero_known()) {
            int idx = need(2 * (dd - 2), dd);
            d.c_dnr[idx].body += eliminate(r, ch.DnR(idx), kBody, -dd);
        }
        if (!component(r.coeff(-dd), kTheta).is_zero_known()) {
            if (dd == 2) {
                d.c_psi2.body += eliminate(r, ch.Psi2(), kTheta, -2);
            } else {
                int idx = need(2 * (dd - 3) + 1, dd);
                d.c_dnr[idx].body += eliminate(r, ch.DnR(idx), kTheta, -dd);
            }
        }
    }
    for (Component c : {kBody, kTheta})
        if (!component(r.coeff(-1), c).is_zero_known())
            throw ResidueObstruction("simple pole in " +
                                     std::string(c == kBody ? "body" : "theta") +
                                     " component");
    d.c_psi1.body += eliminate(r, ch.Psi1(), kTheta, 0);
    d.c_one.body += eliminate(r, SuperField::one(), kBody, 0);

    // Pass 2: phi and theta-phi components against phi times the basis.
    deepest = -r.nmin();
    for (int dd = deepest; dd >= 2; --dd) {
        if (!component(r.coeff(-dd), kPhi).is_zero_known()) {
            int idx = need(2 * (dd - 2), dd);
            d.c_dnr[idx].ph += eliminate(r, ph * ch.DnR(idx), kPhi, -dd);
        }
        if (!component(r.coeff(-dd), kThetaPhi).is_zero_known()) {
            if (dd == 2) {
                d.c_psi2.ph += eliminate(r, ph * ch.Psi2(), kThetaPhi, -2);
            } else {
                int idx = need(2 * (dd - 3) + 1, dd);
                d.c_dnr[idx].ph += eliminate(r, ph * ch.DnR(idx), kThetaPhi, -dd);
            }
        }
    }
    for (Component c : {kPhi, kThetaPhi})
        if (!component(r.coeff(-1), c).is_zero_known())
            throw ResidueObstruction("simple pole in " +
                                     std::string(c == kPhi ? "phi" : "theta-phi") +
                                     " component");
    d.c_psi1.ph += eliminate(r, ph * ch.Psi1(), kThetaPhi, 0);
    d.c_one.ph += eliminate(r, ph, kPhi, 0);

    d.remainder = r;
    int zm = r.z_exact() ? (r.empty() ? 0 : r.terms().rbegin()->first) : r.zacc();
    d.remainder_zero = r.is_zero_to_order(zm);
    return d;
}

SuperField recombine(const Decomposition& d, const Chart& ch) {
    const SuperField ph = SuperField::phi();
    auto with = [&](const SuperField& b, const BaseFunction& c) {
        return b * c.body + (ph * b) * c.ph;
    };
    SuperField r = with(SuperField::one(), d.c_one) + with(ch.Psi1(), d.c_psi1) +
                   with(ch.Psi2(), d.c_psi2);
    for (size_t n = 0; n < d.c_dnr.size(); ++n)
        if (!d.c_dnr[n].is_zero_known())
            r = r + with(ch.DnR(static_cast<int>(n)), d.c_dnr[n]);
    return r;
}

TauPoly TauPoly::d_tau() const {
    Scalar l2 = Scalar::lambda_pow(2);
    auto dq = [&](const BaseFunction& b) {
        return BaseFunction{l2 * b.body.partial(), l2 * b.ph.partial()};
    };
    return {dq(a0) + a1, dq(a1)};
}

std::string TauPoly::str() const {
    std::string s = a0.str();
    if (!a1.is_zero_known()) s += " + tau*[" + a1.str() + "]";
    return s;
}

Verdict CohClass::is_zero(int zmax) const {
    int qo = kExact;
    for (const TauPoly* t : {&c1, &c2})
        for (const BaseFunction* b : {&t->a0, &t->a1})
            for (const QSeries* s : {&b->body, &b->ph}) {
                Verdict v = s->is_zero_to_accuracy();
                if (v.status == Verdict::Status::fails) return v;
                qo = std::min(qo, s->accuracy());
            }
    return Verdict::holds(zmax, qo);
}

std::string CohClass::str() const {
    return "[" + c1.str() + "] * [sPsi1] + [" + c2.str() + "] * [sPsi2]";
}

CohClass reduce_coker(const SuperField& f, const Chart& ch, int depth) {
    Decomposition d = decompose(f, ch, depth);
    if (d.remainder_zero.status == Verdict::Status::fails)
        throw ResidueObstruction("decomposition remainder nonzero: " +
                                 d.remainder_zero.str());
    CohClass c;
    c.c1.a0 = d.c_psi1;
    c.c2.a0 = d.c_psi2;
    // [D^{n>=1} R] = 0;
    // [R] = -eta1 [1] + eta1_dot phi [Psi1] + eta1 phi [Psi2];
    // [1] = -phi [Psi2] + lambda^-2 eta1 phi [Psi1].
    // The phi-coefficient corrections come from exactness of the twisted
    // images of Psi1, Psi2, whose naive derivatives pick up the dotted
    // quasi-period; without them no image class would close.
    int nq = ch.params().nq;
    QSeries eta1 = named_constant("eta1", nq);
    BaseFunction unit = d.c_one;
    if (!d.c_dnr.empty()) {
        const QSeries& br = d.c_dnr[0].body;
        unit = unit - d.c_dnr[0] * eta1;
        c.c1.a0.ph += br * named_constant("eta1_dot", nq);
        c.c2.a0.ph += br * eta1;
    }
    // [1] contributions: with unit = a + phi b only the body a survives.
    c.c2.a0.ph -= unit.body;
    c.c1.a0.ph += unit.body * (eta1 * Scalar::lambda_pow(-2));
    return c;
}

Form gm_lift(int i, const Chart& ch) {
    const WeierstrassSet& ws = ch.ws();
    const SuperField th = SuperField::theta();
    const SuperField thph = SuperField::theta_phi();
    Form w;
    if (i == 1) {
        SuperField dz_c = SuperField::one() - thph * ws.zeta1p();
        w.add_term(FormMono{1, 0, 0, 0}, dz_c);
        w.add_term(FormMono{0, 1, 0, 0}, ch.Psi1() - th * dz_c);
        w.add_term(FormMono{0, 0, 0, 1}, th * ws.zeta1());
        w.add_term(FormMono{0, 0, 1, 0},
                   -(ws.zeta1() + Scalar(2) * (thph * ws.zeta1_dot())));
    } else if (i == 2) {
        SuperField dz_c = ws.zeta1p() + thph * ws.zeta1p_dot();
        w.add_term(FormMono{1, 0, 0, 0}, dz_c);
        w.add_term(FormMono{0, 1, 0, 0}, ch.Psi2() - th * dz_c);
        w.add_term(FormMono{0, 0, 0, 1}, -(th * ws.zeta1_dot()));
        w.add_term(FormMono{0, 0, 1, 0},
                   ws.zeta1_dot() + thph * ws.zeta1_dot().d_tau());
    } else {
        throw UnknownName("gm_lift index " + std::to_string(i));
    }
    return w;
}

GMConnection gm_connection(const Chart& ch, int depth) {
    GMConnection gm;
    int zmax = ch.params().nz - 4;
    for (int i = 1; i <= 2; ++i) {
        Form dlift = gm_lift(i, ch).d();
        GMReduced red = gm_reduce(dlift, zmax);
        CohClass rt = reduce_coker(red.dtau, ch, depth);
        CohClass rp = reduce_coker(red.dphi, ch, depth);
        gm.tau_row[i - 1] = rt;
        gm.phi_row[i - 1] = rp;
    }
    return gm;
}

namespace {

BaseFunction bf_mul(const BaseFunction& a, const BaseFunction& b) {
    // (a0 + phi a1)(b0 + phi b1) with phi^2 = 0 and even base coefficients
    return {a.body * b.body, a.body * b.ph + a.ph * b.body};
}

TauPoly tp_mul(const TauPoly& a, const TauPoly& b) {
    // connection entries carry no tau, so the tau^2 term never arises here
    return {bf_mul(a.a0, b.a0), bf_mul(a.a0, b.a1) + bf_mul(a.a1, b.a0)};
}

CohClass scale(const TauPoly& h, const CohClass& c) {
    return {tp_mul(h, c.c1), tp_mul(h, c.c2)};
}

}  // namespace

CohClass nabla_tau(const CohClass& c, const GMConnection& gm) {
    CohClass r;
    r.c1 = c.c1.d_tau();
    r.c2 = c.c2.d_tau();
    r = r + scale(c.c1, gm.tau_row[0]) + scale(c.c2, gm.tau_row[1]);
    return r;
}

CohClass nabla_phi(const CohClass& c, const GMConnection& gm) {
    auto dphi = [](const TauPoly& t) {
        return TauPoly{BaseFunction{t.a0.ph, QSeries()},
                       BaseFunction{t.a1.ph, QSeries()}};
    };
    CohClass r;
    r.c1 = dphi(c.c1);
    r.c2 = dphi(c.c2);
    r = r + scale(c.c1, gm.phi_row[0]) + scale(c.c2, gm.phi_row[1]);
    return r;
}

Verdict horizontal_check(const Chart& ch, const GMConnection& gm, int zmax) {
    // e = [s Psi1] - tau [s Psi2], f = [s Psi2]
    QSeries one{Scalar(1)};
    CohClass e, f;
    e.c1.a0.body = one;
    e.c2.a1.body = Scalar(-1) * one;
    f.c2.a0.body = one;
    for (const CohClass* c : {&e, &f}) {
        Verdict v = nabla_tau(*c, gm).is_zero(zmax);
        if (!v.ok()) return v;
        v = nabla_phi(*c, gm).is_zero(zmax);
        if (!v.ok()) return v;
    }
    return Verdict::holds(zmax, ch.params().nq);
}

Verdict period_relations(const Chart& ch, int zmax) {
    // [s] = [s Psi2] phi and [s theta phi] = [s Psi1] phi; with left
    // coefficients these read [1] = -phi [Psi2] (up to the lambda^-2 eta1
    // phi [Psi1] correction carried by the dotted quasi-period),
    // [theta phi] = -phi [Psi1].
    QSeries one{Scalar(1)};
    CohClass expect1, expect2;
    expect1.c2.a0.ph = Scalar(-1) * one;
    expect1.c1.a0.ph =
        named_constant("eta1", ch.params().nq) * Scalar::lambda_pow(-2);
    expect2.c1.a0.ph = Scalar(-1) * one;
    Verdict v = (reduce_coker(SuperField::one(), ch) - expect1).is_zero(zmax);
    if (!v.ok()) return v;
    return (reduce_coker(SuperField::theta_phi(), ch) - expect2).is_zero(zmax);
}

}  // namespace sc
