#include "sc/forms.hpp"

namespace sc {

namespace {

const char* gen_name(Gen g) {
    switch (g) {
        case Gen::dz: return "dz";
        case Gen::dtheta: return "dtheta";
        case Gen::dtau: return "dtau";
        case Gen::dphi: return "dphi";
    }
    return "?";
}

int gen_exp(const FormMono& m, Gen g) {
    switch (g) {
        case Gen::dz: return m.ez;
        case Gen::dtheta: return m.eth;
        case Gen::dtau: return m.etau;
        case Gen::dphi: return m.eph;
    }
    return 0;
}

void bump(FormMono& m, Gen g) {
    switch (g) {
        case Gen::dz: ++m.ez; break;
        case Gen::dtheta: ++m.eth; break;
        case Gen::dtau: ++m.etau; break;
        case Gen::dphi: ++m.eph; break;
    }
}

// Append generator g on the right of m and bubble it into normal order.
// Returns false if the product vanishes (square of an anticommuting
// generator); otherwise fills the normal-ordered monomial and the sign.
bool append_gen(const FormMono& m, Gen g, FormMono* out, int* sign) {
    int pg = coord_parity(g);
    if (pg == 0 && gen_exp(m, g) > 0) return false;  // dz^2 = dtau^2 = 0
    int swaps_signed = 0;
    // g moves left past every generator strictly after it in the order.
    static const Gen order[] = {Gen::dz, Gen::dtheta, Gen::dtau, Gen::dphi};
    for (Gen h : order) {
        if (static_cast<int>(h) <= static_cast<int>(g)) continue;
        // each adjacent swap with h contributes (-1)^(1 + p(g) p(h))
        int per_swap = (1 + pg * coord_parity(h)) & 1 ? -1 : 1;
        if (per_swap < 0 && (gen_exp(m, h) & 1)) swaps_signed ^= 1;
    }
    *out = m;
    bump(*out, g);
    if (out->degree() > 3) throw DegreeCapExceeded();
    *sign = swaps_signed ? -1 : 1;
    return true;
}

// Move a function past a single generator: odd part flips sign iff the
// generator comes from an odd coordinate.
SuperField commute_past(const SuperField& f, Gen g) {
    if (coord_parity(g) == 0) return f;
    return f.even_part() - f.odd_part();
}

}  // namespace

std::string FormMono::str() const {
    std::string s;
    auto app = [&](const char* n, int e) {
        for (int i = 0; i < e; ++i) s += std::string(s.empty() ? "" : " ") + n;
    };
    app("dz", ez);
    app("dtheta", eth);
    app("dtau", etau);
    app("dphi", eph);
    return s.empty() ? "1" : s;
}

void Form::add_term(const FormMono& m, const SuperField& f) {
    auto it = c_.find(m);
    if (it == c_.end()) {
        if (!f.empty() || !f.z_exact()) c_.emplace(m, f);
    } else {
        it->second = it->second + f;
        if (it->second.empty() && it->second.z_exact()) c_.erase(it);
    }
}

SuperField Form::coeff(const FormMono& m) const {
    auto it = c_.find(m);
    return it == c_.end() ? SuperField() : it->second;
}

Form Form::operator+(const Form& o) const {
    Form r = *this;
    for (const auto& [m, f] : o.c_) r.add_term(m, f);
    return r;
}
Form Form::operator-(const Form& o) const { return *this + (-o); }
Form Form::operator-() const {
    Form r;
    for (const auto& [m, f] : c_) r.c_.emplace(m, -f);
    return r;
}
Form Form::operator*(const Scalar& s) const {
    Form r;
    for (const auto& [m, f] : c_) r.add_term(m, f * s);
    return r;
}

Form Form::operator*(const Form& o) const {
    static const Gen order[] = {Gen::dz, Gen::dtheta, Gen::dtau, Gen::dphi};
    Form r;
    for (const auto& [m, f] : c_) {
        for (const auto& [m2, g] : o.c_) {
            // move f past the generators of m2
            SuperField fm = (m2.odd_count() & 1)
                                ? f.even_part() - f.odd_part()
                                : f;
            // append the generators of m2 onto m, normal-ordering as we go
            FormMono acc = m;
            int sign = 1;
            bool vanishes = false;
            for (Gen gen : order) {
                for (int i = 0; i < gen_exp(m2, gen); ++i) {
                    FormMono next;
                    int s;
                    if (!append_gen(acc, gen, &next, &s)) {
                        vanishes = true;
                        break;
                    }
                    acc = next;
                    sign *= s;
                }
                if (vanishes) break;
            }
            if (vanishes) continue;
            SuperField c = fm * g;
            r.add_term(acc, sign < 0 ? -c : c);
        }
    }
    return r;
}

Form Form::mul_right(const SuperField& f) const {
    Form r;
    for (const auto& [m, g] : c_) r.add_term(m, g * f);
    return r;
}

Form Form::mul_left(const SuperField& f) const {
    Form r;
    for (const auto& [m, g] : c_) {
        SuperField moved = (m.odd_count() & 1)
                               ? (f.even_part() - f.odd_part()) * g
                               : f * g;
        r.add_term(m, moved);
    }
    return r;
}

Form Form::d() const {
    Form r;
    for (const auto& [m, f] : c_) {
        struct {
            Gen g;
            SuperField df;
        } parts[] = {{Gen::dz, f.d_z()},
                     {Gen::dtheta, f.d_theta()},
                     {Gen::dtau, f.d_tau()},
                     {Gen::dphi, f.d_phi()}};
        for (auto& [g, df] : parts) {
            if (df.empty() && df.z_exact()) continue;
            FormMono mg;
            int sign;
            if (!append_gen(m, g, &mg, &sign)) continue;
            r.add_term(mg, sign < 0 ? -df : df);
        }
    }
    return r;
}

Verdict Form::is_zero_to_order(int zmax) const {
    int zo = kExact, qo = kExact;
    for (const auto& [m, f] : c_) {
        Verdict v = f.is_zero_to_order(zmax);
        if (!v.ok()) {
            if (v.status == Verdict::Status::fails)
                v.detail += " in " + m.str() + " component";
            return v;
        }
        zo = std::min(zo, v.z_order);
        qo = std::min(qo, v.q_order);
    }
    return Verdict::holds(zo, qo);
}

std::string Form::str() const {
    std::string s;
    for (const auto& [m, f] : c_) {
        if (!s.empty()) s += " + ";
        s += m.str() + " * (" + f.str() + ")";
    }
    return s.empty() ? "0" : s;
}

SuperField delta_contract(const Form& omega) {
    for (const auto& [m, f] : omega.terms())
        if (m.degree() != 1 || m.etau || m.eph)
            throw ResidualRelativeTwoForm(
                "delta applies to relative 1-forms, got " + m.str());
    SuperField a = omega.coeff(FormMono{1, 0, 0, 0});
    SuperField b = omega.coeff(FormMono{0, 1, 0, 0});
    return b + SuperField::theta() * a;
}

Form closure_solve(const SuperField& a) {
    SuperField da = a.D();
    Form r(FormMono{1, 0, 0, 0}, da);
    r.add_term(FormMono{0, 1, 0, 0}, a - SuperField::theta() * da);
    return r;
}

GMReduced gm_reduce(const Form& omega, int zmax) {
    const SuperField th = SuperField::theta();
    // After dz -> alpha + dtheta*theta the alpha-pieces land in the
    // horizontal complement and the base squares in Omega^2_S; both drop.
    SuperField res_rel;   // dtheta^2 slot: must vanish
    SuperField c_dth_dtau, c_dth_dphi;
    for (const auto& [m, c] : omega.terms()) {
        if (m.degree() != 2) throw ResidualRelativeTwoForm("gm_reduce expects a 2-form");
        if (m.ez == 1 && m.eth == 1) {
            // dz dtheta c -> dtheta dtheta (theta c) past dtheta: sign -1
            res_rel = res_rel - th * c;
        } else if (m.ez == 1 && m.etau == 1) {
            c_dth_dtau = c_dth_dtau + th * c;
        } else if (m.ez == 1 && m.eph == 1) {
            c_dth_dphi = c_dth_dphi - th * c;
        } else if (m.eth == 2) {
            res_rel = res_rel + c;
        } else if (m.eth == 1 && m.etau == 1) {
            c_dth_dtau = c_dth_dtau + c;
        } else if (m.eth == 1 && m.eph == 1) {
            c_dth_dphi = c_dth_dphi + c;
        }
        // dtau dphi, dphi^2: Omega^2_S, dropped
    }
    Verdict v = res_rel.is_zero_to_order(zmax);
    if (!v.ok())
        throw ResidualRelativeTwoForm("residual relative 2-form: " + v.str());
    GMReduced r;
    r.dtau = c_dth_dtau;
    // reorder the coefficient past dphi to pair (dtheta * c) with dphi
    r.dphi = commute_past(c_dth_dphi, Gen::dphi);
    return r;
}

}  // namespace sc
