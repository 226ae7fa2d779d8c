#include "sc/geometry.hpp"

#include <sstream>

namespace sc {

namespace {

const Rat kHalf(1, 2);

SuperField eta1_field(const Chart& ch) {
    return SuperField::from_qseries(named_constant("eta1", ch.params().nq));
}

}  // namespace

SuperField D_tau(const SuperField& f, const Chart& ch) {
    const WeierstrassSet& ws = ch.ws();
    SuperField cz = ws.zeta1() +
                    (SuperField::theta_phi() * ws.zeta1_dot()) * Scalar(kHalf);
    SuperField cth = (SuperField::theta() * ws.zeta1p() +
                      SuperField::phi() * ws.zeta1_dot()) *
                     Scalar(kHalf);
    return f.d_tau() + cz * f.d_z() + cth * f.d_theta();
}

SuperField D_phi(const SuperField& f, const Chart& ch) {
    const WeierstrassSet& ws = ch.ws();
    SuperField cz = SuperField::phi() * (ws.zeta1() * ws.zeta1()) -
                    SuperField::theta() * ws.zeta1();
    SuperField cth =
        ws.zeta1() - SuperField::theta_phi() * (ws.zeta1() * ws.zeta1p());
    return f.d_phi() + cz * f.d_z() + cth * f.d_theta();
}

SuperField commutator_tau_defect(const SuperField& g, const Chart& ch) {
    SuperField lhs = D_tau(g.D(), ch) - D_tau(g, ch).D();
    SuperField rhs = (ch.Psi2().D() * g.D()) * Scalar(-kHalf);
    return lhs - rhs;
}

SuperField commutator_phi_defect(const SuperField& g, const Chart& ch) {
    SuperField lhs = D_phi(g.D(), ch) + D_phi(g, ch).D();
    SuperField rhs = ch.ws().zeta1p() * ch.Psi1() * g.D();
    return lhs - rhs;
}

SuperField closure_formula(const std::string& name, const Chart& ch) {
    const WeierstrassSet& ws = ch.ws();
    if (name == "Dtau_Psi1") {
        SuperField rhs = ch.Psi2() * Scalar(kHalf) -
                         (SuperField::phi() * ch.DnR(2)) *
                             Scalar::lambda_pow(-4, kHalf);
        return D_tau(ch.Psi1(), ch) - rhs;
    }
    if (name == "Dtau_Psi2") {
        SuperField rhs =
            ch.DnR(3) * Scalar::lambda_pow(-4, kHalf) -
            ((ws.wp(0) + eta1_field(ch)) * ch.Psi2()) *
                Scalar::lambda_pow(-2, kHalf);
        return D_tau(ch.Psi2(), ch) - rhs;
    }
    if (name == "Dphi_psi") {
        return D_phi(ch.psi(), ch);
    }
    if (name == "Dphi_Psi2") {
        SuperField inner =
            SuperField::one() -
            (ch.Psi1() * SuperField::phi() * (ch.R() - eta1_field(ch))) *
                Scalar::lambda_pow(-2, Rat(3));
        SuperField rhs = (ch.DnR(2) * inner) * Scalar::lambda_pow(-4, kHalf);
        return D_phi(ch.Psi2(), ch) - rhs;
    }
    throw UnknownName(name);
}

const std::vector<std::string>& closure_formula_names() {
    static const std::vector<std::string> names = {"Dtau_Psi1", "Dtau_Psi2",
                                                   "Dphi_psi", "Dphi_Psi2"};
    return names;
}

SuperField weierstrass_identity(const std::string& name, const Chart& ch) {
    const WeierstrassSet& ws = ch.ws();
    if (name == "zeta1dot") {
        return ws.zeta1_dot() + ws.zeta1() * ws.zeta1p() -
               ws.wp(1) * Scalar::lambda_pow(-4, kHalf);
    }
    if (name == "wpdot") {
        SuperField rhs = (ws.wp(0) * ws.wp(0) * Scalar(2) -
                          eta1_field(ch) * ws.wp(0) * Scalar(2) -
                          SuperField::from_qseries(ws.g2()) * Scalar(Rat(1, 3))) *
                         Scalar::lambda_pow(-2);
        return ws.wp_dot(0) + ws.zeta1() * ws.wp(1) - rhs;
    }
    if (name == "wpdot_prime") {
        SuperField rhs = ((ws.wp(0) - eta1_field(ch)) * ws.wp(1)) *
                         Scalar::lambda_pow(-2, Rat(3));
        return ws.wp_dot(1) + ws.zeta1() * ws.wp(2) - rhs;
    }
    throw UnknownName(name);
}

const std::vector<std::string>& weierstrass_identity_names() {
    static const std::vector<std::string> names = {"zeta1dot", "wpdot",
                                                   "wpdot_prime"};
    return names;
}

QSeries ramanujan_defect(int k, int nq) {
    QSeries e2 = eisenstein(2, nq);
    QSeries e4 = eisenstein(4, nq);
    QSeries e6 = eisenstein(6, nq);
    switch (k) {
        case 2: return Scalar(12) * e2.partial() - (e2 * e2 - e4);
        case 4: return Scalar(3) * e4.partial() - (e2 * e4 - e6);
        case 6: return Scalar(2) * e6.partial() - (e2 * e6 - e4 * e4);
        default: throw UnsupportedWeight(k);
    }
}

// --- quasimodular fitting -------------------------------------------------

namespace {

// Monomial exponents (a,b,c) with 2a + 4b + 6c = w.
std::vector<std::array<int, 3>> monomials_of_weight(int w) {
    std::vector<std::array<int, 3>> out;
    for (int c = 0; 6 * c <= w; ++c)
        for (int b = 0; 4 * b + 6 * c <= w; ++b) {
            int rem = w - 4 * b - 6 * c;
            if (rem % 2 == 0) out.push_back({rem / 2, b, c});
        }
    return out;
}

QSeries monomial_series(const std::array<int, 3>& m, int nq) {
    QSeries s{Scalar(1)};
    QSeries e2 = eisenstein(2, nq);
    QSeries e4 = eisenstein(4, nq);
    QSeries e6 = eisenstein(6, nq);
    for (int i = 0; i < m[0]; ++i) s = s * e2;
    for (int i = 0; i < m[1]; ++i) s = s * e4;
    for (int i = 0; i < m[2]; ++i) s = s * e6;
    return s.truncated(nq);
}

// Exact Gaussian elimination on the augmented system A x = b; returns true
// with the unique solution, false if inconsistent or underdetermined.
bool solve_exact(std::vector<std::vector<Rat>>& rows, int ncols,
                 std::vector<Rat>& sol) {
    int nrows = static_cast<int>(rows.size());
    std::vector<int> pivot_col;
    int r = 0;
    for (int c = 0; c < ncols && r < nrows; ++c) {
        int p = -1;
        for (int i = r; i < nrows; ++i)
            if (rows[i][c] != 0) { p = i; break; }
        if (p < 0) continue;
        std::swap(rows[r], rows[p]);
        Rat inv = Rat(1) / rows[r][c];
        for (int j = c; j <= ncols; ++j) rows[r][j] *= inv;
        for (int i = 0; i < nrows; ++i) {
            if (i == r || rows[i][c] == 0) continue;
            Rat f = rows[i][c];
            for (int j = c; j <= ncols; ++j) rows[i][j] -= f * rows[r][j];
        }
        pivot_col.push_back(c);
        ++r;
    }
    if (static_cast<int>(pivot_col.size()) < ncols) return false;  // underdetermined
    for (int i = r; i < nrows; ++i)
        if (rows[i][ncols] != 0) return false;  // inconsistent
    sol.assign(ncols, Rat(0));
    for (int i = 0; i < r; ++i) sol[pivot_col[i]] = rows[i][ncols];
    return true;
}

}  // namespace

QuasimodularFit quasimodular_fit(const QSeries& s, int max_weight) {
    // Factor out a common lambda power; every coefficient must be a rational
    // multiple of the same lambda^k.
    int lam = 0;
    bool lam_set = false;
    for (int n = 0; n <= s.known_degree(); ++n) {
        const Scalar c = s.coeff(n);
        if (c.is_zero()) continue;
        if (!c.is_monomial())
            throw UnsupportedWeight(max_weight);
        int k = c.terms().begin()->first;
        if (!lam_set) { lam = k; lam_set = true; }
        else if (k != lam) throw UnsupportedWeight(max_weight);
    }
    int neq = s.exact() ? std::max(s.known_degree() + 1, 12)
                        : s.accuracy() + 1;
    std::vector<Rat> target(neq, Rat(0));
    for (int n = 0; n < neq; ++n) target[n] = s.coeff(n).coeff(lam);

    for (int w = 0; w <= max_weight; w += 2) {
        auto mons = monomials_of_weight(w);
        int ncols = static_cast<int>(mons.size());
        if (neq < ncols + 1)
            throw InsufficientAccuracy(
                "quasimodular fit at weight " + std::to_string(w) + " needs " +
                std::to_string(ncols + 1) + " q-orders, have " +
                std::to_string(neq));
        std::vector<std::vector<Rat>> rows(neq,
                                           std::vector<Rat>(ncols + 1, Rat(0)));
        for (int c = 0; c < ncols; ++c) {
            QSeries ms = monomial_series(mons[c], neq - 1);
            for (int n = 0; n < neq; ++n) rows[n][c] = ms.coeff(n).coeff(0);
        }
        for (int n = 0; n < neq; ++n) rows[n][ncols] = target[n];
        std::vector<Rat> sol;
        if (!solve_exact(rows, ncols, sol)) continue;
        QuasimodularFit fit;
        fit.weight = w;
        for (int c = 0; c < ncols; ++c)
            if (sol[c] != 0)
                fit.coeffs[mons[c]] = Scalar::lambda_pow(lam, sol[c]);
        return fit;
    }
    throw UnsupportedWeight(max_weight);
}

QSeries QuasimodularFit::recombine(int nq) const {
    QSeries s;
    for (const auto& [m, c] : coeffs) s += c * monomial_series(m, nq);
    return s.truncated(nq);
}

std::string QuasimodularFit::str() const {
    if (coeffs.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [m, c] : coeffs) {
        if (!first) os << " + ";
        first = false;
        os << "(" << c.str() << ")";
        if (m[0]) os << "*E2^" << m[0];
        if (m[1]) os << "*E4^" << m[1];
        if (m[2]) os << "*E6^" << m[2];
    }
    return os.str();
}

// --- decomposition over the affine coordinate ring ------------------------

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

QSeries eliminate(SuperField& r, const SuperField& cand, Component comp,
                  int n) {
    QSeries target = component(r.coeff(n), comp);
    if (target.is_zero_known()) return {};
    QSeries lead = component(cand.coeff(n), comp);
    Scalar l0 = lead.coeff(0);
    QSeries b = l0.inv() * target;
    r = r - cand * b;
    return b;
}

}  // namespace

AlgebraDecomposition algebra_decompose(const SuperField& f, const Chart& ch) {
    AlgebraDecomposition d;
    SuperField r = f;

    std::vector<SuperField> xp{SuperField::one()};
    auto cand = [&](int uy, int n, int up) {
        while (static_cast<int>(xp.size()) <= n) xp.push_back(xp.back() * ch.x());
        SuperField c = xp[n];
        if (uy) c = ch.y() * c;
        if (up) c = c * ch.psi();
        return c;
    };
    // Map a pole depth to the basis element with that leading order; psi
    // contributes no pole, y contributes depth 3, x depth 2.
    auto key_for = [&](int dd, const char* comp_name) {
        if (dd % 2 == 0) return std::pair<int, int>{0, dd / 2};
        if (dd >= 3) return std::pair<int, int>{1, (dd - 3) / 2};
        throw ResidueObstruction(std::string("simple pole in ") + comp_name +
                                 " component");
    };

    // Pass 1: body against x^n / y x^n, theta against the same times psi.
    int deepest = -r.nmin();
    for (int dd = std::max(deepest, 0); dd >= 0; --dd) {
        if (!component(r.coeff(-dd), kBody).is_zero_known()) {
            auto [uy, n] = key_for(dd, "body");
            auto& cf = d.coeffs[{uy, n, 0}];
            cf.first += eliminate(r, cand(uy, n, 0), kBody, -dd);
        }
        if (!component(r.coeff(-dd), kTheta).is_zero_known()) {
            auto [uy, n] = key_for(dd, "theta");
            auto& cf = d.coeffs[{uy, n, 1}];
            cf.first += eliminate(r, cand(uy, n, 1), kTheta, -dd);
        }
    }
    // Pass 2: phi and theta-phi against phitilde times the basis.
    deepest = -r.nmin();
    for (int dd = std::max(deepest, 0); dd >= 0; --dd) {
        if (!component(r.coeff(-dd), kPhi).is_zero_known()) {
            auto [uy, n] = key_for(dd, "phi");
            auto& cf = d.coeffs[{uy, n, 0}];
            cf.second += eliminate(r, ch.phitilde() * cand(uy, n, 0), kPhi, -dd);
        }
        if (!component(r.coeff(-dd), kThetaPhi).is_zero_known()) {
            auto [uy, n] = key_for(dd, "theta-phi");
            auto& cf = d.coeffs[{uy, n, 1}];
            cf.second +=
                eliminate(r, ch.phitilde() * cand(uy, n, 1), kThetaPhi, -dd);
        }
    }

    d.remainder = r;
    int zm = r.z_exact() ? (r.empty() ? 0 : r.terms().rbegin()->first)
                         : r.zacc();
    d.remainder_zero = r.is_zero_to_order(zm);
    return d;
}

SuperField algebra_recombine(const AlgebraDecomposition& d, const Chart& ch) {
    std::vector<SuperField> xp{SuperField::one()};
    SuperField r = SuperField::zero();
    for (const auto& [key, cf] : d.coeffs) {
        auto [uy, n, up] = key;
        while (static_cast<int>(xp.size()) <= n) xp.push_back(xp.back() * ch.x());
        SuperField b = xp[n];
        if (uy) b = ch.y() * b;
        if (up) b = b * ch.psi();
        r = r + b * cf.first + (ch.phitilde() * b) * cf.second;
    }
    return r;
}

// --- blow-up chart expansions ---------------------------------------------

SuperField blowup_expansion(const std::string& name, const Chart& ch) {
    SuperField yin = ch.y().inv();
    if (name == "inv_y") return yin;
    if (name == "x_over_y") return ch.x() * yin;
    if (name == "psi_over_y") return ch.psi() * yin;
    if (name == "phi_prime" || name == "phi_prime_y") {
        SuperField ph = ch.psi() * yin +
                        (ch.phitilde() * ch.x() * ch.x()) * (yin * yin) *
                            Scalar(2);
        if (name == "phi_prime") return ph;
        return ph * ch.y();
    }
    if (name == "sbar_rel") {
        return ch.psi().D() *
               (SuperField::one() - ch.x() * ch.phitilde() * ch.psi());
    }
    if (name == "step2") {
        return ch.psi() + (ch.phitilde() * ch.x() * ch.x()) * yin * Scalar(2);
    }
    throw UnknownName(name);
}

const std::vector<std::string>& blowup_names() {
    static const std::vector<std::string> names = {
        "inv_y",     "x_over_y", "psi_over_y", "phi_prime",
        "phi_prime_y", "sbar_rel", "step2"};
    return names;
}

}  // namespace sc
