#include "sc/superfield.hpp"

namespace sc {

std::string GrassCoeff::str() const {
    std::string s;
    auto add = [&](const QSeries& q, const char* mono) {
        if (q.is_zero_known()) return;
        if (!s.empty()) s += " + ";
        s += "(" + q.str() + ")";
        if (*mono) s += std::string("*") + mono;
    };
    add(c1, "");
    add(cth, "theta");
    add(cph, "phi");
    add(cthph, "theta*phi");
    return s.empty() ? "0" : s;
}

std::string SuperField::str() const {
    std::string s;
    for (const auto& [n, g] : c_) {
        if (!s.empty()) s += " + ";
        s += "[" + g.str() + "]";
        if (n != 0) s += "*z^" + std::to_string(n);
    }
    if (s.empty()) s = "0";
    if (!z_exact()) s += " + O(z^" + std::to_string(zacc_ + 1) + ")";
    return s;
}

SuperField SuperField::inv(int acc_if_exact) const {
    if (c_.empty()) throw NonUnitLeading("inverse of a superfield with no known terms");
    int n0 = c_.begin()->first;
    if (c_.begin()->second.c1.is_zero_known())
        throw NonUnitLeading("leading z-coefficient has no body part");
    QSeries s0i = c_.begin()->second.c1.inv();  // throws if not invertible

    // Normalize: shifted = s0^{-1} z^{-n0} f = 1 + w with w "small" (each
    // term either raises the z-order or is Grassmann-nilpotent).
    SuperField shifted(z_exact() ? kExact : zacc_ - n0);
    for (const auto& [n, g] : c_) shifted.add_term(n - n0, g * s0i);
    SuperField w = shifted - one();

    bool nilpotent = true;
    for (const auto& [n, g] : w.terms())
        if (!g.c1.is_zero_known()) { nilpotent = false; break; }

    int acc = z_exact() ? (nilpotent ? kExact : acc_if_exact)
                        : zacc_ - n0;
    int cap = nilpotent ? 3 : (acc == kExact ? 3 : acc + 4);

    SuperField r = one();
    SuperField term = one();
    for (int k = 1; k <= cap; ++k) {
        term = (term * (-w)).truncated_z(acc);
        if (term.empty()) break;
        r = r + term;
    }
    r.set_zacc(acc);
    return (r * s0i) * z_pow(-n0);
}

}  // namespace sc
