#pragma once

#include <map>

#include "sc/grassmann.hpp"
#include "sc/verdict.hpp"

namespace sc {

inline constexpr int kExact = QSeries::kExact;

// Defaults shared across the library.
inline constexpr int kDefaultNz = 20;
inline constexpr int kDefaultNq = 16;
inline constexpr int kDefaultDepth = 8;

// A superfield: finite Laurent expansion in z with GrassCoeff coefficients,
// known through z^(zacc) inclusive.  zacc == kExact means the stored terms
// are the whole object (a Laurent polynomial in z).
class SuperField {
  public:
    SuperField() : zacc_(kExact) {}
    explicit SuperField(int zacc) : zacc_(zacc) {}

    static SuperField zero() { return SuperField(); }
    static SuperField one() { return monomial(0, GrassCoeff(QSeries(Scalar(1)))); }
    static SuperField z_pow(int n, Scalar c = Scalar(1)) {
        return monomial(n, GrassCoeff(QSeries(std::move(c))));
    }
    static SuperField theta(Scalar c = Scalar(1)) {
        return monomial(0, GrassCoeff(QSeries(), QSeries(std::move(c)),
                                      QSeries(), QSeries()));
    }
    static SuperField phi(Scalar c = Scalar(1)) {
        return monomial(0, GrassCoeff(QSeries(), QSeries(),
                                      QSeries(std::move(c)), QSeries()));
    }
    static SuperField theta_phi(Scalar c = Scalar(1)) {
        return monomial(0, GrassCoeff(QSeries(), QSeries(), QSeries(),
                                      QSeries(std::move(c))));
    }
    static SuperField monomial(int n, GrassCoeff g) {
        SuperField f;
        f.qacc_ = g.accuracy();
        if (!g.is_zero_known()) f.c_.emplace(n, std::move(g));
        return f;
    }
    static SuperField from_qseries(const QSeries& s) {
        return monomial(0, GrassCoeff(s));
    }

    int zacc() const { return zacc_; }
    // Lower bound on the q-accuracy of everything that ever contributed,
    // surviving exact cancellations.
    int qacc() const { return qacc_; }
    bool z_exact() const { return zacc_ == kExact; }
    void set_zacc(int a) { zacc_ = a; }
    const std::map<int, GrassCoeff>& terms() const { return c_; }
    bool empty() const { return c_.empty(); }

    // Lowest stored z-exponent; for an empty field use zacc+1 so that the
    // multiplication accuracy rule stays conservative.
    int nmin() const {
        if (!c_.empty()) return c_.begin()->first;
        return z_exact() ? 0 : zacc_ + 1;
    }

    GrassCoeff coeff(int n) const {
        auto it = c_.find(n);
        return it == c_.end() ? GrassCoeff() : it->second;
    }

    void add_term(int n, const GrassCoeff& g) {
        if (!z_exact() && n > zacc_) return;
        qacc_ = std::min(qacc_, g.accuracy());
        auto it = c_.find(n);
        if (it == c_.end()) {
            if (!g.is_zero_known()) c_.emplace(n, g);
        } else {
            it->second = it->second + g;
            if (it->second.is_zero_known()) c_.erase(it);
        }
    }

    SuperField truncated_z(int acc) const {
        if (z_exact() || acc < zacc_) {
            SuperField r(acc);
            r.qacc_ = qacc_;
            for (const auto& [n, g] : c_)
                if (n <= acc) r.c_.emplace(n, g);
            return r;
        }
        return *this;
    }

    SuperField truncated_q(int qacc) const {
        SuperField r(zacc_);
        r.qacc_ = std::min(qacc_, qacc);
        for (const auto& [n, g] : c_) {
            GrassCoeff t = g.map([&](const QSeries& s) { return s.truncated(qacc); });
            if (!t.is_zero_known()) r.c_.emplace(n, t);
        }
        return r;
    }

    SuperField operator+(const SuperField& o) const {
        SuperField r(std::min(zacc_, o.zacc_));
        r.qacc_ = std::min(qacc_, o.qacc_);
        for (const auto& [n, g] : c_) r.add_term(n, g);
        for (const auto& [n, g] : o.c_) r.add_term(n, g);
        return r;
    }
    SuperField operator-(const SuperField& o) const { return *this + (-o); }
    SuperField operator-() const {
        SuperField r(zacc_);
        r.qacc_ = qacc_;
        for (const auto& [n, g] : c_) r.c_.emplace(n, -g);
        return r;
    }

    SuperField operator*(const SuperField& o) const {
        int acc = kExact;
        if (!z_exact() || !o.z_exact()) {
            long a1 = z_exact() ? kExact : (long)zacc_ + o.nmin();
            long a2 = o.z_exact() ? kExact : (long)o.zacc_ + nmin();
            acc = (int)std::min(a1, a2);
        }
        SuperField r(acc);
        r.qacc_ = std::min(qacc_, o.qacc_);
        for (const auto& [n, g] : c_)
            for (const auto& [m, h] : o.c_) {
                if (acc != kExact && n + m > acc) continue;
                r.add_term(n + m, g * h);
            }
        return r;
    }

    SuperField operator*(const Scalar& s) const {
        if (s.is_zero()) return SuperField(zacc_);
        SuperField r(zacc_);
        r.qacc_ = qacc_;
        for (const auto& [n, g] : c_) r.c_.emplace(n, g * s);
        return r;
    }
    SuperField operator*(const QSeries& s) const {
        SuperField r(zacc_);
        r.qacc_ = qacc_;
        for (const auto& [n, g] : c_) r.add_term(n, g * s);
        return r;
    }

    // Multiplicative inverse.  The lowest z-coefficient must have invertible
    // body constant term; writes f = z^n0 * c * (1 - w) with w small and sums
    // the geometric series, which terminates by nilpotency plus truncation.
    SuperField inv(int acc_if_exact = kDefaultNz) const;

    // --- Derivations -----------------------------------------------------
    SuperField d_z() const {
        SuperField r(z_exact() ? kExact : zacc_ - 1);
        r.qacc_ = qacc_;
        for (const auto& [n, g] : c_)
            if (n != 0) r.c_.emplace(n - 1, g * Scalar(n));
        return r;
    }
    SuperField d_theta() const {
        SuperField r(zacc_);
        r.qacc_ = qacc_;
        for (const auto& [n, g] : c_) {
            GrassCoeff t(g.cth, QSeries(), g.cthph, QSeries());
            if (!t.is_zero_known()) r.c_.emplace(n, t);
        }
        return r;
    }
    SuperField d_phi() const {
        SuperField r(zacc_);
        r.qacc_ = qacc_;
        for (const auto& [n, g] : c_) {
            GrassCoeff t(g.cph, -g.cthph, QSeries(), QSeries());
            if (!t.is_zero_known()) r.c_.emplace(n, t);
        }
        return r;
    }
    // d/dtau = lambda^2 * q d/dq on coefficients.
    SuperField d_tau() const {
        Scalar l2 = Scalar::lambda_pow(2);
        SuperField r(zacc_);
        r.qacc_ = qacc_;
        for (const auto& [n, g] : c_) {
            GrassCoeff t = g.map([&](const QSeries& s) { return s.partial() * l2; });
            if (!t.is_zero_known()) r.c_.emplace(n, t);
        }
        return r;
    }
    // Superderivative D = d_theta + theta d_z.
    SuperField D() const {
        return d_theta() + theta() * d_z();
    }

    // Projections onto even (body, theta*phi) and odd (theta, phi) parts.
    SuperField even_part() const {
        SuperField r(zacc_);
        r.qacc_ = qacc_;
        for (const auto& [n, g] : c_) {
            GrassCoeff t(g.c1, QSeries(), QSeries(), g.cthph);
            if (!t.is_zero_known()) r.c_.emplace(n, t);
        }
        return r;
    }
    SuperField odd_part() const {
        SuperField r(zacc_);
        r.qacc_ = qacc_;
        for (const auto& [n, g] : c_) {
            GrassCoeff t(QSeries(), g.cth, g.cph, QSeries());
            if (!t.is_zero_known()) r.c_.emplace(n, t);
        }
        return r;
    }

    // Parity (kExact fields included): even iff no theta/phi components occur.
    bool is_even_known() const {
        for (const auto& [n, g] : c_)
            if (!g.is_even_known()) return false;
        return true;
    }
    bool is_odd_known() const {
        for (const auto& [n, g] : c_)
            if (!g.is_odd_known()) return false;
        return true;
    }

    // Decide vanishing through z^zmax (and the stored q-accuracies).
    Verdict is_zero_to_order(int zmax) const {
        if (!z_exact() && zacc_ < zmax)
            return Verdict::insufficient(zacc_, kExact,
                                         "z-accuracy below requested order");
        int qmin = qacc_;
        for (const auto& [n, g] : c_) {
            if (n > zmax) continue;
            for (const QSeries* s : {&g.c1, &g.cth, &g.cph, &g.cthph}) {
                if (!s->is_zero_known()) {
                    Verdict v = s->is_zero_to_accuracy();
                    if (v.status == Verdict::Status::fails) {
                        v.z_order = n;
                        v.detail = "nonzero at z^" + std::to_string(n);
                        return v;
                    }
                    qmin = std::min(qmin, s->accuracy());
                }
            }
        }
        return Verdict::holds(z_exact() ? kExact : zacc_, qmin);
    }

    Verdict eq_to_order(const SuperField& o, int zmax) const {
        return (*this - o).is_zero_to_order(zmax);
    }

    std::string str() const;

  private:
    int zacc_;
    int qacc_ = QSeries::kExact;
    std::map<int, GrassCoeff> c_;
};

inline SuperField operator*(const Scalar& s, const SuperField& f) {
    return f * s;
}

}  // namespace sc
