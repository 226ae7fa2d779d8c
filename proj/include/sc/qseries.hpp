#pragma once

#include <algorithm>
#include <limits>
#include <string>
#include <vector>

#include "sc/errors.hpp"
#include "sc/scalar.hpp"
#include "sc/verdict.hpp"

namespace sc {

/// Truncated power series in q over Scalar with a tracked accuracy order:
/// coefficients q^0..q^acc are known, everything beyond is unknown (not zero).
/// Values built from exact polynomial data carry the sentinel accuracy
/// kExact. Arithmetic propagates the minimum of the operand accuracies.
class QSeries {
  public:
    static constexpr int kExact = std::numeric_limits<int>::max() / 4;

    QSeries() : acc_(kExact) {}
    explicit QSeries(const Scalar& c) : acc_(kExact) {
        if (!c.is_zero()) c_.push_back(c);
    }
    QSeries(std::vector<Scalar> c, int acc) : c_(std::move(c)), acc_(acc) { normalize(); }

    static QSeries q_pow(int n, const Scalar& c = Scalar(1)) {
        QSeries r;
        if (!c.is_zero()) {
            r.c_.assign(n + 1, Scalar());
            r.c_[n] = c;
        }
        return r;
    }

    int accuracy() const { return acc_; }
    bool exact() const { return acc_ == kExact; }

    /// Coefficient of q^n; only meaningful for n <= accuracy().
    Scalar coeff(int n) const {
        if (n < 0 || n >= static_cast<int>(c_.size())) return Scalar();
        return c_[n];
    }

    /// Highest index with a stored (known) coefficient.
    int known_degree() const { return static_cast<int>(c_.size()) - 1; }

    bool is_zero_known() const { return c_.empty(); }

    QSeries truncated(int acc) const {
        if (acc >= acc_) return *this;
        QSeries r = *this;
        r.acc_ = acc;
        r.normalize();
        return r;
    }

    friend QSeries operator+(const QSeries& a, const QSeries& b) {
        QSeries r;
        r.acc_ = std::min(a.acc_, b.acc_);
        r.c_.resize(std::max(a.c_.size(), b.c_.size()));
        for (size_t i = 0; i < r.c_.size(); ++i) r.c_[i] = a.coeff(i) + b.coeff(i);
        r.normalize();
        return r;
    }
    friend QSeries operator-(const QSeries& a, const QSeries& b) { return a + (-b); }
    friend QSeries operator-(const QSeries& a) {
        QSeries r = a;
        for (auto& c : r.c_) c = -c;
        return r;
    }
    QSeries& operator+=(const QSeries& o) { return *this = *this + o; }
    QSeries& operator-=(const QSeries& o) { return *this = *this - o; }

    friend QSeries operator*(const QSeries& a, const QSeries& b) {
        QSeries r;
        r.acc_ = std::min(a.acc_, b.acc_);
        if (a.c_.empty() || b.c_.empty()) return r;
        int nmax = static_cast<int>(a.c_.size() + b.c_.size()) - 2;
        if (r.acc_ != kExact) nmax = std::min(nmax, r.acc_);
        r.c_.assign(nmax + 1, Scalar());
        for (size_t i = 0; i < a.c_.size(); ++i) {
            if (a.c_[i].is_zero()) continue;
            for (size_t j = 0; j < b.c_.size(); ++j) {
                int n = static_cast<int>(i + j);
                if (n > nmax) break;
                r.c_[n] += a.c_[i] * b.c_[j];
            }
        }
        r.normalize();
        return r;
    }
    QSeries& operator*=(const QSeries& o) { return *this = *this * o; }

    friend QSeries operator*(const QSeries& a, const Scalar& s) { return s * a; }
    friend QSeries operator*(const Scalar& s, const QSeries& a) {
        QSeries r = a;
        for (auto& c : r.c_) c = s * c;
        r.normalize();
        return r;
    }

    /// Multiplicative inverse. The q^0 coefficient must be an invertible
    /// Scalar monomial. For exact inputs whose inverse is an infinite series
    /// the result is truncated at acc_if_exact.
    QSeries inv(int acc_if_exact = 16) const {
        Scalar c0 = coeff(0);
        if (c0.is_zero() || !c0.is_monomial())
            throw NonUnitConstantTerm("q^0 coefficient " + c0.str() + " is not invertible");
        int acc = acc_;
        if (exact()) {
            // a monomial in q stays exact, anything else truncates
            bool monomial = c_.size() == 1;
            if (!monomial) acc = acc_if_exact;
        }
        Scalar c0i = c0.inv();
        QSeries r;
        r.acc_ = acc;
        int n = (acc == kExact) ? 0 : acc;
        r.c_.assign(n + 1, Scalar());
        r.c_[0] = c0i;
        for (int k = 1; k <= n; ++k) {
            Scalar s;
            for (int j = 0; j < k; ++j) s += r.c_[j] * coeff(k - j);
            r.c_[k] = -(c0i * s);
        }
        r.normalize();
        return r;
    }

    /// Ramanujan operator: q * d/dq.
    QSeries partial() const {
        QSeries r = *this;
        for (size_t n = 0; n < r.c_.size(); ++n) r.c_[n] = Scalar(Rat(static_cast<long>(n))) * r.c_[n];
        r.normalize();
        return r;
    }

    QSeries pow(int e) const {
        QSeries r{Scalar(1)};
        for (int i = 0; i < e; ++i) r = r * *this;
        return r;
    }

    Verdict is_zero_to_accuracy() const {
        int limit = exact() ? known_degree() : std::min(known_degree(), acc_);
        for (int n = 0; n <= limit; ++n)
            if (!c_[n].is_zero())
                return Verdict::fails(0, acc_, "q^" + std::to_string(n) + " coefficient = " + c_[n].str());
        if (!exact() && acc_ < 0) return Verdict::insufficient("no known q-coefficients");
        return Verdict::holds(0, acc_);
    }

    /// Three-valued equality up to the joint accuracy.
    Verdict eq_to_accuracy(const QSeries& o) const { return (*this - o).is_zero_to_accuracy(); }

    bool operator==(const QSeries& o) const {
        Verdict v = eq_to_accuracy(o);
        return v.ok() && acc_ == o.acc_;
    }

    std::string str() const {
        if (c_.empty()) return exact() ? "0" : "O(q^" + std::to_string(acc_ + 1) + ")";
        std::string s;
        for (size_t n = 0; n < c_.size(); ++n) {
            if (c_[n].is_zero()) continue;
            if (!s.empty()) s += " + ";
            s += "(" + c_[n].str() + ")";
            if (n > 0) s += "*q^" + std::to_string(n);
        }
        if (!exact()) s += " + O(q^" + std::to_string(acc_ + 1) + ")";
        return s;
    }

  private:
    void normalize() {
        if (acc_ != kExact && static_cast<int>(c_.size()) > acc_ + 1)
            c_.resize(std::max(acc_ + 1, 0));
        while (!c_.empty() && c_.back().is_zero()) c_.pop_back();
    }

    std::vector<Scalar> c_;  // q^0 .. q^known_degree
    int acc_;
};

/// Normalized Eisenstein series E_k for k in {2,4,6}, to accuracy nq.
/// E_2 = 1 - 24 sum sigma_1(n) q^n, E_4 = 1 + 240 sum sigma_3(n) q^n,
/// E_6 = 1 - 504 sum sigma_5(n) q^n.
QSeries eisenstein(int k, int nq);

/// Named quasimodular constants with explicit lambda-powers:
/// eta1 = -lambda^4 E2/12, g2 = lambda^8 E4/12, g3 = -lambda^12 E6/216,
/// and dotted versions (eta1_dot, g2_dot, g3_dot) with one extra lambda^2
/// and the Ramanujan derivative applied.
QSeries named_constant(const std::string& name, int nq);

}  // namespace sc
