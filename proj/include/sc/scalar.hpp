#pragma once

#include <gmpxx.h>

#include <map>
#include <sstream>
#include <string>

#include "sc/errors.hpp"

namespace sc {

using Rat = mpq_class;

inline std::string rat_str(const Rat& r) { return r.get_str(); }

/// Exact coefficient: a Laurent polynomial sum_k c_k * lambda^k over Q, where
/// lambda is a formal invertible transcendental (lambda^2 names 2*pi*i, but no
/// relation is ever applied). Equality of Scalars is coefficientwise.
class Scalar {
  public:
    Scalar() = default;
    Scalar(Rat r) {  // NOLINT: implicit by design, rationals embed
        r.canonicalize();
        if (r != 0) c_[0] = r;
    }
    Scalar(long n) : Scalar(Rat(n)) {}  // NOLINT
    Scalar(int n) : Scalar(Rat(n)) {}   // NOLINT

    static Scalar lambda_pow(int k, Rat coeff = Rat(1)) {
        coeff.canonicalize();
        Scalar s;
        if (coeff != 0) s.c_[k] = coeff;
        return s;
    }

    bool is_zero() const { return c_.empty(); }

    /// True if the scalar is c*lambda^k with c != 0 (the invertible elements).
    bool is_monomial() const { return c_.size() == 1; }

    const std::map<int, Rat>& terms() const { return c_; }

    Rat coeff(int k) const {
        auto it = c_.find(k);
        return it == c_.end() ? Rat(0) : it->second;
    }

    Scalar& operator+=(const Scalar& o) {
        for (const auto& [k, v] : o.c_) add_term(k, v);
        return *this;
    }
    Scalar& operator-=(const Scalar& o) {
        for (const auto& [k, v] : o.c_) add_term(k, -v);
        return *this;
    }
    friend Scalar operator+(Scalar a, const Scalar& b) { return a += b; }
    friend Scalar operator-(Scalar a, const Scalar& b) { return a -= b; }
    friend Scalar operator-(const Scalar& a) {
        Scalar r;
        for (const auto& [k, v] : a.c_) r.c_[k] = -v;
        return r;
    }
    friend Scalar operator*(const Scalar& a, const Scalar& b) {
        Scalar r;
        for (const auto& [ka, va] : a.c_)
            for (const auto& [kb, vb] : b.c_) r.add_term(ka + kb, va * vb);
        return r;
    }
    Scalar& operator*=(const Scalar& o) { return *this = *this * o; }

    Scalar inv() const {
        if (!is_monomial()) throw NonUnitConstantTerm("scalar not an invertible lambda-monomial: " + str());
        auto [k, v] = *c_.begin();
        return lambda_pow(-k, Rat(1) / v);
    }

    friend Scalar operator/(const Scalar& a, const Scalar& b) { return a * b.inv(); }

    bool operator==(const Scalar& o) const { return c_ == o.c_; }
    bool operator!=(const Scalar& o) const { return !(*this == o); }

    std::string str() const {
        if (c_.empty()) return "0";
        std::ostringstream os;
        bool first = true;
        for (const auto& [k, v] : c_) {
            if (!first) os << " + ";
            first = false;
            if (k == 0) {
                os << v.get_str();
            } else {
                if (v != 1) os << v.get_str() << "*";
                os << "lambda^" << k;
            }
        }
        return os.str();
    }

  private:
    void add_term(int k, const Rat& v) {
        auto it = c_.find(k);
        if (it == c_.end()) {
            if (v != 0) c_[k] = v;
        } else {
            it->second += v;
            if (it->second == 0) c_.erase(it);
        }
    }

    std::map<int, Rat> c_;  // exponent -> nonzero coefficient
};

}  // namespace sc
