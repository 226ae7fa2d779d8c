#pragma once

#include "sc/qseries.hpp"

namespace sc {

// Coefficient of a single power of z in a superfield: an element of the
// Grassmann algebra on {theta, phi} with QSeries entries,
//   g = c1 + theta*cth + phi*cph + theta*phi*cthph.
struct GrassCoeff {
    QSeries c1, cth, cph, cthph;

    GrassCoeff() = default;
    explicit GrassCoeff(QSeries body) : c1(std::move(body)) {}
    GrassCoeff(QSeries a, QSeries b, QSeries c, QSeries d)
        : c1(std::move(a)), cth(std::move(b)), cph(std::move(c)),
          cthph(std::move(d)) {}

    bool is_zero_known() const {
        return c1.is_zero_known() && cth.is_zero_known() &&
               cph.is_zero_known() && cthph.is_zero_known();
    }

    int accuracy() const {
        return std::min(std::min(c1.accuracy(), cth.accuracy()),
                        std::min(cph.accuracy(), cthph.accuracy()));
    }

    // True if only even (body, theta*phi) components may be nonzero.
    bool is_even_known() const {
        return cth.is_zero_known() && cph.is_zero_known();
    }
    bool is_odd_known() const {
        return c1.is_zero_known() && cthph.is_zero_known();
    }

    GrassCoeff operator+(const GrassCoeff& o) const {
        return {c1 + o.c1, cth + o.cth, cph + o.cph, cthph + o.cthph};
    }
    GrassCoeff operator-(const GrassCoeff& o) const {
        return {c1 - o.c1, cth - o.cth, cph - o.cph, cthph - o.cthph};
    }
    GrassCoeff operator-() const { return {-c1, -cth, -cph, -cthph}; }

    // Product in the Grassmann algebra; the sign comes from moving b's theta
    // past a's phi.
    GrassCoeff operator*(const GrassCoeff& o) const {
        return {c1 * o.c1,
                c1 * o.cth + cth * o.c1,
                c1 * o.cph + cph * o.c1,
                c1 * o.cthph + cthph * o.c1 + cth * o.cph - cph * o.cth};
    }

    GrassCoeff operator*(const Scalar& s) const {
        return {c1 * s, cth * s, cph * s, cthph * s};
    }
    GrassCoeff operator*(const QSeries& s) const {
        return {c1 * s, cth * s, cph * s, cthph * s};
    }

    // Apply f componentwise (used for q d/dq and truncation).
    template <typename F> GrassCoeff map(F&& f) const {
        return {f(c1), f(cth), f(cph), f(cthph)};
    }

    std::string str() const;
};

inline GrassCoeff operator*(const Scalar& s, const GrassCoeff& g) {
    return g * s;
}

}  // namespace sc
