#pragma once

#include <array>

#include "sc/superfield.hpp"

namespace sc {

// Generators of the de Rham complex on the total space, in normal order.
// dz and dtau come from even coordinates (so they anticommute and square to
// zero); dtheta and dphi come from odd coordinates (they commute with each
// other and with themselves, so squares survive).
enum class Gen : int { dz = 0, dtheta = 1, dtau = 2, dphi = 3 };

inline int coord_parity(Gen g) {
    return (g == Gen::dtheta || g == Gen::dphi) ? 1 : 0;
}

// A normal-ordered monomial dz^ez dtheta^eth dtau^etau dphi^eph;
// total degree at most 2, ez/etau at most 1, eth/eph at most 2.
struct FormMono {
    int ez = 0, eth = 0, etau = 0, eph = 0;

    int degree() const { return ez + eth + etau + eph; }
    // Number of generators from odd coordinates; a function commuted across
    // the monomial picks up (-1)^(parity(function) * odd_count()).
    int odd_count() const { return eth + eph; }

    auto operator<=>(const FormMono&) const = default;
    std::string str() const;
};

// A differential form: sum of FormMono * SuperField with the coefficient
// function written to the right of the monomial.
class Form {
  public:
    Form() = default;
    Form(FormMono m, SuperField f) { add_term(m, std::move(f)); }
    static Form from_field(SuperField f) { return Form(FormMono{}, std::move(f)); }

    const std::map<FormMono, SuperField>& terms() const { return c_; }
    bool empty() const { return c_.empty(); }

    void add_term(const FormMono& m, const SuperField& f);
    SuperField coeff(const FormMono& m) const;

    Form operator+(const Form& o) const;
    Form operator-(const Form& o) const;
    Form operator-() const;
    Form operator*(const Scalar& s) const;
    // Wedge product: coefficients commute past generators with the usual
    // sign, generator products are brought to normal order.
    Form operator*(const Form& o) const;

    // Right multiplication by a function: (m·g)·f = m·(g f).
    Form mul_right(const SuperField& f) const;
    // Left multiplication: moving the odd part of f past each monomial
    // contributes (-1)^odd_count(m).
    Form mul_left(const SuperField& f) const;

    // Exterior differential, acting from the right:
    //   d(m·f) = m ∧ (dz·∂z f + dtheta·∂θ f + dtau·∂τ f + dphi·∂φ f).
    Form d() const;

    Verdict is_zero_to_order(int zmax) const;

    std::string str() const;

  private:
    std::map<FormMono, SuperField> c_;
};

// Contraction of the fiberwise part of a 1-form against the canonical
// trivializing section s = delta(theta): delta(dz·a + dtheta·b) = s·(b +
// theta·a).  Returns the coefficient function of s.
SuperField delta_contract(const Form& omega);

// The canonical d_rel-closed lift of a fiberwise function a:
//   dz·D(a) + dtheta·(a - theta·D(a)).
Form closure_solve(const SuperField& a);

// Result of reducing a 2-form modulo the relative directions: the s-
// coefficients of the relative 1-forms paired with dtau and dphi.
struct GMReduced {
    SuperField dtau, dphi;
};

// Substitute dz -> alpha + dtheta·theta in a 2-form (alpha spans the
// horizontal complement), drop alpha- and base-square pieces, require the
// residual relative 2-form (dtheta^2 slot) to vanish to the stated orders,
// and contract what remains against s.  Throws ResidualRelativeTwoForm on a
// nonvanishing residual.
GMReduced gm_reduce(const Form& omega, int zmax);

}  // namespace sc
