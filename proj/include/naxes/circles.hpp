#pragma once

#include "naxes/projective.hpp"

namespace naxes {

// x^2 + y^2 + D xz + E yz + F z^2 = 0. Purely algebraic: over F_p this has
// no metric meaning, but powers and radical axes still behave as the
// identities demand (characteristic 2 is already excluded field-wide).
class Circle {
public:
    Circle(Scalar D, Scalar E, Scalar F);

    const Scalar& D() const { return d_; }
    const Scalar& E() const { return e_; }
    const Scalar& F() const { return f_; }

    const FieldTag& field() const { return d_.field(); }

    friend bool operator==(const Circle& a, const Circle& b) {
        return a.d_ == b.d_ && a.e_ == b.e_ && a.f_ == b.f_;
    }
    friend bool operator!=(const Circle& a, const Circle& b) { return !(a == b); }

private:
    Scalar d_, e_, f_;
};

// The circle through three finite non-collinear points.
Circle circle_through(const ProjPoint& P1, const ProjPoint& P2, const ProjPoint& P3);

// The circle through P tangent to l at A (A on l, P off l). Its
// intersection with l is the double point A.
Circle circle_tangent(const ProjPoint& P, const ProjPoint& A, const ProjLine& l);

// Value of the monic circle equation at a finite point; zero iff the point
// lies on the circle, and equal to the product of signed secant segments.
Scalar power_of(const ProjPoint& X, const Circle& c);

// (D1-D2) x + (E1-E2) y + (F1-F2) z = 0: the locus of equal power.
ProjLine radical_axis(const Circle& c1, const Circle& c2);

} // namespace naxes
