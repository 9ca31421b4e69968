#pragma once

#include "naxes/projective.hpp"

namespace naxes {

// Two pairs of finite points (P,Q) and (R,S) on an affine base line l.
// P=Q and R=S are allowed (tangent cases), but the pairs must be disjoint:
// neither R nor S may coincide with P or Q.
class CollinearQuad {
public:
    static CollinearQuad make(const ProjLine& l, const ProjPoint& P, const ProjPoint& Q,
                              const ProjPoint& R, const ProjPoint& S);

    const ProjLine& l() const { return l_; }
    const ProjPoint& P() const { return P_; }
    const ProjPoint& Q() const { return Q_; }
    const ProjPoint& R() const { return R_; }
    const ProjPoint& S() const { return S_; }

private:
    CollinearQuad(ProjLine l, ProjPoint P, ProjPoint Q, ProjPoint R, ProjPoint S)
        : l_(std::move(l)), P_(std::move(P)), Q_(std::move(Q)), R_(std::move(R)), S_(std::move(S)) {}

    ProjLine l_;
    ProjPoint P_, Q_, R_, S_;
};

// Directed ratio (P-Q)/(R-S) of collinear points, R and S distinct finite.
// The single admitted infinite case: if P is infinite and R is the same
// infinite point (with Q, S distinct finite) the ratio is 1. All other
// combinations involving infinite points are rejected.
Scalar line_ratio(const ProjPoint& P, const ProjPoint& Q, const ProjPoint& R, const ProjPoint& S);

// The point C = [P,Q|R,S] on the base line cut out by the axis,
// characterized by (C-Q)/(C-R) = (Q-S)/(R-P). Returns the point at
// infinity of l when the defining ratio degenerates to 1.
ProjPoint bracket_point(const CollinearQuad& q);

struct AxisResult {
    ProjPoint B;  // second point of the axis (finite for an outside apex)
    ProjLine g;   // the axis itself
    ProjPoint C;  // g meet l, possibly infinite
};

// Axis of the quad as seen from a finite apex A off the base line:
// B is the intersection of the parallel to <A,R> through P with the
// parallel to <A,Q> through S, g = <A,B>, and C = g meet l equals the
// bracket point (which does not depend on A).
AxisResult axis_from_outside(const CollinearQuad& q, const ProjPoint& A);

// Degenerate variant with the apex A on the base line, strictly apart from
// P and S. The roles of <A,Q> and <A,R> are taken by two given lines
// through A: B is the intersection of the parallel to lR through P with
// the parallel to lQ through S (at infinity when lQ = lR), g = <A,B>.
AxisResult axis_degenerate(const ProjPoint& P, const ProjPoint& S, const ProjPoint& A,
                           const ProjLine& lQ, const ProjLine& lR);

// The involution of l determined by C = [X, image(X) | R, S]: swaps R with
// S and exchanges C with the point at infinity of l.
ProjPoint involution_image(const ProjPoint& X, const ProjPoint& C, const ProjPoint& R,
                           const ProjPoint& S, const ProjLine& l);

} // namespace naxes
