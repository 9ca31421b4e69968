#include "naxes/axis.hpp"

#include <stdexcept>

namespace naxes {

namespace {

// Affine chart on a line: the x-coordinate when the line is not vertical,
// the y-coordinate otherwise. Ratios of parameter differences equal
// directed point ratios on the line.
Scalar param_on(const ProjLine& l, const ProjPoint& P) {
    return l.v().is_zero() ? P.affine_y() : P.affine_x();
}

ProjPoint point_at(const ProjLine& l, const Scalar& t) {
    if (l.v().is_zero()) {
        // u x + w = 0
        return ProjPoint::affine(-(l.w() / l.u()), t);
    }
    return ProjPoint::affine(t, -((l.u() * t + l.w()) / l.v()));
}

} // namespace

CollinearQuad CollinearQuad::make(const ProjLine& l, const ProjPoint& P, const ProjPoint& Q,
                                  const ProjPoint& R, const ProjPoint& S) {
    if (l.is_infinity()) throw MathError("base line is the line at infinity");
    for (const ProjPoint* pt : {&P, &Q, &R, &S}) {
        require_same_field(pt->field(), l.field());
        if (pt->is_infinite()) throw MathError("quad point at infinity");
        if (!incident(*pt, l)) throw MathError("quad point not on the base line");
    }
    if (R == P || R == Q || S == P || S == Q)
        throw MathError("pairs {P,Q} and {R,S} must be disjoint");
    return CollinearQuad(l, P, Q, R, S);
}

Scalar line_ratio(const ProjPoint& P, const ProjPoint& Q, const ProjPoint& R, const ProjPoint& S) {
    require_same_field(P.field(), Q.field());
    require_same_field(P.field(), R.field());
    require_same_field(P.field(), S.field());
    if (R == S) throw MathError("ratio denominator vanishes (R = S)");

    const ProjLine l = join(R, S);
    if (!incident(P, l) || !incident(Q, l)) throw MathError("points not collinear");

    if (P.is_infinite() && Q.is_infinite()) throw MathError("undefined ratio");
    if (P.is_infinite() || Q.is_infinite() || R.is_infinite() || S.is_infinite()) {
        // The one convention the construction needs: (P-Q)/(P-R) = 1 when P
        // is infinite and the finite points differ.
        if (P.is_infinite() && R == P && !Q.is_infinite() && !S.is_infinite() && Q != S)
            return Scalar::from_int(P.field(), 1);
        throw MathError("undefined ratio");
    }

    Scalar tp = param_on(l, P), tq = param_on(l, Q), tr = param_on(l, R), ts = param_on(l, S);
    return (tp - tq) / (tr - ts);
}

ProjPoint bracket_point(const CollinearQuad& q) {
    // Closed form of the defining identity (C-Q)/(C-R) = (Q-S)/(R-P):
    // t_C = (t_R t_S - t_P t_Q) / ((t_R + t_S) - (t_P + t_Q)).
    const ProjLine& l = q.l();
    Scalar tp = param_on(l, q.P()), tq = param_on(l, q.Q());
    Scalar tr = param_on(l, q.R()), ts = param_on(l, q.S());
    Scalar num = tr * ts - tp * tq;
    Scalar den = (tr + ts) - (tp + tq);
    if (den.is_zero()) {
        if (num.is_zero())
            throw std::logic_error("bracket point degenerate despite disjoint pairs");
        return direction_of(l);
    }
    return point_at(l, num / den);
}

AxisResult axis_from_outside(const CollinearQuad& q, const ProjPoint& A) {
    if (A.is_infinite()) throw MathError("apex at infinity");
    if (incident(A, q.l())) throw MathError("apex on base line");

    ProjLine through_P = parallel_through(join(A, q.R()), q.P());
    ProjLine through_S = parallel_through(join(A, q.Q()), q.S());
    ProjPoint B = meet(through_P, through_S);
    ProjLine g = join(A, B);
    ProjPoint C = meet(g, q.l());
    if (C != bracket_point(q))
        throw std::logic_error("axis does not pass through the bracket point");
    return {B, g, C};
}

AxisResult axis_degenerate(const ProjPoint& P, const ProjPoint& S, const ProjPoint& A,
                           const ProjLine& lQ, const ProjLine& lR) {
    for (const ProjPoint* pt : {&P, &S, &A})
        if (pt->is_infinite()) throw MathError("degenerate axis requires finite points");
    if (P == S) throw MathError("coincident points");
    const ProjLine l = join(P, S);
    if (!incident(A, l)) throw MathError("apex not on the base line");
    if (A == P || A == S) throw MathError("apex coincides with an endpoint");
    if (lQ == l || lR == l) throw MathError("given line equals the base line");
    if (!incident(A, lQ) || !incident(A, lR))
        throw MathError("line does not pass through the apex");

    // When lQ = lR the two parallels are distinct parallels, so B is their
    // common direction at infinity and g comes out as that very line.
    ProjPoint B = meet(parallel_through(lR, P), parallel_through(lQ, S));
    ProjLine g = join(A, B);
    ProjPoint C = meet(g, l);
    return {B, g, C};
}

ProjPoint involution_image(const ProjPoint& X, const ProjPoint& C, const ProjPoint& R,
                           const ProjPoint& S, const ProjLine& l) {
    if (l.is_infinity()) throw MathError("base line is the line at infinity");
    for (const ProjPoint* pt : {&X, &C, &R, &S}) {
        require_same_field(pt->field(), l.field());
        if (!incident(*pt, l)) throw MathError("point not on the line");
    }
    if (R.is_infinite() || S.is_infinite() || R == S)
        throw MathError("reference pair must be two distinct finite points");
    if (C == R || C == S) throw MathError("involution undefined");

    Scalar tr = param_on(l, R), ts = param_on(l, S);
    if (C.is_infinite()) {
        // t -> t_R + t_S - t, fixing no finite sum pair, swapping R and S.
        if (X.is_infinite()) return X;
        return point_at(l, tr + ts - param_on(l, X));
    }
    if (X.is_infinite()) return C;
    if (X == C) return direction_of(l);
    Scalar tc = param_on(l, C), tx = param_on(l, X);
    return point_at(l, (tc * (tr + ts - tx) - tr * ts) / (tc - tx));
}

} // namespace naxes
