#include "naxes/circles.hpp"

namespace naxes {

Circle::Circle(Scalar D, Scalar E, Scalar F) : d_(std::move(D)), e_(std::move(E)), f_(std::move(F)) {
    require_same_field(d_.field(), e_.field());
    require_same_field(d_.field(), f_.field());
}

namespace {

Scalar det3(const std::array<Scalar, 3>& a, const std::array<Scalar, 3>& b,
            const std::array<Scalar, 3>& c) {
    return a[0] * (b[1] * c[2] - b[2] * c[1]) - a[1] * (b[0] * c[2] - b[2] * c[0]) +
           a[2] * (b[0] * c[1] - b[1] * c[0]);
}

// Cramer solve of rows * (D,E,F)^T = rhs.
Circle solve_circle(const std::array<std::array<Scalar, 3>, 3>& rows,
                    const std::array<Scalar, 3>& rhs, const char* singular_msg) {
    Scalar d = det3(rows[0], rows[1], rows[2]);
    if (d.is_zero()) throw MathError(singular_msg);
    auto col_swapped = [&](int col) {
        std::array<std::array<Scalar, 3>, 3> m = rows;
        for (int r = 0; r < 3; ++r) m[r][col] = rhs[r];
        return det3(m[0], m[1], m[2]);
    };
    return Circle(col_swapped(0) / d, col_swapped(1) / d, col_swapped(2) / d);
}

} // namespace

Circle circle_through(const ProjPoint& P1, const ProjPoint& P2, const ProjPoint& P3) {
    require_same_field(P1.field(), P2.field());
    require_same_field(P1.field(), P3.field());
    for (const ProjPoint* p : {&P1, &P2, &P3})
        if (p->is_infinite()) throw MathError("circle through a point at infinity");
    if (P1 == P2 || P1 == P3 || P2 == P3) throw MathError("coincident points");
    if (collinear(P1, P2, P3)) throw MathError("degenerate circle");

    const Scalar one = Scalar::from_int(P1.field(), 1);
    std::array<std::array<Scalar, 3>, 3> rows;
    std::array<Scalar, 3> rhs = {Scalar(P1.field()), Scalar(P1.field()), Scalar(P1.field())};
    int i = 0;
    for (const ProjPoint* p : {&P1, &P2, &P3}) {
        Scalar x = p->affine_x(), y = p->affine_y();
        rows[i] = {x, y, one};
        rhs[i] = -(x * x + y * y);
        ++i;
    }
    return solve_circle(rows, rhs, "degenerate circle");
}

Circle circle_tangent(const ProjPoint& P, const ProjPoint& A, const ProjLine& l) {
    require_same_field(P.field(), A.field());
    require_same_field(P.field(), l.field());
    if (P.is_infinite() || A.is_infinite()) throw MathError("circle through a point at infinity");
    if (!incident(A, l)) throw MathError("tangency point not on the line");
    if (incident(P, l)) throw MathError("point on the tangent line");
    if (P == A) throw MathError("coincident points");

    const Scalar one = Scalar::from_int(P.field(), 1);
    const Scalar two = Scalar::from_int(P.field(), 2);
    Scalar ax = A.affine_x(), ay = A.affine_y();
    Scalar px = P.affine_x(), py = P.affine_y();
    ProjPoint dir = direction_of(l);
    const Scalar& dx = dir.x();
    const Scalar& dy = dir.y();

    // Row 1: A on the circle. Row 2: the gradient at A is orthogonal to the
    // direction of l (double root of the restriction). Row 3: P on it.
    std::array<std::array<Scalar, 3>, 3> rows = {{{ax, ay, one},
                                                  {dx, dy, Scalar(P.field())},
                                                  {px, py, one}}};
    std::array<Scalar, 3> rhs = {-(ax * ax + ay * ay), -two * (ax * dx + ay * dy),
                                 -(px * px + py * py)};
    return solve_circle(rows, rhs, "degenerate circle");
}

Scalar power_of(const ProjPoint& X, const Circle& c) {
    require_same_field(X.field(), c.field());
    if (X.is_infinite()) throw MathError("power of a point at infinity");
    Scalar x = X.affine_x(), y = X.affine_y();
    return x * x + y * y + c.D() * x + c.E() * y + c.F();
}

ProjLine radical_axis(const Circle& c1, const Circle& c2) {
    require_same_field(c1.field(), c2.field());
    if (c1 == c2) throw MathError("identical circles");
    Scalar du = c1.D() - c2.D();
    Scalar dv = c1.E() - c2.E();
    if (du.is_zero() && dv.is_zero()) throw MathError("no finite radical axis");
    return ProjLine(du, dv, c1.F() - c2.F());
}

} // namespace naxes
