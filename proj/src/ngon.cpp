#include "naxes/ngon.hpp"

#include <stdexcept>
#include <string>

namespace naxes {

std::string Violation::message() const {
    switch (kind) {
        case ViolationKind::TooFewVertices:
            return "too few vertices: need at least 5, got " + std::to_string(i);
        case ViolationKind::VertexAtInfinity:
            return "vertex at infinity (A_" + std::to_string(i) + ")";
        case ViolationKind::CoincidentVertices:
            return "coincident vertices (A_" + std::to_string(i) + ", A_" + std::to_string(j) + ")";
        case ViolationKind::VertexOnSide:
            return "assumption (i) violated at index " + std::to_string(i) + ": A_" +
                   std::to_string(i) + " lies on l_" + std::to_string(j);
        case ViolationKind::SidesThroughVertexEqual:
            return "assumption (ii) violated at index " + std::to_string(i) +
                   ": the two sides through A_" + std::to_string(i) + " coincide";
        case ViolationKind::AdjacentSidesParallel:
            return "assumption (iii) violated at index " + std::to_string(i) + ": l_" +
                   std::to_string(i) + " parallel to l_" + std::to_string(j);
    }
    return "invalid configuration";
}

namespace {

int wrap_index(int i, int n) { return ((i - 1) % n + n) % n; }

} // namespace

NgonConfig NgonConfig::validate(std::vector<ProjPoint> points) {
    const int n = static_cast<int>(points.size());
    if (n < 5) throw InvalidConfig({ViolationKind::TooFewVertices, n, 0});
    for (int i = 1; i <= n; ++i) {
        require_same_field(points[i - 1].field(), points[0].field());
        if (points[i - 1].is_infinite())
            throw InvalidConfig({ViolationKind::VertexAtInfinity, i, 0});
    }
    for (int i = 1; i <= n; ++i)
        for (int j = i + 1; j <= n; ++j)
            if (points[i - 1] == points[j - 1])
                throw InvalidConfig({ViolationKind::CoincidentVertices, i, j});

    auto at = [&](int i) -> const ProjPoint& { return points[wrap_index(i, n)]; };
    std::vector<ProjLine> l;
    l.reserve(n);
    for (int i = 1; i <= n; ++i) l.push_back(join(at(i - 1), at(i + 1)));
    auto side = [&](int i) -> const ProjLine& { return l[wrap_index(i, n)]; };

    for (int i = 1; i <= n; ++i)
        for (int off : {-2, 0, 2})
            if (incident(at(i), side(i + off)))
                throw InvalidConfig({ViolationKind::VertexOnSide, i, wrap_index(i + off, n) + 1});
    for (int i = 1; i <= n; ++i)
        if (side(i - 1) == side(i + 1))
            throw InvalidConfig(
                {ViolationKind::SidesThroughVertexEqual, i, wrap_index(i - 1, n) + 1});
    for (int i = 1; i <= n; ++i)
        if (is_parallel(side(i), side(i + 1)))
            throw InvalidConfig({ViolationKind::AdjacentSidesParallel, i, wrap_index(i + 1, n) + 1});

    return NgonConfig(std::move(points));
}

DerivedData derive(const NgonConfig& cfg) {
    const int n = cfg.size();
    DerivedData d;
    d.l_.reserve(n);
    for (int i = 1; i <= n; ++i) d.l_.push_back(cfg.side(i));

    d.B_.reserve(n);
    for (int i = 1; i <= n; ++i) {
        ProjPoint b = meet(d.l(i), d.l(i + 1));
        if (b.is_infinite())
            throw std::logic_error("adjacent sides parallel slipped past validation");
        d.B_.push_back(std::move(b));
    }

    for (int i = 1; i <= n; ++i) {
        const ProjPoint& A = cfg.vertex(i);
        CollinearQuad quad =
            CollinearQuad::make(d.l(i), cfg.vertex(i - 1), d.B(i - 1), d.B(i), cfg.vertex(i + 1));
        AxisResult axis = axis_from_outside(quad, A);

        // Independent second construction of the axis: E_i from the two
        // parallels of the Prop-style proof. It must land on the same line.
        ProjPoint E = meet(parallel_through(d.l(i + 1), cfg.vertex(i - 1)),
                           parallel_through(d.l(i - 1), cfg.vertex(i + 1)));
        if (join(A, E) != axis.g)
            throw std::logic_error("axis mismatch between bracket and parallel constructions");

        d.C_.push_back(std::move(axis.C));
        d.E_.push_back(std::move(E));
        d.g_.push_back(std::move(axis.g));
    }
    return d;
}

CenterResult center(const NgonConfig& cfg, const std::vector<int>& subset) {
    if (subset.size() < 2) throw MathError("center needs at least 2 axes");
    DerivedData d = derive(cfg);
    std::vector<ProjLine> sel;
    sel.reserve(subset.size());
    for (int i : subset) sel.push_back(d.g(i));
    CenterResult res{pencil_of(sel), std::nullopt};
    if (res.pencil.is_pencil()) res.M = res.pencil.center;
    return res;
}

CenterResult center(const NgonConfig& cfg) {
    std::vector<int> all;
    for (int i = 1; i <= cfg.size(); ++i) all.push_back(i);
    return center(cfg, all);
}

ProjPoint center_formula(const ProjPoint& A2, const ProjPoint& A5) {
    require_same_field(A2.field(), A5.field());
    const Scalar &a = A2.x(), &b = A2.y(), &c = A2.z();
    const Scalar &x = A5.x(), &y = A5.y(), &z = A5.z();
    Scalar m0 = c * x;
    Scalar m1 = b * z;
    Scalar m2 = (c - b) * x + (a - c) * y + (c - a + b) * z;
    if (m0.is_zero() && m1.is_zero() && m2.is_zero()) throw MathError("center undefined");
    return ProjPoint(m0, m1, m2);
}

} // namespace naxes
