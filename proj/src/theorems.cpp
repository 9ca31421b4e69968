#include "naxes/theorems.hpp"

#include <stdexcept>
#include <string>
#include <utility>

namespace naxes {

namespace {

std::string axis_list(const std::vector<int>& idx) {
    std::string s = "(";
    for (size_t k = 0; k < idx.size(); ++k) {
        if (k) s += ", ";
        s += "g_" + std::to_string(idx[k]);
    }
    return s + ")";
}

// Lexicographically first triple of the given axes with full rank 3,
// reported with 1-based positions. Empty when every triple is a pencil.
std::vector<int> first_bad_triple(const std::vector<ProjLine>& g) {
    const int n = static_cast<int>(g.size());
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j)
            for (int k = j + 1; k < n; ++k)
                if (pencil_of({g[i], g[j], g[k]}).kind == PencilKind::NotAPencil)
                    return {i + 1, j + 1, k + 1};
    return {};
}

VerifyReport report_from_pencil(std::vector<ProjLine> axes, const FieldTag& field) {
    VerifyReport rep;
    rep.field = field;
    rep.axes_checked = static_cast<int>(axes.size());
    rep.pencil = pencil_of(axes);
    if (rep.pencil.is_pencil()) {
        rep.verdict = Verdict::Pass;
    } else {
        rep.verdict = Verdict::Fail;
        rep.witness = first_bad_triple(axes);
    }
    return rep;
}

} // namespace

std::string VerifyReport::describe() const {
    switch (verdict) {
        case Verdict::Pass:
            if (pencil.kind == PencilKind::FiniteCenter)
                return "pass: axes concurrent at " + pencil.center->str();
            return "pass: axes parallel, common direction " + pencil.center->str();
        case Verdict::Fail:
            if (!witness.empty()) return "fail: axes " + axis_list(witness) + " not in a pencil";
            return note.empty() ? "fail" : "fail: " + note;
        case Verdict::HypothesisNotSatisfied:
            if (!witness.empty())
                return "hypothesis not satisfied: axes " + axis_list(witness) +
                       " not in a pencil";
            return note.empty() ? "hypothesis not satisfied" : "hypothesis not satisfied: " + note;
    }
    return "unknown verdict";
}

VerifyReport check_five_axes(const NgonConfig& cfg) {
    if (cfg.size() != 5)
        throw MathError("five-axes check needs 5 vertices, got " + std::to_string(cfg.size()));
    DerivedData d = derive(cfg);
    return report_from_pencil(d.g_, cfg.field());
}

VerifyReport check_degenerate_five(const std::vector<ProjPoint>& points) {
    if (points.size() != 5)
        throw MathError("degenerate five-axes check needs 5 vertices, got " +
                        std::to_string(points.size()));
    for (int i = 1; i <= 5; ++i) {
        require_same_field(points[i - 1].field(), points[0].field());
        if (points[i - 1].is_infinite())
            throw MathError("vertex at infinity (A_" + std::to_string(i) + ")");
    }
    for (int i = 1; i <= 5; ++i)
        for (int j = i + 1; j <= 5; ++j)
            if (points[i - 1] == points[j - 1])
                throw MathError("coincident vertices (A_" + std::to_string(i) + ", A_" +
                                std::to_string(j) + ")");

    auto at = [&](int i) -> const ProjPoint& { return points[((i - 1) % 5 + 5) % 5]; };

    // Exactly one collinear triple is admitted: A_1, A_4, A_5.
    for (int i = 1; i <= 5; ++i)
        for (int j = i + 1; j <= 5; ++j)
            for (int k = j + 1; k <= 5; ++k) {
                bool flat = collinear(at(i), at(j), at(k));
                bool wanted = (i == 1 && j == 4 && k == 5);
                if (wanted && !flat)
                    throw MathError("A_5 is not on the line through A_1 and A_4");
                if (!wanted && flat)
                    throw MathError("unexpected collinear triple (" + std::to_string(i) + ", " +
                                    std::to_string(j) + ", " + std::to_string(k) + ")");
            }

    std::vector<ProjLine> l;
    for (int i = 1; i <= 5; ++i) l.push_back(join(at(i - 1), at(i + 1)));
    auto side = [&](int i) -> const ProjLine& { return l[((i - 1) % 5 + 5) % 5]; };
    for (int i = 1; i <= 5; ++i)
        if (is_parallel(side(i), side(i + 1)))
            throw MathError("adjacent sides parallel (l_" + std::to_string(i) + ", l_" +
                            std::to_string(i % 5 + 1) + ")");

    std::vector<ProjPoint> B;
    for (int i = 1; i <= 5; ++i) B.push_back(meet(side(i), side(i + 1)));
    auto corner = [&](int i) -> const ProjPoint& { return B[((i - 1) % 5 + 5) % 5]; };
    if (corner(4) != at(5) || corner(5) != at(5))
        throw std::logic_error("degenerate corner does not collapse to A_5");

    // g_1 and g_4 see A_5 as a tangent pair; g_5 has its apex on the base
    // line and uses the two sides through A_5 in place of the chords.
    std::vector<ProjLine> g;
    for (int i = 1; i <= 4; ++i) {
        CollinearQuad quad =
            CollinearQuad::make(side(i), at(i - 1), corner(i - 1), corner(i), at(i + 1));
        g.push_back(axis_from_outside(quad, at(i)).g);
    }
    g.push_back(axis_degenerate(at(4), at(1), at(5), side(4), side(1)).g);

    return report_from_pencil(g, points[0].field());
}

namespace {

void require_on(const ProjPoint& P, const ProjLine& l, const std::string& who,
                const std::string& line_desc) {
    if (!incident(P, l))
        throw MathError(who + " is not on the line through " + line_desc);
}

void forbid_equal(const ProjPoint& P, const ProjPoint& Q, const std::string& a,
                  const std::string& b) {
    if (P == Q) throw MathError(a + " and " + b + " coincide");
}

} // namespace

ConcurInput ConcurInput::make(const ProjPoint& A, const ProjPoint& B, const ProjPoint& C,
                              const ProjPoint& D, const ProjPoint& E, const ProjPoint& F,
                              const ProjPoint& G, const ProjPoint& H, const ProjPoint& I) {
    std::array<ProjPoint, 9> pts{A, B, C, D, E, F, G, H, I};
    static const char* names = "ABCDEFGHI";
    for (int k = 0; k < 9; ++k) {
        require_same_field(pts[k].field(), pts[0].field());
        if (pts[k].is_infinite())
            throw MathError(std::string("concurrence point at infinity (") + names[k] + ")");
    }
    if (collinear(A, C, E)) throw MathError("A, C, E are collinear");

    ProjLine m1 = join(A, C);
    ProjLine m2 = join(C, E);
    require_on(F, m1, "F", "A and C");
    require_on(G, m1, "G", "A and C");
    require_on(H, m2, "H", "C and E");
    require_on(I, m2, "I", "C and E");
    forbid_equal(G, H, "G", "H");
    ProjLine m3 = join(G, H);
    require_on(B, m3, "B", "G and H");
    require_on(D, m3, "D", "G and H");

    // Bracket pairs must stay disjoint; A = F is the one admitted overlap
    // inside a pair (the tangent variant).
    forbid_equal(A, G, "A", "G");
    forbid_equal(F, C, "F", "C");
    forbid_equal(F, G, "F", "G");
    forbid_equal(H, B, "H", "B");
    forbid_equal(D, B, "D", "B");
    forbid_equal(D, G, "D", "G");
    forbid_equal(C, I, "C", "I");
    forbid_equal(H, E, "H", "E");
    forbid_equal(H, I, "H", "I");

    ProjPoint U = bracket_point(CollinearQuad::make(m1, A, F, C, G));
    ProjPoint V = bracket_point(CollinearQuad::make(m3, H, D, B, G));
    ProjPoint W = bracket_point(CollinearQuad::make(m2, C, H, E, I));
    return ConcurInput(std::move(pts), {std::move(U), std::move(V), std::move(W)});
}

std::array<ProjLine, 3> ConcurInput::lines() const {
    return {join(B(), U()), join(C(), V()), join(D(), W())};
}

bool concur_condition(const ConcurInput& inp, bool degenerate_AF) {
    if (degenerate_AF && inp.A() != inp.F())
        throw MathError("degenerate variant requires A = F");
    if (!degenerate_AF && inp.A() == inp.F())
        throw MathError("A = F needs the degenerate variant");

    auto ratio = [](const ProjPoint& P, const ProjPoint& Q, const ProjPoint& R,
                    const ProjPoint& S, const char* rn, const char* sn) {
        if (R == S) throw MathError(std::string("degenerate ratio: ") + rn + " = " + sn);
        return line_ratio(P, Q, R, S);
    };

    Scalar lhs = ratio(inp.B(), inp.G(), inp.B(), inp.H(), "B", "H") *
                 ratio(inp.E(), inp.H(), inp.E(), inp.C(), "E", "C") *
                 ratio(inp.F(), inp.C(), inp.F(), inp.G(), "F", "G");
    Scalar rhs = ratio(inp.D(), inp.H(), inp.D(), inp.G(), "D", "G") *
                 ratio(inp.A(), inp.G(), inp.A(), inp.C(), "A", "C") *
                 ratio(inp.I(), inp.C(), inp.I(), inp.H(), "I", "H");
    return lhs == rhs;
}

bool hexagon_diagonal_identity(const Scalar& a, const Scalar& b, const Scalar& c,
                               const Scalar& d, const Scalar& e, const Scalar& f) {
    require_same_field(a.field(), b.field());
    require_same_field(a.field(), c.field());
    require_same_field(a.field(), d.field());
    require_same_field(a.field(), e.field());
    require_same_field(a.field(), f.field());
    const Scalar one = Scalar::from_int(a.field(), 1);
    if ((a + b).is_zero()) throw MathError("nondegeneracy violated: a + b = 0");
    if ((e + f).is_zero()) throw MathError("nondegeneracy violated: e + f = 0");
    if (a.is_zero()) throw MathError("nondegeneracy violated: a = 0");
    if (f.is_zero()) throw MathError("nondegeneracy violated: f = 0");
    if (c + d == one) throw MathError("nondegeneracy violated: c + d = 1");
    return (e + f - one) * c * b == (a + b - one) * d * e;
}

namespace {

std::array<Scalar, 6> conic_row(const std::array<Scalar, 3>& t) {
    const Scalar &x = t[0], &y = t[1], &z = t[2];
    return {x * x, x * y, y * y, x * z, y * z, z * z};
}

bool det6_is_zero(std::array<std::array<Scalar, 6>, 6> m) {
    for (int col = 0; col < 6; ++col) {
        int pivot = -1;
        for (int r = col; r < 6 && pivot < 0; ++r)
            if (!m[r][col].is_zero()) pivot = r;
        if (pivot < 0) return true;
        std::swap(m[col], m[pivot]);
        for (int r = col + 1; r < 6; ++r) {
            if (m[r][col].is_zero()) continue;
            Scalar f = m[r][col] / m[col][col];
            for (int c = col; c < 6; ++c) m[r][c] = m[r][c] - f * m[col][c];
        }
    }
    return false;
}

} // namespace

bool six_points_on_conic(const std::array<ProjPoint, 6>& pts) {
    std::array<std::array<Scalar, 6>, 6> m{
        conic_row(pts[0].coords()), conic_row(pts[1].coords()), conic_row(pts[2].coords()),
        conic_row(pts[3].coords()), conic_row(pts[4].coords()), conic_row(pts[5].coords())};
    for (const ProjPoint& p : pts) require_same_field(p.field(), pts[0].field());
    return det6_is_zero(std::move(m));
}

bool six_lines_tangent_conic(const std::array<ProjLine, 6>& lines) {
    std::array<std::array<Scalar, 6>, 6> m{
        conic_row(lines[0].coeffs()), conic_row(lines[1].coeffs()), conic_row(lines[2].coeffs()),
        conic_row(lines[3].coeffs()), conic_row(lines[4].coeffs()), conic_row(lines[5].coeffs())};
    for (const ProjLine& l : lines) require_same_field(l.field(), lines[0].field());
    return det6_is_zero(std::move(m));
}

bool SixEquivalence::all_agree() const {
    for (bool t : triple_pencil)
        if (t != axes_pencil) return false;
    return diagonals_pencil == axes_pencil && corners_on_conic == axes_pencil;
}

SixEquivalence six_equivalence(const NgonConfig& cfg) {
    if (cfg.size() != 6)
        throw MathError("hexagon equivalence needs 6 vertices, got " +
                        std::to_string(cfg.size()));
    DerivedData d = derive(cfg);

    SixEquivalence out;
    out.axes_pencil = pencil_of(d.g_).is_pencil();
    for (int i = 1; i <= 6; ++i)
        out.triple_pencil[i - 1] = pencil_of({d.g(i - 1), d.g(i), d.g(i + 1)}).is_pencil();
    out.diagonals_pencil = pencil_of({join(cfg.vertex(1), cfg.vertex(4)),
                                      join(cfg.vertex(2), cfg.vertex(5)),
                                      join(cfg.vertex(3), cfg.vertex(6))})
                               .is_pencil();
    out.corners_on_conic =
        six_points_on_conic({d.B(1), d.B(2), d.B(3), d.B(4), d.B(5), d.B(6)});
    return out;
}

namespace {

bool criterion_lines_pencil(const std::vector<ProjPoint>& pts, int i) {
    const int n = static_cast<int>(pts.size());
    auto at = [&](int k) -> const ProjPoint& { return pts[((k - 1) % n + n) % n]; };
    ProjLine lm2 = join(at(i - 3), at(i - 1)); // l_{i-2}
    ProjLine lp2 = join(at(i + 1), at(i + 3)); // l_{i+2}
    ProjPoint D = meet(lm2, lp2);
    return pencil_of({join(at(i - 2), at(i + 1)), join(at(i - 1), at(i + 2)), join(at(i), D)})
        .is_pencil();
}

} // namespace

bool hexagon_criterion(const NgonConfig& cfg, int i) {
    return criterion_lines_pencil(cfg.points(), i);
}

bool hexagon_criterion(const std::vector<ProjPoint>& points, int i) {
    if (points.size() < 5)
        throw MathError("criterion needs at least 5 points, got " +
                        std::to_string(points.size()));
    return criterion_lines_pencil(points, i);
}

VerifyReport check_main(const NgonConfig& cfg) {
    const int n = cfg.size();
    DerivedData d = derive(cfg);

    VerifyReport rep;
    rep.field = cfg.field();

    std::vector<ProjLine> hyp_axes(d.g_.begin(), d.g_.begin() + (n - 3));
    PencilResult hyp = pencil_of(hyp_axes);
    if (hyp.kind == PencilKind::NotAPencil) {
        rep.verdict = Verdict::HypothesisNotSatisfied;
        rep.pencil = hyp;
        rep.witness = first_bad_triple(hyp_axes);
        rep.axes_checked = n - 3;
        rep.note = "axes g_1..g_" + std::to_string(n - 3) + " do not lie in a pencil";
        return rep;
    }

    rep.pencil = pencil_of(d.g_);
    rep.axes_checked = n;
    bool same_center = hyp.kind == PencilKind::Degenerate ||
                       (rep.pencil.is_pencil() && *rep.pencil.center == *hyp.center);
    if (rep.pencil.is_pencil() && same_center) {
        rep.verdict = Verdict::Pass;
    } else {
        rep.verdict = Verdict::Fail;
        rep.witness = first_bad_triple(d.g_);
        if (rep.witness.empty()) rep.note = "remaining axes form a different pencil";
    }
    return rep;
}

} // namespace naxes
