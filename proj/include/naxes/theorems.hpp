#pragma once

#include <array>

#include "naxes/ngon.hpp"

namespace naxes {

enum class Verdict { Pass, Fail, HypothesisNotSatisfied };

struct VerifyReport {
    Verdict verdict = Verdict::Fail;
    PencilResult pencil;      // classification of the axes that were checked
    std::vector<int> witness; // 1-based axis indices of the first rank-3 triple
    int axes_checked = 0;
    FieldTag field = FieldTag::rationals();
    std::string note;

    bool passed() const { return verdict == Verdict::Pass; }
    std::string describe() const;
};

// All five axes of a valid pentagon lie in a pencil.
VerifyReport check_five_axes(const NgonConfig& cfg);

// Degenerate pentagon with A_5 on <A_1,A_4> and no other collinear triple;
// the sides must still be pairwise non-parallel. A_5 = B_{4,5} = B_{5,1},
// so g_1 and g_4 come from tangent quads and g_5 from the on-line apex
// construction. Verifies that the five axes still lie in one pencil.
VerifyReport check_degenerate_five(const std::vector<ProjPoint>& points);

// Three concurrent-or-parallel candidate lines <B,U>, <C,V>, <D,W> built
// from nine finite points: A, C, E in general position, F and G on <A,C>,
// H and I on <C,E>, G and H on the third line <B,D>. U, V, W are the
// bracket points [A,F|C,G], [H,D|B,G], [C,H|E,I]. A = F is allowed (the
// tangent variant); every other within-line coincidence that would make a
// bracket pair overlap is rejected.
class ConcurInput {
public:
    static ConcurInput make(const ProjPoint& A, const ProjPoint& B, const ProjPoint& C,
                            const ProjPoint& D, const ProjPoint& E, const ProjPoint& F,
                            const ProjPoint& G, const ProjPoint& H, const ProjPoint& I);

    const ProjPoint& A() const { return pts_[0]; }
    const ProjPoint& B() const { return pts_[1]; }
    const ProjPoint& C() const { return pts_[2]; }
    const ProjPoint& D() const { return pts_[3]; }
    const ProjPoint& E() const { return pts_[4]; }
    const ProjPoint& F() const { return pts_[5]; }
    const ProjPoint& G() const { return pts_[6]; }
    const ProjPoint& H() const { return pts_[7]; }
    const ProjPoint& I() const { return pts_[8]; }
    const ProjPoint& U() const { return uvw_[0]; }
    const ProjPoint& V() const { return uvw_[1]; }
    const ProjPoint& W() const { return uvw_[2]; }

    // The candidate lines themselves, in the order <B,U>, <C,V>, <D,W>.
    std::array<ProjLine, 3> lines() const;

private:
    ConcurInput(std::array<ProjPoint, 9> pts, std::array<ProjPoint, 3> uvw)
        : pts_(std::move(pts)), uvw_(std::move(uvw)) {}

    std::array<ProjPoint, 9> pts_;
    std::array<ProjPoint, 3> uvw_;
};

// The ratio criterion
//   (B-G)/(B-H) * (E-H)/(E-C) * (F-C)/(F-G)
//     = (D-H)/(D-G) * (A-G)/(A-C) * (I-C)/(I-H),
// which holds exactly when the three candidate lines lie in a pencil.
// degenerate_AF selects the tangent variant and requires A = F.
bool concur_condition(const ConcurInput& inp, bool degenerate_AF);

// (e+f-1)cb = (a+b-1)de: the concurrence criterion for the hexagon
//   A_1=(a,b), A_2=(0,1), A_3=(0,0), A_4=(1,0), A_5=(e,f), A_6=(c,d)
// whose main diagonals it governs. The frame forces a+b != 0, e+f != 0,
// a != 0, f != 0 and c+d != 1; violations are reported by name.
bool hexagon_diagonal_identity(const Scalar& a, const Scalar& b, const Scalar& c,
                               const Scalar& d, const Scalar& e, const Scalar& f);

// Vanishing of the 6x6 determinant with rows (x^2, xy, y^2, xz, yz, z^2).
// Meaningful as "the six points lie on a conic" only when no four of them
// are collinear (otherwise a line pair makes it vacuously true).
bool six_points_on_conic(const std::array<ProjPoint, 6>& pts);

// Dual test on the coefficient triples: true iff the six lines are tangent
// to some conic. Same determinant, same caveat for four concurrent lines.
bool six_lines_tangent_conic(const std::array<ProjLine, 6>& lines);

// The four equivalent faces of the hexagon theorem, evaluated separately:
// (1) all six axes in a pencil, (2) the triple g_{i-1}, g_i, g_{i+1} in a
// pencil for each i, (3) the main diagonals <A_i,A_{i+3}> in a pencil,
// (4) the six corner points B_{i,i+1} on a conic. On a valid hexagon the
// theorem says the nine booleans agree; callers assert all_agree().
struct SixEquivalence {
    bool axes_pencil = false;
    std::array<bool, 6> triple_pencil{};
    bool diagonals_pencil = false;
    bool corners_on_conic = false;

    bool all_agree() const;
};

SixEquivalence six_equivalence(const NgonConfig& cfg);

// Pencil test for the axis triple g_{i-1}, g_i, g_{i+1} expressed without
// any axis: with D_i = l_{i-2} meet l_{i+2} (possibly infinite), the triple
// is a pencil iff <A_{i-2},A_{i+1}>, <A_{i-1},A_{i+2}>, <A_i,D_i> is one.
// For a hexagon and i=3 this is exactly the main-diagonal condition.
bool hexagon_criterion(const NgonConfig& cfg, int i);

// Unvalidated variant on raw points, tolerant of the boundary cases the
// configuration checks exclude (a vertex on a non-adjacent side, or at
// infinity); indices are 1-based cyclic into the list.
bool hexagon_criterion(const std::vector<ProjPoint>& points, int i);

// The n-axes theorem: if g_1..g_{n-3} lie in a pencil then so do the
// remaining three, with the same center. A failing hypothesis yields the
// HypothesisNotSatisfied verdict rather than an error.
VerifyReport check_main(const NgonConfig& cfg);

} // namespace naxes
