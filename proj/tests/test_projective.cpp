#include <doctest.h>

#include "test_helpers.hpp"

using namespace naxes;
using namespace th;

TEST_CASE("canonical representatives") {
    CHECK(ProjPoint(sc(2), sc(4), sc(6)) == pt3(1, 2, 3));
    CHECK(ProjPoint(sc(-2), sc(4), sc(6)) == pt3(1, -2, -3));
    CHECK(pt3(0, -3, 6) == pt3(0, 1, -2));
    CHECK(pt3(1, 2, 3).str() == "(1 : 2 : 3)");
    CHECK(pt(0, 0) == pt3(0, 0, 1));

    // Fractions clear to coprime integers.
    CHECK(ProjPoint::affine(frac(3, 2), sc(-5)) == pt3(3, -10, 2));
    CHECK(pt3(3, -10, 2).affine_x() == frac(3, 2));
    CHECK(pt3(3, -10, 2).affine_y() == sc(-5));

    // Over GF(p) the first nonzero coordinate becomes 1.
    FieldTag gf = FieldTag::prime(11);
    ProjPoint p(sc(gf, 3), sc(gf, 4), sc(gf, 5));
    CHECK(p.x().residue() == 1);
    CHECK(p.y().residue() == 5);  // 4 * 3^-1 = 16 = 5
    CHECK(p.z().residue() == 9);  // 5 * 4 = 20 = 9

    CHECK_THROWS_WITH_AS(ProjPoint(sc(0), sc(0), sc(0)), "zero homogeneous triple", MathError);
    CHECK_THROWS_WITH_AS(pt3(1, 0, 0).affine_x(), "point at infinity has no affine coordinates",
                         MathError);
    CHECK(pt3(1, 0, 0).is_infinite());
    CHECK_FALSE(pt(1, 0).is_infinite());
}

TEST_CASE("join and meet") {
    CHECK(join(pt(0, 0), pt(1, 0)) == ln(0, 1, 0));
    CHECK(join(pt(0, 0), pt(0, 1)) == ln(1, 0, 0));
    CHECK(join(pt(2, 1), pt(1, 2)) == ln(1, 1, -3));

    CHECK(meet(ln(1, 0, 0), ln(0, 1, 0)) == pt(0, 0));
    CHECK(meet(ln(1, 0, 0), ln(1, 0, -1)) == pt3(0, 1, 0));
    CHECK(meet(ln(1, 1, -3), ln(1, -1, -1)) == pt(2, 1));

    CHECK_THROWS_WITH_AS(join(pt(1, 2), pt(1, 2)), "coincident points", MathError);
    CHECK_THROWS_WITH_AS(meet(ln(1, 1, -3), ln(2, 2, -6)), "coincident lines", MathError);

    CHECK(incident(pt(2, 1), ln(1, 1, -3)));
    CHECK_FALSE(incident(pt(0, 0), ln(1, 1, -3)));
    CHECK(collinear(pt(0, 0), pt(1, 1), pt(2, 2)));
    CHECK_FALSE(collinear(pt(0, 0), pt(1, 1), pt(2, 3)));
}

TEST_CASE("join/meet duality") {
    Rng rng(7);
    int done = 0;
    while (done < 100) {
        ProjPoint P = rand_point(rng, FieldTag::rationals(), 9);
        ProjPoint Q = rand_point(rng, FieldTag::rationals(), 9);
        ProjPoint R = rand_point(rng, FieldTag::rationals(), 9);
        if (P == Q || P == R || collinear(P, Q, R)) continue;
        CHECK(meet(join(P, Q), join(P, R)) == P);
        ++done;
    }
}

TEST_CASE("parallels and directions") {
    CHECK(is_parallel(ln(1, 0, 0), ln(1, 0, -1)));
    CHECK_FALSE(is_parallel(ln(1, 0, 0), ln(0, 1, 0)));
    CHECK(is_parallel(ln(2, 3, -3), ln(4, 6, -1)));
    CHECK_THROWS_WITH_AS(is_parallel(ProjLine::infinity_line(FieldTag::rationals()), ln(1, 0, 0)),
                         "line at infinity has no direction", MathError);

    CHECK(direction_of(ln(0, 1, 0)) == pt3(1, 0, 0));
    CHECK(direction_of(ln(2, 3, -3)) == pt3(3, -2, 0));

    CHECK(parallel_through(ln(0, 1, 0), pt(0, 1)) == ln(0, 1, -1));
    CHECK(parallel_through(ln(2, 3, -3), pt(0, 0)) == ln(2, 3, 0));
    CHECK_THROWS_WITH_AS(parallel_through(ln(0, 1, 0), pt3(1, 0, 0)),
                         "no parallel through a point at infinity", MathError);
}

TEST_CASE("pencil classification") {
    PencilResult r = pencil_of({ln(1, 0, -1), ln(0, 1, -1), ln(1, -1, 0)});
    CHECK(r.kind == PencilKind::FiniteCenter);
    REQUIRE(r.center.has_value());
    CHECK(*r.center == pt(1, 1));

    r = pencil_of({ln(1, 0, 0), ln(1, 0, -1), ln(1, 0, -2)});
    CHECK(r.kind == PencilKind::InfiniteCenter);
    REQUIRE(r.center.has_value());
    CHECK(*r.center == pt3(0, 1, 0));

    r = pencil_of({ln(1, 0, 0), ln(0, 1, 0), ln(1, 1, -1)});
    CHECK(r.kind == PencilKind::NotAPencil);
    CHECK_FALSE(r.center.has_value());
    CHECK_FALSE(r.is_pencil());

    // Any two distinct lines form a pencil; a repeated line is degenerate.
    CHECK(pencil_of({ln(1, 0, 0), ln(0, 1, 0)}).is_pencil());
    r = pencil_of({ln(1, 0, -1), ln(2, 0, -2)});
    CHECK(r.kind == PencilKind::Degenerate);

    CHECK_THROWS_WITH_AS(pencil_of({ln(1, 0, 0)}), "pencil needs at least 2 lines", MathError);
    CHECK_THROWS_WITH_AS(
        pencil_of({ln(1, 0, 0), ProjLine::infinity_line(FieldTag::rationals())}),
        "line at infinity in pencil input", MathError);
}

TEST_CASE("pencil rank agrees with brute-force determinants") {
    Rng rng(11);
    for (int it = 0; it < 200; ++it) {
        int n = 2 + static_cast<int>(rng.below(4));
        std::vector<ProjLine> lines;
        while (static_cast<int>(lines.size()) < n) {
            Scalar u = rand_scalar(rng, FieldTag::rationals(), 5);
            Scalar v = rand_scalar(rng, FieldTag::rationals(), 5);
            Scalar w = rand_scalar(rng, FieldTag::rationals(), 5);
            if (u.is_zero() && v.is_zero()) continue;
            lines.emplace_back(u, v, w);
        }
        bool some_triple_full_rank = false;
        for (std::size_t i = 0; i < lines.size(); ++i)
            for (std::size_t j = i + 1; j < lines.size(); ++j)
                for (std::size_t k = j + 1; k < lines.size(); ++k)
                    if (!det3(lines[i], lines[j], lines[k]).is_zero())
                        some_triple_full_rank = true;
        PencilResult r = pencil_of(lines);
        CHECK((r.kind == PencilKind::NotAPencil) == some_triple_full_rank);
        if (r.is_pencil())
            for (const ProjLine& l : lines) CHECK(incident(*r.center, l));
    }
}

TEST_CASE("pencil over a prime field") {
    FieldTag gf = FieldTag::prime(13);
    ProjPoint M = pt(gf, 4, 9);
    std::vector<ProjLine> lines;
    lines.push_back(join(M, pt(gf, 0, 0)));
    lines.push_back(join(M, pt(gf, 1, 0)));
    lines.push_back(join(M, pt(gf, 0, 1)));
    PencilResult r = pencil_of(lines);
    CHECK(r.kind == PencilKind::FiniteCenter);
    CHECK(*r.center == M);
}

TEST_CASE("projectivity fitting") {
    std::array<ProjPoint, 4> frame = {pt3(1, 0, 0), pt3(0, 1, 0), pt3(0, 0, 1), pt3(1, 1, 1)};
    Matrix3 id = fit_projectivity(frame, frame);
    for (const ProjPoint& p : {pt3(1, 2, 3), pt(5, -7), pt3(1, 0, 0)}) CHECK(id.apply(p) == p);

    std::array<ProjPoint, 4> scaled = {pt3(2, 0, 0), pt3(0, 3, 0), pt3(0, 0, 5), pt3(2, 3, 5)};
    Matrix3 diag = fit_projectivity(frame, scaled);
    CHECK(diag.apply(pt3(1, 1, 1)) == pt3(2, 3, 5));
    CHECK(diag.apply(pt3(1, 1, 0)) == pt3(2, 3, 0));
    CHECK(diag.apply(pt3(1, 0, 0)) == pt3(1, 0, 0));

    // Fitted map hits all four prescribed pairs.
    std::array<ProjPoint, 4> dst = {pt(2, 1), pt(1, 2), pt(0, 1), pt(3, 3)};
    Matrix3 m = fit_projectivity(frame, dst);
    for (int k = 0; k < 4; ++k) CHECK(m.apply(frame[k]) == dst[k]);

    std::array<ProjPoint, 4> bad = {pt(0, 0), pt(1, 1), pt(2, 2), pt(1, 0)};
    CHECK_THROWS_WITH_AS(fit_projectivity(bad, frame), "not in general position", MathError);
    CHECK_THROWS_WITH_AS(fit_projectivity(frame, bad), "not in general position", MathError);
}
