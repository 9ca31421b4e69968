#include "naxes/genmove.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>
#include <utility>

namespace naxes {

namespace {

std::uint64_t splitmix64(std::uint64_t x) {
    x += 0x9E3779B97F4A7C15ull;
    x = (x ^ (x >> 30)) * 0xBF58476D1CE4E5B9ull;
    x = (x ^ (x >> 27)) * 0x94D049BB133111EBull;
    return x ^ (x >> 31);
}

} // namespace

Rng Rng::substream(std::uint64_t seed, std::uint64_t index) {
    return Rng(seed ^ splitmix64(index));
}

std::uint64_t Rng::below(std::uint64_t k) {
    if (k == 0) throw MathError("empty draw range");
    const std::uint64_t limit = std::numeric_limits<std::uint64_t>::max() -
                                std::numeric_limits<std::uint64_t>::max() % k;
    std::uint64_t r;
    do {
        r = eng_();
    } while (r >= limit);
    return r % k;
}

long Rng::int_in(long lo, long hi) {
    if (lo > hi) throw MathError("empty draw range");
    return lo + static_cast<long>(below(static_cast<std::uint64_t>(hi - lo) + 1));
}

namespace {

// Cyclic left rotation: rotated(p, r)[k] = p[(k + r) mod n], so the vertex
// with 1-based index r+3 lands in position 3.
std::vector<ProjPoint> rotated(const std::vector<ProjPoint>& pts, long r) {
    const long n = static_cast<long>(pts.size());
    r = (r % n + n) % n;
    std::vector<ProjPoint> out;
    out.reserve(n);
    for (long k = 0; k < n; ++k) out.push_back(pts[(k + r) % n]);
    return out;
}

ProjPoint along(const ProjPoint& from, const ProjPoint& to, const Scalar& t) {
    Scalar x = from.affine_x() + t * (to.affine_x() - from.affine_x());
    Scalar y = from.affine_y() + t * (to.affine_y() - from.affine_y());
    return ProjPoint::affine(x, y);
}

Scalar draw_coordinate(Rng& rng, const FieldTag& field, long bound) {
    if (field.is_rational()) return Scalar::from_int(field, rng.int_in(-bound, bound));
    std::uint64_t span = static_cast<std::uint64_t>(2 * bound + 1);
    span = std::min<std::uint64_t>(span, field.characteristic());
    return Scalar::from_int(field, static_cast<long>(rng.below(span)));
}

} // namespace

NgonConfig sample_config(const SampleParams& p) {
    if (p.n < 5) throw MathError("sampler needs n >= 5, got " + std::to_string(p.n));
    if (p.bound < 5) throw MathError("sampler bound must be at least 5");
    if (p.max_retries < 1) throw MathError("sampler needs a positive retry budget");

    Rng rng(p.seed);
    for (int attempt = 0; attempt < p.max_retries; ++attempt) {
        std::vector<ProjPoint> pts;
        pts.reserve(p.n);
        for (int k = 0; k < p.n; ++k) {
            Scalar x = draw_coordinate(rng, p.field, p.bound);
            Scalar y = draw_coordinate(rng, p.field, p.bound);
            pts.push_back(ProjPoint::affine(x, y));
        }
        try {
            return NgonConfig::validate(std::move(pts));
        } catch (const InvalidConfig&) {
        }
    }
    throw SamplingError("sampling budget exceeded");
}

NgonConfig sample_pencil_config(int n, const FieldTag& field, std::uint64_t seed, long bound,
                                int max_retries) {
    if (n < 6) throw MathError("pencil sampler needs n >= 6, got " + std::to_string(n));

    SampleParams base;
    base.n = 5;
    base.field = field;
    base.seed = seed;
    base.bound = bound;
    base.max_retries = max_retries;
    NgonConfig cur = sample_config(base);

    CenterResult cr = center(cur);
    if (!cr.pencil.is_pencil())
        throw std::logic_error("pentagon axes failed to form a pencil");
    ProjPoint M = *cr.M;

    Rng rng = Rng::substream(seed, 0x67726F77ull); // growth stream, apart from the pentagon's
    int budget = max_retries;
    while (cur.size() < n) {
        int at = 1 + static_cast<int>(rng.below(static_cast<std::uint64_t>(cur.size())));
        Scalar t1 = Scalar::from_int(field, rng.int_in(-bound, bound));
        try {
            NgonConfig next = expand_preserving(cur, at, t1);
            CenterResult full = center(next);
            if (!full.pencil.is_pencil() || *full.M != M)
                throw std::logic_error("expansion lost the pencil center");
            cur = std::move(next);
        } catch (const InvalidConfig&) {
            if (--budget <= 0) throw SamplingError("sampling budget exceeded");
        } catch (const MathError&) {
            if (--budget <= 0) throw SamplingError("sampling budget exceeded");
        }
    }
    return cur;
}

NgonConfig reduce(const NgonConfig& cfg, int at) {
    const int n = cfg.size();
    if (n < 6) throw MathError("reduce needs at least 6 vertices, got " + std::to_string(n));

    std::vector<ProjPoint> I = rotated(cfg.points(), at - 3);
    ProjPoint X = meet(join(I[0], I[2]), join(I[3], I[5]));
    if (X.is_infinite()) throw MathError("merge point at infinity, perturb first");

    std::vector<ProjPoint> out{I[0], I[1], std::move(X)};
    for (int k = 4; k < n; ++k) out.push_back(I[k]);
    out = rotated(out, -(at - 3));
    return NgonConfig::validate(std::move(out));
}

namespace {

NgonConfig finish_expansion(const NgonConfig& cfg, int at, std::vector<ProjPoint> I,
                            ProjPoint P, ProjPoint Q) {
    const int n = cfg.size();
    std::vector<ProjPoint> out{std::move(I[0]), std::move(I[1]), std::move(P), std::move(Q)};
    for (int k = 3; k < n; ++k) out.push_back(std::move(I[k]));
    out = rotated(out, -(at - 3));
    NgonConfig res = NgonConfig::validate(std::move(out));

    NgonConfig back = reduce(res, at);
    if (back.points() != cfg.points())
        throw std::logic_error("expand/reduce round trip broke");
    return res;
}

} // namespace

NgonConfig expand(const NgonConfig& cfg, int at, const Scalar& t1, const Scalar& t2) {
    require_same_field(t1.field(), cfg.field());
    require_same_field(t2.field(), cfg.field());

    std::vector<ProjPoint> I = rotated(cfg.points(), at - 3);
    const ProjPoint& X = I[2];
    ProjPoint P = along(X, I[0], t1);
    ProjPoint Q = along(X, I[4], t2);
    return finish_expansion(cfg, at, std::move(I), std::move(P), std::move(Q));
}

NgonConfig expand_preserving(const NgonConfig& cfg, int at, const Scalar& t1) {
    require_same_field(t1.field(), cfg.field());
    const int n = cfg.size();

    std::vector<ProjPoint> I = rotated(cfg.points(), at - 3);
    const ProjPoint& X = I[2];

    // The bracket point of the side through X that will carry P. Keeping it
    // fixed keeps that side's axis, which is what lets a pencil survive the
    // growth: the new corner on l_2 must be the involution image of P.
    ProjLine l1 = join(I[n - 1], I[1]);
    ProjLine l2 = join(I[0], X);
    ProjLine l3 = join(I[1], I[3]);
    ProjPoint B12 = meet(l1, l2);
    ProjPoint B23 = meet(l2, l3);
    ProjPoint C2 = bracket_point(CollinearQuad::make(l2, I[0], B12, B23, X));

    ProjPoint P = along(X, I[0], t1);
    ProjPoint T = involution_image(P, C2, B23, X, l2);
    ProjPoint Q = meet(join(I[1], T), join(X, I[4]));
    return finish_expansion(cfg, at, std::move(I), std::move(P), std::move(Q));
}

namespace {

// Sides l_1..l_5 of a 7-point window A_0..A_6, after the window versions of
// the configuration assumptions (no wraparound: only the sides and
// incidences that exist inside the window are checked).
std::vector<ProjLine> window_sides_checked(const std::vector<ProjPoint>& w) {
    if (w.size() != 7)
        throw MathError("move window needs 7 points (A_0..A_6), got " +
                        std::to_string(w.size()));
    for (int k = 0; k < 7; ++k) {
        require_same_field(w[k].field(), w[0].field());
        if (w[k].is_infinite())
            throw InvalidConfig({ViolationKind::VertexAtInfinity, k, 0});
    }
    for (int i = 0; i < 7; ++i)
        for (int j = i + 1; j < 7; ++j)
            if (w[i] == w[j]) throw InvalidConfig({ViolationKind::CoincidentVertices, i, j});

    std::vector<ProjLine> l;
    l.reserve(5);
    for (int i = 1; i <= 5; ++i) l.push_back(join(w[i - 1], w[i + 1]));
    auto side = [&](int i) -> const ProjLine& { return l[i - 1]; };

    for (int i = 0; i <= 6; ++i)
        for (int off : {-2, 0, 2}) {
            int j = i + off;
            if (j >= 1 && j <= 5 && incident(w[i], side(j)))
                throw InvalidConfig({ViolationKind::VertexOnSide, i, j});
        }
    for (int i = 2; i <= 4; ++i)
        if (side(i - 1) == side(i + 1))
            throw InvalidConfig({ViolationKind::SidesThroughVertexEqual, i, i - 1});
    for (int i = 1; i <= 4; ++i)
        if (is_parallel(side(i), side(i + 1)))
            throw InvalidConfig({ViolationKind::AdjacentSidesParallel, i, i + 1});
    return l;
}

ProjLine window_axis(const std::vector<ProjPoint>& w, const std::vector<ProjLine>& l, int i) {
    const ProjLine& base = l[i - 1];
    ProjPoint Bprev = meet(l[i - 2], base); // B_{i-1,i}
    ProjPoint Bnext = meet(base, l[i]);     // B_{i,i+1}
    CollinearQuad q = CollinearQuad::make(base, w[i - 1], Bprev, Bnext, w[i + 1]);
    return axis_from_outside(q, w[i]).g;
}

} // namespace

std::vector<ProjPoint> move_vertices(const std::vector<ProjPoint>& window,
                                     const MoveChoice& choice) {
    if (choice.index != 3)
        throw MathError("move index must be 3, got " + std::to_string(choice.index));

    std::vector<ProjLine> l = window_sides_checked(window);
    require_same_field(choice.t.field(), window[0].field());

    ProjLine g2 = window_axis(window, l, 2);
    ProjLine g3 = window_axis(window, l, 3);
    ProjLine g4 = window_axis(window, l, 4);
    if (!pencil_of({g2, g3, g4}).is_pencil())
        throw MathError("axes g_2, g_3, g_4 are not in a pencil");

    if (choice.t.is_zero()) return window;

    const ProjLine& l4 = l[3];
    ProjPoint A3p = along(window[3], window[5], choice.t);

    if (A3p == window[5]) throw MathError("forbidden position: A_3' = A_5");
    if (A3p == meet(l[2], l4)) throw MathError("forbidden position: A_3' = B_{3,4}");
    auto forbid_meet = [&](const ProjLine& m, const std::string& what) {
        if (m == l4 || meet(m, l4) == A3p)
            throw MathError("forbidden position: A_3' = " + what);
    };
    forbid_meet(join(window[1], window[2]), "the meet of <A_1,A_2> with l_4");
    forbid_meet(join(window[0], window[1]), "the meet of <A_0,A_1> with l_4");
    forbid_meet(l[0], "the meet of l_1 with l_4");
    forbid_meet(l[4], "the meet of l_5 with l_4");
    forbid_meet(join(window[1], window[4]), "the meet of <A_1,A_4> with l_4");
    forbid_meet(parallel_through(l[0], window[1]),
                "the meet of l_4 with the parallel to l_1 through A_1");

    ProjPoint P = meet(join(window[1], window[4]), join(window[2], A3p));
    if (P == window[3]) throw MathError("degenerate move: P = A_3");
    ProjPoint A2p = meet(l[0], join(P, window[3]));

    std::vector<ProjPoint> moved = window;
    moved[2] = std::move(A2p);
    moved[3] = std::move(A3p);
    std::vector<ProjLine> lm = window_sides_checked(moved);

    if (window_axis(moved, lm, 4) != g4)
        throw std::logic_error("moved axis g_4 changed");
    return moved;
}

} // namespace naxes
