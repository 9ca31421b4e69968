#include "naxes/projective.hpp"

#include <utility>

namespace naxes {

namespace detail {

std::array<Scalar, 3> cross(const std::array<Scalar, 3>& a, const std::array<Scalar, 3>& b) {
    return {a[1] * b[2] - a[2] * b[1],
            a[2] * b[0] - a[0] * b[2],
            a[0] * b[1] - a[1] * b[0]};
}

std::array<Scalar, 3> canonicalize_triple(std::array<Scalar, 3> v) {
    require_same_field(v[0].field(), v[1].field());
    require_same_field(v[0].field(), v[2].field());
    if (v[0].is_zero() && v[1].is_zero() && v[2].is_zero())
        throw MathError("zero homogeneous triple");
    const FieldTag tag = v[0].field();
    if (tag.is_rational()) {
        // Clear denominators, divide by the gcd, fix the sign of the first
        // nonzero entry.
        mpz_class lcm_den = 1;
        for (const auto& s : v) mpz_lcm(lcm_den.get_mpz_t(), lcm_den.get_mpz_t(), s.rational().get_den().get_mpz_t());
        std::array<mpz_class, 3> n;
        for (int i = 0; i < 3; ++i) {
            mpq_class q = v[i].rational() * mpq_class(lcm_den);
            q.canonicalize();
            n[i] = q.get_num();
        }
        mpz_class g = 0;
        for (const auto& z : n) mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), z.get_mpz_t());
        for (auto& z : n) z /= g;
        for (const auto& z : n) {
            if (z != 0) {
                if (z < 0)
                    for (auto& w : n) w = -w;
                break;
            }
        }
        for (int i = 0; i < 3; ++i) v[i] = Scalar::from_rational(mpq_class(n[i]));
        return v;
    }
    for (const auto& s : v) {
        if (!s.is_zero()) {
            Scalar inv = s.inverse();
            for (auto& w : v) w *= inv;
            break;
        }
    }
    return v;
}

} // namespace detail

ProjPoint::ProjPoint(Scalar x, Scalar y, Scalar z)
    : c_(detail::canonicalize_triple({std::move(x), std::move(y), std::move(z)})) {}

ProjPoint ProjPoint::affine(const Scalar& x, const Scalar& y) {
    require_same_field(x.field(), y.field());
    return ProjPoint(x, y, Scalar::from_int(x.field(), 1));
}

Scalar ProjPoint::affine_x() const {
    if (is_infinite()) throw MathError("point at infinity has no affine coordinates");
    return c_[0] / c_[2];
}

Scalar ProjPoint::affine_y() const {
    if (is_infinite()) throw MathError("point at infinity has no affine coordinates");
    return c_[1] / c_[2];
}

std::string ProjPoint::str() const {
    return "(" + c_[0].str() + " : " + c_[1].str() + " : " + c_[2].str() + ")";
}

ProjLine::ProjLine(Scalar u, Scalar v, Scalar w)
    : c_(detail::canonicalize_triple({std::move(u), std::move(v), std::move(w)})) {}

ProjLine ProjLine::infinity_line(const FieldTag& tag) {
    Scalar zero(tag);
    return ProjLine(zero, zero, Scalar::from_int(tag, 1));
}

std::string ProjLine::str() const {
    return "[" + c_[0].str() + " : " + c_[1].str() + " : " + c_[2].str() + "]";
}

bool incident(const ProjPoint& P, const ProjLine& l) {
    const auto& p = P.coords();
    const auto& u = l.coeffs();
    return (p[0] * u[0] + p[1] * u[1] + p[2] * u[2]).is_zero();
}

ProjLine join(const ProjPoint& P, const ProjPoint& Q) {
    if (P == Q) throw MathError("coincident points");
    auto c = detail::cross(P.coords(), Q.coords());
    return ProjLine(c[0], c[1], c[2]);
}

ProjPoint meet(const ProjLine& l, const ProjLine& m) {
    if (l == m) throw MathError("coincident lines");
    auto c = detail::cross(l.coeffs(), m.coeffs());
    return ProjPoint(c[0], c[1], c[2]);
}

bool collinear(const ProjPoint& P, const ProjPoint& Q, const ProjPoint& R) {
    auto c = detail::cross(P.coords(), Q.coords());
    const auto& r = R.coords();
    return (c[0] * r[0] + c[1] * r[1] + c[2] * r[2]).is_zero();
}

bool is_parallel(const ProjLine& l, const ProjLine& m) {
    if (l.is_infinity() || m.is_infinity())
        throw MathError("line at infinity has no direction");
    // Proportional (u, v) parts.
    return (l.u() * m.v() - l.v() * m.u()).is_zero();
}

ProjPoint direction_of(const ProjLine& l) {
    if (l.is_infinity()) throw MathError("line at infinity has no direction");
    Scalar zero(l.field());
    return ProjPoint(l.v(), -l.u(), zero);
}

ProjLine parallel_through(const ProjLine& l, const ProjPoint& X) {
    if (l.is_infinity()) throw MathError("line at infinity has no direction");
    if (X.is_infinite()) throw MathError("no parallel through a point at infinity");
    return ProjLine(l.u() * X.z(), l.v() * X.z(), -(l.u() * X.x() + l.v() * X.y()));
}

PencilResult pencil_of(const std::vector<ProjLine>& lines) {
    if (lines.size() < 2) throw MathError("pencil needs at least 2 lines");
    for (const auto& l : lines) {
        if (l.is_infinity()) throw MathError("line at infinity in pencil input");
        require_same_field(l.field(), lines.front().field());
    }

    // Rank of the n x 3 coefficient matrix by Gaussian elimination over k.
    std::vector<std::array<Scalar, 3>> rows;
    rows.reserve(lines.size());
    for (const auto& l : lines) rows.push_back(l.coeffs());

    int rank = 0;
    std::array<std::array<Scalar, 3>, 3> pivots{};
    for (int col = 0; col < 3 && rank < 3; ++col) {
        std::size_t pivot_row = rows.size();
        for (std::size_t r = rank; r < rows.size(); ++r) {
            if (!rows[r][col].is_zero()) {
                pivot_row = r;
                break;
            }
        }
        if (pivot_row == rows.size()) continue;
        std::swap(rows[rank], rows[pivot_row]);
        Scalar inv = rows[rank][col].inverse();
        for (int c = col; c < 3; ++c) rows[rank][c] *= inv;
        for (std::size_t r = 0; r < rows.size(); ++r) {
            if (static_cast<int>(r) == rank || rows[r][col].is_zero()) continue;
            Scalar f = rows[r][col];
            for (int c = col; c < 3; ++c) rows[r][c] -= f * rows[rank][c];
        }
        pivots[rank] = rows[rank];
        ++rank;
    }

    PencilResult res;
    if (rank >= 3) {
        res.kind = PencilKind::NotAPencil;
        return res;
    }
    if (rank == 1) {
        res.kind = PencilKind::Degenerate;
        return res;
    }
    auto c = detail::cross(pivots[0], pivots[1]);
    ProjPoint center(c[0], c[1], c[2]);
    res.kind = center.is_infinite() ? PencilKind::InfiniteCenter : PencilKind::FiniteCenter;
    res.center = center;
    return res;
}

Matrix3::Matrix3(std::array<Scalar, 9> entries) : a_(std::move(entries)) {
    for (const auto& s : a_) require_same_field(s.field(), a_[0].field());
}

Scalar Matrix3::det() const {
    return at(0, 0) * (at(1, 1) * at(2, 2) - at(1, 2) * at(2, 1)) -
           at(0, 1) * (at(1, 0) * at(2, 2) - at(1, 2) * at(2, 0)) +
           at(0, 2) * (at(1, 0) * at(2, 1) - at(1, 1) * at(2, 0));
}

ProjPoint Matrix3::apply(const ProjPoint& P) const {
    const auto& p = P.coords();
    std::array<Scalar, 3> r = {Scalar(p[0].field()), Scalar(p[0].field()), Scalar(p[0].field())};
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j) r[i] += at(i, j) * p[j];
    return ProjPoint(r[0], r[1], r[2]);
}

namespace {

// Columns scaled so that M * (1,1,1)^T = fourth point; the classical
// four-point normalization.
std::array<Scalar, 9> frame_matrix(const std::array<ProjPoint, 4>& f) {
    const FieldTag tag = f[0].field();
    std::array<std::array<Scalar, 3>, 3> col;
    for (int i = 0; i < 3; ++i) col[i] = f[i].coords();

    // Solve col * lambda = f[3] by Cramer's rule.
    auto det3 = [](const std::array<Scalar, 3>& a, const std::array<Scalar, 3>& b,
                   const std::array<Scalar, 3>& c) {
        return a[0] * (b[1] * c[2] - b[2] * c[1]) - b[0] * (a[1] * c[2] - a[2] * c[1]) +
               c[0] * (a[1] * b[2] - a[2] * b[1]);
    };
    Scalar d = det3(col[0], col[1], col[2]);
    if (d.is_zero()) throw MathError("not in general position");
    const auto& t = f[3].coords();
    std::array<Scalar, 3> lambda = {det3(t, col[1], col[2]) / d,
                                    det3(col[0], t, col[2]) / d,
                                    det3(col[0], col[1], t) / d};
    for (const auto& lv : lambda)
        if (lv.is_zero()) throw MathError("not in general position");

    std::array<Scalar, 9> m = {Scalar(tag), Scalar(tag), Scalar(tag),
                               Scalar(tag), Scalar(tag), Scalar(tag),
                               Scalar(tag), Scalar(tag), Scalar(tag)};
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j) m[3 * i + j] = lambda[j] * col[j][i];
    return m;
}

std::array<Scalar, 9> adjugate(const std::array<Scalar, 9>& m) {
    auto e = [&](int r, int c) { return m[3 * r + c]; };
    std::array<Scalar, 9> r = m;
    r[0] = e(1, 1) * e(2, 2) - e(1, 2) * e(2, 1);
    r[1] = e(0, 2) * e(2, 1) - e(0, 1) * e(2, 2);
    r[2] = e(0, 1) * e(1, 2) - e(0, 2) * e(1, 1);
    r[3] = e(1, 2) * e(2, 0) - e(1, 0) * e(2, 2);
    r[4] = e(0, 0) * e(2, 2) - e(0, 2) * e(2, 0);
    r[5] = e(0, 2) * e(1, 0) - e(0, 0) * e(1, 2);
    r[6] = e(1, 0) * e(2, 1) - e(1, 1) * e(2, 0);
    r[7] = e(0, 1) * e(2, 0) - e(0, 0) * e(2, 1);
    r[8] = e(0, 0) * e(1, 1) - e(0, 1) * e(1, 0);
    return r;
}

} // namespace

Matrix3 fit_projectivity(const std::array<ProjPoint, 4>& src, const std::array<ProjPoint, 4>& dst) {
    for (const auto& p : src) require_same_field(p.field(), src[0].field());
    for (const auto& p : dst) require_same_field(p.field(), src[0].field());
    const FieldTag tag = src[0].field();

    // dst_frame * src_frame^{-1}; the adjugate differs from the inverse by a
    // scalar factor, which is irrelevant projectively.
    std::array<Scalar, 9> ms = frame_matrix(src);
    std::array<Scalar, 9> md = frame_matrix(dst);
    std::array<Scalar, 9> adj = adjugate(ms);

    std::array<Scalar, 9> out = {Scalar(tag), Scalar(tag), Scalar(tag),
                                 Scalar(tag), Scalar(tag), Scalar(tag),
                                 Scalar(tag), Scalar(tag), Scalar(tag)};
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j)
            for (int k = 0; k < 3; ++k) out[3 * i + j] += md[3 * i + k] * adj[3 * k + j];
    return Matrix3(out);
}

} // namespace naxes
