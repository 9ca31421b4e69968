#pragma once

#include <array>
#include <optional>
#include <string>
#include <vector>

#include "naxes/scalar.hpp"

namespace naxes {

// Points and lines of P^2(k) as canonical homogeneous triples. Over Q the
// representative has coprime integer entries with the first nonzero one
// positive; over F_p the first nonzero entry is 1. With that convention
// projective equality is plain component-wise equality.
namespace detail {
std::array<Scalar, 3> canonicalize_triple(std::array<Scalar, 3> v);
std::array<Scalar, 3> cross(const std::array<Scalar, 3>& a, const std::array<Scalar, 3>& b);
} // namespace detail

class ProjPoint {
public:
    ProjPoint(Scalar x, Scalar y, Scalar z);

    // Affine point (x, y) as (x : y : 1).
    static ProjPoint affine(const Scalar& x, const Scalar& y);

    const Scalar& x() const { return c_[0]; }
    const Scalar& y() const { return c_[1]; }
    const Scalar& z() const { return c_[2]; }
    const std::array<Scalar, 3>& coords() const { return c_; }

    const FieldTag& field() const { return c_[0].field(); }

    bool is_infinite() const { return c_[2].is_zero(); }

    // Dehomogenized coordinates; only for finite points.
    Scalar affine_x() const;
    Scalar affine_y() const;

    friend bool operator==(const ProjPoint& a, const ProjPoint& b) { return a.c_ == b.c_; }
    friend bool operator!=(const ProjPoint& a, const ProjPoint& b) { return !(a == b); }

    std::string str() const;

private:
    std::array<Scalar, 3> c_;
};

class ProjLine {
public:
    // Coefficients (u, v, w) of ux + vy + wz = 0.
    ProjLine(Scalar u, Scalar v, Scalar w);

    static ProjLine infinity_line(const FieldTag& tag);

    const Scalar& u() const { return c_[0]; }
    const Scalar& v() const { return c_[1]; }
    const Scalar& w() const { return c_[2]; }
    const std::array<Scalar, 3>& coeffs() const { return c_; }

    const FieldTag& field() const { return c_[0].field(); }

    bool is_infinity() const { return c_[0].is_zero() && c_[1].is_zero(); }

    friend bool operator==(const ProjLine& a, const ProjLine& b) { return a.c_ == b.c_; }
    friend bool operator!=(const ProjLine& a, const ProjLine& b) { return !(a == b); }

    std::string str() const;

private:
    std::array<Scalar, 3> c_;
};

bool incident(const ProjPoint& P, const ProjLine& l);

ProjLine join(const ProjPoint& P, const ProjPoint& Q);   // error "coincident points"
ProjPoint meet(const ProjLine& l, const ProjLine& m);    // error "coincident lines"

bool collinear(const ProjPoint& P, const ProjPoint& Q, const ProjPoint& R);

// Neither argument may be the line at infinity.
bool is_parallel(const ProjLine& l, const ProjLine& m);

// The point at infinity of l (its direction). l must not be the line at
// infinity.
ProjPoint direction_of(const ProjLine& l);

// The line through X parallel to l. Requires X finite and l affine.
ProjLine parallel_through(const ProjLine& l, const ProjPoint& X);

enum class PencilKind { FiniteCenter, InfiniteCenter, NotAPencil, Degenerate };

struct PencilResult {
    PencilKind kind = PencilKind::NotAPencil;
    std::optional<ProjPoint> center;

    bool is_pencil() const {
        return kind == PencilKind::FiniteCenter || kind == PencilKind::InfiniteCenter;
    }
};

// Classifies a family of >= 2 affine lines by the rank of its coefficient
// matrix: rank 1 = all lines equal (degenerate), rank 2 = pencil with the
// null space as center, rank 3 = no pencil.
PencilResult pencil_of(const std::vector<ProjLine>& lines);

class Matrix3 {
public:
    Matrix3(std::array<Scalar, 9> entries);

    const Scalar& at(int row, int col) const { return a_[3 * row + col]; }

    Scalar det() const;
    ProjPoint apply(const ProjPoint& P) const;

private:
    std::array<Scalar, 9> a_;
};

// The projectivity taking each src point to the corresponding dst point,
// unique up to scale. Both quadruples must be in general position.
Matrix3 fit_projectivity(const std::array<ProjPoint, 4>& src, const std::array<ProjPoint, 4>& dst);

} // namespace naxes
