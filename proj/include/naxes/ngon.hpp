#pragma once

#include <vector>

#include "naxes/axis.hpp"
#include "naxes/projective.hpp"

namespace naxes {

enum class ViolationKind {
    TooFewVertices,
    VertexAtInfinity,
    CoincidentVertices,
    VertexOnSide,            // A_i on l_{i-2}, l_i or l_{i+2}
    SidesThroughVertexEqual, // l_{i-1} = l_{i+1}
    AdjacentSidesParallel,   // l_i parallel to l_{i+1}
};

struct Violation {
    ViolationKind kind;
    int i = 0; // 1-based vertex or side index
    int j = 0; // second index where applicable (other vertex, side)

    std::string message() const;
};

class InvalidConfig : public Error {
public:
    InvalidConfig(const Violation& v) : Error(v.message()), v_(v) {}
    const Violation& violation() const { return v_; }

private:
    Violation v_;
};

// Everything derived from a valid configuration. All vectors are indexed
// 0-based internally; the accessors below take the 1-based cyclic indices
// used throughout: l(i) = <A_{i-1}, A_{i+1}>, B(i) = l_i meet l_{i+1},
// C(i) and g(i) the bracket point and axis on l_i, E(i) the second axis
// point from the parallel construction.
struct DerivedData {
    std::vector<ProjLine> l_;
    std::vector<ProjPoint> B_;
    std::vector<ProjPoint> C_;
    std::vector<ProjPoint> E_;
    std::vector<ProjLine> g_;

    int size() const { return static_cast<int>(l_.size()); }
    const ProjLine& l(int i) const { return l_[wrap(i)]; }
    const ProjPoint& B(int i) const { return B_[wrap(i)]; }
    const ProjPoint& C(int i) const { return C_[wrap(i)]; }
    const ProjPoint& E(int i) const { return E_[wrap(i)]; }
    const ProjLine& g(int i) const { return g_[wrap(i)]; }

private:
    int wrap(int i) const {
        int n = size();
        return ((i - 1) % n + n) % n;
    }
};

// A cyclic sequence A_1..A_n (n >= 5) of finite points subject to
//   (i)   A_i not on l_{i-2}, l_i, l_{i+2},
//   (ii)  l_{i-1} != l_{i+1},
//   (iii) l_i not parallel to l_{i+1},
// checked in that order, index-ascending, reporting the first violation.
class NgonConfig {
public:
    static NgonConfig validate(std::vector<ProjPoint> points);

    int size() const { return static_cast<int>(pts_.size()); }
    const FieldTag& field() const { return pts_.front().field(); }

    // 1-based cyclic access.
    const ProjPoint& vertex(int i) const { return pts_[wrap(i)]; }
    const std::vector<ProjPoint>& points() const { return pts_; }

    ProjLine side(int i) const { return join(vertex(i - 1), vertex(i + 1)); }

private:
    explicit NgonConfig(std::vector<ProjPoint> pts) : pts_(std::move(pts)) {}

    int wrap(int i) const {
        int n = size();
        return ((i - 1) % n + n) % n;
    }

    std::vector<ProjPoint> pts_;
};

DerivedData derive(const NgonConfig& cfg);

struct CenterResult {
    PencilResult pencil;
    std::optional<ProjPoint> M;
};

// Pencil classification of the axes with the given 1-based indices
// (at least 2); M is set when they share a point.
CenterResult center(const NgonConfig& cfg, const std::vector<int>& subset);
CenterResult center(const NgonConfig& cfg); // all n axes

// Closed form of the five-axes center in the frame A_1 = (0:0:1),
// A_3 = (0:1:1), A_4 = (1:0:1), with A_2 = (a:b:c) and A_5 = (x:y:z):
// M = (cx : bz : (c-b)x + (a-c)y + (c-a+b)z).
ProjPoint center_formula(const ProjPoint& A2, const ProjPoint& A5);

} // namespace naxes
