#pragma once

#include <cstdint>
#include <random>

#include "naxes/ngon.hpp"

namespace naxes {

// Deterministic generator (mt19937_64 is fully specified by the standard,
// so seeds reproduce across platforms) with unbiased bounded draws and
// decorrelated substreams for parallel batches.
class Rng {
public:
    explicit Rng(std::uint64_t seed) : eng_(seed) {}

    static Rng substream(std::uint64_t seed, std::uint64_t index);

    std::uint64_t below(std::uint64_t k); // uniform in [0, k), rejection sampled
    long int_in(long lo, long hi);        // uniform in [lo, hi]

private:
    std::mt19937_64 eng_;
};

struct SampleParams {
    int n = 5;
    FieldTag field = FieldTag::rationals();
    std::uint64_t seed = 0;
    long bound = 10; // rational coordinates land in [-bound, bound]
    int max_retries = 10000;
};

// Rejection-samples integer-coordinate vertices until they validate.
NgonConfig sample_config(const SampleParams& p);

// A valid n-gon (n >= 6) whose axes g_1..g_{n-3} lie in a pencil: starts
// from a random pentagon (all five axes concurrent or parallel) and grows
// it one vertex at a time with expand_preserving, re-verifying the full
// pencil and its center after every step.
NgonConfig sample_pencil_config(int n, const FieldTag& field, std::uint64_t seed,
                                long bound = 10, int max_retries = 10000);

// Merges A_at and A_{at+1} into the (necessarily unique) point that keeps
// the two outer sides: with the pair rotated into positions 3 and 4, the
// replacement is l_2 meet l_5. The result is revalidated.
NgonConfig reduce(const NgonConfig& cfg, int at);

// Splits A_at into two vertices P, Q with P = A_at + t1 (A_prev - A_at) on
// one old side and Q = A_at + t2 (A_next2 - A_at) on the other, so that
// reduce(result, at) restores cfg exactly. In rotated labels: P on
// <I_1, I_3>, Q on <I_3, I_5>.
NgonConfig expand(const NgonConfig& cfg, int at, const Scalar& t1, const Scalar& t2);

// expand with the second parameter eliminated: Q is chosen so the axis of
// the side carrying P keeps its bracket point, which transports a full
// pencil of axes onto the grown configuration. Only t1 (the position of P)
// remains free.
NgonConfig expand_preserving(const NgonConfig& cfg, int at, const Scalar& t1);

struct MoveChoice {
    int index; // which vertex pair moves; only 3 (the pair A_2, A_3) is supported
    Scalar t;  // A_3' = A_3 + t (A_5 - A_3) on l_4; t = 0 keeps the window
};

// The two-vertex move on a 7-point window A_0..A_6 (indices are list
// positions, not cyclic): requires the window assumptions and a pencil
// through g_2, g_3, g_4, replaces A_3 by A_3' on l_4 and A_2 by
// A_2' = l_1 meet <P, A_3> with P = <A_1,A_4> meet <A_2,A_3'>. The moved
// window has g_4' = g_4 and keeps g_2', g_3' in the original pencil.
std::vector<ProjPoint> move_vertices(const std::vector<ProjPoint>& window,
                                     const MoveChoice& choice);

} // namespace naxes
