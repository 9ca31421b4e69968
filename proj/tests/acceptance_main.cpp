// Acceptance gate: re-checks the headline guarantees end to end and prints
// one pass/fail line per criterion. Exits nonzero if any criterion fails.

#include <sys/wait.h>

#include <array>
#include <chrono>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <functional>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "naxes/circles.hpp"
#include "naxes/config_io.hpp"
#include "test_helpers.hpp"

using namespace naxes;
namespace fs = std::filesystem;

namespace {

void require(bool cond, const std::string& msg) {
    if (!cond) throw std::runtime_error(msg);
}

const FieldTag kFields[2] = {FieldTag::rationals(), FieldTag::prime(10007)};

// 1: sampled pentagons, both fields, all five axes in a pencil.
void criterion1() {
    for (const FieldTag& tag : kFields) {
        for (int i = 0; i < 500; ++i) {
            SampleParams p;
            p.field = tag;
            p.seed = static_cast<std::uint64_t>(1000 + i);
            NgonConfig cfg = sample_config(p);
            VerifyReport rep = check_five_axes(cfg);
            require(rep.passed() && rep.pencil.is_pencil(),
                    "pentagon seed " + std::to_string(p.seed) + " over " + tag.str() +
                        " has no axis pencil");
        }
    }
}

// 2: the quad axis equals the radical axis of the two circles through the
// apex, including the tangent variants with a doubled endpoint.
void criterion2() {
    Rng rng(1002);
    const FieldTag Q = FieldTag::rationals();
    int doubled_pq = 0, doubled_rs = 0, plain = 0;
    while (doubled_pq + doubled_rs + plain < 200) {
        int mode = doubled_pq < 25 ? 1 : (doubled_rs < 25 ? 2 : 0);
        th::QuadPick pick = th::rand_quad(rng, Q, mode);
        const CollinearQuad& q = pick.q;
        AxisResult r = axis_from_outside(q, pick.apex);
        Circle c1 = (q.P() == q.Q()) ? circle_tangent(pick.apex, q.P(), q.l())
                                     : circle_through(pick.apex, q.P(), q.Q());
        Circle c2 = (q.R() == q.S()) ? circle_tangent(pick.apex, q.R(), q.l())
                                     : circle_through(pick.apex, q.R(), q.S());
        require(radical_axis(c1, c2) == r.g, "radical axis differs from the constructed axis");
        ++(mode == 1 ? doubled_pq : mode == 2 ? doubled_rs : plain);
    }
}

// 3: the three defining ratio identities pin the same bracket point, and
// the induced involution obeys its laws.
void criterion3() {
    Rng rng(1003);
    for (const FieldTag& tag : kFields) {
        int done = 0;
        while (done < 250) {
            th::QuadPick pick = th::rand_quad(rng, tag, 0);
            const CollinearQuad& q = pick.q;
            ProjPoint C = bracket_point(q);
            auto holds = [&](const Scalar& k, const ProjPoint& X, const ProjPoint& Y) {
                if (C.is_infinite()) return k.is_one();
                return line_ratio(C, X, C, Y) == k;
            };
            Scalar k1 = line_ratio(q.Q(), q.S(), q.R(), q.P());
            Scalar k2 =
                line_ratio(q.R(), q.Q(), q.R(), q.P()) * line_ratio(q.S(), q.Q(), q.S(), q.P());
            Scalar k3 =
                line_ratio(q.Q(), q.S(), q.Q(), q.R()) * line_ratio(q.P(), q.S(), q.P(), q.R());
            require(holds(k1, q.Q(), q.R()), "first ratio identity fails at the bracket point");
            require(holds(k2, q.Q(), q.P()), "second ratio identity fails at the bracket point");
            require(holds(k3, q.S(), q.R()), "third ratio identity fails at the bracket point");
            ++done;
        }

        int laws = 0;
        while (laws < 250) {
            ProjPoint b0 = th::rand_point(rng, tag, 9);
            ProjPoint b1 = th::rand_point(rng, tag, 9);
            if (b0 == b1) continue;
            ProjLine l = join(b0, b1);
            auto at = [&](long k) { return th::along(b0, b1, th::sc(tag, k)); };
            ProjPoint R = at(rng.int_in(-9, 9));
            ProjPoint S = at(rng.int_in(-9, 9));
            if (R == S) continue;
            ProjPoint C = at(rng.int_in(-9, 9));
            if (C == R || C == S) continue;
            ProjPoint X = at(rng.int_in(-9, 9));
            if (X == C) continue;

            ProjPoint Y = involution_image(X, C, R, S, l);
            require(involution_image(Y, C, R, S, l) == X, "involution is not an involution");
            require(involution_image(R, C, R, S, l) == S, "involution does not swap R and S");
            require(involution_image(direction_of(l), C, R, S, l) == C,
                    "involution does not send the direction to C");
            ++laws;
        }
    }
}

// 4: the pentagon center in the standard frame: closed form, projectivity
// in the free vertex, and the parallel-axes locus.
void criterion4() {
    Rng rng(1004);
    const FieldTag Q = FieldTag::rationals();

    int done = 0;
    while (done < 100) {
        ProjPoint A2 = th::rand_point(rng, Q, 9);
        ProjPoint A5 = th::rand_point(rng, Q, 9);
        try {
            NgonConfig cfg =
                NgonConfig::validate({th::pt(0, 0), A2, th::pt(0, 1), th::pt(1, 0), A5});
            CenterResult res = center(cfg);
            require(res.pencil.is_pencil() && res.M.has_value(),
                    "frame pentagon axes are not in a pencil");
            require(*res.M == center_formula(A2, A5),
                    "closed form disagrees with the constructed center");
            ++done;
        } catch (const InvalidConfig&) {
        }
    }

    // With A_2 fixed the map A_5 -> M is a projectivity: fit it on four
    // pairs and let it predict twenty more.
    ProjPoint A2 = th::pt(2, 3);
    auto M_of = [&](const ProjPoint& A5) -> std::optional<ProjPoint> {
        try {
            NgonConfig cfg =
                NgonConfig::validate({th::pt(0, 0), A2, th::pt(0, 1), th::pt(1, 0), A5});
            CenterResult res = center(cfg);
            if (!res.pencil.is_pencil() || !res.M) return std::nullopt;
            return *res.M;
        } catch (const InvalidConfig&) {
            return std::nullopt;
        }
    };
    std::vector<ProjPoint> fit_src, fit_dst, pred_src, pred_dst;
    while (pred_src.size() < 20) {
        ProjPoint A5 = th::rand_point(rng, Q, 19);
        auto M = M_of(A5);
        if (!M || M->is_infinite()) continue;
        if (fit_src.size() < 4) {
            bool spread = true;
            for (std::size_t i = 0; i < fit_src.size() && spread; ++i)
                for (std::size_t j = i + 1; j < fit_src.size() && spread; ++j)
                    spread = !collinear(fit_src[i], fit_src[j], A5);
            if (!spread) continue;
            fit_src.push_back(A5);
            fit_dst.push_back(*M);
            continue;
        }
        pred_src.push_back(A5);
        pred_dst.push_back(*M);
    }
    Matrix3 T = fit_projectivity({fit_src[0], fit_src[1], fit_src[2], fit_src[3]},
                                 {fit_dst[0], fit_dst[1], fit_dst[2], fit_dst[3]});
    for (std::size_t k = 0; k < pred_src.size(); ++k)
        require(T.apply(pred_src[k]) == pred_dst[k], "fitted projectivity mispredicts the center");

    // On the line y = 2x - 2 the axes turn parallel: the pencil center and
    // the closed form both move to infinity.
    int infinite = 0;
    for (long x = -6; x <= 8; ++x) {
        ProjPoint A5 = th::pt(x, 2 * x - 2);
        try {
            NgonConfig cfg =
                NgonConfig::validate({th::pt(0, 0), A2, th::pt(0, 1), th::pt(1, 0), A5});
            CenterResult res = center(cfg);
            require(res.pencil.kind == PencilKind::InfiniteCenter,
                    "locus pentagon still has a finite center");
            require(center_formula(A2, A5).is_infinite(), "closed form finite on the locus");
            ++infinite;
        } catch (const InvalidConfig&) {
        }
    }
    require(infinite >= 5, "too few valid locus samples");
}

// 5: pentagons with A_5 on <A_1, A_4> pass the degenerate five-axes check.
void criterion5() {
    Rng rng(1005);
    for (const FieldTag& tag : kFields) {
        for (int i = 0; i < 50; ++i) {
            std::vector<ProjPoint> pts = th::rand_degenerate_five(rng, tag, 9);
            VerifyReport rep = check_degenerate_five(pts);
            require(rep.passed(), "degenerate five-axes check failed over " + tag.str());
        }
    }
}

// 6: all four faces of the hexagon equivalence agree, and the diagonal
// identity matches the determinant of the frame diagonals.
void criterion6() {
    Rng rng(1006);
    for (const FieldTag& tag : kFields) {
        for (int i = 0; i < 50; ++i) {
            SampleParams p;
            p.n = 6;
            p.field = tag;
            p.seed = static_cast<std::uint64_t>(6000 + i);
            SixEquivalence e = six_equivalence(sample_config(p));
            require(e.all_agree(), "hexagon faces disagree on a generic sample");
        }
        int made = 0;
        while (made < 50) {
            bool parallel = made % 2 == 1;
            std::vector<ProjPoint> pts = th::rand_true_hexagon(rng, tag, 9, parallel);
            SixEquivalence e = six_equivalence(NgonConfig::validate(pts));
            require(e.axes_pencil && e.all_agree(),
                    "constructed hexagon does not satisfy every face");
            ++made;
        }
    }

    for (const FieldTag& tag : kFields) {
        int checked = 0;
        while (checked < 100) {
            Scalar a = th::rand_scalar(rng, tag, 9), b = th::rand_scalar(rng, tag, 9);
            Scalar c = th::rand_scalar(rng, tag, 9), d = th::rand_scalar(rng, tag, 9);
            Scalar e = th::rand_scalar(rng, tag, 9), f = th::rand_scalar(rng, tag, 9);
            try {
                bool identity = hexagon_diagonal_identity(a, b, c, d, e, f);
                ProjPoint P1 = ProjPoint::affine(a, b);
                ProjPoint P2 = ProjPoint::affine(c, d);
                ProjPoint P3 = ProjPoint::affine(e, f);
                bool det = th::det3(join(P1, th::pt(tag, 1, 0)), join(th::pt(tag, 0, 1), P3),
                                    join(th::pt(tag, 0, 0), P2))
                               .is_zero();
                require(identity == det, "diagonal identity disagrees with the determinant");
                ++checked;
            } catch (const MathError&) {
            }
        }
    }
}

// 7: grown pencil configurations for n = 7..12 keep all axes through one
// common point, re-verified from the first n-3 axes alone.
void criterion7() {
    for (int n = 7; n <= 12; ++n) {
        for (const FieldTag& tag : kFields) {
            for (int i = 0; i < 25; ++i) {
                std::uint64_t seed = static_cast<std::uint64_t>(7000 + 100 * n + i);
                NgonConfig cfg = sample_pencil_config(n, tag, seed);
                VerifyReport rep = check_main(cfg);
                require(rep.passed(), "main check failed at n = " + std::to_string(n) + ", seed " +
                                          std::to_string(seed));
                std::vector<int> hyp;
                for (int k = 1; k <= n - 3; ++k) hyp.push_back(k);
                CenterResult sub = center(cfg, hyp);
                CenterResult full = center(cfg);
                require(sub.pencil.is_pencil() && full.pencil.is_pencil(),
                        "axes lost their pencil at n = " + std::to_string(n));
                require(sub.M.has_value() && full.M.has_value() && *sub.M == *full.M,
                        "hypothesis center differs from the common center");
            }
        }
    }
}

// 8: expand followed by reduce at the same position is the identity, and
// the two-vertex window move fixes the far axis and the center.
void criterion8() {
    Rng rng(1008);
    int round_trips = 0, trials = 0;
    while (round_trips < 50 && trials < 3000) {
        ++trials;
        const FieldTag& tag = kFields[trials % 2];
        SampleParams p;
        p.n = 6 + trials % 3;
        p.field = tag;
        p.seed = static_cast<std::uint64_t>(8000 + trials);
        NgonConfig cfg = sample_config(p);
        int at = 1 + trials % p.n;
        Scalar t1 = tag.is_rational() ? th::rand_fraction(rng, 5) : th::rand_scalar(rng, tag, 9);
        Scalar t2 = tag.is_rational() ? th::rand_fraction(rng, 5) : th::rand_scalar(rng, tag, 9);
        if (t1.is_zero() || t1.is_one() || t2.is_zero() || t2.is_one() || t1 == t2) continue;
        try {
            NgonConfig grown = expand(cfg, at, t1, t2);
            require(reduce(grown, at).points() == cfg.points(),
                    "reduce does not undo expand exactly");
            ++round_trips;
        } catch (const Error&) {
        }
    }
    require(round_trips == 50, "could not collect 50 expand/reduce round trips");

    int moves = 0;
    for (const FieldTag& tag : kFields) {
        int per_field = 0, windows = 0;
        while (per_field < 50 && windows < 200) {
            NgonConfig cfg =
                sample_pencil_config(7, tag, static_cast<std::uint64_t>(8800 + windows++));
            std::vector<ProjPoint> w;
            w.push_back(cfg.vertex(7));
            for (int i = 1; i <= 6; ++i) w.push_back(cfg.vertex(i));

            ProjLine g4 = th::window_axis(w, 4);
            PencilResult pr = pencil_of({th::window_axis(w, 2), th::window_axis(w, 3), g4});
            require(pr.is_pencil() && pr.center.has_value(), "window axes are not in a pencil");

            int tries = 0;
            while (tries < 50) {
                ++tries;
                Scalar t =
                    tag.is_rational() ? th::rand_fraction(rng, 5) : th::rand_scalar(rng, tag, 9);
                if (t.is_zero() || t.is_one()) continue;
                try {
                    std::vector<ProjPoint> m = move_vertices(w, MoveChoice{3, t});
                    require(th::window_axis(m, 4) == g4, "the far axis moved");
                    require(incident(*pr.center, th::window_axis(m, 2)) &&
                                incident(*pr.center, th::window_axis(m, 3)),
                            "the moved axes left the center");
                    ++per_field;
                    ++moves;
                    break;
                } catch (const MathError&) {
                }
            }
        }
        require(per_field == 50, "could not collect 50 window moves over " + tag.str());
    }
    require(moves == 100, "window move count mismatch");
}

int run_cmd(const std::string& cmd) {
    int st = std::system(cmd.c_str());
    if (st == -1) return -1;
    if (WIFEXITED(st)) return WEXITSTATUS(st);
    return -1;
}

std::string slurp(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    require(in.good(), "cannot read " + path);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

// 9: the installed binary generates, verifies and renders deterministically;
// its files are canonical fixed points of parse + serialize.
void criterion9(const std::string& exe) {
    require(!exe.empty(), "missing CLI binary path (pass it as argv[1])");
    std::string tmpl = (fs::temp_directory_path() / "naxes-accept-XXXXXX").string();
    char* made = mkdtemp(tmpl.data());
    require(made != nullptr, "mkdtemp failed");
    fs::path dir = made;

    for (int seed = 1; seed <= 3; ++seed) {
        std::string s = std::to_string(seed);
        std::string cfg = (dir / ("cfg" + s + ".json")).string();
        std::string cfg2 = (dir / ("cfg" + s + "b.json")).string();
        std::string rep = (dir / ("rep" + s + ".json")).string();
        std::string txt = (dir / ("out" + s + ".txt")).string();
        std::string svg = (dir / ("img" + s + ".svg")).string();

        require(run_cmd(exe + " gen --n 5 --seed " + s + " --output " + cfg) == 0, "gen failed");
        require(run_cmd(exe + " gen --n 5 --seed " + s + " --output " + cfg2) == 0, "gen failed");
        require(slurp(cfg) == slurp(cfg2), "gen is not deterministic");

        require(run_cmd(exe + " verify --input " + cfg + " --theorem five --json " + rep + " > " +
                        txt) == 0,
                "verify failed");
        require(slurp(txt).find("verdict: pass") != std::string::npos, "verify did not pass");
        require(slurp(rep).find("\"verdict\": \"pass\"") != std::string::npos,
                "json report did not pass");

        require(run_cmd(exe + " render --input " + cfg + " --output " + svg) == 0, "render failed");
        require(slurp(svg).rfind("<svg", 0) == 0, "render did not produce svg");

        std::string text = slurp(cfg);
        require(serialize_config(parse_config(text)) == text, "config file is not canonical");
    }

    std::error_code ec;
    fs::remove_all(dir, ec);
}

} // namespace

int main(int argc, char** argv) {
    std::string exe = argc > 1 ? argv[1] : "";

    struct Criterion {
        int id;
        const char* label;
        double budget;
        std::function<void()> fn;
    };
    const std::vector<Criterion> criteria = {
        {1, "sampled pentagons have five concurrent axes in both fields", 10.0, criterion1},
        {2, "the quad axis is the radical axis of the apex circle pair", 5.0, criterion2},
        {3, "bracket-point formulas agree and the involution laws hold", 5.0, criterion3},
        {4, "the pentagon center matches its closed form and moves projectively", 5.0, criterion4},
        {5, "doubled-corner pentagons keep their five axes in a pencil", 5.0, criterion5},
        {6, "hexagon faces agree and the diagonal identity tracks the determinant", 10.0,
         criterion6},
        {7, "grown pencil configurations keep a common center up to n = 12", 60.0, criterion7},
        {8, "expand/reduce round-trips and the window move fixes the far axis", 0.0, criterion8},
        {9, "the command-line pipeline is deterministic end to end", 0.0,
         [&exe] { criterion9(exe); }},
    };

    bool all_ok = true;
    for (const Criterion& c : criteria) {
        auto t0 = std::chrono::steady_clock::now();
        bool ok = true;
        std::string why;
        try {
            c.fn();
        } catch (const std::exception& e) {
            ok = false;
            why = e.what();
        }
        double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
        if (ok && c.budget > 0.0 && secs > c.budget) {
            ok = false;
            why = "over the " + std::to_string(static_cast<int>(c.budget)) + "s budget";
        }
        std::printf("[%s] criterion %d: %s (%.2fs)\n", ok ? "PASS" : "FAIL", c.id, c.label, secs);
        if (!ok && !why.empty()) std::printf("       %s\n", why.c_str());
        all_ok = all_ok && ok;
    }
    return all_ok ? 0 : 1;
}
