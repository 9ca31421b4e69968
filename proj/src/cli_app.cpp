#include "naxes/cli_app.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <cerrno>
#include <cstdlib>
#include <fstream>
#include <future>
#include <optional>
#include <ostream>
#include <sstream>

#include "naxes/config_io.hpp"
#include "naxes/genmove.hpp"
#include "naxes/ngon.hpp"
#include "naxes/svg_render.hpp"
#include "naxes/theorems.hpp"

namespace naxes {
namespace {

using ordered_json = nlohmann::ordered_json;

constexpr std::uint64_t kCheckPrime = 10007;

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw ParseError("cannot read \"" + path + "\"");
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

// Empty path means stdout.
void write_text(const std::string& path, const std::string& text, std::ostream& out) {
    if (path.empty()) {
        out << text;
        return;
    }
    std::ofstream f(path, std::ios::binary);
    if (!f) throw ParseError("cannot write \"" + path + "\"");
    f << text;
}

std::uint64_t seed_from_env() {
    const char* s = std::getenv("NAXES_SEED");
    if (s == nullptr || *s == '\0') return 0;
    errno = 0;
    char* end = nullptr;
    unsigned long long v = std::strtoull(s, &end, 10);
    if (errno != 0 || end == s || *end != '\0')
        throw ParseError("malformed NAXES_SEED \"" + std::string(s) + "\"");
    return v;
}

const char* verdict_word(Verdict v) {
    switch (v) {
        case Verdict::Pass: return "pass";
        case Verdict::Fail: return "fail";
        case Verdict::HypothesisNotSatisfied: return "hypothesis not satisfied";
    }
    return "fail";
}

// One theorem evaluated over one field.
struct Run {
    std::string field;
    std::string verdict;
    int code = 0;                   // 0 pass, 1 fail
    std::optional<std::string> center;
    std::vector<int> witness;
    std::string skipped;            // nonempty: not executed, reason given
    std::vector<std::pair<std::string, std::string>> conditions; // six only
};

std::string yes_no(bool b) { return b ? "yes" : "no"; }

Run run_from_report(const VerifyReport& rep) {
    Run r;
    r.field = rep.field.str();
    r.verdict = verdict_word(rep.verdict);
    r.code = rep.passed() ? 0 : 1;
    if (rep.pencil.is_pencil() && rep.pencil.center) r.center = rep.pencil.center->str();
    r.witness = rep.witness;
    return r;
}

Run run_theorem(const std::string& theorem, const std::vector<ProjPoint>& pts) {
    if (theorem == "degen5") return run_from_report(check_degenerate_five(pts));
    NgonConfig cfg = NgonConfig::validate(pts);
    if (theorem == "five") return run_from_report(check_five_axes(cfg));
    if (theorem == "main") return run_from_report(check_main(cfg));

    // six: report the four faces of the equivalence separately.
    SixEquivalence e = six_equivalence(cfg);
    Run r;
    r.field = cfg.field().str();
    std::string triples;
    for (int i = 0; i < 6; ++i) {
        if (i) triples += ' ';
        triples += yes_no(e.triple_pencil[static_cast<std::size_t>(i)]);
    }
    r.conditions = {
        {"axes pencil", yes_no(e.axes_pencil)},
        {"triple pencils", triples},
        {"diagonals pencil", yes_no(e.diagonals_pencil)},
        {"corners on conic", yes_no(e.corners_on_conic)},
    };
    bool ok = e.all_agree();
    r.verdict = ok ? "pass" : "fail";
    r.code = ok ? 0 : 1;
    if (ok && e.axes_pencil) {
        CenterResult c = center(cfg);
        if (c.M) r.center = c.M->str();
    }
    return r;
}

std::vector<ProjPoint> reduce_points_mod(const std::vector<ProjPoint>& pts, const FieldTag& gf) {
    std::vector<ProjPoint> out;
    out.reserve(pts.size());
    for (const auto& p : pts)
        out.emplace_back(p.x().reduced(gf), p.y().reduced(gf), p.z().reduced(gf));
    return out;
}

struct InputOutcome {
    std::string text;
    ordered_json json;
    int code = 0;
};

void append_run(std::string& text, ordered_json& runs, const Run& r) {
    text += "field: " + r.field + "\n";
    ordered_json jr;
    jr["field"] = r.field;
    if (!r.skipped.empty()) {
        text += "skipped: " + r.skipped + "\n";
        jr["skipped"] = r.skipped;
        runs.push_back(jr);
        return;
    }
    for (const auto& [k, v] : r.conditions) text += k + ": " + v + "\n";
    text += "verdict: " + r.verdict + "\n";
    if (r.center) text += "center: " + *r.center + "\n";
    if (!r.witness.empty()) {
        text += "witness:";
        for (std::size_t k = 0; k < r.witness.size(); ++k)
            text += (k ? ", g_" : " g_") + std::to_string(r.witness[k]);
        text += "\n";
    }
    if (!r.conditions.empty()) {
        ordered_json jc;
        for (const auto& [k, v] : r.conditions) jc[k] = v;
        jr["conditions"] = jc;
    }
    jr["verdict"] = r.verdict;
    if (r.center) jr["center"] = *r.center;
    if (!r.witness.empty()) jr["witness"] = r.witness;
    runs.push_back(jr);
}

InputOutcome evaluate_input(const std::string& path, const std::string& theorem,
                            bool all_fields) {
    InputOutcome res;
    res.text = "input: " + path + "\ntheorem: " + theorem + "\n";
    res.json["input"] = path;
    res.json["theorem"] = theorem;
    ordered_json runs = ordered_json::array();
    try {
        ConfigFile file = parse_config(read_file(path));
        std::vector<ProjPoint> pts = points_of(file);

        Run first = run_theorem(theorem, pts);
        res.code = first.code;
        append_run(res.text, runs, first);

        if (all_fields) {
            if (!file.field.is_rational()) {
                Run skip;
                skip.field = "GF(" + std::to_string(kCheckPrime) + ")";
                skip.skipped = "input is already over a prime field";
                append_run(res.text, runs, skip);
            } else {
                FieldTag gf = FieldTag::prime(kCheckPrime);
                Run second;
                try {
                    second = run_theorem(theorem, reduce_points_mod(pts, gf));
                } catch (const Error& e) {
                    second = Run{};
                    second.field = gf.str();
                    second.skipped = e.what();
                }
                res.code = std::max(res.code, second.code);
                append_run(res.text, runs, second);
            }
            const char* combined = res.code == 0 ? "pass" : "fail";
            res.text += std::string("combined verdict: ") + combined + "\n";
            res.json["runs"] = runs;
            res.json["verdict"] = combined;
            return res;
        }
        res.json["runs"] = runs;
        res.json["verdict"] = first.code == 0 ? first.verdict : "fail";
        return res;
    } catch (const InvalidConfig& e) {
        res.text += std::string("invalid configuration: ") + e.what() + "\n";
        res.json["runs"] = runs;
        res.json["error"] = std::string("invalid configuration: ") + e.what();
        res.code = 2;
        return res;
    } catch (const Error& e) {
        res.text += std::string("error: ") + e.what() + "\n";
        res.json["runs"] = runs;
        res.json["error"] = e.what();
        res.code = 2;
        return res;
    }
}

int do_verify(const std::vector<std::string>& inputs, const std::string& theorem,
              bool all_fields, const std::string& json_path, std::ostream& out) {
    std::vector<InputOutcome> results;
    results.reserve(inputs.size());
    if (inputs.size() == 1) {
        results.push_back(evaluate_input(inputs.front(), theorem, all_fields));
    } else {
        std::vector<std::future<InputOutcome>> jobs;
        jobs.reserve(inputs.size());
        for (const auto& path : inputs)
            jobs.push_back(std::async(std::launch::async, evaluate_input, path, theorem,
                                      all_fields));
        for (auto& j : jobs) results.push_back(j.get());
    }

    int code = 0;
    ordered_json all = ordered_json::array();
    for (std::size_t i = 0; i < results.size(); ++i) {
        if (i) out << "\n";
        out << results[i].text;
        all.push_back(results[i].json);
        code = std::max(code, results[i].code);
    }
    if (!json_path.empty()) {
        std::ofstream f(json_path, std::ios::binary);
        if (!f) throw ParseError("cannot write \"" + json_path + "\"");
        f << all.dump(2) << "\n";
    }
    return code;
}

std::map<std::string, std::string> gen_meta(const char* mode, int n, std::uint64_t seed) {
    return {{"mode", mode}, {"n", std::to_string(n)}, {"seed", std::to_string(seed)}};
}

} // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"exact axis constructions on n-gons"};
    app.require_subcommand(1);

    // gen
    auto* gen = app.add_subcommand("gen", "sample a configuration and print it");
    int gen_n = 5;
    std::uint64_t gen_seed = 0;
    std::uint64_t gen_prime = 0;
    long gen_bound = 10;
    bool gen_pencil = false;
    std::string gen_output;
    gen->add_option("--n", gen_n, "number of vertices")->required();
    auto* gen_seed_opt = gen->add_option("--seed", gen_seed, "generator seed (default: NAXES_SEED or 0)");
    gen->add_flag("--pencil", gen_pencil, "grow a configuration whose axes g_1..g_{n-3} share a pencil");
    gen->add_option("--prime", gen_prime, "work over GF(p) instead of the rationals");
    gen->add_option("--bound", gen_bound, "coordinate bound");
    gen->add_option("--output", gen_output, "write the configuration here instead of stdout");

    // verify
    auto* verify = app.add_subcommand("verify", "check a theorem on stored configurations");
    std::vector<std::string> verify_inputs;
    std::string verify_theorem;
    bool verify_all_fields = false;
    std::string verify_json;
    verify->add_option("--input", verify_inputs, "configuration file (repeat for a batch)")
        ->required();
    verify->add_option("--theorem", verify_theorem, "five, degen5, six or main")
        ->required()
        ->check(CLI::IsMember({"five", "degen5", "six", "main"}));
    verify->add_flag("--all-fields", verify_all_fields,
                     "also check the reduction mod 10007 of a rational input");
    verify->add_option("--json", verify_json, "write a machine-readable report here");

    // render
    auto* render = app.add_subcommand("render", "draw a configuration as SVG");
    std::string render_input, render_output;
    bool render_no_circles = false, render_no_axes = false, render_construction = false;
    render->add_option("--input", render_input, "configuration file")->required();
    render->add_option("--output", render_output, "write the SVG here instead of stdout");
    render->add_flag("--no-circles", render_no_circles, "omit the corner circles");
    render->add_flag("--no-axes", render_no_axes, "omit the axes");
    render->add_flag("--construction", render_construction, "show the parallel construction lines");

    // reduce
    auto* reduce_cmd = app.add_subcommand("reduce", "merge vertices A_at and A_{at+1}");
    std::string reduce_input, reduce_output;
    int reduce_at = 0;
    reduce_cmd->add_option("--input", reduce_input, "configuration file")->required();
    reduce_cmd->add_option("--at", reduce_at, "1-based index of the first merged vertex")->required();
    reduce_cmd->add_option("--output", reduce_output, "write the result here instead of stdout");

    // expand
    auto* expand_cmd = app.add_subcommand("expand", "split vertex A_at in two");
    std::string expand_input, expand_output, expand_t1, expand_t2;
    int expand_at = 0;
    expand_cmd->add_option("--input", expand_input, "configuration file")->required();
    expand_cmd->add_option("--at", expand_at, "1-based index of the split vertex")->required();
    expand_cmd->add_option("--t1", expand_t1, "position of the first new vertex")->required();
    auto* expand_t2_opt = expand_cmd->add_option(
        "--t2", expand_t2, "position of the second new vertex (default: keep the axis pencil)");
    expand_cmd->add_option("--output", expand_output, "write the result here instead of stdout");

    // move
    auto* move_cmd = app.add_subcommand("move", "move A_3 along l_4 inside a 7-point window");
    std::string move_input, move_output, move_t;
    int move_index = 3;
    move_cmd->add_option("--input", move_input, "window file with points A_0..A_6")->required();
    move_cmd->add_option("--t", move_t, "A_3' = A_3 + t (A_5 - A_3)")->required();
    move_cmd->add_option("--index", move_index, "vertex pair to move (only 3 is supported)");
    move_cmd->add_option("--output", move_output, "write the result here instead of stdout");

    std::vector<const char*> argv;
    argv.reserve(args.size() + 1);
    argv.push_back("naxes");
    for (const auto& a : args) argv.push_back(a.c_str());
    try {
        app.parse(static_cast<int>(argv.size()), argv.data());
    } catch (const CLI::ParseError& e) {
        int rc = app.exit(e, out, err);
        return rc == 0 ? 0 : 2;
    }

    try {
        if (gen->parsed()) {
            std::uint64_t seed = gen_seed_opt->count() ? gen_seed : seed_from_env();
            FieldTag field =
                gen_prime != 0 ? FieldTag::prime(gen_prime) : FieldTag::rationals();
            NgonConfig cfg = [&] {
                if (gen_pencil) return sample_pencil_config(gen_n, field, seed, gen_bound);
                SampleParams p;
                p.n = gen_n;
                p.field = field;
                p.seed = seed;
                p.bound = gen_bound;
                return sample_config(p);
            }();
            ConfigFile file = make_config_file(
                cfg.points(), gen_meta(gen_pencil ? "pencil" : "plain", gen_n, seed));
            write_text(gen_output, serialize_config(file), out);
            return 0;
        }
        if (verify->parsed())
            return do_verify(verify_inputs, verify_theorem, verify_all_fields, verify_json, out);
        if (render->parsed()) {
            std::vector<ProjPoint> pts = points_of(parse_config(read_file(render_input)));
            RenderOptions opts;
            opts.show_circles = !render_no_circles;
            opts.show_axes = !render_no_axes;
            opts.show_parallel_construction = render_construction;
            write_text(render_output, render_svg(pts, opts), out);
            return 0;
        }
        if (reduce_cmd->parsed()) {
            NgonConfig cfg = NgonConfig::validate(points_of(parse_config(read_file(reduce_input))));
            NgonConfig merged = reduce(cfg, reduce_at);
            write_text(reduce_output,
                       serialize_config(make_config_file(merged.points(), {{"mode", "reduced"}})),
                       out);
            return 0;
        }
        if (expand_cmd->parsed()) {
            NgonConfig cfg = NgonConfig::validate(points_of(parse_config(read_file(expand_input))));
            Scalar t1 = Scalar::from_string(cfg.field(), expand_t1);
            NgonConfig grown = expand_t2_opt->count()
                                   ? expand(cfg, expand_at, t1,
                                            Scalar::from_string(cfg.field(), expand_t2))
                                   : expand_preserving(cfg, expand_at, t1);
            write_text(expand_output,
                       serialize_config(make_config_file(grown.points(), {{"mode", "expanded"}})),
                       out);
            return 0;
        }
        // move
        ConfigFile file = parse_config(read_file(move_input));
        std::vector<ProjPoint> window = points_of(file);
        MoveChoice choice{move_index, Scalar::from_string(file.field, move_t)};
        std::vector<ProjPoint> moved = move_vertices(window, choice);
        write_text(move_output, serialize_config(make_config_file(moved, {{"mode", "moved"}})),
                   out);
        return 0;
    } catch (const SamplingError& e) {
        err << "error: " << e.what() << "\n";
        return 3;
    } catch (const InvalidConfig& e) {
        err << "invalid configuration: " << e.what() << "\n";
        return 2;
    } catch (const Error& e) {
        err << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::logic_error& e) {
        err << "internal error: " << e.what() << "\n";
        return 2;
    }
}

} // namespace naxes
