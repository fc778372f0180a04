#include "bim/cli.hpp"

#include <chrono>
#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>

#include "bim/classify.hpp"
#include "bim/errors.hpp"
#include "bim/linalg.hpp"
#include "bim/module_file.hpp"

namespace bim {

namespace {

struct Common {
    std::string out_path;
    bool quiet = false;
    bool no_timing = false;
};

struct Context {
    std::ostream& out;
    std::ostream& err;
    std::istream& in;
    Common common;
    std::chrono::steady_clock::time_point start = std::chrono::steady_clock::now();
};

Rational parse_rational(const std::string& name, const std::string& text) {
    auto r = Rational::try_parse(text);
    if (!r) throw ParseError("--" + name + ": not a rational: '" + text + "'");
    return *r;
}

BIModule fixture(const std::string& name) {
    if (name == "exampleE") return example_E();
    if (name == "exampleO") return example_O();
    throw ParseError("unknown fixture '" + name + "' (expected exampleE or exampleO)");
}

BIModule load(Context& ctx, const std::string& path, const std::string& fixture_name) {
    if (!fixture_name.empty()) return fixture(fixture_name);
    if (path.empty() || path == "-") {
        std::ostringstream ss;
        ss << ctx.in.rdbuf();
        return parse_module(ss.str());
    }
    return read_module(path);
}

void emit_text(Context& ctx, const std::string& text) {
    if (ctx.common.out_path.empty()) {
        ctx.out << text;
        return;
    }
    std::ofstream f(ctx.common.out_path);
    if (!f) throw std::runtime_error("cannot write " + ctx.common.out_path);
    f << text;
}

int report(Context& ctx, Json j, int code) {
    j["exit"] = code;
    if (!ctx.common.no_timing) {
        auto us = std::chrono::duration_cast<std::chrono::microseconds>(std::chrono::steady_clock::now() - ctx.start);
        j["timing_us"] = us.count();
    }
    if (!ctx.common.quiet) emit_text(ctx, pretty(j));
    return code;
}

Json vectors_json(const std::vector<VectorQ>& vs) {
    Json a = Json::array();
    for (const auto& v : vs) a.push_back(to_json(v));
    return a;
}

Json coords_json(const ClassCoordinates& c) {
    Json j;
    j["family"] = c.family == Family::Even ? "even" : "odd";
    j["d"] = c.d;
    if (c.twist) j["twist"] = c.twist->to_string();
    j[c.family == Family::Even ? "orbit_rep" : "params"] = Json::array({to_json(c.a), to_json(c.b), to_json(c.c)});
    return j;
}

Json verdict_json(const IrrVerdict& v) {
    Json j;
    j["status"] = to_string(v.status);
    j["method"] = to_string(v.method);
    if (!v.note.empty()) j["note"] = v.note;
    if (v.status == IrrStatus::Reducible) j["witness"] = vectors_json(v.witness);
    return j;
}

Json relations_json(const RelationReport& r) {
    Json checks = Json::array();
    for (const auto& c : r.checks) {
        Json cj;
        cj["name"] = c.name;
        cj["passed"] = c.passed;
        if (!c.detail.empty()) cj["detail"] = c.detail;
        checks.push_back(cj);
    }
    Json j;
    j["passed"] = r.passed();
    j["checks"] = checks;
    j["kappa"] = to_json(r.kappa);
    j["lambda"] = r.lambda ? to_json(*r.lambda) : Json(nullptr);
    j["mu"] = r.mu ? to_json(*r.mu) : Json(nullptr);
    return j;
}

// Criterion verdict from build metadata, when the module records its parameters.
std::optional<bool> criterion_from_meta(const BIModule& v) {
    auto get = [&](const char* k) -> std::optional<std::string> {
        auto it = v.meta.find(k);
        if (it == v.meta.end()) return std::nullopt;
        return it->second;
    };
    auto fam = get("family"), d = get("d"), a = get("a"), b = get("b"), c = get("c");
    if (!fam || !d || !a || !b || !c) return std::nullopt;
    auto ra = Rational::try_parse(*a), rb = Rational::try_parse(*b), rc = Rational::try_parse(*c);
    if (!ra || !rb || !rc) return std::nullopt;
    long dd = 0;
    try {
        dd = std::stol(*d);
    } catch (const std::exception&) {
        return std::nullopt;
    }
    if (static_cast<std::size_t>(dd) + 1 != v.dim) return std::nullopt;
    if (*fam == "even" && dd % 2 == 1) return criterion_even(dd, *ra, *rb, *rc);
    if (*fam == "odd" && dd % 2 == 0) return criterion_odd(dd, *ra, *rb, *rc);
    return std::nullopt;
}

// ---------------------------------------------------------------------------

struct BuildArgs {
    std::string family, a, b, c, twist;
    long d = -1;
};

int cmd_build(Context& ctx, const BuildArgs& args) {
    Rational a = parse_rational("a", args.a), b = parse_rational("b", args.b), c = parse_rational("c", args.c);
    BIModule m;
    try {
        if (args.family == "even")
            m = build_E(EvenParams(args.d, a, b, c));
        else if (args.family == "odd")
            m = build_O(OddParams(args.d, a, b, c));
        else
            throw ParseError("--family must be 'even' or 'odd'");
    } catch (const std::invalid_argument& e) {
        throw ParseError(e.what());
    }
    if (!args.twist.empty()) {
        TwistSign s;
        try {
            s = TwistSign::parse(args.twist);
        } catch (const std::invalid_argument& e) {
            throw ParseError(e.what());
        }
        m = twist(m, s);
    }
    if (ctx.common.out_path.empty()) {
        ctx.out << serialize_module(m);
        return kPass;
    }
    write_module(ctx.common.out_path, m);
    Json j;
    j["command"] = "build";
    j["path"] = ctx.common.out_path;
    j["kappa"] = to_json(m.kappa);
    j["lambda"] = to_json(*m.lambda);
    j["mu"] = to_json(*m.mu);
    Common echo = ctx.common;
    ctx.common.out_path.clear();  // the echo goes to stdout
    int code = report(ctx, j, kPass);
    ctx.common = echo;
    return code;
}

int cmd_fixture(Context& ctx, const std::string& name) {
    emit_text(ctx, serialize_module(fixture(name)));
    return kPass;
}

int cmd_check(Context& ctx, const BIModule& v) {
    RelationReport r = check_relations(v);
    Json j;
    j["command"] = "check";
    j["dim"] = v.dim;
    j["relations"] = relations_json(r);
    if (!r.passed()) j["first_failure"] = r.first_failure();
    return report(ctx, j, r.passed() ? kPass : kPropertyFailed);
}

int cmd_classify(Context& ctx, const BIModule& v) {
    Json j;
    j["command"] = "classify";
    j["dim"] = v.dim;
    RelationReport r = check_relations(v);
    if (!r.passed()) {
        j["relations"] = relations_json(r);
        j["error"] = "relation '" + r.first_failure() + "' fails";
        return report(ctx, j, kPropertyFailed);
    }
    IrrVerdict verdict;
    try {
        verdict = oracle_irreducible(v);
    } catch (const NonSplitSpectrum& e) {
        j["error"] = e.what();
        return report(ctx, j, kIndeterminate);
    }
    j["oracle"] = verdict_json(verdict);
    int code = kPass;
    if (auto crit = criterion_from_meta(v)) {
        j["criterion"] = *crit ? "irreducible" : "reducible";
        bool agree = verdict.status == IrrStatus::Indeterminate ||
                     (*crit == (verdict.status == IrrStatus::Irreducible));
        j["agree"] = agree;
        if (!agree) code = kPropertyFailed;
    }
    if (verdict.status == IrrStatus::Indeterminate) return report(ctx, j, kIndeterminate);
    if (verdict.status == IrrStatus::Irreducible) {
        try {
            Identification id = identify(v);
            j["class"] = coords_json(id.coords);
            j["identify_method"] = id.method;
            j["intertwiner"] = to_json(id.witness);
        } catch (const std::runtime_error& e) {
            j["identify_error"] = e.what();
            code = kPropertyFailed;
        }
    }
    return report(ctx, j, code);
}

int cmd_identify(Context& ctx, const BIModule& v) {
    Json j;
    j["command"] = "identify";
    try {
        Identification id = identify(v);
        j["class"] = coords_json(id.coords);
        j["method"] = id.method;
        j["intertwiner"] = to_json(id.witness);
        return report(ctx, j, kPass);
    } catch (const NonSplitSpectrum& e) {
        j["error"] = e.what();
        return report(ctx, j, kIndeterminate);
    } catch (const std::runtime_error& e) {
        j["error"] = e.what();
        return report(ctx, j, kPropertyFailed);
    }
}

int cmd_iso(Context& ctx, const BIModule& v, const BIModule& w) {
    IsoResult r = are_isomorphic(v, w);
    Json j;
    j["command"] = "iso";
    j["status"] = to_string(r.status);
    j["reason"] = r.reason;
    if (r.witness) j["intertwiner"] = to_json(*r.witness);
    int code = r.status == IsoStatus::Isomorphic ? kPass
               : r.status == IsoStatus::NotIsomorphic ? kPropertyFailed
                                                      : kIndeterminate;
    return report(ctx, j, code);
}

int cmd_minpoly(Context& ctx, const BIModule& v, const std::string& gen) {
    MatrixQ m;
    if (gen == "X")
        m = v.X;
    else if (gen == "Y")
        m = v.Y;
    else if (gen == "Z")
        m = derive_Z(v);
    else
        throw ParseError("--gen must be X, Y or Z");
    PolynomialQ p = min_poly(m);
    Json j;
    j["command"] = "minpoly";
    j["generator"] = gen;
    j["minimal_polynomial"] = factored_string(p);
    j["expanded"] = p.to_string();
    j["degree"] = p.degree();
    j["split"] = rational_roots(p).split;
    j["squarefree"] = is_squarefree(p);
    return report(ctx, j, kPass);
}

struct ScanArgs {
    std::string family, grid = "-1,0,1";
    long d = -1;
};

int cmd_scan(Context& ctx, const ScanArgs& args) {
    std::vector<Rational> grid;
    std::stringstream ss(args.grid);
    for (std::string item; std::getline(ss, item, ',');) grid.push_back(parse_rational("grid", item));
    if (grid.empty()) throw ParseError("--grid is empty");
    if (args.family != "even" && args.family != "odd") throw ParseError("--family must be 'even' or 'odd'");
    const bool even = args.family == "even";
    if (args.d < 0 || (even ? args.d % 2 == 0 : args.d % 2 == 1))
        throw ParseError("--d has the wrong parity for family " + args.family);

    std::size_t points = 0, irreducible = 0, reducible = 0, indeterminate = 0;
    Json disagreements = Json::array();
    for (const auto& a : grid)
        for (const auto& b : grid)
            for (const auto& c : grid) {
                ++points;
                BIModule m = even ? build_E(EvenParams(args.d, a, b, c)) : build_O(OddParams(args.d, a, b, c));
                bool crit = even ? criterion_even(args.d, a, b, c) : criterion_odd(args.d, a, b, c);
                IrrVerdict v = oracle_irreducible(m);
                if (v.status == IrrStatus::Indeterminate) {
                    ++indeterminate;
                    continue;
                }
                bool irr = v.status == IrrStatus::Irreducible;
                (irr ? irreducible : reducible)++;
                if (irr != crit)
                    disagreements.push_back(Json::array({to_json(a), to_json(b), to_json(c)}));
            }
    Json j;
    j["command"] = "scan";
    j["family"] = args.family;
    j["d"] = args.d;
    j["grid"] = to_json(grid);
    j["points"] = points;
    j["irreducible"] = irreducible;
    j["reducible"] = reducible;
    j["indeterminate"] = indeterminate;
    j["disagreements"] = disagreements;
    int code = !disagreements.empty() ? kPropertyFailed : indeterminate > 0 ? kIndeterminate : kPass;
    return report(ctx, j, code);
}

}  // namespace

int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err, std::istream& in) {
    Context ctx{out, err, in, {}};
    CLI::App app{"Modules of the universal Bannai-Ito algebra over Q", "bimod"};
    app.require_subcommand(1);
    auto common = [&](CLI::App* sub) {
        sub->add_option("--out", ctx.common.out_path, "Write output to this file");
        sub->add_flag("--quiet", ctx.common.quiet, "Suppress the report");
        sub->add_flag("--no-timing", ctx.common.no_timing, "Omit the timing field");
    };

    BuildArgs build;
    auto* c_build = app.add_subcommand("build", "Construct E_d(a,b,c) or O_d(a,b,c)");
    c_build->add_option("--family", build.family, "even | odd")->required();
    c_build->add_option("--d", build.d, "Diameter d")->required();
    c_build->add_option("--a", build.a)->required();
    c_build->add_option("--b", build.b)->required();
    c_build->add_option("--c", build.c)->required();
    c_build->add_option("--twist", build.twist, "Twist signs 'e,e''");
    common(c_build);

    std::string path, path2, fixture_name, gen = "Z";
    auto with_input = [&](CLI::App* sub) {
        sub->add_option("path", path, "Module file ('-' or omitted: stdin)");
        sub->add_option("--fixture", fixture_name, "exampleE | exampleO instead of a file");
        common(sub);
    };
    auto* c_check = app.add_subcommand("check", "Verify the defining relations");
    with_input(c_check);
    auto* c_classify = app.add_subcommand("classify", "Decide irreducibility and identify the class");
    with_input(c_classify);
    auto* c_identify = app.add_subcommand("identify", "Locate an irreducible module in the classification");
    with_input(c_identify);
    auto* c_minpoly = app.add_subcommand("minpoly", "Minimal polynomial of X, Y or Z");
    with_input(c_minpoly);
    c_minpoly->add_option("--gen", gen, "X | Y | Z");

    auto* c_iso = app.add_subcommand("iso", "Test two modules for isomorphism");
    c_iso->add_option("path1", path, "First module file")->required();
    c_iso->add_option("path2", path2, "Second module file")->required();
    common(c_iso);

    ScanArgs scan;
    auto* c_scan = app.add_subcommand("scan", "Compare criterion and oracle over a parameter grid");
    c_scan->add_option("--family", scan.family, "even | odd")->required();
    c_scan->add_option("--d", scan.d)->required();
    c_scan->add_option("--grid", scan.grid, "Comma-separated rationals");
    common(c_scan);

    auto* c_fixture = app.add_subcommand("fixture", "Print a worked example module");
    c_fixture->add_option("name", fixture_name, "exampleE | exampleO")->required();
    common(c_fixture);

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        out << app.help();
        return kPass;
    } catch (const CLI::ParseError& e) {
        err << "error: " << e.what() << "\n";
        return kBadInput;
    }

    try {
        if (*c_build) return cmd_build(ctx, build);
        if (*c_fixture) return cmd_fixture(ctx, fixture_name);
        if (*c_scan) return cmd_scan(ctx, scan);
        if (*c_iso) return cmd_iso(ctx, load(ctx, path, ""), load(ctx, path2, ""));
        BIModule v = load(ctx, path, fixture_name);
        if (*c_check) return cmd_check(ctx, v);
        if (*c_classify) return cmd_classify(ctx, v);
        if (*c_identify) return cmd_identify(ctx, v);
        if (*c_minpoly) return cmd_minpoly(ctx, v, gen);
    } catch (const ParseError& e) {
        err << "error: " << e.what() << "\n";
        return kBadInput;
    } catch (const DimensionMismatch& e) {
        err << "error: " << e.what() << "\n";
        return kBadInput;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << "\n";
        return kPropertyFailed;
    }
    return kBadInput;
}

}  // namespace bim
