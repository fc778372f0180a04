// Acceptance criteria 1-11. Prints one [PASS]/[FAIL] line per criterion and
// exits nonzero if any criterion fails. Every comparison is exact.

#include <chrono>
#include <fstream>
#include <functional>
#include <iostream>
#include <random>
#include <sstream>

#include "bim/classify.hpp"
#include "bim/cli.hpp"
#include "bim/errors.hpp"
#include "bim/linalg.hpp"
#include "bim/module_file.hpp"
#include "bim/universal.hpp"
#include "worked_examples.hpp"

using namespace bim;

namespace {

const Rational h(1, 2);

std::vector<Rational> grid() { return {0, h, -h, 1, -1, Rational(3, 2), Rational(-3, 2), 2}; }

struct Outcome {
    bool ok = true;
    std::string detail;

    void fail(const std::string& why) {
        if (ok) detail = why;
        ok = false;
    }
};

template <class F>
void for_grid(F&& f) {
    for (const auto& a : grid())
        for (const auto& b : grid())
            for (const auto& c : grid()) f(a, b, c);
}

std::string params(long d, const Rational& a, const Rational& b, const Rational& c) {
    return "(" + std::to_string(d) + "," + a.to_string() + "," + b.to_string() + "," + c.to_string() + ")";
}

bool intertwines(const MatrixQ& t, const BIModule& v, const BIModule& w) {
    return t * v.X == w.X * t && t * v.Y == w.Y * t;
}

Rational draw(std::mt19937& rng) {
    std::uniform_int_distribution<long> num(-9, 9), den(1, 4);
    return Rational(num(rng), den(rng));
}

// ---------------------------------------------------------------------------

Outcome fixture_identity() {
    Outcome o;
    BIModule e = example_E(), be = build_E(EvenParams(3, 1, 0, 1));
    BIModule x = example_O(), bx = build_O(OddParams(4, Rational(3, 2), h, -h));
    if (e.X != be.X || e.Y != be.Y || e.kappa != be.kappa) o.fail("example_E != build_E(3,1,0,1)");
    if (x.X != bx.X || x.Y != bx.Y || x.kappa != bx.kappa) o.fail("example_O != build_O(4,3/2,1/2,-1/2)");
    if (derive_Z(e) != worked::Z_of_E() || derive_Z(be) != worked::Z_of_E()) o.fail("Z of E differs from display");
    if (derive_Z(x) != worked::Z_of_O() || derive_Z(bx) != worked::Z_of_O()) o.fail("Z of O differs from display");
    if (o.ok) o.detail = "E and O match entrywise, Z as displayed";
    return o;
}

Outcome minimal_polynomials_match() {
    Outcome o;
    auto check = [&](const char* name, const BIModule& v, const worked::MinPolys& want) {
        GeneratorTriple mp = minimal_polynomials(v);
        if (mp.X != want.X || mp.Y != want.Y || mp.Z != want.Z) o.fail(std::string(name) + ": minimal polynomial differs");
        for (const auto* p : {&mp.X, &mp.Y, &mp.Z})
            if (is_squarefree(*p)) o.fail(std::string(name) + ": unexpected squarefree minimal polynomial");
        FlagTriple f = diagonalizability(v);
        if (f.X || f.Y || f.Z) o.fail(std::string(name) + ": a generator reported diagonalizable");
    };
    check("E", example_E(), worked::min_polys_of_E());
    check("O", example_O(), worked::min_polys_of_O());
    if (o.ok) o.detail = "6/6 factorizations equal, none squarefree";
    return o;
}

Outcome relations_on_grid() {
    Outcome o;
    std::size_t n = 0;
    for (long d : {1, 3, 5})
        for_grid([&](const Rational& a, const Rational& b, const Rational& c) {
            ++n;
            if (!check_relations(build_E(EvenParams(d, a, b, c))).passed()) o.fail("E" + params(d, a, b, c));
        });
    for (long d : {0, 2, 4})
        for_grid([&](const Rational& a, const Rational& b, const Rational& c) {
            ++n;
            if (!check_relations(build_O(OddParams(d, a, b, c))).passed()) o.fail("O" + params(d, a, b, c));
        });
    std::mt19937 rng(20240611);
    for (int t = 0; t < 10; ++t) {
        long d = 1 + 2 * (t % 4);
        VermaParams p{draw(rng), draw(rng), draw(rng), draw(rng)};
        if (!relations_hold_on_interior(build_verma(p, default_truncation(d)))) o.fail("Verma interior, set " + std::to_string(t));
    }
    if (o.ok) o.detail = std::to_string(n) + " grid modules + 10 truncated Verma modules";
    return o;
}

Outcome criterion_vs_oracle() {
    Outcome o;
    std::size_t n = 0, reducible = 0;
    auto judge = [&](const BIModule& m, bool crit, const std::string& label) {
        ++n;
        IrrVerdict v = oracle_irreducible(m);
        if (v.status == IrrStatus::Indeterminate) {
            o.fail("indeterminate at " + label);
            return;
        }
        if (crit != (v.status == IrrStatus::Irreducible)) o.fail("disagreement at " + label);
        if (v.status == IrrStatus::Reducible) {
            ++reducible;
            if (v.witness.empty() || v.witness.size() >= m.dim || rank(MatrixQ::from_rows(m.dim, v.witness)) != v.witness.size() ||
                !is_invariant(v.witness, {m.X, m.Y}))
                o.fail("bad witness at " + label);
        }
    };
    for (long d : {1, 3, 5})
        for_grid([&](const Rational& a, const Rational& b, const Rational& c) {
            judge(build_E(EvenParams(d, a, b, c)), criterion_even(d, a, b, c), "E" + params(d, a, b, c));
        });
    for (long d : {0, 2, 4})
        for_grid([&](const Rational& a, const Rational& b, const Rational& c) {
            judge(build_O(OddParams(d, a, b, c)), criterion_odd(d, a, b, c), "O" + params(d, a, b, c));
        });
    if (o.ok)
        o.detail = std::to_string(n) + " points agree, 0 indeterminate, " + std::to_string(reducible) + " witnesses verified";
    return o;
}

Outcome even_invariants() {
    Outcome o;
    std::size_t n = 0;
    for (long d : {1, 3, 5})
        for_grid([&](const Rational& a, const Rational& b, const Rational& c) {
            BIModule e = build_E(EvenParams(d, a, b, c));
            const Rational q((d + 1) * (d + 1), 4);
            for (const auto& s : all_twists()) {
                ++n;
                BIModule v = twist(e, s);
                Invariants inv = invariants(v);
                if (inv.trace_X != Rational(-s.eps * (d + 1), 2) || inv.trace_Y != Rational(-s.eps_prime * (d + 1), 2))
                    o.fail("trace at " + params(d, a, b, c) + " twist " + s.to_string());
                // Undo the twist (an involution) and read the central sums.
                Invariants base = invariants(twist(v, s));
                if (base.kappa_plus_mu != Rational(-2) * (a * a - q) ||
                    base.lambda_plus_kappa != Rational(-2) * (b * b - q) ||
                    base.mu_plus_lambda != Rational(-2) * (c * c - q))
                    o.fail("central sums at " + params(d, a, b, c) + " twist " + s.to_string());
                // Twisted scalars are the sign images of the untwisted ones.
                if (inv.kappa != Rational(s.eps * s.eps_prime) * base.kappa || inv.lambda != Rational(s.eps) * base.lambda ||
                    inv.mu != Rational(s.eps_prime) * base.mu)
                    o.fail("twisted scalars at " + params(d, a, b, c) + " twist " + s.to_string());
            }
        });
    if (o.ok) o.detail = std::to_string(n) + " twisted grid modules";
    return o;
}

Outcome sign_flips_isomorphic() {
    Outcome o;
    std::mt19937 rng(5400);
    int found = 0;
    while (found < 25) {
        long d = 1 + 2 * static_cast<long>(rng() % 4);
        EvenParams p(d, draw(rng), draw(rng), draw(rng));
        if (!criterion_even(d, p.a, p.b, p.c)) continue;
        ++found;
        BIModule v = build_E(p);
        for (const auto& f : {EvenParams(d, -p.a, p.b, p.c), EvenParams(d, p.a, -p.b, p.c), EvenParams(d, p.a, p.b, -p.c)}) {
            BIModule w = build_E(f);
            IsoResult r = are_isomorphic(v, w);
            if (!r.isomorphic() || !r.witness) {
                o.fail("not isomorphic: " + params(d, p.a, p.b, p.c) + " vs " + params(d, f.a, f.b, f.c));
                continue;
            }
            if (determinant(*r.witness).is_zero() || !intertwines(*r.witness, v, w))
                o.fail("bad witness: " + params(d, p.a, p.b, p.c));
        }
    }
    if (o.ok) o.detail = "25 parameter sets x 3 flips, invertible intertwiners verified";
    return o;
}

Outcome injectivity() {
    Outcome o;
    const long d = 3;
    std::vector<Rational> nonneg{0, h, 1, Rational(3, 2), 2, Rational(5, 2)};
    std::vector<std::tuple<Rational, Rational, Rational>> reps;
    for (const auto& a : nonneg)
        for (const auto& b : nonneg)
            for (const auto& c : nonneg)
                if (reps.size() < 10 && criterion_even(d, a, b, c)) reps.emplace_back(a, b, c);
    struct Class {
        TwistSign s;
        std::tuple<Rational, Rational, Rational> rep;
        BIModule m;
    };
    std::vector<Class> classes;
    for (const auto& r : reps)
        for (const auto& s : all_twists()) {
            auto [a, b, c] = r;
            classes.push_back({s, r, twist(build_E(EvenParams(d, a, b, c)), s)});
        }
    std::size_t pairs = 0, same_kappa = 0;
    for (std::size_t i = 0; i < classes.size(); ++i)
        for (std::size_t j = i + 1; j < classes.size(); ++j) {
            ++pairs;
            const BIModule &v = classes[i].m, &w = classes[j].m;
            if (are_isomorphic(v, w).status != IsoStatus::NotIsomorphic)
                o.fail("classes " + std::to_string(i) + " and " + std::to_string(j));
            // Schur: distinct irreducibles admit no nonzero intertwiner.
            if (v.kappa == w.kappa) ++same_kappa;
            if (!intertwiner_space(v, w).empty())
                o.fail("nonzero intertwiner between " + std::to_string(i) + " and " + std::to_string(j));
        }
    if (classes.size() != 40) o.fail("sample has " + std::to_string(classes.size()) + " classes");
    if (o.ok)
        o.detail = std::to_string(pairs) + " pairs non-isomorphic, intertwiner space zero (" +
                   std::to_string(same_kappa) + " pairs share kappa)";
    return o;
}

Outcome identification_round_trip() {
    Outcome o;
    std::size_t n = 0;
    for (long d : {1, 3, 5})
        for_grid([&](const Rational& a, const Rational& b, const Rational& c) {
            if (!criterion_even(d, a, b, c)) return;
            BIModule e = build_E(EvenParams(d, a, b, c));
            for (const auto& s : all_twists()) {
                ++n;
                try {
                    Identification id = identify(twist(e, s));
                    ClassCoordinates want{Family::Even, d, s, abs(a), abs(b), abs(c)};
                    if (!(id.coords == want)) o.fail("wrong class for E" + params(d, a, b, c) + " twist " + s.to_string());
                } catch (const std::exception& ex) {
                    o.fail("E" + params(d, a, b, c) + ": " + ex.what());
                }
            }
        });
    for (long d : {0, 2, 4})
        for_grid([&](const Rational& a, const Rational& b, const Rational& c) {
            if (!criterion_odd(d, a, b, c)) return;
            ++n;
            try {
                Identification id = identify(build_O(OddParams(d, a, b, c)));
                ClassCoordinates want{Family::Odd, d, std::nullopt, a, b, c};
                if (!(id.coords == want)) o.fail("wrong class for O" + params(d, a, b, c));
            } catch (const std::exception& ex) {
                o.fail("O" + params(d, a, b, c) + ": " + ex.what());
            }
        });
    Identification e = identify(example_E());
    if (!(e.coords == ClassCoordinates{Family::Even, 3, TwistSign(1, 1), 1, 0, 1})) o.fail("example_E");
    Identification x = identify(example_O());
    if (!(x.coords == ClassCoordinates{Family::Odd, 4, std::nullopt, Rational(3, 2), h, -h})) o.fail("example_O");
    if (o.ok) o.detail = std::to_string(n) + " irreducible grid modules + both examples";
    return o;
}

Outcome l_matrix() {
    Outcome o;
    std::size_t n = 0;
    for (long d : {1, 3, 5})
        for_grid([&](const Rational& a, const Rational& b, const Rational& c) {
            ++n;
            EvenParams p(d, a, b, c);
            MatrixQ op = L_matrix(p, LMethod::Operator);
            if (op != L_matrix(p, LMethod::Recurrence) || op != L_matrix(p, LMethod::Closed))
                o.fail("methods disagree at " + params(d, a, b, c));
            for (long i = 0; i <= d; ++i)
                for (long j = i + 1; j <= d; ++j)
                    if (!op(static_cast<std::size_t>(i), static_cast<std::size_t>(j)).is_zero())
                        o.fail("not lower triangular at " + params(d, a, b, c));
            if (determinant(op).is_zero() == criterion_even(d, a, b, c))
                o.fail("det L vs criterion at " + params(d, a, b, c));
        });
    if (o.ok) o.detail = std::to_string(n) + " parameter points, 3 methods each";
    return o;
}

Outcome verma_structure() {
    Outcome o;
    std::mt19937 rng(1010);
    for (int t = 0; t < 10; ++t) {
        long d = 1 + 2 * (t % 4);
        EvenParams p(d, draw(rng), draw(rng), draw(rng));
        const std::size_t N = default_truncation(d);
        if (!verma_quotient_check(p, N).passed()) o.fail("quotient check, set " + std::to_string(t));
        TruncatedVerma m = build_verma({Rational(d), p.a, p.b, p.c}, N);
        for (std::size_t i = 0; i + 2 <= N; ++i)
            for (std::size_t j = i; j + 2 <= N; ++j) {
                try {
                    verma_vector_ladder(m, i, j);
                } catch (const std::exception&) {
                    o.fail("ladder (" + std::to_string(i) + "," + std::to_string(j) + "), set " + std::to_string(t));
                }
            }
    }
    if (o.ok) o.detail = "10 parameter sets: tail invariant, quotient = E_d, all ladders hold";
    return o;
}

Outcome cli_golden() {
    Outcome o;
    auto run = [](std::vector<std::string> args, const std::string& input, std::string& output) {
        args.insert(args.begin(), "bimod");
        std::vector<const char*> argv;
        for (const auto& a : args) argv.push_back(a.c_str());
        std::ostringstream out, err;
        std::istringstream in(input);
        int code = run_cli(static_cast<int>(argv.size()), argv.data(), out, err, in);
        output = out.str();
        return code;
    };
    std::string fixture, report;
    if (run({"fixture", "exampleE"}, "", fixture) != kPass) o.fail("fixture command failed");
    if (run({"minpoly", "--gen", "Z", "--no-timing"}, fixture, report) != kPass) o.fail("minpoly command failed");
    std::ifstream g(std::string(BIM_GOLDEN_DIR) + "/exampleE_minpoly_Z.json");
    std::ostringstream golden;
    golden << g.rdbuf();
    if (golden.str().empty()) o.fail("golden file missing");
    if (report != golden.str()) o.fail("report differs from golden file");

    std::size_t n = 0;
    for (long d : {1, 3})
        for_grid([&](const Rational& a, const Rational& b, const Rational& c) {
            for (const BIModule& m : {build_E(EvenParams(d, a, b, c)), build_O(OddParams(d - 1, a, b, c))}) {
                ++n;
                std::string text = serialize_module(m);
                BIModule back = parse_module(text);
                if (!(back == m) || serialize_module(back) != text) o.fail("round trip failed");
            }
        });
    if (o.ok) o.detail = "golden report byte-exact; " + std::to_string(n) + " modules round-trip";
    return o;
}

}  // namespace

int main() {
    const std::vector<std::pair<const char*, std::function<Outcome()>>> criteria{
        {"Fixture identity", fixture_identity},
        {"Minimal polynomials", minimal_polynomials_match},
        {"Relations", relations_on_grid},
        {"Criterion <=> oracle", criterion_vs_oracle},
        {"Even classification invariants", even_invariants},
        {"Sign flips are isomorphisms", sign_flips_isomorphic},
        {"Injectivity at desk scale", injectivity},
        {"Identification round-trip", identification_round_trip},
        {"L-matrix", l_matrix},
        {"Verma structure", verma_structure},
        {"CLI golden files", cli_golden},
    };
    int failed = 0;
    for (std::size_t i = 0; i < criteria.size(); ++i) {
        auto t0 = std::chrono::steady_clock::now();
        Outcome o;
        try {
            o = criteria[i].second();
        } catch (const std::exception& e) {
            o.fail(std::string("exception: ") + e.what());
        }
        auto ms = std::chrono::duration_cast<std::chrono::milliseconds>(std::chrono::steady_clock::now() - t0).count();
        std::cout << (o.ok ? "[PASS] " : "[FAIL] ") << i + 1 << " " << criteria[i].first << ": " << o.detail << " ("
                  << ms << " ms)" << std::endl;
        if (!o.ok) ++failed;
    }
    std::cout << (criteria.size() - static_cast<std::size_t>(failed)) << "/" << criteria.size() << " criteria passed"
              << std::endl;
    return failed == 0 ? 0 : 1;
}
