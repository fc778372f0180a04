#include "bim/classify.hpp"

#include <algorithm>
#include <functional>
#include <set>
#include <stdexcept>

#include "bim/errors.hpp"
#include "bim/linalg.hpp"

namespace bim {

std::string to_string(IrrStatus s) {
    switch (s) {
        case IrrStatus::Irreducible: return "irreducible";
        case IrrStatus::Reducible: return "reducible";
        case IrrStatus::Indeterminate: return "indeterminate";
    }
    return "?";
}

std::string to_string(IrrMethod m) { return m == IrrMethod::Criterion ? "criterion" : "oracle"; }

std::string to_string(IsoStatus s) {
    switch (s) {
        case IsoStatus::Isomorphic: return "isomorphic";
        case IsoStatus::NotIsomorphic: return "not-isomorphic";
        case IsoStatus::Indeterminate: return "indeterminate";
    }
    return "?";
}

// ---------------------------------------------------------------------------
// Parameter criteria

namespace {

bool avoids(const std::vector<Rational>& values, const std::vector<Rational>& forbidden) {
    for (const auto& v : values)
        if (std::find(forbidden.begin(), forbidden.end(), v) != forbidden.end()) return false;
    return true;
}

}  // namespace

bool criterion_even(long d, const Rational& a, const Rational& b, const Rational& c) {
    if (d < 1 || d % 2 == 0) throw std::invalid_argument("criterion_even: d must be odd and >= 1");
    std::vector<Rational> forbidden;
    for (long i = 0; i <= d - 1; i += 2) forbidden.push_back(Rational(d - 1 - 2 * i, 2));
    return avoids({a + b + c, -a + b + c, a - b + c, a + b - c}, forbidden);
}

bool criterion_odd(long d, const Rational& a, const Rational& b, const Rational& c) {
    if (d < 0 || d % 2 != 0) throw std::invalid_argument("criterion_odd: d must be even and >= 0");
    std::vector<Rational> forbidden;
    for (long i = 2; i <= d; i += 2) forbidden.push_back(Rational(d + 1 - 2 * i, 2));
    return avoids({a + b + c, a - b - c, -a + b - c, -a - b + c}, forbidden);
}

namespace {

void verify_witness(const BIModule& v, const std::vector<VectorQ>& w) {
    if (w.empty() || w.size() >= v.dim || !is_invariant(w, {v.X, v.Y}))
        throw std::logic_error("reducibility witness is not a proper invariant subspace");
}

std::vector<VectorQ> tail_span(const std::vector<VectorQ>& basis, std::size_t from) {
    return std::vector<VectorQ>(basis.begin() + static_cast<long>(from), basis.end());
}

}  // namespace

IrrVerdict criterion_verdict(const EvenParams& p) {
    IrrVerdict out;
    out.method = IrrMethod::Criterion;
    if (criterion_even(p.d, p.a, p.b, p.c)) {
        out.status = IrrStatus::Irreducible;
        return out;
    }
    out.status = IrrStatus::Reducible;
    BIModule e = build_E(p);
    SequenceTable s = sequences(p);
    const std::size_t n = e.dim;
    std::vector<VectorQ> std_basis;
    for (std::size_t i = 0; i < n; ++i) std_basis.push_back(unit_vector(n, i));
    for (long i = 1; i <= p.d; ++i)
        if (s.phi_upper(i).is_zero()) {
            out.witness = tail_span(std_basis, static_cast<std::size_t>(i));
            out.note = "varphi_" + std::to_string(i) + " = 0";
            break;
        }
    if (out.witness.empty()) {
        MatrixQ P = w_basis(p);
        std::vector<VectorQ> w;
        for (std::size_t i = 0; i < n; ++i) w.push_back(P.column(i));
        for (long i = 1; i <= p.d; ++i)
            if (s.phi_lower(i).is_zero()) {
                out.witness = tail_span(w, static_cast<std::size_t>(i));
                out.note = "phi_" + std::to_string(i) + " = 0 (w-basis)";
                break;
            }
    }
    verify_witness(e, out.witness);
    return out;
}

IrrVerdict criterion_verdict(const OddParams& p) {
    IrrVerdict out;
    out.method = IrrMethod::Criterion;
    if (criterion_odd(p.d, p.a, p.b, p.c)) {
        out.status = IrrStatus::Irreducible;
        return out;
    }
    out.status = IrrStatus::Reducible;
    BIModule o = build_O(p);
    SequenceTable s = sequences(p);
    for (long i = 1; i <= p.d; ++i)
        if (s.phi_upper(i).is_zero()) {
            for (std::size_t k = static_cast<std::size_t>(i); k < o.dim; ++k)
                out.witness.push_back(unit_vector(o.dim, k));
            out.note = "varphi_" + std::to_string(i) + " = 0";
            break;
        }
    if (out.witness.empty()) {
        // The failing combination is a sign-flipped one; take the spin witness.
        IrrVerdict oracle = oracle_irreducible(o);
        if (oracle.status != IrrStatus::Reducible)
            throw std::logic_error("criterion_verdict: criterion and oracle disagree");
        out.witness = oracle.witness;
        out.note = "witness from spin oracle";
    }
    verify_witness(o, out.witness);
    return out;
}

// ---------------------------------------------------------------------------
// Spin oracle

namespace {

std::vector<Rational> distinct(const std::vector<Rational>& xs) {
    std::vector<Rational> out;
    for (const auto& x : xs)
        if (std::find(out.begin(), out.end(), x) == out.end()) out.push_back(x);
    return out;
}

std::string shifted(const char* gen, const Rational& t) {
    if (t.is_zero()) return gen;
    return std::string(gen) + (t.sign() > 0 ? " - " : " + ") + abs(t).to_string();
}

// Norton test on a singular element whose kernel is one-dimensional.
IrrVerdict norton(const BIModule& v, const MatrixQ& element, const std::string& label) {
    IrrVerdict out;
    const std::size_t n = v.dim;
    std::vector<VectorQ> k = kernel_basis(element);
    std::vector<VectorQ> s = spin(k, {v.X, v.Y});
    if (s.size() < n) {
        out.status = IrrStatus::Reducible;
        out.witness = s;
        out.note = "spin of ker(" + label + ")";
        return out;
    }
    MatrixQ xt = v.X.transpose(), yt = v.Y.transpose();
    std::vector<VectorQ> kt = kernel_basis(element.transpose());
    std::vector<VectorQ> st = spin(kt, {xt, yt});
    if (st.size() < n) {
        out.status = IrrStatus::Reducible;
        out.witness = annihilator(st, n);
        out.note = "annihilator of dual spin of ker(" + label + "^T)";
        return out;
    }
    out.status = IrrStatus::Irreducible;
    out.note = "Norton test on " + label;
    return out;
}

}  // namespace

IrrVerdict oracle_irreducible(const BIModule& v, const OracleOptions& opts) {
    const std::size_t n = v.dim;
    if (n == 0) throw std::invalid_argument("oracle_irreducible: zero-dimensional module");
    IrrVerdict out;
    out.method = IrrMethod::Oracle;

    RootReport ry = rational_roots(char_poly(v.Y));
    if (!ry.split) throw NonSplitSpectrum("characteristic polynomial of Y does not split over Q");
    std::vector<Rational> eig_y = distinct(ry.roots);

    // Every nonzero submodule contains an eigenvector of Y.
    bool all_simple = true;
    for (const auto& lam : eig_y) {
        std::vector<VectorQ> k = kernel_basis(shift(v.Y, lam));
        if (k.size() != 1) {
            all_simple = false;
            continue;
        }
        std::vector<VectorQ> s = spin(k, {v.X, v.Y});
        if (s.size() < n) {
            out.status = IrrStatus::Reducible;
            out.witness = s;
            out.note = "spin of the " + lam.to_string() + "-eigenvector of Y";
            verify_witness(v, out.witness);
            return out;
        }
    }

    if (all_simple) {
        MatrixQ xt = v.X.transpose(), yt = v.Y.transpose();
        for (const auto& lam : eig_y) {
            std::vector<VectorQ> k = kernel_basis(shift(yt, lam));
            std::vector<VectorQ> s = spin(k, {xt, yt});
            if (s.size() < n) {
                out.status = IrrStatus::Reducible;
                out.witness = annihilator(s, n);
                out.note = "annihilator of the dual spin at " + lam.to_string();
                verify_witness(v, out.witness);
                return out;
            }
        }
        out.status = IrrStatus::Irreducible;
        out.note = "all Y-eigenspaces one-dimensional and every spin full";
        return out;
    }

    // Single vectors of the larger eigenspaces. In a direct sum V + V every
    // element has even nullity, so the kernel search below cannot succeed.
    for (const auto& lam : eig_y) {
        std::vector<VectorQ> k = kernel_basis(shift(v.Y, lam));
        if (k.size() < 2) continue;
        for (const auto& u : k) {
            std::vector<VectorQ> s = spin({u}, {v.X, v.Y});
            if (s.size() < n) {
                out.status = IrrStatus::Reducible;
                out.witness = s;
                out.note = "spin of a single vector in the " + lam.to_string() + "-eigenspace of Y";
                verify_witness(v, out.witness);
                return out;
            }
        }
    }

    // Search for an element with a one-dimensional kernel.
    RootReport rx = rational_roots(char_poly(v.X));
    std::vector<Rational> eig_x = distinct(rx.roots);
    struct Factor {
        MatrixQ m;
        std::string label;
    };
    std::vector<Factor> factors;
    for (const auto& t : eig_x) factors.push_back({shift(v.X, t), shifted("X", t)});
    for (const auto& t : eig_y) factors.push_back({shift(v.Y, t), shifted("Y", t)});

    std::size_t tried = 0;
    auto attempt = [&](const MatrixQ& m, const std::string& label) -> std::optional<IrrVerdict> {
        ++tried;
        if (n - rank(m) != 1) return std::nullopt;
        IrrVerdict r = norton(v, m, label);
        r.method = IrrMethod::Oracle;
        if (r.status == IrrStatus::Reducible) verify_witness(v, r.witness);
        return r;
    };

    for (const auto& f : factors) {
        if (tried >= opts.max_words) break;
        if (auto r = attempt(f.m, f.label)) return *r;
    }
    for (const auto& lam : eig_y)
        for (const auto& mu : eig_x)
            for (long t : opts.combination_coefficients) {
                if (tried >= opts.max_words || t == 0) continue;
                MatrixQ m = shift(v.Y, lam) + Rational(t) * shift(v.X, mu);
                std::string label = "(" + shifted("Y", lam) + ") + " + std::to_string(t) + "(" + shifted("X", mu) + ")";
                if (auto r = attempt(m, label)) return *r;
            }

    std::function<std::optional<IrrVerdict>(const MatrixQ&, const std::string&, int)> products =
        [&](const MatrixQ& acc, const std::string& label, int depth) -> std::optional<IrrVerdict> {
        if (depth >= opts.max_factors) return std::nullopt;
        for (const auto& f : factors) {
            if (tried >= opts.max_words) return std::nullopt;
            MatrixQ m = acc * f.m;
            std::string l = label + "(" + f.label + ")";
            if (depth + 1 >= 2)
                if (auto r = attempt(m, l)) return r;
            if (auto r = products(m, l, depth + 1)) return r;
        }
        return std::nullopt;
    };
    if (auto r = products(MatrixQ::identity(n), "", 0)) return *r;

    out.status = IrrStatus::Indeterminate;
    out.note = "no element with one-dimensional kernel within budget (" + std::to_string(tried) + " words)";
    return out;
}

// ---------------------------------------------------------------------------
// L-matrix and w-basis

MatrixQ L_matrix(const EvenParams& p, LMethod method) {
    const long d = p.d;
    const std::size_t n = static_cast<std::size_t>(d) + 1;
    SequenceTable s = sequences(p);
    MatrixQ L(n, n);

    auto lower_prod = [&](long upto) {  // prod_{h=1}^{upto} phi_h
        Rational r(1);
        for (long h = 1; h <= upto; ++h) r *= s.phi_lower(h);
        return r;
    };
    auto star_prod = [&](long upto) {  // prod_{h=1}^{upto} (theta*_0 - theta*_{d-h+1})
        Rational r(1);
        for (long h = 1; h <= upto; ++h) r *= s.theta_star(0) - s.theta_star(d - h + 1);
        return r;
    };

    switch (method) {
        case LMethod::Operator: {
            BIModule e = build_E(p);
            MatrixQ R = MatrixQ::identity(n);
            for (long h = 1; h <= d; ++h) R = R * shift(e.Y, s.theta_star(h));
            for (long i = 0; i <= d; ++i) {
                MatrixQ S = MatrixQ::identity(n);
                for (long h = 1; h <= d - i; ++h) S = S * shift(e.X, s.theta(d - h + 1));
                MatrixQ RS = R * S;
                for (std::size_t j = 0; j < n; ++j) {
                    VectorQ col = RS.column(j);
                    for (std::size_t k = 1; k < n; ++k)
                        if (!col[k].is_zero()) throw std::logic_error("L_matrix: R S_i v_j is not a multiple of v_0");
                    L(static_cast<std::size_t>(i), j) = col[0];
                }
            }
            break;
        }
        case LMethod::Recurrence: {
            for (long i = 0; i <= d; ++i) L(static_cast<std::size_t>(i), 0) = star_prod(i) * lower_prod(d - i);
            for (std::size_t j = 1; j < n; ++j)
                for (std::size_t i = j; i < n; ++i)
                    L(i, j) = (s.theta(static_cast<long>(i)) - s.theta(static_cast<long>(j) - 1)) * L(i, j - 1) +
                              L(i - 1, j - 1);
            break;
        }
        case LMethod::Closed: {
            for (long i = 0; i <= d; ++i)
                for (long j = 0; j <= i; ++j) {
                    if (i % 2 == 0 && j % 2 == 1) continue;
                    Rational v = star_prod(i - j) * lower_prod(d - i);
                    for (long h = 1; h <= (j + 1) / 2; ++h) v *= s.phi_upper(2 * h - 1);
                    for (long h = 1; h <= j / 2; ++h) v *= s.phi_upper(2 * (i / 2 - h + 1));
                    L(static_cast<std::size_t>(i), static_cast<std::size_t>(j)) = v;
                }
            break;
        }
    }
    return L;
}

MatrixQ w_basis(const EvenParams& p) {
    BIModule e = build_E(p);
    SequenceTable s = sequences(p);
    std::vector<VectorQ> w;
    VectorQ cur = unit_vector(e.dim, 0);
    for (long i = 0; i <= p.d; ++i) {
        w.push_back(cur);
        cur = shift(e.X, s.theta(p.d - i)) * cur;
    }
    return MatrixQ::from_columns(e.dim, w);
}

std::pair<MatrixQ, MatrixQ> w_basis_matrices(const EvenParams& p) {
    BIModule e = build_E(p);
    SequenceTable s = sequences(p);
    MatrixQ P = w_basis(p);
    auto Pinv = inverse(P);
    if (!Pinv) throw std::logic_error("w_basis_matrices: w-vectors are dependent");
    MatrixQ x = *Pinv * e.X * P;
    MatrixQ y = *Pinv * e.Y * P;

    const std::size_t n = e.dim;
    MatrixQ want_x(n, n), want_y(n, n);
    for (std::size_t i = 0; i < n; ++i) {
        want_x(i, i) = s.theta(p.d - static_cast<long>(i));
        want_y(i, i) = s.theta_star(static_cast<long>(i));
        if (i + 1 < n) {
            want_x(i + 1, i) = Rational(1);
            want_y(i, i + 1) = s.phi_lower(static_cast<long>(i) + 1);
        }
    }
    if (x != want_x || y != want_y) throw std::logic_error("w_basis_matrices: unexpected shape in the w-basis");
    return {x, y};
}

// ---------------------------------------------------------------------------
// Intertwiners and isomorphism

std::vector<MatrixQ> intertwiner_space(const BIModule& v, const BIModule& w) {
    if (v.kappa != w.kappa) return {};
    const std::size_t m = v.dim, n = w.dim;
    const std::size_t unknowns = n * m;
    auto idx = [m](std::size_t r, std::size_t c) { return r * m + c; };
    MatrixQ sys(2 * unknowns, unknowns);
    std::size_t row = 0;
    for (const auto& [A, B] : {std::pair{&v.X, &w.X}, std::pair{&v.Y, &w.Y}}) {
        // (T A - B T)(r, c) = sum_k T(r,k) A(k,c) - sum_k B(r,k) T(k,c)
        for (std::size_t r = 0; r < n; ++r)
            for (std::size_t c = 0; c < m; ++c, ++row) {
                for (std::size_t k = 0; k < m; ++k)
                    if (!(*A)(k, c).is_zero()) sys(row, idx(r, k)) += (*A)(k, c);
                for (std::size_t k = 0; k < n; ++k)
                    if (!(*B)(r, k).is_zero()) sys(row, idx(k, c)) -= (*B)(r, k);
            }
    }
    std::vector<MatrixQ> out;
    for (const auto& vec : kernel_basis(sys)) out.emplace_back(n, m, vec);
    return out;
}

namespace {

bool invertible(const MatrixQ& t) { return t.is_square() && !determinant(t).is_zero(); }

}  // namespace

IsoResult are_isomorphic(const BIModule& v, const BIModule& w) {
    IsoResult out;
    auto reject = [&](std::string why) {
        out.status = IsoStatus::NotIsomorphic;
        out.reason = std::move(why);
        return out;
    };
    if (v.dim != w.dim) return reject("dimensions differ");
    if (v.X.trace() != w.X.trace()) return reject("traces of X differ");
    if (v.Y.trace() != w.Y.trace()) return reject("traces of Y differ");
    if (v.kappa != w.kappa) return reject("kappa differs");
    RelationReport rv = check_relations(v), rw = check_relations(w);
    if (rv.passed() && rw.passed()) {
        if (*rv.lambda != *rw.lambda) return reject("lambda differs");
        if (*rv.mu != *rw.mu) return reject("mu differs");
    }

    std::vector<MatrixQ> space = intertwiner_space(v, w);
    if (space.empty()) return reject("intertwiner space is zero");
    for (const auto& t : space)
        if (invertible(t)) {
            out.status = IsoStatus::Isomorphic;
            out.witness = t;
            out.reason = "invertible intertwiner (space dimension " + std::to_string(space.size()) + ")";
            return out;
        }
    if (space.size() == 1) return reject("the only intertwiner up to scale is singular");

    // Small integer combinations; a nonzero determinant polynomial is missed only on a thin set.
    const std::size_t k = space.size();
    std::vector<long> coeff(k, -2);
    for (std::size_t tries = 0; tries < 4000; ++tries) {
        MatrixQ t(w.dim, v.dim);
        for (std::size_t i = 0; i < k; ++i)
            if (coeff[i] != 0) t += Rational(coeff[i]) * space[i];
        if (invertible(t)) {
            out.status = IsoStatus::Isomorphic;
            out.witness = t;
            out.reason = "invertible combination of " + std::to_string(k) + " intertwiners";
            return out;
        }
        std::size_t pos = 0;
        while (pos < k && ++coeff[pos] > 2) coeff[pos++] = -2;
        if (pos == k) break;
    }
    out.status = IsoStatus::Indeterminate;
    out.reason = "no invertible element found among small combinations";
    return out;
}

Invariants invariants(const BIModule& v) {
    auto [k, l, m] = central_scalars(v);
    Invariants inv;
    inv.trace_X = v.X.trace();
    inv.trace_Y = v.Y.trace();
    inv.kappa = k;
    inv.lambda = l;
    inv.mu = m;
    inv.kappa_plus_mu = k + m;
    inv.lambda_plus_kappa = l + k;
    inv.mu_plus_lambda = m + l;
    return inv;
}

// ---------------------------------------------------------------------------
// Identification

std::tuple<Rational, Rational, Rational> orbit_canonical(const Rational& a, const Rational& b,
                                                         const Rational& c) {
    return {abs(a), abs(b), abs(c)};
}

BIModule reference_module(const ClassCoordinates& c) {
    if (c.family == Family::Odd) return build_O(OddParams(c.d, c.a, c.b, c.c));
    return twist(build_E(EvenParams(c.d, c.a, c.b, c.c)), c.twist.value_or(TwistSign{}));
}

namespace {

Rational sqrt_or_throw(const Rational& sq, const char* what) {
    auto r = exact_sqrt(sq);
    if (!r) throw NotRationalFamily(std::string(what) + " = " + sq.to_string() + " is not a rational square");
    return *r;
}

std::optional<int> sign_from_trace(const Rational& tr, const Rational& half_dim) {
    if (tr == -half_dim) return 1;
    if (tr == half_dim) return -1;
    return std::nullopt;
}

long ceil_long(const Rational& r) {
    mpz_class q;
    mpz_cdiv_q(q.get_mpz_t(), r.numerator().get_mpz_t(), r.denominator().get_mpz_t());
    return q.get_si();
}

struct ChainCandidate {
    long j;
    int eps;
    Rational param;
};

// Candidates (eps, a) with eps theta_i = vartheta_{i+j}(alpha) for i = 0..d,
// where vartheta_i(alpha) = (-1)^i (alpha + i).
std::vector<ChainCandidate> chain_candidates(const MatrixQ& m, long d) {
    RootReport rr = rational_roots(char_poly(m));
    if (!rr.split) throw NotRationalFamily("spectrum does not split over Q");
    std::vector<Rational> spectrum = distinct(rr.roots);
    Rational bound(0);
    for (const auto& s : spectrum) bound = std::max(bound, abs(s));
    auto vartheta = [](const Rational& alpha, long i) {
        return (i % 2 == 0 ? Rational(1) : Rational(-1)) * (alpha + Rational(i));
    };
    auto in_spectrum = [&](const Rational& x) { return std::find(spectrum.begin(), spectrum.end(), x) != spectrum.end(); };

    std::vector<ChainCandidate> out;
    for (const auto& alpha : spectrum) {
        const long J = ceil_long(bound + abs(alpha)) + 1;
        for (long j = -J; j <= J; ++j) {
            bool chain = true;
            for (long i = 0; i <= d && chain; ++i) chain = in_spectrum(vartheta(alpha, j + i));
            if (!chain) continue;
            ChainCandidate c{j, j % 2 == 0 ? 1 : -1, alpha + Rational(j) + Rational(d, 2)};
            bool dup = std::any_of(out.begin(), out.end(),
                                   [&](const ChainCandidate& o) { return o.eps == c.eps && o.param == c.param; });
            if (!dup) out.push_back(std::move(c));
        }
    }
    std::stable_sort(out.begin(), out.end(), [](const ChainCandidate& x, const ChainCandidate& y) {
        if (std::labs(x.j) != std::labs(y.j)) return std::labs(x.j) < std::labs(y.j);
        return x.eps > y.eps;
    });
    return out;
}

std::optional<Identification> try_even(const BIModule& v, long d, const TwistSign& tw, const Rational& a,
                                       const Rational& b, const Rational& c, const char* method) {
    BIModule target = twist(build_E(EvenParams(d, a, b, c)), tw);
    IsoResult iso = are_isomorphic(v, target);
    if (!iso.isomorphic()) return std::nullopt;
    Identification id;
    id.coords.family = Family::Even;
    id.coords.d = d;
    id.coords.twist = tw;
    std::tie(id.coords.a, id.coords.b, id.coords.c) = orbit_canonical(a, b, c);
    id.witness = *iso.witness;
    id.method = method;
    return id;
}

}  // namespace

Identification identify(const BIModule& v) {
    RelationReport rep = check_relations(v);
    if (!rep.passed()) throw NotAModule("relation '" + rep.first_failure() + "' fails");
    IrrVerdict verdict = oracle_irreducible(v);
    if (verdict.status != IrrStatus::Irreducible)
        throw IdentificationFailed("module is not verified irreducible (" + to_string(verdict.status) + ")");

    const long d = static_cast<long>(v.dim) - 1;
    if (d % 2 == 0) {
        const Rational a = v.X.trace(), b = v.Y.trace();
        const Rational c = (Rational(2) * a * b - v.kappa) / Rational(d + 1);
        BIModule target = build_O(OddParams(d, a, b, c));
        IsoResult iso = are_isomorphic(v, target);
        if (!iso.isomorphic()) throw IdentificationFailed("no isomorphism to O_d(trace X, trace Y, c): " + iso.reason);
        Identification id;
        id.coords.family = Family::Odd;
        id.coords.d = d;
        id.coords.a = a;
        id.coords.b = b;
        id.coords.c = c;
        id.witness = *iso.witness;
        id.method = "traces";
        return id;
    }

    const Rational half(d + 1, 2);
    auto eps = sign_from_trace(v.X.trace(), half);
    auto eps_p = sign_from_trace(v.Y.trace(), half);
    if (eps && eps_p) {
        TwistSign tw(*eps, *eps_p);
        // Undo the twist; twisting is an involution.
        BIModule u = twist(v, tw);
        auto [k, l, m] = central_scalars(u);
        const Rational h2 = half * half;
        Rational a = sqrt_or_throw(h2 - (k + m) / Rational(2), "a^2");
        Rational b = sqrt_or_throw(h2 - (l + k) / Rational(2), "b^2");
        Rational c = sqrt_or_throw(h2 - (m + l) / Rational(2), "c^2");
        if (auto id = try_even(v, d, tw, a, b, c, "invariants")) return *id;
    }

    // Eigenvalue-chain fallback.
    std::vector<ChainCandidate> xs = chain_candidates(v.X, d);
    std::vector<ChainCandidate> ys = chain_candidates(v.Y, d);
    bool any_square = false;
    for (const auto& cx : xs)
        for (const auto& cy : ys) {
            TwistSign tw(cx.eps, cy.eps);
            BIModule u = twist(v, tw);
            Rational c2 = u.kappa + cx.param * cx.param + cy.param * cy.param - half * half;
            auto c = exact_sqrt(c2);
            if (!c) continue;
            any_square = true;
            if (auto id = try_even(v, d, tw, cx.param, cy.param, *c, "eigenvalue-chain")) return *id;
        }
    if (!any_square && !xs.empty() && !ys.empty())
        throw NotRationalFamily("c^2 is not a rational square for any eigenvalue chain");
    throw IdentificationFailed("no candidate E_d(a,b,c)^(e,e') is isomorphic to the module");
}

// ---------------------------------------------------------------------------

bool OddTwistReport::passed() const {
    for (const auto& e : entries)
        if (!e.result.isomorphic()) return false;
    return !entries.empty();
}

OddTwistReport odd_twist_check(const OddParams& p) {
    if (!criterion_odd(p.d, p.a, p.b, p.c))
        throw std::invalid_argument("odd_twist_check: O_d(a,b,c) must be irreducible");
    BIModule o = build_O(p);
    OddTwistReport rep;
    const std::vector<std::pair<TwistSign, OddParams>> cases{
        {TwistSign(1, -1), OddParams(p.d, p.a, -p.b, -p.c)},
        {TwistSign(-1, 1), OddParams(p.d, -p.a, p.b, -p.c)},
        {TwistSign(-1, -1), OddParams(p.d, -p.a, -p.b, p.c)},
    };
    for (const auto& [tw, target] : cases)
        rep.entries.push_back({tw, target, are_isomorphic(twist(o, tw), build_O(target))});
    return rep;
}

}  // namespace bim
