#include "bim/bimodule.hpp"

#include <sstream>
#include <stdexcept>

#include "bim/errors.hpp"
#include "bim/linalg.hpp"

namespace bim {

EvenParams::EvenParams(long d_, Rational a_, Rational b_, Rational c_)
    : d(d_), a(std::move(a_)), b(std::move(b_)), c(std::move(c_)) {
    if (d < 1 || d % 2 == 0) throw std::invalid_argument("EvenParams: d must be odd and >= 1");
}

OddParams::OddParams(long d_, Rational a_, Rational b_, Rational c_)
    : d(d_), a(std::move(a_)), b(std::move(b_)), c(std::move(c_)) {
    if (d < 0 || d % 2 != 0) throw std::invalid_argument("OddParams: d must be even and >= 0");
}

TwistSign::TwistSign(int e, int ep) : eps(e), eps_prime(ep) {
    if ((e != 1 && e != -1) || (ep != 1 && ep != -1))
        throw std::invalid_argument("TwistSign: components must be +1 or -1");
}

std::string TwistSign::to_string() const {
    return std::to_string(eps) + "," + std::to_string(eps_prime);
}

TwistSign TwistSign::parse(const std::string& text) {
    auto comma = text.find(',');
    if (comma == std::string::npos) throw std::invalid_argument("twist must be 'e,e''");
    auto part = [](const std::string& s) {
        if (s == "1" || s == "+1") return 1;
        if (s == "-1") return -1;
        throw std::invalid_argument("twist component must be 1 or -1");
    };
    return TwistSign(part(text.substr(0, comma)), part(text.substr(comma + 1)));
}

BIModule::BIModule(MatrixQ x, MatrixQ y, Rational k)
    : dim(x.rows()), X(std::move(x)), Y(std::move(y)), kappa(std::move(k)) {
    if (!X.is_square() || !Y.is_square() || X.rows() != Y.rows())
        throw DimensionMismatch("BIModule: X and Y must be square of equal size");
}

// ---------------------------------------------------------------------------

namespace {

Rational sign_pow(long i) { return (i % 2 == 0) ? Rational(1) : Rational(-1); }
const Rational kHalf(1, 2);
const Rational kQuarter(1, 4);

}  // namespace

SequenceTable::SequenceTable(Family f, Rational delta, Rational a, Rational b, Rational c)
    : family_(f), delta_(std::move(delta)), a_(std::move(a)), b_(std::move(b)), c_(std::move(c)) {}

SequenceTable::SequenceTable(Rational delta, Rational a, Rational b, Rational c)
    : SequenceTable(Family::Even, std::move(delta), std::move(a), std::move(b), std::move(c)) {}

SequenceTable SequenceTable::even(const EvenParams& p) {
    return SequenceTable(Family::Even, Rational(p.d), p.a, p.b, p.c);
}

SequenceTable SequenceTable::odd(const OddParams& p) {
    return SequenceTable(Family::Odd, Rational(p.d), p.a, p.b, p.c);
}

SequenceTable sequences(const EvenParams& p) { return SequenceTable::even(p); }
SequenceTable sequences(const OddParams& p) { return SequenceTable::odd(p); }

Rational SequenceTable::theta(long i) const {
    return sign_pow(i) * (Rational(2) * a_ - delta_ + Rational(2 * i)) * kHalf;
}

Rational SequenceTable::theta_star(long i) const {
    return sign_pow(i) * (Rational(2) * b_ - delta_ + Rational(2 * i)) * kHalf;
}

Rational SequenceTable::phi_lower(long i) const {
    if (family_ != Family::Even) throw std::logic_error("phi_lower is defined for the even family only");
    if (i % 2 == 0) return Rational(i) * (delta_ - Rational(i) + Rational(1));
    Rational t = Rational(2) * b_ - Rational(2) * a_ - delta_ + Rational(2 * i - 1);
    return c_ * c_ - t * t * kQuarter;
}

Rational SequenceTable::phi_upper(long i) const {
    if (family_ == Family::Even) {
        if (i % 2 == 0) return Rational(i) * (delta_ - Rational(i) + Rational(1));
        Rational t = Rational(2) * a_ + Rational(2) * b_ - delta_ + Rational(2 * i - 1);
        return c_ * c_ - t * t * kQuarter;
    }
    const Rational two(2);
    if (i % 2 == 0)
        return Rational(i) * (delta_ + Rational(1) - Rational(2 * i) - two * a_ - two * b_ - two * c_) * kHalf;
    return (Rational(i) - delta_ - Rational(1)) *
           (delta_ + Rational(1) - Rational(2 * i) - two * a_ - two * b_ + two * c_) * kHalf;
}

Rational SequenceTable::omega() const {
    if (family_ == Family::Odd) return Rational(2) * a_ * b_ - c_ * (delta_ + Rational(1));
    Rational h = (delta_ + Rational(1)) * kHalf;
    return c_ * c_ - a_ * a_ - b_ * b_ + h * h;
}

Rational SequenceTable::omega_star() const {
    if (family_ == Family::Odd) return Rational(2) * b_ * c_ - a_ * (delta_ + Rational(1));
    Rational h = (delta_ + Rational(1)) * kHalf;
    return a_ * a_ - b_ * b_ - c_ * c_ + h * h;
}

Rational SequenceTable::omega_diamond() const {
    if (family_ == Family::Odd) return Rational(2) * c_ * a_ - b_ * (delta_ + Rational(1));
    Rational h = (delta_ + Rational(1)) * kHalf;
    return b_ * b_ - c_ * c_ - a_ * a_ + h * h;
}

std::pair<MatrixQ, MatrixQ> bidiagonal_pair(const SequenceTable& s, std::size_t n) {
    MatrixQ x(n, n), y(n, n);
    for (std::size_t i = 0; i < n; ++i) {
        const long li = static_cast<long>(i);
        x(i, i) = s.theta(li);
        y(i, i) = s.theta_star(li);
        if (i + 1 < n) {
            x(i + 1, i) = Rational(1);
            y(i, i + 1) = s.phi_upper(li + 1);
        }
    }
    return {std::move(x), std::move(y)};
}

namespace {

void stamp_meta(BIModule& m, const char* family, long d, const Rational& a, const Rational& b,
                const Rational& c) {
    m.meta["family"] = family;
    m.meta["d"] = std::to_string(d);
    m.meta["a"] = a.to_string();
    m.meta["b"] = b.to_string();
    m.meta["c"] = c.to_string();
}

}  // namespace

BIModule build_E(const EvenParams& p) {
    if (p.d < 1 || p.d % 2 == 0) throw std::invalid_argument("build_E: d must be odd and >= 1");
    SequenceTable s = sequences(p);
    auto [x, y] = bidiagonal_pair(s, static_cast<std::size_t>(p.d) + 1);
    BIModule m(std::move(x), std::move(y), s.omega());
    m.lambda = s.omega_star();
    m.mu = s.omega_diamond();
    stamp_meta(m, "even", p.d, p.a, p.b, p.c);
    return m;
}

BIModule build_O(const OddParams& p) {
    if (p.d < 0 || p.d % 2 != 0) throw std::invalid_argument("build_O: d must be even and >= 0");
    SequenceTable s = sequences(p);
    auto [x, y] = bidiagonal_pair(s, static_cast<std::size_t>(p.d) + 1);
    BIModule m(std::move(x), std::move(y), s.omega());
    m.lambda = s.omega_star();
    m.mu = s.omega_diamond();
    stamp_meta(m, "odd", p.d, p.a, p.b, p.c);
    return m;
}

BIModule twist(const BIModule& v, const TwistSign& s) {
    if (s.is_identity()) return v;
    const Rational e(s.eps), ep(s.eps_prime);
    BIModule out = v;
    out.X = v.X * e;
    out.Y = v.Y * ep;
    out.kappa = e * ep * v.kappa;
    if (v.lambda) out.lambda = e * *v.lambda;
    if (v.mu) out.mu = ep * *v.mu;
    TwistSign total = s;
    if (auto it = v.meta.find("twist"); it != v.meta.end()) {
        TwistSign prev = TwistSign::parse(it->second);
        total = TwistSign(prev.eps * s.eps, prev.eps_prime * s.eps_prime);
    }
    if (total.is_identity())
        out.meta.erase("twist");
    else
        out.meta["twist"] = total.to_string();
    return out;
}

MatrixQ derive_Z(const BIModule& v) { return anticommutator(v.X, v.Y) - MatrixQ::scalar(v.dim, v.kappa); }

// ---------------------------------------------------------------------------

bool RelationReport::passed() const {
    for (const auto& c : checks)
        if (!c.passed) return false;
    return true;
}

std::string RelationReport::first_failure() const {
    for (const auto& c : checks)
        if (!c.passed) return c.name;
    return {};
}

RelationReport check_relations(const BIModule& v) {
    RelationReport rep;
    rep.kappa = v.kappa;
    bool shapes = v.X.rows() == v.dim && v.Y.rows() == v.dim && v.X.is_square() && v.Y.is_square();
    rep.checks.push_back({"shape", shapes, shapes ? "X, Y square of size dim" : "X, Y must be square of size dim"});
    if (!shapes) return rep;

    MatrixQ z = derive_Z(v);
    Rational k;
    bool kappa_ok = (anticommutator(v.X, v.Y) - z).is_scalar(&k) && k == v.kappa;
    rep.checks.push_back({"kappa", kappa_ok, "{X,Y} - Z = kappa I"});

    Rational l;
    bool l_scalar = (anticommutator(v.Y, z) - v.X).is_scalar(&l);
    if (l_scalar) rep.lambda = l;
    rep.checks.push_back({"lambda", l_scalar,
                          l_scalar ? "{Y,Z} - X = " + l.to_string() + " I" : "{Y,Z} - X is not a scalar matrix"});

    Rational m;
    bool m_scalar = (anticommutator(z, v.X) - v.Y).is_scalar(&m);
    if (m_scalar) rep.mu = m;
    rep.checks.push_back({"mu", m_scalar,
                          m_scalar ? "{Z,X} - Y = " + m.to_string() + " I" : "{Z,X} - Y is not a scalar matrix"});

    if (v.lambda) {
        bool ok = l_scalar && l == *v.lambda;
        rep.checks.push_back({"lambda_stored", ok, "stored lambda = " + v.lambda->to_string()});
    }
    if (v.mu) {
        bool ok = m_scalar && m == *v.mu;
        rep.checks.push_back({"mu_stored", ok, "stored mu = " + v.mu->to_string()});
    }
    return rep;
}

std::tuple<Rational, Rational, Rational> central_scalars(const BIModule& v) {
    RelationReport rep = check_relations(v);
    if (!rep.passed()) throw NotAModule("relation '" + rep.first_failure() + "' fails");
    return {rep.kappa, *rep.lambda, *rep.mu};
}

GeneratorTriple minimal_polynomials(const BIModule& v) {
    return {min_poly(v.X), min_poly(v.Y), min_poly(derive_Z(v))};
}

FlagTriple diagonalizability(const BIModule& v) {
    GeneratorTriple mp = minimal_polynomials(v);
    return {is_squarefree(mp.X), is_squarefree(mp.Y), is_squarefree(mp.Z)};
}

// ---------------------------------------------------------------------------

BIModule example_E() {
    const Rational h(1, 2);
    MatrixQ x{{-h, 0, 0, 0},
              {1, -h, 0, 0},
              {0, 1, Rational(3, 2), 0},
              {0, 0, 1, Rational(-5, 2)}};
    MatrixQ y{{Rational(-3, 2), 1, 0, 0},
              {0, h, 4, 0},
              {0, 0, h, -3},
              {0, 0, 0, Rational(-3, 2)}};
    BIModule m(std::move(x), std::move(y), Rational(4));
    m.lambda = Rational(4);
    m.mu = Rational(2);
    stamp_meta(m, "even", 3, Rational(1), Rational(0), Rational(1));
    return m;
}

BIModule example_O() {
    const Rational h(1, 2);
    MatrixQ x{{-h, 0, 0, 0, 0},
              {1, -h, 0, 0, 0},
              {0, 1, Rational(3, 2), 0, 0},
              {0, 0, 1, Rational(-5, 2), 0},
              {0, 0, 0, 1, Rational(7, 2)}};
    MatrixQ y{{Rational(-3, 2), 4, 0, 0, 0},
              {0, h, -2, 0, 0},
              {0, 0, h, 6, 0},
              {0, 0, 0, Rational(-3, 2), -12},
              {0, 0, 0, 0, Rational(5, 2)}};
    BIModule m(std::move(x), std::move(y), Rational(4));
    m.lambda = Rational(-8);
    m.mu = Rational(-4);
    stamp_meta(m, "odd", 4, Rational(3, 2), Rational(1, 2), Rational(-1, 2));
    return m;
}

}  // namespace bim
