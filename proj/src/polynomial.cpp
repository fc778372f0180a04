#include "bim/polynomial.hpp"

#include <algorithm>
#include <map>
#include <sstream>
#include <stdexcept>

namespace bim {

PolynomialQ::PolynomialQ(std::vector<Rational> coeffs) : c_(std::move(coeffs)) { trim(); }

void PolynomialQ::trim() {
    while (!c_.empty() && c_.back().is_zero()) c_.pop_back();
}

PolynomialQ PolynomialQ::from_roots(const std::vector<Rational>& roots) {
    PolynomialQ p = constant(Rational(1));
    for (const auto& r : roots) p = p * PolynomialQ({-r, Rational(1)});
    return p;
}

PolynomialQ PolynomialQ::monic() const {
    if (is_zero()) return *this;
    PolynomialQ out = *this;
    Rational lead = leading();
    for (auto& c : out.c_) c /= lead;
    return out;
}

PolynomialQ PolynomialQ::derivative() const {
    std::vector<Rational> d;
    for (std::size_t i = 1; i < c_.size(); ++i) d.push_back(c_[i] * Rational(static_cast<long>(i)));
    return PolynomialQ(std::move(d));
}

Rational PolynomialQ::operator()(const Rational& x) const {
    Rational acc(0);
    for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * x + *it;
    return acc;
}

PolynomialQ& PolynomialQ::operator+=(const PolynomialQ& o) {
    if (o.c_.size() > c_.size()) c_.resize(o.c_.size());
    for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] += o.c_[i];
    trim();
    return *this;
}

PolynomialQ& PolynomialQ::operator-=(const PolynomialQ& o) {
    if (o.c_.size() > c_.size()) c_.resize(o.c_.size());
    for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] -= o.c_[i];
    trim();
    return *this;
}

PolynomialQ operator*(const PolynomialQ& a, const PolynomialQ& b) {
    if (a.is_zero() || b.is_zero()) return {};
    std::vector<Rational> out(a.c_.size() + b.c_.size() - 1);
    for (std::size_t i = 0; i < a.c_.size(); ++i) {
        if (a.c_[i].is_zero()) continue;
        for (std::size_t j = 0; j < b.c_.size(); ++j) out[i + j] += a.c_[i] * b.c_[j];
    }
    return PolynomialQ(std::move(out));
}

PolynomialQ operator*(const Rational& s, const PolynomialQ& p) {
    std::vector<Rational> out = p.c_;
    for (auto& c : out) c *= s;
    return PolynomialQ(std::move(out));
}

namespace {

void append_monomial(std::ostringstream& os, bool first, const Rational& c, std::size_t power) {
    Rational mag = abs(c);
    if (first) {
        if (c.sign() < 0) os << "-";
    } else {
        os << (c.sign() < 0 ? " - " : " + ");
    }
    bool unit = mag == Rational(1);
    if (power == 0) {
        os << mag;
        return;
    }
    if (!unit) os << mag << "*";
    os << "x";
    if (power > 1) os << "^" << power;
}

}  // namespace

std::string PolynomialQ::to_string() const {
    if (is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    for (std::size_t i = c_.size(); i-- > 0;) {
        if (c_[i].is_zero()) continue;
        append_monomial(os, first, c_[i], i);
        first = false;
    }
    return os.str();
}

std::pair<PolynomialQ, PolynomialQ> divmod(const PolynomialQ& a, const PolynomialQ& b) {
    if (b.is_zero()) throw std::domain_error("polynomial division by zero");
    std::vector<Rational> rem = a.coefficients();
    const auto& bc = b.coefficients();
    const std::size_t nb = bc.size();
    if (rem.size() < nb) return {PolynomialQ(), a};
    std::vector<Rational> quot(rem.size() - nb + 1);
    const Rational& lead = bc.back();
    for (std::size_t k = quot.size(); k-- > 0;) {
        Rational q = rem[k + nb - 1] / lead;
        quot[k] = q;
        if (q.is_zero()) continue;
        for (std::size_t j = 0; j < nb; ++j) rem[k + j] -= q * bc[j];
    }
    rem.resize(nb - 1);
    return {PolynomialQ(std::move(quot)), PolynomialQ(std::move(rem))};
}

PolynomialQ gcd(PolynomialQ a, PolynomialQ b) {
    while (!b.is_zero()) {
        PolynomialQ r = divmod(a, b).second;
        a = std::move(b);
        b = std::move(r);
    }
    return a.monic();
}

PolynomialQ lcm(const PolynomialQ& a, const PolynomialQ& b) {
    if (a.is_zero() || b.is_zero()) return {};
    return divmod(a * b, gcd(a, b)).first.monic();
}

bool divides(const PolynomialQ& d, const PolynomialQ& p) { return divmod(p, d).second.is_zero(); }

bool is_squarefree(const PolynomialQ& p) {
    if (p.is_zero()) throw std::invalid_argument("is_squarefree: zero polynomial");
    return gcd(p, p.derivative()).degree() == 0;
}

namespace {

// Smallest D (up to the factorisation limit) with den(c_{n-k}) | D^k for a monic p of degree n.
mpz_class scaling_factor(const PolynomialQ& monic_p) {
    const int n = monic_p.degree();
    std::vector<std::pair<int, mpz_class>> dens;  // (k, denominator of c_{n-k})
    mpz_class g = 1;
    for (int k = 1; k <= n; ++k) {
        mpz_class den = monic_p.coeff(static_cast<std::size_t>(n - k)).denominator();
        if (den != 1) {
            dens.emplace_back(k, den);
            mpz_lcm(g.get_mpz_t(), g.get_mpz_t(), den.get_mpz_t());
        }
    }
    if (g == 1) return 1;

    std::vector<unsigned long> primes;
    mpz_class rest = g;
    for (unsigned long p = 2; p < 1000000 && rest != 1; ++p) {
        if (mpz_divisible_ui_p(rest.get_mpz_t(), p)) {
            primes.push_back(p);
            while (mpz_divisible_ui_p(rest.get_mpz_t(), p)) mpz_divexact_ui(rest.get_mpz_t(), rest.get_mpz_t(), p);
        }
    }
    if (rest != 1) return g;

    mpz_class D = 1;
    for (unsigned long p : primes) {
        unsigned long need = 0;
        for (const auto& [k, den] : dens) {
            unsigned long v = mpz_remove(mpz_class().get_mpz_t(), den.get_mpz_t(), mpz_class(p).get_mpz_t());
            unsigned long e = (v + static_cast<unsigned long>(k) - 1) / static_cast<unsigned long>(k);
            need = std::max(need, e);
        }
        mpz_class pe;
        mpz_pow_ui(pe.get_mpz_t(), mpz_class(p).get_mpz_t(), need);
        D *= pe;
    }
    return D;
}

mpz_class ceil_root(const mpz_class& x, unsigned long k) {
    mpz_class r;
    mpz_root(r.get_mpz_t(), x.get_mpz_t(), k);
    return r + 1;
}

// Evaluates a monic integer polynomial (lowest degree first) at y.
mpz_class eval_int(const std::vector<mpz_class>& a, const mpz_class& y) {
    mpz_class acc = 0;
    for (auto it = a.rbegin(); it != a.rend(); ++it) acc = acc * y + *it;
    return acc;
}

// Divides a by (x - y); the caller guarantees y is a root.
void deflate(std::vector<mpz_class>& a, const mpz_class& y) {
    const std::size_t n = a.size() - 1;
    std::vector<mpz_class> q(n);
    mpz_class carry = 0;
    for (std::size_t i = n; i-- > 0;) {
        carry = a[i + 1] + carry * y;
        q[i] = carry;
    }
    a = std::move(q);
}

constexpr long kMaxCandidates = 20000000;

}  // namespace

RootReport rational_roots(const PolynomialQ& p) {
    if (p.is_zero()) throw std::invalid_argument("rational_roots: zero polynomial");
    RootReport out;
    const int full_degree = p.degree();

    std::size_t zeros = 0;
    while (p.coeff(zeros).is_zero()) ++zeros;
    std::vector<Rational> shifted(p.coefficients().begin() + static_cast<long>(zeros), p.coefficients().end());
    PolynomialQ q = PolynomialQ(std::move(shifted)).monic();
    for (std::size_t i = 0; i < zeros; ++i) out.roots.emplace_back(0);

    const int n = q.degree();
    if (n > 0) {
        // Integer roots of Q(y) = D^n q(y / D), which is monic with integer coefficients.
        mpz_class D = scaling_factor(q);
        std::vector<mpz_class> a(static_cast<std::size_t>(n) + 1);
        mpz_class Dk = 1;
        for (int k = 0; k <= n; ++k) {
            Rational c = q.coeff(static_cast<std::size_t>(n - k)) * Rational(Dk);
            if (!c.is_integer()) throw std::logic_error("rational_roots: scaling failed");
            a[static_cast<std::size_t>(n - k)] = c.numerator();
            Dk *= D;
        }

        mpz_class bound = 0;
        for (int k = 1; k <= n; ++k) {
            mpz_class c = abs(a[static_cast<std::size_t>(n - k)]);
            if (k == n) c = c / 2 + 1;
            if (c == 0) continue;
            bound = std::max(bound, ceil_root(c, static_cast<unsigned long>(k)));
        }
        bound *= 2;

        auto try_candidate = [&](const mpz_class& y) {
            while (a.size() > 1 && a[0] != 0 && mpz_divisible_p(a[0].get_mpz_t(), y.get_mpz_t()) &&
                   eval_int(a, y) == 0) {
                deflate(a, y);
                out.roots.emplace_back(y, D);
            }
        };

        if (bound <= kMaxCandidates) {
            const long B = bound.get_si();
            for (long y = 1; y <= B && a.size() > 1; ++y) {
                try_candidate(mpz_class(y));
                try_candidate(mpz_class(-y));
            }
        } else {
            mpz_class c0 = abs(a[0]);
            mpz_class s;
            mpz_sqrt(s.get_mpz_t(), c0.get_mpz_t());
            if (s > kMaxCandidates)
                throw std::runtime_error("rational_roots: coefficients too large for root search");
            const long S = s.get_si();
            for (long t = 1; t <= S && a.size() > 1; ++t) {
                if (!mpz_divisible_ui_p(c0.get_mpz_t(), static_cast<unsigned long>(t))) continue;
                mpz_class other = c0 / t;
                for (const mpz_class& y : {mpz_class(t), mpz_class(-t), other, mpz_class(-other)})
                    try_candidate(y);
            }
        }
    }

    std::sort(out.roots.begin(), out.roots.end(), std::greater<>());
    out.split = static_cast<int>(out.roots.size()) == full_degree;
    return out;
}

std::string factored_string(const PolynomialQ& p) {
    if (p.degree() < 1) return p.to_string();
    RootReport rr = rational_roots(p);
    if (!rr.split) return p.to_string();
    std::map<Rational, int, std::greater<>> mult;
    for (const auto& r : rr.roots) ++mult[r];
    std::ostringstream os;
    bool first = true;
    if (p.leading() != Rational(1)) {
        os << p.leading();
        first = false;
    }
    for (const auto& [r, m] : mult) {
        if (!first) os << "*";
        first = false;
        if (r.is_zero()) {
            os << "x";
        } else {
            os << "(x " << (r.sign() > 0 ? "- " : "+ ") << abs(r) << ")";
        }
        if (m > 1) os << "^" << m;
    }
    return os.str();
}

}  // namespace bim
