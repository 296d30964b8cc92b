#pragma once

#include <cstdlib>
#include <map>
#include <optional>
#include <string>
#include <variant>

#include "farey.hpp"
#include "sequence.hpp"

namespace betahole {

/// An approximate comparison whose inputs cannot decide the sign; carries
/// the undecided question. Mapped to a distinct CLI exit code.
struct AmbiguousComparison : std::runtime_error {
    explicit AmbiguousComparison(const std::string& what) : std::runtime_error("ambiguous: " + what) {}
};

/// A certified computation ran out of refinement budget.
struct PrecisionExhausted : std::runtime_error {
    explicit PrecisionExhausted(const std::string& what) : std::runtime_error("precision: " + what) {}
};

/// Enclosure with exact rational endpoints. All numeric outputs are
/// enclosures; exact values have lo == hi.
struct Interval {
    Rational lo, hi;

    Interval() = default;
    Interval(Rational l, Rational h) : lo(std::move(l)), hi(std::move(h)) {
        if (lo > hi) throw std::invalid_argument("interval endpoints out of order");
    }
    static Interval point(Rational v) { return Interval(v, v); }

    Rational width() const { return hi - lo; }
    Rational mid() const { return (lo + hi) / 2; }
    bool contains(const Rational& v) const { return lo <= v && v <= hi; }
    bool is_point() const { return lo == hi; }
};

/// Refinement budget: enclosure-width targets 2^-start_bits, doubling on
/// retries up to 2^-max_bits. BETAHOLE_PRECISION overrides the start.
struct Precision {
    int start_bits = 128;
    int max_bits = 4096;
};

inline Precision default_precision() {
    Precision p;
    if (const char* env = std::getenv("BETAHOLE_PRECISION")) {
        const int v = std::atoi(env);
        if (v > 0) p.start_bits = std::min(v, p.max_bits);
    }
    return p;
}

inline Rational pow2_inv(int bits) {
    mpz_class d;
    mpz_ui_pow_ui(d.get_mpz_t(), 2, static_cast<unsigned long>(bits));
    return Rational(1, d);
}

namespace detail {

// Scaled integer Horner for beta = p/q: U_i = U_{i-1} p - a_i q^i equals
// (beta^i - sum_{j<=i} a_j beta^{i-j}) q^i. Integer arithmetic avoids the
// per-operation gcd normalization of mpq on deep bisections.
struct ScaledHorner {
    mpz_class u = 1; // T_i scaled by q^i
    mpz_class d = 1; // q^i

    void run(const Word& a, const mpz_class& p, const mpz_class& q) {
        for (std::size_t i = 0; i < a.size(); ++i) {
            u *= p;
            d *= q;
            if (a[i]) u -= d;
        }
    }
};

// Sign of (a^inf)_beta - 1, i.e. of 1 - T where T = beta^n - sum a_i beta^{n-i}.
inline int value_vs_one_sign(const Word& a, const Rational& beta) {
    ScaledHorner h;
    h.run(a, beta.get_num(), beta.get_den());
    return sgn(mpz_class(h.d - h.u));
}

// (sum a_i beta^{n-i}) / (beta^n - 1) = V / (p^n - q^n) with V the scaled
// numerator sum; a single normalization at the end.
inline Rational eval_periodic_exact(const Word& period, const Rational& beta) {
    const mpz_class& p = beta.get_num();
    const mpz_class& q = beta.get_den();
    mpz_class v = 0, d = 1, pn = 1;
    for (std::size_t i = 0; i < period.size(); ++i) {
        v *= p;
        d *= q;
        pn *= p;
        if (period[i]) v += d;
    }
    Rational r(v, pn - d);
    r.canonicalize();
    return r;
}

} // namespace detail

/// A point of (1,2]: exact rational, defined exactly by a Perron word
/// (the base with delta(beta) = a^inf), or an approximate rational bracket.
class BetaParam {
public:
    enum class Kind { exact, word_defined, approximate };

    static BetaParam exact(const Rational& v) {
        if (v <= 1 || v > 2) throw std::invalid_argument("range: beta out of range (1,2]");
        BetaParam b;
        b.kind_ = Kind::exact;
        b.lo_ = b.hi_ = v;
        return b;
    }

    static BetaParam word(const Word& a, Precision prec = default_precision()) {
        if (!is_perron(a)) throw std::invalid_argument("not-perron");
        BetaParam b;
        b.kind_ = Kind::word_defined;
        b.word_ = a;
        b.prec_ = prec;
        b.init_word_bracket();
        return b;
    }

    static BetaParam approximate(const Rational& lo, const Rational& hi,
                                 Precision prec = default_precision()) {
        Rational l = lo, h = hi;
        if (h > 2) h = 2; // intersect with the valid domain
        if (l >= h || h <= 1 || l < 1)
            throw std::invalid_argument("range: beta out of range (1,2]");
        BetaParam b;
        b.kind_ = Kind::approximate;
        b.lo_ = l;
        b.hi_ = h;
        b.prec_ = prec;
        return b;
    }

    /// Grammar: "p/q" exact rational, "word:<bits>" word-defined,
    /// decimal literal approximate with radius half an ulp, plain integer
    /// exact.
    static BetaParam parse(const std::string& spec, Precision prec = default_precision());

    Kind kind() const { return kind_; }
    const Word& defining_word() const {
        if (kind_ != Kind::word_defined) throw std::logic_error("not word-defined");
        return *word_;
    }
    Rational exact_value() const {
        if (kind_ != Kind::exact) throw std::logic_error("not exact");
        return lo_;
    }
    Interval bracket() const { return Interval(lo_, hi_); }
    const Precision& precision() const { return prec_; }

    /// Word-defined parameters can be refined to any bracket width; others
    /// are returned unchanged.
    BetaParam refined_to(int bits) const {
        if (kind_ != Kind::word_defined) return *this;
        BetaParam b = *this;
        b.bisect_to(pow2_inv(bits));
        return b;
    }

    BetaParam refined_to_width(const Rational& tol) const {
        if (kind_ != Kind::word_defined) return *this;
        BetaParam b = *this;
        b.bisect_to(tol);
        return b;
    }

private:
    BetaParam() = default;

    // Invariant for word brackets: f(lo) > 0 > f(hi) for f = value - 1 of
    // the defining word, so the root is strictly inside. Dyadic midpoints
    // never hit the root (Parry polynomials have no rational roots in (1,2)),
    // so every bisection step is decided exactly.
    void init_word_bracket() {
        hi_ = 2;
        Rational eps(1, 2);
        while (detail::value_vs_one_sign(*word_, 1 + eps) <= 0) eps /= 2;
        lo_ = 1 + eps;
        bisect_to(pow2_inv(64));
    }

    void bisect_to(const Rational& tol) {
        while (hi_ - lo_ > tol) {
            const Rational mid = (lo_ + hi_) / 2;
            if (detail::value_vs_one_sign(*word_, mid) > 0) lo_ = mid;
            else hi_ = mid;
        }
    }

    Kind kind_ = Kind::exact;
    Rational lo_, hi_;
    std::optional<Word> word_;
    Precision prec_ = default_precision();
};

/// Enclosure of (a^inf)_beta = (sum a_i beta^{n-i}) / (beta^n - 1). The map
/// is strictly decreasing in beta, so bracket endpoints evaluate outward.
inline Interval eval_periodic(const PeriodicSequence& a, const BetaParam& beta) {
    if (a.is_zero()) return Interval::point(0);
    const Word& p = a.period();
    if (beta.kind() == BetaParam::Kind::exact)
        return Interval::point(detail::eval_periodic_exact(p, beta.exact_value()));
    const Interval b = beta.bracket();
    return Interval(detail::eval_periodic_exact(p, b.hi), detail::eval_periodic_exact(p, b.lo));
}

inline Rational eval_periodic_exact(const PeriodicSequence& a, const Rational& beta) {
    if (beta <= 1) throw std::invalid_argument("range: beta out of range (1,2]");
    return detail::eval_periodic_exact(a.period(), beta);
}

enum class Cmp { less, equal, greater };

inline const char* to_string(Cmp c) {
    switch (c) {
        case Cmp::less: return "less";
        case Cmp::equal: return "equal";
        case Cmp::greater: return "greater";
    }
    return "?";
}

/// sigma^k(a^inf) <= a^inf for every k: a^inf is then the quasi-greedy
/// expansion of 1 for exactly one base.
inline bool is_quasi_greedy_admissible(const PeriodicSequence& a) {
    for (std::size_t k = 1; k < a.period_length(); ++k)
        if (a.shifted(k) > a) return false;
    return true;
}

/// Exact sign of (a^inf)_beta - 1.
///
/// Exact rational betas evaluate directly. Word-defined betas compare
/// symbolically when a^inf is quasi-greedy admissible (monotonicity of
/// delta), and fall back to bracket refinement otherwise. Approximate betas
/// decide by the endpoint signs and never report equality.
inline Cmp cmp_value_one(const PeriodicSequence& a, const BetaParam& beta) {
    if (a.is_zero()) return Cmp::less;
    switch (beta.kind()) {
        case BetaParam::Kind::exact: {
            const int s = detail::value_vs_one_sign(a.period(), beta.exact_value());
            return s < 0 ? Cmp::less : s > 0 ? Cmp::greater : Cmp::equal;
        }
        case BetaParam::Kind::word_defined: {
            if (is_quasi_greedy_admissible(a)) {
                const auto c = a <=> PeriodicSequence(beta.defining_word());
                return c < 0 ? Cmp::less : c > 0 ? Cmp::greater : Cmp::equal;
            }
            for (int bits = beta.precision().start_bits;; bits *= 2) {
                if (bits > beta.precision().max_bits)
                    throw PrecisionExhausted("value comparison at word-defined beta");
                const Interval v = eval_periodic(a, beta.refined_to(bits));
                if (v.hi < 1) return Cmp::less;
                if (v.lo > 1) return Cmp::greater;
            }
        }
        case BetaParam::Kind::approximate: {
            const Interval b = beta.bracket();
            // value is decreasing in beta: the sign at lo bounds from above
            if (detail::value_vs_one_sign(a.period(), b.lo) < 0) return Cmp::less;
            if (detail::value_vs_one_sign(a.period(), b.hi) > 0) return Cmp::greater;
            throw AmbiguousComparison("beta radius straddles the root of " + a.to_string());
        }
    }
    throw std::logic_error("unreachable");
}

/// The unique base in (1,2] with (a^inf)_beta = 1, bracketed to width <= tol.
inline BetaParam beta_from_perron_word(const Word& a, const Rational& tol,
                                       Precision prec = default_precision()) {
    if (tol <= 0) throw std::invalid_argument("range: tol must be positive");
    return BetaParam::word(a, prec).refined_to_width(tol);
}

namespace detail {

struct IntervalArith {
    static Interval mul(const Interval& a, const Interval& b) {
        const Rational p1 = a.lo * b.lo, p2 = a.lo * b.hi, p3 = a.hi * b.lo, p4 = a.hi * b.hi;
        return Interval(std::min(std::min(p1, p2), std::min(p3, p4)),
                        std::max(std::max(p1, p2), std::max(p3, p4)));
    }
    static Interval add(const Interval& a, const Rational& c) { return {a.lo + c, a.hi + c}; }
    static Interval sub(const Interval& a, const Rational& c) { return {a.lo - c, a.hi - c}; }
};

// Element of Q[x] reduced modulo the Parry polynomial of a defining word b:
// x^n = b_1 x^{n-1} + ... + b_n + 1. Exact state arithmetic for digit
// generation and value comparison at word-defined bases.
class ParryElem {
public:
    ParryElem(const Word& defining, const Rational& constant)
        : b_(defining), c_(defining.size(), Rational(0)) {
        c_[0] = constant;
    }

    static ParryElem from_coeffs(const Word& defining, std::vector<Rational> raw) {
        // raw[i] is the coefficient of x^i, any degree; reduce from the top
        const std::size_t n = defining.size();
        for (std::size_t d = raw.size(); d-- > n;) {
            Rational o = raw[d];
            if (o == 0) continue;
            raw[d] = 0;
            for (std::size_t i = 1; i <= n; ++i) raw[d - i] += o * defining[i - 1];
            raw[d - n] += o;
        }
        raw.resize(n, Rational(0));
        ParryElem e(defining, 0);
        e.c_ = std::move(raw);
        return e;
    }

    void mul_x() {
        const std::size_t n = c_.size();
        Rational o = c_[n - 1];
        for (std::size_t i = n - 1; i > 0; --i) c_[i] = c_[i - 1];
        c_[0] = 0;
        if (o != 0) {
            for (std::size_t i = 1; i <= n; ++i) c_[n - i] += o * b_[i - 1];
            c_[0] += o;
        }
    }

    void sub_const(const Rational& v) { c_[0] -= v; }

    bool is_zero() const {
        for (const auto& x : c_)
            if (x != 0) return false;
        return true;
    }

    Interval eval(const Interval& beta) const {
        Interval acc = Interval::point(0);
        for (std::size_t i = c_.size(); i-- > 0;)
            acc = IntervalArith::add(IntervalArith::mul(acc, beta), c_[i]);
        return acc;
    }

    const std::vector<Rational>& coeffs() const { return c_; }
    bool operator<(const ParryElem& o) const { return c_ < o.c_; }
    bool operator==(const ParryElem& o) const { return c_ == o.c_; }

private:
    Word b_;
    std::vector<Rational> c_;
};

// Certified sign of a reduced element at the word-defined base; zero only
// when the element is the zero polynomial.
inline int parry_sign(const ParryElem& e, const BetaParam& beta) {
    if (e.is_zero()) return 0;
    for (int bits = beta.precision().start_bits;; bits *= 2) {
        if (bits > beta.precision().max_bits)
            throw PrecisionExhausted("sign of algebraic expression");
        const Interval v = e.eval(beta.refined_to(bits).bracket());
        if (v.hi < 0) return -1;
        if (v.lo > 0) return 1;
    }
}

// Compare (a^inf)_beta with (b^inf)_beta exactly at an exact-rational or
// word-defined beta. Equal values at a word-defined base are certified by a
// zero remainder modulo the Parry polynomial.
inline Cmp cmp_periodic_values(const PeriodicSequence& a, const PeriodicSequence& b,
                               const BetaParam& beta) {
    if (a == b) return Cmp::equal;
    if (beta.kind() == BetaParam::Kind::exact) {
        const Rational va = a.is_zero() ? Rational(0) : eval_periodic_exact(a.period(), beta.exact_value());
        const Rational vb = b.is_zero() ? Rational(0) : eval_periodic_exact(b.period(), beta.exact_value());
        const int c = cmp(va, vb);
        return c < 0 ? Cmp::less : c > 0 ? Cmp::greater : Cmp::equal;
    }
    if (beta.kind() != BetaParam::Kind::word_defined)
        throw std::invalid_argument("cmp_periodic_values needs an exact-decidable beta");
    // bring both to the common period L: difference of the numerator
    // polynomials P_a (beta^L - 1)/(beta^na - 1) etc., i.e. P_a * R_b - P_b * R_a
    // with R the repetition factors; build plain coefficients then reduce.
    const Word& pa = a.period();
    const Word& pb = b.period();
    const std::size_t L = std::lcm(pa.size(), pb.size());
    auto repeated_coeffs = [&](const Word& p) {
        // coefficients of sum over one L-period: digit at position i (from the
        // left, exponent L-1-i)
        std::vector<Rational> c(L, Rational(0));
        for (std::size_t i = 0; i < L; ++i) c[L - 1 - i] = p[i % p.size()];
        return c;
    };
    std::vector<Rational> diff = repeated_coeffs(pa);
    {
        const std::vector<Rational> cb = repeated_coeffs(pb);
        for (std::size_t i = 0; i < L; ++i) diff[i] -= cb[i];
    }
    const ParryElem d = ParryElem::from_coeffs(beta.defining_word(), std::move(diff));
    const int s = parry_sign(d, beta);
    return s < 0 ? Cmp::less : s > 0 ? Cmp::greater : Cmp::equal;
}

} // namespace detail

/// First n digits of the quasi-greedy expansion of 1: d_i = 1 iff
/// beta*x > 1 strictly (ties emit 0 and reset the state to 1), certified at
/// every step or failing with "precision".
inline Word quasi_greedy_delta(const BetaParam& beta, std::size_t n) {
    std::vector<std::uint8_t> out;
    out.reserve(n);
    switch (beta.kind()) {
        case BetaParam::Kind::word_defined: {
            const Word& w = beta.defining_word();
            for (std::size_t i = 0; i < n; ++i) out.push_back(static_cast<std::uint8_t>(w[i % w.size()]));
            return Word(std::move(out));
        }
        case BetaParam::Kind::exact: {
            const Rational b = beta.exact_value();
            Rational x = 1;
            for (std::size_t i = 0; i < n; ++i) {
                const Rational t = b * x;
                if (t > 1) {
                    out.push_back(1);
                    x = t - 1;
                } else {
                    out.push_back(0);
                    x = t;
                }
            }
            return Word(std::move(out));
        }
        case BetaParam::Kind::approximate: {
            const Interval b = beta.bracket();
            Interval x = Interval::point(1);
            for (std::size_t i = 0; i < n; ++i) {
                const Interval t = detail::IntervalArith::mul(b, x);
                if (t.lo > 1) {
                    out.push_back(1);
                    x = detail::IntervalArith::sub(t, 1);
                } else if (t.hi <= 1) {
                    out.push_back(0);
                    x = t;
                } else {
                    throw PrecisionExhausted("quasi-greedy digit " + std::to_string(i + 1) +
                                             " undecidable at the given radius");
                }
            }
            return Word(std::move(out));
        }
    }
    throw std::logic_error("unreachable");
}

/// First n digits of the greedy expansion of t in base beta: d_i = 1 iff
/// beta*x >= 1.
inline Word greedy_expansion(const Rational& t, const BetaParam& beta, std::size_t n) {
    if (t < 0 || t >= 1) throw std::invalid_argument("range: t must lie in [0,1)");
    std::vector<std::uint8_t> out;
    out.reserve(n);
    switch (beta.kind()) {
        case BetaParam::Kind::exact: {
            const Rational b = beta.exact_value();
            Rational x = t;
            for (std::size_t i = 0; i < n; ++i) {
                const Rational v = b * x;
                if (v >= 1) {
                    out.push_back(1);
                    x = v - 1;
                } else {
                    out.push_back(0);
                    x = v;
                }
            }
            return Word(std::move(out));
        }
        case BetaParam::Kind::word_defined: {
            // exact state in Q[beta] reduced modulo the Parry polynomial
            detail::ParryElem x(beta.defining_word(), t);
            for (std::size_t i = 0; i < n; ++i) {
                detail::ParryElem v = x;
                v.mul_x();
                detail::ParryElem test = v;
                test.sub_const(1);
                const int s = detail::parry_sign(test, beta);
                if (s >= 0) {
                    out.push_back(1);
                    v.sub_const(1);
                    x = v;
                } else {
                    out.push_back(0);
                    x = v;
                }
            }
            return Word(std::move(out));
        }
        case BetaParam::Kind::approximate: {
            const Interval b = beta.bracket();
            Interval x = Interval::point(t);
            for (std::size_t i = 0; i < n; ++i) {
                const Interval v = detail::IntervalArith::mul(b, x);
                if (v.lo >= 1) {
                    out.push_back(1);
                    x = detail::IntervalArith::sub(v, 1);
                } else if (v.hi < 1) {
                    out.push_back(0);
                    x = v;
                } else {
                    throw PrecisionExhausted("greedy digit " + std::to_string(i + 1) +
                                             " undecidable at the given radius");
                }
            }
            return Word(std::move(out));
        }
    }
    throw std::logic_error("unreachable");
}

inline Rational parse_rational(const std::string& text) {
    const auto slash = text.find('/');
    if (slash == std::string::npos) throw std::invalid_argument("range: expected p/q");
    Rational r(text);
    r.canonicalize();
    return r;
}

/// Decimal literal to exact rational plus its ulp (10^-digits).
inline std::pair<Rational, Rational> parse_decimal(const std::string& text) {
    const auto dot = text.find('.');
    std::string digits = text;
    std::size_t frac = 0;
    if (dot != std::string::npos) {
        frac = text.size() - dot - 1;
        digits = text.substr(0, dot) + text.substr(dot + 1);
    }
    if (digits.empty() || digits.find_first_not_of("0123456789") != std::string::npos)
        throw std::invalid_argument("range: bad decimal literal");
    mpz_class num(digits, 10), den;
    mpz_ui_pow_ui(den.get_mpz_t(), 10, static_cast<unsigned long>(frac));
    Rational v(num, den);
    v.canonicalize();
    return {v, Rational(1, den)};
}

inline BetaParam BetaParam::parse(const std::string& spec, Precision prec) {
    if (spec.rfind("word:", 0) == 0) return BetaParam::word(Word::parse(spec.substr(5)), prec);
    if (spec.find('/') != std::string::npos) return BetaParam::exact(parse_rational(spec));
    if (spec.find('.') != std::string::npos) {
        auto [v, ulp] = parse_decimal(spec);
        BetaParam b = BetaParam::approximate(v - ulp / 2, v + ulp / 2, prec);
        return b;
    }
    // plain integer
    if (spec.empty() || spec.find_first_not_of("0123456789") != std::string::npos)
        throw std::invalid_argument("range: unrecognized beta spec");
    return BetaParam::exact(Rational(spec));
}

} // namespace betahole
