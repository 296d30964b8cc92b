#pragma once

#include <map>

#include "numerics.hpp"
#include "sequence.hpp"
#include "word.hpp"

namespace betahole {

inline constexpr int kDefaultOracleBound = 22;

/// All aperiodic binary Lyndon words of length m, lexicographically.
inline std::vector<Word> enumerate_lyndon(int m, int bound = kDefaultOracleBound) {
    if (m < 1) throw std::invalid_argument("range: need m >= 1");
    if (m > bound) throw std::invalid_argument("oracle-bound");
    return lyndon_words(static_cast<std::size_t>(m));
}

namespace detail {

// Digit generator for greedy/quasi-greedy expansions with exact state and
// cycle detection; once a state repeats the expansion is eventually periodic
// and comparisons become exact.
template <typename State, typename Step>
std::optional<EventuallyPeriodicSequence> expansion_eps(State x, Step step, std::size_t max_steps,
                                                        std::vector<std::uint8_t>& digits) {
    std::map<State, std::size_t> seen;
    for (std::size_t i = 0; i < max_steps; ++i) {
        auto [it, fresh] = seen.emplace(x, i);
        if (!fresh) {
            const std::size_t start = it->second;
            Word pre(std::vector<std::uint8_t>(digits.begin(),
                                               digits.begin() + static_cast<long>(start)));
            Word cycle(std::vector<std::uint8_t>(digits.begin() + static_cast<long>(start),
                                                 digits.end()));
            return EventuallyPeriodicSequence(std::move(pre), PeriodicSequence(cycle));
        }
        digits.push_back(static_cast<std::uint8_t>(step(x)));
    }
    return std::nullopt;
}

struct RationalExpansion {
    std::optional<EventuallyPeriodicSequence> eps;
    std::vector<std::uint8_t> digits;

    // greedy: d = [beta x >= 1]; quasi-greedy: d = [beta x > 1]
    RationalExpansion(const Rational& start, const Rational& beta, bool greedy,
                      std::size_t max_steps) {
        eps = expansion_eps(
            start,
            [&](Rational& x) {
                const Rational v = beta * x;
                const int d = greedy ? (v >= 1) : (v > 1);
                x = d ? Rational(v - 1) : v;
                return d;
            },
            max_steps, digits);
    }
};

struct ParryExpansion {
    std::optional<EventuallyPeriodicSequence> eps;
    std::vector<std::uint8_t> digits;

    ParryExpansion(const Rational& start, const BetaParam& beta, bool greedy,
                   std::size_t max_steps) {
        ParryElem x(beta.defining_word(), start);
        std::map<std::vector<Rational>, std::size_t> seen;
        for (std::size_t i = 0; i < max_steps; ++i) {
            auto [it, fresh] = seen.emplace(x.coeffs(), i);
            if (!fresh) {
                const std::size_t s = it->second;
                Word pre(std::vector<std::uint8_t>(digits.begin(), digits.begin() + static_cast<long>(s)));
                Word cycle(std::vector<std::uint8_t>(digits.begin() + static_cast<long>(s), digits.end()));
                eps = EventuallyPeriodicSequence(std::move(pre), PeriodicSequence(cycle));
                return;
            }
            x.mul_x();
            ParryElem test = x;
            test.sub_const(1);
            const int sign = parry_sign(test, beta);
            const int d = greedy ? (sign >= 0) : (sign > 0);
            if (d) x.sub_const(1);
            digits.push_back(static_cast<std::uint8_t>(d));
        }
    }
};

// <=> of an expansion (possibly only known to finite depth) against a
// periodic sequence. Exact when the expansion closed into a cycle; otherwise
// the first differing digit decides or the depth is declared insufficient.
template <typename Expansion>
std::strong_ordering cmp_expansion_periodic(const Expansion& e, const PeriodicSequence& p) {
    if (e.eps) return *e.eps <=> EventuallyPeriodicSequence(p);
    for (std::size_t i = 0; i < e.digits.size(); ++i) {
        const int a = e.digits[i], b = p.digit(i);
        if (a != b) return a <=> b;
    }
    throw PrecisionExhausted("expansion comparison undecided at depth " +
                             std::to_string(e.digits.size()));
}

} // namespace detail

/// Outcome of the exhaustive tau search: the maximizing witness and its
/// value, or the zero result when no length-m orbit survives any hole.
struct BruteCritical {
    Interval value;
    std::optional<Rational> exact;
    PeriodicSequence expansion;
    bool zero = false;
};

/// Ground-truth tau_m(beta): maximize (w^inf)_beta over all Lyndon words of
/// length m whose anchor L(w)^inf precedes delta(beta). The shifts of w^inf
/// sweep [w^inf, L(w)^inf], so w^inf survives the hole (0,t) exactly when
/// t <= (w^inf)_beta and the anchor test holds. Ties keep the
/// lexicographically largest witness (the greedy expansion of the value).
inline BruteCritical brute_tau(int m, const BetaParam& beta, int bound = kDefaultOracleBound) {
    if (m < 2) throw std::invalid_argument("range: need m >= 2");
    if (m > bound) throw std::invalid_argument("oracle-bound");
    std::optional<Word> best;
    for (const Word& w : lyndon_words(static_cast<std::size_t>(m))) {
        if (cmp_value_one(PeriodicSequence(cyclic_max(w)), beta) != Cmp::less) continue;
        if (!best) {
            best = w;
            continue;
        }
        Cmp c;
        if (beta.kind() == BetaParam::Kind::approximate) {
            const Interval vw = eval_periodic(PeriodicSequence(w), beta);
            const Interval vb = eval_periodic(PeriodicSequence(*best), beta);
            if (vw.lo > vb.hi) c = Cmp::greater;
            else if (vw.hi < vb.lo) c = Cmp::less;
            else throw AmbiguousComparison("candidate values overlap at the given radius");
        } else {
            c = detail::cmp_periodic_values(PeriodicSequence(w), PeriodicSequence(*best), beta);
        }
        if (c == Cmp::greater || (c == Cmp::equal && lex_less(*best, w))) best = w;
    }
    if (!best) return {Interval::point(0), Rational(0), PeriodicSequence(Word::zeros(1)), true};
    PeriodicSequence expansion(*best);
    Interval value = eval_periodic(expansion, beta);
    std::optional<Rational> exact;
    if (beta.kind() == BetaParam::Kind::exact) exact = value.lo;
    return {std::move(value), std::move(exact), std::move(expansion), false};
}

/// Symbolic survivor-set membership: b(t,beta) <= sigma^n(w^inf) < delta(beta)
/// for every shift. Needs an exact-decidable beta; comparisons are certified
/// up to depth_factor * |w| digits and fail with "precision" beyond it.
inline bool survives(const PeriodicSequence& w, const Rational& t, const BetaParam& beta,
                     int depth_factor = 10) {
    if (t < 0 || t >= 1) throw std::invalid_argument("range: t must lie in [0,1)");
    const bool rational = beta.kind() == BetaParam::Kind::exact;
    if (!rational && beta.kind() != BetaParam::Kind::word_defined)
        throw std::invalid_argument("survives needs an exact-decidable beta");
    const std::size_t depth =
        std::max<std::size_t>(static_cast<std::size_t>(depth_factor) * w.period_length(), 64);

    // delta(beta), exactly periodic for word-defined bases
    std::optional<EventuallyPeriodicSequence> delta_eps;
    std::optional<detail::RationalExpansion> delta_gen;
    if (rational) {
        delta_gen.emplace(Rational(1), beta.exact_value(), /*greedy=*/false, depth);
    } else {
        delta_eps = EventuallyPeriodicSequence(PeriodicSequence(beta.defining_word()));
    }

    auto cmp_delta = [&](const PeriodicSequence& rot) -> std::strong_ordering {
        if (delta_eps) return EventuallyPeriodicSequence(rot) <=> *delta_eps;
        // the generator compares delta against rot; flip to rot vs delta
        const auto c = detail::cmp_expansion_periodic(*delta_gen, rot);
        if (c == std::strong_ordering::less) return std::strong_ordering::greater;
        if (c == std::strong_ordering::greater) return std::strong_ordering::less;
        return std::strong_ordering::equal;
    };

    std::optional<detail::RationalExpansion> b_rat;
    std::optional<detail::ParryExpansion> b_parry;
    if (rational) b_rat.emplace(t, beta.exact_value(), /*greedy=*/true, depth);
    else b_parry.emplace(t, beta, /*greedy=*/true, depth);
    auto cmp_b = [&](const PeriodicSequence& rot) {
        return rational ? detail::cmp_expansion_periodic(*b_rat, rot)
                        : detail::cmp_expansion_periodic(*b_parry, rot);
    };

    for (std::size_t k = 0; k < w.period_length(); ++k) {
        const PeriodicSequence rot = w.shifted(k);
        if (cmp_delta(rot) >= 0) return false; // rot must be strictly below delta
        if (cmp_b(rot) > 0) return false;      // b(t) must not exceed rot
    }
    return true;
}

/// Verifies Gamma_s finiteness on periodic sequences: among all canonical
/// periodic sequences of period <= max_period, exactly the |s| rotations of
/// s^inf stay within [s^inf, L(s)^inf] under every shift.
inline bool gamma_set_check(const Word& s, int max_period) {
    if (!is_farey(s)) throw std::invalid_argument("not-farey");
    const PeriodicSequence low{s};
    const PeriodicSequence high{cyclic_max(s)};

    std::vector<std::string> expected;
    for (std::size_t k = 0; k < s.size(); ++k)
        expected.push_back(PeriodicSequence(rotation(s, k)).period().to_string());
    std::sort(expected.begin(), expected.end());

    std::vector<std::string> found;
    for (int len = 1; len <= max_period; ++len) {
        for (const Word& u : lyndon_words(static_cast<std::size_t>(len))) {
            // a necklace qualifies iff every rotation sequence sits in the band
            bool ok = true;
            for (std::size_t k = 0; k < u.size() && ok; ++k) {
                const PeriodicSequence x(rotation(u, k));
                ok = low <= x && x <= high;
            }
            if (!ok) continue;
            for (std::size_t k = 0; k < u.size(); ++k)
                found.push_back(PeriodicSequence(rotation(u, k)).period().to_string());
        }
    }
    std::sort(found.begin(), found.end());
    return found == expected;
}

} // namespace betahole
