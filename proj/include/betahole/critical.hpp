#pragma once

#include <cassert>
#include <climits>

#include "chains.hpp"
#include "numerics.hpp"

namespace betahole {

/// Where beta falls in the m-partition of (1,2]. The chain is absent below
/// the first endpoint; the last interval (beta_{m,m-1}, 2] carries the chain
/// (m, m-1).
struct ClassifyResult {
    enum class Region { below_first, interior, above_last };
    Region region;
    std::optional<Chain> chain;

    bool operator==(const ClassifyResult&) const = default;
};

/// Greedy descent of the butterfly tree: at each level pick the largest k
/// whose prefix anchor L(w_{k1/m1} . ... . w_{k/mi})^inf has value < 1 at
/// beta. When a deeper level has no admissible pick, beta lies in the gap
/// below the chain (k1..ki,1) and the classifying chain is its predecessor
/// (k1..k_{i-1}, k_i - 1), extended by gcd-1 when the bumped gcd exceeds 1.
inline ClassifyResult classify_beta(int m, const BetaParam& beta) {
    if (m < 2) throw std::invalid_argument("range: need m >= 2");
    std::vector<int> ks;
    std::vector<int> moduli{m}; // modulus at each level before the pick
    Word prefix;
    while (true) {
        const int modulus = moduli.back();
        int found = -1;
        Word found_word;
        for (int k = modulus - 1; k >= 1; --k) {
            Word cand = ks.empty() ? farey_word(k, modulus) : bullet(prefix, farey_word(k, modulus));
            if (cmp_value_one(PeriodicSequence(cyclic_max(cand)), beta) == Cmp::less) {
                found = k;
                found_word = std::move(cand);
                break;
            }
        }
        if (found < 0) {
            if (ks.empty()) return {ClassifyResult::Region::below_first, std::nullopt};
            // a chosen k of 1 always closes the ladder, so the last pick is >= 2
            assert(ks.back() >= 2);
            const int parent_modulus = moduli[moduli.size() - 2];
            ks.back() -= 1;
            const int g = std::gcd(parent_modulus, ks.back());
            if (g > 1) ks.push_back(g - 1);
            return {ClassifyResult::Region::interior, Chain(m, ks)};
        }
        ks.push_back(found);
        prefix = std::move(found_word);
        const int g = std::gcd(modulus, found);
        if (g == 1) {
            const bool last = ks.size() == 1 && found == m - 1;
            return {last ? ClassifyResult::Region::above_last : ClassifyResult::Region::interior,
                    Chain(m, ks)};
        }
        moduli.push_back(g);
    }
}

/// tau_m(beta) together with the greedy expansion realizing it and the
/// classification that produced it.
struct CriticalValue {
    Interval value;
    std::optional<Rational> exact; // set when beta is an exact rational
    PeriodicSequence expansion;
    ClassifyResult classification;
};

inline CriticalValue tau(int m, const BetaParam& beta) {
    const ClassifyResult cls = classify_beta(m, beta);
    if (cls.region == ClassifyResult::Region::below_first) {
        return {Interval::point(0), Rational(0), PeriodicSequence(Word::zeros(1)), cls};
    }
    PeriodicSequence expansion(chain_word(*cls.chain));
    Interval value = eval_periodic(expansion, beta);
    std::optional<Rational> exact;
    if (beta.kind() == BetaParam::Kind::exact) exact = value.lo;
    return {std::move(value), std::move(exact), std::move(expansion), cls};
}

/// One row of the m-partition table: the chain, its left endpoint (a Perron
/// base given by the delta-anchor), the word whose periodic value is tau on
/// the interval, and the interval's type.
struct PartitionRow {
    Chain chain;
    Word tau_word;
    Word anchor;
    BetaParam left_endpoint;
    IntervalType type;
};

inline std::vector<PartitionRow> partition_table(int m, const Rational& tol) {
    std::vector<PartitionRow> rows;
    for (const Chain& c : enumerate_chains(m)) {
        Word w = chain_word(c);
        Word anchor = cyclic_max(w);
        BetaParam left = beta_from_perron_word(anchor, tol);
        rows.push_back({c, std::move(w), std::move(anchor), std::move(left),
                        chain_interval_type(c)});
    }
    return rows;
}

/// Prop-level comparison of tau values through the periodic rational
/// vectors (k1/m1, ..., kj/mj)^inf; decided within lcm of the lengths.
/// NOTE: equal vectors for different chains do not imply equal tau values
/// (the m=2^n chains of the Komornik-Loreti base all have vector (1/2)^inf
/// yet distinct values); this returns the vector comparison verbatim.
inline std::strong_ordering tau_compare(const Chain& cm, const Chain& cn) {
    const std::vector<Rational> a = chain_rationals(cm);
    const std::vector<Rational> b = chain_rationals(cn);
    const std::size_t n = std::lcm(a.size(), b.size());
    for (std::size_t i = 0; i < n; ++i) {
        const Rational& x = a[i % a.size()];
        const Rational& y = b[i % b.size()];
        if (x != y) return x < y ? std::strong_ordering::less : std::strong_ordering::greater;
    }
    return std::strong_ordering::equal;
}

/// Symbolic critical value for the subshift: classifies b against the
/// anchors b_{m,chain} = L(chain word)^inf, intervals left-open right-closed.
inline PeriodicSequence theta(int m, const EventuallyPeriodicSequence& b) {
    if (m < 2) throw std::invalid_argument("range: need m >= 2");
    if (b.digit(0) != 1) throw std::invalid_argument("trivial-subshift: b must begin with 1");
    const std::vector<Chain> chains = enumerate_chains(m);
    for (std::size_t i = chains.size(); i-- > 0;) {
        const EventuallyPeriodicSequence anchor{chain_anchor(chains[i])};
        if (anchor < b) return PeriodicSequence(chain_word(chains[i]));
    }
    return PeriodicSequence(Word::zeros(1));
}

/// Conjugated variant for sequences below the hole: theta~(a) = conj(theta(conj(a))).
inline PeriodicSequence theta_tilde(int m, const EventuallyPeriodicSequence& a) {
    if (a.digit(0) != 0) throw std::invalid_argument("trivial-subshift: a must begin with 0");
    return conjugate(theta(m, conjugate(a)));
}

/// The partition interval selected by a finite rational vector (r1, ..., rn):
/// the chain (Q1, P1, ..., Pn) with Q_i = prod q_k (k >= i) and
/// P_i = p_i prod q_k (k > i), plus a certified bracket of the interval.
struct RationalChainBracket {
    Chain chain;
    Interval bracket;
};

inline RationalChainBracket beta_from_rational_chain(const std::vector<Rational>& rs,
                                                     const Rational& tol) {
    if (rs.empty()) throw std::invalid_argument("range: need at least one rational");
    long long q_prod = 1;
    std::vector<long> ps, qs;
    for (const Rational& r : rs) {
        if (r <= 0 || r >= 1) throw std::invalid_argument("range: rationals must lie in (0,1)");
        ps.push_back(r.get_num().get_si());
        qs.push_back(r.get_den().get_si());
        q_prod *= qs.back();
        if (q_prod > INT_MAX) throw std::invalid_argument("range: chain modulus too large");
    }
    const int m = static_cast<int>(q_prod);
    std::vector<int> ks(rs.size());
    long long suffix = 1;
    for (std::size_t i = rs.size(); i-- > 0;) {
        ks[i] = static_cast<int>(ps[i] * suffix);
        suffix *= qs[i];
    }
    Chain chain(m, ks);
    const BetaParam left = beta_from_perron_word(cyclic_max(chain_word(chain)), tol);
    Rational hi = 2;
    if (const auto next = chain_successor(chain)) {
        const BetaParam right = beta_from_perron_word(cyclic_max(chain_word(*next)), tol);
        hi = right.bracket().hi;
    }
    return {std::move(chain), Interval(left.bracket().lo, hi)};
}

/// Nested all-1/2 chains: brackets of I_{2^n,2^{n-1},...,1} until the width
/// drops below tol. Converges to the Komornik-Loreti constant.
inline Interval komornik_loreti(const Rational& tol) {
    if (tol <= 0) throw std::invalid_argument("range: tol must be positive");
    std::vector<Rational> rs;
    const Rational half(1, 2);
    for (int n = 1; n <= 24; ++n) {
        rs.push_back(half);
        const Interval bracket = beta_from_rational_chain(rs, tol / 4).bracket;
        if (bracket.width() <= tol) return bracket;
    }
    throw PrecisionExhausted("komornik_loreti bracket did not reach the requested width");
}

inline BetaParam komornik_loreti_beta(const Rational& tol, Precision prec = default_precision()) {
    const Interval b = komornik_loreti(tol);
    return BetaParam::approximate(b.lo, b.hi, prec);
}

} // namespace betahole
