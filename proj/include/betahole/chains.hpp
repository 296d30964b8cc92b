#pragma once

#include <compare>
#include <cstdint>
#include <optional>
#include <sstream>

#include "bullet.hpp"
#include "farey.hpp"
#include "sequence.hpp"

namespace betahole {

/// Admissible m-chain (m, k1, ..., kj): each k_i is below the running gcd
/// m_i = gcd(m, k1, ..., k_{i-1}) and the final gcd is 1.
struct Chain {
    int m = 0;
    std::vector<int> ks;

    Chain() = default;
    Chain(int m_, std::vector<int> ks_) : m(m_), ks(std::move(ks_)) { validate(); }

    /// The gcd ladder m1 = m, ..., m_{j+1} = 1.
    std::vector<int> moduli() const {
        std::vector<int> ms{m};
        for (int k : ks) ms.push_back(std::gcd(ms.back(), k));
        return ms;
    }

    std::string to_string() const {
        std::ostringstream os;
        os << '(' << m;
        for (int k : ks) os << ',' << k;
        os << ')';
        return os.str();
    }

    bool operator==(const Chain& o) const { return m == o.m && ks == o.ks; }

private:
    void validate() const {
        if (m < 2 || ks.empty()) throw std::invalid_argument("range: chain needs m >= 2 and entries");
        int g = m;
        for (int k : ks) {
            if (k < 1 || k >= g) throw std::invalid_argument("range: chain entry out of range");
            g = std::gcd(g, k);
        }
        if (g != 1) throw std::invalid_argument("range: chain gcd ladder must reach 1");
    }
};

/// Lexicographic vector order on chains of the same modulus.
inline std::strong_ordering chain_cmp(const Chain& a, const Chain& b) {
    if (a.m != b.m) throw std::invalid_argument("modulus: chains must share m");
    const std::size_t n = std::min(a.ks.size(), b.ks.size());
    for (std::size_t i = 0; i < n; ++i)
        if (a.ks[i] != b.ks[i]) return a.ks[i] <=> b.ks[i];
    return a.ks.size() <=> b.ks.size();
}

/// psi(1) = 1, psi(n) = sum_{k=1}^{n-1} psi(gcd(n,k)); counts the leaves of
/// the butterfly tree and the admissible m-chains.
inline std::int64_t psi(int m) {
    if (m < 1) throw std::invalid_argument("range: psi needs m >= 1");
    std::vector<std::int64_t> table(static_cast<std::size_t>(m) + 1, 0);
    table[1] = 1;
    for (int n = 2; n <= m; ++n) {
        std::int64_t s = 0;
        for (int k = 1; k < n; ++k) s += table[static_cast<std::size_t>(std::gcd(n, k))];
        table[static_cast<std::size_t>(n)] = s;
    }
    return table[static_cast<std::size_t>(m)];
}

/// All admissible m-chains in increasing lexicographic order (depth-first
/// over the butterfly tree).
inline std::vector<Chain> enumerate_chains(int m) {
    if (m < 2) throw std::invalid_argument("range: need m >= 2");
    std::vector<Chain> out;
    std::vector<int> ks;
    auto descend = [&](auto&& self, int modulus) -> void {
        for (int k = 1; k < modulus; ++k) {
            ks.push_back(k);
            const int g = std::gcd(modulus, k);
            if (g == 1) out.emplace_back(m, ks);
            else self(self, g);
            ks.pop_back();
        }
    };
    descend(descend, m);
    return out;
}

/// w_{k1/m1} . w_{k2/m2} . ... . w_{kj/mj} (reduced-fraction Farey words);
/// a Lyndon word of length m.
inline Word chain_word(const Chain& c) {
    const std::vector<int> ms = c.moduli();
    std::vector<Word> parts;
    parts.reserve(c.ks.size());
    for (std::size_t i = 0; i < c.ks.size(); ++i) parts.push_back(farey_word(c.ks[i], ms[i]));
    return bullet_fold(parts);
}

/// The delta-anchor of the chain's left endpoint: L(chain_word)^inf.
inline PeriodicSequence chain_anchor(const Chain& c) {
    return PeriodicSequence(cyclic_max(chain_word(c)));
}

/// Partition interval type from the successor's shape. A/B bump the last
/// entry (coprime / gcd>1), C/D pop a maximal entry and bump the parent.
/// The final chain (m, m-1) has the unbounded-right interval.
enum class IntervalType { A, B, C, D, First, Last };

inline const char* to_string(IntervalType t) {
    switch (t) {
        case IntervalType::A: return "A";
        case IntervalType::B: return "B";
        case IntervalType::C: return "C";
        case IntervalType::D: return "D";
        case IntervalType::First: return "first";
        case IntervalType::Last: return "last";
    }
    return "?";
}

namespace detail {

struct SuccessorResult {
    std::optional<Chain> next;
    IntervalType type;
};

inline SuccessorResult successor_and_type(const Chain& c) {
    const std::vector<int> ms = c.moduli();
    const std::size_t j = c.ks.size();
    std::vector<int> ks = c.ks;
    if (ks[j - 1] < ms[j - 1] - 1) {
        // bump the last entry
        ks[j - 1] += 1;
        const int g = std::gcd(ms[j - 1], ks[j - 1]);
        if (g == 1) return {Chain(c.m, ks), IntervalType::A};
        ks.push_back(1); // gcd(g,1)=1 completes the chain
        return {Chain(c.m, ks), IntervalType::B};
    }
    // last entry is maximal: pop and bump the parent, which is never itself
    // maximal (k_{j-1} = m_{j-1}-1 would force m_j = 1)
    if (j == 1) return {std::nullopt, IntervalType::Last};
    ks.pop_back();
    ks.back() += 1;
    const int g = std::gcd(ms[j - 2], ks.back());
    if (g == 1) return {Chain(c.m, ks), IntervalType::C};
    ks.push_back(1);
    return {Chain(c.m, ks), IntervalType::D};
}

} // namespace detail

/// The next admissible m-chain in lexicographic order; nullopt for (m, m-1).
inline std::optional<Chain> chain_successor(const Chain& c) {
    return detail::successor_and_type(c).next;
}

inline IntervalType chain_interval_type(const Chain& c) {
    return detail::successor_and_type(c).type;
}

/// The rational vector (k1/m1, ..., kj/mj), reduced.
inline std::vector<Rational> chain_rationals(const Chain& c) {
    const std::vector<int> ms = c.moduli();
    std::vector<Rational> out;
    out.reserve(c.ks.size());
    for (std::size_t i = 0; i < c.ks.size(); ++i) out.push_back(make_rational(c.ks[i], ms[i]));
    return out;
}

} // namespace betahole
