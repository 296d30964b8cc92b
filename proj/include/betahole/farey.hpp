#pragma once

#include <gmpxx.h>

#include <optional>

#include "word.hpp"

namespace betahole {

using Rational = mpq_class;

inline Rational make_rational(long p, long q) {
    Rational r(p, q);
    r.canonicalize();
    return r;
}

/// Farey word for p/q in (0,1). A non-reduced fraction is reduced first
/// (w_{p/q} = w_{(p/d)/(q/d)}). Exact residue arithmetic mod q: digit k is 1
/// iff the rotation by p/q wraps past 0 on step k, i.e. kp mod q < (k-1)p mod q.
inline Word farey_word(long p, long q) {
    if (q <= 0 || p <= 0 || p >= q) throw std::invalid_argument("range: need 0 < p/q < 1");
    const long d = std::gcd(p, q);
    p /= d;
    q /= d;
    std::vector<std::uint8_t> w(static_cast<std::size_t>(q));
    long prev = 0;
    for (long k = 1; k <= q; ++k) {
        const long cur = (prev + p) % q;
        w[static_cast<std::size_t>(k - 1)] = static_cast<std::uint8_t>(cur < prev);
        prev = cur;
    }
    return Word(std::move(w));
}

inline Word farey_word(const Rational& r) {
    if (!r.get_num().fits_slong_p() || !r.get_den().fits_slong_p())
        throw std::invalid_argument("range: fraction too large");
    return farey_word(r.get_num().get_si(), r.get_den().get_si());
}

/// Inverse of farey_word on Farey words of length >= 2: returns |w|_1 / |w|.
/// Validated by reconstructing the word.
inline Rational farey_index(const Word& w) {
    if (w.size() < 2) throw std::invalid_argument("not-farey");
    const long p = static_cast<long>(w.ones_count());
    const long q = static_cast<long>(w.size());
    if (p == 0 || p == q || farey_word(p, q) != w) throw std::invalid_argument("not-farey");
    return make_rational(p, q);
}

inline bool is_farey(const Word& w) {
    if (w.size() < 2) return false;
    const long p = static_cast<long>(w.ones_count());
    const long q = static_cast<long>(w.size());
    return p > 0 && p < q && farey_word(p, q) == w;
}

namespace detail {

// U0: 0 -> 0, 1 -> 01
inline Word u0(const Word& w) {
    std::vector<std::uint8_t> d;
    d.reserve(w.size() + w.ones_count());
    for (std::size_t i = 0; i < w.size(); ++i) {
        if (w[i] == 0) {
            d.push_back(0);
        } else {
            d.push_back(0);
            d.push_back(1);
        }
    }
    return Word(std::move(d));
}

// U1: 0 -> 01, 1 -> 1
inline Word u1(const Word& w) {
    std::vector<std::uint8_t> d;
    d.reserve(2 * w.size());
    for (std::size_t i = 0; i < w.size(); ++i) {
        if (w[i] == 0) {
            d.push_back(0);
            d.push_back(1);
        } else {
            d.push_back(1);
        }
    }
    return Word(std::move(d));
}

inline bool contains_pair(const Word& w, int a, int b) {
    for (std::size_t i = 0; i + 1 < w.size(); ++i)
        if (w[i] == a && w[i + 1] == b) return true;
    return false;
}

} // namespace detail

/// U_{d1...dn} = U_{d1} o ... o U_{dn} applied to w (rightmost code digit
/// acts first). The empty code is the identity.
inline Word substitute_U(const Word& code, const Word& w) {
    Word out = w;
    for (std::size_t i = code.size(); i-- > 0;)
        out = code[i] == 0 ? detail::u0(out) : detail::u1(out);
    return out;
}

/// Greedy inversion of the U-substitutions: the code with
/// substitute_U(code, 01) == w, or nullopt if w is not a Farey word.
/// A U0-image has no "11" block, a U1-image no "00"; for a Farey word other
/// than 01 exactly one of the two applies at each peel step.
inline std::optional<Word> farey_code(const Word& w) {
    static const Word seed = Word::parse("01");
    Word cur = w;
    std::vector<std::uint8_t> code;
    while (cur != seed) {
        if (cur.size() < 2 || cur[0] != 0 || cur[cur.size() - 1] != 1) return std::nullopt;
        const bool has00 = detail::contains_pair(cur, 0, 0);
        const bool has11 = detail::contains_pair(cur, 1, 1);
        if (has00 && has11) return std::nullopt;
        std::vector<std::uint8_t> next;
        if (!has11) {
            // peel U0: blocks 01 -> 1, lone 0 -> 0
            for (std::size_t i = 0; i < cur.size();) {
                if (cur[i] != 0) return std::nullopt;
                if (i + 1 < cur.size() && cur[i + 1] == 1) {
                    next.push_back(1);
                    i += 2;
                } else {
                    next.push_back(0);
                    i += 1;
                }
            }
            code.push_back(0);
        } else {
            // peel U1: blocks 01 -> 0, lone 1 -> 1
            for (std::size_t i = 0; i < cur.size();) {
                if (cur[i] == 0) {
                    if (i + 1 >= cur.size() || cur[i + 1] != 1) return std::nullopt;
                    next.push_back(0);
                    i += 2;
                } else {
                    next.push_back(1);
                    i += 1;
                }
            }
            code.push_back(1);
        }
        cur = Word(std::move(next));
    }
    // peel order is outermost-first, which is already the composition order
    return Word(std::move(code));
}

} // namespace betahole
