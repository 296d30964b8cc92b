#pragma once

#include <span>

#include "sequence.hpp"
#include "word.hpp"

namespace betahole {

namespace detail {

struct BulletBlocks {
    Word s_minus;   // s-
    Word big;       // L(s)
    Word big_plus;  // L(s)+
    Word s;

    explicit BulletBlocks(const Word& s_) : s_minus(), big(), big_plus(), s(s_) {
        if (s_.size() < 2 || !is_lyndon(s_))
            throw std::invalid_argument("operand-domain: left operand must be a Lyndon word of length >= 2");
        s_minus = bump_down(s_);
        big = cyclic_max(s_);
        big_plus = bump_up(big);
    }

    // block for the digit pair (prev, cur)
    const Word& pair(int prev, int cur) const {
        if (prev == 0) return cur == 0 ? big : big_plus;
        return cur == 0 ? s_minus : s;
    }
};

} // namespace detail

/// Substitution operator s . r: one-step Markov rule over the digits of r.
/// The first block is s- for r1=0 and L(s)+ for r1=1; each following block
/// is chosen by the pair (r_k, r_{k+1}): 00 -> L(s), 01 -> L(s)+, 10 -> s-,
/// 11 -> s. The result has length |s|*|r|.
inline Word bullet(const Word& s, const Word& r) {
    if (r.empty()) throw std::invalid_argument("operand-domain: right operand must be nonempty");
    detail::BulletBlocks b(s);
    Word out = r[0] == 0 ? b.s_minus : b.big_plus;
    for (std::size_t k = 1; k < r.size(); ++k) out = out + b.pair(r[k - 1], r[k]);
    return out;
}

/// s . r^inf as a periodic sequence: blocks are chosen by the cyclic digit
/// pairs of the period (the periodic orbit of the Markov chain), so the
/// result is purely periodic and coincides with (s . r)^inf whenever the
/// period is a Lyndon word.
inline PeriodicSequence bullet(const Word& s, const PeriodicSequence& r) {
    detail::BulletBlocks b(s);
    const Word& p = r.period();
    const std::size_t n = p.size();
    Word out;
    for (std::size_t k = 0; k < n; ++k) out = out + b.pair(p[(k + n - 1) % n], p[k]);
    return PeriodicSequence(out);
}

/// Left fold w1 . w2 . ... . wn; the operator is associative, so the
/// grouping is immaterial.
inline Word bullet_fold(std::span<const Word> ws) {
    if (ws.empty()) throw std::invalid_argument("operand-domain: empty fold");
    for (const Word& w : ws)
        if (w.size() < 2 || !is_lyndon(w))
            throw std::invalid_argument("operand-domain: fold operands must be Lyndon words of length >= 2");
    Word acc = ws[0];
    for (std::size_t i = 1; i < ws.size(); ++i) acc = bullet(acc, ws[i]);
    return acc;
}

inline Word bullet_fold(const std::vector<Word>& ws) {
    return bullet_fold(std::span<const Word>(ws.data(), ws.size()));
}

} // namespace betahole
