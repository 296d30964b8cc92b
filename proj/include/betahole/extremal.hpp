#pragma once

#include "bullet.hpp"
#include "farey.hpp"
#include "word.hpp"

namespace betahole {

/// max L_{m,k}: the Farey word w_{k/m} when gcd(m,k)=1, and
/// w_{k/m} . 01^{d-1} when gcd(m,k)=d>1 (reduced-fraction Farey word).
inline Word max_lyndon(int m, int k) {
    if (m < 2 || k < 1 || k >= m) throw std::invalid_argument("range: need 2 <= m, 1 <= k < m");
    const int d = std::gcd(m, k);
    Word farey = farey_word(k, m);
    if (d == 1) return farey;
    return bullet(farey, Word::zeros(1) + Word::ones(static_cast<std::size_t>(d - 1)));
}

/// min P_{m,k}: L(w_{k/m}) when gcd(m,k)=1, and w_{k/m} . 10^{d-1} otherwise.
inline Word min_perron(int m, int k) {
    if (m < 2 || k < 1 || k >= m) throw std::invalid_argument("range: need 2 <= m, 1 <= k < m");
    const int d = std::gcd(m, k);
    Word farey = farey_word(k, m);
    if (d == 1) return cyclic_max(farey);
    return bullet(farey, Word::ones(1) + Word::zeros(static_cast<std::size_t>(d - 1)));
}

inline constexpr int kDefaultExtremalOracleBound = 18;

/// Exhaustive maximum over all Lyndon words of length m with k ones.
inline Word brute_max_lyndon(int m, int k, int bound = kDefaultExtremalOracleBound) {
    if (m < 2 || k < 1 || k >= m) throw std::invalid_argument("range: need 2 <= m, 1 <= k < m");
    if (m > bound) throw std::invalid_argument("oracle-bound");
    Word best;
    for (const Word& w : lyndon_words(static_cast<std::size_t>(m)))
        if (static_cast<int>(w.ones_count()) == k) best = w; // generation is lex-increasing
    if (best.empty()) throw std::logic_error("no Lyndon word with the requested weight");
    return best;
}

/// Exhaustive minimum of the cyclic maxima over the same set.
inline Word brute_min_perron(int m, int k, int bound = kDefaultExtremalOracleBound) {
    if (m < 2 || k < 1 || k >= m) throw std::invalid_argument("range: need 2 <= m, 1 <= k < m");
    if (m > bound) throw std::invalid_argument("oracle-bound");
    Word best;
    for (const Word& w : lyndon_words(static_cast<std::size_t>(m))) {
        if (static_cast<int>(w.ones_count()) != k) continue;
        Word p = cyclic_max(w);
        if (best.empty() || lex_less(p, best)) best = p;
    }
    if (best.empty()) throw std::logic_error("no Perron word with the requested weight");
    return best;
}

namespace detail {

// Splits w into blocks, one per 1-digit: the run of 0s before the 1 plus the
// 1 itself. Fails if w has trailing 0s after the last 1 or no 1s at all.
inline std::vector<int> zero_one_blocks(const Word& w) {
    RunProfile p = run_length_profile(w);
    if (p.trailing_zeros != 0 || p.runs_before_ones.empty())
        throw std::invalid_argument("block-parse");
    return p.runs_before_ones;
}

// Blocks of the form 1 0^i: the run of 0s after each 1. Fails on leading 0s.
inline std::vector<int> one_zero_blocks(const Word& w) {
    if (w.empty() || w[0] != 1) throw std::invalid_argument("block-parse");
    std::vector<int> runs;
    int run = 0;
    for (std::size_t i = 1; i < w.size(); ++i) {
        if (w[i] == 1) {
            runs.push_back(run);
            run = 0;
        } else {
            ++run;
        }
    }
    runs.push_back(run);
    return runs;
}

} // namespace detail

/// Phi_q: block recoding 0^{q+1}1 -> 0, 0^q 1 -> 1; defined only on words
/// that parse into those blocks.
inline Word phi_substitute(int q, const Word& w) {
    if (q < 0) throw std::invalid_argument("range: q must be >= 0");
    std::vector<std::uint8_t> out;
    for (int run : detail::zero_one_blocks(w)) {
        if (run == q + 1) out.push_back(0);
        else if (run == q) out.push_back(1);
        else throw std::invalid_argument("block-parse");
    }
    return Word(std::move(out));
}

/// Phi_q^{-1}: 0 -> 0^{q+1}1, 1 -> 0^q 1; coincides with U_{0^q 1}.
inline Word phi_inverse(int q, const Word& w) {
    if (q < 0) throw std::invalid_argument("range: q must be >= 0");
    Word out;
    for (std::size_t i = 0; i < w.size(); ++i) {
        const int run = w[i] == 0 ? q + 1 : q;
        out = out + Word::zeros(static_cast<std::size_t>(run)) + Word::ones(1);
    }
    return out;
}

/// Psi_q: 1 0^{q+1} -> 0, 1 0^q -> 1.
inline Word psi_substitute(int q, const Word& w) {
    if (q < 0) throw std::invalid_argument("range: q must be >= 0");
    std::vector<std::uint8_t> out;
    for (int run : detail::one_zero_blocks(w)) {
        if (run == q + 1) out.push_back(0);
        else if (run == q) out.push_back(1);
        else throw std::invalid_argument("block-parse");
    }
    return Word(std::move(out));
}

/// Psi_q^{-1}: 0 -> 1 0^{q+1}, 1 -> 1 0^q.
inline Word psi_inverse(int q, const Word& w) {
    if (q < 0) throw std::invalid_argument("range: q must be >= 0");
    Word out;
    for (std::size_t i = 0; i < w.size(); ++i) {
        const int run = w[i] == 0 ? q + 1 : q;
        out = out + Word::ones(1) + Word::zeros(static_cast<std::size_t>(run));
    }
    return out;
}

// Proof machinery for the 2-balanced analysis; kept out of the main API.
namespace testsupport {

/// Phi'_q over the ternary alphabet: 0^{q+1}1 -> '0', 0^q 1 -> '1',
/// 0^{q-1}1 -> '2'.
inline std::string phi2_substitute(int q, const Word& w) {
    if (q < 1) throw std::invalid_argument("range: q must be >= 1");
    std::string out;
    for (int run : detail::zero_one_blocks(w)) {
        if (run == q + 1) out.push_back('0');
        else if (run == q) out.push_back('1');
        else if (run == q - 1) out.push_back('2');
        else throw std::invalid_argument("block-parse");
    }
    return out;
}

/// Psi'_q: 1 0^{q+1} -> '0', 1 0^q -> '1', 1 0^{q-1} -> '2'.
inline std::string psi2_substitute(int q, const Word& w) {
    if (q < 1) throw std::invalid_argument("range: q must be >= 1");
    std::string out;
    for (int run : detail::one_zero_blocks(w)) {
        if (run == q + 1) out.push_back('0');
        else if (run == q) out.push_back('1');
        else if (run == q - 1) out.push_back('2');
        else throw std::invalid_argument("block-parse");
    }
    return out;
}

} // namespace testsupport

} // namespace betahole
