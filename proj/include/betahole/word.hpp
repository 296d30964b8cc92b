#pragma once

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace betahole {

/// Finite binary word over {0,1}. Immutable value type; the empty word is valid.
class Word {
public:
    Word() = default;
    explicit Word(std::vector<std::uint8_t> digits) : digits_(std::move(digits)) {
        for (auto d : digits_)
            if (d > 1) throw std::invalid_argument("word digit must be 0 or 1");
    }

    static Word parse(std::string_view bits) {
        std::vector<std::uint8_t> d;
        d.reserve(bits.size());
        for (char c : bits) {
            if (c == '0') d.push_back(0);
            else if (c == '1') d.push_back(1);
            else throw std::invalid_argument("word digit must be 0 or 1");
        }
        return Word(std::move(d));
    }

    static Word zeros(std::size_t n) { return Word(std::vector<std::uint8_t>(n, 0)); }
    static Word ones(std::size_t n) { return Word(std::vector<std::uint8_t>(n, 1)); }

    std::size_t size() const { return digits_.size(); }
    bool empty() const { return digits_.empty(); }
    int operator[](std::size_t i) const { return digits_[i]; }
    int digit(std::size_t i) const { return digits_.at(i); }

    std::size_t count(int d) const {
        return static_cast<std::size_t>(std::count(digits_.begin(), digits_.end(),
                                                   static_cast<std::uint8_t>(d)));
    }
    std::size_t ones_count() const { return count(1); }

    Word operator+(const Word& o) const {
        std::vector<std::uint8_t> d = digits_;
        d.insert(d.end(), o.digits_.begin(), o.digits_.end());
        return Word(std::move(d));
    }

    Word repeated(std::size_t k) const {
        std::vector<std::uint8_t> d;
        d.reserve(size() * k);
        for (std::size_t i = 0; i < k; ++i) d.insert(d.end(), digits_.begin(), digits_.end());
        return Word(std::move(d));
    }

    Word subword(std::size_t pos, std::size_t len) const {
        if (pos + len > size()) throw std::out_of_range("subword");
        return Word(std::vector<std::uint8_t>(digits_.begin() + pos, digits_.begin() + pos + len));
    }

    std::string to_string() const {
        std::string s;
        s.reserve(size());
        for (auto d : digits_) s.push_back(d ? '1' : '0');
        return s;
    }

    bool operator==(const Word& o) const { return digits_ == o.digits_; }
    bool operator!=(const Word& o) const { return digits_ != o.digits_; }

    const std::vector<std::uint8_t>& digits() const { return digits_; }

private:
    std::vector<std::uint8_t> digits_;
};

/// Result of the word ordering: one word may be a proper prefix of the other,
/// which is distinct from all three strict outcomes.
enum class LexCmp { less, equal, greater, equal_prefix };

inline LexCmp lex_cmp(const Word& u, const Word& v) {
    const std::size_t n = std::min(u.size(), v.size());
    for (std::size_t i = 0; i < n; ++i) {
        if (u[i] < v[i]) return LexCmp::less;
        if (u[i] > v[i]) return LexCmp::greater;
    }
    return u.size() == v.size() ? LexCmp::equal : LexCmp::equal_prefix;
}

/// Strict ordering for equal-length words (the common case in rotation and
/// suffix comparisons).
inline bool lex_less(const Word& u, const Word& v) { return lex_cmp(u, v) == LexCmp::less; }

inline Word rotation(const Word& w, std::size_t k) {
    if (w.empty()) throw std::invalid_argument("empty word");
    const std::size_t n = w.size();
    std::vector<std::uint8_t> d(n);
    for (std::size_t i = 0; i < n; ++i) d[i] = static_cast<std::uint8_t>(w[(i + k) % n]);
    return Word(std::move(d));
}

inline Word cyclic_max(const Word& w) {
    if (w.empty()) throw std::invalid_argument("empty word");
    Word best = w;
    for (std::size_t k = 1; k < w.size(); ++k) {
        Word r = rotation(w, k);
        if (lex_less(best, r)) best = r;
    }
    return best;
}

inline Word cyclic_min(const Word& w) {
    if (w.empty()) throw std::invalid_argument("empty word");
    Word best = w;
    for (std::size_t k = 1; k < w.size(); ++k) {
        Word r = rotation(w, k);
        if (lex_less(r, best)) best = r;
    }
    return best;
}

/// w+ : flip a trailing 0 to 1.
inline Word bump_up(const Word& w) {
    if (w.empty() || w[w.size() - 1] != 0)
        throw std::invalid_argument("digit-bump-domain: bump_up needs last digit 0");
    return w.subword(0, w.size() - 1) + Word::ones(1);
}

/// w- : flip a trailing 1 to 0.
inline Word bump_down(const Word& w) {
    if (w.empty() || w[w.size() - 1] != 1)
        throw std::invalid_argument("digit-bump-domain: bump_down needs last digit 1");
    return w.subword(0, w.size() - 1) + Word::zeros(1);
}

inline Word conjugate(const Word& w) {
    std::vector<std::uint8_t> d(w.size());
    for (std::size_t i = 0; i < w.size(); ++i) d[i] = static_cast<std::uint8_t>(1 - w[i]);
    return Word(std::move(d));
}

inline Word reversed(const Word& w) {
    std::vector<std::uint8_t> d(w.digits().rbegin(), w.digits().rend());
    return Word(std::move(d));
}

/// True iff w is not a power of a strictly shorter word.
inline bool is_primitive(const Word& w) {
    const std::size_t n = w.size();
    if (n == 0) return false;
    for (std::size_t p = 1; p <= n / 2; ++p) {
        if (n % p != 0) continue;
        bool ok = true;
        for (std::size_t i = p; i < n && ok; ++i) ok = (w[i] == w[i - p]);
        if (ok) return false;
    }
    return true;
}

/// Smallest period of w, i.e. the shortest prefix whose repetition gives w.
inline Word primitive_root(const Word& w) {
    const std::size_t n = w.size();
    for (std::size_t p = 1; p <= n; ++p) {
        if (n % p != 0) continue;
        bool ok = true;
        for (std::size_t i = p; i < n && ok; ++i) ok = (w[i] == w[i - p]);
        if (ok) return w.subword(0, p);
    }
    throw std::invalid_argument("empty word");
}

/// Every proper suffix strictly exceeds the prefix of the same length.
/// Single digits count as (trivial) Lyndon words.
inline bool is_lyndon(const Word& w) {
    const std::size_t m = w.size();
    if (m == 0) throw std::invalid_argument("empty word");
    for (std::size_t i = 1; i < m; ++i) {
        // suffix w[i..m) vs prefix w[0..m-i)
        std::size_t j = 0;
        while (j < m - i && w[i + j] == w[j]) ++j;
        if (j == m - i || w[i + j] < w[j]) return false;
    }
    return true;
}

/// Every proper suffix is strictly below the prefix of the same length.
inline bool is_perron(const Word& w) {
    const std::size_t m = w.size();
    if (m < 2) throw std::invalid_argument("too-short: perron words need length >= 2");
    for (std::size_t i = 1; i < m; ++i) {
        std::size_t j = 0;
        while (j < m - i && w[i + j] == w[j]) ++j;
        if (j == m - i || w[i + j] > w[j]) return false;
    }
    return true;
}

/// Balanced in the Sturmian sense: any two equal-length subwords carry
/// numbers of ones differing by at most 1.
inline bool is_balanced(const Word& w) {
    const std::size_t n = w.size();
    for (std::size_t len = 1; len <= n; ++len) {
        std::size_t mn = len + 1, mx = 0;
        for (std::size_t i = 0; i + len <= n; ++i) {
            std::size_t c = 0;
            for (std::size_t j = 0; j < len; ++j) c += static_cast<std::size_t>(w[i + j]);
            mn = std::min(mn, c);
            mx = std::max(mx, c);
        }
        if (mx - mn > 1) return false;
    }
    return true;
}

/// Zero-run profile: for each 1, the number of 0s immediately before it,
/// plus the run of 0s after the final 1.
struct RunProfile {
    std::vector<int> runs_before_ones;
    int trailing_zeros = 0;
    bool operator==(const RunProfile&) const = default;
};

inline RunProfile run_length_profile(const Word& w) {
    RunProfile p;
    int run = 0;
    for (std::size_t i = 0; i < w.size(); ++i) {
        if (w[i] == 0) {
            ++run;
        } else {
            p.runs_before_ones.push_back(run);
            run = 0;
        }
    }
    p.trailing_zeros = run;
    return p;
}

/// Duval's generation of all binary Lyndon words of length <= n, in
/// lexicographic order.
template <typename F>
void for_each_lyndon_up_to(std::size_t n, F&& visit) {
    if (n == 0) return;
    std::vector<std::uint8_t> w{0};
    while (true) {
        visit(Word(std::vector<std::uint8_t>(w)));
        std::vector<std::uint8_t> t;
        t.reserve(n);
        for (std::size_t i = 0; i < n; ++i) t.push_back(w[i % w.size()]);
        while (!t.empty() && t.back() == 1) t.pop_back();
        if (t.empty()) return;
        t.back() = 1;
        w = std::move(t);
    }
}

/// All Lyndon words of length exactly m, lexicographically increasing.
inline std::vector<Word> lyndon_words(std::size_t m) {
    std::vector<Word> out;
    for_each_lyndon_up_to(m, [&](const Word& w) {
        if (w.size() == m) out.push_back(w);
    });
    return out;
}

} // namespace betahole
