#include <catch2/catch_amalgamated.hpp>

#include <betahole/farey.hpp>
#include <betahole/sequence.hpp>
#include <betahole/word.hpp>

#include <map>
#include <random>
#include <set>

using namespace betahole;

TEST_CASE("word ordering is prefix-aware") {
    CHECK(lex_cmp(Word::parse("01001"), Word::parse("01010")) == LexCmp::less);
    CHECK(lex_cmp(Word(), Word::parse("0110")) == LexCmp::equal_prefix);
    CHECK(lex_cmp(Word::parse("0111"), Word::parse("0111")) == LexCmp::equal);
    CHECK(lex_cmp(Word::parse("0110"), Word::parse("01")) == LexCmp::equal_prefix);
    CHECK(lex_cmp(Word::parse("10"), Word::parse("0110")) == LexCmp::greater);
}

TEST_CASE("periodic sequences compare through their infinite expansions") {
    CHECK(PeriodicSequence::parse("10") < PeriodicSequence::parse("1"));
    CHECK(PeriodicSequence::parse("01") == PeriodicSequence::parse("0101"));
    CHECK(PeriodicSequence::parse("10010000") < PeriodicSequence::parse("10100100"));
    CHECK(PeriodicSequence::parse("0101").period() == Word::parse("01"));
    CHECK_THROWS(PeriodicSequence(Word()));
}

TEST_CASE("eventually periodic sequences canonicalize and compare") {
    const auto x = EventuallyPeriodicSequence::parse("1:0");
    const auto y = EventuallyPeriodicSequence::parse(":10");
    CHECK((x <=> y) == std::strong_ordering::less);

    // absorption: 01(1001)^inf is the purely periodic (0110)^inf
    const auto a = EventuallyPeriodicSequence::parse("01:1001");
    const auto b = EventuallyPeriodicSequence::parse(":0110");
    CHECK(a == b);
    CHECK(a.preperiod().empty());

    CHECK(EventuallyPeriodicSequence::parse(":1110") ==
          EventuallyPeriodicSequence(PeriodicSequence(Word::ones(3) + Word::zeros(1))));
    // the absorbed presentation 01(10)^inf stays distinct from (0110)^inf
    CHECK(EventuallyPeriodicSequence::parse("01:10") != b);
}

TEST_CASE("cyclic extremes") {
    CHECK(cyclic_max(Word::parse("010011")) == Word::parse("110100"));
    CHECK(cyclic_min(Word::parse("010011")) == Word::parse("001101"));
    CHECK(cyclic_max(Word::parse("00100101")) == Word::parse("10100100"));
    CHECK(cyclic_max(Word::parse("0000")) == Word::parse("0000"));
    CHECK(cyclic_min(Word::parse("0000")) == Word::parse("0000"));
    CHECK_THROWS_AS(cyclic_max(Word()), std::invalid_argument);
}

TEST_CASE("cyclic extremes bound every rotation") {
    std::mt19937_64 rng(7);
    for (int it = 0; it < 1000; ++it) {
        const std::size_t n = 1 + rng() % 12;
        std::vector<std::uint8_t> d(n);
        for (auto& x : d) x = rng() & 1;
        const Word w(d);
        const Word hi = cyclic_max(w), lo = cyclic_min(w);
        bool hi_seen = false, lo_seen = false;
        for (std::size_t kk = 0; kk < n; ++kk) {
            const Word r = rotation(w, kk);
            CHECK(lex_cmp(r, hi) != LexCmp::greater);
            CHECK(lex_cmp(lo, r) != LexCmp::greater);
            hi_seen |= r == hi;
            lo_seen |= r == lo;
        }
        CHECK(hi_seen);
        CHECK(lo_seen);
    }
}

TEST_CASE("digit bumps and conjugation") {
    CHECK(bump_up(Word::parse("0110")) == Word::parse("0111"));
    CHECK(bump_down(Word::parse("01")) == Word::parse("00"));
    CHECK(conjugate(Word::parse("00100101")) == Word::parse("11011010"));
    CHECK_THROWS_AS(bump_up(Word::parse("01")), std::invalid_argument);
    CHECK_THROWS_AS(bump_down(Word::parse("10")), std::invalid_argument);
}

TEST_CASE("lyndon and perron predicates") {
    CHECK(is_lyndon(Word::parse("00100101")));
    CHECK_FALSE(is_lyndon(Word::parse("0101")));
    CHECK(is_lyndon(Word::parse("0")));
    CHECK(is_lyndon(Word::parse("1")));
    CHECK(is_perron(Word::parse("10100100")));
    CHECK_FALSE(is_perron(Word::parse("1010")));
    CHECK(is_perron(Word::parse("10")));
    CHECK_THROWS_AS(is_perron(Word::parse("1")), std::invalid_argument);
}

TEST_CASE("lyndon predicate agrees with minimal-rotation primitivity, |w| <= 16") {
    for (std::size_t n = 1; n <= 16; ++n) {
        for (std::uint32_t bits = 0; bits < (1u << n); ++bits) {
            std::vector<std::uint8_t> d(n);
            for (std::size_t i = 0; i < n; ++i) d[i] = (bits >> (n - 1 - i)) & 1;
            const Word w(d);
            const bool expect = is_primitive(w) && cyclic_min(w) == w;
            if (is_lyndon(w) != expect) {
                CAPTURE(w.to_string());
                REQUIRE(is_lyndon(w) == expect);
            }
        }
    }
}

TEST_CASE("conjugation maps Lyndon(m,k) onto Perron(m,m-k), m <= 12") {
    for (std::size_t m = 2; m <= 12; ++m) {
        std::map<std::size_t, std::set<std::string>> conj_by_k, perron_by_k;
        for (const Word& w : lyndon_words(m)) {
            conj_by_k[w.ones_count()].insert(conjugate(w).to_string());
            perron_by_k[m - w.ones_count()].insert(cyclic_max(w).to_string());
        }
        for (std::size_t k = 1; k < m; ++k) {
            CAPTURE(m, k);
            CHECK(conj_by_k[k] == perron_by_k[m - k]);
        }
    }
}

TEST_CASE("farey words from rotations") {
    CHECK(farey_word(3, 8) == Word::parse("00100101"));
    CHECK(farey_word(1, 2) == Word::parse("01"));
    CHECK(farey_word(1, 4) == Word::parse("0001"));
    CHECK(farey_word(3, 4) == Word::parse("0111"));
    CHECK(farey_word(7, 8) == Word::parse("01111111"));
    CHECK(farey_word(5, 8) == Word::parse("01011011"));
    CHECK(farey_word(1, 8) == Word::parse("00000001"));
    CHECK(farey_word(2, 8) == Word::parse("0001")); // reduced first
    CHECK_THROWS_AS(farey_word(3, 3), std::invalid_argument);
    CHECK_THROWS_AS(farey_word(0, 5), std::invalid_argument);
}

TEST_CASE("farey index inverts farey_word") {
    CHECK(farey_index(Word::parse("00101")) == make_rational(2, 5));
    CHECK(farey_index(Word::parse("01")) == make_rational(1, 2));
    CHECK(farey_index(Word::parse("00100101")) == make_rational(3, 8));
    CHECK_THROWS_AS(farey_index(Word::parse("0011")), std::invalid_argument);
    CHECK_THROWS_AS(farey_index(Word::parse("0")), std::invalid_argument);

    for (long q = 2; q <= 60; ++q)
        for (long p = 1; p < q; ++p) {
            if (std::gcd(p, q) != 1) continue;
            CHECK(farey_index(farey_word(p, q)) == make_rational(p, q));
        }
}

TEST_CASE("farey words are strictly increasing in the rational") {
    std::vector<Rational> fr;
    for (long q = 2; q <= 50; ++q)
        for (long p = 1; p < q; ++p)
            if (std::gcd(p, q) == 1) fr.push_back(make_rational(p, q));
    std::sort(fr.begin(), fr.end());
    for (std::size_t i = 0; i + 1 < fr.size(); ++i) {
        const Word a = farey_word(fr[i]);
        const Word b = farey_word(fr[i + 1]);
        CAPTURE(fr[i].get_str(), fr[i + 1].get_str());
        CHECK(lex_cmp(a, b) == LexCmp::less);
    }
}

TEST_CASE("farey words are Lyndon, palindromic after bump-down, reversed by L") {
    for (long q = 2; q <= 50; ++q)
        for (long p = 1; p < q; ++p) {
            if (std::gcd(p, q) != 1) continue;
            const Word w = farey_word(p, q);
            CAPTURE(p, q);
            CHECK(is_lyndon(w));
            CHECK(w.ones_count() == static_cast<std::size_t>(p));
            const Word pal = bump_down(w);
            CHECK(pal == reversed(pal));
            CHECK(cyclic_max(w) == reversed(w));
            CHECK(cyclic_min(w) == w);
        }
}

TEST_CASE("U substitutions") {
    const Word seed = Word::parse("01");
    CHECK(substitute_U(Word(), seed) == seed);
    CHECK(substitute_U(Word::parse("0"), seed) == Word::parse("001"));
    // U_{01}(01) = U0(U1(01)) = U0(011) = 00101 = w_{2/5}
    CHECK(substitute_U(Word::parse("01"), seed) == Word::parse("00101"));
    CHECK(substitute_U(Word::parse("01"), seed) == farey_word(2, 5));
}

TEST_CASE("every farey word has a U-code, q <= 50") {
    const Word seed = Word::parse("01");
    for (long q = 2; q <= 50; ++q)
        for (long p = 1; p < q; ++p) {
            if (std::gcd(p, q) != 1) continue;
            const Word w = farey_word(p, q);
            const auto code = farey_code(w);
            REQUIRE(code.has_value());
            CHECK(substitute_U(*code, seed) == w);
        }
    CHECK_FALSE(farey_code(Word::parse("0011")).has_value());
}

TEST_CASE("run length profile") {
    const RunProfile p = run_length_profile(Word::parse("00100101"));
    CHECK(p.runs_before_ones == std::vector<int>{2, 2, 1});
    CHECK(p.trailing_zeros == 0);

    const RunProfile q = run_length_profile(Word::parse("0010010"));
    CHECK(q.runs_before_ones == std::vector<int>{2, 2});
    CHECK(q.trailing_zeros == 1);

    const RunProfile ones = run_length_profile(Word::parse("1111"));
    CHECK(ones.runs_before_ones == std::vector<int>{0, 0, 0, 0});
    CHECK(ones.trailing_zeros == 0);

    const Word block = Word::zeros(3) + Word::ones(1);
    const RunProfile rep = run_length_profile(block.repeated(4));
    CHECK(rep.runs_before_ones == std::vector<int>(4, 3));
}

TEST_CASE("balanced predicate") {
    CHECK(is_balanced(farey_word(3, 8)));
    // 1-balanced but not balanced: |10101|_1 - |00100|_1 = 2
    CHECK_FALSE(is_balanced(Word::parse("0010010101")));
    CHECK_FALSE(is_balanced(Word::parse("00110101")));
}

TEST_CASE("lyndon generation is lexicographic and complete") {
    CHECK(lyndon_words(1).size() == 2);
    const auto l6 = lyndon_words(6);
    CHECK(l6.size() == 9);
    for (std::size_t i = 0; i + 1 < l6.size(); ++i) CHECK(lex_less(l6[i], l6[i + 1]));
    for (const Word& w : l6) CHECK(is_lyndon(w));
}
