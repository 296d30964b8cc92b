#include <catch2/catch_amalgamated.hpp>

#include <betahole/bullet.hpp>
#include <betahole/farey.hpp>

#include <random>

using namespace betahole;

namespace {

std::vector<Word> lyndon_range(std::size_t lo, std::size_t hi) {
    std::vector<Word> out;
    for (std::size_t n = lo; n <= hi; ++n)
        for (const Word& w : lyndon_words(n)) out.push_back(w);
    return out;
}

} // namespace

TEST_CASE("bullet follows the Markov block rule") {
    // s . 01101 = s- L(s)+ s s- L(s)+, instantiated at s = 001
    const Word s = Word::parse("001");
    const Word expect = Word::parse("000") + Word::parse("101") + Word::parse("001") +
                        Word::parse("000") + Word::parse("101");
    CHECK(bullet(s, Word::parse("01101")) == expect);

    CHECK(bullet(Word::parse("0001"), Word::parse("01")) == Word::parse("00001001"));
    CHECK(bullet(Word::parse("01"), Word::parse("0001")) == Word::parse("00101011"));

    CHECK_THROWS_AS(bullet(Word::parse("10"), Word::parse("01")), std::invalid_argument);
    CHECK_THROWS_AS(bullet(Word::parse("0"), Word::parse("01")), std::invalid_argument);
    CHECK_THROWS_AS(bullet(Word::parse("01"), Word()), std::invalid_argument);
}

TEST_CASE("bullet on periodic sequences uses the cyclic pair rule") {
    const Word s01 = Word::parse("01");
    CHECK(bullet(s01, PeriodicSequence::parse("1")) == PeriodicSequence::parse("01"));
    CHECK(bullet(s01, PeriodicSequence::parse("01")) == PeriodicSequence::parse("0011"));
    CHECK(bullet(Word::parse("0001"), PeriodicSequence::parse("01")) ==
          PeriodicSequence::parse("00001001"));
    // coincides with (s . r)^inf for Lyndon periods
    for (const Word& r : lyndon_range(2, 5))
        CHECK(bullet(s01, PeriodicSequence(r)) == PeriodicSequence(bullet(s01, r)));
}

TEST_CASE("bullet_fold is a left fold and order matters") {
    const Word s01 = Word::parse("01");
    const Word fold3 = bullet_fold(std::vector<Word>{s01, s01, s01});
    CHECK(fold3 == bullet(bullet(s01, s01), s01));
    CHECK(fold3 == bullet(s01, bullet(s01, s01)));
    CHECK(fold3 == Word::parse("00101101"));

    CHECK(bullet_fold(std::vector<Word>{s01, Word::parse("0001")}) == Word::parse("00101011"));
    CHECK(bullet_fold(std::vector<Word>{Word::parse("0001"), s01}) == Word::parse("00001001"));
    CHECK_THROWS_AS(bullet_fold(std::vector<Word>{}), std::invalid_argument);
}

TEST_CASE("length law |s.r| = |s||r|") {
    std::mt19937_64 rng(11);
    const auto lyndons = lyndon_range(2, 6);
    for (int it = 0; it < 1000; ++it) {
        const Word& s = lyndons[rng() % lyndons.size()];
        const std::size_t n = 1 + rng() % 8;
        std::vector<std::uint8_t> d(n);
        for (auto& x : d) x = rng() & 1;
        const Word r(d);
        CHECK(bullet(s, r).size() == s.size() * r.size());
    }
}

TEST_CASE("closure: bullet of Lyndon words is Lyndon, |s| <= 6, |r| <= 5") {
    for (const Word& s : lyndon_range(2, 6))
        for (const Word& r : lyndon_range(2, 5)) {
            CAPTURE(s.to_string(), r.to_string());
            CHECK(is_lyndon(bullet(s, r)));
        }
}

TEST_CASE("max-commutation L(s.r) = s.L(r)") {
    for (const Word& s : lyndon_range(2, 5))
        for (const Word& r : lyndon_range(2, 5)) {
            CAPTURE(s.to_string(), r.to_string());
            CHECK(cyclic_max(bullet(s, r)) == bullet(s, cyclic_max(r)));
        }
}

TEST_CASE("monotonicity: c < d iff s.c < s.d") {
    std::mt19937_64 rng(13);
    const auto lyndons = lyndon_range(2, 6);
    int strict = 0;
    for (int it = 0; it < 1500; ++it) {
        const Word& s = lyndons[rng() % lyndons.size()];
        const std::size_t n = 1 + rng() % 7;
        std::vector<std::uint8_t> c(n), d(n);
        for (auto& x : c) x = rng() & 1;
        for (auto& x : d) x = rng() & 1;
        const Word wc(c), wd(d);
        const LexCmp in = lex_cmp(wc, wd);
        const LexCmp out = lex_cmp(bullet(s, wc), bullet(s, wd));
        CHECK(in == out);
        strict += in != LexCmp::equal;
    }
    CHECK(strict > 1000);
}

TEST_CASE("associativity on Lyndon triples") {
    const auto small = lyndon_range(2, 4);
    for (const Word& a : small)
        for (const Word& b : small)
            for (const Word& c : small) {
                CAPTURE(a.to_string(), b.to_string(), c.to_string());
                CHECK(bullet(bullet(a, b), c) == bullet(a, bullet(b, c)));
            }
}

TEST_CASE("U-substitutions commute with bullet: U_d(s.r) = U_d(s).r") {
    for (const Word& s : lyndon_range(2, 5))
        for (const Word& r : lyndon_range(2, 4)) {
            CAPTURE(s.to_string(), r.to_string());
            CHECK(substitute_U(Word::parse("0"), bullet(s, r)) ==
                  bullet(substitute_U(Word::parse("0"), s), r));
            CHECK(substitute_U(Word::parse("1"), bullet(s, r)) ==
                  bullet(substitute_U(Word::parse("1"), s), r));
        }
}
