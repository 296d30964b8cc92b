#include <catch2/catch_amalgamated.hpp>

#include <betahole/chains.hpp>

using namespace betahole;

TEST_CASE("psi recurrence") {
    CHECK(psi(1) == 1);
    CHECK(psi(2) == 1);
    CHECK(psi(8) == 9);
    for (int p : {3, 5, 7, 11, 13, 31, 97}) CHECK(psi(p) == p - 1);
    CHECK(psi(16) == 27); // psi(2^k) = 3^(k-1)
}

TEST_CASE("chain validation") {
    CHECK_NOTHROW(Chain(8, {4, 2, 1}));
    CHECK_THROWS_AS(Chain(8, {4, 2}), std::invalid_argument);  // gcd ladder ends at 2
    CHECK_THROWS_AS(Chain(8, {8}), std::invalid_argument);     // entry not below modulus
    CHECK_THROWS_AS(Chain(8, {4, 5}), std::invalid_argument);  // 5 >= gcd(8,4)
    CHECK_THROWS_AS(Chain(1, {1}), std::invalid_argument);
    CHECK(Chain(8, {4, 2, 1}).moduli() == std::vector<int>{8, 4, 2, 1});
}

TEST_CASE("enumeration matches the worked butterfly trees") {
    const std::vector<Chain> expect8 = {
        Chain(8, {1}),       Chain(8, {2, 1}),    Chain(8, {3}),
        Chain(8, {4, 1}),    Chain(8, {4, 2, 1}), Chain(8, {4, 3}),
        Chain(8, {5}),       Chain(8, {6, 1}),    Chain(8, {7}),
    };
    CHECK(enumerate_chains(8) == expect8);
    CHECK(enumerate_chains(2) == std::vector<Chain>{Chain(2, {1})});
    CHECK(enumerate_chains(5) ==
          std::vector<Chain>{Chain(5, {1}), Chain(5, {2}), Chain(5, {3}), Chain(5, {4})});
    CHECK_THROWS_AS(enumerate_chains(1), std::invalid_argument);
}

TEST_CASE("enumeration count equals psi up to m = 100") {
    for (int m = 2; m <= 100; ++m) {
        CAPTURE(m);
        CHECK(static_cast<std::int64_t>(enumerate_chains(m).size()) == psi(m));
    }
}

TEST_CASE("chain words") {
    CHECK(chain_word(Chain(8, {4, 2, 1})) == Word::parse("00101101"));
    CHECK(chain_word(Chain(8, {5})) == Word::parse("01011011"));
    CHECK(chain_word(Chain(9, {1})) == Word::zeros(8) + Word::ones(1));
    CHECK(chain_anchor(Chain(8, {4, 2, 1})) == PeriodicSequence::parse("11010010"));
}

TEST_CASE("chain comparison is the vector order") {
    CHECK(chain_cmp(Chain(8, {4, 1}), Chain(8, {4, 2, 1})) == std::strong_ordering::less);
    CHECK(chain_cmp(Chain(8, {4, 3}), Chain(8, {5})) == std::strong_ordering::less);
    CHECK(chain_cmp(Chain(8, {5}), Chain(8, {5})) == std::strong_ordering::equal);
    CHECK_THROWS_AS(chain_cmp(Chain(8, {1}), Chain(10, {1})), std::invalid_argument);
}

TEST_CASE("successor walks the enumeration") {
    CHECK(chain_successor(Chain(8, {4, 2, 1})) == Chain(8, {4, 3}));
    CHECK(chain_successor(Chain(8, {1})) == Chain(8, {2, 1}));
    CHECK(chain_successor(Chain(10, {5, 4})) == Chain(10, {6, 1}));
    CHECK_FALSE(chain_successor(Chain(8, {7})).has_value());

    for (int m = 2; m <= 30; ++m) {
        const auto chains = enumerate_chains(m);
        for (std::size_t i = 0; i + 1 < chains.size(); ++i) {
            CAPTURE(m, i);
            const auto next = chain_successor(chains[i]);
            REQUIRE(next.has_value());
            CHECK(*next == chains[i + 1]);
        }
        CHECK_FALSE(chain_successor(chains.back()).has_value());
    }
}

TEST_CASE("interval types for m = 10 match the four-type classification") {
    auto type_of = [](std::vector<int> ks) { return chain_interval_type(Chain(10, std::move(ks))); };
    CHECK(type_of({5, 1}) == IntervalType::A);
    CHECK(type_of({5, 2}) == IntervalType::A);
    CHECK(type_of({5, 3}) == IntervalType::A);
    CHECK(type_of({1}) == IntervalType::B);
    CHECK(type_of({3}) == IntervalType::B);
    CHECK(type_of({7}) == IntervalType::B);
    CHECK(type_of({2, 1}) == IntervalType::C);
    CHECK(type_of({6, 1}) == IntervalType::C);
    CHECK(type_of({8, 1}) == IntervalType::C);
    CHECK(type_of({4, 1}) == IntervalType::D);
    CHECK(type_of({5, 4}) == IntervalType::D);
    CHECK(type_of({9}) == IntervalType::Last);
}

TEST_CASE("chain rationals") {
    CHECK(chain_rationals(Chain(8, {4, 2, 1})) ==
          std::vector<Rational>{make_rational(1, 2), make_rational(1, 2), make_rational(1, 2)});
    CHECK(chain_rationals(Chain(10, {5, 2})) ==
          std::vector<Rational>{make_rational(1, 2), make_rational(2, 5)});
    CHECK(chain_rationals(Chain(5, {2})) == std::vector<Rational>{make_rational(2, 5)});
}

TEST_CASE("chain words are Lyndon of full length and anchors increase, m <= 30") {
    for (int m = 2; m <= 30; ++m) {
        const auto chains = enumerate_chains(m);
        std::optional<PeriodicSequence> prev;
        for (const Chain& c : chains) {
            const Word w = chain_word(c);
            CAPTURE(c.to_string());
            CHECK(w.size() == static_cast<std::size_t>(m));
            CHECK(is_lyndon(w));
            const PeriodicSequence anchor = chain_anchor(c);
            CHECK(is_perron(anchor.period().repeated(1)));
            if (prev) CHECK(*prev < anchor);
            prev = anchor;
        }
    }
}
