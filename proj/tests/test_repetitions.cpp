#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "autoseq/folding.hpp"
#include "autoseq/repetitions.hpp"
#include "autoseq/zoo.hpp"
#include "oracles.hpp"

using namespace autoseq;

TEST_CASE("squarefree Thue word has no square") {
    CHECK_FALSE(find_square(get("squarefree-thue"), 10000, 1, 500).has_value());
}

TEST_CASE("Thue-Morse has squares but no overlap") {
    auto sq = find_square(get("thue-morse"), 64, 1, 16);
    REQUIRE(sq.has_value());
    CHECK(sq->exponent == 2);
    CHECK_FALSE(has_overlap(get("thue-morse"), 1u << 14, 256).has_value());
}

TEST_CASE("every binary word of length 4 has a square") {
    for (unsigned bits = 0; bits < 16; ++bits) {
        Word w{bits & 1, bits >> 1 & 1, bits >> 2 & 1, bits >> 3 & 1};
        CHECK(find_square(w, 1, 2).has_value());
    }
}

TEST_CASE("overlap in a hand-made word") {
    Alphabet bin{"0", "1"};
    auto f = has_overlap(bin.parse("0110110"), 3);
    REQUIRE(f.has_value());
    CHECK(f->period == 3);
    CHECK(f->length == 7);
    CHECK(f->exponent == Rational(7, 3));
}

TEST_CASE("paperfolding: no long squares, no fourth power") {
    for (auto spec : {"+", "+-", "-", "++-", "+--+"}) {
        auto w = paperfold_sequence(SignSpec::parse(spec), 1u << 12);
        CHECK_MESSAGE(!find_square(w, 6, 2048).has_value(), spec);
        CHECK_MESSAGE(!oracle::square(w, 6, 64).has_value(), spec);
        CHECK_MESSAGE(critical_exponent(w, 1024).exponent < 4, spec);
        CHECK_MESSAGE(!oracle::has_power(w, 4, 1, 1024), spec);
    }
}

TEST_CASE("paperfolding square periods are 1, 3 and 5") {
    auto w = paperfold_sequence(SignSpec::parse("+"), 1u << 12);
    for (std::size_t p : {1u, 3u, 5u}) CHECK(find_square(w, p, p).has_value());
    for (std::size_t p : {2u, 4u}) CHECK_FALSE(find_square(w, p, p).has_value());
}

TEST_CASE("Fibonacci critical exponent") {
    auto fib = get("fibonacci");
    auto e4 = critical_exponent_lower_bound(fib, 10000, 1000);
    CHECK(to_double(e4) >= 3.0);
    CHECK(to_double(e4) <= 3.6181);
    // contains (10010)^3
    auto w = fib.prefix(200);
    Word cube;
    for (int i = 0; i < 3; ++i)
        for (char c : std::string("10010")) cube.push_back(c - '0');
    CHECK(std::search(w.begin(), w.end(), cube.begin(), cube.end()) != w.end());
    // monotone in n and in max_period
    CHECK(critical_exponent_lower_bound(fib, 2000, 500) <= e4);
    CHECK(critical_exponent_lower_bound(fib, 10000, 100) <= e4);
}

TEST_CASE("squarefree exponent below 2, witnesses are genuine") {
    auto w = get("squarefree-thue").prefix(10000);
    auto f = critical_exponent(w, 500);
    CHECK(f.exponent < 2);
    REQUIRE(f.position + f.length <= w.size());
    for (std::size_t i = f.period; i < f.length; ++i) CHECK(w[f.position + i] == w[f.position + i - f.period]);
    CHECK(Rational(static_cast<long long>(f.length), static_cast<long long>(f.period)) == f.exponent);
}

TEST_CASE("fast square finder matches the brute-force scanners") {
    std::mt19937 rng(11);
    for (int t = 0; t < 300; ++t) {
        std::size_t n = 1 + rng() % 512;
        unsigned k = 2 + rng() % 2;
        Word w(n);
        for (auto& x : w) x = rng() % k;
        std::size_t lo = 1 + rng() % 4, hi = lo + rng() % 40;
        auto fast = find_square(w, lo, hi);
        auto lib = find_square_naive(w, lo, hi);
        auto ref = oracle::square(w, lo, hi);
        REQUIRE(fast.has_value() == ref.has_value());
        REQUIRE(lib.has_value() == ref.has_value());
        if (ref) {
            CHECK(fast->position == ref->first);
            CHECK(fast->period == ref->second);
        }
        CHECK(has_overlap(w, 40).has_value() == oracle::has_overlap(w, 40));
    }
}
