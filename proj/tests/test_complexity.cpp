#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <random>
#include <set>

#include "autoseq/complexity.hpp"
#include "autoseq/zoo.hpp"
#include "oracles.hpp"

using namespace autoseq;

namespace {
const double phi = (1 + std::sqrt(5.0)) / 2;
}

TEST_CASE("paperfolding p(n) = 4n") {
    auto prof = profile(get("paperfolding"), 32, 1u << 16);
    CHECK(prof.saturated);
    for (std::size_t n = 7; n <= 32; ++n) CHECK(prof.at(n) == 4 * n);
}

TEST_CASE("Rudin-Shapiro p(n) = 8n - 8") {
    auto prof = profile(get("rudin-shapiro"), 32, 1u << 16);
    CHECK(prof.saturated);
    for (std::size_t n = 8; n <= 32; ++n) CHECK(prof.at(n) == 8 * n - 8);
}

TEST_CASE("periodic word") {
    Word w(1000);
    for (std::size_t i = 0; i < w.size(); ++i) w[i] = i % 2;
    auto prof = profile_of_word(w, 2, 20);
    for (std::size_t n = 1; n <= 20; ++n) CHECK(prof.at(n) == 2);
    Word w3(999);
    for (std::size_t i = 0; i < w3.size(); ++i) w3[i] = (i % 3) ? 1 : 0;
    auto mh = morse_hedlund_check(profile_of_word(w3, 2, 10));
    CHECK(mh.periodic_evidence);
    CHECK(mh.witness == std::optional<std::size_t>(3));
}

TEST_CASE("prefix guard") {
    CHECK_THROWS(profile(get("thue-morse"), 64, 100));
}

TEST_CASE("Sturmian generator") {
    double a = 1 / (phi * phi);
    auto s = sturmian(a, a, SturmianVariant::Floor, 13);
    Alphabet bin{"0", "1"};
    CHECK(bin.render(s.word) == "0100101001001");
    auto prof = profile(sturmian_handle(a, a), 20, 4096);
    for (std::size_t n = 1; n <= 20; ++n) CHECK(prof.at(n) == n + 1);
    CHECK_FALSE(morse_hedlund_check(prof).periodic_evidence);
    auto ceil_prof = profile(sturmian_handle(std::sqrt(2.0) - 1, 0.3, SturmianVariant::Ceil), 20, 4096);
    for (std::size_t n = 1; n <= 20; ++n) CHECK(ceil_prof.at(n) == n + 1);
    // rational slope: bounded complexity
    auto rat = profile(sturmian_handle(0.5, 0.0), 20, 4096);
    CHECK(rat.at(20) <= 2);
    // the definition, term by term
    auto w = sturmian(std::sqrt(3.0) - 1, 0.1, SturmianVariant::Floor, 500).word;
    for (std::size_t n = 0; n < 500; ++n) {
        long double x0 = (std::sqrt(3.0L) - 1) * n + 0.1L, x1 = x0 + std::sqrt(3.0L) - 1;
        CHECK(w[n] == static_cast<Symbol>(std::floor(x1) - std::floor(x0)));
    }
}

TEST_CASE("hash-based counts equal brute force") {
    std::mt19937 rng(5);
    for (auto name : {"thue-morse", "paperfolding", "kolakoski", "hanoi"}) {
        auto w = get(name).prefix(2048);
        auto naive = profile_naive(w, 24);
        auto fast = profile_of_word(w, get(name).alphabet.size(), 24);
        for (std::size_t n = 1; n <= 24; ++n) {
            CHECK(fast.at(n) == naive[n]);
            CHECK(naive[n] == oracle::distinct_factors(w, n));
        }
    }
    Word r(2048);
    for (auto& x : r) x = rng() % 3;
    auto naive = profile_naive(r, 16);
    auto fast = profile_of_word(r, 3, 16);
    for (std::size_t n = 1; n <= 16; ++n) CHECK(fast.at(n) == naive[n]);
}

TEST_CASE("profile invariants") {
    auto prof = profile(get("thue-morse"), 64, 1u << 14);
    for (std::size_t n = 1; n < 64; ++n) CHECK(prof.at(n + 1) >= prof.at(n));
    for (std::size_t n = 1; n <= 10; ++n) CHECK(prof.at(n) <= (1ull << n));
    std::set<std::int64_t> diffs(prof.diff.begin(), prof.diff.end());
    CHECK(diffs.size() <= 4);
    CHECK_FALSE(morse_hedlund_check(prof).periodic_evidence);
    auto csv = prof.to_csv();
    CHECK(csv.rfind("n,p,diff", 0) == 0);
}

TEST_CASE("linear complexity bound for the automatic examples") {
    for (auto name : {"thue-morse", "paperfolding", "rudin-shapiro", "period-doubling"}) {
        auto p64 = profile(get(name), 64, 1u << 15);
        auto p128 = profile(get(name), 128, 1u << 15);
        double c64 = 0, c128 = 0;
        for (std::size_t n = 8; n <= 64; ++n) c64 = std::max(c64, double(p64.at(n)) / n);
        for (std::size_t n = 8; n <= 128; ++n) c128 = std::max(c128, double(p128.at(n)) / n);
        CHECK_MESSAGE(c128 <= c64 * 1.05, name);
    }
}

TEST_CASE("entropy estimates") {
    auto tm = entropy_estimate(profile(get("thue-morse"), 64, 1u << 14));
    CHECK(tm.value < 0.15);
    CHECK(tm.trend.back() < tm.trend[7]);
    // every binary block of length <= 12 occurs in the concatenation of all of them
    Word all;
    for (unsigned len = 1; len <= 12; ++len)
        for (unsigned b = 0; b < (1u << len); ++b)
            for (unsigned i = 0; i < len; ++i) all.push_back(b >> i & 1);
    auto full = entropy_estimate(profile_of_word(all, 2, 12));
    CHECK(full.value == doctest::Approx(1.0));
    auto pf = entropy_estimate(profile(get("paperfolding"), 32, 1u << 14));
    CHECK(pf.value <= std::log(4.0 * 32) / (32 * std::log(2.0)) + 1e-12);
}

TEST_CASE("Kolakoski fitted exponent is reported") {
    auto prof = profile(get("kolakoski"), 40, 1u << 15);
    double q = fitted_exponent(prof, 8, 40);
    CHECK(q > 1.0);
    CHECK(q < 3.0);
}
