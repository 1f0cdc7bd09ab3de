#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <numbers>
#include <random>

#include "autoseq/curves.hpp"
#include "oracles.hpp"

using namespace autoseq;

namespace {
LatticePath dragon(const char* signs, std::size_t edges) {
    return path_from_turns(paperfold_sequence(SignSpec::parse(signs), edges - 1));
}
}  // namespace

TEST_CASE("paths from turn words") {
    auto p = path_from_turns(turns("LRLL"));
    CHECK(p.edges() == 5);
    std::vector<Point> expect{{0, 0}, {1, 0}, {1, 1}, {2, 1}, {2, 2}, {1, 2}};
    CHECK(p.vertices == expect);
    CHECK(is_self_avoiding(p));
    auto sq = path_from_turns(turns("LLLL"));
    CHECK(sq.vertices[4] == Point{0, 0});
    CHECK_FALSE(is_self_avoiding(sq));  // re-traverses (0,0)-(1,0)
    CHECK(path_from_turns(turns("LRLLLRL")).closed());
    CHECK(path_from_turns({}).edges() == 1);
}

TEST_CASE("dragon prefixes are self-avoiding") {
    for (unsigned k = 1; k <= 14; ++k) {
        Word w;
        for (unsigned i = 0; i < k; ++i) w = fold(w, 1);
        CHECK(is_self_avoiding(path_from_turns(w)));
    }
}

TEST_CASE("folding preserves self-avoidance") {
    std::mt19937 rng(23);
    int tested = 0;
    while (tested < 100) {
        Word w(3 + rng() % 25);
        for (auto& x : w) x = rng() % 2;
        if (!is_self_avoiding(path_from_turns(w))) continue;
        ++tested;
        CHECK(is_self_avoiding(path_from_turns(fold(w, 1))));
        CHECK(is_self_avoiding(path_from_turns(fold(w, -1))));
    }
}

TEST_CASE("diameter") {
    LatticePath line;
    for (long long i = 0; i <= 50; ++i) line.vertices.push_back({i, 0});
    CHECK(diameter(line, 50) == doctest::Approx(50));
    CHECK(diameter(line, 7) == doctest::Approx(7));
    LatticePath sq{{{0, 0}, {1, 0}, {1, 1}, {0, 1}, {0, 0}}};
    CHECK(diameter(sq, 4) == doctest::Approx(std::sqrt(2.0)));
    // brute force on a dragon prefix
    auto d = dragon("+", 600);
    double best = 0;
    for (std::size_t i = 0; i <= 600; ++i)
        for (std::size_t j = i + 1; j <= 600; ++j)
            best = std::max(best, std::hypot(double(d.vertices[i].x - d.vertices[j].x), double(d.vertices[i].y - d.vertices[j].y)));
    CHECK(diameter(d, 600) == doctest::Approx(best));
    // D(L) / sqrt(L) stays bounded along powers of two
    auto big = dragon("+", 1u << 16);
    double lo = 1e9, hi = 0;
    for (unsigned k = 8; k <= 16; ++k) {
        double a = diameter(big, std::size_t(1) << k) / std::sqrt(double(1u << k));
        lo = std::min(lo, a);
        hi = std::max(hi, a);
    }
    CHECK(hi / lo < 1.6);
}

TEST_CASE("sausage areas") {
    LatticePath one{{{0, 0}, {1, 0}}};
    const double e = 0.25;
    double stadium = 2 * e + std::numbers::pi * e * e;
    CHECK(std::abs(sausage_area(one, 1, e) - stadium) / stadium < 0.02);
    // coincident edges count once
    LatticePath back{{{0, 0}, {1, 0}, {0, 0}}};
    CHECK(std::abs(sausage_area(back, 2, e) - stadium) / stadium < 0.02);
    // staircase: about 2 eps L
    Word stairs(299);
    for (std::size_t i = 0; i < stairs.size(); ++i) stairs[i] = i % 2;
    auto st = path_from_turns(stairs);
    CHECK(std::abs(sausage_area(st, 300, e) - 2 * e * 300) / (2 * e * 300) < 0.1);
    // Monte-Carlo cross-check and monotonicity
    auto d = dragon("+-", 512);
    double a = sausage_area(d, 512, 0.3);
    double mc = sausage_area_mc(d, 512, 0.3, 1000000, 9);
    CHECK(std::abs(a - mc) / a < 0.02);
    CHECK(sausage_area(d, 256, 0.3) <= a);
    CHECK(sausage_area(d, 512, 0.2) <= a);
}

TEST_CASE("dimension estimates") {
    LatticePath line;
    for (long long i = 0; i <= 4096; ++i) line.vertices.push_back({i, 0});
    auto dl = dimension_estimate(line, {1024, 2048, 4096}, 0.4);
    CHECK(std::abs(dl.estimate - 1.0) < 0.05);
    auto d = dragon("+", 1u << 16);
    auto est = dimension_estimate(d, {1u << 10, 1u << 12, 1u << 14, 1u << 16}, 0.4);
    for (auto v : est.values) {
        CHECK(v >= 1.0);
        CHECK(v <= 2.05);
    }
    CHECK(est.values.back() > est.values.front());
    CHECK_THROWS(dimension_estimate(d, {100, 50}, 0.4));
}

TEST_CASE("Rudin-Shapiro partial sums along dragons") {
    for (auto signs : {"+-", "+", "-", "++-"}) {
        auto c = rs_partial_sum_check(SignSpec::parse(signs), 1u << 14);
        CHECK_MESSAGE(c.holds, signs);
    }
    auto c = rs_partial_sum_check(SignSpec::parse("+-"), 1u << 13);
    REQUIRE(c.s.size() >= 4096);
    for (std::size_t n = 0; n < 4096; ++n) CHECK(c.s[n] == oracle::rs_sign(n));
    // vertex 2m of the path is (sum of s, sum of t) over k < m
    auto p = dragon("+-", 1u << 13);
    long long x = 0, y = 0;
    for (std::size_t m = 0; m < 4096; ++m) {
        CHECK(p.vertices[2 * m] == Point{x, y});
        x += c.s[m];
        y += c.t[m];
    }
}

TEST_CASE("svg output") {
    auto svg = to_svg(path_from_turns(turns("LRLL")));
    CHECK(svg.find("<svg") != std::string::npos);
    CHECK(svg.find("polyline") != std::string::npos);
    CHECK(svg.find("0,0 1,0 1,-1") != std::string::npos);
}
