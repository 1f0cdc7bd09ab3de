#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <set>

#include "autoseq/multidim.hpp"
#include "oracles.hpp"

using namespace autoseq;

namespace {
Block2D flip_rows(const Block2D& b) {
    Block2D out(b.side);
    for (std::size_t m = 0; m < b.side; ++m)
        for (std::size_t n = 0; n < b.side; ++n) out.at(m, n) = b.at(b.side - 1 - m, n);
    return out;
}

Morphism2D lower_sierpinski() {
    Morphism2D m;
    m.k = 2;
    m.images = {{0, 0, 0, 0}, {1, 0, 1, 1}};
    return m;
}
}  // namespace

TEST_CASE("X pattern") {
    auto m = Morphism2D::x_pattern();
    auto b1 = fixed_block(m, 1, 1);
    CHECK(b1.to_csv() == "1,0,1\n0,1,0\n1,0,1\n");
    auto b2 = fixed_block(m, 1, 2);
    REQUIRE(b2.side == 9);
    // cell (i,j) is 1 iff every base-3 digit pair of (i, j) is a corner or the centre of the X
    for (std::size_t i = 0; i < 9; ++i)
        for (std::size_t j = 0; j < 9; ++j) {
            auto ok = [](std::size_t r, std::size_t c) { return (r != 1 && c != 1) || (r == 1 && c == 1); };
            CHECK(b2.at(i, j) == unsigned(ok(i / 3, j / 3) && ok(i % 3, j % 3)));
        }
    CHECK(fixed_block(m, 0, 2) == Block2D(9, 0));
    CHECK_THROWS_WITH(fixed_block(Morphism2D{2, {{1, 0, 0, 0}, {0, 1, 1, 1}}}, 0, 2), doctest::Contains("non-prolongable"));
    CHECK_THROWS(fixed_block(m, 5, 1));
}

TEST_CASE("Pascal triangle modulo d") {
    auto p = pascal_mod(5, 8);
    std::vector<unsigned> row4{1, 4, 1, 4, 1, 0, 0, 0};
    for (std::size_t n = 0; n < 8; ++n) CHECK(p.at(4, n) == row4[n]);
    for (unsigned d : {2u, 3u, 4u, 6u, 10u}) {
        auto b = pascal_mod(d, 64);
        for (unsigned m = 0; m < 64; ++m)
            for (unsigned n = 0; n < 64; ++n) CHECK(b.at(m, n) == (oracle::binomial(m, n) % d).convert_to<unsigned>());
    }
    CHECK(pascal_mod(7, 100).top_left(30) == pascal_mod(7, 30));
    CHECK_THROWS(pascal_mod(1, 4));
}

TEST_CASE("Pascal mod 2 and the 2x2 substitution") {
    for (unsigned depth : {3u, 6u}) {
        std::size_t side = std::size_t(1) << depth;
        auto pas = pascal_mod(2, side);
        CHECK(flip_rows(fixed_block(Morphism2D::sierpinski(), 1, depth)) == pas);
        CHECK(fixed_block(lower_sierpinski(), 1, depth) == pas);
    }
    auto pas = pascal_mod(2, 64);
    CHECK(selfsimilarity_check(pas, lower_sierpinski()));
    CHECK_FALSE(selfsimilarity_check(pas, Morphism2D::sierpinski()));
    CHECK_THROWS(selfsimilarity_check(pascal_mod(2, 9), lower_sierpinski()));
}

TEST_CASE("first-occurrence inference") {
    auto m2 = infer_morphism(pascal_mod(2, 64), 2, 2);
    CHECK(m2.images == lower_sierpinski().images);
    CHECK(selfsimilarity_check(pascal_mod(2, 64), m2));
    auto m6 = infer_morphism(pascal_mod(6, 72), 2, 6);
    CHECK_FALSE(selfsimilarity_check(pascal_mod(6, 72), m6));
    auto m3 = infer_morphism(pascal_mod(3, 81), 3, 3);
    CHECK(selfsimilarity_check(pascal_mod(3, 81), m3));
}

TEST_CASE("kernel substitution") {
    auto ks = kernel_substitution(pascal_mod(2, 256), 2);
    CHECK(ks.closed);
    CHECK(ks.states() == 2);
    for (std::uint64_t m = 0; m < 300; m += 7)
        for (std::uint64_t n = 0; n < 300; n += 5) CHECK(ks.eval(m, n) == (oracle::binomial(unsigned(m), unsigned(n)) % 2).convert_to<unsigned>());
    CHECK(ks.generate(64) == pascal_mod(2, 64));
}

TEST_CASE("substitution consistency") {
    std::set<unsigned> pass;
    for (unsigned d = 2; d <= 9; ++d) {
        auto r = pascal_consistency(d, smallest_prime_factor(d));
        if (r.passes()) pass.insert(d);
    }
    CHECK(pass == std::set<unsigned>{2, 3, 4, 5, 7, 8, 9});
    for (unsigned p : {2u, 3u, 5u}) CHECK_FALSE(pascal_consistency(6, p).passes());
    CHECK(smallest_prime_factor(9) == 3);
    CHECK(smallest_prime_factor(7) == 7);
}

TEST_CASE("image output") {
    auto b = pascal_mod(3, 4);
    auto pgm = b.to_pgm(2);
    CHECK(pgm.rfind("P2\n4 4\n2\n", 0) == 0);
    CHECK(pgm.find("1 2 1 0") != std::string::npos);
    CHECK(b.to_csv() == "1,0,0,0\n1,1,0,0\n1,2,1,0\n1,0,0,1\n");
}
