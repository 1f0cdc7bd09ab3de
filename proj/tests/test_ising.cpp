#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <atomic>
#include <cmath>
#include <random>

#include "autoseq/ising.hpp"
#include "autoseq/parallel.hpp"

using namespace autoseq;

namespace {
// delta_{i+1} = alpha + eps_i * clamp(delta_i), on doubles, no tricks
std::vector<double> naive_field(const std::vector<int>& eps, double alpha, double d0, std::size_t n) {
    std::vector<double> d{d0};
    for (std::size_t i = 0; i < n; ++i) d.push_back(alpha + eps[i] * std::max(-2.0, std::min(2.0, d.back())));
    return d;
}
}  // namespace

TEST_CASE("alpha parsing") {
    CHECK(Alpha::parse("1/2").q == 2);
    CHECK(Alpha::parse("0.35").p == 7);
    CHECK(Alpha::parse("0.35").q == 20);
    CHECK(Alpha::parse("3").m() == 1);
    CHECK(Alpha::parse("0.5").m() == 8);
    CHECK(Alpha::parse("4/6").str() == "2/3");
    CHECK_THROWS(Alpha::parse("-1"));
    CHECK_THROWS(Alpha::parse("1/0"));
    CHECK_THROWS(Alpha::parse("0").m());
}

TEST_CASE("hamiltonian") {
    ChainSpec s{{1, -1}, 1.0, 0.5};
    // -J(e0 s0 s1 + e1 s1 s2) - H(s0 + s1 + s2)
    CHECK(hamiltonian(s, {1, 1, 1}) == doctest::Approx(-(1 - 1) - 1.5));
    CHECK(hamiltonian(s, {1, 1, -1}) == doctest::Approx(-(1 + 1) - 0.5));
    CHECK(hamiltonian(s, {-1, -1, -1}) == doctest::Approx(-(1 - 1) + 1.5));
    CHECK_THROWS(hamiltonian(s, {1, 1}));
}

TEST_CASE("zero field ground states satisfy every bond") {
    std::mt19937 rng(2);
    for (int t = 0; t < 30; ++t) {
        ChainSpec s;
        s.eps.resize(1 + rng() % 12);
        for (auto& e : s.eps) e = rng() % 2 ? 1 : -1;
        auto g = ground_states(s);
        REQUIRE(g.count() == 2);
        CHECK(g.energy == doctest::Approx(-double(s.N())));
        for (auto& c : g.configs)
            for (std::size_t q = 0; q < s.N(); ++q) CHECK(c[q] * c[q + 1] == s.eps[q]);
        for (std::size_t i = 0; i <= s.N(); ++i) CHECK(g.configs[0][i] == -g.configs[1][i]);
    }
}

TEST_CASE("ground state spin follows the sign of the induced field") {
    std::mt19937 rng(31);
    const Alpha alphas[] = {Alpha::of(1, 2), Alpha::of(1, 1), Alpha::of(2, 1), Alpha::of(3, 1)};
    int agree = 0, trials = 0;
    while (trials < 200) {
        const Alpha al = alphas[rng() % 4];
        ChainSpec s;
        s.eps.resize(1 + rng() % 14);
        for (auto& e : s.eps) e = rng() % 2 ? 1 : -1;
        s.J = 1.0;
        s.H = al.value() / 2;
        auto f = induced_field(s.eps, al, s.N(), al.rational());
        if (f.scaled.back() == 0) continue;
        auto g = ground_states(s);
        if (g.count() != 1) continue;
        ++trials;
        if ((f.scaled.back() > 0 ? 1 : -1) == g.configs[0].back()) ++agree;
    }
    CHECK(agree == 200);
}

TEST_CASE("partition functions") {
    std::mt19937 rng(5);
    for (int t = 0; t < 20; ++t) {
        ChainSpec s;
        s.eps.resize(1 + rng() % 14);
        for (auto& e : s.eps) e = rng() % 2 ? 1 : -1;
        s.J = 0.5 + (rng() % 100) / 50.0;
        s.H = (rng() % 100) / 100.0;
        for (double beta : {0.1, 1.0, 3.0}) {
            auto a = partition(s, beta), b = partition_direct(s, beta);
            CHECK(a.log_z == doctest::Approx(b.log_z).epsilon(1e-10));
            CHECK(a.log_plus == doctest::Approx(b.log_plus).epsilon(1e-10));
            CHECK(a.log_minus == doctest::Approx(b.log_minus).epsilon(1e-10));
        }
        CHECK(partition(s, 0.0).log_z == doctest::Approx(double(s.N() + 1) * std::log(2.0)));
    }
}

TEST_CASE("degree recursion, field recursion and low temperature limit agree") {
    std::mt19937 rng(6);
    for (int t = 0; t < 40; ++t) {
        std::vector<int> eps(1 + rng() % 12);
        for (auto& e : eps) e = rng() % 2 ? 1 : -1;
        const Alpha al = Alpha::of(1 + rng() % 8, 1 + rng() % 4);
        const Rational half = al.rational() / 2;
        auto deg = degree_recursion(eps, al.rational(), half, -half, eps.size());
        auto f = induced_field(eps, al, eps.size(), al.rational());
        for (std::size_t i = 0; i <= eps.size(); ++i) CHECK(deg.delta(i) == f.delta(i));
        // (log Z+ - log Z-) / (beta J) tends to the top-degree difference
        ChainSpec s{eps, 1.0, al.value() / 2};
        const double beta = 60;
        auto p = partition(s, beta);
        CHECK(std::abs((p.log_plus - p.log_minus) / beta - f.value(eps.size())) < 0.05);
    }
}

TEST_CASE("field recursion special cases and invariants") {
    auto eps = random_signs(5000, 1);
    auto z = induced_field(eps, Alpha::of(0, 1), 5000);
    int prod = 1;
    for (std::size_t i = 0; i < 5000; ++i) {
        prod *= eps[i];
        CHECK(z.delta(i + 1) == 2 * prod);
    }
    for (long long a : {4, 5, 9}) {
        auto f = induced_field(eps, Alpha::of(a, 1), 5000);
        for (std::size_t i = 1; i <= 5000; ++i) CHECK(f.delta(i) == a + 2 * eps[i - 1]);
    }
    for (auto al : {Alpha::of(1, 2), Alpha::of(7, 3), Alpha::of(3, 10)}) {
        auto f = induced_field(eps, al, 5000);
        auto ref = naive_field(eps, al.value(), al.value() + 2, 5000);
        const Rational a = al.rational();
        for (std::size_t i = 1; i <= 5000; ++i) {
            Rational d = f.delta(i), prev = f.delta(i - 1);
            CHECK(d >= a - 2);
            CHECK(d <= a + 2);
            Rational lhs = (d - a) * (d - a), rhs = std::min(Rational(4), Rational(prev * prev));
            CHECK(lhs == rhs);
            CHECK(std::abs(f.value(i) - ref[i]) < 1e-9);
        }
    }
    CHECK_THROWS(induced_field(eps, Alpha::of(1, 3), 10, Rational(1, 2)));
    CHECK_THROWS(induced_field(eps, Alpha::of(1, 3), 6000));
}

TEST_CASE("the field forgets its initial value") {
    for (std::uint64_t seed = 1; seed <= 5; ++seed) {
        auto eps = random_signs(2000, seed);
        for (auto al : {Alpha::of(1, 2), Alpha::of(1, 1), Alpha::of(3, 1)}) {
            auto a = induced_field(eps, al, 2000);
            auto b = induced_field(eps, al, 2000, Rational(-2));
            std::size_t meet = 0;
            while (meet <= 2000 && a.scaled[meet] != b.scaled[meet]) ++meet;
            REQUIRE(meet < 2000);
            for (std::size_t i = meet; i <= 2000; ++i) CHECK(a.scaled[i] == b.scaled[i]);
        }
    }
}

TEST_CASE("automaton outputs equal the recursion") {
    for (auto al : {Alpha::of(0, 1), Alpha::of(1, 2), Alpha::of(1, 1), Alpha::of(2, 1), Alpha::of(3, 1),
                    Alpha::of(4, 1), Alpha::of(5, 1), Alpha::of(2, 3), Alpha::of(7, 5), Alpha::of(4, 9)}) {
        auto aut = ising_automaton(al);
        if (al.p > 0) CHECK(aut.size() == std::size_t(2 * al.m() + 2));
        std::atomic<int> bad{0};
        parallel_for(100, [&](std::size_t t) {
            auto eps = random_signs(10000, 1000 + t);
            auto f = induced_field(eps, al, 10000);
            std::size_t s = 0;
            if (aut.output[s] != f.delta(0)) ++bad;
            for (std::size_t i = 0; i < 10000; ++i) {
                s = aut.next(s, eps[i]);
                if (aut.output[s] != f.delta(i + 1)) {
                    ++bad;
                    break;
                }
            }
        });
        CHECK_MESSAGE(bad == 0, al.str());
        if (al.p > 0) {
            Rational sum = 0;
            for (auto& o : aut.output) sum += o;
            CHECK(sum / long(aut.size()) == al.rational());
        }
    }
}

TEST_CASE("random signs") {
    auto a = random_signs(100000, 7), b = random_signs(100000, 7), c = random_signs(100000, 8);
    CHECK(a == b);
    CHECK(a != c);
    long s = 0;
    for (int x : a) s += x;
    CHECK(std::abs(s) < 2000);
}

TEST_CASE("ergodic averages") {
    for (auto al : {Alpha::of(1, 2), Alpha::of(1, 1), Alpha::of(3, 1)}) {
        for (std::uint64_t seed = 1; seed <= 3; ++seed) {
            auto eps = random_signs(1000000, seed);
            auto r = ergodic_average(eps, al, 1000000);
            CHECK(std::abs(r.average - al.value()) < 0.02);
            CHECK(r.running.size() == 1000000);
            CHECK(r.running[0] == doctest::Approx(al.value() + 2));
        }
    }
    // all minus: the field alternates and the average sits at alpha/2
    for (auto al : {Alpha::of(1, 2), Alpha::of(1, 1), Alpha::of(2, 1)}) {
        std::vector<int> minus(100000, -1);
        auto r = ergodic_average(minus, al, 100000);
        double lo = 1e9;
        for (std::size_t i = 1000; i < r.running.size(); ++i) lo = std::min(lo, r.running[i]);
        CHECK(lo >= al.value() / 2 - 1e-3);
        CHECK(r.average == doctest::Approx(al.value() / 2).epsilon(1e-3));
    }
}

TEST_CASE("two-ratio schedule") {
    struct Case { Alpha a; double lo, hi; };
    for (auto c : {Case{Alpha::of(1, 1), 0.8, 2.5}, Case{Alpha::of(1, 2), 0.5, 1.5}, Case{Alpha::of(2, 1), 1.5, 3.0}}) {
        auto r = two_ratio_schedule(c.a, c.lo, c.hi);
        CHECK(std::abs(r.liminf - c.lo) / c.lo < 0.01);
        CHECK(std::abs(r.limsup - c.hi) / c.hi < 0.01);
    }
    CHECK_THROWS(two_ratio_schedule(Alpha::of(1, 1), 0.3, 2.0));
    CHECK_THROWS(two_ratio_schedule(Alpha::of(1, 1), 2.0, 1.0));
}

TEST_CASE("opacity of the Ising automaton") {
    CHECK(ising_opacity(Alpha::of(0, 1)) == doctest::Approx(1.0));
    CHECK(ising_opacity(Alpha::of(1, 2)) == doctest::Approx(std::sqrt(7.0 / 8)));
    CHECK(ising_opacity(Alpha::of(1, 1)) == doctest::Approx(std::sqrt(3.0 / 4)));
    CHECK(ising_opacity(Alpha::of(2, 1)) == doctest::Approx(std::sqrt(0.5)));
    CHECK(ising_opacity(Alpha::of(3, 1)) == doctest::Approx(0.0));
    CHECK(ising_opacity(Alpha::of(4, 1)) == doctest::Approx(0.0));
    for (auto al : {Alpha::of(1, 2), Alpha::of(1, 1), Alpha::of(2, 1), Alpha::of(4, 1)}) {
        auto aut = ising_automaton(al);
        CHECK(opacity_lower_estimate(aut, 8).squared <= opacity_formula(aut).squared);
    }
}
