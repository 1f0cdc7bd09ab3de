#include "autoseq/ising.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <map>
#include <numeric>
#include <random>
#include <stdexcept>

namespace autoseq {

Alpha Alpha::of(long long p, long long q) {
    if (q <= 0 || p < 0) throw std::domain_error("alpha must be a non-negative fraction");
    long long g = std::gcd(p, q);
    if (g == 0) g = 1;
    return {p / g, q / g};
}

Alpha Alpha::parse(const std::string& text) {
    auto slash = text.find('/');
    auto as_int = [&](const std::string& s) {
        if (s.empty() || s.find_first_not_of("0123456789") != std::string::npos)
            throw std::invalid_argument("bad alpha '" + text + "'");
        return std::stoll(s);
    };
    if (slash != std::string::npos) return of(as_int(text.substr(0, slash)), as_int(text.substr(slash + 1)));
    auto dot = text.find('.');
    if (dot == std::string::npos) return of(as_int(text), 1);
    std::string whole = text.substr(0, dot), frac = text.substr(dot + 1);
    if (frac.size() > 15) throw std::invalid_argument("too many decimals in alpha");
    long long q = 1;
    for (std::size_t i = 0; i < frac.size(); ++i) q *= 10;
    long long w = whole.empty() ? 0 : as_int(whole);
    long long f = frac.empty() ? 0 : as_int(frac);
    return of(w * q + f, q);
}

long long Alpha::m() const {
    if (p == 0) throw std::domain_error("m is undefined for alpha = 0");
    return 4 * q / p;
}

std::string Alpha::str() const { return q == 1 ? std::to_string(p) : std::to_string(p) + "/" + std::to_string(q); }

double hamiltonian(const ChainSpec& spec, const std::vector<int>& sigma) {
    if (sigma.size() != spec.N() + 1) throw std::invalid_argument("sigma must have length N+1");
    double bonds = 0, field = 0;
    for (std::size_t q = 0; q < spec.N(); ++q) bonds += spec.eps[q] * sigma[q] * sigma[q + 1];
    for (int s : sigma) field += s;
    return -spec.J * bonds - spec.H * field;
}

namespace {
std::vector<int> config(std::uint64_t bits, std::size_t len) {
    std::vector<int> s(len);
    for (std::size_t i = 0; i < len; ++i) s[i] = (bits >> i & 1) ? 1 : -1;
    return s;
}

double logsumexp(double a, double b) {
    if (a == -std::numeric_limits<double>::infinity()) return b;
    double hi = std::max(a, b), lo = std::min(a, b);
    return hi + std::log1p(std::exp(lo - hi));
}
}  // namespace

GroundStates ground_states(const ChainSpec& spec) {
    if (spec.N() > 20) throw std::domain_error("ground_states enumerates 2^(N+1) configurations; N must be <= 20");
    const std::size_t len = spec.N() + 1;
    GroundStates g;
    g.energy = std::numeric_limits<double>::infinity();
    const double tol = 1e-9 * (std::abs(spec.J) + std::abs(spec.H)) * double(len);
    for (std::uint64_t bits = 0; bits < (std::uint64_t(1) << len); ++bits) {
        auto s = config(bits, len);
        double e = hamiltonian(spec, s);
        if (e < g.energy - tol) {
            g.energy = e;
            g.configs.clear();
        }
        if (std::abs(e - g.energy) <= tol) g.configs.push_back(std::move(s));
    }
    return g;
}

Partition partition(const ChainSpec& spec, double beta) {
    // lv[0] for sigma = -1, lv[1] for sigma = +1
    double lv[2] = {-beta * spec.H, beta * spec.H};
    for (std::size_t q = 0; q < spec.N(); ++q) {
        double nv[2];
        for (int t = 0; t < 2; ++t) {
            int st = t ? 1 : -1;
            double acc = -std::numeric_limits<double>::infinity();
            for (int s = 0; s < 2; ++s) {
                int ss = s ? 1 : -1;
                acc = logsumexp(acc, lv[s] + beta * spec.J * spec.eps[q] * ss * st);
            }
            nv[t] = acc + beta * spec.H * st;
        }
        lv[0] = nv[0];
        lv[1] = nv[1];
    }
    return {logsumexp(lv[0], lv[1]), lv[1], lv[0]};
}

Partition partition_direct(const ChainSpec& spec, double beta) {
    if (spec.N() > 20) throw std::domain_error("direct summation needs N <= 20");
    const std::size_t len = spec.N() + 1;
    double lp = -std::numeric_limits<double>::infinity(), lm = lp;
    for (std::uint64_t bits = 0; bits < (std::uint64_t(1) << len); ++bits) {
        auto s = config(bits, len);
        double w = -beta * hamiltonian(spec, s);
        if (s.back() > 0) lp = logsumexp(lp, w);
        else lm = logsumexp(lm, w);
    }
    return {logsumexp(lp, lm), lp, lm};
}

DegreeTrace degree_recursion(const std::vector<int>& eps, const Rational& alpha, const Rational& a0,
                             const Rational& b0, std::size_t n) {
    if (n > eps.size()) throw std::invalid_argument("not enough signs");
    DegreeTrace t;
    t.a.push_back(a0);
    t.b.push_back(b0);
    const Rational half = alpha / 2;
    for (std::size_t q = 0; q < n; ++q) {
        const Rational& a = t.a.back();
        const Rational& b = t.b.back();
        int e = eps[q];
        Rational na = half + std::max(Rational(a + e), Rational(b - e));
        Rational nb = -half + std::max(Rational(a - e), Rational(b + e));
        t.a.push_back(std::move(na));
        t.b.push_back(std::move(nb));
    }
    return t;
}

FieldTrace induced_field(const std::vector<int>& eps, const Alpha& alpha, std::size_t n,
                         std::optional<Rational> delta0) {
    if (n > eps.size()) throw std::invalid_argument("not enough signs");
    FieldTrace t;
    t.alpha = alpha;
    long long d0 = alpha.p + 2 * alpha.q;
    if (delta0) {
        Rational s = *delta0 * alpha.q;
        if (denominator(s) != 1) throw std::domain_error("delta_0 * q must be an integer");
        d0 = numerator(s).convert_to<long long>();
    }
    t.scaled.reserve(n + 1);
    t.scaled.push_back(d0);
    const long long two = 2 * alpha.q;
    long long d = d0;
    for (std::size_t i = 0; i < n; ++i) {
        d = alpha.p + eps[i] * std::clamp(d, -two, two);
        t.scaled.push_back(d);
    }
    return t;
}

std::vector<double> induced_field_real(const std::vector<int>& eps, double alpha, std::size_t n, double delta0) {
    if (n > eps.size()) throw std::invalid_argument("not enough signs");
    std::vector<double> out{delta0};
    double d = delta0;
    for (std::size_t i = 0; i < n; ++i) {
        double c = std::abs(d) < 1e-12 ? 0.0 : std::clamp(d, -2.0, 2.0);
        d = alpha + eps[i] * c;
        out.push_back(d);
    }
    return out;
}

SignedAutomaton ising_automaton(const Alpha& alpha) {
    SignedAutomaton a;
    if (alpha.p == 0) {
        a = SignedAutomaton::thue_morse();
        a.output = {Rational(2), Rational(-2)};
        return a;
    }
    const long long m = alpha.m();
    const Rational al = alpha.rational();
    // A = 0, B_i = i (1..m+1), C_j = m+1+j (1..m)
    auto B = [](long long i) { return static_cast<std::size_t>(i); };
    auto C = [m](long long j) { return static_cast<std::size_t>(m + 1 + j); };
    const std::size_t n = static_cast<std::size_t>(2 * m + 2);
    a.states.resize(n);
    a.plus.resize(n);
    a.minus.resize(n);
    a.output.resize(n);
    a.states[0] = "A";
    a.plus[0] = 0;
    a.minus[0] = B(1);
    a.output[0] = al + 2;
    for (long long i = 1; i <= m + 1; ++i) {
        a.states[B(i)] = "B" + std::to_string(i);
        a.output[B(i)] = al * i - 2;
        if (i <= m) {
            a.plus[B(i)] = B(i + 1);
            a.minus[B(i)] = C(i);
        } else {
            a.plus[B(i)] = 0;
            a.minus[B(i)] = B(1);
        }
    }
    for (long long j = 1; j <= m; ++j) {
        a.states[C(j)] = "C" + std::to_string(j);
        a.output[C(j)] = Rational(2) - al * (j - 1);
        a.plus[C(j)] = j == 1 ? 0 : C(j - 1);
        a.minus[C(j)] = B(j);
    }
    a.validate();
    return a;
}

std::vector<int> random_signs(std::size_t n, std::uint64_t seed) {
    std::mt19937_64 gen(seed);
    std::vector<int> e(n);
    for (auto& x : e) x = (gen() >> 63) ? 1 : -1;
    return e;
}

ErgodicResult ergodic_average(const std::vector<int>& eps, const Alpha& alpha, std::size_t N) {
    if (N == 0) throw std::invalid_argument("N must be >= 1");
    auto t = induced_field(eps, alpha, N - 1);
    ErgodicResult r;
    r.running.reserve(N);
    long double sum = 0;
    for (std::size_t i = 0; i < N; ++i) {
        sum += t.value(i);
        r.running.push_back(static_cast<double>(sum / (i + 1)));
    }
    r.average = r.running.back();
    return r;
}

ScheduleResult two_ratio_schedule(const Alpha& alpha, double beta, double beta_prime, const ScheduleParams& prm) {
    if (alpha.p == 0 || alpha.m() < 1) throw std::domain_error("schedule needs 0 < alpha <= 4");
    const double al = alpha.value();
    if (!(al / 2 < beta && beta < beta_prime && beta_prime < al + 2))
        throw std::domain_error("need alpha/2 < beta < beta' < alpha+2");
    if (prm.growth <= 1) throw std::domain_error("growth must exceed 1");
    const double G = prm.growth;
    ScheduleResult res;
    res.mean_hi = (G * beta_prime - beta) / (G - 1);
    res.mean_lo = (G * beta - beta_prime) / (G - 1);

    const auto aut = ising_automaton(alpha);
    struct Unit { double p_sum, sum; std::uint64_t p_len, len; };
    std::map<long long, Unit> cache;
    auto unit = [&](long long p) -> const Unit& {
        auto it = cache.find(p);
        if (it != cache.end()) return it->second;
        std::vector<int> w(static_cast<std::size_t>(p), 1);
        w.push_back(-1);
        w.insert(w.end(), static_cast<std::size_t>(2 * prm.q), -1);
        w.push_back(-1);
        w.push_back(1);
        std::size_t s = 0;
        Rational tot = 0, ptot = 0;
        for (std::size_t i = 0; i < w.size(); ++i) {
            s = aut.next(s, w[i]);
            tot += aut.output[s];
            if (i + 1 == static_cast<std::size_t>(p)) ptot = tot;
        }
        if (s != 0) throw std::logic_error("schedule unit does not return to A");
        return cache.emplace(p, Unit{to_double(ptot), to_double(tot), std::uint64_t(p), w.size()}).first->second;
    };
    const double lo_mean = unit(0).sum / double(unit(0).len);
    if (res.mean_lo <= lo_mean || res.mean_hi >= al + 2)
        throw std::domain_error("targets out of reach for this q; increase q or narrow (beta, beta')");

    // p solving the unit-mean equation for a target mean
    auto p_star = [&](double m) {
        double q = double(prm.q);
        return std::max(0.0, (m * (2 * q + 3) - q * al - 2 * al - 2) / (al + 2 - m));
    };

    long double total = 0;
    std::uint64_t steps = 0;
    res.liminf = std::numeric_limits<double>::infinity();
    res.limsup = -std::numeric_limits<double>::infinity();
    double len_target = double(prm.first_block);
    for (std::size_t k = 0; k < prm.blocks; ++k, len_target *= G) {
        const bool hi = k % 2 == 1;
        const double target = hi ? res.mean_hi : res.mean_lo;
        const double ps = p_star(target);
        long double bsum = 0;
        std::uint64_t blen = 0;
        const bool measure = k >= prm.measure_from;
        while (double(blen) < len_target) {
            // pick floor or ceil of p* to steer the block mean to the target
            long long p0 = static_cast<long long>(std::floor(ps)), p1 = p0 + 1;
            const Unit& u0 = unit(p0);
            const Unit& u1 = unit(p1);
            double e0 = std::abs(double((bsum + u0.sum) / (blen + u0.len)) - target);
            double e1 = std::abs(double((bsum + u1.sum) / (blen + u1.len)) - target);
            const Unit& u = e0 <= e1 ? u0 : u1;
            if (measure && u.p_len > 0) {
                double a = double((total + u.p_sum) / (steps + u.p_len));
                res.liminf = std::min(res.liminf, a);
                res.limsup = std::max(res.limsup, a);
            }
            total += u.sum;
            steps += u.len;
            bsum += u.sum;
            blen += u.len;
            if (measure) {
                double a = double(total / steps);
                res.liminf = std::min(res.liminf, a);
                res.limsup = std::max(res.limsup, a);
            }
        }
        res.block_end_average.push_back(double(total / steps));
    }
    res.steps = steps;
    return res;
}

double ising_opacity(const Alpha& alpha) {
    auto r = opacity_formula(ising_automaton(alpha));
    if (alpha.p == 0) return r.value;
    const long long mp = std::max<long long>(1, alpha.m());
    if (r.squared != Rational(mp - 1, mp))
        throw std::logic_error("Ising opacity " + r.squared.str() + " differs from (m'-1)/m'");
    return r.value;
}

}  // namespace autoseq
