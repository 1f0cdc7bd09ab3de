#include "autoseq/spectral.hpp"

#include <algorithm>
#include <cmath>
#include <fftw3.h>
#include <functional>
#include <map>
#include <mutex>
#include <numbers>
#include <numeric>
#include <set>
#include <stdexcept>

#include "autoseq/parallel.hpp"

namespace autoseq {

namespace {

constexpr double kTwoPi = 2.0 * std::numbers::pi;
constexpr std::size_t kChunk = 1 << 12;

// fixed-size chunks summed in any order, then combined by a fixed pairwise
// tree: the result does not depend on the thread count
template <class T, class F>
T chunked_sum(std::size_t n, F term) {
    std::size_t chunks = (n + kChunk - 1) / kChunk;
    std::vector<T> part(chunks, T{});
    parallel_for(chunks, [&](std::size_t c) {
        T s{};
        std::size_t end = std::min(n, (c + 1) * kChunk);
        for (std::size_t i = c * kChunk; i < end; ++i) s += term(i);
        part[c] = s;
    });
    while (part.size() > 1) {
        std::vector<T> next((part.size() + 1) / 2);
        for (std::size_t i = 0; i < next.size(); ++i)
            next[i] = part[2 * i] + (2 * i + 1 < part.size() ? part[2 * i + 1] : T{});
        part.swap(next);
    }
    return part.empty() ? T{} : part[0];
}

void need(const Values& f, std::size_t n) {
    if (f.size() < n) throw std::invalid_argument("not enough sequence values");
}

}  // namespace

Frequency Frequency::ratio(std::int64_t p, std::int64_t q) {
    if (q <= 0) throw std::invalid_argument("frequency denominator must be positive");
    std::int64_t g = std::gcd(p < 0 ? -p : p, q);
    Frequency f;
    f.num = p / g;
    f.den = q / g;
    f.value = static_cast<double>(f.num) / static_cast<double>(f.den);
    return f;
}

Frequency Frequency::real(double x) {
    Frequency f;
    f.value = x;
    return f;
}

Frequency Frequency::parse(const std::string& text) {
    auto slash = text.find('/');
    if (slash != std::string::npos) return ratio(std::stoll(text.substr(0, slash)), std::stoll(text.substr(slash + 1)));
    return real(std::stod(text));
}

Frequency Frequency::plus_one() const {
    return exact() ? ratio(num + den, den) : real(value + 1.0);
}

std::string Frequency::str() const {
    return exact() ? std::to_string(num) + "/" + std::to_string(den) : std::to_string(value);
}

Complex fourier_bohr(const Values& f, const Frequency& lambda, std::size_t N) {
    if (N < 1) throw std::invalid_argument("N must be >= 1");
    need(f, N);
    Complex s;
    if (lambda.exact()) {
        const std::int64_t q = lambda.den;
        const std::int64_t p = ((lambda.num % q) + q) % q;
        auto phase = [q](std::int64_t k) {
            double ang = -kTwoPi * static_cast<double>(static_cast<long double>(k) / q);
            return Complex(std::cos(ang), std::sin(ang));
        };
        std::vector<Complex> table;
        if (q <= (1 << 22)) {
            table.resize(q);
            for (std::int64_t k = 0; k < q; ++k) table[k] = phase(k);
        }
        s = chunked_sum<Complex>(N, [&](std::size_t n) {
            std::int64_t k = static_cast<std::int64_t>((static_cast<__int128>(p) * n) % q);
            return f[n] * (table.empty() ? phase(k) : table[k]);
        });
    } else {
        const long double lam = lambda.value;
        s = chunked_sum<Complex>(N, [&](std::size_t n) {
            long double x = lam * static_cast<long double>(n);
            double fr = static_cast<double>(x - std::floor(x));
            return f[n] * Complex(std::cos(kTwoPi * fr), -std::sin(kTwoPi * fr));
        });
    }
    return s / static_cast<double>(N);
}

double seminorm(const Values& f, std::size_t N) {
    if (N < 1) throw std::invalid_argument("N must be >= 1");
    need(f, N);
    double s = chunked_sum<double>(N, [&](std::size_t n) { return std::norm(f[n]); });
    return std::sqrt(s / static_cast<double>(N));
}

Complex correlation(const Values& f, std::size_t h, std::size_t N) {
    if (N < 1) throw std::invalid_argument("N must be >= 1");
    need(f, N + h);
    return chunked_sum<Complex>(N, [&](std::size_t n) { return std::conj(f[n]) * f[n + h]; }) /
           static_cast<double>(N);
}

std::vector<Complex> correlations(const Values& f, std::size_t H, std::size_t N) {
    need(f, N + H);
    std::size_t M = 1;
    while (M < 2 * N + H) M <<= 1;
    static std::mutex plan_mu;  // FFTW planning is not thread safe
    auto* a = fftw_alloc_complex(M);
    auto* b = fftw_alloc_complex(M);
    fftw_plan pa, pb, pi;
    {
        std::lock_guard lk(plan_mu);
        pa = fftw_plan_dft_1d(static_cast<int>(M), a, a, FFTW_FORWARD, FFTW_ESTIMATE);
        pb = fftw_plan_dft_1d(static_cast<int>(M), b, b, FFTW_FORWARD, FFTW_ESTIMATE);
        pi = fftw_plan_dft_1d(static_cast<int>(M), a, a, FFTW_BACKWARD, FFTW_ESTIMATE);
    }
    for (std::size_t i = 0; i < M; ++i) {
        Complex x = i < N ? f[i] : Complex{};
        Complex y = i < N + H ? f[i] : Complex{};
        a[i][0] = x.real(); a[i][1] = x.imag();
        b[i][0] = y.real(); b[i][1] = y.imag();
    }
    fftw_execute(pa);
    fftw_execute(pb);
    // c[h] = sum conj(a[n]) b[n+h]  <=>  ifft(conj(A) * B)
    for (std::size_t i = 0; i < M; ++i) {
        Complex A(a[i][0], a[i][1]), B(b[i][0], b[i][1]);
        Complex c = std::conj(A) * B;
        a[i][0] = c.real(); a[i][1] = c.imag();
    }
    fftw_execute(pi);
    std::vector<Complex> out(H);
    const double scale = 1.0 / (static_cast<double>(M) * static_cast<double>(N));
    for (std::size_t h = 0; h < H; ++h) out[h] = Complex(a[h][0], a[h][1]) * scale;
    {
        std::lock_guard lk(plan_mu);
        fftw_destroy_plan(pa);
        fftw_destroy_plan(pb);
        fftw_destroy_plan(pi);
    }
    fftw_free(a);
    fftw_free(b);
    return out;
}

Rational tm_correlation_exact(std::uint64_t h) {
    static std::mutex mu;
    static std::map<std::uint64_t, Rational> memo;
    std::lock_guard lk(mu);
    if (memo.empty()) {
        memo[0] = 1;
        // h = 0 in the odd rule reads gamma(1) = -(gamma(0) + gamma(1))/2; solve it
        memo[1] = -memo[0] / 3;
    }
    std::function<Rational(std::uint64_t)> g = [&](std::uint64_t x) -> Rational {
        auto it = memo.find(x);
        if (it != memo.end()) return it->second;
        Rational v = (x % 2 == 0) ? g(x / 2) : Rational(-(g(x / 2) + g(x / 2 + 1)) / 2);
        memo.emplace(x, v);
        return v;
    };
    return g(h);
}

Complex paperfolding_fourier_exact(std::int64_t a, unsigned l) {
    if (l < 2) throw std::invalid_argument("l must be >= 2");
    if (l > 62) throw std::invalid_argument("l too large");
    std::int64_t half = std::int64_t(1) << (l - 1);
    if (a < 0 || a >= half) throw std::domain_error("a out of range for this l");
    // e((1 - 2^{l-2}) (2a+1) / 2^l), reduced exactly mod 2^l
    const __int128 mod = __int128(1) << l;
    __int128 k = (__int128(1) - (__int128(1) << (l - 2))) * (2 * a + 1);
    k %= mod;
    if (k < 0) k += mod;
    double ang = kTwoPi * static_cast<double>(static_cast<long double>(k) / static_cast<long double>(mod));
    double mag = std::ldexp(1.0, -static_cast<int>(l - 1));
    return Complex(mag * std::cos(ang), mag * std::sin(ang));
}

Rational paperfolding_mass(unsigned l) {
    if (l < 2) throw std::invalid_argument("l must be >= 2");
    return Rational(BigInt(1), BigInt(1) << (2 * (l - 1)));
}

Rational paperfolding_parseval_exact() {
    // 2^{l-1} frequencies of mass 4^{-(l-1)} at each level l >= 2: first term 1/2, ratio 1/2
    Rational first = Rational(2) * paperfolding_mass(2), ratio(1, 2);
    return first / (1 - ratio);
}

Rational paperfolding_wiener_exact() {
    // sum over frequencies of mass^2: first term 2 * (1/4)^2, ratio 2/16
    Rational m = paperfolding_mass(2);
    Rational first = Rational(2) * m * m, ratio(1, 8);
    return first / (1 - ratio);
}

double wiener_average(const Values& f, std::size_t N, std::size_t H) {
    if (H < 1 || H > N / 2) throw std::invalid_argument("need 1 <= H <= N/2");
    auto g = correlations(f, H, N);
    double s = 0;
    for (auto& x : g) s += std::norm(x);
    return s / static_cast<double>(H);
}

double trig_poly_abs(const Values& a, std::size_t N, double theta) {
    Complex s = chunked_sum<Complex>(N, [&](std::size_t n) {
        long double x = static_cast<long double>(theta) * n;
        double fr = static_cast<double>(x - std::floor(x));
        return a[n] * Complex(std::cos(kTwoPi * fr), std::sin(kTwoPi * fr));
    });
    return std::abs(s);
}

SupNorm sup_norm_M(const Values& a, std::size_t N, std::size_t grid) {
    need(a, N);
    std::size_t G = std::max(grid, 4 * N);
    static std::mutex plan_mu;
    auto* buf = fftw_alloc_complex(G);
    fftw_plan plan;
    {
        std::lock_guard lk(plan_mu);
        plan = fftw_plan_dft_1d(static_cast<int>(G), buf, buf, FFTW_BACKWARD, FFTW_ESTIMATE);
    }
    for (std::size_t i = 0; i < G; ++i) {
        Complex x = i < N ? a[i] : Complex{};
        buf[i][0] = x.real();
        buf[i][1] = x.imag();
    }
    fftw_execute(plan);  // buf[j] = sum a_n e(+n j / G)
    std::vector<std::pair<double, std::size_t>> mags(G);
    for (std::size_t j = 0; j < G; ++j) mags[j] = {std::hypot(buf[j][0], buf[j][1]), j};
    {
        std::lock_guard lk(plan_mu);
        fftw_destroy_plan(plan);
    }
    fftw_free(buf);
    std::size_t top = std::min<std::size_t>(8, G);
    std::partial_sort(mags.begin(), mags.begin() + top, mags.end(), std::greater<>());
    SupNorm out;
    out.sqrt_n = std::sqrt(static_cast<double>(N));
    out.value = mags[0].first;
    out.theta = static_cast<double>(mags[0].second) / G;
    const double phi = (std::sqrt(5.0) - 1) / 2;
    for (std::size_t t = 0; t < top; ++t) {
        double c = static_cast<double>(mags[t].second) / G, h = 1.0 / G;
        double lo = c - h, hi = c + h;
        double x1 = hi - phi * (hi - lo), x2 = lo + phi * (hi - lo);
        double f1 = trig_poly_abs(a, N, x1), f2 = trig_poly_abs(a, N, x2);
        for (int it = 0; it < 40; ++it) {
            if (f1 > f2) {
                hi = x2; x2 = x1; f2 = f1;
                x1 = hi - phi * (hi - lo);
                f1 = trig_poly_abs(a, N, x1);
            } else {
                lo = x1; x1 = x2; f1 = f2;
                x2 = lo + phi * (hi - lo);
                f2 = trig_poly_abs(a, N, x2);
            }
        }
        double x = (lo + hi) / 2, v = trig_poly_abs(a, N, x);
        if (v > out.value) {
            out.value = v;
            out.theta = x - std::floor(x);
        }
    }
    return out;
}

BesselReport bessel_report(const Values& f, const std::vector<Frequency>& lambdas, std::size_t N) {
    std::set<std::pair<std::int64_t, std::int64_t>> ex;
    std::set<double> re;
    for (auto& l : lambdas) {
        bool fresh = l.exact() ? ex.emplace(l.num, l.den).second : re.insert(l.value).second;
        if (!fresh) throw std::invalid_argument("frequencies must be distinct");
    }
    BesselReport r;
    for (auto& l : lambdas) r.coefficient_sum += std::norm(fourier_bohr(f, l, N));
    double nrm = seminorm(f, N);
    r.norm_sq = nrm * nrm;
    r.gap = r.norm_sq - r.coefficient_sum;
    return r;
}

}  // namespace autoseq
