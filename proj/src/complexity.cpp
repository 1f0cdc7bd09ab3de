#include "autoseq/complexity.hpp"

#include <algorithm>
#include <cmath>
#include <set>
#include <sstream>
#include <stdexcept>

#include "autoseq/parallel.hpp"

namespace autoseq {

namespace {

constexpr std::uint64_t kMod = (std::uint64_t(1) << 61) - 1;

std::uint64_t mulmod(std::uint64_t a, std::uint64_t b) {
    unsigned __int128 x = static_cast<unsigned __int128>(a) * b;
    std::uint64_t lo = static_cast<std::uint64_t>(x & kMod), hi = static_cast<std::uint64_t>(x >> 61);
    std::uint64_t r = lo + hi;
    return r >= kMod ? r - kMod : r;
}

// distinct factors of length n, via sorted rolling hashes; equal hashes are
// verified letter by letter so a collision cannot merge two factors
std::uint64_t count_factors(const Word& w, std::size_t n) {
    if (n == 0) return 1;
    if (w.size() < n) return 0;
    const std::uint64_t base = 1000003;
    std::uint64_t pw = 1;
    for (std::size_t i = 0; i < n; ++i) pw = mulmod(pw, base);
    std::vector<std::pair<std::uint64_t, std::size_t>> hs;
    hs.reserve(w.size() - n + 1);
    std::uint64_t h = 0;
    for (std::size_t i = 0; i < w.size(); ++i) {
        h = mulmod(h, base) + w[i] + 1;
        if (h >= kMod) h -= kMod;
        if (i >= n) {
            std::uint64_t sub = mulmod(w[i - n] + 1, pw);
            h = h >= sub ? h - sub : h + kMod - sub;
        }
        if (i + 1 >= n) hs.emplace_back(h, i + 1 - n);
    }
    std::sort(hs.begin(), hs.end());
    std::uint64_t count = 0;
    auto same = [&](std::size_t a, std::size_t b) { return std::equal(w.begin() + a, w.begin() + a + n, w.begin() + b); };
    for (std::size_t i = 0; i < hs.size();) {
        std::size_t j = i;
        while (j < hs.size() && hs[j].first == hs[i].first) ++j;
        std::vector<std::size_t> reps;
        for (std::size_t t = i; t < j; ++t) {
            bool found = false;
            for (auto r : reps)
                if ((found = same(r, hs[t].second))) break;
            if (!found) reps.push_back(hs[t].second);
        }
        count += reps.size();
        i = j;
    }
    return count;
}

}  // namespace

ComplexityProfile profile_of_word(const Word& w, std::size_t alphabet_size, std::size_t n_max) {
    ComplexityProfile prof;
    prof.n_max = n_max;
    prof.prefix_len = w.size();
    prof.alphabet_size = alphabet_size;
    prof.p.assign(n_max + 1, 0);
    parallel_for(n_max + 1, [&](std::size_t n) { prof.p[n] = count_factors(w, n); });
    prof.diff.assign(n_max + 1, 0);
    for (std::size_t n = 1; n < n_max; ++n)
        prof.diff[n] = static_cast<std::int64_t>(prof.p[n + 1]) - static_cast<std::int64_t>(prof.p[n]);
    return prof;
}

ComplexityProfile profile(const SequenceHandle& s, std::size_t n_max, std::size_t prefix_len) {
    if (prefix_len < 4 * n_max) throw std::invalid_argument("prefix_len must be at least 4 * n_max");
    Word w2 = s.prefix(2 * prefix_len);
    Word w(w2.begin(), w2.begin() + prefix_len);
    auto prof = profile_of_word(w, s.alphabet.size(), n_max);
    auto twice = profile_of_word(w2, s.alphabet.size(), n_max);
    for (std::size_t n = 1; n <= n_max; ++n)
        if (prof.p[n] != twice.p[n]) prof.unstable.push_back(n);
    prof.saturated = prof.unstable.empty();
    return prof;
}

std::vector<std::uint64_t> profile_naive(const Word& w, std::size_t n_max) {
    std::vector<std::uint64_t> p(n_max + 1, 0);
    p[0] = 1;
    for (std::size_t n = 1; n <= n_max && n <= w.size(); ++n) {
        std::set<Word> seen;
        for (std::size_t i = 0; i + n <= w.size(); ++i) seen.emplace(w.begin() + i, w.begin() + i + n);
        p[n] = seen.size();
    }
    return p;
}

std::string ComplexityProfile::to_csv() const {
    std::ostringstream out;
    out << "n,p,diff\n";
    for (std::size_t n = 1; n <= n_max; ++n) {
        out << n << ',' << p[n] << ',';
        if (n < n_max) out << diff[n];
        out << '\n';
    }
    return out.str();
}

SturmianWord sturmian(double alpha, double beta, SturmianVariant v, std::size_t n) {
    SturmianWord out;
    out.word.resize(n);
    const long double a = alpha, b = beta;
    auto edge = [&](std::size_t i) {
        // n*alpha + beta with an fma-compensated product
        long double prod = static_cast<long double>(i) * a;
        long double err = std::fma(static_cast<long double>(i), a, -prod);
        long double x = prod + b + err;
        long double r = std::round(x);
        if (std::fabs(x - r) < 1e-9L) out.flagged.push_back(i);
        return v == SturmianVariant::Floor ? std::floor(x) : std::ceil(x);
    };
    long double prev = edge(0);
    for (std::size_t i = 0; i < n; ++i) {
        long double next = edge(i + 1);
        out.word[i] = static_cast<Symbol>(next - prev);
        prev = next;
    }
    std::sort(out.flagged.begin(), out.flagged.end());
    out.flagged.erase(std::unique(out.flagged.begin(), out.flagged.end()), out.flagged.end());
    return out;
}

SequenceHandle sturmian_handle(double alpha, double beta, SturmianVariant v) {
    SequenceHandle h;
    h.name = "sturmian";
    h.alphabet = Alphabet{"0", "1"};
    h.generator = [=](std::size_t n) { return sturmian(alpha, beta, v, n).word; };
    h.cast = [](Symbol s) { return Complex(s == 0 ? 1.0 : -1.0); };
    return h;
}

EntropyEstimate entropy_estimate(const ComplexityProfile& prof) {
    if (prof.n_max < 8) throw std::invalid_argument("entropy estimate needs n_max >= 8");
    EntropyEstimate e;
    double la = std::log(static_cast<double>(std::max<std::size_t>(prof.alphabet_size, 2)));
    for (std::size_t n = 1; n <= prof.n_max; ++n)
        e.trend.push_back(std::log(static_cast<double>(prof.p[n])) / (static_cast<double>(n) * la));
    e.value = e.trend.back();
    return e;
}

MorseHedlund morse_hedlund_check(const ComplexityProfile& prof) {
    MorseHedlund m;
    for (std::size_t n = 1; n <= prof.n_max; ++n)
        if (prof.p[n] <= n) {
            m.periodic_evidence = true;
            m.witness = n;
            break;
        }
    return m;
}

double fitted_exponent(const ComplexityProfile& prof, std::size_t n_lo, std::size_t n_hi) {
    double sx = 0, sy = 0, sxx = 0, sxy = 0, k = 0;
    for (std::size_t n = n_lo; n <= n_hi && n <= prof.n_max; ++n) {
        double x = std::log(static_cast<double>(n)), y = std::log(static_cast<double>(prof.p[n]));
        sx += x; sy += y; sxx += x * x; sxy += x * y; k += 1;
    }
    return (k * sxy - sx * sy) / (k * sxx - sx * sx);
}

}  // namespace autoseq
