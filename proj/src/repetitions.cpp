#include "autoseq/repetitions.hpp"

#include <stdexcept>

#include "autoseq/parallel.hpp"

namespace autoseq {

namespace {

RepetitionFinding make_finding(const Word& w, std::size_t pos, std::size_t period, std::size_t length) {
    RepetitionFinding f;
    f.position = pos;
    f.period = period;
    f.length = length;
    f.exponent = Rational(static_cast<long long>(length), static_cast<long long>(period));
    f.witness.assign(w.begin() + pos, w.begin() + pos + length);
    return f;
}

// For one period p: leftmost start of a run of at least `need` matches w[j] == w[j+p].
std::optional<std::size_t> first_run(const Word& w, std::size_t p, std::size_t need) {
    if (w.size() <= p) return std::nullopt;
    std::size_t run = 0;
    for (std::size_t j = 0; j + p < w.size(); ++j) {
        run = (w[j] == w[j + p]) ? run + 1 : 0;
        if (run >= need) return j + 1 - need;
    }
    return std::nullopt;
}

std::optional<RepetitionFinding> leftmost(const Word& w, std::size_t pmin, std::size_t pmax, bool overlap) {
    if (pmin < 1 || pmin > pmax) throw std::invalid_argument("need 1 <= min_period <= max_period");
    pmax = std::min(pmax, w.size() / 2);
    if (pmax < pmin) return std::nullopt;
    std::vector<std::optional<std::size_t>> hit(pmax - pmin + 1);
    parallel_for(hit.size(), [&](std::size_t i) {
        std::size_t p = pmin + i;
        hit[i] = first_run(w, p, overlap ? p + 1 : p);
    });
    std::optional<RepetitionFinding> best;
    for (std::size_t i = 0; i < hit.size(); ++i) {
        if (!hit[i]) continue;
        std::size_t p = pmin + i;
        if (!best || *hit[i] < best->position)
            best = make_finding(w, *hit[i], p, overlap ? 2 * p + 1 : 2 * p);
    }
    return best;
}

}  // namespace

std::optional<RepetitionFinding> find_square(const Word& w, std::size_t min_period, std::size_t max_period) {
    return leftmost(w, min_period, max_period, false);
}

std::optional<RepetitionFinding> find_square(const SequenceHandle& s, std::size_t n, std::size_t min_period,
                                             std::size_t max_period) {
    return find_square(s.prefix(n), min_period, max_period);
}

std::optional<RepetitionFinding> has_overlap(const Word& w, std::size_t max_period) {
    return leftmost(w, 1, max_period, true);
}

std::optional<RepetitionFinding> has_overlap(const SequenceHandle& s, std::size_t n, std::size_t max_period) {
    return has_overlap(s.prefix(n), max_period);
}

RepetitionFinding critical_exponent(const Word& w, std::size_t max_period) {
    if (w.empty()) throw std::invalid_argument("empty word");
    if (max_period < 1 || max_period > w.size() / 2 + (w.size() < 2))
        throw std::invalid_argument("need 1 <= max_period <= n/2");
    struct Best {
        std::size_t len = 0, pos = 0;
    };
    std::vector<Best> per(max_period);
    parallel_for(max_period, [&](std::size_t i) {
        std::size_t p = i + 1;
        Best b{p, 0};
        std::size_t run = 0;
        for (std::size_t j = 0; j + p < w.size(); ++j) {
            run = (w[j] == w[j + p]) ? run + 1 : 0;
            if (run + p > b.len) b = {run + p, j + 1 - run};
        }
        per[i] = b;
    });
    std::size_t bp = 1;
    for (std::size_t p = 1; p <= max_period; ++p) {
        // compare len/p with best len/bp
        if (per[p - 1].len * bp > per[bp - 1].len * p) bp = p;
    }
    return make_finding(w, per[bp - 1].pos, bp, per[bp - 1].len);
}

Rational critical_exponent_lower_bound(const SequenceHandle& s, std::size_t n, std::size_t max_period) {
    return critical_exponent(s.prefix(n), max_period).exponent;
}

std::optional<RepetitionFinding> find_square_naive(const Word& w, std::size_t min_period, std::size_t max_period) {
    for (std::size_t i = 0; i < w.size(); ++i)
        for (std::size_t p = min_period; p <= max_period && i + 2 * p <= w.size(); ++p) {
            bool eq = true;
            for (std::size_t t = 0; t < p && eq; ++t) eq = w[i + t] == w[i + p + t];
            if (eq) return make_finding(w, i, p, 2 * p);
        }
    return std::nullopt;
}

}  // namespace autoseq
