#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "autoseq/sequence.hpp"

namespace autoseq {

struct ComplexityProfile {
    std::size_t n_max = 0;
    std::size_t prefix_len = 0;
    std::size_t alphabet_size = 0;
    std::vector<std::uint64_t> p;      // p[n] for n = 0..n_max (p[0] = 1)
    std::vector<std::int64_t> diff;    // diff[n] = p[n+1] - p[n], n = 1..n_max-1
    bool saturated = true;             // unchanged when the prefix is doubled
    std::vector<std::size_t> unstable; // lengths that moved under doubling

    std::uint64_t at(std::size_t n) const { return p.at(n); }
    std::string to_csv() const;
};

// Counts on a fixed word, no stability gate.
ComplexityProfile profile_of_word(const Word& w, std::size_t alphabet_size, std::size_t n_max);
// Counts on prefix_len terms and re-counts on 2*prefix_len to set `saturated`.
ComplexityProfile profile(const SequenceHandle& s, std::size_t n_max, std::size_t prefix_len);
// Double loop over factors, for cross-checking.
std::vector<std::uint64_t> profile_naive(const Word& w, std::size_t n_max);

enum class SturmianVariant { Floor, Ceil };

struct SturmianWord {
    Word word;                          // over {0,1}
    std::vector<std::size_t> flagged;   // n where n*alpha+beta is within 1e-9 of an integer
};
SturmianWord sturmian(double alpha, double beta, SturmianVariant v, std::size_t n);
SequenceHandle sturmian_handle(double alpha, double beta, SturmianVariant v = SturmianVariant::Floor);

struct EntropyEstimate {
    double value = 0;
    std::vector<double> trend;  // log p(n) / (n log |A|) for n = 1..n_max
};
EntropyEstimate entropy_estimate(const ComplexityProfile& prof);

struct MorseHedlund {
    bool periodic_evidence = false;
    std::optional<std::size_t> witness;  // n with p(n) <= n
};
MorseHedlund morse_hedlund_check(const ComplexityProfile& prof);

// least-squares slope of log p(n) against log n over [n_lo, n_hi]
double fitted_exponent(const ComplexityProfile& prof, std::size_t n_lo, std::size_t n_hi);

}  // namespace autoseq
