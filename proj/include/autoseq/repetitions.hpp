#pragma once

#include <optional>

#include "autoseq/rational.hpp"
#include "autoseq/sequence.hpp"

namespace autoseq {

struct RepetitionFinding {
    std::size_t position = 0;
    std::size_t period = 0;
    std::size_t length = 0;  // matched length = exponent * period
    Rational exponent;
    Word witness;
};

// Leftmost (then shortest-period) square ww with min_period <= |w| <= max_period.
std::optional<RepetitionFinding> find_square(const Word& w, std::size_t min_period, std::size_t max_period);
std::optional<RepetitionFinding> find_square(const SequenceHandle& s, std::size_t n, std::size_t min_period,
                                             std::size_t max_period);

// Leftmost overlap wwx (x the first letter of w), periods up to max_period.
std::optional<RepetitionFinding> has_overlap(const Word& w, std::size_t max_period);
std::optional<RepetitionFinding> has_overlap(const SequenceHandle& s, std::size_t n, std::size_t max_period);

// Largest length/period over all repetitions in the prefix; finding carries the witness.
RepetitionFinding critical_exponent(const Word& w, std::size_t max_period);
Rational critical_exponent_lower_bound(const SequenceHandle& s, std::size_t n, std::size_t max_period);

// brute force, for cross-checking
std::optional<RepetitionFinding> find_square_naive(const Word& w, std::size_t min_period, std::size_t max_period);

}  // namespace autoseq
