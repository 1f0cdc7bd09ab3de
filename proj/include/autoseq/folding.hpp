#pragma once

#include <string>
#include <vector>

#include "autoseq/rational.hpp"
#include "autoseq/words.hpp"

namespace autoseq {

// Turn words live over {L, R}: L = 0, R = 1.
const Alphabet& turn_alphabet();
Word turns(const std::string& text);

Word fold(const Word& w, int sign);

// Sign sequence eps_1 eps_2 ...: "+-" repeats forever, "++(+-)" is a
// preperiod followed by a period, "=+-+" is an explicit finite list.
struct SignSpec {
    std::vector<int> pre;
    std::vector<int> period;
    bool finite = false;

    static SignSpec parse(const std::string& text);
    static SignSpec periodic(std::vector<int> period);
    int at(std::size_t i) const;  // eps_{i+1}
    std::string str() const;
};

// First n letters of F_{eps_1}(F_{eps_2}(...F_{eps_d}(empty)))
Word paperfold_sequence(const SignSpec& signs, std::size_t n);

// Continued fractions [0; a_1, ..., a_n]
using CFWord = std::vector<long long>;

Rational cf_value(const CFWord& w);
BigInt cf_denominator(const CFWord& w);
CFWord cf_normalize(CFWord w);           // [.., a, 1] -> [.., a+1]
CFWord cf_fold_step(const CFWord& w);    // [a_1..a_n] -> [a_1..a_n + 1, a_n - 1, a_{n-1}..a_1]
CFWord cf_of_series(long long g, unsigned depth);  // quotients of sum_{n<depth} g^{-2^n}
CFWord cf_euclid(const Rational& x);     // 0 < x < 1
std::string cf_render(const CFWord& w, bool leading_zero = true);

// Orientation of the junctions created by the folds, read back from the
// quotient values of cf_of_series(g, .): 1 for a_j + 1 | a_{j+1} - 1, 0 for the mirror.
Word cf_fold_arrows(const CFWord& w, long long g);

}  // namespace autoseq
