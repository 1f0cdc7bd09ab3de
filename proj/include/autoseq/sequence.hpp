#pragma once

#include <complex>
#include <functional>
#include <string>
#include <vector>

#include "autoseq/words.hpp"

namespace autoseq {

using Complex = std::complex<double>;

// Named lazy infinite sequence. Symbolic sequences carry an alphabet and a
// prefix generator; the numeric cast is optional. Purely numeric ones
// (e(alpha n) and friends) only have `numeric`.
struct SequenceHandle {
    std::string name;
    Alphabet alphabet;
    std::function<Word(std::size_t)> generator;
    std::function<Complex(Symbol)> cast;                         // letter -> value
    std::function<std::vector<Complex>(std::size_t)> numeric;    // n -> first n values
    double bound = 1.0;

    bool symbolic() const { return static_cast<bool>(generator); }
    bool has_values() const { return static_cast<bool>(cast) || static_cast<bool>(numeric); }

    Word prefix(std::size_t n) const;
    std::vector<Complex> values(std::size_t n) const;
    std::string render(std::size_t n) const { return alphabet.render(prefix(n)); }
};

}  // namespace autoseq
