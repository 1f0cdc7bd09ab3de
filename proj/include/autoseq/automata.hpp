#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

#include "autoseq/sequence.hpp"
#include "autoseq/words.hpp"

namespace autoseq {

enum class Reading { Direct, Reverse };

// Finite automaton with output reading base-k digits.
// delta[s][d] is the successor of state s on digit d. An output of
// nullopt marks a placeholder ("any value") state.
struct KAutomaton {
    unsigned k = 2;
    Reading reading = Reading::Reverse;
    std::vector<std::string> states;
    std::size_t initial = 0;
    std::vector<std::vector<std::size_t>> delta;
    Alphabet outputs;
    std::vector<std::optional<Symbol>> output;

    std::size_t state_index(std::string_view name) const;
    std::size_t size() const { return states.size(); }
    void validate() const;

    static KAutomaton from_json(const nlohmann::json& j);
    nlohmann::json to_json() const;
};

// base-k expansion, most significant digit first; n = 0 gives the empty word
std::vector<unsigned> digits_of(std::uint64_t n, unsigned k);
std::vector<unsigned> parse_digits(std::string_view text, unsigned k);

// state reached on the written digit word (honours the reading mode)
std::size_t run_digits(const KAutomaton& aut, const std::vector<unsigned>& digits);
Symbol eval_digits(const KAutomaton& aut, const std::vector<unsigned>& digits);
Symbol eval(const KAutomaton& aut, std::uint64_t n);
Word generate(const KAutomaton& aut, std::size_t n_max);

// true when padding with leading zeros never changes the output (checked for n < limit)
bool leading_zero_invariant(const KAutomaton& aut, std::uint64_t limit, unsigned pad = 3);

KAutomaton from_uniform_morphism(const Morphism& m, Symbol seed, const Coding& c);

KAutomaton kernel_automaton(const SequenceHandle& s, unsigned k, std::size_t witness_len,
                            std::size_t max_states);

// tm-rev, paperfold-rev, paperfold-direct, rudin-shapiro-rev,
// period-doubling-rev, hanoi-rev, cf(g), worked-example
KAutomaton builtin(std::string_view name);
std::vector<std::string> builtin_names();

}  // namespace autoseq
