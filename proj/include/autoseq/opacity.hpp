#pragma once

#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "autoseq/rational.hpp"

namespace autoseq {

// Automaton on {+, -} with optional real outputs.
struct SignedAutomaton {
    std::vector<std::string> states;
    std::size_t initial = 0;
    std::vector<std::size_t> plus, minus;  // successor on + / on -
    std::vector<Rational> output;          // empty when outputs are not given

    std::size_t size() const { return states.size(); }
    std::size_t next(std::size_t s, int sign) const { return sign > 0 ? plus[s] : minus[s]; }
    std::size_t state_index(const std::string& name) const;
    void validate() const;

    // automaton JSON with k = 2; digit 1 = +, digit 0 = -
    static SignedAutomaton from_json(const nlohmann::json& j);
    nlohmann::json to_json() const;

    static SignedAutomaton identity();   // A +->A -->B, B +->A -->B
    static SignedAutomaton constant();   // A +->A -->A
    static SignedAutomaton thue_morse(); // A +->A -->B, B +->B -->A
    static SignedAutomaton worked();     // three-state example with opacity 1/sqrt 2
};

struct Classification {
    bool strongly_connected = false;
    bool homogeneous = false;     // every state has exactly two incoming arrows
    bool extended_class = false;  // every state is of kind a, b or c
    std::vector<char> kind;       // 'a' one + and one - in, 'b' only +, 'c' only -, '?' otherwise
    bool theorem_applies() const { return strongly_connected && (homogeneous || extended_class); }
};
Classification classify(const SignedAutomaton& aut);

// Ultimately periodic sign sequence: "pre(period)" or just "period".
struct UPSignal {
    std::vector<int> pre, period;
    static UPSignal parse(const std::string& text);
    int at(std::size_t i) const;
    std::string str() const;
};

// states reached after each of the first n inputs
std::vector<std::size_t> run(const SignedAutomaton& aut, const UPSignal& eps, std::size_t n);
// same, preceded by the initial state
std::vector<std::size_t> run_with_initial(const SignedAutomaton& aut, const UPSignal& eps, std::size_t n);

// squared limiting distortion with the optimal relabelling, exactly
Rational distortion_sq(const SignedAutomaton& aut, const UPSignal& eps);
Rational distortion_sq_from(const SignedAutomaton& aut, std::size_t start, const std::vector<int>& period);
double distortion(const SignedAutomaton& aut, const UPSignal& eps);

struct OpacityResult {
    Rational squared;                 // max 2 nu / l
    double value = 0;                 // its square root
    std::vector<std::size_t> strong;  // an optimal strong set T
    std::size_t length = 0;           // l_min(T)
};

struct OpacityLimits {
    std::size_t max_states = 24;
    std::size_t max_candidates = 20;
};

OpacityResult opacity_formula(const SignedAutomaton& aut, const OpacityLimits& lim = {});
// shortest closed-walk length that enters each state of T by both a + and a - arrow
std::optional<std::size_t> min_closed_walk(const SignedAutomaton& aut, const std::vector<std::size_t>& T);

struct OpacitySearch {
    double value = 0;
    Rational squared;
    std::vector<int> period;
    std::size_t start = 0;
};
// max distortion over all periods of length <= p_max and all reachable phase states
OpacitySearch opacity_lower_estimate(const SignedAutomaton& aut, std::size_t p_max);

}  // namespace autoseq
