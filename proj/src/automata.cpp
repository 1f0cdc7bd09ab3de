#include "autoseq/automata.hpp"

#include <map>
#include <stdexcept>

namespace autoseq {

std::size_t KAutomaton::state_index(std::string_view name) const {
    for (std::size_t i = 0; i < states.size(); ++i)
        if (states[i] == name) return i;
    throw std::domain_error("unknown state '" + std::string(name) + "'");
}

void KAutomaton::validate() const {
    if (k < 2) throw std::invalid_argument("base must be >= 2");
    if (states.empty() || initial >= states.size()) throw std::invalid_argument("bad initial state");
    if (delta.size() != states.size() || output.size() != states.size())
        throw std::invalid_argument("transition/output tables must cover every state");
    for (auto& row : delta) {
        if (row.size() != k) throw std::invalid_argument("each state needs k transitions");
        for (auto t : row)
            if (t >= states.size()) throw std::invalid_argument("transition to unknown state");
    }
    for (auto& o : output)
        if (o && *o >= outputs.size()) throw std::invalid_argument("output outside output alphabet");
}

KAutomaton KAutomaton::from_json(const nlohmann::json& j) {
    KAutomaton a;
    a.k = j.at("k").get<unsigned>();
    auto rd = j.value("reading", std::string("reverse"));
    if (rd == "reverse") a.reading = Reading::Reverse;
    else if (rd == "direct") a.reading = Reading::Direct;
    else throw std::invalid_argument("reading must be 'direct' or 'reverse'");
    a.states = j.at("states").get<std::vector<std::string>>();
    a.initial = a.state_index(j.at("initial").get<std::string>());
    auto& tr = j.at("transitions");
    for (auto& s : a.states) {
        std::vector<std::size_t> row;
        for (auto& t : tr.at(s)) row.push_back(a.state_index(t.get<std::string>()));
        a.delta.push_back(row);
    }
    std::vector<std::string> outs;
    std::vector<std::optional<std::string>> raw;
    auto& out = j.at("output");
    for (auto& s : a.states) {
        if (!out.contains(s) || out.at(s).is_null()) {
            raw.emplace_back();
            continue;
        }
        auto& v = out.at(s);
        std::string str = v.is_string() ? v.get<std::string>() : v.dump();
        raw.emplace_back(str);
        bool seen = false;
        for (auto& o : outs) seen |= o == str;
        if (!seen) outs.push_back(str);
    }
    if (outs.empty()) throw std::invalid_argument("automaton has no defined outputs");
    a.outputs = Alphabet(outs);
    for (auto& r : raw) a.output.push_back(r ? std::optional<Symbol>(a.outputs.index(*r)) : std::nullopt);
    a.validate();
    return a;
}

nlohmann::json KAutomaton::to_json() const {
    nlohmann::json j;
    j["k"] = k;
    j["reading"] = reading == Reading::Reverse ? "reverse" : "direct";
    j["initial"] = states[initial];
    j["states"] = states;
    nlohmann::json tr = nlohmann::json::object(), out = nlohmann::json::object();
    for (std::size_t s = 0; s < states.size(); ++s) {
        std::vector<std::string> row;
        for (auto t : delta[s]) row.push_back(states[t]);
        tr[states[s]] = row;
        out[states[s]] = output[s] ? nlohmann::json(outputs.letter(*output[s])) : nlohmann::json(nullptr);
    }
    j["transitions"] = tr;
    j["output"] = out;
    return j;
}

std::vector<unsigned> digits_of(std::uint64_t n, unsigned k) {
    std::vector<unsigned> d;
    while (n) {
        d.push_back(static_cast<unsigned>(n % k));
        n /= k;
    }
    return {d.rbegin(), d.rend()};
}

std::vector<unsigned> parse_digits(std::string_view text, unsigned k) {
    std::vector<unsigned> d;
    for (char c : text) {
        unsigned v;
        if (c >= '0' && c <= '9') v = c - '0';
        else if (c >= 'a' && c <= 'z') v = 10 + (c - 'a');
        else throw std::invalid_argument("bad digit character");
        if (v >= k) throw std::invalid_argument("digit exceeds base");
        d.push_back(v);
    }
    return d;
}

std::size_t run_digits(const KAutomaton& aut, const std::vector<unsigned>& digits) {
    std::size_t s = aut.initial;
    if (aut.reading == Reading::Direct) {
        for (unsigned d : digits) s = aut.delta[s][d];
    } else {
        for (auto it = digits.rbegin(); it != digits.rend(); ++it) s = aut.delta[s][*it];
    }
    return s;
}

Symbol eval_digits(const KAutomaton& aut, const std::vector<unsigned>& digits) {
    auto s = run_digits(aut, digits);
    if (!aut.output[s]) throw std::domain_error("undefined output (placeholder state " + aut.states[s] + ")");
    return *aut.output[s];
}

Symbol eval(const KAutomaton& aut, std::uint64_t n) {
    return eval_digits(aut, digits_of(n, aut.k));
}

Word generate(const KAutomaton& aut, std::size_t n_max) {
    Word w(n_max);
    for (std::size_t n = 0; n < n_max; ++n) w[n] = eval(aut, n);
    return w;
}

bool leading_zero_invariant(const KAutomaton& aut, std::uint64_t limit, unsigned pad) {
    for (std::uint64_t n = 0; n < limit; ++n) {
        auto d = digits_of(n, aut.k);
        auto base = aut.output[run_digits(aut, d)];
        for (unsigned z = 1; z <= pad; ++z) {
            d.insert(d.begin(), 0u);
            if (aut.output[run_digits(aut, d)] != base) return false;
        }
    }
    return true;
}

KAutomaton from_uniform_morphism(const Morphism& m, Symbol seed, const Coding& c) {
    auto k = m.uniform_length();
    if (k < 2) throw std::domain_error("morphism is not uniform of length >= 2");
    if (!m.is_prolongable(seed)) throw std::domain_error("no fixed point from seed");
    if (!(c.source == m.alphabet())) throw std::invalid_argument("coding source must be the morphism alphabet");
    KAutomaton a;
    a.k = static_cast<unsigned>(k);
    a.reading = Reading::Direct;
    a.states = m.alphabet().letters();
    a.initial = seed;
    a.outputs = c.target;
    for (Symbol s = 0; s < m.alphabet().size(); ++s) {
        const Word& im = m.image(s);
        a.delta.emplace_back(im.begin(), im.end());
        a.output.emplace_back(c(s));
    }
    a.validate();
    return a;
}

KAutomaton kernel_automaton(const SequenceHandle& s, unsigned k, std::size_t witness_len,
                            std::size_t max_states) {
    if (witness_len < 1) throw std::invalid_argument("witness_len must be >= 1");
    if (k < 2) throw std::invalid_argument("base must be >= 2");
    const std::size_t prefix_cap = std::size_t(1) << 26;
    Word u;
    auto need = [&](std::size_t len) {
        if (len > prefix_cap)
            throw std::domain_error("kernel exceeds max_states (sequence may not be k-automatic at this witness length)");
        if (u.size() < len) u = s.prefix(std::max(len, 2 * u.size()));
    };

    struct Node {
        std::uint64_t ke;  // k^e
        std::uint64_t r;
    };
    std::vector<Node> nodes;
    std::map<Word, std::size_t> seen;
    auto signature = [&](const Node& nd) {
        need(nd.ke * witness_len);
        Word v(witness_len);
        for (std::size_t m = 0; m < witness_len; ++m) v[m] = u[nd.ke * m + nd.r];
        return v;
    };
    auto intern = [&](const Node& nd) -> std::size_t {
        auto sig = signature(nd);
        auto it = seen.find(sig);
        if (it != seen.end()) return it->second;
        if (nodes.size() >= max_states)
            throw std::domain_error("kernel exceeds max_states (sequence may not be k-automatic at this witness length)");
        nodes.push_back(nd);
        seen.emplace(std::move(sig), nodes.size() - 1);
        return nodes.size() - 1;
    };

    intern({1, 0});
    KAutomaton a;
    a.k = k;
    a.reading = Reading::Reverse;
    a.outputs = s.alphabet;
    a.initial = 0;
    for (std::size_t i = 0; i < nodes.size(); ++i) {
        std::vector<std::size_t> row;
        for (unsigned d = 0; d < k; ++d) {
            Node nd = nodes[i];
            row.push_back(intern({nd.ke * k, nd.r + d * nd.ke}));
        }
        a.delta.push_back(row);
    }
    for (std::size_t i = 0; i < nodes.size(); ++i) {
        a.states.push_back("q" + std::to_string(i));
        a.output.emplace_back(u[nodes[i].r]);
    }
    a.validate();
    need(witness_len);
    for (std::size_t n = 0; n < witness_len; ++n)
        if (eval(a, n) != u[n]) throw std::domain_error("kernel automaton failed prefix verification");
    return a;
}

namespace {

KAutomaton make(unsigned k, Reading rd, std::vector<std::string> states,
                std::vector<std::vector<std::string>> trans, Alphabet outs,
                std::vector<std::string> out) {
    KAutomaton a;
    a.k = k;
    a.reading = rd;
    a.states = std::move(states);
    a.initial = 0;
    a.outputs = std::move(outs);
    for (std::size_t s = 0; s < a.states.size(); ++s) {
        std::vector<std::size_t> row;
        for (auto& t : trans[s]) row.push_back(a.state_index(t));
        a.delta.push_back(row);
        a.output.push_back(out[s].empty() ? std::nullopt : std::optional<Symbol>(a.outputs.index(out[s])));
    }
    a.validate();
    return a;
}

}  // namespace

KAutomaton builtin(std::string_view name) {
    const auto R = Reading::Reverse, D = Reading::Direct;
    if (name == "tm-rev")
        return make(2, R, {"A", "B"}, {{"A", "B"}, {"B", "A"}}, Alphabet{"0", "1"}, {"0", "1"});
    if (name == "paperfold-rev")
        return make(2, R, {"A", "B", "C", "D"}, {{"B", "A"}, {"C", "D"}, {"C", "C"}, {"D", "D"}},
                    Alphabet{"0", "1"}, {"1", "1", "1", "0"});
    if (name == "paperfold-direct")
        return make(2, D, {"A'", "B'", "C'", "D'"}, {{"A'", "B'"}, {"C'", "B'"}, {"A'", "D'"}, {"C'", "D'"}},
                    Alphabet{"a", "b"}, {"a", "a", "b", "b"});
    if (name == "rudin-shapiro-rev")
        return make(2, R, {"A", "B", "C", "D"}, {{"A", "B"}, {"A", "C"}, {"D", "B"}, {"D", "C"}},
                    Alphabet{"+", "-"}, {"+", "+", "-", ""});
    if (name == "period-doubling-rev")
        return make(2, R, {"A", "B", "C", "D"}, {{"C", "B"}, {"D", "A"}, {"C", "C"}, {"D", "D"}},
                    Alphabet{"0", "1"}, {"0", "1", "0", "1"});
    if (name == "hanoi-rev")
        return make(2, R, {"A", "B", "C", "D", "E", "F", "G", "H", "J", "K", "L", "M", "N", "P"},
                    {{"B", "J"}, {"A", "C"}, {"D", "H"}, {"C", "E"}, {"F", "D"}, {"E", "G"}, {"H", "F"},
                     {"G", "C"}, {"P", "K"}, {"L", "J"}, {"K", "M"}, {"N", "L"}, {"M", "P"}, {"J", "N"}},
                    Alphabet{"a", "b", "c", "ā", "b̄", "c̄"},
                    {"", "", "c̄", "c̄", "ā", "ā", "b̄", "b̄", "a", "b", "b", "c", "c", "a"});
    if (name == "worked-example")
        return make(2, R, {"A", "B", "C"}, {{"A", "B"}, {"C", "A"}, {"A", "C"}}, Alphabet{"0", "1"},
                    {"0", "0", "1"});
    if (name.substr(0, 3) == "cf(" && name.back() == ')') {
        int g = std::stoi(std::string(name.substr(3, name.size() - 4)));
        if (g < 3) throw std::domain_error("cf(g) needs g >= 3");
        auto str = [](int v) { return std::to_string(v); };
        std::vector<std::string> vals{str(g - 2), str(g), str(g + 2)};
        return make(2, D, {"A", "B", "C", "D", "E", "F", "G", "H"},
                    {{"A", "B"}, {"C", "D"}, {"E", "F"}, {"C", "D"}, {"A", "B"}, {"G", "H"}, {"E", "F"}, {"G", "H"}},
                    Alphabet(vals),
                    {str(g + 2), str(g), str(g), str(g - 2), str(g), str(g + 2), str(g - 2), str(g)});
    }
    throw std::domain_error("unknown builtin automaton '" + std::string(name) + "'");
}

std::vector<std::string> builtin_names() {
    return {"tm-rev", "paperfold-rev", "paperfold-direct", "rudin-shapiro-rev",
            "period-doubling-rev", "hanoi-rev", "worked-example", "cf(g)"};
}

}  // namespace autoseq
