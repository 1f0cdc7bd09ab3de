#include "autoseq/opacity.hpp"

#include <algorithm>
#include <cmath>
#include <deque>
#include <limits>
#include <map>
#include <stdexcept>

#include "autoseq/automata.hpp"
#include "autoseq/parallel.hpp"

namespace autoseq {

std::size_t SignedAutomaton::state_index(const std::string& name) const {
    for (std::size_t i = 0; i < states.size(); ++i)
        if (states[i] == name) return i;
    throw std::domain_error("unknown state '" + name + "'");
}

void SignedAutomaton::validate() const {
    if (states.empty() || initial >= states.size()) throw std::invalid_argument("bad initial state");
    if (plus.size() != states.size() || minus.size() != states.size())
        throw std::invalid_argument("transitions must be total");
    for (std::size_t s = 0; s < states.size(); ++s)
        if (plus[s] >= states.size() || minus[s] >= states.size())
            throw std::invalid_argument("transition to unknown state");
    if (!output.empty() && output.size() != states.size()) throw std::invalid_argument("outputs must be total");
}

SignedAutomaton SignedAutomaton::from_json(const nlohmann::json& j) {
    if (j.at("k").get<unsigned>() != 2) throw std::invalid_argument("signed automata need k = 2");
    SignedAutomaton a;
    a.states = j.at("states").get<std::vector<std::string>>();
    a.initial = a.state_index(j.at("initial").get<std::string>());
    for (auto& s : a.states) {
        auto& row = j.at("transitions").at(s);
        if (row.size() != 2) throw std::invalid_argument("each state needs two transitions");
        a.minus.push_back(a.state_index(row[0].get<std::string>()));
        a.plus.push_back(a.state_index(row[1].get<std::string>()));
    }
    if (j.contains("output")) {
        auto& out = j.at("output");
        bool all = true;
        std::vector<Rational> vals;
        for (auto& s : a.states) {
            if (!out.contains(s) || out.at(s).is_null()) {
                all = false;
                break;
            }
            auto& v = out.at(s);
            if (v.is_number_integer()) vals.emplace_back(v.get<long long>());
            else if (v.is_number()) vals.emplace_back(v.get<double>());
            else {
                try {
                    vals.emplace_back(Rational(v.get<std::string>()));
                } catch (...) {
                    all = false;
                    break;
                }
            }
        }
        if (all) a.output = vals;
    }
    a.validate();
    return a;
}

nlohmann::json SignedAutomaton::to_json() const {
    nlohmann::json j;
    j["k"] = 2;
    j["reading"] = "direct";
    j["initial"] = states[initial];
    j["states"] = states;
    nlohmann::json tr = nlohmann::json::object(), out = nlohmann::json::object();
    for (std::size_t s = 0; s < states.size(); ++s) {
        tr[states[s]] = {states[minus[s]], states[plus[s]]};
        if (!output.empty()) {
            const Rational& v = output[s];
            if (denominator(v) == 1) out[states[s]] = numerator(v).convert_to<long long>();
            else out[states[s]] = v.str();
        } else {
            out[states[s]] = states[s];
        }
    }
    j["transitions"] = tr;
    j["output"] = out;
    return j;
}

namespace {
SignedAutomaton make(std::vector<std::string> st, std::vector<std::size_t> p, std::vector<std::size_t> m) {
    SignedAutomaton a;
    a.states = std::move(st);
    a.plus = std::move(p);
    a.minus = std::move(m);
    a.validate();
    return a;
}
}  // namespace

SignedAutomaton SignedAutomaton::identity() { return make({"A", "B"}, {0, 0}, {1, 1}); }
SignedAutomaton SignedAutomaton::constant() { return make({"A"}, {0}, {0}); }
SignedAutomaton SignedAutomaton::thue_morse() { return make({"A", "B"}, {0, 1}, {1, 0}); }
SignedAutomaton SignedAutomaton::worked() { return make({"A", "B", "C"}, {0, 2, 0}, {1, 2, 1}); }

Classification classify(const SignedAutomaton& aut) {
    const std::size_t n = aut.size();
    Classification c;
    std::vector<int> in_plus(n, 0), in_minus(n, 0);
    std::vector<std::vector<std::size_t>> fwd(n), bwd(n);
    for (std::size_t s = 0; s < n; ++s) {
        ++in_plus[aut.plus[s]];
        ++in_minus[aut.minus[s]];
        for (auto t : {aut.plus[s], aut.minus[s]}) {
            fwd[s].push_back(t);
            bwd[t].push_back(s);
        }
    }
    auto reach_all = [n](const std::vector<std::vector<std::size_t>>& g) {
        std::vector<bool> seen(n, false);
        std::vector<std::size_t> stack{0};
        seen[0] = true;
        std::size_t count = 1;
        while (!stack.empty()) {
            auto s = stack.back();
            stack.pop_back();
            for (auto t : g[s])
                if (!seen[t]) {
                    seen[t] = true;
                    ++count;
                    stack.push_back(t);
                }
        }
        return count == n;
    };
    c.strongly_connected = reach_all(fwd) && reach_all(bwd);
    c.homogeneous = true;
    c.extended_class = true;
    for (std::size_t s = 0; s < n; ++s) {
        if (in_plus[s] + in_minus[s] != 2) c.homogeneous = false;
        char k = '?';
        if (in_plus[s] == 1 && in_minus[s] == 1) k = 'a';
        else if (in_plus[s] >= 1 && in_minus[s] == 0) k = 'b';
        else if (in_minus[s] >= 1 && in_plus[s] == 0) k = 'c';
        if (k == '?') c.extended_class = false;
        c.kind.push_back(k);
    }
    return c;
}

UPSignal UPSignal::parse(const std::string& text) {
    auto signs = [](const std::string& s) {
        std::vector<int> v;
        for (char ch : s) {
            if (ch == '+') v.push_back(1);
            else if (ch == '-') v.push_back(-1);
            else if (ch != ' ') throw std::invalid_argument(std::string("bad sign character '") + ch + "'");
        }
        return v;
    };
    UPSignal u;
    auto open = text.find('(');
    if (open == std::string::npos) {
        u.period = signs(text);
    } else {
        auto close = text.find(')', open);
        if (close == std::string::npos) throw std::invalid_argument("unbalanced '(' in signal");
        u.pre = signs(text.substr(0, open));
        u.period = signs(text.substr(open + 1, close - open - 1));
    }
    if (u.period.empty()) throw std::invalid_argument("period must be non-empty");
    return u;
}

int UPSignal::at(std::size_t i) const {
    if (i < pre.size()) return pre[i];
    return period[(i - pre.size()) % period.size()];
}

std::string UPSignal::str() const {
    std::string s;
    for (int x : pre) s += x > 0 ? '+' : '-';
    s += '(';
    for (int x : period) s += x > 0 ? '+' : '-';
    return s + ')';
}

std::vector<std::size_t> run(const SignedAutomaton& aut, const UPSignal& eps, std::size_t n) {
    std::vector<std::size_t> out;
    out.reserve(n);
    std::size_t s = aut.initial;
    for (std::size_t i = 0; i < n; ++i) {
        s = aut.next(s, eps.at(i));
        out.push_back(s);
    }
    return out;
}

std::vector<std::size_t> run_with_initial(const SignedAutomaton& aut, const UPSignal& eps, std::size_t n) {
    std::vector<std::size_t> out{aut.initial};
    auto rest = run(aut, eps, n);
    out.insert(out.end(), rest.begin(), rest.end());
    return out;
}

Rational distortion_sq_from(const SignedAutomaton& aut, std::size_t start, const std::vector<int>& period) {
    if (period.empty()) throw std::invalid_argument("period must be non-empty");
    auto block = [&](std::size_t s) {
        for (int e : period) s = aut.next(s, e);
        return s;
    };
    std::map<std::size_t, std::size_t> seen;
    std::vector<std::size_t> starts;
    std::size_t s = start;
    while (!seen.count(s)) {
        seen[s] = starts.size();
        starts.push_back(s);
        s = block(s);
    }
    std::vector<long long> cp(aut.size(), 0), cm(aut.size(), 0);
    std::size_t len = 0;
    for (std::size_t b = seen[s]; b < starts.size(); ++b) {
        std::size_t x = starts[b];
        for (int e : period) {
            x = aut.next(x, e);
            (e > 0 ? cp : cm)[x]++;
            ++len;
        }
    }
    // per state the best constant is the mean sign; its squared error is 4 c+ c- / (c+ + c-)
    Rational total = 0;
    for (std::size_t q = 0; q < aut.size(); ++q)
        if (cp[q] && cm[q]) total += Rational(4 * cp[q] * cm[q], cp[q] + cm[q]);
    return total / static_cast<long long>(len);
}

Rational distortion_sq(const SignedAutomaton& aut, const UPSignal& eps) {
    std::size_t s = aut.initial;
    for (int e : eps.pre) s = aut.next(s, e);
    return distortion_sq_from(aut, s, eps.period);
}

double distortion(const SignedAutomaton& aut, const UPSignal& eps) {
    return std::sqrt(to_double(distortion_sq(aut, eps)));
}

namespace {

constexpr std::size_t kInf = std::numeric_limits<std::size_t>::max() / 4;

std::vector<std::vector<std::size_t>> all_pairs(const SignedAutomaton& aut) {
    const std::size_t n = aut.size();
    std::vector<std::vector<std::size_t>> d(n, std::vector<std::size_t>(n, kInf));
    for (std::size_t s = 0; s < n; ++s) {
        std::deque<std::size_t> q{s};
        d[s][s] = 0;
        while (!q.empty()) {
            auto u = q.front();
            q.pop_front();
            for (auto v : {aut.plus[u], aut.minus[u]})
                if (d[s][v] == kInf) {
                    d[s][v] = d[s][u] + 1;
                    q.push_back(v);
                }
        }
    }
    return d;
}

struct InArrows {
    std::vector<std::vector<std::size_t>> from_plus, from_minus;
};

InArrows in_arrows(const SignedAutomaton& aut) {
    InArrows in;
    in.from_plus.resize(aut.size());
    in.from_minus.resize(aut.size());
    for (std::size_t s = 0; s < aut.size(); ++s) {
        in.from_plus[aut.plus[s]].push_back(s);
        in.from_minus[aut.minus[s]].push_back(s);
    }
    return in;
}

// Shortest total length of a closed-walk family using every required arrow:
// required arrows at multiplicity one, then the cheapest way to rebalance
// in/out degrees (a transportation problem over shortest-path distances).
std::optional<std::size_t> min_cover(const std::vector<std::vector<std::size_t>>& dist,
                                     const std::vector<std::pair<std::size_t, std::size_t>>& arrows,
                                     std::size_t n) {
    std::vector<long long> bal(n, 0);  // in - out over required arrows
    for (auto [u, v] : arrows) {
        --bal[u];
        ++bal[v];
    }
    std::vector<std::size_t> sup, dem;
    std::vector<long long> cap_s, cap_d;
    for (std::size_t v = 0; v < n; ++v) {
        if (bal[v] > 0) { sup.push_back(v); cap_s.push_back(bal[v]); }
        if (bal[v] < 0) { dem.push_back(v); cap_d.push_back(-bal[v]); }
    }
    // successive shortest paths on source -> supplies -> demands -> sink
    const std::size_t S = sup.size(), D = dem.size(), N = S + D + 2, src = S + D, snk = S + D + 1;
    struct E { std::size_t to; long long cap; long long cost; };
    std::vector<E> edges;
    std::vector<std::vector<std::size_t>> adj(N);
    auto add = [&](std::size_t a, std::size_t b, long long cap, long long cost) {
        adj[a].push_back(edges.size()); edges.push_back({b, cap, cost});
        adj[b].push_back(edges.size()); edges.push_back({a, 0, -cost});
    };
    const long long big = 1 << 20;
    for (std::size_t i = 0; i < S; ++i) add(src, i, cap_s[i], 0);
    for (std::size_t j = 0; j < D; ++j) add(S + j, snk, cap_d[j], 0);
    for (std::size_t i = 0; i < S; ++i)
        for (std::size_t j = 0; j < D; ++j)
            if (dist[sup[i]][dem[j]] != kInf) add(i, S + j, big, static_cast<long long>(dist[sup[i]][dem[j]]));
    long long need = 0;
    for (auto c : cap_s) need += c;
    long long cost = 0;
    while (need > 0) {
        std::vector<long long> d(N, std::numeric_limits<long long>::max());
        std::vector<std::size_t> via(N, SIZE_MAX);
        d[src] = 0;
        for (std::size_t it = 0; it < N; ++it) {
            bool changed = false;
            for (std::size_t a = 0; a < N; ++a) {
                if (d[a] == std::numeric_limits<long long>::max()) continue;
                for (auto id : adj[a]) {
                    auto& e = edges[id];
                    if (e.cap > 0 && d[a] + e.cost < d[e.to]) {
                        d[e.to] = d[a] + e.cost;
                        via[e.to] = id;
                        changed = true;
                    }
                }
            }
            if (!changed) break;
        }
        if (d[snk] == std::numeric_limits<long long>::max()) return std::nullopt;
        long long push = need;
        for (std::size_t v = snk; v != src; v = edges[via[v] ^ 1].to) push = std::min(push, edges[via[v]].cap);
        for (std::size_t v = snk; v != src; v = edges[via[v] ^ 1].to) {
            edges[via[v]].cap -= push;
            edges[via[v] ^ 1].cap += push;
        }
        cost += push * d[snk];
        need -= push;
    }
    return arrows.size() + static_cast<std::size_t>(cost);
}

std::vector<std::pair<std::size_t, std::size_t>> required_arrows(const SignedAutomaton& aut, const InArrows& in,
                                                                 const std::vector<std::size_t>& T) {
    std::vector<std::pair<std::size_t, std::size_t>> arrows;
    for (auto c : T) {
        if (in.from_plus[c].size() != 1 || in.from_minus[c].size() != 1)
            throw std::domain_error("state " + aut.states[c] + " does not have exactly one + and one - arrow in");
        arrows.emplace_back(in.from_plus[c][0], c);
        arrows.emplace_back(in.from_minus[c][0], c);
    }
    return arrows;
}

}  // namespace

std::optional<std::size_t> min_closed_walk(const SignedAutomaton& aut, const std::vector<std::size_t>& T) {
    auto dist = all_pairs(aut);
    auto in = in_arrows(aut);
    return min_cover(dist, required_arrows(aut, in, T), aut.size());
}

OpacityResult opacity_formula(const SignedAutomaton& aut, const OpacityLimits& lim) {
    aut.validate();
    auto cls = classify(aut);
    if (!cls.theorem_applies()) throw std::domain_error("theorem hypotheses not met");
    if (aut.size() > lim.max_states)
        throw std::domain_error("automaton exceeds the state cap of " + std::to_string(lim.max_states));
    auto in = in_arrows(aut);
    std::vector<std::size_t> cand;
    for (std::size_t s = 0; s < aut.size(); ++s)
        if (!in.from_plus[s].empty() && !in.from_minus[s].empty()) cand.push_back(s);
    if (cand.size() > lim.max_candidates)
        throw std::domain_error("subset search cap exceeded: " + std::to_string(cand.size()) +
                                " candidate strong states, cap " + std::to_string(lim.max_candidates));
    OpacityResult best;
    best.squared = 0;
    if (cand.empty()) return best;

    auto dist = all_pairs(aut);
    const std::uint64_t total = std::uint64_t(1) << cand.size();
    const std::uint64_t block = 1024;
    const std::size_t blocks = static_cast<std::size_t>((total + block - 1) / block);
    struct Best { std::uint64_t mask = 0; std::size_t t = 0, len = 0; };
    std::vector<Best> per(blocks);
    parallel_for(blocks, [&](std::size_t b) {
        Best bb;
        for (std::uint64_t mask = std::max<std::uint64_t>(1, b * block); mask < std::min(total, (b + 1) * block); ++mask) {
            std::vector<std::size_t> T;
            for (std::size_t i = 0; i < cand.size(); ++i)
                if (mask >> i & 1) T.push_back(cand[i]);
            auto len = min_cover(dist, required_arrows(aut, in, T), aut.size());
            if (!len) continue;
            // compare |T| / len against the block best
            if (bb.len == 0 || T.size() * bb.len > bb.t * *len) bb = {mask, T.size(), *len};
        }
        per[b] = bb;
    });
    Best top;
    for (auto& b : per)
        if (b.len && (top.len == 0 || b.t * top.len > top.t * b.len)) top = b;
    if (top.len == 0) return best;
    best.squared = Rational(static_cast<long long>(2 * top.t), static_cast<long long>(top.len));
    best.value = std::sqrt(to_double(best.squared));
    best.length = top.len;
    for (std::size_t i = 0; i < cand.size(); ++i)
        if (top.mask >> i & 1) best.strong.push_back(cand[i]);
    return best;
}

OpacitySearch opacity_lower_estimate(const SignedAutomaton& aut, std::size_t p_max) {
    std::vector<bool> reach(aut.size(), false);
    std::vector<std::size_t> stack{aut.initial};
    reach[aut.initial] = true;
    while (!stack.empty()) {
        auto s = stack.back();
        stack.pop_back();
        for (auto t : {aut.plus[s], aut.minus[s]})
            if (!reach[t]) {
                reach[t] = true;
                stack.push_back(t);
            }
    }
    OpacitySearch out;
    out.squared = 0;
    for (std::size_t p = 1; p <= p_max; ++p)
        for (std::uint64_t bits = 0; bits < (std::uint64_t(1) << p); ++bits) {
            std::vector<int> period(p);
            for (std::size_t i = 0; i < p; ++i) period[i] = (bits >> i & 1) ? 1 : -1;
            for (std::size_t s = 0; s < aut.size(); ++s) {
                if (!reach[s]) continue;
                auto d = distortion_sq_from(aut, s, period);
                if (d > out.squared) {
                    out.squared = d;
                    out.period = period;
                    out.start = s;
                }
            }
        }
    out.value = std::sqrt(to_double(out.squared));
    return out;
}

}  // namespace autoseq
