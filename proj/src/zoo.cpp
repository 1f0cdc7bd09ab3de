#include "autoseq/zoo.hpp"

#include <algorithm>
#include <map>
#include <numbers>
#include <stdexcept>

namespace autoseq {

Word SequenceHandle::prefix(std::size_t n) const {
    if (!generator) throw std::domain_error("sequence '" + name + "' has no symbolic form");
    Word w = generator(n);
    if (w.size() < n) throw std::logic_error("generator for '" + name + "' returned a short prefix");
    w.resize(n);
    return w;
}

std::vector<Complex> SequenceHandle::values(std::size_t n) const {
    if (numeric) return numeric(n);
    if (!cast) throw std::domain_error("sequence '" + name + "' has no numeric cast");
    Word w = prefix(n);
    std::vector<Complex> table(alphabet.size());
    for (Symbol s = 0; s < alphabet.size(); ++s) table[s] = cast(s);
    std::vector<Complex> out(n);
    for (std::size_t i = 0; i < n; ++i) out[i] = table[w[i]];
    return out;
}

Morphism fibonacci_morphism() { return Morphism::from_text(Alphabet{"0", "1"}, {"01", "0"}); }
Morphism thue_morse_morphism() { return Morphism::from_text(Alphabet{"0", "1"}, {"01", "10"}); }
Morphism paperfolding_morphism() {
    return Morphism::from_text(Alphabet{"a", "b", "c", "d"}, {"ab", "cb", "ad", "cd"});
}
Coding paperfolding_coding() {
    return Coding::from_pairs(Alphabet{"a", "b", "c", "d"}, Alphabet{"0", "1"},
                              {{"a", "1"}, {"b", "1"}, {"c", "0"}, {"d", "0"}});
}
Morphism rudin_shapiro_morphism() {
    return Morphism::from_text(Alphabet{"a", "b", "c", "d"}, {"ab", "ac", "db", "dc"});
}
Coding rudin_shapiro_coding() {
    return Coding::from_pairs(Alphabet{"a", "b", "c", "d"}, Alphabet{"+", "-"},
                              {{"a", "+"}, {"b", "+"}, {"c", "-"}, {"d", "-"}});
}
Morphism period_doubling_morphism() { return Morphism::from_text(Alphabet{"0", "1"}, {"01", "00"}); }
Morphism hanoi_morphism() {
    return Morphism::from_text(Alphabet{"a", "b", "c", "ā", "b̄", "c̄"},
                               {"a c̄", "c b̄", "b ā", "a c", "c b", "b a"});
}
Morphism cyclic_hanoi_morphism() {
    return Morphism::from_text(Alphabet{"f", "g", "h", "u", "v", "w"},
                               {"fvf", "gwg", "huh", "fg", "gh", "hf"});
}
Coding cyclic_hanoi_projection() {
    return Coding::from_pairs(Alphabet{"f", "g", "h", "u", "v", "w"}, Alphabet{"a", "b", "c"},
                              {{"f", "a"}, {"g", "c"}, {"h", "b"}, {"u", "c"}, {"v", "b"}, {"w", "a"}});
}
Morphism generalized_fibonacci_morphism(long a) {
    if (a < 0) throw std::domain_error("generalized-fibonacci needs a >= 0");
    return Morphism::from_text(Alphabet{"0", "1"},
                               {"0" + std::string(a + 1, '1'), "0" + std::string(a, '1')});
}
Morphism circle_morphism() {
    return Morphism::from_text(Alphabet{"a", "b", "c"}, {"cac", "accac", "abcac"});
}
Morphism squarefree_thue_morphism() {
    return Morphism::from_text(Alphabet{"0", "1", "2"}, {"12", "102", "0"});
}
Morphism berstel4_morphism() {
    return Morphism::from_text(Alphabet{"0", "1", "2", "3"}, {"12", "13", "20", "21"});
}
Coding berstel4_mod3() {
    return Coding::from_pairs(Alphabet{"0", "1", "2", "3"}, Alphabet{"0", "1", "2"},
                              {{"0", "0"}, {"1", "1"}, {"2", "2"}, {"3", "0"}});
}

Word kolakoski_self_reading(std::size_t n) {
    // symbols: 0 = "1", 1 = "2"
    Word s{1, 1};
    for (std::size_t i = 1; s.size() < n; ++i) {
        Symbol next = s.back() == 1 ? 0 : 1;
        std::size_t len = s[i] + 1;
        for (std::size_t j = 0; j < len; ++j) s.push_back(next);
    }
    s.resize(std::max<std::size_t>(n, 0));
    return s;
}

Word kolakoski_pairwise(std::size_t n) {
    Word g{1, 1};
    while (g.size() < n) {
        Word next;
        // pair (x, y) -> x twos then y ones; a lone trailing x -> x twos
        for (std::size_t i = 0; i < g.size(); i += 2) {
            std::size_t x = g[i] + 1;
            next.insert(next.end(), x, 1);
            if (i + 1 < g.size()) next.insert(next.end(), g[i + 1] + 1, 0);
        }
        g = std::move(next);
    }
    g.resize(n);
    return g;
}

std::vector<std::size_t> set_a(std::size_t count) {
    std::vector<std::size_t> out;
    std::vector<bool> in{false};
    for (std::size_t n = 1; out.size() < count; ++n) {
        bool admit = !(n % 2 == 0 && in[n / 2]);
        in.push_back(admit);
        if (admit) out.push_back(n);
    }
    return out;
}

Word hanoi_solver_moves(unsigned disks) {
    // move letters for (from, to), pegs 0=I 1=II 2=III
    static const Symbol letter[3][3] = {{99, 0, 5}, {3, 99, 1}, {2, 4, 99}};
    Word out;
    auto rec = [&](auto&& self, unsigned n, int from, int to, int via) -> void {
        if (!n) return;
        self(self, n - 1, from, via, to);
        out.push_back(letter[from][to]);
        self(self, n - 1, via, to, from);
    };
    if (disks % 2) rec(rec, disks, 0, 1, 2);
    else rec(rec, disks, 0, 2, 1);
    return out;
}

namespace {

SequenceHandle morphic(std::string name, Morphism m, Symbol seed, std::optional<Coding> c,
                       std::function<Complex(Symbol)> cast = {}) {
    SequenceHandle h;
    h.name = std::move(name);
    h.alphabet = c ? c->target : m.alphabet();
    h.generator = [m, seed, c](std::size_t n) {
        Word w = fixed_point_prefix(m, seed, n);
        return c ? code(w, *c) : w;
    };
    h.cast = std::move(cast);
    return h;
}

Complex pm_first(Symbol s) { return s == 0 ? 1.0 : -1.0; }   // first letter -> +1
Complex pm_second(Symbol s) { return s == 1 ? 1.0 : -1.0; }  // second letter -> +1

SequenceHandle from_generator(std::string name, Alphabet a, std::function<Word(std::size_t)> g,
                              std::function<Complex(Symbol)> cast = {}) {
    SequenceHandle h;
    h.name = std::move(name);
    h.alphabet = std::move(a);
    h.generator = std::move(g);
    h.cast = std::move(cast);
    return h;
}

Word doubling(std::size_t n, bool perturbed) {
    Word w{perturbed ? Symbol(1) : Symbol(0)};
    auto comp = Coding::from_pairs(Alphabet{"0", "1"}, Alphabet{"0", "1"}, {{"0", "1"}, {"1", "0"}});
    while (w.size() < n) {
        if (perturbed) {
            Word f = reverse_complement(w, comp);
            w.push_back(1);
            w.insert(w.end(), f.begin(), f.end());
        } else {
            Word bar = code(w, comp);
            w.insert(w.end(), bar.begin(), bar.end());
        }
    }
    w.resize(n);
    return w;
}

long double frac_floor(long double x) { return std::floor(x); }

}  // namespace

SequenceHandle get(std::string_view name, const ZooParams& p) {
    const std::string nm(name);
    if (nm == "fibonacci") return morphic(nm, fibonacci_morphism(), 0, std::nullopt, pm_first);
    if (nm == "thue-morse") return morphic(nm, thue_morse_morphism(), 0, std::nullopt, pm_first);
    if (nm == "paperfolding")
        return morphic(nm, paperfolding_morphism(), 0, paperfolding_coding(), pm_second);
    if (nm == "rudin-shapiro")
        return morphic(nm, rudin_shapiro_morphism(), 0, rudin_shapiro_coding(), pm_first);
    if (nm == "period-doubling") return morphic(nm, period_doubling_morphism(), 0, std::nullopt, pm_first);
    if (nm == "hanoi") return morphic(nm, hanoi_morphism(), 0, std::nullopt);
    if (nm == "cyclic-hanoi")
        return morphic(nm, cyclic_hanoi_morphism(), 0, cyclic_hanoi_projection());
    if (nm == "generalized-fibonacci")
        return morphic(nm, generalized_fibonacci_morphism(p.a), 0, std::nullopt, pm_first);
    if (nm == "circle") return morphic(nm, circle_morphism().square(), 0, std::nullopt);
    if (nm == "circle-c") return morphic(nm, circle_morphism().square(), 2, std::nullopt);
    if (nm == "squarefree-thue") return morphic(nm, squarefree_thue_morphism(), 1, std::nullopt);
    if (nm == "berstel-4") return morphic(nm, berstel4_morphism(), 1, std::nullopt);
    if (nm == "fp-211") {
        auto m = Morphism::from_text(Alphabet{"1", "2"}, {"2", "211"});
        return morphic(nm, m, 1, std::nullopt);
    }
    if (nm == "fp-121") {
        auto m = Morphism::from_text(Alphabet{"1", "2"}, {"121", "12221"});
        return morphic(nm, m, 0, std::nullopt);
    }
    if (nm == "kolakoski") return from_generator(nm, Alphabet{"1", "2"}, kolakoski_self_reading);
    if (nm == "perturbed-symmetry-paperfold")
        return from_generator(nm, Alphabet{"0", "1"}, [](std::size_t n) { return doubling(n, true); }, pm_second);
    if (nm == "tm-doubling")
        return from_generator(nm, Alphabet{"0", "1"}, [](std::size_t n) { return doubling(n, false); }, pm_first);
    if (nm == "setA-diff")
        return from_generator(nm, Alphabet{"1", "2"}, [](std::size_t n) {
            auto a = set_a(n + 1);
            Word w(n);
            for (std::size_t i = 0; i < n; ++i) w[i] = static_cast<Symbol>(a[i + 1] - a[i] - 1);
            return w;
        });
    if (nm == "alternating")
        return from_generator(nm, Alphabet{"+", "-"}, [](std::size_t n) {
            Word w(n);
            for (std::size_t i = 0; i < n; ++i) w[i] = i % 2;
            return w;
        }, pm_first);
    if (nm == "constant")
        return from_generator(nm, Alphabet{"1"}, [](std::size_t n) { return Word(n, 0); },
                              [](Symbol) { return Complex(1.0); });
    const long double alpha = p.alpha;
    if (nm == "besicovitch-floor")
        return from_generator(nm, Alphabet{"+", "-"}, [alpha](std::size_t n) {
            Word w(n);
            for (std::size_t i = 0; i < n; ++i)
                w[i] = static_cast<Symbol>(static_cast<long long>(frac_floor(alpha * i)) & 1);
            return w;
        }, pm_first);
    if (nm == "besicovitch-floor-square")
        return from_generator(nm, Alphabet{"+", "-"}, [alpha](std::size_t n) {
            Word w(n);
            for (std::size_t i = 0; i < n; ++i) {
                long double x = alpha * static_cast<long double>(i) * static_cast<long double>(i);
                w[i] = static_cast<Symbol>(static_cast<long long>(frac_floor(x)) & 1);
            }
            return w;
        }, pm_first);
    if (nm == "besicovitch-exp-linear" || nm == "besicovitch-exp-sqrt") {
        SequenceHandle h;
        h.name = nm;
        bool sq = nm == "besicovitch-exp-sqrt";
        h.numeric = [alpha, sq](std::size_t n) {
            std::vector<Complex> v(n);
            for (std::size_t i = 0; i < n; ++i) {
                long double x = sq ? std::sqrt(static_cast<long double>(i)) : alpha * i;
                long double f = x - std::floor(x);
                double ang = 2.0 * std::numbers::pi * static_cast<double>(f);
                v[i] = Complex(std::cos(ang), std::sin(ang));
            }
            return v;
        };
        return h;
    }
    throw std::domain_error("unknown sequence '" + nm + "'");
}

std::vector<std::string> zoo_names() {
    return {"fibonacci", "thue-morse", "paperfolding", "rudin-shapiro", "period-doubling", "hanoi",
            "cyclic-hanoi", "generalized-fibonacci", "circle", "circle-c", "squarefree-thue", "berstel-4",
            "kolakoski", "perturbed-symmetry-paperfold", "tm-doubling", "setA-diff", "fp-211", "fp-121",
            "besicovitch-floor", "besicovitch-floor-square", "besicovitch-exp-linear",
            "besicovitch-exp-sqrt", "alternating", "constant"};
}

namespace {

template <class A, class B>
IdentityResult compare(std::string name, const A& a, const B& b, std::size_t n) {
    IdentityResult r{std::move(name), true, std::nullopt, n};
    for (std::size_t i = 0; i < n; ++i) {
        if (i >= a.size() || i >= b.size() || a[i] != b[i]) {
            r.holds = false;
            r.first_mismatch = i;
            break;
        }
    }
    return r;
}

std::vector<std::size_t> as_counts(const Word& w, const Alphabet& a) {
    std::vector<std::size_t> v;
    for (Symbol s : w) v.push_back(std::stoul(a.letter(s)));
    return v;
}

}  // namespace

std::vector<IdentityResult> identity_report(std::size_t n) {
    if (n < 2) throw std::invalid_argument("identity_report needs n >= 2");
    std::vector<IdentityResult> out;
    const std::size_t long_n = 4 * n + 16;
    Word tm = get("thue-morse").prefix(long_n);

    out.push_back(compare("(i) tm-doubling = thue-morse", get("tm-doubling").prefix(n), tm, n));
    out.push_back(compare("(ii) perturbed-symmetry = paperfolding",
                          get("perturbed-symmetry-paperfold").prefix(n), get("paperfolding").prefix(n), n));
    out.push_back(compare("(iii) berstel-4 mod 3 = squarefree-thue",
                          code(get("berstel-4").prefix(n), berstel4_mod3()), get("squarefree-thue").prefix(n), n));
    {
        std::vector<std::size_t> gaps;
        std::size_t last0 = 0;
        bool have = false;
        for (std::size_t i = 0; i < tm.size() && gaps.size() < n; ++i) {
            if (tm[i] != 0) continue;
            if (have) gaps.push_back(i - last0 - 1);
            last0 = i;
            have = true;
        }
        std::vector<std::size_t> sq;
        for (Symbol s : get("squarefree-thue").prefix(n)) sq.push_back((s + 1) % 3);
        out.push_back(compare("(iv) squarefree-thue + 1 mod 3 = 1-runs of thue-morse", sq, gaps, n));
    }
    auto runs = run_lengths(tm);
    std::vector<std::size_t> runs_tail(runs.begin() + 1, runs.end());
    auto seta_h = get("setA-diff");
    auto seta = as_counts(seta_h.prefix(n), seta_h.alphabet);
    out.push_back(compare("(v) setA-diff = thue-morse run lengths minus first", seta, runs_tail, n));
    {
        auto f211 = get("fp-211");
        auto f121 = get("fp-121");
        auto a = compare("", seta, as_counts(f211.prefix(n), f211.alphabet), n);
        auto b = compare("", runs, as_counts(f121.prefix(n), f121.alphabet), n);
        IdentityResult r{"(vi) setA-diff = fp-211 and tm runs = fp-121", a.holds && b.holds, std::nullopt, n};
        if (!a.holds) r.first_mismatch = a.first_mismatch;
        else if (!b.holds) r.first_mismatch = b.first_mismatch;
        out.push_back(r);
    }
    {
        Word k = kolakoski_self_reading(n);
        auto rl = run_lengths(k);
        std::vector<std::size_t> kc;
        for (Symbol s : k) kc.push_back(s + 1);
        // the last run of a finite prefix may be truncated
        std::size_t m = rl.empty() ? 0 : rl.size() - 1;
        out.push_back(compare("(vii) kolakoski run lengths = kolakoski", rl, kc, m));
    }
    {
        Word pd = get("period-doubling").prefix(n);
        Word x(n);
        for (std::size_t i = 0; i < n; ++i) x[i] = (tm[i] ^ tm[i + 1]) ? 0 : 1;
        out.push_back(compare("(viii) period-doubling = not(tm xor shifted tm)", pd, x, n));
    }
    {
        IdentityResult r{"(ix) hanoi prefix = recursive solver", true, std::nullopt, 0};
        Word h = get("hanoi").prefix(std::min<std::size_t>(n, 1023));
        for (unsigned N = 1; N <= 10 && ((std::size_t(1) << N) - 1) <= h.size(); ++N) {
            Word moves = hanoi_solver_moves(N);
            auto c = compare("", h, moves, moves.size());
            r.compared = moves.size();
            if (!c.holds) {
                r.holds = false;
                r.first_mismatch = c.first_mismatch;
                break;
            }
        }
        out.push_back(r);
    }
    return out;
}

}  // namespace autoseq
