#include "autoseq/folding.hpp"

#include <stdexcept>

namespace autoseq {

const Alphabet& turn_alphabet() {
    static const Alphabet a{"L", "R"};
    return a;
}

Word turns(const std::string& text) { return turn_alphabet().parse(text); }

Word fold(const Word& w, int sign) {
    Word alt(w.size() + 1);
    Symbol first = sign > 0 ? 0 : 1;
    for (std::size_t i = 0; i < alt.size(); ++i) alt[i] = (i % 2 == 0) ? first : 1 - first;
    return shuffle(alt, w);
}

namespace {
std::vector<int> parse_signs(const std::string& s) {
    std::vector<int> v;
    for (char c : s) {
        if (c == '+') v.push_back(1);
        else if (c == '-') v.push_back(-1);
        else if (c != ' ') throw std::invalid_argument(std::string("bad sign character '") + c + "'");
    }
    return v;
}
}  // namespace

SignSpec SignSpec::parse(const std::string& text) {
    SignSpec s;
    if (!text.empty() && text[0] == '=') {
        s.finite = true;
        s.pre = parse_signs(text.substr(1));
        return s;
    }
    auto open = text.find('(');
    if (open == std::string::npos) {
        s.period = parse_signs(text);
    } else {
        auto close = text.find(')', open);
        if (close == std::string::npos) throw std::invalid_argument("unbalanced '(' in sign spec");
        s.pre = parse_signs(text.substr(0, open));
        s.period = parse_signs(text.substr(open + 1, close - open - 1));
    }
    if (s.period.empty()) throw std::invalid_argument("sign period must be non-empty");
    return s;
}

SignSpec SignSpec::periodic(std::vector<int> period) {
    SignSpec s;
    s.period = std::move(period);
    return s;
}

int SignSpec::at(std::size_t i) const {
    if (i < pre.size()) return pre[i];
    if (finite) throw std::domain_error("insufficient signs for the requested depth");
    return period[(i - pre.size()) % period.size()];
}

std::string SignSpec::str() const {
    auto put = [](const std::vector<int>& v) {
        std::string s;
        for (int x : v) s += x > 0 ? '+' : '-';
        return s;
    };
    if (finite) return "=" + put(pre);
    return put(pre) + "(" + put(period) + ")";
}

Word paperfold_sequence(const SignSpec& signs, std::size_t n) {
    unsigned depth = 0;
    while (((std::size_t(1) << depth) - 1) < n) ++depth;
    Word w;
    for (unsigned i = depth; i-- > 0;) w = fold(w, signs.at(i));
    w.resize(n);
    return w;
}

namespace {
// convergents p/q of [0; a_1..a_n]
std::pair<BigInt, BigInt> convergent(const CFWord& w) {
    BigInt p0 = 1, q0 = 0, p1 = 0, q1 = 1;  // p_{-1}/q_{-1}, p_0/q_0 for the leading 0
    for (long long a : w) {
        if (a < 1) throw std::domain_error("partial quotients must be >= 1");
        BigInt p2 = a * p1 + p0, q2 = a * q1 + q0;
        p0 = p1; q0 = q1; p1 = p2; q1 = q2;
    }
    return {p1, q1};
}
}  // namespace

Rational cf_value(const CFWord& w) {
    auto [p, q] = convergent(w);
    return Rational(p, q);
}

BigInt cf_denominator(const CFWord& w) { return convergent(w).second; }

CFWord cf_normalize(CFWord w) {
    while (w.size() >= 2 && w.back() == 1) {
        w.pop_back();
        w.back() += 1;
    }
    return w;
}

CFWord cf_fold_step(const CFWord& w0) {
    CFWord w = cf_normalize(w0);
    if (w.empty()) throw std::invalid_argument("empty continued fraction");
    for (auto a : w)
        if (a < 1) throw std::domain_error("partial quotients must be >= 1");
    long long last = w.back();
    if (last - 1 == 0) throw std::domain_error("zero partial quotient; renormalize first");
    CFWord out(w.begin(), w.end() - 1);
    out.push_back(last + 1);
    out.push_back(last - 1);
    for (std::size_t i = w.size() - 1; i-- > 0;) out.push_back(w[i]);
    return out;
}

CFWord cf_of_series(long long g, unsigned depth) {
    if (g <= 2) throw std::domain_error("cf_of_series supports g >= 3 only");
    if (depth < 2) throw std::invalid_argument("depth must be >= 2");
    CFWord w{g - 1, g + 1};  // 1/g + 1/g^2
    for (unsigned d = 2; d < depth; ++d) w = cf_fold_step(w);
    return w;
}

CFWord cf_euclid(const Rational& x) {
    if (x <= 0 || x >= 1) throw std::domain_error("cf_euclid expects 0 < x < 1");
    BigInt p = numerator(x), q = denominator(x);
    CFWord out;
    while (p != 0) {
        BigInt a = q / p, r = q % p;
        out.push_back(a.convert_to<long long>());
        q = p;
        p = r;
    }
    return out;
}

std::string cf_render(const CFWord& w, bool leading_zero) {
    std::string s = leading_zero ? "0" : "";
    for (auto a : w) {
        if (!s.empty()) s += ' ';
        s += std::to_string(a);
    }
    return s;
}

Word cf_fold_arrows(const CFWord& w, long long g) {
    // junction j sits between a_j and a_{j+1}; a_1 = g + (right effect of junction 1)
    // and each interior quotient is g + left effect + right effect
    if (w.size() < 2) return {};
    std::vector<int> right_effect(w.size());  // effect of junction j on a_j
    right_effect[0] = static_cast<int>(w[0] - g);
    for (std::size_t j = 1; j + 1 < w.size(); ++j) {
        int left = -right_effect[j - 1];
        right_effect[j] = static_cast<int>(w[j] - g) - left;
    }
    Word arrows;
    // the folds create the even-numbered junctions 2, 4, 6, ...
    for (std::size_t j = 2; j < w.size(); j += 2) {
        int e = right_effect[j - 1];
        if (e != 1 && e != -1) throw std::domain_error("quotients are not a folded pattern around g");
        arrows.push_back(e == 1 ? 1 : 0);
    }
    return arrows;
}

}  // namespace autoseq
