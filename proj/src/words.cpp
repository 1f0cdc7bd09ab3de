#include "autoseq/words.hpp"

#include <cctype>
#include <sstream>
#include <stdexcept>

namespace autoseq {

namespace {

std::string trim(std::string_view s) {
    std::size_t b = 0, e = s.size();
    while (b < e && std::isspace(static_cast<unsigned char>(s[b]))) ++b;
    while (e > b && std::isspace(static_cast<unsigned char>(s[e - 1]))) --e;
    return std::string(s.substr(b, e - b));
}

std::vector<std::string> split_ws(std::string_view s) {
    std::vector<std::string> out;
    std::istringstream in{std::string(s)};
    std::string tok;
    while (in >> tok) out.push_back(tok);
    return out;
}

}  // namespace

Alphabet::Alphabet(std::vector<std::string> letters) : letters_(std::move(letters)) {
    if (letters_.empty()) throw std::invalid_argument("alphabet must be non-empty");
    for (Symbol i = 0; i < letters_.size(); ++i) {
        if (letters_[i].empty()) throw std::invalid_argument("empty letter");
        if (!index_.emplace(letters_[i], i).second)
            throw std::invalid_argument("duplicate letter '" + letters_[i] + "'");
    }
}

Alphabet::Alphabet(std::initializer_list<const char*> letters)
    : Alphabet(std::vector<std::string>(letters.begin(), letters.end())) {}

Alphabet Alphabet::of_chars(std::string_view chars) {
    std::vector<std::string> v;
    for (char c : chars) v.emplace_back(1, c);
    return Alphabet(std::move(v));
}

const std::string& Alphabet::letter(Symbol s) const {
    if (s >= letters_.size()) throw std::domain_error("symbol outside alphabet");
    return letters_[s];
}

Symbol Alphabet::index(std::string_view letter) const {
    auto it = index_.find(std::string(letter));
    if (it == index_.end()) throw std::domain_error("letter '" + std::string(letter) + "' not in alphabet");
    return it->second;
}

bool Alphabet::contains(std::string_view letter) const {
    return index_.count(std::string(letter)) != 0;
}

bool Alphabet::compact() const {
    for (auto& l : letters_)
        if (l.size() != 1) return false;
    return true;
}

Word Alphabet::parse(std::string_view text) const {
    Word w;
    bool spaced = text.find_first_of(" \t\n") != std::string_view::npos;
    if (compact() && !spaced) {
        for (char c : text) w.push_back(index(std::string_view(&c, 1)));
    } else {
        for (auto& tok : split_ws(text)) w.push_back(index(tok));
    }
    return w;
}

std::string Alphabet::render(const Word& w) const {
    std::string out;
    bool sep = !compact();
    for (std::size_t i = 0; i < w.size(); ++i) {
        if (sep && i) out += ' ';
        out += letter(w[i]);
    }
    return out;
}

Morphism::Morphism(Alphabet alphabet, std::vector<Word> images)
    : alphabet_(std::move(alphabet)), images_(std::move(images)) {
    if (images_.size() != alphabet_.size())
        throw std::invalid_argument("morphism needs one image per letter");
    for (auto& im : images_)
        for (Symbol s : im)
            if (s >= alphabet_.size()) throw std::domain_error("image letter not in alphabet");
}

Morphism Morphism::from_text(Alphabet alphabet, const std::vector<std::string>& images) {
    std::vector<Word> ims;
    for (auto& t : images) ims.push_back(t.empty() ? Word{} : alphabet.parse(t));
    return Morphism(std::move(alphabet), std::move(ims));
}

Morphism Morphism::parse(std::string_view text) {
    std::vector<std::string> lefts, rights;
    std::istringstream in{std::string(text)};
    std::string line;
    while (std::getline(in, line)) {
        auto t = trim(line);
        if (t.empty() || t[0] == '#') continue;
        auto p = t.find("->");
        if (p == std::string::npos) throw std::invalid_argument("morphism line without '->': " + t);
        lefts.push_back(trim(std::string_view(t).substr(0, p)));
        rights.push_back(trim(std::string_view(t).substr(p + 2)));
    }
    Alphabet a(lefts);
    return from_text(a, rights);
}

const Word& Morphism::image(Symbol a) const {
    if (a >= images_.size()) throw std::domain_error("letter not in morphism alphabet");
    return images_[a];
}

bool Morphism::is_uniform(std::size_t k) const {
    for (auto& im : images_)
        if (im.size() != k) return false;
    return true;
}

std::size_t Morphism::uniform_length() const {
    if (images_.empty()) return 0;
    return is_uniform(images_[0].size()) ? images_[0].size() : 0;
}

bool Morphism::is_prolongable(Symbol a) const {
    const Word& im = image(a);
    return im.size() >= 2 && im[0] == a;
}

Morphism Morphism::compose(const Morphism& inner) const {
    if (!(inner.alphabet_ == alphabet_)) throw std::invalid_argument("alphabets differ");
    std::vector<Word> ims;
    for (auto& im : inner.images_) ims.push_back(apply_morphism(*this, im));
    return Morphism(alphabet_, std::move(ims));
}

std::string Morphism::to_text() const {
    std::string out;
    for (Symbol a = 0; a < alphabet_.size(); ++a)
        out += alphabet_.letter(a) + " -> " + alphabet_.render(images_[a]) + "\n";
    return out;
}

Coding Coding::identity(const Alphabet& a) {
    Coding c{a, a, {}};
    for (Symbol s = 0; s < a.size(); ++s) c.map.push_back(s);
    return c;
}

Coding Coding::from_pairs(Alphabet source, Alphabet target,
                          const std::vector<std::pair<std::string, std::string>>& pairs) {
    Coding c{std::move(source), std::move(target), {}};
    c.map.assign(c.source.size(), Symbol(-1));
    for (auto& [from, to] : pairs) c.map[c.source.index(from)] = c.target.index(to);
    for (auto m : c.map)
        if (m == Symbol(-1)) throw std::domain_error("coding is not total on its source alphabet");
    return c;
}

Coding Coding::parse(Alphabet source, std::string_view text) {
    std::vector<std::pair<std::string, std::string>> pairs;
    std::vector<std::string> targets;
    std::istringstream in{std::string(text)};
    std::string line;
    while (std::getline(in, line)) {
        auto t = trim(line);
        if (t.empty() || t[0] == '#') continue;
        auto p = t.find("=>");
        if (p == std::string::npos) throw std::invalid_argument("coding line without '=>': " + t);
        auto to = trim(std::string_view(t).substr(p + 2));
        pairs.emplace_back(trim(std::string_view(t).substr(0, p)), to);
        bool seen = false;
        for (auto& x : targets) seen |= x == to;
        if (!seen) targets.push_back(to);
    }
    return from_pairs(std::move(source), Alphabet(targets), pairs);
}

Symbol Coding::operator()(Symbol s) const {
    if (s >= map.size()) throw std::domain_error("letter not in coding source");
    return map[s];
}

Word apply_morphism(const Morphism& m, const Word& w) {
    Word out;
    for (Symbol s : w) {
        const Word& im = m.image(s);
        out.insert(out.end(), im.begin(), im.end());
    }
    return out;
}

Word fixed_point_prefix(const Morphism& m, Symbol seed, std::size_t n) {
    if (!m.is_prolongable(seed)) throw std::domain_error("no fixed point from seed");
    Word out = m.image(seed);
    std::size_t next = 1;  // position whose image is appended next
    while (out.size() < n) {
        if (next >= out.size()) throw std::domain_error("no fixed point from seed");
        const Word& im = m.image(out[next++]);
        out.insert(out.end(), im.begin(), im.end());
    }
    out.resize(n);
    return out;
}

Word code(const Word& w, const Coding& c) {
    Word out;
    out.reserve(w.size());
    for (Symbol s : w) out.push_back(c(s));
    return out;
}

Word shuffle(const Word& w, const Word& v) {
    if (!(w.size() == v.size() || w.size() == v.size() + 1))
        throw std::invalid_argument("shuffle needs |w| = |v| or |w| = |v|+1");
    Word out;
    out.reserve(w.size() + v.size());
    for (std::size_t i = 0; i < w.size(); ++i) {
        out.push_back(w[i]);
        if (i < v.size()) out.push_back(v[i]);
    }
    return out;
}

std::vector<std::size_t> run_lengths(const Word& w) {
    std::vector<std::size_t> out;
    for (std::size_t i = 0; i < w.size();) {
        std::size_t j = i;
        while (j < w.size() && w[j] == w[i]) ++j;
        out.push_back(j - i);
        i = j;
    }
    return out;
}

Word reverse_complement(const Word& w, const Coding& complement) {
    if (!(complement.source == complement.target)) throw std::invalid_argument("complement must map an alphabet to itself");
    for (Symbol s = 0; s < complement.map.size(); ++s)
        if (complement(complement(s)) != s) throw std::invalid_argument("complement is not an involution");
    Word out(w.rbegin(), w.rend());
    for (auto& s : out) s = complement(s);
    return out;
}

Word concat(const Word& a, const Word& b) {
    Word out = a;
    out.insert(out.end(), b.begin(), b.end());
    return out;
}

}  // namespace autoseq
