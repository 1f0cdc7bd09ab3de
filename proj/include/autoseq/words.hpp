#pragma once

#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <string>
#include <string_view>
#include <unordered_map>
#include <utility>
#include <vector>

namespace autoseq {

using Symbol = std::uint32_t;
using Word = std::vector<Symbol>;

// Ordered set of letters. Letters are short strings so that barred or
// multi-digit symbols fit; the position in the list is the Symbol value.
class Alphabet {
public:
    Alphabet() = default;
    explicit Alphabet(std::vector<std::string> letters);
    Alphabet(std::initializer_list<const char*> letters);

    // every character of `chars` becomes a letter
    static Alphabet of_chars(std::string_view chars);

    std::size_t size() const { return letters_.size(); }
    bool empty() const { return letters_.empty(); }
    const std::string& letter(Symbol s) const;
    Symbol index(std::string_view letter) const;
    bool contains(std::string_view letter) const;
    const std::vector<std::string>& letters() const { return letters_; }

    // single-byte alphabets are written without separators, others with spaces
    bool compact() const;
    Word parse(std::string_view text) const;
    std::string render(const Word& w) const;

    bool operator==(const Alphabet& o) const { return letters_ == o.letters_; }

private:
    std::vector<std::string> letters_;
    std::unordered_map<std::string, Symbol> index_;
};

class Morphism {
public:
    Morphism() = default;
    Morphism(Alphabet alphabet, std::vector<Word> images);

    // images given as text over the alphabet, in alphabet order
    static Morphism from_text(Alphabet alphabet, const std::vector<std::string>& images);
    // "a -> ab" per line; letters in order of first appearance on the left
    static Morphism parse(std::string_view text);

    const Alphabet& alphabet() const { return alphabet_; }
    const Word& image(Symbol a) const;
    bool is_uniform(std::size_t k) const;
    std::size_t uniform_length() const;  // 0 when not uniform
    bool is_prolongable(Symbol a) const;
    Morphism compose(const Morphism& inner) const;  // this ∘ inner
    Morphism square() const { return compose(*this); }
    std::string to_text() const;

private:
    Alphabet alphabet_;
    std::vector<Word> images_;
};

// Letter-to-letter projection.
struct Coding {
    Alphabet source;
    Alphabet target;
    std::vector<Symbol> map;

    static Coding identity(const Alphabet& a);
    static Coding from_pairs(Alphabet source, Alphabet target,
                             const std::vector<std::pair<std::string, std::string>>& pairs);
    static Coding parse(Alphabet source, std::string_view text);  // "a => 1" lines
    Symbol operator()(Symbol s) const;
};

Word apply_morphism(const Morphism& m, const Word& w);
Word fixed_point_prefix(const Morphism& m, Symbol seed, std::size_t n);
Word code(const Word& w, const Coding& c);
Word shuffle(const Word& w, const Word& v);
std::vector<std::size_t> run_lengths(const Word& w);
Word reverse_complement(const Word& w, const Coding& complement);

Word concat(const Word& a, const Word& b);

}  // namespace autoseq
