#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace autoseq {

// Square grid, u[m][n] with m the row (downward) and n the column.
struct Block2D {
    std::size_t side = 0;
    std::vector<std::uint32_t> cells;  // row-major

    Block2D() = default;
    explicit Block2D(std::size_t s, std::uint32_t fill = 0) : side(s), cells(s * s, fill) {}
    std::uint32_t& at(std::size_t m, std::size_t n) { return cells[m * side + n]; }
    std::uint32_t at(std::size_t m, std::size_t n) const { return cells[m * side + n]; }
    Block2D top_left(std::size_t s) const;
    bool operator==(const Block2D&) const = default;

    std::string to_csv() const;
    std::string to_pgm(std::uint32_t max_value) const;  // plain (P2) PGM
};

// Each letter maps to a k x k block of letters.
struct Morphism2D {
    unsigned k = 2;
    std::vector<std::vector<std::uint32_t>> images;  // images[a] is row-major k*k

    std::size_t letters() const { return images.size(); }
    std::uint32_t image(std::uint32_t a, unsigned r, unsigned c) const { return images.at(a)[r * k + c]; }
    void validate() const;

    static Morphism2D x_pattern();   // 3x3: 0 -> zeros, 1 -> 101/010/101
    static Morphism2D sierpinski();  // 2x2: 1 -> 11/10, 0 -> zeros
};

Block2D fixed_block(const Morphism2D& m2, std::uint32_t seed, unsigned depth);
Block2D pascal_mod(unsigned d, std::size_t size);

// block[k i + r][k j + c] == image(block[i][j])[r][c] wherever both sides fit
bool selfsimilarity_check(const Block2D& b, const Morphism2D& m2);

// images read off the first occurrence of each letter (letters are 0..d-1;
// unseen letters get a zero image)
Morphism2D infer_morphism(const Block2D& b, unsigned k, unsigned letters);

// p-kernel of a 2-D array: subarrays (m, n) -> u[p^e m + r][p^e n + s],
// identified by their values on a window x window corner.
struct KernelSubstitution {
    unsigned p = 2;
    bool closed = false;                  // every child was identified within the grid
    Morphism2D on_states;                 // state -> p x p block of child states
    std::vector<std::uint32_t> coding;    // value at (0, 0) of each state
    std::size_t states() const { return coding.size(); }
    std::uint32_t eval(std::uint64_t m, std::uint64_t n) const;  // reads base-p digits, least significant first
    Block2D generate(std::size_t size) const;
};
KernelSubstitution kernel_substitution(const Block2D& b, unsigned p, std::size_t window = 3);

struct ConsistencyReport {
    unsigned d = 0, p = 0;
    bool closed = false;
    bool regenerates = false;
    std::size_t states = 0;
    bool passes() const { return closed && regenerates; }
};
// p-substitution consistency of Pascal mod d, regenerating a check x check grid
ConsistencyReport pascal_consistency(unsigned d, unsigned p, std::size_t check = 81, std::size_t grid = 0);
unsigned smallest_prime_factor(unsigned d);

}  // namespace autoseq
