#pragma once

#include <cmath>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "autoseq/sequence.hpp"
#include "autoseq/words.hpp"

namespace autoseq {

struct ZooParams {
    long a = 1;                            // generalized-fibonacci
    double alpha = std::sqrt(2.0) - 1.0;   // besicovitch examples
};

SequenceHandle get(std::string_view name, const ZooParams& p = {});
std::vector<std::string> zoo_names();

// the morphisms behind the handles
Morphism fibonacci_morphism();
Morphism thue_morse_morphism();
Morphism paperfolding_morphism();   // a->ab, b->cb, c->ad, d->cd
Coding paperfolding_coding();       // a,b->1  c,d->0
Morphism rudin_shapiro_morphism();  // a->ab, b->ac, c->db, d->dc
Coding rudin_shapiro_coding();      // a,b->+  c,d->-
Morphism period_doubling_morphism();
Morphism hanoi_morphism();          // letters a b c ā b̄ c̄
Morphism cyclic_hanoi_morphism();   // f g h u v w
Coding cyclic_hanoi_projection();
Morphism generalized_fibonacci_morphism(long a);
Morphism circle_morphism();         // not prolongable; square it first
Morphism squarefree_thue_morphism();
Morphism berstel4_morphism();
Coding berstel4_mod3();

Word kolakoski_self_reading(std::size_t n);
Word kolakoski_pairwise(std::size_t n);  // iterate 11->21, 12->211, 22->2211, 21->221 from "22"
std::vector<std::size_t> set_a(std::size_t count);  // first `count` members

// Tower of Hanoi moves by plain recursion, in the hanoi alphabet.
// Odd N goes peg I -> II, even N goes I -> III.
Word hanoi_solver_moves(unsigned disks);

struct IdentityResult {
    std::string name;
    bool holds;
    std::optional<std::size_t> first_mismatch;
    std::size_t compared;
};
std::vector<IdentityResult> identity_report(std::size_t n);

}  // namespace autoseq
