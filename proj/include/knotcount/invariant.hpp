#pragma once

#include <utility>
#include <vector>

#include "knotcount/braid.hpp"
#include "knotcount/config.hpp"
#include "knotcount/group.hpp"

namespace knotcount {

enum class CountMethod { Trace, Wirtinger, TorusPairs };
const char* method_name(CountMethod m);

// Result of a homomorphism count. `count` is the number of homomorphisms from
// the knot group to G sending every meridian into C; `bound` is c^k.
struct CountReport {
    long long count = 0;
    int strands = 0;
    int c = 0;
    long long bound = 0;
    CountMethod method = CountMethod::Trace;
};

// One basis vector of C^{⊗k}: a choice of C-member per strand top, stored as
// positions into C.members.
struct Coloring {
    std::vector<int> entries;
};

// The braiding on C x C and its inverse, on group element indices:
//   r_apply(a,b)     = (a b a^-1, a)
//   r_apply_inv(a,b) = (b, b^-1 a b)
// Both outputs stay in C by conjugation stability.
std::pair<int, int> r_apply(const ConjSubset& C, int a, int b);
std::pair<int, int> r_apply_inv(const ConjSubset& C, int a, int b);

// Applies the permutation representation of the braid word to a coloring,
// letter by letter (positive letter -> r_apply at (i,i+1), negative ->
// r_apply_inv).
Coloring braid_act(const BraidWord& b, const Coloring& col, const ConjSubset& C);

// [K,G,C] as the trace of the permutation matrix rho(beta): the number of
// colorings fixed by braid_act. Enumerates C^k; work is capped by
// caps.state_cap coloring-steps.
CountReport count_by_trace(const BraidWord& b, const ConjSubset& C, const Caps& caps = {},
                           int threads = 1);

// Independent oracle: enumerates C-colorings of the closure diagram's arcs
// subject to the Wirtinger crossing relations, built and evaluated on an
// explicit arc/relation structure rather than through the braiding.
CountReport count_by_wirtinger(const BraidWord& b, const ConjSubset& C, const Caps& caps = {},
                               int threads = 1);

// |{(a,b) in C x C : (ab)^p a = b (ab)^p}|, the Lemma-style pair count for the
// (2,2p+1) torus knot.
CountReport torus_pair_count(int p, const ConjSubset& C, const Caps& caps = {});

// For every homomorphism (fixed coloring), checks that the abelianization of
// the subgroup generated by the meridian images is cyclic. True iff all pass.
bool image_abelianization_check(const BraidWord& b, const ConjSubset& C, const Caps& caps = {});

} // namespace knotcount
