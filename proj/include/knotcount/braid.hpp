#pragma once

#include <map>
#include <string>
#include <vector>

namespace knotcount {

// A word in the braid group B_k. Letters are signed generator indices:
// +i means sigma_i, -i means sigma_i^-1, with 1 <= i <= strands-1. Words are
// kept literal; no free reduction or braid-relation rewriting is applied.
struct BraidWord {
    int strands = 1;
    std::vector<int> letters;

    int length() const { return static_cast<int>(letters.size()); }
};

// Validates strand count and generator ranges.
BraidWord make_braid(int strands, std::vector<int> letters);

// Parses whitespace-separated signed integers; strand count defaults to
// 1 + max generator index when `strands` <= 0.
BraidWord parse_braid(const std::string& text, int strands = 0);
std::string format_braid(const BraidWord& b);

// sigma_1^{2p+1} on two strands; its closure is the (2,2p+1) torus knot K_p.
BraidWord torus_braid(int p);

// The underlying permutation of strand positions 0..k-1 (top to bottom of the
// closure), ignoring crossing signs.
std::vector<int> closure_permutation(const BraidWord& b);

// True iff the closure has a single component (the permutation is a k-cycle).
bool is_knot(const BraidWord& b);

// gamma * beta * gamma^-1 as a literal word (no cancellation).
BraidWord markov_conjugate(const BraidWord& beta, const BraidWord& gamma);

// Adds one strand and appends sigma_k^{±1}.
BraidWord markov_stabilize(const BraidWord& b, int sign);

// A set of crossings (letter positions) with a sign assignment, the epsilon of
// a finite-type sum term. Positions with -1 get their crossing switched.
struct CrossingSelection {
    std::map<int, int> assignment; // position -> ±1
};

BraidWord switch_crossings(const BraidWord& b, const CrossingSelection& sel);

} // namespace knotcount
