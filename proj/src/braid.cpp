#include "knotcount/braid.hpp"

#include <algorithm>
#include <cstdlib>
#include <numeric>
#include <sstream>

#include "knotcount/error.hpp"

namespace knotcount {

BraidWord make_braid(int strands, std::vector<int> letters) {
    if (strands < 1) fail("MalformedSpec", "strand count must be >= 1");
    for (int l : letters) {
        int g = std::abs(l);
        if (g < 1 || g > strands - 1)
            fail("MalformedSpec", "generator " + std::to_string(l) + " out of range for " +
                                      std::to_string(strands) + " strands");
    }
    return BraidWord{strands, std::move(letters)};
}

BraidWord parse_braid(const std::string& text, int strands) {
    std::istringstream in(text);
    std::vector<int> letters;
    std::string tok;
    while (in >> tok) {
        try {
            size_t used = 0;
            int v = std::stoi(tok, &used);
            if (used != tok.size() || v == 0) throw std::invalid_argument(tok);
            letters.push_back(v);
        } catch (const std::exception&) {
            fail("MalformedSpec", "bad braid letter '" + tok + "'");
        }
    }
    if (strands <= 0) {
        strands = 1;
        for (int l : letters) strands = std::max(strands, std::abs(l) + 1);
    }
    return make_braid(strands, std::move(letters));
}

std::string format_braid(const BraidWord& b) {
    std::string s;
    for (size_t i = 0; i < b.letters.size(); ++i) {
        if (i) s += ' ';
        s += std::to_string(b.letters[i]);
    }
    return s;
}

BraidWord torus_braid(int p) {
    if (p < 0) fail("NegativeParameter", "torus braid parameter must be >= 0");
    return BraidWord{2, std::vector<int>(2 * p + 1, 1)};
}

std::vector<int> closure_permutation(const BraidWord& b) {
    std::vector<int> perm(b.strands);
    std::iota(perm.begin(), perm.end(), 0);
    for (int l : b.letters) {
        int i = std::abs(l) - 1;
        std::swap(perm[i], perm[i + 1]);
    }
    return perm;
}

bool is_knot(const BraidWord& b) {
    std::vector<int> perm = closure_permutation(b);
    int seen = 1;
    int x = perm[0];
    while (x != 0) {
        x = perm[x];
        ++seen;
        if (seen > b.strands) return false; // unreachable, but keeps the loop bounded
    }
    return seen == b.strands;
}

BraidWord markov_conjugate(const BraidWord& beta, const BraidWord& gamma) {
    if (beta.strands != gamma.strands)
        fail("StrandMismatch", "conjugating braid must use the same strand count");
    std::vector<int> letters = gamma.letters;
    letters.insert(letters.end(), beta.letters.begin(), beta.letters.end());
    for (auto it = gamma.letters.rbegin(); it != gamma.letters.rend(); ++it)
        letters.push_back(-*it);
    return BraidWord{beta.strands, std::move(letters)};
}

BraidWord markov_stabilize(const BraidWord& b, int sign) {
    if (sign != 1 && sign != -1) fail("MalformedSpec", "stabilization sign must be ±1");
    std::vector<int> letters = b.letters;
    letters.push_back(sign * b.strands);
    return BraidWord{b.strands + 1, std::move(letters)};
}

BraidWord switch_crossings(const BraidWord& b, const CrossingSelection& sel) {
    std::vector<int> letters = b.letters;
    for (auto [pos, eps] : sel.assignment) {
        if (pos < 0 || pos >= b.length())
            fail("IndexOutOfRange", "crossing position " + std::to_string(pos) +
                                        " outside word of length " + std::to_string(b.length()));
        if (eps != 1 && eps != -1) fail("MalformedSpec", "epsilon must be ±1");
        if (eps == -1) letters[pos] = -letters[pos];
    }
    return BraidWord{b.strands, std::move(letters)};
}

} // namespace knotcount
