#pragma once

#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "knotcount/braid.hpp"
#include "knotcount/config.hpp"
#include "knotcount/group.hpp"
#include "knotcount/invariant.hpp"

namespace knotcount {

using KnotInvariant = std::function<long long(const BraidWord&)>;

KnotInvariant constant_invariant(long long value);
// The counting invariant [closure(beta), G, C] as a function of the braid.
KnotInvariant counting_invariant(const ConjSubset& C, const Caps& caps = {}, int threads = 1);

// The alternating sum over all 2^|X| crossing switches of `beta`:
//   sum_eps prod_i eps(c_i) * v(K_eps)
// Vanishing of these sums for all |X| > n defines a type-n invariant.
long long finite_type_sum(const KnotInvariant& v, const BraidWord& beta,
                          const std::vector<int>& positions, const Caps& caps = {});

// Forward-difference table: row 0 is the sequence, row j its j-th differences,
// down to the single-element row.
std::vector<std::vector<long long>> finite_differences(const std::vector<long long>& seq);

// True iff the (n+1)-th forward differences vanish. Requires length >= n+2.
bool is_polynomial_of_degree_at_most(const std::vector<long long>& seq, int n);

enum class Verdict { Constant, NotFiniteType };
const char* verdict_name(Verdict v);

// The sequence p -> [K_p,G,C] over the (2,2p+1) torus knots. Non-constancy of
// this sequence rules out finite type, since the sequence is bounded by c^2.
struct TorusProfile {
    int p_max = 0;
    std::vector<long long> counts;   // index p, p = 0..p_max
    std::optional<int> period;       // smallest d >= 1 consistent over the range
    long long max_count = 0;
    long long bound = 0;             // c^2
    Verdict verdict = Verdict::Constant;
};

// counts[p] by pair enumeration, cross-checked against the trace count on
// torus_braid(p) for p <= crosscheck_pmax.
TorusProfile torus_profile(const ConjSubset& C, int p_max, const Caps& caps = {},
                           int crosscheck_pmax = 6, int threads = 1);

// A witness to condition (**): a != b in C with (ab)^p a = b (ab)^p.
struct StarWitness {
    int a = 0; // group element indices
    int b = 0;
    int p = 0;
};

// All witnesses with 0 <= p <= p_max, ordered by (a, b, p) in member order.
std::vector<StarWitness> star_search(const ConjSubset& C, int p_max);

enum class Claim { Lemma2, Lemma3, Thm3a, Thm3b, Thm3c, Thm3d };
Claim parse_claim(const std::string& name);
const char* claim_name(Claim c);

struct NamedWitness {
    std::string a;
    std::string b;
    int p = 0;
};

struct FiniteTypeVerdict {
    std::string claim;       // e.g. "lemma2(5)"
    std::string group_desc;  // family:param
    std::string subset_desc;
    int c = 0;
    bool holds = false;      // witness found and profile non-constant
    std::vector<NamedWitness> witnesses;
    TorusProfile profile;
};

// Builds the (G,C) pair named by the claim, runs star_search and
// torus_profile, and reports whether the "not finite type" conclusion is
// confirmed experimentally.
FiniteTypeVerdict verify_claim(Claim claim, int param, const Caps& caps = {}, int threads = 1);

} // namespace knotcount
