#pragma once

#include <map>
#include <string>
#include <vector>

#include "knotcount/config.hpp"

namespace knotcount {

enum class Family { Cyclic, Dihedral, Symmetric, Alternating, Sl2Zm };

// A finite group as a dense multiplication table. Elements are indices
// 0..order-1; all structure (inverses, identity, powers) is table-backed.
// Immutable after construction, safe to share across threads.
struct GroupTable {
    int order = 0;
    std::vector<std::string> labels;
    std::vector<int> mul; // row-major, mul[a*order + b] = a*b (row = left factor)
    std::vector<int> inv;
    int id = 0;

    // Family metadata; empty for ad-hoc tables loaded from a spec.
    std::string family;
    int param = 0;
    // Named generators addressable by stable keys:
    //   dihedral: r1 = s, r2 = s*r; sl2_zm: A, B; symmetric: s1 = (12), s2 = (23);
    //   alternating: d1 = (12)(34), w1 = (12)(n-1,n), w2 = (23)(n-1,n).
    std::map<std::string, int> distinguished;

    int op(int a, int b) const { return mul[static_cast<size_t>(a) * order + b]; }
    int conj(int g, int a) const { return op(op(g, a), inv[g]); } // g a g^-1
    int power(int a, long long e) const;                          // e >= 0
    int element_order(int a) const;
    long long exponent() const; // lcm of element orders
    int label_index(const std::string& label) const; // -1 if unknown
    int generator(const std::string& name) const;    // throws on missing key
};

// Validates the table (identity, inverses, Latin rows/columns, associativity)
// and derives inv/id. Associativity is checked exhaustively for order <= 200,
// by deterministic sampling above that.
GroupTable group_from_table(int order, std::vector<std::string> labels,
                            std::vector<int> mul_row_major);

GroupTable make_family(Family f, int param, int order_cap = Caps{}.order_cap);
// Spec string form, e.g. "dihedral:7", "sl2_zm:5".
GroupTable make_family(const std::string& spec, int order_cap = Caps{}.order_cap);

// A conjugation-stable subset C of a group: g C g^-1 = C for all g. The
// coloring alphabet. Holds a non-owning pointer; the table must outlive it.
struct ConjSubset {
    const GroupTable* group = nullptr;
    std::vector<int> members; // strictly increasing element indices
    std::vector<int> pos;     // element index -> position in members, -1 outside

    int c() const { return static_cast<int>(members.size()); }
    bool contains(int g) const { return pos[g] >= 0; }
    int member_pos(int g) const { return pos[g]; }
};

// Smallest conjugation-stable superset of `seeds`.
ConjSubset conj_closure(const GroupTable& G, const std::vector<int>& seeds);

// Resolves a CLI subset spec: one of the named shortcuts ("reflections",
// "transpositions", "double_transpositions", "ab_class") or a whitespace-
// separated list of element labels, which is closed under conjugation.
ConjSubset resolve_subset(const GroupTable& G, const std::string& spec);

struct Subgroup {
    const GroupTable* group = nullptr;
    std::vector<int> members; // sorted; contains id; closed under op and inv
    std::vector<char> mask;   // size order

    bool contains(int g) const { return mask[g] != 0; }
    int size() const { return static_cast<int>(members.size()); }
};

Subgroup generated_subgroup(const GroupTable& G, const std::vector<int>& elems);
Subgroup commutator_subgroup(const GroupTable& G);
bool is_normal(const GroupTable& G, const Subgroup& N);
// Pre: N normal in G (checked, throws NotNormal). True iff some coset
// generates G/N.
bool quotient_is_cyclic(const GroupTable& G, const Subgroup& N);
// Reindexes H as a standalone GroupTable (labels inherited from G).
GroupTable subgroup_table(const GroupTable& G, const Subgroup& H);

bool all_members_commute(const ConjSubset& C);

} // namespace knotcount
