#include "knotcount/invariant.hpp"

#include <algorithm>
#include <cstdlib>
#include <map>
#include <numeric>
#include <thread>

#include "knotcount/error.hpp"

namespace knotcount {

const char* method_name(CountMethod m) {
    switch (m) {
        case CountMethod::Trace: return "trace";
        case CountMethod::Wirtinger: return "wirtinger";
        case CountMethod::TorusPairs: return "torus_pairs";
    }
    return "?";
}

std::pair<int, int> r_apply(const ConjSubset& C, int a, int b) {
    return {C.group->conj(a, b), a};
}

std::pair<int, int> r_apply_inv(const ConjSubset& C, int a, int b) {
    return {b, C.group->conj(C.group->inv[b], a)};
}

Coloring braid_act(const BraidWord& b, const Coloring& col, const ConjSubset& C) {
    if (static_cast<int>(col.entries.size()) != b.strands)
        fail("LengthMismatch", "coloring length does not match strand count");
    std::vector<int> elems(b.strands);
    for (int i = 0; i < b.strands; ++i) elems[i] = C.members.at(col.entries[i]);
    for (int l : b.letters) {
        int i = std::abs(l) - 1;
        auto [x, y] = l > 0 ? r_apply(C, elems[i], elems[i + 1])
                            : r_apply_inv(C, elems[i], elems[i + 1]);
        elems[i] = x;
        elems[i + 1] = y;
    }
    Coloring out;
    out.entries.resize(b.strands);
    for (int i = 0; i < b.strands; ++i) out.entries[i] = C.member_pos(elems[i]);
    return out;
}

namespace {

long long checked_pow(long long base, int exp, const char* what) {
    long long r = 1;
    for (int i = 0; i < exp; ++i) {
        if (base != 0 && r > (1LL << 62) / base)
            fail("StateSpaceTooLarge", std::string(what) + ": c^k overflows");
        r *= base;
    }
    return r;
}

void require_knot(const BraidWord& b) {
    if (!is_knot(b))
        fail("NotAKnot", "closure of '" + format_braid(b) + "' on " +
                             std::to_string(b.strands) + " strands has more than one component");
}

void check_budget(long long total, int steps_per_state, const Caps& caps) {
    long long per = std::max(1, steps_per_state);
    if (total > caps.state_cap / per)
        fail("StateSpaceTooLarge", "enumeration needs about " + std::to_string(total) + " x " +
                                       std::to_string(per) + " coloring-steps, cap is " +
                                       std::to_string(caps.state_cap));
}

// Splits [0,total) across threads; fn(begin,end) returns a partial count.
// Deterministic: the result is the plain sum of the chunk counts.
template <class ChunkFn>
long long run_partitioned(long long total, int threads, ChunkFn fn) {
    threads = std::max(1, threads);
    if (threads == 1 || total < 8192) return fn(0, total);
    int nt = static_cast<int>(std::min<long long>(threads, total));
    std::vector<long long> partial(nt, 0);
    std::vector<std::thread> pool;
    long long chunk = (total + nt - 1) / nt;
    for (int t = 0; t < nt; ++t) {
        long long lo = t * chunk;
        long long hi = std::min(total, lo + chunk);
        if (lo >= hi) break;
        pool.emplace_back([&partial, &fn, t, lo, hi] { partial[t] = fn(lo, hi); });
    }
    for (auto& th : pool) th.join();
    return std::accumulate(partial.begin(), partial.end(), 0LL);
}

// Mixed-radix decode of a coloring index into k digits base c, most
// significant digit first (lexicographic enumeration order).
void decode(long long index, int k, int c, std::vector<int>& digits) {
    for (int i = k - 1; i >= 0; --i) {
        digits[i] = static_cast<int>(index % c);
        index /= c;
    }
}

bool next_digits(std::vector<int>& digits, int c) {
    for (int i = static_cast<int>(digits.size()) - 1; i >= 0; --i) {
        if (++digits[i] < c) return true;
        digits[i] = 0;
    }
    return false;
}

} // namespace

CountReport count_by_trace(const BraidWord& b, const ConjSubset& C, const Caps& caps,
                           int threads) {
    require_knot(b);
    const GroupTable& G = *C.group;
    const int k = b.strands;
    const int c = C.c();
    long long total = checked_pow(c, k, "count_by_trace");
    check_budget(total, b.length(), caps);

    long long count = run_partitioned(total, threads, [&](long long lo, long long hi) {
        std::vector<int> digits(k);
        std::vector<int> elems(k), work(k);
        decode(lo, k, c, digits);
        long long fixed = 0;
        for (long long idx = lo; idx < hi; ++idx) {
            for (int i = 0; i < k; ++i) work[i] = elems[i] = C.members[digits[i]];
            for (int l : b.letters) {
                int i = std::abs(l) - 1;
                int a = work[i], x = work[i + 1];
                if (l > 0) {
                    work[i] = G.conj(a, x);
                    work[i + 1] = a;
                } else {
                    work[i] = x;
                    work[i + 1] = G.conj(G.inv[x], a);
                }
            }
            if (work == elems) ++fixed;
            next_digits(digits, c);
        }
        return fixed;
    });

    return CountReport{count, k, c, total, CountMethod::Trace};
}

namespace {

// One Wirtinger relation: color[out] = over * color[in] * over^-1 (positive
// crossing) or over^-1 * color[in] * over (negative), where `over` is the
// color of the over-arc.
struct ArcRelation {
    int out_arc;
    int over_arc;
    int in_arc;
    int sign;
};

struct ArcDiagram {
    int arcs;                                  // k top arcs + one new arc per crossing
    std::vector<ArcRelation> relations;        // in diagram order, top to bottom
    std::vector<std::pair<int, int>> closure;  // (bottom arc at position i, top arc i)
};

// Builds the arc structure of the braid closure: arcs are maximal strand
// segments between undercrossings, each crossing breaks the under-strand and
// starts a fresh arc, and the closure identifies bottom arcs with top arcs.
ArcDiagram build_arc_diagram(const BraidWord& b) {
    ArcDiagram d;
    d.arcs = b.strands;
    std::vector<int> at_position(b.strands);
    std::iota(at_position.begin(), at_position.end(), 0);
    for (int l : b.letters) {
        int i = std::abs(l) - 1;
        int fresh = d.arcs++;
        if (l > 0) {
            // strand at position i passes over position i+1
            d.relations.push_back({fresh, at_position[i], at_position[i + 1], +1});
            at_position[i + 1] = at_position[i];
            at_position[i] = fresh;
        } else {
            // strand at position i+1 passes over position i
            d.relations.push_back({fresh, at_position[i + 1], at_position[i], -1});
            at_position[i] = at_position[i + 1];
            at_position[i + 1] = fresh;
        }
    }
    for (int i = 0; i < b.strands; ++i) d.closure.emplace_back(at_position[i], i);
    return d;
}

} // namespace

CountReport count_by_wirtinger(const BraidWord& b, const ConjSubset& C, const Caps& caps,
                               int threads) {
    require_knot(b);
    const GroupTable& G = *C.group;
    const int k = b.strands;
    const int c = C.c();
    long long total = checked_pow(c, k, "count_by_wirtinger");
    check_budget(total, b.length() + k, caps);
    const ArcDiagram diagram = build_arc_diagram(b);

    long long count = run_partitioned(total, threads, [&](long long lo, long long hi) {
        std::vector<int> digits(k);
        std::vector<int> color(diagram.arcs);
        decode(lo, k, c, digits);
        long long consistent = 0;
        for (long long idx = lo; idx < hi; ++idx) {
            // free choices: the k top arcs; every other arc is determined
            for (int i = 0; i < k; ++i) color[i] = C.members[digits[i]];
            for (const ArcRelation& r : diagram.relations) {
                int over = color[r.over_arc];
                color[r.out_arc] = r.sign > 0 ? G.conj(over, color[r.in_arc])
                                              : G.conj(G.inv[over], color[r.in_arc]);
            }
            bool ok = true;
            for (auto [bottom, top] : diagram.closure) {
                if (color[bottom] != color[top]) {
                    ok = false;
                    break;
                }
            }
            if (ok) ++consistent;
            next_digits(digits, c);
        }
        return consistent;
    });

    return CountReport{count, k, c, total, CountMethod::Wirtinger};
}

CountReport torus_pair_count(int p, const ConjSubset& C, const Caps& caps) {
    if (p < 0) fail("NegativeParameter", "torus pair count needs p >= 0");
    const GroupTable& G = *C.group;
    const int c = C.c();
    long long total = static_cast<long long>(c) * c;
    check_budget(total, 1, caps);
    long long count = 0;
    for (int a : C.members)
        for (int b : C.members) {
            int ab_p = G.power(G.op(a, b), p);
            if (G.op(ab_p, a) == G.op(b, ab_p)) ++count;
        }
    return CountReport{count, 2, c, total, CountMethod::TorusPairs};
}

bool image_abelianization_check(const BraidWord& b, const ConjSubset& C, const Caps& caps) {
    require_knot(b);
    const GroupTable& G = *C.group;
    const int k = b.strands;
    const int c = C.c();
    long long total = checked_pow(c, k, "image_abelianization_check");
    check_budget(total, b.length(), caps);

    std::map<std::vector<int>, bool> cache; // keyed by the sorted set of meridian images
    std::vector<int> digits(k, 0);
    std::vector<int> elems(k), work(k);
    for (long long idx = 0; idx < total; ++idx, next_digits(digits, c)) {
        for (int i = 0; i < k; ++i) work[i] = elems[i] = C.members[digits[i]];
        for (int l : b.letters) {
            int i = std::abs(l) - 1;
            int a = work[i], x = work[i + 1];
            if (l > 0) {
                work[i] = G.conj(a, x);
                work[i + 1] = a;
            } else {
                work[i] = x;
                work[i + 1] = G.conj(G.inv[x], a);
            }
        }
        if (work != elems) continue;

        // All arc colors are conjugates of the strand-top colors by elements
        // of the subgroup they generate, so the image is generated by them.
        std::vector<int> key = elems;
        std::sort(key.begin(), key.end());
        key.erase(std::unique(key.begin(), key.end()), key.end());
        auto it = cache.find(key);
        if (it == cache.end()) {
            Subgroup H = generated_subgroup(G, key);
            GroupTable Ht = subgroup_table(G, H);
            Subgroup Hc = commutator_subgroup(Ht);
            it = cache.emplace(key, quotient_is_cyclic(Ht, Hc)).first;
        }
        if (!it->second) return false;
    }
    return true;
}

} // namespace knotcount
