#include "knotcount/vassiliev.hpp"

#include <algorithm>
#include <numeric>

#include "knotcount/error.hpp"

namespace knotcount {

const char* verdict_name(Verdict v) {
    return v == Verdict::Constant ? "Constant" : "NotFiniteType";
}

KnotInvariant constant_invariant(long long value) {
    return [value](const BraidWord&) { return value; };
}

KnotInvariant counting_invariant(const ConjSubset& C, const Caps& caps, int threads) {
    return [&C, caps, threads](const BraidWord& b) {
        return count_by_trace(b, C, caps, threads).count;
    };
}

long long finite_type_sum(const KnotInvariant& v, const BraidWord& beta,
                          const std::vector<int>& positions, const Caps& caps) {
    std::vector<int> X = positions;
    std::sort(X.begin(), X.end());
    if (std::adjacent_find(X.begin(), X.end()) != X.end())
        fail("MalformedSpec", "crossing positions must be distinct");
    for (int p : X)
        if (p < 0 || p >= beta.length())
            fail("IndexOutOfRange", "crossing position " + std::to_string(p) + " out of range");
    const int N = static_cast<int>(X.size());
    if (N > caps.x_cap)
        fail("TooManyCrossings", std::to_string(N) + " crossings selected, cap is " +
                                     std::to_string(caps.x_cap));

    long long sum = 0;
    for (unsigned long long mask = 0; mask < (1ULL << N); ++mask) {
        CrossingSelection sel;
        int sign = 1;
        for (int i = 0; i < N; ++i) {
            int eps = (mask >> i) & 1 ? -1 : 1;
            sel.assignment[X[i]] = eps;
            sign *= eps;
        }
        sum += sign * v(switch_crossings(beta, sel));
    }
    return sum;
}

std::vector<std::vector<long long>> finite_differences(const std::vector<long long>& seq) {
    if (seq.size() < 2) fail("TooShort", "need at least two terms");
    std::vector<std::vector<long long>> rows;
    rows.push_back(seq);
    while (rows.back().size() > 1) {
        const auto& prev = rows.back();
        std::vector<long long> next(prev.size() - 1);
        for (size_t i = 0; i + 1 < prev.size(); ++i) next[i] = prev[i + 1] - prev[i];
        rows.push_back(std::move(next));
    }
    return rows;
}

bool is_polynomial_of_degree_at_most(const std::vector<long long>& seq, int n) {
    if (n < 0) fail("MalformedSpec", "degree must be >= 0");
    if (static_cast<int>(seq.size()) < n + 2)
        fail("TooShort", "need at least n+2 terms to test degree " + std::to_string(n));
    std::vector<long long> row = seq;
    for (int j = 0; j <= n; ++j) {
        std::vector<long long> next(row.size() - 1);
        for (size_t i = 0; i + 1 < row.size(); ++i) next[i] = row[i + 1] - row[i];
        row = std::move(next);
    }
    return std::all_of(row.begin(), row.end(), [](long long x) { return x == 0; });
}

TorusProfile torus_profile(const ConjSubset& C, int p_max, const Caps& caps, int crosscheck_pmax,
                           int threads) {
    if (p_max < 1) fail("MalformedSpec", "p_max must be >= 1");
    TorusProfile prof;
    prof.p_max = p_max;
    prof.bound = static_cast<long long>(C.c()) * C.c();
    for (int p = 0; p <= p_max; ++p) {
        long long n = torus_pair_count(p, C, caps).count;
        if (p <= crosscheck_pmax) {
            long long t = count_by_trace(torus_braid(p), C, caps, threads).count;
            if (t != n)
                fail("MethodDisagreement", "trace and pair counts differ at p=" +
                                               std::to_string(p) + " (" + std::to_string(t) +
                                               " vs " + std::to_string(n) + ")");
        }
        prof.counts.push_back(n);
    }
    prof.max_count = *std::max_element(prof.counts.begin(), prof.counts.end());
    for (int d = 1; d <= p_max && !prof.period; ++d) {
        bool ok = true;
        for (int p = 0; p + d <= p_max; ++p)
            if (prof.counts[p] != prof.counts[p + d]) {
                ok = false;
                break;
            }
        if (ok) prof.period = d;
    }
    bool constant = std::all_of(prof.counts.begin(), prof.counts.end(),
                                [&](long long x) { return x == prof.counts[0]; });
    prof.verdict = constant ? Verdict::Constant : Verdict::NotFiniteType;
    return prof;
}

std::vector<StarWitness> star_search(const ConjSubset& C, int p_max) {
    if (p_max < 0) fail("MalformedSpec", "p_max must be >= 0");
    const GroupTable& G = *C.group;
    std::vector<StarWitness> out;
    for (int a : C.members)
        for (int b : C.members) {
            if (a == b) continue;
            int ab = G.op(a, b);
            int ab_p = G.id;
            for (int p = 0; p <= p_max; ++p) {
                if (G.op(ab_p, a) == G.op(b, ab_p)) out.push_back({a, b, p});
                ab_p = G.op(ab_p, ab);
            }
        }
    return out;
}

Claim parse_claim(const std::string& name) {
    if (name == "lemma2") return Claim::Lemma2;
    if (name == "lemma3") return Claim::Lemma3;
    if (name == "thm3a") return Claim::Thm3a;
    if (name == "thm3b") return Claim::Thm3b;
    if (name == "thm3c") return Claim::Thm3c;
    if (name == "thm3d") return Claim::Thm3d;
    fail("ConfigError", "unknown claim '" + name + "'");
}

const char* claim_name(Claim c) {
    switch (c) {
        case Claim::Lemma2: return "lemma2";
        case Claim::Lemma3: return "lemma3";
        case Claim::Thm3a: return "thm3a";
        case Claim::Thm3b: return "thm3b";
        case Claim::Thm3c: return "thm3c";
        case Claim::Thm3d: return "thm3d";
    }
    return "?";
}

namespace {

bool is_prime(int n) {
    if (n < 2) return false;
    for (int d = 2; d * d <= n; ++d)
        if (n % d == 0) return false;
    return true;
}

// Index in symmetric(n) of the permutation i -> (shift - i) mod n, one of the
// reflections of the n-gon on vertices 0..n-1.
int ngon_reflection(const GroupTable& S, int n, int shift) {
    std::vector<int> perm(n);
    for (int i = 0; i < n; ++i) perm[i] = ((shift - i) % n + n) % n;
    std::string label;
    const bool compact = n <= 9;
    for (int i = 0; i < n; ++i) {
        if (i && !compact) label += ' ';
        label += std::to_string(perm[i] + 1);
    }
    int idx = S.label_index(label);
    if (idx < 0) fail("ConfigError", "reflection permutation not found in group");
    return idx;
}

} // namespace

FiniteTypeVerdict verify_claim(Claim claim, int param, const Caps& caps, int threads) {
    GroupTable G;
    std::vector<int> seeds;
    std::string subset_desc;
    int p_max = 4;

    switch (claim) {
        case Claim::Lemma2:
            if (param < 3 || param % 2 == 0)
                fail("UnsupportedParameter", "lemma2 needs odd n >= 3");
            G = make_family(Family::Dihedral, param, caps.order_cap);
            seeds = {G.generator("r1"), G.generator("r2")};
            subset_desc = "reflections";
            p_max = std::max(param, 4);
            break;
        case Claim::Lemma3:
            if (param < 2) fail("UnsupportedParameter", "lemma3 needs m >= 2");
            G = make_family(Family::Sl2Zm, param, caps.order_cap);
            seeds = {G.generator("A"), G.generator("B")};
            subset_desc = "ab_class";
            break;
        case Claim::Thm3a:
            if (param < 3 || param % 2 == 0)
                fail("UnsupportedParameter", "thm3a needs odd n >= 3");
            G = make_family(Family::Symmetric, param, caps.order_cap);
            // D_n inside S_n, generated by two reflections of the n-gon.
            seeds = {ngon_reflection(G, param, 0), ngon_reflection(G, param, 1)};
            subset_desc = "ngon_reflections";
            p_max = std::max(param, 4);
            break;
        case Claim::Thm3b:
            if (param < 3) fail("UnsupportedParameter", "thm3b needs n >= 3");
            G = make_family(Family::Symmetric, param, caps.order_cap);
            seeds = {G.generator("s1")};
            subset_desc = "transpositions";
            break;
        case Claim::Thm3c:
            if (param < 5) fail("UnsupportedParameter", "thm3c needs n >= 5");
            G = make_family(Family::Alternating, param, caps.order_cap);
            seeds = {G.generator("d1")};
            subset_desc = "double_transpositions";
            break;
        case Claim::Thm3d:
            if (!is_prime(param)) fail("UnsupportedParameter", "thm3d needs a prime p");
            G = make_family(Family::Sl2Zm, param, caps.order_cap);
            seeds = {G.generator("A"), G.generator("B")};
            subset_desc = "ab_class";
            break;
    }

    ConjSubset C = conj_closure(G, seeds);
    std::vector<StarWitness> witnesses = star_search(C, p_max);
    TorusProfile profile = torus_profile(C, p_max, caps, /*crosscheck_pmax=*/4, threads);

    FiniteTypeVerdict v;
    v.claim = std::string(claim_name(claim)) + "(" + std::to_string(param) + ")";
    v.group_desc = G.family + ":" + std::to_string(G.param);
    v.subset_desc = subset_desc;
    v.c = C.c();
    v.holds = !witnesses.empty() && profile.verdict == Verdict::NotFiniteType;
    for (const StarWitness& w : witnesses)
        v.witnesses.push_back({G.labels[w.a], G.labels[w.b], w.p});
    v.profile = std::move(profile);
    return v;
}

} // namespace knotcount
