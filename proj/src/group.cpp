#include "knotcount/group.hpp"

#include <algorithm>
#include <array>
#include <numeric>
#include <random>
#include <sstream>

#include "knotcount/error.hpp"

namespace knotcount {

int GroupTable::power(int a, long long e) const {
    int result = id;
    int base = a;
    while (e > 0) {
        if (e & 1) result = op(result, base);
        base = op(base, base);
        e >>= 1;
    }
    return result;
}

int GroupTable::element_order(int a) const {
    int x = a;
    int n = 1;
    while (x != id) {
        x = op(x, a);
        ++n;
    }
    return n;
}

long long GroupTable::exponent() const {
    long long e = 1;
    for (int a = 0; a < order; ++a) e = std::lcm(e, static_cast<long long>(element_order(a)));
    return e;
}

int GroupTable::label_index(const std::string& label) const {
    for (int i = 0; i < order; ++i)
        if (labels[i] == label) return i;
    return -1;
}

int GroupTable::generator(const std::string& name) const {
    auto it = distinguished.find(name);
    if (it == distinguished.end())
        fail("ConfigError", "group has no distinguished generator '" + name + "'");
    return it->second;
}

namespace {

// Fills inv/id for a table already known to be a group.
void derive_identity_and_inverses(GroupTable& G) {
    G.id = -1;
    for (int e = 0; e < G.order && G.id < 0; ++e) {
        bool ok = true;
        for (int a = 0; a < G.order && ok; ++a)
            if (G.op(e, a) != a || G.op(a, e) != a) ok = false;
        if (ok) G.id = e;
    }
    if (G.id < 0) fail("NotAGroup", "no two-sided identity element");
    G.inv.assign(G.order, -1);
    for (int a = 0; a < G.order; ++a) {
        for (int b = 0; b < G.order; ++b) {
            if (G.op(a, b) == G.id && G.op(b, a) == G.id) {
                G.inv[a] = b;
                break;
            }
        }
        if (G.inv[a] < 0)
            fail("NotAGroup", "element " + G.labels[a] + " has no two-sided inverse");
    }
}

void check_associativity(const GroupTable& G) {
    auto witness = [&](int a, int b, int c) {
        std::ostringstream os;
        os << "associativity fails at (" << G.labels[a] << ", " << G.labels[b] << ", "
           << G.labels[c] << ")";
        fail("NotAGroup", os.str());
    };
    if (G.order <= 200) {
        for (int a = 0; a < G.order; ++a)
            for (int b = 0; b < G.order; ++b)
                for (int c = 0; c < G.order; ++c)
                    if (G.op(G.op(a, b), c) != G.op(a, G.op(b, c))) witness(a, b, c);
    } else {
        std::mt19937 rng(0x5eed);
        std::uniform_int_distribution<int> pick(0, G.order - 1);
        for (int t = 0; t < 200'000; ++t) {
            int a = pick(rng), b = pick(rng), c = pick(rng);
            if (G.op(G.op(a, b), c) != G.op(a, G.op(b, c))) witness(a, b, c);
        }
    }
}

std::string default_label(int i) { return std::to_string(i); }

} // namespace

GroupTable group_from_table(int order, std::vector<std::string> labels,
                            std::vector<int> mul_row_major) {
    if (order <= 0) fail("MalformedSpec", "order must be positive");
    if (labels.empty()) {
        labels.resize(order);
        for (int i = 0; i < order; ++i) labels[i] = default_label(i);
    }
    if (static_cast<int>(labels.size()) != order)
        fail("MalformedSpec", "label count does not match order");
    if (mul_row_major.size() != static_cast<size_t>(order) * order)
        fail("MalformedSpec", "mul table is not order x order");
    for (int v : mul_row_major)
        if (v < 0 || v >= order) fail("MalformedSpec", "mul entry out of range");

    GroupTable G;
    G.order = order;
    G.labels = std::move(labels);
    G.mul = std::move(mul_row_major);

    // Latin square: every row and column is a permutation.
    std::vector<char> seen(order);
    for (int a = 0; a < order; ++a) {
        std::fill(seen.begin(), seen.end(), 0);
        for (int b = 0; b < order; ++b) {
            int v = G.op(a, b);
            if (seen[v]) fail("NotAGroup", "row " + G.labels[a] + " repeats " + G.labels[v]);
            seen[v] = 1;
        }
    }
    for (int b = 0; b < order; ++b) {
        std::fill(seen.begin(), seen.end(), 0);
        for (int a = 0; a < order; ++a) {
            int v = G.op(a, b);
            if (seen[v]) fail("NotAGroup", "column " + G.labels[b] + " repeats " + G.labels[v]);
            seen[v] = 1;
        }
    }

    derive_identity_and_inverses(G);
    check_associativity(G);
    return G;
}

namespace {

GroupTable make_cyclic(int m) {
    GroupTable G;
    G.order = m;
    G.labels.resize(m);
    G.mul.resize(static_cast<size_t>(m) * m);
    for (int i = 0; i < m; ++i) G.labels[i] = std::to_string(i);
    for (int a = 0; a < m; ++a)
        for (int b = 0; b < m; ++b) G.mul[static_cast<size_t>(a) * m + b] = (a + b) % m;
    G.family = "cyclic";
    G.param = m;
    G.distinguished["g"] = 1 % m;
    derive_identity_and_inverses(G);
    return G;
}

// Element s^j r^i at index j*n + i; r^i s = s r^{-i}.
GroupTable make_dihedral(int n) {
    GroupTable G;
    G.order = 2 * n;
    G.labels.resize(G.order);
    G.mul.resize(static_cast<size_t>(G.order) * G.order);
    for (int i = 0; i < n; ++i) {
        G.labels[i] = "r^" + std::to_string(i);
        G.labels[n + i] = "s*r^" + std::to_string(i);
    }
    auto idx = [n](int j, int i) { return j * n + ((i % n + n) % n); };
    for (int j = 0; j < 2; ++j)
        for (int i = 0; i < n; ++i)
            for (int l = 0; l < 2; ++l)
                for (int m = 0; m < n; ++m) {
                    int lhs = idx(j, i);
                    int rhs = idx(l, m);
                    int prod = idx(j ^ l, (l ? -i : i) + m);
                    G.mul[static_cast<size_t>(lhs) * G.order + rhs] = prod;
                }
    G.family = "dihedral";
    G.param = n;
    G.distinguished["r1"] = idx(1, 0); // s
    G.distinguished["r2"] = idx(1, 1); // s*r
    derive_identity_and_inverses(G);
    return G;
}

std::string perm_label(const std::vector<int>& p) {
    std::string s;
    const bool compact = p.size() <= 9;
    for (size_t i = 0; i < p.size(); ++i) {
        if (i && !compact) s += ' ';
        s += std::to_string(p[i] + 1);
    }
    return s;
}

bool perm_is_even(const std::vector<int>& p) {
    int inversions = 0;
    for (size_t i = 0; i < p.size(); ++i)
        for (size_t j = i + 1; j < p.size(); ++j)
            if (p[i] > p[j]) ++inversions;
    return inversions % 2 == 0;
}

GroupTable make_permutation_group(int n, bool even_only, int order_cap) {
    long long expected = 1;
    for (int i = 2; i <= n; ++i) expected *= i;
    if (even_only && n >= 2) expected /= 2;
    if (expected > order_cap)
        fail("ParamOutOfRange", "group of order " + std::to_string(expected) +
                                    " exceeds order cap " + std::to_string(order_cap));

    std::vector<std::vector<int>> perms;
    std::vector<int> p(n);
    std::iota(p.begin(), p.end(), 0);
    do {
        if (!even_only || perm_is_even(p)) perms.push_back(p);
    } while (std::next_permutation(p.begin(), p.end()));

    std::map<std::vector<int>, int> index;
    for (size_t i = 0; i < perms.size(); ++i) index[perms[i]] = static_cast<int>(i);

    GroupTable G;
    G.order = static_cast<int>(perms.size());
    G.labels.resize(G.order);
    G.mul.resize(static_cast<size_t>(G.order) * G.order);
    for (int i = 0; i < G.order; ++i) G.labels[i] = perm_label(perms[i]);

    std::vector<int> comp(n);
    for (int a = 0; a < G.order; ++a)
        for (int b = 0; b < G.order; ++b) {
            for (int i = 0; i < n; ++i) comp[i] = perms[a][perms[b][i]];
            G.mul[static_cast<size_t>(a) * G.order + b] = index.at(comp);
        }

    G.family = even_only ? "alternating" : "symmetric";
    G.param = n;
    auto transposed = [&](std::initializer_list<std::pair<int, int>> swaps) {
        std::vector<int> q(n);
        std::iota(q.begin(), q.end(), 0);
        for (auto [i, j] : swaps) std::swap(q[i], q[j]);
        return index.at(q);
    };
    if (!even_only) {
        if (n >= 2) G.distinguished["s1"] = transposed({{0, 1}});
        if (n >= 3) G.distinguished["s2"] = transposed({{1, 2}});
    } else {
        if (n >= 4) G.distinguished["d1"] = transposed({{0, 1}, {2, 3}});
        if (n >= 5) {
            G.distinguished["w1"] = transposed({{0, 1}, {n - 2, n - 1}});
            G.distinguished["w2"] = transposed({{1, 2}, {n - 2, n - 1}});
        }
    }
    derive_identity_and_inverses(G);
    return G;
}

long long sl2_order(int m) {
    // |SL(2,Z_m)| = m^3 * prod_{p | m} (1 - 1/p^2)
    long long ord = static_cast<long long>(m) * m * m;
    int rest = m;
    for (int p = 2; p * p <= rest; ++p) {
        if (rest % p == 0) {
            ord = ord / (static_cast<long long>(p) * p) * (static_cast<long long>(p) * p - 1);
            while (rest % p == 0) rest /= p;
        }
    }
    if (rest > 1)
        ord = ord / (static_cast<long long>(rest) * rest) *
              (static_cast<long long>(rest) * rest - 1);
    return ord;
}

GroupTable make_sl2(int m, int order_cap) {
    long long expected = sl2_order(m);
    if (expected > order_cap)
        fail("ParamOutOfRange", "SL(2,Z_" + std::to_string(m) + ") has order " +
                                    std::to_string(expected) + ", exceeds cap " +
                                    std::to_string(order_cap));

    auto key = [m](int a, int b, int c, int d) {
        return ((static_cast<long long>(a) * m + b) * m + c) * m + d;
    };
    std::vector<int> key_to_idx(static_cast<size_t>(m) * m * m * m, -1);
    std::vector<std::array<int, 4>> mats;
    for (int a = 0; a < m; ++a)
        for (int b = 0; b < m; ++b)
            for (int c = 0; c < m; ++c)
                for (int d = 0; d < m; ++d) {
                    long long det = (static_cast<long long>(a) * d - static_cast<long long>(b) * c) % m;
                    if ((det % m + m) % m == 1 % m) {
                        key_to_idx[key(a, b, c, d)] = static_cast<int>(mats.size());
                        mats.push_back({a, b, c, d});
                    }
                }

    GroupTable G;
    G.order = static_cast<int>(mats.size());
    G.labels.resize(G.order);
    G.mul.resize(static_cast<size_t>(G.order) * G.order);
    for (int i = 0; i < G.order; ++i) {
        const auto& M = mats[i];
        G.labels[i] = "[[" + std::to_string(M[0]) + "," + std::to_string(M[1]) + "],[" +
                      std::to_string(M[2]) + "," + std::to_string(M[3]) + "]]";
    }
    for (int x = 0; x < G.order; ++x)
        for (int y = 0; y < G.order; ++y) {
            const auto& P = mats[x];
            const auto& Q = mats[y];
            int a = static_cast<int>((static_cast<long long>(P[0]) * Q[0] + static_cast<long long>(P[1]) * Q[2]) % m);
            int b = static_cast<int>((static_cast<long long>(P[0]) * Q[1] + static_cast<long long>(P[1]) * Q[3]) % m);
            int c = static_cast<int>((static_cast<long long>(P[2]) * Q[0] + static_cast<long long>(P[3]) * Q[2]) % m);
            int d = static_cast<int>((static_cast<long long>(P[2]) * Q[1] + static_cast<long long>(P[3]) * Q[3]) % m);
            G.mul[static_cast<size_t>(x) * G.order + y] = key_to_idx[key(a, b, c, d)];
        }

    G.family = "sl2_zm";
    G.param = m;
    G.distinguished["A"] = key_to_idx[key(1, 1, 0, 1)];
    G.distinguished["B"] = key_to_idx[key(1, 0, (m - 1) % m, 1)];
    derive_identity_and_inverses(G);
    return G;
}

} // namespace

GroupTable make_family(Family f, int param, int order_cap) {
    switch (f) {
        case Family::Cyclic:
            if (param < 1) fail("ParamOutOfRange", "cyclic requires param >= 1");
            if (param > order_cap) fail("ParamOutOfRange", "order exceeds cap");
            return make_cyclic(param);
        case Family::Dihedral:
            if (param < 2) fail("ParamOutOfRange", "dihedral requires param >= 2");
            if (2LL * param > order_cap) fail("ParamOutOfRange", "order exceeds cap");
            return make_dihedral(param);
        case Family::Symmetric:
            if (param < 1) fail("ParamOutOfRange", "symmetric requires param >= 1");
            return make_permutation_group(param, false, order_cap);
        case Family::Alternating:
            if (param < 1) fail("ParamOutOfRange", "alternating requires param >= 1");
            return make_permutation_group(param, true, order_cap);
        case Family::Sl2Zm:
            if (param < 2) fail("ParamOutOfRange", "sl2_zm requires param >= 2");
            return make_sl2(param, order_cap);
    }
    fail("ParamOutOfRange", "unknown family");
}

GroupTable make_family(const std::string& spec, int order_cap) {
    auto colon = spec.find(':');
    if (colon == std::string::npos)
        fail("ConfigError", "family spec must look like 'dihedral:7', got '" + spec + "'");
    std::string name = spec.substr(0, colon);
    int param = 0;
    try {
        param = std::stoi(spec.substr(colon + 1));
    } catch (const std::exception&) {
        fail("ConfigError", "bad family parameter in '" + spec + "'");
    }
    Family f;
    if (name == "cyclic") f = Family::Cyclic;
    else if (name == "dihedral") f = Family::Dihedral;
    else if (name == "symmetric") f = Family::Symmetric;
    else if (name == "alternating") f = Family::Alternating;
    else if (name == "sl2_zm") f = Family::Sl2Zm;
    else fail("ConfigError", "unknown family '" + name + "'");
    return make_family(f, param, order_cap);
}

namespace {

ConjSubset subset_from_mask(const GroupTable& G, const std::vector<char>& mask) {
    ConjSubset C;
    C.group = &G;
    C.pos.assign(G.order, -1);
    for (int g = 0; g < G.order; ++g)
        if (mask[g]) {
            C.pos[g] = static_cast<int>(C.members.size());
            C.members.push_back(g);
        }
    return C;
}

} // namespace

ConjSubset conj_closure(const GroupTable& G, const std::vector<int>& seeds) {
    if (seeds.empty()) fail("EmptySeeds", "conjugation closure needs at least one seed");
    std::vector<char> mask(G.order, 0);
    std::vector<int> queue;
    for (int s : seeds) {
        if (s < 0 || s >= G.order) fail("MalformedSpec", "seed index out of range");
        if (!mask[s]) {
            mask[s] = 1;
            queue.push_back(s);
        }
    }
    while (!queue.empty()) {
        int x = queue.back();
        queue.pop_back();
        for (int g = 0; g < G.order; ++g) {
            int y = G.conj(g, x);
            if (!mask[y]) {
                mask[y] = 1;
                queue.push_back(y);
            }
        }
    }
    return subset_from_mask(G, mask);
}

ConjSubset resolve_subset(const GroupTable& G, const std::string& spec) {
    auto named = [&](const char* family, std::vector<std::string> gens) {
        if (G.family != family)
            fail("ConfigError", "subset '" + spec + "' requires a " + family + " group");
        std::vector<int> seeds;
        for (const auto& g : gens) seeds.push_back(G.generator(g));
        return conj_closure(G, seeds);
    };
    if (spec == "reflections") return named("dihedral", {"r1", "r2"});
    if (spec == "transpositions") return named("symmetric", {"s1"});
    if (spec == "double_transpositions") return named("alternating", {"d1"});
    if (spec == "ab_class") return named("sl2_zm", {"A", "B"});

    // Fall back: whitespace-separated element labels, closed under conjugation.
    std::istringstream in(spec);
    std::vector<int> seeds;
    std::string label;
    while (in >> label) {
        int idx = G.label_index(label);
        if (idx < 0) fail("ConfigError", "unknown element label '" + label + "'");
        seeds.push_back(idx);
    }
    if (seeds.empty()) fail("ConfigError", "empty subset spec");
    return conj_closure(G, seeds);
}

Subgroup generated_subgroup(const GroupTable& G, const std::vector<int>& elems) {
    for (int e : elems)
        if (e < 0 || e >= G.order) fail("MalformedSpec", "generator index out of range");
    Subgroup H;
    H.group = &G;
    H.mask.assign(G.order, 0);
    std::vector<int> queue;
    auto add = [&](int x) {
        if (!H.mask[x]) {
            H.mask[x] = 1;
            queue.push_back(x);
        }
    };
    add(G.id);
    for (int e : elems) {
        add(e);
        add(G.inv[e]);
    }
    // Product closure; inverses of products are products of inverses already in.
    while (!queue.empty()) {
        int x = queue.back();
        queue.pop_back();
        for (int g = 0; g < G.order; ++g) {
            if (!H.mask[g]) continue;
            add(G.op(x, g));
            add(G.op(g, x));
        }
    }
    for (int g = 0; g < G.order; ++g)
        if (H.mask[g]) H.members.push_back(g);
    return H;
}

Subgroup commutator_subgroup(const GroupTable& G) {
    std::vector<char> seen(G.order, 0);
    std::vector<int> commutators;
    for (int a = 0; a < G.order; ++a)
        for (int b = 0; b < G.order; ++b) {
            int c = G.op(G.op(a, b), G.op(G.inv[a], G.inv[b]));
            if (!seen[c]) {
                seen[c] = 1;
                commutators.push_back(c);
            }
        }
    return generated_subgroup(G, commutators);
}

bool is_normal(const GroupTable& G, const Subgroup& N) {
    for (int g = 0; g < G.order; ++g)
        for (int h : N.members)
            if (!N.contains(G.conj(g, h))) return false;
    return true;
}

bool quotient_is_cyclic(const GroupTable& G, const Subgroup& N) {
    if (!is_normal(G, N)) fail("NotNormal", "subgroup is not normal in G");
    const int q = G.order / N.size();
    if (q == 1) return true;

    // Canonical coset representative: least element of gN.
    std::vector<int> rep(G.order);
    for (int g = 0; g < G.order; ++g) {
        int r = G.order;
        for (int h : N.members) r = std::min(r, G.op(g, h));
        rep[g] = r;
    }
    std::vector<int> reps;
    std::vector<int> coset_of(G.order, -1);
    for (int g = 0; g < G.order; ++g) {
        if (rep[g] == g) {
            coset_of[g] = static_cast<int>(reps.size());
            reps.push_back(g);
        }
    }
    for (int g = 0; g < G.order; ++g) coset_of[g] = coset_of[rep[g]];

    for (int x : reps) {
        // order of xN in G/N
        int acc = x;
        int n = 1;
        while (coset_of[acc] != coset_of[G.id]) {
            acc = G.op(acc, x);
            ++n;
        }
        if (n == q) return true;
    }
    return false;
}

GroupTable subgroup_table(const GroupTable& G, const Subgroup& H) {
    std::vector<int> pos(G.order, -1);
    for (size_t i = 0; i < H.members.size(); ++i) pos[H.members[i]] = static_cast<int>(i);
    GroupTable T;
    T.order = H.size();
    T.labels.resize(T.order);
    T.mul.resize(static_cast<size_t>(T.order) * T.order);
    for (int i = 0; i < T.order; ++i) T.labels[i] = G.labels[H.members[i]];
    for (int i = 0; i < T.order; ++i)
        for (int j = 0; j < T.order; ++j) {
            int p = G.op(H.members[i], H.members[j]);
            if (pos[p] < 0) fail("MalformedSpec", "member set is not closed under product");
            T.mul[static_cast<size_t>(i) * T.order + j] = pos[p];
        }
    derive_identity_and_inverses(T);
    return T;
}

bool all_members_commute(const ConjSubset& C) {
    const GroupTable& G = *C.group;
    for (int a : C.members)
        for (int b : C.members)
            if (G.op(a, b) != G.op(b, a)) return false;
    return true;
}

} // namespace knotcount
