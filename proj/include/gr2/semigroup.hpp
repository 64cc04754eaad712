#pragma once

// Sigma-weights and the affine semigroup S_sigma of a trivalent tree: the
// integer edge weightings that satisfy, at every internal vertex with incident
// values (a, b, c), the parity condition a+b+c even and the triangle
// inequalities |a-b| <= c <= a+b. S_sigma is generated by the path
// indicators omega_ij.

#include "gr2/errors.hpp"
#include "gr2/trees.hpp"
#include "gr2/tropical.hpp"

#include <cstdint>
#include <random>
#include <span>
#include <string>
#include <utility>
#include <vector>

namespace gr2 {

/// Nonnegative integer edge weights, aligned with `tree.edges()`.
class SigmaWeight {
public:
    SigmaWeight() = default;

    SigmaWeight(LabeledTree tree, std::vector<int> values) : tree_(std::move(tree)), values_(std::move(values)) {
        if (values_.size() != tree_.edge_count())
            throw std::invalid_argument("sigma-weight has " + std::to_string(values_.size()) + " entries for " +
                                        std::to_string(tree_.edge_count()) + " edges");
        for (std::size_t k = 0; k < values_.size(); ++k)
            if (values_[k] < 0)
                throw std::invalid_argument("sigma-weight entry on " + tree_.edge_id(k).name() + " is negative");
    }

    static SigmaWeight zero(const LabeledTree& t) { return {t, std::vector<int>(t.edge_count(), 0)}; }
    static SigmaWeight constant(const LabeledTree& t, int c) { return {t, std::vector<int>(t.edge_count(), c)}; }

    const LabeledTree& tree() const { return tree_; }
    const std::vector<int>& values() const { return values_; }
    int operator[](std::size_t edge) const { return values_.at(edge); }
    int at(const EdgeId& e) const { return values_.at(tree_.edge_index(e)); }

    SigmaWeight& operator+=(const SigmaWeight& other) {
        if (!(other.tree_ == tree_)) throw std::invalid_argument("sigma-weights on different trees");
        for (std::size_t k = 0; k < values_.size(); ++k) values_[k] += other.values_[k];
        return *this;
    }
    friend SigmaWeight operator+(SigmaWeight a, const SigmaWeight& b) { return a += b; }

    friend bool operator==(const SigmaWeight&, const SigmaWeight&) = default;

private:
    LabeledTree tree_;
    std::vector<int> values_;
};

/// Multiset of leaf pairs {i<j}, kept sorted.
using PairMultiset = std::vector<std::pair<int, int>>;

/// Dimension of [V(i) (x) V(j) (x) V(k)]^SL2.
inline int pieri_dim(int i, int j, int k) {
    if (i < 0 || j < 0 || k < 0) throw std::invalid_argument("pieri_dim needs nonnegative arguments");
    if ((i + j + k) % 2 != 0) return 0;
    return (std::abs(i - j) <= k && k <= i + j) ? 1 : 0;
}

/// Dimension of the SL2-invariants of V(a_1) (x) ... (x) V(a_k), by
/// iterating the Clebsch-Gordan rule V(a)(x)V(b) = sum_{c=|a-b|, step 2}^{a+b} V(c).
inline std::uint64_t tensor_invariant_dim(std::span<const int> a) {
    if (a.empty()) return 1;
    int top = 0;
    for (int x : a) {
        if (x < 0) throw std::invalid_argument("tensor_invariant_dim needs nonnegative highest weights");
        top += x;
    }
    std::vector<std::uint64_t> mult(top + 1, 0), next(top + 1, 0);
    mult[a[0]] = 1;
    int reach = a[0];
    for (std::size_t m = 1; m < a.size(); ++m) {
        std::fill(next.begin(), next.end(), 0);
        const int b = a[m];
        for (int c = 0; c <= reach; ++c) {
            if (mult[c] == 0) continue;
            for (int e = std::abs(c - b); e <= c + b; e += 2) next[e] += mult[c];
        }
        reach += b;
        mult.swap(next);
    }
    return mult[0];
}

inline std::vector<int> vertex_values(const SigmaWeight& s, int v) {
    std::vector<int> out;
    for (std::size_t e : s.tree().incident_edges(v)) out.push_back(s[e]);
    return out;
}

/// dim W_sigma(s): product over internal vertices of the local invariant
/// dimensions. Works for any tree, trivalent or not.
inline std::uint64_t invariant_dim(const SigmaWeight& s) {
    std::uint64_t product = 1;
    for (int v : s.tree().internal_vertices()) {
        const auto vals = vertex_values(s, v);
        const std::uint64_t f = tensor_invariant_dim(vals);
        if (f == 0) return 0;
        if (__builtin_mul_overflow(product, f, &product)) throw std::overflow_error("invariant_dim overflow");
    }
    return product;
}

inline void require_trivalent(const LabeledTree& t, const char* op) {
    if (!t.is_trivalent()) throw std::invalid_argument(std::string(op) + " requires a trivalent tree");
}

/// First internal vertex violating parity or a triangle inequality, if any.
inline std::optional<int> semigroup_violation(const SigmaWeight& s) {
    require_trivalent(s.tree(), "in_semigroup");
    for (int v : s.tree().internal_vertices()) {
        const auto x = vertex_values(s, v);
        if (pieri_dim(x[0], x[1], x[2]) == 0) return v;
    }
    return std::nullopt;
}

inline bool in_semigroup(const SigmaWeight& s) { return !semigroup_violation(s).has_value(); }

/// Indicator of the path between leaves i and j.
inline SigmaWeight omega(const LabeledTree& t, int i, int j) {
    leaf_path(t, i, j);  // validates i, j
    std::vector<int> v(t.edge_count(), 0);
    for (std::size_t e = 0; e < t.edge_count(); ++e) v[e] = t.on_path(e, i, j) ? 1 : 0;
    return {t, std::move(v)};
}

inline SigmaWeight sum_of_omegas(const LabeledTree& t, const PairMultiset& pairs) {
    SigmaWeight s = SigmaWeight::zero(t);
    for (auto [i, j] : pairs) s += omega(t, i, j);
    return s;
}

/// Writes s as a sum of path indicators forming a non-crossing graph with
/// respect to the tree's planar leaf order. At each vertex with child slots
/// a, b (left to right) and parent slot c, (n_a + n_b - n_c)/2 paths join a to
/// b; those use the innermost strands, so the gluing stays planar.
inline PairMultiset decompose(const SigmaWeight& s) {
    const LabeledTree& t = s.tree();
    require_trivalent(t, "decompose");
    if (auto v = semigroup_violation(s))
        throw not_in_semigroup_error(*v, "sigma-weight is not in the semigroup: vertex " + std::to_string(*v) +
                                             " fails parity or a triangle inequality");
    PairMultiset pairs;
    // Strands leaving the subtree of v through its parent edge, left to right.
    auto strands = [&](auto&& self, int v) -> std::vector<int> {
        if (t.is_leaf(v)) return std::vector<int>(static_cast<std::size_t>(s[t.parent_edge(v)]), v);
        const auto& ch = t.children(v);
        std::vector<int> left = self(self, ch[0]);
        std::vector<int> right = self(self, ch[1]);
        const int up = s[t.parent_edge(v)];
        const int joined = (static_cast<int>(left.size() + right.size()) - up) / 2;
        for (int k = 0; k < joined; ++k) {
            int a = left[left.size() - 1 - static_cast<std::size_t>(k)];
            int b = right[static_cast<std::size_t>(k)];
            pairs.emplace_back(std::min(a, b), std::max(a, b));
        }
        std::vector<int> out(left.begin(), left.end() - joined);
        out.insert(out.end(), right.begin() + joined, right.end());
        return out;
    };
    const int root_neighbor = t.children(1).front();
    for (int leaf : strands(strands, root_neighbor)) pairs.emplace_back(1, leaf);
    std::sort(pairs.begin(), pairs.end());
    return pairs;
}

/// What graded_count counts.
struct GradedMode {
    enum class Kind { plucker_degree, box_bound };
    Kind kind = Kind::plucker_degree;
    int value = 0;

    static GradedMode plucker_degree(int d) { return {Kind::plucker_degree, d}; }
    static GradedMode box_bound(int m) { return {Kind::box_bound, m}; }
};

namespace detail {

inline std::uint64_t checked_add(std::uint64_t a, std::uint64_t b) {
    std::uint64_t r;
    if (__builtin_add_overflow(a, b, &r)) throw std::overflow_error("graded_count overflow");
    return r;
}

inline std::uint64_t checked_mul(std::uint64_t a, std::uint64_t b) {
    std::uint64_t r;
    if (__builtin_mul_overflow(a, b, &r)) throw std::overflow_error("graded_count overflow");
    return r;
}

}  // namespace detail

/// Plucker degree d: #{s in S_sigma : sum of leaf values = 2d}, the dimension
/// of the degree-d part of the Plucker algebra. Box bound m:
/// #{s in S_sigma : s(e) <= m for all e}. Dynamic programming over the tree
/// rooted at leaf 1.
inline std::uint64_t graded_count(const LabeledTree& t, GradedMode mode) {
    require_trivalent(t, "graded_count");
    if (mode.value < 0) throw std::invalid_argument("graded_count needs a nonnegative degree or bound");
    using Table = std::vector<std::vector<std::uint64_t>>;  // [edge value][leaf sum below]

    if (mode.kind == GradedMode::Kind::box_bound) {
        const int m = mode.value;
        auto count = [&](auto&& self, int v) -> std::vector<std::uint64_t> {
            if (t.is_leaf(v)) return std::vector<std::uint64_t>(m + 1, 1);
            const auto a = self(self, t.children(v)[0]);
            const auto b = self(self, t.children(v)[1]);
            std::vector<std::uint64_t> out(m + 1, 0);
            for (int x = 0; x <= m; ++x)
                for (int p = 0; p <= m; ++p)
                    for (int q = std::abs(x - p); q <= std::min(m, x + p); q += 2)
                        out[x] = detail::checked_add(out[x], detail::checked_mul(a[p], b[q]));
            return out;
        };
        std::uint64_t total = 0;
        for (std::uint64_t c : count(count, t.children(1).front())) total = detail::checked_add(total, c);
        return total;
    }

    const int top = 2 * mode.value;
    auto count = [&](auto&& self, int v) -> Table {
        Table out(top + 1, std::vector<std::uint64_t>(top + 1, 0));
        if (t.is_leaf(v)) {
            for (int a = 0; a <= top; ++a) out[a][a] = 1;
            return out;
        }
        const Table a = self(self, t.children(v)[0]);
        const Table b = self(self, t.children(v)[1]);
        for (int p = 0; p <= top; ++p)
            for (int q = 0; q <= top; ++q)
                for (int sa = p; sa <= top; ++sa) {
                    if (a[p][sa] == 0) continue;
                    for (int sb = q; sa + sb <= top; ++sb) {
                        if (b[q][sb] == 0) continue;
                        const std::uint64_t w = detail::checked_mul(a[p][sa], b[q][sb]);
                        for (int x = std::abs(p - q); x <= std::min(top, p + q); x += 2)
                            out[x][sa + sb] = detail::checked_add(out[x][sa + sb], w);
                    }
                }
        return out;
    };
    const Table below = count(count, t.children(1).front());
    std::uint64_t total = 0;
    for (int a = 0; a <= top; ++a) total = detail::checked_add(total, below[a][top - a]);
    return total;
}

/// (tau, m) lies in the closed semigroup: tau in S_sigma and tau(e) <= m.
inline bool in_closed_semigroup(const SigmaWeight& tau, int m) {
    if (m < 0) return false;
    for (int x : tau.values())
        if (x > m) return false;
    return in_semigroup(tau);
}

/// Interior of the closed semigroup: tau(e) < m for all e, parity at every
/// vertex and strict triangle inequalities.
inline bool is_interior(const SigmaWeight& tau, int m) {
    require_trivalent(tau.tree(), "is_interior");
    for (int x : tau.values())
        if (x >= m) return false;
    for (int v : tau.tree().internal_vertices()) {
        const auto x = vertex_values(tau, v);
        if ((x[0] + x[1] + x[2]) % 2 != 0) return false;
        for (int k = 0; k < 3; ++k) {
            const int a = x[k], b = x[(k + 1) % 3], c = x[(k + 2) % 3];
            if (!(std::abs(a - b) < c && c < a + b)) return false;
        }
    }
    return true;
}

/// Subtracting the all-2 weight in degree 3 from an interior point stays in
/// the closed semigroup.
inline bool gorenstein_witness_holds(const SigmaWeight& tau, int m) {
    std::vector<int> lowered(tau.values());
    for (int& x : lowered) {
        x -= 2;
        if (x < 0) return false;
    }
    return in_closed_semigroup(SigmaWeight(tau.tree(), std::move(lowered)), m - 3);
}

/// Rejection-samples `samples` interior elements (tau, m), m uniform in
/// [3, max_degree] and tau(e) uniform in [1, m-1], and checks the witness on
/// each.
inline bool gorenstein_witness_check(const LabeledTree& t, int samples, std::uint64_t seed = 0x5eed,
                                     int max_degree = 8) {
    require_trivalent(t, "gorenstein_witness_check");
    if (max_degree < 3) throw std::invalid_argument("max_degree must be at least 3");
    std::mt19937_64 rng(seed);
    std::uniform_int_distribution<int> degree(3, max_degree);
    for (int k = 0; k < samples; ++k) {
        const int m = degree(rng);
        std::uniform_int_distribution<int> entry(1, m - 1);
        std::vector<int> v(t.edge_count());
        std::uint64_t attempts = 0;
        while (true) {
            for (int& x : v) x = entry(rng);
            SigmaWeight tau(t, v);
            if (is_interior(tau, m)) {
                if (!gorenstein_witness_holds(tau, m)) return false;
                break;
            }
            if (++attempts > 50'000'000) throw std::runtime_error("interior sampling did not converge");
        }
    }
    return true;
}

}  // namespace gr2
