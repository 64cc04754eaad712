#pragma once

// Metric trees, dissimilarity vectors and the tropical Grassmannian of
// 2-planes.
//
// Sign convention: a vector d is a tropical point when, for every 4-subset
// i<j<k<l, the MAXIMUM of d_ij+d_kl, d_ik+d_jl, d_il+d_jk is attained at least
// twice. Dissimilarity vectors of metric trees with nonnegative internal
// weights satisfy this form; the min-convention tropical Grassmannian is its
// negative.

#include "gr2/errors.hpp"
#include "gr2/rational.hpp"
#include "gr2/trees.hpp"

#include <array>
#include <optional>
#include <string>
#include <vector>

namespace gr2 {

/// Position of the pair {i, j} (i != j) in the lexicographic list
/// 12, 13, ..., 1n, 23, ..., (n-1)n.
inline std::size_t pair_index(int n, int i, int j) {
    if (i > j) std::swap(i, j);
    const std::size_t a = static_cast<std::size_t>(i - 1);
    return a * static_cast<std::size_t>(n) - a * (a + 1) / 2 + static_cast<std::size_t>(j - i - 1);
}

inline std::size_t pair_count(int n) { return static_cast<std::size_t>(n) * static_cast<std::size_t>(n - 1) / 2; }

/// All pairs {i<j} in lexicographic order.
inline std::vector<std::pair<int, int>> all_pairs(int n) {
    std::vector<std::pair<int, int>> out;
    for (int i = 1; i <= n; ++i)
        for (int j = i + 1; j <= n; ++j) out.emplace_back(i, j);
    return out;
}

/// Rational weights on the edges of a tree, aligned with `tree.edges()`.
/// Internal edge weights are nonnegative; leaf edge weights are unrestricted.
class EdgeWeighting {
public:
    EdgeWeighting() = default;

    EdgeWeighting(LabeledTree tree, std::vector<Rational> weights) : tree_(std::move(tree)), weights_(std::move(weights)) {
        if (weights_.size() != tree_.edge_count())
            throw std::invalid_argument("edge weighting has " + std::to_string(weights_.size()) + " entries for " +
                                        std::to_string(tree_.edge_count()) + " edges");
        for (std::size_t k = tree_.leaf_count(); k < weights_.size(); ++k)
            if (weights_[k] < 0)
                throw std::invalid_argument("internal edge " + tree_.edge_id(k).name() + " has negative weight " +
                                            to_string(weights_[k]));
    }

    static EdgeWeighting constant(const LabeledTree& t, const Rational& c) {
        return EdgeWeighting(t, std::vector<Rational>(t.edge_count(), c));
    }

    static EdgeWeighting indicator(const LabeledTree& t, const EdgeId& e) {
        std::vector<Rational> w(t.edge_count(), Rational(0));
        w[t.edge_index(e)] = 1;
        return EdgeWeighting(t, std::move(w));
    }

    const LabeledTree& tree() const { return tree_; }
    const std::vector<Rational>& weights() const { return weights_; }
    const Rational& weight(std::size_t edge) const { return weights_.at(edge); }
    const Rational& weight(const EdgeId& e) const { return weights_.at(tree_.edge_index(e)); }

    friend bool operator==(const EdgeWeighting&, const EdgeWeighting&) = default;

private:
    LabeledTree tree_;
    std::vector<Rational> weights_;
};

/// A vector indexed by the pairs {i<j} of 1..n, in lexicographic order.
class DissimilarityVector {
public:
    DissimilarityVector() = default;

    DissimilarityVector(int n, std::vector<Rational> entries) : n_(n), entries_(std::move(entries)) {
        if (n < 2) throw std::invalid_argument("dissimilarity vector needs n >= 2");
        if (entries_.size() != pair_count(n))
            throw std::invalid_argument("dissimilarity vector for n=" + std::to_string(n) + " needs " +
                                        std::to_string(pair_count(n)) + " entries, got " +
                                        std::to_string(entries_.size()));
    }

    static DissimilarityVector zero(int n) { return {n, std::vector<Rational>(pair_count(n), Rational(0))}; }

    int n() const { return n_; }
    const std::vector<Rational>& entries() const { return entries_; }
    const Rational& at(int i, int j) const { return entries_.at(pair_index(n_, i, j)); }
    Rational& at(int i, int j) { return entries_.at(pair_index(n_, i, j)); }

    friend bool operator==(const DissimilarityVector&, const DissimilarityVector&) = default;

private:
    int n_ = 0;
    std::vector<Rational> entries_;
};

/// d_ij = sum of r(e) over the path between leaves i and j.
inline DissimilarityVector dissimilarity(const EdgeWeighting& r) {
    const LabeledTree& t = r.tree();
    const int n = t.leaf_count();
    DissimilarityVector d = DissimilarityVector::zero(n);
    for (std::size_t e = 0; e < t.edge_count(); ++e) {
        const Rational& w = r.weight(e);
        if (w == 0) continue;
        for (auto [i, j] : all_pairs(n))
            if (t.on_path(e, i, j)) d.at(i, j) += w;
    }
    return d;
}

/// For one 4-subset i<j<k<l: which of the three sums
/// (d_ij+d_kl, d_ik+d_jl, d_il+d_jk) attain the maximum (bit 0, 1, 2).
struct QuartetWitness {
    std::array<int, 4> quadruple{};
    unsigned max_mask = 0;

    bool attained_twice() const { return max_mask == 3 || max_mask == 5 || max_mask == 6 || max_mask == 7; }
};

struct TropicalCheck {
    bool is_tropical = true;
    std::vector<QuartetWitness> witnesses;
    std::optional<std::array<int, 4>> violation;  ///< first failing quadruple
};

inline std::array<Rational, 3> quartet_sums(const DissimilarityVector& d, int i, int j, int k, int l) {
    return {d.at(i, j) + d.at(k, l), d.at(i, k) + d.at(j, l), d.at(i, l) + d.at(j, k)};
}

inline TropicalCheck is_tropical_point(const DissimilarityVector& d) {
    TropicalCheck out;
    const int n = d.n();
    for (int i = 1; i <= n; ++i)
        for (int j = i + 1; j <= n; ++j)
            for (int k = j + 1; k <= n; ++k)
                for (int l = k + 1; l <= n; ++l) {
                    const auto s = quartet_sums(d, i, j, k, l);
                    const Rational& m = std::max({s[0], s[1], s[2]});
                    QuartetWitness w{{i, j, k, l}, 0};
                    for (unsigned b = 0; b < 3; ++b)
                        if (s[b] == m) w.max_mask |= 1U << b;
                    if (!w.attained_twice() && out.is_tropical) {
                        out.is_tropical = false;
                        out.violation = w.quadruple;
                    }
                    out.witnesses.push_back(w);
                }
    return out;
}

/// Recovers the unique tree (internal weights strictly positive) and edge
/// weighting whose dissimilarity vector is `d`. Internal edges of weight
/// zero are contracted, so ties in a quartet produce an unresolved vertex.
///
/// Leaves are inserted one at a time. With every pendant weight shifted to 1
/// (pendant weight of leaf i is min over j,k of (d_ij + d_ik - d_jk)/2),
/// leaf k hangs off the path between the inserted leaves i, j minimizing the
/// Gromov product (d_ik + d_jk - d_ij)/2, at distance d_ik minus that product
/// from i.
inline EdgeWeighting reconstruct_tree(const DissimilarityVector& d) {
    const int n = d.n();
    if (n < 3) throw std::invalid_argument("reconstruction needs at least 3 leaves");
    if (n > 32) throw std::invalid_argument("reconstruction supports n <= 32");
    const TropicalCheck check = is_tropical_point(d);
    if (!check.is_tropical) {
        const auto q = *check.violation;
        throw not_tropical_error(q, "not a tropical point: four-point condition fails on (" + std::to_string(q[0]) +
                                        "," + std::to_string(q[1]) + "," + std::to_string(q[2]) + "," +
                                        std::to_string(q[3]) + ")");
    }

    std::vector<Rational> pendant(n + 1);
    for (int i = 1; i <= n; ++i) {
        std::optional<Rational> best;
        for (int j = 1; j <= n; ++j)
            for (int k = j + 1; k <= n; ++k) {
                if (j == i || k == i) continue;
                Rational g = (d.at(i, j) + d.at(i, k) - d.at(j, k)) / 2;
                if (!best || g < *best) best = g;
            }
        pendant[i] = *best;
    }
    auto shifted = [&](int i, int j) { return d.at(i, j) - pendant[i] - pendant[j] + 2; };

    struct WEdge {
        int a, b;
        Rational w;
    };
    std::vector<WEdge> edges;
    int next = n + 1;
    for (auto [i, j, k] : std::array<std::array<int, 3>, 3>{{{1, 2, 3}, {2, 1, 3}, {3, 1, 2}}}) {
        const Rational leg = (shifted(i, j) + shifted(i, k) - shifted(j, k)) / 2;
        if (leg <= 0) throw std::logic_error("degenerate star in reconstruction");
        edges.push_back({i, next, leg});
    }
    ++next;

    auto path_between = [&](int from, int to) {
        // Returns edge indices along the path, in order from `from`.
        std::vector<std::vector<std::pair<int, std::size_t>>> adj(next);
        for (std::size_t m = 0; m < edges.size(); ++m) {
            adj[edges[m].a].emplace_back(edges[m].b, m);
            adj[edges[m].b].emplace_back(edges[m].a, m);
        }
        std::vector<std::pair<int, std::size_t>> via(next, {-1, 0});
        std::vector<int> queue{from};
        via[from] = {from, 0};
        for (std::size_t h = 0; h < queue.size(); ++h)
            for (auto [y, m] : adj[queue[h]])
                if (via[y].first < 0) {
                    via[y] = {queue[h], m};
                    queue.push_back(y);
                }
        std::vector<std::pair<int, std::size_t>> steps;  // (vertex reached, edge)
        for (int x = to; x != from; x = via[x].first) steps.emplace_back(x, via[x].second);
        std::reverse(steps.begin(), steps.end());
        return steps;
    };

    for (int k = 4; k <= n; ++k) {
        int bi = 0, bj = 0;
        std::optional<Rational> best;
        for (int i = 1; i < k; ++i)
            for (int j = i + 1; j < k; ++j) {
                Rational g = (shifted(i, k) + shifted(j, k) - shifted(i, j)) / 2;
                if (!best || g < *best) {
                    best = g;
                    bi = i;
                    bj = j;
                }
            }
        const Rational pendant_len = *best;
        const Rational along = shifted(bi, k) - pendant_len;
        if (pendant_len <= 0 || along <= 0) throw std::logic_error("degenerate attachment in reconstruction");
        Rational covered = 0;
        int previous = bi;
        bool attached = false;
        for (auto [x, m] : path_between(bi, bj)) {
            const Rational w = edges[m].w;
            if (along < covered + w) {
                const int mid = next++;
                const Rational first = along - covered;
                const int other = previous;
                edges[m] = {other, mid, first};
                edges.push_back({mid, x, w - first});
                edges.push_back({mid, k, pendant_len});
                attached = true;
                break;
            }
            covered += w;
            if (along == covered) {
                if (x <= n) throw std::logic_error("attachment at a leaf in reconstruction");
                edges.push_back({x, k, pendant_len});
                attached = true;
                break;
            }
            previous = x;
        }
        if (!attached) throw std::logic_error("attachment point beyond path in reconstruction");
    }

    std::vector<std::pair<int, int>> pairs;
    for (const auto& e : edges) pairs.emplace_back(e.a, e.b);
    LabeledTree tree = LabeledTree::from_edges(n, pairs);

    // Map raw edges to canonical edges through the leaf set they cut off.
    std::vector<std::vector<int>> adj(next);
    for (const auto& e : edges) {
        adj[e.a].push_back(e.b);
        adj[e.b].push_back(e.a);
    }
    std::vector<Rational> weights(tree.edge_count());
    for (const auto& e : edges) {
        LeafSet s = 0;
        std::vector<std::pair<int, int>> stack{{e.b, e.a}};
        while (!stack.empty()) {
            auto [x, p] = stack.back();
            stack.pop_back();
            if (x <= n) s |= leaf_bit(x);
            for (int y : adj[x])
                if (y != p) stack.emplace_back(y, x);
        }
        const int size = std::popcount(s);
        std::size_t index;
        if (size == 1)
            index = tree.leaf_edge_index(lowest_leaf(s));
        else if (size == n - 1)
            index = tree.leaf_edge_index(lowest_leaf(all_leaves(n) ^ s));
        else
            index = tree.edge_index(EdgeId::internal_edge(contains_leaf(s, 1) ? s : all_leaves(n) ^ s));
        weights[index] = e.w;
    }
    for (int i = 1; i <= n; ++i) weights[tree.leaf_edge_index(i)] += pendant[i] - 1;

    EdgeWeighting result(tree, std::move(weights));
    if (dissimilarity(result) != d) throw std::logic_error("reconstructed tree does not reproduce the input");
    return result;
}

/// Topology of the unique minimal closed cone containing `d`.
inline LabeledTree cone_of(const DissimilarityVector& d) { return reconstruct_tree(d).tree(); }

}  // namespace gr2
