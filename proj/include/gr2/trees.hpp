#pragma once

// Leaf-labeled trees: the combinatorial index of every construction in the
// library. Trees are stored in a canonical form, so two trees compare equal
// exactly when they are isomorphic as leaf-labeled trees.

#include <algorithm>
#include <bit>
#include <compare>
#include <cstdint>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace gr2 {

/// Bit (k-1) set means leaf k is in the set.
using LeafSet = std::uint64_t;

inline constexpr int max_leaves = 63;

constexpr LeafSet leaf_bit(int leaf) { return LeafSet{1} << (leaf - 1); }
constexpr bool contains_leaf(LeafSet s, int leaf) { return ((s >> (leaf - 1)) & 1U) != 0; }
constexpr LeafSet all_leaves(int n) { return (LeafSet{1} << n) - 1; }
inline int lowest_leaf(LeafSet s) { return std::countr_zero(s) + 1; }

/// Compares two leaf sets as increasing lists, lexicographically.
inline std::strong_ordering compare_leaf_lists(LeafSet a, LeafSet b) {
    if (a == b) return std::strong_ordering::equal;
    const LeafSet diff = a ^ b;
    const int t = std::countr_zero(diff);
    // The lists agree below t; whoever holds t continues with the smaller
    // element, unless the other list has already ended.
    if ((a >> t) & 1U) {
        const bool b_continues = t + 1 < 64 && (b >> (t + 1)) != 0;
        return b_continues ? std::strong_ordering::less : std::strong_ordering::greater;
    }
    const bool a_continues = t + 1 < 64 && (a >> (t + 1)) != 0;
    return a_continues ? std::strong_ordering::greater : std::strong_ordering::less;
}

inline std::vector<int> leaves_of(LeafSet s) {
    std::vector<int> out;
    while (s != 0) {
        out.push_back(lowest_leaf(s));
        s &= s - 1;
    }
    return out;
}

/// Stable edge name. A leaf edge is named by its leaf; an internal edge by the
/// leaf set on the side that contains leaf 1 (text form "e1.2" for the split
/// 12|34, "l3" for the edge of leaf 3).
class EdgeId {
public:
    EdgeId() = default;

    static EdgeId leaf_edge(int leaf) {
        EdgeId e;
        e.leaf_ = leaf;
        e.side_ = leaf_bit(leaf);
        return e;
    }

    /// `side` must be the side containing leaf 1.
    static EdgeId internal_edge(LeafSet side) {
        EdgeId e;
        e.side_ = side;
        return e;
    }

    bool is_leaf() const { return leaf_ != 0; }
    int leaf() const { return leaf_; }
    LeafSet side() const { return side_; }

    std::string name() const {
        if (is_leaf()) return "l" + std::to_string(leaf_);
        std::string s = "e";
        bool first = true;
        for (int k : leaves_of(side_)) {
            if (!first) s += '.';
            s += std::to_string(k);
            first = false;
        }
        return s;
    }

    static EdgeId parse(std::string_view text) {
        auto bad = [&] { return std::invalid_argument("malformed edge id '" + std::string(text) + "'"); };
        if (text.size() < 2) throw bad();
        auto parse_int = [&](std::string_view s) {
            if (s.empty() || s.size() > 3) throw bad();
            int v = 0;
            for (char c : s) {
                if (c < '0' || c > '9') throw bad();
                v = v * 10 + (c - '0');
            }
            if (v < 1 || v > max_leaves) throw bad();
            return v;
        };
        if (text[0] == 'l') return leaf_edge(parse_int(text.substr(1)));
        if (text[0] != 'e') throw bad();
        LeafSet side = 0;
        std::string_view rest = text.substr(1);
        while (true) {
            const auto dot = rest.find('.');
            side |= leaf_bit(parse_int(rest.substr(0, dot)));
            if (dot == std::string_view::npos) break;
            rest = rest.substr(dot + 1);
        }
        if (!contains_leaf(side, 1)) throw bad();
        return internal_edge(side);
    }

    friend bool operator==(const EdgeId&, const EdgeId&) = default;

    /// Leaf edges first (by leaf), then internal edges by their leaf list.
    friend std::strong_ordering operator<=>(const EdgeId& a, const EdgeId& b) {
        if (a.is_leaf() != b.is_leaf()) return a.is_leaf() ? std::strong_ordering::less : std::strong_ordering::greater;
        if (a.is_leaf()) return a.leaf_ <=> b.leaf_;
        return compare_leaf_lists(a.side_, b.side_);
    }

private:
    int leaf_ = 0;
    LeafSet side_ = 0;
};

/// A tree with leaves 1..n (degree 1) and internal vertices n+1..V (degree
/// >= 3). Internal vertices are renumbered canonically: a depth-first walk
/// from leaf 1 that visits subtrees in order of their smallest leaf assigns
/// n+1, n+2, ... in preorder. Edges are stored sorted by EdgeId, so leaf edge
/// of leaf i has index i-1 and internal edges follow.
class LabeledTree {
public:
    struct Edge {
        int u = 0;  ///< endpoint on the side of leaf 1
        int v = 0;  ///< endpoint away from leaf 1
        EdgeId id;
    };

    LabeledTree() = default;

    /// Builds and validates a tree from an edge list with leaves 1..n and
    /// arbitrary distinct ids > n for internal vertices.
    static LabeledTree from_edges(int n, std::span<const std::pair<int, int>> edges) {
        if (n < 3 || n > max_leaves)
            throw std::invalid_argument("leaf count must be in [3, " + std::to_string(max_leaves) + "], got " +
                                        std::to_string(n));
        // Compact vertex ids: leaves keep 1..n, internal ids map to n+1...
        std::vector<int> internal_ids;
        for (auto [a, b] : edges) {
            for (int x : {a, b}) {
                if (x < 1) throw std::invalid_argument("vertex ids must be positive");
                if (x > n) internal_ids.push_back(x);
            }
        }
        std::sort(internal_ids.begin(), internal_ids.end());
        internal_ids.erase(std::unique(internal_ids.begin(), internal_ids.end()), internal_ids.end());
        const int vertex_count = n + static_cast<int>(internal_ids.size());
        auto compact = [&](int x) {
            if (x <= n) return x;
            return n + 1 + static_cast<int>(std::lower_bound(internal_ids.begin(), internal_ids.end(), x) -
                                            internal_ids.begin());
        };
        std::vector<std::pair<int, int>> compacted;
        compacted.reserve(edges.size());
        for (auto [a, b] : edges) {
            if (a == b) throw std::invalid_argument("self-loop at vertex " + std::to_string(a));
            compacted.emplace_back(compact(a), compact(b));
        }
        if (static_cast<int>(compacted.size()) != vertex_count - 1)
            throw std::invalid_argument("a tree on " + std::to_string(vertex_count) + " vertices needs " +
                                        std::to_string(vertex_count - 1) + " edges, got " +
                                        std::to_string(compacted.size()));

        LabeledTree raw;
        raw.init(n, vertex_count, compacted);

        // Canonical preorder relabeling of internal vertices.
        std::vector<int> relabel(vertex_count + 1, 0);
        int next = n + 1;
        std::vector<int> stack{1};
        while (!stack.empty()) {
            const int x = stack.back();
            stack.pop_back();
            relabel[x] = x <= n ? x : next++;
            const auto& ch = raw.children_[x];
            for (auto it = ch.rbegin(); it != ch.rend(); ++it) stack.push_back(*it);
        }
        std::vector<std::pair<int, int>> canonical;
        canonical.reserve(compacted.size());
        for (auto [a, b] : compacted) canonical.emplace_back(relabel[a], relabel[b]);
        LabeledTree tree;
        tree.init(n, vertex_count, canonical);
        return tree;
    }

    static LabeledTree from_edges(int n, const std::vector<std::pair<int, int>>& edges) {
        return from_edges(n, std::span<const std::pair<int, int>>(edges));
    }

    /// The tree with a single internal vertex.
    static LabeledTree star(int n) {
        std::vector<std::pair<int, int>> edges;
        for (int i = 1; i <= n; ++i) edges.emplace_back(i, n + 1);
        return from_edges(n, edges);
    }

    int leaf_count() const { return n_; }
    int vertex_count() const { return vertex_count_; }
    std::size_t edge_count() const { return edges_.size(); }
    std::size_t internal_edge_count() const { return edges_.size() - static_cast<std::size_t>(n_); }
    LeafSet full_set() const { return all_leaves(n_); }

    std::span<const Edge> edges() const { return edges_; }
    const Edge& edge(std::size_t index) const { return edges_.at(index); }
    const EdgeId& edge_id(std::size_t index) const { return edges_.at(index).id; }
    std::size_t leaf_edge_index(int leaf) const { return static_cast<std::size_t>(leaf - 1); }

    std::optional<std::size_t> find_edge(const EdgeId& id) const {
        auto it = std::lower_bound(edges_.begin(), edges_.end(), id,
                                   [](const Edge& e, const EdgeId& key) { return e.id < key; });
        if (it == edges_.end() || it->id != id) return std::nullopt;
        return static_cast<std::size_t>(it - edges_.begin());
    }

    std::size_t edge_index(const EdgeId& id) const {
        if (auto k = find_edge(id)) return *k;
        throw std::invalid_argument("edge " + id.name() + " is not an edge of this tree");
    }

    bool is_leaf(int v) const { return v >= 1 && v <= n_; }
    int degree(int v) const { return static_cast<int>(adjacency_.at(v).size()); }
    const std::vector<int>& neighbors(int v) const { return adjacency_.at(v); }
    const std::vector<std::size_t>& incident_edges(int v) const { return incident_.at(v); }

    /// Rooted at leaf 1.
    int parent(int v) const { return parent_.at(v); }
    std::size_t parent_edge(int v) const { return parent_edge_.at(v); }
    const std::vector<int>& children(int v) const { return children_.at(v); }
    LeafSet leaves_below(int v) const { return below_.at(v); }

    std::vector<int> internal_vertices() const {
        std::vector<int> out;
        for (int v = n_ + 1; v <= vertex_count_; ++v) out.push_back(v);
        return out;
    }

    bool is_trivalent() const {
        for (int v = n_ + 1; v <= vertex_count_; ++v)
            if (degree(v) != 3) return false;
        return true;
    }

    /// Leaves in the order of the canonical depth-first walk; the tree is
    /// planar with respect to this cyclic order.
    const std::vector<int>& planar_order() const { return planar_order_; }

    /// Whether edge `e` lies on the path between leaves i and j.
    bool on_path(std::size_t e, int i, int j) const {
        const EdgeId& id = edges_[e].id;
        if (id.is_leaf()) return id.leaf() == i || id.leaf() == j;
        return contains_leaf(id.side(), i) != contains_leaf(id.side(), j);
    }

    /// Sorted internal edge ids; the canonical key of the tree.
    std::vector<EdgeId> internal_edge_ids() const {
        std::vector<EdgeId> out;
        for (std::size_t k = static_cast<std::size_t>(n_); k < edges_.size(); ++k) out.push_back(edges_[k].id);
        return out;
    }

    /// Edge list as unordered pairs, each pair sorted and the list sorted.
    std::vector<std::pair<int, int>> edge_pairs() const {
        std::vector<std::pair<int, int>> out;
        for (const Edge& e : edges_) out.emplace_back(std::min(e.u, e.v), std::max(e.u, e.v));
        std::sort(out.begin(), out.end());
        return out;
    }

    friend bool operator==(const LabeledTree& a, const LabeledTree& b) {
        if (a.n_ != b.n_ || a.edges_.size() != b.edges_.size()) return false;
        for (std::size_t k = 0; k < a.edges_.size(); ++k)
            if (a.edges_[k].id != b.edges_[k].id) return false;
        return true;
    }

private:
    void init(int n, int vertex_count, std::span<const std::pair<int, int>> edges) {
        n_ = n;
        vertex_count_ = vertex_count;
        adjacency_.assign(vertex_count + 1, {});
        for (auto [a, b] : edges) {
            if (a > vertex_count || b > vertex_count) throw std::invalid_argument("vertex id out of range");
            adjacency_[a].push_back(b);
            adjacency_[b].push_back(a);
        }
        for (int v = 1; v <= vertex_count; ++v) {
            auto& adj = adjacency_[v];
            std::sort(adj.begin(), adj.end());
            if (std::adjacent_find(adj.begin(), adj.end()) != adj.end())
                throw std::invalid_argument("repeated edge at vertex " + std::to_string(v));
            if (v <= n && adj.size() != 1)
                throw std::invalid_argument("leaf " + std::to_string(v) + " has degree " + std::to_string(adj.size()));
            if (v > n && adj.size() < 3)
                throw std::invalid_argument("internal vertex " + std::to_string(v) + " has degree " +
                                            std::to_string(adj.size()) + " < 3");
        }

        // Root at leaf 1; iterative DFS for parents and preorder.
        parent_.assign(vertex_count + 1, 0);
        std::vector<int> order;
        std::vector<char> seen(vertex_count + 1, 0);
        std::vector<int> stack{1};
        seen[1] = 1;
        while (!stack.empty()) {
            const int x = stack.back();
            stack.pop_back();
            order.push_back(x);
            for (int y : adjacency_[x]) {
                if (seen[y]) continue;
                seen[y] = 1;
                parent_[y] = x;
                stack.push_back(y);
            }
        }
        if (static_cast<int>(order.size()) != vertex_count) throw std::invalid_argument("graph is not connected");

        below_.assign(vertex_count + 1, 0);
        for (auto it = order.rbegin(); it != order.rend(); ++it) {
            const int x = *it;
            if (x <= n && x != 1) below_[x] |= leaf_bit(x);
            if (x != 1) below_[parent_[x]] |= below_[x];
        }
        below_[1] = all_leaves(n);

        children_.assign(vertex_count + 1, {});
        for (int v = 1; v <= vertex_count; ++v) {
            for (int y : adjacency_[v])
                if (y != parent_[v]) children_[v].push_back(y);
            std::sort(children_[v].begin(), children_[v].end(),
                      [&](int a, int b) { return lowest_leaf(below_[a]) < lowest_leaf(below_[b]); });
        }

        edges_.clear();
        for (int v = 2; v <= vertex_count; ++v) {
            const int p = parent_[v];
            EdgeId id;
            if (v <= n)
                id = EdgeId::leaf_edge(v);
            else if (p == 1)
                id = EdgeId::leaf_edge(1);
            else
                id = EdgeId::internal_edge(all_leaves(n) ^ below_[v]);
            edges_.push_back({p, v, id});
        }
        std::sort(edges_.begin(), edges_.end(), [](const Edge& a, const Edge& b) { return a.id < b.id; });

        incident_.assign(vertex_count + 1, {});
        parent_edge_.assign(vertex_count + 1, static_cast<std::size_t>(-1));
        for (std::size_t k = 0; k < edges_.size(); ++k) {
            incident_[edges_[k].u].push_back(k);
            incident_[edges_[k].v].push_back(k);
            parent_edge_[edges_[k].v] = k;
        }

        planar_order_.clear();
        stack.assign(1, 1);
        while (!stack.empty()) {
            const int x = stack.back();
            stack.pop_back();
            if (x <= n) planar_order_.push_back(x);
            const auto& ch = children_[x];
            for (auto it = ch.rbegin(); it != ch.rend(); ++it) stack.push_back(*it);
        }
    }

    int n_ = 0;
    int vertex_count_ = 0;
    std::vector<std::vector<int>> adjacency_;
    std::vector<std::vector<std::size_t>> incident_;
    std::vector<Edge> edges_;
    std::vector<int> parent_;
    std::vector<std::size_t> parent_edge_;
    std::vector<std::vector<int>> children_;
    std::vector<LeafSet> below_;
    std::vector<int> planar_order_;
};

/// A total order on the edges of a tree, stored as a permutation of edge
/// indices.
class EdgeOrder {
public:
    EdgeOrder() = default;

    static EdgeOrder canonical(const LabeledTree& t) {
        EdgeOrder o;
        for (std::size_t k = 0; k < t.edge_count(); ++k) o.sequence_.push_back(k);
        return o;
    }

    static EdgeOrder from_ids(const LabeledTree& t, std::span<const EdgeId> ids) {
        EdgeOrder o;
        std::vector<char> used(t.edge_count(), 0);
        for (const EdgeId& id : ids) {
            const std::size_t k = t.edge_index(id);
            if (used[k]) throw std::invalid_argument("edge " + id.name() + " appears twice in the order");
            used[k] = 1;
            o.sequence_.push_back(k);
        }
        if (o.sequence_.size() != t.edge_count())
            throw std::invalid_argument("edge order lists " + std::to_string(o.sequence_.size()) + " of " +
                                        std::to_string(t.edge_count()) + " edges");
        return o;
    }

    std::span<const std::size_t> sequence() const { return sequence_; }
    std::size_t size() const { return sequence_.size(); }

    friend bool operator==(const EdgeOrder&, const EdgeOrder&) = default;

private:
    std::vector<std::size_t> sequence_;
};

inline bool tree_equal(const LabeledTree& a, const LabeledTree& b) { return a == b; }

/// Edges on the unique path between leaves i and j, in canonical edge order.
inline std::vector<EdgeId> leaf_path(const LabeledTree& t, int i, int j) {
    const int n = t.leaf_count();
    if (i < 1 || i > n || j < 1 || j > n)
        throw std::invalid_argument("leaf out of range in leaf_path(" + std::to_string(i) + ", " + std::to_string(j) +
                                    ")");
    if (i == j) throw std::invalid_argument("leaf_path needs distinct leaves");
    std::vector<EdgeId> out;
    for (std::size_t k = 0; k < t.edge_count(); ++k)
        if (t.on_path(k, i, j)) out.push_back(t.edge_id(k));
    return out;
}

/// Merges the endpoints of internal edge `e`.
inline LabeledTree contract_edge(const LabeledTree& t, const EdgeId& e) {
    if (e.is_leaf()) throw std::invalid_argument("cannot contract leaf edge " + e.name());
    const auto k = t.find_edge(e);
    if (!k) throw std::invalid_argument("edge " + e.name() + " is not an edge of this tree");
    const auto& removed = t.edge(*k);
    std::vector<std::pair<int, int>> edges;
    for (std::size_t m = 0; m < t.edge_count(); ++m) {
        if (m == *k) continue;
        auto [a, b] = std::pair{t.edge(m).u, t.edge(m).v};
        if (a == removed.v) a = removed.u;
        if (b == removed.v) b = removed.u;
        edges.emplace_back(a, b);
    }
    return LabeledTree::from_edges(t.leaf_count(), edges);
}

/// All trivalent trees with leaves 1..n, one per isomorphism class, sorted
/// lexicographically by their sorted list of internal splits.
inline std::vector<LabeledTree> enumerate_trivalent(int n) {
    if (n < 3 || n > 9) throw std::invalid_argument("enumerate_trivalent supports 3 <= n <= 9, got " + std::to_string(n));
    // Stepwise leaf insertion: leaf k subdivides one of the 2k-5 edges.
    std::vector<LabeledTree> out;
    std::vector<std::pair<int, int>> edges{{1, n + 1}, {2, n + 1}, {3, n + 1}};
    auto grow = [&](auto&& self, int k, int next_internal) -> void {
        if (k > n) {
            out.push_back(LabeledTree::from_edges(n, edges));
            return;
        }
        const std::size_t count = edges.size();
        for (std::size_t m = 0; m < count; ++m) {
            const auto [a, b] = edges[m];
            const int w = next_internal;
            edges[m] = {a, w};
            edges.emplace_back(w, b);
            edges.emplace_back(w, k);
            self(self, k + 1, next_internal + 1);
            edges.pop_back();
            edges.pop_back();
            edges[m] = {a, b};
        }
    };
    grow(grow, 4, n + 2);
    std::sort(out.begin(), out.end(), [](const LabeledTree& x, const LabeledTree& y) {
        const auto a = x.internal_edge_ids();
        const auto b = y.internal_edge_ids();
        return std::lexicographical_compare(a.begin(), a.end(), b.begin(), b.end());
    });
    return out;
}

}  // namespace gr2
