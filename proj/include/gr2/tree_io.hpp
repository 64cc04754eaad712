#pragma once

// Tree serialization: the JSON edge-list format and Newick.

#include "gr2/rational.hpp"
#include "gr2/trees.hpp"

#include <json.hpp>

#include <cctype>
#include <optional>
#include <sstream>
#include <string>
#include <string_view>
#include <vector>

namespace gr2 {

/// {"n": n, "edges": [[v, w], ...]} with v < w and the list sorted.
inline nlohmann::json tree_to_json(const LabeledTree& t) {
    nlohmann::json edges = nlohmann::json::array();
    for (auto [a, b] : t.edge_pairs()) edges.push_back({a, b});
    return {{"n", t.leaf_count()}, {"edges", edges}};
}

inline LabeledTree tree_from_json(const nlohmann::json& j) {
    if (!j.is_object() || !j.contains("n") || !j.contains("edges"))
        throw std::invalid_argument("tree JSON needs fields \"n\" and \"edges\"");
    const int n = j.at("n").get<int>();
    std::vector<std::pair<int, int>> edges;
    for (const auto& e : j.at("edges")) {
        if (!e.is_array() || e.size() != 2) throw std::invalid_argument("tree JSON edges must be [v, w] pairs");
        edges.emplace_back(e[0].get<int>(), e[1].get<int>());
    }
    return LabeledTree::from_edges(n, edges);
}

/// A parsed Newick tree. `lengths` is aligned with `tree.edges()` and present
/// only when every edge carried a length.
struct NewickTree {
    LabeledTree tree;
    std::optional<std::vector<Rational>> lengths;
};

namespace detail {

inline void write_newick(const LabeledTree& t, int v, const std::vector<Rational>* lengths, std::ostream& out) {
    if (t.is_leaf(v)) {
        out << v;
    } else {
        out << '(';
        bool first = true;
        for (int c : t.children(v)) {
            if (!first) out << ',';
            first = false;
            write_newick(t, c, lengths, out);
        }
        out << ')';
    }
    if (lengths) out << ':' << to_decimal_or_fraction((*lengths)[t.parent_edge(v)]);
}

class NewickParser {
public:
    explicit NewickParser(std::string_view text) : text_(text) {}

    struct Node {
        std::vector<int> children;
        std::optional<int> leaf;
        std::optional<Rational> length;
    };

    std::vector<Node> nodes;

    int parse() {
        skip_ws();
        const int root = parse_subtree();
        skip_ws();
        if (pos_ >= text_.size() || text_[pos_] != ';') fail("expected ';'");
        ++pos_;
        skip_ws();
        if (pos_ != text_.size()) fail("trailing characters");
        return root;
    }

private:
    [[noreturn]] void fail(const std::string& msg) const {
        throw std::invalid_argument("Newick: " + msg + " at offset " + std::to_string(pos_));
    }

    void skip_ws() {
        while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    }

    std::string_view token() {
        skip_ws();
        const std::size_t start = pos_;
        while (pos_ < text_.size() && std::string_view("(),:;").find(text_[pos_]) == std::string_view::npos &&
               !std::isspace(static_cast<unsigned char>(text_[pos_])))
            ++pos_;
        return text_.substr(start, pos_ - start);
    }

    int parse_subtree() {
        skip_ws();
        const int id = static_cast<int>(nodes.size());
        nodes.emplace_back();
        if (pos_ < text_.size() && text_[pos_] == '(') {
            ++pos_;
            while (true) {
                const int child = parse_subtree();
                nodes[id].children.push_back(child);
                skip_ws();
                if (pos_ >= text_.size()) fail("unbalanced parentheses");
                if (text_[pos_] == ',') {
                    ++pos_;
                    continue;
                }
                if (text_[pos_] == ')') {
                    ++pos_;
                    break;
                }
                fail("expected ',' or ')'");
            }
            token();  // internal node labels are ignored
        } else {
            const std::string_view label = token();
            if (label.empty()) fail("missing leaf label");
            int v = 0;
            for (char c : label) {
                if (!std::isdigit(static_cast<unsigned char>(c))) fail("leaf labels must be integers 1..n");
                v = v * 10 + (c - '0');
                if (v > max_leaves) fail("leaf label too large");
            }
            nodes[id].leaf = v;
        }
        skip_ws();
        if (pos_ < text_.size() && text_[pos_] == ':') {
            ++pos_;
            const std::string_view len = token();
            try {
                nodes[id].length = parse_rational(len);
            } catch (const std::invalid_argument&) {
                fail("bad edge length '" + std::string(len) + "'");
            }
        }
        return id;
    }

    std::string_view text_;
    std::size_t pos_ = 0;
};

}  // namespace detail

/// Unrooted Newick rooted at the neighbor of leaf 1, children in order of
/// their smallest leaf. Lengths, when given, must align with `t.edges()`.
inline std::string tree_to_newick(const LabeledTree& t, const std::vector<Rational>* lengths = nullptr) {
    std::ostringstream out;
    const int root = t.children(1).front();
    out << '(';
    out << 1;
    if (lengths) out << ':' << to_decimal_or_fraction((*lengths)[t.leaf_edge_index(1)]);
    for (int c : t.children(root)) {
        out << ',';
        detail::write_newick(t, c, lengths, out);
    }
    out << ");";
    return out.str();
}

/// Parses Newick with integer leaf labels 1..n. A degree-2 root (rooted
/// binary form) is suppressed and its two edge lengths are summed.
inline NewickTree tree_from_newick(std::string_view text) {
    detail::NewickParser parser(text);
    const int root = parser.parse();
    auto& nodes = parser.nodes;

    int n = 0;
    for (const auto& node : nodes)
        if (node.leaf) ++n;
    std::vector<int> vertex(nodes.size(), 0);
    std::vector<char> seen(n + 1, 0);
    int next = n + 1;
    for (std::size_t k = 0; k < nodes.size(); ++k) {
        if (nodes[k].leaf) {
            const int v = *nodes[k].leaf;
            if (v < 1 || v > n || seen[v]) throw std::invalid_argument("Newick: leaf labels must be exactly 1..n");
            seen[v] = 1;
            vertex[k] = v;
        } else {
            vertex[k] = next++;
        }
    }

    struct RawEdge {
        int a, b;
        std::optional<Rational> length;
    };
    std::vector<RawEdge> raw;
    for (std::size_t k = 0; k < nodes.size(); ++k)
        for (int c : nodes[k].children) raw.push_back({vertex[k], vertex[c], nodes[c].length});

    if (nodes[root].children.size() == 2) {
        const int r = vertex[root];
        std::vector<RawEdge> kept;
        std::vector<RawEdge> joined;
        for (auto& e : raw) (e.a == r ? joined : kept).push_back(e);
        std::optional<Rational> len;
        if (joined[0].length && joined[1].length) len = *joined[0].length + *joined[1].length;
        kept.push_back({joined[0].b, joined[1].b, len});
        raw = std::move(kept);
    }

    std::vector<std::pair<int, int>> pairs;
    for (const auto& e : raw) pairs.emplace_back(e.a, e.b);
    NewickTree result{LabeledTree::from_edges(n, pairs), std::nullopt};

    bool all_lengths = true;
    for (const auto& e : raw) all_lengths = all_lengths && e.length.has_value();
    if (all_lengths) {
        // Identify edges by the leaf set they separate.
        std::vector<std::vector<int>> adj(next);
        for (const auto& e : raw) {
            adj[e.a].push_back(e.b);
            adj[e.b].push_back(e.a);
        }
        auto side = [&](int from, int to) {
            LeafSet s = 0;
            std::vector<std::pair<int, int>> stack{{to, from}};
            while (!stack.empty()) {
                auto [x, p] = stack.back();
                stack.pop_back();
                if (x <= n) s |= leaf_bit(x);
                for (int y : adj[x])
                    if (y != p) stack.emplace_back(y, x);
            }
            return s;
        };
        std::vector<Rational> lengths(result.tree.edge_count());
        for (const auto& e : raw) {
            LeafSet s = side(e.a, e.b);
            EdgeId id;
            if (std::popcount(s) == 1)
                id = EdgeId::leaf_edge(lowest_leaf(s));
            else if (std::popcount(s) == n - 1)
                id = EdgeId::leaf_edge(lowest_leaf(all_leaves(n) ^ s));
            else
                id = EdgeId::internal_edge(contains_leaf(s, 1) ? s : all_leaves(n) ^ s);
            lengths[result.tree.edge_index(id)] = *e.length;
        }
        result.lengths = std::move(lengths);
    }
    return result;
}

}  // namespace gr2
