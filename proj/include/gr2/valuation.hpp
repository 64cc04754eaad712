#pragma once

// Valuations on the Plucker algebra indexed by trees.
//
// Values use the positive ("degree") convention: the weight valuation of f is
// the MAXIMUM over its standard monomials of <d(r), alpha>, and the rank
// valuation picks the order-largest sigma-weight. Both are additive on
// products and sub-maximal on sums.
//
// Standard monomials are the monomials that are non-crossing for a cyclic
// leaf order in which the tree is planar; the tree's own planar order is
// used, so the natural order 1..n applies whenever the tree is planar for it.

#include "gr2/errors.hpp"
#include "gr2/pluecker.hpp"
#include "gr2/semigroup.hpp"
#include "gr2/trees.hpp"
#include "gr2/tropical.hpp"

#include <optional>
#include <string>
#include <vector>

namespace gr2 {

inline CyclicOrder planar_cyclic_order(const LabeledTree& t) { return CyclicOrder(t.planar_order()); }

inline void require_nonzero(const PlueckerPolynomial& f, const char* op) {
    if (f.is_zero()) throw undefined_value_error(std::string(op) + " is undefined for the zero polynomial");
}

/// f vanishes on the Grassmannian cone: straightening leaves nothing.
inline void require_nonzero_straightened(const PlueckerPolynomial& g, const char* op) {
    if (g.is_zero())
        throw undefined_value_error(std::string(op) + " is undefined: the polynomial vanishes on the Grassmannian");
}

inline void require_indices(const PlueckerPolynomial& f, int n) {
    if (f.max_index() > n)
        throw std::invalid_argument("polynomial uses leaf " + std::to_string(f.max_index()) + " but the tree has " +
                                    std::to_string(n) + " leaves");
}

/// <d, alpha> for a monomial p^alpha.
inline Rational monomial_weight(const DissimilarityVector& d, const PlueckerMonomial& m) {
    Rational w = 0;
    for (auto [i, j] : m.factors()) w += d.at(i, j);
    return w;
}

/// v_r(f) = max over the standard monomials of f of <d(r), alpha>.
inline Rational tropical_weight(const EdgeWeighting& r, const PlueckerPolynomial& f) {
    require_nonzero(f, "tropical_weight");
    require_indices(f, r.tree().leaf_count());
    const DissimilarityVector d = dissimilarity(r);
    const PlueckerPolynomial g = straighten(f, planar_cyclic_order(r.tree()));
    require_nonzero_straightened(g, "tropical_weight");
    std::optional<Rational> best;
    for (const auto& [m, c] : g.terms()) {
        Rational w = monomial_weight(d, m);
        if (!best || w > *best) best = std::move(w);
    }
    return *best;
}

/// Sum of omega_ij over the factors of a monomial.
inline SigmaWeight monomial_sigma_weight(const LabeledTree& t, const PlueckerMonomial& m) {
    std::vector<int> v(t.edge_count(), 0);
    for (auto [i, j] : m.factors())
        for (std::size_t e = 0; e < t.edge_count(); ++e)
            if (t.on_path(e, i, j)) ++v[e];
    return {t, std::move(v)};
}

/// A value of the rank valuation: integer entries aligned with
/// `tree.edges()`, compared along `order`.
class ValueVector {
public:
    ValueVector(LabeledTree tree, EdgeOrder order, std::vector<int> values)
        : tree_(std::move(tree)), order_(std::move(order)), values_(std::move(values)) {}

    const LabeledTree& tree() const { return tree_; }
    const EdgeOrder& order() const { return order_; }
    const std::vector<int>& values() const { return values_; }
    int at(const EdgeId& e) const { return values_.at(tree_.edge_index(e)); }

    /// Entries listed along the edge order.
    std::vector<int> ordered() const {
        std::vector<int> out;
        for (std::size_t e : order_.sequence()) out.push_back(values_[e]);
        return out;
    }

    SigmaWeight as_sigma_weight() const { return {tree_, values_}; }

    friend ValueVector operator+(const ValueVector& a, const ValueVector& b) {
        std::vector<int> v(a.values_);
        for (std::size_t k = 0; k < v.size(); ++k) v[k] += b.values_.at(k);
        return {a.tree_, a.order_, std::move(v)};
    }

    friend bool operator==(const ValueVector&, const ValueVector&) = default;

private:
    LabeledTree tree_;
    EdgeOrder order_;
    std::vector<int> values_;
};

/// Order comparison: the first edge (in `order`) where a and b differ decides,
/// and the LARGER entry ranks higher.
inline std::strong_ordering compare_in_order(const std::vector<int>& a, const std::vector<int>& b,
                                             const EdgeOrder& order) {
    for (std::size_t e : order.sequence())
        if (a[e] != b[e]) return a[e] <=> b[e];
    return std::strong_ordering::equal;
}

inline std::strong_ordering compare_in_order(const ValueVector& a, const ValueVector& b) {
    return compare_in_order(a.values(), b.values(), a.order());
}

/// The maximal-rank valuation: straighten f, map every standard monomial to
/// its sigma-weight and return the order-largest one.
inline ValueVector rank_valuation(const LabeledTree& t, const EdgeOrder& order, const PlueckerPolynomial& f) {
    require_trivalent(t, "rank_valuation");
    require_nonzero(f, "rank_valuation");
    require_indices(f, t.leaf_count());
    if (order.size() != t.edge_count()) throw std::invalid_argument("edge order does not match the tree");
    const PlueckerPolynomial g = straighten(f, planar_cyclic_order(t));
    require_nonzero_straightened(g, "rank_valuation");
    std::optional<std::vector<int>> best;
    for (const auto& [m, c] : g.terms()) {
        std::vector<int> s = monomial_sigma_weight(t, m).values();
        if (!best || compare_in_order(s, *best, order) > 0) best = std::move(s);
    }
    return {t, order, std::move(*best)};
}

/// Rows are edges in `order`, columns the pairs {i<j} lexicographically;
/// entry 1 iff the edge lies on the path between i and j.
struct ValuationMatrix {
    std::vector<EdgeId> rows;
    std::vector<std::pair<int, int>> columns;
    std::vector<std::vector<int>> entries;

    /// Tab-separated with an "edge" header row and one labeled row per edge.
    std::string to_tsv() const {
        std::string out = "edge";
        for (auto [i, j] : columns) out += "\tp[" + std::to_string(i) + "," + std::to_string(j) + "]";
        out += '\n';
        for (std::size_t r = 0; r < rows.size(); ++r) {
            out += rows[r].name();
            for (int x : entries[r]) out += '\t' + std::to_string(x);
            out += '\n';
        }
        return out;
    }
};

inline ValuationMatrix valuation_matrix(const LabeledTree& t, const EdgeOrder& order) {
    require_trivalent(t, "valuation_matrix");
    if (order.size() != t.edge_count()) throw std::invalid_argument("edge order does not match the tree");
    ValuationMatrix m;
    m.columns = all_pairs(t.leaf_count());
    for (std::size_t e : order.sequence()) {
        m.rows.push_back(t.edge_id(e));
        std::vector<int> row;
        for (auto [i, j] : m.columns) row.push_back(t.on_path(e, i, j) ? 1 : 0);
        m.entries.push_back(std::move(row));
    }
    return m;
}

/// Weight quasi-valuation for w in the tropical Grassmannian, where it agrees
/// with the tree valuation of the reconstructed metric tree.
inline Rational quasi_valuation_weight(const DissimilarityVector& w, const PlueckerPolynomial& f) {
    require_nonzero(f, "quasi_valuation_weight");
    return tropical_weight(reconstruct_tree(w), f);
}

}  // namespace gr2
