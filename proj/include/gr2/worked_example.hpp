#pragma once

// The four-leaf example end to end: the three trees, the cone generators of
// the first tree, its valuation matrix, the values of the maximal-rank
// valuation on the Plucker generators, the monomial map and its kernel.

#include "gr2/ideals.hpp"
#include "gr2/semigroup.hpp"
#include "gr2/tree_io.hpp"
#include "gr2/tropical.hpp"
#include "gr2/valuation.hpp"

#include <string>
#include <vector>

namespace gr2 {

namespace detail {

template <class Range>
std::string tuple_text(const Range& values) {
    std::string out = "(";
    bool first = true;
    for (const auto& v : values) {
        if (!first) out += ',';
        first = false;
        if constexpr (std::is_same_v<std::decay_t<decltype(v)>, Rational>)
            out += to_string(v);
        else
            out += std::to_string(v);
    }
    return out + ")";
}

inline std::string pad(std::string s, std::size_t width) {
    if (s.size() < width) s.append(width - s.size(), ' ');
    return s;
}

inline std::string split_text(const LabeledTree& t) {
    std::string out;
    for (const EdgeId& e : t.internal_edge_ids()) {
        std::string a, b;
        for (int k = 1; k <= t.leaf_count(); ++k) (contains_leaf(e.side(), k) ? a : b) += std::to_string(k);
        if (!out.empty()) out += ' ';
        out += a + "|" + b;
    }
    return out;
}

}  // namespace detail

inline std::string worked_example_report() {
    using detail::pad;
    using detail::tuple_text;
    std::string out;
    auto line = [&](const std::string& s) { out += s + '\n'; };

    const auto trees = enumerate_trivalent(4);
    line("trivalent trees on 4 leaves: " + std::to_string(trees.size()));
    for (std::size_t k = 0; k < trees.size(); ++k)
        line("  sigma" + std::to_string(k + 1) + "  " + pad(detail::split_text(trees[k]), 6) + "  " +
             tree_to_newick(trees[k]));
    line("");

    line("lineality space: d(r) for r the indicator of a leaf edge");
    const LabeledTree& sigma1 = trees.front();
    for (int i = 1; i <= 4; ++i) {
        const auto d = dissimilarity(EdgeWeighting::indicator(sigma1, EdgeId::leaf_edge(i)));
        line("  psi(e" + std::to_string(i) + ") = " + tuple_text(d.entries()));
    }
    line("cone generators: d(r) for r the indicator of the internal edge");
    for (std::size_t k = 0; k < trees.size(); ++k) {
        const EdgeId e = trees[k].internal_edge_ids().front();
        const auto d = dissimilarity(EdgeWeighting::indicator(trees[k], e));
        std::string support;
        for (auto [i, j] : all_pairs(4))
            if (d.at(i, j) != 0) support += (support.empty() ? "e" : " + e") + std::to_string(i) + std::to_string(j);
        line("  sigma" + std::to_string(k + 1) + "  " + pad(e.name(), 5) + " " + tuple_text(d.entries()) + " = " +
             support + "  cone_of: " + detail::split_text(cone_of(d)));
    }
    line("");

    const EdgeOrder order = EdgeOrder::canonical(sigma1);
    std::string order_text;
    for (std::size_t e : order.sequence()) order_text += (order_text.empty() ? "" : " > ") + sigma1.edge_id(e).name();
    line("valuation matrix of sigma1, order " + order_text);
    out += valuation_matrix(sigma1, order).to_tsv();
    line("");

    line("maximal-rank valuation of the Plucker generators on sigma1");
    for (auto [i, j] : all_pairs(4)) {
        const auto v = rank_valuation(sigma1, order, PlueckerPolynomial::var(i, j));
        line("  v(" + to_string(PlueckerPolynomial::var(i, j)) + ") = " + tuple_text(v.ordered()) +
             (in_semigroup(v.as_sigma_weight()) ? "  in S_sigma" : "  NOT in S_sigma"));
    }
    line("");

    line("monomial map p[i,j] -> product of y over the path");
    for (auto [i, j] : all_pairs(4))
        line("  " + to_string(PlueckerPolynomial::var(i, j)) + " -> " +
             to_string(monomial_map(sigma1, PlueckerMonomial::var(i, j)), sigma1));
    line("");

    const auto kernel = kernel_binomials(sigma1, 2);
    line("degree-2 kernel of the monomial map: dimension " + std::to_string(kernel.size()));
    for (const auto& f : kernel) line("  " + to_string(f));
    const auto report = initial_ideal_hilbert_check(sigma1, 2);
    line("degree-2 initial ideal of the interior weight: dimension " + std::to_string(report.degrees.back().ideal_dim));
    const auto g = initial_form(plucker_relation(1, 2, 3, 4), dissimilarity(interior_weighting(sigma1)));
    line("  " + to_string(g));
    const bool same = kernel.size() == 1 && (g == kernel.front() || g == -kernel.front());
    line("  equal to the kernel up to sign: " + std::string(same ? "yes" : "no"));
    return out;
}

}  // namespace gr2
