#pragma once

// Initial forms of Plucker polynomials, the monomial map p_ij -> prod of y_e
// over the path from i to j, and a graded-dimension check that the initial
// ideal of an interior tree weight is the toric ideal of S_sigma.

#include "gr2/errors.hpp"
#include "gr2/linalg.hpp"
#include "gr2/pluecker.hpp"
#include "gr2/semigroup.hpp"
#include "gr2/tree_io.hpp"
#include "gr2/tropical.hpp"
#include "gr2/valuation.hpp"

#include <json.hpp>

#include <map>
#include <optional>
#include <string>
#include <vector>

namespace gr2 {

/// Sub-sum of the terms of f attaining the maximal weight <d, alpha>.
inline PlueckerPolynomial initial_form(const PlueckerPolynomial& f, const DissimilarityVector& d) {
    require_nonzero(f, "initial_form");
    require_indices(f, d.n());
    std::optional<Rational> best;
    for (const auto& [m, c] : f.terms()) {
        Rational w = monomial_weight(d, m);
        if (!best || w > *best) best = std::move(w);
    }
    PlueckerPolynomial out;
    for (const auto& [m, c] : f.terms())
        if (monomial_weight(d, m) == *best) out.add_term(m, c);
    return out;
}

/// Monomial in the edge variables y_e; exponents aligned with the tree's edges.
struct EdgeMonomial {
    std::vector<int> exponents;

    friend bool operator==(const EdgeMonomial&, const EdgeMonomial&) = default;
    friend auto operator<=>(const EdgeMonomial&, const EdgeMonomial&) = default;
};

/// "y[l1]*y[l3]*y[e1.2]^2"; "1" for the empty monomial.
inline std::string to_string(const EdgeMonomial& m, const LabeledTree& t) {
    std::string out;
    for (std::size_t e = 0; e < m.exponents.size(); ++e) {
        if (m.exponents[e] == 0) continue;
        if (!out.empty()) out += '*';
        out += "y[" + t.edge_id(e).name() + "]";
        if (m.exponents[e] > 1) out += "^" + std::to_string(m.exponents[e]);
    }
    return out.empty() ? "1" : out;
}

inline EdgeMonomial monomial_map(const LabeledTree& t, const PlueckerMonomial& m) {
    require_trivalent(t, "monomial_map");
    require_indices(PlueckerPolynomial::monomial(m), t.leaf_count());
    return {monomial_sigma_weight(t, m).values()};
}

/// f maps to zero under p_ij -> prod_{e in path(i,j)} y_e.
inline bool toric_kernel_membership(const LabeledTree& t, const PlueckerPolynomial& f) {
    require_trivalent(t, "toric_kernel_membership");
    std::map<EdgeMonomial, Rational> image;
    for (const auto& [m, c] : f.terms()) image[monomial_map(t, m)] += c;
    for (const auto& [y, c] : image)
        if (c != 0) return false;
    return true;
}

/// The interior weighting used for initial ideals: 1 on internal edges, 0 on
/// leaf edges.
inline EdgeWeighting interior_weighting(const LabeledTree& t) {
    std::vector<Rational> w(t.edge_count(), Rational(0));
    for (std::size_t e = static_cast<std::size_t>(t.leaf_count()); e < t.edge_count(); ++e) w[e] = 1;
    return {t, std::move(w)};
}

/// Initial forms of the three-term relations for every 4-subset, under the
/// interior weighting of t.
inline std::vector<PlueckerPolynomial> initial_quadrics(const LabeledTree& t) {
    const int n = t.leaf_count();
    const DissimilarityVector d = dissimilarity(interior_weighting(t));
    std::vector<PlueckerPolynomial> out;
    for (int i = 1; i <= n; ++i)
        for (int j = i + 1; j <= n; ++j)
            for (int k = j + 1; k <= n; ++k)
                for (int l = k + 1; l <= n; ++l) out.push_back(initial_form(plucker_relation(i, j, k, l), d));
    return out;
}

/// All monomials of degree d in the Plucker variables of n leaves, in
/// serialization order.
inline std::vector<PlueckerMonomial> monomials_of_degree(int n, int d) {
    const auto vars = all_pairs(n);
    std::vector<PlueckerMonomial> out;
    std::vector<PlueckerVar> current;
    auto rec = [&](auto&& self, std::size_t from, int left) -> void {
        if (left == 0) {
            out.emplace_back(current);
            return;
        }
        for (std::size_t v = from; v < vars.size(); ++v) {
            current.push_back(vars[v]);
            self(self, v, left - 1);
            current.pop_back();
        }
    };
    rec(rec, 0, d);
    return out;
}

/// A basis of the degree-d part of the toric kernel: monomials grouped by
/// image, each group contributing first - other for its other members.
inline std::vector<PlueckerPolynomial> kernel_binomials(const LabeledTree& t, int d) {
    require_trivalent(t, "kernel_binomials");
    std::map<EdgeMonomial, std::vector<PlueckerMonomial>> fibers;
    for (auto& m : monomials_of_degree(t.leaf_count(), d)) fibers[monomial_map(t, m)].push_back(std::move(m));
    std::vector<PlueckerPolynomial> out;
    for (const auto& [image, group] : fibers)
        for (std::size_t k = 1; k < group.size(); ++k)
            out.push_back(PlueckerPolynomial::monomial(group.front()) - PlueckerPolynomial::monomial(group[k]));
    std::sort(out.begin(), out.end(), [](const auto& a, const auto& b) { return to_string(a) < to_string(b); });
    return out;
}

struct HilbertDegreeRow {
    int d = 0;
    std::size_t monomials = 0;
    std::size_t ideal_dim = 0;
    std::size_t quotient = 0;
    std::uint64_t semigroup_count = 0;
    bool pass = false;
};

struct HilbertCheckReport {
    LabeledTree tree;
    std::vector<HilbertDegreeRow> degrees;

    bool pass() const {
        for (const auto& r : degrees)
            if (!r.pass) return false;
        return true;
    }

    nlohmann::json to_json() const {
        nlohmann::json rows = nlohmann::json::array();
        for (const auto& r : degrees)
            rows.push_back({{"d", r.d},
                            {"monomials", r.monomials},
                            {"ideal_dim", r.ideal_dim},
                            {"quotient", r.quotient},
                            {"semigroup_count", r.semigroup_count},
                            {"pass", r.pass}});
        return {{"n", tree.leaf_count()}, {"tree", tree_to_json(tree)}, {"degrees", rows}, {"pass", pass()}};
    }
};

struct HilbertCheckLimits {
    std::size_t max_monomials = 20'000;
    std::size_t max_generators = 400'000;
};

/// For each degree d <= d_max: the span of m * g (g an initial quadric, m of
/// degree d-2) inside the degree-d monomial space, its codimension, and the
/// number of semigroup elements of Plucker degree d. Passes when the
/// codimension equals the semigroup count in every degree.
inline HilbertCheckReport initial_ideal_hilbert_check(const LabeledTree& t, int d_max, HilbertCheckLimits limits = {}) {
    require_trivalent(t, "initial_ideal_hilbert_check");
    if (d_max < 1) throw std::invalid_argument("d_max must be at least 1");
    const int n = t.leaf_count();
    const auto quadrics = initial_quadrics(t);
    HilbertCheckReport report{t, {}};
    for (int d = 1; d <= d_max; ++d) {
        const auto basis = monomials_of_degree(n, d);
        const auto multipliers = d >= 2 ? monomials_of_degree(n, d - 2) : std::vector<PlueckerMonomial>{};
        if (basis.size() > limits.max_monomials || multipliers.size() * quadrics.size() > limits.max_generators)
            throw size_limit_error("initial ideal check too large at n=" + std::to_string(n) +
                                   ", d=" + std::to_string(d));
        std::map<PlueckerMonomial, std::size_t> column;
        for (std::size_t k = 0; k < basis.size(); ++k) column.emplace(basis[k], k);

        RowEchelon echelon;
        for (const auto& g : quadrics)
            for (const auto& m : multipliers) {
                SparseRow row;
                for (const auto& [mono, c] : g.terms()) {
                    // Quadric coefficients are integers.
                    row.emplace_back(column.at(mono * m), boost::multiprecision::numerator(c));
                }
                std::sort(row.begin(), row.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
                echelon.insert(std::move(row));
            }
        HilbertDegreeRow r;
        r.d = d;
        r.monomials = basis.size();
        r.ideal_dim = echelon.rank();
        r.quotient = r.monomials - r.ideal_dim;
        r.semigroup_count = graded_count(t, GradedMode::plucker_degree(d));
        r.pass = r.quotient == r.semigroup_count;
        report.degrees.push_back(r);
    }
    return report;
}

}  // namespace gr2
