#include "../oracles.hpp"
#include "paper_example_golden.hpp"

#include <algorithm>
#include <chrono>
#include <functional>
#include <iostream>
#include <sstream>
#include <string>

using namespace gr2;

namespace {

// Runtime limits in seconds. Correctness checks are exact.
constexpr double golden_limit = 1.0;
constexpr double tree_count_limit = 10.0;
constexpr double semigroup_limit = 60.0;
constexpr double dimension_limit = 60.0;
constexpr double hilbert_limit = 120.0;
constexpr double gorenstein_limit = 30.0;
constexpr double unbounded = 1e9;

struct Outcome {
    bool pass = true;
    std::string detail;

    void require(bool ok, const std::string& what) {
        if (!ok && pass) {
            pass = false;
            detail = what;
        }
    }
};

int failures = 0;

void criterion(int id, const std::string& name, double limit, const std::function<Outcome()>& body) {
    const auto start = std::chrono::steady_clock::now();
    Outcome out;
    try {
        out = body();
    } catch (const std::exception& e) {
        out.pass = false;
        out.detail = std::string("exception: ") + e.what();
    }
    const double seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    if (out.pass && seconds > limit) {
        out.pass = false;
        std::ostringstream s;
        s << "runtime " << seconds << " s exceeds " << limit << " s";
        out.detail = s.str();
    }
    if (!out.pass) ++failures;
    std::cout << (out.pass ? "PASS" : "FAIL") << " " << id << " " << name;
    std::cout << " (" << static_cast<long>(seconds * 1000) << " ms)";
    if (!out.pass) std::cout << ": " << out.detail;
    std::cout << std::endl;
}

bool contains(const std::string& text, const std::string& needle) { return text.find(needle) != std::string::npos; }

Outcome golden_reproduction() {
    Outcome out;
    const std::string report = worked_example_report();
    out.require(report == embedded_paper_example_golden, "report differs from the golden file");
    for (const char* line : {"trivalent trees on 4 leaves: 3", "psi(e1) = (1,1,1,0,0,0)", "psi(e2) = (1,0,0,1,1,0)",
                             "psi(e3) = (0,1,0,1,0,1)", "psi(e4) = (0,0,1,0,1,1)", "e1.2  (0,1,1,1,1,0)",
                             "l1\t1\t1\t1\t0\t0\t0", "l2\t1\t0\t0\t1\t1\t0", "l3\t0\t1\t0\t1\t0\t1",
                             "l4\t0\t0\t1\t0\t1\t1", "e1.2\t0\t1\t1\t1\t1\t0", "v(p[1,3]) = (1,0,1,0,1)",
                             "p[1,3] -> y[l1]*y[l3]*y[e1.2]", "dimension 1\n  p[1,3] * p[2,4] - p[1,4] * p[2,3]"})
        out.require(contains(report, line), std::string("missing: ") + line);
    return out;
}

Outcome tree_counts() {
    Outcome out;
    for (int n = 3; n <= 7; ++n) {
        const auto trees = enumerate_trivalent(n);
        const auto expected = oracle::double_factorial(2 * n - 5);
        out.require(trees.size() == expected, "wrong count at n=" + std::to_string(n));
        std::set<std::vector<std::uint64_t>> splits;
        for (const auto& t : trees) {
            out.require(t.is_trivalent(), "non-trivalent tree at n=" + std::to_string(n));
            splits.insert(oracle::split_system(t));
        }
        out.require(splits.size() == trees.size(), "isomorphic trees at n=" + std::to_string(n));
        if (n <= 6) out.require(splits == oracle::trivalent_split_systems(n), "split systems differ at n=" + std::to_string(n));
    }
    return out;
}

std::vector<EdgeWeighting> round_trip_sample() {
    std::mt19937_64 rng(1003);
    std::vector<EdgeWeighting> sample;
    for (int k = 0; k < 200; ++k) {
        const auto t = oracle::random_trivalent(rng, 4 + k % 5);
        sample.push_back(oracle::random_weighting(rng, t));
    }
    return sample;
}

Outcome round_trip() {
    Outcome out;
    for (const auto& r : round_trip_sample()) {
        const auto back = reconstruct_tree(dissimilarity(r));
        out.require(tree_equal(back.tree(), r.tree()), "tree not recovered: " + tree_to_newick(r.tree()));
        out.require(back == r, "weights not recovered on " + tree_to_newick(r.tree()));
    }
    return out;
}

Outcome tropical_membership() {
    Outcome out;
    for (const auto& r : round_trip_sample())
        out.require(is_tropical_point(dissimilarity(r)).is_tropical, "tree metric rejected on " + tree_to_newick(r.tree()));
    std::mt19937_64 rng(1004);
    for (int k = 0; k < 200; ++k) {
        const int n = 4 + k % 5;
        const auto t = oracle::random_trivalent(rng, n);
        auto entries = dissimilarity(oracle::random_short_weighting(rng, t)).entries();
        std::uniform_int_distribution<std::size_t> pick(0, entries.size() - 1);
        entries[pick(rng)] += 1;
        out.require(!is_tropical_point(DissimilarityVector(n, entries)).is_tropical,
                    "perturbed point accepted on " + tree_to_newick(t));
    }
    return out;
}

Outcome semigroup_equivalence() {
    Outcome out;
    constexpr int top = 4;
    for (int n = 4; n <= 5; ++n)
        for (const auto& t : enumerate_trivalent(n)) {
            oracle::PairSearch search(t);
            std::vector<int> s(t.edge_count(), 0);
            while (true) {
                const SigmaWeight w(t, s);
                const bool member = in_semigroup(w);
                const bool ok = member == (invariant_dim(w) >= 1) && member == search.decomposable(s) &&
                                member == oracle::semigroup_member(t, s);
                if (!ok) {
                    out.require(false, "verdicts disagree on " + tree_to_newick(t));
                    return out;
                }
                if (member && !(sum_of_omegas(t, decompose(w)) == w)) {
                    out.require(false, "decompose does not sum back on " + tree_to_newick(t));
                    return out;
                }
                std::size_t k = 0;
                while (k < s.size() && s[k] == top) s[k++] = 0;
                if (k == s.size()) break;
                ++s[k];
            }
        }
    return out;
}

Outcome character_oracle() {
    Outcome out;
    std::mt19937_64 rng(1006);
    std::uniform_int_distribution<int> len(1, 6), entry(0, 8);
    for (int k = 0; k < 200; ++k) {
        std::vector<int> a(len(rng));
        for (int& x : a) x = entry(rng);
        out.require(static_cast<std::int64_t>(tensor_invariant_dim(a)) == oracle::character_invariants(a),
                    "mismatch on a tuple of length " + std::to_string(a.size()));
    }
    return out;
}

Outcome dimension_cross_checks() {
    // Frozen from the hook-content formula for the partition (d,d).
    const std::map<int, std::array<std::uint64_t, 4>> frozen{
        {4, {6, 20, 50, 105}}, {5, {10, 50, 175, 490}}, {6, {15, 105, 490, 1764}}};
    Outcome out;
    for (const auto& [n, row] : frozen) {
        const auto trees = enumerate_trivalent(n);
        for (int d = 1; d <= 4; ++d) {
            const auto expected = row[static_cast<std::size_t>(d - 1)];
            out.require(oracle::hook_content_two_rows(n, d) == expected, "fixture drift at n=" + std::to_string(n));
            for (const auto& t : trees)
                out.require(graded_count(t, GradedMode::plucker_degree(d)) == expected,
                            "count differs at n=" + std::to_string(n) + " d=" + std::to_string(d));
        }
    }
    return out;
}

Outcome valuation_axioms() {
    Outcome out;
    std::mt19937_64 rng(1008);
    auto nonzero_polynomial = [&rng](int n) {
        while (true) {
            auto f = oracle::random_polynomial(rng, n, 3, 2);
            if (!straighten(f).is_zero()) return f;
        }
    };
    for (int n = 4; n <= 6; ++n)
        for (const auto& t : enumerate_trivalent(n)) {
            const auto r = oracle::random_weighting(rng, t);
            std::vector<EdgeId> ids;
            for (const auto& e : t.edges()) ids.push_back(e.id);
            std::shuffle(ids.begin(), ids.end(), rng);
            const auto order = EdgeOrder::from_ids(t, ids);
            for (int k = 0; k < 100; ++k) {
                const auto f = nonzero_polynomial(n), g = nonzero_polynomial(n);
                const auto wf = tropical_weight(r, f), wg = tropical_weight(r, g);
                const auto vf = rank_valuation(t, order, f), vg = rank_valuation(t, order, g);
                out.require(tropical_weight(r, f * g) == wf + wg, "weight not additive on " + to_string(f));
                out.require(rank_valuation(t, order, f * g) == vf + vg, "valuation not additive on " + to_string(f));
                if (straighten(f + g).is_zero()) continue;
                out.require(tropical_weight(r, f + g) <= std::max(wf, wg), "weight exceeds max on " + to_string(f));
                const auto& top = compare_in_order(vf, vg) >= 0 ? vf : vg;
                out.require(compare_in_order(rank_valuation(t, order, f + g), top) <= 0,
                            "valuation exceeds max on " + to_string(f));
            }
        }
    for (int k = 0; k < 100; ++k) {
        const int n = 4 + k % 3;
        const auto f = oracle::random_polynomial(rng, n, 6, 3);
        const auto g = straighten(f);
        std::vector<Rational> a(n), b(n);
        for (int i = 0; i < n; ++i) {
            a[i] = oracle::random_rational(rng);
            b[i] = oracle::random_rational(rng);
        }
        out.require(oracle::evaluate_minors(f, a, b) == oracle::evaluate_minors(g, a, b),
                    "straightening changed the value of " + to_string(f));
    }
    return out;
}

Outcome initial_ideal() {
    Outcome out;
    for (int n = 4; n <= 5; ++n)
        for (const auto& t : enumerate_trivalent(n)) {
            const auto report = initial_ideal_hilbert_check(t, 3);
            out.require(report.pass(), "Hilbert check fails on " + tree_to_newick(t));
            if (n == 4) out.require(report.degrees[1].ideal_dim == 1, "degree-2 span is not 1 on " + tree_to_newick(t));
        }
    return out;
}

Outcome gorenstein() {
    Outcome out;
    for (int n = 4; n <= 6; ++n)
        for (const auto& t : enumerate_trivalent(n))
            out.require(gorenstein_witness_check(t, 100), "witness fails on " + tree_to_newick(t));
    return out;
}

}  // namespace

int main() {
    criterion(1, "worked example reproduces the golden report", golden_limit, golden_reproduction);
    criterion(2, "trivalent tree counts 1, 3, 15, 105, 945", tree_count_limit, tree_counts);
    criterion(3, "reconstruction round trip on 200 weightings", unbounded, round_trip);
    criterion(4, "tree metrics are tropical, perturbations are not", unbounded, tropical_membership);
    criterion(5, "semigroup membership agrees with three oracles", semigroup_limit, semigroup_equivalence);
    criterion(6, "invariant dimension agrees with characters", unbounded, character_oracle);
    criterion(7, "graded counts match hook-content dimensions", dimension_limit, dimension_cross_checks);
    criterion(8, "valuation axioms and straightening", unbounded, valuation_axioms);
    criterion(9, "initial ideal Hilbert check", hilbert_limit, initial_ideal);
    criterion(10, "Gorenstein witness check", gorenstein_limit, gorenstein);
    return failures == 0 ? 0 : 1;
}
