#include "gr2/gr2.hpp"
#include "paper_example_golden.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

namespace {

using namespace gr2;

constexpr int exit_ok = 0;
constexpr int exit_failed = 1;
constexpr int exit_usage = 2;

// Thrown for inputs that parse but do not make sense for the command.
struct usage_error : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

/// "-" reads stdin, an existing path reads the file, anything else is taken
/// as the text itself.
std::string read_source(const std::string& arg) {
    if (arg == "-") {
        std::ostringstream s;
        s << std::cin.rdbuf();
        return s.str();
    }
    std::error_code ec;
    if (std::filesystem::is_regular_file(arg, ec)) {
        std::ifstream in(arg, std::ios::binary);
        if (!in) throw usage_error("cannot read " + arg);
        std::ostringstream s;
        s << in.rdbuf();
        return s.str();
    }
    return arg;
}

std::string trim(std::string s) {
    const auto b = s.find_first_not_of(" \t\r\n");
    if (b == std::string::npos) return "";
    const auto e = s.find_last_not_of(" \t\r\n");
    return s.substr(b, e - b + 1);
}

bool looks_like_json(const std::string& text) { return !text.empty() && text.front() == '{'; }

NewickTree load_tree(const std::string& arg) {
    const std::string text = trim(read_source(arg));
    if (looks_like_json(text)) return {tree_from_json(nlohmann::json::parse(text)), std::nullopt};
    return tree_from_newick(text);
}

/// Weighting JSON or Newick with a length on every edge.
EdgeWeighting load_weighting(const std::string& arg) {
    const std::string text = trim(read_source(arg));
    if (looks_like_json(text)) return weighting_from_json(nlohmann::json::parse(text));
    NewickTree nt = tree_from_newick(text);
    if (!nt.lengths) throw usage_error("Newick input needs a length on every edge");
    return {nt.tree, *nt.lengths};
}

/// JSON, TSV (several lines) or a comma-separated list.
DissimilarityVector load_dissimilarity(const std::string& arg) {
    const std::string text = trim(read_source(arg));
    if (looks_like_json(text)) return dissimilarity_from_json(nlohmann::json::parse(text));
    if (text.find('\n') != std::string::npos || text.find('\t') != std::string::npos)
        return dissimilarity_from_tsv(text);
    return dissimilarity_from_list(text);
}

SigmaWeight load_sigma_weight(const std::string& arg) {
    return sigma_weight_from_json(nlohmann::json::parse(trim(read_source(arg))));
}

PlueckerPolynomial load_polynomial(const std::string& arg) { return parse_polynomial(trim(read_source(arg))); }

EdgeOrder load_order(const LabeledTree& t, const std::string& text) {
    if (text.empty()) return EdgeOrder::canonical(t);
    std::vector<EdgeId> ids;
    std::stringstream in(text);
    std::string item;
    while (std::getline(in, item, ',')) ids.push_back(EdgeId::parse(trim(item)));
    return EdgeOrder::from_ids(t, ids);
}

std::string split_name(const LabeledTree& t, const EdgeId& e) {
    std::string a, b;
    for (int k = 1; k <= t.leaf_count(); ++k) (contains_leaf(e.side(), k) ? a : b) += std::to_string(k);
    return a + "|" + b;
}

std::string quadruple_text(const std::array<int, 4>& q) {
    return "(" + std::to_string(q[0]) + "," + std::to_string(q[1]) + "," + std::to_string(q[2]) + "," +
           std::to_string(q[3]) + ")";
}

std::string vector_text(const std::vector<int>& v) {
    std::string out = "(";
    for (std::size_t k = 0; k < v.size(); ++k) out += (k ? "," : "") + std::to_string(v[k]);
    return out + ")";
}

std::vector<std::string> split_lines(const std::string& text) {
    std::vector<std::string> lines;
    std::stringstream in(text);
    std::string line;
    while (std::getline(in, line)) lines.push_back(line);
    return lines;
}

/// Single-hunk unified diff with full context.
std::string unified_diff(const std::string& expected, const std::string& actual, const std::string& expected_name,
                         const std::string& actual_name) {
    const auto a = split_lines(expected);
    const auto b = split_lines(actual);
    std::vector<std::vector<int>> lcs(a.size() + 1, std::vector<int>(b.size() + 1, 0));
    for (std::size_t i = a.size(); i-- > 0;)
        for (std::size_t j = b.size(); j-- > 0;)
            lcs[i][j] = a[i] == b[j] ? lcs[i + 1][j + 1] + 1 : std::max(lcs[i + 1][j], lcs[i][j + 1]);
    std::string out = "--- " + expected_name + "\n+++ " + actual_name + "\n";
    out += "@@ -1," + std::to_string(a.size()) + " +1," + std::to_string(b.size()) + " @@\n";
    std::size_t i = 0, j = 0;
    while (i < a.size() || j < b.size()) {
        if (i < a.size() && j < b.size() && a[i] == b[j]) {
            out += " " + a[i++] + "\n";
            ++j;
        } else if (j < b.size() && (i == a.size() || lcs[i][j + 1] >= lcs[i + 1][j])) {
            out += "+" + b[j++] + "\n";
        } else {
            out += "-" + a[i++] + "\n";
        }
    }
    return out;
}

// ---------------------------------------------------------------- trees

int cmd_trees_enumerate(int n, bool count_only, const std::string& format) {
    if (n < 3) throw usage_error("--n must be at least 3");
    const auto trees = enumerate_trivalent(n);
    if (count_only) {
        std::cout << trees.size() << '\n';
        return exit_ok;
    }
    for (const auto& t : trees) std::cout << (format == "json" ? tree_to_json(t).dump() : tree_to_newick(t)) << '\n';
    return exit_ok;
}

int cmd_trees_contract(const std::string& tree, const std::string& edge, const std::string& format) {
    const LabeledTree t = contract_edge(load_tree(tree).tree, EdgeId::parse(edge));
    std::cout << (format == "json" ? tree_to_json(t).dump() : tree_to_newick(t)) << '\n';
    return exit_ok;
}

int cmd_trees_path(const std::string& tree, int i, int j) {
    const LabeledTree t = load_tree(tree).tree;
    std::string out;
    for (const EdgeId& e : leaf_path(t, i, j)) out += (out.empty() ? "" : ",") + e.name();
    std::cout << out << '\n';
    return exit_ok;
}

int cmd_trees_equal(const std::string& a, const std::string& b) {
    const bool same = tree_equal(load_tree(a).tree, load_tree(b).tree);
    std::cout << (same ? "equal" : "different") << '\n';
    return same ? exit_ok : exit_failed;
}

// ---------------------------------------------------------------- trop

void print_dissimilarity(const DissimilarityVector& d, const std::string& format) {
    if (format == "json")
        std::cout << dissimilarity_to_json(d).dump() << '\n';
    else if (format == "list")
        std::cout << dissimilarity_to_list(d) << '\n';
    else
        std::cout << dissimilarity_to_tsv(d);
}

int cmd_trop_dissim(const std::string& input, const std::string& format) {
    print_dissimilarity(dissimilarity(load_weighting(input)), format);
    return exit_ok;
}

int cmd_trop_check(const std::string& input, const std::string& format) {
    const DissimilarityVector d = load_dissimilarity(input);
    const TropicalCheck check = is_tropical_point(d);
    static const char* names[3] = {"ij|kl", "ik|jl", "il|jk"};
    if (format == "json") {
        nlohmann::json w = nlohmann::json::array();
        for (const auto& q : check.witnesses) {
            nlohmann::json attained = nlohmann::json::array();
            for (int b = 0; b < 3; ++b)
                if (q.max_mask & (1u << b)) attained.push_back(names[b]);
            w.push_back({{"quadruple", q.quadruple}, {"max", attained}});
        }
        nlohmann::json out = {{"tropical", check.is_tropical}, {"witnesses", w}};
        if (check.violation) out["violation"] = *check.violation;
        std::cout << out.dump() << '\n';
    } else {
        for (const auto& q : check.witnesses) {
            std::string attained;
            for (int b = 0; b < 3; ++b)
                if (q.max_mask & (1u << b)) attained += (attained.empty() ? "" : ",") + std::string(names[b]);
            std::cout << quadruple_text(q.quadruple) << "\tmax " << attained << '\n';
        }
        if (check.is_tropical)
            std::cout << "tropical\n";
        else
            std::cout << "not tropical: quadruple " << quadruple_text(*check.violation) << '\n';
    }
    return check.is_tropical ? exit_ok : exit_failed;
}

int cmd_trop_reconstruct(const std::string& input, const std::string& format) {
    const EdgeWeighting r = reconstruct_tree(load_dissimilarity(input));
    if (format == "newick")
        std::cout << tree_to_newick(r.tree(), &r.weights()) << '\n';
    else
        std::cout << weighting_to_json(r).dump() << '\n';
    return exit_ok;
}

// ---------------------------------------------------------------- val

int cmd_val_matrix(const std::string& tree, const std::string& order) {
    const LabeledTree t = load_tree(tree).tree;
    std::cout << valuation_matrix(t, load_order(t, order)).to_tsv();
    return exit_ok;
}

int cmd_val_rank(const std::string& tree, const std::string& order, const std::string& poly) {
    const LabeledTree t = load_tree(tree).tree;
    const ValueVector v = rank_valuation(t, load_order(t, order), load_polynomial(poly));
    std::cout << vector_text(v.ordered()) << '\n';
    return exit_ok;
}

int cmd_val_weight(const std::string& input, const std::string& poly) {
    std::cout << to_string(tropical_weight(load_weighting(input), load_polynomial(poly))) << '\n';
    return exit_ok;
}

int cmd_val_quasi(const std::string& input, const std::string& poly) {
    const DissimilarityVector w = load_dissimilarity(input);
    std::cout << to_string(quasi_valuation_weight(w, load_polynomial(poly))) << '\n';
    return exit_ok;
}

int cmd_val_straighten(const std::string& poly, const std::string& tree) {
    const PlueckerPolynomial f = load_polynomial(poly);
    const CyclicOrder order = tree.empty() ? CyclicOrder{} : planar_cyclic_order(load_tree(tree).tree);
    std::cout << to_string(straighten(f, order)) << '\n';
    return exit_ok;
}

// ---------------------------------------------------------------- semigroup

int cmd_semigroup_member(const std::string& input) {
    const SigmaWeight s = load_sigma_weight(input);
    if (auto v = semigroup_violation(s)) {
        std::cout << "not in semigroup: vertex " << *v << '\n';
        return exit_failed;
    }
    std::cout << "in semigroup\n";
    return exit_ok;
}

int cmd_semigroup_decompose(const std::string& input) {
    std::cout << pairs_to_json(decompose(load_sigma_weight(input))).dump() << '\n';
    return exit_ok;
}

int cmd_semigroup_dim(const std::string& input) {
    std::cout << invariant_dim(load_sigma_weight(input)) << '\n';
    return exit_ok;
}

int cmd_semigroup_count(const std::string& tree, int degree, int box) {
    if ((degree < 0) == (box < 0)) throw usage_error("give exactly one of --degree and --box");
    const LabeledTree t = load_tree(tree).tree;
    const GradedMode mode = degree >= 0 ? GradedMode::plucker_degree(degree) : GradedMode::box_bound(box);
    std::cout << graded_count(t, mode) << '\n';
    return exit_ok;
}

int cmd_semigroup_gorenstein(const std::string& tree, int samples, std::uint64_t seed, int max_degree) {
    if (samples < 0) throw usage_error("--samples must be nonnegative");
    const bool ok = gorenstein_witness_check(load_tree(tree).tree, samples, seed, max_degree);
    std::cout << (ok ? "PASS" : "FAIL") << '\n';
    return ok ? exit_ok : exit_failed;
}

// ---------------------------------------------------------------- ideal

int cmd_ideal_check(const std::string& tree, int d_max) {
    const auto report = initial_ideal_hilbert_check(load_tree(tree).tree, d_max);
    std::cout << report.to_json().dump() << '\n';
    return report.pass() ? exit_ok : exit_failed;
}

int cmd_ideal_initial(const std::string& weight, const std::string& poly) {
    std::cout << to_string(initial_form(load_polynomial(poly), load_dissimilarity(weight))) << '\n';
    return exit_ok;
}

int cmd_ideal_kernel(const std::string& tree, const std::string& poly) {
    const bool in = toric_kernel_membership(load_tree(tree).tree, load_polynomial(poly));
    std::cout << (in ? "in kernel" : "not in kernel") << '\n';
    return in ? exit_ok : exit_failed;
}

int cmd_ideal_map(const std::string& tree, const std::string& poly) {
    const LabeledTree t = load_tree(tree).tree;
    for (const auto& [m, c] : load_polynomial(poly).terms())
        std::cout << to_string(m) << " -> " << to_string(monomial_map(t, m), t) << '\n';
    return exit_ok;
}

// ---------------------------------------------------------------- paper-example

int cmd_paper_example(bool emit, const std::string& golden_path) {
    const std::string report = worked_example_report();
    if (emit) {
        std::cout << report;
        return exit_ok;
    }
    std::string golden = embedded_paper_example_golden;
    std::string golden_name = "golden (embedded)";
    if (!golden_path.empty()) {
        std::ifstream in(golden_path, std::ios::binary);
        if (!in) throw usage_error("cannot read " + golden_path);
        std::ostringstream s;
        s << in.rdbuf();
        golden = s.str();
        golden_name = golden_path;
    }
    if (report == golden) {
        std::cout << report << "golden: identical\n";
        return exit_ok;
    }
    std::cout << unified_diff(golden, report, golden_name, "computed");
    std::cout << "golden: MISMATCH\n";
    return exit_failed;
}

int run(int argc, char** argv) {
    CLI::App app{"Tree-indexed tropical and Newton-Okounkov data of Gr(2,n)"};
    app.require_subcommand(1);
    int result = exit_ok;

    // trees
    auto* trees = app.add_subcommand("trees", "labeled trees")->require_subcommand(1);
    {
        auto* c = trees->add_subcommand("enumerate", "all trivalent trees on n leaves");
        static int n = 0;
        static bool count = false;
        static std::string format = "newick";
        c->add_option("--n", n, "leaf count")->required();
        c->add_flag("--count", count, "print only the count");
        c->add_option("--format", format)->check(CLI::IsMember({"newick", "json"}));
        c->callback([&] { result = cmd_trees_enumerate(n, count, format); });
    }
    {
        auto* c = trees->add_subcommand("contract", "contract an internal edge");
        static std::string tree, edge, format = "newick";
        c->add_option("--tree", tree, "tree (JSON or Newick; file, literal or -)")->required();
        c->add_option("--edge", edge, "edge id, e.g. e1.2")->required();
        c->add_option("--format", format)->check(CLI::IsMember({"newick", "json"}));
        c->callback([&] { result = cmd_trees_contract(tree, edge, format); });
    }
    {
        auto* c = trees->add_subcommand("path", "edges on the path between two leaves");
        static std::string tree;
        static int i = 0, j = 0;
        c->add_option("--tree", tree)->required();
        c->add_option("--i", i)->required();
        c->add_option("--j", j)->required();
        c->callback([&] { result = cmd_trees_path(tree, i, j); });
    }
    {
        auto* c = trees->add_subcommand("equal", "compare two labeled trees");
        static std::string a, b;
        c->add_option("a", a)->required();
        c->add_option("b", b)->required();
        c->callback([&] { result = cmd_trees_equal(a, b); });
    }

    // trop
    auto* trop = app.add_subcommand("trop", "dissimilarity vectors and the four-point condition")->require_subcommand(1);
    {
        auto* c = trop->add_subcommand("dissim", "dissimilarity vector of a metric tree");
        static std::string input, format = "tsv";
        c->add_option("--input,input", input, "weighting JSON or Newick with lengths")->required();
        c->add_option("--format", format)->check(CLI::IsMember({"tsv", "json", "list"}));
        c->callback([&] { result = cmd_trop_dissim(input, format); });
    }
    {
        auto* c = trop->add_subcommand("check", "four-point condition with witnesses");
        static std::string input, format = "text";
        c->add_option("--input,input", input, "dissimilarity vector (TSV, JSON or list)")->required();
        c->add_option("--format", format)->check(CLI::IsMember({"text", "json"}));
        c->callback([&] { result = cmd_trop_check(input, format); });
    }
    {
        auto* c = trop->add_subcommand("reconstruct", "tree and weights from a tropical point");
        static std::string input, format = "json";
        c->add_option("--input,input", input)->required();
        c->add_option("--format", format)->check(CLI::IsMember({"json", "newick"}));
        c->callback([&] { result = cmd_trop_reconstruct(input, format); });
    }

    // val
    auto* val = app.add_subcommand("val", "valuations")->require_subcommand(1);
    {
        auto* c = val->add_subcommand("matrix", "valuation matrix as TSV");
        static std::string tree, order;
        c->add_option("--tree", tree)->required();
        c->add_option("--order", order, "comma-separated edge ids (default: canonical)");
        c->callback([&] { result = cmd_val_matrix(tree, order); });
    }
    {
        auto* c = val->add_subcommand("rank", "maximal-rank valuation of a polynomial");
        static std::string tree, order, poly;
        c->add_option("--tree", tree)->required();
        c->add_option("--order", order);
        c->add_option("--poly", poly)->required();
        c->callback([&] { result = cmd_val_rank(tree, order, poly); });
    }
    {
        auto* c = val->add_subcommand("weight", "weight valuation of a polynomial");
        static std::string input, poly;
        c->add_option("--input", input, "weighting JSON or Newick with lengths")->required();
        c->add_option("--poly", poly)->required();
        c->callback([&] { result = cmd_val_weight(input, poly); });
    }
    {
        auto* c = val->add_subcommand("quasi", "weight quasi-valuation at a tropical point");
        static std::string input, poly;
        c->add_option("--input", input, "dissimilarity vector")->required();
        c->add_option("--poly", poly)->required();
        c->callback([&] { result = cmd_val_quasi(input, poly); });
    }
    {
        auto* c = val->add_subcommand("straighten", "rewrite into non-crossing monomials");
        static std::string poly, tree;
        c->add_option("--poly", poly)->required();
        c->add_option("--tree", tree, "use this tree's planar leaf order");
        c->callback([&] { result = cmd_val_straighten(poly, tree); });
    }

    // semigroup
    auto* sg = app.add_subcommand("semigroup", "the semigroup S_sigma")->require_subcommand(1);
    {
        auto* c = sg->add_subcommand("member", "membership with the violating vertex");
        static std::string input;
        c->add_option("--input,input", input, "sigma-weight JSON")->required();
        c->callback([&] { result = cmd_semigroup_member(input); });
    }
    {
        auto* c = sg->add_subcommand("decompose", "sum of path indicators");
        static std::string input;
        c->add_option("--input,input", input, "sigma-weight JSON")->required();
        c->callback([&] { result = cmd_semigroup_decompose(input); });
    }
    {
        auto* c = sg->add_subcommand("dim", "dimension of the invariant space");
        static std::string input;
        c->add_option("--input,input", input, "sigma-weight JSON")->required();
        c->callback([&] { result = cmd_semigroup_dim(input); });
    }
    {
        auto* c = sg->add_subcommand("count", "graded count by Plucker degree or box bound");
        static std::string tree;
        static int degree = -1, box = -1;
        c->add_option("--tree", tree)->required();
        c->add_option("--degree", degree);
        c->add_option("--box", box);
        c->callback([&] { result = cmd_semigroup_count(tree, degree, box); });
    }
    {
        auto* c = sg->add_subcommand("gorenstein", "sampled check of the degree-3 witness");
        static std::string tree;
        static int samples = 100, max_degree = 8;
        static std::uint64_t seed = 0x5eed;
        c->add_option("--tree", tree)->required();
        c->add_option("--samples", samples);
        c->add_option("--seed", seed);
        c->add_option("--max-degree", max_degree)->check(CLI::Range(3, 64));
        c->callback([&] { result = cmd_semigroup_gorenstein(tree, samples, seed, max_degree); });
    }

    // ideal
    auto* ideal = app.add_subcommand("ideal", "initial and toric ideals")->require_subcommand(1);
    {
        auto* c = ideal->add_subcommand("check", "graded dimensions of the initial ideal");
        static std::string tree;
        static int d_max = 3;
        c->add_option("--tree", tree)->required();
        c->add_option("--dmax", d_max)->check(CLI::PositiveNumber);
        c->callback([&] { result = cmd_ideal_check(tree, d_max); });
    }
    {
        auto* c = ideal->add_subcommand("initial", "initial form under a weight vector");
        static std::string weight, poly;
        c->add_option("--weight", weight, "dissimilarity vector")->required();
        c->add_option("--poly", poly)->required();
        c->callback([&] { result = cmd_ideal_initial(weight, poly); });
    }
    {
        auto* c = ideal->add_subcommand("kernel", "membership in the kernel of the monomial map");
        static std::string tree, poly;
        c->add_option("--tree", tree)->required();
        c->add_option("--poly", poly)->required();
        c->callback([&] { result = cmd_ideal_kernel(tree, poly); });
    }
    {
        auto* c = ideal->add_subcommand("map", "images of the monomials under the monomial map");
        static std::string tree, poly;
        c->add_option("--tree", tree)->required();
        c->add_option("--poly", poly)->required();
        c->callback([&] { result = cmd_ideal_map(tree, poly); });
    }

    // paper-example
    {
        auto* c = app.add_subcommand("paper-example", "the four-leaf example, diffed against the golden report");
        static bool emit = false;
        static std::string golden;
        c->add_flag("--emit", emit, "print the report without comparing");
        c->add_option("--golden", golden, "compare against this file instead of the embedded copy");
        c->callback([&] { result = cmd_paper_example(emit, golden); });
    }

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        std::cout << app.help();
        return exit_ok;
    } catch (const CLI::CallForAllHelp& e) {
        std::cout << app.help("", CLI::AppFormatMode::All);
        return exit_ok;
    } catch (const CLI::ParseError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return exit_usage;
    }
    return result;
}

}  // namespace

int main(int argc, char** argv) {
    try {
        return run(argc, argv);
    } catch (const not_tropical_error& e) {
        std::cerr << "error: " << e.what() << '\n';
        return exit_failed;
    } catch (const not_in_semigroup_error& e) {
        std::cerr << "error: " << e.what() << '\n';
        return exit_failed;
    } catch (const nlohmann::json::exception& e) {
        std::cerr << "error: malformed JSON: " << e.what() << '\n';
        return exit_usage;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << '\n';
        return exit_usage;
    } catch (const std::domain_error& e) {
        std::cerr << "error: " << e.what() << '\n';
        return exit_usage;
    } catch (const std::length_error& e) {
        std::cerr << "error: " << e.what() << '\n';
        return exit_usage;
    } catch (const std::out_of_range& e) {
        std::cerr << "error: " << e.what() << '\n';
        return exit_usage;
    } catch (const std::exception& e) {
        std::cerr << "internal error: " << e.what() << '\n';
        return exit_failed;
    } catch (...) {
        std::cerr << "internal error\n";
        return exit_failed;
    }
}
