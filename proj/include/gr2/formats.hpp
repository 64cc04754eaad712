#pragma once

// Text formats for dissimilarity vectors, edge weightings and sigma-weights.

#include "gr2/rational.hpp"
#include "gr2/semigroup.hpp"
#include "gr2/tree_io.hpp"
#include "gr2/tropical.hpp"

#include <json.hpp>

#include <set>
#include <sstream>
#include <string>
#include <string_view>
#include <vector>

namespace gr2 {

/// Header "i\tj\td_ij", then one line per pair in lexicographic order.
inline std::string dissimilarity_to_tsv(const DissimilarityVector& d) {
    std::string out = "i\tj\td_ij\n";
    for (auto [i, j] : all_pairs(d.n()))
        out += std::to_string(i) + '\t' + std::to_string(j) + '\t' + to_string(d.at(i, j)) + '\n';
    return out;
}

/// Whitespace-separated rows "i j value"; the header row is optional and n is
/// the largest index seen. Every pair must appear exactly once.
inline DissimilarityVector dissimilarity_from_tsv(std::string_view text) {
    std::istringstream in{std::string(text)};
    std::string line;
    std::vector<std::tuple<int, int, Rational>> rows;
    int n = 0;
    while (std::getline(in, line)) {
        std::istringstream fields(line);
        std::string a, b, c, extra;
        if (!(fields >> a)) continue;
        if (!(fields >> b >> c) || (fields >> extra))
            throw std::invalid_argument("dissimilarity TSV rows need exactly three fields: '" + line + "'");
        if (a == "i" && b == "j") continue;
        int i = 0, j = 0;
        try {
            i = std::stoi(a);
            j = std::stoi(b);
        } catch (const std::exception&) {
            throw std::invalid_argument("bad leaf index in row '" + line + "'");
        }
        if (i > j) std::swap(i, j);
        if (i < 1 || i == j) throw std::invalid_argument("bad pair in row '" + line + "'");
        n = std::max(n, j);
        rows.emplace_back(i, j, parse_rational(c));
    }
    if (n < 2) throw std::invalid_argument("dissimilarity TSV has no pairs");
    DissimilarityVector d = DissimilarityVector::zero(n);
    std::set<std::pair<int, int>> seen;
    for (auto& [i, j, v] : rows) {
        if (!seen.emplace(i, j).second)
            throw std::invalid_argument("pair " + std::to_string(i) + "," + std::to_string(j) + " appears twice");
        d.at(i, j) = v;
    }
    if (seen.size() != pair_count(n))
        throw std::invalid_argument("dissimilarity TSV for n=" + std::to_string(n) + " is missing pairs");
    return d;
}

/// {"n": n, "d": {"1,2": "p/q", ...}}
inline nlohmann::json dissimilarity_to_json(const DissimilarityVector& d) {
    nlohmann::json entries = nlohmann::json::object();
    for (auto [i, j] : all_pairs(d.n())) entries[std::to_string(i) + "," + std::to_string(j)] = to_string(d.at(i, j));
    return {{"n", d.n()}, {"d", entries}};
}

namespace detail {

inline Rational rational_from_json(const nlohmann::json& v) {
    if (v.is_string()) return parse_rational(v.get<std::string>());
    if (v.is_number_integer()) return Rational(v.get<long long>());
    throw std::invalid_argument("expected a rational as a string or an integer, got " + v.dump());
}

}  // namespace detail

inline DissimilarityVector dissimilarity_from_json(const nlohmann::json& j) {
    if (!j.is_object() || !j.contains("n") || !j.contains("d"))
        throw std::invalid_argument("dissimilarity JSON needs fields \"n\" and \"d\"");
    const int n = j.at("n").get<int>();
    DissimilarityVector d = DissimilarityVector::zero(n);
    std::set<std::pair<int, int>> seen;
    for (const auto& [key, value] : j.at("d").items()) {
        const auto comma = key.find(',');
        if (comma == std::string::npos) throw std::invalid_argument("pair key must be \"i,j\": " + key);
        int a = 0, b = 0;
        try {
            a = std::stoi(key.substr(0, comma));
            b = std::stoi(key.substr(comma + 1));
        } catch (const std::exception&) {
            throw std::invalid_argument("pair key must be \"i,j\": " + key);
        }
        if (a > b) std::swap(a, b);
        if (a < 1 || b > n || a == b) throw std::invalid_argument("pair key out of range: " + key);
        if (!seen.emplace(a, b).second) throw std::invalid_argument("pair " + key + " appears twice");
        d.at(a, b) = detail::rational_from_json(value);
    }
    if (seen.size() != pair_count(n)) throw std::invalid_argument("dissimilarity JSON is missing pairs");
    return d;
}

/// "(2,3,3,3,3,2)" or "2,3,3,3,3,2": entries in lexicographic pair order; n is
/// inferred from the length.
inline DissimilarityVector dissimilarity_from_list(std::string_view text) {
    std::string s(text);
    std::erase_if(s, [](unsigned char c) { return std::isspace(c) || c == '(' || c == ')' || c == '[' || c == ']'; });
    std::vector<Rational> entries;
    std::size_t start = 0;
    while (start <= s.size()) {
        const auto comma = s.find(',', start);
        const std::string item = s.substr(start, comma == std::string::npos ? std::string::npos : comma - start);
        entries.push_back(parse_rational(item));
        if (comma == std::string::npos) break;
        start = comma + 1;
    }
    int n = 2;
    while (pair_count(n) < entries.size()) ++n;
    if (pair_count(n) != entries.size())
        throw std::invalid_argument(std::to_string(entries.size()) + " entries is not n(n-1)/2 for any n");
    return {n, std::move(entries)};
}

inline std::string dissimilarity_to_list(const DissimilarityVector& d) {
    std::string out = "(";
    for (std::size_t k = 0; k < d.entries().size(); ++k) {
        if (k) out += ',';
        out += to_string(d.entries()[k]);
    }
    return out + ")";
}

namespace detail {

/// A tree given as a JSON object or as a Newick string.
inline LabeledTree embedded_tree(const nlohmann::json& j) {
    if (j.is_string()) return tree_from_newick(j.get<std::string>()).tree;
    return tree_from_json(j);
}

}  // namespace detail

/// {"tree": <tree>, "r": {"<edge>": "p/q", ...}}
inline nlohmann::json weighting_to_json(const EdgeWeighting& r) {
    nlohmann::json w = nlohmann::json::object();
    for (std::size_t e = 0; e < r.tree().edge_count(); ++e) w[r.tree().edge_id(e).name()] = to_string(r.weight(e));
    return {{"tree", tree_to_json(r.tree())}, {"r", w}};
}

inline EdgeWeighting weighting_from_json(const nlohmann::json& j) {
    if (!j.is_object() || !j.contains("tree") || !j.contains("r"))
        throw std::invalid_argument("weighting JSON needs fields \"tree\" and \"r\"");
    LabeledTree t = detail::embedded_tree(j.at("tree"));
    std::vector<Rational> w(t.edge_count(), Rational(0));
    std::vector<bool> given(t.edge_count(), false);
    for (const auto& [key, value] : j.at("r").items()) {
        const std::size_t e = t.edge_index(EdgeId::parse(key));
        if (given[e]) throw std::invalid_argument("edge " + key + " appears twice");
        given[e] = true;
        w[e] = detail::rational_from_json(value);
    }
    for (std::size_t e = 0; e < given.size(); ++e)
        if (!given[e]) throw std::invalid_argument("weighting JSON has no value for edge " + t.edge_id(e).name());
    return {std::move(t), std::move(w)};
}

/// {"tree": <tree>, "s": {"<edge>": k, ...}}
inline nlohmann::json sigma_weight_to_json(const SigmaWeight& s) {
    nlohmann::json v = nlohmann::json::object();
    for (std::size_t e = 0; e < s.tree().edge_count(); ++e) v[s.tree().edge_id(e).name()] = s[e];
    return {{"tree", tree_to_json(s.tree())}, {"s", v}};
}

/// Missing edges default to 0.
inline SigmaWeight sigma_weight_from_json(const nlohmann::json& j) {
    if (!j.is_object() || !j.contains("tree") || !j.contains("s"))
        throw std::invalid_argument("sigma-weight JSON needs fields \"tree\" and \"s\"");
    LabeledTree t = detail::embedded_tree(j.at("tree"));
    std::vector<int> v(t.edge_count(), 0);
    for (const auto& [key, value] : j.at("s").items()) {
        if (!value.is_number_integer()) throw std::invalid_argument("sigma-weight entries must be integers");
        v[t.edge_index(EdgeId::parse(key))] = value.get<int>();
    }
    return {std::move(t), std::move(v)};
}

inline nlohmann::json pairs_to_json(const PairMultiset& pairs) {
    nlohmann::json out = nlohmann::json::array();
    for (auto [i, j] : pairs) out.push_back({i, j});
    return out;
}

}  // namespace gr2
