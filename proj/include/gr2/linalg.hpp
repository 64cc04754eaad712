#pragma once

// Exact rank of integer row sets by fraction-free elimination on sparse rows.

#include "gr2/rational.hpp"

#include <map>
#include <utility>
#include <vector>

namespace gr2 {

/// Sparse integer row: (column, nonzero value) sorted by column.
using SparseRow = std::vector<std::pair<std::size_t, Integer>>;

/// Incremental row echelon form over the integers. Each inserted row is
/// reduced against the stored pivots by r <- p*r - a*pivot (p the pivot
/// entry, a the entry of r in the pivot column) and divided by the gcd of its
/// entries; a nonzero remainder becomes a new pivot row.
class RowEchelon {
public:
    /// Returns true when the row increased the rank.
    bool insert(SparseRow row) {
        normalize(row);
        while (!row.empty()) {
            auto it = pivots_.find(row.front().first);
            if (it == pivots_.end()) {
                const std::size_t col = row.front().first;
                pivots_.emplace(col, std::move(row));
                return true;
            }
            row = combine(row, it->second);
            normalize(row);
        }
        return false;
    }

    std::size_t rank() const { return pivots_.size(); }

private:
    static void normalize(SparseRow& row) {
        Integer g = 0;
        for (const auto& [c, v] : row) {
            g = boost::multiprecision::gcd(g, v);
            if (g == 1) break;
        }
        if (g > 1)
            for (auto& [c, v] : row) v /= g;
        if (!row.empty() && row.front().second < 0)
            for (auto& [c, v] : row) v = -v;
    }

    static SparseRow combine(const SparseRow& row, const SparseRow& pivot) {
        const Integer& p = pivot.front().second;
        const Integer& a = row.front().second;
        SparseRow out;
        out.reserve(row.size() + pivot.size());
        std::size_t x = 0, y = 0;
        while (x < row.size() || y < pivot.size()) {
            if (y == pivot.size() || (x < row.size() && row[x].first < pivot[y].first)) {
                out.emplace_back(row[x].first, p * row[x].second);
                ++x;
            } else if (x == row.size() || pivot[y].first < row[x].first) {
                out.emplace_back(pivot[y].first, -a * pivot[y].second);
                ++y;
            } else {
                Integer v = p * row[x].second - a * pivot[y].second;
                if (v != 0) out.emplace_back(row[x].first, std::move(v));
                ++x;
                ++y;
            }
        }
        return out;
    }

    std::map<std::size_t, SparseRow> pivots_;
};

inline std::size_t rank(const std::vector<SparseRow>& rows) {
    RowEchelon e;
    for (const auto& r : rows) e.insert(r);
    return e.rank();
}

}  // namespace gr2
