#pragma once

#include <optional>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "lambda_lab/solver.hpp"
#include "lambda_lab/store.hpp"

namespace lambda_lab {

struct TableRow {
    int m = 0;
    int n = 0;
    std::string claimed;
    std::optional<int> constructed;
    std::optional<int> exact;
    std::string status;
    std::string rule;
};

/// Discrepant cells that share one table claim.
struct DiscrepancyGroup {
    std::string rule;
    std::string claimed;
    std::vector<std::pair<int, int>> cells;
    std::set<int> exact;
};

struct TableReport {
    Family family = Family::PP;
    std::vector<TableRow> rows;
    std::vector<DiscrepancyGroup> discrepancies;
    std::size_t solver_calls = 0;
    std::size_t cache_hits = 0;

    /// Header "m,n,claimed,constructed,exact,status", LF line endings.
    std::string csv() const;
    std::string summary() const;
    /// One line per table claim with the exact values seen for it.
    std::string pretty() const;
};

/// Every (m, n) with 2 <= m <= max_m and the family's smallest n up to max_n, on
/// the whole product. Exact values come from the store when present, otherwise
/// from solve_exact; new results are written back.
TableReport run_table(Family family, int max_m, int max_n, ResultStore& store, const SearchConfig& cfg = {});

}  // namespace lambda_lab
