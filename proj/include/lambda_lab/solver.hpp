#pragma once

#include <chrono>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <utility>

#include "lambda_lab/graph.hpp"
#include "lambda_lab/labeling.hpp"

namespace lambda_lab {

/// Branching order of the backtracking search.
///  - dsatur: smallest remaining domain, then largest degree in the square
///    graph, then lowest vertex id.
///  - grid_sweep: static, column by column (j, then i); needs coordinates.
///  - input_order: static, ascending vertex id.
enum class Ordering { dsatur, grid_sweep, input_order };

enum class Method { backtrack, square_coloring, brute_force };

std::string to_string(Ordering o);
std::string to_string(Method m);
Ordering parse_ordering(const std::string& s);

struct SearchConfig {
    std::optional<std::uint64_t> node_limit;
    std::optional<std::chrono::milliseconds> time_limit;
    /// Decision mode: only spans up to this value are tried.
    std::optional<int> target_span;
    Ordering ordering = Ordering::dsatur;
    /// Workers for the parallel decision search; 1 is the deterministic reference.
    unsigned threads = 1;
};

struct LambdaResult {
    std::string instance;
    int h = 1;
    int k = 1;
    /// Exact lambda_h^k: a witness exists at this span and every smaller span was refuted.
    int span = 0;
    Labeling witness;
    Method method = Method::backtrack;
    std::uint64_t nodes_explored = 0;
    std::chrono::nanoseconds elapsed{0};
    int lower_bound = 0;
};

struct Decision {
    bool feasible = false;
    std::optional<Labeling> witness;
    std::uint64_t nodes_explored = 0;
};

/// Fixed (vertex, label) pairs the search must respect.
using Precoloring = std::span<const std::pair<Vertex, int>>;

/// Is there an L(h,k)-labeling of g with all labels in [0, span]?
/// Throws ResourceLimit when the configured limits stop the search.
Decision decide(const Graph& g, int h, int k, int span, const SearchConfig& cfg = {},
                Precoloring fixed = {});

/// Exact lambda_h^k by iterative deepening from the star bound. Throws
/// ResourceLimit carrying the established bounds, or Infeasible when
/// cfg.target_span is set and no span up to it works.
LambdaResult solve_exact(const Graph& g, int h, int k, const SearchConfig& cfg = {});

/// lambda_1^1 as chi(G^2) - 1, using the same engine on the square graph.
LambdaResult solve_via_square(const Graph& g, const SearchConfig& cfg = {});

inline constexpr std::size_t kBruteForceMaxVertices = 10;
inline constexpr int kBruteForceMaxSpan = 8;

/// Plain enumeration of every labeling, span by span. Only for tiny graphs;
/// exists to cross-check the backtracking engine.
LambdaResult brute_force(const Graph& g, int h, int k, int max_span);

/// First-fit labeling in descending square-degree order. Always valid.
Labeling greedy_labeling(const Graph& g, int h, int k);

}  // namespace lambda_lab
