#pragma once

#include <filesystem>
#include <string>
#include <string_view>
#include <vector>

#include "lambda_lab/errors.hpp"
#include "lambda_lab/graph.hpp"
#include "lambda_lab/labeling.hpp"

namespace lambda_lab {

enum class TileSource { paper_figure, formula, derived_by_solver, composite };
enum class Axis { rows, cols };

std::string to_string(TileSource s);
TileSource parse_tile_source(std::string_view s);

/// A finite labeled grid fragment. Rows index the first product factor and
/// columns the second; a wrapped axis is a cycle, an unwrapped one a path.
/// Grid positions outside the represented component are holes.
struct PatternTile {
    static constexpr int kHole = -1;

    int rows = 0;
    int cols = 0;
    std::vector<int> cells;  // row-major
    bool wrap_rows = false;
    bool wrap_cols = false;
    int span = 0;
    std::string family = "PC";
    TileSource source = TileSource::paper_figure;

    int at(int i, int j) const { return cells.at(static_cast<std::size_t>(i) * cols + j); }
    int& at(int i, int j) { return cells.at(static_cast<std::size_t>(i) * cols + j); }
    bool hole(int i, int j) const { return at(i, j) == kHole; }

    friend bool operator==(const PatternTile&, const PatternTile&) = default;
};

/// The seam of a concatenation breaks the L(1,1) condition.
class SeamViolation : public Error {
  public:
    explicit SeamViolation(std::vector<Violation> violations);
    const std::vector<Violation>& violations() const noexcept { return violations_; }

  private:
    std::vector<Violation> violations_;
};

/// Checks sizes, label range, wrap extents and that the non-hole cells form a
/// union of components of the underlying product. Throws InvalidArgument.
void check_tile(const PatternTile& t);

/// Product graph of the tile (cycle factor on wrapped axes) induced on the
/// non-hole cells, vertices in row-major order.
Graph tile_graph(const PatternTile& t);
Labeling tile_labeling(const PatternTile& t);
std::vector<Violation> verify_tile(const PatternTile& t);

/// Text form: header "rows cols wrap_rows wrap_cols span family source",
/// then one line per row with space separated labels and "." for holes.
std::string format_tile(const PatternTile& t);
PatternTile parse_tile(std::string_view text, const std::string& name = "<tile>");
PatternTile load_tile(const std::filesystem::path& path);
void save_tile(const std::filesystem::path& path, const PatternTile& t);

/// Glues b after a along `axis` and re-verifies; throws SeamViolation.
PatternTile concat_tiles(const PatternTile& a, const PatternTile& b, Axis axis);
PatternTile repeat_tile(const PatternTile& t, int times, Axis axis);
/// First `rows` rows of an unwrapped-row tile (an induced subgraph, so validity is kept).
PatternTile crop_rows(const PatternTile& t, int rows);

/// Tile from a labeled product (sub)graph, holes where the grid has no vertex.
PatternTile tile_from_labeling(const Graph& g, const Labeling& lab, bool wrap_rows, bool wrap_cols,
                               std::string family, TileSource source);

/// Labels a product (sub)graph through the covering map (i, j) -> (i mod rows,
/// j mod cols) on wrapped axes. A vertex landing on a hole is shifted one column
/// back (the column-shift isomorphism between the two components of a product
/// with an even cycle). The result is verified by the caller.
Labeling label_through_tile(const Graph& g, const PatternTile& t);

/// Cells that differ between two tiles of equal shape.
std::size_t tile_distance(const PatternTile& a, const PatternTile& b);

/// Nearest valid labeling (fewest changed cells) with labels in [0, span],
/// found by branch and bound. Cells listed in `frozen` keep their value.
/// Throws Infeasible if no valid labeling exists.
PatternTile repair_tile(const PatternTile& t, int span, const std::vector<bool>& frozen = {});

}  // namespace lambda_lab
