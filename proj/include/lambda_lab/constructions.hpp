#pragma once

#include <filesystem>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "lambda_lab/instance.hpp"
#include "lambda_lab/labeling.hpp"
#include "lambda_lab/solver.hpp"
#include "lambda_lab/tile.hpp"

namespace lambda_lab {

/// Directory holding the shipped tile files: $LAMBDA_LAB_DATA if set, else the
/// source tree's data/ directory.
std::filesystem::path data_dir();

// ---- closed forms ---------------------------------------------------------

/// floor((i + 3j) / 2) mod 5. Period 10 in both i and j.
int grid_formula(int i, int j);

/// Grid formula on component `component` of P_m x P_n (m, n >= 3).
Labeling label_grid_formula(int m, int n, int component);

/// Span-4 labeling of C_m x C_n for m, n multiples of 5: the grid formula when
/// both are multiples of 10, otherwise (i + 2j) mod 5, which needs only period 5.
Labeling label_torus_mult5(int m, int n);

/// Span-4 labeling of P_m x C_n for n a multiple of 5 (m >= 2): the grid formula,
/// read on C_2n through the unrolling map when n is odd.
Labeling label_pc_mult5(int m, int n);

// ---- periodic schemes -----------------------------------------------------

/// 4 x 3 torus tile: rows 2t and 2t+1 use labels {0,1,2} or {3,4,5} alternately.
PatternTile c3_tile();
/// 3 x 4 torus tile: row i uses labels {2(i mod 3), 2(i mod 3) + 1}.
PatternTile c4_tile();
/// 42 x 7 torus tile built by the row-shift rule: row k+1 is row k moved three
/// columns right, except that the vertex displaced by the row's repeated label
/// takes the label found at the same column in row k.
PatternTile c7_tile();

Labeling label_pm_c3(int m);
Labeling label_pm_c4(int m);
Labeling label_pm_c7(int m);

// ---- figure tiles ---------------------------------------------------------

/// The four P4 x C_n tiles (n = 10, 12, 16, 18) as transcribed, unverified.
std::vector<PatternTile> load_fig1_tiles();
/// Tiles used for composition: figure tiles (a), (b) and the nearest valid
/// repairs of (c), (d).
std::vector<PatternTile> fig1_working_tiles();
/// P4 x C_width tile (width even, >= 10, != 14) glued from the working tiles.
PatternTile p4_strip_tile(int width);

// ---- solver-derived tiles -------------------------------------------------

/// Component-0 tile of the family's m x n product with span <= target_span, found
/// by the exact solver. Throws Infeasible or ResourceLimit.
PatternTile derive_tile(Family family, int m, int n, int target_span, const SearchConfig& cfg = {});

/// C10 x C_w span-5 tile (w in {12,14,16,18}) that stays valid when followed by
/// any number of grid-formula C10 x C10 blocks. Derived on C10 x C_{w+10} with
/// the formula block fixed.
PatternTile derive_cc_glue_tile(int w, const SearchConfig& cfg = {});
/// The shipped copy of derive_cc_glue_tile(w).
PatternTile cc_glue_tile(int w);
/// Component-0 grid-formula tile of C10 x C10.
PatternTile formula_tile();
/// C10 x C_width (width even, >= 12, not a multiple of 10): glue tile + formula blocks.
PatternTile cc_strip_tile(int width);

/// Labels a product (sub)graph whose second factor is C_n through a tile whose
/// column count divides n, or, for odd n, divides 2n (unrolling map).
Labeling label_from_cycle_tile(const Graph& g, int n, const PatternTile& t);

// ---- dispatch -------------------------------------------------------------

struct Expectation {
    enum class Kind { value, conflicting, unresolved };
    Kind kind = Kind::unresolved;
    /// One claim for value, every competing claim for conflicting.
    std::vector<int> claims;
    std::string rule;

    std::optional<int> value() const {
        if (kind == Kind::value) return claims.front();
        return std::nullopt;
    }
};

/// "4", "4|5" or "unresolved".
std::string to_string(const Expectation& e);

/// The summary-table value for the key, or unresolved / conflicting.
Expectation expected_lambda(const InstanceKey& key);

enum class SchemeKind { formula, tile, solver };
enum class SchemePreference { automatic, formula, tile, solver };
SchemePreference parse_scheme_preference(const std::string& s);

struct Construction {
    Graph graph;
    Labeling labeling;
    std::string scheme;
    SchemeKind kind = SchemeKind::formula;
    std::uint64_t solver_nodes = 0;
};

/// Names of the schemes that apply to the key, in dispatch order.
std::vector<std::string> applicable_schemes(const InstanceKey& key);

/// Builds build_graph(key) and labels it with the first applicable scheme of the
/// requested kind; the result is verified before it is returned. The solver
/// fallback throws ResourceLimit when `solver_cfg` limits stop it.
Construction construct(const InstanceKey& key, SchemePreference pref = SchemePreference::automatic,
                       const SearchConfig& solver_cfg = {});

// ---- audits ---------------------------------------------------------------

/// Column distances between equal labels inside each row (fixed i) of a
/// labeled product (sub)graph; cycle_length 0 means the columns form a path.
struct RowRepeats {
    int row = 0;
    std::set<int> distances;
};
std::vector<RowRepeats> row_repeat_distances(const Graph& g, const Labeling& lab, int cycle_length);

}  // namespace lambda_lab
