#include "lambda_lab/constructions.hpp"

#include <algorithm>
#include <cstdlib>
#include <functional>
#include <stdexcept>

#include "lambda_lab/errors.hpp"

#ifndef LAMBDA_LAB_DATA_DIR
#define LAMBDA_LAB_DATA_DIR "data"
#endif

namespace lambda_lab {

namespace {

int mod(int x, int n) { return ((x % n) + n) % n; }

Labeling label_by_coords(const Graph& g, const std::function<int(int, int)>& f) {
    if (!g.has_coords()) throw InvalidArgument("scheme needs grid coordinates");
    std::vector<int> labels(g.vertex_count());
    for (Vertex v = 0; v < g.vertex_count(); ++v) {
        auto [i, j] = g.coord(v);
        labels[v] = f(i, j);
    }
    return Labeling(std::move(labels));
}

void require_valid(const Graph& g, const Labeling& lab, const std::string& scheme) {
    if (auto v = verify(g, lab, 1, 1); !v.empty())
        throw std::logic_error(scheme + " produced an invalid labeling: " + to_string(v.front()));
}

PatternTile torus_tile(int rows, int cols, const std::function<int(int, int)>& f, int span) {
    PatternTile t;
    t.rows = rows;
    t.cols = cols;
    t.wrap_rows = t.wrap_cols = true;
    t.span = span;
    t.source = TileSource::formula;
    for (int i = 0; i < rows; ++i)
        for (int j = 0; j < cols; ++j) t.cells.push_back(f(i, j));
    return t;
}

int cycle_tile_label(const PatternTile& t, int i, int j, int n) {
    const int ti = t.wrap_rows ? mod(i, t.rows) : i;
    if (ti < 0 || ti >= t.rows) throw InvalidArgument("row " + std::to_string(i) + " lies outside the tile");
    const int w = t.cols;
    if (n % w == 0) {
        int tj = mod(j, w);
        if (t.hole(ti, tj)) tj = mod(j - 1, w);
        if (!t.hole(ti, tj)) return t.at(ti, tj);
    } else if (n % 2 == 1 && (2 * n) % w == 0) {
        for (int jj : {j, j + n})
            if (!t.hole(ti, mod(jj, w))) return t.at(ti, mod(jj, w));
    } else {
        throw InvalidArgument("tile width " + std::to_string(w) + " does not fit C_" + std::to_string(n));
    }
    throw InvalidArgument("tile phase does not match vertex (" + std::to_string(i) + "," + std::to_string(j) + ")");
}

PatternTile load_shipped(const std::string& name) { return load_tile(data_dir() / "tiles" / name); }

// Blocks 0123 then 012 cover every cycle length except 5, where C5 squared is K5.
std::vector<int> cycle_sequence(int len) {
    std::vector<int> seq;
    if (len == 5) return {0, 1, 2, 3, 4};
    int fours = len % 3 == 0 ? 0 : (len % 3 == 1 ? 1 : 2);
    for (int b = 0; b < fours; ++b)
        for (int c = 0; c < 4; ++c) seq.push_back(c);
    while (static_cast<int>(seq.size()) < len)
        for (int c = 0; c < 3; ++c) seq.push_back(c);
    return seq;
}

// Every component must be a cycle; each is walked from its lowest vertex.
Labeling label_cycle_components(const Graph& g) {
    std::vector<int> labels(g.vertex_count(), Labeling::kUnlabeled);
    for (Vertex start = 0; start < g.vertex_count(); ++start) {
        if (labels[start] != Labeling::kUnlabeled) continue;
        std::vector<Vertex> order{start};
        Vertex prev = start, cur = g.neighbors(start).front();
        while (cur != start) {
            if (g.degree(cur) != 2) throw InvalidArgument("component is not a cycle");
            order.push_back(cur);
            auto nb = g.neighbors(cur);
            Vertex next = nb[0] == prev ? nb[1] : nb[0];
            prev = cur;
            cur = next;
        }
        auto seq = cycle_sequence(static_cast<int>(order.size()));
        for (std::size_t t = 0; t < order.size(); ++t) labels[order[t]] = seq[t];
    }
    return Labeling(std::move(labels));
}

bool in_cc_strip_regime(int rows, int cols) {
    return rows % 10 == 0 && cols % 2 == 0 && cols >= 12 && cols % 10 != 0;
}

}  // namespace

std::filesystem::path data_dir() {
    if (const char* env = std::getenv("LAMBDA_LAB_DATA"); env && *env) return env;
    return LAMBDA_LAB_DATA_DIR;
}

int grid_formula(int i, int j) { return mod((i + 3 * j) / 2, 5); }

Labeling label_grid_formula(int m, int n, int component) {
    if (m < 3 || n < 3) throw UnsupportedRegime("the grid formula is stated for m, n >= 3");
    auto g = build_graph({Family::PP, m, n, 1, 1, component});
    return label_by_coords(g, grid_formula);
}

Labeling label_torus_mult5(int m, int n) {
    if (m < 5 || n < 5 || m % 5 || n % 5) throw UnsupportedRegime("needs m and n multiples of 5");
    auto g = build_product({Family::CC, m, n, 1, 1, {}});
    if (m % 10 == 0 && n % 10 == 0) return label_by_coords(g, grid_formula);
    return label_by_coords(g, [](int i, int j) { return mod(i + 2 * j, 5); });
}

Labeling label_pc_mult5(int m, int n) {
    if (m < 2 || n < 5 || n % 5) throw UnsupportedRegime("needs n a multiple of 5");
    auto g = build_product({Family::PC, m, n, 1, 1, {}});
    if (n % 10 == 0) return label_by_coords(g, grid_formula);
    return label_by_coords(g, [n](int i, int j) { return grid_formula(i, (i + j) % 2 == 0 ? j : j + n); });
}

PatternTile c3_tile() {
    return torus_tile(4, 3, [](int i, int j) { return j + 3 * ((i / 2) % 2); }, 5);
}

PatternTile c4_tile() {
    return torus_tile(3, 4, [](int i, int j) { return 2 * (i % 3) + (j % 4) / 2; }, 5);
}

PatternTile c7_tile() {
    constexpr int n = 7;
    std::vector<int> row{0, 1, 2, 3, 0, 4, 5};
    int p = 0;  // row[p] == row[p + 4] is the row's repeated label
    PatternTile t;
    t.rows = 42;
    t.cols = n;
    t.wrap_rows = t.wrap_cols = true;
    t.span = 5;
    t.source = TileSource::formula;
    for (int k = 0; k < t.rows; ++k) {
        t.cells.insert(t.cells.end(), row.begin(), row.end());
        std::vector<int> next(n);
        for (int l = 0; l < n; ++l)
            if (l != p) next[mod(l + 3, n)] = row[l];
        next[mod(p + 3, n)] = row[mod(p + 3, n)];
        row = std::move(next);
        p = mod(p - 1, n);
    }
    return t;
}

Labeling label_pm_c3(int m) {
    if (m < 3) throw UnsupportedRegime("the C3 scheme is stated for m >= 3");
    auto g = build_product({Family::PC, m, 3, 1, 1, {}});
    return label_from_cycle_tile(g, 3, c3_tile());
}

Labeling label_pm_c4(int m) {
    if (m < 3) throw UnsupportedRegime("the C4 scheme is stated for m >= 3");
    auto g = build_product({Family::PC, m, 4, 1, 1, {}});
    return label_from_cycle_tile(g, 4, c4_tile());
}

Labeling label_pm_c7(int m) {
    if (m < 3) throw UnsupportedRegime("the C7 scheme is stated for m >= 3");
    auto g = build_product({Family::PC, m, 7, 1, 1, {}});
    return label_from_cycle_tile(g, 7, c7_tile());
}

std::vector<PatternTile> load_fig1_tiles() {
    return {load_shipped("fig1a_p4_c10.tile"), load_shipped("fig1b_p4_c12.tile"),
            load_shipped("fig1c_p4_c16.tile"), load_shipped("fig1d_p4_c18.tile")};
}

std::vector<PatternTile> fig1_working_tiles() {
    return {load_shipped("fig1a_p4_c10.tile"), load_shipped("fig1b_p4_c12.tile"),
            load_shipped("fig1c_p4_c16_repaired.tile"), load_shipped("fig1d_p4_c18_repaired.tile")};
}

PatternTile p4_strip_tile(int width) {
    if (width < 10 || width % 2 || width == 14)
        throw UnsupportedRegime("P4 strips exist for even widths >= 10 other than 14");
    auto tiles = fig1_working_tiles();
    const auto& a = tiles[0];
    PatternTile head;
    int rest = 0;
    switch (width % 10) {
        case 0: head = a; rest = width - 10; break;
        case 2: head = tiles[1]; rest = width - 12; break;
        case 4:
            if (width < 24) throw UnsupportedRegime("no P4 strip of width 14");
            head = concat_tiles(tiles[1], tiles[1], Axis::cols);
            rest = width - 24;
            break;
        case 6: head = tiles[2]; rest = width - 16; break;
        case 8: head = tiles[3]; rest = width - 18; break;
    }
    if (rest > 0) head = concat_tiles(head, repeat_tile(a, rest / 10, Axis::cols), Axis::cols);
    return head;
}

PatternTile derive_tile(Family family, int m, int n, int target_span, const SearchConfig& cfg) {
    InstanceKey key{family, m, n, 1, 1, 0};
    auto g = build_graph(key);
    auto d = decide(g, 1, 1, target_span, cfg);
    if (!d.feasible) throw Infeasible(target_span, d.nodes_explored);
    auto t = tile_from_labeling(g, *d.witness, family == Family::CC, family != Family::PP, to_string(family),
                                TileSource::derived_by_solver);
    return t;
}

PatternTile formula_tile() {
    auto t = torus_tile(10, 10, [](int i, int j) { return (i + j) % 2 ? PatternTile::kHole : grid_formula(i, j); }, 4);
    t.family = "CC";
    return t;
}

PatternTile derive_cc_glue_tile(int w, const SearchConfig& cfg) {
    if (w != 12 && w != 14 && w != 16 && w != 18) throw UnsupportedRegime("glue tiles exist for w in {12,14,16,18}");
    auto g = build_graph({Family::CC, 10, w + 10, 1, 1, 0});
    std::vector<std::pair<Vertex, int>> fixed;
    for (Vertex v = 0; v < g.vertex_count(); ++v) {
        auto [i, j] = g.coord(v);
        if (j >= w) fixed.emplace_back(v, grid_formula(i, j - w));
    }
    auto d = decide(g, 1, 1, 5, cfg, fixed);
    if (!d.feasible) throw Infeasible(5, d.nodes_explored);
    auto wide = tile_from_labeling(g, *d.witness, true, true, "CC", TileSource::derived_by_solver);
    PatternTile t;
    t.rows = 10;
    t.cols = w;
    t.wrap_rows = t.wrap_cols = true;
    t.span = 5;
    t.family = "CC";
    t.source = TileSource::derived_by_solver;
    for (int i = 0; i < 10; ++i)
        for (int j = 0; j < w; ++j) t.cells.push_back(wide.at(i, j));
    if (auto v = verify_tile(t); !v.empty())
        throw Error("glue tile for C10 x C" + std::to_string(w) + " is not valid on its own: " + to_string(v.front()));
    concat_tiles(t, repeat_tile(formula_tile(), 2, Axis::cols), Axis::cols);
    return t;
}

PatternTile cc_glue_tile(int w) { return load_shipped("cc_c10_c" + std::to_string(w) + ".tile"); }

PatternTile cc_strip_tile(int width) {
    if (width < 12 || width % 2 || width % 10 == 0)
        throw UnsupportedRegime("C10 strips exist for even widths >= 12 that are not multiples of 10");
    const int w = 10 + width % 10;
    auto t = cc_glue_tile(w);
    if (width > w) t = concat_tiles(t, repeat_tile(formula_tile(), (width - w) / 10, Axis::cols), Axis::cols);
    return t;
}

Labeling label_from_cycle_tile(const Graph& g, int n, const PatternTile& t) {
    check_tile(t);
    return label_by_coords(g, [&](int i, int j) { return cycle_tile_label(t, i, j, n); });
}

std::string to_string(const Expectation& e) {
    switch (e.kind) {
        case Expectation::Kind::value: return std::to_string(e.claims.front());
        case Expectation::Kind::unresolved: return "unresolved";
        case Expectation::Kind::conflicting: break;
    }
    std::string s;
    for (std::size_t t = 0; t < e.claims.size(); ++t) s += (t ? "|" : "") + std::to_string(e.claims[t]);
    return s;
}

Expectation expected_lambda(const InstanceKey& key) {
    using K = Expectation::Kind;
    auto value = [](int v, std::string rule) { return Expectation{K::value, {v}, std::move(rule)}; };
    auto unresolved = [](std::string rule) { return Expectation{K::unresolved, {}, std::move(rule)}; };
    validate(key);
    if (key.h != 1 || key.k != 1) return unresolved("no closed form for (h,k) != (1,1)");
    const int m = key.m, n = key.n;
    switch (key.family) {
        case Family::PP:
            if (m == 2 && n == 2) return value(1, "PP: m = n = 2");
            if (m == 2 || n == 2) return value(2, "PP: one factor P2, the other longer");
            if (m == 3 && n == 3 && key.component == 1)
                return unresolved("PP: odd component of P3 x P3 is a 4-cycle, not covered by the table");
            return value(4, "PP: m, n >= 3");
        case Family::PC:
            if (m == 2) return value(n % 3 == 0 ? 2 : 3, n % 3 == 0 ? "PC: m = 2, n = 0 mod 3" : "PC: m = 2, n != 0 mod 3");
            if (n == 14)
                return Expectation{K::conflicting, {4, 5},
                                   "PC: n = 14, one result states 4, the table and a corollary state 5"};
            if (n == 3 || n == 4 || n == 6 || n == 7 || n == 8) return value(5, "PC: m >= 3, n in {3,4,6,7,8,14}");
            if (n % 5 == 0) return value(4, "PC: m >= 3, n = 0 mod 5");
            if (m <= 4) return value(4, "PC: m in {3,4}, n >= 9, n != 14");
            return value(5, "PC: m >= 5, n >= 9, n != 0 mod 5");
        case Family::CC:
            if (m % 5 == 0 && n % 5 == 0) return value(4, "CC: m, n multiples of 5");
            if (in_cc_strip_regime(m, n) || in_cc_strip_regime(n, m))
                return value(5, "CC: C_10m' x C_k+10n', k in {12,14,16,18}");
            return unresolved("CC: not covered by any stated result");
    }
    return unresolved("unknown family");
}

SchemePreference parse_scheme_preference(const std::string& s) {
    if (s == "auto") return SchemePreference::automatic;
    if (s == "formula") return SchemePreference::formula;
    if (s == "tile") return SchemePreference::tile;
    if (s == "solver") return SchemePreference::solver;
    throw ParseError("unknown scheme '" + s + "' (auto, formula, tile, solver)");
}

namespace {

struct Scheme {
    std::string name;
    SchemeKind kind;
    std::function<Labeling(const Graph&)> run;
};

// Dispatch table. Order matters: the first applicable entry of the requested
// kind wins, and closed forms are listed before tiles.
std::vector<Scheme> schemes_for(const InstanceKey& key) {
    std::vector<Scheme> out;
    const int m = key.m, n = key.n;
    auto add = [&](std::string name, SchemeKind kind, std::function<Labeling(const Graph&)> run) {
        out.push_back({std::move(name), kind, std::move(run)});
    };
    auto tile_scheme = [&](std::string name, std::function<PatternTile()> make, int cycle_len) {
        add(std::move(name), SchemeKind::tile,
            [make, cycle_len](const Graph& g) { return label_from_cycle_tile(g, cycle_len, make()); });
    };
    const bool unit = key.h == 1 && key.k == 1;
    const bool covered = expected_lambda(key).kind != Expectation::Kind::unresolved;
    if (unit && covered) {
        switch (key.family) {
            case Family::PP:
                if (m == 2 || n == 2)
                    add("path-blocks", SchemeKind::formula, [n](const Graph& g) {
                        return label_by_coords(g, [n](int i, int j) { return (n == 2 ? i : j) % 3; });
                    });
                else
                    add("grid-formula", SchemeKind::formula, [](const Graph& g) { return label_by_coords(g, grid_formula); });
                break;
            case Family::PC:
                if (m == 2) {
                    add("cycle-blocks", SchemeKind::formula, label_cycle_components);
                    break;
                }
                if (n % 5 == 0)
                    add(n % 10 == 0 ? "grid-formula" : "grid-formula-unrolled", SchemeKind::formula, [n](const Graph& g) {
                        return label_by_coords(g, [n](int i, int j) {
                            return grid_formula(i, n % 10 == 0 || (i + j) % 2 == 0 ? j : j + n);
                        });
                    });
                if (n == 3 || n == 6) tile_scheme("c3-tile", c3_tile, n);
                if (n == 4 || n == 8) tile_scheme("c4-tile", c4_tile, n);
                if (n == 7 || n == 14) tile_scheme("c7-shift", c7_tile, n);
                if (m <= 4 && n >= 9 && n != 14)
                    tile_scheme("fig1-strip", [m, n] { return crop_rows(p4_strip_tile(n % 2 ? 2 * n : n), m); }, n);
                if (m >= 5 && n >= 9 && n % 5 != 0)
                    tile_scheme("cc-strip", [n] { return cc_strip_tile(n % 2 ? 2 * n : n); }, n);
                break;
            case Family::CC:
                if (m % 5 == 0 && n % 5 == 0) {
                    const bool tens = m % 10 == 0 && n % 10 == 0;
                    add(tens ? "grid-formula" : "mod5-diagonal", SchemeKind::formula, [tens](const Graph& g) {
                        return label_by_coords(g, [tens](int i, int j) { return tens ? grid_formula(i, j) : mod(i + 2 * j, 5); });
                    });
                }
                if (in_cc_strip_regime(m, n)) tile_scheme("cc-strip", [n] { return cc_strip_tile(n); }, n);
                if (in_cc_strip_regime(n, m))
                    add("cc-strip-transposed", SchemeKind::tile, [m](const Graph& g) {
                        auto t = cc_strip_tile(m);
                        return label_by_coords(g, [&](int i, int j) { return cycle_tile_label(t, j, i, m); });
                    });
                break;
        }
    }
    return out;
}

}  // namespace

std::vector<std::string> applicable_schemes(const InstanceKey& key) {
    std::vector<std::string> names;
    for (const auto& s : schemes_for(key)) names.push_back(s.name);
    names.push_back("solver");
    return names;
}

Construction construct(const InstanceKey& key, SchemePreference pref, const SearchConfig& solver_cfg) {
    Construction c;
    c.graph = build_graph(key);
    if (pref != SchemePreference::solver) {
        for (const auto& s : schemes_for(key)) {
            if (pref == SchemePreference::formula && s.kind != SchemeKind::formula) continue;
            if (pref == SchemePreference::tile && s.kind != SchemeKind::tile) continue;
            c.labeling = s.run(c.graph);
            c.scheme = s.name;
            c.kind = s.kind;
            require_valid(c.graph, c.labeling, s.name);
            return c;
        }
        if (pref != SchemePreference::automatic)
            throw UnsupportedRegime("no " + std::string(pref == SchemePreference::formula ? "formula" : "tile") +
                                    " scheme covers " + to_string(key));
    }
    auto r = solve_exact(c.graph, key.h, key.k, solver_cfg);
    c.labeling = std::move(r.witness);
    c.scheme = "solver";
    c.kind = SchemeKind::solver;
    c.solver_nodes = r.nodes_explored;
    return c;
}

std::vector<RowRepeats> row_repeat_distances(const Graph& g, const Labeling& lab, int cycle_length) {
    if (!g.has_coords()) throw InvalidArgument("row audit needs grid coordinates");
    int rows = 0;
    for (const auto& c : *g.coords()) rows = std::max(rows, c.i + 1);
    std::vector<RowRepeats> out;
    for (int i = 0; i < rows; ++i) {
        auto members = g.row(i);
        if (members.empty()) continue;
        RowRepeats r{i, {}};
        for (std::size_t a = 0; a < members.size(); ++a)
            for (std::size_t b = a + 1; b < members.size(); ++b) {
                if (lab[members[a]] != lab[members[b]]) continue;
                int d = std::abs(g.coord(members[a]).j - g.coord(members[b]).j);
                if (cycle_length > 0) d = std::min(d, cycle_length - d);
                r.distances.insert(d);
            }
        out.push_back(std::move(r));
    }
    return out;
}

}  // namespace lambda_lab
