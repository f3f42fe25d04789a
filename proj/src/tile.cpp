#include "lambda_lab/tile.hpp"

#include <algorithm>
#include <fstream>
#include <sstream>

namespace lambda_lab {

std::string to_string(TileSource s) {
    switch (s) {
        case TileSource::paper_figure: return "paper-figure";
        case TileSource::formula: return "formula";
        case TileSource::derived_by_solver: return "derived-by-solver";
        case TileSource::composite: return "composite";
    }
    return "composite";
}

TileSource parse_tile_source(std::string_view s) {
    if (s == "paper-figure") return TileSource::paper_figure;
    if (s == "formula") return TileSource::formula;
    if (s == "derived-by-solver") return TileSource::derived_by_solver;
    if (s == "composite") return TileSource::composite;
    throw ParseError("unknown tile source '" + std::string(s) + "'");
}

namespace {

std::string join_violations(const std::vector<Violation>& vs) {
    std::string s;
    for (std::size_t t = 0; t < vs.size() && t < 8; ++t) s += (t ? "; " : "") + to_string(vs[t]);
    if (vs.size() > 8) s += "; ...";
    return s;
}

Graph factor(int size, bool wrap) { return wrap ? cycle(size) : path(size); }

Graph full_product(const PatternTile& t) { return direct_product(factor(t.rows, t.wrap_rows), factor(t.cols, t.wrap_cols)); }

}  // namespace

SeamViolation::SeamViolation(std::vector<Violation> violations)
    : Error("seam violates L(1,1): " + join_violations(violations)), violations_(std::move(violations)) {}

void check_tile(const PatternTile& t) {
    if (t.rows < 1 || t.cols < 1) throw InvalidArgument("tile needs positive extents");
    if (t.cells.size() != static_cast<std::size_t>(t.rows) * t.cols)
        throw InvalidArgument("tile cell count does not match rows x cols");
    if ((t.wrap_rows && t.rows < 3) || (t.wrap_cols && t.cols < 3))
        throw InvalidArgument("a wrapped axis needs at least 3 positions");
    for (int c : t.cells)
        if (c != PatternTile::kHole && (c < 0 || c > t.span))
            throw InvalidArgument("tile label " + std::to_string(c) + " outside [0, " + std::to_string(t.span) + "]");
    auto g = full_product(t);
    for (auto [u, v] : g.edges())
        if ((t.cells[u] == PatternTile::kHole) != (t.cells[v] == PatternTile::kHole))
            throw InvalidArgument("tile holes do not follow a component boundary");
}

Graph tile_graph(const PatternTile& t) {
    check_tile(t);
    auto g = full_product(t);
    std::vector<Vertex> keep;
    for (Vertex v = 0; v < t.cells.size(); ++v)
        if (t.cells[v] != PatternTile::kHole) keep.push_back(v);
    return induced_subgraph(g, keep);
}

Labeling tile_labeling(const PatternTile& t) {
    std::vector<int> labels;
    for (int c : t.cells)
        if (c != PatternTile::kHole) labels.push_back(c);
    return Labeling(std::move(labels));
}

std::vector<Violation> verify_tile(const PatternTile& t) { return verify(tile_graph(t), tile_labeling(t), 1, 1); }

std::string format_tile(const PatternTile& t) {
    std::string out = std::to_string(t.rows) + ' ' + std::to_string(t.cols) + ' ' + (t.wrap_rows ? '1' : '0') +
                      ' ' + (t.wrap_cols ? '1' : '0') + ' ' + std::to_string(t.span) + ' ' + t.family + ' ' +
                      to_string(t.source) + '\n';
    for (int i = 0; i < t.rows; ++i) {
        for (int j = 0; j < t.cols; ++j) {
            if (j) out += ' ';
            int c = t.at(i, j);
            out += c == PatternTile::kHole ? std::string(".") : std::to_string(c);
        }
        out += '\n';
    }
    return out;
}

PatternTile parse_tile(std::string_view text, const std::string& name) {
    auto fail = [&](const std::string& what) -> DataIntegrityError { return DataIntegrityError(name, what); };
    std::istringstream in{std::string(text)};
    std::string line;
    if (!std::getline(in, line)) throw fail("empty tile file");
    PatternTile t;
    {
        std::istringstream hs(line);
        int wr = -1, wc = -1;
        std::string source;
        if (!(hs >> t.rows >> t.cols >> wr >> wc >> t.span >> t.family >> source))
            throw fail("malformed header '" + line + "'");
        if ((wr != 0 && wr != 1) || (wc != 0 && wc != 1)) throw fail("wrap flags must be 0 or 1");
        t.wrap_rows = wr == 1;
        t.wrap_cols = wc == 1;
        try {
            t.source = parse_tile_source(source);
        } catch (const ParseError& e) {
            throw fail(e.what());
        }
    }
    if (t.rows < 1 || t.cols < 1 || t.rows > 4096 || t.cols > 4096) throw fail("bad tile extents");
    for (int i = 0; i < t.rows; ++i) {
        if (!std::getline(in, line)) throw fail("expected " + std::to_string(t.rows) + " rows");
        std::istringstream rs(line);
        std::string tok;
        int count = 0;
        while (rs >> tok) {
            if (tok == ".") {
                t.cells.push_back(PatternTile::kHole);
            } else {
                std::size_t used = 0;
                int v = -1;
                try {
                    v = std::stoi(tok, &used);
                } catch (const std::exception&) {
                    used = 0;
                }
                if (used != tok.size() || v < 0) throw fail("bad cell '" + tok + "' in row " + std::to_string(i));
                t.cells.push_back(v);
            }
            ++count;
        }
        if (count != t.cols) throw fail("row " + std::to_string(i) + " has " + std::to_string(count) + " cells");
    }
    while (std::getline(in, line))
        if (line.find_first_not_of(" \t\r") != std::string::npos) throw fail("trailing content after rows");
    try {
        check_tile(t);
    } catch (const InvalidArgument& e) {
        throw fail(e.what());
    }
    return t;
}

PatternTile load_tile(const std::filesystem::path& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw DataIntegrityError(path.string(), "cannot open tile file");
    std::stringstream buf;
    buf << in.rdbuf();
    return parse_tile(buf.str(), path.string());
}

void save_tile(const std::filesystem::path& path, const PatternTile& t) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw InvalidArgument("cannot write " + path.string());
    out << format_tile(t);
}

PatternTile concat_tiles(const PatternTile& a, const PatternTile& b, Axis axis) {
    check_tile(a);
    check_tile(b);
    PatternTile r;
    r.span = std::max(a.span, b.span);
    r.family = a.family;
    r.source = a.source == b.source ? a.source : TileSource::composite;
    if (axis == Axis::cols) {
        if (a.rows != b.rows) throw InvalidArgument("column concatenation needs equal row counts");
        if (a.wrap_rows != b.wrap_rows || a.wrap_cols != b.wrap_cols)
            throw InvalidArgument("column concatenation needs matching wrap flags");
        r.rows = a.rows;
        r.cols = a.cols + b.cols;
        r.wrap_rows = a.wrap_rows;
        r.wrap_cols = a.wrap_cols;
        for (int i = 0; i < r.rows; ++i) {
            for (int j = 0; j < a.cols; ++j) r.cells.push_back(a.at(i, j));
            for (int j = 0; j < b.cols; ++j) r.cells.push_back(b.at(i, j));
        }
    } else {
        if (a.cols != b.cols) throw InvalidArgument("row concatenation needs equal column counts");
        if (a.wrap_rows != b.wrap_rows || a.wrap_cols != b.wrap_cols)
            throw InvalidArgument("row concatenation needs matching wrap flags");
        r.rows = a.rows + b.rows;
        r.cols = a.cols;
        r.wrap_rows = a.wrap_rows;
        r.wrap_cols = a.wrap_cols;
        r.cells = a.cells;
        r.cells.insert(r.cells.end(), b.cells.begin(), b.cells.end());
    }
    check_tile(r);
    if (auto v = verify_tile(r); !v.empty()) throw SeamViolation(std::move(v));
    return r;
}

PatternTile repeat_tile(const PatternTile& t, int times, Axis axis) {
    if (times < 1) throw InvalidArgument("repeat count must be positive");
    PatternTile r = t;
    for (int c = 1; c < times; ++c) r = concat_tiles(r, t, axis);
    return r;
}

PatternTile crop_rows(const PatternTile& t, int rows) {
    if (t.wrap_rows) throw InvalidArgument("cannot crop a wrapped row axis");
    if (rows < 1 || rows > t.rows) throw InvalidArgument("crop row count out of range");
    PatternTile r = t;
    r.rows = rows;
    r.cells.resize(static_cast<std::size_t>(rows) * t.cols);
    check_tile(r);
    return r;
}

PatternTile tile_from_labeling(const Graph& g, const Labeling& lab, bool wrap_rows, bool wrap_cols,
                               std::string family, TileSource source) {
    if (!g.has_coords() || !g.shape()) throw InvalidArgument("tile needs a product (sub)graph");
    PatternTile t;
    t.rows = g.shape()->rows;
    t.cols = g.shape()->cols;
    t.cells.assign(static_cast<std::size_t>(t.rows) * t.cols, PatternTile::kHole);
    t.wrap_rows = wrap_rows;
    t.wrap_cols = wrap_cols;
    t.family = std::move(family);
    t.source = source;
    for (Vertex v = 0; v < g.vertex_count(); ++v) {
        auto [i, j] = g.coord(v);
        t.at(i, j) = lab[v];
    }
    t.span = std::max(0, lab.span());
    check_tile(t);
    return t;
}

Labeling label_through_tile(const Graph& g, const PatternTile& t) {
    if (!g.has_coords()) throw InvalidArgument("tile labeling needs grid coordinates");
    auto wrap = [](int x, int size, bool wrapped) -> int {
        if (wrapped) return ((x % size) + size) % size;
        return x >= 0 && x < size ? x : -1;
    };
    std::vector<int> labels(g.vertex_count());
    for (Vertex v = 0; v < g.vertex_count(); ++v) {
        auto [i, j] = g.coord(v);
        int ti = wrap(i, t.rows, t.wrap_rows);
        int tj = wrap(j, t.cols, t.wrap_cols);
        if (ti < 0 || tj < 0)
            throw InvalidArgument("vertex (" + std::to_string(i) + "," + std::to_string(j) + ") lies outside the tile");
        if (t.hole(ti, tj)) {
            tj = wrap(j - 1, t.cols, t.wrap_cols);
            if (tj < 0 || t.hole(ti, tj))
                throw InvalidArgument("tile phase does not match vertex (" + std::to_string(i) + "," +
                                      std::to_string(j) + ")");
        }
        labels[v] = t.at(ti, tj);
    }
    return Labeling(std::move(labels));
}

std::size_t tile_distance(const PatternTile& a, const PatternTile& b) {
    if (a.rows != b.rows || a.cols != b.cols) throw InvalidArgument("tile shapes differ");
    std::size_t d = 0;
    for (std::size_t c = 0; c < a.cells.size(); ++c) d += a.cells[c] != b.cells[c];
    return d;
}

namespace {

/// Branch and bound over labelings of the tile graph, minimizing changed cells.
class Repairer {
  public:
    Repairer(const Graph& g, std::vector<int> target, std::vector<bool> frozen, int span)
        : target_(std::move(target)), frozen_(std::move(frozen)), span_(span) {
        const auto n = g.vertex_count();
        near_.resize(n);
        for (Vertex v = 0; v < n; ++v) {
            for (Vertex w : g.neighbors(v)) near_[v].push_back(w);
            for (Vertex w : distance_two_neighbors(g, v)) near_[v].push_back(w);
        }
        // column sweep keeps the constrained frontier narrow
        order_.resize(n);
        for (Vertex v = 0; v < n; ++v) order_[v] = v;
        std::stable_sort(order_.begin(), order_.end(), [&](Vertex a, Vertex b) {
            auto ca = g.coord(a), cb = g.coord(b);
            return std::pair(ca.j, ca.i) < std::pair(cb.j, cb.i);
        });
        current_.assign(n, -1);
    }

    bool run() {
        dfs(0, 0);
        return !best_.empty();
    }
    const std::vector<int>& best() const { return best_; }

  private:
    bool fits(Vertex v, int c) const {
        for (Vertex w : near_[v])
            if (current_[w] == c) return false;
        return true;
    }

    void dfs(std::size_t depth, std::size_t cost) {
        if (cost >= best_cost_) return;
        if (depth == order_.size()) {
            best_cost_ = cost;
            best_ = current_;
            return;
        }
        Vertex v = order_[depth];
        const int want = target_[v];
        if (want >= 0 && want <= span_ && fits(v, want)) {
            current_[v] = want;
            dfs(depth + 1, cost);
        }
        if (!frozen_.empty() && frozen_[v]) {
            current_[v] = -1;
            return;
        }
        for (int c = 0; c <= span_; ++c) {
            if (c == want || !fits(v, c)) continue;
            current_[v] = c;
            dfs(depth + 1, cost + 1);
        }
        current_[v] = -1;
    }

    std::vector<int> target_;
    std::vector<bool> frozen_;
    int span_;
    std::vector<std::vector<Vertex>> near_;
    std::vector<Vertex> order_;
    std::vector<int> current_;
    std::vector<int> best_;
    std::size_t best_cost_ = static_cast<std::size_t>(-1);
};

}  // namespace

PatternTile repair_tile(const PatternTile& t, int span, const std::vector<bool>& frozen) {
    auto g = tile_graph(t);
    std::vector<int> target;
    std::vector<bool> frozen_vertices;
    for (std::size_t c = 0; c < t.cells.size(); ++c) {
        if (t.cells[c] == PatternTile::kHole) continue;
        target.push_back(t.cells[c]);
        if (!frozen.empty()) frozen_vertices.push_back(frozen.at(c));
    }
    Repairer r(g, target, frozen_vertices, span);
    if (!r.run()) throw Infeasible(span, 0);
    auto out = tile_from_labeling(g, Labeling(r.best()), t.wrap_rows, t.wrap_cols, t.family,
                                  TileSource::derived_by_solver);
    out.span = span;
    return out;
}

}  // namespace lambda_lab
