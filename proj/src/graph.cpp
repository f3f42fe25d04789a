#include "lambda_lab/graph.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <set>

#include "lambda_lab/errors.hpp"

namespace lambda_lab {

Graph::Graph(std::vector<std::vector<Vertex>> adjacency,
             std::optional<std::vector<GridCoord>> coords, std::optional<GridShape> shape)
    : adjacency_(std::move(adjacency)), coords_(std::move(coords)), shape_(shape) {
    const auto n = adjacency_.size();
    std::size_t half_edges = 0;
    for (Vertex v = 0; v < n; ++v) {
        auto& nb = adjacency_[v];
        std::sort(nb.begin(), nb.end());
        nb.erase(std::unique(nb.begin(), nb.end()), nb.end());
        for (Vertex w : nb) {
            if (w >= n) throw OutOfRange("neighbor id " + std::to_string(w) + " out of range");
            if (w == v) throw InvalidArgument("self loop at vertex " + std::to_string(v));
        }
        half_edges += nb.size();
    }
    for (Vertex v = 0; v < n; ++v)
        for (Vertex w : adjacency_[v])
            if (!std::binary_search(adjacency_[w].begin(), adjacency_[w].end(), v))
                throw InvalidArgument("asymmetric adjacency between " + std::to_string(v) +
                                      " and " + std::to_string(w));
    edge_count_ = half_edges / 2;

    if (coords_) {
        if (coords_->size() != n) throw InvalidArgument("coordinate count differs from vertex count");
        std::set<GridCoord> seen(coords_->begin(), coords_->end());
        if (seen.size() != n) throw InvalidArgument("coordinates are not injective");
    }
}

Graph Graph::from_edges(std::size_t vertex_count, std::span<const std::pair<Vertex, Vertex>> edges) {
    std::vector<std::vector<Vertex>> adj(vertex_count);
    for (auto [u, v] : edges) {
        if (u >= vertex_count || v >= vertex_count)
            throw OutOfRange("edge endpoint out of range");
        adj[u].push_back(v);
        adj[v].push_back(u);
    }
    return Graph(std::move(adj));
}

std::size_t Graph::max_degree() const noexcept {
    std::size_t d = 0;
    for (const auto& nb : adjacency_) d = std::max(d, nb.size());
    return d;
}

bool Graph::adjacent(Vertex u, Vertex v) const {
    const auto& nb = adjacency_.at(u);
    return std::binary_search(nb.begin(), nb.end(), v);
}

std::vector<std::pair<Vertex, Vertex>> Graph::edges() const {
    std::vector<std::pair<Vertex, Vertex>> out;
    out.reserve(edge_count_);
    for (Vertex u = 0; u < adjacency_.size(); ++u)
        for (Vertex v : adjacency_[u])
            if (u < v) out.emplace_back(u, v);
    return out;
}

GridCoord Graph::coord(Vertex v) const {
    if (!coords_) throw InvalidArgument("graph has no grid coordinates");
    return coords_->at(v);
}

std::optional<Vertex> Graph::find(GridCoord c) const {
    if (!coords_) return std::nullopt;
    if (shape_ && coords_->size() == static_cast<std::size_t>(shape_->rows) * shape_->cols) {
        if (c.i < 0 || c.j < 0 || c.i >= shape_->rows || c.j >= shape_->cols) return std::nullopt;
        return static_cast<Vertex>(c.i * shape_->cols + c.j);
    }
    auto it = std::lower_bound(coords_->begin(), coords_->end(), c);
    if (it != coords_->end() && *it == c) return static_cast<Vertex>(it - coords_->begin());
    // components keep coordinates sorted; fall back to a scan otherwise
    for (Vertex v = 0; v < coords_->size(); ++v)
        if ((*coords_)[v] == c) return v;
    return std::nullopt;
}

std::vector<Vertex> Graph::row(int i) const {
    std::vector<std::pair<int, Vertex>> tmp;
    if (coords_)
        for (Vertex v = 0; v < coords_->size(); ++v)
            if ((*coords_)[v].i == i) tmp.emplace_back((*coords_)[v].j, v);
    std::sort(tmp.begin(), tmp.end());
    std::vector<Vertex> out;
    for (auto& p : tmp) out.push_back(p.second);
    return out;
}

std::vector<Vertex> Graph::column(int j) const {
    std::vector<std::pair<int, Vertex>> tmp;
    if (coords_)
        for (Vertex v = 0; v < coords_->size(); ++v)
            if ((*coords_)[v].j == j) tmp.emplace_back((*coords_)[v].i, v);
    std::sort(tmp.begin(), tmp.end());
    std::vector<Vertex> out;
    for (auto& p : tmp) out.push_back(p.second);
    return out;
}

Graph path(int m) {
    if (m < 1) throw InvalidSize("path needs at least 1 vertex, got " + std::to_string(m));
    std::vector<std::vector<Vertex>> adj(m);
    for (int t = 0; t + 1 < m; ++t) {
        adj[t].push_back(t + 1);
        adj[t + 1].push_back(t);
    }
    return Graph(std::move(adj));
}

Graph cycle(int n) {
    if (n < 3) throw InvalidSize("cycle needs at least 3 vertices, got " + std::to_string(n));
    std::vector<std::vector<Vertex>> adj(n);
    for (int t = 0; t < n; ++t) {
        adj[t].push_back((t + 1) % n);
        adj[(t + 1) % n].push_back(t);
    }
    return Graph(std::move(adj));
}

namespace {

void require_nonempty(const Graph& g, const Graph& h) {
    if (g.empty() || h.empty()) throw InvalidSize("product factor has no vertices");
}

std::vector<GridCoord> product_coords(std::size_t rows, std::size_t cols) {
    std::vector<GridCoord> c;
    c.reserve(rows * cols);
    for (std::size_t i = 0; i < rows; ++i)
        for (std::size_t j = 0; j < cols; ++j) c.push_back({static_cast<int>(i), static_cast<int>(j)});
    return c;
}

}  // namespace

Graph direct_product(const Graph& g, const Graph& h) {
    require_nonempty(g, h);
    const auto rows = g.vertex_count(), cols = h.vertex_count();
    std::vector<std::vector<Vertex>> adj(rows * cols);
    for (Vertex a = 0; a < rows; ++a)
        for (Vertex b = 0; b < cols; ++b) {
            auto& nb = adj[a * cols + b];
            for (Vertex a2 : g.neighbors(a))
                for (Vertex b2 : h.neighbors(b)) nb.push_back(static_cast<Vertex>(a2 * cols + b2));
        }
    return Graph(std::move(adj), product_coords(rows, cols),
                 GridShape{static_cast<int>(rows), static_cast<int>(cols)});
}

Graph cartesian_product(const Graph& g, const Graph& h) {
    require_nonempty(g, h);
    const auto rows = g.vertex_count(), cols = h.vertex_count();
    std::vector<std::vector<Vertex>> adj(rows * cols);
    for (Vertex a = 0; a < rows; ++a)
        for (Vertex b = 0; b < cols; ++b) {
            auto& nb = adj[a * cols + b];
            for (Vertex a2 : g.neighbors(a)) nb.push_back(static_cast<Vertex>(a2 * cols + b));
            for (Vertex b2 : h.neighbors(b)) nb.push_back(static_cast<Vertex>(a * cols + b2));
        }
    return Graph(std::move(adj), product_coords(rows, cols),
                 GridShape{static_cast<int>(rows), static_cast<int>(cols)});
}

Graph induced_subgraph(const Graph& g, std::span<const Vertex> vertices, std::vector<Vertex>* to_parent) {
    std::vector<Vertex> keep(vertices.begin(), vertices.end());
    std::sort(keep.begin(), keep.end());
    keep.erase(std::unique(keep.begin(), keep.end()), keep.end());
    std::vector<std::int64_t> local(g.vertex_count(), -1);
    for (std::size_t t = 0; t < keep.size(); ++t) {
        if (keep[t] >= g.vertex_count()) throw OutOfRange("vertex id out of range");
        local[keep[t]] = static_cast<std::int64_t>(t);
    }
    std::vector<std::vector<Vertex>> adj(keep.size());
    std::optional<std::vector<GridCoord>> coords;
    if (g.has_coords()) coords.emplace();
    for (std::size_t t = 0; t < keep.size(); ++t) {
        for (Vertex w : g.neighbors(keep[t]))
            if (local[w] >= 0) adj[t].push_back(static_cast<Vertex>(local[w]));
        if (coords) coords->push_back(g.coord(keep[t]));
    }
    if (to_parent) *to_parent = keep;
    return Graph(std::move(adj), std::move(coords), g.shape());
}

std::string to_string(Parity p) {
    switch (p) {
        case Parity::even: return "even";
        case Parity::odd: return "odd";
        case Parity::mixed: return "mixed";
    }
    return "mixed";
}

ComponentDecomposition connected_components(const Graph& g) {
    ComponentDecomposition out;
    std::vector<bool> seen(g.vertex_count(), false);
    for (Vertex start = 0; start < g.vertex_count(); ++start) {
        if (seen[start]) continue;
        std::vector<Vertex> members{start};
        seen[start] = true;
        for (std::size_t head = 0; head < members.size(); ++head)
            for (Vertex w : g.neighbors(members[head]))
                if (!seen[w]) {
                    seen[w] = true;
                    members.push_back(w);
                }
        Component c;
        c.graph = induced_subgraph(g, members, &c.to_parent);
        if (g.has_coords()) {
            std::set<int> parities;
            for (Vertex v : c.to_parent) {
                auto [i, j] = g.coord(v);
                parities.insert(((i + j) % 2 + 2) % 2);
            }
            c.parity = parities.size() > 1 ? Parity::mixed
                       : *parities.begin() == 0 ? Parity::even
                                                : Parity::odd;
        }
        out.components.push_back(std::move(c));
    }
    return out;
}

std::vector<int> distances_from(const Graph& g, Vertex source) {
    if (source >= g.vertex_count()) throw OutOfRange("vertex " + std::to_string(source) + " out of range");
    std::vector<int> dist(g.vertex_count(), -1);
    std::deque<Vertex> queue{source};
    dist[source] = 0;
    while (!queue.empty()) {
        Vertex v = queue.front();
        queue.pop_front();
        for (Vertex w : g.neighbors(v))
            if (dist[w] < 0) {
                dist[w] = dist[v] + 1;
                queue.push_back(w);
            }
    }
    return dist;
}

std::optional<std::size_t> distance(const Graph& g, Vertex u, Vertex v) {
    if (v >= g.vertex_count()) throw OutOfRange("vertex " + std::to_string(v) + " out of range");
    auto d = distances_from(g, u)[v];
    if (d < 0) return std::nullopt;
    return static_cast<std::size_t>(d);
}

std::vector<Vertex> distance_two_neighbors(const Graph& g, Vertex v) {
    std::vector<Vertex> out;
    for (Vertex w : g.neighbors(v))
        for (Vertex x : g.neighbors(w))
            if (x != v && !g.adjacent(v, x)) out.push_back(x);
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

Graph square_graph(const Graph& g) {
    std::vector<std::vector<Vertex>> adj(g.vertex_count());
    for (Vertex v = 0; v < g.vertex_count(); ++v) {
        auto nb = g.neighbors(v);
        adj[v].assign(nb.begin(), nb.end());
        auto two = distance_two_neighbors(g, v);
        adj[v].insert(adj[v].end(), two.begin(), two.end());
    }
    return Graph(std::move(adj), g.coords(), g.shape());
}

}  // namespace lambda_lab
