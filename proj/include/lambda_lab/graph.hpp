#pragma once

#include <compare>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

namespace lambda_lab {

using Vertex = std::uint32_t;

/// Position (i, j) of a product vertex: i indexes the first factor, j the second.
struct GridCoord {
    int i = 0;
    int j = 0;
    friend auto operator<=>(const GridCoord&, const GridCoord&) = default;
};

/// Factor sizes of a product graph. Product vertex (i, j) has id i * cols + j.
struct GridShape {
    int rows = 0;
    int cols = 0;
    friend bool operator==(const GridShape&, const GridShape&) = default;
};

/// Immutable simple undirected graph.
///
/// Neighbor lists are sorted and duplicate free, adjacency is symmetric and
/// there are no self loops; the constructor normalizes and checks this.
/// Product graphs additionally carry per-vertex grid coordinates.
class Graph {
  public:
    Graph() = default;
    explicit Graph(std::vector<std::vector<Vertex>> adjacency,
                   std::optional<std::vector<GridCoord>> coords = std::nullopt,
                   std::optional<GridShape> shape = std::nullopt);

    static Graph from_edges(std::size_t vertex_count,
                            std::span<const std::pair<Vertex, Vertex>> edges);

    std::size_t vertex_count() const noexcept { return adjacency_.size(); }
    std::size_t edge_count() const noexcept { return edge_count_; }
    bool empty() const noexcept { return adjacency_.empty(); }

    std::span<const Vertex> neighbors(Vertex v) const { return adjacency_.at(v); }
    std::size_t degree(Vertex v) const { return adjacency_.at(v).size(); }
    std::size_t max_degree() const noexcept;
    bool adjacent(Vertex u, Vertex v) const;

    /// Edges (u, v) with u < v, in lexicographic order.
    std::vector<std::pair<Vertex, Vertex>> edges() const;

    bool has_coords() const noexcept { return coords_.has_value(); }
    const std::optional<std::vector<GridCoord>>& coords() const noexcept { return coords_; }
    GridCoord coord(Vertex v) const;
    const std::optional<GridShape>& shape() const noexcept { return shape_; }
    std::optional<Vertex> find(GridCoord c) const;

    /// Vertices of row i (fixed first coordinate), ordered by j.
    std::vector<Vertex> row(int i) const;
    /// Vertices of column j (fixed second coordinate), ordered by i.
    std::vector<Vertex> column(int j) const;

    friend bool operator==(const Graph&, const Graph&) = default;

  private:
    std::vector<std::vector<Vertex>> adjacency_;
    std::optional<std::vector<GridCoord>> coords_;
    std::optional<GridShape> shape_;
    std::size_t edge_count_ = 0;
};

Graph path(int m);
Graph cycle(int n);
Graph direct_product(const Graph& g, const Graph& h);
Graph cartesian_product(const Graph& g, const Graph& h);

/// Subgraph induced by `vertices` (any order; renumbered by ascending parent id).
/// Coordinates and shape are carried over.
Graph induced_subgraph(const Graph& g, std::span<const Vertex> vertices,
                       std::vector<Vertex>* to_parent = nullptr);

enum class Parity { even, odd, mixed };

std::string to_string(Parity p);

struct Component {
    Graph graph;
    std::vector<Vertex> to_parent;
    /// Parity of i + j shared by all members, or mixed. Absent without coordinates.
    std::optional<Parity> parity;
};

/// Connected components. Component 0 contains vertex 0; the rest follow by
/// smallest parent vertex id.
struct ComponentDecomposition {
    std::vector<Component> components;
    std::size_t size() const noexcept { return components.size(); }
};

ComponentDecomposition connected_components(const Graph& g);

/// Hop distance, or nullopt when v is unreachable from u.
std::optional<std::size_t> distance(const Graph& g, Vertex u, Vertex v);

/// BFS distances from `source`; unreachable vertices get -1.
std::vector<int> distances_from(const Graph& g, Vertex source);

/// All vertices at distance exactly 2 from v, sorted.
std::vector<Vertex> distance_two_neighbors(const Graph& g, Vertex v);

Graph square_graph(const Graph& g);

}  // namespace lambda_lab
