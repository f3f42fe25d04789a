#include "lambda_lab/labeling.hpp"

#include <algorithm>
#include <cstdlib>
#include <sstream>

#include "lambda_lab/errors.hpp"

namespace lambda_lab {

namespace {

std::string join_ids(const std::vector<std::size_t>& ids) {
    std::string s;
    for (std::size_t t = 0; t < ids.size(); ++t) {
        if (t) s += ", ";
        s += std::to_string(ids[t]);
    }
    return s;
}

}  // namespace

MissingLabels::MissingLabels(std::vector<std::size_t> vertices)
    : Error("unlabeled vertices: " + join_ids(vertices)), vertices_(std::move(vertices)) {}

ResourceLimit::ResourceLimit(int lower, std::optional<int> upper, std::uint64_t nodes)
    : Error("search limit reached after " + std::to_string(nodes) + " nodes; lambda >= " +
            std::to_string(lower) + (upper ? ", <= " + std::to_string(*upper) : std::string())),
      lower_(lower),
      upper_(upper),
      nodes_(nodes) {}

Infeasible::Infeasible(int span, std::uint64_t nodes)
    : Error("no labeling with span <= " + std::to_string(span) + " exists (" + std::to_string(nodes) +
            " nodes)"),
      span_(span),
      nodes_(nodes) {}

Labeling::Labeling(std::vector<int> labels) : labels_(std::move(labels)) {
    for (int l : labels_) {
        if (l < kUnlabeled) throw InvalidArgument("labels must be non-negative");
        span_ = std::max(span_, l);
    }
}

bool Labeling::is_total() const noexcept {
    return std::none_of(labels_.begin(), labels_.end(), [](int l) { return l == kUnlabeled; });
}

std::vector<std::size_t> Labeling::unlabeled(std::size_t vertex_count) const {
    std::vector<std::size_t> out;
    for (std::size_t v = 0; v < vertex_count; ++v)
        if (v >= labels_.size() || labels_[v] == kUnlabeled) out.push_back(v);
    return out;
}

std::vector<Violation> verify(const Graph& g, const Labeling& lab, int h, int k) {
    if (h < 0 || k < 0) throw InvalidArgument("gaps must be non-negative");
    if (lab.size() > g.vertex_count())
        throw InvalidArgument("labeling has more entries than the graph has vertices");
    if (auto missing = lab.unlabeled(g.vertex_count()); !missing.empty()) throw MissingLabels(missing);

    std::vector<Violation> out;
    for (Vertex u = 0; u < g.vertex_count(); ++u) {
        std::vector<std::pair<Vertex, int>> near;
        for (Vertex w : g.neighbors(u))
            if (w > u) near.emplace_back(w, 1);
        for (Vertex w : distance_two_neighbors(g, u))
            if (w > u) near.emplace_back(w, 2);
        std::sort(near.begin(), near.end());
        for (auto [w, d] : near) {
            int need = d == 1 ? h : k;
            int gap = std::abs(lab[u] - lab[w]);
            if (gap < need) out.push_back({u, w, d, need, gap});
        }
    }
    return out;
}

std::string to_string(const Violation& v) {
    std::ostringstream os;
    os << '(' << v.u << ',' << v.v << ") d=" << v.dist << " gap=" << v.actual_gap
       << " need=" << v.required_gap;
    return os.str();
}

int lambda_path(int m) {
    if (m < 2) throw InvalidSize("lambda_path needs m >= 2");
    return m == 2 ? 1 : 2;
}

// C5 squared is K5, so five labels are forced there.
int lambda_cycle(int n) {
    if (n < 3) throw InvalidSize("lambda_cycle needs n >= 3");
    if (n % 3 == 0) return 2;
    return n == 5 ? 4 : 3;
}

int star_lower_bound(const Graph& g, int h, int k) {
    if (h < k) throw UnsupportedRegime("star bound holds only for h >= k");
    const auto delta = static_cast<int>(g.max_degree());
    if (delta == 0) return 0;
    return (delta - 1) * k + h;
}

int lambda_of_union(std::span<const int> spans) {
    if (spans.empty()) throw InvalidArgument("lambda_of_union needs at least one component");
    return *std::max_element(spans.begin(), spans.end());
}

std::string render_grid(const Graph& g, const Labeling& lab) {
    if (!g.has_coords()) throw InvalidArgument("grid rendering needs grid coordinates");
    int rows = 0, cols = 0;
    if (g.shape()) {
        rows = g.shape()->rows;
        cols = g.shape()->cols;
    } else {
        for (const auto& c : *g.coords()) {
            rows = std::max(rows, c.i + 1);
            cols = std::max(cols, c.j + 1);
        }
    }
    std::vector<std::string> cells(static_cast<std::size_t>(rows) * cols, ".");
    std::size_t width = 1;
    for (Vertex v = 0; v < g.vertex_count(); ++v) {
        auto [i, j] = g.coord(v);
        auto& cell = cells[static_cast<std::size_t>(i) * cols + j];
        cell = v < lab.size() && lab[v] != Labeling::kUnlabeled ? std::to_string(lab[v]) : "?";
        width = std::max(width, cell.size());
    }
    std::string out;
    for (int i = 0; i < rows; ++i) {
        for (int j = 0; j < cols; ++j) {
            const auto& cell = cells[static_cast<std::size_t>(i) * cols + j];
            if (j) out += ' ';
            out.append(width - cell.size(), ' ');
            out += cell;
        }
        out += '\n';
    }
    return out;
}

}  // namespace lambda_lab
