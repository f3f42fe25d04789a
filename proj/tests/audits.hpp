#pragma once

// Distance audits of span-4 witnesses. Each counter is the number of vertices or
// pairs that break one of the structural claims made about span-4 labelings of
// grid-like products:
//  - nearest: the closest other vertex with the same label is at distance 3 or 4;
//  - centers: two degree-4 vertices at distance 4 carry different labels;
//  - row8: two vertices of one row at distance 8 carry different labels;
//  - row6: every row holds an equal-label pair at distance 6 (cycle factor,
//    n not a multiple of 5, n >= 9).

#include <string>

#include "lambda_lab/constructions.hpp"

namespace audit {

struct Counts {
    int nearest = 0;
    int centers = 0;
    int row8 = 0;
    int rows_without_6 = 0;
    int rows = 0;
};

inline Counts run(const lambda_lab::Graph& g, const lambda_lab::Labeling& lab, int cycle_length) {
    using lambda_lab::Vertex;
    Counts c;
    const auto n = g.vertex_count();
    for (Vertex v = 0; v < n; ++v) {
        auto d = lambda_lab::distances_from(g, v);
        int nearest = -1;
        for (Vertex w = 0; w < n; ++w) {
            if (w == v || d[w] < 0 || lab[w] != lab[v]) continue;
            if (nearest < 0 || d[w] < nearest) nearest = d[w];
            if (w < v) continue;
            if (d[w] == 4 && g.degree(v) == 4 && g.degree(w) == 4) ++c.centers;
            if (d[w] == 8 && g.coord(v).i == g.coord(w).i) ++c.row8;
        }
        if (nearest >= 0 && (nearest < 3 || nearest > 4)) ++c.nearest;
    }
    if (cycle_length >= 9 && cycle_length % 5 != 0) {
        for (const auto& r : lambda_lab::row_repeat_distances(g, lab, cycle_length)) {
            ++c.rows;
            c.rows_without_6 += r.distances.count(6) == 0;
        }
    }
    return c;
}

inline std::string to_string(const Counts& c) {
    return "nearest=" + std::to_string(c.nearest) + " centers=" + std::to_string(c.centers) +
           " row8=" + std::to_string(c.row8) + " rows_without_6=" + std::to_string(c.rows_without_6) + "/" +
           std::to_string(c.rows);
}

}  // namespace audit
