#pragma once

#include <span>
#include <string>
#include <vector>

#include "lambda_lab/graph.hpp"

namespace lambda_lab {

/// Vertex id -> label. Unlabeled entries hold kUnlabeled; the span is always
/// recomputed from the labels.
class Labeling {
  public:
    static constexpr int kUnlabeled = -1;

    Labeling() = default;
    explicit Labeling(std::vector<int> labels);

    std::size_t size() const noexcept { return labels_.size(); }
    int operator[](Vertex v) const { return labels_.at(v); }
    const std::vector<int>& labels() const noexcept { return labels_; }
    /// Largest label, or -1 for an empty labeling.
    int span() const noexcept { return span_; }
    bool is_total() const noexcept;
    /// Ids (< vertex_count) that carry no label.
    std::vector<std::size_t> unlabeled(std::size_t vertex_count) const;

    friend bool operator==(const Labeling&, const Labeling&) = default;

  private:
    std::vector<int> labels_;
    int span_ = -1;
};

struct Violation {
    Vertex u = 0;
    Vertex v = 0;
    int dist = 1;
    int required_gap = 0;
    int actual_gap = 0;
    friend bool operator==(const Violation&, const Violation&) = default;
};

/// Every pair at distance 1 closer than h and at distance 2 closer than k,
/// ordered by (u, v) with u < v. Throws MissingLabels if the labeling is partial.
std::vector<Violation> verify(const Graph& g, const Labeling& lab, int h, int k);

/// "(u,v) d=2 gap=0 need=1"
std::string to_string(const Violation& v);

int lambda_path(int m);
int lambda_cycle(int n);
int star_lower_bound(const Graph& g, int h, int k);
int lambda_of_union(std::span<const int> spans);

/// Grid rendering of a labeling of a product (sub)graph: rows are i, columns j,
/// "." for grid positions that are not vertices of `g`.
std::string render_grid(const Graph& g, const Labeling& lab);

}  // namespace lambda_lab
