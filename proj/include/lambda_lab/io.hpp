#pragma once

#include <cstdint>
#include <filesystem>
#include <string>
#include <string_view>

#include "lambda_lab/graph.hpp"
#include "lambda_lab/labeling.hpp"

namespace lambda_lab {

/// Graphviz text. Vertices are labeled "i,j" when coordinates exist; each
/// connected component becomes its own cluster.
std::string to_dot(const Graph& g, const std::string& name = "G");

/// First line "n m", then one "u v" line per edge (u < v), 0-indexed.
std::string to_adjlist(const Graph& g);
Graph parse_adjlist(std::string_view text, const std::string& name = "<graph>");

/// {"graph": ..., "labels": [...], "span": ...}
std::string labeling_to_json(const std::string& graph, const Labeling& lab);

struct LabelingDocument {
    std::string graph;
    /// null entries become Labeling::kUnlabeled.
    Labeling labeling;
};
LabelingDocument parse_labeling_json(std::string_view text, const std::string& name = "<labeling>");

std::string read_file(const std::filesystem::path& path);
/// Writes through a temporary file and a rename, so readers never see a partial file.
void write_file_atomic(const std::filesystem::path& path, std::string_view content);

std::uint64_t fnv1a64(std::string_view bytes);

}  // namespace lambda_lab
