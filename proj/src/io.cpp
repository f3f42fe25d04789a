#include "lambda_lab/io.hpp"

#include <fstream>
#include <sstream>

#include <json.hpp>

#include "lambda_lab/errors.hpp"

namespace lambda_lab {

std::string to_dot(const Graph& g, const std::string& name) {
    std::ostringstream os;
    os << "graph \"" << name << "\" {\n";
    auto parts = connected_components(g);
    for (std::size_t c = 0; c < parts.size(); ++c) {
        const auto& comp = parts.components[c];
        os << "  subgraph cluster_" << c << " {\n    label=\"component " << c;
        if (comp.parity) os << " (" << to_string(*comp.parity) << ")";
        os << "\";\n";
        for (Vertex v : comp.to_parent) {
            os << "    " << v;
            if (g.has_coords()) {
                auto [i, j] = g.coord(v);
                os << " [label=\"" << i << ',' << j << "\"]";
            }
            os << ";\n";
        }
        os << "  }\n";
    }
    for (auto [u, v] : g.edges()) os << "  " << u << " -- " << v << ";\n";
    os << "}\n";
    return os.str();
}

std::string to_adjlist(const Graph& g) {
    std::ostringstream os;
    os << g.vertex_count() << ' ' << g.edge_count() << '\n';
    for (auto [u, v] : g.edges()) os << u << ' ' << v << '\n';
    return os.str();
}

Graph parse_adjlist(std::string_view text, const std::string& name) {
    std::istringstream in{std::string(text)};
    long long n = -1, m = -1;
    if (!(in >> n >> m) || n < 0 || m < 0) throw ParseError(name + ": expected header \"n m\"");
    std::vector<std::pair<Vertex, Vertex>> edges;
    for (long long e = 0; e < m; ++e) {
        long long u = -1, v = -1;
        if (!(in >> u >> v)) throw ParseError(name + ": expected " + std::to_string(m) + " edges, got " + std::to_string(e));
        if (u < 0 || v < 0 || u >= n || v >= n || u == v)
            throw ParseError(name + ": bad edge " + std::to_string(u) + " " + std::to_string(v));
        edges.emplace_back(static_cast<Vertex>(u), static_cast<Vertex>(v));
    }
    std::string rest;
    if (in >> rest) throw ParseError(name + ": trailing content '" + rest + "'");
    return Graph::from_edges(static_cast<std::size_t>(n), edges);
}

std::string labeling_to_json(const std::string& graph, const Labeling& lab) {
    nlohmann::ordered_json j;
    j["graph"] = graph;
    auto& labels = j["labels"] = nlohmann::ordered_json::array();
    for (int l : lab.labels()) labels.push_back(l == Labeling::kUnlabeled ? nlohmann::ordered_json() : nlohmann::ordered_json(l));
    j["span"] = lab.span();
    return j.dump() + "\n";
}

LabelingDocument parse_labeling_json(std::string_view text, const std::string& name) {
    nlohmann::json j;
    try {
        j = nlohmann::json::parse(text);
    } catch (const nlohmann::json::parse_error& e) {
        throw ParseError(name + ": " + e.what());
    }
    if (!j.is_object() || !j.contains("labels") || !j["labels"].is_array())
        throw ParseError(name + ": expected an object with a \"labels\" array");
    LabelingDocument doc;
    if (j.contains("graph") && j["graph"].is_string()) doc.graph = j["graph"].get<std::string>();
    std::vector<int> labels;
    for (const auto& x : j["labels"]) {
        if (x.is_null())
            labels.push_back(Labeling::kUnlabeled);
        else if (x.is_number_integer() && x.get<long long>() >= 0 && x.get<long long>() < (1LL << 30))
            labels.push_back(x.get<int>());
        else
            throw ParseError(name + ": labels must be non-negative integers or null");
    }
    doc.labeling = Labeling(std::move(labels));
    return doc;
}

std::string read_file(const std::filesystem::path& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw InvalidArgument("cannot read " + path.string());
    std::stringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

void write_file_atomic(const std::filesystem::path& path, std::string_view content) {
    auto tmp = path;
    tmp += ".tmp";
    {
        std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
        if (!out) throw InvalidArgument("cannot write " + tmp.string());
        out << content;
        if (!out.flush()) throw InvalidArgument("cannot write " + tmp.string());
    }
    std::filesystem::rename(tmp, path);
}

std::uint64_t fnv1a64(std::string_view bytes) {
    std::uint64_t h = 14695981039346656037ULL;
    for (unsigned char c : bytes) {
        h ^= c;
        h *= 1099511628211ULL;
    }
    return h;
}

}  // namespace lambda_lab
