#ifndef ARTIFACT_GRAPH_HPP
#define ARTIFACT_GRAPH_HPP

#include <cstdint>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace artifact {

class GraphError : public std::runtime_error {
  public:
    using std::runtime_error::runtime_error;
};

// Simple undirected graph with opaque string labels and a fixed vertex order.
class Graph {
  public:
    Graph() = default;
    explicit Graph(std::vector<std::string> vertices);

    int n() const { return static_cast<int>(labels_.size()); }
    const std::vector<std::string>& labels() const { return labels_; }
    const std::string& label(int v) const { return labels_.at(v); }
    int index_of(const std::string& label) const;  // -1 if absent

    void add_edge(int u, int v);
    void add_edge(const std::string& u, const std::string& v);
    bool has_edge(int u, int v) const;
    int edge_count() const;
    int degree(int v) const;
    std::vector<std::pair<int, int>> edges() const;  // sorted (u<v) pairs
    const std::vector<std::uint64_t>& adjacency() const { return adj_; }

    bool operator==(const Graph& other) const;

  private:
    std::vector<std::string> labels_;
    std::map<std::string, int> index_;
    std::vector<std::uint64_t> adj_;  // n <= 64: one word per row
};

Graph complement(const Graph& g);

// Result of the planarity test. Exactly one of `rotation` / `witness` is set.
struct PlanarityResult {
    bool planar = false;
    // For planar graphs: clockwise neighbour order per vertex; Euler-verified.
    std::vector<std::vector<int>> rotation;
    // For non-planar graphs: a Kuratowski subdivision.
    // kind is "K5" or "K33"; branch holds 5 or 6 branch vertices; paths holds
    // the internally disjoint paths (each path as a vertex list, endpoints are
    // branch vertices).
    std::string witness_kind;
    std::vector<int> branch_vertices;
    std::vector<std::vector<int>> witness_paths;
};

PlanarityResult is_planar(const Graph& g);

// Independent verification helpers (used by tests and reports).
bool verify_rotation_system(const Graph& g, const std::vector<std::vector<int>>& rotation);
bool verify_kuratowski_witness(const Graph& g, const PlanarityResult& w);

// Vertex bijection g -> h preserving the edge relation exactly, if one exists.
std::optional<std::vector<int>> is_isomorphic(const Graph& g, const Graph& h);

// Builtins: "path_n", "cycle_n", "complete_n" (n a positive integer), "icosahedron".
Graph builtin_graph(const std::string& name);

std::string graph_to_json(const Graph& g);
Graph graph_from_json(const std::string& text);

}  // namespace artifact

#endif
