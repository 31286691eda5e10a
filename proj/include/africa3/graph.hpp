#pragma once

#include <cstddef>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "africa3/dataset.hpp"

namespace africa3 {

enum class AdjacencyMode { Borders, Complete };

// Undirected country-level adjacency. Nodes are country ids; edges are stored
// as sorted id pairs. Borders mode is the bundled land-border table plus the
// maritime links that make island nations reachable.
class AdjacencyGraph {
  public:
    AdjacencyGraph() = default;
    AdjacencyGraph(std::set<std::string> nodes,
                   std::set<std::pair<std::string, std::string>> edges, AdjacencyMode mode);

    const std::set<std::string>& nodes() const { return nodes_; }
    const std::set<std::pair<std::string, std::string>>& edges() const { return edges_; }
    AdjacencyMode mode() const { return mode_; }

    bool has_edge(const std::string& a, const std::string& b) const;
    const std::vector<std::string>& neighbors(const std::string& id) const;
    bool connected() const;

    // Induced subgraph over `members`; when `complete`, all member pairs
    // become edges regardless of the parent graph.
    AdjacencyGraph induced(const std::vector<std::string>& members, bool complete = false) const;

  private:
    std::set<std::string> nodes_;
    std::set<std::pair<std::string, std::string>> edges_;
    AdjacencyMode mode_ = AdjacencyMode::Borders;
    std::map<std::string, std::vector<std::string>> adj_;
};

using EdgeList = std::vector<std::pair<std::string, std::string>>;

// borders.csv / maritime.csv: header a,b then one undirected edge per row.
EdgeList load_edge_list(std::istream& in);
EdgeList load_edge_list_file(const std::string& path);

AdjacencyGraph build_adjacency(const CountryDataset& ds, AdjacencyMode mode,
                               const EdgeList& borders, const EdgeList& maritime_links);

}  // namespace africa3
