#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "qform/numbers.hpp"

namespace qform {

// Decorated dual graph of an embedded resolution: vertices for exceptional
// curves, arrowheads for strict-transform branches. Loops and parallel edges
// are allowed; edges are identified by declaration index.
struct RVertex {
  std::string id;
  Int genus = 0;
  std::optional<Int> euler;
  std::optional<Int> mult;
};

struct REdge {
  std::string a, b;  // reference orientation a -> b (declaration order)
};

struct RArrow {
  std::string id;
  std::string vertex;
  Int mult = 1;
};

class ResolutionGraph {
 public:
  ResolutionGraph(std::vector<RVertex> vertices, std::vector<REdge> edges,
                  std::vector<RArrow> arrows);

  const std::vector<RVertex>& vertices() const { return vertices_; }
  const std::vector<REdge>& edges() const { return edges_; }
  const std::vector<RArrow>& arrows() const { return arrows_; }

  bool has_vertex(const std::string& id) const { return vindex_.count(id) != 0; }
  const RVertex& vertex(const std::string& id) const;
  std::size_t vertex_index(const std::string& id) const;

  /// Incident edge indices (loops listed twice) in declaration order.
  const std::vector<std::size_t>& incident_edges(const std::string& id) const;
  /// Indices into arrows() of the arrows based at a vertex.
  const std::vector<std::size_t>& incident_arrows(const std::string& id) const;

  bool all_euler() const;
  bool all_mult() const;

  /// Multiplicity decorations as a map (requires all_mult()).
  std::map<std::string, Int> mult_decorations() const;

 private:
  std::vector<RVertex> vertices_;
  std::vector<REdge> edges_;
  std::vector<RArrow> arrows_;
  std::map<std::string, std::size_t> vindex_;
  std::vector<std::vector<std::size_t>> adj_;     // per vertex, incident edge indices
  std::vector<std::vector<std::size_t>> arrows_at_;
};

struct VertexClass {
  long long valency = 0;  // arrows count; loops count twice
  long long chi = 0;      // 2 - 2 g - valency
  bool is_node = false;   // chi < 0
};

std::map<std::string, VertexClass> classify(const ResolutionGraph& g);

/// Ids of the nodes (chi < 0), sorted. Empty result is legal here; operations
/// that need a node raise NoNode themselves.
std::vector<std::string> node_ids(const ResolutionGraph& g);

enum class BambooKind { interior, boundary, loop };

// Maximal chain of valency-2 genus-0 vertices between two node/arrow
// endpoints. `chain` lists the vertex ids including both endpoints (for a
// loop the first and last entry coincide); a boundary bamboo additionally
// names its terminating arrow.
struct Bamboo {
  std::string id;
  BambooKind kind;
  std::vector<std::string> chain;
  std::optional<std::string> arrow_id;
  std::vector<std::size_t> edge_indices;  // edges consumed, in walk order
};

// Chain hanging off a node that ends in a leaf and contains no node and no
// arrowhead. `chain` starts at the node.
struct DeadBranch {
  std::string node;
  std::vector<std::string> chain;
  std::vector<std::size_t> edge_indices;
};

struct GraphSkeleton {
  std::vector<Bamboo> bamboos;         // sorted by id
  std::vector<DeadBranch> dead_branches;
};

/// Partitions the edges of the graph into bamboos and dead branches.
/// Throws NoNode when no vertex has chi < 0.
GraphSkeleton skeleton(const ResolutionGraph& g);

std::vector<Bamboo> bamboos(const ResolutionGraph& g);
std::vector<DeadBranch> dead_branches(const ResolutionGraph& g, const std::string& node);

const char* to_string(BambooKind k);

}  // namespace qform
