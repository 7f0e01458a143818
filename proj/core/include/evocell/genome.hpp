#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string_view>
#include <utility>
#include <vector>

#include "evocell/activation.hpp"
#include "evocell/common.hpp"

namespace evocell {

enum class NodeKind : std::uint8_t { input, hidden, output };

std::string_view to_string(NodeKind k);
std::optional<NodeKind> node_kind_from_string(std::string_view name);

struct NodeGene {
  std::uint32_t marker = 0;
  NodeKind kind = NodeKind::hidden;
  Activation activation = Activation::linear;
  double bias = 0.0;
};

struct ConnectionGene {
  std::uint32_t marker = 0;
  std::uint32_t source = 0;
  std::uint32_t target = 0;
  double weight = 0.0;
  bool enabled = true;
};

// Reserved markers for the shared initial topology: two inputs (x, y), one
// output, and the two input->output connections. Every genome in a run starts
// from these, so crossover alignment works from generation zero.
inline constexpr std::uint32_t kInputXMarker = 0;
inline constexpr std::uint32_t kInputYMarker = 1;
inline constexpr std::uint32_t kOutputMarker = 2;
inline constexpr std::uint32_t kInitConnXMarker = 3;
inline constexpr std::uint32_t kInitConnYMarker = 4;
inline constexpr std::uint32_t kFirstFreeMarker = 5;

struct Genome {
  std::uint64_t id = 0;
  std::vector<NodeGene> nodes;              // sorted by marker
  std::vector<ConnectionGene> connections;  // sorted by marker

  const NodeGene* find_node(std::uint32_t marker) const;
  const ConnectionGene* find_connection(std::uint32_t src,
                                        std::uint32_t tgt) const;
  std::uint32_t output_marker() const;
  std::size_t gene_count() const { return nodes.size() + connections.size(); }

  // Throws GenomeError if any structural invariant is broken: marker
  // uniqueness and ordering, two inputs / one output, identity inputs,
  // dangling or duplicate connections, self-loops, enabled-subgraph cycles.
  void validate() const;

  // True iff the enabled-connection subgraph is acyclic.
  bool enabled_subgraph_acyclic() const;
};

// Issues historical markers in chronological order of first appearance.
// The per-generation memo guarantees that the same structural innovation
// requested twice within one generation receives the same marker. Used only
// in the single-threaded reproduction phase.
class InnovationRegistry {
 public:
  explicit InnovationRegistry(std::uint32_t next = kFirstFreeMarker)
      : next_(next) {}

  void begin_generation();

  std::uint32_t connection_marker(std::uint32_t source, std::uint32_t target);

  struct SplitMarkers {
    std::uint32_t node;
    std::uint32_t in_connection;
    std::uint32_t out_connection;
  };
  SplitMarkers split_markers(std::uint32_t connection_marker);

  std::uint32_t next_marker() const { return next_; }

 private:
  std::uint32_t next_;
  std::map<std::pair<std::uint32_t, std::uint32_t>, std::uint32_t> connections_;
  std::map<std::uint32_t, SplitMarkers> splits_;
};

}  // namespace evocell
