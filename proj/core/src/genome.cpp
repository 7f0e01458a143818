#include "evocell/genome.hpp"

#include <algorithm>
#include <set>
#include <string>

namespace evocell {

std::string_view to_string(NodeKind k) {
  switch (k) {
    case NodeKind::input:
      return "input";
    case NodeKind::hidden:
      return "hidden";
    case NodeKind::output:
      return "output";
  }
  return "hidden";
}

std::optional<NodeKind> node_kind_from_string(std::string_view name) {
  if (name == "input") return NodeKind::input;
  if (name == "hidden") return NodeKind::hidden;
  if (name == "output") return NodeKind::output;
  return std::nullopt;
}

const NodeGene* Genome::find_node(std::uint32_t marker) const {
  auto it = std::lower_bound(
      nodes.begin(), nodes.end(), marker,
      [](const NodeGene& g, std::uint32_t m) { return g.marker < m; });
  if (it != nodes.end() && it->marker == marker) return &*it;
  return nullptr;
}

const ConnectionGene* Genome::find_connection(std::uint32_t src,
                                              std::uint32_t tgt) const {
  for (const ConnectionGene& c : connections)
    if (c.source == src && c.target == tgt) return &c;
  return nullptr;
}

std::uint32_t Genome::output_marker() const {
  for (const NodeGene& n : nodes)
    if (n.kind == NodeKind::output) return n.marker;
  throw GenomeError("genome has no output node");
}

bool Genome::enabled_subgraph_acyclic() const {
  // Kahn over enabled connections, node order fixed by marker.
  std::map<std::uint32_t, int> indegree;
  for (const NodeGene& n : nodes) indegree[n.marker] = 0;
  for (const ConnectionGene& c : connections)
    if (c.enabled) ++indegree[c.target];

  std::vector<std::uint32_t> ready;
  for (const auto& [marker, deg] : indegree)
    if (deg == 0) ready.push_back(marker);

  std::size_t visited = 0;
  while (!ready.empty()) {
    std::uint32_t m = ready.front();
    ready.erase(ready.begin());
    ++visited;
    for (const ConnectionGene& c : connections) {
      if (!c.enabled || c.source != m) continue;
      if (--indegree[c.target] == 0) ready.push_back(c.target);
    }
  }
  return visited == nodes.size();
}

void Genome::validate() const {
  std::set<std::uint32_t> markers;
  int inputs = 0, outputs = 0;
  for (const NodeGene& n : nodes) {
    if (!markers.insert(n.marker).second)
      throw GenomeError("duplicate node marker " + std::to_string(n.marker));
    if (n.kind == NodeKind::input) {
      ++inputs;
      if (n.activation != Activation::linear || n.bias != 0.0)
        throw GenomeError("input node must be identity with zero bias");
    } else if (n.kind == NodeKind::output) {
      ++outputs;
    }
  }
  if (inputs != 2) throw GenomeError("genome must have exactly two inputs");
  if (outputs != 1) throw GenomeError("genome must have exactly one output");
  if (!std::is_sorted(nodes.begin(), nodes.end(),
                      [](const NodeGene& a, const NodeGene& b) {
                        return a.marker < b.marker;
                      }))
    throw GenomeError("node genes not sorted by marker");

  std::set<std::pair<std::uint32_t, std::uint32_t>> pairs;
  for (const ConnectionGene& c : connections) {
    if (!markers.insert(c.marker).second)
      throw GenomeError("duplicate connection marker " +
                        std::to_string(c.marker));
    if (c.source == c.target) throw GenomeError("self-loop connection");
    const NodeGene* src = find_node(c.source);
    const NodeGene* tgt = find_node(c.target);
    if (!src || !tgt) throw GenomeError("connection references missing node");
    if (tgt->kind == NodeKind::input)
      throw GenomeError("input node has incoming connection");
    if (!pairs.insert({c.source, c.target}).second)
      throw GenomeError("duplicate (source,target) pair");
  }
  if (!std::is_sorted(connections.begin(), connections.end(),
                      [](const ConnectionGene& a, const ConnectionGene& b) {
                        return a.marker < b.marker;
                      }))
    throw GenomeError("connection genes not sorted by marker");

  if (!enabled_subgraph_acyclic())
    throw GenomeError("enabled-connection subgraph has a cycle");
}

void InnovationRegistry::begin_generation() {
  connections_.clear();
  splits_.clear();
}

std::uint32_t InnovationRegistry::connection_marker(std::uint32_t source,
                                                    std::uint32_t target) {
  auto [it, inserted] = connections_.try_emplace({source, target}, next_);
  if (inserted) ++next_;
  return it->second;
}

InnovationRegistry::SplitMarkers InnovationRegistry::split_markers(
    std::uint32_t connection_marker) {
  auto it = splits_.find(connection_marker);
  if (it != splits_.end()) return it->second;
  SplitMarkers m{next_, next_ + 1, next_ + 2};
  next_ += 3;
  splits_.emplace(connection_marker, m);
  return m;
}

}  // namespace evocell
