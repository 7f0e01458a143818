#include "evocell/genome_ops.hpp"

#include <algorithm>
#include <map>
#include <set>

namespace evocell {

namespace {

void sort_genes(Genome& g) {
  std::sort(g.nodes.begin(), g.nodes.end(),
            [](const NodeGene& a, const NodeGene& b) {
              return a.marker < b.marker;
            });
  std::sort(g.connections.begin(), g.connections.end(),
            [](const ConnectionGene& a, const ConnectionGene& b) {
              return a.marker < b.marker;
            });
}

// True if `to` is reachable from `from` through enabled connections.
bool reaches(const Genome& g, std::uint32_t from, std::uint32_t to) {
  if (from == to) return true;
  std::set<std::uint32_t> seen{from};
  std::vector<std::uint32_t> stack{from};
  while (!stack.empty()) {
    std::uint32_t u = stack.back();
    stack.pop_back();
    for (const ConnectionGene& c : g.connections) {
      if (!c.enabled || c.source != u) continue;
      if (c.target == to) return true;
      if (seen.insert(c.target).second) stack.push_back(c.target);
    }
  }
  return false;
}

// Tarjan SCC over the enabled subgraph; returns component id per marker.
struct SccResult {
  std::map<std::uint32_t, int> component;
  std::vector<int> size;
};

SccResult strongly_connected(const Genome& g) {
  std::map<std::uint32_t, std::vector<std::uint32_t>> adj;
  for (const NodeGene& n : g.nodes) adj[n.marker];
  for (const ConnectionGene& c : g.connections)
    if (c.enabled) adj[c.source].push_back(c.target);

  SccResult res;
  std::map<std::uint32_t, int> index, low;
  std::vector<std::uint32_t> stack;
  std::set<std::uint32_t> on_stack;
  int counter = 0;

  struct Frame {
    std::uint32_t node;
    std::size_t child;
  };
  for (const auto& [start, unused] : adj) {
    (void)unused;
    if (index.count(start)) continue;
    std::vector<Frame> frames{{start, 0}};
    index[start] = low[start] = counter++;
    stack.push_back(start);
    on_stack.insert(start);
    while (!frames.empty()) {
      Frame& f = frames.back();
      const auto& out = adj[f.node];
      if (f.child < out.size()) {
        std::uint32_t w = out[f.child++];
        if (!index.count(w)) {
          index[w] = low[w] = counter++;
          stack.push_back(w);
          on_stack.insert(w);
          frames.push_back({w, 0});
        } else if (on_stack.count(w)) {
          low[f.node] = std::min(low[f.node], index[w]);
        }
      } else {
        if (low[f.node] == index[f.node]) {
          int id = static_cast<int>(res.size.size());
          int n = 0;
          while (true) {
            std::uint32_t w = stack.back();
            stack.pop_back();
            on_stack.erase(w);
            res.component[w] = id;
            ++n;
            if (w == f.node) break;
          }
          res.size.push_back(n);
        }
        std::uint32_t done = f.node;
        frames.pop_back();
        if (!frames.empty())
          low[frames.back().node] =
              std::min(low[frames.back().node], low[done]);
      }
    }
  }
  return res;
}

void repair_cycles(Genome& g) {
  while (!g.enabled_subgraph_acyclic()) {
    SccResult scc = strongly_connected(g);
    ConnectionGene* victim = nullptr;
    for (ConnectionGene& c : g.connections) {
      if (!c.enabled) continue;
      int cs = scc.component.at(c.source);
      if (cs != scc.component.at(c.target) || scc.size[cs] < 2) continue;
      if (!victim || c.source > victim->source ||
          (c.source == victim->source && c.marker > victim->marker))
        victim = &c;
    }
    if (!victim) break;  // unreachable: acyclicity check failed above
    victim->enabled = false;
  }
}

}  // namespace

Genome initial_genome(Rng& rng, const MutationRates& rates) {
  Genome g;
  g.nodes = {
      {kInputXMarker, NodeKind::input, Activation::linear, 0.0},
      {kInputYMarker, NodeKind::input, Activation::linear, 0.0},
      {kOutputMarker, NodeKind::output, rng.pick(rates.activation_pool), 0.0},
  };
  g.connections = {
      {kInitConnXMarker, kInputXMarker, kOutputMarker, rng.uniform(-1.0, 1.0),
       true},
      {kInitConnYMarker, kInputYMarker, kOutputMarker, rng.uniform(-1.0, 1.0),
       true},
  };
  return g;
}

Genome crossover(const Genome& a, const Genome& b, Rng& rng) {
  Genome child;

  auto merge_nodes = [&](const std::vector<NodeGene>& na,
                         const std::vector<NodeGene>& nb) {
    std::size_t i = 0, j = 0;
    while (i < na.size() || j < nb.size()) {
      if (j == nb.size() || (i < na.size() && na[i].marker < nb[j].marker)) {
        child.nodes.push_back(na[i++]);
      } else if (i == na.size() || nb[j].marker < na[i].marker) {
        child.nodes.push_back(nb[j++]);
      } else {
        child.nodes.push_back(rng.chance(0.5) ? na[i] : nb[j]);
        ++i, ++j;
      }
    }
  };
  merge_nodes(a.nodes, b.nodes);

  std::size_t i = 0, j = 0;
  while (i < a.connections.size() || j < b.connections.size()) {
    if (j == b.connections.size() ||
        (i < a.connections.size() &&
         a.connections[i].marker < b.connections[j].marker)) {
      child.connections.push_back(a.connections[i++]);
    } else if (i == a.connections.size() ||
               b.connections[j].marker < a.connections[i].marker) {
      child.connections.push_back(b.connections[j++]);
    } else {
      const ConnectionGene& ga = a.connections[i++];
      const ConnectionGene& gb = b.connections[j++];
      ConnectionGene c = rng.chance(0.5) ? ga : gb;
      if (!ga.enabled || !gb.enabled) c.enabled = !rng.chance(0.75);
      child.connections.push_back(c);
    }
  }

  // The same (source,target) pair can carry different markers when the
  // innovation happened in different generations; keep the older gene.
  std::map<std::pair<std::uint32_t, std::uint32_t>, std::size_t> first;
  std::vector<ConnectionGene> dedup;
  for (const ConnectionGene& c : child.connections) {
    auto key = std::make_pair(c.source, c.target);
    auto it = first.find(key);
    if (it == first.end()) {
      first.emplace(key, dedup.size());
      dedup.push_back(c);
    }
    // markers ascend, so the first occurrence is the older gene
  }
  child.connections = std::move(dedup);

  repair_cycles(child);
  return child;
}

Genome mutate(const Genome& g, InnovationRegistry& registry,
              const MutationRates& rates, Rng& rng) {
  Genome out = g;

  for (ConnectionGene& c : out.connections) {
    if (!rng.chance(rates.weight_mutation)) continue;
    if (rng.chance(rates.weight_perturb))
      c.weight += rng.normal(0.0, rates.weight_sigma);
    else
      c.weight =
          rng.uniform(-rates.weight_reset_range, rates.weight_reset_range);
  }

  for (NodeGene& n : out.nodes) {
    if (n.kind == NodeKind::input) continue;
    if (rng.chance(rates.bias_mutation)) {
      if (rng.chance(rates.weight_perturb))
        n.bias += rng.normal(0.0, rates.weight_sigma);
      else
        n.bias =
            rng.uniform(-rates.weight_reset_range, rates.weight_reset_range);
    }
    if (rng.chance(rates.activation_mutation))
      n.activation = rng.pick(rates.activation_pool);
  }

  if (rng.chance(rates.add_node)) {
    std::vector<std::size_t> enabled;
    for (std::size_t k = 0; k < out.connections.size(); ++k)
      if (out.connections[k].enabled) enabled.push_back(k);
    if (!enabled.empty()) {
      std::size_t pick = enabled[rng.integer(enabled.size())];
      ConnectionGene& split = out.connections[pick];
      split.enabled = false;
      auto m = registry.split_markers(split.marker);
      out.nodes.push_back({m.node, NodeKind::hidden,
                           rng.pick(rates.activation_pool), 0.0});
      out.connections.push_back(
          {m.in_connection, split.source, m.node, 1.0, true});
      out.connections.push_back(
          {m.out_connection, m.node, split.target, split.weight, true});
      sort_genes(out);
    }
  }

  if (rng.chance(rates.add_connection)) {
    std::vector<std::pair<std::uint32_t, std::uint32_t>> candidates;
    for (const NodeGene& src : out.nodes) {
      for (const NodeGene& tgt : out.nodes) {
        if (src.marker == tgt.marker || tgt.kind == NodeKind::input) continue;
        if (out.find_connection(src.marker, tgt.marker)) continue;
        if (reaches(out, tgt.marker, src.marker)) continue;  // would cycle
        candidates.emplace_back(src.marker, tgt.marker);
      }
    }
    if (!candidates.empty()) {
      auto [s, t] = candidates[rng.integer(candidates.size())];
      out.connections.push_back(
          {registry.connection_marker(s, t), s, t,
           rng.uniform(-rates.new_connection_weight_range,
                       rates.new_connection_weight_range),
           true});
      sort_genes(out);
    }
  }

  if (rng.chance(rates.remove_connection) && !out.connections.empty()) {
    out.connections.erase(out.connections.begin() +
                          static_cast<long>(rng.integer(out.connections.size())));
  }

  if (rng.chance(rates.remove_node)) {
    std::vector<std::size_t> hidden;
    for (std::size_t k = 0; k < out.nodes.size(); ++k)
      if (out.nodes[k].kind == NodeKind::hidden) hidden.push_back(k);
    if (!hidden.empty()) {
      std::size_t pick = hidden[rng.integer(hidden.size())];
      std::uint32_t marker = out.nodes[pick].marker;
      out.nodes.erase(out.nodes.begin() + static_cast<long>(pick));
      std::erase_if(out.connections, [marker](const ConnectionGene& c) {
        return c.source == marker || c.target == marker;
      });
    }
  }

  return out;
}

}  // namespace evocell
