#include "evocell/network.hpp"

#include <algorithm>
#include <cmath>
#include <map>

namespace evocell {

namespace {
// Deep compositions of square() can overflow; clamp keeps values finite and
// deterministic without changing any reasonable design.
inline double clamp_value(double v, double lim) {
  if (std::isnan(v)) return 0.0;
  return std::clamp(v, -lim, lim);
}
constexpr double kPreLimit = 1e154;
constexpr double kPostLimit = 1e100;
}  // namespace

CompiledNetwork::CompiledNetwork(const Genome& g) {
  n_nodes_ = static_cast<int>(g.nodes.size());
  std::map<std::uint32_t, int> dense;
  for (int i = 0; i < n_nodes_; ++i) dense[g.nodes[i].marker] = i;

  int seen_inputs = 0;
  for (int i = 0; i < n_nodes_; ++i) {
    const NodeGene& n = g.nodes[i];
    if (n.kind == NodeKind::input) {
      // First input by marker is x, second is y.
      (seen_inputs++ == 0 ? input_x_ : input_y_) = i;
    } else if (n.kind == NodeKind::output) {
      output_ = i;
    }
  }
  if (seen_inputs != 2 || output_ < 0)
    throw GenomeError("network needs two inputs and one output");

  // Gather enabled incoming edges per node, in connection-marker order.
  std::vector<std::vector<Incoming>> in(n_nodes_);
  std::vector<int> indegree(n_nodes_, 0);
  for (const ConnectionGene& c : g.connections) {
    if (!c.enabled) continue;
    in[dense.at(c.target)].push_back({dense.at(c.source), c.weight});
    ++indegree[dense.at(c.target)];
  }

  steps_.resize(n_nodes_);
  for (int i = 0; i < n_nodes_; ++i) {
    steps_[i].activation = g.nodes[i].activation;
    steps_[i].bias = g.nodes[i].bias;
    steps_[i].first_in = static_cast<int>(incoming_.size());
    steps_[i].n_in = static_cast<int>(in[i].size());
    incoming_.insert(incoming_.end(), in[i].begin(), in[i].end());
  }

  // Kahn in marker order; failing to visit everything means a cycle.
  std::vector<int> ready;
  for (int i = 0; i < n_nodes_; ++i)
    if (indegree[i] == 0) ready.push_back(i);
  order_.reserve(n_nodes_);
  for (std::size_t head = 0; head < ready.size(); ++head) {
    int u = ready[head];
    order_.push_back(u);
    for (const ConnectionGene& c : g.connections) {
      if (!c.enabled) continue;
      if (dense.at(c.source) != u) continue;
      int v = dense.at(c.target);
      if (--indegree[v] == 0) ready.push_back(v);
    }
  }
  if (static_cast<int>(order_.size()) != n_nodes_)
    throw GenomeError("cycle detected in enabled-connection subgraph");
}

double CompiledNetwork::evaluate(double x, double y) const {
  std::vector<double> value(n_nodes_, 0.0);
  for (int idx : order_) {
    if (idx == input_x_) {
      value[idx] = x;
      continue;
    }
    if (idx == input_y_) {
      value[idx] = y;
      continue;
    }
    const Step& s = steps_[idx];
    double z = s.bias;
    for (int k = s.first_in; k < s.first_in + s.n_in; ++k)
      z += incoming_[k].weight * value[incoming_[k].source];
    z = clamp_value(z, kPreLimit);
    value[idx] = clamp_value(apply(s.activation, z), kPostLimit);
  }
  return value[output_];
}

double evaluate(const Genome& g, const Vec2& point) {
  return CompiledNetwork(g).evaluate(point);
}

std::vector<double> evaluate_batch(const Genome& g,
                                   std::span<const Vec2> points) {
  CompiledNetwork net(g);
  std::vector<double> out;
  out.reserve(points.size());
  for (const Vec2& p : points) out.push_back(net.evaluate(p));
  return out;
}

}  // namespace evocell
