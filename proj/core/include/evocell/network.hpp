#pragma once

#include <span>
#include <vector>

#include "evocell/genome.hpp"

namespace evocell {

// Feed-forward evaluator for a genome, built once and reusable for many
// points. Construction performs the topological sort and throws GenomeError
// if the enabled subgraph has a cycle. Evaluation is const and thread-safe.
class CompiledNetwork {
 public:
  explicit CompiledNetwork(const Genome& g);

  double evaluate(double x, double y) const;
  double evaluate(const Vec2& p) const { return evaluate(p[0], p[1]); }

 private:
  struct Incoming {
    int source;  // dense node index
    double weight;
  };
  struct Step {
    Activation activation;
    double bias;
    int first_in, n_in;  // slice of incoming_
  };
  int n_nodes_ = 0;
  int input_x_ = -1, input_y_ = -1, output_ = -1;
  std::vector<int> order_;  // dense indices, topological
  std::vector<Step> steps_;  // indexed by dense node index
  std::vector<Incoming> incoming_;
};

double evaluate(const Genome& g, const Vec2& point);
std::vector<double> evaluate_batch(const Genome& g,
                                   std::span<const Vec2> points);

}  // namespace evocell
