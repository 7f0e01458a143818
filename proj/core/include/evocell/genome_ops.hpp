#pragma once

#include "evocell/genome.hpp"
#include "evocell/rng.hpp"

namespace evocell {

struct MutationRates {
  // Per-gene parametric rates.
  double weight_mutation = 0.2;   // per connection
  double weight_perturb = 0.9;    // perturb vs full reset, given mutation
  double weight_sigma = 0.5;      // gaussian perturbation
  double weight_reset_range = 3.0;  // reset uniform in [-r, r]
  double bias_mutation = 0.2;     // per non-input node, same scheme as weights
  double activation_mutation = 0.5;  // per non-input node

  // Per-genome structural rates, one attempt each.
  double add_connection = 0.1;
  double add_node = 0.05;
  double remove_connection = 0.05;
  double remove_node = 0.02;

  double new_connection_weight_range = 1.0;  // fresh weights uniform [-r, r]

  std::vector<Activation> activation_pool = default_activation_pool();
};

// Fully connected input->output genome with uniform weights in [-1, 1] and a
// random output activation. Uses the reserved markers only, so it never needs
// the registry.
Genome initial_genome(Rng& rng, const MutationRates& rates);

// NEAT-style union crossover aligned by historical marker. Matching genes take
// their fields from either parent with equal probability; a matching gene
// disabled in either parent stays disabled in the child with probability 0.75.
// Duplicate (source,target) pairs keep the older marker, and any cycle formed
// by the union is repaired by disabling, among cycle edges, the one with the
// largest source marker until the enabled subgraph is acyclic.
Genome crossover(const Genome& a, const Genome& b, Rng& rng);

// Applies parametric then structural mutations per the configured rates.
// Structural mutations that cannot apply (no enabled connection to split, no
// legal new pair, no hidden node to remove) are skipped silently.
Genome mutate(const Genome& g, InnovationRegistry& registry,
              const MutationRates& rates, Rng& rng);

}  // namespace evocell
