#pragma once

#include "evocell/genome.hpp"

namespace evocell {

struct SimilarityCoeffs {
  double c1 = 0.5;  // excess genes
  double c2 = 0.5;  // disjoint genes
  double c3 = 1.0;  // mean parameter difference of matching genes
  // Whether matching node biases enter the mean alongside matching
  // connection weights. Flagged assumption, on by default.
  bool include_biases = true;
};

inline constexpr double kDefaultFamilyThreshold = 1.35;

// delta = c1*G_excess/N_gene + c2*G_disjoint/N_gene + c3*Wbar over node and
// connection genes aligned by marker; disabled genes count like any other.
// N_gene is the gene count of the larger genome. Symmetric and non-negative,
// zero for identical genomes.
double similarity(const Genome& a, const Genome& b,
                  const SimilarityCoeffs& coeffs = {});

}  // namespace evocell
