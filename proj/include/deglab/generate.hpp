#pragma once

#include <cstdint>
#include <vector>

#include "deglab/term.hpp"

namespace deglab {

struct GenConfig {
  uint64_t seed = 1;
  int max_size = 12;    // term nodes
  int max_degree = 2;   // bound on type heights, hence on redex degrees
  int count = 100;
};

// Deterministic, type-directed generation of pure typable terms of base type
// under a fixed context of base-typed variables. Every result is pure,
// typable, has at most max_size nodes and max redex degree <= max_degree.
// Throws GenerationExhausted if the bounds cannot be met.
std::vector<TermPtr> generate(const GenConfig& cfg);

}  // namespace deglab
