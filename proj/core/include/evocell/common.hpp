#pragma once

#include <array>
#include <stdexcept>
#include <string>

namespace evocell {

using Vec2 = std::array<double, 2>;

// Failure classes for the genome-to-design pipeline. A design that hits one
// of these is infeasible, not a program error.
enum class PipelineFail {
  degenerate_field,   // constant intensity, min-max scaling undefined
  empty_design,       // no material points after thresholding
  meshing_failed,     // fewer than 3 points or fully degenerate input
  empty_mesh,         // all triangles discarded by the material test
  solver_failed,      // singular or non-converged cell problem
  degenerate_tensor,  // stiffness not invertible / zero diagonal compliance
};

const char* to_string(PipelineFail f);

class PipelineError : public std::runtime_error {
 public:
  PipelineError(PipelineFail code, const std::string& what)
      : std::runtime_error(what), code_(code) {}
  PipelineFail code() const { return code_; }

 private:
  PipelineFail code_;
};

class GenomeError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class ConfigError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace evocell
