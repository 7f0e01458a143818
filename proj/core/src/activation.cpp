#include "evocell/activation.hpp"

#include <algorithm>
#include <cmath>

namespace evocell {

double apply(Activation a, double z) {
  switch (a) {
    case Activation::linear:
      return z;
    case Activation::square:
      return z * z;
    case Activation::sigmoid:
      return 1.0 / (1.0 + std::exp(-z));
    case Activation::gaussian:
      return std::exp(-z * z);
    case Activation::sine:
      return std::sin(z);
    case Activation::relu:
      return z > 0.0 ? z : 0.0;
    case Activation::tanh:
      return std::tanh(z);
  }
  return z;
}

std::string_view to_string(Activation a) {
  switch (a) {
    case Activation::linear:
      return "linear";
    case Activation::square:
      return "square";
    case Activation::sigmoid:
      return "sigmoid";
    case Activation::gaussian:
      return "gaussian";
    case Activation::sine:
      return "sine";
    case Activation::relu:
      return "relu";
    case Activation::tanh:
      return "tanh";
  }
  return "linear";
}

std::optional<Activation> activation_from_string(std::string_view name) {
  static constexpr std::array<Activation, 7> all = {
      Activation::linear, Activation::square,   Activation::sigmoid,
      Activation::gaussian, Activation::sine,   Activation::relu,
      Activation::tanh};
  for (Activation a : all)
    if (to_string(a) == name) return a;
  return std::nullopt;
}

std::vector<Activation> default_activation_pool() {
  return {Activation::square, Activation::sigmoid, Activation::gaussian,
          Activation::sine,   Activation::relu,    Activation::tanh};
}

}  // namespace evocell
