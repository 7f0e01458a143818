#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <string_view>
#include <vector>

namespace evocell {

enum class Activation : std::uint8_t {
  linear,
  square,
  sigmoid,
  gaussian,
  sine,
  relu,
  tanh,
};

// square(z)=z^2, gaussian(z)=exp(-z^2), relu(z)=max(0,z),
// sigmoid(z)=1/(1+exp(-z)); documented so runs reproduce bit-for-bit.
double apply(Activation a, double z);

std::string_view to_string(Activation a);
std::optional<Activation> activation_from_string(std::string_view name);

// The evolvable set; inputs are always linear passthrough.
std::vector<Activation> default_activation_pool();

}  // namespace evocell
