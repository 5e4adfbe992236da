#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "uflip/rational.hpp"

namespace uflip {

/// The set M(Gamma_c) attached to a family, seen through what the involution
/// needs: the pairing, the identity object (1,1), the invertible objects and
/// their convolution action. Elements are addressed by index.
class FourierModel {
 public:
  virtual ~FourierModel() = default;

  virtual std::size_t size() const = 0;
  virtual std::size_t identity() const = 0;
  virtual Rat pairing(std::size_t x, std::size_t y) const = 0;
  virtual bool is_invertible(std::size_t x) const = 0;
  /// s * x for an invertible s; throws std::invalid_argument otherwise.
  virtual std::size_t convolve(std::size_t s, std::size_t x) const = 0;
  /// dim(rho) / |Z(g)| for x = (g, rho).
  virtual Rat dim_over_centralizer(std::size_t x) const = 0;
  virtual std::string label(std::size_t x) const = 0;
  /// Short description of Gamma_c, e.g. "(Z/2)^2" or "S4".
  virtual std::string group_name() const = 0;

  std::vector<std::size_t> invertibles() const {
    std::vector<std::size_t> out;
    for (std::size_t i = 0; i < size(); ++i)
      if (is_invertible(i)) out.push_back(i);
    return out;
  }
};

}  // namespace uflip
