#include "dynq/quantity.hpp"

#include <cmath>

namespace dynq {

Quantity pow(const Quantity& q, const Rational& e) {
  return {std::pow(q.value, e.to_double()), q.dim.pow(e)};
}

}  // namespace dynq
