#include "casimir/statistics.hpp"

#include <cmath>
#include <stdexcept>

namespace casimir {

Statistics statistics_for_rank(int rank) {
  if (rank < 1) throw std::invalid_argument("rank must be >= 1");
  return (rank % 2) ? Statistics::fermionic : Statistics::bosonic;
}

Statistics statistics_for_spin(double spin) {
  if (!(spin > 0.0)) throw std::invalid_argument("spin must be positive");
  const double twice = 2.0 * spin;
  const double n = std::round(twice);
  if (std::abs(twice - n) > 1e-9)
    throw std::invalid_argument("spin must be a positive multiple of 1/2");
  return statistics_for_rank(static_cast<int>(n));
}

std::string to_string(Statistics s) {
  return s == Statistics::fermionic ? "fermionic" : "bosonic";
}

}  // namespace casimir
