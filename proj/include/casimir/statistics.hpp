#pragma once

#include <string>

namespace casimir {

// Odd-rank (half-odd-integer spin) fields are fermionic, even-rank bosonic.
enum class Statistics { fermionic, bosonic };

Statistics statistics_for_rank(int rank);

//! Maps spin s = m/2 to its statistics; rejects spin <= 0 and non-half-integers.
Statistics statistics_for_spin(double spin);

std::string to_string(Statistics s);

}  // namespace casimir
