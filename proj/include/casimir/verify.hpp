#pragma once

#include <vector>

#include "casimir/report.hpp"

namespace casimir {

// Deterministic verification batteries behind `casimir verify --suite ...`.
// Each returns one Check per claim, with the worst observed residual and the
// pinned threshold applied.

std::vector<Check> verify_bc();       // standing-mode quantization at both plates
std::vector<Check> verify_current();  // normal current vanishes when the BC holds
std::vector<Check> verify_maxwell();  // spin-tensor <-> electromagnetic bridge
std::vector<Check> verify_gamma();    // Dirac algebra and the epsilon-gamma5 identity
std::vector<Check> verify_rarita();   // spin-3/2 constraints and orthonormality
std::vector<Check> verify_tt();       // transverse traceless kernel and mode energy
std::vector<Check> verify_vacuum();   // forces, regulator fits, reduction step

//! All suite names accepted by the CLI.
std::vector<std::string> verify_suite_names();

//! Dispatch by name; throws std::invalid_argument for unknown suites.
std::vector<Check> run_verify_suite(const std::string& name);

}  // namespace casimir
