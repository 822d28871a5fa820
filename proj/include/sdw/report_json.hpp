#pragma once

#include <string>

#include "sdw/inference.hpp"

namespace sdw {

// All report serializations share one contract: keys sorted, floats printed
// with 12 significant digits, trailing newline. Byte-stable across runs.

// Includes the residual vector; the full report below omits it so that
// consistently permuted inputs serialize identically except for dw/rho and
// provenance.
std::string fit_to_json(const FitResult& fit);

std::string permutation_to_json(const PermutationReport& report);
std::string full_report_to_json(const FullReport& report);
std::string dw_enumeration_to_json(const DwEnumeration& e);

}  // namespace sdw
