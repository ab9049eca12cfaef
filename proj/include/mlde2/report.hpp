#pragma once

#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

#include "mlde2/classify.hpp"

namespace mlde2 {

// A published value that disagrees with what the engine computes.
struct Erratum {
  std::string location;
  std::string printed;
  std::string computed;
};

struct Report {
  std::size_t terms = 32;
  std::vector<Candidate> candidates;
  std::vector<Erratum> errata;
};

// Runs the classification and cross-checks every published table entry,
// collecting errata where print and computation disagree.
Report build_report(std::size_t terms = 32);

// Whole-report emission; format is one of "json", "csv", "md".
std::string report_to_string(const Report& report, std::string_view format);

// One reproduced table (1..5) with its erratum annotations.
std::string table_to_string(const Report& report, int which, std::string_view format);

}  // namespace mlde2
