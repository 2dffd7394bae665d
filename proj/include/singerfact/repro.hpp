#pragma once

#include <string>
#include <vector>

namespace singerfact::repro {

struct CriterionResult {
  int id = 0;
  std::string name;
  bool pass = false;
  std::string details;  // failure descriptions or summary counts
  double seconds = 0.0;
};

// Runs the full acceptance checklist (criteria 1-12).  `heavy` adds the
// long case (Hurwitz n = ell = 5 at q = 2).  Exceptions are converted into
// failed criteria.
std::vector<CriterionResult> run_acceptance(bool heavy = false,
                                            int threads = 0);

}  // namespace singerfact::repro
