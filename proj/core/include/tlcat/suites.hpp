#pragma once

#include <string>
#include <vector>

#include "tlcat/report.hpp"
#include "tlcat/specialize.hpp"

namespace tlcat {

struct SuiteOptions {
  int max_n = 6;
  Specialization spec;  // only the fusion suite looks at this
  RunOptions run;
};

// braid, twist, repr, fusion, integrable, dilute.
const std::vector<std::string>& suite_names();
bool is_suite(const std::string& name);

// Runs one suite, or every suite for "all".  InvalidArgument for unknown names.
Report run_suite(const std::string& name, const SuiteOptions& opt = {});

}  // namespace tlcat
