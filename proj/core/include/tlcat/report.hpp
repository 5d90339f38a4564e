#pragma once

#include <cstdint>
#include <functional>
#include <string>
#include <utility>
#include <variant>
#include <vector>

namespace tlcat {

class Morphism;
class Scalar;

inline constexpr int kReportSchemaVersion = 1;

using ParamValue = std::variant<long long, std::string>;
using Params = std::vector<std::pair<std::string, ParamValue>>;

struct CaseRecord {
  std::string identity;
  Params params;
  bool pass = true;
  std::string lhs;
  std::string rhs;
  std::string diff;
  std::string note;
  // Sub-suite the case came from once reports are merged.
  std::string section;
};

struct RunOptions {
  int jobs = 1;
  uint64_t seed = 1;
};

class Report {
 public:
  Report() = default;
  explicit Report(std::string suite) : suite_(std::move(suite)) {}

  const std::string& suite() const { return suite_; }
  const std::vector<CaseRecord>& cases() const { return cases_; }
  void add(CaseRecord c) { cases_.push_back(std::move(c)); }
  void append(const Report& o);

  std::size_t passed() const;
  std::size_t failed() const;
  bool ok() const { return failed() == 0; }

  // Negative means "not recorded"; reports then stay byte-identical across runs.
  double wall_ms = -1;

  std::string to_json() const;
  std::string summary() const;

 private:
  std::string suite_;
  std::vector<CaseRecord> cases_;
};

// Case builders.  Passing cases keep short payloads; failures keep lhs, rhs and
// their difference in full.
CaseRecord check_equal(std::string id, Params params, const Morphism& lhs, const Morphism& rhs);
CaseRecord check_equal(std::string id, Params params, const Scalar& lhs, const Scalar& rhs);
CaseRecord check_true(std::string id, Params params, bool ok, std::string detail = {});

using CaseTask = std::function<std::vector<CaseRecord>()>;
// Runs tasks on up to `jobs` threads and concatenates results in task order.
std::vector<CaseRecord> run_tasks(const std::vector<CaseTask>& tasks, int jobs);
void run_into(Report& report, const std::vector<CaseTask>& tasks, int jobs);

}  // namespace tlcat
