#include "tlcat/report.hpp"

#include <algorithm>
#include <atomic>
#include <exception>
#include <sstream>
#include <thread>

#include "json.hpp"
#include "tlcat/morphism.hpp"
#include "tlcat/scalar.hpp"

namespace tlcat {

namespace {

constexpr std::size_t kShortPayload = 400;
constexpr std::size_t kLongPayload = 200000;

std::string clip(const std::string& s, std::size_t limit) {
  if (s.size() <= limit) return s;
  return s.substr(0, limit) + "... <" + std::to_string(s.size()) + " chars>";
}

}  // namespace

void Report::append(const Report& o) {
  for (CaseRecord c : o.cases_) {
    if (c.section.empty()) c.section = o.suite_;
    cases_.push_back(std::move(c));
  }
}

std::size_t Report::passed() const {
  return std::size_t(std::count_if(cases_.begin(), cases_.end(), [](const CaseRecord& c) { return c.pass; }));
}

std::size_t Report::failed() const { return cases_.size() - passed(); }

std::string Report::to_json() const {
  nlohmann::ordered_json j;
  j["schema_version"] = kReportSchemaVersion;
  j["suite"] = suite_;
  j["summary"] = {{"total", cases_.size()}, {"passed", passed()}, {"failed", failed()}};
  if (wall_ms >= 0) j["wall_time_ms"] = wall_ms;
  auto& arr = j["cases"] = nlohmann::ordered_json::array();
  for (const auto& c : cases_) {
    nlohmann::ordered_json e;
    if (!c.section.empty()) e["section"] = c.section;
    e["identity"] = c.identity;
    auto& p = e["parameters"] = nlohmann::ordered_json::object();
    for (const auto& [k, v] : c.params) {
      if (std::holds_alternative<long long>(v)) p[k] = std::get<long long>(v);
      else p[k] = std::get<std::string>(v);
    }
    e["status"] = c.pass ? "pass" : "fail";
    e["lhs"] = c.lhs;
    e["rhs"] = c.rhs;
    e["diff"] = c.diff;
    if (!c.note.empty()) e["note"] = c.note;
    arr.push_back(std::move(e));
  }
  return j.dump(2) + "\n";
}

std::string Report::summary() const {
  std::ostringstream os;
  os << suite_ << ": " << passed() << "/" << cases_.size() << " passed";
  if (failed() != 0) os << ", " << failed() << " FAILED";
  return os.str();
}

CaseRecord check_equal(std::string id, Params params, const Morphism& lhs, const Morphism& rhs) {
  CaseRecord c;
  c.identity = std::move(id);
  c.params = std::move(params);
  Morphism diff(lhs.dst(), lhs.src(), lhs.dilute());
  bool shapes = lhs.dst() == rhs.dst() && lhs.src() == rhs.src() && lhs.dilute() == rhs.dilute();
  if (shapes) diff = lhs - rhs;
  c.pass = shapes && diff.is_zero();
  const std::size_t limit = c.pass ? kShortPayload : kLongPayload;
  c.lhs = clip(lhs.str(), limit);
  c.rhs = clip(rhs.str(), limit);
  c.diff = shapes ? clip(diff.str(), limit) : "shape mismatch";
  return c;
}

CaseRecord check_equal(std::string id, Params params, const Scalar& lhs, const Scalar& rhs) {
  CaseRecord c;
  c.identity = std::move(id);
  c.params = std::move(params);
  const Scalar diff = lhs - rhs;
  c.pass = diff.is_zero();
  const std::size_t limit = c.pass ? kShortPayload : kLongPayload;
  c.lhs = clip(lhs.str(), limit);
  c.rhs = clip(rhs.str(), limit);
  c.diff = clip(diff.str(), limit);
  return c;
}

CaseRecord check_true(std::string id, Params params, bool ok, std::string detail) {
  CaseRecord c;
  c.identity = std::move(id);
  c.params = std::move(params);
  c.pass = ok;
  c.note = std::move(detail);
  c.diff = ok ? "0" : "condition failed";
  return c;
}

std::vector<CaseRecord> run_tasks(const std::vector<CaseTask>& tasks, int jobs) {
  std::vector<std::vector<CaseRecord>> slots(tasks.size());
  auto run_one = [&](std::size_t i) {
    try {
      slots[i] = tasks[i]();
    } catch (const std::exception& e) {
      slots[i] = {check_true("exception", {{"task", (long long)i}}, false, e.what())};
    }
  };
  const std::size_t workers = std::min<std::size_t>(std::size_t(std::max(1, jobs)), tasks.size());
  if (workers <= 1) {
    for (std::size_t i = 0; i < tasks.size(); ++i) run_one(i);
  } else {
    std::atomic<std::size_t> next{0};
    std::vector<std::thread> pool;
    for (std::size_t w = 0; w < workers; ++w)
      pool.emplace_back([&] {
        for (std::size_t i = next++; i < tasks.size(); i = next++) run_one(i);
      });
    for (auto& th : pool) th.join();
  }
  std::vector<CaseRecord> out;
  for (auto& s : slots)
    for (auto& c : s) out.push_back(std::move(c));
  return out;
}

void run_into(Report& report, const std::vector<CaseTask>& tasks, int jobs) {
  for (auto& c : run_tasks(tasks, jobs)) report.add(std::move(c));
}

}  // namespace tlcat
