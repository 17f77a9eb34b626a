#pragma once

#include "grothkit/serialize.hpp"

#include <functional>
#include <map>
#include <optional>
#include <string>
#include <vector>

namespace grothkit {

// Named integer bounds (n_vars, max_deg, max_size, ...).
using Params = std::map<std::string, int>;

enum class Expectation { Pass, Conjecture };
enum class Status { Pass, Fail };

struct CheckSpec {
  std::string id;
  std::string description;
  // The identity being checked, in plain notation.
  std::string statement;
  Params params;
  Expectation expected = Expectation::Pass;
};

struct CheckReport {
  std::string id;
  Status status = Status::Pass;
  Expectation expected = Expectation::Pass;
  Params params;
  long long instances = 0;
  std::string summary;
  // Present exactly when status is Fail: inputs plus both sides.
  std::optional<Json> counterexample;
  double seconds = 0.0;

  bool passed() const noexcept { return status == Status::Pass; }
};

// Records instances of one check; the first mismatch becomes the counterexample.
class CheckContext {
 public:
  explicit CheckContext(Params params) : params_(std::move(params)) {}

  int param(const std::string& name) const;
  const Params& params() const noexcept { return params_; }

  // Returns ok. On failure the witness is built lazily, only for the first one.
  bool expect(bool ok, const std::function<Json()>& witness);
  bool expect_equal(const TruncPoly& lhs, const TruncPoly& rhs, const std::function<Json()>& inputs);
  bool expect_equal(const BasisExpansion& lhs, const BasisExpansion& rhs, const std::function<Json()>& inputs);
  void note(std::string text) { notes_.push_back(std::move(text)); }

  long long instances() const noexcept { return instances_; }
  long long failures() const noexcept { return failures_; }
  const std::optional<Json>& counterexample() const noexcept { return first_failure_; }
  const std::vector<std::string>& notes() const noexcept { return notes_; }

 private:
  Params params_;
  long long instances_ = 0;
  long long failures_ = 0;
  std::optional<Json> first_failure_;
  std::vector<std::string> notes_;
};

using CheckBody = std::function<void(CheckContext&)>;

struct RegisteredCheck {
  CheckSpec spec;
  CheckBody body;
};

// Every registered check, in registration order.
const std::vector<RegisteredCheck>& check_registry();
std::vector<CheckSpec> registered_checks();
// Throws Error for an unknown id.
const CheckSpec& find_check(const std::string& id);

// Runs one check; overrides replace default params of the same name and unknown
// names are rejected.
CheckReport run_check(const std::string& id, const Params& overrides = {});
CheckReport run_check(const CheckSpec& spec);

// Runs the selected checks (all when ids is empty) on up to `threads` workers.
// Reports follow the order of ids (registry order when empty) regardless of scheduling.
std::vector<CheckReport> run_checks(const std::vector<std::string>& ids, const Params& overrides, int threads);

// GROTHKIT_THREADS if set and positive, else the hardware concurrency.
int default_thread_count();

// 0 when every non-conjecture check passed, 1 otherwise.
int exit_status(const std::vector<CheckReport>& reports);

std::string status_name(Status s);
std::string expectation_name(Expectation e);

// Timing is left out of the JSON so repeated runs serialize identically.
Json to_json(const CheckReport& r);
std::string report_text(const CheckReport& r);
std::string report_latex(const std::vector<CheckReport>& reports);

}  // namespace grothkit
