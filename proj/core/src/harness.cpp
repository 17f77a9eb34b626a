#include "grothkit/harness.hpp"

#include "checks.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <cstdlib>
#include <set>
#include <sstream>
#include <thread>

namespace grothkit {

int CheckContext::param(const std::string& name) const {
  auto it = params_.find(name);
  if (it == params_.end()) throw Error("check parameter missing: " + name);
  return it->second;
}

bool CheckContext::expect(bool ok, const std::function<Json()>& witness) {
  ++instances_;
  if (ok) return true;
  ++failures_;
  if (!first_failure_) first_failure_ = witness();
  return false;
}

bool CheckContext::expect_equal(const TruncPoly& lhs, const TruncPoly& rhs, const std::function<Json()>& inputs) {
  return expect(lhs == rhs, [&] {
    return Json{{"inputs", inputs()}, {"lhs", lhs.str()}, {"rhs", rhs.str()}, {"difference", (lhs - rhs).str()}};
  });
}

bool CheckContext::expect_equal(const BasisExpansion& lhs, const BasisExpansion& rhs,
                                const std::function<Json()>& inputs) {
  return expect(lhs == rhs, [&] {
    return Json{{"inputs", inputs()}, {"lhs", expansion_str(lhs)}, {"rhs", expansion_str(rhs)}};
  });
}

const std::vector<RegisteredCheck>& check_registry() {
  static const std::vector<RegisteredCheck> registry = [] {
    std::vector<RegisteredCheck> r;
    checks::add_ppart_checks(r);
    checks::add_qsym_checks(r);
    checks::add_shapes_checks(r);
    checks::add_operators_checks(r);
    std::set<std::string> seen;
    for (const auto& c : r)
      if (!seen.insert(c.spec.id).second) throw Error("duplicate check id " + c.spec.id);
    return r;
  }();
  return registry;
}

std::vector<CheckSpec> registered_checks() {
  std::vector<CheckSpec> out;
  for (const auto& c : check_registry()) out.push_back(c.spec);
  return out;
}

namespace {

const RegisteredCheck& find_registered(const std::string& id) {
  for (const auto& c : check_registry())
    if (c.spec.id == id) return c;
  throw Error("unknown check id: " + id);
}

CheckSpec with_overrides(CheckSpec spec, const Params& overrides, bool strict) {
  for (const auto& [k, v] : overrides) {
    auto it = spec.params.find(k);
    if (it == spec.params.end()) {
      if (strict) throw Error("check " + spec.id + " has no parameter " + k);
      continue;
    }
    if (v < 0) throw Error("parameter " + k + " must be nonnegative");
    it->second = v;
  }
  return spec;
}

}  // namespace

const CheckSpec& find_check(const std::string& id) { return find_registered(id).spec; }

CheckReport run_check(const CheckSpec& spec) {
  const RegisteredCheck& reg = find_registered(spec.id);
  CheckReport report;
  report.id = spec.id;
  report.expected = spec.expected;
  report.params = spec.params;
  CheckContext ctx(spec.params);
  auto start = std::chrono::steady_clock::now();
  try {
    reg.body(ctx);
  } catch (const std::exception& ex) {
    ctx.expect(false, [&] { return Json{{"error", ex.what()}}; });
  }
  report.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  report.instances = ctx.instances();
  report.status = ctx.failures() == 0 ? Status::Pass : Status::Fail;
  if (report.status == Status::Fail) report.counterexample = ctx.counterexample();
  std::ostringstream os;
  os << ctx.instances() << " instances";
  if (ctx.failures() > 0) os << ", " << ctx.failures() << " failed";
  for (const auto& n : ctx.notes()) os << "; " << n;
  report.summary = os.str();
  return report;
}

CheckReport run_check(const std::string& id, const Params& overrides) {
  return run_check(with_overrides(find_check(id), overrides, true));
}

std::vector<CheckReport> run_checks(const std::vector<std::string>& ids, const Params& overrides, int threads) {
  std::vector<CheckSpec> specs;
  if (ids.empty()) {
    for (const auto& c : check_registry()) specs.push_back(with_overrides(c.spec, overrides, false));
  } else {
    for (const auto& id : ids) specs.push_back(with_overrides(find_check(id), overrides, ids.size() == 1));
  }
  std::vector<CheckReport> reports(specs.size());
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t i; (i = next.fetch_add(1)) < specs.size();) reports[i] = run_check(specs[i]);
  };
  int n = std::clamp(threads, 1, static_cast<int>(std::max<std::size_t>(specs.size(), 1)));
  if (n == 1) {
    worker();
  } else {
    std::vector<std::jthread> pool;
    for (int t = 0; t < n; ++t) pool.emplace_back(worker);
  }
  return reports;
}

int default_thread_count() {
  if (const char* env = std::getenv("GROTHKIT_THREADS")) {
    int v = std::atoi(env);
    if (v > 0) return v;
  }
  return std::max(1u, std::thread::hardware_concurrency());
}

int exit_status(const std::vector<CheckReport>& reports) {
  for (const auto& r : reports)
    if (r.expected == Expectation::Pass && r.status == Status::Fail) return 1;
  return 0;
}

std::string status_name(Status s) { return s == Status::Pass ? "PASS" : "FAIL"; }

std::string expectation_name(Expectation e) { return e == Expectation::Pass ? "PASS" : "CONJECTURE"; }

Json to_json(const CheckReport& r) {
  Json j{{"id", r.id},
         {"status", status_name(r.status)},
         {"expected", expectation_name(r.expected)},
         {"params", r.params},
         {"instances", r.instances},
         {"summary", r.summary}};
  if (r.counterexample) j["counterexample"] = *r.counterexample;
  return j;
}

std::string report_text(const CheckReport& r) {
  std::ostringstream os;
  os << status_name(r.status) << "  " << r.id;
  if (r.expected == Expectation::Conjecture) os << " [conjecture]";
  os << "  (" << r.summary << ")";
  if (r.counterexample) os << "\n  counterexample: " << r.counterexample->dump();
  return os.str();
}

std::string report_latex(const std::vector<CheckReport>& reports) {
  std::ostringstream os;
  os << "\\begin{tabular}{lll}\n\\hline\ncheck & status & instances \\\\\n\\hline\n";
  for (const auto& r : reports) {
    std::string id = r.id;
    os << "\\texttt{" << id << "} & " << status_name(r.status)
       << (r.expected == Expectation::Conjecture ? " (conj.)" : "") << " & " << r.instances << " \\\\\n";
  }
  os << "\\hline\n\\end{tabular}\n";
  return os.str();
}

}  // namespace grothkit
