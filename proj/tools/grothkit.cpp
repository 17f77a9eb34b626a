#include <grothkit/harness.hpp>
#include <grothkit/operators.hpp>
#include <grothkit/posets.hpp>
#include <grothkit/ppart.hpp>
#include <grothkit/qsym.hpp>
#include <grothkit/serialize.hpp>
#include <grothkit/shapes.hpp>

#include "CLI11.hpp"

#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

namespace gk = grothkit;

namespace {

// Bad user input: reported with usage text, exit status 2.
struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

enum class Format { Text, Json, Latex };

struct Output {
  bool json = false;
  bool latex = false;
  Format format() const {
    if (json && latex) throw UsageError("--json and --latex are exclusive");
    return json ? Format::Json : latex ? Format::Latex : Format::Text;
  }
};

void print(const gk::TruncPoly& p, Format f) {
  switch (f) {
    case Format::Text: std::cout << p.str() << "\n"; break;
    case Format::Json: std::cout << gk::to_json(p).dump() << "\n"; break;
    case Format::Latex: std::cout << gk::latex(p) << "\n"; break;
  }
}

void print(const gk::BasisExpansion& e, Format f) {
  switch (f) {
    case Format::Text: std::cout << gk::expansion_str(e) << "  (valid through degree " << e.valid_deg << ")\n"; break;
    case Format::Json: std::cout << gk::to_json(e).dump() << "\n"; break;
    case Format::Latex: std::cout << gk::latex(e) << "\n"; break;
  }
}

bool is_shape_family(const std::string& f) { return f == "G" || f == "GP" || f == "GQ" || f == "GS"; }

gk::SkewShape shape_arg(const std::string& family, const std::string& text) {
  gk::SkewShape s = gk::parse_shape(text);
  gk::validate_shape(s, family == "GP" || family == "GQ");
  return s;
}

// Monomial coefficients of one named function, e.g. ("GQ", "3,2") or ("K", "2,1").
gk::MCoeffs family_m_coeffs(const std::string& family, const std::string& index, bool shifted, int max_deg) {
  if (is_shape_family(family)) {
    if (shifted && family == "G") throw UsageError("G is indexed by unshifted shapes");
    gk::SkewShape s = shape_arg(family, index);
    if (family == "G") return gk::g_m_coeffs(s, max_deg);
    if (family == "GP") return gk::gp_m_coeffs(s, max_deg);
    if (family == "GQ") return gk::gq_m_coeffs(s, max_deg);
    return gk::gs_m_coeffs(s, max_deg);
  }
  gk::Composition a = gk::parse_composition(index);
  if (family == "M") return {{a, gk::BetaPoly(1)}};
  if (family == "L") return gk::m_coeffs_L(a, max_deg);
  if (family == "K") return gk::m_coeffs_K(a, max_deg);
  if (family == "Kbar") return gk::m_coeffs_Kbar(a, max_deg);
  throw UsageError("unknown family " + family + " (expected G, GP, GQ, GS, M, L, K, Kbar)");
}

std::string read_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw UsageError("cannot read " + path);
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

// chainN, antichainN, an inline JSON object, or @file.json
gk::LabeledPoset poset_arg(const std::string& text) {
  auto numeric_suffix = [&](std::size_t at) {
    std::string rest = text.substr(at);
    if (rest.empty() || rest.find_first_not_of("0123456789") != std::string::npos)
      throw UsageError("malformed poset " + text);
    return std::stoi(rest);
  };
  if (text.starts_with("antichain")) return gk::LabeledPoset::antichain(numeric_suffix(9));
  if (text.starts_with("chain")) {
    std::vector<long long> labels;
    for (int i = 1; i <= numeric_suffix(5); ++i) labels.push_back(i);
    return gk::LabeledPoset::chain(labels);
  }
  std::string body = text.starts_with("@") ? read_file(text.substr(1)) : text;
  try {
    return gk::poset_from_json(gk::Json::parse(body));
  } catch (const gk::Json::exception& ex) {
    throw UsageError("malformed poset " + text + ": " + ex.what());
  }
}

std::string letters_str(const gk::LetterSet& s) {
  std::string out = "{";
  for (std::size_t i = 0; i < s.size(); ++i) {
    if (i) out += ",";
    out += std::to_string(s[i].value);
    if (s[i].primed) out += "'";
  }
  return out + "}";
}

gk::Json letters_json(const gk::LetterSet& s) {
  gk::Json j = gk::Json::array();
  for (const auto& l : s) j.push_back(std::to_string(l.value) + (l.primed ? "'" : ""));
  return j;
}

// Shared state of the subcommands, filled in by CLI11.
struct Args {
  Output out;
  std::string family, index, basis = "M", what, check_id = "all";
  int n_vars = 4, max_deg = 4, max_size = 8, max_len = 4, max_total = 4, threads = 0;
  std::optional<int> size;
  bool shifted = false, count = false, list = false;
  std::string poset, shape, input;
  std::vector<int> unprimed;
  std::vector<std::string> bounds;
};

int run_compute(const Args& a) {
  gk::MCoeffs c = family_m_coeffs(a.family, a.index, a.shifted, a.max_deg);
  gk::TruncPoly p = gk::from_m_coeffs(c, a.n_vars, a.max_deg);
  print(p, a.out.format());
  return 0;
}

int run_expand(const Args& a) {
  gk::Basis b = gk::parse_basis(a.basis);
  if (b == gk::Basis::GS) throw UsageError("expansion in GS is not supported");
  gk::MCoeffs c = family_m_coeffs(a.family, a.index, a.shifted, a.max_size);
  print(gk::expand_m_coeffs(c, a.max_size, b), a.out.format());
  return 0;
}

int run_enumerate(const Args& a) {
  const Format f = a.out.format();
  long long n = 0;
  auto emit_assignment = [&](const gk::SVAssignment& s) {
    ++n;
    if (a.count) return;
    if (f == Format::Json) {
      gk::Json j = gk::Json::array();
      for (const auto& cell : s) j.push_back(letters_json(cell));
      std::cout << j.dump() << "\n";
    } else {
      for (std::size_t i = 0; i < s.size(); ++i) std::cout << (i ? " " : "") << letters_str(s[i]);
      std::cout << "\n";
    }
  };
  auto emit_word = [&](const gk::Word& w) {
    ++n;
    if (a.count) return;
    if (f == Format::Json) {
      std::cout << gk::Json(w).dump() << "\n";
    } else {
      for (std::size_t i = 0; i < w.size(); ++i) std::cout << (i ? " " : "") << w[i];
      std::cout << "\n";
    }
  };

  if (a.what == "tableaux") {
    if (a.shape.empty()) throw UsageError("tableaux need --shape");
    gk::SkewShape s = gk::parse_shape(a.shape);
    gk::validate_shape(s, a.shifted);
    gk::Diagram d = gk::make_diagram(s, a.shifted);
    for (const auto& w : gk::standard_set_tableaux(s, a.shifted, a.max_len)) {
      ++n;
      if (a.count) continue;
      auto entries = gk::tableau_entries(d, w);
      if (f == Format::Json) {
        gk::Json j = gk::Json::array();
        for (std::size_t i = 0; i < d.cells.size(); ++i)
          j.push_back({{"row", d.cells[i].row}, {"col", d.cells[i].col}, {"entries", entries[i]}});
        std::cout << j.dump() << "\n";
      } else {
        for (std::size_t i = 0; i < d.cells.size(); ++i) {
          std::cout << (i ? " " : "") << "(" << d.cells[i].row << "," << d.cells[i].col << "):{";
          for (std::size_t k = 0; k < entries[i].size(); ++k) std::cout << (k ? "," : "") << entries[i][k];
          std::cout << "}";
        }
        std::cout << "\n";
      }
    }
  } else {
    if (a.poset.empty()) throw UsageError(a.what + " needs --poset");
    gk::LabeledPoset p = poset_arg(a.poset);
    if (a.what == "multiext") {
      gk::for_each_multiextension(p, a.max_len, emit_word);
    } else if (a.what == "svp") {
      gk::enumerate_svp(p, a.n_vars, a.max_total, emit_assignment);
    } else if (a.what == "esvp") {
      gk::Mask v = 0;
      for (int i : a.unprimed) {
        if (i < 0 || i >= p.size()) throw UsageError("--unprimed element out of range");
        v |= gk::bit(i);
      }
      gk::enumerate_esvp(p, v, a.n_vars, a.max_total, emit_assignment);
    } else {
      throw UsageError("unknown enumeration " + a.what + " (expected svp, esvp, tableaux, multiext)");
    }
  }
  if (a.count) std::cout << n << "\n";
  return 0;
}

gk::Params parse_bounds(const Args& a) {
  gk::Params out;
  for (const auto& kv : a.bounds) {
    auto eq = kv.find('=');
    if (eq == std::string::npos) throw UsageError("bounds take the form name=value: " + kv);
    try {
      out[kv.substr(0, eq)] = std::stoi(kv.substr(eq + 1));
    } catch (const std::exception&) {
      throw UsageError("bad bound value: " + kv);
    }
  }
  return out;
}

int run_verify(const Args& a) {
  const Format f = a.out.format();
  if (a.list && f == Format::Json) {
    gk::Json j = gk::Json::array();
    for (const auto& c : gk::registered_checks())
      j.push_back({{"id", c.id},
                   {"description", c.description},
                   {"statement", c.statement},
                   {"params", c.params},
                   {"expected", gk::expectation_name(c.expected)}});
    std::cout << j.dump(2) << "\n";
    return 0;
  }
  if (a.list) {
    for (const auto& c : gk::registered_checks()) {
      std::cout << c.id << (c.expected == gk::Expectation::Conjecture ? " [conjecture]" : "") << "  "
                << c.description << "\n";
      if (f == Format::Text) std::cout << "    " << c.statement << "\n";
    }
    return 0;
  }
  gk::Params overrides = parse_bounds(a);
  std::vector<std::string> ids;
  if (a.check_id != "all") {
    try {
      ids.push_back(gk::find_check(a.check_id).id);
    } catch (const gk::Error& ex) {
      throw UsageError(ex.what());
    }
    // --size addresses whichever size bound the check has
    if (a.size) {
      const auto& params = gk::find_check(a.check_id).params;
      bool used = false;
      for (const char* key : {"max_size", "max_poset"})
        if (params.contains(key)) overrides[key] = *a.size, used = true;
      if (!used) throw UsageError("check " + a.check_id + " has no size bound");
    }
  } else if (a.size) {
    overrides["max_size"] = *a.size;
    overrides["max_poset"] = *a.size;
  }
  std::vector<gk::CheckReport> reports;
  try {
    reports = gk::run_checks(ids, overrides, a.threads > 0 ? a.threads : gk::default_thread_count());
  } catch (const gk::Error& ex) {
    throw UsageError(ex.what());
  }
  if (f == Format::Json) {
    gk::Json j = gk::Json::array();
    for (const auto& r : reports) j.push_back(gk::to_json(r));
    std::cout << j.dump(2) << "\n";
  } else if (f == Format::Latex) {
    std::cout << gk::report_latex(reports);
  } else {
    for (const auto& r : reports) std::cout << gk::report_text(r) << "\n";
  }
  return gk::exit_status(reports);
}

// The L-expansion an involution acts on: a named function or a JSON expansion/polynomial.
gk::BasisExpansion apply_input(const Args& a) {
  if (!a.input.empty()) {
    gk::Json j;
    try {
      j = gk::Json::parse(a.input.starts_with("@") ? read_file(a.input.substr(1)) : a.input);
    } catch (const gk::Json::exception& ex) {
      throw UsageError(std::string("malformed input: ") + ex.what());
    }
    if (j.contains("basis")) {
      gk::BasisExpansion e = gk::expansion_from_json(j);
      if (e.basis == gk::Basis::L) return e;
      return gk::expand_m_coeffs(gk::synthesize_m_coeffs(e, e.valid_deg), e.valid_deg, gk::Basis::L);
    }
    return gk::expand_in_basis(gk::trunc_poly_from_json(j), gk::Basis::L);
  }
  if (a.family.empty() || a.index.empty()) throw UsageError("apply needs <family> <index> or --input");
  return gk::expand_m_coeffs(family_m_coeffs(a.family, a.index, a.shifted, a.max_deg), a.max_deg, gk::Basis::L);
}

int run_apply(const Args& a) {
  const Format f = a.out.format();
  gk::BasisExpansion l = apply_input(a);
  const int d = l.valid_deg;
  const int n = std::max(a.n_vars, d);
  if (a.what == "theta") {
    print(gk::theta(l), f);
  } else if (a.what == "omega") {
    print(gk::omega(l, n, d), f);
  } else if (a.what == "psi") {
    print(gk::psi(l, n, d), f);
  } else if (a.what == "rho") {
    print(gk::rho(l, n, d), f);
  } else if (a.what == "antipode") {
    print(gk::antipode(l, n, d), f);
  } else {
    throw UsageError("unknown map " + a.what + " (expected omega, psi, rho, antipode, theta)");
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"grothkit: K-theoretic quasisymmetric and symmetric functions under truncation"};
  app.require_subcommand(1);
  app.fallthrough();
  Args a;
  app.add_flag("--json", a.out.json, "JSON output");
  app.add_flag("--latex", a.out.latex, "LaTeX output");

  auto* compute = app.add_subcommand("compute", "truncated polynomial of a named function");
  compute->add_option("family", a.family, "G, GP, GQ, GS, M, L, K or Kbar")->required();
  compute->add_option("index", a.index, "shape like 5,4,2/2,1 or composition like 2,1")->required();
  compute->add_option("--n", a.n_vars, "number of variables")->check(CLI::Range(0, 64));
  compute->add_option("--deg", a.max_deg, "truncation degree")->check(CLI::Range(0, 40));
  compute->add_flag("--shifted", a.shifted, "read the shape as shifted");

  auto* expand = app.add_subcommand("expand", "expansion of a named function in a basis");
  expand->add_option("family", a.family)->required();
  expand->add_option("index", a.index)->required();
  expand->add_option("--basis", a.basis, "M, L, K, Kbar, GP or GQ");
  expand->add_option("--max-size", a.max_size, "largest index size kept")->check(CLI::Range(0, 40));
  expand->add_flag("--shifted", a.shifted);

  auto* enumerate = app.add_subcommand("enumerate", "stream combinatorial objects");
  enumerate->add_option("kind", a.what, "svp, esvp, tableaux or multiext")->required();
  enumerate->add_option("--poset", a.poset, "chainN, antichainN, inline JSON or @file");
  enumerate->add_option("--shape", a.shape, "shape for tableaux");
  enumerate->add_flag("--shifted", a.shifted);
  enumerate->add_option("--maxlen", a.max_len, "longest word / most entries")->check(CLI::Range(0, 64));
  enumerate->add_option("--n", a.n_vars, "largest value")->check(CLI::Range(0, 64));
  enumerate->add_option("--max-total", a.max_total, "largest total number of values")->check(CLI::Range(0, 64));
  enumerate->add_option("--unprimed", a.unprimed, "esvp elements restricted to unprimed values");
  enumerate->add_flag("--count", a.count, "print only the number of objects");

  auto* verify = app.add_subcommand("verify", "run registered identity checks");
  verify->add_option("check", a.check_id, "check id or all");
  verify->add_option("--size", a.size, "size bound of the check")->check(CLI::Range(0, 64));
  verify->add_option("--bound", a.bounds, "parameter override name=value")->allow_extra_args(false);
  verify->add_option("--threads", a.threads, "worker threads")->check(CLI::Range(0, 256));
  verify->add_flag("--list", a.list, "list registered checks");

  auto* apply = app.add_subcommand("apply", "apply omega, psi, rho, antipode or theta");
  apply->add_option("map", a.what)->required();
  apply->add_option("family", a.family);
  apply->add_option("index", a.index);
  apply->add_option("--input", a.input, "BasisExpansion or TruncPoly JSON, inline or @file");
  apply->add_option("--n", a.n_vars)->check(CLI::Range(0, 64));
  apply->add_option("--deg", a.max_deg)->check(CLI::Range(0, 40));
  apply->add_flag("--shifted", a.shifted);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    if (*compute) return run_compute(a);
    if (*expand) return run_expand(a);
    if (*enumerate) return run_enumerate(a);
    if (*verify) return run_verify(a);
    if (*apply) return run_apply(a);
  } catch (const UsageError& e) {
    std::cerr << "error: " << e.what() << "\n\n" << app.help();
    return 2;
  } catch (const gk::Error& e) {
    // malformed shapes and compositions surface as library errors
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 2;
}
