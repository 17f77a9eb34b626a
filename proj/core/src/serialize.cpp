#include "grothkit/serialize.hpp"

#include <algorithm>
#include <limits>
#include <cctype>
#include <sstream>

namespace grothkit {

Json to_json(const Integer& c) {
  if (c >= std::numeric_limits<long long>::min() && c <= std::numeric_limits<long long>::max())
    return Json(static_cast<long long>(c));
  return Json(c.str());
}

Integer integer_from_json(const Json& j) {
  if (j.is_number_integer()) return Integer(j.get<long long>());
  if (j.is_string()) {
    const auto text = j.get<std::string>();
    const auto digits = !text.empty() && text[0] == '-' ? text.substr(1) : text;
    if (digits.empty() || digits.find_first_not_of("0123456789") != std::string::npos)
      throw Error("expected an integer, got " + j.dump());
    return Integer(text);
  }
  throw Error("expected an integer, got " + j.dump());
}

Json to_json(const BetaPoly& p) {
  Json a = Json::array();
  for (const auto& c : p.coeffs()) a.push_back(to_json(c));
  return a;
}

BetaPoly beta_poly_from_json(const Json& j) {
  if (j.is_number_integer() || j.is_string()) return BetaPoly(integer_from_json(j));
  if (!j.is_array()) throw Error("expected a coefficient list, got " + j.dump());
  std::vector<Integer> c;
  for (const auto& x : j) c.push_back(integer_from_json(x));
  return BetaPoly(std::move(c));
}

Json to_json(const TruncPoly& p) {
  Json terms = Json::array();
  for (const auto& [e, c] : p.terms()) {
    Json exp = Json::array();
    for (int i = 0; i < p.n_vars(); ++i) exp.push_back(i < static_cast<int>(e.size()) ? e[i] : 0);
    terms.push_back({{"exp", exp}, {"beta", to_json(c)}});
  }
  return {{"n", p.n_vars()}, {"D", p.max_deg()}, {"terms", terms}};
}

TruncPoly trunc_poly_from_json(const Json& j) {
  try {
    TruncPoly p(j.at("n").get<int>(), j.at("D").get<int>());
    for (const auto& t : j.at("terms")) {
      Exponents e;
      for (const auto& x : t.at("exp")) {
        int v = x.get<int>();
        if (v < 0 || v > 255) throw Error("exponent out of range");
        e.push_back(static_cast<std::uint8_t>(v));
      }
      if (static_cast<int>(e.size()) > p.n_vars()) {
        if (std::any_of(e.begin() + p.n_vars(), e.end(), [](auto v) { return v != 0; }))
          throw Error("exponent vector longer than the variable count");
        e.resize(static_cast<std::size_t>(p.n_vars()));
      }
      p.add_term(strip(std::move(e)), beta_poly_from_json(t.at("beta")));
    }
    return p;
  } catch (const nlohmann::json::exception& ex) {
    throw Error(std::string("malformed polynomial JSON: ") + ex.what());
  }
}

Json to_json(const LabeledPoset& p) {
  Json less = Json::array();
  for (auto [a, b] : covers(p)) less.push_back({a, b});
  return {{"m", p.size()}, {"less", less}, {"labels", p.labels()}};
}

LabeledPoset poset_from_json(const Json& j) {
  try {
    int m = j.at("m").get<int>();
    std::vector<std::pair<int, int>> rel;
    for (const auto& r : j.at("less")) rel.emplace_back(r.at(0).get<int>(), r.at(1).get<int>());
    std::vector<long long> labels;
    if (j.contains("labels")) {
      labels = j.at("labels").get<std::vector<long long>>();
    } else {
      for (int i = 1; i <= m; ++i) labels.push_back(i);
    }
    return LabeledPoset(m, rel, std::move(labels));
  } catch (const nlohmann::json::exception& ex) {
    throw Error(std::string("malformed poset JSON: ") + ex.what());
  }
}

Json to_json(const Dyadic& d) { return {{"num", to_json(d.num())}, {"den_pow2", d.den_pow2()}}; }

Dyadic dyadic_from_json(const Json& j) {
  if (!j.is_object()) return Dyadic(beta_poly_from_json(j));
  return Dyadic(beta_poly_from_json(j.at("num")), j.value("den_pow2", 0));
}

namespace {

std::vector<std::pair<Index, Dyadic>> ordered_terms(const BasisExpansion& e) {
  std::vector<std::pair<Index, Dyadic>> v(e.terms.begin(), e.terms.end());
  std::stable_sort(v.begin(), v.end(), [](const auto& a, const auto& b) {
    int sa = index_size(a.first), sb = index_size(b.first);
    return sa != sb ? sa < sb : b.first < a.first;
  });
  return v;
}

std::string index_str(const Index& i) {
  std::ostringstream os;
  os << "(";
  for (std::size_t k = 0; k < i.size(); ++k) os << (k ? "," : "") << i[k];
  os << ")";
  return os.str();
}

int nonzero_terms(const BetaPoly& p) {
  return static_cast<int>(std::count_if(p.coeffs().begin(), p.coeffs().end(), [](const Integer& c) { return c != 0; }));
}

}  // namespace

Json to_json(const BasisExpansion& e) {
  Json terms = Json::array();
  for (const auto& [idx, c] : ordered_terms(e)) terms.push_back({{"index", idx}, {"coeff", to_json(c)}});
  return {{"basis", basis_name(e.basis)}, {"valid_deg", e.valid_deg}, {"terms", terms}};
}

BasisExpansion expansion_from_json(const Json& j) {
  try {
    BasisExpansion e;
    e.basis = parse_basis(j.at("basis").get<std::string>());
    e.valid_deg = j.at("valid_deg").get<int>();
    for (const auto& t : j.at("terms")) e.add(t.at("index").get<Index>(), dyadic_from_json(t.at("coeff")));
    return e;
  } catch (const nlohmann::json::exception& ex) {
    throw Error(std::string("malformed expansion JSON: ") + ex.what());
  }
}

std::string expansion_str(const BasisExpansion& e) {
  auto terms = ordered_terms(e);
  if (terms.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [idx, c] : terms) {
    std::string num = c.num().str();
    bool compound = nonzero_terms(c.num()) > 1;
    bool negative = !compound && num.front() == '-';
    if (negative) num.erase(0, 1);
    os << (first ? (negative ? "-" : "") : (negative ? " - " : " + "));
    if (compound) {
      os << "(" << num << ")";
    } else if (num != "1") {
      os << num;
    } else if (c.den_pow2() > 0) {
      os << "1";
    }
    if (c.den_pow2() > 0) os << "/" << (Integer(1) << c.den_pow2());
    if (compound || num != "1" || c.den_pow2() > 0) os << "*";
    os << basis_name(e.basis) << index_str(idx);
    first = false;
  }
  return os.str();
}

std::string latex(const BetaPoly& p) {
  if (p.is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (std::size_t k = 0; k < p.coeffs().size(); ++k) {
    const Integer& x = p.coeffs()[k];
    if (x == 0) continue;
    Integer mag = x < 0 ? Integer(-x) : x;
    if (x < 0) os << "-";
    else if (!first) os << "+";
    if (k == 0 || mag != 1) os << mag;
    if (k >= 1) os << "\\beta";
    if (k >= 2) os << "^{" << k << "}";
    first = false;
  }
  return os.str();
}

namespace {

// Writes sign and coefficient ahead of a monomial-like factor; unit coefficients are elided.
void latex_coefficient(std::ostringstream& os, const BetaPoly& c, bool first, bool has_factor) {
  std::string s = latex(c);
  bool compound = nonzero_terms(c) > 1;
  bool negative = !compound && s.front() == '-';
  if (negative) s.erase(0, 1);
  os << (first ? (negative ? "-" : "") : (negative ? " - " : " + "));
  if (compound) os << "(" << s << ")";
  else if (s != "1" || !has_factor) os << s;
  // keep a trailing macro such as \beta from swallowing the next letter
  if (has_factor && !compound && s != "1" && std::isalpha(static_cast<unsigned char>(s.back()))) os << ' ';
}

}  // namespace

std::string latex(const TruncPoly& p) {
  if (p.is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [e, c] : p.terms()) {
    bool has_factor = total_degree(e) > 0;
    latex_coefficient(os, c, first, has_factor);
    for (std::size_t i = 0; i < e.size(); ++i) {
      if (e[i] == 0) continue;
      os << "x_{" << i + 1 << "}";
      if (e[i] > 1) os << "^{" << static_cast<int>(e[i]) << "}";
    }
    first = false;
  }
  return os.str();
}

std::string latex(const BasisExpansion& e) {
  auto terms = ordered_terms(e);
  if (terms.empty()) return "0";
  std::string symbol;
  switch (e.basis) {
    case Basis::M: symbol = "M"; break;
    case Basis::L: symbol = "L^{(\\beta)}"; break;
    case Basis::K: symbol = "K^{(\\beta)}"; break;
    case Basis::Kbar: symbol = "\\bar K^{(\\beta)}"; break;
    case Basis::GP: symbol = "GP^{(\\beta)}"; break;
    case Basis::GQ: symbol = "GQ^{(\\beta)}"; break;
    case Basis::GS: symbol = "GS^{(\\beta)}"; break;
  }
  std::ostringstream os;
  bool first = true;
  for (const auto& [idx, c] : terms) {
    if (c.den_pow2() > 0) {
      std::string s = latex(c.num());
      os << (first ? "" : " + ") << "\\frac{" << s << "}{" << (Integer(1) << c.den_pow2()) << "}";
    } else {
      latex_coefficient(os, c.num(), first, true);
    }
    os << symbol << "_{" << index_str(idx) << "}";
    first = false;
  }
  return os.str();
}

}  // namespace grothkit
