#include "grothkit/ring.hpp"

#include <algorithm>
#include <numeric>
#include <ostream>
#include <sstream>

namespace grothkit {

BetaPoly::BetaPoly(long long c) {
  if (c != 0) c_.emplace_back(c);
}

BetaPoly::BetaPoly(const Integer& c) {
  if (c != 0) c_.push_back(c);
}

BetaPoly::BetaPoly(std::vector<Integer> coeffs) : c_(std::move(coeffs)) { trim(); }

BetaPoly BetaPoly::beta(int k, const Integer& c) {
  if (k < 0) throw Error("negative power of b");
  BetaPoly r;
  if (c == 0) return r;
  r.c_.assign(static_cast<std::size_t>(k) + 1, Integer(0));
  r.c_.back() = c;
  return r;
}

void BetaPoly::trim() {
  while (!c_.empty() && c_.back() == 0) c_.pop_back();
}

int BetaPoly::low_degree() const noexcept {
  for (std::size_t k = 0; k < c_.size(); ++k)
    if (c_[k] != 0) return static_cast<int>(k);
  return -1;
}

Integer BetaPoly::operator[](int k) const {
  if (k < 0 || k >= static_cast<int>(c_.size())) return 0;
  return c_[k];
}

BetaPoly& BetaPoly::operator+=(const BetaPoly& o) {
  if (o.c_.size() > c_.size()) c_.resize(o.c_.size());
  for (std::size_t k = 0; k < o.c_.size(); ++k) c_[k] += o.c_[k];
  trim();
  return *this;
}

BetaPoly& BetaPoly::operator-=(const BetaPoly& o) {
  if (o.c_.size() > c_.size()) c_.resize(o.c_.size());
  for (std::size_t k = 0; k < o.c_.size(); ++k) c_[k] -= o.c_[k];
  trim();
  return *this;
}

BetaPoly operator*(const BetaPoly& a, const BetaPoly& b) {
  if (a.is_zero() || b.is_zero()) return {};
  std::vector<Integer> r(a.c_.size() + b.c_.size() - 1);
  for (std::size_t i = 0; i < a.c_.size(); ++i) {
    if (a.c_[i] == 0) continue;
    for (std::size_t j = 0; j < b.c_.size(); ++j) r[i + j] += a.c_[i] * b.c_[j];
  }
  return BetaPoly(std::move(r));
}

BetaPoly& BetaPoly::operator*=(const BetaPoly& o) {
  *this = *this * o;
  return *this;
}

BetaPoly& BetaPoly::operator*=(const Integer& c) {
  for (auto& x : c_) x *= c;
  trim();
  return *this;
}

BetaPoly BetaPoly::operator-() const {
  BetaPoly r = *this;
  for (auto& x : r.c_) x = -x;
  return r;
}

BetaPoly BetaPoly::shifted(int k) const {
  if (is_zero() || k == 0) return *this;
  if (k < 0) throw Error("negative power of b");
  BetaPoly r;
  r.c_.assign(static_cast<std::size_t>(k), Integer(0));
  r.c_.insert(r.c_.end(), c_.begin(), c_.end());
  return r;
}

BetaPoly BetaPoly::negated_beta() const {
  BetaPoly r = *this;
  for (std::size_t k = 1; k < r.c_.size(); k += 2) r.c_[k] = -r.c_[k];
  return r;
}

Integer BetaPoly::evaluate(const Integer& b) const {
  Integer acc = 0;
  for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * b + *it;
  return acc;
}

bool BetaPoly::nonnegative() const {
  return std::all_of(c_.begin(), c_.end(), [](const Integer& x) { return x >= 0; });
}

bool BetaPoly::divisible_by_pow2(int k) const {
  if (k <= 0) return true;
  Integer m = Integer(1) << k;
  return std::all_of(c_.begin(), c_.end(), [&](const Integer& x) { return x % m == 0; });
}

BetaPoly BetaPoly::divided_by_pow2(int k) const {
  if (!divisible_by_pow2(k)) throw Error("coefficient not divisible by power of two");
  BetaPoly r = *this;
  Integer m = Integer(1) << k;
  for (auto& x : r.c_) x /= m;
  return r;
}

std::string BetaPoly::str() const {
  if (is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (std::size_t k = 0; k < c_.size(); ++k) {
    const Integer& x = c_[k];
    if (x == 0) continue;
    Integer mag = x < 0 ? Integer(-x) : x;
    if (x < 0) os << "-";
    else if (!first) os << "+";
    if (k == 0 || mag != 1) os << mag;
    if (k >= 1) os << "b";
    if (k >= 2) os << "^" << k;
    first = false;
  }
  return os.str();
}

std::ostream& operator<<(std::ostream& os, const BetaPoly& p) { return os << p.str(); }

// ---------------------------------------------------------------------------

int total_degree(const Exponents& e) {
  return std::accumulate(e.begin(), e.end(), 0);
}

Exponents strip(Exponents e) {
  while (!e.empty() && e.back() == 0) e.pop_back();
  return e;
}

bool MonomialOrder::operator()(const Exponents& a, const Exponents& b) const {
  int da = total_degree(a), db = total_degree(b);
  if (da != db) return da < db;
  return std::lexicographical_compare(b.begin(), b.end(), a.begin(), a.end());
}

TruncPoly::TruncPoly(int n_vars, int max_deg) : n_(n_vars), d_(max_deg) {
  if (n_vars < 0) throw Error("negative number of variables");
  if (max_deg < 0) throw Error("negative truncation degree");
  if (max_deg > 255) throw Error("truncation degree above 255 is not supported");
}

TruncPoly TruncPoly::constant(int n_vars, int max_deg, const BetaPoly& c) {
  TruncPoly p(n_vars, max_deg);
  p.add_term({}, c);
  return p;
}

TruncPoly TruncPoly::var(int n_vars, int max_deg, int i) {
  if (i < 1 || i > n_vars) throw Error("variable index out of range");
  Exponents e(static_cast<std::size_t>(i), 0);
  e.back() = 1;
  return monomial(n_vars, max_deg, std::move(e), 1);
}

TruncPoly TruncPoly::monomial(int n_vars, int max_deg, Exponents e, const BetaPoly& c) {
  TruncPoly p(n_vars, max_deg);
  p.add_term(std::move(e), c);
  return p;
}

BetaPoly TruncPoly::coeff(const Exponents& e) const {
  auto it = terms_.find(strip(e));
  return it == terms_.end() ? BetaPoly{} : it->second;
}

void TruncPoly::add_term(Exponents e, const BetaPoly& c) {
  if (c.is_zero()) return;
  e = strip(std::move(e));
  if (static_cast<int>(e.size()) > n_) throw Error("exponent vector longer than the number of variables");
  if (total_degree(e) > d_) return;
  auto [it, inserted] = terms_.try_emplace(std::move(e), c);
  if (!inserted) {
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

int TruncPoly::min_degree() const {
  return terms_.empty() ? -1 : total_degree(terms_.begin()->first);
}

void TruncPoly::require_compatible(const TruncPoly& o) const {
  if (n_ != o.n_ || d_ != o.d_) throw Error("polynomials live in different truncated rings");
}

TruncPoly& TruncPoly::operator+=(const TruncPoly& o) {
  require_compatible(o);
  for (const auto& [e, c] : o.terms_) add_term(e, c);
  return *this;
}

TruncPoly& TruncPoly::operator-=(const TruncPoly& o) {
  require_compatible(o);
  for (const auto& [e, c] : o.terms_) add_term(e, -c);
  return *this;
}

TruncPoly& TruncPoly::operator*=(const BetaPoly& c) {
  if (c.is_zero()) {
    terms_.clear();
    return *this;
  }
  for (auto it = terms_.begin(); it != terms_.end();) {
    it->second *= c;
    if (it->second.is_zero()) it = terms_.erase(it);
    else ++it;
  }
  return *this;
}

TruncPoly TruncPoly::operator-() const {
  TruncPoly r = *this;
  for (auto& [e, c] : r.terms_) c = -c;
  return r;
}

TruncPoly operator*(const TruncPoly& a, const TruncPoly& b) {
  a.require_compatible(b);
  TruncPoly r(a.n_, a.d_);
  for (const auto& [ea, ca] : a.terms_) {
    int da = total_degree(ea);
    for (const auto& [eb, cb] : b.terms_) {
      if (da + total_degree(eb) > a.d_) break;
      Exponents e(std::max(ea.size(), eb.size()), 0);
      for (std::size_t k = 0; k < ea.size(); ++k) e[k] += ea[k];
      for (std::size_t k = 0; k < eb.size(); ++k) e[k] += eb[k];
      r.add_term(std::move(e), ca * cb);
    }
  }
  return r;
}

bool operator==(const TruncPoly& a, const TruncPoly& b) {
  return a.n_ == b.n_ && a.d_ == b.d_ && a.terms_ == b.terms_;
}

std::string TruncPoly::str() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [e, c] : terms_) {
    std::string cs = c.str();
    bool compound =
        std::count_if(c.coeffs().begin(), c.coeffs().end(), [](const Integer& x) { return x != 0; }) > 1;
    bool negative = !compound && cs.front() == '-';
    if (negative) cs.erase(0, 1);
    if (first) os << (negative ? "-" : "");
    else os << (negative ? " - " : " + ");
    first = false;
    bool has_x = !e.empty();
    if (compound) os << "(" << cs << ")";
    else if (!has_x || cs != "1") os << cs;
    bool need_star = compound || cs != "1";
    for (std::size_t k = 0; k < e.size(); ++k) {
      if (e[k] == 0) continue;
      if (need_star) os << "*";
      os << "x" << (k + 1);
      if (e[k] > 1) os << "^" << static_cast<int>(e[k]);
      need_star = true;
    }
  }
  return os.str();
}

std::ostream& operator<<(std::ostream& os, const TruncPoly& p) { return os << p.str(); }

// ---------------------------------------------------------------------------

TruncPoly add(const TruncPoly& p, const TruncPoly& q) { return p + q; }
TruncPoly mul(const TruncPoly& p, const TruncPoly& q) { return p * q; }

TruncPoly power(const TruncPoly& p, int k) {
  if (k < 0) throw Error("negative exponent");
  TruncPoly r = TruncPoly::constant(p.n_vars(), p.max_deg(), 1);
  for (int i = 0; i < k; ++i) r = r * p;
  return r;
}

TruncPoly oplus(const TruncPoly& p, const TruncPoly& q) {
  TruncPoly r = p + q;
  r += (p * q) * BetaPoly::beta();
  return r;
}

TruncPoly ominus(const TruncPoly& p) {
  if (!p.coeff({}).is_zero()) throw Error("ominus needs a series without constant term");
  // -p * sum_k (-b p)^k
  TruncPoly step = -(p * BetaPoly::beta());
  TruncPoly term = -p;
  TruncPoly r = term;
  for (int k = 1; k <= p.max_deg() && !term.is_zero(); ++k) {
    term = term * step;
    r += term;
  }
  return r;
}

TruncPoly ominus(const TruncPoly& p, const TruncPoly& q) { return oplus(p, ominus(q)); }

namespace {

Integer binomial(int n, int k) {
  if (k < 0 || k > n) return 0;
  Integer r = 1;
  for (int i = 1; i <= k; ++i) r = r * (n - k + i) / i;
  return r;
}

}  // namespace

TruncPoly substitute_mobius(const TruncPoly& p, const BetaPoly& a, const BetaPoly& b) {
  const int D = p.max_deg();
  std::vector<BetaPoly> apow(D + 1), bpow(D + 1);
  apow[0] = bpow[0] = 1;
  for (int k = 1; k <= D; ++k) {
    apow[k] = apow[k - 1] * a;
    bpow[k] = bpow[k - 1] * b;
  }
  TruncPoly cur = p;
  for (int v = 0; v < p.n_vars(); ++v) {
    TruncPoly next(p.n_vars(), D);
    for (const auto& [e, c] : cur.terms()) {
      int ev = v < static_cast<int>(e.size()) ? e[v] : 0;
      if (ev == 0) {
        next.add_term(e, c);
        continue;
      }
      int room = D - total_degree(e);
      // x^ev -> a^ev x^ev sum_j C(ev+j-1, j) b^j x^j
      BetaPoly base = c * apow[ev];
      for (int j = 0; j <= room; ++j) {
        Exponents f = e;
        f[v] = static_cast<std::uint8_t>(ev + j);
        BetaPoly t = base * bpow[j];
        t *= binomial(ev + j - 1, j);
        next.add_term(std::move(f), t);
      }
    }
    cur = std::move(next);
  }
  return cur;
}

TruncPoly substitute_var(const TruncPoly& p, int i, const TruncPoly& q) {
  if (i < 1 || i > p.n_vars()) throw Error("variable index out of range");
  if (q.n_vars() != p.n_vars() || q.max_deg() != p.max_deg())
    throw Error("substituted series lives in a different truncated ring");
  const std::size_t v = static_cast<std::size_t>(i - 1);
  // group terms by the exponent of x_i
  std::map<int, TruncPoly> groups;
  for (const auto& [e, c] : p.terms()) {
    int ev = v < e.size() ? e[v] : 0;
    Exponents rest = e;
    if (v < rest.size()) rest[v] = 0;
    groups.try_emplace(ev, p.n_vars(), p.max_deg()).first->second.add_term(std::move(rest), c);
  }
  TruncPoly r(p.n_vars(), p.max_deg());
  TruncPoly qpow = TruncPoly::constant(p.n_vars(), p.max_deg(), 1);
  int have = 0;
  for (const auto& [ev, g] : groups) {
    while (have < ev) {
      qpow = qpow * q;
      ++have;
    }
    r += g * qpow;
  }
  return r;
}

TruncPoly rename_vars(const TruncPoly& p, int n_new, const std::vector<int>& target) {
  if (static_cast<int>(target.size()) < p.n_vars()) throw Error("variable map too short");
  TruncPoly r(n_new, p.max_deg());
  for (const auto& [e, c] : p.terms()) {
    Exponents f(static_cast<std::size_t>(n_new), 0);
    for (std::size_t k = 0; k < e.size(); ++k) {
      if (e[k] == 0) continue;
      int t = target[k];
      if (t < 1 || t > n_new) throw Error("variable map target out of range");
      f[t - 1] += e[k];
    }
    r.add_term(std::move(f), c);
  }
  return r;
}

TruncPoly set_vars_zero(const TruncPoly& p, const std::vector<int>& vars) {
  TruncPoly r(p.n_vars(), p.max_deg());
  for (const auto& [e, c] : p.terms()) {
    bool keep = std::none_of(vars.begin(), vars.end(), [&](int i) {
      return i >= 1 && i <= static_cast<int>(e.size()) && e[i - 1] != 0;
    });
    if (keep) r.add_term(e, c);
  }
  return r;
}

TruncPoly truncate(const TruncPoly& p, int max_deg) {
  TruncPoly r(p.n_vars(), max_deg);
  for (const auto& [e, c] : p.terms()) r.add_term(e, c);
  return r;
}

TruncPoly specialize_beta(const TruncPoly& p, const Integer& c) {
  TruncPoly r(p.n_vars(), p.max_deg());
  for (const auto& [e, k] : p.terms()) r.add_term(e, BetaPoly(k.evaluate(c)));
  return r;
}

TruncPoly negate_beta(const TruncPoly& p) {
  TruncPoly r(p.n_vars(), p.max_deg());
  for (const auto& [e, k] : p.terms()) r.add_term(e, k.negated_beta());
  return r;
}

TruncPoly swap_adjacent_vars(const TruncPoly& p, int i) {
  if (i < 1 || i >= p.n_vars()) throw Error("swap index out of range");
  TruncPoly r(p.n_vars(), p.max_deg());
  for (const auto& [e, c] : p.terms()) {
    Exponents f = e;
    f.resize(std::max<std::size_t>(f.size(), static_cast<std::size_t>(i + 1)), 0);
    std::swap(f[i - 1], f[i]);
    r.add_term(std::move(f), c);
  }
  return r;
}

bool is_symmetric(const TruncPoly& p) {
  for (const auto& [e, c] : p.terms()) {
    for (int i = 1; i < p.n_vars(); ++i) {
      Exponents f = e;
      f.resize(std::max<std::size_t>(f.size(), static_cast<std::size_t>(i + 1)), 0);
      if (f[i - 1] == f[i]) continue;
      std::swap(f[i - 1], f[i]);
      if (p.coeff(f) != c) return false;
    }
  }
  return true;
}

namespace {

// Calls f(positions) for every increasing tuple of k positions in [0, n).
template <class F>
void for_each_subset(int n, int k, F&& f) {
  std::vector<int> pos(static_cast<std::size_t>(k));
  std::iota(pos.begin(), pos.end(), 0);
  if (k > n) return;
  while (true) {
    f(pos);
    int j = k - 1;
    while (j >= 0 && pos[j] == n - k + j) --j;
    if (j < 0) return;
    ++pos[j];
    for (int t = j + 1; t < k; ++t) pos[t] = pos[t - 1] + 1;
  }
}

}  // namespace

bool is_quasisymmetric(const TruncPoly& p) {
  std::map<Exponents, BetaPoly> patterns;
  for (const auto& [e, c] : p.terms()) {
    Exponents a;
    for (auto x : e)
      if (x != 0) a.push_back(x);
    auto [it, fresh] = patterns.try_emplace(a, c);
    if (!fresh && it->second != c) return false;
  }
  for (const auto& [a, c] : patterns) {
    bool ok = true;
    for_each_subset(p.n_vars(), static_cast<int>(a.size()), [&](const std::vector<int>& pos) {
      if (!ok) return;
      Exponents e(static_cast<std::size_t>(p.n_vars()), 0);
      for (std::size_t k = 0; k < pos.size(); ++k) e[pos[k]] = a[k];
      if (p.coeff(e) != c) ok = false;
    });
    if (!ok) return false;
  }
  return true;
}

bool is_graded_homogeneous(const TruncPoly& p) {
  bool seen = false;
  int degree = 0;
  for (const auto& [e, c] : p.terms()) {
    int d = total_degree(e);
    for (std::size_t k = 0; k < c.coeffs().size(); ++k) {
      if (c.coeffs()[k] == 0) continue;
      int g = d - static_cast<int>(k);
      if (!seen) {
        degree = g;
        seen = true;
      } else if (g != degree) {
        return false;
      }
    }
  }
  return true;
}

}  // namespace grothkit
