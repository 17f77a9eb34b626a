#include "grothkit/operators.hpp"

#include <algorithm>
#include <cstdlib>
#include <functional>
#include <set>
#include <sstream>

namespace grothkit {

SPVector::SPVector(int n_vars, int max_deg, int max_size, int max_part)
    : n_(n_vars), d_(max_deg), max_size_(max_size), max_part_(max_part) {}

SPVector SPVector::basis(const Partition& mu, int n_vars, int max_deg, int max_size, int max_part) {
  if (!is_strict(mu)) throw Error("not a strict partition: " + partition_str(mu));
  SPVector v(n_vars, max_deg, max_size, max_part);
  v.add(mu, TruncPoly::constant(n_vars, max_deg, 1));
  return v;
}

TruncPoly SPVector::coeff(const Partition& nu) const {
  auto it = terms_.find(nu);
  return it == terms_.end() ? TruncPoly(n_, d_) : it->second;
}

void SPVector::add(const Partition& nu, const TruncPoly& c) {
  if (c.is_zero()) return;
  if (partition_size(nu) > max_size_ || (!nu.empty() && nu.front() > max_part_)) {
    overflow_ = true;
    return;
  }
  auto [it, inserted] = terms_.try_emplace(nu, c);
  if (!inserted) {
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

void SPVector::restrict_to(const Partition& outer) {
  std::erase_if(terms_, [&](const auto& kv) { return !contains(outer, kv.first); });
}

SPVector SPVector::empty_like() const {
  SPVector r(n_, d_, max_size_, max_part_);
  r.overflow_ = overflow_;
  return r;
}

std::string SPVector::str() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [nu, c] : terms_) {
    os << (first ? "" : " + ") << "[" << c.str() << "]*" << partition_str(nu);
    first = false;
  }
  if (overflow_) os << " (overflow)";
  return os.str();
}

std::vector<int> removable_diagonals(const Partition& mu) {
  std::vector<int> r;
  for (std::size_t i = 0; i < mu.size(); ++i) {
    int next = i + 1 < mu.size() ? mu[i + 1] : 0;
    if (mu[i] - 1 > next || mu[i] == 1) r.push_back(mu[i] - 1);
  }
  return r;
}

std::vector<int> addable_diagonals(const Partition& mu) {
  std::vector<int> r;
  for (std::size_t i = 0; i < mu.size(); ++i)
    if (i == 0 || mu[i] + 1 < mu[i - 1]) r.push_back(mu[i]);
  if (mu.empty() || mu.back() > 1) r.push_back(0);
  return r;
}

Partition add_box(const Partition& mu, int diagonal) {
  Partition nu = mu;
  if (diagonal == 0 && (mu.empty() || mu.back() > 1)) {
    nu.push_back(1);
    return nu;
  }
  for (std::size_t i = 0; i < mu.size(); ++i) {
    if (mu[i] == diagonal && (i == 0 || mu[i] + 1 < mu[i - 1])) {
      ++nu[i];
      return nu;
    }
  }
  throw Error("no addable box on diagonal " + std::to_string(diagonal) + " of " + partition_str(mu));
}

Partition remove_box(const Partition& mu, int diagonal) {
  Partition nu = mu;
  for (std::size_t i = 0; i < mu.size(); ++i) {
    int next = i + 1 < mu.size() ? mu[i + 1] : 0;
    if (mu[i] - 1 == diagonal && (mu[i] - 1 > next || mu[i] == 1)) {
      if (--nu[i] == 0) nu.pop_back();
      return nu;
    }
  }
  throw Error("no removable box on diagonal " + std::to_string(diagonal) + " of " + partition_str(mu));
}

namespace {

bool has(const std::vector<int>& v, int x) { return std::find(v.begin(), v.end(), x) != v.end(); }

}  // namespace

SPVector apply_a(int r, const SPVector& v) {
  if (r < 0) throw Error("diagonal index must be nonnegative");
  SPVector out = v.empty_like();
  for (const auto& [mu, c] : v.terms()) {
    bool rem = has(removable_diagonals(mu), r);
    bool addable = has(addable_diagonals(mu), r);
    if (rem && addable) throw Error("diagonal with both addable and removable box in " + partition_str(mu));
    if (rem) {
      out.add(mu, c * BetaPoly::beta());
    } else if (addable) {
      Partition nu = add_box(mu, r);
      if (!is_strict(nu)) throw Error("box addition left strict partitions: " + partition_str(nu));
      out.add(nu, c);
    }
  }
  return out;
}

SPVector apply_A(int r, const TruncPoly& xp, const SPVector& v) {
  SPVector out = v;
  SPVector moved = apply_a(r, v);
  if (moved.overflow()) out.mark_overflow();
  for (const auto& [nu, c] : moved.terms()) out.add(nu, xp * c);
  return out;
}

SPVector apply_P(int n, const TruncPoly& xp, const SPVector& v) {
  if (n < 0) throw Error("operator index must be nonnegative");
  SPVector out = v;
  for (int r = n; r >= 1; --r) out = apply_A(r, xp, out);
  out = apply_A(0, xp, out);
  for (int r = 1; r <= n; ++r) out = apply_A(r, xp, out);
  return out;
}

SPVector apply_Q(int n, const TruncPoly& xp, const SPVector& v) {
  if (n < 0) throw Error("operator index must be nonnegative");
  SPVector out = v;
  for (int r = n; r >= 1; --r) out = apply_A(r, xp, out);
  out = apply_A(0, xp, out);
  out = apply_A(0, xp, out);
  for (int r = 1; r <= n; ++r) out = apply_A(r, xp, out);
  return out;
}

namespace {

using RowOperator = SPVector (*)(int, const TruncPoly&, const SPVector&);

TruncPoly slashslash(RowOperator op, const Partition& lambda, const Partition& mu, int n_vars, int max_deg) {
  if (!is_strict(lambda) || !is_strict(mu)) throw Error("strict partitions required");
  if (!contains(lambda, mu)) throw Error(partition_str(mu) + " is not contained in " + partition_str(lambda));
  const int n = lambda.empty() ? 0 : std::max(lambda.front(), static_cast<int>(lambda.size()));
  SPVector v = SPVector::basis(mu, n_vars, max_deg, partition_size(lambda), n);
  for (int i = 1; i <= n_vars; ++i) {
    v = op(n, TruncPoly::var(n_vars, max_deg, i), v);
    v.restrict_to(lambda);
  }
  return v.coeff(lambda);
}

}  // namespace

TruncPoly gp_slashslash(const Partition& lambda, const Partition& mu, int n_vars, int max_deg) {
  return slashslash(&apply_P, lambda, mu, n_vars, max_deg);
}

TruncPoly gq_slashslash(const Partition& lambda, const Partition& mu, int n_vars, int max_deg) {
  return slashslash(&apply_Q, lambda, mu, n_vars, max_deg);
}

std::vector<std::pair<Partition, BetaPoly>> strip_sum(const Partition& lambda, const Partition& mu) {
  if (!is_strict(lambda) || !is_strict(mu)) throw Error("strict partitions required");
  if (!contains(lambda, mu)) throw Error(partition_str(mu) + " is not contained in " + partition_str(lambda));
  // removable boxes as (row, end column) in shifted coordinates
  std::set<std::pair<int, int>> rem;
  for (std::size_t i = 0; i < mu.size(); ++i) {
    int next = i + 1 < mu.size() ? mu[i + 1] : 0;
    if (mu[i] - 1 > next || mu[i] == 1) rem.emplace(static_cast<int>(i), static_cast<int>(i) + mu[i] - 1);
  }
  std::vector<std::pair<Partition, BetaPoly>> out;
  for (const Partition& nu : strict_subpartitions(mu)) {
    bool ok = true;
    for (std::size_t i = 0; i < mu.size() && ok; ++i) {
      int lo = i < nu.size() ? nu[i] : 0;
      for (int k = lo; k < mu[i] && ok; ++k)
        ok = rem.count({static_cast<int>(i), static_cast<int>(i) + k}) > 0;
    }
    if (ok) out.emplace_back(nu, BetaPoly::beta(partition_size(mu) - partition_size(nu)));
  }
  std::stable_sort(out.begin(), out.end(),
                   [](const auto& a, const auto& b) { return partition_size(a.first) > partition_size(b.first); });
  return out;
}

namespace {

struct Factor {
  int diagonal;
  const TruncPoly* arg;
};

// Applies the product f_1 f_2 ... f_k, rightmost first.
SPVector apply_word(const std::vector<Factor>& word, SPVector v) {
  for (auto it = word.rbegin(); it != word.rend(); ++it) v = apply_A(it->diagonal, *it->arg, v);
  return v;
}

std::vector<Factor> p_word(int n, const TruncPoly& x, bool doubled) {
  std::vector<Factor> w;
  for (int r = n; r >= 1; --r) w.push_back({r, &x});
  w.push_back({0, &x});
  if (doubled) w.push_back({0, &x});
  for (int r = 1; r <= n; ++r) w.push_back({r, &x});
  return w;
}

std::vector<Factor> concat(std::vector<Factor> a, const std::vector<Factor>& b) {
  a.insert(a.end(), b.begin(), b.end());
  return a;
}

}  // namespace

YangBaxterReport check_yang_baxter(int bound_size, int bound_part, int formal_deg) {
  const TruncPoly x = TruncPoly::var(2, formal_deg, 1);
  const TruncPoly y = TruncPoly::var(2, formal_deg, 2);
  const TruncPoly x_plus_y = oplus(x, y);
  const TruncPoly y_minus_x = ominus(y, x);
  const TruncPoly x_minus_y = ominus(x, y);
  constexpr int kMaxOperatorIndex = 3;
  // room for every box the longest word can add
  const int slack = 4 * kMaxOperatorIndex + 2;
  const int top = bound_part + 1;

  struct Relation {
    std::string name;
    std::vector<Factor> lhs;
    std::vector<Factor> rhs;
  };
  std::vector<Relation> relations;
  for (int i = 0; i <= top; ++i)
    for (int j = 0; j <= top; ++j)
      if (std::abs(i - j) > 1)
        relations.push_back({"(a) i=" + std::to_string(i) + " j=" + std::to_string(j), {{i, &x}, {j, &y}},
                             {{j, &y}, {i, &x}}});
  for (int i = 0; i <= top; ++i)
    relations.push_back({"(b) i=" + std::to_string(i), {{i, &x}, {i, &y}}, {{i, &x_plus_y}}});
  for (int i = 1; i <= top; ++i)
    relations.push_back({"(c) i=" + std::to_string(i), {{i + 1, &x}, {i, &x_plus_y}, {i + 1, &y}},
                         {{i, &y}, {i + 1, &x_plus_y}, {i, &x}}});
  relations.push_back({"(d)", {{0, &x}, {1, &x_plus_y}, {0, &y}, {1, &y_minus_x}},
                       {{1, &y_minus_x}, {0, &y}, {1, &x_plus_y}, {0, &x}}});
  relations.push_back({"four-factor w=x z=y", {{0, &x_minus_y}, {1, &x}, {0, &x_plus_y}, {1, &y}},
                       {{1, &y}, {0, &x_plus_y}, {1, &x}, {0, &x_minus_y}}});
  for (int n = 1; n <= kMaxOperatorIndex; ++n) {
    for (bool doubled : {false, true}) {
      std::string name = std::string(doubled ? "Q" : "P") + std::to_string(n) + " commute";
      relations.push_back({name, concat(p_word(n, x, doubled), p_word(n, y, doubled)),
                           concat(p_word(n, y, doubled), p_word(n, x, doubled))});
    }
  }

  YangBaxterReport report;
  for (int size = 0; size <= bound_size; ++size) {
    for (const Partition& mu : strict_partitions_of(size)) {
      if (!mu.empty() && mu.front() > bound_part) continue;
      SPVector start = SPVector::basis(mu, 2, formal_deg, bound_size + slack, bound_part + slack);
      for (const Relation& rel : relations) {
        ++report.instances;
        SPVector lhs = apply_word(rel.lhs, start);
        SPVector rhs = apply_word(rel.rhs, start);
        if (lhs.overflow() || rhs.overflow() || !(lhs == rhs))
          report.failures.push_back({rel.name, mu, lhs.str(), rhs.str()});
      }
    }
  }
  return report;
}

}  // namespace grothkit
