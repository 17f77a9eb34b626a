#include "checks.hpp"
#include "grothkit/qsym.hpp"

#include <cstdlib>
#include <set>
#include <string>

namespace grothkit::checks {

namespace {

Json shape_input(const SkewShape& s, const char* family) {
  return Json{{"shape", shape_json(s)}, {"family", family}};
}

void cancellation_gq(CheckContext& ctx) {
  const int n = ctx.param("n_vars"), d = ctx.param("max_deg");
  if (n < 2) throw Error("cancellation needs at least two variables");
  const TruncPoly t_inverse = ominus(TruncPoly::var(n, d, 1));
  for (const auto& s : strict_skew_shapes(ctx.param("max_size"))) {
    for (const char* family : {"GP", "GQ"}) {
      TruncPoly f = family[1] == 'P' ? grothendieck_GP(s, n, d) : grothendieck_GQ(s, n, d);
      ctx.expect_equal(substitute_var(f, 2, t_inverse), set_vars_zero(f, {1, 2}),
                       [&] { return shape_input(s, family); });
    }
  }
}

void skew_symmetry(CheckContext& ctx) {
  const int n = ctx.param("n_vars"), d = ctx.param("max_deg");
  for (const auto& s : strict_skew_shapes(ctx.param("max_size"))) {
    if (s.size() == 0) continue;
    for (const char* family : {"GP", "GQ"}) {
      TruncPoly f = family[1] == 'P' ? grothendieck_GP(s, n, d) : grothendieck_GQ(s, n, d);
      ctx.expect(is_symmetric(f), [&] {
        Json j = shape_input(s, family);
        j["poly"] = f.str();
        return j;
      });
    }
  }
}

// Skew GP and GQ lie in the span of the straight-shape functions with integral coefficients.
void skew_span(CheckContext& ctx) {
  const int d = ctx.param("max_deg");
  for (const auto& s : strict_skew_shapes(ctx.param("max_size"))) {
    for (Basis b : {Basis::GP, Basis::GQ}) {
      MCoeffs c = b == Basis::GP ? gp_m_coeffs(s, d) : gq_m_coeffs(s, d);
      std::string error;
      bool integral = true;
      try {
        for (const auto& [i, v] : expand_m_coeffs(c, d, b).terms) integral = integral && v.is_integral();
      } catch (const Error& ex) {
        error = ex.what();
      }
      ctx.expect(error.empty() && integral, [&] {
        Json j = shape_input(s, basis_name(b).c_str());
        j["error"] = error.empty() ? "non-integral coefficient" : error;
        return j;
      });
    }
  }
}

void omega_g_transpose(CheckContext& ctx) {
  const int d = ctx.param("max_deg");
  const int n = d;
  for (const auto& s : skew_shapes(ctx.param("max_size"))) {
    BasisExpansion l_exp = expand_m_coeffs(g_m_coeffs(s, d), d, Basis::L);
    TruncPoly rhs = substitute_mobius(grothendieck_G(conjugate(s), n, d), BetaPoly(1), BetaPoly::beta());
    ctx.expect_equal(omega(l_exp, n, d), rhs, [&] { return Json{{"shape", shape_json(s)}}; });
  }
}

void delta_staircase(CheckContext& ctx) {
  const int d = ctx.param("max_deg");
  for (int k = 1; k <= ctx.param("max_n"); ++k) {
    SkewShape s{staircase(k), {}};
    expect_m_equal(ctx, gp_m_coeffs(s, d), g_m_coeffs(s, d), [&] { return Json{{"shape", shape_json(s)}}; });
  }
}

// Predicted GP coefficients of GQ_mu: add at most one box per row, keeping strictness
// and the length; the box in row i sits in shifted column i + mu_i.
BasisExpansion predicted_gq_in_gp(const Partition& mu, int max_deg) {
  BasisExpansion out{Basis::GP, {}, max_deg};
  const int len = static_cast<int>(mu.size());
  for (unsigned mask = 0; mask < (1u << len); ++mask) {
    Partition lam = mu;
    std::set<int> columns;
    int added = 0;
    for (int i = 0; i < len; ++i) {
      if (!(mask & (1u << i))) continue;
      ++lam[i];
      ++added;
      columns.insert(i + 1 + mu[i]);
    }
    if (!is_strict(lam) || partition_size(lam) > max_deg) continue;
    int sign = (static_cast<int>(columns.size()) + added) % 2 ? -1 : 1;
    out.add(lam, BetaPoly::beta(added, (Integer(1) << (len - added)) * sign));
  }
  return out;
}

void gq_to_gp(CheckContext& ctx) {
  const int extra = ctx.param("extra_deg");
  for (const auto& mu : strict_partitions_up_to(ctx.param("max_size"))) {
    const int d = partition_size(mu) + extra;
    BasisExpansion computed = expand_m_coeffs(gq_m_coeffs({mu, {}}, d), d, Basis::GP);
    ctx.expect_equal(computed, predicted_gq_in_gp(mu, d), [&] { return Json{{"mu", partition_json(mu)}}; });
  }
  ctx.note("consistent up to degree |mu|+" + std::to_string(extra));
}

void positivity(CheckContext& ctx) {
  const int extra = ctx.param("extra_deg");
  for (const auto& s : strict_skew_shapes(ctx.param("max_size"))) {
    const int d = partition_size(s.outer) + extra;
    for (Basis b : {Basis::GP, Basis::GQ}) {
      BasisExpansion e = expand_m_coeffs(b == Basis::GP ? gp_m_coeffs(s, d) : gq_m_coeffs(s, d), d, b);
      bool ok = true;
      for (const auto& [i, v] : e.terms) ok = ok && v.is_integral() && v.num().nonnegative();
      ctx.expect(ok, [&] {
        Json j = shape_input(s, basis_name(b).c_str());
        j["expansion"] = expansion_str(e);
        return j;
      });
    }
  }
  ctx.note("consistent up to degree |lambda|+" + std::to_string(extra));
}

// nu = (m+k-1, m+k-3, ..., |m-k|+1) for the rectangle (m^k).
Partition dewitt_partner(int m, int k) {
  Partition nu;
  for (int part = m + k - 1; part >= std::abs(m - k) + 1; part -= 2) nu.push_back(part);
  return nu;
}

void dewitt(CheckContext& ctx) {
  const int extra = ctx.param("extra_deg");
  for (int m = 1; m <= ctx.param("max_m"); ++m) {
    for (int k = 1; k <= ctx.param("max_k"); ++k) {
      const int d = m * k + extra;
      SkewShape rect{Partition(static_cast<std::size_t>(k), m), {}};
      Partition nu = dewitt_partner(m, k);
      expect_m_equal(ctx, gs_m_coeffs(rect, d), gq_m_coeffs({nu, {}}, d), [&] {
        return Json{{"rectangle", shape_json(rect)}, {"nu", partition_json(nu)}, {"max_deg", d}};
      });
    }
  }
  ctx.note("consistent up to degree mk+" + std::to_string(extra));
}

}  // namespace

void add_shapes_checks(std::vector<RegisteredCheck>& out) {
  out.push_back({{"cancellation-GQ", "skew GP and GQ satisfy the (t, -t) cancellation law",
                  "f(t, (-)t, x3, ...) = f(x3, ...) for f = GP_s and GQ_s",
                  {{"max_size", 5}, {"max_deg", 5}, {"n_vars", 5}}},
                 cancellation_gq});
  out.push_back({{"skew-symmetry", "skew GP and GQ are symmetric", "GP_s and GQ_s are symmetric for shifted skew s",
                  {{"max_size", 6}, {"max_deg", 6}, {"n_vars", 6}}},
                 skew_symmetry});
  out.push_back({{"skew-span", "skew GP and GQ expand integrally in GP and GQ",
                  "GP_s in the Z[b]-span of GP_lambda, GQ_s in the Z[b]-span of GQ_lambda",
                  {{"max_size", 5}, {"max_deg", 5}}},
                 skew_span});
  out.push_back({{"omega-G-transpose", "omega on stable Grothendieck functions",
                  "omega(G_s) = G_(s^t)(x/(1-bx))", {{"max_size", 5}, {"max_deg", 5}}},
                 omega_g_transpose});
  out.push_back({{"delta-staircase", "GP and G agree on staircases", "GP_(n,...,1) = G_(n,...,1)",
                  {{"max_n", 3}, {"max_deg", 6}}},
                 delta_staircase});
  out.push_back({{"gq-to-gp-conjecture", "GQ in the GP basis by one-box-per-row strips",
                  "GQ_mu = 2^l(mu) sum over lambda of (-1)^c(lambda/mu) (-b/2)^|lambda/mu| GP_lambda",
                  {{"max_size", 5}, {"extra_deg", 3}},
                  Expectation::Conjecture},
                 gq_to_gp});
  out.push_back({{"gq-gp-positivity-conjecture", "skew GP and GQ expand with nonnegative coefficients",
                  "GP_s in sum over nu of Z>=0[b] GP_nu, same for GQ",
                  {{"max_size", 5}, {"extra_deg", 2}},
                  Expectation::Conjecture},
                 positivity});
  out.push_back({{"dewitt-conjecture", "GS of a rectangle is a GQ function",
                  "GS_(m^k) = GQ_(m+k-1, m+k-3, ..., |m-k|+1)",
                  {{"max_m", 2}, {"max_k", 2}, {"extra_deg", 3}},
                  Expectation::Conjecture},
                 dewitt});
}

}  // namespace grothkit::checks
