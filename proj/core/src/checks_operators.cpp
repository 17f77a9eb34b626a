#include "checks.hpp"
#include "grothkit/operators.hpp"

namespace grothkit::checks {

namespace {

Json pair_input(const Partition& lam, const Partition& mu, const char* family) {
  return Json{{"lambda", partition_json(lam)}, {"mu", partition_json(mu)}, {"family", family}};
}

void yang_baxter(CheckContext& ctx) {
  YangBaxterReport r = check_yang_baxter(ctx.param("max_size"), ctx.param("max_part"), ctx.param("formal_deg"));
  for (int i = static_cast<int>(r.failures.size()); i < r.instances; ++i) ctx.expect(true, {});
  for (const auto& f : r.failures) {
    ctx.expect(false, [&] {
      return Json{{"relation", f.relation}, {"witness", partition_json(f.witness)}, {"lhs", f.lhs}, {"rhs", f.rhs}};
    });
  }
}

void slashslash_crosscheck(CheckContext& ctx) {
  const int n = ctx.param("n_vars"), d = ctx.param("max_deg");
  for (const auto& lam : strict_partitions_up_to(ctx.param("max_size"))) {
    for (const auto& mu : strict_subpartitions(lam)) {
      for (const char* family : {"GP", "GQ"}) {
        const bool p = family[1] == 'P';
        TruncPoly lhs = p ? gp_slashslash(lam, mu, n, d) : gq_slashslash(lam, mu, n, d);
        TruncPoly rhs(n, d);
        for (const auto& [nu, w] : strip_sum(lam, mu)) {
          SkewShape s{lam, nu};
          rhs += (p ? grothendieck_GP(s, n, d) : grothendieck_GQ(s, n, d)) * w;
        }
        auto in = [&] { return pair_input(lam, mu, family); };
        ctx.expect_equal(lhs, rhs, in);
        ctx.expect(is_symmetric(lhs), in);
      }
    }
  }
}

void inclusion_exclusion(CheckContext& ctx) {
  const int n = ctx.param("n_vars"), d = ctx.param("max_deg");
  for (const auto& lam : strict_partitions_up_to(ctx.param("max_size"))) {
    for (const auto& mu : strict_subpartitions(lam)) {
      for (const char* family : {"GP", "GQ"}) {
        const bool p = family[1] == 'P';
        TruncPoly rhs(n, d);
        for (const auto& nu : strict_subpartitions(mu)) {
          int k = partition_size(mu) - partition_size(nu);
          TruncPoly term = p ? gp_slashslash(lam, nu, n, d) : gq_slashslash(lam, nu, n, d);
          rhs += term * BetaPoly::beta(k, k % 2 ? -1 : 1);
        }
        SkewShape s{lam, mu};
        TruncPoly lhs = p ? grothendieck_GP(s, n, d) : grothendieck_GQ(s, n, d);
        ctx.expect_equal(lhs, rhs, [&] { return pair_input(lam, mu, family); });
      }
    }
  }
}

}  // namespace

void add_operators_checks(std::vector<RegisteredCheck>& out) {
  out.push_back({{"yang-baxter", "local relations of the diagonal box-adding operators",
                  "A_i(x)A_i(y) = A_i(x(+)y), far commutation, braid-type relations, "
                  "A0(x)A1(x(+)y)A0(y)A1(y(-)x) reversed, P_n and Q_n commute",
                  {{"max_size", 8}, {"max_part", 6}, {"formal_deg", 3}}},
                 yang_baxter});
  out.push_back({{"gp-slashslash-crosscheck", "operator series against skew tableau functions",
                  "GQ_(lambda//mu) = sum over nu with mu/nu in Rem(mu) of b^|mu/nu| GQ_(lambda/nu), same for GP",
                  {{"max_size", 5}, {"max_deg", 5}, {"n_vars", 5}}},
                 slashslash_crosscheck});
  out.push_back({{"in-ex", "skew functions from operator series by inclusion-exclusion",
                  "GP_(lambda/mu) = sum over nu inside mu of (-b)^|mu/nu| GP_(lambda//nu), same for GQ",
                  {{"max_size", 5}, {"max_deg", 5}, {"n_vars", 5}}},
                 inclusion_exclusion});
}

}  // namespace grothkit::checks
