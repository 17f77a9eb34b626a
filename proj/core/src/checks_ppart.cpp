#include "checks.hpp"
#include "grothkit/qsym.hpp"

namespace grothkit::checks {

namespace {

// Renumbers the bits of v that lie in s to the positions of s's elements in order.
Mask compress(Mask v, Mask s) {
  Mask out = 0;
  int k = 0;
  for (int i = 0; i < 64; ++i) {
    if (!(s & bit(i))) continue;
    if (v & bit(i)) out |= bit(k);
    ++k;
  }
  return out;
}

// All submasks of m, including 0 and m.
std::vector<Mask> submasks(Mask m) {
  std::vector<Mask> out;
  for (Mask s = m;; s = (s - 1) & m) {
    out.push_back(s);
    if (s == 0) break;
  }
  return out;
}

Json poset_input(const LabeledPoset& p, Mask v = 0) {
  Json j{{"poset", to_json(p)}};
  if (v) j["V"] = v;
  return j;
}

// Sum over linear multiextensions w of b^(len(w) - |P|) times the basis element named by w.
template <typename IndexOf>
MCoeffs multiextension_sum(const LabeledPoset& p, int max_deg, IndexOf index_of,
                           MCoeffs (*basis)(const Composition&, int)) {
  std::map<Composition, BetaPoly> weights;
  for_each_multiextension(p, max_deg, [&](const Word& w) {
    weights[index_of(w)] += BetaPoly::beta(static_cast<int>(w.size()) - p.size());
  });
  MCoeffs total;
  for (const auto& [a, c] : weights) add_scaled(total, basis(a, max_deg), c);
  return total;
}

Composition positions_to_comp(int len, const std::vector<int>& pos) {
  return from_subset(len, std::set<int>(pos.begin(), pos.end()));
}

void fundamental_plain(CheckContext& ctx) {
  const int n = ctx.param("n_vars"), d = ctx.param("max_deg");
  for_each_poset_class(ctx.param("max_poset"), [&](const LabeledPoset& p) {
    MCoeffs via_words = multiextension_sum(
        p, d, [&](const Word& w) { return positions_to_comp(static_cast<int>(w.size()), word_descents(p, w)); },
        &m_coeffs_L);
    TruncPoly direct = gamma_enumerator_naive(p, n, d);
    ctx.expect_equal(direct, from_m_coeffs(via_words, n, d), [&] { return poset_input(p); });
    expect_m_equal(ctx, gamma_m_coeffs(p, d), via_words, [&] { return poset_input(p); });
  });
}

void fundamental_enriched(CheckContext& ctx) {
  const int n = ctx.param("n_vars"), d = ctx.param("max_deg");
  for_each_poset_class(ctx.param("max_poset"), [&](const LabeledPoset& p) {
    MCoeffs via_words = multiextension_sum(
        p, d, [&](const Word& w) { return positions_to_comp(static_cast<int>(w.size()), word_peaks(p, w)); },
        &m_coeffs_K);
    TruncPoly direct = omega_enumerator_naive(p, 0, n, d);
    ctx.expect_equal(direct, from_m_coeffs(via_words, n, d), [&] { return poset_input(p); });
    expect_m_equal(ctx, omega_m_coeffs(p, 0, d), via_words, [&] { return poset_input(p); });
  });
}

void product_rules(CheckContext& ctx) {
  const int n = ctx.param("n_vars"), d = ctx.param("max_deg"), total = ctx.param("max_poset");
  for (int a = 1; a < total; ++a) {
    for (const auto& p : labeled_poset_classes(a)) {
      for (int b = 1; a + b <= total; ++b) {
        for (const auto& q : labeled_poset_classes(b)) {
          LabeledPoset pq = disjoint_union(p, q);
          auto inputs = [&] { return Json{{"P", to_json(p)}, {"Q", to_json(q)}}; };
          ctx.expect_equal(gamma_enumerator(p, n, d) * gamma_enumerator(q, n, d), gamma_enumerator(pq, n, d),
                           inputs);
          for (Mask v : submasks(valleys(p))) {
            for (Mask w : submasks(valleys(q))) {
              Mask vw = v | (w << p.size());
              ctx.expect_equal(omega_enumerator(p, v, n, d) * omega_enumerator(q, w, n, d),
                               omega_enumerator(pq, vw, n, d), [&] {
                                 Json j = inputs();
                                 j["V"] = v;
                                 j["W"] = w;
                                 return j;
                               });
            }
          }
        }
      }
    }
  }
}

void coproduct_rules(CheckContext& ctx) {
  const int d = ctx.param("max_deg"), half = ctx.param("n_vars") / 2;
  const int n = 2 * half;
  std::vector<int> left, right;
  for (int i = 1; i <= half; ++i) {
    left.push_back(i);
    right.push_back(half + i);
  }
  auto split_product = [&](const TruncPoly& f, const TruncPoly& g) {
    return rename_vars(f, n, left) * rename_vars(g, n, right);
  };
  for_each_poset_class(ctx.param("max_poset"), [&](const LabeledPoset& p) {
    auto splits = coproduct_splits(p);
    TruncPoly rhs(n, d);
    for (const Split& s : splits) {
      BetaPoly w = BetaPoly::beta(popcount(s.lower & s.upper));
      rhs += split_product(gamma_enumerator(p.restrict(s.lower), half, d),
                           gamma_enumerator(p.restrict(s.upper), half, d)) *
             w;
    }
    ctx.expect_equal(gamma_enumerator(p, n, d), rhs, [&] { return poset_input(p); });
    for (Mask v : submasks(valleys(p))) {
      TruncPoly orhs(n, d);
      for (const Split& s : splits) {
        BetaPoly w = BetaPoly::beta(popcount(s.lower & s.upper));
        orhs += split_product(omega_enumerator(p.restrict(s.lower), compress(v, s.lower), half, d),
                              omega_enumerator(p.restrict(s.upper), compress(v, s.upper), half, d)) *
                w;
      }
      ctx.expect_equal(omega_enumerator(p, v, n, d), orhs, [&] { return poset_input(p, v); });
    }
  });
}

void doubling(CheckContext& ctx) {
  const int d = ctx.param("max_deg");
  for_each_poset_class(ctx.param("max_poset"), [&](const LabeledPoset& p) {
    for (Mask v_set : submasks(valleys(p))) {
      for (int v = 0; v < p.size(); ++v) {
        if (!(v_set & bit(v))) continue;
        MCoeffs rhs;
        add_scaled(rhs, omega_m_coeffs(p, v_set, d), 2);
        add_scaled(rhs, omega_m_coeffs(double_vertex(p, v), v_set, d), BetaPoly::beta());
        expect_m_equal(ctx, omega_m_coeffs(p, v_set & ~bit(v), d), rhs, [&] {
          Json j = poset_input(p, v_set);
          j["v"] = v;
          return j;
        });
      }
    }
  });
}

void valley_product(CheckContext& ctx) {
  const int d = ctx.param("max_deg");
  for_each_poset_class(ctx.param("max_poset"), [&](const LabeledPoset& p) {
    const Mask val = valleys(p);
    for (Mask v_set : submasks(val)) {
      const Mask u_set = val & ~v_set;
      MCoeffs rhs;
      for (Mask s : submasks(u_set)) {
        LabeledPoset q = p;
        for (int u = 0; u < p.size(); ++u)
          if (s & bit(u)) q = double_vertex(q, u);
        Integer two_pow = Integer(1) << popcount(u_set & ~s);
        add_scaled(rhs, omega_m_coeffs(q, val, d), BetaPoly::beta(popcount(s), two_pow));
      }
      expect_m_equal(ctx, omega_m_coeffs(p, v_set, d), rhs, [&] { return poset_input(p, v_set); });
    }
  });
}

void mirroring(CheckContext& ctx) {
  const int d = ctx.param("max_deg");
  for_each_poset_class(ctx.param("max_poset"), [&](const LabeledPoset& p) {
    const Mask all = p.ground();
    MCoeffs rhs;
    for (Mask i_set : submasks(all)) {
      for (Mask extra : submasks(i_set)) {
        Mask j_set = (all & ~i_set) | extra;
        add_scaled(rhs, gamma_m_coeffs(mirror(p, i_set, j_set), d), BetaPoly::beta(popcount(i_set & j_set)));
      }
    }
    expect_m_equal(ctx, omega_m_coeffs(p, 0, d), rhs, [&] { return poset_input(p); });
  });
}

}  // namespace

void add_ppart_checks(std::vector<RegisteredCheck>& out) {
  out.push_back({{"fundamental-lemma-plain", "set-valued enumerator equals the multiextension sum",
                  "Gamma(P) = sum over linear multiextensions w of b^(len(w)-|P|) L_Des(w)",
                  {{"max_poset", 4}, {"max_deg", 5}, {"n_vars", 5}}},
                 fundamental_plain});
  out.push_back({{"fundamental-lemma-enriched", "enriched enumerator equals the multiextension sum",
                  "Omega(P) = sum over linear multiextensions w of b^(len(w)-|P|) K_Peak(w)",
                  {{"max_poset", 4}, {"max_deg", 5}, {"n_vars", 5}}},
                 fundamental_enriched});
  out.push_back({{"product-rules", "enumerators are multiplicative on disjoint unions",
                  "Gamma(P)Gamma(Q) = Gamma(P+Q), Omega(P,V)Omega(Q,W) = Omega(P+Q,V+W)",
                  {{"max_poset", 4}, {"max_deg", 5}, {"n_vars", 4}}},
                 product_rules});
  out.push_back({{"coproduct-rules", "coproduct of enumerators over antichain splits",
                  "Gamma(P)(x,y) = sum over splits (S,T) of b^|S&T| Gamma(S)(x) Gamma(T)(y), same for Omega(P,V)",
                  {{"max_poset", 4}, {"max_deg", 5}, {"n_vars", 4}}},
                 coproduct_rules});
  out.push_back({{"doubling", "vertex doubling recurrence",
                  "Omega(P,V-v) = 2 Omega(P,V) + b Omega(D_v P, V) for v in V, V inside Val(P)",
                  {{"max_poset", 4}, {"max_deg", 5}}},
                 doubling});
  out.push_back({{"op-thm-valley-product", "valley product formula",
                  "Omega(P,V) = prod over u in Val(P)-V of (2 + b D_u) applied to Omega(P,Val(P))",
                  {{"max_poset", 4}, {"max_deg", 5}}},
                 valley_product});
  out.push_back({{"mirroring", "enriched enumerator as a sum of mirrored plain enumerators",
                  "Omega(P) = sum over I u J = P of b^|I&J| Gamma(M_IJ(P))",
                  {{"max_poset", 4}, {"max_deg", 5}}},
                 mirroring});
}

}  // namespace grothkit::checks
