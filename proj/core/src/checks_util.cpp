#include "checks.hpp"

namespace grothkit::checks {

void for_each_poset_class(int max_size, const std::function<void(const LabeledPoset&)>& fn) {
  for (int m = 0; m <= max_size; ++m)
    for (const auto& p : labeled_poset_classes(m)) fn(p);
}

void add_scaled(MCoeffs& acc, const MCoeffs& x, const BetaPoly& c) {
  for (const auto& [a, v] : x) {
    BetaPoly& slot = acc[a];
    slot += v * c;
    if (slot.is_zero()) acc.erase(a);
  }
}

MCoeffs without_zeros(MCoeffs c) {
  std::erase_if(c, [](const auto& kv) { return kv.second.is_zero(); });
  return c;
}

Json m_coeffs_json(const MCoeffs& c) {
  Json j = Json::object();
  for (const auto& [a, v] : c)
    if (!v.is_zero()) j[a.str()] = v.str();
  return j;
}

bool expect_m_equal(CheckContext& ctx, const MCoeffs& lhs, const MCoeffs& rhs, const std::function<Json()>& inputs) {
  MCoeffs l = without_zeros(lhs), r = without_zeros(rhs);
  return ctx.expect(l == r, [&] {
    return Json{{"inputs", inputs()}, {"lhs", m_coeffs_json(l)}, {"rhs", m_coeffs_json(r)}};
  });
}

Json shape_json(const SkewShape& s) { return Json(s.str()); }

Json partition_json(const Partition& p) { return Json(partition_str(p)); }

std::vector<SkewShape> strict_skew_shapes(int max_size) {
  std::vector<SkewShape> out;
  for (const auto& lam : strict_partitions_up_to(max_size))
    for (const auto& mu : strict_subpartitions(lam)) out.push_back({lam, mu});
  return out;
}

std::vector<SkewShape> skew_shapes(int max_size) {
  std::vector<SkewShape> out;
  for (int n = 0; n <= max_size; ++n)
    for (const auto& lam : partitions_of(n))
      for (const auto& mu : subpartitions(lam)) out.push_back({lam, mu});
  return out;
}

}  // namespace grothkit::checks
