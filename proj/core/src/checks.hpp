#pragma once

#include "grothkit/harness.hpp"
#include "grothkit/posets.hpp"
#include "grothkit/ppart.hpp"
#include "grothkit/shapes.hpp"

#include <functional>
#include <string>
#include <vector>

namespace grothkit::checks {

void add_ppart_checks(std::vector<RegisteredCheck>& out);
void add_qsym_checks(std::vector<RegisteredCheck>& out);
void add_shapes_checks(std::vector<RegisteredCheck>& out);
void add_operators_checks(std::vector<RegisteredCheck>& out);

// Shared helpers for the check bodies.

// Every labeled poset class on 0..max_size elements.
void for_each_poset_class(int max_size, const std::function<void(const LabeledPoset&)>& fn);

// acc += c * x, dropping zero entries.
void add_scaled(MCoeffs& acc, const MCoeffs& x, const BetaPoly& c);
MCoeffs without_zeros(MCoeffs c);
Json m_coeffs_json(const MCoeffs& c);
bool expect_m_equal(CheckContext& ctx, const MCoeffs& lhs, const MCoeffs& rhs, const std::function<Json()>& inputs);

Json shape_json(const SkewShape& s);
Json partition_json(const Partition& p);

// Strict skew shapes lambda/mu with |lambda| <= max_size (mu strict, contained in lambda).
std::vector<SkewShape> strict_skew_shapes(int max_size);
// Ordinary skew shapes lambda/mu with |lambda| <= max_size.
std::vector<SkewShape> skew_shapes(int max_size);

}  // namespace grothkit::checks
