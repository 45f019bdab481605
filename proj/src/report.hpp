#pragma once

#include <json.hpp>

#include "density.hpp"
#include "factor.hpp"
#include "family.hpp"
#include "galois.hpp"
#include "orbit.hpp"

namespace arbor::report {

using nlohmann::json;

/// Big integers always travel as decimal strings.
json big(const Int& x);

json family_info(const QuadraticFamily& family, const FactorBudget& budget);
json bound_constants(const BoundConstants& k);
json nphi(const QuadraticFamily& family, const HallLangConstants& hl, const NphiBound& bound);
json map(const SpecializedMap& m);
/// One JSON object per line: {n, value, bits}.
std::string orbit_lines(const std::vector<Int>& values, std::size_t first_index);
json critical_orbit(const SpecializedMap& m, const CriticalOrbit& orbit);
json stability(const StabilityReport& r);
json certificate(const MaximalityCertificate& c);
json tower(const TowerReport& r);
json factorization(const Factorization& f);
json decomposition(const SquareFreeDecomposition& d);
json primitive_divisors(const PrimitiveDivisorReport& r);
json curve(const CurveModel& model);
json density(const DensityCurve& curve);

}  // namespace arbor::report
