#include "report.hpp"

namespace arbor::report {

json big(const Int& x) { return to_string(x); }

namespace {

json big_list(const std::vector<Int>& xs) {
  json out = json::array();
  for (const auto& x : xs) out.push_back(big(x));
  return out;
}

}  // namespace

json bound_constants(const BoundConstants& k) {
  return {{"A1", k.A1}, {"A2", k.A2}, {"A3", k.A3}, {"A4", k.A4}, {"B1", k.B1}, {"threshold", big(k.threshold)}};
}

json family_info(const QuadraticFamily& family, const FactorBudget& budget) {
  json out;
  out["gamma"] = family.gamma().to_csv();
  out["c"] = family.c().to_csv();
  out["c_minus_gamma"] = family.diff().to_csv();
  out["isotrivial"] = family.is_isotrivial();
  out["exceptional_polynomial"] = family.exceptional_polynomial().to_csv();
  if (family.is_isotrivial()) return out;
  out["deg_c_minus_gamma"] = family.diff_degree();
  out["m_phi"] = family.m_phi();
  out["constants"] = bound_constants(family.bound_constants());
  out["exceptional_set"] = big_list(family.exceptional_set(budget));
  return out;
}

json nphi(const QuadraticFamily& family, const HallLangConstants& hl, const NphiBound& b) {
  const auto k = family.bound_constants();
  json out = bound_constants(k);
  out["kappa1"] = hl.kappa1;
  out["kappa2"] = hl.kappa2;
  out["kappa3"] = hl.kappa3;
  out["kappa2_prime"] = b.kappa2_prime;
  out["kappa3_prime"] = b.kappa3_prime;
  out["a_min"] = big(b.a_min);
  out["x_min"] = b.x_min;
  out["M1"] = b.M[0];
  out["M2"] = b.M[1];
  out["M3"] = b.M[2];
  out["M4"] = b.M[3];
  out["M_phi"] = b.M_phi;
  out["n_phi"] = b.n_phi;
  return out;
}

json map(const SpecializedMap& m) {
  return {{"a", big(m.a)}, {"gamma_a", big(m.gamma_a)}, {"c_a", big(m.c_a)}, {"v_a", big(m.v())}};
}

std::string orbit_lines(const std::vector<Int>& values, std::size_t first_index) {
  std::string out;
  for (std::size_t i = 0; i < values.size(); ++i) {
    json line = {{"n", first_index + i}, {"value", big(values[i])}, {"bits", bit_length(values[i])}};
    out += line.dump();
    out += '\n';
  }
  return out;
}

json critical_orbit(const SpecializedMap& m, const CriticalOrbit& orbit) {
  return {{"map", map(m)}, {"values", big_list(orbit.values)}, {"nondegenerate", orbit.nondegenerate}};
}

json stability(const StabilityReport& r) {
  json squares = json::array();
  for (const auto& [n, root] : r.squares) squares.push_back({{"level", n}, {"root", big(root)}});
  json out = {{"depth", r.depth}, {"squares", squares}};
  if (auto n = r.first_square_level()) {
    out["verdict"] = "SquareFoundAt";
    out["level"] = *n;
  } else {
    out["verdict"] = "NoSquareUpTo";
    out["level"] = r.depth;
  }
  return out;
}

json certificate(const MaximalityCertificate& c) {
  return {{"level", c.level}, {"status", to_string(c.status)}, {"witness", big(c.witness)}};
}

json tower(const TowerReport& r) {
  json levels = json::array();
  for (const auto& c : r.levels) levels.push_back(certificate(c));
  return {{"levels", levels},
          {"summary", {{"CertifiedMaximal", r.certified}, {"Unknown", r.unknown}, {"FailedSquareOverQ", r.failed}}}};
}

json factorization(const Factorization& f) {
  json factors = json::array();
  for (const auto& [p, e] : f.factors) factors.push_back({big(p), e});
  return {{"sign", f.sign}, {"factors", factors}, {"cofactor", big(f.cofactor)}, {"complete", f.complete}};
}

json decomposition(const SquareFreeDecomposition& d) { return {{"e", d.e}, {"d", big(d.d)}, {"y", big(d.y)}}; }

json primitive_divisors(const PrimitiveDivisorReport& r) {
  json out = {{"level", r.level},
              {"method", r.method == DivisorMethod::Exact ? "Exact" : "Certificate"},
              {"primes", big_list(r.primes)},
              {"two_is_primitive", r.two_is_primitive},
              {"certified", r.certified},
              {"primes_complete", r.primes_complete}};
  if (r.method == DivisorMethod::Certificate) out["cofactor"] = big(r.cofactor);
  return out;
}

json curve(const CurveModel& model) {
  json coeffs = json::array();
  for (const auto& c : model.rhs.coeffs()) coeffs.push_back(big(c));
  return {{"level", model.level}, {"genus", model.genus}, {"rhs", coeffs}, {"equation", model.equation()}};
}

json density(const DensityCurve& curve) {
  json rows = json::array();
  for (const auto& c : curve.checkpoints) {
    rows.push_back({{"X", c.X}, {"primes_tested", c.primes_tested}, {"members", c.members}, {"proportion", c.proportion()}});
  }
  return {{"b", big(curve.b)}, {"checkpoints", rows}};
}

}  // namespace arbor::report
