#include "arbor/arbor.h"

#include <cstdlib>
#include <cstring>
#include <new>
#include <string>

#include "error.hpp"
#include "report.hpp"

struct arbor_family {
  arbor::QuadraticFamily family;
};

struct arbor_map {
  arbor::SpecializedMap map;
};

namespace {

using arbor::ErrorCode;
using arbor::report::json;

thread_local std::string g_last_error;

arbor_status to_status(ErrorCode code) {
  switch (code) {
    case ErrorCode::InvalidArgument: return ARBOR_E_INVALID_ARGUMENT;
    case ErrorCode::Parse: return ARBOR_E_PARSE;
    case ErrorCode::ZeroPolynomial: return ARBOR_E_ZERO_POLYNOMIAL;
    case ErrorCode::Isotrivial: return ARBOR_E_ISOTRIVIAL;
    case ErrorCode::DigitBudgetExceeded: return ARBOR_E_DIGIT_BUDGET;
    case ErrorCode::IncompleteFactorization: return ARBOR_E_INCOMPLETE_FACTORIZATION;
    case ErrorCode::PostCriticallyFinite: return ARBOR_E_POSTCRITICALLY_FINITE;
    case ErrorCode::PreconditionViolated: return ARBOR_E_PRECONDITION;
    case ErrorCode::SingularModel: return ARBOR_E_SINGULAR_MODEL;
    case ErrorCode::InvalidConstants: return ARBOR_E_INVALID_CONSTANTS;
    case ErrorCode::ZeroInput: return ARBOR_E_ZERO_INPUT;
  }
  return ARBOR_E_INTERNAL;
}

char* dup(const std::string& s) {
  char* out = static_cast<char*>(std::malloc(s.size() + 1));
  if (!out) throw std::bad_alloc();
  std::memcpy(out, s.c_str(), s.size() + 1);
  return out;
}

void emit(char** out, const json& j) { *out = dup(j.dump()); }

// Runs body, translating exceptions to status codes.
template <typename Body>
arbor_status guarded(Body&& body) {
  try {
    g_last_error.clear();
    body();
    return ARBOR_OK;
  } catch (const arbor::Error& e) {
    g_last_error = e.what();
    return to_status(e.code());
  } catch (const std::bad_alloc&) {
    g_last_error = "out of memory";
    return ARBOR_E_INTERNAL;
  } catch (const std::exception& e) {
    g_last_error = e.what();
    return ARBOR_E_INTERNAL;
  }
}

void require(bool ok, const char* what) {
  if (!ok) throw arbor::Error(ErrorCode::InvalidArgument, what);
}

arbor::FactorBudget factor_budget(const arbor_budget* b) {
  arbor::FactorBudget f;
  if (b) {
    f.trial_bound = b->trial_bound;
    f.rho_iters = b->rho_iters;
    f.seed = b->seed;
  }
  return f;
}

std::uint64_t max_bits(const arbor_budget* b) { return b ? b->max_bits : arbor::kDefaultMaxBits; }

template <typename Partial, typename Render>
void with_partial(char** out, Render&& render, const arbor::BudgetError<Partial>& e) {
  *out = dup(render(e.partial()));
  throw e;
}

}  // namespace

extern "C" {

const char* arbor_version(void) { return "0.1.0"; }

const char* arbor_status_name(arbor_status status) {
  switch (status) {
    case ARBOR_OK: return "Ok";
    case ARBOR_E_INVALID_ARGUMENT: return "InvalidArgument";
    case ARBOR_E_PARSE: return "Parse";
    case ARBOR_E_ZERO_POLYNOMIAL: return "ZeroPolynomial";
    case ARBOR_E_ISOTRIVIAL: return "Isotrivial";
    case ARBOR_E_DIGIT_BUDGET: return "DigitBudgetExceeded";
    case ARBOR_E_INCOMPLETE_FACTORIZATION: return "IncompleteFactorization";
    case ARBOR_E_POSTCRITICALLY_FINITE: return "PostCriticallyFinite";
    case ARBOR_E_PRECONDITION: return "PreconditionViolated";
    case ARBOR_E_SINGULAR_MODEL: return "SingularModel";
    case ARBOR_E_INVALID_CONSTANTS: return "InvalidConstants";
    case ARBOR_E_ZERO_INPUT: return "ZeroInput";
    case ARBOR_E_INTERNAL: return "Internal";
  }
  return "Unknown";
}

const char* arbor_last_error(void) { return g_last_error.c_str(); }

int arbor_is_budget_error(arbor_status status) {
  return status == ARBOR_E_DIGIT_BUDGET || status == ARBOR_E_INCOMPLETE_FACTORIZATION;
}

void arbor_string_free(char* s) { std::free(s); }

void arbor_budget_init(arbor_budget* budget) {
  if (!budget) return;
  const arbor::FactorBudget f;
  budget->max_bits = arbor::kDefaultMaxBits;
  budget->trial_bound = f.trial_bound;
  budget->rho_iters = f.rho_iters;
  budget->seed = f.seed;
}

void arbor_density_options_init(arbor_density_options* options) {
  if (!options) return;
  options->X = 1'000'000;
  options->checkpoints = nullptr;
  options->checkpoint_count = 0;
  options->shards = 1;
  options->threads = 1;
  options->segment_size = arbor::kDefaultSegmentSize;
  options->csv = 0;
}

arbor_status arbor_family_create(const char* gamma, const char* c, arbor_family** out) {
  return guarded([&] {
    require(gamma && c && out, "null argument");
    *out = new arbor_family{arbor::QuadraticFamily(arbor::IntPolynomial::parse(gamma), arbor::IntPolynomial::parse(c))};
  });
}

void arbor_family_destroy(arbor_family* family) { delete family; }

arbor_status arbor_family_specialize(const arbor_family* family, const char* a, arbor_map** out) {
  return guarded([&] {
    require(family && a && out, "null argument");
    *out = new arbor_map{family->family.specialize(arbor::parse_int(a))};
  });
}

void arbor_map_destroy(arbor_map* map) { delete map; }

arbor_status arbor_family_info(const arbor_family* family, const arbor_budget* budget, char** json_out) {
  return guarded([&] {
    require(family && json_out, "null argument");
    emit(json_out, arbor::report::family_info(family->family, factor_budget(budget)));
  });
}

arbor_status arbor_nphi_bound(const arbor_family* family, double kappa1, double kappa2, double kappa3,
                              char** json_out) {
  return guarded([&] {
    require(family && json_out, "null argument");
    const arbor::HallLangConstants hl{kappa1, kappa2, kappa3};
    emit(json_out, arbor::report::nphi(family->family, hl, family->family.nphi_bound(hl)));
  });
}

arbor_status arbor_index_bound(uint64_t n, const arbor_budget* budget, char** json_out) {
  return guarded([&] {
    require(json_out, "null argument");
    json j = {{"n", n}, {"exponent", arbor::report::big(arbor::index_bound_exponent(n))}};
    j["value"] = arbor::report::big(arbor::index_bound(n, max_bits(budget)));
    emit(json_out, j);
  });
}

arbor_status arbor_orbit(const arbor_map* map, const char* b, uint64_t depth, const arbor_budget* budget,
                         char** jsonl_out) {
  return guarded([&] {
    require(map && b && jsonl_out, "null argument");
    try {
      auto slice = arbor::orbit(map->map, arbor::parse_int(b), depth, max_bits(budget));
      *jsonl_out = dup(arbor::report::orbit_lines(slice.values, 0));
    } catch (const arbor::BudgetError<std::vector<arbor::Int>>& e) {
      with_partial(jsonl_out, [](const auto& v) { return arbor::report::orbit_lines(v, 0); }, e);
    }
  });
}

arbor_status arbor_critical_orbit(const arbor_map* map, uint64_t depth, const arbor_budget* budget,
                                  char** json_out) {
  return guarded([&] {
    require(map && json_out, "null argument");
    try {
      auto orbit = arbor::critical_orbit(map->map, depth, max_bits(budget));
      json j = arbor::report::critical_orbit(map->map, orbit);
      j["sigma_identity"] = arbor::sigma_orbit_identity(map->map, depth, max_bits(budget));
      j["postcritically_finite"] = arbor::is_postcritically_finite(map->map);
      emit(json_out, j);
    } catch (const arbor::BudgetError<std::vector<arbor::Int>>& e) {
      with_partial(
          json_out,
          [&](const auto& v) {
            arbor::CriticalOrbit partial;
            partial.values = v;
            return arbor::report::critical_orbit(map->map, partial).dump();
          },
          e);
    }
  });
}

arbor_status arbor_stability_scan(const arbor_map* map, uint64_t depth, const arbor_budget* budget, char** json_out) {
  return guarded([&] {
    require(map && json_out, "null argument");
    emit(json_out, arbor::report::stability(arbor::stability_scan(map->map, depth, max_bits(budget))));
  });
}

arbor_status arbor_certify_tower(const arbor_map* map, uint64_t from, uint64_t to, const arbor_budget* budget,
                                 char** json_out) {
  return guarded([&] {
    require(map && json_out, "null argument");
    try {
      emit(json_out, arbor::report::tower(arbor::certify_tower(map->map, from, to, max_bits(budget))));
    } catch (const arbor::BudgetError<arbor::TowerReport>& e) {
      with_partial(json_out, [](const auto& r) { return arbor::report::tower(r).dump(); }, e);
    }
  });
}

arbor_status arbor_primitive_divisors(const arbor_map* map, uint64_t level, const arbor_budget* budget,
                                      char** json_out) {
  return guarded([&] {
    require(map && json_out, "null argument");
    auto orbit = arbor::critical_orbit(map->map, level, max_bits(budget));
    json j = {{"level", level}, {"value", arbor::report::big(orbit.level(level))}};
    j["certificate"] = arbor::report::primitive_divisors(arbor::primitive_divisor_certificate(orbit.values, level));
    if (orbit.level(level) == 0) {
      j["exact"] = nullptr;
      emit(json_out, j);
      return;
    }
    try {
      j["exact"] = arbor::report::primitive_divisors(
          arbor::primitive_divisor_exact(orbit.values, level, factor_budget(budget)));
      emit(json_out, j);
    } catch (const arbor::BudgetError<arbor::Factorization>& e) {
      j["exact"] = nullptr;
      j["partial_factorization"] = arbor::report::factorization(e.partial());
      emit(json_out, j);
      throw;
    }
  });
}

arbor_status arbor_discriminant(const arbor_map* map, uint64_t level, const arbor_budget* budget, char** json_out) {
  return guarded([&] {
    require(map && json_out, "null argument");
    json j = {{"level", level}};
    j["abs_discriminant"] = arbor::report::big(arbor::discriminant_recurrence(map->map, level, max_bits(budget)));
    // The direct route is a resultant of degree 2^n; cheap enough for small n.
    if (level <= 4) {
      j["direct"] = arbor::report::big(abs(arbor::discriminant(arbor::iterate_polynomial(map->map, level))));
      j["agrees"] = j["direct"] == j["abs_discriminant"];
    }
    emit(json_out, j);
  });
}

arbor_status arbor_curve(const arbor_map* map, uint64_t level, int genus, uint64_t xbound, const arbor_budget* budget,
                         char** json_out) {
  return guarded([&] {
    require(map && json_out, "null argument");
    require(level >= 1, "level must be at least 1");
    auto orbit = arbor::critical_orbit(map->map, level, max_bits(budget));
    arbor::SquareFreeDecomposition dec;
    try {
      dec = arbor::squarefree_decompose(orbit.level(level), factor_budget(budget));
    } catch (const arbor::BudgetError<arbor::Factorization>& e) {
      with_partial(json_out, [](const auto& f) { return json{{"partial_factorization", arbor::report::factorization(f)}}.dump(); }, e);
    }
    auto model = arbor::curve_model(map->map, level, dec, genus);
    json j = arbor::report::curve(model);
    j["decomposition"] = arbor::report::decomposition(dec);
    const std::size_t min_level = genus == 1 ? 2 : 3;
    if (level >= min_level) {
      auto pt = arbor::forced_point(model, map->map, level, dec);
      j["forced_point"] = {{"x", arbor::report::big(pt.x)}, {"y", arbor::report::big(pt.y)}};
      j["forced_point_verified"] = arbor::verify_forced_point(model, map->map, level, dec);
    }
    if (xbound > 0) {
      json pts = json::array();
      for (const auto& hit : arbor::search_integral_points(model, xbound)) {
        pts.push_back({{"x", arbor::report::big(hit.x)}, {"y", arbor::report::big(hit.y)}, {"height_ratio", hit.height_ratio}});
      }
      j["xbound"] = xbound;
      j["points"] = pts;
    }
    emit(json_out, j);
  });
}

arbor_status arbor_canonical_height(const arbor_map* map, const char* x, double eps, char** json_out) {
  return guarded([&] {
    require(map && x && json_out, "null argument");
    const auto est = arbor::canonical_height(map->map, arbor::parse_rational(x), eps);
    json j = {{"x", x}, {"value", est.value}, {"depth", est.depth}, {"eps", est.eps}};
    if (!arbor::is_postcritically_finite(map->map)) j["ingram_bound_holds"] = arbor::check_ingram_lower_bound(map->map, eps);
    emit(json_out, j);
  });
}

arbor_status arbor_density(const arbor_map* map, const char* b, const arbor_density_options* options, char** out) {
  return guarded([&] {
    require(map && b && options && out, "null argument");
    std::vector<std::uint64_t> checkpoints;
    if (options->checkpoints) checkpoints.assign(options->checkpoints, options->checkpoints + options->checkpoint_count);
    arbor::DensityOptions opts;
    opts.shards = options->shards;
    opts.threads = options->threads;
    opts.segment_size = options->segment_size;
    auto curve = arbor::density_curve(map->map, arbor::parse_int(b), options->X, std::move(checkpoints), opts);
    *out = dup(options->csv ? arbor::to_csv(curve) : arbor::report::density(curve).dump());
  });
}

arbor_status arbor_factorize(const char* n, const arbor_budget* budget, char** json_out) {
  return guarded([&] {
    require(n && json_out, "null argument");
    emit(json_out, arbor::report::factorization(arbor::factorize(arbor::parse_int(n), factor_budget(budget))));
  });
}

}  // extern "C"
