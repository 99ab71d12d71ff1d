#include <cmath>

#include "coincider/errors.hpp"
#include "coincider/solver.hpp"
#include "json.hpp"

namespace coincider {

std::string domain_kind_name(DomainKind kind) {
  return kind == DomainKind::Sphere ? "sphere" : "rotation-group";
}

std::string target_name(Target t) {
  switch (t) {
    case Target::A: return "A";
    case Target::APrime: return "A_prime";
    case Target::APrimeAndA: return "A_prime_and_A";
    case Target::Knaster: return "knaster";
  }
  return "A";
}

std::string existence_name(Existence e) {
  switch (e) {
    case Existence::Guaranteed: return "guaranteed";
    case Existence::NotGuaranteed: return "not guaranteed";
    case Existence::Unknown: return "unknown";
  }
  return "unknown";
}

void Scenario::validate() const {
  if (!group) throw InvalidInputError("scenario has no group");
  if (action.group.get() != group.get()) {
    throw InvalidInputError("scenario action must act for the scenario group");
  }
  if (d < 1) throw InvalidInputError("scenario dimension must be >= 1");
  if (action.d != d) throw InvalidInputError("action dimension must match the domain");
  if (map.d != d) throw InvalidInputError("map domain dimension must match the domain");
  if (map.m() < 1) throw InvalidInputError("map needs at least one component");
  if (starts < 1) throw InvalidInputError("starts must be >= 1");
  if (max_iters < 1) throw InvalidInputError("max_iters must be >= 1");
  if (!(eps_solve > 0) || !(verify_tol > 0)) {
    throw InvalidInputError("tolerances must be positive");
  }
  if (target == Target::Knaster) {
    if (domain != DomainKind::RotationGroup) {
      throw InvalidInputError("the rotation search runs over a rotation group domain");
    }
    if (map.m() != 1) throw InvalidInputError("the rotation search needs a scalar map");
    if (static_cast<int>(base_point.size()) != d) {
      throw InvalidInputError("the rotation search needs a base point of the sphere");
    }
    double n2 = 0;
    for (const double v : base_point) n2 += v * v;
    if (std::abs(n2 - 1.0) > 1e-9) {
      throw InvalidInputError("the base point must lie on the unit sphere");
    }
    return;
  }
  if (domain != DomainKind::Sphere) {
    throw InvalidInputError("coincidence targets run over a sphere domain");
  }
  const int q = group->order();
  if (k < 2 || k > q) throw InvalidInputError("need 2 <= k <= |G|");
  if (target == Target::APrime && map.m() != 1) {
    throw InvalidInputError("the max-coincidence target needs a scalar map");
  }
  if (target == Target::APrimeAndA && map.m() < 2) {
    throw InvalidInputError("the combined target needs a scalar part plus at least one more");
  }
}

Existence Scenario::existence() const {
  const int q = group->order();
  if (target == Target::Knaster) {
    // Promised for the permutation sphere of a group of odd prime exponent;
    // exponent-2 groups are an experiment, not a claim.
    if (action.kind != ActionKind::IGPermutation || d != q - 1) return Existence::Unknown;
    int exponent = 0;
    for (int g = 1; g < q; ++g) {
      const int ord = group->element_order(g);
      if (exponent == 0) exponent = ord;
      if (ord != exponent) return Existence::Unknown;
    }
    if (exponent >= 3 && is_prime(exponent)) return Existence::Guaranteed;
    return Existence::Unknown;
  }
  if (!action.is_free_on_sphere()) return Existence::Unknown;
  // Free action on S^{d-1}: the genus of the sphere is d, so a solution is
  // promised exactly when d > (q-1)(m-1) + k - 1.
  const long long bound =
      static_cast<long long>(q - 1) * (map.m() - 1) + k - 1;
  return d > bound ? Existence::Guaranteed : Existence::NotGuaranteed;
}

namespace {

GroupPtr group_from_json(const nlohmann::json& j) {
  const std::string kind = j.at("kind").get<std::string>();
  if (kind == "cyclic") return make_cyclic(j.at("q").get<int>());
  if (kind == "p_torus") return make_p_torus(j.at("p").get<int>(), j.at("n").get<int>());
  throw InvalidInputError("unknown group kind '" + kind + "'");
}

ActionRep action_from_json(const nlohmann::json& j, const GroupPtr& group, int d) {
  if (j.is_string()) {
    const std::string name = j.get<std::string>();
    if (name == "antipodal") return make_antipodal(group, d);
    if (name == "complex_roots") return make_complex_roots(group, d);
    if (name == "ig_permutation") return make_ig_permutation(group);
    if (name == "regular_permutation") return make_regular_permutation(group);
    throw InvalidInputError("unknown action '" + name + "'");
  }
  if (j.is_object() && j.value("kind", "") == "user") {
    std::vector<std::vector<double>> mats;
    for (const auto& m : j.at("matrices")) {
      mats.push_back(m.get<std::vector<double>>());
    }
    return make_user(group, d, std::move(mats));
  }
  throw InvalidInputError("action must be a name or a user matrix table");
}

Target target_from_json(const std::string& name) {
  if (name == "A") return Target::A;
  if (name == "A_prime") return Target::APrime;
  if (name == "A_prime_and_A") return Target::APrimeAndA;
  if (name == "knaster") return Target::Knaster;
  throw InvalidInputError("unknown target '" + name + "'");
}

}  // namespace

Scenario scenario_from_json_text(const std::string& text) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(text);
  } catch (const nlohmann::json::exception& e) {
    throw InvalidInputError(std::string("bad scenario JSON: ") + e.what());
  }
  Scenario s;
  try {
    const auto& dom = j.at("domain");
    const std::string dom_kind = dom.at("kind").get<std::string>();
    if (dom_kind == "sphere") {
      s.domain = DomainKind::Sphere;
      s.d = dom.at("d").get<int>();
    } else if (dom_kind == "rotation-group" || dom_kind == "so") {
      s.domain = DomainKind::RotationGroup;
      s.d = dom.at("n").get<int>();
    } else {
      throw InvalidInputError("unknown domain kind '" + dom_kind + "'");
    }
    s.group = group_from_json(j.at("group"));
    s.action = action_from_json(j.at("action"), s.group, s.d);
    s.map = map_from_json_text(j.at("map").dump(), s.d);
    s.target = target_from_json(j.at("target").get<std::string>());
    s.k = j.value("k", 2);
    s.seed = j.value("seed", std::uint64_t{0});
    s.starts = j.value("starts", 100);
    s.max_iters = j.value("max_iters", 400);
    s.eps_solve = j.value("eps_solve", 1e-8);
    s.verify_tol = j.value("verify_tol", 1e-12);
    if (j.contains("x")) {
      s.base_point = j.at("x").get<std::vector<double>>();
    } else if (s.target == Target::Knaster) {
      // Generic default off every rotation axis: normalized (1, 2, ..., d).
      s.base_point.resize(s.d);
      double n2 = 0;
      for (int i = 0; i < s.d; ++i) {
        s.base_point[i] = i + 1;
        n2 += s.base_point[i] * s.base_point[i];
      }
      for (double& v : s.base_point) v /= std::sqrt(n2);
    }
    if (!s.base_point.empty()) {
      double n2 = 0;
      for (const double v : s.base_point) n2 += v * v;
      if (n2 <= 0) throw InvalidInputError("base point must be nonzero");
      for (double& v : s.base_point) v /= std::sqrt(n2);
    }
  } catch (const nlohmann::json::exception& e) {
    throw InvalidInputError(std::string("bad scenario JSON: ") + e.what());
  }
  s.validate();
  return s;
}

}  // namespace coincider
