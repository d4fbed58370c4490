#include "rae/oracle.hpp"

#include <algorithm>
#include <map>

#include "rae/errors.hpp"
#include "rae/random.hpp"

namespace rae {
namespace {

template <typename Framework, typename Accept>
std::vector<ArgumentSet> all_subsets_where(const Framework& f, Accept accept) {
  if (f.size() > kOracleMaxArguments) throw CapacityError(f.size(), kOracleMaxArguments);
  std::vector<ArgumentSet> out;
  const std::uint32_t limit = 1u << f.size();
  for (std::uint32_t mask = 0; mask < limit; ++mask) {
    ArgumentSet x;
    for (std::size_t a = 0; a < f.size(); ++a)
      if (mask & (1u << a)) x.insert(a);
    if (accept(x)) out.push_back(x);
  }
  return out;
}

std::vector<ArgumentSet> maximal_only(const std::vector<ArgumentSet>& sets) {
  std::vector<ArgumentSet> out;
  for (const auto& s : sets) {
    const bool dominated = std::any_of(sets.begin(), sets.end(), [&](const ArgumentSet& t) {
      return s != t && s.is_subset_of(t);
    });
    if (!dominated) out.push_back(s);
  }
  return out;
}

template <typename Framework>
std::vector<std::vector<std::string>> named(const Framework& f, const ExtensionSet& family) {
  std::vector<std::vector<std::string>> out;
  for (const auto& e : family) {
    auto names = f.names_of(e);
    std::sort(names.begin(), names.end());
    out.push_back(std::move(names));
  }
  return out;
}

}  // namespace

ExtensionSet brute_force_extensions(const Baf& f, Semantics sem) {
  std::vector<ArgumentSet> family;
  switch (sem) {
    case Semantics::kStable:
      family = all_subsets_where(f, [&](const ArgumentSet& x) { return is_stable(f, x); });
      break;
    case Semantics::kDPreferred:
      family = maximal_only(all_subsets_where(f, [&](const ArgumentSet& x) { return is_d_admissible(f, x); }));
      break;
    case Semantics::kSPreferred:
      family = maximal_only(all_subsets_where(f, [&](const ArgumentSet& x) { return is_s_admissible(f, x); }));
      break;
    case Semantics::kCPreferred:
      family = maximal_only(all_subsets_where(f, [&](const ArgumentSet& x) { return is_c_admissible(f, x); }));
      break;
  }
  canonicalize(family, f);
  return {std::move(family)};
}

ExtensionSet brute_force_preferred_aaf(const Aaf& f) {
  auto family = maximal_only(all_subsets_where(f, [&](const ArgumentSet& x) { return is_admissible(f, x); }));
  canonicalize(family, f);
  return {std::move(family)};
}

OracleCheckResult run_oracle_check(const OracleCheckConfig& cfg, const BafEnumerator& baf_enum,
                                   const AafEnumerator& aaf_enum) {
  if (cfg.max_models == 0) throw ConfigError("max_models must be positive");
  if (2 * cfg.max_models > kOracleMaxArguments)
    throw CapacityError(2 * cfg.max_models, kOracleMaxArguments);

  const BafEnumerator production_baf =
      baf_enum ? baf_enum : [](const Baf& f, Semantics s) { return enumerate_extensions(f, s); };
  const AafEnumerator production_aaf =
      aaf_enum ? aaf_enum : [](const Aaf& f) { return enumerate_preferred_aaf(f); };

  OracleCheckResult result;
  Rng sizes(derive_seed(cfg.seed, "oracle-sizes"));
  for (std::size_t k = 0; k < cfg.scenarios; ++k) {
    GeneratorConfig gen;
    gen.n_models = 1 + sizes.index(cfg.max_models);
    gen.label_count = cfg.label_count;
    gen.invalidity_rate = cfg.invalidity_rate;
    gen.tie_rate = cfg.tie_rate;
    Scenario s = generate_random_scenario(gen, derive_seed(cfg.seed, k));
    const PreferenceRanking pref = resolve_preference(s);
    const Baf baf = build_baf(s, pref);
    const Aaf aaf = build_aaf(s, pref);
    ++result.scenarios_checked;

    std::map<Semantics, ExtensionSet> produced;
    for (Semantics sem : kAllSemantics) {
      ++result.comparisons;
      const ExtensionSet expected = brute_force_extensions(baf, sem);
      produced[sem] = production_baf(baf, sem);
      if (expected != produced[sem]) {
        result.mismatch = OracleMismatch{s, to_string(sem), named(baf, expected), named(baf, produced[sem])};
        return result;
      }
    }
    ++result.comparisons;
    const ExtensionSet expected = brute_force_preferred_aaf(aaf);
    const ExtensionSet actual = production_aaf(aaf);
    if (expected != actual) {
      result.mismatch = OracleMismatch{s, "aaf-preferred", named(aaf, expected), named(aaf, actual)};
      return result;
    }

    // Families that must coincide on every scenario framework.
    auto same = [&](Semantics a, Semantics b, const char* label) {
      ++result.comparisons;
      if (produced[a] == produced[b]) return true;
      result.mismatch = OracleMismatch{s, label, named(baf, produced[a]), named(baf, produced[b])};
      return false;
    };
    if (!same(Semantics::kStable, Semantics::kDPreferred, "stable==d-preferred")) return result;
    if (!same(Semantics::kCPreferred, Semantics::kSPreferred, "c-preferred==s-preferred")) return result;

    ++result.comparisons;
    std::vector<ArgumentSet> mapped;
    for (const auto& e : actual) mapped.push_back(map_aaf_extension_to_baf(e, s.models.size()));
    canonicalize(mapped, baf);
    const ExtensionSet image{std::move(mapped)};
    if (image != produced[Semantics::kSPreferred]) {
      result.mismatch = OracleMismatch{s, "aaf-image==s-preferred", named(baf, image),
                                       named(baf, produced[Semantics::kSPreferred])};
      return result;
    }
  }
  return result;
}

}  // namespace rae
