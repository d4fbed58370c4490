#pragma once

// Extension enumeration for the acceptability semantics of bipolar
// frameworks (stable, d-, s- and c-preferred) and preferred semantics of the
// pair-argument AAF, plus the maps between the two families.

#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "rae/argument_set.hpp"
#include "rae/framework.hpp"

namespace rae {

enum class Semantics { kStable, kDPreferred, kSPreferred, kCPreferred };

inline constexpr Semantics kAllSemantics[] = {Semantics::kStable, Semantics::kDPreferred,
                                              Semantics::kSPreferred, Semantics::kCPreferred};

/// "stable", "d-preferred", "s-preferred", "c-preferred".
const char* to_string(Semantics sem);
std::optional<Semantics> parse_semantics(std::string_view text);

/// A family of extensions in canonical order: size descending, then the
/// lexicographic order of the members' sorted names.
struct ExtensionSet {
  std::vector<ArgumentSet> extensions;

  std::size_t size() const { return extensions.size(); }
  bool empty() const { return extensions.empty(); }
  auto begin() const { return extensions.begin(); }
  auto end() const { return extensions.end(); }
  const ArgumentSet& operator[](std::size_t i) const { return extensions[i]; }
  bool contains(const ArgumentSet& e) const;

  friend bool operator==(const ExtensionSet&, const ExtensionSet&) = default;
};

/// Enumeration limit: RAE_MAX_ARGS when set, otherwise 64 arguments.
/// Throws ConfigError when RAE_MAX_ARGS is not a positive integer no larger
/// than kMaxArguments.
std::size_t default_enumeration_limit();

struct EnumerationOptions {
  std::size_t max_arguments = default_enumeration_limit();
};

/// All extensions of `f` under `sem`. Throws CapacityError when the
/// framework exceeds the limit.
ExtensionSet enumerate_extensions(const Baf& f, Semantics sem, const EnumerationOptions& opts = {});

/// All preferred extensions of `f`.
ExtensionSet enumerate_preferred_aaf(const Aaf& f, const EnumerationOptions& opts = {});

/// Single-argument attack relation of `f` composed from its direct relations
/// as att ∪ (sup+ ; att) ∪ (att ; sup+); entry a holds everything a attacks.
std::vector<ArgumentSet> composed_attack_relation(const Baf& f);

/// Sorts into canonical order.
void canonicalize(std::vector<ArgumentSet>& family, const Baf& f);
void canonicalize(std::vector<ArgumentSet>& family, const Aaf& f);

/// Flattens pair arguments (M_i, c_i) into {M_i, c_i} of a scenario BAF with
/// `model_count` models.
ArgumentSet map_aaf_extension_to_baf(const ArgumentSet& pairs, std::size_t model_count);

/// Pairs up models and counterfactuals present together; unmatched members
/// are dropped.
ArgumentSet map_baf_extension_to_aaf(const ArgumentSet& extension, std::size_t model_count);

}  // namespace rae
