#pragma once

// Bipolar and abstract argumentation frameworks built from a scenario, and
// the relational primitives over them: set-attack (direct, indirect and
// supported attacks), set-support, conflict-freeness, safety, closure under
// support and defence.

#include <cstddef>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "rae/argument_set.hpp"
#include "rae/scenario.hpp"

namespace rae {

enum class ArgumentKind { kModel, kCounterfactual };

/// A model M_i or the counterfactual c_i of model i.
struct Argument {
  ArgumentKind kind;
  std::size_t index;

  friend bool operator==(const Argument&, const Argument&) = default;
};

using Edge = std::pair<std::size_t, std::size_t>;

/// Bipolar argumentation framework. Arguments are addressed by dense indices
/// 0..size()-1; frameworks built from a scenario place M_i at i and c_i at
/// m+i. Immutable after construction.
class Baf {
 public:
  /// Throws ConfigError on out-of-range edges or duplicate arguments.
  Baf(std::vector<Argument> arguments, std::vector<std::string> names, std::vector<Edge> attacks,
      std::vector<Edge> supports);

  std::size_t size() const { return arguments_.size(); }
  ArgumentSet all() const { return ArgumentSet::first_n(size()); }

  const Argument& argument(std::size_t a) const { return arguments_[a]; }
  const std::string& name(std::size_t a) const { return names_[a]; }
  std::optional<std::size_t> index_of(const Argument& arg) const;
  std::optional<std::size_t> index_of(const std::string& name) const;

  /// Set of argument indices for the given names; throws ConfigError on an
  /// unknown name.
  ArgumentSet set_of(const std::vector<std::string>& names) const;
  /// Member names in index order.
  std::vector<std::string> names_of(const ArgumentSet& set) const;

  bool attacks(std::size_t from, std::size_t to) const { return attack_out_[from].contains(to); }
  bool supports(std::size_t from, std::size_t to) const { return support_out_[from].contains(to); }

  const ArgumentSet& attacked_by(std::size_t a) const { return attack_out_[a]; }
  const ArgumentSet& attackers_of(std::size_t a) const { return attack_in_[a]; }
  const ArgumentSet& supported_by(std::size_t a) const { return support_out_[a]; }
  const ArgumentSet& supporters_of(std::size_t a) const { return support_in_[a]; }

  /// Arguments reached from `a` by a direct, indirect or supported attack.
  const ArgumentSet& set_attacked_by(std::size_t a) const { return set_attack_out_[a]; }
  /// Arguments that reach `a` by a direct, indirect or supported attack.
  const ArgumentSet& set_attackers_of(std::size_t a) const { return set_attack_in_[a]; }

  std::vector<Edge> attack_edges() const;
  std::vector<Edge> support_edges() const;

 private:
  std::vector<Argument> arguments_;
  std::vector<std::string> names_;
  std::vector<ArgumentSet> attack_out_, attack_in_;
  std::vector<ArgumentSet> support_out_, support_in_;
  std::vector<ArgumentSet> set_attack_out_, set_attack_in_;
};

/// Abstract argumentation framework whose arguments are the model/CE pairs
/// (M_i, c_i), addressed by the pair index i.
class Aaf {
 public:
  Aaf(std::vector<std::string> names, std::vector<Edge> attacks);

  std::size_t size() const { return names_.size(); }
  ArgumentSet all() const { return ArgumentSet::first_n(size()); }
  const std::string& name(std::size_t a) const { return names_[a]; }

  bool attacks(std::size_t from, std::size_t to) const { return attack_out_[from].contains(to); }
  const ArgumentSet& attacked_by(std::size_t a) const { return attack_out_[a]; }
  const ArgumentSet& attackers_of(std::size_t a) const { return attack_in_[a]; }
  std::vector<Edge> attack_edges() const;
  std::vector<std::string> names_of(const ArgumentSet& set) const;

 private:
  std::vector<std::string> names_;
  std::vector<ArgumentSet> attack_out_, attack_in_;
};

/// BAF of a scenario under a model preference. Requires a valid scenario.
Baf build_baf(const Scenario& s, const PreferenceRanking& pref);

/// Pair-argument AAF equivalent to the BAF of a scenario with own-valid
/// counterfactuals.
Aaf build_aaf(const Scenario& s, const PreferenceRanking& pref);

// BAF primitives ------------------------------------------------------------

bool set_attacks(const Baf& f, const ArgumentSet& x, std::size_t a);
bool set_supports(const Baf& f, const ArgumentSet& x, std::size_t a);
bool is_conflict_free(const Baf& f, const ArgumentSet& x);
bool is_safe(const Baf& f, const ArgumentSet& x);
bool is_closed_for_support(const Baf& f, const ArgumentSet& x);
bool defends(const Baf& f, const ArgumentSet& x, std::size_t a);
bool defends_all(const Baf& f, const ArgumentSet& x);

bool is_d_admissible(const Baf& f, const ArgumentSet& x);
bool is_s_admissible(const Baf& f, const ArgumentSet& x);
bool is_c_admissible(const Baf& f, const ArgumentSet& x);
bool is_stable(const Baf& f, const ArgumentSet& x);

// AAF primitives ------------------------------------------------------------

bool is_conflict_free(const Aaf& f, const ArgumentSet& x);
bool defends(const Aaf& f, const ArgumentSet& x, std::size_t a);
bool is_admissible(const Aaf& f, const ArgumentSet& x);

/// Graphviz rendering for inspection; attack edges are labelled "-", support
/// edges "+". Not a stable format.
std::string to_dot(const Baf& f);
std::string to_dot(const Aaf& f);

}  // namespace rae
