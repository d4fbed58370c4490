#include "rae/framework.hpp"

#include <sstream>

#include "rae/errors.hpp"

namespace rae {
namespace {

void check_edges(const std::vector<Edge>& edges, std::size_t n, const char* what) {
  for (const auto& [from, to] : edges)
    if (from >= n || to >= n)
      throw ConfigError(std::string(what) + " edge (" + std::to_string(from) + ", " +
                        std::to_string(to) + ") outside a framework of " + std::to_string(n) +
                        " arguments");
}

// States of the walk that recognises attack sequences: a direct attack, an
// indirect attack (one attack edge then one or more support edges) or a
// supported attack (one or more support edges then one attack edge).
enum Phase : std::size_t {
  kStart = 0,          // at the origin, nothing traversed
  kSupportsOnly = 1,   // one or more supports traversed
  kAfterAttack = 2,    // a single attack traversed from the origin
  kAfterSupports = 3,  // attack then one or more supports
  kSupportedEnd = 4,   // supports then the closing attack
  kPhases = 5,
};

ArgumentSet walk_attack_sequences(std::size_t origin, const std::vector<ArgumentSet>& attack_out,
                                  const std::vector<ArgumentSet>& support_out) {
  const std::size_t n = attack_out.size();
  std::vector<bool> seen(n * kPhases, false);
  std::vector<std::pair<std::size_t, Phase>> frontier{{origin, kStart}};
  seen[origin * kPhases + kStart] = true;
  ArgumentSet reached;

  auto visit = [&](std::size_t node, Phase phase) {
    if (seen[node * kPhases + phase]) return;
    seen[node * kPhases + phase] = true;
    frontier.emplace_back(node, phase);
    if (phase != kSupportsOnly) reached.insert(node);
  };

  while (!frontier.empty()) {
    auto [node, phase] = frontier.back();
    frontier.pop_back();
    switch (phase) {
      case kStart:
        attack_out[node].for_each([&](std::size_t t) { visit(t, kAfterAttack); });
        support_out[node].for_each([&](std::size_t t) { visit(t, kSupportsOnly); });
        break;
      case kSupportsOnly:
        attack_out[node].for_each([&](std::size_t t) { visit(t, kSupportedEnd); });
        support_out[node].for_each([&](std::size_t t) { visit(t, kSupportsOnly); });
        break;
      case kAfterAttack:
      case kAfterSupports:
        support_out[node].for_each([&](std::size_t t) { visit(t, kAfterSupports); });
        break;
      default:
        break;
    }
  }
  return reached;
}

std::vector<Edge> edges_of(const std::vector<ArgumentSet>& out) {
  std::vector<Edge> edges;
  for (std::size_t a = 0; a < out.size(); ++a)
    out[a].for_each([&](std::size_t b) { edges.emplace_back(a, b); });
  return edges;
}

std::string dot_quote(const std::string& s) {
  std::string out = "\"";
  for (char ch : s) {
    if (ch == '"' || ch == '\\') out += '\\';
    out += ch;
  }
  return out + "\"";
}

}  // namespace

Baf::Baf(std::vector<Argument> arguments, std::vector<std::string> names,
         std::vector<Edge> attacks, std::vector<Edge> supports)
    : arguments_(std::move(arguments)), names_(std::move(names)) {
  const std::size_t n = arguments_.size();
  if (n > kMaxArguments)
    throw CapacityError(n, kMaxArguments);
  if (names_.size() != n) throw ConfigError("BAF needs exactly one name per argument");
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = a + 1; b < n; ++b)
      if (arguments_[a] == arguments_[b] || names_[a] == names_[b])
        throw ConfigError("duplicate argument '" + names_[a] + "'");
  check_edges(attacks, n, "attack");
  check_edges(supports, n, "support");

  attack_out_.assign(n, {});
  attack_in_.assign(n, {});
  support_out_.assign(n, {});
  support_in_.assign(n, {});
  for (const auto& [a, b] : attacks) {
    attack_out_[a].insert(b);
    attack_in_[b].insert(a);
  }
  for (const auto& [a, b] : supports) {
    support_out_[a].insert(b);
    support_in_[b].insert(a);
  }

  set_attack_out_.assign(n, {});
  set_attack_in_.assign(n, {});
  for (std::size_t a = 0; a < n; ++a) {
    set_attack_out_[a] = walk_attack_sequences(a, attack_out_, support_out_);
    set_attack_out_[a].for_each([&](std::size_t b) { set_attack_in_[b].insert(a); });
  }
}

std::optional<std::size_t> Baf::index_of(const Argument& arg) const {
  for (std::size_t a = 0; a < arguments_.size(); ++a)
    if (arguments_[a] == arg) return a;
  return std::nullopt;
}

std::optional<std::size_t> Baf::index_of(const std::string& name) const {
  for (std::size_t a = 0; a < names_.size(); ++a)
    if (names_[a] == name) return a;
  return std::nullopt;
}

ArgumentSet Baf::set_of(const std::vector<std::string>& names) const {
  ArgumentSet out;
  for (const auto& n : names) {
    auto idx = index_of(n);
    if (!idx) throw ConfigError("unknown argument '" + n + "'");
    out.insert(*idx);
  }
  return out;
}

std::vector<std::string> Baf::names_of(const ArgumentSet& set) const {
  std::vector<std::string> out;
  set.for_each([&](std::size_t a) { out.push_back(names_[a]); });
  return out;
}

std::vector<Edge> Baf::attack_edges() const { return edges_of(attack_out_); }
std::vector<Edge> Baf::support_edges() const { return edges_of(support_out_); }

Aaf::Aaf(std::vector<std::string> names, std::vector<Edge> attacks) : names_(std::move(names)) {
  const std::size_t n = names_.size();
  if (n > kMaxArguments) throw CapacityError(n, kMaxArguments);
  check_edges(attacks, n, "attack");
  attack_out_.assign(n, {});
  attack_in_.assign(n, {});
  for (const auto& [a, b] : attacks) {
    attack_out_[a].insert(b);
    attack_in_[b].insert(a);
  }
}

std::vector<Edge> Aaf::attack_edges() const { return edges_of(attack_out_); }

std::vector<std::string> Aaf::names_of(const ArgumentSet& set) const {
  std::vector<std::string> out;
  set.for_each([&](std::size_t a) { out.push_back(names_[a]); });
  return out;
}

// ---------------------------------------------------------------------------

Baf build_baf(const Scenario& s, const PreferenceRanking& pref) {
  const std::size_t m = s.models.size();
  std::vector<Argument> args;
  std::vector<std::string> names;
  for (std::size_t i = 0; i < m; ++i) {
    args.push_back({ArgumentKind::kModel, i});
    names.push_back(s.models[i].id);
  }
  for (std::size_t i = 0; i < m; ++i) {
    args.push_back({ArgumentKind::kCounterfactual, i});
    names.push_back(s.counterfactuals[i].id);
  }

  std::vector<Edge> attacks, supports;
  for (std::size_t i = 0; i < m; ++i) {
    const Label on_x = s.models[i].prediction_on_x;
    for (std::size_t j = 0; j < m; ++j) {
      if (i != j && on_x != s.models[j].prediction_on_x && pref.at_least_as_preferred(i, j))
        attacks.emplace_back(i, j);
      // c_j is invalid on M_i: the two conflict, directed by preference.
      if (s.prediction_on_counterfactual(i, j) == on_x) {
        if (pref.at_least_as_preferred(i, j)) attacks.emplace_back(i, m + j);
        if (pref.at_least_as_preferred(j, i)) attacks.emplace_back(m + j, i);
      }
    }
    supports.emplace_back(i, m + i);
    supports.emplace_back(m + i, i);
  }
  return Baf(std::move(args), std::move(names), std::move(attacks), std::move(supports));
}

Aaf build_aaf(const Scenario& s, const PreferenceRanking& pref) {
  const std::size_t m = s.models.size();
  std::vector<std::string> names;
  for (std::size_t i = 0; i < m; ++i)
    names.push_back("(" + s.models[i].id + "," + s.counterfactuals[i].id + ")");

  std::vector<Edge> attacks;
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = 0; j < m; ++j) {
      if (i == j || !pref.at_least_as_preferred(i, j)) continue;
      const Label xi = s.models[i].prediction_on_x;
      const Label xj = s.models[j].prediction_on_x;
      if (xi != xj || s.prediction_on_counterfactual(i, j) == xi ||
          s.prediction_on_counterfactual(j, i) == xj)
        attacks.emplace_back(i, j);
    }
  return Aaf(std::move(names), std::move(attacks));
}

// ---------------------------------------------------------------------------

bool set_attacks(const Baf& f, const ArgumentSet& x, std::size_t a) {
  return f.set_attackers_of(a).intersects(x);
}

bool set_supports(const Baf& f, const ArgumentSet& x, std::size_t a) {
  return f.supporters_of(a).intersects(x);
}

bool is_conflict_free(const Baf& f, const ArgumentSet& x) {
  bool ok = true;
  x.for_each([&](std::size_t a) { ok = ok && !f.set_attacked_by(a).intersects(x); });
  return ok;
}

bool is_safe(const Baf& f, const ArgumentSet& x) {
  ArgumentSet attacked, supported;
  x.for_each([&](std::size_t a) {
    attacked |= f.set_attacked_by(a);
    supported |= f.supported_by(a);
  });
  return !attacked.intersects(x | supported);
}

bool is_closed_for_support(const Baf& f, const ArgumentSet& x) {
  ArgumentSet supported;
  x.for_each([&](std::size_t a) { supported |= f.supported_by(a); });
  return supported.is_subset_of(x);
}

bool defends(const Baf& f, const ArgumentSet& x, std::size_t a) {
  bool ok = true;
  f.set_attackers_of(a).for_each([&](std::size_t b) {
    ok = ok && f.set_attackers_of(b).intersects(x);
  });
  return ok;
}

bool defends_all(const Baf& f, const ArgumentSet& x) {
  bool ok = true;
  x.for_each([&](std::size_t a) { ok = ok && defends(f, x, a); });
  return ok;
}

bool is_d_admissible(const Baf& f, const ArgumentSet& x) {
  return is_conflict_free(f, x) && defends_all(f, x);
}

bool is_s_admissible(const Baf& f, const ArgumentSet& x) {
  return is_safe(f, x) && defends_all(f, x);
}

bool is_c_admissible(const Baf& f, const ArgumentSet& x) {
  return is_conflict_free(f, x) && is_closed_for_support(f, x) && defends_all(f, x);
}

bool is_stable(const Baf& f, const ArgumentSet& x) {
  if (!is_conflict_free(f, x)) return false;
  bool ok = true;
  (f.all() - x).for_each([&](std::size_t a) { ok = ok && set_attacks(f, x, a); });
  return ok;
}

bool is_conflict_free(const Aaf& f, const ArgumentSet& x) {
  bool ok = true;
  x.for_each([&](std::size_t a) { ok = ok && !f.attacked_by(a).intersects(x); });
  return ok;
}

bool defends(const Aaf& f, const ArgumentSet& x, std::size_t a) {
  bool ok = true;
  f.attackers_of(a).for_each([&](std::size_t b) { ok = ok && f.attackers_of(b).intersects(x); });
  return ok;
}

bool is_admissible(const Aaf& f, const ArgumentSet& x) {
  if (!is_conflict_free(f, x)) return false;
  bool ok = true;
  x.for_each([&](std::size_t a) { ok = ok && defends(f, x, a); });
  return ok;
}

std::string to_dot(const Baf& f) {
  std::ostringstream out;
  out << "digraph baf {\n";
  for (std::size_t a = 0; a < f.size(); ++a)
    out << "  " << dot_quote(f.name(a))
        << (f.argument(a).kind == ArgumentKind::kModel ? " [shape=box];\n" : " [shape=ellipse];\n");
  for (const auto& [a, b] : f.attack_edges())
    out << "  " << dot_quote(f.name(a)) << " -> " << dot_quote(f.name(b))
        << " [label=\"-\", color=red];\n";
  for (const auto& [a, b] : f.support_edges())
    out << "  " << dot_quote(f.name(a)) << " -> " << dot_quote(f.name(b))
        << " [label=\"+\", color=green];\n";
  out << "}\n";
  return out.str();
}

std::string to_dot(const Aaf& f) {
  std::ostringstream out;
  out << "digraph aaf {\n";
  for (std::size_t a = 0; a < f.size(); ++a) out << "  " << dot_quote(f.name(a)) << ";\n";
  for (const auto& [a, b] : f.attack_edges())
    out << "  " << dot_quote(f.name(a)) << " -> " << dot_quote(f.name(b))
        << " [label=\"-\", color=red];\n";
  out << "}\n";
  return out.str();
}

}  // namespace rae
