#include "rae/semantics.hpp"

#include <algorithm>
#include <charconv>
#include <cstdlib>
#include <numeric>

#include "rae/errors.hpp"

namespace rae {
namespace {

// Maximal admissible-set search shared by every semantics.
//
// `attacks_out`/`attacks_in` give the attack relation used for defence.
// `incompatible[a]` lists arguments that may not be accepted together with a
// (a itself when a can never be accepted). `closure[a]` is what accepting a
// forces in; `needed_by[a]` is every argument whose closure contains a.
struct SearchProblem {
  std::size_t n = 0;
  std::vector<ArgumentSet> attacks_out, attacks_in;
  std::vector<ArgumentSet> incompatible;
  std::vector<ArgumentSet> closure, needed_by;
};

class MaximalAdmissibleSearch {
 public:
  explicit MaximalAdmissibleSearch(const SearchProblem& p) : p_(p), all_(ArgumentSet::first_n(p.n)) {}

  std::vector<ArgumentSet> run() {
    ArgumentSet blocked;
    for (std::size_t a = 0; a < p_.n; ++a)
      if (p_.incompatible[a].contains(a)) blocked.insert(a);
    search({}, {}, blocked, {}, {});
    return std::move(found_);
  }

 private:
  bool covered(const ArgumentSet& s) const {
    return std::any_of(found_.begin(), found_.end(),
                       [&](const ArgumentSet& e) { return s.is_subset_of(e); });
  }

  static ArgumentSet union_over(const ArgumentSet& x, const std::vector<ArgumentSet>& rel) {
    ArgumentSet out;
    x.for_each([&](std::size_t a) { out |= rel[a]; });
    return out;
  }

  // in: accepted; excluded: decided never to accept; blocked: incompatible
  // with something accepted; attacked/attackers: relation images of `in`.
  void search(const ArgumentSet& in, const ArgumentSet& excluded, const ArgumentSet& blocked,
              const ArgumentSet& attacked, const ArgumentSet& attackers) {
    const ArgumentSet candidates = all_ - in - excluded - blocked;
    const ArgumentSet must_out = attackers - attacked;

    // An attacker of the accepted set that nothing acceptable can counter.
    bool hopeless = false;
    must_out.for_each([&](std::size_t y) {
      hopeless = hopeless || !p_.attacks_in[y].intersects(candidates);
    });
    if (hopeless) return;
    if (covered(in | candidates)) return;

    if (candidates.empty()) {
      if (must_out.empty()) found_.push_back(in);
      return;
    }

    const std::size_t x = choose(candidates, must_out);
    const ArgumentSet& add = p_.closure[x];
    if (add.is_subset_of(candidates)) {
      const ArgumentSet next_blocked = blocked | union_over(add, p_.incompatible);
      const ArgumentSet next_in = in | add;
      if (!next_blocked.intersects(next_in))
        search(next_in, excluded, next_blocked, attacked | union_over(add, p_.attacks_out),
               attackers | union_over(add, p_.attacks_in));
    }
    search(in, excluded | p_.needed_by[x], blocked, attacked, attackers);
  }

  // Prefer arguments that counter pending attackers, then arguments that
  // attack many open candidates.
  std::size_t choose(const ArgumentSet& candidates, const ArgumentSet& must_out) const {
    std::size_t best = candidates.first();
    std::size_t best_score = 0;
    candidates.for_each([&](std::size_t a) {
      const std::size_t score = (p_.attacks_out[a] & must_out).size() * (p_.n + 1) +
                                (p_.attacks_out[a] & candidates).size() +
                                (p_.attacks_in[a] & candidates).size();
      if (score > best_score) {
        best = a;
        best_score = score;
      }
    });
    return best;
  }

  const SearchProblem& p_;
  ArgumentSet all_;
  std::vector<ArgumentSet> found_;
};

std::vector<ArgumentSet> transpose(const std::vector<ArgumentSet>& rel) {
  std::vector<ArgumentSet> out(rel.size());
  for (std::size_t a = 0; a < rel.size(); ++a)
    rel[a].for_each([&](std::size_t b) { out[b].insert(a); });
  return out;
}

std::vector<ArgumentSet> support_closure(const Baf& f) {
  const std::size_t n = f.size();
  std::vector<ArgumentSet> sup_plus(n);
  for (std::size_t a = 0; a < n; ++a) sup_plus[a] = f.supported_by(a);
  for (std::size_t k = 0; k < n; ++k)
    for (std::size_t a = 0; a < n; ++a)
      if (sup_plus[a].contains(k)) sup_plus[a] |= sup_plus[k];
  return sup_plus;
}

// Composes the single-argument attack relation of a BAF from its direct
// attack and support relations: att ∪ (sup+ ; att) ∪ (att ; sup+).
std::vector<ArgumentSet> composed_attacks(const Baf& f, const std::vector<ArgumentSet>& sup_plus) {
  const std::size_t n = f.size();
  std::vector<ArgumentSet> out(n);
  for (std::size_t a = 0; a < n; ++a) {
    out[a] = f.attacked_by(a);
    sup_plus[a].for_each([&](std::size_t s) { out[a] |= f.attacked_by(s); });
    f.attacked_by(a).for_each([&](std::size_t t) { out[a] |= sup_plus[t]; });
  }
  return out;
}

SearchProblem baf_problem(const Baf& f, Semantics sem) {
  const std::size_t n = f.size();
  SearchProblem p;
  p.n = n;
  const std::vector<ArgumentSet> sup_plus = support_closure(f);
  p.attacks_out = composed_attacks(f, sup_plus);
  p.attacks_in = transpose(p.attacks_out);

  p.incompatible.resize(n);
  for (std::size_t a = 0; a < n; ++a) p.incompatible[a] = p.attacks_out[a] | p.attacks_in[a];

  if (sem == Semantics::kSPreferred) {
    // Safety: nothing accepted may attack what the accepted set supports.
    for (std::size_t a = 0; a < n; ++a)
      for (std::size_t b = 0; b < n; ++b)
        if (p.attacks_out[a].intersects(f.supported_by(b))) {
          p.incompatible[a].insert(b);
          p.incompatible[b].insert(a);
        }
  }

  p.closure.resize(n);
  for (std::size_t a = 0; a < n; ++a) p.closure[a].insert(a);
  if (sem == Semantics::kCPreferred) {
    for (std::size_t a = 0; a < n; ++a) p.closure[a] |= f.supported_by(a);
    for (std::size_t k = 0; k < n; ++k)
      for (std::size_t a = 0; a < n; ++a)
        if (p.closure[a].contains(k)) p.closure[a] |= p.closure[k];
  }
  p.needed_by = transpose(p.closure);
  return p;
}

template <typename Framework>
void canonicalize_impl(std::vector<ArgumentSet>& family, const Framework& f) {
  std::vector<std::vector<std::string>> keys;
  keys.reserve(family.size());
  for (const auto& e : family) {
    auto names = f.names_of(e);
    std::sort(names.begin(), names.end());
    keys.push_back(std::move(names));
  }
  std::vector<std::size_t> order(family.size());
  std::iota(order.begin(), order.end(), 0);
  std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
    if (keys[a].size() != keys[b].size()) return keys[a].size() > keys[b].size();
    return keys[a] < keys[b];
  });
  std::vector<ArgumentSet> sorted;
  sorted.reserve(family.size());
  for (std::size_t i : order) sorted.push_back(family[i]);
  family = std::move(sorted);
}

void check_capacity(std::size_t size, const EnumerationOptions& opts) {
  if (size > opts.max_arguments) throw CapacityError(size, opts.max_arguments);
}

}  // namespace

const char* to_string(Semantics sem) {
  switch (sem) {
    case Semantics::kStable: return "stable";
    case Semantics::kDPreferred: return "d-preferred";
    case Semantics::kSPreferred: return "s-preferred";
    case Semantics::kCPreferred: return "c-preferred";
  }
  return "unknown";
}

std::optional<Semantics> parse_semantics(std::string_view text) {
  for (Semantics s : kAllSemantics)
    if (text == to_string(s)) return s;
  return std::nullopt;
}

bool ExtensionSet::contains(const ArgumentSet& e) const {
  return std::find(extensions.begin(), extensions.end(), e) != extensions.end();
}

std::size_t default_enumeration_limit() {
  const char* env = std::getenv("RAE_MAX_ARGS");
  if (env == nullptr || *env == '\0') return 64;
  std::size_t value = 0;
  const char* end = env + std::char_traits<char>::length(env);
  auto [ptr, ec] = std::from_chars(env, end, value);
  if (ec != std::errc{} || ptr != end || value == 0 || value > kMaxArguments)
    throw ConfigError("RAE_MAX_ARGS must be an integer in [1, " + std::to_string(kMaxArguments) +
                      "]");
  return value;
}

ExtensionSet enumerate_extensions(const Baf& f, Semantics sem, const EnumerationOptions& opts) {
  check_capacity(f.size(), opts);
  const Semantics search_sem = sem == Semantics::kStable ? Semantics::kDPreferred : sem;
  const SearchProblem problem = baf_problem(f, search_sem);
  std::vector<ArgumentSet> family = MaximalAdmissibleSearch(problem).run();

  if (sem == Semantics::kStable) {
    // Stable extensions are the d-preferred ones that attack everything
    // they leave out.
    const ArgumentSet all = f.all();
    std::erase_if(family, [&](const ArgumentSet& e) {
      ArgumentSet attacked;
      e.for_each([&](std::size_t a) { attacked |= problem.attacks_out[a]; });
      return !(all - e).is_subset_of(attacked);
    });
  }
  canonicalize(family, f);
  return {std::move(family)};
}

ExtensionSet enumerate_preferred_aaf(const Aaf& f, const EnumerationOptions& opts) {
  check_capacity(f.size(), opts);
  SearchProblem p;
  p.n = f.size();
  for (std::size_t a = 0; a < p.n; ++a) {
    p.attacks_out.push_back(f.attacked_by(a));
    p.attacks_in.push_back(f.attackers_of(a));
    p.incompatible.push_back(f.attacked_by(a) | f.attackers_of(a));
    p.closure.push_back(ArgumentSet{a});
  }
  p.needed_by = p.closure;
  std::vector<ArgumentSet> family = MaximalAdmissibleSearch(p).run();
  canonicalize(family, f);
  return {std::move(family)};
}

std::vector<ArgumentSet> composed_attack_relation(const Baf& f) {
  return composed_attacks(f, support_closure(f));
}

void canonicalize(std::vector<ArgumentSet>& family, const Baf& f) { canonicalize_impl(family, f); }
void canonicalize(std::vector<ArgumentSet>& family, const Aaf& f) { canonicalize_impl(family, f); }

ArgumentSet map_aaf_extension_to_baf(const ArgumentSet& pairs, std::size_t model_count) {
  ArgumentSet out;
  pairs.for_each([&](std::size_t i) {
    out.insert(i);
    out.insert(model_count + i);
  });
  return out;
}

ArgumentSet map_baf_extension_to_aaf(const ArgumentSet& extension, std::size_t model_count) {
  ArgumentSet out;
  for (std::size_t i = 0; i < model_count; ++i)
    if (extension.contains(i) && extension.contains(model_count + i)) out.insert(i);
  return out;
}

}  // namespace rae
