#pragma once

#include <functional>
#include <optional>
#include <sstream>

#include "park/eval.hpp"

namespace park {

enum class Rel { Eq, Leq };

inline const char* rel_symbol(Rel r) { return r == Rel::Eq ? "=" : "≤"; }

struct ArityEnv {
  int n = 0, m = 0, p = 0, q = 0;

  int get(char c) const { return c == 'n' ? n : c == 'm' ? m : c == 'p' ? p : q; }
  std::string to_string(const std::string& uses) const {
    std::string s;
    for (char c : uses) {
      if (!s.empty()) s += ",";
      s += std::string(1, c) + "=" + std::to_string(get(c));
    }
    return s.empty() ? "-" : s;
  }
};

struct SchemaMetaVar {
  std::string name;
  Sort sort;
};

/// One concrete (in)equation: metavariables with resolved sorts, patterns
/// over those letters, and zero or more hypotheses to filter on.
struct SchemaInstance {
  std::vector<SchemaMetaVar> vars;
  Rel rel = Rel::Eq;
  TermPtr left, right;
  std::vector<std::tuple<TermPtr, TermPtr, Rel>> hypotheses;
};

/// A named (in)equation schema with symbolic arities. `instantiate` expands
/// indexed families (such as laws quantified over an injection index).
struct Schema {
  std::string id;
  Rel rel = Rel::Eq;
  std::string role;     // conventional name of the law
  std::string display;  // the formula, human readable
  std::string uses;     // which of n,m,p,q the schema ranges over
  bool demo = false;    // intentionally false; skipped by check-all runs
  std::function<std::vector<SchemaInstance>(const ArityEnv&)> instantiate;
};

/// The fixed axiom catalog. Content is versioned; see catalog_version().
const std::vector<Schema>& catalog();
const Schema* find_schema(const std::string& id);
std::string catalog_version();

struct CheckOptions {
  bool exhaustive = false;  // enumerate where it fits, sample otherwise
  int samples = 1000;
  std::uint64_t seed = 1;
  int max_arity = 2;
  long exhaustive_cap = 200000;  // max bindings per instance before sampling
  long enum_budget = 1000000;    // candidate-table budget per metavariable
};

template <class B>
struct Counterexample {
  ArityEnv env;
  std::vector<std::pair<std::string, typename B::Value>> bindings;
  TermPtr left, right;
  Rel rel = Rel::Eq;
};

template <class B>
struct CheckResult {
  std::string schema_id;
  std::string backend;
  std::string arity_note;
  long instances = 0;       // bindings evaluated
  long hyp_checked = 0;     // bindings whose hypotheses all held
  long budget_skips = 0;    // bindings abandoned on a budget error
  bool fully_exhaustive = true;
  std::optional<Counterexample<B>> cex;

  bool holds() const { return !cex.has_value(); }
};

/// True iff the stored bindings still violate the stored (in)equation;
/// counterexample reports must re-validate.
template <class B>
bool recheck(const Counterexample<B>& cex, const B& base) {
  std::map<std::string, typename B::Value> letters;
  for (const auto& [name, value] : cex.bindings) letters.emplace(name, value);
  B b = base;
  b.letters = &letters;
  auto l = eval(cex.left, b);
  auto r = eval(cex.right, b);
  return cex.rel == Rel::Eq ? !b.equal(l, r) : !b.leq(l, r);
}

/// Checks one schema over a backend: for every assignment of the symbolic
/// arities within bounds, instantiate the metavariables exhaustively when
/// the enumeration fits the budgets, otherwise by seeded sampling; evaluate
/// both sides and compare. Hypotheses filter which bindings are judged.
/// Deterministic for a fixed seed; stops at the first counterexample.
template <class B>
CheckResult<B> check_schema(const Schema& schema, const B& base, const CheckOptions& opt) {
  CheckResult<B> result;
  result.schema_id = schema.id;
  result.backend = base.describe();
  result.arity_note = schema.uses.empty() ? "-" : (schema.uses + " <= " + std::to_string(opt.max_arity));

  Rng rng(mix_seed(opt.seed ^ hash_string(schema.id)));
  std::map<std::string, typename B::Value> letters;
  B b = base;
  b.letters = &letters;

  // Enumerations are pure per sort; cache them across arity assignments.
  // A single metavariable exceeding the instance cap already forces the
  // sampled fallback, so the cap also bounds each enumeration.
  std::map<std::pair<int, int>, std::optional<std::vector<typename B::Value>>> enum_cache;
  auto enumerate_sort = [&](const Sort& s) -> const std::optional<std::vector<typename B::Value>>& {
    auto key = std::make_pair(s.source, s.target);
    auto it = enum_cache.find(key);
    if (it == enum_cache.end())
      it = enum_cache.emplace(key, b.enumerate(s.source, s.target,
                                               std::min(opt.enum_budget, opt.exhaustive_cap)))
               .first;
    return it->second;
  };

  // One evaluation of a fixed binding; returns false on violation.
  auto judge = [&](const SchemaInstance& inst, const ArityEnv& env) -> bool {
    ++result.instances;
    for (const auto& [hl, hr, hrel] : inst.hypotheses) {
      auto l = eval(hl, b);
      auto r = eval(hr, b);
      if (!(hrel == Rel::Eq ? b.equal(l, r) : b.leq(l, r))) return true;  // filtered out
    }
    ++result.hyp_checked;
    auto l = eval(inst.left, b);
    auto r = eval(inst.right, b);
    if (inst.rel == Rel::Eq ? b.equal(l, r) : b.leq(l, r)) return true;
    Counterexample<B> cex;
    cex.env = env;
    for (const auto& v : inst.vars) cex.bindings.emplace_back(v.name, letters.at(v.name));
    cex.left = inst.left;
    cex.right = inst.right;
    cex.rel = inst.rel;
    if (!recheck(cex, base)) throw Error("internal: counterexample failed to re-validate");
    result.cex = std::move(cex);
    return false;
  };

  auto run_instance = [&](const SchemaInstance& inst, const ArityEnv& env) -> bool {
    letters.clear();
    if (inst.vars.empty()) {
      try {
        return judge(inst, env);
      } catch (const BudgetError&) {
        ++result.budget_skips;
        return true;
      }
    }

    if (opt.exhaustive) {
      // Enumerate each metavariable; fall back to sampling when a sort does
      // not fit the enumeration budget or the product is too large.
      std::vector<const std::vector<typename B::Value>*> all;
      bool feasible = true;
      long product = 1;
      for (const auto& v : inst.vars) {
        const auto& vals = enumerate_sort(v.sort);
        if (!vals || vals->empty()) {
          feasible = false;
          break;
        }
        if (product > opt.exhaustive_cap / static_cast<long>(vals->size())) {
          feasible = false;
          break;
        }
        product *= static_cast<long>(vals->size());
        all.push_back(&*vals);
      }
      if (feasible) {
        std::vector<size_t> idx(inst.vars.size(), 0);
        for (long c = 0; c < product; ++c) {
          for (size_t i = 0; i < inst.vars.size(); ++i)
            letters.insert_or_assign(inst.vars[i].name, (*all[i])[idx[i]]);
          try {
            if (!judge(inst, env)) return false;
          } catch (const BudgetError&) {
            ++result.budget_skips;
          }
          for (size_t i = inst.vars.size(); i-- > 0;) {
            if (++idx[i] < all[i]->size()) break;
            idx[i] = 0;
          }
        }
        return true;
      }
      result.fully_exhaustive = false;
    } else {
      result.fully_exhaustive = false;
    }

    for (int s = 0; s < opt.samples; ++s) {
      bool sampled_ok = true;
      for (const auto& v : inst.vars) {
        try {
          letters.insert_or_assign(v.name, b.sample(v.sort.source, v.sort.target, rng));
        } catch (const BudgetError&) {
          ++result.budget_skips;
          sampled_ok = false;
          break;
        }
      }
      if (!sampled_ok) continue;
      try {
        if (!judge(inst, env)) return false;
      } catch (const BudgetError&) {
        ++result.budget_skips;
      }
    }
    return true;
  };

  // Iterate arity assignments in a fixed order over the used symbols.
  const std::string& uses = schema.uses;
  auto bound = [&](char c) { return uses.find(c) != std::string::npos ? opt.max_arity : 0; };
  ArityEnv env;
  for (env.n = 0; env.n <= bound('n'); ++env.n)
    for (env.m = 0; env.m <= bound('m'); ++env.m)
      for (env.p = 0; env.p <= bound('p'); ++env.p)
        for (env.q = 0; env.q <= bound('q'); ++env.q)
          for (const auto& inst : schema.instantiate(env))
            if (!run_instance(inst, env)) return result;
  return result;
}

/// One line per schema per backend, stable across runs with a fixed seed.
template <class B>
std::string format_result_line(const CheckResult<B>& r, const B& backend) {
  std::ostringstream os;
  os << r.schema_id << " [" << r.backend << "]: ";
  if (r.holds()) {
    os << "holds (" << r.instances << " instances";
    if (r.hyp_checked != r.instances) os << ", " << r.hyp_checked << " past hypotheses";
    os << (r.fully_exhaustive ? ", exhaustive" : ", sampled");
    if (r.budget_skips) os << ", " << r.budget_skips << " budget-skipped";
    os << ")";
  } else {
    const auto& cex = *r.cex;
    os << "COUNTEREXAMPLE at " << cex.env.to_string(find_schema(r.schema_id) ? find_schema(r.schema_id)->uses : "nmpq") << "\n";
    os << "  claim: " << pretty_print(cex.left) << " " << rel_symbol(cex.rel) << " "
       << pretty_print(cex.right);
    for (const auto& [name, value] : cex.bindings)
      os << "\n  " << name << " =\n    "
         << [&] {
              std::string s = backend.show(value);
              std::string indented;
              for (char c : s) {
                indented += c;
                if (c == '\n') indented += "    ";
              }
              return indented;
            }();
  }
  return os.str();
}

/// Random monotone morphism / tree morphism generators used by the engine
/// are provided by the backends (see eval.hpp).

}  // namespace park
