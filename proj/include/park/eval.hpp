#pragma once

#include <iosfwd>
#include <map>
#include <optional>

#include "park/morphism.hpp"
#include "park/random.hpp"
#include "park/term.hpp"
#include "park/tree.hpp"

namespace park {

/// Raised when a backend operation fails during term evaluation; the message
/// carries the innermost offending subterm.
struct EvalError : Error {
  using Error::Error;
};

/// Interpretation over the lattice model: every letter maps to a tabulated
/// monotone morphism of the letter's sort.
struct MonBackend {
  using Value = Morphism;

  LatticePtr lat;
  const std::map<std::string, Morphism>* letters = nullptr;

  std::string describe() const { return "Mon(" + lat->name() + ")"; }
  Value letter(const std::string& name) const;
  Value injection(int i, int n) const { return park::injection(lat, i, n); }
  Value base(const BaseMap& rho) const { return park::base_morphism(lat, rho); }
  Value bottom(int n, int p) const { return park::bottom_morphism(lat, n, p); }
  Value compose(const Value& f, const Value& g) const { return park::compose(f, g); }
  Value tupling(const std::vector<Value>& fs, int target) const {
    return park::tupling(fs, lat, target);
  }
  Value pairing(const Value& f, const Value& g) const { return park::pairing(f, g); }
  Value sum(const Value& f, const Value& g) const { return park::separated_sum(f, g); }
  Value join(const Value& f, const Value& g) const { return park::join(f, g); }
  Value dagger(const Value& f) const { return park::dagger(f); }
  Value star(const Value& f) const { return park::star(f); }
  Value residual(const Value& h, const Value& g) const { return park::residual(h, g); }

  bool equal(const Value& a, const Value& b) const { return a == b; }
  bool leq(const Value& a, const Value& b) const { return park::leq(a, b); }
  Sort value_sort(const Value& v) const { return {v.source(), v.target()}; }

  std::optional<std::vector<Value>> enumerate(int n, int p, long budget) const;
  Value sample(int n, int p, Rng& rng) const;
  std::string show(const Value& v) const { return v.to_string(); }
};

/// Interpretation over regular tree languages; equality is language
/// equivalence and the order is language inclusion.
struct TreeBackend {
  using Value = TreeMorphism;

  AlphabetPtr alphabet;
  const std::map<std::string, TreeMorphism>* letters = nullptr;

  std::string describe() const;
  Value letter(const std::string& name) const;
  Value injection(int i, int n) const { return park::var_language(alphabet, i, n); }
  Value base(const BaseMap& rho) const { return park::tree_base(alphabet, rho); }
  Value bottom(int n, int p) const { return park::bottom_tree(alphabet, n, p); }
  Value compose(const Value& f, const Value& g) const { return park::compose(f, g); }
  Value tupling(const std::vector<Value>& fs, int target) const {
    return park::tupling(fs, alphabet, target);
  }
  Value pairing(const Value& f, const Value& g) const { return park::pairing(f, g); }
  Value sum(const Value& f, const Value& g) const { return park::separated_sum(f, g); }
  Value join(const Value& f, const Value& g) const { return park::join(f, g); }
  Value dagger(const Value& f) const { return park::dagger(f); }
  Value star(const Value& f) const { return park::star(f); }
  Value residual(const Value& h, const Value& g) const { return park::residual(h, g); }

  bool equal(const Value& a, const Value& b) const { return equal_language(a, b); }
  bool leq(const Value& a, const Value& b) const { return park::leq(a, b); }
  Sort value_sort(const Value& v) const { return {v.source, v.target}; }

  std::optional<std::vector<Value>> enumerate(int, int, long) const { return std::nullopt; }
  Value sample(int n, int p, Rng& rng) const;
  std::string show(const Value& v) const;
};

/// The default tree interpretation: every letter that names an alphabet
/// symbol sigma/k denotes the language {sigma(x_1..x_k)}.
std::map<std::string, TreeMorphism> atom_bindings(const Signature& sig);

/// Structural evaluation of a sort-correct term over a backend.
template <class B>
typename B::Value eval(const TermPtr& t, const B& b) {
  try {
    switch (t->kind) {
      case TermKind::Letter:
        return b.letter(t->name);
      case TermKind::Inj:
        return b.injection(t->a, t->b);
      case TermKind::Id:
        return b.base(BaseMap::identity(t->a));
      case TermKind::Zero:
        return b.base(BaseMap{{}, t->a});
      case TermKind::Bot:
        return b.bottom(t->a, t->b);
      case TermKind::Base:
        return b.base(BaseMap{t->image, t->a});
      case TermKind::Comp: {
        auto l = eval(t->kids[0], b);  // left to right, deterministically
        auto r = eval(t->kids[1], b);
        return b.compose(l, r);
      }
      case TermKind::Tup: {
        std::vector<typename B::Value> vals;
        vals.reserve(t->kids.size());
        for (const auto& k : t->kids) vals.push_back(eval(k, b));
        return b.tupling(vals, t->a);
      }
      case TermKind::Pair: {
        auto l = eval(t->kids[0], b);
        auto r = eval(t->kids[1], b);
        return b.pairing(l, r);
      }
      case TermKind::Sum: {
        auto l = eval(t->kids[0], b);
        auto r = eval(t->kids[1], b);
        return b.sum(l, r);
      }
      case TermKind::Join: {
        auto l = eval(t->kids[0], b);
        auto r = eval(t->kids[1], b);
        return b.join(l, r);
      }
      case TermKind::Dagger:
        return b.dagger(eval(t->kids[0], b));
      case TermKind::Star:
        return b.star(eval(t->kids[0], b));
      case TermKind::Resid: {
        auto l = eval(t->kids[0], b);
        auto r = eval(t->kids[1], b);
        return b.residual(l, r);
      }
    }
    throw Error("unreachable term kind");
  } catch (const EvalError&) {
    throw;  // already carries the innermost subterm
  } catch (const BudgetError& e) {
    // Stays a BudgetError: callers treat budget exhaustion as skippable.
    throw BudgetError(std::string(e.what()) + " [in " + pretty_print(t) + "]");
  } catch (const Error& e) {
    throw EvalError(std::string(e.what()) + " [in " + pretty_print(t) + "]");
  }
}

/// Seeded random monotone morphism: fill the table along a linear extension
/// of L^p, drawing each coordinate uniformly from the up-set of the join of
/// the already-forced lower bounds.
Morphism sample_monotone(const LatticePtr& lat, int n, int p, Rng& rng);

/// Seeded random tree morphism: each component a trimmed random automaton
/// with at most four states.
TreeMorphism sample_tree_morphism(const AlphabetPtr& alphabet, int n, int p, Rng& rng);

/// Bindings file for the lattice backend:
///   bind <letter> <n> <p>
///   <e1> ... <ep> -> <o1> ... <on>     (one row per input tuple)
std::map<std::string, Morphism> parse_bindings(std::istream& in, const LatticePtr& lat);
std::map<std::string, Morphism> parse_bindings_file(const std::string& path, const LatticePtr& lat);

}  // namespace park
