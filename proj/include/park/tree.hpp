#pragma once

#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "park/errors.hpp"
#include "park/morphism.hpp"  // BaseMap

namespace park {

/// Ranked alphabet: symbol names with fixed arities.
class RankedAlphabet {
 public:
  explicit RankedAlphabet(std::vector<std::pair<std::string, int>> symbols);

  int size() const { return static_cast<int>(symbols_.size()); }
  const std::string& name(int s) const { return symbols_[static_cast<size_t>(s)].first; }
  int rank(int s) const { return symbols_[static_cast<size_t>(s)].second; }
  int index_of(const std::string& name) const;  // -1 if unknown
  bool same_as(const RankedAlphabet& o) const { return symbols_ == o.symbols_; }

 private:
  std::vector<std::pair<std::string, int>> symbols_;
};

using AlphabetPtr = std::shared_ptr<const RankedAlphabet>;

/// A finite tree over an alphabet and variables x_1..x_p. node >= 0 is a
/// symbol index; node < 0 encodes variable x_{-node}.
struct Tree {
  int node = 0;
  std::vector<Tree> children;

  bool is_var() const { return node < 0; }
  int var() const { return -node; }
  static Tree variable(int i) { return Tree{-i, {}}; }

  bool operator==(const Tree& o) const { return node == o.node && children == o.children; }
  bool operator<(const Tree& o) const;  // size-lexicographic, for ordered sets
  int node_count() const;
  int depth() const;  // single node = depth 0
};

std::string show_tree(const Tree& t, const RankedAlphabet& alphabet);
Tree parse_tree(const std::string& text, const RankedAlphabet& alphabet);

/// Bottom-up nondeterministic finite tree automaton over Sigma and the
/// variable leaves x_1..x_{var_count}. States are 0..num_states-1.
class Nfta {
 public:
  struct Rule {
    int symbol;
    std::vector<int> children;
    int target;
    bool operator==(const Rule& o) const = default;
  };

  Nfta(AlphabetPtr alphabet, int var_count, int num_states, std::vector<Rule> rules,
       std::vector<std::pair<int, int>> var_rules, std::vector<int> finals);

  const AlphabetPtr& alphabet() const { return alphabet_; }
  int var_count() const { return var_count_; }
  int num_states() const { return num_states_; }
  const std::vector<Rule>& rules() const { return rules_; }
  const std::vector<std::pair<int, int>>& var_rules() const { return var_rules_; }  // (var, target)
  const std::vector<int>& finals() const { return finals_; }

  std::string to_string() const;

 private:
  AlphabetPtr alphabet_;
  int var_count_;
  int num_states_;
  std::vector<Rule> rules_;
  std::vector<std::pair<int, int>> var_rules_;
  std::vector<int> finals_;
};

Nfta empty_language(const AlphabetPtr& alphabet, int var_count);
Nfta singleton_language(const AlphabetPtr& alphabet, int var_count, const Tree& t);

/// States reachable by some run on t (standard bottom-up semantics).
std::vector<int> run_states(const Nfta& a, const Tree& t);
bool member(const Nfta& a, const Tree& t);

Nfta nfta_union(const Nfta& a, const Nfta& b);

/// Complete deterministic automaton with the same language (subset
/// construction, explicit sink state, all transitions materialized).
/// Throws BudgetError if subsets exceed the state budget.
Nfta determinize(const Nfta& a);
Nfta complement(const Nfta& a);
Nfta intersect(const Nfta& a, const Nfta& b);
bool is_empty(const Nfta& a);
bool subset_of(const Nfta& a, const Nfta& b);
bool equivalent(const Nfta& a, const Nfta& b);

/// Keep only states that are both productive and co-accessible.
Nfta trim(const Nfta& a);

/// A smallest accepted tree by node count (deterministic choice), if any.
std::optional<Tree> shortest_accepted_tree(const Nfta& a);

/// A morphism n -> p of the theory of tree languages: an n-tuple of
/// automata over Sigma and X_p; composition is OI-substitution.
struct TreeMorphism {
  AlphabetPtr alphabet;
  int source = 0;
  int target = 0;
  std::vector<Nfta> components;

  static TreeMorphism make(AlphabetPtr alphabet, int target, std::vector<Nfta> components);
};

TreeMorphism atom(const AlphabetPtr& alphabet, int symbol);       // {sigma(x_1..x_k)} : 1 -> k
TreeMorphism atom(const AlphabetPtr& alphabet, const std::string& symbol);
TreeMorphism var_language(const AlphabetPtr& alphabet, int i, int p);  // {x_i} : 1 -> p
TreeMorphism tree_base(const AlphabetPtr& alphabet, const BaseMap& rho);
TreeMorphism tree_identity(const AlphabetPtr& alphabet, int p);
TreeMorphism bottom_tree(const AlphabetPtr& alphabet, int n, int p);  // empty languages

TreeMorphism compose(const TreeMorphism& f, const TreeMorphism& g);  // OI-substitution
TreeMorphism tupling(const std::vector<TreeMorphism>& fs, const AlphabetPtr& alphabet, int target);
TreeMorphism pairing(const TreeMorphism& f, const TreeMorphism& g);
TreeMorphism separated_sum(const TreeMorphism& f, const TreeMorphism& g);
TreeMorphism join(const TreeMorphism& f, const TreeMorphism& g);  // componentwise union
bool leq(const TreeMorphism& f, const TreeMorphism& g);           // componentwise inclusion
bool equal_language(const TreeMorphism& f, const TreeMorphism& g);

/// Least fixed point of f : n -> n+p. For n = 1 this grafts final states
/// onto the x_1 leaves and renumbers the remaining variables; for n > 1 it
/// recurses by the pairing decomposition (Bekic).
TreeMorphism dagger(const TreeMorphism& f);
TreeMorphism tau(const TreeMorphism& f);   // n -> n+n+p
TreeMorphism star(const TreeMorphism& f);  // dagger(tau(f)) : n -> n+p

/// L/K = { t : some OI-instance of t under K lies in L } : 1 -> p,
/// for L : 1 -> q and K : p -> q.
TreeMorphism quotient(const TreeMorphism& L, const TreeMorphism& K);

/// Greatest M with compose(M, K) <= L, componentwise as
/// complement(quotient(complement(L_i), K)).
TreeMorphism residual(const TreeMorphism& L, const TreeMorphism& K);

/// True iff every accepted tree contains exactly one occurrence of each
/// variable; decided against a saturating occurrence-counting automaton.
bool check_strict_distributive(const TreeMorphism& f);

}  // namespace park
