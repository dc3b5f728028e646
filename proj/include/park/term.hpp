#pragma once

#include <memory>
#include <string>
#include <vector>

#include "park/errors.hpp"
#include "park/tree.hpp"

namespace park {

/// Sorted letters available to terms, plus an optional ranked alphabet.
/// Every alphabet symbol sigma/k implicitly declares a letter sigma : 1 -> k
/// (the default tree interpretation binds it to {sigma(x_1..x_k)}).
class Signature {
 public:
  struct Letter {
    std::string name;
    int source;
    int target;
  };

  Signature() = default;
  Signature(AlphabetPtr alphabet, std::vector<Letter> letters);

  const AlphabetPtr& alphabet() const { return alphabet_; }
  const std::vector<Letter>& letters() const { return letters_; }
  const Letter* find(const std::string& name) const;

 private:
  AlphabetPtr alphabet_;
  std::vector<Letter> letters_;
};

/// Signature file format: `symbol <name> <rank>` and `letter <name> <n> <p>`
/// lines; blank lines and '#' comments ignored.
Signature parse_signature(std::istream& in);
Signature parse_signature_file(const std::string& path);

enum class TermKind {
  Letter,  // named morphism variable
  Inj,     // i_n : 1 -> n
  Id,      // 1_n
  Zero,    // 0_p : 0 -> p
  Bot,     // least morphism n -> p
  Base,    // base morphism of [n] -> [p]
  Comp,    // f . g
  Tup,     // <f_1, ..., f_k> with explicit target
  Pair,    // <f, g> source concatenation
  Sum,     // f (+) g
  Join,    // f v g
  Dagger,
  Star,
  Resid,   // resid(h, g): greatest f with f.g <= h
};

struct Term;
using TermPtr = std::shared_ptr<const Term>;

/// Immutable term node. Integer fields by kind: Inj(i=a, n=b), Id(n=a),
/// Zero(p=a), Bot(n=a, p=b), Tup(target=a), Base(image, target=a).
struct Term {
  TermKind kind;
  std::string name;
  int a = 0, b = 0;
  std::vector<int> image;
  std::vector<TermPtr> kids;
};

TermPtr letter(std::string name);
TermPtr inj(int i, int n);
TermPtr id(int n);
TermPtr zero(int p);
TermPtr bot(int n, int p);
TermPtr base(std::vector<int> image, int target);
TermPtr comp(TermPtr f, TermPtr g);
TermPtr tup(std::vector<TermPtr> kids, int target);
TermPtr pair_term(TermPtr f, TermPtr g);
TermPtr sum(TermPtr f, TermPtr g);
TermPtr join_term(TermPtr f, TermPtr g);
TermPtr dagger_term(TermPtr f);
TermPtr star_term(TermPtr f);
TermPtr resid(TermPtr h, TermPtr g);

bool term_equal(const TermPtr& a, const TermPtr& b);

struct Sort {
  int source = 0;
  int target = 0;
  bool operator==(const Sort&) const = default;
};

/// The unique sort of a term, or SortError. Dagger subjects n -> n+p yield
/// n -> p; Star preserves the sort; Resid(h : n->q, g : p->q) is n -> p.
Sort sort_of(const TermPtr& t, const Signature& sig);

/// Concrete syntax (whitespace-insensitive; '#' starts a comment):
///   term := join ; join := comp { "|" comp } ; comp := prim { "." prim } ;
///   prim := NAME | inj(i,n) | id(n) | zero(p) | bot(n,p)
///         | base(i1,...,ik -> p) | tup(t1,...,tk ; p) | pair(t,u)
///         | sum(t,u) | dagger(t) | star(t) | resid(t,u) | "(" term ")"
/// The result is sort-checked against the signature.
TermPtr parse_term(const std::string& text, const Signature& sig);
TermPtr parse_term_file(const std::string& path, const Signature& sig);

/// Prints in the grammar above; parse_term(pretty_print(t)) == t.
std::string pretty_print(const TermPtr& t);

/// Rewrites every dagger into the star fragment: s-dagger becomes
/// (s')* . pair(bot(n,p), id(p)), innermost first. Sort preserving.
TermPtr to_star_form(const TermPtr& t, const Signature& sig);

/// Rewrites every star into the dagger fragment: s* becomes
/// dagger(s' . sum(id(n), sum(zero(n), id(p))) | sum(zero(n), sum(id(n), zero(p)))),
/// innermost first. Sort preserving.
TermPtr to_dagger_form(const TermPtr& t, const Signature& sig);

/// The tau composite as a term: u . (1_n + 0_n + 1_p) v (0_n + 1_n + 0_p).
TermPtr tau_term(const TermPtr& u, int n, int p);

}  // namespace park
