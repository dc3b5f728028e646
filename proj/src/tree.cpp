#include "park/tree.hpp"

#include <algorithm>
#include <map>
#include <queue>
#include <set>
#include <sstream>

namespace park {

namespace {

void require_same_alphabet(const Nfta& a, const Nfta& b, const char* op) {
  if (!a.alphabet()->same_as(*b.alphabet())) throw SortError(std::string(op) + ": alphabet mismatch");
}

void require_same_sort(const Nfta& a, const Nfta& b, const char* op) {
  require_same_alphabet(a, b, op);
  if (a.var_count() != b.var_count())
    throw SortError(std::string(op) + ": variable counts differ (" + std::to_string(a.var_count()) +
                    " vs " + std::to_string(b.var_count()) + ")");
}

/// Productive states: those deriving at least one tree. Counting algorithm,
/// linear in the total rule size.
std::vector<char> productive_states(const Nfta& a) {
  std::vector<char> prod(static_cast<size_t>(a.num_states()), 0);
  std::vector<int> pending(a.rules().size());
  std::vector<std::vector<int>> uses(static_cast<size_t>(a.num_states()));  // state -> rule indices
  std::queue<int> work;

  for (size_t r = 0; r < a.rules().size(); ++r) {
    const auto& rule = a.rules()[r];
    std::set<int> distinct(rule.children.begin(), rule.children.end());
    pending[r] = static_cast<int>(distinct.size());
    for (int s : distinct) uses[static_cast<size_t>(s)].push_back(static_cast<int>(r));
    if (pending[r] == 0 && !prod[static_cast<size_t>(rule.target)]) {
      prod[static_cast<size_t>(rule.target)] = 1;
      work.push(rule.target);
    }
  }
  for (const auto& [v, t] : a.var_rules()) {
    (void)v;
    if (!prod[static_cast<size_t>(t)]) {
      prod[static_cast<size_t>(t)] = 1;
      work.push(t);
    }
  }
  while (!work.empty()) {
    int s = work.front();
    work.pop();
    for (int r : uses[static_cast<size_t>(s)]) {
      if (--pending[static_cast<size_t>(r)] == 0) {
        int t = a.rules()[static_cast<size_t>(r)].target;
        if (!prod[static_cast<size_t>(t)]) {
          prod[static_cast<size_t>(t)] = 1;
          work.push(t);
        }
      }
    }
  }
  return prod;
}

/// Assembles an automaton whose epsilon links are eliminated on finish.
/// A link (from, to) means a run reaching 'from' may continue as 'to'.
struct EpsBuilder {
  int num_states = 0;
  std::vector<Nfta::Rule> rules;
  std::vector<std::pair<int, int>> var_rules;
  std::vector<std::pair<int, int>> eps;
  std::vector<int> finals;

  int add_states(int k) {
    int base = num_states;
    num_states += k;
    return base;
  }

  void copy_from(const Nfta& a, int offset, bool include_var_rules) {
    for (const auto& r : a.rules()) {
      Nfta::Rule c = r;
      for (int& s : c.children) s += offset;
      c.target += offset;
      rules.push_back(std::move(c));
    }
    if (include_var_rules)
      for (const auto& [v, t] : a.var_rules()) var_rules.emplace_back(v, t + offset);
  }

  Nfta finish(const AlphabetPtr& alphabet, int var_count) {
    // Transitive closure of the links, then duplicate every rule whose
    // target has successors.
    std::vector<std::vector<int>> next(static_cast<size_t>(num_states));
    for (const auto& [a, b] : eps) next[static_cast<size_t>(a)].push_back(b);
    std::vector<std::vector<int>> closure(static_cast<size_t>(num_states));
    for (int s = 0; s < num_states; ++s) {
      std::vector<char> seen(static_cast<size_t>(num_states), 0);
      std::queue<int> work;
      work.push(s);
      seen[static_cast<size_t>(s)] = 1;
      while (!work.empty()) {
        int u = work.front();
        work.pop();
        for (int v : next[static_cast<size_t>(u)])
          if (!seen[static_cast<size_t>(v)]) {
            seen[static_cast<size_t>(v)] = 1;
            work.push(v);
            closure[static_cast<size_t>(s)].push_back(v);
          }
      }
      std::sort(closure[static_cast<size_t>(s)].begin(), closure[static_cast<size_t>(s)].end());
    }

    std::vector<Nfta::Rule> out_rules = rules;
    for (const auto& r : rules)
      for (int t : closure[static_cast<size_t>(r.target)]) {
        Nfta::Rule c = r;
        c.target = t;
        out_rules.push_back(std::move(c));
      }
    std::vector<std::pair<int, int>> out_vars = var_rules;
    for (const auto& [v, s] : var_rules)
      for (int t : closure[static_cast<size_t>(s)]) out_vars.emplace_back(v, t);

    std::sort(out_rules.begin(), out_rules.end(), [](const Nfta::Rule& a, const Nfta::Rule& b) {
      return std::tie(a.symbol, a.children, a.target) < std::tie(b.symbol, b.children, b.target);
    });
    out_rules.erase(std::unique(out_rules.begin(), out_rules.end()), out_rules.end());
    std::sort(out_vars.begin(), out_vars.end());
    out_vars.erase(std::unique(out_vars.begin(), out_vars.end()), out_vars.end());
    return Nfta(alphabet, var_count, num_states, std::move(out_rules), std::move(out_vars),
                std::move(finals));
  }
};

/// Renames variables by image[i-1] and re-sorts to new_var_count.
Nfta rename_vars(const Nfta& a, const std::vector<int>& image, int new_var_count) {
  std::vector<std::pair<int, int>> vars;
  vars.reserve(a.var_rules().size());
  for (const auto& [v, t] : a.var_rules()) vars.emplace_back(image[static_cast<size_t>(v - 1)], t);
  return Nfta(a.alphabet(), new_var_count, a.num_states(), a.rules(), std::move(vars), a.finals());
}

/// Least fixed point in the recursion variable x_1 of a scalar component
/// over X_{1+p}: remove the x_1 leaf rules and graft final states onto their
/// targets, then shift the remaining variables down by one.
Nfta scalar_dagger(const Nfta& a, int p) {
  EpsBuilder b;
  b.add_states(a.num_states());
  b.copy_from(a, 0, false);
  for (const auto& [v, t] : a.var_rules()) {
    if (v == 1) {
      for (int f : a.finals()) b.eps.emplace_back(f, t);
    } else {
      b.var_rules.emplace_back(v - 1, t);
    }
  }
  b.finals = a.finals();
  return b.finish(a.alphabet(), p);
}

}  // namespace

RankedAlphabet::RankedAlphabet(std::vector<std::pair<std::string, int>> symbols)
    : symbols_(std::move(symbols)) {
  for (size_t i = 0; i < symbols_.size(); ++i) {
    if (symbols_[i].second < 0) throw Error("symbol '" + symbols_[i].first + "' has negative rank");
    for (size_t j = 0; j < i; ++j)
      if (symbols_[j].first == symbols_[i].first)
        throw Error("duplicate symbol '" + symbols_[i].first + "'");
  }
}

int RankedAlphabet::index_of(const std::string& name) const {
  for (size_t i = 0; i < symbols_.size(); ++i)
    if (symbols_[i].first == name) return static_cast<int>(i);
  return -1;
}

bool Tree::operator<(const Tree& o) const {
  const int a = node_count(), b = o.node_count();
  if (a != b) return a < b;
  if (node != o.node) return node < o.node;
  return children < o.children;
}

int Tree::node_count() const {
  int n = 1;
  for (const Tree& c : children) n += c.node_count();
  return n;
}

int Tree::depth() const {
  int d = 0;
  for (const Tree& c : children) d = std::max(d, 1 + c.depth());
  return d;
}

std::string show_tree(const Tree& t, const RankedAlphabet& alphabet) {
  if (t.is_var()) return "x" + std::to_string(t.var());
  std::string s = alphabet.name(t.node);
  if (t.children.empty()) return s;
  s += "(";
  for (size_t i = 0; i < t.children.size(); ++i) {
    if (i) s += ",";
    s += show_tree(t.children[i], alphabet);
  }
  return s + ")";
}

namespace {
Tree parse_tree_at(const std::string& text, size_t& pos, const RankedAlphabet& alphabet) {
  auto skip = [&] { while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos; };
  skip();
  size_t start = pos;
  while (pos < text.size() && (std::isalnum(static_cast<unsigned char>(text[pos])) || text[pos] == '_')) ++pos;
  if (start == pos) throw ParseError("expected a tree node at position " + std::to_string(pos));
  std::string name = text.substr(start, pos - start);
  skip();

  int sym = alphabet.index_of(name);
  if (sym < 0) {
    if (name.size() > 1 && name[0] == 'x' &&
        std::all_of(name.begin() + 1, name.end(), [](char c) { return std::isdigit(static_cast<unsigned char>(c)); }))
      return Tree::variable(std::stoi(name.substr(1)));
    throw ParseError("unknown symbol '" + name + "'");
  }
  Tree t{sym, {}};
  if (pos < text.size() && text[pos] == '(') {
    ++pos;
    skip();
    if (pos < text.size() && text[pos] == ')') {
      ++pos;
    } else {
      for (;;) {
        t.children.push_back(parse_tree_at(text, pos, alphabet));
        skip();
        if (pos < text.size() && text[pos] == ',') {
          ++pos;
          continue;
        }
        if (pos < text.size() && text[pos] == ')') {
          ++pos;
          break;
        }
        throw ParseError("expected ',' or ')' at position " + std::to_string(pos));
      }
    }
  }
  if (static_cast<int>(t.children.size()) != alphabet.rank(sym))
    throw ParseError("symbol '" + name + "' has rank " + std::to_string(alphabet.rank(sym)) +
                     ", got " + std::to_string(t.children.size()) + " children");
  return t;
}
}  // namespace

Tree parse_tree(const std::string& text, const RankedAlphabet& alphabet) {
  size_t pos = 0;
  Tree t = parse_tree_at(text, pos, alphabet);
  while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
  if (pos != text.size()) throw ParseError("trailing input after tree at position " + std::to_string(pos));
  return t;
}

Nfta::Nfta(AlphabetPtr alphabet, int var_count, int num_states, std::vector<Rule> rules,
           std::vector<std::pair<int, int>> var_rules, std::vector<int> finals)
    : alphabet_(std::move(alphabet)),
      var_count_(var_count),
      num_states_(num_states),
      rules_(std::move(rules)),
      var_rules_(std::move(var_rules)),
      finals_(std::move(finals)) {
  if (var_count_ < 0 || num_states_ < 0) throw SortError("negative automaton size");
  auto check_state = [&](int s) {
    if (s < 0 || s >= num_states_) throw Error("automaton rule references state " + std::to_string(s));
  };
  for (const auto& r : rules_) {
    if (r.symbol < 0 || r.symbol >= alphabet_->size())
      throw Error("rule references unknown symbol index " + std::to_string(r.symbol));
    if (static_cast<int>(r.children.size()) != alphabet_->rank(r.symbol))
      throw Error("rule arity mismatch for symbol '" + alphabet_->name(r.symbol) + "'");
    for (int c : r.children) check_state(c);
    check_state(r.target);
  }
  for (const auto& [v, t] : var_rules_) {
    if (v < 1 || v > var_count_) throw Error("leaf rule references variable x" + std::to_string(v));
    check_state(t);
  }
  for (int f : finals_) check_state(f);
  std::sort(finals_.begin(), finals_.end());
  finals_.erase(std::unique(finals_.begin(), finals_.end()), finals_.end());
}

std::string Nfta::to_string() const {
  std::ostringstream os;
  os << "states " << num_states_ << ", vars " << var_count_ << ", finals {";
  for (size_t i = 0; i < finals_.size(); ++i) os << (i ? "," : "") << finals_[i];
  os << "}";
  for (const auto& [v, t] : var_rules_) os << "\n  x" << v << " -> " << t;
  for (const auto& r : rules_) {
    os << "\n  " << alphabet_->name(r.symbol);
    if (!r.children.empty()) {
      os << "(";
      for (size_t i = 0; i < r.children.size(); ++i) os << (i ? "," : "") << r.children[i];
      os << ")";
    }
    os << " -> " << r.target;
  }
  return os.str();
}

Nfta empty_language(const AlphabetPtr& alphabet, int var_count) {
  return Nfta(alphabet, var_count, 0, {}, {}, {});
}

Nfta singleton_language(const AlphabetPtr& alphabet, int var_count, const Tree& t) {
  std::vector<Nfta::Rule> rules;
  std::vector<std::pair<int, int>> var_rules;
  int next_state = 0;
  auto build = [&](auto&& self, const Tree& u) -> int {
    if (u.is_var()) {
      if (u.var() < 1 || u.var() > var_count)
        throw SortError("tree variable x" + std::to_string(u.var()) + " outside [1, " +
                        std::to_string(var_count) + "]");
      var_rules.emplace_back(u.var(), next_state);
      return next_state++;
    }
    std::vector<int> kids;
    kids.reserve(u.children.size());
    for (const Tree& c : u.children) kids.push_back(self(self, c));
    rules.push_back({u.node, std::move(kids), next_state});
    return next_state++;
  };
  int root = build(build, t);
  return Nfta(alphabet, var_count, next_state, std::move(rules), std::move(var_rules), {root});
}

std::vector<int> run_states(const Nfta& a, const Tree& t) {
  std::vector<char> mark(static_cast<size_t>(a.num_states()), 0);
  if (t.is_var()) {
    for (const auto& [v, s] : a.var_rules())
      if (v == t.var()) mark[static_cast<size_t>(s)] = 1;
  } else {
    std::vector<std::vector<int>> kid_states;
    kid_states.reserve(t.children.size());
    std::vector<std::vector<char>> kid_marks;
    for (const Tree& c : t.children) {
      auto ks = run_states(a, c);
      std::vector<char> km(static_cast<size_t>(a.num_states()), 0);
      for (int s : ks) km[static_cast<size_t>(s)] = 1;
      kid_states.push_back(std::move(ks));
      kid_marks.push_back(std::move(km));
    }
    for (const auto& r : a.rules()) {
      if (r.symbol != t.node) continue;
      bool ok = true;
      for (size_t j = 0; j < r.children.size() && ok; ++j)
        ok = kid_marks[j][static_cast<size_t>(r.children[j])] != 0;
      if (ok) mark[static_cast<size_t>(r.target)] = 1;
    }
  }
  std::vector<int> out;
  for (int s = 0; s < a.num_states(); ++s)
    if (mark[static_cast<size_t>(s)]) out.push_back(s);
  return out;
}

bool member(const Nfta& a, const Tree& t) {
  auto states = run_states(a, t);
  for (int s : states)
    if (std::binary_search(a.finals().begin(), a.finals().end(), s)) return true;
  return false;
}

Nfta nfta_union(const Nfta& a, const Nfta& b) {
  require_same_sort(a, b, "union");
  EpsBuilder u;
  u.add_states(a.num_states() + b.num_states());
  u.copy_from(a, 0, true);
  u.copy_from(b, a.num_states(), true);
  for (int f : a.finals()) u.finals.push_back(f);
  for (int f : b.finals()) u.finals.push_back(f + a.num_states());
  return u.finish(a.alphabet(), a.var_count());
}

namespace {

using Subset = std::vector<std::uint64_t>;

Subset make_subset(int n) { return Subset(static_cast<size_t>((n + 63) / 64), 0); }
void subset_add(Subset& s, int q) { s[static_cast<size_t>(q) / 64] |= (std::uint64_t{1} << (q % 64)); }
bool subset_has(const Subset& s, int q) {
  return (s[static_cast<size_t>(q) / 64] >> (q % 64)) & 1;
}

}  // namespace

Nfta determinize(const Nfta& a) {
  const long budget = state_budget();
  std::map<Subset, int> ids;
  std::vector<Subset> subsets;
  auto intern = [&](const Subset& s) {
    auto [it, inserted] = ids.emplace(s, static_cast<int>(subsets.size()));
    if (inserted) {
      subsets.push_back(s);
      if (static_cast<long>(subsets.size()) > budget)
        throw BudgetError("subset construction exceeds state budget " + std::to_string(budget));
    }
    return it->second;
  };

  // Sink plus all leaf subsets.
  intern(make_subset(a.num_states()));
  std::vector<int> var_target(static_cast<size_t>(a.var_count()), 0);
  for (int v = 1; v <= a.var_count(); ++v) {
    Subset s = make_subset(a.num_states());
    for (const auto& [w, t] : a.var_rules())
      if (w == v) subset_add(s, t);
    var_target[static_cast<size_t>(v - 1)] = intern(s);
  }
  std::vector<int> leaf_target(static_cast<size_t>(a.alphabet()->size()), -1);
  for (int sym = 0; sym < a.alphabet()->size(); ++sym) {
    if (a.alphabet()->rank(sym) != 0) continue;
    Subset s = make_subset(a.num_states());
    for (const auto& r : a.rules())
      if (r.symbol == sym) subset_add(s, r.target);
    leaf_target[static_cast<size_t>(sym)] = intern(s);
  }

  // Saturate: try every combination of discovered subsets that includes at
  // least one subset from the newest frontier.
  std::map<std::pair<int, std::vector<int>>, int> delta;
  size_t closed = 0;
  while (closed < subsets.size()) {
    const size_t frontier = closed;
    closed = subsets.size();
    for (int sym = 0; sym < a.alphabet()->size(); ++sym) {
      const int k = a.alphabet()->rank(sym);
      if (k == 0) continue;
      std::vector<int> combo(static_cast<size_t>(k), 0);
      auto rec = [&](auto&& self, int pos, bool touches_new) -> void {
        if (pos == k) {
          if (!touches_new) return;
          Subset s = make_subset(a.num_states());
          for (const auto& r : a.rules()) {
            if (r.symbol != sym) continue;
            bool ok = true;
            for (int j = 0; j < k && ok; ++j)
              ok = subset_has(subsets[static_cast<size_t>(combo[static_cast<size_t>(j)])], r.children[static_cast<size_t>(j)]);
            if (ok) subset_add(s, r.target);
          }
          delta[{sym, combo}] = intern(s);
          return;
        }
        for (size_t c = 0; c < closed; ++c) {
          combo[static_cast<size_t>(pos)] = static_cast<int>(c);
          self(self, pos + 1, touches_new || c >= frontier);
        }
      };
      rec(rec, 0, frontier == 0);
    }
  }

  // Materialize the complete rule set.
  const int d = static_cast<int>(subsets.size());
  long total_rules = 0;
  for (int sym = 0; sym < a.alphabet()->size(); ++sym) {
    long combos = 1;
    for (int j = 0; j < a.alphabet()->rank(sym); ++j) {
      if (combos > budget / (d > 0 ? d : 1))
        throw BudgetError("determinization rule table exceeds budget");
      combos *= d;
    }
    total_rules += combos;
    if (total_rules > budget) throw BudgetError("determinization rule table exceeds budget");
  }

  std::vector<Nfta::Rule> rules;
  rules.reserve(static_cast<size_t>(total_rules));
  for (int sym = 0; sym < a.alphabet()->size(); ++sym) {
    const int k = a.alphabet()->rank(sym);
    if (k == 0) {
      rules.push_back({sym, {}, leaf_target[static_cast<size_t>(sym)]});
      continue;
    }
    std::vector<int> combo(static_cast<size_t>(k), 0);
    for (;;) {
      rules.push_back({sym, combo, delta.at({sym, combo})});
      int pos = k - 1;
      while (pos >= 0 && combo[static_cast<size_t>(pos)] == d - 1) combo[static_cast<size_t>(pos--)] = 0;
      if (pos < 0) break;
      ++combo[static_cast<size_t>(pos)];
    }
  }

  std::vector<std::pair<int, int>> var_rules;
  for (int v = 1; v <= a.var_count(); ++v) var_rules.emplace_back(v, var_target[static_cast<size_t>(v - 1)]);
  std::vector<int> finals;
  for (int s = 0; s < d; ++s)
    for (int f : a.finals())
      if (subset_has(subsets[static_cast<size_t>(s)], f)) {
        finals.push_back(s);
        break;
      }
  return Nfta(a.alphabet(), a.var_count(), d, std::move(rules), std::move(var_rules), std::move(finals));
}

Nfta complement(const Nfta& a) {
  Nfta d = determinize(a);
  std::vector<char> is_final(static_cast<size_t>(d.num_states()), 0);
  for (int f : d.finals()) is_final[static_cast<size_t>(f)] = 1;
  std::vector<int> finals;
  for (int s = 0; s < d.num_states(); ++s)
    if (!is_final[static_cast<size_t>(s)]) finals.push_back(s);
  return Nfta(d.alphabet(), d.var_count(), d.num_states(), d.rules(), d.var_rules(), std::move(finals));
}

Nfta intersect(const Nfta& a, const Nfta& b) {
  require_same_sort(a, b, "intersect");
  const long budget = state_budget();
  const long states = static_cast<long>(a.num_states()) * b.num_states();
  if (states > budget) throw BudgetError("product automaton exceeds state budget");
  auto enc = [&](int qa, int qb) { return qa * b.num_states() + qb; };

  std::vector<Nfta::Rule> rules;
  for (const auto& ra : a.rules())
    for (const auto& rb : b.rules()) {
      if (ra.symbol != rb.symbol) continue;
      Nfta::Rule r;
      r.symbol = ra.symbol;
      r.children.reserve(ra.children.size());
      for (size_t j = 0; j < ra.children.size(); ++j)
        r.children.push_back(enc(ra.children[j], rb.children[j]));
      r.target = enc(ra.target, rb.target);
      rules.push_back(std::move(r));
      if (static_cast<long>(rules.size()) > budget * 16)
        throw BudgetError("product rule set exceeds budget");
    }
  std::vector<std::pair<int, int>> var_rules;
  for (const auto& [va, ta] : a.var_rules())
    for (const auto& [vb, tb] : b.var_rules())
      if (va == vb) var_rules.emplace_back(va, enc(ta, tb));
  std::vector<int> finals;
  for (int fa : a.finals())
    for (int fb : b.finals()) finals.push_back(enc(fa, fb));
  return Nfta(a.alphabet(), a.var_count(), static_cast<int>(states), std::move(rules),
              std::move(var_rules), std::move(finals));
}

bool is_empty(const Nfta& a) {
  auto prod = productive_states(a);
  for (int f : a.finals())
    if (prod[static_cast<size_t>(f)]) return false;
  return true;
}

bool subset_of(const Nfta& a, const Nfta& b) { return is_empty(intersect(a, complement(b))); }

bool equivalent(const Nfta& a, const Nfta& b) { return subset_of(a, b) && subset_of(b, a); }

Nfta trim(const Nfta& a) {
  auto prod = productive_states(a);
  // Co-accessible: a state is useful below some final context, where every
  // sibling position can be filled by a productive state.
  std::vector<char> useful(static_cast<size_t>(a.num_states()), 0);
  for (int f : a.finals()) useful[static_cast<size_t>(f)] = 1;
  bool changed = true;
  while (changed) {
    changed = false;
    for (const auto& r : a.rules()) {
      if (!useful[static_cast<size_t>(r.target)]) continue;
      bool siblings_ok = true;
      for (int c : r.children)
        if (!prod[static_cast<size_t>(c)]) siblings_ok = false;
      if (!siblings_ok) continue;
      for (int c : r.children)
        if (!useful[static_cast<size_t>(c)]) {
          useful[static_cast<size_t>(c)] = 1;
          changed = true;
        }
    }
  }
  std::vector<int> remap(static_cast<size_t>(a.num_states()), -1);
  int next = 0;
  for (int s = 0; s < a.num_states(); ++s)
    if (prod[static_cast<size_t>(s)] && useful[static_cast<size_t>(s)]) remap[static_cast<size_t>(s)] = next++;
  std::vector<Nfta::Rule> rules;
  for (const auto& r : a.rules()) {
    if (remap[static_cast<size_t>(r.target)] < 0) continue;
    bool ok = true;
    for (int c : r.children)
      if (remap[static_cast<size_t>(c)] < 0) ok = false;
    if (!ok) continue;
    Nfta::Rule c = r;
    for (int& s : c.children) s = remap[static_cast<size_t>(s)];
    c.target = remap[static_cast<size_t>(c.target)];
    rules.push_back(std::move(c));
  }
  std::vector<std::pair<int, int>> var_rules;
  for (const auto& [v, t] : a.var_rules())
    if (remap[static_cast<size_t>(t)] >= 0) var_rules.emplace_back(v, remap[static_cast<size_t>(t)]);
  std::vector<int> finals;
  for (int f : a.finals())
    if (remap[static_cast<size_t>(f)] >= 0) finals.push_back(remap[static_cast<size_t>(f)]);
  return Nfta(a.alphabet(), a.var_count(), next, std::move(rules), std::move(var_rules),
              std::move(finals));
}

std::optional<Tree> shortest_accepted_tree(const Nfta& a) {
  std::vector<std::optional<Tree>> best(static_cast<size_t>(a.num_states()));
  std::vector<int> size(static_cast<size_t>(a.num_states()), INT32_MAX);
  auto offer = [&](int s, Tree t) {
    int n = t.node_count();
    if (n < size[static_cast<size_t>(s)]) {
      size[static_cast<size_t>(s)] = n;
      best[static_cast<size_t>(s)] = std::move(t);
      return true;
    }
    return false;
  };
  bool changed = true;
  // Minimal witnesses have depth at most num_states; bounded passes suffice.
  for (int pass = 0; pass <= a.num_states() + 1 && changed; ++pass) {
    changed = false;
    for (const auto& [v, t] : a.var_rules())
      if (offer(t, Tree::variable(v))) changed = true;
    for (const auto& r : a.rules()) {
      bool ok = true;
      for (int c : r.children)
        if (!best[static_cast<size_t>(c)]) ok = false;
      if (!ok) continue;
      Tree t{r.symbol, {}};
      for (int c : r.children) t.children.push_back(*best[static_cast<size_t>(c)]);
      if (offer(r.target, std::move(t))) changed = true;
    }
  }
  std::optional<Tree> result;
  int best_size = INT32_MAX;
  for (int f : a.finals())
    if (best[static_cast<size_t>(f)] && size[static_cast<size_t>(f)] < best_size) {
      best_size = size[static_cast<size_t>(f)];
      result = best[static_cast<size_t>(f)];
    }
  return result;
}

TreeMorphism TreeMorphism::make(AlphabetPtr alphabet, int target, std::vector<Nfta> components) {
  TreeMorphism m;
  m.alphabet = std::move(alphabet);
  m.source = static_cast<int>(components.size());
  m.target = target;
  for (const auto& c : components) {
    if (!c.alphabet()->same_as(*m.alphabet)) throw SortError("tree morphism: alphabet mismatch");
    if (c.var_count() != target)
      throw SortError("tree morphism: component over X_" + std::to_string(c.var_count()) +
                      ", expected X_" + std::to_string(target));
  }
  m.components = std::move(components);
  return m;
}

TreeMorphism atom(const AlphabetPtr& alphabet, int symbol) {
  if (symbol < 0 || symbol >= alphabet->size()) throw SortError("unknown symbol index");
  const int k = alphabet->rank(symbol);
  Tree t{symbol, {}};
  for (int i = 1; i <= k; ++i) t.children.push_back(Tree::variable(i));
  return TreeMorphism::make(alphabet, k, {singleton_language(alphabet, k, t)});
}

TreeMorphism atom(const AlphabetPtr& alphabet, const std::string& symbol) {
  int idx = alphabet->index_of(symbol);
  if (idx < 0) throw SortError("unknown symbol '" + symbol + "'");
  return atom(alphabet, idx);
}

TreeMorphism var_language(const AlphabetPtr& alphabet, int i, int p) {
  if (i < 1 || i > p)
    throw SortError("variable index " + std::to_string(i) + " outside [1, " + std::to_string(p) + "]");
  return TreeMorphism::make(alphabet, p, {singleton_language(alphabet, p, Tree::variable(i))});
}

TreeMorphism tree_base(const AlphabetPtr& alphabet, const BaseMap& rho) {
  rho.validate();
  std::vector<Nfta> comps;
  comps.reserve(rho.image.size());
  for (int v : rho.image)
    comps.push_back(singleton_language(alphabet, rho.target, Tree::variable(v)));
  return TreeMorphism::make(alphabet, rho.target, std::move(comps));
}

TreeMorphism tree_identity(const AlphabetPtr& alphabet, int p) {
  return tree_base(alphabet, BaseMap::identity(p));
}

TreeMorphism bottom_tree(const AlphabetPtr& alphabet, int n, int p) {
  std::vector<Nfta> comps(static_cast<size_t>(n), empty_language(alphabet, p));
  return TreeMorphism::make(alphabet, p, std::move(comps));
}

TreeMorphism compose(const TreeMorphism& f, const TreeMorphism& g) {
  if (!f.alphabet->same_as(*g.alphabet)) throw SortError("compose: alphabet mismatch");
  if (f.target != g.source)
    throw SortError("compose: target " + std::to_string(f.target) + " != source " +
                    std::to_string(g.source));
  std::vector<Nfta> comps;
  comps.reserve(f.components.size());
  for (const auto& A : f.components) {
    EpsBuilder b;
    b.add_states(A.num_states());
    b.copy_from(A, 0, false);
    b.finals = A.finals();
    // One shared copy of each substituted component; independent runs on
    // distinct leaf occurrences give OI semantics.
    std::vector<int> offset(static_cast<size_t>(f.target), -1);
    for (int i = 0; i < f.target; ++i) {
      const Nfta& gi = g.components[static_cast<size_t>(i)];
      offset[static_cast<size_t>(i)] = b.add_states(gi.num_states());
      b.copy_from(gi, offset[static_cast<size_t>(i)], true);
    }
    for (const auto& [v, t] : A.var_rules()) {
      const Nfta& gi = g.components[static_cast<size_t>(v - 1)];
      for (int fin : gi.finals()) b.eps.emplace_back(offset[static_cast<size_t>(v - 1)] + fin, t);
    }
    comps.push_back(b.finish(f.alphabet, g.target));
  }
  return TreeMorphism::make(f.alphabet, g.target, std::move(comps));
}

TreeMorphism tupling(const std::vector<TreeMorphism>& fs, const AlphabetPtr& alphabet, int target) {
  std::vector<Nfta> comps;
  for (const auto& f : fs) {
    if (f.source != 1) throw SortError("tupling: component has source " + std::to_string(f.source));
    if (f.target != target) throw SortError("tupling: component target mismatch");
    if (!f.alphabet->same_as(*alphabet)) throw SortError("tupling: alphabet mismatch");
    comps.push_back(f.components[0]);
  }
  return TreeMorphism::make(alphabet, target, std::move(comps));
}

TreeMorphism pairing(const TreeMorphism& f, const TreeMorphism& g) {
  if (!f.alphabet->same_as(*g.alphabet)) throw SortError("pairing: alphabet mismatch");
  if (f.target != g.target) throw SortError("pairing: targets differ");
  std::vector<Nfta> comps = f.components;
  comps.insert(comps.end(), g.components.begin(), g.components.end());
  return TreeMorphism::make(f.alphabet, f.target, std::move(comps));
}

TreeMorphism separated_sum(const TreeMorphism& f, const TreeMorphism& g) {
  if (!f.alphabet->same_as(*g.alphabet)) throw SortError("separated_sum: alphabet mismatch");
  const int p = f.target, q = g.target;
  std::vector<int> keep(static_cast<size_t>(p)), shift(static_cast<size_t>(q));
  for (int i = 0; i < p; ++i) keep[static_cast<size_t>(i)] = i + 1;
  for (int j = 0; j < q; ++j) shift[static_cast<size_t>(j)] = p + j + 1;
  std::vector<Nfta> comps;
  for (const auto& c : f.components) comps.push_back(rename_vars(c, keep, p + q));
  for (const auto& c : g.components) comps.push_back(rename_vars(c, shift, p + q));
  return TreeMorphism::make(f.alphabet, p + q, std::move(comps));
}

TreeMorphism join(const TreeMorphism& f, const TreeMorphism& g) {
  if (f.source != g.source || f.target != g.target) throw SortError("join: sort mismatch");
  std::vector<Nfta> comps;
  comps.reserve(f.components.size());
  for (size_t i = 0; i < f.components.size(); ++i)
    comps.push_back(nfta_union(f.components[i], g.components[i]));
  return TreeMorphism::make(f.alphabet, f.target, std::move(comps));
}

bool leq(const TreeMorphism& f, const TreeMorphism& g) {
  if (f.source != g.source || f.target != g.target) throw SortError("leq: sort mismatch");
  for (size_t i = 0; i < f.components.size(); ++i)
    if (!subset_of(f.components[i], g.components[i])) return false;
  return true;
}

bool equal_language(const TreeMorphism& f, const TreeMorphism& g) {
  if (f.source != g.source || f.target != g.target) throw SortError("equal: sort mismatch");
  for (size_t i = 0; i < f.components.size(); ++i)
    if (!equivalent(f.components[i], g.components[i])) return false;
  return true;
}

TreeMorphism dagger(const TreeMorphism& f) {
  const int n = f.source;
  const int p = f.target - n;
  if (p < 0)
    throw SortError("dagger: source " + std::to_string(n) + " exceeds target " +
                    std::to_string(f.target));
  if (n == 0) return TreeMorphism::make(f.alphabet, p, {});
  if (n == 1)
    return TreeMorphism::make(f.alphabet, p, {scalar_dagger(f.components[0], p)});

  // Pairing decomposition: split off the first component as f1 : 1 -> 1+m+p,
  // take its scalar fixed point, substitute into the rest, and recurse.
  const int m = n - 1;
  TreeMorphism f1 = TreeMorphism::make(f.alphabet, f.target, {f.components[0]});
  std::vector<Nfta> rest_comps(f.components.begin() + 1, f.components.end());
  TreeMorphism g = TreeMorphism::make(f.alphabet, f.target, std::move(rest_comps));

  TreeMorphism f1_dag = dagger(f1);                                // 1 -> m+p
  TreeMorphism h = compose(g, pairing(f1_dag, tree_identity(f.alphabet, m + p)));  // m -> m+p
  TreeMorphism h_dag = dagger(h);                                  // m -> p
  TreeMorphism top = compose(f1_dag, pairing(h_dag, tree_identity(f.alphabet, p)));  // 1 -> p
  return pairing(top, h_dag);
}

TreeMorphism tau(const TreeMorphism& f) {
  const int n = f.source;
  const int p = f.target - n;
  if (p < 0)
    throw SortError("tau: source " + std::to_string(n) + " exceeds target " +
                    std::to_string(f.target));
  // f . (1_n + 0_n + 1_p) is a variable renaming: x_i stays for i <= n, the
  // parameters move past the fresh block.
  std::vector<int> image(static_cast<size_t>(n + p));
  for (int i = 0; i < n; ++i) image[static_cast<size_t>(i)] = i + 1;
  for (int j = 0; j < p; ++j) image[static_cast<size_t>(n + j)] = 2 * n + j + 1;
  std::vector<Nfta> comps;
  comps.reserve(static_cast<size_t>(n));
  for (int i = 0; i < n; ++i) {
    Nfta renamed = rename_vars(f.components[static_cast<size_t>(i)], image, 2 * n + p);
    Nfta inj = singleton_language(f.alphabet, 2 * n + p, Tree::variable(n + i + 1));
    comps.push_back(nfta_union(renamed, inj));
  }
  return TreeMorphism::make(f.alphabet, 2 * n + p, std::move(comps));
}

TreeMorphism star(const TreeMorphism& f) { return dagger(tau(f)); }

TreeMorphism quotient(const TreeMorphism& L, const TreeMorphism& K) {
  if (!L.alphabet->same_as(*K.alphabet)) throw SortError("quotient: alphabet mismatch");
  if (L.source != 1) throw SortError("quotient: dividend must have source 1");
  if (L.target != K.target)
    throw SortError("quotient: targets differ (" + std::to_string(L.target) + " vs " +
                    std::to_string(K.target) + ")");
  const Nfta& A = L.components[0];
  const int p = K.source;
  std::vector<std::pair<int, int>> var_rules;
  for (int s = 0; s < A.num_states(); ++s) {
    Nfta A_s(A.alphabet(), A.var_count(), A.num_states(), A.rules(), A.var_rules(), {s});
    for (int i = 1; i <= p; ++i)
      if (!is_empty(intersect(A_s, K.components[static_cast<size_t>(i - 1)])))
        var_rules.emplace_back(i, s);
  }
  Nfta result(A.alphabet(), p, A.num_states(), A.rules(), std::move(var_rules), A.finals());
  return TreeMorphism::make(L.alphabet, p, {std::move(result)});
}

TreeMorphism residual(const TreeMorphism& L, const TreeMorphism& K) {
  if (!L.alphabet->same_as(*K.alphabet)) throw SortError("residual: alphabet mismatch");
  if (L.target != K.target)
    throw SortError("residual: targets differ (" + std::to_string(L.target) + " vs " +
                    std::to_string(K.target) + ")");
  std::vector<Nfta> comps;
  comps.reserve(L.components.size());
  for (const auto& Li : L.components) {
    TreeMorphism co = TreeMorphism::make(L.alphabet, L.target, {complement(Li)});
    comps.push_back(complement(quotient(co, K).components[0]));
  }
  return TreeMorphism::make(L.alphabet, K.source, std::move(comps));
}

bool check_strict_distributive(const TreeMorphism& f) {
  if (f.source != 1) throw SortError("check_strict_distributive: source must be 1");
  const int p = f.target;
  const auto& alphabet = f.alphabet;
  // Occurrence-counting automaton: states are saturating count vectors in
  // {0,1,2}^p; a tree is good iff every variable occurs exactly once.
  long states = 1;
  for (int i = 0; i < p; ++i) {
    if (states > state_budget() / 3) throw BudgetError("occurrence automaton exceeds state budget");
    states *= 3;
  }
  auto decode = [&](long id, int i) {
    for (int j = 0; j < i; ++j) id /= 3;
    return static_cast<int>(id % 3);
  };
  std::vector<Nfta::Rule> rules;
  std::vector<std::pair<int, int>> var_rules;
  for (int v = 1; v <= p; ++v) {
    long id = 1;
    for (int j = 1; j < v; ++j) id *= 3;
    var_rules.emplace_back(v, static_cast<int>(id));  // unit vector e_v
  }
  for (int sym = 0; sym < alphabet->size(); ++sym) {
    const int k = alphabet->rank(sym);
    std::vector<int> combo(static_cast<size_t>(k), 0);
    for (;;) {
      long sum_id = 0, mult = 1;
      for (int i = 0; i < p; ++i) {
        int c = 0;
        for (int j = 0; j < k; ++j) c += decode(combo[static_cast<size_t>(j)], i);
        sum_id += static_cast<long>(std::min(c, 2)) * mult;
        mult *= 3;
      }
      std::vector<int> children(combo.begin(), combo.end());
      rules.push_back({sym, std::move(children), static_cast<int>(sum_id)});
      if (k == 0) break;
      int pos = k - 1;
      while (pos >= 0 && combo[static_cast<size_t>(pos)] == states - 1) combo[static_cast<size_t>(pos--)] = 0;
      if (pos < 0) break;
      ++combo[static_cast<size_t>(pos)];
    }
  }
  long all_ones = 0, mult = 1;
  for (int i = 0; i < p; ++i) {
    all_ones += mult;
    mult *= 3;
  }
  // The counter automaton is deterministic and complete; its complement is
  // the same automaton with every state except all-ones final.
  std::vector<int> bad_finals;
  for (long s = 0; s < states; ++s)
    if (s != all_ones) bad_finals.push_back(static_cast<int>(s));
  Nfta bad(alphabet, p, static_cast<int>(states), std::move(rules), std::move(var_rules),
           std::move(bad_finals));
  return is_empty(intersect(f.components[0], bad));
}

}  // namespace park
