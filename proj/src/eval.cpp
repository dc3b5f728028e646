#include "park/eval.hpp"

#include <fstream>
#include <sstream>

namespace park {

Morphism MonBackend::letter(const std::string& name) const {
  if (letters) {
    auto it = letters->find(name);
    if (it != letters->end()) return it->second;
  }
  throw SortError("no binding for letter '" + name + "'");
}

std::optional<std::vector<Morphism>> MonBackend::enumerate(int n, int p, long budget) const {
  try {
    return enumerate_monotone(lat, n, p, budget);
  } catch (const BudgetError&) {
    return std::nullopt;
  }
}

Morphism MonBackend::sample(int n, int p, Rng& rng) const { return sample_monotone(lat, n, p, rng); }

std::string TreeBackend::describe() const {
  std::string s = "Reg(";
  for (int i = 0; i < alphabet->size(); ++i) {
    if (i) s += ",";
    s += alphabet->name(i) + "/" + std::to_string(alphabet->rank(i));
  }
  return s + ")";
}

TreeMorphism TreeBackend::letter(const std::string& name) const {
  if (letters) {
    auto it = letters->find(name);
    if (it != letters->end()) return it->second;
  }
  throw SortError("no binding for letter '" + name + "'");
}

TreeMorphism TreeBackend::sample(int n, int p, Rng& rng) const {
  return sample_tree_morphism(alphabet, n, p, rng);
}

std::string TreeBackend::show(const TreeMorphism& v) const {
  std::string s;
  for (int i = 0; i < v.source; ++i) {
    s += "component " + std::to_string(i + 1) + ": " +
         trim(v.components[static_cast<size_t>(i)]).to_string();
    if (i + 1 < v.source) s += "\n";
  }
  if (v.source == 0) s = "(empty tuple " + std::to_string(v.source) + " -> " + std::to_string(v.target) + ")";
  return s;
}

std::map<std::string, TreeMorphism> atom_bindings(const Signature& sig) {
  std::map<std::string, TreeMorphism> out;
  const auto& alphabet = sig.alphabet();
  if (!alphabet) return out;
  for (int s = 0; s < alphabet->size(); ++s) out.emplace(alphabet->name(s), atom(alphabet, s));
  return out;
}

Morphism sample_monotone(const LatticePtr& lat, int n, int p, Rng& rng) {
  const int m = lat->size();
  const long dom = checked_power(m, p, table_budget());

  // Per-element height, for a linear extension of the product order.
  std::vector<int> h(static_cast<size_t>(m), 0);
  bool changed = true;
  while (changed) {
    changed = false;
    for (int a = 0; a < m; ++a)
      for (int b = 0; b < m; ++b)
        if (a != b && lat->leq(a, b) && h[static_cast<size_t>(b)] < h[static_cast<size_t>(a)] + 1) {
          h[static_cast<size_t>(b)] = h[static_cast<size_t>(a)] + 1;
          changed = true;
        }
  }
  std::vector<std::vector<Elem>> down(static_cast<size_t>(m));  // declared covers, upper -> lowers
  for (const auto& [lo, hi] : lat->cover_pairs()) down[static_cast<size_t>(hi)].push_back(lo);

  std::vector<int> hsum(static_cast<size_t>(dom), 0);
  std::vector<Elem> in(static_cast<size_t>(p));
  for (long x = 0; x < dom; ++x) {
    unpack_tuple(x, m, p, in.data());
    for (int c = 0; c < p; ++c) hsum[static_cast<size_t>(x)] += h[static_cast<size_t>(in[static_cast<size_t>(c)])];
  }
  std::vector<long> order(static_cast<size_t>(dom));
  for (long i = 0; i < dom; ++i) order[static_cast<size_t>(i)] = i;
  std::stable_sort(order.begin(), order.end(),
                   [&](long a, long b) { return hsum[static_cast<size_t>(a)] < hsum[static_cast<size_t>(b)]; });

  std::vector<long> pow(static_cast<size_t>(p) + 1, 1);
  for (int i = 1; i <= p; ++i) pow[static_cast<size_t>(i)] = pow[static_cast<size_t>(i - 1)] * m;

  // Down-cover neighbors generate the product order, so forcing the lower
  // bound against them alone keeps the filled table monotone.
  std::vector<Elem> table(static_cast<size_t>(dom * n));
  std::vector<Elem> upset;
  for (long idx = 0; idx < dom; ++idx) {
    const long x = order[static_cast<size_t>(idx)];
    unpack_tuple(x, m, p, in.data());
    for (int i = 0; i < n; ++i) {
      Elem lower = lat->bottom();
      for (int c = 0; c < p; ++c)
        for (Elem lo : down[static_cast<size_t>(in[static_cast<size_t>(c)])]) {
          const long y = x - (static_cast<long>(in[static_cast<size_t>(c)]) - lo) * pow[static_cast<size_t>(p - 1 - c)];
          lower = lat->join(lower, table[static_cast<size_t>(y * n + i)]);
        }
      upset.clear();
      for (Elem v = 0; v < m; ++v)
        if (lat->leq(lower, v)) upset.push_back(v);
      table[static_cast<size_t>(x * n + i)] =
          upset[static_cast<size_t>(uniform_below(rng, upset.size()))];
    }
  }
  return Morphism(lat, n, p, std::move(table));
}

TreeMorphism sample_tree_morphism(const AlphabetPtr& alphabet, int n, int p, Rng& rng) {
  std::vector<Nfta> comps;
  comps.reserve(static_cast<size_t>(n));
  for (int c = 0; c < n; ++c) {
    const int states = 1 + static_cast<int>(uniform_below(rng, 4));
    std::vector<Nfta::Rule> rules;
    for (int sym = 0; sym < alphabet->size(); ++sym) {
      const int k = alphabet->rank(sym);
      const int count = static_cast<int>(uniform_below(rng, static_cast<std::uint64_t>(states) + 1));
      for (int r = 0; r < count; ++r) {
        Nfta::Rule rule;
        rule.symbol = sym;
        for (int j = 0; j < k; ++j)
          rule.children.push_back(static_cast<int>(uniform_below(rng, static_cast<std::uint64_t>(states))));
        rule.target = static_cast<int>(uniform_below(rng, static_cast<std::uint64_t>(states)));
        rules.push_back(std::move(rule));
      }
    }
    std::vector<std::pair<int, int>> var_rules;
    for (int v = 1; v <= p; ++v) {
      const int count = static_cast<int>(uniform_below(rng, 2));
      for (int r = 0; r < count; ++r)
        var_rules.emplace_back(v, static_cast<int>(uniform_below(rng, static_cast<std::uint64_t>(states))));
    }
    std::vector<int> finals{static_cast<int>(uniform_below(rng, static_cast<std::uint64_t>(states)))};
    for (int s = 0; s < states; ++s)
      if (uniform_below(rng, 4) == 0) finals.push_back(s);
    comps.push_back(trim(Nfta(alphabet, p, states, std::move(rules), std::move(var_rules),
                              std::move(finals))));
  }
  return TreeMorphism::make(alphabet, p, std::move(comps));
}

std::map<std::string, Morphism> parse_bindings(std::istream& in, const LatticePtr& lat) {
  std::map<std::string, Morphism> out;
  std::string line;
  int lineno = 0;

  std::string cur_name;
  int cur_n = 0, cur_p = 0;
  long expected_rows = 0;
  std::vector<Elem> table;
  std::vector<char> seen;

  auto flush = [&] {
    if (cur_name.empty()) return;
    for (long i = 0; i < expected_rows; ++i)
      if (!seen[static_cast<size_t>(i)])
        throw ParseError("binding '" + cur_name + "' is missing a row (have " +
                         std::to_string(std::count(seen.begin(), seen.end(), 1)) + " of " +
                         std::to_string(expected_rows) + ")");
    out.emplace(cur_name, Morphism(lat, cur_n, cur_p, table));
    cur_name.clear();
  };

  while (std::getline(in, line)) {
    ++lineno;
    if (auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
    std::istringstream ls(line);
    std::string first;
    if (!(ls >> first)) continue;
    if (first == "bind") {
      flush();
      if (!(ls >> cur_name >> cur_n >> cur_p))
        throw ParseError("'bind' needs a letter name and two arities", lineno);
      expected_rows = checked_power(lat->size(), cur_p, table_budget());
      table.assign(static_cast<size_t>(expected_rows * cur_n), 0);
      seen.assign(static_cast<size_t>(expected_rows), 0);
      continue;
    }
    if (cur_name.empty()) throw ParseError("table row before any 'bind' line", lineno);
    std::vector<Elem> in_tuple, out_tuple;
    std::string tok = first;
    bool after_arrow = false;
    for (;;) {
      if (tok == "->") {
        after_arrow = true;
      } else {
        int idx = lat->index_of(tok);
        if (idx < 0) throw ParseError("unknown element '" + tok + "'", lineno);
        (after_arrow ? out_tuple : in_tuple).push_back(idx);
      }
      if (!(ls >> tok)) break;
    }
    if (!after_arrow) throw ParseError("table row needs '->'", lineno);
    if (static_cast<int>(in_tuple.size()) != cur_p)
      throw ParseError("row has " + std::to_string(in_tuple.size()) + " inputs, expected " +
                       std::to_string(cur_p), lineno);
    if (static_cast<int>(out_tuple.size()) != cur_n)
      throw ParseError("row has " + std::to_string(out_tuple.size()) + " outputs, expected " +
                       std::to_string(cur_n), lineno);
    const long row = pack_tuple(in_tuple, lat->size());
    if (seen[static_cast<size_t>(row)]) throw ParseError("duplicate table row", lineno);
    seen[static_cast<size_t>(row)] = 1;
    for (int i = 0; i < cur_n; ++i) table[static_cast<size_t>(row * cur_n + i)] = out_tuple[static_cast<size_t>(i)];
  }
  flush();
  return out;
}

std::map<std::string, Morphism> parse_bindings_file(const std::string& path, const LatticePtr& lat) {
  std::ifstream in(path);
  if (!in) throw Error("cannot open bindings file '" + path + "'");
  try {
    return parse_bindings(in, lat);
  } catch (ParseError& e) {
    throw ParseError(path + ": " + e.what());
  }
}

}  // namespace park
