#include "park/lattice.hpp"

#include <algorithm>
#include <atomic>
#include <fstream>
#include <sstream>
#include <unordered_map>

namespace park {

namespace {
std::atomic<long> g_table_budget{4096};
std::atomic<long> g_state_budget{65536};
}  // namespace

long table_budget() { return g_table_budget.load(); }
void set_table_budget(long n) { g_table_budget.store(n); }
long state_budget() { return g_state_budget.load(); }
void set_state_budget(long n) { g_state_budget.store(n); }

long checked_power(int m, int k, long limit) {
  long r = 1;
  for (int i = 0; i < k; ++i) {
    if (r > limit / (m > 0 ? m : 1))
      throw BudgetError("table of size " + std::to_string(m) + "^" + std::to_string(k) +
                        " exceeds budget " + std::to_string(limit));
    r *= m;
  }
  if (r > limit)
    throw BudgetError("table of size " + std::to_string(r) + " exceeds budget " +
                      std::to_string(limit));
  return r;
}

std::shared_ptr<const Lattice> Lattice::build(
    std::string name, std::vector<std::string> elements,
    const std::vector<std::pair<std::string, std::string>>& covers) {
  if (elements.empty()) throw LatticeError("lattice '" + name + "': element list is empty");

  auto lat = std::shared_ptr<Lattice>(new Lattice());
  lat->name_ = std::move(name);
  lat->elems_ = std::move(elements);
  const size_t m = lat->elems_.size();

  std::unordered_map<std::string, Elem> index;
  for (size_t i = 0; i < m; ++i) {
    if (!index.emplace(lat->elems_[i], static_cast<Elem>(i)).second)
      throw LatticeError("lattice '" + lat->name_ + "': duplicate element '" + lat->elems_[i] + "'");
  }

  lat->leq_.assign(m * m, 0);
  for (size_t i = 0; i < m; ++i) lat->leq_[i * m + i] = 1;
  for (const auto& [lo, hi] : covers) {
    auto a = index.find(lo), b = index.find(hi);
    if (a == index.end()) throw LatticeError("cover references unknown element '" + lo + "'");
    if (b == index.end()) throw LatticeError("cover references unknown element '" + hi + "'");
    std::pair<Elem, Elem> edge{a->second, b->second};
    if (std::find(lat->covers_.begin(), lat->covers_.end(), edge) == lat->covers_.end())
      lat->covers_.push_back(edge);
  }

  // Reflexive-transitive closure (Floyd-Warshall on a tiny boolean matrix).
  for (const auto& [a, b] : lat->covers_) lat->leq_[static_cast<size_t>(a) * m + static_cast<size_t>(b)] = 1;
  for (size_t k = 0; k < m; ++k)
    for (size_t i = 0; i < m; ++i)
      if (lat->leq_[i * m + k])
        for (size_t j = 0; j < m; ++j)
          if (lat->leq_[k * m + j]) lat->leq_[i * m + j] = 1;

  for (size_t i = 0; i < m; ++i)
    for (size_t j = 0; j < m; ++j)
      if (i != j && lat->leq_[i * m + j] && lat->leq_[j * m + i])
        throw LatticeError("order is not antisymmetric: cycle through '" + lat->elems_[i] +
                           "' and '" + lat->elems_[j] + "'");

  // Every pair needs a least upper bound and a greatest lower bound.
  lat->join_.assign(m * m, 0);
  lat->meet_.assign(m * m, 0);
  for (size_t a = 0; a < m; ++a) {
    for (size_t b = 0; b < m; ++b) {
      Elem jn = -1, mt = -1;
      for (size_t c = 0; c < m; ++c) {
        if (lat->leq_[a * m + c] && lat->leq_[b * m + c]) {
          bool least = true;
          for (size_t d = 0; d < m; ++d)
            if (lat->leq_[a * m + d] && lat->leq_[b * m + d] && !lat->leq_[c * m + d]) least = false;
          if (least) jn = static_cast<Elem>(c);
        }
        if (lat->leq_[c * m + a] && lat->leq_[c * m + b]) {
          bool greatest = true;
          for (size_t d = 0; d < m; ++d)
            if (lat->leq_[d * m + a] && lat->leq_[d * m + b] && !lat->leq_[d * m + c]) greatest = false;
          if (greatest) mt = static_cast<Elem>(c);
        }
      }
      if (jn < 0)
        throw LatticeError("no join for {" + lat->elems_[a] + ", " + lat->elems_[b] + "}");
      if (mt < 0)
        throw LatticeError("no meet for {" + lat->elems_[a] + ", " + lat->elems_[b] + "}");
      lat->join_[a * m + b] = jn;
      lat->meet_[a * m + b] = mt;
    }
  }

  Elem bot = 0, top = 0;
  for (size_t i = 1; i < m; ++i) {
    bot = lat->meet_[static_cast<size_t>(bot) * m + i];
    top = lat->join_[static_cast<size_t>(top) * m + i];
  }
  lat->bottom_ = bot;
  lat->top_ = top;

  // Longest strict chain, by dynamic programming over the order.
  std::vector<int> h(m, 0);
  bool changed = true;
  while (changed) {
    changed = false;
    for (size_t i = 0; i < m; ++i)
      for (size_t j = 0; j < m; ++j)
        if (i != j && lat->leq_[i * m + j] && h[j] < h[i] + 1) {
          h[j] = h[i] + 1;
          changed = true;
        }
  }
  lat->height_ = *std::max_element(h.begin(), h.end());

  return lat;
}

int Lattice::index_of(const std::string& name) const {
  for (size_t i = 0; i < elems_.size(); ++i)
    if (elems_[i] == name) return static_cast<int>(i);
  return -1;
}

Elem Lattice::join_set(std::span<const Elem> xs) const {
  Elem r = bottom_;
  for (Elem x : xs) {
    if (x < 0 || x >= size()) throw LatticeError("unknown element index " + std::to_string(x));
    r = join(r, x);
  }
  return r;
}

Elem Lattice::meet_set(std::span<const Elem> xs) const {
  Elem r = top_;
  for (Elem x : xs) {
    if (x < 0 || x >= size()) throw LatticeError("unknown element index " + std::to_string(x));
    r = meet(r, x);
  }
  return r;
}

bool Lattice::same_as(const Lattice& other) const {
  if (this == &other) return true;
  return name_ == other.name_ && elems_ == other.elems_ && leq_ == other.leq_;
}

std::vector<std::vector<Elem>> enumerate_tuples(const Lattice& lat, int k) {
  const int m = lat.size();
  const long count = checked_power(m, k, table_budget());
  std::vector<std::vector<Elem>> out;
  out.reserve(static_cast<size_t>(count));
  std::vector<Elem> t(static_cast<size_t>(k), 0);
  for (long idx = 0; idx < count; ++idx) {
    unpack_tuple(idx, m, k, t.data());
    out.push_back(t);
  }
  return out;
}

std::vector<std::vector<Elem>> enumerate_monotone_tables(const Lattice& lat, int p, long budget) {
  const int m = lat.size();
  const long count = checked_power(m, p, table_budget());
  const size_t n_inputs = static_cast<size_t>(count);

  // Relation matrix between input tuples under the product order.
  auto tuples = enumerate_tuples(lat, p);
  std::vector<char> le(n_inputs * n_inputs, 0);
  for (size_t i = 0; i < n_inputs; ++i)
    for (size_t j = 0; j < n_inputs; ++j) {
      bool ok = true;
      for (int c = 0; c < p && ok; ++c) ok = lat.leq(tuples[i][static_cast<size_t>(c)], tuples[j][static_cast<size_t>(c)]);
      le[i * n_inputs + j] = ok ? 1 : 0;
    }

  std::vector<std::vector<Elem>> result;
  std::vector<Elem> val(n_inputs, 0);
  // DFS over inputs in canonical order, values in element order: the output
  // is deterministic and each prefix is checked against all assigned inputs.
  auto rec = [&](auto&& self, size_t pos) -> void {
    if (pos == n_inputs) {
      if (static_cast<long>(result.size()) >= budget)
        throw BudgetError("monotone enumeration exceeds budget " + std::to_string(budget));
      result.push_back(val);
      return;
    }
    for (Elem v = 0; v < m; ++v) {
      bool ok = true;
      for (size_t i = 0; i < pos && ok; ++i) {
        if (le[i * n_inputs + pos] && !lat.leq(val[i], v)) ok = false;
        if (le[pos * n_inputs + i] && !lat.leq(v, val[i])) ok = false;
      }
      if (!ok) continue;
      val[pos] = v;
      self(self, pos + 1);
    }
  };
  rec(rec, 0);
  return result;
}

LatticePtr parse_lattice(std::istream& in) {
  std::string name;
  std::vector<std::string> elements;
  std::vector<std::pair<std::string, std::string>> covers;
  bool saw_lattice = false, saw_elements = false;

  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
    std::istringstream ls(line);
    std::string kw;
    if (!(ls >> kw)) continue;
    if (kw == "lattice") {
      if (!(ls >> name)) throw ParseError("expected a name after 'lattice'", lineno);
      saw_lattice = true;
    } else if (kw == "elements") {
      std::string e;
      while (ls >> e) elements.push_back(e);
      if (elements.empty()) throw ParseError("'elements' line declares no elements", lineno);
      saw_elements = true;
    } else if (kw == "cover") {
      std::string a, b;
      if (!(ls >> a >> b)) throw ParseError("'cover' needs two elements", lineno);
      covers.emplace_back(a, b);
    } else {
      throw ParseError("unknown directive '" + kw + "'", lineno);
    }
  }
  if (!saw_lattice) throw ParseError("missing 'lattice <name>' line");
  if (!saw_elements) throw ParseError("missing 'elements' line");
  return Lattice::build(std::move(name), std::move(elements), covers);
}

LatticePtr parse_lattice_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error("cannot open lattice file '" + path + "'");
  try {
    return parse_lattice(in);
  } catch (ParseError& e) {
    throw ParseError(path + ": " + e.what());
  }
}

}  // namespace park
