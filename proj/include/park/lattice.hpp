#pragma once

#include <iosfwd>
#include <memory>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "park/errors.hpp"

namespace park {

/// Lattice elements are small indices into the declared element list.
using Elem = int;

/// A finite lattice given by its elements (in a fixed, canonical declaration
/// order) and the reflexive-transitive closure of a set of cover pairs.
/// Construction verifies the lattice laws: antisymmetry, and existence of a
/// least upper bound and greatest lower bound for every pair of elements.
/// Immutable after construction; shared by reference everywhere.
class Lattice {
 public:
  static std::shared_ptr<const Lattice> build(
      std::string name, std::vector<std::string> elements,
      const std::vector<std::pair<std::string, std::string>>& covers);

  const std::string& name() const { return name_; }
  int size() const { return static_cast<int>(elems_.size()); }
  const std::vector<std::string>& elements() const { return elems_; }
  const std::string& element_name(Elem e) const { return elems_[static_cast<size_t>(e)]; }
  int index_of(const std::string& name) const;  // -1 if unknown

  bool leq(Elem a, Elem b) const { return leq_[static_cast<size_t>(a) * elems_.size() + static_cast<size_t>(b)] != 0; }
  Elem join(Elem a, Elem b) const { return join_[static_cast<size_t>(a) * elems_.size() + static_cast<size_t>(b)]; }
  Elem meet(Elem a, Elem b) const { return meet_[static_cast<size_t>(a) * elems_.size() + static_cast<size_t>(b)]; }
  Elem bottom() const { return bottom_; }
  Elem top() const { return top_; }

  /// Number of edges in the longest chain; bounds every ascending iteration.
  int height() const { return height_; }

  /// The declared cover pairs (deduplicated). Their reflexive-transitive
  /// closure is the full order; monotonicity checks only need these edges.
  const std::vector<std::pair<Elem, Elem>>& cover_pairs() const { return covers_; }

  Elem join_set(std::span<const Elem> xs) const;  // empty set yields bottom
  Elem meet_set(std::span<const Elem> xs) const;  // empty set yields top

  bool same_as(const Lattice& other) const;

 private:
  Lattice() = default;

  std::string name_;
  std::vector<std::string> elems_;
  std::vector<char> leq_;
  std::vector<Elem> join_, meet_;
  std::vector<std::pair<Elem, Elem>> covers_;
  Elem bottom_ = 0, top_ = 0;
  int height_ = 0;
};

using LatticePtr = std::shared_ptr<const Lattice>;

/// m^k with an overflow/budget guard.
long checked_power(int m, int k, long limit);

/// Rank of a tuple in the canonical order: lexicographic over the declared
/// element order, first component most significant.
inline long pack_tuple(std::span<const Elem> t, int m) {
  long r = 0;
  for (Elem e : t) r = r * m + e;
  return r;
}

inline void unpack_tuple(long idx, int m, int k, Elem* out) {
  for (int i = k - 1; i >= 0; --i) {
    out[i] = static_cast<Elem>(idx % m);
    idx /= m;
  }
}

/// All |L|^k tuples in canonical order. k = 0 yields one empty tuple.
std::vector<std::vector<Elem>> enumerate_tuples(const Lattice& lat, int k);

/// All monotone functions L^p -> L as value tables indexed by tuple rank,
/// in a deterministic order. Throws BudgetError when the count would exceed
/// the budget (callers then fall back to sampling).
std::vector<std::vector<Elem>> enumerate_monotone_tables(const Lattice& lat, int p,
                                                         long budget = 1000000);

/// Parse the line-oriented lattice format:
///   lattice <name>
///   elements <e1> <e2> ...
///   cover <x> <y>
/// Blank lines and '#' comments are ignored.
LatticePtr parse_lattice(std::istream& in);
LatticePtr parse_lattice_file(const std::string& path);

}  // namespace park
