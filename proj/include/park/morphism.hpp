#pragma once

#include <span>
#include <string>
#include <vector>

#include "park/lattice.hpp"

namespace park {

/// A function [n] -> [p], inducing the base morphism <(1ρ)_p, ..., (nρ)_p>.
struct BaseMap {
  std::vector<int> image;  // 1-based values in [p]
  int target = 0;

  int source() const { return static_cast<int>(image.size()); }
  void validate() const;
  static BaseMap identity(int n);
};

/// A morphism n -> p of the theory of monotone functions over a finite
/// lattice L: a tabulated monotone function L^p -> L^n (note the arrow
/// reversal). The table is indexed by the canonical rank of the input tuple;
/// entry x stores the n output components contiguously. Construction
/// verifies monotonicity (over cover edges of the product order, which
/// generate it) and the table budget. Immutable.
class Morphism {
 public:
  /// Tag for constructions whose monotonicity holds by the algebra of the
  /// operation itself (composition, join, residuation, ...); skips the scan.
  struct Trusted {};

  Morphism(LatticePtr lattice, int source, int target, std::vector<Elem> table);
  Morphism(LatticePtr lattice, int source, int target, std::vector<Elem> table, Trusted);

  int source() const { return source_; }
  int target() const { return target_; }
  const Lattice& lattice() const { return *lat_; }
  const LatticePtr& lattice_ptr() const { return lat_; }
  long domain_size() const { return domain_; }  // |L|^target

  std::span<const Elem> at(long input_rank) const {
    return {table_.data() + input_rank * source_, static_cast<size_t>(source_)};
  }
  const std::vector<Elem>& table() const { return table_; }

  bool operator==(const Morphism& o) const {
    return source_ == o.source_ && target_ == o.target_ && lat_->same_as(*o.lat_) &&
           table_ == o.table_;
  }
  bool operator!=(const Morphism& o) const { return !(*this == o); }

  std::string to_string() const;  // one "(in) -> (out)" line per input

 private:
  LatticePtr lat_;
  int source_, target_;
  long domain_;
  std::vector<Elem> table_;
};

// Theory constants and operations. Sorts follow the convention that a
// morphism n -> p is a function L^p -> L^n, so compose(f, g) applies g first.

Morphism injection(const LatticePtr& lat, int i, int n);  // i-th projection, 1 -> n
Morphism base_morphism(const LatticePtr& lat, const BaseMap& rho);
Morphism identity(const LatticePtr& lat, int n);
Morphism zero_morphism(const LatticePtr& lat, int p);  // the unique 0 -> p
Morphism bottom_morphism(const LatticePtr& lat, int n, int p);

Morphism compose(const Morphism& f, const Morphism& g);
Morphism tupling(const std::vector<Morphism>& fs, const LatticePtr& lat, int target);
Morphism tupling(const std::vector<Morphism>& fs);  // nonempty
Morphism pairing(const Morphism& f, const Morphism& g);
Morphism separated_sum(const Morphism& f, const Morphism& g);

Morphism join(const Morphism& f, const Morphism& g);
bool leq(const Morphism& f, const Morphism& g);

/// Greatest f with compose(f, g) <= h, computed pointwise:
/// (h <= g)(y) = meet of { h(x) : y <= g(x) }, empty meet giving top.
Morphism residual(const Morphism& h, const Morphism& g);

/// Parameterized least fixed point of f : n -> n+p, by ascent from bottom.
/// The chain must stabilize within n*height(L) strict steps; exceeding the
/// cap indicates a monotonicity bug and raises Error.
Morphism dagger(const Morphism& f);

/// f^tau = f . (1_n + 0_n + 1_p) v (0_n + 1_n + 0_p) : n -> n+n+p,
/// assembled from the component operations rather than tabulated directly.
Morphism tau(const Morphism& f);

/// star(f) = dagger(tau(f)) : n -> n+p.
Morphism star(const Morphism& f);

/// Every monotone function L^p -> L^n exactly once, deterministic order.
/// Throws BudgetError when the count exceeds the budget.
std::vector<Morphism> enumerate_monotone(const LatticePtr& lat, int n, int p,
                                         long budget = 1000000);

}  // namespace park
