#include "park/morphism.hpp"

#include <algorithm>
#include <sstream>

namespace park {

namespace {

void require_same_lattice(const Morphism& a, const Morphism& b, const char* op) {
  if (!a.lattice().same_as(b.lattice()))
    throw SortError(std::string(op) + ": lattice mismatch ('" + a.lattice().name() + "' vs '" +
                    b.lattice().name() + "')");
}

std::string sort_str(const Morphism& f) {
  return std::to_string(f.source()) + " -> " + std::to_string(f.target());
}

}  // namespace

void BaseMap::validate() const {
  for (int v : image)
    if (v < 1 || v > target)
      throw SortError("base map value " + std::to_string(v) + " outside [1, " +
                      std::to_string(target) + "]");
}

BaseMap BaseMap::identity(int n) {
  BaseMap b;
  b.target = n;
  b.image.resize(static_cast<size_t>(n));
  for (int i = 0; i < n; ++i) b.image[static_cast<size_t>(i)] = i + 1;
  return b;
}

Morphism::Morphism(LatticePtr lattice, int source, int target, std::vector<Elem> table, Trusted)
    : lat_(std::move(lattice)), source_(source), target_(target) {
  if (source_ < 0 || target_ < 0) throw SortError("negative arity");
  domain_ = checked_power(lat_->size(), target_, table_budget());
  if (static_cast<long>(table.size()) != domain_ * source_)
    throw SortError("table has " + std::to_string(table.size()) + " entries, expected " +
                    std::to_string(domain_ * source_));
  table_ = std::move(table);
}

Morphism::Morphism(LatticePtr lattice, int source, int target, std::vector<Elem> table)
    : Morphism(std::move(lattice), source, target, std::move(table), Trusted{}) {
  const int m = lat_->size();
  for (Elem e : table_)
    if (e < 0 || e >= m) throw LatticeError("table entry " + std::to_string(e) + " is not an element");

  // Monotone iff monotone along cover edges of the product order: bump one
  // input coordinate by one declared cover and compare outputs.
  std::vector<Elem> in(static_cast<size_t>(target_));
  std::vector<long> pow(static_cast<size_t>(target_) + 1, 1);
  for (int i = 1; i <= target_; ++i) pow[static_cast<size_t>(i)] = pow[static_cast<size_t>(i - 1)] * m;
  for (long x = 0; x < domain_; ++x) {
    unpack_tuple(x, m, target_, in.data());
    for (int c = 0; c < target_; ++c) {
      for (const auto& [lo, hi] : lat_->cover_pairs()) {
        if (in[static_cast<size_t>(c)] != lo) continue;
        const long y = x + (static_cast<long>(hi) - lo) * pow[static_cast<size_t>(target_ - 1 - c)];
        for (int i = 0; i < source_; ++i)
          if (!lat_->leq(table_[x * source_ + i], table_[y * source_ + i]))
            throw LatticeError("table is not monotone (sort " + sort_str(*this) + ")");
      }
    }
  }
}

std::string Morphism::to_string() const {
  const int m = lat_->size();
  std::ostringstream os;
  std::vector<Elem> in(static_cast<size_t>(target_));
  for (long x = 0; x < domain_; ++x) {
    unpack_tuple(x, m, target_, in.data());
    os << "(";
    for (int c = 0; c < target_; ++c) os << (c ? "," : "") << lat_->element_name(in[static_cast<size_t>(c)]);
    os << ") -> (";
    for (int i = 0; i < source_; ++i) os << (i ? "," : "") << lat_->element_name(table_[x * source_ + i]);
    os << ")";
    if (x + 1 < domain_) os << "\n";
  }
  return os.str();
}

Morphism injection(const LatticePtr& lat, int i, int n) {
  if (i < 1 || i > n)
    throw SortError("injection index " + std::to_string(i) + " outside [1, " + std::to_string(n) + "]");
  const int m = lat->size();
  const long dom = checked_power(m, n, table_budget());
  std::vector<Elem> table(static_cast<size_t>(dom));
  std::vector<Elem> in(static_cast<size_t>(n));
  for (long x = 0; x < dom; ++x) {
    unpack_tuple(x, m, n, in.data());
    table[static_cast<size_t>(x)] = in[static_cast<size_t>(i - 1)];
  }
  return Morphism(lat, 1, n, std::move(table), Morphism::Trusted{});
}

Morphism base_morphism(const LatticePtr& lat, const BaseMap& rho) {
  rho.validate();
  const int n = rho.source(), p = rho.target;
  const int m = lat->size();
  const long dom = checked_power(m, p, table_budget());
  std::vector<Elem> table(static_cast<size_t>(dom * n));
  std::vector<Elem> in(static_cast<size_t>(p));
  for (long x = 0; x < dom; ++x) {
    unpack_tuple(x, m, p, in.data());
    for (int i = 0; i < n; ++i)
      table[static_cast<size_t>(x * n + i)] = in[static_cast<size_t>(rho.image[static_cast<size_t>(i)] - 1)];
  }
  return Morphism(lat, n, p, std::move(table), Morphism::Trusted{});
}

Morphism identity(const LatticePtr& lat, int n) { return base_morphism(lat, BaseMap::identity(n)); }

Morphism zero_morphism(const LatticePtr& lat, int p) {
  BaseMap b;
  b.target = p;
  return base_morphism(lat, b);
}

Morphism bottom_morphism(const LatticePtr& lat, int n, int p) {
  const long dom = checked_power(lat->size(), p, table_budget());
  std::vector<Elem> table(static_cast<size_t>(dom * n), lat->bottom());
  return Morphism(lat, n, p, std::move(table), Morphism::Trusted{});
}

Morphism compose(const Morphism& f, const Morphism& g) {
  require_same_lattice(f, g, "compose");
  if (f.target() != g.source())
    throw SortError("compose: target " + std::to_string(f.target()) + " != source " +
                    std::to_string(g.source()));
  const int m = f.lattice().size();
  const int n = f.source();
  std::vector<Elem> table(static_cast<size_t>(g.domain_size() * n));
  for (long x = 0; x < g.domain_size(); ++x) {
    const long mid = pack_tuple(g.at(x), m);
    auto out = f.at(mid);
    std::copy(out.begin(), out.end(), table.begin() + x * n);
  }
  return Morphism(f.lattice_ptr(), n, g.target(), std::move(table), Morphism::Trusted{});
}

Morphism tupling(const std::vector<Morphism>& fs, const LatticePtr& lat, int target) {
  const int n = static_cast<int>(fs.size());
  for (const auto& f : fs) {
    if (!f.lattice().same_as(*lat)) throw SortError("tupling: lattice mismatch");
    if (f.source() != 1) throw SortError("tupling: component has source " + std::to_string(f.source()));
    if (f.target() != target)
      throw SortError("tupling: component target " + std::to_string(f.target()) + " != " +
                      std::to_string(target));
  }
  const long dom = checked_power(lat->size(), target, table_budget());
  std::vector<Elem> table(static_cast<size_t>(dom * n));
  for (long x = 0; x < dom; ++x)
    for (int i = 0; i < n; ++i) table[static_cast<size_t>(x * n + i)] = fs[static_cast<size_t>(i)].at(x)[0];
  return Morphism(lat, n, target, std::move(table), Morphism::Trusted{});
}

Morphism tupling(const std::vector<Morphism>& fs) {
  if (fs.empty()) throw SortError("tupling of an empty list needs an explicit target");
  return tupling(fs, fs.front().lattice_ptr(), fs.front().target());
}

Morphism pairing(const Morphism& f, const Morphism& g) {
  require_same_lattice(f, g, "pairing");
  if (f.target() != g.target())
    throw SortError("pairing: targets differ (" + std::to_string(f.target()) + " vs " +
                    std::to_string(g.target()) + ")");
  const int n = f.source(), k = g.source();
  std::vector<Elem> table(static_cast<size_t>(f.domain_size() * (n + k)));
  for (long x = 0; x < f.domain_size(); ++x) {
    auto a = f.at(x);
    auto b = g.at(x);
    std::copy(a.begin(), a.end(), table.begin() + x * (n + k));
    std::copy(b.begin(), b.end(), table.begin() + x * (n + k) + n);
  }
  return Morphism(f.lattice_ptr(), n + k, f.target(), std::move(table), Morphism::Trusted{});
}

Morphism separated_sum(const Morphism& f, const Morphism& g) {
  require_same_lattice(f, g, "separated_sum");
  const int n = f.source(), k = g.source();
  const int p = f.target(), q = g.target();
  const long dom = checked_power(f.lattice().size(), p + q, table_budget());
  const long dq = g.domain_size();
  std::vector<Elem> table(static_cast<size_t>(dom * (n + k)));
  for (long xy = 0; xy < dom; ++xy) {
    auto a = f.at(xy / dq);
    auto b = g.at(xy % dq);
    std::copy(a.begin(), a.end(), table.begin() + xy * (n + k));
    std::copy(b.begin(), b.end(), table.begin() + xy * (n + k) + n);
  }
  return Morphism(f.lattice_ptr(), n + k, p + q, std::move(table), Morphism::Trusted{});
}

Morphism join(const Morphism& f, const Morphism& g) {
  require_same_lattice(f, g, "join");
  if (f.source() != g.source() || f.target() != g.target())
    throw SortError("join: sort mismatch (" + sort_str(f) + " vs " + sort_str(g) + ")");
  std::vector<Elem> table(f.table().size());
  for (size_t i = 0; i < table.size(); ++i)
    table[i] = f.lattice().join(f.table()[i], g.table()[i]);
  return Morphism(f.lattice_ptr(), f.source(), f.target(), std::move(table), Morphism::Trusted{});
}

bool leq(const Morphism& f, const Morphism& g) {
  require_same_lattice(f, g, "leq");
  if (f.source() != g.source() || f.target() != g.target())
    throw SortError("leq: sort mismatch (" + sort_str(f) + " vs " + sort_str(g) + ")");
  for (size_t i = 0; i < f.table().size(); ++i)
    if (!f.lattice().leq(f.table()[i], g.table()[i])) return false;
  return true;
}

Morphism residual(const Morphism& h, const Morphism& g) {
  require_same_lattice(h, g, "residual");
  if (h.target() != g.target())
    throw SortError("residual: targets differ (" + std::to_string(h.target()) + " vs " +
                    std::to_string(g.target()) + ")");
  const int m = h.lattice().size();
  const int n = h.source(), p = g.source();
  const long dom = checked_power(m, p, table_budget());
  std::vector<Elem> table(static_cast<size_t>(dom * n), h.lattice().top());
  std::vector<Elem> y(static_cast<size_t>(p));
  for (long yi = 0; yi < dom; ++yi) {
    unpack_tuple(yi, m, p, y.data());
    for (long x = 0; x < g.domain_size(); ++x) {
      auto gx = g.at(x);
      bool below = true;
      for (int c = 0; c < p && below; ++c) below = h.lattice().leq(y[static_cast<size_t>(c)], gx[static_cast<size_t>(c)]);
      if (!below) continue;
      auto hx = h.at(x);
      for (int i = 0; i < n; ++i)
        table[static_cast<size_t>(yi * n + i)] =
            h.lattice().meet(table[static_cast<size_t>(yi * n + i)], hx[static_cast<size_t>(i)]);
    }
  }
  return Morphism(h.lattice_ptr(), n, p, std::move(table), Morphism::Trusted{});
}

Morphism dagger(const Morphism& f) {
  const int n = f.source();
  const int p = f.target() - n;
  if (p < 0)
    throw SortError("dagger: source " + std::to_string(n) + " exceeds target " +
                    std::to_string(f.target()));
  const int m = f.lattice().size();
  const long dom_p = checked_power(m, p, table_budget());
  const int cap = n * f.lattice().height() + 1;
  std::vector<Elem> table(static_cast<size_t>(dom_p * n));
  std::vector<Elem> x(static_cast<size_t>(n)), next(static_cast<size_t>(n));
  for (long y = 0; y < dom_p; ++y) {
    std::fill(x.begin(), x.end(), f.lattice().bottom());
    bool stable = false;
    for (int it = 0; it <= cap && !stable; ++it) {
      const long in = pack_tuple(x, m) * dom_p + y;
      auto out = f.at(in);
      std::copy(out.begin(), out.end(), next.begin());
      stable = std::equal(x.begin(), x.end(), next.begin());
      x.swap(next);
    }
    if (!stable)
      throw Error("dagger: ascent did not stabilize within " + std::to_string(cap) +
                  " steps (monotonicity violation?)");
    std::copy(x.begin(), x.end(), table.begin() + y * n);
  }
  return Morphism(f.lattice_ptr(), n, p, std::move(table), Morphism::Trusted{});
}

Morphism tau(const Morphism& f) {
  const int n = f.source();
  const int p = f.target() - n;
  if (p < 0)
    throw SortError("tau: source " + std::to_string(n) + " exceeds target " +
                    std::to_string(f.target()));
  const auto& lat = f.lattice_ptr();
  Morphism keep = separated_sum(separated_sum(identity(lat, n), zero_morphism(lat, n)), identity(lat, p));
  Morphism inject = separated_sum(separated_sum(zero_morphism(lat, n), identity(lat, n)), zero_morphism(lat, p));
  return join(compose(f, keep), inject);
}

Morphism star(const Morphism& f) { return dagger(tau(f)); }

std::vector<Morphism> enumerate_monotone(const LatticePtr& lat, int n, int p, long budget) {
  auto scalars = enumerate_monotone_tables(*lat, p, budget);
  const long s = static_cast<long>(scalars.size());
  long total = 1;
  for (int i = 0; i < n; ++i) {
    if (s != 0 && total > budget / s)
      throw BudgetError("monotone enumeration: " + std::to_string(s) + "^" + std::to_string(n) +
                        " exceeds budget " + std::to_string(budget));
    total *= s;
  }
  const long dom = checked_power(lat->size(), p, table_budget());
  std::vector<Morphism> out;
  out.reserve(static_cast<size_t>(total));
  std::vector<long> idx(static_cast<size_t>(n), 0);
  for (long c = 0; c < total; ++c) {
    std::vector<Elem> table(static_cast<size_t>(dom * n));
    for (long x = 0; x < dom; ++x)
      for (int i = 0; i < n; ++i)
        table[static_cast<size_t>(x * n + i)] = scalars[static_cast<size_t>(idx[static_cast<size_t>(i)])][static_cast<size_t>(x)];
    out.emplace_back(lat, n, p, std::move(table), Morphism::Trusted{});
    // Odometer, first coordinate most significant.
    for (int i = n - 1; i >= 0; --i) {
      if (++idx[static_cast<size_t>(i)] < s) break;
      idx[static_cast<size_t>(i)] = 0;
    }
  }
  return out;
}

}  // namespace park
