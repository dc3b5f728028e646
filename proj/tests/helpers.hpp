#pragma once

#include <string>

#include "park/eval.hpp"

namespace park::testing {

inline std::string data_path(const std::string& name) {
  return std::string(PARK_DATA_DIR) + "/" + name;
}

inline LatticePtr chain2() { return Lattice::build("b2", {"0", "1"}, {{"0", "1"}}); }
inline LatticePtr chain3() {
  return Lattice::build("c3", {"0", "1", "2"}, {{"0", "1"}, {"1", "2"}});
}
inline LatticePtr diamond() {
  return Lattice::build("m4", {"a", "b", "c", "d"},
                        {{"a", "b"}, {"a", "c"}, {"b", "d"}, {"c", "d"}});
}

inline AlphabetPtr gsc_alphabet() {
  return std::make_shared<const RankedAlphabet>(
      std::vector<std::pair<std::string, int>>{{"gamma", 2}, {"sigma", 1}, {"c", 0}});
}

/// True iff the raw table (entry x stores n components) is monotone over all
/// comparable input pairs; quadratic reference check, test use only.
inline bool table_is_monotone(const Lattice& lat, int n, int p, const std::vector<Elem>& table) {
  const long dom = checked_power(lat.size(), p, 1000000);
  auto tuples = enumerate_tuples(lat, p);
  for (long x = 0; x < dom; ++x)
    for (long y = 0; y < dom; ++y) {
      bool le = true;
      for (int c = 0; c < p && le; ++c)
        le = lat.leq(tuples[static_cast<size_t>(x)][static_cast<size_t>(c)],
                     tuples[static_cast<size_t>(y)][static_cast<size_t>(c)]);
      if (!le) continue;
      for (int i = 0; i < n; ++i)
        if (!lat.leq(table[static_cast<size_t>(x * n + i)], table[static_cast<size_t>(y * n + i)]))
          return false;
    }
  return true;
}

}  // namespace park::testing
