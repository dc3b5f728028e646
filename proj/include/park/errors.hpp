#pragma once

#include <stdexcept>
#include <string>

namespace park {

/// Base class for all errors raised by this library.
struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// Malformed input text (lattice files, signature files, terms, trees).
struct ParseError : Error {
  ParseError(const std::string& msg, int line = 0, int col = 0)
      : Error(format(msg, line, col)), line(line), col(col) {}
  int line;
  int col;

 private:
  static std::string format(const std::string& msg, int line, int col) {
    if (line <= 0) return msg;
    std::string s = "line " + std::to_string(line);
    if (col > 0) s += ", col " + std::to_string(col);
    return s + ": " + msg;
  }
};

/// Source/target (or lattice/alphabet) mismatch between operands.
struct SortError : Error {
  using Error::Error;
};

/// A construction would exceed a configured size budget.
struct BudgetError : Error {
  using Error::Error;
};

/// The declared order is not a lattice, or an element is unknown.
struct LatticeError : Error {
  using Error::Error;
};

/// Process-wide size budgets. Set once at startup (CLI flags) or per test;
/// every constructed table/automaton is checked against them.
long table_budget();              // max |L|^p entries per morphism table
void set_table_budget(long n);
long state_budget();              // max states in a subset construction
void set_state_budget(long n);

/// RAII helper for tests that need a temporary budget.
class ScopedTableBudget {
 public:
  explicit ScopedTableBudget(long n) : old_(table_budget()) { set_table_budget(n); }
  ~ScopedTableBudget() { set_table_budget(old_); }

 private:
  long old_;
};

}  // namespace park
