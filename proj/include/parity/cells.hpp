#pragma once

#include <cstddef>
#include <utility>
#include <vector>

#include "parity/core.hpp"
#include "parity/movement.hpp"
#include "parity/result.hpp"

namespace parity {

// A pair (M, P) of non-empty well-formed subsets where both M and P move M
// to P. Only obtainable through make(), so every Cell in circulation has
// been validated.
class Cell {
 public:
  static Result<Cell> make(const Subset& m, const Subset& p);

  const Subset& m() const { return m_; }
  const Subset& p() const { return p_; }
  const Complex& complex() const { return m_.complex(); }
  unsigned dim() const { return dim_; }

  // (m_k nonempty, p_k nonempty) for each grade k up to dim().
  std::vector<std::pair<bool, bool>> grade_occupancy() const;

  friend bool operator==(const Cell& a, const Cell& b) {
    return a.m_ == b.m_ && a.p_ == b.p_;
  }

 private:
  Cell(Subset m, Subset p, unsigned dim)
      : m_(std::move(m)), p_(std::move(p)), dim_(dim) {}

  Subset m_, p_;
  unsigned dim_;
};

// n-source (M^{n-1} u M_n, P^{n-1} u M_n) and n-target (M^{n-1} u P_n,
// P^{n-1} u P_n). For n at or above the cell's dimension both return the
// cell itself. Results are re-validated; a failure is an internal alarm.
Cell source(unsigned n, const Cell& c);
Cell target(unsigned n, const Cell& c);

// a's n-target equals b's n-source (a is the earlier factor).
bool composable(unsigned n, const Cell& a, const Cell& b);

// n-composite of the earlier factor a = (M, P) with the later factor
// b = (N, Q): (M u (N \ N_n), (P \ P_n) u Q). The result is validated, and
// the cross-grade disjointness (M_k u P_k)- meeting (N_k u Q_k)+ for k > n
// is checked as an internal alarm.
Result<Cell> compose(unsigned n, const Cell& a, const Cell& b);

// The two conditional clauses relating s to the iterated face-sets of every
// element of the complex.
bool is_receptive(const Subset& s);

// Downward recursion from {x}: mu takes purely negative faces at each step,
// pi purely positive ones.
Subset mu(const Complex& c, ElementId x);
Subset pi(const Complex& c, ElementId x);

// The candidate atom (mu(x), pi(x)), validated. Absent exactly when x is
// not relevant.
Result<Cell> atom(const Complex& c, ElementId x);
bool is_relevant(const Complex& c, ElementId x);

enum class RankMode { intersection, set_union };

// intersection: sum over grades of |M_k n P_k| (1 exactly on atoms).
// set_union: |M u P|.
std::size_t rank(const Cell& c, RankMode mode = RankMode::intersection);

// Attachment of a well-formed set X one dimension above an n-cell whose
// purely positive faces land in M_n. Returns the shifted n-cell and the
// (n+1)-cell with X on top and target c. X must be non-empty; use
// source/target for the degenerate reading.
Result<std::pair<Cell, Cell>> attach(const Subset& x, const Cell& c);

// Dual attachment (X hangs off the source side), obtained via the reversal.
Result<std::pair<Cell, Cell>> co_attach(const Subset& x, const Cell& c);

// The same cell viewed in the reversed complex, as (P, M).
Cell reverse_cell(const Cell& c);

// Brute-force enumeration of every cell of the complex, in a fixed order:
// the independent oracle behind most derived expectations. Guarded by a
// universe cap since the candidate space is exponential; pruned by
// well-formedness before movement checks.
Result<std::vector<Cell>> enumerate_cells(const Complex& c,
                                          std::size_t max_universe = 16);

}  // namespace parity
