#include "parity/cells.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

namespace parity {

Result<Cell> Cell::make(const Subset& m, const Subset& p) {
  if (!m.complex().same(p.complex()))
    return Result<Cell>::failure("M and P belong to different complexes");
  if (m.empty()) return Result<Cell>::failure("M is empty");
  if (p.empty()) return Result<Cell>::failure("P is empty");
  if (!is_well_formed(m)) return Result<Cell>::failure("M is not well-formed");
  if (!is_well_formed(p)) return Result<Cell>::failure("P is not well-formed");
  if (!moves(m, m, p)) return Result<Cell>::failure("M does not move M to P");
  if (!moves(p, m, p)) return Result<Cell>::failure("P does not move M to P");
  const unsigned dim = std::max(m.top_dim(), p.top_dim());
  if (!(m.sub(dim) == p.sub(dim)))
    throw soundness_error("validated cell has unequal top grades");
  return Cell(m, p, dim);
}

std::vector<std::pair<bool, bool>> Cell::grade_occupancy() const {
  std::vector<std::pair<bool, bool>> out;
  out.reserve(dim_ + 1);
  for (unsigned k = 0; k <= dim_; ++k)
    out.emplace_back(!m_.sub(k).empty(), !p_.sub(k).empty());
  return out;
}

namespace {

Cell checked_cell(const Subset& m, const Subset& p, const char* what) {
  auto cell = Cell::make(m, p);
  if (!cell)
    throw soundness_error(std::string(what) + " failed validation: " + cell.error());
  return std::move(cell).take();
}

}  // namespace

Cell source(unsigned n, const Cell& c) {
  if (n >= c.dim()) return c;
  const Subset mn = c.m().sub(n);
  return checked_cell(c.m().skeleton_below(n) | mn, c.p().skeleton_below(n) | mn,
                      "n-source");
}

Cell target(unsigned n, const Cell& c) {
  if (n >= c.dim()) return c;
  const Subset pn = c.p().sub(n);
  return checked_cell(c.m().skeleton_below(n) | pn, c.p().skeleton_below(n) | pn,
                      "n-target");
}

bool composable(unsigned n, const Cell& a, const Cell& b) {
  if (!a.complex().same(b.complex())) return false;
  return target(n, a) == source(n, b);
}

Result<Cell> compose(unsigned n, const Cell& a, const Cell& b) {
  if (!a.complex().same(b.complex()))
    return Result<Cell>::failure("cells belong to different complexes");
  if (!composable(n, a, b))
    return Result<Cell>::failure("cells are not composable at this level");
  const Subset m = a.m() | (b.m() - b.m().sub(n));
  const Subset p = (a.p() - a.p().sub(n)) | b.p();
  Cell out = checked_cell(m, p, "composite");
  const unsigned top = std::max(a.dim(), b.dim());
  for (unsigned k = n + 1; k <= top; ++k) {
    if (faces(a.m().sub(k) | a.p().sub(k), Sign::minus)
            .intersects(faces(b.m().sub(k) | b.p().sub(k), Sign::plus)))
      throw soundness_error(
          "composite violates cross-grade disjointness at grade " +
          std::to_string(k));
  }
  return out;
}

bool is_receptive(const Subset& s) {
  const Complex& c = s.complex();
  for (std::uint32_t i = 0; i < c.size(); ++i) {
    const ElementId x{i};
    const Subset xm = c.faces_of(x, Sign::minus);
    const Subset xp = c.faces_of(x, Sign::plus);
    const Subset mm = faces(xm, Sign::minus);
    const Subset mp = faces(xm, Sign::plus);
    const Subset pm = faces(xp, Sign::minus);
    const Subset pp = faces(xp, Sign::plus);
    if ((mp & pp).is_subset_of(s) && !s.intersects(mm) && s.intersects(pm))
      return false;
    if ((pm & mm).is_subset_of(s) && !s.intersects(pp) && s.intersects(mp))
      return false;
  }
  return true;
}

namespace {

Subset face_recursion(const Complex& c, ElementId x, Sign sign) {
  Subset layer = c.singleton(x);
  Subset acc = layer;
  for (unsigned k = c.dim(x); k >= 1; --k) {
    layer = pure_faces(layer, sign);
    acc |= layer;
  }
  return acc;
}

}  // namespace

Subset mu(const Complex& c, ElementId x) {
  return face_recursion(c, x, Sign::minus);
}

Subset pi(const Complex& c, ElementId x) {
  return face_recursion(c, x, Sign::plus);
}

Result<Cell> atom(const Complex& c, ElementId x) {
  return Cell::make(mu(c, x), pi(c, x));
}

bool is_relevant(const Complex& c, ElementId x) {
  return atom(c, x).ok();
}

std::size_t rank(const Cell& c, RankMode mode) {
  // Grades partition both sets, so the per-grade intersection sizes sum to
  // the size of the plain intersection.
  if (mode == RankMode::intersection) return (c.m() & c.p()).count();
  return (c.m() | c.p()).count();
}

Result<std::pair<Cell, Cell>> attach(const Subset& x, const Cell& c) {
  using R = Result<std::pair<Cell, Cell>>;
  if (!x.complex().same(c.complex()))
    return R::failure("X belongs to a different complex");
  if (x.empty()) return R::failure("X is empty");
  const unsigned n = c.dim();
  if (!(x == x.sub(n + 1)))
    return R::failure("X is not concentrated one dimension above the cell");
  if (!is_well_formed(x)) return R::failure("X is not well-formed");
  const Subset mn = c.m().sub(n);
  if (!pure_faces(x, Sign::plus).is_subset_of(mn))
    return R::failure("purely positive faces of X are not contained in M_n");
  if (!is_receptive(c.m()) || !is_receptive(c.p()))
    return R::failure("cell is not receptive");
  if (faces(x, Sign::minus).intersects(mn))
    return R::failure("negative faces of X meet M_n");
  const Subset y = (mn | faces(x, Sign::minus)) - faces(x, Sign::plus);
  auto shifted = Cell::make(c.m().skeleton_below(n) | y, c.p().skeleton_below(n) | y);
  if (!shifted) return R::failure("shifted cell failed validation: " + shifted.error());
  auto grown = Cell::make(c.m().skeleton_below(n) | y | x, c.p() | x);
  if (!grown) return R::failure("attached cell failed validation: " + grown.error());
  return std::make_pair(std::move(shifted).take(), std::move(grown).take());
}

Result<std::pair<Cell, Cell>> co_attach(const Subset& x, const Cell& c) {
  const Complex rev = c.complex().reversed();
  auto flipped = Cell::make(c.p().transfer(rev), c.m().transfer(rev));
  if (!flipped) throw soundness_error("cell does not survive reversal");
  auto pair = attach(x.transfer(rev), *flipped);
  if (!pair) return Result<std::pair<Cell, Cell>>::failure(pair.error());
  return std::make_pair(reverse_cell(pair->first), reverse_cell(pair->second));
}

Cell reverse_cell(const Cell& c) {
  const Complex rev = c.complex().reversed();
  auto flipped = Cell::make(c.p().transfer(rev), c.m().transfer(rev));
  if (!flipped) throw soundness_error("cell does not survive reversal");
  return std::move(flipped).take();
}

Result<std::vector<Cell>> enumerate_cells(const Complex& c,
                                          std::size_t max_universe) {
  using R = Result<std::vector<Cell>>;
  const std::size_t n = c.size();
  if (n > max_universe || n >= 64)
    return R::failure("universe has " + std::to_string(n) +
                      " elements, above the enumeration cap of " +
                      std::to_string(std::min<std::size_t>(max_universe, 63)));
  std::vector<Subset> well_formed_sets;
  const std::uint64_t limit = std::uint64_t{1} << n;
  for (std::uint64_t mask = 1; mask < limit; ++mask) {
    Bitset bits(n);
    for (std::size_t i = 0; i < n; ++i)
      if (mask & (std::uint64_t{1} << i)) bits.set(i);
    Subset s(c, std::move(bits));
    if (is_well_formed(s)) well_formed_sets.push_back(std::move(s));
  }
  std::vector<Cell> cells;
  for (const Subset& m : well_formed_sets)
    for (const Subset& p : well_formed_sets)
      if (moves(m, m, p) && moves(p, m, p)) {
        auto cell = Cell::make(m, p);
        if (!cell)
          throw soundness_error("enumerated pair failed validation: " + cell.error());
        cells.push_back(std::move(cell).take());
      }
  return cells;
}

}  // namespace parity
