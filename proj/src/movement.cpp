#include "parity/movement.hpp"

#include <stdexcept>

namespace parity {

namespace {

void require_same(const Subset& a, const Subset& b) {
  if (!a.complex().same(b.complex()))
    throw std::invalid_argument("operands belong to different complexes");
}

}  // namespace

bool moves(const Subset& s, const Subset& m, const Subset& p) {
  require_same(s, m);
  require_same(s, p);
  const Subset sm = faces(s, Sign::minus);
  const Subset sp = faces(s, Sign::plus);
  return m == (p | sm) - sp && p == (m | sp) - sm;
}

Result<Movement> make_movement(Subset s, Subset m, Subset p) {
  if (!moves(s, m, p))
    return Result<Movement>::failure("S does not move M to P");
  return Movement{std::move(s), std::move(m), std::move(p)};
}

Result<Subset> advance(const Subset& s, const Subset& m) {
  require_same(s, m);
  if (!pure_faces(s, Sign::minus).is_subset_of(m))
    return Result<Subset>::failure(
        "purely negative faces of S are not contained in M");
  const Subset sp = faces(s, Sign::plus);
  if (m.intersects(sp))
    return Result<Subset>::failure("M meets the positive faces of S");
  return (m | sp) - faces(s, Sign::minus);
}

Result<Subset> retreat(const Subset& s, const Subset& p) {
  require_same(s, p);
  const Complex rev = s.complex().reversed();
  auto moved = advance(s.transfer(rev), p.transfer(rev));
  if (!moved) return Result<Subset>::failure(moved.error());
  return moved->transfer(s.complex());
}

Result<Movement> union_movement(const Movement& a, const Movement& b) {
  if (!(a.p == b.m))
    return Result<Movement>::failure("middle states differ");
  if (faces(a.s, Sign::minus).intersects(faces(b.s, Sign::plus)))
    return Result<Movement>::failure(
        "negative faces of the first set meet positive faces of the second");
  Movement joined{a.s | b.s, a.m, b.p};
  if (!moves(joined.s, joined.m, joined.p))
    throw soundness_error("pasted movement failed re-verification");
  return joined;
}

Result<Subset> split_movement(const Subset& t, const Subset& z, const Subset& m,
                              const Subset& p) {
  require_same(t, z);
  if (!moves(t | z, m, p))
    return Result<Subset>::failure("T u Z does not move M to P");
  if (!pure_faces(z, Sign::plus).is_subset_of(p))
    return Result<Subset>::failure(
        "purely positive faces of Z are not contained in P");
  if (!perp(t, z)) return Result<Subset>::failure("T and Z are not perp");
  auto n = advance(t, m);
  if (!n) return Result<Subset>::failure("T does not move M anywhere: " + n.error());
  if (!moves(z, *n, p))
    return Result<Subset>::failure("Z does not move the middle state to P");
  return n;
}

Result<Subset> co_split_movement(const Subset& t, const Subset& z,
                                 const Subset& m, const Subset& p) {
  const Complex rev = t.complex().reversed();
  auto middle = split_movement(z.transfer(rev), t.transfer(rev), p.transfer(rev),
                               m.transfer(rev));
  if (!middle) return Result<Subset>::failure(middle.error());
  return middle->transfer(t.complex());
}

Result<Movement> adjust_movement(const Movement& mv, const Subset& x,
                                 const Subset& y) {
  if (!x.is_subset_of(mv.m))
    return Result<Movement>::failure("X is not contained in M");
  if (pure_faces(mv.s, Sign::minus).intersects(x))
    return Result<Movement>::failure("X meets the purely negative faces of S");
  if (y.intersects(faces(mv.s, Sign::plus)))
    return Result<Movement>::failure("Y meets the positive faces of S");
  if (y.intersects(faces(mv.s, Sign::minus)))
    return Result<Movement>::failure("Y meets the negative faces of S");
  Movement adjusted{mv.s, (mv.m | y) - x, (mv.p | y) - x};
  if (!moves(adjusted.s, adjusted.m, adjusted.p))
    throw soundness_error("adjusted movement failed re-verification");
  return adjusted;
}

}  // namespace parity
