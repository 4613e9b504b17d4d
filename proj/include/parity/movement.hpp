#pragma once

#include "parity/core.hpp"
#include "parity/result.hpp"

namespace parity {

// S moves M to P: M = (P u S-) \ S+ and P = (M u S+) \ S-. Holds exactly
// when it holds grade by grade, with S one dimension above M and P.
struct Movement {
  Subset s, m, p;
};

bool moves(const Subset& s, const Subset& m, const Subset& p);

Result<Movement> make_movement(Subset s, Subset m, Subset p);

// The unique P with moves(s, m, P), which exists exactly when the purely
// negative faces of s lie in m and m avoids the positive faces of s.
Result<Subset> advance(const Subset& s, const Subset& m);

// Mirror image of advance (unique M from P), obtained over the reversal.
Result<Subset> retreat(const Subset& s, const Subset& p);

// Pastes movements sharing a middle state, provided S- and T+ are disjoint.
Result<Movement> union_movement(const Movement& a, const Movement& b);

// Splits moves(t u z, m, p) into m --t--> n --z--> p. Requires the purely
// positive faces of z inside p and t perp z; both produced movements are
// re-verified rather than trusted.
Result<Subset> split_movement(const Subset& t, const Subset& z, const Subset& m,
                              const Subset& p);

// Mirror-image split, anchored at m instead of p: requires the purely
// negative faces of t inside m. Derived over the reversal.
Result<Subset> co_split_movement(const Subset& t, const Subset& z,
                                 const Subset& m, const Subset& p);

// Removes x from and adds y to both ends of a movement, under the four
// disjointness hypotheses that keep the movement intact.
Result<Movement> adjust_movement(const Movement& mv, const Subset& x,
                                 const Subset& y);

}  // namespace parity
