#include "parity/axioms.hpp"

#include <algorithm>
#include <cctype>
#include <stdexcept>

#include "parity/cells.hpp"

namespace parity {

namespace {

constexpr std::string_view kNames[] = {"PRE", "AX1", "AX2", "AX3A",
                                       "AX3B", "R1",  "R2",  "AS"};

std::vector<std::string> names_of(const Subset& s) { return s.member_names(); }

Witness element_witness(const Complex& c, ElementId x, std::string detail) {
  return Witness{{c.name(x)}, std::move(detail), {}, {}};
}

Witness sides_witness(const Complex& c, std::vector<ElementId> xs,
                      std::string detail, const Subset& lhs, const Subset& rhs) {
  Witness w;
  for (ElementId x : xs) w.elements.push_back(c.name(x));
  w.detail = std::move(detail);
  w.lhs = names_of(lhs);
  w.rhs = names_of(rhs);
  return w;
}

AxiomReport finish(AxiomTag tag, std::vector<Witness> witnesses) {
  return AxiomReport{tag, witnesses.empty(), std::move(witnesses)};
}

// Iterated face-sets of a single element.
struct FaceSquare {
  Subset mm, mp, pm, pp;
};

FaceSquare face_square(const Complex& c, ElementId x) {
  const Subset xm = c.faces_of(x, Sign::minus);
  const Subset xp = c.faces_of(x, Sign::plus);
  return FaceSquare{faces(xm, Sign::minus), faces(xm, Sign::plus),
                    faces(xp, Sign::minus), faces(xp, Sign::plus)};
}

std::optional<std::string> pre_parity_failure(const Complex& c, ElementId x) {
  const unsigned d = c.dim(x);
  for (Sign sign : {Sign::minus, Sign::plus}) {
    const char* side = sign == Sign::minus ? "negative" : "positive";
    const Subset fs = c.faces_of(x, sign);
    bool bad_dim = false;
    fs.bits().for_each([&](std::size_t i) {
      if (c.dim(ElementId{static_cast<std::uint32_t>(i)}) + 1 != d) bad_dim = true;
    });
    if (bad_dim)
      return std::string(side) + " face of wrong dimension";
    if (d > 0 && fs.empty()) return std::string(side) + " face-set is empty";
    if (d == 0 && !fs.empty())
      return std::string(side) + " face-set of a dimension-0 element is non-empty";
  }
  if (c.faces_of(x, Sign::minus).intersects(c.faces_of(x, Sign::plus)))
    return std::string("face-sets are not disjoint");
  return std::nullopt;
}

bool axiom1_holds_at(const Complex& c, ElementId x, Subset* lhs_out = nullptr,
                     Subset* rhs_out = nullptr) {
  const FaceSquare f = face_square(c, x);
  const Subset lhs = f.pp | f.mm;
  const Subset rhs = f.mp | f.pm;
  if (lhs_out) *lhs_out = lhs;
  if (rhs_out) *rhs_out = rhs;
  return lhs == rhs;
}

bool axiom3b_holds_at(const Complex& c, ElementId x, ElementId y, ElementId z) {
  if (!c.triangle_full(x, y)) return true;
  const Bitset& zm = c.raw_faces(z, Sign::minus);
  const Bitset& zp = c.raw_faces(z, Sign::plus);
  if (zp.test(x.value) && zm.test(y.value)) return false;
  if (zp.test(y.value) && zm.test(x.value)) return false;
  return true;
}

bool r1_holds_at(const Complex& c, ElementId x, Subset* lhs_out = nullptr,
                 Subset* rhs_out = nullptr) {
  const Subset mx = mu(c, x);
  const Subset px = pi(c, x);
  const Subset mm = faces(mx, Sign::minus);
  const Subset mp = faces(mx, Sign::plus);
  const Subset pm = faces(px, Sign::minus);
  const Subset pp = faces(px, Sign::plus);
  const Subset lhs = mm | pp;
  const Subset rhs = mp | pm;
  if (lhs_out) *lhs_out = lhs;
  if (rhs_out) *rhs_out = rhs;
  return lhs == rhs && !mm.intersects(pp) && !mp.intersects(pm);
}

}  // namespace

std::string_view axiom_name(AxiomTag tag) {
  return kNames[static_cast<int>(tag)];
}

std::optional<AxiomTag> axiom_from_name(std::string_view name) {
  std::string upper(name);
  std::transform(upper.begin(), upper.end(), upper.begin(),
                 [](unsigned char ch) { return static_cast<char>(std::toupper(ch)); });
  for (int i = 0; i < 8; ++i)
    if (upper == kNames[i]) return static_cast<AxiomTag>(i);
  // Short forms used on the command line.
  if (upper == "1") return AxiomTag::ax1;
  if (upper == "2") return AxiomTag::ax2;
  if (upper == "3A") return AxiomTag::ax3a;
  if (upper == "3B") return AxiomTag::ax3b;
  return std::nullopt;
}

std::vector<AxiomTag> all_axioms() {
  return {AxiomTag::pre,  AxiomTag::ax1, AxiomTag::ax2, AxiomTag::ax3a,
          AxiomTag::ax3b, AxiomTag::r1,  AxiomTag::r2,  AxiomTag::as};
}

AxiomReport check_pre_parity(const Complex& c) {
  std::vector<Witness> bad;
  for (ElementId x : c.elements())
    if (auto why = pre_parity_failure(c, x))
      bad.push_back(element_witness(c, x, *why));
  return finish(AxiomTag::pre, std::move(bad));
}

AxiomReport check_axiom1(const Complex& c) {
  std::vector<Witness> bad;
  for (ElementId x : c.elements()) {
    Subset lhs, rhs;
    if (!axiom1_holds_at(c, x, &lhs, &rhs))
      bad.push_back(sides_witness(c, {x}, "iterated face-sets disagree", lhs, rhs));
  }
  return finish(AxiomTag::ax1, std::move(bad));
}

AxiomReport check_axiom2(const Complex& c) {
  std::vector<Witness> bad;
  for (ElementId x : c.elements()) {
    if (!is_well_formed(c.faces_of(x, Sign::minus)))
      bad.push_back(element_witness(c, x, "negative face-set is not well-formed"));
    if (!is_well_formed(c.faces_of(x, Sign::plus)))
      bad.push_back(element_witness(c, x, "positive face-set is not well-formed"));
  }
  return finish(AxiomTag::ax2, std::move(bad));
}

AxiomReport check_axiom3a(const Complex& c) {
  std::vector<Witness> bad;
  const auto elems = c.elements();
  for (ElementId x : elems)
    for (ElementId y : elems)
      if (x < y && c.triangle_full(x, y) && c.triangle_full(y, x))
        bad.push_back(Witness{{c.name(x), c.name(y)}, "cycle in the path order", {}, {}});
  return finish(AxiomTag::ax3a, std::move(bad));
}

AxiomReport check_axiom3b(const Complex& c) {
  std::vector<Witness> bad;
  const auto elems = c.elements();
  for (ElementId x : elems)
    for (ElementId y : elems) {
      if (!c.triangle_full(x, y)) continue;
      for (ElementId z : elems)
        if (!axiom3b_holds_at(c, x, y, z))
          bad.push_back(Witness{{c.name(x), c.name(y), c.name(z)},
                                "path crosses between the face-sets of z",
                                {},
                                {}});
    }
  return finish(AxiomTag::ax3b, std::move(bad));
}

AxiomReport check_R1(const Complex& c) {
  std::vector<Witness> bad;
  for (ElementId x : c.elements()) {
    Subset lhs, rhs;
    if (!r1_holds_at(c, x, &lhs, &rhs))
      bad.push_back(sides_witness(c, {x}, "mu/pi face-sets disagree or overlap",
                                  lhs, rhs));
  }
  return finish(AxiomTag::r1, std::move(bad));
}

AxiomReport check_R2(const Complex& c) {
  std::vector<Witness> bad;
  for (ElementId x : c.elements()) {
    if (!is_well_formed(mu(c, x)))
      bad.push_back(element_witness(c, x, "mu(x) is not well-formed"));
    if (!is_well_formed(pi(c, x)))
      bad.push_back(element_witness(c, x, "pi(x) is not well-formed"));
  }
  return finish(AxiomTag::r2, std::move(bad));
}

AxiomReport check_AS(const Complex& c) {
  std::vector<Witness> bad;
  const auto elems = c.elements();
  for (ElementId x : elems)
    for (ElementId y : elems)
      if (x < y && c.prec_closure(x, y) && c.prec_closure(y, x))
        bad.push_back(Witness{{c.name(x), c.name(y)},
                              "cycle in the cross-dimensional order",
                              {},
                              {}});
  return finish(AxiomTag::as, std::move(bad));
}

AxiomReport check_axiom(const Complex& c, AxiomTag tag) {
  switch (tag) {
    case AxiomTag::pre: return check_pre_parity(c);
    case AxiomTag::ax1: return check_axiom1(c);
    case AxiomTag::ax2: return check_axiom2(c);
    case AxiomTag::ax3a: return check_axiom3a(c);
    case AxiomTag::ax3b: return check_axiom3b(c);
    case AxiomTag::r1: return check_R1(c);
    case AxiomTag::r2: return check_R2(c);
    case AxiomTag::as: return check_AS(c);
  }
  throw std::invalid_argument("unknown axiom tag");
}

std::vector<AxiomReport> check_all(const Complex& c) {
  std::vector<AxiomReport> out;
  for (AxiomTag tag : all_axioms()) out.push_back(check_axiom(c, tag));
  return out;
}

bool replay_witness(const Complex& c, AxiomTag tag, const Witness& w) {
  std::vector<ElementId> xs;
  for (const auto& name : w.elements) {
    auto x = c.find(name);
    if (!x) return false;
    xs.push_back(*x);
  }
  switch (tag) {
    case AxiomTag::pre:
      return xs.size() == 1 && pre_parity_failure(c, xs[0]).has_value();
    case AxiomTag::ax1:
      return xs.size() == 1 && !axiom1_holds_at(c, xs[0]);
    case AxiomTag::ax2:
      return xs.size() == 1 &&
             (!is_well_formed(c.faces_of(xs[0], Sign::minus)) ||
              !is_well_formed(c.faces_of(xs[0], Sign::plus)));
    case AxiomTag::ax3a:
      return xs.size() == 2 && !(xs[0] == xs[1]) &&
             c.triangle_full(xs[0], xs[1]) && c.triangle_full(xs[1], xs[0]);
    case AxiomTag::ax3b:
      return xs.size() == 3 && !axiom3b_holds_at(c, xs[0], xs[1], xs[2]);
    case AxiomTag::r1:
      return xs.size() == 1 && !r1_holds_at(c, xs[0]);
    case AxiomTag::r2:
      return xs.size() == 1 &&
             (!is_well_formed(mu(c, xs[0])) || !is_well_formed(pi(c, xs[0])));
    case AxiomTag::as:
      return xs.size() == 2 && !(xs[0] == xs[1]) &&
             c.prec_closure(xs[0], xs[1]) && c.prec_closure(xs[1], xs[0]);
  }
  return false;
}

}  // namespace parity
