#pragma once

#include <doctest.h>

#include <map>
#include <set>
#include <string>
#include <vector>

#include "parity/cells.hpp"
#include "parity/core.hpp"
#include "parity/generators.hpp"

namespace testsupport {

inline parity::ElementRecord rec(std::string id, unsigned dim,
                                 std::vector<std::string> minus = {},
                                 std::vector<std::string> plus = {}) {
  return parity::ElementRecord{std::move(id), dim, std::move(minus), std::move(plus)};
}

inline parity::Complex from_records(std::vector<parity::ElementRecord> records) {
  auto built = parity::Complex::build(std::move(records));
  if (!built.ok()) FAIL(built.error());
  return *built;
}

inline parity::Complex gen(parity::Family family, unsigned n) {
  auto built = parity::generate(family, n);
  REQUIRE(built.ok());
  return *built;
}

inline parity::Complex delta(unsigned n) { return gen(parity::Family::simplex, n); }
inline parity::Complex cube_complex(unsigned n) { return gen(parity::Family::cube, n); }
inline parity::Complex glob_complex(unsigned n) { return gen(parity::Family::glob, n); }

inline parity::ElementId id(const parity::Complex& c, const std::string& name) {
  auto x = c.find(name);
  if (!x.has_value()) FAIL(("no element named " + name));
  return *x;
}

inline parity::Subset ns(const parity::Complex& c,
                         const std::vector<std::string>& names) {
  auto s = parity::Subset::from_names(c, names);
  if (!s.ok()) FAIL(s.error());
  return *s;
}

inline parity::Cell cell(const parity::Complex& c,
                         const std::vector<std::string>& m,
                         const std::vector<std::string>& p) {
  auto made = parity::Cell::make(ns(c, m), ns(c, p));
  if (!made.ok()) FAIL(made.error());
  return *made;
}

inline std::set<std::string> name_set(const parity::Subset& s) {
  auto names = s.member_names();
  return std::set<std::string>(names.begin(), names.end());
}

// Directed path on four vertices: w0 -e1-> w1 -e2-> w2 -e3-> w3.
inline parity::Complex chain3() {
  return from_records({
      rec("w0", 0), rec("w1", 0), rec("w2", 0), rec("w3", 0),
      rec("e1", 1, {"w0"}, {"w1"}),
      rec("e2", 1, {"w1"}, {"w2"}),
      rec("e3", 1, {"w2"}, {"w3"}),
  });
}

// The labelled two-dimensional element x with source path p,q,r and target
// path s,t between vertices a and e.
inline parity::Complex labelled_two_cell() {
  return from_records({
      rec("a", 0), rec("b", 0), rec("c", 0), rec("d", 0), rec("e", 0),
      rec("p", 1, {"a"}, {"c"}),
      rec("q", 1, {"c"}, {"b"}),
      rec("r", 1, {"b"}, {"e"}),
      rec("s", 1, {"a"}, {"d"}),
      rec("t", 1, {"d"}, {"e"}),
      rec("x", 2, {"p", "q", "r"}, {"s", "t"}),
  });
}

// Two squares whose boundaries are chained head-to-tail through the extra
// edges g and h. Satisfies the parity axioms but the cross-dimensional
// order cycles through alpha and beta.
inline parity::Complex prec_cycle_complex() {
  return from_records({
      rec("s", 0), rec("e", 0), rec("t", 0), rec("f", 0),
      rec("r", 0), rec("c", 0), rec("u", 0), rec("d", 0),
      rec("a1", 1, {"s"}, {"e"}),
      rec("a2", 1, {"e"}, {"t"}),
      rec("b1", 1, {"s"}, {"f"}),
      rec("b2", 1, {"f"}, {"t"}),
      rec("m1", 1, {"r"}, {"c"}),
      rec("m2", 1, {"c"}, {"u"}),
      rec("n1", 1, {"r"}, {"d"}),
      rec("n2", 1, {"d"}, {"u"}),
      rec("g", 1, {"f"}, {"c"}),
      rec("h", 1, {"d"}, {"e"}),
      rec("alpha", 2, {"a1", "a2"}, {"b1", "b2"}),
      rec("beta", 2, {"m1", "m2"}, {"n1", "n2"}),
  });
}

// ------------------------------------------------------------------
// Independent oracle over plain string sets, computed straight from the
// definitions. Used to cross-check the bitset implementation.
// ------------------------------------------------------------------

struct OracleComplex {
  std::map<std::string, unsigned> dim;
  std::map<std::string, std::set<std::string>> minus, plus;
};

inline OracleComplex oracle_of(const parity::Complex& c) {
  OracleComplex out;
  for (parity::ElementId x : c.elements()) {
    const std::string name = c.name(x);
    out.dim[name] = c.dim(x);
    out.minus[name] = name_set(c.faces_of(x, parity::Sign::minus));
    out.plus[name] = name_set(c.faces_of(x, parity::Sign::plus));
  }
  return out;
}

using Names = std::set<std::string>;

inline Names oracle_faces(const OracleComplex& c, const Names& s, parity::Sign sign) {
  Names out;
  for (const auto& w : s) {
    const auto& fs = sign == parity::Sign::minus ? c.minus.at(w) : c.plus.at(w);
    out.insert(fs.begin(), fs.end());
  }
  return out;
}

inline Names oracle_difference(const Names& a, const Names& b) {
  Names out;
  for (const auto& w : a)
    if (!b.contains(w)) out.insert(w);
  return out;
}

inline Names oracle_union(const Names& a, const Names& b) {
  Names out = a;
  out.insert(b.begin(), b.end());
  return out;
}

inline bool oracle_moves(const OracleComplex& c, const Names& s, const Names& m,
                         const Names& p) {
  const Names sm = oracle_faces(c, s, parity::Sign::minus);
  const Names sp = oracle_faces(c, s, parity::Sign::plus);
  return m == oracle_difference(oracle_union(p, sm), sp) &&
         p == oracle_difference(oracle_union(m, sp), sm);
}

inline bool oracle_well_formed(const OracleComplex& c, const Names& s) {
  std::size_t zero = 0;
  for (const auto& w : s)
    if (c.dim.at(w) == 0) ++zero;
  if (zero > 1) return false;
  for (const auto& x : s)
    for (const auto& y : s) {
      if (x == y || c.dim.at(x) != c.dim.at(y) || c.dim.at(x) == 0) continue;
      for (const auto& f : c.minus.at(x))
        if (c.minus.at(y).contains(f)) return false;
      for (const auto& f : c.plus.at(x))
        if (c.plus.at(y).contains(f)) return false;
    }
  return true;
}

inline bool oracle_receptive(const OracleComplex& c, const Names& s) {
  for (const auto& [x, d] : c.dim) {
    const Names mm = oracle_faces(c, c.minus.at(x), parity::Sign::minus);
    const Names mp = oracle_faces(c, c.minus.at(x), parity::Sign::plus);
    const Names pm = oracle_faces(c, c.plus.at(x), parity::Sign::minus);
    const Names pp = oracle_faces(c, c.plus.at(x), parity::Sign::plus);
    auto subset_of_s = [&](const Names& a) {
      for (const auto& w : a)
        if (!s.contains(w)) return false;
      return true;
    };
    auto meets_s = [&](const Names& a) {
      for (const auto& w : a)
        if (s.contains(w)) return true;
      return false;
    };
    Names mp_and_pp;
    for (const auto& w : mp)
      if (pp.contains(w)) mp_and_pp.insert(w);
    if (subset_of_s(mp_and_pp) && !meets_s(mm) && meets_s(pm)) return false;
    Names pm_and_mm;
    for (const auto& w : pm)
      if (mm.contains(w)) pm_and_mm.insert(w);
    if (subset_of_s(pm_and_mm) && !meets_s(pp) && meets_s(mp)) return false;
  }
  return true;
}

// Enumerates subsets of a small universe as bitmasks, in mask order.
inline parity::Subset subset_of_mask(const parity::Complex& c, std::uint64_t mask) {
  parity::Bitset bits(c.size());
  for (std::size_t i = 0; i < c.size(); ++i)
    if (mask & (std::uint64_t{1} << i)) bits.set(i);
  return parity::Subset(c, std::move(bits));
}

inline Names names_of_mask(const parity::Complex& c, std::uint64_t mask) {
  return name_set(subset_of_mask(c, mask));
}

}  // namespace testsupport
