#include <doctest.h>

#include <atomic>
#include <thread>

#include "parity/core.hpp"
#include "support.hpp"

using namespace parity;
using namespace testsupport;

TEST_CASE("faces unions the chosen face-sets") {
  const Complex d2 = delta(2);
  CHECK(faces(ns(d2, {"012"}), Sign::minus) == ns(d2, {"02"}));
  CHECK(faces(ns(d2, {"012"}), Sign::plus) == ns(d2, {"01", "12"}));
  CHECK(faces(ns(d2, {"01", "12"}), Sign::plus) == ns(d2, {"1", "2"}));
  CHECK(faces(d2.empty_set(), Sign::plus) == d2.empty_set());
}

TEST_CASE("pure faces drop the doubly covered ones") {
  const Complex d2 = delta(2);
  CHECK(pure_faces(ns(d2, {"01", "12"}), Sign::minus) == ns(d2, {"0"}));
  CHECK(pure_faces(ns(d2, {"012"}), Sign::plus) == ns(d2, {"01", "12"}));
  for (ElementId x : d2.elements())  // face-sets of one element are disjoint
    CHECK(pure_faces(d2.singleton(x), Sign::minus) == d2.faces_of(x, Sign::minus));
}

TEST_CASE("grading and skeleta") {
  const Complex d2 = delta(2);
  CHECK(d2.universe().sub(1) == ns(d2, {"01", "02", "12"}));
  const Subset edges = ns(d2, {"01", "02", "12"});
  CHECK(edges.skeleton(1) == edges);  // already 1-dimensional
  CHECK(d2.empty_set().sub(3) == d2.empty_set());
  CHECK(ns(d2, {"0", "01", "012"}).skeleton_below(2) == ns(d2, {"0", "01"}));
}

TEST_CASE("well-formed means no branching and at most one vertex") {
  const Complex d2 = delta(2);
  CHECK(is_well_formed(ns(d2, {"01", "12"})));
  CHECK_FALSE(is_well_formed(ns(d2, {"01", "02"})));  // shared source vertex
  for (ElementId x : d2.elements()) CHECK(is_well_formed(d2.singleton(x)));
  CHECK_FALSE(is_well_formed(ns(d2, {"0", "1"})));
}

TEST_CASE("well-formedness is a grade-by-grade condition") {
  for (const Complex& c : {delta(2), glob_complex(2)}) {
    for (std::uint64_t mask = 0; mask < (1u << c.size()); ++mask) {
      const Subset s = subset_of_mask(c, mask);
      bool per_grade = true;
      for (unsigned n = 0; n <= c.top_dim(); ++n)
        per_grade = per_grade && is_well_formed(s.sub(n));
      CHECK(is_well_formed(s) == per_grade);
    }
  }
}

TEST_CASE("well-formedness agrees with the definitional oracle") {
  const Complex d2 = delta(2);
  const OracleComplex oc = oracle_of(d2);
  for (std::uint64_t mask = 0; mask < (1u << d2.size()); ++mask)
    CHECK(is_well_formed(subset_of_mask(d2, mask)) ==
          oracle_well_formed(oc, names_of_mask(d2, mask)));
}

TEST_CASE("perp compares both face-sets") {
  const Complex d2 = delta(2);
  CHECK(perp(ns(d2, {"01"}), ns(d2, {"12"})));
  CHECK_FALSE(perp(ns(d2, {"01"}), ns(d2, {"02"})));
  for (std::uint64_t mask = 0; mask < (1u << d2.size()); ++mask)
    CHECK(perp(subset_of_mask(d2, mask), d2.empty_set()));
}

TEST_CASE("disjoint pieces of a well-formed set are perp") {
  // Over every split of every subset of the triangle complex.
  const Complex d2 = delta(2);
  for (std::uint64_t mask = 0; mask < (1u << d2.size()); ++mask) {
    const Subset whole = subset_of_mask(d2, mask);
    if (!is_well_formed(whole)) continue;
    for (std::uint64_t sub = mask;; sub = (sub - 1) & mask) {
      const Subset t = subset_of_mask(d2, sub);
      CHECK(perp(t, whole - t));
      if (sub == 0) break;
    }
  }
}

TEST_CASE("faces and grading distribute over unions") {
  const Complex c = glob_complex(2);
  const std::uint64_t limit = 1u << c.size();
  for (std::uint64_t a = 0; a < limit; ++a)
    for (std::uint64_t b = 0; b < limit; b += 3) {
      const Subset s = subset_of_mask(c, a);
      const Subset t = subset_of_mask(c, b);
      CHECK(faces(s | t, Sign::minus) == (faces(s, Sign::minus) | faces(t, Sign::minus)));
      CHECK((s | t).sub(1) == (s.sub(1) | t.sub(1)));
    }
}

TEST_CASE("the one-step order compares positive against negative faces") {
  const Complex d2 = delta(2);
  CHECK(d2.lt(id(d2, "01"), id(d2, "12")));
  CHECK_FALSE(d2.lt(id(d2, "12"), id(d2, "01")));
  for (ElementId x : d2.elements()) CHECK_FALSE(d2.lt(x, x));
}

TEST_CASE("paths restricted to a subset") {
  const Complex d2 = delta(2);
  const Subset both = ns(d2, {"01", "12"});
  CHECK(triangle(both, id(d2, "01"), id(d2, "12")));
  CHECK_FALSE(triangle(ns(d2, {"01"}), id(d2, "01"), id(d2, "12")));
  for (ElementId x : d2.elements()) CHECK(triangle(d2.universe(), x, x));
}

TEST_CASE("path order is transitive and antisymmetric on the generators") {
  for (const Complex& c : {delta(3), cube_complex(2), glob_complex(3)}) {
    for (ElementId x : c.elements())
      for (ElementId y : c.elements()) {
        if (c.triangle_full(x, y) && c.triangle_full(y, x)) CHECK(x == y);
        for (ElementId z : c.elements())
          if (c.triangle_full(x, y) && c.triangle_full(y, z))
            CHECK(c.triangle_full(x, z));
      }
  }
}

TEST_CASE("cross-dimensional order") {
  const Complex d2 = delta(2);
  CHECK(d2.prec_closure(id(d2, "0"), id(d2, "01")));
  CHECK_FALSE(d2.prec_closure(id(d2, "012"), id(d2, "0")));
  for (ElementId x : d2.elements()) CHECK(d2.prec_closure(x, x));
}

TEST_CASE("path order embeds into the cross-dimensional order") {
  for (const Complex& c : {delta(3), cube_complex(2), glob_complex(3)}) {
    for (ElementId x : c.elements())
      for (ElementId y : c.elements())
        if (c.triangle_full(x, y)) CHECK(c.prec_closure(x, y));
  }
}

TEST_CASE("segments") {
  const Complex d2 = delta(2);
  CHECK(is_segment(ns(d2, {"01"}), ns(d2, {"01", "12"})));
  for (std::uint64_t mask = 0; mask < (1u << d2.size()); ++mask) {
    const Subset t = subset_of_mask(d2, mask);
    CHECK(is_segment(t, t));
  }

  const Complex path = chain3();
  CHECK_FALSE(is_segment(ns(path, {"e1", "e3"}), ns(path, {"e1", "e2", "e3"})));

  bool outside = false;
  CHECK(is_segment(ns(path, {"e1"}), ns(path, {"e2"}), &outside));
  CHECK(outside);
  is_segment(ns(path, {"e1"}), ns(path, {"e1", "e2"}), &outside);
  CHECK_FALSE(outside);
}

TEST_CASE("face-sets of a single element are tight") {
  for (const Complex& c : {delta(2), cube_complex(2), glob_complex(2)}) {
    for (ElementId x : c.elements()) {
      CHECK(is_tight(c.faces_of(x, Sign::plus)));
      CHECK(is_tight(c.faces_of(x, Sign::minus)));
    }
    CHECK(is_tight(c.empty_set()));
  }
}

TEST_CASE("mu-sets of the tetrahedron complex are tight") {
  const Complex d3 = delta(3);
  for (ElementId x : d3.elements()) CHECK(is_tight(mu(d3, x)));
}

TEST_CASE("tight subsets of well-formed sets are segments") {
  // Exhaustive over all nested pairs in two small generators; the path
  // order here is the one restricted to the ambient set.
  for (const Complex& c : {delta(2), glob_complex(3)}) {
    const std::uint64_t limit = std::uint64_t{1} << c.size();
    for (std::uint64_t outer = 0; outer < limit; ++outer) {
      const Subset s = subset_of_mask(c, outer);
      if (!is_well_formed(s)) continue;
      for (std::uint64_t inner = outer;; inner = (inner - 1) & outer) {
        const Subset r = subset_of_mask(c, inner);
        if (is_tight(r)) CHECK(is_segment(r, s));
        if (inner == 0) break;
      }
    }
  }
}

TEST_CASE("tight subsets of well-formed sets are segments, sampled deeper") {
  const Complex d3 = delta(3);
  std::uint64_t state = 0x2545f4914f6cdd1dULL;
  auto next = [&state] {
    state ^= state << 13;
    state ^= state >> 7;
    state ^= state << 17;
    return state;
  };
  int checked = 0;
  for (int trial = 0; trial < 1200; ++trial) {
    // Grow a well-formed set greedily in a randomized element order.
    Subset s(d3);
    for (ElementId x : d3.elements()) {
      if (next() % 3 == 0) continue;
      s.insert(x);
      if (!is_well_formed(s) || s.count() > 12) s.erase(x);
    }
    Subset r(d3);
    for (ElementId x : s.members())
      if (next() % 2 == 0) r.insert(x);
    if (!is_tight(r)) continue;
    CHECK(is_segment(r, s));
    ++checked;
  }
  CHECK(checked > 400);
}

TEST_CASE("minimal and maximal elements under the restricted order") {
  const Complex d2 = delta(2);
  CHECK(minimal_elements(ns(d2, {"01", "12"})) == ns(d2, {"01"}));
  CHECK(maximal_elements(ns(d2, {"01", "12"})) == ns(d2, {"12"}));
  for (ElementId x : d2.elements())
    CHECK(minimal_elements(d2.singleton(x)) == d2.singleton(x));
  // Non-empty inputs keep non-empty extremes on complexes with an acyclic
  // path order.
  for (std::uint64_t mask = 1; mask < (1u << d2.size()); ++mask) {
    CHECK_FALSE(minimal_elements(subset_of_mask(d2, mask)).empty());
    CHECK_FALSE(maximal_elements(subset_of_mask(d2, mask)).empty());
  }
}

TEST_CASE("reversal swaps the face maps and is an involution") {
  const Complex d2 = delta(2);
  const Complex rev = reverse(d2);
  CHECK(reverse(rev).same(d2));
  CHECK(faces(ns(rev, {"012"}), Sign::minus) == ns(rev, {"01", "12"}));
  for (ElementId x : d2.elements()) {
    CHECK(d2.dim(x) == rev.dim(x));
    CHECK(d2.raw_faces(x, Sign::plus) == rev.raw_faces(x, Sign::minus));
  }
  CHECK(equivalent(d2, reverse(rev)));
  CHECK_FALSE(equivalent(d2, rev));
}

TEST_CASE("complexes are safely shareable across threads") {
  // First touch of the lazy relation caches from several threads at once.
  const Complex d4 = delta(4);
  const Complex rev = reverse(d4);
  std::vector<std::thread> workers;
  std::atomic<int> disagreements{0};
  for (int t = 0; t < 8; ++t)
    workers.emplace_back([&, t] {
      for (ElementId x : d4.elements())
        for (ElementId y : d4.elements()) {
          if (d4.triangle_full(x, y) != rev.triangle_full(y, x)) ++disagreements;
          if (t % 2 == 0 && d4.prec_closure(x, y) && !rev.prec_closure(y, x))
            ++disagreements;
        }
    });
  for (auto& w : workers) w.join();
  CHECK(disagreements == 0);
}

TEST_CASE("face dimensions and disjointness on validated generators") {
  for (const Complex& c : {delta(3), cube_complex(2), glob_complex(3)}) {
    for (ElementId x : c.elements()) {
      CHECK_FALSE(c.faces_of(x, Sign::minus).intersects(c.faces_of(x, Sign::plus)));
      for (Sign sign : {Sign::minus, Sign::plus})
        for (ElementId f : c.faces_of(x, sign).members())
          CHECK(c.dim(f) + 1 == c.dim(x));
    }
  }
}
