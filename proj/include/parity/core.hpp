#pragma once

#include <bit>
#include <cstdint>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "parity/result.hpp"

namespace parity {

enum class Sign { minus, plus };

constexpr Sign opposite(Sign s) {
  return s == Sign::minus ? Sign::plus : Sign::minus;
}

// Identifies one element of a fixed complex. The numeric value is the
// element's position in the complex's (dim, name) ordering, so comparing ids
// gives the deterministic total order used for tie-breaking everywhere.
struct ElementId {
  std::uint32_t value = 0;
  friend constexpr auto operator<=>(ElementId, ElementId) = default;
};

// Fixed-width bitset sized to one complex's universe.
class Bitset {
 public:
  Bitset() = default;
  explicit Bitset(std::size_t bits) : bits_(bits), words_((bits + 63) / 64) {}

  std::size_t size() const { return bits_; }

  bool test(std::size_t i) const {
    return (words_[i >> 6] >> (i & 63)) & 1u;
  }
  void set(std::size_t i) { words_[i >> 6] |= std::uint64_t{1} << (i & 63); }
  void reset(std::size_t i) { words_[i >> 6] &= ~(std::uint64_t{1} << (i & 63)); }

  bool any() const;
  bool none() const { return !any(); }
  std::size_t count() const;

  Bitset& operator|=(const Bitset& o);
  Bitset& operator&=(const Bitset& o);
  Bitset& subtract(const Bitset& o);  // set difference

  friend Bitset operator|(Bitset a, const Bitset& b) { return a |= b; }
  friend Bitset operator&(Bitset a, const Bitset& b) { return a &= b; }
  friend Bitset operator-(Bitset a, const Bitset& b) { return a.subtract(b); }

  friend bool operator==(const Bitset&, const Bitset&) = default;

  bool is_subset_of(const Bitset& o) const;
  bool intersects(const Bitset& o) const;

  // Visits set bits in ascending index order.
  template <typename F>
  void for_each(F&& f) const {
    for (std::size_t w = 0; w < words_.size(); ++w) {
      std::uint64_t word = words_[w];
      while (word) {
        const int b = std::countr_zero(word);
        f(w * 64 + static_cast<std::size_t>(b));
        word &= word - 1;
      }
    }
  }

  std::optional<std::size_t> first() const;

 private:
  std::size_t bits_ = 0;
  std::vector<std::uint64_t> words_;
};

// One element as it appears in documents and builder input.
struct ElementRecord {
  std::string id;
  unsigned dim = 0;
  std::vector<std::string> minus;
  std::vector<std::string> plus;
};

namespace detail {
struct ComplexImpl;
}

class Subset;

// A finite graded set of elements with two face maps. Immutable after
// construction; handles are cheap shared references, so complexes can be
// passed by value and shared across threads freely.
//
// Construction only enforces what the representation needs (unique ids,
// face references resolve). Everything else, the pre-parity conditions
// included, is left to the axiom checkers so that deliberately broken
// complexes remain representable.
class Complex {
 public:
  Complex() = default;

  static Result<Complex> build(std::vector<ElementRecord> records);

  bool valid() const { return impl_ != nullptr; }
  std::size_t size() const;
  unsigned top_dim() const;

  unsigned dim(ElementId x) const;
  const std::string& name(ElementId x) const;
  std::optional<ElementId> find(std::string_view id) const;
  std::vector<ElementId> elements() const;

  const Bitset& raw_faces(ElementId x, Sign sign) const;
  Subset faces_of(ElementId x, Sign sign) const;

  Subset empty_set() const;
  Subset universe() const;
  Subset singleton(ElementId x) const;
  Subset dim_slice(unsigned n) const;  // all elements of dimension exactly n

  // x < y : some positive face of x is a negative face of y.
  bool lt(ElementId x, ElementId y) const;
  // Reflexive transitive closure of < over the whole complex.
  bool triangle_full(ElementId x, ElementId y) const;
  // One step of the cross-dimensional order: y in x's plus-set, or x in y's
  // minus-set.
  bool prec(ElementId x, ElementId y) const;
  // Reflexive transitive closure of prec.
  bool prec_closure(ElementId x, ElementId y) const;

  const Bitset& lt_row(ElementId x) const;        // successors under <
  const Bitset& triangle_row(ElementId x) const;  // closure successors, incl. x
  const Bitset& prec_closure_row(ElementId x) const;

  // Same elements and dimensions with the two face maps swapped. Applying it
  // twice yields the original handle, so dual operations are always obtained
  // through this transform instead of being re-implemented.
  Complex reversed() const;

  bool same(const Complex& o) const { return impl_ == o.impl_; }

  const detail::ComplexImpl* impl() const { return impl_.get(); }

 private:
  explicit Complex(std::shared_ptr<const detail::ComplexImpl> impl)
      : impl_(std::move(impl)) {}

  std::shared_ptr<const detail::ComplexImpl> impl_;

  friend class Subset;
};

// Structural equality of two complexes (names, dimensions, face-sets),
// independent of handle identity.
bool equivalent(const Complex& a, const Complex& b);

// A set of element ids within one complex. Extensional: two subsets are
// equal exactly when they contain the same members of the same complex.
class Subset {
 public:
  Subset() = default;
  explicit Subset(Complex c);
  Subset(Complex c, Bitset bits);

  static Result<Subset> from_names(const Complex& c,
                                   std::span<const std::string> names);

  const Complex& complex() const { return complex_; }
  const Bitset& bits() const { return bits_; }

  bool contains(ElementId x) const { return bits_.test(x.value); }
  Subset& insert(ElementId x) { bits_.set(x.value); return *this; }
  Subset& erase(ElementId x) { bits_.reset(x.value); return *this; }

  std::size_t count() const { return bits_.count(); }
  bool empty() const { return bits_.none(); }

  std::vector<ElementId> members() const;
  std::vector<std::string> member_names() const;

  unsigned top_dim() const;  // highest member dimension; 0 when empty

  Subset sub(unsigned n) const;             // members of dimension exactly n
  Subset skeleton(unsigned n) const;        // members of dimension <= n
  Subset skeleton_below(unsigned n) const;  // members of dimension < n

  Subset& operator|=(const Subset& o);
  Subset& operator&=(const Subset& o);
  Subset& operator-=(const Subset& o);

  friend Subset operator|(Subset a, const Subset& b) { return a |= b; }
  friend Subset operator&(Subset a, const Subset& b) { return a &= b; }
  friend Subset operator-(Subset a, const Subset& b) { return a -= b; }

  friend bool operator==(const Subset& a, const Subset& b) {
    return a.complex_.same(b.complex_) && a.bits_ == b.bits_;
  }

  bool is_subset_of(const Subset& o) const;
  bool intersects(const Subset& o) const;

  // Reinterprets the member set inside another complex with the same element
  // layout (used to cross between a complex and its reversal).
  Subset transfer(const Complex& other) const;

 private:
  Complex complex_;
  Bitset bits_;
};

// Union of the chosen face-sets over all members of s.
Subset faces(const Subset& s, Sign sign);

// minus: faces appearing only negatively (S- \ S+). plus: the mirror image.
Subset pure_faces(const Subset& s, Sign sign);

// s and t share no negative faces and no positive faces.
bool perp(const Subset& s, const Subset& t);

// At most one member of dimension zero, and distinct same-dimension members
// are pairwise perp: the "no branching" condition.
bool is_well_formed(const Subset& s);

// Path from x to y whose members all lie in s (length zero allowed).
bool triangle(const Subset& s, ElementId x, ElementId y);

// Precomputed reachability within one subset, for repeated queries.
class RestrictedClosure {
 public:
  explicit RestrictedClosure(const Subset& s);
  bool reaches(ElementId x, ElementId y) const;
  const Bitset& row(ElementId x) const;  // meaningful for members of s
  const Subset& domain() const { return domain_; }

 private:
  Subset domain_;
  std::vector<Bitset> rows_;
};

// No path within t connects two members of r through an outside element.
// When r is not contained in t, *r_outside_t (if given) is set as a flag and
// the check runs on r's members inside t.
bool is_segment(const Subset& r, const Subset& t, bool* r_outside_t = nullptr);

// No element with a path into r has a negative face among r's purely
// positive faces.
bool is_tight(const Subset& r);

Subset minimal_elements(const Subset& s);
Subset maximal_elements(const Subset& s);

inline Complex reverse(const Complex& c) { return c.reversed(); }

}  // namespace parity
