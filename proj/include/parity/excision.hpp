#pragma once

#include <memory>
#include <string>
#include <string_view>
#include <vector>

#include "parity/cells.hpp"
#include "parity/core.hpp"
#include "parity/result.hpp"

namespace parity {

// A recipe for rebuilding a cell from atoms: a leaf names an element whose
// atom stands alone, a node composes its two children at a fixed level with
// the early child first. Immutable, cheap to copy.
class CompositionTree {
 public:
  static CompositionTree leaf(ElementId x);
  static CompositionTree node(unsigned level, CompositionTree early,
                              CompositionTree late);

  bool is_leaf() const;
  ElementId leaf_element() const;
  unsigned level() const;
  CompositionTree early() const;
  CompositionTree late() const;

  std::size_t leaf_count() const;

 private:
  struct Impl;
  explicit CompositionTree(std::shared_ptr<const Impl> impl)
      : impl_(std::move(impl)) {}
  std::shared_ptr<const Impl> impl_;
};

// Elements whose mu-set has been verified tight, reusable across excisions
// of cells in the same complex.
class TightnessCertificate {
 public:
  static TightnessCertificate certify(const Complex& c);
  const Complex& complex() const { return complex_; }
  bool covers(ElementId x) const { return verified_.contains(x); }

 private:
  TightnessCertificate(Complex c, Subset verified)
      : complex_(std::move(c)), verified_(std::move(verified)) {}
  Complex complex_;
  Subset verified_;
};

enum class TightnessMode {
  check,      // verify mu(z) tight for every z in M u P before splitting
  assume,     // skip the verification (experimental; alarms still fire)
  certified,  // accept a precomputed certificate
};

struct ExcisionOptions {
  TightnessMode tightness = TightnessMode::check;
  // Select the split level by the highest grade where M and P still
  // intersect, instead of the highest grade disagreeing with the pivot
  // atom. Experimental alternative; diverges on cells whose top grade is a
  // singleton but whose lower grades are composite.
  bool alt_level_rule = false;
  const TightnessCertificate* certificate = nullptr;
};

// One split of a non-atomic cell. Invariants enforced at construction:
// compose(level, early, late) reproduces the input, both factors have
// dimension above the level, and both have strictly smaller union-rank
// than the input (the termination measure).
struct ExcisionStep {
  unsigned level = 0;
  enum class Side { minimal, maximal } side = Side::minimal;
  ElementId pivot;
  Cell early;
  Cell late;
};

// Splits a non-atomic cell at the highest defective grade, pulling off an
// extremal pivot. All selections tie-break by least id, so identical inputs
// produce identical steps. Absent on atoms and on failed preconditions;
// internal contradictions raise soundness_error.
Result<ExcisionStep> excise(const Cell& c, const ExcisionOptions& opts = {});

// Recursive excision down to atoms. The returned tree's leaves re-list the
// members of M n P across grades; evaluate() rebuilds the input exactly.
Result<CompositionTree> decompose(const Cell& c, const ExcisionOptions& opts = {});

// Leaf: the element's atom. Node: the level-composite of the children.
Result<Cell> evaluate(const CompositionTree& tree, const Complex& c);

// Nested text form: (leaf ID) and (LEVEL EARLY LATE).
std::string tree_to_text(const CompositionTree& tree, const Complex& c);
Result<CompositionTree> tree_from_text(std::string_view text, const Complex& c);

}  // namespace parity
