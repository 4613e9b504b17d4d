#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "parity/core.hpp"

namespace parity {

enum class AxiomTag { pre, ax1, ax2, ax3a, ax3b, r1, r2, as };

std::string_view axiom_name(AxiomTag tag);
std::optional<AxiomTag> axiom_from_name(std::string_view name);
std::vector<AxiomTag> all_axioms();

// One offending tuple together with both evaluated sides of the violated
// equation, so the violation can be replayed from the definition alone.
struct Witness {
  std::vector<std::string> elements;
  std::string detail;
  std::vector<std::string> lhs;
  std::vector<std::string> rhs;
};

struct AxiomReport {
  AxiomTag tag = AxiomTag::pre;
  bool pass = true;
  std::vector<Witness> witnesses;
};

// All checkers are total: they accept arbitrary structurally valid data so
// that mutation fuzzing and counterexample search can run them on complexes
// that violate earlier axioms.

// The pre-parity conditions: face dimensions drop by exactly one, face-sets
// of positive-dimensional elements are non-empty, zero-dimensional elements
// have no faces, and the two face-sets are disjoint. Reports the first
// failing condition per element.
AxiomReport check_pre_parity(const Complex& c);

// x++ u x-- equals x-+ u x+- for every element.
AxiomReport check_axiom1(const Complex& c);

// Both face-sets of every element are well-formed.
AxiomReport check_axiom2(const Complex& c);

// The within-dimension order has no non-trivial cycles.
AxiomReport check_axiom3a(const Complex& c);

// No path connects the two face-sets of any element, in either direction.
AxiomReport check_axiom3b(const Complex& c);

// Strengthened globularity for mu/pi: union equality plus the two empty
// intersections.
AxiomReport check_R1(const Complex& c);

// mu(x) and pi(x) are well-formed for every x.
AxiomReport check_R2(const Complex& c);

// The cross-dimensional order is antisymmetric.
AxiomReport check_AS(const Complex& c);

AxiomReport check_axiom(const Complex& c, AxiomTag tag);
std::vector<AxiomReport> check_all(const Complex& c);

// Re-evaluates the witnessed tuple against the axiom's definition.
// True means the violation reproduces.
bool replay_witness(const Complex& c, AxiomTag tag, const Witness& w);

}  // namespace parity
