#include "parity/excision.hpp"

#include <cctype>
#include <optional>
#include <stdexcept>
#include <utility>

namespace parity {

struct CompositionTree::Impl {
  bool leaf = true;
  ElementId element;
  unsigned level = 0;
  std::shared_ptr<const Impl> early, late;
};

CompositionTree CompositionTree::leaf(ElementId x) {
  auto impl = std::make_shared<Impl>();
  impl->leaf = true;
  impl->element = x;
  return CompositionTree(std::move(impl));
}

CompositionTree CompositionTree::node(unsigned level, CompositionTree early,
                                      CompositionTree late) {
  auto impl = std::make_shared<Impl>();
  impl->leaf = false;
  impl->level = level;
  impl->early = std::move(early.impl_);
  impl->late = std::move(late.impl_);
  return CompositionTree(std::move(impl));
}

bool CompositionTree::is_leaf() const { return impl_->leaf; }
ElementId CompositionTree::leaf_element() const { return impl_->element; }
unsigned CompositionTree::level() const { return impl_->level; }

CompositionTree CompositionTree::early() const {
  return CompositionTree(impl_->early);
}

CompositionTree CompositionTree::late() const {
  return CompositionTree(impl_->late);
}

std::size_t CompositionTree::leaf_count() const {
  if (impl_->leaf) return 1;
  return CompositionTree(impl_->early).leaf_count() +
         CompositionTree(impl_->late).leaf_count();
}

TightnessCertificate TightnessCertificate::certify(const Complex& c) {
  Subset verified(c);
  for (ElementId x : c.elements())
    if (is_tight(mu(c, x))) verified.insert(x);
  return TightnessCertificate(c, std::move(verified));
}

namespace {

// The cell is an atom exactly when it equals the atom of its top element
// (the top grade of an atom is a singleton).
std::optional<ElementId> atomic_top(const Cell& c) {
  const Subset top = c.m().sub(c.dim());
  if (top.count() != 1) return std::nullopt;
  const ElementId x = top.members().front();
  const Complex& cx = c.complex();
  if (c.m() == mu(cx, x) && c.p() == pi(cx, x)) return x;
  return std::nullopt;
}

// Empty when the tightness precondition is satisfied for every element of
// M u P, otherwise the failure message.
std::optional<std::string> tightness_gate(const Cell& c,
                                          const ExcisionOptions& opts) {
  const Complex& cx = c.complex();
  switch (opts.tightness) {
    case TightnessMode::assume:
      return std::nullopt;
    case TightnessMode::check:
      for (ElementId z : (c.m() | c.p()).members())
        if (!is_tight(mu(cx, z)))
          return "mu(" + cx.name(z) + ") is not tight";
      return std::nullopt;
    case TightnessMode::certified:
      if (!opts.certificate || !opts.certificate->complex().same(cx))
        return "tightness certificate missing or for another complex";
      for (ElementId z : (c.m() | c.p()).members())
        if (!opts.certificate->covers(z))
          return "tightness certificate does not cover " + cx.name(z);
      return std::nullopt;
  }
  return std::nullopt;
}

ElementId least(const Subset& s) {
  return ElementId{static_cast<std::uint32_t>(*s.bits().first())};
}

// Orientation of the two factors is resolved empirically: exactly one order
// must compose back to the input.
struct Oriented {
  Cell early, late;
};

Oriented orient(unsigned m, const Cell& input, const Cell& a, const Cell& b) {
  std::optional<Oriented> found;
  int matches = 0;
  for (const auto& [first, second] : {std::pair{a, b}, std::pair{b, a}}) {
    if (!composable(m, first, second)) continue;
    auto joined = compose(m, first, second);
    if (joined && *joined == input) {
      ++matches;
      found = Oriented{first, second};
    }
  }
  if (matches != 1)
    throw soundness_error(matches == 0
                              ? "no composition order reproduces the input cell"
                              : "both composition orders reproduce the input cell");
  return *found;
}

}  // namespace

Result<ExcisionStep> excise(const Cell& c, const ExcisionOptions& opts) {
  using R = Result<ExcisionStep>;
  const Complex& cx = c.complex();
  if (atomic_top(c)) return R::failure("cell is atomic");
  if (auto why = tightness_gate(c, opts)) return R::failure(*why);

  const unsigned n = c.dim();
  // The least top element always disagrees with the cell, the cell being
  // non-atomic.
  ElementId u = least(c.m().sub(n));
  const Subset mu_u = mu(cx, u);
  const Subset pi_u = pi(cx, u);

  std::optional<unsigned> split;
  for (unsigned m = n; m-- > 0;) {
    if (opts.alt_level_rule) {
      if (c.m().sub(m + 1).intersects(c.p().sub(m + 1))) {
        split = m;
        break;
      }
    } else if (!(c.m().sub(m + 1) == mu_u.sub(m + 1) &&
                 c.p().sub(m + 1) == pi_u.sub(m + 1))) {
      split = m;
      break;
    }
  }
  if (!split)
    throw soundness_error("non-atomic cell has no defective grade");
  const unsigned m = *split;

  const Subset m_level = c.m().sub(m + 1);
  const Subset p_level = c.p().sub(m + 1);
  const Subset meeting = m_level & p_level;
  if (meeting.empty())
    throw soundness_error("split grade has empty intersection");
  const ElementId w = least(meeting);

  if (opts.tightness == TightnessMode::check &&
      !is_segment(mu_u.sub(m + 1), m_level))
    throw soundness_error("pivot atom's grade is not a segment of M at the split level");

  // Minimal element below w and maximal element above w, within the grade.
  RestrictedClosure closure(m_level);
  Subset below(cx), above(cx);
  m_level.bits().for_each([&](std::size_t i) {
    const ElementId z{static_cast<std::uint32_t>(i)};
    if (closure.reaches(z, w)) below.insert(z);
    if (closure.reaches(w, z)) above.insert(z);
  });
  const Subset minimal = minimal_elements(below);
  const Subset maximal = maximal_elements(above);

  std::optional<ElementId> x, y;
  if (!minimal.empty()) x = least(minimal);
  if (!maximal.empty()) y = least(maximal);

  Subset n_set(cx), q_set(cx), l_set(cx), r_set(cx);
  ExcisionStep::Side side;
  ElementId pivot;
  if (x && meeting.contains(*x)) {
    side = ExcisionStep::Side::minimal;
    pivot = *x;
    const Subset xs = cx.singleton(pivot);
    const Subset xm = cx.faces_of(pivot, Sign::minus);
    const Subset xp = cx.faces_of(pivot, Sign::plus);
    n_set = c.m().skeleton(m) | xs;
    q_set = c.p().skeleton_below(m) | ((c.m().sub(m) | xp) - xm) | xs;
    l_set = ((c.m() - xs) | xp) - xm;
    r_set = c.p() - xs;
  } else if (y && meeting.contains(*y)) {
    side = ExcisionStep::Side::maximal;
    pivot = *y;
    const Subset ys = cx.singleton(pivot);
    const Subset ym = cx.faces_of(pivot, Sign::minus);
    const Subset yp = cx.faces_of(pivot, Sign::plus);
    n_set = c.m() - ys;
    q_set = ((c.p() - ys) | ym) - yp;
    l_set = c.m().skeleton_below(m) | ((c.p().sub(m) | ym) - yp) | ys;
    r_set = c.p().skeleton(m) | ys;
  } else {
    throw soundness_error(
        "neither extremal element lies in both M and P at the split level");
  }

  auto first = Cell::make(n_set, q_set);
  if (!first)
    throw soundness_error("excised factor failed validation: " + first.error());
  auto second = Cell::make(l_set, r_set);
  if (!second)
    throw soundness_error("excised factor failed validation: " + second.error());
  if (first->dim() <= m || second->dim() <= m)
    throw soundness_error("excised factor does not rise above the split level");

  Oriented oriented = orient(m, c, *first, *second);
  // Union-rank is the termination measure: both factors lose at least one
  // element. (Intersection-rank can stall: a pivot's faces entering M may
  // create a fresh member of M n P one grade down.)
  const std::size_t input_rank = rank(c, RankMode::set_union);
  if (rank(oriented.early, RankMode::set_union) >= input_rank ||
      rank(oriented.late, RankMode::set_union) >= input_rank)
    throw soundness_error("excised factor does not lower the rank");

  return ExcisionStep{m, side, pivot, std::move(oriented.early),
                      std::move(oriented.late)};
}

Result<CompositionTree> decompose(const Cell& c, const ExcisionOptions& opts) {
  using R = Result<CompositionTree>;
  if (auto x = atomic_top(c)) return CompositionTree::leaf(*x);
  auto step = excise(c, opts);
  if (!step) return R::failure(step.error());
  auto early = decompose(step->early, opts);
  if (!early) return R::failure(early.error());
  auto late = decompose(step->late, opts);
  if (!late) return R::failure(late.error());
  return CompositionTree::node(step->level, std::move(*early), std::move(*late));
}

namespace {

Result<Cell> evaluate_at(const CompositionTree& tree, const Complex& c,
                         const std::string& path) {
  using R = Result<Cell>;
  if (tree.is_leaf()) {
    auto cell = atom(c, tree.leaf_element());
    if (!cell)
      return R::failure("at " + path + ": element " + c.name(tree.leaf_element()) +
                        " is not relevant: " + cell.error());
    return cell;
  }
  auto early = evaluate_at(tree.early(), c, path + "0/");
  if (!early) return early;
  auto late = evaluate_at(tree.late(), c, path + "1/");
  if (!late) return late;
  auto joined = compose(tree.level(), *early, *late);
  if (!joined)
    return R::failure("at " + path + ": " + joined.error());
  return joined;
}

}  // namespace

Result<Cell> evaluate(const CompositionTree& tree, const Complex& c) {
  return evaluate_at(tree, c, "/");
}

std::string tree_to_text(const CompositionTree& tree, const Complex& c) {
  if (tree.is_leaf()) return "(leaf " + c.name(tree.leaf_element()) + ")";
  return "(" + std::to_string(tree.level()) + " " + tree_to_text(tree.early(), c) +
         " " + tree_to_text(tree.late(), c) + ")";
}

namespace {

struct TreeParser {
  std::string_view text;
  std::size_t pos = 0;
  const Complex& c;

  void skip_space() {
    while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos])))
      ++pos;
  }

  Result<std::string> token() {
    skip_space();
    std::size_t start = pos;
    while (pos < text.size() && !std::isspace(static_cast<unsigned char>(text[pos])) &&
           text[pos] != '(' && text[pos] != ')')
      ++pos;
    if (start == pos) return Result<std::string>::failure("expected a token");
    return std::string(text.substr(start, pos - start));
  }

  Result<CompositionTree> parse() {
    skip_space();
    if (pos >= text.size() || text[pos] != '(')
      return Result<CompositionTree>::failure("expected '('");
    ++pos;
    auto head = token();
    if (!head) return Result<CompositionTree>::failure(head.error());
    if (*head == "leaf") {
      auto id = token();
      if (!id) return Result<CompositionTree>::failure(id.error());
      auto x = c.find(*id);
      if (!x)
        return Result<CompositionTree>::failure("unknown element id: " + *id);
      if (!close()) return Result<CompositionTree>::failure("expected ')'");
      return CompositionTree::leaf(*x);
    }
    unsigned level = 0;
    try {
      std::size_t used = 0;
      level = static_cast<unsigned>(std::stoul(*head, &used));
      if (used != head->size()) throw std::invalid_argument("trailing characters");
    } catch (const std::exception&) {
      return Result<CompositionTree>::failure("expected a level number, got: " + *head);
    }
    auto early = parse();
    if (!early) return early;
    auto late = parse();
    if (!late) return late;
    if (!close()) return Result<CompositionTree>::failure("expected ')'");
    return CompositionTree::node(level, std::move(*early), std::move(*late));
  }

  bool close() {
    skip_space();
    if (pos < text.size() && text[pos] == ')') {
      ++pos;
      return true;
    }
    return false;
  }
};

}  // namespace

Result<CompositionTree> tree_from_text(std::string_view text, const Complex& c) {
  TreeParser parser{text, 0, c};
  auto tree = parser.parse();
  if (!tree) return tree;
  parser.skip_space();
  if (parser.pos != text.size())
    return Result<CompositionTree>::failure("trailing characters after tree");
  return tree;
}

}  // namespace parity
