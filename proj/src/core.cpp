#include "parity/core.hpp"

#include <algorithm>
#include <bit>
#include <map>
#include <mutex>
#include <stdexcept>

namespace parity {

bool Bitset::any() const {
  for (auto w : words_)
    if (w) return true;
  return false;
}

std::size_t Bitset::count() const {
  std::size_t n = 0;
  for (auto w : words_) n += static_cast<std::size_t>(std::popcount(w));
  return n;
}

Bitset& Bitset::operator|=(const Bitset& o) {
  for (std::size_t i = 0; i < words_.size(); ++i) words_[i] |= o.words_[i];
  return *this;
}

Bitset& Bitset::operator&=(const Bitset& o) {
  for (std::size_t i = 0; i < words_.size(); ++i) words_[i] &= o.words_[i];
  return *this;
}

Bitset& Bitset::subtract(const Bitset& o) {
  for (std::size_t i = 0; i < words_.size(); ++i) words_[i] &= ~o.words_[i];
  return *this;
}

bool Bitset::is_subset_of(const Bitset& o) const {
  for (std::size_t i = 0; i < words_.size(); ++i)
    if (words_[i] & ~o.words_[i]) return false;
  return true;
}

bool Bitset::intersects(const Bitset& o) const {
  for (std::size_t i = 0; i < words_.size(); ++i)
    if (words_[i] & o.words_[i]) return true;
  return false;
}

std::optional<std::size_t> Bitset::first() const {
  for (std::size_t w = 0; w < words_.size(); ++w)
    if (words_[w]) return w * 64 + static_cast<std::size_t>(std::countr_zero(words_[w]));
  return std::nullopt;
}

namespace detail {

struct ComplexImpl {
  std::vector<std::string> names;  // index order is (dim, name) ascending
  std::vector<unsigned> dims;
  std::vector<Bitset> minus;
  std::vector<Bitset> plus;
  std::map<std::string, std::uint32_t, std::less<>> index;
  unsigned top_dim = 0;
  std::vector<Bitset> dim_masks;

  // Lazy relation caches. All derived from immutable data above.
  mutable std::once_flag lt_once, tri_once, prec_once;
  mutable std::vector<Bitset> lt_rows;        // successors under <
  mutable std::vector<Bitset> tri_rows;       // closure of <, incl. self
  mutable std::vector<Bitset> prec_rows;      // one-step prec successors
  mutable std::vector<Bitset> prec_clo_rows;  // closure of prec, incl. self

  // Reversal cache. Weak both ways: no ownership cycle, and an expired link
  // just means the reversal is rebuilt on demand.
  mutable std::mutex rev_mutex;
  mutable std::weak_ptr<const ComplexImpl> rev;

  std::size_t size() const { return names.size(); }

  const Bitset& face_bits(std::uint32_t i, Sign sign) const {
    return sign == Sign::minus ? minus[i] : plus[i];
  }

  void ensure_lt() const {
    std::call_once(lt_once, [this] {
      const std::size_t n = size();
      lt_rows.assign(n, Bitset(n));
      for (std::uint32_t x = 0; x < n; ++x)
        for (std::uint32_t y = 0; y < n; ++y)
          if (dims[x] == dims[y] && plus[x].intersects(minus[y]))
            lt_rows[x].set(y);
    });
  }

  void ensure_triangle() const {
    ensure_lt();
    std::call_once(tri_once, [this] { tri_rows = close(lt_rows); });
  }

  void ensure_prec() const {
    std::call_once(prec_once, [this] {
      const std::size_t n = size();
      prec_rows.assign(n, Bitset(n));
      for (std::uint32_t x = 0; x < n; ++x) {
        prec_rows[x] |= plus[x];  // x prec y when y is a positive face of x
        for (std::uint32_t y = 0; y < n; ++y)
          if (minus[y].test(x)) prec_rows[x].set(y);  // or x a negative face of y
      }
      prec_clo_rows = close(prec_rows);
    });
  }

  // Reflexive transitive closure of an adjacency table, by saturation.
  std::vector<Bitset> close(const std::vector<Bitset>& adj) const {
    const std::size_t n = size();
    std::vector<Bitset> rows(n, Bitset(n));
    for (std::uint32_t x = 0; x < n; ++x) rows[x].set(x);
    bool changed = true;
    while (changed) {
      changed = false;
      for (std::uint32_t x = 0; x < n; ++x) {
        Bitset next = rows[x];
        rows[x].for_each([&](std::size_t mid) { next |= adj[mid]; });
        if (!(next == rows[x])) {
          rows[x] = std::move(next);
          changed = true;
        }
      }
    }
    return rows;
  }
};

}  // namespace detail

namespace {

const detail::ComplexImpl& impl_of(const Complex& c) {
  if (!c.valid()) throw std::invalid_argument("operation on an empty complex handle");
  return *c.impl();
}

void require_same(const Complex& a, const Complex& b) {
  if (!a.same(b))
    throw std::invalid_argument("operands belong to different complexes");
}

}  // namespace

Result<Complex> Complex::build(std::vector<ElementRecord> records) {
  std::stable_sort(records.begin(), records.end(),
                   [](const ElementRecord& a, const ElementRecord& b) {
                     return a.dim != b.dim ? a.dim < b.dim : a.id < b.id;
                   });
  auto impl = std::make_shared<detail::ComplexImpl>();
  const std::size_t n = records.size();
  impl->names.reserve(n);
  impl->dims.reserve(n);
  for (std::uint32_t i = 0; i < n; ++i) {
    const auto& r = records[i];
    if (!impl->index.emplace(r.id, i).second)
      return Result<Complex>::failure("duplicate element id: " + r.id);
    impl->names.push_back(r.id);
    impl->dims.push_back(r.dim);
    if (r.dim > impl->top_dim) impl->top_dim = r.dim;
  }
  impl->minus.assign(n, Bitset(n));
  impl->plus.assign(n, Bitset(n));
  for (std::uint32_t i = 0; i < n; ++i) {
    for (Sign sign : {Sign::minus, Sign::plus}) {
      const auto& list = sign == Sign::minus ? records[i].minus : records[i].plus;
      Bitset& bits = sign == Sign::minus ? impl->minus[i] : impl->plus[i];
      for (const auto& ref : list) {
        auto it = impl->index.find(ref);
        if (it == impl->index.end())
          return Result<Complex>::failure("element " + records[i].id +
                                          " references undefined id: " + ref);
        bits.set(it->second);
      }
    }
  }
  impl->dim_masks.assign(impl->top_dim + 1, Bitset(n));
  for (std::uint32_t i = 0; i < n; ++i) impl->dim_masks[impl->dims[i]].set(i);
  return Complex(std::shared_ptr<const detail::ComplexImpl>(std::move(impl)));
}

std::size_t Complex::size() const { return impl_of(*this).size(); }

unsigned Complex::top_dim() const { return impl_of(*this).top_dim; }

unsigned Complex::dim(ElementId x) const { return impl_of(*this).dims.at(x.value); }

const std::string& Complex::name(ElementId x) const {
  return impl_of(*this).names.at(x.value);
}

std::optional<ElementId> Complex::find(std::string_view id) const {
  const auto& impl = impl_of(*this);
  auto it = impl.index.find(id);
  if (it == impl.index.end()) return std::nullopt;
  return ElementId{it->second};
}

std::vector<ElementId> Complex::elements() const {
  std::vector<ElementId> out;
  out.reserve(size());
  for (std::uint32_t i = 0; i < size(); ++i) out.push_back(ElementId{i});
  return out;
}

const Bitset& Complex::raw_faces(ElementId x, Sign sign) const {
  return impl_of(*this).face_bits(x.value, sign);
}

Subset Complex::faces_of(ElementId x, Sign sign) const {
  return Subset(*this, raw_faces(x, sign));
}

Subset Complex::empty_set() const { return Subset(*this); }

Subset Complex::universe() const {
  Bitset bits(size());
  for (std::size_t i = 0; i < size(); ++i) bits.set(i);
  return Subset(*this, std::move(bits));
}

Subset Complex::singleton(ElementId x) const {
  Bitset bits(size());
  bits.set(x.value);
  return Subset(*this, std::move(bits));
}

Subset Complex::dim_slice(unsigned n) const {
  const auto& impl = impl_of(*this);
  if (n >= impl.dim_masks.size()) return empty_set();
  return Subset(*this, impl.dim_masks[n]);
}

bool Complex::lt(ElementId x, ElementId y) const {
  const auto& impl = impl_of(*this);
  return impl.dims[x.value] == impl.dims[y.value] &&
         impl.plus[x.value].intersects(impl.minus[y.value]);
}

bool Complex::triangle_full(ElementId x, ElementId y) const {
  return triangle_row(x).test(y.value);
}

bool Complex::prec(ElementId x, ElementId y) const {
  const auto& impl = impl_of(*this);
  return impl.plus[x.value].test(y.value) || impl.minus[y.value].test(x.value);
}

bool Complex::prec_closure(ElementId x, ElementId y) const {
  return prec_closure_row(x).test(y.value);
}

const Bitset& Complex::lt_row(ElementId x) const {
  const auto& impl = impl_of(*this);
  impl.ensure_lt();
  return impl.lt_rows[x.value];
}

const Bitset& Complex::triangle_row(ElementId x) const {
  const auto& impl = impl_of(*this);
  impl.ensure_triangle();
  return impl.tri_rows[x.value];
}

const Bitset& Complex::prec_closure_row(ElementId x) const {
  const auto& impl = impl_of(*this);
  impl.ensure_prec();
  return impl.prec_clo_rows[x.value];
}

Complex Complex::reversed() const {
  const auto& impl = impl_of(*this);
  std::scoped_lock lock(impl.rev_mutex);
  if (auto cached = impl.rev.lock()) return Complex(std::move(cached));
  auto rev = std::make_shared<detail::ComplexImpl>();
  rev->names = impl.names;
  rev->dims = impl.dims;
  rev->minus = impl.plus;
  rev->plus = impl.minus;
  rev->index = impl.index;
  rev->top_dim = impl.top_dim;
  rev->dim_masks = impl.dim_masks;
  rev->rev = impl_;
  impl.rev = rev;
  return Complex(std::shared_ptr<const detail::ComplexImpl>(std::move(rev)));
}

bool equivalent(const Complex& a, const Complex& b) {
  if (a.same(b)) return true;
  const auto& ia = impl_of(a);
  const auto& ib = impl_of(b);
  return ia.names == ib.names && ia.dims == ib.dims && ia.minus == ib.minus &&
         ia.plus == ib.plus;
}

Subset::Subset(Complex c) : complex_(std::move(c)), bits_(impl_of(complex_).size()) {}

Subset::Subset(Complex c, Bitset bits) : complex_(std::move(c)), bits_(std::move(bits)) {
  if (bits_.size() != impl_of(complex_).size())
    throw std::invalid_argument("bitset size does not match complex universe");
}

Result<Subset> Subset::from_names(const Complex& c,
                                  std::span<const std::string> names) {
  Subset out(c);
  for (const auto& id : names) {
    auto x = c.find(id);
    if (!x) return Result<Subset>::failure("unknown element id: " + id);
    out.insert(*x);
  }
  return out;
}

std::vector<ElementId> Subset::members() const {
  std::vector<ElementId> out;
  out.reserve(count());
  bits_.for_each([&](std::size_t i) { out.push_back(ElementId{static_cast<std::uint32_t>(i)}); });
  return out;
}

std::vector<std::string> Subset::member_names() const {
  std::vector<std::string> out;
  out.reserve(count());
  bits_.for_each([&](std::size_t i) {
    out.push_back(complex_.name(ElementId{static_cast<std::uint32_t>(i)}));
  });
  return out;
}

unsigned Subset::top_dim() const {
  unsigned best = 0;
  bits_.for_each([&](std::size_t i) {
    best = std::max(best, complex_.dim(ElementId{static_cast<std::uint32_t>(i)}));
  });
  return best;
}

Subset Subset::sub(unsigned n) const {
  const auto& impl = impl_of(complex_);
  if (n >= impl.dim_masks.size()) return Subset(complex_);
  return Subset(complex_, bits_ & impl.dim_masks[n]);
}

Subset Subset::skeleton(unsigned n) const {
  const auto& impl = impl_of(complex_);
  Bitset mask(impl.size());
  for (unsigned k = 0; k <= n && k < impl.dim_masks.size(); ++k)
    mask |= impl.dim_masks[k];
  return Subset(complex_, bits_ & mask);
}

Subset Subset::skeleton_below(unsigned n) const {
  if (n == 0) return Subset(complex_);
  return skeleton(n - 1);
}

Subset& Subset::operator|=(const Subset& o) {
  require_same(complex_, o.complex_);
  bits_ |= o.bits_;
  return *this;
}

Subset& Subset::operator&=(const Subset& o) {
  require_same(complex_, o.complex_);
  bits_ &= o.bits_;
  return *this;
}

Subset& Subset::operator-=(const Subset& o) {
  require_same(complex_, o.complex_);
  bits_.subtract(o.bits_);
  return *this;
}

bool Subset::is_subset_of(const Subset& o) const {
  require_same(complex_, o.complex_);
  return bits_.is_subset_of(o.bits_);
}

bool Subset::intersects(const Subset& o) const {
  require_same(complex_, o.complex_);
  return bits_.intersects(o.bits_);
}

Subset Subset::transfer(const Complex& other) const {
  if (impl_of(other).size() != bits_.size())
    throw std::invalid_argument("cannot transfer subset: universes differ");
  return Subset(other, bits_);
}

Subset faces(const Subset& s, Sign sign) {
  Bitset bits(s.bits().size());
  s.bits().for_each([&](std::size_t i) {
    bits |= s.complex().raw_faces(ElementId{static_cast<std::uint32_t>(i)}, sign);
  });
  return Subset(s.complex(), std::move(bits));
}

Subset pure_faces(const Subset& s, Sign sign) {
  return faces(s, sign) - faces(s, opposite(sign));
}

bool perp(const Subset& s, const Subset& t) {
  require_same(s.complex(), t.complex());
  return !faces(s, Sign::minus).intersects(faces(t, Sign::minus)) &&
         !faces(s, Sign::plus).intersects(faces(t, Sign::plus));
}

bool is_well_formed(const Subset& s) {
  if (s.sub(0).count() > 1) return false;
  const Complex& c = s.complex();
  const unsigned top = s.empty() ? 0 : s.top_dim();
  for (unsigned n = 1; n <= top; ++n) {
    // Pairwise disjointness of the minus faces (and of the plus faces) of
    // same-dimension members, detected by overlap against a running union.
    Bitset seen_minus(s.bits().size());
    Bitset seen_plus(s.bits().size());
    bool branched = false;
    s.sub(n).bits().for_each([&](std::size_t i) {
      const ElementId x{static_cast<std::uint32_t>(i)};
      if (c.raw_faces(x, Sign::minus).intersects(seen_minus) ||
          c.raw_faces(x, Sign::plus).intersects(seen_plus))
        branched = true;
      seen_minus |= c.raw_faces(x, Sign::minus);
      seen_plus |= c.raw_faces(x, Sign::plus);
    });
    if (branched) return false;
  }
  return true;
}

bool triangle(const Subset& s, ElementId x, ElementId y) {
  if (x == y) return true;
  if (!s.contains(x) || !s.contains(y)) return false;
  const Complex& c = s.complex();
  Bitset visited(s.bits().size());
  std::vector<std::uint32_t> stack{x.value};
  visited.set(x.value);
  while (!stack.empty()) {
    const std::uint32_t cur = stack.back();
    stack.pop_back();
    if (cur == y.value) return true;
    Bitset next = c.lt_row(ElementId{cur}) & s.bits();
    next.subtract(visited);
    next.for_each([&](std::size_t i) {
      visited.set(i);
      stack.push_back(static_cast<std::uint32_t>(i));
    });
  }
  return false;
}

RestrictedClosure::RestrictedClosure(const Subset& s) : domain_(s) {
  const Complex& c = s.complex();
  const std::size_t n = s.bits().size();
  rows_.assign(n, Bitset(n));
  // Saturate reachability over < restricted to the domain.
  s.bits().for_each([&](std::size_t i) { rows_[i].set(i); });
  bool changed = true;
  while (changed) {
    changed = false;
    s.bits().for_each([&](std::size_t i) {
      Bitset next = rows_[i];
      rows_[i].for_each([&](std::size_t mid) {
        next |= c.lt_row(ElementId{static_cast<std::uint32_t>(mid)}) & s.bits();
      });
      if (!(next == rows_[i])) {
        rows_[i] = std::move(next);
        changed = true;
      }
    });
  }
}

bool RestrictedClosure::reaches(ElementId x, ElementId y) const {
  if (x == y) return true;
  if (!domain_.contains(x) || !domain_.contains(y)) return false;
  return rows_[x.value].test(y.value);
}

const Bitset& RestrictedClosure::row(ElementId x) const { return rows_[x.value]; }

bool is_segment(const Subset& r, const Subset& t, bool* r_outside_t) {
  require_same(r.complex(), t.complex());
  if (r_outside_t) *r_outside_t = !r.is_subset_of(t);
  const Subset rt = r & t;
  RestrictedClosure closure(t);
  // Union of everything reachable in t from a member of r.
  Bitset from_r(t.bits().size());
  rt.bits().for_each([&](std::size_t i) { from_r |= closure.row(ElementId{static_cast<std::uint32_t>(i)}); });
  bool ok = true;
  (t - r).bits().for_each([&](std::size_t i) {
    const ElementId y{static_cast<std::uint32_t>(i)};
    if (from_r.test(i) && closure.row(y).intersects(rt.bits())) ok = false;
  });
  return ok;
}

bool is_tight(const Subset& r) {
  const Subset pp = pure_faces(r, Sign::plus);
  if (pp.empty()) return true;
  const Complex& c = r.complex();
  for (std::uint32_t u = 0; u < c.size(); ++u) {
    if (!c.raw_faces(ElementId{u}, Sign::minus).intersects(pp.bits())) continue;
    if (c.triangle_row(ElementId{u}).intersects(r.bits())) return false;
  }
  return true;
}

Subset minimal_elements(const Subset& s) {
  RestrictedClosure closure(s);
  Subset out(s.complex());
  s.bits().for_each([&](std::size_t i) {
    const ElementId x{static_cast<std::uint32_t>(i)};
    bool minimal = true;
    s.bits().for_each([&](std::size_t j) {
      if (j != i && closure.row(ElementId{static_cast<std::uint32_t>(j)}).test(i))
        minimal = false;
    });
    if (minimal) out.insert(x);
  });
  return out;
}

Subset maximal_elements(const Subset& s) {
  RestrictedClosure closure(s);
  Subset out(s.complex());
  s.bits().for_each([&](std::size_t i) {
    const ElementId x{static_cast<std::uint32_t>(i)};
    Bitset beyond = closure.row(x);
    beyond.reset(i);
    if (beyond.none()) out.insert(x);
  });
  return out;
}

}  // namespace parity
