#include "parity/generators.hpp"

#include <string>
#include <vector>

namespace parity {

std::optional<Family> family_from_name(std::string_view name) {
  if (name == "simplex") return Family::simplex;
  if (name == "cube") return Family::cube;
  if (name == "glob") return Family::glob;
  return std::nullopt;
}

std::string_view family_name(Family f) {
  switch (f) {
    case Family::simplex: return "simplex";
    case Family::cube: return "cube";
    case Family::glob: return "glob";
  }
  return "?";
}

namespace {

Result<Complex> over_cap(std::string_view family, unsigned n, unsigned cap) {
  return Result<Complex>::failure(std::string(family) + "(" + std::to_string(n) +
                                  ") exceeds the size cap of " + std::to_string(cap));
}

std::string vertex_string(const std::vector<unsigned>& vs) {
  std::string out;
  for (unsigned v : vs) out += static_cast<char>('0' + v);
  return out;
}

}  // namespace

Result<Complex> simplex(unsigned n) {
  if (n > kSimplexCap) return over_cap("simplex", n, kSimplexCap);
  std::vector<ElementRecord> records;
  const unsigned vertex_count = n + 1;
  for (std::uint32_t mask = 1; mask < (std::uint32_t{1} << vertex_count); ++mask) {
    std::vector<unsigned> verts;
    for (unsigned v = 0; v < vertex_count; ++v)
      if (mask & (std::uint32_t{1} << v)) verts.push_back(v);
    ElementRecord rec;
    rec.id = vertex_string(verts);
    rec.dim = static_cast<unsigned>(verts.size()) - 1;
    for (unsigned i = 0; i < verts.size(); ++i) {
      std::vector<unsigned> face = verts;
      face.erase(face.begin() + i);
      if (face.empty()) continue;
      (i % 2 == 1 ? rec.minus : rec.plus).push_back(vertex_string(face));
    }
    records.push_back(std::move(rec));
  }
  return Complex::build(std::move(records));
}

Result<Complex> cube(unsigned n) {
  if (n > kCubeCap) return over_cap("cube", n, kCubeCap);
  std::vector<ElementRecord> records;
  // All length-n strings over {-, o, +}.
  std::vector<std::string> frontier{""};
  for (unsigned k = 0; k < n; ++k) {
    std::vector<std::string> next;
    next.reserve(frontier.size() * 3);
    for (const auto& w : frontier)
      for (char ch : {'-', 'o', '+'}) next.push_back(w + ch);
    frontier = std::move(next);
  }
  for (const auto& w : frontier) {
    ElementRecord rec;
    rec.id = w;
    unsigned dim = 0;
    for (char ch : w)
      if (ch == 'o') ++dim;
    rec.dim = dim;
    unsigned seen = 0;
    for (std::size_t pos = 0; pos < w.size(); ++pos) {
      if (w[pos] != 'o') continue;
      ++seen;  // 1-based index of this o among the o's
      std::string lo = w, hi = w;
      lo[pos] = (seen % 2 == 1) ? '-' : '+';
      hi[pos] = (seen % 2 == 1) ? '+' : '-';
      rec.minus.push_back(std::move(lo));
      rec.plus.push_back(std::move(hi));
    }
    records.push_back(std::move(rec));
  }
  return Complex::build(std::move(records));
}

Result<Complex> glob(unsigned n) {
  if (n > kGlobCap) return over_cap("glob", n, kGlobCap);
  std::vector<ElementRecord> records;
  for (unsigned k = 0; k <= n; ++k) {
    for (char side : {'m', 'p'}) {
      ElementRecord rec;
      rec.id = side + std::to_string(k);
      rec.dim = k;
      if (k > 0) {
        rec.minus.push_back("m" + std::to_string(k - 1));
        rec.plus.push_back("p" + std::to_string(k - 1));
      }
      records.push_back(std::move(rec));
    }
  }
  return Complex::build(std::move(records));
}

Result<Complex> generate(Family family, unsigned n) {
  switch (family) {
    case Family::simplex: return simplex(n);
    case Family::cube: return cube(n);
    case Family::glob: return glob(n);
  }
  return Result<Complex>::failure("unknown generator family");
}

}  // namespace parity
