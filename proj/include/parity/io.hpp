#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

#include "parity/axioms.hpp"
#include "parity/cells.hpp"
#include "parity/core.hpp"
#include "parity/result.hpp"

namespace parity {

inline constexpr std::string_view kDocumentFormat = "parity-complex/1";

// On-disk shape of a complex. Canonical form sorts elements by (dim, id)
// and face lists by id, so serialization is byte-stable.
struct ComplexDocument {
  std::string format = std::string(kDocumentFormat);
  std::vector<ElementRecord> elements;
};

// JSON syntax and shape errors only; reference errors surface at build time.
Result<ComplexDocument> parse_document(std::string_view text);

// Duplicate ids and dangling face references are rejected here.
Result<Complex> build_complex(const ComplexDocument& doc);

enum class LoadErrorKind { none, syntax, validation };

struct LoadResult {
  std::optional<Complex> complex;
  LoadErrorKind error = LoadErrorKind::none;
  std::string message;
  // Populated when the pre-parity check failed.
  std::optional<AxiomReport> report;

  explicit operator bool() const { return complex.has_value(); }
};

// Parse, build, and gate through the pre-parity check.
LoadResult load_complex(std::string_view text);

ComplexDocument document_from(const Complex& c);
std::string serialize_complex(const Complex& c);

nlohmann::ordered_json report_json(const AxiomReport& report);
std::string report_text(const AxiomReport& report);

// Comma-joined member ids in id order.
std::string subset_csv(const Subset& s);
nlohmann::ordered_json cell_json(const Cell& c);

}  // namespace parity
