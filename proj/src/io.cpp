#include "parity/io.hpp"

#include <algorithm>

namespace parity {

using nlohmann::json;
using nlohmann::ordered_json;

namespace {

Result<ComplexDocument> shape_error(const std::string& where, const std::string& what) {
  return Result<ComplexDocument>::failure(where + ": " + what);
}

Result<std::vector<std::string>> parse_face_list(const json& value,
                                                 const std::string& where) {
  std::vector<std::string> out;
  if (!value.is_array())
    return Result<std::vector<std::string>>::failure(where + ": expected an array of ids");
  for (const auto& entry : value) {
    if (!entry.is_string())
      return Result<std::vector<std::string>>::failure(where + ": face ids must be strings");
    out.push_back(entry.get<std::string>());
  }
  return out;
}

}  // namespace

Result<ComplexDocument> parse_document(std::string_view text) {
  json doc;
  try {
    doc = json::parse(text);
  } catch (const json::parse_error& e) {
    return Result<ComplexDocument>::failure(std::string("invalid JSON: ") + e.what());
  }
  if (!doc.is_object()) return shape_error("document", "expected a JSON object");
  ComplexDocument out;
  if (doc.contains("format")) {
    if (!doc["format"].is_string())
      return shape_error("format", "expected a string");
    out.format = doc["format"].get<std::string>();
    if (out.format != kDocumentFormat)
      return shape_error("format", "unsupported format: " + out.format);
  }
  if (!doc.contains("elements") || !doc["elements"].is_array())
    return shape_error("elements", "expected an array");
  std::size_t index = 0;
  for (const auto& entry : doc["elements"]) {
    const std::string where = "elements[" + std::to_string(index++) + "]";
    if (!entry.is_object()) return shape_error(where, "expected an object");
    if (!entry.contains("id") || !entry["id"].is_string())
      return shape_error(where, "missing string field 'id'");
    if (!entry.contains("dim") || !entry["dim"].is_number_unsigned())
      return shape_error(where, "missing non-negative integer field 'dim'");
    ElementRecord rec;
    rec.id = entry["id"].get<std::string>();
    rec.dim = entry["dim"].get<unsigned>();
    if (entry.contains("minus")) {
      auto list = parse_face_list(entry["minus"], where + ".minus");
      if (!list) return Result<ComplexDocument>::failure(list.error());
      rec.minus = std::move(*list);
    }
    if (entry.contains("plus")) {
      auto list = parse_face_list(entry["plus"], where + ".plus");
      if (!list) return Result<ComplexDocument>::failure(list.error());
      rec.plus = std::move(*list);
    }
    out.elements.push_back(std::move(rec));
  }
  return out;
}

Result<Complex> build_complex(const ComplexDocument& doc) {
  return Complex::build(doc.elements);
}

LoadResult load_complex(std::string_view text) {
  LoadResult out;
  auto doc = parse_document(text);
  if (!doc) {
    out.error = LoadErrorKind::syntax;
    out.message = doc.error();
    return out;
  }
  auto complex = build_complex(*doc);
  if (!complex) {
    out.error = LoadErrorKind::validation;
    out.message = complex.error();
    return out;
  }
  AxiomReport pre = check_pre_parity(*complex);
  if (!pre.pass) {
    out.error = LoadErrorKind::validation;
    out.message = "complex fails the pre-parity conditions";
    out.report = std::move(pre);
    return out;
  }
  out.complex = std::move(*complex);
  return out;
}

ComplexDocument document_from(const Complex& c) {
  ComplexDocument doc;
  for (ElementId x : c.elements()) {
    ElementRecord rec;
    rec.id = c.name(x);
    rec.dim = c.dim(x);
    rec.minus = c.faces_of(x, Sign::minus).member_names();
    rec.plus = c.faces_of(x, Sign::plus).member_names();
    std::sort(rec.minus.begin(), rec.minus.end());
    std::sort(rec.plus.begin(), rec.plus.end());
    doc.elements.push_back(std::move(rec));
  }
  return doc;
}

std::string serialize_complex(const Complex& c) {
  const ComplexDocument doc = document_from(c);
  ordered_json out;
  out["format"] = doc.format;
  out["elements"] = ordered_json::array();
  for (const auto& rec : doc.elements) {
    ordered_json e;
    e["id"] = rec.id;
    e["dim"] = rec.dim;
    e["minus"] = rec.minus;
    e["plus"] = rec.plus;
    out["elements"].push_back(std::move(e));
  }
  return out.dump(2) + "\n";
}

nlohmann::ordered_json report_json(const AxiomReport& report) {
  ordered_json out;
  out["axiom"] = std::string(axiom_name(report.tag));
  out["pass"] = report.pass;
  out["witnesses"] = ordered_json::array();
  for (const auto& w : report.witnesses) {
    ordered_json entry;
    entry["elements"] = w.elements;
    entry["detail"] = w.detail;
    if (!w.lhs.empty() || !w.rhs.empty()) {
      entry["lhs"] = w.lhs;
      entry["rhs"] = w.rhs;
    }
    out["witnesses"].push_back(std::move(entry));
  }
  return out;
}

namespace {

std::string join(const std::vector<std::string>& items) {
  std::string out;
  for (std::size_t i = 0; i < items.size(); ++i) {
    if (i) out += ",";
    out += items[i];
  }
  return out;
}

}  // namespace

std::string report_text(const AxiomReport& report) {
  std::string out(axiom_name(report.tag));
  if (report.pass) return out + ": pass";
  out += ": FAIL (" + std::to_string(report.witnesses.size()) + " witness" +
         (report.witnesses.size() == 1 ? "" : "es") + ")";
  for (const auto& w : report.witnesses) {
    out += "\n  [" + join(w.elements) + "] " + w.detail;
    if (!w.lhs.empty() || !w.rhs.empty())
      out += " lhs={" + join(w.lhs) + "} rhs={" + join(w.rhs) + "}";
  }
  return out;
}

std::string subset_csv(const Subset& s) { return join(s.member_names()); }

nlohmann::ordered_json cell_json(const Cell& c) {
  ordered_json out;
  out["m"] = c.m().member_names();
  out["p"] = c.p().member_names();
  return out;
}

}  // namespace parity
