#pragma once

// Canonical text form of square rings, modules, maps and pairs: JSON with
// sorted keys, two-space indentation and each integer array on one line.

#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "quadrica/config.hpp"
#include "quadrica/module.hpp"
#include "quadrica/square_ring.hpp"
#include "quadrica/verdict.hpp"

namespace quadrica {

/// Module tables before certification.
struct RawModule {
  FiniteGroup group;
  std::vector<Elem> scal;
  std::vector<Elem> bracket;
  std::string label;
  std::optional<Subset> distinguished;  ///< present for CP modules
};

/// One file. kind is square_ring, bhp_module, cp_module, map or pair.
/// Modules share one ring; a map has modules {domain, codomain} and a pair
/// has {source, target}.
struct Document {
  std::string kind;
  std::shared_ptr<const SquareRing> ring;  ///< uncertified after parsing
  std::vector<RawModule> modules;
  std::vector<Elem> values;  ///< map only
};

/// Parses and renumbers every carrier so that its neutral element is 0.
/// Throws ParseError on malformed input, or NotAGroup / NotARing /
/// DimensionMismatch when the tables are not even well-formed structures.
Document parse_document(std::string_view text);
std::string serialize(const Document& doc);

/// Reads a whole file; ParseError if it cannot be opened or is empty.
std::string read_text_file(const std::string& path);

Document document_of(const SquareRing& sr);
Document document_of(const BhpModule& m);
Document document_of(const CpModule& m);
/// Endpoints carry their distinguished subgroups when given.
Document document_of(const MapTable& f, const CpModule* src = nullptr, const CpModule* dst = nullptr);
/// DimensionMismatch when the endpoints live over different square rings.
Document document_of_pair(const CpModule& src, const CpModule& dst);

/// Certified view of a document; certification failures propagate as
/// AxiomViolation.
struct Loaded {
  RingPtr ring;
  std::vector<ModulePtr> modules;
  std::vector<std::optional<CpModule>> cp;  ///< parallel to modules
  std::optional<MapTable> map;
};
Loaded certify_document(const Document& doc, const Config& cfg = {});

enum class Format { human, structured };

/// A per-law listing: every checked law with PASS or FAIL and its witness.
std::string verdict_report(const std::string& title, const Verdict& v, Format format);

}  // namespace quadrica
