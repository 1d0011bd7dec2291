#include "quadrica/io.hpp"

#include <fstream>
#include <sstream>

#include "json.hpp"
#include "quadrica/errors.hpp"

namespace quadrica {

using nlohmann::json;

namespace {

[[noreturn]] void parse_fail(const std::string& what) { throw Error(ErrorKind::parse_error, what); }

// ---------------------------------------------------------------------
// Emission

void emit(std::ostringstream& out, const json& j, int indent) {
  const std::string pad(indent, ' ');
  if (j.is_object()) {
    if (j.empty()) {
      out << "{}";
      return;
    }
    out << "{\n";
    bool first = true;
    for (auto it = j.begin(); it != j.end(); ++it) {
      if (!first) out << ",\n";
      first = false;
      out << pad << "  " << json(it.key()).dump() << ": ";
      emit(out, it.value(), indent + 2);
    }
    out << "\n" << pad << "}";
    return;
  }
  if (j.is_array()) {
    bool flat = true;
    for (const auto& e : j) flat = flat && e.is_number();
    if (flat) {
      out << "[";
      for (std::size_t i = 0; i < j.size(); ++i) out << (i ? ", " : "") << j[i].dump();
      out << "]";
      return;
    }
    out << "[\n";
    for (std::size_t i = 0; i < j.size(); ++i) {
      out << pad << "  ";
      emit(out, j[i], indent + 2);
      out << (i + 1 < j.size() ? ",\n" : "\n");
    }
    out << pad << "]";
    return;
  }
  out << j.dump();
}

json group_json(const FiniteGroup& g) {
  return {{"add", g.add_table()}, {"order", g.order()}};
}

json ring_json(const SquareRing& sr) {
  const SquareRingParts& p = sr.parts();
  return {{"kind", "square_ring"},
          {"label", p.label},
          {"re", {{"add", p.re.additive().add_table()}, {"mul", p.re.mul_table()}, {"one", p.re.one()},
                  {"order", p.re.order()}}},
          {"ree", group_json(p.ree)},
          {"action", p.action},
          {"hopf", p.hopf},
          {"transfer", p.transfer},
          {"twist", p.twist}};
}

json module_json(const SquareRing& sr, const RawModule& m) {
  json j{{"kind", m.distinguished ? "cp_module" : "bhp_module"},
         {"ring", ring_json(sr)},
         {"group", group_json(m.group)},
         {"scal", m.scal},
         {"bracket", m.bracket},
         {"label", m.label}};
  if (m.distinguished) j["distinguished"] = m.distinguished->members();
  return j;
}

RawModule raw_of(const BhpModule& m, const CpModule* cp) {
  RawModule r{m.group(), m.parts().scal, m.parts().bracket, m.label(), std::nullopt};
  if (cp) r.distinguished = cp->distinguished();
  return r;
}

// ---------------------------------------------------------------------
// Parsing

const json& field(const json& j, const char* key) {
  if (!j.is_object() || !j.contains(key)) parse_fail(std::string("missing key \"") + key + "\"");
  return j.at(key);
}

std::vector<Elem> int_array(const json& j, const char* key, std::size_t size, std::size_t bound) {
  const json& a = field(j, key);
  if (!a.is_array()) parse_fail(std::string("\"") + key + "\" is not an array");
  if (a.size() != size)
    parse_fail(std::string("\"") + key + "\" has " + std::to_string(a.size()) + " entries, expected " +
               std::to_string(size));
  std::vector<Elem> out;
  out.reserve(size);
  for (const json& e : a) {
    if (!e.is_number_unsigned() || e.get<std::uint64_t>() >= bound)
      parse_fail(std::string("\"") + key + "\" has an entry out of range");
    out.push_back(static_cast<Elem>(e.get<std::uint64_t>()));
  }
  return out;
}

std::size_t positive(const json& j, const char* key) {
  const json& v = field(j, key);
  if (!v.is_number_unsigned() || v.get<std::uint64_t>() == 0 || v.get<std::uint64_t>() > 4096)
    parse_fail(std::string("\"") + key + "\" must be a positive order");
  return static_cast<std::size_t>(v.get<std::uint64_t>());
}

std::string text_field(const json& j, const char* key) {
  if (!j.contains(key)) return {};
  if (!j.at(key).is_string()) parse_fail(std::string("\"") + key + "\" is not a string");
  return j.at(key).get<std::string>();
}

/// Group with 0 as neutral; perm maps file indices to library indices.
FiniteGroup parse_group(const json& g, std::vector<Elem>& perm) {
  const std::size_t n = positive(g, "order");
  return build_group(int_array(g, "add", n * n, n), 4096, &perm);
}

struct ParsedRing {
  std::shared_ptr<const SquareRing> ring;
  std::vector<Elem> pe, px;
};

ParsedRing parse_ring(const json& j) {
  if (text_field(j, "kind") != "square_ring") parse_fail("expected a square_ring object");
  const json& re = field(j, "re");
  ParsedRing out;
  FiniteGroup add = parse_group(re, out.pe);
  FiniteGroup ree = parse_group(field(j, "ree"), out.px);
  const std::size_t e = add.order(), x = ree.order();
  const auto& pe = out.pe;
  const auto& px = out.px;
  const auto mul_in = int_array(re, "mul", e * e, e);
  const json& one_j = field(re, "one");
  if (!one_j.is_number_unsigned() || one_j.get<std::uint64_t>() >= e) parse_fail("\"one\" is out of range");
  const auto one = static_cast<Elem>(one_j.get<std::uint64_t>());
  const auto act_in = int_array(j, "action", e * e * x * e, x);
  const auto hopf_in = int_array(j, "hopf", e, x);
  const auto transfer_in = int_array(j, "transfer", x, e);
  const auto twist_in = int_array(j, "twist", x, x);

  std::vector<Elem> mul(e * e), act(act_in.size()), hopf(e), transfer(x), twist(x);
  for (Elem a = 0; a < e; ++a)
    for (Elem b = 0; b < e; ++b) mul[pe[a] * e + pe[b]] = pe[mul_in[a * e + b]];
  for (Elem r = 0; r < e; ++r)
    for (Elem s = 0; s < e; ++s)
      for (Elem y = 0; y < x; ++y)
        for (Elem t = 0; t < e; ++t)
          act[((pe[r] * e + pe[s]) * x + px[y]) * e + pe[t]] = px[act_in[((r * e + s) * x + y) * e + t]];
  for (Elem r = 0; r < e; ++r) hopf[pe[r]] = px[hopf_in[r]];
  for (Elem y = 0; y < x; ++y) {
    transfer[px[y]] = pe[transfer_in[y]];
    twist[px[y]] = px[twist_in[y]];
  }
  NearRing nr = build_near_ring(std::move(add), std::move(mul), pe[one], Distributivity::left_only);
  out.ring = std::make_shared<const SquareRing>(SquareRingParts{std::move(nr), std::move(ree), std::move(act),
                                                                std::move(hopf), std::move(transfer),
                                                                std::move(twist), text_field(j, "label")});
  return out;
}

RawModule parse_module(const json& j, const ParsedRing& ring, std::vector<Elem>& pm) {
  const std::string kind = text_field(j, "kind");
  if (kind != "bhp_module" && kind != "cp_module") parse_fail("expected a module object");
  RawModule m;
  m.group = parse_group(field(j, "group"), pm);
  m.label = text_field(j, "label");
  const std::size_t n = m.group.order(), e = ring.ring->re_order(), x = ring.ring->ree_order();
  const auto scal_in = int_array(j, "scal", n * e, n);
  const auto br_in = int_array(j, "bracket", n * n * x, n);
  m.scal.resize(scal_in.size());
  m.bracket.resize(br_in.size());
  for (Elem a = 0; a < n; ++a)
    for (Elem r = 0; r < e; ++r) m.scal[pm[a] * e + ring.pe[r]] = pm[scal_in[a * e + r]];
  for (Elem a = 0; a < n; ++a)
    for (Elem b = 0; b < n; ++b)
      for (Elem y = 0; y < x; ++y)
        m.bracket[(pm[a] * n + pm[b]) * x + ring.px[y]] = pm[br_in[(a * n + b) * x + y]];
  if (kind == "cp_module") {
    const json& d = field(j, "distinguished");
    if (!d.is_array()) parse_fail("\"distinguished\" is not an array");
    auto members = int_array(j, "distinguished", d.size(), n);
    for (Elem& v : members) v = pm[v];
    m.distinguished = Subset(n, std::move(members));
  }
  return m;
}

/// Parses the ring of every module and insists they coincide.
ParsedRing shared_ring(const std::vector<const json*>& modules) {
  ParsedRing first = parse_ring(field(*modules.front(), "ring"));
  for (std::size_t i = 1; i < modules.size(); ++i) {
    const ParsedRing other = parse_ring(field(*modules[i], "ring"));
    if (!other.ring->same_tables(*first.ring) || other.pe != first.pe || other.px != first.px)
      throw Error(ErrorKind::dimension_mismatch, "modules in one file must share their square ring");
  }
  return first;
}

}  // namespace

Document parse_document(std::string_view text) {
  if (text.find_first_not_of(" \t\r\n") == std::string_view::npos) parse_fail("empty input");
  json j;
  try {
    j = json::parse(text.begin(), text.end());
  } catch (const json::exception& e) {
    parse_fail(std::string("malformed input: ") + e.what());
  }
  Document doc;
  doc.kind = text_field(j, "kind");
  if (doc.kind == "square_ring") {
    doc.ring = parse_ring(j).ring;
  } else if (doc.kind == "bhp_module" || doc.kind == "cp_module") {
    const ParsedRing ring = parse_ring(field(j, "ring"));
    std::vector<Elem> pm;
    doc.ring = ring.ring;
    doc.modules.push_back(parse_module(j, ring, pm));
  } else if (doc.kind == "map" || doc.kind == "pair") {
    const bool map = doc.kind == "map";
    const json& a = field(j, map ? "domain" : "source");
    const json& b = field(j, map ? "codomain" : "target");
    const ParsedRing ring = shared_ring({&a, &b});
    doc.ring = ring.ring;
    std::vector<Elem> pa, pb;
    doc.modules.push_back(parse_module(a, ring, pa));
    doc.modules.push_back(parse_module(b, ring, pb));
    if (map) {
      const std::size_t m = doc.modules[0].group.order(), n = doc.modules[1].group.order();
      const auto in = int_array(j, "values", m, n);
      doc.values.resize(m);
      for (Elem v = 0; v < m; ++v) doc.values[pa[v]] = pb[in[v]];
    }
  } else {
    parse_fail("unknown or missing \"kind\"");
  }
  return doc;
}

std::string serialize(const Document& doc) {
  json j;
  if (!doc.ring) parse_fail("document has no ring");
  if (doc.kind == "square_ring") {
    j = ring_json(*doc.ring);
  } else if (doc.kind == "bhp_module" || doc.kind == "cp_module") {
    j = module_json(*doc.ring, doc.modules.at(0));
  } else if (doc.kind == "map") {
    j = {{"kind", "map"},
         {"domain", module_json(*doc.ring, doc.modules.at(0))},
         {"codomain", module_json(*doc.ring, doc.modules.at(1))},
         {"values", doc.values}};
  } else if (doc.kind == "pair") {
    j = {{"kind", "pair"},
         {"source", module_json(*doc.ring, doc.modules.at(0))},
         {"target", module_json(*doc.ring, doc.modules.at(1))}};
  } else {
    parse_fail("unknown document kind \"" + doc.kind + "\"");
  }
  std::ostringstream out;
  emit(out, j, 0);
  out << "\n";
  return out.str();
}

std::string read_text_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) parse_fail("cannot open " + path);
  std::ostringstream s;
  s << in.rdbuf();
  if (s.str().empty()) parse_fail(path + " is empty");
  return s.str();
}

Document document_of(const SquareRing& sr) {
  return Document{"square_ring", std::make_shared<const SquareRing>(sr), {}, {}};
}

Document document_of(const BhpModule& m) {
  return Document{"bhp_module", m.ring_ptr(), {raw_of(m, nullptr)}, {}};
}

Document document_of(const CpModule& m) {
  return Document{"cp_module", m.base().ring_ptr(), {raw_of(m.base(), &m)}, {}};
}

Document document_of(const MapTable& f, const CpModule* src, const CpModule* dst) {
  return Document{"map", f.dom->ring_ptr(), {raw_of(*f.dom, src), raw_of(*f.cod, dst)}, f.values};
}

Document document_of_pair(const CpModule& src, const CpModule& dst) {
  if (&src.base().ring() != &dst.base().ring() && !src.base().ring().same_tables(dst.base().ring()))
    throw Error(ErrorKind::dimension_mismatch, "source and target of a pair must share their square ring");
  return Document{"pair", src.base().ring_ptr(), {raw_of(src.base(), &src), raw_of(dst.base(), &dst)}, {}};
}

Loaded certify_document(const Document& doc, const Config& cfg) {
  Loaded out;
  out.ring = doc.ring->certified() ? doc.ring : certify(*doc.ring, cfg);
  for (const RawModule& m : doc.modules) {
    ModulePtr base = certify(BhpModule(BhpModuleParts{out.ring, m.group, m.scal, m.bracket, m.label}), cfg);
    out.modules.push_back(base);
    if (m.distinguished)
      out.cp.emplace_back(certify(CpModule(base, *m.distinguished), cfg));
    else
      out.cp.emplace_back(std::nullopt);
  }
  if (doc.kind == "map") out.map = make_map(out.modules.at(0), out.modules.at(1), doc.values);
  return out;
}

std::string verdict_report(const std::string& title, const Verdict& v, Format format) {
  std::size_t failed_laws = 0;
  for (const CheckedLaw& law : v.checked()) failed_laws += v.failed(law.id) ? 1 : 0;
  if (format == Format::structured) {
    json laws = json::array();
    for (const CheckedLaw& law : v.checked()) {
      json entry{{"law", law.id}, {"statement", law.statement}, {"passed", !v.failed(law.id)}};
      json witnesses = json::array();
      for (const Witness& w : v.failures())
        if (w.law == law.id) witnesses.push_back(w.tuple);
      if (!witnesses.empty()) entry["witnesses"] = witnesses;
      laws.push_back(entry);
    }
    json j{{"title", title}, {"passed", v.passed()}, {"laws", laws}, {"failed", failed_laws}};
    std::ostringstream out;
    emit(out, j, 0);
    out << "\n";
    return out.str();
  }
  std::ostringstream out;
  out << title << ": " << (v.passed() ? "PASS" : "FAIL") << " (" << v.checked().size() << " laws, " << failed_laws
      << " failed)\n";
  for (const CheckedLaw& law : v.checked()) {
    const Witness* w = v.first_failure(law.id);
    out << "  " << (w ? "FAIL " : "pass ") << law.id << "  " << law.statement;
    if (w) {
      out << "  witness (";
      for (std::size_t i = 0; i < w->tuple.size(); ++i) out << (i ? ", " : "") << w->tuple[i];
      out << ")";
    }
    out << "\n";
  }
  return out.str();
}

}  // namespace quadrica
