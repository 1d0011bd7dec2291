#include <algorithm>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "CLI11.hpp"
#include "cli.hpp"
#include "json.hpp"
#include "quadrica/quadrica.hpp"
#include "workspace.hpp"

namespace quadrica::cli {

namespace {

using nlohmann::json;

/// Collects report sections; structured output is one JSON document.
class Reporter {
 public:
  Reporter(Format f, std::ostream& out) : format_(f), out_(out) {}

  void verdict(const std::string& title, const Verdict& v) {
    const std::string text = verdict_report(title, v, format_);
    if (format_ == Format::human)
      out_ << text;
    else
      doc_["reports"].push_back(json::parse(text));
  }

  void fact(const std::string& key, const json& value) {
    if (format_ == Format::human)
      out_ << key << ": " << (value.is_string() ? value.get<std::string>() : value.dump()) << "\n";
    else
      doc_["facts"][key] = value;
  }

  void finish(int code) {
    if (format_ == Format::structured) {
      doc_["exit_code"] = code;
      out_ << doc_.dump(2) << "\n";
    }
  }

 private:
  Format format_;
  std::ostream& out_;
  json doc_ = json::object();
};

struct Options {
  std::string format = "human";
  unsigned jobs = 1;
  std::size_t cap_group = 64;
  std::size_t cap_ring = 16;
  std::string profile = "debug";
  std::uint64_t limit = 1'000'000;

  Config config() const {
    Config c;
    c.jobs = std::max(1u, jobs);
    c.cap_group = cap_group;
    c.cap_ring = cap_ring;
    c.profile = profile == "release" ? Profile::release : Profile::debug;
    c.enum_limit = limit;
    return c;
  }
  Format fmt() const { return format == "structured" ? Format::structured : Format::human; }
};

void check_caps(const Document& doc, const Config& cfg) {
  const std::size_t ring = std::max(doc.ring->re_order(), doc.ring->ree_order());
  if (ring > cfg.cap_ring)
    throw Error(ErrorKind::cap_exceeded, "square ring component of order " + std::to_string(ring) +
                                             " exceeds cap " + std::to_string(cfg.cap_ring));
  for (const RawModule& m : doc.modules)
    if (m.group.order() > cfg.cap_group)
      throw Error(ErrorKind::cap_exceeded, "module of order " + std::to_string(m.group.order()) +
                                               " exceeds cap " + std::to_string(cfg.cap_group));
}

const char* module_role(const Document& doc, std::size_t i) {
  if (doc.kind == "map") return i == 0 ? "domain" : "codomain";
  if (doc.kind == "pair") return i == 0 ? "source" : "target";
  return "module";
}

int cmd_verify(const std::string& path, const Config& cfg, Reporter& rep) {
  const Document doc = parse_document(read_text_file(path));
  check_caps(doc, cfg);
  const Verdict rv = verify_square_ring(*doc.ring, cfg);
  rep.verdict("square ring " + doc.ring->label() + " (AC0-AC8)", rv);
  if (!rv.passed()) return kFailed;
  RingPtr ring = certify(*doc.ring, cfg);
  bool ok = true;
  for (std::size_t i = 0; i < doc.modules.size(); ++i) {
    const RawModule& raw = doc.modules[i];
    const std::string name = std::string(module_role(doc, i)) + " " + raw.label;
    BhpModule m(BhpModuleParts{ring, raw.group, raw.scal, raw.bracket, raw.label});
    const Verdict mv = verify_bhp_module(m, cfg);
    rep.verdict(name + " (MC1-MC7)", mv);
    if (!mv.passed()) {
      ok = false;
      continue;
    }
    ModulePtr base = certify(std::move(m), cfg);
    rep.verdict(name + " (elementary properties)", elementary_properties(*base, cfg));
    if (raw.distinguished) {
      const Verdict cv = verify_cp_module(CpModule(base, *raw.distinguished), cfg);
      rep.verdict(name + " (MC0, MC7a, MC7b)", cv);
      ok = ok && cv.passed();
    }
  }
  return ok ? kOk : kFailed;
}

void report_graded(const InducedGraded& g, Reporter& rep) {
  rep.fact("Gr_1(f) on M/A", g.deg1);
  rep.fact("Gr_2(f) on A", g.deg2);
}

int cmd_quad(const std::string& path, const Config& cfg, Reporter& rep) {
  Workspace ws(cfg);
  ws.load_file("f", path);
  const Loaded& L = ws.certified("f");
  if (!L.map) throw Error(ErrorKind::precondition_unmet, path + " is not a map file");
  const MapTable& f = *L.map;
  const QuadCertificate bhp = is_bhp_quadratic(f, cfg);
  rep.verdict("BHP-quadratic (relations (a)-(h))", bhp.verdict);
  bool quadratic = bhp.quadratic();
  if (bhp.quadratic()) rep.verdict("three-defects lemma", three_defects_check(f, cfg));
  if (L.cp[0] && L.cp[1]) {
    const QuadCertificate cp = is_cp_quadratic(f, *L.cp[0], *L.cp[1], cfg);
    rep.verdict("CP-quadratic (reduced conditions)", cp.verdict);
    if (cp.graded) report_graded(*cp.graded, rep);
    quadratic = cp.quadratic();
  }
  rep.fact("result", quadratic ? "quadratic" : "not quadratic");
  return quadratic ? kOk : kFailed;
}

std::pair<CpModule, CpModule> load_pair(Workspace& ws, const std::string& path) {
  ws.load_file("pair", path);
  const Loaded& L = ws.certified("pair");
  if (ws.get("pair").doc.kind != "pair" || !L.cp[0] || !L.cp[1])
    throw Error(ErrorKind::precondition_unmet, path + " is not a pair of CP modules");
  return {*L.cp[0], *L.cp[1]};
}

int cmd_enum(const std::string& path, const Config& cfg, Reporter& rep) {
  Workspace ws(cfg);
  const auto [src, dst] = load_pair(ws, path);
  const auto maps = enumerate_cp_quadratic(src, dst, cfg.enum_limit, cfg);
  rep.fact("count", maps.size());
  json all = json::array();
  for (const MapTable& f : maps) all.push_back(f.values);
  rep.fact("maps", all);
  return kOk;
}

void emit_document(const Document& doc, const std::string& out_path, std::ostream& out) {
  if (out_path.empty()) {
    out << serialize(doc);
    return;
  }
  std::ofstream file(out_path, std::ios::binary);
  if (!file) throw Error(ErrorKind::precondition_unmet, "cannot write " + out_path);
  file << serialize(doc);
}

int cmd_hom(const std::string& path, const std::string& out_path, const Config& cfg, Reporter& rep,
            std::ostream& out) {
  Workspace ws(cfg);
  const auto [src, dst] = load_pair(ws, path);
  const HomModule hom = hom_module(src, dst, cfg);
  const Verdict v = verify_cp_module(hom.module, cfg);
  if (!out_path.empty()) {
    rep.fact("order", hom.maps.size());
    rep.fact("distinguished", hom.module.distinguished().size());
    rep.verdict("Hom module (MC0, MC7a, MC7b)", v);
  }
  emit_document(document_of(hom.module), out_path, out);
  return v.passed() ? kOk : kFailed;
}

int cmd_compose(const std::string& f_path, const std::string& g_path, const std::string& out_path,
                const Config& cfg, Reporter& rep, std::ostream& out) {
  Workspace ws(cfg);
  ws.load_file("f", f_path);
  ws.load_file("g", g_path);
  const Loaded& F = ws.certified("f");
  const Loaded& G = ws.certified("g");
  if (!F.map || !G.map) throw Error(ErrorKind::precondition_unmet, "compose needs two map files");
  if (!F.cp[0] || !F.cp[1] || !G.cp[0] || !G.cp[1])
    throw Error(ErrorKind::precondition_unmet, "compose needs maps between CP modules");
  if (!F.cp[1]->same_tables(*G.cp[0]))
    throw Error(ErrorKind::not_composable, "codomain of f differs from the domain of g");
  const Composite c = compose_quadratic(*G.map, *F.map, *F.cp[0], *G.cp[0], *G.cp[1], cfg);
  if (!out_path.empty()) {
    rep.verdict("composite defect formulas", c.formulas);
    rep.verdict("composite CP-quadratic", c.certificate.verdict);
  }
  emit_document(document_of(c.map, &*F.cp[0], &*G.cp[1]), out_path, out);
  return kOk;
}

int cmd_gr(const std::string& path, const std::string& mode, const Config& cfg, Reporter& rep) {
  Workspace ws(cfg);
  ws.load_file("m", path);
  const Loaded& L = ws.certified("m");
  if (L.modules.size() != 1) throw Error(ErrorKind::precondition_unmet, path + " is not a module file");
  GradedAlgebra2 g;
  if (L.cp[0])
    g = gr(*L.cp[0], cfg);
  else if (mode == "z")
    g = gr_z(L.modules[0], cfg);
  else
    g = gr_gamma(L.modules[0], cfg);
  rep.fact("R-bar order", g.operad.arity1.ring.order());
  rep.fact("degree 1 order", g.deg1.group.order());
  rep.fact("degree 2 order", g.deg2.group.order());
  rep.fact("nonzero pairings",
           static_cast<std::size_t>(std::count_if(g.pairing.begin(), g.pairing.end(), [](Elem e) { return e != 0; })));
  const Verdict v = graded_verdict(g);
  rep.verdict("graded algebra over OP(R)", v);
  return v.passed() ? kOk : kFailed;
}

void write_doc(const std::filesystem::path& dir, const char* name, const Document& doc, Reporter& rep) {
  const auto path = dir / name;
  std::ofstream file(path, std::ios::binary);
  if (!file) throw Error(ErrorKind::precondition_unmet, "cannot write " + path.string());
  file << serialize(doc);
  rep.fact("wrote", path.string());
}

int cmd_example(const std::string& kind, std::size_t n, Elem eps, const std::string& dir, const Config& cfg,
                Reporter& rep) {
  const auto k = parse_example_kind(kind);
  if (!k) throw Error(ErrorKind::precondition_unmet, "unknown example kind " + kind);
  if (n == 0) throw Error(ErrorKind::precondition_unmet, "the modulus must be positive");
  const ExampleSpec spec{*k, zmod(n), eps};
  RingPtr ring = build_example(spec, cfg);
  ModulePtr regular = regular_module(ring, cfg);
  CpModule rank1 = rank_one_pair(ring, cfg);
  ModulePtr ree = ree_module(ring, cfg);
  CpModule ree_full = certify(CpModule(ree, Subset::full(ree->order())), cfg);

  std::vector<Elem> square(regular->order()), hopf(regular->order());
  for (Elem r = 0; r < regular->order(); ++r) {
    square[r] = ring->mul(r, r);
    hopf[r] = ring->hopf(r);
  }
  const std::filesystem::path out(dir);
  std::filesystem::create_directories(out);
  write_doc(out, "ring.sqr", document_of(*ring), rep);
  write_doc(out, "regular.mod", document_of(*regular), rep);
  write_doc(out, "rank1.cpm", document_of(rank1), rep);
  write_doc(out, "rank1.pair", document_of_pair(rank1, rank1), rep);
  write_doc(out, "square_map.map", document_of(make_map(regular, regular, square), &rank1, &rank1), rep);
  write_doc(out, "hopf_map.map", document_of(make_map(regular, ree, hopf), &rank1, &ree_full), rep);
  return kOk;
}

int cmd_census(std::size_t from, std::size_t to, Config cfg, Reporter& rep) {
  // Gamma over Z/n has |R_e| = n^2.
  cfg.cap_ring = std::max(cfg.cap_ring, to * to);
  std::vector<ExampleSpec> specs;
  for (std::size_t n = from; n <= to; ++n)
    for (Elem e : valid_epsilons(zmod(n))) specs.push_back({ExampleKind::gamma, zmod(n), e});
  bool all = true;
  json rows = json::array();
  for (const CensusRow& row : commutativity_census(specs, cfg)) {
    all = all && row.agrees;
    rows.push_back({{"ring", row.label}, {"commutative", row.commutative}, {"I2 = 2R", row.i2_is_2r.value_or(false)},
                    {"agrees", row.agrees}});
  }
  rep.fact("census", rows);
  rep.fact("result", all ? "criterion agrees on every ring" : "criterion disagrees");
  return all ? kOk : kFailed;
}

int exit_code_for(ErrorKind k) {
  switch (k) {
    case ErrorKind::parse_error: return kParse;
    case ErrorKind::cap_exceeded:
    case ErrorKind::search_space_too_large: return kCaps;
    case ErrorKind::not_composable:
    case ErrorKind::non_commutative_ring:
    case ErrorKind::precondition_unmet:
    case ErrorKind::dimension_mismatch:
    case ErrorKind::invalid_epsilon: return kUsage;
    default: return kFailed;
  }
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"quadrica: square rings and the quadratic maps of their modules"};
  app.require_subcommand(1);
  Options o;
  app.add_option("--format", o.format, "Report format")->check(CLI::IsMember({"human", "structured"}));
  app.add_option("--jobs", o.jobs, "Worker threads")->check(CLI::PositiveNumber);
  app.add_option("--cap-group", o.cap_group, "Largest module carrier");
  app.add_option("--cap-ring", o.cap_ring, "Largest square-ring component");
  app.add_option("--profile", o.profile, "debug runs every cross-check")->check(CLI::IsMember({"debug", "release"}));
  app.add_option("--limit", o.limit, "Enumeration bound |N|^(|M|-1)");
  app.fallthrough();

  std::string path, path2, out_path, out_dir = ".", kind, mode = "gamma";
  std::size_t modulus = 0, from = 2, to = 6;
  Elem eps = 0;
  std::string command;

  auto* verify = app.add_subcommand("verify", "Check every axiom of a structure file");
  verify->add_option("file", path)->required();
  auto* quad = app.add_subcommand("quad", "Decide whether a map is quadratic");
  quad->add_option("map", path)->required();
  auto* en = app.add_subcommand("enum", "List the CP-quadratic maps of a pair");
  en->add_option("pair", path)->required();
  auto* hom = app.add_subcommand("hom", "Build the Hom CP-module of a pair");
  hom->add_option("pair", path)->required();
  hom->add_option("--out", out_path, "Write the module here");
  auto* compose = app.add_subcommand("compose", "Compose two CP-quadratic maps, g after f");
  compose->add_option("f", path)->required();
  compose->add_option("g", path2)->required();
  compose->add_option("--out", out_path, "Write the composite here");
  auto* grc = app.add_subcommand("gr", "Associated graded algebra of a module");
  grc->add_option("module", path)->required();
  grc->add_option("--mode", mode, "gamma or z for BHP modules")->check(CLI::IsMember({"gamma", "z"}));
  auto* example = app.add_subcommand("example", "Write fixtures for an example square ring");
  example->add_option("kind", kind)->required();
  example->add_option("n", modulus)->required();
  example->add_option("epsilon", eps);
  example->add_option("--out-dir", out_dir, "Output directory");
  auto* census = app.add_subcommand("census", "Commutativity of the gamma family against I2 = 2R");
  census->add_option("--from", from)->check(CLI::PositiveNumber);
  census->add_option("--to", to)->check(CLI::PositiveNumber);
  for (auto* s : app.get_subcommands({})) s->fallthrough();

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::ParseError& e) {
    app.exit(e, out, err);
    return kUsage;
  }

  const Config cfg = o.config();
  Reporter rep(o.fmt(), out);
  int code = kOk;
  try {
    if (*verify) code = cmd_verify(path, cfg, rep);
    else if (*quad) code = cmd_quad(path, cfg, rep);
    else if (*en) code = cmd_enum(path, cfg, rep);
    else if (*hom) code = cmd_hom(path, out_path, cfg, rep, out);
    else if (*compose) code = cmd_compose(path, path2, out_path, cfg, rep, out);
    else if (*grc) code = cmd_gr(path, mode, cfg, rep);
    else if (*example) code = cmd_example(kind, modulus, eps, out_dir, cfg, rep);
    else if (*census) code = cmd_census(from, to, cfg, rep);
  } catch (const AxiomViolation& e) {
    err << "error: " << to_string(e.kind()) << ": " << e.what() << "\n";
    rep.verdict(e.what(), e.verdict());
    code = kFailed;
  } catch (const Error& e) {
    err << "error: " << to_string(e.kind()) << ": " << e.what();
    if (!e.witness().empty()) {
      err << " witness (";
      for (std::size_t i = 0; i < e.witness().size(); ++i) err << (i ? ", " : "") << e.witness()[i];
      err << ")";
    }
    err << "\n";
    code = exit_code_for(e.kind());
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    code = kFailed;
  }
  rep.finish(code);
  return code;
}

}  // namespace quadrica::cli
