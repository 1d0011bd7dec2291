#include "workspace.hpp"

#include <fstream>

#include "quadrica/errors.hpp"

namespace quadrica::cli {

const Entry& Workspace::insert(const std::string& id, Entry e) {
  try {
    e.loaded = certify_document(e.doc, cfg_);
  } catch (const AxiomViolation&) {
    e.failure = std::current_exception();
  }
  auto [it, fresh] = entries_.insert_or_assign(id, std::move(e));
  (void)fresh;
  return it->second;
}

const Entry& Workspace::load_file(const std::string& id, const std::string& path) {
  return insert(id, Entry{parse_document(read_text_file(path)), Provenance::file, path, std::nullopt, nullptr});
}

const Entry& Workspace::add_builtin(const std::string& id, Document doc, std::string label) {
  return insert(id, Entry{std::move(doc), Provenance::builtin, std::move(label), std::nullopt, nullptr});
}

const Entry& Workspace::get(const std::string& id) const {
  auto it = entries_.find(id);
  if (it == entries_.end()) throw Error(ErrorKind::precondition_unmet, "no structure named " + id);
  return it->second;
}

const Loaded& Workspace::certified(const std::string& id) const {
  const Entry& e = get(id);
  if (!e.verified()) std::rethrow_exception(e.failure);
  return *e.loaded;
}

void Workspace::write(const std::string& id, const std::string& path) const {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw Error(ErrorKind::precondition_unmet, "cannot write " + path);
  out << serialize(get(id).doc);
}

std::vector<std::string> Workspace::ids() const {
  std::vector<std::string> out;
  for (const auto& [id, e] : entries_) out.push_back(id);
  return out;
}

}  // namespace quadrica::cli
