#pragma once

#include <exception>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "quadrica/config.hpp"
#include "quadrica/io.hpp"

namespace quadrica::cli {

enum class Provenance { builtin, file };

struct Entry {
  Document doc;
  Provenance provenance = Provenance::file;
  std::string origin;  ///< path, or the example label for built-ins
  std::optional<Loaded> loaded;
  std::exception_ptr failure;  ///< why certification failed, if it did

  bool verified() const noexcept { return loaded.has_value(); }
};

/// Named structures for one CLI invocation. Every entry is either certified
/// or tagged unverified together with the error that prevented it.
class Workspace {
 public:
  explicit Workspace(Config cfg) : cfg_(cfg) {}

  const Entry& load_file(const std::string& id, const std::string& path);
  const Entry& add_builtin(const std::string& id, Document doc, std::string label);

  const Entry& get(const std::string& id) const;
  /// The certified view; rethrows the stored failure for unverified entries.
  const Loaded& certified(const std::string& id) const;

  /// Writes the canonical form of an entry.
  void write(const std::string& id, const std::string& path) const;
  std::vector<std::string> ids() const;

 private:
  const Entry& insert(const std::string& id, Entry e);

  Config cfg_;
  std::map<std::string, Entry> entries_;
};

}  // namespace quadrica::cli
