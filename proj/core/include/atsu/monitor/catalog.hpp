#pragma once

#include <filesystem>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>

namespace atsu::monitor {

enum class CatalogKind { Alert, Alarm };

class CatalogError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class UnknownId : public std::out_of_range {
 public:
  UnknownId(CatalogKind kind, int id);
};

struct CatalogEntry {
  int id;
  std::string code;  // "SA-07", "AL-02"
  std::string description;
};

// Service-alert (35) and alarm (6) descriptions.
//
// File format, one entry per line, '#' starts a comment:
//
//   [alerts]
//   SA-01 = Reference receiver 1 excluded
//   ...
//   [alarms]
//   AL-01 = ...
//
// Every id must appear exactly once; descriptions must be non-empty.
class Catalog {
 public:
  static Catalog parse(std::string_view text);
  static Catalog load(const std::filesystem::path& path);
  // Shipped defaults, identical to data/catalog.ini.
  static const Catalog& builtin();
  static std::string_view builtin_text();

  static std::string code_for(CatalogKind kind, int id);

  const std::map<int, CatalogEntry>& entries(CatalogKind kind) const {
    return kind == CatalogKind::Alert ? alerts_ : alarms_;
  }
  const CatalogEntry* find(CatalogKind kind, int id) const;
  // Throws UnknownId.
  const std::string& lookup(CatalogKind kind, int id) const;

 private:
  std::map<int, CatalogEntry> alerts_;
  std::map<int, CatalogEntry> alarms_;
};

}  // namespace atsu::monitor
