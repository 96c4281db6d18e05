#include "atsu/monitor/catalog.hpp"

#include <cctype>
#include <cstdio>
#include <fstream>
#include <sstream>

#include "atsu/csm/types.hpp"

namespace atsu::monitor {
namespace {

std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return s;
}

std::string_view prefix(CatalogKind k) { return k == CatalogKind::Alert ? "SA-" : "AL-"; }
int expected_count(CatalogKind k) { return k == CatalogKind::Alert ? csm::kAlertCount : csm::kAlarmCount; }

}  // namespace

UnknownId::UnknownId(CatalogKind kind, int id)
    : std::out_of_range(std::string(kind == CatalogKind::Alert ? "alert" : "alarm") + " id " +
                        std::to_string(id) + " is not in the catalog") {}

std::string Catalog::code_for(CatalogKind kind, int id) {
  char buf[16];
  std::snprintf(buf, sizeof buf, "%s%02d", prefix(kind).data(), id);
  return buf;
}

Catalog Catalog::parse(std::string_view text) {
  Catalog cat;
  std::optional<CatalogKind> section;
  std::istringstream in{std::string(text)};
  std::string raw;
  int lineno = 0;
  auto fail = [&](const std::string& why) {
    throw CatalogError("catalog line " + std::to_string(lineno) + ": " + why);
  };

  while (std::getline(in, raw)) {
    ++lineno;
    std::string_view line = trim(raw);
    if (line.empty() || line.front() == '#') continue;
    if (line.front() == '[') {
      if (line == "[alerts]") section = CatalogKind::Alert;
      else if (line == "[alarms]") section = CatalogKind::Alarm;
      else fail("unknown section " + std::string(line));
      continue;
    }
    if (!section) fail("entry outside of a section");
    const auto eq = line.find('=');
    if (eq == std::string_view::npos) fail("expected 'CODE = description'");
    const auto key = trim(line.substr(0, eq));
    const auto desc = trim(line.substr(eq + 1));
    const auto pfx = prefix(*section);
    if (key.substr(0, pfx.size()) != pfx) fail("key " + std::string(key) + " must start with " + std::string(pfx));
    const auto digits = key.substr(pfx.size());
    if (digits.empty() || digits.size() > 2) fail("bad id in key " + std::string(key));
    int id = 0;
    for (char c : digits) {
      if (!std::isdigit(static_cast<unsigned char>(c))) fail("bad id in key " + std::string(key));
      id = id * 10 + (c - '0');
    }
    if (id < 1 || id > expected_count(*section)) fail("id out of range in key " + std::string(key));
    if (desc.empty()) fail("empty description for " + std::string(key));
    auto& table = *section == CatalogKind::Alert ? cat.alerts_ : cat.alarms_;
    if (!table.emplace(id, CatalogEntry{id, code_for(*section, id), std::string(desc)}).second)
      fail("duplicate key " + std::string(key));
  }

  if (static_cast<int>(cat.alerts_.size()) != csm::kAlertCount)
    throw CatalogError("catalog has " + std::to_string(cat.alerts_.size()) + " alerts, expected 35");
  if (static_cast<int>(cat.alarms_.size()) != csm::kAlarmCount)
    throw CatalogError("catalog has " + std::to_string(cat.alarms_.size()) + " alarms, expected 6");
  return cat;
}

Catalog Catalog::load(const std::filesystem::path& path) {
  std::ifstream f(path);
  if (!f) throw CatalogError("cannot open catalog " + path.string());
  std::ostringstream ss;
  ss << f.rdbuf();
  return parse(ss.str());
}

const Catalog& Catalog::builtin() {
  static const Catalog cat = parse(builtin_text());
  return cat;
}

const CatalogEntry* Catalog::find(CatalogKind kind, int id) const {
  const auto& table = entries(kind);
  auto it = table.find(id);
  return it == table.end() ? nullptr : &it->second;
}

const std::string& Catalog::lookup(CatalogKind kind, int id) const {
  if (const auto* e = find(kind, id)) return e->description;
  throw UnknownId(kind, id);
}

}  // namespace atsu::monitor
