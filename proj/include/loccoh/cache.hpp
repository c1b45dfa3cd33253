#pragma once

#include <cstdint>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <optional>
#include <sstream>
#include <string>
#include <unistd.h>

#include "loccoh/cech.hpp"
#include "loccoh/io.hpp"

namespace loccoh {

inline std::uint64_t fnv1a64(const std::string& s) {
  std::uint64_t h = 0xcbf29ce484222325ULL;
  for (unsigned char c : s) {
    h ^= c;
    h *= 0x100000001b3ULL;
  }
  return h;
}

// Canonical text of (variables, minimized sorted generators, field). The
// generators are already canonical inside SquareFreeIdeal.
inline std::string canonical_key(const SquareFreeIdeal& I, FieldSpec field) {
  std::ostringstream out;
  out << "n=" << I.n() << ";vars=";
  for (const auto& name : I.context()->names()) out << name << ',';
  out << ";gens=";
  for (VarSet g : I.generators()) out << g.bits() << ',';
  out << ";field=" << field.label();
  return out.str();
}

inline std::string cache_file_name(const SquareFreeIdeal& I, FieldSpec field) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%016llx.json", static_cast<unsigned long long>(fnv1a64(canonical_key(I, field))));
  return buf;
}

// $LOCCOH_CACHE_DIR, else $XDG_CACHE_HOME/loccoh, else ~/.cache/loccoh.
inline std::filesystem::path default_cache_dir() {
  if (const char* d = std::getenv("LOCCOH_CACHE_DIR"); d && *d) return d;
  if (const char* d = std::getenv("XDG_CACHE_HOME"); d && *d) return std::filesystem::path(d) / "loccoh";
  if (const char* d = std::getenv("HOME"); d && *d) return std::filesystem::path(d) / ".cache" / "loccoh";
  return ".loccoh-cache";
}

struct CacheStats {
  std::size_t entries = 0;
  std::uintmax_t bytes = 0;
};

// Content-addressed store of cohomology tables. Entries carry the engine
// version; a different version is a miss, an unreadable entry is deleted.
class TableCache {
public:
  explicit TableCache(std::filesystem::path dir, std::string engine_version = kEngineVersion)
      : dir_(std::move(dir)), version_(std::move(engine_version)) {}

  const std::filesystem::path& dir() const { return dir_; }

  std::optional<CohomologyTable> lookup(const SquareFreeIdeal& I, FieldSpec field) const {
    const auto path = dir_ / cache_file_name(I, field);
    std::error_code ec;
    if (!std::filesystem::exists(path, ec)) return std::nullopt;
    try {
      std::ifstream in(path);
      const json doc = json::parse(in);
      if (doc.at("engine_version").get<std::string>() != version_) return std::nullopt;
      if (doc.at("key").get<std::string>() != canonical_key(I, field)) return std::nullopt;
      CohomologyTable t = table_from_json(doc.at("table"), Limits{VarSet::kMaxBits - 1, VarSet::kMaxBits - 1});
      if (!(t.ideal() == I) || !(t.field() == field)) throw InputError("cache entry does not match its key");
      return t;
    } catch (const std::exception&) {
      std::filesystem::remove(path, ec);
      return std::nullopt;
    }
  }

  // Write to a temporary file, then rename into place.
  void store(const CohomologyTable& t) const {
    std::filesystem::create_directories(dir_);
    const auto path = dir_ / cache_file_name(t.ideal(), t.field());
    const auto tmp = path.string() + ".tmp." + std::to_string(::getpid());
    const json doc = {{"engine_version", version_},
                      {"key", canonical_key(t.ideal(), t.field())},
                      {"table", table_to_json(t)}};
    {
      std::ofstream out(tmp, std::ios::trunc);
      if (!out) throw Error("cannot write cache file '" + tmp + "'");
      out << doc.dump(2) << '\n';
      if (!out) throw Error("cannot write cache file '" + tmp + "'");
    }
    std::filesystem::rename(tmp, path);
  }

  CacheStats stats() const {
    CacheStats s;
    std::error_code ec;
    if (!std::filesystem::is_directory(dir_, ec)) return s;
    for (const auto& entry : std::filesystem::directory_iterator(dir_)) {
      if (entry.path().extension() != ".json") continue;
      ++s.entries;
      s.bytes += entry.file_size();
    }
    return s;
  }

  // Removes cache entries (and stray temporaries); returns how many files went.
  std::size_t clear() const {
    std::size_t removed = 0;
    std::error_code ec;
    if (!std::filesystem::is_directory(dir_, ec)) return 0;
    for (const auto& entry : std::filesystem::directory_iterator(dir_)) {
      const auto name = entry.path().filename().string();
      if (entry.path().extension() == ".json" || name.find(".json.tmp.") != std::string::npos) {
        std::filesystem::remove(entry.path(), ec);
        ++removed;
      }
    }
    return removed;
  }

private:
  std::filesystem::path dir_;
  std::string version_;
};

} // namespace loccoh
