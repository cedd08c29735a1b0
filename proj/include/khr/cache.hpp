#pragma once

// On-disk cache of computed invariants, one JSON file per (m, n, form, version).

#include <filesystem>
#include <functional>
#include <optional>
#include <ostream>
#include <string>
#include <vector>

#include "khr/errors.hpp"
#include "khr/laurent.hpp"

namespace khr {

// Bumped whenever a grading or normalization convention changes.
inline constexpr const char* kFormatVersion = "khr-torus-1";

struct CacheKey {
  int m = 0;
  int n = 0;
  std::string form;  // "P", "HHH" or "euler"
  std::string version = kFormatVersion;

  std::string filename() const;
};

class CacheCorrupt : public Error {
 public:
  using Error::Error;
};

class ResultCache {
 public:
  explicit ResultCache(std::filesystem::path dir);

  const std::filesystem::path& dir() const noexcept { return dir_; }
  std::filesystem::path path_for(const CacheKey& key) const { return dir_ / key.filename(); }

  // Empty on a miss. Throws CacheCorrupt if the file does not parse, carries
  // another key, or does not re-serialize to the same bytes.
  std::optional<Invariant> load(const CacheKey& key) const;

  // Writes a temporary file and renames it over the target.
  void store(const CacheKey& key, const Invariant& value) const;

  // Corrupt entries are reported on warn, recomputed and overwritten.
  Invariant get_or_compute(const CacheKey& key, const std::function<Invariant()>& compute,
                           std::ostream& warn) const;

  std::vector<std::filesystem::path> entries() const;
  std::size_t clear() const;

 private:
  std::filesystem::path dir_;
};

}  // namespace khr
