#include "khr/cache.hpp"

#include <algorithm>
#include <fstream>
#include <sstream>
#include <system_error>
#include <unistd.h>

#include "khr/serialize.hpp"

namespace khr {

namespace fs = std::filesystem;

std::string CacheKey::filename() const {
  return form + "_" + std::to_string(m) + "_" + std::to_string(n) + "_" + version + ".json";
}

static Json key_json(const CacheKey& key) {
  return {{"m", key.m}, {"n", key.n}, {"form", key.form}, {"version", key.version}};
}

static std::string encode(const CacheKey& key, const Invariant& value) {
  const Json doc = {{"key", key_json(key)}, {"value", to_json(value)}};
  return doc.dump(2) + "\n";
}

ResultCache::ResultCache(fs::path dir) : dir_(std::move(dir)) {}

std::optional<Invariant> ResultCache::load(const CacheKey& key) const {
  const fs::path file = path_for(key);
  std::ifstream in(file, std::ios::binary);
  if (!in) return std::nullopt;
  std::stringstream buf;
  buf << in.rdbuf();
  const std::string bytes = buf.str();
  try {
    const Json doc = Json::parse(bytes);
    if (doc.at("key") != key_json(key)) throw CacheCorrupt(file.string() + ": key mismatch");
    Invariant value = invariant_from_json(doc.at("value"));
    if (encode(key, value) != bytes) throw CacheCorrupt(file.string() + ": not in canonical form");
    return value;
  } catch (const CacheCorrupt&) {
    throw;
  } catch (const std::exception& e) {
    throw CacheCorrupt(file.string() + ": " + e.what());
  }
}

void ResultCache::store(const CacheKey& key, const Invariant& value) const {
  fs::create_directories(dir_);
  const fs::path target = path_for(key);
  const fs::path tmp = target.string() + ".tmp." + std::to_string(::getpid());
  {
    std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
    if (!out) throw Error("cannot write cache file " + tmp.string());
    out << encode(key, value);
    if (!out.flush()) throw Error("cannot write cache file " + tmp.string());
  }
  fs::rename(tmp, target);
}

Invariant ResultCache::get_or_compute(const CacheKey& key, const std::function<Invariant()>& compute,
                                      std::ostream& warn) const {
  try {
    if (auto hit = load(key)) return *hit;
  } catch (const CacheCorrupt& e) {
    warn << "warning: discarding corrupt cache entry " << e.what() << '\n';
  }
  Invariant value = compute();
  store(key, value);
  return value;
}

std::vector<fs::path> ResultCache::entries() const {
  std::vector<fs::path> out;
  std::error_code ec;
  if (!fs::is_directory(dir_, ec)) return out;
  for (const auto& entry : fs::directory_iterator(dir_))
    if (entry.is_regular_file() && entry.path().extension() == ".json") out.push_back(entry.path());
  std::sort(out.begin(), out.end());
  return out;
}

std::size_t ResultCache::clear() const {
  std::size_t removed = 0;
  for (const auto& p : entries()) removed += fs::remove(p) ? 1 : 0;
  return removed;
}

}  // namespace khr
