// Content-addressed on-disk store of solved degrees.
//
// One file per key, named by the FNV-1a hash of the key. Files carry the full
// key and a checksum; a mismatch evicts the file with a warning. Writes go to
// a temporary file that is renamed into place.
#pragma once

#include <cstdint>
#include <filesystem>
#include <iosfwd>
#include <optional>
#include <string>

#include "hessgkm/cohomology.hpp"

namespace hessgkm {

std::uint64_t fnv1a(const std::string& data);

/// HESSGKM_CACHE_DIR if set, else $XDG_CACHE_HOME/hessgkm, else
/// $HOME/.cache/hessgkm.
std::filesystem::path default_cache_dir();

class FileCache : public SolutionCache {
 public:
  explicit FileCache(std::filesystem::path dir, std::ostream* warnings = nullptr);

  std::optional<QEchelon> load(const std::string& key) override;
  void store(const std::string& key, const QEchelon& solutions) override;

  std::filesystem::path path_for(const std::string& key) const;
  std::size_t hits() const { return hits_; }
  std::size_t misses() const { return misses_; }
  std::size_t evictions() const { return evictions_; }

 private:
  void evict(const std::filesystem::path& file, const std::string& why);

  std::filesystem::path dir_;
  std::ostream* warnings_;
  std::size_t hits_ = 0;
  std::size_t misses_ = 0;
  std::size_t evictions_ = 0;
};

}  // namespace hessgkm
