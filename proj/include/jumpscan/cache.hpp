// Append-only JSON Lines cache of point counts keyed by (curve hash, p, k).

#pragma once

#include "jumpscan/arith.hpp"

#include <filesystem>
#include <map>
#include <mutex>
#include <optional>
#include <ostream>
#include <string>
#include <tuple>

namespace jumpscan::cache {

class PointCountCache {
 public:
  /// A missing file is an empty cache. Corrupt lines are skipped with a
  /// warning on `warnings`; for duplicate keys the last line wins.
  explicit PointCountCache(std::filesystem::path path, std::ostream* warnings = nullptr);

  std::optional<arith::Integer> lookup(const std::string& curve_hash, std::uint64_t p, unsigned k) const;

  /// Appends one complete line per call, then flushes.
  void store(const std::string& curve_hash, std::uint64_t p, unsigned k, const arith::Integer& count);

  std::size_t size() const;
  std::size_t skipped_lines() const { return skipped_; }
  const std::filesystem::path& path() const { return path_; }

 private:
  using Key = std::tuple<std::string, std::uint64_t, unsigned>;
  std::filesystem::path path_;
  std::map<Key, arith::Integer> entries_;
  std::size_t skipped_ = 0;
  mutable std::mutex mutex_;
};

}  // namespace jumpscan::cache
