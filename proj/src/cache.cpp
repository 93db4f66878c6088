#include "jumpscan/cache.hpp"

#include "jumpscan/io.hpp"

#include <fcntl.h>
#include <unistd.h>

#include <chrono>
#include <ctime>
#include <fstream>

namespace jumpscan::cache {

PointCountCache::PointCountCache(std::filesystem::path path, std::ostream* warnings) : path_(std::move(path)) {
  std::ifstream in(path_);
  if (!in) return;
  std::string line;
  std::size_t lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (line.empty()) continue;
    try {
      const auto j = io::json::parse(line);
      Key key{j.at("curve").get<std::string>(), j.at("p").get<std::uint64_t>(), j.at("k").get<unsigned>()};
      entries_.insert_or_assign(std::move(key), io::integer_from_json(j.at("n")));
    } catch (const std::exception& e) {
      ++skipped_;
      if (warnings) *warnings << "warning: " << path_.string() << ":" << lineno << ": skipping corrupt cache line\n";
    }
  }
}

std::optional<arith::Integer> PointCountCache::lookup(const std::string& curve_hash, std::uint64_t p, unsigned k) const {
  std::lock_guard lock(mutex_);
  auto it = entries_.find(Key{curve_hash, p, k});
  if (it == entries_.end()) return std::nullopt;
  return it->second;
}

void PointCountCache::store(const std::string& curve_hash, std::uint64_t p, unsigned k, const arith::Integer& count) {
  const auto now = std::chrono::system_clock::to_time_t(std::chrono::system_clock::now());
  char stamp[32];
  std::tm tm{};
  gmtime_r(&now, &tm);
  std::strftime(stamp, sizeof stamp, "%Y-%m-%dT%H:%M:%SZ", &tm);
  const std::string line =
      io::json{{"curve", curve_hash}, {"p", p}, {"k", k}, {"n", io::integer_to_json(count)}, {"written", stamp}}.dump() +
      "\n";

  std::lock_guard lock(mutex_);
  entries_.insert_or_assign(Key{curve_hash, p, k}, count);
  // One write(2) on an O_APPEND descriptor per line.
  const int fd = ::open(path_.c_str(), O_WRONLY | O_APPEND | O_CREAT, 0644);
  if (fd < 0) throw std::runtime_error("cannot open cache " + path_.string());
  const ssize_t n = ::write(fd, line.data(), line.size());
  ::close(fd);
  if (n != static_cast<ssize_t>(line.size())) throw std::runtime_error("short write to cache " + path_.string());
}

std::size_t PointCountCache::size() const {
  std::lock_guard lock(mutex_);
  return entries_.size();
}

}  // namespace jumpscan::cache
