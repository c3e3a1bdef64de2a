#pragma once

#include <fcntl.h>
#include <sys/file.h>
#include <unistd.h>

#include <atomic>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <functional>
#include <future>
#include <map>
#include <optional>
#include <mutex>
#include <sstream>
#include <string>

#include "pg/cli/hash.hpp"
#include "pg/groebner/json_io.hpp"

namespace pg {

namespace detail {

class FileLock {
 public:
  explicit FileLock(const std::filesystem::path& p) : fd_(::open(p.c_str(), O_RDWR | O_CREAT | O_CLOEXEC, 0644)) {
    if (fd_ < 0) throw std::runtime_error("cannot open lock file " + p.string());
    if (::flock(fd_, LOCK_EX) != 0) {
      ::close(fd_);
      throw std::runtime_error("cannot lock " + p.string());
    }
  }
  ~FileLock() {
    ::flock(fd_, LOCK_UN);
    ::close(fd_);
  }
  FileLock(const FileLock&) = delete;
  FileLock& operator=(const FileLock&) = delete;

 private:
  int fd_;
};

}  // namespace detail

/// Content-addressed store of computed strings under one directory. Entries
/// are {"key": ..., "value": ...} files written by atomic rename under an
/// advisory lock; concurrent requests for one key in a process share a
/// single computation.
class Cache {
 public:
  explicit Cache(std::filesystem::path dir = default_dir()) : dir_(std::move(dir)) {}

  /// PG_CACHE_DIR if set, else .pg-cache in the working directory.
  static std::filesystem::path default_dir() {
    const char* env = std::getenv("PG_CACHE_DIR");
    return env && *env ? std::filesystem::path(env) : std::filesystem::path(".pg-cache");
  }

  const std::filesystem::path& dir() const { return dir_; }
  int computations() const { return computed_.load(); }
  int hits() const { return hits_.load(); }

  std::filesystem::path entry_path(const std::string& key) const { return dir_ / (key + ".json"); }

  std::string get_or_compute(const std::string& key, const std::function<std::string()>& thunk) {
    std::promise<std::string> mine;
    std::shared_future<std::string> fut;
    bool owner = false;
    {
      std::lock_guard<std::mutex> g(mu_);
      auto it = inflight_.find(key);
      if (it != inflight_.end()) {
        fut = it->second;
      } else {
        fut = mine.get_future().share();
        inflight_.emplace(key, fut);
        owner = true;
      }
    }
    if (!owner) return fut.get();
    try {
      mine.set_value(load_or_compute(key, thunk));
    } catch (...) {
      mine.set_exception(std::current_exception());
    }
    {
      std::lock_guard<std::mutex> g(mu_);
      inflight_.erase(key);
    }
    return fut.get();
  }

 private:
  std::string load_or_compute(const std::string& key, const std::function<std::string()>& thunk) {
    std::filesystem::create_directories(dir_);
    detail::FileLock lock(dir_ / (key + ".lock"));
    auto path = entry_path(key);
    if (auto v = read_entry(path, key)) {
      ++hits_;
      return *v;
    }
    auto value = thunk();
    ++computed_;
    auto tmp = dir_ / (key + ".tmp." + std::to_string(::getpid()));
    {
      std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
      out << json{{"key", key}, {"value", value}}.dump();
      if (!out) throw std::runtime_error("cannot write cache entry " + tmp.string());
    }
    std::filesystem::rename(tmp, path);
    return value;
  }

  static std::optional<std::string> read_entry(const std::filesystem::path& p, const std::string& key) {
    std::ifstream in(p, std::ios::binary);
    if (!in) return std::nullopt;
    std::stringstream ss;
    ss << in.rdbuf();
    auto j = json::parse(ss.str(), nullptr, false);
    if (j.is_discarded() || !j.is_object() || !j.contains("key") || !j.contains("value")) return std::nullopt;
    if (!j["key"].is_string() || j["key"] != key || !j["value"].is_string()) return std::nullopt;
    return j["value"].get<std::string>();
  }

  std::filesystem::path dir_;
  std::mutex mu_;
  std::map<std::string, std::shared_future<std::string>> inflight_;
  std::atomic<int> computed_{0}, hits_{0};
};

/// Key for a reduced basis: generators in canonical JSON plus the order.
inline std::string basis_cache_key(const QIdeal& ideal, const MonomialOrder& ord) {
  return sha256_hex("groebner-basis\n" + to_json(ideal).dump() + "\n" + ord.name());
}

/// Reduced basis JSON, through the cache.
inline json cached_basis(Cache& cache, const QIdeal& ideal, const MonomialOrder& ord) {
  auto v = cache.get_or_compute(basis_cache_key(ideal, ord), [&] { return basis_to_json(ideal.basis(ord)).dump(); });
  return json::parse(v);
}

}  // namespace pg
