#include "hessgkm/cache.hpp"

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <iomanip>
#include <ostream>
#include <sstream>

#include <unistd.h>

namespace hessgkm {

namespace {

constexpr const char* kMagic = "hessgkm-cache 1";

std::string hex(std::uint64_t v) {
  std::ostringstream os;
  os << std::hex << std::setw(16) << std::setfill('0') << v;
  return os.str();
}

std::string serialize(const std::string& key, const QEchelon& e) {
  std::ostringstream os;
  os << kMagic << '\n' << key.size() << '\n' << key << '\n';
  os << e.rank() << ' ' << e.ambient_dim() << '\n';
  for (Index p : e.pivots()) os << p << ' ';
  os << '\n';
  for (Index r = 0; r < e.rank(); ++r) {
    for (Index c = 0; c < e.ambient_dim(); ++c)
      if (!e.basis()(r, c).is_zero()) os << c << ':' << e.basis()(r, c).str() << ' ';
    os << '\n';
  }
  return os.str();
}

std::optional<QEchelon> parse(const std::string& body, const std::string& key) {
  std::istringstream is(body);
  std::string line;
  if (!std::getline(is, line) || line != kMagic) return std::nullopt;
  std::size_t klen = 0;
  if (!(is >> klen)) return std::nullopt;
  is.get();
  std::string stored(klen, '\0');
  if (!is.read(stored.data(), std::streamsize(klen)) || stored != key) return std::nullopt;
  Index rank = 0, ambient = 0;
  if (!(is >> rank >> ambient) || rank < 0 || ambient < 0 || rank > ambient) return std::nullopt;
  std::vector<Index> pivots(static_cast<std::size_t>(rank));
  for (auto& p : pivots)
    if (!(is >> p) || p < 0 || p >= ambient) return std::nullopt;
  std::getline(is, line);
  QRowMatrix rows = QRowMatrix::Zero(rank, ambient);
  for (Index r = 0; r < rank; ++r) {
    if (!std::getline(is, line)) return std::nullopt;
    std::istringstream ls(line);
    std::string entry;
    while (ls >> entry) {
      const auto colon = entry.find(':');
      if (colon == std::string::npos) return std::nullopt;
      const Index c = std::stol(entry.substr(0, colon));
      if (c < 0 || c >= ambient) return std::nullopt;
      rows(r, c) = Rational::parse(entry.substr(colon + 1));
    }
  }
  for (Index r = 0; r < rank; ++r)
    if (!rows(r, pivots[std::size_t(r)]).is_one()) return std::nullopt;
  return QEchelon::from_rref(std::move(rows), std::move(pivots));
}

}  // namespace

std::uint64_t fnv1a(const std::string& data) {
  std::uint64_t h = 0xcbf29ce484222325ULL;
  for (unsigned char c : data) {
    h ^= c;
    h *= 0x100000001b3ULL;
  }
  return h;
}

std::filesystem::path default_cache_dir() {
  if (const char* d = std::getenv("HESSGKM_CACHE_DIR"); d && *d) return d;
  if (const char* x = std::getenv("XDG_CACHE_HOME"); x && *x) return std::filesystem::path(x) / "hessgkm";
  if (const char* h = std::getenv("HOME"); h && *h) return std::filesystem::path(h) / ".cache" / "hessgkm";
  return std::filesystem::temp_directory_path() / "hessgkm-cache";
}

FileCache::FileCache(std::filesystem::path dir, std::ostream* warnings) : dir_(std::move(dir)), warnings_(warnings) {
  std::filesystem::create_directories(dir_);
}

std::filesystem::path FileCache::path_for(const std::string& key) const { return dir_ / (hex(fnv1a(key)) + ".sol"); }

void FileCache::evict(const std::filesystem::path& file, const std::string& why) {
  ++evictions_;
  if (warnings_) *warnings_ << "warning: evicting cache entry " << file.filename().string() << " (" << why << ")\n";
  std::error_code ec;
  std::filesystem::remove(file, ec);
}

std::optional<QEchelon> FileCache::load(const std::string& key) {
  const auto file = path_for(key);
  std::ifstream in(file, std::ios::binary);
  if (!in) {
    ++misses_;
    return std::nullopt;
  }
  std::stringstream buf;
  buf << in.rdbuf();
  std::string text = buf.str();
  const auto tail = text.rfind("checksum ");
  if (tail == std::string::npos) {
    evict(file, "missing checksum");
    ++misses_;
    return std::nullopt;
  }
  const std::string body = text.substr(0, tail);
  std::string sum = text.substr(tail + 9);
  while (!sum.empty() && (sum.back() == '\n' || sum.back() == '\r')) sum.pop_back();
  if (sum != hex(fnv1a(body))) {
    evict(file, "checksum mismatch");
    ++misses_;
    return std::nullopt;
  }
  auto parsed = parse(body, key);
  if (!parsed) {
    evict(file, "unreadable entry");
    ++misses_;
    return std::nullopt;
  }
  ++hits_;
  return parsed;
}

void FileCache::store(const std::string& key, const QEchelon& solutions) {
  const std::string body = serialize(key, solutions);
  const auto file = path_for(key);
  const auto tmp = file.string() + ".tmp." + std::to_string(::getpid());
  {
    std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
    if (!out) return;
    out << body << "checksum " << hex(fnv1a(body)) << '\n';
    if (!out) return;
  }
  std::error_code ec;
  std::filesystem::rename(tmp, file, ec);
  if (ec) std::filesystem::remove(tmp, ec);
}

}  // namespace hessgkm
