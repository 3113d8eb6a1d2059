#include "hyptwist/prime_cache.hpp"

#include "hyptwist/errors.hpp"

#include <iterator>
#include <mutex>
#include <sstream>

namespace hyptwist {

namespace {

std::optional<std::pair<std::pair<std::uint64_t, std::uint64_t>, CycleType>> parse_record(const std::string& line) {
  std::istringstream in(line);
  std::string hash_text;
  std::uint64_t ell = 0;
  if (!(in >> hash_text >> ell)) return std::nullopt;
  if (hash_text.empty() || hash_text.size() > 16) return std::nullopt;
  std::size_t used = 0;
  std::uint64_t hash = 0;
  try {
    hash = std::stoull(hash_text, &used, 16);
  } catch (const std::exception&) {
    return std::nullopt;
  }
  if (used != hash_text.size()) return std::nullopt;
  std::vector<unsigned> lengths;
  unsigned l = 0;
  while (in >> l) {
    if (l == 0) return std::nullopt;
    lengths.push_back(l);
  }
  if (!in.eof() || lengths.empty()) return std::nullopt;
  return std::make_pair(std::make_pair(hash, ell), CycleType(std::move(lengths)));
}

}  // namespace

PrimeCache::PrimeCache(std::filesystem::path path) : path_(std::move(path)) {
  std::uintmax_t good_end = 0;
  if (std::filesystem::exists(path_)) {
    std::ifstream in(path_, std::ios::binary);
    const std::string data((std::istreambuf_iterator<char>(in)), std::istreambuf_iterator<char>());
    std::size_t pos = 0;
    while (pos < data.size()) {
      const std::size_t nl = data.find('\n', pos);
      if (nl == std::string::npos) break;
      auto record = parse_record(data.substr(pos, nl - pos));
      if (!record) break;
      entries_[record->first] = std::move(record->second);
      pos = nl + 1;
      good_end = pos;
    }
    in.close();
    if (good_end < data.size()) {
      truncated_ = data.size() - good_end;
      std::filesystem::resize_file(path_, good_end);
    }
  }
  out_.open(path_, std::ios::app);
  if (!out_) throw InvalidInput("cannot open cache file " + path_.string());
}

std::optional<CycleType> PrimeCache::lookup(std::uint64_t curve_hash, std::uint64_t ell) const {
  std::shared_lock lock(mutex_);
  auto it = entries_.find({curve_hash, ell});
  if (it == entries_.end()) return std::nullopt;
  return it->second;
}

void PrimeCache::insert(std::uint64_t curve_hash, std::uint64_t ell, const CycleType& type) {
  std::unique_lock lock(mutex_);
  auto [it, inserted] = entries_.emplace(std::make_pair(curve_hash, ell), type);
  if (!inserted || !out_.is_open()) return;
  std::ostringstream line;
  line << std::hex << curve_hash << std::dec << ' ' << ell;
  for (unsigned l : type.lengths) line << ' ' << l;
  line << '\n';
  out_ << line.str();
  out_.flush();
}

std::size_t PrimeCache::size() const {
  std::shared_lock lock(mutex_);
  return entries_.size();
}

}  // namespace hyptwist
