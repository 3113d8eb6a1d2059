#pragma once

#include "hyptwist/galois.hpp"

#include <cstdint>
#include <filesystem>
#include <fstream>
#include <map>
#include <optional>
#include <shared_mutex>
#include <utility>

namespace hyptwist {

/// Append-only store of Frobenius cycle types keyed by (curve hash, prime).
///
/// On disk each record is one line `hash ell l1 l2 ...` (hash in hex). A
/// trailing record that is unterminated or unparsable is cut off on load.
/// Reads may run concurrently; writes are serialized.
class PrimeCache {
public:
  /// In-memory only.
  PrimeCache() = default;
  explicit PrimeCache(std::filesystem::path path);

  std::optional<CycleType> lookup(std::uint64_t curve_hash, std::uint64_t ell) const;
  void insert(std::uint64_t curve_hash, std::uint64_t ell, const CycleType& type);

  std::size_t size() const;
  /// Bytes dropped from the file tail during load.
  std::uintmax_t truncated_bytes() const noexcept { return truncated_; }

private:
  std::filesystem::path path_;
  mutable std::shared_mutex mutex_;
  std::map<std::pair<std::uint64_t, std::uint64_t>, CycleType> entries_;
  std::ofstream out_;
  std::uintmax_t truncated_ = 0;
};

}  // namespace hyptwist
