#pragma once

#include <filesystem>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "saddle/model/saddle_system.hpp"

namespace saddle::model {

/// Ordered key = value record stored as header.txt next to the block files.
/// m and n are always written; the rest is free-form (tau, method, ne, ...).
class BundleHeader {
 public:
  void set(const std::string& key, const std::string& value);
  std::optional<std::string> get(const std::string& key) const;
  const std::vector<std::pair<std::string, std::string>>& fields() const noexcept {
    return fields_;
  }

 private:
  std::vector<std::pair<std::string, std::string>> fields_;
};

struct Bundle {
  SaddleSystem system;
  BundleHeader header;
};

/// Writes A.mtx, B.mtx, header.txt and, when C is present, C.mtx into `dir`
/// (created if missing). m and n in the header are overwritten from the system.
void write_bundle(const std::filesystem::path& dir, const SaddleSystem& sys,
                  BundleHeader header = {});

/// Reads a bundle directory. A missing or empty C.mtx means C = 0. Throws
/// FormatError with file and line for malformed content or header sizes that
/// disagree with the blocks.
Bundle read_bundle(const std::filesystem::path& dir, const ValidationOptions& opts = {});

}  // namespace saddle::model
