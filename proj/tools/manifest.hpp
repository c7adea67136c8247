#pragma once

#include "steiner/serialize.hpp"

#include <chrono>
#include <cstdint>
#include <string>
#include <vector>

namespace steiner::cli {

/// Hex SHA-256 of a byte string.
std::string sha256_hex(const std::string& bytes);

/// Provenance block embedded in every JSON document the tool writes.
class RunManifest {
 public:
  RunManifest(int argc, char** argv);

  void add_seed(const std::string& name, std::uint64_t seed);
  void add_input(const std::string& path, const std::string& contents);
  void add_output(const std::string& path, const std::string& contents);

  /// Snapshot including the wall time elapsed since construction.
  Json to_json() const;

 private:
  std::vector<std::string> command_line_;
  Json seeds_ = Json::object();
  Json inputs_ = Json::array();
  Json outputs_ = Json::array();
  std::chrono::steady_clock::time_point start_;
};

}  // namespace steiner::cli
