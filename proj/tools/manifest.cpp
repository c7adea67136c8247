#include "manifest.hpp"

#include "steiner/kernels/block_sum.hpp"

#include <boost/version.hpp>
#include <openssl/evp.h>
#include <openssl/opensslv.h>

#include <CLI11.hpp>

#include <array>
#include <stdexcept>

#ifndef STEINER_BALANCE_VERSION
#define STEINER_BALANCE_VERSION "unknown"
#endif

namespace steiner::cli {

std::string sha256_hex(const std::string& bytes) {
  std::array<unsigned char, EVP_MAX_MD_SIZE> md{};
  unsigned int len = 0;
  if (EVP_Digest(bytes.data(), bytes.size(), md.data(), &len, EVP_sha256(), nullptr) != 1)
    throw std::runtime_error("SHA-256 digest failed");
  static constexpr char kHex[] = "0123456789abcdef";
  std::string out;
  for (unsigned int i = 0; i < len; ++i) {
    out.push_back(kHex[md[i] >> 4]);
    out.push_back(kHex[md[i] & 0xf]);
  }
  return out;
}

RunManifest::RunManifest(int argc, char** argv) : start_(std::chrono::steady_clock::now()) {
  for (int i = 0; i < argc; ++i) command_line_.emplace_back(argv[i]);
}

void RunManifest::add_seed(const std::string& name, std::uint64_t seed) { seeds_[name] = seed; }

void RunManifest::add_input(const std::string& path, const std::string& contents) {
  inputs_.push_back({{"path", path}, {"sha256", sha256_hex(contents)}});
}

void RunManifest::add_output(const std::string& path, const std::string& contents) {
  outputs_.push_back({{"path", path}, {"sha256", sha256_hex(contents)}});
}

Json RunManifest::to_json() const {
  const std::chrono::duration<double> elapsed = std::chrono::steady_clock::now() - start_;
  return Json{{"command_line", command_line_},
              {"seeds", seeds_},
              {"versions",
               {{"steiner-balance", STEINER_BALANCE_VERSION},
                {"boost", BOOST_LIB_VERSION},
                {"openssl", OPENSSL_VERSION_TEXT},
                {"nlohmann_json",
                 std::to_string(NLOHMANN_JSON_VERSION_MAJOR) + "." + std::to_string(NLOHMANN_JSON_VERSION_MINOR) +
                     "." + std::to_string(NLOHMANN_JSON_VERSION_PATCH)},
                {"cli11", CLI11_VERSION},
                {"kernel_isa", kernels::isa_name(kernels::active_isa())}}},
              {"inputs", inputs_},
              {"outputs", outputs_},
              {"wall_time_seconds", elapsed.count()}};
}

}  // namespace steiner::cli
