#pragma once

#include <chrono>
#include <cstdint>
#include <exception>
#include <filesystem>
#include <string>
#include <utility>
#include <vector>

#include <json.hpp>

#include "momentdist/moments.hpp"

namespace momentdist::cli {

enum ExitCode : int {
  exit_ok = 0,
  exit_failure = 1,
  exit_input = 2,
  exit_numeric = 3,
  exit_config = 4,
};

/// Maps a library exception to the exit-code contract.
int exit_code_for(const std::exception& e);

/// Moment values as a JSON array; values that are whole numbers below 2^53
/// are written as integers.
nlohmann::json moments_json(const MomentSequence& ms);

/// Lowercase hex SHA-256 of a file's bytes. Throws InputError.
std::string sha256_file(const std::filesystem::path& path);

class RunManifest {
 public:
  RunManifest(std::string command, std::vector<std::string> argv);

  nlohmann::json& config() { return config_; }
  void add_seed(std::uint64_t seed) { seeds_.push_back(seed); }
  void add_input(const std::filesystem::path& path);
  void add_timing(std::string phase, double seconds) { timings_.emplace_back(std::move(phase), seconds); }

  nlohmann::json to_json() const;
  /// Writes to "<output>.manifest.json".
  void write_beside(const std::filesystem::path& output) const;

 private:
  std::string command_;
  std::vector<std::string> argv_;
  nlohmann::json config_ = nlohmann::json::object();
  std::vector<std::uint64_t> seeds_;
  nlohmann::json inputs_ = nlohmann::json::array();
  std::vector<std::pair<std::string, double>> timings_;
};

class PhaseTimer {
 public:
  PhaseTimer() : start_(std::chrono::steady_clock::now()) {}
  double seconds() const {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - start_).count();
  }

 private:
  std::chrono::steady_clock::time_point start_;
};

/// Writes text to path, or to stdout when path is empty or "-". Throws
/// InputError when the file cannot be written.
void write_output(const std::string& path, const std::string& text);

}  // namespace momentdist::cli
