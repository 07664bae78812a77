#include "cli_support.hpp"

#include <cmath>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <sstream>

#include <openssl/evp.h>

#include "momentdist/error.hpp"

namespace momentdist::cli {

int exit_code_for(const std::exception& e) {
  if (dynamic_cast<const InputError*>(&e) != nullptr) return exit_input;
  if (dynamic_cast<const NumericError*>(&e) != nullptr) return exit_numeric;
  if (dynamic_cast<const ConfigError*>(&e) != nullptr) return exit_config;
  return exit_failure;
}

nlohmann::json moments_json(const MomentSequence& ms) {
  auto values = nlohmann::json::array();
  for (double v : ms.values) {
    if (std::abs(v) < 9007199254740992.0 && v == std::round(v)) {
      values.push_back(static_cast<std::int64_t>(v));
    } else {
      values.push_back(v);
    }
  }
  return values;
}

std::string sha256_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw InputError("cannot open " + path.string());
  EVP_MD_CTX* ctx = EVP_MD_CTX_new();
  EVP_DigestInit_ex(ctx, EVP_sha256(), nullptr);
  char buffer[1 << 16];
  while (in) {
    in.read(buffer, sizeof buffer);
    EVP_DigestUpdate(ctx, buffer, static_cast<std::size_t>(in.gcount()));
  }
  unsigned char digest[EVP_MAX_MD_SIZE];
  unsigned int length = 0;
  EVP_DigestFinal_ex(ctx, digest, &length);
  EVP_MD_CTX_free(ctx);
  std::ostringstream hex;
  for (unsigned int i = 0; i < length; ++i) hex << std::hex << std::setw(2) << std::setfill('0') << int(digest[i]);
  return hex.str();
}

RunManifest::RunManifest(std::string command, std::vector<std::string> argv)
    : command_(std::move(command)), argv_(std::move(argv)) {}

void RunManifest::add_input(const std::filesystem::path& path) {
  inputs_.push_back({{"path", path.string()}, {"sha256", sha256_file(path)}});
}

nlohmann::json RunManifest::to_json() const {
  nlohmann::json doc;
  doc["command"] = command_;
  doc["argv"] = argv_;
  doc["config"] = config_;
  doc["seeds"] = seeds_;
  doc["inputs"] = inputs_;
  doc["version"] = MOMENTDIST_VERSION;
  auto timings = nlohmann::json::object();
  for (const auto& [phase, seconds] : timings_) timings[phase] = seconds;
  doc["timings"] = timings;
  return doc;
}

void RunManifest::write_beside(const std::filesystem::path& output) const {
  write_output(output.string() + ".manifest.json", to_json().dump(2) + "\n");
}

void write_output(const std::string& path, const std::string& text) {
  if (path.empty() || path == "-") {
    std::cout << text;
    return;
  }
  std::ofstream out(path, std::ios::binary);
  if (!out) throw InputError("cannot write " + path);
  out << text;
  if (!out) throw InputError("failed writing " + path);
}

}  // namespace momentdist::cli
