#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "polarfade/harness.hpp"
#include "polarfade/polar.hpp"

namespace polarfade {

/// Flat `key = value` configuration, one pair per line, `#` comments.
/// `[section]` headers are allowed; when a file contains a [config] section
/// (as run manifests do), only that section is read and everything else is
/// treated as metadata.
using KvMap = std::map<std::string, std::string>;

KvMap parse_kv_text(const std::string& text);
KvMap read_kv_file(const std::string& path);

/// %.12g rendering used for every float written to CSV, code and manifest
/// files.
std::string fmt_g12(double v);

double kv_double(const KvMap& kv, const std::string& key);
long long kv_int(const KvMap& kv, const std::string& key);
std::uint64_t kv_uint64(const KvMap& kv, const std::string& key);
std::vector<double> kv_double_list(const KvMap& kv, const std::string& key);

/// Code description file: header lines `N=`, `K=`, `design_snr=`, `eps=`,
/// then one 1-based info-set index per line, ascending.
void write_code_file(const std::string& path, const PolarCode& code);
PolarCode read_code_file(const std::string& path);

// CSV emitters; headers are part of the file contract.
void write_eps_csv(const std::string& path, const std::vector<EpsPoint>& rows);
void write_ber_csv(const std::string& path, const std::vector<BerPoint>& rows);
void write_rstar_csv(const std::string& path, const std::vector<RatePoint>& rows);

/// Written alongside every output file; re-running the command with the
/// manifest as --config reproduces the output byte-for-byte.
struct RunManifest {
  std::string command;
  std::string version;
  std::uint64_t master_seed = 0;
  std::vector<std::string> outputs;
  double duration_s = 0.0;
  KvMap config;
};

void write_manifest(const std::string& path, const RunManifest& manifest);

}  // namespace polarfade
