#include "polarfade/io.hpp"

#include <cmath>
#include <cstdio>
#include <fstream>
#include <sstream>
#include <stdexcept>

namespace polarfade {

namespace {

std::string trim(const std::string& s) {
  const auto first = s.find_first_not_of(" \t\r\n");
  if (first == std::string::npos) return "";
  const auto last = s.find_last_not_of(" \t\r\n");
  return s.substr(first, last - first + 1);
}

std::ofstream open_out(const std::string& path) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::invalid_argument("cannot open '" + path + "' for writing");
  return out;
}

}  // namespace

KvMap parse_kv_text(const std::string& text) {
  KvMap all;
  bool saw_config_section = false;
  std::string section;
  std::istringstream in(text);
  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    const auto hash = line.find('#');
    if (hash != std::string::npos) line.erase(hash);
    line = trim(line);
    if (line.empty()) continue;
    if (line.front() == '[' && line.back() == ']') {
      section = trim(line.substr(1, line.size() - 2));
      if (section == "config") saw_config_section = true;
      continue;
    }
    const auto eq = line.find('=');
    if (eq == std::string::npos) {
      throw std::invalid_argument("config line " + std::to_string(lineno) +
                                  " is not 'key = value': '" + line + "'");
    }
    const std::string key = trim(line.substr(0, eq));
    const std::string value = trim(line.substr(eq + 1));
    if (key.empty()) {
      throw std::invalid_argument("config line " + std::to_string(lineno) + " has an empty key");
    }
    all[section.empty() ? key : section + "." + key] = value;
  }
  if (!saw_config_section) return all;
  KvMap config;
  const std::string prefix = "config.";
  for (const auto& [key, value] : all) {
    if (key.rfind(prefix, 0) == 0) config[key.substr(prefix.size())] = value;
  }
  return config;
}

KvMap read_kv_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::invalid_argument("cannot open config file '" + path + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_kv_text(buf.str());
}

std::string fmt_g12(double v) {
  char buf[48];
  std::snprintf(buf, sizeof(buf), "%.12g", v);
  return buf;
}

double kv_double(const KvMap& kv, const std::string& key) {
  const auto it = kv.find(key);
  if (it == kv.end()) throw std::invalid_argument("missing config key '" + key + "'");
  try {
    std::size_t pos = 0;
    const double v = std::stod(it->second, &pos);
    if (pos != it->second.size()) throw std::invalid_argument("");
    return v;
  } catch (const std::exception&) {
    throw std::invalid_argument("config key '" + key + "' is not a number: '" + it->second + "'");
  }
}

long long kv_int(const KvMap& kv, const std::string& key) {
  const auto it = kv.find(key);
  if (it == kv.end()) throw std::invalid_argument("missing config key '" + key + "'");
  try {
    std::size_t pos = 0;
    const long long v = std::stoll(it->second, &pos);
    if (pos != it->second.size()) throw std::invalid_argument("");
    return v;
  } catch (const std::exception&) {
    throw std::invalid_argument("config key '" + key + "' is not an integer: '" + it->second + "'");
  }
}

std::uint64_t kv_uint64(const KvMap& kv, const std::string& key) {
  const auto it = kv.find(key);
  if (it == kv.end()) throw std::invalid_argument("missing config key '" + key + "'");
  try {
    std::size_t pos = 0;
    const unsigned long long v = std::stoull(it->second, &pos);
    if (pos != it->second.size()) throw std::invalid_argument("");
    return v;
  } catch (const std::exception&) {
    throw std::invalid_argument("config key '" + key + "' is not an integer: '" + it->second + "'");
  }
}

std::vector<double> kv_double_list(const KvMap& kv, const std::string& key) {
  const auto it = kv.find(key);
  if (it == kv.end()) throw std::invalid_argument("missing config key '" + key + "'");
  std::vector<double> out;
  std::istringstream in(it->second);
  std::string item;
  while (std::getline(in, item, ',')) {
    item = trim(item);
    if (item.empty()) continue;
    try {
      out.push_back(std::stod(item));
    } catch (const std::exception&) {
      throw std::invalid_argument("config key '" + key + "' has a non-numeric entry: '" + item +
                                  "'");
    }
  }
  if (out.empty()) throw std::invalid_argument("config key '" + key + "' is an empty list");
  return out;
}

void write_code_file(const std::string& path, const PolarCode& code) {
  auto out = open_out(path);
  out << "N=" << code.block_length() << "\n";
  out << "K=" << code.dimension() << "\n";
  out << "design_snr=" << fmt_g12(code.design_snr()) << "\n";
  out << "eps=" << fmt_g12(code.design_eps()) << "\n";
  for (int idx : code.info_set()) out << idx + 1 << "\n";
}

PolarCode read_code_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::invalid_argument("cannot open code file '" + path + "'");
  std::string line;
  KvMap header;
  std::vector<int> info_set;
  while (std::getline(in, line)) {
    line = trim(line);
    if (line.empty()) continue;
    const auto eq = line.find('=');
    if (eq != std::string::npos) {
      header[trim(line.substr(0, eq))] = trim(line.substr(eq + 1));
    } else {
      info_set.push_back(std::stoi(line) - 1);
    }
  }
  const int N = static_cast<int>(kv_int(header, "N"));
  const int K = static_cast<int>(kv_int(header, "K"));
  if (!is_power_of_two(static_cast<std::size_t>(N))) {
    throw std::invalid_argument("code file '" + path + "': N is not a power of two");
  }
  if (static_cast<int>(info_set.size()) != K) {
    throw std::invalid_argument("code file '" + path + "': K does not match the index count");
  }
  int n = 0;
  while ((1 << n) < N) ++n;
  return PolarCode(n, std::move(info_set), kv_double(header, "design_snr"),
                   kv_double(header, "eps"));
}

void write_eps_csv(const std::string& path, const std::vector<EpsPoint>& rows) {
  auto out = open_out(path);
  out << "q,sigma_h2,p_design,delta,epsilon\n";
  for (const auto& r : rows) {
    out << fmt_g12(r.q) << ',' << fmt_g12(r.sigma_h2) << ',' << fmt_g12(r.p_design) << ','
        << fmt_g12(r.delta) << ',' << fmt_g12(r.epsilon) << "\n";
  }
}

void write_ber_csv(const std::string& path, const std::vector<BerPoint>& rows) {
  auto out = open_out(path);
  out << "q,scheme,n,k,trials,bit_errors,ber,ci95\n";
  for (const auto& r : rows) {
    out << fmt_g12(r.q) << ',' << to_string(r.scheme) << ',' << r.block_length << ','
        << r.dimension << ',' << r.trials << ',' << r.bit_errors << ',' << fmt_g12(r.ber) << ','
        << fmt_g12(r.ci95_halfwidth) << "\n";
  }
}

void write_rstar_csv(const std::string& path, const std::vector<RatePoint>& rows) {
  auto out = open_out(path);
  out << "q,p_star,r_star,epsilon_star\n";
  for (const auto& r : rows) {
    out << fmt_g12(r.q) << ',' << fmt_g12(r.p_star) << ',' << fmt_g12(r.r_star) << ','
        << fmt_g12(r.eps_star) << "\n";
  }
}

void write_manifest(const std::string& path, const RunManifest& manifest) {
  auto out = open_out(path);
  out << "command = " << manifest.command << "\n";
  out << "version = " << manifest.version << "\n";
  out << "master_seed = " << manifest.master_seed << "\n";
  for (const auto& o : manifest.outputs) out << "output = " << o << "\n";
  out << "duration_s = " << fmt_g12(manifest.duration_s) << "\n";
  out << "[config]\n";
  for (const auto& [key, value] : manifest.config) out << key << " = " << value << "\n";
}

}  // namespace polarfade
