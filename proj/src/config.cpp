#include "tripodsim/config.hpp"

#include <cctype>
#include <charconv>
#include <fstream>
#include <map>
#include <sstream>

namespace tripodsim::config {

std::vector<double> GridSpec::points() const {
  if (count < 1) {
    throw ConfigError("grid count must be >= 1");
  }
  if (count == 1) {
    return {min};
  }
  if (!(max > min)) {
    throw ConfigError("grid must be strictly increasing (max > min)");
  }
  std::vector<double> pts(count);
  for (int i = 0; i < count; ++i) {
    pts[i] = min + (max - min) * (static_cast<double>(i) / (count - 1));
  }
  pts.front() = min;
  pts.back() = max;
  return pts;
}

namespace {

std::string trim(const std::string& s) {
  std::size_t a = 0;
  std::size_t b = s.size();
  while (a < b && std::isspace(static_cast<unsigned char>(s[a]))) ++a;
  while (b > a && std::isspace(static_cast<unsigned char>(s[b - 1]))) --b;
  return s.substr(a, b - a);
}

// section -> key -> value, with duplicate keys rejected
using SectionMap = std::map<std::string, std::map<std::string, std::string>>;

SectionMap tokenize(const std::string& text) {
  SectionMap sections;
  std::istringstream in(text);
  std::string line;
  std::string current;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (const auto hash = line.find('#'); hash != std::string::npos) {
      line.erase(hash);
    }
    line = trim(line);
    if (line.empty()) continue;
    if (line.front() == '[') {
      if (line.back() != ']') {
        throw ConfigError("line " + std::to_string(lineno) + ": unterminated section header");
      }
      current = trim(line.substr(1, line.size() - 2));
      if (current.empty()) {
        throw ConfigError("line " + std::to_string(lineno) + ": empty section name");
      }
      sections[current];  // register even if empty
      continue;
    }
    const auto eq = line.find('=');
    if (eq == std::string::npos) {
      throw ConfigError("line " + std::to_string(lineno) + ": expected key = value");
    }
    if (current.empty()) {
      throw ConfigError("line " + std::to_string(lineno) + ": key outside any [section]");
    }
    const std::string key = trim(line.substr(0, eq));
    const std::string value = trim(line.substr(eq + 1));
    if (key.empty()) {
      throw ConfigError("line " + std::to_string(lineno) + ": empty key");
    }
    if (!sections[current].emplace(key, value).second) {
      throw ConfigError("duplicate key " + current + "." + key);
    }
  }
  return sections;
}

double parse_double(const std::string& section, const std::string& key,
                    const std::string& value) {
  try {
    std::size_t pos = 0;
    const double v = std::stod(value, &pos);
    if (pos != value.size()) throw std::invalid_argument("trailing characters");
    return v;
  } catch (const std::exception&) {
    throw ConfigError("bad number for " + section + "." + key + ": '" + value + "'");
  }
}

int parse_int(const std::string& section, const std::string& key,
              const std::string& value) {
  try {
    std::size_t pos = 0;
    const int v = std::stoi(value, &pos);
    if (pos != value.size()) throw std::invalid_argument("trailing characters");
    return v;
  } catch (const std::exception&) {
    throw ConfigError("bad integer for " + section + "." + key + ": '" + value + "'");
  }
}

bool parse_bool(const std::string& section, const std::string& key,
                const std::string& value) {
  if (value == "true" || value == "1" || value == "yes") return true;
  if (value == "false" || value == "0" || value == "no") return false;
  throw ConfigError("bad boolean for " + section + "." + key + ": '" + value + "'");
}

std::vector<double> parse_double_list(const std::string& section, const std::string& key,
                                      const std::string& value) {
  std::vector<double> out;
  std::istringstream in(value);
  std::string tok;
  while (in >> tok) {
    out.push_back(parse_double(section, key, tok));
  }
  if (out.empty()) {
    throw ConfigError("empty list for " + section + "." + key);
  }
  return out;
}

// Pulls typed values out of one section and complains about leftovers.
class SectionReader {
 public:
  SectionReader(std::string name, std::map<std::string, std::string> kv)
      : name_(std::move(name)), kv_(std::move(kv)) {}

  void get(const char* key, double* out) {
    if (auto it = kv_.find(key); it != kv_.end()) {
      *out = parse_double(name_, key, it->second);
      kv_.erase(it);
    }
  }
  void get(const char* key, int* out) {
    if (auto it = kv_.find(key); it != kv_.end()) {
      *out = parse_int(name_, key, it->second);
      kv_.erase(it);
    }
  }
  void get(const char* key, bool* out) {
    if (auto it = kv_.find(key); it != kv_.end()) {
      *out = parse_bool(name_, key, it->second);
      kv_.erase(it);
    }
  }
  void get(const char* key, std::string* out) {
    if (auto it = kv_.find(key); it != kv_.end()) {
      *out = it->second;
      kv_.erase(it);
    }
  }
  void get(const char* key, std::vector<double>* out) {
    if (auto it = kv_.find(key); it != kv_.end()) {
      *out = parse_double_list(name_, key, it->second);
      kv_.erase(it);
    }
  }

  void finish() const {
    if (!kv_.empty()) {
      throw ConfigError("unknown key " + name_ + "." + kv_.begin()->first);
    }
  }

 private:
  std::string name_;
  std::map<std::string, std::string> kv_;
};

DeviceConfig read_device(SectionReader& r) {
  DeviceConfig d;
  r.get("cavity_omega_ghz", &d.cavity_omega_ghz);
  for (int q = 0; q < 3; ++q) {
    const std::string prefix = "q" + std::to_string(q + 1) + "_";
    QubitConfig& qc = d.qubits[q];
    r.get((prefix + "e_c_ghz").c_str(), &qc.e_c_ghz);
    r.get((prefix + "e_j_max_ghz").c_str(), &qc.e_j_max_ghz);
    r.get((prefix + "cap_ratio").c_str(), &qc.cap_ratio);
    r.get((prefix + "phi0").c_str(), &qc.phi0);
    r.get((prefix + "g_cal_ghz").c_str(), &qc.g_cal_ghz);
    r.get((prefix + "drive_f").c_str(), &qc.drive_f);
  }
  return d;
}

}  // namespace

RunConfig parse_config(const std::string& text) {
  SectionMap sections = tokenize(text);
  RunConfig cfg;
  for (auto& [name, kv] : sections) {
    SectionReader r(name, std::move(kv));
    if (name == "device") {
      cfg.device = read_device(r);
    } else if (name == "loop") {
      LoopConfig l;
      r.get("omega0_tau", &l.omega0_tau);
      r.get("alpha", &l.alpha);
      r.get("beta", &l.beta);
      r.get("steps", &l.steps);
      cfg.loop = l;
    } else if (name == "sweep") {
      SweepConfig s;
      r.get("alpha_min", &s.alpha.min);
      r.get("alpha_max", &s.alpha.max);
      r.get("alpha_count", &s.alpha.count);
      r.get("beta_min", &s.beta.min);
      r.get("beta_max", &s.beta.max);
      r.get("beta_count", &s.beta.count);
      r.get("steps", &s.steps);
      cfg.sweep = s;
    } else if (name == "dynamics") {
      DynamicsConfig dy;
      r.get("omega0_tau", &dy.omega0_tau);
      r.get("alpha", &dy.alpha);
      r.get("beta", &dy.beta);
      r.get("steps_factor", &dy.steps_factor);
      r.get("wilson_steps", &dy.wilson_steps);
      cfg.dynamics = dy;
    } else if (name == "output") {
      r.get("directory", &cfg.output.directory);
      r.get("csv", &cfg.output.csv);
    } else {
      throw ConfigError("unknown section [" + name + "]");
    }
    r.finish();
  }
  return cfg;
}

RunConfig load_config(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) {
    throw IoError("cannot read config file: " + path);
  }
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_config(buf.str());
}

}  // namespace tripodsim::config
