#include "icoflux/params.hpp"

#include <cstdlib>
#include <fstream>
#include <map>
#include <sstream>
#include <stdexcept>

namespace icoflux {

ParamValue parse_param_value(const std::string& text) {
  if (auto r = parse_rational(text)) return ParamValue::from_rational(*r);
  char* end = nullptr;
  std::string trimmed = text;
  double v = std::strtod(trimmed.c_str(), &end);
  if (end == trimmed.c_str() || *end != '\0')
    throw std::invalid_argument("cannot parse numeric value '" + text + "'");
  return ParamValue::from_double(v);
}

ParamsFile parse_params_text(const std::string& text) {
  std::map<std::string, std::string> kv;
  std::istringstream in(text);
  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (auto hash = line.find('#'); hash != std::string::npos) line.resize(hash);
    auto strip = [](std::string s) {
      auto b = s.find_first_not_of(" \t\r");
      if (b == std::string::npos) return std::string();
      auto e = s.find_last_not_of(" \t\r");
      return s.substr(b, e - b + 1);
    };
    std::string stripped = strip(line);
    if (stripped.empty()) continue;
    auto eq = stripped.find('=');
    if (eq == std::string::npos)
      throw std::invalid_argument("params line " + std::to_string(lineno) +
                                  ": expected key = value");
    std::string key = strip(stripped.substr(0, eq));
    std::string value = strip(stripped.substr(eq + 1));
    if (key.empty() || value.empty())
      throw std::invalid_argument("params line " + std::to_string(lineno) +
                                  ": empty key or value");
    if (!kv.emplace(key, value).second)
      throw std::invalid_argument("duplicate key '" + key + "'");
  }

  ParamsFile out;
  const char* names[9] = {"a", "b", "c", "d", "c1", "c2", "c3", "c4", "c5"};
  std::array<ParamValue*, 9> fields = {
      &out.params.a,  &out.params.b,  &out.params.c,  &out.params.d, &out.params.c1,
      &out.params.c2, &out.params.c3, &out.params.c4, &out.params.c5};
  for (int i = 0; i < 9; ++i) {
    auto it = kv.find(names[i]);
    if (it == kv.end())
      throw std::invalid_argument(std::string("missing coefficient '") + names[i] + "'");
    *fields[i] = parse_param_value(it->second);
    kv.erase(it);
  }
  if (auto it = kv.find("seed"); it != kv.end()) {
    out.seed = std::strtoull(it->second.c_str(), nullptr, 10);
    kv.erase(it);
  }
  if (!kv.empty())
    throw std::invalid_argument("unknown key '" + kv.begin()->first + "'");
  out.params.validate();
  return out;
}

ParamsFile load_params_file(const std::string& path) {
  std::ifstream f(path);
  if (!f) throw std::invalid_argument("cannot open params file '" + path + "'");
  std::stringstream ss;
  ss << f.rdbuf();
  return parse_params_text(ss.str());
}

}  // namespace icoflux
