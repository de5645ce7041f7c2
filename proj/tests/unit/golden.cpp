#include "golden.hpp"

#include <fstream>
#include <map>
#include <sstream>
#include <stdexcept>

namespace testdata {

std::string path(const std::string& name) { return std::string(LYRA2RE_TEST_DATA) + "/" + name; }

namespace {

std::map<std::string, std::string> load() {
  std::ifstream in(path("reference_golden.txt"));
  if (!in) throw std::runtime_error("missing reference_golden.txt");
  std::map<std::string, std::string> out;
  std::string line;
  while (std::getline(in, line)) {
    const auto sp = line.find(' ');
    if (sp == std::string::npos) continue;
    out[line.substr(0, sp)] = line.substr(sp + 1);
  }
  return out;
}

}  // namespace

const std::string& golden(const std::string& key) {
  static const auto table = load();
  const auto it = table.find(key);
  if (it == table.end()) throw std::runtime_error("golden key not found: " + key);
  return it->second;
}

std::vector<std::uint64_t> golden_words(const std::string& key) {
  std::istringstream is(golden(key));
  std::vector<std::uint64_t> w;
  std::string tok;
  while (is >> tok) w.push_back(std::stoull(tok, nullptr, 16));
  return w;
}

}  // namespace testdata
