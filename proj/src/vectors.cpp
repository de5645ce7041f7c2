#include "lyra2re/vectors.hpp"

#include <istream>
#include <ostream>
#include <stdexcept>

#include "lyra2re/chain.hpp"

namespace lyra2re {

std::vector<HeaderBytes> corpus_headers(std::size_t count, std::uint64_t seed) {
  std::vector<HeaderBytes> out(count);
  std::uint64_t state = seed;
  for (auto& h : out) {
    for (std::size_t w = 0; w < 10; ++w) {
      std::uint64_t z = (state += 0x9e3779b97f4a7c15ULL);
      z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
      z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
      store_le64(h.data() + 8 * w, z ^ (z >> 31));
    }
  }
  return out;
}

VectorRecord compute_record(const HeaderBytes& header) {
  VectorRecord r;
  r.header = header;
  const auto a = stage_outputs(header, ChainVariant::rev2);
  const auto b = stage_outputs(header, ChainVariant::rev3);
  std::copy(a.begin(), a.end(), r.rev2.begin());
  std::copy(b.begin(), b.end(), r.rev3.begin());
  return r;
}

std::string format_record(const VectorRecord& r) {
  std::string s = to_hex(r.header);
  for (const auto& d : r.rev2) s += '\t' + to_hex(d);
  for (const auto& d : r.rev3) s += '\t' + to_hex(d);
  return s;
}

VectorRecord parse_record(std::string_view line, std::size_t lineno) {
  std::vector<std::string_view> fields;
  std::size_t pos = 0;
  while (true) {
    const auto tab = line.find('\t', pos);
    fields.push_back(line.substr(pos, tab == std::string_view::npos ? std::string_view::npos : tab - pos));
    if (tab == std::string_view::npos) break;
    pos = tab + 1;
  }
  const auto where = "line " + std::to_string(lineno);
  if (fields.size() != 13)
    throw std::invalid_argument(where + ": expected 13 tab-separated fields, got " + std::to_string(fields.size()));
  VectorRecord r;
  try {
    r.header = header_from_hex(fields[0]);
  } catch (const std::invalid_argument& e) {
    throw std::invalid_argument(where + ", header: " + e.what());
  }
  for (std::size_t i = 0; i < 12; ++i) {
    try {
      (i < 7 ? r.rev2[i] : r.rev3[i - 7]) = digest_from_hex(fields[i + 1]);
    } catch (const std::invalid_argument& e) {
      throw std::invalid_argument(where + ", field " + std::to_string(i + 1) + ": " + e.what());
    }
  }
  return r;
}

void write_corpus(std::ostream& out, std::size_t count, std::uint64_t seed) {
  for (const auto& h : corpus_headers(count, seed)) out << format_record(compute_record(h)) << '\n';
}

CorpusCheck verify_corpus(std::istream& in) {
  CorpusCheck check;
  std::string line;
  std::size_t lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty()) continue;
    const auto want = parse_record(line, lineno);
    const auto got = compute_record(want.header);
    ++check.records;
    auto compare = [&](ChainVariant v, std::span<const Digest256> exp, std::span<const Digest256> act) {
      const auto kinds = chain_stages(v);
      for (std::size_t i = 0; i < exp.size(); ++i) {
        if (exp[i] != act[i]) {
          check.mismatches.push_back({lineno,
                                      std::string(variant_name(v)) + "/" + std::to_string(i) + " " +
                                          std::string(stage_name(kinds[i])),
                                      to_hex(exp[i]), to_hex(act[i])});
          return true;
        }
      }
      return false;
    };
    if (!compare(ChainVariant::rev2, want.rev2, got.rev2)) compare(ChainVariant::rev3, want.rev3, got.rev3);
  }
  return check;
}

}  // namespace lyra2re
