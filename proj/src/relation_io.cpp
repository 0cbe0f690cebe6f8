#include "nforge/relation_io.hpp"

#include <fstream>
#include <sstream>
#include <stdexcept>

namespace nforge {

namespace {

std::string strip_comment(const std::string& line) {
  auto hash = line.find('#');
  return hash == std::string::npos ? line : line.substr(0, hash);
}

}  // namespace

RelationLoad load_relation(std::istream& in, bool complete) {
  std::string line;
  int lineno = 0;
  int n = -1;
  std::vector<PointPair> pairs;
  while (std::getline(in, line)) {
    ++lineno;
    std::istringstream row(strip_comment(line));
    if (n < 0) {
      if (!(row >> n)) {
        std::string rest;
        if (row >> rest) {
          throw std::invalid_argument("line " + std::to_string(lineno) +
                                      ": expected the universe size");
        }
        continue;  // blank or comment-only line before the header
      }
      std::string rest;
      if (row >> rest) {
        throw std::invalid_argument("line " + std::to_string(lineno) +
                                    ": junk after the universe size");
      }
      continue;
    }
    int i, j;
    if (!(row >> i)) continue;  // blank line
    if (!(row >> j)) {
      throw std::invalid_argument("line " + std::to_string(lineno) +
                                  ": expected \"i j\"");
    }
    std::string rest;
    if (row >> rest) {
      throw std::invalid_argument("line " + std::to_string(lineno) +
                                  ": junk after the pair");
    }
    pairs.emplace_back(i, j);
  }
  if (n < 0) {
    throw std::invalid_argument("relation file has no universe size line");
  }
  Universe u(n);
  if (complete) {
    std::vector<PointPair> added;
    QuasiOrder r = QuasiOrder::closure(u, pairs, &added);
    return {std::move(r), std::move(added)};
  }
  return {QuasiOrder::from_pairs(u, pairs), {}};
}

RelationLoad load_relation_text(const std::string& text, bool complete) {
  std::istringstream in(text);
  return load_relation(in, complete);
}

RelationLoad load_relation_file(const std::string& path, bool complete) {
  std::ifstream in(path);
  if (!in) {
    throw std::invalid_argument("cannot open relation file " + path);
  }
  return load_relation(in, complete);
}

std::string format_relation(const QuasiOrder& r) {
  std::string out = std::to_string(r.size()) + "\n";
  for (auto [i, j] : r.pairs()) {
    if (i != j) {
      out += std::to_string(i) + " " + std::to_string(j) + "\n";
    }
  }
  return out;
}

}  // namespace nforge
