#ifndef NFORGE_RELATION_IO_HPP_
#define NFORGE_RELATION_IO_HPP_

#include <iosfwd>
#include <string>
#include <vector>

#include "nforge/relation.hpp"

namespace nforge {

// Text format: first non-comment line is n; each following non-comment line
// is "i j" (0-based) meaning i R j. '#' starts a comment. Diagonal pairs are
// implied. Without `complete`, a non-transitive pair set is an error naming
// a missing pair; with it, the reflexive-transitive closure is taken and
// `added` receives the introduced pairs.
struct RelationLoad {
  QuasiOrder relation;
  std::vector<PointPair> added;  // closure additions (empty when strict)
};

RelationLoad load_relation(std::istream& in, bool complete = false);
RelationLoad load_relation_text(const std::string& text, bool complete = false);
RelationLoad load_relation_file(const std::string& path, bool complete = false);

// The same format back, off-diagonal pairs only, sorted.
std::string format_relation(const QuasiOrder& r);

}  // namespace nforge

#endif  // NFORGE_RELATION_IO_HPP_
