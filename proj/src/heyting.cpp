#include "nforge/heyting.hpp"

#include <algorithm>
#include <stdexcept>

namespace nforge {

PointSet relative_pseudocomplement(const SetLattice& l, PointSet x,
                                   PointSet y) {
  (void)l.index_of(x);
  (void)l.index_of(y);
  return l.interior(x.complement() | y);
}

PointSet pseudocomplement(const SetLattice& l, PointSet x) {
  PointSet star = relative_pseudocomplement(l, x, l.bottom());
  for (const PointSet& z : l.elements()) {
    bool disjoint = (x & z).is_empty();
    if (disjoint != z.subset_of(star)) {
      throw std::logic_error("pseudocomplement adjunction failed at " +
                             x.to_string() + " / " + z.to_string());
    }
  }
  return star;
}

DenseElements dense_elements(const SetLattice& l) {
  DenseElements out;
  PointSet acc = PointSet::full(l.universe());
  for (const PointSet& x : l.elements()) {
    if (pseudocomplement(l, x).is_empty()) {
      out.dense.push_back(x);
      acc = acc & x;
    }
  }
  if (!out.dense.empty() &&
      std::binary_search(out.dense.begin(), out.dense.end(), acc)) {
    out.least = acc;
  }
  return out;
}

Congruence::Congruence(SetLattice l, std::vector<int> class_of)
    : lattice_(std::move(l)), class_of_(std::move(class_of)) {
  if (static_cast<int>(class_of_.size()) != lattice_.size()) {
    throw std::invalid_argument("congruence class map has wrong size");
  }
  // Renumber ids by first appearance so partitions compare canonically.
  std::vector<int> remap(class_of_.size(), -1);
  int next = 0;
  for (int& c : class_of_) {
    if (c < 0 || c >= static_cast<int>(class_of_.size())) {
      throw std::invalid_argument("congruence class id out of range");
    }
    if (remap[static_cast<std::size_t>(c)] == -1) {
      remap[static_cast<std::size_t>(c)] = next++;
    }
    c = remap[static_cast<std::size_t>(c)];
  }
  num_classes_ = next;
}

bool Congruence::relates(PointSet a, PointSet b) const {
  return class_of(lattice_.index_of(a)) == class_of(lattice_.index_of(b));
}

bool is_filter(const SetLattice& l, const std::vector<PointSet>& f) {
  if (f.empty()) return false;
  for (const PointSet& a : f) {
    if (!l.contains(a)) return false;
    for (const PointSet& b : f) {
      if (!std::count(f.begin(), f.end(), a & b)) return false;
    }
    for (const PointSet& up : l.elements()) {
      if (a.subset_of(up) && !std::count(f.begin(), f.end(), up)) return false;
    }
  }
  return true;
}

Congruence filter_congruence(const SetLattice& l, std::vector<PointSet> f) {
  std::sort(f.begin(), f.end());
  f.erase(std::unique(f.begin(), f.end()), f.end());
  if (!is_filter(l, f)) {
    throw std::invalid_argument(
        "filter congruence needs a nonempty, meet-closed, upward-closed "
        "filter");
  }
  // x ~ y iff x & z = y & z for some z in F; with F finite and meet-closed
  // this is equivalent to equal traces on the least filter element. The
  // trace may fall outside the family, so classes are keyed on raw masks.
  PointSet least = l.top();
  for (const PointSet& z : f) least = least & z;
  std::vector<std::uint64_t> traces;
  traces.reserve(static_cast<std::size_t>(l.size()));
  for (int i = 0; i < l.size(); ++i) {
    traces.push_back((l.element(i) & least).bits());
  }
  std::vector<int> ids(traces.size());
  for (std::size_t i = 0; i < traces.size(); ++i) {
    auto first = std::find(traces.begin(), traces.begin() + static_cast<long>(i),
                           traces[i]);
    ids[i] = static_cast<int>(first - traces.begin());
  }
  return Congruence(l, std::move(ids));
}

Congruence trace_congruence(const SetLattice& l, PointSet a) {
  (void)l.index_of(a);
  for (const PointSet& d : dense_elements(l).dense) {
    if (!a.subset_of(d)) {
      throw std::invalid_argument(
          "trace congruence needs a below every dense element; " +
          a.to_string() + " is not below " + d.to_string());
    }
  }
  std::vector<PointSet> principal;
  for (const PointSet& x : l.elements()) {
    if (a.subset_of(x)) principal.push_back(x);
  }
  return filter_congruence(l, std::move(principal));
}

Congruence glivenko_congruence(const SetLattice& l) {
  std::vector<std::uint64_t> stars;
  stars.reserve(static_cast<std::size_t>(l.size()));
  for (const PointSet& x : l.elements()) {
    stars.push_back(pseudocomplement(l, x).bits());
  }
  std::vector<int> ids(stars.size());
  for (std::size_t i = 0; i < stars.size(); ++i) {
    auto first = std::find(stars.begin(), stars.begin() + static_cast<long>(i),
                           stars[i]);
    ids[i] = static_cast<int>(first - stars.begin());
  }
  Congruence gamma(l, std::move(ids));
  if (!(gamma == filter_congruence(l, dense_elements(l).dense))) {
    throw std::logic_error(
        "Glivenko partition differs from the dense-filter congruence");
  }
  return gamma;
}

bool is_congruence(const Congruence& c) {
  const SetLattice& l = c.lattice();
  // Checking each element against its class representative suffices: the
  // remaining pairs follow by transitivity of the class relation.
  std::vector<int> rep(static_cast<std::size_t>(c.num_classes()), -1);
  for (int i = 0; i < l.size(); ++i) {
    int cls = c.class_of(i);
    if (rep[static_cast<std::size_t>(cls)] == -1) {
      rep[static_cast<std::size_t>(cls)] = i;
      continue;
    }
    PointSet a = l.element(rep[static_cast<std::size_t>(cls)]);
    PointSet b = l.element(i);
    for (int k = 0; k < l.size(); ++k) {
      PointSet z = l.element(k);
      if (!c.relates(a | z, b | z)) return false;
      if (!c.relates(a & z, b & z)) return false;
      if (!c.relates(relative_pseudocomplement(l, a, z),
                     relative_pseudocomplement(l, b, z))) {
        return false;
      }
      if (!c.relates(relative_pseudocomplement(l, z, a),
                     relative_pseudocomplement(l, z, b))) {
        return false;
      }
    }
  }
  return true;
}

bool is_boolean(const Congruence& c) {
  const SetLattice& l = c.lattice();
  int zero = c.class_of(l.index_of(l.bottom()));
  int one = c.class_of(l.index_of(l.top()));
  // Quotient operations are induced classwise; search complements there.
  for (int i = 0; i < l.size(); ++i) {
    bool complemented = false;
    for (int j = 0; j < l.size() && !complemented; ++j) {
      PointSet a = l.element(i), b = l.element(j);
      complemented = c.class_of(l.index_of(a | b)) == one &&
                     c.class_of(l.index_of(a & b)) == zero;
    }
    if (!complemented) return false;
  }
  return true;
}

FiniteLattice::FiniteLattice(int size, const std::function<bool(int, int)>& leq)
    : n_(size), leq_(static_cast<std::size_t>(size * size)), bottom_(-1),
      top_(-1) {
  if (size < 1) throw std::invalid_argument("lattice must be nonempty");
  for (int a = 0; a < n_; ++a) {
    for (int b = 0; b < n_; ++b) {
      leq_[static_cast<std::size_t>(a) * n_ + b] = leq(a, b) ? 1 : 0;
    }
  }
  for (int a = 0; a < n_; ++a) {
    bool is_bot = true, is_top = true;
    for (int b = 0; b < n_; ++b) {
      is_bot = is_bot && this->leq(a, b);
      is_top = is_top && this->leq(b, a);
    }
    if (is_bot) bottom_ = a;
    if (is_top) top_ = a;
  }
  if (bottom_ < 0 || top_ < 0) {
    throw std::invalid_argument("order has no bounds; not a lattice carrier");
  }
}

int FiniteLattice::join(int a, int b) const {
  int best = -1;
  for (int z = 0; z < n_; ++z) {
    if (leq(a, z) && leq(b, z) && (best == -1 || leq(z, best))) best = z;
  }
  // Least upper bound must be unique for a lattice; verify minimality.
  for (int z = 0; z < n_; ++z) {
    if (leq(a, z) && leq(b, z) && !leq(best, z)) {
      throw std::logic_error("join is not unique; order is not a lattice");
    }
  }
  return best;
}

int FiniteLattice::meet(int a, int b) const {
  int best = -1;
  for (int z = 0; z < n_; ++z) {
    if (leq(z, a) && leq(z, b) && (best == -1 || leq(best, z))) best = z;
  }
  for (int z = 0; z < n_; ++z) {
    if (leq(z, a) && leq(z, b) && !leq(z, best)) {
      throw std::logic_error("meet is not unique; order is not a lattice");
    }
  }
  return best;
}

std::vector<int> FiniteLattice::lower_covers(int a) const {
  std::vector<int> out;
  for (int b = 0; b < n_; ++b) {
    if (b == a || !leq(b, a)) continue;
    bool covered = true;
    for (int z = 0; z < n_ && covered; ++z) {
      if (z != a && z != b && leq(b, z) && leq(z, a)) covered = false;
    }
    if (covered) out.push_back(b);
  }
  return out;
}

std::vector<std::pair<int, int>> FiniteLattice::covers() const {
  std::vector<std::pair<int, int>> out;
  for (int a = 0; a < n_; ++a) {
    for (int b : lower_covers(a)) out.emplace_back(b, a);
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<int> FiniteLattice::join_irreducibles() const {
  std::vector<int> out;
  for (int a = 0; a < n_; ++a) {
    if (lower_covers(a).size() == 1) out.push_back(a);
  }
  if (n_ <= 20) {
    // Cross-check: a is completely join-irreducible iff it differs from the
    // join of its strict downset (and is not the bottom).
    for (int a = 0; a < n_; ++a) {
      std::vector<int> below;
      for (int b = 0; b < n_; ++b) {
        if (b != a && leq(b, a)) below.push_back(b);
      }
      bool irreducible = a != bottom_ && join_all(below) != a;
      bool listed = std::count(out.begin(), out.end(), a) > 0;
      if (irreducible != listed) {
        throw std::logic_error(
            "join-irreducible routes disagree at element " + std::to_string(a));
      }
    }
  }
  return out;
}

int FiniteLattice::relative_pseudocomplement(int a, int b) const {
  int best = -1;
  for (int z = 0; z < n_; ++z) {
    if (leq(meet(a, z), b) && (best == -1 || leq(best, z))) best = z;
  }
  for (int z = 0; z < n_; ++z) {
    if (leq(meet(a, z), b) && !leq(z, best)) {
      throw std::logic_error("relative pseudocomplement does not exist");
    }
  }
  return best;
}

int FiniteLattice::join_all(const std::vector<int>& xs) const {
  int acc = bottom_;
  for (int x : xs) acc = join(acc, x);
  return acc;
}

int FiniteLattice::meet_all(const std::vector<int>& xs) const {
  int acc = top_;
  for (int x : xs) acc = meet(acc, x);
  return acc;
}

}  // namespace nforge
