#include "nforge/relation.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>
#include <string>

namespace nforge {

namespace {

std::string pair_str(int i, int j) {
  return "(" + std::to_string(i) + "," + std::to_string(j) + ")";
}

bool rows_transitive(const std::vector<std::uint64_t>& rows, int n,
                     int* bad_i = nullptr, int* bad_k = nullptr) {
  for (int i = 0; i < n; ++i) {
    std::uint64_t reach = rows[i];
    for (int j = 0; j < n; ++j) {
      if ((rows[i] >> j) & 1) reach |= rows[j];
    }
    if (reach != rows[i]) {
      if (bad_i) {
        *bad_i = i;
        std::uint64_t missing = reach & ~rows[i];
        *bad_k = std::countr_zero(missing);
      }
      return false;
    }
  }
  return true;
}

std::vector<std::uint64_t> rows_from_pairs(Universe u,
                                           const std::vector<PointPair>& pairs) {
  int n = u.size();
  std::vector<std::uint64_t> rows(static_cast<std::size_t>(n), 0);
  for (int i = 0; i < n; ++i) rows[i] |= std::uint64_t{1} << i;
  for (auto [i, j] : pairs) {
    if (i < 0 || i >= n || j < 0 || j >= n) {
      throw std::invalid_argument("relation pair " + pair_str(i, j) +
                                  " outside universe of size " +
                                  std::to_string(n));
    }
    rows[i] |= std::uint64_t{1} << j;
  }
  return rows;
}

void close_rows(std::vector<std::uint64_t>& rows, int n) {
  // Iterate successor-set composition to a fixpoint; n <= 64 makes this cheap.
  bool changed = true;
  while (changed) {
    changed = false;
    for (int i = 0; i < n; ++i) {
      std::uint64_t next = rows[i];
      for (int j = 0; j < n; ++j) {
        if ((rows[i] >> j) & 1) next |= rows[j];
      }
      if (next != rows[i]) {
        rows[i] = next;
        changed = true;
      }
    }
  }
}

}  // namespace

QuasiOrder QuasiOrder::from_rows(Universe u, std::vector<std::uint64_t> rows) {
  int n = u.size();
  if (static_cast<int>(rows.size()) != n) {
    throw std::invalid_argument("row count does not match universe size");
  }
  for (int i = 0; i < n; ++i) {
    if (rows[i] & ~u.full_mask()) {
      throw std::invalid_argument("successor set of " + std::to_string(i) +
                                  " leaves the universe");
    }
    if (!((rows[i] >> i) & 1)) {
      throw std::invalid_argument("relation is not reflexive at " +
                                  std::to_string(i));
    }
  }
  int bi = 0, bk = 0;
  if (!rows_transitive(rows, n, &bi, &bk)) {
    throw std::invalid_argument("relation is not transitive: pair " +
                                pair_str(bi, bk) + " is missing");
  }
  return QuasiOrder(u, std::move(rows));
}

QuasiOrder QuasiOrder::identity(Universe u) {
  std::vector<std::uint64_t> rows(static_cast<std::size_t>(u.size()));
  for (int i = 0; i < u.size(); ++i) rows[i] = std::uint64_t{1} << i;
  return QuasiOrder(u, std::move(rows));
}

QuasiOrder QuasiOrder::full(Universe u) {
  std::vector<std::uint64_t> rows(static_cast<std::size_t>(u.size()),
                                  u.full_mask());
  return QuasiOrder(u, std::move(rows));
}

QuasiOrder QuasiOrder::from_pairs(Universe u,
                                  const std::vector<PointPair>& pairs) {
  return from_rows(u, rows_from_pairs(u, pairs));
}

QuasiOrder QuasiOrder::closure(Universe u, const std::vector<PointPair>& pairs,
                               std::vector<PointPair>* added) {
  auto rows = rows_from_pairs(u, pairs);
  auto before = rows;
  close_rows(rows, u.size());
  if (added) {
    added->clear();
    for (int i = 0; i < u.size(); ++i) {
      std::uint64_t fresh = rows[i] & ~before[i];
      for (int j = 0; j < u.size(); ++j) {
        if ((fresh >> j) & 1) added->emplace_back(i, j);
      }
    }
  }
  return QuasiOrder(u, std::move(rows));
}

PointSet QuasiOrder::neighborhood(PointSet x) const {
  std::uint64_t out = 0;
  for (int i : x.members()) out |= rows_[i];
  return PointSet(u_, out);
}

PointSet QuasiOrder::closed_points() const {
  std::uint64_t s = 0;
  for (int i = 0; i < u_.size(); ++i) {
    if (rows_[i] == (std::uint64_t{1} << i)) s |= std::uint64_t{1} << i;
  }
  return PointSet(u_, s);
}

bool QuasiOrder::is_cofinal(PointSet x) const {
  for (int i = 0; i < u_.size(); ++i) {
    if ((rows_[i] & x.bits()) == 0) return false;
  }
  return true;
}

bool QuasiOrder::is_antisymmetric() const {
  for (int i = 0; i < u_.size(); ++i) {
    for (int j = i + 1; j < u_.size(); ++j) {
      if (relates(i, j) && relates(j, i)) return false;
    }
  }
  return true;
}

bool QuasiOrder::is_symmetric() const {
  for (int i = 0; i < u_.size(); ++i) {
    for (int j = 0; j < u_.size(); ++j) {
      if (relates(i, j) != relates(j, i)) return false;
    }
  }
  return true;
}

bool QuasiOrder::is_identity() const {
  for (int i = 0; i < u_.size(); ++i) {
    if (rows_[i] != (std::uint64_t{1} << i)) return false;
  }
  return true;
}

std::vector<PointPair> QuasiOrder::pairs() const {
  std::vector<PointPair> out;
  for (int i = 0; i < u_.size(); ++i) {
    for (int j = 0; j < u_.size(); ++j) {
      if (relates(i, j)) out.emplace_back(i, j);
    }
  }
  return out;
}

bool canonical_less(const QuasiOrder& a, const QuasiOrder& b) {
  return a.pairs() < b.pairs();
}

namespace {

bool keep_relation(const QuasiOrder& r, RelationClass kind) {
  switch (kind) {
    case RelationClass::All:
      return true;
    case RelationClass::PartialOrders:
      return r.is_antisymmetric();
    case RelationClass::Equivalences:
      return r.is_symmetric();
    case RelationClass::CofinalClosedPoints:
      return r.is_cofinal(r.closed_points());
  }
  return false;
}

// Relation with each point renamed through perm (new label of i = perm[i]).
QuasiOrder permuted(const QuasiOrder& r, const std::vector<int>& perm) {
  std::vector<PointPair> pairs;
  for (auto [i, j] : r.pairs()) pairs.emplace_back(perm[i], perm[j]);
  return QuasiOrder::from_pairs(r.universe(), pairs);
}

bool canonically_least_in_class(const QuasiOrder& r) {
  std::vector<int> perm(static_cast<std::size_t>(r.size()));
  std::iota(perm.begin(), perm.end(), 0);
  while (std::next_permutation(perm.begin(), perm.end())) {
    if (canonical_less(permuted(r, perm), r)) return false;
  }
  return true;
}

}  // namespace

std::vector<QuasiOrder> enumerate_quasiorders(int n, RelationClass kind,
                                              int bound, bool up_to_iso) {
  if (n < 1) throw std::invalid_argument("enumeration needs n >= 1");
  if (n > bound) {
    throw std::invalid_argument("enumeration size " + std::to_string(n) +
                                " exceeds bound " + std::to_string(bound));
  }
  Universe u(n);
  int k = n * (n - 1);
  std::vector<PointPair> off_diag;
  off_diag.reserve(static_cast<std::size_t>(k));
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      if (i != j) off_diag.emplace_back(i, j);
    }
  }

  std::vector<QuasiOrder> out;
  for (std::uint64_t m = 0; m < (std::uint64_t{1} << k); ++m) {
    std::vector<std::uint64_t> rows(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) rows[i] = std::uint64_t{1} << i;
    for (int b = 0; b < k; ++b) {
      if ((m >> b) & 1) {
        auto [i, j] = off_diag[static_cast<std::size_t>(b)];
        rows[i] |= std::uint64_t{1} << j;
      }
    }
    if (!rows_transitive(rows, n)) continue;
    QuasiOrder r = QuasiOrder::from_rows(u, std::move(rows));
    if (!keep_relation(r, kind)) continue;
    if (up_to_iso && !canonically_least_in_class(r)) continue;
    out.push_back(std::move(r));
  }
  std::sort(out.begin(), out.end(),
            [](const QuasiOrder& a, const QuasiOrder& b) {
              return canonical_less(a, b);
            });
  return out;
}

}  // namespace nforge
