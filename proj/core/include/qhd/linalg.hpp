#pragma once

#include <map>
#include <vector>

#include "qhd/field.hpp"

namespace qhd {

// Row space in reduced echelon form over an exact field. Rows are dense
// vectors of a fixed width; pivots are kept monic and cleared above and
// below, so membership testing is a single reduction pass.
template <Field K>
class RowSpace {
 public:
  explicit RowSpace(int cols) : cols_(cols) {}

  int cols() const { return cols_; }
  int rank() const { return static_cast<int>(rows_.size()); }

  // Reduces v against the current rows in place; afterwards v is zero iff it
  // was in the span.
  void reduce(std::vector<K>& v) const {
    for (const auto& [piv, row] : rows_) {
      if (v[piv].is_zero()) continue;
      K c = v[piv];
      for (int j = piv; j < cols_; ++j) {
        K t = row[j];
        t *= c;
        v[j] -= t;
      }
    }
  }

  bool contains(std::vector<K> v) const {
    reduce(v);
    for (const auto& x : v)
      if (!x.is_zero()) return false;
    return true;
  }

  // Adds v to the space. Returns true when the rank grew.
  bool insert(std::vector<K> v) {
    reduce(v);
    int piv = -1;
    for (int j = 0; j < cols_; ++j)
      if (!v[j].is_zero()) {
        piv = j;
        break;
      }
    if (piv < 0) return false;
    K inv = v[piv].inverse();
    for (int j = piv; j < cols_; ++j) v[j] *= inv;
    for (auto& [p, row] : rows_) {
      if (row[piv].is_zero()) continue;
      K c = row[piv];
      for (int j = piv; j < cols_; ++j) {
        K t = v[j];
        t *= c;
        row[j] -= t;
      }
    }
    rows_.emplace(piv, std::move(v));
    return true;
  }

  const std::map<int, std::vector<K>>& rows() const { return rows_; }

 private:
  int cols_;
  std::map<int, std::vector<K>> rows_;
};

}  // namespace qhd
