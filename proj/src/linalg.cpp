#include "w22/linalg.hpp"

#include <algorithm>
#include <stdexcept>

namespace w22::linalg {

SparseVector axpy(const SparseVector& a, const Rational& c, const SparseVector& b) {
  SparseVector out;
  out.reserve(a.size() + b.size());
  std::size_t i = 0, j = 0;
  while (i < a.size() || j < b.size()) {
    if (j == b.size() || (i < a.size() && a[i].first < b[j].first)) {
      out.push_back(a[i++]);
    } else if (i == a.size() || b[j].first < a[i].first) {
      out.emplace_back(b[j].first, c * b[j].second);
      ++j;
    } else {
      Rational v = a[i].second + c * b[j].second;
      if (!is_zero(v)) out.emplace_back(a[i].first, std::move(v));
      ++i;
      ++j;
    }
  }
  return out;
}

SparseVector EchelonBasis::reduce(SparseVector v) const {
  std::size_t pos = 0;
  while (pos < v.size()) {
    auto it = rows_.find(v[pos].first);
    if (it == rows_.end()) {
      ++pos;
      continue;
    }
    const Rational c = -v[pos].second;
    // Entries before `pos` are untouched: every row starts at its pivot.
    SparseVector tail(v.begin() + static_cast<std::ptrdiff_t>(pos), v.end());
    tail = axpy(tail, c, it->second);
    v.resize(pos);
    v.insert(v.end(), tail.begin(), tail.end());
  }
  return v;
}

void EchelonBasis::insert_reduced(SparseVector v) {
  if (v.empty()) throw std::invalid_argument("cannot insert the zero vector");
  const Rational lead = v.front().second;
  if (lead != 1) {
    const Rational inv = 1 / lead;
    for (auto& [i, x] : v) x *= inv;
  }
  const std::size_t pivot = v.front().first;
  if (!rows_.emplace(pivot, std::move(v)).second) throw std::logic_error("pivot already occupied");
}

bool EchelonBasis::insert(SparseVector v) {
  v = reduce(std::move(v));
  if (v.empty()) return false;
  insert_reduced(std::move(v));
  return true;
}

void EchelonBasis::make_reduced() {
  // Process pivots right to left so each row is cleared against fully
  // reduced rows below it.
  for (auto it = rows_.rbegin(); it != rows_.rend(); ++it) {
    SparseVector& row = it->second;
    std::size_t pos = 1;
    while (pos < row.size()) {
      auto other = rows_.find(row[pos].first);
      if (other == rows_.end() || other->first == it->first) {
        ++pos;
        continue;
      }
      const Rational c = -row[pos].second;
      SparseVector tail(row.begin() + static_cast<std::ptrdiff_t>(pos), row.end());
      tail = axpy(tail, c, other->second);
      row.resize(pos);
      row.insert(row.end(), tail.begin(), tail.end());
    }
  }
}

std::vector<SparseVector> EchelonBasis::rows() const {
  std::vector<SparseVector> out;
  out.reserve(rows_.size());
  for (const auto& [p, r] : rows_) out.push_back(r);
  return out;
}

std::vector<std::size_t> EchelonBasis::pivots() const {
  std::vector<std::size_t> out;
  out.reserve(rows_.size());
  for (const auto& [p, r] : rows_) out.push_back(p);
  return out;
}

std::vector<SparseVector> nullspace(const std::vector<SparseVector>& columns) {
  // Augment each image with a tag coordinate past every image index; a
  // residual whose leading entry is a tag is a kernel element.
  std::size_t tag = 0;
  for (const auto& c : columns) {
    if (!c.empty()) tag = std::max(tag, c.back().first + 1);
  }
  EchelonBasis images;
  EchelonBasis kernel;
  for (std::size_t j = 0; j < columns.size(); ++j) {
    SparseVector v = columns[j];
    v.emplace_back(tag + j, Rational(1));
    v = images.reduce(std::move(v));
    if (v.front().first >= tag) {
      for (auto& [i, x] : v) i -= tag;
      kernel.insert(std::move(v));
    } else {
      images.insert_reduced(std::move(v));
    }
  }
  kernel.make_reduced();
  return kernel.rows();
}

}  // namespace w22::linalg
