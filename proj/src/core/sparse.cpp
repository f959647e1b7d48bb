#include "whlab/core/sparse.hpp"

#include <algorithm>

namespace whlab {

void axpy(SparseVector& y, Scalar const& a, SparseVector const& x) {
  if (a.is_zero()) return;
  for (auto const& [i, v] : x) {
    auto it = y.find(i);
    if (it == y.end()) {
      y.emplace(i, a * v);
    } else {
      it->second += a * v;
      if (it->second.is_zero()) y.erase(it);
    }
  }
}

SparseVector SparseEchelon::reduce(SparseVector v) const {
  auto it = v.begin();
  while (it != v.end()) {
    std::size_t idx = it->first;
    auto row = rows_.find(idx);
    if (row == rows_.end()) {
      ++it;
      continue;
    }
    Scalar c = -it->second;
    axpy(v, c, row->second);  // clears idx, touches only larger indices
    it = v.upper_bound(idx);
  }
  return v;
}

bool SparseEchelon::insert(SparseVector v) {
  v = reduce(std::move(v));
  if (v.empty()) return false;
  Scalar inv = v.begin()->second.inverse();
  if (!inv.is_one())
    for (auto& [i, c] : v) c *= inv;
  std::size_t pivot = v.begin()->first;
  rows_.emplace(pivot, std::move(v));
  return true;
}

void SparseEchelon::interreduce() {
  // later pivots never involve earlier ones, so sweep from the back
  for (auto it = rows_.rbegin(); it != rows_.rend(); ++it) {
    SparseVector& row = it->second;
    std::size_t pivot = it->first;
    Scalar one = row.begin()->second;
    row.erase(row.begin());
    row = reduce(std::move(row));
    row.emplace(pivot, one);
  }
}

Matrix sparse_kernel(Field field, std::vector<SparseVector> const& images) {
  std::size_t offset = 0;
  for (auto const& img : images)
    if (!img.empty()) offset = std::max(offset, img.rbegin()->first + 1);
  SparseEchelon ech(field);
  for (std::size_t i = 0; i < images.size(); ++i) {
    SparseVector v = images[i];
    v.emplace(offset + i, Scalar::one(field));
    ech.insert(std::move(v));
  }
  ech.interreduce();
  std::vector<SparseVector> kernel;
  for (auto const& [pivot, row] : ech.rows())
    if (pivot >= offset) kernel.push_back(row);
  Matrix out(field, kernel.size(), images.size());
  for (std::size_t k = 0; k < kernel.size(); ++k)
    for (auto const& [i, c] : kernel[k]) out.set(k, i - offset, c);
  return out;
}

std::size_t sparse_rank(Field field, std::vector<SparseVector> const& vectors) {
  SparseEchelon ech(field);
  for (auto const& v : vectors) ech.insert(v);
  return ech.rank();
}

}  // namespace whlab
