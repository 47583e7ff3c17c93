#include "relhilb/linear_algebra.hpp"

namespace relhilb {

void axpy(SparseVector& a, const BigRational& c, const SparseVector& b) {
  if (c.is_zero() || b.empty()) return;
  SparseVector out;
  out.reserve(a.size() + b.size());
  auto i = a.begin();
  auto j = b.begin();
  while (i != a.end() || j != b.end()) {
    if (j == b.end() || (i != a.end() && i->first < j->first)) {
      out.push_back(std::move(*i++));
    } else if (i == a.end() || j->first < i->first) {
      out.emplace_back(j->first, c * j->second);
      ++j;
    } else {
      BigRational s = i->second + c * j->second;
      if (!s.is_zero()) out.emplace_back(i->first, std::move(s));
      ++i;
      ++j;
    }
  }
  a = std::move(out);
}

namespace {

void normalize(SparseVector& row) {
  if (row.empty() || row.front().second.is_one()) return;
  BigRational inv = BigRational(1) / row.front().second;
  for (auto& [k, v] : row) v *= inv;
}

}  // namespace

void Echelon::reduce(SparseVector& row) const {
  while (!row.empty()) {
    std::size_t col = row.front().first;
    if (col >= pivot_of_.size() || pivot_of_[col] < 0) return;
    BigRational c = -row.front().second;
    axpy(row, c, rows_[static_cast<std::size_t>(pivot_of_[col])]);
  }
}

bool Echelon::insert(SparseVector row) {
  reduce(row);
  if (row.empty()) return false;
  normalize(row);
  std::size_t col = row.front().first;
  if (col >= pivot_of_.size()) pivot_of_.resize(col + 1, -1);
  pivot_of_[col] = static_cast<std::ptrdiff_t>(rows_.size());
  rows_.push_back(std::move(row));
  return true;
}

bool Echelon::spans(SparseVector row) const {
  reduce(row);
  return row.empty();
}

std::vector<SparseVector> left_kernel(const std::vector<SparseVector>& images) {
  struct Row {
    SparseVector value;
    SparseVector combo;
  };
  std::vector<Row> pivots;
  std::vector<std::ptrdiff_t> pivot_of;
  std::vector<SparseVector> kernel;
  for (std::size_t i = 0; i < images.size(); ++i) {
    Row r{images[i], {{i, BigRational(1)}}};
    while (!r.value.empty()) {
      std::size_t col = r.value.front().first;
      if (col >= pivot_of.size() || pivot_of[col] < 0) break;
      const Row& p = pivots[static_cast<std::size_t>(pivot_of[col])];
      BigRational c = -r.value.front().second;
      axpy(r.value, c, p.value);
      axpy(r.combo, c, p.combo);
    }
    if (r.value.empty()) {
      kernel.push_back(std::move(r.combo));
      continue;
    }
    BigRational inv = BigRational(1) / r.value.front().second;
    for (auto& [k, v] : r.value) v *= inv;
    for (auto& [k, v] : r.combo) v *= inv;
    std::size_t col = r.value.front().first;
    if (col >= pivot_of.size()) pivot_of.resize(col + 1, -1);
    pivot_of[col] = static_cast<std::ptrdiff_t>(pivots.size());
    pivots.push_back(std::move(r));
  }
  return kernel;
}

}  // namespace relhilb
