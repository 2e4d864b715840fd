#include "idealgraph/row_space.hpp"

namespace idealgraph {

namespace {

// row += c * other
void axpy(SparseRow& row, const Scalar& c, const SparseRow& other) {
  for (const auto& [col, x] : other) {
    auto it = row.find(col);
    if (it == row.end()) {
      row.emplace(col, c * x);
      continue;
    }
    it->second += c * x;
    if (it->second.is_zero()) row.erase(it);
  }
}

}  // namespace

SparseRow RowSpace::reduce(SparseRow row) const {
  // In reduced echelon form the pivot rows share no pivot columns, so one pass
  // over the pivot columns initially present suffices.
  std::vector<std::size_t> hits;
  for (const auto& [col, x] : row)
    if (rows_.count(col)) hits.push_back(col);
  for (std::size_t col : hits) {
    auto it = row.find(col);
    if (it == row.end()) continue;
    Scalar c = -it->second;
    axpy(row, c, rows_.at(col));
  }
  return row;
}

bool RowSpace::insert(SparseRow row) {
  row = reduce(std::move(row));
  if (row.empty()) return false;
  std::size_t pivot = row.begin()->first;
  Scalar inv = row.begin()->second.inverse();
  for (auto& [col, x] : row) x *= inv;
  for (auto& [p, other] : rows_) {
    auto it = other.find(pivot);
    if (it == other.end()) continue;
    Scalar c = -it->second;
    axpy(other, c, row);
  }
  rows_.emplace(pivot, std::move(row));
  return true;
}

std::size_t MonomialIndex::intern(const Monomial& m) {
  auto [it, fresh] = columns_.try_emplace(m, monomials_.size());
  if (fresh) monomials_.push_back(m);
  return it->second;
}

std::optional<std::size_t> MonomialIndex::find(const Monomial& m) const {
  auto it = columns_.find(m);
  if (it == columns_.end()) return std::nullopt;
  return it->second;
}

SparseRow MonomialIndex::coordinates(const LpaElement& x) {
  SparseRow row;
  for (const auto& [m, c] : x.terms()) row.emplace(intern(m), c);
  return row;
}

std::optional<SparseRow> MonomialIndex::find_coordinates(const LpaElement& x) const {
  SparseRow row;
  for (const auto& [m, c] : x.terms()) {
    auto col = find(m);
    if (!col) return std::nullopt;
    row.emplace(*col, c);
  }
  return row;
}

}  // namespace idealgraph
