#pragma once

#include <cstddef>
#include <map>
#include <optional>
#include <vector>

#include "idealgraph/lpa.hpp"
#include "idealgraph/scalar.hpp"

namespace idealgraph {

/// Sparse vector: column -> nonzero entry.
using SparseRow = std::map<std::size_t, Scalar>;

/// Exact row space kept in reduced row echelon form: every pivot entry is 1
/// and no other row has an entry in a pivot column.
class RowSpace {
 public:
  explicit RowSpace(Field field) : field_(field) {}

  const Field& field() const noexcept { return field_; }
  std::size_t rank() const noexcept { return rows_.size(); }
  /// Rows keyed by pivot column.
  const std::map<std::size_t, SparseRow>& rows() const noexcept { return rows_; }

  /// Adds a row; returns false if it was already in the span.
  bool insert(SparseRow row);
  /// The remainder of row modulo the span (zero iff contained).
  SparseRow reduce(SparseRow row) const;
  bool contains(const SparseRow& row) const { return reduce(row).empty(); }

 private:
  Field field_;
  std::map<std::size_t, SparseRow> rows_;
};

/// Assigns column numbers to monomials on first sight.
class MonomialIndex {
 public:
  std::size_t intern(const Monomial& m);
  std::optional<std::size_t> find(const Monomial& m) const;
  std::size_t size() const noexcept { return columns_.size(); }
  const Monomial& monomial(std::size_t column) const { return monomials_.at(column); }

  SparseRow coordinates(const LpaElement& x);
  /// Nullopt if x uses a monomial without a column.
  std::optional<SparseRow> find_coordinates(const LpaElement& x) const;

 private:
  std::map<Monomial, std::size_t> columns_;
  std::vector<Monomial> monomials_;
};

}  // namespace idealgraph
