#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <vector>

#include "bk/rational.hpp"

namespace bk {

/// Dense row-major matrix of rationals.
class RationalMatrix {
 public:
  RationalMatrix() = default;
  RationalMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}
  RationalMatrix(std::initializer_list<std::initializer_list<Rational>> rows);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  Rational& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  const Rational& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }
  std::span<const Rational> row(std::size_t r) const { return {data_.data() + r * cols_, cols_}; }

  std::vector<Rational> operator*(std::span<const Rational> x) const;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Rational> data_;
};

/// Row-at-a-time fraction-free Gaussian elimination.
///
/// Each incoming row (with its right-hand side) is scaled to a primitive
/// integer vector and reduced against the stored pivot rows by
/// cross-multiplication, dividing out the row content after every step, so no
/// rational arithmetic happens until back substitution. Rows that reduce to
/// zero are dependent; rows whose coefficient part vanishes while the
/// right-hand side does not make the system inconsistent.
class FractionFreeEliminator {
 public:
  enum class RowResult { NewPivot, Dependent, Inconsistent };

  /// `column_priority` lists columns from most to least preferred as pivots;
  /// empty means natural order.
  explicit FractionFreeEliminator(std::size_t cols, std::vector<std::size_t> column_priority = {});

  RowResult add_row(std::span<const Rational> coefficients, const Rational& rhs);

  std::size_t cols() const { return cols_; }
  std::size_t rank() const { return pivots_.size(); }
  bool full_rank() const { return rank() == cols_; }
  bool inconsistent() const { return inconsistent_; }

  /// The unique solution; requires full column rank and consistency.
  std::vector<Rational> solve() const;

 private:
  struct Pivot {
    std::size_t column;
    std::vector<Integer> row;  // cols_ coefficients followed by the rhs
  };

  std::size_t cols_;
  std::vector<std::size_t> priority_rank_;
  std::vector<Pivot> pivots_;
  bool inconsistent_ = false;
};

struct SolveOutcome {
  enum class Status { Solved, RankDeficient, Inconsistent };
  Status status = Status::Solved;
  std::vector<Rational> solution;  // populated only when Solved
  std::size_t rank = 0;
  /// First row found to contradict the earlier ones.
  std::optional<std::size_t> inconsistent_row;
};

/// Exact least-structure solve of the (possibly overdetermined) system A x = b.
/// Pivots prefer the columns with the most nonzero entries.
SolveOutcome solve_exact(const RationalMatrix& a, std::span<const Rational> b);

}  // namespace bk
