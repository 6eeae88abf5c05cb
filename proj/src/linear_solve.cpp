#include "bk/linear_solve.hpp"

#include <algorithm>
#include <numeric>

#include "bk/errors.hpp"

namespace bk {

namespace {

// Clears denominators and divides out the content; the sign is left alone.
std::vector<Integer> to_primitive_integers(std::span<const Rational> coefficients, const Rational& rhs) {
  Integer lcm = 1;
  auto absorb = [&lcm](const Rational& q) {
    const Integer d = q.denominator();
    if (d != 1) mpz_lcm(lcm.get_mpz_t(), lcm.get_mpz_t(), d.get_mpz_t());
  };
  for (const auto& q : coefficients) absorb(q);
  absorb(rhs);
  std::vector<Integer> row;
  row.reserve(coefficients.size() + 1);
  auto scale = [&lcm](const Rational& q) { return Integer(q.numerator() * (lcm / q.denominator())); };
  for (const auto& q : coefficients) row.push_back(scale(q));
  row.push_back(scale(rhs));
  return row;
}

void make_primitive(std::vector<Integer>& row) {
  Integer g = 0;
  for (const auto& v : row) {
    if (v != 0) mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), v.get_mpz_t());
    if (g == 1) return;
  }
  if (g <= 1) return;
  for (auto& v : row) {
    if (v != 0) mpz_divexact(v.get_mpz_t(), v.get_mpz_t(), g.get_mpz_t());
  }
}

}  // namespace

RationalMatrix::RationalMatrix(std::initializer_list<std::initializer_list<Rational>> rows) {
  rows_ = rows.size();
  cols_ = rows_ == 0 ? 0 : rows.begin()->size();
  data_.reserve(rows_ * cols_);
  for (const auto& r : rows) {
    if (r.size() != cols_) throw InvalidInput("ragged matrix initializer");
    data_.insert(data_.end(), r.begin(), r.end());
  }
}

std::vector<Rational> RationalMatrix::operator*(std::span<const Rational> x) const {
  if (x.size() != cols_) throw InvalidInput("matrix-vector size mismatch");
  std::vector<Rational> out(rows_);
  for (std::size_t r = 0; r < rows_; ++r) {
    for (std::size_t c = 0; c < cols_; ++c) {
      const Rational& a = (*this)(r, c);
      if (!a.is_zero() && !x[c].is_zero()) out[r] += a * x[c];
    }
  }
  return out;
}

FractionFreeEliminator::FractionFreeEliminator(std::size_t cols, std::vector<std::size_t> column_priority)
    : cols_(cols), priority_rank_(cols) {
  if (column_priority.empty()) {
    std::iota(priority_rank_.begin(), priority_rank_.end(), std::size_t{0});
  } else {
    if (column_priority.size() != cols) throw InvalidInput("column priority must list every column once");
    for (std::size_t i = 0; i < cols; ++i) priority_rank_.at(column_priority[i]) = i;
  }
}

FractionFreeEliminator::RowResult FractionFreeEliminator::add_row(std::span<const Rational> coefficients,
                                                                  const Rational& rhs) {
  if (coefficients.size() != cols_) throw InvalidInput("row length does not match column count");
  std::vector<Integer> row = to_primitive_integers(coefficients, rhs);
  make_primitive(row);
  Integer g, a, b;
  for (const auto& pivot : pivots_) {
    const Integer& r_c = row[pivot.column];
    if (r_c == 0) continue;
    const Integer& p_c = pivot.row[pivot.column];
    mpz_gcd(g.get_mpz_t(), p_c.get_mpz_t(), r_c.get_mpz_t());
    a = p_c / g;
    b = r_c / g;
    for (std::size_t j = 0; j <= cols_; ++j) {
      if (pivot.row[j] == 0) {
        if (row[j] != 0 && a != 1) row[j] *= a;
      } else {
        row[j] = a * row[j] - b * pivot.row[j];
      }
    }
    make_primitive(row);
  }
  std::optional<std::size_t> best;
  for (std::size_t j = 0; j < cols_; ++j) {
    if (row[j] != 0 && (!best || priority_rank_[j] < priority_rank_[*best])) best = j;
  }
  if (!best) {
    if (row[cols_] != 0) {
      inconsistent_ = true;
      return RowResult::Inconsistent;
    }
    return RowResult::Dependent;
  }
  pivots_.push_back(Pivot{*best, std::move(row)});
  return RowResult::NewPivot;
}

std::vector<Rational> FractionFreeEliminator::solve() const {
  if (inconsistent_) throw InvariantViolation("solve() on an inconsistent system");
  if (!full_rank()) throw InvalidInput("solve() requires full column rank");
  std::vector<Rational> x(cols_);
  // Pivot t has zeros in the pivot columns of rows added before it, so the
  // unknowns resolve in reverse insertion order.
  for (auto it = pivots_.rbegin(); it != pivots_.rend(); ++it) {
    Rational acc(it->row[cols_]);
    for (std::size_t j = 0; j < cols_; ++j) {
      if (j == it->column || it->row[j] == 0) continue;
      acc -= Rational(it->row[j]) * x[j];
    }
    x[it->column] = acc / Rational(it->row[it->column]);
  }
  return x;
}

SolveOutcome solve_exact(const RationalMatrix& a, std::span<const Rational> b) {
  if (b.size() != a.rows()) throw InvalidInput("right-hand side length does not match row count");
  if (a.rows() < a.cols()) throw InvalidInput("solve_exact expects at least as many rows as columns");
  std::vector<std::size_t> support(a.cols(), 0);
  for (std::size_t r = 0; r < a.rows(); ++r) {
    for (std::size_t c = 0; c < a.cols(); ++c) support[c] += a(r, c).is_zero() ? 0 : 1;
  }
  std::vector<std::size_t> order(a.cols());
  std::iota(order.begin(), order.end(), std::size_t{0});
  std::stable_sort(order.begin(), order.end(), [&](std::size_t i, std::size_t j) { return support[i] > support[j]; });

  FractionFreeEliminator elim(a.cols(), order);
  SolveOutcome out;
  for (std::size_t r = 0; r < a.rows(); ++r) {
    if (elim.add_row(a.row(r), b[r]) == FractionFreeEliminator::RowResult::Inconsistent) {
      out.status = SolveOutcome::Status::Inconsistent;
      out.inconsistent_row = r;
      out.rank = elim.rank();
      return out;
    }
  }
  out.rank = elim.rank();
  if (!elim.full_rank()) {
    out.status = SolveOutcome::Status::RankDeficient;
    return out;
  }
  out.solution = elim.solve();
  return out;
}

}  // namespace bk
