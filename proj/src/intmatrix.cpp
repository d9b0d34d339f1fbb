#include "ngo/intmatrix.hpp"

#include <algorithm>
#include <optional>
#include <utility>

#include "ngo/errors.hpp"

namespace ngo {

IntMatrix::IntMatrix(std::size_t rows, std::size_t cols)
    : rows_(rows), cols_(cols), data_(rows * cols, BigInt(0)) {}

IntMatrix::IntMatrix(std::initializer_list<std::initializer_list<long>> rows) {
  rows_ = rows.size();
  cols_ = rows_ ? rows.begin()->size() : 0;
  data_.reserve(rows_ * cols_);
  for (const auto& r : rows) {
    if (r.size() != cols_) throw InvalidArgument("IntMatrix: ragged initializer");
    for (long v : r) data_.emplace_back(v);
  }
}

IntMatrix IntMatrix::identity(std::size_t n) {
  IntMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
  return m;
}

std::vector<BigInt> IntMatrix::row(std::size_t i) const {
  return {data_.begin() + static_cast<std::ptrdiff_t>(i * cols_),
          data_.begin() + static_cast<std::ptrdiff_t>((i + 1) * cols_)};
}

std::vector<BigInt> IntMatrix::column(std::size_t j) const {
  std::vector<BigInt> out;
  out.reserve(rows_);
  for (std::size_t i = 0; i < rows_; ++i) out.push_back((*this)(i, j));
  return out;
}

IntMatrix IntMatrix::transpose() const {
  IntMatrix t(cols_, rows_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
  return t;
}

bool IntMatrix::is_zero() const {
  return std::all_of(data_.begin(), data_.end(), [](const BigInt& v) { return v == 0; });
}

void IntMatrix::swap_rows(std::size_t a, std::size_t b) {
  if (a == b) return;
  for (std::size_t j = 0; j < cols_; ++j) std::swap((*this)(a, j), (*this)(b, j));
}

void IntMatrix::swap_cols(std::size_t a, std::size_t b) {
  if (a == b) return;
  for (std::size_t i = 0; i < rows_; ++i) std::swap((*this)(i, a), (*this)(i, b));
}

void IntMatrix::add_row_multiple(std::size_t dst, std::size_t src, const BigInt& factor) {
  if (factor == 0) return;
  for (std::size_t j = 0; j < cols_; ++j) (*this)(dst, j) += factor * (*this)(src, j);
}

void IntMatrix::add_col_multiple(std::size_t dst, std::size_t src, const BigInt& factor) {
  if (factor == 0) return;
  for (std::size_t i = 0; i < rows_; ++i) (*this)(i, dst) += factor * (*this)(i, src);
}

void IntMatrix::negate_row(std::size_t i) {
  for (std::size_t j = 0; j < cols_; ++j) (*this)(i, j) = -(*this)(i, j);
}

void IntMatrix::negate_col(std::size_t j) {
  for (std::size_t i = 0; i < rows_; ++i) (*this)(i, j) = -(*this)(i, j);
}

std::string IntMatrix::to_string() const {
  if (rows_ == 0 || cols_ == 0) {
    return "[] (" + std::to_string(rows_) + "x" + std::to_string(cols_) + ")\n";
  }
  std::vector<std::string> cells;
  cells.reserve(data_.size());
  std::size_t width = 1;
  for (const auto& v : data_) {
    cells.push_back(to_decimal(v));
    width = std::max(width, cells.back().size());
  }
  std::string out;
  for (std::size_t i = 0; i < rows_; ++i) {
    out += '[';
    for (std::size_t j = 0; j < cols_; ++j) {
      if (j) out += ' ';
      const auto& c = cells[i * cols_ + j];
      out.append(width - c.size(), ' ');
      out += c;
    }
    out += "]\n";
  }
  return out;
}

IntMatrix operator*(const IntMatrix& a, const IntMatrix& b) {
  if (a.cols() != b.rows()) {
    throw InvalidArgument("matrix product: shapes " + std::to_string(a.rows()) + "x" +
                          std::to_string(a.cols()) + " and " + std::to_string(b.rows()) + "x" +
                          std::to_string(b.cols()) + " do not compose");
  }
  IntMatrix c(a.rows(), b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t k = 0; k < a.cols(); ++k) {
      if (a(i, k) == 0) continue;
      for (std::size_t j = 0; j < b.cols(); ++j) c(i, j) += a(i, k) * b(k, j);
    }
  return c;
}

namespace {

void divide_row_by_content(IntMatrix& m, std::size_t i) {
  BigInt g = 0;
  for (std::size_t j = 0; j < m.cols(); ++j) {
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), m(i, j).get_mpz_t());
    if (g == 1) return;
  }
  if (g <= 1) return;
  for (std::size_t j = 0; j < m.cols(); ++j) mpz_divexact(m(i, j).get_mpz_t(), m(i, j).get_mpz_t(), g.get_mpz_t());
}

}  // namespace

std::size_t rank(IntMatrix m) {
  std::size_t pivot_row = 0;
  for (std::size_t col = 0; col < m.cols() && pivot_row < m.rows(); ++col) {
    std::optional<std::size_t> best;
    for (std::size_t i = pivot_row; i < m.rows(); ++i) {
      if (m(i, col) == 0) continue;
      if (!best || abs(m(i, col)) < abs(m(*best, col))) best = i;
    }
    if (!best) continue;
    m.swap_rows(pivot_row, *best);
    const BigInt p = m(pivot_row, col);
    for (std::size_t i = pivot_row + 1; i < m.rows(); ++i) {
      if (m(i, col) == 0) continue;
      const BigInt a = m(i, col);
      for (std::size_t j = col; j < m.cols(); ++j) {
        m(i, j) = p * m(i, j) - a * m(pivot_row, j);
      }
      divide_row_by_content(m, i);
    }
    ++pivot_row;
  }
  return pivot_row;
}

BigInt determinant(IntMatrix m) {
  if (m.rows() != m.cols()) throw InvalidArgument("determinant: matrix is not square");
  const std::size_t n = m.rows();
  if (n == 0) return 1;
  BigInt sign = 1;
  BigInt prev = 1;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (m(k, k) == 0) {
      std::size_t swap_with = k + 1;
      while (swap_with < n && m(swap_with, k) == 0) ++swap_with;
      if (swap_with == n) return 0;
      m.swap_rows(k, swap_with);
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < n; ++j) {
        BigInt v = m(i, j) * m(k, k) - m(i, k) * m(k, j);
        mpz_divexact(v.get_mpz_t(), v.get_mpz_t(), prev.get_mpz_t());
        m(i, j) = std::move(v);
      }
    }
    prev = m(k, k);
  }
  return sign * m(n - 1, n - 1);
}

std::vector<BigInt> SmithDecomposition::invariants() const {
  std::vector<BigInt> out;
  for (std::size_t i = 0; i < std::min(S.rows(), S.cols()); ++i) {
    if (S(i, i) != 0) out.push_back(S(i, i));
  }
  return out;
}

SmithDecomposition smith_normal_form(const IntMatrix& a) {
  const std::size_t m = a.rows();
  const std::size_t n = a.cols();
  SmithDecomposition d{IntMatrix::identity(m), a, IntMatrix::identity(n)};
  IntMatrix& S = d.S;

  auto move_to = [&](std::size_t t, std::size_t i, std::size_t j) {
    S.swap_rows(t, i);
    d.U.swap_rows(t, i);
    S.swap_cols(t, j);
    d.V.swap_cols(t, j);
  };

  for (std::size_t t = 0; t < std::min(m, n); ++t) {
    // Smallest magnitude nonzero in the trailing block; ties by row-major position.
    std::optional<std::pair<std::size_t, std::size_t>> best;
    for (std::size_t i = t; i < m; ++i)
      for (std::size_t j = t; j < n; ++j) {
        if (S(i, j) == 0) continue;
        if (!best || abs(S(i, j)) < abs(S(best->first, best->second))) best = {i, j};
      }
    if (!best) break;
    move_to(t, best->first, best->second);

    for (;;) {
      bool clean = true;
      for (std::size_t i = t + 1; i < m; ++i) {
        if (S(i, t) == 0) continue;
        BigInt q;
        mpz_tdiv_q(q.get_mpz_t(), S(i, t).get_mpz_t(), S(t, t).get_mpz_t());
        S.add_row_multiple(i, t, -q);
        d.U.add_row_multiple(i, t, -q);
        if (S(i, t) != 0) clean = false;
      }
      for (std::size_t j = t + 1; j < n; ++j) {
        if (S(t, j) == 0) continue;
        BigInt q;
        mpz_tdiv_q(q.get_mpz_t(), S(t, j).get_mpz_t(), S(t, t).get_mpz_t());
        S.add_col_multiple(j, t, -q);
        d.V.add_col_multiple(j, t, -q);
        if (S(t, j) != 0) clean = false;
      }
      if (!clean) {
        // A remainder smaller than the pivot survived; promote it.
        std::optional<std::pair<std::size_t, std::size_t>> next;
        for (std::size_t i = t; i < m; ++i) {
          if (S(i, t) != 0 && (!next || abs(S(i, t)) < abs(S(next->first, next->second)))) next = {i, t};
        }
        for (std::size_t j = t; j < n; ++j) {
          if (S(t, j) != 0 && (!next || abs(S(t, j)) < abs(S(next->first, next->second)))) next = {t, j};
        }
        move_to(t, next->first, next->second);
        continue;
      }
      // Row and column cleared; enforce divisibility of the trailing block.
      std::optional<std::size_t> offending_row;
      for (std::size_t i = t + 1; i < m && !offending_row; ++i)
        for (std::size_t j = t + 1; j < n; ++j) {
          if (!mpz_divisible_p(S(i, j).get_mpz_t(), S(t, t).get_mpz_t())) {
            offending_row = i;
            break;
          }
        }
      if (!offending_row) break;
      S.add_row_multiple(t, *offending_row, 1);
      d.U.add_row_multiple(t, *offending_row, 1);
    }
    if (S(t, t) < 0) {
      S.negate_row(t);
      d.U.negate_row(t);
    }
  }
  return d;
}

IntMatrix hermite_normal_form(const IntMatrix& a) {
  IntMatrix h = a;
  std::size_t pivot_row = 0;
  std::vector<std::size_t> pivot_cols;
  for (std::size_t col = 0; col < h.cols() && pivot_row < h.rows(); ++col) {
    // Euclid on column entries at or below pivot_row.
    for (;;) {
      std::optional<std::size_t> best;
      for (std::size_t i = pivot_row; i < h.rows(); ++i) {
        if (h(i, col) != 0 && (!best || abs(h(i, col)) < abs(h(*best, col)))) best = i;
      }
      if (!best) break;
      h.swap_rows(pivot_row, *best);
      bool reduced = true;
      for (std::size_t i = pivot_row + 1; i < h.rows(); ++i) {
        if (h(i, col) == 0) continue;
        BigInt q;
        mpz_fdiv_q(q.get_mpz_t(), h(i, col).get_mpz_t(), h(pivot_row, col).get_mpz_t());
        h.add_row_multiple(i, pivot_row, -q);
        if (h(i, col) != 0) reduced = false;
      }
      if (reduced) break;
    }
    if (h(pivot_row, col) == 0) continue;
    if (h(pivot_row, col) < 0) h.negate_row(pivot_row);
    for (std::size_t i = 0; i < pivot_row; ++i) {
      BigInt q;
      mpz_fdiv_q(q.get_mpz_t(), h(i, col).get_mpz_t(), h(pivot_row, col).get_mpz_t());
      h.add_row_multiple(i, pivot_row, -q);
    }
    pivot_cols.push_back(col);
    ++pivot_row;
  }
  IntMatrix out(pivot_row, h.cols());
  for (std::size_t i = 0; i < pivot_row; ++i)
    for (std::size_t j = 0; j < h.cols(); ++j) out(i, j) = h(i, j);
  return out;
}

namespace {

bool all_units(const std::vector<BigInt>& invariants) {
  return std::all_of(invariants.begin(), invariants.end(), [](const BigInt& v) { return v == 1; });
}

}  // namespace

IntMatrix gale_dual(const IntMatrix& a) {
  const SmithDecomposition snf = smith_normal_form(a);
  const auto inv = snf.invariants();
  if (inv.size() != a.rows() || !all_units(inv)) {
    throw NotABoundaryMap("gale_dual: matrix is not surjective over Z (Smith invariants not all 1)");
  }
  const std::size_t s = a.cols();
  const std::size_t b1 = s - inv.size();
  IntMatrix kernel_rows(b1, s);
  for (std::size_t k = 0; k < b1; ++k)
    for (std::size_t i = 0; i < s; ++i) kernel_rows(k, i) = snf.V(i, inv.size() + k);
  IntMatrix canon = hermite_normal_form(kernel_rows);
  if (canon.rows() != b1) throw InternalConsistency("gale_dual: kernel basis lost rank");
  return canon.transpose();
}

ExactnessReport verify_exact(const IntMatrix& a, const IntMatrix& b) {
  if (a.cols() != b.rows()) {
    throw InvalidArgument("verify_exact: A has " + std::to_string(a.cols()) + " columns but B has " +
                          std::to_string(b.rows()) + " rows");
  }
  ExactnessReport rep;
  rep.composes_to_zero = (a * b).is_zero();
  const std::size_t rank_a = rank(a);
  const std::size_t rank_b = rank(b);
  rep.spans_kernel = rank_b == a.cols() - rank_a;
  rep.saturated = all_units(smith_normal_form(b).invariants());
  rep.injective = rank_b == b.cols();
  const auto inv_a = smith_normal_form(a).invariants();
  rep.surjective = inv_a.size() == a.rows() && all_units(inv_a);

  if (!rep.composes_to_zero) rep.failure = "A*B != 0";
  else if (!rep.spans_kernel) rep.failure = "not spanning";
  else if (!rep.saturated) rep.failure = "kernel not saturated";
  else if (!rep.injective) rep.failure = "B not injective";
  else if (!rep.surjective) rep.failure = "A not surjective";
  return rep;
}

}  // namespace ngo
