#include "sdcalc/lattice.hpp"

#include <ostream>
#include <utility>

#include "sdcalc/error.hpp"

namespace sdcalc {

IntMatrix::IntMatrix(std::size_t rows, std::size_t cols, std::vector<Int> data)
    : rows_(rows), cols_(cols), data_(std::move(data)) {
  if (data_.size() != rows * cols) throw PreconditionError("matrix data has wrong size");
}

IntMatrix IntMatrix::identity(std::size_t n) {
  IntMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
  return m;
}

std::vector<Int> IntMatrix::column(std::size_t j) const {
  std::vector<Int> out(rows_);
  for (std::size_t i = 0; i < rows_; ++i) out[i] = (*this)(i, j);
  return out;
}

std::vector<Int> IntMatrix::row(std::size_t i) const {
  return {data_.begin() + static_cast<std::ptrdiff_t>(i * cols_),
          data_.begin() + static_cast<std::ptrdiff_t>((i + 1) * cols_)};
}

IntMatrix IntMatrix::transpose() const {
  IntMatrix t(cols_, rows_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
  return t;
}

bool IntMatrix::is_symmetric() const {
  if (rows_ != cols_) return false;
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = i + 1; j < cols_; ++j)
      if ((*this)(i, j) != (*this)(j, i)) return false;
  return true;
}

bool IntMatrix::is_identity() const {
  if (rows_ != cols_) return false;
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j)
      if ((*this)(i, j) != (i == j ? 1 : 0)) return false;
  return true;
}

std::vector<Int> IntMatrix::apply(std::span<const Int> v) const {
  if (v.size() != cols_) throw PreconditionError("matrix/vector size mismatch");
  std::vector<Int> out(rows_);
  for (std::size_t i = 0; i < rows_; ++i) {
    Int acc = 0;
    for (std::size_t j = 0; j < cols_; ++j) {
      const Int& a = (*this)(i, j);
      if (!a.is_zero() && !v[j].is_zero()) acc += a * v[j];
    }
    out[i] = std::move(acc);
  }
  return out;
}

IntMatrix operator*(const IntMatrix& a, const IntMatrix& b) {
  if (a.cols_ != b.rows_) throw PreconditionError("matrix product size mismatch");
  IntMatrix c(a.rows_, b.cols_);
  for (std::size_t i = 0; i < a.rows_; ++i)
    for (std::size_t k = 0; k < a.cols_; ++k) {
      const Int& x = a(i, k);
      if (x.is_zero()) continue;
      for (std::size_t j = 0; j < b.cols_; ++j) {
        const Int& y = b(k, j);
        if (!y.is_zero()) c(i, j) += x * y;
      }
    }
  return c;
}

std::ostream& operator<<(std::ostream& os, const IntMatrix& m) {
  os << '[';
  for (std::size_t i = 0; i < m.rows(); ++i) {
    os << (i ? ", [" : "[");
    for (std::size_t j = 0; j < m.cols(); ++j) os << (j ? ", " : "") << m(i, j);
    os << ']';
  }
  return os << ']';
}

namespace {

// Column operations on (form, transform) mirrored as row operations on inverse.
struct Reducer {
  IntMatrix form;
  IntMatrix transform;
  IntMatrix inverse;

  void swap_cols(std::size_t p, std::size_t q) {
    if (p == q) return;
    for (std::size_t i = 0; i < form.rows(); ++i) std::swap(form(i, p), form(i, q));
    for (std::size_t i = 0; i < transform.rows(); ++i) std::swap(transform(i, p), transform(i, q));
    for (std::size_t j = 0; j < inverse.cols(); ++j) std::swap(inverse(p, j), inverse(q, j));
  }

  void negate_col(std::size_t p) {
    for (std::size_t i = 0; i < form.rows(); ++i) form(i, p) = -form(i, p);
    for (std::size_t i = 0; i < transform.rows(); ++i) transform(i, p) = -transform(i, p);
    for (std::size_t j = 0; j < inverse.cols(); ++j) inverse(p, j) = -inverse(p, j);
  }

  // col_q -= f * col_p
  void sub_col(std::size_t q, std::size_t p, const Int& f) {
    if (f.is_zero()) return;
    for (std::size_t i = 0; i < form.rows(); ++i)
      if (!form(i, p).is_zero()) form(i, q) -= f * form(i, p);
    for (std::size_t i = 0; i < transform.rows(); ++i)
      if (!transform(i, p).is_zero()) transform(i, q) -= f * transform(i, p);
    for (std::size_t j = 0; j < inverse.cols(); ++j)
      if (!inverse(q, j).is_zero()) inverse(p, j) += f * inverse(q, j);
  }
};

// Nearest-integer quotient keeps the Euclidean steps short.
Int rounded_quotient(const Int& a, const Int& b) {
  Int q = a / b;
  Int r = a - q * b;
  if (abs(r) * 2 > abs(b)) q += (sign(r) == sign(b)) ? 1 : -1;
  return q;
}

}  // namespace

ColumnEchelon column_echelon(const IntMatrix& a) {
  const std::size_t n = a.cols();
  Reducer red{a, IntMatrix::identity(n), IntMatrix::identity(n)};
  std::size_t pivot = 0;
  for (std::size_t r = 0; r < a.rows() && pivot < n; ++r) {
    for (;;) {
      std::size_t best = n;
      for (std::size_t j = pivot; j < n; ++j) {
        const Int& x = red.form(r, j);
        if (x.is_zero()) continue;
        if (best == n || abs(x) < abs(red.form(r, best))) best = j;
      }
      if (best == n) break;
      red.swap_cols(pivot, best);
      bool done = true;
      for (std::size_t j = pivot + 1; j < n; ++j) {
        if (red.form(r, j).is_zero()) continue;
        red.sub_col(j, pivot, rounded_quotient(red.form(r, j), red.form(r, pivot)));
        if (!red.form(r, j).is_zero()) done = false;
      }
      if (done) break;
    }
    if (pivot < n && !red.form(r, pivot).is_zero()) {
      if (red.form(r, pivot) < 0) red.negate_col(pivot);
      ++pivot;
    }
  }
  return {std::move(red.form), std::move(red.transform), std::move(red.inverse), pivot};
}

IntMatrix kernel_basis(const IntMatrix& a) {
  ColumnEchelon ech = column_echelon(a);
  const std::size_t n = a.cols();
  IntMatrix k(n, n - ech.rank);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = ech.rank; j < n; ++j) k(i, j - ech.rank) = ech.transform(i, j);
  return k;
}

VectorReduction reduce_vector(std::span<const Int> v) {
  IntMatrix row(1, v.size(), std::vector<Int>(v.begin(), v.end()));
  ColumnEchelon ech = column_echelon(row);
  // row * U = (g, 0, ..., 0)  =>  U^T v = g e_1
  Int g = ech.rank ? ech.form(0, 0) : Int(0);
  return {ech.transform.transpose(), ech.inverse.transpose(), g};
}

}  // namespace sdcalc
