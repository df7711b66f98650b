#pragma once

#include <gmpxx.h>

#include <cstddef>
#include <ostream>
#include <string>
#include <vector>

namespace foldhilb {

// a + b*i with a, b rational
struct GaussRational {
  mpq_class re;
  mpq_class im;

  GaussRational() : re(0), im(0) {}
  GaussRational(long r) : re(r), im(0) {}  // NOLINT
  GaussRational(mpq_class r, mpq_class i = 0);
  GaussRational(long rn, long rd, long in, long id);

  bool is_zero() const { return sgn(re) == 0 && sgn(im) == 0; }
  mpq_class norm() const { return re * re + im * im; }
  GaussRational conj() const { return GaussRational(re, -im); }
  GaussRational inverse() const;
  std::string str() const;

  GaussRational& operator+=(const GaussRational& o);
  GaussRational& operator-=(const GaussRational& o);
  GaussRational& operator*=(const GaussRational& o);
  GaussRational& operator/=(const GaussRational& o);
};

GaussRational operator+(GaussRational a, const GaussRational& b);
GaussRational operator-(GaussRational a, const GaussRational& b);
GaussRational operator*(GaussRational a, const GaussRational& b);
GaussRational operator/(GaussRational a, const GaussRational& b);
GaussRational operator-(const GaussRational& a);
bool operator==(const GaussRational& a, const GaussRational& b);
inline bool operator!=(const GaussRational& a, const GaussRational& b) { return !(a == b); }
std::ostream& operator<<(std::ostream& os, const GaussRational& q);

using Vec = std::vector<GaussRational>;

class ExactMatrix {
 public:
  ExactMatrix() = default;
  ExactMatrix(std::size_t rows, std::size_t cols);
  ExactMatrix(std::size_t rows, std::size_t cols, std::vector<GaussRational> entries);
  static ExactMatrix identity(std::size_t n);
  static ExactMatrix from_rows(const std::vector<Vec>& rows, std::size_t cols);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  GaussRational& at(std::size_t r, std::size_t c) { return e_[r * cols_ + c]; }
  const GaussRational& at(std::size_t r, std::size_t c) const { return e_[r * cols_ + c]; }
  Vec row(std::size_t r) const;
  Vec col(std::size_t c) const;
  const std::vector<GaussRational>& entries() const { return e_; }
  void append_row(const Vec& r);
  void swap_rows(std::size_t a, std::size_t b);
  bool operator==(const ExactMatrix& o) const {
    return rows_ == o.rows_ && cols_ == o.cols_ && e_ == o.e_;
  }

 private:
  std::size_t rows_ = 0, cols_ = 0;
  std::vector<GaussRational> e_;
};

struct Rref {
  ExactMatrix m;                    // nonzero rows only
  std::vector<std::size_t> pivots;  // pivot column of each row
};

// reduced row echelon form; zero rows dropped
Rref rref(const ExactMatrix& m);
std::size_t rank(const ExactMatrix& m);
std::vector<Vec> kernel_basis(const ExactMatrix& m);
Vec mat_vec(const ExactMatrix& m, const Vec& v);
GaussRational det(const ExactMatrix& m);
// determinant of the submatrix on the given rows and columns; throws std::out_of_range
GaussRational minor(const ExactMatrix& m, const std::vector<std::size_t>& rowset,
                    const std::vector<std::size_t>& colset);

// subspace helpers built on rref
bool in_row_space(const Rref& r, const Vec& v);
Vec reduce_by(const Rref& r, Vec v);

}  // namespace foldhilb
