#include "foldhilb/exactcore.hpp"

#include <sstream>
#include <stdexcept>
#include <utility>

namespace foldhilb {

GaussRational::GaussRational(mpq_class r, mpq_class i) : re(std::move(r)), im(std::move(i)) {
  re.canonicalize();
  im.canonicalize();
}

GaussRational::GaussRational(long rn, long rd, long in, long id) {
  if (rd == 0 || id == 0) throw std::invalid_argument("zero denominator");
  re = mpq_class(rn, rd);
  im = mpq_class(in, id);
  re.canonicalize();
  im.canonicalize();
}

GaussRational GaussRational::inverse() const {
  if (is_zero()) throw std::domain_error("division by zero");
  mpq_class n = norm();
  return GaussRational(re / n, -im / n);
}

std::string GaussRational::str() const {
  std::ostringstream os;
  os << *this;
  return os.str();
}

GaussRational& GaussRational::operator+=(const GaussRational& o) {
  re += o.re;
  im += o.im;
  return *this;
}
GaussRational& GaussRational::operator-=(const GaussRational& o) {
  re -= o.re;
  im -= o.im;
  return *this;
}
GaussRational& GaussRational::operator*=(const GaussRational& o) {
  if (sgn(im) == 0 && sgn(o.im) == 0) {
    re *= o.re;
    return *this;
  }
  mpq_class r = re * o.re - im * o.im;
  mpq_class i = re * o.im + im * o.re;
  re = std::move(r);
  im = std::move(i);
  return *this;
}
GaussRational& GaussRational::operator/=(const GaussRational& o) {
  if (sgn(im) == 0 && sgn(o.im) == 0) {
    if (sgn(o.re) == 0) throw std::domain_error("division by zero");
    re /= o.re;
    return *this;
  }
  return *this *= o.inverse();
}

GaussRational operator+(GaussRational a, const GaussRational& b) { return a += b; }
GaussRational operator-(GaussRational a, const GaussRational& b) { return a -= b; }
GaussRational operator*(GaussRational a, const GaussRational& b) { return a *= b; }
GaussRational operator/(GaussRational a, const GaussRational& b) { return a /= b; }
GaussRational operator-(const GaussRational& a) { return GaussRational(-a.re, -a.im); }
bool operator==(const GaussRational& a, const GaussRational& b) {
  return a.re == b.re && a.im == b.im;
}

std::ostream& operator<<(std::ostream& os, const GaussRational& q) {
  if (sgn(q.im) == 0) return os << q.re.get_str();
  if (sgn(q.re) == 0) return os << q.im.get_str() << "i";
  os << "(" << q.re.get_str() << (sgn(q.im) > 0 ? "+" : "") << q.im.get_str() << "i)";
  return os;
}

ExactMatrix::ExactMatrix(std::size_t rows, std::size_t cols)
    : rows_(rows), cols_(cols), e_(rows * cols) {}

ExactMatrix::ExactMatrix(std::size_t rows, std::size_t cols, std::vector<GaussRational> entries)
    : rows_(rows), cols_(cols), e_(std::move(entries)) {
  if (e_.size() != rows_ * cols_) throw std::invalid_argument("entry count != rows*cols");
}

ExactMatrix ExactMatrix::identity(std::size_t n) {
  ExactMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m.at(i, i) = 1;
  return m;
}

ExactMatrix ExactMatrix::from_rows(const std::vector<Vec>& rows, std::size_t cols) {
  ExactMatrix m(0, cols);
  for (const auto& r : rows) m.append_row(r);
  return m;
}

Vec ExactMatrix::row(std::size_t r) const {
  return Vec(e_.begin() + r * cols_, e_.begin() + (r + 1) * cols_);
}

Vec ExactMatrix::col(std::size_t c) const {
  Vec v(rows_);
  for (std::size_t r = 0; r < rows_; ++r) v[r] = at(r, c);
  return v;
}

void ExactMatrix::append_row(const Vec& r) {
  if (r.size() != cols_) throw std::invalid_argument("row length mismatch");
  e_.insert(e_.end(), r.begin(), r.end());
  ++rows_;
}

void ExactMatrix::swap_rows(std::size_t a, std::size_t b) {
  if (a == b) return;
  for (std::size_t c = 0; c < cols_; ++c) std::swap(at(a, c), at(b, c));
}

Rref rref(const ExactMatrix& in) {
  ExactMatrix m = in;
  std::vector<std::size_t> piv;
  std::size_t r = 0;
  for (std::size_t c = 0; c < m.cols() && r < m.rows(); ++c) {
    std::size_t p = r;
    while (p < m.rows() && m.at(p, c).is_zero()) ++p;
    if (p == m.rows()) continue;
    m.swap_rows(p, r);
    GaussRational inv = m.at(r, c).inverse();
    for (std::size_t j = c; j < m.cols(); ++j) m.at(r, j) *= inv;
    for (std::size_t i = 0; i < m.rows(); ++i) {
      if (i == r || m.at(i, c).is_zero()) continue;
      GaussRational f = m.at(i, c);
      for (std::size_t j = c; j < m.cols(); ++j) {
        if (!m.at(r, j).is_zero()) m.at(i, j) -= f * m.at(r, j);
      }
    }
    piv.push_back(c);
    ++r;
  }
  ExactMatrix out(0, m.cols());
  for (std::size_t i = 0; i < r; ++i) out.append_row(m.row(i));
  return {std::move(out), std::move(piv)};
}

std::size_t rank(const ExactMatrix& m) { return rref(m).pivots.size(); }

std::vector<Vec> kernel_basis(const ExactMatrix& m) {
  Rref r = rref(m);
  std::vector<bool> is_piv(m.cols(), false);
  for (auto p : r.pivots) is_piv[p] = true;
  std::vector<Vec> out;
  for (std::size_t f = 0; f < m.cols(); ++f) {
    if (is_piv[f]) continue;
    Vec v(m.cols());
    v[f] = 1;
    for (std::size_t i = 0; i < r.pivots.size(); ++i) v[r.pivots[i]] = -r.m.at(i, f);
    out.push_back(std::move(v));
  }
  return out;
}

Vec mat_vec(const ExactMatrix& m, const Vec& v) {
  if (v.size() != m.cols()) throw std::invalid_argument("mat_vec size mismatch");
  Vec out(m.rows());
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j)
      if (!m.at(i, j).is_zero() && !v[j].is_zero()) out[i] += m.at(i, j) * v[j];
  return out;
}

GaussRational det(const ExactMatrix& in) {
  if (in.rows() != in.cols()) throw std::invalid_argument("det of non-square matrix");
  ExactMatrix m = in;
  std::size_t n = m.rows();
  GaussRational d = 1;
  for (std::size_t c = 0; c < n; ++c) {
    std::size_t p = c;
    while (p < n && m.at(p, c).is_zero()) ++p;
    if (p == n) return GaussRational();
    if (p != c) {
      m.swap_rows(p, c);
      d = -d;
    }
    d *= m.at(c, c);
    GaussRational inv = m.at(c, c).inverse();
    for (std::size_t i = c + 1; i < n; ++i) {
      if (m.at(i, c).is_zero()) continue;
      GaussRational f = m.at(i, c) * inv;
      for (std::size_t j = c; j < n; ++j) m.at(i, j) -= f * m.at(c, j);
    }
  }
  return d;
}

GaussRational minor(const ExactMatrix& m, const std::vector<std::size_t>& rowset,
                    const std::vector<std::size_t>& colset) {
  if (rowset.size() != colset.size()) throw std::invalid_argument("minor: |rows| != |cols|");
  std::size_t k = rowset.size();
  ExactMatrix sub(k, k);
  for (std::size_t i = 0; i < k; ++i) {
    if (rowset[i] >= m.rows()) throw std::out_of_range("minor: row index out of range");
    for (std::size_t j = 0; j < k; ++j) {
      if (colset[j] >= m.cols()) throw std::out_of_range("minor: column index out of range");
      sub.at(i, j) = m.at(rowset[i], colset[j]);
    }
  }
  return det(sub);
}

Vec reduce_by(const Rref& r, Vec v) {
  for (std::size_t i = 0; i < r.pivots.size(); ++i) {
    std::size_t p = r.pivots[i];
    if (v[p].is_zero()) continue;
    GaussRational f = v[p];
    for (std::size_t j = 0; j < v.size(); ++j)
      if (!r.m.at(i, j).is_zero()) v[j] -= f * r.m.at(i, j);
  }
  return v;
}

bool in_row_space(const Rref& r, const Vec& v) {
  Vec w = reduce_by(r, v);
  for (const auto& x : w)
    if (!x.is_zero()) return false;
  return true;
}

}  // namespace foldhilb
