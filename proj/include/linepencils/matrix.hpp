#pragma once

// Dense exact matrices over Q (mpq) and Z (mpz).  Everything in this
// project is desk scale (n <= ~20 lines, matrices a few hundred entries),
// so a flat row-major vector is all we need.

#include <gmpxx.h>

#include <cassert>
#include <initializer_list>
#include <string>
#include <vector>

namespace linepencils {

using Int = mpz_class;
using Rat = mpq_class;

using IntVec = std::vector<Int>;
using RatVec = std::vector<Rat>;

template <typename T>
class Mat {
public:
  Mat() : rows_(0), cols_(0) {}
  Mat(int rows, int cols) : rows_(rows), cols_(cols), a_(static_cast<size_t>(rows) * cols) {}
  Mat(std::initializer_list<std::initializer_list<T>> init) {
    rows_ = static_cast<int>(init.size());
    cols_ = rows_ ? static_cast<int>(init.begin()->size()) : 0;
    a_.reserve(static_cast<size_t>(rows_) * cols_);
    for (const auto& r : init) {
      assert(static_cast<int>(r.size()) == cols_);
      for (const auto& x : r) a_.push_back(x);
    }
  }

  int rows() const { return rows_; }
  int cols() const { return cols_; }
  bool empty() const { return rows_ == 0 || cols_ == 0; }

  T& operator()(int r, int c) {
    assert(r >= 0 && r < rows_ && c >= 0 && c < cols_);
    return a_[static_cast<size_t>(r) * cols_ + c];
  }
  const T& operator()(int r, int c) const {
    assert(r >= 0 && r < rows_ && c >= 0 && c < cols_);
    return a_[static_cast<size_t>(r) * cols_ + c];
  }

  std::vector<T> row(int r) const {
    std::vector<T> out(cols_);
    for (int c = 0; c < cols_; ++c) out[c] = (*this)(r, c);
    return out;
  }
  std::vector<T> col(int c) const {
    std::vector<T> out(rows_);
    for (int r = 0; r < rows_; ++r) out[r] = (*this)(r, c);
    return out;
  }
  void set_row(int r, const std::vector<T>& v) {
    assert(static_cast<int>(v.size()) == cols_);
    for (int c = 0; c < cols_; ++c) (*this)(r, c) = v[c];
  }

  bool operator==(const Mat& o) const { return rows_ == o.rows_ && cols_ == o.cols_ && a_ == o.a_; }
  bool operator!=(const Mat& o) const { return !(*this == o); }
  // lexicographic by shape then entries; used for canonical ordering
  bool operator<(const Mat& o) const {
    if (rows_ != o.rows_) return rows_ < o.rows_;
    if (cols_ != o.cols_) return cols_ < o.cols_;
    for (size_t i = 0; i < a_.size(); ++i) {
      int c = cmp(a_[i], o.a_[i]);
      if (c != 0) return c < 0;
    }
    return false;
  }

  static Mat identity(int n) {
    Mat m(n, n);
    for (int i = 0; i < n; ++i) m(i, i) = 1;
    return m;
  }

  Mat transposed() const {
    Mat t(cols_, rows_);
    for (int r = 0; r < rows_; ++r)
      for (int c = 0; c < cols_; ++c) t(c, r) = (*this)(r, c);
    return t;
  }

private:
  int rows_, cols_;
  std::vector<T> a_;
};

using IntMat = Mat<Int>;
using RatMat = Mat<Rat>;

IntMat mat_mul(const IntMat& a, const IntMat& b);
RatMat mat_mul(const RatMat& a, const RatMat& b);
IntVec mat_vec(const IntMat& a, const IntVec& x);
RatVec mat_vec(const RatMat& a, const RatVec& x);

RatMat to_rational(const IntMat& m);
// requires every entry integral
IntMat to_integer(const RatMat& m);

IntMat vstack(const IntMat& a, const IntMat& b);
RatMat vstack(const RatMat& a, const RatMat& b);

std::string to_string(const IntMat& m);
std::string to_string(const RatMat& m);

// gcd of all entries (nonnegative); 0 for the zero vector
Int content(const IntVec& v);
// scale a rational vector to a primitive integer one, preserving direction;
// sign convention: first nonzero entry positive unless keep_sign
IntVec primitive(const RatVec& v, bool keep_sign = false);
IntVec primitive(const IntVec& v, bool keep_sign = false);

}  // namespace linepencils
