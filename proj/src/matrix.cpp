#include "linepencils/matrix.hpp"

#include <sstream>

namespace linepencils {

IntMat mat_mul(const IntMat& a, const IntMat& b) {
  assert(a.cols() == b.rows());
  IntMat out(a.rows(), b.cols());
  for (int i = 0; i < a.rows(); ++i)
    for (int k = 0; k < a.cols(); ++k) {
      const Int& aik = a(i, k);
      if (aik == 0) continue;
      for (int j = 0; j < b.cols(); ++j) out(i, j) += aik * b(k, j);
    }
  return out;
}

RatMat mat_mul(const RatMat& a, const RatMat& b) {
  assert(a.cols() == b.rows());
  RatMat out(a.rows(), b.cols());
  for (int i = 0; i < a.rows(); ++i)
    for (int k = 0; k < a.cols(); ++k) {
      const Rat& aik = a(i, k);
      if (aik == 0) continue;
      for (int j = 0; j < b.cols(); ++j) out(i, j) += aik * b(k, j);
    }
  return out;
}

IntVec mat_vec(const IntMat& a, const IntVec& x) {
  assert(static_cast<int>(x.size()) == a.cols());
  IntVec out(a.rows());
  for (int i = 0; i < a.rows(); ++i)
    for (int j = 0; j < a.cols(); ++j)
      if (a(i, j) != 0) out[i] += a(i, j) * x[j];
  return out;
}

RatVec mat_vec(const RatMat& a, const RatVec& x) {
  assert(static_cast<int>(x.size()) == a.cols());
  RatVec out(a.rows());
  for (int i = 0; i < a.rows(); ++i)
    for (int j = 0; j < a.cols(); ++j)
      if (a(i, j) != 0) out[i] += a(i, j) * x[j];
  return out;
}

RatMat to_rational(const IntMat& m) {
  RatMat out(m.rows(), m.cols());
  for (int r = 0; r < m.rows(); ++r)
    for (int c = 0; c < m.cols(); ++c) out(r, c) = Rat(m(r, c));
  return out;
}

IntMat to_integer(const RatMat& m) {
  IntMat out(m.rows(), m.cols());
  for (int r = 0; r < m.rows(); ++r)
    for (int c = 0; c < m.cols(); ++c) {
      assert(m(r, c).get_den() == 1);
      out(r, c) = m(r, c).get_num();
    }
  return out;
}

template <typename T>
static Mat<T> vstack_impl(const Mat<T>& a, const Mat<T>& b) {
  if (a.empty()) return b;
  if (b.empty()) return a;
  assert(a.cols() == b.cols());
  Mat<T> out(a.rows() + b.rows(), a.cols());
  for (int r = 0; r < a.rows(); ++r)
    for (int c = 0; c < a.cols(); ++c) out(r, c) = a(r, c);
  for (int r = 0; r < b.rows(); ++r)
    for (int c = 0; c < b.cols(); ++c) out(a.rows() + r, c) = b(r, c);
  return out;
}

IntMat vstack(const IntMat& a, const IntMat& b) { return vstack_impl(a, b); }
RatMat vstack(const RatMat& a, const RatMat& b) { return vstack_impl(a, b); }

template <typename T>
static std::string to_string_impl(const Mat<T>& m) {
  std::ostringstream os;
  for (int r = 0; r < m.rows(); ++r) {
    for (int c = 0; c < m.cols(); ++c) {
      if (c) os << ' ';
      os << m(r, c);
    }
    os << '\n';
  }
  return os.str();
}

std::string to_string(const IntMat& m) { return to_string_impl(m); }
std::string to_string(const RatMat& m) { return to_string_impl(m); }

Int content(const IntVec& v) {
  Int g = 0;
  for (const Int& x : v) {
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), x.get_mpz_t());
    if (g == 1) break;
  }
  return g;
}

IntVec primitive(const IntVec& v, bool keep_sign) {
  Int g = content(v);
  IntVec out(v.size());
  if (g == 0) return out;
  for (size_t i = 0; i < v.size(); ++i) out[i] = v[i] / g;
  if (!keep_sign) {
    for (const Int& x : out) {
      if (x == 0) continue;
      if (x < 0)
        for (Int& y : out) y = -y;
      break;
    }
  }
  return out;
}

IntVec primitive(const RatVec& v, bool keep_sign) {
  Int lcm = 1;
  for (const Rat& x : v) mpz_lcm(lcm.get_mpz_t(), lcm.get_mpz_t(), x.get_den().get_mpz_t());
  IntVec scaled(v.size());
  for (size_t i = 0; i < v.size(); ++i) {
    Rat s = v[i] * Rat(lcm);
    s.canonicalize();
    assert(s.get_den() == 1);
    scaled[i] = s.get_num();
  }
  return primitive(scaled, keep_sign);
}

}  // namespace linepencils
