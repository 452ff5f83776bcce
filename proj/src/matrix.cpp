#include "rbd/matrix.hpp"

#include <sstream>

namespace rbd {

RatMatrix to_rational(const IntMatrix& m) {
  RatMatrix r(m.rows(), m.cols());
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) r(i, j) = Rational(m(i, j));
  return r;
}

IntMatrix direct_sum(const IntMatrix& a, const IntMatrix& b) {
  IntMatrix s(a.rows() + b.rows(), a.cols() + b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) s(i, j) = a(i, j);
  for (std::size_t i = 0; i < b.rows(); ++i)
    for (std::size_t j = 0; j < b.cols(); ++j) s(a.rows() + i, a.cols() + j) = b(i, j);
  return s;
}

IntMatrix permuted(const IntMatrix& m, const std::vector<std::size_t>& perm) {
  if (!m.square() || perm.size() != m.rows())
    throw Error(Errc::DimensionMismatch, "permutation length does not match matrix");
  IntMatrix out(m.rows(), m.cols());
  for (std::size_t i = 0; i < perm.size(); ++i)
    for (std::size_t j = 0; j < perm.size(); ++j) out(i, j) = m(perm[i], perm[j]);
  return out;
}

namespace {

template <typename T>
std::string format_any(const Matrix<T>& m) {
  std::vector<std::string> cells(m.rows() * m.cols());
  std::size_t width = 1;
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) {
      auto& c = cells[i * m.cols() + j];
      c = to_string(m(i, j));
      width = std::max(width, c.size());
    }
  std::ostringstream os;
  for (std::size_t i = 0; i < m.rows(); ++i) {
    os << '[';
    for (std::size_t j = 0; j < m.cols(); ++j) {
      const auto& c = cells[i * m.cols() + j];
      if (j) os << ' ';
      os << std::string(width - c.size(), ' ') << c;
    }
    os << "]\n";
  }
  return os.str();
}

}  // namespace

std::string format_matrix(const IntMatrix& m) { return format_any(m); }
std::string format_matrix(const RatMatrix& m) { return format_any(m); }

}  // namespace rbd
