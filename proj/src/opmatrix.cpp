#include "qbax/opmatrix.hpp"

#include <functional>
#include <numeric>
#include <sstream>

#include "qbax/error.hpp"

namespace qbax {

namespace {
int leg_product(const std::vector<int>& legs) {
  return std::accumulate(legs.begin(), legs.end(), 1, std::multiplies<>());
}
}  // namespace

OpMatrix::OpMatrix(std::vector<int> legs)
    : rows_(leg_product(legs)), cols_(rows_), legs_(std::move(legs)),
      entries_(static_cast<std::size_t>(rows_ * cols_)) {}

OpMatrix OpMatrix::rect(int rows, int cols) {
  OpMatrix m;
  m.rows_ = rows;
  m.cols_ = cols;
  m.entries_.resize(static_cast<std::size_t>(rows * cols));
  return m;
}

OpMatrix OpMatrix::identity(std::vector<int> legs) {
  OpMatrix m(std::move(legs));
  for (int i = 0; i < m.rows_; ++i) m(i, i) = NCPoly::scalar(1);
  return m;
}

OpMatrix OpMatrix::from_scalars(std::vector<int> legs, std::initializer_list<Coefficient> entries) {
  OpMatrix m(std::move(legs));
  if (entries.size() != m.entries_.size()) throw SizeError("from_scalars: wrong entry count");
  std::size_t i = 0;
  for (const auto& c : entries) m.entries_[i++] = NCPoly::scalar(c);
  return m;
}

OpMatrix& OpMatrix::operator+=(const OpMatrix& o) {
  if (rows_ != o.rows_ || cols_ != o.cols_) throw SizeError("OpMatrix shape mismatch");
  for (std::size_t i = 0; i < entries_.size(); ++i) entries_[i] += o.entries_[i];
  return *this;
}

OpMatrix& OpMatrix::operator-=(const OpMatrix& o) {
  if (rows_ != o.rows_ || cols_ != o.cols_) throw SizeError("OpMatrix shape mismatch");
  for (std::size_t i = 0; i < entries_.size(); ++i) entries_[i] -= o.entries_[i];
  return *this;
}

OpMatrix operator*(const Coefficient& c, const OpMatrix& m) {
  OpMatrix r = m;
  for (auto& e : r.entries_) e = c * e;
  return r;
}

bool OpMatrix::is_zero() const {
  for (const auto& e : entries_)
    if (!e.is_zero()) return false;
  return true;
}

std::size_t OpMatrix::term_count() const {
  std::size_t n = 0;
  for (const auto& e : entries_) n += e.size();
  return n;
}

OpMatrix OpMatrix::map_entries(const std::function<NCPoly(const NCPoly&)>& f) const {
  OpMatrix r = *this;
  for (auto& e : r.entries_) e = f(e);
  return r;
}

OpMatrix mul(const OpMatrix& a, const OpMatrix& b, const Presentation& pres) {
  if (a.cols() != b.rows()) throw SizeError("OpMatrix product: inner dimensions differ");
  OpMatrix r = a.legs() == b.legs() && !a.legs().empty() ? OpMatrix(a.legs()) : OpMatrix::rect(a.rows(), b.cols());
  for (int i = 0; i < a.rows(); ++i)
    for (int j = 0; j < b.cols(); ++j) {
      NCPoly acc;
      for (int k = 0; k < a.cols(); ++k) {
        if (a(i, k).is_zero() || b(k, j).is_zero()) continue;
        acc += free_mul(a(i, k), b(k, j));
      }
      r(i, j) = normal_form(acc, pres);
    }
  return r;
}

OpMatrix mul(std::initializer_list<const OpMatrix*> factors, const Presentation& pres) {
  if (factors.size() == 0) throw SizeError("empty OpMatrix product");
  auto it = factors.begin();
  OpMatrix r = **it;
  for (++it; it != factors.end(); ++it) r = mul(r, **it, pres);
  return r;
}

OpMatrix kron(const OpMatrix& a, const OpMatrix& b) {
  std::vector<int> legs = a.legs();
  legs.insert(legs.end(), b.legs().begin(), b.legs().end());
  OpMatrix r = (a.rows() == a.cols() && b.rows() == b.cols() && !a.legs().empty() && !b.legs().empty())
                   ? OpMatrix(legs)
                   : OpMatrix::rect(a.rows() * b.rows(), a.cols() * b.cols());
  for (int i1 = 0; i1 < a.rows(); ++i1)
    for (int j1 = 0; j1 < a.cols(); ++j1) {
      if (a(i1, j1).is_zero()) continue;
      for (int i2 = 0; i2 < b.rows(); ++i2)
        for (int j2 = 0; j2 < b.cols(); ++j2) {
          if (b(i2, j2).is_zero()) continue;
          r(i1 * b.rows() + i2, j1 * b.cols() + j2) = free_mul(a(i1, j1), b(i2, j2));
        }
    }
  return r;
}

OpMatrix normal_form(const OpMatrix& m, const Presentation& pres) {
  return m.map_entries([&](const NCPoly& e) { return normal_form(e, pres); });
}

OpMatrix transpose(const OpMatrix& m) {
  OpMatrix r = m.rows() == m.cols() && !m.legs().empty() ? OpMatrix(m.legs()) : OpMatrix::rect(m.cols(), m.rows());
  for (int i = 0; i < m.rows(); ++i)
    for (int j = 0; j < m.cols(); ++j) r(j, i) = m(i, j);
  return r;
}

NCPoly trace(const OpMatrix& m) {
  if (m.rows() != m.cols()) throw SizeError("trace of a non-square matrix");
  NCPoly t;
  for (int i = 0; i < m.rows(); ++i) t += m(i, i);
  return t;
}

std::string to_string(const OpMatrix& m, const Presentation& pres) {
  std::ostringstream os;
  for (int i = 0; i < m.rows(); ++i) {
    os << "[";
    for (int j = 0; j < m.cols(); ++j) os << (j ? " | " : " ") << to_string(m(i, j), pres);
    os << " ]\n";
  }
  return os.str();
}

}  // namespace qbax
