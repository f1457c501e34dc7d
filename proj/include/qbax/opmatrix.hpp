#pragma once
// Small matrices with NCPoly entries and a record of their auxiliary legs.
#include <functional>
#include <initializer_list>
#include <string>
#include <vector>

#include "qbax/presentation.hpp"

namespace qbax {

class OpMatrix {
 public:
  OpMatrix() = default;
  /// Square matrix over the tensor product of the given leg dimensions.
  explicit OpMatrix(std::vector<int> legs);
  /// Plain rows x cols matrix without leg structure.
  static OpMatrix rect(int rows, int cols);

  static OpMatrix identity(std::vector<int> legs);
  /// Scalar matrix from row-major coefficients.
  static OpMatrix from_scalars(std::vector<int> legs, std::initializer_list<Coefficient> entries);

  int rows() const { return rows_; }
  int cols() const { return cols_; }
  const std::vector<int>& legs() const { return legs_; }

  NCPoly& operator()(int i, int j) { return entries_[static_cast<std::size_t>(i * cols_ + j)]; }
  const NCPoly& operator()(int i, int j) const {
    return entries_[static_cast<std::size_t>(i * cols_ + j)];
  }
  const std::vector<NCPoly>& entries() const { return entries_; }

  OpMatrix& operator+=(const OpMatrix& o);
  OpMatrix& operator-=(const OpMatrix& o);
  friend OpMatrix operator+(OpMatrix a, const OpMatrix& b) { return a += b; }
  friend OpMatrix operator-(OpMatrix a, const OpMatrix& b) { return a -= b; }
  friend OpMatrix operator*(const Coefficient& c, const OpMatrix& m);

  bool is_zero() const;
  std::size_t term_count() const;
  OpMatrix map_entries(const std::function<NCPoly(const NCPoly&)>& f) const;
  OpMatrix extract(Param p, int k) const {
    return map_entries([&](const NCPoly& e) { return e.extract(p, k); });
  }

 private:
  int rows_ = 0;
  int cols_ = 0;
  std::vector<int> legs_;
  std::vector<NCPoly> entries_;
};

/// Product with one normal form per entry.
OpMatrix mul(const OpMatrix& a, const OpMatrix& b, const Presentation& pres);
OpMatrix mul(std::initializer_list<const OpMatrix*> factors, const Presentation& pres);
/// Kronecker product; entry products keep the left factor first.
OpMatrix kron(const OpMatrix& a, const OpMatrix& b);
OpMatrix normal_form(const OpMatrix& m, const Presentation& pres);
OpMatrix transpose(const OpMatrix& m);
NCPoly trace(const OpMatrix& m);

std::string to_string(const OpMatrix& m, const Presentation& pres);

}  // namespace qbax
