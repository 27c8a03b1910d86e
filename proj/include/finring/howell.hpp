#pragma once

// Linear algebra over Z_n: row-reduced Howell forms, kernels and solving.
//
// A Howell form spans the same Z_n-submodule as its generators and has the
// property that every vector of the span whose first k entries vanish is a
// combination of the rows whose pivots lie at or after column k. With pivots
// normalised to divisors of n and entries above pivots reduced, the form is
// unique, so two submodules are equal iff their forms are equal.

#include <cstddef>
#include <optional>
#include <span>
#include <vector>

#include "finring/modular.hpp"

namespace finring {

/// Dense row-major matrix of residues.
class Matrix {
 public:
  Matrix() = default;
  Matrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols, 0) {}

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  Residue& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  Residue operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

  std::span<Residue> row(std::size_t r) { return {data_.data() + r * cols_, cols_}; }
  std::span<const Residue> row(std::size_t r) const { return {data_.data() + r * cols_, cols_}; }

  void append_row(std::span<const Residue> values);

  friend bool operator==(const Matrix&, const Matrix&) = default;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Residue> data_;
};

class HowellForm {
 public:
  HowellForm(Residue modulus, std::size_t width);
  HowellForm(Residue modulus, const Matrix& generators);
  HowellForm(Residue modulus, std::size_t width, const std::vector<std::vector<Residue>>& generators);

  Residue modulus() const { return modulus_; }
  std::size_t width() const { return rows_.cols(); }
  std::size_t rank() const { return rows_.rows(); }
  const Matrix& rows() const { return rows_; }
  std::span<const Residue> row(std::size_t i) const { return rows_.row(i); }
  std::size_t pivot_column(std::size_t i) const { return pivots_[i]; }
  Residue pivot(std::size_t i) const { return rows_(i, pivots_[i]); }

  /// Number of elements of the span; saturates at UINT64_MAX.
  std::uint64_t count() const;
  bool is_zero() const { return rank() == 0; }
  bool is_free() const;

  bool contains(std::span<const Residue> v) const;
  /// Remainder of v after reduction by the rows.
  std::vector<Residue> reduce(std::span<const Residue> v) const;
  /// Coefficients q with v = sum q_i row_i, when v lies in the span.
  std::optional<std::vector<Residue>> coordinates(std::span<const Residue> v) const;

  /// Visits every element of the span exactly once.
  template <class F>
  void for_each(F&& visit) const;

  /// Submodule sum.
  HowellForm operator+(const HowellForm& other) const;

  friend bool operator==(const HowellForm& a, const HowellForm& b) {
    return a.modulus_ == b.modulus_ && a.rows_ == b.rows_;
  }

 private:
  void build(std::vector<std::vector<Residue>> work);

  Residue modulus_;
  Matrix rows_;
  std::vector<std::size_t> pivots_;
};

/// Generators of the left kernel {x : x * a = 0} of a (rows x cols) matrix.
HowellForm left_kernel(Residue modulus, const Matrix& a);

/// Some x with x * a = target, if one exists.
std::optional<std::vector<Residue>> solve_left(Residue modulus, const Matrix& a,
                                               std::span<const Residue> target);

/// Intersection of two submodules of Z_n^width.
HowellForm intersect(const HowellForm& a, const HowellForm& b);

template <class F>
void HowellForm::for_each(F&& visit) const {
  const std::size_t k = rank();
  const std::size_t w = width();
  std::vector<Residue> limit(k);
  for (std::size_t i = 0; i < k; ++i) limit[i] = modulus_ / pivot(i);
  std::vector<Residue> counter(k, 0);
  std::vector<Residue> value(w, 0);
  while (true) {
    visit(std::span<const Residue>(value));
    std::size_t i = 0;
    for (; i < k; ++i) {
      const auto r = row(i);
      for (std::size_t c = pivots_[i]; c < w; ++c) value[c] = mod_add(value[c], r[c], modulus_);
      if (++counter[i] < limit[i]) break;
      // (n/p)*row_i need not vanish; remove the whole contribution before carrying
      for (std::size_t c = pivots_[i]; c < w; ++c)
        value[c] = mod_sub(value[c], mod_mul(limit[i], r[c], modulus_), modulus_);
      counter[i] = 0;
    }
    if (i == k) return;
  }
}

}  // namespace finring
