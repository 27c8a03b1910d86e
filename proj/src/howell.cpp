#include "finring/howell.hpp"

#include <algorithm>
#include <limits>
#include <stdexcept>

namespace finring {

void Matrix::append_row(std::span<const Residue> values) {
  if (rows_ == 0 && cols_ == 0) cols_ = values.size();
  if (values.size() != cols_) throw std::invalid_argument("Matrix::append_row: width mismatch");
  data_.insert(data_.end(), values.begin(), values.end());
  ++rows_;
}

namespace {

bool all_zero(std::span<const Residue> v) {
  return std::all_of(v.begin(), v.end(), [](Residue x) { return x == 0; });
}

// Unimodular 2x2 step leaving gcd(u[col], v[col]) in u and zero in v.
void combine_rows(std::vector<Residue>& u, std::vector<Residue>& v, std::size_t col, Residue n) {
  const std::int64_t a = u[col];
  const std::int64_t b = v[col];
  const auto [g, s, t] = xgcd(a, b);
  const std::int64_t p = a / g;
  const std::int64_t q = b / g;
  const std::int64_t nn = n;
  for (std::size_t k = col; k < u.size(); ++k) {
    const std::int64_t x = u[k];
    const std::int64_t y = v[k];
    u[k] = mod_reduce((s % nn) * x % nn + (t % nn) * y % nn, n);
    v[k] = mod_reduce((-q % nn) * x % nn + (p % nn) * y % nn, n);
  }
}

void scale_row(std::vector<Residue>& row, Residue factor, Residue n) {
  for (auto& x : row) x = mod_mul(x, factor, n);
}

void axpy(std::span<Residue> y, Residue a, std::span<const Residue> x, Residue n) {
  for (std::size_t k = 0; k < y.size(); ++k) y[k] = mod_sub(y[k], mod_mul(a, x[k], n), n);
}

}  // namespace

HowellForm::HowellForm(Residue modulus, std::size_t width) : modulus_(modulus), rows_(0, width) {
  if (modulus < 1) throw std::invalid_argument("HowellForm: modulus must be positive");
}

HowellForm::HowellForm(Residue modulus, const Matrix& generators)
    : modulus_(modulus), rows_(0, generators.cols()) {
  std::vector<std::vector<Residue>> work;
  work.reserve(generators.rows());
  for (std::size_t i = 0; i < generators.rows(); ++i) {
    auto r = generators.row(i);
    std::vector<Residue> v(r.size());
    for (std::size_t k = 0; k < r.size(); ++k) v[k] = r[k] % modulus;
    if (!all_zero(v)) work.push_back(std::move(v));
  }
  build(std::move(work));
}

HowellForm::HowellForm(Residue modulus, std::size_t width,
                       const std::vector<std::vector<Residue>>& generators)
    : modulus_(modulus), rows_(0, width) {
  std::vector<std::vector<Residue>> work;
  for (const auto& g : generators) {
    if (g.size() != width) throw std::invalid_argument("HowellForm: generator width mismatch");
    std::vector<Residue> v(g.size());
    for (std::size_t k = 0; k < g.size(); ++k) v[k] = g[k] % modulus;
    if (!all_zero(v)) work.push_back(std::move(v));
  }
  build(std::move(work));
}

void HowellForm::build(std::vector<std::vector<Residue>> work) {
  const Residue n = modulus_;
  const std::size_t w = rows_.cols();
  std::vector<std::vector<Residue>> result;
  for (std::size_t col = 0; col < w; ++col) {
    std::optional<std::vector<Residue>> pivot;
    std::vector<std::vector<Residue>> rest;
    for (auto& r : work) {
      if (r[col] == 0) {
        rest.push_back(std::move(r));
        continue;
      }
      if (!pivot) {
        pivot = std::move(r);
        continue;
      }
      combine_rows(*pivot, r, col, n);
      if (!all_zero(r)) rest.push_back(std::move(r));
    }
    work = std::move(rest);
    if (!pivot) continue;

    scale_row(*pivot, unit_normalizer((*pivot)[col], n), n);
    const Residue p = (*pivot)[col];

    std::vector<Residue> ann = *pivot;
    scale_row(ann, n / p, n);
    if (!all_zero(ann)) work.push_back(std::move(ann));

    for (auto& above : result) {
      const Residue q = above[col] / p;
      if (q != 0) axpy(above, q, *pivot, n);
    }
    result.push_back(std::move(*pivot));
  }

  rows_ = Matrix(0, w);
  pivots_.clear();
  for (auto& r : result) {
    const auto it = std::find_if(r.begin(), r.end(), [](Residue x) { return x != 0; });
    pivots_.push_back(static_cast<std::size_t>(it - r.begin()));
    rows_.append_row(r);
  }
  if (rows_.cols() != w) rows_ = Matrix(rows_.rows(), w);
}

std::uint64_t HowellForm::count() const {
  std::uint64_t total = 1;
  for (std::size_t i = 0; i < rank(); ++i) {
    const std::uint64_t f = modulus_ / pivot(i);
    if (total > std::numeric_limits<std::uint64_t>::max() / f) return std::numeric_limits<std::uint64_t>::max();
    total *= f;
  }
  return total;
}

bool HowellForm::is_free() const {
  for (std::size_t i = 0; i < rank(); ++i)
    if (pivot(i) != 1) return false;
  return true;
}

std::vector<Residue> HowellForm::reduce(std::span<const Residue> v) const {
  std::vector<Residue> rem(v.size());
  for (std::size_t k = 0; k < v.size(); ++k) rem[k] = v[k] % modulus_;
  for (std::size_t i = 0; i < rank(); ++i) {
    const Residue q = rem[pivots_[i]] / pivot(i);
    if (q != 0) axpy(rem, q, row(i), modulus_);
  }
  return rem;
}

bool HowellForm::contains(std::span<const Residue> v) const {
  if (v.size() != width()) return false;
  return all_zero(reduce(v));
}

std::optional<std::vector<Residue>> HowellForm::coordinates(std::span<const Residue> v) const {
  std::vector<Residue> rem(v.begin(), v.end());
  for (auto& x : rem) x %= modulus_;
  std::vector<Residue> q(rank(), 0);
  for (std::size_t i = 0; i < rank(); ++i) {
    q[i] = rem[pivots_[i]] / pivot(i);
    if (q[i] != 0) axpy(rem, q[i], row(i), modulus_);
  }
  if (!all_zero(rem)) return std::nullopt;
  return q;
}

HowellForm HowellForm::operator+(const HowellForm& other) const {
  if (other.modulus_ != modulus_ || other.width() != width())
    throw std::invalid_argument("HowellForm::operator+: incompatible modules");
  Matrix stacked = rows_;
  for (std::size_t i = 0; i < other.rank(); ++i) stacked.append_row(other.row(i));
  if (stacked.rows() == 0) return *this;
  return HowellForm(modulus_, stacked);
}

HowellForm left_kernel(Residue modulus, const Matrix& a) {
  const std::size_t k = a.rows();
  const std::size_t m = a.cols();
  Matrix augmented(k, m + k);
  for (std::size_t i = 0; i < k; ++i) {
    for (std::size_t j = 0; j < m; ++j) augmented(i, j) = a(i, j) % modulus;
    augmented(i, m + i) = 1 % modulus;
  }
  const HowellForm h(modulus, augmented);
  std::vector<std::vector<Residue>> kernel_rows;
  for (std::size_t i = 0; i < h.rank(); ++i) {
    if (h.pivot_column(i) < m) continue;
    auto r = h.row(i);
    kernel_rows.emplace_back(r.begin() + static_cast<std::ptrdiff_t>(m), r.end());
  }
  return HowellForm(modulus, k, kernel_rows);
}

std::optional<std::vector<Residue>> solve_left(Residue modulus, const Matrix& a,
                                               std::span<const Residue> target) {
  if (target.size() != a.cols()) throw std::invalid_argument("solve_left: target width mismatch");
  // kernel of [-target; a]; a kernel vector with leading entry 1 yields a solution
  Matrix stacked(a.rows() + 1, a.cols());
  for (std::size_t j = 0; j < a.cols(); ++j) stacked(0, j) = mod_neg(target[j] % modulus, modulus);
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) stacked(i + 1, j) = a(i, j) % modulus;
  const HowellForm ker = left_kernel(modulus, stacked);
  if (ker.rank() == 0 || ker.pivot_column(0) != 0 || ker.pivot(0) != 1 % modulus) {
    if (modulus == 1) return std::vector<Residue>(a.rows(), 0);
    return std::nullopt;
  }
  auto r = ker.row(0);
  return std::vector<Residue>(r.begin() + 1, r.end());
}

HowellForm intersect(const HowellForm& a, const HowellForm& b) {
  if (a.modulus() != b.modulus() || a.width() != b.width())
    throw std::invalid_argument("intersect: incompatible modules");
  const Residue n = a.modulus();
  const std::size_t w = a.width();
  if (a.rank() == 0 || b.rank() == 0) return HowellForm(n, w);
  Matrix stacked(a.rank() + b.rank(), w);
  for (std::size_t i = 0; i < a.rank(); ++i)
    for (std::size_t j = 0; j < w; ++j) stacked(i, j) = a.row(i)[j];
  for (std::size_t i = 0; i < b.rank(); ++i)
    for (std::size_t j = 0; j < w; ++j) stacked(a.rank() + i, j) = mod_neg(b.row(i)[j], n);
  const HowellForm ker = left_kernel(n, stacked);
  std::vector<std::vector<Residue>> gens;
  for (std::size_t t = 0; t < ker.rank(); ++t) {
    std::vector<Residue> v(w, 0);
    for (std::size_t i = 0; i < a.rank(); ++i) {
      const Residue c = ker.row(t)[i];
      if (c == 0) continue;
      for (std::size_t j = 0; j < w; ++j) v[j] = mod_add(v[j], mod_mul(c, a.row(i)[j], n), n);
    }
    gens.push_back(std::move(v));
  }
  return HowellForm(n, w, gens);
}

}  // namespace finring
