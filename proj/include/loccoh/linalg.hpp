#pragma once

// Exact linear algebra for the sparse sign matrices produced by coboundary
// and Čech differentials.
//
// Ranks over Q use fraction-free elimination on int64 with overflow checks
// and restart on GMP integers when a product overflows. Ranks over GF(p) use
// plain modular elimination. Kernels, cohomology representatives and solves
// go through a generic reduced-row-echelon routine parameterized by a field.

#include <cstdint>
#include <cstdlib>
#include <numeric>
#include <string>
#include <utility>
#include <vector>

#include <gmpxx.h>

#include "loccoh/error.hpp"

namespace loccoh {

// Rationals (prime == 0) or the prime field GF(p).
class FieldSpec {
public:
  constexpr FieldSpec() = default;

  static constexpr FieldSpec rationals() { return FieldSpec(); }
  static FieldSpec prime_field(std::uint64_t p) {
    if (!is_prime(p)) throw InputError("field characteristic " + std::to_string(p) + " is not a prime");
    if (p >= (std::uint64_t{1} << 32)) throw InputError("prime field characteristic must be below 2^32");
    FieldSpec f;
    f.prime_ = p;
    return f;
  }

  bool is_rational() const { return prime_ == 0; }
  std::uint64_t characteristic() const { return prime_; }
  std::string label() const { return is_rational() ? "QQ" : "GF(" + std::to_string(prime_) + ")"; }

  static bool is_prime(std::uint64_t p) {
    if (p < 2) return false;
    for (std::uint64_t d = 2; d * d <= p; ++d)
      if (p % d == 0) return false;
    return true;
  }

  friend bool operator==(FieldSpec, FieldSpec) = default;

private:
  std::uint64_t prime_ = 0;
};

template <typename T>
class Matrix {
public:
  Matrix() = default;
  Matrix(std::size_t rows, std::size_t cols, T fill = T{})
      : rows_(rows), cols_(cols), data_(rows * cols, fill) {}

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  T& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  const T& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

  friend bool operator==(const Matrix&, const Matrix&) = default;

private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<T> data_;
};

using IntMatrix = Matrix<std::int64_t>;

inline IntMatrix multiply(const IntMatrix& a, const IntMatrix& b) {
  if (a.cols() != b.rows()) throw InputError("matrix dimensions do not agree");
  IntMatrix out(a.rows(), b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t k = 0; k < a.cols(); ++k) {
      const auto v = a(i, k);
      if (v == 0) continue;
      for (std::size_t j = 0; j < b.cols(); ++j) out(i, j) += v * b(k, j);
    }
  return out;
}

inline bool is_zero(const IntMatrix& m) {
  for (std::size_t r = 0; r < m.rows(); ++r)
    for (std::size_t c = 0; c < m.cols(); ++c)
      if (m(r, c) != 0) return false;
  return true;
}

namespace detail {

struct Overflow {};

// Arithmetic used by the fraction-free kernel. The int64 flavour throws
// Overflow instead of wrapping.
struct CheckedInt {
  using value_type = std::int64_t;
  static value_type from(std::int64_t v) { return v; }
  static bool zero(value_type v) { return v == 0; }
  static value_type abs(value_type v) {
    if (v == INT64_MIN) throw Overflow{};
    return v < 0 ? -v : v;
  }
  static value_type gcd(value_type a, value_type b) { return std::gcd(abs(a), abs(b)); }
  static value_type mul(value_type a, value_type b) {
    value_type r;
    if (__builtin_mul_overflow(a, b, &r)) throw Overflow{};
    return r;
  }
  static value_type sub(value_type a, value_type b) {
    value_type r;
    if (__builtin_sub_overflow(a, b, &r)) throw Overflow{};
    return r;
  }
  static value_type div(value_type a, value_type b) { return a / b; }
  static bool less_abs(value_type a, value_type b) { return abs(a) < abs(b); }
};

struct BigInt {
  using value_type = mpz_class;
  static value_type from(std::int64_t v) { return mpz_class(static_cast<long>(v)); }
  static bool zero(const value_type& v) { return sgn(v) == 0; }
  static value_type gcd(const value_type& a, const value_type& b) {
    mpz_class g;
    mpz_gcd(g.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    return g;
  }
  static value_type mul(const value_type& a, const value_type& b) { return a * b; }
  static value_type sub(const value_type& a, const value_type& b) { return a - b; }
  static value_type div(const value_type& a, const value_type& b) { return a / b; }
  static bool less_abs(const value_type& a, const value_type& b) { return mpz_cmpabs(a.get_mpz_t(), b.get_mpz_t()) < 0; }
};

// Rank over Q by integer row operations. Each elimination step replaces
// row_i by (p/g) row_i - (a/g) row_p and then divides row_i by its content,
// which keeps entries small on sign matrices. Pivots of least magnitude win.
template <typename Ops>
std::size_t fraction_free_rank(const IntMatrix& m) {
  using V = typename Ops::value_type;
  const std::size_t R = m.rows(), C = m.cols();
  std::vector<std::vector<V>> rows(R, std::vector<V>(C));
  for (std::size_t r = 0; r < R; ++r)
    for (std::size_t c = 0; c < C; ++c) rows[r][c] = Ops::from(m(r, c));

  std::size_t rank = 0;
  for (std::size_t col = 0; col < C && rank < R; ++col) {
    std::size_t best = R;
    for (std::size_t r = rank; r < R; ++r) {
      if (Ops::zero(rows[r][col])) continue;
      if (best == R || Ops::less_abs(rows[r][col], rows[best][col])) best = r;
    }
    if (best == R) continue;
    std::swap(rows[rank], rows[best]);
    const V pivot = rows[rank][col];
    for (std::size_t r = rank + 1; r < R; ++r) {
      const V a = rows[r][col];
      if (Ops::zero(a)) continue;
      const V g = Ops::gcd(pivot, a);
      const V ps = Ops::div(pivot, g), as = Ops::div(a, g);
      V content = Ops::from(0);
      for (std::size_t c = col; c < C; ++c) {
        rows[r][c] = Ops::sub(Ops::mul(ps, rows[r][c]), Ops::mul(as, rows[rank][c]));
        if (!Ops::zero(rows[r][c])) content = Ops::gcd(content, rows[r][c]);
      }
      if (!Ops::zero(content) && !(content == Ops::from(1))) {
        for (std::size_t c = col + 1; c < C; ++c) rows[r][c] = Ops::div(rows[r][c], content);
      }
    }
    ++rank;
  }
  return rank;
}

inline std::uint64_t mod_reduce(std::int64_t v, std::uint64_t p) {
  const auto sp = static_cast<std::int64_t>(p);
  std::int64_t r = v % sp;
  return static_cast<std::uint64_t>(r < 0 ? r + sp : r);
}

inline std::uint64_t mod_pow(std::uint64_t b, std::uint64_t e, std::uint64_t p) {
  std::uint64_t r = 1 % p;
  b %= p;
  while (e) {
    if (e & 1) r = (r * b) % p;
    b = (b * b) % p;
    e >>= 1;
  }
  return r;
}

} // namespace detail

inline std::size_t rank_over_rationals(const IntMatrix& m) {
  try {
    return detail::fraction_free_rank<detail::CheckedInt>(m);
  } catch (const detail::Overflow&) {
    return detail::fraction_free_rank<detail::BigInt>(m);
  }
}

// Same computation forced onto GMP integers; used to cross-check the int64 path.
inline std::size_t rank_over_rationals_bigint(const IntMatrix& m) {
  return detail::fraction_free_rank<detail::BigInt>(m);
}

inline std::size_t rank_mod_prime(const IntMatrix& m, std::uint64_t p) {
  const std::size_t R = m.rows(), C = m.cols();
  std::vector<std::vector<std::uint64_t>> rows(R, std::vector<std::uint64_t>(C));
  for (std::size_t r = 0; r < R; ++r)
    for (std::size_t c = 0; c < C; ++c) rows[r][c] = detail::mod_reduce(m(r, c), p);
  std::size_t rank = 0;
  for (std::size_t col = 0; col < C && rank < R; ++col) {
    std::size_t piv = rank;
    while (piv < R && rows[piv][col] == 0) ++piv;
    if (piv == R) continue;
    std::swap(rows[rank], rows[piv]);
    const std::uint64_t inv = detail::mod_pow(rows[rank][col], p - 2, p);
    for (std::size_t r = rank + 1; r < R; ++r) {
      if (rows[r][col] == 0) continue;
      const std::uint64_t f = (rows[r][col] * inv) % p;
      for (std::size_t c = col; c < C; ++c) {
        rows[r][c] = (rows[r][c] + (p - (f * rows[rank][c]) % p)) % p;
      }
    }
    ++rank;
  }
  return rank;
}

inline std::size_t rank(const IntMatrix& m, FieldSpec field) {
  if (m.rows() == 0 || m.cols() == 0) return 0;
  return field.is_rational() ? rank_over_rationals(m) : rank_mod_prime(m, field.characteristic());
}

// ---------------------------------------------------------------------------
// Field-generic echelon forms.

struct RationalField {
  using value_type = mpq_class;
  value_type from_int(std::int64_t v) const { return mpq_class(static_cast<long>(v)); }
  value_type zero() const { return 0; }
  value_type one() const { return 1; }
  bool is_zero(const value_type& v) const { return sgn(v) == 0; }
  value_type add(const value_type& a, const value_type& b) const { return a + b; }
  value_type sub(const value_type& a, const value_type& b) const { return a - b; }
  value_type mul(const value_type& a, const value_type& b) const { return a * b; }
  value_type inv(const value_type& a) const { return 1 / a; }
  mpq_class to_rational(const value_type& v) const { return v; }
};

struct PrimeField {
  std::uint64_t p;
  using value_type = std::uint64_t;
  value_type from_int(std::int64_t v) const { return detail::mod_reduce(v, p); }
  value_type zero() const { return 0; }
  value_type one() const { return 1 % p; }
  bool is_zero(value_type v) const { return v == 0; }
  value_type add(value_type a, value_type b) const { return (a + b) % p; }
  value_type sub(value_type a, value_type b) const { return (a + p - b) % p; }
  value_type mul(value_type a, value_type b) const { return (a * b) % p; }
  value_type inv(value_type a) const { return detail::mod_pow(a, p - 2, p); }
  mpq_class to_rational(value_type v) const { return mpq_class(static_cast<unsigned long>(v)); }
};

// Calls fn(RationalField{}) or fn(PrimeField{p}).
template <typename Fn>
decltype(auto) with_field(FieldSpec spec, Fn&& fn) {
  if (spec.is_rational()) return fn(RationalField{});
  return fn(PrimeField{spec.characteristic()});
}

template <typename F>
using FieldMatrix = Matrix<typename F::value_type>;

template <typename F>
FieldMatrix<F> to_field(const IntMatrix& m, const F& f) {
  FieldMatrix<F> out(m.rows(), m.cols(), f.zero());
  for (std::size_t r = 0; r < m.rows(); ++r)
    for (std::size_t c = 0; c < m.cols(); ++c) out(r, c) = f.from_int(m(r, c));
  return out;
}

// Reduced row echelon form in place; returns the pivot columns in order.
template <typename F>
std::vector<std::size_t> rref(FieldMatrix<F>& m, const F& f) {
  std::vector<std::size_t> pivots;
  std::size_t row = 0;
  for (std::size_t col = 0; col < m.cols() && row < m.rows(); ++col) {
    std::size_t piv = row;
    while (piv < m.rows() && f.is_zero(m(piv, col))) ++piv;
    if (piv == m.rows()) continue;
    if (piv != row)
      for (std::size_t c = 0; c < m.cols(); ++c) std::swap(m(piv, c), m(row, c));
    const auto inv = f.inv(m(row, col));
    for (std::size_t c = col; c < m.cols(); ++c) m(row, c) = f.mul(m(row, c), inv);
    for (std::size_t r = 0; r < m.rows(); ++r) {
      if (r == row || f.is_zero(m(r, col))) continue;
      const auto factor = m(r, col);
      for (std::size_t c = col; c < m.cols(); ++c) m(r, c) = f.sub(m(r, c), f.mul(factor, m(row, c)));
    }
    pivots.push_back(col);
    ++row;
  }
  return pivots;
}

template <typename F>
using Vec = std::vector<typename F::value_type>;

// Null space basis: one vector per free column, in increasing column order.
template <typename F>
std::vector<Vec<F>> kernel_basis(FieldMatrix<F> m, const F& f) {
  const auto pivots = rref(m, f);
  std::vector<bool> is_pivot(m.cols(), false);
  for (auto c : pivots) is_pivot[c] = true;
  std::vector<Vec<F>> basis;
  for (std::size_t free = 0; free < m.cols(); ++free) {
    if (is_pivot[free]) continue;
    Vec<F> v(m.cols(), f.zero());
    v[free] = f.one();
    for (std::size_t r = 0; r < pivots.size(); ++r) v[pivots[r]] = f.sub(f.zero(), m(r, free));
    basis.push_back(std::move(v));
  }
  return basis;
}

// Columns of `m` as vectors.
template <typename F>
std::vector<Vec<F>> column_vectors(const FieldMatrix<F>& m, const F&) {
  std::vector<Vec<F>> out(m.cols(), Vec<F>(m.rows()));
  for (std::size_t r = 0; r < m.rows(); ++r)
    for (std::size_t c = 0; c < m.cols(); ++c) out[c][r] = m(r, c);
  return out;
}

// Matrix whose columns are the given vectors (all of length `dim`).
template <typename F>
FieldMatrix<F> from_columns(const std::vector<Vec<F>>& cols, std::size_t dim, const F& f) {
  FieldMatrix<F> m(dim, cols.size(), f.zero());
  for (std::size_t c = 0; c < cols.size(); ++c)
    for (std::size_t r = 0; r < dim; ++r) m(r, c) = cols[c][r];
  return m;
}

template <typename F>
std::size_t rank_of_vectors(const std::vector<Vec<F>>& vecs, std::size_t dim, const F& f) {
  if (vecs.empty() || dim == 0) return 0;
  auto m = from_columns(vecs, dim, f);
  return rref(m, f).size();
}

} // namespace loccoh
