#pragma once

// Exact integer linear algebra on Z^3 and its dual lattice.

#include <array>
#include <compare>
#include <cstddef>
#include <functional>
#include <iosfwd>
#include <string>

#include <boost/multiprecision/cpp_int.hpp>

namespace tgk {

using Integer = boost::multiprecision::cpp_int;

struct VectorTag;
struct CovectorTag;

/// An element of Z^3 (Tag = VectorTag) or of its dual (Tag = CovectorTag).
///
/// The two lattices are kept as distinct types so that a characteristic
/// vector can never be confused with an axial label; the only bridge between
/// them is `pairing`.
template <typename Tag>
class LatticeElement {
 public:
  LatticeElement() = default;
  LatticeElement(Integer x, Integer y, Integer z) : coords_{std::move(x), std::move(y), std::move(z)} {}
  explicit LatticeElement(std::array<Integer, 3> coords) : coords_(std::move(coords)) {}

  const Integer& operator[](std::size_t i) const { return coords_[i]; }
  const std::array<Integer, 3>& coords() const { return coords_; }

  bool is_zero() const { return coords_[0] == 0 && coords_[1] == 0 && coords_[2] == 0; }

  friend bool operator==(const LatticeElement&, const LatticeElement&) = default;
  friend auto operator<=>(const LatticeElement& a, const LatticeElement& b) {
    for (std::size_t i = 0; i < 3; ++i) {
      if (a.coords_[i] < b.coords_[i]) return std::strong_ordering::less;
      if (a.coords_[i] > b.coords_[i]) return std::strong_ordering::greater;
    }
    return std::strong_ordering::equal;
  }

  friend LatticeElement operator+(const LatticeElement& a, const LatticeElement& b) {
    return {a[0] + b[0], a[1] + b[1], a[2] + b[2]};
  }
  friend LatticeElement operator-(const LatticeElement& a, const LatticeElement& b) {
    return {a[0] - b[0], a[1] - b[1], a[2] - b[2]};
  }
  friend LatticeElement operator-(const LatticeElement& a) { return {-a[0], -a[1], -a[2]}; }
  friend LatticeElement operator*(const Integer& k, const LatticeElement& a) {
    return {k * a[0], k * a[1], k * a[2]};
  }

  std::string to_string() const;

 private:
  std::array<Integer, 3> coords_{};
};

using LatticeVector = LatticeElement<VectorTag>;
using LatticeCovector = LatticeElement<CovectorTag>;

template <typename Tag>
struct DualOf;
template <>
struct DualOf<VectorTag> {
  using type = LatticeCovector;
};
template <>
struct DualOf<CovectorTag> {
  using type = LatticeVector;
};
template <typename Tag>
using Dual = typename DualOf<Tag>::type;

Integer pairing(const LatticeCovector& alpha, const LatticeVector& v);

/// Determinant of the 3x3 matrix whose columns are a, b, c.
template <typename Tag>
Integer det3(const LatticeElement<Tag>& a, const LatticeElement<Tag>& b, const LatticeElement<Tag>& c);

template <typename Tag>
bool is_unimodular_basis(const LatticeElement<Tag>& a, const LatticeElement<Tag>& b, const LatticeElement<Tag>& c);

/// The unique dual element x with <x,a1> = <x,a2> = 0 and <x,a3> = 1.
/// Throws Error(NotUnimodular) unless det3(a1,a2,a3) = +-1.
template <typename Tag>
Dual<Tag> solve_dual(const LatticeElement<Tag>& a1, const LatticeElement<Tag>& a2, const LatticeElement<Tag>& a3);

/// True iff `v` is an integer multiple of the nonzero element `base`.
template <typename Tag>
bool is_multiple_of(const LatticeElement<Tag>& v, const LatticeElement<Tag>& base);

/// Element of t_Z / {+-1}: the representative has a positive first nonzero coordinate.
class SignClass {
 public:
  explicit SignClass(const LatticeVector& v);

  const LatticeVector& representative() const { return rep_; }

  friend bool operator==(const SignClass&, const SignClass&) = default;
  friend auto operator<=>(const SignClass&, const SignClass&) = default;

 private:
  LatticeVector rep_;
};

/// Sign-class normalization applied to either lattice.
template <typename Tag>
LatticeElement<Tag> sign_normalized(const LatticeElement<Tag>& v);

/// Integer 3x3 matrix acting on column vectors; used for GL(3,Z) changes of basis.
class Matrix3 {
 public:
  Matrix3() = default;
  explicit Matrix3(std::array<std::array<Integer, 3>, 3> rows) : m_(std::move(rows)) {}

  static Matrix3 identity();
  /// Matrix whose rows are the given covectors.
  static Matrix3 from_rows(const LatticeCovector& r0, const LatticeCovector& r1, const LatticeCovector& r2);
  /// Matrix whose columns are the given vectors.
  static Matrix3 from_columns(const LatticeVector& c0, const LatticeVector& c1, const LatticeVector& c2);

  const Integer& operator()(std::size_t i, std::size_t j) const { return m_[i][j]; }

  Integer determinant() const;
  Matrix3 adjugate() const;
  Matrix3 transpose() const;
  /// Exact inverse; throws Error(NotUnimodular) unless det = +-1.
  Matrix3 unimodular_inverse() const;

  friend Matrix3 operator*(const Matrix3& a, const Matrix3& b);
  friend bool operator==(const Matrix3&, const Matrix3&) = default;

  /// Treats the covector as a row vector: returns x * M.
  LatticeCovector act_right(const LatticeCovector& x) const;
  /// Treats the vector as a column vector: returns M * v.
  LatticeVector act_left(const LatticeVector& v) const;

 private:
  std::array<std::array<Integer, 3>, 3> m_{};
};

std::ostream& operator<<(std::ostream& os, const LatticeVector& v);
std::ostream& operator<<(std::ostream& os, const LatticeCovector& v);

template <typename Tag>
std::size_t hash_value(const LatticeElement<Tag>& v);

inline LatticeVector unit_vector(int i) {
  std::array<Integer, 3> c{0, 0, 0};
  c[static_cast<std::size_t>(i)] = 1;
  return LatticeVector(c);
}
inline LatticeCovector unit_covector(int i) {
  std::array<Integer, 3> c{0, 0, 0};
  c[static_cast<std::size_t>(i)] = 1;
  return LatticeCovector(c);
}

}  // namespace tgk

template <typename Tag>
struct std::hash<tgk::LatticeElement<Tag>> {
  std::size_t operator()(const tgk::LatticeElement<Tag>& v) const { return tgk::hash_value(v); }
};
