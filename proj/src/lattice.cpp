#include "tgk/lattice.hpp"

#include <cstdint>
#include <ostream>
#include <sstream>

#include "tgk/error.hpp"

namespace tgk {

std::string_view to_string(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::MalformedTable: return "MalformedTable";
    case ErrorKind::NotTrivalent: return "NotTrivalent";
    case ErrorKind::Disconnected: return "Disconnected";
    case ErrorKind::NotSphere: return "NotSphere";
    case ErrorKind::NotNice: return "NotNice";
    case ErrorKind::NotUnimodular: return "NotUnimodular";
    case ErrorKind::InconsistentFacetVector: return "InconsistentFacetVector";
    case ErrorKind::NoConnection: return "NoConnection";
    case ErrorKind::NotOrientable: return "NotOrientable";
    case ErrorKind::InvalidTorusGraph: return "InvalidTorusGraph";
    case ErrorKind::InadmissibleSite: return "InadmissibleSite";
    case ErrorKind::NotACut: return "NotACut";
    case ErrorKind::InvalidCap: return "InvalidCap";
    case ErrorKind::NotSBShaped: return "NotSBShaped";
    case ErrorKind::NoMultipleEdge: return "NoMultipleEdge";
    case ErrorKind::Already3Connected: return "Already3Connected";
    case ErrorKind::InvalidInput: return "InvalidInput";
    case ErrorKind::InternalInvariantViolation: return "InternalInvariantViolation";
    case ErrorKind::ParseError: return "ParseError";
  }
  return "Unknown";
}

template <typename Tag>
std::string LatticeElement<Tag>::to_string() const {
  std::ostringstream os;
  os << '(' << coords_[0] << ',' << coords_[1] << ',' << coords_[2] << ')';
  return os.str();
}

template class LatticeElement<VectorTag>;
template class LatticeElement<CovectorTag>;

Integer pairing(const LatticeCovector& alpha, const LatticeVector& v) {
  return alpha[0] * v[0] + alpha[1] * v[1] + alpha[2] * v[2];
}

namespace {

// Coordinates below 2^20 in magnitude keep every 3x3 product in 64 bits.
constexpr std::int64_t kSmall = std::int64_t{1} << 20;

template <typename Tag>
bool small_coords(const LatticeElement<Tag>& v, std::array<std::int64_t, 3>& out) {
  for (std::size_t i = 0; i < 3; ++i) {
    if (v[i] >= kSmall || v[i] <= -kSmall) return false;
    out[i] = static_cast<std::int64_t>(v[i]);
  }
  return true;
}

}  // namespace

template <typename Tag>
Integer det3(const LatticeElement<Tag>& a, const LatticeElement<Tag>& b, const LatticeElement<Tag>& c) {
  std::array<std::int64_t, 3> x, y, z;
  if (small_coords(a, x) && small_coords(b, y) && small_coords(c, z)) {
    return x[0] * (y[1] * z[2] - y[2] * z[1]) - y[0] * (x[1] * z[2] - x[2] * z[1]) + z[0] * (x[1] * y[2] - x[2] * y[1]);
  }
  return a[0] * (b[1] * c[2] - b[2] * c[1]) - b[0] * (a[1] * c[2] - a[2] * c[1]) + c[0] * (a[1] * b[2] - a[2] * b[1]);
}

template <typename Tag>
bool is_unimodular_basis(const LatticeElement<Tag>& a, const LatticeElement<Tag>& b, const LatticeElement<Tag>& c) {
  const Integer d = det3(a, b, c);
  return d == 1 || d == -1;
}

namespace {

template <typename Tag>
std::array<Integer, 3> cross(const LatticeElement<Tag>& a, const LatticeElement<Tag>& b) {
  return {a[1] * b[2] - a[2] * b[1], a[2] * b[0] - a[0] * b[2], a[0] * b[1] - a[1] * b[0]};
}

}  // namespace

// The cross product a1 x a2 pairs to zero with a1 and a2 and to det(a1,a2,a3)
// with a3, so dividing by the determinant (a unit) gives the dual element.
template <typename Tag>
Dual<Tag> solve_dual(const LatticeElement<Tag>& a1, const LatticeElement<Tag>& a2, const LatticeElement<Tag>& a3) {
  const Integer d = det3(a1, a2, a3);
  if (d != 1 && d != -1) {
    throw Error(ErrorKind::NotUnimodular, "det(" + a1.to_string() + "," + a2.to_string() + "," + a3.to_string() +
                                              ") = " + d.str());
  }
  auto c = cross(a1, a2);
  for (auto& x : c) x *= d;
  return Dual<Tag>(c);
}

template <typename Tag>
bool is_multiple_of(const LatticeElement<Tag>& v, const LatticeElement<Tag>& base) {
  std::array<std::int64_t, 3> x, b;
  if (small_coords(v, x) && small_coords(base, b)) {
    if (x[1] * b[2] != x[2] * b[1] || x[2] * b[0] != x[0] * b[2] || x[0] * b[1] != x[1] * b[0]) return false;
    for (std::size_t i = 0; i < 3; ++i) {
      if (b[i] != 0) return x[i] % b[i] == 0;
    }
    return false;
  }
  const auto c = cross(v, base);
  if (c[0] != 0 || c[1] != 0 || c[2] != 0) return false;
  // Parallel; the quotient is integral iff it divides at a nonzero coordinate.
  for (std::size_t i = 0; i < 3; ++i) {
    if (base[i] != 0) return v[i] % base[i] == 0;
  }
  return false;
}

template <typename Tag>
LatticeElement<Tag> sign_normalized(const LatticeElement<Tag>& v) {
  for (std::size_t i = 0; i < 3; ++i) {
    if (v[i] > 0) return v;
    if (v[i] < 0) return -v;
  }
  return v;
}

SignClass::SignClass(const LatticeVector& v) : rep_(sign_normalized(v)) {
  if (v.is_zero()) throw Error(ErrorKind::InvalidInput, "SignClass of the zero vector");
}

template Integer det3(const LatticeVector&, const LatticeVector&, const LatticeVector&);
template Integer det3(const LatticeCovector&, const LatticeCovector&, const LatticeCovector&);
template bool is_unimodular_basis(const LatticeVector&, const LatticeVector&, const LatticeVector&);
template bool is_unimodular_basis(const LatticeCovector&, const LatticeCovector&, const LatticeCovector&);
template LatticeCovector solve_dual(const LatticeVector&, const LatticeVector&, const LatticeVector&);
template LatticeVector solve_dual(const LatticeCovector&, const LatticeCovector&, const LatticeCovector&);
template bool is_multiple_of(const LatticeVector&, const LatticeVector&);
template bool is_multiple_of(const LatticeCovector&, const LatticeCovector&);
template LatticeVector sign_normalized(const LatticeVector&);
template LatticeCovector sign_normalized(const LatticeCovector&);

Matrix3 Matrix3::identity() {
  Matrix3 m;
  for (std::size_t i = 0; i < 3; ++i) m.m_[i][i] = 1;
  return m;
}

Matrix3 Matrix3::from_rows(const LatticeCovector& r0, const LatticeCovector& r1, const LatticeCovector& r2) {
  return Matrix3({r0.coords(), r1.coords(), r2.coords()});
}

Matrix3 Matrix3::from_columns(const LatticeVector& c0, const LatticeVector& c1, const LatticeVector& c2) {
  return Matrix3({c0.coords(), c1.coords(), c2.coords()}).transpose();
}

Integer Matrix3::determinant() const {
  return m_[0][0] * (m_[1][1] * m_[2][2] - m_[1][2] * m_[2][1]) - m_[0][1] * (m_[1][0] * m_[2][2] - m_[1][2] * m_[2][0]) +
         m_[0][2] * (m_[1][0] * m_[2][1] - m_[1][1] * m_[2][0]);
}

Matrix3 Matrix3::adjugate() const {
  Matrix3 adj;
  for (std::size_t i = 0; i < 3; ++i) {
    for (std::size_t j = 0; j < 3; ++j) {
      const std::size_t r0 = (j + 1) % 3, r1 = (j + 2) % 3;
      const std::size_t c0 = (i + 1) % 3, c1 = (i + 2) % 3;
      // Cyclic index choice folds the cofactor sign into the minor.
      adj.m_[i][j] = m_[r0][c0] * m_[r1][c1] - m_[r0][c1] * m_[r1][c0];
    }
  }
  return adj;
}

Matrix3 Matrix3::transpose() const {
  Matrix3 t;
  for (std::size_t i = 0; i < 3; ++i)
    for (std::size_t j = 0; j < 3; ++j) t.m_[i][j] = m_[j][i];
  return t;
}

Matrix3 Matrix3::unimodular_inverse() const {
  const Integer d = determinant();
  if (d != 1 && d != -1) throw Error(ErrorKind::NotUnimodular, "matrix determinant " + d.str());
  Matrix3 inv = adjugate();
  for (auto& row : inv.m_)
    for (auto& x : row) x *= d;
  return inv;
}

Matrix3 operator*(const Matrix3& a, const Matrix3& b) {
  Matrix3 c;
  for (std::size_t i = 0; i < 3; ++i)
    for (std::size_t j = 0; j < 3; ++j) c.m_[i][j] = a.m_[i][0] * b.m_[0][j] + a.m_[i][1] * b.m_[1][j] + a.m_[i][2] * b.m_[2][j];
  return c;
}

LatticeCovector Matrix3::act_right(const LatticeCovector& x) const {
  std::array<Integer, 3> out;
  for (std::size_t j = 0; j < 3; ++j) out[j] = x[0] * m_[0][j] + x[1] * m_[1][j] + x[2] * m_[2][j];
  return LatticeCovector(out);
}

LatticeVector Matrix3::act_left(const LatticeVector& v) const {
  std::array<Integer, 3> out;
  for (std::size_t i = 0; i < 3; ++i) out[i] = m_[i][0] * v[0] + m_[i][1] * v[1] + m_[i][2] * v[2];
  return LatticeVector(out);
}

std::ostream& operator<<(std::ostream& os, const LatticeVector& v) { return os << v.to_string(); }
std::ostream& operator<<(std::ostream& os, const LatticeCovector& v) { return os << v.to_string(); }

template <typename Tag>
std::size_t hash_value(const LatticeElement<Tag>& v) {
  std::size_t h = 0x9e3779b97f4a7c15ULL;
  for (const auto& c : v.coords()) {
    h ^= boost::multiprecision::hash_value(c) + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
  }
  return h;
}

template std::size_t hash_value(const LatticeVector&);
template std::size_t hash_value(const LatticeCovector&);

}  // namespace tgk
