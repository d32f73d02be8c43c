#ifndef SURFEM_TENSOR_HPP
#define SURFEM_TENSOR_HPP

#include <array>
#include <cmath>
#include <ostream>

#include "surfem/errors.hpp"

namespace surfem {

// Dense tensor algebra in the 3D embedding space. Everything here is a plain
// value type; the fourth-order tensors are stored with all 81 components
// because the Piola stress tangents lack minor symmetry.

struct Vec3 {
  std::array<double, 3> c{};

  double &operator[](int i) { return c[static_cast<std::size_t>(i)]; }
  double operator[](int i) const { return c[static_cast<std::size_t>(i)]; }

  Vec3 &operator+=(const Vec3 &o) {
    for (int i = 0; i < 3; ++i) c[i] += o.c[i];
    return *this;
  }
  Vec3 &operator-=(const Vec3 &o) {
    for (int i = 0; i < 3; ++i) c[i] -= o.c[i];
    return *this;
  }
  Vec3 &operator*=(double s) {
    for (auto &v : c) v *= s;
    return *this;
  }

  friend Vec3 operator+(Vec3 a, const Vec3 &b) { return a += b; }
  friend Vec3 operator-(Vec3 a, const Vec3 &b) { return a -= b; }
  friend Vec3 operator*(double s, Vec3 a) { return a *= s; }
  friend Vec3 operator*(Vec3 a, double s) { return a *= s; }
  friend Vec3 operator/(Vec3 a, double s) { return a *= 1.0 / s; }
  friend Vec3 operator-(Vec3 a) { return a *= -1.0; }

  friend bool operator==(const Vec3 &a, const Vec3 &b) { return a.c == b.c; }
};

inline double dot(const Vec3 &a, const Vec3 &b) {
  return a[0] * b[0] + a[1] * b[1] + a[2] * b[2];
}

inline Vec3 cross(const Vec3 &a, const Vec3 &b) {
  return {{a[1] * b[2] - a[2] * b[1],  //
           a[2] * b[0] - a[0] * b[2],  //
           a[0] * b[1] - a[1] * b[0]}};
}

inline double norm(const Vec3 &a) { return std::sqrt(dot(a, a)); }

struct Tensor2 {
  // Row-major 3x3.
  std::array<double, 9> c{};

  double &operator()(int i, int j) { return c[static_cast<std::size_t>(3 * i + j)]; }
  double operator()(int i, int j) const { return c[static_cast<std::size_t>(3 * i + j)]; }

  static Tensor2 identity() {
    Tensor2 t;
    t(0, 0) = t(1, 1) = t(2, 2) = 1.0;
    return t;
  }

  Tensor2 &operator+=(const Tensor2 &o) {
    for (std::size_t i = 0; i < 9; ++i) c[i] += o.c[i];
    return *this;
  }
  Tensor2 &operator-=(const Tensor2 &o) {
    for (std::size_t i = 0; i < 9; ++i) c[i] -= o.c[i];
    return *this;
  }
  Tensor2 &operator*=(double s) {
    for (auto &v : c) v *= s;
    return *this;
  }

  friend Tensor2 operator+(Tensor2 a, const Tensor2 &b) { return a += b; }
  friend Tensor2 operator-(Tensor2 a, const Tensor2 &b) { return a -= b; }
  friend Tensor2 operator*(double s, Tensor2 a) { return a *= s; }
  friend Tensor2 operator*(Tensor2 a, double s) { return a *= s; }
  friend Tensor2 operator-(Tensor2 a) { return a *= -1.0; }

  friend bool operator==(const Tensor2 &a, const Tensor2 &b) { return a.c == b.c; }
};

// Composition [A.B]_ij = A_im B_mj.
inline Tensor2 operator*(const Tensor2 &a, const Tensor2 &b) {
  Tensor2 r;
  for (int i = 0; i < 3; ++i)
    for (int m = 0; m < 3; ++m) {
      const double aim = a(i, m);
      for (int j = 0; j < 3; ++j) r(i, j) += aim * b(m, j);
    }
  return r;
}

inline Vec3 operator*(const Tensor2 &a, const Vec3 &v) {
  Vec3 r;
  for (int i = 0; i < 3; ++i) r[i] = a(i, 0) * v[0] + a(i, 1) * v[1] + a(i, 2) * v[2];
  return r;
}

inline Tensor2 outer(const Vec3 &a, const Vec3 &b) {
  Tensor2 r;
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) r(i, j) = a[i] * b[j];
  return r;
}

inline Tensor2 transpose(const Tensor2 &a) {
  Tensor2 r;
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) r(i, j) = a(j, i);
  return r;
}

inline double trace(const Tensor2 &a) { return a(0, 0) + a(1, 1) + a(2, 2); }

// Scalar product A:B = A_ij B_ij.
inline double ddot2(const Tensor2 &a, const Tensor2 &b) {
  double s = 0.0;
  for (std::size_t i = 0; i < 9; ++i) s += a.c[i] * b.c[i];
  return s;
}

inline double norm(const Tensor2 &a) { return std::sqrt(ddot2(a, a)); }

inline double det(const Tensor2 &a) {
  return a(0, 0) * (a(1, 1) * a(2, 2) - a(1, 2) * a(2, 1)) -
         a(0, 1) * (a(1, 0) * a(2, 2) - a(1, 2) * a(2, 0)) +
         a(0, 2) * (a(1, 0) * a(2, 1) - a(1, 1) * a(2, 0));
}

inline double max_row_norm(const Tensor2 &a) {
  double m = 0.0;
  for (int i = 0; i < 3; ++i) {
    const double r = std::sqrt(a(i, 0) * a(i, 0) + a(i, 1) * a(i, 1) + a(i, 2) * a(i, 2));
    m = std::max(m, r);
  }
  return m;
}

// Inverse via the adjugate; rejects matrices whose determinant is small
// relative to the cube of the largest row norm.
inline Tensor2 inv(const Tensor2 &a) {
  const double d = det(a);
  const double scale = max_row_norm(a);
  if (std::abs(d) < 1e-14 * scale * scale * scale)
    throw SingularMatrixError("singular 3x3 matrix in inv(): |det| below scale-aware tolerance");
  const double id = 1.0 / d;
  Tensor2 r;
  r(0, 0) = (a(1, 1) * a(2, 2) - a(1, 2) * a(2, 1)) * id;
  r(0, 1) = (a(0, 2) * a(2, 1) - a(0, 1) * a(2, 2)) * id;
  r(0, 2) = (a(0, 1) * a(1, 2) - a(0, 2) * a(1, 1)) * id;
  r(1, 0) = (a(1, 2) * a(2, 0) - a(1, 0) * a(2, 2)) * id;
  r(1, 1) = (a(0, 0) * a(2, 2) - a(0, 2) * a(2, 0)) * id;
  r(1, 2) = (a(0, 2) * a(1, 0) - a(0, 0) * a(1, 2)) * id;
  r(2, 0) = (a(1, 0) * a(2, 1) - a(1, 1) * a(2, 0)) * id;
  r(2, 1) = (a(0, 1) * a(2, 0) - a(0, 0) * a(2, 1)) * id;
  r(2, 2) = (a(0, 0) * a(1, 1) - a(0, 1) * a(1, 0)) * id;
  return r;
}

struct Tensor4 {
  std::array<double, 81> c{};

  static constexpr std::size_t idx(int i, int j, int k, int l) {
    return static_cast<std::size_t>(((i * 3 + j) * 3 + k) * 3 + l);
  }
  double &operator()(int i, int j, int k, int l) { return c[idx(i, j, k, l)]; }
  double operator()(int i, int j, int k, int l) const { return c[idx(i, j, k, l)]; }

  Tensor4 &operator+=(const Tensor4 &o) {
    for (std::size_t i = 0; i < 81; ++i) c[i] += o.c[i];
    return *this;
  }
  Tensor4 &operator-=(const Tensor4 &o) {
    for (std::size_t i = 0; i < 81; ++i) c[i] -= o.c[i];
    return *this;
  }
  Tensor4 &operator*=(double s) {
    for (auto &v : c) v *= s;
    return *this;
  }

  friend Tensor4 operator+(Tensor4 a, const Tensor4 &b) { return a += b; }
  friend Tensor4 operator-(Tensor4 a, const Tensor4 &b) { return a -= b; }
  friend Tensor4 operator*(double s, Tensor4 a) { return a *= s; }
  friend Tensor4 operator*(Tensor4 a, double s) { return a *= s; }
};

inline double norm(const Tensor4 &a) {
  double s = 0.0;
  for (const double v : a.c) s += v * v;
  return std::sqrt(s);
}

// Standard dyadic product [A (x) B]_ijkl = A_ij B_kl.
inline Tensor4 otimes(const Tensor2 &a, const Tensor2 &b) {
  Tensor4 r;
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j)
      for (int k = 0; k < 3; ++k)
        for (int l = 0; l < 3; ++l) r(i, j, k, l) = a(i, j) * b(k, l);
  return r;
}

// Non-standard product [A (x over) B]_ijkl = A_ik B_jl, so (A (x over) B):X = A.X.B^t.
inline Tensor4 otimes_over(const Tensor2 &a, const Tensor2 &b) {
  Tensor4 r;
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j)
      for (int k = 0; k < 3; ++k)
        for (int l = 0; l < 3; ++l) r(i, j, k, l) = a(i, k) * b(j, l);
  return r;
}

// Non-standard product [A (x under) B]_ijkl = A_il B_jk, so (A (x under) B):X = A.X^t.B^t.
inline Tensor4 otimes_under(const Tensor2 &a, const Tensor2 &b) {
  Tensor4 r;
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j)
      for (int k = 0; k < 3; ++k)
        for (int l = 0; l < 3; ++l) r(i, j, k, l) = a(i, l) * b(j, k);
  return r;
}

// Double contraction [C:X]_ij = C_ijkl X_kl.
inline Tensor2 ddot(const Tensor4 &t, const Tensor2 &x) {
  Tensor2 r;
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) {
      double s = 0.0;
      for (int k = 0; k < 3; ++k)
        for (int l = 0; l < 3; ++l) s += t(i, j, k, l) * x(k, l);
      r(i, j) = s;
    }
  return r;
}

inline std::ostream &operator<<(std::ostream &os, const Vec3 &v) {
  return os << "[" << v[0] << ", " << v[1] << ", " << v[2] << "]";
}

inline std::ostream &operator<<(std::ostream &os, const Tensor2 &t) {
  os << "[";
  for (int i = 0; i < 3; ++i) {
    os << "[" << t(i, 0) << ", " << t(i, 1) << ", " << t(i, 2) << "]";
    if (i < 2) os << ", ";
  }
  return os << "]";
}

}  // namespace surfem

#endif
