#pragma once

#include <optional>
#include <string>
#include <vector>

#include "dendrikit/scalar.hpp"

namespace dendrikit {

/// Coordinate vector over an implicit ordered basis e0, e1, ...
class Vec {
 public:
  Vec(const FieldSpec& f, int dim) : field_(f), c_(dim, Scalar::zero(f)) {}
  static Vec unit(const FieldSpec& f, int dim, int i);

  int dim() const { return static_cast<int>(c_.size()); }
  const FieldSpec& field() const { return field_; }

  const Scalar& operator[](int i) const { return c_[i]; }
  Scalar& operator[](int i) { return c_[i]; }

  Vec operator+(const Vec& o) const;
  Vec operator-(const Vec& o) const;
  Vec operator-() const;
  Vec scaled(const Scalar& s) const;
  Vec& operator+=(const Vec& o) { return *this = *this + o; }
  Vec& operator-=(const Vec& o) { return *this = *this - o; }

  bool operator==(const Vec& o) const;
  bool operator!=(const Vec& o) const { return !(*this == o); }
  bool is_zero() const;

  /// Lexicographic coordinate order; canonical-form tie-breaking only.
  int cmp(const Vec& o) const;

  std::string str() const;  // e.g. "[2, -1/3]"

 private:
  FieldSpec field_;
  std::vector<Scalar> c_;
};

/// Linear map as a rows x cols matrix; column j is the image of source basis
/// vector j.
class LinMap {
 public:
  LinMap(const FieldSpec& f, int rows, int cols)
      : field_(f), rows_(rows), cols_(cols), a_(static_cast<size_t>(rows) * cols, Scalar::zero(f)) {}
  static LinMap identity(const FieldSpec& f, int n);

  int rows() const { return rows_; }
  int cols() const { return cols_; }
  const FieldSpec& field() const { return field_; }

  const Scalar& at(int r, int c) const { return a_[static_cast<size_t>(r) * cols_ + c]; }
  Scalar& at(int r, int c) { return a_[static_cast<size_t>(r) * cols_ + c]; }

  Vec apply(const Vec& v) const;  // DimMismatch
  Vec column(int j) const;
  void set_column(int j, const Vec& v);

  /// this after o: (this.compose(o))(x) = this(o(x)).
  LinMap compose(const LinMap& o) const;

  LinMap operator+(const LinMap& o) const;
  LinMap operator-(const LinMap& o) const;
  bool operator==(const LinMap& o) const;
  bool operator!=(const LinMap& o) const { return !(*this == o); }
  bool is_zero() const;

  int rank() const;
  bool is_invertible() const;
  LinMap inverse() const;  // Singular

  /// One solution x of this * x = b, if any.
  std::optional<Vec> solve(const Vec& b) const;
  std::vector<Vec> kernel_basis() const;

  std::string str() const;

 private:
  FieldSpec field_;
  int rows_, cols_;
  std::vector<Scalar> a_;
};

/// Structure-constant tensor c[i][j][k] of a bilinear map U x V -> W:
/// the k-th coordinate of (e_i, e_j) under the map. Dense; dims stay tiny.
class BilinearMap {
 public:
  BilinearMap(const FieldSpec& f, int left, int right, int target)
      : field_(f),
        left_(left),
        right_(right),
        target_(target),
        c_(static_cast<size_t>(left) * right * target, Scalar::zero(f)) {}

  int left() const { return left_; }
  int right() const { return right_; }
  int target() const { return target_; }
  const FieldSpec& field() const { return field_; }

  const Scalar& c(int i, int j, int k) const {
    return c_[(static_cast<size_t>(i) * right_ + j) * target_ + k];
  }
  Scalar& c(int i, int j, int k) {
    return c_[(static_cast<size_t>(i) * right_ + j) * target_ + k];
  }

  /// Image of the basis pair (e_i, e_j).
  Vec at(int i, int j) const;
  void set_pair(int i, int j, const Vec& v);

  Vec apply(const Vec& u, const Vec& v) const;  // DimMismatch

  BilinearMap operator+(const BilinearMap& o) const;  // DimMismatch
  BilinearMap operator-(const BilinearMap& o) const;
  bool operator==(const BilinearMap& o) const;
  bool operator!=(const BilinearMap& o) const { return !(*this == o); }
  bool is_zero() const;

  /// Arguments swapped: flipped().c(i,j,k) == c(j,i,k).
  BilinearMap flipped() const;

 private:
  FieldSpec field_;
  int left_, right_, target_;
  std::vector<Scalar> c_;
};

}  // namespace dendrikit
