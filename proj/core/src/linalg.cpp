#include "dendrikit/linalg.hpp"

#include <sstream>

namespace dendrikit {

namespace {

void require_same_field(const FieldSpec& a, const FieldSpec& b) {
  if (a != b) throw FieldMismatch("mixed fields " + a.str() + " and " + b.str());
}

// Row echelon form in place; returns pivot column per eliminated row.
std::vector<int> echelonize(std::vector<std::vector<Scalar>>& m) {
  std::vector<int> pivots;
  if (m.empty()) return pivots;
  const int rows = static_cast<int>(m.size());
  const int cols = static_cast<int>(m[0].size());
  int row = 0;
  for (int col = 0; col < cols && row < rows; ++col) {
    int pivot = -1;
    for (int r = row; r < rows; ++r)
      if (!m[r][col].is_zero()) {
        pivot = r;
        break;
      }
    if (pivot < 0) continue;
    std::swap(m[row], m[pivot]);
    const Scalar inv = m[row][col].inverse();
    for (int c = col; c < cols; ++c) m[row][c] = m[row][c] * inv;
    for (int r = 0; r < rows; ++r) {
      if (r == row || m[r][col].is_zero()) continue;
      const Scalar factor = m[r][col];
      for (int c = col; c < cols; ++c) m[r][c] = m[r][c] - factor * m[row][c];
    }
    pivots.push_back(col);
    ++row;
  }
  return pivots;
}

}  // namespace

Vec Vec::unit(const FieldSpec& f, int dim, int i) {
  Vec v(f, dim);
  v[i] = Scalar::one(f);
  return v;
}

Vec Vec::operator+(const Vec& o) const {
  require_same_field(field_, o.field_);
  if (dim() != o.dim()) throw DimMismatch("vector addition of dims " + std::to_string(dim()) +
                                          " and " + std::to_string(o.dim()));
  Vec out = *this;
  for (int i = 0; i < dim(); ++i) out.c_[i] += o.c_[i];
  return out;
}

Vec Vec::operator-(const Vec& o) const { return *this + (-o); }

Vec Vec::operator-() const {
  Vec out = *this;
  for (auto& s : out.c_) s = -s;
  return out;
}

Vec Vec::scaled(const Scalar& s) const {
  Vec out = *this;
  for (auto& x : out.c_) x *= s;
  return out;
}

bool Vec::operator==(const Vec& o) const { return field_ == o.field_ && c_ == o.c_; }

bool Vec::is_zero() const {
  for (const auto& s : c_)
    if (!s.is_zero()) return false;
  return true;
}

int Vec::cmp(const Vec& o) const {
  if (dim() != o.dim()) throw DimMismatch("cmp of different dims");
  for (int i = 0; i < dim(); ++i)
    if (int c = c_[i].cmp(o.c_[i]); c != 0) return c;
  return 0;
}

std::string Vec::str() const {
  std::ostringstream os;
  os << '[';
  for (int i = 0; i < dim(); ++i) {
    if (i) os << ", ";
    os << c_[i].str();
  }
  os << ']';
  return os.str();
}

LinMap LinMap::identity(const FieldSpec& f, int n) {
  LinMap m(f, n, n);
  for (int i = 0; i < n; ++i) m.at(i, i) = Scalar::one(f);
  return m;
}

Vec LinMap::apply(const Vec& v) const {
  require_same_field(field_, v.field());
  if (v.dim() != cols_)
    throw DimMismatch("applying " + std::to_string(rows_) + "x" + std::to_string(cols_) +
                      " map to dim " + std::to_string(v.dim()));
  Vec out(field_, rows_);
  for (int r = 0; r < rows_; ++r)
    for (int c = 0; c < cols_; ++c) out[r] += at(r, c) * v[c];
  return out;
}

Vec LinMap::column(int j) const {
  Vec out(field_, rows_);
  for (int r = 0; r < rows_; ++r) out[r] = at(r, j);
  return out;
}

void LinMap::set_column(int j, const Vec& v) {
  if (v.dim() != rows_) throw DimMismatch("column dim mismatch");
  for (int r = 0; r < rows_; ++r) at(r, j) = v[r];
}

LinMap LinMap::compose(const LinMap& o) const {
  require_same_field(field_, o.field_);
  if (cols_ != o.rows_)
    throw DimMismatch("composing " + std::to_string(rows_) + "x" + std::to_string(cols_) +
                      " with " + std::to_string(o.rows_) + "x" + std::to_string(o.cols_));
  LinMap out(field_, rows_, o.cols_);
  for (int r = 0; r < rows_; ++r)
    for (int c = 0; c < o.cols_; ++c) {
      Scalar acc = Scalar::zero(field_);
      for (int k = 0; k < cols_; ++k) acc += at(r, k) * o.at(k, c);
      out.at(r, c) = acc;
    }
  return out;
}

LinMap LinMap::operator+(const LinMap& o) const {
  require_same_field(field_, o.field_);
  if (rows_ != o.rows_ || cols_ != o.cols_) throw DimMismatch("matrix addition shape mismatch");
  LinMap out = *this;
  for (size_t i = 0; i < a_.size(); ++i) out.a_[i] += o.a_[i];
  return out;
}

LinMap LinMap::operator-(const LinMap& o) const {
  require_same_field(field_, o.field_);
  if (rows_ != o.rows_ || cols_ != o.cols_) throw DimMismatch("matrix subtraction shape mismatch");
  LinMap out = *this;
  for (size_t i = 0; i < a_.size(); ++i) out.a_[i] -= o.a_[i];
  return out;
}

bool LinMap::operator==(const LinMap& o) const {
  return field_ == o.field_ && rows_ == o.rows_ && cols_ == o.cols_ && a_ == o.a_;
}

bool LinMap::is_zero() const {
  for (const auto& s : a_)
    if (!s.is_zero()) return false;
  return true;
}

int LinMap::rank() const {
  std::vector<std::vector<Scalar>> m(rows_, std::vector<Scalar>(cols_, Scalar::zero(field_)));
  for (int r = 0; r < rows_; ++r)
    for (int c = 0; c < cols_; ++c) m[r][c] = at(r, c);
  return static_cast<int>(echelonize(m).size());
}

bool LinMap::is_invertible() const { return rows_ == cols_ && rank() == rows_; }

LinMap LinMap::inverse() const {
  if (rows_ != cols_) throw Singular("inverse of a non-square map");
  // Augment with the identity and reduce.
  std::vector<std::vector<Scalar>> m(rows_, std::vector<Scalar>(2 * cols_, Scalar::zero(field_)));
  for (int r = 0; r < rows_; ++r) {
    for (int c = 0; c < cols_; ++c) m[r][c] = at(r, c);
    m[r][cols_ + r] = Scalar::one(field_);
  }
  auto pivots = echelonize(m);
  if (static_cast<int>(pivots.size()) != rows_ || pivots.back() >= cols_)
    throw Singular("singular map");
  LinMap out(field_, rows_, cols_);
  for (int r = 0; r < rows_; ++r)
    for (int c = 0; c < cols_; ++c) out.at(r, c) = m[r][cols_ + c];
  return out;
}

std::optional<Vec> LinMap::solve(const Vec& b) const {
  require_same_field(field_, b.field());
  if (b.dim() != rows_) throw DimMismatch("solve: rhs dim mismatch");
  std::vector<std::vector<Scalar>> m(rows_, std::vector<Scalar>(cols_ + 1, Scalar::zero(field_)));
  for (int r = 0; r < rows_; ++r) {
    for (int c = 0; c < cols_; ++c) m[r][c] = at(r, c);
    m[r][cols_] = b[r];
  }
  auto pivots = echelonize(m);
  // Inconsistent iff some pivot lands in the augmented column.
  if (!pivots.empty() && pivots.back() == cols_) return std::nullopt;
  Vec x(field_, cols_);
  for (size_t i = 0; i < pivots.size(); ++i) x[pivots[i]] = m[i][cols_];
  return x;
}

std::vector<Vec> LinMap::kernel_basis() const {
  std::vector<std::vector<Scalar>> m(rows_, std::vector<Scalar>(cols_, Scalar::zero(field_)));
  for (int r = 0; r < rows_; ++r)
    for (int c = 0; c < cols_; ++c) m[r][c] = at(r, c);
  auto pivots = echelonize(m);
  std::vector<bool> is_pivot(cols_, false);
  for (int p : pivots) is_pivot[p] = true;
  std::vector<Vec> basis;
  for (int free = 0; free < cols_; ++free) {
    if (is_pivot[free]) continue;
    Vec v(field_, cols_);
    v[free] = Scalar::one(field_);
    for (size_t i = 0; i < pivots.size(); ++i) v[pivots[i]] = -m[i][free];
    basis.push_back(std::move(v));
  }
  return basis;
}

std::string LinMap::str() const {
  std::ostringstream os;
  os << '[';
  for (int r = 0; r < rows_; ++r) {
    if (r) os << "; ";
    for (int c = 0; c < cols_; ++c) {
      if (c) os << ' ';
      os << at(r, c).str();
    }
  }
  os << ']';
  return os.str();
}

Vec BilinearMap::at(int i, int j) const {
  Vec out(field_, target_);
  for (int k = 0; k < target_; ++k) out[k] = c(i, j, k);
  return out;
}

void BilinearMap::set_pair(int i, int j, const Vec& v) {
  if (v.dim() != target_) throw DimMismatch("set_pair target dim mismatch");
  for (int k = 0; k < target_; ++k) c(i, j, k) = v[k];
}

Vec BilinearMap::apply(const Vec& u, const Vec& v) const {
  require_same_field(field_, u.field());
  require_same_field(field_, v.field());
  if (u.dim() != left_ || v.dim() != right_)
    throw DimMismatch("bilinear map (" + std::to_string(left_) + "," + std::to_string(right_) +
                      ") applied to dims (" + std::to_string(u.dim()) + "," +
                      std::to_string(v.dim()) + ")");
  Vec out(field_, target_);
  for (int i = 0; i < left_; ++i) {
    if (u[i].is_zero()) continue;
    for (int j = 0; j < right_; ++j) {
      if (v[j].is_zero()) continue;
      const Scalar uv = u[i] * v[j];
      for (int k = 0; k < target_; ++k) out[k] += uv * c(i, j, k);
    }
  }
  return out;
}

BilinearMap BilinearMap::operator+(const BilinearMap& o) const {
  require_same_field(field_, o.field_);
  if (left_ != o.left_ || right_ != o.right_ || target_ != o.target_)
    throw DimMismatch("bilinear map addition shape mismatch");
  BilinearMap out = *this;
  for (size_t i = 0; i < c_.size(); ++i) out.c_[i] += o.c_[i];
  return out;
}

BilinearMap BilinearMap::operator-(const BilinearMap& o) const {
  require_same_field(field_, o.field_);
  if (left_ != o.left_ || right_ != o.right_ || target_ != o.target_)
    throw DimMismatch("bilinear map subtraction shape mismatch");
  BilinearMap out = *this;
  for (size_t i = 0; i < c_.size(); ++i) out.c_[i] -= o.c_[i];
  return out;
}

bool BilinearMap::operator==(const BilinearMap& o) const {
  return field_ == o.field_ && left_ == o.left_ && right_ == o.right_ && target_ == o.target_ &&
         c_ == o.c_;
}

bool BilinearMap::is_zero() const {
  for (const auto& s : c_)
    if (!s.is_zero()) return false;
  return true;
}

BilinearMap BilinearMap::flipped() const {
  BilinearMap out(field_, right_, left_, target_);
  for (int i = 0; i < left_; ++i)
    for (int j = 0; j < right_; ++j)
      for (int k = 0; k < target_; ++k) out.c(j, i, k) = c(i, j, k);
  return out;
}

}  // namespace dendrikit
