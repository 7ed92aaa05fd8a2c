#include "vermakit/linalg.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

#include "vermakit/errors.hpp"

namespace vermakit {

Matrix Matrix::identity(std::size_t n) {
  Matrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
  return m;
}

Matrix Matrix::transpose() const {
  Matrix t(cols_, rows_);
  for (std::size_t r = 0; r < rows_; ++r) {
    for (std::size_t c = 0; c < cols_; ++c) t(c, r) = (*this)(r, c);
  }
  return t;
}

bool Matrix::is_zero() const {
  return std::all_of(data_.begin(), data_.end(), [](const Rational& x) { return x == 0; });
}

std::vector<Rational> Matrix::apply(std::span<const Rational> v) const {
  if (v.size() != cols_) throw ContractError("matrix/vector size mismatch");
  std::vector<Rational> out(rows_);
  for (std::size_t r = 0; r < rows_; ++r) {
    Rational acc = 0;
    for (std::size_t c = 0; c < cols_; ++c) {
      const Rational& x = (*this)(r, c);
      if (x != 0 && v[c] != 0) acc += x * v[c];
    }
    out[r] = acc;
  }
  return out;
}

Matrix operator*(const Matrix& a, const Matrix& b) {
  if (a.cols_ != b.rows_) throw ContractError("matrix product size mismatch");
  Matrix out(a.rows_, b.cols_);
  for (std::size_t i = 0; i < a.rows_; ++i) {
    for (std::size_t k = 0; k < a.cols_; ++k) {
      const Rational& x = a(i, k);
      if (x == 0) continue;
      for (std::size_t j = 0; j < b.cols_; ++j) {
        if (b(k, j) != 0) out(i, j) += x * b(k, j);
      }
    }
  }
  return out;
}

Matrix operator+(const Matrix& a, const Matrix& b) {
  if (a.rows_ != b.rows_ || a.cols_ != b.cols_) throw ContractError("matrix sum size mismatch");
  Matrix out = a;
  for (std::size_t i = 0; i < out.data_.size(); ++i) out.data_[i] += b.data_[i];
  return out;
}

Matrix operator-(const Matrix& a, const Matrix& b) {
  if (a.rows_ != b.rows_ || a.cols_ != b.cols_) throw ContractError("matrix difference size mismatch");
  Matrix out = a;
  for (std::size_t i = 0; i < out.data_.size(); ++i) out.data_[i] -= b.data_[i];
  return out;
}

Matrix operator*(const Rational& s, const Matrix& a) {
  Matrix out = a;
  for (auto& x : out.data_) x *= s;
  return out;
}

bool operator==(const Matrix& a, const Matrix& b) {
  return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
}

Matrix vstack(std::span<const Matrix> blocks) {
  if (blocks.empty()) return {};
  std::size_t cols = blocks.front().cols();
  std::size_t rows = 0;
  for (const auto& b : blocks) {
    if (b.cols() != cols) throw ContractError("vstack: column count mismatch");
    rows += b.rows();
  }
  Matrix out(rows, cols);
  std::size_t r0 = 0;
  for (const auto& b : blocks) {
    for (std::size_t r = 0; r < b.rows(); ++r) {
      for (std::size_t c = 0; c < cols; ++c) out(r0 + r, c) = b(r, c);
    }
    r0 += b.rows();
  }
  return out;
}

Matrix kron(const Matrix& a, const Matrix& b) {
  Matrix out(a.rows() * b.rows(), a.cols() * b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i) {
    for (std::size_t j = 0; j < a.cols(); ++j) {
      if (a(i, j) == 0) continue;
      for (std::size_t k = 0; k < b.rows(); ++k) {
        for (std::size_t l = 0; l < b.cols(); ++l) {
          out(i * b.rows() + k, j * b.cols() + l) = a(i, j) * b(k, l);
        }
      }
    }
  }
  return out;
}

namespace {

using IntRow = std::vector<Integer>;

void divide_by_content(IntRow& row) {
  Integer g = 0;
  for (const auto& x : row) {
    if (x != 0) mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), x.get_mpz_t());
    if (g == 1) return;
  }
  if (g > 1) {
    for (auto& x : row) {
      if (x != 0) mpz_divexact(x.get_mpz_t(), x.get_mpz_t(), g.get_mpz_t());
    }
  }
}

// Fraction-free Gauss-Jordan on the first `ncoef` columns; further columns
// (the right-hand side) are carried along. Returns the pivot column of each
// leading row; rows past the pivots are zero on the coefficient columns.
std::vector<std::size_t> gauss_jordan(std::vector<IntRow>& rows, std::size_t ncoef) {
  for (auto& row : rows) divide_by_content(row);
  std::vector<std::size_t> pivots;
  std::size_t r = 0;
  for (std::size_t c = 0; c < ncoef && r < rows.size(); ++c) {
    // Pivot on the sparsest candidate row to limit fill-in.
    std::size_t best = rows.size();
    std::size_t best_weight = 0;
    for (std::size_t i = r; i < rows.size(); ++i) {
      if (rows[i][c] == 0) continue;
      std::size_t weight = static_cast<std::size_t>(
          std::count_if(rows[i].begin(), rows[i].end(), [](const Integer& x) { return x != 0; }));
      if (best == rows.size() || weight < best_weight) {
        best = i;
        best_weight = weight;
      }
    }
    if (best == rows.size()) continue;
    std::swap(rows[r], rows[best]);
    const IntRow& piv = rows[r];
    for (std::size_t i = 0; i < rows.size(); ++i) {
      if (i == r || rows[i][c] == 0) continue;
      Integer g;
      mpz_gcd(g.get_mpz_t(), piv[c].get_mpz_t(), rows[i][c].get_mpz_t());
      Integer a = piv[c] / g;
      Integer b = rows[i][c] / g;
      IntRow& row = rows[i];
      for (std::size_t k = 0; k < row.size(); ++k) {
        if (piv[k] == 0) {
          if (row[k] != 0) row[k] *= a;
        } else {
          row[k] = a * row[k] - b * piv[k];
        }
      }
      divide_by_content(row);
    }
    pivots.push_back(c);
    ++r;
  }
  return pivots;
}

IntRow to_integer_row(std::span<const Rational> values) {
  Integer l = 1;
  for (const auto& v : values) {
    if (v != 0) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), v.get_den_mpz_t());
  }
  IntRow out(values.size());
  for (std::size_t i = 0; i < values.size(); ++i) {
    if (values[i] == 0) continue;
    Integer num = values[i].get_num();
    Integer scale = l / values[i].get_den();
    out[i] = num * scale;
  }
  return out;
}

struct Component {
  std::vector<std::size_t> columns;  // global column indices, ascending
  std::vector<std::size_t> rows;     // global row indices
};

std::size_t find_root(std::vector<std::size_t>& parent, std::size_t x) {
  while (parent[x] != x) {
    parent[x] = parent[parent[x]];
    x = parent[x];
  }
  return x;
}

// Splits the columns of `a` into groups that never share a nonzero row.
// Rows that are entirely zero are returned separately.
std::vector<Component> split_components(const Matrix& a, std::vector<std::size_t>& zero_rows) {
  std::vector<std::size_t> parent(a.cols());
  std::iota(parent.begin(), parent.end(), 0);
  std::vector<std::size_t> first_nonzero(a.rows(), a.cols());
  for (std::size_t r = 0; r < a.rows(); ++r) {
    for (std::size_t c = 0; c < a.cols(); ++c) {
      if (a(r, c) == 0) continue;
      if (first_nonzero[r] == a.cols()) {
        first_nonzero[r] = c;
      } else {
        std::size_t x = find_root(parent, first_nonzero[r]);
        std::size_t y = find_root(parent, c);
        if (x != y) parent[std::max(x, y)] = std::min(x, y);
      }
    }
  }
  std::vector<std::size_t> index_of_root(a.cols(), a.cols());
  std::vector<Component> comps;
  for (std::size_t c = 0; c < a.cols(); ++c) {
    std::size_t root = find_root(parent, c);
    if (index_of_root[root] == a.cols()) {
      index_of_root[root] = comps.size();
      comps.emplace_back();
    }
    comps[index_of_root[root]].columns.push_back(c);
  }
  for (std::size_t r = 0; r < a.rows(); ++r) {
    if (first_nonzero[r] == a.cols()) {
      zero_rows.push_back(r);
    } else {
      comps[index_of_root[find_root(parent, first_nonzero[r])]].rows.push_back(r);
    }
  }
  return comps;
}

std::vector<IntRow> component_rows(const Matrix& a, const Component& comp, std::span<const Rational> rhs) {
  std::vector<IntRow> rows;
  rows.reserve(comp.rows.size());
  std::vector<Rational> buf;
  for (std::size_t r : comp.rows) {
    buf.clear();
    for (std::size_t c : comp.columns) buf.push_back(a(r, c));
    if (!rhs.empty()) buf.push_back(rhs[r]);
    rows.push_back(to_integer_row(buf));
  }
  return rows;
}

}  // namespace

std::size_t rank(const Matrix& a) {
  std::vector<std::size_t> zero_rows;
  std::size_t total = 0;
  for (const auto& comp : split_components(a, zero_rows)) {
    auto rows = component_rows(a, comp, {});
    total += gauss_jordan(rows, comp.columns.size()).size();
  }
  return total;
}

std::vector<std::vector<Rational>> nullspace(const Matrix& a) {
  std::vector<std::size_t> zero_rows;
  std::vector<std::pair<std::size_t, std::vector<Rational>>> by_free_column;
  for (const auto& comp : split_components(a, zero_rows)) {
    auto rows = component_rows(a, comp, {});
    auto pivots = gauss_jordan(rows, comp.columns.size());
    std::vector<bool> is_pivot(comp.columns.size(), false);
    for (std::size_t pc : pivots) is_pivot[pc] = true;
    for (std::size_t f = 0; f < comp.columns.size(); ++f) {
      if (is_pivot[f]) continue;
      std::vector<Rational> x(a.cols());
      x[comp.columns[f]] = 1;
      for (std::size_t i = 0; i < pivots.size(); ++i) {
        if (rows[i][f] == 0) continue;
        x[comp.columns[pivots[i]]] = Rational(-rows[i][f], rows[i][pivots[i]]);
        x[comp.columns[pivots[i]]].canonicalize();
      }
      by_free_column.emplace_back(comp.columns[f], primitive_integer_vector(x));
    }
  }
  std::sort(by_free_column.begin(), by_free_column.end(),
            [](const auto& l, const auto& r) { return l.first < r.first; });
  std::vector<std::vector<Rational>> basis;
  basis.reserve(by_free_column.size());
  for (auto& [col, v] : by_free_column) basis.push_back(std::move(v));
  return basis;
}

std::optional<std::vector<Rational>> solve(const Matrix& a, std::span<const Rational> rhs) {
  if (rhs.size() != a.rows()) throw ContractError("solve: right-hand side size mismatch");
  std::vector<std::size_t> zero_rows;
  auto comps = split_components(a, zero_rows);
  for (std::size_t r : zero_rows) {
    if (rhs[r] != 0) return std::nullopt;
  }
  std::vector<Rational> x(a.cols());
  for (const auto& comp : comps) {
    auto rows = component_rows(a, comp, rhs);
    std::size_t ncoef = comp.columns.size();
    auto pivots = gauss_jordan(rows, ncoef);
    for (std::size_t i = pivots.size(); i < rows.size(); ++i) {
      if (rows[i][ncoef] != 0) return std::nullopt;
    }
    for (std::size_t i = 0; i < pivots.size(); ++i) {
      Rational v(rows[i][ncoef], rows[i][pivots[i]]);
      v.canonicalize();
      x[comp.columns[pivots[i]]] = v;
    }
  }
  return x;
}

std::vector<Rational> primitive_integer_vector(std::span<const Rational> v) {
  IntRow ints = to_integer_row(v);
  divide_by_content(ints);
  auto first = std::find_if(ints.begin(), ints.end(), [](const Integer& x) { return x != 0; });
  int sign = (first != ints.end() && *first < 0) ? -1 : 1;
  std::vector<Rational> out(v.size());
  for (std::size_t i = 0; i < ints.size(); ++i) out[i] = Rational(sign * ints[i]);
  return out;
}

}  // namespace vermakit
