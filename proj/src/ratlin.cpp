#include "kpack/ratlin.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <sstream>
#include <utility>

#include "kpack/error.hpp"

namespace kpack {

Rational make_rational(const BigInt& num, const BigInt& den) {
  if (den == 0) throw Error(ErrorKind::InvalidArgument, "zero denominator");
  Rational q(num, den);
  q.canonicalize();
  return q;
}

Rational parse_rational(const std::string& text) {
  const auto slash = text.find('/');
  try {
    if (slash == std::string::npos) return Rational(BigInt(text));
    return make_rational(BigInt(text.substr(0, slash)), BigInt(text.substr(slash + 1)));
  } catch (const std::invalid_argument&) {
    throw Error(ErrorKind::InvalidArgument, "not a rational: '" + text + "'");
  }
}

std::string to_string(const Rational& q) {
  return q.get_num().get_str() + "/" + q.get_den().get_str();
}

bool is_canonical(const Rational& q) {
  if (sgn(q.get_den()) <= 0) return false;
  BigInt g;
  mpz_gcd(g.get_mpz_t(), q.get_num().get_mpz_t(), q.get_den().get_mpz_t());
  return g == 1;
}

std::string to_string(const Signature& s) {
  std::ostringstream os;
  os << '(' << s.positive << ',' << s.negative << ',' << s.zero << ')';
  return os.str();
}

// ---------------------------------------------------------------------------
// RatMatrix

RatMatrix::RatMatrix(std::size_t rows, std::size_t cols)
    : rows_(rows), cols_(cols), data_(rows * cols) {}

RatMatrix::RatMatrix(std::initializer_list<std::initializer_list<long>> rows) {
  rows_ = rows.size();
  cols_ = rows_ == 0 ? 0 : rows.begin()->size();
  data_.reserve(rows_ * cols_);
  for (const auto& row : rows) {
    if (row.size() != cols_) throw Error(ErrorKind::DimensionMismatch, "ragged matrix literal");
    for (long v : row) data_.emplace_back(v);
  }
}

RatMatrix RatMatrix::identity(std::size_t n) {
  RatMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
  return m;
}

RatMatrix RatMatrix::transpose() const {
  RatMatrix t(cols_, rows_);
  for (std::size_t r = 0; r < rows_; ++r)
    for (std::size_t c = 0; c < cols_; ++c) t(c, r) = (*this)(r, c);
  return t;
}

RatMatrix RatMatrix::column(std::size_t c) const {
  RatMatrix v(rows_, 1);
  for (std::size_t r = 0; r < rows_; ++r) v(r, 0) = (*this)(r, c);
  return v;
}

RatMatrix RatMatrix::submatrix(const std::vector<std::size_t>& row_ids,
                               const std::vector<std::size_t>& col_ids) const {
  RatMatrix s(row_ids.size(), col_ids.size());
  for (std::size_t i = 0; i < row_ids.size(); ++i)
    for (std::size_t j = 0; j < col_ids.size(); ++j) s(i, j) = (*this)(row_ids[i], col_ids[j]);
  return s;
}

bool RatMatrix::is_zero() const {
  return std::all_of(data_.begin(), data_.end(), [](const Rational& q) { return sgn(q) == 0; });
}

bool RatMatrix::is_symmetric() const {
  if (!is_square()) return false;
  for (std::size_t r = 0; r < rows_; ++r)
    for (std::size_t c = r + 1; c < cols_; ++c)
      if ((*this)(r, c) != (*this)(c, r)) return false;
  return true;
}

bool RatMatrix::is_diagonal() const {
  for (std::size_t r = 0; r < rows_; ++r)
    for (std::size_t c = 0; c < cols_; ++c)
      if (r != c && sgn((*this)(r, c)) != 0) return false;
  return true;
}

Rational RatMatrix::trace() const {
  Rational t = 0;
  for (std::size_t i = 0; i < std::min(rows_, cols_); ++i) t += (*this)(i, i);
  return t;
}

std::size_t RatMatrix::nonzeros() const {
  return static_cast<std::size_t>(
      std::count_if(data_.begin(), data_.end(), [](const Rational& q) { return sgn(q) != 0; }));
}

RatMatrix& RatMatrix::operator+=(const RatMatrix& other) {
  if (rows_ != other.rows_ || cols_ != other.cols_)
    throw Error(ErrorKind::DimensionMismatch, "matrix sum");
  for (std::size_t i = 0; i < data_.size(); ++i) data_[i] += other.data_[i];
  return *this;
}

RatMatrix& RatMatrix::operator-=(const RatMatrix& other) {
  if (rows_ != other.rows_ || cols_ != other.cols_)
    throw Error(ErrorKind::DimensionMismatch, "matrix difference");
  for (std::size_t i = 0; i < data_.size(); ++i) data_[i] -= other.data_[i];
  return *this;
}

RatMatrix& RatMatrix::operator*=(const Rational& s) {
  for (auto& q : data_) q *= s;
  return *this;
}

RatMatrix operator+(RatMatrix a, const RatMatrix& b) { return a += b; }
RatMatrix operator-(RatMatrix a, const RatMatrix& b) { return a -= b; }
RatMatrix operator*(RatMatrix a, const Rational& s) { return a *= s; }
RatMatrix operator*(const Rational& s, RatMatrix a) { return a *= s; }

RatMatrix operator*(const RatMatrix& a, const RatMatrix& b) {
  if (a.cols() != b.rows()) throw Error(ErrorKind::DimensionMismatch, "matrix product");
  RatMatrix c(a.rows(), b.cols());
  Rational t;
  for (std::size_t i = 0; i < a.rows(); ++i) {
    for (std::size_t k = 0; k < a.cols(); ++k) {
      const Rational& aik = a(i, k);
      if (sgn(aik) == 0) continue;
      for (std::size_t j = 0; j < b.cols(); ++j) {
        const Rational& bkj = b(k, j);
        if (sgn(bkj) == 0) continue;
        t = aik * bkj;
        c(i, j) += t;
      }
    }
  }
  return c;
}

RatMatrix transpose(const RatMatrix& m) { return m.transpose(); }

RatMatrix block_compose(const std::vector<std::vector<RatMatrix>>& blocks) {
  if (blocks.empty()) return {};
  const std::size_t block_cols = blocks.front().size();
  std::vector<std::size_t> heights, widths(block_cols, 0);
  for (std::size_t j = 0; j < block_cols; ++j) widths[j] = blocks.front()[j].cols();
  for (const auto& row : blocks) {
    if (row.size() != block_cols) throw Error(ErrorKind::DimensionMismatch, "ragged block grid");
    const std::size_t h = row.empty() ? 0 : row.front().rows();
    for (std::size_t j = 0; j < block_cols; ++j)
      if (row[j].rows() != h || row[j].cols() != widths[j])
        throw Error(ErrorKind::DimensionMismatch, "block shapes disagree");
    heights.push_back(h);
  }
  const std::size_t total_rows = std::accumulate(heights.begin(), heights.end(), std::size_t{0});
  const std::size_t total_cols = std::accumulate(widths.begin(), widths.end(), std::size_t{0});
  RatMatrix out(total_rows, total_cols);
  std::size_t r0 = 0;
  for (std::size_t bi = 0; bi < blocks.size(); ++bi) {
    std::size_t c0 = 0;
    for (std::size_t bj = 0; bj < block_cols; ++bj) {
      const RatMatrix& b = blocks[bi][bj];
      for (std::size_t r = 0; r < b.rows(); ++r)
        for (std::size_t c = 0; c < b.cols(); ++c) out(r0 + r, c0 + c) = b(r, c);
      c0 += widths[bj];
    }
    r0 += heights[bi];
  }
  return out;
}

RatMatrix hstack(const std::vector<RatMatrix>& parts, std::size_t rows) {
  std::size_t cols = 0;
  for (const auto& p : parts) {
    if (p.rows() != rows && p.cols() != 0) throw Error(ErrorKind::DimensionMismatch, "hstack");
    cols += p.cols();
  }
  RatMatrix out(rows, cols);
  std::size_t c0 = 0;
  for (const auto& p : parts) {
    for (std::size_t r = 0; r < p.rows(); ++r)
      for (std::size_t c = 0; c < p.cols(); ++c) out(r, c0 + c) = p(r, c);
    c0 += p.cols();
  }
  return out;
}

// ---------------------------------------------------------------------------
// Elimination kernels

namespace {

class DisjointSets {
 public:
  explicit DisjointSets(std::size_t n) : parent_(n) { std::iota(parent_.begin(), parent_.end(), 0); }
  std::size_t find(std::size_t x) {
    while (parent_[x] != x) x = parent_[x] = parent_[parent_[x]];
    return x;
  }
  void unite(std::size_t a, std::size_t b) {
    a = find(a);
    b = find(b);
    if (a != b) parent_[std::max(a, b)] = std::min(a, b);
  }

 private:
  std::vector<std::size_t> parent_;
};

// Connected components of the bipartite row/column incidence graph of the
// nonzero pattern. Rank and reduced echelon form split over components, so the
// block-diagonal structure of the operators is exploited without being known.
struct Component {
  std::vector<std::size_t> rows;
  std::vector<std::size_t> cols;
};

std::vector<Component> bipartite_components(const RatMatrix& m) {
  const std::size_t R = m.rows(), C = m.cols();
  DisjointSets sets(R + C);
  for (std::size_t r = 0; r < R; ++r)
    for (std::size_t c = 0; c < C; ++c)
      if (sgn(m(r, c)) != 0) sets.unite(r, R + c);
  std::vector<std::size_t> slot(R + C, static_cast<std::size_t>(-1));
  std::vector<Component> out;
  for (std::size_t c = 0; c < C; ++c) {
    const std::size_t root = sets.find(R + c);
    if (slot[root] == static_cast<std::size_t>(-1)) {
      slot[root] = out.size();
      out.emplace_back();
    }
    out[slot[root]].cols.push_back(c);
  }
  for (std::size_t r = 0; r < R; ++r) {
    const std::size_t root = sets.find(r);
    if (slot[root] != static_cast<std::size_t>(-1)) out[slot[root]].rows.push_back(r);
  }
  return out;
}

// Integer matrix obtained by scaling each row by the lcm of its denominators.
struct IntMatrix {
  std::size_t rows = 0, cols = 0;
  std::vector<BigInt> a;
  BigInt& at(std::size_t r, std::size_t c) { return a[r * cols + c]; }
};

IntMatrix clear_denominators(const RatMatrix& m) {
  IntMatrix out{m.rows(), m.cols(), std::vector<BigInt>(m.rows() * m.cols())};
  BigInt l;
  for (std::size_t r = 0; r < m.rows(); ++r) {
    l = 1;
    for (std::size_t c = 0; c < m.cols(); ++c) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), m(r, c).get_den_mpz_t());
    for (std::size_t c = 0; c < m.cols(); ++c) out.at(r, c) = m(r, c).get_num() * (l / m(r, c).get_den());
  }
  return out;
}

// Fraction-free (Bareiss) forward elimination. Pivot: first column with a
// nonzero at or below the current row, first such row. Returns pivot columns;
// the first pivots.size() rows of `a` hold the integer echelon form.
std::vector<std::size_t> bareiss_echelon(IntMatrix& a) {
  std::vector<std::size_t> pivots;
  BigInt prev = 1, t;
  std::size_t r = 0;
  for (std::size_t c = 0; c < a.cols && r < a.rows; ++c) {
    std::size_t p = r;
    while (p < a.rows && sgn(a.at(p, c)) == 0) ++p;
    if (p == a.rows) continue;
    if (p != r)
      for (std::size_t j = c; j < a.cols; ++j) std::swap(a.at(p, j), a.at(r, j));
    const BigInt piv = a.at(r, c);
    for (std::size_t i = r + 1; i < a.rows; ++i) {
      const BigInt f = a.at(i, c);
      for (std::size_t j = c + 1; j < a.cols; ++j) {
        BigInt& x = a.at(i, j);
        if (sgn(f) == 0) {
          if (sgn(x) == 0) continue;
          x *= piv;
        } else {
          x *= piv;
          t = f * a.at(r, j);
          x -= t;
        }
        mpz_divexact(x.get_mpz_t(), x.get_mpz_t(), prev.get_mpz_t());
      }
      a.at(i, c) = 0;
    }
    prev = piv;
    pivots.push_back(c);
    ++r;
  }
  return pivots;
}

// Null space of one component in reduced echelon normalization; columns are
// indexed by the component's local columns.
std::vector<std::pair<std::size_t, std::vector<Rational>>> component_kernel(const RatMatrix& block) {
  IntMatrix a = clear_denominators(block);
  const auto pivots = bareiss_echelon(a);
  std::vector<bool> is_pivot(a.cols, false);
  for (auto c : pivots) is_pivot[c] = true;
  std::vector<std::pair<std::size_t, std::vector<Rational>>> out;
  for (std::size_t f = 0; f < a.cols; ++f) {
    if (is_pivot[f]) continue;
    std::vector<Rational> x(a.cols);
    x[f] = 1;
    for (std::size_t k = pivots.size(); k-- > 0;) {
      const std::size_t pc = pivots[k];
      Rational s = 0;
      for (std::size_t j = pc + 1; j < a.cols; ++j)
        if (sgn(x[j]) != 0 && sgn(a.at(k, j)) != 0) s += Rational(a.at(k, j)) * x[j];
      x[pc] = -s / Rational(a.at(k, pc));
    }
    out.emplace_back(f, std::move(x));
  }
  return out;
}

// Congruence diagonalization of a dense symmetric block; destroys `a`.
Signature dense_signature(RatMatrix a) {
  const std::size_t n = a.rows();
  Signature s;
  Rational t;
  for (std::size_t k = 0; k < n; ++k) {
    std::size_t p = k;
    while (p < n && sgn(a(p, p)) == 0) ++p;
    if (p == n) {
      // No usable diagonal: look for an off-diagonal entry and replace the
      // basis pair (u, v) by (u + v, u - v), which puts 2a(u,v) and -2a(u,v)
      // on the diagonal.
      std::size_t u = n, v = n;
      for (std::size_t i = k; i < n && u == n; ++i)
        for (std::size_t j = i + 1; j < n; ++j)
          if (sgn(a(i, j)) != 0) {
            u = i;
            v = j;
            break;
          }
      if (u == n) {
        s.zero += n - k;
        return s;
      }
      for (std::size_t j = k; j < n; ++j) {
        Rational ru = a(u, j), rv = a(v, j);
        a(u, j) = ru + rv;
        a(v, j) = ru - rv;
      }
      for (std::size_t i = k; i < n; ++i) {
        Rational cu = a(i, u), cv = a(i, v);
        a(i, u) = cu + cv;
        a(i, v) = cu - cv;
      }
      p = u;
    }
    if (p != k) {
      for (std::size_t j = 0; j < n; ++j) std::swap(a(p, j), a(k, j));
      for (std::size_t i = 0; i < n; ++i) std::swap(a(i, p), a(i, k));
    }
    const Rational d = a(k, k);
    (sgn(d) > 0 ? s.positive : s.negative) += 1;
    for (std::size_t i = k + 1; i < n; ++i) {
      if (sgn(a(i, k)) == 0) continue;
      const Rational f = a(i, k) / d;
      for (std::size_t j = k + 1; j < n; ++j) {
        if (sgn(a(k, j)) == 0) continue;
        t = f * a(k, j);
        a(i, j) -= t;
      }
    }
  }
  return s;
}

}  // namespace

std::size_t rank(const RatMatrix& m) {
  std::size_t total = 0;
  for (const auto& comp : bipartite_components(m)) {
    if (comp.rows.empty()) continue;
    IntMatrix a = clear_denominators(m.submatrix(comp.rows, comp.cols));
    total += bareiss_echelon(a).size();
  }
  return total;
}

RowEchelon row_echelon(const RatMatrix& m) {
  std::vector<std::pair<std::size_t, std::vector<std::pair<std::size_t, Rational>>>> found;
  for (const auto& comp : bipartite_components(m)) {
    if (comp.rows.empty()) continue;
    IntMatrix a = clear_denominators(m.submatrix(comp.rows, comp.cols));
    const auto pivots = bareiss_echelon(a);
    std::vector<std::vector<Rational>> rows(pivots.size(), std::vector<Rational>(a.cols));
    for (std::size_t k = 0; k < pivots.size(); ++k) {
      const Rational piv(a.at(k, pivots[k]));
      for (std::size_t j = pivots[k]; j < a.cols; ++j)
        if (sgn(a.at(k, j)) != 0) rows[k][j] = Rational(a.at(k, j)) / piv;
    }
    for (std::size_t k = pivots.size(); k-- > 0;) {
      for (std::size_t i = 0; i < k; ++i) {
        const Rational f = rows[i][pivots[k]];
        if (sgn(f) == 0) continue;
        for (std::size_t j = pivots[k]; j < a.cols; ++j)
          if (sgn(rows[k][j]) != 0) rows[i][j] -= f * rows[k][j];
      }
    }
    for (std::size_t k = 0; k < pivots.size(); ++k) {
      std::vector<std::pair<std::size_t, Rational>> entries;
      for (std::size_t j = 0; j < a.cols; ++j)
        if (sgn(rows[k][j]) != 0) entries.emplace_back(comp.cols[j], rows[k][j]);
      found.emplace_back(comp.cols[pivots[k]], std::move(entries));
    }
  }
  std::sort(found.begin(), found.end(), [](const auto& x, const auto& y) { return x.first < y.first; });
  RowEchelon out{RatMatrix(found.size(), m.cols()), {}};
  for (std::size_t k = 0; k < found.size(); ++k) {
    out.pivots.push_back(found[k].first);
    for (const auto& [c, v] : found[k].second) out.rows(k, c) = v;
  }
  return out;
}

RatMatrix kernel_basis(const RatMatrix& m) {
  std::vector<std::pair<std::size_t, std::vector<std::pair<std::size_t, Rational>>>> vectors;
  for (const auto& comp : bipartite_components(m)) {
    if (comp.rows.empty()) {
      for (auto c : comp.cols) vectors.push_back({c, {{c, Rational(1)}}});
      continue;
    }
    for (auto& [free_local, x] : component_kernel(m.submatrix(comp.rows, comp.cols))) {
      std::vector<std::pair<std::size_t, Rational>> entries;
      for (std::size_t j = 0; j < x.size(); ++j)
        if (sgn(x[j]) != 0) entries.emplace_back(comp.cols[j], std::move(x[j]));
      vectors.push_back({comp.cols[free_local], std::move(entries)});
    }
  }
  std::sort(vectors.begin(), vectors.end(),
            [](const auto& a, const auto& b) { return a.first < b.first; });
  RatMatrix out(m.cols(), vectors.size());
  for (std::size_t k = 0; k < vectors.size(); ++k)
    for (const auto& [row, q] : vectors[k].second) out(row, k) = q;
  return out;
}

Signature signature(const RatMatrix& m) {
  if (!m.is_symmetric()) throw Error(ErrorKind::NonSymmetric, "signature requires a symmetric matrix");
  // Components of the graph on indices with an edge wherever m(i, j) != 0;
  // inertia is additive over them.
  const std::size_t n = m.rows();
  DisjointSets sets(n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j)
      if (sgn(m(i, j)) != 0) sets.unite(i, j);
  std::map<std::size_t, std::vector<std::size_t>> groups;
  for (std::size_t i = 0; i < n; ++i) groups[sets.find(i)].push_back(i);
  Signature s;
  for (const auto& [root, ids] : groups) {
    const Signature part = dense_signature(m.submatrix(ids, ids));
    s.positive += part.positive;
    s.negative += part.negative;
    s.zero += part.zero;
  }
  return s;
}

}  // namespace kpack
