#include "limitrep/linalg.hpp"

#include <algorithm>
#include <sstream>

namespace limitrep::linalg {

SparseVec SparseVec::scaled(const Scalar& c) const {
  if (c.is_zero()) return {};
  SparseVec r;
  r.t.reserve(t.size());
  for (const auto& [i, x] : t) r.t.emplace_back(i, x * c);
  return r;
}

std::string SparseVec::str(const std::vector<std::string>* labels) const {
  std::ostringstream os;
  os << "{";
  bool first = true;
  for (const auto& [i, x] : t) {
    if (!first) os << ", ";
    first = false;
    if (labels && i < labels->size())
      os << (*labels)[i];
    else
      os << i;
    os << ": " << x.str();
  }
  os << "}";
  return os.str();
}

SparseVec sv_unit(std::uint32_t i, const Scalar& one) {
  SparseVec v;
  v.t.emplace_back(i, one);
  return v;
}

SparseVec sv_add(const SparseVec& a, const SparseVec& b) {
  SparseVec r;
  r.t.reserve(a.t.size() + b.t.size());
  size_t i = 0, j = 0;
  while (i < a.t.size() || j < b.t.size()) {
    if (j == b.t.size() || (i < a.t.size() && a.t[i].first < b.t[j].first)) {
      r.t.push_back(a.t[i++]);
    } else if (i == a.t.size() || b.t[j].first < a.t[i].first) {
      r.t.push_back(b.t[j++]);
    } else {
      Scalar s = a.t[i].second + b.t[j].second;
      if (!s.is_zero()) r.t.emplace_back(a.t[i].first, std::move(s));
      ++i, ++j;
    }
  }
  return r;
}

SparseVec sv_add_scaled(const SparseVec& a, const SparseVec& b, const Scalar& c) {
  if (c.is_zero()) return a;
  SparseVec r;
  r.t.reserve(a.t.size() + b.t.size());
  size_t i = 0, j = 0;
  while (i < a.t.size() || j < b.t.size()) {
    if (j == b.t.size() || (i < a.t.size() && a.t[i].first < b.t[j].first)) {
      r.t.push_back(a.t[i++]);
    } else if (i == a.t.size() || b.t[j].first < a.t[i].first) {
      r.t.emplace_back(b.t[j].first, b.t[j].second * c);
      ++j;
    } else {
      Scalar s = a.t[i].second + b.t[j].second * c;
      if (!s.is_zero()) r.t.emplace_back(a.t[i].first, std::move(s));
      ++i, ++j;
    }
  }
  return r;
}

bool sv_equal(const SparseVec& a, const SparseVec& b) {
  if (a.t.size() != b.t.size()) return false;
  for (size_t i = 0; i < a.t.size(); ++i)
    if (a.t[i].first != b.t[i].first || !(a.t[i].second == b.t[i].second)) return false;
  return true;
}

// ---- SpanSolver -------------------------------------------------------------

// Rows are kept fully inter-reduced (RREF): each row is monic at its pivot
// and has zeros at every other row's pivot.  Reduction is then a single
// ascending pass and residues are canonical on the non-pivot labels.

bool SpanSolver::insert(const SparseVec& v0) {
  SparseVec v = v0;
  std::vector<Scalar> expr;
  if (track_) {
    expr.assign(rows_raw_.size() + 1, F_.zero());
    expr.back() = F_.one();
  }
  size_t ri = 0;
  while (!v.empty() && ri < rows_.size()) {
    std::uint32_t p = rows_[ri].v.pivot();
    auto it = std::lower_bound(v.t.begin(), v.t.end(), p,
                               [](const auto& e, std::uint32_t q) { return e.first < q; });
    if (it != v.t.end() && it->first == p) {
      Scalar c = -it->second;
      if (track_) {
        for (size_t k = 0; k < rows_[ri].expr.size(); ++k)
          expr[k] = expr[k] + rows_[ri].expr[k] * c;
      }
      v = sv_add_scaled(v, rows_[ri].v, c);
    }
    ++ri;
  }
  if (v.empty()) return false;
  Scalar inv = v.pivot_coeff().inverse();
  v = v.scaled(inv);
  if (track_)
    for (auto& x : expr) x = x * inv;
  // eliminate the new pivot from existing rows
  const std::uint32_t np = v.pivot();
  for (auto& row : rows_) {
    auto it = std::lower_bound(row.v.t.begin(), row.v.t.end(), np,
                               [](const auto& e, std::uint32_t q) { return e.first < q; });
    if (it != row.v.t.end() && it->first == np) {
      Scalar c = -it->second;
      if (track_) {
        row.expr.resize(rows_raw_.size() + 1, F_.zero());
        for (size_t k = 0; k < expr.size(); ++k)
          row.expr[k] = row.expr[k] + expr[k] * c;
      }
      row.v = sv_add_scaled(row.v, v, c);
    }
  }
  Row row;
  row.v = std::move(v);
  if (track_) {
    for (auto& r : rows_) r.expr.resize(rows_raw_.size() + 1, F_.zero());
    row.expr = std::move(expr);
  }
  auto it = std::lower_bound(rows_.begin(), rows_.end(), row.v.pivot(),
                             [](const Row& r, std::uint32_t p) { return r.v.pivot() < p; });
  rows_.insert(it, std::move(row));
  rows_raw_.push_back(v0);
  return true;
}

SparseVec SpanSolver::reduce(const SparseVec& v0) const {
  SparseVec v = v0;
  for (const auto& row : rows_) {
    if (v.empty()) break;
    std::uint32_t p = row.v.pivot();
    auto it = std::lower_bound(v.t.begin(), v.t.end(), p,
                               [](const auto& e, std::uint32_t q) { return e.first < q; });
    if (it != v.t.end() && it->first == p) v = sv_add_scaled(v, row.v, -it->second);
  }
  return v;
}

std::optional<std::vector<Scalar>> SpanSolver::express(const SparseVec& v0) const {
  if (!track_) throw internal_error("SpanSolver::express requires expression tracking");
  std::vector<Scalar> coords(rows_raw_.size(), F_.zero());
  SparseVec v = v0;
  for (const auto& row : rows_) {
    if (v.empty()) break;
    std::uint32_t p = row.v.pivot();
    auto it = std::lower_bound(v.t.begin(), v.t.end(), p,
                               [](const auto& e, std::uint32_t q) { return e.first < q; });
    if (it != v.t.end() && it->first == p) {
      Scalar c = it->second;
      v = sv_add_scaled(v, row.v, -c);
      for (size_t k = 0; k < row.expr.size() && k < coords.size(); ++k)
        coords[k] = coords[k] + row.expr[k] * c;
    }
  }
  if (!v.empty()) return std::nullopt;
  return coords;
}

std::vector<SparseVec> SpanSolver::echelon_rows() const {
  std::vector<SparseVec> out;
  out.reserve(rows_.size());
  for (const auto& r : rows_) out.push_back(r.v);
  return out;
}

std::vector<std::uint32_t> SpanSolver::pivots() const {
  std::vector<std::uint32_t> p;
  p.reserve(rows_.size());
  for (const auto& r : rows_) p.push_back(r.v.pivot());
  return p;
}

bool SpanSolver::has_pivot(std::uint32_t label) const {
  auto it = std::lower_bound(rows_.begin(), rows_.end(), label,
                             [](const Row& r, std::uint32_t p) { return r.v.pivot() < p; });
  return it != rows_.end() && it->v.pivot() == label;
}

// ---- dense helpers ----------------------------------------------------------

Mat mat_zero(const CoeffField& F, std::uint32_t r, std::uint32_t c) {
  return Mat(r, std::vector<Scalar>(c, F.zero()));
}

Mat mat_identity(const CoeffField& F, std::uint32_t n) {
  Mat m = mat_zero(F, n, n);
  for (std::uint32_t i = 0; i < n; ++i) m[i][i] = F.one();
  return m;
}

Mat mat_mul(const CoeffField& F, const Mat& a, const Mat& b) {
  const std::uint32_t r = static_cast<std::uint32_t>(a.size());
  const std::uint32_t k = static_cast<std::uint32_t>(b.size());
  const std::uint32_t c = static_cast<std::uint32_t>(b.empty() ? 0 : b[0].size());
  Mat m = mat_zero(F, r, c);
  for (std::uint32_t i = 0; i < r; ++i)
    for (std::uint32_t t = 0; t < k; ++t) {
      if (a[i][t].is_zero()) continue;
      for (std::uint32_t j = 0; j < c; ++j) {
        if (b[t][j].is_zero()) continue;
        m[i][j] = m[i][j] + a[i][t] * b[t][j];
      }
    }
  return m;
}

namespace {
// returns pivot columns; a is reduced in place to row echelon form
std::vector<std::uint32_t> row_echelon(Mat& a) {
  std::vector<std::uint32_t> pivots;
  if (a.empty()) return pivots;
  const std::uint32_t rows = static_cast<std::uint32_t>(a.size());
  const std::uint32_t cols = static_cast<std::uint32_t>(a[0].size());
  std::uint32_t r = 0;
  for (std::uint32_t c = 0; c < cols && r < rows; ++c) {
    std::uint32_t sel = r;
    while (sel < rows && a[sel][c].is_zero()) ++sel;
    if (sel == rows) continue;
    std::swap(a[sel], a[r]);
    Scalar inv = a[r][c].inverse();
    for (std::uint32_t j = c; j < cols; ++j) a[r][j] = a[r][j] * inv;
    for (std::uint32_t i = 0; i < rows; ++i) {
      if (i == r || a[i][c].is_zero()) continue;
      Scalar f = a[i][c];
      for (std::uint32_t j = c; j < cols; ++j) a[i][j] = a[i][j] - f * a[r][j];
    }
    pivots.push_back(c);
    ++r;
  }
  return pivots;
}
} // namespace

std::uint32_t mat_rank(const CoeffField& F, Mat a) {
  (void)F;
  return static_cast<std::uint32_t>(row_echelon(a).size());
}

std::optional<Mat> mat_inverse(const CoeffField& F, Mat a) {
  const std::uint32_t n = static_cast<std::uint32_t>(a.size());
  for (std::uint32_t i = 0; i < n; ++i) {
    a[i].resize(2 * n, F.zero());
    a[i][n + i] = F.one();
  }
  auto piv = row_echelon(a);
  if (piv.size() != n || piv.back() != n - 1) return std::nullopt;
  for (std::uint32_t i = 0; i < n; ++i)
    if (piv[i] != i) return std::nullopt;
  Mat inv = mat_zero(F, n, n);
  for (std::uint32_t i = 0; i < n; ++i)
    for (std::uint32_t j = 0; j < n; ++j) inv[i][j] = a[i][n + j];
  return inv;
}

std::vector<std::vector<Scalar>> mat_nullspace(const CoeffField& F, Mat a) {
  if (a.empty()) return {};
  const std::uint32_t cols = static_cast<std::uint32_t>(a[0].size());
  auto piv = row_echelon(a);
  std::vector<bool> is_pivot(cols, false);
  for (auto c : piv) is_pivot[c] = true;
  std::vector<std::vector<Scalar>> basis;
  for (std::uint32_t freec = 0; freec < cols; ++freec) {
    if (is_pivot[freec]) continue;
    std::vector<Scalar> v(cols, F.zero());
    v[freec] = F.one();
    for (size_t r = 0; r < piv.size(); ++r) {
      // row r has pivot at piv[r]: v[piv[r]] = -a[r][freec]
      v[piv[r]] = -a[r][freec];
    }
    basis.push_back(std::move(v));
  }
  return basis;
}

} // namespace limitrep::linalg
