#include "limitrep/weyl.hpp"

#include <algorithm>
#include <mutex>
#include <sstream>
#include <unordered_map>

namespace limitrep::weyl {

namespace {
std::string window_str(const std::vector<std::int32_t>& w) {
  std::ostringstream os;
  for (size_t i = 0; i < w.size(); ++i) {
    if (i) os << ",";
    os << w[i];
  }
  return os.str();
}
} // namespace

// ---- WElement ----------------------------------------------------------------

WElement::WElement(const CoxeterSystem* W, std::vector<std::int32_t> window)
    : W_(W), w_(std::move(window)) {}

bool WElement::is_identity() const {
  for (size_t i = 0; i < w_.size(); ++i)
    if (w_[i] != static_cast<std::int32_t>(i + 1)) return false;
  return true;
}

WElement WElement::operator*(const WElement& o) const {
  if (W_ != o.W_) throw input_error("Coxeter system mismatch");
  // (uv)(i) = u(v(i)), windows are signed maps
  std::vector<std::int32_t> r(w_.size());
  for (size_t i = 0; i < w_.size(); ++i) {
    std::int32_t v = o.w_[i];
    std::int32_t u = w_[std::abs(v) - 1];
    r[i] = v > 0 ? u : -u;
  }
  return WElement(W_, std::move(r));
}

WElement WElement::inverse() const {
  std::vector<std::int32_t> r(w_.size());
  for (size_t i = 0; i < w_.size(); ++i) {
    std::int32_t v = w_[i];
    if (v > 0)
      r[v - 1] = static_cast<std::int32_t>(i + 1);
    else
      r[-v - 1] = -static_cast<std::int32_t>(i + 1);
  }
  return WElement(W_, std::move(r));
}

bool WElement::operator==(const WElement& o) const { return W_ == o.W_ && w_ == o.w_; }

WElement WElement::right_mul_gen(std::uint32_t s) const {
  std::vector<std::int32_t> r = w_;
  switch (W_->family()) {
    case CoxFamily::A:
      std::swap(r[s - 1], r[s]);
      break;
    case CoxFamily::B:
      if (s == 1)
        r[0] = -r[0];
      else
        std::swap(r[s - 2], r[s - 1]);
      break;
    case CoxFamily::D:
      if (s == 1) {
        std::int32_t a = r[0], b = r[1];
        r[0] = -b;
        r[1] = -a;
      } else {
        std::swap(r[s - 2], r[s - 1]);
      }
      break;
  }
  return WElement(W_, std::move(r));
}

WElement WElement::left_mul_gen(std::uint32_t s) const {
  return W_->generator(s) * (*this);
}

std::uint32_t WElement::length() const {
  const auto& w = w_;
  std::uint32_t inv = 0;
  for (size_t i = 0; i < w.size(); ++i)
    for (size_t j = i + 1; j < w.size(); ++j)
      if (w[i] > w[j]) ++inv;
  switch (W_->family()) {
    case CoxFamily::A:
      return inv;
    case CoxFamily::B: {
      std::uint32_t neg = 0;
      for (auto v : w)
        if (v < 0) neg += static_cast<std::uint32_t>(-v);
      return inv + neg;
    }
    case CoxFamily::D: {
      std::uint32_t neg = 0;
      for (auto v : w)
        if (v < 0) neg += static_cast<std::uint32_t>(-v - 1);
      return inv + neg;
    }
  }
  throw internal_error("unreachable");
}

bool WElement::right_descent(std::uint32_t s) const {
  return right_mul_gen(s).length() < length();
}

bool WElement::left_descent(std::uint32_t s) const {
  return left_mul_gen(s).length() < length();
}

std::vector<std::uint32_t> WElement::reduced_word() const {
  std::vector<std::uint32_t> word;
  WElement w = *this;
  while (!w.is_identity()) {
    bool moved = false;
    for (std::uint32_t s = 1; s <= W_->rank(); ++s) {
      if (w.left_descent(s)) {
        word.push_back(s);
        w = w.left_mul_gen(s);
        moved = true;
        break;
      }
    }
    if (!moved) throw internal_error("no descent on a non-identity element");
  }
  return word;
}

std::string WElement::str() const { return window_str(w_); }

// ---- KLPoly -------------------------------------------------------------------

int KLPoly::degree() const {
  for (size_t i = c.size(); i-- > 0;)
    if (c[i]) return static_cast<int>(i);
  return -1;
}

std::int64_t KLPoly::eval_one() const {
  std::int64_t s = 0;
  for (auto x : c) s += x;
  return s;
}

bool KLPoly::operator==(const KLPoly& o) const {
  size_t n = std::max(c.size(), o.c.size());
  for (size_t i = 0; i < n; ++i)
    if (at(i) != o.at(i)) return false;
  return true;
}

std::string KLPoly::str() const {
  if (degree() < 0) return "0";
  std::ostringstream os;
  bool first = true;
  for (size_t i = 0; i < c.size(); ++i) {
    if (!c[i]) continue;
    if (!first) os << (c[i] > 0 ? "+" : "");
    first = false;
    if (i == 0 || c[i] != 1) os << c[i];
    if (i >= 1) {
      if (c[i] != 1) os << "*";
      os << "q";
      if (i > 1) os << "^" << i;
    }
  }
  return os.str();
}

namespace {
KLPoly kl_zero() { return KLPoly{}; }
KLPoly kl_one() { return KLPoly{{1}}; }

KLPoly kl_add(const KLPoly& a, const KLPoly& b) {
  KLPoly r;
  r.c.resize(std::max(a.c.size(), b.c.size()), 0);
  for (size_t i = 0; i < r.c.size(); ++i) r.c[i] = a.at(i) + b.at(i);
  return r;
}

KLPoly kl_shift(const KLPoly& a, std::uint32_t k) { // * q^k
  KLPoly r;
  r.c.assign(a.c.size() + k, 0);
  for (size_t i = 0; i < a.c.size(); ++i) r.c[i + k] = a.c[i];
  return r;
}

KLPoly kl_scale(const KLPoly& a, std::int64_t m) {
  KLPoly r = a;
  for (auto& x : r.c) x *= m;
  return r;
}
} // namespace

// ---- CoxeterSystem tables -------------------------------------------------------

struct CoxeterSystem::Tables {
  std::vector<WElement> elems;
  std::map<std::vector<std::int32_t>, std::uint32_t> index;
  std::vector<std::vector<std::uint32_t>> rmult, lmult; // [elem][gen-1]
  std::vector<std::uint32_t> len;
  std::vector<std::uint32_t> inv;
  std::vector<std::uint32_t> smallest_left_descent; // 0 for identity
  std::vector<std::vector<std::uint64_t>> bruhat;   // bitrows over y
  std::unordered_map<std::uint64_t, KLPoly> kl_memo;
  std::map<CellKind, CellPartition> cells;
  std::recursive_mutex kl_mu;

  bool leq(std::uint32_t y, std::uint32_t w) const {
    return (bruhat[w][y >> 6] >> (y & 63)) & 1;
  }
};

CoxeterSystem::CoxeterSystem(CoxFamily fam, std::uint32_t rank) : fam_(fam), rank_(rank) {}

CoxPtr CoxeterSystem::get(CoxFamily fam, std::uint32_t rank) {
  std::uint32_t min_rank = fam == CoxFamily::A ? 1 : (fam == CoxFamily::B ? 2 : 3);
  if (rank < min_rank) throw input_error("rank too small for this family");
  if (rank > 16) throw input_error("rank too large for desk scale");
  static std::map<std::pair<int, std::uint32_t>, CoxPtr> registry;
  static std::mutex mu;
  std::lock_guard<std::mutex> lk(mu);
  auto key = std::make_pair(static_cast<int>(fam), rank);
  auto it = registry.find(key);
  if (it != registry.end()) return it->second;
  CoxPtr W(new CoxeterSystem(fam, rank));
  registry.emplace(key, W);
  return W;
}

CoxPtr CoxeterSystem::parse(const std::string& s) {
  if (s.size() < 2) throw input_error("cannot parse Coxeter type '" + s + "'");
  CoxFamily fam;
  switch (s[0]) {
    case 'A': fam = CoxFamily::A; break;
    case 'B': fam = CoxFamily::B; break;
    case 'D': fam = CoxFamily::D; break;
    default: throw input_error("unknown Coxeter family in '" + s + "'");
  }
  return get(fam, static_cast<std::uint32_t>(std::stoul(s.substr(1))));
}

std::uint32_t CoxeterSystem::coxeter_m(std::uint32_t i, std::uint32_t j) const {
  if (i == j) return 1;
  if (i > j) std::swap(i, j);
  switch (fam_) {
    case CoxFamily::A:
      return j - i == 1 ? 3 : 2;
    case CoxFamily::B:
      if (i == 1 && j == 2) return 4;
      return (i >= 2 && j - i == 1) ? 3 : 2;
    case CoxFamily::D:
      if (i == 1) return j == 3 ? 3 : 2;
      return j - i == 1 ? 3 : 2;
  }
  throw internal_error("unreachable");
}

std::uint64_t CoxeterSystem::order() const {
  auto fact = [](std::uint32_t n) {
    std::uint64_t r = 1;
    for (std::uint32_t i = 2; i <= n; ++i) r *= i;
    return r;
  };
  switch (fam_) {
    case CoxFamily::A: return fact(rank_ + 1);
    case CoxFamily::B: return fact(rank_) << rank_;
    case CoxFamily::D: return fact(rank_) << (rank_ - 1);
  }
  throw internal_error("unreachable");
}

std::string CoxeterSystem::name() const {
  std::ostringstream os;
  os << (fam_ == CoxFamily::A ? 'A' : fam_ == CoxFamily::B ? 'B' : 'D') << rank_;
  return os.str();
}

WElement CoxeterSystem::identity() const {
  std::uint32_t n = fam_ == CoxFamily::A ? rank_ + 1 : rank_;
  std::vector<std::int32_t> w(n);
  for (std::uint32_t i = 0; i < n; ++i) w[i] = static_cast<std::int32_t>(i + 1);
  return WElement(this, std::move(w));
}

WElement CoxeterSystem::generator(std::uint32_t i) const {
  if (i < 1 || i > rank_) throw input_error("generator index out of range");
  return identity().right_mul_gen(i);
}

WElement CoxeterSystem::from_window(std::vector<std::int32_t> win) const {
  std::uint32_t n = fam_ == CoxFamily::A ? rank_ + 1 : rank_;
  if (win.size() != n) throw input_error("window has wrong size");
  std::vector<bool> seen(n, false);
  std::uint32_t negs = 0;
  for (auto v : win) {
    std::uint32_t a = static_cast<std::uint32_t>(std::abs(v));
    if (a < 1 || a > n || seen[a - 1]) throw input_error("not a permutation window");
    seen[a - 1] = true;
    if (v < 0) ++negs;
  }
  if (fam_ == CoxFamily::A && negs) throw input_error("type A windows are unsigned");
  if (fam_ == CoxFamily::D && (negs & 1)) throw input_error("type D windows have even sign count");
  return WElement(this, std::move(win));
}

WElement CoxeterSystem::from_word(const std::vector<std::uint32_t>& word) const {
  WElement w = identity();
  for (auto s : word) w = w.right_mul_gen(s);
  return w;
}

WElement CoxeterSystem::longest_element(const std::vector<std::uint32_t>& J) const {
  WElement w = identity();
  bool moved = true;
  while (moved) {
    moved = false;
    for (auto s : J) {
      if (!w.right_descent(s)) {
        w = w.right_mul_gen(s);
        moved = true;
      }
    }
  }
  return w;
}

CoxeterSystem::Tables& CoxeterSystem::tables() const {
  std::lock_guard<std::mutex> lk(mu_);
  if (tables_) return *tables_;
  if (order() > bounds::weyl_enum()) throw bound_error("Coxeter enumeration bound exceeded");
  auto t = std::make_unique<Tables>();
  // BFS by right multiplication, generators in ascending order: the result is
  // sorted by length with identity first
  t->elems.push_back(identity());
  t->index.emplace(t->elems[0].window(), 0);
  for (std::uint32_t head = 0; head < t->elems.size(); ++head) {
    WElement w = t->elems[head];
    for (std::uint32_t s = 1; s <= rank_; ++s) {
      WElement ws = w.right_mul_gen(s);
      if (!t->index.count(ws.window())) {
        t->index.emplace(ws.window(), static_cast<std::uint32_t>(t->elems.size()));
        t->elems.push_back(ws);
      }
    }
  }
  const std::uint32_t N = static_cast<std::uint32_t>(t->elems.size());
  if (N != order()) throw internal_error("enumeration does not match the order formula");
  t->rmult.assign(N, std::vector<std::uint32_t>(rank_));
  t->lmult.assign(N, std::vector<std::uint32_t>(rank_));
  t->len.resize(N);
  t->inv.resize(N);
  t->smallest_left_descent.assign(N, 0);
  for (std::uint32_t i = 0; i < N; ++i) {
    t->len[i] = t->elems[i].length();
    t->inv[i] = t->index.at(t->elems[i].inverse().window());
    for (std::uint32_t s = 1; s <= rank_; ++s) {
      t->rmult[i][s - 1] = t->index.at(t->elems[i].right_mul_gen(s).window());
      t->lmult[i][s - 1] = t->index.at(t->elems[i].left_mul_gen(s).window());
    }
  }
  // elements are BFS-ordered, hence sorted by length
  for (std::uint32_t i = 0; i < N; ++i) {
    for (std::uint32_t s = 1; s <= rank_; ++s) {
      std::uint32_t sw = t->lmult[i][s - 1];
      if (t->len[sw] < t->len[i]) {
        t->smallest_left_descent[i] = s;
        break;
      }
    }
  }
  // Bruhat bitmatrix by length induction via the lifting property
  const std::uint32_t words = (N + 63) / 64;
  t->bruhat.assign(N, std::vector<std::uint64_t>(words, 0));
  t->bruhat[0][0] = 1; // e row: only e
  for (std::uint32_t w = 1; w < N; ++w) {
    std::uint32_t s = t->smallest_left_descent[w];
    std::uint32_t v = t->lmult[w][s - 1]; // sw < w
    auto& row = t->bruhat[w];
    const auto& vrow = t->bruhat[v];
    for (std::uint32_t y = 0; y < N; ++y) {
      std::uint32_t sy = t->lmult[y][s - 1];
      bool ok;
      if (t->len[sy] < t->len[y])
        ok = (vrow[sy >> 6] >> (sy & 63)) & 1;
      else
        ok = (vrow[y >> 6] >> (y & 63)) & 1;
      if (ok) row[y >> 6] |= std::uint64_t{1} << (y & 63);
    }
  }
  tables_ = std::move(t);
  return *tables_;
}

std::uint32_t CoxeterSystem::index_of(const WElement& w) const {
  auto& t = tables();
  auto it = t.index.find(w.window());
  if (it == t.index.end()) throw input_error("element not in this group");
  return it->second;
}

const WElement& CoxeterSystem::element(std::uint32_t idx) const { return tables().elems[idx]; }
std::uint32_t CoxeterSystem::size() const { return static_cast<std::uint32_t>(tables().elems.size()); }
std::uint32_t CoxeterSystem::right_mult(std::uint32_t i, std::uint32_t s) const {
  return tables().rmult[i][s - 1];
}
std::uint32_t CoxeterSystem::left_mult(std::uint32_t i, std::uint32_t s) const {
  return tables().lmult[i][s - 1];
}
std::uint32_t CoxeterSystem::inverse_index(std::uint32_t i) const { return tables().inv[i]; }
std::uint32_t CoxeterSystem::length_of(std::uint32_t i) const { return tables().len[i]; }
bool CoxeterSystem::bruhat_leq_idx(std::uint32_t y, std::uint32_t w) const {
  return tables().leq(y, w);
}

const KLPoly& CoxeterSystem::kl(std::uint32_t y, std::uint32_t w) const {
  auto& t = tables();
  std::lock_guard<std::recursive_mutex> lk(t.kl_mu);
  const std::uint64_t key = (static_cast<std::uint64_t>(y) << 32) | w;
  auto it = t.kl_memo.find(key);
  if (it != t.kl_memo.end()) return it->second;

  KLPoly result;
  if (!t.leq(y, w)) {
    result = kl_zero();
  } else if (y == w || t.len[w] - t.len[y] <= 2) {
    result = kl_one();
  } else {
    const std::uint32_t s = t.smallest_left_descent[w];
    const std::uint32_t sy = t.lmult[y][s - 1];
    if (t.len[sy] > t.len[y]) {
      result = kl(sy, w); // P_{y,w} = P_{sy,w} when sw < w and sy > y
    } else {
      const std::uint32_t v = t.lmult[w][s - 1]; // sw
      KLPoly a = kl(sy, v);
      KLPoly b = kl(y, v);
      result = kl_add(a, kl_shift(b, 1));
      for (std::uint32_t z = 0; z < t.elems.size(); ++z) {
        if (z == v || !t.leq(z, v) || !t.leq(y, z)) continue;
        const std::uint32_t sz = t.lmult[z][s - 1];
        if (t.len[sz] > t.len[z]) continue;
        const std::int64_t m = mu(z, v);
        if (!m) continue;
        const std::uint32_t k = (t.len[w] - t.len[z]) / 2;
        KLPoly pz = kl(y, z);
        result = kl_add(result, kl_scale(kl_shift(pz, k), -m));
      }
    }
  }
  auto [pos, ok] = t.kl_memo.emplace(key, std::move(result));
  (void)ok;
  return pos->second;
}

std::int64_t CoxeterSystem::mu(std::uint32_t y, std::uint32_t w) const {
  auto& t = tables();
  if (!t.leq(y, w) || y == w) return 0;
  const std::uint32_t gap = t.len[w] - t.len[y];
  if (gap % 2 == 0) return 0;
  return kl(y, w).at((gap - 1) / 2);
}

// ---- free-function layer ---------------------------------------------------------

bool bruhat_leq(const WElement& y, const WElement& w) {
  if (&y.system() != &w.system()) throw input_error("Coxeter system mismatch");
  const auto& W = y.system();
  return W.bruhat_leq_idx(W.index_of(y), W.index_of(w));
}

KLPoly kl_polynomial(const WElement& y, const WElement& w) {
  const auto& W = y.system();
  return W.kl(W.index_of(y), W.index_of(w));
}

std::int64_t mu_coefficient(const WElement& y, const WElement& w) {
  const auto& W = y.system();
  return W.mu(W.index_of(y), W.index_of(w));
}

// ---- cells -----------------------------------------------------------------------

namespace {

// arcs of the left preorder digraph: from w one can reach, inside the left
// ideal generated by the KL basis element of w,
//   s*w          for every s with l(sw) > l(w), and
//   z            for every z < w with l(sz) < l(z) and mu(z,w) != 0
std::vector<std::vector<std::uint32_t>> left_arcs(const CoxeterSystem& W) {
  const std::uint32_t N = W.size();
  std::vector<std::vector<std::uint32_t>> adj(N);
  for (std::uint32_t w = 0; w < N; ++w) {
    for (std::uint32_t s = 1; s <= W.rank(); ++s) {
      std::uint32_t sw = W.left_mult(w, s);
      if (W.length_of(sw) > W.length_of(w)) {
        adj[w].push_back(sw);
        for (std::uint32_t z = 0; z < N; ++z) {
          if (z == w || !W.bruhat_leq_idx(z, w)) continue;
          std::uint32_t sz = W.left_mult(z, s);
          if (W.length_of(sz) > W.length_of(z)) continue;
          if (W.mu(z, w)) adj[w].push_back(z);
        }
      }
    }
    std::sort(adj[w].begin(), adj[w].end());
    adj[w].erase(std::unique(adj[w].begin(), adj[w].end()), adj[w].end());
  }
  return adj;
}

// iterative Tarjan SCC; components numbered in a deterministic order
std::vector<std::uint32_t> scc(const std::vector<std::vector<std::uint32_t>>& adj) {
  const std::uint32_t N = static_cast<std::uint32_t>(adj.size());
  std::vector<std::uint32_t> comp(N, UINT32_MAX), low(N), num(N, UINT32_MAX), stk;
  std::vector<bool> on_stack(N, false);
  std::uint32_t counter = 0, ncomp = 0;
  struct Frame {
    std::uint32_t v;
    std::uint32_t ei;
  };
  for (std::uint32_t root = 0; root < N; ++root) {
    if (num[root] != UINT32_MAX) continue;
    std::vector<Frame> frames{{root, 0}};
    num[root] = low[root] = counter++;
    stk.push_back(root);
    on_stack[root] = true;
    while (!frames.empty()) {
      auto& f = frames.back();
      if (f.ei < adj[f.v].size()) {
        std::uint32_t u = adj[f.v][f.ei++];
        if (num[u] == UINT32_MAX) {
          num[u] = low[u] = counter++;
          stk.push_back(u);
          on_stack[u] = true;
          frames.push_back({u, 0});
        } else if (on_stack[u]) {
          low[f.v] = std::min(low[f.v], num[u]);
        }
      } else {
        if (low[f.v] == num[f.v]) {
          while (true) {
            std::uint32_t u = stk.back();
            stk.pop_back();
            on_stack[u] = false;
            comp[u] = ncomp;
            if (u == f.v) break;
          }
          ++ncomp;
        }
        std::uint32_t v = f.v;
        frames.pop_back();
        if (!frames.empty()) low[frames.back().v] = std::min(low[frames.back().v], low[v]);
      }
    }
  }
  return comp;
}

CellPartition partition_from_comp(const CoxPtr& W, CellKind kind,
                                  const std::vector<std::uint32_t>& comp) {
  CellPartition part;
  part.kind = kind;
  part.W = W;
  const std::uint32_t N = W->size();
  std::uint32_t ncomp = 0;
  for (auto c : comp) ncomp = std::max(ncomp, c + 1);
  std::vector<std::vector<std::uint32_t>> blocks(ncomp);
  for (std::uint32_t i = 0; i < N; ++i) blocks[comp[i]].push_back(i);
  // deterministic order: by smallest element index
  std::sort(blocks.begin(), blocks.end(),
            [](const auto& a, const auto& b) { return a.front() < b.front(); });
  part.blocks = std::move(blocks);
  part.block_of.assign(N, 0);
  for (std::uint32_t b = 0; b < part.blocks.size(); ++b)
    for (auto e : part.blocks[b]) part.block_of[e] = b;
  return part;
}

} // namespace

CellPartition cell_partition(const CoxPtr& W, CellKind kind) {
  if (W->order() > bounds::weyl_enum()) throw bound_error("cell enumeration bound exceeded");
  auto arcs = left_arcs(*W);
  const std::uint32_t N = W->size();
  if (kind == CellKind::Right || kind == CellKind::TwoSided) {
    std::vector<std::vector<std::uint32_t>> right(N);
    for (std::uint32_t w = 0; w < N; ++w)
      for (auto y : arcs[W->inverse_index(w)]) right[w].push_back(W->inverse_index(y));
    if (kind == CellKind::Right) {
      arcs = std::move(right);
    } else {
      for (std::uint32_t w = 0; w < N; ++w) {
        arcs[w].insert(arcs[w].end(), right[w].begin(), right[w].end());
        std::sort(arcs[w].begin(), arcs[w].end());
        arcs[w].erase(std::unique(arcs[w].begin(), arcs[w].end()), arcs[w].end());
      }
    }
  }
  return partition_from_comp(W, kind, scc(arcs));
}

CellModule cell_module(const CellPartition& left_cells, std::uint32_t block) {
  if (left_cells.kind != CellKind::Left) throw input_error("cell_module needs left cells");
  const auto& W = *left_cells.W;
  CellModule M;
  M.W = left_cells.W;
  M.cell = left_cells.blocks[block];
  std::sort(M.cell.begin(), M.cell.end());
  std::unordered_map<std::uint32_t, std::uint32_t> pos;
  for (std::uint32_t j = 0; j < M.cell.size(); ++j) pos.emplace(M.cell[j], j);
  M.gen_action.resize(W.rank());
  for (std::uint32_t s = 1; s <= W.rank(); ++s) {
    auto& cols = M.gen_action[s - 1];
    cols.resize(M.cell.size());
    for (std::uint32_t j = 0; j < M.cell.size(); ++j) {
      const std::uint32_t z = M.cell[j];
      const std::uint32_t sz = W.left_mult(z, s);
      auto& col = cols[j];
      if (W.length_of(sz) < W.length_of(z)) {
        col.emplace_back(j, -1);
        continue;
      }
      // s acts at q = 1 by 1 + (KL basis multiplication)
      col.emplace_back(j, 1);
      if (auto it = pos.find(sz); it != pos.end()) col.emplace_back(it->second, 1);
      for (std::uint32_t x = 0; x < W.size(); ++x) {
        if (x == z || !W.bruhat_leq_idx(x, z)) continue;
        std::uint32_t sx = W.left_mult(x, s);
        if (W.length_of(sx) > W.length_of(x)) continue;
        auto it = pos.find(x);
        if (it == pos.end()) continue;
        std::int64_t m = W.mu(x, z);
        if (m) col.emplace_back(it->second, m);
      }
      std::sort(col.begin(), col.end());
    }
  }
  return M;
}

std::optional<WElement> star_operation(const WElement& w, std::uint32_t s, std::uint32_t t,
                                       bool right) {
  const auto& W = w.system();
  if (W.coxeter_m(s, t) != 3) throw input_error("star operation needs an adjacent pair");
  auto desc = [&](const WElement& x, std::uint32_t g) {
    return right ? x.right_descent(g) : x.left_descent(g);
  };
  auto mul = [&](const WElement& x, std::uint32_t g) {
    return right ? x.right_mul_gen(g) : x.left_mul_gen(g);
  };
  const bool ds = desc(w, s), dt = desc(w, t);
  if (ds == dt) return std::nullopt; // outside the domain
  WElement ws = mul(w, s), wt = mul(w, t);
  auto in_domain = [&](const WElement& x) { return desc(x, s) != desc(x, t); };
  const bool a = in_domain(ws), b = in_domain(wt);
  if (a == b) throw internal_error("star image not unique");
  return a ? ws : wt;
}

LimitCellReport limit_cell_probe(const std::vector<std::uint32_t>& P,
                                 const std::vector<std::uint32_t>& Q, std::uint32_t depth) {
  std::uint32_t n_min = 1;
  for (auto s : P) n_min = std::max(n_min, s);
  for (auto s : Q) n_min = std::max(n_min, s);
  LimitCellReport rep;
  for (std::uint32_t n = n_min; n <= n_min + depth; ++n) {
    auto W = CoxeterSystem::get(CoxFamily::A, n);
    auto part = cell_partition(W, CellKind::TwoSided);
    auto wp = W->index_of(W->longest_element(P));
    auto wq = W->index_of(W->longest_element(Q));
    rep.levels.push_back(n);
    rep.same_cell.push_back(part.block_of[wp] == part.block_of[wq]);
  }
  rep.stabilized = true;
  for (bool b : rep.same_cell)
    if (b != rep.same_cell.front()) rep.stabilized = false;
  return rep;
}

// ---- JSON ------------------------------------------------------------------------

std::string CellPartition::json() const {
  std::ostringstream os;
  os << "{\"schema\":1,\"type\":\"" << W->name() << "\",\"kind\":\""
     << (kind == CellKind::Left ? "left" : kind == CellKind::Right ? "right" : "two_sided")
     << "\",\"blocks\":[";
  std::vector<std::vector<std::string>> strs;
  for (const auto& blk : blocks) {
    std::vector<std::string> b;
    for (auto e : blk) b.push_back(W->element(e).str());
    std::sort(b.begin(), b.end());
    strs.push_back(std::move(b));
  }
  for (size_t i = 0; i < strs.size(); ++i) {
    if (i) os << ",";
    os << "[";
    for (size_t j = 0; j < strs[i].size(); ++j) {
      if (j) os << ",";
      os << "\"" << strs[i][j] << "\"";
    }
    os << "]";
  }
  os << "]}";
  return os.str();
}

std::string LimitCellReport::json() const {
  std::ostringstream os;
  os << "{\"schema\":1,\"levels\":[";
  for (size_t i = 0; i < levels.size(); ++i) {
    if (i) os << ",";
    os << levels[i];
  }
  os << "],\"same_cell\":[";
  for (size_t i = 0; i < same_cell.size(); ++i) {
    if (i) os << ",";
    os << (same_cell[i] ? "true" : "false");
  }
  os << "],\"stabilized\":" << (stabilized ? "true" : "false")
     << ",\"caveat\":\"finite truncation witness only\"}";
  return os.str();
}

std::string klpoly_json(const CoxPtr& W, const WElement& y, const WElement& w,
                        const KLPoly& p) {
  std::ostringstream os;
  os << "{\"schema\":1,\"type\":\"" << W->name() << "\",\"y\":\"" << y.str() << "\",\"w\":\""
     << w.str() << "\",\"coeffs\":[";
  int d = p.degree();
  for (int i = 0; i <= d; ++i) {
    if (i) os << ",";
    os << p.at(i);
  }
  os << "]}";
  return os.str();
}

} // namespace limitrep::weyl
