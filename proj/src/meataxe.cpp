#include <algorithm>
#include <random>
#include <sstream>

#include "limitrep/modrep.hpp"

namespace limitrep::modrep {

using linalg::sv_unit;

namespace {

// ---- polynomials over the coefficient field (dense, low-to-high) -----------

using Poly = std::vector<Scalar>;

void ptrim(Poly& f) {
  while (!f.empty() && f.back().is_zero()) f.pop_back();
}
int pdeg(const Poly& f) {
  for (size_t i = f.size(); i-- > 0;)
    if (!f[i].is_zero()) return static_cast<int>(i);
  return -1;
}
Poly pmonic(Poly f, const CoeffField& F) {
  ptrim(f);
  if (f.empty()) return f;
  Scalar inv = f.back().inverse();
  for (auto& c : f) c = c * inv;
  (void)F;
  return f;
}
Poly pmul(const Poly& a, const Poly& b, const CoeffField& F) {
  if (a.empty() || b.empty()) return {};
  Poly r(a.size() + b.size() - 1, F.zero());
  for (size_t i = 0; i < a.size(); ++i) {
    if (a[i].is_zero()) continue;
    for (size_t j = 0; j < b.size(); ++j) {
      if (b[j].is_zero()) continue;
      r[i + j] = r[i + j] + a[i] * b[j];
    }
  }
  return r;
}
Poly prem(Poly a, const Poly& f, const CoeffField& F) {
  ptrim(a);
  Poly g = f;
  ptrim(g);
  if (g.empty()) throw internal_error("poly division by zero");
  Scalar lead_inv = g.back().inverse();
  while (a.size() >= g.size()) {
    Scalar c = a.back() * lead_inv;
    size_t shift = a.size() - g.size();
    if (!c.is_zero())
      for (size_t i = 0; i < g.size(); ++i) a[shift + i] = a[shift + i] - c * g[i];
    a.pop_back();
    ptrim(a);
  }
  (void)F;
  return a;
}
Poly pquo(Poly a, const Poly& g0, const CoeffField& F) {
  ptrim(a);
  Poly g = g0;
  ptrim(g);
  Poly q(a.size() >= g.size() ? a.size() - g.size() + 1 : 0, F.zero());
  Scalar lead_inv = g.back().inverse();
  while (a.size() >= g.size()) {
    Scalar c = a.back() * lead_inv;
    size_t shift = a.size() - g.size();
    q[shift] = c;
    if (!c.is_zero())
      for (size_t i = 0; i < g.size(); ++i) a[shift + i] = a[shift + i] - c * g[i];
    a.pop_back();
    ptrim(a);
  }
  return q;
}
Poly pgcd(Poly a, Poly b, const CoeffField& F) {
  ptrim(a);
  ptrim(b);
  while (!b.empty()) {
    Poly r = prem(a, b, F);
    a = std::move(b);
    b = std::move(r);
  }
  return pmonic(a, F);
}
Poly pmulmod(const Poly& a, const Poly& b, const Poly& f, const CoeffField& F) {
  return prem(pmul(a, b, F), f, F);
}
Poly ppowmod(Poly base, mpz_class e, const Poly& f, const CoeffField& F) {
  Poly r{F.one()};
  base = prem(base, f, F);
  while (e > 0) {
    if (mpz_odd_p(e.get_mpz_t())) r = pmulmod(r, base, f, F);
    base = pmulmod(base, base, f, F);
    e >>= 1;
  }
  return r;
}
Poly pderiv(const Poly& f, const CoeffField& F) {
  Poly d;
  for (size_t i = 1; i < f.size(); ++i)
    d.push_back(f[i] * F.from_int(static_cast<std::int64_t>(i)));
  ptrim(d);
  return d;
}

// distinct-degree + equal-degree factorization, finite fields only;
// deterministic seeded splitting
std::vector<Poly> factor_squarefree(Poly f, const CoeffField& F) {
  const std::uint64_t Q = F.finite_field()->order();
  const std::uint64_t p = F.characteristic();
  std::vector<Poly> out;
  Poly x{F.zero(), F.one()};
  std::uint32_t d = 0;
  Poly xq = x; // x^{Q^d} mod f, maintained incrementally
  while (pdeg(f) > 0) {
    ++d;
    if (static_cast<int>(2 * d) > pdeg(f)) {
      out.push_back(pmonic(f, F));
      break;
    }
    xq = ppowmod(xq, mpz_class(static_cast<unsigned long>(Q)), f, F);
    Poly diff = xq;
    diff.resize(std::max<size_t>(diff.size(), 2), F.zero());
    diff[1] = diff[1] - F.one();
    Poly g = pgcd(f, diff, F);
    if (pdeg(g) <= 0) continue;
    // g is a product of irreducibles of degree d; split it
    std::vector<Poly> stack{g};
    std::mt19937_64 rng(0x6d78u + static_cast<unsigned>(pdeg(g)));
    while (!stack.empty()) {
      Poly h = stack.back();
      stack.pop_back();
      if (pdeg(h) == static_cast<int>(d)) {
        out.push_back(pmonic(h, F));
        continue;
      }
      // pick a splitting element
      bool split = false;
      for (int attempt = 0; attempt < 256 && !split; ++attempt) {
        Poly b(static_cast<size_t>(pdeg(h)), F.zero());
        for (auto& c : b)
          c = Scalar(F.finite_field()->element_by_index(rng() % Q));
        ptrim(b);
        if (pdeg(b) < 1 && attempt < 128) continue;
        Poly w;
        if (p == 2) {
          // trace map over F_{2^k}
          std::uint32_t bits = 0;
          std::uint64_t qq = Q;
          while (qq > 1) qq >>= 1, ++bits;
          w = b;
          Poly acc = b;
          for (std::uint32_t i = 1; i < bits * d; ++i) {
            acc = pmulmod(acc, acc, h, F);
            w.resize(std::max(w.size(), acc.size()), F.zero());
            for (size_t k = 0; k < acc.size(); ++k) w[k] = w[k] + acc[k];
            ptrim(w);
          }
        } else {
          mpz_class e;
          mpz_ui_pow_ui(e.get_mpz_t(), static_cast<unsigned long>(Q), d);
          e = (e - 1) / 2;
          w = ppowmod(b, e, h, F);
          if (!w.empty()) w[0] = w[0] - F.one();
        }
        Poly g1 = pgcd(h, w, F);
        if (pdeg(g1) > 0 && pdeg(g1) < pdeg(h)) {
          stack.push_back(g1);
          stack.push_back(pquo(h, g1, F));
          split = true;
        }
      }
      if (!split) throw internal_error("equal-degree splitting failed");
    }
    f = pquo(f, g, F);
    xq = prem(xq, f, F);
  }
  if (pdeg(f) == 0 && out.empty()) throw internal_error("no factors found");
  return out;
}

std::vector<Poly> factor_poly(Poly f, const CoeffField& F) {
  // strip to the squarefree part (multiplicities are irrelevant here)
  f = pmonic(std::move(f), F);
  std::vector<Poly> parts;
  while (pdeg(f) > 0) {
    Poly df = pderiv(f, F);
    if (pdeg(df) < 0) {
      // f = h(x^p): take the p-th root coefficient-wise
      const std::uint64_t p = F.characteristic();
      const std::uint64_t Q = F.finite_field()->order();
      Poly h;
      for (size_t i = 0; i < f.size(); i += p) {
        Scalar c = f[i];
        // c^(Q/p) is the p-th root in F_Q
        h.push_back(Scalar(c.finite().pow(Q / p)));
      }
      f = std::move(h);
      continue;
    }
    Poly g = pgcd(f, df, F);
    Poly sqfree = pquo(f, g, F);
    for (auto& irr : factor_squarefree(sqfree, F)) parts.push_back(irr);
    f = std::move(g);
    // remove the factors already found so the loop terminates
    for (const auto& irr : parts)
      while (pdeg(f) > 0 && prem(f, irr, F).empty()) f = pquo(f, irr, F);
    if (pdeg(f) == 0) break;
  }
  // dedupe
  std::vector<Poly> out;
  for (auto& irr : parts) {
    bool dup = false;
    for (auto& o : out)
      if (o.size() == irr.size()) {
        bool same = true;
        for (size_t i = 0; i < o.size(); ++i)
          if (!(o[i] == irr[i])) same = false;
        if (same) dup = true;
      }
    if (!dup) out.push_back(irr);
  }
  return out;
}

// minimal polynomial of the dense matrix A via Krylov spans
Poly minimal_polynomial(const linalg::Mat& A, const CoeffField& F) {
  const std::uint32_t n = static_cast<std::uint32_t>(A.size());
  Poly m{F.one()};
  for (std::uint32_t start = 0; start < n; ++start) {
    if (pdeg(m) == static_cast<int>(n)) break;
    linalg::SpanSolver span(F, true);
    std::vector<Scalar> v(n, F.zero());
    v[start] = F.one();
    Poly local;
    while (true) {
      SparseVec sv;
      for (std::uint32_t i = 0; i < n; ++i)
        if (!v[i].is_zero()) sv.t.emplace_back(i, v[i]);
      if (!span.insert(sv)) {
        auto coords = span.express(sv);
        if (!coords) throw internal_error("krylov expression failed");
        local.assign(coords->size() + 1, F.zero());
        for (size_t i = 0; i < coords->size(); ++i) local[i] = -(*coords)[i];
        local.back() = F.one();
        break;
      }
      // v = A v
      std::vector<Scalar> nv(n, F.zero());
      for (std::uint32_t i = 0; i < n; ++i) {
        for (std::uint32_t j = 0; j < n; ++j) {
          if (A[i][j].is_zero() || v[j].is_zero()) continue;
          nv[i] = nv[i] + A[i][j] * v[j];
        }
      }
      v = std::move(nv);
    }
    // m = lcm(m, local)
    Poly g = pgcd(m, local, F);
    m = pmonic(pmul(pquo(m, g, F), local, F), F);
  }
  return m;
}

linalg::Mat poly_at_matrix(const Poly& f, const linalg::Mat& A, const CoeffField& F) {
  const std::uint32_t n = static_cast<std::uint32_t>(A.size());
  linalg::Mat acc = linalg::mat_zero(F, n, n);
  for (size_t k = f.size(); k-- > 0;) {
    acc = linalg::mat_mul(F, acc, A);
    for (std::uint32_t i = 0; i < n; ++i) acc[i][i] = acc[i][i] + f[k];
  }
  return acc;
}

std::uint32_t spin_dim_from(const Module& M, const SparseVec& seed) {
  return spin(M, {seed}).span.dim();
}

// transpose action tables for the dual-side Norton check
std::vector<std::vector<SparseVec>> transpose_actions(const Module& M) {
  std::vector<std::vector<SparseVec>> T(M.gen_act.size());
  for (std::uint32_t gi = 0; gi < M.gen_act.size(); ++gi) {
    T[gi].assign(M.dim(), {});
    for (std::uint32_t b = 0; b < M.dim(); ++b)
      for (const auto& [i, c] : M.gen_act[gi][b].t) T[gi][i].t.emplace_back(b, c);
    for (auto& row : T[gi])
      std::sort(row.t.begin(), row.t.end(),
                [](const auto& a, const auto& b2) { return a.first < b2.first; });
  }
  return T;
}

std::uint32_t spin_dim_matrices(const std::vector<std::vector<SparseVec>>& act,
                                const CoeffField& F, const SparseVec& seed) {
  linalg::SpanSolver span(F);
  std::vector<SparseVec> queue;
  if (span.insert(seed)) queue.push_back(seed);
  for (std::uint32_t head = 0; head < queue.size(); ++head) {
    SparseVec v = queue[head];
    for (const auto& gen : act) {
      SparseVec img;
      for (const auto& [b, c] : v.t) img = linalg::sv_add_scaled(img, gen[b], c);
      if (span.insert(img)) queue.push_back(img);
    }
  }
  return span.dim();
}

std::vector<SparseVec> spanning_seeds(const Module& M) {
  std::vector<SparseVec> seeds;
  for (std::uint32_t b = 0; b < M.dim(); ++b) seeds.push_back(sv_unit(b, M.F.one()));
  std::mt19937 rng(0xC0FFEE + M.dim());
  for (int k = 0; k < 8; ++k) {
    SparseVec v;
    for (std::uint32_t b = 0; b < M.dim(); ++b) {
      Scalar c = M.F.from_int(static_cast<std::int64_t>(rng() % 5));
      if (!c.is_zero()) v.t.emplace_back(b, c);
    }
    if (v.empty()) v = sv_unit(0, M.F.one());
    seeds.push_back(std::move(v));
  }
  return seeds;
}

// endomorphism rank over the given field by the commutant linear system
std::uint32_t commutant_rank(const Module& M) {
  const std::uint32_t n = M.dim();
  const auto& F = M.F;
  linalg::SpanSolver span(F);
  for (std::uint32_t gi = 0; gi < M.gen_act.size(); ++gi) {
    linalg::Mat A = M.gen_matrix(gi);
    for (std::uint32_t i = 0; i < n; ++i)
      for (std::uint32_t k = 0; k < n; ++k) {
        // sum_j X_{ij} A_{jk} - A_{ij} X_{jk} = 0
        SparseVec row;
        for (std::uint32_t j = 0; j < n; ++j) {
          Scalar c = A[j][k];
          if (!c.is_zero()) row.t.emplace_back(i * n + j, c);
        }
        for (std::uint32_t j = 0; j < n; ++j) {
          Scalar c = A[i][j];
          if (c.is_zero()) continue;
          // merge -c at variable (j,k)
          row = linalg::sv_add_scaled(row, sv_unit(j * n + k, F.one()), -c);
        }
        span.insert(row);
      }
  }
  return n * n - span.dim();
}

} // namespace

// ---- irreducibility ----------------------------------------------------------

IrredCertificate is_irreducible(const Module& M) {
  if (M.dim() == 0) throw input_error("zero module");
  if (M.dim() > bounds::solver()) throw bound_error("module beyond the solver bound");
  IrredCertificate cert;
  auto seeds = spanning_seeds(M);
  cert.spanning_set_size = static_cast<std::uint32_t>(seeds.size());
  bool spins_full = true;
  for (const auto& s : seeds) {
    std::uint32_t d = spin_dim_from(M, s);
    if (d < M.dim()) {
      spins_full = false;
      cert.witness_dim = d;
      break;
    }
  }

  if (M.F.char_zero()) {
    cert.method = "span+character";
    if (M.group->size() > bounds::character_table())
      throw bound_error("char-0 certificate needs an enumerable group");
    auto chi = M.character();
    cert.endo_rank = chartab::class_inner(*M.group, M.F, chi, chi);
    cert.irreducible = spins_full && cert.endo_rank == 1;
    cert.absolutely_irreducible = cert.endo_rank == 1;
    if (!spins_full && cert.endo_rank == 1)
      throw internal_error("inconsistent certificate in characteristic zero");
    return cert;
  }

  // characteristic ell: Norton-style two-sided nullspace test
  cert.method = "norton";
  if (M.dim() <= 40) {
    std::uint32_t c = commutant_rank(M);
    cert.endo_rank = static_cast<long>(c);
  }
  if (!spins_full) {
    cert.irreducible = false;
    return cert;
  }
  const std::uint64_t Q = M.F.finite_field()->order();
  auto trans = transpose_actions(M);
  std::mt19937_64 rng(0x6e6f72746f6eULL + M.dim());
  const std::uint32_t ngens = static_cast<std::uint32_t>(M.gen_act.size());
  std::vector<linalg::Mat> gen_mats;
  for (std::uint32_t gi = 0; gi < ngens; ++gi) gen_mats.push_back(M.gen_matrix(gi));

  for (int attempt = 0; attempt < 24; ++attempt) {
    // algebra element: a short word combination with seeded coefficients
    linalg::Mat A = linalg::mat_zero(M.F, M.dim(), M.dim());
    int terms = 2 + attempt % 3;
    for (int t = 0; t < terms; ++t) {
      linalg::Mat W = linalg::mat_identity(M.F, M.dim());
      int len = 1 + static_cast<int>(rng() % 2) + attempt / 8;
      for (int l = 0; l < len; ++l) W = linalg::mat_mul(M.F, W, gen_mats[rng() % ngens]);
      Scalar c = Scalar(M.F.finite_field()->element_by_index(1 + rng() % (Q - 1)));
      for (std::uint32_t i = 0; i < M.dim(); ++i)
        for (std::uint32_t j = 0; j < M.dim(); ++j) A[i][j] = A[i][j] + c * W[i][j];
    }
    Poly m = minimal_polynomial(A, M.F);
    if (pdeg(m) < 1) continue;
    auto factors = factor_poly(m, M.F);
    // prefer factors with a small nullspace
    std::sort(factors.begin(), factors.end(),
              [](const Poly& a, const Poly& b) { return a.size() < b.size(); });
    for (const auto& f : factors) {
      linalg::Mat B = poly_at_matrix(f, A, M.F);
      auto null = linalg::mat_nullspace(M.F, B);
      const std::uint32_t d = static_cast<std::uint32_t>(null.size());
      if (d == 0) continue; // not a factor of the characteristic polynomial part
      mpz_class lines = 0;
      {
        mpz_class qd;
        mpz_ui_pow_ui(qd.get_mpz_t(), static_cast<unsigned long>(Q), d);
        lines = (qd - 1) / (Q - 1);
      }
      if (lines > 4096) continue;
      // primal side: spin every line of the nullspace
      bool primal_ok = true;
      std::function<bool(std::uint32_t)> iterate = [&](std::uint32_t lead) {
        // canonical projective representatives: first nonzero coordinate 1
        std::vector<Scalar> coeff(d, M.F.zero());
        coeff[lead] = M.F.one();
        std::vector<std::uint64_t> rest(d - lead - 1, 0);
        while (true) {
          for (std::uint32_t k = 0; k < rest.size(); ++k)
            coeff[lead + 1 + k] = Scalar(M.F.finite_field()->element_by_index(rest[k]));
          // assemble the vector
          SparseVec v;
          std::vector<Scalar> dense(M.dim(), M.F.zero());
          for (std::uint32_t t2 = 0; t2 < d; ++t2) {
            if (coeff[t2].is_zero()) continue;
            for (std::uint32_t i = 0; i < M.dim(); ++i)
              dense[i] = dense[i] + coeff[t2] * null[t2][i];
          }
          for (std::uint32_t i = 0; i < M.dim(); ++i)
            if (!dense[i].is_zero()) v.t.emplace_back(i, dense[i]);
          if (!v.empty()) {
            std::uint32_t sd = spin_dim_from(M, v);
            if (sd < M.dim()) {
              cert.witness_dim = sd;
              return false;
            }
          }
          std::uint32_t k = 0;
          while (k < rest.size()) {
            if (++rest[k] < Q) break;
            rest[k] = 0;
            ++k;
          }
          if (k == rest.size()) break;
        }
        return true;
      };
      for (std::uint32_t lead = 0; lead < d && primal_ok; ++lead) primal_ok = iterate(lead);
      if (!primal_ok) {
        cert.irreducible = false;
        return cert;
      }
      // dual side: same with transposed matrices
      linalg::Mat BT = linalg::mat_zero(M.F, M.dim(), M.dim());
      for (std::uint32_t i = 0; i < M.dim(); ++i)
        for (std::uint32_t j = 0; j < M.dim(); ++j) BT[i][j] = B[j][i];
      auto nullT = linalg::mat_nullspace(M.F, BT);
      if (nullT.size() != d) throw internal_error("transpose nullity mismatch");
      bool dual_ok = true;
      for (std::uint32_t lead = 0; lead < d && dual_ok; ++lead) {
        std::vector<std::uint64_t> rest(d - lead - 1, 0);
        while (dual_ok) {
          std::vector<Scalar> coeff(d, M.F.zero());
          coeff[lead] = M.F.one();
          for (std::uint32_t k = 0; k < rest.size(); ++k)
            coeff[lead + 1 + k] = Scalar(M.F.finite_field()->element_by_index(rest[k]));
          std::vector<Scalar> dense(M.dim(), M.F.zero());
          for (std::uint32_t t2 = 0; t2 < d; ++t2) {
            if (coeff[t2].is_zero()) continue;
            for (std::uint32_t i = 0; i < M.dim(); ++i)
              dense[i] = dense[i] + coeff[t2] * nullT[t2][i];
          }
          SparseVec v;
          for (std::uint32_t i = 0; i < M.dim(); ++i)
            if (!dense[i].is_zero()) v.t.emplace_back(i, dense[i]);
          if (!v.empty()) {
            std::uint32_t sd = spin_dim_matrices(trans, M.F, v);
            if (sd < M.dim()) {
              cert.witness_dim = M.dim() - sd;
              dual_ok = false;
              break;
            }
          }
          std::uint32_t k = 0;
          while (k < rest.size()) {
            if (++rest[k] < Q) break;
            rest[k] = 0;
            ++k;
          }
          if (k == rest.size()) break;
        }
      }
      if (!dual_ok) {
        cert.irreducible = false;
        return cert;
      }
      cert.irreducible = true;
      cert.absolutely_irreducible = (cert.endo_rank == 1);
      return cert;
    }
  }
  throw bound_error("norton test found no usable singular algebra element");
}

std::string IrredCertificate::json(const std::string& claim, const std::string& spec_str,
                                   const std::string& level, const std::string& field) const {
  std::ostringstream os;
  os << "{\"schema\":1,\"claim\":\"" << claim << "\",\"spec\":\"" << spec_str
     << "\",\"level\":" << level << ",\"field\":\"" << field
     << "\",\"spanning_set_size\":" << spanning_set_size << ",\"endo_rank\":\""
     << endo_rank.get_str() << "\",\"verdict\":" << (irreducible ? "true" : "false") << "}";
  return os.str();
}

std::uint32_t composition_length(const Module& M) {
  if (!M.F.char_zero()) throw input_error("composition_length needs characteristic zero");
  const auto& T = chartab::character_table(M.group);
  CoeffField J = M.F.join(T.F);
  auto chiM = character_in(M, J);
  std::uint32_t total = 0;
  for (std::uint32_t i = 0; i < T.irr_count(); ++i) {
    std::vector<Scalar> chi_i;
    for (const auto& v : T.values[i]) chi_i.push_back(J.coerce(v));
    mpq_class mult = chartab::class_inner(*M.group, J, chiM, chi_i);
    if (mult < 0 || mult.get_den() != 1)
      throw internal_error("non-integral multiplicity in composition_length");
    total += static_cast<std::uint32_t>(mult.get_num().get_ui());
  }
  return total;
}

// ---- hom spaces ----------------------------------------------------------------

namespace {
std::vector<SparseVec> intertwiner_nullspace(const Module& A, const Module& B) {
  if (A.gen_act.size() != B.gen_act.size())
    throw input_error("hom: generator count mismatch");
  const CoeffField& F = A.F;
  const std::uint32_t da = A.dim(), db = B.dim();
  if (static_cast<std::uint64_t>(da) * db > bounds::solver() * 4)
    throw bound_error("hom system beyond the solver bound");
  linalg::SpanSolver span(F);
  // variables X_{ij} (i < db, j < da), index i*da + j
  for (std::uint32_t gi = 0; gi < A.gen_act.size(); ++gi) {
    linalg::Mat Ag = A.gen_matrix(gi);
    linalg::Mat Bg = B.gen_matrix(gi);
    for (std::uint32_t i = 0; i < db; ++i)
      for (std::uint32_t k = 0; k < da; ++k) {
        SparseVec row;
        for (std::uint32_t j = 0; j < da; ++j) {
          Scalar c = Ag[j][k];
          if (!c.is_zero()) row.t.emplace_back(i * da + j, c);
        }
        for (std::uint32_t j = 0; j < db; ++j) {
          Scalar c = Bg[i][j];
          if (c.is_zero()) continue;
          row = linalg::sv_add_scaled(row, sv_unit(j * da + k, F.one()), -c);
        }
        span.insert(row);
      }
  }
  // extract the nullspace basis from the reduced row echelon rows
  const std::uint32_t nvars = da * db;
  std::vector<bool> is_pivot(nvars, false);
  for (auto p : span.pivots()) is_pivot[p] = true;
  auto rref = span.echelon_rows();
  std::vector<SparseVec> basis;
  for (std::uint32_t f = 0; f < nvars; ++f) {
    if (is_pivot[f]) continue;
    SparseVec v = sv_unit(f, F.one());
    for (const auto& rowv : rref)
      for (const auto& [idx, c] : rowv.t)
        if (idx == f) v = linalg::sv_add_scaled(v, sv_unit(rowv.pivot(), F.one()), -c);
    std::sort(v.t.begin(), v.t.end(),
              [](const auto& a, const auto& b) { return a.first < b.first; });
    basis.push_back(v);
  }
  return basis;
}
} // namespace

std::uint32_t hom_dimension(const Module& A, const Module& B) {
  if (!(A.F == B.F)) throw input_error("hom: coefficient field mismatch");
  return static_cast<std::uint32_t>(intertwiner_nullspace(A, B).size());
}

std::optional<linalg::Mat> iso_witness(const Module& A, const Module& B) {
  if (!(A.F == B.F)) throw input_error("iso_witness: coefficient field mismatch");
  if (A.dim() != B.dim()) return std::nullopt;
  auto null = intertwiner_nullspace(A, B);
  if (null.empty()) return std::nullopt;
  const std::uint32_t d = A.dim();
  auto to_matrix = [&](const SparseVec& v) {
    linalg::Mat X = linalg::mat_zero(A.F, d, d);
    for (const auto& [idx, c] : v.t) X[idx / d][idx % d] = c;
    return X;
  };
  auto verified = [&](const linalg::Mat& X) -> bool {
    if (!linalg::mat_inverse(A.F, X)) return false;
    for (std::uint32_t gi = 0; gi < A.gen_act.size(); ++gi) {
      linalg::Mat lhs = linalg::mat_mul(A.F, X, A.gen_matrix(gi));
      linalg::Mat rhs = linalg::mat_mul(A.F, B.gen_matrix(gi), X);
      for (std::uint32_t i = 0; i < d; ++i)
        for (std::uint32_t j = 0; j < d; ++j)
          if (!(lhs[i][j] == rhs[i][j])) return false;
    }
    return true;
  };
  for (const auto& v : null) {
    linalg::Mat X = to_matrix(v);
    if (verified(X)) return X;
  }
  std::mt19937 rng(0x15071857);
  for (int attempt = 0; attempt < 500; ++attempt) {
    SparseVec combo;
    for (const auto& v : null) {
      std::int64_t c = static_cast<std::int64_t>(rng() % 7) - 3;
      if (c) combo = linalg::sv_add_scaled(combo, v, A.F.from_int(c));
    }
    if (combo.empty()) continue;
    linalg::Mat X = to_matrix(combo);
    if (verified(X)) return X;
  }
  // nonzero hom space but no invertible combination found
  return std::nullopt;
}

// ---- reports --------------------------------------------------------------------

ReciprocityReport frobenius_reciprocity_check(const grp::GroupHandle& G,
                                              const grp::GroupHandle& H, const Module& M,
                                              const Module& N) {
  ReciprocityReport rep;
  Module ind = induce(G, H, M, Realization::Tensor);
  rep.hom_G = hom_dimension(ind, N);
  Module resN = restrict_module(N, H);
  rep.hom_H = hom_dimension(M, resN);
  rep.adjunction_ok = rep.hom_G == rep.hom_H;

  if (M.F.char_zero()) {
    // projection formula via character multiplicities
    Module lhs = induce(G, H, tensor_module(M, resN), Realization::Tensor);
    Module rhs = tensor_module(ind, N);
    const auto& T = chartab::character_table(G);
    CoeffField J = M.F.join(T.F);
    auto chiL = character_in(lhs, J);
    auto chiR = character_in(rhs, J);
    rep.projection_formula_ok = true;
    for (std::uint32_t i = 0; i < T.irr_count(); ++i) {
      std::vector<Scalar> chi_i;
      for (const auto& v : T.values[i]) chi_i.push_back(J.coerce(v));
      if (chartab::class_inner(*G, J, chiL, chi_i) != chartab::class_inner(*G, J, chiR, chi_i))
        rep.projection_formula_ok = false;
    }
  } else {
    rep.projection_formula_ok = rep.adjunction_ok;
  }
  return rep;
}

std::string ReciprocityReport::json() const {
  std::ostringstream os;
  os << "{\"schema\":1,\"hom_G\":" << hom_G << ",\"hom_H\":" << hom_H
     << ",\"adjunction_ok\":" << (adjunction_ok ? "true" : "false")
     << ",\"projection_formula_ok\":" << (projection_formula_ok ? "true" : "false") << "}";
  return os.str();
}

MackeyReport mackey_certificate(const grp::GroupHandle& G, const grp::GroupHandle& H,
                                const Module& M) {
  if (!M.F.char_zero()) throw input_error("mackey certificate needs characteristic zero");
  MackeyReport rep;
  rep.certificate = true;
  auto reps = grp::double_coset_reps(*G, *H, *H);
  for (auto si : reps) {
    const Mat s = G->elem(si);
    if (H->contains(s)) continue;
    auto Hs = grp::conjugate_intersection(*G, *H, s);
    // sum over Hs of chi_M(x) chi_M(s^{-1} x^{-1} s)
    Scalar acc = M.F.zero();
    Mat sinv = s.inverse();
    for (std::uint32_t i = 0; i < Hs->size(); ++i) {
      const Mat& x = Hs->elem(i);
      Mat twisted = sinv * x.inverse() * s;
      // traces
      Scalar t1 = M.F.zero(), t2 = M.F.zero();
      for (std::uint32_t b = 0; b < M.dim(); ++b) {
        SparseVec v1 = M.act_elem(x, sv_unit(b, M.F.one()));
        for (const auto& [ii, c] : v1.t)
          if (ii == b) t1 = t1 + c;
        SparseVec v2 = M.act_elem(twisted, sv_unit(b, M.F.one()));
        for (const auto& [ii, c] : v2.t)
          if (ii == b) t2 = t2 + c;
      }
      acc = acc + t1 * t2;
    }
    bool disjoint = acc.is_zero();
    std::ostringstream os;
    os << "s=" << si << " |H^s&H|=" << Hs->size() << " disjoint=" << (disjoint ? "yes" : "no");
    rep.coset_details.push_back(os.str());
    if (!disjoint) rep.certificate = false;
  }
  return rep;
}

std::string MackeyReport::json() const {
  std::ostringstream os;
  os << "{\"schema\":1,\"certificate\":" << (certificate ? "true" : "false") << ",\"cosets\":[";
  for (size_t i = 0; i < coset_details.size(); ++i) {
    if (i) os << ",";
    os << "\"" << coset_details[i] << "\"";
  }
  os << "]}";
  return os.str();
}

} // namespace limitrep::modrep
