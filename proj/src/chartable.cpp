#include "limitrep/chartable.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <mutex>

namespace limitrep::chartab {

using grp::Mat;

namespace {

using u32 = std::uint32_t;
using u64 = std::uint64_t;

// dense linear algebra mod p (p < 2^31)
struct FpMat {
  u32 r = 0, c = 0;
  u64 p = 2;
  std::vector<u64> a;
  u64& at(u32 i, u32 j) { return a[static_cast<size_t>(i) * c + j]; }
  u64 at(u32 i, u32 j) const { return a[static_cast<size_t>(i) * c + j]; }
};

FpMat fp_zero(u32 r, u32 c, u64 p) {
  FpMat m;
  m.r = r;
  m.c = c;
  m.p = p;
  m.a.assign(static_cast<size_t>(r) * c, 0);
  return m;
}

std::vector<std::vector<u64>> fp_nullspace(FpMat m) {
  const u64 p = m.p;
  std::vector<u32> piv;
  u32 row = 0;
  for (u32 col = 0; col < m.c && row < m.r; ++col) {
    u32 sel = row;
    while (sel < m.r && m.at(sel, col) == 0) ++sel;
    if (sel == m.r) continue;
    for (u32 j = 0; j < m.c; ++j) std::swap(m.at(sel, j), m.at(row, j));
    u64 inv = nt::inv_mod(m.at(row, col), p);
    for (u32 j = 0; j < m.c; ++j) m.at(row, j) = nt::mul_mod(m.at(row, j), inv, p);
    for (u32 i = 0; i < m.r; ++i) {
      if (i == row || m.at(i, col) == 0) continue;
      u64 f = m.at(i, col);
      for (u32 j = 0; j < m.c; ++j)
        m.at(i, j) = (m.at(i, j) + p - nt::mul_mod(f, m.at(row, j), p)) % p;
    }
    piv.push_back(col);
    ++row;
  }
  std::vector<bool> is_piv(m.c, false);
  for (auto x : piv) is_piv[x] = true;
  std::vector<std::vector<u64>> basis;
  for (u32 f = 0; f < m.c; ++f) {
    if (is_piv[f]) continue;
    std::vector<u64> v(m.c, 0);
    v[f] = 1;
    for (size_t i = 0; i < piv.size(); ++i) v[piv[i]] = (p - m.at(static_cast<u32>(i), f)) % p;
    basis.push_back(std::move(v));
  }
  return basis;
}

// characteristic polynomial by Leverrier-Faddeev; needs p > dim
std::vector<u64> fp_charpoly(const FpMat& A) {
  const u32 n = A.r;
  const u64 p = A.p;
  FpMat M = fp_zero(n, n, p);
  std::vector<u64> coeff(n + 1, 0);
  coeff[n] = 1; // monic
  FpMat I = fp_zero(n, n, p);
  for (u32 i = 0; i < n; ++i) I.at(i, i) = 1;
  // M_1 = A, c_{n-1} = -tr(A); M_{k+1} = A(M_k + c I)
  FpMat Mk = A;
  u64 ck = 0;
  for (u32 k = 1; k <= n; ++k) {
    u64 tr = 0;
    for (u32 i = 0; i < n; ++i) tr = (tr + Mk.at(i, i)) % p;
    ck = nt::mul_mod(tr, nt::inv_mod(k % p, p), p);
    ck = (p - ck) % p; // c_{n-k} = -tr(M_k)/k
    coeff[n - k] = ck;
    if (k == n) break;
    FpMat S = Mk;
    for (u32 i = 0; i < n; ++i) S.at(i, i) = (S.at(i, i) + ck) % p;
    FpMat next = fp_zero(n, n, p);
    for (u32 i = 0; i < n; ++i)
      for (u32 t = 0; t < n; ++t) {
        if (A.at(i, t) == 0) continue;
        for (u32 j = 0; j < n; ++j)
          next.at(i, j) = (next.at(i, j) + nt::mul_mod(A.at(i, t), S.at(t, j), p)) % p;
      }
    Mk = std::move(next);
  }
  return coeff;
}

struct Block {
  // basis vectors of an invariant subspace, rows over F_p, dim r columns
  std::vector<std::vector<u64>> basis;
};

} // namespace

mpq_class class_inner(const grp::FiniteGroup& G, const CoeffField& F,
                      const std::vector<Scalar>& a, const std::vector<Scalar>& b) {
  const auto& cls = G.classes();
  Scalar acc = F.zero();
  for (u32 k = 0; k < cls.rep.size(); ++k) {
    Scalar term = a[k] * b[cls.inverse_class[k]];
    acc = acc + term * F.from_int(static_cast<std::int64_t>(cls.size[k]));
  }
  if (!acc.is_cyclo()) throw input_error("class_inner needs characteristic zero");
  // divide by |G|
  auto val = acc.cyclo();
  if (!val.is_rational()) throw internal_error("class inner product not rational");
  mpq_class r = val.rational_part() / mpq_class(static_cast<unsigned long>(G.size()));
  r.canonicalize();
  return r;
}

mpq_class CharacterTable::inner(const std::vector<Scalar>& a,
                                const std::vector<Scalar>& b) const {
  return class_inner(*G, F, a, b);
}

namespace {

CharacterTable build_table(const grp::GroupHandle& Gh) {
  const auto& G = *Gh;
  if (G.size() > bounds::character_table())
    throw bound_error("character table bound exceeded for " + G.name());
  const auto& cls = G.classes();
  const u32 r = static_cast<u32>(cls.rep.size());
  const u64 e = G.exponent();

  // choose the Dixon prime
  u64 p = e + 1;
  {
    u64 lower = std::max<u64>({2 * static_cast<u64>(std::sqrt(double(G.size()))) + 3,
                               static_cast<u64>(r) + 2, 64});
    while (p <= lower || !nt::is_prime(p)) p += e;
  }

  // class multiplication coefficients a_{ijk} = #{(x,y) in C_i x C_j : xy = z_k},
  // found in one pass over the group: x in C_i, y = x^{-1} z_k in C_j.
  // The vector (omega_k(chi))_k is then a simultaneous eigenvector of the
  // matrices (M_i)_{j,k} = a_{ijk} with eigenvalue omega_i(chi).
  std::vector<FpMat> M(r);
  for (u32 i = 0; i < r; ++i) M[i] = fp_zero(r, r, p);
  for (u32 x = 0; x < G.size(); ++x) {
    const u32 i = cls.class_of[x];
    Mat xinv = G.elem(x).inverse();
    for (u32 k = 0; k < r; ++k) {
      Mat y = xinv * G.elem(cls.rep[k]);
      u32 j = G.class_of_mat(y);
      M[i].at(j, k) = (M[i].at(j, k) + 1) % p;
    }
  }

  // split the class space into simultaneous eigenlines over F_p
  std::vector<Block> blocks(1);
  blocks[0].basis.resize(r);
  for (u32 i = 0; i < r; ++i) {
    blocks[0].basis[i].assign(r, 0);
    blocks[0].basis[i][i] = 1;
  }
  for (u32 i = 0; i < r; ++i) {
    std::vector<Block> next;
    for (auto& blk : blocks) {
      const u32 d = static_cast<u32>(blk.basis.size());
      if (d == 1) {
        next.push_back(std::move(blk));
        continue;
      }
      // restriction of M_i to the block: express M_i b_t in the block basis
      // via elimination against an echelonized copy of the basis
      FpMat ech = fp_zero(d, r + d, p); // [basis | identity] for coordinates
      for (u32 t = 0; t < d; ++t) {
        for (u32 j = 0; j < r; ++j) ech.at(t, j) = blk.basis[t][j];
        ech.at(t, r + t) = 1;
      }
      // row echelon of the left part
      std::vector<u32> piv;
      u32 row = 0;
      for (u32 col = 0; col < r && row < d; ++col) {
        u32 sel = row;
        while (sel < d && ech.at(sel, col) == 0) ++sel;
        if (sel == d) continue;
        for (u32 j = 0; j < r + d; ++j) std::swap(ech.at(sel, j), ech.at(row, j));
        u64 inv = nt::inv_mod(ech.at(row, col), p);
        for (u32 j = 0; j < r + d; ++j) ech.at(row, j) = nt::mul_mod(ech.at(row, j), inv, p);
        for (u32 ii = 0; ii < d; ++ii) {
          if (ii == row || ech.at(ii, col) == 0) continue;
          u64 f = ech.at(ii, col);
          for (u32 j = 0; j < r + d; ++j)
            ech.at(ii, j) = (ech.at(ii, j) + p - nt::mul_mod(f, ech.at(row, j), p)) % p;
        }
        piv.push_back(col);
        ++row;
      }
      auto express = [&](const std::vector<u64>& v) {
        std::vector<u64> rem = v, coords(d, 0);
        for (u32 t = 0; t < piv.size(); ++t) {
          u64 f = rem[piv[t]];
          if (!f) continue;
          for (u32 j = 0; j < r; ++j)
            rem[j] = (rem[j] + p - nt::mul_mod(f, ech.at(t, j), p)) % p;
          for (u32 j = 0; j < d; ++j)
            coords[j] = (coords[j] + nt::mul_mod(f, ech.at(t, r + j), p)) % p;
        }
        for (u32 j = 0; j < r; ++j)
          if (rem[j]) throw internal_error("block not invariant");
        return coords;
      };
      FpMat R = fp_zero(d, d, p);
      for (u32 t = 0; t < d; ++t) {
        std::vector<u64> img(r, 0);
        for (u32 kp = 0; kp < r; ++kp) {
          u64 s = 0;
          for (u32 j = 0; j < r; ++j) {
            if (!blk.basis[t][j]) continue;
            s = (s + nt::mul_mod(M[i].at(kp, j), blk.basis[t][j], p)) % p;
          }
          img[kp] = s;
        }
        auto coords = express(img);
        for (u32 j = 0; j < d; ++j) R.at(j, t) = coords[j]; // column t
      }
      // eigenvalues: roots of the characteristic polynomial over F_p
      auto cp = fp_charpoly(R);
      std::vector<u64> roots;
      for (u64 lam = 0; lam < p; ++lam) {
        u64 v = 0;
        for (size_t k = cp.size(); k-- > 0;) v = (nt::mul_mod(v, lam, p) + cp[k]) % p;
        if (v == 0) roots.push_back(lam);
      }
      u32 found = 0;
      for (u64 lam : roots) {
        FpMat shifted = R;
        for (u32 t = 0; t < d; ++t) shifted.at(t, t) = (shifted.at(t, t) + p - lam) % p;
        auto null = fp_nullspace(shifted);
        if (null.empty()) continue;
        Block nb;
        for (auto& coords : null) {
          std::vector<u64> vec(r, 0);
          for (u32 t = 0; t < d; ++t) {
            if (!coords[t]) continue;
            for (u32 j = 0; j < r; ++j)
              vec[j] = (vec[j] + nt::mul_mod(coords[t], blk.basis[t][j], p)) % p;
          }
          nb.basis.push_back(std::move(vec));
          ++found;
        }
        next.push_back(std::move(nb));
      }
      if (found != d) throw internal_error("class algebra did not split over F_p");
    }
    blocks = std::move(next);
  }
  if (blocks.size() != r) throw internal_error("wrong number of eigenlines");

  // normalize eigenvectors and recover degrees and character values mod p
  const u32 id_class = cls.class_of[G.index_of(G.identity())];
  std::vector<std::vector<u64>> omega(r);
  std::vector<u64> degree_p(r);
  std::vector<u32> degree_int(r);
  for (u32 t = 0; t < r; ++t) {
    auto v = blocks[t].basis[0];
    if (!v[id_class]) throw internal_error("eigenvector vanishes at the identity class");
    u64 scale = nt::inv_mod(v[id_class], p);
    for (auto& x : v) x = nt::mul_mod(x, scale, p);
    // 1/chi(1)^2 = sum_k v_k v_{k*} / (|C_k| |G|)
    u64 s = 0;
    for (u32 k = 0; k < r; ++k) {
      u64 term = nt::mul_mod(v[k], v[cls.inverse_class[k]], p);
      term = nt::mul_mod(term, nt::inv_mod(cls.size[k] % p, p), p);
      s = (s + term) % p;
    }
    u64 d2 = nt::mul_mod(G.size() % p, nt::inv_mod(s, p), p);
    u32 deg = 0;
    for (u32 cand = 1; static_cast<u64>(cand) * cand <= static_cast<u64>(G.size()); ++cand)
      if (nt::mul_mod(cand, cand, p) == d2) {
        deg = cand;
        break;
      }
    if (!deg) throw internal_error("no integer degree matches");
    degree_p[t] = deg % p;
    degree_int[t] = deg;
    omega[t] = std::move(v);
  }

  // lift to exact cyclotomic values
  CoeffField F = CoeffField::cyclotomic(static_cast<u32>(e));
  // chi_p(g_k) = omega_k * deg / |C_k|
  auto chi_p = [&](u32 t, u32 k) {
    u64 x = nt::mul_mod(omega[t][k], degree_p[t], p);
    return nt::mul_mod(x, nt::inv_mod(cls.size[k] % p, p), p);
  };
  // primitive e-th root of unity mod p
  u64 lam_e = 0;
  for (u64 g0 = 2; g0 < p; ++g0) {
    bool prim = true;
    for (auto [f, m] : nt::factorize(p - 1)) {
      (void)m;
      if (nt::pow_mod(g0, (p - 1) / f, p) == 1) {
        prim = false;
        break;
      }
    }
    if (prim) {
      lam_e = nt::pow_mod(g0, (p - 1) / e, p);
      break;
    }
  }

  CharacterTable T;
  T.G = Gh;
  T.F = F;
  T.exponent = e;
  T.degrees = degree_int;
  T.values.assign(r, std::vector<Scalar>(r, F.zero()));
  for (u32 k = 0; k < r; ++k) {
    const u32 rep = cls.rep[k];
    const u32 o = G.element_order(rep);
    // classes of the powers g^u
    std::vector<u32> power_class(o);
    Mat acc = G.identity();
    for (u32 u = 0; u < o; ++u) {
      power_class[u] = G.class_of_mat(acc);
      acc = acc * G.elem(rep);
    }
    const u64 lam_o = nt::pow_mod(lam_e, e / o, p);
    for (u32 t = 0; t < r; ++t) {
      // multiplicity of zeta_o^l among the eigenvalues of the matrix of g_k
      Scalar val = F.zero();
      for (u32 l = 0; l < o; ++l) {
        u64 m = 0;
        for (u32 u = 0; u < o; ++u) {
          u64 term = nt::mul_mod(chi_p(t, power_class[u]),
                                 nt::pow_mod(lam_o, ((o - l) * static_cast<u64>(u)) % o, p), p);
          m = (m + term) % p;
        }
        m = nt::mul_mod(m, nt::inv_mod(o % p, p), p);
        if (m > static_cast<u64>(degree_int[t]))
          throw internal_error("eigenvalue multiplicity lift out of range");
        if (m) {
          Scalar z = F.coerce(Scalar(F.cyclo()->zeta_pow(static_cast<std::int64_t>(
              (e / o) * static_cast<u64>(l)))));
          for (u64 c = 0; c < m; ++c) val = val + z;
        }
      }
      T.values[t][k] = val;
    }
  }

  // deterministic row order: by degree, then by printed values
  {
    std::vector<u32> perm(r);
    for (u32 i = 0; i < r; ++i) perm[i] = i;
    auto row_str = [&](u32 t) {
      std::string s;
      for (u32 k = 0; k < r; ++k) s += T.values[t][k].str() + "|";
      return s;
    };
    std::vector<std::string> strs(r);
    for (u32 i = 0; i < r; ++i) strs[i] = row_str(i);
    std::sort(perm.begin(), perm.end(), [&](u32 a, u32 b) {
      if (T.degrees[a] != T.degrees[b]) return T.degrees[a] < T.degrees[b];
      return strs[a] < strs[b];
    });
    std::vector<u32> dg(r);
    std::vector<std::vector<Scalar>> vals(r);
    for (u32 i = 0; i < r; ++i) {
      dg[i] = T.degrees[perm[i]];
      vals[i] = std::move(T.values[perm[i]]);
    }
    T.degrees = std::move(dg);
    T.values = std::move(vals);
  }

  // verification: first orthogonality relations, exactly
  for (u32 s = 0; s < r; ++s)
    for (u32 t = 0; t < r; ++t) {
      mpq_class ip = T.inner(T.values[s], T.values[t]);
      if (ip != (s == t ? 1 : 0)) throw internal_error("character table fails orthogonality");
    }
  for (u32 t = 0; t < r; ++t) {
    if (!T.values[t][id_class].is_cyclo()) throw internal_error("bad identity value");
    auto v = T.values[t][id_class].cyclo();
    if (!v.is_rational() || v.rational_part() != static_cast<long>(T.degrees[t]))
      throw internal_error("degree does not match the identity value");
  }
  return T;
}

} // namespace

const CharacterTable& character_table(const grp::GroupHandle& G) {
  static std::map<const grp::FiniteGroup*, CharacterTable> cache;
  static std::mutex mu;
  std::lock_guard<std::mutex> lk(mu);
  auto it = cache.find(G.get());
  if (it != cache.end()) return it->second;
  auto [pos, ok] = cache.emplace(G.get(), build_table(G));
  (void)ok;
  return pos->second;
}

} // namespace limitrep::chartab
