#include "limitrep/chevalley.hpp"

#include <algorithm>
#include <map>
#include <mutex>
#include <sstream>

#include <json.hpp>

namespace limitrep::chevalley {

// ---- GroupSpec ----------------------------------------------------------------

GroupSpec GroupSpec::parse(const std::string& s) {
  GroupSpec spec;
  size_t lp = s.find('(');
  size_t rp = s.find(')');
  if (lp == std::string::npos || rp == std::string::npos || rp < lp)
    throw input_error("cannot parse group spec '" + s + "'");
  std::string fam = s.substr(0, lp);
  if (fam == "GL")
    spec.fam = Family::GL;
  else if (fam == "SL")
    spec.fam = Family::SL;
  else
    throw input_error("unknown family in '" + s + "'");
  std::string body = s.substr(lp + 1, rp - lp - 1);
  size_t comma = body.find(',');
  if (comma == std::string::npos) throw input_error("group spec needs (n,q)");
  spec.n = static_cast<std::uint32_t>(std::stoul(body.substr(0, comma)));
  std::string qs = body.substr(comma + 1);
  size_t caret = qs.find('^');
  if (caret != std::string::npos) {
    spec.level = static_cast<std::uint32_t>(std::stoul(qs.substr(caret + 1)));
    qs = qs.substr(0, caret);
  }
  spec.q = std::stoull(qs);
  if (spec.n < 2) throw input_error("matrix size must be at least 2");
  auto f = nt::factorize(spec.q);
  if (f.size() != 1) throw input_error("q must be a prime power");
  if (spec.level < 1) throw input_error("level must be at least 1");
  return spec;
}

std::string GroupSpec::str() const {
  std::ostringstream os;
  os << (fam == Family::GL ? "GL" : "SL") << "(" << n << "," << q;
  if (level != 1) os << "^" << level;
  os << ")";
  return os.str();
}

GroupSpec GroupSpec::at_level(std::uint32_t a) const {
  GroupSpec s = *this;
  s.level = a;
  return s;
}

std::uint64_t GroupSpec::base_p() const { return nt::factorize(q)[0].first; }
std::uint32_t GroupSpec::base_m() const {
  return static_cast<std::uint32_t>(nt::factorize(q)[0].second);
}

FieldPtr GroupSpec::field() const {
  return fields::PrimePowerField::get(base_p(), base_m() * level);
}

std::uint64_t GroupSpec::field_order() const { return nt::pow_u64(q, level); }

mpz_class GroupSpec::order() const {
  mpz_class Q = static_cast<unsigned long>(field_order());
  mpz_class Qn;
  mpz_pow_ui(Qn.get_mpz_t(), Q.get_mpz_t(), n);
  mpz_class r = 1;
  mpz_class Qi = 1;
  for (std::uint32_t i = 0; i < n; ++i) {
    r *= (Qn - Qi);
    Qi *= Q;
  }
  if (fam == Family::SL) r /= (Q - 1);
  return r;
}

weyl::CoxPtr GroupSpec::weyl_group() const {
  return weyl::CoxeterSystem::get(weyl::CoxFamily::A, n - 1);
}

bool GroupSpec::operator==(const GroupSpec& o) const {
  return fam == o.fam && n == o.n && q == o.q && level == o.level;
}

// ---- Mat ------------------------------------------------------------------------

Mat::Mat(FieldPtr F, std::uint32_t n) : F_(std::move(F)), n_(n) {
  a_.assign(static_cast<size_t>(n) * n, F_->zero());
}

Mat Mat::identity(const FieldPtr& F, std::uint32_t n) {
  Mat m(F, n);
  for (std::uint32_t i = 0; i < n; ++i) m.set(i, i, F->one());
  return m;
}

Mat Mat::operator*(const Mat& o) const {
  if (F_.get() != o.F_.get() || n_ != o.n_) throw input_error("matrix mismatch");
  Mat r(F_, n_);
  for (std::uint32_t i = 0; i < n_; ++i)
    for (std::uint32_t k = 0; k < n_; ++k) {
      const FieldElement& x = at(i, k);
      if (x.is_zero()) continue;
      for (std::uint32_t j = 0; j < n_; ++j) {
        const FieldElement& y = o.at(k, j);
        if (y.is_zero()) continue;
        r.set(i, j, r.at(i, j) + x * y);
      }
    }
  return r;
}

bool Mat::operator==(const Mat& o) const { return n_ == o.n_ && a_ == o.a_; }

FieldElement Mat::det() const {
  Mat w = *this;
  FieldElement d = F_->one();
  for (std::uint32_t c = 0; c < n_; ++c) {
    std::uint32_t sel = c;
    while (sel < n_ && w.at(sel, c).is_zero()) ++sel;
    if (sel == n_) return F_->zero();
    if (sel != c) {
      for (std::uint32_t j = 0; j < n_; ++j) {
        FieldElement tmp = w.at(c, j);
        w.set(c, j, w.at(sel, j));
        w.set(sel, j, tmp);
      }
      d = -d;
    }
    d = d * w.at(c, c);
    FieldElement inv = w.at(c, c).inverse();
    for (std::uint32_t i = c + 1; i < n_; ++i) {
      if (w.at(i, c).is_zero()) continue;
      FieldElement f = w.at(i, c) * inv;
      for (std::uint32_t j = c; j < n_; ++j) w.set(i, j, w.at(i, j) - f * w.at(c, j));
    }
  }
  return d;
}

Mat Mat::inverse() const {
  Mat w = *this;
  Mat inv = identity(F_, n_);
  for (std::uint32_t c = 0; c < n_; ++c) {
    std::uint32_t sel = c;
    while (sel < n_ && w.at(sel, c).is_zero()) ++sel;
    if (sel == n_) throw input_error("singular matrix");
    if (sel != c)
      for (std::uint32_t j = 0; j < n_; ++j) {
        FieldElement tmp = w.at(c, j);
        w.set(c, j, w.at(sel, j));
        w.set(sel, j, tmp);
        tmp = inv.at(c, j);
        inv.set(c, j, inv.at(sel, j));
        inv.set(sel, j, tmp);
      }
    FieldElement s = w.at(c, c).inverse();
    for (std::uint32_t j = 0; j < n_; ++j) {
      w.set(c, j, w.at(c, j) * s);
      inv.set(c, j, inv.at(c, j) * s);
    }
    for (std::uint32_t i = 0; i < n_; ++i) {
      if (i == c || w.at(i, c).is_zero()) continue;
      FieldElement f = w.at(i, c);
      for (std::uint32_t j = 0; j < n_; ++j) {
        w.set(i, j, w.at(i, j) - f * w.at(c, j));
        inv.set(i, j, inv.at(i, j) - f * inv.at(c, j));
      }
    }
  }
  return inv;
}

std::string Mat::key() const {
  std::string k;
  k.reserve(a_.size() * 2 + 4);
  for (const auto& e : a_) {
    std::uint64_t idx = e.index();
    while (idx >= 0x80) {
      k.push_back(static_cast<char>((idx & 0x7f) | 0x80));
      idx >>= 7;
    }
    k.push_back(static_cast<char>(idx));
    k.push_back('\x01');
  }
  return k;
}

std::string Mat::str() const {
  std::ostringstream os;
  os << "[";
  for (std::uint32_t i = 0; i < n_; ++i) {
    if (i) os << "; ";
    for (std::uint32_t j = 0; j < n_; ++j) {
      if (j) os << " ";
      os << at(i, j).str();
    }
  }
  os << "]";
  return os.str();
}

std::string Mat::json() const {
  nlohmann::ordered_json rows = nlohmann::ordered_json::array();
  for (std::uint32_t i = 0; i < n_; ++i) {
    nlohmann::ordered_json row = nlohmann::ordered_json::array();
    for (std::uint32_t j = 0; j < n_; ++j) {
      nlohmann::ordered_json coeffs = nlohmann::ordered_json::array();
      for (auto c : at(i, j).coeffs()) coeffs.push_back(c);
      row.push_back(coeffs);
    }
    rows.push_back(row);
  }
  return rows.dump();
}

Mat mat_from_json(const FieldPtr& F, const std::string& text) {
  auto j = nlohmann::json::parse(text);
  std::uint32_t n = static_cast<std::uint32_t>(j.size());
  Mat m(F, n);
  for (std::uint32_t i = 0; i < n; ++i)
    for (std::uint32_t k = 0; k < n; ++k) {
      std::vector<std::uint32_t> coeffs = j.at(i).at(k).get<std::vector<std::uint32_t>>();
      m.set(i, k, F->element(std::move(coeffs)));
    }
  return m;
}

// ---- roots ---------------------------------------------------------------------

bool Root::operator<(const Root& o) const {
  if (height() != o.height()) return height() < o.height();
  return std::tie(i, j) < std::tie(o.i, o.j);
}

std::vector<Root> positive_roots(std::uint32_t n) {
  std::vector<Root> r;
  for (std::uint32_t i = 1; i <= n; ++i)
    for (std::uint32_t j = i + 1; j <= n; ++j) r.push_back(Root{i, j});
  std::sort(r.begin(), r.end());
  return r;
}

Root simple_root(std::uint32_t i) { return Root{i, i + 1}; }

// ---- Group ----------------------------------------------------------------------

Group::Group(GroupSpec spec) : spec_(spec), F_(spec.field()), W_(spec.weyl_group()) {}

GroupPtr group(const GroupSpec& spec) {
  static std::map<std::string, GroupPtr> registry;
  static std::mutex mu;
  std::lock_guard<std::mutex> lk(mu);
  auto key = spec.str();
  auto it = registry.find(key);
  if (it != registry.end()) return it->second;
  GroupPtr g = std::make_shared<Group>(spec);
  registry.emplace(key, g);
  return g;
}

Mat Group::identity() const { return Mat::identity(F_, spec_.n); }

Mat Group::root_element(const Root& r, const FieldElement& c) const {
  if (r.i == r.j || r.i < 1 || r.j < 1 || r.i > spec_.n || r.j > spec_.n)
    throw input_error("not a root of this group");
  Mat m = identity();
  m.set(r.i - 1, r.j - 1, c);
  return m;
}

Mat Group::torus_element(const std::vector<FieldElement>& diag) const {
  if (diag.size() != spec_.n) throw input_error("torus element needs n entries");
  Mat m(F_, spec_.n);
  for (std::uint32_t i = 0; i < spec_.n; ++i) {
    if (diag[i].is_zero()) throw input_error("torus entries must be nonzero");
    m.set(i, i, diag[i]);
  }
  return m;
}

Mat Group::weyl_representative(const weyl::WElement& w) const {
  std::lock_guard<std::mutex> lk(mu_);
  auto it = nw_cache_.find(w.window());
  if (it != nw_cache_.end()) return it->second;
  Mat m = identity();
  for (auto s : w.reduced_word()) {
    Mat ni = identity();
    ni.set(s - 1, s - 1, F_->zero());
    ni.set(s, s, F_->zero());
    ni.set(s - 1, s, -F_->one());
    ni.set(s, s - 1, F_->one());
    m = m * ni;
  }
  nw_cache_.emplace(w.window(), m);
  return m;
}

Mat Group::frobenius_map(const Mat& g) const {
  Mat r(F_, spec_.n);
  for (std::uint32_t i = 0; i < spec_.n; ++i)
    for (std::uint32_t j = 0; j < spec_.n; ++j)
      r.set(i, j, fields::frobenius(g.at(i, j), spec_.q));
  return r;
}

bool Group::in_group(const Mat& g) const {
  FieldElement d = g.det();
  if (d.is_zero()) return false;
  return spec_.fam == Family::GL || d.is_one();
}

bool Group::member(const Mat& g, const SubgroupTag& tag) const {
  const std::uint32_t n = spec_.n;
  if (!in_group(g)) return false;
  auto upper = [&] {
    for (std::uint32_t i = 0; i < n; ++i)
      for (std::uint32_t j = 0; j < i; ++j)
        if (!g.at(i, j).is_zero()) return false;
    return true;
  };
  auto unitriangular = [&] {
    if (!upper()) return false;
    for (std::uint32_t i = 0; i < n; ++i)
      if (!g.at(i, i).is_one()) return false;
    return true;
  };
  auto diagonal = [&] {
    for (std::uint32_t i = 0; i < n; ++i)
      for (std::uint32_t j = 0; j < n; ++j)
        if (i != j && !g.at(i, j).is_zero()) return false;
    return true;
  };
  auto block_of = [&](std::uint32_t idx, const std::vector<std::uint32_t>& J) {
    // wall between positions k and k+1 unless s_k is in J (1-based)
    std::uint32_t b = 0;
    for (std::uint32_t k = 1; k <= idx; ++k)
      if (std::find(J.begin(), J.end(), k) == J.end()) ++b;
    return b;
  };
  switch (tag.kind) {
    case SubgroupTag::Kind::B:
      return upper();
    case SubgroupTag::Kind::T:
      return diagonal();
    case SubgroupTag::Kind::U:
      return unitriangular();
    case SubgroupTag::Kind::N: {
      for (std::uint32_t i = 0; i < n; ++i) {
        std::uint32_t nz = 0;
        for (std::uint32_t j = 0; j < n; ++j)
          if (!g.at(i, j).is_zero()) ++nz;
        if (nz != 1) return false;
      }
      return true;
    }
    case SubgroupTag::Kind::Uroot: {
      for (std::uint32_t i = 0; i < n; ++i)
        for (std::uint32_t j = 0; j < n; ++j) {
          if (i == j) {
            if (!g.at(i, i).is_one()) return false;
          } else if (i + 1 != tag.root.i || j + 1 != tag.root.j) {
            if (!g.at(i, j).is_zero()) return false;
          }
        }
      return true;
    }
    case SubgroupTag::Kind::Uprime: {
      if (!unitriangular()) return false;
      for (std::uint32_t i = 0; i + 1 < n; ++i)
        if (!g.at(i, i + 1).is_zero()) return false;
      return true;
    }
    case SubgroupTag::Kind::Uw:
    case SubgroupTag::Kind::Uwprime: {
      if (!unitriangular()) return false;
      auto coords = unipotent_coords(g);
      auto roots = positive_roots(n);
      auto winv = tag.w.inverse();
      for (size_t k = 0; k < roots.size(); ++k) {
        if (coords[k].is_zero()) continue;
        // w^{-1}(e_i - e_j) negative iff w^{-1}(i) > w^{-1}(j)
        bool sent_negative =
            winv.window()[roots[k].i - 1] > winv.window()[roots[k].j - 1];
        if (tag.kind == SubgroupTag::Kind::Uw && !sent_negative) return false;
        if (tag.kind == SubgroupTag::Kind::Uwprime && sent_negative) return false;
      }
      return true;
    }
    case SubgroupTag::Kind::PJ: {
      for (std::uint32_t i = 0; i < n; ++i)
        for (std::uint32_t j = 0; j < i; ++j)
          if (!g.at(i, j).is_zero() && block_of(i, tag.J) != block_of(j, tag.J)) return false;
      return true;
    }
    case SubgroupTag::Kind::LJ: {
      for (std::uint32_t i = 0; i < n; ++i)
        for (std::uint32_t j = 0; j < n; ++j)
          if (i != j && !g.at(i, j).is_zero() && block_of(i, tag.J) != block_of(j, tag.J))
            return false;
      return true;
    }
    case SubgroupTag::Kind::UPJ: {
      if (!unitriangular()) return false;
      for (std::uint32_t i = 0; i < n; ++i)
        for (std::uint32_t j = i + 1; j < n; ++j)
          if (!g.at(i, j).is_zero() && block_of(i, tag.J) == block_of(j, tag.J)) return false;
      return true;
    }
  }
  throw internal_error("unreachable");
}

std::vector<FieldElement> Group::unipotent_coords(const Mat& u) const {
  auto roots = positive_roots(spec_.n);
  std::vector<FieldElement> coords;
  coords.reserve(roots.size());
  Mat v = u;
  for (const auto& r : roots) {
    FieldElement c = v.at(r.i - 1, r.j - 1);
    coords.push_back(c);
    if (!c.is_zero()) v = root_element(r, -c) * v;
  }
  for (std::uint32_t i = 0; i < spec_.n; ++i)
    for (std::uint32_t j = 0; j < spec_.n; ++j)
      if ((i == j && !v.at(i, j).is_one()) || (i != j && !v.at(i, j).is_zero()))
        throw input_error("unipotent_coords: matrix is not upper unitriangular");
  return coords;
}

Mat Group::from_unipotent_coords(const std::vector<FieldElement>& c) const {
  auto roots = positive_roots(spec_.n);
  if (c.size() != roots.size()) throw input_error("wrong coordinate count");
  Mat m = identity();
  for (size_t k = 0; k < roots.size(); ++k)
    if (!c[k].is_zero()) m = m * root_element(roots[k], c[k]);
  return m;
}

std::pair<Mat, Mat> Group::split_u_along(const Mat& u, const weyl::WElement& w) const {
  auto roots = positive_roots(spec_.n);
  auto winv = w.inverse();
  Mat v = u;
  Mat r = identity();
  for (const auto& root : roots) {
    bool sent_negative = winv.window()[root.i - 1] > winv.window()[root.j - 1];
    if (sent_negative) continue; // keep U_w coordinates
    FieldElement c = v.at(root.i - 1, root.j - 1);
    if (c.is_zero()) continue;
    v = v * root_element(root, -c);
    r = root_element(root, c) * r;
  }
  return {v, r}; // u = v * r, v in U_w, r in U'_w
}

BruhatNormalForm Group::bruhat_decompose(const Mat& g) const {
  const std::uint32_t n = spec_.n;
  if (g.det().is_zero()) throw input_error("bruhat_decompose: singular matrix");
  Mat work = g;
  Mat L = identity(); // accumulated left row ops (upper unitriangular)
  Mat R = identity(); // accumulated right column ops
  std::vector<bool> used_col(n, false);
  for (std::uint32_t row = n; row-- > 0;) {
    std::uint32_t c = 0;
    while (c < n && (used_col[c] || work.at(row, c).is_zero())) ++c;
    if (c == n) throw internal_error("no pivot in row");
    used_col[c] = true;
    FieldElement pinv = work.at(row, c).inverse();
    for (std::uint32_t i = 0; i < row; ++i) {
      FieldElement f = work.at(i, c) * pinv;
      if (f.is_zero()) continue;
      // row_i -= f * row_row ; left-multiply by I - f E_{i,row}
      for (std::uint32_t j = 0; j < n; ++j) work.set(i, j, work.at(i, j) - f * work.at(row, j));
      for (std::uint32_t j = 0; j < n; ++j) L.set(i, j, L.at(i, j) - f * L.at(row, j));
    }
    for (std::uint32_t j = 0; j < n; ++j) {
      if (j == c) continue;
      FieldElement f = work.at(row, j) * pinv;
      if (f.is_zero()) continue;
      // col_j -= f * col_c ; right-multiply by I - f E_{c,j} (c < j always here)
      if (j < c) throw internal_error("nonzero entry left of pivot");
      for (std::uint32_t i = 0; i < n; ++i) work.set(i, j, work.at(i, j) - f * work.at(i, c));
      for (std::uint32_t i = 0; i < n; ++i) R.set(i, j, R.at(i, j) - f * R.at(i, c));
    }
  }
  // work is monomial: L * g * R = work
  std::vector<std::int32_t> window(n);
  for (std::uint32_t col = 0; col < n; ++col) {
    std::uint32_t row = 0;
    while (row < n && work.at(row, col).is_zero()) ++row;
    window[col] = static_cast<std::int32_t>(row + 1);
  }
  weyl::WElement w = W_->from_window(window);
  Mat nw = weyl_representative(w);
  Mat t = nw.inverse() * work;
  for (std::uint32_t i = 0; i < n; ++i)
    for (std::uint32_t j = 0; j < n; ++j)
      if (i != j && !t.at(i, j).is_zero()) throw internal_error("torus part not diagonal");
  Mat u_any = L.inverse();
  Mat uprime_any = R.inverse();
  auto [uw, uwp] = split_u_along(u_any, w);
  // fold the U'_w factor through n_w and t into the right-hand unipotent part
  Mat tilde = nw.inverse() * uwp * nw;
  Mat uprime = t.inverse() * tilde * t * uprime_any;
  BruhatNormalForm nf{w, uw, t, uprime};
  if (uw * nw * t * uprime != g) throw internal_error("bruhat recomposition failed");
  return nf;
}

CosetLabel Group::coset_index(const Mat& g) const {
  auto nf = bruhat_decompose(g);
  auto roots = positive_roots(spec_.n);
  auto coords = unipotent_coords(nf.u);
  auto winv = nf.w.inverse();
  CosetLabel lab;
  lab.w_index = W_->index_of(nf.w);
  for (size_t k = 0; k < roots.size(); ++k) {
    bool sent_negative = winv.window()[roots[k].i - 1] > winv.window()[roots[k].j - 1];
    if (sent_negative)
      lab.coords.push_back(coords[k]);
    else if (!coords[k].is_zero())
      throw internal_error("coset label: coordinate outside U_w");
  }
  return lab;
}

Mat Group::coset_representative(const CosetLabel& label) const {
  auto roots = positive_roots(spec_.n);
  weyl::WElement w = W_->element(label.w_index);
  auto winv = w.inverse();
  Mat u = identity();
  size_t k = 0;
  for (const auto& r : roots) {
    bool sent_negative = winv.window()[r.i - 1] > winv.window()[r.j - 1];
    if (!sent_negative) continue;
    if (k >= label.coords.size()) throw input_error("coset label too short");
    if (!label.coords[k].is_zero()) u = u * root_element(r, label.coords[k]);
    ++k;
  }
  return u * weyl_representative(w);
}

std::string CosetLabel::key() const {
  std::string s = std::to_string(w_index);
  for (const auto& c : coords) {
    s.push_back(':');
    s += std::to_string(c.index());
  }
  return s;
}

std::vector<Mat> Group::enumerate() const {
  mpz_class ord = spec_.order();
  if (ord > static_cast<unsigned long>(bounds::enumeration()))
    throw bound_error("group enumeration bound exceeded: " + spec_.str());
  const std::uint64_t Q = spec_.field_order();
  const std::uint32_t n = spec_.n;
  auto roots = positive_roots(n);
  std::vector<Mat> out;
  out.reserve(ord.get_ui());
  // torus tuples
  std::vector<Mat> torus;
  {
    std::uint32_t free_slots = spec_.fam == Family::GL ? n : n - 1;
    std::vector<std::uint64_t> idx(free_slots, 1);
    while (true) {
      std::vector<FieldElement> diag;
      FieldElement prod = F_->one();
      for (std::uint32_t i = 0; i < free_slots; ++i) {
        diag.push_back(F_->element_by_index(idx[i]));
        prod = prod * diag.back();
      }
      if (spec_.fam == Family::SL) diag.push_back(prod.inverse());
      torus.push_back(torus_element(diag));
      std::uint32_t k = 0;
      while (k < free_slots) {
        if (++idx[k] < Q) break;
        idx[k] = 1;
        ++k;
      }
      if (k == free_slots) break;
    }
  }
  for (std::uint32_t wi = 0; wi < W_->size(); ++wi) {
    weyl::WElement w = W_->element(wi);
    Mat nw = weyl_representative(w);
    auto winv = w.inverse();
    std::vector<Root> uw_roots;
    for (const auto& r : roots)
      if (winv.window()[r.i - 1] > winv.window()[r.j - 1]) uw_roots.push_back(r);
    const std::uint32_t lw = static_cast<std::uint32_t>(uw_roots.size());
    std::vector<std::uint64_t> uc(lw, 0);
    while (true) {
      Mat u = identity();
      for (std::uint32_t k = 0; k < lw; ++k)
        if (uc[k]) u = u * root_element(uw_roots[k], F_->element_by_index(uc[k]));
      Mat left = u * nw;
      for (const auto& t : torus) {
        Mat lt = left * t;
        std::vector<std::uint64_t> vc(roots.size(), 0);
        while (true) {
          Mat up = identity();
          for (size_t k = 0; k < roots.size(); ++k)
            if (vc[k]) up = up * root_element(roots[k], F_->element_by_index(vc[k]));
          out.push_back(lt * up);
          size_t k = 0;
          while (k < roots.size()) {
            if (++vc[k] < Q) break;
            vc[k] = 0;
            ++k;
          }
          if (k == roots.size()) break;
        }
      }
      std::uint32_t k = 0;
      while (k < lw) {
        if (++uc[k] < Q) break;
        uc[k] = 0;
        ++k;
      }
      if (k == lw || lw == 0) break;
    }
  }
  if (mpz_class(static_cast<unsigned long>(out.size())) != ord)
    throw internal_error("enumeration does not match the order formula");
  return out;
}

std::vector<std::pair<std::string, Mat>> Group::generators() const {
  std::vector<std::pair<std::string, Mat>> gens;
  const std::uint32_t n = spec_.n;
  const std::uint32_t deg = F_->degree();
  FieldElement xhat = F_->generator();
  // additive basis of the field: powers of the canonical generator
  std::vector<FieldElement> basis;
  FieldElement acc = F_->one();
  for (std::uint32_t k = 0; k < deg; ++k) {
    basis.push_back(acc);
    acc = acc * xhat;
  }
  for (std::uint32_t i = 1; i < n; ++i)
    for (std::uint32_t k = 0; k < deg; ++k) {
      std::ostringstream os;
      os << "u" << i << (k ? "_" + std::to_string(k) : "");
      gens.emplace_back(os.str(), root_element(simple_root(i), basis[k]));
    }
  for (std::uint32_t i = 1; i < n; ++i)
    gens.emplace_back("n" + std::to_string(i), weyl_representative(W_->generator(i)));
  if (F_->order() > 2) {
    if (spec_.fam == Family::GL) {
      for (std::uint32_t i = 0; i < n; ++i) {
        std::vector<FieldElement> diag(n, F_->one());
        diag[i] = xhat;
        gens.emplace_back("t" + std::to_string(i + 1), torus_element(diag));
      }
    } else {
      for (std::uint32_t i = 0; i + 1 < n; ++i) {
        std::vector<FieldElement> diag(n, F_->one());
        diag[i] = xhat;
        diag[i + 1] = xhat.inverse();
        gens.emplace_back("t" + std::to_string(i + 1), torus_element(diag));
      }
    }
  }
  return gens;
}

} // namespace limitrep::chevalley
