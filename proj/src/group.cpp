#include "limitrep/group.hpp"

#include <algorithm>

namespace limitrep::grp {

struct FiniteGroup::Enum {
  std::vector<Mat> elems;
  std::unordered_map<std::string, std::uint32_t> index;
  std::vector<std::vector<std::uint32_t>> words;
  std::vector<std::uint32_t> order_of; // element orders, lazy 0 = unknown
};

FiniteGroup::FiniteGroup(std::string name, fields::FieldPtr F, std::uint32_t n,
                         std::vector<std::pair<std::string, Mat>> gens, std::uint64_t bound)
    : name_(std::move(name)), F_(std::move(F)), n_(n), bound_(bound) {
  for (auto& [gn, g] : gens) {
    if (g.size() != n_) throw input_error("generator size mismatch");
    gen_names_.push_back(gn);
    gens_.push_back(g);
  }
}

GroupHandle FiniteGroup::make(std::string name, fields::FieldPtr F, std::uint32_t n,
                              std::vector<std::pair<std::string, Mat>> gens,
                              std::uint64_t bound) {
  return std::make_shared<FiniteGroup>(std::move(name), std::move(F), n, std::move(gens), bound);
}

GroupHandle FiniteGroup::trivial(fields::FieldPtr F, std::uint32_t n) {
  return make("1", std::move(F), n, {});
}

GroupHandle FiniteGroup::from_chevalley(const chevalley::GroupPtr& G) {
  return make(G->spec().str(), G->field(), G->spec().n, G->generators());
}

GroupHandle FiniteGroup::from_coxeter(const weyl::CoxPtr& W) {
  auto F3 = fields::PrimePowerField::get(3, 1);
  const std::uint32_t n = W->family() == weyl::CoxFamily::A ? W->rank() + 1 : W->rank();
  std::vector<std::pair<std::string, Mat>> gens;
  for (std::uint32_t s = 1; s <= W->rank(); ++s) {
    auto win = W->generator(s).window();
    Mat m(F3, n);
    for (std::uint32_t j = 0; j < n; ++j) {
      std::int32_t v = win[j];
      m.set(static_cast<std::uint32_t>(std::abs(v)) - 1, j,
            v > 0 ? F3->one() : -F3->one());
    }
    gens.emplace_back("s" + std::to_string(s), m);
  }
  return make(W->name(), F3, n, std::move(gens));
}

FiniteGroup::Enum& FiniteGroup::enumeration() const {
  std::lock_guard<std::mutex> lk(mu_);
  if (enum_) return *enum_;
  auto e = std::make_unique<Enum>();
  Mat id = Mat::identity(F_, n_);
  e->elems.push_back(id);
  e->index.emplace(id.key(), 0);
  e->words.push_back({});
  for (std::uint32_t head = 0; head < e->elems.size(); ++head) {
    for (std::uint32_t gi = 0; gi < gens_.size(); ++gi) {
      Mat next = e->elems[head] * gens_[gi];
      auto key = next.key();
      if (e->index.count(key)) continue;
      if (e->elems.size() >= bound_)
        throw bound_error("group enumeration bound exceeded: " + name_);
      e->index.emplace(std::move(key), static_cast<std::uint32_t>(e->elems.size()));
      e->elems.push_back(std::move(next));
      auto w = e->words[head];
      w.push_back(gi);
      e->words.push_back(std::move(w));
    }
  }
  e->order_of.assign(e->elems.size(), 0);
  enum_ = std::move(e);
  return *enum_;
}

std::uint32_t FiniteGroup::size() const {
  return static_cast<std::uint32_t>(enumeration().elems.size());
}

const Mat& FiniteGroup::elem(std::uint32_t i) const { return enumeration().elems[i]; }

std::uint32_t FiniteGroup::index_of(const Mat& g) const {
  auto& e = enumeration();
  auto it = e.index.find(g.key());
  if (it == e.index.end()) throw input_error("element not in group " + name_);
  return it->second;
}

bool FiniteGroup::contains(const Mat& g) const {
  auto& e = enumeration();
  return e.index.count(g.key()) != 0;
}

const std::vector<std::uint32_t>& FiniteGroup::word_of(std::uint32_t i) const {
  return enumeration().words[i];
}

std::uint32_t FiniteGroup::element_order(std::uint32_t i) const {
  auto& e = enumeration();
  if (e.order_of[i]) return e.order_of[i];
  Mat id = identity();
  Mat acc = e.elems[i];
  std::uint32_t o = 1;
  while (!(acc == id)) {
    acc = acc * e.elems[i];
    ++o;
  }
  e.order_of[i] = o;
  return o;
}

std::uint64_t FiniteGroup::exponent() const {
  std::uint64_t e = 1;
  for (std::uint32_t i = 0; i < size(); ++i) e = nt::lcm_u64(e, element_order(i));
  return e;
}

const FiniteGroup::Classes& FiniteGroup::classes() const {
  {
    std::lock_guard<std::mutex> lk(mu_);
    if (classes_) return *classes_;
  }
  auto& e = enumeration();
  const std::uint32_t N = static_cast<std::uint32_t>(e.elems.size());
  auto cls = std::make_unique<Classes>();
  cls->class_of.assign(N, UINT32_MAX);
  for (std::uint32_t i = 0; i < N; ++i) {
    if (cls->class_of[i] != UINT32_MAX) continue;
    const std::uint32_t cid = static_cast<std::uint32_t>(cls->rep.size());
    cls->rep.push_back(i);
    // conjugation orbit BFS
    std::vector<std::uint32_t> queue{i};
    cls->class_of[i] = cid;
    std::uint32_t count = 0;
    while (!queue.empty()) {
      std::uint32_t x = queue.back();
      queue.pop_back();
      ++count;
      for (const auto& g : gens_) {
        Mat y = g * e.elems[x] * g.inverse();
        std::uint32_t yi = e.index.at(y.key());
        if (cls->class_of[yi] == UINT32_MAX) {
          cls->class_of[yi] = cid;
          queue.push_back(yi);
        }
      }
    }
    cls->size.push_back(count);
  }
  cls->inverse_class.resize(cls->rep.size());
  for (std::uint32_t c = 0; c < cls->rep.size(); ++c) {
    Mat inv = e.elems[cls->rep[c]].inverse();
    cls->inverse_class[c] = cls->class_of[e.index.at(inv.key())];
  }
  std::lock_guard<std::mutex> lk(mu_);
  if (!classes_) classes_ = std::move(cls);
  return *classes_;
}

std::uint32_t FiniteGroup::class_of_mat(const Mat& g) const {
  return classes().class_of[index_of(g)];
}

CosetDecomposition left_cosets(const FiniteGroup& G, const FiniteGroup& H) {
  CosetDecomposition d;
  d.coset_of.assign(G.size(), UINT32_MAX);
  for (std::uint32_t i = 0; i < G.size(); ++i) {
    if (d.coset_of[i] != UINT32_MAX) continue;
    std::uint32_t cid = d.count();
    d.reps.push_back(i);
    for (std::uint32_t h = 0; h < H.size(); ++h) {
      Mat gh = G.elem(i) * H.elem(h);
      d.coset_of[G.index_of(gh)] = cid;
    }
  }
  return d;
}

std::vector<std::uint32_t> double_coset_reps(const FiniteGroup& G, const FiniteGroup& H,
                                             const FiniteGroup& K) {
  std::vector<bool> seen(G.size(), false);
  std::vector<std::uint32_t> reps;
  for (std::uint32_t i = 0; i < G.size(); ++i) {
    if (seen[i]) continue;
    reps.push_back(i);
    for (std::uint32_t h = 0; h < H.size(); ++h) {
      Mat hg = H.elem(h) * G.elem(i);
      for (std::uint32_t k = 0; k < K.size(); ++k)
        seen[G.index_of(hg * K.elem(k))] = true;
    }
  }
  return reps;
}

GroupHandle standard_subgroup(const chevalley::GroupPtr& G, StdSubgroup which) {
  std::vector<std::pair<std::string, Mat>> gens;
  for (const auto& [name, g] : G->generators()) {
    const char c = name[0];
    if (which == StdSubgroup::U && c == 'u') gens.emplace_back(name, g);
    if (which == StdSubgroup::T && c == 't') gens.emplace_back(name, g);
    if (which == StdSubgroup::B && (c == 'u' || c == 't')) gens.emplace_back(name, g);
  }
  const char* tag = which == StdSubgroup::B ? "B" : which == StdSubgroup::T ? "T" : "U";
  return FiniteGroup::make(std::string(tag) + "[" + G->spec().str() + "]", G->field(),
                           G->spec().n, std::move(gens));
}

GroupHandle standard_parabolic(const chevalley::GroupPtr& G,
                               const std::vector<std::uint32_t>& J) {
  std::vector<std::pair<std::string, Mat>> gens;
  for (const auto& [name, g] : G->generators()) {
    const char c = name[0];
    if (c == 'u' || c == 't') gens.emplace_back(name, g);
  }
  std::string js;
  for (auto j : J) {
    gens.emplace_back("n" + std::to_string(j),
                      G->weyl_representative(G->weyl_group()->generator(j)));
    js += std::to_string(j);
  }
  return FiniteGroup::make("P{" + js + "}[" + G->spec().str() + "]", G->field(), G->spec().n,
                           std::move(gens));
}

GroupHandle conjugate_intersection(const FiniteGroup& G, const FiniteGroup& H, const Mat& s) {
  std::vector<std::pair<std::string, Mat>> gens;
  Mat sinv = s.inverse();
  for (std::uint32_t h = 0; h < H.size(); ++h) {
    Mat x = s * H.elem(h) * sinv; // x in sHs^{-1}
    if (H.contains(x) && !(x == G.identity()))
      gens.emplace_back("c" + std::to_string(gens.size()), x);
  }
  return FiniteGroup::make(H.name() + "^s&" + H.name(), H.field(), H.mat_size(),
                           std::move(gens));
}

} // namespace limitrep::grp
