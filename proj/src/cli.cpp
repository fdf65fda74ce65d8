#include "limitrep/cli.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <fstream>
#include <sstream>

#include "limitrep/borelreps.hpp"
#include "limitrep/certify.hpp"
#include "limitrep/towers.hpp"

namespace limitrep::cli {

using chevalley::GroupSpec;
using principal::TorusCharacter;

namespace {

std::vector<std::uint32_t> parse_list(const std::string& s) {
  std::vector<std::uint32_t> out;
  std::stringstream ss(s);
  std::string tok;
  while (std::getline(ss, tok, ',')) {
    if (tok.empty()) continue;
    out.push_back(static_cast<std::uint32_t>(std::stoul(tok)));
  }
  return out;
}

std::vector<std::uint64_t> parse_list64(const std::string& s) {
  std::vector<std::uint64_t> out;
  std::stringstream ss(s);
  std::string tok;
  while (std::getline(ss, tok, ',')) {
    if (tok.empty()) continue;
    out.push_back(std::stoull(tok));
  }
  return out;
}

// "s2s1s3" -> generator word
std::vector<std::uint32_t> parse_word(const std::string& s) {
  std::vector<std::uint32_t> word;
  size_t i = 0;
  while (i < s.size()) {
    if (s[i] == ' ' || s[i] == ',') {
      ++i;
      continue;
    }
    if (s[i] != 's') throw input_error("cannot parse word '" + s + "'");
    size_t j = i + 1;
    while (j < s.size() && std::isdigit(static_cast<unsigned char>(s[j]))) ++j;
    if (j == i + 1) throw input_error("cannot parse word '" + s + "'");
    word.push_back(static_cast<std::uint32_t>(std::stoul(s.substr(i + 1, j - i - 1))));
    i = j;
  }
  return word;
}

void emit(std::ostream& out, const std::string& format, const std::string& json) {
  if (format != "table") {
    out << json << "\n";
    return;
  }
  // key/value table; nested structures stay compact on one line
  auto j = nlohmann::json::parse(json);
  size_t width = 0;
  for (auto it = j.begin(); it != j.end(); ++it) width = std::max(width, it.key().size());
  for (auto it = j.begin(); it != j.end(); ++it) {
    out << it.key() << std::string(width - it.key().size() + 2, ' ');
    if (it.value().is_string())
      out << it.value().get<std::string>() << "\n";
    else
      out << it.value().dump() << "\n";
  }
}

struct Common {
  std::string spec = "SL(2,3)";
  std::uint32_t level = 1;
  std::string field = "Q";
  std::string format = "json";
  std::uint64_t seed = 0;
  std::uint64_t bound = 0;
};

void add_common(CLI::App* cmd, Common& c, bool with_spec = true) {
  if (with_spec) cmd->add_option("--spec", c.spec, "group spec, e.g. SL(2,3)");
  cmd->add_option("--level", c.level, "field level a (uses F_{q^a})");
  cmd->add_option("--field", c.field, "coefficient field: Q, Q(z_n), F_ell, F_ell^m");
  cmd->add_option("--format", c.format, "output format: json or table");
  cmd->add_option("--seed", c.seed, "seed (all computations are deterministic)");
  cmd->add_option("--bound", c.bound, "enumeration bound override");
}

GroupSpec spec_of(const Common& c) {
  return GroupSpec::parse(c.spec).at_level(c.level);
}

void apply_bound(const Common& c) {
  if (c.bound) bounds::set_enumeration(c.bound);
}

} // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"exact workbench for induced modules of finite groups of Lie type"};
  app.require_subcommand(1);

  // ---- kl ----
  auto klc = app.add_subcommand("kl", "Kazhdan-Lusztig polynomial of a pair");
  std::string kl_type = "A2", kl_pair = "s1, s1s2s1";
  std::string kl_format = "json";
  klc->add_option("--type", kl_type, "Coxeter type, e.g. A3");
  klc->add_option("--pair", kl_pair, "pair of words \"y, w\" in the generators");
  klc->add_option("--format", kl_format, "json or table");

  // ---- cells ----
  auto cellc = app.add_subcommand("cells", "cell partition of a finite Coxeter group");
  std::string cell_type = "A2", cell_kind = "left", cell_format = "json";
  cellc->add_option("--type", cell_type, "Coxeter type");
  cellc->add_option("--kind", cell_kind, "left, right, or two_sided");
  cellc->add_option("--format", cell_format, "json or table");

  // ---- bruhat ----
  auto brc = app.add_subcommand("bruhat", "Bruhat normal form of a matrix");
  Common br;
  add_common(brc, br);
  std::string br_elem;
  brc->add_option("--elem", br_elem, "matrix as JSON rows of coefficient vectors")->required();

  // ---- induce ----
  auto indc = app.add_subcommand("induce", "induced module from a standard subgroup");
  Common ind;
  add_common(indc, ind);
  std::string ind_sub = "B", ind_theta = "", ind_components = "";
  indc->add_option("--sub", ind_sub, "subgroup: B, T, or U");
  indc->add_option("--theta", ind_theta, "torus character exponents, e.g. \"1\"");
  indc->add_option("--components", ind_components, "character components for U");

  // ---- steinberg ----
  auto stc = app.add_subcommand("steinberg", "Steinberg module report at a level");
  Common st;
  add_common(stc, st);

  // ---- mtheta ----
  auto mtc = app.add_subcommand("mtheta", "principal series report");
  Common mt;
  add_common(mtc, mt);
  std::string mt_theta = "";
  mtc->add_option("--theta", mt_theta, "torus character exponents");

  // ---- ej ----
  auto ejc = app.add_subcommand("ej", "E_J distinguishing conditions");
  Common ej;
  add_common(ejc, ej);
  std::string ej_J = "";
  ejc->add_option("--J", ej_J, "subset of simple reflections, e.g. \"1,2\"");

  // ---- borel ----
  auto boc = app.add_subcommand("borel", "classification of Borel irreducibles");
  Common bo;
  add_common(boc, bo);
  bool bo_csv = false;
  boc->add_flag("--orbits-csv", bo_csv, "emit the torus orbit data as CSV");

  // ---- ggr ----
  auto ggc = app.add_subcommand("ggr", "Gelfand-Graev module report");
  Common gg;
  add_common(ggc, gg);
  std::string gg_components = "1";
  ggc->add_option("--components", gg_components,
                  "nondegenerate character components (field element indices)");

  // ---- tower ----
  auto twc = app.add_subcommand("tower", "Steinberg level tower certificate");
  Common tw;
  add_common(twc, tw);
  std::string tw_levels = "1,2";
  twc->add_option("--levels", tw_levels, "divisibility window, e.g. 1,2,4");

  // ---- certify ----
  auto cfc = app.add_subcommand("certify", "run certification criteria");
  bool cf_all = false, cf_desk = false;
  int cf_id = 0;
  cfc->add_flag("--all", cf_all, "run every criterion");
  cfc->add_flag("--desk", cf_desk, "desk-scale profile (the default and only profile)");
  cfc->add_option("--criterion", cf_id, "run a single criterion by number");

  // config file: flat key=value lines mirroring the long options
  std::string config_path;
  app.add_option("--config", config_path, "flat key=value configuration file");
  std::vector<std::string> argv = args;
  // expand --config into options before parsing
  for (size_t i = 0; i < argv.size(); ++i) {
    if (argv[i] == "--config" && i + 1 < argv.size()) {
      std::ifstream in(argv[i + 1]);
      if (!in) {
        err << "cannot open config file " << argv[i + 1] << "\n";
        return 2;
      }
      std::vector<std::string> extra;
      std::string line;
      while (std::getline(in, line)) {
        if (line.empty() || line[0] == '#') continue;
        auto eq = line.find('=');
        if (eq == std::string::npos) {
          err << "bad config line: " << line << "\n";
          return 2;
        }
        extra.push_back("--" + line.substr(0, eq));
        extra.push_back(line.substr(eq + 1));
      }
      argv.erase(argv.begin() + static_cast<long>(i), argv.begin() + static_cast<long>(i) + 2);
      argv.insert(argv.end(), extra.begin(), extra.end());
      break;
    }
  }

  try {
    std::vector<const char*> cargv;
    cargv.push_back("limitrep");
    for (const auto& a : argv) cargv.push_back(a.c_str());
    app.parse(static_cast<int>(cargv.size()), cargv.data());
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) {
      // --help
      out << app.help() << "\n";
      return 0;
    }
    err << e.what() << "\n";
    return 2;
  }

  try {
    if (klc->parsed()) {
      auto W = weyl::CoxeterSystem::parse(kl_type);
      auto comma = kl_pair.find(',');
      if (comma == std::string::npos) throw input_error("--pair needs \"y, w\"");
      auto y = W->from_word(parse_word(kl_pair.substr(0, comma)));
      auto w = W->from_word(parse_word(kl_pair.substr(comma + 1)));
      auto p = weyl::kl_polynomial(y, w);
      emit(out, kl_format, weyl::klpoly_json(W, y, w, p));
      return 0;
    }
    if (cellc->parsed()) {
      auto W = weyl::CoxeterSystem::parse(cell_type);
      weyl::CellKind kind = cell_kind == "left"      ? weyl::CellKind::Left
                            : cell_kind == "right"   ? weyl::CellKind::Right
                            : cell_kind == "two_sided" ? weyl::CellKind::TwoSided
                                                       : throw input_error("unknown kind");
      emit(out, cell_format, weyl::cell_partition(W, kind).json());
      return 0;
    }
    if (brc->parsed()) {
      apply_bound(br);
      auto spec = spec_of(br);
      auto Gc = chevalley::group(spec);
      auto g = chevalley::mat_from_json(spec.field(), br_elem);
      auto nf = Gc->bruhat_decompose(g);
      std::ostringstream os;
      os << "{\"schema\":1,\"w\":\"" << nf.w.str() << "\",\"u\":" << nf.u.json()
         << ",\"t\":" << nf.t.json() << ",\"uprime\":" << nf.uprime.json() << "}";
      emit(out, br.format, os.str());
      return 0;
    }
    if (indc->parsed()) {
      apply_bound(ind);
      auto spec = spec_of(ind);
      auto Gc = chevalley::group(spec);
      auto G = principal::level_group(spec);
      CoeffField F = CoeffField::parse(ind.field);
      grp::GroupHandle H;
      modrep::Module M;
      if (ind_sub == "B" || ind_sub == "T") {
        H = grp::standard_subgroup(
            Gc, ind_sub == "B" ? grp::StdSubgroup::B : grp::StdSubgroup::T);
        auto exps = ind_theta.empty() ? std::vector<std::uint64_t>{} : parse_list64(ind_theta);
        TorusCharacter theta =
            exps.empty() ? TorusCharacter::trivial(spec, F)
                         : TorusCharacter::from_exponents(spec, exps, F);
        M = modrep::one_dim_module(
            H, F, [theta](const chevalley::Mat& b) { return theta.eval_borel(b); }, "k_theta");
      } else if (ind_sub == "U") {
        H = grp::standard_subgroup(Gc, grp::StdSubgroup::U);
        borelreps::UCharacter sigma;
        sigma.spec = spec;
        sigma.F = F;
        auto comps = ind_components.empty() ? std::vector<std::uint64_t>{}
                                            : parse_list64(ind_components);
        comps.resize(spec.n - 1, 0);
        for (auto c : comps) sigma.components.push_back(spec.field()->element_by_index(c));
        M = modrep::one_dim_module(
            H, F, [sigma](const chevalley::Mat& u) { return sigma.eval(u); }, "sigma");
      } else {
        throw input_error("unknown subgroup '" + ind_sub + "'");
      }
      auto I = modrep::induce(G, H, M, modrep::Realization::Tensor);
      std::ostringstream os;
      os << "{\"schema\":1,\"spec\":\"" << spec.str() << "\",\"sub\":\"" << ind_sub
         << "\",\"dim\":" << I.dim();
      if (F.char_zero()) {
        auto cert = modrep::is_irreducible(I);
        os << ",\"irreducible\":" << (cert.irreducible ? "true" : "false")
           << ",\"length\":" << modrep::composition_length(I);
      }
      os << "}";
      emit(out, ind.format, os.str());
      return 0;
    }
    if (stc->parsed()) {
      apply_bound(st);
      auto spec = spec_of(st);
      CoeffField F = CoeffField::parse(st.field);
      auto St = principal::steinberg(spec, F);
      auto cert = modrep::is_irreducible(St.module);
      bool crit = true;
      if (!F.char_zero())
        crit = principal::steinberg_criterion(F.characteristic(), spec.q, spec.level,
                                              spec.weyl_group());
      std::ostringstream os;
      os << "{\"schema\":1,\"spec\":\"" << spec.str() << "\",\"field\":\"" << F.str()
         << "\",\"dim\":" << St.module.dim()
         << ",\"irreducible\":" << (cert.irreducible ? "true" : "false")
         << ",\"criterion\":" << (crit ? "true" : "false") << ",\"certificate\":"
         << cert.json("steinberg_irreducible", spec.str(), std::to_string(spec.level), F.str())
         << "}";
      emit(out, st.format, os.str());
      return 0;
    }
    if (mtc->parsed()) {
      apply_bound(mt);
      auto spec = spec_of(mt);
      CoeffField F = CoeffField::parse(mt.field);
      auto exps = mt_theta.empty() ? std::vector<std::uint64_t>{} : parse_list64(mt_theta);
      TorusCharacter theta = exps.empty() ? TorusCharacter::trivial(spec, F)
                                          : TorusCharacter::from_exponents(spec, exps, F);
      auto M = principal::build_M_theta(spec, theta);
      std::ostringstream os;
      os << "{\"schema\":1,\"spec\":\"" << spec.str() << "\",\"dim\":" << M.module.dim();
      if (F.char_zero()) {
        auto rep = principal::composition_bound_check(spec, theta);
        os << ",\"bound_report\":" << rep.json();
      }
      os << "}";
      emit(out, mt.format, os.str());
      return 0;
    }
    if (ejc->parsed()) {
      apply_bound(ej);
      auto spec = spec_of(ej);
      CoeffField F = CoeffField::parse(ej.field);
      if (!F.char_zero()) throw input_error("ej needs a characteristic-zero field");
      auto Mtr = principal::build_M_theta(spec, TorusCharacter::trivial(spec, F));
      auto rep = principal::distinguish_e_j(Mtr, parse_list(ej_J));
      emit(out, ej.format, rep.json());
      return rep.conditions_hold ? 0 : 1;
    }
    if (boc->parsed()) {
      apply_bound(bo);
      auto spec = spec_of(bo);
      CoeffField F = CoeffField::parse(bo.field);
      if (bo_csv) {
        out << borelreps::orbits_csv(borelreps::u_character_orbits(spec, F));
        return 0;
      }
      auto cls = borelreps::classify_borel_irreps(spec, F);
      emit(out, bo.format, cls.json());
      bool ok = cls.all_irreducible && cls.pairwise_noniso && cls.quotient_complete;
      return ok ? 0 : 1;
    }
    if (ggc->parsed()) {
      apply_bound(gg);
      auto spec = spec_of(gg);
      CoeffField F = CoeffField::parse(gg.field);
      borelreps::UCharacter sigma;
      sigma.spec = spec;
      sigma.F = F;
      for (auto c : parse_list64(gg_components))
        sigma.components.push_back(spec.field()->element_by_index(c));
      sigma.components.resize(spec.n - 1, spec.field()->one());
      auto rep = borelreps::gelfand_graev(spec, sigma);
      emit(out, gg.format, rep.json());
      return 0;
    }
    if (twc->parsed()) {
      apply_bound(tw);
      auto base = GroupSpec::parse(tw.spec);
      CoeffField F = CoeffField::parse(tw.field);
      auto D = towers::steinberg_system(base, parse_list(tw_levels), F);
      auto cert = towers::union_irreducibility_certificate(D);
      emit(out, tw.format, cert.json());
      return cert.verdict ? 0 : 1;
    }
    if (cfc->parsed()) {
      bool all_pass = true;
      if (cf_id > 0) {
        auto r = certify::run_criterion(cf_id);
        out << "[" << (r.pass ? "PASS" : "FAIL") << "] criterion " << r.id << ": " << r.title
            << "\n"
            << r.details << "\n";
        all_pass = r.pass;
      } else {
        (void)cf_all;
        (void)cf_desk;
        for (const auto& r : certify::run_all()) {
          out << "[" << (r.pass ? "PASS" : "FAIL") << "] criterion " << r.id << ": " << r.title
              << "\n";
          if (!r.pass) {
            out << "        details: " << r.details << "\n";
            all_pass = false;
          }
        }
      }
      return all_pass ? 0 : 1;
    }
  } catch (const input_error& e) {
    err << "input error: " << e.what() << "\n";
    return 2;
  } catch (const bound_error& e) {
    err << "bound exceeded: " << e.what() << "\n";
    return 2;
  }
  err << "no subcommand\n";
  return 2;
}

} // namespace limitrep::cli
