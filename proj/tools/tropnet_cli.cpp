// Command-line surface for the tropical planar-network library: generators,
// weightings, tableau maps, cone checks, Horn feasibility, inversion,
// recombination, spectra cross-checks, and rendering.
//
// Exit codes: 0 success / member / feasible, 1 non-member / infeasible,
// 2 usage or data error.

#include <chrono>
#include <iostream>
#include <optional>
#include <string>

#include "CLI11.hpp"
#include "tropnet/collections.hpp"
#include "tropnet/io.hpp"
#include "tropnet/recombine.hpp"
#include "tropnet/spectra.hpp"

using namespace tropnet;

namespace {

struct GlobalOpts {
  bool json = false;
  std::uint64_t seed = 1;
  long long cap = 1000000;
};

class Report {
 public:
  Report(const GlobalOpts& g, std::string command)
      : json_mode_(g.json), start_(std::chrono::steady_clock::now()) {
    body_["command"] = std::move(command);
  }

  Json& body() { return body_; }

  void set_verdict(const std::string& v) { body_["verdict"] = v; }

  int finish(int exit_code, const std::string& human_summary) {
    if (json_mode_) {
      body_["exit"] = exit_code;
      std::cout << body_.dump(2) << "\n";
    } else {
      std::cout << human_summary << "\n";
      const auto ms = std::chrono::duration_cast<std::chrono::milliseconds>(
                          std::chrono::steady_clock::now() - start_)
                          .count();
      std::cout << "elapsed: " << ms << " ms\n";
    }
    return exit_code;
  }

 private:
  bool json_mode_;
  Json body_;
  std::chrono::steady_clock::time_point start_;
};

void emit(const std::string& out_path, const Json& j) {
  if (out_path.empty())
    std::cout << j.dump(2) << "\n";
  else
    write_text_file(out_path, j.dump(2) + "\n");
}

std::string tableau_pretty(const Tableau& t) {
  std::string s;
  for (int k = 0; k <= t.n; ++k) {
    s += "  ";
    for (int i = 0; i <= k; ++i) s += t.at(k, i).str() + (i < k ? " " : "");
    s += "\n";
  }
  return s;
}

Json violations_json(const ConeCheck& c) {
  Json v = Json::array();
  for (const auto& r : c.violations)
    v.push_back({{"family", r.family}, {"k", r.k}, {"i", r.i}});
  return v;
}

HornTriple triple_from_flags(const std::string& l, const std::string& m,
                             const std::string& n) {
  HornTriple t;
  t.lambda = rats_from_csv(l);
  t.mu = rats_from_csv(m);
  t.nu = rats_from_csv(n);
  if (t.mu.size() != t.lambda.size() || t.nu.size() != t.lambda.size())
    fail(Errc::InvalidArgument, "lambda, mu, nu need equal lengths");
  if (!t.sorted())
    fail(Errc::InvalidArgument, "tuples must be weakly decreasing");
  return t;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"tropical eigenvalues of weighted planar networks"};
  app.require_subcommand(1);
  app.fallthrough();  // global flags may follow the subcommand
  GlobalOpts g;
  app.add_flag("--json", g.json, "machine-readable report on stdout");
  app.add_option("--seed", g.seed, "seed for randomized subcommands");
  app.add_option("--cap", g.cap, "enumeration explosion guard");

  // ---- gen ----------------------------------------------------------------
  auto* gen = app.add_subcommand("gen", "generate canonical networks");
  gen->require_subcommand(1);
  int gen_n = 3;
  std::string gen_out;
  for (const char* which : {"gamma0", "delta0", "horn"}) {
    auto* sub = gen->add_subcommand(
        which, std::string("the ") + which + " network");
    sub->add_option("--n", gen_n, "rank")->required();
    sub->add_option("-o,--out", gen_out, "output file");
  }

  // ---- weights ------------------------------------------------------------
  auto* weights = app.add_subcommand("weights", "produce weightings");
  weights->require_subcommand(1);
  std::string w_net, w_out;
  for (const char* which : {"random", "zero"}) {
    auto* sub = weights->add_subcommand(which, which);
    sub->add_option("--net", w_net, "network file")->required();
    sub->add_option("-o,--out", w_out, "output file");
  }

  // ---- eval ---------------------------------------------------------------
  auto* eval = app.add_subcommand("eval", "evaluate the tropical functionals");
  eval->require_subcommand(1);
  std::string e_net, e_weights, e_out;
  for (const char* which : {"l", "tableau", "hive"}) {
    auto* sub = eval->add_subcommand(which, which);
    sub->add_option("--net", e_net, "network file")->required();
    sub->add_option("--weights", e_weights, "weighting file")->required();
    sub->add_option("-o,--out", e_out, "output file for the tableau");
  }

  // ---- check --------------------------------------------------------------
  auto* check = app.add_subcommand("check", "cone membership and feasibility");
  check->require_subcommand(1);
  std::string c_tableau, c_lambda, c_mu, c_nu, c_slack = "0";
  int c_ncap = 5;
  for (const char* which : {"c2", "c3", "gz"}) {
    auto* sub = check->add_subcommand(which, which);
    sub->add_option("--tableau", c_tableau, "tableau file")->required();
  }
  auto* check_horn = check->add_subcommand("horn", "Horn triple feasibility");
  check_horn->add_option("--lambda", c_lambda)->required();
  check_horn->add_option("--mu", c_mu)->required();
  check_horn->add_option("--nu", c_nu)->required();
  check_horn->add_option("--slack", c_slack, "per-inequality relaxation");
  check_horn->add_option("--ncap", c_ncap, "elimination size cap");

  // ---- invert -------------------------------------------------------------
  auto* invert = app.add_subcommand("invert", "tableau to weighting");
  invert->require_subcommand(1);
  std::string i_tableau, i_out;
  for (const char* which : {"gz", "horn"}) {
    auto* sub = invert->add_subcommand(which, which);
    sub->add_option("--tableau", i_tableau, "tableau file")->required();
    sub->add_option("-o,--out", i_out, "output weighting file");
  }

  // ---- recombine ----------------------------------------------------------
  auto* recomb = app.add_subcommand("recombine", "even/odd path recombination");
  recomb->require_subcommand(1);
  std::string r_net, r_weights;
  int r_k = 1, r_i = 1;
  for (const char* which : {"shift", "balance"}) {
    auto* sub = recomb->add_subcommand(which, which);
    sub->add_option("--net", r_net)->required();
    sub->add_option("--weights", r_weights)->required();
    sub->add_option("--k", r_k)->required();
    sub->add_option("--i", r_i)->required();
  }

  // ---- decompose ----------------------------------------------------------
  auto* decomp = app.add_subcommand(
      "decompose", "union, canonical decomposition and coloring split");
  std::string d_net, d_weights, d_variant = "first";
  int d_k = 1, d_i = 1;
  decomp->add_option("--net", d_net, "concatenated network file")->required();
  decomp->add_option("--weights", d_weights)->required();
  decomp->add_option("--k", d_k)->required();
  decomp->add_option("--i", d_i)->required();
  decomp->add_option("--variant", d_variant, "first|second|third");

  // ---- spectra ------------------------------------------------------------
  auto* spectra = app.add_subcommand("spectra", "real-symmetric cross-checks");
  spectra->require_subcommand(1);
  int s_n = 3;
  double s_scale = 1.0;
  bool s_check = false;
  std::string s_matrix, s_out;
  auto* s_sample = spectra->add_subcommand("sample", "random Horn instance");
  s_sample->add_option("--n", s_n)->required();
  s_sample->add_option("--scale", s_scale);
  s_sample->add_flag("--check", s_check, "run horn feasibility on the sample");
  auto* s_tab = spectra->add_subcommand("tableau", "principal minor tableau");
  s_tab->add_option("--matrix", s_matrix, "matrix json file")->required();
  s_tab->add_option("-o,--out", s_out);

  // ---- render -------------------------------------------------------------
  auto* rend = app.add_subcommand("render", "draw a network");
  std::string v_net, v_weights, v_out, v_format = "svg";
  int v_highlight = -1;
  rend->add_option("--net", v_net)->required();
  rend->add_option("--weights", v_weights);
  rend->add_option("--format", v_format, "svg|dot");
  rend->add_option("--highlight-k", v_highlight,
                   "stroke a maximal k-path witness");
  rend->add_option("-o,--out", v_out)->required();

  CLI11_PARSE(app, argc, argv);

  try {
    // gen
    if (gen->parsed()) {
      const std::string which = gen->get_subcommands()[0]->get_name();
      Report rep(g, "gen " + which);
      PlanarNetwork net = which == "gamma0"  ? gamma0(gen_n)
                          : which == "delta0" ? delta0(gen_n)
                                              : horn_network(gen_n);
      const Json j = network_to_json(net);
      if (!gen_out.empty()) {
        write_text_file(gen_out, j.dump(2) + "\n");
        rep.body()["file"] = gen_out;
      } else {
        rep.body()["network"] = j;
      }
      rep.set_verdict("ok");
      return rep.finish(0, which + "[" + std::to_string(gen_n) + "]: " +
                               std::to_string(net.vertices().size()) +
                               " vertices, " +
                               std::to_string(net.edges().size()) + " edges" +
                               (gen_out.empty() ? "" : " -> " + gen_out));
    }

    // weights
    if (weights->parsed()) {
      const std::string which = weights->get_subcommands()[0]->get_name();
      Report rep(g, "weights " + which);
      const PlanarNetwork net = network_from_json(read_json_file(w_net));
      const Weighting w = which == "zero" ? Weighting::zero(net)
                                          : random_weighting(net, g.seed);
      const Json j = weighting_to_json(w);
      if (!w_out.empty()) {
        write_text_file(w_out, j.dump(2) + "\n");
        rep.body()["file"] = w_out;
      } else {
        rep.body()["weighting"] = j;
      }
      rep.set_verdict("ok");
      return rep.finish(0, which + " weighting for " +
                               std::to_string(net.edges().size()) + " edges" +
                               (w_out.empty() ? "" : " -> " + w_out));
    }

    // eval
    if (eval->parsed()) {
      const std::string which = eval->get_subcommands()[0]->get_name();
      Report rep(g, "eval " + which);
      const PlanarNetwork net = network_from_json(read_json_file(e_net));
      const Weighting w = weighting_from_json(read_json_file(e_weights));
      if (!w.total_on(net))
        fail(Errc::InvalidArgument, "weighting is not total on the network");

      if (which == "l") {
        const EigenvalueVector ev = eigenvalue_vector(net, w);
        Json jl = Json::array(), jlam = Json::array();
        std::string human = "l =";
        for (const Trop& x : ev.l) {
          jl.push_back(x.str());
          human += " " + x.str();
        }
        for (const auto& lam : ev.lambda)
          jlam.push_back(lam ? Json(rat_str(*lam)) : Json(nullptr));
        rep.body()["l"] = jl;
        rep.body()["lambda"] = jlam;
        rep.set_verdict("ok");
        return rep.finish(0, human);
      }

      const Tableau t = which == "tableau" ? l_map(net, w, true)
                                           : m_map(net, w, true);
      const ConeCheck cone = which == "tableau" ? in_c2(t) : in_c3(t);
      rep.body()["tableau"] = tableau_to_json(t);
      rep.body()["violations"] = violations_json(cone);
      rep.set_verdict(cone.member ? "member" : "non-member");
      if (!e_out.empty()) write_text_file(e_out, tableau_to_json(t).dump(2) + "\n");
      const std::string cone_name = which == "tableau" ? "C2" : "C3";
      return rep.finish(cone.member ? 0 : 1,
                        tableau_pretty(t) + (cone.member ? "member of " : "NOT in ") +
                            cone_name);
    }

    // check
    if (check->parsed()) {
      const std::string which = check->get_subcommands()[0]->get_name();
      Report rep(g, "check " + which);
      if (which == "horn") {
        const HornTriple t = triple_from_flags(c_lambda, c_mu, c_nu);
        HornOptions opt;
        opt.n_cap = c_ncap;
        opt.slack = rat_parse(c_slack);
        const HornFeasibility f = horn_feasible(t, opt);
        rep.set_verdict(f.feasible ? "feasible" : "infeasible");
        if (f.witness) rep.body()["witness"] = tableau_to_json(*f.witness);
        return rep.finish(f.feasible ? 0 : 1,
                          f.feasible ? "feasible; witness hive:\n" +
                                           tableau_pretty(*f.witness)
                                     : "infeasible");
      }
      const Tableau t = tableau_from_json(read_json_file(c_tableau));
      if (which == "gz") {
        const bool ok = in_gz(boundary_horizontal(t));
        rep.set_verdict(ok ? "member" : "non-member");
        return rep.finish(ok ? 0 : 1,
                          ok ? "interlacing holds" : "interlacing fails");
      }
      const ConeCheck cone = which == "c2" ? in_c2(t) : in_c3(t);
      rep.body()["violations"] = violations_json(cone);
      rep.set_verdict(cone.member ? "member" : "non-member");
      std::string human = cone.member ? "member" : "non-member";
      for (const auto& v : cone.violations)
        human += "\n  family " + std::to_string(v.family) + " rhombus at (k,i)=(" +
                 std::to_string(v.k) + "," + std::to_string(v.i) + ")";
      return rep.finish(cone.member ? 0 : 1, human);
    }

    // invert
    if (invert->parsed()) {
      const std::string which = invert->get_subcommands()[0]->get_name();
      Report rep(g, "invert " + which);
      const Tableau t = tableau_from_json(read_json_file(i_tableau));
      const Weighting w = which == "gz" ? invert_gz(t) : invert_horn(t);
      const Json j = weighting_to_json(w);
      if (!i_out.empty()) {
        write_text_file(i_out, j.dump(2) + "\n");
        rep.body()["file"] = i_out;
      } else {
        rep.body()["weighting"] = j;
      }
      rep.set_verdict("ok");
      return rep.finish(0, "weighting with " +
                               std::to_string(w.entries().size()) +
                               " entries" +
                               (i_out.empty() ? "" : " -> " + i_out));
    }

    // recombine
    if (recomb->parsed()) {
      const std::string which = recomb->get_subcommands()[0]->get_name();
      Report rep(g, "recombine " + which);
      const PlanarNetwork net = network_from_json(read_json_file(r_net));
      const Weighting w = weighting_from_json(read_json_file(r_weights));
      const PlanarNetwork up = truncate(net, r_k);
      const PlanarNetwork down = truncate(net, r_k - 1);
      const int fi = which == "shift" ? r_i - 1 : r_i + 1;
      const int gi = which == "shift" ? r_i : r_i - 1;
      auto [fv, f] = max_kpath_weight(up, w, fi);
      auto [gv, gg] = max_kpath_weight(down, w, gi);
      if (!f || !gg)
        return rep.finish(1, "no maximizers of the requested arities exist");
      auto [even, odd] = which == "shift" ? recombine_shift(net, *f, *gg, r_k)
                                          : recombine_balance(net, *f, *gg, r_k);
      rep.body()["f"] = multipath_to_json(*f);
      rep.body()["g"] = multipath_to_json(*gg);
      rep.body()["even"] = multipath_to_json(even);
      rep.body()["odd"] = multipath_to_json(odd);
      const bool conserved =
          even.weight(w) + odd.weight(w) == f->weight(w) + gg->weight(w);
      rep.set_verdict(conserved ? "conserved" : "broken");
      return rep.finish(conserved ? 0 : 1,
                        "w[even] + w[odd] = " + (even.weight(w) + odd.weight(w)).str() +
                            " = w[f] + w[g], memberships verified");
    }

    // decompose
    if (decomp->parsed()) {
      Report rep(g, "decompose");
      const PlanarNetwork net = network_from_json(read_json_file(d_net));
      const Weighting w = weighting_from_json(read_json_file(d_weights));
      SplitVariant variant = SplitVariant::FIRST;
      if (d_variant == "second") variant = SplitVariant::SECOND;
      else if (d_variant == "third") variant = SplitVariant::THIRD;
      else if (d_variant != "first")
        fail(Errc::InvalidArgument, "variant must be first|second|third");

      int ak = d_k, ai = d_i - 1, bk = d_k - 1, bi = d_i;
      if (variant == SplitVariant::SECOND) {
        ai = d_i + 1;
        bi = d_i - 1;
      } else if (variant == SplitVariant::THIRD) {
        ak = d_k + 1;
        ai = d_i;
        bi = d_i - 1;
      }
      auto [av, alpha] = max_gd_weight(net, w, ak, ai);
      auto [bv, beta] = max_gd_weight(net, w, bk, bi);
      if (!alpha || !beta)
        return rep.finish(1, "no maximizers of the requested arities exist");
      const MultipathUnion theta = make_union(net, *alpha, *beta);
      const PathDecomposition dec = canonical_decomposition(net, theta);
      auto [red, green] = split(net, theta, d_k, d_i, variant);

      Json classes;
      classes["Q00"] = dec.count(PathClass::Q00);
      classes["QL0"] = dec.count(PathClass::QL0);
      classes["Q0R"] = dec.count(PathClass::Q0R);
      classes["QLR"] = dec.count(PathClass::QLR);
      classes["QLL"] = dec.count(PathClass::QLL);
      classes["QRR"] = dec.count(PathClass::QRR);
      classes["Qcl"] = dec.count(PathClass::QCL);
      rep.body()["type"] = {theta.type_sources, theta.type_sinks};
      rep.body()["classes"] = classes;
      rep.body()["red"] = gd_path_to_json(red);
      rep.body()["green"] = gd_path_to_json(green);
      const bool conserved = red.weight(w) + green.weight(w) ==
                             alpha->weight(w) + beta->weight(w);
      rep.set_verdict(conserved ? "conserved" : "broken");
      return rep.finish(conserved ? 0 : 1,
                        "theta type [" + std::to_string(theta.type_sources) +
                            "," + std::to_string(theta.type_sinks) + "], " +
                            std::to_string(dec.paths.size()) +
                            " classes; split weight identity holds");
    }

    // spectra
    if (spectra->parsed()) {
      const std::string which = spectra->get_subcommands()[0]->get_name();
      Report rep(g, "spectra " + which);
      if (which == "sample") {
        const HornSample s = sample_horn_instance(s_n, g.seed, s_scale);
        rep.body()["A"] = matrix_to_json(s.A);
        rep.body()["B"] = matrix_to_json(s.B);
        rep.body()["C"] = matrix_to_json(s.C);
        Json jt;
        auto rats = [](const std::vector<Rat>& v) {
          Json out = Json::array();
          for (const Rat& x : v) out.push_back(rat_str(x));
          return out;
        };
        jt["lambda"] = rats(s.triple.lambda);
        jt["mu"] = rats(s.triple.mu);
        jt["nu"] = rats(s.triple.nu);
        rep.body()["triple"] = jt;
        std::string human = "sampled spectra of A, B, C = A + B (n = " +
                            std::to_string(s_n) + ")";
        int code = 0;
        if (s_check) {
          HornOptions opt;
          opt.slack = Rat(1, 10000);
          const HornTriple fixed = rationalize_with_trace_repair(s.triple);
          const bool ok = horn_feasible(fixed, opt).feasible;
          rep.set_verdict(ok ? "feasible" : "infeasible");
          human += ok ? "; rationalized triple is feasible"
                      : "; rationalized triple is INFEASIBLE";
          code = ok ? 0 : 1;
        } else {
          rep.set_verdict("ok");
        }
        return rep.finish(code, human);
      }
      const SymmetricMatrix m = matrix_from_json(read_json_file(s_matrix));
      const Tableau t = principal_tableau(m);
      rep.body()["tableau"] = tableau_to_json(t);
      const bool member = in_c2(t, Rat(1, 1000000000)).member;
      rep.set_verdict(member ? "member" : "non-member");
      if (!s_out.empty()) write_text_file(s_out, tableau_to_json(t).dump(2) + "\n");
      return rep.finish(member ? 0 : 1, tableau_pretty(t));
    }

    // render
    if (rend->parsed()) {
      Report rep(g, "render");
      const PlanarNetwork net = network_from_json(read_json_file(v_net));
      std::optional<Weighting> w;
      if (!v_weights.empty())
        w = weighting_from_json(read_json_file(v_weights));
      std::optional<Multipath> highlight;
      if (v_highlight >= 0) {
        if (!w) fail(Errc::InvalidArgument, "--highlight-k needs --weights");
        auto [value, witness] = max_kpath_weight(net, *w, v_highlight);
        if (witness) highlight = *witness;
      }
      RenderFormat fmt;
      if (v_format == "svg") fmt = RenderFormat::SVG;
      else if (v_format == "dot") fmt = RenderFormat::DOT;
      else fail(Errc::InvalidArgument, "format must be svg or dot");
      const std::string text =
          render(net, w ? &*w : nullptr, highlight ? &*highlight : nullptr, fmt);
      write_text_file(v_out, text);
      rep.body()["file"] = v_out;
      rep.set_verdict("ok");
      return rep.finish(0, "wrote " + v_out);
    }
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 2;
}
