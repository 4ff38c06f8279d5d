// hlkit: expansions, enumerations and identity checks from the shell.
//
//   hlkit qprime 2,1 --basis S
//   hlkit aleph 4,4,3,2,2,2,1 2,2,1,1
//   hlkit verify warnaar --nx 1 --ny 1 --deg 0
//
// Exit status: 0 success (identity holds), 1 counterexample, 2 usage error.

#include <CLI11.hpp>

#include <cstdio>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "criteria.hpp"
#include "hlkit/alphabet.hpp"
#include "hlkit/errors.hpp"
#include "hlkit/hall_littlewood.hpp"
#include "hlkit/identities.hpp"
#include "hlkit/io.hpp"
#include "hlkit/symmetrize.hpp"
#include "hlkit/tableaux.hpp"

using namespace hlkit;

namespace {

struct Output {
  std::string text;
  Json json;
  int code = 0;
};

class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

IntVector parse_ints(const std::string& text) {
  IntVector v;
  std::string tok;
  std::stringstream in(text);
  while (std::getline(in, tok, ',')) {
    std::size_t used = 0;
    try {
      v.push_back(std::stoi(tok, &used));
    } catch (const std::exception&) {
      used = std::string::npos;
    }
    if (used != tok.size()) throw UsageError("bad integer '" + tok + "' in '" + text + "'");
  }
  return v;
}

Partition partition_arg(const std::string& text) {
  if (text == "0" || text == "-" || text == "[]") return {};
  return parse_partition(text);
}

Output expansion_output(const BasisExpansion& e) { return {e.to_string(), expansion_to_json(e)}; }

Output xpoly_output(const XPoly& p, const std::vector<std::string>& names = {}) {
  const std::vector<std::string> n = names.empty() ? default_names(p.nvars()) : names;
  return {p.to_string(n), xpoly_to_json(p, n)};
}

Output laurent_output(const LaurentPoly& p) { return {p.to_string(), laurent_to_json(p)}; }

Output report_output(const IdentityReport& r) {
  Output o;
  o.json = report_to_json(r);
  o.code = r.holds ? 0 : 1;
  const std::vector<std::string> names = r.names.empty() ? default_names(r.lhs.nvars()) : r.names;
  if (r.holds)
    o.text = r.lhs.to_string(names) + " = " + r.rhs.to_string(names);
  else
    o.text = o.json.dump(2);
  return o;
}

IdentityReport sides_report(const std::string& name, const std::pair<XPoly, XPoly>& sides) {
  return {name, sides.first == sides.second, sides.first, sides.second, {}, ""};
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Hall-Littlewood functions: exact expansions and identity checks"};
  app.require_subcommand(1);
  bool as_json = false;
  std::string out_path;
  app.add_flag("--json", as_json, "print JSON instead of text");
  app.add_option("--out", out_path, "also write the JSON report to this file");

  std::function<Output()> action;
  auto bind = [&](CLI::App* sub, std::function<Output()> f) { sub->callback([&action, f] { action = f; }); };

  std::string lam_s, mu_s, word_s, basis_s = "S", at_s;
  std::size_t nx = 0, ny = 0, n = 0;
  int r = 0;
  bool column_rule = false, chains = false, kernel = false;

  auto* qprime = app.add_subcommand("qprime", "Q'_λ in the chosen basis, or evaluated on an alphabet");
  qprime->add_option("lambda", lam_s, "partition, e.g. 2,1 or 1^2 2")->required();
  qprime->add_option("--basis", basis_s, "S or Qp")->capture_default_str();
  qprime->add_option("--at", at_s, "alphabet such as 1-x1-x2, X*(1-t) or t^2-X");
  qprime->add_option("--nx", nx, "number of x variables for --at");
  qprime->add_option("--ny", ny, "number of y variables for --at");
  bind(qprime, [&] {
    const Partition lam = partition_arg(lam_s);
    if (at_s.empty()) return expansion_output(convert_basis(qprime_schur(lam), parse_basis(basis_s)));
    const AlphabetContext ctx = AlphabetContext::standard(nx, ny);
    return xpoly_output(qprime_eval(lam, parse_alphabet(at_s, ctx)), ctx.var_names);
  });

  auto* aleph_cmd = app.add_subcommand("aleph", "Q'_{λ/μ} at the alphabet 1");
  aleph_cmd->add_option("lambda", lam_s)->required();
  aleph_cmd->add_option("mu", mu_s)->required();
  aleph_cmd->add_flag("--column-rule", column_rule, "compute column by column");
  bind(aleph_cmd, [&] {
    const Partition lam = partition_arg(lam_s), mu = partition_arg(mu_s);
    return laurent_output(column_rule ? aleph_column_rule(lam, mu) : aleph(lam, mu));
  });

  auto* addone = app.add_subcommand("addone", "Q'_λ(X+1) in the Q' basis");
  addone->add_option("lambda", lam_s)->required();
  bind(addone, [&] { return expansion_output(add_one(partition_arg(lam_s))); });

  auto* subone = app.add_subcommand("subone", "Q'_λ(X-1) in the Q' basis");
  subone->add_option("lambda", lam_s)->required();
  bind(subone, [&] { return expansion_output(sub_one(partition_arg(lam_s))); });

  auto* pp = app.add_subcommand("pp-expand", "Q'_λ(x_1..x_n) as a sum over plane partitions");
  pp->add_option("lambda", lam_s)->required();
  pp->add_option("n", n)->required();
  pp->add_flag("--chains", chains, "list the chains and their weights");
  bind(pp, [&] {
    const Partition lam = partition_arg(lam_s);
    Output o = xpoly_output(plane_partition_qprime(lam, n));
    if (!chains) return o;
    Json list = Json::array();
    std::string text;
    for (const auto& c : enumerate_plane_partitions(lam, static_cast<int>(n))) {
      const XPoly w = aleph_weight(c, n);
      list.push_back({{"chain", chain_to_json(c)}, {"weight", xpoly_to_json(w)}});
      text += chain_to_json(c).dump() + "  " + w.to_string(default_names(n)) + "\n";
    }
    o.text = text + "total  " + o.text;
    o.json = {{"chains", list}, {"total", o.json}};
    return o;
  });

  auto* charge_cmd = app.add_subcommand("charge", "charge of a word with partition content");
  charge_cmd->add_option("word", word_s, "letters separated by commas, e.g. 2,3,1,1,2")->required();
  bind(charge_cmd, [&] {
    const int c = charge(parse_ints(word_s));
    return Output{std::to_string(c), Json(c)};
  });

  auto* tab = app.add_subcommand("tableaux", "semistandard tableaux of a shape and content, with charges");
  tab->add_option("shape", lam_s)->required();
  tab->add_option("weight", word_s, "multiplicities of 1, 2, ...")->required();
  bind(tab, [&] {
    Output o{"", Json::array()};
    for (const Tableau& T : enumerate_ssyt(partition_arg(lam_s), parse_ints(word_s))) {
      const int c = charge_tableau(T);
      o.json.push_back({{"rows", tableau_to_json(T)}, {"charge", c}});
      o.text += tableau_to_json(T).dump() + "  charge " + std::to_string(c) + "\n";
    }
    if (!o.text.empty()) o.text.pop_back();
    return o;
  });

  auto* fc = app.add_subcommand("factor-check", "Q'_λ(t^r - X) against its factorization, X = x_1..x_n");
  fc->add_option("lambda", lam_s)->required();
  fc->add_option("n", n)->required();
  fc->add_option("r", r)->required();
  bind(fc, [&] { return report_output(sides_report("t^r - X factorization", one_minus_X_sides(partition_arg(lam_s), r, n))); });

  auto* scalar = app.add_subcommand("scalar", "(Q_λ, x^μ) by the constant-term scalar product in n variables");
  scalar->add_option("lambda", lam_s)->required();
  scalar->add_option("mu", mu_s)->required();
  scalar->add_option("-n", n)->required();
  bind(scalar, [&] {
    const Partition lam = partition_arg(lam_s), mu = partition_arg(mu_s);
    if (lam.length() > n || mu.length() > n) throw UsageError("partitions longer than n");
    return laurent_output(ct_scalar(hl_Q(lam, Alphabet::variables(n, 0, n)), XPoly::monomial(mu.padded(n))));
  });

  auto* cup_cmd = app.add_subcommand("cup", "truncation then symmetrization of x^v, or of x^v times the kernel");
  cup_cmd->add_option("v", word_s, "integer vector, e.g. 0,2 or -1,3")->required();
  cup_cmd->add_flag("--kernel", kernel, "multiply by prod (1 - t x_i/x_j)^-1 first, giving Q'_v");
  cup_cmd->add_option("--basis", basis_s, "S or Qp")->capture_default_str();
  bind(cup_cmd, [&] {
    const IntVector v = parse_ints(word_s);
    const BasisExpansion e = kernel ? cup_kernel(v) : cup(XPoly::monomial(v));
    return expansion_output(convert_basis(e, parse_basis(basis_s)));
  });

  auto* defq = app.add_subcommand("defq", "the normalized operator image of x^λ");
  defq->add_option("lambda", word_s, "dominant weight, e.g. 2,0")->required();
  bind(defq, [&] { return xpoly_output(defq_operator(parse_ints(word_s))); });

  auto* verify = app.add_subcommand("verify", "check an identity; exit 1 on a counterexample");
  verify->require_subcommand(1);
  int deg = 6;
  verify->add_option("--deg", deg, "degree cap")->envname("HLKIT_DEG")->capture_default_str();

  auto* vw = verify->add_subcommand("warnaar", "the Warnaar generating function");
  std::size_t vx = 2, vy = 2;
  vw->add_option("--nx", vx)->capture_default_str();
  vw->add_option("--ny", vy)->capture_default_str();
  vw->add_option("--deg", deg)->envname("HLKIT_DEG");
  bind(vw, [&] { return report_output(warnaar_report(vx, vy, deg)); });

  auto* vs = verify->add_subcommand("sigmaxy", "sigma_1(X + XY(1-t)) against its P expansion");
  vs->add_option("--nx", vx)->capture_default_str();
  vs->add_option("--ny", vy)->capture_default_str();
  vs->add_option("--deg", deg)->envname("HLKIT_DEG");
  bind(vs, [&] { return report_output(sigmaxy_report(vx, vy, deg)); });

  auto* vp = verify->add_subcommand("prodx", "sigma_1(-X) times a Q'-sum, with c_μ = Q_μ(y)");
  std::size_t px = 2;
  vp->add_option("-n", px, "number of x variables")->capture_default_str();
  vp->add_option("--deg", deg)->envname("HLKIT_DEG");
  bind(vp, [&] {
    const Alphabet Y = Alphabet::variables(px + 1, px, 1);
    std::map<Partition, XPoly> c;
    for (const Partition& mu : partitions_up_to(deg, 1)) c[mu] = hl_Q(mu, Y);
    IdentityReport rep = prodx_report(c, px, deg);
    if (rep.names.empty()) {
      rep.names = default_names(px);
      rep.names.push_back("y1");
    }
    return report_output(rep);
  });

  auto* vt = verify->add_subcommand("theta-scalar", "the θ pairing of Q'_λ against Q_μ");
  std::string vl = "2,1", vm = "2,1";
  std::size_t vn = 3;
  vt->add_option("--l", vl)->capture_default_str();
  vt->add_option("--m", vm)->capture_default_str();
  vt->add_option("-n", vn)->capture_default_str();
  bind(vt, [&] { return report_output(theta_scalar_report(partition_arg(vl), partition_arg(vm), vn)); });

  auto* vd = verify->add_subcommand("defq-note", "the non-dominant weight counterexample");
  bind(vd, [&] {
    const DefqNote d = defq_counterexample();
    Output o;
    o.json = {{"identity", "defq-note"},
              {"holds", d.holds()},
              {"kernel_relation_zero", d.kernel_relation_zero},
              {"intermediate_matches", d.intermediate_matches},
              {"combination_matches", d.combination_matches},
              {"image_differs", d.image_differs},
              {"image_not_proportional", d.image_not_proportional},
              {"straightening_matches", d.straightening_matches},
              {"image", xpoly_to_json(d.image)},
              {"normalized_image", xpoly_to_json(d.normalized_image)},
              {"combination", xpoly_to_json(d.combination)}};
    const auto names = default_names(d.image.nvars());
    o.text = "image of x^02: " + d.image.to_string(names) + "\nnormalized: " + d.normalized_image.to_string(names) +
             "\ncombination: " + d.combination.to_string(names) + "\n" + (d.holds() ? "all flags hold" : o.json.dump(2));
    o.code = d.holds() ? 0 : 1;
    return o;
  });

  auto* vf = verify->add_subcommand("factor", "the t^r - X factorization for one λ");
  std::string fl = "2,2,1,1";
  std::size_t fn = 2;
  int fr = 0;
  vf->add_option("--lambda", fl)->capture_default_str();
  vf->add_option("-n", fn)->capture_default_str();
  vf->add_option("-r", fr)->capture_default_str();
  bind(vf, [&] { return report_output(sides_report("t^r - X factorization", one_minus_X_sides(partition_arg(fl), fr, fn))); });

  auto* va = verify->add_subcommand("all", "the acceptance suite");
  bool small = false;
  va->add_flag("--small", small, "desk-scale bounds (degree cap at most 6)");
  va->add_option("--deg", deg)->envname("HLKIT_DEG");
  bind(va, [&] {
    const int cap = small ? std::min(deg, 6) : deg;
    Output o{"", Json::array()};
    int failed = 0;
    acceptance::run_all(cap, [&](const acceptance::Result& res) {
      if (!as_json) std::printf("%s\n", acceptance::format_line(res).c_str()), std::fflush(stdout);
      o.json.push_back({{"criterion", res.id},
                        {"title", res.title},
                        {"pass", res.outcome.pass},
                        {"detail", res.outcome.detail},
                        {"seconds", res.seconds}});
      failed += !res.outcome.pass;
    });
    o.text = std::to_string(13 - failed) + " of 13 criteria hold";
    o.code = failed ? 1 : 0;
    return o;
  });

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }
  if (!action) return 2;

  Output o;
  try {
    o = action();
  } catch (const UsageError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::out_of_range& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }

  std::cout << (as_json ? o.json.dump(2) : o.text) << "\n";
  if (!out_path.empty()) {
    std::ofstream f(out_path);
    if (!f) {
      std::cerr << "error: cannot write " << out_path << "\n";
      return 2;
    }
    f << o.json.dump(2) << "\n";
  }
  return o.code;
}
