#include "detkrs/cli.hpp"

#include <CLI11.hpp>
#include <iostream>
#include <sstream>

#include "detkrs/ideals.hpp"
#include "detkrs/krs.hpp"
#include "detkrs/ktheory.hpp"
#include "detkrs/rees.hpp"

namespace detkrs {

namespace {

struct Options {
  int m = 3;
  int n = 3;
  std::string shape;
  std::string tableau;
  std::string monomial;
  std::string a, b;
  int max_degree = -1;  // -1 = derive from the shape
  int max_p_degree = 2;
  int max_x_degree = 3;
  long long cap_enum = 1000000;
  int cap_gens = 20;
  bool machine = false;
};

void add_ambient(CLI::App* cmd, Options& opt) {
  cmd->add_option("--m", opt.m, "number of matrix rows")->capture_default_str();
  cmd->add_option("--n", opt.n, "number of matrix columns")->capture_default_str();
}

int print_report(const Report& rep, std::ostream& out) {
  for (const auto& line : rep.lines) out << line << '\n';
  out << rep.summary() << '\n';
  return rep.passed() ? 0 : 1;
}

std::string csv(const std::vector<int>& v) {
  std::ostringstream os;
  for (size_t i = 0; i < v.size(); ++i) {
    if (i > 0) os << ',';
    os << v[i];
  }
  return os.str();
}

int auto_degree(const Options& opt, const Shape& s, int extra) {
  return opt.max_degree >= 0 ? opt.max_degree : s.total() + extra;
}

int dispatch(CLI::App& app, const Options& opt, std::ostream& out) {
  if (app.got_subcommand("krs")) {
    Bitableau sigma = parse_bitableau(opt.tableau);
    check_ambient(sigma, opt.m, opt.n);
    Shape s = parse_shape(opt.shape);
    KrsArray arr = krs_array(sigma, s);
    if (opt.machine) {
      std::vector<int> ell, r, rho;
      for (const auto& c : arr.columns()) {
        ell.push_back(c.ell);
        r.push_back(c.r);
        rho.push_back(c.rho);
      }
      out << "ell=" << csv(ell) << '\n' << "r=" << csv(r) << '\n'
          << "rho=" << csv(rho) << '\n'
          << "monomial=" << arr.monomial().to_string() << '\n';
    } else {
      out << arr.to_string();
      out << "KRS = " << arr.monomial().to_string() << '\n';
    }
    return 0;
  }
  if (app.got_subcommand("krs-inverse")) {
    Monomial w = parse_monomial(opt.monomial);
    if (w.max_row() > opt.m || w.max_col() > opt.n)
      fail(Errc::IndexOutOfRange, "monomial exceeds the ambient matrix");
    Bitableau sigma = krs_insert(w);
    out << (opt.machine ? "tableau=" : "") << sigma.to_string() << '\n';
    return 0;
  }
  if (app.got_subcommand("witness")) {
    Bitableau sigma = parse_bitableau(opt.tableau);
    check_ambient(sigma, opt.m, opt.n);
    Shape s = parse_shape(opt.shape);
    Bitableau w = extract_witness(sigma, s, opt.m, opt.n);
    Monomial d = diag(w);
    Monomial full = krs(sigma);
    bool div = d.divides(full);
    if (opt.machine) {
      out << "witness=" << w.to_string() << '\n' << "diag=" << d.to_string() << '\n'
          << "krs=" << full.to_string() << '\n' << "divides=" << (div ? 1 : 0) << '\n';
    } else {
      out << "witness  " << w.to_string() << '\n';
      out << "diag     " << d.to_string() << '\n';
      out << "krs      " << full.to_string() << '\n';
      out << "divides  " << (div ? "yes" : "NO") << '\n';
    }
    return div ? 0 : 1;
  }
  if (app.got_subcommand("straighten")) {
    Bitableau delta = parse_bitableau(opt.tableau);
    check_ambient(delta, opt.m, opt.n);
    auto rep = straighten(delta, opt.m, opt.n);
    for (const auto& [sigma, c] : rep) {
      std::string coeff = c.get_str();
      if (!coeff.empty() && coeff[0] != '-') coeff = "+" + coeff;
      out << coeff << ' ' << sigma.to_string() << '\n';
    }
    return 0;
  }
  if (app.got_subcommand("grobner-check")) {
    Shape s = parse_shape(opt.shape);
    return print_report(grobner_check(opt.m, opt.n, s, auto_degree(opt, s, 2)), out);
  }
  if (app.got_subcommand("standard-basis-check")) {
    Shape s = parse_shape(opt.shape);
    return print_report(
        standard_basis_check(opt.m, opt.n, s, auto_degree(opt, s, 2)), out);
  }
  if (app.got_subcommand("primary-check")) {
    Shape s = parse_shape(opt.shape);
    return print_report(primary_check(opt.m, opt.n, s, auto_degree(opt, s, 2)), out);
  }
  if (app.got_subcommand("betti-check")) {
    Shape s = parse_shape(opt.shape);
    MonomialIdeal ini = diagonal_ideal(opt.m, opt.n, s);
    return print_report(
        betti_linear_check(ini, opt.m, opt.n, auto_degree(opt, s, 4)), out);
  }
  if (app.got_subcommand("hibi")) {
    for (const auto& g : degree_one_relations(opt.m, opt.n)) out << g.to_string() << '\n';
    for (const auto& g : hibi_relations(opt.m, opt.n)) out << g.to_string() << '\n';
    return 0;
  }
  if (app.got_subcommand("kernel-check")) {
    return print_report(
        kernel_check(opt.m, opt.n, opt.max_p_degree, opt.max_x_degree), out);
  }
  if (app.got_subcommand("lift-check")) {
    if (opt.a.empty() != opt.b.empty())
      fail(Errc::ParseError, "--a and --b must be given together");
    if (!opt.a.empty()) {
      LatticeElement a = parse_lattice_element(opt.a);
      LatticeElement b = parse_lattice_element(opt.b);
      return print_report(lift_check_pair(a, b, opt.m, opt.n), out);
    }
    return print_report(lift_check(opt.m, opt.n), out);
  }
  if (app.got_subcommand("kpoly")) {
    Shape s = parse_shape(opt.shape);
    MonomialIdeal ini = diagonal_ideal(opt.m, opt.n, s);
    LaurentPoly kq = k_polynomial_quotient(ini, opt.m, opt.n, opt.cap_gens);
    LaurentPoly ki = k_polynomial_ideal(ini, opt.m, opt.n, opt.cap_gens);
    out << "lcm=" << ini.lcm_of_generators().to_string() << '\n';
    out << "K(R/J)=" << kq.to_string() << '\n';
    out << "K(J)=" << ki.to_string() << '\n';
    return 0;
  }
  if (app.got_subcommand("schur-expand")) {
    Shape s = parse_shape(opt.shape);
    MonomialIdeal ini = diagonal_ideal(opt.m, opt.n, s);
    LaurentPoly ki = k_polynomial_ideal(ini, opt.m, opt.n, opt.cap_gens);
    SchurExpansion exp = schur_expand(ki);
    out << exp.to_string();
    return 0;
  }
  if (app.got_subcommand("hilbert-check")) {
    Shape s = parse_shape(opt.shape);
    MonomialIdeal ini = diagonal_ideal(opt.m, opt.n, s);
    return print_report(
        hilbert_check(ini, opt.m, opt.n, auto_degree(opt, s, 2), opt.cap_gens), out);
  }
  return 2;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out,
            std::ostream& err) {
  CLI::App app{"Exact computations with bitableaux, products of row-initial "
               "minor ideals, their initial ideals and K-polynomials"};
  app.require_subcommand(1);
  Options opt;

  auto* krs_cmd = app.add_subcommand(
      "krs", "deletion record and monomial of a standard bitableau");
  add_ambient(krs_cmd, opt);
  krs_cmd->add_option("--tableau", opt.tableau,
                      "standard bitableau, e.g. \"[1 2|1 2]*[1|1]\"")->required();
  krs_cmd->add_option("--shape", opt.shape,
                      "shape of the tracked superstandard region (default: none)");
  krs_cmd->add_flag("--machine", opt.machine, "key=value output");

  auto* inv_cmd = app.add_subcommand(
      "krs-inverse", "standard bitableau mapping to the given monomial");
  add_ambient(inv_cmd, opt);
  inv_cmd->add_option("--monomial", opt.monomial, "e.g. \"x[1,1]*x[2,2]\"")->required();
  inv_cmd->add_flag("--machine", opt.machine, "key=value output");

  auto* wit_cmd = app.add_subcommand(
      "witness",
      "row-superstandard bitableau whose diagonal divides the deletion monomial");
  add_ambient(wit_cmd, opt);
  wit_cmd->add_option("--tableau", opt.tableau, "standard bitableau")->required();
  wit_cmd->add_option("--shape", opt.shape, "shape of the contained region")->required();
  wit_cmd->add_flag("--machine", opt.machine, "key=value output");

  auto* str_cmd = app.add_subcommand(
      "straighten", "representation over standard bitableaux of the same content");
  add_ambient(str_cmd, opt);
  str_cmd->add_option("--tableau", opt.tableau, "product of minors")->required();

  auto* gro_cmd = app.add_subcommand(
      "grobner-check",
      "per-bidegree equality of the initial space of the product ideal with the "
      "diagonal monomial ideal, plus product/intersection identities");
  add_ambient(gro_cmd, opt);
  gro_cmd->add_option("--shape", opt.shape, "parts of the product ideal")->required();
  gro_cmd->add_option("--max-degree", opt.max_degree,
                      "total-degree bound (default: shape total + 2)");

  auto* sb_cmd = app.add_subcommand(
      "standard-basis-check",
      "membership of standard bitableaux in the product ideal vs containment of a "
      "superstandard subtableau");
  add_ambient(sb_cmd, opt);
  sb_cmd->add_option("--shape", opt.shape, "parts of the product ideal")->required();
  sb_cmd->add_option("--max-degree", opt.max_degree,
                     "total-degree bound (default: shape total + 2)");
  sb_cmd->add_option("--cap-enum", opt.cap_enum, "enumeration cap")->capture_default_str();

  auto* pri_cmd = app.add_subcommand(
      "primary-check",
      "graded equality of the product ideal with the intersection of rectangular "
      "powers, plus irredundancy witnesses");
  add_ambient(pri_cmd, opt);
  pri_cmd->add_option("--shape", opt.shape, "parts of the product ideal")->required();
  pri_cmd->add_option("--max-degree", opt.max_degree,
                      "total-degree bound (default: shape total + 2)");
  pri_cmd->add_option("--cap-enum", opt.cap_enum, "enumeration cap")->capture_default_str();

  auto* bet_cmd = app.add_subcommand(
      "betti-check",
      "multigraded Betti numbers of the diagonal initial ideal, checked against "
      "the linear strand");
  add_ambient(bet_cmd, opt);
  bet_cmd->add_option("--shape", opt.shape, "parts of the product ideal")->required();
  bet_cmd->add_option("--max-degree", opt.max_degree,
                      "bound on |b| (default: shape total + 4)");

  auto* hibi_cmd = app.add_subcommand(
      "hibi",
      "binomial presentation of the multi-Rees algebra of the row-initial ideals: "
      "degree-one relations and Hibi relations");
  add_ambient(hibi_cmd, opt);

  auto* ker_cmd = app.add_subcommand(
      "kernel-check",
      "kernel membership and semigroup counting certificate for the presentation");
  add_ambient(ker_cmd, opt);
  ker_cmd->add_option("--max-p-degree", opt.max_p_degree, "p-degree bound")
      ->capture_default_str();
  ker_cmd->add_option("--max-x-degree", opt.max_x_degree, "x-degree bound")
      ->capture_default_str();

  auto* lift_cmd = app.add_subcommand(
      "lift-check",
      "lifts the Hibi relations through straightening: meet-join summand present, "
      "all other summands with smaller leading monomial");
  add_ambient(lift_cmd, opt);
  lift_cmd->add_option("--a", opt.a, "first column list, e.g. \"2,3\"");
  lift_cmd->add_option("--b", opt.b, "second column list, e.g. \"1,4\"");

  auto* kp_cmd = app.add_subcommand(
      "kpoly", "K-polynomials of the diagonal initial ideal via the Taylor complex");
  add_ambient(kp_cmd, opt);
  kp_cmd->add_option("--shape", opt.shape, "parts of the product ideal")->required();
  kp_cmd->add_option("--cap-gens", opt.cap_gens, "generator cap")->capture_default_str();

  auto* se_cmd = app.add_subcommand(
      "schur-expand", "Schur expansion of the ideal K-polynomial");
  add_ambient(se_cmd, opt);
  se_cmd->add_option("--shape", opt.shape, "parts of the product ideal")->required();
  se_cmd->add_option("--cap-gens", opt.cap_gens, "generator cap")->capture_default_str();

  auto* hil_cmd = app.add_subcommand(
      "hilbert-check",
      "bidegree-wise consistency of the K-polynomial with monomial counts");
  add_ambient(hil_cmd, opt);
  hil_cmd->add_option("--shape", opt.shape, "parts of the product ideal")->required();
  hil_cmd->add_option("--max-degree", opt.max_degree,
                      "total-degree bound (default: shape total + 2)");
  hil_cmd->add_option("--cap-gens", opt.cap_gens, "generator cap")->capture_default_str();

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == static_cast<int>(CLI::ExitCodes::Success)) {
      app.exit(e, out, err);
      return 0;
    }
    err << "usage error: " << e.what() << '\n';
    return 2;
  }

  try {
    return dispatch(app, opt, out);
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return 2;
  } catch (const std::logic_error& e) {
    err << "invariant violated: " << e.what() << '\n';
    return 1;
  }
}

}  // namespace detkrs
