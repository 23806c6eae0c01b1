#include "qmason/cli.hpp"

#include <cstdlib>
#include <ostream>

#include <CLI11.hpp>

#include "qmason/parse.hpp"
#include "qmason/report.hpp"

namespace qmason {

namespace {

// Signals a usage-level problem (exit 2) with a ready diagnostic.
struct usage_error {
  std::string message;
};

GaussianRational parse_q_or_fail(const std::string& text) {
  if (text.empty()) throw usage_error{"--q is required for this command"};
  const auto q = GaussianRational::parse(text);
  if (!q) throw usage_error{"--q: cannot parse '" + text + "' as an exact value"};
  return *q;
}

PolyValue parse_expr_or_fail(const std::string& text, const QContext& ctx) {
  ParseResult res = parse_poly(text, ctx);
  if (const auto* err = std::get_if<ParseError>(&res))
    throw usage_error{"cannot parse '" + text + "' at offset " + std::to_string(err->pos) + ": " +
                      err->message};
  return std::get<PolyValue>(std::move(res));
}

PolyArg to_poly_arg(const PolyValue& v) {
  if (const auto* f = std::get_if<FactoredPoly>(&v)) return PolyArg(*f);
  return PolyArg::with_root_extraction(std::get<DensePoly>(v));
}

void add_premises(ReportDocument& doc, const std::vector<Premise>& premises) {
  doc.premises.insert(doc.premises.end(), premises.begin(), premises.end());
}

nlohmann::json chains_json(const ChainDecomposition& d) {
  nlohmann::json arr = nlohmann::json::array();
  for (const auto& c : d.chains()) {
    nlohmann::json row;
    row["head"] = c.head.str();
    row["length"] = std::to_string(c.length);
    arr.push_back(std::move(row));
  }
  return arr;
}

struct Invocation {
  std::vector<std::string> argv_echo;
  std::string q_text;
  bool json = false;
  bool text = false;
  std::vector<std::string> exprs;
  unsigned mu = 1;
  unsigned k = 1;
  std::string a_text = "0";
  unsigned n = 1;
  unsigned m = 2;
  unsigned max_deg = 1;
  std::string coeff_range;
  unsigned threads = 1;
  std::uint64_t budget = 0;
  bool classical = false;
  std::vector<unsigned long> naturals;  // numeric positionals (qnum, qbinom)

  QContext ctx() const { return QContext(parse_q_or_fail(q_text)); }
};

std::pair<long, long> parse_coeff_range(const std::string& text) {
  const auto dots = text.find("..");
  if (dots == std::string::npos)
    throw usage_error{"--coeff expects the form lo..hi, e.g. -2..2"};
  try {
    const long lo = std::stol(text.substr(0, dots));
    const long hi = std::stol(text.substr(dots + 2));
    if (lo > hi) throw usage_error{"--coeff: empty range " + text};
    return {lo, hi};
  } catch (const std::invalid_argument&) {
    throw usage_error{"--coeff: cannot parse bounds in '" + text + "'"};
  } catch (const std::out_of_range&) {
    throw usage_error{"--coeff: bounds out of range in '" + text + "'"};
  }
}

int emit(ReportDocument& doc, const Invocation& inv, std::ostream& out,
         const std::string& text_override = "") {
  doc.argv = inv.argv_echo;
  if (inv.json)
    out << to_json(doc).dump(2) << '\n';
  else if (!text_override.empty())
    out << text_override << '\n';
  else
    out << to_text(doc);
  return 0;
}

// ---- subcommand handlers -----------------------------------------------

int cmd_qnum(const Invocation& inv, std::ostream& out) {
  const QContext ctx = inv.ctx();
  if (inv.naturals.size() != 1) throw usage_error{"qnum expects one natural argument"};
  const GaussianRational v = q_number(static_cast<unsigned>(inv.naturals[0]), ctx);
  ReportDocument doc;
  doc.command = "qnum";
  doc.q = ctx.q();
  doc.quantity("value", v.str());
  return emit(doc, inv, out, v.str());
}

int cmd_qbinom(const Invocation& inv, std::ostream& out) {
  const QContext ctx = inv.ctx();
  if (inv.naturals.size() != 2) throw usage_error{"qbinom expects two natural arguments k j"};
  const GaussianRational v = q_binomial(static_cast<unsigned>(inv.naturals[0]),
                                        static_cast<unsigned>(inv.naturals[1]), ctx);
  ReportDocument doc;
  doc.command = "qbinom";
  doc.q = ctx.q();
  doc.quantity("value", v.str());
  return emit(doc, inv, out, v.str());
}

int cmd_expand(const Invocation& inv, std::ostream& out) {
  const QContext ctx = inv.ctx();
  if (inv.exprs.size() != 1) throw usage_error{"expand expects one polynomial argument"};
  const DensePoly p = to_dense(parse_expr_or_fail(inv.exprs[0], ctx));
  ReportDocument doc;
  doc.command = "expand";
  doc.q = ctx.q();
  doc.quantity("degree", p.degree());
  doc.payload["polynomial"] = p.str();
  return emit(doc, inv, out, p.str());
}

int cmd_dq(const Invocation& inv, std::ostream& out) {
  const QContext ctx = inv.ctx();
  if (inv.exprs.size() != 1) throw usage_error{"dq expects one polynomial argument"};
  const DensePoly p = to_dense(parse_expr_or_fail(inv.exprs[0], ctx));
  const DensePoly d = jackson_iter(p, inv.k, ctx);
  ReportDocument doc;
  doc.command = "dq";
  doc.q = ctx.q();
  doc.quantity("iterations", static_cast<long>(inv.k));
  doc.quantity("degree", d.degree());
  doc.payload["polynomial"] = d.str();
  return emit(doc, inv, out, d.str());
}

int cmd_weight(const Invocation& inv, std::ostream& out) {
  const QContext ctx = inv.ctx();
  if (inv.exprs.size() != 2) throw usage_error{"weight expects a polynomial and a point"};
  const DensePoly p = to_dense(parse_expr_or_fail(inv.exprs[0], ctx));
  const auto z0 = GaussianRational::parse(inv.exprs[1]);
  if (!z0) throw usage_error{"weight: cannot parse point '" + inv.exprs[1] + "'"};
  const auto a = GaussianRational::parse(inv.a_text);
  if (!a) throw usage_error{"weight: cannot parse --a value '" + inv.a_text + "'"};
  const unsigned w = q_weight_at_value(p, *a, *z0, ctx);
  ReportDocument doc;
  doc.command = "weight";
  doc.q = ctx.q();
  doc.quantity("weight", static_cast<long>(w));
  return emit(doc, inv, out, std::to_string(w));
}

int cmd_radical(const Invocation& inv, std::ostream& out) {
  const QContext ctx = inv.ctx();
  if (inv.exprs.size() != 1) throw usage_error{"radical expects one polynomial argument"};
  if (inv.mu == 0) throw usage_error{"--mu must be positive"};
  const PolyArg arg = to_poly_arg(parse_expr_or_fail(inv.exprs[0], ctx));
  if (arg.dense.is_zero()) throw usage_error{"radical: zero polynomial"};

  ReportDocument doc;
  doc.command = "radical";
  doc.q = ctx.q();
  doc.quantity("degree", arg.dense.degree());

  if (arg.factored) {
    const ChainDecomposition d = chain_decompose(*arg.factored, ctx);
    const FactoredPoly rad = rad_q(*arg.factored, ctx);
    doc.quantity("deg_rad_q", static_cast<long>(d.rad_degree()));
    doc.payload["rad_q"] = expand(rad).str();
    doc.payload["chains"] = chains_json(d);
    if (inv.mu > 1) {
      const FactoredPoly trunc = rad_q_trunc(*arg.factored, inv.mu, ctx);
      doc.quantity("deg_rad_q_trunc", static_cast<long>(trunc.degree()));
      doc.payload["rad_q_trunc"] = expand(trunc).str();
    }
    doc.verdict("factored", true);
  } else {
    // Roots unknown: the gcd tower still yields the degrees.
    doc.quantity("deg_rad_q", static_cast<long>(rad_q_degree(arg.dense, ctx)));
    if (inv.mu > 1)
      doc.quantity("deg_rad_q_trunc",
                   static_cast<long>(rad_q_trunc_degree(arg.dense, inv.mu, ctx)));
    doc.verdict("factored", false);
  }
  return emit(doc, inv, out);
}

int cmd_qprime(const Invocation& inv, std::ostream& out) {
  const QContext ctx = inv.ctx();
  if (inv.exprs.size() < 2) throw usage_error{"qprime expects at least two polynomials"};
  std::vector<PolyArg> args;
  for (const auto& e : inv.exprs) args.push_back(to_poly_arg(parse_expr_or_fail(e, ctx)));

  ReportDocument doc;
  doc.command = "qprime";
  doc.q = ctx.q();
  bool q_prime = true;
  for (std::size_t i = 0; i < args.size() && q_prime; ++i)
    for (std::size_t j = i + 1; j < args.size() && q_prime; ++j) {
      if (args[i].dense.is_zero() || args[j].dense.is_zero())
        throw usage_error{"qprime: zero polynomial"};
      if (args[i].factored && args[j].factored) {
        const auto divisors = common_q_divisors(*args[i].factored, *args[j].factored, ctx);
        if (!divisors.empty()) {
          q_prime = false;
          doc.payload["witness"]["pair"] = {std::to_string(i + 1), std::to_string(j + 1)};
          nlohmann::json heads = nlohmann::json::array();
          for (const auto& d : divisors) heads.push_back(d.str());
          doc.payload["witness"]["divisor_heads"] = std::move(heads);
        }
      } else if (auto factor = common_q_divisor_factor(args[i].dense, args[j].dense, ctx)) {
        q_prime = false;
        doc.payload["witness"]["pair"] = {std::to_string(i + 1), std::to_string(j + 1)};
        doc.payload["witness"]["divisor_head_factor"] = factor->str();
      }
    }
  doc.verdict("relatively_q_prime", q_prime);
  emit(doc, inv, out);
  return q_prime ? 0 : 1;
}

int cmd_casorati(const Invocation& inv, std::ostream& out) {
  const QContext ctx = inv.ctx();
  if (inv.exprs.empty()) throw usage_error{"casorati expects at least one polynomial"};
  std::vector<DensePoly> polys;
  for (const auto& e : inv.exprs) polys.push_back(to_dense(parse_expr_or_fail(e, ctx)));
  const DensePoly det = casorati(polys, ctx);
  const IndependenceReport rep = independence_report(polys, ctx);

  ReportDocument doc;
  doc.command = "casorati";
  doc.q = ctx.q();
  doc.quantity("m", static_cast<long>(polys.size()));
  doc.quantity("degree", det.degree());
  doc.payload["casorati"] = det.str();
  doc.verdict("casorati_nonzero", rep.casorati_nonzero);
  doc.verdict("coefficient_rank_full", rep.coefficient_rank_full);
  doc.verdict("signals_agree", rep.agree);
  return emit(doc, inv, out);
}

int cmd_verify_mason(const Invocation& inv, std::ostream& out) {
  if (inv.exprs.size() != 3) throw usage_error{"verify-mason expects three polynomials a b c"};
  ReportDocument doc;
  doc.command = "verify-mason";
  MasonReport rep;
  if (inv.classical) {
    // Classical radical comparison; q plays no role beyond expression
    // substitution, so default it when absent.
    const QContext parse_ctx = inv.q_text.empty() ? QContext(GaussianRational(2)) : inv.ctx();
    DensePoly abc[3];
    for (int i = 0; i < 3; ++i) abc[i] = to_dense(parse_expr_or_fail(inv.exprs[i], parse_ctx));
    rep = verify_mason_classical(abc[0], abc[1], abc[2]);
    doc.quantity("rad_deg", rep.rad_deg);
  } else {
    const QContext ctx = inv.ctx();
    doc.q = ctx.q();
    PolyArg a = to_poly_arg(parse_expr_or_fail(inv.exprs[0], ctx));
    PolyArg b = to_poly_arg(parse_expr_or_fail(inv.exprs[1], ctx));
    PolyArg c = to_poly_arg(parse_expr_or_fail(inv.exprs[2], ctx));
    rep = verify_mason_q(a, b, c, ctx);
    doc.quantity("rad_q_deg", rep.rad_deg);
  }
  add_premises(doc, rep.premises);
  doc.quantity("max_deg", rep.max_deg);
  doc.verdict("applicable", rep.applicable);
  doc.verdict("inequality_holds", rep.inequality_holds);
  doc.verdict("sharp", rep.sharp);
  emit(doc, inv, out);
  return rep.applicable && rep.inequality_holds ? 0 : 1;
}

int cmd_verify_extended(const Invocation& inv, std::ostream& out) {
  const QContext ctx = inv.ctx();
  if (inv.exprs.size() < 3)
    throw usage_error{"verify-extended expects at least three polynomials f1 .. f_{m+1}"};
  std::vector<PolyArg> fs;
  for (const auto& e : inv.exprs) fs.push_back(to_poly_arg(parse_expr_or_fail(e, ctx)));
  const ExtendedReport rep = verify_mason_extended(fs, ctx);

  ReportDocument doc;
  doc.command = "verify-extended";
  doc.q = ctx.q();
  add_premises(doc, rep.premises);
  doc.quantity("m", static_cast<long>(inv.exprs.size() - 1));
  doc.quantity("lhs_max_deg", rep.lhs);
  doc.quantity("rhs_trunc", rep.rhs_trunc);
  doc.quantity("rhs_rad", rep.rhs_rad);
  doc.verdict("applicable", rep.applicable);
  doc.verdict("casorati_nonzero", rep.independence.casorati_nonzero);
  doc.verdict("inequalities_hold", rep.both_hold);
  doc.verdict("sharp", rep.sharp);
  emit(doc, inv, out);
  return rep.applicable && rep.both_hold ? 0 : 1;
}

FactoredPoly require_factored(const PolyArg& arg, const std::string& text) {
  if (!arg.factored)
    throw usage_error{"'" + text +
                      "' does not split over Q; supply it in factored form (qb/products of "
                      "linear factors). Residual: " +
                      extract_rational_roots(arg.dense).residual.str()};
  return *arg.factored;
}

int cmd_verify_fermat(const Invocation& inv, std::ostream& out) {
  const QContext ctx = inv.ctx();
  if (inv.exprs.size() < 3)
    throw usage_error{"verify-fermat expects at least three polynomials"};
  std::vector<FactoredPoly> fs;
  for (const auto& e : inv.exprs)
    fs.push_back(require_factored(to_poly_arg(parse_expr_or_fail(e, ctx)), e));

  ReportDocument doc;
  doc.command = "verify-fermat";
  doc.q = ctx.q();
  doc.quantity("n", static_cast<long>(inv.n));
  int status;
  if (fs.size() == 3) {
    const FermatInstanceReport rep = verify_fermat_instance(fs[0], fs[1], fs[2], inv.n, ctx);
    add_premises(doc, rep.premises);
    doc.quantity("n_bound", static_cast<long>(rep.n_bound));
    doc.verdict("applicable", rep.applicable);
    doc.verdict("equation_holds", rep.equation_holds);
    doc.verdict("consistent", rep.consistent);
    if (!rep.equation_holds) doc.payload["difference"] = rep.difference.str();
    status = rep.applicable && rep.consistent ? 0 : 1;
  } else {
    const MultiBoundReport rep = verify_fermat_multi_bound(fs, inv.n, ctx);
    add_premises(doc, rep.premises);
    doc.quantity("m", static_cast<long>(fs.size() - 1));
    doc.quantity("n_bound", rep.bound.str());
    doc.verdict("applicable", rep.applicable);
    doc.verdict("equation_holds", rep.equation_holds);
    doc.verdict("bound_holds", rep.bound_holds);
    doc.verdict("consistent", rep.consistent);
    status = rep.applicable && rep.consistent ? 0 : 1;
  }
  emit(doc, inv, out);
  return status;
}

int cmd_search_fermat(const Invocation& inv, std::ostream& out) {
  const QContext ctx = inv.ctx();
  SearchParams params;
  params.n = inv.n;
  params.m = inv.m;
  params.max_deg = inv.max_deg;
  params.budget = inv.budget;
  params.threads = inv.threads;
  const auto [lo, hi] = parse_coeff_range(inv.coeff_range);
  for (long v = lo; v <= hi; ++v) params.coeff_set.push_back(GaussianRational(v));

  const FermatCertificate cert = fermat_search(params, ctx);

  ReportDocument doc;
  doc.command = "search-fermat";
  doc.q = ctx.q();
  doc.quantity("n", static_cast<long>(params.n));
  doc.quantity("m", static_cast<long>(params.m));
  doc.quantity("max_deg", static_cast<long>(params.max_deg));
  doc.quantity("total_candidates", std::to_string(cert.total_candidates));
  doc.quantity("examined", std::to_string(cert.examined));
  doc.quantity("premise_passing", std::to_string(cert.premise_passing));
  doc.quantity("solutions_found", std::to_string(cert.solutions.size()));

  nlohmann::json certificate;
  certificate["n"] = std::to_string(params.n);
  certificate["m"] = std::to_string(params.m);
  certificate["max_deg"] = std::to_string(params.max_deg);
  nlohmann::json coeffs = nlohmann::json::array();
  for (const auto& c : cert.params.coeff_set) coeffs.push_back(c.str());
  certificate["coeff_set"] = std::move(coeffs);
  certificate["q"] = cert.q.str();
  certificate["budget"] = std::to_string(cert.params.budget);
  certificate["total_candidates"] = std::to_string(cert.total_candidates);
  certificate["examined"] = std::to_string(cert.examined);
  certificate["complete"] = cert.complete;
  nlohmann::json filters = nlohmann::json::object();
  for (std::size_t i = 0; i < cert.premise_names.size(); ++i)
    filters[cert.premise_names[i]] = std::to_string(cert.filtered[i]);
  certificate["filtered"] = std::move(filters);
  certificate["premise_passing"] = std::to_string(cert.premise_passing);
  certificate["outcome"] = cert.solutions.empty() ? "none-found" : "solutions-found";
  nlohmann::json solutions = nlohmann::json::array();
  for (const auto& s : cert.solutions) {
    nlohmann::json tuple = nlohmann::json::array();
    for (const auto& p : s.tuple) tuple.push_back(p.str());
    solutions.push_back(std::move(tuple));
  }
  certificate["solutions"] = std::move(solutions);
  doc.payload["certificate"] = std::move(certificate);

  doc.verdict("complete", cert.complete);
  doc.verdict("solutions_found", !cert.solutions.empty());

  // A premise-passing solution beyond the theorem's exponent bound would be
  // a counterexample; the bound is 2, or 1 when a base polynomial in that
  // solution is constant (two-summand equation only).
  bool counterexample = false;
  if (params.m == 2)
    for (const auto& s : cert.solutions) {
      const bool has_const =
          std::any_of(s.tuple.begin(), s.tuple.end(),
                      [](const DensePoly& p) { return p.is_constant(); });
      if (params.n > (has_const ? 1u : 2u)) counterexample = true;
    }
  else if (!cert.solutions.empty()) {
    const long m_l = static_cast<long>(params.m);
    const Rational bound = Rational(m_l * m_l - 1) -
                           Rational(m_l * (m_l - 1), 2 * static_cast<long>(std::max(1u, params.max_deg)));
    if (Rational(static_cast<long>(params.n)) > bound) counterexample = true;
  }
  doc.verdict("counterexample", counterexample);
  emit(doc, inv, out);
  return counterexample ? 1 : 0;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"exact q-difference polynomial calculus and theorem verification"};
  app.require_subcommand(1);

  Invocation inv;
  inv.argv_echo = args;
  if (const char* env = std::getenv("QMASON_THREADS")) {
    char* end = nullptr;
    const unsigned long v = std::strtoul(env, &end, 10);
    if (end && *end == '\0' && v >= 1 && v <= 1024) inv.threads = static_cast<unsigned>(v);
  }

  // Polynomial expressions may begin with '-', which an option parser would
  // swallow; expression commands therefore collect their positionals from
  // the unmatched remainder instead of declared positional options.
  const auto add_common = [&](CLI::App* cmd) {
    cmd->add_option("--q", inv.q_text, "parameter q as an exact value, e.g. 2, 1/2, 2+1i");
    cmd->add_flag("--json", inv.json, "emit the JSON report document");
    cmd->add_flag("--text", inv.text, "emit the plain text report (default)");
    cmd->allow_extras(true);
    return cmd;
  };

  auto* qnum = app.add_subcommand("qnum", "q-number [n]_q");
  qnum->add_option("--q", inv.q_text, "parameter q");
  qnum->add_flag("--json", inv.json);
  qnum->add_flag("--text", inv.text);
  qnum->add_option("n", inv.naturals, "argument(s)");

  auto* qbinom = app.add_subcommand("qbinom", "q-binomial [k j]_q");
  qbinom->add_option("--q", inv.q_text, "parameter q");
  qbinom->add_flag("--json", inv.json);
  qbinom->add_flag("--text", inv.text);
  qbinom->add_option("kj", inv.naturals, "upper and lower index");

  auto* expand_cmd = add_common(app.add_subcommand("expand", "evaluate and print a polynomial"));
  auto* dq = add_common(app.add_subcommand("dq", "Jackson derivative"));
  dq->add_option("--k", inv.k, "number of applications (default 1)");
  auto* weight = add_common(app.add_subcommand("weight", "q-weight of a point: EXPR Z0"));
  weight->add_option("--a", inv.a_text, "measure a-points of the polynomial (default 0)");
  auto* radical = add_common(app.add_subcommand("radical", "q-difference radical and chains"));
  radical->add_option("--mu", inv.mu, "truncation level (default 1 = plain radical)");
  auto* qprime = add_common(app.add_subcommand("qprime", "relative q-primeness check"));
  auto* casorati_cmd = add_common(app.add_subcommand("casorati", "q-Casorati determinant"));
  auto* vmason = add_common(app.add_subcommand("verify-mason", "degree inequality for a + b = c"));
  vmason->add_flag("--classical", inv.classical, "use the classical radical instead");
  auto* vext =
      add_common(app.add_subcommand("verify-extended", "degree inequality for f1 + ... + fm = f_{m+1}"));
  auto* vfermat = add_common(app.add_subcommand("verify-fermat", "check a Fermat-type instance"));
  vfermat->add_option("--n", inv.n, "Fermat exponent")->required();
  auto* sfermat = add_common(app.add_subcommand("search-fermat", "exhaustive Fermat search"));
  sfermat->add_option("--n", inv.n, "Fermat exponent")->required();
  sfermat->add_option("--m", inv.m, "summands on the left (default 2)");
  sfermat->add_option("--max-deg", inv.max_deg, "degree cap per polynomial")->required();
  sfermat->add_option("--coeff", inv.coeff_range, "integer coefficient range lo..hi")->required();
  sfermat->add_option("--threads", inv.threads, "worker threads (certificate unaffected)");
  sfermat->add_option("--budget", inv.budget, "max candidates examined; 0 = unlimited");

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return 0;
  } catch (const CLI::ParseError& e) {
    err << "usage error: " << e.what() << '\n';
    return 2;
  }

  for (CLI::App* sub : app.get_subcommands())
    inv.exprs = sub->remaining();

  try {
    if (qnum->parsed()) return cmd_qnum(inv, out);
    if (qbinom->parsed()) return cmd_qbinom(inv, out);
    if (expand_cmd->parsed()) return cmd_expand(inv, out);
    if (dq->parsed()) return cmd_dq(inv, out);
    if (weight->parsed()) return cmd_weight(inv, out);
    if (radical->parsed()) return cmd_radical(inv, out);
    if (qprime->parsed()) return cmd_qprime(inv, out);
    if (casorati_cmd->parsed()) return cmd_casorati(inv, out);
    if (vmason->parsed()) return cmd_verify_mason(inv, out);
    if (vext->parsed()) return cmd_verify_extended(inv, out);
    if (vfermat->parsed()) return cmd_verify_fermat(inv, out);
    if (sfermat->parsed()) return cmd_search_fermat(inv, out);
  } catch (const usage_error& e) {
    err << "error: " << e.message << '\n';
    return 2;
  } catch (const domain_error& e) {
    err << "error: " << e.what() << '\n';
    return 2;
  }
  err << "error: no subcommand given\n";
  return 2;
}

}  // namespace qmason
