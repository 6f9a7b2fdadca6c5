#include "cli.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <map>
#include <optional>
#include <set>

#include "partcat/blocks.hpp"
#include "partcat/central.hpp"
#include "partcat/diagrams.hpp"
#include "partcat/idemlift.hpp"
#include "partcat/interp.hpp"
#include "partcat/partalg.hpp"
#include "partcat/quiver0.hpp"
#include "partcat/scalars.hpp"
#include "partcat/young.hpp"

namespace partcat::cli {

namespace {

using json = nlohmann::ordered_json;
using diagrams::Diagram;
using scalars::Polynomial;
using scalars::Rational;
using young::YoungDiagram;

class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct Context {
  bool json = false;
  int max_arity = 4;
  bool max_arity_set = false;
  int max_d = 8;
  std::ostream& out;
};

template <class Fn>
auto parse_flag(const std::string& flag, Fn fn) {
  try {
    return fn();
  } catch (const ParseError& e) {
    throw UsageError(flag + ": " + e.what());
  } catch (const std::invalid_argument& e) {
    throw UsageError(flag + ": " + e.what());
  }
}

YoungDiagram flag_lambda(const std::string& flag, const std::string& text) {
  return parse_flag(flag, [&] { return YoungDiagram::parse(text); });
}

Rational flag_rational(const std::string& flag, const std::string& text) {
  return parse_flag(flag, [&] { return scalars::parse_rational(text); });
}

// "t" is the symbolic parameter.
blocks::Param flag_param(const std::string& flag, const std::string& text) {
  if (text == "t") return std::nullopt;
  return flag_rational(flag, text);
}

void check_arity(const Context& ctx, int n, const std::string& flag) {
  if (n < 0) throw UsageError(flag + ": arity must be nonnegative");
  if (n > ctx.max_arity)
    throw ResourceLimit(flag + " = " + std::to_string(n) + " exceeds --max-arity " + std::to_string(ctx.max_arity));
}

void check_d(const Context& ctx, int d, const std::string& flag) {
  if (d < 0) throw UsageError(flag + ": d must be nonnegative");
  if (d > ctx.max_d)
    throw ResourceLimit(flag + " = " + std::to_string(d) + " exceeds --max-d " + std::to_string(ctx.max_d));
}

json rational_json(const Rational& x) { return json::array({x.get_num().get_str(), x.get_den().get_str()}); }

json polynomial_json(const Polynomial& p) {
  json coeffs = json::array();
  for (const auto& c : p.coeffs()) coeffs.push_back(rational_json(c));
  return coeffs;
}

json young_json(const YoungDiagram& l) { return json(l.rows()); }

json diagram_json(const Diagram& d) { return json(d.to_signed()); }

template <class S>
json element_json(const partalg::Element<S>& a) {
  json terms = json::array();
  for (const auto& [d, c] : a.terms())
    terms.push_back({{"diagram", diagram_json(d)}, {"scalar", scalars::to_string(c)}});
  return {{"n", a.n()}, {"m", a.m()}, {"terms", terms}};
}

std::string param_string(const blocks::Param& t0) { return t0 ? scalars::to_string(*t0) : "t"; }

std::string join(const std::vector<YoungDiagram>& v, const std::string& sep) {
  std::string s;
  for (size_t i = 0; i < v.size(); ++i) s += (i ? sep : "") + v[i].to_string();
  return s;
}

std::string bool_string(bool b) { return b ? "true" : "false"; }

void emit(const Context& ctx, const json& doc, const std::string& text) {
  if (ctx.json) ctx.out << doc.dump(2) << "\n";
  else ctx.out << text;
}

// ---------------------------------------------------------------- commands

void cmd_gram(const Context& ctx, int n, bool det_only) {
  int cap = ctx.max_arity_set ? std::min(ctx.max_arity, 3) : 2;
  if (n < 0) throw UsageError("--n: arity must be nonnegative");
  if (n > cap) throw ResourceLimit("gram --n " + std::to_string(n) + " exceeds the cap " + std::to_string(cap));
  auto g = partalg::gram_matrix(n, cap);
  Polynomial det = scalars::polymatrix_det(g.entries);
  json doc;
  doc["n"] = n;
  std::string text;
  if (!det_only) {
    json basis = json::array(), rows = json::array();
    for (const auto& d : g.basis) basis.push_back(d.to_string());
    for (size_t i = 0; i < g.entries.size(); ++i) {
      json row = json::array();
      text += g.basis[i].to_string() + ":";
      for (const auto& p : g.entries[i]) {
        row.push_back(p.to_string());
        text += "  " + p.to_string();
      }
      rows.push_back(row);
      text += "\n";
    }
    doc["basis"] = basis;
    doc["matrix"] = rows;
    text += "det = ";
  }
  doc["det"] = det.to_string();
  doc["det_factored"] = scalars::factored_string(det);
  doc["det_coefficients"] = polynomial_json(det);
  text += scalars::factored_string(det) + "\n";
  emit(ctx, doc, text);
}

constexpr int kMaxListedSize = 30;

void cmd_blocks(const Context& ctx, const blocks::Param& t0, int max_size) {
  if (max_size < 0) throw UsageError("--max-size must be nonnegative");
  if (max_size > kMaxListedSize)
    throw ResourceLimit("--max-size = " + std::to_string(max_size) + " exceeds " + std::to_string(kMaxListedSize));
  std::vector<blocks::BlockClass> nontrivial;
  std::vector<std::vector<YoungDiagram>> members;
  std::vector<YoungDiagram> trivial;
  for (const auto& l : young::partitions_up_to(max_size)) {
    auto c = blocks::class_of(l, t0);
    if (c.trivial) {
      trivial.push_back(l);
      continue;
    }
    if (std::find(nontrivial.begin(), nontrivial.end(), c) != nontrivial.end()) continue;
    std::vector<YoungDiagram> in_range;
    for (int count = 0;; ++count) {
      auto m = blocks::block_members(c, count).back();
      if (m.size() > max_size) break;
      in_range.push_back(m);
    }
    nontrivial.push_back(c);
    members.push_back(in_range);
  }
  json doc;
  doc["t"] = param_string(t0);
  doc["max_size"] = max_size;
  doc["semisimple"] = blocks::category_semisimple(t0);
  std::string text = "t = " + param_string(t0) + ", sizes <= " + std::to_string(max_size) + "\n";
  json classes = json::array();
  text += "nontrivial classes: " + std::to_string(nontrivial.size()) + "\n";
  for (size_t i = 0; i < nontrivial.size(); ++i) {
    const auto& c = nontrivial[i];
    auto comp = blocks::minimal_completion(c);
    json members_json = json::array();
    for (const auto& m : members[i]) members_json.push_back(young_json(m));
    classes.push_back({{"kind", "nontrivial"},
                       {"t", param_string(c.t0)},
                       {"minimal", young_json(c.lambda)},
                       {"d", c.d},
                       {"completion", young_json(comp)},
                       {"members", members_json}});
    text += "  B" + std::to_string(i) + ": completion " + comp.to_string() + ": " + join(members[i], " ⊂ ") + "\n";
  }
  json trivial_json = json::array();
  for (const auto& l : trivial)
    trivial_json.push_back({{"kind", "trivial"}, {"t", param_string(t0)}, {"lambda", young_json(l)}});
  text += "trivial classes: " + std::to_string(trivial.size());
  if (!trivial.empty()) text += ": " + join(trivial, ", ");
  text += "\n";
  json order = json::array();
  for (size_t i = 0; i < nontrivial.size(); ++i)
    for (size_t j = i + 1; j < nontrivial.size(); ++j) {
      auto rel = blocks::block_compare(nontrivial[i], nontrivial[j]);
      static const std::map<young::Dominance, std::string> names{{young::Dominance::less, "less"},
                                                                 {young::Dominance::greater, "greater"},
                                                                 {young::Dominance::equal, "equal"},
                                                                 {young::Dominance::incomparable, "incomparable"}};
      order.push_back({{"first", i}, {"second", j}, {"relation", names.at(rel)}});
      std::string a = "B" + std::to_string(i), b = "B" + std::to_string(j);
      if (rel == young::Dominance::less) text += "  " + a + " ≺ " + b + "\n";
      else if (rel == young::Dominance::greater) text += "  " + b + " ≺ " + a + "\n";
      else if (rel == young::Dominance::incomparable) text += "  " + a + ", " + b + " incomparable\n";
    }
  doc["nontrivial"] = classes;
  doc["trivial"] = trivial_json;
  doc["order"] = order;
  emit(ctx, doc, text);
}

void cmd_ppoly(const Context& ctx, const YoungDiagram& l) {
  Polynomial p = young::p_poly(l);
  json doc{{"lambda", young_json(l)},
           {"polynomial", p.to_string()},
           {"factored", scalars::factored_string(p)},
           {"coefficients", polynomial_json(p)},
           {"roots", young::p_roots(l)}};
  emit(ctx, doc, scalars::factored_string(p) + "\n");
}

void cmd_tensor_box(const Context& ctx, const YoungDiagram& l) {
  auto nu = blocks::tensor_box(l);
  std::map<YoungDiagram, int> count;
  for (const auto& v : nu) ++count[v];
  json summands = json::array();
  std::string text;
  for (const auto& [v, c] : count) {
    summands.push_back({{"lambda", young_json(v)}, {"multiplicity", c}});
    text += v.to_string() + (c > 1 ? " x" + std::to_string(c) : "") + "\n";
  }
  emit(ctx, json{{"lambda", young_json(l)}, {"summands", summands}}, text);
}

void cmd_omega(const Context& ctx, int n, int r, std::optional<int> verify_at) {
  check_arity(ctx, n, "--n");
  if (r < 1) throw UsageError("--r must be positive");
  auto w = central::omega(n, r);
  json doc{{"n", n}, {"r", r}, {"value", element_json(w.value)}};
  std::string text = partalg::to_string(w.value) + "\n";
  if (verify_at) {
    int d = *verify_at;
    check_d(ctx, d, "--verify-at");
    if (d < r) throw UsageError("--verify-at must be at least r");
    auto lhs = interp::f_element(partalg::evaluate(w.value, Rational(d)), d);
    bool ok = lhs == interp::omega_action_oracle(n, r, d);
    doc["verified_at"] = d;
    doc["matches_oracle"] = ok;
    text += "matches the r-cycle action at d = " + std::to_string(d) + ": " + bool_string(ok) + "\n";
  }
  emit(ctx, doc, text);
}

void cmd_xi(const Context& ctx, const YoungDiagram& l, int r, const std::optional<std::string>& at) {
  if (r < 1) throw UsageError("--r must be positive");
  Polynomial xi = central::xi_poly(l, r);
  json doc{{"lambda", young_json(l)}, {"r", r}, {"polynomial", xi.to_string()}, {"coefficients", polynomial_json(xi)}};
  std::string text = xi.to_string() + "\n";
  if (at) {
    Rational t0 = flag_rational("--at", *at);
    Rational v = xi.eval(t0);
    doc["at"] = scalars::to_string(t0);
    doc["value"] = scalars::to_string(v);
    text += "at t = " + scalars::to_string(t0) + ": " + scalars::to_string(v) + "\n";
  }
  emit(ctx, doc, text);
}

partalg::Element<Rational> parse_idempotent(const Context& ctx, const std::string& text, const Rational& t0) {
  auto number = [&](const std::string& s) {
    return parse_flag("--idempotent", [&] {
      if (s.empty() || !std::all_of(s.begin(), s.end(), ::isdigit)) throw ParseError("not an arity: " + text);
      return std::stoi(s);
    });
  };
  auto space = text.find(' ');
  if (text.rfind("s_", 0) == 0) {
    int n = number(text.substr(2));
    check_arity(ctx, n, "--idempotent");
    return quiver0::antisymmetrizer(n);
  }
  if (text.rfind("id_", 0) == 0) {
    int n = number(text.substr(3));
    check_arity(ctx, n, "--idempotent");
    return partalg::identity(n, Rational(1));
  }
  if (space != std::string::npos) {
    std::string kind = text.substr(0, space);
    auto l = flag_lambda("--idempotent", text.substr(space + 1));
    check_arity(ctx, l.size(), "--idempotent");
    if (kind == "young") return idemlift::young_symmetrizer(l);
    if (kind == "prim") return partalg::evaluate(idemlift::primitive_idempotent(l), t0);
  }
  throw UsageError("--idempotent: expected s_N, id_N, 'young L' or 'prim L', got '" + text + "'");
}

void cmd_lift(const Context& ctx, const std::string& idem, const std::string& t_text, int order) {
  Rational t0 = flag_rational("--t", t_text);
  if (order < 1) throw UsageError("--order must be positive");
  auto e = parse_idempotent(ctx, idem, t0);
  auto dec = idemlift::lift_decompose(e, t0, order, idem);
  json summands = json::array(), series = json::array();
  for (const auto& l : dec.summands) summands.push_back(young_json(l));
  for (const auto& c : dec.trace_series.coeffs()) series.push_back(scalars::to_string(c));
  json doc{{"idempotent", idem},
           {"t", scalars::to_string(t0)},
           {"order", dec.order},
           {"summands", summands},
           {"trace_series", series}};
  std::string text = "Lift of ([" + std::to_string(dec.n) + "], " + idem + ") at t = " + scalars::to_string(t0) +
                     ": " + (dec.summands.empty() ? std::string("0") : join(dec.summands, " + ")) + "\n" +
                     "trace: " + dec.trace_series.to_string() + "\n";
  emit(ctx, doc, text);
}

void cmd_verify_zeroblock(const Context& ctx, int n_max) {
  check_arity(ctx, n_max, "--n-max");
  auto report = quiver0::verify_relations(n_max, ctx.max_arity);
  json rel = json::array(), dims = json::array();
  std::string text;
  for (const auto& r : report.relation_results) {
    rel.push_back({{"id", r.id}, {"n", r.n}, {"holds", r.holds}});
    text += r.id + " n=" + std::to_string(r.n) + ": " + (r.holds ? "holds" : "FAILS") + "\n";
  }
  for (const auto& [n, d] : report.dim_results) {
    dims.push_back({{"n", n}, {"dim", d}});
    text += "dim s_" + std::to_string(n) + " FP_" + std::to_string(n) + "(0) s_" + std::to_string(n) + " = " +
            std::to_string(d) + "\n";
  }
  text += "all relations hold: " + bool_string(report.all_hold()) + "\n";
  emit(ctx, json{{"n_max", n_max}, {"relation_results", rel}, {"dim_results", dims}, {"all_hold", report.all_hold()}},
       text);
}

void cmd_semisimple(const Context& ctx, const blocks::Param& t0) {
  bool s = blocks::category_semisimple(t0);
  emit(ctx, json{{"t", param_string(t0)}, {"semisimple", s}}, "semisimple: " + bool_string(s) + "\n");
}

void cmd_interp_rank(const Context& ctx, int n, int m, int d) {
  check_arity(ctx, n, "--n");
  check_arity(ctx, m, "--m");
  check_d(ctx, d, "--d");
  auto rank = interp::hom_rank(n, m, d);
  long few_parts = 0;
  for (const auto& pi : diagrams::all_diagrams(n, m))
    if (pi.num_parts() <= d) ++few_parts;
  json doc{{"n", n},
           {"m", m},
           {"d", d},
           {"rank", rank},
           {"diagrams_with_at_most_d_parts", few_parts},
           {"bell", diagrams::bell_number(n + m)}};
  emit(ctx, doc,
       "rank = " + std::to_string(rank) + " (diagrams with at most d parts: " + std::to_string(few_parts) +
           ", Bell(n+m) = " + std::to_string(diagrams::bell_number(n + m)) + ")\n");
}

Diagram flag_diagram(const Context& ctx, const std::string& text, int n, int m) {
  auto d = parse_flag("--diagram", [&] { return Diagram::parse(text, n, m); });
  check_arity(ctx, std::max(d.n(), d.m()), "--diagram");
  return d;
}

void cmd_xbasis(const Context& ctx, const Diagram& pi) {
  const auto& x = partalg::x_basis(pi);
  emit(ctx, json{{"diagram", diagram_json(pi)}, {"x", element_json(x)}}, partalg::to_string(x) + "\n");
}

void cmd_negligible(const Context& ctx, const Diagram& pi, bool use_x, const blocks::Param& t0) {
  auto h = use_x ? partalg::x_basis(pi) : partalg::Element<Rational>(pi, Rational(1));
  bool neg = partalg::is_negligible(partalg::promote(h, Polynomial(1)), t0);
  json doc{{"diagram", diagram_json(pi)}, {"x_basis", use_x}, {"t", param_string(t0)}, {"negligible", neg}};
  emit(ctx, doc, "negligible: " + bool_string(neg) + "\n");
}

void report_error(const Context& ctx, std::ostream& err, const std::string& code, const std::string& message) {
  if (ctx.json) ctx.out << json{{"error", {{"code", code}, {"message", message}}}}.dump(2) << "\n";
  err << "error: " << message << "\n";
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact computations in the partition category and Deligne's Rep(S_t)", "partcat"};
  app.require_subcommand(1);
  app.fallthrough();
  Context ctx{false, 4, false, 8, out};
  app.add_flag("--json", ctx.json, "Emit one JSON document on stdout");
  auto* max_arity_opt = app.add_option("--max-arity", ctx.max_arity, "Largest arity n accepted");
  app.add_option("--max-d", ctx.max_d, "Largest integer d accepted");

  int n = 0, m = 0, r = 0, d = 0, max_size = 0, n_max = 4, order = idemlift::kDefaultOrder;
  bool det_only = false, use_x = false;
  std::string lambda_text, t_text = "t", idem_text, diagram_text;
  std::optional<int> verify_at;
  std::optional<std::string> at_text;

  auto* gram = app.add_subcommand("gram", "Trace-form Gram matrix of FP_n(t) and its determinant");
  gram->add_option("--n", n, "Arity")->required();
  gram->add_flag("--det", det_only, "Print only the determinant");

  auto* blocks_cmd = app.add_subcommand("blocks", "Equivalence classes of Young diagrams at t");
  blocks_cmd->add_option("--t", t_text, "Parameter: rational or 't'")->required();
  blocks_cmd->add_option("--max-size", max_size, "Largest diagram size listed")->required();

  auto* ppoly = app.add_subcommand("ppoly", "Dimension polynomial P_lambda");
  ppoly->add_option("--lambda", lambda_text, "Young diagram, e.g. 3,2")->required();

  auto* tbox = app.add_subcommand("tensor-box", "Decomposition of L(lambda) tensor L(box)");
  tbox->add_option("--lambda", lambda_text, "Young diagram")->required();

  auto* omega = app.add_subcommand("omega", "Central element omega_n^r(t)");
  omega->add_option("--n", n, "Arity")->required();
  omega->add_option("--r", r, "Cycle length")->required();
  omega->add_option("--verify-at", verify_at, "Compare with the r-cycle action at integer d");

  auto* xi = app.add_subcommand("xi", "Frobenius scalar xi for lambda(t)");
  xi->add_option("--lambda", lambda_text, "Young diagram")->required();
  xi->add_option("--r", r, "Cycle length")->required();
  xi->add_option("--at", at_text, "Evaluate at a rational t");

  auto* lift = app.add_subcommand("lift", "Decompose the lift of an idempotent");
  lift->add_option("--idempotent", idem_text, "s_N, id_N, 'young L' or 'prim L'")->required();
  lift->add_option("--t", t_text, "Rational base point")->required();
  lift->add_option("--order", order, "Series order");

  auto* zero = app.add_subcommand("verify-zeroblock", "Check the quiver relations of the block of Rep(S_0)");
  zero->add_option("--n-max", n_max, "Largest arity");

  auto* semi = app.add_subcommand("semisimple", "Whether Rep(S_t) is semisimple");
  semi->add_option("--t", t_text, "Parameter: rational or 't'")->required();

  auto* irank = app.add_subcommand("interp-rank", "Rank of f on P_{n,m} at d");
  irank->add_option("--n", n, "Source arity")->required();
  irank->add_option("--m", m, "Target arity")->required();
  irank->add_option("--d", d, "Integer d")->required();

  auto* xbasis = app.add_subcommand("xbasis", "The element x_pi in the diagram basis");
  xbasis->add_option("--diagram", diagram_text, "Diagram, e.g. {1,3,2',3'}{2,4}{1'}")->required();
  xbasis->add_option("--n", n, "Source arity (default: inferred)");
  xbasis->add_option("--m", m, "Target arity (default: inferred)");

  auto* negl = app.add_subcommand("negligible", "Whether pi (or x_pi) is negligible");
  negl->add_option("--diagram", diagram_text, "Diagram")->required();
  negl->add_flag("--x", use_x, "Test x_pi instead of pi");
  negl->add_option("--t", t_text, "Parameter: rational or 't'");
  negl->add_option("--n", n, "Source arity (default: inferred)");
  negl->add_option("--m", m, "Target arity (default: inferred)");

  std::vector<std::string> storage{"partcat"};
  storage.insert(storage.end(), args.begin(), args.end());
  std::vector<char*> argv;
  for (auto& s : storage) argv.push_back(s.data());

  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return 0;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return 0;
  } catch (const CLI::ParseError& e) {
    err << "usage error: " << e.what() << "\n";
    return 2;
  }
  ctx.max_arity_set = max_arity_opt->count() > 0;

  try {
    auto arity = [&](CLI::App* sub, const char* flag, int value) {
      return sub->count(flag) ? value : -1;
    };
    if (app.got_subcommand(gram)) cmd_gram(ctx, n, det_only);
    else if (app.got_subcommand(blocks_cmd)) cmd_blocks(ctx, flag_param("--t", t_text), max_size);
    else if (app.got_subcommand(ppoly)) cmd_ppoly(ctx, flag_lambda("--lambda", lambda_text));
    else if (app.got_subcommand(tbox)) cmd_tensor_box(ctx, flag_lambda("--lambda", lambda_text));
    else if (app.got_subcommand(omega)) cmd_omega(ctx, n, r, verify_at);
    else if (app.got_subcommand(xi)) cmd_xi(ctx, flag_lambda("--lambda", lambda_text), r, at_text);
    else if (app.got_subcommand(lift)) cmd_lift(ctx, idem_text, t_text, order);
    else if (app.got_subcommand(zero)) cmd_verify_zeroblock(ctx, n_max);
    else if (app.got_subcommand(semi)) cmd_semisimple(ctx, flag_param("--t", t_text));
    else if (app.got_subcommand(irank)) cmd_interp_rank(ctx, n, m, d);
    else if (app.got_subcommand(xbasis))
      cmd_xbasis(ctx, flag_diagram(ctx, diagram_text, arity(xbasis, "--n", n), arity(xbasis, "--m", m)));
    else if (app.got_subcommand(negl))
      cmd_negligible(ctx, flag_diagram(ctx, diagram_text, arity(negl, "--n", n), arity(negl, "--m", m)), use_x,
                     flag_param("--t", t_text));
  } catch (const UsageError& e) {
    err << "usage error: " << e.what() << "\n";
    return 2;
  } catch (const Error& e) {
    report_error(ctx, err, e.code(), e.what());
    return 1;
  } catch (const std::invalid_argument& e) {
    report_error(ctx, err, "InvalidArgument", e.what());
    return 1;
  } catch (const std::domain_error& e) {
    report_error(ctx, err, "DomainError", e.what());
    return 1;
  }
  return 0;
}

}  // namespace partcat::cli
