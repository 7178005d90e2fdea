#include "webgram/cli.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <iomanip>
#include <sstream>

#include "json.hpp"
#include "webgram/gram.hpp"
#include "webgram/gtduality.hpp"
#include "webgram/kappa.hpp"
#include "webgram/poset.hpp"
#include "webgram/tableaux.hpp"
#include "webgram/tldiagrams.hpp"
#include "webgram/weights.hpp"

namespace webgram::cli {

namespace {

using nlohmann::ordered_json;

struct Options {
  int n = 0;
  std::string word;
  std::string source;
  std::string target;
  std::string mu;
  std::string format;
  std::string output;
  int points = 0;
  int defects = 0;
  bool check = false;
  int max_size = 10;
  int max_rows = 5;
};

// A rejected input value: exit code 1, unlike malformed text (ParseError).
struct Precondition : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

void require(bool ok, const std::string& message) {
  if (!ok) throw Precondition(message);
}

ordered_json integer_json(const Integer& v) {
  if (v.fits_slong_p()) return v.get_si();
  return v.get_str();
}

Word parse_word(const Options& o) {
  require(o.n >= 2, "--n must be at least 2");
  return Word::parse(o.word, o.n);
}

Partition parse_shape(const std::string& text, const Options& o, const char* flag) {
  Partition p = Partition::parse(text);
  require(p.length() <= o.n, std::string(flag) + " " + p.to_string() + " has more than n = " + std::to_string(o.n) + " rows");
  return p;
}

// ------------------------------------------------------------------ kappa

int cmd_kappa(const Options& o, std::ostream& out) {
  require(o.n >= 2, "--n must be at least 2");
  const Partition src = parse_shape(o.source, o, "--source");
  require(o.mu.empty() != o.target.empty(), "give exactly one of --mu and --target");
  KappaValue k;
  Partition dst;
  ordered_json doc;
  doc["source"] = src.to_string();
  if (!o.mu.empty()) {
    const MinusculeWeight mu = MinusculeWeight::parse(o.mu);
    require(mu.length() == o.n, "--mu must have n = " + std::to_string(o.n) + " entries");
    const auto sum = add_strip(src, mu);
    require(sum.has_value(), src.to_string() + " + " + mu.to_string() + " is not a partition");
    dst = *sum;
    k = kappa_root_form(src, mu);
    doc["mu"] = mu.to_string();
    doc["phi"] = to_string(phi_set(mu));
  } else {
    dst = parse_shape(o.target, o, "--target");
    require(is_vertical_strip(src, dst), dst.to_string() + " / " + src.to_string() + " is not a vertical strip");
    k = kappa_strip_form(src, dst);
  }
  doc["target"] = dst.to_string();
  doc["kappa"] = k.to_string();
  doc["ratios"] = k.ratios();
  doc["value"] = k.value().to_string();
  doc["at_q_1"] = k.value().eval(1).get_str();
  if (o.format == "json") {
    out << doc.dump(2) << '\n';
  } else {
    out << k.to_string() << '\n' << "value: " << k.value().to_string() << '\n';
  }
  return kOk;
}

// -------------------------------------------------------------------- phi

int cmd_phi(const Options& o, std::ostream& out) {
  const MinusculeWeight mu = MinusculeWeight::parse(o.mu);
  const auto roots = phi_set(mu);
  if (o.format == "json") {
    ordered_json pairs = ordered_json::array();
    for (const RootPair& r : roots) pairs.push_back({r.i, r.j});
    out << ordered_json{{"mu", mu.to_string()}, {"phi", pairs}}.dump(2) << '\n';
  } else {
    out << to_string(roots) << '\n';
  }
  return kOk;
}

// ------------------------------------------------------------------ poset

int cmd_poset(const Options& o, std::ostream& out) {
  const Word x = parse_word(o);
  std::optional<Partition> target;
  if (!o.target.empty()) target = parse_shape(o.target, o, "--target");
  const ReducedYoungPoset poset = build_poset(x, target);
  if (o.format == "dot") {
    out << export_dot(poset);
  } else if (o.format == "text") {
    for (int t = 0; t < poset.layer_count(); ++t) {
      out << "layer " << t << ':';
      for (std::size_t v : poset.layer(t)) {
        const PosetNode& n = poset.nodes()[v];
        out << ' ' << n.shape.to_string() << "[b=" << n.paths_from_bottom.get_str() << ",t=" << n.paths_to_top.get_str() << ']';
      }
      out << '\n';
    }
    for (const PosetEdge& e : poset.edges()) {
      out << poset.nodes()[e.from].shape.to_string() << " -> " << poset.nodes()[e.to].shape.to_string() << "  "
          << e.kappa.to_string() << "  x" << e.multiplicity.get_str() << '\n';
    }
  } else {
    out << export_json(poset);
  }
  return kOk;
}

// ------------------------------------------------------------------- gram

int cmd_gram(const Options& o, std::ostream& out, std::ostream& err) {
  const Word x = parse_word(o);
  const Partition lambda = parse_shape(o.target, o, "--target");
  require(lambda.size() == x.total(), "--target " + lambda.to_string() + " has size " + std::to_string(lambda.size()) +
                                          ", the word has letter sum " + std::to_string(x.total()));
  const GramDeterminant det = gram_det_closed(x, lambda);
  if (det.degenerate) err << "warning: " << lambda.to_string() << " is not reached; the cell module is zero\n";
  ordered_json powers = ordered_json::array();
  for (const auto& [k, e] : det.kappa_powers) powers.push_back({{"kappa", k.to_string()}, {"exponent", integer_json(e)}});
  ordered_json doc;
  doc["word"] = x.to_string();
  doc["rank"] = x.rank();
  doc["target"] = lambda.to_string();
  doc["dimension"] = integer_json(cell_dimension(x, lambda));
  doc["degenerate"] = det.degenerate;
  doc["factored"] = det.factored();
  doc["rational"] = det.value.to_string();
  doc["delta"] = det.delta_form.to_string();
  doc["at_q_1"] = det.value.eval(1).get_str();
  doc["kappa_powers"] = powers;
  if (o.format == "text") {
    out << "factored: " << det.factored() << '\n'
        << "rational: " << det.value.to_string() << '\n'
        << "delta: " << det.delta_form.to_string() << '\n';
  } else {
    out << doc.dump(2) << '\n';
  }
  return kOk;
}

// --------------------------------------------------------- dim / tableaux

int cmd_dim(const Options& o, std::ostream& out) {
  const Word x = parse_word(o);
  const Partition lambda = parse_shape(o.target, o, "--target");
  const Integer d = cell_dimension(x, lambda);
  ordered_json doc{{"word", x.to_string()}, {"rank", x.rank()}, {"target", lambda.to_string()}, {"dimension", integer_json(d)}};
  const bool standard = std::all_of(x.letters().begin(), x.letters().end(), [](int v) { return v == 1; });
  if (standard && lambda.size() == x.total() && lambda.length() <= 3) {
    const Integer hook = lambda.length() <= 2 ? dim_two_row(x.length(), lambda[2])
                                              : dim_three_row(x.length(), lambda[1], lambda[2], lambda[3]);
    doc["hook_length"] = integer_json(hook);
  }
  if (o.format == "json") {
    out << doc.dump(2) << '\n';
  } else {
    out << d.get_str() << '\n';
  }
  return kOk;
}

int cmd_tableaux(const Options& o, std::ostream& out) {
  const Word x = parse_word(o);
  const Partition lambda = parse_shape(o.target, o, "--target");
  const auto paths = enumerate_paths(x, lambda);
  if (o.format == "json") {
    ordered_json list = ordered_json::array();
    for (const PathTableau& p : paths) {
      ordered_json steps = ordered_json::array();
      for (const MinusculeWeight& m : p.steps) steps.push_back(m.to_string());
      list.push_back({{"filling", filling_to_string(to_row_ssyt(p))}, {"steps", steps}});
    }
    out << ordered_json{{"word", x.to_string()}, {"target", lambda.to_string()}, {"count", paths.size()}, {"tableaux", list}}.dump(2)
        << '\n';
  } else {
    for (const PathTableau& p : paths) out << filling_to_string(to_row_ssyt(p)) << '\n';
  }
  return kOk;
}

// ---------------------------------------------------------------- tl-gram

int cmd_tl_gram(const Options& o, std::ostream& out) {
  require(o.points >= 0 && o.defects >= 0 && o.defects <= o.points && (o.points - o.defects) % 2 == 0,
          "--defects must lie in 0..points with the parity of --points");
  const auto basis = enumerate_link_patterns(o.points, o.defects);
  const ExponentMatrix e = gram_exponents(o.points, o.defects);
  const LaurentPoly det = det_delta_powers(e);
  auto entry = [](int x) -> std::string {
    if (x < 0) return "0";
    return DeltaPoly::monomial(1, static_cast<unsigned>(x)).to_string();
  };
  if (o.format == "json") {
    ordered_json b = ordered_json::array();
    for (const LinkPattern& p : basis) b.push_back(p.to_string());
    ordered_json rows = ordered_json::array();
    for (const auto& row : e) {
      ordered_json r = ordered_json::array();
      for (int x : row) r.push_back(entry(x));
      rows.push_back(r);
    }
    out << ordered_json{{"points", o.points},
                        {"defects", o.defects},
                        {"basis", b},
                        {"matrix", rows},
                        {"determinant", det.to_string()},
                        {"determinant_delta", to_delta_poly(det).to_string()}}
               .dump(2)
        << '\n';
    return kOk;
  }
  std::size_t width = 1;
  for (const auto& row : e) {
    for (int x : row) width = std::max(width, entry(x).size());
  }
  for (std::size_t i = 0; i < basis.size(); ++i) {
    out << std::setw(2) << i + 1 << "  " << basis[i].to_string() << '\n';
  }
  for (const auto& row : e) {
    for (std::size_t j = 0; j < row.size(); ++j) out << (j ? "  " : "") << std::setw(static_cast<int>(width)) << entry(row[j]);
    out << '\n';
  }
  out << "det: " << to_delta_poly(det).to_string() << '\n';
  return kOk;
}

// --------------------------------------------------------------------- jw

int cmd_jw(const Options& o, std::ostream& out) {
  require(o.n >= 1 && o.n <= Diagram::kMaxStrands, "--n must lie in 1..8");
  if (o.check) {
    require(o.n >= 2, "--check needs --n of at least 2");
    const JWReport r = jw_checks(o.n);
    if (o.format == "json") {
      out << ordered_json{{"n", r.n},
                          {"terms", r.terms},
                          {"idempotent", r.idempotent},
                          {"cap_killing", r.cap_killing},
                          {"identity_coefficient", r.identity_coefficient},
                          {"trace_rule", r.trace_rule}}
                 .dump(2)
          << '\n';
    } else {
      auto line = [&](const char* name, bool ok) { out << (ok ? "pass " : "FAIL ") << name << '\n'; };
      line("idempotent", r.idempotent);
      line("cap_killing", r.cap_killing);
      line("identity_coefficient", r.identity_coefficient);
      line("trace_rule", r.trace_rule);
    }
    return r.all() ? kOk : kPrecondition;
  }
  const TLElement jw = jones_wenzl(o.n);
  if (o.format == "json") {
    ordered_json terms = ordered_json::array();
    for (const auto& [d, c] : jw.terms()) terms.push_back({{"diagram", d.to_string()}, {"coefficient", c.to_string()}});
    out << ordered_json{{"n", o.n}, {"terms", terms}}.dump(2) << '\n';
  } else {
    for (const auto& [d, c] : jw.terms()) out << d.to_string() << "  " << c.to_string() << '\n';
  }
  return kOk;
}

// --------------------------------------------------------------- gt-check

int cmd_gt_check(const Options& o, std::ostream& out) {
  require(o.max_size >= 0 && o.max_rows >= 1, "--max-size must be >= 0 and --max-rows >= 1");
  const auto pairs = horizontal_strip_pairs(o.max_size, o.max_rows);
  ordered_json records = ordered_json::array();
  std::size_t lemma_failures = 0;
  std::size_t heavy_unequal = 0;
  std::ostringstream text;
  for (const StripPair& p : pairs) {
    const RatFunc binomial = step_norm_sq_binomial(p.prev, p.next, p.s);
    const RatFunc heavy = step_norm_sq_heavy(p.prev, p.next, p.s);
    const RatFunc kappa = kappa_strip_form(p.prev.transpose(), p.next.transpose()).value();
    const bool equal = binomial == kappa;
    lemma_failures += equal ? 0 : 1;
    heavy_unequal += heavy == binomial ? 0 : 1;
    if (!equal) text << "counterexample: " << p.prev.to_string() << " -> " << p.next.to_string() << " s=" << p.s << '\n';
    records.push_back({{"prev", p.prev.to_string()},
                       {"next", p.next.to_string()},
                       {"s", p.s},
                       {"norm_sq", binomial.to_string()},
                       {"norm_sq_heavy", heavy.to_string()},
                       {"kappa_transposed", kappa.to_string()},
                       {"equal", equal}});
  }
  if (o.format == "json") {
    out << ordered_json{{"max_size", o.max_size},
                        {"max_rows", o.max_rows},
                        {"cases", pairs.size()},
                        {"counterexamples", lemma_failures},
                        {"heavy_binomial_unequal", heavy_unequal},
                        {"pairs", records}}
               .dump(2)
        << '\n';
  } else {
    out << text.str() << "cases: " << pairs.size() << '\n'
        << "counterexamples: " << lemma_failures << '\n'
        << "heavy_binomial_unequal: " << heavy_unequal << '\n';
  }
  return lemma_failures == 0 ? kOk : kPrecondition;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Gram determinants of type A web cell modules", "webgram"};
  app.require_subcommand(1);
  Options o;

  CLI::App* kappa = app.add_subcommand("kappa", "Intersection form of one edge");
  kappa->add_option("--n", o.n, "Rank")->required();
  kappa->add_option("--source", o.source, "Source partition, e.g. \"(2,2,1)\"")->required();
  kappa->add_option("--mu", o.mu, "0/1 weight added to the source");
  kappa->add_option("--target", o.target, "Target partition");

  CLI::App* phi = app.add_subcommand("phi", "Root pairs (i,j) with mu_i = 0, mu_j = 1");
  phi->add_option("--mu", o.mu, "0/1 weight, e.g. \"0,1,0,1,0\"")->required();

  CLI::App* poset = app.add_subcommand("poset", "Reduced Young poset of a word");
  poset->add_option("--n", o.n, "Rank")->required();
  poset->add_option("--word", o.word, "Letters in 1..n-1, e.g. 32312")->required();
  poset->add_option("--target", o.target, "Keep only nodes below this partition");

  CLI::App* gram = app.add_subcommand("gram", "Gram determinant of a cell module");
  gram->add_option("--n", o.n, "Rank")->required();
  gram->add_option("--word", o.word, "Letters in 1..n-1")->required();
  gram->add_option("--target", o.target, "Weight of the cell module")->required();

  CLI::App* dim = app.add_subcommand("dim", "Dimension of a cell module");
  dim->add_option("--n", o.n, "Rank")->required();
  dim->add_option("--word", o.word, "Letters in 1..n-1")->required();
  dim->add_option("--target", o.target, "Weight of the cell module")->required();

  CLI::App* tableaux = app.add_subcommand("tableaux", "Row-semistandard tableaux indexing a cell module");
  tableaux->add_option("--n", o.n, "Rank")->required();
  tableaux->add_option("--word", o.word, "Letters in 1..n-1")->required();
  tableaux->add_option("--target", o.target, "Shape")->required();

  CLI::App* tl = app.add_subcommand("tl-gram", "Temperley-Lieb Gram matrix in the link pattern basis");
  tl->add_option("--points", o.points, "Number of boundary points")->required();
  tl->add_option("--defects", o.defects, "Number of through strands")->required();

  CLI::App* jw = app.add_subcommand("jw", "Jones-Wenzl element");
  jw->add_option("--n", o.n, "Number of strands, 1..8")->required();
  jw->add_flag("--check", o.check, "Verify idempotence, cap killing and the trace rule");

  CLI::App* gt = app.add_subcommand("gt-check", "Compare N^2 with kappa on transposed shapes");
  gt->add_option("--max-size", o.max_size, "Largest |next|");
  gt->add_option("--max-rows", o.max_rows, "Largest number of rows of next");

  for (CLI::App* sub : {kappa, phi, poset, gram, dim, tableaux, tl, jw, gt}) {
    std::vector<std::string> formats{"text", "json"};
    std::string fallback = "text";
    if (sub == poset) {
      formats = {"text", "json", "dot"};
      fallback = "json";
    } else if (sub == gram) {
      fallback = "json";
    }
    sub->add_option("--format", o.format, "Output format: " + CLI::detail::join(formats, "|"))
        ->check(CLI::IsMember(formats))
        ->default_str(fallback);
    sub->add_option("--output", o.output, "Write the result to this file instead of standard output");
  }

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << '\n';
    return kParse;
  }

  CLI::App* chosen = app.get_subcommands().front();
  if (o.format.empty()) o.format = (chosen == poset || chosen == gram) ? "json" : "text";

  std::ostringstream buffer;
  int code = kOk;
  try {
    if (chosen == kappa) code = cmd_kappa(o, buffer);
    else if (chosen == phi) code = cmd_phi(o, buffer);
    else if (chosen == poset) code = cmd_poset(o, buffer);
    else if (chosen == gram) code = cmd_gram(o, buffer, err);
    else if (chosen == dim) code = cmd_dim(o, buffer);
    else if (chosen == tableaux) code = cmd_tableaux(o, buffer);
    else if (chosen == tl) code = cmd_tl_gram(o, buffer);
    else if (chosen == jw) code = cmd_jw(o, buffer);
    else code = cmd_gt_check(o, buffer);
  } catch (const ParseError& e) {
    err << "error: " << e.what() << '\n';
    return kParse;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kPrecondition;
  }

  if (o.output.empty()) {
    out << buffer.str();
  } else {
    std::ofstream file(o.output, std::ios::binary);
    file << buffer.str();
    if (!file) {
      err << "error: cannot write " << o.output << '\n';
      return kPrecondition;
    }
  }
  return code;
}

}  // namespace webgram::cli
