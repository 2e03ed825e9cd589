#include "cli.hpp"

#include <functional>
#include <ostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "orbitseq/complexes.hpp"
#include "orbitseq/equivariant.hpp"
#include "orbitseq/fixtures.hpp"
#include "orbitseq/gysin.hpp"
#include "orbitseq/io.hpp"
#include "orbitseq/lesolve.hpp"

namespace orbitseq::cli {

using complexes::GradedDims;
using nlohmann::json;

namespace {

enum class Format { kText, kJson };

struct Options {
  Format format = Format::kText;
  std::vector<std::string> source;  // a path, or "fixture" NAME
  std::vector<std::string> known;   // H<k>=<d>
  bool pair = false;
};

// Signals that the report was produced but describes an inconsistency.
struct Outcome {
  int code = kOk;
};

std::string dims_line(const GradedDims& d, int top) {
  std::ostringstream s;
  for (int k = 0; k <= std::max(top, 0); ++k) s << (k ? " " : "") << "H^" << k << '=' << d[k];
  return s.str();
}

json dims_json(const GradedDims& d, int top) {
  json a = json::array();
  for (int k = 0; k <= top; ++k) a.push_back(d[k]);
  return a;
}

void emit(std::ostream& out, const Options& opt, const json& j, const std::string& text) {
  if (opt.format == Format::kJson) {
    out << j.dump(2) << '\n';
  } else {
    out << text;
  }
}

gysin::GysinInput load_gysin(const Options& opt) {
  gysin::GysinInput g = [&] {
    if (opt.source.size() == 2 && opt.source[0] == "fixture") {
      return fixtures::fixture(opt.source[1]);
    }
    if (opt.source.size() != 1) {
      throw std::invalid_argument("expected a Gysin input file or 'fixture <name>'");
    }
    return io::parse_gysin_input(io::read_file(opt.source[0]));
  }();
  for (const auto& k : opt.known) {
    const auto [degree, dim] = io::parse_known_dim(k);
    g.known_total[degree] = dim;
  }
  g.validate();
  return g;
}

std::string single_path(const Options& opt) {
  if (opt.source.size() != 1) throw std::invalid_argument("expected exactly one input file");
  return opt.source[0];
}

// ---------------------------------------------------------------- verbs

Outcome cmd_cohomology(const Options& opt, std::ostream& out) {
  const auto x = io::parse_complex(io::read_file(single_path(opt)));
  const auto h = complexes::cohomology(x);
  const int top = x.dimension();
  json j{{"verb", "cohomology"},
         {"dims", dims_json(h.dims, top)},
         {"poincare", h.dims.polynomial()},
         {"euler_characteristic", h.dims.euler_characteristic()}};
  emit(out, opt, j, dims_line(h.dims, top) + "\n");
  return {};
}

Outcome cmd_relative(const Options& opt, std::ostream& out) {
  const auto p = io::parse_pair(io::read_file(single_path(opt)));
  const auto h = complexes::relative_cohomology(p);
  const int top = p.total().dimension();
  json j{{"verb", "relative"},
         {"dims", dims_json(h.dims, top)},
         {"poincare", h.dims.polynomial()},
         {"euler_characteristic", h.dims.euler_characteristic()}};
  emit(out, opt, j, dims_line(h.dims, top) + "\n");
  return {};
}

Outcome cmd_split(const Options& opt, std::ostream& out) {
  const auto inv = io::parse_involution(io::read_file(single_path(opt)));
  const auto split = equivariant::split_involution(inv);
  const int top = inv.carrier().dimension();
  json j{{"verb", "split"},
         {"symmetric", dims_json(split.symmetric, top)},
         {"antisymmetric", dims_json(split.antisymmetric, top)}};
  emit(out, opt, j,
       "symmetric:     " + dims_line(split.symmetric, top) + "\nantisymmetric: " +
           dims_line(split.antisymmetric, top) + "\n");
  return {};
}

Outcome cmd_quotient(const Options& opt, std::ostream& out) {
  const auto inv = io::parse_involution(io::read_file(single_path(opt)));
  const auto q = equivariant::quotient_complex(inv);
  const auto h = complexes::cohomology(q);
  json maximal = json::array();
  for (const auto& s : io::maximal_simplices(q)) maximal.push_back(s);
  json j{{"verb", "quotient"},
         {"maximal_simplices", maximal},
         {"dims", dims_json(h.dims, q.dimension())}};
  emit(out, opt, j,
       "# quotient: " + dims_line(h.dims, q.dimension()) + "\n" + io::format_complex(q));
  return {};
}

Outcome cmd_les_check(const Options& opt, std::ostream& out) {
  const std::string text = io::read_file(single_path(opt));
  const auto t = opt.pair ? complexes::pair_long_exact_sequence(io::parse_pair(text))
                          : io::parse_template(text);
  const auto verdicts = lesolve::check_exact(t);
  const bool exact = lesolve::all_exact(verdicts);
  const bool alternating = lesolve::alternating_sum_check(t);

  json positions = json::array();
  std::ostringstream text_out;
  for (const auto& v : verdicts) {
    const auto& slot = t.slots()[v.position];
    positions.push_back({{"position", v.position},
                         {"label", slot.label},
                         {"dim", *slot.dim},
                         {"exact", v.exact}});
    text_out << "slot " << v.position << " " << slot.label << " (dim " << *slot.dim
             << "): " << (v.exact ? "exact" : "NOT exact") << '\n';
  }
  text_out << "sequence: " << (exact ? "exact" : "not exact") << '\n';
  text_out << "alternating sum: " << (alternating ? "zero" : "nonzero") << '\n';
  json j{{"verb", "les-check"},
         {"exact", exact},
         {"alternating_sum_zero", alternating},
         {"positions", positions}};
  emit(out, opt, j, text_out.str());
  return {exact ? kOk : kInconsistent};
}

Outcome cmd_les_solve(const Options& opt, std::ostream& out) {
  const auto t = io::parse_template(io::read_file(single_path(opt)));
  const auto r = lesolve::solve_dims(t);

  json unknowns = json::array();
  std::ostringstream text;
  text << "consistent: " << (r.consistent ? "yes" : "no") << '\n';
  for (const auto& u : r.unknowns) {
    const auto& label = t.slots()[u.slot].label;
    unknowns.push_back({{"slot", u.slot}, {"label", label}, {"feasible", u.feasible}});
    text << label << " = ";
    if (u.unique()) {
      text << u.feasible.front();
    } else {
      text << '{';
      for (std::size_t i = 0; i < u.feasible.size(); ++i) text << (i ? ", " : "") << u.feasible[i];
      text << '}';
    }
    text << '\n';
  }
  json ranks = json::array();
  for (const auto& rr : r.ranks) ranks.push_back({rr.min, rr.max});
  text << "feasible assignments: " << r.assignments.size() << '\n';
  json j{{"verb", "les-solve"},
         {"consistent", r.consistent},
         {"unknowns", unknowns},
         {"ranks", ranks},
         {"assignments", r.assignments}};
  emit(out, opt, j, text.str());
  return {r.consistent ? kOk : kInconsistent};
}

json e2_json(const gysin::E2Rows& rows) {
  json a = json::array();
  for (const auto& row : rows) a.push_back(dims_json(row, row.top_degree()));
  return a;
}

std::string e2_text(const gysin::E2Rows& rows) {
  std::ostringstream s;
  s << "E2 rows:\n";
  for (std::size_t q = 0; q < rows.size(); ++q) s << "  q=" << q << ": " << rows[q].polynomial() << '\n';
  return s.str();
}

json duality_json(const gysin::DualityReport& d) {
  return {{"obstructed", d.obstructed}, {"degrees", d.degrees}};
}

Outcome cmd_gysin(const Options& opt, std::ostream& out) {
  const auto g = load_gysin(opt);
  const auto report = gysin::assemble(g);
  const auto& terms = report.terms;

  std::ostringstream text;
  text << "Gysin sequence, dim M = " << g.degree_bound << '\n';
  text << "  H^*(M/S3)          : " << terms.orbit.polynomial() << '\n';
  text << "  H^*(M/S3,Sigma/S3) : " << terms.relative.polynomial() << '\n';
  text << "  H^*(M^S1)^-Z2      : " << terms.antisymmetric.polynomial() << '\n';
  text << "  middle term        : " << terms.middle.polynomial() << '\n';
  text << "slots:\n";

  json slots = json::array();
  std::size_t next_unknown = 0;
  for (std::size_t i = 0; i < report.sequence.size(); ++i) {
    const auto& s = report.sequence.slots()[i];
    json js{{"label", s.label}, {"degree", *s.degree}};
    text << "  " << s.label << " = ";
    if (s.dim) {
      js["dim"] = *s.dim;
      text << *s.dim;
    } else {
      const auto& u = report.solve.unknowns[next_unknown++];
      js["dim"] = nullptr;
      js["feasible"] = u.feasible;
      text << "? {";
      for (std::size_t k = 0; k < u.feasible.size(); ++k) text << (k ? ", " : "") << u.feasible[k];
      text << '}';
    }
    text << '\n';
    slots.push_back(std::move(js));
  }

  json polys = json::array();
  if (!report.solve.consistent) {
    text << "solve: inconsistent\n";
  } else if (report.unique()) {
    text << "solve: consistent, unique\n";
  } else {
    text << "solve: consistent, " << report.total_profiles.size() << " feasible profiles\n";
  }
  for (const auto& p : report.poincare_polynomials()) {
    text << "P_M = " << p.polynomial() << '\n';
    polys.push_back(p.polynomial());
  }
  text << e2_text(report.e2_rows);
  text << report.duality.text << '\n';

  json j{{"verb", "gysin"},
         {"degree_bound", g.degree_bound},
         {"terms",
          {{"orbit", dims_json(terms.orbit, terms.orbit.top_degree())},
           {"relative", dims_json(terms.relative, terms.relative.top_degree())},
           {"antisymmetric", dims_json(terms.antisymmetric, terms.antisymmetric.top_degree())},
           {"middle", dims_json(terms.middle, terms.middle.top_degree())}}},
         {"slots", slots},
         {"consistent", report.solve.consistent},
         {"unique", report.unique()},
         {"profiles", report.total_profiles},
         {"poincare", polys},
         {"e2_rows", e2_json(report.e2_rows)},
         {"duality", duality_json(report.duality)}};
  emit(out, opt, j, text.str());
  return {report.solve.consistent ? kOk : kInconsistent};
}

Outcome cmd_fixture(const Options& opt, std::ostream& out) {
  if (opt.source.size() != 1) throw std::invalid_argument("expected a fixture name");
  const auto f = fixtures::entry(opt.source[0]);
  std::ostringstream text;
  text << "# fixture " << f.name << ": " << f.description << '\n';
  for (const auto& p : f.expected_profiles) {
    text << "# expected P_M = " << GradedDims::from_vector(p).polynomial() << '\n';
  }
  const std::string input = io::format_gysin_input(f.input);
  text << input;
  json j{{"verb", "fixture"},
         {"name", f.name},
         {"description", f.description},
         {"expected_profiles", f.expected_profiles},
         {"input", input}};
  emit(out, opt, j, text.str());
  return {};
}

Outcome cmd_e2(const Options& opt, std::ostream& out) {
  const auto rows = gysin::e2_rows(load_gysin(opt));
  emit(out, opt, {{"verb", "e2"}, {"e2_rows", e2_json(rows)}}, e2_text(rows));
  return {};
}

Outcome cmd_duality(const Options& opt, std::ostream& out) {
  const auto d = gysin::duality_report(load_gysin(opt));
  json j = duality_json(d);
  j["verb"] = "duality";
  emit(out, opt, j, d.text + "\n");
  return {};
}

}  // namespace

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact-sequence toolkit for S3-actions on simplicial models"};
  app.require_subcommand(1, 1);
  app.fallthrough();

  Options opt;
  std::string format = "text";
  app.add_option("--format", format, "Output format")
      ->check(CLI::IsMember({"text", "json"}))
      ->capture_default_str();

  using Handler = std::function<Outcome(const Options&, std::ostream&)>;
  std::vector<std::pair<CLI::App*, Handler>> verbs;
  auto add = [&](const std::string& name, const std::string& help, Handler h,
                 const std::string& what) {
    CLI::App* sub = app.add_subcommand(name, help);
    sub->add_option("input", opt.source, what)->required();
    verbs.emplace_back(sub, std::move(h));
    return sub;
  };

  add("cohomology", "Cohomology of a complex", cmd_cohomology, "complex file");
  add("relative", "Relative cohomology of a pair", cmd_relative, "pair file");
  add("split", "Invariant/antisymmetric split of an involution", cmd_split, "involution file");
  add("quotient", "Quotient of a regular involution", cmd_quotient, "involution file");
  add("les-check", "Check exactness of a template with maps", cmd_les_check, "template file")
      ->add_flag("--pair", opt.pair, "Input is a pair; check its long exact sequence");
  add("les-solve", "Solve unknown dimensions of a template", cmd_les_solve, "template file");
  add("gysin", "Assemble and solve the Gysin sequence", cmd_gysin, "file, or 'fixture NAME'")
      ->add_option("--known", opt.known, "Known total dimension, e.g. H2=2");
  add("fixture", "Print a built-in fixture as a Gysin input file", cmd_fixture, "fixture name");
  add("e2", "Rows of the second page", cmd_e2, "file, or 'fixture NAME'")
      ->add_option("--known", opt.known, "Known total dimension, e.g. H2=2");
  add("duality", "Duality obstruction", cmd_duality, "file, or 'fixture NAME'")
      ->add_option("--known", opt.known, "Known total dimension, e.g. H2=2");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    std::ostringstream o, e2;
    const int code = app.exit(e, o, e2);
    out << o.str();
    err << e2.str();
    return code == 0 ? kOk : kMalformedInput;
  }
  opt.format = format == "json" ? Format::kJson : Format::kText;

  for (const auto& [sub, handler] : verbs) {
    if (!sub->parsed()) continue;
    try {
      return handler(opt, out).code;
    } catch (const std::exception& e) {
      err << "error: " << e.what() << '\n';
      return kMalformedInput;
    }
  }
  return kMalformedInput;
}

}  // namespace orbitseq::cli
