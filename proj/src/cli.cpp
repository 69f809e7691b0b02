#include "quiddity/cli.hpp"

#include "quiddity/budget.hpp"
#include "quiddity/dissection.hpp"
#include "quiddity/enumeration.hpp"
#include "quiddity/error.hpp"
#include "quiddity/frieze.hpp"
#include "quiddity/psl2.hpp"
#include "quiddity/sturm.hpp"
#include "quiddity/surgery.hpp"

#include <fstream>
#include <ostream>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

namespace quiddity {

namespace {

using nlohmann::json;

struct Context {
  std::ostream& out;
  std::ostream& err;
  bool as_json = false;
  Budget budget;
};

json number(const BigInt& x) {
  if (auto small = to_int64(x)) return *small;
  return to_string(x);
}

json matrix_json(const Matrix& m) { return {{number(m.a), number(m.b)}, {number(m.c), number(m.d)}}; }

std::string yes_no(bool b) { return b ? "yes" : "no"; }

std::string join_sizes(const std::vector<std::size_t>& xs) {
  std::string s;
  for (std::size_t x : xs) s += (s.empty() ? "" : ",") + std::to_string(x);
  return s;
}

std::string join_diagonals(const Dissection& d) {
  std::string s;
  for (auto [a, b] : d.diagonals()) {
    s += (s.empty() ? "{" : " {") + std::to_string(a) + "," + std::to_string(b) + "}";
  }
  return s.empty() ? "none" : s;
}

int not_a_solution(Context& ctx, const Word& w, const Matrix& m) {
  if (ctx.as_json) {
    ctx.out << json{{"word", w.vector()}, {"class", "NotASolution"}, {"trace", number(m.trace())},
                    {"sum", w.sum()}}.dump()
            << '\n';
  } else {
    ctx.out << "word:  " << w << "\nclass: NotASolution\ntrace: " << m.trace() << "\nsum:   " << w.sum()
            << '\n';
  }
  return kExitNegative;
}

int cmd_verify(Context& ctx, const std::string& text) {
  const Word w = Word::parse(text);
  const Matrix m = word_product(w);
  const Classification c = classify(w);
  if (c.solution_class == SolutionClass::NotASolution) return not_a_solution(ctx, w, m);

  const auto& cert = *c.certificate;
  const auto n = static_cast<std::int64_t>(w.size());
  const auto r = static_cast<std::int64_t>(cert.type2_count);
  const bool third = c.solution_class == SolutionClass::ProblemIII;
  const std::int64_t expected_sum = 3 * n - 6 * r - (third ? 3 : 6);
  const std::ptrdiff_t bound = entry_bound(c.solution_class, w.size());
  const HalfInteger index = rotation_index(w);

  if (ctx.as_json) {
    ctx.out << json{{"word", w.vector()},
                    {"class", to_string(c.solution_class)},
                    {"trace", number(m.trace())},
                    {"type1_count", cert.type1_count},
                    {"type2_count", cert.type2_count},
                    {"sum", w.sum()},
                    {"expected_sum", expected_sum},
                    {"sum_ok", w.sum() == expected_sum},
                    {"max_entry", w.max()},
                    {"entry_bound", bound},
                    {"bound_ok", w.max() <= bound},
                    {"index", index.to_string()},
                    {"index_twice", index.twice_value()},
                    {"index_of_double", third}}
                   .dump()
            << '\n';
  } else {
    ctx.out << "word:      " << w << '\n'
            << "class:     " << to_string(c.solution_class) << '\n'
            << "trace:     " << m.trace() << '\n'
            << "S:         " << cert.type1_count << '\n'
            << "R:         " << cert.type2_count << '\n'
            << "sum:       " << w.sum() << " (3n - 6R - " << (third ? 3 : 6) << " = " << expected_sum << ", "
            << (w.sum() == expected_sum ? "ok" : "MISMATCH") << ")\n"
            << "max entry: " << w.max() << " (bound " << bound << ", " << (w.max() <= bound ? "ok" : "EXCEEDED")
            << ")\n"
            << "index:     " << index.to_string() << (third ? " (of the doubled word)" : "") << '\n';
  }
  return kExitOk;
}

struct EnumerateOptions {
  int problem = 2;
  std::size_t n = 0;
  bool count = false;
  std::string engine = "gen";
  std::string orbits = "none";
  unsigned threads = 0;
};

int cmd_enumerate(Context& ctx, const EnumerateOptions& o) {
  const auto problem = static_cast<Problem>(o.problem);
  SolutionSet set;
  if (o.engine == "brute") {
    set = brute_force_enumerate(problem, o.n, ctx.budget, {true, o.threads});
  } else if (o.engine == "gen") {
    set = generative_enumerate(problem, o.n, ctx.budget);
  } else {
    set = generative_enumerate(problem, o.n, ctx.budget);
    const SolutionSet brute = brute_force_enumerate(problem, o.n, ctx.budget, {true, o.threads});
    if (brute != set) {
      ctx.err << "engines disagree at n = " << o.n << ": brute force " << brute.size() << ", generative "
              << set.size() << '\n';
      return kExitNegative;
    }
  }
  std::vector<Word> words = set.words;
  if (o.orbits != "none") {
    words = orbit_representatives(words, o.orbits == "rotation" ? Symmetry::Rotation : Symmetry::Dihedral);
  }
  if (ctx.as_json) {
    json j{{"problem", o.problem}, {"n", o.n}, {"engine", o.engine}, {"orbits", o.orbits}, {"count", words.size()}};
    if (!o.count) {
      j["words"] = json::array();
      for (const Word& w : words) j["words"].push_back(w.vector());
    }
    ctx.out << j.dump() << '\n';
  } else if (o.count) {
    ctx.out << words.size() << '\n';
  } else {
    for (const Word& w : words) ctx.out << w << '\n';
  }
  return kExitOk;
}

struct DissectOptions {
  std::string word;
  std::string render;
  bool all = false;
  std::string output;
};

std::string summary(const Dissection& d) {
  const auto p = profile(d);
  std::ostringstream os;
  os << "n=" << d.size() << " faces=" << join_sizes(p.face_sizes) << " diagonals=" << join_diagonals(d)
     << " quiddity=" << quiddity_of(d) << " even-faces=" << to_string(even_face_parity(d));
  if (d.size() % 2 == 0) os << " centrally-symmetric=" << yes_no(is_centrally_symmetric(d));
  return os.str();
}

int cmd_dissect(Context& ctx, const DissectOptions& o) {
  const Word w = Word::parse(o.word);
  const SolutionClass sc = solution_class(w);
  if (sc == SolutionClass::NotASolution) return not_a_solution(ctx, w, word_product(w));

  std::vector<Dissection> ds;
  if (o.all) {
    ds = dissections_with_quiddity(sc == SolutionClass::ProblemIII ? w.doubled() : w, ctx.budget);
  } else {
    ds.push_back(dissection_for(w, ctx.budget));
  }
  const std::string render = o.render.empty() ? (ctx.as_json ? "json" : "text") : o.render;

  std::ostringstream body;
  if (render == "json") {
    if (o.all) {
      json arr = json::array();
      for (const auto& d : ds) arr.push_back(json::parse(to_json(d)));
      body << arr.dump() << '\n';
    } else {
      body << to_json(ds.front()) << '\n';
    }
  } else {
    for (const auto& d : ds) {
      if (render == "dot") body << to_dot(d);
      else if (render == "svg") body << to_svg(d);
      else body << summary(d) << '\n';
    }
  }

  if (o.output.empty()) {
    ctx.out << body.str();
  } else {
    std::ofstream file(o.output);
    if (!file) throw DomainError("cannot write " + o.output);
    file << body.str();
    ctx.out << "wrote " << ds.size() << " dissection" << (ds.size() == 1 ? "" : "s") << " to " << o.output << '\n';
  }
  return kExitOk;
}

struct FriezeOptions {
  std::string word;
  std::size_t rows = 0;
  std::ptrdiff_t first_column = 0;
};

int cmd_frieze(Context& ctx, const FriezeOptions& o) {
  const Word w = Word::parse(o.word);
  const SolutionClass sc = solution_class(w);
  if (sc == SolutionClass::NotASolution) return not_a_solution(ctx, w, word_product(w));
  if (sc == SolutionClass::ProblemI) {
    ctx.err << w << " solves Problem I; friezes are built for Problem II and III solutions\n";
    return kExitNegative;
  }
  const Frieze f = o.rows ? frieze(w, o.rows) : frieze(w);
  const bool has_tame = f.row_count() >= 3;
  const bool tame = has_tame && check_tame(f);
  if (ctx.as_json) {
    json j = json::parse(to_json(f));
    j["diamond"] = check_diamond(f);
    j["tame"] = has_tame ? json(tame) : json(nullptr);
    j["glide"] = check_glide(f);
    ctx.out << j.dump() << '\n';
  } else {
    ctx.out << render_text(f, o.first_column) << '\n'
            << "diamond rule: " << yes_no(check_diamond(f)) << '\n'
            << "tame:         " << (has_tame ? yes_no(tame) : "n/a (fewer than 3 rows)") << '\n'
            << "glide:        " << yes_no(check_glide(f)) << '\n';
  }
  return kExitOk;
}

Matrix parse_matrix(const std::string& text) {
  std::vector<BigInt> xs;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    try {
      xs.emplace_back(item);
    } catch (const std::exception&) {
      throw DomainError("'" + item + "' is not an integer");
    }
  }
  if (xs.size() != 4) throw DomainError("a matrix is given as a,b,c,d");
  return {xs[0], xs[1], xs[2], xs[3]};
}

int cmd_decompose(Context& ctx, const std::string& text) {
  const GroupElement a(parse_matrix(text));
  const ElementQuiddity q = element_quiddity(a);
  const HalfInteger index = rotation_index(q.combined);
  const Dissection d = from_certificate(reduce(q.combined));
  const auto p = profile(d);
  if (ctx.as_json) {
    ctx.out << json{{"element", matrix_json(a.representative())},
                    {"reduced", q.left.vector()},
                    {"inverse_reduced", q.right.vector()},
                    {"quiddity", q.combined.vector()},
                    {"product", q.sign_defect ? "-Id" : "Id"},
                    {"index", index.to_string()},
                    {"index_twice", index.twice_value()},
                    {"dissection", json::parse(to_json(d))},
                    {"face_sizes", p.face_sizes}}
                   .dump()
            << '\n';
  } else {
    ctx.out << "element:         " << a.representative() << '\n'
            << "reduced:         " << q.left << '\n'
            << "inverse reduced: " << q.right << '\n'
            << "quiddity:        " << q.combined << " (element word, then inverse word)\n"
            << "product:         " << (q.sign_defect ? "-Id" : "Id") << '\n'
            << "index:           " << index.to_string() << '\n'
            << "dissection:      " << summary(d) << '\n';
  }
  return kExitOk;
}

int cmd_farey(Context& ctx, std::size_t order) {
  const Word w = farey_quiddity(order);
  const SolutionClass sc = solution_class(w);
  const bool positive = is_totally_positive(w);
  const auto n = static_cast<Entry>(w.size());
  if (ctx.as_json) {
    ctx.out << json{{"order", order}, {"word", w.vector()},  {"n", w.size()},
                    {"sum", w.sum()}, {"class", to_string(sc)}, {"totally_positive", positive},
                    {"sum_ok", w.sum() == 3 * n - 6}}
                   .dump()
            << '\n';
  } else {
    ctx.out << "word:             " << w << '\n'
            << "n:                " << w.size() << '\n'
            << "class:            " << to_string(sc) << '\n'
            << "totally positive: " << yes_no(positive) << '\n'
            << "sum:              " << w.sum() << " (3n - 6 = " << 3 * n - 6 << ")\n";
  }
  return kExitOk;
}

int cmd_reduce(Context& ctx, const std::string& text) {
  const Word w = Word::parse(text);
  ReductionCertificate cert;
  try {
    cert = reduce(w);
  } catch (const NotASolutionError& e) {
    const Word stuck(e.stuck_word());
    if (ctx.as_json) {
      ctx.out << json{{"word", w.vector()}, {"class", "NotASolution"}, {"stuck", stuck.vector()}}.dump() << '\n';
    } else {
      ctx.out << "word:  " << w << "\nclass: NotASolution\nstuck: " << stuck << '\n';
    }
    return kExitNegative;
  }
  if (ctx.as_json) {
    json steps = json::array();
    for (const auto& s : cert.steps) {
      json js{{"kind", s.kind == SurgeryKind::Type1 ? "type1" : "type2"}, {"position", s.position}, {"shift", s.shift}};
      if (s.kind == SurgeryKind::Type2) js["split"] = {s.split.first, s.split.second};
      steps.push_back(js);
    }
    ctx.out << json{{"word", w.vector()},
                    {"base", cert.base.vector()},
                    {"steps", steps},
                    {"type1_count", cert.type1_count},
                    {"type2_count", cert.type2_count}}
                   .dump()
            << '\n';
  } else {
    ctx.out << "base " << cert.base << '\n';
    Word cur = cert.base;
    for (const auto& s : cert.steps) {
      cur = apply_step(cur, s);
      if (s.kind == SurgeryKind::Type1) {
        ctx.out << "type1 at " << s.position;
      } else {
        ctx.out << "type2 at " << s.position << " split " << s.split.first << "+" << s.split.second;
      }
      if (s.shift) ctx.out << ", rotate " << s.shift;
      ctx.out << " -> " << cur << '\n';
    }
    ctx.out << "S=" << cert.type1_count << " R=" << cert.type2_count << '\n';
  }
  return kExitOk;
}

int cmd_probe(Context& ctx, std::size_t bound) {
  const auto records = conjecture_probe(bound, ctx.budget);
  std::size_t ambiguous = 0;
  for (const auto& r : records) ambiguous += r.dissections_found != 1;
  if (ctx.as_json) {
    json arr = json::array();
    for (const auto& r : records) arr.push_back(json::parse(to_json(r)));
    ctx.out << arr.dump() << '\n';
  } else {
    for (const auto& r : records) {
      ctx.out << r.quiddity << "  element " << r.element << "  reduced " << r.reduced << "  index "
              << HalfInteger::from_twice(r.index_twice).to_string() << "  dissections " << r.dissections_found
              << '\n';
    }
    ctx.out << records.size() << " elements, " << ambiguous << " with more than one dissection\n";
  }
  return kExitOk;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Positive words whose elementary-matrix product is Id, -Id or a square root of -Id", "quiddity"};
  app.require_subcommand(1);
  std::string format = "text";
  app.add_option("--format", format, "Output format")->check(CLI::IsMember({"text", "json"}));

  std::string word;
  auto* verify = app.add_subcommand("verify", "Classify a word and check its invariants");
  verify->add_option("word", word, "Comma-separated positive integers")->required();

  EnumerateOptions eo;
  auto* enumerate = app.add_subcommand("enumerate", "List or count the solutions of one length");
  enumerate->add_option("--problem", eo.problem, "1, 2 or 3")->required()->check(CLI::Range(1, 3));
  enumerate->add_option("--n", eo.n, "Word length")->required();
  enumerate->add_flag("--count", eo.count, "Print only the number of solutions");
  enumerate->add_option("--engine", eo.engine)->check(CLI::IsMember({"brute", "gen", "both"}));
  enumerate->add_option("--orbits", eo.orbits)->check(CLI::IsMember({"none", "rotation", "dihedral"}));
  enumerate->add_option("--threads", eo.threads, "Brute-force worker threads (0: hardware)");

  DissectOptions dso;
  auto* dissect = app.add_subcommand("dissect", "Build the 3d-dissection of a solution");
  dissect->add_option("word", dso.word)->required();
  dissect->add_option("--render", dso.render)->check(CLI::IsMember({"json", "dot", "svg"}));
  dissect->add_flag("--all", dso.all, "Every dissection with this quiddity");
  dissect->add_option("-o,--output", dso.output, "Write the rendering to a file");

  FriezeOptions fo;
  auto* frieze_cmd = app.add_subcommand("frieze", "Print the frieze of a Problem II or III solution");
  frieze_cmd->add_option("word", fo.word)->required();
  frieze_cmd->add_option("--rows", fo.rows, "Number of rows");
  frieze_cmd->add_option("--first-column", fo.first_column, "Word index shown first in the second row");

  std::string matrix;
  auto* decompose = app.add_subcommand("decompose", "Reduced word, quiddity and index of a matrix");
  decompose->add_option("matrix", matrix, "a,b,c,d with ad - bc = 1")->required();

  std::size_t order = 0;
  auto* farey = app.add_subcommand("farey", "Quiddity of the Farey triangulation of a given order");
  farey->add_option("order", order)->required();

  auto* reduce_cmd = app.add_subcommand("reduce", "Print the reduction certificate of a solution");
  reduce_cmd->add_option("word", word)->required();

  std::size_t bound = 8;
  auto* probe = app.add_subcommand("probe", "Count dissections for every element up to a quiddity length");
  probe->add_option("--bound", bound, "Maximal quiddity length");

  std::vector<const char*> argv{"quiddity"};
  for (const auto& a : args) argv.push_back(a.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::ParseError& e) {
    return app.exit(e, out, err) == 0 ? kExitOk : kExitUsage;
  }

  Context ctx{out, err, format == "json", Budget::from_environment()};
  try {
    if (*verify) return cmd_verify(ctx, word);
    if (*enumerate) return cmd_enumerate(ctx, eo);
    if (*dissect) return cmd_dissect(ctx, dso);
    if (*frieze_cmd) return cmd_frieze(ctx, fo);
    if (*decompose) return cmd_decompose(ctx, matrix);
    if (*farey) return cmd_farey(ctx, order);
    if (*reduce_cmd) return cmd_reduce(ctx, word);
    if (*probe) return cmd_probe(ctx, bound);
  } catch (const NotASolutionError& e) {
    err << "error: " << e.what() << '\n';
    return kExitNegative;
  } catch (const DomainError& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const BudgetExceeded& e) {
    err << "budget exceeded: " << e.what() << '\n';
    return kExitBudget;
  } catch (const Error& e) {
    err << "internal error: " << e.what() << '\n';
    return kExitNegative;
  }
  return kExitUsage;
}

}  // namespace quiddity
