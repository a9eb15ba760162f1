#include "cli.hpp"

#include <algorithm>
#include <cctype>
#include <iostream>

#include "CLI11.hpp"
#include "autxy/text.hpp"
#include "json.hpp"

namespace autxy {

namespace {

using nlohmann::json;

struct Ctx {
  int p = 0;
  std::string over = "R";
  std::string format = "text";
  long long bound = 200;

  RingTag tag() const { return over == "K" ? RingTag::K : RingTag::R; }
  bool is_json() const { return format == "json"; }
};

json word_json(const Word& w) {
  json arr = json::array();
  for (const auto& l : w.letters)
    arr.push_back(
        {{"tag", l.tag == LetterTag::A ? "A" : "B"}, {"auto", str(l.value)}});
  return arr;
}

const char* position_name(const LetterVerdict& v) {
  if (v.tag == LetterTag::A) return "-";
  switch (v.position) {
    case LetterPosition::Head:
      return "head";
    case LetterPosition::Tail:
      return "tail";
    default:
      return "interior";
  }
}

json verdicts_json(const std::vector<LetterVerdict>& vs) {
  json arr = json::array();
  for (const auto& v : vs)
    arr.push_back({{"index", v.index},
                   {"tag", v.tag == LetterTag::A ? "A" : "B"},
                   {"position", position_name(v)},
                   {"pass", v.pass},
                   {"detail", v.detail}});
  return arr;
}

void print_verdicts(std::ostream& out, const std::vector<LetterVerdict>& vs) {
  for (const auto& v : vs)
    out << "letter " << v.index << " [" << (v.tag == LetterTag::A ? "A" : "B")
        << " " << position_name(v) << "]: " << (v.pass ? "pass" : "fail")
        << " - " << v.detail << "\n";
}

int word_length(const Word& w) {
  if (w.size() == 1 && affine_triangular_oracles().in_ab(w.letters[0].value))
    return 0;
  return static_cast<int>(w.size());
}

int cmd_classify(const Ctx& c, const std::string& s, std::ostream& out) {
  ClassFlags f = classify(parse_auto(s, c.p, c.tag()));
  if (c.is_json()) {
    out << json{{"additive", f.additive},
                {"affine", f.affine},
                {"diff_affine", f.diff_affine},
                {"elementary", f.elementary},
                {"geom_affine", f.geom_affine},
                {"linear", f.linear},
                {"translation", f.translation},
                {"triangular", f.triangular}}
               .dump(2)
        << "\n";
  } else {
    out << "translation: " << (f.translation ? "true" : "false") << "\n"
        << "linear: " << (f.linear ? "true" : "false") << "\n"
        << "affine: " << (f.affine ? "true" : "false") << "\n"
        << "elementary: " << (f.elementary ? "true" : "false") << "\n"
        << "triangular: " << (f.triangular ? "true" : "false") << "\n"
        << "additive: " << (f.additive ? "true" : "false") << "\n"
        << "geom_affine: " << (f.geom_affine ? "true" : "false") << "\n"
        << "diff_affine: " << (f.diff_affine ? "true" : "false") << "\n";
  }
  return 0;
}

int cmd_compose(const Ctx& c, const std::string& s1, const std::string& s2,
                std::ostream& out) {
  Auto a = parse_auto(s1, c.p, c.tag());
  Auto b = parse_auto(s2, c.p, c.tag());
  std::string r = str(a * b);
  if (c.is_json())
    out << json{{"result", r}}.dump(2) << "\n";
  else
    out << r << "\n";
  return 0;
}

int cmd_invert(const Ctx& c, const std::string& s, std::ostream& out) {
  std::string r = str(invert(parse_auto(s, c.p, c.tag())));
  if (c.is_json())
    out << json{{"result", r}}.dump(2) << "\n";
  else
    out << r << "\n";
  return 0;
}

int cmd_jacobian(const Ctx& c, const std::string& s, std::ostream& out) {
  Jacobian j = jacobian(parse_auto(s, c.p, c.tag()));
  if (c.is_json()) {
    json m = json::array(
        {json::array({str(j.m[0][0]), str(j.m[0][1])}),
         json::array({str(j.m[1][0]), str(j.m[1][1])})});
    out << json{{"m", m}, {"det", str(j.det())}}.dump(2) << "\n";
  } else {
    out << "J[1][1]: " << str(j.m[0][0]) << "\n"
        << "J[1][2]: " << str(j.m[0][1]) << "\n"
        << "J[2][1]: " << str(j.m[1][0]) << "\n"
        << "J[2][2]: " << str(j.m[1][1]) << "\n"
        << "det: " << str(j.det()) << "\n";
  }
  return 0;
}

int cmd_decompose(const Ctx& c, const std::string& s, std::ostream& out,
                  std::ostream& err) {
  DecomposeResult r = decompose(parse_auto(s, c.p, c.tag()));
  if (r.status != DecomposeStatus::Ok) {
    err << "NOT_AUTOMORPHISM\n";
    return 1;
  }
  if (c.is_json()) {
    json steps = json::array();
    for (const auto& st : r.steps)
      steps.push_back({{"component", st.reduced == Var::X ? "x" : "y"},
                       {"alpha", str(st.alpha)},
                       {"d", st.d}});
    out << json{{"word", word_json(r.word)},
                {"length", word_length(r.word)},
                {"steps", steps}}
               .dump(2)
        << "\n";
  } else {
    out << "word: " << str(r.word) << "\n";
    out << "length: " << word_length(r.word) << "\n";
    for (std::size_t i = 0; i < r.steps.size(); ++i)
      out << "step " << i + 1 << ": component "
          << (r.steps[i].reduced == Var::X ? "x" : "y")
          << ", alpha = " << str(r.steps[i].alpha) << ", d = " << r.steps[i].d
          << "\n";
  }
  return 0;
}

int cmd_length(const Ctx& c, const std::string& s, std::ostream& out) {
  int n = amalgam_length(parse_auto(s, c.p, c.tag()));
  if (c.is_json())
    out << json{{"length", n}}.dump(2) << "\n";
  else
    out << n << "\n";
  return 0;
}

int cmd_equivalent(const Ctx& c, const std::string& s1, const std::string& s2,
                   std::ostream& out) {
  Word a = parse_word(s1, c.p), b = parse_word(s2, c.p);
  auto etas = equivalent(a, b, affine_triangular_oracles());
  if (c.is_json()) {
    json es = json::array();
    if (etas)
      for (const auto& e : *etas) es.push_back(str(e));
    out << json{{"equivalent", etas.has_value()}, {"etas", es}}.dump(2) << "\n";
  } else {
    out << "equivalent: " << (etas ? "true" : "false") << "\n";
    if (etas)
      for (std::size_t i = 0; i < etas->size(); ++i)
        out << "eta " << i + 1 << ": " << str((*etas)[i]) << "\n";
  }
  return etas ? 0 : 1;
}

int cmd_pstable(const Ctx& c, const std::string& s, std::ostream& out) {
  PStableSet I = parse_pset(s, c.p);
  StabilityReport r = is_p_stable(I, c.bound);
  if (c.is_json()) {
    json j{{"stable", r.stable},
           {"exact", r.exact},
           {"audit_bound", r.audit_bound},
           {"certificate", r.certificate}};
    j["counterexample"] =
        r.counterexample
            ? json::array({r.counterexample->first, r.counterexample->second})
            : json();
    out << j.dump(2) << "\n";
  } else {
    out << "stable: " << (r.stable ? "true" : "false") << "\n"
        << "exact: " << (r.exact ? "true" : "false") << "\n";
    if (!r.exact) out << "audit_bound: " << r.audit_bound << "\n";
    if (!r.certificate.empty()) out << "certificate: " << r.certificate << "\n";
    if (r.counterexample)
      out << "counterexample: n = " << r.counterexample->first
          << ", k = " << r.counterexample->second << "\n";
  }
  return 0;
}

int cmd_in_ai(const Ctx& c, const std::string& s, const std::string& iset,
              std::ostream& out) {
  PStableSet I = parse_pset(iset, c.p);
  if (!is_p_stable(I, c.bound).stable)
    throw std::domain_error("exponent set is not p-stable");
  TriangularSplit r = triangular_in_AI(parse_auto(s, c.p, RingTag::K), I);
  if (c.is_json()) {
    json j{{"in", r.in_subgroup}};
    j["offending_exponent"] =
        r.offending_exponent ? json(*r.offending_exponent) : json();
    j["shear"] = r.shear_part ? json(str(*r.shear_part)) : json();
    j["affine"] = r.affine_part ? json(str(*r.affine_part)) : json();
    out << j.dump(2) << "\n";
  } else {
    out << "in: " << (r.in_subgroup ? "true" : "false") << "\n";
    if (r.offending_exponent)
      out << "offending_exponent: " << *r.offending_exponent << "\n";
    if (r.shear_part) out << "shear: " << str(*r.shear_part) << "\n";
    if (r.affine_part) out << "affine: " << str(*r.affine_part) << "\n";
  }
  return r.in_subgroup ? 0 : 1;
}

int cmd_sigma(const Ctx& c, const std::string& action, const std::string& aS,
              const std::string& pS, const std::string& qS, std::ostream& out) {
  SigmaParams s = make_sigma_params(parse_tpoly(aS, c.p), parse_rpoly(pS, c.p),
                                    parse_rpoly(qS, c.p));
  if (action == "build") {
    SigmaBuild b = make_sigma(s);
    if (c.is_json())
      out << json{{"sigma", str(b.sigma)}}.dump(2) << "\n";
    else
      out << str(b.sigma) << "\n";
    return 0;
  }
  if (action == "witness") {
    SigmaBuild b = make_sigma(s);
    if (c.is_json())
      out << json{{"word", word_json(b.letters)}}.dump(2) << "\n";
    else
      out << str(b.letters) << "\n";
    return 0;
  }
  bool v;
  if (action == "tame")
    v = sigma_is_tame(s);
  else if (action == "diffaffine")
    v = sigma_is_diff_affine(s);
  else if (action == "ht")
    v = sigma_in_ht(s);
  else
    throw std::domain_error("unknown sigma action '" + action + "'");
  if (c.is_json())
    out << json{{action, v}}.dump(2) << "\n";
  else
    out << action << ": " << (v ? "true" : "false") << "\n";
  return 0;
}

int cmd_witness(const Ctx& c, const std::string& iS, const std::string& jS,
                const std::string& aS, std::ostream& out) {
  WitnessReport r = nonnormality_witness(parse_pset(iS, c.p),
                                         parse_pset(jS, c.p),
                                         parse_tpoly(aS, c.p));
  if (c.is_json()) {
    out << json{{"verdict", r.in_subgroup ? "IN" : "NOT_IN"},
                {"n", r.n},
                {"g", str(r.g)},
                {"t", str(r.t)},
                {"conjugate", str(r.h)},
                {"word", word_json(r.word)},
                {"letters", verdicts_json(r.verdicts)}}
               .dump(2)
        << "\n";
  } else {
    out << "verdict: " << (r.in_subgroup ? "IN" : "NOT_IN") << "\n"
        << "n: " << r.n << "\n"
        << "g: " << str(r.g) << "\n"
        << "t: " << str(r.t) << "\n"
        << "conjugate: " << str(r.h) << "\n"
        << "word: " << str(r.word) << "\n";
    print_verdicts(out, r.verdicts);
  }
  return 0;
}

std::vector<std::string> tokenize(const std::string& line) {
  std::vector<std::string> toks;
  std::string cur;
  bool quoted = false;
  char q = 0;
  for (char ch : line) {
    if (q) {
      if (ch == q)
        q = 0;
      else
        cur += ch;
    } else if (ch == '\'' || ch == '"') {
      q = ch;
      quoted = true;
    } else if (std::isspace(static_cast<unsigned char>(ch))) {
      if (!cur.empty() || quoted) toks.push_back(cur);
      cur.clear();
      quoted = false;
    } else {
      cur += ch;
    }
  }
  if (!cur.empty() || quoted) toks.push_back(cur);
  return toks;
}

int cmd_batch(std::istream& in, std::ostream& out, std::ostream& err) {
  int worst = 0;
  std::string line;
  while (std::getline(in, line)) {
    std::vector<std::string> toks = tokenize(line);
    if (toks.empty() || toks[0].empty() || toks[0][0] == '#') continue;
    if (toks[0] == "batch") {
      err << "batch lines cannot nest\n";
      worst = std::max(worst, 2);
      continue;
    }
    worst = std::max(worst, run_cli(toks, out, err));
  }
  return worst;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out,
            std::ostream& err) {
  CLI::App app{"exact automorphisms of R[x,y] over R = F_p[t]"};
  app.name("autxy");

  Ctx ctx;
  app.add_option("--p", ctx.p, "characteristic, 0 or a prime");
  app.add_option("--over", ctx.over, "coefficient ring of the input")
      ->check(CLI::IsMember({"R", "K"}));
  app.add_option("--format", ctx.format, "output format")
      ->check(CLI::IsMember({"text", "json"}));
  app.add_option("--bound", ctx.bound, "audit bound for symbolic sets");

  std::string s1, s2, iS, jS, aS, PS, QS, action;

  auto* c_classify = app.add_subcommand("classify", "subgroup ladder flags");
  c_classify->add_option("auto", s1)->required();
  auto* c_compose = app.add_subcommand("compose", "group product a*b, i.e. a after b");
  c_compose->add_option("a", s1)->required();
  c_compose->add_option("b", s2)->required();
  auto* c_invert = app.add_subcommand("invert", "inverse automorphism");
  c_invert->add_option("auto", s1)->required();
  auto* c_jacobian = app.add_subcommand("jacobian", "Jacobian matrix and determinant");
  c_jacobian->add_option("auto", s1)->required();
  auto* c_decompose =
      app.add_subcommand("decompose", "van der Kulk word and reduction trace");
  c_decompose->add_option("auto", s1)->required();
  auto* c_length = app.add_subcommand("length", "amalgam length of the reduced word");
  c_length->add_option("auto", s1)->required();
  auto* c_equivalent =
      app.add_subcommand("equivalent", "conjugating chain linking two reduced words");
  c_equivalent->add_option("word1", s1)->required();
  c_equivalent->add_option("word2", s2)->required();
  auto* c_pstable = app.add_subcommand("pstable", "p-stability with certificate");
  c_pstable->add_option("set", s1)->required();
  auto* c_in_ai =
      app.add_subcommand("in-ai", "triangular membership in the subgroup of I");
  c_in_ai->add_option("auto", s1)->required();
  c_in_ai->add_option("--I", iS, "exponent set")->required();
  auto* c_sigma = app.add_subcommand("sigma", "Nagata-type sigma(a, P, Q)");
  c_sigma->add_option("action", action)
      ->required()
      ->check(CLI::IsMember({"build", "tame", "diffaffine", "ht", "witness"}));
  c_sigma->add_option("--a", aS)->required();
  c_sigma->add_option("--P", PS)->required();
  c_sigma->add_option("--Q", QS)->required();
  auto* c_witness = app.add_subcommand("witness", "non-normality witness g t g^-1");
  c_witness->add_option("--I", iS)->required();
  c_witness->add_option("--J", jS)->required();
  c_witness->add_option("--a", aS)->required();
  auto* c_batch = app.add_subcommand("batch", "run one command per stdin line");

  for (CLI::App* sc : app.get_subcommands(nullptr)) sc->fallthrough();
  app.require_subcommand(1);

  std::vector<std::string> rev(args.rbegin(), args.rend());
  try {
    app.parse(rev);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e, out, err);
    return code == 0 ? 0 : 2;
  }

  if (!CharSpec{ctx.p}.valid()) {
    err << "error: --p must be 0 or a prime\n";
    return 2;
  }

  try {
    if (c_classify->parsed()) return cmd_classify(ctx, s1, out);
    if (c_compose->parsed()) return cmd_compose(ctx, s1, s2, out);
    if (c_invert->parsed()) return cmd_invert(ctx, s1, out);
    if (c_jacobian->parsed()) return cmd_jacobian(ctx, s1, out);
    if (c_decompose->parsed()) return cmd_decompose(ctx, s1, out, err);
    if (c_length->parsed()) return cmd_length(ctx, s1, out);
    if (c_equivalent->parsed()) return cmd_equivalent(ctx, s1, s2, out);
    if (c_pstable->parsed()) return cmd_pstable(ctx, s1, out);
    if (c_in_ai->parsed()) return cmd_in_ai(ctx, s1, iS, out);
    if (c_sigma->parsed()) return cmd_sigma(ctx, action, aS, PS, QS, out);
    if (c_witness->parsed()) return cmd_witness(ctx, iS, jS, aS, out);
    if (c_batch->parsed()) return cmd_batch(std::cin, out, err);
  } catch (const ParseError& e) {
    err << "parse error: " << e.what() << "\n";
    return 2;
  } catch (const std::domain_error& e) {
    err << "error: " << e.what() << "\n";
    return 1;
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << "\n";
    return 1;
  }
  err << "no command\n";
  return 2;
}

}  // namespace autxy
