// rolelogic: command-line front end.
//
// Exit codes: 0 ok / true / equivalent / satisfiable, 1 false / counterexample
// / unsat, 2 usage, parse or evaluation error.

#include <fstream>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "rolelogic/rolelogic.hpp"

using namespace rolelogic;

namespace {

std::string slurp(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error("cannot read " + path);
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

Dialect dialect_for(const std::string& path, const std::string& flag) {
  if (flag == "fo") return Dialect::Fo;
  if (flag == "role") return Dialect::Role;
  if (!flag.empty()) throw Error("unknown dialect " + flag);
  auto dot = path.rfind('.');
  return dot != std::string::npos && path.substr(dot) == ".fo" ? Dialect::Fo : Dialect::Role;
}

struct Input {
  FormulaFile file;
  const role::Formula* role() const { return std::get_if<role::Formula>(&file.formula); }
};

Input load(const std::string& path, const std::string& dialect, const Signature* base = nullptr) {
  return {parse_formula_file(slurp(path), dialect_for(path, dialect), base)};
}

// First-order form of the input; roles are desugared and read at c1 = x, c2 = y.
fo::Formula as_fo(const Input& in) {
  if (const auto* r = in.role()) return rl2_to_fo(desugar(*r, in.file.sig), "x", "y", in.file.sig);
  return std::get<fo::Formula>(in.file.formula);
}

Valuation parse_bindings(const std::string& text, const Model& m) {
  Valuation v;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    auto eq = item.find('=');
    if (eq == std::string::npos) throw Error("binding " + item + " is not of the form x=d");
    int d = m.element(item.substr(eq + 1));
    if (d < 0) throw Error("unknown element " + item.substr(eq + 1));
    v[item.substr(0, eq)] = d;
  }
  return v;
}

int element_of(const Model& m, const std::string& name) {
  int d = m.element(name);
  if (d < 0) throw Error("unknown element " + name);
  return d;
}

Signature merge(const Signature& a, const Signature& b) {
  Signature out = a;
  for (const auto& u : b.unaries())
    if (!out.has(u)) out.add_unary(u);
  for (const auto& f : b.binaries())
    if (!out.has(f)) out.add_binary(f);
  for (const auto& n : b.nonsplittable()) out.set_nonsplittable(n);
  for (const auto& u : a.unaries())
    if (b.has_binary(u)) throw Error("predicate " + u + " has different arities in the two files");
  for (const auto& f : a.binaries())
    if (b.has_unary(f)) throw Error("predicate " + f + " has different arities in the two files");
  return out;
}

void print_stars(std::ostream& out, const std::string& title, const std::vector<GenStar>& stars) {
  out << "# " << title << ": " << stars.size() << " star" << (stars.size() == 1 ? "" : "s") << "\n";
  for (const auto& s : stars) out << "#   " << print(star_to_fo(s)) << "\n";
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Role logic toolkit: evaluation, normal forms and spatial conjunction elimination"};
  app.require_subcommand(1);

  std::string formula, dialect, model_path, e1, e2, binds, f2;
  int max_domain = 3, count_limit = 4;
  bool show_stars = false, full_universe = false;

  auto add_formula = [&](CLI::App* sub) {
    sub->add_option("--formula", formula, "Formula file")->required()->check(CLI::ExistingFile);
    sub->add_option("--dialect", dialect, "role or fo (default: .fo files are fo)");
  };

  auto* parse = app.add_subcommand("parse", "Parse and print a formula");
  add_formula(parse);
  auto* eval = app.add_subcommand("eval", "Evaluate a formula on a model");
  add_formula(eval);
  eval->add_option("--model", model_path, "Model file")->required()->check(CLI::ExistingFile);
  eval->add_option("--e1", e1, "First environment component (role formulas)");
  eval->add_option("--e2", e2, "Second component, defaults to --e1");
  eval->add_option("--bind", binds, "Variable bindings x=d,... (first-order formulas)");
  auto* des = app.add_subcommand("desugar", "Expand records and derived forms");
  add_formula(des);
  auto* norm = app.add_subcommand("normalize", "Depth-one normal form, one star per line");
  add_formula(norm);
  norm->add_flag("--full-universe", full_universe, "Do not restrict stars to the formula's atoms");
  norm->add_option("--count-limit", count_limit, "Largest count expanded into compositions");
  auto* elim = app.add_subcommand("eliminate", "Remove spatial conjunctions");
  add_formula(elim);
  elim->add_flag("--show-stars", show_stars, "Print the stars of each step as comments");
  elim->add_flag("--full-universe", full_universe, "Do not restrict stars to the operands' atoms");
  elim->add_option("--count-limit", count_limit, "Largest count expanded into compositions");
  auto* equiv = app.add_subcommand("equiv", "Bounded equivalence check");
  add_formula(equiv);
  equiv->add_option("--f2", f2, "Second formula file")->required()->check(CLI::ExistingFile);
  equiv->add_option("--max-domain", max_domain, "Largest domain size")->check(CLI::Range(1, 8));
  auto* sat = app.add_subcommand("sat", "Bounded satisfiability check");
  add_formula(sat);
  sat->add_option("--max-domain", max_domain, "Largest domain size")->check(CLI::Range(1, 8));
  auto* roles = app.add_subcommand("roles", "Role declarations");
  roles->require_subcommand(1);
  std::string role_path;
  auto* translate_cmd = roles->add_subcommand("translate", "Translate role declarations to formulas");
  translate_cmd->add_option("file", role_path, "Role file")->required()->check(CLI::ExistingFile);
  auto* sol = app.add_subcommand("to-sol", "Translate spatial conjunction and lfp to second-order logic");
  add_formula(sol);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }

  try {
    if (parse->parsed()) {
      Input in = load(formula, dialect);
      std::cout << print(in.file.formula) << "\n";
      return 0;
    }
    if (eval->parsed()) {
      Input in = load(formula, dialect);
      Model m = parse_model(slurp(model_path), in.file.sig);
      bool r;
      if (const auto* rf = in.role()) {
        if (e1.empty()) throw Error("role formulas need --e1");
        int d1 = element_of(m, e1), d2 = element_of(m, e2.empty() ? e1 : e2);
        r = eval_role(desugar(*rf, m.sig()), m, {d1, d2});
      } else {
        Valuation v = binds.empty() ? Valuation{} : parse_bindings(binds, m);
        for (const auto& x : fo::free_vars(std::get<fo::Formula>(in.file.formula)))
          if (!v.count(x)) throw Error("unbound variable " + x + " (use --bind)");
        r = eval_any(in.file.formula, m, v);
      }
      std::cout << (r ? "true" : "false") << "\n";
      return r ? 0 : 1;
    }
    if (des->parsed()) {
      Input in = load(formula, dialect);
      const auto* rf = in.role();
      if (!rf) throw Error("desugar applies to role formulas");
      std::cout << print(desugar(*rf, in.file.sig)) << "\n";
      return 0;
    }
    if (norm->parsed()) {
      Input in = load(formula, dialect);
      NfOptions opts;
      opts.count_limit = count_limit;
      opts.project = !full_universe;
      auto stars = depth_one_nf(as_fo(in), in.file.sig, opts);
      if (stars.empty()) std::cout << "false\n";
      for (const auto& s : stars) std::cout << print(star_to_fo(s)) << "\n";
      return 0;
    }
    if (elim->parsed()) {
      Input in = load(formula, dialect);
      EliminationOptions opts;
      opts.count_limit = count_limit;
      opts.project = !full_universe;
      EliminationTrace trace;
      fo::Formula out = in.role() ? eliminate_spatial(*in.role(), in.file.sig, opts, &trace)
                                  : eliminate_spatial(as_fo(in), in.file.sig, opts, &trace);
      if (show_stars) {
        for (std::size_t i = 0; i < trace.steps.size(); ++i) {
          const auto& st = trace.steps[i];
          std::cout << "# step " << i + 1 << ": (" << print(st.left) << ") * (" << print(st.right) << ")\n";
          print_stars(std::cout, "left", st.left_stars);
          print_stars(std::cout, "right", st.right_stars);
          print_stars(std::cout, "combined", st.result);
        }
      }
      std::cout << print(out) << "\n";
      return 0;
    }
    if (equiv->parsed()) {
      Input a = load(formula, dialect);
      Input b = load(f2, dialect);
      if (!b.file.declared_sig) b = load(f2, dialect, &a.file.sig);
      Signature sig = merge(a.file.sig, b.file.sig);
      Verdict v = bounded_equiv(a.file.formula, b.file.formula, max_domain, sig);
      std::cout << v.describe();
      return v.holds() ? 0 : 1;
    }
    if (sat->parsed()) {
      Input in = load(formula, dialect);
      Verdict v = bounded_sat(in.file.formula, max_domain, in.file.sig);
      std::cout << v.describe();
      return v.holds() ? 0 : 1;
    }
    if (translate_cmd->parsed()) {
      RoleFile rf = parse_role_file(slurp(role_path));
      for (const auto& d : rf.roles) std::cout << "let " << d.name << " = " << print(translate(d, rf.sig)) << ";\n";
      return 0;
    }
    if (sol->parsed()) {
      Input in = load(formula, dialect);
      std::cout << print(to_sol(as_fo(in), in.file.sig)) << "\n";
      return 0;
    }
  } catch (const std::exception& e) {
    std::cerr << "rolelogic: " << e.what() << "\n";
    return 2;
  }
  return 2;
}
