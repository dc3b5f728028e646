#include <CLI11.hpp>
#include <iostream>

#include "park/schema.hpp"

namespace {

using namespace park;

struct CommonOpts {
  std::vector<std::string> lattice_files;
  std::string sig_file;
  std::string backend = "lattice";
  bool exhaustive = false;
  int samples = 1000;
  std::uint64_t seed = 1;
  int max_arity = 2;
  long budget_states = 65536;
  long budget_table = 4096;
};

void add_budget_flags(CLI::App* cmd, CommonOpts& o) {
  cmd->add_option("--budget-states", o.budget_states, "max states in a subset construction");
  cmd->add_option("--budget-table", o.budget_table, "max |L|^p entries per morphism table");
}

void apply_budgets(const CommonOpts& o) {
  set_state_budget(o.budget_states);
  set_table_budget(o.budget_table);
}

int run_catalog() {
  const auto& cat = catalog();
  std::cout << "catalog v" << catalog_version() << " (" << cat.size() << " schemas)\n";
  for (const auto& s : cat)
    std::cout << s.id << "\t" << rel_symbol(s.rel) << "\t" << s.role << "\t" << s.display << "\n";
  return 0;
}

int run_check_axioms(const CommonOpts& o, const std::vector<std::string>& only) {
  if (o.lattice_files.empty() && o.backend != "tree") {
    std::cerr << "check-axioms: need at least one --lattice file or --backend tree with --sig\n";
    return 2;
  }
  std::vector<const Schema*> schemas;
  if (only.empty()) {
    for (const auto& s : catalog())
      if (!s.demo) schemas.push_back(&s);
  } else {
    for (const auto& id : only) {
      const Schema* s = find_schema(id);
      if (!s) {
        std::cerr << "check-axioms: unknown schema '" << id << "'\n";
        return 2;
      }
      schemas.push_back(s);
    }
  }

  CheckOptions opt;
  opt.exhaustive = o.exhaustive;
  opt.samples = o.samples;
  opt.seed = o.seed;
  opt.max_arity = o.max_arity;

  bool any_cex = false;
  auto run_backend = [&](const auto& backend) {
    for (const Schema* s : schemas) {
      auto r = check_schema(*s, backend, opt);
      std::cout << format_result_line(r, backend) << "\n";
      if (!r.holds()) any_cex = true;
    }
  };

  for (const auto& path : o.lattice_files) {
    MonBackend mb{parse_lattice_file(path), nullptr};
    run_backend(mb);
  }
  if (o.backend == "tree") {
    if (o.sig_file.empty()) {
      std::cerr << "check-axioms: --backend tree needs --sig\n";
      return 2;
    }
    Signature sig = parse_signature_file(o.sig_file);
    if (!sig.alphabet() || sig.alphabet()->size() == 0) {
      std::cerr << "check-axioms: signature declares no symbols\n";
      return 2;
    }
    TreeBackend tb{sig.alphabet(), nullptr};
    run_backend(tb);
  }
  return any_cex ? 1 : 0;
}

int run_equiv(const CommonOpts& o, const std::string& t1_path, const std::string& t2_path) {
  if (o.sig_file.empty()) {
    std::cerr << "equiv: needs --sig\n";
    return 2;
  }
  Signature sig = parse_signature_file(o.sig_file);
  TermPtr t1 = parse_term_file(t1_path, sig);
  TermPtr t2 = parse_term_file(t2_path, sig);
  Sort s1 = sort_of(t1, sig), s2 = sort_of(t2, sig);
  if (!(s1 == s2)) {
    std::cerr << "equiv: sort mismatch: " << s1.source << " -> " << s1.target << " vs "
              << s2.source << " -> " << s2.target << "\n";
    return 2;
  }
  auto letters = atom_bindings(sig);
  TreeBackend tb{sig.alphabet(), &letters};
  TreeMorphism a = eval(t1, tb);
  TreeMorphism b = eval(t2, tb);

  bool equal = true;
  for (int i = 0; i < a.source && equal; ++i) {
    const Nfta& A = a.components[static_cast<size_t>(i)];
    const Nfta& B = b.components[static_cast<size_t>(i)];
    Nfta only_left = intersect(A, complement(B));
    Nfta only_right = intersect(B, complement(A));
    auto wl = shortest_accepted_tree(only_left);
    auto wr = shortest_accepted_tree(only_right);
    if (!wl && !wr) continue;
    equal = false;
    const Tree* w = wl && (!wr || wl->node_count() <= wr->node_count()) ? &*wl : &*wr;
    std::cout << "inequivalent (component " << (i + 1) << "): separating tree "
              << show_tree(*w, *sig.alphabet()) << " accepted only by the "
              << (w == &*wl ? "left" : "right") << " term\n";
  }
  if (equal) {
    std::cout << "equivalent\n";
    return 0;
  }
  return 1;
}

int run_eval(const CommonOpts& o, const std::string& term_path, const std::string& bindings_path) {
  if (o.backend == "tree") {
    if (o.sig_file.empty()) {
      std::cerr << "eval: tree backend needs --sig\n";
      return 2;
    }
    Signature sig = parse_signature_file(o.sig_file);
    TermPtr t = parse_term_file(term_path, sig);
    Sort s = sort_of(t, sig);
    auto letters = atom_bindings(sig);
    TreeBackend tb{sig.alphabet(), &letters};
    TreeMorphism v = eval(t, tb);
    std::cout << "sort: " << s.source << " -> " << s.target << "\n" << tb.show(v) << "\n";
    return 0;
  }
  if (o.lattice_files.size() != 1) {
    std::cerr << "eval: lattice backend needs exactly one --lattice file\n";
    return 2;
  }
  LatticePtr lat = parse_lattice_file(o.lattice_files[0]);
  Signature sig = o.sig_file.empty() ? Signature{} : parse_signature_file(o.sig_file);
  TermPtr t = parse_term_file(term_path, sig);
  Sort s = sort_of(t, sig);
  std::map<std::string, Morphism> letters;
  if (!bindings_path.empty()) letters = parse_bindings_file(bindings_path, lat);
  MonBackend mb{lat, &letters};
  Morphism v = eval(t, mb);
  std::cout << "sort: " << s.source << " -> " << s.target << "\n" << v.to_string() << "\n";
  return 0;
}

int run_translate(const CommonOpts& o, const std::string& direction, const std::string& term_path) {
  if (o.sig_file.empty()) {
    std::cerr << "translate: needs --sig\n";
    return 2;
  }
  Signature sig = parse_signature_file(o.sig_file);
  TermPtr t = parse_term_file(term_path, sig);
  TermPtr out = direction == "to-star" ? to_star_form(t, sig) : to_dagger_form(t, sig);
  std::string printed = pretty_print(out);
  if (!term_equal(parse_term(printed, sig), out)) throw Error("internal: print/parse mismatch");
  std::cout << printed << "\n";
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"workbench for iteration and residuation laws over finite-lattice function\n"
               "theories and regular tree languages"};
  app.require_subcommand(1);

  CommonOpts o;
  std::vector<std::string> only_schemas;
  std::string t1, t2, term_path, bindings_path, direction;

  CLI::App* cat = app.add_subcommand("catalog", "list the axiom catalog");
  (void)cat;

  CLI::App* check = app.add_subcommand("check-axioms", "check every schema over the backends");
  check->add_option("--lattice", o.lattice_files, "lattice file (repeatable)");
  check->add_option("--sig", o.sig_file, "signature file (tree backend)");
  check->add_option("--backend", o.backend, "extra backend: lattice|tree")
      ->check(CLI::IsMember({"lattice", "tree"}));
  check->add_flag("--exhaustive", o.exhaustive, "enumerate where the budget allows");
  check->add_option("--samples", o.samples, "samples per arity assignment (default 1000)");
  check->add_option("--seed", o.seed, "PRNG seed (default 1)");
  check->add_option("--max-arity", o.max_arity, "bound for the symbolic arities (default 2)");
  check->add_option("--schema", only_schemas, "check only this schema id (repeatable)");
  add_budget_flags(check, o);

  CLI::App* equiv = app.add_subcommand("equiv", "decide term equivalence over regular tree languages");
  equiv->add_option("t1", t1, "first term file")->required();
  equiv->add_option("t2", t2, "second term file")->required();
  equiv->add_option("--sig", o.sig_file, "signature file")->required();
  add_budget_flags(equiv, o);

  CLI::App* ev = app.add_subcommand("eval", "evaluate a term and print the denoted morphism");
  ev->add_option("term", term_path, "term file")->required();
  ev->add_option("--lattice", o.lattice_files, "lattice file");
  ev->add_option("--sig", o.sig_file, "signature file");
  ev->add_option("--bindings", bindings_path, "letter bindings (lattice backend)");
  ev->add_option("--backend", o.backend, "lattice|tree")
      ->check(CLI::IsMember({"lattice", "tree"}));
  add_budget_flags(ev, o);

  CLI::App* tr = app.add_subcommand("translate", "rewrite between dagger and star fragments");
  tr->add_option("direction", direction, "to-star|to-dagger")
      ->required()
      ->check(CLI::IsMember({"to-star", "to-dagger"}));
  tr->add_option("term", term_path, "term file")->required();
  tr->add_option("--sig", o.sig_file, "signature file")->required();
  add_budget_flags(tr, o);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    apply_budgets(o);
    if (app.got_subcommand(cat)) return run_catalog();
    if (app.got_subcommand(check)) return run_check_axioms(o, only_schemas);
    if (app.got_subcommand(equiv)) return run_equiv(o, t1, t2);
    if (app.got_subcommand(ev)) return run_eval(o, term_path, bindings_path);
    if (app.got_subcommand(tr)) return run_translate(o, direction, term_path);
  } catch (const park::Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 2;
}
