#include "park/schema.hpp"

namespace park {

namespace {

using Insts = std::vector<SchemaInstance>;

SchemaInstance inst(std::vector<SchemaMetaVar> vars, Rel rel, TermPtr l, TermPtr r) {
  return {std::move(vars), rel, std::move(l), std::move(r), {}};
}

// 0_n (+) 1_p : p -> n+p, the parameter injection used by the star laws.
TermPtr params_into(int n, int p) { return sum(zero(n), id(p)); }
// 1_n (+) 0_p : n -> n+p, the recursion-block injection.
TermPtr block_into(int n, int p) { return sum(id(n), zero(p)); }

std::vector<Schema> build_catalog() {
  std::vector<Schema> cat;
  auto add = [&](Schema s) { cat.push_back(std::move(s)); };

  // Category and coproduct laws.
  add({"THEORY1", Rel::Eq, "composition associativity", "(f · g) · h = f · (g · h)",
       "nmpq", false, [](const ArityEnv& e) -> Insts {
         return {inst({{"f", {e.m, e.n}}, {"g", {e.n, e.p}}, {"h", {e.p, e.q}}}, Rel::Eq,
                      comp(comp(letter("f"), letter("g")), letter("h")),
                      comp(letter("f"), comp(letter("g"), letter("h"))))};
       }});
  add({"THEORY2", Rel::Eq, "identity laws", "1_n · f = f = f · 1_p", "np", false,
       [](const ArityEnv& e) -> Insts {
         return {inst({{"f", {e.n, e.p}}}, Rel::Eq, comp(id(e.n), letter("f")), letter("f")),
                 inst({{"f", {e.n, e.p}}}, Rel::Eq, comp(letter("f"), id(e.p)), letter("f"))};
       }});
  add({"THEORY3", Rel::Eq, "injections project tuplings",
       "i_n · ⟨f_1, …, f_n⟩ = f_i", "np", false, [](const ArityEnv& e) -> Insts {
         Insts out;
         std::vector<SchemaMetaVar> vars;
         std::vector<TermPtr> kids;
         for (int i = 1; i <= e.n; ++i) {
           vars.push_back({"f" + std::to_string(i), {1, e.p}});
           kids.push_back(letter("f" + std::to_string(i)));
         }
         for (int i = 1; i <= e.n; ++i)
           out.push_back(inst(vars, Rel::Eq, comp(inj(i, e.n), tup(kids, e.p)),
                              letter("f" + std::to_string(i))));
         return out;
       }});
  add({"THEORY4", Rel::Eq, "tupling of projections",
       "⟨1_n · f, …, n_n · f⟩ = f", "np", false,
       [](const ArityEnv& e) -> Insts {
         std::vector<TermPtr> kids;
         for (int i = 1; i <= e.n; ++i) kids.push_back(comp(inj(i, e.n), letter("f")));
         return {inst({{"f", {e.n, e.p}}}, Rel::Eq, tup(kids, e.p), letter("f"))};
       }});
  add({"THEORY5", Rel::Eq, "the identity 1 -> 1 is the first injection", "\U0001d7cf_1 = 1_1", "",
       false, [](const ArityEnv&) -> Insts {
         return {inst({}, Rel::Eq, id(1), inj(1, 1))};
       }});

  // Semilattice laws.
  add({"EQ1", Rel::Eq, "join associativity", "(f ∨ g) ∨ h = f ∨ (g ∨ h)", "np",
       false, [](const ArityEnv& e) -> Insts {
         return {inst({{"f", {e.n, e.p}}, {"g", {e.n, e.p}}, {"h", {e.n, e.p}}}, Rel::Eq,
                      join_term(join_term(letter("f"), letter("g")), letter("h")),
                      join_term(letter("f"), join_term(letter("g"), letter("h"))))};
       }});
  add({"EQ2", Rel::Eq, "join commutativity", "f ∨ g = g ∨ f", "np", false,
       [](const ArityEnv& e) -> Insts {
         return {inst({{"f", {e.n, e.p}}, {"g", {e.n, e.p}}}, Rel::Eq,
                      join_term(letter("f"), letter("g")), join_term(letter("g"), letter("f")))};
       }});
  add({"EQ3", Rel::Eq, "join idempotence", "f ∨ f = f", "np", false,
       [](const ArityEnv& e) -> Insts {
         return {inst({{"f", {e.n, e.p}}}, Rel::Eq, join_term(letter("f"), letter("f")),
                      letter("f"))};
       }});
  add({"EQ4", Rel::Leq, "injections subdistribute over join",
       "i_n · (f ∨ g) ≤ (i_n · f) ∨ (i_n · g)", "np", false,
       [](const ArityEnv& e) -> Insts {
         Insts out;
         std::vector<SchemaMetaVar> vars{{"f", {e.n, e.p}}, {"g", {e.n, e.p}}};
         for (int i = 1; i <= e.n; ++i)
           out.push_back(inst(vars, Rel::Leq,
                              comp(inj(i, e.n), join_term(letter("f"), letter("g"))),
                              join_term(comp(inj(i, e.n), letter("f")),
                                        comp(inj(i, e.n), letter("g")))));
         return out;
       }});
  add({"EQ5", Rel::Leq, "composition is monotone",
       "f · g ≤ (f ∨ f′) · (g ∨ g′)", "npq", false,
       [](const ArityEnv& e) -> Insts {
         return {inst({{"f", {e.n, e.p}}, {"f2", {e.n, e.p}}, {"g", {e.p, e.q}}, {"g2", {e.p, e.q}}},
                      Rel::Leq, comp(letter("f"), letter("g")),
                      comp(join_term(letter("f"), letter("f2")),
                           join_term(letter("g"), letter("g2"))))};
       }});

  // Residuation laws.
  add({"EQ6", Rel::Leq, "residual counit", "(h ⇐ g) · g ≤ h", "npq", false,
       [](const ArityEnv& e) -> Insts {
         return {inst({{"g", {e.p, e.q}}, {"h", {e.n, e.q}}}, Rel::Leq,
                      comp(resid(letter("h"), letter("g")), letter("g")), letter("h"))};
       }});
  add({"EQ7", Rel::Leq, "residual unit", "f ≤ (f · g) ⇐ g", "npq", false,
       [](const ArityEnv& e) -> Insts {
         return {inst({{"f", {e.n, e.p}}, {"g", {e.p, e.q}}}, Rel::Leq, letter("f"),
                      resid(comp(letter("f"), letter("g")), letter("g")))};
       }});
  add({"EQ8", Rel::Leq, "residuation monotone in the dividend",
       "h ⇐ g ≤ (h ∨ h′) ⇐ g", "npq", false,
       [](const ArityEnv& e) -> Insts {
         return {inst({{"g", {e.p, e.q}}, {"h", {e.n, e.q}}, {"h2", {e.n, e.q}}}, Rel::Leq,
                      resid(letter("h"), letter("g")),
                      resid(join_term(letter("h"), letter("h2")), letter("g")))};
       }});

  // Dagger laws.
  add({"EQ9", Rel::Leq, "dagger monotone", "f† ≤ (f ∨ g)†", "np", false,
       [](const ArityEnv& e) -> Insts {
         return {inst({{"f", {e.n, e.n + e.p}}, {"g", {e.n, e.n + e.p}}}, Rel::Leq,
                      dagger_term(letter("f")),
                      dagger_term(join_term(letter("f"), letter("g"))))};
       }});
  add({"EQ10", Rel::Leq, "fixed point inequation",
       "f · ⟨f†, 1_p⟩ ≤ f†", "np", false,
       [](const ArityEnv& e) -> Insts {
         return {inst({{"f", {e.n, e.n + e.p}}}, Rel::Leq,
                      comp(letter("f"), pair_term(dagger_term(letter("f")), id(e.p))),
                      dagger_term(letter("f")))};
       }});
  add({"EQ11", Rel::Leq, "parameter inequation",
       "f† · g ≤ (f · (1_n ⊕ g))†", "npq", false,
       [](const ArityEnv& e) -> Insts {
         return {inst({{"f", {e.n, e.n + e.p}}, {"g", {e.p, e.q}}}, Rel::Leq,
                      comp(dagger_term(letter("f")), letter("g")),
                      dagger_term(comp(letter("f"), sum(id(e.n), letter("g")))))};
       }});
  add({"EQ12", Rel::Leq, "least pre-fixed point, residual form",
       "(g ⇐ ⟨g, 1_p⟩)† ≤ g", "np", false, [](const ArityEnv& e) -> Insts {
         return {inst({{"g", {e.n, e.p}}}, Rel::Leq,
                      dagger_term(resid(letter("g"), pair_term(letter("g"), id(e.p)))),
                      letter("g"))};
       }});

  // Derived laws.
  add({"EQ13", Rel::Eq, "injections distribute over join",
       "i_n · (f ∨ g) = (i_n · f) ∨ (i_n · g)", "np", false,
       [](const ArityEnv& e) -> Insts {
         Insts out;
         std::vector<SchemaMetaVar> vars{{"f", {e.n, e.p}}, {"g", {e.n, e.p}}};
         for (int i = 1; i <= e.n; ++i)
           out.push_back(inst(vars, Rel::Eq,
                              comp(inj(i, e.n), join_term(letter("f"), letter("g"))),
                              join_term(comp(inj(i, e.n), letter("f")),
                                        comp(inj(i, e.n), letter("g")))));
         return out;
       }});
  add({"EQ14", Rel::Eq, "right distribution over join",
       "(f ∨ g) · h = (f · h) ∨ (g · h)", "npq", false,
       [](const ArityEnv& e) -> Insts {
         return {inst({{"f", {e.n, e.p}}, {"g", {e.n, e.p}}, {"h", {e.p, e.q}}}, Rel::Eq,
                      comp(join_term(letter("f"), letter("g")), letter("h")),
                      join_term(comp(letter("f"), letter("h")),
                                comp(letter("g"), letter("h"))))};
       }});
  add({"EQ15", Rel::Eq, "bottom is a unit for join", "f ∨ ⊥_{n,p} = f", "np", false,
       [](const ArityEnv& e) -> Insts {
         return {inst({{"f", {e.n, e.p}}}, Rel::Eq, join_term(letter("f"), bot(e.n, e.p)),
                      letter("f"))};
       }});
  add({"EQ16", Rel::Eq, "bottom is strict", "⊥_{n,p} · g = ⊥_{n,q}", "npq", false,
       [](const ArityEnv& e) -> Insts {
         return {inst({{"g", {e.p, e.q}}}, Rel::Eq, comp(bot(e.n, e.p), letter("g")),
                      bot(e.n, e.q))};
       }});
  add({"EQ17", Rel::Leq, "composition monotone (rule form)",
       "f ≤ f′ & g ≤ g′ ⇒ f · g ≤ f′ · g′", "npq",
       false, [](const ArityEnv& e) -> Insts {
         SchemaInstance i = inst(
             {{"f", {e.n, e.p}}, {"f2", {e.n, e.p}}, {"g", {e.p, e.q}}, {"g2", {e.p, e.q}}},
             Rel::Leq, comp(letter("f"), letter("g")), comp(letter("f2"), letter("g2")));
         i.hypotheses.emplace_back(letter("f"), letter("f2"), Rel::Leq);
         i.hypotheses.emplace_back(letter("g"), letter("g2"), Rel::Leq);
         return {std::move(i)};
       }});
  add({"EQ18", Rel::Leq, "least pre-fixed point rule",
       "f · ⟨g, 1_p⟩ ≤ g ⇒ f† ≤ g", "np", false,
       [](const ArityEnv& e) -> Insts {
         SchemaInstance i = inst({{"f", {e.n, e.n + e.p}}, {"g", {e.n, e.p}}}, Rel::Leq,
                                 dagger_term(letter("f")), letter("g"));
         i.hypotheses.emplace_back(comp(letter("f"), pair_term(letter("g"), id(e.p))),
                                   letter("g"), Rel::Leq);
         return {std::move(i)};
       }});
  add({"EQ19", Rel::Eq, "fixed point equation", "f · ⟨f†, 1_p⟩ = f†", "np",
       false, [](const ArityEnv& e) -> Insts {
         return {inst({{"f", {e.n, e.n + e.p}}}, Rel::Eq,
                      comp(letter("f"), pair_term(dagger_term(letter("f")), id(e.p))),
                      dagger_term(letter("f")))};
       }});
  add({"EQ20", Rel::Eq, "parameter equation",
       "f† · g = (f · (1_n ⊕ g))†", "npq", false,
       [](const ArityEnv& e) -> Insts {
         return {inst({{"f", {e.n, e.n + e.p}}, {"g", {e.p, e.q}}}, Rel::Eq,
                      comp(dagger_term(letter("f")), letter("g")),
                      dagger_term(comp(letter("f"), sum(id(e.n), letter("g")))))};
       }});
  add({"EQ21", Rel::Leq, "dagger monotone (rule form)",
       "f ≤ g ⇒ f† ≤ g†", "np", false, [](const ArityEnv& e) -> Insts {
         SchemaInstance i = inst({{"f", {e.n, e.n + e.p}}, {"g", {e.n, e.n + e.p}}}, Rel::Leq,
                                 dagger_term(letter("f")), dagger_term(letter("g")));
         i.hypotheses.emplace_back(letter("f"), letter("g"), Rel::Leq);
         return {std::move(i)};
       }});
  add({"EQ22", Rel::Leq, "right subdistribution over join",
       "(f ∨ g) · h ≤ (f · h) ∨ (g · h)", "npq", false,
       [](const ArityEnv& e) -> Insts {
         return {inst({{"f", {e.n, e.p}}, {"g", {e.n, e.p}}, {"h", {e.p, e.q}}}, Rel::Leq,
                      comp(join_term(letter("f"), letter("g")), letter("h")),
                      join_term(comp(letter("f"), letter("h")),
                                comp(letter("g"), letter("h"))))};
       }});
  add({"EQ23", Rel::Leq, "residuation monotone in the dividend (rule form)",
       "h ≤ h′ ⇒ (h ⇐ g) ≤ (h′ ⇐ g)", "npq", false,
       [](const ArityEnv& e) -> Insts {
         SchemaInstance i =
             inst({{"g", {e.p, e.q}}, {"h", {e.n, e.q}}, {"h2", {e.n, e.q}}}, Rel::Leq,
                  resid(letter("h"), letter("g")), resid(letter("h2"), letter("g")));
         i.hypotheses.emplace_back(letter("h"), letter("h2"), Rel::Leq);
         return {std::move(i)};
       }});

  // Star laws.
  add({"EQ24", Rel::Eq, "star parameter equation",
       "f* · (1_n ⊕ g) = (f · (1_n ⊕ g))*", "npq", false,
       [](const ArityEnv& e) -> Insts {
         return {inst({{"f", {e.n, e.n + e.p}}, {"g", {e.p, e.q}}}, Rel::Eq,
                      comp(star_term(letter("f")), sum(id(e.n), letter("g"))),
                      star_term(comp(letter("f"), sum(id(e.n), letter("g")))))};
       }});
  add({"EQ25", Rel::Eq, "star through tau",
       "f* = (f^τ)* · ⟨⊥_{n,n+p}, 1_{n+p}⟩", "np", false,
       [](const ArityEnv& e) -> Insts {
         return {inst({{"f", {e.n, e.n + e.p}}}, Rel::Eq, star_term(letter("f")),
                      comp(star_term(tau_term(letter("f"), e.n, e.p)),
                           pair_term(bot(e.n, e.n + e.p), id(e.n + e.p))))};
       }});
  add({"EQ26", Rel::Leq, "star fixed point inequation",
       "f · ⟨f*, 0_n ⊕ 1_p⟩ ∨ (1_n ⊕ 0_p) ≤ f*", "np", false,
       [](const ArityEnv& e) -> Insts {
         return {inst({{"f", {e.n, e.n + e.p}}}, Rel::Leq,
                      join_term(comp(letter("f"),
                                     pair_term(star_term(letter("f")), params_into(e.n, e.p))),
                                block_into(e.n, e.p)),
                      star_term(letter("f")))};
       }});
  add({"EQ27", Rel::Leq, "star least pre-fixed point rule",
       "f · ⟨g, 0_n ⊕ 1_p⟩ ∨ h ≤ g ⇒ f* · ⟨h, 0_n ⊕ 1_p⟩ ≤ g",
       "np", false, [](const ArityEnv& e) -> Insts {
         auto pi = params_into(e.n, e.p);
         SchemaInstance i =
             inst({{"f", {e.n, e.n + e.p}}, {"g", {e.n, e.n + e.p}}, {"h", {e.n, e.n + e.p}}},
                  Rel::Leq, comp(star_term(letter("f")), pair_term(letter("h"), pi)),
                  letter("g"));
         i.hypotheses.emplace_back(
             join_term(comp(letter("f"), pair_term(letter("g"), pi)), letter("h")),
             letter("g"), Rel::Leq);
         return {std::move(i)};
       }});
  add({"EQ28", Rel::Leq, "star least pre-fixed point rule, plain form",
       "f · ⟨g, 0_n ⊕ 1_p⟩ ≤ g ⇒ f* · ⟨g, 0_n ⊕ 1_p⟩ ≤ g",
       "np", false, [](const ArityEnv& e) -> Insts {
         auto pi = params_into(e.n, e.p);
         SchemaInstance i = inst({{"f", {e.n, e.n + e.p}}, {"g", {e.n, e.n + e.p}}}, Rel::Leq,
                                 comp(star_term(letter("f")), pair_term(letter("g"), pi)),
                                 letter("g"));
         i.hypotheses.emplace_back(comp(letter("f"), pair_term(letter("g"), pi)), letter("g"),
                                   Rel::Leq);
         return {std::move(i)};
       }});
  add({"EQ29", Rel::Leq, "star parameter inequation",
       "f* · (1_n ⊕ g) ≤ (f · (1_n ⊕ g))*", "npq", false,
       [](const ArityEnv& e) -> Insts {
         return {inst({{"f", {e.n, e.n + e.p}}, {"g", {e.p, e.q}}}, Rel::Leq,
                      comp(star_term(letter("f")), sum(id(e.n), letter("g"))),
                      star_term(comp(letter("f"), sum(id(e.n), letter("g")))))};
       }});
  add({"EQ30", Rel::Leq, "star monotone", "f* ≤ (f ∨ g)*", "np", false,
       [](const ArityEnv& e) -> Insts {
         return {inst({{"f", {e.n, e.n + e.p}}, {"g", {e.n, e.n + e.p}}}, Rel::Leq,
                      star_term(letter("f")),
                      star_term(join_term(letter("f"), letter("g"))))};
       }});
  add({"EQ31", Rel::Leq, "star residual collapse",
       "(g ⇐ ⟨g, 0_n ⊕ 1_p⟩)* ≤ g ⇐ ⟨g, 0_n ⊕ 1_p⟩", "np",
       false, [](const ArityEnv& e) -> Insts {
         auto r = resid(letter("g"), pair_term(letter("g"), params_into(e.n, e.p)));
         return {inst({{"g", {e.n, e.n + e.p}}}, Rel::Leq, star_term(r), r)};
       }});
  add({"EQ32", Rel::Leq, "star minimality rule",
       "(1_n ⊕ 0_p) ∨ f ∨ g · ⟨g, 0_n ⊕ 1_p⟩ ≤ g ⇒ f* ≤ g",
       "np", false, [](const ArityEnv& e) -> Insts {
         SchemaInstance i = inst({{"f", {e.n, e.n + e.p}}, {"g", {e.n, e.n + e.p}}}, Rel::Leq,
                                 star_term(letter("f")), letter("g"));
         i.hypotheses.emplace_back(
             join_term(join_term(block_into(e.n, e.p), letter("f")),
                       comp(letter("g"), pair_term(letter("g"), params_into(e.n, e.p)))),
             letter("g"), Rel::Leq);
         return {std::move(i)};
       }});
  add({"EQ33", Rel::Leq, "star canonical pre-fixed point",
       "(1_n ⊕ 0_p) ∨ f ∨ f* · ⟨f*, 0_n ⊕ 1_p⟩ ≤ f*", "np",
       false, [](const ArityEnv& e) -> Insts {
         auto s = star_term(letter("f"));
         return {inst({{"f", {e.n, e.n + e.p}}}, Rel::Leq,
                      join_term(join_term(block_into(e.n, e.p), letter("f")),
                                comp(s, pair_term(s, params_into(e.n, e.p)))),
                      s)};
       }});
  add({"TAUTAU", Rel::Eq, "double tau expansion",
       "f^{ττ} = f · (1_n ⊕ 0_{2n} ⊕ 1_p) ∨ (0_{2n} ⊕ 1_n ⊕ 0_p) ∨ (0_n ⊕ 1_n ⊕ 0_{n+p})",
       "np", false, [](const ArityEnv& e) -> Insts {
         auto lhs = tau_term(tau_term(letter("f"), e.n, e.p), e.n, e.n + e.p);
         auto rhs = join_term(
             join_term(comp(letter("f"), sum(id(e.n), sum(zero(2 * e.n), id(e.p)))),
                       sum(zero(2 * e.n), sum(id(e.n), zero(e.p)))),
             sum(zero(e.n), sum(id(e.n), zero(e.n + e.p))));
         return {inst({{"f", {e.n, e.n + e.p}}}, Rel::Eq, lhs, rhs)};
       }});

  // Scalar decomposition laws.
  add({"BEKIC", Rel::Eq, "pairing decomposition of dagger",
       "⟨f, g⟩† = ⟨f† · ⟨h†, 1_p⟩, h†⟩ with h = g · ⟨f†, 1_{m+p}⟩",
       "nmp", false, [](const ArityEnv& e) -> Insts {
         auto f = letter("f"), g = letter("g");
         auto h = comp(g, pair_term(dagger_term(f), id(e.m + e.p)));
         return {inst({{"f", {e.n, e.n + e.m + e.p}}, {"g", {e.m, e.n + e.m + e.p}}}, Rel::Eq,
                      dagger_term(pair_term(f, g)),
                      pair_term(comp(dagger_term(f), pair_term(dagger_term(h), id(e.p))),
                                dagger_term(h)))};
       }});
  add({"SCALAR_RESID", Rel::Eq, "residual of a pairing",
       "⟨h, h′⟩ ⇐ g = ⟨h ⇐ g, h′ ⇐ g⟩", "nmpq", false,
       [](const ArityEnv& e) -> Insts {
         return {inst({{"h", {e.n, e.q}}, {"h2", {e.m, e.q}}, {"g", {e.p, e.q}}}, Rel::Eq,
                      resid(pair_term(letter("h"), letter("h2")), letter("g")),
                      pair_term(resid(letter("h"), letter("g")),
                                resid(letter("h2"), letter("g"))))};
       }});

  // Finite-family and antitonicity consequences.
  add({"PROP44", Rel::Eq, "finite joins distribute on the right",
       "(f ∨ g ∨ h) · k = (f · k) ∨ (g · k) ∨ (h · k)", "npq",
       false, [](const ArityEnv& e) -> Insts {
         return {inst({{"f", {e.n, e.p}}, {"g", {e.n, e.p}}, {"h", {e.n, e.p}}, {"k", {e.p, e.q}}},
                      Rel::Eq,
                      comp(join_term(join_term(letter("f"), letter("g")), letter("h")),
                           letter("k")),
                      join_term(join_term(comp(letter("f"), letter("k")),
                                          comp(letter("g"), letter("k"))),
                                comp(letter("h"), letter("k"))))};
       }});
  add({"PROP45", Rel::Leq, "residuation antitone in the divisor",
       "g ≤ g′ ⇒ (h ⇐ g′) ≤ (h ⇐ g)", "npq", false,
       [](const ArityEnv& e) -> Insts {
         SchemaInstance i =
             inst({{"g", {e.p, e.q}}, {"g2", {e.p, e.q}}, {"h", {e.n, e.q}}}, Rel::Leq,
                  resid(letter("h"), letter("g2")), resid(letter("h"), letter("g")));
         i.hypotheses.emplace_back(letter("g"), letter("g2"), Rel::Leq);
         return {std::move(i)};
       }});
  add({"DAGGER_STAR", Rel::Eq, "dagger from star",
       "f† = f* · ⟨⊥_{n,p}, 1_p⟩", "np", false,
       [](const ArityEnv& e) -> Insts {
         return {inst({{"f", {e.n, e.n + e.p}}}, Rel::Eq, dagger_term(letter("f")),
                      comp(star_term(letter("f")), pair_term(bot(e.n, e.p), id(e.p))))};
       }});

  // Deliberately false, for exercising counterexample reporting.
  add({"FALSE_DEMO", Rel::Leq, "demonstration schema (intentionally false)",
       "f ∨ g ≤ f", "np", true, [](const ArityEnv& e) -> Insts {
         return {inst({{"f", {e.n, e.p}}, {"g", {e.n, e.p}}}, Rel::Leq,
                      join_term(letter("f"), letter("g")), letter("f"))};
       }});

  return cat;
}

}  // namespace

const std::vector<Schema>& catalog() {
  static const std::vector<Schema> cat = build_catalog();
  return cat;
}

const Schema* find_schema(const std::string& id) {
  for (const auto& s : catalog())
    if (s.id == id) return &s;
  return nullptr;
}

std::string catalog_version() { return "1"; }

}  // namespace park
