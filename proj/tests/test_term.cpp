#include <doctest.h>

#include <sstream>

#include "helpers.hpp"

using namespace park;
using namespace park::testing;

namespace {

Signature test_sig() {
  return Signature(gsc_alphabet(), {{"a1", 1, 1}, {"b2", 1, 2}, {"k1", 2, 1}});
}

}  // namespace

TEST_CASE("signature files and implicit symbol letters") {
  Signature sig = parse_signature_file(data_path("sig.txt"));
  REQUIRE(sig.alphabet());
  CHECK(sig.alphabet()->index_of("gamma") == 0);
  CHECK(sig.find("gamma") != nullptr);
  CHECK(sig.find("gamma")->source == 1);
  CHECK(sig.find("gamma")->target == 2);
  CHECK(sig.find("a1")->target == 1);
  CHECK(sig.find("nosuch") == nullptr);

  CHECK_THROWS_AS(Signature(gsc_alphabet(), {{"sigma", 2, 2}}), SortError);
  CHECK_THROWS_AS(Signature(nullptr, {{"x", 1, 1}, {"x", 1, 1}}), SortError);
}

TEST_CASE("parsing and sorts") {
  Signature sig = test_sig();
  CHECK(sort_of(parse_term("b2 . k1", sig), sig) == Sort{1, 1});
  CHECK(sort_of(parse_term("dagger(b2)", sig), sig) == Sort{1, 1});
  CHECK(sort_of(parse_term("star(b2)", sig), sig) == Sort{1, 2});
  CHECK(sort_of(parse_term("bot(2,3)", sig), sig) == Sort{2, 3});
  CHECK(sort_of(parse_term("resid(b2, b2)", sig), sig) == Sort{1, 1});
  CHECK(sort_of(parse_term("tup( ; 2)", sig), sig) == Sort{0, 2});
  CHECK(sort_of(parse_term("base(2,1 -> 2)", sig), sig) == Sort{2, 2});
  CHECK(sort_of(parse_term("sum(a1, b2)", sig), sig) == Sort{2, 3});
  CHECK(sort_of(parse_term("pair(a1, a1)", sig), sig) == Sort{2, 1});

  // precedence: '.' binds tighter than '|'
  TermPtr t = parse_term("a1 . a1 | a1", sig);
  CHECK(t->kind == TermKind::Join);
  CHECK(t->kids[0]->kind == TermKind::Comp);

  // associativity: both operators nest to the left
  TermPtr u = parse_term("a1 . a1 . a1", sig);
  CHECK(u->kids[0]->kind == TermKind::Comp);
  CHECK(u->kids[1]->kind == TermKind::Letter);
}

TEST_CASE("parse errors carry positions") {
  Signature sig = test_sig();
  CHECK_THROWS_WITH_AS(parse_term("a1 . ", sig), doctest::Contains("line 1"), ParseError);
  CHECK_THROWS_WITH_AS(parse_term("a1 .. a1", sig), doctest::Contains("expected a term"),
                       ParseError);
  CHECK_THROWS_AS(parse_term("a1 a1", sig), ParseError);
  CHECK_THROWS_AS(parse_term("pair(a1", sig), ParseError);
  CHECK_THROWS_AS(parse_term("inj(1)", sig), ParseError);
  CHECK_THROWS_AS(parse_term("?", sig), ParseError);
  CHECK_THROWS_WITH_AS(parse_term("unknown_letter", sig), doctest::Contains("unknown letter"),
                       SortError);
}

TEST_CASE("sort errors name both sorts") {
  Signature sig = test_sig();
  // b2 : 1 -> 2 composed with k1 : 2 -> 1 is fine; the reverse at the wrong
  // sort reports the offending pair.
  CHECK_THROWS_WITH_AS(parse_term("b2 . a1", sig), doctest::Contains("target 2 != source 1"),
                       SortError);
  CHECK_THROWS_AS(parse_term("dagger(k1)", sig), SortError);
  CHECK_THROWS_AS(parse_term("star(k1)", sig), SortError);
  CHECK_THROWS_AS(parse_term("join(a1, b2)", sig), ParseError);  // join is spelled '|'
  CHECK_THROWS_AS(parse_term("a1 | b2", sig), SortError);
  CHECK_THROWS_AS(parse_term("resid(a1, b2)", sig), SortError);
  CHECK_THROWS_AS(parse_term("inj(3, 2)", sig), SortError);
  CHECK_THROWS_AS(parse_term("tup(b2 ; 1)", sig), SortError);
  CHECK_THROWS_AS(parse_term("pair(a1, b2)", sig), SortError);
}

TEST_CASE("print then parse is the identity") {
  Signature sig = test_sig();
  for (const char* text : {
           "a1 . (a1 | a1) . a1",
           "dagger(b2) | a1",
           "star(b2) . pair(bot(1,1), id(1))",
           "tup(a1, a1 | a1 ; 1)",
           "tup( ; 3)",
           "resid(b2, gamma)",
           "resid(sum(a1, zero(2)), sum(a1, zero(2)))",
           "inj(2,2) . pair(a1, dagger(b2))",
           "k1 . (a1 . a1)",
           "gamma . pair(sigma, sigma) . tup(c ; 0) | c",
       }) {
    TermPtr t = parse_term(text, sig);
    CHECK(term_equal(parse_term(pretty_print(t), sig), t));
  }
}

TEST_CASE("evaluation over the lattice backend is compositional") {
  Signature sig = test_sig();
  auto B = chain2();
  Rng rng(3);
  std::map<std::string, Morphism> letters;
  letters.emplace("a1", sample_monotone(B, 1, 1, rng));
  letters.emplace("b2", sample_monotone(B, 1, 2, rng));
  letters.emplace("k1", sample_monotone(B, 2, 1, rng));
  MonBackend mb{B, &letters};

  CHECK(eval(parse_term("id(2)", sig), mb) == identity(B, 2));
  CHECK(eval(parse_term("bot(1,1)", sig), mb) == bottom_morphism(B, 1, 1));
  CHECK(eval(parse_term("k1 . a1", sig), mb) ==
        compose(letters.at("k1"), letters.at("a1")));
  CHECK(eval(parse_term("b2 | b2", sig), mb) == letters.at("b2"));
  CHECK(eval(parse_term("dagger(b2)", sig), mb) == dagger(letters.at("b2")));
  CHECK(eval(parse_term("inj(1,2) . tup(a1, a1 ; 1)", sig), mb) == letters.at("a1"));
  CHECK(eval(parse_term("resid(a1, a1)", sig), mb) ==
        residual(letters.at("a1"), letters.at("a1")));

  CHECK_THROWS_AS(eval(parse_term("sigma", sig), mb), EvalError);  // no binding
  // the evaluation error names the innermost offending subterm
  std::map<std::string, Morphism> partial;
  MonBackend mb2{B, &partial};
  CHECK_THROWS_WITH_AS(eval(parse_term("dagger(b2) . a1", sig), mb2),
                       doctest::Contains("[in b2]"), EvalError);
}

TEST_CASE("evaluation over the tree backend") {
  Signature sig = test_sig();
  auto letters = atom_bindings(sig);
  TreeBackend tb{sig.alphabet(), &letters};

  auto v = eval(parse_term("sigma . tup(c ; 0)", sig), tb);
  CHECK(member(v.components[0], parse_tree("sigma(c)", *sig.alphabet())));

  // dagger of {sigma(x1)} u {c} unfolds to the sigma-chains over c
  auto w = eval(parse_term("dagger(sigma | c . zero(1))", sig), tb);
  Tree t = parse_tree("c", *sig.alphabet());
  for (int k = 0; k <= 5; ++k) {
    CHECK(member(w.components[0], t));
    t = Tree{sig.alphabet()->index_of("sigma"), {t}};
  }
}

TEST_CASE("dagger to star translation") {
  Signature sig = test_sig();
  TermPtr t = parse_term("dagger(b2)", sig);
  TermPtr expected = parse_term("star(b2) . pair(bot(1,1), id(1))", sig);
  CHECK(term_equal(to_star_form(t, sig), expected));

  // star-free terms pass through unchanged
  TermPtr plain = parse_term("a1 . (a1 | a1 . a1)", sig);
  CHECK(term_equal(to_star_form(plain, sig), plain));
  CHECK(term_equal(to_dagger_form(plain, sig), plain));

  // the tau composite is emitted exactly as displayed
  TermPtr s = parse_term("star(b2)", sig);
  TermPtr expected_d = parse_term(
      "dagger(b2 . sum(id(1), sum(zero(1), id(1))) | sum(zero(1), sum(id(1), zero(1))))", sig);
  CHECK(term_equal(to_dagger_form(s, sig), expected_d));

  // sort preservation, nested daggers rewritten innermost first
  TermPtr nested = parse_term("dagger(dagger(b2 . sum(id(1), b2)))", sig);
  TermPtr nested_star = to_star_form(nested, sig);
  CHECK(sort_of(nested, sig) == sort_of(nested_star, sig));
  CHECK(pretty_print(nested_star).find("dagger") == std::string::npos);
  CHECK(sort_of(s, sig) == sort_of(to_dagger_form(s, sig), sig));
}

TEST_CASE("translation round trips evaluate equally") {
  Signature sig = test_sig();
  auto B = chain2();
  Rng rng(21);
  for (int i = 0; i < 20; ++i) {
    std::map<std::string, Morphism> letters;
    letters.emplace("a1", sample_monotone(B, 1, 1, rng));
    letters.emplace("b2", sample_monotone(B, 1, 2, rng));
    letters.emplace("k1", sample_monotone(B, 2, 1, rng));
    MonBackend mb{B, &letters};
    for (const char* text : {"dagger(b2)", "dagger(b2 . sum(id(1), a1))",
                             "a1 . dagger(b2) | a1", "dagger(b2) . dagger(b2)",
                             "dagger(dagger(b2 . sum(id(1), b2)))"}) {
      TermPtr t = parse_term(text, sig);
      CHECK(eval(t, mb) == eval(to_dagger_form(to_star_form(t, sig), sig), mb));
    }
    for (const char* text : {"star(b2)", "star(b2 . sum(id(1), a1))", "star(b2) . pair(a1, a1)"}) {
      TermPtr t = parse_term(text, sig);
      CHECK(eval(t, mb) == eval(to_star_form(to_dagger_form(t, sig), sig), mb));
    }
  }
}

TEST_CASE("bindings files") {
  auto B = chain2();
  std::istringstream in(
      "bind f 1 2\n"
      "0 0 -> 0\n"
      "0 1 -> 1\n"
      "1 0 -> 1\n"
      "1 1 -> 1\n");
  auto map = parse_bindings(in, B);
  REQUIRE(map.count("f") == 1);
  CHECK(map.at("f") == Morphism(B, 1, 2, {0, 1, 1, 1}));

  std::istringstream missing("bind f 1 1\n0 -> 0\n");
  CHECK_THROWS_WITH_AS(parse_bindings(missing, B), doctest::Contains("missing a row"), ParseError);
  std::istringstream not_mono("bind f 1 1\n0 -> 1\n1 -> 0\n");
  CHECK_THROWS_AS(parse_bindings(not_mono, B), LatticeError);
  std::istringstream stray("0 -> 0\n");
  CHECK_THROWS_AS(parse_bindings(stray, B), ParseError);
}
