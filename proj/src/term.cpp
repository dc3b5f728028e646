#include "park/term.hpp"

#include <cctype>
#include <fstream>
#include <sstream>

namespace park {

Signature::Signature(AlphabetPtr alphabet, std::vector<Letter> letters)
    : alphabet_(std::move(alphabet)), letters_(std::move(letters)) {
  if (alphabet_) {
    for (int s = 0; s < alphabet_->size(); ++s) {
      const std::string& name = alphabet_->name(s);
      bool declared = false;
      for (const auto& l : letters_)
        if (l.name == name) {
          if (l.source != 1 || l.target != alphabet_->rank(s))
            throw SortError("letter '" + name + "' conflicts with symbol of rank " +
                            std::to_string(alphabet_->rank(s)));
          declared = true;
        }
      if (!declared) letters_.push_back({name, 1, alphabet_->rank(s)});
    }
  }
  for (size_t i = 0; i < letters_.size(); ++i)
    for (size_t j = 0; j < i; ++j)
      if (letters_[i].name == letters_[j].name)
        throw SortError("duplicate letter '" + letters_[i].name + "'");
}

const Signature::Letter* Signature::find(const std::string& name) const {
  for (const auto& l : letters_)
    if (l.name == name) return &l;
  return nullptr;
}

Signature parse_signature(std::istream& in) {
  std::vector<std::pair<std::string, int>> symbols;
  std::vector<Signature::Letter> letters;
  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
    std::istringstream ls(line);
    std::string kw;
    if (!(ls >> kw)) continue;
    if (kw == "symbol") {
      std::string name;
      int rank;
      if (!(ls >> name >> rank)) throw ParseError("'symbol' needs a name and a rank", lineno);
      symbols.emplace_back(name, rank);
    } else if (kw == "letter") {
      std::string name;
      int n, p;
      if (!(ls >> name >> n >> p)) throw ParseError("'letter' needs a name and two arities", lineno);
      letters.push_back({name, n, p});
    } else {
      throw ParseError("unknown directive '" + kw + "'", lineno);
    }
  }
  AlphabetPtr alphabet = std::make_shared<const RankedAlphabet>(std::move(symbols));
  return Signature(std::move(alphabet), std::move(letters));
}

Signature parse_signature_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error("cannot open signature file '" + path + "'");
  try {
    return parse_signature(in);
  } catch (ParseError& e) {
    throw ParseError(path + ": " + e.what());
  }
}

namespace {
TermPtr node(Term t) { return std::make_shared<const Term>(std::move(t)); }
}  // namespace

TermPtr letter(std::string name) { return node({TermKind::Letter, std::move(name), 0, 0, {}, {}}); }
TermPtr inj(int i, int n) { return node({TermKind::Inj, {}, i, n, {}, {}}); }
TermPtr id(int n) { return node({TermKind::Id, {}, n, 0, {}, {}}); }
TermPtr zero(int p) { return node({TermKind::Zero, {}, p, 0, {}, {}}); }
TermPtr bot(int n, int p) { return node({TermKind::Bot, {}, n, p, {}, {}}); }
TermPtr base(std::vector<int> image, int target) {
  return node({TermKind::Base, {}, target, 0, std::move(image), {}});
}
TermPtr comp(TermPtr f, TermPtr g) {
  return node({TermKind::Comp, {}, 0, 0, {}, {std::move(f), std::move(g)}});
}
TermPtr tup(std::vector<TermPtr> kids, int target) {
  return node({TermKind::Tup, {}, target, 0, {}, std::move(kids)});
}
TermPtr pair_term(TermPtr f, TermPtr g) {
  return node({TermKind::Pair, {}, 0, 0, {}, {std::move(f), std::move(g)}});
}
TermPtr sum(TermPtr f, TermPtr g) {
  return node({TermKind::Sum, {}, 0, 0, {}, {std::move(f), std::move(g)}});
}
TermPtr join_term(TermPtr f, TermPtr g) {
  return node({TermKind::Join, {}, 0, 0, {}, {std::move(f), std::move(g)}});
}
TermPtr dagger_term(TermPtr f) { return node({TermKind::Dagger, {}, 0, 0, {}, {std::move(f)}}); }
TermPtr star_term(TermPtr f) { return node({TermKind::Star, {}, 0, 0, {}, {std::move(f)}}); }
TermPtr resid(TermPtr h, TermPtr g) {
  return node({TermKind::Resid, {}, 0, 0, {}, {std::move(h), std::move(g)}});
}

bool term_equal(const TermPtr& a, const TermPtr& b) {
  if (a == b) return true;
  if (a->kind != b->kind || a->name != b->name || a->a != b->a || a->b != b->b ||
      a->image != b->image || a->kids.size() != b->kids.size())
    return false;
  for (size_t i = 0; i < a->kids.size(); ++i)
    if (!term_equal(a->kids[i], b->kids[i])) return false;
  return true;
}

Sort sort_of(const TermPtr& t, const Signature& sig) {
  switch (t->kind) {
    case TermKind::Letter: {
      const auto* l = sig.find(t->name);
      if (!l) throw SortError("unknown letter '" + t->name + "'");
      return {l->source, l->target};
    }
    case TermKind::Inj:
      if (t->a < 1 || t->a > t->b)
        throw SortError("inj(" + std::to_string(t->a) + "," + std::to_string(t->b) +
                        "): index outside [1, n]");
      return {1, t->b};
    case TermKind::Id:
      if (t->a < 0) throw SortError("id of negative arity");
      return {t->a, t->a};
    case TermKind::Zero:
      if (t->a < 0) throw SortError("zero of negative arity");
      return {0, t->a};
    case TermKind::Bot:
      if (t->a < 0 || t->b < 0) throw SortError("bot of negative arity");
      return {t->a, t->b};
    case TermKind::Base: {
      for (int v : t->image)
        if (v < 1 || v > t->a)
          throw SortError("base map value " + std::to_string(v) + " outside [1, " +
                          std::to_string(t->a) + "]");
      return {static_cast<int>(t->image.size()), t->a};
    }
    case TermKind::Comp: {
      Sort f = sort_of(t->kids[0], sig), g = sort_of(t->kids[1], sig);
      if (f.target != g.source)
        throw SortError("composition: target " + std::to_string(f.target) + " != source " +
                        std::to_string(g.source));
      return {f.source, g.target};
    }
    case TermKind::Tup: {
      for (const auto& k : t->kids) {
        Sort s = sort_of(k, sig);
        if (s.source != 1)
          throw SortError("tupling component has source " + std::to_string(s.source));
        if (s.target != t->a)
          throw SortError("tupling component target " + std::to_string(s.target) +
                          " != annotation " + std::to_string(t->a));
      }
      return {static_cast<int>(t->kids.size()), t->a};
    }
    case TermKind::Pair: {
      Sort f = sort_of(t->kids[0], sig), g = sort_of(t->kids[1], sig);
      if (f.target != g.target)
        throw SortError("pairing: targets differ (" + std::to_string(f.target) + " vs " +
                        std::to_string(g.target) + ")");
      return {f.source + g.source, f.target};
    }
    case TermKind::Sum: {
      Sort f = sort_of(t->kids[0], sig), g = sort_of(t->kids[1], sig);
      return {f.source + g.source, f.target + g.target};
    }
    case TermKind::Join: {
      Sort f = sort_of(t->kids[0], sig), g = sort_of(t->kids[1], sig);
      if (!(f == g))
        throw SortError("join: sorts differ (" + std::to_string(f.source) + "->" +
                        std::to_string(f.target) + " vs " + std::to_string(g.source) + "->" +
                        std::to_string(g.target) + ")");
      return f;
    }
    case TermKind::Dagger: {
      Sort f = sort_of(t->kids[0], sig);
      if (f.target < f.source)
        throw SortError("dagger subject has target " + std::to_string(f.target) +
                        " < source " + std::to_string(f.source));
      return {f.source, f.target - f.source};
    }
    case TermKind::Star: {
      Sort f = sort_of(t->kids[0], sig);
      if (f.target < f.source)
        throw SortError("star subject has target " + std::to_string(f.target) + " < source " +
                        std::to_string(f.source));
      return f;
    }
    case TermKind::Resid: {
      Sort h = sort_of(t->kids[0], sig), g = sort_of(t->kids[1], sig);
      if (h.target != g.target)
        throw SortError("resid: targets differ (" + std::to_string(h.target) + " vs " +
                        std::to_string(g.target) + ")");
      return {h.source, g.source};
    }
  }
  throw Error("unreachable term kind");
}

// ---------------------------------------------------------------------------
// Parser

namespace {

struct Token {
  enum Kind { Name, Int, Punct, End } kind;
  std::string text;
  int value = 0;
  int line = 1, col = 1;
};

class Lexer {
 public:
  explicit Lexer(const std::string& text) : text_(text) { advance(); }

  const Token& peek() const { return tok_; }
  Token take() {
    Token t = tok_;
    advance();
    return t;
  }

 private:
  void advance() {
    while (pos_ < text_.size()) {
      char c = text_[pos_];
      if (c == '#') {
        while (pos_ < text_.size() && text_[pos_] != '\n') ++pos_;
      } else if (c == '\n') {
        ++line_;
        col_ = 1;
        ++pos_;
      } else if (std::isspace(static_cast<unsigned char>(c))) {
        ++col_;
        ++pos_;
      } else {
        break;
      }
    }
    tok_.line = line_;
    tok_.col = col_;
    if (pos_ >= text_.size()) {
      tok_ = {Token::End, "", 0, line_, col_};
      return;
    }
    char c = text_[pos_];
    if (std::isdigit(static_cast<unsigned char>(c))) {
      size_t start = pos_;
      while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
      tok_ = {Token::Int, text_.substr(start, pos_ - start), 0, line_, col_};
      tok_.value = std::stoi(tok_.text);
      col_ += static_cast<int>(pos_ - start);
      return;
    }
    if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
      size_t start = pos_;
      while (pos_ < text_.size() &&
             (std::isalnum(static_cast<unsigned char>(text_[pos_])) || text_[pos_] == '_'))
        ++pos_;
      tok_ = {Token::Name, text_.substr(start, pos_ - start), 0, line_, col_};
      col_ += static_cast<int>(pos_ - start);
      return;
    }
    if (c == '-' && pos_ + 1 < text_.size() && text_[pos_ + 1] == '>') {
      tok_ = {Token::Punct, "->", 0, line_, col_};
      pos_ += 2;
      col_ += 2;
      return;
    }
    if (std::string("().,;|").find(c) != std::string::npos) {
      tok_ = {Token::Punct, std::string(1, c), 0, line_, col_};
      ++pos_;
      ++col_;
      return;
    }
    throw ParseError("unexpected character '" + std::string(1, c) + "'", line_, col_);
  }

  const std::string& text_;
  size_t pos_ = 0;
  int line_ = 1, col_ = 1;
  Token tok_;
};

class TermParser {
 public:
  explicit TermParser(const std::string& text) : lex_(text) {}

  TermPtr parse() {
    TermPtr t = parse_join();
    expect_end();
    return t;
  }

 private:
  [[noreturn]] void fail(const std::string& msg, const Token& at) {
    throw ParseError(msg, at.line, at.col);
  }

  void expect_punct(const std::string& p) {
    Token t = lex_.take();
    if (t.kind != Token::Punct || t.text != p) fail("expected '" + p + "'", t);
  }

  void expect_end() {
    const Token& t = lex_.peek();
    if (t.kind != Token::End) fail("trailing input after term", t);
  }

  int expect_int() {
    Token t = lex_.take();
    if (t.kind != Token::Int) fail("expected an integer", t);
    return t.value;
  }

  bool at_punct(const std::string& p) {
    return lex_.peek().kind == Token::Punct && lex_.peek().text == p;
  }

  TermPtr parse_join() {
    TermPtr t = parse_comp();
    while (at_punct("|")) {
      lex_.take();
      t = join_term(std::move(t), parse_comp());
    }
    return t;
  }

  TermPtr parse_comp() {
    TermPtr t = parse_prim();
    while (at_punct(".")) {
      lex_.take();
      t = comp(std::move(t), parse_prim());
    }
    return t;
  }

  TermPtr parse_prim() {
    if (at_punct("(")) {
      lex_.take();
      TermPtr t = parse_join();
      expect_punct(")");
      return t;
    }
    Token t = lex_.take();
    if (t.kind != Token::Name) fail("expected a term", t);
    const std::string& kw = t.text;

    if (kw == "inj") {
      expect_punct("(");
      int i = expect_int();
      expect_punct(",");
      int n = expect_int();
      expect_punct(")");
      return inj(i, n);
    }
    if (kw == "id") {
      expect_punct("(");
      int n = expect_int();
      expect_punct(")");
      return id(n);
    }
    if (kw == "zero") {
      expect_punct("(");
      int p = expect_int();
      expect_punct(")");
      return zero(p);
    }
    if (kw == "bot") {
      expect_punct("(");
      int n = expect_int();
      expect_punct(",");
      int p = expect_int();
      expect_punct(")");
      return bot(n, p);
    }
    if (kw == "base") {
      expect_punct("(");
      std::vector<int> image;
      image.push_back(expect_int());
      while (at_punct(",")) {
        lex_.take();
        image.push_back(expect_int());
      }
      expect_punct("->");
      int p = expect_int();
      expect_punct(")");
      return base(std::move(image), p);
    }
    if (kw == "tup") {
      expect_punct("(");
      std::vector<TermPtr> kids;
      if (!at_punct(";")) {
        kids.push_back(parse_join());
        while (at_punct(",")) {
          lex_.take();
          kids.push_back(parse_join());
        }
      }
      expect_punct(";");
      int p = expect_int();
      expect_punct(")");
      return tup(std::move(kids), p);
    }
    if (kw == "pair" || kw == "sum" || kw == "resid") {
      expect_punct("(");
      TermPtr a = parse_join();
      expect_punct(",");
      TermPtr b = parse_join();
      expect_punct(")");
      if (kw == "pair") return pair_term(std::move(a), std::move(b));
      if (kw == "sum") return sum(std::move(a), std::move(b));
      return resid(std::move(a), std::move(b));
    }
    if (kw == "dagger" || kw == "star") {
      expect_punct("(");
      TermPtr a = parse_join();
      expect_punct(")");
      return kw == "dagger" ? dagger_term(std::move(a)) : star_term(std::move(a));
    }
    return letter(kw);
  }

  Lexer lex_;
};

}  // namespace

TermPtr parse_term(const std::string& text, const Signature& sig) {
  TermPtr t = TermParser(text).parse();
  sort_of(t, sig);  // reject ill-sorted input up front
  return t;
}

TermPtr parse_term_file(const std::string& path, const Signature& sig) {
  std::ifstream in(path);
  if (!in) throw Error("cannot open term file '" + path + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  try {
    return parse_term(buf.str(), sig);
  } catch (ParseError& e) {
    throw ParseError(path + ": " + e.what());
  }
}

namespace {

// Precedence levels: join = 0, comp = 1, prim = 2.
void print_at(const TermPtr& t, int level, std::string& out) {
  auto parens = [&](int inner, auto&& body) {
    bool need = inner < level;
    if (need) out += "(";
    body();
    if (need) out += ")";
  };
  switch (t->kind) {
    case TermKind::Letter:
      out += t->name;
      return;
    case TermKind::Inj:
      out += "inj(" + std::to_string(t->a) + "," + std::to_string(t->b) + ")";
      return;
    case TermKind::Id:
      out += "id(" + std::to_string(t->a) + ")";
      return;
    case TermKind::Zero:
      out += "zero(" + std::to_string(t->a) + ")";
      return;
    case TermKind::Bot:
      out += "bot(" + std::to_string(t->a) + "," + std::to_string(t->b) + ")";
      return;
    case TermKind::Base: {
      out += "base(";
      for (size_t i = 0; i < t->image.size(); ++i)
        out += (i ? "," : "") + std::to_string(t->image[i]);
      out += " -> " + std::to_string(t->a) + ")";
      return;
    }
    case TermKind::Comp:
      parens(1, [&] {
        // '.' is left-associative; a right-nested composite needs parens.
        print_at(t->kids[0], 1, out);
        out += " . ";
        print_at(t->kids[1], 2, out);
      });
      return;
    case TermKind::Tup: {
      out += "tup(";
      for (size_t i = 0; i < t->kids.size(); ++i) {
        if (i) out += ", ";
        print_at(t->kids[i], 0, out);
      }
      out += " ; " + std::to_string(t->a) + ")";
      return;
    }
    case TermKind::Pair:
    case TermKind::Sum:
    case TermKind::Resid: {
      out += t->kind == TermKind::Pair ? "pair(" : t->kind == TermKind::Sum ? "sum(" : "resid(";
      print_at(t->kids[0], 0, out);
      out += ", ";
      print_at(t->kids[1], 0, out);
      out += ")";
      return;
    }
    case TermKind::Join:
      parens(0, [&] {
        print_at(t->kids[0], 0, out);
        out += " | ";
        print_at(t->kids[1], 1, out);
      });
      return;
    case TermKind::Dagger:
    case TermKind::Star: {
      out += t->kind == TermKind::Dagger ? "dagger(" : "star(";
      print_at(t->kids[0], 0, out);
      out += ")";
      return;
    }
  }
}

}  // namespace

std::string pretty_print(const TermPtr& t) {
  std::string out;
  print_at(t, 0, out);
  return out;
}

TermPtr tau_term(const TermPtr& u, int n, int p) {
  TermPtr keep = sum(id(n), sum(zero(n), id(p)));
  TermPtr inject = sum(zero(n), sum(id(n), zero(p)));
  return join_term(comp(u, keep), inject);
}

namespace {

TermPtr map_kids(const TermPtr& t, const std::vector<TermPtr>& kids) {
  Term copy = *t;
  copy.kids = kids;
  return std::make_shared<const Term>(std::move(copy));
}

template <class Rewrite>
TermPtr rewrite_bottom_up(const TermPtr& t, const Signature& sig, Rewrite&& rw) {
  std::vector<TermPtr> kids;
  kids.reserve(t->kids.size());
  bool changed = false;
  for (const auto& k : t->kids) {
    kids.push_back(rewrite_bottom_up(k, sig, rw));
    changed = changed || kids.back() != k;
  }
  TermPtr base_node = changed ? map_kids(t, kids) : t;
  return rw(base_node);
}

}  // namespace

TermPtr to_star_form(const TermPtr& t, const Signature& sig) {
  return rewrite_bottom_up(t, sig, [&](const TermPtr& u) -> TermPtr {
    if (u->kind != TermKind::Dagger) return u;
    Sort s = sort_of(u->kids[0], sig);
    const int n = s.source, p = s.target - n;
    return comp(star_term(u->kids[0]), pair_term(bot(n, p), id(p)));
  });
}

TermPtr to_dagger_form(const TermPtr& t, const Signature& sig) {
  return rewrite_bottom_up(t, sig, [&](const TermPtr& u) -> TermPtr {
    if (u->kind != TermKind::Star) return u;
    Sort s = sort_of(u->kids[0], sig);
    const int n = s.source, p = s.target - n;
    return dagger_term(tau_term(u->kids[0], n, p));
  });
}

}  // namespace park
