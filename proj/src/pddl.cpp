#include "lexiplan/pddl.hpp"

#include <algorithm>
#include <cctype>
#include <map>
#include <sstream>

namespace lexiplan::pddl {

namespace {

const std::vector<std::string> kSupportedRequirements = {
    ":strips",
    ":typing",
    ":equality",
    ":negative-preconditions",
    ":disjunctive-preconditions",
    ":existential-preconditions",
    ":universal-preconditions",
    ":quantified-preconditions",
    ":conditional-effects",
    ":adl",
    ":constraints",
};

struct Token {
  enum class Kind { LParen, RParen, Symbol, End };
  Kind kind;
  std::string text;  // lowercased
  int line;
  int col;
};

class Lexer {
 public:
  explicit Lexer(const std::string& text) : text_(text) {}

  Token next() {
    skip_ws();
    int line = line_, col = col_;
    if (pos_ >= text_.size()) return {Token::Kind::End, "", line, col};
    char c = text_[pos_];
    if (c == '(') {
      advance();
      return {Token::Kind::LParen, "(", line, col};
    }
    if (c == ')') {
      advance();
      return {Token::Kind::RParen, ")", line, col};
    }
    std::string sym;
    while (pos_ < text_.size() && !is_delim(text_[pos_])) {
      char ch = text_[pos_];
      if (!is_symbol_char(ch))
        throw ParseError(ErrorKind::Syntax, line_, col_,
                         std::string("unexpected character '") + ch + "'");
      sym += static_cast<char>(std::tolower(static_cast<unsigned char>(ch)));
      advance();
    }
    return {Token::Kind::Symbol, sym, line, col};
  }

 private:
  static bool is_delim(char c) {
    return c == '(' || c == ')' || c == ';' || std::isspace(
        static_cast<unsigned char>(c));
  }
  static bool is_symbol_char(char c) {
    unsigned char u = static_cast<unsigned char>(c);
    return std::isalnum(u) || c == '_' || c == '-' || c == '?' || c == ':' ||
           c == '=';
  }
  void skip_ws() {
    while (pos_ < text_.size()) {
      char c = text_[pos_];
      if (c == ';') {
        while (pos_ < text_.size() && text_[pos_] != '\n') advance();
      } else if (std::isspace(static_cast<unsigned char>(c))) {
        advance();
      } else {
        break;
      }
    }
  }
  void advance() {
    if (text_[pos_] == '\n') {
      ++line_;
      col_ = 1;
    } else {
      ++col_;
    }
    ++pos_;
  }
  const std::string& text_;
  std::size_t pos_ = 0;
  int line_ = 1;
  int col_ = 1;
};

// Generic s-expression node, the intermediate parse representation.
struct Sexp {
  bool is_list = false;
  std::string symbol;
  std::vector<Sexp> items;
  int line = 0;
  int col = 0;

  const Sexp& at(std::size_t i) const {
    if (i >= items.size())
      throw ParseError(ErrorKind::Syntax, line, col, "missing list element");
    return items[i];
  }
  const std::string& head() const {
    if (!is_list || items.empty() || items[0].is_list)
      throw ParseError(ErrorKind::Syntax, line, col, "expected a tagged list");
    return items[0].symbol;
  }
};

class Reader {
 public:
  explicit Reader(const std::string& text) : lexer_(text) { tok_ = lexer_.next(); }

  std::vector<Sexp> read_all() {
    std::vector<Sexp> out;
    while (tok_.kind != Token::Kind::End) out.push_back(read());
    return out;
  }

 private:
  Sexp read() {
    if (tok_.kind == Token::Kind::Symbol) {
      Sexp s{false, tok_.text, {}, tok_.line, tok_.col};
      tok_ = lexer_.next();
      return s;
    }
    if (tok_.kind == Token::Kind::LParen) {
      Sexp s{true, "", {}, tok_.line, tok_.col};
      tok_ = lexer_.next();
      while (tok_.kind != Token::Kind::RParen) {
        if (tok_.kind == Token::Kind::End)
          throw ParseError(ErrorKind::Syntax, tok_.line, tok_.col,
                           "unbalanced '('");
        s.items.push_back(read());
      }
      tok_ = lexer_.next();
      return s;
    }
    throw ParseError(ErrorKind::Syntax, tok_.line, tok_.col,
                     "unexpected ')'");
  }

  Lexer lexer_;
  Token tok_;
};

bool valid_name(const std::string& s) {
  if (s.empty() || !std::isalpha(static_cast<unsigned char>(s[0])))
    return false;
  return std::all_of(s.begin(), s.end(), [](char c) {
    unsigned char u = static_cast<unsigned char>(c);
    return std::isalnum(u) || c == '_' || c == '-';
  });
}

std::string expect_name(const Sexp& s) {
  if (s.is_list || !valid_name(s.symbol))
    throw ParseError(ErrorKind::Syntax, s.line, s.col, "expected a name");
  return s.symbol;
}

// Parses "n1 n2 - t n3 ..." lists used for :types, :objects and parameters.
std::vector<TypedName> parse_typed_list(const std::vector<Sexp>& items,
                                        std::size_t begin, bool variables) {
  std::vector<TypedName> out;
  std::vector<std::string> pending;
  for (std::size_t i = begin; i < items.size(); ++i) {
    const Sexp& s = items[i];
    if (s.is_list)
      throw ParseError(ErrorKind::UnsupportedFeature, s.line, s.col,
                       "compound types (either ...) are not supported");
    if (s.symbol == "-") {
      if (i + 1 >= items.size() || items[i + 1].is_list)
        throw ParseError(ErrorKind::Syntax, s.line, s.col,
                         "expected a type after '-'");
      const std::string& type = items[++i].symbol;
      for (std::string& n : pending) out.push_back({std::move(n), type});
      pending.clear();
      continue;
    }
    std::string n = s.symbol;
    if (variables) {
      if (n.size() < 2 || n[0] != '?' || !valid_name(n.substr(1)))
        throw ParseError(ErrorKind::Syntax, s.line, s.col,
                         "expected a ?variable");
      n = n.substr(1);
    } else if (!valid_name(n)) {
      throw ParseError(ErrorKind::Syntax, s.line, s.col, "invalid name");
    }
    pending.push_back(std::move(n));
  }
  for (std::string& n : pending) out.push_back({std::move(n), "object"});
  return out;
}

struct FormulaContext {
  const LiftedDomain* domain = nullptr;
  std::vector<TypedName> scope;  // bound variables, innermost last
  bool allow_quantifiers = true;

  const TypedName* find_var(const std::string& name) const {
    for (auto it = scope.rbegin(); it != scope.rend(); ++it)
      if (it->name == name) return &*it;
    return nullptr;
  }
};

Term parse_term(const Sexp& s, const FormulaContext& ctx) {
  if (s.is_list)
    throw ParseError(ErrorKind::Syntax, s.line, s.col, "expected a term");
  if (!s.symbol.empty() && s.symbol[0] == '?') {
    std::string name = s.symbol.substr(1);
    if (!ctx.find_var(name))
      throw ParseError(ErrorKind::UndeclaredSymbol, s.line, s.col,
                       "unbound variable ?" + name);
    return {true, name};
  }
  if (!valid_name(s.symbol))
    throw ParseError(ErrorKind::Syntax, s.line, s.col, "invalid term");
  return {false, s.symbol};
}

LiftedFormula parse_formula(const Sexp& s, FormulaContext& ctx);

LiftedFormula parse_atom_or_eq(const Sexp& s, FormulaContext& ctx) {
  const std::string& head = s.head();
  LiftedFormula f;
  if (head == "=") {
    if (s.items.size() != 3)
      throw ParseError(ErrorKind::Syntax, s.line, s.col, "= takes two terms");
    f.kind = LiftedFormula::Kind::Equals;
    f.terms = {parse_term(s.at(1), ctx), parse_term(s.at(2), ctx)};
    return f;
  }
  const Predicate* pred = ctx.domain->find_predicate(head);
  if (!pred)
    throw ParseError(ErrorKind::UndeclaredSymbol, s.line, s.col,
                     "undeclared predicate " + head);
  if (s.items.size() - 1 != pred->params.size())
    throw ParseError(ErrorKind::TypeMismatch, s.line, s.col,
                     "predicate " + head + " expects " +
                         std::to_string(pred->params.size()) + " arguments");
  f.kind = LiftedFormula::Kind::Atom;
  f.predicate = head;
  for (std::size_t i = 1; i < s.items.size(); ++i)
    f.terms.push_back(parse_term(s.items[i], ctx));
  return f;
}

LiftedFormula parse_quantified(const Sexp& s, FormulaContext& ctx,
                               LiftedFormula::Kind kind) {
  if (s.items.size() != 3 || !s.at(1).is_list)
    throw ParseError(ErrorKind::Syntax, s.line, s.col,
                     "quantifier takes a parameter list and a body");
  LiftedFormula f;
  f.kind = kind;
  f.params = parse_typed_list(s.at(1).items, 0, true);
  std::size_t mark = ctx.scope.size();
  ctx.scope.insert(ctx.scope.end(), f.params.begin(), f.params.end());
  f.children.push_back(parse_formula(s.at(2), ctx));
  ctx.scope.resize(mark);
  return f;
}

LiftedFormula parse_formula(const Sexp& s, FormulaContext& ctx) {
  if (!s.is_list)
    throw ParseError(ErrorKind::Syntax, s.line, s.col, "expected a formula");
  if (s.items.empty()) {  // () reads as the empty conjunction
    LiftedFormula f;
    f.kind = LiftedFormula::Kind::And;
    return f;
  }
  const std::string& head = s.head();
  if (head == "and" || head == "or") {
    LiftedFormula f;
    f.kind = head == "and" ? LiftedFormula::Kind::And : LiftedFormula::Kind::Or;
    for (std::size_t i = 1; i < s.items.size(); ++i)
      f.children.push_back(parse_formula(s.items[i], ctx));
    return f;
  }
  if (head == "not") {
    if (s.items.size() != 2)
      throw ParseError(ErrorKind::Syntax, s.line, s.col, "not takes one formula");
    LiftedFormula f;
    f.kind = LiftedFormula::Kind::Not;
    f.children.push_back(parse_formula(s.at(1), ctx));
    return f;
  }
  if (head == "imply") {
    if (s.items.size() != 3)
      throw ParseError(ErrorKind::Syntax, s.line, s.col,
                       "imply takes two formulas");
    LiftedFormula no;
    no.kind = LiftedFormula::Kind::Not;
    no.children.push_back(parse_formula(s.at(1), ctx));
    LiftedFormula f;
    f.kind = LiftedFormula::Kind::Or;
    f.children.push_back(std::move(no));
    f.children.push_back(parse_formula(s.at(2), ctx));
    return f;
  }
  if (head == "exists" || head == "forall") {
    if (!ctx.allow_quantifiers)
      throw ParseError(ErrorKind::UnsupportedFeature, s.line, s.col,
                       "quantifier not allowed here");
    return parse_quantified(
        s, ctx,
        head == "exists" ? LiftedFormula::Kind::Exists
                         : LiftedFormula::Kind::Forall);
  }
  return parse_atom_or_eq(s, ctx);
}

EffectNode parse_effect(const Sexp& s, FormulaContext& ctx) {
  if (!s.is_list || s.items.empty())
    throw ParseError(ErrorKind::Syntax, s.line, s.col, "expected an effect");
  const std::string& head = s.head();
  EffectNode e;
  if (head == "and") {
    e.kind = EffectNode::Kind::And;
    for (std::size_t i = 1; i < s.items.size(); ++i)
      e.children.push_back(parse_effect(s.items[i], ctx));
    return e;
  }
  if (head == "forall") {
    if (s.items.size() != 3 || !s.at(1).is_list)
      throw ParseError(ErrorKind::Syntax, s.line, s.col,
                       "forall effect takes a parameter list and a body");
    e.kind = EffectNode::Kind::Forall;
    e.params = parse_typed_list(s.at(1).items, 0, true);
    std::size_t mark = ctx.scope.size();
    ctx.scope.insert(ctx.scope.end(), e.params.begin(), e.params.end());
    e.children.push_back(parse_effect(s.at(2), ctx));
    ctx.scope.resize(mark);
    return e;
  }
  if (head == "when") {
    if (s.items.size() != 3)
      throw ParseError(ErrorKind::Syntax, s.line, s.col,
                       "when takes a condition and an effect");
    e.kind = EffectNode::Kind::When;
    e.condition = parse_formula(s.at(1), ctx);
    e.children.push_back(parse_effect(s.at(2), ctx));
    return e;
  }
  if (head == "not") {
    LiftedFormula atom = parse_atom_or_eq(s.at(1), ctx);
    if (atom.kind != LiftedFormula::Kind::Atom)
      throw ParseError(ErrorKind::Syntax, s.line, s.col,
                       "only atoms may be deleted");
    e.kind = EffectNode::Kind::Literal;
    e.negated = true;
    e.predicate = atom.predicate;
    e.terms = std::move(atom.terms);
    return e;
  }
  LiftedFormula atom = parse_atom_or_eq(s, ctx);
  if (atom.kind != LiftedFormula::Kind::Atom)
    throw ParseError(ErrorKind::Syntax, s.line, s.col,
                     "equality is not an effect");
  e.kind = EffectNode::Kind::Literal;
  e.predicate = atom.predicate;
  e.terms = std::move(atom.terms);
  return e;
}

void check_requirements(const Sexp& s) {
  for (std::size_t i = 1; i < s.items.size(); ++i) {
    const std::string& req = s.items[i].symbol;
    if (std::find(kSupportedRequirements.begin(), kSupportedRequirements.end(),
                  req) == kSupportedRequirements.end())
      throw ParseError(ErrorKind::UnsupportedFeature, s.items[i].line,
                       s.items[i].col, "unsupported requirement " + req);
  }
}

void check_type_declared(const LiftedDomain& d, const TypedName& tn, int line,
                         int col) {
  if (tn.type == "object") return;
  for (const TypedName& t : d.types)
    if (t.name == tn.type) return;
  throw ParseError(ErrorKind::UndeclaredSymbol, line, col,
                   "undeclared type " + tn.type);
}

}  // namespace

LiftedFormula LiftedFormula::truth() { return {}; }

LiftedFormula LiftedFormula::atom(std::string pred, std::vector<Term> args) {
  LiftedFormula f;
  f.kind = Kind::Atom;
  f.predicate = std::move(pred);
  f.terms = std::move(args);
  return f;
}

const Predicate* LiftedDomain::find_predicate(const std::string& name) const {
  for (const Predicate& p : predicates)
    if (p.name == name) return &p;
  return nullptr;
}

bool LiftedDomain::type_compatible(const std::string& t,
                                   const std::string& want) const {
  std::string cur = t;
  for (std::size_t guard = 0; guard <= types.size() + 1; ++guard) {
    if (cur == want) return true;
    if (cur == "object") return want == "object";
    const TypedName* def = nullptr;
    for (const TypedName& ty : types)
      if (ty.name == cur) def = &ty;
    if (!def) return false;
    cur = def->type;
  }
  return false;  // cyclic hierarchy; rejected at parse time anyway
}

LiftedDomain parse_domain(const std::string& text) {
  std::vector<Sexp> top = Reader(text).read_all();
  if (top.size() != 1 || !top[0].is_list || top[0].head() != "define")
    throw ParseError(ErrorKind::Syntax, 1, 1, "expected (define (domain ...))");
  const Sexp& def = top[0];
  const Sexp& tag = def.at(1);
  if (!tag.is_list || tag.items.size() != 2 || tag.head() != "domain")
    throw ParseError(ErrorKind::Syntax, tag.line, tag.col,
                     "expected (domain name)");
  LiftedDomain d;
  d.name = expect_name(tag.at(1));
  for (std::size_t i = 2; i < def.items.size(); ++i) {
    const Sexp& sec = def.items[i];
    const std::string& head = sec.head();
    if (head == ":requirements") {
      check_requirements(sec);
      for (std::size_t j = 1; j < sec.items.size(); ++j)
        d.requirements.push_back(sec.items[j].symbol);
    } else if (head == ":types") {
      d.types = parse_typed_list(sec.items, 1, false);
      for (const TypedName& t : d.types) {
        if (t.type != "object" &&
            std::none_of(d.types.begin(), d.types.end(),
                         [&](const TypedName& u) { return u.name == t.type; }))
          throw ParseError(ErrorKind::UndeclaredSymbol, sec.line, sec.col,
                           "undeclared supertype " + t.type);
      }
      // reject cycles
      for (const TypedName& t : d.types)
        if (!d.type_compatible(t.name, "object"))
          throw ParseError(ErrorKind::Syntax, sec.line, sec.col,
                           "cyclic type hierarchy at " + t.name);
    } else if (head == ":constants") {
      d.constants = parse_typed_list(sec.items, 1, false);
      for (const TypedName& c : d.constants)
        check_type_declared(d, c, sec.line, sec.col);
    } else if (head == ":predicates") {
      for (std::size_t j = 1; j < sec.items.size(); ++j) {
        const Sexp& ps = sec.items[j];
        if (!ps.is_list || ps.items.empty())
          throw ParseError(ErrorKind::Syntax, ps.line, ps.col,
                           "expected a predicate declaration");
        Predicate p;
        p.name = expect_name(ps.at(0));
        p.params = parse_typed_list(ps.items, 1, true);
        for (const TypedName& tp : p.params)
          check_type_declared(d, tp, ps.line, ps.col);
        d.predicates.push_back(std::move(p));
      }
    } else if (head == ":action") {
      ActionSchema a;
      a.name = expect_name(sec.at(1));
      std::size_t j = 2;
      a.precondition = LiftedFormula::truth();
      a.effect.kind = EffectNode::Kind::And;
      while (j < sec.items.size()) {
        const std::string& key = sec.items[j].symbol;
        if (key == ":parameters") {
          const Sexp& ps = sec.at(j + 1);
          if (!ps.is_list)
            throw ParseError(ErrorKind::Syntax, ps.line, ps.col,
                             "expected a parameter list");
          a.params = parse_typed_list(ps.items, 0, true);
          for (const TypedName& tp : a.params)
            check_type_declared(d, tp, ps.line, ps.col);
        } else if (key == ":precondition" || key == ":effect") {
          FormulaContext ctx;
          ctx.domain = &d;
          ctx.scope = a.params;
          if (key == ":precondition")
            a.precondition = parse_formula(sec.at(j + 1), ctx);
          else
            a.effect = parse_effect(sec.at(j + 1), ctx);
        } else {
          throw ParseError(ErrorKind::UnsupportedFeature, sec.items[j].line,
                           sec.items[j].col, "unsupported action field " + key);
        }
        j += 2;
      }
      d.actions.push_back(std::move(a));
    } else if (head == ":durative-action" || head == ":functions" ||
               head == ":derived") {
      throw ParseError(ErrorKind::UnsupportedFeature, sec.line, sec.col,
                       "unsupported section " + head);
    } else {
      throw ParseError(ErrorKind::Syntax, sec.line, sec.col,
                       "unknown domain section " + head);
    }
  }
  return d;
}

namespace {

SurfaceConstraint parse_constraint(const Sexp& s, FormulaContext& ctx) {
  const std::string& head = s.head();
  ConstraintType type;
  std::size_t arity;
  if (head == "always") {
    type = ConstraintType::Always;
    arity = 1;
  } else if (head == "sometime") {
    type = ConstraintType::Sometime;
    arity = 1;
  } else if (head == "at-most-once") {
    type = ConstraintType::AtMostOnce;
    arity = 1;
  } else if (head == "sometime-before") {
    type = ConstraintType::SometimeBefore;
    arity = 2;
  } else if (head == "sometime-after") {
    type = ConstraintType::SometimeAfter;
    arity = 2;
  } else {
    throw ParseError(ErrorKind::UnknownConstraintOperator, s.line, s.col,
                     "unknown constraint operator " + head);
  }
  if (s.items.size() != arity + 1)
    throw ParseError(ErrorKind::Syntax, s.line, s.col,
                     head + " takes " + std::to_string(arity) + " formula(s)");
  SurfaceConstraint c;
  c.type = type;
  c.first = parse_formula(s.at(1), ctx);
  if (arity == 2) c.second = parse_formula(s.at(2), ctx);
  return c;
}

}  // namespace

LiftedProblem parse_problem(const std::string& text,
                            const LiftedDomain& domain) {
  std::vector<Sexp> top = Reader(text).read_all();
  if (top.size() != 1 || !top[0].is_list || top[0].head() != "define")
    throw ParseError(ErrorKind::Syntax, 1, 1,
                     "expected (define (problem ...))");
  const Sexp& def = top[0];
  const Sexp& tag = def.at(1);
  if (!tag.is_list || tag.items.size() != 2 || tag.head() != "problem")
    throw ParseError(ErrorKind::Syntax, tag.line, tag.col,
                     "expected (problem name)");
  LiftedProblem p;
  p.name = expect_name(tag.at(1));
  p.goal = LiftedFormula::truth();

  auto objects_scope = [&]() {
    std::vector<TypedName> all = domain.constants;
    all.insert(all.end(), p.objects.begin(), p.objects.end());
    return all;
  };

  for (std::size_t i = 2; i < def.items.size(); ++i) {
    const Sexp& sec = def.items[i];
    const std::string& head = sec.head();
    if (head == ":domain") {
      p.domain_name = expect_name(sec.at(1));
      if (p.domain_name != domain.name)
        throw ParseError(ErrorKind::UndeclaredSymbol, sec.line, sec.col,
                         "problem references domain " + p.domain_name);
    } else if (head == ":requirements") {
      check_requirements(sec);
    } else if (head == ":objects") {
      p.objects = parse_typed_list(sec.items, 1, false);
      for (const TypedName& o : p.objects)
        check_type_declared(domain, o, sec.line, sec.col);
    } else if (head == ":init") {
      FormulaContext ctx;
      ctx.domain = &domain;
      ctx.allow_quantifiers = false;
      for (std::size_t j = 1; j < sec.items.size(); ++j) {
        LiftedFormula a = parse_atom_or_eq(sec.items[j], ctx);
        if (a.kind != LiftedFormula::Kind::Atom)
          throw ParseError(ErrorKind::Syntax, sec.items[j].line,
                           sec.items[j].col, "init entries must be atoms");
        p.init.push_back(std::move(a));
      }
    } else if (head == ":goal") {
      FormulaContext ctx;
      ctx.domain = &domain;
      p.goal = parse_formula(sec.at(1), ctx);
    } else if (head == ":constraints") {
      FormulaContext ctx;
      ctx.domain = &domain;
      std::size_t begin = 1;
      std::vector<const Sexp*> entries;
      if (sec.items.size() == 2 && sec.at(1).is_list &&
          !sec.at(1).items.empty() && !sec.at(1).items[0].is_list &&
          sec.at(1).head() == "and") {
        for (std::size_t j = 1; j < sec.at(1).items.size(); ++j)
          entries.push_back(&sec.at(1).items[j]);
      } else {
        for (std::size_t j = begin; j < sec.items.size(); ++j)
          entries.push_back(&sec.items[j]);
      }
      for (const Sexp* e : entries)
        p.constraints.push_back(parse_constraint(*e, ctx));
    } else {
      throw ParseError(ErrorKind::Syntax, sec.line, sec.col,
                       "unknown problem section " + head);
    }
  }

  // Object references in init/goal/constraints must be declared.
  std::vector<TypedName> scope = objects_scope();
  auto check_consts = [&](const LiftedFormula& f, auto&& self) -> void {
    for (const Term& t : f.terms)
      if (!t.is_variable &&
          std::none_of(scope.begin(), scope.end(),
                       [&](const TypedName& o) { return o.name == t.name; }))
        throw ParseError(ErrorKind::UndeclaredSymbol, 1, 1,
                         "undeclared object " + t.name);
    for (const LiftedFormula& c : f.children) self(c, self);
  };
  for (const LiftedFormula& a : p.init) check_consts(a, check_consts);
  check_consts(p.goal, check_consts);
  for (const SurfaceConstraint& c : p.constraints) {
    check_consts(c.first, check_consts);
    check_consts(c.second, check_consts);
  }
  return p;
}

std::vector<LiftedFormula> parse_formulas(const std::string& text,
                                          const LiftedDomain& domain) {
  std::vector<Sexp> top = Reader(text).read_all();
  std::vector<LiftedFormula> out;
  FormulaContext ctx;
  ctx.domain = &domain;
  for (const Sexp& s : top) out.push_back(parse_formula(s, ctx));
  return out;
}

namespace {

void emit_typed_list(std::ostream& out, const std::vector<TypedName>& list,
                     bool variables) {
  for (std::size_t i = 0; i < list.size(); ++i) {
    if (i) out << ' ';
    out << (variables ? "?" : "") << list[i].name << " - " << list[i].type;
  }
}

void emit_term(std::ostream& out, const Term& t) {
  out << (t.is_variable ? "?" : "") << t.name;
}

void emit_formula(std::ostream& out, const LiftedFormula& f) {
  switch (f.kind) {
    case LiftedFormula::Kind::True:
      out << "(and)";
      return;
    case LiftedFormula::Kind::False:
      out << "(or)";
      return;
    case LiftedFormula::Kind::Atom:
      out << '(' << f.predicate;
      for (const Term& t : f.terms) {
        out << ' ';
        emit_term(out, t);
      }
      out << ')';
      return;
    case LiftedFormula::Kind::Equals:
      out << "(= ";
      emit_term(out, f.terms[0]);
      out << ' ';
      emit_term(out, f.terms[1]);
      out << ')';
      return;
    case LiftedFormula::Kind::Not:
      out << "(not ";
      emit_formula(out, f.children[0]);
      out << ')';
      return;
    case LiftedFormula::Kind::And:
    case LiftedFormula::Kind::Or:
      out << (f.kind == LiftedFormula::Kind::And ? "(and" : "(or");
      for (const LiftedFormula& c : f.children) {
        out << ' ';
        emit_formula(out, c);
      }
      out << ')';
      return;
    case LiftedFormula::Kind::Exists:
    case LiftedFormula::Kind::Forall:
      out << (f.kind == LiftedFormula::Kind::Exists ? "(exists (" : "(forall (");
      emit_typed_list(out, f.params, true);
      out << ") ";
      emit_formula(out, f.children[0]);
      out << ')';
      return;
  }
}

void emit_effect(std::ostream& out, const EffectNode& e) {
  switch (e.kind) {
    case EffectNode::Kind::And:
      out << "(and";
      for (const EffectNode& c : e.children) {
        out << ' ';
        emit_effect(out, c);
      }
      out << ')';
      return;
    case EffectNode::Kind::Forall:
      out << "(forall (";
      emit_typed_list(out, e.params, true);
      out << ") ";
      emit_effect(out, e.children[0]);
      out << ')';
      return;
    case EffectNode::Kind::When:
      out << "(when ";
      emit_formula(out, e.condition);
      out << ' ';
      emit_effect(out, e.children[0]);
      out << ')';
      return;
    case EffectNode::Kind::Literal:
      if (e.negated) out << "(not ";
      out << '(' << e.predicate;
      for (const Term& t : e.terms) {
        out << ' ';
        emit_term(out, t);
      }
      out << ')';
      if (e.negated) out << ')';
      return;
  }
}

}  // namespace

std::string emit_domain(const LiftedDomain& d) {
  std::ostringstream out;
  out << "(define (domain " << d.name << ")\n";
  out << "  (:requirements";
  for (const std::string& r : d.requirements) out << ' ' << r;
  out << ")\n";
  if (!d.types.empty()) {
    out << "  (:types ";
    emit_typed_list(out, d.types, false);
    out << ")\n";
  }
  if (!d.constants.empty()) {
    out << "  (:constants ";
    emit_typed_list(out, d.constants, false);
    out << ")\n";
  }
  out << "  (:predicates";
  for (const Predicate& p : d.predicates) {
    out << "\n    (" << p.name;
    if (!p.params.empty()) {
      out << ' ';
      emit_typed_list(out, p.params, true);
    }
    out << ')';
  }
  out << ")\n";
  for (const ActionSchema& a : d.actions) {
    out << "  (:action " << a.name << "\n    :parameters (";
    emit_typed_list(out, a.params, true);
    out << ")\n    :precondition ";
    emit_formula(out, a.precondition);
    out << "\n    :effect ";
    emit_effect(out, a.effect);
    out << ")\n";
  }
  out << ")\n";
  return out.str();
}

std::string emit_problem(const LiftedProblem& p) {
  std::ostringstream out;
  out << "(define (problem " << p.name << ")\n";
  out << "  (:domain " << p.domain_name << ")\n";
  if (!p.objects.empty()) {
    out << "  (:objects ";
    emit_typed_list(out, p.objects, false);
    out << ")\n";
  }
  out << "  (:init";
  for (const LiftedFormula& a : p.init) {
    out << "\n    ";
    emit_formula(out, a);
  }
  out << ")\n";
  out << "  (:goal ";
  emit_formula(out, p.goal);
  out << ")\n";
  if (!p.constraints.empty()) {
    out << "  (:constraints";
    for (const SurfaceConstraint& c : p.constraints) {
      out << "\n    (" << constraint_type_token(c.type) << ' ';
      emit_formula(out, c.first);
      if (c.type == ConstraintType::SometimeBefore ||
          c.type == ConstraintType::SometimeAfter) {
        out << ' ';
        emit_formula(out, c.second);
      }
      out << ')';
    }
    out << ")\n";
  }
  out << ")\n";
  return out.str();
}

}  // namespace lexiplan::pddl
