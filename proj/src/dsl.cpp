#include "carext/dsl.hpp"

#include <cctype>

#include "carext/families.hpp"
#include "carext/sigma_ops.hpp"

namespace carext {

bool Expr::identical(const Expr& other) const {
  if (kind != other.kind) return false;
  switch (kind) {
    case Kind::Interval: return lo == other.lo && hi == other.hi;
    case Kind::AtomSet: return atoms == other.atoms;
    case Kind::Name: return name == other.name;
    case Kind::Family: return name == other.name && params == other.params;
    case Kind::Complement: return a->identical(*other.a);
    default: return a->identical(*other.a) && b->identical(*other.b);
  }
}

namespace {

class Parser {
public:
  explicit Parser(const std::string& text) : text_(text) {}

  ExprPtr run() {
    ExprPtr e = expr();
    skip_ws();
    if (pos_ < text_.size()) fail("trailing input");
    return e;
  }

private:
  [[noreturn]] void fail(const std::string& msg) const {
    int line = 1, col = 1;
    for (std::size_t i = 0; i < pos_ && i < text_.size(); ++i) {
      if (text_[i] == '\n') { ++line; col = 1; } else ++col;
    }
    throw ParseError(msg, line, col);
  }

  void skip_ws() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  bool eat(char c) {
    skip_ws();
    if (pos_ < text_.size() && text_[pos_] == c) { ++pos_; return true; }
    return false;
  }

  void expect(char c, const char* what) {
    if (!eat(c)) fail(std::string("expected '") + c + "' " + what);
  }

  char peek() {
    skip_ws();
    return pos_ < text_.size() ? text_[pos_] : '\0';
  }

  BigInt integer() {
    skip_ws();
    std::size_t start = pos_;
    while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    if (pos_ == start) fail("expected integer");
    return BigInt(text_.substr(start, pos_ - start));
  }

  Rational rational() {
    BigInt num = integer();
    if (eat('/')) {
      BigInt den = integer();
      if (den == 0) fail("zero denominator");
      return Rational(num, den);
    }
    return Rational(num, 1);
  }

  std::string ident() {
    skip_ws();
    std::size_t start = pos_;
    while (pos_ < text_.size() &&
           (std::isalnum(static_cast<unsigned char>(text_[pos_])) || text_[pos_] == '_'))
      ++pos_;
    if (pos_ == start) fail("expected name");
    return text_.substr(start, pos_ - start);
  }

  ExprPtr expr() {
    ExprPtr left = prod();
    while (true) {
      if (eat('|')) left = node(Expr::Kind::Union, left, prod());
      else if (eat('\\')) left = node(Expr::Kind::Diff, left, prod());
      else return left;
    }
  }

  ExprPtr prod() {
    ExprPtr left = unary();
    while (eat('&')) left = node(Expr::Kind::Intersect, left, unary());
    return left;
  }

  ExprPtr unary() {
    if (eat('!')) {
      auto e = std::make_shared<Expr>();
      e->kind = Expr::Kind::Complement;
      e->a = unary();
      return e;
    }
    return primary();
  }

  ExprPtr primary() {
    switch (peek()) {
      case '(': {
        eat('(');
        ExprPtr e = expr();
        expect(')', "to close group");
        return e;
      }
      case '[': {
        eat('[');
        auto e = std::make_shared<Expr>();
        e->kind = Expr::Kind::Interval;
        e->lo = rational();
        expect(',', "between interval endpoints");
        e->hi = rational();
        expect(')', "to close half-open interval");
        return e;
      }
      case '{': {
        eat('{');
        auto e = std::make_shared<Expr>();
        e->kind = Expr::Kind::AtomSet;
        if (!eat('}')) {
          do {
            std::string atom = ident();
            if (atom.size() < 2 || atom[0] != 'a') fail("atom names look like a0, a1, ...");
            e->atoms.push_back(std::stoi(atom.substr(1)));
          } while (eat(','));
          expect('}', "to close atom set");
        }
        return e;
      }
      default: {
        auto e = std::make_shared<Expr>();
        e->name = ident();
        if (eat('(')) {
          e->kind = Expr::Kind::Family;
          if (!eat(')')) {
            do e->params.push_back(rational()); while (eat(','));
            expect(')', "to close argument list");
          }
        } else {
          e->kind = Expr::Kind::Name;
        }
        return e;
      }
    }
  }

  static ExprPtr node(Expr::Kind kind, ExprPtr a, ExprPtr b) {
    auto e = std::make_shared<Expr>();
    e->kind = kind;
    e->a = std::move(a);
    e->b = std::move(b);
    return e;
  }

  const std::string& text_;
  std::size_t pos_ = 0;
};

std::string print_rat(const Rational& r) {
  return r.den() == 1 ? r.num().str() : r.str();
}

// precedence levels: 1 = '|' '\', 2 = '&', 3 = '!', 4 = atoms
int level(const Expr& e) {
  switch (e.kind) {
    case Expr::Kind::Union:
    case Expr::Kind::Diff: return 1;
    case Expr::Kind::Intersect: return 2;
    case Expr::Kind::Complement: return 3;
    default: return 4;
  }
}

std::string print_at(const Expr& e, int min_level) {
  std::string out;
  switch (e.kind) {
    case Expr::Kind::Interval:
      out = "[" + print_rat(e.lo) + "," + print_rat(e.hi) + ")";
      break;
    case Expr::Kind::AtomSet: {
      out = "{";
      for (std::size_t i = 0; i < e.atoms.size(); ++i)
        out += (i ? ",a" : "a") + std::to_string(e.atoms[i]);
      out += "}";
      break;
    }
    case Expr::Kind::Name:
      out = e.name;
      break;
    case Expr::Kind::Family: {
      out = e.name + "(";
      for (std::size_t i = 0; i < e.params.size(); ++i)
        out += (i ? "," : "") + print_rat(e.params[i]);
      out += ")";
      break;
    }
    case Expr::Kind::Complement:
      out = "!" + print_at(*e.a, 3);
      break;
    case Expr::Kind::Union:
      out = print_at(*e.a, 1) + " | " + print_at(*e.b, 2);
      break;
    case Expr::Kind::Diff:
      out = print_at(*e.a, 1) + " \\ " + print_at(*e.b, 2);
      break;
    case Expr::Kind::Intersect:
      out = print_at(*e.a, 2) + " & " + print_at(*e.b, 3);
      break;
  }
  return level(e) < min_level ? "(" + out + ")" : out;
}

}  // namespace

ExprPtr parse(const std::string& text) { return Parser(text).run(); }

std::string print(const Expr& e) { return print_at(e, 1); }

Element eval_element(const Expr& e, const AlgebraConfig& cfg) {
  switch (e.kind) {
    case Expr::Kind::Interval:
      if (cfg.kind() != AlgebraConfig::Kind::IntervalUnit)
        throw std::invalid_argument("interval literal needs the interval algebra");
      return Element(cfg, IntervalSet::canonicalize({{e.lo, e.hi}}));
    case Expr::Kind::AtomSet: {
      if (cfg.kind() != AlgebraConfig::Kind::FiniteWeighted)
        throw std::invalid_argument("atom set literal needs a finite algebra");
      FiniteSubset s;
      for (int a : e.atoms) {
        if (a < 0 || static_cast<std::size_t>(a) >= cfg.atom_count())
          throw std::invalid_argument("atom a" + std::to_string(a) + " out of range");
        s.bits |= std::uint64_t{1} << a;
      }
      return Element(cfg, s);
    }
    case Expr::Kind::Name:
    case Expr::Kind::Family:
      throw std::invalid_argument("'" + e.name + "' names a family, not an element");
    case Expr::Kind::Union: return unite(eval_element(*e.a, cfg), eval_element(*e.b, cfg));
    case Expr::Kind::Intersect: return intersect(eval_element(*e.a, cfg), eval_element(*e.b, cfg));
    case Expr::Kind::Diff: return difference(eval_element(*e.a, cfg), eval_element(*e.b, cfg));
    case Expr::Kind::Complement: return complement(eval_element(*e.a, cfg));
  }
  throw std::logic_error("unreachable");
}

namespace {

std::int64_t int_param(const std::string& name, const std::vector<Rational>& params,
                       std::size_t want) {
  if (params.size() != want)
    throw std::invalid_argument(name + " takes " + std::to_string(want) + " argument(s)");
  const Rational& r = params.front();
  if (r.den() != 1) throw std::invalid_argument(name + " takes an integer argument");
  return r.num().convert_to<std::int64_t>();
}

}  // namespace

CauchyPoint eval_family(const std::string& name, const std::vector<Rational>& params) {
  if (name == "fatcantor") {
    if (!params.empty()) throw std::invalid_argument("fatcantor takes no arguments");
    return fatcantor_point();
  }
  if (name == "increasing") {
    if (!params.empty()) throw std::invalid_argument("increasing takes no arguments");
    return increasing_point();
  }
  if (name == "dyadicblocks") return dyadicblocks_point(int_param(name, params, 1));
  if (name == "perturb")
    return perturb_point(static_cast<std::uint64_t>(int_param(name, params, 1)));
  throw std::invalid_argument("unknown family '" + name + "'");
}

CauchyPoint eval_point(const Expr& e, const AlgebraConfig& cfg) {
  switch (e.kind) {
    case Expr::Kind::Name: return eval_family(e.name, {});
    case Expr::Kind::Family: return eval_family(e.name, e.params);
    case Expr::Kind::Union: return union_pt(eval_point(*e.a, cfg), eval_point(*e.b, cfg));
    case Expr::Kind::Intersect:
      return intersect_pt(eval_point(*e.a, cfg), eval_point(*e.b, cfg));
    case Expr::Kind::Diff:
      return intersect_pt(eval_point(*e.a, cfg), complement_pt(eval_point(*e.b, cfg)));
    case Expr::Kind::Complement: return complement_pt(eval_point(*e.a, cfg));
    default: return constant_point(eval_element(e, cfg));
  }
}

}  // namespace carext
