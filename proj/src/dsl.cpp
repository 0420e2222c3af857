#include "ribbonkit/dsl.hpp"

#include <cctype>
#include <limits>

#include "ribbonkit/cyclo.hpp"

namespace ribbonkit::dsl {

int Index::resolve(int p) const {
  const long v = (uses_p ? p : 0) + offset;
  if (v < std::numeric_limits<int>::min() || v > std::numeric_limits<int>::max()) throw RangeError("index out of range");
  return static_cast<int>(v);
}

ExprPtr Expr::integer(long v) {
  auto e = std::make_shared<Expr>();
  e->kind = Kind::Integer;
  e->value = v;
  return e;
}

ExprPtr Expr::make_atom(dsl::Atom a) {
  auto e = std::make_shared<Expr>();
  e->kind = Kind::Atom;
  e->atom = a;
  return e;
}

ExprPtr Expr::binary(Kind k, ExprPtr l, ExprPtr r) {
  auto e = std::make_shared<Expr>();
  e->kind = k;
  e->lhs = std::move(l);
  e->rhs = std::move(r);
  return e;
}

bool equal(const Expr& a, const Expr& b) {
  if (a.kind != b.kind) return false;
  switch (a.kind) {
    case Expr::Kind::Integer:
      return a.value == b.value;
    case Expr::Kind::Atom:
      return a.atom == b.atom;
    default:
      return equal(*a.lhs, *b.lhs) && equal(*a.rhs, *b.rhs);
  }
}

namespace {

class Parser {
 public:
  explicit Parser(const std::string& text) : text_(text) {}

  ExprPtr run() {
    ExprPtr e = expr();
    skip_space();
    if (pos_ != text_.size()) fail("unexpected '" + std::string(1, text_[pos_]) + "'");
    return e;
  }

 private:
  [[noreturn]] void fail(const std::string& message) const { throw ParseError(message, pos_); }

  void skip_space() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  bool peek(char c) {
    skip_space();
    return pos_ < text_.size() && text_[pos_] == c;
  }

  void expect(char c) {
    if (!peek(c)) fail(std::string("expected '") + c + "'");
    ++pos_;
  }

  bool at_word(const std::string& w) {
    skip_space();
    if (text_.compare(pos_, w.size(), w) != 0) return false;
    const std::size_t end = pos_ + w.size();
    return end >= text_.size() || !std::isalnum(static_cast<unsigned char>(text_[end]));
  }

  long number() {
    skip_space();
    const std::size_t start = pos_;
    while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    if (pos_ == start) fail("expected an integer");
    try {
      return std::stol(text_.substr(start, pos_ - start));
    } catch (const std::out_of_range&) {
      pos_ = start;
      fail("integer too large");
    }
  }

  Index index() {
    skip_space();
    Index idx;
    if (peek('-')) {
      ++pos_;
      idx.offset = -number();
      return idx;
    }
    if (at_word("p")) {
      ++pos_;
      idx.uses_p = true;
      if (peek('+')) {
        ++pos_;
        idx.offset = number();
      } else if (peek('-')) {
        ++pos_;
        idx.offset = -number();
      }
      return idx;
    }
    if (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
      idx.offset = number();
      return idx;
    }
    fail("expected an index");
  }

  ExprPtr expr() {
    ExprPtr e = term();
    while (true) {
      if (peek('+')) {
        ++pos_;
        e = Expr::binary(Expr::Kind::Sum, e, term());
      } else if (peek('-')) {
        ++pos_;
        e = Expr::binary(Expr::Kind::Difference, e, term());
      } else {
        return e;
      }
    }
  }

  ExprPtr term() {
    ExprPtr e = factor();
    while (peek('*')) {
      ++pos_;
      e = Expr::binary(Expr::Kind::Product, e, factor());
    }
    return e;
  }

  ExprPtr factor() {
    skip_space();
    if (pos_ >= text_.size()) fail("unexpected end of input");
    const char c = text_[pos_];
    if (c == '(') {
      ++pos_;
      ExprPtr e = expr();
      expect(')');
      return e;
    }
    if (std::isdigit(static_cast<unsigned char>(c))) return Expr::integer(number());
    return atom();
  }

  ExprPtr atom() {
    Atom a;
    if (at_word("chi")) {
      pos_ += 3;
      a.family = Family::V;
      a.sign = 1;
      a.first.offset = 1;
      // `chi*V[s]` is a single atom; `chi` alone is chi*V[1].
      const std::size_t save = pos_;
      if (peek('*')) {
        ++pos_;
        if (at_word("V")) {
          ++pos_;
          expect('[');
          a.first = index();
          expect(']');
          return Expr::make_atom(a);
        }
      }
      pos_ = save;
      return Expr::make_atom(a);
    }
    skip_space();
    const char head = pos_ < text_.size() ? text_[pos_] : '\0';
    if (head != 'V' && head != 'X' && head != 'L' && head != 'M') fail("expected an object");
    ++pos_;
    expect('[');
    a.first = index();
    switch (head) {
      case 'V':
        a.family = Family::V;
        break;
      case 'X': {
        a.family = Family::X;
        expect(',');
        skip_space();
        if (peek('+')) a.sign = 1;
        else if (peek('-')) a.sign = -1;
        else fail("expected '+' or '-'");
        ++pos_;
        break;
      }
      default:
        a.family = head == 'L' ? Family::L : Family::M;
        expect(',');
        a.second = index();
    }
    expect(']');
    return Expr::make_atom(a);
  }

  const std::string& text_;
  std::size_t pos_ = 0;
};

std::string print_index(const Index& i) {
  if (!i.uses_p) return std::to_string(i.offset);
  if (i.offset == 0) return "p";
  return i.offset > 0 ? "p+" + std::to_string(i.offset) : "p-" + std::to_string(-i.offset);
}

std::string print_atom(const Atom& a) {
  switch (a.family) {
    case Family::V:
      return std::string(a.sign ? "chi*" : "") + "V[" + print_index(a.first) + "]";
    case Family::X:
      return "X[" + print_index(a.first) + "," + (a.sign > 0 ? "+" : "-") + "]";
    case Family::L:
      return "L[" + print_index(a.first) + "," + print_index(a.second) + "]";
    default:
      return "M[" + print_index(a.first) + "," + print_index(a.second) + "]";
  }
}

bool is_additive(const Expr& e) { return e.kind == Expr::Kind::Sum || e.kind == Expr::Kind::Difference; }

Label atom_label(const Atom& a, int p) {
  const int i = a.first.resolve(p);
  switch (a.family) {
    case Family::V:
      return v_label(i, a.sign);
    case Family::X:
      return x_label(i, a.sign);
    case Family::L:
      return vir_label(i, a.second.resolve(p));
    default:
      return singlet_label(i, a.second.resolve(p));
  }
}

void collect_families(const Expr& e, std::optional<Family>& out) {
  if (e.kind == Expr::Kind::Integer) return;
  if (e.kind == Expr::Kind::Atom) {
    if (out && *out != e.atom.family) throw UnknownLabelError("expression mixes objects of different rings");
    out = e.atom.family;
    return;
  }
  collect_families(*e.lhs, out);
  collect_families(*e.rhs, out);
}

}  // namespace

ExprPtr parse(const std::string& input) { return Parser(input).run(); }

std::string print(const Expr& e) {
  switch (e.kind) {
    case Expr::Kind::Integer:
      return std::to_string(e.value);
    case Expr::Kind::Atom:
      return print_atom(e.atom);
    case Expr::Kind::Product: {
      std::string l = print(*e.lhs), r = print(*e.rhs);
      if (is_additive(*e.lhs)) l = "(" + l + ")";
      if (is_additive(*e.rhs) || e.rhs->kind == Expr::Kind::Product) r = "(" + r + ")";
      return l + "*" + r;
    }
    default: {
      std::string r = print(*e.rhs);
      if (is_additive(*e.rhs)) r = "(" + r + ")";
      return print(*e.lhs) + (e.kind == Expr::Kind::Sum ? " + " : " - ") + r;
    }
  }
}

std::optional<Family> family_of(const Expr& e) {
  std::optional<Family> out;
  collect_families(e, out);
  return out;
}

Combination evaluate(const Expr& e, const FusionRing& ring) {
  switch (e.kind) {
    case Expr::Kind::Integer: {
      Combination c;
      if (e.value != 0) c[ring.unit()] = e.value;
      return c;
    }
    case Expr::Kind::Atom:
      return ring.basis(ring.index_of(atom_label(e.atom, ring.p())));
    case Expr::Kind::Product:
      return ring.multiply(evaluate(*e.lhs, ring), evaluate(*e.rhs, ring));
    default: {
      Combination c = evaluate(*e.lhs, ring);
      add_to(c, evaluate(*e.rhs, ring), e.kind == Expr::Kind::Sum ? 1 : -1);
      return c;
    }
  }
}

Evaluation evaluate(const Expr& e, int p, int r_max) {
  std::shared_ptr<const FusionRing> ring;
  switch (family_of(e).value_or(Family::X)) {
    case Family::V:
      ring = std::make_shared<const FusionRing>(uq_ring(FieldContext::create(p)));
      break;
    case Family::L:
      ring = std::make_shared<const FusionRing>(vir_ring(p, r_max));
      break;
    case Family::M:
      ring = std::make_shared<const FusionRing>(singlet_ring(p, r_max));
      break;
    default:
      ring = std::make_shared<const FusionRing>(wp_ring(p));
  }
  Combination value = evaluate(e, *ring);
  return Evaluation{ring, std::move(value)};
}

}  // namespace ribbonkit::dsl
