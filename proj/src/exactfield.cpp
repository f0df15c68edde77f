#include "qj/exactfield.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>

namespace qj {

namespace {

constexpr int kMaxLevels = 2;

void check_same_tower(const FieldElem& a, const FieldElem& b) {
  if (!a.tower()->equals(*b.tower()))
    throw TowerMismatch("operands live in different towers: " + a.tower()->str() + " vs " +
                        b.tower()->str());
}

// Recursive coordinate arithmetic. An element of K_k is a pair (lo, hi) of
// elements of K_{k-1} with value lo + hi*sqrt(r_{k-1}).
using Span = const Rational*;

void add_into(Span a, Span b, Rational* out, int dim) {
  for (int i = 0; i < dim; ++i) out[i] = a[i] + b[i];
}

void mul_rec(const TowerSpec& t, Span a, Span b, Rational* out, int level) {
  if (level == 0) {
    out[0] = a[0] * b[0];
    return;
  }
  const int h = 1 << (level - 1);
  const std::vector<Rational>& r = t.radicand_coords(level - 1);
  std::vector<Rational> lolo(h), hihi(h), lohi(h), hilo(h), hihir(h);
  mul_rec(t, a, b, lolo.data(), level - 1);
  mul_rec(t, a + h, b + h, hihi.data(), level - 1);
  mul_rec(t, a, b + h, lohi.data(), level - 1);
  mul_rec(t, a + h, b, hilo.data(), level - 1);
  mul_rec(t, hihi.data(), r.data(), hihir.data(), level - 1);
  add_into(lolo.data(), hihir.data(), out, h);
  add_into(lohi.data(), hilo.data(), out + h, h);
}

bool all_zero(Span a, int dim) {
  for (int i = 0; i < dim; ++i)
    if (!a[i].is_zero()) return false;
  return true;
}

void inv_rec(const TowerSpec& t, Span a, Rational* out, int level) {
  if (level == 0) {
    if (a[0].is_zero()) throw DivisionByZero("inverse of zero field element");
    out[0] = a[0].inverse();
    return;
  }
  const int h = 1 << (level - 1);
  const std::vector<Rational>& r = t.radicand_coords(level - 1);
  // 1/(lo + hi*s) = (lo - hi*s) / (lo^2 - hi^2*r), the norm lies in K_{k-1}.
  std::vector<Rational> lo2(h), hi2(h), hi2r(h), norm(h), invn(h), neghi(h);
  mul_rec(t, a, a, lo2.data(), level - 1);
  mul_rec(t, a + h, a + h, hi2.data(), level - 1);
  mul_rec(t, hi2.data(), r.data(), hi2r.data(), level - 1);
  for (int i = 0; i < h; ++i) norm[i] = lo2[i] - hi2r[i];
  if (all_zero(norm.data(), h)) throw DivisionByZero("inverse of zero field element");
  inv_rec(t, norm.data(), invn.data(), level - 1);
  mul_rec(t, a, invn.data(), out, level - 1);
  for (int i = 0; i < h; ++i) neghi[i] = -a[h + i];
  mul_rec(t, neghi.data(), invn.data(), out + h, level - 1);
}

}  // namespace

TowerPtr TowerSpec::rationals() {
  static const TowerPtr q = TowerPtr(new TowerSpec());
  return q;
}

const std::vector<Rational>& TowerSpec::radicand_coords(int level) const {
  if (level < 0 || level >= levels())
    throw LevelOutOfRange("tower has no level " + std::to_string(level));
  return radicands_[static_cast<size_t>(level)];
}

bool TowerSpec::equals(const TowerSpec& other) const { return radicands_ == other.radicands_; }

std::string TowerSpec::str() const {
  if (radicands_.empty()) return "Q";
  std::string s = "Q(";
  for (size_t k = 0; k < radicands_.size(); ++k) {
    if (k) s += ",";
    s += "sqrt(";
    const auto& r = radicands_[k];
    bool first = true;
    for (size_t i = 0; i < r.size(); ++i) {
      if (r[i].is_zero()) continue;
      if (!first) s += "+";
      s += r[i].str();
      if (i) s += "*b" + std::to_string(i);
      first = false;
    }
    s += ")";
  }
  return s + ")";
}

bool is_square_at_level(const std::vector<Rational>& coords, const TowerSpec& tower, int level) {
  if (level == 0) return coords.at(0).is_square();
  if (level == 1) {
    // s = u + v*sqrt(r0). (p + q*sqrt(r0))^2 = s forces either q = 0 / p = 0
    // (when v = 0) or p^2 = (u +- w)/2 with w^2 = u^2 - v^2*r0.
    const Rational& u = coords.at(0);
    const Rational& v = coords.at(1);
    const Rational r0 = tower.radicand_coords(0).at(0);
    if (v.is_zero()) {
      if (u.is_square()) return true;
      return (u / r0).is_square();
    }
    auto w = (u * u - v * v * r0).exact_sqrt();
    if (!w) return false;
    const Rational half(1, 2);
    return ((u + *w) * half).is_square() || ((u - *w) * half).is_square();
  }
  throw TowerTooDeep("squareness test undefined past level 1");
}

TowerPtr TowerSpec::make(const std::vector<FieldElem>& radicands) {
  if (radicands.size() > kMaxLevels)
    throw TowerTooDeep("towers are capped at " + std::to_string(kMaxLevels) + " levels");
  auto spec = std::shared_ptr<TowerSpec>(new TowerSpec());
  for (size_t k = 0; k < radicands.size(); ++k) {
    const FieldElem& r = radicands[k];
    const int want_dim = 1 << k;
    std::vector<Rational> coords(static_cast<size_t>(want_dim));
    for (int i = 0; i < r.tower()->dim(); ++i) {
      if (i < want_dim)
        coords[static_cast<size_t>(i)] = r.coord(i);
      else if (!r.coord(i).is_zero())
        throw FieldError("radicand " + std::to_string(k) + " does not live in the prefix tower");
    }
    if (all_zero(coords.data(), want_dim)) throw FieldError("radicand must be nonzero");
    if (is_square_at_level(coords, *spec, static_cast<int>(k)))
      throw RadicandIsSquare("radicand " + std::to_string(k) + " is a square at its level");
    spec->radicands_.push_back(std::move(coords));
  }
  return spec;
}

TowerPtr TowerSpec::make(const std::vector<Rational>& radicands) {
  std::vector<FieldElem> elems;
  elems.reserve(radicands.size());
  for (const Rational& r : radicands) elems.push_back(FieldElem::of(rationals(), r));
  return make(elems);
}

FieldElem FieldElem::of(TowerPtr tower, Rational r) {
  std::vector<Rational> c(static_cast<size_t>(tower->dim()));
  c[0] = std::move(r);
  return FieldElem(std::move(tower), std::move(c));
}

FieldElem FieldElem::radical(TowerPtr tower, int level) {
  if (level < 0 || level >= tower->levels())
    throw LevelOutOfRange("tower has no level " + std::to_string(level));
  std::vector<Rational> c(static_cast<size_t>(tower->dim()));
  c[static_cast<size_t>(1 << level)] = Rational(1);
  return FieldElem(std::move(tower), std::move(c));
}

FieldElem FieldElem::from_coords(TowerPtr tower, std::vector<Rational> coords) {
  if (static_cast<int>(coords.size()) != tower->dim())
    throw FieldError("coordinate count does not match tower dimension");
  return FieldElem(std::move(tower), std::move(coords));
}

bool FieldElem::is_zero() const { return all_zero(coords_.data(), tower_->dim()); }

bool FieldElem::is_one() const {
  if (!coords_[0].is_one()) return false;
  return std::all_of(coords_.begin() + 1, coords_.end(),
                     [](const Rational& r) { return r.is_zero(); });
}

bool FieldElem::is_rational() const {
  return std::all_of(coords_.begin() + 1, coords_.end(),
                     [](const Rational& r) { return r.is_zero(); });
}

FieldElem operator+(const FieldElem& a, const FieldElem& b) {
  check_same_tower(a, b);
  std::vector<Rational> out(a.coords_.size());
  add_into(a.coords_.data(), b.coords_.data(), out.data(), a.tower_->dim());
  return FieldElem(a.tower_, std::move(out));
}

FieldElem operator-(const FieldElem& a, const FieldElem& b) { return a + (-b); }

FieldElem FieldElem::operator-() const {
  std::vector<Rational> out(coords_.size());
  for (size_t i = 0; i < coords_.size(); ++i) out[i] = -coords_[i];
  return FieldElem(tower_, std::move(out));
}

FieldElem operator*(const FieldElem& a, const FieldElem& b) {
  check_same_tower(a, b);
  std::vector<Rational> out(a.coords_.size());
  mul_rec(*a.tower_, a.coords_.data(), b.coords_.data(), out.data(), a.tower_->levels());
  return FieldElem(a.tower_, std::move(out));
}

FieldElem FieldElem::inverse() const {
  std::vector<Rational> out(coords_.size());
  inv_rec(*tower_, coords_.data(), out.data(), tower_->levels());
  return FieldElem(tower_, std::move(out));
}

FieldElem operator/(const FieldElem& a, const FieldElem& b) {
  check_same_tower(a, b);
  return a * b.inverse();
}

bool operator==(const FieldElem& a, const FieldElem& b) {
  return a.tower_->equals(*b.tower_) && a.coords_ == b.coords_;
}

FieldElem FieldElem::galois_conj(int level) const {
  if (level < 0 || level >= tower_->levels())
    throw LevelOutOfRange("tower has no level " + std::to_string(level));
  // Later radicands must be fixed by the involution, otherwise negating the
  // radical is not a ring map of the full tower.
  for (int k = level + 1; k < tower_->levels(); ++k) {
    const auto& r = tower_->radicand_coords(k);
    for (size_t i = 0; i < r.size(); ++i)
      if ((i >> level) & 1u && !r[i].is_zero())
        throw FieldError("galois conjugation at level " + std::to_string(level) +
                         " does not fix the level-" + std::to_string(k) + " radicand");
  }
  std::vector<Rational> out(coords_.size());
  for (size_t i = 0; i < coords_.size(); ++i)
    out[i] = ((i >> level) & 1u) ? -coords_[i] : coords_[i];
  return FieldElem(tower_, std::move(out));
}

std::string FieldElem::str() const {
  std::vector<std::string> radical_names;
  for (int level = 0; level < tower_->levels(); ++level) {
    const auto& r = tower_->radicand_coords(level);
    bool rational_radicand =
        std::all_of(r.begin() + 1, r.end(), [](const Rational& c) { return c.is_zero(); });
    radical_names.push_back(rational_radicand ? "sqrt(" + r[0].str() + ")"
                                              : "sqrt(r" + std::to_string(level) + ")");
  }
  std::vector<std::string> names(static_cast<size_t>(tower_->dim()));
  for (int i = 1; i < tower_->dim(); ++i) {
    std::string n;
    for (int level = 0; level < tower_->levels(); ++level) {
      if (!((i >> level) & 1)) continue;
      if (!n.empty()) n += "*";
      n += radical_names[static_cast<size_t>(level)];
    }
    names[static_cast<size_t>(i)] = n;
  }
  std::string s;
  for (int i = 0; i < tower_->dim(); ++i) {
    const Rational& c = coords_[static_cast<size_t>(i)];
    if (c.is_zero()) continue;
    std::string term;
    if (i == 0) {
      term = c.str();
    } else if (c.is_one()) {
      term = names[i];
    } else if ((-c).is_one()) {
      term = "-" + names[i];
    } else {
      term = c.str() + "*" + names[i];
    }
    if (!s.empty() && term[0] != '-') s += "+";
    s += term;
  }
  return s.empty() ? "0" : s;
}

std::string FieldElem::key() const {
  std::string s;
  for (const Rational& c : coords_) {
    s += c.str();
    s += ';';
  }
  return s;
}

bool verify_two_squares_witness(const FieldElem& x, const FieldElem& y) {
  check_same_tower(x, y);
  FieldElem minus_one = -FieldElem::one(x.tower());
  return x * x + y * y == minus_one;
}

// ---------------------------------------------------------------------------
// Element expression parser.

namespace {

struct ElemParser {
  const std::string& text;
  size_t pos = 0;
  const TowerPtr& tower;

  ElemParser(const std::string& t, const TowerPtr& tw) : text(t), tower(tw) {}

  void skip_ws() {
    while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
  }

  bool eat(char c) {
    skip_ws();
    if (pos < text.size() && text[pos] == c) {
      ++pos;
      return true;
    }
    return false;
  }

  [[noreturn]] void fail(const std::string& what) {
    throw ParseError("element syntax error at offset " + std::to_string(pos) + ": " + what);
  }

  FieldElem parse() {
    FieldElem e = expr();
    skip_ws();
    if (pos != text.size()) fail("trailing input");
    return e;
  }

  FieldElem expr() {
    FieldElem e = term();
    for (;;) {
      if (eat('+')) e = e + term();
      else if (eat('-')) e = e - term();
      else return e;
    }
  }

  FieldElem term() {
    FieldElem e = unary();
    for (;;) {
      if (eat('*')) e = e * unary();
      else if (eat('/')) {
        FieldElem d = unary();
        if (d.is_zero()) fail("division by zero");
        e = e / d;
      } else {
        return e;
      }
    }
  }

  FieldElem unary() {
    if (eat('-')) return -unary();
    return primary();
  }

  FieldElem primary() {
    skip_ws();
    if (pos >= text.size()) fail("unexpected end of input");
    if (text.compare(pos, 5, "sqrt(") == 0) {
      pos += 5;
      FieldElem arg = expr();
      if (!eat(')')) fail("expected ')' after sqrt argument");
      return resolve_sqrt(arg);
    }
    if (text[pos] == '(') {
      ++pos;
      FieldElem e = expr();
      if (!eat(')')) fail("expected ')'");
      return e;
    }
    if (std::isdigit(static_cast<unsigned char>(text[pos]))) {
      size_t start = pos;
      while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) ++pos;
      return FieldElem::of(tower, Rational(BigInt(text.substr(start, pos - start))));
    }
    fail("expected integer, sqrt(..) or '('");
  }

  FieldElem resolve_sqrt(const FieldElem& arg) {
    for (int level = 0; level < tower->levels(); ++level) {
      const auto& r = tower->radicand_coords(level);
      bool match = true;
      for (int i = 0; i < tower->dim(); ++i) {
        Rational want = i < static_cast<int>(r.size()) ? r[static_cast<size_t>(i)] : Rational(0);
        if (arg.coord(i) != want) {
          match = false;
          break;
        }
      }
      if (match) return FieldElem::radical(tower, level);
    }
    // Exact rational squares are still fine: sqrt(4) = 2.
    if (arg.is_rational()) {
      if (auto root = arg.coord(0).exact_sqrt()) return FieldElem::of(tower, *root);
    }
    fail("sqrt argument '" + arg.str() + "' is not a radicand of tower " + tower->str());
  }
};

}  // namespace

FieldElem parse_element(const std::string& text, const TowerPtr& tower) {
  return ElemParser(text, tower).parse();
}

}  // namespace qj
