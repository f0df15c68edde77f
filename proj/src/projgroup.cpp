#include "qj/projgroup.hpp"

#include <algorithm>

namespace qj {

Mat2 Mat2::make(FieldElem a, FieldElem b, FieldElem c, FieldElem d) {
  if (!a.tower()->equals(*b.tower()) || !a.tower()->equals(*c.tower()) ||
      !a.tower()->equals(*d.tower()))
    throw TowerMismatch("matrix entries live in different towers");
  return Mat2{{std::move(a), std::move(b), std::move(c), std::move(d)}};
}

Mat2 Mat2::identity(const TowerPtr& tower) {
  return Mat2{{FieldElem::one(tower), FieldElem::zero(tower), FieldElem::zero(tower),
               FieldElem::one(tower)}};
}

Mat2 Mat2::mul(const Mat2& r) const {
  return Mat2{{e[0] * r.e[0] + e[1] * r.e[2], e[0] * r.e[1] + e[1] * r.e[3],
               e[2] * r.e[0] + e[3] * r.e[2], e[2] * r.e[1] + e[3] * r.e[3]}};
}

Mat2 Mat2::scaled(const FieldElem& s) const {
  return Mat2{{e[0] * s, e[1] * s, e[2] * s, e[3] * s}};
}

bool Mat2::is_scalar() const {
  return e[1].is_zero() && e[2].is_zero() && e[0] == e[3] && !e[0].is_zero();
}

ProjMatrix ProjMatrix::from(const Mat2& m) {
  if (m.det().is_zero()) throw SingularMatrix("projective matrix needs nonzero determinant");
  for (const FieldElem& x : m.e) {
    if (x.is_zero()) continue;
    return ProjMatrix(m.scaled(x.inverse()));
  }
  throw SingularMatrix("zero matrix");  // unreachable: zero matrix has zero det
}

bool ProjMatrix::is_identity() const {
  return m_.e[0].is_one() && m_.e[1].is_zero() && m_.e[2].is_zero() && m_.e[3].is_one();
}

ElemKey ProjMatrix::key() const {
  ElemKey k;
  for (const FieldElem& x : m_.e) {
    k += x.key();
    k += '|';
  }
  return k;
}

std::string ProjMatrix::str() const {
  return "[[" + m_.e[0].str() + "," + m_.e[1].str() + "],[" + m_.e[2].str() + "," +
         m_.e[3].str() + "]]";
}

ProjMatrix pmul(const ProjMatrix& x, const ProjMatrix& y) {
  return ProjMatrix::from(x.lift().mul(y.lift()));
}

ProjMatrix pinv(const ProjMatrix& x) {
  const Mat2& m = x.lift();
  // The adjugate is a projective inverse; no division by det needed.
  return ProjMatrix::from(Mat2{{m.e[3], -m.e[1], -m.e[2], m.e[0]}});
}

int porder(const ProjMatrix& x, int cap) {
  if (cap < 1) throw PreconditionFailed("porder cap must be positive");
  ProjMatrix p = x;
  for (int k = 1; k <= cap; ++k) {
    if (p.is_identity()) return k;
    p = pmul(p, x);
  }
  throw OrderExceedsCap("projective order exceeds cap " + std::to_string(cap));
}

FieldElem trace_sq_over_det(const ProjMatrix& x) {
  const FieldElem t = x.lift().trace();
  return t * t * x.lift().det().inverse();
}

ProjMatrix galois_conj_matrix(const ProjMatrix& x, int level) {
  const Mat2& m = x.lift();
  return ProjMatrix::from(Mat2{{m.e[0].galois_conj(level), m.e[1].galois_conj(level),
                                m.e[2].galois_conj(level), m.e[3].galois_conj(level)}});
}

TwistedElement twisted_mul(const TwistedElement& x, const TwistedElement& y, int level) {
  const ProjMatrix rhs = x.flag ? galois_conj_matrix(y.mat, level) : y.mat;
  return TwistedElement{pmul(x.mat, rhs), (x.flag + y.flag) % 2};
}

TwistedElement twisted_inv(const TwistedElement& x, int level) {
  if (x.flag == 0) return TwistedElement{pinv(x.mat), 0};
  // (m,1)^-1 = (conj(m)^-1, 1): (m,1)(conj(m)^-1,1) = (m conj(conj(m)^-1), 0) = e.
  return TwistedElement{pinv(galois_conj_matrix(x.mat, level)), 1};
}

namespace {

class Pgl2Context final : public GroupContext {
 public:
  explicit Pgl2Context(TowerPtr tower) : tower_(std::move(tower)) {}
  ElemKey identity() const override {
    return ProjMatrix::from(Mat2::identity(tower_)).key();
  }
  ElemKey mul(const ElemKey& a, const ElemKey& b) const override {
    return pmul(decode(a), decode(b)).key();
  }
  ElemKey inv(const ElemKey& a) const override { return pinv(decode(a)).key(); }
  std::string describe(const ElemKey& a) const override { return decode(a).str(); }
  std::string name() const override { return "pgl2(" + tower_->str() + ")"; }

  ProjMatrix decode(const ElemKey& k) const;

 protected:
  TowerPtr tower_;
};

std::vector<Rational> parse_coords_segment(const std::string& seg, int dim) {
  std::vector<Rational> coords;
  size_t start = 0;
  for (size_t i = 0; i <= seg.size(); ++i) {
    if (i == seg.size() || seg[i] == ';') {
      if (i > start) {
        std::string num = seg.substr(start, i - start);
        size_t slash = num.find('/');
        if (slash == std::string::npos)
          coords.emplace_back(BigInt(num));
        else
          coords.emplace_back(BigInt(num.substr(0, slash)), BigInt(num.substr(slash + 1)));
      }
      start = i + 1;
    }
  }
  if (static_cast<int>(coords.size()) != dim)
    throw ParseError("bad coordinate segment in matrix key");
  return coords;
}

ProjMatrix Pgl2Context::decode(const ElemKey& k) const {
  std::array<FieldElem, 4> entries = {FieldElem::zero(tower_), FieldElem::zero(tower_),
                                      FieldElem::zero(tower_), FieldElem::zero(tower_)};
  size_t start = 0;
  int idx = 0;
  for (size_t i = 0; i < k.size(); ++i) {
    if (k[i] != '|') continue;
    if (idx >= 4) throw ParseError("bad matrix key");
    entries[static_cast<size_t>(idx++)] = FieldElem::from_coords(
        tower_, parse_coords_segment(k.substr(start, i - start), tower_->dim()));
    start = i + 1;
  }
  if (idx != 4) throw ParseError("bad matrix key");
  return ProjMatrix::from(Mat2{{entries[0], entries[1], entries[2], entries[3]}});
}

class TwistedContext final : public GroupContext {
 public:
  TwistedContext(TowerPtr tower, int level)
      : base_(std::make_shared<Pgl2Context>(tower)), tower_(std::move(tower)), level_(level) {
    if (level_ < 0 || level_ >= tower_->levels())
      throw LevelOutOfRange("twisted context needs a valid conjugation level");
  }
  ElemKey identity() const override {
    return ElemKey(1, '0') + base_->identity();
  }
  ElemKey mul(const ElemKey& a, const ElemKey& b) const override {
    TwistedElement x = decode(a), y = decode(b);
    return encode(twisted_mul(x, y, level_));
  }
  ElemKey inv(const ElemKey& a) const override {
    return encode(twisted_inv(decode(a), level_));
  }
  std::string describe(const ElemKey& a) const override {
    TwistedElement x = decode(a);
    return "(" + x.mat.str() + ", " + std::to_string(x.flag) + ")";
  }
  std::string name() const override {
    return "pgl2(" + tower_->str() + ") x| Z/2 @level" + std::to_string(level_);
  }

  TwistedElement decode(const ElemKey& k) const {
    if (k.empty()) throw ParseError("empty twisted key");
    return TwistedElement{base_->decode(k.substr(1)), k[0] == '1' ? 1 : 0};
  }
  static ElemKey encode(const TwistedElement& x) {
    return ElemKey(1, x.flag ? '1' : '0') + x.mat.key();
  }

 private:
  std::shared_ptr<Pgl2Context> base_;
  TowerPtr tower_;
  int level_;
};

}  // namespace

CtxPtr pgl2_context(TowerPtr tower) { return std::make_shared<Pgl2Context>(std::move(tower)); }

CtxPtr twisted_context(TowerPtr tower, int level) {
  return std::make_shared<TwistedContext>(std::move(tower), level);
}

ElemKey twisted_key(const TwistedElement& x) { return TwistedContext::encode(x); }

TwistedElement twisted_from_key(const ElemKey& k, const TowerPtr& tower) {
  if (k.empty()) throw ParseError("empty twisted key");
  Pgl2Context ctx(tower);
  return TwistedElement{ctx.decode(k.substr(1)), k[0] == '1' ? 1 : 0};
}

Mat2 parse_mat2(const std::string& text, const TowerPtr& tower) {
  // [[a,b],[c,d]] with element expressions inside. Element syntax has no
  // commas, so every comma outside parentheses separates entries.
  std::vector<std::string> cells;
  int brackets = 0;
  int parens = 0;
  std::string cur;
  for (char ch : text) {
    if (std::isspace(static_cast<unsigned char>(ch))) continue;
    if (ch == '[') {
      ++brackets;
    } else if (ch == ']') {
      if (--brackets < 0) throw ParseError("unbalanced brackets in matrix literal");
    } else if (ch == '(') {
      ++parens;
      cur += ch;
    } else if (ch == ')') {
      if (--parens < 0) throw ParseError("unbalanced parentheses in matrix literal");
      cur += ch;
    } else if (ch == ',' && parens == 0) {
      if (cur.empty()) throw ParseError("empty entry in matrix literal");
      cells.push_back(cur);
      cur.clear();
    } else {
      cur += ch;
    }
  }
  if (brackets != 0 || parens != 0) throw ParseError("unbalanced brackets in matrix literal");
  if (!cur.empty()) cells.push_back(cur);
  if (cells.size() != 4) throw ParseError("matrix literal needs exactly four entries");
  return Mat2::make(parse_element(cells[0], tower), parse_element(cells[1], tower),
                    parse_element(cells[2], tower), parse_element(cells[3], tower));
}

}  // namespace qj
