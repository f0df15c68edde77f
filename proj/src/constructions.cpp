#include "qj/constructions.hpp"

#include <algorithm>

namespace qj {

namespace {

// Projection of an element onto the subfield without sqrt(r_level) and the
// sqrt(r_level) component: x = lo + hi * sqrt(r_level).
std::pair<FieldElem, FieldElem> split_at_level(const FieldElem& x, int level) {
  const TowerPtr& t = x.tower();
  std::vector<Rational> lo(static_cast<size_t>(t->dim()));
  std::vector<Rational> hi(static_cast<size_t>(t->dim()));
  for (int i = 0; i < t->dim(); ++i) {
    if ((i >> level) & 1)
      hi[static_cast<size_t>(i & ~(1 << level))] = x.coord(i);
    else
      lo[static_cast<size_t>(i)] = x.coord(i);
  }
  return {FieldElem::from_coords(t, std::move(lo)), FieldElem::from_coords(t, std::move(hi))};
}

bool in_base_subfield(const FieldElem& x, int r_level) {
  for (int i = 0; i < x.tower()->dim(); ++i)
    if ((i >> r_level) & 1 && !x.coord(i).is_zero()) return false;
  return true;
}

}  // namespace

A5Witness A5Witness::make(TowerPtr tower, int r_level, FieldElem sqrt5, FieldElem a, FieldElem b,
                          FieldElem c, FieldElem d) {
  if (r_level < 0 || r_level >= tower->levels())
    throw WitnessInvalid("witness names a radical level the tower does not have");
  for (const FieldElem* x : {&sqrt5, &a, &b, &c, &d})
    if (!x->tower()->equals(*tower)) throw WitnessInvalid("witness elements leave the tower");
  const FieldElem five = FieldElem::of(tower, Rational(5));
  if (sqrt5 * sqrt5 != five) throw WitnessInvalid("designated sqrt(5) does not square to 5");
  for (const FieldElem* x : {&a, &b, &c, &d})
    if (!in_base_subfield(*x, r_level))
      throw WitnessInvalid("witness coefficients must avoid sqrt(r)");
  const FieldElem sqrt_r = FieldElem::radical(tower, r_level);
  const FieldElem u = a + b * sqrt_r;
  const FieldElem v = c + d * sqrt_r;
  if (!verify_two_squares_witness(u, v))
    throw WitnessInvalid("(a+b*sqrt(r))^2 + (c+d*sqrt(r))^2 != -1");
  return A5Witness{std::move(tower), r_level, std::move(sqrt5), std::move(a), std::move(b),
                   std::move(c), std::move(d)};
}

A5Witness witness_from_two_squares(TowerPtr tower, int r_level, const FieldElem& sqrt5,
                                   const FieldElem& x, const FieldElem& y) {
  if (!verify_two_squares_witness(x, y)) throw WitnessInvalid("x^2 + y^2 != -1");
  auto [a, b] = split_at_level(x, r_level);
  auto [c, d] = split_at_level(y, r_level);
  return A5Witness::make(std::move(tower), r_level, sqrt5, a, b, c, d);
}

std::pair<Mat2, Mat2> a5_raw_matrices(const A5Witness& w) {
  const TowerPtr& t = w.tower;
  const FieldElem sqrt_r = FieldElem::radical(t, w.r_level);
  const FieldElem one = FieldElem::one(t);
  const FieldElem three = FieldElem::of(t, Rational(3));
  const FieldElem two = FieldElem::of(t, Rational(2));
  const FieldElem zero = FieldElem::zero(t);
  const FieldElem p = w.a + w.b * sqrt_r;  // a + b sqrt(r)
  const FieldElem q = w.c + w.d * sqrt_r;  // c + d sqrt(r)

  Mat2 a_mat = Mat2::make(zero, one, -one, zero);
  Mat2 c_mat = Mat2::make(two * q + w.sqrt5 - three, two * p - w.sqrt5 + one,
                          two * p + w.sqrt5 - one, -(two * q) + w.sqrt5 - three);
  return {a_mat, c_mat};
}

std::pair<ProjMatrix, ProjMatrix> a5_matrices(const A5Witness& w) {
  auto [a_raw, c_raw] = a5_raw_matrices(w);
  ProjMatrix a = ProjMatrix::from(a_raw);
  ProjMatrix c = ProjMatrix::from(c_raw);
  if (porder(a, 4) != 2) throw RelationFailed("A^2 != identity");
  if (porder(c, 8) != 5) throw RelationFailed("C^5 != identity");
  if (porder(pmul(c, a), 8) != 3) throw RelationFailed("(CA)^3 != identity");
  return {a, c};
}

Mat2 s5_r_matrix(const A5Witness& w) {
  return Mat2::make(w.a + w.c, w.a - w.c, w.a - w.c, -w.a - w.c);
}

GroupPtr a5_matrix_group(const A5Witness& w) {
  auto [a, c] = a5_matrices(w);
  CtxPtr ctx = pgl2_context(w.tower);
  GroupPtr g = FiniteGroup::generate(ctx, {a.key(), c.key()}, 200);
  if (g->order() != 60) throw UnexpectedStructure("matrix closure has order != 60");
  if (recognize(*g).kind != Recognition::Kind::A5)
    throw UnexpectedStructure("matrix closure is not recognized as A5");
  return g;
}

GroupPtr s5_twisted_group(const A5Witness& w) {
  // The conjugated level must carry sqrt(5) itself (the r = 5 case).
  const auto& rad = w.tower->radicand_coords(w.r_level);
  bool r_is_five = rad[0] == Rational(5) &&
                   std::all_of(rad.begin() + 1, rad.end(),
                               [](const Rational& c) { return c.is_zero(); });
  if (!r_is_five || w.sqrt5 != FieldElem::radical(w.tower, w.r_level))
    throw WitnessInvalid("twisted construction needs the conjugated radical to be sqrt(5)");

  auto [a, c] = a5_matrices(w);
  ProjMatrix r = ProjMatrix::from(s5_r_matrix(w));
  CtxPtr ctx = twisted_context(w.tower, w.r_level);
  const ElemKey ka = twisted_key({a, 0});
  const ElemKey kc = twisted_key({c, 0});
  const ElemKey kr = twisted_key({r, 1});
  if (ctx->mul(kr, kr) != ctx->identity()) throw UnexpectedStructure("(R,1) does not square to e");

  GroupPtr g = FiniteGroup::generate(ctx, {ka, kc, kr}, 300);
  if (g->order() != 120) throw UnexpectedStructure("twisted closure has order != 120");
  if (center(*g).size() != 1) throw UnexpectedStructure("twisted closure has nontrivial center");

  std::vector<int> flag0;
  for (int i = 0; i < g->order(); ++i)
    if (g->key(i)[0] == '0') flag0.push_back(i);
  if (flag0.size() != 60) throw UnexpectedStructure("flag-0 part has wrong size");
  if (classify_extension(*g, flag0) != ExtensionTag::SymmetricGroup)
    throw UnexpectedStructure("extension over the flag-0 part is not symmetric");
  return g;
}

namespace {

void put_u32(ElemKey& k, std::uint32_t v) {
  k += static_cast<char>((v >> 24) & 0xff);
  k += static_cast<char>((v >> 16) & 0xff);
  k += static_cast<char>((v >> 8) & 0xff);
  k += static_cast<char>(v & 0xff);
}

std::uint32_t get_u32(const ElemKey& k, size_t at) {
  return (static_cast<std::uint32_t>(static_cast<unsigned char>(k[at])) << 24) |
         (static_cast<std::uint32_t>(static_cast<unsigned char>(k[at + 1])) << 16) |
         (static_cast<std::uint32_t>(static_cast<unsigned char>(k[at + 2])) << 8) |
         static_cast<std::uint32_t>(static_cast<unsigned char>(k[at + 3]));
}

// Elements are (left, right, flag) index triples into the base group; the
// flag byte leads so it is most significant in the canonical order.
class WreathSquareContext final : public GroupContext {
 public:
  explicit WreathSquareContext(GroupPtr base) : base_(std::move(base)) {}

  static ElemKey encode(int left, int right, int flag) {
    ElemKey k(1, flag ? '1' : '0');
    put_u32(k, static_cast<std::uint32_t>(left));
    put_u32(k, static_cast<std::uint32_t>(right));
    return k;
  }

  ElemKey identity() const override { return encode(0, 0, 0); }

  ElemKey mul(const ElemKey& x, const ElemKey& y) const override {
    const int xl = static_cast<int>(get_u32(x, 1)), xr = static_cast<int>(get_u32(x, 5));
    const int yl = static_cast<int>(get_u32(y, 1)), yr = static_cast<int>(get_u32(y, 5));
    const int xf = x[0] == '1', yf = y[0] == '1';
    // (g1,g2,i)(h1,h2,j) multiplies straight for i = 0 and swaps the
    // right-hand coordinates for i = 1.
    if (xf == 0) return encode(base_->mul(xl, yl), base_->mul(xr, yr), yf);
    return encode(base_->mul(xl, yr), base_->mul(xr, yl), 1 - yf);
  }

  ElemKey inv(const ElemKey& x) const override {
    const int xl = static_cast<int>(get_u32(x, 1)), xr = static_cast<int>(get_u32(x, 5));
    if (x[0] == '0') return encode(base_->inv(xl), base_->inv(xr), 0);
    // (g1,g2,1)^-1 = (g2^-1, g1^-1, 1).
    return encode(base_->inv(xr), base_->inv(xl), 1);
  }

  std::string describe(const ElemKey& x) const override {
    return "(" + base_->describe(static_cast<int>(get_u32(x, 1))) + ", " +
           base_->describe(static_cast<int>(get_u32(x, 5))) + ", " + (x[0] == '1' ? "1" : "0") +
           ")";
  }
  std::string name() const override { return "wreath2(" + base_->ctx().name() + ")"; }

 private:
  GroupPtr base_;
};

class ProductContext final : public GroupContext {
 public:
  ProductContext(GroupPtr left, GroupPtr right) : l_(std::move(left)), r_(std::move(right)) {}

  static ElemKey encode(int a, int b) {
    ElemKey k;
    put_u32(k, static_cast<std::uint32_t>(a));
    put_u32(k, static_cast<std::uint32_t>(b));
    return k;
  }

  ElemKey identity() const override { return encode(0, 0); }
  ElemKey mul(const ElemKey& x, const ElemKey& y) const override {
    return encode(l_->mul(static_cast<int>(get_u32(x, 0)), static_cast<int>(get_u32(y, 0))),
                  r_->mul(static_cast<int>(get_u32(x, 4)), static_cast<int>(get_u32(y, 4))));
  }
  ElemKey inv(const ElemKey& x) const override {
    return encode(l_->inv(static_cast<int>(get_u32(x, 0))),
                  r_->inv(static_cast<int>(get_u32(x, 4))));
  }
  std::string describe(const ElemKey& x) const override {
    return "(" + l_->describe(static_cast<int>(get_u32(x, 0))) + ", " +
           r_->describe(static_cast<int>(get_u32(x, 4))) + ")";
  }
  std::string name() const override {
    return "prod(" + l_->ctx().name() + ", " + r_->ctx().name() + ")";
  }

 private:
  GroupPtr l_;
  GroupPtr r_;
};

class CyclicContext final : public GroupContext {
 public:
  explicit CyclicContext(int n) : n_(n) {}
  static ElemKey encode(int v) {
    ElemKey k;
    put_u32(k, static_cast<std::uint32_t>(v));
    return k;
  }
  ElemKey identity() const override { return encode(0); }
  ElemKey mul(const ElemKey& a, const ElemKey& b) const override {
    return encode((static_cast<int>(get_u32(a, 0)) + static_cast<int>(get_u32(b, 0))) % n_);
  }
  ElemKey inv(const ElemKey& a) const override {
    return encode((n_ - static_cast<int>(get_u32(a, 0))) % n_);
  }
  std::string describe(const ElemKey& a) const override {
    return std::to_string(get_u32(a, 0)) + " mod " + std::to_string(n_);
  }
  std::string name() const override { return "Z/" + std::to_string(n_); }

 private:
  int n_;
};

// Rotations are 0..n-1, reflections n..2n-1.
class DihedralContext final : public GroupContext {
 public:
  explicit DihedralContext(int n) : n_(n) {}
  static ElemKey encode(int v) {
    ElemKey k;
    put_u32(k, static_cast<std::uint32_t>(v));
    return k;
  }
  ElemKey identity() const override { return encode(0); }
  ElemKey mul(const ElemKey& a, const ElemKey& b) const override {
    const int x = static_cast<int>(get_u32(a, 0));
    const int y = static_cast<int>(get_u32(b, 0));
    // Reflection n+k is r^k*s with s*r*s = r^-1.
    int out;
    if (x < n_ && y < n_) out = (x + y) % n_;
    else if (x < n_) out = (y - n_ + x) % n_ + n_;
    else if (y < n_) out = (x - n_ - y + n_) % n_ + n_;
    else out = (x - y + n_) % n_;
    return encode(out);
  }
  ElemKey inv(const ElemKey& a) const override {
    const int x = static_cast<int>(get_u32(a, 0));
    return encode(x < n_ ? (n_ - x) % n_ : x);
  }
  std::string describe(const ElemKey& a) const override {
    const int x = static_cast<int>(get_u32(a, 0));
    return x < n_ ? "r^" + std::to_string(x) : "s*r^" + std::to_string(x - n_);
  }
  std::string name() const override { return "D" + std::to_string(2 * n_); }

 private:
  int n_;
};

}  // namespace

GroupPtr square_wreath(const GroupPtr& g) {
  const int n = g->order();
  if (n > 64) throw ResultTooLarge("wreath square is enumerated only for |G| <= 64");
  auto ctx = std::make_shared<WreathSquareContext>(g);
  std::vector<ElemKey> elems;
  elems.reserve(static_cast<size_t>(2 * n * n));
  for (int flag = 0; flag <= 1; ++flag)
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j) elems.push_back(WreathSquareContext::encode(i, j, flag));
  std::vector<ElemKey> gens;
  for (int s : g->generators()) {
    gens.push_back(WreathSquareContext::encode(s, 0, 0));
    gens.push_back(WreathSquareContext::encode(0, s, 0));
  }
  gens.push_back(WreathSquareContext::encode(0, 0, 1));
  return FiniteGroup::from_enumeration(ctx, std::move(elems), gens);
}

GroupPtr direct_product(const GroupPtr& g, const GroupPtr& h) {
  const std::size_t n = static_cast<std::size_t>(g->order()) * static_cast<std::size_t>(h->order());
  if (n > 20000) throw ResultTooLarge("direct product exceeds the enumeration budget");
  auto ctx = std::make_shared<ProductContext>(g, h);
  std::vector<ElemKey> elems;
  elems.reserve(n);
  for (int i = 0; i < g->order(); ++i)
    for (int j = 0; j < h->order(); ++j) elems.push_back(ProductContext::encode(i, j));
  std::vector<ElemKey> gens;
  for (int s : g->generators()) gens.push_back(ProductContext::encode(s, 0));
  for (int s : h->generators()) gens.push_back(ProductContext::encode(0, s));
  if (gens.empty()) gens.push_back(ctx->identity());
  return FiniteGroup::from_enumeration(ctx, std::move(elems), gens);
}

GroupPtr cyclic_group(int n) {
  if (n < 1) throw PreconditionFailed("cyclic group needs n >= 1");
  if (n > 20000) throw ResultTooLarge("cyclic group exceeds the enumeration budget");
  auto ctx = std::make_shared<CyclicContext>(n);
  std::vector<ElemKey> elems;
  for (int i = 0; i < n; ++i) elems.push_back(CyclicContext::encode(i));
  std::vector<ElemKey> gens = {n > 1 ? CyclicContext::encode(1) : ctx->identity()};
  return FiniteGroup::from_enumeration(ctx, std::move(elems), gens);
}

GroupPtr dihedral_group(int order) {
  if (order < 4 || order % 2 != 0)
    throw PreconditionFailed("dihedral groups need an even order >= 4");
  const int n = order / 2;
  auto ctx = std::make_shared<DihedralContext>(n);
  std::vector<ElemKey> elems;
  for (int i = 0; i < order; ++i) elems.push_back(DihedralContext::encode(i));
  std::vector<ElemKey> gens = {DihedralContext::encode(1), DihedralContext::encode(n)};
  return FiniteGroup::from_enumeration(ctx, std::move(elems), gens);
}

bool verify_presentation_a5(const ElemKey& x, const ElemKey& y, const CtxPtr& ctx,
                            std::size_t cap) {
  const ElemKey id = ctx->identity();
  ElemKey x5 = x;
  for (int i = 1; i < 5; ++i) x5 = ctx->mul(x5, x);
  if (x5 != id) return false;
  if (ctx->mul(y, y) != id) return false;
  const ElemKey xy = ctx->mul(x, y);
  if (ctx->mul(ctx->mul(xy, xy), xy) != id) return false;
  GroupPtr g = FiniteGroup::generate(ctx, {x, y}, cap);
  return g->order() == 60;
}

}  // namespace qj
