#include "qj/permgroup.hpp"

#include <algorithm>
#include <cctype>
#include <numeric>

#include "qj/rational.hpp"

namespace qj {

Permutation Permutation::identity(int degree) {
  if (degree < 1 || degree > kMaxDegree)
    throw DegreeTooLarge("degree must be in 1.." + std::to_string(kMaxDegree));
  std::vector<int> img(static_cast<size_t>(degree));
  std::iota(img.begin(), img.end(), 1);
  return Permutation(std::move(img));
}

Permutation Permutation::from_images(std::vector<int> images) {
  const int n = static_cast<int>(images.size());
  if (n < 1 || n > kMaxDegree)
    throw DegreeTooLarge("degree must be in 1.." + std::to_string(kMaxDegree));
  std::vector<char> seen(static_cast<size_t>(n), 0);
  for (int v : images) {
    if (v < 1 || v > n || seen[static_cast<size_t>(v - 1)])
      throw GroupError("images do not form a bijection of 1.." + std::to_string(n));
    seen[static_cast<size_t>(v - 1)] = 1;
  }
  return Permutation(std::move(images));
}

Permutation Permutation::parse(const std::string& cycles, int degree) {
  std::vector<std::vector<int>> parsed;
  size_t pos = 0;
  auto skip_ws = [&] {
    while (pos < cycles.size() && std::isspace(static_cast<unsigned char>(cycles[pos]))) ++pos;
  };
  skip_ws();
  if (cycles.compare(pos, std::string::npos, "e") == 0 ||
      cycles.compare(pos, std::string::npos, "()") == 0)
    pos = cycles.size();
  while (pos < cycles.size()) {
    skip_ws();
    if (pos >= cycles.size()) break;
    if (cycles[pos] != '(') throw ParseError("expected '(' in cycle notation");
    ++pos;
    std::vector<int> cycle;
    bool spaced = cycles.find(' ', pos) != std::string::npos &&
                  cycles.find(' ', pos) < cycles.find(')', pos);
    while (pos < cycles.size() && cycles[pos] != ')') {
      skip_ws();
      if (cycles[pos] == ')') break;
      if (!std::isdigit(static_cast<unsigned char>(cycles[pos])))
        throw ParseError("expected digit in cycle notation");
      if (spaced) {
        size_t start = pos;
        while (pos < cycles.size() && std::isdigit(static_cast<unsigned char>(cycles[pos]))) ++pos;
        cycle.push_back(std::stoi(cycles.substr(start, pos - start)));
      } else {
        cycle.push_back(cycles[pos] - '0');
        ++pos;
      }
    }
    if (pos >= cycles.size()) throw ParseError("unterminated cycle");
    ++pos;  // ')'
    if (cycle.size() < 2) throw ParseError("cycles need at least two points");
    parsed.push_back(std::move(cycle));
    skip_ws();
  }

  int max_point = 1;
  for (const auto& c : parsed)
    for (int p : c) max_point = std::max(max_point, p);
  int n = degree > 0 ? degree : max_point;
  if (max_point > n) throw ParseError("cycle moves a point beyond the given degree");
  if (n > kMaxDegree) throw DegreeTooLarge("degree must be at most " + std::to_string(kMaxDegree));

  Permutation result = identity(n);
  // Juxtaposed cycles compose left-to-right on the right action convention:
  // apply the rightmost cycle first. Disjoint cycles commute, so the usual
  // inputs are order-independent.
  for (auto it = parsed.rbegin(); it != parsed.rend(); ++it) {
    std::vector<int> img(static_cast<size_t>(n));
    std::iota(img.begin(), img.end(), 1);
    const auto& c = *it;
    for (size_t i = 0; i < c.size(); ++i) {
      int from = c[i];
      int to = c[(i + 1) % c.size()];
      if (img[static_cast<size_t>(from - 1)] != from)
        throw ParseError("point repeated within a cycle");
      img[static_cast<size_t>(from - 1)] = to;
    }
    result = result.compose(from_images(std::move(img)));
  }
  return result;
}

Permutation Permutation::compose(const Permutation& then) const {
  if (degree() != then.degree()) throw DegreeMismatch("composing permutations of unequal degree");
  std::vector<int> img(img_.size());
  for (int p = 1; p <= degree(); ++p)
    img[static_cast<size_t>(p - 1)] = then.apply(apply(p));
  return Permutation(std::move(img));
}

Permutation Permutation::inverse() const {
  std::vector<int> img(img_.size());
  for (int p = 1; p <= degree(); ++p) img[static_cast<size_t>(apply(p) - 1)] = p;
  return Permutation(std::move(img));
}

std::vector<int> Permutation::cycle_type() const {
  std::vector<char> seen(img_.size(), 0);
  std::vector<int> type;
  for (int p = 1; p <= degree(); ++p) {
    if (seen[static_cast<size_t>(p - 1)]) continue;
    int len = 0;
    int q = p;
    do {
      seen[static_cast<size_t>(q - 1)] = 1;
      q = apply(q);
      ++len;
    } while (q != p);
    type.push_back(len);
  }
  std::sort(type.rbegin(), type.rend());
  return type;
}

bool Permutation::is_even() const { return cycle_type_is_even(cycle_type()); }

std::string Permutation::cycle_str() const {
  std::string s;
  std::vector<char> seen(img_.size(), 0);
  for (int p = 1; p <= degree(); ++p) {
    if (seen[static_cast<size_t>(p - 1)] || apply(p) == p) continue;
    s += "(";
    int q = p;
    bool first = true;
    do {
      seen[static_cast<size_t>(q - 1)] = 1;
      if (!first) s += degree() > 9 ? " " : "";
      s += std::to_string(q);
      q = apply(q);
      first = false;
    } while (q != p);
    s += ")";
  }
  return s.empty() ? "e" : s;
}

ElemKey Permutation::key() const {
  ElemKey k(img_.size(), '\0');
  for (size_t i = 0; i < img_.size(); ++i) k[i] = static_cast<char>(img_[i]);
  return k;
}

Permutation Permutation::from_key(const ElemKey& k) {
  std::vector<int> img(k.size());
  for (size_t i = 0; i < k.size(); ++i) img[i] = static_cast<int>(k[i]);
  return from_images(std::move(img));
}

namespace {

class PermContext final : public GroupContext {
 public:
  explicit PermContext(int degree) : degree_(degree) {}
  ElemKey identity() const override { return Permutation::identity(degree_).key(); }
  ElemKey mul(const ElemKey& a, const ElemKey& b) const override {
    ElemKey out(a.size(), '\0');
    for (size_t i = 0; i < a.size(); ++i)
      out[i] = b[static_cast<size_t>(a[i]) - 1];
    return out;
  }
  ElemKey inv(const ElemKey& a) const override {
    ElemKey out(a.size(), '\0');
    for (size_t i = 0; i < a.size(); ++i) out[static_cast<size_t>(a[i]) - 1] = static_cast<char>(i + 1);
    return out;
  }
  std::string describe(const ElemKey& a) const override {
    return Permutation::from_key(a).cycle_str();
  }
  std::string name() const override { return "perm(" + std::to_string(degree_) + ")"; }

 private:
  int degree_;
};

}  // namespace

CtxPtr permutation_context(int degree) {
  if (degree < 1 || degree > Permutation::kMaxDegree)
    throw DegreeTooLarge("degree must be in 1.." + std::to_string(Permutation::kMaxDegree));
  return std::make_shared<PermContext>(degree);
}

GroupPtr symmetric_group(int n) {
  if (n > 8) throw DegreeTooLarge("full enumeration is capped at degree 8");
  if (n < 1) throw PreconditionFailed("degree must be positive");
  CtxPtr ctx = permutation_context(n);
  std::vector<ElemKey> gens;
  if (n >= 2) gens.push_back(Permutation::parse("(12)", n).key());
  if (n >= 3) {
    std::string long_cycle = "(";
    for (int p = 1; p <= n; ++p) long_cycle += (p > 1 ? " " : "") + std::to_string(p);
    long_cycle += ")";
    gens.push_back(Permutation::parse(long_cycle, n).key());
  }
  if (gens.empty()) gens.push_back(ctx->identity());
  return FiniteGroup::generate(ctx, gens, 50000);
}

GroupPtr alternating_group(int n) {
  if (n > 8) throw DegreeTooLarge("full enumeration is capped at degree 8");
  if (n < 3) throw PreconditionFailed("alternating groups need degree >= 3");
  CtxPtr ctx = permutation_context(n);
  std::vector<ElemKey> gens = {Permutation::parse("(123)", n).key()};
  if (n >= 4) {
    // (1 2 ... n) is even iff n is odd; for even n use (2 3 ... n).
    std::string cycle = "(";
    for (int p = (n % 2 == 1 ? 1 : 2); p <= n; ++p)
      cycle += (cycle.size() > 1 ? " " : "") + std::to_string(p);
    cycle += ")";
    gens.push_back(Permutation::parse(cycle, n).key());
  }
  return FiniteGroup::generate(ctx, gens, 50000);
}

bool cycle_type_is_even(const std::vector<int>& type) {
  int transpositions = 0;
  for (int len : type) transpositions += len - 1;
  return transpositions % 2 == 0;
}

bool class_splits_in_alternating(const std::vector<int>& cycle_type) {
  if (!cycle_type_is_even(cycle_type))
    throw OddPermutation("splitting criterion applies to even permutations only");
  std::vector<int> t = cycle_type;
  std::sort(t.begin(), t.end());
  for (size_t i = 0; i < t.size(); ++i) {
    if (t[i] % 2 == 0) return false;
    if (i > 0 && t[i] == t[i - 1]) return false;
  }
  return true;
}

std::map<int, bool> verify_three_cycle_counting(int n) {
  if (n < 7) throw PreconditionFailed("counting identity is examined for n >= 7");
  auto factorial = [](int m) {
    BigInt f = 1;
    for (int i = 2; i <= m; ++i) f *= i;
    return f;
  };
  const BigInt lhs = 2 * (factorial(n) / (factorial(3) * factorial(n - 3)));
  std::map<int, bool> result;
  for (int k = 1; 3 * k <= n; ++k) {
    BigInt pow3 = 1;
    for (int i = 0; i < k; ++i) pow3 *= 3;
    const BigInt rhs = factorial(n) / (factorial(k) * pow3 * factorial(n - 3 * k));
    result[k] = lhs == rhs;
  }
  return result;
}

}  // namespace qj
