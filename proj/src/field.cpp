#include "repscheme/field.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>

#include "repscheme/errors.hpp"

namespace repscheme {

std::optional<Rational> rational_sqrt(const Rational& q) {
  if (sgn(q) < 0) return std::nullopt;
  const mpz_class& num = q.get_num();
  const mpz_class& den = q.get_den();
  if (!mpz_perfect_square_p(num.get_mpz_t()) || !mpz_perfect_square_p(den.get_mpz_t()))
    return std::nullopt;
  mpz_class rn, rd;
  mpz_sqrt(rn.get_mpz_t(), num.get_mpz_t());
  mpz_sqrt(rd.get_mpz_t(), den.get_mpz_t());
  return Rational(rn, rd);
}

Rational parse_rational(const std::string& text, int line, int column) {
  std::size_t pos = 0;
  bool neg = false;
  if (pos < text.size() && (text[pos] == '+' || text[pos] == '-')) {
    neg = text[pos] == '-';
    ++pos;
  }
  auto digits = [&](const char* what) {
    std::size_t start = pos;
    while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) ++pos;
    if (pos == start)
      throw ParseError(std::string("expected ") + what + " in rational '" + text + "'", line,
                       column + static_cast<int>(start));
    return text.substr(start, pos - start);
  };
  mpz_class num(digits("numerator"));
  mpz_class den(1);
  if (pos < text.size() && text[pos] == '/') {
    ++pos;
    den = mpz_class(digits("denominator"));
    if (den == 0) throw ParseError("zero denominator in '" + text + "'", line, column);
  }
  if (pos != text.size())
    throw ParseError("trailing characters in rational '" + text + "'", line,
                     column + static_cast<int>(pos));
  Rational q(num, den);
  q.canonicalize();
  return neg ? Rational(-q) : q;
}

std::string to_string(const Rational& q) { return q.get_str(); }

std::size_t rational_size(const Rational& q) {
  return mpz_sizeinbase(q.get_num_mpz_t(), 2) + mpz_sizeinbase(q.get_den_mpz_t(), 2);
}

// ---------------------------------------------------------------------------
// FieldTower

TowerPtr FieldTower::rationals() {
  static const TowerPtr q = std::make_shared<FieldTower>();
  return q;
}

bool FieldTower::is_prefix_of(const FieldTower& other) const {
  if (radicands_.size() > other.radicands_.size()) return false;
  for (std::size_t i = 0; i < radicands_.size(); ++i)
    if (radicands_[i] != other.radicands_[i]) return false;
  return true;
}

namespace {
int sign_map(const CoeffMap& a, int level, const FieldTower& t);
}

TowerPtr FieldTower::extended(CoeffMap radicand) const {
  auto t = std::make_shared<FieldTower>(*this);
  t->all_real_ = all_real_ && sign_map(radicand, height(), *this) > 0;
  t->radicands_.push_back(std::move(radicand));
  return t;
}

TowerPtr common_tower(const TowerPtr& a, const TowerPtr& b) {
  if (a->is_prefix_of(*b)) return b;
  if (b->is_prefix_of(*a)) return a;
  throw ValidationError("field elements live in incompatible towers", "tower");
}

FieldElement lift_to_tower(const FieldElement& x, const TowerPtr& tower) {
  if (!x.tower()->is_prefix_of(*tower))
    throw ValidationError("element tower is not a prefix of the target tower", "tower");
  return FieldElement(tower, x.coeffs());
}

// ---------------------------------------------------------------------------
// CoeffMap arithmetic

namespace {

int effective_height(const CoeffMap& a, const CoeffMap& b) {
  std::uint64_t all = 0;
  for (const auto& [m, c] : a) all |= m;
  for (const auto& [m, c] : b) all |= m;
  int h = 0;
  while (all >> h) ++h;
  return h;
}

void add_into(CoeffMap& a, const CoeffMap& b, int sign = +1) {
  for (const auto& [m, c] : b) {
    auto it = a.find(m);
    if (it == a.end()) {
      a.emplace(m, sign > 0 ? c : Rational(-c));
    } else {
      if (sign > 0)
        it->second += c;
      else
        it->second -= c;
      if (it->second == 0) a.erase(it);
    }
  }
}

// Splits off the radical `bit`: a = lo + hi * r_bit, hi with the bit stripped.
void split_at(const CoeffMap& a, int bit, CoeffMap& lo, CoeffMap& hi) {
  const std::uint64_t b = std::uint64_t{1} << bit;
  for (const auto& [m, c] : a) {
    if (m & b)
      hi.emplace(m & ~b, c);
    else
      lo.emplace(m, c);
  }
}

CoeffMap with_bit(CoeffMap m, int bit) {
  const std::uint64_t b = std::uint64_t{1} << bit;
  CoeffMap out;
  for (auto& [mask, c] : m) out.emplace(mask | b, std::move(c));
  return out;
}

CoeffMap mul_maps(const CoeffMap& a, const CoeffMap& b, const FieldTower& t) {
  if (a.empty() || b.empty()) return {};
  const int h = effective_height(a, b);
  if (h == 0) {
    Rational p = a.begin()->second * b.begin()->second;
    CoeffMap out;
    if (p != 0) out.emplace(0, std::move(p));
    return out;
  }
  const int k = h - 1;
  CoeffMap x1, y1, x2, y2;
  split_at(a, k, x1, y1);
  split_at(b, k, x2, y2);
  CoeffMap lo = mul_maps(x1, x2, t);
  CoeffMap yy = mul_maps(y1, y2, t);
  if (!yy.empty()) add_into(lo, mul_maps(yy, t.radicand(k), t));
  CoeffMap hi = mul_maps(x1, y2, t);
  add_into(hi, mul_maps(y1, x2, t));
  add_into(lo, with_bit(std::move(hi), k));
  return lo;
}

// Inverse by repeated conjugation: (x + y r)^{-1} = (x - y r) / (x^2 - y^2 d).
// The denominator is nonzero because d is not a square one level down.
CoeffMap inv_map(const CoeffMap& a, const FieldTower& t) {
  if (a.empty()) throw ValidationError("inverse of zero field element", "field element");
  const int h = effective_height(a, a);
  if (h == 0) {
    CoeffMap out;
    out.emplace(0, Rational(1) / a.begin()->second);
    return out;
  }
  const int k = h - 1;
  CoeffMap x, y;
  split_at(a, k, x, y);
  CoeffMap conj = x;
  CoeffMap neg_y;
  for (const auto& [m, c] : y) neg_y.emplace(m, Rational(-c));
  add_into(conj, with_bit(std::move(neg_y), k));
  CoeffMap norm = mul_maps(a, conj, t);
  return mul_maps(conj, inv_map(norm, t), t);
}

// Square detection by descent. At each level a = x + y r with r^2 = d:
//   y = 0: a is a square iff x or x/d is a square one level down;
//   y != 0: the norm x^2 - y^2 d must be a square n^2 below, and then
//           u^2 = (x ± n)/2 must be a square below; v = y / (2u).
std::optional<CoeffMap> sqrt_map(const CoeffMap& a, int level, const FieldTower& t) {
  if (a.empty()) return CoeffMap{};
  if (level == 0) {
    auto r = rational_sqrt(a.begin()->second);
    if (!r) return std::nullopt;
    CoeffMap out;
    if (*r != 0) out.emplace(0, *r);
    return out;
  }
  const int k = level - 1;
  CoeffMap x, y;
  split_at(a, k, x, y);
  const CoeffMap& d = t.radicand(k);
  if (y.empty()) {
    if (auto s = sqrt_map(x, k, t)) return s;
    CoeffMap q = mul_maps(x, inv_map(d, t), t);
    if (auto v = sqrt_map(q, k, t)) return with_bit(std::move(*v), k);
    return std::nullopt;
  }
  CoeffMap norm = mul_maps(x, x, t);
  add_into(norm, mul_maps(mul_maps(y, y, t), d, t), -1);
  auto n = sqrt_map(norm, k, t);
  if (!n) return std::nullopt;
  const CoeffMap half{{0, Rational(1, 2)}};
  for (int sign : {+1, -1}) {
    CoeffMap xn = x;
    add_into(xn, *n, sign);
    CoeffMap usq = mul_maps(xn, half, t);
    auto u = sqrt_map(usq, k, t);
    if (!u || u->empty()) continue;
    CoeffMap two_u = mul_maps(*u, CoeffMap{{0, Rational(2)}}, t);
    CoeffMap v = mul_maps(y, inv_map(two_u, t), t);
    CoeffMap root = *u;
    add_into(root, with_bit(std::move(v), k));
    CoeffMap check = mul_maps(root, root, t);
    add_into(check, a, -1);
    if (check.empty()) return root;
  }
  return std::nullopt;
}

// Sign by descent in a real tower: for a = x + y r with r = sqrt(d) > 0,
// opposite-sign parts are compared through the sign of x^2 - y^2 d, which is
// nonzero because d is not a square one level down.
int sign_map(const CoeffMap& a, int level, const FieldTower& t) {
  if (a.empty()) return 0;
  if (level == 0) return sgn(a.begin()->second);
  const int k = level - 1;
  CoeffMap x, y;
  split_at(a, k, x, y);
  const int sy = sign_map(y, k, t);
  if (sy == 0) return sign_map(x, k, t);
  const int sx = sign_map(x, k, t);
  if (sx == 0) return sy;
  if (sx == sy) return sx;
  CoeffMap cmp = mul_maps(x, x, t);
  add_into(cmp, mul_maps(mul_maps(y, y, t), t.radicand(k), t), -1);
  return sign_map(cmp, k, t) > 0 ? sx : sy;
}

}  // namespace

int exact_sign(const FieldElement& x) {
  if (!x.tower()->all_real())
    throw ValidationError("exact_sign requires a real tower", "field element");
  return sign_map(x.coeffs(), x.tower()->height(), *x.tower());
}

// ---------------------------------------------------------------------------
// FieldElement

FieldElement::FieldElement(Rational q, TowerPtr tower) : tower_(std::move(tower)) {
  if (q != 0) coeffs_.emplace(0, std::move(q));
}

FieldElement FieldElement::radical(TowerPtr tower, int index) {
  if (index < 0 || index >= tower->height())
    throw ValidationError("radical index out of range", "tower");
  CoeffMap m;
  m.emplace(std::uint64_t{1} << index, Rational(1));
  return FieldElement(std::move(tower), std::move(m));
}

bool FieldElement::is_rational() const {
  return coeffs_.empty() || (coeffs_.size() == 1 && coeffs_.begin()->first == 0);
}

Rational FieldElement::as_rational() const {
  if (coeffs_.empty()) return Rational(0);
  if (is_rational()) return coeffs_.begin()->second;
  throw ValidationError("field element has a radical part: " + to_string(), "field element");
}

FieldElement FieldElement::operator-() const {
  CoeffMap out;
  for (const auto& [m, c] : coeffs_) out.emplace(m, Rational(-c));
  return FieldElement(tower_, std::move(out));
}

FieldElement& FieldElement::operator+=(const FieldElement& rhs) {
  tower_ = common_tower(tower_, rhs.tower_);
  add_into(coeffs_, rhs.coeffs_);
  return *this;
}

FieldElement& FieldElement::operator-=(const FieldElement& rhs) {
  tower_ = common_tower(tower_, rhs.tower_);
  add_into(coeffs_, rhs.coeffs_, -1);
  return *this;
}

FieldElement operator*(const FieldElement& a, const FieldElement& b) {
  TowerPtr t = common_tower(a.tower_, b.tower_);
  return FieldElement(t, mul_maps(a.coeffs_, b.coeffs_, *t));
}

FieldElement FieldElement::inverse() const {
  return FieldElement(tower_, inv_map(coeffs_, *tower_));
}

bool operator==(const FieldElement& a, const FieldElement& b) {
  common_tower(a.tower_, b.tower_);  // enforce compatibility
  return a.coeffs_ == b.coeffs_;
}

bool operator<(const FieldElement& a, const FieldElement& b) {
  auto ia = a.coeffs_.begin(), ib = b.coeffs_.begin();
  for (; ia != a.coeffs_.end() && ib != b.coeffs_.end(); ++ia, ++ib) {
    if (ia->first != ib->first) return ia->first < ib->first;
    int c = cmp(ia->second, ib->second);
    if (c != 0) return c < 0;
  }
  return ia == a.coeffs_.end() && ib != b.coeffs_.end();
}

std::size_t FieldElement::size_measure() const {
  std::size_t s = 0;
  for (const auto& [m, c] : coeffs_) s += 1 + rational_size(c);
  return s;
}

// ---------------------------------------------------------------------------
// adjoin / sqrt

std::optional<FieldElement> sqrt_in_tower(const FieldElement& a) {
  auto r = sqrt_map(a.coeffs(), a.tower()->height(), *a.tower());
  if (!r) return std::nullopt;
  return FieldElement(a.tower(), std::move(*r));
}

AdjoinResult adjoin_sqrt(const TowerPtr& tower, const FieldElement& a) {
  if (a.is_zero()) throw ValidationError("cannot adjoin sqrt(0)", "adjoin_sqrt");
  FieldElement lifted = lift_to_tower(a, common_tower(tower, a.tower()));
  if (auto root = sqrt_in_tower(lifted)) return {lifted.tower(), *root, false};
  if (lifted.tower()->height() >= FieldTower::kHeightLimit)
    throw ValidationError("field tower height limit exceeded", "adjoin_sqrt");
  TowerPtr ext = lifted.tower()->extended(lifted.coeffs());
  return {ext, FieldElement::radical(ext, ext->height() - 1), true};
}

// ---------------------------------------------------------------------------
// Text format

namespace {

std::string monomial_string(std::uint64_t mask) {
  std::string s;
  for (int i = 0; mask >> i; ++i) {
    if (!(mask >> i & 1)) continue;
    if (!s.empty()) s += "*";
    s += "r" + std::to_string(i + 1);
  }
  return s;
}

}  // namespace

std::string FieldElement::to_string() const {
  if (coeffs_.empty()) return "0";
  std::string out;
  bool first = true;
  for (const auto& [mask, c] : coeffs_) {
    const bool neg = sgn(c) < 0;
    Rational abs_c = neg ? Rational(-c) : c;
    std::string term;
    std::string mono = monomial_string(mask);
    if (mono.empty())
      term = repscheme::to_string(abs_c);
    else if (abs_c == 1)
      term = mono;
    else
      term = repscheme::to_string(abs_c) + "*" + mono;
    if (first) {
      out = (neg ? "-" : "") + term;
      first = false;
    } else {
      out += (neg ? " - " : " + ") + term;
    }
  }
  return out;
}

FieldElement parse_field_element(const std::string& text, const TowerPtr& tower, int line) {
  std::size_t pos = 0;
  const auto col = [&] { return static_cast<int>(pos) + 1; };
  auto skip_ws = [&] {
    while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
  };
  auto parse_factor = [&]() -> FieldElement {
    skip_ws();
    if (pos >= text.size()) throw ParseError("expected factor", line, col());
    char ch = text[pos];
    if (ch == 'r') {
      std::size_t start = ++pos;
      while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) ++pos;
      if (pos == start) throw ParseError("expected radical index after 'r'", line, col());
      int idx = std::stoi(text.substr(start, pos - start));
      if (idx < 1 || idx > tower->height())
        throw ParseError("radical r" + std::to_string(idx) + " not declared", line,
                         static_cast<int>(start));
      return FieldElement::radical(tower, idx - 1);
    }
    if (std::isdigit(static_cast<unsigned char>(ch))) {
      std::size_t start = pos;
      while (pos < text.size() &&
             (std::isdigit(static_cast<unsigned char>(text[pos])) || text[pos] == '/'))
        ++pos;
      return FieldElement(parse_rational(text.substr(start, pos - start), line,
                                         static_cast<int>(start) + 1),
                          tower);
    }
    throw ParseError(std::string("unexpected character '") + ch + "' in field element", line,
                     col());
  };
  auto parse_term = [&]() -> FieldElement {
    FieldElement v = parse_factor();
    for (;;) {
      skip_ws();
      if (pos < text.size() && text[pos] == '*') {
        ++pos;
        v = v * parse_factor();
      } else {
        return v;
      }
    }
  };

  skip_ws();
  bool neg = false;
  if (pos < text.size() && (text[pos] == '+' || text[pos] == '-')) {
    neg = text[pos] == '-';
    ++pos;
  }
  FieldElement value = parse_term();
  if (neg) value = -value;
  for (;;) {
    skip_ws();
    if (pos >= text.size()) return value;
    char op = text[pos];
    if (op != '+' && op != '-')
      throw ParseError(std::string("unexpected character '") + op + "' in field element", line,
                       col());
    ++pos;
    FieldElement term = parse_term();
    if (op == '-')
      value -= term;
    else
      value += term;
  }
}

std::vector<std::string> tower_header(const TowerPtr& tower) {
  std::vector<std::string> lines;
  for (int i = 0; i < tower->height(); ++i) {
    FieldElement radicand(tower, tower->radicand(i));
    lines.push_back("radical r" + std::to_string(i + 1) + " = sqrt(" + radicand.to_string() +
                    ")");
  }
  return lines;
}

TowerPtr parse_tower_header(const std::vector<std::string>& lines) {
  TowerPtr tower = FieldTower::rationals();
  int line_no = 0;
  for (const auto& raw : lines) {
    ++line_no;
    std::istringstream in(raw);
    std::string kw, name, eq;
    in >> kw >> name >> eq;
    if (kw != "radical" || eq != "=")
      throw ParseError("expected 'radical rK = sqrt(<element>)'", line_no, 1);
    if (name != "r" + std::to_string(tower->height() + 1))
      throw ParseError("radical declared out of order: " + name, line_no, 1);
    std::string rest;
    std::getline(in, rest);
    auto open = rest.find("sqrt(");
    auto close = rest.rfind(')');
    if (open == std::string::npos || close == std::string::npos || close < open)
      throw ParseError("expected sqrt(<element>)", line_no, 1);
    FieldElement radicand =
        parse_field_element(rest.substr(open + 5, close - open - 5), tower, line_no);
    if (sqrt_in_tower(radicand))
      throw ParseError("radicand " + radicand.to_string() + " is already a square", line_no, 1);
    tower = tower->extended(radicand.coeffs());
  }
  return tower;
}

}  // namespace repscheme
