#include "hhh/poly.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>

namespace hhh {

std::string_view errc_name(Errc code) {
  switch (code) {
    case Errc::registry_mismatch: return "registry-mismatch";
    case Errc::inhomogeneous: return "inhomogeneous";
    case Errc::zero_polynomial: return "zero-polynomial";
    case Errc::index_out_of_range: return "index-out-of-range";
    case Errc::invalid_permutation: return "invalid-permutation";
    case Errc::not_partially_symmetric: return "not-partially-symmetric";
    case Errc::degree_mismatch: return "degree-mismatch";
    case Errc::exclusion_precondition: return "exclusion-precondition";
    case Errc::infinite_slice: return "infinite-slice";
    case Errc::resource_limit: return "resource-limit";
    case Errc::parse_error: return "parse-error";
    case Errc::internal: return "internal";
  }
  return "unknown";
}

std::ostream& operator<<(std::ostream& os, const TriDegree& d) {
  return os << "(q:" << d.q << ", t:" << d.t << ", a:" << d.a << ")";
}

// ---------------------------------------------------------------- registry

Registry::Registry(int n, std::vector<Variable> vars) : n_(n), vars_(std::move(vars)) {
  if (vars_.size() > kMaxVars)
    throw Error(Errc::resource_limit, "registry holds at most " + std::to_string(kMaxVars) + " variables");
  for (std::size_t k = 0; k < vars_.size(); ++k) {
    const Variable& v = vars_[k];
    if (v.kind != VarKind::aux) {
      bool bad = v.i < 1 || v.i > n_;
      if (v.kind == VarKind::v) bad = bad || v.j < 1 || v.j > n_ || v.j < v.i;
      if (bad) throw Error(Errc::index_out_of_range, "variable index out of range: " + v.name);
    }
    if (!by_name_.emplace(v.name, k).second) throw Error(Errc::registry_mismatch, "duplicate variable " + v.name);
  }
}

std::optional<std::size_t> Registry::find(std::string_view name) const {
  auto it = by_name_.find(name);
  if (it == by_name_.end()) return std::nullopt;
  return it->second;
}

std::size_t Registry::index(std::string_view name) const {
  auto k = find(name);
  if (!k) throw Error(Errc::registry_mismatch, "unknown variable " + std::string(name));
  return *k;
}

bool Registry::operator==(const Registry& o) const {
  if (n_ != o.n_ || vars_.size() != o.vars_.size()) return false;
  for (std::size_t k = 0; k < vars_.size(); ++k)
    if (vars_[k].name != o.vars_[k].name || vars_[k].degree != o.vars_[k].degree) return false;
  return true;
}

std::string x_name(int i) { return "x" + std::to_string(i); }
std::string y_name(int i) { return "y" + std::to_string(i); }
std::string u_name(int k) { return "u" + std::to_string(k); }
std::string alpha_name(int i) { return "alpha" + std::to_string(i); }
std::string v_name(int i, int j) {
  if (i < 10 && j < 10) return "v" + std::to_string(i) + std::to_string(j);
  return "v" + std::to_string(i) + "_" + std::to_string(j);
}

TriDegree u_degree(int k) { return {-2 * k, 2, 0}; }
TriDegree v_degree(int i, int j) { return {2 * (i - j) - 2, 2, 0}; }

RegistryBuilder& RegistryBuilder::x() {
  for (int i = 1; i <= n_; ++i) vars_.push_back({x_name(i), VarKind::x, i, 0, {2, 0, 0}});
  return *this;
}

RegistryBuilder& RegistryBuilder::y() {
  for (int i = 1; i <= n_; ++i) vars_.push_back({y_name(i), VarKind::y, i, 0, {2, 0, 0}});
  return *this;
}

RegistryBuilder& RegistryBuilder::u(int from) {
  for (int k = from; k <= n_; ++k) vars_.push_back({u_name(k), VarKind::u, k, 0, u_degree(k)});
  return *this;
}

RegistryBuilder& RegistryBuilder::v(bool diagonal) {
  for (int i = 1; i <= n_; ++i)
    for (int j = diagonal ? i : i + 1; j <= n_; ++j) vars_.push_back({v_name(i, j), VarKind::v, i, j, v_degree(i, j)});
  return *this;
}

RegistryBuilder& RegistryBuilder::alpha() {
  for (int i = 1; i < n_; ++i) vars_.push_back({alpha_name(i), VarKind::alpha, i, 0, {2, 0, 0}});
  return *this;
}

RegistryBuilder& RegistryBuilder::aux(std::string name, TriDegree degree) {
  vars_.push_back({std::move(name), VarKind::aux, 0, 0, degree});
  return *this;
}

RegistryBuilder& RegistryBuilder::add(Variable var) {
  vars_.push_back(std::move(var));
  return *this;
}

RegistryPtr RegistryBuilder::build() const { return std::make_shared<const Registry>(n_, vars_); }

// ---------------------------------------------------------------- monomials

void Monomial::set(std::size_t k, int value) {
  if (value < 0 || value > 255) throw Error(Errc::resource_limit, "exponent out of range");
  total = static_cast<std::uint16_t>(total - e[k] + value);
  e[k] = static_cast<std::uint8_t>(value);
}

Monomial Monomial::operator*(const Monomial& o) const {
  Monomial r;
  for (std::size_t k = 0; k < kMaxVars; ++k) {
    int s = e[k] + o.e[k];
    if (s > 255) throw Error(Errc::resource_limit, "exponent overflow");
    r.e[k] = static_cast<std::uint8_t>(s);
  }
  r.total = static_cast<std::uint16_t>(total + o.total);
  return r;
}

bool Monomial::divides(const Monomial& o) const {
  if (total > o.total) return false;
  for (std::size_t k = 0; k < kMaxVars; ++k)
    if (e[k] > o.e[k]) return false;
  return true;
}

Monomial Monomial::quotient(const Monomial& o) const {
  Monomial r;
  for (std::size_t k = 0; k < kMaxVars; ++k) r.e[k] = static_cast<std::uint8_t>(e[k] - o.e[k]);
  r.total = static_cast<std::uint16_t>(total - o.total);
  return r;
}

Monomial Monomial::lcm(const Monomial& o) const {
  Monomial r;
  int t = 0;
  for (std::size_t k = 0; k < kMaxVars; ++k) {
    r.e[k] = std::max(e[k], o.e[k]);
    t += r.e[k];
  }
  r.total = static_cast<std::uint16_t>(t);
  return r;
}

bool Monomial::coprime(const Monomial& o) const {
  for (std::size_t k = 0; k < kMaxVars; ++k)
    if (e[k] && o.e[k]) return false;
  return true;
}

bool grevlex_greater(const Monomial& a, const Monomial& b) {
  if (a.total != b.total) return a.total > b.total;
  for (std::size_t k = 0; k < kMaxVars; ++k)
    if (a.e[k] != b.e[k]) return a.e[k] < b.e[k];
  return false;
}

std::size_t MonomialHash::operator()(const Monomial& m) const noexcept {
  std::size_t h = 1469598103934665603ull;
  for (auto b : m.e) {
    h ^= b;
    h *= 1099511628211ull;
  }
  return h;
}

TriDegree degree_of(const Registry& reg, const Monomial& m) {
  TriDegree d;
  for (std::size_t k = 0; k < reg.size(); ++k)
    if (m.e[k]) d += reg[k].degree * m.e[k];
  return d;
}

// ---------------------------------------------------------------- polynomials

namespace {

void require_same(const RegistryPtr& a, const RegistryPtr& b) {
  if (a == b) return;
  if (!a || !b || !(*a == *b)) throw Error(Errc::registry_mismatch, "operands live in different registries");
}

bool term_greater(const Poly::Term& a, const Poly::Term& b) { return grevlex_greater(a.first, b.first); }

}  // namespace

Poly::Poly(RegistryPtr reg, std::vector<Term> terms) : reg_(std::move(reg)), terms_(std::move(terms)) { normalize(); }

void Poly::normalize() {
  std::sort(terms_.begin(), terms_.end(), term_greater);
  std::size_t out = 0;
  for (std::size_t k = 0; k < terms_.size();) {
    std::size_t l = k + 1;
    Rational c = terms_[k].second;
    while (l < terms_.size() && terms_[l].first == terms_[k].first) c += terms_[l++].second;
    if (c != 0) {
      terms_[out].first = terms_[k].first;
      terms_[out].second = c;
      ++out;
    }
    k = l;
  }
  terms_.resize(out);
}

Poly Poly::constant(RegistryPtr reg, const Rational& c) {
  Poly p(std::move(reg));
  if (c != 0) p.terms_.push_back({Monomial{}, c});
  return p;
}

Poly Poly::var(RegistryPtr reg, std::string_view name) {
  Monomial m;
  m.set(reg->index(name), 1);
  return monomial(std::move(reg), m);
}

Poly Poly::monomial(RegistryPtr reg, const Monomial& m, const Rational& c) {
  Poly p(std::move(reg));
  if (c != 0) p.terms_.push_back({m, c});
  return p;
}

bool Poly::is_constant() const { return terms_.empty() || (terms_.size() == 1 && terms_[0].first.is_one()); }

bool Poly::involves(std::string_view name) const {
  auto k = reg_->find(name);
  return k && involves(*k);
}

bool Poly::involves(std::size_t var) const { return degree_in(var) > 0; }

int Poly::degree_in(std::size_t var) const {
  int d = 0;
  for (const auto& t : terms_) d = std::max<int>(d, t.first.e[var]);
  return d;
}

Poly Poly::operator+(const Poly& o) const {
  if (is_zero() && !reg_) return o;
  if (o.is_zero() && !o.reg_) return *this;
  require_same(reg_, o.reg_);
  Poly r(reg_);
  r.terms_.reserve(terms_.size() + o.terms_.size());
  std::size_t a = 0, b = 0;
  while (a < terms_.size() || b < o.terms_.size()) {
    if (b == o.terms_.size() || (a < terms_.size() && grevlex_greater(terms_[a].first, o.terms_[b].first))) {
      r.terms_.push_back(terms_[a++]);
    } else if (a == terms_.size() || grevlex_greater(o.terms_[b].first, terms_[a].first)) {
      r.terms_.push_back(o.terms_[b++]);
    } else {
      Rational c = terms_[a].second + o.terms_[b].second;
      if (c != 0) r.terms_.push_back({terms_[a].first, c});
      ++a;
      ++b;
    }
  }
  return r;
}

Poly Poly::operator-() const {
  Poly r = *this;
  for (auto& t : r.terms_) t.second = -t.second;
  return r;
}

Poly Poly::operator-(const Poly& o) const { return *this + (-o); }

Poly Poly::operator*(const Rational& c) const {
  if (c == 0) return Poly(reg_);
  Poly r = *this;
  for (auto& t : r.terms_) t.second *= c;
  return r;
}

Poly operator*(const Rational& c, const Poly& p) { return p * c; }

Poly Poly::mul_term(const Monomial& m, const Rational& c) const {
  if (c == 0) return Poly(reg_);
  Poly r(reg_);
  r.terms_.reserve(terms_.size());
  for (const auto& t : terms_) r.terms_.push_back({t.first * m, t.second * c});
  return r;  // multiplication by a monomial preserves the order
}

Poly Poly::operator*(const Poly& o) const {
  require_same(reg_, o.reg_);
  if (is_zero() || o.is_zero()) return Poly(reg_);
  if (o.terms_.size() == 1) return mul_term(o.terms_[0].first, o.terms_[0].second);
  if (terms_.size() == 1) return o.mul_term(terms_[0].first, terms_[0].second);
  std::vector<Term> prod;
  prod.reserve(terms_.size() * o.terms_.size());
  for (const auto& s : terms_)
    for (const auto& t : o.terms_) prod.push_back({s.first * t.first, s.second * t.second});
  return Poly(reg_, std::move(prod));
}

Poly Poly::pow(int k) const {
  Poly r = constant(reg_, 1);
  Poly base = *this;
  while (k > 0) {
    if (k & 1) r = r * base;
    k >>= 1;
    if (k) base = base * base;
  }
  return r;
}

bool Poly::operator==(const Poly& o) const {
  if (terms_.size() != o.terms_.size()) return false;
  if (!terms_.empty()) require_same(reg_, o.reg_);
  for (std::size_t k = 0; k < terms_.size(); ++k)
    if (!(terms_[k].first == o.terms_[k].first) || terms_[k].second != o.terms_[k].second) return false;
  return true;
}

Poly Poly::rebase(const RegistryPtr& target) const {
  if (reg_ == target) return *this;
  std::vector<std::size_t> map(reg_ ? reg_->size() : 0);
  for (std::size_t k = 0; k < map.size(); ++k) {
    bool used = involves(k);
    auto idx = target->find((*reg_)[k].name);
    if (!idx) {
      if (used) throw Error(Errc::registry_mismatch, "variable " + (*reg_)[k].name + " missing from target registry");
      continue;
    }
    map[k] = *idx;
  }
  std::vector<Term> out;
  out.reserve(terms_.size());
  for (const auto& [m, c] : terms_) {
    Monomial r;
    for (std::size_t k = 0; k < map.size(); ++k)
      if (m.e[k]) r.set(map[k], m.e[k]);
    out.push_back({r, c});
  }
  return Poly(target, std::move(out));
}

Poly Poly::monic() const {
  if (is_zero()) return *this;
  return *this * (Rational(1) / lead_coeff());
}

std::string Poly::str() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [m, c] : terms_) {
    Rational a = abs(c);
    if (first) {
      if (c < 0) os << "-";
    } else {
      os << (c < 0 ? " - " : " + ");
    }
    first = false;
    bool unit = a == 1;
    if (!unit || m.is_one()) os << a.get_str();
    bool need_star = !unit;
    for (std::size_t k = 0; k < reg_->size(); ++k) {
      if (!m.e[k]) continue;
      if (need_star) os << "*";
      os << (*reg_)[k].name;
      if (m.e[k] > 1) os << "^" << int(m.e[k]);
      need_star = true;
    }
  }
  return os.str();
}

std::ostream& operator<<(std::ostream& os, const Poly& p) { return os << p.str(); }

Poly arith(Op op, const Poly& lhs, const Poly& rhs) {
  switch (op) {
    case Op::add: return lhs + rhs;
    case Op::mul: return lhs * rhs;
    case Op::neg: return -lhs;
    case Op::scale:
      if (!rhs.is_constant()) throw Error(Errc::degree_mismatch, "scale needs a constant factor");
      require_same(lhs.registry(), rhs.registry());
      return rhs.is_zero() ? Poly(lhs.registry()) : lhs * rhs.lead_coeff();
  }
  throw Error(Errc::internal, "unknown op");
}

Poly arith(Op op, const Poly& lhs, const Rational& rhs) {
  switch (op) {
    case Op::add: return lhs + Poly::constant(lhs.registry(), rhs);
    case Op::mul:
    case Op::scale: return lhs * rhs;
    case Op::neg: return -lhs;
  }
  throw Error(Errc::internal, "unknown op");
}

Poly substitute(const Poly& p, const Assignment& assignment, RegistryPtr target) {
  if (!target) target = assignment.empty() ? p.registry() : assignment.begin()->second.registry();
  const Registry& src = *p.registry();
  std::vector<Poly> image;
  image.reserve(src.size());
  for (std::size_t k = 0; k < src.size(); ++k) {
    auto it = assignment.find(src[k].name);
    if (it != assignment.end()) {
      require_same(it->second.registry(), target);
      image.push_back(it->second);
    } else if (p.involves(k)) {
      image.push_back(Poly::var(target, src[k].name));
    } else {
      image.emplace_back(target);
    }
  }
  std::vector<std::vector<Poly>> powers(src.size());
  auto power = [&](std::size_t k, int e) -> const Poly& {
    auto& pw = powers[k];
    if (pw.empty()) pw.push_back(Poly::constant(target, 1));
    while (static_cast<int>(pw.size()) <= e) pw.push_back(pw.back() * image[k]);
    return pw[e];
  };
  std::vector<Poly::Term> acc;
  for (const auto& [m, c] : p.terms()) {
    Poly t = Poly::constant(target, c);
    for (std::size_t k = 0; k < src.size() && !t.is_zero(); ++k)
      if (m.e[k]) t = t * power(k, m.e[k]);
    acc.insert(acc.end(), t.terms().begin(), t.terms().end());
  }
  return Poly(target, std::move(acc));
}

TriDegree tridegree_of(const Poly& p) {
  if (p.is_zero()) throw Error(Errc::zero_polynomial, "zero polynomial has no degree");
  const Registry& reg = *p.registry();
  TriDegree d = degree_of(reg, p.terms().front().first);
  for (const auto& t : p.terms())
    if (degree_of(reg, t.first) != d) throw Error(Errc::inhomogeneous, "inhomogeneous polynomial " + p.str());
  return d;
}

bool is_homogeneous(const Poly& p) {
  if (p.is_zero()) return true;
  try {
    tridegree_of(p);
    return true;
  } catch (const Error&) {
    return false;
  }
}

// ---------------------------------------------------------------- parser

namespace {

class Parser {
 public:
  Parser(const RegistryPtr& reg, std::string_view s) : reg_(reg), s_(s) {}

  Poly parse() {
    Poly p = expr();
    skip();
    if (pos_ != s_.size()) fail("unexpected character");
    return p;
  }

 private:
  [[noreturn]] void fail(const std::string& msg) const {
    throw Error(Errc::parse_error, msg + " at position " + std::to_string(pos_) + " in '" + std::string(s_) + "'");
  }

  void skip() {
    while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
  }

  bool eat(char c) {
    skip();
    if (pos_ < s_.size() && s_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }

  Poly expr() {
    Poly p(reg_);
    bool first = true;
    while (true) {
      bool neg = false;
      if (eat('-')) neg = true;
      else if (!first && !eat('+')) break;
      else if (first) eat('+');
      Poly t = term();
      p = neg ? p - t : p + t;
      first = false;
      skip();
      if (pos_ >= s_.size() || (s_[pos_] != '+' && s_[pos_] != '-')) break;
    }
    return p;
  }

  Poly term() {
    Poly p = factor();
    while (eat('*')) p = p * factor();
    return p;
  }

  Poly factor() {
    Poly base = atom();
    if (eat('^')) {
      skip();
      std::size_t start = pos_;
      while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
      if (start == pos_) fail("expected exponent");
      base = base.pow(std::stoi(std::string(s_.substr(start, pos_ - start))));
    }
    return base;
  }

  Poly atom() {
    skip();
    if (pos_ >= s_.size()) fail("unexpected end of input");
    char c = s_[pos_];
    if (c == '(') {
      ++pos_;
      Poly p = expr();
      if (!eat(')')) fail("expected ')'");
      return p;
    }
    if (std::isdigit(static_cast<unsigned char>(c))) {
      std::size_t start = pos_;
      while (pos_ < s_.size() && (std::isdigit(static_cast<unsigned char>(s_[pos_])) || s_[pos_] == '/')) ++pos_;
      try {
        Rational r(std::string(s_.substr(start, pos_ - start)));
        r.canonicalize();
        return Poly::constant(reg_, r);
      } catch (const std::invalid_argument&) {
        fail("bad number");
      }
    }
    if (std::isalpha(static_cast<unsigned char>(c))) {
      std::size_t start = pos_;
      while (pos_ < s_.size() && (std::isalnum(static_cast<unsigned char>(s_[pos_])) || s_[pos_] == '_')) ++pos_;
      std::string name(s_.substr(start, pos_ - start));
      if (!reg_->contains(name)) {
        pos_ = start;
        fail("unknown variable '" + name + "'");
      }
      return Poly::var(reg_, name);
    }
    fail("unexpected character");
  }

  RegistryPtr reg_;
  std::string_view s_;
  std::size_t pos_ = 0;
};

}  // namespace

Poly parse_poly(const RegistryPtr& reg, std::string_view text) { return Parser(reg, text).parse(); }

}  // namespace hhh
