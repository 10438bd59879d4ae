#include "gpd/algebra.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>

#include "gpd/errors.hpp"

namespace gpd {

VarId::VarId(Kind k, int i) {
  if (i < 0 || i > 0xffffff) throw ValidationError("variable index out of range");
  key_ = (static_cast<uint32_t>(k) << 24) | static_cast<uint32_t>(i);
}

std::string VarId::name() const {
  switch (kind()) {
    case Kind::A: return "A";
    case Kind::B: return "B";
    case Kind::T: return "t";
    case Kind::X: return "x" + std::to_string(index());
    case Kind::Y: return "y" + std::to_string(index());
    case Kind::Z: return "z" + std::to_string(index());
  }
  throw ValidationError("corrupt VarId");
}

std::optional<VarId> VarId::from_name(std::string_view s) {
  if (s == "A") return a();
  if (s == "B") return b();
  if (s == "t") return t();
  if (s.size() < 2) return std::nullopt;
  char c = s[0];
  if (c != 'x' && c != 'y' && c != 'z') return std::nullopt;
  int idx = 0;
  for (size_t i = 1; i < s.size(); ++i) {
    if (!std::isdigit(static_cast<unsigned char>(s[i]))) return std::nullopt;
    idx = idx * 10 + (s[i] - '0');
    if (idx > 0xffffff) return std::nullopt;
  }
  if (idx < 1) return std::nullopt;
  if (c == 'x') return x(idx);
  if (c == 'y') return y(idx);
  return z(idx);
}

Monomial Monomial::var(VarId v, int e) {
  Monomial m;
  if (e != 0) m.e_.push_back({v, e});
  return m;
}

int Monomial::exponent(VarId v) const {
  auto it = std::lower_bound(e_.begin(), e_.end(), v,
                             [](const auto& p, VarId w) { return p.first < w; });
  return (it != e_.end() && it->first == v) ? it->second : 0;
}

long long Monomial::degree() const {
  long long d = 0;
  for (const auto& [v, e] : e_) d += e;
  return d;
}

bool Monomial::has_negative_exponent() const {
  for (const auto& [v, e] : e_)
    if (e < 0) return true;
  return false;
}

Monomial Monomial::operator*(const Monomial& o) const {
  Monomial r;
  r.e_.reserve(e_.size() + o.e_.size());
  size_t i = 0, j = 0;
  while (i < e_.size() || j < o.e_.size()) {
    if (j == o.e_.size() || (i < e_.size() && e_[i].first < o.e_[j].first)) {
      r.e_.push_back(e_[i++]);
    } else if (i == e_.size() || o.e_[j].first < e_[i].first) {
      r.e_.push_back(o.e_[j++]);
    } else {
      int s = e_[i].second + o.e_[j].second;
      if (s != 0) r.e_.push_back({e_[i].first, s});
      ++i, ++j;
    }
  }
  return r;
}

Monomial Monomial::pow(int p) const {
  Monomial r;
  if (p == 0) return r;
  r.e_.reserve(e_.size());
  for (const auto& [v, e] : e_) r.e_.push_back({v, e * p});
  return r;
}

std::optional<Monomial> Monomial::divide(const Monomial& a, const Monomial& b) {
  Monomial r;
  size_t i = 0, j = 0;
  while (i < a.e_.size() || j < b.e_.size()) {
    if (j == b.e_.size() ||
        (i < a.e_.size() && a.e_[i].first < b.e_[j].first)) {
      if (a.e_[i].second < 0) return std::nullopt;
      r.e_.push_back(a.e_[i++]);
    } else if (i == a.e_.size() || b.e_[j].first < a.e_[i].first) {
      // b has the variable, a does not: quotient exponent is negative
      if (b.e_[j].second > 0) return std::nullopt;
      r.e_.push_back({b.e_[j].first, -b.e_[j].second});
      ++j;
    } else {
      int d = a.e_[i].second - b.e_[j].second;
      if (d < 0) return std::nullopt;
      if (d != 0) r.e_.push_back({a.e_[i].first, d});
      ++i, ++j;
    }
  }
  return r;
}

int Monomial::cmp_grlex(const Monomial& a, const Monomial& b) {
  long long da = a.degree(), db = b.degree();
  if (da != db) return da < db ? -1 : 1;
  size_t i = 0, j = 0;
  // walk both sorted exponent lists; first variable with differing exponents
  // decides (absent variable = exponent 0; stored exponents are nonzero)
  while (i < a.e_.size() && j < b.e_.size()) {
    if (a.e_[i].first == b.e_[j].first) {
      if (a.e_[i].second != b.e_[j].second)
        return a.e_[i].second < b.e_[j].second ? -1 : 1;
      ++i, ++j;
    } else if (a.e_[i].first < b.e_[j].first) {
      return a.e_[i].second < 0 ? -1 : 1;
    } else {
      return b.e_[j].second > 0 ? -1 : 1;
    }
  }
  if (i < a.e_.size()) return a.e_[i].second < 0 ? -1 : 1;
  if (j < b.e_.size()) return b.e_[j].second > 0 ? -1 : 1;
  return 0;
}

Polynomial::Polynomial(BigInt c) {
  if (c != 0) terms_.emplace(Monomial(), std::move(c));
}

Polynomial Polynomial::variable(VarId v) {
  return term(BigInt(1), Monomial::var(v));
}

Polynomial Polynomial::term(BigInt c, const Monomial& m) {
  Polynomial p;
  if (c != 0) p.terms_.emplace(m, std::move(c));
  return p;
}

bool Polynomial::has_negative_exponent() const {
  for (const auto& [m, c] : terms_)
    if (m.has_negative_exponent()) return true;
  return false;
}

long long Polynomial::total_degree() const {
  long long d = 0;
  bool first = true;
  for (const auto& [m, c] : terms_) {
    long long md = m.degree();
    if (first || md > d) d = md;
    first = false;
  }
  return d;
}

Polynomial Polynomial::operator-() const {
  Polynomial r = *this;
  for (auto& [m, c] : r.terms_) c = -c;
  return r;
}

Polynomial& Polynomial::operator+=(const Polynomial& o) {
  for (const auto& [m, c] : o.terms_) {
    auto [it, fresh] = terms_.emplace(m, c);
    if (!fresh) {
      it->second += c;
      if (it->second == 0) terms_.erase(it);
    }
  }
  return *this;
}

Polynomial& Polynomial::operator-=(const Polynomial& o) {
  for (const auto& [m, c] : o.terms_) {
    auto [it, fresh] = terms_.emplace(m, -c);
    if (!fresh) {
      it->second -= c;
      if (it->second == 0) terms_.erase(it);
    }
  }
  return *this;
}

Polynomial Polynomial::operator+(const Polynomial& o) const {
  Polynomial r = *this;
  r += o;
  return r;
}

Polynomial Polynomial::operator-(const Polynomial& o) const {
  Polynomial r = *this;
  r -= o;
  return r;
}

Polynomial Polynomial::operator*(const Polynomial& o) const {
  Polynomial r;
  for (const auto& [ma, ca] : terms_) {
    for (const auto& [mb, cb] : o.terms_) {
      Monomial m = ma * mb;
      BigInt c = ca * cb;
      auto [it, fresh] = r.terms_.emplace(std::move(m), std::move(c));
      if (!fresh) {
        it->second += ca * cb;
        if (it->second == 0) r.terms_.erase(it);
      }
    }
  }
  return r;
}

Polynomial& Polynomial::operator*=(const Polynomial& o) {
  *this = *this * o;
  return *this;
}

Polynomial pow(const Polynomial& p, unsigned e) {
  Polynomial r(1);
  Polynomial base = p;
  while (e > 0) {
    if (e & 1u) r *= base;
    e >>= 1u;
    if (e > 0) base *= base;
  }
  return r;
}

Polynomial substitute(const Polynomial& p,
                      const std::map<VarId, Polynomial>& sigma) {
  // memoized powers of each image within this call
  std::map<std::pair<VarId, int>, Polynomial> powers;
  auto image_pow = [&](VarId v, int e) -> const Polynomial& {
    auto key = std::make_pair(v, e);
    auto it = powers.find(key);
    if (it != powers.end()) return it->second;
    Polynomial val;
    auto sit = sigma.find(v);
    if (e >= 0) {
      const Polynomial base =
          (sit == sigma.end()) ? Polynomial::variable(v) : sit->second;
      val = pow(base, static_cast<unsigned>(e));
    } else {
      // negative power: image must be +-1 times a monomial
      Monomial base_m = Monomial::var(v);
      int sign = 1;
      if (sit != sigma.end()) {
        const auto& img = sit->second.terms();
        if (img.size() != 1)
          throw ValidationError(
              "substitute: negative power of non-monomial image of " +
              v.name());
        const auto& [m, c] = *img.begin();
        if (c != 1 && c != -1)
          throw ValidationError(
              "substitute: negative power of non-unit coefficient at " +
              v.name());
        base_m = m;
        sign = (c < 0) ? -1 : 1;
      }
      int s = (sign == -1 && (e % 2 != 0)) ? -1 : 1;
      val = Polynomial::term(BigInt(s), base_m.pow(e));
    }
    return powers.emplace(key, std::move(val)).first->second;
  };

  Polynomial out;
  for (const auto& [m, c] : p.terms()) {
    Polynomial term(c);
    for (const auto& [v, e] : m.exps()) term *= image_pow(v, e);
    out += term;
  }
  return out;
}

std::pair<long long, Polynomial> leading_form(const Polynomial& p, VarId v) {
  if (p.is_zero())
    throw ValidationError("leading_form of the zero polynomial is undefined");
  bool first = true;
  long long d = 0;
  for (const auto& [m, c] : p.terms()) {
    long long e = m.exponent(v);
    if (first || e > d) d = e;
    first = false;
  }
  Polynomial coeff;
  Monomial divisor = Monomial::var(v, static_cast<int>(d));
  for (const auto& [m, c] : p.terms()) {
    if (m.exponent(v) == d)
      coeff += Polynomial::term(c, m * divisor.pow(-1));
  }
  return {d, coeff};
}

Polynomial exact_div(const Polynomial& p, const Polynomial& q) {
  if (q.is_zero()) throw ValidationError("exact_div by zero");
  if (p.has_negative_exponent() || q.has_negative_exponent())
    throw ValidationError("exact_div requires honest polynomials");
  const auto& ltq = *q.terms().begin();
  Polynomial quo;
  Polynomial rem = p;
  while (!rem.is_zero()) {
    const auto& ltr = *rem.terms().begin();
    auto m = Monomial::divide(ltr.first, ltq.first);
    if (!m || ltr.second % ltq.second != 0)
      throw NotDivisible("no exact polynomial quotient");
    Polynomial t = Polynomial::term(ltr.second / ltq.second, *m);
    quo += t;
    rem -= t * q;
  }
  return quo;
}

BigInt evaluate_int(const Polynomial& p, const std::map<VarId, BigInt>& sigma) {
  BigInt total = 0;
  for (const auto& [m, c] : p.terms()) {
    BigInt term = c;
    for (const auto& [v, e] : m.exps()) {
      auto it = sigma.find(v);
      if (it == sigma.end())
        throw ValidationError("evaluate_int: no value for " + v.name());
      const BigInt& val = it->second;
      if (e < 0) {
        if (val != 1 && val != -1)
          throw ValidationError("evaluate_int: negative power of non-unit " +
                                v.name());
        if (val == -1 && (e % 2 != 0)) term = -term;
      } else {
        for (int k = 0; k < e; ++k) term *= val;
      }
    }
    total += term;
  }
  return total;
}

std::vector<std::pair<long long, Polynomial>> homogeneous_components(
    const Polynomial& p) {
  std::map<long long, Polynomial> by_degree;
  for (const auto& [m, c] : p.terms())
    by_degree[m.degree()] += Polynomial::term(c, m);
  std::vector<std::pair<long long, Polynomial>> out;
  out.reserve(by_degree.size());
  for (auto& [d, poly] : by_degree) out.emplace_back(d, std::move(poly));
  return out;
}

std::string canonical_string(const Polynomial& p) {
  if (p.is_zero()) return "0";
  std::string out;
  bool first = true;
  for (const auto& [m, c] : p.terms()) {
    bool neg = c < 0;
    BigInt mag = neg ? BigInt(-c) : c;
    if (first) {
      if (neg) out += "-";
      first = false;
    } else {
      out += neg ? " - " : " + ";
    }
    std::string body;
    if (m.is_one()) {
      body = mag.str();
    } else {
      if (mag != 1) body = mag.str();
      for (const auto& [v, e] : m.exps()) {
        if (!body.empty()) body += "*";
        body += v.name();
        if (e != 1) body += "^" + std::to_string(e);
      }
    }
    out += body;
  }
  return out;
}

namespace {

struct PolyParser {
  std::string_view s;
  size_t pos = 0;

  void skip_ws() {
    while (pos < s.size() && std::isspace(static_cast<unsigned char>(s[pos])))
      ++pos;
  }
  bool eof() {
    skip_ws();
    return pos >= s.size();
  }
  char peek() {
    skip_ws();
    return pos < s.size() ? s[pos] : '\0';
  }

  BigInt parse_integer() {
    skip_ws();
    size_t start = pos;
    while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos])))
      ++pos;
    if (pos == start) throw ParseError("expected integer at offset " +
                                       std::to_string(start));
    return BigInt(std::string(s.substr(start, pos - start)));
  }

  int parse_exponent() {
    skip_ws();
    bool neg = false;
    if (pos < s.size() && s[pos] == '-') {
      neg = true;
      ++pos;
    }
    BigInt v = parse_integer();
    if (v > 1000000) throw ParseError("exponent out of range");
    int e = v.convert_to<int>();
    return neg ? -e : e;
  }

  std::optional<VarId> try_parse_var() {
    skip_ws();
    if (pos >= s.size() || !std::isalpha(static_cast<unsigned char>(s[pos])))
      return std::nullopt;
    size_t start = pos;
    ++pos;
    while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos])))
      ++pos;
    auto v = VarId::from_name(s.substr(start, pos - start));
    if (!v) throw ParseError("unknown variable at offset " +
                             std::to_string(start));
    return v;
  }

  // term := integer ['*' factors] | factors, where
  // factors := var ['^' int] ('*' var ['^' int])*
  Polynomial parse_term() {
    skip_ws();
    BigInt coeff = 1;
    Monomial mono;
    bool saw_any = false;
    if (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) {
      coeff = parse_integer();
      saw_any = true;
      skip_ws();
      if (pos < s.size() && s[pos] == '*')
        ++pos;
      else
        return Polynomial::term(coeff, mono);
    }
    while (true) {
      auto v = try_parse_var();
      if (!v) {
        if (!saw_any) throw ParseError("expected term at offset " +
                                       std::to_string(pos));
        throw ParseError("expected variable at offset " + std::to_string(pos));
      }
      saw_any = true;
      int e = 1;
      skip_ws();
      if (pos < s.size() && s[pos] == '^') {
        ++pos;
        e = parse_exponent();
      }
      mono = mono * Monomial::var(*v, e);
      skip_ws();
      if (pos < s.size() && s[pos] == '*') {
        ++pos;
        continue;
      }
      break;
    }
    return Polynomial::term(coeff, mono);
  }

  Polynomial parse() {
    skip_ws();
    Polynomial out;
    bool neg = false;
    if (peek() == '-') {
      neg = true;
      ++pos;
    }
    while (true) {
      Polynomial t = parse_term();
      out += neg ? -t : t;
      if (eof()) break;
      char c = peek();
      if (c == '+')
        neg = false;
      else if (c == '-')
        neg = true;
      else
        throw ParseError("unexpected character '" + std::string(1, c) +
                         "' at offset " + std::to_string(pos));
      ++pos;
    }
    return out;
  }
};

}  // namespace

Polynomial parse_polynomial(std::string_view s) {
  PolyParser parser{s};
  if (parser.eof()) throw ParseError("empty polynomial text");
  Polynomial p = parser.parse();
  return p;
}

nlohmann::ordered_json to_json(const Polynomial& p) {
  nlohmann::ordered_json terms = nlohmann::ordered_json::array();
  for (const auto& [m, c] : p.terms()) {
    nlohmann::ordered_json mono = nlohmann::ordered_json::object();
    for (const auto& [v, e] : m.exps()) mono[v.name()] = e;
    terms.push_back({{"coeff", c.str()}, {"monomial", std::move(mono)}});
  }
  return nlohmann::ordered_json{{"terms", std::move(terms)}};
}

Polynomial polynomial_from_json(const nlohmann::json& j) {
  if (!j.is_object() || !j.contains("terms") || !j["terms"].is_array())
    throw ParseError("polynomial JSON must be {\"terms\": [...]}");
  Polynomial p;
  for (const auto& t : j["terms"]) {
    if (!t.contains("coeff") || !t.contains("monomial"))
      throw ParseError("polynomial term needs coeff and monomial");
    BigInt c;
    try {
      c = BigInt(t["coeff"].get<std::string>());
    } catch (const std::exception&) {
      throw ParseError("bad coefficient in polynomial JSON");
    }
    Monomial m;
    for (const auto& [name, e] : t["monomial"].items()) {
      auto v = VarId::from_name(name);
      if (!v || !e.is_number_integer())
        throw ParseError("bad monomial entry in polynomial JSON");
      m = m * Monomial::var(*v, e.get<int>());
    }
    p += Polynomial::term(c, m);
  }
  return p;
}

RationalFunction::RationalFunction(Polynomial num, Polynomial den)
    : num_(std::move(num)), den_(std::move(den)) {
  if (den_.is_zero())
    throw ValidationError("rational function with zero denominator");
}

bool RationalFunction::equals(const RationalFunction& o) const {
  return num_ * o.den_ == o.num_ * den_;
}

RationalFunction RationalFunction::operator+(const RationalFunction& o) const {
  return RationalFunction(num_ * o.den_ + o.num_ * den_, den_ * o.den_);
}

RationalFunction RationalFunction::operator*(const Polynomial& p) const {
  return RationalFunction(num_ * p, den_);
}

std::string canonical_string(const RationalFunction& f) {
  return "(" + canonical_string(f.numerator()) + ") / (" +
         canonical_string(f.denominator()) + ")";
}

nlohmann::ordered_json to_json(const RationalFunction& f) {
  return nlohmann::ordered_json{{"numerator", to_json(f.numerator())},
                                {"denominator", to_json(f.denominator())}};
}

}  // namespace gpd
