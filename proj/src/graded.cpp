#include "eqcoh/graded.hpp"

#include <algorithm>
#include <bit>
#include <cctype>
#include <stdexcept>

namespace eqcoh {

int Monomial::theta_count() const { return std::popcount(theta); }

int Monomial::phi_weight() const {
  int w = 0;
  for (int e : phi) w += e;
  return w;
}

std::vector<int> Monomial::theta_list() const {
  std::vector<int> out;
  for (int i = 0; i < 32; ++i)
    if (theta & (1u << i)) out.push_back(i + 1);
  return out;
}

bool Monomial::operator<(const Monomial& o) const {
  if (theta != o.theta) {
    auto a = theta_list(), b = o.theta_list();
    return std::lexicographical_compare(a.begin(), a.end(), b.begin(),
                                        b.end());
  }
  if (phi != o.phi) return phi < o.phi;
  return mod < o.mod;
}

void add_term(GradedElement& e, const Monomial& m, const Scalar& c) {
  if (c.is_zero()) return;
  auto it = e.find(m);
  if (it == e.end()) {
    e.emplace(m, c);
  } else {
    it->second += c;
    if (it->second.is_zero()) e.erase(it);
  }
}

GradedElement operator+(const GradedElement& a, const GradedElement& b) {
  GradedElement out = a;
  for (const auto& [m, c] : b) add_term(out, m, c);
  return out;
}

GradedElement operator-(const GradedElement& a, const GradedElement& b) {
  GradedElement out = a;
  for (const auto& [m, c] : b) add_term(out, m, -c);
  return out;
}

GradedElement operator*(const Scalar& c, const GradedElement& a) {
  GradedElement out;
  if (c.is_zero()) return out;
  for (const auto& [m, v] : a) out.emplace(m, c * v);
  return out;
}

Algebra::Algebra(int lie_dim, int truncation, GdgaPtr module)
    : n_(lie_dim), truncation_(truncation), module_(std::move(module)) {
  if (n_ < 1 || n_ > 31) throw std::invalid_argument("Algebra: bad dimension");
  if (truncation_ < 0) throw std::invalid_argument("Algebra: bad truncation");
  if (!module_) throw std::invalid_argument("Algebra: null module");
}

int Algebra::degree(const Monomial& m) const {
  return m.theta_count() + 2 * m.phi_weight() + module_->degree[m.mod];
}

int Algebra::degree(const GradedElement& e) const {
  int d = -1;
  for (const auto& [m, c] : e) d = std::max(d, degree(m));
  return d;
}

bool Algebra::is_homogeneous(const GradedElement& e) const {
  int d = -2;
  for (const auto& [m, c] : e) {
    if (d == -2) d = degree(m);
    else if (degree(m) != d) return false;
  }
  return true;
}

Monomial Algebra::unit_monomial() const {
  Monomial m;
  m.phi.assign(n_, 0);
  m.mod = module_->unit;
  return m;
}

GradedElement Algebra::one() const { return {{unit_monomial(), Scalar(1)}}; }

GradedElement Algebra::theta(int i) const {
  Monomial m = unit_monomial();
  m.theta = 1u << (i - 1);
  return {{m, Scalar(1)}};
}

GradedElement Algebra::phi(int i) const {
  Monomial m = unit_monomial();
  m.phi[i - 1] = 1;
  return {{m, Scalar(1)}};
}

GradedElement Algebra::module_elem(int idx) const {
  Monomial m = unit_monomial();
  m.mod = idx;
  return {{m, Scalar(1)}};
}

GradedElement Algebra::module_elem(const ModuleVec& v) const {
  GradedElement out;
  for (const auto& [idx, c] : v) add_term(out, [&] {
    Monomial m = unit_monomial();
    m.mod = idx;
    return m;
  }(), c);
  return out;
}

GradedElement Algebra::monomial(const Monomial& m) const {
  return {{m, Scalar(1)}};
}

namespace {

// Parity of #{(i,j) : i in a, j in b, i > j}; the sign of sorting the
// concatenation a ++ b of two increasing index sets.
int merge_sign(uint32_t a, uint32_t b) {
  int inversions = 0;
  for (int p = 0; p < 32; ++p)
    if (b & (1u << p)) inversions += std::popcount(a >> (p + 1));
  return (inversions % 2 == 0) ? 1 : -1;
}

}  // namespace

GradedElement Algebra::mul_monomials(const Monomial& a, const Scalar& ca,
                                     const Monomial& b,
                                     const Scalar& cb) const {
  GradedElement out;
  if (a.theta & b.theta) return out;
  // a's module factor passes b's theta block.
  int sign = merge_sign(a.theta, b.theta);
  if ((module_->degree[a.mod] % 2) && (b.theta_count() % 2)) sign = -sign;
  Monomial m;
  m.theta = a.theta | b.theta;
  m.phi.resize(n_);
  for (int i = 0; i < n_; ++i) m.phi[i] = a.phi[i] + b.phi[i];
  Scalar coef = ca * cb * Scalar(sign);
  int base_deg = m.theta_count() + 2 * m.phi_weight();
  for (const auto& [idx, c] : module_->mul(a.mod, b.mod)) {
    if (base_deg + module_->degree[idx] > truncation_) continue;
    m.mod = idx;
    add_term(out, m, coef * c);
  }
  return out;
}

GradedElement Algebra::mul(const GradedElement& a,
                           const GradedElement& b) const {
  GradedElement out;
  for (const auto& [ma, ca] : a)
    for (const auto& [mb, cb] : b)
      for (const auto& [m, c] : mul_monomials(ma, ca, mb, cb))
        add_term(out, m, c);
  return out;
}

GradedElement Algebra::truncate(const GradedElement& e, int N) const {
  GradedElement out;
  for (const auto& [m, c] : e)
    if (degree(m) <= N) out.emplace(m, c);
  return out;
}

GradedElement Algebra::apply_derivation(const Derivation& d,
                                        const GradedElement& x) const {
  GradedElement out;
  bool odd = (d.degree % 2) != 0;
  for (const auto& [m, c] : x) {
    auto thetas = m.theta_list();
    int k = static_cast<int>(thetas.size());
    // theta generators in canonical order come first.
    if (!d.theta_img.empty()) {
      for (int t = 0; t < k; ++t) {
        const GradedElement& img = d.theta_img[thetas[t] - 1];
        if (img.empty()) continue;
        Scalar sign = (odd && (t % 2)) ? Scalar(-1) : Scalar(1);
        Monomial prefix = unit_monomial();
        for (int s = 0; s < t; ++s) prefix.theta |= 1u << (thetas[s] - 1);
        Monomial rest = m;
        rest.theta = 0;
        for (int s = t + 1; s < k; ++s) rest.theta |= 1u << (thetas[s] - 1);
        GradedElement contrib =
            mul(monomial(prefix), mul(img, monomial(rest)));
        for (const auto& [mm, cc] : contrib) add_term(out, mm, c * sign * cc);
      }
    }
    // phi generators (even): for odd d the sign is the parity of the
    // theta block in front.
    Scalar block_sign = (odd && (k % 2)) ? Scalar(-1) : Scalar(1);
    if (!d.phi_img.empty()) {
      for (int i = 0; i < n_; ++i) {
        if (m.phi[i] == 0 || d.phi_img[i].empty()) continue;
        Monomial left = unit_monomial();
        left.theta = m.theta;
        Monomial right = m;
        right.theta = 0;
        right.phi[i] -= 1;
        GradedElement contrib =
            mul(monomial(left), mul(d.phi_img[i], monomial(right)));
        Scalar mult = c * Scalar(m.phi[i]) * block_sign;
        for (const auto& [mm, cc] : contrib) add_term(out, mm, mult * cc);
      }
    }
    // module factor.
    if (d.mod_img) {
      GradedElement img = d.mod_img(m.mod);
      if (!img.empty()) {
        Monomial left = m;
        left.mod = module_->unit;
        GradedElement contrib = mul(monomial(left), img);
        for (const auto& [mm, cc] : contrib)
          add_term(out, mm, c * block_sign * cc);
      }
    }
  }
  return out;
}

namespace {

void enumerate_phi(int n, int weight, std::vector<int>& current, int pos,
                   const std::function<void(const std::vector<int>&)>& emit) {
  if (pos == n - 1) {
    current[pos] = weight;
    emit(current);
    return;
  }
  for (int e = 0; e <= weight; ++e) {
    current[pos] = e;
    enumerate_phi(n, weight - e, current, pos + 1, emit);
  }
}

}  // namespace

std::vector<Monomial> Algebra::basis_of_degree(int d) const {
  std::vector<Monomial> out;
  if (d < 0) return out;
  for (int mod = 0; mod < module_->size(); ++mod) {
    int dm = module_->degree[mod];
    if (dm > d) continue;
    for (uint32_t mask = 0; mask < (1u << n_); ++mask) {
      int a = std::popcount(mask);
      int r = d - dm - a;
      if (r < 0 || r % 2) continue;
      std::vector<int> phi(n_, 0);
      enumerate_phi(n_, r / 2, phi, 0, [&](const std::vector<int>& exps) {
        Monomial m;
        m.theta = mask;
        m.phi = exps;
        m.mod = mod;
        out.push_back(m);
      });
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<Monomial> Algebra::cartan_basis_of_degree(int d) const {
  std::vector<Monomial> out;
  for (const Monomial& m : basis_of_degree(d))
    if (m.theta == 0) out.push_back(m);
  return out;
}

std::string Algebra::to_string(const GradedElement& e) const {
  if (e.empty()) return "0";
  std::string out;
  for (const auto& [m, cc] : e) {
    Scalar c = cc;
    std::string sep = " + ";
    std::string neg = eqcoh::to_string(c);
    if (neg[0] == '-' && neg.find('+', 1) == std::string::npos &&
        neg.find('-', 1) == std::string::npos) {
      sep = " - ";
      c = -c;
    }
    if (out.empty()) {
      if (sep == " - ") out += "-";
    } else {
      out += sep;
    }
    std::vector<std::string> factors;
    for (int i : m.theta_list()) factors.push_back("t" + std::to_string(i));
    for (int i = 0; i < n_; ++i) {
      if (m.phi[i] == 0) continue;
      std::string f = "p" + std::to_string(i + 1);
      if (m.phi[i] > 1) f += "^" + std::to_string(m.phi[i]);
      factors.push_back(f);
    }
    if (m.mod != module_->unit)
      factors.push_back("[m:" + std::to_string(m.mod) + "]");
    std::string cs = eqcoh::to_string(c);
    bool wrap = cs.find('+', 1) != std::string::npos ||
                cs.find('-', 1) != std::string::npos;
    if (wrap) cs = "(" + cs + ")";
    if (factors.empty()) {
      out += cs;
    } else {
      std::string body;
      for (const auto& f : factors) {
        if (!body.empty()) body += "*";
        body += f;
      }
      out += c.is_one() ? body : cs + "*" + body;
    }
  }
  return out;
}

namespace {

struct Parser {
  const Algebra& alg;
  std::string s;
  size_t pos = 0;

  explicit Parser(const Algebra& a, const std::string& text) : alg(a) {
    for (char c : text)
      if (!std::isspace(static_cast<unsigned char>(c))) s += c;
  }

  bool done() const { return pos >= s.size(); }
  char peek() const { return pos < s.size() ? s[pos] : '\0'; }

  [[noreturn]] void fail(const std::string& why) {
    throw std::invalid_argument("parse error at position " +
                                std::to_string(pos) + ": " + why);
  }

  GradedElement parse_expression() {
    GradedElement out;
    bool negative = false;
    if (peek() == '+' || peek() == '-') negative = s[pos++] == '-';
    while (true) {
      GradedElement term = parse_term();
      out = negative ? out - term : out + term;
      if (done()) return out;
      if (peek() == '+' || peek() == '-') {
        negative = s[pos++] == '-';
      } else {
        fail("expected '+' or '-'");
      }
    }
  }

  GradedElement parse_term() {
    Scalar sign(1);
    while (peek() == '+' || peek() == '-') {
      if (s[pos] == '-') sign = -sign;
      ++pos;
    }
    GradedElement out = sign * parse_factor();
    while (peek() == '*') {
      ++pos;
      out = alg.mul(out, parse_factor());
    }
    return out;
  }

  GradedElement parse_factor() {
    char c = peek();
    if (c == '(') {
      size_t close = s.find(')', pos);
      if (close == std::string::npos) fail("unbalanced parenthesis");
      Scalar v = parse_scalar(s.substr(pos + 1, close - pos - 1));
      pos = close + 1;
      return v * alg.one();
    }
    if (c == 'I') {
      ++pos;
      return Scalar::i() * alg.one();
    }
    if (c == 't' || c == 'p') {
      ++pos;
      int idx = parse_int();
      if (idx < 1 || idx > alg.n()) fail("generator index out of range");
      if (c == 't') return alg.theta(idx);
      GradedElement out = alg.phi(idx);
      if (peek() == '^') {
        ++pos;
        int e = parse_int();
        if (e < 0) fail("negative exponent");
        GradedElement pow = alg.one();
        for (int r = 0; r < e; ++r) pow = alg.mul(pow, alg.phi(idx));
        out = pow;
      }
      return out;
    }
    if (c == '[') {
      if (s.compare(pos, 3, "[m:") != 0) fail("expected [m:k]");
      pos += 3;
      int idx = parse_int();
      if (peek() != ']') fail("expected ']'");
      ++pos;
      if (idx < 0 || idx >= alg.module().size())
        fail("module index out of range");
      return alg.module_elem(idx);
    }
    if (std::isdigit(static_cast<unsigned char>(c))) {
      size_t start = pos;
      while (!done() && (std::isdigit(static_cast<unsigned char>(peek())) ||
                         peek() == '/'))
        ++pos;
      return Scalar(parse_rational(s.substr(start, pos - start))) * alg.one();
    }
    fail("unexpected character");
  }

  int parse_int() {
    size_t start = pos;
    while (!done() && std::isdigit(static_cast<unsigned char>(peek()))) ++pos;
    if (start == pos) fail("expected integer");
    return std::stoi(s.substr(start, pos - start));
  }
};

}  // namespace

GradedElement Algebra::parse(const std::string& text) const {
  Parser p(*this, text);
  if (p.s == "0") return {};
  GradedElement out = p.parse_expression();
  if (!p.done()) p.fail("trailing input");
  return out;
}

Operator Operator::zero() {
  return {0, [](const GradedElement&) { return GradedElement(); }};
}

Operator Operator::identity() {
  return {0, [](const GradedElement& x) { return x; }};
}

Operator Operator::from_derivation(const Algebra& a, Derivation d) {
  const Algebra* alg = &a;
  int degree = d.degree;
  auto dp = std::make_shared<Derivation>(std::move(d));
  return {degree, [alg, dp](const GradedElement& x) {
            return alg->apply_derivation(*dp, x);
          }};
}

Operator Operator::mul_by(const Algebra& a, GradedElement e, int degree) {
  const Algebra* alg = &a;
  auto ep = std::make_shared<GradedElement>(std::move(e));
  return {degree, [alg, ep](const GradedElement& x) {
            return alg->mul(*ep, x);
          }};
}

Operator compose(const Operator& p, const Operator& q) {
  return {p.degree + q.degree,
          [p = p.fn, q = q.fn](const GradedElement& x) { return p(q(x)); }};
}

Operator add(const Operator& p, const Operator& q) {
  return {p.degree,
          [p = p.fn, q = q.fn](const GradedElement& x) { return p(x) + q(x); }};
}

Operator sub(const Operator& p, const Operator& q) {
  return {p.degree,
          [p = p.fn, q = q.fn](const GradedElement& x) { return p(x) - q(x); }};
}

Operator scale(const Scalar& c, const Operator& p) {
  return {p.degree,
          [c, p = p.fn](const GradedElement& x) { return c * p(x); }};
}

Operator commutator(const Operator& p, const Operator& q) {
  return sub(compose(p, q), compose(q, p));
}

Operator anticommutator(const Operator& p, const Operator& q) {
  return add(compose(p, q), compose(q, p));
}

}  // namespace eqcoh
