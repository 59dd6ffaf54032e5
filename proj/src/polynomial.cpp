#include "signlap/polynomial.hpp"

#include <algorithm>
#include <cmath>

#include "signlap/errors.hpp"

namespace signlap {

Polynomial::Polynomial(std::vector<Rational> coefficients) : coeffs_(std::move(coefficients)) { trim(); }

void Polynomial::trim() {
  while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

Rational Polynomial::coefficient(int k) const {
  if (k < 0 || k > degree()) return 0;
  return coeffs_[static_cast<std::size_t>(k)];
}

int Polynomial::order_at_zero() const {
  for (std::size_t k = 0; k < coeffs_.size(); ++k)
    if (coeffs_[k] != 0) return static_cast<int>(k);
  return -1;
}

Rational Polynomial::operator()(const Rational& t) const {
  Rational acc = 0;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * t + *it;
  return acc;
}

double Polynomial::operator()(double t) const {
  double acc = 0;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * t + it->get_d();
  return acc;
}

Polynomial Polynomial::derivative() const {
  std::vector<Rational> d;
  for (std::size_t k = 1; k < coeffs_.size(); ++k) d.push_back(coeffs_[k] * static_cast<long>(k));
  return Polynomial(std::move(d));
}

Polynomial Polynomial::monic() const {
  if (is_zero()) return *this;
  std::vector<Rational> c = coeffs_;
  const Rational lc = leading();
  for (auto& x : c) x /= lc;
  return Polynomial(std::move(c));
}

Polynomial Polynomial::without_zero_roots() const {
  const int k = order_at_zero();
  if (k <= 0) return *this;
  return Polynomial(std::vector<Rational>(coeffs_.begin() + k, coeffs_.end()));
}

Polynomial operator-(const Polynomial& a, const Polynomial& b) {
  std::vector<Rational> c(std::max(a.coeffs_.size(), b.coeffs_.size()));
  for (std::size_t k = 0; k < a.coeffs_.size(); ++k) c[k] += a.coeffs_[k];
  for (std::size_t k = 0; k < b.coeffs_.size(); ++k) c[k] -= b.coeffs_[k];
  return Polynomial(std::move(c));
}

Polynomial operator*(const Polynomial& a, const Polynomial& b) {
  if (a.is_zero() || b.is_zero()) return {};
  std::vector<Rational> c(a.coeffs_.size() + b.coeffs_.size() - 1);
  for (std::size_t i = 0; i < a.coeffs_.size(); ++i)
    for (std::size_t j = 0; j < b.coeffs_.size(); ++j) c[i + j] += a.coeffs_[i] * b.coeffs_[j];
  return Polynomial(std::move(c));
}

std::string Polynomial::to_string() const {
  if (is_zero()) return "0";
  std::string out;
  for (int k = degree(); k >= 0; --k) {
    const Rational& c = coeffs_[static_cast<std::size_t>(k)];
    if (c == 0) continue;
    if (!out.empty()) out += c < 0 ? " - " : " + ";
    else if (c < 0) out += "-";
    const Rational mag = abs(c);
    if (mag != 1 || k == 0) out += signlap::to_string(mag);
    if (k >= 1) out += "t";
    if (k >= 2) out += "^" + std::to_string(k);
  }
  return out;
}

std::pair<Polynomial, Polynomial> divmod(const Polynomial& a, const Polynomial& b) {
  if (b.is_zero()) throw InvalidInput("polynomial division by zero");
  std::vector<Rational> rem = a.coefficients();
  const int db = b.degree();
  if (a.degree() < db) return {Polynomial{}, a};
  std::vector<Rational> quot(static_cast<std::size_t>(a.degree() - db + 1));
  for (int k = a.degree(); k >= db; --k) {
    const Rational f = rem[static_cast<std::size_t>(k)] / b.leading();
    quot[static_cast<std::size_t>(k - db)] = f;
    if (f == 0) continue;
    for (int j = 0; j <= db; ++j) rem[static_cast<std::size_t>(k - db + j)] -= f * b.coefficient(j);
  }
  return {Polynomial(std::move(quot)), Polynomial(std::move(rem))};
}

Polynomial gcd(const Polynomial& a, const Polynomial& b) {
  Polynomial x = a, y = b;
  while (!y.is_zero()) {
    Polynomial r = divmod(x, y).second;
    x = std::move(y);
    y = r.monic();
  }
  return x.monic();
}

std::vector<std::pair<Polynomial, int>> square_free_decomposition(const Polynomial& p) {
  if (p.degree() <= 0) return {};
  std::vector<std::pair<Polynomial, int>> out;
  const Polynomial dp = p.derivative();
  const Polynomial a0 = gcd(p, dp);
  Polynomial b = divmod(p, a0).first;
  Polynomial c = divmod(dp, a0).first;
  Polynomial d = c - b.derivative();
  for (int i = 1; b.degree() > 0; ++i) {
    const Polynomial a = gcd(b, d);
    b = divmod(b, a).first;
    c = divmod(d, a).first;
    d = c - b.derivative();
    if (a.degree() > 0) out.emplace_back(a.monic(), i);
  }
  return out;
}

namespace {

Polynomial normalized(const Polynomial& p) {
  if (p.is_zero()) return p;
  const Rational scale = abs(p.leading());
  std::vector<Rational> c = p.coefficients();
  for (auto& x : c) x /= scale;
  return Polynomial(std::move(c));
}

int sign_changes(const std::vector<Polynomial>& chain, const Rational& x) {
  int changes = 0, last = 0;
  for (const auto& p : chain) {
    const int s = sgn(p(x));
    if (s == 0) continue;
    if (last != 0 && s != last) ++changes;
    last = s;
  }
  return changes;
}

// Primitive integer multiple's leading coefficient, the denominator bound
// for rational roots.
mpz_class integer_leading(const Polynomial& p) {
  mpz_class den_lcm = 1;
  for (const auto& c : p.coefficients())
    mpz_lcm(den_lcm.get_mpz_t(), den_lcm.get_mpz_t(), c.get_den().get_mpz_t());
  mpz_class g = 0;
  for (const auto& c : p.coefficients()) {
    mpz_class scaled = c.get_num() * (den_lcm / c.get_den());
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), scaled.get_mpz_t());
  }
  mpz_class lead = p.leading().get_num() * (den_lcm / p.leading().get_den()) / g;
  return abs(lead);
}

}  // namespace

std::vector<Polynomial> sturm_chain(const Polynomial& p) {
  std::vector<Polynomial> chain;
  if (p.is_zero()) return chain;
  chain.push_back(normalized(p));
  Polynomial next = normalized(p.derivative());
  while (!next.is_zero()) {
    chain.push_back(next);
    const auto& prev = chain[chain.size() - 2];
    Polynomial r = divmod(prev, chain.back()).second;
    next = normalized(Polynomial{} - r);
  }
  return chain;
}

int sturm_count(const std::vector<Polynomial>& chain, const Rational& a, const Rational& b) {
  return sign_changes(chain, a) - sign_changes(chain, b);
}

Rational simplest_rational_between(Rational lo, Rational hi) {
  if (lo > hi) std::swap(lo, hi);
  if (lo <= 0 && hi >= 0) return 0;
  if (hi < 0) return -simplest_rational_between(-hi, -lo);
  mpz_class fl;
  mpz_fdiv_q(fl.get_mpz_t(), lo.get_num().get_mpz_t(), lo.get_den().get_mpz_t());
  const Rational base(fl);
  if (base == lo) return lo;
  if (base + 1 <= hi) return base + 1;
  const Rational inner = simplest_rational_between(1 / (hi - base), 1 / (lo - base));
  return base + 1 / inner;
}

std::vector<IsolatedRoot> positive_roots(const Polynomial& square_free, const Rational& width) {
  const Polynomial f = square_free.without_zero_roots();
  std::vector<IsolatedRoot> roots;
  if (f.degree() <= 0) return roots;

  Rational bound = 0;
  for (int k = 0; k < f.degree(); ++k) bound = std::max(bound, Rational(abs(f.coefficient(k) / f.leading())));
  bound += 1;  // Cauchy bound: every root has |t| < bound

  const auto chain = sturm_chain(f);
  const mpz_class lead = integer_leading(f);
  Rational target = Rational(1) / (2 * Rational(lead * lead));
  if (width < target) target = width;

  std::vector<std::pair<Rational, Rational>> pending{{Rational(0), bound}};
  while (!pending.empty()) {
    auto [lo, hi] = pending.back();
    pending.pop_back();
    const int count = sturm_count(chain, lo, hi);
    if (count == 0) continue;
    if (count > 1) {
      Rational mid = (lo + hi) / 2;
      while (f(mid) == 0) mid = (lo + mid) / 2;
      pending.emplace_back(mid, hi);
      pending.emplace_back(lo, mid);
      continue;
    }
    IsolatedRoot root;
    if (f(hi) == 0) {
      root.exact = hi;
    } else {
      const int s_lo = sgn(f(lo));
      while (hi - lo > target) {
        const Rational mid = (lo + hi) / 2;
        const int s = sgn(f(mid));
        if (s == 0) {
          root.exact = mid;
          break;
        }
        (s == s_lo ? lo : hi) = mid;
      }
      if (!root.exact) {
        const Rational candidate = simplest_rational_between(lo, hi);
        if (f(candidate) == 0) root.exact = candidate;
      }
    }
    if (root.exact) {
      root.lower = root.upper = *root.exact;
      root.approx = root.exact->get_d();
    } else {
      root.lower = lo;
      root.upper = hi;
      root.approx = Rational((lo + hi) / 2).get_d();
    }
    roots.push_back(std::move(root));
  }
  std::sort(roots.begin(), roots.end(), [](const IsolatedRoot& a, const IsolatedRoot& b) { return a.lower < b.lower; });
  return roots;
}

}  // namespace signlap
