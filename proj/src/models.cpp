#include "dihedral/models.hpp"

#include <charconv>
#include <cmath>
#include <complex>
#include <numeric>
#include <vector>

namespace dihedral {

namespace {

long long checked(__int128 v) {
  if (v > INT64_MAX || v < INT64_MIN)
    throw ValidationError("overflow", "rational arithmetic overflow; use smaller parameters");
  return static_cast<long long>(v);
}

}  // namespace

Rational::Rational(long long n, long long d) : num(n), den(d) {
  if (den == 0) throw ValidationError("rational", "zero denominator");
  if (den < 0) {
    num = -num;
    den = -den;
  }
  long long g = std::gcd(num < 0 ? -num : num, den);
  if (g > 1) {
    num /= g;
    den /= g;
  }
}

Rational operator*(const Rational& a, const Rational& b) {
  __int128 n = static_cast<__int128>(a.num) * b.num;
  __int128 d = static_cast<__int128>(a.den) * b.den;
  return Rational(checked(n), checked(d));
}

Rational rational_pow(const Rational& q, int e) {
  if (e < 0) {
    if (q.num == 0) throw ValidationError("rational", "zero has no negative power");
    return rational_pow(Rational(q.den, q.num), -e);
  }
  Rational acc(1);
  for (int i = 0; i < e; ++i) acc = acc * q;
  return acc;
}

std::string to_string(const Rational& q) {
  if (q.den == 1) return std::to_string(q.num);
  return std::to_string(q.num) + "/" + std::to_string(q.den);
}

ModelParam parse_param(std::string_view text) {
  ModelParam p;
  p.text = std::string(text);
  if (text.find('.') != std::string_view::npos || text.find('e') != std::string_view::npos ||
      text.find('E') != std::string_view::npos) {
    p.exact = false;
    size_t pos = 0;
    try {
      p.x = std::stod(p.text, &pos);
    } catch (const std::exception&) {
      throw ValidationError("parse", "bad parameter '" + p.text + "'");
    }
    if (pos != p.text.size()) throw ValidationError("parse", "bad parameter '" + p.text + "'");
    return p;
  }
  auto parse_ll = [&](std::string_view s) {
    long long v = 0;
    auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
    if (ec != std::errc{} || ptr != s.data() + s.size())
      throw ValidationError("parse", "bad parameter '" + p.text + "'");
    return v;
  };
  size_t slash = text.find('/');
  if (slash == std::string_view::npos) {
    p.q = Rational(parse_ll(text));
  } else {
    p.q = Rational(parse_ll(text.substr(0, slash)), parse_ll(text.substr(slash + 1)));
  }
  p.x = static_cast<double>(p.q.num) / static_cast<double>(p.q.den);
  return p;
}

namespace {

constexpr double kTol = 1e-9;

bool is_zero(const ModelParam& p) { return p.exact ? p.q.num == 0 : std::abs(p.x) < kTol; }

bool pow_2n_is_one(const ModelParam& p, int n) {
  if (p.exact) return rational_pow(p.q, 2 * n) == Rational(1);
  return std::abs(std::pow(std::abs(p.x), 2 * n) - 1.0) < kTol;
}

std::string power_text(const ModelParam& p, int n) {
  if (p.exact) return to_string(rational_pow(p.q, n));
  char buf[32];
  auto [ptr, ec] = std::to_chars(buf, buf + sizeof buf, std::pow(p.x, n));
  return std::string(buf, ptr);
}

// "(x^n - c)" with the sign folded in
std::string hyper_factor(int n, const std::string& c) {
  std::string xn = "x^" + std::to_string(n);
  if (!c.empty() && c[0] == '-') return "(" + xn + " + " + c.substr(1) + ")";
  return "(" + xn + " - " + c + ")";
}

// " + c*mono" or " - c*mono", with coefficient 1 omitted
std::string signed_term(const std::string& coeff, const std::string& mono) {
  bool neg = !coeff.empty() && coeff[0] == '-';
  std::string mag = neg ? coeff.substr(1) : coeff;
  std::string body = mag == "1" ? mono : mag + "*" + mono;
  return (neg ? " - " : " + ") + body;
}

}  // namespace

PlaneModel affine_model(ActionLabel label, int n, const ModelParam& p1, const ModelParam& p2) {
  if (n < 2) throw ValidationError("bad-n", "n must be at least 2");
  PlaneModel model;
  model.n = n;
  model.genus = 2 * n - 1;
  model.param1 = p1.text;
  model.param2 = p2.text;
  if (label == ActionLabel::Type1) {
    if (n % 2 == 0)
      throw ModelError(ModelErrorKind::InvalidLabel, "type1 (hyperelliptic) requires odd n");
    if (is_zero(p1) || is_zero(p2))
      throw ModelError(ModelErrorKind::InvalidParams, "lambda and mu must be nonzero");
    if (pow_2n_is_one(p1, n))
      throw ModelError(ModelErrorKind::InvalidParams, "lambda^(2n) = 1 is excluded");
    if (pow_2n_is_one(p2, n))
      throw ModelError(ModelErrorKind::InvalidParams, "mu^(2n) = 1 is excluded");
    model.kind = PlaneModel::Kind::Hyperelliptic;
    ModelParam inv1 = p1, inv2 = p2;
    if (p1.exact) inv1.q = Rational(p1.q.den, p1.q.num);
    else inv1.x = 1.0 / p1.x;
    if (p2.exact) inv2.q = Rational(p2.q.den, p2.q.num);
    else inv2.x = 1.0 / p2.x;
    model.equation = "y^2 = " + hyper_factor(n, power_text(p1, n)) + "*" +
                     hyper_factor(n, power_text(inv1, n)) + "*" +
                     hyper_factor(n, power_text(p2, n)) + "*" +
                     hyper_factor(n, power_text(inv2, n));
    return model;
  }
  // elliptic n-gonal stratum
  if (is_zero(p1) && is_zero(p2))
    throw ModelError(ModelErrorKind::InvalidParams,
                     "a = b = 0 is excluded: Fermat curve, larger automorphism group");
  if (is_zero(p1) || is_zero(p2))
    throw ModelError(ModelErrorKind::InvalidParams, "a and b must be nonzero");
  model.kind = PlaneModel::Kind::EllipticNGonal;
  std::string xn = "x^" + std::to_string(n);
  std::string yn = "y^" + std::to_string(n);
  std::string a = p1.exact ? to_string(p1.q) : p1.text;
  std::string b = p2.exact ? to_string(p2.q) : p2.text;
  model.equation = "x^" + std::to_string(2 * n) + " + y^" + std::to_string(2 * n) +
                   signed_term(a, xn + "*" + yn) + signed_term(b, xn) + signed_term(b, yn) +
                   " + 1 = 0";
  return model;
}

BranchCheck hyperelliptic_branch_check(int n, const ModelParam& lambda, const ModelParam& mu) {
  if (n < 3 || n % 2 == 0)
    throw ModelError(ModelErrorKind::InvalidLabel, "hyperelliptic stratum requires odd n >= 3");
  if (is_zero(lambda) || is_zero(mu))
    throw ModelError(ModelErrorKind::InvalidParams, "lambda and mu must be nonzero");
  if (pow_2n_is_one(lambda, n))
    throw ModelError(ModelErrorKind::InvalidParams, "lambda^(2n) = 1 is excluded");
  if (pow_2n_is_one(mu, n))
    throw ModelError(ModelErrorKind::InvalidParams, "mu^(2n) = 1 is excluded");

  if (lambda.exact && mu.exact) {
    Rational ln = rational_pow(lambda.q, n);
    Rational mn = rational_pow(mu.q, n);
    Rational mn_inv = rational_pow(mu.q, -n);
    if (ln == mn)
      throw ModelError(ModelErrorKind::DegenerateBranching,
                       "lambda^n = mu^n = " + to_string(ln) + ": the two branch orbits collide");
    if (ln == mn_inv)
      throw ModelError(ModelErrorKind::DegenerateBranching,
                       "lambda^n = mu^-n = " + to_string(ln) + ": the two branch orbits collide");
  } else {
    // numeric path: all 4n roots w^k lambda^{+-1}, w^k mu^{+-1}
    std::vector<std::complex<double>> roots;
    for (double base : {lambda.x, 1.0 / lambda.x, mu.x, 1.0 / mu.x})
      for (int k = 0; k < n; ++k)
        roots.push_back(std::polar(std::abs(base), 2 * M_PI * k / n) *
                        std::complex<double>(base < 0 ? -1.0 : 1.0, 0.0));
    for (size_t i = 0; i < roots.size(); ++i)
      for (size_t j = i + 1; j < roots.size(); ++j)
        if (std::abs(roots[i] - roots[j]) < kTol)
          throw ModelError(ModelErrorKind::DegenerateBranching,
                           "branch points " + std::to_string(i) + " and " + std::to_string(j) +
                               " collide within 1e-9");
  }
  return {4 * n, 2 * n - 1};
}

}  // namespace dihedral
