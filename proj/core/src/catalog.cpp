#include "padiff/catalog.hpp"

#include "padiff/errors.hpp"
#include "padiff/fq.hpp"

namespace padiff {

ModuleFile catalog_bessel(long n, long p) {
  if (n < 1) throw precondition_error("Bessel rank must be >= 1");
  if (!is_prime(p)) throw precondition_error("p must be prime");

  // theta^n - (-pi)^n / x, monic in theta.
  std::vector<LaurentElement> theta(static_cast<std::size_t>(n) + 1, LaurentElement(p));
  PiScalar neg_pi_pow = (-PiScalar::pi(p)).pow(n);
  theta[0] = LaurentElement::monomial(p, -1, -neg_pi_pow);
  theta[static_cast<std::size_t>(n)] = LaurentElement::one(p);

  ModuleFile out{expand_theta(p, theta),
                 "bessel n=" + std::to_string(n) + " p=" + std::to_string(p),
                 std::nullopt};
  return out;
}

ModuleFile catalog_exp(long k, long p) {
  if (k < 1) throw precondition_error("exponent k must be >= 1");
  if (!is_prime(p)) throw precondition_error("p must be prime");

  // T - d/dx(pi x^(-k)) = T + k pi x^(-k-1)
  PiScalar kpi = PiScalar::from_long(p, k) * PiScalar::pi(p);
  std::vector<LaurentElement> coeffs = {
      LaurentElement::monomial(p, -k - 1, kpi),
      LaurentElement::one(p),
  };
  ModuleFile out{TwistedOperator(p, std::move(coeffs)),
                 "exp(pi/x^" + std::to_string(k) + ") p=" + std::to_string(p),
                 std::nullopt};

  long m = k;
  while (m % p == 0) m /= p;
  if (m == 1) out.declared_alpha = std::vector<Rational>{Rational(1)};
  return out;
}

ModuleFile catalog_adjoint_bessel2() {
  long p = 2;
  // theta^3 - (16/x) theta + 8/x in monic T-form.
  std::vector<LaurentElement> theta(4, LaurentElement(p));
  theta[0] = LaurentElement::monomial(p, -1, PiScalar::from_long(p, 8));
  theta[1] = LaurentElement::monomial(p, -1, PiScalar::from_long(p, -16));
  theta[3] = LaurentElement::one(p);

  ModuleFile out{expand_theta(p, theta), "adjoint bessel n=2 p=2", std::nullopt};
  out.declared_alpha = std::vector<Rational>{rat(1, 3), rat(1, 3), rat(1, 3)};
  return out;
}

std::vector<ModuleFile> catalog_all() {
  std::vector<ModuleFile> out;
  for (auto [n, p] : {std::pair<long, long>{2, 2}, {3, 2}, {2, 3}, {5, 2}, {3, 7}})
    out.push_back(catalog_bessel(n, p));
  for (long k : {1L, 2L, 4L, 8L}) out.push_back(catalog_exp(k, 2));
  out.push_back(catalog_adjoint_bessel2());
  return out;
}

}  // namespace padiff
