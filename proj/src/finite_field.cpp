#include "sparseprime/detail/finite_field.hpp"

#include <stdexcept>

namespace sparseprime::ff {

ExtensionField::Elem ExtensionField::inv(const Elem& a) const {
  // Extended Euclid on (modulus, a), tracking the coefficient of a.
  Poly<PrimeField> r0 = modulus_, r1 = reduce(a);
  Poly<PrimeField> t0{}, t1{1};
  if (r1.empty()) throw std::domain_error("inverse of zero");
  while (!r1.empty()) {
    auto [q, r] = divmod(base_, r0, r1);
    auto t = ff::sub(base_, t0, ff::mul(base_, q, t1));
    r0 = std::move(r1);
    r1 = std::move(r);
    t0 = std::move(t1);
    t1 = std::move(t);
  }
  // r0 is a nonzero constant since the modulus is irreducible.
  const auto c = base_.inv(r0.front());
  for (auto& x : t0) x = base_.mul(x, c);
  return reduce(std::move(t0));
}

ExtensionField::Elem ExtensionField::pth_root(const Elem& a) const {
  Elem out = a;
  const mpz_class q = static_cast<unsigned long>(base_.characteristic());
  for (std::size_t i = 1; i < degree_over_base(); ++i) out = pow(out, q);
  return out;
}

namespace {

using P = Poly<PrimeField>;

// Split a squarefree product of irreducibles of equal degree `d`.
void equal_degree_split(const PrimeField& f, const P& g, std::size_t d,
                        std::mt19937_64& rng, std::vector<P>& out) {
  if (static_cast<std::size_t>(degree<PrimeField>(g)) == d) {
    out.push_back(g);
    return;
  }
  mpz_class q = static_cast<unsigned long>(f.characteristic());
  mpz_class exponent;
  mpz_pow_ui(exponent.get_mpz_t(), q.get_mpz_t(), d);
  exponent = (exponent - 1) / 2;
  std::uniform_int_distribution<std::uint64_t> coeff(0, f.characteristic() - 1);
  while (true) {
    P a(static_cast<std::size_t>(degree<PrimeField>(g)));
    for (auto& c : a) c = coeff(rng);
    trim(f, a);
    if (degree<PrimeField>(a) < 1) continue;
    auto b = sub(f, powmod(f, a, exponent, g), P{1});
    auto h = gcd(f, b, g);
    const long dh = degree<PrimeField>(h);
    if (dh > 0 && dh < degree<PrimeField>(g)) {
      equal_degree_split(f, h, d, rng, out);
      equal_degree_split(f, divmod(f, g, h).first, d, rng, out);
      return;
    }
  }
}

void squarefree_factors(const PrimeField& f, P s, std::mt19937_64& rng,
                        std::vector<P>& out) {
  const mpz_class q = static_cast<unsigned long>(f.characteristic());
  const P x{0, 1};
  P h = x;
  for (std::size_t d = 1; 2 * d <= static_cast<std::size_t>(degree<PrimeField>(s));
       ++d) {
    h = powmod(f, h, q, s);
    auto g = gcd(f, sub(f, h, x), s);
    if (degree<PrimeField>(g) > 0) {
      equal_degree_split(f, g, d, rng, out);
      s = divmod(f, s, g).first;
      h = divmod(f, h, s).second;
    }
  }
  if (degree<PrimeField>(s) > 0) out.push_back(monic(f, s));
}

}  // namespace

std::vector<P> irreducible_factors(const PrimeField& f, P a,
                                   std::mt19937_64& rng) {
  trim(f, a);
  std::vector<P> out;
  if (degree<PrimeField>(a) <= 0) return out;
  a = monic(f, std::move(a));
  auto d = derivative(f, a);
  if (d.empty()) return irreducible_factors(f, pth_root(f, a), rng);
  auto w = gcd(f, a, d);
  auto squarefree = divmod(f, a, w).first;
  auto rest = strip_factors(f, std::move(w), squarefree);
  squarefree_factors(f, std::move(squarefree), rng, out);
  for (auto& p : irreducible_factors(f, std::move(rest), rng))
    out.push_back(std::move(p));
  return out;
}

P resultant_y(const PrimeField& f, const std::vector<P>& a,
              const std::vector<P>& b) {
  // Sylvester matrix over F_q[x], determinant by fraction-free elimination.
  const std::size_t m = a.size() - 1;  // deg_y a
  const std::size_t l = b.size() - 1;  // deg_y b
  const std::size_t size = m + l;
  if (size == 0) return P{1};
  std::vector<std::vector<P>> s(size, std::vector<P>(size));
  for (std::size_t r = 0; r < l; ++r)
    for (std::size_t i = 0; i <= m; ++i) s[r][r + i] = a[m - i];
  for (std::size_t r = 0; r < m; ++r)
    for (std::size_t i = 0; i <= l; ++i) s[l + r][r + i] = b[l - i];

  P prev{1};
  bool negate = false;
  for (std::size_t k = 0; k < size; ++k) {
    std::size_t p = k;
    while (p < size && s[p][k].empty()) ++p;
    if (p == size) return {};
    if (p != k) {
      std::swap(s[p], s[k]);
      negate = !negate;
    }
    for (std::size_t i = k + 1; i < size; ++i) {
      for (std::size_t j = k + 1; j < size; ++j) {
        auto num = sub(f, mul(f, s[k][k], s[i][j]), mul(f, s[i][k], s[k][j]));
        auto [quot, rem] = divmod(f, std::move(num), prev);
        if (!rem.empty()) throw std::logic_error("inexact Bareiss division");
        s[i][j] = std::move(quot);
      }
      s[i][k].clear();
    }
    prev = s[k][k];
  }
  P det = s[size - 1][size - 1];
  if (negate) det = sub(f, P{}, det);
  return det;
}

}  // namespace sparseprime::ff
