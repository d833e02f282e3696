#pragma once

// Arithmetic over F_q and its finite extensions F_q[x]/(p), plus univariate
// polynomials over either. Only what the torus root counter needs.

#include <cstddef>
#include <cstdint>
#include <random>
#include <utility>
#include <vector>

#include <gmpxx.h>

namespace sparseprime::ff {

class PrimeField {
 public:
  using Elem = std::uint64_t;

  explicit PrimeField(std::uint64_t q) : q_(q) {}

  std::uint64_t characteristic() const { return q_; }
  std::uint64_t order_exponent() const { return 1; }

  Elem zero() const { return 0; }
  Elem one() const { return 1; }
  Elem from_int(std::int64_t v) const {
    const auto m = static_cast<std::int64_t>(q_);
    return static_cast<Elem>(((v % m) + m) % m);
  }
  bool is_zero(Elem a) const { return a == 0; }
  bool equal(Elem a, Elem b) const { return a == b; }
  Elem add(Elem a, Elem b) const { return (a + b) % q_; }
  Elem sub(Elem a, Elem b) const { return (a + q_ - b) % q_; }
  Elem neg(Elem a) const { return a == 0 ? 0 : q_ - a; }
  Elem mul(Elem a, Elem b) const { return (a * b) % q_; }
  Elem pow(Elem a, std::uint64_t e) const {
    Elem r = 1;
    while (e) {
      if (e & 1) r = mul(r, a);
      a = mul(a, a);
      e >>= 1;
    }
    return r;
  }
  Elem inv(Elem a) const { return pow(a, q_ - 2); }
  // Inverse Frobenius; the identity on the prime field.
  Elem pth_root(Elem a) const { return a; }

 private:
  std::uint64_t q_;
};

template <class F>
using Poly = std::vector<typename F::Elem>;

template <class F>
void trim(const F& f, Poly<F>& p) {
  while (!p.empty() && f.is_zero(p.back())) p.pop_back();
}

template <class F>
long degree(const Poly<F>& p) {
  return static_cast<long>(p.size()) - 1;
}

template <class F>
Poly<F> add(const F& f, const Poly<F>& a, const Poly<F>& b) {
  Poly<F> out(std::max(a.size(), b.size()), f.zero());
  for (std::size_t i = 0; i < a.size(); ++i) out[i] = a[i];
  for (std::size_t i = 0; i < b.size(); ++i) out[i] = f.add(out[i], b[i]);
  trim(f, out);
  return out;
}

template <class F>
Poly<F> sub(const F& f, const Poly<F>& a, const Poly<F>& b) {
  Poly<F> out(std::max(a.size(), b.size()), f.zero());
  for (std::size_t i = 0; i < a.size(); ++i) out[i] = a[i];
  for (std::size_t i = 0; i < b.size(); ++i) out[i] = f.sub(out[i], b[i]);
  trim(f, out);
  return out;
}

template <class F>
Poly<F> mul(const F& f, const Poly<F>& a, const Poly<F>& b) {
  if (a.empty() || b.empty()) return {};
  Poly<F> out(a.size() + b.size() - 1, f.zero());
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (f.is_zero(a[i])) continue;
    for (std::size_t j = 0; j < b.size(); ++j)
      out[i + j] = f.add(out[i + j], f.mul(a[i], b[j]));
  }
  trim(f, out);
  return out;
}

// Quotient and remainder; b must be nonzero.
template <class F>
std::pair<Poly<F>, Poly<F>> divmod(const F& f, Poly<F> a, const Poly<F>& b) {
  if (a.size() < b.size()) return {{}, std::move(a)};
  const auto lead_inv = f.inv(b.back());
  Poly<F> q(a.size() - b.size() + 1, f.zero());
  for (std::size_t top = a.size(); top >= b.size(); --top) {
    const std::size_t i = top - 1;
    if (f.is_zero(a[i])) continue;
    const auto c = f.mul(a[i], lead_inv);
    const std::size_t shift = i - (b.size() - 1);
    q[shift] = c;
    for (std::size_t j = 0; j < b.size(); ++j)
      a[shift + j] = f.sub(a[shift + j], f.mul(c, b[j]));
  }
  trim(f, q);
  trim(f, a);
  return {std::move(q), std::move(a)};
}

template <class F>
Poly<F> monic(const F& f, Poly<F> a) {
  if (a.empty()) return a;
  const auto inv = f.inv(a.back());
  for (auto& c : a) c = f.mul(c, inv);
  return a;
}

// Monic gcd; gcd(0, 0) == 0.
template <class F>
Poly<F> gcd(const F& f, Poly<F> a, Poly<F> b) {
  while (!b.empty()) {
    auto r = divmod(f, std::move(a), b).second;
    a = std::move(b);
    b = std::move(r);
  }
  return monic(f, std::move(a));
}

template <class F>
Poly<F> derivative(const F& f, const Poly<F>& a) {
  if (a.size() <= 1) return {};
  Poly<F> out(a.size() - 1, f.zero());
  for (std::size_t i = 1; i < a.size(); ++i)
    out[i - 1] = f.mul(f.from_int(static_cast<std::int64_t>(
                           i % f.characteristic())),
                       a[i]);
  trim(f, out);
  return out;
}

template <class F>
Poly<F> powmod(const F& f, Poly<F> base, const mpz_class& exponent,
               const Poly<F>& modulus) {
  Poly<F> result{f.one()};
  result = divmod(f, std::move(result), modulus).second;
  base = divmod(f, std::move(base), modulus).second;
  const std::size_t bits = mpz_sizeinbase(exponent.get_mpz_t(), 2);
  for (std::size_t i = bits; i-- > 0;) {
    result = divmod(f, mul(f, result, result), modulus).second;
    if (mpz_tstbit(exponent.get_mpz_t(), i))
      result = divmod(f, mul(f, result, base), modulus).second;
  }
  return result;
}

// g(x) = h(x^p) -> h^(1/p)(x); requires a zero derivative.
template <class F>
Poly<F> pth_root(const F& f, const Poly<F>& a) {
  const std::uint64_t p = f.characteristic();
  Poly<F> out;
  for (std::size_t i = 0; i < a.size(); i += p) out.push_back(f.pth_root(a[i]));
  trim(f, out);
  return out;
}

// Remove from `rest` every irreducible factor that also divides `squarefree`.
template <class F>
Poly<F> strip_factors(const F& f, Poly<F> rest, const Poly<F>& squarefree) {
  while (true) {
    auto h = gcd(f, rest, squarefree);
    if (degree<F>(h) <= 0) return rest;
    rest = divmod(f, std::move(rest), h).first;
  }
}

// Number of distinct roots of a nonzero polynomial in the algebraic closure.
template <class F>
long radical_degree(const F& f, Poly<F> a) {
  trim(f, a);
  if (degree<F>(a) <= 0) return 0;
  a = monic(f, std::move(a));
  auto d = derivative(f, a);
  if (d.empty()) return radical_degree(f, pth_root(f, a));
  auto w = gcd(f, a, d);
  auto squarefree = divmod(f, a, w).first;
  // What is left has only factors of multiplicity divisible by p.
  auto rest = strip_factors(f, std::move(w), squarefree);
  return degree<F>(squarefree) + radical_degree(f, std::move(rest));
}

// F_q[x]/(modulus) for an irreducible monic modulus.
class ExtensionField {
 public:
  using Elem = Poly<PrimeField>;

  ExtensionField(PrimeField base, Poly<PrimeField> modulus)
      : base_(base), modulus_(std::move(modulus)) {}

  std::uint64_t characteristic() const { return base_.characteristic(); }
  const PrimeField& base() const { return base_; }
  std::size_t degree_over_base() const { return modulus_.size() - 1; }

  Elem zero() const { return {}; }
  Elem one() const { return reduce({1}); }
  Elem from_int(std::int64_t v) const { return reduce({base_.from_int(v)}); }
  bool is_zero(const Elem& a) const { return a.empty(); }
  bool equal(const Elem& a, const Elem& b) const { return a == b; }
  Elem add(const Elem& a, const Elem& b) const {
    return ff::add(base_, a, b);
  }
  Elem sub(const Elem& a, const Elem& b) const {
    return ff::sub(base_, a, b);
  }
  Elem neg(const Elem& a) const { return ff::sub(base_, Elem{}, a); }
  Elem mul(const Elem& a, const Elem& b) const {
    return reduce(ff::mul(base_, a, b));
  }
  Elem reduce(Elem a) const {
    trim(base_, a);
    return divmod(base_, std::move(a), modulus_).second;
  }
  Elem inv(const Elem& a) const;
  Elem pow(const Elem& a, const mpz_class& e) const {
    return powmod(base_, a, e, modulus_);
  }
  // a^(q^(d-1)) inverts the Frobenius on F_{q^d}.
  Elem pth_root(const Elem& a) const;

 private:
  PrimeField base_;
  Poly<PrimeField> modulus_;
};

// Distinct monic irreducible factors of a nonzero polynomial over F_q
// (q odd). Deterministic for a given generator state.
std::vector<Poly<PrimeField>> irreducible_factors(const PrimeField& f,
                                                  Poly<PrimeField> a,
                                                  std::mt19937_64& rng);

// Res_y(a, b) for a, b in F_q[x][y], given as coefficient lists in y.
Poly<PrimeField> resultant_y(const PrimeField& f,
                             const std::vector<Poly<PrimeField>>& a,
                             const std::vector<Poly<PrimeField>>& b);

}  // namespace sparseprime::ff
