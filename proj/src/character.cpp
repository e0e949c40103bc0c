#include "plocal/character.hpp"

#include <stdexcept>

#include "plocal/padic.hpp"

namespace plocal {

namespace {

long mod_pos(long a, long m) { return ((a % m) + m) % m; }

long mul_mod(long a, long b, long m) { return static_cast<long>((static_cast<__int128>(a) * b) % m); }

long primitive_root(long p, int b) {
  long phi = euler_phi(ipow(p, b));
  long mod = ipow(p, b);
  for (long g = 2; g < mod; ++g) {
    if (g % p == 0) continue;
    long x = 1, ord = 0;
    do {
      x = mul_mod(x, g, mod);
      ++ord;
    } while (x != 1);
    if (ord == phi) return g;
  }
  throw std::logic_error("no primitive root");
}

}  // namespace

TwistCharacter TwistCharacter::trivial(long p) { return TwistCharacter(p, 0, {CycNum(1)}); }

TwistCharacter::TwistCharacter(long p, int conductor_exp, std::vector<CycNum> values)
    : p_(p), b_(conductor_exp), mod_(ipow(p, conductor_exp)), vals_(std::move(values)) {
  if (static_cast<long>(vals_.size()) != mod_) throw std::invalid_argument("character table has wrong size");
}

CycNum TwistCharacter::operator()(long c) const {
  if (c % p_ == 0) throw std::domain_error("character evaluated at a non-unit");
  return vals_[mod_pos(c, mod_)];
}

CycNum TwistCharacter::at(const mpq_class& x) const {
  if (x == 0) throw std::domain_error("character evaluated at 0");
  long v = vp(x, p_);
  mpq_class u = x / qpow(mpq_class(p_), v);
  return vals_[residue(u, p_, b_).get_si()];
}

TwistCharacter TwistCharacter::conj() const {
  std::vector<CycNum> v;
  v.reserve(vals_.size());
  for (const auto& x : vals_) v.push_back(x.conj());
  return TwistCharacter(p_, b_, std::move(v));
}

bool TwistCharacter::operator==(const TwistCharacter& o) const {
  return p_ == o.p_ && b_ == o.b_ && vals_ == o.vals_;
}

std::vector<TwistCharacter> primitive_characters(long p, int b) {
  if (b < 1) throw std::invalid_argument("conductor exponent must be positive");
  long mod = ipow(p, b);
  long phi = euler_phi(mod);
  std::vector<TwistCharacter> out;
  if (p != 2) {
    long g = primitive_root(p, b);
    std::vector<long> dlog(mod, -1);
    long x = 1;
    for (long k = 0; k < phi; ++k) {
      dlog[x] = k;
      x = mul_mod(x, g, mod);
    }
    for (long a = 1; a < phi; ++a) {
      // primitive iff nontrivial on 1 + p^{b-1}, generated by g^{phi/p}
      if (b == 1 ? a == 0 : a % p == 0) continue;
      std::vector<CycNum> v(mod);
      for (long c = 0; c < mod; ++c)
        if (dlog[c] >= 0) v[c] = CycNum::root(phi, a * dlog[c]);
      out.emplace_back(p, b, std::move(v));
    }
    return out;
  }
  if (b == 1) return out;
  // (Z/2^b)^x = {+-1} x <5>, with 5 of order 2^{b-2}
  long h = phi / 2;
  std::vector<long> dlog(mod, -1), sgn(mod, 0);
  long x = 1;
  for (long k = 0; k < h; ++k) {
    dlog[x] = k;
    sgn[x] = 0;
    dlog[mod - x] = k;
    sgn[mod - x] = 1;
    x = mul_mod(x, 5, mod);
  }
  for (int eps = 0; eps < 2; ++eps)
    for (long a = 0; a < h; ++a) {
      bool prim = b == 2 ? eps == 1 : a % 2 == 1;
      if (!prim) continue;
      std::vector<CycNum> v(mod);
      for (long c = 1; c < mod; c += 2)
        v[c] = CycNum::root(phi, eps * sgn[c] * h + 2 * a * dlog[c]);
      out.emplace_back(p, b, std::move(v));
    }
  return out;
}

CycNum gauss_sum(const TwistCharacter& chi) {
  if (chi.conductor_exp() < 1) throw std::domain_error("gauss sum of an unramified character");
  long mod = chi.modulus();
  CycNum s;
  for (long c = 1; c < mod; ++c)
    if (c % chi.prime() != 0) s += chi(c) * CycNum::root(mod, c);
  return s;
}

CycNum additive_char_average(long p, int b, long m) {
  long mod = ipow(p, b);
  std::vector<mpq_class> counts(mod, 0);
  for (long u = 0; u < mod; ++u) counts[mul_mod(mod_pos(m, mod), u, mod)] += mpq_class(1, mod);
  return CycNum::from_counts(mod, counts);
}

}  // namespace plocal
