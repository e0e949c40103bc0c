#include "plocal/sym.hpp"

#include <algorithm>
#include <sstream>

namespace plocal {

std::string gen_name(int g) {
  switch (g) {
    case kY: return "Y";
    case kS: return "S";
    case kE: return "E";
    case kU: return "U";
    default: return "X" + std::to_string(g - kX1 + 1);
  }
}

bool Mono::is_one() const {
  for (auto v : e)
    if (v != 0) return false;
  return true;
}

std::string Mono::str() const {
  std::ostringstream os;
  bool first = true;
  for (int g = 0; g < kNumGens; ++g) {
    if (e[g] == 0) continue;
    if (!first) os << "*";
    first = false;
    os << gen_name(g);
    if (e[g] != 1) os << "^" << e[g];
  }
  return first ? "1" : os.str();
}

bool term_less(const Term& a, const Term& b) {
  if (a.mono != b.mono) return a.mono < b.mono;
  return a.coef.repr_less(b.coef);
}

bool term_equal(const Term& a, const Term& b) { return a.mono == b.mono && a.coef == b.coef; }

long combine_prime(long a, long b) {
  if (a == 0) return b;
  if (b == 0 || a == b) return a;
  throw std::invalid_argument("symbolic values over different primes");
}

namespace {

void norm_y(Mono& m, CycNum& c, long p) {
  int e = m.e[kY];
  if (e == 0 || e == 1) return;
  if (p == 0) throw std::logic_error("Y^2 = p reduction needs a prime");
  int q = (e >= 0) ? e / 2 : -((-e + 1) / 2);
  m.e[kY] = static_cast<int16_t>(e - 2 * q);
  c *= CycNum(qpow(mpq_class(p), q));
}

Mono mono_mul(const Mono& a, const Mono& b) {
  Mono r;
  for (int g = 0; g < kNumGens; ++g) r.e[g] = static_cast<int16_t>(a.e[g] + b.e[g]);
  return r;
}

Mono mono_div(const Mono& a, const Mono& b) {
  Mono r;
  for (int g = 0; g < kNumGens; ++g) r.e[g] = static_cast<int16_t>(a.e[g] - b.e[g]);
  return r;
}

void add_term(Poly& p, const Mono& m, const CycNum& c) {
  if (c.is_zero()) return;
  auto it = p.find(m);
  if (it == p.end()) {
    p.emplace(m, c);
  } else {
    it->second += c;
    if (it->second.is_zero()) p.erase(it);
  }
}

Term term_mul(const Term& a, const Term& b, long p) {
  Term t{a.coef * b.coef, mono_mul(a.mono, b.mono)};
  norm_y(t.mono, t.coef, p);
  return t;
}

Term term_inv(const Term& a, long p) {
  Term t{a.coef.inverse(), mono_div(Mono{}, a.mono)};
  norm_y(t.mono, t.coef, p);
  return t;
}

Poly one_minus(const Term& t) {
  Poly r;
  add_term(r, Mono{}, CycNum(1));
  add_term(r, t.mono, -t.coef);
  return r;
}

Poly poly_add(Poly a, const Poly& b) {
  for (const auto& [m, c] : b) add_term(a, m, c);
  return a;
}

Poly poly_scale(const Poly& a, const Term& t, long p) {
  Poly r;
  for (const auto& [m, c] : a) {
    Term u = term_mul(Term{c, m}, t, p);
    add_term(r, u.mono, u.coef);
  }
  return r;
}

Poly den_product(const std::vector<Term>& den, long p) {
  Poly r;
  add_term(r, Mono{}, CycNum(1));
  for (const auto& t : den) r = poly_mul(r, one_minus(t), p);
  return r;
}

// multiset difference a \ b, both sorted
std::vector<Term> den_minus(const std::vector<Term>& a, const std::vector<Term>& b) {
  std::vector<Term> r;
  std::vector<bool> used(b.size(), false);
  for (const auto& t : a) {
    bool hit = false;
    for (size_t j = 0; j < b.size(); ++j) {
      if (!used[j] && term_equal(t, b[j])) {
        used[j] = true;
        hit = true;
        break;
      }
    }
    if (!hit) r.push_back(t);
  }
  return r;
}

Poly conj_y(const Poly& a) {
  Poly r;
  for (const auto& [m, c] : a) r.emplace(m, m.e[kY] ? -c : c);
  return r;
}

bool has_odd_y(const Poly& a) {
  for (const auto& kv : a)
    if (kv.first.e[kY]) return true;
  return false;
}

Poly divide_y_free(const Poly& a, const Poly& b) {
  // b has no Y; Y in a is a passive tag
  std::array<int, kNumGens> alo, ahi, blo, bhi;
  alo.fill(1 << 20);
  ahi.fill(-(1 << 20));
  blo = alo;
  bhi = ahi;
  for (const auto& kv : a)
    for (int g = 0; g < kNumGens; ++g) {
      alo[g] = std::min<int>(alo[g], kv.first.e[g]);
      ahi[g] = std::max<int>(ahi[g], kv.first.e[g]);
    }
  for (const auto& kv : b)
    for (int g = 0; g < kNumGens; ++g) {
      blo[g] = std::min<int>(blo[g], kv.first.e[g]);
      bhi[g] = std::max<int>(bhi[g], kv.first.e[g]);
    }
  const Mono lb = b.rbegin()->first;
  const CycNum lbinv = b.rbegin()->second.inverse();
  Poly q, r = a;
  while (!r.empty()) {
    Mono tm = mono_div(r.rbegin()->first, lb);
    for (int g = 0; g < kNumGens; ++g) {
      if (g == kY) continue;
      if (tm.e[g] < alo[g] - blo[g] || tm.e[g] > ahi[g] - bhi[g])
        throw NotDivisible("polynomial not divisible");
    }
    Term t{r.rbegin()->second * lbinv, tm};
    add_term(q, t.mono, t.coef);
    for (const auto& [m, c] : b) add_term(r, mono_mul(m, t.mono), -(c * t.coef));
  }
  return q;
}

}  // namespace

Poly poly_mul(const Poly& a, const Poly& b, long p) {
  Poly r;
  for (const auto& [ma, ca] : a)
    for (const auto& [mb, cb] : b) {
      Term t = term_mul(Term{ca, ma}, Term{cb, mb}, p);
      add_term(r, t.mono, t.coef);
    }
  return r;
}

Poly poly_divide_exact(const Poly& a, const Poly& b, long p) {
  if (b.empty()) throw DivisionByZero("division by zero polynomial");
  if (a.empty()) return {};
  if (has_odd_y(b)) {
    Poly bc = conj_y(b);
    return poly_divide_exact(poly_mul(a, bc, p), poly_mul(b, bc, p), p);
  }
  return divide_y_free(a, b);
}

SymElem::SymElem(long v) : SymElem(CycNum(v)) {}
SymElem::SymElem(const mpq_class& v) : SymElem(CycNum(v)) {}
SymElem::SymElem(const CycNum& v) {
  if (!v.is_zero()) num_.emplace(Mono{}, v);
}

SymElem SymElem::gen(Gen g, long p) {
  Mono m;
  m.e[g] = 1;
  return term(CycNum(1), m, p);
}

SymElem SymElem::term(const CycNum& c, const Mono& m, long p) {
  SymElem r;
  r.p_ = p;
  Term t{c, m};
  norm_y(t.mono, t.coef, p);
  if (!t.coef.is_zero()) r.num_.emplace(t.mono, t.coef);
  return r;
}

SymElem SymElem::p_half_power(long p, long k) {
  Mono m;
  m.e[kY] = static_cast<int16_t>(k);
  return term(CycNum(1), m, p);
}

SymElem SymElem::with_prime(long p) const {
  SymElem r = *this;
  r.p_ = combine_prime(p_, p);
  return r;
}

Term SymElem::single_term() const {
  if (!is_single_term()) throw std::domain_error("not a single term: " + str());
  return Term{num_.begin()->second, num_.begin()->first};
}

void SymElem::add_den_factor(Term t) {
  norm_y(t.mono, t.coef, p_);
  if (t.coef.is_zero()) return;
  if (t.mono.is_one()) {
    CycNum d = CycNum(1) - t.coef;
    if (d.is_zero()) throw DivisionByZero("constant denominator factor vanishes");
    CycNum inv = d.inverse();
    for (auto& kv : num_) kv.second *= inv;
    return;
  }
  Mono yonly;
  yonly.e[kY] = 1;
  if (t.mono == yonly) {
    if (p_ == 0) throw std::logic_error("Y^2 = p reduction needs a prime");
    // 1/(1 - cY) = (1 + cY)/(1 - c^2 p)
    Poly f;
    add_term(f, Mono{}, CycNum(1));
    add_term(f, yonly, t.coef);
    num_ = poly_mul(num_, f, p_);
    CycNum d = CycNum(1) - t.coef * t.coef * CycNum(mpq_class(p_));
    if (d.is_zero()) throw DivisionByZero("denominator factor vanishes");
    CycNum inv = d.inverse();
    for (auto& kv : num_) kv.second *= inv;
    return;
  }
  den_.push_back(std::move(t));
  std::sort(den_.begin(), den_.end(), term_less);
}

void SymElem::normalize() {
  for (auto it = num_.begin(); it != num_.end();) {
    if (it->second.is_zero())
      it = num_.erase(it);
    else
      ++it;
  }
  if (num_.empty()) den_.clear();
}

bool SymElem::is_unit_monomial() const {
  SymElem s = simplified();
  return s.den_.empty() && s.num_.size() == 1;
}

SymElem SymElem::simplified() const {
  SymElem r = *this;
  bool changed = true;
  while (changed && !r.den_.empty()) {
    changed = false;
    for (size_t k = 0; k < r.den_.size(); ++k) {
      try {
        Poly q = poly_divide_exact(r.num_, one_minus(r.den_[k]), r.p_);
        r.num_ = std::move(q);
        r.den_.erase(r.den_.begin() + static_cast<long>(k));
        changed = true;
        break;
      } catch (const NotDivisible&) {
      }
    }
  }
  r.normalize();
  return r;
}

SymElem SymElem::operator-() const {
  SymElem r = *this;
  for (auto& kv : r.num_) kv.second = -kv.second;
  return r;
}

SymElem& SymElem::operator+=(const SymElem& o) {
  p_ = combine_prime(p_, o.p_);
  if (o.is_zero()) return *this;
  if (is_zero()) {
    long p = p_;
    *this = o;
    p_ = p;
    return *this;
  }
  std::vector<Term> a_extra = den_minus(o.den_, den_);  // L \ A
  std::vector<Term> b_extra = den_minus(den_, o.den_);  // L \ B
  Poly n1 = poly_mul(num_, den_product(a_extra, p_), p_);
  Poly n2 = poly_mul(o.num_, den_product(b_extra, p_), p_);
  num_ = poly_add(std::move(n1), n2);
  for (auto& t : a_extra) den_.push_back(t);
  std::sort(den_.begin(), den_.end(), term_less);
  normalize();
  return *this;
}

SymElem& SymElem::operator-=(const SymElem& o) { return *this += -o; }

SymElem& SymElem::operator*=(const SymElem& o) {
  p_ = combine_prime(p_, o.p_);
  num_ = poly_mul(num_, o.num_, p_);
  if (num_.empty()) {
    den_.clear();
    return *this;
  }
  for (const auto& t : o.den_) den_.push_back(t);
  std::sort(den_.begin(), den_.end(), term_less);
  return *this;
}

SymElem SymElem::inverse() const {
  if (is_zero()) throw DivisionByZero("inverse of zero");
  SymElem r;
  r.p_ = p_;
  Poly dp = den_product(den_, p_);
  if (num_.size() == 1) {
    Term t = term_inv(Term{num_.begin()->second, num_.begin()->first}, p_);
    r.num_ = poly_scale(dp, t, p_);
    return r;
  }
  if (num_.size() == 2) {
    Term a{num_.rbegin()->second, num_.rbegin()->first};
    Term b{num_.begin()->second, num_.begin()->first};
    Term ainv = term_inv(a, p_);
    Term ratio = term_mul(b, ainv, p_);
    ratio.coef = -ratio.coef;
    r.num_ = poly_scale(dp, ainv, p_);
    r.add_den_factor(ratio);
    r.normalize();
    return r;
  }
  throw NotDivisible("inverse of a polynomial with more than two terms");
}

SymElem& SymElem::operator/=(const SymElem& o) {
  SymElem b = o.simplified();
  if (b.is_zero()) throw DivisionByZero("division by zero");
  if (b.num_.size() <= 2) return *this *= b.inverse();
  long p = combine_prime(p_, b.p_);
  Poly top = poly_mul(num_, den_product(b.den_, p), p);
  num_ = poly_divide_exact(top, b.num_, p);
  p_ = p;
  normalize();
  return *this;
}

SymElem SymElem::pow(long k) const {
  if (k < 0) return inverse().pow(-k);
  SymElem r(1), b = *this;
  r.p_ = p_;
  while (k) {
    if (k & 1) r *= b;
    k >>= 1;
    if (k) b *= b;
  }
  return r;
}

bool operator==(const SymElem& a, const SymElem& b) {
  long p = combine_prime(a.p_, b.p_);
  std::vector<Term> a_extra = den_minus(b.den_, a.den_);
  std::vector<Term> b_extra = den_minus(a.den_, b.den_);
  Poly n1 = poly_mul(a.num_, den_product(a_extra, p), p);
  Poly n2 = poly_mul(b.num_, den_product(b_extra, p), p);
  if (n1.size() != n2.size()) return false;
  for (auto i = n1.begin(), j = n2.begin(); i != n1.end(); ++i, ++j)
    if (i->first != j->first || !(i->second == j->second)) return false;
  return true;
}

std::string SymElem::str() const {
  std::ostringstream os;
  if (num_.empty()) return "0";
  bool first = true;
  os << "(";
  for (const auto& [m, c] : num_) {
    if (!first) os << " + ";
    first = false;
    if (m.is_one()) {
      os << c.str();
    } else if (c == CycNum(1)) {
      os << m.str();
    } else {
      os << c.str() << "*" << m.str();
    }
  }
  os << ")";
  for (const auto& t : den_) {
    os << "/(1 - ";
    if (t.coef == CycNum(1))
      os << t.mono.str();
    else
      os << t.coef.str() << "*" << t.mono.str();
    os << ")";
  }
  return os.str();
}

SymElem sym_eval(const SymElem& e, const std::map<int, SymElem>& subst) {
  long p = e.p_;
  for (const auto& kv : subst) p = combine_prime(p, kv.second.prime());
  auto eval_term = [&](const Term& t) {
    SymElem v(t.coef);
    v.p_ = p;
    Mono rest;
    for (int g = 0; g < kNumGens; ++g) {
      if (t.mono.e[g] == 0) continue;
      auto it = subst.find(g);
      if (it == subst.end()) {
        rest.e[g] = t.mono.e[g];
      } else {
        v *= it->second.pow(t.mono.e[g]);
      }
    }
    v *= SymElem::term(CycNum(1), rest, p);
    return v;
  };
  SymElem out;
  out.p_ = p;
  for (const auto& [m, c] : e.num_) out += eval_term(Term{c, m});
  for (const auto& t : e.den_) {
    SymElem tv = eval_term(t).simplified();
    if (tv.is_zero()) continue;
    if (!tv.is_single_term())
      throw std::domain_error("denominator factor (1 - " + t.mono.str() +
                              ") is not monomial after substitution");
    Term u = tv.single_term();
    if (u.mono.is_one() && u.coef == CycNum(1))
      throw DivisionByZero("denominator factor (1 - " + t.mono.str() +
                           ") vanishes under substitution");
    out.add_den_factor(u);
  }
  out.normalize();
  return out;
}

SymElem geometric_tail(const SymElem& first, const SymElem& ratio) {
  SymElem r = ratio.simplified();
  if (r == SymElem(1)) throw std::domain_error("divergent formal series: ratio is 1");
  if (r.is_single_term()) {
    SymElem out = first;
    out.p_ = combine_prime(out.p_, r.p_);
    out.add_den_factor(r.single_term());
    out.normalize();
    return out;
  }
  return first / (SymElem(1) - r);
}

}  // namespace plocal
