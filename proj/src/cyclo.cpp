#include "plocal/cyclo.hpp"

#include <map>
#include <memory>
#include <mutex>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace plocal {

long gcd_l(long a, long b) { return std::gcd(a, b); }
long lcm_l(long a, long b) { return std::lcm(a, b); }

long euler_phi(long m) {
  long r = m;
  for (long q = 2; q * q <= m; ++q) {
    if (m % q == 0) {
      while (m % q == 0) m /= q;
      r -= r / q;
    }
  }
  if (m > 1) r -= r / m;
  return r;
}

long ipow(long b, int e) {
  long r = 1;
  for (int i = 0; i < e; ++i) r *= b;
  return r;
}

mpq_class qpow(const mpq_class& b, long e) {
  mpz_class num, den;
  unsigned long k = e < 0 ? -e : e;
  mpz_pow_ui(num.get_mpz_t(), b.get_num_mpz_t(), k);
  mpz_pow_ui(den.get_mpz_t(), b.get_den_mpz_t(), k);
  mpq_class r(e < 0 ? den : num, e < 0 ? num : den);
  r.canonicalize();
  return r;
}

namespace {

struct Tables {
  std::vector<long> phi_poly;
  std::vector<std::vector<long>> pow;  // zeta^a reduced, a in [0, M)
};

std::mutex g_mu;
std::map<long, std::shared_ptr<const Tables>> g_tables;

std::vector<long> poly_divexact(std::vector<long> a, const std::vector<long>& b) {
  // b monic
  std::vector<long> q(a.size() - b.size() + 1, 0);
  for (long i = static_cast<long>(a.size()) - 1; i >= static_cast<long>(b.size()) - 1; --i) {
    long c = a[i];
    long sh = i - (static_cast<long>(b.size()) - 1);
    q[sh] = c;
    for (size_t j = 0; j < b.size(); ++j) a[sh + j] -= c * b[j];
  }
  return q;
}

std::shared_ptr<const Tables> build(long m) {
  auto t = std::make_shared<Tables>();
  std::vector<long> num(m + 1, 0);
  num[0] = -1;
  num[m] = 1;
  for (long d = 1; d < m; ++d) {
    if (m % d == 0) {
      std::vector<long> phd = cyclotomic_poly(d);
      num = poly_divexact(num, phd);
    }
  }
  t->phi_poly = num;
  long phi = static_cast<long>(num.size()) - 1;
  t->pow.resize(m);
  std::vector<long> cur(phi, 0);
  cur[0] = 1;
  if (phi == 0) cur = {1};
  for (long a = 0; a < m; ++a) {
    t->pow[a] = cur;
    if (m == 1) break;
    std::vector<long> nxt(phi, 0);
    long top = cur[phi - 1];
    for (long i = phi - 1; i >= 1; --i) nxt[i] = cur[i - 1];
    for (long i = 0; i < phi; ++i) nxt[i] -= top * num[i];
    cur = nxt;
  }
  return t;
}

std::shared_ptr<const Tables> tables(long m) {
  {
    std::lock_guard<std::mutex> lk(g_mu);
    auto it = g_tables.find(m);
    if (it != g_tables.end()) return it->second;
  }
  auto t = build(m);
  std::lock_guard<std::mutex> lk(g_mu);
  return g_tables.emplace(m, t).first->second;
}

long mod(long a, long m) {
  long r = a % m;
  return r < 0 ? r + m : r;
}

}  // namespace

const std::vector<long>& cyclotomic_poly(long m) {
  if (m == 1) {
    static const std::vector<long> one{-1, 1};
    return one;
  }
  return tables(m)->phi_poly;
}

CycNum::CycNum() : c_{0} {}
CycNum::CycNum(long v) : c_{mpq_class(v)} {}
CycNum::CycNum(const mpq_class& v) : c_{v} { c_[0].canonicalize(); }

CycNum CycNum::root(long order, long exponent) {
  if (order <= 0) throw std::invalid_argument("root order must be positive");
  std::vector<mpq_class> counts(order, 0);
  counts[mod(exponent, order)] = 1;
  return from_counts(order, counts);
}

CycNum CycNum::from_counts(long order, const std::vector<mpq_class>& counts) {
  CycNum r;
  if (order == 1) {
    r.c_ = {counts.at(0)};
    return r;
  }
  auto t = tables(order);
  long phi = static_cast<long>(t->phi_poly.size()) - 1;
  r.m_ = order;
  r.c_.assign(phi, 0);
  for (long a = 0; a < order; ++a) {
    if (sgn(counts[a]) == 0) continue;
    const auto& pw = t->pow[a];
    for (long i = 0; i < phi; ++i)
      if (pw[i] != 0) r.c_[i] += counts[a] * pw[i];
  }
  r.canonicalize();
  return r;
}

void CycNum::canonicalize() {
  for (size_t i = 1; i < c_.size(); ++i)
    if (sgn(c_[i]) != 0) return;
  c_.resize(1);
  m_ = 1;
}

bool CycNum::is_zero() const { return m_ == 1 && sgn(c_[0]) == 0; }
bool CycNum::is_rational() const { return m_ == 1; }

mpq_class CycNum::rational() const {
  if (m_ != 1) throw std::domain_error("cyclotomic number is not rational");
  return c_[0];
}

CycNum CycNum::lifted(long order) const {
  if (order == m_) return *this;
  if (order % m_ != 0) throw std::invalid_argument("lift to non-multiple order");
  long step = order / m_;
  std::vector<mpq_class> counts(order, 0);
  for (size_t k = 0; k < c_.size(); ++k) counts[k * step] = c_[k];
  CycNum r = from_counts(order, counts);
  if (r.m_ == 1) return r;
  return r;
}

CycNum CycNum::conj() const {
  if (m_ == 1) return *this;
  std::vector<mpq_class> counts(m_, 0);
  for (size_t k = 0; k < c_.size(); ++k) counts[mod(-static_cast<long>(k), m_)] = c_[k];
  return from_counts(m_, counts);
}

CycNum CycNum::operator-() const {
  CycNum r = *this;
  for (auto& x : r.c_) x = -x;
  return r;
}

CycNum& CycNum::operator+=(const CycNum& o) {
  if (o.m_ == 1) {
    c_[0] += o.c_[0];
    return *this;
  }
  long l = lcm_l(m_, o.m_);
  CycNum a = lifted(l);
  CycNum b = o.lifted(l);
  if (a.m_ != l) a.c_.resize(euler_phi(l), 0), a.m_ = l;
  for (size_t i = 0; i < b.c_.size(); ++i) a.c_[i] += b.c_[i];
  a.canonicalize();
  *this = std::move(a);
  return *this;
}

CycNum& CycNum::operator-=(const CycNum& o) { return *this += -o; }

CycNum& CycNum::operator*=(const CycNum& o) {
  if (o.m_ == 1) {
    for (auto& x : c_) x *= o.c_[0];
    canonicalize();
    return *this;
  }
  if (m_ == 1) {
    mpq_class s = c_[0];
    *this = o;
    for (auto& x : c_) x *= s;
    canonicalize();
    return *this;
  }
  long l = lcm_l(m_, o.m_);
  CycNum a = lifted(l);
  CycNum b = o.lifted(l);
  std::vector<mpq_class> counts(l, 0);
  for (size_t i = 0; i < a.c_.size(); ++i) {
    if (sgn(a.c_[i]) == 0) continue;
    for (size_t j = 0; j < b.c_.size(); ++j) {
      if (sgn(b.c_[j]) == 0) continue;
      counts[(i + j) % l] += a.c_[i] * b.c_[j];
    }
  }
  *this = from_counts(l, counts);
  return *this;
}

bool operator==(const CycNum& a, const CycNum& b) {
  if (a.m_ == b.m_) return a.c_ == b.c_;
  long l = lcm_l(a.m_, b.m_);
  CycNum x = a.lifted(l), y = b.lifted(l);
  if (x.m_ != y.m_) return false;
  return x.c_ == y.c_;
}

bool CycNum::repr_less(const CycNum& o) const {
  if (m_ != o.m_) return m_ < o.m_;
  for (size_t i = 0; i < c_.size(); ++i)
    if (c_[i] != o.c_[i]) return c_[i] < o.c_[i];
  return false;
}

CycNum CycNum::inverse() const {
  if (is_zero()) throw std::domain_error("inverse of zero");
  if (m_ == 1) return CycNum(mpq_class(1) / c_[0]);
  // solve (multiplication by *this) x = 1 over Q
  long n = static_cast<long>(c_.size());
  std::vector<std::vector<mpq_class>> a(n, std::vector<mpq_class>(n + 1, 0));
  for (long k = 0; k < n; ++k) {
    CycNum col = *this * root(m_, k);
    CycNum lc = col.lifted(m_);
    for (long i = 0; i < n; ++i) a[i][k] = lc.c_.size() == static_cast<size_t>(n) ? lc.c_[i] : (i == 0 ? lc.c_[0] : 0);
  }
  a[0][n] = 1;
  for (long c = 0; c < n; ++c) {
    long piv = c;
    while (piv < n && sgn(a[piv][c]) == 0) ++piv;
    if (piv == n) throw std::domain_error("singular cyclotomic inverse");
    std::swap(a[piv], a[c]);
    for (long r = 0; r < n; ++r) {
      if (r == c || sgn(a[r][c]) == 0) continue;
      mpq_class f = a[r][c] / a[c][c];
      for (long k = c; k <= n; ++k) a[r][k] -= f * a[c][k];
    }
  }
  std::vector<mpq_class> counts(m_, 0);
  for (long k = 0; k < n; ++k) counts[k] = a[k][n] / a[k][k];
  return from_counts(m_, counts);
}

std::string CycNum::str() const {
  if (m_ == 1) return c_[0].get_str();
  std::ostringstream os;
  os << "[";
  bool first = true;
  for (size_t k = 0; k < c_.size(); ++k) {
    if (sgn(c_[k]) == 0) continue;
    if (!first) os << " + ";
    first = false;
    os << c_[k].get_str();
    if (k > 0) os << "*z" << m_ << "^" << k;
  }
  os << "]";
  return os.str();
}

}  // namespace plocal
