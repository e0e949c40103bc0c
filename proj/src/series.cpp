#include "plocal/series.hpp"

#include <map>
#include <sstream>
#include <stdexcept>

#include "plocal/padic.hpp"

namespace plocal {

namespace {

mpz_class zpow(long p, long k) {
  mpz_class r;
  mpz_ui_pow_ui(r.get_mpz_t(), p, k);
  return r;
}

mpz_class mod_pos(const mpz_class& a, const mpz_class& m) {
  mpz_class r;
  mpz_fdiv_r(r.get_mpz_t(), a.get_mpz_t(), m.get_mpz_t());
  return r;
}

void enumerate(int k, int budget, std::vector<int>& cur, std::vector<std::vector<int>>& out) {
  if (static_cast<int>(cur.size()) == k) {
    out.push_back(cur);
    return;
  }
  for (int e = 0; e <= budget; ++e) {
    cur.push_back(e);
    enumerate(k, budget - e, cur, out);
    cur.pop_back();
  }
}

}  // namespace

std::shared_ptr<const SeriesCtx> SeriesCtx::make(long p, int precision, int degree, int nvars) {
  if (p < 2 || precision < 1 || degree < 1 || nvars < 0) throw std::invalid_argument("bad series precision");
  std::shared_ptr<SeriesCtx> c(new SeriesCtx());
  c->p_ = p;
  c->m_ = precision;
  c->d_ = degree;
  c->k_ = nvars;
  c->mod_ = zpow(p, precision);
  std::vector<int> cur;
  enumerate(nvars, degree - 1, cur, c->monos_);
  size_t s = c->monos_.size();
  std::map<std::vector<int>, long> idx;
  for (size_t i = 0; i < s; ++i) idx[c->monos_[i]] = static_cast<long>(i);
  c->mul_.assign(s * s, -1);
  for (size_t a = 0; a < s; ++a)
    for (size_t b = 0; b < s; ++b) {
      std::vector<int> e(nvars);
      int tot = 0;
      for (int v = 0; v < nvars; ++v) tot += e[v] = c->monos_[a][v] + c->monos_[b][v];
      if (tot < degree) c->mul_[a * s + b] = idx.at(e);
    }
  return c;
}

long SeriesCtx::index_of(const std::vector<int>& e) const {
  for (size_t i = 0; i < monos_.size(); ++i)
    if (monos_[i] == e) return static_cast<long>(i);
  return -1;
}

Series::Series(SeriesCtxPtr ctx) : ctx_(std::move(ctx)), c_(ctx_->size(), 0) {}

Series Series::constant(SeriesCtxPtr ctx, const mpz_class& c) {
  Series s(std::move(ctx));
  s.c_[0] = c;
  s.reduce();
  return s;
}

Series Series::constant(SeriesCtxPtr ctx, const mpq_class& c) {
  long p = ctx->prime();
  if (!is_integral(c, p)) throw std::domain_error("series constant is not p-integral");
  int m = ctx->precision();
  return constant(std::move(ctx), residue(c, p, m));
}

Series Series::variable(SeriesCtxPtr ctx, int v) {
  Series s(ctx);
  std::vector<int> e(ctx->nvars(), 0);
  e.at(v) = 1;
  long i = ctx->index_of(e);
  if (i >= 0) s.c_[i] = 1;
  s.reduce();
  return s;
}

Series Series::binomial_power(SeriesCtxPtr ctx, int v, const mpz_class& e) {
  Series s(ctx);
  mpz_class rep = mod_pos(e, zpow(ctx->prime(), ctx->log_precision()));
  std::vector<int> mono(ctx->nvars(), 0);
  for (int m = 0; m < ctx->degree(); ++m) {
    mono.at(v) = m;
    long i = ctx->index_of(mono);
    if (i < 0) break;
    mpz_bin_ui(s.c_[i].get_mpz_t(), rep.get_mpz_t(), m);
  }
  s.reduce();
  return s;
}

mpz_class Series::coeff(const std::vector<int>& e) const {
  long i = ctx_->index_of(e);
  return i < 0 ? mpz_class(0) : c_[i];
}

void Series::reduce() {
  for (auto& x : c_) x = mod_pos(x, ctx_->modulus());
}

Series& Series::operator+=(const Series& o) {
  for (size_t i = 0; i < c_.size(); ++i) c_[i] += o.c_[i];
  reduce();
  return *this;
}

Series& Series::operator-=(const Series& o) {
  for (size_t i = 0; i < c_.size(); ++i) c_[i] -= o.c_[i];
  reduce();
  return *this;
}

Series& Series::operator*=(const Series& o) {
  size_t s = c_.size();
  std::vector<mpz_class> r(s, 0);
  for (size_t a = 0; a < s; ++a) {
    if (c_[a] == 0) continue;
    for (size_t b = 0; b < s; ++b) {
      if (o.c_[b] == 0) continue;
      long i = ctx_->mul_index(a, b);
      if (i >= 0) r[i] += c_[a] * o.c_[b];
    }
  }
  c_ = std::move(r);
  reduce();
  return *this;
}

Series& Series::operator*=(const mpz_class& s) {
  for (auto& x : c_) x *= s;
  reduce();
  return *this;
}

bool Series::operator==(const Series& o) const { return ctx_->size() == o.ctx_->size() && c_ == o.c_; }

bool Series::is_zero() const {
  for (const auto& x : c_)
    if (x != 0) return false;
  return true;
}

mpz_class Series::evaluate(const std::vector<mpz_class>& t) const {
  if (static_cast<int>(t.size()) != ctx_->nvars()) throw std::invalid_argument("wrong number of series variables");
  const mpz_class& mod = ctx_->modulus();
  mpz_class acc = 0;
  for (size_t i = 0; i < c_.size(); ++i) {
    if (c_[i] == 0) continue;
    mpz_class term = c_[i];
    const auto& e = ctx_->mono(i);
    for (int v = 0; v < ctx_->nvars(); ++v) {
      mpz_class pw;
      mpz_powm_ui(pw.get_mpz_t(), mod_pos(t[v], mod).get_mpz_t(), e[v], mod.get_mpz_t());
      term = term * pw % mod;
    }
    acc += term;
  }
  return mod_pos(acc, mod);
}

std::string Series::str() const {
  std::ostringstream os;
  bool first = true;
  for (size_t i = 0; i < c_.size(); ++i) {
    if (c_[i] == 0) continue;
    if (!first) os << " + ";
    first = false;
    os << c_[i];
    const auto& e = ctx_->mono(i);
    for (size_t v = 0; v < e.size(); ++v)
      if (e[v]) os << "*T" << v << (e[v] > 1 ? "^" + std::to_string(e[v]) : "");
  }
  if (first) os << "0";
  os << " mod " << ctx_->prime() << "^" << ctx_->precision();
  return os.str();
}

mpz_class unit_residue(const mpq_class& x, long p, long k) {
  if (sgn(x) == 0 || vp(x, p) != 0) throw std::domain_error("not a p-adic unit");
  return residue(x, p, k);
}

mpz_class teichmuller(const mpq_class& x, long p, long k) {
  mpz_class mod = zpow(p, k);
  mpz_class r = unit_residue(x, p, k);
  if (p == 2) return mod_pos(r % 4 == 1 ? mpz_class(1) : mpz_class(-1), mod);
  mpz_class e = zpow(p, k), out;
  mpz_powm(out.get_mpz_t(), r.get_mpz_t(), e.get_mpz_t(), mod.get_mpz_t());
  return out;
}

long one_unit_generator(long p) { return p == 2 ? 5 : 1 + p; }

mpz_class one_unit_log(const mpq_class& x, long p, long k) {
  long e = p == 2 ? 2 : 1;
  mpz_class mod = zpow(p, k + e);
  mpz_class w = teichmuller(x, p, k + e), winv;
  mpz_invert(winv.get_mpz_t(), w.get_mpz_t(), mod.get_mpz_t());
  mpz_class y = unit_residue(x, p, k + e) * winv % mod;
  mpz_class g = one_unit_generator(p), ginv;
  mpz_invert(ginv.get_mpz_t(), g.get_mpz_t(), mod.get_mpz_t());
  mpz_class l = 0, pi = 1;
  // gamma^{p^i} = 1 + p^{i+e} mod p^{i+e+1}, so digits peel off one at a time
  for (long i = 0; i < k; ++i) {
    mpz_class gl;
    mpz_powm(gl.get_mpz_t(), ginv.get_mpz_t(), l.get_mpz_t(), mod.get_mpz_t());
    mpz_class z = mod_pos(y * gl - 1, mod);
    mpz_class q = z / zpow(p, i + e);
    mpz_class d = q % p;
    l += d * pi;
    pi *= p;
  }
  return l;
}

}  // namespace plocal
