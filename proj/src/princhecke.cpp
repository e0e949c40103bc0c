#include "plocal/princhecke.hpp"

#include <stdexcept>

namespace plocal {

SymElem PSVector::coeff(const Perm& w) const {
  auto it = coeffs.find(w);
  return it == coeffs.end() ? SymElem(0) : it->second;
}

PSVector operator+(const PSVector& a, const PSVector& b) {
  PSVector r = a;
  for (const auto& [w, c] : b.coeffs) {
    SymElem v = r.coeff(w) + c;
    if (v.is_zero())
      r.coeffs.erase(w);
    else
      r.coeffs[w] = v;
  }
  return r;
}

PSVector PSVector::scaled(const SymElem& s) const {
  PSVector r = *this;
  r.coeffs.clear();
  for (const auto& [w, c] : coeffs) {
    SymElem v = c * s;
    if (!v.is_zero()) r.coeffs[w] = v;
  }
  return r;
}

bool PSVector::operator==(const PSVector& o) const {
  for (const auto& [w, c] : coeffs)
    if (!(o.coeff(w) == c)) return false;
  for (const auto& [w, c] : o.coeffs)
    if (!(coeff(w) == c)) return false;
  return true;
}

PSVector ps_basis(const Satake& s, const Perm& sigma, const Perm& w) {
  PSVector f{s, sigma, {}};
  f.coeffs[w] = SymElem(1).with_prime(s.p);
  return f;
}

PSVector ps_fsigma(const Satake& s, const Perm& sigma) {
  return ps_basis(s, sigma, perm_longest(2 * s.n));
}

SymElem torus_character(const Satake& s, const Perm& sigma, const std::vector<long>& vals) {
  SymElem v = delta_b_half(vals, s.p);
  for (size_t i = 0; i < vals.size(); ++i)
    if (vals[i] != 0) v *= s.theta[sigma[i]].pow(vals[i]);
  return v;
}

SymElem ps_evaluate(const PSVector& f, const Mat& g) {
  BruhatCell c = bruhat_cell(g, f.satake.p);
  auto it = f.coeffs.find(c.w);
  if (it == f.coeffs.end()) return SymElem(0);
  return it->second * torus_character(f.satake, f.sigma, c.torus_val);
}

Mat t_pr(int size, int r, long p) {
  std::vector<mpq_class> d(size, 1);
  for (int i = 0; i < r; ++i) d[i] = p;
  return Mat::diag(d);
}

namespace {

// (U_{p,r} f)(rho)
SymElem weyl_point_value(const PSVector& f, const Perm& rho, int r) {
  int m = 2 * f.satake.n;
  long p = f.satake.p;
  int cols = m - r, cells = r * cols;
  long count = ipow(p, cells);
  Mat g = Mat::perm(rho);
  Mat t = t_pr(m, r, p);
  std::map<std::pair<Perm, std::vector<long>>, long> hist;
  for (long code = 0; code < count; ++code) {
    Mat u = Mat::identity(m);
    long c = code;
    for (int k = 0; k < cells; ++k) {
      u(k / cols, r + k % cols) = c % p;
      c /= p;
    }
    BruhatCell cell = bruhat_cell(g * u * t, p);
    if (!f.coeffs.count(cell.w)) continue;
    ++hist[{cell.w, cell.torus_val}];
  }
  SymElem v = SymElem(0).with_prime(p);
  for (const auto& [key, cnt] : hist)
    v += f.coeff(key.first) * torus_character(f.satake, f.sigma, key.second) * SymElem(cnt);
  return v;
}

PSVector assemble(const PSVector& f, const std::vector<Perm>& pts, const std::vector<SymElem>& vals) {
  PSVector out{f.satake, f.sigma, {}};
  for (size_t k = 0; k < pts.size(); ++k)
    if (!vals[k].is_zero()) out.coeffs[pts[k]] = vals[k];
  return out;
}

void check_r(const PSVector& f, int r) {
  if (r < 1 || r >= 2 * f.satake.n) throw std::invalid_argument("U_{p,r} needs 1 <= r <= 2n-1");
}

}  // namespace

PSVector hecke_apply(const PSVector& f, int r) {
  check_r(f, r);
  std::vector<Perm> pts = all_perms(2 * f.satake.n);
  std::vector<SymElem> vals(pts.size());
  long npts = static_cast<long>(pts.size());
#pragma omp parallel for schedule(dynamic)
  for (long k = 0; k < npts; ++k) vals[k] = weyl_point_value(f, pts[k], r);
  return assemble(f, pts, vals);
}

PSVector hecke_apply_serial(const PSVector& f, int r) {
  check_r(f, r);
  std::vector<Perm> pts = all_perms(2 * f.satake.n);
  std::vector<SymElem> vals(pts.size());
  for (size_t k = 0; k < pts.size(); ++k) vals[k] = weyl_point_value(f, pts[k], r);
  return assemble(f, pts, vals);
}

}  // namespace plocal
