#include "mg/zlin.hpp"

#include <algorithm>
#include <stdexcept>

namespace mg {

namespace {

Int floor_div(const Int& a, const Int& b) {
  Int q = a / b;
  if (a % b != 0 && ((a < 0) != (b < 0))) --q;
  return q;
}

bool is_zero_row(const ZRow& r) {
  return std::all_of(r.begin(), r.end(), [](const Int& x) { return x == 0; });
}

}  // namespace

ZMat identity_mat(std::size_t n) {
  ZMat m(n, ZRow(n, 0));
  for (std::size_t i = 0; i < n; ++i) m[i][i] = 1;
  return m;
}

ZMat mat_mul(const ZMat& a, const ZMat& b) {
  if (a.empty()) return {};
  const std::size_t n = a.size(), k = a[0].size(), p = b.empty() ? 0 : b[0].size();
  if (k != b.size()) throw std::invalid_argument("mat_mul: shape mismatch");
  ZMat c(n, ZRow(p, 0));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < k; ++j)
      if (a[i][j] != 0)
        for (std::size_t l = 0; l < p; ++l) c[i][l] += a[i][j] * b[j][l];
  return c;
}

ZRow row_mat_mul(const ZRow& x, const ZMat& m) {
  if (x.size() != m.size()) throw std::invalid_argument("row_mat_mul: shape mismatch");
  const std::size_t p = m.empty() ? 0 : m[0].size();
  ZRow out(p, 0);
  for (std::size_t j = 0; j < x.size(); ++j)
    if (x[j] != 0)
      for (std::size_t l = 0; l < p; ++l) out[l] += x[j] * m[j][l];
  return out;
}

ZMat hnf_rows(ZMat a) {
  a.erase(std::remove_if(a.begin(), a.end(), is_zero_row), a.end());
  if (a.empty()) return a;
  const std::size_t cols = a[0].size();
  std::size_t r = 0;
  for (std::size_t c = 0; c < cols && r < a.size(); ++c) {
    // gcd out column c below r
    while (true) {
      std::size_t best = a.size();
      for (std::size_t i = r; i < a.size(); ++i)
        if (a[i][c] != 0 && (best == a.size() || abs(a[i][c]) < abs(a[best][c]))) best = i;
      if (best == a.size()) break;
      std::swap(a[r], a[best]);
      bool clean = true;
      for (std::size_t i = r + 1; i < a.size(); ++i) {
        if (a[i][c] == 0) continue;
        Int q = floor_div(a[i][c], a[r][c]);
        for (std::size_t l = 0; l < cols; ++l) a[i][l] -= q * a[r][l];
        if (a[i][c] != 0) clean = false;
      }
      if (clean) break;
    }
    if (a[r][c] == 0) continue;
    if (a[r][c] < 0)
      for (std::size_t l = 0; l < cols; ++l) a[r][l] = -a[r][l];
    for (std::size_t i = 0; i < r; ++i) {
      Int q = floor_div(a[i][c], a[r][c]);
      if (q != 0)
        for (std::size_t l = 0; l < cols; ++l) a[i][l] -= q * a[r][l];
    }
    ++r;
  }
  a.resize(r);
  return a;
}

ZRow reduce_by_hnf(const ZMat& h, ZRow x) {
  for (const auto& row : h) {
    std::size_t c = 0;
    while (c < row.size() && row[c] == 0) ++c;
    if (c == row.size()) continue;
    Int q = floor_div(x[c], row[c]);
    if (q != 0)
      for (std::size_t l = 0; l < x.size(); ++l) x[l] -= q * row[l];
  }
  return x;
}

bool in_row_lattice(const ZMat& h, const ZRow& x) { return is_zero_row(reduce_by_hnf(h, x)); }

std::size_t mat_rank(const ZMat& a) { return hnf_rows(a).size(); }

std::vector<Int> Smith::diagonal() const {
  std::vector<Int> out;
  for (std::size_t i = 0; i < d.size() && i < (d.empty() ? 0 : d[0].size()); ++i) out.push_back(d[i][i]);
  return out;
}

Smith smith_normal_form(const ZMat& a) {
  const std::size_t m = a.size();
  const std::size_t n = m ? a[0].size() : 0;
  Smith s;
  s.d = a;
  s.u = identity_mat(m);
  s.v = identity_mat(n);
  s.vinv = identity_mat(n);

  auto row_add = [&](std::size_t i, std::size_t j, const Int& q) {  // row_i += q*row_j
    for (std::size_t l = 0; l < n; ++l) s.d[i][l] += q * s.d[j][l];
    for (std::size_t l = 0; l < m; ++l) s.u[i][l] += q * s.u[j][l];
  };
  auto col_add = [&](std::size_t i, std::size_t j, const Int& q) {  // col_i += q*col_j
    for (std::size_t l = 0; l < m; ++l) s.d[l][i] += q * s.d[l][j];
    for (std::size_t l = 0; l < n; ++l) s.v[l][i] += q * s.v[l][j];
    for (std::size_t l = 0; l < n; ++l) s.vinv[j][l] -= q * s.vinv[i][l];
  };
  auto row_swap = [&](std::size_t i, std::size_t j) {
    std::swap(s.d[i], s.d[j]);
    std::swap(s.u[i], s.u[j]);
  };
  auto col_swap = [&](std::size_t i, std::size_t j) {
    for (std::size_t l = 0; l < m; ++l) std::swap(s.d[l][i], s.d[l][j]);
    for (std::size_t l = 0; l < n; ++l) std::swap(s.v[l][i], s.v[l][j]);
    std::swap(s.vinv[i], s.vinv[j]);
  };
  auto row_neg = [&](std::size_t i) {
    for (std::size_t l = 0; l < n; ++l) s.d[i][l] = -s.d[i][l];
    for (std::size_t l = 0; l < m; ++l) s.u[i][l] = -s.u[i][l];
  };

  const std::size_t rmax = std::min(m, n);
  for (std::size_t t = 0; t < rmax; ++t) {
    while (true) {
      // locate a minimal nonzero entry in the trailing block
      std::size_t pi = m, pj = n;
      for (std::size_t i = t; i < m; ++i)
        for (std::size_t j = t; j < n; ++j)
          if (s.d[i][j] != 0 && (pi == m || abs(s.d[i][j]) < abs(s.d[pi][pj]))) {
            pi = i;
            pj = j;
          }
      if (pi == m) goto done;  // trailing block is zero
      if (pi != t) row_swap(t, pi);
      if (pj != t) col_swap(t, pj);

      bool dirty = false;
      for (std::size_t i = t + 1; i < m; ++i)
        if (s.d[i][t] != 0) {
          row_add(i, t, -floor_div(s.d[i][t], s.d[t][t]));
          if (s.d[i][t] != 0) dirty = true;
        }
      for (std::size_t j = t + 1; j < n; ++j)
        if (s.d[t][j] != 0) {
          col_add(j, t, -floor_div(s.d[t][j], s.d[t][t]));
          if (s.d[t][j] != 0) dirty = true;
        }
      if (dirty) continue;

      // pivot must divide the rest of the block
      bool divides = true;
      for (std::size_t i = t + 1; i < m && divides; ++i)
        for (std::size_t j = t + 1; j < n && divides; ++j)
          if (s.d[i][j] % s.d[t][t] != 0) {
            row_add(t, i, 1);
            divides = false;
          }
      if (divides) break;
    }
    if (s.d[t][t] < 0) row_neg(t);
  }
done:
  return s;
}

std::optional<ZRow> solve_row_system(const ZMat& m, const ZRow& x) {
  if (m.empty()) {
    for (const Int& v : x)
      if (v != 0) return std::nullopt;
    return ZRow{};
  }
  if (x.size() != m[0].size()) throw std::invalid_argument("solve_row_system: shape mismatch");
  Smith s = smith_normal_form(m);
  // y*m = x  <=>  z*d = x*v with y = z*u
  ZRow xv = row_mat_mul(x, s.v);
  const std::size_t k = m.size(), n = m[0].size();
  ZRow z(k, 0);
  for (std::size_t j = 0; j < n; ++j) {
    Int dj = (j < k) ? s.d[j][j] : Int(0);
    if (dj == 0) {
      if (xv[j] != 0) return std::nullopt;
    } else {
      if (xv[j] % dj != 0) return std::nullopt;
      z[j] = xv[j] / dj;
    }
  }
  return row_mat_mul(z, s.u);
}

ZMat left_kernel_rows(const ZMat& m) {
  if (m.empty()) return {};
  Smith s = smith_normal_form(m);
  const std::size_t k = m.size(), n = m[0].size();
  ZMat out;
  for (std::size_t i = 0; i < k; ++i) {
    Int di = (i < n) ? s.d[i][i] : Int(0);
    if (di == 0) out.push_back(s.u[i]);
  }
  return out;
}

ZMat saturation_rows(const ZMat& a, std::size_t n) {
  if (a.empty()) return {};
  Smith s = smith_normal_form(a);
  std::size_t r = 0;
  for (std::size_t i = 0; i < std::min(a.size(), n); ++i)
    if (s.d[i][i] != 0) ++r;
  // row lattice of a = span of d_i * (row i of v^-1); drop the factors d_i.
  ZMat out;
  for (std::size_t i = 0; i < r; ++i) out.push_back(s.vinv[i]);
  return hnf_rows(out);
}

}  // namespace mg
