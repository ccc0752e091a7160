#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <optional>
#include <vector>

namespace mg {

using Int = boost::multiprecision::cpp_int;
using ZRow = std::vector<Int>;
using ZMat = std::vector<ZRow>;  // row-major

ZMat identity_mat(std::size_t n);
ZMat mat_mul(const ZMat& a, const ZMat& b);
ZRow row_mat_mul(const ZRow& x, const ZMat& m);

// Row-style Hermite normal form of the row lattice of a. Returns only the
// nonzero rows, pivots positive, entries above each pivot reduced into
// [0, pivot).
ZMat hnf_rows(ZMat a);

// Canonical representative of x modulo the row span of h (h in HNF).
ZRow reduce_by_hnf(const ZMat& h, ZRow x);

bool in_row_lattice(const ZMat& h, const ZRow& x);

std::size_t mat_rank(const ZMat& a);

// u * a * v = d with u, v unimodular and d diagonal with the divisibility
// chain d1 | d2 | ... (nonnegative). vinv is v^-1.
struct Smith {
  ZMat d, u, v, vinv;
  std::vector<Int> diagonal() const;
};
Smith smith_normal_form(const ZMat& a);

// Integer solution y of y * m = x, if one exists.
std::optional<ZRow> solve_row_system(const ZMat& m, const ZRow& x);

// Basis of { y : y * m = 0 }.
ZMat left_kernel_rows(const ZMat& m);

// Basis of the saturation of the row lattice of a in Z^n: all integer vectors
// some positive multiple of which lies in the lattice.
ZMat saturation_rows(const ZMat& a, std::size_t n);

}  // namespace mg
