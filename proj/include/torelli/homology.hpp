#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "json.hpp"
#include "torelli/params.hpp"
#include "torelli/word.hpp"

namespace torelli {

// Exact integer action on H_1(N_{g,b}; Z) = Z^{g+b-1} in the basis
// c_1..c_g, d_1..d_{b-1}.  The omitted boundary class d_b satisfies
// 2(c_1+..+c_g) + (d_1+..+d_b) = 0 and is expanded through db_class
// wherever it appears.

struct H1Vector {
  std::vector<long long> coords;

  friend bool operator==(const H1Vector&, const H1Vector&) = default;
};

// Column-as-image convention: entry (r, c) is the coefficient of basis
// vector r in the image of basis vector c.
struct H1Matrix {
  int dim = 0;
  std::vector<long long> a;  // row-major, dim * dim entries

  long long& at(int r, int c) { return a[static_cast<std::size_t>(r) * dim + c]; }
  long long at(int r, int c) const {
    return a[static_cast<std::size_t>(r) * dim + c];
  }

  static H1Matrix identity(int n);

  friend bool operator==(const H1Matrix&, const H1Matrix&) = default;
};

int h1_rank(const SurfaceParams& params);

// "c1".."cg", "d1".."d<b-1>".
std::vector<std::string> h1_basis_labels(const SurfaceParams& params);

// The class of the omitted boundary d_b: coefficient -2 on every c_i
// and -1 on every d_j.
H1Vector db_class(const SurfaceParams& params);

// Action of the paired twist for (i, j), i != j: c_i drops d_b, c_j
// gains d_b, everything else fixed.  xij_matrix(j, i) is the exact
// inverse of xij_matrix(i, j); equal indices give the identity.
H1Matrix xij_matrix(int i, int j, const SurfaceParams& params);

// Pairs off the reduced projection x_{i1} x_{i2} ... x_{i_{2l}} (signs
// ignored) and multiplies x_{i1 i2} x_{i3 i4} ... left to right.
// Raises parity_error on odd projections.
H1Matrix push_action(const Word& w, const SurfaceParams& params);

// If m maps every c_i to c_i + m_i * d_b and fixes the d_j, returns
// the multiples m_1..m_g; otherwise nullopt.
std::optional<std::vector<long long>> db_multiples(const H1Matrix& m,
                                                   const SurfaceParams& params);

// The twist exponents (i, n_i), i = g-1 down to 1 with zero entries
// skipped, whose composition cancels the prescribed d_b-shifts n_1..n_g
// (sum zero required; constraint_error otherwise).  composed is the
// product of the twist action with the prescribed shift matrix and
// must be the identity.
struct CorrectionTwists {
  std::vector<std::pair<int, long long>> twists;
  H1Matrix composed;
};

CorrectionTwists correction_twists(const std::vector<long long>& n,
                                   const SurfaceParams& params);

H1Vector act(const H1Matrix& m, const H1Vector& v);

// compose(a, b) applies b first: the matrix product a * b.
H1Matrix compose(const H1Matrix& lhs, const H1Matrix& rhs);

bool is_identity(const H1Matrix& m);

// {"basis": [labels], "rows": [[..], ..]} row-major.
nlohmann::json matrix_to_json(const H1Matrix& m, const SurfaceParams& params);

}  // namespace torelli
