#include "torelli/homology.hpp"

#include <string>

#include "torelli/errors.hpp"
#include "torelli/surface.hpp"

namespace torelli {

namespace {

void check_x_index(int i, const SurfaceParams& params) {
  if (i < 1 || i > params.g) {
    throw index_error("crosscap index " + std::to_string(i) + " outside 1.." +
                      std::to_string(params.g));
  }
}

// tau_{ig}^n as a matrix: n applications of the (i, g) pair action,
// using the inverse pair (g, i) for negative exponents.
H1Matrix tau_power(int i, long long n, const SurfaceParams& params) {
  H1Matrix acc = H1Matrix::identity(h1_rank(params));
  if (n == 0) return acc;
  const H1Matrix step =
      n > 0 ? xij_matrix(i, params.g, params) : xij_matrix(params.g, i, params);
  for (long long t = 0; t < (n > 0 ? n : -n); ++t) {
    acc = compose(acc, step);
  }
  return acc;
}

}  // namespace

H1Matrix H1Matrix::identity(int n) {
  H1Matrix m;
  m.dim = n;
  m.a.assign(static_cast<std::size_t>(n) * n, 0);
  for (int t = 0; t < n; ++t) m.at(t, t) = 1;
  return m;
}

int h1_rank(const SurfaceParams& params) {
  params.validate();
  return params.g + params.b - 1;
}

std::vector<std::string> h1_basis_labels(const SurfaceParams& params) {
  params.validate();
  std::vector<std::string> labels;
  for (int i = 1; i <= params.g; ++i) labels.push_back("c" + std::to_string(i));
  for (int j = 1; j <= params.b - 1; ++j) {
    labels.push_back("d" + std::to_string(j));
  }
  return labels;
}

H1Vector db_class(const SurfaceParams& params) {
  params.validate();
  H1Vector v;
  v.coords.assign(h1_rank(params), 0);
  for (int i = 0; i < params.g; ++i) v.coords[i] = -2;
  for (int j = params.g; j < h1_rank(params); ++j) v.coords[j] = -1;
  return v;
}

H1Matrix xij_matrix(int i, int j, const SurfaceParams& params) {
  check_x_index(i, params);
  check_x_index(j, params);
  const int n = h1_rank(params);
  H1Matrix m = H1Matrix::identity(n);
  if (i == j) return m;
  const H1Vector db = db_class(params);
  // Column i-1 becomes c_i - d_b, column j-1 becomes c_j + d_b.
  for (int r = 0; r < n; ++r) {
    m.at(r, i - 1) -= db.coords[r];
    m.at(r, j - 1) += db.coords[r];
  }
  return m;
}

H1Matrix push_action(const Word& w, const SurfaceParams& params) {
  const Word proj = project_p(w, params);
  if (proj.size() % 2 != 0) {
    throw parity_error("projection has odd length; push action undefined");
  }
  H1Matrix acc = H1Matrix::identity(h1_rank(params));
  for (std::size_t t = 0; t + 1 < proj.letters.size(); t += 2) {
    acc = compose(acc, xij_matrix(proj.letters[t].gen.index,
                                  proj.letters[t + 1].gen.index, params));
  }
  return acc;
}

std::optional<std::vector<long long>> db_multiples(const H1Matrix& m,
                                                   const SurfaceParams& params) {
  const int n = h1_rank(params);
  if (m.dim != n) return std::nullopt;
  const H1Vector db = db_class(params);
  std::vector<long long> out(params.g, 0);
  for (int c = 0; c < params.g; ++c) {
    // Column c should equal e_c + m_c * db.  Read m_c off a d row when
    // one exists, otherwise off a foreign c row (coefficient -2).
    long long mc;
    if (params.b >= 2) {
      mc = -m.at(params.g, c);
    } else {
      const int r = c == 0 ? 1 : 0;
      const long long entry = m.at(r, c);
      if (entry % 2 != 0) return std::nullopt;
      mc = entry / -2;
    }
    for (int r = 0; r < n; ++r) {
      const long long expected = (r == c ? 1 : 0) + mc * db.coords[r];
      if (m.at(r, c) != expected) return std::nullopt;
    }
    out[c] = mc;
  }
  // d columns must be untouched.
  for (int c = params.g; c < n; ++c) {
    for (int r = 0; r < n; ++r) {
      if (m.at(r, c) != (r == c ? 1 : 0)) return std::nullopt;
    }
  }
  return out;
}

CorrectionTwists correction_twists(const std::vector<long long>& n,
                                   const SurfaceParams& params) {
  params.validate();
  if (static_cast<int>(n.size()) != params.g) {
    throw constraint_error("need one exponent per crosscap: got " +
                           std::to_string(n.size()) + ", want " +
                           std::to_string(params.g));
  }
  long long sum = 0;
  for (long long v : n) sum += v;
  if (sum != 0) {
    throw constraint_error("exponent sum must vanish, got " +
                           std::to_string(sum));
  }
  CorrectionTwists out;
  H1Matrix tau = H1Matrix::identity(h1_rank(params));
  for (int i = params.g - 1; i >= 1; --i) {
    if (n[i - 1] == 0) continue;
    out.twists.emplace_back(i, n[i - 1]);
    tau = compose(tau, tau_power(i, n[i - 1], params));
  }
  // The prescribed shift: c_i -> c_i + n_i d_b for every i.
  const H1Vector db = db_class(params);
  H1Matrix shift = H1Matrix::identity(h1_rank(params));
  for (int c = 0; c < params.g; ++c) {
    for (int r = 0; r < h1_rank(params); ++r) {
      shift.at(r, c) += n[c] * db.coords[r];
    }
  }
  out.composed = compose(tau, shift);
  return out;
}

H1Vector act(const H1Matrix& m, const H1Vector& v) {
  if (static_cast<int>(v.coords.size()) != m.dim) {
    throw constraint_error("vector length " + std::to_string(v.coords.size()) +
                           " does not match matrix dimension " +
                           std::to_string(m.dim));
  }
  H1Vector out;
  out.coords.assign(m.dim, 0);
  for (int r = 0; r < m.dim; ++r) {
    long long acc = 0;
    for (int c = 0; c < m.dim; ++c) acc += m.at(r, c) * v.coords[c];
    out.coords[r] = acc;
  }
  return out;
}

H1Matrix compose(const H1Matrix& lhs, const H1Matrix& rhs) {
  if (lhs.dim != rhs.dim) {
    throw constraint_error("matrix dimensions differ: " +
                           std::to_string(lhs.dim) + " vs " +
                           std::to_string(rhs.dim));
  }
  H1Matrix out;
  out.dim = lhs.dim;
  out.a.assign(static_cast<std::size_t>(lhs.dim) * lhs.dim, 0);
  for (int r = 0; r < lhs.dim; ++r) {
    for (int k = 0; k < lhs.dim; ++k) {
      const long long l = lhs.at(r, k);
      if (l == 0) continue;
      for (int c = 0; c < lhs.dim; ++c) {
        out.at(r, c) += l * rhs.at(k, c);
      }
    }
  }
  return out;
}

bool is_identity(const H1Matrix& m) {
  for (int r = 0; r < m.dim; ++r) {
    for (int c = 0; c < m.dim; ++c) {
      if (m.at(r, c) != (r == c ? 1 : 0)) return false;
    }
  }
  return true;
}

nlohmann::json matrix_to_json(const H1Matrix& m, const SurfaceParams& params) {
  nlohmann::json rows = nlohmann::json::array();
  for (int r = 0; r < m.dim; ++r) {
    nlohmann::json row = nlohmann::json::array();
    for (int c = 0; c < m.dim; ++c) row.push_back(m.at(r, c));
    rows.push_back(std::move(row));
  }
  return nlohmann::json{{"basis", h1_basis_labels(params)},
                        {"rows", std::move(rows)}};
}

}  // namespace torelli
