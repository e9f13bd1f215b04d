#include "sl3web/homdim.hpp"

#include "sl3web/errors.hpp"
#include "sl3web/skein.hpp"

#include <utility>

namespace sl3web {

LaurentPoly graded_homdim(const Web& w1, const Web& w2) {
  if (w1.boundary != w2.boundary)
    throw ParseError("graded hom dimension needs webs over the same boundary");
  return bracket(trace_close(w1, w2))
      .shifted_q(static_cast<int>(w1.boundary.size()));
}

GramMatrix gram_matrix(const SignSequence& epsilon) {
  GramMatrix g;
  g.epsilon = epsilon;
  g.basis = enumerate_NE(epsilon);
  const size_t n = g.basis.webs.size();
  g.entries.assign(n, std::vector<Int>(n, 0));
  for (size_t i = 0; i < n; ++i)
    for (size_t j = i; j < n; ++j) {
      Int value =
          eval_at_one(bracket(trace_close(g.basis.webs[i], g.basis.webs[j])));
      g.entries[i][j] = value;
      g.entries[j][i] = value;
    }
  return g;
}

Int integer_determinant(std::vector<std::vector<Int>> m) {
  const size_t n = m.size();
  for (const auto& row : m)
    if (row.size() != n) throw ParseError("determinant of a non-square matrix");
  if (n == 0) return 1;

  int sign = 1;
  Int prev = 1;
  for (size_t k = 0; k + 1 < n; ++k) {
    if (m[k][k] == 0) {
      size_t pivot = k + 1;
      while (pivot < n && m[pivot][k] == 0) ++pivot;
      if (pivot == n) return 0;
      std::swap(m[k], m[pivot]);
      sign = -sign;
    }
    for (size_t i = k + 1; i < n; ++i) {
      for (size_t j = k + 1; j < n; ++j)
        m[i][j] = (m[i][j] * m[k][k] - m[i][k] * m[k][j]) / prev;
      m[i][k] = 0;
    }
    prev = m[k][k];
  }
  return sign * m[n - 1][n - 1];
}

Int gram_determinant(const SignSequence& epsilon) {
  GramMatrix g = gram_matrix(epsilon);
  Int det = integer_determinant(g.entries);
  if (det == 0)
    throw CheckError("Gram pairing degenerate over " + render_signs(epsilon));
  return det;
}

Int k0_rank(const SignSequence& epsilon) {
  return Int(enumerate_NE(epsilon).webs.size());
}

}  // namespace sl3web
