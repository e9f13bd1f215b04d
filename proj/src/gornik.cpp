#include "sl3web/gornik.hpp"

#include "sl3web/enumeration.hpp"
#include "sl3web/errors.hpp"

namespace sl3web {

EisensteinRational operator+(const EisensteinRational& x, const EisensteinRational& y) {
  return {x.re + y.re, x.jm + y.jm};
}

EisensteinRational operator-(const EisensteinRational& x, const EisensteinRational& y) {
  return {x.re - y.re, x.jm - y.jm};
}

EisensteinRational operator-(const EisensteinRational& x) { return {-x.re, -x.jm}; }

EisensteinRational operator*(const EisensteinRational& x, const EisensteinRational& y) {
  // (a + bj)(c + dj) = ac + (ad + bc) j + bd (-1 - j)
  return {x.re * y.re - x.jm * y.jm, x.re * y.jm + x.jm * y.re - x.jm * y.jm};
}

EisensteinRational eisenstein_conj(const EisensteinRational& x) {
  return {x.re - x.jm, -x.jm};
}

GornikElement GornikElement::x_power(int k) {
  GornikElement e;
  e.coeff[static_cast<size_t>(((k % 3) + 3) % 3)] = 1;
  return e;
}

GornikElement gornik_add(const GornikElement& x, const GornikElement& y) {
  GornikElement r;
  for (size_t k = 0; k < 3; ++k) r.coeff[k] = x.coeff[k] + y.coeff[k];
  return r;
}

GornikElement gornik_scale(const EisensteinRational& c, const GornikElement& x) {
  GornikElement r;
  for (size_t k = 0; k < 3; ++k) r.coeff[k] = c * x.coeff[k];
  return r;
}

GornikElement gornik_mul(const GornikElement& x, const GornikElement& y) {
  GornikElement r;
  for (size_t i = 0; i < 3; ++i)
    for (size_t j = 0; j < 3; ++j)
      r.coeff[(i + j) % 3] = r.coeff[(i + j) % 3] + x.coeff[i] * y.coeff[j];
  return r;
}

GornikIdempotents idempotents() {
  const Rational third(1, 3);
  const EisensteinRational t(third);
  const EisensteinRational j = EisensteinRational::j();
  const EisensteinRational j2 = EisensteinRational::j_squared();
  GornikIdempotents idem;
  idem.a.coeff = {t, t, t};
  idem.b.coeff = {t, t * j, t * j2};
  idem.c.coeff = {t, t * j2, t * j};
  return idem;
}

bool well_colored(const PreFoam& f, const std::vector<int>& facet_colors) {
  f.validate();
  if (facet_colors.size() != f.facets.size())
    throw ParseError("facet color list does not match the facet count");
  for (int c : facet_colors)
    if (c < -1 || c > 1) throw ParseError("facet color outside {-1,0,1}");
  for (const auto& circle : f.circles) {
    int c0 = facet_colors[static_cast<size_t>(circle[0].facet)];
    int c1 = facet_colors[static_cast<size_t>(circle[1].facet)];
    int c2 = facet_colors[static_cast<size_t>(circle[2].facet)];
    if (c0 == c1 || c1 == c2 || c0 == c2) return false;
  }
  return true;
}

Int BlockDecomposition::total() const {
  Int t = 0;
  for (const auto& [c, n] : counts) t += n;
  return t;
}

Int BlockDecomposition::sum_of_squares() const {
  Int t = 0;
  for (const auto& [c, n] : counts) t += n * n;
  return t;
}

BlockDecomposition block_counts(const SignSequence& epsilon) {
  WebBasis basis = enumerate_NE(epsilon);
  BlockDecomposition dec;
  dec.epsilon = epsilon;

  const size_t l = epsilon.size();
  BoundaryColoring key(l, -1);
  for (;;) {
    dec.counts.emplace(key, Int(0));
    size_t i = 0;
    while (i < l && key[i] == 1) key[i++] = -1;
    if (i == l) break;
    ++key[i];
  }

  for (const Web& w : basis.webs)
    for (const Coloring& col : enumerate_colorings(w))
      dec.counts[restrict_coloring(w, col)] += 1;
  return dec;
}

bool verify_block_identity(const SignSequence& epsilon) {
  BlockDecomposition dec = block_counts(epsilon);
  WebBasis basis = enumerate_NE(epsilon);
  Int closures = 0;
  for (const Web& w1 : basis.webs)
    for (const Web& w2 : basis.webs)
      closures += count_colorings(trace_close(w1, w2));
  return dec.sum_of_squares() == closures;
}

}  // namespace sl3web
