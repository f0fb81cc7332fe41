#include "qslice/structure.hpp"

#include <algorithm>

namespace qslice {

namespace {

QElement basis_element(std::size_t n, std::size_t c) {
  auto [i, j] = coord_unit(n, c);
  return QElement::unit(n, coord_is_odd(n, c) ? Parity::Odd : Parity::Even, i, j);
}

std::vector<std::size_t> coords_of_degree(const Grading& g, int deg, std::optional<bool> odd) {
  std::vector<std::size_t> out;
  for (std::size_t c = 0; c < coord_dim(g.n()); ++c) {
    if (g.degree_of_coord(c) != deg) continue;
    if (odd && coord_is_odd(g.n(), c) != *odd) continue;
    out.push_back(c);
  }
  return out;
}

}  // namespace

SuperDim sudim(const Subspace& s) {
  SuperDim out;
  const std::size_t n2 = s.ambient_dim() / 2;
  for (std::size_t r = 0; r < s.dim(); ++r) {
    const auto& row = s.basis().row(r);
    bool odd = row.begin()->first >= n2;
    for (const auto& [c, v] : row) {
      (void)v;
      if ((c >= n2) != odd) throw QsliceError("sudim: basis row mixes parities");
    }
    (odd ? out.odd : out.even) += 1;
  }
  return out;
}

SparseMat ad_matrix(const QElement& x) {
  const std::size_t n = x.n(), d = coord_dim(n);
  SparseMat m(d, d);
  for (std::size_t c = 0; c < d; ++c) {
    QElement br = bracket(x, basis_element(n, c));
    std::vector<Rat> coords = br.coords();
    for (std::size_t r = 0; r < d; ++r)
      if (coords[r] != 0) m.set(r, c, coords[r]);
  }
  return m;
}

Subspace centralizer(const QElement& x) {
  if (!x.is_homogeneous()) throw QsliceError("centralizer: element must be Z2-homogeneous");
  return kernel(ad_matrix(x));
}

Subspace centralizer_of_functional(const LinearFunctional& chi) {
  const std::size_t n = chi.n(), d = coord_dim(n);
  SparseMat m(d, d);
  for (std::size_t k = 0; k < d; ++k) {
    QElement bk = basis_element(n, k);
    for (std::size_t c = 0; c < d; ++c) {
      Rat v = chi(bracket(basis_element(n, c), bk));
      if (v != 0) m.set(k, c, v);
    }
  }
  return kernel(m);
}

std::vector<QElement> anticommutant_basis(const QElement& e, const Pyramid& p) {
  const std::size_t n = p.n_boxes();
  if (!(e == nilpotent_from_pyramid(p)))
    throw QsliceError("anticommutant_basis: e must be the pyramid nilpotent");
  const auto& parts = p.shape().parts;
  const int rows = p.n_rows();
  std::vector<QElement> out;
  for (int j = 0; j < rows; ++j) {
    for (int i = 0; i < rows; ++i) {
      const int pj = parts[j], pi_ = parts[i];
      for (int k = std::max(0, pj - pi_); k < pj; ++k) {
        // z(e^m v_{t_i}) = (-1)^m e^{m+k} v_{t_j}
        QElement z(n);
        for (int m = 0; m < pi_ && m + k < pj; ++m) {
          int src = p.label_at(i, pi_ - 1 - m);
          int dst = p.label_at(j, pj - 1 - m - k);
          z = z + QElement::unit(n, Parity::Even, dst, src).scaled(Rat(m % 2 ? -1 : 1));
        }
        out.push_back(z);
      }
    }
  }
  return out;
}

GoodnessReport check_good(const Grading& grading, const LinearFunctional& chi) {
  const std::size_t n = grading.n(), d = coord_dim(n);
  int deg_identity = 0;
  if (!grading.is_homogeneous(QElement::identity(n), deg_identity) || deg_identity != 0)
    throw CenterNotDegreeZero("check_good: the center must sit in degree 0");

  GoodnessReport rep;

  rep.gg1 = true;
  for (std::size_t c = 0; c < d; ++c)
    if (chi.value_on_coord(c) != 0 && grading.degree_of_coord(c) != -2) rep.gg1 = false;

  QElement big_e = element_from_functional(chi);
  int deg_e = 0;
  rep.gg1_prime = grading.is_homogeneous(big_e, deg_e) && (big_e.is_zero() || deg_e == 2);

  auto nonneg = [&](const Subspace& s) {
    for (std::size_t r = 0; r < s.dim(); ++r)
      for (const auto& [c, v] : s.basis().row(r)) {
        (void)v;
        if (grading.degree_of_coord(c) < 0) return false;
      }
    return true;
  };
  rep.gg2 = nonneg(centralizer_of_functional(chi));
  rep.gg2_prime = big_e.is_zero() ? nonneg(Subspace::full(d)) : nonneg(centralizer(big_e));

  rep.gg3 = true;
  for (std::size_t a = 0; a < d; ++a)
    for (std::size_t b = 0; b < d; ++b)
      if (odd_form(basis_element(n, a), basis_element(n, b)) != 0 &&
          grading.degree_of_coord(a) + grading.degree_of_coord(b) != 0)
        rep.gg3 = false;

  // restriction to gl(N): e in degree 2 and gl-centralizer of e non-negative
  QElement e = pi(big_e);
  bool e_in_deg2 = grading.is_homogeneous(e, deg_e) && (e.is_zero() || deg_e == 2);
  const std::size_t n2 = n * n;
  SparseMat ad_e_gl(n2, n2);
  for (std::size_t c = 0; c < n2; ++c) {
    QElement b = basis_element(n, c);
    SparseMat comm = e.s() * b.s() - b.s() * e.s();
    for (std::size_t r = 0; r < n; ++r)
      for (const auto& [cc, v] : comm.row(r)) ad_e_gl.set(r * n + cc, c, v);
  }
  Subspace gl_centralizer = kernel(ad_e_gl);
  bool gl_nonneg = true;
  for (std::size_t r = 0; r < gl_centralizer.dim(); ++r)
    for (const auto& [c, v] : gl_centralizer.basis().row(r)) {
      (void)v;
      if (grading.degree_of_coord(c) < 0) gl_nonneg = false;
    }
  rep.gl_good = e_in_deg2 && gl_nonneg;
  return rep;
}

namespace {

// Jordan chains of a nilpotent N x N matrix over Q: returns (top vector,
// length) pairs whose iterated images form a basis.
std::vector<std::pair<std::vector<Rat>, int>> jordan_chains(const SparseMat& m) {
  const std::size_t n = m.rows();
  std::vector<Subspace> kernels;  // kernels[i] = ker m^i
  kernels.push_back(Subspace(n));
  SparseMat power = SparseMat::identity(n);
  while (kernels.back().dim() < n) {
    power = m * power;
    kernels.push_back(kernel(power));
    if (kernels.size() > n + 1) throw QsliceError("jordan_chains: matrix is not nilpotent");
  }
  const int r = static_cast<int>(kernels.size()) - 1;

  std::vector<std::pair<std::vector<Rat>, int>> chains;
  for (int l = r; l >= 1; --l) {
    // span of ker m^{l-1} plus the depth-(L-l) images of longer chains
    Subspace blocked = kernels[l - 1];
    std::vector<std::vector<Rat>> extra;
    for (const auto& [top, length] : chains) {
      std::vector<Rat> v = top;
      for (int step = 0; step < length - l; ++step) v = m.apply(v);
      extra.push_back(std::move(v));
    }
    if (!extra.empty()) blocked = sum(blocked, Subspace::span(n, extra));
    for (std::size_t row = 0; row < kernels[l].dim(); ++row) {
      std::vector<Rat> v = kernels[l].basis().dense_row(row);
      if (blocked.contains(v)) continue;
      chains.emplace_back(v, l);
      blocked = sum(blocked, Subspace::span(n, {v}));
    }
  }
  return chains;
}

}  // namespace

std::pair<QElement, QElement> sl2_complete(const QElement& e, const Grading& grading) {
  const std::size_t n = e.n();
  if (!e.is_even()) throw QsliceError("sl2_complete: e must be even");
  int deg = 0;
  if (!grading.is_homogeneous(e, deg) || (!e.is_zero() && deg != 2))
    throw QsliceError("sl2_complete: e must be homogeneous of degree 2");
  if (e.is_zero()) return {QElement(n), QElement(n)};

  // Jordan standard triple gives h with integer weights; only its degree-0
  // part is kept, which still satisfies [h0, e] = 2e.
  auto chains = jordan_chains(e.s());
  SparseMat c_mat(n, n);
  std::vector<Rat> weights;
  std::size_t col = 0;
  for (const auto& [top, length] : chains) {
    std::vector<Rat> v = top;
    for (int k = 0; k < length; ++k) {
      for (std::size_t rrow = 0; rrow < n; ++rrow)
        if (v[rrow] != 0) c_mat.set(rrow, col, v[rrow]);
      weights.emplace_back(2 * k + 1 - length);
      ++col;
      if (k + 1 < length) v = e.s().apply(v);
    }
  }
  SparseMat d_mat(n, n);
  for (std::size_t i = 0; i < n; ++i) d_mat.set(i, i, weights[i]);
  SparseMat h_full = c_mat * d_mat * inverse(c_mat);
  QElement h = grading.component(QElement(h_full, SparseMat(n, n)), 0);
  if (!(bracket(h, e) == e.scaled(Rat(2))))
    throw TripleNotFound("sl2_complete: degree-0 projection lost [h,e] = 2e");

  // solve [e, f] = h and [h, f] = -2f over f in g_{-2, even}
  std::vector<std::size_t> unknowns;
  for (std::size_t c2 = 0; c2 < n * n; ++c2)
    if (grading.degree_of_coord(c2) == -2) unknowns.push_back(c2);
  const std::size_t d_all = coord_dim(n);
  SparseMat sys(2 * d_all, unknowns.size());
  std::vector<Rat> rhs(2 * d_all, Rat(0));
  for (std::size_t u = 0; u < unknowns.size(); ++u) {
    QElement b = basis_element(n, unknowns[u]);
    std::vector<Rat> ef = bracket(e, b).coords();
    std::vector<Rat> hf = (bracket(h, b) + b.scaled(Rat(2))).coords();
    for (std::size_t r = 0; r < d_all; ++r) {
      if (ef[r] != 0) sys.set(r, u, ef[r]);
      if (hf[r] != 0) sys.set(d_all + r, u, hf[r]);
    }
  }
  std::vector<Rat> h_coords = h.coords();
  for (std::size_t r = 0; r < d_all; ++r) rhs[r] = h_coords[r];
  auto sol = solve(sys, rhs);
  if (!sol) throw TripleNotFound("sl2_complete: no graded f completes the triple");
  QElement f(n);
  for (std::size_t u = 0; u < unknowns.size(); ++u)
    if ((*sol)[u] != 0) f = f + basis_element(n, unknowns[u]).scaled((*sol)[u]);

  if (!(bracket(h, e) == e.scaled(Rat(2))) || !(bracket(h, f) == f.scaled(Rat(-2))) ||
      !(bracket(e, f) == h))
    throw TripleNotFound("sl2_complete: solved triple fails the relations");
  return {h, f};
}

NilpotentDatum::NilpotentDatum(QElement e_in, Grading grading_in)
    : n(e_in.n()),
      e(e_in),
      big_e(pi(e_in)),
      h(e_in.n()),
      f(e_in.n()),
      big_f(e_in.n()),
      chi(functional_from_element(pi(e_in))),
      grading(std::move(grading_in)) {
  auto [hh, ff] = sl2_complete(e, grading);
  h = hh;
  f = ff;
  big_f = pi(f);
}

NilpotentDatum datum_from_pyramid(const Pyramid& p) {
  return NilpotentDatum(nilpotent_from_pyramid(p), grading_from_pyramid(p));
}

GramForm form_on_g_minus1(const NilpotentDatum& datum) {
  GramForm g;
  const std::size_t n = datum.n;
  for (std::size_t c : coords_of_degree(datum.grading, -1, false))
    g.even_basis.push_back(basis_element(n, c));
  for (std::size_t c : coords_of_degree(datum.grading, -1, true))
    g.odd_basis.push_back(basis_element(n, c));

  auto gram = [&](const std::vector<QElement>& basis) {
    SparseMat m(basis.size(), basis.size());
    for (std::size_t a = 0; a < basis.size(); ++a)
      for (std::size_t b = 0; b < basis.size(); ++b) {
        Rat v = datum.chi(bracket(basis[a], basis[b]));
        if (v != 0) m.set(a, b, v);
      }
    return m;
  };
  g.even_gram = gram(g.even_basis);
  g.odd_gram = gram(g.odd_basis);

  for (std::size_t a = 0; a < g.even_basis.size(); ++a) {
    if (g.even_gram.get(a, a) != 0) throw DegenerateForm("even gram must be alternating");
    for (std::size_t b = 0; b < g.even_basis.size(); ++b)
      if (g.even_gram.get(a, b) != -g.even_gram.get(b, a))
        throw DegenerateForm("even gram must be antisymmetric");
  }
  for (std::size_t a = 0; a < g.odd_basis.size(); ++a) {
    if (g.odd_gram.get(a, a) != 0)
      throw DegenerateForm("odd gram has nonzero diagonal in the unit basis");
    for (std::size_t b = 0; b < g.odd_basis.size(); ++b)
      if (g.odd_gram.get(a, b) != g.odd_gram.get(b, a))
        throw DegenerateForm("odd gram must be symmetric");
  }
  for (const QElement& x : g.even_basis)
    for (const QElement& y : g.odd_basis)
      if (datum.chi(bracket(x, y)) != 0) throw DegenerateForm("cross-parity pairing must vanish");
  if (rank(g.even_gram) != g.even_basis.size() || rank(g.odd_gram) != g.odd_basis.size())
    throw DegenerateForm("form on g_{-1} is degenerate; grading is not good");
  return g;
}

namespace {

// Greedy hyperbolic pairing of a nondegenerate zero-diagonal pairing given by
// gram; returns coefficient vectors (over the gram basis) of the isotropic
// half and of the partner half.
std::pair<std::vector<std::vector<Rat>>, std::vector<std::vector<Rat>>> hyperbolic_pairing(
    const SparseMat& gram, bool symmetric) {
  const std::size_t k = gram.rows();
  if (k % 2 != 0)
    throw IsotropicConstructionFailure("hyperbolic pairing requires even dimension");
  auto pair_with = [&](const std::vector<Rat>& x, const std::vector<Rat>& y) {
    Rat acc(0);
    std::vector<Rat> gy = gram.apply(y);
    for (std::size_t i = 0; i < k; ++i) acc += x[i] * gy[i];
    return acc;
  };
  std::vector<std::vector<Rat>> working;
  for (std::size_t i = 0; i < k; ++i) {
    std::vector<Rat> v(k, Rat(0));
    v[i] = 1;
    working.push_back(std::move(v));
  }
  std::vector<std::vector<Rat>> iso, partners;
  while (!working.empty()) {
    std::size_t ui = working.size();
    for (std::size_t i = 0; i < working.size(); ++i)
      if (pair_with(working[i], working[i]) == 0) {
        ui = i;
        break;
      }
    if (ui == working.size())
      throw IsotropicConstructionFailure("no isotropic vector available over Q");
    std::vector<Rat> u = working[ui];
    working.erase(working.begin() + ui);

    std::size_t wi = working.size();
    Rat c(0);
    for (std::size_t i = 0; i < working.size(); ++i) {
      c = pair_with(u, working[i]);
      if (c != 0) {
        wi = i;
        break;
      }
    }
    if (wi == working.size())
      throw IsotropicConstructionFailure("pairing degenerated during construction");
    std::vector<Rat> v = working[wi];
    working.erase(working.begin() + wi);
    for (auto& x : v) x /= c;
    if (symmetric) {
      Rat vv = pair_with(v, v);
      if (vv != 0)
        for (std::size_t i = 0; i < k; ++i) v[i] -= vv / 2 * u[i];
    }
    for (auto& x : working) {
      Rat alpha = pair_with(x, v);
      Rat beta = symmetric ? pair_with(x, u) : -pair_with(x, u);
      for (std::size_t i = 0; i < k; ++i) x[i] -= alpha * u[i] + beta * v[i];
    }
    iso.push_back(std::move(u));
    partners.push_back(std::move(v));
  }
  return {iso, partners};
}

QElement combine(const std::vector<QElement>& basis, const std::vector<Rat>& coeffs) {
  QElement out(basis.empty() ? 1 : basis[0].n());
  for (std::size_t i = 0; i < coeffs.size(); ++i)
    if (coeffs[i] != 0) out = out + basis[i].scaled(coeffs[i]);
  return out;
}

}  // namespace

IsotropicChoice isotropic_choice(const NilpotentDatum& datum, IsotropicMode mode) {
  const std::size_t n = datum.n, d = coord_dim(n);
  GramForm gram = form_on_g_minus1(datum);
  IsotropicChoice out;
  out.mode = mode;

  if (mode == IsotropicMode::Zero) {
    out.lperp_even = gram.even_basis;
    out.lperp_odd = gram.odd_basis;
    out.complement_even = gram.even_basis;
    out.complement_odd = gram.odd_basis;
  } else {
    if (gram.even_basis.size() % 2 != 0 || gram.odd_basis.size() % 2 != 0)
      throw IsotropicConstructionFailure("lagrangian mode needs even-dimensional blocks");
    auto [iso_e, part_e] = hyperbolic_pairing(gram.even_gram, /*symmetric=*/false);
    auto [iso_o, part_o] = hyperbolic_pairing(gram.odd_gram, /*symmetric=*/true);
    for (const auto& cvec : iso_e) out.l_even.push_back(combine(gram.even_basis, cvec));
    for (const auto& cvec : iso_o) out.l_odd.push_back(combine(gram.odd_basis, cvec));
    for (const auto& cvec : part_e) out.complement_even.push_back(combine(gram.even_basis, cvec));
    for (const auto& cvec : part_o) out.complement_odd.push_back(combine(gram.odd_basis, cvec));
    out.lperp_even = out.l_even;
    out.lperp_odd = out.l_odd;
  }

  // tails: all matrix units of degree <= -2, ascending degree, even first
  std::vector<QElement> tail;
  std::vector<int> degs = datum.grading.occurring_degrees();
  for (int deg : degs) {
    if (deg > -2) continue;
    for (bool odd : {false, true})
      for (std::size_t c : coords_of_degree(datum.grading, deg, odd))
        tail.push_back(basis_element(n, c));
  }

  auto assemble = [&](const std::vector<QElement>& even, const std::vector<QElement>& odd) {
    std::vector<QElement> basis;
    basis.insert(basis.end(), even.begin(), even.end());
    basis.insert(basis.end(), odd.begin(), odd.end());
    basis.insert(basis.end(), tail.begin(), tail.end());
    return basis;
  };
  out.m_basis = assemble(out.l_even, out.l_odd);
  out.m_prime_basis = assemble(out.lperp_even, out.lperp_odd);

  auto span_of = [&](const std::vector<QElement>& basis) {
    std::vector<std::vector<Rat>> rows;
    for (const QElement& x : basis) rows.push_back(x.coords());
    return Subspace::span(d, rows);
  };
  out.m = span_of(out.m_basis);
  out.m_prime = span_of(out.m_prime_basis);
  if (out.m.dim() != out.m_basis.size() || out.m_prime.dim() != out.m_prime_basis.size())
    throw QsliceError("isotropic_choice: assembled basis is dependent");

  // the defining properties; cheap to re-check exactly
  for (const QElement& a : out.m_prime_basis)
    for (const QElement& b : out.m_basis) {
      QElement br = bracket(a, b);
      if (!out.m_prime.contains(br.coords()))
        throw QsliceError("isotropic_choice: m' is not bracket closed");
      if (datum.chi(br) != 0)
        throw QsliceError("isotropic_choice: chi([m', m]) must vanish");
    }
  for (const QElement& a : out.m_basis)
    for (const QElement& b : out.m_basis)
      if (!out.m.contains(bracket(a, b).coords()))
        throw QsliceError("isotropic_choice: m is not bracket closed");
  return out;
}

MPerpReport mperp_decomposition(const NilpotentDatum& datum, const IsotropicChoice& choice) {
  const std::size_t n = datum.n, d = coord_dim(n);

  SparseMat pairing(choice.m_basis.size(), d);
  for (std::size_t r = 0; r < choice.m_basis.size(); ++r)
    for (std::size_t c = 0; c < d; ++c) {
      Rat v = odd_form(basis_element(n, c), choice.m_basis[r]);
      if (v != 0) pairing.set(r, c, v);
    }
  Subspace mperp = kernel(pairing);

  std::vector<std::vector<Rat>> bracket_rows;
  for (const QElement& b : choice.m_prime_basis)
    bracket_rows.push_back(bracket(b, datum.big_e).coords());
  Subspace bracket_part = Subspace::span(d, bracket_rows);

  Subspace gf = datum.big_f.is_zero() ? Subspace::full(d) : centralizer(datum.big_f);
  std::vector<std::vector<Rat>> pi_rows;
  for (std::size_t r = 0; r < gf.dim(); ++r) {
    std::vector<Rat> v = gf.basis().dense_row(r);
    std::vector<Rat> swapped(d);
    for (std::size_t c = 0; c < d; ++c) swapped[(c + d / 2) % d] = v[c];
    pi_rows.push_back(std::move(swapped));
  }
  Subspace pi_gf = Subspace::span(d, pi_rows);

  MPerpReport rep;
  rep.mperp = sudim(mperp);
  rep.bracket_part = sudim(bracket_part);
  rep.pi_gf_part = sudim(pi_gf);
  rep.zero_intersection = intersect(bracket_part, pi_gf).dim() == 0;
  Subspace total = sum(bracket_part, pi_gf);
  rep.direct_sum = (total == mperp) && (rep.mperp == rep.bracket_part + rep.pi_gf_part);
  SuperDim expect = sudim(choice.m_prime).flipped() + datum.grading.sudim_piece(0) +
                    datum.grading.sudim_piece(-1);
  rep.proof_identity = (rep.mperp == expect);
  return rep;
}

bool GradingPropsReport::all_ok() const {
  for (const AdERow& row : rows)
    if (!row.injective_ok || !row.surjective_ok) return false;
  return dimension_identity;
}

GradingPropsReport check_grading_properties(const NilpotentDatum& datum) {
  const std::size_t n = datum.n;
  GradingPropsReport rep;
  std::vector<int> degs = datum.grading.occurring_degrees();
  int lo = degs.front() - 2, hi = degs.back();
  for (int j = lo; j <= hi; ++j) {
    SuperDim dim_j = datum.grading.sudim_piece(j);
    SuperDim dim_j2 = datum.grading.sudim_piece(j + 2);
    if (dim_j.even + dim_j.odd + dim_j2.even + dim_j2.odd == 0) continue;
    AdERow row;
    row.j = j;
    row.dim_gj = dim_j;
    row.dim_gj2 = dim_j2;
    // ad E maps g_{j,even} -> g_{j+2,odd} and vice versa
    for (bool src_odd : {false, true}) {
      auto srcs = coords_of_degree(datum.grading, j, src_odd);
      SparseMat m(coord_dim(n), srcs.size());
      for (std::size_t c = 0; c < srcs.size(); ++c) {
        std::vector<Rat> v = bracket(datum.big_e, basis_element(n, srcs[c])).coords();
        for (std::size_t r = 0; r < v.size(); ++r)
          if (v[r] != 0) m.set(r, c, v[r]);
      }
      long rk = static_cast<long>(rank(m));
      (src_odd ? row.rank.odd : row.rank.even) = rk;
      long src_dim = src_odd ? dim_j.odd : dim_j.even;
      long dst_dim = src_odd ? dim_j2.even : dim_j2.odd;
      if (j <= -1 && rk != src_dim) row.injective_ok = false;
      if (j >= -1 && rk != dst_dim) row.surjective_ok = false;
    }
    rep.rows.push_back(row);
  }
  Subspace ge = datum.big_e.is_zero() ? Subspace::full(coord_dim(n)) : centralizer(datum.big_e);
  rep.sudim_g_e = sudim(ge);
  rep.sudim_g0 = datum.grading.sudim_piece(0);
  rep.sudim_g1 = datum.grading.sudim_piece(1);
  rep.dimension_identity = (rep.sudim_g_e == rep.sudim_g0 + rep.sudim_g1);
  return rep;
}

std::map<int, SuperDim> graded_centralizer_sudims(const QElement& x, const Grading& grading) {
  if (!x.is_homogeneous()) throw QsliceError("graded_centralizer_sudims: x must be homogeneous");
  const std::size_t n = x.n();
  std::map<int, SuperDim> out;
  if (x.is_zero()) {
    for (int deg : grading.occurring_degrees()) out[deg] = grading.sudim_piece(deg);
    return out;
  }
  for (int deg : grading.occurring_degrees()) {
    for (bool odd : {false, true}) {
      auto srcs = coords_of_degree(grading, deg, odd);
      if (srcs.empty()) continue;
      SparseMat m(coord_dim(n), srcs.size());
      for (std::size_t c = 0; c < srcs.size(); ++c) {
        std::vector<Rat> v = bracket(x, basis_element(n, srcs[c])).coords();
        for (std::size_t r = 0; r < v.size(); ++r)
          if (v[r] != 0) m.set(r, c, v[r]);
      }
      long null_dim = static_cast<long>(srcs.size() - rank(m));
      if (null_dim > 0) (odd ? out[deg].odd : out[deg].even) += null_dim;
    }
  }
  for (auto it = out.begin(); it != out.end();)
    it = (it->second.even == 0 && it->second.odd == 0) ? out.erase(it) : std::next(it);
  return out;
}

}  // namespace qslice
