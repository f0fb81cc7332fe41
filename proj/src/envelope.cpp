#include "qslice/envelope.hpp"

#include <algorithm>

namespace qslice {

int PBWMonomial::total_length() const {
  int n = 0;
  for (const auto& [g, e] : f_) n += e;
  return n;
}

PBWMonomial PBWMonomial::popped_front() const {
  PBWMonomial m = *this;
  if (m.f_.empty()) throw QsliceError("popped_front on empty monomial");
  if (--m.f_.front().second == 0) m.f_.erase(m.f_.begin());
  return m;
}

PBWMonomial PBWMonomial::pushed_front(int g) const {
  PBWMonomial m = *this;
  if (!m.f_.empty() && m.f_.front().first == g) {
    ++m.f_.front().second;
  } else {
    if (!m.f_.empty() && m.f_.front().first < g)
      throw QsliceError("pushed_front would violate monomial order");
    m.f_.insert(m.f_.begin(), {g, 1});
  }
  return m;
}

std::vector<int> PBWMonomial::positions() const {
  std::vector<int> out;
  for (const auto& [g, e] : f_)
    for (int i = 0; i < e; ++i) out.push_back(g);
  return out;
}

UElement UElement::monomial(const PBWMonomial& m, const Rat& c) {
  UElement u;
  if (c != 0) u.terms_.emplace(m, c);
  return u;
}

void UElement::add(const PBWMonomial& m, const Rat& c) {
  if (c == 0) return;
  auto it = terms_.find(m);
  if (it == terms_.end()) {
    terms_.emplace(m, c);
  } else {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

UElement& UElement::operator+=(const UElement& o) {
  for (const auto& [m, c] : o.terms_) add(m, c);
  return *this;
}

UElement UElement::operator+(const UElement& o) const {
  UElement r = *this;
  r += o;
  return r;
}

UElement UElement::operator-(const UElement& o) const {
  UElement r = *this;
  for (const auto& [m, c] : o.terms_) r.add(m, -c);
  return r;
}

UElement UElement::scaled(const Rat& c) const {
  UElement r;
  if (c == 0) return r;
  for (const auto& [m, v] : terms_) r.terms_.emplace(m, c * v);
  return r;
}

namespace {

struct PendingGen {
  QElement value;
  int gamma_deg;
  bool odd;
  bool in_m;
  std::size_t tie;  // construction index, for deterministic ordering
};

}  // namespace

EnvelopeEngine::EnvelopeEngine(const NilpotentDatum& datum, const IsotropicChoice& choice,
                               BasisOrder order)
    : datum_(datum) {
  const std::size_t n = datum.n, d = coord_dim(n);

  auto classify = [&](const QElement& x, bool in_m, std::vector<PendingGen>& sink) {
    int deg = 0;
    if (!datum.grading.is_homogeneous(x, deg))
      throw QsliceError("envelope: generators must be gamma-homogeneous");
    if (!x.is_homogeneous()) throw QsliceError("envelope: generators must be parity-homogeneous");
    sink.push_back(PendingGen{x, deg, x.is_odd() && !x.is_zero(), in_m, sink.size()});
  };

  std::vector<PendingGen> complement, members;
  // complement of l inside g_{-1}
  for (const QElement& x : choice.complement_even) classify(x, false, complement);
  for (const QElement& x : choice.complement_odd) classify(x, false, complement);
  // all matrix units of non-negative degree
  for (std::size_t c = 0; c < d; ++c) {
    if (datum.grading.degree_of_coord(c) < 0) continue;
    auto [i, j] = coord_unit(n, c);
    classify(QElement::unit(n, coord_is_odd(n, c) ? Parity::Odd : Parity::Even, i, j), false,
             complement);
  }
  for (const QElement& x : choice.m_basis) classify(x, true, members);

  auto sort_block = [&](std::vector<PendingGen>& block) {
    std::stable_sort(block.begin(), block.end(), [](const PendingGen& a, const PendingGen& b) {
      if (a.gamma_deg != b.gamma_deg) return a.gamma_deg < b.gamma_deg;
      if (a.odd != b.odd) return !a.odd;
      return a.tie < b.tie;
    });
  };
  sort_block(complement);
  sort_block(members);
  if (order == BasisOrder::Alternate) {
    std::reverse(complement.begin(), complement.end());
    std::reverse(members.begin(), members.end());
  }

  first_m_ = complement.size();
  SparseMat basis_mat(d, d);
  auto append = [&](const PendingGen& g) {
    GenInfo info;
    info.value = g.value;
    info.gamma_deg = g.gamma_deg;
    info.odd = g.odd;
    info.in_m = g.in_m;
    info.kazhdan = g.gamma_deg + 2;
    info.chi_value = g.in_m ? datum.chi(g.value) : Rat(0);
    std::vector<Rat> coords = g.value.coords();
    std::size_t row = gens_.size();
    for (std::size_t c = 0; c < d; ++c)
      if (coords[c] != 0) basis_mat.set(row, c, coords[c]);
    gens_.push_back(std::move(info));
  };
  for (const PendingGen& g : complement) append(g);
  for (const PendingGen& g : members) append(g);
  if (gens_.size() != d) throw QsliceError("envelope: generators do not form a basis of q(N)");
  for (std::size_t g = 0; g < first_m_; ++g)
    if (gens_[g].kazhdan < 1)
      throw QsliceError(
          "envelope: complement generator with non-positive Kazhdan degree; grading is not good");
  basis_inv_ = inverse(basis_mat);

  // structure constants over the ordered basis
  bracket_.assign(d, std::vector<std::vector<std::pair<int, Rat>>>(d));
  for (std::size_t i = 0; i < d; ++i)
    for (std::size_t j = 0; j < d; ++j) {
      std::vector<Rat> coords = bracket(gens_[i].value, gens_[j].value).coords();
      std::vector<Rat> expansion = basis_inv_.apply_left(coords);
      for (std::size_t k = 0; k < d; ++k)
        if (expansion[k] != 0) bracket_[i][j].emplace_back(int(k), expansion[k]);
    }

  // locate the m' basis among the generators
  for (const QElement& x : choice.m_prime_basis) {
    int found = -1;
    for (std::size_t k = 0; k < gens_.size(); ++k)
      if (gens_[k].value == x) {
        found = int(k);
        break;
      }
    if (found < 0) throw QsliceError("envelope: m' basis vector is not a generator");
    m_prime_gens_.push_back(found);
  }
}

UElement EnvelopeEngine::from_qelement(const QElement& x) const {
  std::vector<Rat> expansion = basis_inv_.apply_left(x.coords());
  UElement u;
  for (std::size_t k = 0; k < expansion.size(); ++k)
    if (expansion[k] != 0) u.add(PBWMonomial::generator(int(k)), expansion[k]);
  return u;
}

UElement EnvelopeEngine::mul_expansion(const std::vector<std::pair<int, Rat>>& expansion,
                                       const PBWMonomial& m) {
  UElement out;
  for (const auto& [k, c] : expansion) out += mul_gen_mono(k, m).scaled(c);
  return out;
}

const UElement& EnvelopeEngine::mul_gen_mono(int g, const PBWMonomial& m) {
  auto key = std::make_pair(g, m);
  auto it = memo_.find(key);
  if (it != memo_.end()) return it->second;

  UElement r;
  if (m.empty()) {
    r = UElement::monomial(PBWMonomial::generator(g), Rat(1));
  } else {
    int j = m.front_gen();
    if (g < j) {
      r = UElement::monomial(m.pushed_front(g), Rat(1));
    } else if (g == j) {
      if (!gens_[g].odd) {
        r = UElement::monomial(m.pushed_front(g), Rat(1));
      } else {
        // odd square: b^2 = [b,b]/2 in U(g)
        r = mul_expansion(bracket_[g][g], m.popped_front()).scaled(Rat(1, 2));
      }
    } else {
      // straighten b_g b_j = (-1)^{|g||j|} b_j b_g + [b_g, b_j]
      PBWMonomial rest = m.popped_front();
      UElement t = mul_gen_mono(g, rest);
      bool sign = gens_[g].odd && gens_[j].odd;
      UElement swapped = mul_gen(j, t);
      r = (sign ? swapped.scaled(Rat(-1)) : swapped) + mul_expansion(bracket_[g][j], rest);
    }
  }
  auto [pos, inserted] = memo_.emplace(std::move(key), std::move(r));
  (void)inserted;
  return pos->second;
}

UElement EnvelopeEngine::mul_gen(int g, const UElement& u) {
  UElement out;
  for (const auto& [m, c] : u.terms()) out += mul_gen_mono(g, m).scaled(c);
  return out;
}

UElement EnvelopeEngine::multiply(const UElement& a, const UElement& b) {
  UElement out;
  for (const auto& [ma, ca] : a.terms()) {
    UElement cur = b;
    std::vector<int> seq = ma.positions();
    for (auto it = seq.rbegin(); it != seq.rend(); ++it) cur = mul_gen(*it, cur);
    out += cur.scaled(ca);
  }
  return out;
}

int EnvelopeEngine::monomial_kazhdan(const PBWMonomial& m) const {
  int deg = 0;
  for (const auto& [g, e] : m.factors()) deg += e * gens_[g].kazhdan;
  return deg;
}

int EnvelopeEngine::monomial_gamma(const PBWMonomial& m) const {
  int deg = 0;
  for (const auto& [g, e] : m.factors()) deg += e * gens_[g].gamma_deg;
  return deg;
}

bool EnvelopeEngine::monomial_odd(const PBWMonomial& m) const {
  int par = 0;
  for (const auto& [g, e] : m.factors())
    if (gens_[g].odd) par += e;
  return par % 2 == 1;
}

int EnvelopeEngine::kazhdan_degree(const UElement& u) const {
  if (u.is_zero()) throw ZeroElement("kazhdan_degree of zero element");
  int best = 0;
  bool first = true;
  for (const auto& [m, c] : u.terms()) {
    (void)c;
    int deg = monomial_kazhdan(m);
    if (first || deg > best) best = deg;
    first = false;
  }
  return best;
}

UElement EnvelopeEngine::reduce_mod_I(const UElement& u) const {
  UElement out;
  for (const auto& [m, c] : u.terms()) {
    Rat coeff = c;
    bool dead = false;
    std::vector<std::pair<int, int>> kept;
    for (const auto& [g, e] : m.factors()) {
      if (!gens_[g].in_m) {
        kept.emplace_back(g, e);
        continue;
      }
      // trailing m factor: substitute chi(a)^e
      if (gens_[g].chi_value == 0) {
        dead = true;
        break;
      }
      for (int i = 0; i < e; ++i) coeff *= gens_[g].chi_value;
    }
    if (dead) continue;
    PBWMonomial rebuilt;
    for (auto it = kept.rbegin(); it != kept.rend(); ++it)
      for (int i = 0; i < it->second; ++i) rebuilt = rebuilt.pushed_front(it->first);
    out.add(rebuilt, coeff);
  }
  return out;
}

UElement EnvelopeEngine::ad_gen(int a, const UElement& q) {
  const bool a_odd = gens_[a].odd;
  UElement out;
  for (const auto& [m, c] : q.terms()) {
    std::vector<int> seq = m.positions();
    for (std::size_t i = 0; i < seq.size(); ++i) {
      // sign from moving ad past the first i factors
      int crossed_odd = 0;
      for (std::size_t l = 0; l < i; ++l)
        if (gens_[seq[l]].odd) ++crossed_odd;
      Rat sign = (a_odd && crossed_odd % 2) ? Rat(-1) : Rat(1);
      // suffix of m after position i is a valid sorted monomial
      PBWMonomial suffix;
      for (std::size_t l = seq.size(); l-- > i + 1;) suffix = suffix.pushed_front(seq[l]);
      UElement t = mul_expansion(bracket_[a][seq[i]], suffix);
      for (std::size_t l = i; l-- > 0;) t = mul_gen(seq[l], t);
      out += t.scaled(sign * c);
    }
  }
  return reduce_mod_I(out);
}

UElement EnvelopeEngine::ad_action(const QElement& a, const UElement& q) {
  if (!a.is_homogeneous()) throw QsliceError("ad_action: a must be parity-homogeneous");
  std::vector<Rat> expansion = basis_inv_.apply_left(a.coords());
  UElement out;
  for (std::size_t k = 0; k < expansion.size(); ++k)
    if (expansion[k] != 0) out += ad_gen(int(k), q).scaled(expansion[k]);
  return out;
}

const std::vector<PBWMonomial>& EnvelopeEngine::basis_upto(int d) {
  if (d <= basis_built_to_) return basis_list_;
  basis_list_.clear();
  std::vector<std::pair<int, int>> stack;  // current factors
  auto rec = [&](auto&& self, std::size_t gen, int budget) -> void {
    {
      PBWMonomial m;
      for (auto it = stack.rbegin(); it != stack.rend(); ++it)
        for (int i = 0; i < it->second; ++i) m = m.pushed_front(it->first);
      basis_list_.push_back(std::move(m));
    }
    for (std::size_t g = gen; g < first_m_; ++g) {
      int k = gens_[g].kazhdan;
      if (k > budget) continue;
      int cap = gens_[g].odd ? 1 : budget / k;
      for (int e = 1; e <= cap; ++e) {
        stack.emplace_back(int(g), e);
        self(self, g + 1, budget - e * k);
        stack.pop_back();
      }
    }
  };
  rec(rec, 0, d);
  std::stable_sort(basis_list_.begin(), basis_list_.end(),
                   [&](const PBWMonomial& a, const PBWMonomial& b) {
                     int ka = monomial_kazhdan(a), kb = monomial_kazhdan(b);
                     if (ka != kb) return ka < kb;
                     return a < b;
                   });
  basis_built_to_ = d;
  return basis_list_;
}

long EnvelopeEngine::graded_dim(int d) {
  const auto& list = basis_upto(std::max(d, 0));
  long count = 0;
  for (const PBWMonomial& m : list)
    if (monomial_kazhdan(m) == d) ++count;
  return count;
}

EnvelopeEngine::WResult EnvelopeEngine::whittaker_invariants(int kmax) {
  const auto& list = basis_upto(kmax);
  std::map<PBWMonomial, std::size_t> index;
  for (std::size_t i = 0; i < list.size(); ++i) index.emplace(list[i], i);
  std::vector<std::size_t> prefix(kmax + 1, 0);
  for (int d = 0; d <= kmax; ++d) {
    std::size_t cnt = 0;
    while (cnt < list.size() && monomial_kazhdan(list[cnt]) <= d) ++cnt;
    prefix[d] = cnt;
  }

  // images of every basis monomial under every m' generator, computed once
  const std::size_t s = m_prime_gens_.size();
  std::vector<std::vector<std::vector<std::pair<std::size_t, Rat>>>> images(
      s, std::vector<std::vector<std::pair<std::size_t, Rat>>>(list.size()));
  for (std::size_t a = 0; a < s; ++a)
    for (std::size_t i = 0; i < list.size(); ++i) {
      UElement img = ad_gen(m_prime_gens_[a], UElement::monomial(list[i], Rat(1)));
      for (const auto& [m, c] : img.terms()) {
        auto it = index.find(m);
        if (it == index.end()) throw QsliceError("whittaker: image escaped the truncation");
        images[a][i].emplace_back(it->second, c);
      }
    }

  WResult out;
  out.dims.assign(kmax + 1, 0);
  out.layers.assign(kmax + 1, {});
  SparseMat previous_kernel(0, 0);
  for (int d = 0; d <= kmax; ++d) {
    const std::size_t cols = prefix[d];
    SparseMat constraints(s * cols, cols);
    for (std::size_t a = 0; a < s; ++a)
      for (std::size_t i = 0; i < cols; ++i)
        for (const auto& [target, c] : images[a][i]) {
          if (target >= cols) throw QsliceError("whittaker: ad raised the Kazhdan degree");
          constraints.add_at(a * cols + target, i, c);
        }
    Subspace inv = (s == 0) ? Subspace::full(cols) : kernel(constraints);
    out.dims[d] = long(inv.dim());

    // representatives of F_d W / F_{d-1} W: kernel rows independent of the
    // previous kernel (embedded by the nested monomial order)
    SparseMat prev_embedded(previous_kernel.rows(), cols);
    for (std::size_t r = 0; r < previous_kernel.rows(); ++r)
      prev_embedded.set_row(r, previous_kernel.row(r));
    Subspace seen = Subspace::span_rows(prev_embedded);
    for (std::size_t r = 0; r < inv.dim(); ++r) {
      std::vector<Rat> v = inv.basis().dense_row(r);
      if (seen.contains(v)) continue;
      UElement rep;
      for (std::size_t i = 0; i < cols; ++i)
        if (v[i] != 0) rep.add(list[i], v[i]);
      out.layers[d].push_back(std::move(rep));
      seen = sum(seen, Subspace::span(cols, {v}));
    }
    previous_kernel = inv.basis();
  }
  return out;
}

std::vector<long long> free_superalgebra_series(const std::vector<int>& even_degs,
                                                const std::vector<int>& odd_degs, int kmax) {
  std::vector<long long> c(kmax + 1, 0);
  c[0] = 1;
  for (int d : even_degs) {
    if (d < 1) throw QsliceError("free_superalgebra_series: degrees must be positive");
    for (int k = d; k <= kmax; ++k) c[k] += c[k - d];
  }
  for (int d : odd_degs) {
    if (d < 1) throw QsliceError("free_superalgebra_series: degrees must be positive");
    for (int k = kmax; k >= d; --k) c[k] += c[k - d];
  }
  return c;
}

std::vector<long long> slice_hilbert_series(const NilpotentDatum& datum, int kmax) {
  auto table = graded_centralizer_sudims(datum.big_f, datum.grading);
  std::vector<int> even_degs, odd_degs;
  for (const auto& [j, s] : table) {
    // Pi swaps parity: even coordinates of C[S] come from the odd part of g_F
    for (long i = 0; i < s.odd; ++i) even_degs.push_back(2 - j);
    for (long i = 0; i < s.even; ++i) odd_degs.push_back(2 - j);
  }
  return free_superalgebra_series(even_degs, odd_degs, kmax);
}

NuReport verify_nu(const NilpotentDatum& datum, const IsotropicChoice& choice, int kmax,
                   BasisOrder order) {
  EnvelopeEngine engine(datum, choice, order);
  NuReport rep;
  auto w = engine.whittaker_invariants(kmax);
  rep.dims_w = w.dims;
  rep.cs_coeffs = slice_hilbert_series(datum, kmax);
  rep.cs_cumulative.assign(kmax + 1, 0);
  long long acc = 0;
  for (int d = 0; d <= kmax; ++d) {
    acc += rep.cs_coeffs[d];
    rep.cs_cumulative[d] = acc;
  }
  rep.dims_match = true;
  for (int d = 0; d <= kmax; ++d)
    if (rep.dims_w[d] != rep.cs_cumulative[d]) {
      rep.dims_match = false;
      rep.mismatch_degree = d;
      break;
    }

  // gr^K Q must match the free superalgebra on the complement generators
  std::vector<int> even_degs, odd_degs;
  for (std::size_t g = 0; g < engine.first_m_index(); ++g)
    (engine.gens()[g].odd ? odd_degs : even_degs).push_back(engine.gens()[g].kazhdan);
  auto free_series = free_superalgebra_series(even_degs, odd_degs, kmax);
  rep.gr_q_matches_free_algebra = true;
  for (int d = 0; d <= kmax; ++d)
    if (engine.graded_dim(d) != long(free_series[d])) rep.gr_q_matches_free_algebra = false;
  return rep;
}

}  // namespace qslice
