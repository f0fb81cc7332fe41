#include "qslice/cohomology.hpp"

#include <algorithm>

namespace qslice {

CEComplex::CEComplex(std::vector<int> gamma_degs, std::vector<bool> b_odd,
                     std::map<std::pair<int, int>, std::vector<std::pair<int, Rat>>> brackets,
                     CEModule module)
    : gamma_(std::move(gamma_degs)), b_odd_(std::move(b_odd)), module_(std::move(module)) {
  weight_.reserve(gamma_.size());
  for (int j : gamma_) {
    if (j > -1) throw QsliceError("CEComplex: m' must be negatively graded");
    weight_.push_back(-j);
  }

  // delta(xi^c) encodes the bracket: for v < u the coefficient is
  // -(-1)^{|b_v|(|b_u|+1)} f^c_{vu}; the diagonal (odd b) contributes
  // -1/2 f^c_{aa} (xi^a)^2.
  delta_xi_.assign(gamma_.size(), {});
  for (const auto& [pair, expansion] : brackets) {
    auto [v, u] = pair;
    if (v > u) throw QsliceError("CEComplex: bracket table must be upper triangular");
    for (const auto& [c, coeff] : expansion) {
      if (coeff == 0) continue;
      if (v == u) {
        if (!b_odd_[v]) throw QsliceError("CEComplex: [b,b] = 0 for even b");
        delta_xi_[c].emplace_back(v, u, -coeff / 2);
      } else {
        bool sign = b_odd_[v] && !b_odd_[u];
        delta_xi_[c].emplace_back(v, u, sign ? coeff : -coeff);
      }
    }
  }
}

int CEComplex::xi_weight(const XiMono& m) const {
  int w = 0;
  for (const auto& [a, e] : m) w += e * weight_[a];
  return w;
}

int CEComplex::xi_length(const XiMono& m) const {
  int l = 0;
  for (const auto& [a, e] : m) l += e;
  return l;
}

bool CEComplex::xi_total_shifted_parity(const XiMono& m) const {
  int p = 0;
  for (const auto& [a, e] : m)
    if (xi_shifted_odd(a)) p += e;
  return p % 2 == 1;
}

std::pair<int, CEComplex::XiMono> CEComplex::xi_left_mul(int g, const XiMono& m) const {
  int sign = 1;
  XiMono out;
  out.reserve(m.size() + 1);
  bool placed = false;
  for (const auto& [a, e] : m) {
    if (!placed && a >= g) {
      if (a == g) {
        if (xi_shifted_odd(g)) return {0, {}};
        out.emplace_back(a, e + 1);
      } else {
        out.emplace_back(g, 1);
        out.emplace_back(a, e);
      }
      placed = true;
      continue;
    }
    if (!placed && xi_shifted_odd(g) && xi_shifted_odd(a) && (e % 2)) sign = -sign;
    out.emplace_back(a, e);
  }
  if (!placed) out.emplace_back(g, 1);
  return {sign, out};
}

const std::vector<CEComplex::XiMono>& CEComplex::xi_monomials(int k, int max_weight) {
  auto key = std::make_pair(k, max_weight);
  auto it = xi_cache_.find(key);
  if (it != xi_cache_.end()) return it->second;
  std::vector<XiMono> out;
  XiMono current;
  auto rec = [&](auto&& self, std::size_t from, int length, int budget) -> void {
    if (length == 0) {
      out.push_back(current);
      return;
    }
    for (std::size_t a = from; a < weight_.size(); ++a) {
      int cap = xi_shifted_odd(int(a)) ? 1 : length;
      for (int e = 1; e <= cap && e <= length && e * weight_[a] <= budget; ++e) {
        current.emplace_back(int(a), e);
        self(self, a + 1, length - e, budget - e * weight_[a]);
        current.pop_back();
      }
    }
  };
  rec(rec, 0, k, max_weight);
  std::sort(out.begin(), out.end());
  return xi_cache_.emplace(key, std::move(out)).first->second;
}

CEComplex::Block& CEComplex::block(int k, int d) {
  auto key = std::make_pair(k, d);
  auto it = blocks_.find(key);
  if (it != blocks_.end()) return it->second;
  Block b;
  const auto& monos = xi_monomials(k, d);
  for (const XiMono& mono : monos) {
    int w = xi_weight(mono);
    if (w > d) continue;
    long md = module_.dim(d - w);
    for (long i = 0; i < md; ++i) {
      b.index.emplace(std::make_pair(mono, i), b.basis.size());
      b.basis.emplace_back(mono, i);
    }
  }
  return blocks_.emplace(key, std::move(b)).first->second;
}

long CEComplex::cochain_dim(int k, int d) {
  if (k < 0 || d < 0) return 0;
  return long(block(k, d).basis.size());
}

SparseMat CEComplex::differential(int k, int d) {
  auto key = std::make_pair(k, d);
  auto cached = diff_cache_.find(key);
  if (cached != diff_cache_.end()) return cached->second;

  Block& src = block(k, d);
  Block& dst = block(k + 1, d);

  SparseMat out(long(dst.basis.size()), long(src.basis.size()));
  for (std::size_t col = 0; col < src.basis.size(); ++col) {
    const auto& [lambda, mod_idx] = src.basis[col];
    const int mod_deg = d - xi_weight(lambda);
    const bool lambda_parity = xi_total_shifted_parity(lambda);

    // action part: sum_a (xi^a lambda) (x) (-1)^{|b_a| |lambda|} rho_a(q)
    for (std::size_t a = 0; a < weight_.size(); ++a) {
      auto [sgn, grown] = xi_left_mul(int(a), lambda);
      if (sgn == 0) continue;
      Rat factor = Rat(sgn);
      if (b_odd_[a] && lambda_parity) factor = -factor;
      auto targets = module_.act(int(a), mod_deg, mod_idx);
      for (const auto& [tmod, c] : targets) {
        auto row = dst.index.find(std::make_pair(grown, tmod));
        if (row == dst.index.end()) throw QsliceError("CEComplex: missing target cochain");
        out.add_at(row->second, col, factor * c);
      }
    }

    // structure part: odd derivation delta_Lambda applied to lambda
    std::vector<int> seq;
    for (const auto& [a, e] : lambda)
      for (int i = 0; i < e; ++i) seq.push_back(a);
    for (std::size_t pos = 0; pos < seq.size(); ++pos) {
      int a = seq[pos];
      if (delta_xi_[a].empty()) continue;
      int prefix = 0;
      for (std::size_t l = 0; l < pos; ++l)
        if (xi_shifted_odd(seq[l])) ++prefix;
      // derivation prefix sign combined with moving the quadratic to front
      bool neg = xi_shifted_odd(a) && (prefix % 2);
      XiMono rest;
      for (std::size_t l = 0; l < seq.size(); ++l) {
        if (l == pos) continue;
        if (!rest.empty() && rest.back().first == seq[l])
          ++rest.back().second;
        else
          rest.emplace_back(seq[l], 1);
      }
      for (const auto& [v, u, coeff] : delta_xi_[a]) {
        auto [s1, with_u] = xi_left_mul(u, rest);
        if (s1 == 0) continue;
        auto [s2, with_vu] = xi_left_mul(v, with_u);
        if (s2 == 0) continue;
        Rat factor = coeff * Rat(s1 * s2 * (neg ? -1 : 1));
        auto row = dst.index.find(std::make_pair(with_vu, mod_idx));
        if (row == dst.index.end()) throw QsliceError("CEComplex: missing target cochain");
        out.add_at(row->second, col, factor);
      }
    }
  }
  return diff_cache_.emplace(key, std::move(out)).first->second;
}

long CEComplex::h_dim(int k, int d) {
  long dim_k = cochain_dim(k, d);
  if (dim_k == 0) return 0;
  long rank_k = long(rank(differential(k, d)));
  long rank_km1 = k == 0 ? 0 : long(rank(differential(k - 1, d)));
  return dim_k - rank_k - rank_km1;
}

bool CEComplex::d_squared_is_zero(int k, int d) {
  SparseMat a = differential(k, d);
  SparseMat b = differential(k + 1, d);
  return (b * a).is_zero();
}

long CEComplex::euler_characteristic(int d) {
  long chi = 0;
  for (int k = 0; k <= d; ++k) {
    long dim = cochain_dim(k, d);
    chi += (k % 2 == 0) ? dim : -dim;
  }
  return chi;
}

CEComplex ce_complex_for(EnvelopeEngine& engine) {
  const auto& mp = engine.m_prime_gens();
  const std::size_t s = mp.size();
  std::vector<int> gamma(s);
  std::vector<bool> b_odd(s);
  std::map<int, int> dual_of_gen;
  for (std::size_t a = 0; a < s; ++a) {
    gamma[a] = engine.gens()[mp[a]].gamma_deg;
    b_odd[a] = engine.gens()[mp[a]].odd;
    dual_of_gen[mp[a]] = int(a);
  }

  std::map<std::pair<int, int>, std::vector<std::pair<int, Rat>>> brackets;
  for (std::size_t v = 0; v < s; ++v)
    for (std::size_t u = v; u < s; ++u) {
      if (v == u && !b_odd[v]) continue;
      QElement br = bracket(engine.gens()[mp[v]].value, engine.gens()[mp[u]].value);
      if (br.is_zero()) continue;
      UElement expansion = engine.from_qelement(br);
      std::vector<std::pair<int, Rat>> entry;
      for (const auto& [mono, c] : expansion.terms()) {
        int g = mono.front_gen();
        auto it = dual_of_gen.find(g);
        if (it == dual_of_gen.end())
          throw QsliceError("ce_complex_for: m' is not closed under the bracket");
        entry.emplace_back(it->second, c);
      }
      brackets.emplace(std::make_pair(int(v), int(u)), std::move(entry));
    }

  // shared monomial tables for the module gr^K Q
  auto mono_lists = std::make_shared<std::map<int, std::vector<PBWMonomial>>>();
  auto mono_index = std::make_shared<std::map<PBWMonomial, long>>();
  auto engine_ptr = &engine;
  auto ensure = [mono_lists, mono_index, engine_ptr](int d) -> const std::vector<PBWMonomial>& {
    auto it = mono_lists->find(d);
    if (it != mono_lists->end()) return it->second;
    std::vector<PBWMonomial> list;
    if (d >= 0)
      for (const PBWMonomial& m : engine_ptr->basis_upto(d))
        if (engine_ptr->monomial_kazhdan(m) == d) list.push_back(m);
    auto& stored = (*mono_lists)[d];
    stored = std::move(list);
    for (std::size_t i = 0; i < stored.size(); ++i) mono_index->emplace(stored[i], long(i));
    return stored;
  };

  CEModule module;
  module.dim = [ensure](int d) -> long { return long(ensure(d).size()); };
  module.act = [ensure, mono_index, engine_ptr, mp, gamma](
                   int a, int d, long i) -> std::vector<std::pair<long, Rat>> {
    const auto& src = ensure(d);
    UElement img = engine_ptr->ad_gen(mp[a], UElement::monomial(src.at(i), Rat(1)));
    const int target_deg = d + gamma[a];
    ensure(target_deg);
    std::vector<std::pair<long, Rat>> out;
    for (const auto& [m, c] : img.terms()) {
      int deg = engine_ptr->monomial_kazhdan(m);
      if (deg > target_deg) throw QsliceError("ce module: ad raised the Kazhdan degree");
      if (deg != target_deg) continue;  // lower filtration pieces vanish in gr
      out.emplace_back(mono_index->at(m), c);
    }
    return out;
  };

  return CEComplex(std::move(gamma), std::move(b_odd), std::move(brackets), std::move(module));
}

CohomologyTable cohomology_dims(const NilpotentDatum& datum, const IsotropicChoice& choice,
                                int dmax, int imax) {
  EnvelopeEngine engine(datum, choice);
  CEComplex complex = ce_complex_for(engine);
  CohomologyTable table;
  table.imax = imax;
  table.dmax = dmax;
  table.slice = slice_hilbert_series(datum, dmax);
  table.h.assign(imax + 1, std::vector<long>(dmax + 1, 0));
  for (int d = 0; d <= dmax; ++d) {
    for (int i = 0; i <= imax; ++i) {
      table.h[i][d] = complex.h_dim(i, d);
      if (i >= 1 && table.h[i][d] != 0) table.vanishing_ok = false;
      if (!complex.d_squared_is_zero(i, d)) table.d2_ok = false;
    }
    if (table.h[0][d] != long(table.slice[d])) table.h0_matches_slice = false;
    if (complex.euler_characteristic(d) != long(table.slice[d])) table.euler_ok = false;
  }
  return table;
}

}  // namespace qslice
