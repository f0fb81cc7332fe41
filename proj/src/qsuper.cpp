#include "qslice/qsuper.hpp"

#include <sstream>

namespace qslice {

QElement::QElement(SparseMat s, SparseMat sp) : n_(s.rows()), s_(std::move(s)), sp_(std::move(sp)) {
  if (s_.rows() != s_.cols() || sp_.rows() != sp_.cols() || s_.rows() != sp_.rows())
    throw QsliceError("QElement: blocks must be square of equal size");
}

QElement QElement::unit(std::size_t n, Parity eps, std::size_t i, std::size_t j) {
  QElement x(n);
  if (eps == Parity::Even)
    x.s_.set(i, j, Rat(1));
  else
    x.sp_.set(i, j, Rat(1));
  return x;
}

QElement QElement::identity(std::size_t n) {
  return QElement(SparseMat::identity(n), SparseMat(n, n));
}

QElement QElement::diagonal(std::size_t n, const std::vector<Rat>& entries) {
  QElement x(n);
  for (std::size_t i = 0; i < n; ++i) x.s_.set(i, i, entries.at(i));
  return x;
}

QElement QElement::operator+(const QElement& o) const {
  if (n_ != o.n_) throw QsliceError("QElement add: size mismatch");
  QElement r(n_);
  r.s_ = s_ + o.s_;
  r.sp_ = sp_ + o.sp_;
  return r;
}

QElement QElement::operator-(const QElement& o) const { return *this + o.scaled(Rat(-1)); }

QElement QElement::scaled(const Rat& c) const { return QElement(s_.scaled(c), sp_.scaled(c)); }

std::vector<Rat> QElement::coords() const {
  std::vector<Rat> v(coord_dim(n_), Rat(0));
  for (std::size_t r = 0; r < n_; ++r) {
    for (const auto& [c, val] : s_.row(r)) v[r * n_ + c] = val;
    for (const auto& [c, val] : sp_.row(r)) v[n_ * n_ + r * n_ + c] = val;
  }
  return v;
}

QElement QElement::from_coords(std::size_t n, const std::vector<Rat>& v) {
  if (v.size() != coord_dim(n)) throw QsliceError("QElement::from_coords: bad length");
  QElement x(n);
  for (std::size_t c = 0; c < v.size(); ++c) {
    if (v[c] == 0) continue;
    auto [i, j] = coord_unit(n, c);
    if (coord_is_odd(n, c))
      x.sp_.set(i, j, v[c]);
    else
      x.s_.set(i, j, v[c]);
  }
  return x;
}

std::string QElement::str() const {
  std::ostringstream out;
  bool first = true;
  auto emit = [&](const SparseMat& block, const char* tag) {
    for (std::size_t r = 0; r < block.rows(); ++r)
      for (const auto& [c, v] : block.row(r)) {
        if (!first) out << " + ";
        first = false;
        if (v != 1) out << v << "*";
        out << tag << "[" << (r + 1) << "," << (c + 1) << "]";
      }
  };
  emit(s_, "e0");
  emit(sp_, "e1");
  if (first) out << "0";
  return out.str();
}

QElement mat_mul(const QElement& x, const QElement& y) {
  if (x.n() != y.n()) throw QsliceError("mat_mul: size mismatch");
  // [[S1,S1'],[S1',S1]] * [[S2,S2'],[S2',S2]] = [[S1S2+S1'S2', S1S2'+S1'S2], ...]
  SparseMat s = (x.s() * y.s()) + (x.sp() * y.sp());
  SparseMat sp = (x.s() * y.sp()) + (x.sp() * y.s());
  return QElement(std::move(s), std::move(sp));
}

namespace {

QElement bracket_homogeneous(const QElement& x, const QElement& y) {
  bool both_odd = x.is_odd() && y.is_odd();
  QElement xy = mat_mul(x, y);
  QElement yx = mat_mul(y, x);
  return both_odd ? xy + yx : xy - yx;
}

}  // namespace

QElement bracket(const QElement& x, const QElement& y) {
  if (x.n() != y.n()) throw QsliceError("bracket: size mismatch");
  QElement out(x.n());
  const QElement xs[2] = {x.even_part(), x.odd_part()};
  const QElement ys[2] = {y.even_part(), y.odd_part()};
  for (const QElement& a : xs) {
    if (a.is_zero()) continue;
    for (const QElement& b : ys) {
      if (b.is_zero()) continue;
      out = out + bracket_homogeneous(a, b);
    }
  }
  return out;
}

Rat odd_form(const QElement& x, const QElement& y) {
  if (x.n() != y.n()) throw QsliceError("odd_form: size mismatch");
  // otr of the product = trace of its off-diagonal block.
  SparseMat off = (x.s() * y.sp()) + (x.sp() * y.s());
  Rat t(0);
  for (std::size_t i = 0; i < off.rows(); ++i) t += off.get(i, i);
  return t;
}

QElement pi(const QElement& x) { return QElement(x.sp(), x.s()); }

LinearFunctional::LinearFunctional(std::size_t n, std::vector<Rat> values)
    : n_(n), values_(std::move(values)) {
  if (values_.size() != coord_dim(n)) throw QsliceError("LinearFunctional: bad length");
}

Rat LinearFunctional::operator()(const QElement& x) const {
  if (x.n() != n_) throw QsliceError("LinearFunctional: size mismatch");
  Rat out(0);
  std::vector<Rat> v = x.coords();
  for (std::size_t c = 0; c < v.size(); ++c)
    if (v[c] != 0) out += v[c] * values_[c];
  return out;
}

bool LinearFunctional::vanishes_on_odd() const {
  for (std::size_t c = n_ * n_; c < values_.size(); ++c)
    if (values_[c] != 0) return false;
  return true;
}

bool LinearFunctional::is_zero() const {
  for (const Rat& v : values_)
    if (v != 0) return false;
  return true;
}

LinearFunctional functional_from_element(const QElement& e_elt) {
  std::size_t n = e_elt.n();
  std::vector<Rat> values(coord_dim(n), Rat(0));
  for (std::size_t c = 0; c < values.size(); ++c) {
    auto [i, j] = coord_unit(n, c);
    Parity p = coord_is_odd(n, c) ? Parity::Odd : Parity::Even;
    values[c] = odd_form(e_elt, QElement::unit(n, p, i, j));
  }
  return LinearFunctional(n, std::move(values));
}

QElement element_from_functional(const LinearFunctional& chi) {
  if (!chi.vanishes_on_odd())
    throw QsliceError("element_from_functional: functional must vanish on the odd part");
  std::size_t n = chi.n();
  QElement e_elt(n);
  // (sum c_{lk} e^1_{lk}, e^0_{kl}) = c_{lk}, so match coefficients transposed.
  for (std::size_t k = 0; k < n; ++k)
    for (std::size_t l = 0; l < n; ++l) {
      Rat v = chi.value_on_coord(k * n + l);
      if (v != 0) e_elt = e_elt + QElement::unit(n, Parity::Odd, l, k).scaled(v);
    }
  return e_elt;
}

}  // namespace qslice
