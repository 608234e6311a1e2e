#include "hly/deformation.hpp"

#include "hly/errors.hpp"

#include <array>
#include <utility>

namespace hly {

namespace {

void require_coeff_shape(const SuperSpace& space, const MultiTensor& t,
                         int arity, const char* what) {
  if (t.space() != space)
    throw ValidationError(std::string(what) +
                          " coefficient lives on the wrong space");
  if (t.arity() != arity)
    throw ValidationError(std::string(what) +
                          " coefficient has the wrong arity");
  if (t.parity() != Parity::even)
    throw ValidationError(std::string(what) + " coefficient must be even");
}

}  // namespace

Deformation Deformation::make(HomLYSA base, int order,
                              std::vector<MultiTensor> f,
                              std::vector<MultiTensor> g) {
  if (order < 1) throw ValidationError("deformation order must be at least 1");
  if (static_cast<int>(f.size()) != order ||
      static_cast<int>(g.size()) != order)
    throw ValidationError(
        "need exactly one binary and one ternary coefficient per order "
        "1..order");
  for (const MultiTensor& t : f)
    require_coeff_shape(base.space(), t, 2, "binary");
  for (const MultiTensor& t : g)
    require_coeff_shape(base.space(), t, 3, "ternary");
  Deformation d;
  d.order_ = order;
  d.f_.reserve(f.size() + 1);
  d.g_.reserve(g.size() + 1);
  d.f_.push_back(base.bracket2());
  d.g_.push_back(base.bracket3());
  for (MultiTensor& t : f) d.f_.push_back(std::move(t));
  for (MultiTensor& t : g) d.g_.push_back(std::move(t));
  d.base_ = std::move(base);
  return d;
}

Deformation Deformation::null_deformation(HomLYSA base, int order) {
  if (order < 1) throw ValidationError("deformation order must be at least 1");
  std::vector<MultiTensor> f(order, MultiTensor::zero(base.space(), 2));
  std::vector<MultiTensor> g(order, MultiTensor::zero(base.space(), 3));
  return make(std::move(base), order, std::move(f), std::move(g));
}

const MultiTensor& Deformation::f(int n) const {
  if (n < 0 || n > order_)
    throw ValidationError("coefficient order out of range");
  return f_[static_cast<size_t>(n)];
}

const MultiTensor& Deformation::g(int n) const {
  if (n < 0 || n > order_)
    throw ValidationError("coefficient order out of range");
  return g_[static_cast<size_t>(n)];
}

CochainPair Deformation::coeff(int n) const {
  if (n < 1 || n > order_)
    throw ValidationError("coefficient order out of range");
  return CochainPair{f_[static_cast<size_t>(n)], g_[static_cast<size_t>(n)]};
}

void Deformation::set_coeff(int n, const CochainPair& c) {
  if (n < 1 || n > order_)
    throw ValidationError("coefficient order out of range");
  require_coeff_shape(base_.space(), c.f, 2, "binary");
  require_coeff_shape(base_.space(), c.g, 3, "ternary");
  f_[static_cast<size_t>(n)] = c.f;
  g_[static_cast<size_t>(n)] = c.g;
}

std::string deform_eq_name(DeformEq e) {
  return "D" + std::to_string(static_cast<int>(e) + 1);
}

int deform_eq_arity(DeformEq e) {
  switch (e) {
    case DeformEq::d1: return 2;
    case DeformEq::d2: return 3;
    case DeformEq::d3: return 2;
    case DeformEq::d4: return 3;
    case DeformEq::d5: return 3;
    case DeformEq::d6: return 4;
    case DeformEq::d7: return 4;
    case DeformEq::d8: return 5;
  }
  throw InternalError("unknown deformation equation");
}

Vec deformation_residual(const Deformation& d, int order, DeformEq eq,
                         std::span<const int> tuple) {
  if (order < 0 || order > d.order())
    throw ValidationError("equation order out of range");
  if (static_cast<int>(tuple.size()) != deform_eq_arity(eq))
    throw ValidationError("tuple size must match the equation arity");
  const HomLYSA& a = d.base();
  const SuperSpace& sp = a.space();
  const GradedMap& al = a.alpha();
  const int n = order;
  auto p = [&](int i) { return sp.parity(i); };
  auto a2 = [&](int i) { return al.apply(al.col(i)); };

  switch (eq) {
    case DeformEq::d1: {
      int x = tuple[0], y = tuple[1];
      return al.apply(d.f(n).eval_basis2(x, y)) -
             d.f(n).eval2(al.col(x), al.col(y));
    }
    case DeformEq::d2: {
      int x = tuple[0], y = tuple[1], z = tuple[2];
      return al.apply(d.g(n).eval_basis3(x, y, z)) -
             d.g(n).eval3(al.col(x), al.col(y), al.col(z));
    }
    case DeformEq::d3: {
      int x = tuple[0], y = tuple[1];
      return d.f(n).eval_basis2(x, y) +
             koszul_sign({{p(x), p(y)}}) * d.f(n).eval_basis2(y, x);
    }
    case DeformEq::d4: {
      int x = tuple[0], y = tuple[1], z = tuple[2];
      return d.g(n).eval_basis3(x, y, z) +
             koszul_sign({{p(x), p(y)}}) * d.g(n).eval_basis3(y, x, z);
    }
    case DeformEq::d5: {
      int t[3] = {tuple[0], tuple[1], tuple[2]};
      Vec acc = zero_vec(sp.dim());
      for (int r = 0; r < 3; ++r) {
        int x = t[r], y = t[(r + 1) % 3], z = t[(r + 2) % 3];
        Vec term = d.g(n).eval_basis3(x, y, z);
        for (int i = 0; i <= n; ++i)
          term = term + d.f(i).eval2(d.f(n - i).eval_basis2(x, y), al.col(z));
        axpy(acc, koszul_sign({{p(x), p(z)}}), term);
      }
      return acc;
    }
    case DeformEq::d6: {
      int t[3] = {tuple[0], tuple[1], tuple[2]};
      int u = tuple[3];
      Vec acc = zero_vec(sp.dim());
      for (int r = 0; r < 3; ++r) {
        int x = t[r], y = t[(r + 1) % 3], z = t[(r + 2) % 3];
        Vec term = zero_vec(sp.dim());
        for (int i = 0; i <= n; ++i)
          term = term + d.g(i).eval3(d.f(n - i).eval_basis2(x, y), al.col(z),
                                     al.col(u));
        axpy(acc, koszul_sign({{p(x), p(z)}}), term);
      }
      return acc;
    }
    case DeformEq::d7: {
      int x = tuple[0], y = tuple[1], u = tuple[2], v = tuple[3];
      Scalar s = koszul_sign({{p(u), p(x)}, {p(u), p(y)}});
      Vec acc = zero_vec(sp.dim());
      for (int i = 0; i <= n; ++i) {
        int j = n - i;
        acc = acc + d.g(i).eval3(al.col(x), al.col(y),
                                 d.f(j).eval_basis2(u, v));
        acc = acc - d.f(i).eval2(d.g(j).eval_basis3(x, y, u), a2(v));
        axpy(acc, -s, d.f(i).eval2(a2(u), d.g(j).eval_basis3(x, y, v)));
      }
      return acc;
    }
    case DeformEq::d8: {
      int x = tuple[0], y = tuple[1], u = tuple[2], v = tuple[3],
          w = tuple[4];
      Scalar s2 = koszul_sign({{p(u), p(x)}, {p(u), p(y)}});
      Scalar s3 = koszul_sign(
          {{p(u), p(x)}, {p(u), p(y)}, {p(v), p(x)}, {p(v), p(y)}});
      Vec acc = zero_vec(sp.dim());
      for (int i = 0; i <= n; ++i) {
        int j = n - i;
        acc = acc + d.g(i).eval3(a2(x), a2(y), d.g(j).eval_basis3(u, v, w));
        acc = acc - d.g(i).eval3(d.g(j).eval_basis3(x, y, u), a2(v), a2(w));
        axpy(acc, -s2,
             d.g(i).eval3(a2(u), d.g(j).eval_basis3(x, y, v), a2(w)));
        axpy(acc, -s3,
             d.g(i).eval3(a2(u), a2(v), d.g(j).eval_basis3(x, y, w)));
      }
      return acc;
    }
  }
  throw InternalError("unknown deformation equation");
}

DeformationReport verify_deformation(const Deformation& d, int nmax) {
  if (nmax == -1) nmax = d.order();
  if (nmax < 0 || nmax > d.order())
    throw ValidationError("verification order out of range");
  DeformationReport rep;
  const int n = d.base().dim();
  if (n == 0) return rep;
  for (int ord = 0; ord <= nmax; ++ord)
    for (int ei = 0; ei < deform_eq_count; ++ei) {
      DeformEq eq = static_cast<DeformEq>(ei);
      std::vector<int> tuple(deform_eq_arity(eq), 0);
      do {
        Vec r = deformation_residual(d, ord, eq, tuple);
        if (!is_zero_vec(r)) {
          rep.pass = false;
          rep.first = DeformationViolation{ord, eq, tuple, std::move(r)};
          return rep;
        }
      } while (advance_tuple(tuple, n));
    }
  return rep;
}

CochainPair infinitesimal(const Deformation& d) {
  DeformationReport rep = verify_deformation(d, 1);
  if (!rep.pass)
    throw ValidationError(
        "deformation fails its defining equations through order 1");
  CochainPair c = d.coeff(1);
  if (!cocycle_residual(d.base(), c).is_zero())
    throw InternalError(
        "verified order-1 coefficients escaped the cocycle conditions; this "
        "is a library bug");
  return c;
}

FormalIso FormalIso::make(const GradedMap& alpha, int order,
                          std::vector<GradedMap> phi) {
  if (order < 1) throw ValidationError("iso order must be at least 1");
  if (static_cast<int>(phi.size()) != order)
    throw ValidationError("need exactly one coefficient per order 1..order");
  const SuperSpace& space = alpha.domain();
  for (const GradedMap& m : phi) {
    if (m.domain() != space || m.codomain() != space)
      throw ValidationError("iso coefficient lives on the wrong space");
    if (m.parity() != Parity::even)
      throw ValidationError("iso coefficients must be even");
    if (!m.commutes_with(alpha))
      throw ValidationError("iso coefficients must commute with the twist");
  }
  FormalIso out;
  out.space_ = space;
  out.order_ = order;
  out.phi_.reserve(phi.size() + 1);
  out.phi_.push_back(GradedMap::identity(space));
  for (GradedMap& m : phi) out.phi_.push_back(std::move(m));
  return out;
}

FormalIso FormalIso::identity(SuperSpace space, int order) {
  if (order < 1) throw ValidationError("iso order must be at least 1");
  FormalIso out;
  out.space_ = space;
  out.order_ = order;
  out.phi_.assign(static_cast<size_t>(order) + 1,
                  GradedMap::zero(space, space, Parity::even));
  out.phi_[0] = GradedMap::identity(space);
  return out;
}

const GradedMap& FormalIso::phi(int n) const {
  if (n < 0 || n > order_)
    throw ValidationError("coefficient order out of range");
  return phi_[static_cast<size_t>(n)];
}

FormalIso FormalIso::inverse() const {
  FormalIso out = *this;
  for (int n = 1; n <= order_; ++n) {
    GradedMap psi = GradedMap::zero(space_, space_, Parity::even);
    for (int i = 1; i <= n; ++i)
      psi = psi + phi_[static_cast<size_t>(i)].compose(
                      out.phi_[static_cast<size_t>(n - i)]);
    out.phi_[static_cast<size_t>(n)] = Scalar(-1) * psi;
  }
  return out;
}

FormalIso FormalIso::compose(const FormalIso& inner) const {
  if (space_ != inner.space_)
    throw ValidationError("composed isos must share a space");
  if (order_ != inner.order_)
    throw ValidationError("composed isos must share an order");
  FormalIso out = *this;
  for (int n = 0; n <= order_; ++n) {
    GradedMap acc = GradedMap::zero(space_, space_, Parity::even);
    for (int i = 0; i <= n; ++i)
      acc = acc + phi_[static_cast<size_t>(i)].compose(
                      inner.phi_[static_cast<size_t>(n - i)]);
    out.phi_[static_cast<size_t>(n)] = std::move(acc);
  }
  return out;
}

Deformation transport(const Deformation& d, const FormalIso& iso) {
  if (iso.space() != d.base().space())
    throw ValidationError("iso must act on the deformation's base space");
  if (iso.order() != d.order())
    throw ValidationError("iso order must match the deformation order");
  const SuperSpace& sp = d.base().space();
  const int dim = sp.dim();
  const int N = d.order();
  FormalIso inv = iso.inverse();

  std::vector<MultiTensor> f2, g3;
  f2.reserve(N);
  g3.reserve(N);
  for (int n = 1; n <= N; ++n) {
    MultiTensor fn = MultiTensor::zero(sp, 2);
    for (int x = 0; x < dim; ++x)
      for (int y = 0; y < dim; ++y) {
        Vec acc = zero_vec(dim);
        for (int q = 0; q <= n; ++q)
          for (int r = 0; r + q <= n; ++r)
            for (int s = 0; r + q + s <= n; ++s) {
              int outer = n - q - r - s;
              Vec val = d.f(q).eval2(inv.phi(r).col(x), inv.phi(s).col(y));
              acc = acc + iso.phi(outer).apply(val);
            }
        for (int m = 0; m < dim; ++m)
          if (!is_zero(acc[m])) fn.set2(x, y, m, acc[m]);
      }
    f2.push_back(std::move(fn));

    MultiTensor gn = MultiTensor::zero(sp, 3);
    for (int x = 0; x < dim; ++x)
      for (int y = 0; y < dim; ++y)
        for (int z = 0; z < dim; ++z) {
          Vec acc = zero_vec(dim);
          for (int q = 0; q <= n; ++q)
            for (int r = 0; r + q <= n; ++r)
              for (int s = 0; r + q + s <= n; ++s)
                for (int t = 0; r + q + s + t <= n; ++t) {
                  int outer = n - q - r - s - t;
                  Vec val = d.g(q).eval3(inv.phi(r).col(x), inv.phi(s).col(y),
                                         inv.phi(t).col(z));
                  acc = acc + iso.phi(outer).apply(val);
                }
          for (int m = 0; m < dim; ++m)
            if (!is_zero(acc[m])) gn.set3(x, y, z, m, acc[m]);
        }
    g3.push_back(std::move(gn));
  }
  return Deformation::make(d.base(), N, std::move(f2), std::move(g3));
}

bool equivalent_infinitesimals(const Deformation& d1, const Deformation& d2) {
  if (!(d1.base() == d2.base()))
    throw ValidationError("deformations must share a base");
  CochainPair c1 = infinitesimal(d1);
  CochainPair c2 = infinitesimal(d2);
  CochainPair diff = add_cochain(c1, scale_cochain(Scalar(-1), c2));
  CochainIndex idx(d1.base().space());
  return b23_basis(d1.base()).contains(idx.pack(diff));
}

ObstructionReport trivialize(const Deformation& d) {
  DeformationReport vrep = verify_deformation(d);
  if (!vrep.pass)
    throw ValidationError(
        "deformation fails its defining equations; nothing to trivialize");
  const HomLYSA& base = d.base();
  const int N = d.order();

  Deformation cur = d;
  FormalIso total = FormalIso::identity(base.space(), N);
  int r = 1;
  while (r <= N) {
    CochainPair c = cur.coeff(r);
    if (is_zero_cochain(c)) {
      ++r;
      continue;
    }
    std::optional<GradedMap> h = solve_coboundary(base, c);
    if (!h) {
      ObstructionReport rep;
      rep.status = TrivializeStatus::obstructed;
      rep.obstruction_order = r;
      if (!cocycle_residual(base, c).is_zero())
        throw InternalError(
            "obstruction certificate escaped the cocycle conditions; this "
            "is a library bug");
      rep.certificate = std::move(c);
      return rep;
    }
    std::vector<GradedMap> phi(
        static_cast<size_t>(N),
        GradedMap::zero(base.space(), base.space(), Parity::even));
    phi[static_cast<size_t>(r) - 1] = *h;
    FormalIso step = FormalIso::make(base.alpha(), N, std::move(phi));
    cur = transport(cur, step);
    total = step.compose(total);
    for (int q = 1; q <= r; ++q)
      if (!is_zero_cochain(cur.coeff(q)))
        throw InternalError(
            "trivialization step left a low-order coefficient behind; this "
            "is a library bug");
    ++r;
  }
  ObstructionReport rep;
  rep.status = TrivializeStatus::trivializable;
  rep.iso = std::move(total);
  return rep;
}

}  // namespace hly
