#include "hly/cohomology.hpp"

#include "hly/errors.hpp"

#include <utility>

namespace hly {

CochainPair zero_cochain(const SuperSpace& space) {
  return {MultiTensor::zero(space, 2), MultiTensor::zero(space, 3)};
}

CochainPair add_cochain(const CochainPair& a, const CochainPair& b) {
  return {a.f + b.f, a.g + b.g};
}

CochainPair scale_cochain(const Scalar& c, const CochainPair& a) {
  return {c * a.f, c * a.g};
}

bool is_zero_cochain(const CochainPair& c) {
  return c.f.is_zero() && c.g.is_zero();
}

namespace {

void require_cochain_shape(const SuperSpace& space, const CochainPair& c) {
  if (c.f.arity() != 2 || c.g.arity() != 3 || c.f.space() != space ||
      c.g.space() != space || c.f.parity() != Parity::even ||
      c.g.parity() != Parity::even)
    throw ValidationError(
        "cochain pair must be a parity-even bilinear/trilinear pair on the "
        "algebra space");
}

}  // namespace

CochainIndex::CochainIndex(SuperSpace space) : space_(space) {
  const int n = space_.dim();
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      for (int m = 0; m < n; ++m)
        if (space_.parity(m) == space_.parity(i) + space_.parity(j))
          fslots_.push_back({i, j, m});
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      for (int k = 0; k < n; ++k)
        for (int m = 0; m < n; ++m)
          if (space_.parity(m) ==
              space_.parity(i) + space_.parity(j) + space_.parity(k))
            gslots_.push_back({i, j, k, m});
}

Vec CochainIndex::pack(const CochainPair& c) const {
  require_cochain_shape(space_, c);
  Vec v = zero_vec(size());
  int t = 0;
  for (const auto& [i, j, m] : fslots_) v[t++] = c.f.at2(i, j, m);
  for (const auto& [i, j, k, m] : gslots_) v[t++] = c.g.at3(i, j, k, m);
  return v;
}

CochainPair CochainIndex::unpack(const Vec& v) const {
  if (static_cast<int>(v.size()) != size())
    throw ValidationError("packed cochain length mismatch");
  CochainPair c = zero_cochain(space_);
  int t = 0;
  for (const auto& [i, j, m] : fslots_) {
    if (!is_zero(v[t])) c.f.set2(i, j, m, v[t]);
    ++t;
  }
  for (const auto& [i, j, k, m] : gslots_) {
    if (!is_zero(v[t])) c.g.set3(i, j, k, m, v[t]);
    ++t;
  }
  return c;
}

CochainCheck is_cochain(const HomLYSA& a, const CochainPair& c) {
  require_cochain_shape(a.space(), c);
  const SuperSpace& sp = a.space();
  const GradedMap& al = a.alpha();
  const int n = sp.dim();
  auto p = [&](int i) { return sp.parity(i); };
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y) {
      Vec skew = c.f.eval_basis2(x, y);
      axpy(skew, koszul_sign({{p(x), p(y)}}), c.f.eval_basis2(y, x));
      if (!is_zero_vec(skew)) return {false, "f-leading-skew", {x, y}};
      Vec equiv = c.f.eval2(al.col(x), al.col(y)) -
                  al.apply(c.f.eval_basis2(x, y));
      if (!is_zero_vec(equiv)) return {false, "f-twist-equivariance", {x, y}};
    }
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y)
      for (int z = 0; z < n; ++z) {
        Vec skew = c.g.eval_basis3(x, y, z);
        axpy(skew, koszul_sign({{p(x), p(y)}}), c.g.eval_basis3(y, x, z));
        if (!is_zero_vec(skew)) return {false, "g-leading-skew", {x, y, z}};
        Vec equiv = c.g.eval3(al.col(x), al.col(y), al.col(z)) -
                    al.apply(c.g.eval_basis3(x, y, z));
        if (!is_zero_vec(equiv))
          return {false, "g-twist-equivariance", {x, y, z}};
      }
  return {};
}

CochainCheck even_alternation_diagnostic(const HomLYSA& a,
                                         const CochainPair& c) {
  require_cochain_shape(a.space(), c);
  const int p = a.space().even_dim;
  const int n = a.dim();
  for (int x = 0; x < p; ++x) {
    if (!is_zero_vec(c.f.eval_basis2(x, x)))
      return {false, "f-even-repeated-argument", {x, x}};
    for (int y = 0; y < n; ++y)
      if (!is_zero_vec(c.g.eval_basis3(x, x, y)))
        return {false, "g-even-repeated-argument", {x, x, y}};
  }
  return {};
}

std::vector<GradedMap> one_cochain_basis(const HomLYSA& a) {
  EndoIndex idx(a.space(), Parity::even);
  LinearSystem sys(idx.size());
  add_commutation_rows(sys, idx, a.alpha(), 0);
  SubspaceBasis sol = nullspace(sys);
  std::vector<GradedMap> out;
  out.reserve(sol.dim());
  for (const Vec& v : sol.vectors()) out.push_back(idx.unpack(v));
  return out;
}

CochainPair delta1(const HomLYSA& a, const GradedMap& phi) {
  if (phi.domain() != a.space() || phi.codomain() != a.space())
    throw ValidationError("map must be an endomorphism of the algebra space");
  if (phi.parity() != Parity::even)
    throw ValidationError("coboundary is defined on even maps only");
  if (!phi.commutes_with(a.alpha()))
    throw ValidationError("coboundary requires a twist-commuting map");
  const int n = a.dim();
  CochainPair out = zero_cochain(a.space());
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y) {
      Vec v = a.eval2(phi.col(x), basis_vec(n, y)) +
              a.eval2(basis_vec(n, x), phi.col(y)) -
              phi.apply(a.bracket2().eval_basis2(x, y));
      for (int m = 0; m < n; ++m)
        if (!is_zero(v[m])) out.f.set2(x, y, m, v[m]);
    }
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y)
      for (int z = 0; z < n; ++z) {
        Vec v = a.eval3(phi.col(x), basis_vec(n, y), basis_vec(n, z)) +
                a.eval3(basis_vec(n, x), phi.col(y), basis_vec(n, z)) +
                a.eval3(basis_vec(n, x), basis_vec(n, y), phi.col(z)) -
                phi.apply(a.bracket3().eval_basis3(x, y, z));
        for (int m = 0; m < n; ++m)
          if (!is_zero(v[m])) out.g.set3(x, y, z, m, v[m]);
      }
  return out;
}

ResidualTensor::ResidualTensor(SuperSpace space, int arity)
    : space_(space), arity_(arity) {
  if (arity < 1 || arity > 5)
    throw ValidationError("residual tensor arity out of range");
  size_t count = 1;
  for (int i = 0; i < arity; ++i) count *= static_cast<size_t>(space_.dim());
  vals_.assign(count, zero_vec(space_.dim()));
}

size_t ResidualTensor::flat(std::span<const int> tuple) const {
  if (static_cast<int>(tuple.size()) != arity_)
    throw ValidationError("residual tensor tuple arity mismatch");
  size_t f = 0;
  for (int i : tuple) {
    if (i < 0 || i >= space_.dim())
      throw ValidationError("residual tensor index out of range");
    f = f * static_cast<size_t>(space_.dim()) + static_cast<size_t>(i);
  }
  return f;
}

bool ResidualTensor::is_zero() const {
  for (const Vec& v : vals_)
    if (!is_zero_vec(v)) return false;
  return true;
}

std::optional<std::vector<int>> ResidualTensor::first_nonzero() const {
  if (space_.dim() == 0) return std::nullopt;
  std::vector<int> tuple(arity_, 0);
  do {
    if (!is_zero_vec(at(tuple))) return tuple;
  } while (advance_tuple(tuple, space_.dim()));
  return std::nullopt;
}

std::string cocycle_eq_name(CocycleEq e) {
  return "E" + std::to_string(static_cast<int>(e) + 1);
}

int cocycle_eq_arity(CocycleEq e) {
  switch (e) {
    case CocycleEq::e1: return 3;
    case CocycleEq::e2: return 4;
    case CocycleEq::e3: return 4;
    case CocycleEq::e4: return 5;
  }
  throw InternalError("unknown cocycle component");
}

Vec cocycle_eq_residual(const HomLYSA& a, const CochainPair& c, CocycleEq e,
                        std::span<const int> tuple) {
  require_cochain_shape(a.space(), c);
  const SuperSpace& sp = a.space();
  const GradedMap& al = a.alpha();
  const int n = sp.dim();
  auto p = [&](int i) { return sp.parity(i); };
  auto av = [&](int i) { return al.col(i); };
  auto a2v = [&](int i) { return al.apply(al.col(i)); };

  switch (e) {
    case CocycleEq::e1: {
      // cyclic sum over rotations of (x, y, z), each weighted by
      // (-1)^{|first||third|}:  [f(x,y), az] + f([x,y], az) + g(x,y,z)
      Vec acc = zero_vec(n);
      int t[3] = {tuple[0], tuple[1], tuple[2]};
      for (int rot = 0; rot < 3; ++rot) {
        int x = t[rot % 3], y = t[(rot + 1) % 3], z = t[(rot + 2) % 3];
        Vec term = a.eval2(c.f.eval_basis2(x, y), av(z)) +
                   c.f.eval2(a.bracket2().eval_basis2(x, y), av(z)) +
                   c.g.eval_basis3(x, y, z);
        axpy(acc, koszul_sign({{p(x), p(z)}}), term);
      }
      return acc;
    }
    case CocycleEq::e2: {
      // cyclic sum over (x, y, z) with u held fixed:
      //   {f(x,y), az, au} + g([x,y], az, au)
      Vec acc = zero_vec(n);
      int t[3] = {tuple[0], tuple[1], tuple[2]};
      int u = tuple[3];
      for (int rot = 0; rot < 3; ++rot) {
        int x = t[rot % 3], y = t[(rot + 1) % 3], z = t[(rot + 2) % 3];
        Vec term = a.eval3(c.f.eval_basis2(x, y), av(z), av(u)) +
                   c.g.eval3(a.bracket2().eval_basis2(x, y), av(z), av(u));
        axpy(acc, koszul_sign({{p(x), p(z)}}), term);
      }
      return acc;
    }
    case CocycleEq::e3: {
      int x = tuple[0], y = tuple[1], u = tuple[2], v = tuple[3];
      Scalar s = koszul_sign({{p(u), p(x)}, {p(u), p(y)}});
      Vec res = a.eval3(av(x), av(y), c.f.eval_basis2(u, v)) +
                c.g.eval3(av(x), av(y), a.bracket2().eval_basis2(u, v)) -
                a.eval2(c.g.eval_basis3(x, y, u), a2v(v)) -
                c.f.eval2(a.bracket3().eval_basis3(x, y, u), a2v(v));
      Vec inner = a.eval2(a2v(u), c.g.eval_basis3(x, y, v)) +
                  c.f.eval2(a2v(u), a.bracket3().eval_basis3(x, y, v));
      axpy(res, -s, inner);
      return res;
    }
    case CocycleEq::e4: {
      int x = tuple[0], y = tuple[1], u = tuple[2], v = tuple[3],
          w = tuple[4];
      Scalar s1 = koszul_sign({{p(u), p(x)}, {p(u), p(y)}});
      Scalar s2 = koszul_sign(
          {{p(u), p(x)}, {p(u), p(y)}, {p(v), p(x)}, {p(v), p(y)}});
      Vec res =
          a.eval3(a2v(x), a2v(y), c.g.eval_basis3(u, v, w)) +
          c.g.eval3(a2v(x), a2v(y), a.bracket3().eval_basis3(u, v, w)) -
          a.eval3(c.g.eval_basis3(x, y, u), a2v(v), a2v(w)) -
          c.g.eval3(a.bracket3().eval_basis3(x, y, u), a2v(v), a2v(w));
      Vec mid = a.eval3(a2v(u), c.g.eval_basis3(x, y, v), a2v(w)) +
                c.g.eval3(a2v(u), a.bracket3().eval_basis3(x, y, v), a2v(w));
      axpy(res, -s1, mid);
      Vec last = a.eval3(a2v(u), a2v(v), c.g.eval_basis3(x, y, w)) +
                 c.g.eval3(a2v(u), a2v(v), a.bracket3().eval_basis3(x, y, w));
      axpy(res, -s2, last);
      return res;
    }
  }
  throw InternalError("unknown cocycle component");
}

bool CocycleResidual::is_zero() const {
  return E1.is_zero() && E2.is_zero() && E3.is_zero() && E4.is_zero();
}

std::optional<std::pair<CocycleEq, std::vector<int>>>
CocycleResidual::first_violation() const {
  if (auto t = E1.first_nonzero()) return {{CocycleEq::e1, *t}};
  if (auto t = E2.first_nonzero()) return {{CocycleEq::e2, *t}};
  if (auto t = E3.first_nonzero()) return {{CocycleEq::e3, *t}};
  if (auto t = E4.first_nonzero()) return {{CocycleEq::e4, *t}};
  return std::nullopt;
}

CocycleResidual cocycle_residual(const HomLYSA& a, const CochainPair& c) {
  CocycleResidual r;
  r.E1 = ResidualTensor(a.space(), 3);
  r.E2 = ResidualTensor(a.space(), 4);
  r.E3 = ResidualTensor(a.space(), 4);
  r.E4 = ResidualTensor(a.space(), 5);
  const int n = a.dim();
  if (n == 0) return r;
  for (int ei = 0; ei < cocycle_eq_count; ++ei) {
    CocycleEq e = static_cast<CocycleEq>(ei);
    ResidualTensor& dst = ei == 0   ? r.E1
                          : ei == 1 ? r.E2
                          : ei == 2 ? r.E3
                                    : r.E4;
    std::vector<int> tuple(cocycle_eq_arity(e), 0);
    do {
      dst.at(tuple) = cocycle_eq_residual(a, c, e, tuple);
    } while (advance_tuple(tuple, n));
  }
  return r;
}

namespace {

/// Concatenation of every residual output over all components and tuples,
/// in (component, tuple, coordinate) order; linear in the cochain.
Vec flat_cocycle_residual(const HomLYSA& a, const CochainPair& c) {
  const int n = a.dim();
  Vec out;
  for (int ei = 0; ei < cocycle_eq_count; ++ei) {
    CocycleEq e = static_cast<CocycleEq>(ei);
    std::vector<int> tuple(cocycle_eq_arity(e), 0);
    if (n == 0) continue;
    do {
      Vec r = cocycle_eq_residual(a, c, e, tuple);
      out.insert(out.end(), r.begin(), r.end());
    } while (advance_tuple(tuple, n));
  }
  return out;
}

/// Concatenation of the two defining-condition residuals of is_cochain over
/// all basis tuples; linear in the cochain.
Vec flat_cochain_conditions(const HomLYSA& a, const CochainPair& c) {
  const SuperSpace& sp = a.space();
  const GradedMap& al = a.alpha();
  const int n = sp.dim();
  auto p = [&](int i) { return sp.parity(i); };
  Vec out;
  auto append = [&](Vec v) { out.insert(out.end(), v.begin(), v.end()); };
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y) {
      Vec skew = c.f.eval_basis2(x, y);
      axpy(skew, koszul_sign({{p(x), p(y)}}), c.f.eval_basis2(y, x));
      append(std::move(skew));
      append(c.f.eval2(al.col(x), al.col(y)) -
             al.apply(c.f.eval_basis2(x, y)));
    }
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y)
      for (int z = 0; z < n; ++z) {
        Vec skew = c.g.eval_basis3(x, y, z);
        axpy(skew, koszul_sign({{p(x), p(y)}}), c.g.eval_basis3(y, x, z));
        append(std::move(skew));
        append(c.g.eval3(al.col(x), al.col(y), al.col(z)) -
               al.apply(c.g.eval_basis3(x, y, z)));
      }
  return out;
}

}  // namespace

SubspaceBasis cochain_basis(const HomLYSA& a) {
  CochainIndex idx(a.space());
  std::vector<Vec> columns;
  columns.reserve(idx.size());
  for (int t = 0; t < idx.size(); ++t)
    columns.push_back(
        flat_cochain_conditions(a, idx.unpack(basis_vec(idx.size(), t))));
  return kernel_of_columns(idx.size(), columns);
}

SubspaceBasis z23_basis(const HomLYSA& a) {
  CochainIndex idx(a.space());
  SubspaceBasis cb = cochain_basis(a);
  std::vector<Vec> columns;
  columns.reserve(cb.dim());
  for (const Vec& v : cb.vectors())
    columns.push_back(flat_cocycle_residual(a, idx.unpack(v)));
  SubspaceBasis coeffs = kernel_of_columns(cb.dim(), columns);
  std::vector<Vec> gens;
  gens.reserve(coeffs.dim());
  for (const Vec& cf : coeffs.vectors()) {
    Vec gen = zero_vec(idx.size());
    for (int t = 0; t < cb.dim(); ++t) axpy(gen, cf[t], cb.vectors()[t]);
    gens.push_back(std::move(gen));
  }
  return SubspaceBasis::from_generators(idx.size(), std::move(gens));
}

SubspaceBasis b23_basis(const HomLYSA& a) {
  CochainIndex idx(a.space());
  std::vector<Vec> gens;
  for (const GradedMap& phi : one_cochain_basis(a))
    gens.push_back(idx.pack(delta1(a, phi)));
  return SubspaceBasis::from_generators(idx.size(), std::move(gens));
}

CohomologyDims h23_dims(const HomLYSA& a) {
  SubspaceBasis z = z23_basis(a);
  SubspaceBasis b = b23_basis(a);
  if (!z.contains_subspace(b))
    throw InternalError(
        "coboundary space escaped the cocycle space; this is a library bug");
  CohomologyDims d;
  d.cochains = cochain_basis(a).dim();
  d.cocycles = z.dim();
  d.coboundaries = b.dim();
  d.h = z.dim() - b.dim();
  d.one_cochains = static_cast<int>(one_cochain_basis(a).size());
  return d;
}

std::optional<GradedMap> solve_coboundary(const HomLYSA& a,
                                          const CochainPair& c) {
  CochainIndex idx(a.space());
  Vec target = idx.pack(c);
  std::vector<GradedMap> ones = one_cochain_basis(a);
  std::vector<Vec> columns;
  columns.reserve(ones.size());
  for (const GradedMap& phi : ones) columns.push_back(idx.pack(delta1(a, phi)));
  LinearSystem sys(static_cast<int>(ones.size()));
  for (int r = 0; r < idx.size(); ++r) {
    Vec row = zero_vec(static_cast<int>(ones.size()));
    bool nonzero = false;
    for (size_t t = 0; t < ones.size(); ++t)
      if (!is_zero(columns[t][r])) {
        row[t] = columns[t][r];
        nonzero = true;
      }
    if (nonzero || !is_zero(target[r])) sys.add(std::move(row), target[r]);
  }
  SolveResult res = solve(sys);
  if (!res.consistent) return std::nullopt;
  GradedMap phi = GradedMap::zero(a.space(), a.space(), Parity::even);
  for (size_t t = 0; t < ones.size(); ++t)
    phi = phi + res.particular[t] * ones[t];
  return phi;
}

}  // namespace hly
