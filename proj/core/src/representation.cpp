#include "hly/representation.hpp"

#include "hly/errors.hpp"

#include <utility>

namespace hly {

namespace {

Parity pair_parity(const SuperSpace& sp, int i, int j) {
  return sp.parity(i) + sp.parity(j);
}

}  // namespace

RepTriple RepTriple::make(SuperSpace algebra_space, SuperSpace module_space,
                          GradedMap beta, std::vector<GradedMap> rho,
                          std::vector<GradedMap> Dmap,
                          std::vector<GradedMap> theta) {
  const int n = algebra_space.dim();
  if (static_cast<int>(rho.size()) != n)
    throw ValidationError("rho must have one endomorphism per basis vector");
  if (static_cast<int>(Dmap.size()) != n * n ||
      static_cast<int>(theta.size()) != n * n)
    throw ValidationError(
        "D and theta must have one endomorphism per ordered basis pair");
  if (beta.domain() != module_space || beta.codomain() != module_space)
    throw ValidationError("beta must be an endomorphism of the module space");
  if (beta.parity() != Parity::even)
    throw ValidationError("beta must be an even map");
  for (int i = 0; i < n; ++i) {
    if (rho[i].domain() != module_space || rho[i].codomain() != module_space)
      throw ValidationError("rho values must be endomorphisms of the module");
    if (rho[i].parity() != algebra_space.parity(i))
      throw ValidationError(
          "rho(e_i) must be homogeneous of the parity of e_i");
  }
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      const GradedMap& d = Dmap[i * n + j];
      const GradedMap& t = theta[i * n + j];
      if (d.domain() != module_space || d.codomain() != module_space ||
          t.domain() != module_space || t.codomain() != module_space)
        throw ValidationError(
            "D and theta values must be endomorphisms of the module");
      Parity want = pair_parity(algebra_space, i, j);
      if (d.parity() != want || t.parity() != want)
        throw ValidationError(
            "D(e_i,e_j) and theta(e_i,e_j) must have parity |e_i|+|e_j|");
    }
  RepTriple r;
  r.algebra_space_ = algebra_space;
  r.module_space_ = module_space;
  r.beta_ = std::move(beta);
  r.rho_ = std::move(rho);
  r.Dmap_ = std::move(Dmap);
  r.theta_ = std::move(theta);
  return r;
}

RepTriple RepTriple::zero(const SuperSpace& algebra_space,
                          const SuperSpace& module_space) {
  const int n = algebra_space.dim();
  std::vector<GradedMap> rho;
  std::vector<GradedMap> dm;
  std::vector<GradedMap> th;
  rho.reserve(n);
  for (int i = 0; i < n; ++i)
    rho.push_back(GradedMap::zero(module_space, module_space,
                                  algebra_space.parity(i)));
  dm.reserve(n * n);
  th.reserve(n * n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      Parity p = pair_parity(algebra_space, i, j);
      dm.push_back(GradedMap::zero(module_space, module_space, p));
      th.push_back(GradedMap::zero(module_space, module_space, p));
    }
  return make(algebra_space, module_space, GradedMap::identity(module_space),
              std::move(rho), std::move(dm), std::move(th));
}

Mat RepTriple::rho_mat(const Vec& x) const {
  const int m = module_space_.dim();
  Mat out(m, m);
  for (size_t i = 0; i < x.size(); ++i) {
    if (is_zero(x[i])) continue;
    out = out + x[i] * rho_[i].mat();
  }
  return out;
}

Mat RepTriple::D_mat(const Vec& x, const Vec& y) const {
  const int n = algebra_space_.dim();
  const int m = module_space_.dim();
  Mat out(m, m);
  for (int i = 0; i < n; ++i) {
    if (is_zero(x[i])) continue;
    for (int j = 0; j < n; ++j) {
      if (is_zero(y[j])) continue;
      out = out + (x[i] * y[j]) * Dmap_[i * n + j].mat();
    }
  }
  return out;
}

Mat RepTriple::theta_mat(const Vec& x, const Vec& y) const {
  const int n = algebra_space_.dim();
  const int m = module_space_.dim();
  Mat out(m, m);
  for (int i = 0; i < n; ++i) {
    if (is_zero(x[i])) continue;
    for (int j = 0; j < n; ++j) {
      if (is_zero(y[j])) continue;
      out = out + (x[i] * y[j]) * theta_[i * n + j].mat();
    }
  }
  return out;
}

std::string rep_condition_name(RepCondition c) {
  return "SHR" + std::to_string(static_cast<int>(c) + 1);
}

int rep_condition_arity(RepCondition c) {
  switch (c) {
    case RepCondition::shr1: return 1;
    case RepCondition::shr2:
    case RepCondition::shr3:
    case RepCondition::shr4: return 2;
    case RepCondition::shr5:
    case RepCondition::shr6:
    case RepCondition::shr7:
    case RepCondition::shr8: return 3;
    case RepCondition::shr9:
    case RepCondition::shr10: return 4;
  }
  throw InternalError("unknown representation condition");
}

Mat rep_condition_residual(const HomLYSA& a, const RepTriple& r,
                           RepCondition c, std::span<const int> tuple) {
  if (static_cast<int>(tuple.size()) != rep_condition_arity(c))
    throw ValidationError(
        "condition residual needs one index per bound variable");
  const SuperSpace& sp = a.space();
  const GradedMap& al = a.alpha();
  const Mat& beta = r.beta().mat();
  auto p = [&](int i) { return sp.parity(i); };
  auto e = [&](int i) { return basis_vec(sp.dim(), i); };
  auto av = [&](int i) { return al.col(i); };
  auto a2v = [&](int i) { return al.apply(al.col(i)); };

  switch (c) {
    case RepCondition::shr1: {
      // rho(alpha x) beta - beta rho(alpha x)
      Mat rax = r.rho_mat(av(tuple[0]));
      return rax * beta - beta * rax;
    }
    case RepCondition::shr2: {
      int x = tuple[0], y = tuple[1];
      return r.D_mat(av(x), av(y)) * beta - beta * r.D_mat(e(x), e(y));
    }
    case RepCondition::shr3: {
      int x = tuple[0], y = tuple[1];
      return r.theta_mat(av(x), av(y)) * beta - beta * r.theta_mat(e(x), e(y));
    }
    case RepCondition::shr4: {
      // D(x,y) - (-1)^{|x||y|} theta(y,x) + theta(x,y) + rho([x,y]) beta
      //   - rho(alpha x) rho(y) + (-1)^{|x||y|} rho(alpha y) rho(x)
      int x = tuple[0], y = tuple[1];
      Scalar s = koszul_sign({{p(x), p(y)}});
      Mat res = r.D_mat(e(x), e(y)) - s * r.theta_mat(e(y), e(x)) +
                r.theta_mat(e(x), e(y)) +
                r.rho_mat(a.bracket2().eval_basis2(x, y)) * beta -
                r.rho_mat(av(x)) * r.rho_mat(e(y)) +
                s * (r.rho_mat(av(y)) * r.rho_mat(e(x)));
      return res;
    }
    case RepCondition::shr5: {
      // D([x,y], alpha z) + (-1)^{|x|(|y|+|z|)} D([y,z], alpha x)
      //   + (-1)^{|z|(|x|+|y|)} D([z,x], alpha y)
      int x = tuple[0], y = tuple[1], z = tuple[2];
      Scalar s1 = koszul_sign({{p(x), p(y)}, {p(x), p(z)}});
      Scalar s2 = koszul_sign({{p(z), p(x)}, {p(z), p(y)}});
      return r.D_mat(a.bracket2().eval_basis2(x, y), av(z)) +
             s1 * r.D_mat(a.bracket2().eval_basis2(y, z), av(x)) +
             s2 * r.D_mat(a.bracket2().eval_basis2(z, x), av(y));
    }
    case RepCondition::shr6: {
      // theta([x,y], alpha z) beta - (-1)^{|y||z|} theta(alpha x, alpha z)
      //   rho(y) + (-1)^{|x|(|y|+|z|)} theta(alpha y, alpha z) rho(x)
      int x = tuple[0], y = tuple[1], z = tuple[2];
      Scalar s1 = koszul_sign({{p(y), p(z)}});
      Scalar s2 = koszul_sign({{p(x), p(y)}, {p(x), p(z)}});
      return r.theta_mat(a.bracket2().eval_basis2(x, y), av(z)) * beta -
             s1 * (r.theta_mat(av(x), av(z)) * r.rho_mat(e(y))) +
             s2 * (r.theta_mat(av(y), av(z)) * r.rho_mat(e(x)));
    }
    case RepCondition::shr7: {
      // D(alpha x, alpha y) rho(z) - (-1)^{|z|(|x|+|y|)} rho(alpha^2 z)
      //   D(x,y) - rho({x,y,z}) beta^2
      int x = tuple[0], y = tuple[1], z = tuple[2];
      Scalar s = koszul_sign({{p(z), p(x)}, {p(z), p(y)}});
      return r.D_mat(av(x), av(y)) * r.rho_mat(e(z)) -
             s * (r.rho_mat(a2v(z)) * r.D_mat(e(x), e(y))) -
             r.rho_mat(a.bracket3().eval_basis3(x, y, z)) * (beta * beta);
    }
    case RepCondition::shr8: {
      // theta(alpha x, [y,z]) beta - (-1)^{|x||y|} rho(alpha^2 y) theta(x,z)
      //   + (-1)^{|z|(|x|+|y|)} rho(alpha^2 z) theta(x,y)
      int x = tuple[0], y = tuple[1], z = tuple[2];
      Scalar s1 = koszul_sign({{p(x), p(y)}});
      Scalar s2 = koszul_sign({{p(z), p(x)}, {p(z), p(y)}});
      return r.theta_mat(av(x), a.bracket2().eval_basis2(y, z)) * beta -
             s1 * (r.rho_mat(a2v(y)) * r.theta_mat(e(x), e(z))) +
             s2 * (r.rho_mat(a2v(z)) * r.theta_mat(e(x), e(y)));
    }
    case RepCondition::shr9: {
      // D(a2 x, a2 y) theta(u,v)
      //   - (-1)^{(|u|+|v|)(|x|+|y|)} theta(a2 u, a2 v) D(x,y)
      //   - theta({x,y,u}, a2 v) beta^2
      //   - (-1)^{|u|(|x|+|y|)} theta(a2 u, {x,y,v}) beta^2
      int x = tuple[0], y = tuple[1], u = tuple[2], v = tuple[3];
      Mat b2m = beta * beta;
      Scalar s1 = koszul_sign(
          {{p(u), p(x)}, {p(u), p(y)}, {p(v), p(x)}, {p(v), p(y)}});
      Scalar s2 = koszul_sign({{p(u), p(x)}, {p(u), p(y)}});
      return r.D_mat(a2v(x), a2v(y)) * r.theta_mat(e(u), e(v)) -
             s1 * (r.theta_mat(a2v(u), a2v(v)) * r.D_mat(e(x), e(y))) -
             r.theta_mat(a.bracket3().eval_basis3(x, y, u), a2v(v)) * b2m -
             s2 * (r.theta_mat(a2v(u), a.bracket3().eval_basis3(x, y, v)) *
                   b2m);
    }
    case RepCondition::shr10: {
      // theta(a2 x, {y,z,u}) beta^2
      //   - (-1)^{(|z|+|u|)(|x|+|y|)} theta(a2 z, a2 u) theta(x,y)
      //   + (-1)^{|y||z|} theta(a2 y, a2 u) theta(x,z)
      //   - (-1)^{|x|(|y|+|z|)} D(a2 y, a2 z) theta(x,u)
      int x = tuple[0], y = tuple[1], z = tuple[2], u = tuple[3];
      Mat b2m = beta * beta;
      Scalar s1 = koszul_sign(
          {{p(z), p(x)}, {p(z), p(y)}, {p(u), p(x)}, {p(u), p(y)}});
      Scalar s2 = koszul_sign({{p(y), p(z)}});
      Scalar s3 = koszul_sign({{p(x), p(y)}, {p(x), p(z)}});
      return r.theta_mat(a2v(x), a.bracket3().eval_basis3(y, z, u)) * b2m -
             s1 * (r.theta_mat(a2v(z), a2v(u)) * r.theta_mat(e(x), e(y))) +
             s2 * (r.theta_mat(a2v(y), a2v(u)) * r.theta_mat(e(x), e(z))) -
             s3 * (r.D_mat(a2v(y), a2v(z)) * r.theta_mat(e(x), e(u)));
    }
  }
  throw InternalError("unknown representation condition");
}

RepReport verify_representation(const HomLYSA& a, const RepTriple& r) {
  if (r.algebra_space() != a.space())
    throw ValidationError("representation algebra space mismatch");
  RepReport rep;
  const int n = a.dim();
  for (int ci = 0; ci < rep_condition_count; ++ci) {
    RepCondition c = static_cast<RepCondition>(ci);
    RepStatus& st = rep.status[ci];
    if (n == 0) continue;
    std::vector<int> tuple(rep_condition_arity(c), 0);
    do {
      Mat res = rep_condition_residual(a, r, c, tuple);
      if (!res.is_zero_mat()) {
        st.pass = false;
        ++st.violations;
        if (!st.witness) st.witness = RepWitness{tuple, std::move(res)};
      }
    } while (advance_tuple(tuple, n));
  }
  return rep;
}

RepQuickCheck verify_representation_quick(const HomLYSA& a,
                                          const RepTriple& r) {
  if (r.algebra_space() != a.space())
    throw ValidationError("representation algebra space mismatch");
  RepQuickCheck qc;
  const int n = a.dim();
  if (n == 0) return qc;
  for (int ci = 0; ci < rep_condition_count; ++ci) {
    RepCondition c = static_cast<RepCondition>(ci);
    std::vector<int> tuple(rep_condition_arity(c), 0);
    do {
      if (!rep_condition_residual(a, r, c, tuple).is_zero_mat()) {
        qc.pass = false;
        qc.first_failure = {c, tuple};
        return qc;
      }
    } while (advance_tuple(tuple, n));
  }
  return qc;
}

Shr1AltDiagnostic shr1_alternative_diagnostic(const HomLYSA& a,
                                              const RepTriple& r) {
  Shr1AltDiagnostic d;
  const Mat& beta = r.beta().mat();
  for (int x = 0; x < a.dim(); ++x) {
    Mat res = beta * r.rho_mat(basis_vec(a.dim(), x)) -
              r.rho_mat(a.alpha().col(x)) * beta;
    if (!res.is_zero_mat()) {
      d.pass = false;
      d.witness = RepWitness{{x}, std::move(res)};
      return d;
    }
  }
  return d;
}

SuperSpace SplitSpec::total() const {
  return SuperSpace{algebra_space.even_dim + module_space.even_dim,
                    algebra_space.odd_dim + module_space.odd_dim};
}

int SplitSpec::algebra_index(int i) const {
  if (i < algebra_space.even_dim) return i;
  return module_space.even_dim + i;
}

int SplitSpec::module_index(int a) const {
  if (a < module_space.even_dim) return algebra_space.even_dim + a;
  return algebra_space.even_dim + algebra_space.odd_dim + a;
}

HomLYSA semidirect_sum(const HomLYSA& a, const RepTriple& r) {
  if (r.algebra_space() != a.space())
    throw ValidationError("representation algebra space mismatch");
  SplitSpec split{a.space(), r.module_space()};
  SuperSpace total = split.total();
  const int n = a.dim();
  const int m = r.module_space().dim();
  const int N = total.dim();

  auto pL = [&](int i) { return bit(a.space().parity(i)); };
  auto pV = [&](int b) { return bit(r.module_space().parity(b)); };

  MultiTensor b2 = MultiTensor::zero(total, 2);
  MultiTensor b3 = MultiTensor::zero(total, 3);

  auto put2 = [&](int out, int i, int j, const Scalar& c) {
    if (!is_zero(c)) b2.set2(i, j, out, b2.at2(i, j, out) + c);
  };
  auto put3 = [&](int out, int i, int j, int k, const Scalar& c) {
    if (!is_zero(c)) b3.set3(i, j, k, out, b3.at3(i, j, k, out) + c);
  };

  // [e_i, e_j] = [e_i, e_j]_L
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      Vec v = a.bracket2().eval_basis2(i, j);
      for (int mm = 0; mm < n; ++mm)
        put2(split.algebra_index(mm), split.algebra_index(i),
             split.algebra_index(j), v[mm]);
    }
  // [e_i, v_b] = rho(e_i) v_b ; [v_a, e_j] = -(-1)^{|v_a||e_j|} rho(e_j) v_a
  for (int i = 0; i < n; ++i)
    for (int b = 0; b < m; ++b) {
      Vec v = r.rho(i).col(b);
      for (int mm = 0; mm < m; ++mm) {
        put2(split.module_index(mm), split.algebra_index(i),
             split.module_index(b), v[mm]);
        put2(split.module_index(mm), split.module_index(b),
             split.algebra_index(i),
             parity_sign(pV(b) * pL(i)) * -v[mm]);
      }
    }
  // {e_i, e_j, e_k} = {e_i,e_j,e_k}_L
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      for (int k = 0; k < n; ++k) {
        Vec v = a.bracket3().eval_basis3(i, j, k);
        for (int mm = 0; mm < n; ++mm)
          put3(split.algebra_index(mm), split.algebra_index(i),
               split.algebra_index(j), split.algebra_index(k), v[mm]);
      }
  // {e_i, e_j, v_c} = D(e_i,e_j) v_c
  // {e_i, v_b, e_k} = -(-1)^{|v_b||e_k|} theta(e_i,e_k) v_b
  // {v_a, e_j, e_k} = (-1)^{|v_a|(|e_j|+|e_k|)} theta(e_j,e_k) v_a
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      for (int c = 0; c < m; ++c) {
        Vec v = r.Dmap(i, j).col(c);
        for (int mm = 0; mm < m; ++mm)
          put3(split.module_index(mm), split.algebra_index(i),
               split.algebra_index(j), split.module_index(c), v[mm]);
      }
  for (int i = 0; i < n; ++i)
    for (int b = 0; b < m; ++b)
      for (int k = 0; k < n; ++k) {
        Vec v = r.theta(i, k).col(b);
        for (int mm = 0; mm < m; ++mm)
          put3(split.module_index(mm), split.algebra_index(i),
               split.module_index(b), split.algebra_index(k),
               parity_sign(pV(b) * pL(k)) * -v[mm]);
      }
  for (int b = 0; b < m; ++b)
    for (int j = 0; j < n; ++j)
      for (int k = 0; k < n; ++k) {
        Vec v = r.theta(j, k).col(b);
        for (int mm = 0; mm < m; ++mm)
          put3(split.module_index(mm), split.module_index(b),
               split.algebra_index(j), split.algebra_index(k),
               parity_sign(pV(b) * (pL(j) + pL(k))) * v[mm]);
      }

  // (alpha + beta): block diagonal in the combined ordering
  Mat am(N, N);
  for (int i = 0; i < n; ++i) {
    Vec col = a.alpha().col(i);
    for (int rr = 0; rr < n; ++rr)
      am.at(split.algebra_index(rr), split.algebra_index(i)) = col[rr];
  }
  for (int b = 0; b < m; ++b) {
    Vec col = r.beta().col(b);
    for (int rr = 0; rr < m; ++rr)
      am.at(split.module_index(rr), split.module_index(b)) = col[rr];
  }
  return HomLYSA::make(total, std::move(b2), std::move(b3),
                       GradedMap::make(total, total, Parity::even,
                                       std::move(am)));
}

namespace {

struct SplitView {
  const SplitSpec& split;
  std::vector<int> which;  // 0 = algebra, 1 = module
  std::vector<int> local;  // index within its own space

  explicit SplitView(const SplitSpec& sp) : split(sp) {
    int N = sp.total().dim();
    which.assign(N, -1);
    local.assign(N, -1);
    for (int i = 0; i < sp.algebra_space.dim(); ++i) {
      which[sp.algebra_index(i)] = 0;
      local[sp.algebra_index(i)] = i;
    }
    for (int a = 0; a < sp.module_space.dim(); ++a) {
      which[sp.module_index(a)] = 1;
      local[sp.module_index(a)] = a;
    }
  }
};

}  // namespace

RepTriple extract_rep(const HomLYSA& s, const SplitSpec& split) {
  if (s.space() != split.total())
    throw ValidationError("split dimensions do not match the algebra space");
  SplitView view(split);
  const int N = s.dim();
  const int n = split.algebra_space.dim();
  const int m = split.module_space.dim();

  // compatibility: any bracket output with >= 1 module argument stays in the
  // module block, any two-module-argument bracket vanishes, algebra-only
  // brackets stay in the algebra block, and the twist is block-diagonal.
  auto check_output = [&](const Vec& v, int want_block, const char* what) {
    for (int r = 0; r < N; ++r)
      if (!is_zero(v[r]) && view.which[r] != want_block)
        throw ValidationError(std::string(what) +
                              ": output leaves its required block");
  };
  for (int i = 0; i < N; ++i)
    for (int j = 0; j < N; ++j) {
      Vec v = s.bracket2().eval_basis2(i, j);
      int nmod = (view.which[i] == 1) + (view.which[j] == 1);
      if (nmod == 0)
        check_output(v, 0, "binary bracket of two algebra vectors");
      else if (nmod == 1)
        check_output(v, 1, "binary bracket of algebra and module vectors");
      else if (!is_zero_vec(v))
        throw ValidationError(
            "binary bracket of two module vectors must vanish");
    }
  for (int i = 0; i < N; ++i)
    for (int j = 0; j < N; ++j)
      for (int k = 0; k < N; ++k) {
        Vec v = s.bracket3().eval_basis3(i, j, k);
        int nmod = (view.which[i] == 1) + (view.which[j] == 1) +
                   (view.which[k] == 1);
        if (nmod == 0)
          check_output(v, 0, "ternary bracket of three algebra vectors");
        else if (nmod == 1)
          check_output(v, 1, "ternary bracket with one module vector");
        else if (!is_zero_vec(v))
          throw ValidationError(
              "ternary bracket with two or more module vectors must vanish");
      }
  for (int c = 0; c < N; ++c) {
    Vec v = s.alpha().col(c);
    for (int r = 0; r < N; ++r)
      if (!is_zero(v[r]) && view.which[r] != view.which[c])
        throw ValidationError("twist is not block-diagonal for the split");
  }

  // beta = module block of the twist
  Mat bm(m, m);
  for (int b = 0; b < m; ++b) {
    Vec col = s.alpha().col(split.module_index(b));
    for (int rr = 0; rr < m; ++rr) bm.at(rr, b) = col[split.module_index(rr)];
  }
  GradedMap beta = GradedMap::make(split.module_space, split.module_space,
                                   Parity::even, std::move(bm));

  auto module_part = [&](const Vec& v) {
    Vec out = zero_vec(m);
    for (int r = 0; r < N; ++r)
      if (!is_zero(v[r])) out[view.local[r]] = v[r];
    return out;
  };

  // rho(e_i) v_b = [l_i, v_b]
  std::vector<GradedMap> rho;
  rho.reserve(n);
  for (int i = 0; i < n; ++i) {
    Mat rm(m, m);
    for (int b = 0; b < m; ++b) {
      Vec v = module_part(s.bracket2().eval_basis2(split.algebra_index(i),
                                                   split.module_index(b)));
      for (int rr = 0; rr < m; ++rr) rm.at(rr, b) = v[rr];
    }
    rho.push_back(GradedMap::make(split.module_space, split.module_space,
                                  split.algebra_space.parity(i),
                                  std::move(rm)));
  }

  // D(e_i,e_j) w_c = {l_i, l_j, v_c}
  // theta(e_j,e_k) v_a = (-1)^{|v_a|(|e_j|+|e_k|)} {v_a, l_j, l_k}
  std::vector<GradedMap> dm;
  std::vector<GradedMap> th;
  dm.reserve(n * n);
  th.reserve(n * n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      Parity pp = split.algebra_space.parity(i) + split.algebra_space.parity(j);
      Mat dmat(m, m);
      Mat tmat(m, m);
      for (int b = 0; b < m; ++b) {
        Vec dv = module_part(s.bracket3().eval_basis3(
            split.algebra_index(i), split.algebra_index(j),
            split.module_index(b)));
        for (int rr = 0; rr < m; ++rr) dmat.at(rr, b) = dv[rr];
        Vec tv = module_part(s.bracket3().eval_basis3(
            split.module_index(b), split.algebra_index(i),
            split.algebra_index(j)));
        Scalar sg = parity_sign(
            bit(split.module_space.parity(b)) *
            (bit(split.algebra_space.parity(i)) +
             bit(split.algebra_space.parity(j))));
        for (int rr = 0; rr < m; ++rr) tmat.at(rr, b) = sg * tv[rr];
      }
      dm.push_back(GradedMap::make(split.module_space, split.module_space, pp,
                                   std::move(dmat)));
      th.push_back(GradedMap::make(split.module_space, split.module_space, pp,
                                   std::move(tmat)));
    }

  return RepTriple::make(split.algebra_space, split.module_space,
                         std::move(beta), std::move(rho), std::move(dm),
                         std::move(th));
}

}  // namespace hly
