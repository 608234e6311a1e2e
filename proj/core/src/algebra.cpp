#include "hly/algebra.hpp"

#include "hly/errors.hpp"

#include <utility>

namespace hly {

namespace {

Parity tuple_parity(const SuperSpace& sp, std::span<const int> idx) {
  Parity p = Parity::even;
  for (int i : idx) p = p + sp.parity(i);
  return p;
}

}  // namespace

HomLYSA HomLYSA::make(SuperSpace space, MultiTensor bracket2,
                      MultiTensor bracket3, GradedMap alpha) {
  if (bracket2.arity() != 2)
    throw ValidationError("binary bracket must have arity 2");
  if (bracket3.arity() != 3)
    throw ValidationError("ternary bracket must have arity 3");
  if (bracket2.space() != space || bracket3.space() != space)
    throw ValidationError("bracket space does not match algebra space");
  if (bracket2.parity() != Parity::even || bracket3.parity() != Parity::even)
    throw ValidationError("brackets must be parity-preserving");
  if (alpha.domain() != space || alpha.codomain() != space)
    throw ValidationError("twist must be an endomorphism of the algebra space");
  if (alpha.parity() != Parity::even)
    throw ValidationError("twist must be an even map");
  HomLYSA a;
  a.space_ = space;
  a.bracket2_ = std::move(bracket2);
  a.bracket3_ = std::move(bracket3);
  a.alpha_ = std::move(alpha);
  return a;
}

HomLYSA HomLYSA::abelian(SuperSpace space) {
  return make(space, MultiTensor::zero(space, 2), MultiTensor::zero(space, 3),
              GradedMap::identity(space));
}

std::string axiom_name(Axiom a) {
  switch (a) {
    case Axiom::shly1: return "SHLY1";
    case Axiom::shly2: return "SHLY2";
    case Axiom::shly3: return "SHLY3";
    case Axiom::shly4: return "SHLY4";
    case Axiom::shly5: return "SHLY5";
    case Axiom::shly6: return "SHLY6";
    case Axiom::shly7: return "SHLY7";
    case Axiom::shly8: return "SHLY8";
  }
  throw InternalError("unknown axiom");
}

int axiom_arity(Axiom a) {
  switch (a) {
    case Axiom::shly1: return 2;
    case Axiom::shly2: return 3;
    case Axiom::shly3: return 2;
    case Axiom::shly4: return 3;
    case Axiom::shly5: return 3;
    case Axiom::shly6: return 4;
    case Axiom::shly7: return 4;
    case Axiom::shly8: return 5;
  }
  throw InternalError("unknown axiom");
}

Vec axiom_residual(const HomLYSA& a, Axiom ax, std::span<const int> tuple) {
  if (static_cast<int>(tuple.size()) != axiom_arity(ax))
    throw ValidationError("axiom residual needs one index per bound variable");
  const SuperSpace& sp = a.space();
  const MultiTensor& b2 = a.bracket2();
  const MultiTensor& b3 = a.bracket3();
  const GradedMap& al = a.alpha();
  auto p = [&](int i) { return sp.parity(i); };

  switch (ax) {
    case Axiom::shly1: {
      // alpha[x,y] - [alpha x, alpha y]
      int x = tuple[0], y = tuple[1];
      return al.apply(b2.eval_basis2(x, y)) -
             b2.eval2(al.col(x), al.col(y));
    }
    case Axiom::shly2: {
      // alpha{x,y,z} - {alpha x, alpha y, alpha z}
      int x = tuple[0], y = tuple[1], z = tuple[2];
      return al.apply(b3.eval_basis3(x, y, z)) -
             b3.eval3(al.col(x), al.col(y), al.col(z));
    }
    case Axiom::shly3: {
      // [x,y] + (-1)^{|x||y|}[y,x]
      int x = tuple[0], y = tuple[1];
      return b2.eval_basis2(x, y) +
             koszul_sign({{p(x), p(y)}}) * b2.eval_basis2(y, x);
    }
    case Axiom::shly4: {
      // {x,y,z} + (-1)^{|x||y|}{y,x,z}
      int x = tuple[0], y = tuple[1], z = tuple[2];
      return b3.eval_basis3(x, y, z) +
             koszul_sign({{p(x), p(y)}}) * b3.eval_basis3(y, x, z);
    }
    case Axiom::shly5: {
      // cyclic sum of (-1)^{|x||z|} ( [[x,y], alpha z] + {x,y,z} )
      int t[3] = {tuple[0], tuple[1], tuple[2]};
      Vec acc = zero_vec(sp.dim());
      for (int r = 0; r < 3; ++r) {
        int x = t[r], y = t[(r + 1) % 3], z = t[(r + 2) % 3];
        Scalar s = koszul_sign({{p(x), p(z)}});
        Vec term = b2.eval2(b2.eval_basis2(x, y), al.col(z)) +
                   b3.eval_basis3(x, y, z);
        axpy(acc, s, term);
      }
      return acc;
    }
    case Axiom::shly6: {
      // cyclic (over x,y,z) sum of (-1)^{|x||z|} {[x,y], alpha z, alpha w}
      int t[3] = {tuple[0], tuple[1], tuple[2]};
      int w = tuple[3];
      Vec acc = zero_vec(sp.dim());
      for (int r = 0; r < 3; ++r) {
        int x = t[r], y = t[(r + 1) % 3], z = t[(r + 2) % 3];
        Scalar s = koszul_sign({{p(x), p(z)}});
        Vec term = b3.eval3(b2.eval_basis2(x, y), al.col(z), al.col(w));
        axpy(acc, s, term);
      }
      return acc;
    }
    case Axiom::shly7: {
      // {alpha x, alpha y, [u,v]} - [{x,y,u}, alpha^2 v]
      //   - (-1)^{|u|(|x|+|y|)} [alpha^2 u, {x,y,v}]
      int x = tuple[0], y = tuple[1], u = tuple[2], v = tuple[3];
      Vec lhs = b3.eval3(al.col(x), al.col(y), b2.eval_basis2(u, v));
      Vec a2u = al.apply(al.col(u));
      Vec a2v = al.apply(al.col(v));
      Vec r1 = b2.eval2(b3.eval_basis3(x, y, u), a2v);
      Vec r2 = b2.eval2(a2u, b3.eval_basis3(x, y, v));
      Scalar s = koszul_sign({{p(u), p(x)}, {p(u), p(y)}});
      return lhs - r1 - s * r2;
    }
    case Axiom::shly8: {
      // {alpha^2 x, alpha^2 y, {u,v,w}} - {{x,y,u}, alpha^2 v, alpha^2 w}
      //   - (-1)^{|u|(|x|+|y|)} {alpha^2 u, {x,y,v}, alpha^2 w}
      //   - (-1)^{(|u|+|v|)(|x|+|y|)} {alpha^2 u, alpha^2 v, {x,y,w}}
      int x = tuple[0], y = tuple[1], u = tuple[2], v = tuple[3],
          w = tuple[4];
      Vec a2x = al.apply(al.col(x));
      Vec a2y = al.apply(al.col(y));
      Vec a2u = al.apply(al.col(u));
      Vec a2v = al.apply(al.col(v));
      Vec a2w = al.apply(al.col(w));
      Vec lhs = b3.eval3(a2x, a2y, b3.eval_basis3(u, v, w));
      Vec r1 = b3.eval3(b3.eval_basis3(x, y, u), a2v, a2w);
      Vec r2 = b3.eval3(a2u, b3.eval_basis3(x, y, v), a2w);
      Vec r3 = b3.eval3(a2u, a2v, b3.eval_basis3(x, y, w));
      Scalar s2 = koszul_sign({{p(u), p(x)}, {p(u), p(y)}});
      Scalar s3 = koszul_sign(
          {{p(u), p(x)}, {p(u), p(y)}, {p(v), p(x)}, {p(v), p(y)}});
      return lhs - r1 - s2 * r2 - s3 * r3;
    }
  }
  throw InternalError("unknown axiom");
}

AxiomReport verify_axioms(const HomLYSA& a) {
  AxiomReport rep;
  const int n = a.dim();
  for (int ai = 0; ai < axiom_count; ++ai) {
    Axiom ax = static_cast<Axiom>(ai);
    AxiomStatus& st = rep.status[ai];
    std::vector<int> tuple(axiom_arity(ax), 0);
    if (n == 0) continue;
    do {
      Vec r = axiom_residual(a, ax, tuple);
      if (!is_zero_vec(r)) {
        st.pass = false;
        ++st.violations;
        if (!st.witness) st.witness = AxiomWitness{tuple, std::move(r)};
      }
    } while (advance_tuple(tuple, n));
  }
  return rep;
}

QuickCheck verify_axioms_quick(const HomLYSA& a) {
  QuickCheck qc;
  const int n = a.dim();
  if (n == 0) return qc;
  for (int ai = 0; ai < axiom_count; ++ai) {
    Axiom ax = static_cast<Axiom>(ai);
    std::vector<int> tuple(axiom_arity(ax), 0);
    do {
      if (!is_zero_vec(axiom_residual(a, ax, tuple))) {
        qc.pass = false;
        qc.first_failure = {ax, tuple};
        return qc;
      }
    } while (advance_tuple(tuple, n));
  }
  return qc;
}

DegenerateTags classify_degenerate(const HomLYSA& a) {
  DegenerateTags t;
  t.untwisted = a.alpha().is_identity();
  t.supertriple = a.bracket2().is_zero();
  t.hom_lie = a.bracket3().is_zero();
  return t;
}

HomLYSA embed_hom_lie_super(SuperSpace space, MultiTensor bracket2,
                            GradedMap alpha) {
  return HomLYSA::make(space, std::move(bracket2), MultiTensor::zero(space, 3),
                       std::move(alpha));
}

CandidateResult candidate_from_binary(SuperSpace space, MultiTensor bracket2,
                                      GradedMap alpha) {
  if (bracket2.arity() != 2)
    throw ValidationError("binary bracket must have arity 2");
  const int n = space.dim();
  MultiTensor b3 = MultiTensor::zero(space, 3);
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y) {
      Vec xy = bracket2.eval_basis2(x, y);
      for (int z = 0; z < n; ++z) {
        Vec val = bracket2.eval2(xy, alpha.col(z));
        for (int k = 0; k < n; ++k)
          if (!is_zero(val[k])) b3.set3(x, y, z, k, val[k]);
      }
    }
  HomLYSA cand =
      HomLYSA::make(space, std::move(bracket2), std::move(b3), std::move(alpha));
  CandidateResult res;
  res.report = verify_axioms(cand);
  if (res.report.all_pass()) res.algebra = std::move(cand);
  return res;
}

MorphismCheck is_morphism(const GradedMap& phi, const HomLYSA& a,
                          const HomLYSA& b) {
  if (phi.domain() != a.space() || phi.codomain() != b.space())
    throw ValidationError("morphism shape does not match the two algebras");
  if (phi.parity() != Parity::even)
    throw ValidationError("morphism must be an even map");
  MorphismCheck mc;
  // phi . alpha_a == alpha_b . phi
  if (phi.compose(a.alpha()) != b.alpha().compose(phi)) {
    mc.ok = false;
    mc.condition = "twist";
    return mc;
  }
  const int n = a.dim();
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y) {
      Vec lhs = phi.apply(a.bracket2().eval_basis2(x, y));
      Vec rhs = b.eval2(phi.col(x), phi.col(y));
      if (lhs != rhs) {
        mc.ok = false;
        mc.condition = "binary";
        mc.tuple = {x, y};
        return mc;
      }
    }
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y)
      for (int z = 0; z < n; ++z) {
        Vec lhs = phi.apply(a.bracket3().eval_basis3(x, y, z));
        Vec rhs = b.eval3(phi.col(x), phi.col(y), phi.col(z));
        if (lhs != rhs) {
          mc.ok = false;
          mc.condition = "ternary";
          mc.tuple = {x, y, z};
          return mc;
        }
      }
  return mc;
}

}  // namespace hly
