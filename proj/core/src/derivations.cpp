#include "hly/derivations.hpp"

#include "hly/errors.hpp"

#include <array>
#include <functional>
#include <utility>

namespace hly {

std::string family_name(Family f) {
  switch (f) {
    case Family::der: return "der";
    case Family::gder: return "gder";
    case Family::qder: return "qder";
    case Family::centroid: return "centroid";
    case Family::qcentroid: return "qcentroid";
    case Family::zder: return "zder";
  }
  throw InternalError("unknown operator family");
}

int family_witness_count(Family f) {
  switch (f) {
    case Family::gder: return 3;
    case Family::qder: return 2;
    default: return 0;
  }
}

namespace {

int block_count(Family f) { return 1 + family_witness_count(f); }

/// Visits every defining condition of the family on every basis tuple as
/// (condition name, tuple, residual vector); stops when the visitor returns
/// false. blocks[0] is the defining map, the rest its partner maps.
/// The twist-commutation requirement of each block is visited first (empty
/// tuple, residual = the commutator matrix flattened row-major).
bool for_each_family_condition(
    const HomLYSA& a, Family fam, int k, const std::vector<GradedMap>& blocks,
    const std::function<bool(const char*, std::span<const int>, const Vec&)>&
        visit) {
  const SuperSpace& sp = a.space();
  const int n = sp.dim();
  const Parity s = blocks[0].parity();
  const GradedMap ak = a.alpha().pow(k);
  auto p = [&](int i) { return sp.parity(i); };
  auto sg1 = [&](int x) { return koszul_sign({{s, p(x)}}); };
  auto sg2 = [&](int x, int y) {
    return koszul_sign({{s, p(x)}, {s, p(y)}});
  };
  const std::span<const int> no_tuple;

  for (const GradedMap& b : blocks) {
    Mat comm = a.alpha().mat() * b.mat() - b.mat() * a.alpha().mat();
    Vec flat;
    flat.reserve(static_cast<size_t>(n) * n);
    for (int r = 0; r < n; ++r)
      for (int c = 0; c < n; ++c) flat.push_back(comm.at(r, c));
    if (!visit("twist-commutation", no_tuple, flat)) return false;
  }

  const GradedMap& D = blocks[0];
  switch (fam) {
    case Family::der:
    case Family::qder:
    case Family::gder: {
      const GradedMap& B2 = fam == Family::gder ? blocks[1] : blocks[0];
      const GradedMap& Bout = fam == Family::der    ? blocks[0]
                              : fam == Family::qder ? blocks[1]
                                                    : blocks[2];
      const GradedMap& T2 = fam == Family::gder ? blocks[1] : blocks[0];
      const GradedMap& T3 = fam == Family::gder ? blocks[2] : blocks[0];
      const GradedMap& Tout = fam == Family::der    ? blocks[0]
                              : fam == Family::qder ? blocks[2]
                                                    : blocks[3];
      for (int x = 0; x < n; ++x)
        for (int y = 0; y < n; ++y) {
          std::array<int, 2> t{x, y};
          Vec r = a.eval2(D.col(x), ak.col(y));
          axpy(r, sg1(x), a.eval2(ak.col(x), B2.col(y)));
          r = r - Bout.apply(a.bracket2().eval_basis2(x, y));
          if (!visit("binary-rule", t, r)) return false;
        }
      for (int x = 0; x < n; ++x)
        for (int y = 0; y < n; ++y)
          for (int z = 0; z < n; ++z) {
            std::array<int, 3> t{x, y, z};
            Vec r = a.eval3(D.col(x), ak.col(y), ak.col(z));
            axpy(r, sg1(x), a.eval3(ak.col(x), T2.col(y), ak.col(z)));
            axpy(r, sg2(x, y), a.eval3(ak.col(x), ak.col(y), T3.col(z)));
            r = r - Tout.apply(a.bracket3().eval_basis3(x, y, z));
            if (!visit("ternary-rule", t, r)) return false;
          }
      return true;
    }
    case Family::centroid:
    case Family::qcentroid: {
      const bool with_image = fam == Family::centroid;
      for (int x = 0; x < n; ++x)
        for (int y = 0; y < n; ++y) {
          std::array<int, 2> t{x, y};
          Vec b1 = a.eval2(D.col(x), ak.col(y));
          Vec b2 = sg1(x) * a.eval2(ak.col(x), D.col(y));
          if (!visit("binary-chain-slide", t, b1 - b2)) return false;
          if (with_image) {
            Vec b3 = D.apply(a.bracket2().eval_basis2(x, y));
            if (!visit("binary-chain-image", t, b1 - b3)) return false;
          }
        }
      for (int x = 0; x < n; ++x)
        for (int y = 0; y < n; ++y)
          for (int z = 0; z < n; ++z) {
            std::array<int, 3> t{x, y, z};
            Vec t1 = a.eval3(D.col(x), ak.col(y), ak.col(z));
            Vec t2 = sg1(x) * a.eval3(ak.col(x), D.col(y), ak.col(z));
            Vec t3 = sg2(x, y) * a.eval3(ak.col(x), ak.col(y), D.col(z));
            if (!visit("ternary-chain-slide-1", t, t1 - t2)) return false;
            if (!visit("ternary-chain-slide-2", t, t2 - t3)) return false;
            if (with_image) {
              Vec t4 = D.apply(a.bracket3().eval_basis3(x, y, z));
              if (!visit("ternary-chain-image", t, t3 - t4)) return false;
            }
          }
      return true;
    }
    case Family::zder: {
      for (int x = 0; x < n; ++x)
        for (int y = 0; y < n; ++y) {
          std::array<int, 2> t{x, y};
          if (!visit("binary-bracket-vanishing", t,
                     a.eval2(D.col(x), ak.col(y))))
            return false;
          if (!visit("binary-image-vanishing", t,
                     D.apply(a.bracket2().eval_basis2(x, y))))
            return false;
        }
      for (int x = 0; x < n; ++x)
        for (int y = 0; y < n; ++y)
          for (int z = 0; z < n; ++z) {
            std::array<int, 3> t{x, y, z};
            if (!visit("ternary-image-vanishing", t,
                       D.apply(a.bracket3().eval_basis3(x, y, z))))
              return false;
            if (!visit("ternary-bracket-vanishing", t,
                       a.eval3(D.col(x), ak.col(y), ak.col(z))))
              return false;
          }
      return true;
    }
  }
  throw InternalError("unknown operator family");
}

std::vector<GradedMap> blocks_from_joint(const EndoIndex& idx, int nblocks,
                                         const Vec& joint) {
  const int e = idx.size();
  std::vector<GradedMap> blocks;
  blocks.reserve(nblocks);
  for (int b = 0; b < nblocks; ++b)
    blocks.push_back(
        idx.unpack(Vec(joint.begin() + static_cast<size_t>(b) * e,
                       joint.begin() + static_cast<size_t>(b + 1) * e)));
  return blocks;
}

Vec flat_family_residual(const HomLYSA& a, Family fam, int k,
                         const std::vector<GradedMap>& blocks) {
  Vec out;
  for_each_family_condition(
      a, fam, k, blocks,
      [&](const char*, std::span<const int>, const Vec& r) {
        out.insert(out.end(), r.begin(), r.end());
        return true;
      });
  return out;
}

}  // namespace

OperatorFamilyBasis family_basis(const HomLYSA& a, Family fam, int k,
                                 Parity s) {
  if (k < 0) throw ValidationError("twist power must be nonnegative");
  EndoIndex idx(a.space(), s);
  const int nb = block_count(fam);
  const int e = idx.size();
  const int total = nb * e;

  std::vector<Vec> columns;
  columns.reserve(total);
  for (int t = 0; t < total; ++t)
    columns.push_back(flat_family_residual(
        a, fam, k, blocks_from_joint(idx, nb, basis_vec(total, t))));
  SubspaceBasis joint = kernel_of_columns(total, columns);

  OperatorFamilyBasis out;
  out.family = fam;
  out.k = k;
  out.parity = s;

  if (nb == 1) {
    for (const Vec& v : joint.vectors())
      out.basis.push_back({idx.unpack(v), {}});
    return out;
  }

  std::vector<Vec> proj;
  proj.reserve(joint.dim());
  for (const Vec& v : joint.vectors())
    proj.emplace_back(v.begin(), v.begin() + e);
  SubspaceBasis dspace = SubspaceBasis::from_generators(e, std::move(proj));

  size_t height = 0;
  for (const Vec& col : columns) height = std::max(height, col.size());
  for (const Vec& d : dspace.vectors()) {
    LinearSystem sys(total);
    for (size_t r = 0; r < height; ++r) {
      Vec row = zero_vec(total);
      bool nonzero = false;
      for (int t = 0; t < total; ++t)
        if (r < columns[t].size() && !is_zero(columns[t][r])) {
          row[t] = columns[t][r];
          nonzero = true;
        }
      if (nonzero) sys.add(std::move(row));
    }
    for (int q = 0; q < e; ++q) sys.add_pin(q, d[q]);
    SolveResult res = solve(sys);
    if (!res.consistent)
      throw InternalError(
          "projected family element admits no joint witness; this is a "
          "library bug");
    std::vector<GradedMap> blocks = blocks_from_joint(idx, nb, res.particular);
    FamilyElement el{blocks[0], {blocks.begin() + 1, blocks.end()}};
    out.basis.push_back(std::move(el));
  }
  return out;
}

FamilyCheck verify_family_element(const HomLYSA& a, Family fam, int k,
                                  const FamilyElement& el) {
  if (k < 0) throw ValidationError("twist power must be nonnegative");
  if (static_cast<int>(el.witnesses.size()) != family_witness_count(fam))
    throw ValidationError("wrong number of partner maps for this family");
  std::vector<GradedMap> blocks;
  blocks.push_back(el.map);
  blocks.insert(blocks.end(), el.witnesses.begin(), el.witnesses.end());
  for (const GradedMap& b : blocks) {
    if (b.domain() != a.space() || b.codomain() != a.space())
      throw ValidationError("family element must act on the algebra space");
    if (b.parity() != el.map.parity())
      throw ValidationError("all partner maps must share the map's parity");
  }
  FamilyCheck check;
  for_each_family_condition(
      a, fam, k, blocks,
      [&](const char* name, std::span<const int> tuple, const Vec& r) {
        if (is_zero_vec(r)) return true;
        check.ok = false;
        check.condition = name;
        check.tuple.assign(tuple.begin(), tuple.end());
        return false;
      });
  return check;
}

SubspaceBasis center(const HomLYSA& a, const CenterOptions& opts) {
  const int n = a.dim();
  LinearSystem sys(n);
  auto add_row = [&](Vec row) {
    if (!is_zero_vec(row)) sys.add(std::move(row));
  };
  if (!opts.ternary_first_slot_only) {
    for (int j = 0; j < n; ++j)
      for (int m = 0; m < n; ++m) {
        Vec row = zero_vec(n);
        for (int c = 0; c < n; ++c) row[c] = a.bracket2().at2(c, j, m);
        add_row(std::move(row));
      }
  }
  for (int j = 0; j < n; ++j)
    for (int k2 = 0; k2 < n; ++k2)
      for (int m = 0; m < n; ++m) {
        Vec row = zero_vec(n);
        for (int c = 0; c < n; ++c) row[c] = a.bracket3().at3(c, j, k2, m);
        add_row(std::move(row));
      }
  if (!opts.ternary_first_slot_only) {
    for (int j = 0; j < n; ++j)
      for (int k2 = 0; k2 < n; ++k2)
        for (int m = 0; m < n; ++m) {
          Vec row = zero_vec(n);
          for (int c = 0; c < n; ++c) row[c] = a.bracket3().at3(j, k2, c, m);
          add_row(std::move(row));
        }
  }
  return nullspace(sys);
}

namespace {

struct FamSpan {
  std::vector<GradedMap> maps;  // even basis then odd basis
  SubspaceBasis span;
};

Vec flat_map(const GradedMap& m) {
  const int n = m.domain().dim();
  Vec v = zero_vec(n * n);
  for (int r = 0; r < n; ++r)
    for (int c = 0; c < n; ++c) v[r * n + c] = m.mat().at(r, c);
  return v;
}

FamSpan compute_fam_span(const HomLYSA& a, Family f, int k) {
  const int n = a.dim();
  FamSpan fs;
  for (Parity s : {Parity::even, Parity::odd}) {
    OperatorFamilyBasis fb = family_basis(a, f, k, s);
    for (const FamilyElement& el : fb.basis) fs.maps.push_back(el.map);
  }
  std::vector<Vec> gens;
  gens.reserve(fs.maps.size());
  for (const GradedMap& m : fs.maps) gens.push_back(flat_map(m));
  fs.span = SubspaceBasis::from_generators(n * n, std::move(gens));
  return fs;
}

std::string pair_detail(int k1, int i1, int k2, int i2) {
  return "violating pair: twist powers (" + std::to_string(k1) + ", " +
         std::to_string(k2) + "), basis elements (" + std::to_string(i1) +
         ", " + std::to_string(i2) + ")";
}

}  // namespace

TowerReport check_tower(const HomLYSA& a, int kmax) {
  if (kmax < 0) throw ValidationError("twist-power cap must be nonnegative");
  TowerReport rep;
  rep.kmax = kmax;
  rep.notes = {
      "every family member and partner map is required to commute with the "
      "twist",
      "ternary sliding chains read their final member as the image of the "
      "full ternary bracket",
      "vanishing conditions for the zder family apply to both brackets, "
      "first argument slot twisted",
      "the center requires binary first-slot and ternary first- and "
      "third-slot annihilation; a first-slot-only diagnostic reading is "
      "available separately",
  };

  std::array<std::vector<FamSpan>, family_count> fams;
  for (int fi = 0; fi < family_count; ++fi)
    for (int k = 0; k <= kmax; ++k)
      fams[fi].push_back(compute_fam_span(a, static_cast<Family>(fi), k));
  auto& der = fams[static_cast<int>(Family::der)];
  auto& gder = fams[static_cast<int>(Family::gder)];
  auto& qder = fams[static_cast<int>(Family::qder)];
  auto& cent = fams[static_cast<int>(Family::centroid)];
  auto& qcent = fams[static_cast<int>(Family::qcentroid)];
  auto& zder = fams[static_cast<int>(Family::zder)];

  auto bracket_closure = [&](const std::string& name,
                             const std::vector<FamSpan>& left,
                             const std::vector<FamSpan>& right,
                             const std::vector<FamSpan>& target) {
    TowerClaim claim{name, false, true, ""};
    for (int k1 = 0; k1 <= kmax && claim.pass; ++k1)
      for (int k2 = 0; k1 + k2 <= kmax && claim.pass; ++k2)
        for (size_t i = 0; i < left[k1].maps.size() && claim.pass; ++i)
          for (size_t j = 0; j < right[k2].maps.size(); ++j) {
            GradedMap br =
                super_commutator(left[k1].maps[i], right[k2].maps[j]);
            if (!target[k1 + k2].span.contains(flat_map(br))) {
              claim.pass = false;
              claim.detail = pair_detail(k1, static_cast<int>(i), k2,
                                         static_cast<int>(j));
              break;
            }
          }
    rep.claims.push_back(std::move(claim));
  };

  auto inclusion = [&](const std::string& name,
                       const std::vector<FamSpan>& small,
                       const std::vector<FamSpan>& big) {
    TowerClaim claim{name, false, true, ""};
    for (int k = 0; k <= kmax; ++k)
      if (!big[k].span.contains_subspace(small[k].span)) {
        claim.pass = false;
        claim.detail = "violated at twist power " + std::to_string(k);
        break;
      }
    rep.claims.push_back(std::move(claim));
  };

  bracket_closure("der-bracket-closure", der, der, der);
  bracket_closure("gder-bracket-closure", gder, gder, gder);
  bracket_closure("zder-ideal-in-der", zder, der, zder);
  bracket_closure("der-centroid-bracket-in-centroid", der, cent, cent);
  bracket_closure("qder-qcentroid-bracket-in-qcentroid", qder, qcent, qcent);
  bracket_closure("qcentroid-bracket-in-qder", qcent, qcent, qder);

  inclusion("zder-in-der", zder, der);
  inclusion("der-in-qder", der, qder);
  inclusion("qder-in-gder", qder, gder);
  inclusion("centroid-in-qcentroid", cent, qcent);
  inclusion("centroid-in-qder", cent, qder);

  {
    TowerClaim claim{"qder-plus-qcentroid-in-gder", false, true, ""};
    for (int k = 0; k <= kmax; ++k) {
      if (!gder[k].span.contains_subspace(qder[k].span.sum(qcent[k].span))) {
        claim.pass = false;
        claim.detail = "violated at twist power " + std::to_string(k);
        break;
      }
    }
    rep.claims.push_back(std::move(claim));
  }

  {
    // S_k = qcentroid_k + sum over i + j = k of [qcentroid_i, qcentroid_j];
    // the claim: S sits inside gder and is closed under the bracket.
    TowerClaim claim{"qcentroid-sum-subalgebra-of-gder", false, true, ""};
    const int n = a.dim();
    std::vector<std::vector<GradedMap>> smaps(kmax + 1);
    std::vector<SubspaceBasis> sspan(kmax + 1);
    for (int k = 0; k <= kmax; ++k) {
      smaps[k] = qcent[k].maps;
      for (int i = 0; i <= k; ++i) {
        int j = k - i;
        for (const GradedMap& m1 : qcent[i].maps)
          for (const GradedMap& m2 : qcent[j].maps)
            smaps[k].push_back(super_commutator(m1, m2));
      }
      std::vector<Vec> gens;
      gens.reserve(smaps[k].size());
      for (const GradedMap& m : smaps[k]) gens.push_back(flat_map(m));
      sspan[k] = SubspaceBasis::from_generators(n * n, std::move(gens));
      if (!gder[k].span.contains_subspace(sspan[k])) {
        claim.pass = false;
        claim.detail =
            "sum escapes the gder span at twist power " + std::to_string(k);
      }
    }
    for (int k1 = 0; k1 <= kmax && claim.pass; ++k1)
      for (int k2 = 0; k1 + k2 <= kmax && claim.pass; ++k2)
        for (size_t i = 0; i < smaps[k1].size() && claim.pass; ++i)
          for (size_t j = 0; j < smaps[k2].size(); ++j) {
            GradedMap br = super_commutator(smaps[k1][i], smaps[k2][j]);
            if (!sspan[k1 + k2].contains(flat_map(br))) {
              claim.pass = false;
              claim.detail = pair_detail(k1, static_cast<int>(i), k2,
                                         static_cast<int>(j));
              break;
            }
          }
    rep.claims.push_back(std::move(claim));
  }

  {
    TowerClaim claim{"centroid-qcentroid-bracket-central", false, true, ""};
    const int n = a.dim();
    std::vector<Vec> alpha_rows;
    for (int r = 0; r < n; ++r) {
      Vec row = zero_vec(n);
      for (int c = 0; c < n; ++c) row[c] = a.alpha().mat().at(r, c);
      alpha_rows.push_back(std::move(row));
    }
    if (rank_of(std::move(alpha_rows)) != n) {
      claim.skipped = true;
      claim.detail = "twist is not surjective; hypothesis unavailable";
    } else {
      SubspaceBasis z = center(a);
      for (int k1 = 0; k1 <= kmax && claim.pass; ++k1)
        for (int k2 = 0; k2 <= kmax && claim.pass; ++k2)
          for (size_t i = 0; i < cent[k1].maps.size() && claim.pass; ++i)
            for (size_t j = 0; j < qcent[k2].maps.size(); ++j) {
              GradedMap br =
                  super_commutator(cent[k1].maps[i], qcent[k2].maps[j]);
              bool inside = true;
              for (int c = 0; c < n && inside; ++c)
                inside = z.contains(br.col(c));
              if (!inside) {
                claim.pass = false;
                claim.detail = pair_detail(k1, static_cast<int>(i), k2,
                                           static_cast<int>(j));
                break;
              }
            }
      if (claim.pass && z.dim() == 0)
        claim.detail = "all such brackets vanish (the center is zero)";
    }
    rep.claims.push_back(std::move(claim));
  }

  return rep;
}

}  // namespace hly
