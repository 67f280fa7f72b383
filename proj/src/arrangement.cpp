#include "coxfar/arrangement.hpp"

#include <algorithm>
#include <stdexcept>

#include "coxfar/parallel.hpp"

namespace coxfar {

Flat flat_from_roots(const RootSystem& rs, const std::vector<int>& roots) {
  RowSpan span(rs.rank());
  for (int r : roots) span.add(rs.root(r));
  Flat f;
  f.dim = rs.rank() - span.rank();
  for (int i = 0; i < rs.num_roots(); ++i)
    if (span.contains(rs.root(i))) f.roots.push_back(i);
  return f;
}

std::vector<int> map_root_set(const GroupElement& g, const std::vector<int>& roots) {
  std::vector<int> out;
  out.reserve(roots.size());
  for (int r : roots) out.push_back(g.apply(r).first);
  std::sort(out.begin(), out.end());
  return out;
}

namespace {

// Saturation of (existing flat's span) + one extra root, reusing the
// parent's rank to skip the full span rebuild.
Flat intersect_with_hyperplane(const RootSystem& rs, const Flat& x, int h) {
  RowSpan span(rs.rank());
  for (int r : x.roots) span.add(rs.root(r));
  span.add(rs.root(h));
  Flat f;
  f.dim = rs.rank() - span.rank();
  for (int i = 0; i < rs.num_roots(); ++i)
    if (span.contains(rs.root(i))) f.roots.push_back(i);
  return f;
}

}  // namespace

IntersectionLattice::IntersectionLattice(const RootSystem& rs, int max_codim,
                                         int workers)
    : rs_(&rs), max_codim_(max_codim) {
  if (max_codim > rs.rank())
    throw std::invalid_argument("max_codim exceeds the ambient rank");

  // Codim 0: the ambient space.
  Flat ambient{{}, rs.rank()};
  flats_.push_back(ambient);
  levels_.push_back({0});
  index_[{}] = 0;

  if (max_codim == 0) return;

  // Codim 1: the hyperplanes, one per positive root.
  levels_.emplace_back();
  for (int h = 0; h < rs.num_roots(); ++h) {
    Flat f{{h}, rs.rank() - 1};
    int id = static_cast<int>(flats_.size());
    index_[f.roots] = id;
    flats_.push_back(std::move(f));
    levels_[1].push_back(id);
  }

  for (int k = 2; k <= max_codim; ++k) {
    // Intersecting a codim-(rank-1) flat (a line) with any hyperplane not
    // containing it gives the origin; emit it directly.
    if (k == rs.rank()) {
      std::vector<int> all(rs.num_roots());
      for (int i = 0; i < rs.num_roots(); ++i) all[i] = i;
      int id = static_cast<int>(flats_.size());
      index_[all] = id;
      flats_.push_back(Flat{std::move(all), 0});
      levels_.push_back({id});
      continue;
    }

    const std::vector<int>& prev = levels_[k - 1];
    int n = static_cast<int>(prev.size());
    std::vector<std::map<std::vector<int>, Flat>> partial(
        std::max(1, std::min(workers, n)));
    int parts = static_cast<int>(partial.size());
    int chunk = (n + parts - 1) / parts;
    parallel_chunks(n, parts, [&](int b, int e) {
      auto& local = partial[b / chunk];
      for (int idx = b; idx < e; ++idx) {
        const Flat& x = flats_[prev[idx]];
        for (int h = 0; h < rs_->num_roots(); ++h) {
          if (std::binary_search(x.roots.begin(), x.roots.end(), h)) continue;
          Flat f = intersect_with_hyperplane(*rs_, x, h);
          local.emplace(f.roots, std::move(f));
        }
      }
    });
    std::map<std::vector<int>, Flat> merged;
    for (auto& part : partial)
      for (auto& [key, f] : part) merged.emplace(key, std::move(f));

    levels_.emplace_back();
    for (auto& [key, f] : merged) {
      if (index_.count(key)) continue;
      int id = static_cast<int>(flats_.size());
      index_[key] = id;
      flats_.push_back(std::move(f));
      levels_[k].push_back(id);
    }
  }
}

IntersectionLattice::IntersectionLattice(const RootSystem& rs,
                                         std::vector<Flat> flats, int max_codim)
    : rs_(&rs), max_codim_(max_codim), flats_(std::move(flats)) {
  levels_.assign(max_codim + 1, {});
  int prev_codim = 0;
  for (int id = 0; id < static_cast<int>(flats_.size()); ++id) {
    int c = rs.rank() - flats_[id].dim;
    if (c < prev_codim || c > max_codim)
      throw std::invalid_argument("flats are not in level order");
    prev_codim = c;
    levels_[c].push_back(id);
    index_[flats_[id].roots] = id;
  }
  if (index_.size() != flats_.size())
    throw std::invalid_argument("duplicate flats in the payload");
}

int IntersectionLattice::find(const std::vector<int>& root_set) const {
  auto it = index_.find(root_set);
  return it == index_.end() ? -1 : it->second;
}

int IntersectionLattice::flat_id(const std::vector<int>& roots_of_span) const {
  Flat f = flat_from_roots(*rs_, roots_of_span);
  int id = find(f.roots);
  if (id < 0)
    throw std::runtime_error("flat of codimension " +
                             std::to_string(rs_->rank() - f.dim) +
                             " is deeper than the built lattice (max_codim " +
                             std::to_string(max_codim_) + ")");
  return id;
}

bool IntersectionLattice::contained_in(int a, int b) const {
  const auto& ra = flats_[a].roots;
  const auto& rb = flats_[b].roots;
  return std::includes(ra.begin(), ra.end(), rb.begin(), rb.end());
}

bool fm_feasible(std::vector<FieldVector> eqs, std::vector<FieldVector> ineqs,
                 int nvars) {
  // Substitute equalities away first.
  for (size_t e = 0; e < eqs.size(); ++e) {
    FieldVector eq = eqs[e];
    int pivot = -1;
    for (int j = 0; j < nvars; ++j) {
      if (!eq(j).is_zero()) {
        pivot = j;
        break;
      }
    }
    if (pivot < 0) {
      if (eq(nvars).sign() != 0) return false;  // 0 = c with c != 0
      continue;
    }
    AlgebraicNumber inv = AlgebraicNumber(1) / eq(pivot);
    for (int j = 0; j <= nvars; ++j) eq(j) = eq(j) * inv;
    auto substitute = [&](FieldVector& f) {
      if (f(pivot).is_zero()) return;
      AlgebraicNumber c = f(pivot);
      for (int j = 0; j <= nvars; ++j) f(j) = f(j) - c * eq(j);
    };
    for (size_t e2 = e + 1; e2 < eqs.size(); ++e2) substitute(eqs[e2]);
    for (auto& f : ineqs) substitute(f);
  }

  // Fourier-Motzkin elimination on the inequalities a.v + c >= 0.
  for (int var = 0; var < nvars; ++var) {
    std::vector<FieldVector> pos, neg, rest;
    for (auto& f : ineqs) {
      int s = f(var).sign();
      if (s > 0) pos.push_back(std::move(f));
      else if (s < 0) neg.push_back(std::move(f));
      else rest.push_back(std::move(f));
    }
    for (const auto& p : pos) {
      for (const auto& q : neg) {
        // p has positive, q negative coefficient: combine to cancel var.
        FieldVector r(nvars + 1);
        for (int j = 0; j <= nvars; ++j) r(j) = p(j) * (-q(var)) + q(j) * p(var);
        rest.push_back(std::move(r));
      }
    }
    ineqs = std::move(rest);
  }
  for (const auto& f : ineqs)
    if (f(nvars).sign() < 0) return false;
  return true;
}

namespace {

// Affine form for B(row, v) with zero constant.
FieldVector form_row(const RootSystem& rs, const FieldVector& u, int nvars) {
  FieldVector f = FieldVector::Constant(nvars + 1, AlgebraicNumber(0));
  for (int j = 0; j < nvars; ++j) {
    AlgebraicNumber c(0);
    for (int i = 0; i < nvars; ++i) {
      if (u(i).is_zero()) continue;
      c += u(i) * rs.gram()(i, j);
    }
    f(j) = c;
  }
  return f;
}

bool face_cone_trivial_impl(const RootSystem& rs, const std::vector<int>& roots,
                            uint32_t walls) {
  const int n = rs.rank();
  std::vector<FieldVector> eqs, ineqs;
  for (int r : roots) eqs.push_back(form_row(rs, rs.root(r), n));
  FieldVector norm = FieldVector::Constant(n + 1, AlgebraicNumber(0));
  for (int s = 0; s < n; ++s) {
    FieldVector row = form_row(rs, rs.root(s), n);
    if (walls & (1u << s)) {
      eqs.push_back(row);
    } else {
      for (int j = 0; j <= n; ++j) norm(j) += row(j);
      ineqs.push_back(std::move(row));
    }
  }
  // A nonzero point exists iff the slice sum(open walls) = 1 is feasible.
  norm(n) -= AlgebraicNumber(1);
  eqs.push_back(std::move(norm));
  return !fm_feasible(std::move(eqs), std::move(ineqs), n);
}

}  // namespace

bool cone_trivial(const RootSystem& rs, const Flat& x, const GroupElement& w) {
  return cone_trivial_face(rs, x, w, 0);
}

bool cone_trivial_face(const RootSystem& rs, const Flat& x,
                       const GroupElement& w, uint32_t walls) {
  if (x.dim == 0) return true;  // the origin meets every cone trivially
  std::vector<int> roots = x.roots;
  if (!w.is_identity()) roots = map_root_set(w.inverse(), roots);
  return face_cone_trivial_impl(rs, roots, walls);
}

bool cone_trivial_rays_oracle(const RootSystem& rs, const Flat& x,
                              const GroupElement& w) {
  if (x.dim == 0) return true;
  const int n = rs.rank();
  // Extreme rays of C0: the dual basis of the simple roots w.r.t. the form.
  // Solve B * R = I once per call; n <= 4 in oracle usage.
  FieldMatrix b(n, n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) b(i, j) = rs.gram()(i, j);
  FieldMatrix aug(n, 2 * n);
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      aug(i, j) = b(i, j);
      aug(i, n + j) = AlgebraicNumber(i == j ? 1 : 0);
    }
  }
  rref(aug);
  std::vector<FieldVector> rays;
  for (int j = 0; j < n; ++j) {
    FieldVector ray(n);
    for (int i = 0; i < n; ++i) ray(i) = aug(i, n + j);
    rays.push_back(std::move(ray));
  }
  // Chamber w*C0: rays w(omega_s). Apply w as a matrix via its action on
  // roots: reconstruct w's matrix from images of the simple roots.
  FieldMatrix wm(n, n);
  for (int s = 0; s < n; ++s) {
    auto [idx, sign] = w.apply(s);
    for (int i = 0; i < n; ++i)
      wm(i, s) = sign > 0 ? rs.root(idx)(i) : -rs.root(idx)(i);
  }
  std::vector<FieldVector> chamber_rays;
  for (const auto& ray : rays) {
    FieldVector r = FieldVector::Constant(n, AlgebraicNumber(0));
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j) r(i) += wm(i, j) * ray(j);
    chamber_rays.push_back(std::move(r));
  }

  // X meets the cone of the rays nontrivially iff some convex combination
  // lambda >= 0, sum lambda = 1 satisfies B(beta, sum lambda_s ray_s) = 0 for
  // all beta in X. The feasible set is a polytope; check its basic solutions.
  int k = static_cast<int>(x.roots.size());
  FieldMatrix a(k + 1, n);
  for (int i = 0; i < k; ++i)
    for (int s = 0; s < n; ++s)
      a(i, s) = rs.form(x.roots[i], chamber_rays[s]);
  for (int s = 0; s < n; ++s) a(k, s) = AlgebraicNumber(1);

  for (uint32_t t = 1; t < (1u << n); ++t) {
    std::vector<int> cols;
    for (int s = 0; s < n; ++s)
      if (t & (1u << s)) cols.push_back(s);
    int m = static_cast<int>(cols.size());
    FieldMatrix sys(k + 1, m + 1);
    for (int i = 0; i <= k; ++i) {
      for (int c = 0; c < m; ++c) sys(i, c) = a(i, cols[c]);
      sys(i, m) = AlgebraicNumber(i == k ? 1 : 0);
    }
    FieldMatrix red = sys;
    std::vector<int> piv = rref(red);
    // Unique solution on this support: all of cols pivotal, system
    // consistent (no pivot in the constant column).
    if (static_cast<int>(piv.size()) != m) continue;
    if (!piv.empty() && piv.back() == m) continue;
    bool consistent = true, nonneg = true;
    for (int i = 0; i <= k; ++i) {
      bool zero_row = true;
      for (int c = 0; c < m; ++c)
        if (!red(i, c).is_zero()) zero_row = false;
      if (zero_row && !red(i, m).is_zero()) consistent = false;
    }
    if (!consistent) continue;
    for (int c = 0; c < m; ++c)
      if (red(c, m).sign() < 0) nonneg = false;
    if (nonneg) return false;  // found a nonzero point of X in the cone
  }
  return true;
}

RestrictionView restriction(const IntersectionLattice& lat, int flat_id,
                            int rel_depth) {
  const Flat& x = lat.flat(flat_id);
  int depth = rel_depth < 0 ? x.dim : rel_depth;
  int needed = lat.codim(flat_id) + depth;
  if (needed > lat.max_codim())
    throw std::runtime_error(
        "restriction needs lattice depth " + std::to_string(needed) +
        " but only " + std::to_string(lat.max_codim()) + " was built");
  RestrictionView view;
  view.top = flat_id;
  view.levels.assign(depth + 1, {});
  for (int k = 0; k <= depth; ++k) {
    for (int id : lat.level(lat.codim(flat_id) + k))
      if (lat.contained_in(id, flat_id)) view.levels[k].push_back(id);
  }
  return view;
}

}  // namespace coxfar
