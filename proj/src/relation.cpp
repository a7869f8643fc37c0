#include "brauer/relation.hpp"

#include "brauer/catalog.hpp"
#include "brauer/error.hpp"
#include "brauer/permutation.hpp"

#include <algorithm>
#include <map>
#include <mutex>
#include <random>
#include <set>

namespace brauer {

BrauerRelation::BrauerRelation(GroupPtr group, std::vector<Integer> coefficients)
    : group_(std::move(group)), coeffs_(std::move(coefficients)) {
  if (coeffs_.size() != group_->subgroup_classes().size())
    throw ValidationError("relation needs one coefficient per subgroup class");
}

BrauerRelation BrauerRelation::zero(GroupPtr group) {
  std::size_t n = group->subgroup_classes().size();
  return BrauerRelation(std::move(group), std::vector<Integer>(n));
}

bool BrauerRelation::is_zero() const {
  return std::all_of(coeffs_.begin(), coeffs_.end(), [](const Integer &c) { return c == 0; });
}

std::vector<std::pair<int, Integer>> BrauerRelation::positive() const {
  std::vector<std::pair<int, Integer>> out;
  for (std::size_t k = 0; k < coeffs_.size(); ++k)
    if (coeffs_[k] > 0)
      out.emplace_back(static_cast<int>(k), coeffs_[k]);
  return out;
}

std::vector<std::pair<int, Integer>> BrauerRelation::negative() const {
  std::vector<std::pair<int, Integer>> out;
  for (std::size_t k = 0; k < coeffs_.size(); ++k)
    if (coeffs_[k] < 0)
      out.emplace_back(static_cast<int>(k), -coeffs_[k]);
  return out;
}

namespace {

std::vector<int> expand(const std::vector<std::pair<int, Integer>> &side) {
  std::vector<int> out;
  for (const auto &[k, m] : side)
    for (Integer t = 0; t < m; ++t)
      out.push_back(k);
  return out;
}

} // namespace

std::vector<int> BrauerRelation::positive_expanded() const { return expand(positive()); }
std::vector<int> BrauerRelation::negative_expanded() const { return expand(negative()); }

ClassFunction BrauerRelation::permutation_difference() const {
  ClassFunction out(group_);
  for (std::size_t k = 0; k < coeffs_.size(); ++k)
    if (coeffs_[k] != 0)
      out += permutation_character(group_, group_->class_representative(static_cast<int>(k))) * Rational(coeffs_[k]);
  return out;
}

Integer BrauerRelation::degree_difference() const {
  Integer d = 0;
  for (std::size_t k = 0; k < coeffs_.size(); ++k)
    d += coeffs_[k] * static_cast<long>(group_->order() / group_->subgroup_classes()[k].order);
  return d;
}

BrauerRelation BrauerRelation::normalized() const {
  return BrauerRelation(group_, primitive_normalize(coeffs_));
}

BrauerRelation &BrauerRelation::operator+=(const BrauerRelation &o) {
  if (group_ != o.group_)
    throw ValidationError("relations on different groups");
  for (std::size_t k = 0; k < coeffs_.size(); ++k)
    coeffs_[k] += o.coeffs_[k];
  return *this;
}

BrauerRelation &BrauerRelation::operator-=(const BrauerRelation &o) {
  if (group_ != o.group_)
    throw ValidationError("relations on different groups");
  for (std::size_t k = 0; k < coeffs_.size(); ++k)
    coeffs_[k] -= o.coeffs_[k];
  return *this;
}

BrauerRelation operator*(const Integer &k, BrauerRelation a) {
  for (auto &c : a.coeffs_)
    c *= k;
  return a;
}

bool operator==(const BrauerRelation &a, const BrauerRelation &b) {
  return a.group_ == b.group_ && a.coeffs_ == b.coeffs_;
}

std::string BrauerRelation::to_string() const {
  auto labels = subgroup_labels(*group_);
  std::string out;
  for (std::size_t k = 0; k < coeffs_.size(); ++k) {
    if (coeffs_[k] == 0)
      continue;
    Integer a = abs(coeffs_[k]);
    if (out.empty())
      out += coeffs_[k] < 0 ? "-" : "";
    else
      out += coeffs_[k] < 0 ? " - " : " + ";
    if (a != 1)
      out += a.get_str();
    out += labels[k];
  }
  return out.empty() ? "0" : out;
}

namespace {

struct TypeSignature {
  std::size_t order = 0;
  bool abelian = false;
  std::map<int, std::size_t> orders;
  auto operator<=>(const TypeSignature &) const = default;
};

TypeSignature signature_of(const FiniteGroup &g) {
  TypeSignature s;
  s.order = g.order();
  s.abelian = g.is_abelian();
  for (std::size_t x = 0; x < g.order(); ++x)
    ++s.orders[g.element_order(static_cast<int>(x))];
  return s;
}

// computed from generators directly, so no subgroup lattice is built
TypeSignature signature_of(const CatalogEntry &e) {
  std::vector<Perm> gens;
  for (const auto &c : e.generators)
    gens.push_back(parse_cycles(c, e.degree));
  std::set<Perm> seen{identity_perm(e.degree)};
  std::vector<Perm> queue{identity_perm(e.degree)};
  for (std::size_t i = 0; i < queue.size(); ++i)
    for (const auto &s : gens) {
      Perm y = compose(s, queue[i]);
      if (seen.insert(y).second)
        queue.push_back(y);
    }
  TypeSignature s;
  s.order = queue.size();
  s.abelian = true;
  for (const auto &a : gens)
    for (const auto &b : gens)
      if (compose(a, b) != compose(b, a))
        s.abelian = false;
  for (const auto &p : queue) {
    int o = 1;
    Perm q = p;
    while (!is_identity(q)) {
      q = compose(p, q);
      ++o;
    }
    ++s.orders[o];
  }
  return s;
}

std::string type_name(const TypeSignature &s) {
  static std::mutex mu;
  static std::vector<std::pair<TypeSignature, std::string>> known;
  std::lock_guard<std::mutex> lock(mu);
  if (known.empty())
    for (const auto &e : catalog_entries())
      if (e.name != "S1")
        known.emplace_back(signature_of(e), e.name);
  // aliases such as S2 = C2 share a signature; prefer cyclic, then dihedral names
  std::string best;
  auto rank = [](const std::string &n) { return std::string("CDSA").find(n[0]); };
  for (const auto &[sig, name] : known)
    if (sig == s && (best.empty() || rank(name) < rank(best)))
      best = name;
  return best.empty() ? "G" + std::to_string(s.order) : best;
}

} // namespace

std::vector<std::string> subgroup_labels(const FiniteGroup &g) {
  std::size_t n = g.subgroup_classes().size();
  std::vector<std::string> base(n);
  for (std::size_t k = 0; k < n; ++k) {
    if (g.subgroup_classes()[k].order == 1)
      base[k] = "1";
    else if (k + 1 == n && !g.name().empty())
      base[k] = g.name();
    else
      base[k] = type_name(signature_of(*g.subgroup_as_group(g.class_representative(static_cast<int>(k)))));
  }
  std::map<std::string, int> count, seen;
  for (const auto &b : base)
    ++count[b];
  std::vector<std::string> out(n);
  for (std::size_t k = 0; k < n; ++k) {
    out[k] = base[k];
    if (count[base[k]] > 1) {
      int i = seen[base[k]]++;
      out[k] += i < 26 ? std::string(1, static_cast<char>('a' + i)) : "_" + std::to_string(i);
    }
  }
  return out;
}

std::string subgroup_label(const FiniteGroup &g, int class_index) { return subgroup_labels(g).at(class_index); }

ZMatrix fixed_point_matrix(const FiniteGroup &g) {
  ZMatrix m(g.subgroup_classes().size(), g.class_count());
  for (std::size_t k = 0; k < g.subgroup_classes().size(); ++k)
    for (std::size_t c = 0; c < g.class_count(); ++c)
      m(k, c) = static_cast<long>(g.fixed_points(g.class_representative(static_cast<int>(k)), static_cast<int>(c)));
  return m;
}

std::vector<BrauerRelation> enumerate_brauer_relations(const GroupPtr &g) {
  ZMatrix kernel = integer_left_kernel(fixed_point_matrix(*g));
  std::vector<BrauerRelation> out;
  for (std::size_t i = 0; i < kernel.rows(); ++i) {
    BrauerRelation r = BrauerRelation(g, kernel.row(i)).normalized();
    if (r.degree_difference() != 0 || !r.is_genuine())
      throw InternalError("kernel vector is not a Brauer relation");
    out.push_back(std::move(r));
  }
  return out;
}

PseudoCertificate check_pseudo_relation(const BrauerRelation &theta, const ClassFunction &target) {
  if (theta.group() != target.group())
    throw ValidationError("relation and target character live on different groups");
  if (!target.is_real())
    throw ValidationError("target character must be self-dual (real-valued)");
  auto tmult = decompose(target);
  PseudoCertificate cert;
  cert.differences = decompose(theta.permutation_difference());
  cert.holds = true;
  for (std::size_t i = 0; i < tmult.size(); ++i) {
    if (tmult[i] < 0)
      throw ValidationError("target character must be a true character");
    if (tmult[i] > 0) {
      cert.constituents.push_back(i);
      if (cert.differences[i] != 0)
        cert.holds = false;
    }
  }
  return cert;
}

namespace {

std::vector<std::size_t> offsets(const FiniteGroup &g, const std::vector<int> &subgroups) {
  std::vector<std::size_t> off{0};
  for (int id : subgroups)
    off.push_back(off.back() + g.order() / g.subgroup(id).order());
  return off;
}

std::vector<CosetSpace> coset_spaces(const GroupPtr &g, const std::vector<int> &subgroups) {
  std::vector<CosetSpace> out;
  for (int id : subgroups)
    out.push_back(coset_space(g, g->subgroup(id)));
  return out;
}

} // namespace

PermutationModuleMap::PermutationModuleMap(GroupPtr group, std::vector<int> sources, std::vector<int> targets,
                                           ZMatrix matrix)
    : group_(std::move(group)), sources_(std::move(sources)), targets_(std::move(targets)),
      matrix_(std::move(matrix)) {
  src_off_ = offsets(*group_, sources_);
  tgt_off_ = offsets(*group_, targets_);
  if (matrix_.rows() != tgt_off_.back() || matrix_.cols() != src_off_.back())
    throw ValidationError("map matrix has the wrong shape for its permutation modules");
  if (!is_equivariant())
    throw ValidationError("map matrix is not G-equivariant");
}

PermutationModuleMap PermutationModuleMap::from_double_cosets(
    GroupPtr group, std::vector<int> sources, std::vector<int> targets,
    const std::vector<std::vector<std::vector<Integer>>> &coeffs) {
  const auto &g = *group;
  auto src_off = offsets(g, sources), tgt_off = offsets(g, targets);
  auto tcs = coset_spaces(group, targets);
  auto scs = coset_spaces(group, sources);
  ZMatrix m(tgt_off.back(), src_off.back());
  for (std::size_t i = 0; i < sources.size(); ++i)
    for (std::size_t j = 0; j < targets.size(); ++j) {
      auto dc = double_cosets(group, g.subgroup(sources[i]), g.subgroup(targets[j]));
      if (coeffs.at(i).at(j).size() != dc.cosets.size())
        throw ValidationError("double-coset coefficient list has the wrong length");
      std::vector<Integer> base(tcs[j].size());
      for (std::size_t k = 0; k < dc.cosets.size(); ++k) {
        if (coeffs[i][j][k] == 0)
          continue;
        std::set<int> hit;
        for (int y : dc.cosets[k].elements)
          hit.insert(tcs[j].coset_of[y]);
        for (int r : hit)
          base[r] += coeffs[i][j][k];
      }
      for (std::size_t t = 0; t < scs[i].size(); ++t) {
        int x = scs[i].representatives[t];
        for (std::size_t r = 0; r < base.size(); ++r)
          if (base[r] != 0) {
            int row = tcs[j].coset_of[g.mul(x, tcs[j].representatives[r])];
            m(tgt_off[j] + row, src_off[i] + t) = base[r];
          }
      }
    }
  return PermutationModuleMap(std::move(group), std::move(sources), std::move(targets), std::move(m));
}

PermutationModuleMap PermutationModuleMap::identity(GroupPtr group, std::vector<int> subgroups) {
  auto off = offsets(*group, subgroups);
  return PermutationModuleMap(group, subgroups, subgroups, ZMatrix::identity(off.back()));
}

std::vector<Integer> PermutationModuleMap::block_coefficients(std::size_t i, std::size_t j) const {
  const auto &g = *group_;
  auto dc = double_cosets(group_, g.subgroup(sources_[i]), g.subgroup(targets_[j]));
  auto tcs = coset_space(group_, g.subgroup(targets_[j]));
  std::vector<Integer> out;
  for (const auto &c : dc.cosets)
    out.push_back(matrix_(tgt_off_[j] + tcs.coset_of[c.representative], src_off_[i]));
  return out;
}

PermutationModuleMap PermutationModuleMap::dual() const {
  return PermutationModuleMap(group_, targets_, sources_, matrix_.transpose());
}

PermutationModuleMap PermutationModuleMap::after(const PermutationModuleMap &first) const {
  if (first.group_ != group_ || first.targets_ != sources_)
    throw ValidationError("maps are not composable");
  return PermutationModuleMap(group_, first.sources_, targets_, matrix_ * first.matrix_);
}

bool PermutationModuleMap::is_equivariant() const {
  auto scs = coset_spaces(group_, sources_);
  auto tcs = coset_spaces(group_, targets_);
  auto act = [](const std::vector<CosetSpace> &cs, const std::vector<std::size_t> &off, int s, std::size_t p) {
    std::size_t b = static_cast<std::size_t>(std::upper_bound(off.begin(), off.end(), p) - off.begin()) - 1;
    return off[b] + static_cast<std::size_t>(cs[b].gset.act(s, static_cast<int>(p - off[b])));
  };
  for (int s : group_->generators())
    for (std::size_t r = 0; r < matrix_.rows(); ++r)
      for (std::size_t c = 0; c < matrix_.cols(); ++c)
        if (matrix_(act(tcs, tgt_off_, s, r), act(scs, src_off_, s, c)) != matrix_(r, c))
          return false;
  return true;
}

std::vector<QMatrix> invariant_bases(const RationalRepModel &model, const std::vector<int> &subgroups) {
  std::vector<QMatrix> out;
  for (int id : subgroups)
    out.push_back(invariant_subspace(model, model.group()->subgroup(id)));
  return out;
}

namespace {

std::size_t total_cols(const std::vector<QMatrix> &bases) {
  std::size_t n = 0;
  for (const auto &b : bases)
    n += b.cols();
  return n;
}

// L_i (sum_r w_r M(y_r)) B_j for a weight vector on the target cosets
QMatrix pulled_block(const RationalRepModel &model, const CosetSpace &tcs, const std::vector<Integer> &weights,
                     const QMatrix &left, const QMatrix &basis) {
  std::size_t d = model.dimension();
  QMatrix sum(d, d);
  for (std::size_t r = 0; r < weights.size(); ++r)
    if (weights[r] != 0)
      sum += model.matrix(tcs.representatives[r]) * Rational(weights[r]);
  return left * sum * basis;
}

} // namespace

QMatrix induced_map_on_invariants(const PermutationModuleMap &phi, const RationalRepModel &model,
                                  const std::vector<QMatrix> &source_bases, const std::vector<QMatrix> &target_bases) {
  if (phi.group() != model.group())
    throw ValidationError("map and model live on different groups");
  const auto &g = *phi.group();
  std::size_t rows = total_cols(source_bases), cols = total_cols(target_bases);
  QMatrix out(rows, cols);
  std::size_t ro = 0;
  for (std::size_t i = 0; i < phi.sources().size(); ++i) {
    QMatrix left = source_bases[i].left_inverse();
    std::size_t co = 0;
    for (std::size_t j = 0; j < phi.targets().size(); ++j) {
      auto tcs = coset_space(phi.group(), g.subgroup(phi.targets()[j]));
      std::vector<Integer> w(tcs.size());
      for (std::size_t r = 0; r < w.size(); ++r)
        w[r] = phi.matrix()(phi.target_offset(j) + r, phi.source_offset(i));
      if (source_bases[i].cols() && target_bases[j].cols())
        out.set_block(ro, co, pulled_block(model, tcs, w, left, target_bases[j]));
      co += target_bases[j].cols();
    }
    ro += source_bases[i].cols();
  }
  return out;
}

QMatrix induced_map_on_invariants(const PermutationModuleMap &phi, const RationalRepModel &model) {
  return induced_map_on_invariants(phi, model, invariant_bases(model, phi.sources()),
                                   invariant_bases(model, phi.targets()));
}

RealisingMap find_realising_map(const BrauerRelation &theta, const RationalRepModel &model,
                                const SearchOptions &options) {
  const auto &gp = theta.group();
  const auto &g = *gp;
  if (model.group() != gp)
    throw ValidationError("relation and model live on different groups");
  if (!check_pseudo_relation(theta, model.character()).holds)
    throw ValidationError("relation is not a pseudo Brauer relation for the model's character");
  std::vector<int> src, tgt;
  for (int k : theta.positive_expanded())
    src.push_back(g.class_representative(k).id);
  for (int k : theta.negative_expanded())
    tgt.push_back(g.class_representative(k).id);
  RealisingMap out{theta, PermutationModuleMap::identity(gp, {}), {}, {}, {}, {}, 0};
  out.source_bases = invariant_bases(model, src);
  out.target_bases = invariant_bases(model, tgt);
  std::size_t rows = total_cols(out.source_bases), cols = total_cols(out.target_bases);
  if (rows != cols)
    throw InternalError("invariant dimensions differ on the two sides of a pseudo relation");

  // pulled-back matrix of each double-coset generator, per block
  struct Piece {
    std::size_t i, j, ro, co;
    std::vector<QMatrix> mats;
  };
  std::vector<Piece> pieces;
  std::vector<CosetSpace> tcs;
  for (int id : tgt)
    tcs.push_back(coset_space(gp, g.subgroup(id)));
  std::vector<std::vector<std::size_t>> ncoef(src.size(), std::vector<std::size_t>(tgt.size()));
  std::size_t ro = 0;
  for (std::size_t i = 0; i < src.size(); ++i) {
    QMatrix left = out.source_bases[i].left_inverse();
    std::size_t co = 0;
    for (std::size_t j = 0; j < tgt.size(); ++j) {
      auto dc = double_cosets(gp, g.subgroup(src[i]), g.subgroup(tgt[j]));
      ncoef[i][j] = dc.cosets.size();
      Piece p{i, j, ro, co, {}};
      if (out.source_bases[i].cols() && out.target_bases[j].cols())
        for (const auto &c : dc.cosets) {
          std::vector<Integer> w(tcs[j].size());
          for (int y : c.elements)
            w[tcs[j].coset_of[y]] = 1;
          p.mats.push_back(pulled_block(model, tcs[j], w, left, out.target_bases[j]));
        }
      pieces.push_back(std::move(p));
      co += out.target_bases[j].cols();
    }
    ro += out.source_bases[i].cols();
  }

  std::mt19937_64 rng(options.seed);
  for (int bound = options.initial_bound; bound <= options.max_bound; ++bound) {
    std::uniform_int_distribution<long> dist(-bound, bound);
    for (int t = 0; t < options.tries_per_bound; ++t) {
      ++out.tries;
      std::vector<std::vector<std::vector<Integer>>> coeffs(src.size(), std::vector<std::vector<Integer>>(tgt.size()));
      QMatrix a(rows, cols);
      for (const auto &p : pieces) {
        auto &c = coeffs[p.i][p.j];
        c.resize(ncoef[p.i][p.j]);
        for (auto &x : c)
          x = dist(rng);
        if (p.mats.empty())
          continue;
        QMatrix blk(out.source_bases[p.i].cols(), out.target_bases[p.j].cols());
        for (std::size_t k = 0; k < c.size(); ++k)
          if (c[k] != 0)
            blk += p.mats[k] * Rational(c[k]);
        a.set_block(p.ro, p.co, blk);
      }
      if (a.determinant() == 0)
        continue;
      out.phi = PermutationModuleMap::from_double_cosets(gp, src, tgt, coeffs);
      out.phi_star = induced_map_on_invariants(out.phi, model, out.source_bases, out.target_bases);
      if (!(out.phi_star == a))
        throw InternalError("pullback of the assembled map disagrees with the search matrix");
      out.dual_star = induced_map_on_invariants(out.phi.dual(), model, out.target_bases, out.source_bases);
      return out;
    }
  }
  throw SearchExhaustedError("no realising map found within bound " + std::to_string(options.max_bound));
}

} // namespace brauer
