#include "brauer/covers.hpp"

#include "brauer/error.hpp"

#include <algorithm>
#include <numeric>

namespace brauer {

EtaleAlgebraModel::EtaleAlgebraModel(GSet points) : points_(std::move(points)) {
  if (!points_.group())
    throw ValidationError("etale algebra model needs a group");
  std::size_t n = 0;
  for (const auto &o : points_.orbits())
    n += o.size();
  if (n != points_.size())
    throw InternalError("orbits do not partition the points");
}

EtaleAlgebraModel EtaleAlgebraModel::natural(const GroupPtr &gamma) {
  std::vector<std::vector<int>> action(gamma->order());
  for (std::size_t g = 0; g < gamma->order(); ++g)
    action[g] = gamma->element(static_cast<int>(g));
  return EtaleAlgebraModel(GSet(gamma, std::move(action)));
}

std::vector<std::size_t> EtaleAlgebraModel::orbit_sizes() const {
  std::vector<std::size_t> out;
  for (const auto &o : points_.orbits())
    out.push_back(o.size());
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<int> EtaleAlgebraModel::isomorphism_type() const { return points_.point_stabilizer_classes(); }

int SnClosure::index_of(const Perm &beta) const {
  auto it = index_.find(perm_code(beta));
  if (it == index_.end())
    throw ValidationError("not a bijection onto the base points");
  return it->second;
}

int SnClosure::left_act(int g, int beta) const {
  const auto &b = bijections_[beta];
  Perm out(b.size());
  for (std::size_t i = 0; i < b.size(); ++i)
    out[i] = base_.points().act(g, b[i]);
  return index_of(out);
}

int SnClosure::right_act(int beta, const Perm &sigma) const {
  const auto &b = bijections_[beta];
  if (sigma.size() != b.size())
    throw ValidationError("permutation has the wrong degree");
  Perm out(b.size());
  for (std::size_t i = 0; i < b.size(); ++i)
    out[i] = b[sigma[i]];
  return index_of(out);
}

std::vector<std::size_t> SnClosure::component_degrees() const {
  std::vector<std::size_t> out;
  for (const auto &c : components_)
    out.push_back(c.size());
  return out;
}

GSet SnClosure::gamma_set() const {
  const auto &gamma = base_.gamma();
  std::vector<std::vector<int>> action(gamma->order(), std::vector<int>(size()));
  for (std::size_t g = 0; g < gamma->order(); ++g)
    for (std::size_t b = 0; b < size(); ++b)
      action[g][b] = left_act(static_cast<int>(g), static_cast<int>(b));
  return GSet(gamma, std::move(action));
}

namespace {

// orbits of the group generated by the given maps on 0..n-1
std::vector<std::vector<int>> orbits_under(std::size_t n, const std::vector<std::vector<int>> &maps) {
  std::vector<int> seen(n, -1);
  std::vector<std::vector<int>> out;
  for (std::size_t x = 0; x < n; ++x) {
    if (seen[x] >= 0)
      continue;
    int k = static_cast<int>(out.size());
    std::vector<int> orbit{static_cast<int>(x)};
    seen[x] = k;
    for (std::size_t i = 0; i < orbit.size(); ++i)
      for (const auto &m : maps) {
        int y = m[orbit[i]];
        if (seen[y] < 0) {
          seen[y] = k;
          orbit.push_back(y);
        }
      }
    std::sort(orbit.begin(), orbit.end());
    out.push_back(std::move(orbit));
  }
  return out;
}

} // namespace

SnClosure sn_closure(const EtaleAlgebraModel &model) {
  std::size_t n = model.degree();
  if (n == 0 || n > 7)
    throw ResourceError("S_n-closure is limited to degree 1..7, got " + std::to_string(n));
  SnClosure c(model);
  Perm p(n);
  std::iota(p.begin(), p.end(), 0);
  do {
    c.index_.emplace(perm_code(p), static_cast<int>(c.bijections_.size()));
    c.bijections_.push_back(p);
  } while (std::next_permutation(p.begin(), p.end()));
  std::vector<std::vector<int>> maps;
  for (int s : model.gamma()->generators()) {
    std::vector<int> m(c.size());
    for (std::size_t b = 0; b < c.size(); ++b)
      m[b] = c.left_act(s, static_cast<int>(b));
    maps.push_back(std::move(m));
  }
  c.components_ = orbits_under(c.size(), maps);
  // the S_n side commutes with Gamma: check on generators
  for (const auto &sigma : symmetric_generators(static_cast<int>(n)))
    for (int s : model.gamma()->generators())
      for (std::size_t b = 0; b < c.size(); b += std::max<std::size_t>(1, c.size() / 64))
        if (c.right_act(c.left_act(s, static_cast<int>(b)), sigma) !=
            c.left_act(s, c.right_act(static_cast<int>(b), sigma)))
          throw InternalError("Gamma and S_n actions on Bij do not commute");
  return c;
}

EtaleAlgebraModel fixed_algebra(const SnClosure &closure, const std::vector<Perm> &u_generators) {
  std::size_t n = closure.base().degree();
  std::vector<std::vector<int>> maps;
  for (const auto &u : u_generators) {
    if (u.size() != n)
      throw ValidationError("subgroup generator has the wrong degree");
    std::vector<int> m(closure.size());
    for (std::size_t b = 0; b < closure.size(); ++b)
      m[b] = closure.right_act(static_cast<int>(b), u);
    maps.push_back(std::move(m));
  }
  auto orbits = orbits_under(closure.size(), maps);
  std::vector<int> orbit_of(closure.size());
  for (std::size_t k = 0; k < orbits.size(); ++k)
    for (int b : orbits[k])
      orbit_of[b] = static_cast<int>(k);
  const auto &gamma = closure.base().gamma();
  std::vector<std::vector<int>> action(gamma->order(), std::vector<int>(orbits.size()));
  for (std::size_t g = 0; g < gamma->order(); ++g)
    for (std::size_t k = 0; k < orbits.size(); ++k)
      action[g][k] = orbit_of[closure.left_act(static_cast<int>(g), orbits[k][0])];
  return EtaleAlgebraModel(GSet(gamma, std::move(action)));
}

std::vector<Perm> point_stabilizer_generators(int n) {
  std::vector<Perm> out;
  for (int i = 1; i + 1 < n; ++i) {
    Perm p = identity_perm(n);
    std::swap(p[i], p[i + 1]);
    out.push_back(p);
  }
  return out;
}

std::vector<Perm> symmetric_generators(int n) {
  std::vector<Perm> out;
  for (int i = 0; i + 1 < n; ++i) {
    Perm p = identity_perm(n);
    std::swap(p[i], p[i + 1]);
    out.push_back(p);
  }
  return out;
}

std::vector<Perm> alternating_generators(int n) {
  // 3-cycles (0 1 i)
  std::vector<Perm> out;
  for (int i = 2; i < n; ++i) {
    Perm p = identity_perm(n);
    p[0] = 1;
    p[1] = i;
    p[i] = 0;
    out.push_back(p);
  }
  return out;
}

} // namespace brauer
