#include "brauer/character.hpp"

#include "brauer/error.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

namespace brauer {

// ---------------------------------------------------------------- ClassFunction

ClassFunction::ClassFunction(GroupPtr group) : group_(std::move(group)) {
  values_.assign(group_->class_count(), Cyclotomic(group_->exponent()));
}

ClassFunction::ClassFunction(GroupPtr group, std::vector<Cyclotomic> values)
    : group_(std::move(group)), values_(std::move(values)) {
  if (values_.size() != group_->class_count())
    throw ValidationError("class function needs one value per conjugacy class");
  int m = group_->exponent();
  for (auto &v : values_) {
    auto w = v.descend(m);
    if (!w)
      throw ValidationError("class function value " + v.to_string() + " lies outside Q(zeta_" +
                            std::to_string(m) + ")");
    v = std::move(*w);
  }
}

ClassFunction ClassFunction::constant(GroupPtr group, const Rational &c) {
  int m = group->exponent();
  std::vector<Cyclotomic> v(group->class_count(), Cyclotomic(m, c));
  return ClassFunction(std::move(group), std::move(v));
}

ClassFunction ClassFunction::from_rationals(GroupPtr group, const std::vector<Rational> &values) {
  int m = group->exponent();
  std::vector<Cyclotomic> v;
  for (const auto &x : values)
    v.emplace_back(m, x);
  return ClassFunction(std::move(group), std::move(v));
}

bool ClassFunction::is_zero() const {
  return std::all_of(values_.begin(), values_.end(), [](const Cyclotomic &c) { return c.is_zero(); });
}

bool ClassFunction::is_rational() const {
  return std::all_of(values_.begin(), values_.end(), [](const Cyclotomic &c) { return c.is_rational(); });
}

bool ClassFunction::is_real() const {
  for (const auto &v : values_)
    if (!(v.conj() == v))
      return false;
  return true;
}

ClassFunction ClassFunction::conj() const { return galois(-1); }

ClassFunction ClassFunction::galois(long k) const {
  ClassFunction out = *this;
  for (auto &v : out.values_)
    v = v.galois(k);
  return out;
}

void ClassFunction::require_same_group(const ClassFunction &other) const {
  if (group_ != other.group_)
    throw ValidationError("class functions live on different groups");
}

ClassFunction &ClassFunction::operator+=(const ClassFunction &other) {
  require_same_group(other);
  for (std::size_t i = 0; i < values_.size(); ++i)
    values_[i] += other.values_[i];
  return *this;
}

ClassFunction &ClassFunction::operator-=(const ClassFunction &other) {
  require_same_group(other);
  for (std::size_t i = 0; i < values_.size(); ++i)
    values_[i] -= other.values_[i];
  return *this;
}

ClassFunction &ClassFunction::operator*=(const ClassFunction &other) {
  require_same_group(other);
  for (std::size_t i = 0; i < values_.size(); ++i)
    values_[i] *= other.values_[i];
  return *this;
}

ClassFunction &ClassFunction::operator*=(const Rational &s) {
  for (auto &v : values_)
    v *= s;
  return *this;
}

bool operator==(const ClassFunction &a, const ClassFunction &b) {
  return a.group_ == b.group_ && a.values_ == b.values_;
}

std::vector<std::string> ClassFunction::value_strings() const {
  std::vector<std::string> out;
  for (const auto &v : values_)
    out.push_back(v.to_string());
  return out;
}

std::string ClassFunction::to_string() const {
  std::string s = "(";
  auto vs = value_strings();
  for (std::size_t i = 0; i < vs.size(); ++i)
    s += (i ? ", " : "") + vs[i];
  return s + ")";
}

// ---------------------------------------------------------------- inner products

Cyclotomic inner_product(const ClassFunction &a, const ClassFunction &b) {
  if (a.group() != b.group())
    throw ValidationError("inner product of class functions on different groups");
  const auto &g = *a.group();
  Cyclotomic sum(g.exponent());
  for (std::size_t k = 0; k < g.class_count(); ++k) {
    if (a[k].is_zero() || b[k].is_zero())
      continue;
    sum += a[k] * b[k].conj() * Rational(static_cast<long>(g.classes()[k].size()));
  }
  return sum / Rational(static_cast<long>(g.order()));
}

Rational inner_product_q(const ClassFunction &a, const ClassFunction &b) {
  return inner_product(a, b).to_rational();
}

std::vector<Integer> decompose(const ClassFunction &chi) {
  const auto &table = chi.group()->character_table();
  std::vector<Integer> out;
  for (std::size_t i = 0; i < table.size(); ++i) {
    Cyclotomic m = inner_product(chi, table.character(i));
    if (!m.is_rational() || m.to_rational().get_den() != 1)
      throw ValidationError("class function is not a virtual character");
    out.push_back(m.to_rational().get_num());
  }
  return out;
}

ClassFunction from_multiplicities(const GroupPtr &group, const std::vector<Integer> &mult) {
  const auto &table = group->character_table();
  if (mult.size() != table.size())
    throw ValidationError("multiplicity vector length differs from the number of irreducibles");
  ClassFunction out(group);
  for (std::size_t i = 0; i < mult.size(); ++i)
    if (mult[i] != 0)
      out += table.character(i) * Rational(mult[i]);
  return out;
}

bool is_true_character(const ClassFunction &chi) {
  try {
    for (const auto &m : decompose(chi))
      if (m < 0)
        return false;
  } catch (const ValidationError &) {
    return false;
  }
  return true;
}

// ---------------------------------------------------------------- restriction, induction

ClassFunction restrict_to(const ClassFunction &chi, const Subgroup &h) {
  const auto &g = *chi.group();
  GroupPtr hg = g.subgroup_as_group(h);
  std::vector<Cyclotomic> vals;
  for (const auto &c : hg->classes())
    vals.push_back(chi.at_element(h.elements[c.representative]));
  return ClassFunction(hg, std::move(vals));
}

ClassFunction induce(const GroupPtr &group, const Subgroup &h, const ClassFunction &tau) {
  const auto &g = *group;
  GroupPtr hg = g.subgroup_as_group(h);
  if (tau.group() != hg)
    throw ValidationError("inducing character does not live on the given subgroup");
  int m = g.exponent();
  std::vector<Cyclotomic> sums(g.class_count(), Cyclotomic(m));
  for (std::size_t j = 0; j < h.order(); ++j)
    sums[g.class_of(h.elements[j])] += tau.at_element(static_cast<int>(j)).embed(m);
  std::vector<Cyclotomic> vals;
  for (std::size_t k = 0; k < g.class_count(); ++k) {
    Rational f = make_rational(static_cast<long>(g.order()),
                               static_cast<long>(h.order() * g.classes()[k].size()));
    vals.push_back(sums[k] * f);
  }
  return ClassFunction(group, std::move(vals));
}

ClassFunction permutation_character(const GSet &x) {
  const auto &g = *x.group();
  std::vector<Rational> vals;
  for (const auto &c : g.classes())
    vals.emplace_back(static_cast<long>(x.fixed_point_count(c.representative)));
  return ClassFunction::from_rationals(x.group(), vals);
}

ClassFunction permutation_character(const GroupPtr &group, const Subgroup &h) {
  std::vector<Rational> vals;
  for (std::size_t k = 0; k < group->class_count(); ++k)
    vals.emplace_back(static_cast<long>(group->fixed_points(h, static_cast<int>(k))));
  return ClassFunction::from_rationals(group, vals);
}

// ---------------------------------------------------------------- determinants

std::vector<Integer> eigenvalue_multiplicities(const ClassFunction &chi, int k) {
  const auto &g = *chi.group();
  int o = g.classes()[k].element_order;
  int m = g.exponent();
  std::vector<Integer> out(o);
  for (int s = 0; s < o; ++s) {
    Cyclotomic sum(m);
    for (int l = 0; l < o; ++l) {
      const Cyclotomic &v = chi[g.power_class(k, l)];
      if (v.is_zero())
        continue;
      long e = (static_cast<long>(-s) * l % o + o) % o;
      sum += v * Cyclotomic::root_of_unity(m, e * (m / o));
    }
    sum /= Rational(o);
    if (!sum.is_rational() || sum.to_rational().get_den() != 1)
      throw ValidationError("class function is not a character: fractional eigenvalue multiplicity");
    out[s] = sum.to_rational().get_num();
  }
  return out;
}

ClassFunction virtual_determinant(const ClassFunction &chi) {
  const auto &g = *chi.group();
  int m = g.exponent();
  std::vector<Cyclotomic> vals;
  for (std::size_t k = 0; k < g.class_count(); ++k) {
    auto mult = eigenvalue_multiplicities(chi, static_cast<int>(k));
    int o = static_cast<int>(mult.size());
    Integer e = 0;
    for (int s = 0; s < o; ++s)
      e += mult[s] * s;
    Integer r = e % o;
    if (r < 0)
      r += o;
    vals.push_back(Cyclotomic::root_of_unity(m, r.get_si() * (m / o)));
  }
  return ClassFunction(chi.group(), std::move(vals));
}

ClassFunction determinant_character(const ClassFunction &chi) {
  if (!is_true_character(chi))
    throw UnsupportedError("determinant requested for a virtual character");
  return virtual_determinant(chi);
}

ClassFunction sign_character(const GSet &x) {
  const auto &g = *x.group();
  std::vector<Rational> vals;
  for (const auto &c : g.classes())
    vals.emplace_back(x.sign(c.representative));
  return ClassFunction::from_rationals(x.group(), vals);
}

ClassFunction induced_determinant(const GroupPtr &group, const Subgroup &h, const ClassFunction &tau) {
  const auto &g = *group;
  GroupPtr hg = g.subgroup_as_group(h);
  ClassFunction det_tau = virtual_determinant(tau);
  Rational dim = tau.degree();
  if (dim.get_den() != 1)
    throw ValidationError("inducing character has non-integral degree");
  CosetSpace cs = coset_space(group, h);
  std::vector<int> pos(g.order(), -1);
  for (std::size_t j = 0; j < h.order(); ++j)
    pos[h.elements[j]] = static_cast<int>(j);
  int m = g.exponent();
  std::vector<Cyclotomic> vals;
  for (const auto &c : g.classes()) {
    int x = c.representative;
    Cyclotomic prod(m, 1L);
    for (std::size_t i = 0; i < cs.size(); ++i) {
      int gt = g.mul(x, cs.representatives[i]);
      int j = cs.coset_of[gt];
      // g t_i = t_j h_i
      int hi = g.mul(g.inv(cs.representatives[j]), gt);
      prod *= det_tau.at_element(pos[hi]).embed(m);
    }
    int sign = cs.gset.sign(x);
    if (sign < 0 && dim.get_num() % 2 != 0)
      prod = -prod;
    vals.push_back(prod);
  }
  return ClassFunction(group, std::move(vals));
}

// ---------------------------------------------------------------- Dixon

namespace {

long mulmod(long a, long b, long p) { return static_cast<long>((__int128)a * b % p); }

long powmod(long a, long e, long p) {
  long r = 1 % p;
  a %= p;
  if (a < 0)
    a += p;
  while (e > 0) {
    if (e & 1)
      r = mulmod(r, a, p);
    a = mulmod(a, a, p);
    e >>= 1;
  }
  return r;
}

long invmod(long a, long p) { return powmod(a, p - 2, p); }

long norm(long a, long p) {
  a %= p;
  return a < 0 ? a + p : a;
}

long primitive_root(long p) {
  std::vector<long> qs;
  long n = p - 1;
  for (long q = 2; q * q <= n; ++q)
    if (n % q == 0) {
      qs.push_back(q);
      while (n % q == 0)
        n /= q;
    }
  if (n > 1)
    qs.push_back(n);
  for (long g = 2; g < p; ++g) {
    bool ok = true;
    for (long q : qs)
      if (powmod(g, (p - 1) / q, p) == 1) {
        ok = false;
        break;
      }
    if (ok)
      return g;
  }
  throw InternalError("no primitive root found");
}

using ModMatrix = std::vector<std::vector<long>>;

/// Basis (rows) of the null space of a (rows x cols) mod p.
ModMatrix mod_nullspace(ModMatrix a, std::size_t cols, long p) {
  std::size_t rows = a.size();
  std::vector<std::size_t> piv;
  std::size_t r = 0;
  for (std::size_t c = 0; c < cols && r < rows; ++c) {
    std::size_t k = r;
    while (k < rows && a[k][c] == 0)
      ++k;
    if (k == rows)
      continue;
    std::swap(a[k], a[r]);
    long inv = invmod(a[r][c], p);
    for (auto &x : a[r])
      x = mulmod(x, inv, p);
    for (std::size_t i = 0; i < rows; ++i) {
      if (i == r || a[i][c] == 0)
        continue;
      long f = a[i][c];
      for (std::size_t j = 0; j < cols; ++j)
        a[i][j] = norm(a[i][j] - mulmod(f, a[r][j], p), p);
    }
    piv.push_back(c);
    ++r;
  }
  std::vector<bool> is_piv(cols, false);
  for (auto c : piv)
    is_piv[c] = true;
  ModMatrix out;
  for (std::size_t f = 0; f < cols; ++f) {
    if (is_piv[f])
      continue;
    std::vector<long> v(cols, 0);
    v[f] = 1;
    for (std::size_t i = 0; i < piv.size(); ++i)
      v[piv[i]] = norm(-a[i][f], p);
    out.push_back(std::move(v));
  }
  return out;
}

/// Row-reduces a basis so that the pivot coordinates carry an identity block.
void mod_rref_rows(ModMatrix &basis, std::vector<std::size_t> &pivots, long p) {
  std::size_t rows = basis.size();
  std::size_t cols = rows ? basis[0].size() : 0;
  pivots.clear();
  std::size_t r = 0;
  for (std::size_t c = 0; c < cols && r < rows; ++c) {
    std::size_t k = r;
    while (k < rows && basis[k][c] == 0)
      ++k;
    if (k == rows)
      continue;
    std::swap(basis[k], basis[r]);
    long inv = invmod(basis[r][c], p);
    for (auto &x : basis[r])
      x = mulmod(x, inv, p);
    for (std::size_t i = 0; i < rows; ++i) {
      if (i == r || basis[i][c] == 0)
        continue;
      long f = basis[i][c];
      for (std::size_t j = 0; j < cols; ++j)
        basis[i][j] = norm(basis[i][j] - mulmod(f, basis[r][j], p), p);
    }
    pivots.push_back(c);
    ++r;
  }
  if (r != rows)
    throw InternalError("dependent basis in eigenspace splitting");
}

/// Characteristic polynomial coefficients (low degree first) by Faddeev-LeVerrier.
std::vector<long> mod_charpoly(const ModMatrix &a, long p) {
  std::size_t d = a.size();
  std::vector<long> c(d + 1, 0);
  c[d] = 1;
  ModMatrix mk(d, std::vector<long>(d, 0));
  for (std::size_t k = 1; k <= d; ++k) {
    // mk = a * mk + c[d-k+1] I
    ModMatrix next(d, std::vector<long>(d, 0));
    for (std::size_t i = 0; i < d; ++i)
      for (std::size_t l = 0; l < d; ++l) {
        if (a[i][l] == 0)
          continue;
        for (std::size_t j = 0; j < d; ++j)
          next[i][j] = norm(next[i][j] + mulmod(a[i][l], mk[l][j], p), p);
      }
    for (std::size_t i = 0; i < d; ++i)
      next[i][i] = norm(next[i][i] + c[d - k + 1], p);
    mk = std::move(next);
    long tr = 0;
    for (std::size_t i = 0; i < d; ++i)
      for (std::size_t l = 0; l < d; ++l)
        tr = norm(tr + mulmod(a[i][l], mk[l][i], p), p);
    c[d - k] = norm(-mulmod(tr, invmod(static_cast<long>(k), p), p), p);
  }
  return c;
}

} // namespace

CharacterTable::CharacterTable(const FiniteGroup &group) : group_(&group) {
  const auto &g = group;
  std::size_t r = g.class_count();
  long n = static_cast<long>(g.order());
  long e = g.exponent();

  long p = e + 1;
  auto bound = 2.0 * std::sqrt(static_cast<double>(n));
  while (!(is_prime(p) && static_cast<double>(p) > bound && p > static_cast<long>(r)))
    p += e;
  prime_ = p;
  long xi = powmod(primitive_root(p), (p - 1) / e, p);

  // class coefficients: M_j[l][k] = #{x in C_j : x^-1 z_k in C_l}
  std::vector<ModMatrix> mats(r, ModMatrix(r, std::vector<long>(r, 0)));
  for (std::size_t k = 0; k < r; ++k) {
    int z = g.classes()[k].representative;
    for (std::size_t x = 0; x < g.order(); ++x) {
      int j = g.class_of(static_cast<int>(x));
      int l = g.class_of(g.mul(g.inv(static_cast<int>(x)), z));
      mats[j][l][k] += 1;
    }
  }

  // split F_p^r into common eigenspaces of all M_j
  std::vector<ModMatrix> spaces;
  {
    ModMatrix full(r, std::vector<long>(r, 0));
    for (std::size_t i = 0; i < r; ++i)
      full[i][i] = 1;
    spaces.push_back(full);
  }
  for (std::size_t j = 1; j < r && spaces.size() < r; ++j) {
    std::vector<ModMatrix> next;
    for (auto &w : spaces) {
      std::size_t d = w.size();
      if (d == 1) {
        next.push_back(w);
        continue;
      }
      std::vector<std::size_t> piv;
      mod_rref_rows(w, piv, p);
      // restricted action: row i of a holds coordinates of M_j w_i
      ModMatrix a(d, std::vector<long>(d, 0));
      for (std::size_t i = 0; i < d; ++i) {
        std::vector<long> img(r, 0);
        for (std::size_t l = 0; l < r; ++l)
          for (std::size_t k = 0; k < r; ++k)
            if (mats[j][l][k])
              img[l] = norm(img[l] + mulmod(mats[j][l][k], w[i][k], p), p);
        for (std::size_t t = 0; t < d; ++t)
          a[t][i] = img[piv[t]];
      }
      auto cp = mod_charpoly(a, p);
      std::size_t covered = 0;
      for (long lambda = 0; lambda < p && covered < d; ++lambda) {
        long val = 0;
        for (std::size_t t = cp.size(); t-- > 0;)
          val = norm(mulmod(val, lambda, p) + cp[t], p);
        if (val != 0)
          continue;
        ModMatrix shifted = a;
        for (std::size_t t = 0; t < d; ++t)
          shifted[t][t] = norm(shifted[t][t] - lambda, p);
        auto ns = mod_nullspace(shifted, d, p);
        ModMatrix sub;
        for (const auto &coef : ns) {
          std::vector<long> v(r, 0);
          for (std::size_t t = 0; t < d; ++t)
            if (coef[t])
              for (std::size_t k = 0; k < r; ++k)
                v[k] = norm(v[k] + mulmod(coef[t], w[t][k], p), p);
          sub.push_back(std::move(v));
        }
        covered += sub.size();
        next.push_back(std::move(sub));
      }
      if (covered != d)
        throw InternalError("class matrix not diagonalizable modulo the chosen prime");
    }
    spaces = std::move(next);
  }
  if (spaces.size() != r)
    throw InternalError("eigenspace splitting did not separate all characters");

  auto class_size = [&](std::size_t k) { return static_cast<long>(g.classes()[k].size()); };
  std::vector<std::vector<Cyclotomic>> rows;
  for (auto &w : spaces) {
    std::vector<long> vec = w[0];
    long inv0 = invmod(vec[0], p);
    for (auto &x : vec)
      x = mulmod(x, inv0, p);
    long s = 0;
    for (std::size_t k = 0; k < r; ++k)
      s = norm(s + mulmod(mulmod(vec[k], vec[g.inverse_class(static_cast<int>(k))], p), invmod(class_size(k), p), p), p);
    long d2 = mulmod(n % p, invmod(s, p), p);
    long deg = 0;
    for (long d = 1; d * d <= n; ++d)
      if (mulmod(d, d, p) == d2) {
        deg = d;
        break;
      }
    if (deg == 0)
      throw InternalError("no admissible character degree found");
    std::vector<long> modval(r);
    for (std::size_t k = 0; k < r; ++k)
      modval[k] = mulmod(mulmod(vec[k], deg, p), invmod(class_size(k), p), p);

    std::vector<Cyclotomic> row;
    for (std::size_t k = 0; k < r; ++k) {
      int o = g.classes()[k].element_order;
      long xo = powmod(xi, e / o, p);
      Cyclotomic val(static_cast<int>(e));
      for (int t = 0; t < o; ++t) {
        long ms = 0;
        for (int l = 0; l < o; ++l)
          ms = norm(ms + mulmod(modval[g.power_class(static_cast<int>(k), l)],
                                powmod(xo, norm(-static_cast<long>(t) * l, o), p), p), p);
        ms = mulmod(ms, invmod(o, p), p);
        if (ms > deg)
          throw InternalError("eigenvalue multiplicity out of range in character lift");
        if (ms)
          val += Cyclotomic::root_of_unity(static_cast<int>(e), t * (e / o)) * Rational(ms);
      }
      row.push_back(val);
    }
    rows.push_back(std::move(row));
  }

  // canonical order: trivial first, then degree, then values descending
  auto is_triv = [&](const std::vector<Cyclotomic> &row) {
    for (const auto &v : row)
      if (!(v == Cyclotomic(static_cast<int>(e), 1L)))
        return false;
    return true;
  };
  std::sort(rows.begin(), rows.end(), [&](const auto &a, const auto &b) {
    bool ta = is_triv(a), tb = is_triv(b);
    if (ta != tb)
      return ta;
    Rational da = a[0].to_rational(), db = b[0].to_rational();
    if (da != db)
      return da < db;
    for (std::size_t k = 0; k < a.size(); ++k) {
      auto c = compare(a[k], b[k]);
      if (c != 0)
        return c > 0;
    }
    return false;
  });
  rows_ = std::move(rows);

  // exact verification of the orthogonality relations
  Rational sumsq = 0;
  for (std::size_t i = 0; i < r; ++i) {
    sumsq += rows_[i][0].to_rational() * rows_[i][0].to_rational();
    for (std::size_t j = i; j < r; ++j) {
      Cyclotomic ip(static_cast<int>(e));
      for (std::size_t k = 0; k < r; ++k)
        ip += rows_[i][k] * rows_[j][k].conj() * Rational(class_size(k));
      if (!(ip == Cyclotomic(static_cast<int>(e), i == j ? n : 0L)))
        throw InternalError("character table failed the orthogonality check");
    }
  }
  if (sumsq != n)
    throw InternalError("character degrees do not square-sum to the group order");

  for (std::size_t i = 0; i < r; ++i) {
    Cyclotomic fs(static_cast<int>(e));
    for (std::size_t k = 0; k < r; ++k)
      fs += rows_[i][g.power_class(static_cast<int>(k), 2)] * Rational(class_size(k));
    Rational nu = fs.to_rational() / n;
    indicators_.push_back(nu == 1 ? Indicator::real : nu == -1 ? Indicator::quaternionic : Indicator::complex);
    for (const auto &v : rows_[i])
      if (!v.is_rational())
        rational_ = false;
  }

  auto find_row = [&](const std::vector<Cyclotomic> &row) {
    for (std::size_t j = 0; j < r; ++j)
      if (rows_[j] == row)
        return j;
    throw InternalError("Galois image of a character is missing from the table");
  };
  orbit_of_.assign(r, r);
  for (std::size_t i = 0; i < r; ++i) {
    std::vector<Cyclotomic> c;
    for (const auto &v : rows_[i])
      c.push_back(v.conj());
    conjugate_.push_back(find_row(c));
    if (orbit_of_[i] != r)
      continue;
    std::vector<std::size_t> orbit;
    for (long k = 1; k <= e; ++k) {
      if (std::gcd(k, e) != 1)
        continue;
      std::vector<Cyclotomic> gk;
      for (const auto &v : rows_[i])
        gk.push_back(v.galois(k));
      std::size_t j = find_row(gk);
      if (orbit_of_[j] == r) {
        orbit_of_[j] = orbits_.size();
        orbit.push_back(j);
      }
    }
    std::sort(orbit.begin(), orbit.end());
    orbits_.push_back(std::move(orbit));
  }
}

ClassFunction CharacterTable::character(std::size_t i) const {
  return ClassFunction(group_->shared_from_this(), rows_[i]);
}

std::vector<ClassFunction> CharacterTable::characters() const {
  std::vector<ClassFunction> out;
  for (std::size_t i = 0; i < rows_.size(); ++i)
    out.push_back(character(i));
  return out;
}

ClassFunction CharacterTable::rational_irreducible(std::size_t orbit) const {
  ClassFunction out(group_->shared_from_this());
  for (std::size_t i : orbits_[orbit])
    out += character(i);
  return out;
}

const CharacterTable &FiniteGroup::character_table() const {
  std::lock_guard<std::mutex> lock(cache_mutex_);
  if (!table_cache_)
    table_cache_ = std::make_shared<CharacterTable>(*this);
  return *table_cache_;
}

} // namespace brauer
