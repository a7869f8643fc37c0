#include "brauer/permutation.hpp"

#include "brauer/error.hpp"

#include <algorithm>
#include <cctype>

namespace brauer {

Perm identity_perm(int degree) {
  Perm p(degree);
  for (int i = 0; i < degree; ++i)
    p[i] = i;
  return p;
}

Perm compose(const Perm &a, const Perm &b) {
  Perm c(b.size());
  for (std::size_t i = 0; i < b.size(); ++i)
    c[i] = a[b[i]];
  return c;
}

Perm invert(const Perm &p) {
  Perm q(p.size());
  for (std::size_t i = 0; i < p.size(); ++i)
    q[p[i]] = static_cast<int>(i);
  return q;
}

bool is_identity(const Perm &p) {
  for (std::size_t i = 0; i < p.size(); ++i)
    if (p[i] != static_cast<int>(i))
      return false;
  return true;
}

int perm_sign(const Perm &p) {
  std::vector<bool> seen(p.size(), false);
  int sign = 1;
  for (std::size_t i = 0; i < p.size(); ++i) {
    if (seen[i])
      continue;
    std::size_t len = 0;
    for (std::size_t j = i; !seen[j]; j = p[j]) {
      seen[j] = true;
      ++len;
    }
    if (len % 2 == 0)
      sign = -sign;
  }
  return sign;
}

Perm parse_cycles(std::string_view text, int degree) {
  Perm p = identity_perm(degree);
  std::vector<bool> used(degree, false);
  std::size_t i = 0;
  auto skip_ws = [&] {
    while (i < text.size() && std::isspace(static_cast<unsigned char>(text[i])))
      ++i;
  };
  skip_ws();
  if (i == text.size())
    return p;
  while (i < text.size()) {
    if (text[i] != '(')
      throw ValidationError("malformed permutation '" + std::string(text) + "': expected '('");
    ++i;
    std::vector<int> cycle;
    while (true) {
      skip_ws();
      if (i < text.size() && text[i] == ')') {
        ++i;
        break;
      }
      std::size_t start = i;
      while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i])))
        ++i;
      if (start == i)
        throw ValidationError("malformed permutation '" + std::string(text) + "': expected a point");
      int pt = std::stoi(std::string(text.substr(start, i - start)));
      if (pt < 1 || pt > degree)
        throw ValidationError("point " + std::to_string(pt) + " outside degree " + std::to_string(degree));
      if (used[pt - 1])
        throw ValidationError("point " + std::to_string(pt) + " repeated in '" + std::string(text) + "'");
      used[pt - 1] = true;
      cycle.push_back(pt - 1);
      skip_ws();
      if (i < text.size() && text[i] == ',')
        ++i;
    }
    for (std::size_t k = 0; k < cycle.size(); ++k)
      p[cycle[k]] = cycle[(k + 1) % cycle.size()];
    skip_ws();
  }
  return p;
}

std::string format_cycles(const Perm &p) {
  std::string out;
  std::vector<bool> seen(p.size(), false);
  for (std::size_t i = 0; i < p.size(); ++i) {
    if (seen[i] || p[i] == static_cast<int>(i))
      continue;
    out += "(";
    bool first = true;
    for (std::size_t j = i; !seen[j]; j = p[j]) {
      seen[j] = true;
      out += (first ? "" : ",") + std::to_string(j + 1);
      first = false;
    }
    out += ")";
  }
  return out.empty() ? "()" : out;
}

std::vector<int> cycle_type(const Perm &p) {
  std::vector<int> lens;
  std::vector<bool> seen(p.size(), false);
  for (std::size_t i = 0; i < p.size(); ++i) {
    if (seen[i])
      continue;
    int len = 0;
    for (std::size_t j = i; !seen[j]; j = p[j]) {
      seen[j] = true;
      ++len;
    }
    lens.push_back(len);
  }
  std::sort(lens.rbegin(), lens.rend());
  return lens;
}

std::uint64_t perm_code(const Perm &p) {
  std::uint64_t code = 0;
  for (std::size_t i = 0; i < p.size(); ++i)
    code |= static_cast<std::uint64_t>(p[i]) << (4 * i);
  return code;
}

} // namespace brauer
