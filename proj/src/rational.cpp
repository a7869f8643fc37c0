#include "brauer/rational.hpp"

#include "brauer/error.hpp"

#include <cctype>

namespace brauer {

std::string to_string(const Integer &value) { return value.get_str(); }

std::string to_string(const Rational &value) { return value.get_str(); }

Rational parse_rational(std::string_view text) {
  std::string s;
  for (char c : text)
    if (!std::isspace(static_cast<unsigned char>(c)))
      s.push_back(c);
  if (s.empty())
    throw ValidationError("empty rational literal");
  if (s.front() == '+')
    s.erase(s.begin());
  auto valid = [](const std::string &part) {
    std::size_t start = (!part.empty() && part[0] == '-') ? 1 : 0;
    if (start == part.size())
      return false;
    for (std::size_t i = start; i < part.size(); ++i)
      if (!std::isdigit(static_cast<unsigned char>(part[i])))
        return false;
    return true;
  };
  auto slash = s.find('/');
  Rational r;
  if (slash == std::string::npos) {
    if (!valid(s))
      throw ValidationError("malformed rational literal '" + s + "'");
    r = Rational(Integer(s));
  } else {
    std::string num = s.substr(0, slash), den = s.substr(slash + 1);
    if (!valid(num) || !valid(den) || den[0] == '-')
      throw ValidationError("malformed rational literal '" + s + "'");
    Integer d(den);
    if (d == 0)
      throw ValidationError("zero denominator in '" + s + "'");
    r = Rational(Integer(num), d);
  }
  r.canonicalize();
  return r;
}

long valuation(const Integer &value, const Integer &p) {
  if (value == 0)
    throw ValidationError("valuation of zero");
  Integer v = abs(value);
  long k = 0;
  while (mpz_divisible_p(v.get_mpz_t(), p.get_mpz_t())) {
    v /= p;
    ++k;
  }
  return k;
}

long valuation(const Rational &value, const Integer &p) {
  if (value == 0)
    throw ValidationError("valuation of zero");
  return valuation(value.get_num(), p) - valuation(value.get_den(), p);
}

bool is_prime(long n) {
  if (n < 2)
    return false;
  for (long d = 2; d * d <= n; ++d)
    if (n % d == 0)
      return false;
  return true;
}

std::vector<std::pair<Integer, unsigned long>> factorize(const Integer &n) {
  if (n == 0)
    throw ValidationError("cannot factor zero");
  std::vector<std::pair<Integer, unsigned long>> out;
  Integer m = abs(n);
  auto strip = [&](const Integer &p) {
    unsigned long e = 0;
    while (mpz_divisible_p(m.get_mpz_t(), p.get_mpz_t())) {
      m /= p;
      ++e;
    }
    if (e)
      out.emplace_back(p, e);
  };
  strip(Integer(2));
  for (Integer p = 3; p * p <= m; p += 2) {
    if (mpz_probab_prime_p(m.get_mpz_t(), 30) > 0)
      break;
    strip(p);
  }
  if (m > 1) {
    // remaining cofactor is prime (either certified or below the square bound)
    bool merged = false;
    for (auto &[q, e] : out)
      if (q == m) {
        ++e;
        merged = true;
      }
    if (!merged)
      out.emplace_back(m, 1);
  }
  return out;
}

Integer squarefree_part(const Rational &value) {
  if (value == 0)
    throw ValidationError("square class of zero");
  Integer m = abs(value.get_num() * value.get_den());
  Integer result = value < 0 ? -1 : 1;
  // values are typically a small constant times a huge square, so stop once the cofactor
  // is a square or a prime instead of factoring it completely
  auto settled = [&] {
    if (mpz_perfect_square_p(m.get_mpz_t()))
      return true;
    if (mpz_probab_prime_p(m.get_mpz_t(), 30) > 0) {
      result *= m;
      return true;
    }
    return false;
  };
  auto strip = [&](unsigned long p) {
    unsigned long e = 0;
    while (mpz_divisible_ui_p(m.get_mpz_t(), p)) {
      mpz_divexact_ui(m.get_mpz_t(), m.get_mpz_t(), p);
      ++e;
    }
    if (e % 2)
      result *= p;
    return e > 0;
  };
  if (settled())
    return result;
  if (strip(2) && settled())
    return result;
  for (unsigned long p = 3;; p += 2) {
    if (strip(p) && settled())
      return result;
    if (Integer(p) * p > m) {
      // m is 1 or prime here, both handled by settled()
      settled();
      return result;
    }
  }
}

bool is_rational_square(const Rational &value) {
  if (value < 0)
    return false;
  return mpz_perfect_square_p(value.get_num().get_mpz_t()) &&
         mpz_perfect_square_p(value.get_den().get_mpz_t());
}

} // namespace brauer
