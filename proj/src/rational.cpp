#include "suffstat/rational.hpp"

#include <cctype>

namespace suffstat {

Rat make_rat(const Int& num, const Int& den) {
  if (den == 0) {
    throw Error("make_rat: zero denominator");
  }
  Rat r(num, den);
  r.canonicalize();
  return r;
}

Int factorial(long long n) {
  if (n < 0) {
    throw Error("factorial: negative argument");
  }
  Int r;
  mpz_fac_ui(r.get_mpz_t(), static_cast<unsigned long>(n));
  return r;
}

Int binomial(long long n, long long k) {
  if (k < 0 || k > n) {
    return 0;
  }
  Int r;
  mpz_bin_uiui(r.get_mpz_t(), static_cast<unsigned long>(n),
               static_cast<unsigned long>(k));
  return r;
}

Int int_pow(const Int& base, long long exp) {
  if (exp < 0) {
    throw Error("int_pow: negative exponent");
  }
  Int r;
  mpz_pow_ui(r.get_mpz_t(), base.get_mpz_t(), static_cast<unsigned long>(exp));
  return r;
}

Rat rat_pow(const Rat& base, long long exp) {
  if (exp < 0) {
    if (base == 0) {
      throw Error("rat_pow: zero base with negative exponent");
    }
    return rat_pow(Rat(1) / base, -exp);
  }
  return make_rat(int_pow(base.get_num(), exp), int_pow(base.get_den(), exp));
}

std::string format_rat(const Rat& r) {
  std::string s = r.get_num().get_str();
  if (r.get_den() != 1) {
    s += "/" + r.get_den().get_str();
  }
  return s;
}

Rat parse_rat(std::string_view text) {
  auto is_int = [](std::string_view s) {
    if (!s.empty() && s.front() == '-') {
      s.remove_prefix(1);
    }
    if (s.empty()) {
      return false;
    }
    for (char c : s) {
      if (!std::isdigit(static_cast<unsigned char>(c))) {
        return false;
      }
    }
    return true;
  };
  const auto slash = text.find('/');
  std::string_view num = text.substr(0, slash);
  std::string_view den =
      slash == std::string_view::npos ? std::string_view("1") : text.substr(slash + 1);
  if (!is_int(num) || !is_int(den)) {
    throw Error("parse_rat: malformed rational '" + std::string(text) + "'");
  }
  return make_rat(Int(std::string(num)), Int(std::string(den)));
}

}  // namespace suffstat
