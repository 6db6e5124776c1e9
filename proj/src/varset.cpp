#include "shannonfd/varset.hpp"

#include <stdexcept>
#include <string>

#include "shannonfd/error.hpp"
#include "shannonfd/rational.hpp"

namespace shannonfd {

void check_ground_size(int n) {
  if (n < 1 || n > kMaxVariables) {
    throw Error(ErrorKind::kOutOfRange,
                "ground-set size " + std::to_string(n) + " outside [1, " +
                    std::to_string(kMaxVariables) + "]");
  }
}

void check_enumeration_cap(int n, int cap) {
  check_ground_size(n);
  if (n > cap) {
    throw Error(ErrorKind::kCapExceeded,
                "n = " + std::to_string(n) + " exceeds the cap of " +
                    std::to_string(cap));
  }
}

void check_within(VarSet s, int n) {
  if (!s.is_subset_of(VarSet::full(n))) {
    throw Error(ErrorKind::kOutOfRange,
                "variable index out of range for n = " + std::to_string(n));
  }
}

std::string format_set(VarSet s, const std::vector<std::string>& names,
                       std::string_view sep) {
  std::string out;
  for (int v : s.members()) {
    if (!out.empty()) out += sep;
    out += names.empty() ? std::to_string(v + 1) : names.at(v);
  }
  return out;
}

Rational parse_rational(std::string_view text) {
  auto digits = [](std::string_view s) {
    if (s.empty()) return false;
    for (char ch : s) {
      if (ch < '0' || ch > '9') return false;
    }
    return true;
  };
  std::string_view body = text;
  bool negative = false;
  if (!body.empty() && (body.front() == '-' || body.front() == '+')) {
    negative = body.front() == '-';
    body.remove_prefix(1);
  }
  const auto slash = body.find('/');
  const std::string_view num = body.substr(0, slash);
  const std::string_view den =
      slash == std::string_view::npos ? std::string_view("1") : body.substr(slash + 1);
  if (!digits(num) || !digits(den)) {
    throw std::invalid_argument("not a rational: '" + std::string(text) + "'");
  }
  mpz_class p(std::string(num), 10);
  mpz_class q(std::string(den), 10);
  if (q == 0) throw std::invalid_argument("zero denominator");
  Rational value(p, q);
  value.canonicalize();
  return negative ? Rational(-value) : value;
}

}  // namespace shannonfd
