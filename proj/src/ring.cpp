#include "horolamp/ring.hpp"

#include <utility>

namespace horolamp {

Int ext_gcd(const Int& a, const Int& b, Int& x, Int& y) {
  Int old_r = a, r = b;
  Int old_x = 1, cur_x = 0;
  Int old_y = 0, cur_y = 1;
  while (r != 0) {
    Int q = old_r / r;
    old_r -= q * r; std::swap(old_r, r);
    old_x -= q * cur_x; std::swap(old_x, cur_x);
    old_y -= q * cur_y; std::swap(old_y, cur_y);
  }
  if (old_r < 0) { old_r = -old_r; old_x = -old_x; old_y = -old_y; }
  x = old_x;
  y = old_y;
  return old_r;
}

Int binomial(long long n, long long k) {
  if (k < 0 || n < 0 || k > n) return 0;
  if (k > n - k) k = n - k;
  Int result = 1;
  for (long long i = 1; i <= k; ++i) {
    result *= n - k + i;
    result /= i;
  }
  return result;
}

Ring Ring::residues(const Int& modulus) {
  if (modulus < 1) throw ParseError("modulus must be >= 1, got " + to_string(modulus));
  return Ring(modulus);
}

Ring Ring::parse(const std::string& name) {
  if (name == "Z") return integers();
  if (name.rfind("Z/", 0) == 0) {
    const std::string digits = name.substr(2);
    if (digits.empty() || digits.find_first_not_of("0123456789") != std::string::npos)
      throw ParseError("bad modulus in ring name '" + name + "'", 2);
    return residues(Int(digits));
  }
  throw ParseError("unknown ring '" + name + "' (expected Z or Z/<m>)");
}

std::string Ring::name() const {
  return modular() ? "Z/" + to_string(modulus_) : "Z";
}

Int Ring::reduce(const Int& v) const {
  if (!modular()) return v;
  Int r = v % modulus_;
  if (r < 0) r += modulus_;
  return r;
}

bool Ring::is_unit(const Int& a) const {
  if (!modular()) return a == 1 || a == -1;
  Int x, y;
  return ext_gcd(reduce(a), modulus_, x, y) == 1;
}

Int Ring::inv(const Int& a) const {
  if (!modular()) {
    if (a == 1 || a == -1) return a;
    throw NotInvertible(to_string(a), name());
  }
  const Int r = reduce(a);
  Int x, y;
  if (ext_gcd(r, modulus_, x, y) != 1) throw NotInvertible(to_string(r), name());
  return reduce(x);
}

std::vector<Int> Ring::elements(std::optional<long long> bound) const {
  std::vector<Int> out;
  if (modular()) {
    for (Int r = 0; r < modulus_; ++r) out.push_back(r);
    return out;
  }
  if (!bound.has_value() || *bound < 0)
    throw NotSupported("enumerating Z requires a non-negative coefficient bound");
  out.push_back(0);
  for (long long r = 1; r <= *bound; ++r) {
    out.push_back(Int(r));
    out.push_back(Int(-r));
  }
  return out;
}

}  // namespace horolamp
