#ifndef TPV_PART_ARITH_HPP
#define TPV_PART_ARITH_HPP

// Exact "part" arithmetic: k_w, k_{w'}, the heart part k_♥ and the
// geometric sums q^{n-1}+...+q+1 that appear as bounds everywhere.

#include <cstdint>
#include <map>
#include <string>

#include <boost/multiprecision/cpp_int.hpp>

namespace tpv {

using BigInt = boost::multiprecision::cpp_int;

bool is_prime(const BigInt& n);
bool is_prime(std::uint64_t n);

// Nonnegative integer together with its prime factorization.
class PartedInteger {
 public:
  PartedInteger() : value_(1) {}
  explicit PartedInteger(const BigInt& value);
  explicit PartedInteger(std::uint64_t value) : PartedInteger(BigInt(value)) {}

  const BigInt& value() const { return value_; }
  // Empty for value 0 and value 1.
  const std::map<BigInt, unsigned>& factors() const { return factors_; }

  unsigned exponent(const BigInt& prime) const;

  PartedInteger operator*(const PartedInteger& other) const;

  bool operator==(const PartedInteger& other) const { return value_ == other.value_; }

 private:
  PartedInteger(BigInt value, std::map<BigInt, unsigned> factors)
      : value_(std::move(value)), factors_(std::move(factors)) {}

  BigInt value_;
  std::map<BigInt, unsigned> factors_;
};

// k_w: the largest power of the prime w dividing k.
BigInt part_pow(const BigInt& k, const BigInt& w);
// k_{w'} = k / k_w.
BigInt part_coprime(const BigInt& k, const BigInt& w);
// k_♥ = gcd(k,3) times the full p-parts of k over primes p ≡ 1 (mod 3).
BigInt heart(const BigInt& k);
BigInt heart(const PartedInteger& k);
// k_{p',♥}: the largest divisor of k_♥ coprime to p.
BigInt heart_coprime(const BigInt& k, const BigInt& p);
// (q^n - 1)/(q - 1).
BigInt geom_sum(const BigInt& q, unsigned n);
// |GL_n(q)| and its 2-part, exactly.
BigInt gl_order(unsigned n, const BigInt& q);
BigInt gl_order_two_part(unsigned n, const BigInt& q);

// Odd prime power q = p^a; returns {p, a} or throws InvalidArgument.
struct PrimePower {
  std::uint64_t p;
  unsigned a;
};
PrimePower decompose_prime_power(std::uint64_t q);
bool is_prime_power(std::uint64_t q);

std::string to_string(const BigInt& v);

}  // namespace tpv

#endif  // TPV_PART_ARITH_HPP
