#include "tpv/part_arith.hpp"

#include <array>
#include <limits>

#include "tpv/errors.hpp"

namespace tpv {

namespace mp = boost::multiprecision;

namespace {

constexpr std::array<unsigned, 13> kWitnessPrimes = {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37, 41};

bool miller_rabin(const BigInt& n, unsigned base) {
  BigInt d = n - 1;
  unsigned s = 0;
  while ((d & 1) == 0) {
    d >>= 1;
    ++s;
  }
  BigInt x = mp::powm(BigInt(base), d, n);
  if (x == 1 || x == n - 1) return true;
  for (unsigned r = 1; r < s; ++r) {
    x = (x * x) % n;
    if (x == n - 1) return true;
  }
  return false;
}

int jacobi(BigInt a, BigInt n) {
  a %= n;
  if (a < 0) a += n;
  int result = 1;
  while (a != 0) {
    while ((a & 1) == 0) {
      a >>= 1;
      const unsigned r = static_cast<unsigned>(n % 8);
      if (r == 3 || r == 5) result = -result;
    }
    std::swap(a, n);
    if (a % 4 == 3 && n % 4 == 3) result = -result;
    a %= n;
  }
  return n == 1 ? result : 0;
}

BigInt mod_pos(const BigInt& v, const BigInt& n) {
  BigInt r = v % n;
  if (r < 0) r += n;
  return r;
}

// Strong Lucas probable-prime test with Selfridge parameters.
bool strong_lucas(const BigInt& n) {
  BigInt root = mp::sqrt(n);
  if (root * root == n) return false;
  long long d_param = 5;
  while (true) {
    const int j = jacobi(BigInt(d_param), n);
    if (j == -1) break;
    if (j == 0 && mp::abs(BigInt(d_param)) != n) return false;
    d_param = d_param > 0 ? -(d_param + 2) : -(d_param - 2);
  }
  const BigInt D(d_param);
  const BigInt P(1);
  const BigInt Q = (1 - D) / 4;

  BigInt d = n + 1;
  unsigned s = 0;
  while ((d & 1) == 0) {
    d >>= 1;
    ++s;
  }
  const BigInt inv2 = (n + 1) / 2;
  BigInt U(1), V(P), Qk = mod_pos(Q, n);
  const unsigned bits = static_cast<unsigned>(mp::msb(d));
  for (int i = static_cast<int>(bits) - 1; i >= 0; --i) {
    U = mod_pos(U * V, n);
    V = mod_pos(V * V - 2 * Qk, n);
    Qk = mod_pos(Qk * Qk, n);
    if (mp::bit_test(d, static_cast<unsigned>(i))) {
      BigInt u2 = mod_pos((P * U + V) * inv2, n);
      BigInt v2 = mod_pos((D * U + P * V) * inv2, n);
      U = u2;
      V = v2;
      Qk = mod_pos(Qk * Q, n);
    }
  }
  if (U == 0 || V == 0) return true;
  for (unsigned r = 1; r < s; ++r) {
    V = mod_pos(V * V - 2 * Qk, n);
    Qk = mod_pos(Qk * Qk, n);
    if (V == 0) return true;
  }
  return false;
}

void add_factor(std::map<BigInt, unsigned>& factors, const BigInt& p, unsigned e) {
  if (e > 0) factors[p] += e;
}

std::map<BigInt, unsigned> trial_factor(BigInt n) {
  std::map<BigInt, unsigned> out;
  if (n <= 1) return out;
  for (unsigned p : {2u, 3u}) {
    unsigned e = 0;
    while (n % p == 0) {
      n /= p;
      ++e;
    }
    add_factor(out, p, e);
  }
  // Wheel over 6k±1 while the cofactor is composite.
  if (n > std::numeric_limits<std::uint64_t>::max()) {
    BigInt d = 5;
    bool cofactor_prime = is_prime(n);
    while (!cofactor_prime && d * d <= n && n > std::numeric_limits<std::uint64_t>::max()) {
      for (const BigInt& cand : {d, BigInt(d + 2)}) {
        unsigned e = 0;
        while (n % cand == 0) {
          n /= cand;
          ++e;
        }
        add_factor(out, cand, e);
        if (e > 0) cofactor_prime = is_prime(n);
      }
      d += 6;
    }
    if (n > std::numeric_limits<std::uint64_t>::max()) {
      if (n > 1) add_factor(out, n, 1);
      return out;
    }
  }
  auto m = static_cast<std::uint64_t>(n);
  bool cofactor_prime = m < 2 || is_prime(m);
  for (std::uint64_t d = 5; !cofactor_prime && d <= m / d; d += 6) {
    for (std::uint64_t cand : {d, d + 2}) {
      unsigned e = 0;
      while (m % cand == 0) {
        m /= cand;
        ++e;
      }
      add_factor(out, cand, e);
      if (e > 0) cofactor_prime = m < 2 || is_prime(m);
    }
  }
  if (m > 1) add_factor(out, m, 1);
  return out;
}

void require_prime(const BigInt& w) {
  if (!is_prime(w)) throw InvalidArgument("expected a prime, got " + to_string(w));
}

void require_positive(const BigInt& k) {
  if (k < 1) throw InvalidArgument("expected a positive integer, got " + to_string(k));
}

}  // namespace

bool is_prime(const BigInt& n) {
  if (n < 2) return false;
  for (unsigned p : kWitnessPrimes) {
    if (n == p) return true;
    if (n % p == 0) return false;
  }
  for (unsigned p : kWitnessPrimes) {
    if (!miller_rabin(n, p)) return false;
  }
  // The first 13 prime bases are a proven witness set below 3.3e24.
  static const BigInt kDeterministicLimit("3317044064679887385961981");
  if (n < kDeterministicLimit) return true;
  return strong_lucas(n);
}

bool is_prime(std::uint64_t n) { return is_prime(BigInt(n)); }

PartedInteger::PartedInteger(const BigInt& value) : value_(value) {
  if (value < 0) throw InvalidArgument("PartedInteger requires a nonnegative value");
  factors_ = trial_factor(value);
}

unsigned PartedInteger::exponent(const BigInt& prime) const {
  auto it = factors_.find(prime);
  return it == factors_.end() ? 0 : it->second;
}

PartedInteger PartedInteger::operator*(const PartedInteger& other) const {
  if (value_ == 0 || other.value_ == 0) return PartedInteger(BigInt(0));
  std::map<BigInt, unsigned> merged = factors_;
  for (const auto& [p, e] : other.factors_) merged[p] += e;
  return PartedInteger(value_ * other.value_, std::move(merged));
}

BigInt part_pow(const BigInt& k, const BigInt& w) {
  require_positive(k);
  require_prime(w);
  BigInt part = 1;
  BigInt rest = k;
  while (rest % w == 0) {
    rest /= w;
    part *= w;
  }
  return part;
}

BigInt part_coprime(const BigInt& k, const BigInt& w) { return k / part_pow(k, w); }

BigInt heart(const PartedInteger& k) {
  if (k.value() < 1) throw InvalidArgument("heart requires k >= 1");
  BigInt out = 1;
  for (const auto& [p, e] : k.factors()) {
    if (p == 3) {
      out *= 3;
    } else if (p % 3 == 1) {
      out *= mp::pow(p, e);
    }
  }
  return out;
}

BigInt heart(const BigInt& k) {
  require_positive(k);
  return heart(PartedInteger(k));
}

BigInt heart_coprime(const BigInt& k, const BigInt& p) { return heart(part_coprime(k, p)); }

BigInt geom_sum(const BigInt& q, unsigned n) {
  if (q < 2) throw InvalidArgument("geom_sum requires q >= 2");
  if (n < 1) throw InvalidArgument("geom_sum requires n >= 1");
  return (mp::pow(q, n) - 1) / (q - 1);
}

BigInt gl_order(unsigned n, const BigInt& q) {
  if (n < 1) throw InvalidArgument("gl_order requires n >= 1");
  const BigInt qn = mp::pow(q, n);
  BigInt out = 1;
  BigInt qi = 1;
  for (unsigned i = 0; i < n; ++i) {
    out *= qn - qi;
    qi *= q;
  }
  return out;
}

BigInt gl_order_two_part(unsigned n, const BigInt& q) {
  if (n < 1) throw InvalidArgument("gl_order_two_part requires n >= 1");
  if (q < 3 || q % 2 == 0) throw InvalidArgument("gl_order_two_part requires odd q, got " + to_string(q));
  BigInt out = 1;
  BigInt qi = 1;
  for (unsigned i = 1; i <= n; ++i) {
    qi *= q;
    out *= part_pow(qi - 1, 2);
  }
  return out;
}

PrimePower decompose_prime_power(std::uint64_t q) {
  if (q < 2) throw InvalidArgument("not a prime power: " + std::to_string(q));
  const PartedInteger f{BigInt(q)};
  if (f.factors().size() != 1) throw InvalidArgument("not a prime power: " + std::to_string(q));
  const auto& [p, a] = *f.factors().begin();
  return {static_cast<std::uint64_t>(p), a};
}

bool is_prime_power(std::uint64_t q) {
  if (q < 2) return false;
  return PartedInteger(BigInt(q)).factors().size() == 1;
}

std::string to_string(const BigInt& v) { return v.str(); }

}  // namespace tpv
