#include "tpv/gf.hpp"

#include <map>
#include <memory>
#include <mutex>
#include <utility>

#include "tpv/errors.hpp"
#include "tpv/part_arith.hpp"

namespace tpv {

namespace {

using Poly = std::vector<std::uint32_t>;  // c_0..c_d over GF(p), trailing zeros trimmed

void trim(Poly& f) {
  while (!f.empty() && f.back() == 0) f.pop_back();
}

std::uint32_t inv_mod(std::uint32_t x, std::uint32_t p) {
  std::uint64_t result = 1, base = x % p, e = p - 2;
  while (e) {
    if (e & 1) result = result * base % p;
    base = base * base % p;
    e >>= 1;
  }
  return static_cast<std::uint32_t>(result);
}

// Remainder of f modulo g (g nonzero).
Poly poly_mod(Poly f, const Poly& g, std::uint32_t p) {
  trim(f);
  const std::size_t dg = g.size() - 1;
  const std::uint64_t lead_inv = inv_mod(g.back(), p);
  while (f.size() >= g.size()) {
    const std::uint64_t c = f.back() * lead_inv % p;
    const std::size_t shift = f.size() - 1 - dg;
    for (std::size_t i = 0; i <= dg; ++i) {
      f[shift + i] = static_cast<std::uint32_t>((f[shift + i] + p - c * g[i] % p) % p);
    }
    trim(f);
  }
  return f;
}

Poly decode(std::uint32_t code, std::uint32_t p, unsigned len) {
  Poly f(len, 0);
  for (unsigned i = 0; i < len; ++i) {
    f[i] = code % p;
    code /= p;
  }
  return f;
}

std::uint32_t encode(const Poly& f, std::uint32_t p) {
  std::uint32_t code = 0;
  for (std::size_t i = f.size(); i-- > 0;) code = code * p + f[i];
  return code;
}

// Product of two field elements by schoolbook multiplication and reduction.
std::uint32_t slow_mul(std::uint32_t x, std::uint32_t y, std::uint32_t p, unsigned a, const Poly& modulus) {
  const Poly fx = decode(x, p, a), fy = decode(y, p, a);
  Poly prod(2 * a, 0);
  for (unsigned i = 0; i < a; ++i) {
    for (unsigned j = 0; j < a; ++j) {
      prod[i + j] = static_cast<std::uint32_t>((prod[i + j] + static_cast<std::uint64_t>(fx[i]) * fy[j]) % p);
    }
  }
  Poly r = poly_mod(prod, modulus, p);
  r.resize(a, 0);
  return encode(r, p);
}

std::uint32_t slow_pow(std::uint32_t x, std::uint64_t e, std::uint32_t p, unsigned a, const Poly& modulus) {
  std::uint32_t result = 1;
  while (e) {
    if (e & 1) result = slow_mul(result, x, p, a, modulus);
    x = slow_mul(x, x, p, a, modulus);
    e >>= 1;
  }
  return result;
}

bool has_root(const Poly& f, std::uint32_t p) {
  for (std::uint32_t x = 0; x < p; ++x) {
    std::uint64_t v = 0;
    for (std::size_t i = f.size(); i-- > 0;) v = (v * x + f[i]) % p;
    if (v == 0) return true;
  }
  return false;
}

Poly smallest_irreducible(std::uint32_t p, unsigned a) {
  // Candidates x^a + (code-encoded lower coefficients), in increasing code order.
  std::uint64_t count = 1;
  for (unsigned i = 0; i < a; ++i) count *= p;
  for (std::uint64_t code = 0; code < count; ++code) {
    Poly f = decode(static_cast<std::uint32_t>(code), p, a);
    f.push_back(1);
    if (is_irreducible_mod_p(f, p)) return f;
  }
  throw InternalError("no irreducible polynomial found");
}

}  // namespace

bool is_irreducible_mod_p(const std::vector<std::uint32_t>& coeffs, std::uint32_t p) {
  Poly f = coeffs;
  trim(f);
  if (f.size() < 2) return false;
  const std::size_t d = f.size() - 1;
  if (d == 1) return true;
  if (d <= 3) return !has_root(f, p);
  // Trial division by every monic polynomial of degree 1..d/2.
  for (std::size_t k = 1; k <= d / 2; ++k) {
    std::uint64_t count = 1;
    for (std::size_t i = 0; i < k; ++i) count *= p;
    for (std::uint64_t code = 0; code < count; ++code) {
      Poly g = decode(static_cast<std::uint32_t>(code), p, static_cast<unsigned>(k));
      g.push_back(1);
      if (poly_mod(f, g, p).empty()) return false;
    }
  }
  return true;
}

FieldSpec::FieldSpec(std::uint32_t p, unsigned a, std::vector<std::uint32_t> modulus)
    : p_(p), a_(a), modulus_(std::move(modulus)) {
  q_ = 1;
  for (unsigned i = 0; i < a; ++i) q_ *= p;

  // Primitive element: smallest code whose order is q - 1.
  const PartedInteger order_factors{BigInt(q_ - 1)};
  std::uint32_t gen = 0;
  for (std::uint32_t cand = 1; cand < q_ && gen == 0; ++cand) {
    bool primitive = true;
    for (const auto& [r, e] : order_factors.factors()) {
      const auto rr = static_cast<std::uint64_t>(r);
      if (slow_pow(cand, (q_ - 1) / rr, p_, a_, modulus_) == 1) {
        primitive = false;
        break;
      }
    }
    if (primitive) gen = cand;
  }
  if (q_ == 2) gen = 1;
  if (gen == 0) throw InternalError("field has no primitive element");

  exp_.resize(q_ - 1);
  log_.assign(q_, 0);
  std::uint32_t x = 1;
  for (std::uint32_t e = 0; e < q_ - 1; ++e) {
    exp_[e] = x;
    log_[x] = e;
    x = slow_mul(x, gen, p_, a_, modulus_);
  }
  if (x != 1) throw InternalError("primitive element order mismatch");
  // exp_[1] must be the generator even for q == 2.
  if (q_ == 2) exp_.push_back(1);

  neg_.resize(q_);
  for (std::uint32_t c = 0; c < q_; ++c) {
    std::uint32_t code = 0, rest = c, scale = 1;
    for (unsigned i = 0; i < a_; ++i) {
      const std::uint32_t digit = rest % p_;
      rest /= p_;
      code += ((p_ - digit) % p_) * scale;
      scale *= p_;
    }
    neg_[c] = code;
  }
  if (a_ > 1 && static_cast<std::uint64_t>(q_) * q_ <= (1u << 20)) {
    add_table_.resize(static_cast<std::size_t>(q_) * q_);
    for (std::uint32_t u = 0; u < q_; ++u) {
      for (std::uint32_t v = 0; v < q_; ++v) add_table_[static_cast<std::size_t>(u) * q_ + v] = add_digits(u, v);
    }
  }
}

std::uint32_t FieldSpec::add_digits(std::uint32_t x, std::uint32_t y) const {
  std::uint32_t code = 0, scale = 1;
  for (unsigned i = 0; i < a_; ++i) {
    std::uint32_t d = x % p_ + y % p_;
    if (d >= p_) d -= p_;
    code += d * scale;
    scale *= p_;
    x /= p_;
    y /= p_;
  }
  return code;
}

std::uint32_t FieldSpec::inv(std::uint32_t x) const {
  if (x == 0) throw DivisionByZero("inverse of zero in GF(" + std::to_string(q_) + ")");
  const std::uint32_t l = log_[x];
  return exp_[l == 0 ? 0 : q_ - 1 - l];
}

std::uint32_t FieldSpec::pow(std::uint32_t x, std::uint64_t e) const {
  if (e == 0) return 1;
  if (x == 0) return 0;
  return exp_[(static_cast<std::uint64_t>(log_[x]) * (e % (q_ - 1))) % (q_ - 1)];
}

std::uint32_t FieldSpec::frobenius_power(std::uint32_t x, unsigned k) const {
  std::uint64_t e = 1;
  for (unsigned i = 0; i < k % a_; ++i) e *= p_;
  return pow(x, e);
}

std::uint64_t FieldSpec::mult_order(std::uint32_t x) const {
  if (x == 0) throw InvalidArgument("zero has no multiplicative order");
  std::uint64_t n = q_ - 1;
  const std::uint64_t l = log_[x];
  std::uint64_t g = n, b = l;
  while (b) {
    const std::uint64_t t = g % b;
    g = b;
    b = t;
  }
  return n / g;
}

std::uint32_t FieldSpec::from_int(long long v) const {
  long long r = v % static_cast<long long>(p_);
  if (r < 0) r += p_;
  return static_cast<std::uint32_t>(r);
}

std::string FieldSpec::to_string(std::uint32_t x) const {
  if (a_ == 1) return std::to_string(x);
  std::string out;
  for (unsigned i = a_; i-- > 0;) {
    std::uint32_t scale = 1;
    for (unsigned j = 0; j < i; ++j) scale *= p_;
    const std::uint32_t c = (x / scale) % p_;
    if (c == 0) continue;
    if (!out.empty()) out += "+";
    if (i == 0 || c != 1) out += std::to_string(c);
    if (i >= 1) out += "x";
    if (i >= 2) out += "^" + std::to_string(i);
  }
  return out.empty() ? "0" : out;
}

const FieldSpec& field_make(std::uint32_t p, unsigned a, bool allow_even) {
  if (a < 1) throw InvalidArgument("field degree must be positive");
  if (!is_prime(static_cast<std::uint64_t>(p))) throw InvalidArgument("field characteristic must be prime: " + std::to_string(p));
  if (p == 2 && !allow_even) throw InvalidArgument("characteristic 2 is not supported");
  std::uint64_t q = 1;
  for (unsigned i = 0; i < a; ++i) {
    q *= p;
    if (q > kFieldOrderCap) throw ResourceLimit("field order exceeds desk-scale cap 2^20", 0);
  }

  static std::mutex mutex;
  static std::map<std::pair<std::uint32_t, unsigned>, std::unique_ptr<FieldSpec>> registry;
  std::lock_guard<std::mutex> lock(mutex);
  auto& slot = registry[{p, a}];
  if (!slot) slot.reset(new FieldSpec(p, a, smallest_irreducible(p, a)));
  return *slot;
}

const FieldSpec& field_of_order(std::uint64_t q, bool allow_even) {
  const PrimePower pp = decompose_prime_power(q);
  return field_make(static_cast<std::uint32_t>(pp.p), pp.a, allow_even);
}

FieldElem::FieldElem(const FieldSpec& field, std::uint32_t code) : field_(&field), code_(code) {
  if (code >= field.order()) throw InvalidArgument("field element code out of range");
}

std::vector<std::uint32_t> FieldElem::coefficients() const { return decode(code_, field_->p(), field_->degree()); }

void FieldElem::require_same(const FieldElem& o) const {
  if (field_ != o.field_) throw InvalidArgument("operands belong to different fields");
}

FieldElem FieldElem::operator+(const FieldElem& o) const {
  require_same(o);
  return {*field_, field_->add(code_, o.code_)};
}

FieldElem FieldElem::operator-(const FieldElem& o) const {
  require_same(o);
  return {*field_, field_->sub(code_, o.code_)};
}

FieldElem FieldElem::operator*(const FieldElem& o) const {
  require_same(o);
  return {*field_, field_->mul(code_, o.code_)};
}

FieldElem FieldElem::operator-() const { return {*field_, field_->neg(code_)}; }
FieldElem FieldElem::inv() const { return {*field_, field_->inv(code_)}; }
FieldElem FieldElem::pow(std::uint64_t e) const { return {*field_, field_->pow(code_, e)}; }
FieldElem FieldElem::frobenius() const { return {*field_, field_->frobenius(code_)}; }
std::uint64_t FieldElem::mult_order() const { return field_->mult_order(code_); }

}  // namespace tpv
