#ifndef TPV_GF_HPP
#define TPV_GF_HPP

// Finite fields GF(p^a). Elements are encoded as integers in [0, q): the
// code sum c_i p^i stands for the polynomial sum c_i x^i reduced modulo the
// field's modulus. Fields are interned, so a FieldSpec reference stays valid
// for the lifetime of the process and compares by address.

#include <cstdint>
#include <string>
#include <vector>

namespace tpv {

class FieldSpec {
 public:
  std::uint32_t p() const { return p_; }
  unsigned degree() const { return a_; }
  std::uint32_t order() const { return q_; }
  // Coefficients c_0..c_a of the monic modulus (c_a == 1).
  const std::vector<std::uint32_t>& modulus() const { return modulus_; }
  std::uint32_t primitive_element() const { return exp_[1]; }

  std::uint32_t zero() const { return 0; }
  std::uint32_t one() const { return 1; }

  std::uint32_t add(std::uint32_t x, std::uint32_t y) const {
    if (a_ == 1) {
      const std::uint32_t s = x + y;
      return s >= p_ ? s - p_ : s;
    }
    if (!add_table_.empty()) return add_table_[static_cast<std::size_t>(x) * q_ + y];
    return add_digits(x, y);
  }
  std::uint32_t neg(std::uint32_t x) const { return neg_[x]; }
  std::uint32_t sub(std::uint32_t x, std::uint32_t y) const { return add(x, neg_[y]); }
  std::uint32_t mul(std::uint32_t x, std::uint32_t y) const {
    if (x == 0 || y == 0) return 0;
    std::uint32_t e = log_[x] + log_[y];
    if (e >= q_ - 1) e -= q_ - 1;
    return exp_[e];
  }
  // Throws DivisionByZero for x == 0.
  std::uint32_t inv(std::uint32_t x) const;
  std::uint32_t pow(std::uint32_t x, std::uint64_t e) const;
  std::uint32_t frobenius(std::uint32_t x) const { return frobenius_power(x, 1); }
  // x^(p^k)
  std::uint32_t frobenius_power(std::uint32_t x, unsigned k) const;
  std::uint64_t mult_order(std::uint32_t x) const;
  // Discrete log base primitive_element(); x must be nonzero.
  std::uint32_t log(std::uint32_t x) const { return log_[x]; }
  std::uint32_t exp(std::uint64_t e) const { return exp_[e % (q_ - 1)]; }

  bool is_square(std::uint32_t x) const { return x == 0 || log_[x] % 2 == 0; }
  // The prime-field element with integer value v mod p.
  std::uint32_t from_int(long long v) const;

  std::string to_string(std::uint32_t x) const;

  // Dense codes. Two FieldSpecs are the same field iff they are the same object.
  bool operator==(const FieldSpec& other) const { return this == &other; }

 private:
  friend const FieldSpec& field_make(std::uint32_t p, unsigned a, bool allow_even);
  FieldSpec(std::uint32_t p, unsigned a, std::vector<std::uint32_t> modulus);

  std::uint32_t add_digits(std::uint32_t x, std::uint32_t y) const;

  std::uint32_t p_;
  unsigned a_;
  std::uint32_t q_;
  std::vector<std::uint32_t> modulus_;
  std::vector<std::uint32_t> exp_;
  std::vector<std::uint32_t> log_;
  std::vector<std::uint32_t> neg_;
  std::vector<std::uint32_t> add_table_;
};

constexpr std::uint32_t kFieldOrderCap = 1u << 20;

// Returns the interned GF(p^a) built on the lexicographically smallest monic
// irreducible modulus of degree a. Even p is rejected unless allow_even.
const FieldSpec& field_make(std::uint32_t p, unsigned a, bool allow_even = false);
// Convenience: GF(q) for a prime power q.
const FieldSpec& field_of_order(std::uint64_t q, bool allow_even = false);

// Value-typed field element bound to its field.
class FieldElem {
 public:
  FieldElem(const FieldSpec& field, std::uint32_t code);

  const FieldSpec& field() const { return *field_; }
  std::uint32_t code() const { return code_; }
  // Coefficients c_0..c_{a-1}.
  std::vector<std::uint32_t> coefficients() const;

  FieldElem operator+(const FieldElem& o) const;
  FieldElem operator-(const FieldElem& o) const;
  FieldElem operator*(const FieldElem& o) const;
  FieldElem operator-() const;
  FieldElem inv() const;
  FieldElem pow(std::uint64_t e) const;
  FieldElem frobenius() const;
  std::uint64_t mult_order() const;

  bool is_zero() const { return code_ == 0; }
  bool operator==(const FieldElem& o) const { return field_ == o.field_ && code_ == o.code_; }

 private:
  void require_same(const FieldElem& o) const;

  const FieldSpec* field_;
  std::uint32_t code_;
};

// Irreducibility of a monic polynomial over GF(p) given by c_0..c_d.
bool is_irreducible_mod_p(const std::vector<std::uint32_t>& coeffs, std::uint32_t p);

}  // namespace tpv

template <>
struct std::hash<tpv::FieldElem> {
  std::size_t operator()(const tpv::FieldElem& x) const noexcept {
    return std::hash<const void*>{}(&x.field()) ^ (static_cast<std::size_t>(x.code()) * 0x9e3779b97f4a7c15ULL);
  }
};

#endif  // TPV_GF_HPP
