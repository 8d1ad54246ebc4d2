#ifndef TPV_ELEMENT_HPP
#define TPV_ELEMENT_HPP

// Group elements. All actions are on the right: a permutation maps i to
// i^g, a matrix acts on row vectors, and products compose left to right
// (x^(gh) = (x^g)^h). Conjugation is g^h = h^-1 g h.

#include <cstdint>
#include <initializer_list>
#include <string>
#include <variant>
#include <vector>

#include <boost/container/small_vector.hpp>

#include "tpv/gf.hpp"

namespace tpv {

class Permutation {
 public:
  Permutation() = default;
  // Validates that images is a bijection of {0..n-1}.
  explicit Permutation(std::vector<std::uint32_t> images);
  static Permutation identity(std::size_t degree);
  // Cycles use 1-based points, as in (1 2 3).
  static Permutation from_cycles(std::size_t degree, std::initializer_list<std::initializer_list<std::uint32_t>> cycles);

  std::size_t degree() const { return images_.size(); }
  std::uint32_t operator[](std::size_t i) const { return images_[i]; }
  const std::vector<std::uint32_t>& images() const { return images_; }

  Permutation operator*(const Permutation& other) const;
  Permutation inverse() const;
  bool is_identity() const;

  bool operator==(const Permutation& other) const { return images_ == other.images_; }
  auto operator<=>(const Permutation& other) const { return images_ <=> other.images_; }

  std::size_t hash() const;
  std::string to_string() const;

 private:
  struct Unchecked {};
  Permutation(std::vector<std::uint32_t> images, Unchecked) : images_(std::move(images)) {}

  std::vector<std::uint32_t> images_;
};

class Matrix {
 public:
  using Storage = boost::container::small_vector<std::uint32_t, 16>;

  // entries are row-major field codes. Throws InvalidArgument if singular.
  Matrix(const FieldSpec& field, std::size_t n, Storage entries);
  Matrix(const FieldSpec& field, std::size_t n, std::initializer_list<long long> entries);
  static Matrix identity(const FieldSpec& field, std::size_t n);
  static Matrix scalar(const FieldSpec& field, std::size_t n, std::uint32_t code);
  static Matrix diagonal(const FieldSpec& field, const std::vector<std::uint32_t>& codes);
  // Permutation matrix with e_i -> e_{i^perm}.
  static Matrix permutation(const FieldSpec& field, const Permutation& perm);

  const FieldSpec& field() const { return *field_; }
  std::size_t dim() const { return n_; }
  std::uint32_t at(std::size_t r, std::size_t c) const { return entries_[r * n_ + c]; }
  const Storage& entries() const { return entries_; }

  Matrix operator*(const Matrix& other) const;
  Matrix inverse() const;
  std::uint32_t determinant() const;
  bool is_identity() const;
  bool is_scalar() const;
  // Row vector times matrix.
  std::vector<std::uint32_t> apply(const std::vector<std::uint32_t>& row) const;
  // Entry-wise Frobenius x -> x^(p^k).
  Matrix frobenius(unsigned k = 1) const;

  bool operator==(const Matrix& other) const {
    return field_ == other.field_ && n_ == other.n_ && entries_ == other.entries_;
  }
  auto operator<=>(const Matrix& other) const {
    if (auto c = n_ <=> other.n_; c != 0) return c;
    return std::lexicographical_compare_three_way(entries_.begin(), entries_.end(), other.entries_.begin(),
                                                  other.entries_.end());
  }

  std::size_t hash() const;
  std::string to_string() const;

 private:
  struct Unchecked {};
  Matrix(const FieldSpec& field, std::size_t n, Storage entries, Unchecked)
      : field_(&field), n_(n), entries_(std::move(entries)) {}

  const FieldSpec* field_;
  std::size_t n_;
  Storage entries_;
};

class GroupElement;

struct TupleElem {
  std::vector<GroupElement> parts;
};

// (m_1..m_k ; h): acts on block i by m_i, then moves block i to i^h.
// (m;h)(m';h') = (i -> m_i m'_{i^h} ; hh').
struct WreathElem {
  std::vector<GroupElement> base;
  Permutation top;
};

enum class ElementKind { Permutation, Matrix, Tuple, Wreath };

class GroupElement {
 public:
  GroupElement(Permutation p) : v_(std::move(p)) {}  // NOLINT(google-explicit-constructor)
  GroupElement(Matrix m) : v_(std::move(m)) {}       // NOLINT(google-explicit-constructor)
  static GroupElement tuple(std::vector<GroupElement> parts);
  static GroupElement wreath(std::vector<GroupElement> base, Permutation top);

  ElementKind kind() const { return static_cast<ElementKind>(v_.index()); }
  const Permutation& as_permutation() const;
  const Matrix& as_matrix() const;
  const std::vector<GroupElement>& parts() const;  // tuple components
  const WreathElem& as_wreath() const;

  GroupElement operator*(const GroupElement& other) const;
  GroupElement inverse() const;
  GroupElement identity() const;  // identity of the same shape
  GroupElement pow(long long e) const;
  GroupElement conjugate(const GroupElement& by) const { return by.inverse() * *this * by; }
  bool is_identity() const;
  std::uint64_t order() const;
  // Same variant and dimensions (degree, matrix size/field, component shapes).
  bool same_shape(const GroupElement& other) const;

  bool operator==(const GroupElement& other) const { return v_ == other.v_; }
  std::strong_ordering operator<=>(const GroupElement& other) const;

  std::size_t hash() const;
  std::string to_string() const;

 private:
  GroupElement(TupleElem t) : v_(std::move(t)) {}
  GroupElement(WreathElem w) : v_(std::move(w)) {}

  std::variant<Permutation, Matrix, TupleElem, WreathElem> v_;
};

bool operator==(const TupleElem& a, const TupleElem& b);
bool operator==(const WreathElem& a, const WreathElem& b);

struct ElementHash {
  std::size_t operator()(const GroupElement& g) const { return g.hash(); }
};

}  // namespace tpv

template <>
struct std::hash<tpv::GroupElement> {
  std::size_t operator()(const tpv::GroupElement& g) const { return g.hash(); }
};

#endif  // TPV_ELEMENT_HPP
