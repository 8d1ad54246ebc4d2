#include "tpv/element.hpp"

#include <algorithm>
#include <sstream>

#include "tpv/errors.hpp"

namespace tpv {

namespace {

inline std::size_t mix(std::size_t seed, std::size_t v) {
  return seed ^ (v + 0x9e3779b97f4a7c15ULL + (seed << 6) + (seed >> 2));
}

template <typename Range>
std::strong_ordering compare_ranges(const Range& a, const Range& b) {
  if (auto c = a.size() <=> b.size(); c != 0) return c;
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (auto c = a[i] <=> b[i]; c != 0) return c;
  }
  return std::strong_ordering::equal;
}

}  // namespace

// Permutation

Permutation::Permutation(std::vector<std::uint32_t> images) : images_(std::move(images)) {
  std::vector<bool> seen(images_.size(), false);
  for (std::uint32_t x : images_) {
    if (x >= images_.size() || seen[x]) throw InvalidArgument("permutation image array is not a bijection");
    seen[x] = true;
  }
}

Permutation Permutation::identity(std::size_t degree) {
  std::vector<std::uint32_t> img(degree);
  for (std::size_t i = 0; i < degree; ++i) img[i] = static_cast<std::uint32_t>(i);
  return {std::move(img), Unchecked{}};
}

Permutation Permutation::from_cycles(std::size_t degree,
                                     std::initializer_list<std::initializer_list<std::uint32_t>> cycles) {
  std::vector<std::uint32_t> img = identity(degree).images_;
  for (const auto& cycle : cycles) {
    std::vector<std::uint32_t> pts(cycle);
    for (std::size_t i = 0; i < pts.size(); ++i) {
      const std::uint32_t from = pts[i], to = pts[(i + 1) % pts.size()];
      if (from < 1 || from > degree || to < 1 || to > degree) throw InvalidArgument("cycle point out of range");
      img[from - 1] = to - 1;
    }
  }
  return Permutation(std::move(img));
}

Permutation Permutation::operator*(const Permutation& other) const {
  if (degree() != other.degree()) throw InvalidArgument("permutation degrees differ");
  std::vector<std::uint32_t> img(images_.size());
  for (std::size_t i = 0; i < images_.size(); ++i) img[i] = other.images_[images_[i]];
  return {std::move(img), Unchecked{}};
}

Permutation Permutation::inverse() const {
  std::vector<std::uint32_t> img(images_.size());
  for (std::size_t i = 0; i < images_.size(); ++i) img[images_[i]] = static_cast<std::uint32_t>(i);
  return {std::move(img), Unchecked{}};
}

bool Permutation::is_identity() const {
  for (std::size_t i = 0; i < images_.size(); ++i) {
    if (images_[i] != i) return false;
  }
  return true;
}

std::size_t Permutation::hash() const {
  std::size_t h = images_.size();
  for (std::uint32_t x : images_) h = mix(h, x);
  return h;
}

std::string Permutation::to_string() const {
  std::ostringstream out;
  std::vector<bool> seen(images_.size(), false);
  bool any = false;
  for (std::size_t i = 0; i < images_.size(); ++i) {
    if (seen[i] || images_[i] == i) continue;
    any = true;
    out << '(';
    std::size_t j = i;
    bool first = true;
    while (!seen[j]) {
      seen[j] = true;
      if (!first) out << ' ';
      out << j + 1;
      first = false;
      j = images_[j];
    }
    out << ')';
  }
  return any ? out.str() : "()";
}

// Matrix

Matrix::Matrix(const FieldSpec& field, std::size_t n, Storage entries)
    : field_(&field), n_(n), entries_(std::move(entries)) {
  if (n == 0 || entries_.size() != n * n) throw InvalidArgument("matrix entry count does not match dimension");
  for (std::uint32_t c : entries_) {
    if (c >= field.order()) throw InvalidArgument("matrix entry out of field range");
  }
  if (determinant() == 0) throw InvalidArgument("matrix is singular");
}

Matrix::Matrix(const FieldSpec& field, std::size_t n, std::initializer_list<long long> entries)
    : Matrix(field, n, [&] {
        Storage s;
        for (long long v : entries) s.push_back(field.from_int(v));
        return s;
      }()) {}

Matrix Matrix::identity(const FieldSpec& field, std::size_t n) { return scalar(field, n, 1); }

Matrix Matrix::scalar(const FieldSpec& field, std::size_t n, std::uint32_t code) {
  if (code == 0) throw InvalidArgument("zero scalar matrix is singular");
  Storage s(n * n, 0);
  for (std::size_t i = 0; i < n; ++i) s[i * n + i] = code;
  return {field, n, std::move(s), Unchecked{}};
}

Matrix Matrix::diagonal(const FieldSpec& field, const std::vector<std::uint32_t>& codes) {
  const std::size_t n = codes.size();
  Storage s(n * n, 0);
  for (std::size_t i = 0; i < n; ++i) {
    if (codes[i] == 0 || codes[i] >= field.order()) throw InvalidArgument("diagonal entry must be a nonzero field element");
    s[i * n + i] = codes[i];
  }
  return {field, n, std::move(s), Unchecked{}};
}

Matrix Matrix::permutation(const FieldSpec& field, const Permutation& perm) {
  const std::size_t n = perm.degree();
  Storage s(n * n, 0);
  for (std::size_t i = 0; i < n; ++i) s[i * n + perm[i]] = 1;
  return {field, n, std::move(s), Unchecked{}};
}

Matrix Matrix::operator*(const Matrix& other) const {
  if (field_ != other.field_) throw InvalidArgument("matrices over different fields");
  if (n_ != other.n_) throw InvalidArgument("matrix dimensions differ");
  const FieldSpec& f = *field_;
  Storage out(n_ * n_, 0);
  for (std::size_t i = 0; i < n_; ++i) {
    for (std::size_t k = 0; k < n_; ++k) {
      const std::uint32_t a = entries_[i * n_ + k];
      if (a == 0) continue;
      for (std::size_t j = 0; j < n_; ++j) {
        const std::uint32_t b = other.entries_[k * n_ + j];
        if (b != 0) out[i * n_ + j] = f.add(out[i * n_ + j], f.mul(a, b));
      }
    }
  }
  return {f, n_, std::move(out), Unchecked{}};
}

Matrix Matrix::inverse() const {
  const FieldSpec& f = *field_;
  const std::size_t n = n_;
  Storage a = entries_;
  Storage inv(n * n, 0);
  for (std::size_t i = 0; i < n; ++i) inv[i * n + i] = 1;
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t pivot = col;
    while (pivot < n && a[pivot * n + col] == 0) ++pivot;
    if (pivot == n) throw InvalidArgument("matrix is singular");
    if (pivot != col) {
      for (std::size_t j = 0; j < n; ++j) {
        std::swap(a[pivot * n + j], a[col * n + j]);
        std::swap(inv[pivot * n + j], inv[col * n + j]);
      }
    }
    const std::uint32_t s = f.inv(a[col * n + col]);
    for (std::size_t j = 0; j < n; ++j) {
      a[col * n + j] = f.mul(a[col * n + j], s);
      inv[col * n + j] = f.mul(inv[col * n + j], s);
    }
    for (std::size_t r = 0; r < n; ++r) {
      if (r == col || a[r * n + col] == 0) continue;
      const std::uint32_t factor = f.neg(a[r * n + col]);
      for (std::size_t j = 0; j < n; ++j) {
        a[r * n + j] = f.add(a[r * n + j], f.mul(factor, a[col * n + j]));
        inv[r * n + j] = f.add(inv[r * n + j], f.mul(factor, inv[col * n + j]));
      }
    }
  }
  return {f, n, std::move(inv), Unchecked{}};
}

std::uint32_t Matrix::determinant() const {
  const FieldSpec& f = *field_;
  const std::size_t n = n_;
  Storage a = entries_;
  std::uint32_t det = 1;
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t pivot = col;
    while (pivot < n && a[pivot * n + col] == 0) ++pivot;
    if (pivot == n) return 0;
    if (pivot != col) {
      for (std::size_t j = 0; j < n; ++j) std::swap(a[pivot * n + j], a[col * n + j]);
      det = f.neg(det);
    }
    det = f.mul(det, a[col * n + col]);
    const std::uint32_t s = f.inv(a[col * n + col]);
    for (std::size_t r = col + 1; r < n; ++r) {
      if (a[r * n + col] == 0) continue;
      const std::uint32_t factor = f.neg(f.mul(a[r * n + col], s));
      for (std::size_t j = col; j < n; ++j) a[r * n + j] = f.add(a[r * n + j], f.mul(factor, a[col * n + j]));
    }
  }
  return det;
}

bool Matrix::is_identity() const {
  for (std::size_t i = 0; i < n_; ++i) {
    for (std::size_t j = 0; j < n_; ++j) {
      if (entries_[i * n_ + j] != (i == j ? 1u : 0u)) return false;
    }
  }
  return true;
}

bool Matrix::is_scalar() const {
  const std::uint32_t d = entries_[0];
  for (std::size_t i = 0; i < n_; ++i) {
    for (std::size_t j = 0; j < n_; ++j) {
      if (entries_[i * n_ + j] != (i == j ? d : 0u)) return false;
    }
  }
  return true;
}

std::vector<std::uint32_t> Matrix::apply(const std::vector<std::uint32_t>& row) const {
  if (row.size() != n_) throw InvalidArgument("vector length does not match matrix dimension");
  const FieldSpec& f = *field_;
  std::vector<std::uint32_t> out(n_, 0);
  for (std::size_t k = 0; k < n_; ++k) {
    if (row[k] == 0) continue;
    for (std::size_t j = 0; j < n_; ++j) out[j] = f.add(out[j], f.mul(row[k], entries_[k * n_ + j]));
  }
  return out;
}

Matrix Matrix::frobenius(unsigned k) const {
  Storage out = entries_;
  for (auto& c : out) c = field_->frobenius_power(c, k);
  return {*field_, n_, std::move(out), Unchecked{}};
}

std::size_t Matrix::hash() const {
  std::size_t h = mix(n_, reinterpret_cast<std::uintptr_t>(field_));
  for (std::uint32_t x : entries_) h = mix(h, x);
  return h;
}

std::string Matrix::to_string() const {
  std::ostringstream out;
  out << '[';
  for (std::size_t i = 0; i < n_; ++i) {
    if (i) out << "; ";
    for (std::size_t j = 0; j < n_; ++j) {
      if (j) out << ' ';
      out << field_->to_string(entries_[i * n_ + j]);
    }
  }
  out << ']';
  return out.str();
}

// GroupElement

bool operator==(const TupleElem& a, const TupleElem& b) { return a.parts == b.parts; }
bool operator==(const WreathElem& a, const WreathElem& b) { return a.top == b.top && a.base == b.base; }

GroupElement GroupElement::tuple(std::vector<GroupElement> parts) {
  if (parts.empty()) throw InvalidArgument("tuple element needs at least one component");
  return GroupElement(TupleElem{std::move(parts)});
}

GroupElement GroupElement::wreath(std::vector<GroupElement> base, Permutation top) {
  if (base.size() != top.degree()) throw InvalidArgument("wreath base length must equal top permutation degree");
  for (std::size_t i = 1; i < base.size(); ++i) {
    if (!base[i].same_shape(base[0])) throw InvalidArgument("wreath base components differ in shape");
  }
  return GroupElement(WreathElem{std::move(base), std::move(top)});
}

const Permutation& GroupElement::as_permutation() const {
  if (auto* p = std::get_if<Permutation>(&v_)) return *p;
  throw InvalidArgument("element is not a permutation");
}

const Matrix& GroupElement::as_matrix() const {
  if (auto* m = std::get_if<Matrix>(&v_)) return *m;
  throw InvalidArgument("element is not a matrix");
}

const std::vector<GroupElement>& GroupElement::parts() const {
  if (auto* t = std::get_if<TupleElem>(&v_)) return t->parts;
  throw InvalidArgument("element is not a tuple");
}

const WreathElem& GroupElement::as_wreath() const {
  if (auto* w = std::get_if<WreathElem>(&v_)) return *w;
  throw InvalidArgument("element is not a wreath pair");
}

GroupElement GroupElement::operator*(const GroupElement& other) const {
  if (v_.index() != other.v_.index()) throw InvalidArgument("cannot multiply elements of different kinds");
  switch (kind()) {
    case ElementKind::Permutation:
      return std::get<Permutation>(v_) * std::get<Permutation>(other.v_);
    case ElementKind::Matrix:
      return std::get<Matrix>(v_) * std::get<Matrix>(other.v_);
    case ElementKind::Tuple: {
      const auto& a = std::get<TupleElem>(v_).parts;
      const auto& b = std::get<TupleElem>(other.v_).parts;
      if (a.size() != b.size()) throw InvalidArgument("tuple lengths differ");
      std::vector<GroupElement> out;
      out.reserve(a.size());
      for (std::size_t i = 0; i < a.size(); ++i) out.push_back(a[i] * b[i]);
      return GroupElement(TupleElem{std::move(out)});
    }
    case ElementKind::Wreath: {
      const auto& a = std::get<WreathElem>(v_);
      const auto& b = std::get<WreathElem>(other.v_);
      if (a.base.size() != b.base.size()) throw InvalidArgument("wreath degrees differ");
      std::vector<GroupElement> base;
      base.reserve(a.base.size());
      for (std::size_t i = 0; i < a.base.size(); ++i) base.push_back(a.base[i] * b.base[a.top[i]]);
      return GroupElement(WreathElem{std::move(base), a.top * b.top});
    }
  }
  throw InternalError("unknown element kind");
}

GroupElement GroupElement::inverse() const {
  switch (kind()) {
    case ElementKind::Permutation:
      return std::get<Permutation>(v_).inverse();
    case ElementKind::Matrix:
      return std::get<Matrix>(v_).inverse();
    case ElementKind::Tuple: {
      std::vector<GroupElement> out;
      for (const auto& x : std::get<TupleElem>(v_).parts) out.push_back(x.inverse());
      return GroupElement(TupleElem{std::move(out)});
    }
    case ElementKind::Wreath: {
      const auto& w = std::get<WreathElem>(v_);
      // (m;h)^-1 = (j -> m_{j^{h^-1}}^-1 ; h^-1)
      const Permutation top_inv = w.top.inverse();
      std::vector<GroupElement> base;
      base.reserve(w.base.size());
      for (std::size_t j = 0; j < w.base.size(); ++j) base.push_back(w.base[top_inv[j]].inverse());
      return GroupElement(WreathElem{std::move(base), top_inv});
    }
  }
  throw InternalError("unknown element kind");
}

GroupElement GroupElement::identity() const {
  switch (kind()) {
    case ElementKind::Permutation:
      return Permutation::identity(std::get<Permutation>(v_).degree());
    case ElementKind::Matrix: {
      const auto& m = std::get<Matrix>(v_);
      return Matrix::identity(m.field(), m.dim());
    }
    case ElementKind::Tuple: {
      std::vector<GroupElement> out;
      for (const auto& x : std::get<TupleElem>(v_).parts) out.push_back(x.identity());
      return GroupElement(TupleElem{std::move(out)});
    }
    case ElementKind::Wreath: {
      const auto& w = std::get<WreathElem>(v_);
      std::vector<GroupElement> base;
      for (const auto& x : w.base) base.push_back(x.identity());
      return GroupElement(WreathElem{std::move(base), Permutation::identity(w.top.degree())});
    }
  }
  throw InternalError("unknown element kind");
}

GroupElement GroupElement::pow(long long e) const {
  GroupElement base = e < 0 ? inverse() : *this;
  unsigned long long k = e < 0 ? static_cast<unsigned long long>(-e) : static_cast<unsigned long long>(e);
  GroupElement result = identity();
  while (k) {
    if (k & 1) result = result * base;
    k >>= 1;
    if (k) base = base * base;
  }
  return result;
}

bool GroupElement::is_identity() const {
  switch (kind()) {
    case ElementKind::Permutation:
      return std::get<Permutation>(v_).is_identity();
    case ElementKind::Matrix:
      return std::get<Matrix>(v_).is_identity();
    case ElementKind::Tuple:
      return std::all_of(std::get<TupleElem>(v_).parts.begin(), std::get<TupleElem>(v_).parts.end(),
                         [](const GroupElement& x) { return x.is_identity(); });
    case ElementKind::Wreath: {
      const auto& w = std::get<WreathElem>(v_);
      return w.top.is_identity() &&
             std::all_of(w.base.begin(), w.base.end(), [](const GroupElement& x) { return x.is_identity(); });
    }
  }
  return false;
}

std::uint64_t GroupElement::order() const {
  std::uint64_t k = 1;
  GroupElement x = *this;
  while (!x.is_identity()) {
    x = x * *this;
    ++k;
  }
  return k;
}

bool GroupElement::same_shape(const GroupElement& other) const {
  if (v_.index() != other.v_.index()) return false;
  switch (kind()) {
    case ElementKind::Permutation:
      return std::get<Permutation>(v_).degree() == std::get<Permutation>(other.v_).degree();
    case ElementKind::Matrix: {
      const auto& a = std::get<Matrix>(v_);
      const auto& b = std::get<Matrix>(other.v_);
      return &a.field() == &b.field() && a.dim() == b.dim();
    }
    case ElementKind::Tuple: {
      const auto& a = std::get<TupleElem>(v_).parts;
      const auto& b = std::get<TupleElem>(other.v_).parts;
      if (a.size() != b.size()) return false;
      for (std::size_t i = 0; i < a.size(); ++i) {
        if (!a[i].same_shape(b[i])) return false;
      }
      return true;
    }
    case ElementKind::Wreath: {
      const auto& a = std::get<WreathElem>(v_);
      const auto& b = std::get<WreathElem>(other.v_);
      return a.top.degree() == b.top.degree() && a.base.front().same_shape(b.base.front());
    }
  }
  return false;
}

std::strong_ordering GroupElement::operator<=>(const GroupElement& other) const {
  if (auto c = v_.index() <=> other.v_.index(); c != 0) return c;
  switch (kind()) {
    case ElementKind::Permutation:
      return std::get<Permutation>(v_) <=> std::get<Permutation>(other.v_);
    case ElementKind::Matrix:
      return std::get<Matrix>(v_) <=> std::get<Matrix>(other.v_);
    case ElementKind::Tuple:
      return compare_ranges(std::get<TupleElem>(v_).parts, std::get<TupleElem>(other.v_).parts);
    case ElementKind::Wreath: {
      const auto& a = std::get<WreathElem>(v_);
      const auto& b = std::get<WreathElem>(other.v_);
      if (auto c = a.top <=> b.top; c != 0) return c;
      return compare_ranges(a.base, b.base);
    }
  }
  return std::strong_ordering::equal;
}

std::size_t GroupElement::hash() const {
  switch (kind()) {
    case ElementKind::Permutation:
      return std::get<Permutation>(v_).hash();
    case ElementKind::Matrix:
      return std::get<Matrix>(v_).hash();
    case ElementKind::Tuple: {
      std::size_t h = 0x51;
      for (const auto& x : std::get<TupleElem>(v_).parts) h = mix(h, x.hash());
      return h;
    }
    case ElementKind::Wreath: {
      const auto& w = std::get<WreathElem>(v_);
      std::size_t h = mix(0x77, w.top.hash());
      for (const auto& x : w.base) h = mix(h, x.hash());
      return h;
    }
  }
  return 0;
}

std::string GroupElement::to_string() const {
  switch (kind()) {
    case ElementKind::Permutation:
      return std::get<Permutation>(v_).to_string();
    case ElementKind::Matrix:
      return std::get<Matrix>(v_).to_string();
    case ElementKind::Tuple: {
      std::string out = "<";
      const auto& parts = std::get<TupleElem>(v_).parts;
      for (std::size_t i = 0; i < parts.size(); ++i) out += (i ? ", " : "") + parts[i].to_string();
      return out + ">";
    }
    case ElementKind::Wreath: {
      const auto& w = std::get<WreathElem>(v_);
      std::string out = "(";
      for (std::size_t i = 0; i < w.base.size(); ++i) out += (i ? ", " : "") + w.base[i].to_string();
      return out + "; " + w.top.to_string() + ")";
    }
  }
  return "?";
}

}  // namespace tpv
