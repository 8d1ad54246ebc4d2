#include "tpv/families.hpp"

#include "tpv/errors.hpp"

namespace tpv::families {

namespace {

GroupElement cycle_on(std::size_t degree, std::size_t start, std::size_t length) {
  std::vector<std::uint32_t> img(degree);
  for (std::size_t i = 0; i < degree; ++i) img[i] = static_cast<std::uint32_t>(i);
  for (std::size_t i = 0; i < length; ++i) img[start + i] = static_cast<std::uint32_t>(start + (i + 1) % length);
  return Permutation(std::move(img));
}

GroupElement transposition(std::size_t degree, std::uint32_t a, std::uint32_t b) {
  std::vector<std::uint32_t> img(degree);
  for (std::size_t i = 0; i < degree; ++i) img[i] = static_cast<std::uint32_t>(i);
  std::swap(img[a], img[b]);
  return Permutation(std::move(img));
}

std::uint32_t powmod(std::uint64_t b, std::uint64_t e, std::uint64_t m) {
  std::uint64_t r = 1 % m;
  b %= m;
  while (e) {
    if (e & 1) r = r * b % m;
    b = b * b % m;
    e >>= 1;
  }
  return static_cast<std::uint32_t>(r);
}

}  // namespace

FiniteGroup symmetric(std::size_t n) {
  if (n < 1) throw InvalidArgument("symmetric group needs n >= 1");
  if (n == 1) return FiniteGroup::trivial(Permutation::identity(1));
  if (n == 2) return FiniteGroup({transposition(2, 0, 1)});
  return FiniteGroup({cycle_on(n, 0, n), transposition(n, 0, 1)});
}

FiniteGroup alternating(std::size_t n) {
  if (n < 3) return FiniteGroup::trivial(Permutation::identity(std::max<std::size_t>(n, 1)));
  // 3-cycles (1 2 k) generate A_n.
  std::vector<GroupElement> gens;
  for (std::uint32_t k = 2; k < n; ++k) {
    std::vector<std::uint32_t> img(n);
    for (std::size_t i = 0; i < n; ++i) img[i] = static_cast<std::uint32_t>(i);
    img[0] = 1;
    img[1] = k;
    img[k] = 0;
    gens.emplace_back(Permutation(std::move(img)));
  }
  return FiniteGroup(std::move(gens));
}

FiniteGroup cyclic(std::size_t n) {
  if (n < 1) throw InvalidArgument("cyclic group needs n >= 1");
  if (n == 1) return FiniteGroup::trivial(Permutation::identity(1));
  return FiniteGroup({cycle_on(n, 0, n)});
}

FiniteGroup dihedral(std::size_t n) {
  if (n < 3) throw InvalidArgument("dihedral(n) acts on an n-gon, n >= 3");
  std::vector<std::uint32_t> refl(n);
  for (std::size_t i = 0; i < n; ++i) refl[i] = static_cast<std::uint32_t>((n - i) % n);
  return FiniteGroup({cycle_on(n, 0, n), GroupElement(Permutation(std::move(refl)))});
}

FiniteGroup metacyclic(std::uint32_t n, std::uint32_t r, std::uint32_t s) {
  if (n < 1 || r >= n || s >= n) throw InvalidArgument("metacyclic parameters out of range");
  if (static_cast<std::uint64_t>(r) * r % n != 1 % n) throw InvalidArgument("metacyclic: r^2 must be 1 mod n");
  if (static_cast<std::uint64_t>(s) * r % n != s) throw InvalidArgument("metacyclic: a^s must commute with b");
  // Element a^i b^j has index i + n j.
  auto mul = [n, r, s](std::uint32_t x, std::uint32_t y) {
    const std::uint32_t i = x % n, j = x / n, k = y % n, l = y / n;
    std::uint64_t e = i + static_cast<std::uint64_t>(k) * powmod(r, j, n);
    std::uint32_t top = j + l;
    if (top == 2) {
      e += s;
      top = 0;
    }
    return static_cast<std::uint32_t>(e % n + static_cast<std::uint64_t>(n) * top);
  };
  auto regular = [&](std::uint32_t g) {
    std::vector<std::uint32_t> img(2 * n);
    for (std::uint32_t x = 0; x < 2 * n; ++x) img[x] = mul(x, g);
    return GroupElement(Permutation(std::move(img)));
  };
  return FiniteGroup({regular(1 % n), regular(n)});
}

FiniteGroup quaternion(std::uint32_t order) {
  if (order < 8 || (order & (order - 1)) != 0) throw InvalidArgument("generalized quaternion order must be 2^k >= 8");
  const std::uint32_t n = order / 2;
  return metacyclic(n, n - 1, n / 2);
}

FiniteGroup semidihedral(std::uint32_t order) {
  if (order < 16 || (order & (order - 1)) != 0) throw InvalidArgument("semidihedral order must be 2^k >= 16");
  const std::uint32_t n = order / 2;
  return metacyclic(n, n / 2 - 1, 0);
}

FiniteGroup dihedral_regular(std::uint32_t order) {
  if (order < 4 || order % 2 != 0) throw InvalidArgument("dihedral order must be even and >= 4");
  const std::uint32_t n = order / 2;
  return metacyclic(n, n - 1, 0);
}

FiniteGroup affine(std::uint32_t p, std::uint32_t d) {
  if (!is_prime(static_cast<std::uint64_t>(p)) || d < 1 || (p - 1) % d != 0) {
    throw InvalidArgument("affine(p, d) needs p prime and d | p - 1");
  }
  const FieldSpec& f = field_make(p, 1, true);
  const std::uint32_t w = f.pow(f.primitive_element(), (p - 1) / d);
  std::vector<GroupElement> gens{cycle_on(p, 0, p)};
  if (d > 1) {
    std::vector<std::uint32_t> img(p);
    for (std::uint32_t x = 0; x < p; ++x) img[x] = f.mul(x, w);
    gens.emplace_back(Permutation(std::move(img)));
  }
  return FiniteGroup(std::move(gens));
}

FiniteGroup psl2_natural(std::uint32_t p) {
  if (!is_prime(static_cast<std::uint64_t>(p)) || p < 3) throw InvalidArgument("psl2_natural needs an odd prime");
  // Points 0..p-1 are field elements, point p is infinity.
  std::vector<std::uint32_t> translate(p + 1), invert(p + 1);
  for (std::uint32_t x = 0; x < p; ++x) translate[x] = (x + 1) % p;
  translate[p] = p;
  const FieldSpec& f = field_make(p, 1);
  for (std::uint32_t x = 1; x < p; ++x) invert[x] = f.neg(f.inv(x));
  invert[0] = p;
  invert[p] = 0;
  return FiniteGroup({GroupElement(Permutation(std::move(translate))), GroupElement(Permutation(std::move(invert)))});
}

FiniteGroup on_pairs(const FiniteGroup& g) {
  const std::size_t n = g.identity().as_permutation().degree();
  if (n < 2) throw InvalidArgument("on_pairs needs degree >= 2");
  std::vector<std::uint32_t> index(n * n);
  std::uint32_t next = 0;
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) index[i * n + j] = index[j * n + i] = next++;
  }
  std::vector<GroupElement> gens;
  for (const auto& s : g.generators()) {
    const auto& p = s.as_permutation();
    std::vector<std::uint32_t> img(next);
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = i + 1; j < n; ++j) img[index[i * n + j]] = index[p[i] * n + p[j]];
    }
    gens.emplace_back(Permutation(std::move(img)));
  }
  return FiniteGroup(std::move(gens));
}

FiniteGroup direct_product(const std::vector<FiniteGroup>& factors) {
  if (factors.empty()) throw InvalidArgument("direct product of no factors");
  std::vector<GroupElement> ids;
  for (const auto& g : factors) ids.push_back(g.identity());
  std::vector<GroupElement> gens;
  for (std::size_t i = 0; i < factors.size(); ++i) {
    for (const auto& s : factors[i].generators()) {
      auto parts = ids;
      parts[i] = s;
      gens.push_back(GroupElement::tuple(std::move(parts)));
    }
  }
  if (gens.empty()) return FiniteGroup::trivial(GroupElement::tuple(ids));
  return FiniteGroup(std::move(gens));
}

FiniteGroup diagonal(const FiniteGroup& g, std::size_t r) {
  std::vector<GroupElement> gens;
  for (const auto& s : g.generators()) gens.push_back(GroupElement::tuple(std::vector<GroupElement>(r, s)));
  if (gens.empty()) return FiniteGroup::trivial(GroupElement::tuple(std::vector<GroupElement>(r, g.identity())));
  return FiniteGroup(std::move(gens));
}

FiniteGroup wreath(const FiniteGroup& base, const FiniteGroup& top) {
  const std::size_t k = top.identity().as_permutation().degree();
  const GroupElement one = base.identity();
  const Permutation top_id = Permutation::identity(k);
  std::vector<GroupElement> gens;
  for (const auto& s : base.generators()) {
    std::vector<GroupElement> parts(k, one);
    parts[0] = s;
    gens.push_back(GroupElement::wreath(std::move(parts), top_id));
  }
  for (const auto& h : top.generators()) {
    gens.push_back(GroupElement::wreath(std::vector<GroupElement>(k, one), h.as_permutation()));
  }
  return FiniteGroup(std::move(gens));
}

FiniteGroup cyclic_by_quaternion(std::uint32_t m) {
  if (m < 1) throw InvalidArgument("cyclic_by_quaternion needs m >= 1");
  const std::size_t degree = m + 8;
  const FiniteGroup q8 = quaternion(8);
  auto embed = [&](const Permutation& on_q8, bool invert) {
    std::vector<std::uint32_t> img(degree);
    for (std::uint32_t x = 0; x < m; ++x) img[x] = invert ? (m - x) % m : x;
    for (std::uint32_t x = 0; x < 8; ++x) img[m + x] = m + on_q8[x];
    return GroupElement(Permutation(std::move(img)));
  };
  // The generator a (0 -> 1 in the regular action) inverts C_m; b acts trivially.
  std::vector<GroupElement> out;
  for (const auto& g : q8.generators()) {
    const Permutation& perm = g.as_permutation();
    out.push_back(embed(perm, perm[0] == 1));
  }
  std::vector<std::uint32_t> rot(degree);
  for (std::uint32_t x = 0; x < degree; ++x) rot[x] = x < m ? (x + 1) % m : x;
  out.emplace_back(Permutation(std::move(rot)));
  return FiniteGroup(std::move(out));
}

FiniteGroup sl(std::size_t n, std::uint64_t q) {
  const FieldSpec& f = field_of_order(q);
  if (n == 1) return FiniteGroup::trivial(Matrix::identity(f, 1));
  std::vector<GroupElement> gens;
  std::uint32_t basis = 1;
  for (unsigned k = 0; k < f.degree(); ++k, basis *= f.p()) {
    for (std::size_t i = 0; i + 1 < n; ++i) {
      for (auto [r, c] : {std::pair{i, i + 1}, std::pair{i + 1, i}}) {
        Matrix::Storage s(n * n, 0);
        for (std::size_t d = 0; d < n; ++d) s[d * n + d] = 1;
        s[r * n + c] = basis;
        gens.emplace_back(Matrix(f, n, std::move(s)));
      }
    }
  }
  return FiniteGroup(std::move(gens));
}

FiniteGroup gl(std::size_t n, std::uint64_t q) {
  const FieldSpec& f = field_of_order(q);
  std::vector<std::uint32_t> diag(n, 1);
  diag[0] = f.primitive_element();
  std::vector<GroupElement> gens;
  if (n > 1) gens = sl(n, q).generators();
  gens.emplace_back(Matrix::diagonal(f, diag));
  return FiniteGroup(std::move(gens));
}

}  // namespace tpv::families
