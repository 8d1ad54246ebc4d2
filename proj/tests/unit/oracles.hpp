#ifndef TPV_TESTS_ORACLES_HPP
#define TPV_TESTS_ORACLES_HPP

// Test-side reference computations. Nothing here calls into the engine's
// arithmetic; everything is recomputed from first principles on plain
// integers and arrays.

#include <algorithm>
#include <cstdint>
#include <map>
#include <numeric>
#include <random>
#include <set>
#include <vector>

namespace oracle {

inline std::map<std::uint64_t, unsigned> factor(std::uint64_t k) {
  std::map<std::uint64_t, unsigned> f;
  for (std::uint64_t d = 2; d * d <= k; ++d) {
    while (k % d == 0) {
      ++f[d];
      k /= d;
    }
  }
  if (k > 1) ++f[k];
  return f;
}

inline std::uint64_t ipow(std::uint64_t b, unsigned e) {
  std::uint64_t r = 1;
  while (e--) r *= b;
  return r;
}

inline std::uint64_t part(std::uint64_t k, std::uint64_t w) {
  std::uint64_t r = 1;
  while (k % w == 0) {
    k /= w;
    r *= w;
  }
  return r;
}

// gcd(k,3) times the full p-parts over p = 1 mod 3, from the factorization.
inline std::uint64_t heart(std::uint64_t k) {
  std::uint64_t r = std::gcd(k, std::uint64_t{3});
  for (auto [p, e] : factor(k)) {
    if (p % 3 == 1) r *= ipow(p, e);
  }
  return r;
}

// Literal reading: the largest divisor of heart(k) coprime to p.
inline std::uint64_t heart_coprime(std::uint64_t k, std::uint64_t p) {
  const std::uint64_t h = heart(k);
  for (std::uint64_t d = h; d >= 1; --d) {
    if (h % d == 0 && std::gcd(d, p) == 1) return d;
  }
  return 1;
}

inline std::uint64_t gl_order(unsigned n, std::uint64_t q) {
  std::uint64_t r = 1;
  const std::uint64_t qn = ipow(q, n);
  for (unsigned i = 0; i < n; ++i) r *= qn - ipow(q, i);
  return r;
}

inline bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t d = 2; d * d <= n; ++d) {
    if (n % d == 0) return false;
  }
  return true;
}

// Polynomials over GF(p) as coefficient vectors c_0..c_d.
using Poly = std::vector<std::uint32_t>;

inline Poly poly_mul(const Poly& a, const Poly& b, std::uint32_t p) {
  Poly r(a.size() + b.size() - 1, 0);
  for (std::size_t i = 0; i < a.size(); ++i) {
    for (std::size_t j = 0; j < b.size(); ++j) r[i + j] = (r[i + j] + a[i] * b[j]) % p;
  }
  return r;
}

inline std::vector<Poly> monic_of_degree(std::uint32_t p, unsigned d) {
  std::vector<Poly> out;
  const std::uint64_t count = ipow(p, d);
  for (std::uint64_t code = 0; code < count; ++code) {
    Poly f(d + 1, 0);
    std::uint64_t c = code;
    for (unsigned i = 0; i < d; ++i, c /= p) f[i] = static_cast<std::uint32_t>(c % p);
    f[d] = 1;
    out.push_back(f);
  }
  return out;
}

// Irreducible iff it is not a product of two monic polynomials of positive degree.
inline bool irreducible_by_products(const Poly& f, std::uint32_t p) {
  const unsigned d = static_cast<unsigned>(f.size() - 1);
  for (unsigned k = 1; k <= d / 2; ++k) {
    for (const auto& a : monic_of_degree(p, k)) {
      for (const auto& b : monic_of_degree(p, d - k)) {
        if (poly_mul(a, b, p) == f) return false;
      }
    }
  }
  return true;
}

// First irreducible in the order of the code c_0 + c_1 p + ... .
inline Poly smallest_irreducible(std::uint32_t p, unsigned d) {
  for (const auto& f : monic_of_degree(p, d)) {
    if (d == 1 || irreducible_by_products(f, p)) return f;
  }
  return {};
}

// Multiplication of field codes by schoolbook product and reduction.
inline std::uint32_t field_mul(std::uint32_t x, std::uint32_t y, std::uint32_t p, const Poly& modulus) {
  const std::size_t a = modulus.size() - 1;
  Poly u(a), v(a);
  for (std::size_t i = 0; i < a; ++i, x /= p, y /= p) {
    u[i] = x % p;
    v[i] = y % p;
  }
  Poly r = poly_mul(u, v, p);
  for (std::size_t top = r.size(); top-- > a;) {
    const std::uint32_t c = r[top];
    r[top] = 0;
    for (std::size_t i = 0; i < a; ++i) r[top - a + i] = (r[top - a + i] + (p - c) * modulus[i]) % p;
  }
  std::uint32_t code = 0;
  for (std::size_t i = a; i-- > 0;) code = code * p + (i < r.size() ? r[i] : 0);
  return code;
}

// Permutations as image vectors composed left to right: (ab)(i) = b(a(i)).
using Perm = std::vector<std::uint32_t>;

inline Perm compose(const Perm& a, const Perm& b) {
  Perm r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = b[a[i]];
  return r;
}

inline Perm invert(const Perm& a) {
  Perm r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[a[i]] = static_cast<std::uint32_t>(i);
  return r;
}

inline std::vector<Perm> all_perms(std::size_t n) {
  Perm p(n);
  std::iota(p.begin(), p.end(), 0u);
  std::vector<Perm> out;
  do out.push_back(p);
  while (std::next_permutation(p.begin(), p.end()));
  return out;
}

// Cayley table from a list of permutations closed under composition.
struct Table {
  std::vector<std::vector<std::uint32_t>> mul;
  std::vector<std::uint32_t> inv;
};

inline Table cayley(const std::vector<Perm>& elems) {
  std::map<Perm, std::uint32_t> index;
  for (std::uint32_t i = 0; i < elems.size(); ++i) index[elems[i]] = i;
  Table t;
  t.mul.assign(elems.size(), std::vector<std::uint32_t>(elems.size()));
  t.inv.resize(elems.size());
  for (std::size_t i = 0; i < elems.size(); ++i) {
    for (std::size_t j = 0; j < elems.size(); ++j) t.mul[i][j] = index.at(compose(elems[i], elems[j]));
    t.inv[i] = index.at(invert(elems[i]));
  }
  return t;
}

using Subset = std::vector<bool>;

inline Subset close(const Table& t, const std::vector<std::uint32_t>& gens, std::uint32_t identity) {
  Subset s(t.mul.size(), false);
  std::vector<std::uint32_t> queue{identity};
  s[identity] = true;
  for (std::size_t k = 0; k < queue.size(); ++k) {
    for (auto g : gens) {
      const auto x = t.mul[queue[k]][g];
      if (!s[x]) {
        s[x] = true;
        queue.push_back(x);
      }
    }
  }
  return s;
}

// All subgroups generated by at most three elements, as element subsets.
inline std::set<Subset> subgroups_upto_three_generators(const Table& t, std::uint32_t identity) {
  std::set<Subset> out;
  const auto n = static_cast<std::uint32_t>(t.mul.size());
  for (std::uint32_t a = 0; a < n; ++a) {
    for (std::uint32_t b = a; b < n; ++b) {
      for (std::uint32_t c = b; c < n; ++c) out.insert(close(t, {a, b, c}, identity));
    }
  }
  return out;
}

inline std::size_t subgroup_classes(const Table& t, const std::set<Subset>& subs) {
  std::set<Subset> seen;
  std::size_t classes = 0;
  const auto n = t.mul.size();
  for (const auto& s : subs) {
    if (seen.count(s)) continue;
    ++classes;
    for (std::size_t x = 0; x < n; ++x) {
      Subset c(n, false);
      for (std::size_t i = 0; i < n; ++i) {
        if (s[i]) c[t.mul[t.mul[t.inv[x]][i]][x]] = true;
      }
      seen.insert(c);
    }
  }
  return classes;
}

// Square matrices over GF(p), p prime, row-major.
using Mat = std::vector<std::uint32_t>;

inline Mat mat_mul(const Mat& a, const Mat& b, std::size_t n, std::uint32_t p) {
  Mat r(n * n, 0);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t k = 0; k < n; ++k) {
      for (std::size_t j = 0; j < n; ++j) r[i * n + j] = (r[i * n + j] + a[i * n + k] * b[k * n + j]) % p;
    }
  }
  return r;
}

inline std::set<Mat> mat_closure(const std::vector<Mat>& gens, std::size_t n, std::uint32_t p) {
  Mat id(n * n, 0);
  for (std::size_t i = 0; i < n; ++i) id[i * n + i] = 1;
  std::set<Mat> seen{id};
  std::vector<Mat> queue{id};
  for (std::size_t k = 0; k < queue.size(); ++k) {
    for (const auto& g : gens) {
      Mat x = mat_mul(queue[k], g, n, p);
      if (seen.insert(x).second) queue.push_back(std::move(x));
    }
  }
  return seen;
}

inline std::size_t mat_involutions(const std::set<Mat>& group, std::size_t n, std::uint32_t p) {
  Mat id(n * n, 0);
  for (std::size_t i = 0; i < n; ++i) id[i * n + i] = 1;
  std::size_t c = 0;
  for (const auto& m : group) c += m != id && mat_mul(m, m, n, p) == id;
  return c;
}

inline std::uint64_t mat_det2(const Mat& m, std::uint32_t p) {
  return (m[0] * m[3] % p + p - m[1] * m[2] % p) % p;
}

}  // namespace oracle

#endif  // TPV_TESTS_ORACLES_HPP
