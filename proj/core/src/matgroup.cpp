#include "tpv/matgroup.hpp"

#include <sstream>

#include "tpv/errors.hpp"

namespace tpv {

GLContext::GLContext(std::size_t n, const FieldSpec& field) : n_(n), field_(&field) {
  if (n < 1) throw InvalidArgument("GL_n needs n >= 1");
}

HypothesisFlags GLContext::flags() const {
  HypothesisFlags f;
  f.p_at_least_7 = field_->p() >= 7;
  f.p_one_mod_3 = field_->p() % 3 == 1;
  f.q_mod_4 = static_cast<unsigned>(q() % 4);
  return f;
}

GLContext gl_context(std::size_t n, std::uint32_t p, unsigned a) { return GLContext(n, field_make(p, a)); }

std::string to_string(SylowConstruction c) {
  switch (c) {
    case SylowConstruction::Presentation4q1:
      return "Presentation4q1";
    case SylowConstruction::WreathEven:
      return "WreathEven";
    case SylowConstruction::OddSplit:
      return "OddSplit";
    case SylowConstruction::DiagonalWreath:
      return "DiagonalWreath";
  }
  return "?";
}

namespace {

Matrix from_rows(const FieldSpec& f, std::size_t n, std::initializer_list<std::uint32_t> codes) {
  return Matrix(f, n, Matrix::Storage(codes.begin(), codes.end()));
}

// Places m as the diagonal block starting at offset inside the n x n identity.
Matrix embed_block(const Matrix& m, std::size_t n, std::size_t offset) {
  const std::size_t k = m.dim();
  Matrix::Storage s(n * n, 0);
  for (std::size_t i = 0; i < n; ++i) s[i * n + i] = 1;
  for (std::size_t r = 0; r < k; ++r) {
    for (std::size_t c = 0; c < k; ++c) s[(offset + r) * n + offset + c] = m.at(r, c);
  }
  return Matrix(m.field(), n, std::move(s));
}

// Block permutation: block i of size b moves to block i^perm.
Matrix block_permutation(const FieldSpec& f, const Permutation& perm, std::size_t b) {
  const std::size_t m = perm.degree();
  std::vector<std::uint32_t> img(m * b);
  for (std::size_t i = 0; i < m; ++i) {
    for (std::size_t r = 0; r < b; ++r) img[i * b + r] = static_cast<std::uint32_t>(perm[i] * b + r);
  }
  return Matrix::permutation(f, Permutation(std::move(img)));
}

// Generators of a Sylow 2-subgroup of S_m: split m into powers of two and
// use the iterated-wreath generators on each chunk.
std::vector<Permutation> sym_two_sylow_generators(std::size_t m) {
  std::vector<Permutation> out;
  std::size_t offset = 0;
  for (int e = 30; e >= 1; --e) {
    const std::size_t chunk = std::size_t{1} << e;
    if (!(m & chunk)) continue;
    for (int j = 0; j < e; ++j) {
      const std::size_t half = std::size_t{1} << j;
      std::vector<std::uint32_t> img(m);
      for (std::size_t i = 0; i < m; ++i) img[i] = static_cast<std::uint32_t>(i);
      for (std::size_t i = 0; i < half; ++i) std::swap(img[offset + i], img[offset + i + half]);
      out.emplace_back(std::move(img));
    }
    offset += chunk;
  }
  return out;
}

bool quadratic_irreducible(const FieldSpec& f, std::uint32_t c0, std::uint32_t c1) {
  for (std::uint32_t x = 0; x < f.order(); ++x) {
    if (f.add(f.add(f.mul(x, x), f.mul(c1, x)), c0) == 0) return false;
  }
  return true;
}

Matrix matrix_pow(const Matrix& m, std::uint64_t e) {
  Matrix result = Matrix::identity(m.field(), m.dim());
  Matrix base = m;
  while (e) {
    if (e & 1) result = result * base;
    base = base * base;
    e >>= 1;
  }
  return result;
}

std::uint64_t matrix_order(const Matrix& m) {
  std::uint64_t k = 1;
  Matrix x = m;
  while (!x.is_identity()) {
    x = x * m;
    ++k;
  }
  return k;
}

std::uint64_t two_part(std::uint64_t k) { return k & (~k + 1); }

SylowTwoDescriptor finish(GLContext ctx, SylowConstruction tag, std::vector<GroupElement> gens, std::size_t cap,
                          std::optional<GL2Presentation> pres = std::nullopt) {
  FiniteGroup group = FiniteGroup::closure(gens, cap);
  const BigInt expected = gl_order_two_part(static_cast<unsigned>(ctx.n()), BigInt(ctx.q()));
  if (BigInt(group.order()) != expected) {
    throw InternalError("Sylow 2-construction for GL_" + std::to_string(ctx.n()) + "(" + std::to_string(ctx.q()) +
                        ") has order " + std::to_string(group.order()) + ", expected " + to_string(expected));
  }
  InvolutionCensus census = involution_census(group, ctx);
  return SylowTwoDescriptor{ctx, tag, std::move(gens), std::move(group), census, std::move(pres)};
}

GL2Presentation build_presentation(const FieldSpec& f) {
  const std::uint64_t q = f.order();
  const std::uint64_t full = q * q - 1;
  const std::uint64_t target = two_part(full);
  // Smallest irreducible x^2 + c1 x + c0 (code c0 + q c1) whose root has full 2-power order.
  for (std::uint64_t code = 0; code < q * q; ++code) {
    const auto c0 = static_cast<std::uint32_t>(code % q);
    const auto c1 = static_cast<std::uint32_t>(code / q);
    if (c0 == 0 || !quadratic_irreducible(f, c0, c1)) continue;
    const Matrix companion = from_rows(f, 2, {0, 1, f.neg(c0), f.neg(c1)});
    const Matrix a = matrix_pow(companion, full / target);
    if (matrix_order(a) != target) continue;
    // x -> x^q on GF(q^2) = GF(q)[x]: 1 -> 1, x -> -c1 - x.
    const Matrix frob = from_rows(f, 2, {1, 0, f.neg(c1), f.neg(1)});
    const Matrix minus_one = Matrix::scalar(f, 2, f.neg(1));
    const Matrix a_q = matrix_pow(a, q);
    Matrix t = Matrix::identity(f, 2);
    for (std::uint64_t k = 0; k < full; ++k, t = t * companion) {
      const Matrix b = t * frob;
      if (b * b == minus_one && b.inverse() * a * b == a_q) return GL2Presentation{a, b, target};
    }
    throw InternalError("no inverting element of order 4 in the torus normalizer");
  }
  throw InternalError("no irreducible quadratic with a full 2-power Singer part");
}

// P_2 generators as 2 x 2 matrices for q = 3 mod 4.
std::vector<Matrix> p2_generators(const FieldSpec& f, std::optional<GL2Presentation>* pres_out = nullptr) {
  GL2Presentation pres = build_presentation(f);
  std::vector<Matrix> out{pres.a, pres.b};
  if (pres_out) *pres_out = pres;
  return out;
}

}  // namespace

SylowTwoDescriptor sylow2_gl2(std::uint64_t q) {
  const FieldSpec& f = field_of_order(q);
  if (q % 4 != 3) throw InvalidArgument("sylow2_gl2 needs q = 3 mod 4");
  std::optional<GL2Presentation> pres;
  const auto mats = p2_generators(f, &pres);
  return finish(GLContext(2, f), SylowConstruction::Presentation4q1, {mats[0], mats[1]}, kDefaultClosureCap, pres);
}

SylowTwoDescriptor sylow2_gl(std::size_t n, std::uint64_t q, std::size_t cap) {
  const FieldSpec& f = field_of_order(q);
  GLContext ctx(n, f);
  std::vector<GroupElement> gens;
  if (q % 4 == 1) {
    const std::uint32_t zeta = f.exp((q - 1) / two_part(q - 1));
    for (std::size_t i = 0; i < n; ++i) {
      std::vector<std::uint32_t> d(n, 1);
      d[i] = zeta;
      gens.emplace_back(Matrix::diagonal(f, d));
    }
    for (const auto& perm : sym_two_sylow_generators(n)) gens.emplace_back(Matrix::permutation(f, perm));
    return finish(ctx, SylowConstruction::DiagonalWreath, std::move(gens), cap);
  }
  if (n == 2) {
    auto d = sylow2_gl2(q);
    if (d.group.order() > cap) throw ResourceLimit("Sylow 2-subgroup exceeds cap", d.group.order());
    return d;
  }
  const std::size_t even = n - n % 2;
  if (even > 0) {
    const auto p2 = p2_generators(f);
    for (std::size_t blk = 0; blk < even / 2; ++blk) {
      for (const auto& m : p2) gens.emplace_back(embed_block(m, n, n % 2 + 2 * blk));
    }
    for (const auto& perm : sym_two_sylow_generators(even / 2)) {
      const Matrix bp = block_permutation(f, perm, 2);
      gens.emplace_back(embed_block(bp, n, n % 2));
    }
  }
  if (n % 2 == 1) {
    std::vector<std::uint32_t> d(n, 1);
    d[0] = f.neg(1);
    gens.emplace_back(Matrix::diagonal(f, d));
    return finish(ctx, SylowConstruction::OddSplit, std::move(gens), cap);
  }
  return finish(ctx, SylowConstruction::WreathEven, std::move(gens), cap);
}

InvolutionCensus involution_census(const FiniteGroup& p, const GLContext& context) {
  for (const auto& g : p.generators()) {
    if (g.kind() != ElementKind::Matrix || g.as_matrix().dim() != context.n() ||
        !(g.as_matrix().field() == context.field())) {
      throw InvalidArgument("involution_census: group shape does not match GL context");
    }
  }
  InvolutionCensus c;
  for (const auto& x : p.elements()) {
    if (x.is_identity() || !(x * x).is_identity()) continue;
    ++c.total;
    if (x.as_matrix().is_scalar()) ++c.central;
  }
  return c;
}

bool presentation_relations_hold(const GL2Presentation& pres, std::uint64_t q) {
  const Matrix one = Matrix::identity(pres.a.field(), 2);
  const Matrix b2 = pres.b * pres.b;
  return matrix_pow(pres.a, pres.a_order) == one && b2 * b2 == one && b2 == matrix_pow(pres.a, pres.a_order / 2) &&
         pres.b.inverse() * pres.a * pres.b == matrix_pow(pres.a, q);
}

namespace {

VerificationReport base_report(int statement, std::size_t n, std::uint64_t q) {
  VerificationReport r;
  r.lemma_id = "sylowtwoingln." + std::to_string(statement);
  r.params = {{"n", std::to_string(n)}, {"q", std::to_string(q)}};
  return r;
}

std::optional<std::string> side_condition_failure(int statement, std::size_t n, std::uint64_t q) {
  if (q % 2 == 0 || !is_prime_power(q)) return "q must be an odd prime power";
  const auto [p, a] = decompose_prime_power(q);
  (void)a;
  if (p < 7 || p % 3 != 1) return "requires p >= 7 and p = 1 mod 3";
  switch (statement) {
    case 1:
      if (q % 4 != 3 || q <= 7 || n <= 2 || (q == 31 && n == 4)) return "requires q = 3 mod 4, q > 7, n > 2, (q,n) != (31,4)";
      return std::nullopt;
    case 2:
      if (q != 31 || n != 4) return "requires (q,n) = (31,4)";
      return std::nullopt;
    case 3:
      if (q % 4 != 3 || n != 2) return "requires q = 3 mod 4 and n = 2";
      return std::nullopt;
    case 4:
      if (q != 7 || n <= 2) return "requires q = 7 and n > 2";
      return std::nullopt;
    case 5:
      if (q % 4 != 1) return "requires q = 1 mod 4";
      if (n < 2) return "n = 1 gives one involution against a bound of 1; the statement needs n >= 2";
      return std::nullopt;
    default:
      throw InvalidArgument("statement must be 1..5");
  }
}

std::string describe_generators(const std::vector<GroupElement>& gens) {
  std::ostringstream os;
  for (std::size_t i = 0; i < gens.size(); ++i) os << (i ? "; " : "") << gens[i].to_string();
  return os.str();
}

void settle(VerificationReport& r, bool ok, const std::string& witness) {
  r.verdict = ok ? Verdict::Verified : Verdict::Violated;
  if (!ok) r.witness = witness;
}

}  // namespace

VerificationReport verify_sylowtwoingln(int statement, std::size_t n, std::uint64_t q, std::size_t cap) {
  Stopwatch clock;
  VerificationReport r = base_report(statement, n, q);
  if (auto why = side_condition_failure(statement, n, q)) {
    r.verdict = Verdict::NotApplicable;
    r.notes.push_back(*why);
    r.elapsed_ms = clock.elapsed_ms();
    return r;
  }
  const BigInt bq(q);
  const BigInt bound = geom_sum(bq, static_cast<unsigned>(n));
  r.counts["bound"] = bound;
  try {
    switch (statement) {
      case 1: {
        const BigInt order = gl_order_two_part(static_cast<unsigned>(n), bq);
        r.counts["sylow_order"] = order;
        settle(r, order < bound, "|P| = " + to_string(order) + " >= " + to_string(bound));
        break;
      }
      case 2: {
        const auto d = sylow2_gl(n, q, cap);
        const auto base = sylow2_gl2(q);
        const BigInt base_order(base.group.order());
        const BigInt base_inv(base.census.total);
        const BigInt wreath_formula = (base_inv + 1) * (base_inv + 1) - 1 + base_order;
        const BigInt wreath_bound = 2 * (base_inv + 1) * (base_inv + 1);
        r.counts["sylow_order"] = d.group.order();
        r.counts["involutions"] = d.census.total;
        r.counts["wreath_formula"] = wreath_formula;
        r.counts["combinatorial_bound"] = wreath_bound;
        const bool ok = BigInt(d.census.total) < bound && BigInt(d.census.total) == wreath_formula &&
                        wreath_formula < wreath_bound && wreath_bound < bound;
        settle(r, ok, describe_generators(d.generators));
        break;
      }
      case 3: {
        const auto d = sylow2_gl2(q);
        r.counts["sylow_order"] = d.group.order();
        r.counts["involutions"] = d.census.total;
        r.counts["central"] = d.census.central;
        r.counts["non_central"] = d.census.non_central();
        r.counts["bound"] = q + 2;
        const bool relations = presentation_relations_hold(*d.presentation, q);
        r.counts["relations_hold"] = relations ? 1 : 0;
        r.notes.push_back("conjugation relation checked as b^-1 a b = a^q; the variant b^-1 a b = b^q cannot hold here");
        const bool ok = relations && d.census.total <= q + 2 && d.census.non_central() <= q + 1;
        settle(r, ok, describe_generators(d.generators));
        break;
      }
      case 4:
      case 5: {
        const auto d = sylow2_gl(n, q, cap);
        r.counts["sylow_order"] = d.group.order();
        r.counts["involutions"] = d.census.total;
        r.counts["central"] = d.census.central;
        settle(r, BigInt(d.census.total) < bound, describe_generators(d.generators));
        break;
      }
      default:
        throw InvalidArgument("statement must be 1..5");
    }
  } catch (const ResourceLimit& e) {
    r.verdict = Verdict::SkippedResource;
    r.counts["partial_count"] = e.partial_count();
    r.notes.push_back(e.what());
  }
  r.elapsed_ms = clock.elapsed_ms();
  return r;
}

std::string census_csv_header() { return "n,q,construction,order,involutions,central,bound,verdict"; }

CensusRow census_row(std::size_t n, std::uint64_t q, std::size_t cap) {
  const auto d = sylow2_gl(n, q, cap);
  CensusRow row{n, q, to_string(d.construction), BigInt(d.group.order()), d.census.total, d.census.central,
                geom_sum(BigInt(q), static_cast<unsigned>(n)), ""};
  if (n == 2 && q % 4 == 3) {
    row.bound = q + 2;
    row.verdict = d.census.total <= q + 2 ? "within" : "exceeds";
  } else {
    row.verdict = BigInt(d.census.total) < row.bound ? "within" : "exceeds";
  }
  return row;
}

std::string to_csv(const CensusRow& row) {
  std::ostringstream os;
  os << row.n << ',' << row.q << ',' << row.construction << ',' << row.order << ',' << row.involutions << ','
     << row.central << ',' << row.bound << ',' << row.verdict;
  return os.str();
}

}  // namespace tpv
