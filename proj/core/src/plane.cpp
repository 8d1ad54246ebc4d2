#include "tpv/plane.hpp"

#include <algorithm>
#include <cmath>
#include <set>
#include <sstream>

#include <json.hpp>

#include "tpv/errors.hpp"

namespace tpv {

namespace {

constexpr std::uint32_t kNone = std::numeric_limits<std::uint32_t>::max();

std::size_t isqrt(std::size_t x) {
  auto r = static_cast<std::size_t>(std::sqrt(static_cast<double>(x)));
  while (r * r > x) --r;
  while ((r + 1) * (r + 1) <= x) ++r;
  return r;
}

// Marks each unordered pair of members; false if a pair repeats.
bool mark_pairs(const std::vector<std::vector<std::uint32_t>>& blocks, std::size_t n) {
  boost::dynamic_bitset<> seen(n * n);
  for (const auto& b : blocks) {
    for (std::size_t i = 0; i < b.size(); ++i) {
      for (std::size_t j = i + 1; j < b.size(); ++j) {
        const std::size_t lo = std::min(b[i], b[j]), hi = std::max(b[i], b[j]);
        if (seen.test(lo * n + hi)) return false;
        seen.set(lo * n + hi);
      }
    }
  }
  return true;
}

}  // namespace

IncidencePlane::IncidencePlane(std::size_t points, std::vector<std::vector<std::uint32_t>> lines)
    : line_points_(std::move(lines)), point_lines_(points) {
  if (line_points_.size() != points || points < 7) throw InvalidArgument("plane: need as many lines as points, >= 7");
  order_ = line_points_.front().size() - 1;
  if (order_ < 2 || order_ * order_ + order_ + 1 != points) throw InvalidArgument("plane: point count is not x^2+x+1");
  incidence_.resize(points * points);
  for (std::uint32_t l = 0; l < line_points_.size(); ++l) {
    auto& pts = line_points_[l];
    std::sort(pts.begin(), pts.end());
    if (pts.size() != order_ + 1 || std::adjacent_find(pts.begin(), pts.end()) != pts.end()) {
      throw InvalidArgument("plane: every line needs x+1 distinct points");
    }
    for (auto pt : pts) {
      if (pt >= points) throw InvalidArgument("plane: point index out of range");
      incidence_.set(static_cast<std::size_t>(l) * points + pt);
      point_lines_[pt].push_back(l);
    }
  }
  for (const auto& ls : point_lines_) {
    if (ls.size() != order_ + 1) throw InvalidArgument("plane: every point needs x+1 lines");
  }
  // With these counts, no repeated pair means every pair lies on exactly one line.
  if (!mark_pairs(line_points_, points)) throw InvalidArgument("plane: two points lie on two lines");
  if (!mark_pairs(point_lines_, points)) throw InvalidArgument("plane: two lines meet twice");
}

std::uint32_t IncidencePlane::line_through(std::uint32_t a, std::uint32_t b) const {
  if (a == b) throw InvalidArgument("line_through needs two distinct points");
  const auto& la = point_lines_[a];
  const auto& lb = point_lines_[b];
  std::size_t i = 0, j = 0;
  while (i < la.size() && j < lb.size()) {
    if (la[i] == lb[j]) return la[i];
    if (la[i] < lb[j]) {
      ++i;
    } else {
      ++j;
    }
  }
  throw InternalError("plane: no line through two points");
}

std::uint32_t IncidencePlane::point_index(const std::vector<std::uint32_t>& v) const {
  if (!field_ || v.size() != 3) throw InvalidArgument("point_index needs a coordinatized plane and 3 coordinates");
  const FieldSpec& f = *field_;
  std::size_t lead = 0;
  while (lead < 3 && v[lead] == 0) ++lead;
  if (lead == 3) throw InvalidArgument("point_index: zero vector");
  const std::uint32_t s = f.inv(v[lead]);
  const std::size_t q = f.order();
  std::size_t code = 0;
  for (std::size_t i = 3; i-- > 0;) code = code * q + f.mul(v[i], s);
  return index_by_code_[code];
}

IncidencePlane pg2(std::uint64_t q) {
  const FieldSpec& f = field_of_order(q, true);
  const std::uint32_t qq = f.order();
  std::vector<std::vector<std::uint32_t>> canon;
  std::vector<std::uint32_t> index_by_code(static_cast<std::size_t>(qq) * qq * qq, kNone);
  // Triples (c0, c1, c2) in code order c0 + q c1 + q^2 c2, keeping those whose first nonzero entry is 1.
  for (std::uint32_t c2 = 0; c2 < qq; ++c2) {
    for (std::uint32_t c1 = 0; c1 < qq; ++c1) {
      for (std::uint32_t c0 = 0; c0 < qq; ++c0) {
        const std::uint32_t lead = c0 ? c0 : c1 ? c1 : c2;
        if (lead != 1) continue;
        index_by_code[c0 + static_cast<std::size_t>(qq) * (c1 + static_cast<std::size_t>(qq) * c2)] =
            static_cast<std::uint32_t>(canon.size());
        canon.push_back({c0, c1, c2});
      }
    }
  }
  std::vector<std::vector<std::uint32_t>> lines(canon.size());
  for (std::size_t l = 0; l < canon.size(); ++l) {
    const auto& d = canon[l];
    for (std::uint32_t pt = 0; pt < canon.size(); ++pt) {
      const auto& x = canon[pt];
      if (f.add(f.add(f.mul(x[0], d[0]), f.mul(x[1], d[1])), f.mul(x[2], d[2])) == 0) lines[l].push_back(pt);
    }
  }
  IncidencePlane plane(canon.size(), std::move(lines));
  plane.field_ = &f;
  plane.coords_ = std::move(canon);
  plane.index_by_code_ = std::move(index_by_code);
  return plane;
}

Collineation::Collineation(const IncidencePlane& plane, Permutation points) : points_(std::move(points)) {
  if (points_.degree() != plane.point_count()) throw InvalidArgument("collineation degree does not match the plane");
  std::vector<std::uint32_t> img(plane.line_count());
  for (std::uint32_t l = 0; l < plane.line_count(); ++l) {
    const auto& pts = plane.points_on(l);
    const std::uint32_t m = plane.line_through(points_[pts[0]], points_[pts[1]]);
    for (auto pt : pts) {
      if (!plane.incident(points_[pt], m)) throw InvalidArgument("permutation does not preserve incidence");
    }
    img[l] = m;
  }
  lines_ = Permutation(std::move(img));
}

Collineation semilinear_collineation(const IncidencePlane& plane, const Matrix& m, unsigned frobenius_power) {
  if (!plane.field() || !(m.field() == *plane.field()) || m.dim() != 3) {
    throw InvalidArgument("semilinear map must be a 3x3 matrix over the plane's field");
  }
  const FieldSpec& f = *plane.field();
  std::vector<std::uint32_t> img(plane.point_count());
  for (std::uint32_t pt = 0; pt < img.size(); ++pt) {
    std::vector<std::uint32_t> row = plane.point_coordinates(pt);
    for (auto& c : row) c = f.frobenius_power(c, frobenius_power);
    img[pt] = plane.point_index(m.apply(row));
  }
  return Collineation(plane, Permutation(std::move(img)));
}

FixedStructure fixed_structure(const IncidencePlane& plane, const Collineation& g) {
  FixedStructure out;
  for (std::uint32_t pt = 0; pt < plane.point_count(); ++pt) {
    if (g.points()[pt] == pt) out.fixed_points.push_back(pt);
  }
  for (std::uint32_t l = 0; l < plane.line_count(); ++l) {
    if (g.lines()[l] == l) out.fixed_lines.push_back(l);
  }
  const std::size_t v = out.fixed_points.size();
  if (v == out.fixed_lines.size() && v >= 7) {
    const std::size_t m = (isqrt(4 * v - 3) - 1) / 2;
    if (m * m + m + 1 == v) {
      boost::dynamic_bitset<> fixed(plane.point_count());
      for (auto pt : out.fixed_points) fixed.set(pt);
      bool ok = true;
      for (auto l : out.fixed_lines) {
        std::size_t c = 0;
        for (auto pt : plane.points_on(l)) c += fixed.test(pt) ? 1 : 0;
        ok = ok && c == m + 1;
      }
      for (auto pt : out.fixed_points) {
        std::size_t c = 0;
        for (auto l : plane.lines_through(pt)) c += g.lines()[l] == l ? 1 : 0;
        ok = ok && c == m + 1;
      }
      if (ok) out.subplane_order = m;
    }
  }
  const std::size_t x = plane.order();
  const std::size_t u = isqrt(x);
  if (u * u != x) {
    out.spectrum = "n/a";
  } else if (v == u * u + u + 1) {
    out.spectrum = "u^2+u+1";
  } else if (v == u * u + 1) {
    out.spectrum = "u^2+1";
  } else if (v == u * u + 2) {
    out.spectrum = "u^2+2";
  } else {
    out.spectrum = "other";
  }
  return out;
}

Collineation frobenius_collineation(const IncidencePlane& plane) {
  if (!plane.field()) throw InvalidArgument("frobenius_collineation needs a coordinatized plane");
  const FieldSpec& f = *plane.field();
  if (f.degree() % 2 != 0) throw InvalidArgument("frobenius_collineation needs a square field order");
  const unsigned half = f.degree() / 2;
  Collineation c = semilinear_collineation(plane, Matrix::identity(f, 3), half);
  std::size_t u = 1;
  for (unsigned i = 0; i < half; ++i) u *= f.p();
  const auto fs = fixed_structure(plane, c);
  if (!(c.points() * c.points()).is_identity() || fs.subplane_order != u) {
    throw InternalError("Frobenius collineation does not fix a Baer subplane");
  }
  return c;
}

PlaneGroup::PlaneGroup(std::shared_ptr<const IncidencePlane> plane, FiniteGroup group, std::uint32_t alpha)
    : plane_(std::move(plane)),
      group_(std::move(group)),
      alpha_(alpha),
      transitive_(false),
      stabilizer_(FiniteGroup::trivial(Permutation::identity(std::max<std::size_t>(1, plane_->point_count())))) {
  if (alpha_ >= plane_->point_count()) throw InvalidArgument("base point out of range");
  for (const auto& s : group_.generators()) {
    if (s.kind() != ElementKind::Permutation) throw InvalidArgument("plane group must act on points");
    Collineation check(*plane_, s.as_permutation());
  }
  transitive_ = is_transitive(group_);
  stabilizer_ = stabilizer(group_, alpha_);
}

SingerNormalizer singer_normalizer(std::uint64_t q) {
  const FieldSpec& small = field_of_order(q);
  const std::uint32_t p = small.p();
  const unsigned a = small.degree();
  const FieldSpec& big = field_make(p, 3 * a);
  // Embed GF(q) by a root y of its modulus.
  std::uint32_t y = kNone;
  for (std::uint32_t cand = 0; cand < big.order() && y == kNone; ++cand) {
    std::uint32_t acc = 0, pw = 1;
    for (auto c : small.modulus()) {
      acc = big.add(acc, big.mul(c, pw));
      pw = big.mul(pw, cand);
    }
    if (acc == 0) y = cand;
  }
  if (y == kNone) throw InternalError("no embedding of GF(q) into GF(q^3)");
  std::vector<std::uint32_t> embed(q);
  for (std::uint32_t code = 0; code < q; ++code) {
    std::uint32_t acc = 0, pw = 1, rest = code;
    for (unsigned i = 0; i < a; ++i, rest /= p) {
      acc = big.add(acc, big.mul(rest % p, pw));
      pw = big.mul(pw, y);
    }
    embed[code] = acc;
  }
  // With beta in GF(p^3), x -> x^(p^3...) acts coordinatewise; otherwise any generator.
  std::uint64_t p3 = static_cast<std::uint64_t>(p) * p * p;
  const std::uint32_t beta =
      a % 3 != 0 ? big.exp((static_cast<std::uint64_t>(big.order()) - 1) / (p3 - 1)) : big.primitive_element();
  const std::uint32_t beta2 = big.mul(beta, beta);
  std::vector<std::vector<std::uint32_t>> coords_of(big.order());
  for (std::uint32_t c2 = 0; c2 < q; ++c2) {
    for (std::uint32_t c1 = 0; c1 < q; ++c1) {
      for (std::uint32_t c0 = 0; c0 < q; ++c0) {
        const std::uint32_t x =
            big.add(big.add(embed[c0], big.mul(embed[c1], beta)), big.mul(embed[c2], beta2));
        if (!coords_of[x].empty()) throw InternalError("GF(q^3) basis is degenerate");
        coords_of[x] = {c0, c1, c2};
      }
    }
  }
  auto plane = std::make_shared<const IncidencePlane>(pg2(q));
  auto element_of = [&](std::uint32_t pt) {
    const auto& c = plane->point_coordinates(pt);
    return big.add(big.add(embed[c[0]], big.mul(embed[c[1]], beta)), big.mul(embed[c[2]], beta2));
  };
  std::vector<std::uint32_t> sing(plane->point_count()), frob(plane->point_count());
  for (std::uint32_t pt = 0; pt < sing.size(); ++pt) {
    const std::uint32_t x = element_of(pt);
    sing[pt] = plane->point_index(coords_of[big.mul(x, big.primitive_element())]);
    frob[pt] = plane->point_index(coords_of[big.frobenius(x)]);
  }
  GroupElement singer(Permutation(std::move(sing)));
  GroupElement frobenius(Permutation(std::move(frob)));
  FiniteGroup g = FiniteGroup::closure({singer, frobenius});
  const std::uint32_t alpha = plane->point_index({1, 0, 0});
  return SingerNormalizer{PlaneGroup(plane, g, alpha), singer, frobenius};
}

namespace {

std::size_t count_fixed(const Permutation& p) {
  std::size_t c = 0;
  for (std::uint32_t i = 0; i < p.degree(); ++i) c += p[i] == i ? 1 : 0;
  return c;
}

VerificationReport na(VerificationReport r, const std::string& why, const Stopwatch& clock) {
  r.verdict = Verdict::NotApplicable;
  r.notes.push_back(why);
  r.elapsed_ms = clock.elapsed_ms();
  return r;
}

}  // namespace

VerificationReport counting_identity_check(const PlaneGroup& g, const GroupElement& involution) {
  Stopwatch clock;
  VerificationReport r;
  r.lemma_id = "counting";
  const std::size_t x = g.plane().order();
  r.params = {{"plane_order", std::to_string(x)}, {"group_order", std::to_string(g.group().order())}};
  if (!g.group().contains(involution)) throw InvalidArgument("counting_identity_check: g is not in G");
  if (!g.transitive()) return na(r, "G is not transitive on points", clock);
  if (involution.is_identity() || !(involution * involution).is_identity()) return na(r, "g is not an involution", clock);
  const std::size_t u = isqrt(x);
  if (u * u != x) return na(r, "plane order is not a square", clock);
  const std::size_t baer = u * u + u + 1;
  r.counts["u"] = u;
  r.counts["nine_divides_u2u1"] = baer % 9 == 0 ? 1 : 0;

  const auto cls = conj_class(g.group(), involution);
  std::size_t in_stab = 0;
  BigInt fixed_total = 0;
  for (const auto& h : cls) {
    const auto& perm = h.as_permutation();
    const std::size_t f = count_fixed(perm);
    if (f != baer) return na(r, "a conjugate of g fixes " + std::to_string(f) + " points, not u^2+u+1", clock);
    fixed_total += f;
    if (perm[g.alpha()] == g.alpha()) ++in_stab;
  }
  const std::size_t expected = u * u - u + 1;
  r.counts["class_size"] = cls.size();
  r.counts["class_in_stabilizer"] = in_stab;
  r.counts["expected_ratio"] = expected;
  r.counts["fixed_point_total"] = fixed_total;
  const bool integral = in_stab > 0 && cls.size() % in_stab == 0;
  if (integral) r.counts["ratio"] = cls.size() / in_stab;
  // Double counting pairs (h, beta) with h in g^G fixing beta.
  const bool double_count = fixed_total == BigInt(g.plane().point_count()) * in_stab;
  const bool ok = integral && cls.size() / in_stab == expected && double_count;
  r.verdict = ok ? Verdict::Verified : Verdict::Violated;
  if (!ok) r.witness = "g=" + involution.to_string();
  r.elapsed_ms = clock.elapsed_ms();
  return r;
}

VerificationReport fixpoint_transitivity_check(const FiniteGroup& g, std::uint32_t alpha, const FiniteGroup& k) {
  Stopwatch clock;
  VerificationReport r;
  r.lemma_id = "fixtrans";
  const std::size_t degree = g.identity().as_permutation().degree();
  r.params = {{"degree", std::to_string(degree)},
              {"group_order", std::to_string(g.order())},
              {"K_order", std::to_string(k.order())},
              {"alpha", std::to_string(alpha)}};
  if (!is_transitive(g)) return na(r, "G is not transitive", clock);
  for (const auto& s : k.generators()) {
    if (!g.contains(s) || s.as_permutation()[alpha] != alpha) return na(r, "K is not inside G_alpha", clock);
  }
  std::vector<std::uint32_t> fix;
  for (std::uint32_t pt = 0; pt < degree; ++pt) {
    bool fixed = true;
    for (const auto& s : k.generators()) fixed = fixed && s.as_permutation()[pt] == pt;
    if (fixed) fix.push_back(pt);
  }
  std::vector<std::uint32_t> k_idx;
  for (const auto& x : k.elements()) k_idx.push_back(*g.index_of(x));
  std::sort(k_idx.begin(), k_idx.end());
  std::vector<std::uint32_t> k_gens;
  for (const auto& s : k.generators()) k_gens.push_back(*g.index_of(s));
  g.cache_table(6000);

  // (a) N_G(K) transitive on Fix(K).
  boost::dynamic_bitset<> reached(degree);
  std::size_t normalizer_order = 0;
  const auto& elems = g.elements();
  for (std::uint32_t x = 0; x < g.order(); ++x) {
    bool normalizes = true;
    for (auto s : k_gens) {
      if (!std::binary_search(k_idx.begin(), k_idx.end(), g.conj(s, x))) {
        normalizes = false;
        break;
      }
    }
    if (!normalizes) continue;
    ++normalizer_order;
    reached.set(elems[x].as_permutation()[fix.front()]);
  }
  const bool side_a = reached.count() == fix.size();

  // (b) K^G meets G_alpha exactly in K^{G_alpha}.
  std::set<std::vector<std::uint32_t>> in_stab, stab_conj;
  for (std::uint32_t x = 0; x < g.order(); ++x) {
    std::vector<std::uint32_t> conj;
    conj.reserve(k_idx.size());
    bool inside = true;
    for (auto i : k_idx) {
      const std::uint32_t c = g.conj(i, x);
      inside = inside && elems[c].as_permutation()[alpha] == alpha;
      conj.push_back(c);
    }
    if (!inside) continue;
    std::sort(conj.begin(), conj.end());
    if (elems[x].as_permutation()[alpha] == alpha) stab_conj.insert(conj);
    in_stab.insert(std::move(conj));
  }
  const bool side_b = in_stab == stab_conj;

  r.counts["fix_size"] = fix.size();
  r.counts["normalizer_order"] = normalizer_order;
  r.counts["conjugates_in_stabilizer"] = in_stab.size();
  r.counts["stabilizer_conjugates"] = stab_conj.size();
  r.counts["normalizer_transitive"] = side_a ? 1 : 0;
  r.counts["conjugates_agree"] = side_b ? 1 : 0;
  r.verdict = side_a == side_b ? Verdict::Verified : Verdict::Violated;
  if (side_a != side_b) {
    std::ostringstream os;
    os << "K generators:";
    for (const auto& s : k.generators()) os << ' ' << s.to_string();
    r.witness = os.str();
  }
  r.elapsed_ms = clock.elapsed_ms();
  return r;
}

VerificationReport fixpoint_transitivity_check(const PlaneGroup& g, const FiniteGroup& k) {
  return fixpoint_transitivity_check(g.group(), g.alpha(), k);
}

OddSearchResult odd_transitive_search(const FiniteGroup& g, OddSearchBudget budget) {
  if (!is_transitive(g)) throw InvalidArgument("odd_transitive_search needs a transitive group");
  OddSearchResult out;
  if (g.order() % 2 == 1) {
    out.witness = g;
    return out;
  }
  const std::size_t degree = g.identity().as_permutation().degree();
  std::vector<std::pair<std::uint64_t, std::uint32_t>> odd;
  for (std::uint32_t i = 1; i < g.order(); ++i) {
    const std::uint64_t o = element_order(g, i);
    if (o % 2 == 1) odd.emplace_back(o, i);
  }
  std::sort(odd.begin(), odd.end(), [](const auto& a, const auto& b) {
    return a.first != b.first ? a.first > b.first : a.second < b.second;
  });
  const auto& elems = g.elements();
  // Single elements: transitive iff the cycle through point 0 covers everything.
  for (const auto& [o, i] : odd) {
    if (out.candidates_tried >= budget.candidates) return out;
    ++out.candidates_tried;
    const auto& perm = elems[i].as_permutation();
    std::size_t len = 1;
    for (std::uint32_t pt = perm[0]; pt != 0; pt = perm[pt]) ++len;
    if (len == degree) {
      out.witness = FiniteGroup::closure({elems[i]});
      return out;
    }
  }
  for (std::size_t a = 0; a < odd.size(); ++a) {
    for (std::size_t b = a + 1; b < odd.size(); ++b) {
      if (out.candidates_tried >= budget.candidates) return out;
      ++out.candidates_tried;
      try {
        FiniteGroup h = FiniteGroup::closure({elems[odd[a].second], elems[odd[b].second]}, budget.closure_elements);
        if (h.order() % 2 == 1 && is_transitive(h)) {
          out.witness = h;
          return out;
        }
      } catch (const ResourceLimit&) {
      }
    }
  }
  return out;
}

std::string plane_to_json(const IncidencePlane& plane) {
  nlohmann::json j;
  j["order"] = plane.order();
  j["points"] = plane.point_count();
  j["lines"] = plane.line_count();
  if (plane.field()) {
    j["field_order"] = plane.field()->order();
    nlohmann::json coords = nlohmann::json::array();
    for (std::uint32_t pt = 0; pt < plane.point_count(); ++pt) coords.push_back(plane.point_coordinates(pt));
    j["point_coordinates"] = coords;
  }
  nlohmann::json lines = nlohmann::json::array();
  for (std::uint32_t l = 0; l < plane.line_count(); ++l) lines.push_back(plane.points_on(l));
  j["line_points"] = lines;
  return j.dump();
}

std::string incidence_csv(const IncidencePlane& plane) {
  std::string out;
  for (std::uint32_t l = 0; l < plane.line_count(); ++l) {
    for (std::uint32_t pt = 0; pt < plane.point_count(); ++pt) {
      if (pt) out += ',';
      out += plane.incident(pt, l) ? '1' : '0';
    }
    out += '\n';
  }
  return out;
}

}  // namespace tpv
