// SPDX-License-Identifier: MIT
// Copyright (c) 2026 qgeo authors

#include "groups.hpp"

#include <algorithm>
#include <cctype>
#include <map>
#include <queue>
#include <set>
#include <sstream>

#include <json.hpp>

#include "error.hpp"

namespace qgeo {

namespace {

constexpr size_t kNpos = static_cast<size_t>(-1);
// Group construction verifies associativity on all triples, which is cubic
// in the order; cap the order so construction stays instantaneous.
constexpr size_t kMaxGroupOrder = 256;

std::string pair_str(const std::string& a, const std::string& b) {
  return a + "." + b;
}

}  // namespace

// ------------------------------------------------------------------------
// FinGroup

FinGroup::FinGroup(std::string name, std::vector<std::string> labels,
                   std::vector<std::vector<size_t>> table)
    : name_(std::move(name)), labels_(std::move(labels)), table_(std::move(table)) {
  const size_t n = labels_.size();
  if (n == 0) fail(Err::InvalidArgument, "group must have at least one element");
  if (n > kMaxGroupOrder)
    fail(Err::BoundExceeded,
         "group order " + std::to_string(n) + " exceeds the construction bound " +
             std::to_string(kMaxGroupOrder));
  if (table_.size() != n)
    fail(Err::InvalidArgument, "multiplication table must have one row per element");
  for (const auto& row : table_) {
    if (row.size() != n)
      fail(Err::InvalidArgument, "multiplication table rows must have one entry per element");
    for (size_t v : row)
      if (v >= n) fail(Err::InvalidArgument, "multiplication table entry out of range");
  }
  {
    std::set<std::string> seen;
    for (const auto& l : labels_) {
      if (l.empty()) fail(Err::InvalidArgument, "element labels must be nonempty");
      if (!seen.insert(l).second)
        fail(Err::InvalidArgument, "duplicate element label '" + l + "'");
    }
  }

  // Two-sided identity.
  identity_ = kNpos;
  for (size_t e = 0; e < n; ++e) {
    bool ok = true;
    for (size_t a = 0; a < n && ok; ++a)
      ok = table_[e][a] == a && table_[a][e] == a;
    if (ok) {
      identity_ = e;
      break;
    }
  }
  if (identity_ == kNpos) fail(Err::NotAGroup, "'" + name_ + "' has no identity element");

  // Associativity on every triple.
  for (size_t a = 0; a < n; ++a)
    for (size_t b = 0; b < n; ++b)
      for (size_t c = 0; c < n; ++c)
        if (table_[table_[a][b]][c] != table_[a][table_[b][c]])
          fail(Err::NotAGroup, "'" + name_ + "' is not associative at (" + labels_[a] + "," +
                                   labels_[b] + "," + labels_[c] + ")");

  // Two-sided inverses.
  inverse_.assign(n, kNpos);
  for (size_t a = 0; a < n; ++a) {
    for (size_t b = 0; b < n; ++b)
      if (table_[a][b] == identity_ && table_[b][a] == identity_) {
        inverse_[a] = b;
        break;
      }
    if (inverse_[a] == kNpos)
      fail(Err::NotAGroup, "'" + name_ + "' element " + labels_[a] + " has no inverse");
  }
}

std::optional<size_t> FinGroup::index_of(const std::string& label) const {
  for (size_t i = 0; i < labels_.size(); ++i)
    if (labels_[i] == label) return i;
  return std::nullopt;
}

std::vector<size_t> FinGroup::closure(std::vector<size_t> elems) const {
  const size_t n = order();
  for (size_t v : elems)
    if (v >= n) fail(Err::InvalidArgument, "element index out of range");
  std::set<size_t> s(elems.begin(), elems.end());
  s.insert(identity_);
  bool grew = true;
  while (grew) {
    grew = false;
    std::vector<size_t> cur(s.begin(), s.end());
    for (size_t a : cur)
      for (size_t b : cur)
        if (s.insert(table_[a][b]).second) grew = true;
  }
  return std::vector<size_t>(s.begin(), s.end());
}

std::vector<std::vector<size_t>> FinGroup::subgroups() const {
  std::set<std::vector<size_t>> seen;
  std::queue<std::vector<size_t>> work;
  auto trivial = closure({});
  seen.insert(trivial);
  work.push(trivial);
  while (!work.empty()) {
    auto h = work.front();
    work.pop();
    std::set<size_t> in(h.begin(), h.end());
    for (size_t x = 0; x < order(); ++x) {
      if (in.count(x)) continue;
      auto gens = h;
      gens.push_back(x);
      auto k = closure(gens);
      if (seen.insert(k).second) work.push(k);
    }
  }
  std::vector<std::vector<size_t>> out(seen.begin(), seen.end());
  std::sort(out.begin(), out.end(), [](const auto& a, const auto& b) {
    if (a.size() != b.size()) return a.size() < b.size();
    return a < b;
  });
  return out;
}

FinGroup FinGroup::subgroup_group(const std::vector<size_t>& elems, std::string name) const {
  std::vector<size_t> sorted = elems;
  std::sort(sorted.begin(), sorted.end());
  sorted.erase(std::unique(sorted.begin(), sorted.end()), sorted.end());
  std::vector<size_t> local(order(), kNpos);
  for (size_t i = 0; i < sorted.size(); ++i) {
    if (sorted[i] >= order()) fail(Err::InvalidArgument, "element index out of range");
    local[sorted[i]] = i;
  }
  std::vector<std::string> labels;
  labels.reserve(sorted.size());
  for (size_t v : sorted) labels.push_back(labels_[v]);
  std::vector<std::vector<size_t>> table(sorted.size(), std::vector<size_t>(sorted.size()));
  for (size_t i = 0; i < sorted.size(); ++i)
    for (size_t j = 0; j < sorted.size(); ++j) {
      size_t p = table_[sorted[i]][sorted[j]];
      if (local[p] == kNpos)
        fail(Err::NotAGroup, "subset of '" + name_ + "' is not closed: " +
                                 pair_str(labels_[sorted[i]], labels_[sorted[j]]) +
                                 " lies outside it");
      table[i][j] = local[p];
    }
  return FinGroup(std::move(name), std::move(labels), std::move(table));
}

FinGroup FinGroup::from_permutations(
    std::string name, size_t degree,
    const std::vector<std::pair<std::string, std::vector<size_t>>>& gens) {
  if (degree == 0) fail(Err::InvalidArgument, "permutation degree must be positive");
  for (const auto& [glabel, perm] : gens) {
    if (perm.size() != degree)
      fail(Err::InvalidArgument, "generator '" + glabel + "' has wrong degree");
    std::vector<bool> hit(degree, false);
    for (size_t v : perm) {
      if (v >= degree || hit[v])
        fail(Err::InvalidArgument, "generator '" + glabel + "' is not a permutation");
      hit[v] = true;
    }
    if (glabel.empty() || glabel == "e")
      fail(Err::InvalidArgument, "generator labels must be nonempty and distinct from 'e'");
  }

  // Breadth-first closure under right multiplication by the generators;
  // the first word reaching an element names it, so labels are shortest.
  std::vector<size_t> id(degree);
  for (size_t i = 0; i < degree; ++i) id[i] = i;
  std::map<std::vector<size_t>, size_t> index;
  std::vector<std::vector<size_t>> elems;
  std::vector<std::string> labels;
  index[id] = 0;
  elems.push_back(id);
  labels.push_back("e");
  for (size_t at = 0; at < elems.size(); ++at) {
    for (const auto& [glabel, perm] : gens) {
      // (x.g)(i) = x(g(i)): apply the generator first, the known element after.
      std::vector<size_t> prod(degree);
      for (size_t i = 0; i < degree; ++i) prod[i] = elems[at][perm[i]];
      if (index.count(prod)) continue;
      if (elems.size() >= kMaxGroupOrder)
        fail(Err::BoundExceeded, "generated group order exceeds " +
                                     std::to_string(kMaxGroupOrder));
      index[prod] = elems.size();
      elems.push_back(prod);
      labels.push_back(at == 0 ? glabel : labels[at] + glabel);
    }
  }

  const size_t n = elems.size();
  std::vector<std::vector<size_t>> table(n, std::vector<size_t>(n));
  for (size_t a = 0; a < n; ++a)
    for (size_t b = 0; b < n; ++b) {
      std::vector<size_t> prod(degree);
      for (size_t i = 0; i < degree; ++i) prod[i] = elems[a][elems[b][i]];
      table[a][b] = index.at(prod);
    }
  return FinGroup(std::move(name), std::move(labels), std::move(table));
}

// ------------------------------------------------------------------------
// Cycle notation

std::vector<size_t> parse_cycles(const std::string& text, size_t degree) {
  std::vector<size_t> perm(degree);
  for (size_t i = 0; i < degree; ++i) perm[i] = i;
  std::vector<bool> used(degree, false);

  size_t pos = 0;
  auto skip_ws = [&] {
    while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
  };
  skip_ws();
  while (pos < text.size()) {
    if (text[pos] != '(')
      fail(Err::Parse, "expected '(' in cycle notation at position " + std::to_string(pos));
    ++pos;
    std::vector<size_t> cycle;
    while (true) {
      skip_ws();
      if (pos < text.size() && text[pos] == ',') {
        ++pos;
        skip_ws();
      }
      if (pos >= text.size()) fail(Err::Parse, "unterminated cycle");
      if (text[pos] == ')') {
        ++pos;
        break;
      }
      if (!std::isdigit(static_cast<unsigned char>(text[pos])))
        fail(Err::Parse, "expected a point or ')' in cycle at position " + std::to_string(pos));
      size_t v = 0;
      while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) {
        v = v * 10 + static_cast<size_t>(text[pos] - '0');
        ++pos;
      }
      if (v == 0 || v > degree)
        fail(Err::Parse, "cycle point " + std::to_string(v) + " outside 1.." +
                             std::to_string(degree));
      if (used[v - 1])
        fail(Err::Parse, "point " + std::to_string(v) + " appears twice; cycles must be disjoint");
      used[v - 1] = true;
      cycle.push_back(v - 1);
    }
    for (size_t k = 0; k + 1 < cycle.size(); ++k) perm[cycle[k]] = cycle[k + 1];
    if (cycle.size() > 1) perm[cycle.back()] = cycle.front();
    skip_ws();
  }
  return perm;
}

// ------------------------------------------------------------------------
// Built-ins and JSON input

std::vector<std::string> builtin_group_names() {
  return {"C2", "C3", "C4", "C2xC2", "S3", "D4", "S4"};
}

FinGroup builtin_group(const std::string& name) {
  auto perm = [&](size_t degree, const char* cycles) { return parse_cycles(cycles, degree); };
  if (name == "C2")
    return FinGroup::from_permutations("C2", 2, {{"u", perm(2, "(1 2)")}});
  if (name == "C3")
    return FinGroup::from_permutations("C3", 3, {{"c", perm(3, "(1 2 3)")}});
  if (name == "C4")
    return FinGroup::from_permutations("C4", 4, {{"a", perm(4, "(1 2 3 4)")}});
  if (name == "C2xC2")
    return FinGroup::from_permutations("C2xC2", 4,
                                       {{"a", perm(4, "(1 2)")}, {"b", perm(4, "(3 4)")}});
  if (name == "S3")
    return FinGroup::from_permutations("S3", 3,
                                       {{"c", perm(3, "(1 2 3)")}, {"t", perm(3, "(1 2)")}});
  if (name == "D4")
    return FinGroup::from_permutations("D4", 4,
                                       {{"r", perm(4, "(1 2 3 4)")}, {"s", perm(4, "(1 3)")}});
  if (name == "S4")
    return FinGroup::from_permutations("S4", 4,
                                       {{"c", perm(4, "(1 2 3 4)")}, {"t", perm(4, "(1 2)")}});
  std::string known;
  for (const auto& g : builtin_group_names()) known += (known.empty() ? "" : ", ") + g;
  fail(Err::InvalidArgument, "unknown builtin group '" + name + "' (available: " + known + ")");
}

FinGroup group_from_json(const std::string& json_text) {
  nlohmann::ordered_json j;
  try {
    j = nlohmann::ordered_json::parse(json_text);
  } catch (const std::exception& e) {
    fail(Err::Parse, std::string("invalid JSON: ") + e.what());
  }
  if (!j.is_object()) fail(Err::Parse, "group JSON must be an object");
  std::string name = j.value("name", std::string("group"));
  try {
    if (j.contains("table")) {
      if (!j.contains("labels")) fail(Err::Parse, "group JSON with a table needs labels");
      std::vector<std::string> labels = j.at("labels").get<std::vector<std::string>>();
      std::vector<std::vector<size_t>> table =
          j.at("table").get<std::vector<std::vector<size_t>>>();
      return FinGroup(std::move(name), std::move(labels), std::move(table));
    }
    if (j.contains("perm_gens")) {
      if (!j.contains("degree")) fail(Err::Parse, "group JSON with perm_gens needs degree");
      size_t degree = j.at("degree").get<size_t>();
      std::vector<std::pair<std::string, std::vector<size_t>>> gens;
      for (const auto& [glabel, cycles] : j.at("perm_gens").items())
        gens.emplace_back(glabel, parse_cycles(cycles.get<std::string>(), degree));
      return FinGroup::from_permutations(std::move(name), degree, gens);
    }
  } catch (const Error&) {
    throw;
  } catch (const std::exception& e) {
    fail(Err::Parse, std::string("malformed group JSON: ") + e.what());
  }
  fail(Err::Parse, "group JSON needs either labels+table or degree+perm_gens");
}

// ------------------------------------------------------------------------
// Factorisations

std::vector<Factorisation> find_factorisations(const FinGroup& x, size_t order_bound) {
  if (x.order() > order_bound)
    fail(Err::BoundExceeded, "group order " + std::to_string(x.order()) +
                                 " exceeds the factorisation search bound " +
                                 std::to_string(order_bound));
  auto subs = x.subgroups();
  std::vector<Factorisation> out;
  for (const auto& g : subs)
    for (const auto& m : subs) {
      if (g.size() * m.size() != x.order()) continue;
      std::vector<size_t> common;
      std::set_intersection(g.begin(), g.end(), m.begin(), m.end(),
                            std::back_inserter(common));
      if (common.size() != 1) continue;  // always contains the identity
      std::vector<bool> hit(x.order(), false);
      bool bijective = true;
      for (size_t a : g) {
        for (size_t b : m) {
          size_t p = x.mul(a, b);
          if (hit[p]) {
            bijective = false;
            break;
          }
          hit[p] = true;
        }
        if (!bijective) break;
      }
      if (bijective) out.push_back(Factorisation{&x, g, m});
    }
  return out;
}

// ------------------------------------------------------------------------
// MatchedPair

MatchedPair::MatchedPair(const Factorisation& f) : x_(f.x), g_(f.g), m_(f.m) {
  if (x_ == nullptr) fail(Err::InvalidArgument, "factorisation has no ambient group");
  std::sort(g_.begin(), g_.end());
  std::sort(m_.begin(), m_.end());
  const size_t n = x_->order();
  const size_t ng = g_.size(), nm = m_.size();
  if (ng * nm != n)
    fail(Err::NotAFactorisation, "subgroup orders " + std::to_string(ng) + "*" +
                                     std::to_string(nm) + " do not multiply to " +
                                     std::to_string(n));
  g_local_.assign(n, kNpos);
  m_local_.assign(n, kNpos);
  for (size_t i = 0; i < ng; ++i) {
    if (g_[i] >= n) fail(Err::InvalidArgument, "element index out of range");
    g_local_[g_[i]] = i;
  }
  for (size_t j = 0; j < nm; ++j) {
    if (m_[j] >= n) fail(Err::InvalidArgument, "element index out of range");
    m_local_[m_[j]] = j;
  }
  if (g_local_[x_->identity()] == kNpos || m_local_[x_->identity()] == kNpos)
    fail(Err::NotAFactorisation, "factors must contain the identity");
  g_id_ = g_local_[x_->identity()];
  m_id_ = m_local_[x_->identity()];

  // Closure of the factors.
  for (size_t a = 0; a < ng; ++a)
    for (size_t b = 0; b < ng; ++b)
      if (g_local_[x_->mul(g_[a], g_[b])] == kNpos)
        fail(Err::NotAFactorisation, "first factor is not a subgroup");
  for (size_t a = 0; a < nm; ++a)
    for (size_t b = 0; b < nm; ++b)
      if (m_local_[x_->mul(m_[a], m_[b])] == kNpos)
        fail(Err::NotAFactorisation, "second factor is not a subgroup");

  // Unique decomposition u = g.m of every ambient element.
  std::vector<size_t> dec_g(n, kNpos), dec_m(n, kNpos);
  for (size_t i = 0; i < ng; ++i)
    for (size_t j = 0; j < nm; ++j) {
      size_t u = x_->mul(g_[i], m_[j]);
      if (dec_g[u] != kNpos)
        fail(Err::NotAFactorisation, "product map G x M -> X is not injective at " +
                                         x_->label(u));
      dec_g[u] = i;
      dec_m[u] = j;
    }

  // Actions from the refactorisation m.g = (m |> g).(m <| g).
  left_.assign(nm, std::vector<size_t>(ng));
  right_.assign(nm, std::vector<size_t>(ng));
  for (size_t j = 0; j < nm; ++j)
    for (size_t i = 0; i < ng; ++i) {
      size_t u = x_->mul(m_[j], g_[i]);
      left_[j][i] = dec_g[u];
      right_[j][i] = dec_m[u];
    }

  // Matched-pair identities, verified by full enumeration.
  auto bad = [&](const std::string& what) {
    fail(Err::NotAFactorisation, "matched-pair identity failed: " + what);
  };
  for (size_t i = 0; i < ng; ++i) {
    if (act_left(m_id_, i) != i) bad("e |> g = g at " + g_label(i));
    if (act_right(m_id_, i) != m_id_) bad("e <| g = e at " + g_label(i));
  }
  for (size_t j = 0; j < nm; ++j) {
    if (act_left(j, g_id_) != g_id_) bad("m |> e = e at " + m_label(j));
    if (act_right(j, g_id_) != j) bad("m <| e = m at " + m_label(j));
  }
  for (size_t j = 0; j < nm; ++j)
    for (size_t i = 0; i < ng; ++i)
      for (size_t i2 = 0; i2 < ng; ++i2) {
        if (act_left(j, g_mul(i, i2)) !=
            g_mul(act_left(j, i), act_left(act_right(j, i), i2)))
          bad("m |> (g.g') at (" + m_label(j) + "," + g_label(i) + "," + g_label(i2) + ")");
        if (act_right(j, g_mul(i, i2)) != act_right(act_right(j, i), i2))
          bad("m <| (g.g') at (" + m_label(j) + "," + g_label(i) + "," + g_label(i2) + ")");
      }
  for (size_t j = 0; j < nm; ++j)
    for (size_t j2 = 0; j2 < nm; ++j2)
      for (size_t i = 0; i < ng; ++i) {
        if (act_left(m_mul(j, j2), i) != act_left(j, act_left(j2, i)))
          bad("(m.m') |> g at (" + m_label(j) + "," + m_label(j2) + "," + g_label(i) + ")");
        if (act_right(m_mul(j, j2), i) !=
            m_mul(act_right(j, act_left(j2, i)), act_right(j2, i)))
          bad("(m.m') <| g at (" + m_label(j) + "," + m_label(j2) + "," + g_label(i) + ")");
      }
}

size_t MatchedPair::g_mul(size_t a, size_t b) const {
  size_t v = g_local_.at(x_->mul(g_.at(a), g_.at(b)));
  if (v == kNpos) fail(Err::Internal, "product left the first factor");
  return v;
}

size_t MatchedPair::m_mul(size_t a, size_t b) const {
  size_t v = m_local_.at(x_->mul(m_.at(a), m_.at(b)));
  if (v == kNpos) fail(Err::Internal, "product left the second factor");
  return v;
}

size_t MatchedPair::g_inv(size_t a) const {
  size_t v = g_local_.at(x_->inverse(g_.at(a)));
  if (v == kNpos) fail(Err::Internal, "inverse left the first factor");
  return v;
}

size_t MatchedPair::m_inv(size_t a) const {
  size_t v = m_local_.at(x_->inverse(m_.at(a)));
  if (v == kNpos) fail(Err::Internal, "inverse left the second factor");
  return v;
}

// ------------------------------------------------------------------------
// Bicrossproduct

Bicross bicrossproduct(const MatchedPair& mp, std::string name) {
  const size_t ng = mp.ng(), nm = mp.nm();
  const size_t dim = ng * nm;
  auto ps = make_params({});
  const Scalar one = Scalar::one(ps);
  auto at = [&](size_t j, size_t i) { return j * ng + i; };

  std::vector<std::string> basis(dim);
  for (size_t j = 0; j < nm; ++j)
    for (size_t i = 0; i < ng; ++i)
      basis[at(j, i)] = "(" + mp.m_label(j) + "," + mp.g_label(i) + ")";

  // (b,a)(b',a') = [b <| a = b'] (b, a.a')
  std::vector<std::vector<SparseVec>> product(dim, std::vector<SparseVec>(dim));
  for (size_t j = 0; j < nm; ++j)
    for (size_t i = 0; i < ng; ++i)
      for (size_t j2 = 0; j2 < nm; ++j2)
        for (size_t i2 = 0; i2 < ng; ++i2)
          if (mp.act_right(j, i) == j2)
            product[at(j, i)][at(j2, i2)][at(j, mp.g_mul(i, i2))] = one;

  SparseVec unit;
  for (size_t j = 0; j < nm; ++j) unit[at(j, mp.g_identity())] = one;

  // Delta(b,a) = sum over b1.b2 = b of (b1, b2 |> a) (x) (b2, a)
  std::vector<SparseMat> coproduct(dim);
  for (size_t j = 0; j < nm; ++j)
    for (size_t i = 0; i < ng; ++i)
      for (size_t j2 = 0; j2 < nm; ++j2) {
        size_t j1 = mp.m_mul(j, mp.m_inv(j2));
        mat_add(coproduct[at(j, i)], at(j1, mp.act_left(j2, i)), at(j2, i), one);
      }

  std::vector<Scalar> counit(dim, Scalar::zero(ps));
  for (size_t i = 0; i < ng; ++i) counit[at(mp.m_identity(), i)] = one;

  // S(b,a) = ((b <| a)^-1, (b |> a)^-1)
  std::vector<SparseVec> antipode(dim);
  for (size_t j = 0; j < nm; ++j)
    for (size_t i = 0; i < ng; ++i)
      antipode[at(j, i)][at(mp.m_inv(mp.act_right(j, i)), mp.g_inv(mp.act_left(j, i)))] = one;

  FinGroup grp_g = mp.x().subgroup_group(mp.g_elems(), mp.x().name() + ":G");
  FinGroup grp_m = mp.x().subgroup_group(mp.m_elems(), mp.x().name() + ":M");
  if (name.empty())
    name = "bicross(" + grp_m.name() + "," + grp_g.name() + ")";

  std::vector<SparseVec> inclusion(nm);
  for (size_t j = 0; j < nm; ++j) inclusion[j][at(j, mp.g_identity())] = one;
  std::vector<SparseVec> projection(dim);
  for (size_t i = 0; i < ng; ++i) projection[at(mp.m_identity(), i)][i] = one;

  return Bicross{FinHopf(std::move(name), ps, std::move(basis), std::move(product),
                         std::move(unit), std::move(coproduct), std::move(counit),
                         std::move(antipode)),
                 std::move(grp_g), std::move(grp_m), std::move(inclusion),
                 std::move(projection)};
}

// ------------------------------------------------------------------------
// Function and group Hopf algebras

FinHopf function_hopf(const FinGroup& g) {
  const size_t n = g.order();
  auto ps = make_params({});
  const Scalar one = Scalar::one(ps);

  std::vector<std::string> basis(n);
  for (size_t i = 0; i < n; ++i) basis[i] = "d(" + g.label(i) + ")";

  std::vector<std::vector<SparseVec>> product(n, std::vector<SparseVec>(n));
  for (size_t i = 0; i < n; ++i) product[i][i][i] = one;

  SparseVec unit;
  for (size_t i = 0; i < n; ++i) unit[i] = one;

  std::vector<SparseMat> coproduct(n);
  for (size_t a = 0; a < n; ++a)
    for (size_t b = 0; b < n; ++b) mat_add(coproduct[g.mul(a, b)], a, b, one);

  std::vector<Scalar> counit(n, Scalar::zero(ps));
  counit[g.identity()] = one;

  std::vector<SparseVec> antipode(n);
  for (size_t i = 0; i < n; ++i) antipode[i][g.inverse(i)] = one;

  return FinHopf("k(" + g.name() + ")", ps, std::move(basis), std::move(product),
                 std::move(unit), std::move(coproduct), std::move(counit),
                 std::move(antipode));
}

FinHopf group_hopf(const FinGroup& g) {
  const size_t n = g.order();
  auto ps = make_params({});
  const Scalar one = Scalar::one(ps);

  std::vector<std::string> basis = g.labels();

  std::vector<std::vector<SparseVec>> product(n, std::vector<SparseVec>(n));
  for (size_t a = 0; a < n; ++a)
    for (size_t b = 0; b < n; ++b) product[a][b][g.mul(a, b)] = one;

  SparseVec unit;
  unit[g.identity()] = one;

  std::vector<SparseMat> coproduct(n);
  for (size_t i = 0; i < n; ++i) mat_add(coproduct[i], i, i, one);

  std::vector<Scalar> counit(n, one);

  std::vector<SparseVec> antipode(n);
  for (size_t i = 0; i < n; ++i) antipode[i][g.inverse(i)] = one;

  return FinHopf("k" + g.name(), ps, std::move(basis), std::move(product), std::move(unit),
                 std::move(coproduct), std::move(counit), std::move(antipode));
}

// ------------------------------------------------------------------------
// Fourier transform and convolution

SparseVec fourier(const FinGroup& g, const SparseVec& f) {
  SparseVec out;
  for (const auto& [idx, c] : f) {
    if (idx >= g.order()) fail(Err::InvalidArgument, "coefficient index out of range");
    out[idx] = c;
  }
  return out;
}

SparseVec fourier_inverse(const FinGroup& g, const SparseVec& v) {
  return fourier(g, v);
}

SparseVec convolve(const FinGroup& g, const SparseVec& f1, const SparseVec& f2) {
  SparseVec out;
  for (const auto& [a, va] : f1)
    for (const auto& [b, vb] : f2) {
      if (a >= g.order() || b >= g.order())
        fail(Err::InvalidArgument, "coefficient index out of range");
      vec_add(out, g.mul(a, b), va * vb);
    }
  return out;
}

}  // namespace qgeo
