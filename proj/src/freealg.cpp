// SPDX-License-Identifier: MIT
// Copyright (c) 2026 qgeo authors

#include "freealg.hpp"

#include <algorithm>
#include <sstream>

namespace qgeo {

std::string word_str(const Word& w, const std::vector<std::string>& names) {
  if (w.empty()) return "1";
  std::string s;
  for (size_t k = 0; k < w.size(); ++k) {
    if (k) s += ".";
    s += names.at(w[k]);
  }
  return s;
}

// ---------------------------------------------------------------- Element ---

Element::Element(const Scalar& c, Word w) { add(w, c); }

void Element::add(const Word& w, const Scalar& c) {
  if (c.is_zero()) return;
  auto it = terms_.find(w);
  if (it == terms_.end()) {
    terms_.emplace(w, c);
  } else {
    it->second = it->second + c;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

Element Element::operator+(const Element& o) const {
  Element r = *this;
  for (const auto& [w, c] : o.terms_) r.add(w, c);
  return r;
}

Element Element::operator-(const Element& o) const {
  Element r = *this;
  for (const auto& [w, c] : o.terms_) r.add(w, -c);
  return r;
}

Element Element::operator-() const {
  Element r;
  for (const auto& [w, c] : terms_) r.terms_.emplace(w, -c);
  return r;
}

Element Element::operator*(const Element& o) const {
  Element r;
  for (const auto& [u, cu] : terms_) {
    for (const auto& [v, cv] : o.terms_) {
      Word uv;
      uv.reserve(u.size() + v.size());
      uv.insert(uv.end(), u.begin(), u.end());
      uv.insert(uv.end(), v.begin(), v.end());
      r.add(uv, cu * cv);
    }
  }
  return r;
}

Element Element::scaled(const Scalar& c) const {
  Element r;
  if (c.is_zero()) return r;
  for (const auto& [w, cw] : terms_) r.add(w, cw * c);
  return r;
}

Scalar Element::coeff(const Word& w, const ParamSetPtr& ps) const {
  auto it = terms_.find(w);
  return it == terms_.end() ? Scalar::zero(ps) : it->second;
}

Element Element::substituted(const std::map<std::string, Scalar>& bindings) const {
  Element r;
  for (const auto& [w, c] : terms_) r.add(w, c.substitute(bindings));
  return r;
}

Element Element::limited(const std::string& name, const Rat& value) const {
  Element r;
  for (const auto& [w, c] : terms_) r.add(w, c.limit_at(name, value));
  return r;
}

// ----------------------------------------------------------- Presentation ---

Presentation::Presentation(std::string name, ParamSetPtr params,
                           std::vector<std::string> gen_names,
                           std::vector<uint32_t> weights, uint64_t step_budget)
    : name_(std::move(name)),
      params_(std::move(params)),
      gen_names_(std::move(gen_names)),
      weights_(std::move(weights)),
      budget_(step_budget) {
  if (!params_) fail(Err::InvalidArgument, "presentation requires a parameter set");
  for (size_t a = 0; a < gen_names_.size(); ++a) {
    if (gen_names_[a].empty())
      fail(Err::InvalidArgument, "empty generator name");
    for (size_t b = a + 1; b < gen_names_.size(); ++b)
      if (gen_names_[a] == gen_names_[b])
        fail(Err::InvalidArgument, "duplicate generator '" + gen_names_[a] + "'");
  }
  if (weights_.empty()) {
    weights_.assign(gen_names_.size(), 1);
  } else if (weights_.size() != gen_names_.size()) {
    fail(Err::InvalidArgument, "generator weight list has wrong length");
  }
  for (uint32_t w : weights_)
    if (w == 0) fail(Err::InvalidArgument, "generator weights must be positive");
  rules_by_first_.resize(gen_names_.size());
}

std::optional<GenId> Presentation::gen_id(const std::string& name) const {
  for (size_t k = 0; k < gen_names_.size(); ++k)
    if (gen_names_[k] == name) return static_cast<GenId>(k);
  return std::nullopt;
}

uint64_t Presentation::word_weight(const Word& w) const {
  uint64_t s = 0;
  for (GenId g : w) s += weights_.at(g);
  return s;
}

bool Presentation::word_less(const Word& a, const Word& b) const {
  uint64_t wa = word_weight(a), wb = word_weight(b);
  if (wa != wb) return wa < wb;
  if (a.size() != b.size()) return a.size() < b.size();
  return a < b;  // equal length: lexicographic on generator indices
}

void Presentation::add_rule(Word lhs, Element rhs) {
  if (lhs.empty()) fail(Err::InvalidArgument, "rewrite rule with empty left side");
  for (GenId g : lhs)
    if (g < 0 || static_cast<size_t>(g) >= ngens())
      fail(Err::InvalidArgument, "rule left side uses unknown generator");
  for (const auto& [w, c] : rhs.terms()) {
    (void)c;
    for (GenId g : w)
      if (g < 0 || static_cast<size_t>(g) >= ngens())
        fail(Err::InvalidArgument, "rule right side uses unknown generator");
    if (!word_less(w, lhs))
      fail(Err::InvalidArgument,
           "rule does not decrease: " + word_str(lhs, gen_names_) + " -> ... " +
               word_str(w, gen_names_));
  }
  size_t idx = rules_.size();
  rules_by_first_[lhs[0]].push_back(idx);
  max_lhs_len_ = std::max(max_lhs_len_, lhs.size());
  rules_.push_back(RewriteRule{std::move(lhs), std::move(rhs)});
}

std::optional<std::pair<size_t, size_t>> Presentation::first_match(const Word& w) const {
  for (size_t pos = 0; pos < w.size(); ++pos) {
    for (size_t idx : rules_by_first_[w[pos]]) {
      const Word& l = rules_[idx].lhs;
      if (pos + l.size() > w.size()) continue;
      if (std::equal(l.begin(), l.end(), w.begin() + pos)) return std::make_pair(pos, idx);
    }
  }
  return std::nullopt;
}

std::vector<std::pair<size_t, size_t>> Presentation::all_matches(const Word& w) const {
  std::vector<std::pair<size_t, size_t>> out;
  for (size_t pos = 0; pos < w.size(); ++pos) {
    for (size_t idx : rules_by_first_[w[pos]]) {
      const Word& l = rules_[idx].lhs;
      if (pos + l.size() > w.size()) continue;
      if (std::equal(l.begin(), l.end(), w.begin() + pos)) out.emplace_back(pos, idx);
    }
  }
  return out;
}

Element Presentation::rewrite_with(const Word& w, size_t pos, size_t rule_idx) const {
  const RewriteRule& r = rules_[rule_idx];
  Element out;
  for (const auto& [rw, rc] : r.rhs.terms()) {
    Word nw;
    nw.reserve(w.size() - r.lhs.size() + rw.size());
    nw.insert(nw.end(), w.begin(), w.begin() + pos);
    nw.insert(nw.end(), rw.begin(), rw.end());
    nw.insert(nw.end(), w.begin() + pos + r.lhs.size(), w.end());
    out.add(nw, rc);
  }
  return out;
}

Element Presentation::normal_form(const Element& e) const {
  uint64_t steps = 0;
  std::map<Word, Scalar> work(e.terms());
  Element out;
  while (!work.empty()) {
    auto it = work.begin();
    Word w = it->first;
    Scalar c = it->second;
    work.erase(it);
    if (c.is_zero()) continue;
    auto m = first_match(w);
    if (!m) {
      out.add(w, c);
      continue;
    }
    if (steps >= budget_)
      fail(Err::BudgetExceeded,
           "rewriting exceeded step budget of " + std::to_string(budget_));
    ++steps;
    Element repl = rewrite_with(w, m->first, m->second);
    for (const auto& [nw, nc] : repl.terms()) {
      Scalar add = nc * c;
      auto jt = work.find(nw);
      if (jt == work.end())
        work.emplace(nw, add);
      else {
        jt->second = jt->second + add;
        if (jt->second.is_zero()) work.erase(jt);
      }
    }
  }
  return out;
}

Element Presentation::normal_form_random(const Element& e, std::mt19937_64& rng) const {
  uint64_t steps = 0;
  std::map<Word, Scalar> work(e.terms());
  Element out;
  while (!work.empty()) {
    auto it = work.begin();
    std::advance(it, static_cast<long>(rng() % work.size()));
    Word w = it->first;
    Scalar c = it->second;
    work.erase(it);
    if (c.is_zero()) continue;
    auto ms = all_matches(w);
    if (ms.empty()) {
      out.add(w, c);
      continue;
    }
    if (steps >= budget_)
      fail(Err::BudgetExceeded,
           "rewriting exceeded step budget of " + std::to_string(budget_));
    ++steps;
    auto [pos, idx] = ms[rng() % ms.size()];
    Element repl = rewrite_with(w, pos, idx);
    for (const auto& [nw, nc] : repl.terms()) {
      Scalar add = nc * c;
      auto jt = work.find(nw);
      if (jt == work.end())
        work.emplace(nw, add);
      else {
        jt->second = jt->second + add;
        if (jt->second.is_zero()) work.erase(jt);
      }
    }
  }
  return out;
}

bool Presentation::is_normal_word(const Word& w) const { return !first_match(w).has_value(); }

bool Presentation::is_normal(const Element& e) const {
  for (const auto& [w, c] : e.terms()) {
    (void)c;
    if (!is_normal_word(w)) return false;
  }
  return true;
}

Element Presentation::mul_nf(const Element& a, const Element& b) const {
  return normal_form(a * b);
}

Element Presentation::commutator(const Element& a, const Element& b) const {
  return normal_form(a * b - b * a);
}

std::vector<Word> Presentation::normal_words_up_to(size_t max_len) const {
  std::vector<Word> out;
  std::vector<Word> layer{Word{}};
  out.push_back(Word{});
  for (size_t len = 1; len <= max_len; ++len) {
    std::vector<Word> next;
    for (const Word& w : layer) {
      for (GenId g = 0; g < static_cast<GenId>(ngens()); ++g) {
        Word ext = w;
        ext.push_back(g);
        // w is already irreducible, so only matches ending at the new last
        // letter are possible: check every rule lhs as a suffix of ext.
        bool normal = true;
        for (const RewriteRule& r : rules_) {
          if (r.lhs.size() > ext.size()) continue;
          if (std::equal(r.lhs.begin(), r.lhs.end(), ext.end() - r.lhs.size())) {
            normal = false;
            break;
          }
        }
        if (normal) next.push_back(std::move(ext));
      }
    }
    out.insert(out.end(), next.begin(), next.end());
    layer = std::move(next);
    if (layer.empty()) break;
  }
  return out;
}

std::string format_linear(const std::vector<std::pair<std::string, Scalar>>& parts) {
  if (parts.empty()) return "0";
  std::string out;
  bool first = true;
  for (const auto& [ws, c] : parts) {
    auto atom = c.signed_atom();
    bool neg = false;
    std::string body;
    if (ws == "1") {
      if (atom) {
        neg = atom->first;
        body = atom->second;
      } else {
        body = "(" + c.str() + ")";
      }
    } else if (atom) {
      neg = atom->first;
      body = (atom->second == "1") ? ws : atom->second + "*" + ws;
    } else {
      body = "(" + c.str() + ")*" + ws;
    }
    if (first) {
      out = (neg ? "-" : "") + body;
      first = false;
    } else {
      out += (neg ? " - " : " + ") + body;
    }
  }
  return out;
}

std::string Presentation::element_str(const Element& e) const {
  std::vector<std::pair<Word, Scalar>> ts(e.terms().begin(), e.terms().end());
  std::sort(ts.begin(), ts.end(),
            [this](const auto& a, const auto& b) { return word_less(b.first, a.first); });
  std::vector<std::pair<std::string, Scalar>> parts;
  parts.reserve(ts.size());
  for (const auto& [w, c] : ts) parts.emplace_back(word_str(w, gen_names_), c);
  return format_linear(parts);
}

// ------------------------------------------------------------- confluence ---

std::vector<ConfluenceIssue> overlap_confluence(const Presentation& p, size_t max_degree) {
  std::vector<ConfluenceIssue> issues;
  const auto& rules = p.rules();
  auto record = [&](const Word& w, size_t a, size_t b, const Element& ea, const Element& eb) {
    Element residual = p.normal_form(ea - eb);
    if (!residual.is_zero()) issues.push_back({w, a, b, residual});
  };
  for (size_t a = 0; a < rules.size(); ++a) {
    const Word& la = rules[a].lhs;
    for (size_t b = 0; b < rules.size(); ++b) {
      const Word& lb = rules[b].lhs;
      // Proper overlaps: a suffix of la equals a prefix of lb.
      size_t kmax = std::min(la.size(), lb.size()) - 1;
      for (size_t k = 1; k <= kmax; ++k) {
        if (!std::equal(la.end() - k, la.end(), lb.begin())) continue;
        Word w(la);
        w.insert(w.end(), lb.begin() + k, lb.end());
        if (w.size() > max_degree) continue;
        Element via_a = rules[a].rhs * p.word(Word(lb.begin() + k, lb.end()));
        Element via_b = p.word(Word(la.begin(), la.end() - k)) * rules[b].rhs;
        record(w, a, b, via_a, via_b);
      }
      // Containments: lb occurs inside la (strictly smaller, or a distinct
      // rule with the same left side).
      if (lb.size() > la.size()) continue;
      if (lb.size() == la.size() && (a == b || la != lb)) continue;
      if (la.size() > max_degree) continue;
      for (size_t o = 0; o + lb.size() <= la.size(); ++o) {
        if (!std::equal(lb.begin(), lb.end(), la.begin() + o)) continue;
        Element via_a = rules[a].rhs;
        Element via_b = p.word(Word(la.begin(), la.begin() + o)) * rules[b].rhs *
                        p.word(Word(la.begin() + o + lb.size(), la.end()));
        record(la, a, b, via_a, via_b);
      }
    }
  }
  return issues;
}

// ----------------------------------------------------------- BraidingTable ---

BraidingTable BraidingTable::flip(size_t ngens, const ParamSetPtr& ps) {
  BraidingTable t;
  t.entry.resize(ngens);
  for (size_t g = 0; g < ngens; ++g) {
    t.entry[g].resize(ngens);
    for (size_t h = 0; h < ngens; ++h)
      t.entry[g][h] = {{static_cast<GenId>(h), static_cast<GenId>(g), Scalar::one(ps)}};
  }
  return t;
}

bool BraidingTable::is_flip() const {
  for (size_t g = 0; g < entry.size(); ++g) {
    if (entry[g].size() != entry.size()) return false;
    for (size_t h = 0; h < entry.size(); ++h) {
      const auto& terms = entry[g][h];
      if (terms.size() != 1) return false;
      const auto& [g2, h2, c] = terms[0];
      if (g2 != static_cast<GenId>(h) || h2 != static_cast<GenId>(g) || !c.is_one())
        return false;
    }
  }
  return true;
}

// ------------------------------------------------------------- TensorSpace ---

namespace {

Presentation build_tensor_pres(const Presentation& base, int factors,
                               const BraidingTable* braiding) {
  if (factors < 2) fail(Err::InvalidArgument, "tensor power needs at least 2 factors");
  if (braiding && braiding->ngens() != base.ngens())
    fail(Err::InvalidArgument, "braiding table size does not match generator count");
  size_t n = base.ngens();
  std::vector<std::string> names;
  std::vector<uint32_t> weights;
  names.reserve(n * factors);
  weights.reserve(n * factors);
  for (int k = 0; k < factors; ++k) {
    for (size_t g = 0; g < n; ++g) {
      names.push_back(k == 0 ? base.gen_name(static_cast<GenId>(g))
                             : base.gen_name(static_cast<GenId>(g)) + "@" +
                                   std::to_string(k + 1));
      weights.push_back(base.gen_weights()[g]);
    }
  }
  Presentation p(base.name() + "_T" + std::to_string(factors), base.params(),
                 std::move(names), std::move(weights), base.step_budget());
  auto lift_word = [&](const Word& w, int copy) {
    Word out;
    out.reserve(w.size());
    for (GenId g : w) out.push_back(g + copy * static_cast<GenId>(n));
    return out;
  };
  // One copy of the base relations per factor.
  for (int k = 0; k < factors; ++k) {
    for (const RewriteRule& r : base.rules()) {
      Element rhs;
      for (const auto& [w, c] : r.rhs.terms()) rhs.add(lift_word(w, k), c);
      p.add_rule(lift_word(r.lhs, k), std::move(rhs));
    }
  }
  // Cross rules: a copy-j generator moving left past a copy-i generator
  // (i < j) is replaced through the braiding (plain flip when absent).
  for (int i = 0; i < factors; ++i) {
    for (int j = i + 1; j < factors; ++j) {
      for (size_t g = 0; g < n; ++g) {
        for (size_t h = 0; h < n; ++h) {
          Word lhs{static_cast<GenId>(g + j * n), static_cast<GenId>(h + i * n)};
          Element rhs;
          if (braiding) {
            for (const auto& [g2, h2, c] : braiding->entry[g][h])
              rhs.add(Word{static_cast<GenId>(g2 + i * static_cast<int>(n)),
                           static_cast<GenId>(h2 + j * static_cast<int>(n))},
                      c);
          } else {
            rhs.add(Word{static_cast<GenId>(h + i * n), static_cast<GenId>(g + j * n)},
                    Scalar::one(base.params()));
          }
          p.add_rule(std::move(lhs), std::move(rhs));
        }
      }
    }
  }
  return p;
}

}  // namespace

TensorSpace::TensorSpace(const Presentation& base, int factors,
                         const BraidingTable* braiding)
    : base_(&base),
      factors_(factors),
      braided_(braiding != nullptr && !braiding->is_flip()),
      pres_(build_tensor_pres(base, factors, braiding)) {}

GenId TensorSpace::lift(GenId base_gen, int copy) const {
  if (copy < 0 || copy >= factors_) fail(Err::InvalidArgument, "tensor factor out of range");
  if (base_gen < 0 || static_cast<size_t>(base_gen) >= base_->ngens())
    fail(Err::InvalidArgument, "unknown base generator");
  return base_gen + copy * static_cast<GenId>(base_->ngens());
}

Element TensorSpace::embed(const Element& e, int copy) const {
  Element out;
  for (const auto& [w, c] : e.terms()) {
    Word lw;
    lw.reserve(w.size());
    for (GenId g : w) lw.push_back(lift(g, copy));
    out.add(lw, c);
  }
  return out;
}

Element TensorSpace::tensor(const std::vector<Element>& parts) const {
  if (parts.size() > static_cast<size_t>(factors_))
    fail(Err::InvalidArgument, "too many tensor factors");
  Element acc = pres_.unit();
  for (size_t k = 0; k < parts.size(); ++k) acc = acc * embed(parts[k], static_cast<int>(k));
  return pres_.normal_form(acc);
}

Element TensorSpace::embed_from(const TensorSpace& src, const Element& e, int offset) const {
  if (src.base_->ngens() != base_->ngens())
    fail(Err::InvalidArgument, "tensor spaces have different base algebras");
  if (offset < 0 || offset + src.factors_ > factors_)
    fail(Err::InvalidArgument, "tensor embedding out of range");
  Element out;
  for (const auto& [w, c] : e.terms()) {
    Word lw;
    lw.reserve(w.size());
    for (GenId g : w) lw.push_back(lift(src.base_gen(g), src.copy_of(g) + offset));
    out.add(lw, c);
  }
  return out;
}

std::vector<Word> TensorSpace::split(const Word& w) const {
  std::vector<Word> parts(factors_);
  int cur = 0;
  for (GenId g : w) {
    int cp = copy_of(g);
    if (cp < cur)
      fail(Err::Internal, "tensor word is not sorted by factor: " +
                              word_str(w, pres_.gen_names()));
    cur = cp;
    parts[cp].push_back(base_gen(g));
  }
  return parts;
}

std::string TensorSpace::str(const Element& e) const {
  std::vector<std::pair<Word, Scalar>> ts(e.terms().begin(), e.terms().end());
  std::sort(ts.begin(), ts.end(), [this](const auto& a, const auto& b) {
    return pres_.word_less(b.first, a.first);
  });
  std::vector<std::pair<std::string, Scalar>> parts;
  parts.reserve(ts.size());
  for (const auto& [w, c] : ts) {
    std::vector<Word> fs = split(w);
    std::string s;
    for (int k = 0; k < factors_; ++k) {
      if (k) s += "|";
      s += word_str(fs[k], base_->gen_names());
    }
    parts.emplace_back(std::move(s), c);
  }
  return format_linear(parts);
}

}  // namespace qgeo
