#include "icherednik/rep.hpp"

#include <algorithm>

#include "icherednik/polyring.hpp"

namespace icherednik {

namespace {

// Terms containing a raising letter act by zero on a highest-weight vector.
// The remaining terms of a weight-zero element are products of diagonal letters.
template <class Visit>
void for_each_diagonal_term(const NCElement& z, const HcAlgebra& alg, Visit visit) {
  const GlAlphabet& al = alg.alphabet();
  const int n = alg.rank();
  for (const auto& [w, c] : z.terms()) {
    std::vector<int> wt(n, 0);
    bool raising = false;
    for (Letter l : w) {
      const Generator& g = al.at(l);
      if (g.kind != GenKind::E) throw NotWeightZero("hc_evaluate: element is not in U(g)");
      raising = raising || g.is_raising();
      ++wt[g.i - 1];
      --wt[g.j - 1];
    }
    if (std::any_of(wt.begin(), wt.end(), [](int x) { return x != 0; }))
      throw NotWeightZero("hc_evaluate: element does not have weight zero");
    if (raising) continue;
    visit(w, c);
  }
}

}  // namespace

Scalar hc_evaluate(const NCElement& z, const Weight& lambda, const HcAlgebra& alg) {
  if (static_cast<int>(lambda.size()) != alg.rank()) throw std::invalid_argument("weight has the wrong length");
  Scalar out = alg.field().zero();
  for_each_diagonal_term(z, alg, [&](const Word& w, const Scalar& c) {
    Scalar term = c;
    for (Letter l : w) term *= lambda[alg.alphabet().at(l).i - 1];
    out += term;
  });
  return out;
}

Polynomial hc_polynomial(const NCElement& z, const HcAlgebra& alg) {
  const int n = alg.rank();
  const VarSpace space = VarSpace::eigen(n);
  Polynomial out(space, alg.field());
  for_each_diagonal_term(z, alg, [&](const Word& w, const Scalar& c) {
    Exponents e(n, 0);
    for (Letter l : w) ++e[alg.alphabet().at(l).i - 1];
    out.add_term(e, c);
  });
  return out;
}

Weight rho(int n, Field field) {
  Weight r;
  for (int i = 1; i <= n; ++i) r.push_back(field.make(n - 2 * i + 1, 2));
  return r;
}

Scalar hc_evaluate_shifted(const NCElement& z, const Weight& lambda, const HcAlgebra& alg) {
  const Weight r = rho(alg.rank(), alg.field());
  if (lambda.size() != r.size()) throw std::invalid_argument("weight has the wrong length");
  Weight shifted;
  for (std::size_t i = 0; i < r.size(); ++i) shifted.push_back(lambda[i] - r[i]);
  return hc_evaluate(z, shifted, alg);
}

std::optional<Scalar> VermaVector::scalar_multiple() const {
  if (coeffs.is_zero()) return coeffs.field().zero();
  if (coeffs.size() == 1 && coeffs.terms().begin()->first.empty()) return coeffs.terms().begin()->second;
  return std::nullopt;
}

VermaModule::VermaModule(const HcAlgebra& alg, Weight lambda, int depth)
    : alg_(alg), lambda_(std::move(lambda)), depth_(depth) {
  if (static_cast<int>(lambda_.size()) != alg.rank()) throw std::invalid_argument("weight has the wrong length");
  if (depth < 0) throw std::invalid_argument("Verma depth must be >= 0");
  for (const auto& s : lambda_)
    if (!(s.field() == alg.field())) throw DomainMismatch("weight has the wrong characteristic");
}

bool VermaModule::is_free_letter(Letter g) const {
  const Generator& gen = alg_.alphabet().at(g);
  return gen.is_lowering() || gen.kind == GenKind::Y;
}

VermaVector VermaModule::highest() const { return {alg_.one()}; }

VermaVector VermaModule::basis_vector(const Word& w) const {
  if (!is_nondecreasing(w)) throw std::invalid_argument("Verma basis word must be normal");
  for (Letter l : w)
    if (!is_free_letter(l)) throw std::invalid_argument("Verma basis word may only use lowering E and Y letters");
  if (static_cast<int>(w.size()) > depth_) throw TruncationOverflow("basis word longer than the Verma depth");
  return {NCElement::monomial(w, alg_.field().one())};
}

void VermaModule::check_depth(const NCElement& e) const {
  if (e.max_length().value_or(0) > depth_)
    throw TruncationOverflow("Verma action exceeds depth " + std::to_string(depth_));
}

const NCElement& VermaModule::act_on_word(Letter g, const Word& w) const {
  auto key = std::make_pair(g, w);
  auto it = memo_.find(key);
  if (it != memo_.end()) return it->second;

  const Field f = alg_.field();
  NCElement out(f);
  if (is_free_letter(g)) {
    // lowering E and Y span a subalgebra, so the product stays in the basis
    out = alg_.multiply(alg_.generator(g), NCElement::monomial(w, f.one()));
    check_depth(out);
  } else if (w.empty()) {
    const Generator& gen = alg_.alphabet().at(g);
    if (gen.is_diagonal()) out.add_term({}, lambda_[gen.i - 1]);
  } else {
    // g w1 rest = w1 (g rest) + [g, w1] rest
    const Letter w1 = w.front();
    const Word rest(w.begin() + 1, w.end());
    const NCElement inner = act_on_word(g, rest);
    out = alg_.multiply(alg_.generator(w1), inner);
    check_depth(out);
    out += act_element_on_word(alg_.commutator(alg_.generator(g), alg_.generator(w1)), rest);
  }
  return memo_.emplace(std::move(key), std::move(out)).first->second;
}

NCElement VermaModule::act_element_on_word(const NCElement& a, const Word& w) const {
  const Field f = alg_.field();
  NCElement out(f);
  for (const auto& [u, c] : a.terms()) {
    NCElement vec = NCElement::monomial(w, f.one());
    for (auto it = u.rbegin(); it != u.rend() && !vec.is_zero(); ++it) {
      NCElement next(f);
      for (const auto& [v, cv] : vec.terms()) next.add_scaled(act_on_word(*it, v), cv);
      vec = std::move(next);
    }
    out.add_scaled(vec, c);
  }
  return out;
}

VermaVector VermaModule::act(const NCElement& a, const VermaVector& v) const {
  if (!(a.field() == alg_.field())) throw DomainMismatch("verma_act: characteristic mismatch");
  NCElement out(alg_.field());
  for (const auto& [w, c] : v.coeffs.terms()) out.add_scaled(act_element_on_word(a, w), c);
  return {std::move(out)};
}

VermaVector VermaModule::act_letter(Letter g, const VermaVector& v) const {
  return act(alg_.generator(g), v);
}

VermaVector verma_act(const NCElement& a, const VermaVector& v, const VermaModule& m) { return m.act(a, v); }

CentralCharacter central_character(const Weight& lambda, const HcAlgebra& alg, const CentralSet& cset, int depth) {
  const VermaModule m(alg, lambda, depth);
  CentralCharacter out;
  for (std::size_t i = 0; i < cset.eta.size(); ++i) {
    const VermaVector v = m.act(cset.eta[i], m.highest());
    auto s = v.scalar_multiple();
    if (!s) throw NonScalarAction("eta_" + std::to_string(i + 1) + " does not act on v_lambda by a scalar");
    out.values.push_back(*s);
    out.hc_values.push_back(-hc_evaluate(cset.c[i], lambda, alg));
  }
  return out;
}

bool same_block(const Weight& lambda, const Weight& mu, const HcAlgebra& alg, const CentralSet& cset) {
  return central_character(lambda, alg, cset) == central_character(mu, alg, cset);
}

std::vector<Block> block_partition(const std::vector<Weight>& sample, const HcAlgebra& alg, const CentralSet& cset) {
  std::vector<Block> blocks;
  for (const auto& w : sample) {
    const CentralCharacter ch = central_character(w, alg, cset);
    auto it = std::find_if(blocks.begin(), blocks.end(), [&](const Block& b) { return b.character == ch.values; });
    if (it == blocks.end()) blocks.push_back({ch.values, {w}});
    else it->weights.push_back(w);
  }
  return blocks;
}

FinitenessReport finiteness_probe(const HcAlgebra& alg, const CentralSet& cset, const std::vector<Weight>& sample) {
  FinitenessReport rep;
  const int m = alg.spec().deformation_degree();
  if (alg.spec().is_undeformed() || m < 1) {
    rep.skipped = true;
    return rep;
  }
  rep.bezout_bound = 1;
  for (const auto& c : cset.c) {
    const int d = std::max(0, hc_polynomial(c, alg).total_degree());
    rep.character_degrees.push_back(d);
    rep.bezout_bound *= d;
  }
  std::vector<Weight> distinct;
  for (const auto& w : sample)
    if (std::find(distinct.begin(), distinct.end(), w) == distinct.end()) distinct.push_back(w);
  for (const auto& b : block_partition(distinct, alg, cset)) {
    rep.fiber_sizes.push_back(b.weights.size());
    rep.max_fiber = std::max(rep.max_fiber, b.weights.size());
  }
  rep.identity_witness = lambda_identity_check(alg.rank(), m, alg.field());
  return rep;
}

}  // namespace icherednik
