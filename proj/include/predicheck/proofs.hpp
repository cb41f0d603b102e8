#pragma once

#include <memory>
#include <string>
#include <vector>

#include "predicheck/formulas.hpp"

namespace predicheck::hao {

// Which classical/choice principles the checker accepts. The plain theory
// has every flag off; lem/ac/ac_bang/irc_nn correspond to the usual axiom
// and rule extensions. irc_all lifts the N,N restriction of the internal
// rule of unique choice to all finite types (off by default).
struct AxiomProfile {
  bool lem = false;
  bool ac = false;
  bool ac_bang = false;
  bool irc_nn = false;
  bool irc_all = false;
};

// Natural-deduction proof trees. Eliminations synthesize the formula of
// their principal premise, introductions check against the goal; (ann F p)
// bridges the two directions when an introduction sits in elim position.
struct Proof;
using ProofPtr = std::shared_ptr<const Proof>;

struct Proof {
  enum class Kind {
    Hyp,      // (hyp l)
    Cite,     // (cite name)            earlier lemma in the same theory
    AndI,     // (and-i p q)
    AndE1,    // (and-e1 p)
    AndE2,    // (and-e2 p)
    OrI1,     // (or-i1 p)
    OrI2,     // (or-i2 p)
    OrE,      // (or-e p (l1 p1) (l2 p2))
    ImpI,     // (imp-i l p)
    ImpE,     // (imp-e p q)
    ForallI,  // (forall-i x p)
    ForallE,  // (forall-e p t)
    ExistsI,  // (exists-i t p)
    ExistsE,  // (exists-e p (y l) q)
    FalseE,   // (false-e p)
    Refl,     // (refl t)               goal sides def-equal to t
    EqSubst,  // (subst ((x T) M) eq base)
    Axiom,    // (axiom name inst...)
    Induction,// (ind ((x) M) base ((n ih) step))
    Lem,      // (lem F)
    Irc,      // (irc (x T) (y T) F sub)
    Ann       // (ann F p)
  } kind;

  std::string label;   // Hyp label / ImpI / OrE first branch / ExistsE branch
  std::string label2;  // OrE second branch / Induction ih
  std::string name;    // Cite / Axiom name / eigenvariable / motive var / Irc x
  std::string name2;   // ExistsE eigenvariable / Induction step var / Irc y / Axiom y
  std::string name3;   // Axiom ac/ac! function name
  TypePtr sort, sort2, sort3;
  FormulaPtr phi;      // motive / Lem / Irc / Axiom scheme / Ann formula
  TermPtr witness;     // Refl / ForallE / ExistsI
  ProofPtr p, q, r;    // r: second OrE branch

  explicit Proof(Kind k) : kind(k) {}
};

inline ProofPtr pmk(Proof&& p) { return std::make_shared<Proof>(std::move(p)); }

inline ProofPtr hyp(std::string label) {
  Proof p(Proof::Kind::Hyp);
  p.label = std::move(label);
  return pmk(std::move(p));
}

inline ProofPtr cite(std::string name) {
  Proof p(Proof::Kind::Cite);
  p.name = std::move(name);
  return pmk(std::move(p));
}

inline ProofPtr and_i(ProofPtr a, ProofPtr b) {
  Proof p(Proof::Kind::AndI);
  p.p = std::move(a);
  p.q = std::move(b);
  return pmk(std::move(p));
}

inline ProofPtr and_e1(ProofPtr a) {
  Proof p(Proof::Kind::AndE1);
  p.p = std::move(a);
  return pmk(std::move(p));
}

inline ProofPtr and_e2(ProofPtr a) {
  Proof p(Proof::Kind::AndE2);
  p.p = std::move(a);
  return pmk(std::move(p));
}

inline ProofPtr or_i1(ProofPtr a) {
  Proof p(Proof::Kind::OrI1);
  p.p = std::move(a);
  return pmk(std::move(p));
}

inline ProofPtr or_i2(ProofPtr a) {
  Proof p(Proof::Kind::OrI2);
  p.p = std::move(a);
  return pmk(std::move(p));
}

inline ProofPtr or_e(ProofPtr scrut, std::string l1, ProofPtr p1,
                     std::string l2, ProofPtr p2) {
  Proof p(Proof::Kind::OrE);
  p.p = std::move(scrut);
  p.label = std::move(l1);
  p.q = std::move(p1);
  p.label2 = std::move(l2);
  p.r = std::move(p2);
  return pmk(std::move(p));
}

inline ProofPtr imp_i(std::string label, ProofPtr body) {
  Proof p(Proof::Kind::ImpI);
  p.label = std::move(label);
  p.p = std::move(body);
  return pmk(std::move(p));
}

inline ProofPtr imp_e(ProofPtr f, ProofPtr a) {
  Proof p(Proof::Kind::ImpE);
  p.p = std::move(f);
  p.q = std::move(a);
  return pmk(std::move(p));
}

inline ProofPtr forall_i(std::string x, ProofPtr body) {
  Proof p(Proof::Kind::ForallI);
  p.name = std::move(x);
  p.p = std::move(body);
  return pmk(std::move(p));
}

inline ProofPtr forall_e(ProofPtr univ, TermPtr t) {
  Proof p(Proof::Kind::ForallE);
  p.p = std::move(univ);
  p.witness = std::move(t);
  return pmk(std::move(p));
}

inline ProofPtr exists_i(TermPtr t, ProofPtr body) {
  Proof p(Proof::Kind::ExistsI);
  p.witness = std::move(t);
  p.p = std::move(body);
  return pmk(std::move(p));
}

inline ProofPtr exists_e(ProofPtr scrut, std::string y, std::string label,
                         ProofPtr body) {
  Proof p(Proof::Kind::ExistsE);
  p.p = std::move(scrut);
  p.name2 = std::move(y);
  p.label = std::move(label);
  p.q = std::move(body);
  return pmk(std::move(p));
}

inline ProofPtr false_e(ProofPtr a) {
  Proof p(Proof::Kind::FalseE);
  p.p = std::move(a);
  return pmk(std::move(p));
}

inline ProofPtr refl(TermPtr t) {
  Proof p(Proof::Kind::Refl);
  p.witness = std::move(t);
  return pmk(std::move(p));
}

inline ProofPtr eq_subst(std::string x, TypePtr sort, FormulaPtr motive,
                         ProofPtr eqp, ProofPtr basep) {
  Proof p(Proof::Kind::EqSubst);
  p.name = std::move(x);
  p.sort = std::move(sort);
  p.phi = std::move(motive);
  p.p = std::move(eqp);
  p.q = std::move(basep);
  return pmk(std::move(p));
}

inline ProofPtr axiom(std::string name, std::vector<TypePtr> sorts = {}) {
  Proof p(Proof::Kind::Axiom);
  p.name = std::move(name);
  if (!sorts.empty()) p.sort = sorts[0];
  if (sorts.size() > 1) p.sort2 = sorts[1];
  if (sorts.size() > 2) p.sort3 = sorts[2];
  return pmk(std::move(p));
}

// Choice schemes carry binder names and the matrix formula.
inline ProofPtr axiom_choice(std::string which, std::string x, TypePtr xs,
                             std::string y, TypePtr ys, std::string f,
                             FormulaPtr phi) {
  Proof p(Proof::Kind::Axiom);
  p.name = std::move(which); // "ac" or "ac!"
  p.label = std::move(x);
  p.name2 = std::move(y);
  p.name3 = std::move(f);
  p.sort = std::move(xs);
  p.sort2 = std::move(ys);
  p.phi = std::move(phi);
  return pmk(std::move(p));
}

inline ProofPtr induction(std::string x, FormulaPtr motive, ProofPtr base,
                          std::string n, std::string ih, ProofPtr step) {
  Proof p(Proof::Kind::Induction);
  p.name = std::move(x);
  p.phi = std::move(motive);
  p.p = std::move(base);
  p.name2 = std::move(n);
  p.label2 = std::move(ih);
  p.q = std::move(step);
  return pmk(std::move(p));
}

inline ProofPtr lem(FormulaPtr phi) {
  Proof p(Proof::Kind::Lem);
  p.phi = std::move(phi);
  return pmk(std::move(p));
}

inline ProofPtr irc(std::string x, TypePtr xs, std::string y, TypePtr ys,
                    FormulaPtr phi, ProofPtr sub) {
  Proof p(Proof::Kind::Irc);
  p.name = std::move(x);
  p.sort = std::move(xs);
  p.name2 = std::move(y);
  p.sort2 = std::move(ys);
  p.phi = std::move(phi);
  p.p = std::move(sub);
  return pmk(std::move(p));
}

inline ProofPtr ann(FormulaPtr f, ProofPtr body) {
  Proof p(Proof::Kind::Ann);
  p.phi = std::move(f);
  p.p = std::move(body);
  return pmk(std::move(p));
}

} // namespace predicheck::hao
