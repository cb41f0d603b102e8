#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "predicheck/proofs.hpp"

namespace predicheck::hao {

// Labelled hypotheses in scope; inner labels shadow outer ones.
using Hypotheses = std::vector<std::pair<std::string, FormulaPtr>>;

// Theorems checked earlier in the same theory file, citable by name.
struct TheoryEnv {
  std::vector<std::pair<std::string, FormulaPtr>> lemmas;

  const FormulaPtr* lookup(const std::string& name) const {
    for (auto it = lemmas.rbegin(); it != lemmas.rend(); ++it)
      if (it->first == name) return &it->second;
    return nullptr;
  }
};

// Closed formulas of the built-in axiom schemes. Sort arguments ride on the
// proof node; choice schemes additionally carry binder names and the matrix.
inline Result<FormulaPtr> axiom_formula(const AxiomProfile& profile,
                                        const Proof& ax) {
  const TypePtr n = nat_type();
  auto v = [](const char* s, const TypePtr& t) { return var(s, t); };
  if (ax.name == "k-eq") {
    if (!ax.sort || !ax.sort2) return diag("k-eq expects two sorts", "rule:axiom");
    TermPtr k = comb_k(ax.sort, ax.sort2);
    return forall("x", ax.sort,
                  forall("y", ax.sort2,
                         eq(ax.sort, ap(k, v("x", ax.sort), v("y", ax.sort2)),
                            v("x", ax.sort))));
  }
  if (ax.name == "s-eq") {
    if (!ax.sort || !ax.sort2 || !ax.sort3)
      return diag("s-eq expects three sorts", "rule:axiom");
    TypePtr xt = arrow(ax.sort, arrow(ax.sort2, ax.sort3));
    TypePtr yt = arrow(ax.sort, ax.sort2);
    TermPtr s = comb_s(ax.sort, ax.sort2, ax.sort3);
    TermPtr x = var("x", xt), y = var("y", yt), z = var("z", ax.sort);
    return forall(
        "x", xt,
        forall("y", yt,
               forall("z", ax.sort,
                      eq(ax.sort3, ap(s, x, y, z), ap(ap(x, z), ap(y, z))))));
  }
  if (ax.name == "rec-zero" || ax.name == "rec-succ") {
    if (!ax.sort) return diag(ax.name + " expects one sort", "rule:axiom");
    TypePtr ft = arrow(n, arrow(ax.sort, ax.sort));
    TermPtr r = recursor(ax.sort);
    TermPtr a = var("a", ax.sort), f = var("f", ft), m = var("m", n);
    if (ax.name == "rec-zero")
      return forall("a", ax.sort,
                    forall("f", ft, eq(ax.sort, ap(r, a, f, zero()), a)));
    return forall(
        "a", ax.sort,
        forall("f", ft,
               forall("m", n,
                      eq(ax.sort, ap(r, a, f, ap(succ(), m)),
                         ap(ap(f, m), ap(r, a, f, m))))));
  }
  if (ax.name == "fst-eq" || ax.name == "snd-eq") {
    if (!ax.sort || !ax.sort2)
      return diag(ax.name + " expects two sorts", "rule:axiom");
    TermPtr pr = pairing(ax.sort, ax.sort2);
    TermPtr x = var("x", ax.sort), y = var("y", ax.sort2);
    bool first = ax.name == "fst-eq";
    TermPtr proj = first ? proj_fst(ax.sort, ax.sort2)
                         : proj_snd(ax.sort, ax.sort2);
    return forall("x", ax.sort,
                  forall("y", ax.sort2,
                         eq(first ? ax.sort : ax.sort2,
                            ap(proj, ap(pr, x, y)), first ? x : y)));
  }
  if (ax.name == "succ-nonzero") {
    TermPtr x = var("x", n);
    return forall("x", n, neg(eq(n, ap(succ(), x), zero())));
  }
  if (ax.name == "succ-inj") {
    TermPtr x = var("x", n), y = var("y", n);
    return forall(
        "x", n,
        forall("y", n, imp(eq(n, ap(succ(), x), ap(succ(), y)), eq(n, x, y))));
  }
  if (ax.name == "ac" || ax.name == "ac!") {
    bool bang = ax.name == "ac!";
    if (bang ? !profile.ac_bang : !profile.ac)
      return diag(std::string("axiom ") + ax.name +
                      " is not enabled by the current profile",
                  bang ? "profile:ac!" : "profile:ac");
    if (!ax.phi || ax.label.empty() || ax.name2.empty() || ax.name3.empty() ||
        !ax.sort || !ax.sort2)
      return diag(ax.name + " expects (x T) (y T) f and a formula",
                  "rule:axiom");
    if (occurs_free(ax.phi, ax.name3))
      return diag("choice function name " + ax.name3 +
                      " occurs free in the matrix formula",
                  "rule:axiom");
    const std::string& x = ax.label;
    const std::string& y = ax.name2;
    const std::string& f = ax.name3;
    FormulaPtr hyp_part =
        bang ? forall(x, ax.sort, expand_exists_unique(y, ax.sort2, ax.phi))
             : forall(x, ax.sort, exists(y, ax.sort2, ax.phi));
    TypePtr fty = arrow(ax.sort, ax.sort2);
    FormulaPtr concl = exists(
        f, fty,
        forall(x, ax.sort,
               subst(ax.phi, y, ap(var(f, fty), var(x, ax.sort)))));
    return imp(hyp_part, concl);
  }
  return diag("unknown axiom " + ax.name, "rule:axiom");
}

class ProofChecker {
public:
  ProofChecker(const AxiomProfile& profile, const TheoryEnv* env = nullptr,
               std::size_t fuel = kDefaultFuel)
      : profile_(profile), env_(env), fuel_(fuel) {}

  CheckResult check(const TypingContext& ctx, const Hypotheses& hyps,
                    const ProofPtr& pf, const FormulaPtr& goal) {
    switch (pf->kind) {
      case Proof::Kind::AndI: {
        if (goal->kind != Formula::Kind::And)
          return mismatch("and-i", goal);
        auto l = check(ctx, hyps, pf->p, goal->left);
        if (!l.ok()) return l;
        return check(ctx, hyps, pf->q, goal->right);
      }
      case Proof::Kind::OrI1:
      case Proof::Kind::OrI2: {
        if (goal->kind != Formula::Kind::Or)
          return mismatch(pf->kind == Proof::Kind::OrI1 ? "or-i1" : "or-i2",
                          goal);
        return check(ctx, hyps, pf->p,
                     pf->kind == Proof::Kind::OrI1 ? goal->left : goal->right);
      }
      case Proof::Kind::ImpI: {
        if (goal->kind != Formula::Kind::Imp) return mismatch("imp-i", goal);
        Hypotheses h = hyps;
        h.emplace_back(pf->label, goal->left);
        return check(ctx, h, pf->p, goal->right);
      }
      case Proof::Kind::ForallI: {
        if (goal->kind != Formula::Kind::Forall)
          return mismatch("forall-i", goal);
        const std::string& x = pf->name;
        if (auto bad = eigen_check(x, hyps, goal, goal->binder)) return *bad;
        FormulaPtr opened = x == goal->binder
                                ? goal->body
                                : subst(goal->body, goal->binder,
                                        var(x, goal->sort));
        return check(ctx.bind(x, goal->sort), hyps, pf->p, opened);
      }
      case Proof::Kind::ExistsI: {
        if (goal->kind != Formula::Kind::Exists)
          return mismatch("exists-i", goal);
        auto ty = infer_type(ctx, pf->witness);
        if (!ty.ok()) return ty.error();
        if (!type_equal(ty.value(), goal->sort))
          return diag("exists-i witness " + show_term(pf->witness) +
                          " has type " + show_type(ty.value()) +
                          ", binder expects " + show_type(goal->sort),
                      "rule:exists-i");
        return check(ctx, hyps, pf->p,
                     subst(goal->body, goal->binder, pf->witness));
      }
      case Proof::Kind::OrE: {
        auto scrut = infer(ctx, hyps, pf->p);
        if (!scrut.ok()) return scrut.error();
        const FormulaPtr& d = scrut.value();
        if (d->kind != Formula::Kind::Or)
          return diag("or-e scrutinee proves " + show_formula(d) +
                          ", not a disjunction",
                      "rule:or-e");
        Hypotheses h1 = hyps;
        h1.emplace_back(pf->label, d->left);
        auto c1 = check(ctx, h1, pf->q, goal);
        if (!c1.ok()) return c1;
        Hypotheses h2 = hyps;
        h2.emplace_back(pf->label2, d->right);
        return check(ctx, h2, pf->r, goal);
      }
      case Proof::Kind::ExistsE: {
        auto scrut = infer(ctx, hyps, pf->p);
        if (!scrut.ok()) return scrut.error();
        const FormulaPtr& ex = scrut.value();
        if (ex->kind != Formula::Kind::Exists)
          return diag("exists-e scrutinee proves " + show_formula(ex) +
                          ", not an existential",
                      "rule:exists-e");
        const std::string& y = pf->name2;
        if (auto bad = eigen_check(y, hyps, goal, "")) return *bad;
        if (y != ex->binder && occurs_free(ex, y))
          return diag("eigenvariable " + y + " occurs free in " +
                          show_formula(ex),
                      "rule:exists-e");
        FormulaPtr opened =
            y == ex->binder ? ex->body
                            : subst(ex->body, ex->binder, var(y, ex->sort));
        Hypotheses h = hyps;
        h.emplace_back(pf->label, opened);
        return check(ctx.bind(y, ex->sort), h, pf->q, goal);
      }
      case Proof::Kind::FalseE:
        return check(ctx, hyps, pf->p, falsum());
      case Proof::Kind::Refl: {
        if (goal->kind != Formula::Kind::Eq) return mismatch("refl", goal);
        auto ty = infer_type(ctx, pf->witness);
        if (!ty.ok()) return ty.error();
        if (!type_equal(ty.value(), goal->sort))
          return diag("refl witness has type " + show_type(ty.value()) +
                          ", equation is at sort " + show_type(goal->sort),
                      "rule:refl");
        for (const TermPtr& side : {goal->lhs, goal->rhs}) {
          auto same = def_equal(side, pf->witness, fuel_);
          if (!same.ok()) return same.error();
          if (!same.value())
            return diag("refl: " + show_term(side) +
                            " is not definitionally equal to " +
                            show_term(pf->witness),
                        "rule:refl");
        }
        return check_ok();
      }
      case Proof::Kind::Lem: {
        if (!profile_.lem)
          return diag("law of excluded middle is not enabled by the profile",
                      "profile:lem");
        auto wf = well_formed(ctx, pf->phi);
        if (!wf.ok()) return wf;
        if (!alpha_equal(goal, disj(pf->phi, neg(pf->phi))))
          return diag("lem instance proves " +
                          show_formula(disj(pf->phi, neg(pf->phi))) +
                          ", goal is " + show_formula(goal),
                      "rule:lem");
        return check_ok();
      }
      case Proof::Kind::Irc:
        return check_irc(ctx, *pf, goal);
      case Proof::Kind::Induction: {
        const std::string& x = pf->name;
        const FormulaPtr& motive = pf->phi;
        if (goal->kind != Formula::Kind::Forall ||
            goal->sort->kind != FiniteType::Kind::Nat)
          return mismatch("ind", goal);
        if (!alpha_equal(goal, forall(x, nat_type(), motive)))
          return diag("induction motive does not match the goal", "rule:ind");
        auto base =
            check(ctx, hyps, pf->p, subst(motive, x, zero()));
        if (!base.ok()) return base;
        const std::string& nvar = pf->name2;
        if (auto bad = eigen_check(nvar, hyps, goal, x)) return *bad;
        if (nvar != x && occurs_free(motive, nvar))
          return diag("step variable " + nvar + " occurs free in the motive",
                      "rule:ind");
        TermPtr nv = var(nvar, nat_type());
        Hypotheses h = hyps;
        h.emplace_back(pf->label2, subst(motive, x, nv));
        return check(ctx.bind(nvar, nat_type()), h, pf->q,
                     subst(motive, x, ap(succ(), nv)));
      }
      default: {
        auto got = infer(ctx, hyps, pf);
        if (!got.ok()) return got.error();
        if (!alpha_equal(got.value(), goal))
          return diag("proof establishes " + show_formula(got.value()) +
                          ", goal is " + show_formula(goal),
                      "rule:mismatch");
        return check_ok();
      }
    }
  }

  Result<FormulaPtr> infer(const TypingContext& ctx, const Hypotheses& hyps,
                           const ProofPtr& pf) {
    switch (pf->kind) {
      case Proof::Kind::Hyp: {
        for (auto it = hyps.rbegin(); it != hyps.rend(); ++it)
          if (it->first == pf->label) return it->second;
        if (inside_irc_)
          return diag("hypothesis label " + pf->label +
                          " is not in scope: irc subproofs check in an empty "
                          "hypothesis context",
                      "rule:irc");
        return diag("unbound hypothesis label " + pf->label, "rule:hyp");
      }
      case Proof::Kind::Cite: {
        if (env_) {
          if (const FormulaPtr* f = env_->lookup(pf->name)) return *f;
        }
        return diag("unknown lemma " + pf->name, "rule:cite");
      }
      case Proof::Kind::AndE1:
      case Proof::Kind::AndE2: {
        auto got = infer(ctx, hyps, pf->p);
        if (!got.ok()) return got;
        const FormulaPtr& f = got.value();
        if (f->kind != Formula::Kind::And)
          return diag("and-e premise proves " + show_formula(f) +
                          ", not a conjunction",
                      "rule:and-e");
        return pf->kind == Proof::Kind::AndE1 ? f->left : f->right;
      }
      case Proof::Kind::ImpE: {
        auto got = infer(ctx, hyps, pf->p);
        if (!got.ok()) return got;
        const FormulaPtr& f = got.value();
        if (f->kind != Formula::Kind::Imp)
          return diag("imp-e premise proves " + show_formula(f) +
                          ", not an implication",
                      "rule:imp-e");
        auto arg = check(ctx, hyps, pf->q, f->left);
        if (!arg.ok()) return arg.error();
        return f->right;
      }
      case Proof::Kind::ForallE: {
        auto got = infer(ctx, hyps, pf->p);
        if (!got.ok()) return got;
        const FormulaPtr& f = got.value();
        if (f->kind != Formula::Kind::Forall)
          return diag("forall-e premise proves " + show_formula(f) +
                          ", not universal",
                      "rule:forall-e");
        auto ty = infer_type(ctx, pf->witness);
        if (!ty.ok()) return ty.error();
        if (!type_equal(ty.value(), f->sort))
          return diag("forall-e instance " + show_term(pf->witness) +
                          " has type " + show_type(ty.value()) +
                          ", binder expects " + show_type(f->sort),
                      "rule:forall-e");
        return subst(f->body, f->binder, pf->witness);
      }
      case Proof::Kind::Refl: {
        auto ty = infer_type(ctx, pf->witness);
        if (!ty.ok()) return ty.error();
        return eq(ty.value(), pf->witness, pf->witness);
      }
      case Proof::Kind::EqSubst: {
        auto eqf = infer(ctx, hyps, pf->p);
        if (!eqf.ok()) return eqf;
        const FormulaPtr& e = eqf.value();
        if (e->kind != Formula::Kind::Eq)
          return diag("subst premise proves " + show_formula(e) +
                          ", not an equation",
                      "rule:subst");
        if (!type_equal(e->sort, pf->sort))
          return diag("subst motive variable is at sort " +
                          show_type(pf->sort) + ", equation at " +
                          show_type(e->sort),
                      "rule:subst");
        auto base =
            check(ctx, hyps, pf->q, subst(pf->phi, pf->name, e->lhs));
        if (!base.ok()) return base.error();
        return subst(pf->phi, pf->name, e->rhs);
      }
      case Proof::Kind::Axiom:
        return axiom_formula(profile_, *pf);
      case Proof::Kind::Lem: {
        if (!profile_.lem)
          return diag("law of excluded middle is not enabled by the profile",
                      "profile:lem");
        auto wf = well_formed(ctx, pf->phi);
        if (!wf.ok()) return wf.error();
        return disj(pf->phi, neg(pf->phi));
      }
      case Proof::Kind::Ann: {
        auto wf = well_formed(ctx, pf->phi);
        if (!wf.ok()) return wf.error();
        auto c = check(ctx, hyps, pf->p, pf->phi);
        if (!c.ok()) return c.error();
        return pf->phi;
      }
      default:
        return diag(
            "this proof form does not synthesize a formula; wrap it in "
            "(ann F ...)",
            "rule:no-synth");
    }
  }

private:
  CheckResult check_irc(const TypingContext& ctx, const Proof& pf,
                        const FormulaPtr& goal) {
    if (!profile_.irc_nn && !profile_.irc_all)
      return diag("internal rule of unique choice is not enabled by the "
                  "profile",
                  "profile:irc!");
    bool both_nat = pf.sort->kind == FiniteType::Kind::Nat &&
                    pf.sort2->kind == FiniteType::Kind::Nat;
    if (!both_nat && !profile_.irc_all)
      return diag("irc is restricted to the number-theoretic instance; "
                  "sorts here are " +
                      show_type(pf.sort) + ", " + show_type(pf.sort2),
                  "profile:irc!");
    // Shape of the conclusion: exists f : s->t, forall x : s, phi[y := f x].
    if (goal->kind != Formula::Kind::Exists ||
        goal->sort->kind != FiniteType::Kind::Arrow ||
        !type_equal(goal->sort->left, pf.sort) ||
        !type_equal(goal->sort->right, pf.sort2) ||
        goal->body->kind != Formula::Kind::Forall ||
        !type_equal(goal->body->sort, pf.sort))
      return diag("irc conclusion must have the shape (exists (f (-> s t)) "
                  "(forall (x s) ...)); goal is " +
                      show_formula(goal),
                  "rule:irc");
    const std::string& f = goal->binder;
    if (occurs_free(pf.phi, f))
      return diag("choice function name " + f + " occurs free in the matrix",
                  "rule:irc");
    const std::string& gx = goal->body->binder;
    FormulaPtr expected_body = subst(
        subst(pf.phi, pf.name, var(gx, pf.sort)), pf.name2,
        ap(var(f, goal->sort), var(gx, pf.sort)));
    if (!alpha_equal(goal->body->body, expected_body))
      return diag("irc conclusion body does not match the matrix formula",
                  "rule:irc");
    FormulaPtr subgoal =
        forall(pf.name, pf.sort,
               expand_exists_unique(pf.name2, pf.sort2, pf.phi));
    bool saved = inside_irc_;
    inside_irc_ = true;
    auto sub = check(ctx, Hypotheses{}, pf.p, subgoal);
    inside_irc_ = saved;
    if (!sub.ok()) {
      Diag d = sub.error();
      d.message = "inside irc subderivation: " + d.message;
      return d;
    }
    return check_ok();
  }

  std::optional<Diag> eigen_check(const std::string& x, const Hypotheses& hyps,
                                  const FormulaPtr& goal,
                                  const std::string& binder) {
    for (const auto& [label, f] : hyps) {
      if (occurs_free(f, x))
        return diag("eigenvariable " + x + " occurs free in hypothesis " +
                        label,
                    "rule:eigen");
    }
    if (x != binder && occurs_free(goal, x))
      return diag("eigenvariable " + x + " occurs free in the goal",
                  "rule:eigen");
    return std::nullopt;
  }

  static Diag mismatch(const std::string& rule, const FormulaPtr& goal) {
    return diag(rule + " does not apply to goal " + show_formula(goal),
                "rule:" + rule);
  }

  const AxiomProfile& profile_;
  const TheoryEnv* env_;
  std::size_t fuel_;
  bool inside_irc_ = false;
};

// Main entry point: is pf a derivation of goal from hyps under the profile?
inline CheckResult check_proof(const AxiomProfile& profile,
                               const Hypotheses& hyps, const ProofPtr& pf,
                               const FormulaPtr& goal,
                               const TheoryEnv* env = nullptr,
                               std::size_t fuel = kDefaultFuel) {
  TypingContext ctx;
  ProofChecker checker(profile, env, fuel);
  return checker.check(ctx, hyps, pf, goal);
}

} // namespace predicheck::hao
