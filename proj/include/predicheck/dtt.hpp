#pragma once

#include <memory>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "predicheck/diag.hpp"

namespace predicheck::dtt {

// Four-sorted classification: small propositions embed into both
// propositions and sets, and everything embeds into collections.
enum class Sort { PropS, Prop, Set, Coll };

inline bool sort_leq(Sort a, Sort b) {
  if (a == b) return true;
  if (a == Sort::PropS) return true;
  if (b == Sort::Coll) return true;
  return false;
}

inline bool is_prop(Sort s) { return s == Sort::PropS || s == Sort::Prop; }

inline std::string show_sort(Sort s) {
  switch (s) {
    case Sort::PropS: return "PropS";
    case Sort::Prop: return "Prop";
    case Sort::Set: return "Set";
    case Sort::Coll: return "Coll";
  }
  return "?";
}

// MLTT collapses the lattice (propositions as types); MTT keeps the four
// sorts with proposition eliminations restricted to propositions; EMTT adds
// the power collection of the singleton and checks formation only.
enum class SortMode { MLTT, MTT, EMTT };

inline std::string show_mode(SortMode m) {
  switch (m) {
    case SortMode::MLTT: return "mltt";
    case SortMode::MTT: return "mtt";
    case SortMode::EMTT: return "emtt";
  }
  return "?";
}

// One syntax for types and terms; the judgements keep them apart. The *P
// constructors are the primitive proposition formers, distinct from their
// set-level counterparts in MTT/EMTT mode and desugared away in MLTT mode.
struct DttExpr;
using DttPtr = std::shared_ptr<const DttExpr>;

struct DttExpr {
  enum class Kind {
    // types
    Nat, Empty, Unit, Pi, Sigma, Sum, Id,
    FalseP, ExistsP, OrP, ForallP, ImpP, AndP, EqP,
    Trunc, PowUnit,
    NatCase,   // large case on a number: (natcase t A B); MLTT only
    FamApp,    // applied type family: (at R a b ...)
    // terms
    Var, Lambda, App, Pair, Fst, Snd, Inl, Inr, Case,
    Zero, Succ, NatRec, Refl, IdPeel,
    ExIntro, ExElim, TruncIntro, TruncElim,
    PropLam,   // small propositional function (plam (x A) phi)
    TrueCanon, // canonical element of Unit; canonical proof in EMTT
    Absurd,    // empty/absurdity elimination
    Ann        // (the A e)
  } kind;

  std::string name;   // binder or variable
  std::string name2;  // second binder (case right / natrec step n / ex-e h)
  std::string name3;  // natrec step ih
  DttPtr a, b, c, d;
  std::vector<DttPtr> args; // FamApp arguments

  explicit DttExpr(Kind k) : kind(k) {}
};

namespace detail {
inline DttPtr node(DttExpr&& e) {
  return std::make_shared<DttExpr>(std::move(e));
}
inline DttPtr atom(DttExpr::Kind k) { return node(DttExpr(k)); }
} // namespace detail

inline DttPtr nat() {
  static const DttPtr e = detail::atom(DttExpr::Kind::Nat);
  return e;
}
inline DttPtr empty() {
  static const DttPtr e = detail::atom(DttExpr::Kind::Empty);
  return e;
}
inline DttPtr unit() {
  static const DttPtr e = detail::atom(DttExpr::Kind::Unit);
  return e;
}
inline DttPtr falsep() {
  static const DttPtr e = detail::atom(DttExpr::Kind::FalseP);
  return e;
}
inline DttPtr pow_unit() {
  static const DttPtr e = detail::atom(DttExpr::Kind::PowUnit);
  return e;
}
inline DttPtr zero() {
  static const DttPtr e = detail::atom(DttExpr::Kind::Zero);
  return e;
}
inline DttPtr refl() {
  static const DttPtr e = detail::atom(DttExpr::Kind::Refl);
  return e;
}
inline DttPtr true_canon() {
  static const DttPtr e = detail::atom(DttExpr::Kind::TrueCanon);
  return e;
}

inline DttPtr dvar(std::string x) {
  DttExpr e(DttExpr::Kind::Var);
  e.name = std::move(x);
  return detail::node(std::move(e));
}

namespace detail {
inline DttPtr binder2(DttExpr::Kind k, std::string x, DttPtr dom, DttPtr body) {
  DttExpr e(k);
  e.name = std::move(x);
  e.a = std::move(dom);
  e.b = std::move(body);
  return node(std::move(e));
}
inline DttPtr pair2(DttExpr::Kind k, DttPtr l, DttPtr r) {
  DttExpr e(k);
  e.a = std::move(l);
  e.b = std::move(r);
  return node(std::move(e));
}
inline DttPtr unary(DttExpr::Kind k, DttPtr x) {
  DttExpr e(k);
  e.a = std::move(x);
  return node(std::move(e));
}
} // namespace detail

inline DttPtr pi(std::string x, DttPtr A, DttPtr B) {
  return detail::binder2(DttExpr::Kind::Pi, std::move(x), std::move(A),
                         std::move(B));
}
inline DttPtr arrow(DttPtr A, DttPtr B) {
  return pi("_", std::move(A), std::move(B));
}
inline DttPtr sigma(std::string x, DttPtr A, DttPtr B) {
  return detail::binder2(DttExpr::Kind::Sigma, std::move(x), std::move(A),
                         std::move(B));
}
inline DttPtr times(DttPtr A, DttPtr B) {
  return sigma("_", std::move(A), std::move(B));
}
inline DttPtr sum(DttPtr A, DttPtr B) {
  return detail::pair2(DttExpr::Kind::Sum, std::move(A), std::move(B));
}
inline DttPtr existsp(std::string x, DttPtr A, DttPtr B) {
  return detail::binder2(DttExpr::Kind::ExistsP, std::move(x), std::move(A),
                         std::move(B));
}
inline DttPtr forallp(std::string x, DttPtr A, DttPtr B) {
  return detail::binder2(DttExpr::Kind::ForallP, std::move(x), std::move(A),
                         std::move(B));
}
inline DttPtr orp(DttPtr A, DttPtr B) {
  return detail::pair2(DttExpr::Kind::OrP, std::move(A), std::move(B));
}
inline DttPtr impp(DttPtr A, DttPtr B) {
  return detail::pair2(DttExpr::Kind::ImpP, std::move(A), std::move(B));
}
inline DttPtr andp(DttPtr A, DttPtr B) {
  return detail::pair2(DttExpr::Kind::AndP, std::move(A), std::move(B));
}
inline DttPtr id_type(DttPtr A, DttPtr l, DttPtr r) {
  DttExpr e(DttExpr::Kind::Id);
  e.a = std::move(A);
  e.b = std::move(l);
  e.c = std::move(r);
  return detail::node(std::move(e));
}
inline DttPtr eqp(DttPtr A, DttPtr l, DttPtr r) {
  DttExpr e(DttExpr::Kind::EqP);
  e.a = std::move(A);
  e.b = std::move(l);
  e.c = std::move(r);
  return detail::node(std::move(e));
}
inline DttPtr trunc(DttPtr A) {
  return detail::unary(DttExpr::Kind::Trunc, std::move(A));
}
inline DttPtr natcase(DttPtr scrut, DttPtr ifZero, DttPtr ifSucc) {
  DttExpr e(DttExpr::Kind::NatCase);
  e.a = std::move(scrut);
  e.b = std::move(ifZero);
  e.c = std::move(ifSucc);
  return detail::node(std::move(e));
}
inline DttPtr fam_app(DttPtr head, std::vector<DttPtr> args) {
  DttExpr e(DttExpr::Kind::FamApp);
  e.a = std::move(head);
  e.args = std::move(args);
  return detail::node(std::move(e));
}

inline DttPtr lam(std::string x, DttPtr body) {
  DttExpr e(DttExpr::Kind::Lambda);
  e.name = std::move(x);
  e.a = std::move(body);
  return detail::node(std::move(e));
}
inline DttPtr app(DttPtr f, DttPtr x) {
  return detail::pair2(DttExpr::Kind::App, std::move(f), std::move(x));
}
inline DttPtr app(DttPtr f, DttPtr x, DttPtr y) {
  return app(app(std::move(f), std::move(x)), std::move(y));
}
inline DttPtr dpair(DttPtr l, DttPtr r) {
  return detail::pair2(DttExpr::Kind::Pair, std::move(l), std::move(r));
}
inline DttPtr fst(DttPtr p) {
  return detail::unary(DttExpr::Kind::Fst, std::move(p));
}
inline DttPtr snd(DttPtr p) {
  return detail::unary(DttExpr::Kind::Snd, std::move(p));
}
inline DttPtr inl(DttPtr x) {
  return detail::unary(DttExpr::Kind::Inl, std::move(x));
}
inline DttPtr inr(DttPtr x) {
  return detail::unary(DttExpr::Kind::Inr, std::move(x));
}
inline DttPtr case_of(DttPtr scrut, std::string x, DttPtr l, std::string y,
                      DttPtr r) {
  DttExpr e(DttExpr::Kind::Case);
  e.a = std::move(scrut);
  e.name = std::move(x);
  e.b = std::move(l);
  e.name2 = std::move(y);
  e.c = std::move(r);
  return detail::node(std::move(e));
}
inline DttPtr succ_of(DttPtr t) {
  return detail::unary(DttExpr::Kind::Succ, std::move(t));
}
inline DttPtr numeral(unsigned long n) {
  DttPtr t = zero();
  for (unsigned long i = 0; i < n; i++) t = succ_of(t);
  return t;
}
inline DttPtr natrec(std::string x, DttPtr motive, DttPtr base, std::string n,
                     std::string ih, DttPtr step, DttPtr scrut) {
  DttExpr e(DttExpr::Kind::NatRec);
  e.name = std::move(x);
  e.a = std::move(motive);
  e.b = std::move(base);
  e.name2 = std::move(n);
  e.name3 = std::move(ih);
  e.c = std::move(step);
  e.d = std::move(scrut);
  return detail::node(std::move(e));
}
inline DttPtr idpeel(std::string x, DttPtr motive, DttPtr eqpf, DttPtr base) {
  DttExpr e(DttExpr::Kind::IdPeel);
  e.name = std::move(x);
  e.a = std::move(motive);
  e.b = std::move(eqpf);
  e.c = std::move(base);
  return detail::node(std::move(e));
}
inline DttPtr ex_intro(DttPtr w, DttPtr p) {
  return detail::pair2(DttExpr::Kind::ExIntro, std::move(w), std::move(p));
}
inline DttPtr ex_elim(DttPtr scrut, std::string x, std::string h, DttPtr body) {
  DttExpr e(DttExpr::Kind::ExElim);
  e.a = std::move(scrut);
  e.name = std::move(x);
  e.name2 = std::move(h);
  e.b = std::move(body);
  return detail::node(std::move(e));
}
inline DttPtr trunc_intro(DttPtr a) {
  return detail::unary(DttExpr::Kind::TruncIntro, std::move(a));
}
inline DttPtr trunc_elim(DttPtr scrut, std::string x, DttPtr body) {
  DttExpr e(DttExpr::Kind::TruncElim);
  e.a = std::move(scrut);
  e.name = std::move(x);
  e.b = std::move(body);
  return detail::node(std::move(e));
}
inline DttPtr prop_lam(std::string x, DttPtr dom, DttPtr body) {
  DttExpr e(DttExpr::Kind::PropLam);
  e.name = std::move(x);
  e.a = std::move(dom);
  e.b = std::move(body);
  return detail::node(std::move(e));
}
inline DttPtr absurd(DttPtr p) {
  return detail::unary(DttExpr::Kind::Absurd, std::move(p));
}
inline DttPtr ann(DttPtr e, DttPtr ty) {
  return detail::pair2(DttExpr::Kind::Ann, std::move(e), std::move(ty));
}

// ---- variables, substitution, alpha equivalence ----

namespace detail {

// Binder scopes per kind: which children see which bound names.
inline void free_vars_into(const DttPtr& e, std::vector<std::string>& out,
                           std::vector<std::string>& bound) {
  if (!e) return;
  auto isBound = [&](const std::string& n) {
    for (auto it = bound.rbegin(); it != bound.rend(); ++it)
      if (*it == n) return true;
    return false;
  };
  switch (e->kind) {
    case DttExpr::Kind::Var:
      if (!isBound(e->name)) {
        for (const auto& o : out)
          if (o == e->name) return;
        out.push_back(e->name);
      }
      return;
    case DttExpr::Kind::Pi:
    case DttExpr::Kind::Sigma:
    case DttExpr::Kind::ExistsP:
    case DttExpr::Kind::ForallP:
    case DttExpr::Kind::PropLam:
      free_vars_into(e->a, out, bound);
      bound.push_back(e->name);
      free_vars_into(e->b, out, bound);
      bound.pop_back();
      return;
    case DttExpr::Kind::Lambda:
      bound.push_back(e->name);
      free_vars_into(e->a, out, bound);
      bound.pop_back();
      return;
    case DttExpr::Kind::Case:
      free_vars_into(e->a, out, bound);
      bound.push_back(e->name);
      free_vars_into(e->b, out, bound);
      bound.pop_back();
      bound.push_back(e->name2);
      free_vars_into(e->c, out, bound);
      bound.pop_back();
      return;
    case DttExpr::Kind::NatRec:
      bound.push_back(e->name);
      free_vars_into(e->a, out, bound);
      bound.pop_back();
      free_vars_into(e->b, out, bound);
      bound.push_back(e->name2);
      bound.push_back(e->name3);
      free_vars_into(e->c, out, bound);
      bound.pop_back();
      bound.pop_back();
      free_vars_into(e->d, out, bound);
      return;
    case DttExpr::Kind::IdPeel:
      bound.push_back(e->name);
      free_vars_into(e->a, out, bound);
      bound.pop_back();
      free_vars_into(e->b, out, bound);
      free_vars_into(e->c, out, bound);
      return;
    case DttExpr::Kind::ExElim:
      free_vars_into(e->a, out, bound);
      bound.push_back(e->name);
      bound.push_back(e->name2);
      free_vars_into(e->b, out, bound);
      bound.pop_back();
      bound.pop_back();
      return;
    case DttExpr::Kind::TruncElim:
      free_vars_into(e->a, out, bound);
      bound.push_back(e->name);
      free_vars_into(e->b, out, bound);
      bound.pop_back();
      return;
    default:
      free_vars_into(e->a, out, bound);
      free_vars_into(e->b, out, bound);
      free_vars_into(e->c, out, bound);
      free_vars_into(e->d, out, bound);
      for (const auto& x : e->args) free_vars_into(x, out, bound);
      return;
  }
}

} // namespace detail

inline std::vector<std::string> free_vars(const DttPtr& e) {
  std::vector<std::string> out, bound;
  detail::free_vars_into(e, out, bound);
  return out;
}

inline bool occurs_free(const DttPtr& e, const std::string& x) {
  for (const auto& v : free_vars(e))
    if (v == x) return true;
  return false;
}

inline std::string fresh_dtt_name(std::string base,
                                  const std::vector<std::string>& avoid) {
  std::string cand = std::move(base);
  for (;;) {
    bool clash = false;
    for (const auto& a : avoid)
      if (a == cand) { clash = true; break; }
    if (!clash) return cand;
    cand += '\'';
  }
}

DttPtr subst(const DttPtr& e, const std::string& x, const DttPtr& repl);

namespace detail {

// Substitutes under one binder, renaming it when it would capture.
inline std::pair<std::string, DttPtr> subst_under(
    const std::string& binder, const DttPtr& body, const std::string& x,
    const DttPtr& repl, const std::vector<std::string>& replFree) {
  if (binder == x) return {binder, body};
  bool captures = false;
  for (const auto& v : replFree)
    if (v == binder) { captures = true; break; }
  if (!captures) return {binder, subst(body, x, repl)};
  std::vector<std::string> avoid = replFree;
  for (const auto& v : free_vars(body)) avoid.push_back(v);
  avoid.push_back(x);
  std::string nb = fresh_dtt_name(binder, avoid);
  DttPtr renamed = subst(body, binder, dvar(nb));
  return {nb, subst(renamed, x, repl)};
}

} // namespace detail

inline DttPtr subst(const DttPtr& e, const std::string& x, const DttPtr& repl) {
  if (!e) return e;
  std::vector<std::string> rf = free_vars(repl);
  auto under = [&](const std::string& b, const DttPtr& body) {
    return detail::subst_under(b, body, x, repl, rf);
  };
  switch (e->kind) {
    case DttExpr::Kind::Var: return e->name == x ? repl : e;
    case DttExpr::Kind::Pi:
    case DttExpr::Kind::Sigma:
    case DttExpr::Kind::ExistsP:
    case DttExpr::Kind::ForallP:
    case DttExpr::Kind::PropLam: {
      DttPtr dom = subst(e->a, x, repl);
      auto [nb, body] = under(e->name, e->b);
      return detail::binder2(e->kind, nb, dom, body);
    }
    case DttExpr::Kind::Lambda: {
      auto [nb, body] = under(e->name, e->a);
      return lam(nb, body);
    }
    case DttExpr::Kind::Case: {
      DttPtr scrut = subst(e->a, x, repl);
      auto [nl, lbody] = under(e->name, e->b);
      auto [nr, rbody] = under(e->name2, e->c);
      return case_of(scrut, nl, lbody, nr, rbody);
    }
    case DttExpr::Kind::NatRec: {
      auto [nm, motive] = under(e->name, e->a);
      DttPtr base = subst(e->b, x, repl);
      // two binders over the step
      DttPtr step = e->c;
      std::string n = e->name2, ih = e->name3;
      if (n != x && ih != x) {
        bool cap_n = false, cap_ih = false;
        for (const auto& v : rf) {
          if (v == n) cap_n = true;
          if (v == ih) cap_ih = true;
        }
        if (cap_n || cap_ih) {
          std::vector<std::string> avoid = rf;
          for (const auto& v : free_vars(step)) avoid.push_back(v);
          avoid.push_back(x);
          if (cap_n) {
            std::string nn = fresh_dtt_name(n, avoid);
            step = subst(step, n, dvar(nn));
            n = nn;
            avoid.push_back(nn);
          }
          if (cap_ih) {
            std::string nih = fresh_dtt_name(ih, avoid);
            step = subst(step, ih, dvar(nih));
            ih = nih;
          }
        }
        step = subst(step, x, repl);
      }
      DttPtr scrut = subst(e->d, x, repl);
      return natrec(nm, motive, base, n, ih, step, scrut);
    }
    case DttExpr::Kind::IdPeel: {
      auto [nm, motive] = under(e->name, e->a);
      return idpeel(nm, motive, subst(e->b, x, repl), subst(e->c, x, repl));
    }
    case DttExpr::Kind::ExElim: {
      DttPtr scrut = subst(e->a, x, repl);
      DttPtr body = e->b;
      std::string w = e->name, h = e->name2;
      if (w != x && h != x) {
        bool cap_w = false, cap_h = false;
        for (const auto& v : rf) {
          if (v == w) cap_w = true;
          if (v == h) cap_h = true;
        }
        if (cap_w || cap_h) {
          std::vector<std::string> avoid = rf;
          for (const auto& v : free_vars(body)) avoid.push_back(v);
          avoid.push_back(x);
          if (cap_w) {
            std::string nw = fresh_dtt_name(w, avoid);
            body = subst(body, w, dvar(nw));
            w = nw;
            avoid.push_back(nw);
          }
          if (cap_h) {
            std::string nh = fresh_dtt_name(h, avoid);
            body = subst(body, h, dvar(nh));
            h = nh;
          }
        }
        body = subst(body, x, repl);
      }
      return ex_elim(scrut, w, h, body);
    }
    case DttExpr::Kind::TruncElim: {
      DttPtr scrut = subst(e->a, x, repl);
      auto [nb, body] = under(e->name, e->b);
      return trunc_elim(scrut, nb, body);
    }
    default: {
      DttExpr out(e->kind);
      out.name = e->name;
      out.name2 = e->name2;
      out.name3 = e->name3;
      out.a = subst(e->a, x, repl);
      out.b = subst(e->b, x, repl);
      out.c = subst(e->c, x, repl);
      out.d = subst(e->d, x, repl);
      for (const auto& arg : e->args) out.args.push_back(subst(arg, x, repl));
      return detail::node(std::move(out));
    }
  }
}

namespace detail {

struct DttAlphaEnv {
  std::vector<std::pair<std::string, std::string>> pairs;

  bool var_eq(const std::string& a, const std::string& b) const {
    for (auto it = pairs.rbegin(); it != pairs.rend(); ++it) {
      if (it->first == a || it->second == b)
        return it->first == a && it->second == b;
    }
    return a == b;
  }
};

inline bool alpha_eq(const DttPtr& a, const DttPtr& b, DttAlphaEnv& env) {
  if (a.get() == b.get()) return true;
  if (!a || !b) return false;
  if (a->kind != b->kind) return false;
  auto both = [&](const DttPtr& x, const DttPtr& y) {
    return alpha_eq(x, y, env);
  };
  auto under = [&](const std::string& na, const std::string& nb,
                   const DttPtr& x, const DttPtr& y) {
    env.pairs.emplace_back(na, nb);
    bool ok = alpha_eq(x, y, env);
    env.pairs.pop_back();
    return ok;
  };
  switch (a->kind) {
    case DttExpr::Kind::Var: return env.var_eq(a->name, b->name);
    case DttExpr::Kind::Pi:
    case DttExpr::Kind::Sigma:
    case DttExpr::Kind::ExistsP:
    case DttExpr::Kind::ForallP:
    case DttExpr::Kind::PropLam:
      return both(a->a, b->a) && under(a->name, b->name, a->b, b->b);
    case DttExpr::Kind::Lambda:
      return under(a->name, b->name, a->a, b->a);
    case DttExpr::Kind::Case:
      return both(a->a, b->a) && under(a->name, b->name, a->b, b->b) &&
             under(a->name2, b->name2, a->c, b->c);
    case DttExpr::Kind::NatRec: {
      if (!under(a->name, b->name, a->a, b->a)) return false;
      if (!both(a->b, b->b)) return false;
      env.pairs.emplace_back(a->name2, b->name2);
      env.pairs.emplace_back(a->name3, b->name3);
      bool ok = alpha_eq(a->c, b->c, env);
      env.pairs.pop_back();
      env.pairs.pop_back();
      return ok && both(a->d, b->d);
    }
    case DttExpr::Kind::IdPeel:
      return under(a->name, b->name, a->a, b->a) && both(a->b, b->b) &&
             both(a->c, b->c);
    case DttExpr::Kind::ExElim: {
      if (!both(a->a, b->a)) return false;
      env.pairs.emplace_back(a->name, b->name);
      env.pairs.emplace_back(a->name2, b->name2);
      bool ok = alpha_eq(a->b, b->b, env);
      env.pairs.pop_back();
      env.pairs.pop_back();
      return ok;
    }
    case DttExpr::Kind::TruncElim:
      return both(a->a, b->a) && under(a->name, b->name, a->b, b->b);
    default: {
      if (a->args.size() != b->args.size()) return false;
      for (std::size_t i = 0; i < a->args.size(); i++)
        if (!both(a->args[i], b->args[i])) return false;
      return both(a->a, b->a) && both(a->b, b->b) && both(a->c, b->c) &&
             both(a->d, b->d);
    }
  }
}

} // namespace detail

inline bool alpha_equal(const DttPtr& a, const DttPtr& b) {
  detail::DttAlphaEnv env;
  return detail::alpha_eq(a, b, env);
}

// ---- printing ----

namespace detail {
inline std::optional<unsigned long> as_numeral(const DttPtr& e) {
  unsigned long n = 0;
  const DttExpr* cur = e.get();
  for (;;) {
    if (cur->kind == DttExpr::Kind::Zero) return n;
    if (cur->kind == DttExpr::Kind::Succ) {
      n++;
      cur = cur->a.get();
      continue;
    }
    return std::nullopt;
  }
}
} // namespace detail

inline std::string show(const DttPtr& e) {
  if (!e) return "?";
  using K = DttExpr::Kind;
  if (auto n = detail::as_numeral(e)) {
    if (*n == 0) return "zero";
    return std::to_string(*n);
  }
  auto bin = [&](const char* h) {
    return std::string("(") + h + " " + show(e->a) + " " + show(e->b) + ")";
  };
  auto binder = [&](const char* h) {
    return std::string("(") + h + " (" + e->name + " " + show(e->a) + ") " +
           show(e->b) + ")";
  };
  switch (e->kind) {
    case K::Nat: return "nat";
    case K::Empty: return "empty";
    case K::Unit: return "unit";
    case K::FalseP: return "falsep";
    case K::PowUnit: return "pow1";
    case K::Pi: return binder("pi");
    case K::Sigma: return binder("sigma");
    case K::ExistsP: return binder("existsp");
    case K::ForallP: return binder("forallp");
    case K::Sum: return bin("sum");
    case K::OrP: return bin("orp");
    case K::ImpP: return bin("impp");
    case K::AndP: return bin("andp");
    case K::Id:
      return "(id " + show(e->a) + " " + show(e->b) + " " + show(e->c) + ")";
    case K::EqP:
      return "(eqp " + show(e->a) + " " + show(e->b) + " " + show(e->c) + ")";
    case K::Trunc: return "(trunc " + show(e->a) + ")";
    case K::NatCase:
      return "(natcase " + show(e->a) + " " + show(e->b) + " " + show(e->c) +
             ")";
    case K::FamApp: {
      std::string out = "(at " + show(e->a);
      for (const auto& x : e->args) out += " " + show(x);
      return out + ")";
    }
    case K::Var: return e->name;
    case K::Lambda: return "(lam " + e->name + " " + show(e->a) + ")";
    case K::App: return bin("ap");
    case K::Pair: return bin("pair");
    case K::Fst: return "(fst " + show(e->a) + ")";
    case K::Snd: return "(snd " + show(e->a) + ")";
    case K::Inl: return "(inl " + show(e->a) + ")";
    case K::Inr: return "(inr " + show(e->a) + ")";
    case K::Case:
      return "(case " + show(e->a) + " (" + e->name + " " + show(e->b) +
             ") (" + e->name2 + " " + show(e->c) + "))";
    case K::Zero: return "zero";
    case K::Succ: return "(succ " + show(e->a) + ")";
    case K::NatRec:
      return "(natrec (" + e->name + " " + show(e->a) + ") " + show(e->b) +
             " (" + e->name2 + " " + e->name3 + " " + show(e->c) + ") " +
             show(e->d) + ")";
    case K::Refl: return "refl";
    case K::IdPeel:
      return "(idpeel (" + e->name + " " + show(e->a) + ") " + show(e->b) +
             " " + show(e->c) + ")";
    case K::ExIntro: return bin("exists-i");
    case K::ExElim:
      return "(exists-e " + show(e->a) + " (" + e->name + " " + e->name2 +
             ") " + show(e->b) + ")";
    case K::TruncIntro: return "(trunc-i " + show(e->a) + ")";
    case K::TruncElim:
      return "(trunc-e " + show(e->a) + " (" + e->name + ") " + show(e->b) +
             ")";
    case K::PropLam: return binder("plam");
    case K::TrueCanon: return "true";
    case K::Absurd: return "(absurd " + show(e->a) + ")";
    case K::Ann: return "(the " + show(e->b) + " " + show(e->a) + ")";
  }
  return "?";
}

} // namespace predicheck::dtt
