#pragma once

#include <memory>
#include <string>
#include <utility>
#include <vector>

#include "predicheck/reduction.hpp"
#include "predicheck/terms.hpp"
#include "predicheck/types.hpp"

namespace predicheck::hao {

// Many-sorted first-order formulas over combinator terms. "not p" is sugar
// for (imp p false), "iff" for the conjunction of both implications, and
// "exists!" expands as
//   (exists (y T) p) /\ (forall (y1 T) (forall (y2 T)
//       (imp (and p[y1] p[y2]) (= T y1 y2))))
// so none of the three appears as a node.
struct Formula;
using FormulaPtr = std::shared_ptr<const Formula>;

struct Formula {
  enum class Kind { False, Eq, And, Or, Imp, Forall, Exists } kind;
  TypePtr sort;            // Eq / binder domain
  TermPtr lhs, rhs;        // Eq
  FormulaPtr left, right;  // And / Or / Imp
  std::string binder;      // Forall / Exists
  FormulaPtr body;         // Forall / Exists

  explicit Formula(Kind k) : kind(k) {}
};

inline FormulaPtr fmk(Formula&& f) {
  return std::make_shared<Formula>(std::move(f));
}

inline FormulaPtr falsum() {
  static const FormulaPtr f = fmk(Formula(Formula::Kind::False));
  return f;
}

inline FormulaPtr eq(TypePtr sort, TermPtr l, TermPtr r) {
  Formula f(Formula::Kind::Eq);
  f.sort = std::move(sort);
  f.lhs = std::move(l);
  f.rhs = std::move(r);
  return fmk(std::move(f));
}

inline FormulaPtr conj(FormulaPtr a, FormulaPtr b) {
  Formula f(Formula::Kind::And);
  f.left = std::move(a);
  f.right = std::move(b);
  return fmk(std::move(f));
}

inline FormulaPtr disj(FormulaPtr a, FormulaPtr b) {
  Formula f(Formula::Kind::Or);
  f.left = std::move(a);
  f.right = std::move(b);
  return fmk(std::move(f));
}

inline FormulaPtr imp(FormulaPtr a, FormulaPtr b) {
  Formula f(Formula::Kind::Imp);
  f.left = std::move(a);
  f.right = std::move(b);
  return fmk(std::move(f));
}

inline FormulaPtr neg(FormulaPtr a) { return imp(std::move(a), falsum()); }

inline FormulaPtr iff(FormulaPtr a, FormulaPtr b) {
  return conj(imp(a, b), imp(b, a));
}

inline FormulaPtr forall(std::string x, TypePtr sort, FormulaPtr body) {
  Formula f(Formula::Kind::Forall);
  f.binder = std::move(x);
  f.sort = std::move(sort);
  f.body = std::move(body);
  return fmk(std::move(f));
}

inline FormulaPtr exists(std::string x, TypePtr sort, FormulaPtr body) {
  Formula f(Formula::Kind::Exists);
  f.binder = std::move(x);
  f.sort = std::move(sort);
  f.body = std::move(body);
  return fmk(std::move(f));
}

inline void free_vars(const FormulaPtr& f, std::vector<std::string>& out,
                      std::vector<std::string>& bound) {
  auto add = [&](const TermPtr& t) {
    std::vector<std::string> vs;
    free_vars(t, vs);
    for (const auto& v : vs) {
      bool isBound = false;
      for (const auto& b : bound)
        if (b == v) { isBound = true; break; }
      if (isBound) continue;
      bool seen = false;
      for (const auto& o : out)
        if (o == v) { seen = true; break; }
      if (!seen) out.push_back(v);
    }
  };
  switch (f->kind) {
    case Formula::Kind::False: return;
    case Formula::Kind::Eq:
      add(f->lhs);
      add(f->rhs);
      return;
    case Formula::Kind::And:
    case Formula::Kind::Or:
    case Formula::Kind::Imp:
      free_vars(f->left, out, bound);
      free_vars(f->right, out, bound);
      return;
    case Formula::Kind::Forall:
    case Formula::Kind::Exists: {
      bound.push_back(f->binder);
      free_vars(f->body, out, bound);
      bound.pop_back();
      return;
    }
  }
}

inline std::vector<std::string> free_vars(const FormulaPtr& f) {
  std::vector<std::string> out, bound;
  free_vars(f, out, bound);
  return out;
}

inline bool occurs_free(const FormulaPtr& f, const std::string& x) {
  for (const auto& v : free_vars(f))
    if (v == x) return true;
  return false;
}

inline std::string fresh_name(std::string base,
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

// Capture-avoiding substitution of a term for a free variable.
inline FormulaPtr subst(const FormulaPtr& f, const std::string& x,
                        const TermPtr& t) {
  switch (f->kind) {
    case Formula::Kind::False: return f;
    case Formula::Kind::Eq:
      return eq(f->sort, subst_term(f->lhs, x, t), subst_term(f->rhs, x, t));
    case Formula::Kind::And:
      return conj(subst(f->left, x, t), subst(f->right, x, t));
    case Formula::Kind::Or:
      return disj(subst(f->left, x, t), subst(f->right, x, t));
    case Formula::Kind::Imp:
      return imp(subst(f->left, x, t), subst(f->right, x, t));
    case Formula::Kind::Forall:
    case Formula::Kind::Exists: {
      if (f->binder == x) return f;
      FormulaPtr body = f->body;
      std::string b = f->binder;
      if (occurs_free(t, b)) {
        std::vector<std::string> avoid = free_vars(body);
        hao::free_vars(t, avoid);
        avoid.push_back(x);
        b = fresh_name(b, avoid);
        body = subst(body, f->binder, var(b, f->sort));
      }
      body = subst(body, x, t);
      return f->kind == Formula::Kind::Forall ? forall(b, f->sort, body)
                                              : exists(b, f->sort, body);
    }
  }
  return f;
}

namespace detail {

struct AlphaEnv {
  std::vector<std::pair<std::string, std::string>> pairs;

  bool term_eq(const TermPtr& a, const TermPtr& b) const {
    if (a->kind != b->kind) {
      return false;
    }
    if (a->kind == Term::Kind::Var) {
      for (auto it = pairs.rbegin(); it != pairs.rend(); ++it) {
        if (it->first == a->name || it->second == b->name)
          return it->first == a->name && it->second == b->name;
      }
      return a->name == b->name;
    }
    if (a->kind == Term::Kind::Ap)
      return term_eq(a->fun, b->fun) && term_eq(a->arg, b->arg);
    return term_equal(a, b);
  }
};

inline bool alpha_eq(const FormulaPtr& a, const FormulaPtr& b, AlphaEnv& env) {
  if (a->kind != b->kind) return false;
  switch (a->kind) {
    case Formula::Kind::False: return true;
    case Formula::Kind::Eq:
      return type_equal(a->sort, b->sort) && env.term_eq(a->lhs, b->lhs) &&
             env.term_eq(a->rhs, b->rhs);
    case Formula::Kind::And:
    case Formula::Kind::Or:
    case Formula::Kind::Imp:
      return alpha_eq(a->left, b->left, env) && alpha_eq(a->right, b->right, env);
    case Formula::Kind::Forall:
    case Formula::Kind::Exists: {
      if (!type_equal(a->sort, b->sort)) return false;
      env.pairs.emplace_back(a->binder, b->binder);
      bool ok = alpha_eq(a->body, b->body, env);
      env.pairs.pop_back();
      return ok;
    }
  }
  return false;
}

} // namespace detail

inline bool alpha_equal(const FormulaPtr& a, const FormulaPtr& b) {
  if (a.get() == b.get()) return true;
  detail::AlphaEnv env;
  return detail::alpha_eq(a, b, env);
}

// exists! y:T. p  expands to existence plus uniqueness with fresh y1, y2.
inline FormulaPtr expand_exists_unique(const std::string& y, const TypePtr& ty,
                                       const FormulaPtr& p) {
  std::vector<std::string> avoid = free_vars(p);
  avoid.push_back(y);
  std::string y1 = fresh_name("y1", avoid);
  avoid.push_back(y1);
  std::string y2 = fresh_name("y2", avoid);
  FormulaPtr p1 = subst(p, y, var(y1, ty));
  FormulaPtr p2 = subst(p, y, var(y2, ty));
  FormulaPtr uniq = forall(
      y1, ty,
      forall(y2, ty,
             imp(conj(p1, p2), eq(ty, var(y1, ty), var(y2, ty)))));
  return conj(exists(y, ty, p), uniq);
}

// Checks every term against its annotated sort. ctx supplies the types of
// free variables that carry no annotation of their own.
inline CheckResult well_formed(const TypingContext& ctx, const FormulaPtr& f) {
  switch (f->kind) {
    case Formula::Kind::False: return check_ok();
    case Formula::Kind::Eq: {
      for (const TermPtr& side : {f->lhs, f->rhs}) {
        auto ty = infer_type(ctx, side);
        if (!ty.ok()) return ty.error();
        if (!type_equal(ty.value(), f->sort))
          return diag("equation annotated at sort " + show_type(f->sort) +
                          " but " + show_term(side) + " has type " +
                          show_type(ty.value()),
                      "type");
      }
      return check_ok();
    }
    case Formula::Kind::And:
    case Formula::Kind::Or:
    case Formula::Kind::Imp: {
      auto l = well_formed(ctx, f->left);
      if (!l.ok()) return l;
      return well_formed(ctx, f->right);
    }
    case Formula::Kind::Forall:
    case Formula::Kind::Exists:
      return well_formed(ctx.bind(f->binder, f->sort), f->body);
  }
  return check_ok();
}

namespace detail {

inline std::string show_formula_in(const FormulaPtr& f,
                                   std::vector<std::string>& scope);

inline std::pair<FormulaPtr, std::string> open_binder(
    const FormulaPtr& f, std::vector<std::string>& scope) {
  std::string name = f->binder;
  FormulaPtr body = f->body;
  bool shadowed = false;
  for (const auto& s : scope)
    if (s == name) { shadowed = true; break; }
  if (shadowed) {
    std::vector<std::string> avoid = scope;
    for (const auto& v : free_vars(body)) avoid.push_back(v);
    name = fresh_name(name, avoid);
    body = subst(body, f->binder, var(name, f->sort));
  }
  return {body, name};
}

inline std::string show_formula_in(const FormulaPtr& f,
                                   std::vector<std::string>& scope) {
  switch (f->kind) {
    case Formula::Kind::False: return "false";
    case Formula::Kind::Eq:
      return "(= " + show_type(f->sort) + " " + show_term(f->lhs) + " " +
             show_term(f->rhs) + ")";
    case Formula::Kind::And: {
      // Re-sugar (and (imp a b) (imp b a)) to (iff a b).
      if (f->left->kind == Formula::Kind::Imp &&
          f->right->kind == Formula::Kind::Imp &&
          alpha_equal(f->left->left, f->right->right) &&
          alpha_equal(f->left->right, f->right->left)) {
        return "(iff " + show_formula_in(f->left->left, scope) + " " +
               show_formula_in(f->left->right, scope) + ")";
      }
      return "(and " + show_formula_in(f->left, scope) + " " +
             show_formula_in(f->right, scope) + ")";
    }
    case Formula::Kind::Or:
      return "(or " + show_formula_in(f->left, scope) + " " +
             show_formula_in(f->right, scope) + ")";
    case Formula::Kind::Imp: {
      if (f->right->kind == Formula::Kind::False)
        return "(not " + show_formula_in(f->left, scope) + ")";
      return "(imp " + show_formula_in(f->left, scope) + " " +
             show_formula_in(f->right, scope) + ")";
    }
    case Formula::Kind::Forall:
    case Formula::Kind::Exists: {
      auto [body, name] = open_binder(f, scope);
      scope.push_back(name);
      std::string inner = show_formula_in(body, scope);
      scope.pop_back();
      std::string head =
          f->kind == Formula::Kind::Forall ? "forall" : "exists";
      return "(" + head + " (" + name + " " + show_type(f->sort) + ") " +
             inner + ")";
    }
  }
  return "?";
}

} // namespace detail

// Shadowed binders are renamed apart with prime suffixes before printing.
inline std::string show_formula(const FormulaPtr& f) {
  std::vector<std::string> scope = free_vars(f);
  return detail::show_formula_in(f, scope);
}

} // namespace predicheck::hao
