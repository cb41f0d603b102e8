#pragma once

#include <memory>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "predicheck/diag.hpp"
#include "predicheck/types.hpp"

namespace predicheck::hao {

// Combinator terms. Every constant carries its full type instantiation, so
// typing is syntax-directed and needs no unification:
//
//   zero : N                    succ : N -> N
//   k[s,t] : s -> t -> s        s[s,t,r] : (s->t->r) -> (s->t) -> s -> r
//   rec[s] : s -> (N->s->s) -> N -> s
//   pair[s,t] : s -> t -> s*t   fst[s,t] : s*t -> s   snd[s,t] : s*t -> t
struct Term;
using TermPtr = std::shared_ptr<const Term>;

struct Term {
  enum class Kind { Var, Zero, Succ, K, S, Rec, Pair, Fst, Snd, Ap } kind;
  std::string name;          // Var
  TypePtr ty1, ty2, ty3;     // constant instantiations
  TermPtr fun, arg;          // Ap

  explicit Term(Kind k) : kind(k) {}
};

inline TermPtr mk(Term&& t) { return std::make_shared<Term>(std::move(t)); }

inline TermPtr var(std::string name, TypePtr ty = nullptr) {
  Term t(Term::Kind::Var);
  t.name = std::move(name);
  t.ty1 = std::move(ty);
  return mk(std::move(t));
}

inline TermPtr zero() {
  static const TermPtr z = mk(Term(Term::Kind::Zero));
  return z;
}

inline TermPtr succ() {
  static const TermPtr s = mk(Term(Term::Kind::Succ));
  return s;
}

inline TermPtr comb_k(TypePtr s, TypePtr t) {
  Term e(Term::Kind::K);
  e.ty1 = std::move(s);
  e.ty2 = std::move(t);
  return mk(std::move(e));
}

inline TermPtr comb_s(TypePtr s, TypePtr t, TypePtr r) {
  Term e(Term::Kind::S);
  e.ty1 = std::move(s);
  e.ty2 = std::move(t);
  e.ty3 = std::move(r);
  return mk(std::move(e));
}

inline TermPtr recursor(TypePtr s) {
  Term e(Term::Kind::Rec);
  e.ty1 = std::move(s);
  return mk(std::move(e));
}

inline TermPtr pairing(TypePtr s, TypePtr t) {
  Term e(Term::Kind::Pair);
  e.ty1 = std::move(s);
  e.ty2 = std::move(t);
  return mk(std::move(e));
}

inline TermPtr proj_fst(TypePtr s, TypePtr t) {
  Term e(Term::Kind::Fst);
  e.ty1 = std::move(s);
  e.ty2 = std::move(t);
  return mk(std::move(e));
}

inline TermPtr proj_snd(TypePtr s, TypePtr t) {
  Term e(Term::Kind::Snd);
  e.ty1 = std::move(s);
  e.ty2 = std::move(t);
  return mk(std::move(e));
}

inline TermPtr ap(TermPtr f, TermPtr a) {
  Term e(Term::Kind::Ap);
  e.fun = std::move(f);
  e.arg = std::move(a);
  return mk(std::move(e));
}

inline TermPtr ap(TermPtr f, TermPtr a, TermPtr b) {
  return ap(ap(std::move(f), std::move(a)), std::move(b));
}

inline TermPtr ap(TermPtr f, TermPtr a, TermPtr b, TermPtr c) {
  return ap(ap(ap(std::move(f), std::move(a)), std::move(b)), std::move(c));
}

inline TermPtr numeral(unsigned long n) {
  TermPtr t = zero();
  for (unsigned long i = 0; i < n; i++) t = ap(succ(), t);
  return t;
}

// Decimal value of a succ-chain, or nullopt when the term is not a numeral.
inline std::optional<unsigned long> as_numeral(const TermPtr& t) {
  unsigned long n = 0;
  const Term* cur = t.get();
  for (;;) {
    if (cur->kind == Term::Kind::Zero) return n;
    if (cur->kind == Term::Kind::Ap &&
        cur->fun->kind == Term::Kind::Succ) {
      n++;
      cur = cur->arg.get();
      continue;
    }
    return std::nullopt;
  }
}

inline bool term_equal(const TermPtr& a, const TermPtr& b) {
  if (a.get() == b.get()) return true;
  if (a->kind != b->kind) return false;
  switch (a->kind) {
    case Term::Kind::Var: return a->name == b->name;
    case Term::Kind::Zero:
    case Term::Kind::Succ: return true;
    case Term::Kind::K:
    case Term::Kind::Pair:
    case Term::Kind::Fst:
    case Term::Kind::Snd:
      return type_equal(a->ty1, b->ty1) && type_equal(a->ty2, b->ty2);
    case Term::Kind::S:
      return type_equal(a->ty1, b->ty1) && type_equal(a->ty2, b->ty2) &&
             type_equal(a->ty3, b->ty3);
    case Term::Kind::Rec: return type_equal(a->ty1, b->ty1);
    case Term::Kind::Ap:
      return term_equal(a->fun, b->fun) && term_equal(a->arg, b->arg);
  }
  return false;
}

inline void free_vars(const TermPtr& t, std::vector<std::string>& out) {
  switch (t->kind) {
    case Term::Kind::Var: {
      for (const auto& n : out)
        if (n == t->name) return;
      out.push_back(t->name);
      return;
    }
    case Term::Kind::Ap:
      free_vars(t->fun, out);
      free_vars(t->arg, out);
      return;
    default: return;
  }
}

inline bool occurs_free(const TermPtr& t, const std::string& x) {
  if (t->kind == Term::Kind::Var) return t->name == x;
  if (t->kind == Term::Kind::Ap)
    return occurs_free(t->fun, x) || occurs_free(t->arg, x);
  return false;
}

// Terms have no binders, so substitution is plain replacement.
inline TermPtr subst_term(const TermPtr& t, const std::string& x,
                          const TermPtr& repl) {
  if (t->kind == Term::Kind::Var) return t->name == x ? repl : t;
  if (t->kind == Term::Kind::Ap) {
    TermPtr f = subst_term(t->fun, x, repl);
    TermPtr a = subst_term(t->arg, x, repl);
    if (f.get() == t->fun.get() && a.get() == t->arg.get()) return t;
    return ap(f, a);
  }
  return t;
}

// Re-annotates every free occurrence of x with the given type.
inline TermPtr annotate_var(const TermPtr& t, const std::string& x, TypePtr ty) {
  if (t->kind == Term::Kind::Var && t->name == x) return var(x, std::move(ty));
  if (t->kind == Term::Kind::Ap) {
    TermPtr f = annotate_var(t->fun, x, ty);
    TermPtr a = annotate_var(t->arg, x, ty);
    if (f.get() == t->fun.get() && a.get() == t->arg.get()) return t;
    return ap(f, a);
  }
  return t;
}

// Ordered variable typing; extending with an existing name shadows it.
class TypingContext {
public:
  TypingContext() = default;

  TypingContext bind(const std::string& name, TypePtr ty) const {
    TypingContext out = *this;
    for (auto& e : out.entries_) {
      if (e.first == name) {
        e.second = std::move(ty);
        return out;
      }
    }
    out.entries_.emplace_back(name, std::move(ty));
    return out;
  }

  const TypePtr* lookup(const std::string& name) const {
    for (auto it = entries_.rbegin(); it != entries_.rend(); ++it)
      if (it->first == name) return &it->second;
    return nullptr;
  }

  const std::vector<std::pair<std::string, TypePtr>>& entries() const {
    return entries_;
  }

private:
  std::vector<std::pair<std::string, TypePtr>> entries_;
};

inline Result<TypePtr> infer_type(const TypingContext& ctx, const TermPtr& t) {
  switch (t->kind) {
    case Term::Kind::Var: {
      if (const TypePtr* ty = ctx.lookup(t->name)) {
        if (t->ty1 && !type_equal(*ty, t->ty1))
          return diag("variable " + t->name + " annotated " +
                          show_type(t->ty1) + " but bound at " + show_type(*ty),
                      "type");
        return *ty;
      }
      if (t->ty1) return t->ty1;
      return diag("unbound variable " + t->name, "type");
    }
    case Term::Kind::Zero: return nat_type();
    case Term::Kind::Succ: return arrow(nat_type(), nat_type());
    case Term::Kind::K:
      return arrow(t->ty1, arrow(t->ty2, t->ty1));
    case Term::Kind::S:
      return arrow(arrow(t->ty1, arrow(t->ty2, t->ty3)),
                   arrow(arrow(t->ty1, t->ty2), arrow(t->ty1, t->ty3)));
    case Term::Kind::Rec:
      return arrow(t->ty1,
                   arrow(arrow(nat_type(), arrow(t->ty1, t->ty1)),
                         arrow(nat_type(), t->ty1)));
    case Term::Kind::Pair:
      return arrow(t->ty1, arrow(t->ty2, product(t->ty1, t->ty2)));
    case Term::Kind::Fst:
      return arrow(product(t->ty1, t->ty2), t->ty1);
    case Term::Kind::Snd:
      return arrow(product(t->ty1, t->ty2), t->ty2);
    case Term::Kind::Ap: {
      auto fview = infer_type(ctx, t->fun);
      if (!fview.ok()) return fview;
      auto aview = infer_type(ctx, t->arg);
      if (!aview.ok()) return aview;
      const TypePtr& fty = fview.value();
      if (fty->kind != FiniteType::Kind::Arrow)
        return diag("application of non-function: " + show_type(fty) +
                        " is not an arrow",
                    "type");
      if (!type_equal(fty->left, aview.value()))
        return diag("application mismatch: expected argument of type " +
                        show_type(fty->left) + ", got " +
                        show_type(aview.value()),
                    "type");
      return fty->right;
    }
  }
  return diag("malformed term", "type");
}

inline std::string show_term(const TermPtr& t) {
  if (auto n = as_numeral(t)) {
    if (*n == 0) return "zero";
    return std::to_string(*n);
  }
  switch (t->kind) {
    case Term::Kind::Var: return t->name;
    case Term::Kind::Zero: return "zero";
    case Term::Kind::Succ: return "succ";
    case Term::Kind::K:
      return "(k " + show_type(t->ty1) + " " + show_type(t->ty2) + ")";
    case Term::Kind::S:
      return "(s " + show_type(t->ty1) + " " + show_type(t->ty2) + " " +
             show_type(t->ty3) + ")";
    case Term::Kind::Rec: return "(rec " + show_type(t->ty1) + ")";
    case Term::Kind::Pair:
      return "(pair " + show_type(t->ty1) + " " + show_type(t->ty2) + ")";
    case Term::Kind::Fst:
      return "(fst " + show_type(t->ty1) + " " + show_type(t->ty2) + ")";
    case Term::Kind::Snd:
      return "(snd " + show_type(t->ty1) + " " + show_type(t->ty2) + ")";
    case Term::Kind::Ap:
      return "(ap " + show_term(t->fun) + " " + show_term(t->arg) + ")";
  }
  return "?";
}

} // namespace predicheck::hao
