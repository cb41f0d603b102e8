#pragma once

#include <cstddef>
#include <optional>

#include "predicheck/terms.hpp"

namespace predicheck::hao {

inline constexpr std::size_t kDefaultFuel = 1'000'000;

namespace detail {

// Contraction at the root, or nullptr. The six rules:
//   k x y > x                      s x y z > (x z)(y z)
//   rec a f zero > a               rec a f (succ n) > f n (rec a f n)
//   fst (pair x y) > x             snd (pair x y) > y
inline TermPtr contract_root(const TermPtr& t) {
  if (t->kind != Term::Kind::Ap) return nullptr;
  const TermPtr& f1 = t->fun; // t = f1 arg
  if (f1->kind == Term::Kind::Ap) {
    const TermPtr& f2 = f1->fun; // t = f2 a b
    if (f2->kind == Term::Kind::K) return f1->arg;
    if (f2->kind == Term::Kind::Ap) {
      const TermPtr& f3 = f2->fun; // t = f3 a b c
      if (f3->kind == Term::Kind::S) {
        const TermPtr& x = f2->arg;
        const TermPtr& y = f1->arg;
        const TermPtr& z = t->arg;
        return ap(ap(x, z), ap(y, z));
      }
      if (f3->kind == Term::Kind::Rec) {
        const TermPtr& a = f2->arg;
        const TermPtr& f = f1->arg;
        const TermPtr& n = t->arg;
        if (n->kind == Term::Kind::Zero) return a;
        if (n->kind == Term::Kind::Ap && n->fun->kind == Term::Kind::Succ) {
          const TermPtr& pred = n->arg;
          return ap(ap(f, pred), ap(ap(ap(f3, a), f), pred));
        }
      }
    }
  }
  if ((f1->kind == Term::Kind::Fst || f1->kind == Term::Kind::Snd) &&
      t->arg->kind == Term::Kind::Ap &&
      t->arg->fun->kind == Term::Kind::Ap &&
      t->arg->fun->fun->kind == Term::Kind::Pair) {
    const TermPtr& x = t->arg->fun->arg;
    const TermPtr& y = t->arg->arg;
    return f1->kind == Term::Kind::Fst ? x : y;
  }
  return nullptr;
}

} // namespace detail

// One leftmost-outermost contraction; nullopt iff t is normal.
inline std::optional<TermPtr> step(const TermPtr& t) {
  if (TermPtr r = detail::contract_root(t)) return r;
  if (t->kind != Term::Kind::Ap) return std::nullopt;
  if (auto f = step(t->fun)) return ap(*f, t->arg);
  if (auto a = step(t->arg)) return ap(t->fun, *a);
  return std::nullopt;
}

inline bool is_normal(const TermPtr& t) { return !step(t).has_value(); }

// Iterates step to a fixpoint. Typed reduction terminates, but the kernel
// stays total: fuel turns a nontermination bug into a diagnostic.
inline Result<TermPtr> normalize(const TermPtr& t,
                                 std::size_t fuel = kDefaultFuel) {
  TermPtr cur = t;
  for (std::size_t i = 0;; i++) {
    auto next = step(cur);
    if (!next) return cur;
    if (i >= fuel)
      return diag("fuel exhausted after " + std::to_string(fuel) +
                      " steps; last term: " + show_term(cur),
                  "fuel");
    cur = *next;
  }
}

// Definitional equality: syntactic identity of normal forms.
inline Result<bool> def_equal(const TermPtr& t, const TermPtr& u,
                              std::size_t fuel = kDefaultFuel) {
  auto nt = normalize(t, fuel);
  if (!nt.ok()) return nt.error();
  auto nu = normalize(u, fuel);
  if (!nu.ok()) return nu.error();
  return term_equal(nt.value(), nu.value());
}

} // namespace predicheck::hao
