#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "predicheck/dtt.hpp"

namespace predicheck::dtt {

inline constexpr std::size_t kDefaultDttFuel = 1'000'000;

// Context entries: ordinary typed variables, and first-order type-family
// variables R : (A1 ... An) -> sort used to state schematic relations.
struct CtxEntry {
  enum class Kind { Term, Family } kind = Kind::Term;
  std::string name;
  DttPtr type;                 // Term
  std::vector<DttPtr> domains; // Family
  Sort target = Sort::Set;     // Family
};

class Ctx {
public:
  Ctx bind(std::string name, DttPtr type) const {
    Ctx out = *this;
    CtxEntry e;
    e.kind = CtxEntry::Kind::Term;
    e.name = std::move(name);
    e.type = std::move(type);
    out.entries_.push_back(std::move(e));
    return out;
  }

  Ctx bind_family(std::string name, std::vector<DttPtr> domains, Sort target) const {
    Ctx out = *this;
    CtxEntry e;
    e.kind = CtxEntry::Kind::Family;
    e.name = std::move(name);
    e.domains = std::move(domains);
    e.target = target;
    out.entries_.push_back(std::move(e));
    return out;
  }

  const CtxEntry* lookup(const std::string& name) const {
    for (auto it = entries_.rbegin(); it != entries_.rend(); ++it)
      if (it->name == name) return &*it;
    return nullptr;
  }

  const std::vector<CtxEntry>& entries() const { return entries_; }

private:
  std::vector<CtxEntry> entries_;
};

// In MLTT mode the primitive proposition formers collapse into their
// propositions-as-types counterparts before any judgement is made.
inline DttPtr desugar(const DttPtr& e) {
  if (!e) return e;
  using K = DttExpr::Kind;
  auto d = [](const DttPtr& x) { return desugar(x); };
  switch (e->kind) {
    case K::FalseP: return empty();
    case K::ExistsP: return sigma(e->name, d(e->a), d(e->b));
    case K::ForallP: return pi(e->name, d(e->a), d(e->b));
    case K::ImpP: return pi("_", d(e->a), d(e->b));
    case K::AndP: return sigma("_", d(e->a), d(e->b));
    case K::OrP: return sum(d(e->a), d(e->b));
    case K::EqP: return id_type(d(e->a), d(e->b), d(e->c));
    case K::ExIntro: return dpair(d(e->a), d(e->b));
    case K::ExElim: {
      // let (x, h) = s in body  ~~>  body[x := fst s, h := snd s]
      DttPtr s = d(e->a);
      DttPtr body = d(e->b);
      body = subst(body, e->name, fst(s));
      body = subst(body, e->name2, snd(s));
      return body;
    }
    case K::PropLam: return lam(e->name, d(e->b));
    default: {
      DttExpr out(e->kind);
      out.name = e->name;
      out.name2 = e->name2;
      out.name3 = e->name3;
      out.a = d(e->a);
      out.b = d(e->b);
      out.c = d(e->c);
      out.d = d(e->d);
      for (const auto& x : e->args) out.args.push_back(d(x));
      return std::make_shared<DttExpr>(std::move(out));
    }
  }
}

class TypeChecker {
public:
  explicit TypeChecker(SortMode mode, std::size_t fuel = kDefaultDttFuel)
      : mode_(mode), fuel_(fuel) {}

  SortMode mode() const { return mode_; }

  // Weak head normal form under beta and the eliminator computation rules.
  Result<DttPtr> whnf(DttPtr e) {
    using K = DttExpr::Kind;
    for (;;) {
      if (fuel_ == 0)
        return diag("conversion fuel exhausted at " + show(e), "fuel");
      switch (e->kind) {
        case K::Ann: e = e->a; continue;
        case K::App: {
          auto f = whnf(e->a);
          if (!f.ok()) return f;
          const DttPtr& fv = f.value();
          if (fv->kind == K::Lambda) {
            fuel_--;
            e = subst(fv->a, fv->name, e->b);
            continue;
          }
          if (fv->kind == K::PropLam) {
            fuel_--;
            e = subst(fv->b, fv->name, e->b);
            continue;
          }
          if (fv.get() != e->a.get()) return app(fv, e->b);
          return e;
        }
        case K::Fst:
        case K::Snd: {
          auto p = whnf(e->a);
          if (!p.ok()) return p;
          const DttPtr& pv = p.value();
          if (pv->kind == K::Pair || pv->kind == K::ExIntro) {
            fuel_--;
            e = e->kind == K::Fst ? pv->a : pv->b;
            continue;
          }
          if (pv.get() != e->a.get())
            return e->kind == K::Fst ? fst(pv) : snd(pv);
          return e;
        }
        case K::Case: {
          auto s = whnf(e->a);
          if (!s.ok()) return s;
          const DttPtr& sv = s.value();
          if (sv->kind == K::Inl) {
            fuel_--;
            e = subst(e->b, e->name, sv->a);
            continue;
          }
          if (sv->kind == K::Inr) {
            fuel_--;
            e = subst(e->c, e->name2, sv->a);
            continue;
          }
          if (sv.get() != e->a.get())
            return case_of(sv, e->name, e->b, e->name2, e->c);
          return e;
        }
        case K::NatRec: {
          auto s = whnf(e->d);
          if (!s.ok()) return s;
          const DttPtr& sv = s.value();
          if (sv->kind == K::Zero) {
            fuel_--;
            e = e->b;
            continue;
          }
          if (sv->kind == K::Succ) {
            fuel_--;
            DttPtr pred = sv->a;
            DttPtr rec = natrec(e->name, e->a, e->b, e->name2, e->name3, e->c,
                                pred);
            DttPtr step = subst(e->c, e->name2, pred);
            e = subst(step, e->name3, rec);
            continue;
          }
          if (sv.get() != e->d.get())
            return natrec(e->name, e->a, e->b, e->name2, e->name3, e->c, sv);
          return e;
        }
        case K::NatCase: {
          auto s = whnf(e->a);
          if (!s.ok()) return s;
          const DttPtr& sv = s.value();
          if (sv->kind == K::Zero) {
            fuel_--;
            e = e->b;
            continue;
          }
          if (sv->kind == K::Succ) {
            fuel_--;
            e = e->c;
            continue;
          }
          if (sv.get() != e->a.get()) return natcase(sv, e->b, e->c);
          return e;
        }
        case K::ExElim: {
          auto s = whnf(e->a);
          if (!s.ok()) return s;
          const DttPtr& sv = s.value();
          if (sv->kind == K::ExIntro || sv->kind == K::Pair) {
            fuel_--;
            DttPtr body = subst(e->b, e->name, sv->a);
            e = subst(body, e->name2, sv->b);
            continue;
          }
          if (sv.get() != e->a.get())
            return ex_elim(sv, e->name, e->name2, e->b);
          return e;
        }
        case K::TruncElim: {
          auto s = whnf(e->a);
          if (!s.ok()) return s;
          const DttPtr& sv = s.value();
          if (sv->kind == K::TruncIntro) {
            fuel_--;
            e = subst(e->b, e->name, sv->a);
            continue;
          }
          if (sv.get() != e->a.get()) return trunc_elim(sv, e->name, e->b);
          return e;
        }
        case K::IdPeel: {
          auto s = whnf(e->b);
          if (!s.ok()) return s;
          const DttPtr& sv = s.value();
          if (sv->kind == K::Refl) {
            fuel_--;
            e = e->c;
            continue;
          }
          if (sv.get() != e->b.get()) return idpeel(e->name, e->a, sv, e->c);
          return e;
        }
        case K::FamApp: {
          auto h = whnf(e->a);
          if (!h.ok()) return h;
          const DttPtr& hv = h.value();
          if (hv->kind == K::PropLam && !e->args.empty()) {
            fuel_--;
            DttPtr inst = subst(hv->b, hv->name, e->args[0]);
            if (e->args.size() == 1) {
              e = inst;
            } else {
              std::vector<DttPtr> rest(e->args.begin() + 1, e->args.end());
              e = fam_app(inst, rest);
            }
            continue;
          }
          if (hv.get() != e->a.get()) return fam_app(hv, e->args);
          return e;
        }
        default: return e;
      }
    }
  }

  // Beta conversion on weak head normal forms, alpha-aware under binders.
  Result<bool> convert(const DttPtr& a0, const DttPtr& b0) {
    auto wa = whnf(a0);
    if (!wa.ok()) return wa.error();
    auto wb = whnf(b0);
    if (!wb.ok()) return wb.error();
    const DttPtr& a = wa.value();
    const DttPtr& b = wb.value();
    if (a.get() == b.get()) return true;
    if (a->kind != b->kind) return false;
    using K = DttExpr::Kind;
    auto sub = [&](const DttPtr& x, const DttPtr& y) -> Result<bool> {
      if (!x && !y) return true;
      if (!x || !y) return false;
      return convert(x, y);
    };
    auto under = [&](const std::string& na, const std::string& nb,
                     const DttPtr& x, const DttPtr& y) -> Result<bool> {
      std::string fresh = "$" + std::to_string(fresh_counter_++);
      return sub(subst(x, na, dvar(fresh)), subst(y, nb, dvar(fresh)));
    };
    auto all = [&](std::initializer_list<Result<bool>> rs) -> Result<bool> {
      for (auto& r : rs) {
        if (!r.ok()) return r;
        if (!r.value()) return false;
      }
      return true;
    };
    switch (a->kind) {
      case K::Var: return a->name == b->name;
      case K::Nat:
      case K::Empty:
      case K::Unit:
      case K::FalseP:
      case K::PowUnit:
      case K::Zero:
      case K::Refl:
      case K::TrueCanon:
        return true;
      case K::Pi:
      case K::Sigma:
      case K::ExistsP:
      case K::ForallP:
      case K::PropLam:
        return all({sub(a->a, b->a), under(a->name, b->name, a->b, b->b)});
      case K::Lambda: return under(a->name, b->name, a->a, b->a);
      case K::Case:
        return all({sub(a->a, b->a), under(a->name, b->name, a->b, b->b),
                    under(a->name2, b->name2, a->c, b->c)});
      case K::NatRec: {
        std::string f1 = "$" + std::to_string(fresh_counter_++);
        std::string f2 = "$" + std::to_string(fresh_counter_++);
        DttPtr sa = subst(subst(a->c, a->name2, dvar(f1)), a->name3, dvar(f2));
        DttPtr sb = subst(subst(b->c, b->name2, dvar(f1)), b->name3, dvar(f2));
        return all({under(a->name, b->name, a->a, b->a), sub(a->b, b->b),
                    sub(sa, sb), sub(a->d, b->d)});
      }
      case K::ExElim: {
        std::string f1 = "$" + std::to_string(fresh_counter_++);
        std::string f2 = "$" + std::to_string(fresh_counter_++);
        DttPtr sa = subst(subst(a->b, a->name, dvar(f1)), a->name2, dvar(f2));
        DttPtr sb = subst(subst(b->b, b->name, dvar(f1)), b->name2, dvar(f2));
        return all({sub(a->a, b->a), sub(sa, sb)});
      }
      case K::TruncElim:
        return all({sub(a->a, b->a), under(a->name, b->name, a->b, b->b)});
      case K::IdPeel:
        return all({under(a->name, b->name, a->a, b->a), sub(a->b, b->b),
                    sub(a->c, b->c)});
      case K::FamApp: {
        if (a->args.size() != b->args.size()) return false;
        auto h = sub(a->a, b->a);
        if (!h.ok() || !h.value()) return h;
        for (std::size_t i = 0; i < a->args.size(); i++) {
          auto r = sub(a->args[i], b->args[i]);
          if (!r.ok() || !r.value()) return r;
        }
        return true;
      }
      default:
        return all({sub(a->a, b->a), sub(a->b, b->b), sub(a->c, b->c),
                    sub(a->d, b->d)});
    }
  }

  // Classification doubles as type-formation checking: a type is well
  // formed exactly when it classifies.
  Result<Sort> classify(const Ctx& ctx, const DttPtr& ty) {
    using K = DttExpr::Kind;
    bool mltt = mode_ == SortMode::MLTT;
    switch (ty->kind) {
      case K::Nat:
      case K::Empty:
      case K::Unit:
        return Sort::Set;
      case K::FalseP: return mltt ? Sort::Set : Sort::PropS;
      case K::PowUnit:
        if (mode_ != SortMode::EMTT)
          return diag("pow1 is only available in emtt mode",
                      "mode-unavailable");
        return Sort::Coll;
      case K::Pi: {
        auto sa = classify(ctx, ty->a);
        if (!sa.ok()) return sa;
        if (!sort_leq(sa.value(), Sort::Set))
          return diag("pi domain " + show(ty->a) + " has sort " +
                          show_sort(sa.value()) +
                          "; function domains must be sets",
                      "sort-violation");
        auto [x, body] = open_binder(ty->name, ty->b, ty->a);
        auto sb = classify(ctx.bind(x, ty->a), body);
        if (!sb.ok()) return sb;
        if (mltt) return Sort::Set;
        if (sort_leq(sb.value(), Sort::Set)) return Sort::Set;
        return Sort::Coll;
      }
      case K::Sigma: {
        auto sa = classify(ctx, ty->a);
        if (!sa.ok()) return sa;
        auto [x, body] = open_binder(ty->name, ty->b, ty->a);
        auto sb = classify(ctx.bind(x, ty->a), body);
        if (!sb.ok()) return sb;
        if (mltt) return Sort::Set;
        if (sort_leq(sa.value(), Sort::Set) && sort_leq(sb.value(), Sort::Set))
          return Sort::Set;
        return Sort::Coll;
      }
      case K::Sum: {
        auto sa = classify(ctx, ty->a);
        if (!sa.ok()) return sa;
        auto sb = classify(ctx, ty->b);
        if (!sb.ok()) return sb;
        if (!mltt && (!sort_leq(sa.value(), Sort::Set) ||
                      !sort_leq(sb.value(), Sort::Set)))
          return diag("disjoint sum needs set components", "sort-violation");
        return Sort::Set;
      }
      case K::Id:
      case K::EqP: {
        auto sa = classify(ctx, ty->a);
        if (!sa.ok()) return sa;
        auto l = check(ctx, ty->b, ty->a);
        if (!l.ok()) return l.error();
        auto r = check(ctx, ty->c, ty->a);
        if (!r.ok()) return r.error();
        if (mltt) return Sort::Set;
        return sort_leq(sa.value(), Sort::Set) ? Sort::PropS : Sort::Prop;
      }
      case K::ExistsP:
      case K::ForallP: {
        auto sa = classify(ctx, ty->a);
        if (!sa.ok()) return sa;
        auto [x, body] = open_binder(ty->name, ty->b, ty->a);
        auto sb = classify(ctx.bind(x, ty->a), body);
        if (!sb.ok()) return sb;
        if (mltt) return Sort::Set;
        if (!is_prop(sb.value()))
          return diag("body of a propositional quantifier must be a "
                      "proposition; got sort " +
                          show_sort(sb.value()),
                      "sort-violation");
        if (sort_leq(sa.value(), Sort::Set) && sb.value() == Sort::PropS)
          return Sort::PropS;
        return Sort::Prop;
      }
      case K::ImpP:
      case K::AndP:
      case K::OrP: {
        auto sa = classify(ctx, ty->a);
        if (!sa.ok()) return sa;
        auto sb = classify(ctx, ty->b);
        if (!sb.ok()) return sb;
        if (mltt) return Sort::Set;
        if (!is_prop(sa.value()) || !is_prop(sb.value()))
          return diag("propositional connective applied to sort " +
                          show_sort(is_prop(sa.value()) ? sb.value()
                                                        : sa.value()),
                      "sort-violation");
        return (sa.value() == Sort::PropS && sb.value() == Sort::PropS)
                   ? Sort::PropS
                   : Sort::Prop;
      }
      case K::Trunc: {
        auto sa = classify(ctx, ty->a);
        if (!sa.ok()) return sa;
        if (mltt) return Sort::Set;
        return sort_leq(sa.value(), Sort::Set) ? Sort::PropS : Sort::Prop;
      }
      case K::NatCase: {
        if (!mltt)
          return diag("natcase (large elimination) is only available in "
                      "mltt mode",
                      "mode-unavailable");
        auto s = check(ctx, ty->a, nat());
        if (!s.ok()) return s.error();
        auto sb = classify(ctx, ty->b);
        if (!sb.ok()) return sb;
        auto sc = classify(ctx, ty->c);
        if (!sc.ok()) return sc;
        return Sort::Set;
      }
      case K::Var:
        return classify_family(ctx, ty, {});
      case K::FamApp:
        return classify_family(ctx, ty->a, ty->args);
      default:
        return diag(show(ty) + " is not a type expression", "sort-violation");
    }
  }

  // check e against type T (already known to classify), bidirectionally.
  CheckResult check(const Ctx& ctx, const DttPtr& e, const DttPtr& goal0) {
    using K = DttExpr::Kind;
    auto wg = whnf(goal0);
    if (!wg.ok()) return wg.error();
    const DttPtr goal = wg.value();
    bool mltt = mode_ == SortMode::MLTT;
    switch (e->kind) {
      case K::Lambda: {
        if (goal->kind == K::Pi || goal->kind == K::ForallP) {
          auto [x, body] = open_binder(e->name, e->a, goal);
          DttPtr body_goal =
              x == goal->name ? goal->b : subst(goal->b, goal->name, dvar(x));
          return check(ctx.bind(x, goal->a), body, body_goal);
        }
        if (goal->kind == K::ImpP) {
          auto [x, body] = open_binder(e->name, e->a, goal);
          return check(ctx.bind(x, goal->a), body, goal->b);
        }
        return diag("lambda checked against non-function type " + show(goal),
                    "type");
      }
      case K::Pair: {
        if (goal->kind == K::Sigma) {
          auto l = check(ctx, e->a, goal->a);
          if (!l.ok()) return l;
          return check(ctx, e->b, subst(goal->b, goal->name, e->a));
        }
        if (goal->kind == K::AndP) {
          auto l = check(ctx, e->a, goal->a);
          if (!l.ok()) return l;
          return check(ctx, e->b, goal->b);
        }
        return diag("pair checked against " + show(goal) +
                        ", which is not a pair type",
                    "type");
      }
      case K::ExIntro: {
        if (goal->kind != K::ExistsP)
          return diag("exists-i checked against " + show(goal), "type");
        auto w = check(ctx, e->a, goal->a);
        if (!w.ok()) return w;
        return check(ctx, e->b, subst(goal->b, goal->name, e->a));
      }
      case K::Inl:
      case K::Inr: {
        if (goal->kind != K::Sum && goal->kind != K::OrP)
          return diag("injection checked against " + show(goal), "type");
        return check(ctx, e->a, e->kind == K::Inl ? goal->a : goal->b);
      }
      case K::TruncIntro: {
        if (goal->kind != K::Trunc)
          return diag("trunc-i checked against non-truncation " + show(goal),
                      "type");
        return check(ctx, e->a, goal->a);
      }
      case K::Refl: {
        if (goal->kind != K::Id)
          return diag("refl checked against " + show(goal) +
                          (goal->kind == K::EqP
                               ? " (eqp has no proof terms; emtt checks it "
                                 "at the formation level)"
                               : ""),
                      "type");
        auto same = convert(goal->b, goal->c);
        if (!same.ok()) return same.error();
        if (!same.value())
          return diag("refl: sides " + show(goal->b) + " and " +
                          show(goal->c) + " are not convertible",
                      "conversion");
        return check_ok();
      }
      case K::TrueCanon: {
        if (goal->kind == K::Unit) return check_ok();
        if (mode_ == SortMode::EMTT) {
          auto s = classify(ctx, goal);
          if (!s.ok()) return s.error();
          if (is_prop(s.value())) return check_ok();
        }
        return diag("true only inhabits unit" +
                        std::string(mode_ == SortMode::EMTT
                                        ? " and emtt propositions"
                                        : ""),
                    "type");
      }
      case K::PropLam: {
        if (goal->kind != K::Pi)
          return diag("plam checked against " + show(goal), "type");
        auto dom = convert(e->a, goal->a);
        if (!dom.ok()) return dom.error();
        if (!dom.value())
          return diag("plam domain " + show(e->a) +
                          " does not match " + show(goal->a),
                      "conversion");
        auto [x, body] = open_binder(e->name, e->b, goal);
        auto cod = whnf(x == goal->name
                            ? goal->b
                            : subst(goal->b, goal->name, dvar(x)));
        if (!cod.ok()) return cod.error();
        if (cod.value()->kind != K::PowUnit)
          return diag("plam must target pow1", "type");
        if (mode_ != SortMode::EMTT)
          return diag("plam is only available in emtt mode",
                      "mode-unavailable");
        auto s = classify(ctx.bind(x, e->a), body);
        if (!s.ok()) return s.error();
        if (s.value() != Sort::PropS)
          return diag("plam body must be a small proposition; got sort " +
                          show_sort(s.value()),
                      "sort-violation");
        return check_ok();
      }
      case K::Case: {
        auto st = infer(ctx, e->a);
        if (!st.ok()) return st.error();
        auto sw = whnf(st.value());
        if (!sw.ok()) return sw.error();
        const DttPtr& scrut_ty = sw.value();
        if (scrut_ty->kind != K::Sum && scrut_ty->kind != K::OrP)
          return diag("case scrutinee has type " + show(scrut_ty) +
                          ", not a sum",
                      "type");
        if (scrut_ty->kind == K::OrP && !mltt) {
          auto s = classify(ctx, goal);
          if (!s.ok()) return s.error();
          if (!is_prop(s.value()))
            return diag("sort-violation: case on the proposition " +
                            show(scrut_ty) + " towards a motive of sort " +
                            show_sort(s.value()) +
                            "; elimination rules for propositions act only "
                            "towards propositions",
                        "sort-violation");
        }
        auto [xl, lbody] = open_binder(e->name, e->b, scrut_ty, goal);
        auto l = check(ctx.bind(xl, scrut_ty->a), lbody, goal);
        if (!l.ok()) return l;
        auto [xr, rbody] = open_binder(e->name2, e->c, scrut_ty, goal);
        return check(ctx.bind(xr, scrut_ty->b), rbody, goal);
      }
      case K::ExElim: {
        auto st = infer(ctx, e->a);
        if (!st.ok()) return st.error();
        auto sw = whnf(st.value());
        if (!sw.ok()) return sw.error();
        const DttPtr& scrut_ty = sw.value();
        if (scrut_ty->kind != K::ExistsP)
          return diag("exists-e scrutinee has type " + show(scrut_ty) +
                          ", not an existential proposition",
                      "type");
        auto s = classify(ctx, goal);
        if (!s.ok()) return s.error();
        if (!is_prop(s.value()))
          return diag("sort-violation: exists-e towards a motive of sort " +
                          show_sort(s.value()) +
                          "; elimination rules for propositions act only "
                          "towards propositions",
                      "sort-violation");
        auto [x, body1] = open_binder(e->name, e->b, scrut_ty, goal);
        DttPtr opened = x == scrut_ty->name
                            ? scrut_ty->b
                            : subst(scrut_ty->b, scrut_ty->name, dvar(x));
        auto [h, body2] = open_binder(e->name2, body1, opened, goal);
        return check(ctx.bind(x, scrut_ty->a).bind(h, opened), body2, goal);
      }
      case K::TruncElim: {
        auto st = infer(ctx, e->a);
        if (!st.ok()) return st.error();
        auto sw = whnf(st.value());
        if (!sw.ok()) return sw.error();
        const DttPtr& scrut_ty = sw.value();
        if (scrut_ty->kind != K::Trunc)
          return diag("trunc-e scrutinee has type " + show(scrut_ty) +
                          ", not a truncation",
                      "type");
        auto s = classify(ctx, goal);
        if (!s.ok()) return s.error();
        if (!is_prop(s.value()))
          return diag("sort-violation: trunc-e eliminates a truncation "
                      "towards a motive of sort " +
                          show_sort(s.value()) +
                          "; the motive of a truncation eliminator must be "
                          "a proposition",
                      "sort-violation");
        auto [x, body] = open_binder(e->name, e->b, scrut_ty, goal);
        return check(ctx.bind(x, scrut_ty->a), body, goal);
      }
      case K::Absurd: {
        auto st = infer(ctx, e->a);
        if (!st.ok()) return st.error();
        auto sw = whnf(st.value());
        if (!sw.ok()) return sw.error();
        if (sw.value()->kind == K::Empty) return check_ok();
        if (sw.value()->kind == K::FalseP) {
          auto s = classify(ctx, goal);
          if (!s.ok()) return s.error();
          if (!is_prop(s.value()))
            return diag("sort-violation: absurd on falsep towards a motive "
                        "of sort " +
                            show_sort(s.value()),
                        "sort-violation");
          return check_ok();
        }
        return diag("absurd scrutinee has type " + show(sw.value()),
                    "type");
      }
      default: {
        // Check a proposition against pow1: elements of the power of the
        // singleton are small propositions.
        if (goal->kind == K::PowUnit) {
          auto s = classify(ctx, e);
          if (!s.ok()) return s.error();
          if (s.value() == Sort::PropS) return check_ok();
          return diag("only small propositions inhabit pow1; got sort " +
                          show_sort(s.value()),
                      "sort-violation");
        }
        auto got = infer(ctx, e);
        if (!got.ok()) return got.error();
        auto same = convert(got.value(), goal);
        if (!same.ok()) return same.error();
        if (!same.value())
          return diag("type mismatch: term has type " + show(got.value()) +
                          ", expected " + show(goal),
                      "conversion");
        return check_ok();
      }
    }
  }

  Result<DttPtr> infer(const Ctx& ctx, const DttPtr& e) {
    using K = DttExpr::Kind;
    bool mltt = mode_ == SortMode::MLTT;
    switch (e->kind) {
      case K::Var: {
        const CtxEntry* ent = ctx.lookup(e->name);
        if (!ent) return diag("unbound variable " + e->name, "type");
        if (ent->kind == CtxEntry::Kind::Family)
          return diag("family variable " + e->name + " used as a term",
                      "type");
        return ent->type;
      }
      case K::Zero: return nat();
      case K::Succ: {
        auto a = check(ctx, e->a, nat());
        if (!a.ok()) return a.error();
        return nat();
      }
      case K::App: {
        auto f = infer(ctx, e->a);
        if (!f.ok()) return f;
        auto fw = whnf(f.value());
        if (!fw.ok()) return fw;
        const DttPtr& fty = fw.value();
        if (fty->kind == K::Pi || fty->kind == K::ForallP) {
          auto arg = check(ctx, e->b, fty->a);
          if (!arg.ok()) return arg.error();
          return subst(fty->b, fty->name, e->b);
        }
        if (fty->kind == K::ImpP) {
          auto arg = check(ctx, e->b, fty->a);
          if (!arg.ok()) return arg.error();
          return fty->b;
        }
        return diag("application of a term of type " + show(fty), "type");
      }
      case K::Fst:
      case K::Snd: {
        bool first = e->kind == K::Fst;
        auto p = infer(ctx, e->a);
        if (!p.ok()) return p;
        auto pw = whnf(p.value());
        if (!pw.ok()) return pw;
        const DttPtr& pty = pw.value();
        if (pty->kind == K::Sigma) {
          if (first) return pty->a;
          return subst(pty->b, pty->name, fst(e->a));
        }
        if (pty->kind == K::AndP && !mltt) return first ? pty->a : pty->b;
        if (pty->kind == K::ExistsP) {
          // The implicit motive of a projection out of an existential is
          // its witness set, which is not a proposition.
          auto ws = classify(ctx, pty->a);
          std::string sortName = ws.ok() ? show_sort(ws.value()) : "Set";
          return diag("sort-violation: " + std::string(first ? "fst" : "snd") +
                          " eliminates the proposition " + show(pty) +
                          " towards a motive of sort " + sortName +
                          "; elimination rules for propositions act only "
                          "towards propositions",
                      "sort-violation");
        }
        if (pty->kind == K::Trunc)
          return diag("sort-violation: " + std::string(first ? "fst" : "snd") +
                          " is not a truncation eliminator; use trunc-e "
                          "with a propositional motive",
                      "sort-violation");
        return diag("projection from a term of type " + show(pty), "type");
      }
      case K::NatRec: {
        auto ms = classify(ctx.bind(e->name, nat()), e->a);
        if (!ms.ok()) return ms.error();
        auto sc = check(ctx, e->d, nat());
        if (!sc.ok()) return sc.error();
        auto base = check(ctx, e->b, subst(e->a, e->name, zero()));
        if (!base.ok()) return base.error();
        if (e->name2 == e->name3)
          return diag("natrec step binders must be distinct", "type");
        DttPtr motive_scope = pi(e->name, nat(), e->a);
        std::string n = e->name2, ih = e->name3;
        DttPtr step_body = e->c;
        if (occurs_free(motive_scope, n)) {
          std::string z = fresh_internal();
          step_body = subst(step_body, n, dvar(z));
          n = z;
        }
        if (occurs_free(motive_scope, ih)) {
          std::string z = fresh_internal();
          step_body = subst(step_body, ih, dvar(z));
          ih = z;
        }
        Ctx inner =
            ctx.bind(n, nat()).bind(ih, subst(e->a, e->name, dvar(n)));
        auto step =
            check(inner, step_body, subst(e->a, e->name, succ_of(dvar(n))));
        if (!step.ok()) return step.error();
        return subst(e->a, e->name, e->d);
      }
      case K::IdPeel: {
        auto eq = infer(ctx, e->b);
        if (!eq.ok()) return eq;
        auto ew = whnf(eq.value());
        if (!ew.ok()) return ew;
        const DttPtr& ety = ew.value();
        if (ety->kind != K::Id)
          return diag("idpeel premise has type " + show(ety) +
                          ", not an identity type",
                      "type");
        auto [x, motive] = open_binder(e->name, e->a, ety->a);
        auto ms = classify(ctx.bind(x, ety->a), motive);
        if (!ms.ok()) return ms.error();
        if (!mltt && !is_prop(ms.value()))
          return diag("sort-violation: idpeel motive has sort " +
                          show_sort(ms.value()) +
                          "; the identity eliminator is restricted to "
                          "propositions in this mode",
                      "sort-violation");
        auto base = check(ctx, e->c, subst(motive, x, ety->b));
        if (!base.ok()) return base.error();
        return subst(motive, x, ety->c);
      }
      case K::Ann: {
        auto s = classify(ctx, e->b);
        if (!s.ok()) return s.error();
        auto c = check(ctx, e->a, e->b);
        if (!c.ok()) return c.error();
        return e->b;
      }
      case K::TrueCanon: return unit();
      default:
        return diag("cannot infer a type for " + show(e) +
                        "; annotate it with (the T ...)",
                    "type");
    }
  }

  std::size_t fuel() const { return fuel_; }

private:
  std::string fresh_internal() {
    return "$r" + std::to_string(fresh_counter_++);
  }

  // Renames a binder (and the body it scopes) when the preferred name
  // already occurs free in one of the surrounding expressions.
  std::pair<std::string, DttPtr> open_binder(const std::string& pref,
                                             const DttPtr& body,
                                             const DttPtr& s1,
                                             const DttPtr& s2 = nullptr) {
    bool clash = (s1 && occurs_free(s1, pref)) || (s2 && occurs_free(s2, pref));
    if (!clash) return {pref, body};
    std::string z = fresh_internal();
    return {z, subst(body, pref, dvar(z))};
  }

  Result<Sort> classify_family(const Ctx& ctx, const DttPtr& head,
                               const std::vector<DttPtr>& args) {
    using K = DttExpr::Kind;
    if (head->kind == K::PropLam) {
      if (args.empty())
        return diag("propositional function needs an argument to form a "
                    "type",
                    "type");
      auto a0 = check(ctx, args[0], head->a);
      if (!a0.ok()) return a0.error();
      DttPtr inst = subst(head->b, head->name, args[0]);
      if (args.size() == 1) return classify(ctx, inst);
      std::vector<DttPtr> rest(args.begin() + 1, args.end());
      return classify_family(ctx, inst, rest);
    }
    if (head->kind != K::Var)
      return diag(show(head) + " cannot head a type family", "type");
    const CtxEntry* ent = ctx.lookup(head->name);
    if (!ent) return diag("unbound type variable " + head->name, "type");
    if (ent->kind == CtxEntry::Kind::Family) {
      if (args.size() != ent->domains.size())
        return diag("family " + head->name + " expects " +
                        std::to_string(ent->domains.size()) +
                        " arguments, got " + std::to_string(args.size()),
                    "type");
      for (std::size_t i = 0; i < args.size(); i++) {
        auto c = check(ctx, args[i], ent->domains[i]);
        if (!c.ok()) return c.error();
      }
      if (mode_ == SortMode::MLTT) return Sort::Set;
      return ent->target;
    }
    // A term variable of type A1 -> ... -> pow1 applied to arguments is a
    // small proposition (emtt only).
    DttPtr ty = ent->type;
    for (std::size_t i = 0; i < args.size(); i++) {
      auto tw = whnf(ty);
      if (!tw.ok()) return tw.error();
      if (tw.value()->kind != K::Pi)
        return diag("variable " + head->name + " is over-applied as a type "
                    "family",
                    "type");
      auto c = check(ctx, args[i], tw.value()->a);
      if (!c.ok()) return c.error();
      ty = subst(tw.value()->b, tw.value()->name, args[i]);
    }
    auto tw = whnf(ty);
    if (!tw.ok()) return tw.error();
    if (tw.value()->kind == K::PowUnit) {
      if (mode_ != SortMode::EMTT)
        return diag("pow1-valued predicates are only available in emtt mode",
                    "mode-unavailable");
      return Sort::PropS;
    }
    return diag("variable " + head->name + " of type " + show(tw.value()) +
                    " is not a type family",
                "type");
  }

  SortMode mode_;
  std::size_t fuel_;
  unsigned long fresh_counter_ = 0;
};

// Public judgements; MLTT mode desugars the proposition formers first.
inline Result<Sort> classify(SortMode mode, const Ctx& ctx, const DttPtr& ty,
                             std::size_t fuel = kDefaultDttFuel) {
  TypeChecker tc(mode, fuel);
  if (mode == SortMode::MLTT) return tc.classify(ctx, desugar(ty));
  return tc.classify(ctx, ty);
}

inline CheckResult check(SortMode mode, const Ctx& ctx, const DttPtr& e,
                         const DttPtr& ty, std::size_t fuel = kDefaultDttFuel) {
  TypeChecker tc(mode, fuel);
  DttPtr e2 = e, ty2 = ty;
  if (mode == SortMode::MLTT) {
    e2 = desugar(e);
    ty2 = desugar(ty);
  }
  auto s = tc.classify(ctx, ty2);
  if (!s.ok()) return s.error();
  return tc.check(ctx, e2, ty2);
}

inline Result<bool> convertible(SortMode mode, const DttPtr& a, const DttPtr& b,
                                std::size_t fuel = kDefaultDttFuel) {
  TypeChecker tc(mode, fuel);
  if (mode == SortMode::MLTT) return tc.convert(desugar(a), desugar(b));
  return tc.convert(a, b);
}

// The law of excluded middle as a type: propositions-as-types in MLTT mode,
// and only for propositions in MTT/EMTT mode.
inline Result<DttPtr> lem_type(SortMode mode, const Ctx& ctx, const DttPtr& A,
                               std::size_t fuel = kDefaultDttFuel) {
  TypeChecker tc(mode, fuel);
  if (mode == SortMode::MLTT) {
    DttPtr A2 = desugar(A);
    auto s = tc.classify(ctx, A2);
    if (!s.ok()) return s.error();
    return sum(A2, arrow(A2, empty()));
  }
  auto s = tc.classify(ctx, A);
  if (!s.ok()) return s;
  if (!is_prop(s.value()))
    return diag("lem in this mode is restricted to propositions; " + show(A) +
                    " has sort " + show_sort(s.value()),
                "sort-violation");
  return orp(A, impp(A, falsep()));
}

} // namespace predicheck::dtt
