#pragma once

#include <memory>
#include <string>

namespace predicheck::hao {

// The finite type structure: N, sigma -> tau, sigma * tau.
struct FiniteType;
using TypePtr = std::shared_ptr<const FiniteType>;

struct FiniteType {
  enum class Kind { Nat, Arrow, Product } kind = Kind::Nat;
  TypePtr left;   // domain / first factor
  TypePtr right;  // codomain / second factor
};

inline TypePtr nat_type() {
  static const TypePtr n = std::make_shared<FiniteType>();
  return n;
}

inline TypePtr arrow(TypePtr dom, TypePtr cod) {
  auto t = std::make_shared<FiniteType>();
  t->kind = FiniteType::Kind::Arrow;
  t->left = std::move(dom);
  t->right = std::move(cod);
  return TypePtr(t);
}

inline TypePtr product(TypePtr l, TypePtr r) {
  auto t = std::make_shared<FiniteType>();
  t->kind = FiniteType::Kind::Product;
  t->left = std::move(l);
  t->right = std::move(r);
  return TypePtr(t);
}

inline bool type_equal(const TypePtr& a, const TypePtr& b) {
  if (a.get() == b.get()) return true;
  if (!a || !b) return false;
  if (a->kind != b->kind) return false;
  if (a->kind == FiniteType::Kind::Nat) return true;
  return type_equal(a->left, b->left) && type_equal(a->right, b->right);
}

inline std::string show_type(const TypePtr& t) {
  switch (t->kind) {
    case FiniteType::Kind::Nat: return "N";
    case FiniteType::Kind::Arrow:
      return "(-> " + show_type(t->left) + " " + show_type(t->right) + ")";
    case FiniteType::Kind::Product:
      return "(* " + show_type(t->left) + " " + show_type(t->right) + ")";
  }
  return "?";
}

} // namespace predicheck::hao
