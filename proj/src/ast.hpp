#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace cdalloy {

// Syntactic model of a class diagram. All types are plain values; nothing
// here is resolved or checked -- that is validate()'s job.

enum class Primitive { Int, Boolean, String };

const char* to_string(Primitive p);
std::optional<Primitive> primitive_from_name(std::string_view name);

// Either a primitive or a named reference to a class, interface, or enum of
// the owning diagram. Which of the three a name denotes is only known after
// resolution against the diagram.
struct TypeRef {
  std::optional<Primitive> primitive;
  std::string name;  // empty iff primitive is set

  bool is_primitive() const { return primitive.has_value(); }

  static TypeRef prim(Primitive p) { return TypeRef{p, {}}; }
  static TypeRef named(std::string n) { return TypeRef{std::nullopt, std::move(n)}; }

  bool operator==(const TypeRef&) const = default;
};

struct Attribute {
  std::string name;
  TypeRef type;

  bool operator==(const Attribute&) const = default;
};

struct ClassDecl {
  std::string name;
  bool is_abstract = false;
  std::vector<std::string> superclasses;  // multiple inheritance allowed
  std::vector<std::string> interfaces;
  std::vector<Attribute> attributes;

  bool operator==(const ClassDecl&) const = default;
};

struct InterfaceDecl {
  std::string name;
  std::vector<std::string> superinterfaces;

  bool operator==(const InterfaceDecl&) const = default;
};

struct EnumDecl {
  std::string name;
  std::vector<std::string> literals;  // nonempty, pairwise distinct

  bool operator==(const EnumDecl&) const = default;
};

// lower..upper with upper == nullopt meaning unbounded (*).
struct Multiplicity {
  unsigned lower = 0;
  std::optional<unsigned> upper;

  bool unbounded() const { return !upper.has_value(); }

  static Multiplicity any() { return {0, std::nullopt}; }
  static Multiplicity exactly(unsigned n) { return {n, n}; }
  static Multiplicity range(unsigned lo, unsigned hi) { return {lo, hi}; }
  static Multiplicity at_least(unsigned lo) { return {lo, std::nullopt}; }

  bool operator==(const Multiplicity&) const = default;
};

enum class AssocDirection { LeftToRight, RightToLeft, Bidirectional };

// The role written at an end names the field through which the *other* end's
// objects reach this end, and the multiplicity written at an end bounds how
// many of this end's objects each object of the other end reaches.
struct AssocDecl {
  std::string left_class;
  std::string left_role;
  Multiplicity left_mult = Multiplicity::any();
  std::string right_class;
  std::string right_role;
  Multiplicity right_mult = Multiplicity::any();
  AssocDirection direction = AssocDirection::Bidirectional;
  bool is_composition = false;  // left end is the whole, right end the part

  bool navigable_right() const { return direction != AssocDirection::RightToLeft; }
  bool navigable_left() const { return direction != AssocDirection::LeftToRight; }

  bool operator==(const AssocDecl&) const = default;
};

struct ClassDiagram {
  std::string name;
  std::vector<ClassDecl> classes;
  std::vector<InterfaceDecl> interfaces;
  std::vector<EnumDecl> enums;
  std::vector<AssocDecl> associations;

  const ClassDecl* find_class(std::string_view n) const;
  const InterfaceDecl* find_interface(std::string_view n) const;
  const EnumDecl* find_enum(std::string_view n) const;

  bool operator==(const ClassDiagram&) const = default;
};

}  // namespace cdalloy
