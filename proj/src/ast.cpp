#include "ast.hpp"

namespace cdalloy {

const char* to_string(Primitive p) {
  switch (p) {
    case Primitive::Int: return "int";
    case Primitive::Boolean: return "boolean";
    case Primitive::String: return "String";
  }
  return "?";
}

std::optional<Primitive> primitive_from_name(std::string_view name) {
  if (name == "int") return Primitive::Int;
  if (name == "boolean") return Primitive::Boolean;
  if (name == "String") return Primitive::String;
  return std::nullopt;
}

const ClassDecl* ClassDiagram::find_class(std::string_view n) const {
  for (const auto& c : classes)
    if (c.name == n) return &c;
  return nullptr;
}

const InterfaceDecl* ClassDiagram::find_interface(std::string_view n) const {
  for (const auto& i : interfaces)
    if (i.name == n) return &i;
  return nullptr;
}

const EnumDecl* ClassDiagram::find_enum(std::string_view n) const {
  for (const auto& e : enums)
    if (e.name == n) return &e;
  return nullptr;
}

}  // namespace cdalloy
