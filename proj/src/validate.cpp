#include "diagnostics.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <string>
#include <vector>

namespace cdalloy {
namespace {

std::string join(const std::vector<std::string>& parts, const char* sep) {
  std::string out;
  for (size_t i = 0; i < parts.size(); ++i) {
    if (i) out += sep;
    out += parts[i];
  }
  return out;
}

enum class NameKind { Class, Interface, Enum };

// Tarjan SCC over an inheritance graph given as index adjacency. Returns the
// components with more than one node, ordered by their smallest node index.
std::vector<std::vector<int>> cyclic_components(const std::vector<std::vector<int>>& adj) {
  int n = static_cast<int>(adj.size());
  std::vector<int> index(n, -1), low(n, 0), stack;
  std::vector<bool> on_stack(n, false);
  std::vector<std::vector<int>> sccs;
  int counter = 0;

  // iterative Tarjan
  struct Frame { int node; size_t edge; };
  for (int start = 0; start < n; ++start) {
    if (index[start] != -1) continue;
    std::vector<Frame> frames{{start, 0}};
    index[start] = low[start] = counter++;
    stack.push_back(start);
    on_stack[start] = true;
    while (!frames.empty()) {
      Frame& f = frames.back();
      if (f.edge < adj[f.node].size()) {
        int w = adj[f.node][f.edge++];
        if (index[w] == -1) {
          index[w] = low[w] = counter++;
          stack.push_back(w);
          on_stack[w] = true;
          frames.push_back({w, 0});
        } else if (on_stack[w]) {
          low[f.node] = std::min(low[f.node], index[w]);
        }
      } else {
        if (low[f.node] == index[f.node]) {
          std::vector<int> comp;
          int w;
          do {
            w = stack.back();
            stack.pop_back();
            on_stack[w] = false;
            comp.push_back(w);
          } while (w != f.node);
          if (comp.size() > 1) {
            std::sort(comp.begin(), comp.end());
            sccs.push_back(std::move(comp));
          }
        }
        int done = f.node;
        frames.pop_back();
        if (!frames.empty())
          low[frames.back().node] = std::min(low[frames.back().node], low[done]);
      }
    }
  }
  std::sort(sccs.begin(), sccs.end(),
            [](const auto& a, const auto& b) { return a.front() < b.front(); });
  return sccs;
}

struct Contribution {
  enum class Kind { Attr, Role };
  Kind kind;
  TypeRef attr_type;   // attrs only
  int assoc_index = -1;  // roles only
  int end = 0;           // 0 = field on left class, 1 = field on right class
  std::string origin;    // declaring class/interface

  bool same_field_as(const Contribution& o) const {
    if (kind != o.kind) return false;
    if (kind == Kind::Attr) return attr_type == o.attr_type;
    return assoc_index == o.assoc_index && end == o.end;
  }
};

}  // namespace

std::vector<Diagnostic> validate(const ClassDiagram& cd) {
  std::vector<Diagnostic> out;
  auto report = [&out](const char* code, std::string element, std::string message) {
    out.push_back(Diagnostic{code, std::move(element), std::move(message)});
  };

  // --- type namespace -------------------------------------------------
  std::map<std::string, NameKind, std::less<>> names;
  auto declare = [&](const std::string& n, NameKind kind, const char* what) {
    if (primitive_from_name(n)) {
      report(diag::kReservedTypeName, n,
             std::string(what) + " '" + n + "' shadows a primitive type");
      return;
    }
    auto [it, inserted] = names.emplace(n, kind);
    (void)it;
    if (!inserted)
      report(diag::kDuplicateTypeName, n,
             std::string(what) + " '" + n + "' is declared more than once");
  };
  for (const auto& c : cd.classes) declare(c.name, NameKind::Class, "class");
  for (const auto& i : cd.interfaces) declare(i.name, NameKind::Interface, "interface");
  for (const auto& e : cd.enums) declare(e.name, NameKind::Enum, "enum");

  auto kind_of = [&names](std::string_view n) -> const NameKind* {
    auto it = names.find(n);
    return it == names.end() ? nullptr : &it->second;
  };

  // --- per-declaration checks ------------------------------------------
  bool hierarchy_clean = true;
  for (const auto& c : cd.classes) {
    std::set<std::string> attr_names;
    for (const auto& a : c.attributes) {
      if (!attr_names.insert(a.name).second) {
        report(diag::kDuplicateAttribute, c.name + "." + a.name,
               "attribute '" + a.name + "' declared twice in class '" + c.name + "'");
        hierarchy_clean = false;
      }
      if (!a.type.is_primitive() && !kind_of(a.type.name)) {
        report(diag::kUnresolvedType, c.name + "." + a.name,
               "attribute type '" + a.type.name + "' is not declared");
        hierarchy_clean = false;
      }
    }
    for (const auto& s : c.superclasses) {
      if (s == c.name) {
        report(diag::kSelfInheritance, c.name,
               "class '" + c.name + "' lists itself as a superclass");
        hierarchy_clean = false;
      } else if (const NameKind* k = kind_of(s)) {
        if (*k != NameKind::Class) {
          report(diag::kInvalidSupertype, c.name,
                 "'" + s + "' extended by class '" + c.name + "' is not a class");
          hierarchy_clean = false;
        }
      } else {
        report(diag::kUnresolvedType, c.name,
               "superclass '" + s + "' of '" + c.name + "' is not declared");
        hierarchy_clean = false;
      }
    }
    for (const auto& i : c.interfaces) {
      if (const NameKind* k = kind_of(i)) {
        if (*k != NameKind::Interface) {
          report(diag::kInvalidInterface, c.name,
                 "'" + i + "' implemented by class '" + c.name + "' is not an interface");
          hierarchy_clean = false;
        }
      } else {
        report(diag::kUnresolvedType, c.name,
               "interface '" + i + "' implemented by '" + c.name + "' is not declared");
        hierarchy_clean = false;
      }
    }
  }

  for (const auto& i : cd.interfaces) {
    for (const auto& s : i.superinterfaces) {
      if (s == i.name) {
        report(diag::kSelfInheritance, i.name,
               "interface '" + i.name + "' lists itself as a superinterface");
        hierarchy_clean = false;
      } else if (const NameKind* k = kind_of(s)) {
        if (*k != NameKind::Interface) {
          report(diag::kInvalidSupertype, i.name,
                 "'" + s + "' extended by interface '" + i.name + "' is not an interface");
          hierarchy_clean = false;
        }
      } else {
        report(diag::kUnresolvedType, i.name,
               "superinterface '" + s + "' of '" + i.name + "' is not declared");
        hierarchy_clean = false;
      }
    }
  }

  for (const auto& e : cd.enums) {
    if (e.literals.empty())
      report(diag::kEmptyEnum, e.name, "enum '" + e.name + "' has no literals");
    std::set<std::string> lits;
    for (const auto& l : e.literals)
      if (!lits.insert(l).second)
        report(diag::kDuplicateEnumLiteral, e.name + "." + l,
               "literal '" + l + "' repeated in enum '" + e.name + "'");
  }

  // --- associations ----------------------------------------------------
  std::vector<bool> assoc_usable(cd.associations.size(), true);
  for (size_t ai = 0; ai < cd.associations.size(); ++ai) {
    const AssocDecl& a = cd.associations[ai];
    std::string label = a.left_class + "--" + a.right_class;
    auto check_end = [&](const std::string& cls) {
      if (const NameKind* k = kind_of(cls)) {
        if (*k == NameKind::Enum) {
          report(diag::kInvalidAssocEnd, label,
                 "association end '" + cls + "' is an enum");
          assoc_usable[ai] = false;
        }
      } else {
        report(primitive_from_name(cls) ? diag::kInvalidAssocEnd : diag::kUnresolvedType,
               label, "association end '" + cls + "' is not a class or interface");
        assoc_usable[ai] = false;
      }
    };
    check_end(a.left_class);
    check_end(a.right_class);

    auto check_mult = [&](const Multiplicity& m, const char* side) {
      if (m.upper.has_value() && (*m.upper == 0 || m.lower > *m.upper))
        report(diag::kInvalidMultiplicity, label,
               std::string("invalid ") + side + " multiplicity on " + label);
    };
    check_mult(a.left_mult, "left");
    check_mult(a.right_mult, "right");

    if (a.navigable_right() && a.right_role.empty()) {
      report(diag::kMissingRoleName, label, "navigable right end of " + label + " has no role name");
      assoc_usable[ai] = false;
    }
    if (a.navigable_left() && a.left_role.empty()) {
      report(diag::kMissingRoleName, label, "navigable left end of " + label + " has no role name");
      assoc_usable[ai] = false;
    }
    if (a.is_composition && a.direction == AssocDirection::RightToLeft)
      report(diag::kInvalidComposition, label,
             "composition " + label + " must be navigable from the whole to the part");
  }

  // --- inheritance cycles ----------------------------------------------
  if (hierarchy_clean) {
    auto scc_check = [&](auto&& decls, auto&& supers_of, const char* what) {
      std::map<std::string, int, std::less<>> idx;
      for (size_t i = 0; i < decls.size(); ++i) idx.emplace(decls[i].name, static_cast<int>(i));
      std::vector<std::vector<int>> adj(decls.size());
      for (size_t i = 0; i < decls.size(); ++i)
        for (const auto& s : supers_of(decls[i]))
          if (auto it = idx.find(s); it != idx.end()) adj[i].push_back(it->second);
      for (const auto& comp : cyclic_components(adj)) {
        std::vector<std::string> members;
        for (int i : comp) members.push_back(decls[i].name);
        report(diag::kCycleInInheritance, members.front(),
               std::string(what) + " inheritance cycle: " + join(members, " -> "));
        hierarchy_clean = false;
      }
    };
    scc_check(cd.classes, [](const ClassDecl& c) -> const std::vector<std::string>& {
      return c.superclasses;
    }, "class");
    scc_check(cd.interfaces, [](const InterfaceDecl& i) -> const std::vector<std::string>& {
      return i.superinterfaces;
    }, "interface");
  }

  // --- flattened field-name uniqueness ----------------------------------
  // Only meaningful once names resolve and the hierarchy is acyclic.
  if (hierarchy_clean) {
    for (const auto& c : cd.classes) {
      // closure of supertypes: the class, its transitive superclasses, and
      // every interface (with superinterfaces) implemented along the way
      std::set<std::string> closure;
      std::vector<std::string> work{c.name};
      while (!work.empty()) {
        std::string t = work.back();
        work.pop_back();
        if (!closure.insert(t).second) continue;
        if (const ClassDecl* cc = cd.find_class(t)) {
          for (const auto& s : cc->superclasses) work.push_back(s);
          for (const auto& s : cc->interfaces) work.push_back(s);
        } else if (const InterfaceDecl* ii = cd.find_interface(t)) {
          for (const auto& s : ii->superinterfaces) work.push_back(s);
        }
      }

      std::map<std::string, std::vector<Contribution>> fields;
      for (const auto& t : closure) {
        if (const ClassDecl* cc = cd.find_class(t)) {
          for (const auto& a : cc->attributes)
            fields[a.name].push_back({Contribution::Kind::Attr, a.type, -1, 0, t});
        }
        for (size_t ai = 0; ai < cd.associations.size(); ++ai) {
          if (!assoc_usable[ai]) continue;
          const AssocDecl& a = cd.associations[ai];
          if (a.left_class == t && a.navigable_right())
            fields[a.right_role].push_back(
                {Contribution::Kind::Role, {}, static_cast<int>(ai), 0, t});
          if (a.right_class == t && a.navigable_left())
            fields[a.left_role].push_back(
                {Contribution::Kind::Role, {}, static_cast<int>(ai), 1, t});
        }
      }

      for (const auto& [fname, contribs] : fields) {
        bool conflict = false;
        for (size_t i = 1; i < contribs.size(); ++i)
          if (!contribs[i].same_field_as(contribs[0])) conflict = true;
        if (!conflict) continue;
        bool all_direct = std::all_of(contribs.begin(), contribs.end(),
                                      [&](const Contribution& k) { return k.origin == c.name; });
        report(all_direct ? diag::kDuplicateField : diag::kConflictingInheritedField,
               c.name + "." + fname,
               "field '" + fname + "' of class '" + c.name +
                   "' has conflicting declarations");
      }
    }
  }

  return out;
}

}  // namespace cdalloy
