#pragma once

// Interface hierarchy, type-argument propagation and member tables.
//
// Inside a resolved table every type-parameter reference is qualified by its
// owner, `Owner#Param`, so substitutions composed along extends edges can
// never capture a name. `to_string` prints the bare parameter name.

#include <map>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "ifcheck/diagnostic.hpp"
#include "ifcheck/syntax.hpp"

namespace ifcheck {

enum class Mode { Java8, Extended };

std::string_view mode_name(Mode mode);
std::optional<Mode> parse_mode(std::string_view text);

using TypeArgs = std::vector<TypeRef>;

std::string to_string(const TypeArgs& args);  // "<A,B>", or "" when empty

/// Finite map from type-parameter names to types.
struct Substitution {
  std::map<std::string, TypeRef> bindings;

  /// Binds `params[i]` to `args[i]`; the spans must have equal length.
  static Substitution bind(std::span<const std::string> params, std::span<const TypeRef> args);
};

TypeRef substitute(const TypeRef& t, const Substitution& s);
TypeArgs substitute(const TypeArgs& ts, const Substitution& s);

/// The substitution equivalent to applying `first`, then `then`.
Substitution compose(const Substitution& first, const Substitution& then);

/// An interface applied to arguments expressed in the subject's vocabulary.
struct Instantiation {
  std::string interfaceName;
  TypeArgs args;

  std::string str() const;  // e.g. "AdditiveGroup<Vector>"
  friend bool operator==(const Instantiation&, const Instantiation&) = default;
};

/// Distinct argument tuples reaching each ancestor, keyed in first-encounter
/// depth-first order.
struct InstantiationMap {
  std::vector<std::pair<std::string, std::vector<TypeArgs>>> entries;

  const std::vector<TypeArgs>* find(std::string_view ancestor) const;
  bool java8_valid() const;
  friend bool operator==(const InstantiationMap&, const InstantiationMap&) = default;
};

struct MemberSignature {
  std::string name;
  TypeArgs paramTypes;
  TypeRef returnType;
  std::vector<std::string> throwsSet;
  Instantiation origin;

  /// `name(P1, P2) -> R[ throws E]  [from Origin<Args>]`
  std::string str() const;
  friend bool operator==(const MemberSignature&, const MemberSignature&) = default;
};

struct InterfaceEntry {
  InterfaceDecl decl;  // parameter references qualified
  std::shared_ptr<const CompilationUnit> unit;
  bool broken = false;  // sits on or above a hierarchy error
};

class InterfaceTable {
 public:
  const InterfaceEntry* find(std::string_view name) const;
  const InterfaceEntry& at(std::string_view name) const;
  std::vector<std::string> names() const;
  std::size_t size() const { return entries_.size(); }

 private:
  friend struct HierarchyBuilder;
  std::map<std::string, InterfaceEntry, std::less<>> entries_;
};

struct HierarchyResult {
  InterfaceTable table;
  std::vector<Diagnostic> diagnostics;
};

/// Resolves names across units. Errors: duplicate interface, cyclic
/// inheritance, unknown super-interface, wrong number of type arguments, and
/// redeclarations inside a single interface.
HierarchyResult build_hierarchy(std::span<const CompilationUnit> units);

struct CheckReport {
  std::string interfaceName;
  std::vector<Diagnostic> diagnostics;
  std::vector<MemberSignature> members;
  Mode mode = Mode::Java8;

  int error_count() const;
};

InstantiationMap collect_instantiations(std::string_view subject, const InterfaceTable& table);

/// Java 8 rules: an ancestor reached at two argument tuples is an error.
/// Reports for a broken subject are empty; its errors belong to the hierarchy.
CheckReport check_java8(std::string_view subject, const InterfaceTable& table);

/// Multiple instantiations accepted; same-signature members that disagree on
/// the return type become notes.
CheckReport check_extended(std::string_view subject, const InterfaceTable& table);

CheckReport check_interface(std::string_view subject, const InterfaceTable& table, Mode mode);

std::vector<Diagnostic> check_overrides(std::string_view subject, const InterfaceTable& table);

/// Own methods first, then inherited ones in depth-first encounter order.
/// Identical signatures are coalesced onto the first origin.
std::vector<MemberSignature> merge_members(std::string_view subject, const InterfaceTable& table);

}  // namespace ifcheck
