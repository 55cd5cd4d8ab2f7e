#include "ifcheck/semantics.hpp"

#include <algorithm>
#include <functional>
#include <set>
#include <stdexcept>
#include <unordered_map>

namespace ifcheck {

std::string_view mode_name(Mode mode) { return mode == Mode::Java8 ? "java8" : "extended"; }

std::optional<Mode> parse_mode(std::string_view text) {
  if (text == "java8") return Mode::Java8;
  if (text == "extended") return Mode::Extended;
  return std::nullopt;
}

std::string to_string(const TypeArgs& args) {
  if (args.empty()) return {};
  std::string out = "<";
  for (std::size_t i = 0; i < args.size(); ++i) {
    if (i) out += ',';
    out += to_string(args[i]);
  }
  return out + ">";
}

// -- substitution ---------------------------------------------------------

Substitution Substitution::bind(std::span<const std::string> params,
                                std::span<const TypeRef> args) {
  if (params.size() != args.size()) {
    throw std::invalid_argument("substitution arity mismatch");
  }
  Substitution s;
  for (std::size_t i = 0; i < params.size(); ++i) s.bindings.emplace(params[i], args[i]);
  return s;
}

TypeRef substitute(const TypeRef& t, const Substitution& s) {
  if (t.args.empty()) {
    auto it = s.bindings.find(t.name);
    if (it != s.bindings.end()) return it->second;
    return t;
  }
  TypeRef out(t.name, {}, t.pos);
  out.args.reserve(t.args.size());
  for (const auto& a : t.args) out.args.push_back(substitute(a, s));
  return out;
}

TypeArgs substitute(const TypeArgs& ts, const Substitution& s) {
  TypeArgs out;
  out.reserve(ts.size());
  for (const auto& t : ts) out.push_back(substitute(t, s));
  return out;
}

Substitution compose(const Substitution& first, const Substitution& then) {
  Substitution out;
  for (const auto& [name, type] : first.bindings) out.bindings.emplace(name, substitute(type, then));
  for (const auto& [name, type] : then.bindings) out.bindings.emplace(name, type);
  return out;
}

// -- value types ------------------------------------------------------------

std::string Instantiation::str() const { return interfaceName + to_string(args); }

const std::vector<TypeArgs>* InstantiationMap::find(std::string_view ancestor) const {
  for (const auto& [name, tuples] : entries) {
    if (name == ancestor) return &tuples;
  }
  return nullptr;
}

bool InstantiationMap::java8_valid() const {
  return std::all_of(entries.begin(), entries.end(),
                     [](const auto& e) { return e.second.size() <= 1; });
}

namespace {

std::string join_types(const TypeArgs& ts, std::string_view sep) {
  std::string out;
  for (std::size_t i = 0; i < ts.size(); ++i) {
    if (i) out += sep;
    out += to_string(ts[i]);
  }
  return out;
}

std::string signature_text(const std::string& name, const TypeArgs& params) {
  return name + "(" + join_types(params, ", ") + ")";
}

}  // namespace

std::string MemberSignature::str() const {
  std::string out = signature_text(name, paramTypes) + " -> " + to_string(returnType);
  if (!throwsSet.empty()) {
    out += " throws ";
    for (std::size_t i = 0; i < throwsSet.size(); ++i) {
      if (i) out += ", ";
      out += throwsSet[i];
    }
  }
  return out + "  [from " + origin.str() + "]";
}

int CheckReport::error_count() const {
  return static_cast<int>(std::count_if(diagnostics.begin(), diagnostics.end(), [](const auto& d) {
    return d.severity == Severity::Error;
  }));
}

// -- table ------------------------------------------------------------------

const InterfaceEntry* InterfaceTable::find(std::string_view name) const {
  auto it = entries_.find(name);
  return it == entries_.end() ? nullptr : &it->second;
}

const InterfaceEntry& InterfaceTable::at(std::string_view name) const {
  if (const auto* e = find(name)) return *e;
  throw std::out_of_range("unknown interface: " + std::string(name));
}

std::vector<std::string> InterfaceTable::names() const {
  std::vector<std::string> out;
  for (const auto& [name, _] : entries_) out.push_back(name);
  return out;
}

struct HierarchyBuilder {
  struct Pending {
    Diagnostic diagnostic;
    std::size_t unitIndex;
  };

  InterfaceTable table;
  std::vector<Pending> pending;
  std::size_t currentUnit = 0;

  void error(const InterfaceEntry& e, SourcePos pos, std::string message) {
    pending.push_back({make_diagnostic(Severity::Error, e.unit->sourceName, e.unit->rawLines, pos,
                                       std::move(message)),
                       currentUnit});
  }

  std::size_t arity_of(std::string_view name) const {
    return table.find(name)->decl.typeParams.size();
  }

  TypeRef resolve(const TypeRef& t, const InterfaceEntry& owner,
                  const std::vector<std::string>& params) {
    if (std::find(params.begin(), params.end(), t.name) != params.end()) {
      if (!t.args.empty()) {
        error(owner, t.pos, "type parameter " + t.name + " does not take type arguments");
      }
      return TypeRef(owner.decl.name + "#" + t.name, {}, t.pos);
    }
    TypeRef out(t.name, {}, t.pos);
    for (const auto& a : t.args) out.args.push_back(resolve(a, owner, params));
    if (table.find(t.name) && arity_of(t.name) != t.args.size()) {
      error(owner, t.pos, "wrong number of type arguments; required " +
                              std::to_string(arity_of(t.name)));
    }
    return out;
  }

  void resolve_entry(InterfaceEntry& e) {
    auto& decl = e.decl;
    const auto params = decl.typeParams;
    std::set<std::string> seen;
    for (const auto& p : params) {
      if (!seen.insert(p).second) {
        error(e, decl.pos, "type parameter " + p + " is already defined in interface " + decl.name);
      }
    }

    std::vector<TypeRef> supers;
    for (const auto& ref : decl.superRefs) {
      const InterfaceEntry* target = table.find(ref.name);
      const bool isParam = std::find(params.begin(), params.end(), ref.name) != params.end();
      if (!target || isParam) {
        error(e, ref.pos, "unknown super-interface: " + ref.name);
        e.broken = true;
        continue;
      }
      if (target->decl.typeParams.size() != ref.args.size()) e.broken = true;
      TypeRef resolved = resolve(ref, e, params);
      if (std::find(supers.begin(), supers.end(), resolved) != supers.end()) {
        error(e, ref.pos, "repeated interface");
        continue;
      }
      supers.push_back(std::move(resolved));
    }
    decl.superRefs = std::move(supers);

    std::vector<std::pair<std::string, TypeArgs>> declared;
    for (auto& m : decl.methods) {
      m.returnType = resolve(m.returnType, e, params);
      std::set<std::string> paramNames;
      for (auto& p : m.params) {
        p.type = resolve(p.type, e, params);
        if (!paramNames.insert(p.name).second) {
          error(e, p.type.pos,
                "variable " + p.name + " is already defined in method " + m.name);
        }
      }
      std::set<std::string> thrown;
      for (const auto& t : m.throwsList) {
        if (!thrown.insert(t).second) {
          error(e, m.pos, "repeated exception " + t + " in throws clause of method " + m.name);
        }
      }
      TypeArgs ptypes;
      for (const auto& p : m.params) ptypes.push_back(p.type);
      std::pair<std::string, TypeArgs> key(m.name, ptypes);
      if (std::find(declared.begin(), declared.end(), key) != declared.end()) {
        error(e, m.pos, "method " + signature_text(m.name, ptypes) +
                            " is already defined in interface " + decl.name);
      }
      declared.push_back(std::move(key));
    }
  }

  void resolve_all() {
    for (auto& [name, entry] : table.entries_) {
      currentUnit = unitOf.at(name);
      resolve_entry(entry);
    }
  }

  void add(std::string name, InterfaceEntry entry) {
    table.entries_.emplace(std::move(name), std::move(entry));
  }

  void detect_cycles() {
    enum class Color { White, Grey, Black };
    std::map<std::string, Color, std::less<>> color;
    for (const auto& [name, _] : table.entries_) color[name] = Color::White;
    std::vector<std::string> stack;

    std::function<void(const std::string&)> visit = [&](const std::string& name) {
      color[name] = Color::Grey;
      stack.push_back(name);
      auto& entry = table.entries_.at(name);
      for (const auto& ref : entry.decl.superRefs) {
        if (color[ref.name] == Color::Grey) {
          auto begin = std::find(stack.begin(), stack.end(), ref.name);
          std::string path;
          for (auto it = begin; it != stack.end(); ++it) {
            path += *it + " -> ";
            table.entries_.at(*it).broken = true;
          }
          path += ref.name;
          auto& head = table.entries_.at(ref.name);
          currentUnit = unitOf.at(ref.name);
          error(head, head.decl.pos, "cyclic inheritance involving " + path);
        } else if (color[ref.name] == Color::White) {
          visit(ref.name);
        }
      }
      stack.pop_back();
      color[name] = Color::Black;
    };
    for (const auto& [name, _] : table.entries_) {
      if (color[name] == Color::White) visit(name);
    }
  }

  void propagate_broken() {
    bool changed = true;
    while (changed) {
      changed = false;
      for (auto& [name, entry] : table.entries_) {
        if (entry.broken) continue;
        for (const auto& ref : entry.decl.superRefs) {
          if (table.entries_.at(ref.name).broken) {
            entry.broken = true;
            changed = true;
            break;
          }
        }
      }
    }
  }

  std::map<std::string, std::size_t, std::less<>> unitOf;
};

HierarchyResult build_hierarchy(std::span<const CompilationUnit> units) {
  HierarchyBuilder b;
  std::vector<std::shared_ptr<const CompilationUnit>> shared;
  shared.reserve(units.size());
  for (const auto& u : units) shared.push_back(std::make_shared<const CompilationUnit>(u));

  for (std::size_t ui = 0; ui < shared.size(); ++ui) {
    b.currentUnit = ui;
    for (const auto& decl : shared[ui]->decls) {
      InterfaceEntry entry{decl, shared[ui], false};
      if (b.table.find(decl.name)) {
        b.error(entry, decl.pos, "duplicate interface: " + decl.name);
        continue;
      }
      b.unitOf[decl.name] = ui;
      b.add(decl.name, std::move(entry));
    }
  }
  b.resolve_all();
  b.detect_cycles();
  b.propagate_broken();

  std::stable_sort(b.pending.begin(), b.pending.end(), [](const auto& x, const auto& y) {
    return std::tuple(x.unitIndex, x.diagnostic.line, x.diagnostic.caretColumn) <
           std::tuple(y.unitIndex, y.diagnostic.line, y.diagnostic.caretColumn);
  });
  HierarchyResult result;
  result.table = std::move(b.table);
  for (auto& p : b.pending) result.diagnostics.push_back(std::move(p.diagnostic));
  return result;
}

// -- instantiations and members -------------------------------------------

namespace {

// Like to_string, but keeps owner qualification so distinct parameters never
// share a key.
std::string key_of(const TypeRef& t) {
  std::string out = t.name;
  if (!t.args.empty()) {
    out += '<';
    for (std::size_t i = 0; i < t.args.size(); ++i) {
      if (i) out += ',';
      out += key_of(t.args[i]);
    }
    out += '>';
  }
  return out;
}

std::string key_of(const std::string& name, const TypeArgs& args) {
  std::string out = name + "<";
  for (const auto& a : args) out += key_of(a) + ",";
  return out + ">";
}

TypeArgs own_parameters(const InterfaceDecl& decl) {
  TypeArgs args;
  for (const auto& p : decl.typeParams) args.emplace_back(decl.name + "#" + p);
  return args;
}

Substitution edge_substitution(const InterfaceDecl& target, const TypeArgs& args) {
  std::vector<std::string> qualified;
  for (const auto& p : target.typeParams) qualified.push_back(target.name + "#" + p);
  return Substitution::bind(qualified, args);
}

const InterfaceEntry& checked_subject(std::string_view subject, const InterfaceTable& table) {
  const auto& entry = table.at(subject);
  if (entry.broken) {
    throw std::logic_error("interface " + std::string(subject) + " has hierarchy errors");
  }
  return entry;
}

bool same_signature(const MemberSignature& a, const MemberSignature& b) {
  return a.name == b.name && a.paramTypes == b.paramTypes;
}

bool identical(const MemberSignature& a, const MemberSignature& b) {
  return same_signature(a, b) && a.returnType == b.returnType;
}

void coalesce_into(std::vector<MemberSignature>& out, std::vector<MemberSignature> more) {
  for (auto& m : more) {
    bool dup = std::any_of(out.begin(), out.end(), [&](const auto& o) { return identical(o, m); });
    if (!dup) out.push_back(std::move(m));
  }
}

class MemberCollector {
 public:
  explicit MemberCollector(const InterfaceTable& table) : table_(table) {}

  std::vector<MemberSignature> own(const InterfaceDecl& decl, const TypeArgs& args) const {
    const auto s = edge_substitution(decl, args);
    std::vector<MemberSignature> out;
    for (const auto& m : decl.methods) {
      MemberSignature sig;
      sig.name = m.name;
      for (const auto& p : m.params) sig.paramTypes.push_back(substitute(p.type, s));
      sig.returnType = substitute(m.returnType, s);
      for (const auto& t : m.throwsList) {
        if (std::find(sig.throwsSet.begin(), sig.throwsSet.end(), t) == sig.throwsSet.end()) {
          sig.throwsSet.push_back(t);
        }
      }
      sig.origin = Instantiation{decl.name, args};
      out.push_back(std::move(sig));
    }
    return out;
  }

  // Members of every direct super of `decl` at `args`, coalesced, before any
  // filtering by `decl`'s own methods.
  std::vector<MemberSignature> inherited(const InterfaceDecl& decl, const TypeArgs& args) {
    const auto s = edge_substitution(decl, args);
    std::vector<MemberSignature> out;
    for (const auto& ref : decl.superRefs) {
      coalesce_into(out, members(ref.name, substitute(ref.args, s)));
    }
    return out;
  }

  const std::vector<MemberSignature>& members(const std::string& name, const TypeArgs& args) {
    const auto key = key_of(name, args);
    if (auto it = memo_.find(key); it != memo_.end()) return it->second;
    const auto& decl = table_.at(name).decl;
    auto result = own(decl, args);
    auto mine = result;
    for (auto& m : inherited(decl, args)) {
      bool overridden =
          std::any_of(mine.begin(), mine.end(), [&](const auto& o) { return same_signature(o, m); });
      if (!overridden) coalesce_into(result, {std::move(m)});
    }
    return memo_.emplace(key, std::move(result)).first->second;
  }

 private:
  const InterfaceTable& table_;
  std::unordered_map<std::string, std::vector<MemberSignature>> memo_;
};

// Members sharing name and parameter types but not return type, grouped in
// first-appearance order. Each group holds one member per distinct return.
std::vector<std::vector<const MemberSignature*>> return_conflicts(
    const std::vector<MemberSignature>& members) {
  std::vector<std::vector<const MemberSignature*>> groups;
  for (const auto& m : members) {
    auto g = std::find_if(groups.begin(), groups.end(),
                          [&](const auto& grp) { return same_signature(*grp.front(), m); });
    if (g == groups.end()) {
      groups.push_back({&m});
      continue;
    }
    bool seen = std::any_of(g->begin(), g->end(),
                            [&](const auto* o) { return o->returnType == m.returnType; });
    if (!seen) g->push_back(&m);
  }
  std::erase_if(groups, [](const auto& grp) { return grp.size() < 2; });
  return groups;
}

Diagnostic at_declaration(const InterfaceEntry& e, Severity severity, std::string message) {
  // Anchored at the declaration line, column 1.
  return make_diagnostic(severity, e.unit->sourceName, e.unit->rawLines, {e.decl.pos.line, 1},
                         std::move(message));
}

}  // namespace

InstantiationMap collect_instantiations(std::string_view subject, const InterfaceTable& table) {
  const auto& root = checked_subject(subject, table);
  InstantiationMap result;
  std::set<std::string> visited;

  std::function<void(const InterfaceDecl&, const Substitution&)> walk =
      [&](const InterfaceDecl& decl, const Substitution& s) {
        for (const auto& ref : decl.superRefs) {
          TypeArgs args = substitute(ref.args, s);
          if (!visited.insert(key_of(ref.name, args)).second) continue;
          auto entry = std::find_if(result.entries.begin(), result.entries.end(),
                                    [&](const auto& e) { return e.first == ref.name; });
          if (entry == result.entries.end()) {
            result.entries.emplace_back(ref.name, std::vector<TypeArgs>{});
            entry = std::prev(result.entries.end());
          }
          entry->second.push_back(args);
          const auto& target = table.at(ref.name).decl;
          walk(target, edge_substitution(target, args));
        }
      };
  walk(root.decl, edge_substitution(root.decl, own_parameters(root.decl)));
  return result;
}

std::vector<MemberSignature> merge_members(std::string_view subject, const InterfaceTable& table) {
  const auto& root = checked_subject(subject, table);
  MemberCollector collector(table);
  return collector.members(root.decl.name, own_parameters(root.decl));
}

std::vector<Diagnostic> check_overrides(std::string_view subject, const InterfaceTable& table) {
  const auto& root = checked_subject(subject, table);
  MemberCollector collector(table);
  const auto args = own_parameters(root.decl);
  const auto own = collector.own(root.decl, args);
  const auto inherited = collector.inherited(root.decl, args);

  std::vector<Diagnostic> out;
  for (std::size_t i = 0; i < own.size(); ++i) {
    for (const auto& parent : inherited) {
      if (!same_signature(own[i], parent) || own[i].returnType == parent.returnType) continue;
      out.push_back(make_diagnostic(
          Severity::Error, root.unit->sourceName, root.unit->rawLines, root.decl.methods[i].pos,
          "incompatible return type in override: " + signature_text(own[i].name, own[i].paramTypes) +
              " returns " + to_string(own[i].returnType) + " but " + parent.origin.str() +
              " declares " + to_string(parent.returnType)));
      break;
    }
  }
  return out;
}

CheckReport check_java8(std::string_view subject, const InterfaceTable& table) {
  CheckReport report;
  report.interfaceName = std::string(subject);
  report.mode = Mode::Java8;
  const auto& entry = table.at(subject);
  if (entry.broken) return report;

  const auto instantiations = collect_instantiations(subject, table);
  for (const auto& [ancestor, tuples] : instantiations.entries) {
    if (tuples.size() < 2) continue;
    // javac stops at the first clash; later ones are usually implied by it.
    report.diagnostics.push_back(at_declaration(
        entry, Severity::Error,
        ancestor + " cannot be inherited with different arguments: <" + join_types(tuples[0], ",") +
            "> and <" + join_types(tuples[1], ",") + ">"));
    return report;
  }

  report.diagnostics = check_overrides(subject, table);
  auto members = merge_members(subject, table);
  for (const auto& group : return_conflicts(members)) {
    report.diagnostics.push_back(at_declaration(
        entry, Severity::Error,
        "types " + group[0]->origin.str() + " and " + group[1]->origin.str() +
            " are incompatible; both define " +
            signature_text(group[0]->name, group[0]->paramTypes) +
            ", but with unrelated return types"));
  }
  if (report.error_count() == 0) report.members = std::move(members);
  return report;
}

CheckReport check_extended(std::string_view subject, const InterfaceTable& table) {
  CheckReport report;
  report.interfaceName = std::string(subject);
  report.mode = Mode::Extended;
  const auto& entry = table.at(subject);
  if (entry.broken) return report;

  report.diagnostics = check_overrides(subject, table);
  report.members = merge_members(subject, table);
  for (const auto& group : return_conflicts(report.members)) {
    std::string origins;
    for (std::size_t i = 0; i < group.size(); ++i) {
      if (i) origins += ", ";
      origins += group[i]->origin.str();
    }
    report.diagnostics.push_back(at_declaration(
        entry, Severity::Note,
        "ambiguous inherited member: " + signature_text(group[0]->name, group[0]->paramTypes) +
            " from <" + origins + ">"));
  }
  return report;
}

CheckReport check_interface(std::string_view subject, const InterfaceTable& table, Mode mode) {
  return mode == Mode::Java8 ? check_java8(subject, table) : check_extended(subject, table);
}

}  // namespace ifcheck
