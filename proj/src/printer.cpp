#include <sstream>

#include "ifcheck/syntax.hpp"

namespace ifcheck {

std::string to_string(const TypeRef& t) {
  std::string out;
  auto hash = t.name.find('#');
  out += hash == std::string::npos ? t.name : t.name.substr(hash + 1);
  if (!t.args.empty()) {
    out += '<';
    for (std::size_t i = 0; i < t.args.size(); ++i) {
      if (i) out += ',';
      out += to_string(t.args[i]);
    }
    out += '>';
  }
  return out;
}

std::string print_unit(const CompilationUnit& unit) {
  std::ostringstream os;
  os << "package " << unit.packageName << ";\n";
  for (const auto& decl : unit.decls) {
    os << "\ninterface " << decl.name;
    if (!decl.typeParams.empty()) {
      os << '<';
      for (std::size_t i = 0; i < decl.typeParams.size(); ++i) {
        if (i) os << ", ";
        os << decl.typeParams[i];
      }
      os << '>';
    }
    if (!decl.superRefs.empty()) {
      os << "\n    extends ";
      for (std::size_t i = 0; i < decl.superRefs.size(); ++i) {
        if (i) os << ", ";
        os << to_string(decl.superRefs[i]);
      }
    }
    os << " {\n";
    for (const auto& m : decl.methods) {
      os << "\n    " << to_string(m.returnType) << ' ' << m.name << '(';
      for (std::size_t i = 0; i < m.params.size(); ++i) {
        if (i) os << ", ";
        os << to_string(m.params[i].type) << ' ' << m.params[i].name;
      }
      os << ')';
      if (!m.throwsList.empty()) {
        os << " throws ";
        for (std::size_t i = 0; i < m.throwsList.size(); ++i) {
          if (i) os << ", ";
          os << m.throwsList[i];
        }
      }
      os << ";\n";
    }
    os << "\n}\n";
  }
  return os.str();
}

bool same_structure(const CompilationUnit& a, const CompilationUnit& b) {
  return a.packageName == b.packageName && a.decls == b.decls;
}

}  // namespace ifcheck
