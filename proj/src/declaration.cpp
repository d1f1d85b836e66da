#include "dolc/declaration.hpp"

namespace dolc {

LogicDeclaration shift_declaration(const LogicDeclaration& outer, const LogicDeclaration& shift) {
  if (shift.language || shift.logic) return shift;
  LogicDeclaration out = outer;
  if (shift.serialization) out.serialization = shift.serialization;
  return out;
}

}  // namespace dolc
