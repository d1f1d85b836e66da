#include "dolc/names.hpp"

#include <algorithm>

namespace dolc {

NamePrinter angle_bracket_names() {
  return [](const std::string& iri) { return "<" + iri + ">"; };
}

NamePrinter curie_names(PrefixMap prefixes, bool bare_default) {
  return [prefixes = std::move(prefixes), bare_default](const std::string& iri) -> std::string {
    auto parsed = Iri::try_parse(iri);
    if (!parsed) return iri;
    auto c = compact(*parsed, prefixes);
    if (auto* curie = std::get_if<Curie>(&c)) {
      const std::string& ref = curie->reference;
      bool ok = std::all_of(ref.begin(), ref.end(), [](char ch) {
        return (ch >= 'a' && ch <= 'z') || (ch >= 'A' && ch <= 'Z') || (ch >= '0' && ch <= '9') ||
               ch == '_' || ch == '.' || ch == ':' || ch == '/' || ch == '-';
      });
      ok = ok && ref.rfind("//", 0) != 0 && (ref.empty() || ref.back() != '.');
      if (ok) {
        if (curie->prefix && curie->prefix->empty() && bare_default && !ref.empty() &&
            ref.find(':') == std::string::npos)
          return ref;
        return curie->prefix.value_or("") + ":" + ref;
      }
    }
    return "<" + iri + ">";
  };
}

}  // namespace dolc
