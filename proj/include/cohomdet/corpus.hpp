#pragma once

#include <string>
#include <variant>
#include <vector>

#include "cohomdet/forms.hpp"
#include "cohomdet/gluing.hpp"

namespace cohomdet {

/// A bundled example. For gluing instances `expected_d` is d(f_M) at the
/// standard bases and the instance is also expected to verify.
struct CorpusEntry {
    std::string name;
    std::string description;
    std::variant<Form, GluingInstance> subject;
    std::string expected_d;
    /// How expected_d was obtained independently of this library.
    std::string provenance;
};

/// Names of the bundled entries, sorted.
std::vector<std::string> corpus_list();

/// Parses the entry and recomputes its determinant; throws UnknownNameError
/// for names not listed and ValidationError when the recomputation disagrees.
CorpusEntry corpus_get(const std::string& name);

/// Parses an entry from its JSON text without the self-check.
CorpusEntry corpus_parse(const std::string& name, std::string_view json_text);

/// Recomputes d (and, for instances, the gluing verdict). Empty string on
/// success, otherwise a one-line description of the mismatch.
std::string corpus_check(const CorpusEntry& entry);

/// Raw JSON text of a bundled entry.
std::string_view corpus_source(const std::string& name);

}  // namespace cohomdet
