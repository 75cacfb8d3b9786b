#include "cohomdet/corpus.hpp"

#include <algorithm>
#include <string_view>
#include <utility>

#include "cohomdet/det.hpp"
#include "cohomdet/errors.hpp"
#include "cohomdet/json_io.hpp"

namespace cohomdet {

namespace detail {
const std::vector<std::pair<std::string_view, std::string_view>>& embedded_corpus();
}

namespace {

std::string string_field(const Json& j, const char* key) {
    auto it = j.find(key);
    if (it == j.end() || it->is_null()) return {};
    if (!it->is_string()) throw ParseError(std::string("\"") + key + "\" must be a string");
    return it->get<std::string>();
}

}  // namespace

std::vector<std::string> corpus_list() {
    std::vector<std::string> names;
    for (const auto& [name, text] : detail::embedded_corpus()) names.emplace_back(name);
    std::sort(names.begin(), names.end());
    return names;
}

std::string_view corpus_source(const std::string& name) {
    for (const auto& [entry_name, text] : detail::embedded_corpus())
        if (entry_name == name) return text;
    throw UnknownNameError("unknown corpus entry \"" + name + "\"");
}

CorpusEntry corpus_parse(const std::string& name, std::string_view json_text) {
    const Json j = parse_json_text(json_text);
    auto subject = is_instance_json(j) ? std::variant<Form, GluingInstance>(instance_from_json(j))
                                       : std::variant<Form, GluingInstance>(form_from_json(j));
    CorpusEntry entry{
        .name = name,
        .description = string_field(j, "description"),
        .subject = std::move(subject),
        .expected_d = string_field(j, "expected_d"),
        .provenance = string_field(j, "provenance"),
    };
    if (entry.expected_d.empty()) throw ParseError("corpus entry " + name + " lacks \"expected_d\"");
    return entry;
}

std::string corpus_check(const CorpusEntry& entry) {
    try {
        if (const auto* form = std::get_if<Form>(&entry.subject)) {
            const std::string got = det_form(*form, standard_bases(*form)).to_string();
            if (got != entry.expected_d) return "expected " + entry.expected_d + ", computed " + got;
            return {};
        }
        const auto& inst = std::get<GluingInstance>(entry.subject);
        const std::string got = det_boundary(inst.f_M, BasisPair::standard(inst.n(), inst.n() - 1)).to_string();
        if (got != entry.expected_d) return "expected d(f_M) = " + entry.expected_d + ", computed " + got;
        const GluingReport report = verify_gluing(inst);
        if (!report.pass) return "gluing identity " + report.detail;
        return {};
    } catch (const Error& e) {
        return e.what();
    }
}

CorpusEntry corpus_get(const std::string& name) {
    CorpusEntry entry = corpus_parse(name, corpus_source(name));
    if (std::string problem = corpus_check(entry); !problem.empty()) {
        throw ValidationError("corpus entry " + name + ": " + problem);
    }
    return entry;
}

}  // namespace cohomdet
