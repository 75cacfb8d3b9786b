#include "cohomdet/json_io.hpp"

#include <cstdint>
#include <limits>
#include <string>
#include <type_traits>
#include <vector>

#include "cohomdet/errors.hpp"

namespace cohomdet {

namespace {

constexpr std::size_t max_tensor_entries = std::size_t{1} << 24;

std::int64_t as_int(const Json& v, const std::string& what) {
    if (!v.is_number_integer()) throw ParseError(what + " must be an integer");
    if (v.is_number_unsigned() &&
        v.get<std::uint64_t>() > static_cast<std::uint64_t>(std::numeric_limits<std::int64_t>::max())) {
        throw ParseError(what + " does not fit in 64 bits");
    }
    return v.get<std::int64_t>();
}

int as_small_int(const Json& v, const std::string& what) {
    const std::int64_t x = as_int(v, what);
    if (x < std::numeric_limits<int>::min() || x > std::numeric_limits<int>::max()) {
        throw ParseError(what + " is out of range");
    }
    return static_cast<int>(x);
}

const Json& require_key(const Json& j, const char* key, const std::string& where) {
    if (!j.is_object()) throw ParseError(where + " must be a JSON object");
    auto it = j.find(key);
    if (it == j.end()) throw ParseError(where + " is missing \"" + key + "\"");
    return *it;
}

std::int64_t optional_int(const Json& j, const char* key, std::int64_t fallback) {
    auto it = j.find(key);
    if (it == j.end() || it->is_null()) return fallback;
    return as_int(*it, std::string("\"") + key + "\"");
}

std::string index_text(const std::vector<int>& idx) {
    std::string s = "(";
    for (std::size_t i = 0; i < idx.size(); ++i) s += (i ? "," : "") + std::to_string(idx[i]);
    return s + ")";
}

IntTensor read_entries(const Json& j, const std::vector<int>& shape) {
    std::size_t total = 1;
    for (int s : shape) {
        total *= static_cast<std::size_t>(s);
        if (total > max_tensor_entries) throw DimensionError("tensor too large");
    }
    IntTensor t(shape);
    std::vector<bool> seen(t.size(), false);
    auto it = j.find("entries");
    if (it == j.end()) return t;
    if (!it->is_array()) throw ParseError("\"entries\" must be an array");

    std::vector<int> idx(shape.size());
    for (const Json& e : *it) {
        const Json& jidx = require_key(e, "idx", "tensor entry");
        if (!jidx.is_array() || jidx.size() != shape.size()) {
            throw ParseError("entry index must list " + std::to_string(shape.size()) + " integers");
        }
        for (std::size_t d = 0; d < shape.size(); ++d) idx[d] = as_small_int(jidx[d], "entry index");
        for (std::size_t d = 0; d < shape.size(); ++d) {
            if (idx[d] < 1 || idx[d] > shape[d]) {
                throw ParseError("entry index " + index_text(idx) + " out of range in position " +
                                 std::to_string(d + 1));
            }
        }
        std::vector<int> zero_based(idx);
        for (int& x : zero_based) --x;
        std::size_t flat = 0;
        for (std::size_t d = 0; d < shape.size(); ++d)
            flat = flat * static_cast<std::size_t>(shape[d]) + static_cast<std::size_t>(zero_based[d]);
        if (seen[flat]) throw ParseError("duplicate entry index " + index_text(idx));
        seen[flat] = true;
        t(zero_based) = as_int(require_key(e, "val", "tensor entry"), "entry value");
    }
    return t;
}

Json entries_json(const IntTensor& t) {
    Json out = Json::array();
    for (std::size_t flat = 0; flat < t.size(); ++flat) {
        const std::int64_t v = t.values()[flat];
        if (v == 0) continue;
        std::vector<int> idx = t.unravel(flat);
        for (int& x : idx) ++x;
        out.push_back(Json{{"idx", idx}, {"val", v}});
    }
    return out;
}

}  // namespace

Json parse_json_text(std::string_view text) {
    try {
        return Json::parse(text.begin(), text.end());
    } catch (const nlohmann::json::parse_error& e) {
        std::string msg = e.what();
        // drop the library's "[json.exception.parse_error.101] " prefix
        if (auto pos = msg.find("] "); pos != std::string::npos) msg = msg.substr(pos + 2);
        throw ParseError("malformed JSON: " + msg);
    }
}

Form form_from_json(const Json& j) {
    const Json& jkind = require_key(j, "kind", "tensor");
    if (!jkind.is_string()) throw ParseError("\"kind\" must be a string");
    const std::string kind = jkind.get<std::string>();
    const int n = as_small_int(require_key(j, "n", "tensor"), "\"n\"");

    if (kind == "closed") {
        if (n < 3 || n > IntPoly::max_vars) throw DimensionError("closed form needs 3 <= n <= 8, got n = " + std::to_string(n));
        return validate_closed(read_entries(j, {n, n, n}), n);
    }
    if (kind == "boundary") {
        if (n < 2 || n > IntPoly::max_vars) throw DimensionError("boundary form needs 2 <= n <= 8, got n = " + std::to_string(n));
        return validate_boundary(read_entries(j, {n - 1, n, n}), n);
    }
    if (kind == "massey") {
        if (n < 2 || n > IntPoly::max_vars) throw DimensionError("Massey form needs 2 <= n <= 8, got n = " + std::to_string(n));
        const int m = as_small_int(require_key(j, "m", "Massey tensor"), "\"m\"");
        if (m < 1 || m > 16) throw DimensionError("Massey order must satisfy 1 <= m <= 16, got " + std::to_string(m));
        std::vector<int> shape{n - 1};
        for (int s = 0; s <= m; ++s) shape.push_back(n);
        return validate_massey(read_entries(j, shape), n, m);
    }
    throw ParseError("unknown tensor kind \"" + kind + "\"");
}

Json form_to_json(const Form& f) {
    return std::visit(
        [](const auto& form) -> Json {
            using T = std::decay_t<decltype(form)>;
            Json out;
            if constexpr (std::is_same_v<T, ClosedForm>) {
                out["kind"] = "closed";
                out["n"] = form.n();
            } else if constexpr (std::is_same_v<T, BoundaryForm>) {
                out["kind"] = "boundary";
                out["n"] = form.n();
            } else {
                out["kind"] = "massey";
                out["n"] = form.n();
                out["m"] = form.m();
            }
            out["entries"] = entries_json(form.tensor());
            return out;
        },
        f);
}

IntMatrix matrix_from_json(const Json& j) {
    if (!j.is_array()) throw ParseError("matrix must be an array of rows");
    std::vector<std::vector<std::int64_t>> rows;
    for (const Json& row : j) {
        if (!row.is_array()) throw ParseError("matrix row must be an array");
        std::vector<std::int64_t> r;
        for (const Json& v : row) r.push_back(as_int(v, "matrix entry"));
        if (!rows.empty() && r.size() != rows.front().size()) throw ParseError("matrix rows differ in length");
        rows.push_back(std::move(r));
    }
    return IntMatrix::from_rows(rows);
}

Json matrix_to_json(const IntMatrix& m) {
    Json out = Json::array();
    for (const auto& row : m.to_rows()) out.push_back(row);
    return out;
}

bool is_instance_json(const Json& j) { return j.is_object() && j.contains("case"); }

GluingInstance instance_from_json(const Json& j) {
    const int tag = as_small_int(require_key(j, "case", "gluing instance"), "\"case\"");
    if (tag < 1 || tag > 4) throw ParseError("\"case\" must be 1, 2, 3 or 4");

    Form fm = form_from_json(require_key(j, "f_M", "gluing instance"));
    auto* boundary = std::get_if<BoundaryForm>(&fm);
    if (!boundary) throw ValidationError("f_M must be a boundary form");

    std::optional<std::variant<ClosedForm, BoundaryForm>> fbar;
    if (auto it = j.find("f_Mbar"); it != j.end() && !it->is_null()) {
        Form parsed = form_from_json(*it);
        if (auto* c = std::get_if<ClosedForm>(&parsed)) {
            fbar = *c;
        } else if (auto* b = std::get_if<BoundaryForm>(&parsed)) {
            fbar = *b;
        } else {
            throw ValidationError("f_Mbar must be a closed or boundary form");
        }
    }

    std::optional<int> s0;
    if (auto it = j.find("s0"); it != j.end() && !it->is_null()) s0 = as_small_int(*it, "\"s0\"");

    GluingInstance inst{
        .case_tag = static_cast<GluingCase>(tag),
        .f_M = std::move(*boundary),
        .f_Mbar = std::move(fbar),
        .iota = matrix_from_json(require_key(j, "iota", "gluing instance")),
        .k = optional_int(j, "k", 1),
        .m = optional_int(j, "m", 1),
        .tors_M = optional_int(j, "tors_M", 1),
        .tors_Mbar = optional_int(j, "tors_Mbar", 1),
        .ell_index = as_small_int(require_key(j, "ell_index", "gluing instance"), "\"ell_index\""),
        .s0 = s0,
    };
    inst.validate();
    return inst;
}

Json instance_to_json(const GluingInstance& inst) {
    Json out;
    out["case"] = static_cast<int>(inst.case_tag);
    out["f_M"] = form_to_json(inst.f_M);
    if (inst.f_Mbar) {
        out["f_Mbar"] = std::visit([](const auto& f) { return form_to_json(Form(f)); }, *inst.f_Mbar);
    } else {
        out["f_Mbar"] = nullptr;
    }
    out["iota"] = matrix_to_json(inst.iota);
    out["k"] = inst.k;
    out["m"] = inst.m;
    out["tors_M"] = inst.tors_M;
    out["tors_Mbar"] = inst.tors_Mbar;
    out["ell_index"] = inst.ell_index;
    if (inst.s0) out["s0"] = *inst.s0;
    return out;
}

Json report_to_json(const GluingReport& r) {
    Json checks = Json::array();
    for (const auto& c : r.checks) {
        checks.push_back(Json{{"name", c.name},
                              {"lhs", c.lhs.to_string()},
                              {"rhs", c.rhs.to_string()},
                              {"verdict", c.pass ? "pass" : "fail"}});
    }
    Json out;
    out["case"] = static_cast<int>(r.case_tag);
    out["lhs"] = r.lhs.to_string();
    out["rhs"] = r.rhs.to_string();
    out["verdict"] = r.pass ? "pass" : "fail";
    out["detail"] = r.detail;
    out["checks"] = std::move(checks);
    return out;
}

}  // namespace cohomdet
