#include "cohomdet/cli.hpp"

#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>

#include <CLI11.hpp>

#include "cohomdet/corpus.hpp"
#include "cohomdet/det.hpp"
#include "cohomdet/errors.hpp"
#include "cohomdet/json_io.hpp"

namespace cohomdet::cli {

namespace {

struct Options {
    std::string input;
    std::string basis_a;
    std::string basis_b;
    int orientation = 1;
    std::string format = "text";
    std::string name;
    bool verify = false;
};

std::string one_line(std::string s) {
    for (char& c : s)
        if (c == '\n' || c == '\r') c = ' ';
    return s;
}

std::string read_input(const std::string& path, std::istream& in) {
    std::ostringstream buf;
    if (path == "-") {
        buf << in.rdbuf();
        return buf.str();
    }
    std::ifstream file(path, std::ios::binary);
    if (!file) throw ParseError("cannot read input file " + path);
    buf << file.rdbuf();
    return buf.str();
}

std::string describe(const Form& f) {
    return std::visit(
        [](const auto& form) -> std::string {
            using T = std::decay_t<decltype(form)>;
            if constexpr (std::is_same_v<T, ClosedForm>) {
                return "closed form, n = " + std::to_string(form.n());
            } else if constexpr (std::is_same_v<T, BoundaryForm>) {
                return "boundary form, n = " + std::to_string(form.n());
            } else {
                return "Massey form, n = " + std::to_string(form.n()) + ", m = " + std::to_string(form.m());
            }
        },
        f);
}

std::string describe(const GluingInstance& inst) {
    return "gluing instance, case " + to_string(inst.case_tag) + ", n = " + std::to_string(inst.n());
}

Form read_form(const Json& j) {
    if (is_instance_json(j)) throw ParseError("expected a tensor but got a gluing instance; use verify");
    return form_from_json(j);
}

int cmd_det(const Options& o, std::istream& in, std::ostream& out) {
    const Form form = read_form(parse_json_text(read_input(o.input, in)));
    BasisPair bases = standard_bases(form);
    if (!o.basis_a.empty() || !o.basis_b.empty()) {
        IntMatrix a = o.basis_a.empty() ? bases.a() : matrix_from_json(parse_json_text(o.basis_a));
        IntMatrix b = o.basis_b.empty() ? bases.b() : matrix_from_json(parse_json_text(o.basis_b));
        if (a.rows() != bases.a().rows() || b.rows() != bases.b().rows()) {
            throw DimensionError("basis sizes must be " + std::to_string(bases.a().rows()) + " and " +
                                 std::to_string(bases.b().rows()));
        }
        bases = BasisPair(std::move(a), std::move(b));
    }
    const Orientation omega(o.orientation);
    IntPoly d = det_form(form, bases);
    if (omega.sign() == -1) d = -d;

    if (o.format == "json") {
        Json j;
        j["d"] = d.to_string();
        j["degree"] = expected_degree(form);
        out << j.dump() << "\n";
    } else {
        out << d.to_string() << "\n";
    }
    return ok;
}

int cmd_verify(const Options& o, std::istream& in, std::ostream& out) {
    const Json j = parse_json_text(read_input(o.input, in));
    if (!is_instance_json(j)) throw ParseError("expected a gluing instance (object with \"case\")");
    const GluingReport report = verify_gluing(instance_from_json(j));
    if (o.format == "json") {
        out << report_to_json(report).dump(2) << "\n";
    } else {
        out << "case " << to_string(report.case_tag) << ": " << (report.pass ? "pass" : "fail") << "\n";
        out << "lhs: " << report.lhs.to_string() << "\n";
        out << "rhs: " << report.rhs.to_string() << "\n";
        for (const auto& c : report.checks) {
            out << (c.pass ? "  pass  " : "  FAIL  ") << c.name << "\n";
        }
    }
    return report.pass ? ok : failed;
}

int cmd_check(const Options& o, std::istream& in, std::ostream& out) {
    const Json j = parse_json_text(read_input(o.input, in));
    const std::string what = is_instance_json(j) ? describe(instance_from_json(j)) : describe(form_from_json(j));
    if (o.format == "json") {
        out << Json{{"valid", true}, {"kind", what}}.dump() << "\n";
    } else {
        out << "valid " << what << "\n";
    }
    return ok;
}

int cmd_corpus(const Options& o, std::ostream& out) {
    std::vector<std::string> names = o.name.empty() ? corpus_list() : std::vector<std::string>{o.name};
    if (!o.name.empty()) corpus_source(o.name);

    if (!o.verify && o.name.empty()) {
        if (o.format == "json") {
            out << Json(names).dump() << "\n";
        } else {
            for (const auto& n : names) out << n << "\n";
        }
        return ok;
    }

    if (!o.verify) {
        const CorpusEntry e = corpus_parse(o.name, corpus_source(o.name));
        if (o.format == "json") {
            out << parse_json_text(corpus_source(o.name)).dump(2) << "\n";
        } else {
            const std::string kind = std::visit([](const auto& s) { return describe(s); }, e.subject);
            out << "name: " << e.name << "\n"
                << "kind: " << kind << "\n"
                << "description: " << e.description << "\n"
                << "expected d: " << e.expected_d << "\n"
                << "provenance: " << e.provenance << "\n";
        }
        return ok;
    }

    bool all_ok = true;
    Json results = Json::array();
    for (const auto& n : names) {
        const std::string problem = corpus_check(corpus_parse(n, corpus_source(n)));
        all_ok = all_ok && problem.empty();
        if (o.format == "json") {
            results.push_back(Json{{"name", n}, {"verdict", problem.empty() ? "pass" : "fail"}, {"detail", problem}});
        } else {
            out << n << ": " << (problem.empty() ? "ok" : "FAIL " + problem) << "\n";
        }
    }
    if (o.format == "json") out << results.dump(2) << "\n";
    return all_ok ? ok : failed;
}

}  // namespace

int run(int argc, const char* const* argv, std::istream& in, std::ostream& out, std::ostream& err) {
    Options o;
    CLI::App app{"Exact cohomology determinants of 3-manifolds from integer tensors", "cohomdet"};
    app.require_subcommand(1);

    auto add_format = [&](CLI::App* sub) {
        sub->add_option("--format", o.format, "Output format")->check(CLI::IsMember({"text", "json"}));
    };

    CLI::App* det = app.add_subcommand("det", "Compute the determinant d of a tensor");
    det->add_option("--input", o.input, "Tensor JSON file, or - for standard input")->required();
    auto* ba = det->add_option("--basis-a", o.basis_a, "Basis of K (or N) as a JSON array of rows");
    auto* bb = det->add_option("--basis-b", o.basis_b, "Basis of L (or the second N) as a JSON array of rows");
    auto* orient = det->add_option("--orientation", o.orientation, "Orientation sign, +1 or -1");
    orient->excludes(ba)->excludes(bb);
    add_format(det);

    CLI::App* verify = app.add_subcommand("verify", "Verify the gluing identity of an instance");
    verify->add_option("--input", o.input, "Gluing instance JSON file, or -")->required();
    add_format(verify);

    CLI::App* corpus = app.add_subcommand("corpus", "List, show or re-verify bundled examples");
    corpus->add_option("--name", o.name, "Entry to show or verify");
    corpus->add_flag("--verify", o.verify, "Recompute expected determinants");
    add_format(corpus);

    CLI::App* check = app.add_subcommand("check", "Validate a tensor or instance file");
    check->add_option("--input", o.input, "JSON file, or -")->required();
    add_format(check);

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp&) {
        out << (app.get_subcommands().empty() ? app.help() : app.get_subcommands().front()->help());
        return ok;
    } catch (const CLI::ParseError& e) {
        err << "error: " << one_line(e.what()) << "\n";
        return bad_input;
    }

    try {
        if (det->parsed()) return cmd_det(o, in, out);
        if (verify->parsed()) return cmd_verify(o, in, out);
        if (check->parsed()) return cmd_check(o, in, out);
        return cmd_corpus(o, out);
    } catch (const NotDivisibleError& e) {
        err << "error: " << one_line(e.what()) << "\n";
        return failed;
    } catch (const InconsistentMinorsError& e) {
        err << "error: " << one_line(e.what()) << "\n";
        return failed;
    } catch (const Error& e) {
        err << "error: " << one_line(e.what()) << "\n";
        return bad_input;
    }
}

int run(int argc, const char* const* argv) { return run(argc, argv, std::cin, std::cout, std::cerr); }

}  // namespace cohomdet::cli
