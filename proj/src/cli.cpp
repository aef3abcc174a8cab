#include "gsym/cli.hpp"

#include <algorithm>
#include <limits>
#include <optional>
#include <ostream>
#include <sstream>
#include <stdexcept>

#include "CLI11.hpp"
#include "json.hpp"

#include "gsym/gelfand.hpp"
#include "gsym/irrchar.hpp"
#include "gsym/verify.hpp"
#include "gsym/wreath.hpp"

namespace gsym::cli {

using Json = nlohmann::ordered_json;

namespace {

/// Bad user input; maps to exit code 2.
struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// A command ran but its result is wrong; maps to exit code 1.
struct ConsistencyError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

std::string csv_field(const std::string& s)
{
    if (s.find_first_of(",\"\n") == std::string::npos) return s;
    std::string out = "\"";
    for (char c : s) {
        if (c == '"') out += '"';
        out += c;
    }
    return out + "\"";
}

std::string csv_line(const std::vector<std::string>& fields)
{
    std::string out;
    for (std::size_t i = 0; i < fields.size(); ++i) {
        if (i) out += ',';
        out += csv_field(fields[i]);
    }
    return out + "\n";
}

std::vector<std::string> order_strings(const OutputDocument& doc)
{
    std::vector<std::string> out;
    for (const auto& o : doc.orders) out.push_back(o.str());
    return out;
}

std::string render_text_table(const OutputDocument& doc)
{
    std::vector<std::vector<std::string>> grid;
    std::vector<std::string> header{""};
    header.insert(header.end(), doc.cols.begin(), doc.cols.end());
    grid.push_back(header);
    if (!doc.orders.empty()) {
        std::vector<std::string> line{"order"};
        for (const auto& o : order_strings(doc)) line.push_back(o);
        grid.push_back(line);
    }
    for (std::size_t r = 0; r < doc.rows.size(); ++r) {
        std::vector<std::string> line{doc.rows[r]};
        line.insert(line.end(), doc.values[r].begin(), doc.values[r].end());
        grid.push_back(line);
    }
    std::vector<std::size_t> width(header.size(), 0);
    for (const auto& line : grid)
        for (std::size_t c = 0; c < line.size(); ++c) width[c] = std::max(width[c], line[c].size());

    std::ostringstream os;
    os << "# " << doc.kind << " k=" << doc.k << " n=" << doc.n << "\n";
    for (const auto& line : grid) {
        std::string text;
        for (std::size_t c = 0; c < line.size(); ++c) {
            if (c) text += "  ";
            text += line[c] + std::string(width[c] - line[c].size(), ' ');
        }
        while (!text.empty() && text.back() == ' ') text.pop_back();
        os << text << "\n";
    }
    return os.str();
}

std::string render_text_report(const OutputDocument& doc)
{
    std::ostringstream os;
    os << "# " << doc.kind << " k=" << doc.k << " n=" << doc.n << "\n";
    os << "suite: " << doc.suite << "\n";
    os << "checks: " << doc.checks << "\n";
    os << "failures: " << doc.failures.size() << "\n";
    for (const auto& f : doc.failures) os << "  " << f << "\n";
    os << (doc.passed ? "PASS" : "FAIL") << "\n";
    return os.str();
}

std::string render_csv(const OutputDocument& doc)
{
    std::string out;
    if (doc.is_report) {
        out += csv_line({"suite", "k", "n", "checks", "failures", "passed"});
        out += csv_line({doc.suite, std::to_string(doc.k), std::to_string(doc.n), std::to_string(doc.checks),
                         std::to_string(doc.failures.size()), doc.passed ? "true" : "false"});
        for (const auto& f : doc.failures) out += csv_line({"failure", f});
        return out;
    }
    std::vector<std::string> header{"label"};
    header.insert(header.end(), doc.cols.begin(), doc.cols.end());
    out += csv_line(header);
    if (!doc.orders.empty()) {
        std::vector<std::string> line{"order"};
        for (const auto& o : order_strings(doc)) line.push_back(o);
        out += csv_line(line);
    }
    for (std::size_t r = 0; r < doc.rows.size(); ++r) {
        std::vector<std::string> line{doc.rows[r]};
        line.insert(line.end(), doc.values[r].begin(), doc.values[r].end());
        out += csv_line(line);
    }
    return out;
}

Json order_json(const BigInt& o)
{
    if (o >= 0 && o <= std::numeric_limits<std::uint64_t>::max()) return Json(o.convert_to<std::uint64_t>());
    throw std::out_of_range("class order " + o.str() + " does not fit in 64 bits");
}

}  // namespace

OutputDocument table_document(const CharacterTable& table, const std::string& kind)
{
    OutputDocument doc;
    doc.k = table.k;
    doc.n = table.n;
    doc.kind = kind;
    doc.rows = table.row_labels;
    doc.cols = table.col_labels;
    doc.orders = table.class_orders;
    for (const auto& row : table.values) {
        std::vector<std::string> line;
        for (const auto& v : row) line.push_back(v.str());
        doc.values.push_back(std::move(line));
    }
    return doc;
}

std::string to_json(const OutputDocument& doc)
{
    Json j;
    j["schema_version"] = doc.schema_version;
    j["group"] = {{"k", doc.k}, {"n", doc.n}};
    j["kind"] = doc.kind;
    j["rows"] = doc.rows;
    j["cols"] = doc.cols;
    Json orders = Json::array();
    for (const auto& o : doc.orders) orders.push_back(order_json(o));
    j["orders"] = orders;
    j["values"] = doc.values;
    if (doc.is_report) {
        j["suite"] = doc.suite;
        j["passed"] = doc.passed;
        j["checks"] = doc.checks;
        j["failures"] = doc.failures;
    }
    return j.dump(2) + "\n";
}

OutputDocument from_json(const std::string& text)
{
    try {
        const Json j = Json::parse(text);
        OutputDocument doc;
        doc.schema_version = j.at("schema_version").get<std::string>();
        doc.k = j.at("group").at("k").get<int>();
        doc.n = j.at("group").at("n").get<int>();
        doc.kind = j.at("kind").get<std::string>();
        doc.rows = j.at("rows").get<std::vector<std::string>>();
        doc.cols = j.at("cols").get<std::vector<std::string>>();
        for (const auto& o : j.at("orders")) doc.orders.emplace_back(o.get<std::uint64_t>());
        doc.values = j.at("values").get<std::vector<std::vector<std::string>>>();
        if (j.contains("suite")) {
            doc.is_report = true;
            doc.suite = j.at("suite").get<std::string>();
            doc.passed = j.at("passed").get<bool>();
            doc.checks = j.at("checks").get<std::uint64_t>();
            doc.failures = j.at("failures").get<std::vector<std::string>>();
        }
        return doc;
    } catch (const Json::exception& e) {
        throw std::invalid_argument(std::string("malformed output document: ") + e.what());
    }
}

std::string render(const OutputDocument& doc, Format format)
{
    switch (format) {
    case Format::json:
        return to_json(doc);
    case Format::csv:
        return render_csv(doc);
    case Format::text:
        break;
    }
    return doc.is_report ? render_text_report(doc) : render_text_table(doc);
}

// ------------------------------------------------------------------ commands

namespace {

struct Options {
    int k = 1;
    int n = 1;
    Format format = Format::text;
    std::string method = "def";
    std::uint64_t cap = kDefaultEnumerationCap;
    bool marked = false;
    std::string suite;
    std::string index;
    std::string element;
    std::string cls;
    int samples = -1;
    std::uint64_t seed = 0;
    bool seed_given = false;
};

void require_group(const Options& o)
{
    if (o.k < 1) throw UsageError("--k must be at least 1");
    if (o.n < 1) throw UsageError("--n must be at least 1");
}

OutputDocument cmd_classes(const Options& o)
{
    require_group(o);
    OutputDocument doc;
    doc.k = o.k;
    doc.n = o.n;
    doc.kind = "classes";
    doc.rows = {"representative"};
    doc.values.emplace_back();
    if (o.marked) {
        for (const auto& m : marked_k_partitions_of(o.n, o.k)) {
            doc.cols.push_back(m.str());
            doc.orders.push_back(k_class_size(m, o.k));
            doc.values[0].push_back(k_class_representative(m).str());
        }
    } else {
        for (const auto& t : k_partitions_of(o.n, o.k)) {
            doc.cols.push_back(t.str());
            doc.orders.push_back(class_size(t, o.k));
            doc.values[0].push_back(class_representative(t).str());
        }
    }
    return doc;
}

OutputDocument cmd_chartable(const Options& o)
{
    require_group(o);
    const auto table = character_table(o.n, o.k);
    BigInt squares = 0;
    for (const auto& row : table.row_labels) {
        const BigInt d = char_degree(KPartition::parse(row));
        squares += d * d;
    }
    if (squares != group_order(o.n, o.k))
        throw ConsistencyError("sum of squared degrees " + squares.str() + " differs from the group order");
    return table_document(table, "chartable");
}

GenCharMethod parse_method(const std::string& m)
{
    if (m == "def") return GenCharMethod::definition;
    if (m == "mn") return GenCharMethod::mn;
    throw UsageError("--method must be def or mn");
}

OutputDocument cmd_genchartable(const Options& o)
{
    require_group(o);
    const auto method = parse_method(o.method);
    if (method == GenCharMethod::mn && o.k != 2) throw UsageError("--method mn requires --k 2");
    return table_document(gen_char_table(o.n, o.k, method, o.cap), "genchartable");
}

OutputDocument cmd_verify(const Options& o)
{
    require_group(o);
    CheckReport report;
    const std::string& s = o.suite;
    if ((s == "mn-vs-def" || s == "corollary") && o.k != 2) throw UsageError("suite " + s + " requires --k 2");
    if (s == "corollary" && o.n < 2) throw UsageError("suite corollary requires --n 2 or more");
    if (s == "gelfand") {
        report = check_gelfand(o.n, o.k, o.cap);
    } else if (s == "orthogonality") {
        report = check_orthogonality(o.n, o.k, o.cap);
    } else if (s == "mn-vs-def") {
        report = check_mn_vs_def(o.n, o.k, o.cap);
    } else if (s == "corollary") {
        report = check_corollary(o.n, o.k);
    } else if (s == "induced") {
        report = check_induced(o.n, o.k, o.samples < 0 ? 1000 : o.samples, o.seed_given ? o.seed : 20240901, 5000,
                               o.cap);
    } else if (s == "zonal-eq") {
        report = check_zonal_equation(o.n, o.k, o.samples < 0 ? 100 : o.samples, o.seed_given ? o.seed : 20240902,
                                      o.cap);
    } else {
        throw UsageError("unknown suite " + s);
    }
    OutputDocument doc;
    doc.k = o.k;
    doc.n = o.n;
    doc.kind = "verify-report";
    doc.is_report = true;
    doc.suite = report.suite;
    doc.passed = report.passed();
    doc.checks = report.checks;
    doc.failures = report.failures;
    return doc;
}

OutputDocument cmd_eval(const Options& o)
{
    require_group(o);
    const auto method = parse_method(o.method);
    if (method == GenCharMethod::mn && o.k != 2) throw UsageError("--method mn requires --k 2");
    if (o.element.empty() == o.cls.empty()) throw UsageError("eval needs exactly one of --element and --class");

    std::optional<GenCharIndex> idx;
    try {
        const auto label = MarkedKPartition::parse(o.index);
        if (label.k() != o.k || label.size() != o.n) throw UsageError("--index is not a marked k-partition of n");
        idx.emplace(label);
    } catch (const std::invalid_argument& e) {
        throw UsageError(std::string("bad --index: ") + e.what());
    }

    WreathElement x;
    try {
        if (!o.element.empty()) {
            x = WreathElement::parse(o.element, o.k);
        } else {
            const auto m = MarkedKPartition::parse(o.cls);
            if (m.k() != o.k || m.size() != o.n) throw UsageError("--class is not a marked k-partition of n");
            x = k_class_representative(m);
        }
    } catch (const std::invalid_argument& e) {
        throw UsageError(std::string("bad element: ") + e.what());
    }
    if (x.degree() != o.n) throw UsageError("element degree differs from --n");

    const auto cls = marked_type_of(x);
    const Cyclotomic value = method == GenCharMethod::mn ? Cyclotomic(gen_char_mn(idx->label(), cls))
                                                         : gen_char_def(*idx, x, o.cap);
    OutputDocument doc;
    doc.k = o.k;
    doc.n = o.n;
    doc.kind = "value";
    doc.rows = {idx->label().str()};
    doc.cols = {cls.str()};
    doc.orders = {k_class_size(cls, o.k)};
    doc.values = {{value.str()}};
    return doc;
}

}  // namespace

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err)
{
    Options o;
    std::string format = "text";

    CLI::App app{"Exact characters, zonal spherical functions and generalized characters of Z_k wr S_n", "gsym"};
    app.require_subcommand(1);
    auto add_group = [&](CLI::App* sub) {
        sub->add_option("--k", o.k, "order of the cyclic group")->required();
        sub->add_option("--n", o.n, "degree of the symmetric group")->required();
        sub->add_option("--format", format, "text, csv or json")->check(CLI::IsMember({"text", "csv", "json"}));
        sub->add_option("--cap", o.cap, "largest group enumerated by brute force");
    };

    auto* classes = app.add_subcommand("classes", "conjugacy classes, or K-classes with --marked");
    add_group(classes);
    classes->add_flag("--marked", o.marked, "index by marked k-partitions (K-classes)");

    auto* chartable = app.add_subcommand("chartable", "irreducible character table");
    add_group(chartable);

    auto* genchartable = app.add_subcommand("genchartable", "generalized character table");
    add_group(genchartable);
    genchartable->add_option("--method", o.method, "def or mn")->check(CLI::IsMember({"def", "mn"}));

    auto* verify = app.add_subcommand("verify", "run a verification suite");
    add_group(verify);
    verify->add_option("suite", o.suite, "gelfand, orthogonality, mn-vs-def, induced, zonal-eq or corollary")
        ->required()
        ->check(CLI::IsMember({"gelfand", "orthogonality", "mn-vs-def", "induced", "zonal-eq", "corollary"}));
    verify->add_option("--samples", o.samples, "random samples for induced and zonal-eq")
        ->check(CLI::NonNegativeNumber);
    auto* seed = verify->add_option("--seed", o.seed, "random seed for induced and zonal-eq");

    auto* eval = app.add_subcommand("eval", "one generalized character value");
    add_group(eval);
    eval->add_option("--method", o.method, "def or mn")->check(CLI::IsMember({"def", "mn"}));
    eval->add_option("--index", o.index, "marked label of the character, e.g. \"2,1*|-\"")->required();
    eval->add_option("--element", o.element, "element \"c_1,...,c_n ; i_1,...,i_n\" or \"c ; (cycles)\"");
    eval->add_option("--class", o.cls, "marked label of a K-class");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return 0;
    } catch (const CLI::ParseError& e) {
        const std::string help = app.get_subcommands().empty() ? app.help() : app.get_subcommands().front()->help();
        err << "error: " << e.what() << "\n" << help;
        return 2;
    }
    o.format = format == "json" ? Format::json : format == "csv" ? Format::csv : Format::text;
    o.seed_given = seed->count() > 0;

    try {
        OutputDocument doc;
        if (*classes) doc = cmd_classes(o);
        else if (*chartable) doc = cmd_chartable(o);
        else if (*genchartable) doc = cmd_genchartable(o);
        else if (*verify) doc = cmd_verify(o);
        else doc = cmd_eval(o);
        out << render(doc, o.format);
        return doc.passed ? 0 : 1;
    } catch (const UsageError& e) {
        err << "error: " << e.what() << "\n";
        return 2;
    } catch (const CapExceeded& e) {
        err << "error: " << e.what() << " (raise --cap to allow it)\n";
        return 2;
    } catch (const std::invalid_argument& e) {
        err << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        err << "internal error: " << e.what() << "\n";
        return 1;
    }
}

}  // namespace gsym::cli
