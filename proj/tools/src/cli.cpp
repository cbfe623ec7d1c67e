#include "lgriffiths/cli/cli.hpp"

#include <fstream>
#include <map>
#include <ostream>
#include <sstream>
#include <stdexcept>

#include <CLI11.hpp>
#include <json.hpp>

#include "lgriffiths/cli/suites.hpp"
#include "lgriffiths/errors.hpp"
#include "lgriffiths/griffiths.hpp"
#include "lgriffiths/krawtchouk.hpp"
#include "lgriffiths/operators.hpp"
#include "lgriffiths/oscillator.hpp"
#include "lgriffiths/tratnik.hpp"

namespace lgriffiths::cli {

using json = nlohmann::ordered_json;

namespace {

/// Bad user input; maps to exit code 2.
class ConfigError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

void add_params(CLI::App* cmd, RunConfig& c) {
    cmd->add_option("--p", c.p, "Krawtchouk parameter p (num/den)");
    cmd->add_option("--p1", c.p1, "parameter p1 (num/den)");
    cmd->add_option("--p2", c.p2, "parameter p2 (num/den)");
    cmd->add_option("--p3", c.p3, "parameter p3 (num/den)");
    cmd->add_option("--lambda", c.lambda, "Griffiths lambda (num/den, nonzero)");
    cmd->add_option("--N", c.N, "size N")->check(CLI::NonNegativeNumber);
}

void add_family(CLI::App* cmd, RunConfig& c) {
    const std::map<std::string, Family> families = {
        {"krawtchouk", Family::Krawtchouk}, {"tratnik", Family::Tratnik}, {"griffiths", Family::Griffiths}};
    cmd->add_option("--family", c.family, "krawtchouk | tratnik | griffiths")
        ->transform(CLI::CheckedTransformer(families, CLI::ignore_case));
}

void add_output(CLI::App* cmd, RunConfig& c) {
    const std::map<std::string, Format> formats = {{"csv", Format::Csv}, {"json", Format::Json}};
    cmd->add_option("--format", c.format, "csv | json")->transform(CLI::CheckedTransformer(formats, CLI::ignore_case));
    cmd->add_option("--out", c.out, "write the artifact here instead of stdout");
}

Rational parse_param(const std::optional<std::string>& text, const char* name) {
    if (!text) throw ConfigError(std::string("missing --") + name);
    try {
        return Rational::parse(*text);
    } catch (const std::invalid_argument&) {
        throw ConfigError(std::string("--") + name + ": '" + *text + "' is not a rational");
    }
}

int require_N(const RunConfig& c) {
    if (!c.N) throw ConfigError("missing --N");
    return *c.N;
}

oscillator::Complex parse_complex(const std::string& text) {
    auto parse_real = [&](const std::string& s) {
        std::size_t used = 0;
        double v = 0;
        try {
            v = std::stod(s, &used);
        } catch (const std::exception&) {
            throw ConfigError("--varphi: '" + text + "' is not a complex number");
        }
        if (used != s.size()) throw ConfigError("--varphi: '" + text + "' is not a complex number");
        return v;
    };
    if (text.empty()) throw ConfigError("--varphi is empty");
    if (text.back() != 'i') return {parse_real(text), 0.0};
    const std::string body = text.substr(0, text.size() - 1);
    std::size_t split = std::string::npos;
    for (std::size_t k = body.size(); k-- > 1;) {
        if ((body[k] == '+' || body[k] == '-') && body[k - 1] != 'e' && body[k - 1] != 'E') {
            split = k;
            break;
        }
    }
    const std::string re = split == std::string::npos ? "" : body.substr(0, split);
    std::string im = split == std::string::npos ? body : body.substr(split);
    if (im.empty() || im == "+") im = "1";
    if (im == "-") im = "-1";
    return {re.empty() ? 0.0 : parse_real(re), parse_real(im)};
}

std::string method_flag(griffiths::EvalMethod m) {
    switch (m) {
        case griffiths::EvalMethod::DirectSum: return "direct";
        case griffiths::EvalMethod::ViaTratnikXY: return "xy";
        case griffiths::EvalMethod::ViaTratnikYX: return "yx";
    }
    return "direct";
}

griffiths::EvalMethod parse_method(const std::string& s) {
    for (auto m : griffiths::kAllEvalMethods) {
        if (method_flag(m) == s) return m;
    }
    throw ConfigError("--method must be direct, xy or yx");
}

// Every family's parameters, validated before any evaluation.
struct Params {
    std::optional<krawtchouk::KrawtchoukParams> k;
    std::optional<tratnik::TratnikParams> t;
    std::optional<griffiths::ParamSet> g;
};

Params load_params(const RunConfig& c, Family family) {
    Params out;
    const int N = require_N(c);
    try {
        switch (family) {
            case Family::Krawtchouk:
                out.k.emplace(parse_param(c.p, "p"), N);
                break;
            case Family::Tratnik:
                out.t.emplace(parse_param(c.p1, "p1"), parse_param(c.p2, "p2"), N);
                break;
            case Family::Griffiths: {
                Rational p1 = parse_param(c.p1, "p1");
                Rational p2 = parse_param(c.p2, "p2");
                Rational p3 = parse_param(c.p3, "p3");
                Rational lambda = parse_param(c.lambda, "lambda");
                out.g.emplace(p1, p2, p3, lambda, N);
                break;
            }
        }
    } catch (const DegenerateParams& e) {
        throw ConfigError(e.what());
    }
    return out;
}

json params_json(const Params& p) {
    json o = json::object();
    if (p.k) o["p"] = p.k->p().to_string();
    if (p.t) {
        o["p1"] = p.t->p1().to_string();
        o["p2"] = p.t->p2().to_string();
    }
    if (p.g) {
        o["p1"] = p.g->p1().to_string();
        o["p2"] = p.g->p2().to_string();
        o["p3"] = p.g->p3().to_string();
        o["lambda"] = p.g->lambda().to_string();
    }
    return o;
}

int cmd_eval(const RunConfig& c, std::ostream& out) {
    const Params p = load_params(c, c.family);
    try {
        switch (c.family) {
            case Family::Krawtchouk:
                out << krawtchouk::k_eval(c.i, c.x, *p.k).to_string() << '\n';
                break;
            case Family::Tratnik:
                out << tratnik::t_eval(c.i, c.j, c.x, c.y, *p.t).to_string() << '\n';
                break;
            case Family::Griffiths:
                out << griffiths::g_eval(c.i, c.j, c.x, c.y, *p.g, parse_method(c.method)).to_string() << '\n';
                break;
        }
    } catch (const OutOfDomain& e) {
        throw ConfigError(e.what());
    }
    return kExitOk;
}

struct Row {
    int i, j, x, y;
    std::string value;
};

void emit_rows(const std::vector<Row>& rows, Format format, std::ostream& out) {
    if (format == Format::Csv) {
        out << "i,j,x,y,value\n";
        for (const auto& r : rows) out << r.i << ',' << r.j << ',' << r.x << ',' << r.y << ',' << r.value << '\n';
        return;
    }
    json arr = json::array();
    for (const auto& r : rows) arr.push_back({{"i", r.i}, {"j", r.j}, {"x", r.x}, {"y", r.y}, {"value", r.value}});
    out << arr.dump(2) << '\n';
}

int cmd_table(const RunConfig& c, std::ostream& out) {
    const Params p = load_params(c, c.family);
    const int N = require_N(c);
    std::vector<Row> rows;
    if (c.family == Family::Krawtchouk) {
        // Univariate: j and y are reported as 0.
        krawtchouk::KrawtchoukFamily family(p.k->p(), N);
        for (int i = 0; i <= N; ++i) {
            for (int x = 0; x <= N; ++x) rows.push_back({i, 0, x, 0, family.value(i, x, N).to_string()});
        }
    } else {
        const TriangleGrid grid(N);
        std::optional<tratnik::TratnikTable> tt;
        std::optional<griffiths::GriffithsTable> gt;
        if (p.t) tt.emplace(*p.t);
        if (p.g) gt.emplace(*p.g);
        const RationalMatrix& values = tt ? tt->values() : gt->values();
        for (std::size_t d = 0; d < grid.size(); ++d) {
            for (std::size_t v = 0; v < grid.size(); ++v) {
                rows.push_back({grid[d].a, grid[d].b, grid[v].a, grid[v].b, values(d, v).to_string()});
            }
        }
    }
    emit_rows(rows, c.format, out);
    return kExitOk;
}

int cmd_gram(const RunConfig& c, std::ostream& out) {
    const int N = require_N(c);
    const TriangleGrid grid(N);
    RationalMatrix gram;
    std::vector<Rational> expected;
    std::vector<std::pair<int, int>> labels;
    Params p;
    if (c.gram_kind == "krawtchouk") {
        p = load_params(c, Family::Krawtchouk);
        gram = krawtchouk::k_gram(*p.k);
        for (int i = 0; i <= N; ++i) {
            expected.push_back(krawtchouk::k_gram_diagonal(i, *p.k));
            labels.emplace_back(i, 0);
        }
    } else if (c.gram_kind == "biorth") {
        p = load_params(c, Family::Griffiths);
        const griffiths::ParamSet& ps = *p.g;
        if (c.weight == "corrected") {
            gram = griffiths::g_biorth_gram(ps);
        } else if (c.weight == "printed") {
            gram = griffiths::g_pairing_gram(
                ps, [&](int x, int y) { return griffiths::omega(x, y, ps.p2(), ps.p3(), N); });
        } else {
            throw ConfigError("--weight must be corrected or printed");
        }
        for (const auto& pt : grid.points()) {
            expected.push_back(griffiths::biorth_diagonal(pt.a, pt.b, ps));
            labels.emplace_back(pt.a, pt.b);
        }
    } else if (c.gram_kind == "tratnik-diagnostic") {
        p = load_params(c, Family::Tratnik);
        const tratnik::TratnikParams& tp = *p.t;
        gram = tratnik::t_gram_diagnostic([&](int x, int y) { return tratnik::trinomial_weight(x, y, tp); }, tp);
        for (const auto& pt : grid.points()) {
            expected.push_back(tratnik::trinomial_gram_diagonal(pt.a, pt.b, tp));
            labels.emplace_back(pt.a, pt.b);
        }
    } else {
        throw ConfigError("--kind must be krawtchouk, biorth or tratnik-diagnostic");
    }

    const bool diagonal = gram.is_diagonal();
    bool matches = true;
    for (std::size_t k = 0; k < expected.size(); ++k) matches = matches && gram(k, k) == expected[k];

    if (c.format == Format::Csv) {
        out << "# diagonal=" << (diagonal ? "true" : "false") << " matches_expected=" << (matches ? "true" : "false")
            << '\n';
        out << "row_i,row_j,col_i,col_j,value\n";
        for (std::size_t r = 0; r < labels.size(); ++r) {
            for (std::size_t k = 0; k < labels.size(); ++k) {
                out << labels[r].first << ',' << labels[r].second << ',' << labels[k].first << ',' << labels[k].second
                    << ',' << gram(r, k).to_string() << '\n';
            }
        }
    } else {
        json doc;
        doc["kind"] = c.gram_kind;
        if (c.gram_kind == "biorth") doc["weight"] = c.weight;
        doc["N"] = N;
        doc["params"] = params_json(p);
        doc["diagonal"] = diagonal;
        doc["matches_expected"] = matches;
        json lab = json::array();
        for (const auto& [a, b] : labels) lab.push_back({a, b});
        doc["labels"] = lab;
        json exp = json::array();
        for (const auto& e : expected) exp.push_back(e.to_string());
        doc["expected_diagonal"] = exp;
        json mat = json::array();
        for (std::size_t r = 0; r < gram.rows(); ++r) {
            json row = json::array();
            for (std::size_t k = 0; k < gram.cols(); ++k) row.push_back(gram(r, k).to_string());
            mat.push_back(row);
        }
        doc["matrix"] = mat;
        out << doc.dump(2) << '\n';
    }
    return diagonal && matches ? kExitOk : kExitFailed;
}

int cmd_check(const RunConfig& c, std::ostream& out) {
    const int N = require_N(c);
    if (c.samples < 1) throw ConfigError("--samples must be positive");
    bool known = false;
    for (auto name : kSuiteNames) known = known || name == c.suite;
    if (!known) {
        throw ConfigError("--suite must be one of krawtchouk-relations, tratnik, griffiths, duality, operators");
    }
    const SuiteResult result = run_suite(c.suite, N, c.seed, c.samples);
    if (result.failure) {
        const SuiteFailure& f = *result.failure;
        out << "FAIL suite=" << c.suite << " check=" << f.check << ' ' << f.indices << ' ' << f.params
            << " residual=" << f.residual.to_string() << '\n';
        out << "reproduce: " << reproducer(c) << '\n';
        return kExitFailed;
    }
    out << "PASS suite=" << c.suite << " N=" << N << " seed=" << c.seed << " samples=" << c.samples
        << " checks=" << result.checks << '\n';
    return kExitOk;
}

int cmd_operators(const RunConfig& c, std::ostream& out) {
    operators::OperatorKind kind{};
    try {
        kind = operators::parse_operator_kind(c.operator_kind);
    } catch (const std::invalid_argument& e) {
        throw ConfigError(e.what());
    }
    const bool t = operators::is_tratnik(kind);
    const Params p = load_params(c, t ? Family::Tratnik : Family::Griffiths);
    const operators::StencilOperator op = t ? operators::build_operator(kind, *p.t) : operators::build_operator(kind, *p.g);
    if (c.dump) {
        out << operators::to_json(op, 2) << '\n';
    } else {
        json doc;
        doc["kind"] = std::string(operators::to_string(kind));
        doc["N"] = op.grid().N();
        doc["nonzeros"] = op.nonzeros();
        doc["max_row_nonzeros"] = op.max_row_nonzeros();
        out << doc.dump(2) << '\n';
    }
    return kExitOk;
}

json complex_json(oscillator::Complex z) { return {{"re", z.real()}, {"im", z.imag()}}; }

int cmd_oscillator(const RunConfig& c, std::ostream& out, std::ostream& err) {
    if (!c.verify) throw ConfigError("oscillator: pass --verify");
    const int N = require_N(c);
    if (N < 1) throw ConfigError("oscillator: --N must be at least 1");
    const oscillator::Complex varphi = parse_complex(c.varphi);
    oscillator::FitReport r;
    try {
        r = oscillator::fit_and_verify(c.phi, c.theta, c.psi, varphi, N);
    } catch (const FitFailure& e) {
        err << "fit failed: " << e.what() << '\n' << "reproduce: " << reproducer(c) << '\n';
        return kExitFailed;
    }
    json doc;
    doc["angles"] = {{"phi", r.phi}, {"theta", r.theta}, {"psi", r.psi}};
    doc["varphi"] = complex_json(r.varphi);
    doc["N"] = r.N;
    doc["p1"] = r.p1;
    doc["p2"] = r.p2;
    doc["p3"] = r.p3;
    doc["mu"] = r.mu;
    doc["lambda"] = complex_json(r.lambda);
    doc["normalization"] = complex_json(r.normalization);
    doc["max_mismatch"] = r.max_mismatch;
    doc["unitarity_defect"] = r.unitarity_defect;
    doc["orthogonal_case"] = r.orthogonal_case;
    doc["fitted_entries"] = r.fitted_entries;
    doc["fitted_parameters"] = r.fitted_parameters;
    doc["verified_entries"] = r.verified_entries;
    doc["tolerance"] = c.tolerance;
    const bool pass = r.max_mismatch <= c.tolerance;
    doc["pass"] = pass;
    out << doc.dump(2) << '\n';
    if (!pass) err << "mismatch above tolerance\nreproduce: " << reproducer(c) << '\n';
    return pass ? kExitOk : kExitFailed;
}

const char* command_name(Command c) {
    switch (c) {
        case Command::Eval: return "eval";
        case Command::Table: return "table";
        case Command::Gram: return "gram";
        case Command::Check: return "check";
        case Command::Operators: return "operators";
        case Command::Oscillator: return "oscillator";
    }
    return "?";
}

const char* family_name(Family f) {
    switch (f) {
        case Family::Krawtchouk: return "krawtchouk";
        case Family::Tratnik: return "tratnik";
        case Family::Griffiths: return "griffiths";
    }
    return "?";
}

}  // namespace

std::string reproducer(const RunConfig& c) {
    std::ostringstream s;
    s << "lgriffiths " << command_name(c.command);
    auto opt = [&](const char* name, const std::optional<std::string>& v) {
        if (v) s << " --" << name << ' ' << *v;
    };
    switch (c.command) {
        case Command::Check:
            s << " --suite " << c.suite;
            if (c.N) s << " --N " << *c.N;
            s << " --seed " << c.seed << " --samples " << c.samples;
            break;
        case Command::Oscillator:
            s << " --verify --phi " << c.phi << " --theta " << c.theta << " --psi " << c.psi << " --varphi " << c.varphi;
            if (c.N) s << " --N " << *c.N;
            break;
        default:
            if (c.command == Command::Eval || c.command == Command::Table) s << " --family " << family_name(c.family);
            if (c.command == Command::Gram) s << " --kind " << c.gram_kind << " --weight " << c.weight;
            if (c.command == Command::Operators) s << " --kind " << c.operator_kind;
            opt("p", c.p);
            opt("p1", c.p1);
            opt("p2", c.p2);
            opt("p3", c.p3);
            opt("lambda", c.lambda);
            if (c.N) s << " --N " << *c.N;
            if (c.command == Command::Eval) {
                s << " --i " << c.i << " --j " << c.j << " --x " << c.x << " --y " << c.y;
            }
            break;
    }
    return s.str();
}

std::variant<RunConfig, int> parse_args(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
    RunConfig c;
    CLI::App app{"Exact Krawtchouk, Tratnik and lambda-Griffiths polynomials", "lgriffiths"};
    app.require_subcommand(1);

    auto* eval = app.add_subcommand("eval", "evaluate one value");
    add_family(eval, c);
    add_params(eval, c);
    eval->add_option("--i", c.i);
    eval->add_option("--j", c.j);
    eval->add_option("--x", c.x);
    eval->add_option("--y", c.y);
    eval->add_option("--method", c.method, "Griffiths evaluation: direct | xy | yx");

    auto* table = app.add_subcommand("table", "value table over the double triangle");
    add_family(table, c);
    add_params(table, c);
    add_output(table, c);

    auto* gram = app.add_subcommand("gram", "Gram matrix and diagonality verdict");
    add_params(gram, c);
    add_output(gram, c);
    gram->add_option("--kind", c.gram_kind, "krawtchouk | biorth | tratnik-diagnostic");
    gram->add_option("--weight", c.weight, "biorth weight: corrected | printed");

    auto* check = app.add_subcommand("check", "exact residual suite");
    check->add_option("--suite", c.suite, "krawtchouk-relations | tratnik | griffiths | duality | operators")->required();
    check->add_option("--N", c.N, "largest size")->check(CLI::NonNegativeNumber);
    check->add_option("--seed", c.seed);
    check->add_option("--samples", c.samples, "random parameter draws");
    check->add_option("--out", c.out);

    auto* ops = app.add_subcommand("operators", "stencil operators");
    add_params(ops, c);
    ops->add_option("--kind", c.operator_kind, "e.g. GriffithsRecX")->required();
    ops->add_flag("--dump", c.dump, "emit the full operator as JSON");
    ops->add_option("--out", c.out);

    auto* osc = app.add_subcommand("oscillator", "oscillator-model fit and verification");
    osc->add_flag("--verify", c.verify);
    osc->add_option("--phi", c.phi);
    osc->add_option("--theta", c.theta);
    osc->add_option("--psi", c.psi);
    osc->add_option("--varphi", c.varphi, "real or complex, e.g. 0.3, 0.7i, 0.1+0.2i");
    osc->add_option("--N", c.N)->check(CLI::PositiveNumber);
    osc->add_option("--tol", c.tolerance, "maximum entry mismatch");
    osc->add_option("--out", c.out);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e, out, err);
        return code == 0 ? kExitOk : kExitConfig;
    }

    const std::pair<CLI::App*, Command> commands[] = {{eval, Command::Eval},     {table, Command::Table},
                                                      {gram, Command::Gram},     {check, Command::Check},
                                                      {ops, Command::Operators}, {osc, Command::Oscillator}};
    for (const auto& [sub, cmd] : commands) {
        if (sub->parsed()) c.command = cmd;
    }
    return c;
}

int run(const RunConfig& config, std::ostream& out, std::ostream& err) {
    std::ofstream file;
    if (config.out) {
        file.open(*config.out);
        if (!file) {
            err << "error: cannot open " << *config.out << " for writing\n";
            return kExitConfig;
        }
    }
    std::ostream& sink = config.out ? static_cast<std::ostream&>(file) : out;
    try {
        switch (config.command) {
            case Command::Eval: return cmd_eval(config, sink);
            case Command::Table: return cmd_table(config, sink);
            case Command::Gram: return cmd_gram(config, sink);
            case Command::Check: return cmd_check(config, sink);
            case Command::Operators: return cmd_operators(config, sink);
            case Command::Oscillator: return cmd_oscillator(config, sink, err);
        }
    } catch (const ConfigError& e) {
        err << "error: " << e.what() << '\n';
        return kExitConfig;
    } catch (const DegenerateParams& e) {
        err << "error: " << e.what() << '\n';
        return kExitConfig;
    }
    return kExitConfig;
}

}  // namespace lgriffiths::cli
