#include "quandlink/cli.hpp"

#include <fstream>
#include <iomanip>
#include <iostream>
#include <sstream>

#include <json.hpp>

#include "quandlink/errors.hpp"
#include "quandlink/gauss_code.hpp"
#include "quandlink/homcount.hpp"
#include "quandlink/linking.hpp"
#include "quandlink/moves.hpp"
#include "quandlink/quandle.hpp"
#include "quandlink/wirtinger.hpp"

using ordered_json = nlohmann::ordered_json;

namespace quandlink::cli {

std::optional<Format> parse_format(const std::string& name) {
    if (name == "table") return Format::Table;
    if (name == "csv") return Format::Csv;
    if (name == "json") return Format::Json;
    return std::nullopt;
}

namespace {

void emit(const Common& common, std::ostream& out, const std::string& text) {
    if (!common.quiet) out << text;
}

void emit_json(const Common& common, std::ostream& out, const ordered_json& j) {
    if (!common.quiet) out << j.dump(2) << "\n";
}

std::string csv_field(const std::string& s) {
    if (s.find_first_of(",\"\n") == std::string::npos) return s;
    std::string quoted = "\"";
    for (char c : s) {
        if (c == '"') quoted += '"';
        quoted += c;
    }
    quoted += '"';
    return quoted;
}

int read_all(const std::string& path, std::string& text, std::ostream& err) {
    if (path == "-") {
        std::ostringstream ss;
        ss << std::cin.rdbuf();
        text = ss.str();
        return kExitOk;
    }
    std::ifstream in(path);
    if (!in) {
        err << "error: cannot open file: " << path << "\n";
        return kExitNoFile;
    }
    std::ostringstream ss;
    ss << in.rdbuf();
    text = ss.str();
    return kExitOk;
}

int load_code(const std::string& path, SignedGaussCode& code, std::ostream& err) {
    std::string text;
    if (int rc = read_all(path, text, err); rc != kExitOk) return rc;
    try {
        code = SignedGaussCode::parse(text);
    } catch (const ParseError& e) {
        err << "error: " << path << ": " << e.what() << "\n";
        return kExitParse;
    }
    return kExitOk;
}

// Quandle source: "Xn:k", "Tn:k", or a matrix file path.
int load_target(const std::string& spec, std::optional<Quandle>& target, std::ostream& err) {
    auto family = [&](const std::string& prefix, auto&& make) -> std::optional<int> {
        if (spec.rfind(prefix, 0) != 0) return std::nullopt;
        try {
            std::size_t used = 0;
            int k = std::stoi(spec.substr(prefix.size()), &used);
            if (used != spec.size() - prefix.size()) throw std::invalid_argument("trailing chars");
            target = make(k);
            return kExitOk;
        } catch (const std::exception& e) {
            err << "error: bad quandle spec '" << spec << "': " << e.what() << "\n";
            return kExitInvalid;
        }
    };
    if (auto rc = family("Xn:", [](int k) { return make_xn(k); })) return *rc;
    if (auto rc = family("Tn:", [](int k) { return make_trivial(k); })) return *rc;

    std::string text;
    if (int rc = read_all(spec, text, err); rc != kExitOk) return rc;
    try {
        std::istringstream in(text);
        OperationMatrix m = read_operation_matrix(in);
        QuandleVerification ver = verify_quandle(m);
        if (!ver.ok()) {
            err << "error: " << spec << " is not a quandle:\n";
            for (const auto& v : ver.violations) err << "  " << v.describe() << "\n";
            return kExitInvalid;
        }
        target = std::move(ver.quandle);
    } catch (const ParseError& e) {
        err << "error: " << spec << ": " << e.what() << "\n";
        return kExitParse;
    }
    return kExitOk;
}

std::string classification(int n, std::uint64_t count) {
    std::uint64_t full = static_cast<std::uint64_t>(n + 1) * (n + 1);
    if (count == full) return "(n+1)^2";
    if (count == full - static_cast<std::uint64_t>(n)) return "(n+1)^2-n";
    if (count == static_cast<std::uint64_t>(n) * n + 1) return "n^2+1";
    return "other";
}

std::string orbits_to_string(const OrbitDecomposition& d) {
    std::string s;
    for (std::size_t i = 0; i < d.orbits.size(); ++i) {
        if (i) s += ',';
        s += '{';
        for (std::size_t j = 0; j < d.orbits[i].size(); ++j) {
            if (j) s += ',';
            s += std::to_string(d.orbits[i][j]);
        }
        s += '}';
    }
    return s;
}

std::string relation_text(const CrossingRelation& r) {
    return "a" + std::to_string(r.under_out) + " = a" + std::to_string(r.under_in) +
           (r.sign > 0 ? " ▷ a" : " ▷⁻¹ a") + std::to_string(r.over);
}

std::optional<CountMethod> parse_method(const std::string& name) {
    if (name == "closed") return CountMethod::ClosedForm;
    if (name == "oracle") return CountMethod::Oracle;
    if (name == "propagate") return CountMethod::Propagate;
    return std::nullopt;
}

ordered_json rows_json(const std::map<int, std::uint64_t>& counts) {
    ordered_json rows = ordered_json::array();
    for (const auto& [n, count] : counts)
        rows.push_back({{"n", n}, {"count", count}, {"classification", classification(n, count)}});
    return rows;
}

std::string rows_table(const std::map<int, std::uint64_t>& counts) {
    std::ostringstream os;
    os << std::setw(4) << "n" << std::setw(12) << "count"
       << "  classification\n";
    for (const auto& [n, count] : counts)
        os << std::setw(4) << n << std::setw(12) << count << "  " << classification(n, count)
           << "\n";
    return os.str();
}

std::string rows_csv(const std::map<int, std::uint64_t>& counts) {
    std::string s = "n,count,classification\n";
    for (const auto& [n, count] : counts)
        s += std::to_string(n) + "," + std::to_string(count) + "," + classification(n, count) + "\n";
    return s;
}

ordered_json move_json(const MoveRecord& record) {
    if (const auto* r1 = std::get_if<R1Insertion>(&record))
        return {{"type", "r1"},
                {"component", r1->component},
                {"position", r1->position},
                {"sign", r1->sign},
                {"over_first", r1->over_first}};
    const auto& r2 = std::get<R2Insertion>(record);
    return {{"type", "r2"},          {"component_a", r2.component_a}, {"position_a", r2.position_a},
            {"component_b", r2.component_b}, {"position_b", r2.position_b},   {"sign", r2.sign}};
}

} // namespace

int cmd_check(const std::string& quandle_spec, const Common& common, std::ostream& out,
              std::ostream& err) {
    QuandleVerification ver;
    if (quandle_spec.rfind("Xn:", 0) == 0 || quandle_spec.rfind("Tn:", 0) == 0) {
        std::optional<Quandle> q;
        if (int rc = load_target(quandle_spec, q, err); rc != kExitOk) return rc;
        ver.quandle = std::move(q);
    } else {
        std::string text;
        if (int rc = read_all(quandle_spec, text, err); rc != kExitOk) return rc;
        try {
            std::istringstream in(text);
            ver = verify_quandle(read_operation_matrix(in));
        } catch (const ParseError& e) {
            err << "error: " << quandle_spec << ": " << e.what() << "\n";
            return kExitParse;
        }
    }

    if (!ver.ok()) {
        if (common.format == Format::Json) {
            ordered_json j{{"source", quandle_spec}, {"valid", false}};
            j["violations"] = ordered_json::array();
            for (const auto& v : ver.violations) j["violations"].push_back(v.describe());
            emit_json(common, out, j);
        } else if (common.format == Format::Csv) {
            std::string joined;
            for (const auto& v : ver.violations) {
                if (!joined.empty()) joined += "; ";
                joined += v.describe();
            }
            emit(common, out, "valid,violations\nfalse," + csv_field(joined) + "\n");
        } else {
            std::ostringstream os;
            os << "quandle: invalid (" << ver.violations.size() << " violations)\n";
            for (const auto& v : ver.violations) os << "  " << v.describe() << "\n";
            emit(common, out, os.str());
        }
        return kExitInvalid;
    }

    const Quandle& q = *ver.quandle;
    OrbitDecomposition d = orbits(q);
    bool connected = d.orbits.size() == 1;
    bool toq = is_trivial_orbit_quandle(q);

    if (common.format == Format::Json) {
        ordered_json j{{"source", quandle_spec}, {"valid", true}, {"order", q.order()}};
        j["orbits"] = ordered_json::array();
        for (const auto& orbit : d.orbits) j["orbits"].push_back(orbit);
        j["connected"] = connected;
        j["trivial_orbit_quandle"] = toq;
        emit_json(common, out, j);
    } else if (common.format == Format::Csv) {
        emit(common, out,
             "valid,order,orbits,connected,toq\ntrue," + std::to_string(q.order()) + "," +
                 csv_field(orbits_to_string(d)) + "," + (connected ? "yes" : "no") + "," +
                 (toq ? "yes" : "no") + "\n");
    } else {
        std::ostringstream os;
        os << "quandle: valid\n"
           << "order: " << q.order() << "\n"
           << "orbits: " << orbits_to_string(d) << "\n"
           << "connected: " << (connected ? "yes" : "no") << "\n"
           << "TOQ: " << (toq ? "yes" : "no") << "\n";
        emit(common, out, os.str());
    }
    return kExitOk;
}

int cmd_present(const std::string& link_path, const Common& common, std::ostream& out,
                std::ostream& err) {
    SignedGaussCode code;
    if (int rc = load_code(link_path, code, err); rc != kExitOk) return rc;
    KnotQuandlePresentation p = presentation(code);

    if (common.format == Format::Json) {
        ordered_json j{{"link", link_path}, {"generators", p.generator_count}};
        j["generator_components"] = ordered_json::array();
        for (int g = 1; g <= p.generator_count; ++g)
            j["generator_components"].push_back(p.generator_component[g]);
        j["relations"] = ordered_json::array();
        for (const auto& r : p.relations)
            j["relations"].push_back({{"under_in", r.under_in},
                                      {"over", r.over},
                                      {"under_out", r.under_out},
                                      {"sign", r.sign},
                                      {"text", relation_text(r)}});
        emit_json(common, out, j);
    } else if (common.format == Format::Csv) {
        std::string s = "under_in,over,under_out,sign\n";
        for (const auto& r : p.relations)
            s += std::to_string(r.under_in) + "," + std::to_string(r.over) + "," +
                 std::to_string(r.under_out) + "," + std::to_string(r.sign) + "\n";
        emit(common, out, s);
    } else {
        std::ostringstream os;
        os << "generators: " << p.generator_count << "\n";
        for (int g = 1; g <= p.generator_count; ++g)
            os << "  a" << g << " (component " << p.generator_component[g] << ")\n";
        os << "relations: " << p.relations.size() << "\n";
        for (const auto& r : p.relations) os << "  " << relation_text(r) << "\n";
        emit(common, out, os.str());
    }
    return kExitOk;
}

int cmd_linking(const std::string& link_path, const Common& common, std::ostream& out,
                std::ostream& err) {
    SignedGaussCode code;
    if (int rc = load_code(link_path, code, err); rc != kExitOk) return rc;
    if (code.component_count() != 2) {
        err << "error: linking requires a 2-component link; " << link_path << " has "
            << code.component_count() << "\n";
        return kExitComponents;
    }

    LinkingProfile profile = virtual_linking_numbers(code, 1, 2);
    std::string evidence = to_string(classify_splitness_evidence(profile));

    if (common.format == Format::Json) {
        ordered_json j{{"link", link_path}, {"lk12", profile.lk_over}, {"lk21", profile.lk_under}};
        if (profile.classical_is_integer())
            j["lk"] = profile.classical_times2() / 2;
        else
            j["lk"] = static_cast<double>(profile.classical_times2()) / 2.0;
        j["evidence"] = evidence;
        emit_json(common, out, j);
    } else if (common.format == Format::Csv) {
        emit(common, out,
             "lk12,lk21,lk,evidence\n" + std::to_string(profile.lk_over) + "," +
                 std::to_string(profile.lk_under) + "," + profile.classical_to_string() + "," +
                 evidence + "\n");
    } else {
        std::ostringstream os;
        os << "lk12: " << profile.lk_over << "\n"
           << "lk21: " << profile.lk_under << "\n"
           << "lk: " << profile.classical_to_string() << "\n"
           << "evidence: " << evidence << "\n";
        emit(common, out, os.str());
    }
    return kExitOk;
}

int cmd_hom_count(const std::string& link_path, const std::string& quandle_spec,
                  const std::string& method, bool list_colorings, double budget,
                  const Common& common, std::ostream& out, std::ostream& err) {
    auto m = parse_method(method);
    if (!m || *m == CountMethod::ClosedForm) {
        err << "error: hom-count method must be 'oracle' or 'propagate'\n";
        return kExitInvalid;
    }

    SignedGaussCode code;
    if (int rc = load_code(link_path, code, err); rc != kExitOk) return rc;
    std::optional<Quandle> target;
    if (int rc = load_target(quandle_spec, target, err); rc != kExitOk) return rc;

    KnotQuandlePresentation p = presentation(code);
    CountOptions options;
    options.list_colorings = list_colorings;
    options.assignment_budget = budget;

    ColoringReport report;
    try {
        report = *m == CountMethod::Oracle ? count_oracle(p, *target, options)
                                           : count_propagate(p, *target, options);
    } catch (const OracleBudgetExceeded& e) {
        err << "error: " << e.what() << "\n";
        return kExitBudget;
    }

    if (common.format == Format::Json) {
        ordered_json j{{"count", report.count},
                       {"method", to_string(report.method)},
                       {"arcs", report.arc_count},
                       {"target_order", report.target_order}};
        if (report.colorings) {
            j["colorings"] = ordered_json::array();
            for (const auto& coloring : *report.colorings) {
                ordered_json row = ordered_json::array();
                for (int arc = 1; arc <= report.arc_count; ++arc)
                    row.push_back(coloring.color[arc]);
                j["colorings"].push_back(row);
            }
        }
        emit_json(common, out, j);
    } else if (common.format == Format::Csv) {
        emit(common, out,
             "count,method,arcs,target_order\n" + std::to_string(report.count) + "," +
                 to_string(report.method) + "," + std::to_string(report.arc_count) + "," +
                 std::to_string(report.target_order) + "\n");
    } else {
        std::ostringstream os;
        os << "count: " << report.count << "\n"
           << "method: " << to_string(report.method) << "\n"
           << "arcs: " << report.arc_count << "\n"
           << "target_order: " << report.target_order << "\n";
        if (report.colorings)
            for (const auto& coloring : *report.colorings) {
                os << "coloring:";
                for (int arc = 1; arc <= report.arc_count; ++arc) os << " " << coloring.color[arc];
                os << "\n";
            }
        emit(common, out, os.str());
    }
    return kExitOk;
}

int cmd_invariants(const std::string& link_path, const InvariantsOptions& options,
                   const Common& common, std::ostream& out, std::ostream& err) {
    auto m = parse_method(options.method);
    if (!m) {
        err << "error: invariants method must be 'closed', 'oracle' or 'propagate'\n";
        return kExitInvalid;
    }
    if (options.min_n < 2 || options.max_n < options.min_n || options.max_n > 64) {
        err << "error: n range must satisfy 2 <= min <= max <= 64\n";
        return kExitInvalid;
    }

    SignedGaussCode code;
    if (int rc = load_code(link_path, code, err); rc != kExitOk) return rc;
    if (*m == CountMethod::ClosedForm && code.component_count() != 2) {
        err << "error: the closed form needs a 2-component link; " << link_path << " has "
            << code.component_count() << "\n";
        return kExitComponents;
    }

    std::map<int, std::uint64_t> counts;
    try {
        counts = xn_count_sweep(code, options.min_n, options.max_n, *m, options.budget);
    } catch (const OracleBudgetExceeded& e) {
        err << "error: " << e.what() << "\n";
        return kExitBudget;
    }

    if (common.format == Format::Json)
        emit_json(common, out,
                  ordered_json{{"link", link_path},
                               {"method", to_string(*m)},
                               {"rows", rows_json(counts)}});
    else if (common.format == Format::Csv)
        emit(common, out, rows_csv(counts));
    else
        emit(common, out, rows_table(counts));
    return kExitOk;
}

int cmd_recover(const std::string& link_path, std::optional<int> max_n, const std::string& method,
                double budget, const Common& common, std::ostream& out, std::ostream& err) {
    auto m = parse_method(method);
    if (!m) {
        err << "error: recover method must be 'closed', 'oracle' or 'propagate'\n";
        return kExitInvalid;
    }

    SignedGaussCode code;
    if (int rc = load_code(link_path, code, err); rc != kExitOk) return rc;
    if (code.component_count() != 2) {
        err << "error: recovery requires a 2-component link; " << link_path << " has "
            << code.component_count() << "\n";
        return kExitComponents;
    }

    const int sound_bound = std::max(2, code.interlinked_crossing_count());
    const int bound = max_n.value_or(sound_bound);
    if (bound < sound_bound) {
        err << "error: --max-n " << bound << " is below the sound bound " << sound_bound
            << " (the diagram's two-component crossing count); the zero classification would be"
               " unreliable\n";
        return kExitInvalid;
    }

    std::map<int, std::uint64_t> counts;
    RecoveryResult rec;
    try {
        counts = xn_count_sweep(code, 2, bound, *m, budget);
        rec = recover_abs_linking(counts, bound);
    } catch (const OracleBudgetExceeded& e) {
        err << "error: " << e.what() << "\n";
        return kExitBudget;
    }

    if (common.format == Format::Json) {
        ordered_json j{{"link", link_path}, {"method", to_string(*m)}, {"N", rec.bound}};
        j["abs_lk"] = rec.abs_lk;
        j["branch"] = to_string(rec.branch);
        j["S"] = rec.s;
        j["S_prime"] = rec.s_prime;
        j["max_S_prime"] = rec.max_s_prime ? ordered_json(*rec.max_s_prime) : ordered_json(nullptr);
        j["gcd_interpretation"] =
            rec.gcd_interpretation ? ordered_json(*rec.gcd_interpretation) : ordered_json(nullptr);
        j["classical_consistent"] = rec.consistent_with_classical;
        j["rows"] = rows_json(counts);
        emit_json(common, out, j);
    } else {
        auto set_to_string = [](const std::vector<int>& v) {
            std::string s = "{";
            for (std::size_t i = 0; i < v.size(); ++i) {
                if (i) s += ',';
                s += std::to_string(v[i]);
            }
            return s + "}";
        };
        if (common.format == Format::Csv) {
            std::string s = rows_csv(counts);
            s += "# N=" + std::to_string(rec.bound) + "\n";
            s += "# S=" + set_to_string(rec.s) + "\n";
            s += "# S_prime=" + set_to_string(rec.s_prime) + "\n";
            s += "# abs_lk=" + std::to_string(rec.abs_lk) + "\n";
            s += "# branch=" + to_string(rec.branch) + "\n";
            s += std::string("# classical_consistent=") +
                 (rec.consistent_with_classical ? "true" : "false") + "\n";
            emit(common, out, s);
        } else {
            std::ostringstream os;
            os << rows_table(counts);
            os << "N: " << rec.bound << "\n"
               << "S: " << set_to_string(rec.s) << "\n"
               << "S': " << set_to_string(rec.s_prime) << "\n"
               << "|lk|: " << rec.abs_lk << " (" << to_string(rec.branch) << ")\n";
            if (rec.max_s_prime) os << "max(S'): " << *rec.max_s_prime << "\n";
            if (rec.gcd_interpretation)
                os << "gcd(|lk12|,|lk21|): " << *rec.gcd_interpretation << "\n";
            os << "classical_consistent: " << (rec.consistent_with_classical ? "yes" : "no")
               << "\n";
            emit(common, out, os.str());
        }
    }
    return kExitOk;
}

int cmd_perturb(const std::string& link_path, std::uint64_t seed, int budget, const Common& common,
                std::ostream& out, std::ostream& err) {
    if (budget < 0) {
        err << "error: budget must be >= 0\n";
        return kExitInvalid;
    }
    SignedGaussCode code;
    if (int rc = load_code(link_path, code, err); rc != kExitOk) return rc;

    auto [result, script] = random_perturb(code, seed, budget);

    if (common.format == Format::Json) {
        ordered_json j{{"link", link_path}, {"seed", seed}, {"budget", budget}};
        j["code"] = result.serialize();
        j["moves"] = ordered_json::array();
        for (const auto& record : script.moves) j["moves"].push_back(move_json(record));
        emit_json(common, out, j);
    } else if (common.format == Format::Csv) {
        std::string s = "type,component_a,position_a,component_b,position_b,sign,over_first\n";
        for (const auto& record : script.moves) {
            if (const auto* r1 = std::get_if<R1Insertion>(&record))
                s += "r1," + std::to_string(r1->component) + "," + std::to_string(r1->position) +
                     ",,," + std::to_string(r1->sign) + "," + (r1->over_first ? "true" : "false") +
                     "\n";
            else {
                const auto& r2 = std::get<R2Insertion>(record);
                s += "r2," + std::to_string(r2.component_a) + "," + std::to_string(r2.position_a) +
                     "," + std::to_string(r2.component_b) + "," + std::to_string(r2.position_b) +
                     "," + std::to_string(r2.sign) + ",\n";
            }
        }
        emit(common, out, s);
    } else {
        // Gauss code first, then the script as comment lines: the output is
        // itself a readable Gauss-code file.
        std::ostringstream os;
        os << result.serialize();
        for (const auto& record : script.moves) {
            if (const auto* r1 = std::get_if<R1Insertion>(&record))
                os << "# r1 component=" << r1->component << " position=" << r1->position
                   << " sign=" << (r1->sign > 0 ? "+" : "-")
                   << " over_first=" << (r1->over_first ? "yes" : "no") << "\n";
            else {
                const auto& r2 = std::get<R2Insertion>(record);
                os << "# r2 a=(" << r2.component_a << "," << r2.position_a << ") b=("
                   << r2.component_b << "," << r2.position_b << ") sign="
                   << (r2.sign > 0 ? "+" : "-") << "\n";
            }
        }
        emit(common, out, os.str());
    }
    return kExitOk;
}

} // namespace quandlink::cli
