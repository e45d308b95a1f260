#include "chernum/cobord.hpp"
#include "chernum/expr.hpp"
#include "chernum/geommodel.hpp"
#include "chernum/pseries.hpp"
#include "chernum/relations.hpp"
#include "chernum/report_json.hpp"
#include "chernum/selftest.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

namespace {

using namespace chernum;

constexpr int kExitVerificationFailure = 1;
constexpr int kExitParseError = 2;
constexpr int kExitInternalError = 3;

struct Options {
    std::string format = "table";
    std::string report_path;
};

void print_report(const relations::VerificationReport& r, const Options& opt, std::ostream& os) {
    if (opt.format == "json") {
        os << relations::report_to_json(r).dump() << "\n";
        return;
    }
    os << r.relation << "  " << r.manifold;
    if (!r.bundle.empty()) os << "  bundle=" << r.bundle;
    os << "  equal=" << (r.equal ? "yes" : "NO") << "  degrees=" << r.degrees << "  millis=" << r.millis << "\n";
    os << "  lhs: " << relations::value_to_string(r.lhs) << "\n";
    os << "  rhs: " << relations::value_to_string(r.rhs) << "\n";
}

void write_report_file(const std::vector<relations::VerificationReport>& reports, const std::string& path) {
    std::ofstream out(path);
    if (!out) throw std::runtime_error("cannot open report file: " + path);
    for (const auto& r : reports) out << relations::report_to_json(r).dump() << "\n";
}

int default_line_factor(const geom::ProjProduct& m) {
    for (int i = 0; i < m.factors(); ++i)
        if (m.dims[static_cast<std::size_t>(i)] == 1) return i;
    throw std::invalid_argument("model has no CP(1) factor");
}

void enforce_degree_cap(int needed, const std::optional<int>& cap) {
    if (cap && *cap < needed)
        throw dsl::ParseError("dimension bound exceeded: computation needs truncation order " +
                                  std::to_string(needed) + " > --max-degree " + std::to_string(*cap),
                              0);
}

int run(int argc, char** argv) {
    CLI::App app{"exact verification of Chern-number relations over products of projective spaces"};
    app.require_subcommand(1);

    Options opt;
    std::string manifold_text, bundle_text = "O(0)", partition_text;
    std::optional<int> max_degree;
    int factor = -1, max_dim = 4;

    auto add_common = [&](CLI::App* sub) {
        sub->add_option("--format", opt.format, "output format")->check(CLI::IsMember({"table", "json"}));
        sub->add_option("--report", opt.report_path, "write one JSON object per case to this file");
        sub->add_option("--max-degree", max_degree, "cap on truncation orders (defaults to the manifold dimension)");
    };

    auto* verify = app.add_subcommand("verify", "check one relation on one model");
    std::string relation;
    verify->add_option("relation", relation, "one of thm3|thm4.1|thm4.2|thm5.1|cor-as|euler-even|bv")
        ->required()
        ->check(CLI::IsMember({"thm3", "thm4.1", "thm4.2", "thm5.1", "cor-as", "euler-even", "bv"}));
    verify->add_option("--manifold", manifold_text, "e.g. \"CP(2)*CP(1)\" or \"pt\"")->required();
    verify->add_option("--bundle", bundle_text, "e.g. \"O(1)\", \"tau\", \"nu\", \"conj(tau)\", \"O(1)+O(1)\"");
    verify->add_option("--factor", factor, "index of the CP(1) factor for euler-even");
    add_common(verify);

    auto* genus = app.add_subcommand("genus", "evaluate a genus on the model's cobordism class");
    std::string genus_name;
    genus->add_option("genus", genus_name, "one of todd|chiy|sign|ahat|euler")
        ->required()
        ->check(CLI::IsMember({"todd", "chiy", "sign", "ahat", "euler"}));
    genus->add_option("--manifold", manifold_text)->required();
    add_common(genus);

    auto* dual = app.add_subcommand("dual", "cobordism class of the virtual submanifold dual to m_lambda(bundle)");
    dual->add_option("--partition", partition_text, "e.g. \"[2,1]\"")->required();
    dual->add_option("--bundle", bundle_text)->required();
    dual->add_option("--manifold", manifold_text)->required();
    add_common(dual);

    auto* selftest = app.add_subcommand("selftest", "run the whole acceptance matrix");
    selftest->add_option("--max-dim", max_dim, "largest total complex dimension of the models");
    add_common(selftest);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : kExitParseError;
    }

    if (verify->parsed()) {
        auto m = dsl::parse_manifold(manifold_text);
        enforce_degree_cap(m.total_dim(), max_degree);
        relations::VerificationReport r;
        if (relation == "thm3") {
            r = relations::master_relation(m);
        } else if (relation == "thm4.1") {
            r = relations::chi_y_relation(m);
        } else if (relation == "thm4.2") {
            r = relations::signature_relation(m);
        } else if (relation == "bv") {
            r = relations::signature_congruence(m);
        } else if (relation == "thm5.1") {
            r = relations::general_chern_relation(m, dsl::parse_bundle(bundle_text));
        } else if (relation == "cor-as") {
            r = relations::integrality_relation(m, dsl::parse_bundle(bundle_text));
        } else {  // euler-even
            int f = factor >= 0 ? factor : default_line_factor(m);
            r = relations::line_factor_euler_relation(m, f);
        }
        print_report(r, opt, std::cout);
        if (!opt.report_path.empty()) write_report_file({r}, opt.report_path);
        return r.equal ? 0 : kExitVerificationFailure;
    }

    if (genus->parsed()) {
        auto m = dsl::parse_manifold(manifold_text);
        int n = std::max(m.total_dim(), 1);
        enforce_degree_cap(m.total_dim(), max_degree);
        auto cls = geom::normal_numbers(m);
        if (genus_name == "chiy") {
            std::cout << cobord::genus(cls, pseries::chi_y_series(n).inverse()).to_string() << "\n";
            return 0;
        }
        Rational v;
        if (genus_name == "todd")
            v = cobord::genus(cls, pseries::todd_reciprocal_series(n));
        else if (genus_name == "sign")
            v = cobord::genus(cls, pseries::signature_series(n));
        else if (genus_name == "ahat")
            v = cobord::genus(cls, pseries::ahat_series(n));
        else
            v = cobord::genus(cls, pseries::euler_series(n));
        std::cout << to_string(v) << "\n";
        return 0;
    }

    if (dual->parsed()) {
        auto m = dsl::parse_manifold(manifold_text);
        enforce_degree_cap(m.total_dim(), max_degree);
        auto lam = dsl::parse_partition(partition_text);
        auto b = dsl::parse_bundle(bundle_text);
        std::cout << cobord::to_string(geom::chern_submanifold(m, lam, b)) << "\n";
        return 0;
    }

    // selftest
    enforce_degree_cap(max_dim, max_degree);
    auto criteria = selftest::run_acceptance(max_dim);
    bool all = true;
    std::vector<relations::VerificationReport> reports;
    for (const auto& c : criteria) {
        all = all && c.pass;
        if (opt.format == "json") {
            for (const auto& r : c.cases) print_report(r, opt, std::cout);
        } else {
            std::cout << "criterion " << c.id << ": " << (c.pass ? "PASS" : "FAIL") << " - " << c.title << " ("
                      << c.cases.size() << " cases)\n";
            for (const auto& r : c.cases)
                if (!r.equal) print_report(r, opt, std::cout);
        }
        reports.insert(reports.end(), c.cases.begin(), c.cases.end());
    }
    if (!opt.report_path.empty()) write_report_file(reports, opt.report_path);
    if (opt.format != "json") std::cout << (all ? "all criteria passed" : "FAILURES present") << "\n";
    return all ? 0 : kExitVerificationFailure;
}

}  // namespace

int main(int argc, char** argv) {
    try {
        return run(argc, argv);
    } catch (const chernum::dsl::ParseError& e) {
        std::cerr << "parse error: " << e.what() << "\n";
        return kExitParseError;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitParseError;
    } catch (const std::domain_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitParseError;
    } catch (const std::exception& e) {
        std::cerr << "internal error: " << e.what() << "\n";
        return kExitInternalError;
    }
}
