// Command-line interface: torsion subgroups of elliptic curves with good
// reduction over Q_p and its cyclotomic extensions, classification lists,
// the F_p census, table verification, and the Q_2 ramification report.

#include <ellqp/dataset.hpp>

#include <CLI11.hpp>

#include <iostream>

using namespace ellqp;

namespace {

CurveModel resolve_curve(const std::string& spec, const std::string& data_path, std::string* label_out) {
    if (spec.find(',') != std::string::npos) {
        auto parts = [&] {
            std::vector<std::string> out;
            std::string cur;
            for (char c : spec) {
                if (c == ',') {
                    out.push_back(cur);
                    cur.clear();
                } else {
                    cur += c;
                }
            }
            out.push_back(cur);
            return out;
        }();
        if (parts.size() != 5) throw std::invalid_argument("--curve expects a1,a2,a3,a4,a6");
        *label_out = spec;
        return CurveModel(Int(parts[0]), Int(parts[1]), Int(parts[2]), Int(parts[3]), Int(parts[4]));
    }
    for (const auto& rec : load_dataset(data_path)) {
        if (rec.label == spec) {
            *label_out = rec.label;
            return rec.curve();
        }
    }
    throw dataset_error("label '" + spec + "' not found in " + data_path);
}

void print_torsion_text(const TorsionReport& rep) {
    std::cout << rep.label << "  p=" << rep.p << "  level="
              << (rep.level_infinity ? std::string("inf") : std::to_string(rep.level))
              << "  torsion=" << rep.group.to_string() << "  (G_{" << rep.group.m << ","
              << rep.group.k << "})  reduction=" << kind_name(rep.kind) << "\n  certificate: "
              << rep.certificate << "\n";
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"torsion of elliptic curves over Q_p and its p-cyclotomic extensions"};
    app.require_subcommand(1);

    long precision = Padic::kDefaultDigits;
    bool slow_oracle = false;
    app.add_option("--precision", precision, "working precision in base-p digits")->capture_default_str();
    app.add_flag("--slow-oracle", slow_oracle, "disable candidate pruning in torsion_structure");

    // torsion
    auto* tor = app.add_subcommand("torsion", "torsion subgroup of one curve");
    std::string curve_spec, level_spec = "0", data_path = "data/curves.tsv";
    long prime = 0;
    bool as_json = false;
    tor->add_option("--curve", curve_spec, "Cremona-style label or a1,a2,a3,a4,a6")->required();
    tor->add_option("--prime", prime, "residue characteristic p")->required();
    tor->add_option("--level", level_spec, "cyclotomic level m (Q_p(mu_{p^m})) or 'inf'")
        ->capture_default_str();
    tor->add_option("--data", data_path, "dataset used to resolve labels")->capture_default_str();
    tor->add_flag("--json", as_json, "JSON output");

    // classify
    auto* cls = app.add_subcommand("classify", "the classified group list for (p, kind, level)");
    std::string kind_spec = "good", cls_level = "qp";
    long cls_p = 0;
    cls->add_option("--prime", cls_p, "p")->required();
    cls->add_option("--kind", kind_spec, "good | ordinary | supersingular")->capture_default_str();
    cls->add_option("--level", cls_level, "qp | mu4 | inf")->capture_default_str();

    // census
    auto* cen = app.add_subcommand("census", "exhaustive E(F_p) group census");
    long cen_p = 0;
    cen->add_option("--prime", cen_p, "p (<= 13)")->required();

    // verify-tables
    auto* ver = app.add_subcommand("verify-tables", "check every dataset expectation");
    std::string ver_data;
    bool ver_json = false;
    ver->add_option("--data", ver_data, "dataset TSV path")->required();
    ver->add_flag("--json", ver_json, "JSON output");

    // ram2
    auto* ram = app.add_subcommand("ram2", "quadratic/quartic extension tables and compositum checks");
    bool ram_json = false;
    ram->add_flag("--json", ram_json, "JSON output");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int rc = app.exit(e);
        return rc == 0 ? 0 : 2;
    }

    TorsionOptions opts;
    opts.digits = precision;
    opts.slow_oracle = slow_oracle;

    try {
        if (*tor) {
            std::string label;
            CurveModel E = resolve_curve(curve_spec, data_path, &label);
            TorsionReport rep;
            if (level_spec == "inf") {
                rep = cyclotomic_torsion_infty(E, prime, opts);
            } else {
                rep = torsion_structure(E, prime, std::stol(level_spec), opts);
            }
            rep.label = label;
            if (as_json)
                std::cout << torsion_report_json(rep) << "\n";
            else
                print_torsion_text(rep);
            return 0;
        }
        if (*cls) {
            GroupList gl = theorem_group_list(cls_p, parse_kind(kind_spec), parse_level(cls_level));
            std::cout << group_list_json(gl) << "\n";
            return 0;
        }
        if (*cen) {
            std::cout << census_json(cen_p, census_Fp(cen_p)) << "\n";
            return 0;
        }
        if (*ver) {
            VerifyReport rep = verify_tables(load_dataset(ver_data), opts);
            if (ver_json) {
                std::cout << verify_report_json(rep) << "\n";
            } else {
                for (const auto& r : rep.rows) {
                    std::cout << (r.pass ? "[ ok ] " : "[FAIL] ") << "table " << r.table << "  "
                              << r.label << "  p=" << r.p << "  level=" << r.level << "  expected G_{"
                              << r.expected.m << "," << r.expected.k << "}  computed G_{"
                              << r.computed.m << "," << r.computed.k << "}\n";
                }
                std::cout << rep.passed << " passed, " << rep.failed << " failed\n";
            }
            return rep.all_pass() ? 0 : 1;
        }
        if (*ram) {
            Ram2Report rep = ram2_report(precision);
            if (ram_json) {
                std::cout << ram2_report_json(rep) << "\n";
            } else {
                auto print_row = [](const Ram2Report::Row& r) {
                    std::cout << (r.match ? "[ ok ] " : "[FAIL] ") << r.name << "  " << r.polynomial
                              << "  f=" << r.f << " e=" << r.e << " u=" << r.u << " mu_" << r.mu << "\n";
                };
                for (const auto& r : rep.quadratic) print_row(r);
                for (const auto& r : rep.quartic) print_row(r);
                std::cout << "L1*L2 = F(mu4): " << rep.composite.l1_l2_in_f_mu4
                          << "; Li*F(mu4) = F(mu8): " << rep.composite.l3_to_l6_give_mu8
                          << "; F*Mi = F(mu8): " << rep.composite.quartics_in_f_mu8 << "\n";
            }
            return rep.all_ok() ? 0 : 1;
        }
    } catch (const dataset_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const precision_error& e) {
        std::cerr << "computational failure: " << e.what() << "\n";
        return 3;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "computational failure: " << e.what() << "\n";
        return 3;
    }
    return 2;
}
