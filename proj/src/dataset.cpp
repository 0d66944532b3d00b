#include <ellqp/dataset.hpp>

#include <json.hpp>

#include <algorithm>
#include <fstream>
#include <sstream>

namespace ellqp {

namespace {

std::vector<std::string> split(const std::string& s, char sep) {
    std::vector<std::string> out;
    std::string cur;
    for (char c : s) {
        if (c == sep) {
            out.push_back(cur);
            cur.clear();
        } else {
            cur += c;
        }
    }
    out.push_back(cur);
    return out;
}

Expectation parse_expectation(const std::string& field, long lineno) {
    // expect:p=<prime>,level=<m|inf>,group=<m>x<mk>
    auto fail = [&](const std::string& why) {
        throw dataset_error("line " + std::to_string(lineno) + ": bad expectation '" + field +
                            "': " + why);
    };
    std::string body = field.substr(std::string("expect:").size());
    Expectation e;
    bool have_p = false, have_level = false, have_group = false;
    for (const auto& kv : split(body, ',')) {
        auto eq = kv.find('=');
        if (eq == std::string::npos) fail("missing '='");
        std::string key = kv.substr(0, eq), val = kv.substr(eq + 1);
        if (key == "p") {
            e.p = std::stol(val);
            have_p = true;
        } else if (key == "level") {
            if (val == "inf") {
                e.infinity = true;
                e.level = -1;
            } else {
                e.level = std::stol(val);
            }
            have_level = true;
        } else if (key == "group") {
            auto x = val.find('x');
            if (x == std::string::npos) fail("group must be <m>x<mk>");
            long m = std::stol(val.substr(0, x));
            long mk = std::stol(val.substr(x + 1));
            if (m < 1 || mk < 1 || mk % m != 0) fail("group invariants must satisfy m | mk");
            e.group = TorsionGroup::from_invariants(m, mk);
            have_group = true;
        } else {
            fail("unknown key '" + key + "'");
        }
    }
    if (!have_p || !have_level || !have_group) fail("p, level and group are all required");
    return e;
}

long label_conductor(const std::string& label) {
    size_t i = 0;
    while (i < label.size() && isdigit(static_cast<unsigned char>(label[i]))) ++i;
    if (i == 0) return 0;
    return std::stol(label.substr(0, i));
}

}  // namespace

std::vector<CurveRecord> load_dataset(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw dataset_error("cannot open dataset file: " + path);
    std::vector<CurveRecord> out;
    std::string line;
    long lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        if (line.empty() || line[0] == '#') continue;
        auto fields = split(line, '\t');
        if (fields.size() < 6)
            throw dataset_error("line " + std::to_string(lineno) + ": expected 6 tab-separated fields, got " +
                                std::to_string(fields.size()));
        CurveRecord rec;
        rec.label = fields[0];
        for (int i = 0; i < 5; ++i) {
            try {
                rec.a[i] = Int(fields[1 + i]);
            } catch (const std::exception&) {
                throw dataset_error("line " + std::to_string(lineno) + ": bad coefficient '" +
                                    fields[1 + i] + "'");
            }
        }
        for (size_t i = 6; i < fields.size(); ++i) {
            if (fields[i].empty()) continue;
            if (fields[i].rfind("expect:", 0) != 0)
                throw dataset_error("line " + std::to_string(lineno) + ": unexpected field '" + fields[i] +
                                    "'");
            rec.expect.push_back(parse_expectation(fields[i], lineno));
        }
        // self-validation
        Int disc;
        try {
            disc = rec.curve().discriminant();
        } catch (const std::exception& ex) {
            throw dataset_error("line " + std::to_string(lineno) + ": " + ex.what());
        }
        long N = label_conductor(rec.label);
        if (N > 1) {
            for (long q = 2; q <= N; ++q) {
                if (N % q != 0) continue;
                while (N % q == 0) N /= q;
                if (disc % q != 0)
                    throw dataset_error("line " + std::to_string(lineno) +
                                        ": label level has a prime not dividing the discriminant");
            }
        }
        for (const auto& e : rec.expect) {
            if (disc % e.p == 0)
                throw dataset_error("line " + std::to_string(lineno) + ": expectation at p=" +
                                    std::to_string(e.p) + " but the model has bad reduction there");
        }
        for (const auto& r : out)
            if (r.label == rec.label)
                throw dataset_error("line " + std::to_string(lineno) + ": duplicate label " + rec.label);
        out.push_back(std::move(rec));
    }
    return out;
}

std::string serialize_dataset(const std::vector<CurveRecord>& recs) {
    std::ostringstream os;
    for (const auto& r : recs) {
        os << r.label;
        for (int i = 0; i < 5; ++i) os << '\t' << r.a[i].str();
        for (const auto& e : r.expect) {
            os << "\texpect:p=" << e.p << ",level=" << (e.infinity ? std::string("inf") : std::to_string(e.level))
               << ",group=" << e.group.m << "x" << e.group.m * e.group.k;
        }
        os << '\n';
    }
    return os.str();
}

namespace {

int table_of(const Expectation& e, ReductionKind kind) {
    if (!e.infinity && e.level == 0) return kind == ReductionKind::supersingular ? 4 : 3;
    if (e.infinity) return kind == ReductionKind::supersingular ? 7 : 5;
    return 6;  // finite positive level: the mu_4 table
}

}  // namespace

VerifyReport verify_tables(const std::vector<CurveRecord>& dataset, const TorsionOptions& opts) {
    VerifyReport rep;
    for (const auto& rec : dataset) {
        CurveModel E = rec.curve();
        for (const auto& e : rec.expect) {
            TorsionReport tr = e.infinity ? cyclotomic_torsion_infty(E, e.p, opts)
                                          : torsion_structure(E, e.p, e.level, opts);
            VerifyRow row;
            row.table = table_of(e, tr.kind);
            row.label = rec.label;
            row.p = e.p;
            row.level = e.infinity ? "inf" : std::to_string(e.level);
            row.kind = tr.kind;
            row.expected = e.group;
            row.computed = tr.group;
            row.certificate = tr.certificate;
            row.pass = e.group == tr.group;
            rep.rows.push_back(std::move(row));
        }
    }
    std::sort(rep.rows.begin(), rep.rows.end(), [](const VerifyRow& a, const VerifyRow& b) {
        return std::tie(a.table, a.label, a.p) < std::tie(b.table, b.label, b.p);
    });
    for (const auto& r : rep.rows) (r.pass ? rep.passed : rep.failed)++;
    return rep;
}

// ---------------------------------------------------------------- JSON

namespace {

nlohmann::json group_json(const TorsionGroup& g) { return {{"m", g.m}, {"k", g.k}}; }

}  // namespace

std::string torsion_report_json(const TorsionReport& rep) {
    nlohmann::json j{{"schema", 1},
                     {"label", rep.label},
                     {"p", rep.p},
                     {"level", rep.level_infinity ? nlohmann::json("inf") : nlohmann::json(rep.level)},
                     {"group", group_json(rep.group)},
                     {"kind", kind_name(rep.kind)},
                     {"certificate", rep.certificate}};
    return j.dump(2);
}

std::string verify_report_json(const VerifyReport& rep) {
    nlohmann::json rows = nlohmann::json::array();
    for (const auto& r : rep.rows) {
        rows.push_back({{"table", r.table},
                        {"label", r.label},
                        {"p", r.p},
                        {"level", r.level},
                        {"kind", kind_name(r.kind)},
                        {"expected", group_json(r.expected)},
                        {"computed", group_json(r.computed)},
                        {"pass", r.pass}});
    }
    nlohmann::json j{{"schema", 1},
                     {"rows", rows},
                     {"passed", rep.passed},
                     {"failed", rep.failed},
                     {"all_pass", rep.all_pass()}};
    return j.dump(2);
}

std::string ram2_report_json(const Ram2Report& rep) {
    auto row_json = [](const Ram2Report::Row& r) {
        return nlohmann::json{{"name", r.name},     {"polynomial", r.polynomial},
                              {"f", r.f},           {"e", r.e},
                              {"u", r.u},           {"mu", r.mu},
                              {"break_computed", r.break_computed},
                              {"match", r.match}};
    };
    nlohmann::json quad = nlohmann::json::array(), quart = nlohmann::json::array();
    for (const auto& r : rep.quadratic) quad.push_back(row_json(r));
    for (const auto& r : rep.quartic) quart.push_back(row_json(r));
    nlohmann::json j{{"schema", 1},
                     {"quadratic_extensions", quad},
                     {"quartic_extensions", quart},
                     {"compositum",
                      {{"L1L2_equals_F_mu4", rep.composite.l1_l2_in_f_mu4},
                       {"Li_F_mu4_equals_F_mu8", rep.composite.l3_to_l6_give_mu8},
                       {"F_Mi_equals_F_mu8", rep.composite.quartics_in_f_mu8},
                       {"details", rep.composite.details}}},
                     {"all_ok", rep.all_ok()}};
    return j.dump(2);
}

std::string census_json(long p, const CensusResult& res) {
    auto set_json = [](const std::set<TorsionGroup>& s) {
        nlohmann::json a = nlohmann::json::array();
        for (const auto& g : s) a.push_back(group_json(g));
        return a;
    };
    nlohmann::json j{{"schema", 1},
                     {"p", p},
                     {"all", set_json(res.all)},
                     {"ordinary", set_json(res.ordinary)},
                     {"supersingular", set_json(res.supersingular)}};
    return j.dump(2);
}

std::string group_list_json(const GroupList& gl) {
    nlohmann::json a = nlohmann::json::array();
    for (const auto& g : gl.groups) a.push_back(group_json(g));
    nlohmann::json j{{"schema", 1}, {"provenance", gl.provenance}, {"groups", a}};
    return j.dump(2);
}

}  // namespace ellqp
