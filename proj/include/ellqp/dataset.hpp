#pragma once

#include <ellqp/ram2.hpp>

namespace ellqp {

struct dataset_error : std::runtime_error {
    explicit dataset_error(const std::string& what) : std::runtime_error(what) {}
};

/// Expected torsion for one (prime, level) of a dataset curve.
struct Expectation {
    long p = 2;
    long level = 0;  // m for mu_{p^m}; ignored when infinity is set
    bool infinity = false;
    TorsionGroup group;
};

struct CurveRecord {
    std::string label;
    Int a[5];  // a1, a2, a3, a4, a6
    std::vector<Expectation> expect;

    CurveModel curve() const { return CurveModel(a[0], a[1], a[2], a[3], a[4]); }
};

/// Parses the TSV `label a1 a2 a3 a4 a6 [expect:p=..,level=<m|inf>,group=<m>x<mk>]...`
/// and self-validates every row (nonzero discriminant, unique labels, good
/// reduction at every expectation prime, conductor support consistent with
/// the label). Throws dataset_error with the offending line number.
std::vector<CurveRecord> load_dataset(const std::string& path);

std::string serialize_dataset(const std::vector<CurveRecord>& recs);

struct VerifyRow {
    int table;  // 3..7 as in the source tables
    std::string label;
    long p;
    std::string level;  // "0", "2", "inf"
    ReductionKind kind;
    TorsionGroup expected;
    TorsionGroup computed;
    std::string certificate;
    bool pass;
};

struct VerifyReport {
    std::vector<VerifyRow> rows;
    long passed = 0;
    long failed = 0;
    bool all_pass() const { return failed == 0 && passed > 0; }
};

/// Runs every expectation through the torsion machinery and compares.
VerifyReport verify_tables(const std::vector<CurveRecord>& dataset, const TorsionOptions& opts = {});

// JSON renderings (schema 1)
std::string torsion_report_json(const TorsionReport& rep);
std::string verify_report_json(const VerifyReport& rep);
std::string ram2_report_json(const Ram2Report& rep);
std::string census_json(long p, const CensusResult& res);
std::string group_list_json(const GroupList& gl);

}  // namespace ellqp
