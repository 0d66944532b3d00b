#pragma once

#include <ellqp/torsion.hpp>

namespace ellqp {

/// A quadratic or quartic extension of Q_2 with its declared table data and
/// a constructed tower-field realization.
struct ExtensionDescriptor {
    std::string name;
    ZPoly polynomial;
    long declared_f = 1;
    long declared_e = 1;
    long declared_break = 0;   // Fontaine-convention maximal upper ramification break
    long declared_mu = 2;      // printed mu_n column
    FieldPtr realization;
};

/// Fontaine-convention break of the quadratic extension defined by a monic
/// integer quadratic generating the maximal order: 0 when unramified, else
/// v_2(disc). Rejects reducible polynomials and non-maximal-order generators.
long quadratic_break(const ZPoly& g);

/// Whether mu_n is contained in L (n in {2, 3, 4, 6, 8}), decided by a root
/// search for the n-th cyclotomic polynomial with certified depth.
bool mu_membership(const FieldPtr& L, long n);

/// The printed mu_n label: (largest 2-power part) * (3 if mu_3 is present).
long mu_column(const FieldPtr& L);

std::vector<ExtensionDescriptor> quadratic_extensions_table(long digits = Padic::kDefaultDigits);
std::vector<ExtensionDescriptor> quartic_extensions_table(long digits = Padic::kDefaultDigits);

struct Ram2Report {
    struct Row {
        std::string name;
        std::string polynomial;
        long f, e, u, mu;                // computed (u echoed for quartics)
        long decl_f, decl_e, decl_u, decl_mu;
        bool break_computed;             // quartic breaks are consumed as data
        bool match;
    };
    std::vector<Row> quadratic;
    std::vector<Row> quartic;

    struct Composite {
        bool l1_l2_in_f_mu4 = false;     // both quadratics split in F(mu_4), L_2 not in L_1
        bool l3_to_l6_give_mu8 = false;  // roots in F(mu_8) but not in F(mu_4)
        bool quartics_in_f_mu8 = false;  // all four M_i split in F(mu_8)
        std::vector<std::string> details;
    } composite;

    bool all_ok() const;
};

/// Reproduces the quadratic/quartic extension tables and verifies the
/// compositum identities.
Ram2Report ram2_report(long digits = Padic::kDefaultDigits);

}  // namespace ellqp
