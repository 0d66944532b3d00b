#include <ellqp/ram2.hpp>

#include <sstream>

namespace ellqp {

long quadratic_break(const ZPoly& g) {
    if (g.degree() != 2 || g.leading() != 1)
        throw std::invalid_argument("quadratic_break: monic quadratic required");
    Int disc = g.coeff(1) * g.coeff(1) - 4 * g.coeff(0);
    if (disc == 0) throw std::invalid_argument("quadratic_break: reducible (square discriminant)");
    long v = valuation_int(disc, 2);
    Int u = disc >> v;
    bool square_in_q2 = (v % 2 == 0) && (mod_pos(u, 8) == 1);
    if (square_in_q2) throw std::invalid_argument("quadratic_break: reducible over Q_2");
    if (v == 0) return 0;  // disc = 5 mod 8: unramified quadratic
    if (v == 2) {
        if (mod_pos(u, 4) == 3) return 2;
        // u = 5 mod 8: the field is unramified but Z[x]/(g) is not maximal at 2
        throw std::invalid_argument("quadratic_break: generator of a non-maximal order");
    }
    if (v == 3) return 3;
    throw std::invalid_argument("quadratic_break: generator of a non-maximal order");
}

bool mu_membership(const FieldPtr& L, long n) {
    ZPoly phi;
    switch (n) {
        case 2: phi = ZPoly{1, 1}; break;
        case 3: phi = ZPoly{1, 1, 1}; break;
        case 4: phi = ZPoly{1, 0, 1}; break;
        case 6: phi = ZPoly{1, -1, 1}; break;
        case 8: phi = ZPoly{1, 0, 0, 0, 1}; break;
        default: throw std::invalid_argument("mu_membership: n must be 2, 3, 4, 6 or 8");
    }
    return !roots_in_field(phi, L).empty();
}

long mu_column(const FieldPtr& L) {
    long two = 2;
    if (mu_membership(L, 4)) two = 4;
    if (two == 4 && mu_membership(L, 8)) two = 8;
    long three = mu_membership(L, 3) ? 3 : 1;
    return two * three;
}

namespace {

ExtensionDescriptor make_ext(const std::string& name, ZPoly poly, long f, long e, long u, long mu,
                             FieldKind kind, long digits) {
    ExtensionDescriptor d;
    d.name = name;
    d.polynomial = poly;
    d.declared_f = f;
    d.declared_e = e;
    d.declared_break = u;
    d.declared_mu = mu;
    std::vector<Int> low(poly.coeffs().begin(), poly.coeffs().end() - 1);
    d.realization = LocalField::extend_int(LocalField::qp(2, digits), low, kind);
    return d;
}

}  // namespace

std::vector<ExtensionDescriptor> quadratic_extensions_table(long digits) {
    return {
        make_ext("F", ZPoly{1, 1, 1}, 2, 1, 0, 6, FieldKind::unramified, digits),
        make_ext("L1", ZPoly{2, 2, 1}, 1, 2, 2, 4, FieldKind::eisenstein, digits),
        make_ext("L2", ZPoly{6, 2, 1}, 1, 2, 2, 2, FieldKind::eisenstein, digits),
        make_ext("L3", ZPoly{2, 0, 1}, 1, 2, 3, 2, FieldKind::eisenstein, digits),
        make_ext("L4", ZPoly{10, 0, 1}, 1, 2, 3, 2, FieldKind::eisenstein, digits),
        make_ext("L5", ZPoly{2, 4, 1}, 1, 2, 3, 2, FieldKind::eisenstein, digits),
        make_ext("L6", ZPoly{10, 4, 1}, 1, 2, 3, 2, FieldKind::eisenstein, digits),
    };
}

std::vector<ExtensionDescriptor> quartic_extensions_table(long digits) {
    return {
        make_ext("M1", ZPoly{2, 4, 2, 0, 1}, 1, 4, 3, 8, FieldKind::eisenstein, digits),
        make_ext("M2", ZPoly{10, 4, 2, 0, 1}, 1, 4, 3, 4, FieldKind::eisenstein, digits),
        make_ext("M3", ZPoly{6, 4, 2, 4, 1}, 1, 4, 3, 2, FieldKind::eisenstein, digits),
        make_ext("M4", ZPoly{14, 4, 2, 4, 1}, 1, 4, 3, 2, FieldKind::eisenstein, digits),
    };
}

bool Ram2Report::all_ok() const {
    for (const auto& r : quadratic)
        if (!r.match) return false;
    for (const auto& r : quartic)
        if (!r.match) return false;
    return composite.l1_l2_in_f_mu4 && composite.l3_to_l6_give_mu8 && composite.quartics_in_f_mu8;
}

Ram2Report ram2_report(long digits) {
    Ram2Report rep;
    auto quad = quadratic_extensions_table(digits);
    for (const auto& d : quad) {
        Ram2Report::Row row;
        row.name = d.name;
        row.polynomial = d.polynomial.to_string();
        row.f = d.realization->abs_f();
        row.e = d.realization->abs_e();
        row.u = quadratic_break(d.polynomial);
        row.mu = mu_column(d.realization);
        row.decl_f = d.declared_f;
        row.decl_e = d.declared_e;
        row.decl_u = d.declared_break;
        row.decl_mu = d.declared_mu;
        row.break_computed = true;
        row.match = row.f == row.decl_f && row.e == row.decl_e && row.u == row.decl_u &&
                    row.mu == row.decl_mu;
        rep.quadratic.push_back(row);
    }
    for (const auto& d : quartic_extensions_table(digits)) {
        Ram2Report::Row row;
        row.name = d.name;
        row.polynomial = d.polynomial.to_string();
        row.f = d.realization->abs_f();
        row.e = d.realization->abs_e();
        row.u = d.declared_break;  // consumed as data, not recomputed
        row.mu = mu_column(d.realization);
        row.decl_f = d.declared_f;
        row.decl_e = d.declared_e;
        row.decl_u = d.declared_break;
        row.decl_mu = d.declared_mu;
        row.break_computed = false;
        row.match = row.f == row.decl_f && row.e == row.decl_e && row.mu == row.decl_mu;
        rep.quartic.push_back(row);
    }

    // F(mu_4) and F(mu_8) as two-layer towers over the unramified quadratic
    FieldPtr F = quad[0].realization;
    FieldPtr Fmu4 = LocalField::extend_int(F, {2, 2}, FieldKind::eisenstein);       // y^2+2y+2
    FieldPtr Fmu8 = LocalField::extend_int(F, {2, 4, 6, 4}, FieldKind::eisenstein);  // Phi_8(y+1)

    auto has_root = [&](const ZPoly& g, const FieldPtr& K) { return !roots_in_field(g, K).empty(); };

    const ZPoly& fL1 = quad[1].polynomial;
    const ZPoly& fL2 = quad[2].polynomial;
    bool l1_in = has_root(fL1, Fmu4);
    bool l2_in = has_root(fL2, Fmu4);
    bool l2_in_l1 = has_root(fL2, quad[1].realization);
    rep.composite.l1_l2_in_f_mu4 = l1_in && l2_in && !l2_in_l1;
    {
        std::ostringstream os;
        os << "L1 in F(mu4): " << l1_in << ", L2 in F(mu4): " << l2_in
           << ", L2 in L1: " << l2_in_l1;
        rep.composite.details.push_back(os.str());
    }

    bool part2 = true;
    for (int i = 3; i <= 6; ++i) {
        bool in8 = has_root(quad[i].polynomial, Fmu8);
        bool in4 = has_root(quad[i].polynomial, Fmu4);
        part2 = part2 && in8 && !in4;
        std::ostringstream os;
        os << quad[i].name << " in F(mu8): " << in8 << ", in F(mu4): " << in4;
        rep.composite.details.push_back(os.str());
    }
    rep.composite.l3_to_l6_give_mu8 = part2;

    bool part3 = true;
    for (const auto& d : quartic_extensions_table(digits)) {
        bool in8 = has_root(d.polynomial, Fmu8);
        part3 = part3 && in8;
        std::ostringstream os;
        os << d.name << " in F(mu8): " << in8;
        rep.composite.details.push_back(os.str());
    }
    rep.composite.quartics_in_f_mu8 = part3;
    return rep;
}

}  // namespace ellqp
