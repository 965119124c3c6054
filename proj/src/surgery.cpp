#include "ycalc/surgery.hpp"

#include <optional>
#include <sstream>

#include "ycalc/fg_group.hpp"
#include "ycalc/gf2.hpp"
#include "ycalc/lie.hpp"

namespace ycalc {

std::string to_string(SurgeryCase c) {
    return c == SurgeryCase::boundary ? "boundary" : "closed";
}

namespace {

std::string strip(const std::string& s) {
    std::size_t a = s.find_first_not_of(" \t\r\n");
    if (a == std::string::npos) return "";
    std::size_t b = s.find_last_not_of(" \t\r\n");
    return s.substr(a, b - a + 1);
}

long long parse_int(const std::string& tok, int line_no, const char* what) {
    try {
        std::size_t used = 0;
        long long v = std::stoll(tok, &used);
        if (used != tok.size()) throw std::invalid_argument("trailing characters");
        return v;
    } catch (const std::exception&) {
        throw ParseError(line_no, std::string("bad ") + what + " '" + tok + "'");
    }
}

PElem parse_label(const std::string& body, int line_no, int genus) {
    std::size_t semi = body.find(';');
    if (semi == std::string::npos)
        throw ParseError(line_no, "label is missing ';' before the eps bit");
    std::string coords_part = strip(body.substr(0, semi));
    std::string eps_part = strip(body.substr(semi + 1));
    std::vector<long long> coords;
    if (!coords_part.empty()) {
        std::stringstream ss(coords_part);
        std::string tok;
        while (std::getline(ss, tok, ',')) coords.push_back(parse_int(strip(tok), line_no, "coordinate"));
    }
    if (coords.size() != h_dim(genus))
        throw ParseError(line_no, "expected " + std::to_string(h_dim(genus)) +
                                      " coordinates, got " + std::to_string(coords.size()));
    if (eps_part != "0" && eps_part != "1")
        throw ParseError(line_no, "eps bit must be 0 or 1");
    return PElem(HClass(genus, std::move(coords)), eps_part == "1" ? 1 : 0);
}

void parse_term_line(const std::string& line, int line_no, int genus, YExpr& expr) {
    std::istringstream ss(line);
    std::string coeff_tok, y_tok;
    if (!(ss >> coeff_tok >> y_tok)) throw ParseError(line_no, "malformed term line");
    if (y_tok != "Y") throw ParseError(line_no, "expected 'Y' after the coefficient");
    long long coeff = parse_int(coeff_tok, line_no, "coefficient");

    std::string rest;
    std::getline(ss, rest);
    std::vector<PElem> labels;
    std::size_t pos = 0;
    while (labels.size() < 3) {
        std::size_t open = rest.find('(', pos);
        if (open == std::string::npos) throw ParseError(line_no, "expected three (...) labels");
        std::size_t close = rest.find(')', open);
        if (close == std::string::npos) throw ParseError(line_no, "unterminated label");
        labels.push_back(parse_label(rest.substr(open + 1, close - open - 1), line_no, genus));
        pos = close + 1;
    }
    if (!strip(rest.substr(pos)).empty())
        throw ParseError(line_no, "unexpected text after the third label");
    expr.add_term(coeff, labels[0], labels[1], labels[2]);
}

}  // namespace

SurgeryPresentation parse_presentation(std::istream& in) {
    std::string raw;
    int line_no = 0;
    int genus = -1;
    std::optional<SurgeryCase> kind;
    std::optional<YExpr> expr;
    while (std::getline(in, raw)) {
        ++line_no;
        std::string line = raw;
        std::size_t hash = line.find('#');
        if (hash != std::string::npos) line.erase(hash);
        line = strip(line);
        if (line.empty()) continue;
        if (genus < 0) {
            std::istringstream ss(line);
            std::string kw, val;
            if (!(ss >> kw >> val) || kw != "genus")
                throw ParseError(line_no, "expected 'genus <g>' header");
            long long g = parse_int(val, line_no, "genus");
            std::string extra;
            if (ss >> extra) throw ParseError(line_no, "unexpected text after genus");
            if (g < 0 || g > 16) throw ParseError(line_no, "genus must be between 0 and 16");
            genus = static_cast<int>(g);
            expr.emplace(genus);
            continue;
        }
        if (!kind) {
            std::istringstream ss(line);
            std::string kw, val, extra;
            if (!(ss >> kw >> val) || kw != "case" || (ss >> extra))
                throw ParseError(line_no, "expected 'case boundary' or 'case closed'");
            if (val == "boundary")
                kind = SurgeryCase::boundary;
            else if (val == "closed")
                kind = SurgeryCase::closed;
            else
                throw ParseError(line_no, "unknown case tag '" + val + "'");
            continue;
        }
        parse_term_line(line, line_no, genus, *expr);
    }
    if (genus < 0) throw ParseError(line_no, "missing 'genus' header");
    if (!kind) throw ParseError(line_no, "missing 'case' line");
    return SurgeryPresentation{genus, *kind, std::move(*expr)};
}

SurgeryPresentation parse_presentation(const std::string& text) {
    std::istringstream ss(text);
    return parse_presentation(ss);
}

std::string format_presentation(const SurgeryPresentation& p) {
    std::string out = "genus " + std::to_string(p.genus) + "\n";
    out += "case " + to_string(p.kind) + "\n";
    for (const auto& [t, c] : p.expr.terms()) {
        out += std::to_string(c) + " Y";
        for (int i = 0; i < 3; ++i) out += " " + to_string(t[i]);
        out += "\n";
    }
    return out;
}

BetaValue beta(const SurgeryPresentation& m) {
    BoolPoly f = rho(m.expr).f;
    if (m.kind == SurgeryCase::closed) {
        const ClosedStructure& cs = closed_structure(m.genus);
        f = poly_from_b3_coords(m.genus, cs.arf_ideal.reduce(b3_coords(f)));
    }
    return BetaValue{m.kind, std::move(f)};
}

Eta1Value eta1(const SurgeryPresentation& m) {
    Wedge3 u = rho(m.expr).u;
    if (m.kind == SurgeryCase::closed) {
        const ClosedStructure& cs = closed_structure(m.genus);
        GroupElem rep = cs.wedge_quotient.normalize(cs.wedge_quotient.element(to_mpz(u.coords)));
        for (std::size_t i = 0; i < u.coords.size(); ++i) {
            if (!rep.coords[i].fits_slong_p())
                throw std::overflow_error("eta1: representative coordinate too large");
            u.coords[i] = rep.coords[i].get_si();
        }
    }
    return Eta1Value{m.kind, std::move(u)};
}

int rochlin_delta(const PElem& z1, const PElem& z2, const PElem& z3, const QForm& q) {
    if (z1.genus() != q.genus || z2.genus() != q.genus || z3.genus() != q.genus)
        throw std::invalid_argument("rochlin_delta: genus mismatch");
    int prod = evaluate(e_map(z1), q) & evaluate(e_map(z2), q) & evaluate(e_map(z3), q);
    return 8 * prod;
}

namespace {

std::string invariant_lines(const SurgeryPresentation& m, const std::string& suffix) {
    std::string out;
    out += "eta1" + suffix + ": " + to_string(eta1(m).value) + "\n";
    out += "beta" + suffix + ": " + to_string(beta(m).value) + "\n";
    return out;
}

}  // namespace

EquivalenceReport y2_equivalent(const SurgeryPresentation& a, const SurgeryPresentation& b) {
    if (a.genus != b.genus) throw std::invalid_argument("y2_equivalent: genus mismatch");
    if (a.kind != b.kind) throw std::invalid_argument("y2_equivalent: case mismatch");
    bool eq;
    if (a.kind == SurgeryCase::boundary)
        eq = rho(a.expr) == rho(b.expr);
    else
        eq = close(a.expr) == close(b.expr);
    std::string text = "genus: " + std::to_string(a.genus) + "\n";
    text += "case: " + to_string(a.kind) + "\n";
    text += invariant_lines(a, "_1");
    text += invariant_lines(b, "_2");
    if (a.kind == SurgeryCase::closed) text += "note: representatives mod S\n";
    text += std::string("equivalent: ") + (eq ? "yes" : "no") + "\n";
    return EquivalenceReport{eq, std::move(text)};
}

namespace {

std::string torsion_string(const std::vector<mpz_class>& torsion) {
    if (torsion.empty()) return "none";
    std::string out;
    for (std::size_t i = 0; i < torsion.size(); ++i) {
        if (i) out += ",";
        out += torsion[i].get_str();
    }
    return out;
}

CokernelInvariants pullback_route(int genus, SurgeryCase kind) {
    FgPullbackModel model = fg_pullback_model(genus);
    if (kind == SurgeryCase::boundary) return model.pullback.group.invariants();
    // Closed case: quotient by the S generators, written in the computed
    // generating set of the pullback.
    const std::size_t c3 = lambda3_dim(genus), d = b3_dim(genus);
    IntMatrix gens(c3 + d, model.pullback.pr1.cols());
    for (std::size_t c = 0; c < gens.cols(); ++c) {
        for (std::size_t r = 0; r < c3; ++r) gens.at(r, c) = model.pullback.pr1.at(r, c);
        for (std::size_t r = 0; r < d; ++r) gens.at(c3 + r, c) = model.pullback.pr2.at(r, c);
    }
    std::vector<GroupElem> subgen;
    for (const YExpr& rel : symplectic_relations(genus)) {
        PullbackElem v = rho(rel);
        std::vector<mpz_class> target(c3 + d);
        for (std::size_t i = 0; i < c3; ++i) target[i] = static_cast<long>(v.u.coords[i]);
        std::vector<std::uint8_t> fc = b3_coords(v.f);
        for (std::size_t i = 0; i < d; ++i) target[c3 + i] = fc[i];
        auto x = solve_integer(gens, target);
        if (!x)
            throw std::logic_error("structure: symplectic relation not in the pullback lattice");
        subgen.push_back(model.pullback.group.element(*x));
    }
    return quotient(model.pullback.group, subgen).group.invariants();
}

CokernelInvariants presentation_route(int genus, SurgeryCase kind) {
    IntMatrix rel = presentation_matrix(genus);
    if (kind == SurgeryCase::closed) {
        auto rels = symplectic_relations(genus);
        IntMatrix extra(rel.rows(), rels.size());
        for (std::size_t j = 0; j < rels.size(); ++j)
            extra.set_column(j, standard_coordinates(rels[j]));
        rel = hconcat(rel, extra);
    }
    return cokernel_invariants(rel);
}

}  // namespace

StructureReport structure(int genus, SurgeryCase kind) {
    StructureReport r;
    r.genus = genus;
    r.kind = kind;
    r.from_pullback = pullback_route(genus, kind);
    r.from_presentation = presentation_route(genus, kind);
    r.agree = r.from_pullback == r.from_presentation;
    std::string text = "genus: " + std::to_string(genus) + "\n";
    text += "case: " + to_string(kind) + "\n";
    text += "free_rank: " + std::to_string(r.from_pullback.free_rank) + "\n";
    text += "torsion: " + torsion_string(r.from_pullback.torsion) + "\n";
    text += "oracle_free_rank: " + std::to_string(r.from_presentation.free_rank) + "\n";
    text += "oracle_torsion: " + torsion_string(r.from_presentation.torsion) + "\n";
    text += std::string("agreement: ") + (r.agree ? "yes" : "no") + "\n";
    r.text = std::move(text);
    return r;
}

PElem sample_pelem(std::mt19937_64& rng, int genus) {
    std::uniform_int_distribution<long long> coord(-3, 3);
    std::uniform_int_distribution<int> bit(0, 1);
    std::vector<long long> coords(h_dim(genus));
    for (auto& c : coords) c = coord(rng);
    return PElem(HClass(genus, std::move(coords)), bit(rng));
}

YExpr sample_yexpr(std::mt19937_64& rng, int genus, int max_terms) {
    std::uniform_int_distribution<int> count(0, max_terms);
    std::uniform_int_distribution<long long> coeff(-3, 3);
    YExpr x(genus);
    int n = count(rng);
    for (int i = 0; i < n; ++i) {
        long long c = coeff(rng);
        if (c == 0) c = 1;
        x.add_term(c, sample_pelem(rng, genus), sample_pelem(rng, genus),
                   sample_pelem(rng, genus));
    }
    return x;
}

namespace {

struct SuiteRunner {
    std::vector<std::pair<std::string, bool>> checks;

    void record(const std::string& name, bool pass) { checks.emplace_back(name, pass); }
};

bool rho_relation_soundness(std::mt19937_64& rng, int genus, int iterations) {
    for (int it = 0; it < iterations; ++it) {
        PElem z0 = sample_pelem(rng, genus), z1 = sample_pelem(rng, genus);
        PElem z2 = sample_pelem(rng, genus), z3 = sample_pelem(rng, genus);
        YExpr as(genus);
        as.add_term(1, z1, z2, z3);
        as.add_term(1, z2, z1, z3);
        if (!rho(as).is_zero()) return false;
        YExpr multi(genus);
        multi.add_term(1, p_add(z0, z1), z2, z3);
        multi.add_term(-1, z0, z2, z3);
        multi.add_term(-1, z1, z2, z3);
        if (!rho(multi).is_zero()) return false;
        YExpr slide(genus);
        slide.add_term(1, z1, z1, z2);
        slide.add_term(-1, special_of_p(genus), z1, z2);
        if (!rho(slide).is_zero()) return false;
    }
    return true;
}

std::vector<PullbackElem> pullback_basis(int genus) {
    std::vector<PullbackElem> basis;
    auto triples = lambda3_triples(genus);
    for (std::size_t idx = 0; idx < triples.size(); ++idx) {
        Wedge3 u = Wedge3::zero(genus);
        u.coords[idx] = 1;
        auto [i, j, k] = triples[idx];
        BoolPoly f{genus, {(1u << i) | (1u << j) | (1u << k)}};
        basis.push_back(PullbackElem{u, f});
    }
    const auto& monos = b3_monomials(genus);
    for (std::size_t m = 0; m < pullback_tor_dim(genus); ++m)
        basis.push_back(PullbackElem{Wedge3::zero(genus), BoolPoly{genus, {monos[m]}}});
    return basis;
}

bool section_identities(int genus) {
    for (const PullbackElem& v : pullback_basis(genus))
        if (!(rho(epsilon(v)) == v)) return false;
    for (auto mask : b3_monomials(genus)) {
        BoolPoly f{genus, {mask}};
        if (!(gamma(epsilon_b3(f)) == f)) return false;
    }
    return true;
}

bool invariant_additivity(std::mt19937_64& rng, int genus, int iterations) {
    for (int it = 0; it < iterations; ++it) {
        for (SurgeryCase kind : {SurgeryCase::boundary, SurgeryCase::closed}) {
            SurgeryPresentation a{genus, kind, sample_yexpr(rng, genus, 3)};
            SurgeryPresentation b{genus, kind, sample_yexpr(rng, genus, 3)};
            SurgeryPresentation ab{genus, kind, a.expr + b.expr};
            BetaValue ba = beta(a), bb = beta(b), bab = beta(ab);
            Eta1Value ea = eta1(a), eb = eta1(b), eab = eta1(ab);
            if (kind == SurgeryCase::boundary) {
                if (!(ba.value + bb.value == bab.value)) return false;
                if (!(ea.value + eb.value == eab.value)) return false;
            } else {
                const ClosedStructure& cs = closed_structure(genus);
                BoolPoly sum = ba.value + bb.value;
                if (!(poly_from_b3_coords(genus, cs.arf_ideal.reduce(b3_coords(sum))) ==
                      bab.value))
                    return false;
                GroupElem esum = cs.wedge_quotient.normalize(
                    cs.wedge_quotient.element(to_mpz((ea.value + eb.value).coords)));
                if (!(esum.coords == to_mpz(eab.value.coords))) return false;
            }
        }
    }
    return true;
}

bool beta_rochlin_consistency(std::mt19937_64& rng, int genus, int iterations) {
    auto forms = enumerate_forms(genus);
    for (int it = 0; it < iterations; ++it) {
        SurgeryPresentation m{genus, SurgeryCase::boundary, sample_yexpr(rng, genus, 4)};
        BoolPoly f = beta(m).value;
        for (const QForm& q : forms) {
            int total = 0;
            for (const auto& [t, c] : m.expr.terms())
                total = (total + static_cast<int>(((c % 2) + 2) % 2) *
                                     rochlin_delta(t[0], t[1], t[2], q)) %
                        16;
            if (total != 8 * evaluate(f, q)) return false;
        }
    }
    return true;
}

YExpr random_relation_instance(std::mt19937_64& rng, int genus, SurgeryCase kind) {
    std::uniform_int_distribution<int> which(0, kind == SurgeryCase::closed ? 3 : 2);
    PElem z0 = sample_pelem(rng, genus), z1 = sample_pelem(rng, genus);
    PElem z2 = sample_pelem(rng, genus), z3 = sample_pelem(rng, genus);
    YExpr out(genus);
    switch (which(rng)) {
        case 0:  // AS
            out.add_term(1, z1, z2, z3);
            out.add_term(1, z2, z1, z3);
            break;
        case 1:  // multilinearity
            out.add_term(1, p_add(z0, z1), z2, z3);
            out.add_term(-1, z0, z2, z3);
            out.add_term(-1, z1, z2, z3);
            break;
        case 2:  // slide
            out.add_term(1, z1, z1, z2);
            out.add_term(-1, special_of_p(genus), z1, z2);
            break;
        default: {  // symplectic relation, closed case only
            const std::size_t g = static_cast<std::size_t>(genus);
            for (std::size_t i = 1; i <= g; ++i)
                out.add_term(1, section_s(HClass::x(genus, i)), section_s(HClass::y(genus, i)),
                             z0);
            break;
        }
    }
    return out;
}

bool equivalence_relation_suite(std::mt19937_64& rng, int genus, int iterations) {
    for (int it = 0; it < iterations; ++it) {
        for (SurgeryCase kind : {SurgeryCase::boundary, SurgeryCase::closed}) {
            SurgeryPresentation m1{genus, kind, sample_yexpr(rng, genus, 3)};
            SurgeryPresentation m2{genus, kind,
                                   m1.expr + random_relation_instance(rng, genus, kind)};
            SurgeryPresentation m3{genus, kind,
                                   m2.expr + random_relation_instance(rng, genus, kind)};
            if (!y2_equivalent(m1, m1).equivalent) return false;
            if (!y2_equivalent(m1, m2).equivalent) return false;
            if (!y2_equivalent(m2, m1).equivalent) return false;
            if (!y2_equivalent(m2, m3).equivalent) return false;
            if (!y2_equivalent(m1, m3).equivalent) return false;
        }
    }
    return true;
}

bool closed_beta_well_defined(int genus) {
    // Boolean parts of the symplectic relations must lie in alpha.B^(1);
    // membership decided by a GF(2) solve against the ideal generators.
    auto ideal = arf_ideal_generators(genus);
    GF2Matrix m(b3_dim(genus), ideal.size());
    for (std::size_t j = 0; j < ideal.size(); ++j) {
        auto coords = b3_coords(ideal[j]);
        for (std::size_t i = 0; i < coords.size(); ++i)
            if (coords[i]) m.set(i, j, true);
    }
    for (const YExpr& rel : symplectic_relations(genus)) {
        auto target = b3_coords(rho(rel).f);
        if (!gf2_solve(m, target)) return false;
    }
    return true;
}

bool boolean_extensionality_rank(int genus) {
    // The evaluation pairing of all monomials against all forms has full
    // rank, so support equality and pointwise equality coincide.
    const std::size_t n = h_dim(genus);
    const std::size_t count = std::size_t(1) << n;
    GF2Matrix m(count, count);
    for (std::size_t mono = 0; mono < count; ++mono)
        for (std::size_t q = 0; q < count; ++q)
            if ((mono & q) == mono) m.set(mono, q, true);
    return gf2_rank(m) == count;
}

}  // namespace

SelfTestResult selftest(int max_genus, std::uint64_t seed) {
    SuiteRunner runner;
    for (int g = 0; g <= max_genus; ++g) {
        std::mt19937_64 rng(seed + static_cast<std::uint64_t>(g) * 1000003);
        std::string tag = " (g=" + std::to_string(g) + ")";
        runner.record("rho relation soundness" + tag, rho_relation_soundness(rng, g, 60));
        runner.record("section identities" + tag, section_identities(g));
        runner.record("invariant additivity" + tag, invariant_additivity(rng, g, 20));
        if (g <= 2)
            runner.record("beta/rochlin consistency" + tag,
                          beta_rochlin_consistency(rng, g, 20));
        runner.record("equivalence relation" + tag, equivalence_relation_suite(rng, g, 10));
        runner.record("closed beta well-defined" + tag, closed_beta_well_defined(g));
        if (g <= 2)
            runner.record("boolean extensionality" + tag, boolean_extensionality_rank(g));
        for (const auto& check : check_exactness(g).checks)
            runner.record(check.name + tag, check.pass);
    }
    SelfTestResult result;
    result.checks = std::move(runner.checks);
    result.all_pass = true;
    std::string text;
    for (const auto& [name, pass] : result.checks) {
        text += name + ": " + (pass ? "pass" : "FAIL") + "\n";
        if (!pass) result.all_pass = false;
    }
    text += std::string("selftest: ") + (result.all_pass ? "pass" : "FAIL") + "\n";
    result.text = std::move(text);
    return result;
}

}  // namespace ycalc
