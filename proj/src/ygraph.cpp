#include "ycalc/ygraph.hpp"

#include <mutex>

namespace ycalc {

bool pullback_compatible(const PullbackElem& v) {
    return v.u.genus == v.f.genus && mod2(v.u) == deg3_shadow(v.f);
}

PullbackElem make_pullback_elem(Wedge3 u, BoolPoly f) {
    PullbackElem v{std::move(u), std::move(f)};
    if (!pullback_compatible(v))
        throw std::invalid_argument("PullbackElem: mod-2 shadow mismatch");
    return v;
}

PullbackElem pullback_zero(int genus) {
    return PullbackElem{Wedge3::zero(genus), BoolPoly::zero(genus)};
}

PullbackElem operator+(const PullbackElem& a, const PullbackElem& b) {
    return PullbackElem{a.u + b.u, a.f + b.f};
}

PullbackElem operator-(const PullbackElem& a, const PullbackElem& b) {
    return PullbackElem{a.u - b.u, a.f + b.f};  // B-side has exponent 2
}

PullbackElem rho(const YExpr& x) {
    PullbackElem out = pullback_zero(x.genus());
    for (const auto& [t, c] : x.terms()) {
        out.u = out.u + c * wedge3(p_proj(t[0]), p_proj(t[1]), p_proj(t[2]));
        if (c & 1) out.f = out.f + multiply(multiply(e_map(t[0]), e_map(t[1])), e_map(t[2]));
    }
    return out;
}

PullbackElem normalize(const YExpr& x) { return rho(x); }

YExpr epsilon(const PullbackElem& v) {
    const int g = v.genus();
    if (!pullback_compatible(v))
        throw std::invalid_argument("epsilon: incompatible pair (mod-2 shadow mismatch)");
    YExpr out(g);
    auto triples = lambda3_triples(g);
    BoolPoly cubic_covered = BoolPoly::zero(g);
    for (std::size_t idx = 0; idx < triples.size(); ++idx) {
        long long n = v.u.coords[idx];
        auto [i, j, k] = triples[idx];
        if (n == 0) continue;
        out.add_term(n, section_s(HClass::basis(g, i)), section_s(HClass::basis(g, j)),
                     section_s(HClass::basis(g, k)));
        if (n & 1)
            cubic_covered = cubic_covered +
                            BoolPoly{g, {(1u << i) | (1u << j) | (1u << k)}};
    }
    BoolPoly rest = v.f + cubic_covered;  // compatibility makes this degree <= 2
    const PElem s = special_of_p(g);
    for (auto mask : rest.support) {
        std::size_t idx[3], pos = 0;
        for (std::size_t b = 0; b < h_dim(g); ++b)
            if ((mask >> b) & 1) idx[pos++] = b;
        switch (__builtin_popcount(mask)) {
            case 0:
                out.add_term(1, s, s, s);
                break;
            case 1:
                out.add_term(1, section_s(HClass::basis(g, idx[0])), s, s);
                break;
            case 2:
                out.add_term(1, section_s(HClass::basis(g, idx[0])),
                             section_s(HClass::basis(g, idx[1])), s);
                break;
            default:
                // cannot happen: cubic part equals the wedge shadow
                throw std::logic_error("epsilon: residual cubic monomial");
        }
    }
    return out;
}

BoolPoly gamma(const BasicYExpr<BoolPoly>& x) {
    BoolPoly out = BoolPoly::zero(x.genus());
    for (const auto& [t, c] : x.terms())
        if (c & 1) out = out + multiply(multiply(t[0], t[1]), t[2]);
    return out;
}

BasicYExpr<BoolPoly> epsilon_b3(const BoolPoly& f) {
    const int g = f.genus;
    if (f.degree() > 3) throw std::invalid_argument("epsilon_b3: degree exceeds 3");
    BasicYExpr<BoolPoly> out(g);
    const BoolPoly one = BoolPoly::one(g);
    for (auto mask : f.support) {
        std::size_t idx[3], pos = 0;
        for (std::size_t b = 0; b < h_dim(g); ++b)
            if ((mask >> b) & 1) idx[pos++] = b;
        switch (__builtin_popcount(mask)) {
            case 0:
                out.add_term(1, one, one, one);
                break;
            case 1:
                out.add_term(1, BoolPoly::variable(g, idx[0]), one, one);
                break;
            case 2:
                out.add_term(1, BoolPoly::variable(g, idx[0]), BoolPoly::variable(g, idx[1]), one);
                break;
            default:
                out.add_term(1, BoolPoly::variable(g, idx[0]), BoolPoly::variable(g, idx[1]),
                             BoolPoly::variable(g, idx[2]));
                break;
        }
    }
    return out;
}

Wedge3 wedge_class(const BasicYExpr<HClass>& x) {
    Wedge3 out = Wedge3::zero(x.genus());
    for (const auto& [t, c] : x.terms()) out = out + c * wedge3(t[0], t[1], t[2]);
    return out;
}

std::vector<PElem> standard_p_generators(int genus) {
    std::vector<PElem> gens;
    for (std::size_t j = 0; j < h_dim(genus); ++j) gens.emplace_back(HClass::basis(genus, j), 0);
    gens.push_back(special_of_p(genus));
    return gens;
}

std::vector<YExpr> symplectic_relations(int genus) {
    const std::size_t g = static_cast<std::size_t>(genus);
    std::vector<YExpr> out;
    for (const PElem& z : standard_p_generators(genus)) {
        YExpr expr(genus);
        for (std::size_t i = 1; i <= g; ++i)
            expr.add_term(1, section_s(HClass::x(genus, i)), section_s(HClass::y(genus, i)), z);
        out.push_back(std::move(expr));
    }
    return out;
}

// --- presentation oracle ----------------------------------------------

namespace {

std::array<int, 3> rotate_min(std::array<int, 3> t) {
    std::array<int, 3> best = t;
    for (int r = 0; r < 2; ++r) {
        t = {t[1], t[2], t[0]};
        if (t < best) best = t;
    }
    return best;
}

// Label decomposed over the standard generators: pairs (coefficient,
// generator index), with index 2g meaning the special element.
std::vector<std::pair<long long, int>> decompose_label(const PElem& z) {
    PDecomposition d = decompose(z);
    std::vector<std::pair<long long, int>> out;
    for (std::size_t j = 0; j < d.coeffs.size(); ++j)
        if (d.coeffs[j] != 0) out.emplace_back(d.coeffs[j], static_cast<int>(j));
    if (d.delta) out.emplace_back(1, static_cast<int>(d.coeffs.size()));
    return out;
}

}  // namespace

std::size_t A1Presentation::index_of(std::array<int, 3> triple) const {
    auto it = generator_index.find(rotate_min(triple));
    if (it == generator_index.end())
        throw std::invalid_argument("A1Presentation: unknown generator triple");
    return it->second;
}

namespace {

A1Presentation build_presentation(int genus) {
    const int n = static_cast<int>(h_dim(genus)) + 1;  // label alphabet, last = special
    const int s = n - 1;

    std::vector<std::array<int, 3>> generators;
    std::map<std::array<int, 3>, std::size_t> index;
    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b)
            for (int c = 0; c < n; ++c) {
                std::array<int, 3> key = rotate_min({a, b, c});
                if (index.emplace(key, generators.size()).second) generators.push_back(key);
            }

    const std::size_t gen_count = generators.size();
    auto unit = [&](int a, int b, int c, std::vector<mpz_class>& col, long long coef) {
        col[index.at(rotate_min({a, b, c}))] += static_cast<long>(coef);
    };

    std::vector<PElem> labels = standard_p_generators(genus);
    // Expansion of Y[z, c, d] over the generators, z arbitrary.
    auto expand_first = [&](const PElem& z, int c, int d, std::vector<mpz_class>& col,
                            long long coef) {
        for (auto [w, j] : decompose_label(z)) unit(j, c, d, col, coef * w);
    };

    std::vector<std::vector<mpz_class>> columns;
    // AS instances: Y[a,b,c] + Y[b,a,c].
    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b)
            for (int c = 0; c < n; ++c) {
                std::vector<mpz_class> col(gen_count);
                unit(a, b, c, col, 1);
                unit(b, a, c, col, 1);
                columns.push_back(std::move(col));
            }
    // Slide instances: Y[a,a,c] - Y[s,a,c].
    for (int a = 0; a < n; ++a)
        for (int c = 0; c < n; ++c) {
            std::vector<mpz_class> col(gen_count);
            unit(a, a, c, col, 1);
            unit(s, a, c, col, -1);
            columns.push_back(std::move(col));
        }
    // Multilinearity over pairwise P-sums of standard generators:
    // Y[za+zb, c, d] - Y[za, c, d] - Y[zb, c, d], the sum expanded through
    // its canonical decomposition.
    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b) {
            PElem zab = p_add(labels[a], labels[b]);
            for (int c = 0; c < n; ++c)
                for (int d = 0; d < n; ++d) {
                    std::vector<mpz_class> col(gen_count);
                    expand_first(zab, c, d, col, 1);
                    unit(a, c, d, col, -1);
                    unit(b, c, d, col, -1);
                    columns.push_back(std::move(col));
                }
        }
    // 2-torsion from 2*(0,1) = 0.
    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b) {
            std::vector<mpz_class> col(gen_count);
            unit(s, a, b, col, 2);
            columns.push_back(std::move(col));
        }

    IntMatrix rel(gen_count, columns.size());
    for (std::size_t j = 0; j < columns.size(); ++j)
        for (std::size_t i = 0; i < gen_count; ++i) rel.at(i, j) = columns[j][i];

    return A1Presentation{genus, std::move(generators), std::move(index), rel,
                          FGGroup(gen_count, rel)};
}

}  // namespace

const A1Presentation& a1_presentation(int genus) {
    static std::mutex mu;
    static std::map<int, A1Presentation> cache;
    std::lock_guard<std::mutex> lock(mu);
    auto it = cache.find(genus);
    if (it == cache.end()) it = cache.emplace(genus, build_presentation(genus)).first;
    return it->second;
}

IntMatrix presentation_matrix(int genus) { return a1_presentation(genus).relators; }

std::vector<mpz_class> standard_coordinates(const YExpr& x) {
    const A1Presentation& pres = a1_presentation(x.genus());
    std::vector<mpz_class> out(pres.generators.size());
    for (const auto& [t, coef] : x.terms()) {
        auto d0 = decompose_label(t[0]);
        auto d1 = decompose_label(t[1]);
        auto d2 = decompose_label(t[2]);
        for (auto [w0, i] : d0)
            for (auto [w1, j] : d1)
                for (auto [w2, k] : d2)
                    out[pres.index_of({i, j, k})] +=
                        mpz_class(static_cast<long>(coef)) * static_cast<long>(w0) *
                        static_cast<long>(w1) * static_cast<long>(w2);
    }
    return out;
}

// --- pullback coordinates and the closed case --------------------------

std::size_t pullback_free_dim(int genus) { return lambda3_dim(genus); }

std::size_t pullback_tor_dim(int genus) {
    return 1 + h_dim(genus) + lambda2_dim(genus);
}

std::vector<mpz_class> pullback_coords(const PullbackElem& v) {
    const int g = v.genus();
    const std::size_t nf = pullback_free_dim(g), nt = pullback_tor_dim(g);
    std::vector<mpz_class> out(nf + nt);
    for (std::size_t i = 0; i < nf; ++i) out[i] = static_cast<long>(v.u.coords[i]);
    std::vector<std::uint8_t> fc = b3_coords(v.f);
    for (std::size_t i = 0; i < nt; ++i) out[nf + i] = fc[i];  // degree <= 2 monomials
    return out;
}

PullbackElem pullback_from_coords(int genus, const std::vector<mpz_class>& coords) {
    const std::size_t nf = pullback_free_dim(genus), nt = pullback_tor_dim(genus);
    if (coords.size() != nf + nt)
        throw std::invalid_argument("pullback_from_coords: length mismatch");
    Wedge3 u = Wedge3::zero(genus);
    for (std::size_t i = 0; i < nf; ++i) {
        if (!coords[i].fits_slong_p())
            throw std::overflow_error("pullback_from_coords: coordinate too large");
        u.coords[i] = coords[i].get_si();
    }
    // Degree <= 2 part from the torsion coordinates mod 2; the cubic part
    // is forced by the shadow of u.
    std::vector<std::uint8_t> fc(b3_dim(genus), 0);
    for (std::size_t i = 0; i < nt; ++i)
        fc[i] = static_cast<std::uint8_t>(mpz_class(coords[nf + i] % 2) != 0);
    auto triples = lambda3_triples(genus);
    for (std::size_t idx = 0; idx < triples.size(); ++idx) {
        if (!(u.coords[idx] & 1)) continue;
        auto [i, j, k] = triples[idx];
        std::uint32_t mask = (1u << i) | (1u << j) | (1u << k);
        fc[b3_monomial_index(genus, mask)] = 1;
    }
    return PullbackElem{std::move(u), poly_from_b3_coords(genus, fc)};
}

namespace {

ClosedStructure build_closed_structure(int genus) {
    const std::size_t nf = pullback_free_dim(genus), nt = pullback_tor_dim(genus);

    std::vector<std::vector<mpz_class>> relators;
    for (std::size_t t = 0; t < nt; ++t) {
        std::vector<mpz_class> col(nf + nt);
        col[nf + t] = 2;
        relators.push_back(std::move(col));
    }
    for (const YExpr& r : symplectic_relations(genus))
        relators.push_back(pullback_coords(rho(r)));
    FGGroup coord_group = group_from_presentation(nf + nt, relators);

    std::vector<std::vector<mpz_class>> wedge_rel;
    for (const auto& col : omega_wedge_columns(genus)) {
        std::vector<mpz_class> c(nf);
        for (std::size_t i = 0; i < nf; ++i) c[i] = static_cast<long>(col[i]);
        wedge_rel.push_back(std::move(c));
    }
    FGGroup wedge_quotient = group_from_presentation(nf, wedge_rel);

    GF2RowSpace ideal(b3_dim(genus));
    for (const BoolPoly& f : arf_ideal_generators(genus)) {
        std::vector<std::uint8_t> row = b3_coords(f);
        ideal.add_row(row);
    }
    return ClosedStructure{genus, std::move(coord_group), std::move(wedge_quotient),
                           std::move(ideal)};
}

}  // namespace

const ClosedStructure& closed_structure(int genus) {
    static std::mutex mu;
    static std::map<int, ClosedStructure> cache;
    std::lock_guard<std::mutex> lock(mu);
    auto it = cache.find(genus);
    if (it == cache.end()) it = cache.emplace(genus, build_closed_structure(genus)).first;
    return it->second;
}

ClosedClass close(const PullbackElem& v) {
    const ClosedStructure& cs = closed_structure(v.genus());
    GroupElem n = cs.coord_group.normalize(cs.coord_group.element(pullback_coords(v)));
    return ClosedClass{pullback_from_coords(v.genus(), n.coords)};
}

ClosedClass close(const YExpr& x) { return close(rho(x)); }

FgPullbackModel fg_pullback_model(int genus) {
    const std::size_t c3 = lambda3_dim(genus);
    const std::size_t d = b3_dim(genus);

    FGGroup lambda3(c3, IntMatrix(c3, 0));
    IntMatrix two_d(d, d);
    for (std::size_t i = 0; i < d; ++i) two_d.at(i, i) = 2;
    FGGroup b3(d, two_d);
    IntMatrix two_c(c3, c3);
    for (std::size_t i = 0; i < c3; ++i) two_c.at(i, i) = 2;
    FGGroup lambda3_mod2(c3, two_c);

    Hom f1(lambda3, lambda3_mod2, IntMatrix::identity(c3));

    IntMatrix shadow(c3, d);
    const auto& monos = b3_monomials(genus);
    for (std::size_t j = 0; j < d; ++j) {
        std::uint32_t m = monos[j];
        if (__builtin_popcount(m) != 3) continue;
        std::size_t idx[3], pos = 0;
        for (std::size_t b = 0; b < h_dim(genus); ++b)
            if ((m >> b) & 1) idx[pos++] = b;
        shadow.at(lambda3_index(genus, idx[0], idx[1], idx[2]), j) = 1;
    }
    Hom f2(b3, lambda3_mod2, shadow);

    PullbackResult pb = pullback(lambda3, b3, lambda3_mod2, f1, f2);
    return FgPullbackModel{std::move(lambda3), std::move(b3), std::move(lambda3_mod2),
                           std::move(f1),     std::move(f2), std::move(pb)};
}

}  // namespace ycalc
