#include "ycalc/lie.hpp"

#include <map>
#include <mutex>
#include <stdexcept>

namespace ycalc {

LieElem2 LieElem2::zero(int genus) {
    return LieElem2{genus, std::vector<long long>(lambda2_dim(genus))};
}

LieElem2 operator+(const LieElem2& a, const LieElem2& b) {
    if (a.genus != b.genus) throw std::invalid_argument("LieElem2 +: genus mismatch");
    LieElem2 out = a;
    for (std::size_t i = 0; i < out.coords.size(); ++i) out.coords[i] += b.coords[i];
    return out;
}

LieElem2 operator*(long long k, const LieElem2& a) {
    LieElem2 out = a;
    for (auto& c : out.coords) c *= k;
    return out;
}

LieElem3 LieElem3::zero(int genus) {
    return LieElem3{genus, std::vector<long long>(lie3_dim(genus))};
}

bool LieElem3::is_zero() const {
    for (auto c : coords)
        if (c != 0) return false;
    return true;
}

namespace {

struct Lyndon3Table {
    std::vector<std::array<std::size_t, 3>> words;
    std::map<std::array<std::size_t, 3>, std::size_t> index;
};

const Lyndon3Table& lyndon3_table(int genus) {
    static std::mutex mu;
    static std::map<int, Lyndon3Table> cache;
    std::lock_guard<std::mutex> lock(mu);
    auto it = cache.find(genus);
    if (it != cache.end()) return it->second;
    Lyndon3Table t;
    const std::size_t n = h_dim(genus);
    // w is Lyndon iff strictly smaller than both proper rotations;
    // lexicographic enumeration keeps the basis sorted.
    for (std::size_t a = 0; a < n; ++a)
        for (std::size_t b = 0; b < n; ++b)
            for (std::size_t c = 0; c < n; ++c) {
                std::array<std::size_t, 3> w{a, b, c};
                std::array<std::size_t, 3> r1{b, c, a}, r2{c, a, b};
                if (w < r1 && w < r2) {
                    t.index[w] = t.words.size();
                    t.words.push_back(w);
                }
            }
    return cache.emplace(genus, std::move(t)).first->second;
}

void add_word(LieElem3& out, std::size_t a, std::size_t b, std::size_t c, long long coef) {
    const auto& t = lyndon3_table(out.genus);
    auto it = t.index.find({a, b, c});
    if (it == t.index.end()) throw std::logic_error("bracket3: non-Lyndon rewrite target");
    out.coords[it->second] += coef;
}

}  // namespace

const std::vector<std::array<std::size_t, 3>>& lyndon3_words(int genus) {
    return lyndon3_table(genus).words;
}

std::size_t lie3_dim(int genus) { return lyndon3_table(genus).words.size(); }

LieElem2 bracket(const HClass& a, const HClass& b) {
    if (a.genus != b.genus) throw std::invalid_argument("bracket: genus mismatch");
    LieElem2 out = LieElem2::zero(a.genus);
    const std::size_t n = h_dim(a.genus);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j)
            out.coords[lambda2_index(a.genus, i, j)] +=
                a.coords[i] * b.coords[j] - a.coords[j] * b.coords[i];
    return out;
}

LieElem3 bracket3(const HClass& a, const LieElem2& m) {
    if (a.genus != m.genus) throw std::invalid_argument("bracket3: genus mismatch");
    LieElem3 out = LieElem3::zero(a.genus);
    const std::size_t n = h_dim(a.genus);
    for (std::size_t j = 0; j < n; ++j)
        for (std::size_t k = j + 1; k < n; ++k) {
            long long w = m.coords[lambda2_index(a.genus, j, k)];
            if (w == 0) continue;
            for (std::size_t i = 0; i < n; ++i) {
                long long coef = a.coords[i] * w;
                if (coef == 0) continue;
                // [e_i, [e_j, e_k]] with j < k in the Lyndon basis:
                if (i == j) {
                    add_word(out, i, i, k, coef);          // [a,[a,b]]
                } else if (i == k) {
                    add_word(out, j, k, k, -coef);         // -[[a,b],b]
                } else if (i < j) {
                    add_word(out, i, j, k, coef);          // [a,[b,c]]
                } else if (i < k) {
                    add_word(out, j, k, i, -coef);         // -[[a,c],b]
                } else {
                    // Jacobi: [c,[a,b]] = -[a,[b,c]] - [[a,c],b]
                    add_word(out, j, k, i, -coef);
                    add_word(out, j, i, k, -coef);
                }
            }
        }
    return out;
}

LieElem2 omega_l2(int genus) {
    const std::size_t g = static_cast<std::size_t>(genus);
    LieElem2 out = LieElem2::zero(genus);
    for (std::size_t i = 0; i < g; ++i) out.coords[lambda2_index(genus, i, g + i)] = 1;
    return out;
}

std::size_t hl2_dim(int genus) { return h_dim(genus) * lambda2_dim(genus); }

std::size_t hl2_index(int genus, std::size_t h_index, std::size_t l2_index) {
    return h_index * lambda2_dim(genus) + l2_index;
}

std::vector<long long> nu(const Wedge3& w) {
    const int g = w.genus;
    std::vector<long long> out(hl2_dim(g));
    auto triples = lambda3_triples(g);
    for (std::size_t idx = 0; idx < triples.size(); ++idx) {
        long long n = w.coords[idx];
        if (n == 0) continue;
        auto [i, j, k] = triples[idx];
        out[hl2_index(g, i, lambda2_index(g, j, k))] += n;
        out[hl2_index(g, j, lambda2_index(g, i, k))] -= n;  // [k,i] = -[i,k]
        out[hl2_index(g, k, lambda2_index(g, i, j))] += n;
    }
    return out;
}

LieElem3 bracket_tensor(int genus, const std::vector<long long>& hl2) {
    if (hl2.size() != hl2_dim(genus)) throw std::invalid_argument("bracket_tensor: length mismatch");
    LieElem3 out = LieElem3::zero(genus);
    const std::size_t n = h_dim(genus);
    for (std::size_t i = 0; i < n; ++i) {
        LieElem2 m = LieElem2::zero(genus);
        bool any = false;
        for (std::size_t l = 0; l < lambda2_dim(genus); ++l) {
            m.coords[l] = hl2[hl2_index(genus, i, l)];
            any = any || m.coords[l] != 0;
        }
        if (!any) continue;
        LieElem3 part = bracket3(HClass::basis(genus, i), m);
        for (std::size_t l = 0; l < out.coords.size(); ++l) out.coords[l] += part.coords[l];
    }
    return out;
}

std::vector<std::vector<long long>> a_g1_generators(int genus) {
    const std::size_t g = static_cast<std::size_t>(genus);
    std::vector<std::vector<long long>> out;
    for (std::size_t l = 0; l < 2 * g; ++l) {
        HClass h = HClass::basis(genus, l);
        std::vector<long long> v(hl2_dim(genus));
        for (std::size_t i = 0; i < g; ++i) {
            LieElem2 hy = bracket(h, HClass::y(genus, i + 1));
            LieElem2 hx = bracket(h, HClass::x(genus, i + 1));
            for (std::size_t m = 0; m < lambda2_dim(genus); ++m) {
                v[hl2_index(genus, i, m)] += hy.coords[m];          // x_i (x) [h, y_i]
                v[hl2_index(genus, g + i, m)] -= hx.coords[m];      // -y_i (x) [h, x_i]
            }
        }
        out.push_back(std::move(v));
    }
    return out;
}

std::vector<std::vector<long long>> a_g_generators(int genus) {
    auto out = a_g1_generators(genus);
    LieElem2 w = omega_l2(genus);
    for (std::size_t j = 0; j < h_dim(genus); ++j) {
        std::vector<long long> v(hl2_dim(genus));
        for (std::size_t m = 0; m < lambda2_dim(genus); ++m)
            v[hl2_index(genus, j, m)] = w.coords[m];
        out.push_back(std::move(v));
    }
    return out;
}

HomHL2 HomHL2::zero(int genus) {
    return HomHL2{genus, std::vector<LieElem2>(h_dim(genus), LieElem2::zero(genus))};
}

HomHL2 eta1_hom(const YExpr& x) {
    const int g = x.genus();
    HomHL2 out = HomHL2::zero(g);
    for (const auto& [t, coef] : x.terms()) {
        const HClass p[3] = {p_proj(t[0]), p_proj(t[1]), p_proj(t[2])};
        for (std::size_t l = 0; l < h_dim(g); ++l) {
            HClass h = HClass::basis(g, l);
            for (int i = 0; i < 3; ++i) {
                long long pairing = intersection(h, p[i]);
                if (pairing == 0) continue;
                LieElem2 br = bracket(p[(i + 1) % 3], p[(i + 2) % 3]);
                out.columns[l] = out.columns[l] + (-coef * pairing) * br;
            }
        }
    }
    return out;
}

std::vector<long long> tensor_of_hom(const HomHL2& f) {
    // Inverse of the .-duality sending sum_j e_j (x) n_j to the hom
    // h |-> -sum_j (h . e_j) n_j: reading off the basis values gives
    // n_m = f(y_m) and n_{g+m} = -f(x_m).
    const int genus = f.genus;
    const std::size_t g = static_cast<std::size_t>(genus);
    std::vector<long long> out(hl2_dim(genus));
    for (std::size_t m = 0; m < g; ++m)
        for (std::size_t l = 0; l < lambda2_dim(genus); ++l) {
            out[hl2_index(genus, m, l)] = f.columns[g + m].coords[l];
            out[hl2_index(genus, g + m, l)] = -f.columns[m].coords[l];
        }
    return out;
}

IntMatrix int_matrix_from_columns(std::size_t rows,
                                  const std::vector<std::vector<long long>>& cols) {
    IntMatrix m(rows, cols.size());
    for (std::size_t j = 0; j < cols.size(); ++j) {
        if (cols[j].size() != rows)
            throw std::invalid_argument("int_matrix_from_columns: column length mismatch");
        for (std::size_t i = 0; i < rows; ++i) m.at(i, j) = static_cast<long>(cols[j][i]);
    }
    return m;
}

std::vector<mpz_class> to_mpz(const std::vector<long long>& v) {
    std::vector<mpz_class> out(v.size());
    for (std::size_t i = 0; i < v.size(); ++i) out[i] = static_cast<long>(v[i]);
    return out;
}

bool ExactnessReport::all_pass() const {
    for (const auto& c : checks)
        if (!c.pass) return false;
    return true;
}

ExactnessReport check_exactness(int genus) {
    ExactnessReport report;
    report.genus = genus;
    const std::size_t c3 = lambda3_dim(genus);
    const std::size_t n = h_dim(genus);

    std::vector<std::vector<long long>> nu_cols;
    for (std::size_t idx = 0; idx < c3; ++idx) {
        Wedge3 basis = Wedge3::zero(genus);
        basis.coords[idx] = 1;
        nu_cols.push_back(nu(basis));
    }
    IntMatrix nu_matrix = int_matrix_from_columns(hl2_dim(genus), nu_cols);

    report.checks.push_back({"nu injective", integer_rank(nu_matrix) == c3});

    bool composite_zero = true;
    for (const auto& col : nu_cols)
        if (!bracket_tensor(genus, col).is_zero()) composite_zero = false;
    report.checks.push_back({"bracket after nu vanishes", composite_zero});

    std::vector<std::vector<long long>> bracket_cols;
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t l = 0; l < lambda2_dim(genus); ++l) {
            std::vector<long long> unit(hl2_dim(genus));
            unit[hl2_index(genus, i, l)] = 1;
            bracket_cols.push_back(bracket_tensor(genus, unit).coords);
        }
    IntMatrix bracket_matrix = int_matrix_from_columns(lie3_dim(genus), bracket_cols);
    std::size_t bracket_kernel_rank = hl2_dim(genus) - integer_rank(bracket_matrix);
    report.checks.push_back({"bracket kernel rank equals C(2g,3)", bracket_kernel_rank == c3});

    // 2g * C(2g,2) - ((2g)^3 - 2g)/3 = C(2g,3), the dimension bookkeeping
    // behind the kernel rank.
    bool identity_ok = hl2_dim(genus) - lie3_dim(genus) == c3;
    report.checks.push_back({"Witt count identity", identity_ok});

    std::vector<std::vector<long long>> omega_cols;
    LieElem2 w = omega_l2(genus);
    for (std::size_t j = 0; j < n; ++j)
        omega_cols.push_back(bracket3(HClass::basis(genus, j), w).coords);
    IntMatrix omega_matrix = int_matrix_from_columns(lie3_dim(genus), omega_cols);
    report.checks.push_back({"h -> [h, omega] injective", integer_rank(omega_matrix) == n});

    IntMatrix ag1 = int_matrix_from_columns(hl2_dim(genus), a_g1_generators(genus));
    IntMatrix ag = int_matrix_from_columns(hl2_dim(genus), a_g_generators(genus));

    bool nu_omega_in_ag = true;
    for (std::size_t j = 0; j < n; ++j) {
        auto v = nu(wedge_omega_h(HClass::basis(genus, j)));
        if (!solve_integer(ag, to_mpz(v))) nu_omega_in_ag = false;
    }
    report.checks.push_back({"nu(omega^H) inside A_g", nu_omega_in_ag});

    // Boundary quotient: rank additivity forces a trivial intersection,
    // so nu stays injective modulo A_{g,1}.
    std::size_t rank_ag1 = integer_rank(ag1);
    std::size_t rank_joint = integer_rank(hconcat(nu_matrix, ag1));
    report.checks.push_back({"nu injective mod A_{g,1}", rank_joint == c3 + rank_ag1});

    // Closed quotient: the lattice of wedges that nu sends into A_g must
    // be exactly omega^H.
    IntMatrix omega_wedge =
        int_matrix_from_columns(c3, omega_wedge_columns(genus));
    IntMatrix joint = hconcat(nu_matrix, ag);
    IntMatrix ker = kernel_basis(joint);
    IntMatrix ker_proj(c3, ker.cols());  // wedge parts of the kernel lattice
    for (std::size_t i = 0; i < c3; ++i)
        for (std::size_t col = 0; col < ker.cols(); ++col) ker_proj.at(i, col) = ker.at(i, col);
    bool closed_ok = true;
    for (std::size_t col = 0; col < ker.cols(); ++col)
        if (!solve_integer(omega_wedge, ker_proj.column(col))) closed_ok = false;
    for (std::size_t j = 0; j < n && closed_ok; ++j)
        if (!solve_integer(ker_proj, to_mpz(wedge_omega_h(HClass::basis(genus, j)).coords)))
            closed_ok = false;
    report.checks.push_back({"nu injective mod A_g after factoring omega^H", closed_ok});

    return report;
}

}  // namespace ycalc
