#include "ycalc/bool_poly.hpp"

#include <algorithm>
#include <map>
#include <mutex>
#include <sstream>
#include <stdexcept>

namespace ycalc {

namespace {

void canonicalize(std::vector<std::uint32_t>& support) {
    std::sort(support.begin(), support.end());
    // pairs cancel over GF(2)
    std::vector<std::uint32_t> out;
    for (std::size_t i = 0; i < support.size();) {
        std::size_t j = i;
        while (j < support.size() && support[j] == support[i]) ++j;
        if ((j - i) & 1) out.push_back(support[i]);
        i = j;
    }
    support = std::move(out);
}

void check_same_genus(const BoolPoly& f, const BoolPoly& g, const char* what) {
    if (f.genus != g.genus) throw std::invalid_argument(std::string(what) + ": genus mismatch");
}

}  // namespace

BoolPoly BoolPoly::variable(int genus, std::size_t index) {
    if (index >= h_dim(genus)) throw std::invalid_argument("BoolPoly::variable: index out of range");
    return BoolPoly{genus, {std::uint32_t(1) << index}};
}

int BoolPoly::degree() const {
    int deg = 0;
    for (auto m : support) deg = std::max(deg, __builtin_popcount(m));
    return deg;
}

BoolPoly operator+(const BoolPoly& f, const BoolPoly& g) {
    check_same_genus(f, g, "BoolPoly +");
    std::vector<std::uint32_t> support = f.support;
    support.insert(support.end(), g.support.begin(), g.support.end());
    canonicalize(support);
    return BoolPoly{f.genus, std::move(support)};
}

BoolPoly multiply(const BoolPoly& f, const BoolPoly& g) {
    check_same_genus(f, g, "multiply");
    std::vector<std::uint32_t> support;
    support.reserve(f.support.size() * g.support.size());
    for (auto a : f.support)
        for (auto b : g.support) support.push_back(a | b);
    canonicalize(support);
    return BoolPoly{f.genus, std::move(support)};
}

BoolPoly operator*(const BoolPoly& f, const BoolPoly& g) { return multiply(f, g); }

BoolPoly affine_of_h(const HClass& h) {
    const std::size_t g = static_cast<std::size_t>(h.genus);
    std::vector<std::uint32_t> support;
    int constant = 0;
    for (std::size_t j = 0; j < 2 * g; ++j)
        if (h.coords[j] & 1) support.push_back(std::uint32_t(1) << j);
    for (std::size_t i = 0; i < g; ++i) constant ^= (h.coords[i] & h.coords[g + i]) & 1;
    if (constant) support.push_back(0);
    canonicalize(support);
    return BoolPoly{h.genus, std::move(support)};
}

int evaluate(const BoolPoly& f, const QForm& q) {
    if (f.genus != q.genus) throw std::invalid_argument("evaluate: genus mismatch");
    int total = 0;
    for (auto m : f.support)
        if ((m & q.bits) == m) total ^= 1;
    return total;
}

BoolPoly arf(int genus) {
    const std::size_t g = static_cast<std::size_t>(genus);
    std::vector<std::uint32_t> support;
    for (std::size_t i = 0; i < g; ++i)
        support.push_back((std::uint32_t(1) << i) | (std::uint32_t(1) << (g + i)));
    canonicalize(support);
    return BoolPoly{genus, std::move(support)};
}

H2Class kappa(const BoolPoly& f) {
    if (f.degree() > 1) throw std::invalid_argument("kappa: degree exceeds 1");
    std::uint32_t bits = 0;
    for (auto m : f.support)
        if (m != 0) bits |= m;
    return H2Class{f.genus, bits};
}

Wedge3Mod2 deg3_shadow(const BoolPoly& f) {
    if (f.degree() > 3) throw std::invalid_argument("deg3_shadow: degree exceeds 3");
    Wedge3Mod2 out{f.genus, std::vector<std::uint8_t>(lambda3_dim(f.genus))};
    for (auto m : f.support) {
        if (__builtin_popcount(m) != 3) continue;
        std::size_t idx[3], pos = 0;
        for (std::size_t b = 0; b < h_dim(f.genus); ++b)
            if ((m >> b) & 1) idx[pos++] = b;
        out.coords[lambda3_index(f.genus, idx[0], idx[1], idx[2])] ^= 1;
    }
    return out;
}

std::vector<BoolPoly> arf_ideal_generators(int genus) {
    BoolPoly a = arf(genus);
    std::vector<BoolPoly> out;
    out.push_back(multiply(a, BoolPoly::one(genus)));
    for (std::size_t j = 0; j < h_dim(genus); ++j)
        out.push_back(multiply(a, BoolPoly::variable(genus, j)));
    return out;
}

namespace {
struct B3Table {
    std::vector<std::uint32_t> monomials;
    std::map<std::uint32_t, std::size_t> index;
};

const B3Table& b3_table(int genus) {
    static std::mutex mu;
    static std::map<int, B3Table> cache;
    std::lock_guard<std::mutex> lock(mu);
    auto it = cache.find(genus);
    if (it != cache.end()) return it->second;
    B3Table t;
    const std::size_t n = h_dim(genus);
    // ordered by size, then by mask value
    t.monomials.push_back(0);
    for (std::size_t b = 0; b < n; ++b) t.monomials.push_back(std::uint32_t(1) << b);
    for (std::size_t b2 = 1; b2 < n; ++b2)
        for (std::size_t b1 = 0; b1 < b2; ++b1)
            t.monomials.push_back((std::uint32_t(1) << b1) | (std::uint32_t(1) << b2));
    for (std::size_t b3 = 2; b3 < n; ++b3)
        for (std::size_t b2 = 1; b2 < b3; ++b2)
            for (std::size_t b1 = 0; b1 < b2; ++b1)
                t.monomials.push_back((std::uint32_t(1) << b1) | (std::uint32_t(1) << b2) |
                                      (std::uint32_t(1) << b3));
    for (std::size_t i = 0; i < t.monomials.size(); ++i) t.index[t.monomials[i]] = i;
    return cache.emplace(genus, std::move(t)).first->second;
}
}  // namespace

const std::vector<std::uint32_t>& b3_monomials(int genus) { return b3_table(genus).monomials; }

std::size_t b3_dim(int genus) { return b3_table(genus).monomials.size(); }

std::size_t b3_monomial_index(int genus, std::uint32_t mask) {
    const auto& t = b3_table(genus);
    auto it = t.index.find(mask);
    if (it == t.index.end()) throw std::invalid_argument("b3_monomial_index: not a B^(3) monomial");
    return it->second;
}

std::vector<std::uint8_t> b3_coords(const BoolPoly& f) {
    if (f.degree() > 3) throw std::invalid_argument("b3_coords: degree exceeds 3");
    std::vector<std::uint8_t> out(b3_dim(f.genus), 0);
    for (auto m : f.support) out[b3_monomial_index(f.genus, m)] = 1;
    return out;
}

BoolPoly poly_from_b3_coords(int genus, const std::vector<std::uint8_t>& coords) {
    const auto& monos = b3_monomials(genus);
    if (coords.size() != monos.size())
        throw std::invalid_argument("poly_from_b3_coords: length mismatch");
    std::vector<std::uint32_t> support;
    for (std::size_t i = 0; i < coords.size(); ++i)
        if (coords[i] & 1) support.push_back(monos[i]);
    canonicalize(support);
    return BoolPoly{genus, std::move(support)};
}

std::string to_string(const BoolPoly& f) {
    if (f.support.empty()) return "0";
    // higher degree first, then by variable order, so output reads like
    // "x1*y1 + x2 + 1"
    std::vector<std::uint32_t> monos = f.support;
    std::sort(monos.begin(), monos.end(), [](std::uint32_t a, std::uint32_t b) {
        int pa = __builtin_popcount(a), pb = __builtin_popcount(b);
        if (pa != pb) return pa > pb;
        return a < b;
    });
    std::string out;
    for (auto m : monos) {
        if (!out.empty()) out += " + ";
        if (m == 0) {
            out += "1";
            continue;
        }
        bool first = true;
        for (std::size_t b = 0; b < h_dim(f.genus); ++b)
            if ((m >> b) & 1) {
                if (!first) out += "*";
                out += basis_name(f.genus, b);
                first = false;
            }
    }
    return out;
}

BoolPoly parse_bool_poly(int genus, const std::string& text) {
    const std::size_t g = static_cast<std::size_t>(genus);
    std::vector<std::uint32_t> support;
    std::string term;
    std::vector<std::string> terms;
    for (char c : text) {
        if (c == '+') {
            terms.push_back(term);
            term.clear();
        } else if (!isspace(static_cast<unsigned char>(c))) {
            term += c;
        }
    }
    terms.push_back(term);
    bool any = false;
    for (const auto& t : terms) {
        if (t.empty()) continue;
        any = true;
        if (t == "0") continue;
        std::uint32_t mask = 0;
        std::stringstream ss(t);
        std::string factor;
        while (std::getline(ss, factor, '*')) {
            if (factor == "1") continue;
            if (factor.size() < 2 || (factor[0] != 'x' && factor[0] != 'y'))
                throw std::invalid_argument("parse_bool_poly: bad factor '" + factor + "'");
            std::size_t idx = std::stoul(factor.substr(1));
            if (idx < 1 || idx > g)
                throw std::invalid_argument("parse_bool_poly: index out of range in '" + factor + "'");
            std::size_t bit = (factor[0] == 'x') ? idx - 1 : g + idx - 1;
            mask |= std::uint32_t(1) << bit;
        }
        support.push_back(mask);
    }
    if (!any) throw std::invalid_argument("parse_bool_poly: empty input");
    canonicalize(support);
    return BoolPoly{genus, std::move(support)};
}

}  // namespace ycalc
