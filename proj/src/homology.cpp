#include "ycalc/homology.hpp"

#include <algorithm>
#include <stdexcept>

namespace ycalc {

namespace {
void check_same_genus(int a, int b, const char* what) {
    if (a != b) throw std::invalid_argument(std::string(what) + ": genus mismatch");
}
}  // namespace

std::string basis_name(int genus, std::size_t index) {
    std::size_t g = static_cast<std::size_t>(genus);
    if (index < g) return "x" + std::to_string(index + 1);
    return "y" + std::to_string(index - g + 1);
}

HClass::HClass(int g, std::vector<long long> c) : genus(g), coords(std::move(c)) {
    if (coords.size() != h_dim(g)) throw std::invalid_argument("HClass: expected 2g coordinates");
}

HClass HClass::zero(int genus) { return HClass(genus, std::vector<long long>(h_dim(genus))); }

HClass HClass::basis(int genus, std::size_t index) {
    HClass h = zero(genus);
    h.coords.at(index) = 1;
    return h;
}

HClass HClass::x(int genus, std::size_t i) { return basis(genus, i - 1); }
HClass HClass::y(int genus, std::size_t i) {
    return basis(genus, static_cast<std::size_t>(genus) + i - 1);
}

HClass operator+(const HClass& a, const HClass& b) {
    check_same_genus(a.genus, b.genus, "HClass +");
    HClass out = a;
    for (std::size_t i = 0; i < out.coords.size(); ++i) out.coords[i] += b.coords[i];
    return out;
}

HClass operator-(const HClass& a, const HClass& b) {
    check_same_genus(a.genus, b.genus, "HClass -");
    HClass out = a;
    for (std::size_t i = 0; i < out.coords.size(); ++i) out.coords[i] -= b.coords[i];
    return out;
}

HClass operator*(long long k, const HClass& a) {
    HClass out = a;
    for (auto& c : out.coords) c *= k;
    return out;
}

H2Class operator+(const H2Class& a, const H2Class& b) {
    check_same_genus(a.genus, b.genus, "H2Class +");
    return H2Class{a.genus, a.bits ^ b.bits};
}

long long intersection(const HClass& a, const HClass& b) {
    check_same_genus(a.genus, b.genus, "intersection");
    const std::size_t g = static_cast<std::size_t>(a.genus);
    long long out = 0;
    for (std::size_t i = 0; i < g; ++i)
        out += a.coords[i] * b.coords[g + i] - a.coords[g + i] * b.coords[i];
    return out;
}

int intersection_mod2(const H2Class& a, const H2Class& b) {
    check_same_genus(a.genus, b.genus, "intersection_mod2");
    const std::uint32_t g = static_cast<std::uint32_t>(a.genus);
    const std::uint32_t low = (g == 0) ? 0 : ((1u << g) - 1);
    std::uint32_t cross =
        ((a.bits & low) & (b.bits >> g)) ^ (((a.bits >> g) & low) & (b.bits & low));
    return __builtin_popcount(cross) & 1;
}

H2Class mod2(const HClass& a) {
    std::uint32_t bits = 0;
    for (std::size_t i = 0; i < a.coords.size(); ++i)
        if (a.coords[i] & 1) bits |= (1u << i);
    return H2Class{a.genus, bits};
}

Wedge3 Wedge3::zero(int genus) {
    return Wedge3{genus, std::vector<long long>(lambda3_dim(genus))};
}

bool Wedge3::is_zero() const {
    return std::all_of(coords.begin(), coords.end(), [](long long c) { return c == 0; });
}

Wedge3 operator+(const Wedge3& a, const Wedge3& b) {
    check_same_genus(a.genus, b.genus, "Wedge3 +");
    Wedge3 out = a;
    for (std::size_t i = 0; i < out.coords.size(); ++i) out.coords[i] += b.coords[i];
    return out;
}

Wedge3 operator-(const Wedge3& a, const Wedge3& b) {
    check_same_genus(a.genus, b.genus, "Wedge3 -");
    Wedge3 out = a;
    for (std::size_t i = 0; i < out.coords.size(); ++i) out.coords[i] -= b.coords[i];
    return out;
}

Wedge3 operator*(long long k, const Wedge3& a) {
    Wedge3 out = a;
    for (auto& c : out.coords) c *= k;
    return out;
}

Wedge3Mod2 mod2(const Wedge3& w) {
    Wedge3Mod2 out{w.genus, std::vector<std::uint8_t>(w.coords.size())};
    for (std::size_t i = 0; i < w.coords.size(); ++i)
        out.coords[i] = static_cast<std::uint8_t>(w.coords[i] & 1);
    return out;
}

std::size_t lambda2_dim(int genus) {
    std::size_t n = h_dim(genus);
    return n * (n - 1) / 2;
}

std::size_t lambda3_dim(int genus) {
    std::size_t n = h_dim(genus);
    return n < 3 ? 0 : n * (n - 1) * (n - 2) / 6;
}

std::size_t lambda2_index(int genus, std::size_t i, std::size_t j) {
    const std::size_t n = h_dim(genus);
    if (!(i < j && j < n)) throw std::invalid_argument("lambda2_index: bad pair");
    // pairs (i, j) in lexicographic order
    return i * n - i * (i + 1) / 2 + (j - i - 1);
}

std::size_t lambda3_index(int genus, std::size_t i, std::size_t j, std::size_t k) {
    const std::size_t n = h_dim(genus);
    if (!(i < j && j < k && k < n)) throw std::invalid_argument("lambda3_index: bad triple");
    std::size_t idx = 0;
    for (std::size_t a = 0; a < i; ++a) idx += (n - 1 - a) * (n - 2 - a) / 2;
    // pair (j, k) within the alphabet of letters above i
    const std::size_t m = n - i - 1, jj = j - i - 1, kk = k - i - 1;
    return idx + jj * m - jj * (jj + 1) / 2 + (kk - jj - 1);
}

std::vector<std::array<std::size_t, 3>> lambda3_triples(int genus) {
    const std::size_t n = h_dim(genus);
    std::vector<std::array<std::size_t, 3>> out;
    for (std::size_t i = 0; i + 2 < n; ++i)
        for (std::size_t j = i + 1; j + 1 < n; ++j)
            for (std::size_t k = j + 1; k < n; ++k) out.push_back({i, j, k});
    return out;
}

Wedge2 symplectic_element(int genus) {
    const std::size_t g = static_cast<std::size_t>(genus);
    Wedge2 w{genus, std::vector<long long>(lambda2_dim(genus))};
    for (std::size_t i = 0; i < g; ++i) w.coords[lambda2_index(genus, i, g + i)] = 1;
    return w;
}

namespace {
void accumulate_wedge(Wedge3& out, std::size_t a, std::size_t b, std::size_t c, long long coef) {
    if (a == b || b == c || a == c || coef == 0) return;
    std::size_t i = a, j = b, k = c;
    long long sign = 1;
    if (i > j) { std::swap(i, j); sign = -sign; }
    if (j > k) { std::swap(j, k); sign = -sign; }
    if (i > j) { std::swap(i, j); sign = -sign; }
    out.coords[lambda3_index(out.genus, i, j, k)] += sign * coef;
}
}  // namespace

Wedge3 wedge3(const HClass& a, const HClass& b, const HClass& c) {
    check_same_genus(a.genus, b.genus, "wedge3");
    check_same_genus(a.genus, c.genus, "wedge3");
    Wedge3 out = Wedge3::zero(a.genus);
    const std::size_t n = h_dim(a.genus);
    for (std::size_t i = 0; i < n; ++i) {
        if (a.coords[i] == 0) continue;
        for (std::size_t j = 0; j < n; ++j) {
            if (b.coords[j] == 0 || j == i) continue;
            for (std::size_t k = 0; k < n; ++k) {
                if (c.coords[k] == 0) continue;
                accumulate_wedge(out, i, j, k, a.coords[i] * b.coords[j] * c.coords[k]);
            }
        }
    }
    return out;
}

Wedge3 wedge_omega_h(const HClass& h) {
    const std::size_t g = static_cast<std::size_t>(h.genus);
    Wedge3 out = Wedge3::zero(h.genus);
    for (std::size_t i = 0; i < g; ++i)
        for (std::size_t k = 0; k < 2 * g; ++k)
            accumulate_wedge(out, i, g + i, k, h.coords[k]);
    return out;
}

std::vector<std::vector<long long>> omega_wedge_columns(int genus) {
    std::vector<std::vector<long long>> cols;
    for (std::size_t j = 0; j < h_dim(genus); ++j)
        cols.push_back(wedge_omega_h(HClass::basis(genus, j)).coords);
    return cols;
}

std::string to_string(const HClass& h) {
    std::string out;
    for (std::size_t i = 0; i < h.coords.size(); ++i) {
        if (i) out += ",";
        out += std::to_string(h.coords[i]);
    }
    return out;
}

std::string to_string(const Wedge3& w) {
    auto triples = lambda3_triples(w.genus);
    std::string out;
    for (std::size_t idx = 0; idx < triples.size(); ++idx) {
        long long c = w.coords[idx];
        if (c == 0) continue;
        std::string mono = basis_name(w.genus, triples[idx][0]) + "^" +
                           basis_name(w.genus, triples[idx][1]) + "^" +
                           basis_name(w.genus, triples[idx][2]);
        if (out.empty()) {
            if (c == 1)
                out = mono;
            else if (c == -1)
                out = "-" + mono;
            else
                out = std::to_string(c) + "*" + mono;
        } else {
            std::string mag = std::to_string(c < 0 ? -c : c);
            out += (c < 0 ? " - " : " + ");
            if (mag != "1") out += mag + "*";
            out += mono;
        }
    }
    return out.empty() ? "0" : out;
}

}  // namespace ycalc
