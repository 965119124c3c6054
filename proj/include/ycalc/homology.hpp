#pragma once

#include <array>
#include <compare>
#include <cstdint>
#include <string>
#include <vector>

namespace ycalc {

// Basis order convention used everywhere: e = (x_1..x_g, y_1..y_g), so the
// intersection matrix is [[0, I], [-I, 0]].
inline std::size_t h_dim(int genus) { return 2 * static_cast<std::size_t>(genus); }

std::string basis_name(int genus, std::size_t index);  // "x3" or "y1"

// Element of H = H_1(Sigma; Z) in the symplectic basis.
struct HClass {
    int genus = 0;
    std::vector<long long> coords;  // length 2g

    HClass() = default;
    HClass(int g, std::vector<long long> c);

    static HClass zero(int genus);
    static HClass basis(int genus, std::size_t index);      // e_j
    static HClass x(int genus, std::size_t i);              // x_i, 1-based
    static HClass y(int genus, std::size_t i);              // y_i, 1-based

    friend bool operator==(const HClass&, const HClass&) = default;
    friend std::strong_ordering operator<=>(const HClass&, const HClass&) = default;
};

HClass operator+(const HClass& a, const HClass& b);
HClass operator-(const HClass& a, const HClass& b);
HClass operator*(long long k, const HClass& a);

// Element of H_(2) = H (x) Z_2, one bit per basis vector.
struct H2Class {
    int genus = 0;
    std::uint32_t bits = 0;

    bool bit(std::size_t index) const { return (bits >> index) & 1u; }

    friend bool operator==(const H2Class&, const H2Class&) = default;
};

H2Class operator+(const H2Class& a, const H2Class& b);

long long intersection(const HClass& a, const HClass& b);
int intersection_mod2(const H2Class& a, const H2Class& b);

H2Class mod2(const HClass& a);

// Lambda^2 H over the basis { e_i ^ e_j : i < j }, lexicographic.
struct Wedge2 {
    int genus = 0;
    std::vector<long long> coords;

    friend bool operator==(const Wedge2&, const Wedge2&) = default;
};

// Lambda^3 H over the basis { e_i ^ e_j ^ e_k : i < j < k }, lexicographic.
struct Wedge3 {
    int genus = 0;
    std::vector<long long> coords;

    static Wedge3 zero(int genus);
    bool is_zero() const;

    friend bool operator==(const Wedge3&, const Wedge3&) = default;
};

Wedge3 operator+(const Wedge3& a, const Wedge3& b);
Wedge3 operator-(const Wedge3& a, const Wedge3& b);
Wedge3 operator*(long long k, const Wedge3& a);

// Mod-2 reduction of Lambda^3, the comparison target for the pullback.
struct Wedge3Mod2 {
    int genus = 0;
    std::vector<std::uint8_t> coords;

    friend bool operator==(const Wedge3Mod2&, const Wedge3Mod2&) = default;
};

Wedge3Mod2 mod2(const Wedge3& w);

std::size_t lambda2_dim(int genus);
std::size_t lambda3_dim(int genus);
std::size_t lambda2_index(int genus, std::size_t i, std::size_t j);                 // i < j
std::size_t lambda3_index(int genus, std::size_t i, std::size_t j, std::size_t k);  // i < j < k
std::vector<std::array<std::size_t, 3>> lambda3_triples(int genus);

// omega = sum x_i ^ y_i
Wedge2 symplectic_element(int genus);

// Trilinear alternating expansion in the fixed basis.
Wedge3 wedge3(const HClass& a, const HClass& b, const HClass& c);

// omega ^ h
Wedge3 wedge_omega_h(const HClass& h);

// Generator-image matrix of h |-> omega ^ h, columns over e_1..e_2g,
// rows over the Lambda^3 basis (as plain integers).
std::vector<std::vector<long long>> omega_wedge_columns(int genus);

std::string to_string(const HClass& h);
std::string to_string(const Wedge3& w);

}  // namespace ycalc
