#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "ycalc/homology.hpp"

namespace ycalc {

// Z_2-quadratic form with the mod-2 intersection form as polarization,
// stored by its values on the symplectic basis: bit i = q(e_i) with
// e = (x_1..x_g, y_1..y_g). The polarization identity recovers all other
// values, so this representation is lossless.
struct QForm {
    int genus = 0;
    std::uint32_t bits = 0;

    bool value_on_basis(std::size_t index) const { return (bits >> index) & 1u; }

    friend bool operator==(const QForm&, const QForm&) = default;
};

// q(h), extended from basis values by q(a+b) = q(a) + q(b) + a.b.
int q_value(const QForm& q, const H2Class& h);

// The affine action (x . q)(h) = q(h) + x.h.
QForm act(const H2Class& x, const QForm& q);

// All 2^(2g) forms, each exactly once.
std::vector<QForm> enumerate_forms(int genus);

// Arf(q) = sum q(x_i) q(y_i).
int arf_value(const QForm& q);

std::string to_string(const QForm& q);
QForm parse_qform(int genus, const std::string& bits);

}  // namespace ycalc
