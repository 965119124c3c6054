#include "ycalc/quad_form.hpp"

#include <stdexcept>

namespace ycalc {

int q_value(const QForm& q, const H2Class& h) {
    if (q.genus != h.genus) throw std::invalid_argument("q_value: genus mismatch");
    const std::size_t n = h_dim(q.genus);
    // q(sum_{i in S} e_i) = sum q(e_i) + sum_{i<j in S} e_i . e_j; the
    // cross terms are the symplectic pairs contained in S.
    int total = __builtin_popcount(q.bits & h.bits) & 1;
    const std::size_t g = n / 2;
    for (std::size_t i = 0; i < g; ++i)
        if (h.bit(i) && h.bit(g + i)) total ^= 1;
    return total;
}

QForm act(const H2Class& x, const QForm& q) {
    if (x.genus != q.genus) throw std::invalid_argument("act: genus mismatch");
    QForm out = q;
    for (std::size_t i = 0; i < h_dim(q.genus); ++i) {
        H2Class basis{q.genus, std::uint32_t(1) << i};
        if (intersection_mod2(x, basis)) out.bits ^= (std::uint32_t(1) << i);
    }
    return out;
}

std::vector<QForm> enumerate_forms(int genus) {
    const std::size_t n = h_dim(genus);
    std::vector<QForm> out;
    out.reserve(std::size_t(1) << n);
    for (std::uint32_t b = 0; b < (std::uint32_t(1) << n); ++b) out.push_back(QForm{genus, b});
    return out;
}

int arf_value(const QForm& q) {
    const std::size_t g = static_cast<std::size_t>(q.genus);
    int total = 0;
    for (std::size_t i = 0; i < g; ++i)
        total ^= (q.value_on_basis(i) & q.value_on_basis(g + i));
    return total;
}

std::string to_string(const QForm& q) {
    std::string out;
    for (std::size_t i = 0; i < h_dim(q.genus); ++i) out += q.value_on_basis(i) ? '1' : '0';
    return out;
}

QForm parse_qform(int genus, const std::string& bits) {
    if (bits.size() != h_dim(genus))
        throw std::invalid_argument("parse_qform: expected 2g bits");
    QForm q{genus, 0};
    for (std::size_t i = 0; i < bits.size(); ++i) {
        if (bits[i] == '1')
            q.bits |= (std::uint32_t(1) << i);
        else if (bits[i] != '0')
            throw std::invalid_argument("parse_qform: bits must be 0 or 1");
    }
    return q;
}

}  // namespace ycalc
