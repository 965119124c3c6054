#pragma once

#include <cstdint>
#include <iosfwd>
#include <random>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "ycalc/bool_poly.hpp"
#include "ycalc/quad_form.hpp"
#include "ycalc/special_p.hpp"
#include "ycalc/ygraph.hpp"

namespace ycalc {

enum class SurgeryCase { boundary, closed };

std::string to_string(SurgeryCase c);

// A surgery presentation is a formal Y-expression together with the
// surface case it presents a homology cylinder over.
struct SurgeryPresentation {
    int genus = 0;
    SurgeryCase kind = SurgeryCase::boundary;
    YExpr expr{0};
};

class ParseError : public std::runtime_error {
public:
    ParseError(int line, const std::string& message)
        : std::runtime_error("line " + std::to_string(line) + ": " + message), line_(line) {}
    int line() const { return line_; }

private:
    int line_;
};

// File format:
//   genus <g>
//   case boundary|closed
//   <coeff> Y (<2g ints>;<0|1>) (<2g ints>;<0|1>) (<2g ints>;<0|1>)
// '#' starts a comment, blank lines are ignored.
SurgeryPresentation parse_presentation(std::istream& in);
SurgeryPresentation parse_presentation(const std::string& text);
std::string format_presentation(const SurgeryPresentation& p);

// Birman-Craggs invariant: the Boolean component of rho. In the closed
// case the value is the canonical coset representative mod alpha.B^(1).
struct BetaValue {
    SurgeryCase kind = SurgeryCase::boundary;
    BoolPoly value;
};
BetaValue beta(const SurgeryPresentation& m);

// First Johnson homomorphism: the wedge component of rho, reduced mod
// omega^H in the closed case (canonical representative).
struct Eta1Value {
    SurgeryCase kind = SurgeryCase::boundary;
    Wedge3 value;
};
Eta1Value eta1(const SurgeryPresentation& m);

// Variation of the Rochlin invariant under surgery on one Y generator:
// 8 * e(z1)(q) e(z2)(q) e(z3)(q) in Z_16.
int rochlin_delta(const PElem& z1, const PElem& z2, const PElem& z3, const QForm& q);

struct EquivalenceReport {
    bool equivalent = false;
    std::string text;  // key: value lines, including both invariant pairs
};

// Complete decision: equal rho normal forms (boundary) or equal coset
// representatives mod S (closed). Throws on genus or case mismatch.
EquivalenceReport y2_equivalent(const SurgeryPresentation& a, const SurgeryPresentation& b);

struct StructureReport {
    int genus = 0;
    SurgeryCase kind = SurgeryCase::boundary;
    CokernelInvariants from_pullback;      // generic pullback (+ quotient) route
    CokernelInvariants from_presentation;  // presentation-matrix oracle
    bool agree = false;
    std::string text;
};

// Invariant factors of the graph group (boundary) or of its quotient by
// the symplectic relations (closed), computed along both routes.
StructureReport structure(int genus, SurgeryCase kind);

struct SelfTestResult {
    std::vector<std::pair<std::string, bool>> checks;
    bool all_pass = false;
    std::string text;
};

// Runs the property suites and the exactness report at every genus up to
// the bound, deterministically for a given seed.
SelfTestResult selftest(int max_genus, std::uint64_t seed);

// Seeded samplers shared by the self test and the test suites.
PElem sample_pelem(std::mt19937_64& rng, int genus);
YExpr sample_yexpr(std::mt19937_64& rng, int genus, int max_terms);

}  // namespace ycalc
