#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <string>

#include "ycalc/surgery.hpp"

namespace {

ycalc::SurgeryPresentation load_presentation(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open '" + path + "'");
    return ycalc::parse_presentation(in);
}

ycalc::SurgeryCase parse_case(const std::string& text) {
    if (text == "boundary") return ycalc::SurgeryCase::boundary;
    if (text == "closed") return ycalc::SurgeryCase::closed;
    throw std::runtime_error("case must be 'boundary' or 'closed'");
}

void print_header(const ycalc::SurgeryPresentation& m) {
    std::cout << "genus: " << m.genus << "\n";
    std::cout << "case: " << ycalc::to_string(m.kind) << "\n";
}

int run(int argc, char** argv) {
    CLI::App app{"Exact invariants of homology cylinders up to Y2-equivalence"};
    app.require_subcommand(1);

    int genus = 0;
    std::string case_name = "boundary";
    std::string file1, file2, form_bits;
    std::uint64_t seed = 1;

    auto* cmd_structure = app.add_subcommand("structure", "invariant factors of the graph group");
    cmd_structure->add_option("--genus", genus, "surface genus")->required();
    cmd_structure->add_option("--case", case_name, "boundary or closed")->required();

    auto* cmd_normalize =
        app.add_subcommand("normalize", "canonical form of a surgery presentation");
    cmd_normalize->add_option("file", file1, "presentation file")->required();

    auto* cmd_eta = app.add_subcommand("eta", "first Johnson homomorphism");
    cmd_eta->add_option("file", file1, "presentation file")->required();

    auto* cmd_beta = app.add_subcommand("beta", "Birman-Craggs homomorphism");
    cmd_beta->add_option("file", file1, "presentation file")->required();
    cmd_beta->add_option("--form", form_bits, "evaluate at a quadratic form (2g bits)");

    auto* cmd_rochlin = app.add_subcommand("rochlin", "per-term Rochlin variations");
    cmd_rochlin->add_option("file", file1, "presentation file")->required();
    cmd_rochlin->add_option("--form", form_bits, "quadratic form (2g bits)")->required();

    auto* cmd_equiv = app.add_subcommand("equivalent", "decide Y2-equivalence");
    cmd_equiv->add_option("file1", file1, "first presentation")->required();
    cmd_equiv->add_option("file2", file2, "second presentation")->required();

    auto* cmd_selftest = app.add_subcommand("selftest", "run the property suites");
    cmd_selftest->add_option("--genus", genus, "largest genus to exercise")->required();
    cmd_selftest->add_option("--seed", seed, "random seed");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    }

    if (cmd_structure->parsed()) {
        ycalc::StructureReport r = ycalc::structure(genus, parse_case(case_name));
        std::cout << r.text;
        return r.agree ? 0 : 1;
    }
    if (cmd_normalize->parsed()) {
        ycalc::SurgeryPresentation m = load_presentation(file1);
        print_header(m);
        std::cout << "eta1: " << ycalc::to_string(ycalc::eta1(m).value) << "\n";
        std::cout << "beta: " << ycalc::to_string(ycalc::beta(m).value) << "\n";
        if (m.kind == ycalc::SurgeryCase::closed) {
            // the complete normal form of the class, not just the two
            // componentwise reductions
            ycalc::ClosedClass c = ycalc::close(m.expr);
            std::cout << "rep_wedge: " << ycalc::to_string(c.rep.u) << "\n";
            std::cout << "rep_poly: " << ycalc::to_string(c.rep.f) << "\n";
            std::cout << "note: representatives mod S\n";
        }
        return 0;
    }
    if (cmd_eta->parsed()) {
        ycalc::SurgeryPresentation m = load_presentation(file1);
        print_header(m);
        std::cout << "eta1: " << ycalc::to_string(ycalc::eta1(m).value) << "\n";
        if (m.kind == ycalc::SurgeryCase::closed) std::cout << "note: representative mod S\n";
        return 0;
    }
    if (cmd_beta->parsed()) {
        ycalc::SurgeryPresentation m = load_presentation(file1);
        print_header(m);
        ycalc::BetaValue b = ycalc::beta(m);
        std::cout << "beta: " << ycalc::to_string(b.value) << "\n";
        if (m.kind == ycalc::SurgeryCase::closed) std::cout << "note: representative mod S\n";
        if (!form_bits.empty()) {
            ycalc::QForm q = ycalc::parse_qform(m.genus, form_bits);
            std::cout << "form: " << ycalc::to_string(q) << "\n";
            std::cout << "value_at_form: " << ycalc::evaluate(b.value, q) << "\n";
        }
        return 0;
    }
    if (cmd_rochlin->parsed()) {
        ycalc::SurgeryPresentation m = load_presentation(file1);
        ycalc::QForm q = ycalc::parse_qform(m.genus, form_bits);
        print_header(m);
        std::cout << "form: " << ycalc::to_string(q) << "\n";
        int total = 0;
        std::size_t index = 0;
        for (const auto& [t, c] : m.expr.terms()) {
            int delta = ycalc::rochlin_delta(t[0], t[1], t[2], q);
            int contribution = static_cast<int>((((c % 2) + 2) % 2)) * delta % 16;
            total = (total + contribution) % 16;
            std::cout << "term_" << ++index << ": " << contribution << "\n";
        }
        std::cout << "total: " << total << "\n";
        return 0;
    }
    if (cmd_equiv->parsed()) {
        ycalc::SurgeryPresentation a = load_presentation(file1);
        ycalc::SurgeryPresentation b = load_presentation(file2);
        ycalc::EquivalenceReport r = ycalc::y2_equivalent(a, b);
        std::cout << r.text;
        return r.equivalent ? 0 : 1;
    }
    if (cmd_selftest->parsed()) {
        ycalc::SelfTestResult r = ycalc::selftest(genus, seed);
        std::cout << r.text;
        return r.all_pass ? 0 : 1;
    }
    return 2;
}

}  // namespace

int main(int argc, char** argv) {
    try {
        return run(argc, argv);
    } catch (const ycalc::ParseError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
}
