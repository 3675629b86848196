// Command-line front end: exact Hilbert symbols, cocycle checks, period-index
// triples, special-fibre indices, and section-obstruction reports, all
// emitting versioned JSON.

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>

#include "brauerlab/json_io.hpp"

namespace {

using brauerlab::io::json;

json read_json_input(const std::string& path) {
    if (path.empty() || path == "-") {
        std::stringstream buffer;
        buffer << std::cin.rdbuf();
        return json::parse(buffer.str());
    }
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open " + path);
    return json::parse(in);
}

void emit(const json& j) { std::cout << j.dump(2) << "\n"; }

std::vector<brauerlab::Integer> parse_prime_list(const std::string& csv) {
    std::vector<brauerlab::Integer> out;
    std::stringstream ss(csv);
    std::string item;
    while (std::getline(ss, item, ','))
        if (!item.empty()) out.emplace_back(item);
    return out;
}

void print_report_text(const brauerlab::GlobalReport& report) {
    std::cout << "genus " << report.genus << "\n";
    for (const auto& pv : report.place_verdicts) {
        std::cout << "  place " << pv.place.str() << ": ";
        if (pv.verdict == brauerlab::VerdictKind::NoSection)
            std::cout << "no section (" << pv.detail << ")\n";
        else
            std::cout << "no information\n";
    }
    if (report.real_points)
        std::cout << "real points: " << (*report.real_points ? "yes" : "no") << "\n";
    switch (report.conclusion) {
        case brauerlab::GlobalConclusion::SectionConjectureHoldsTrivially:
            std::cout << "verdict: section conjecture holds trivially (witness place "
                      << report.witness->str() << ")\n";
            break;
        case brauerlab::GlobalConclusion::GlobalBrauerVanishes:
            std::cout << "verdict: relative Brauer group vanishes globally\n";
            break;
        case brauerlab::GlobalConclusion::Inconclusive:
            std::cout << "verdict: inconclusive\n";
            break;
    }
}

}  // namespace

int main(int argc, char** argv) {
    using namespace brauerlab;

    CLI::App app{"exact period-index, Brauer-invariant and section-obstruction computations"};
    app.require_subcommand(1);

    // hilbert a b [--place v]
    std::string hil_a, hil_b, hil_place;
    auto* hilbert_cmd =
        app.add_subcommand("hilbert", "Hilbert symbol (a,b)_v or the full invariant map");
    hilbert_cmd->add_option("a", hil_a, "first coefficient")->required();
    hilbert_cmd->add_option("b", hil_b, "second coefficient")->required();
    hilbert_cmd->add_option("--place", hil_place, "single place: real, 2, or an odd prime");

    // cocycle [--input FILE]
    std::string coc_input;
    auto* cocycle_cmd = app.add_subcommand(
        "cocycle", "verify cochains and report H^2 orders from a JSON description");
    cocycle_cmd->add_option("--input", coc_input, "JSON file (default: stdin)");

    // triples check|enumerate|with-section
    auto* triples_cmd = app.add_subcommand("triples", "genus-period-index triples");
    long long tr_g = 0, tr_pe = 0, tr_ix = 0, tr_p = 0;
    std::optional<long long> tr_bound;
    auto* tr_check = triples_cmd->add_subcommand("check", "admissibility of (g, pe, ix)");
    tr_check->add_option("g", tr_g)->required();
    tr_check->add_option("pe", tr_pe)->required();
    tr_check->add_option("ix", tr_ix)->required();
    auto* tr_enum = triples_cmd->add_subcommand("enumerate", "all admissible (pe, ix) for g");
    tr_enum->add_option("g", tr_g)->required();
    tr_enum->add_option("--bound", tr_bound, "period bound, required for g = 1");
    auto* tr_section =
        triples_cmd->add_subcommand("with-section", "admissible triples surviving a section at p");
    tr_section->add_option("g", tr_g)->required();
    tr_section->add_option("p", tr_p)->required();

    // model index|glue
    auto* model_cmd = app.add_subcommand("model", "special fibres of regular models");
    std::string model_fibre_path;
    long long glue_n = 0, glue_q = 0, glue_genus = 1;
    auto* model_index = model_cmd->add_subcommand("index", "index of the generic fibre");
    model_index->add_option("--fibre", model_fibre_path, "fibre JSON file (default: stdin)");
    auto* model_glue = model_cmd->add_subcommand("glue", "circle gluing of length n over F_q");
    model_glue->add_option("n", glue_n)->required();
    model_glue->add_option("q", glue_q)->required();
    model_glue->add_option("--genus-c", glue_genus, "genus of the building block");

    // analyze diagonal|model
    auto* analyze_cmd = app.add_subcommand("analyze", "per-place section obstruction report");
    long long an_n = 0, an_genus = 0;
    std::string an_a, an_b, an_prime, an_fibre_path;
    bool an_json = false;
    auto* an_diag = analyze_cmd->add_subcommand("diagonal", "diagonal-form cover of a conic");
    an_diag->add_option("--n", an_n, "half-degree: the curve has degree 2n")->required();
    an_diag->add_option("--a", an_a)->required();
    an_diag->add_option("--b", an_b)->required();
    an_diag->add_flag("--json", an_json, "emit the full JSON report");
    auto* an_model = analyze_cmd->add_subcommand("model", "curve given by reduction data");
    an_model->add_option("--genus", an_genus)->required();
    an_model->add_option("--prime", an_prime)->required();
    an_model->add_option("--fibre", an_fibre_path, "fibre JSON file")->required();
    an_model->add_flag("--json", an_json, "emit the full JSON report");

    // deduce hbn|corollary-q
    auto* deduce_cmd = app.add_subcommand("deduce", "local-global deductions");
    std::string ded_constraints_path, ded_bad_primes;
    long long ded_genus = 0;
    bool ded_section = false;
    auto* ded_hbn =
        deduce_cmd->add_subcommand("hbn", "invariant vectors with vanishing global sum");
    ded_hbn->add_option("--constraints", ded_constraints_path, "constraints JSON file")
        ->required();
    auto* ded_q = deduce_cmd->add_subcommand("corollary-q", "consequences of a section over Q");
    ded_q->add_option("--genus", ded_genus)->required();
    ded_q->add_flag("--section", ded_section, "assume the fundamental extension splits");
    ded_q->add_option("--bad-primes", ded_bad_primes, "comma-separated bad primes");

    CLI11_PARSE(app, argc, argv);

    try {
        if (*hilbert_cmd) {
            QuaternionSymbol q{Integer(hil_a), Integer(hil_b)};
            if (!hil_place.empty()) {
                Place v = hil_place == "real" ? Place::real() : Place::finite(Integer(hil_place));
                std::cout << hilbert_symbol(q, v) << "\n";
            } else {
                emit(io::invariant_map_to_json(q, quaternion_invariants(q)));
            }
        } else if (*cocycle_cmd) {
            emit(io::cocycle_session_to_json(read_json_input(coc_input)));
        } else if (*tr_check) {
            PITriple t{tr_g, tr_pe, tr_ix};
            emit(io::admissibility_to_json(t, lichtenbaum_admissible(t)));
        } else if (*tr_enum) {
            emit(io::pairs_to_json(tr_g, enumerate_admissible(tr_g, tr_bound)));
        } else if (*tr_section) {
            emit(io::pairs_to_json(tr_g, admissible_with_section(tr_g, tr_p)));
        } else if (*model_index) {
            SpecialFibre fb = io::fibre_from_json(read_json_input(model_fibre_path));
            json out{{"schema", io::kSchema},
                     {"fibre", io::fibre_to_json(fb)},
                     {"index", io::integer_to_json(index_from_model(fb))}};
            emit(out);
        } else if (*model_glue) {
            SpecialFibre fb = glue_circle(GluingSpec{glue_n, glue_q, glue_genus});
            json out{{"schema", io::kSchema},
                     {"fibre", io::fibre_to_json(fb)},
                     {"index", io::integer_to_json(index_from_model(fb))}};
            emit(out);
        } else if (*an_diag || *an_model) {
            CurveDescriptor curve =
                *an_diag
                    ? CurveDescriptor(DiagonalForm{an_n, Integer(an_a), Integer(an_b)})
                    : CurveDescriptor(ModelCurve{an_genus, Integer(an_prime),
                                                 io::fibre_from_json(read_json_input(an_fibre_path))});
            GlobalReport report = global_report(curve);
            if (an_json)
                emit(io::global_report_to_json(report));
            else
                print_report_text(report);
        } else if (*ded_hbn) {
            auto constraints = io::constraints_from_json(read_json_input(ded_constraints_path));
            emit(io::hbn_vectors_to_json(constraints, hasse_brauer_noether_deduce(constraints)));
        } else if (*ded_q) {
            emit(io::deduction_report_to_json(
                corollary_q_deduce(ded_genus, ded_section, parse_prime_list(ded_bad_primes))));
        }
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 0;
}
