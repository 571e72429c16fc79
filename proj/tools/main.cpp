// Command-line front end: construction, validation, classification and
// rendering of direction-critical centrally symmetric allowable sequences.

#include <fstream>
#include <iostream>
#include <set>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "dirseq/classify.hpp"
#include "dirseq/construct.hpp"
#include "dirseq/enumerate.hpp"
#include "dirseq/equivalence.hpp"
#include "dirseq/io.hpp"

using nlohmann::json;

namespace {

dirseq::HalfPeriod load_halfperiod(const std::string& path) {
    std::ifstream in(path);
    if (!in) dirseq::fail("FileNotFound", "cannot open '" + path + "'");
    return dirseq::read_halfperiod(in);
}

dirseq::Configuration load_configuration(const std::string& path) {
    std::ifstream in(path);
    if (!in) dirseq::fail("FileNotFound", "cannot open '" + path + "'");
    return dirseq::read_configuration(in);
}

void emit(const std::string& text, const std::string& out_path) {
    if (out_path.empty()) {
        std::cout << text;
        return;
    }
    std::ofstream out(out_path);
    if (!out) dirseq::fail("FileNotFound", "cannot write '" + out_path + "'");
    out << text;
}

std::set<dirseq::Label> parse_labels(const std::string& csv) {
    std::set<dirseq::Label> labels;
    std::stringstream ss(csv);
    std::string item;
    while (std::getline(ss, item, ','))
        labels.insert(static_cast<dirseq::Label>(std::stoll(item)));
    return labels;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"direction-critical centrally symmetric allowable sequences"};
    app.require_subcommand(1);

    std::string signature_csv, method = "closed", file_a, file_b, out_path, keep_csv;
    int point_label = 0;
    bool as_json = false, annotate_center = false;
    std::size_t node_limit = 10'000'000;

    auto* generate = app.add_subcommand("generate", "build the canonical sequence for a signature");
    generate->add_option("--signature", signature_csv, "comma-separated entries, e.g. 3,2,1")->required();
    generate->add_option("--method", method, "closed | inductive")->check(CLI::IsMember({"closed", "inductive"}));
    generate->add_option("-o,--output", out_path, "write to file instead of stdout");
    generate->add_flag("--annotate-center", annotate_center,
                       "note the odd companion obtained by adding the center of symmetry");

    auto* validate_cmd = app.add_subcommand("validate", "check a halfperiod file against the axioms");
    validate_cmd->add_option("file", file_a)->required();

    auto* signature_cmd = app.add_subcommand("signature", "central signature of a halfperiod file");
    signature_cmd->add_option("file", file_a)->required();
    signature_cmd->add_flag("--json", as_json);

    auto* path_cmd = app.add_subcommand("path", "point path word of one label");
    path_cmd->add_option("file", file_a)->required();
    path_cmd->add_option("--point", point_label, "signed label")->required();

    auto* induce_cmd = app.add_subcommand("induce", "restrict to a label subset");
    induce_cmd->add_option("file", file_a)->required();
    induce_cmd->add_option("--keep", keep_csv, "comma-separated labels to keep")->required();
    induce_cmd->add_option("-o,--output", out_path);

    auto* equiv_cmd = app.add_subcommand("equiv", "combinatorial equivalence of two halfperiods");
    equiv_cmd->add_option("a", file_a)->required();
    equiv_cmd->add_option("b", file_b)->required();

    auto* classify_cmd = app.add_subcommand("classify", "geometric realizability of a signature");
    classify_cmd->add_option("--signature", signature_csv)->required();
    classify_cmd->add_flag("--json", as_json);

    auto* realize_cmd = app.add_subcommand("realize", "witness configuration, sweep, and cross-check");
    realize_cmd->add_option("--signature", signature_csv)->required();

    auto* sweep_cmd = app.add_subcommand("sweep", "circular sequence of a configuration file");
    sweep_cmd->add_option("config", file_a)->required();
    sweep_cmd->add_option("-o,--output", out_path);

    auto* enumerate_cmd = app.add_subcommand("enumerate", "exhaustive search for a small signature");
    enumerate_cmd->add_option("--signature", signature_csv)->required();
    enumerate_cmd->add_option("--node-limit", node_limit);

    auto* render_cmd = app.add_subcommand("render", "SVG plot of a configuration file");
    render_cmd->add_option("config", file_a)->required();
    render_cmd->add_option("-o,--output", out_path);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0) return app.exit(e);
        app.exit(e);
        return 2;
    }

    try {
        using namespace dirseq;
        if (*generate) {
            CentralSignature d = CentralSignature::parse(signature_csv);
            HalfPeriod seq = method == "closed" ? dc_closed_form(d) : dc_inductive(d);
            std::string text;
            if (annotate_center)
                text += "# odd companion: add the center of symmetry; it joins every "
                        "crossing line and leaves all moves unchanged\n";
            text += write_halfperiod(seq);
            emit(text, out_path);
        } else if (*validate_cmd) {
            std::ifstream in(file_a);
            if (!in) fail("FileNotFound", "cannot open '" + file_a + "'");
            HalfPeriod seq = read_halfperiod(in);
            std::cout << "valid: N=" << seq.size() << " h=" << seq.length()
                      << " centrally_symmetric=" << (seq.centrally_symmetric() ? "yes" : "no")
                      << " ncgen=" << (seq.noncentral_general_position() ? "yes" : "no")
                      << " near_critical=" << (seq.even_near_critical() ? "yes" : "no") << "\n";
        } else if (*signature_cmd) {
            HalfPeriod seq = load_halfperiod(file_a);
            CentralSignature d = central_signature(seq);
            if (as_json) {
                json j{{"signature", d.entries},
                       {"n_points", seq.size()},
                       {"h", seq.length()},
                       {"even_near_critical", seq.even_near_critical()},
                       {"noncentral_general_position", seq.noncentral_general_position()}};
                std::cout << j.dump() << "\n";
            } else {
                std::cout << d.to_string() << "\n";
            }
        } else if (*path_cmd) {
            HalfPeriod seq = load_halfperiod(file_a);
            std::cout << point_path(seq, point_label) << "\n";
        } else if (*induce_cmd) {
            HalfPeriod seq = load_halfperiod(file_a);
            emit(write_halfperiod(induce(seq, parse_labels(keep_csv))), out_path);
        } else if (*equiv_cmd) {
            HalfPeriod a = load_halfperiod(file_a);
            HalfPeriod b = load_halfperiod(file_b);
            auto witness = equivalent(a, b);
            if (!witness) {
                std::cout << "not equivalent\n";
            } else {
                std::cout << "equivalent: shift=" << witness->shift
                          << " time_reversed=" << (witness->time_reversed ? "yes" : "no")
                          << " mirrored=" << (witness->mirrored ? "yes" : "no") << "\nrelabel:";
                for (const auto& [from, to] : witness->relabel)
                    std::cout << " " << from << "->" << to;
                std::cout << "\n";
            }
        } else if (*classify_cmd) {
            CentralSignature d = CentralSignature::parse(signature_csv);
            Verdict v = classify(d);
            if (as_json) {
                json j{{"signature", d.entries},
                       {"realizable", v.realizable},
                       {"pattern", pattern_name(v.pattern)}};
                if (v.witness) j["witness"] = v.witness->name();
                std::cout << j.dump() << "\n";
            } else if (v.realizable) {
                std::cout << "realizable (" << pattern_name(v.pattern)
                          << "; witness: " << v.witness->name() << ")\n";
            } else {
                std::cout << "not realizable (blocking pattern: " << pattern_name(v.pattern)
                          << ")\n";
            }
        } else if (*realize_cmd) {
            CentralSignature d = CentralSignature::parse(signature_csv);
            Verdict v = classify(d);
            if (!v.realizable)
                fail("NotRealizable", "signature " + d.to_string() +
                                          " (blocking pattern: " + pattern_name(v.pattern) + ")");
            std::cout << "witness: " << v.witness->name() << "\n";
            if (v.witness->kind == FamilySpec::Kind::Polygon &&
                v.witness->sides != 4 && v.witness->sides != 8) {
                HalfPeriod swept = polygon_sequence(v.witness->sides / 2);
                std::cout << "sweep (rational-angle): h=" << swept.length() << "\n";
                std::cout << "matches generated sequence: "
                          << (equivalent(swept, dc_closed_form(d)) ? "yes" : "no") << "\n";
            } else {
                Configuration cfg = gen_family(*v.witness);
                std::cout << write_configuration(cfg);
                HalfPeriod swept = circular_sequence(cfg);
                std::cout << "sweep: h=" << swept.length() << " signature="
                          << central_signature(swept).to_string() << "\n";
                std::cout << "matches generated sequence: "
                          << (equivalent(swept, dc_closed_form(d)) ? "yes" : "no") << "\n";
            }
        } else if (*sweep_cmd) {
            Configuration cfg = load_configuration(file_a);
            emit(write_halfperiod(circular_sequence(cfg)), out_path);
        } else if (*enumerate_cmd) {
            CentralSignature d = CentralSignature::parse(signature_csv);
            EnumerationResult res = enumerate_dc(d, node_limit);
            for (std::size_t i = 0; i < res.classes.size(); ++i) {
                std::cout << "# class " << (i + 1) << "\n"
                          << write_halfperiod(res.classes[i]);
            }
            std::cout << "classes=" << res.classes.size() << " raw=" << res.raw_count
                      << " shift_only_classes=" << res.shift_only_classes
                      << " nodes=" << res.nodes << "\n";
        } else if (*render_cmd) {
            Configuration cfg = load_configuration(file_a);
            emit(render_svg(cfg), out_path);
        }
    } catch (const dirseq::Error& e) {
        std::cerr << e.what() << "\n";
        return 1;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 0;
}
