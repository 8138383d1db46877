#include "qorbit/claims.hpp"
#include "qorbit/errors.hpp"
#include "qorbit/group_action.hpp"
#include "qorbit/orbits.hpp"
#include "qorbit/quad_irr.hpp"
#include "qorbit/residue.hpp"

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include <fstream>
#include <iostream>
#include <sstream>

namespace {

constexpr const char* kVersion = "0.1.0";

using qorbit::Integer;
using qorbit::QuadIrr;

std::vector<Integer> parse_list(const std::string& csv) {
    std::vector<Integer> out;
    std::stringstream ss(csv);
    std::string item;
    while (std::getline(ss, item, ','))
        if (!item.empty()) out.push_back(Integer(item));
    return out;
}

void print_orbits_table(const Integer& n, const std::vector<qorbit::Orbit>& orbits) {
    std::cout << "n = " << n << "\n";
    for (const auto& o : orbits) {
        std::cout << o.rep.str() << "  length=" << o.ambiguous_length
                  << "  word=" << o.fixing_word.str() << "  label=" << o.label.str() << "\n";
    }
}

void print_orbits_csv(const std::vector<qorbit::Orbit>& orbits) {
    std::cout << "rep_a,rep_b,rep_c,length,word,label\n";
    for (const auto& o : orbits) {
        std::cout << o.rep.a() << "," << o.rep.b() << "," << o.rep.c() << ","
                  << o.ambiguous_length << "," << o.fixing_word.str() << ","
                  << "\"" << o.label.str() << "\"\n";
    }
}

int run(int argc, char** argv) {
    CLI::App app{"Exact modular-group action on Q*(sqrt(n)): ambiguous numbers, "
                 "G-orbits, fixing words, residue classes and claim verification"};
    app.set_version_flag("--version", kVersion);
    app.require_subcommand(1);

    // orbits
    std::string orbits_n, orbits_format = "table";
    auto* cmd_orbits = app.add_subcommand("orbits", "Orbit table for Q*(sqrt(n))");
    cmd_orbits->add_option("n", orbits_n)->required();
    cmd_orbits->add_option("--format", orbits_format)
        ->check(CLI::IsMember({"table", "json", "csv"}));

    // ambiguous
    std::string amb_n;
    bool amb_list = false;
    auto* cmd_amb = app.add_subcommand("ambiguous", "tau*(n) and optionally all ambiguous triples");
    cmd_amb->add_option("n", amb_n)->required();
    cmd_amb->add_flag("--list", amb_list);

    // classify
    std::string cls_a, cls_c, cls_n;
    auto* cmd_classify = app.add_subcommand("classify", "Triple, ambiguity, subset label, orbit rep");
    cmd_classify->add_option("a", cls_a)->required();
    cmd_classify->add_option("c", cls_c)->required();
    cmd_classify->add_option("n", cls_n)->required();

    // reduce
    std::string red_a, red_c, red_n;
    bool red_trace = false;
    auto* cmd_reduce = app.add_subcommand("reduce", "Ambiguous reduct and G-word");
    cmd_reduce->add_option("a", red_a)->required();
    cmd_reduce->add_option("c", red_c)->required();
    cmd_reduce->add_option("n", red_n)->required();
    cmd_reduce->add_flag("--trace", red_trace);

    // word
    std::string word_a, word_c, word_n;
    auto* cmd_word = app.add_subcommand("word", "Fixing word of the containing orbit");
    cmd_word->add_option("a", word_a)->required();
    cmd_word->add_option("c", word_c)->required();
    cmd_word->add_option("n", word_n)->required();

    // classes
    std::string classes_n, classes_s, classes_p;
    std::string classes_format = "table";
    auto* cmd_classes = app.add_subcommand("classes", "E^n_s, optionally the A1/A2/C1/C2 partition");
    cmd_classes->add_option("n", classes_n)->required();
    cmd_classes->add_option("s", classes_s)->required();
    cmd_classes->add_option("--partition", classes_p);
    cmd_classes->add_option("--format", classes_format)->check(CLI::IsMember({"table", "json"}));

    // subsets
    std::string subsets_n;
    auto* cmd_subsets = app.add_subcommand("subsets", "Predicted vs realized subset counts");
    cmd_subsets->add_option("n", subsets_n)->required();

    // diagram
    std::string diagram_n, diagram_out;
    auto* cmd_diagram = app.add_subcommand("diagram", "DOT export of the ambiguity graph");
    cmd_diagram->add_option("n", diagram_n)->required();
    cmd_diagram->add_option("--out", diagram_out)->required();

    // verify
    std::string verify_claim, verify_ns, verify_ps, verify_expect;
    long long verify_nmax = 0;
    auto* cmd_verify = app.add_subcommand("verify", "Check one of the named claims");
    cmd_verify->add_option("claim", verify_claim)
        ->required()
        ->check(CLI::IsMember(qorbit::known_claims()));
    cmd_verify->add_option("--n", verify_ns);
    cmd_verify->add_option("--p", verify_ps);
    cmd_verify->add_option("--nmax", verify_nmax);
    cmd_verify->add_option("--expect", verify_expect)
        ->check(CLI::IsMember({"confirmed", "refuted"}));

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 1;
    }

    try {
        if (*cmd_orbits) {
            Integer n(orbits_n);
            auto orbits = qorbit::orbit_decomposition(n);
            if (orbits_format == "json")
                std::cout << qorbit::orbits_to_json(n, orbits).dump(2) << "\n";
            else if (orbits_format == "csv")
                print_orbits_csv(orbits);
            else
                print_orbits_table(n, orbits);
        } else if (*cmd_amb) {
            Integer n(amb_n);
            auto set = qorbit::enumerate_ambiguous(n);
            std::cout << "tau = " << set.size() << "\n";
            if (amb_list)
                for (const auto& e : set.elements)
                    std::cout << "(" << e.a() << "," << e.b() << "," << e.c() << ")\n";
        } else if (*cmd_classify) {
            QuadIrr alpha = QuadIrr::make(Integer(cls_a), Integer(cls_c), Integer(cls_n));
            auto orbit = qorbit::orbit_of(alpha);
            std::cout << "triple = (" << alpha.a() << "," << alpha.b() << "," << alpha.c() << ")\n"
                      << "ambiguous = " << (alpha.is_ambiguous() ? "yes" : "no") << "\n"
                      << "label = " << qorbit::subset_label(alpha).str() << "\n"
                      << "orbit rep = " << orbit.rep.str() << "\n";
        } else if (*cmd_reduce) {
            QuadIrr alpha = QuadIrr::make(Integer(red_a), Integer(red_c), Integer(red_n));
            if (red_trace && !alpha.is_ambiguous()) {
                QuadIrr cur = alpha;
                std::cout << "trace: (" << cur.a() << "," << cur.b() << "," << cur.c() << ")\n";
                std::size_t steps = 0;
                while (!qorbit::is_reduced_surd(cur) || steps % 2 == 1) {
                    cur = qorbit::cf_step(cur);
                    ++steps;
                    std::cout << "trace: (" << cur.a() << "," << cur.b() << "," << cur.c() << ")\n";
                }
            }
            auto [beta, w] = qorbit::reduce_to_ambiguous(alpha);
            std::cout << "reduct = (" << beta.a() << "," << beta.b() << "," << beta.c() << ")\n"
                      << "word = " << (w.empty() ? "1" : w.str()) << "\n";
        } else if (*cmd_word) {
            QuadIrr alpha = QuadIrr::make(Integer(word_a), Integer(word_c), Integer(word_n));
            std::cout << qorbit::orbit_of(alpha).fixing_word.str() << "\n";
        } else if (*cmd_classes) {
            Integer n(classes_n), s(classes_s);
            if (!classes_p.empty()) {
                auto part = qorbit::partition_ACsets(n, Integer(classes_p));
                if (classes_format == "json") {
                    nlohmann::json j;
                    auto dump = [](const std::vector<qorbit::ResidueClass>& v) {
                        nlohmann::json arr = nlohmann::json::array();
                        for (const auto& cls : v) arr.push_back(cls.str());
                        return arr;
                    };
                    j["A1"] = dump(part.A1);
                    j["A2"] = dump(part.A2);
                    j["C1"] = dump(part.C1);
                    j["C2"] = dump(part.C2);
                    std::cout << j.dump(2) << "\n";
                } else {
                    auto show = [](const char* name, const std::vector<qorbit::ResidueClass>& v) {
                        std::cout << name << ":";
                        for (const auto& cls : v) std::cout << " " << cls.str();
                        std::cout << "\n";
                    };
                    show("A1", part.A1);
                    show("A2", part.A2);
                    show("C1", part.C1);
                    show("C2", part.C2);
                }
            } else {
                auto classes = qorbit::enumerate_classes(n, s);
                if (classes_format == "json") {
                    nlohmann::json arr = nlohmann::json::array();
                    for (const auto& cls : classes) arr.push_back(cls.str());
                    std::cout << arr.dump(2) << "\n";
                } else {
                    for (const auto& cls : classes) std::cout << cls.str() << "\n";
                }
            }
        } else if (*cmd_subsets) {
            Integer n(subsets_n);
            auto predicted = qorbit::predicted_subset_count(n);
            std::set<qorbit::SubsetLabel> realized;
            for (const auto& e : qorbit::enumerate_ambiguous(n).elements)
                realized.insert(qorbit::subset_label(e));
            auto orbits = qorbit::orbit_decomposition(n);
            std::cout << "predicted = " << predicted << "\n"
                      << "realized labels = " << realized.size() << "\n"
                      << "orbits = " << orbits.size() << "\n";
        } else if (*cmd_diagram) {
            Integer n(diagram_n);
            std::ofstream out(diagram_out);
            if (!out) {
                std::cerr << "cannot open " << diagram_out << "\n";
                return 1;
            }
            out << qorbit::orbits_to_dot(n, kVersion);
        } else if (*cmd_verify) {
            qorbit::ClaimOptions opts;
            opts.ns = parse_list(verify_ns);
            opts.ps = parse_list(verify_ps);
            opts.nmax = verify_nmax;
            auto report = qorbit::run_claim(verify_claim, opts);
            std::cout << report.to_json().dump(2) << "\n";
            std::string expect = verify_expect.empty() ? "confirmed" : verify_expect;
            return qorbit::status_str(report.status) == expect ? 0 : 3;
        }
    } catch (const qorbit::Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 0;
}

} // namespace

int main(int argc, char** argv) { return run(argc, argv); }
