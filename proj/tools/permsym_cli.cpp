// permsym: descent statistics, quasisymmetric expansions, symmetry and
// fineness decisions, tableau operators, and verification campaigns over
// multisets of permutations.

#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"

#include "permsym/json_io.hpp"
#include "permsym/permsym.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitInput = 2;
constexpr int kExitInfeasible = 3;
constexpr int kExitInternal = 4;

struct Sink {
    std::ofstream file;
    std::ostream* os = &std::cout;

    void open(const std::string& path) {
        if (path.empty()) return;
        file.open(path);
        if (!file) throw permsym::parse_error("cannot open output file '" + path + "'");
        os = &file;
    }
    std::ostream& out() { return *os; }
};

std::string slurp(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw permsym::parse_error("cannot open input file '" + path + "'");
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

std::string index_text(const std::vector<int>& parts) {
    std::string out = "(";
    for (std::size_t i = 0; i < parts.size(); ++i) {
        if (i) out += ',';
        out += std::to_string(parts[i]);
    }
    return out + ")";
}

void print_gcv_text(std::ostream& os, const permsym::qsym::GradedCoefficientVector& v) {
    if (v.terms().empty()) {
        os << permsym::qsym::basis_name(v.basis()) << " : 0\n";
        return;
    }
    for (const auto& [index, c] : v.terms())
        os << permsym::qsym::basis_name(v.basis()) << "[" << index_text(index) << "] : " << c << "\n";
}

std::vector<int> parse_int_list(const std::string& text, const char* what) {
    std::vector<int> out;
    if (text.empty()) return out;
    std::size_t pos = 0;
    while (pos <= text.size()) {
        std::size_t next = text.find(',', pos);
        if (next == std::string::npos) next = text.size();
        const std::string part = text.substr(pos, next - pos);
        if (part.empty() || part.find_first_not_of("0123456789") != std::string::npos)
            throw permsym::parse_error(std::string("invalid ") + what + " '" + text + "'");
        out.push_back(std::stoi(part));
        pos = next + 1;
    }
    return out;
}

permsym::PermMultiset load_multiset(const std::string& path, std::optional<int> degree) {
    std::istringstream in(slurp(path));
    return permsym::parse_multiset(in, degree);
}

void print_condition_report_text(std::ostream& os, const permsym::verifier::ConditionReport& r) {
    auto flag = [](bool ok) { return ok ? "true " : "false"; };
    os << "a) D-symmetric        " << flag(r.a.ok) << "  (" << r.a.millis << " ms)\n";
    if (r.a.witness) {
        os << "   witness U = ";
        for (const auto& block : r.a.witness->blocks()) os << index_text(block);
        os << "\n";
    }
    os << "b) D-commutative      " << flag(r.b.ok) << "  (" << r.b.millis << " ms)\n";
    if (r.b.witness) os << "   witness J = " << index_text(*r.b.witness) << "\n";
    auto pair_line = [&](const char* name, const permsym::verifier::CheckPair& p) {
        os << name << flag(p.ok) << "  (" << p.millis << " ms)\n";
        if (p.witness)
            os << "   witness J = " << index_text(p.witness->first)
               << ", K = " << index_text(p.witness->second) << "\n";
    };
    pair_line("c) right-invariant    ", r.c);
    pair_line("d) left-invariant     ", r.d);
    pair_line("e) symmetric          ", r.e);
    os << "agreement: " << (r.agreement() ? "yes" : "NO -- five-way disagreement") << "\n";
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"symmetric multisets of permutations: descent statistics, quasisymmetric "
                 "expansions, tableau bijections, and verification campaigns"};
    app.require_subcommand(1);

    std::string out_path;
    std::string format = "text";
    app.add_option("--out", out_path, "write output to a file instead of stdout");
    app.add_option("--format", format, "output format")->check(CLI::IsMember({"text", "json"}));

    std::optional<int> degree_override;
    auto add_degree = [&](CLI::App* cmd) {
        cmd->add_option("--degree", degree_override, "degree override (needed for empty files)");
    };

    // qsym
    std::string qsym_file;
    auto* cmd_qsym = app.add_subcommand("qsym", "print Q(B) in the F and M bases");
    cmd_qsym->add_option("file", qsym_file, "multiset file")->required();
    add_degree(cmd_qsym);

    // classify
    std::string classify_file;
    auto* cmd_classify =
        app.add_subcommand("classify", "decide not_symmetric / symmetric_not_fine / fine");
    cmd_classify->add_option("file", classify_file, "multiset file")->required();
    add_degree(cmd_classify);

    // verify
    std::string verify_file;
    bool campaign = false;
    std::string mode = "exhaustive_subsets";
    int campaign_degree = 3;
    long long samples = 1000;
    long long max_mult = 1;
    std::optional<std::uint64_t> seed;
    int threads = 0;
    auto* cmd_verify = app.add_subcommand("verify", "check the five-way equivalence on a multiset, "
                                                    "or run a verification campaign");
    cmd_verify->add_option("file", verify_file, "multiset file (omit with --campaign)");
    cmd_verify->add_flag("--campaign", campaign, "run a campaign instead of a single check");
    cmd_verify->add_option("--mode", mode, "campaign mode")
        ->check(CLI::IsMember({"exhaustive_subsets", "random_multisets", "structured"}));
    cmd_verify->add_option("--degree", campaign_degree, "campaign degree");
    cmd_verify->add_option("--samples", samples, "random mode: number of sampled multisets");
    cmd_verify->add_option("--max-mult", max_mult, "random mode: maximum multiplicity");
    cmd_verify->add_option("--seed", seed, "random mode: RNG seed (mandatory, echoed in report)");
    cmd_verify->add_option("--threads", threads, "worker threads (0 = hardware)");

    // promote
    std::string promote_file;
    int window_a = 0, window_b = 0;
    std::string v_list;
    bool with_trace = false;
    auto* cmd_promote = app.add_subcommand("promote", "apply a window promotion or a staged "
                                                      "promotion to a standard tableau");
    cmd_promote->add_option("file", promote_file, "tableau file")->required();
    cmd_promote->add_option("a", window_a, "window low end");
    cmd_promote->add_option("b", window_b, "window high end");
    cmd_promote->add_option("--v", v_list, "comma-separated V for the staged operator");
    cmd_promote->add_flag("--trace", with_trace, "print slide paths");

    // rs
    std::string rs_perm;
    auto* cmd_rs = app.add_subcommand("rs", "insertion and recording tableaux of a permutation");
    cmd_rs->add_option("permutation", rs_perm, "one-line permutation")->required();

    // knuth
    std::string knuth_file;
    auto* cmd_knuth = app.add_subcommand("knuth", "the Knuth class of an insertion tableau");
    cmd_knuth->add_option("file", knuth_file, "tableau file")->required();

    // conj
    int conj_n = 0;
    std::string conj_lambda;
    auto* cmd_conj = app.add_subcommand("conj", "a conjugacy class by cycle type");
    cmd_conj->add_option("n", conj_n, "degree")->required();
    cmd_conj->add_option("lambda", conj_lambda, "cycle type, e.g. 3,1")->required();

    // shuffle
    std::string shuffle_pi, shuffle_tau;
    auto* cmd_shuffle = app.add_subcommand("shuffle", "the shifted shuffle of two permutations");
    cmd_shuffle->add_option("pi", shuffle_pi, "first permutation")->required();
    cmd_shuffle->add_option("tau", shuffle_tau, "second permutation (letters shifted)")->required();

    // jclass / dclass
    int class_n = 0;
    std::string class_j;
    auto* cmd_jclass = app.add_subcommand("jclass", "the inverse J-class R_J^{-1}");
    cmd_jclass->add_option("n", class_n, "degree")->required();
    cmd_jclass->add_option("j", class_j, "subset of [n-1], e.g. 1,3 (default empty)");
    auto* cmd_dclass = app.add_subcommand("dclass", "the class D_J^{-1} (descent set exactly J)");
    cmd_dclass->add_option("n", class_n, "degree")->required();
    cmd_dclass->add_option("j", class_j, "subset of [n-1], e.g. 1,3 (default empty)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return e.get_exit_code() == 0 ? kExitOk : kExitInput;
    }

    const bool json_out = format == "json";
    Sink sink;
    try {
        sink.open(out_path);

        if (*cmd_qsym) {
            const permsym::PermMultiset b = load_multiset(qsym_file, degree_override);
            const auto f = permsym::qsym::q_of(b);
            const auto m = permsym::qsym::f_to_m(f);
            if (json_out) {
                sink.out() << nlohmann::json{{"f", permsym::to_json(f)}, {"m", permsym::to_json(m)}}
                                  .dump(2)
                           << "\n";
            } else {
                print_gcv_text(sink.out(), f);
                sink.out() << "\n";
                print_gcv_text(sink.out(), m);
            }
            return kExitOk;
        }

        if (*cmd_classify) {
            const permsym::PermMultiset b = load_multiset(classify_file, degree_override);
            const auto result = permsym::qsym::classify(b);
            if (json_out) {
                nlohmann::json j;
                j["status"] = permsym::qsym::symmetry_class_name(result.status);
                if (result.witness)
                    j["witness"] = {{"alpha", result.witness->first}, {"beta", result.witness->second}};
                if (result.schur) j["schur"] = permsym::to_json(*result.schur);
                sink.out() << j.dump(2) << "\n";
            } else {
                sink.out() << permsym::qsym::symmetry_class_name(result.status) << "\n";
                if (result.witness)
                    sink.out() << "witness: coefficient of M" << index_text(result.witness->first)
                               << " != coefficient of M" << index_text(result.witness->second) << "\n";
                if (result.schur) print_gcv_text(sink.out(), *result.schur);
            }
            return kExitOk;
        }

        if (*cmd_verify) {
            if (campaign) {
                permsym::verifier::CampaignConfig cfg;
                cfg.degree = campaign_degree;
                cfg.samples = samples;
                cfg.max_multiplicity = max_mult;
                cfg.seed = seed;
                cfg.threads = threads;
                if (mode == "exhaustive_subsets")
                    cfg.mode = permsym::verifier::CampaignMode::exhaustive_subsets;
                else if (mode == "random_multisets")
                    cfg.mode = permsym::verifier::CampaignMode::random_multisets;
                else
                    cfg.mode = permsym::verifier::CampaignMode::structured;
                const auto report = permsym::verifier::run_campaign(cfg);
                if (json_out) {
                    sink.out() << permsym::to_json(report).dump(2) << "\n";
                } else {
                    sink.out() << "mode: " << mode << ", degree " << cfg.degree << "\n"
                               << "items checked: " << report.items
                               << ", multisets covered: " << report.population_covered << "\n";
                    if (report.seeded) sink.out() << "seed: " << report.seed_used << "\n";
                    sink.out() << "disagreements: " << report.disagreements << "\n"
                               << "classification: ";
                    for (const auto& [k, v] : report.classification_counts)
                        sink.out() << k << "=" << v << " ";
                    sink.out() << "\nsymmetric_not_fine specimens: "
                               << report.symmetric_not_fine_total << "\n"
                               << "wall: " << report.wall_ms << " ms\n";
                }
                return report.disagreements == 0 ? kExitOk : kExitInternal;
            }
            if (verify_file.empty())
                throw permsym::parse_error("verify needs a multiset file or --campaign");
            const permsym::PermMultiset b = load_multiset(verify_file, degree_override);
            const auto report = permsym::verifier::check_theorem(b);
            if (json_out)
                sink.out() << permsym::to_json(report).dump(2) << "\n";
            else
                print_condition_report_text(sink.out(), report);
            return report.agreement() ? kExitOk : kExitInternal;
        }

        if (*cmd_promote) {
            const permsym::StandardTableau t = permsym::parse_tableau(slurp(promote_file));
            if (!v_list.empty()) {
                const std::vector<int> v = parse_int_list(v_list, "V");
                const auto stages = permsym::promote_v_stages(t, v);
                const permsym::StandardTableau result = stages.empty() ? t : stages.back().tableau;
                if (json_out) {
                    nlohmann::json j;
                    j["result"] = permsym::to_json(result);
                    nlohmann::json st = nlohmann::json::array();
                    for (const auto& stage : stages) {
                        nlohmann::json s = permsym::to_json(stage.tableau);
                        s["trace"] = permsym::to_json(stage.trace);
                        st.push_back(s);
                    }
                    j["stages"] = st;
                    sink.out() << j.dump(2) << "\n";
                } else {
                    sink.out() << permsym::format_tableau(result);
                    if (with_trace)
                        for (const auto& stage : stages) {
                            sink.out() << "# window [" << stage.trace.low << "," << stage.trace.high
                                       << "] path:";
                            for (const auto& [r, c] : stage.trace.path)
                                sink.out() << " (" << r << "," << c << ")";
                            sink.out() << "\n";
                        }
                }
            } else {
                if (window_a < 1 || window_b < 1)
                    throw permsym::parse_error("promote needs positional a b or --v");
                const auto result = permsym::promote(t, window_a, window_b);
                if (json_out) {
                    nlohmann::json j = permsym::to_json(result.tableau);
                    j["trace"] = permsym::to_json(result.trace);
                    sink.out() << j.dump(2) << "\n";
                } else {
                    sink.out() << permsym::format_tableau(result.tableau);
                    if (with_trace) {
                        sink.out() << "# path:";
                        for (const auto& [r, c] : result.trace.path)
                            sink.out() << " (" << r << "," << c << ")";
                        sink.out() << "\n";
                    }
                }
            }
            return kExitOk;
        }

        if (*cmd_rs) {
            const permsym::Permutation pi = permsym::parse_permutation(rs_perm);
            const permsym::TableauPair pq = permsym::rs(pi);
            if (json_out) {
                sink.out() << permsym::to_json(pq).dump(2) << "\n";
            } else {
                sink.out() << "P:\n" << permsym::format_tableau(pq.p) << "Q:\n"
                           << permsym::format_tableau(pq.q);
            }
            return kExitOk;
        }

        if (*cmd_knuth) {
            const permsym::StandardTableau p = permsym::parse_tableau(slurp(knuth_file));
            const auto& cls = permsym::knuth_class(p);
            const permsym::PermMultiset b = permsym::PermMultiset::from_permutations(p.size(), cls);
            if (json_out)
                sink.out() << permsym::to_json(b).dump(2) << "\n";
            else
                sink.out() << permsym::format_multiset(b);
            return kExitOk;
        }

        if (*cmd_conj) {
            permsym::Partition lambda(parse_int_list(conj_lambda, "cycle type"));
            const auto cls = permsym::conjugacy_class(conj_n, lambda);
            const permsym::PermMultiset b = permsym::PermMultiset::from_permutations(conj_n, cls);
            if (json_out)
                sink.out() << permsym::to_json(b).dump(2) << "\n";
            else
                sink.out() << permsym::format_multiset(b);
            return kExitOk;
        }

        if (*cmd_shuffle) {
            const permsym::Permutation pi = permsym::parse_permutation(shuffle_pi);
            const permsym::Permutation tau = permsym::parse_permutation(shuffle_tau);
            const auto result = permsym::shifted_shuffle(pi, tau);
            const permsym::PermMultiset b =
                permsym::PermMultiset::from_permutations(pi.degree() + tau.degree(), result);
            if (json_out)
                sink.out() << permsym::to_json(b).dump(2) << "\n";
            else
                sink.out() << permsym::format_multiset(b);
            return kExitOk;
        }

        if (*cmd_jclass || *cmd_dclass) {
            const std::vector<int> j = parse_int_list(class_j, "subset");
            const auto cls = *cmd_jclass ? permsym::inverse_j_class(class_n, j)
                                         : permsym::d_class(class_n, j);
            const permsym::PermMultiset b = permsym::PermMultiset::from_permutations(class_n, cls);
            if (json_out)
                sink.out() << permsym::to_json(b).dump(2) << "\n";
            else
                sink.out() << permsym::format_multiset(b);
            return kExitOk;
        }
    } catch (const permsym::parse_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitInput;
    } catch (const permsym::infeasible_error& e) {
        std::cerr << "infeasible: " << e.what() << "\n";
        return kExitInfeasible;
    } catch (const permsym::internal_error& e) {
        std::cerr << "internal consistency failure: " << e.what() << "\n";
        return kExitInternal;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitInput;
    }
    return kExitOk;
}
