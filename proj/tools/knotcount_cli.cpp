// knotcount: homomorphism-counting knot invariants over finite groups, and
// the torus-family tests that decide "not an invariant of finite type".

#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <thread>

#include <CLI11.hpp>

#include "knotcount/braid.hpp"
#include "knotcount/config.hpp"
#include "knotcount/error.hpp"
#include "knotcount/group.hpp"
#include "knotcount/invariant.hpp"
#include "knotcount/report.hpp"
#include "knotcount/vassiliev.hpp"

namespace kc = knotcount;

namespace {

struct CommonOpts {
    std::string format = "json";
    std::string out_path;
    kc::Caps caps;
    int threads = 0; // 0 = all cores
};

int effective_threads(const CommonOpts& o) {
    if (o.threads > 0) return o.threads;
    unsigned hw = std::thread::hardware_concurrency();
    return hw ? static_cast<int>(hw) : 1;
}

void add_common(CLI::App* cmd, CommonOpts& o) {
    cmd->add_option("--format", o.format, "Output format: json|csv|text")
        ->default_val("json");
    cmd->add_option("--out", o.out_path, "Write the report to this path instead of stdout");
    cmd->add_option("--state-cap", o.caps.state_cap, "Max coloring-steps per enumeration")
        ->envname("KNOTCOUNT_STATE_CAP");
    cmd->add_option("--order-cap", o.caps.order_cap, "Max group order for family builders")
        ->envname("KNOTCOUNT_ORDER_CAP");
    cmd->add_option("--x-cap", o.caps.x_cap, "Max crossings in a finite-type sum")
        ->envname("KNOTCOUNT_X_CAP");
    cmd->add_option("--threads", o.threads, "Worker threads (0 = all cores)")
        ->envname("KNOTCOUNT_THREADS");
}

kc::GroupTable resolve_group(const std::string& spec, const kc::Caps& caps) {
    if (spec.find(':') != std::string::npos) return kc::make_family(spec, caps.order_cap);
    if (std::filesystem::exists(spec)) return kc::load_group_file(spec);
    kc::fail("ConfigError", "group spec '" + spec + "' is neither family:param nor a file");
}

// Reports are built in full before anything is written; a failure never
// leaves a partial report behind.
void emit(const CommonOpts& o, const std::string& report) {
    if (o.out_path.empty()) {
        std::cout << report;
        return;
    }
    std::ofstream out(o.out_path, std::ios::trunc);
    if (!out) kc::fail("ConfigError", "cannot open output path '" + o.out_path + "'");
    out << report;
}

std::vector<int> parse_positions(const std::string& text) {
    std::istringstream in(text);
    std::vector<int> out;
    int v;
    while (in >> v) out.push_back(v);
    if (!in.eof()) kc::fail("ConfigError", "bad crossing position list '" + text + "'");
    return out;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Knot-group homomorphism counting over finite groups"};
    app.require_subcommand(1);

    std::string group_spec, subset_spec, braid_text, claim_name, method = "trace";
    std::string positions_text;
    int strands = 0, p_max = 8, param = 0;
    std::optional<long long> constant_value;

    CommonOpts o_info, o_count, o_profile, o_star, o_ftsum, o_verify;

    auto* info = app.add_subcommand("group-info", "Build a group and emit it / its summary");
    info->add_option("--group", group_spec, "family:param or path to a group JSON file")
        ->required();
    add_common(info, o_info);

    auto* count = app.add_subcommand("count", "Compute [K,G,C] for a braid closure");
    count->add_option("--group", group_spec)->required();
    count->add_option("--subset", subset_spec,
                      "reflections|transpositions|double_transpositions|ab_class or labels")
        ->required();
    count->add_option("--braid", braid_text, "Signed generator list, e.g. \"1 1 1\"")->required();
    count->add_option("--strands", strands, "Strand count (default 1 + max generator)");
    count->add_option("--method", method, "trace|wirtinger")->default_val("trace");
    add_common(count, o_count);

    auto* profile = app.add_subcommand("profile", "Torus-family profile p -> [K_p,G,C]");
    profile->add_option("--group", group_spec)->required();
    profile->add_option("--subset", subset_spec)->required();
    profile->add_option("--pmax", p_max)->default_val(8);
    add_common(profile, o_profile);

    auto* star = app.add_subcommand("star-search", "Search for (**) witnesses (ab)^p a = b(ab)^p");
    star->add_option("--group", group_spec)->required();
    star->add_option("--subset", subset_spec)->required();
    star->add_option("--pmax", p_max)->default_val(8);
    add_common(star, o_star);

    auto* ftsum = app.add_subcommand("ftsum", "Alternating crossing-switch sum of an invariant");
    ftsum->add_option("--group", group_spec)->required();
    ftsum->add_option("--subset", subset_spec)->required();
    ftsum->add_option("--braid", braid_text)->required();
    ftsum->add_option("--strands", strands);
    ftsum->add_option("--positions", positions_text, "Crossing positions, e.g. \"0 1\"")
        ->required();
    ftsum->add_option("--constant", constant_value,
                      "Use the constant invariant with this value instead of [.,G,C]");
    add_common(ftsum, o_ftsum);

    auto* verify = app.add_subcommand("verify", "Check a named claim experimentally");
    verify->add_option("--claim", claim_name, "lemma2|lemma3|thm3a|thm3b|thm3c|thm3d")
        ->required();
    verify->add_option("--param", param, "n, m or p of the claim")->required();
    add_common(verify, o_verify);

    CLI11_PARSE(app, argc, argv);

    try {
        if (info->parsed()) {
            kc::GroupTable G = resolve_group(group_spec, o_info.caps);
            kc::Format f = kc::parse_format(o_info.format);
            if (f == kc::Format::Json) {
                emit(o_info, kc::group_to_json(G).dump(2) + "\n");
            } else if (f == kc::Format::Text) {
                std::ostringstream os;
                os << "order: " << G.order << '\n';
                if (!G.family.empty()) os << "family: " << G.family << ":" << G.param << '\n';
                for (const auto& [name, idx] : G.distinguished)
                    os << "generator " << name << " = " << G.labels[idx] << '\n';
                emit(o_info, os.str());
            } else {
                kc::fail("UnsupportedFormat", "group-info supports json or text");
            }
        } else if (count->parsed()) {
            kc::GroupTable G = resolve_group(group_spec, o_count.caps);
            kc::ConjSubset C = kc::resolve_subset(G, subset_spec);
            kc::BraidWord b = kc::parse_braid(braid_text, strands);
            kc::CountReport r;
            if (method == "trace")
                r = kc::count_by_trace(b, C, o_count.caps, effective_threads(o_count));
            else if (method == "wirtinger")
                r = kc::count_by_wirtinger(b, C, o_count.caps, effective_threads(o_count));
            else
                kc::fail("ConfigError", "unknown method '" + method + "'");
            emit(o_count, kc::render_count(r, kc::parse_format(o_count.format)));
        } else if (profile->parsed()) {
            kc::GroupTable G = resolve_group(group_spec, o_profile.caps);
            kc::ConjSubset C = kc::resolve_subset(G, subset_spec);
            kc::TorusProfile p =
                kc::torus_profile(C, p_max, o_profile.caps, 6, effective_threads(o_profile));
            emit(o_profile, kc::render_profile(p, kc::parse_format(o_profile.format)));
        } else if (star->parsed()) {
            kc::GroupTable G = resolve_group(group_spec, o_star.caps);
            kc::ConjSubset C = kc::resolve_subset(G, subset_spec);
            auto ws = kc::star_search(C, p_max);
            emit(o_star, kc::render_witnesses(G, ws, kc::parse_format(o_star.format)));
        } else if (ftsum->parsed()) {
            kc::GroupTable G = resolve_group(group_spec, o_ftsum.caps);
            kc::ConjSubset C = kc::resolve_subset(G, subset_spec);
            kc::BraidWord b = kc::parse_braid(braid_text, strands);
            std::vector<int> X = parse_positions(positions_text);
            kc::KnotInvariant v =
                constant_value ? kc::constant_invariant(*constant_value)
                               : kc::counting_invariant(C, o_ftsum.caps, effective_threads(o_ftsum));
            long long sum = kc::finite_type_sum(v, b, X, o_ftsum.caps);
            kc::Format f = kc::parse_format(o_ftsum.format);
            if (f == kc::Format::Json) {
                kc::json j;
                j["sum"] = sum;
                j["positions"] = X;
                emit(o_ftsum, j.dump(2) + "\n");
            } else if (f == kc::Format::Csv) {
                emit(o_ftsum, "sum\n" + std::to_string(sum) + "\n");
            } else {
                emit(o_ftsum, "finite-type sum = " + std::to_string(sum) + "\n");
            }
        } else if (verify->parsed()) {
            kc::Claim c = kc::parse_claim(claim_name);
            kc::FiniteTypeVerdict v =
                kc::verify_claim(c, param, o_verify.caps, effective_threads(o_verify));
            emit(o_verify, kc::render_verdict(v, kc::parse_format(o_verify.format)));
        }
    } catch (const kc::Error& e) {
        kc::json err;
        err["error"] = e.code();
        err["message"] = e.what();
        std::cerr << err.dump(2) << std::endl;
        return 1;
    } catch (const std::exception& e) {
        kc::json err;
        err["error"] = "Internal";
        err["message"] = e.what();
        std::cerr << err.dump(2) << std::endl;
        return 2;
    }
    return 0;
}
