// qchar: command-line front end. Exit codes: 0 ok, 1 usage or parse error,
// 2 strict-mode abort, 3 cap hit, 4 a verification failed.

#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "qchar/cache.hpp"
#include "qchar/io.hpp"

using namespace qchar;
using nlohmann::json;

namespace {

enum Exit { kOk = 0, kParse = 1, kStrict = 2, kCap = 3, kFailed = 4 };

struct Common {
    std::string type;
    int rank = 0;
    std::string matrix_file;
    std::string m;
    bool json_out = false;
    int max_v = 10000;
    std::size_t max_terms = 5'000'000;
    int threads = 1;
    std::optional<std::uint64_t> seed;
    bool no_cache = false;
    bool permissive = false;
};

void add_common(CLI::App* app, Common& c, bool with_m = true) {
    app->add_option("--type", c.type, "Cartan type, e.g. B3 (or a letter with --rank)");
    app->add_option("--rank", c.rank, "Rank when --type is a single letter");
    app->add_option("--matrix", c.matrix_file, "JSON file with a custom Cartan matrix");
    if (with_m) app->add_option("--m", c.m, "Monomial, e.g. \"1_0 2_3^-1\"");
    app->add_flag("--json", c.json_out, "JSON output");
    app->add_option("--max-v", c.max_v, "Cap on the total A-degree");
    app->add_option("--max-terms", c.max_terms, "Cap on the number of terms");
    app->add_option("--threads", c.threads, "Worker threads")->check(CLI::PositiveNumber);
    app->add_option("--seed", c.seed, "Seed for the order inside each grade");
    app->add_flag("--no-cache", c.no_cache, "Bypass the result cache");
    app->add_flag("--permissive", c.permissive, "Do not abort on unexpected dominant monomials");
}

std::string read_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::invalid_argument("cannot read " + path);
    std::stringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

CartanData resolve_cartan(const Common& c) {
    if (!c.matrix_file.empty()) {
        json j = json::parse(read_file(c.matrix_file));
        if (j.is_array()) return custom_cartan(j.get<std::vector<std::vector<int>>>());
        return io::cartan_from_json(j);
    }
    if (c.type.empty()) throw std::invalid_argument("--type or --matrix is required");
    if (c.type.size() == 1) {
        if (c.rank <= 0) throw std::invalid_argument("--rank is required with a single-letter --type");
        return build_cartan(c.type + std::to_string(c.rank));
    }
    return build_cartan(c.type);
}

FmOptions fm_options(const Common& c) {
    FmOptions o;
    o.max_v = c.max_v;
    o.max_terms = c.max_terms;
    o.threads = c.threads;
    o.order_seed = c.seed;
    o.mode = c.permissive ? FmMode::Permissive : FmMode::Strict;
    return o;
}

Monomial head_monomial(const CartanData& cd, const Common& c) {
    if (c.m.empty()) throw std::invalid_argument("--m is required");
    Monomial m = parse_monomial(c.m);
    check_nodes(cd, m);
    return m;
}

int status_exit(const QCharacter& chi) {
    switch (fm_status(chi)) {
        case FmStatus::Converged: return kOk;
        case FmStatus::StrictAbort: return kStrict;
        case FmStatus::CapHit: return kCap;
    }
    return kOk;
}

// Characters go through the cache; the request excludes the thread count,
// which never changes the result.
QCharacter cached_character(const std::string& cmd, const CartanData& cd, const Monomial& m, const Common& c) {
    const FmOptions o = fm_options(c);
    json request = {{"cmd", cmd},
                    {"cartan", io::cartan_to_json(cd)},
                    {"m", to_string(m)},
                    {"max_v", o.max_v},
                    {"max_terms", o.max_terms},
                    {"mode", c.permissive ? "permissive" : "strict"},
                    {"seed", c.seed ? json(*c.seed) : json(nullptr)}};
    std::optional<ResultCache> cache;
    if (!c.no_cache) cache.emplace(ResultCache::default_dir());
    if (cache)
        if (auto hit = cache->get(request)) return io::character_from_json(*hit);
    QCharacter chi = cmd == "standard" ? standard_qchar(cd, m, o) : fm_qchar(cd, m, o);
    if (cache) {
        try {
            cache->put(request, io::character_to_json(cd, chi));
        } catch (const std::exception& e) {
            std::cerr << "warning: cache write failed: " << e.what() << '\n';
        }
    }
    return chi;
}

int cmd_character(const std::string& cmd, const Common& c) {
    const CartanData cd = resolve_cartan(c);
    const Monomial m = head_monomial(cd, c);
    QCharacter chi = cached_character(cmd, cd, m, c);
    if (c.json_out)
        std::cout << io::character_to_json(cd, chi).dump(2) << '\n';
    else
        std::cout << io::character_text(cd, chi);
    for (const std::string& note : chi.diagnostics().notes) std::cerr << "note: " << note << '\n';
    return cmd == "standard" ? (chi.diagnostics().converged ? kOk : kCap) : status_exit(chi);
}

int cmd_weights(const Common& c) {
    const CartanData cd = resolve_cartan(c);
    const Monomial m = head_monomial(cd, c);
    QCharacter chi = cached_character("qchar", cd, m, c);
    const auto wc = weight_character(cd, chi);
    if (c.json_out) {
        json ws = json::array();
        for (const auto& [w, k] : wc) ws.push_back({{"w", w.coeffs}, {"mult", k}});
        std::cout << json{{"schema_version", io::kSchemaVersion},
                          {"cartan", io::cartan_to_json(cd)},
                          {"head", to_string(m)},
                          {"weights", ws}}
                         .dump(2)
                  << '\n';
    } else {
        for (const auto& [w, k] : wc) std::cout << to_string(w) << "  " << k << '\n';
    }
    return status_exit(chi);
}

struct CheckArgs {
    std::vector<std::string> props;
    std::string minaff;
    std::string cond = "I";
    std::string anchor;
    std::string script;
};

std::string describe(const std::string& name, const PropertyResult& p) {
    std::string s = name + ": " + std::string(to_string(p.verdict));
    if (p.verdict == Verdict::No && p.witness) {
        if (name == "thin")
            s += " (witness " + to_string(*p.witness) + " mult>=2)";
        else if (p.certificate.find("certified") != std::string::npos)
            s += " (certified, witness " + to_string(*p.witness) + ")";
        else
            s += " (witness " + to_string(*p.witness) + ")";
    } else if (!p.certificate.empty()) {
        s += " (" + p.certificate + ")";
    }
    return s;
}

int cmd_check(const Common& c, const CheckArgs& a) {
    const CartanData cd = resolve_cartan(c);
    CheckOptions opts;
    opts.fm = fm_options(c);
    std::optional<AffinizationSpec> spec;
    Monomial m;
    if (!a.minaff.empty()) {
        if (a.cond != "I" && a.cond != "II") throw std::invalid_argument("--cond must be I or II");
        AffinizationSpec s{cd, parse_weight(a.minaff, cd.rank), a.cond == "II" ? Condition::II : Condition::I, {}};
        if (!a.anchor.empty()) {
            auto colon = a.anchor.find(':');
            if (colon == std::string::npos) throw std::invalid_argument("--anchor must look like node:exponent");
            s.anchor = std::make_pair(std::stoi(a.anchor.substr(0, colon)), std::stoi(a.anchor.substr(colon + 1)));
        }
        m = affinization_monomial(s);
        spec = s;
    } else {
        m = head_monomial(cd, c);
    }
    if (!a.script.empty()) opts.script = parse_script(read_file(a.script), m);

    PropertyReport rep;
    Prediction pred;
    std::vector<std::string> disagreements;
    if (spec) {
        MinaffReport mr = minaff_report(*spec, opts);
        rep = std::move(mr.props);
        pred = mr.prediction;
        disagreements = mr.disagreements;
    } else {
        rep = check_properties(cd, m, opts);
    }

    std::vector<std::string> props = a.props;
    if (props.empty() || (props.size() == 1 && props[0] == "all")) props = {"special", "antispecial", "thin"};
    if (c.json_out) {
        json j = io::report_to_json(cd, rep);
        j["disagreements"] = disagreements;
        if (spec) j["prediction_source"] = pred.source;
        std::cout << j.dump(2) << '\n';
    } else {
        if (spec) std::cout << "head: " << to_string(m) << '\n';
        for (const std::string& p : props) {
            if (p == "special")
                std::cout << describe(p, rep.special) << '\n';
            else if (p == "antispecial")
                std::cout << describe(p, rep.antispecial) << '\n';
            else if (p == "thin")
                std::cout << describe(p, rep.thin) << '\n';
            else
                throw std::invalid_argument("unknown property '" + p + "'");
        }
        if (spec && !pred.source.empty()) std::cout << "prediction: " << pred.source << '\n';
        for (const std::string& d : disagreements) std::cout << "DISAGREES: " << d << '\n';
    }
    return disagreements.empty() ? kOk : kFailed;
}

int cmd_explore(const Common& c, const std::string& script_file) {
    const CartanData cd = resolve_cartan(c);
    const Monomial m = head_monomial(cd, c);
    ExploreResult r = script_file.empty() ? explore_auto(cd, m) : explore(cd, m, parse_script(read_file(script_file), m));
    const auto extra = r.extra_dominant(m);
    if (c.json_out) {
        json steps = json::array();
        for (const StepReport& s : r.steps)
            steps.push_back({{"m", to_string(s.m)},
                             {"node", s.node},
                             {"certified", s.certified},
                             {"blocker", s.blocker ? json(to_string(*s.blocker)) : json(nullptr)},
                             {"added", s.added}});
        json dom = json::array();
        for (const Monomial& x : extra) dom.push_back(to_string(x));
        std::cout << json{{"schema_version", io::kSchemaVersion},
                          {"cartan", io::cartan_to_json(cd)},
                          {"head", to_string(m)},
                          {"steps", steps},
                          {"certified_count", r.certified.size()},
                          {"extra_dominant", dom},
                          {"cap_hit", r.cap_hit}}
                         .dump(2)
                  << '\n';
    } else {
        if (!script_file.empty())
            for (const StepReport& s : r.steps)
                std::cout << to_string(s.m) << " ; " << s.node << "  "
                          << (s.certified ? "certified" : "blocked by " + to_string(*s.blocker)) << ", +" << s.added
                          << '\n';
        std::cout << r.certified.size() << " certified monomials\n";
        for (const Monomial& x : extra) std::cout << "dominant: " << to_string(x) << '\n';
        if (r.cap_hit) std::cout << "cap hit\n";
    }
    return r.cap_hit ? kCap : kOk;
}

int cmd_tsystem(const Common& c, int i, int k, int r) {
    const CartanData cd = resolve_cartan(c);
    IdentityReport rep = verify_tsystem(cd, i, k, r, fm_options(c));
    if (c.json_out) {
        json s = json::array();
        for (const KrSpec& w : s_term(cd, i, k, r)) s.push_back({{"node", w.node}, {"k", w.k}, {"center", w.center}});
        std::cout << json{{"schema_version", io::kSchemaVersion},
                          {"cartan", io::cartan_to_json(cd)},
                          {"i", i},
                          {"k", k},
                          {"r", r},
                          {"s_term", s},
                          {"holds", rep.holds},
                          {"terms", rep.lhs.size()},
                          {"first_difference", rep.first_diff ? json(to_string(*rep.first_diff)) : json(nullptr)}}
                         .dump(2)
                  << '\n';
    } else if (rep.holds) {
        std::cout << "OK (exact)\n";
    } else {
        std::cout << "FAIL (first difference " << to_string(*rep.first_diff) << ": lhs " << rep.lhs_coeff << ", rhs "
                  << rep.rhs_coeff << ")\n";
    }
    for (const std::string& n : rep.notes) std::cerr << "note: " << n << '\n';
    return rep.holds ? kOk : kFailed;
}

std::vector<int> parse_parts(const std::string& text) {
    std::vector<int> out;
    if (text.empty()) return out;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ',')) out.push_back(std::stoi(item));
    return out;
}

struct TableauxArgs {
    int n = 2;
    std::string outer;
    std::string inner;
    std::string shape_file;
    int r = 0;
    bool check_fm = false;
    bool print = false;
};

int cmd_tableaux(const Common& c, const TableauxArgs& a) {
    SkewShape shape = a.shape_file.empty() ? SkewShape(Partition(parse_parts(a.outer)), Partition(parse_parts(a.inner)))
                                           : io::shape_from_json(json::parse(read_file(a.shape_file)));
    const auto tabs = enumerate_tableaux(a.n, shape);
    if (a.print)
        for (const BTableau& t : tabs) std::cout << render(a.n, t) << '\n';
    QCharacter jt = jt_qchar(a.n, shape, a.r);
    if (!a.check_fm) {
        if (c.json_out) {
            json j = io::character_to_json(build_cartan("B" + std::to_string(a.n)), jt);
            j["tableaux"] = tabs.size();
            std::cout << j.dump(2) << '\n';
        } else {
            std::cout << tabs.size() << " tableaux; head " << to_string(jt.head()) << '\n';
        }
        return kOk;
    }
    const CartanData cd = build_cartan("B" + std::to_string(a.n));
    FmOptions o = fm_options(c);
    o.mode = FmMode::Permissive;
    QCharacter fm = fm_qchar(cd, jt.head(), o);
    const auto dom = fm.dominant_monomials();
    const bool head_ok = fm.diagnostics().converged && dom.size() == 1 && dom.front() == jt.head();
    const auto diff = first_difference(jt, fm);
    std::cout << tabs.size() << " tableaux; " << (head_ok ? "head matches FM" : "head does not match FM") << "; "
              << (diff ? "differ at " + to_string(*diff) : std::string("equal")) << '\n';
    return head_ok && !diff ? kOk : kFailed;
}

int cmd_identity(const Common& c, const std::string& file) {
    json j = json::parse(read_file(file));
    Common cc = c;
    if (cc.type.empty() && cc.matrix_file.empty() && j.contains("cartan")) cc.type = j.at("cartan").get<std::string>();
    const CartanData cd = resolve_cartan(cc);
    ProductIdentity id = io::identity_from_json(j);
    ProductIdentityReport rep = verify_product_identity(cd, id, fm_options(c));
    const bool lists = id.expected_dominant.empty() || rep.lists_match;
    if (c.json_out) {
        json dom = json::array();
        for (const auto& l : rep.dominant) {
            json row = json::array();
            for (const Monomial& m : l) row.push_back(to_string(m));
            dom.push_back(row);
        }
        std::cout << json{{"schema_version", io::kSchemaVersion},
                          {"cartan", io::cartan_to_json(cd)},
                          {"holds", rep.identity.holds},
                          {"first_difference",
                           rep.identity.first_diff ? json(to_string(*rep.identity.first_diff)) : json(nullptr)},
                          {"dominant", dom},
                          {"lists_match", lists},
                          {"list_mismatches", rep.list_mismatches}}
                         .dump(2)
                  << '\n';
    } else {
        std::string first = rep.identity.holds ? "OK" : "FAIL (first difference " +
                                                             to_string(*rep.identity.first_diff) + ": lhs " +
                                                             std::to_string(rep.identity.lhs_coeff) + ", rhs " +
                                                             std::to_string(rep.identity.rhs_coeff) + ")";
        std::string second = id.expected_dominant.empty() ? "no expected lists"
                             : rep.lists_match            ? "dominant lists match"
                                                          : "dominant lists differ";
        std::cout << first << "; " << second << '\n';
        for (const std::string& s : rep.list_mismatches) std::cout << "  " << s << '\n';
    }
    return rep.identity.holds && lists ? kOk : kFailed;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Exact q-characters of quantum loop algebra modules"};
    app.require_subcommand(1);

    Common c;
    auto* qchar_cmd = app.add_subcommand("qchar", "Frenkel-Mukhin character of L(m)");
    add_common(qchar_cmd, c);
    auto* standard_cmd = app.add_subcommand("standard", "Character of the standard module M(m)");
    add_common(standard_cmd, c);
    auto* weights_cmd = app.add_subcommand("weights", "Weight multiplicities of L(m)");
    add_common(weights_cmd, c);

    CheckArgs ca;
    auto* check_cmd = app.add_subcommand("check", "Special, antispecial and thin properties");
    add_common(check_cmd, c);
    check_cmd->add_option("--prop", ca.props, "special, antispecial, thin or all (repeatable)");
    check_cmd->add_option("--minaff", ca.minaff, "Minimal affinization of this dominant weight, e.g. 1,1");
    check_cmd->add_option("--cond", ca.cond, "I or II");
    check_cmd->add_option("--anchor", ca.anchor, "node:exponent fixing one spectral parameter");
    check_cmd->add_option("--script", ca.script, "Guided chain file");

    std::string explore_script;
    auto* explore_cmd = app.add_subcommand("explore", "Certify monomials by chaining L_j expansions");
    add_common(explore_cmd, c);
    explore_cmd->add_option("--script", explore_script, "Guided chain file (default: automatic search)");

    int ti = 1, tk = 1, tr = 0;
    auto* tsystem_cmd = app.add_subcommand("tsystem", "Verify one T-system relation exactly");
    add_common(tsystem_cmd, c, false);
    tsystem_cmd->add_option("--i", ti, "Node")->required();
    tsystem_cmd->add_option("--k", tk, "Length")->required();
    tsystem_cmd->add_option("--r", tr, "Center exponent of the first factor");

    TableauxArgs ta;
    auto* tableaux_cmd = app.add_subcommand("tableaux", "Type B tableaux character of a skew shape");
    add_common(tableaux_cmd, c, false);
    tableaux_cmd->add_option("--n", ta.n, "Rank of B_n")->check(CLI::Range(2, 64));
    tableaux_cmd->add_option("--outer", ta.outer, "Outer partition, e.g. 2,1");
    tableaux_cmd->add_option("--inner", ta.inner, "Inner partition");
    tableaux_cmd->add_option("--shape", ta.shape_file, "JSON file {\"outer\": [..], \"inner\": [..]}");
    tableaux_cmd->add_option("--r", ta.r, "Spectral exponent");
    tableaux_cmd->add_flag("--check-fm", ta.check_fm, "Compare with the FM character of the head");
    tableaux_cmd->add_flag("--print", ta.print, "Print every tableau");

    std::string identity_file;
    auto* identity_cmd = app.add_subcommand("identity", "Verify a product-of-characters identity");
    add_common(identity_cmd, c, false);
    identity_cmd->add_option("--file", identity_file, "Identity JSON file")->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? kOk : kParse;
    }

    try {
        if (*qchar_cmd) return cmd_character("qchar", c);
        if (*standard_cmd) return cmd_character("standard", c);
        if (*weights_cmd) return cmd_weights(c);
        if (*check_cmd) return cmd_check(c, ca);
        if (*explore_cmd) return cmd_explore(c, explore_script);
        if (*tsystem_cmd) return cmd_tsystem(c, ti, tk, tr);
        if (*tableaux_cmd) {
            if (ta.outer.empty() && ta.shape_file.empty()) throw std::invalid_argument("--outer or --shape is required");
            return cmd_tableaux(c, ta);
        }
        if (*identity_cmd) return cmd_identity(c, identity_file);
    } catch (const ParseError& e) {
        std::cerr << "parse error: " << e.what() << '\n';
        if (!c.m.empty() && e.position <= c.m.size()) std::cerr << "  " << c.m << "\n  " << std::string(e.position, ' ') << "^\n";
        return kParse;
    } catch (const json::exception& e) {
        std::cerr << "json error: " << e.what() << '\n';
        return kParse;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kParse;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kFailed;
    }
    return kOk;
}
