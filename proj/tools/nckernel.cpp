// Batch command-line front end: every engine capability, JSON on stdout.
// Exit codes: 0 success, 1 domain error, 2 parse error.

#include <CLI11.hpp>
#include <functional>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>

#include "nckernel/checks.hpp"
#include "nckernel/json_io.hpp"

using namespace nck;

namespace {

int resolve_nmax(std::optional<int> flag_value, int fallback) {
    if (flag_value) return *flag_value;
    if (const char* env = std::getenv("NCKERNEL_NMAX")) {
        int v = std::atoi(env);
        if (v >= 1) return v;
    }
    return fallback;
}

OJson read_json(const std::string& path) {
    std::string text;
    if (path == "-") {
        std::ostringstream ss;
        ss << std::cin.rdbuf();
        text = ss.str();
    } else {
        std::ifstream in(path);
        if (!in) throw std::domain_error("cannot open " + path);
        std::ostringstream ss;
        ss << in.rdbuf();
        text = ss.str();
    }
    try {
        return OJson::parse(text);
    } catch (const nlohmann::json::parse_error& e) {
        throw ParseError(std::string("JSON: ") + e.what(), e.byte);
    }
}

void emit(const OJson& j) { std::cout << j.dump(2) << "\n"; }

// Scalar parameter text: a rational literal, or a variable name that turns
// the computation symbolic over Q[name].
struct ParamValue {
    bool symbolic;
    Rational rat;
    std::string var;
};

ParamValue parse_param(const std::string& text) {
    if (text.empty()) throw ParseError("empty parameter value", 0);
    if (text[0] == '-' || (text[0] >= '0' && text[0] <= '9'))
        return {false, Rational::from_string(text), ""};
    return {true, Rational(0), text};
}

// ---- fn subcommands --------------------------------------------------------

template <class S>
OJson fn_convolve_typed(const OJson& a, const OJson& b, const S& proto, const std::string& ring) {
    return semimult_to_json(convolve(semimult_from_json(a, proto), semimult_from_json(b, proto)),
                            ring);
}

int cmd_fn_convolve(const std::string& pa, const std::string& pb) {
    OJson a = read_json(pa), b = read_json(pb);
    std::string ring = json_ring_of(a);
    if (ring != json_ring_of(b)) throw std::domain_error("fn convolve: ring mismatch");
    if (ring_is_rational(ring)) {
        emit(fn_convolve_typed(a, b, Rational(1), ring));
    } else {
        auto rp = ring_from_name(ring);
        emit(fn_convolve_typed(a, b, MPoly::constant(rp, Rational(1)), ring));
    }
    return 0;
}

int cmd_fn_inverse(const std::string& pa) {
    OJson a = read_json(pa);
    std::string ring = json_ring_of(a);
    if (ring_is_rational(ring)) {
        emit(semimult_to_json(inverse(semimult_from_json(a, Rational(1))), ring));
    } else {
        auto rp = ring_from_name(ring);
        MPoly proto = MPoly::constant(rp, Rational(1));
        emit(semimult_to_json(inverse(semimult_from_json(a, proto)), ring));
    }
    return 0;
}

int cmd_fn_named(const std::string& name, const std::vector<std::string>& params,
                 std::optional<int> nmax_flag) {
    std::optional<ParamValue> q;
    for (const std::string& p : params) {
        size_t eq = p.find('=');
        if (eq == std::string::npos) throw ParseError("--param expects key=value", 0);
        q = parse_param(p.substr(eq + 1));
    }
    const bool needs_param = (name == "bc-m-t" || name == "u");
    if (needs_param && !q) throw std::domain_error("fn named " + name + ": missing --param");
    const bool symbolic = q && q->symbolic;
    int n_max = resolve_nmax(nmax_flag, symbolic ? 6 : 8);

    auto build_rational = [&](const Rational& value) -> OJson {
        Rational proto(1);
        SemiMultFn<Rational> g = [&] {
            if (name == "e") return unit_e(n_max, proto);
            if (name == "fc-m") return g_fc_m(n_max, proto);
            if (name == "bc-m") return g_bc_m(n_max, proto);
            if (name == "mc-m") return g_mc_m(n_max, proto);
            if (name == "bc-m-t") return g_bc_m_t(n_max, value);
            if (name == "u") return u_fn(n_max, value);
            throw std::domain_error("unknown function name '" + name + "'");
        }();
        return semimult_to_json(g, "Q");
    };
    auto build_symbolic = [&](const std::string& var) -> OJson {
        auto rp = MPolyRing::make({var});
        MPoly value = MPoly::variable(rp, var);
        SemiMultFn<MPoly> g = [&] {
            if (name == "bc-m-t") return g_bc_m_t(n_max, value);
            if (name == "u") return u_fn(n_max, value);
            throw std::domain_error("function '" + name + "' takes no symbolic parameter");
        }();
        return semimult_to_json(g, ring_name(rp));
    };

    emit(symbolic ? build_symbolic(q->var) : build_rational(q ? q->rat : Rational(0)));
    return 0;
}

// ---- seq subcommands ---------------------------------------------------------

// moment <-> cumulant brands; "moment" is the neutral endpoint
template <class S>
Brand<S> brand_from_text(const std::string& text, const S& proto, bool& is_moment) {
    is_moment = false;
    if (text == "moment") {
        is_moment = true;
        return Brand<S>::free();  // placeholder, unused
    }
    if (text == "free") return Brand<S>::free();
    if (text == "boolean") return Brand<S>::boolean();
    if (text == "monotone") return Brand<S>::monotone();
    if (text.rfind("tboolean(", 0) == 0 && text.back() == ')') {
        std::string inner = text.substr(9, text.size() - 10);
        ParamValue v = parse_param(inner);
        if (!v.symbolic)
            return Brand<S>::t_boolean(ScalarTraits<S>::from_rational_like(proto, v.rat));
        if constexpr (std::is_same_v<S, MPoly>) {
            return Brand<S>::t_boolean(MPoly::variable(proto.ring(), v.var));
        } else {
            throw std::domain_error("symbolic tboolean parameter needs a polynomial-ring input");
        }
    }
    throw ParseError("unknown brand '" + text + "'", 0);
}

template <class S>
OJson seq_transform_typed(const OJson& mj, const std::string& ring, const S& proto,
                          const std::string& from, const std::string& to) {
    auto m = momentseq_from_json(mj, proto);
    bool from_moment = false, to_moment = false;
    Brand<S> bfrom = brand_from_text(from, proto, from_moment);
    Brand<S> bto = brand_from_text(to, proto, to_moment);
    MomentSeq<S> out = [&] {
        if (from_moment && to_moment) return m;
        if (from_moment) return moments_to_cumulants(m, bto);
        if (to_moment) return cumulants_to_moments(m, bfrom);
        return transition(m, bfrom, bto);
    }();
    return momentseq_to_json(out, ring);
}

int cmd_seq_transform(const std::string& path, const std::string& from, const std::string& to) {
    OJson mj = read_json(path);
    std::string ring = json_ring_of(mj);
    if (ring_is_rational(ring)) {
        emit(seq_transform_typed(mj, ring, Rational(1), from, to));
    } else {
        auto rp = ring_from_name(ring);
        emit(seq_transform_typed(mj, ring, MPoly::constant(rp, Rational(1)), from, to));
    }
    return 0;
}

int cmd_seq_act(const std::string& mpath, const std::string& fpath) {
    OJson mj = read_json(mpath), fj = read_json(fpath);
    std::string ring = json_ring_of(mj);
    if (ring != json_ring_of(fj)) throw std::domain_error("seq act: ring mismatch");
    if (ring_is_rational(ring)) {
        auto m = momentseq_from_json(mj, Rational(1));
        auto g = semimult_from_json(fj, Rational(1));
        emit(momentseq_to_json(act(m, g), ring));
    } else {
        auto rp = ring_from_name(ring);
        MPoly proto = MPoly::constant(rp, Rational(1));
        auto m = momentseq_from_json(mj, proto);
        auto g = semimult_from_json(fj, proto);
        emit(momentseq_to_json(act(m, g), ring));
    }
    return 0;
}

int cmd_seq_freemul(const std::string& xpath, const std::string& ypath) {
    OJson xj = read_json(xpath), yj = read_json(ypath);
    std::string ring = json_ring_of(xj);
    if (ring != json_ring_of(yj)) throw std::domain_error("seq freemul: ring mismatch");
    if (ring_is_rational(ring)) {
        emit(momentseq_to_json(free_multiply(momentseq_from_json(xj, Rational(1)),
                                             momentseq_from_json(yj, Rational(1))),
                               ring));
    } else {
        auto rp = ring_from_name(ring);
        MPoly proto = MPoly::constant(rp, Rational(1));
        emit(momentseq_to_json(
            free_multiply(momentseq_from_json(xj, proto), momentseq_from_json(yj, proto)), ring));
    }
    return 0;
}

// ---- the rest -----------------------------------------------------------------

int cmd_nc_enumerate(int n, const std::string& order) {
    const auto& parts = enumerate_nc(n);
    OJson j;
    j["n"] = n;
    j["count"] = parts.size();
    OJson list = OJson::array();
    for (const Partition& p : parts) list.push_back(p.to_string());
    j["partitions"] = std::move(list);
    if (!order.empty()) {
        auto rel = [&](const Partition& a, const Partition& b) {
            if (order == "leq") return leq(a, b);
            if (order == "ll") return ll(a, b);
            if (order == "sq") return sqsubseteq(a, b);
            throw ParseError("unknown order '" + order + "'", 0);
        };
        j["order"] = order;
        OJson pairs = OJson::array();
        for (size_t i = 0; i < parts.size(); ++i)
            for (size_t k = 0; k < parts.size(); ++k)
                if (i != k && rel(parts[i], parts[k])) pairs.push_back({i, k});
        j["pairs"] = std::move(pairs);
    }
    emit(j);
    return 0;
}

int cmd_nc_kreweras(const std::string& text) {
    Partition p = Partition::parse(text);
    OJson j;
    j["input"] = p.to_string();
    j["kreweras"] = kreweras(p).to_string();
    emit(j);
    return 0;
}

int cmd_appendix(int n) {
    MPoly d = monotone_discrepancy(n);
    OJson j;
    j["n"] = n;
    j["ring"] = ring_name(monotone_discrepancy_ring(n));
    j["poly"] = d.to_string();
    emit(j);
    return 0;
}

int cmd_hopf_antipode(const std::string& text, const std::string& method) {
    Partition pi = Partition::parse(text);
    AntipodeMethod m;
    if (method == "bogoliubov") m = AntipodeMethod::BogoliubovLeft;
    else if (method == "bogoliubov-right") m = AntipodeMethod::BogoliubovRight;
    else if (method == "chains") m = AntipodeMethod::Chains;
    else if (method == "efficient") m = AntipodeMethod::EfficientChains;
    else throw ParseError("unknown method '" + method + "'", 0);
    emit(antipode_to_json(pi, method, antipode_generator(pi, m)));
    return 0;
}

int cmd_hopf_tn(int limit) {
    OJson j = OJson::array();
    for (long long t : count_efficient_chains_0n(limit)) j.push_back(t);
    emit(j);
    return 0;
}

int cmd_check(const std::string& suite, std::optional<int> nmax_flag) {
    CheckConfig cfg;
    if (nmax_flag || std::getenv("NCKERNEL_NMAX")) {
        int nm = resolve_nmax(nmax_flag, 6);
        cfg.lattice_kr_cap = nm;
        cfg.group_nmax = std::min(nm, 6);
        cfg.counting_n = nm;
        cfg.coset_nmax = nm;
        cfg.normalizer_nmax = nm;
        cfg.tboolean_nmax = nm;
        cfg.hopf_nmax = nm;
        cfg.morphisms_nmax = std::min(nm, 6);
        cfg.transitions_nmax = nm;
    }
    std::vector<int> ids;
    if (suite == "all") ids = {1, 2, 3, 4, 5, 6, 7, 8, 9, 10, 11};
    else if (suite == "lattice") ids = {1, 3};
    else if (suite == "group") ids = {2};
    else if (suite == "coset") ids = {4};
    else if (suite == "normalizer") ids = {5};
    else if (suite == "tboolean") ids = {6};
    else if (suite == "appendix") ids = {7};
    else if (suite == "hopf") ids = {8};
    else if (suite == "tn") ids = {9};
    else if (suite == "morphisms") ids = {10};
    else if (suite == "transitions") ids = {11};
    else throw ParseError("unknown suite '" + suite + "'", 0);

    for (int id : ids) {
        CheckResult r = run_check(id, cfg);
        std::cout << (r.pass ? "PASS " : "FAIL ") << r.name;
        if (!r.pass) {
            std::cout << " -- " << r.detail << "\n";
            return 1;
        }
        std::cout << "\n";
    }
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact convolution kernels on non-crossing partitions"};
    app.require_subcommand(1);

    std::optional<int> nmax_flag;
    app.add_option("--nmax", nmax_flag, "degree cap (default 6 symbolic, 8 numeric)");

    auto* nc = app.add_subcommand("nc", "lattice queries");
    nc->require_subcommand(1);
    auto* nc_enum = nc->add_subcommand("enumerate", "list NC(n)");
    int enum_n = 0;
    std::string enum_order;
    nc_enum->add_option("-n", enum_n, "ground-set size")->required();
    nc_enum->add_option("--order", enum_order, "also emit relation pairs: leq|ll|sq");
    auto* nc_kr = nc->add_subcommand("kreweras", "Kreweras complement of a partition");
    std::string kr_text;
    nc_kr->add_option("partition", kr_text, "partition text, e.g. {1,2,5}{3,4}")->required();

    auto* fn = app.add_subcommand("fn", "semi-multiplicative functions");
    fn->require_subcommand(1);
    auto* fn_conv = fn->add_subcommand("convolve", "convolution A * B");
    std::string fn_a, fn_b;
    fn_conv->add_option("A", fn_a)->required();
    fn_conv->add_option("B", fn_b)->required();
    auto* fn_inv = fn->add_subcommand("inverse", "convolution inverse");
    std::string fn_in;
    fn_inv->add_option("A", fn_in)->required();
    auto* fn_named_cmd = fn->add_subcommand("named", "named element: e|fc-m|bc-m|bc-m-t|mc-m|u");
    std::string named_name;
    std::vector<std::string> named_params;
    fn_named_cmd->add_option("name", named_name)->required();
    fn_named_cmd->add_option("--param", named_params, "parameter, e.g. q=1/2 or t=t (symbolic)");

    auto* seq = app.add_subcommand("seq", "moment/cumulant sequences");
    seq->require_subcommand(1);
    auto* seq_act_cmd = seq->add_subcommand("act", "right action of a function on a sequence");
    std::string act_m, act_f;
    seq_act_cmd->add_option("M", act_m)->required();
    seq_act_cmd->add_option("F", act_f)->required();
    auto* seq_tr = seq->add_subcommand("transform", "brand-to-brand transition");
    std::string tr_from, tr_to, tr_m;
    seq_tr->add_option("--from", tr_from, "moment|free|boolean|monotone|tboolean(v)")->required();
    seq_tr->add_option("--to", tr_to, "moment|free|boolean|monotone|tboolean(v)")->required();
    seq_tr->add_option("M", tr_m)->required();
    auto* seq_fm = seq->add_subcommand("freemul", "free multiplicative convolution");
    std::string fm_x, fm_y;
    seq_fm->add_option("X", fm_x)->required();
    seq_fm->add_option("Y", fm_y)->required();

    auto* ap = app.add_subcommand("appendix", "monotone discrepancy polynomial");
    int ap_n = 0;
    ap->add_option("--n", ap_n, "degree")->required();

    auto* hopf = app.add_subcommand("hopf", "Hopf algebra computations");
    hopf->require_subcommand(1);
    auto* ha = hopf->add_subcommand("antipode", "antipode of a generator");
    std::string ha_pi, ha_method = "bogoliubov";
    ha->add_option("partition", ha_pi)->required();
    ha->add_option("--method", ha_method, "bogoliubov|bogoliubov-right|chains|efficient");
    auto* ht = hopf->add_subcommand("tn", "efficient-chain counts t_1..t_limit");
    int ht_limit = 0;
    ht->add_option("--limit", ht_limit)->required();

    auto* ck = app.add_subcommand("check", "property suites");
    std::string ck_suite = "all";
    ck->add_option("--suite", ck_suite,
                   "all|lattice|group|coset|normalizer|tboolean|appendix|hopf|tn|morphisms|"
                   "transitions");

    // let the global --nmax appear after any subcommand
    std::function<void(CLI::App*)> enable_fallthrough = [&](CLI::App* a) {
        a->fallthrough();
        for (CLI::App* sub : a->get_subcommands({})) enable_fallthrough(sub);
    };
    for (CLI::App* sub : app.get_subcommands({})) enable_fallthrough(sub);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    try {
        if (*nc_enum) return cmd_nc_enumerate(enum_n, enum_order);
        if (*nc_kr) return cmd_nc_kreweras(kr_text);
        if (*fn_conv) return cmd_fn_convolve(fn_a, fn_b);
        if (*fn_inv) return cmd_fn_inverse(fn_in);
        if (*fn_named_cmd) return cmd_fn_named(named_name, named_params, nmax_flag);
        if (*seq_act_cmd) return cmd_seq_act(act_m, act_f);
        if (*seq_tr) return cmd_seq_transform(tr_m, tr_from, tr_to);
        if (*seq_fm) return cmd_seq_freemul(fm_x, fm_y);
        if (*ap) return cmd_appendix(ap_n);
        if (*ha) return cmd_hopf_antipode(ha_pi, ha_method);
        if (*ht) return cmd_hopf_tn(ht_limit);
        if (*ck) return cmd_check(ck_suite, nmax_flag);
        std::cerr << "no subcommand\n";
        return 2;
    } catch (const ParseError& e) {
        std::cerr << "parse error: " << e.what() << "\n";
        return 2;
    } catch (const std::invalid_argument& e) {
        std::cerr << "parse error: " << e.what() << "\n";
        return 2;
    } catch (const std::domain_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    } catch (const std::exception& e) {
        std::cerr << "internal error: " << e.what() << "\n";
        return 1;
    }
}
