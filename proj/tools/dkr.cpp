// dkr: enumerate, biject and verify from the command line. Everything is
// JSON on stdout. Exit codes: 0 pass, 1 verification failure, 2 usage error.
#include <CLI11.hpp>
#include <json.hpp>

#include <algorithm>
#include <chrono>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>

#include "dkr/bijection.hpp"
#include "dkr/energy.hpp"
#include "dkr/fermionic.hpp"
#include "dkr/rc.hpp"
#include "dkr/verify.hpp"

using json = nlohmann::json;
using namespace dkr;

namespace {

struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Factor lists are written left to right, B_L first, the same order as the
// tensor product is printed.
struct RunConfig {
    int n = 4;
    std::string B;
    std::string lambda;
    std::string cache_dir;
    unsigned threads = 0;
    int max_factors = 3;

    void validate() const {
        if (n < 4) throw UsageError("--n must be at least 4");
    }
    TensorSpec spec() const {
        if (B.empty()) throw UsageError("--B is required");
        try {
            return parse_spec(B, n);
        } catch (const std::exception& e) {
            throw UsageError(e.what());
        }
    }
    Weight weight() const {
        if (lambda.empty()) throw UsageError("--lambda is required");
        std::vector<int> c;
        std::stringstream ss(lambda);
        for (std::string t; std::getline(ss, t, ',');) {
            try {
                c.push_back(std::stoi(t));
            } catch (const std::exception&) {
                throw UsageError("bad --lambda entry '" + t + "'");
            }
        }
        if (static_cast<int>(c.size()) != n) throw UsageError("--lambda needs n comma-separated coefficients");
        for (int x : c)
            if (x < 0) throw UsageError("--lambda must be dominant");
        return weight_from_lambda(n, c);
    }
    void apply_cache() const {
        if (!cache_dir.empty()) setenv("DKR_CACHE_DIR", cache_dir.c_str(), 1);
    }
};

json column_json(const Column& c) { return c.m; }

json element_json(int n, Label lab, const Column& c) {
    return {{"label", lab.str(n)}, {"column", column_json(c)}, {"text", c.str()}};
}

json path_json(int n, const TensorElement& p) {
    json labels = json::array(), cols = json::array();
    for (int j = 0; j < p.size(); ++j) {
        labels.push_back(p.labels[j].str(n));
        cols.push_back(column_json(p.cols[j]));
    }
    return {{"n", n}, {"B", labels}, {"factors", cols}, {"text", p.str()}, {"weight", path_weight(n, p).lambda()}};
}

json rc_json(const RiggedConfig& rc) {
    json labels = json::array(), nu = json::array();
    for (Label l : rc.B) labels.push_back(l.str(rc.n));
    for (int a = 1; a <= rc.n; ++a) {
        json rows = json::array();
        for (const Row& r : rc.part(a)) rows.push_back({r.len, r.rig});
        nu.push_back(rows);
    }
    return {{"n", rc.n}, {"lambda", rc.lambda.lambda()}, {"B", labels}, {"nu", nu}, {"cc", cc(rc)}};
}

json poly_json(const QPolynomial& p) {
    json c = json::object();
    for (auto [e, v] : p.coeffs) c[std::to_string(e)] = v;
    return {{"coeffs", c}};
}

json len_json(const std::vector<int>& v, int from, int to) {
    json out = json::array();
    for (int a = from; a <= to && a < static_cast<int>(v.size()); ++a) out.push_back(v[a] == kInf ? json(nullptr) : json(v[a]));
    return out;
}

json delta_json(int n, const DeltaResult& d) {
    return {{"letter", letter_str(d.letter)},
            {"ell", len_json(d.trace.ell, 1, n)},
            {"ellbar", len_json(d.trace.ellbar, 1, n - 2)},
            {"rc", rc_json(d.rc)}};
}

json read_input(const std::string& file) {
    try {
        if (file.empty() || file == "-") return json::parse(std::cin);
        std::ifstream in(file);
        if (!in) throw UsageError("cannot open " + file);
        return json::parse(in);
    } catch (const json::exception& e) {
        throw UsageError(std::string("input is not JSON: ") + e.what());
    }
}

RiggedConfig parse_rc(const json& j) {
    try {
        const int n = j.at("n").get<int>();
        check_rank(n);
        TensorSpec B;
        for (const auto& s : j.at("B")) B.push_back(Label::parse(s.get<std::string>(), n));
        RiggedConfig rc = RiggedConfig::empty(n, weight_from_lambda(n, j.at("lambda").get<std::vector<int>>()), B);
        const auto& nu = j.at("nu");
        if (static_cast<int>(nu.size()) != n) throw UsageError("nu needs n rigged partitions");
        for (int a = 1; a <= n; ++a)
            for (const auto& r : nu[a - 1]) rc.part(a).push_back({r.at(0).get<int>(), r.at(1).get<int>()});
        rc.normalize();
        if (!is_valid_rc(rc)) throw UsageError("not a valid rigged configuration");
        return rc;
    } catch (const json::exception& e) {
        throw UsageError(std::string("bad rigged configuration: ") + e.what());
    } catch (const std::invalid_argument& e) {
        throw UsageError(e.what());
    }
}

TensorElement parse_path(const json& j) {
    try {
        const int n = j.at("n").get<int>();
        check_rank(n);
        TensorElement p;
        for (const auto& s : j.at("B")) p.labels.push_back(Label::parse(s.get<std::string>(), n));
        for (const auto& c : j.at("factors")) p.cols.push_back(Column(c.get<std::vector<int>>()));
        if (p.labels.size() != p.cols.size()) throw UsageError("B and factors differ in length");
        for (int i = 0; i < p.size(); ++i) {
            for (Letter v : p.cols[i].m) check_letter(n, v);
            if (!in_label(p.cols[i], n, p.labels[i]))
                throw UsageError(p.cols[i].str() + " is not an element of " + p.labels[i].str(n));
        }
        if (!is_classically_highest(Tensor::from(n, p))) throw UsageError("path is not classically highest");
        return p;
    } catch (const json::exception& e) {
        throw UsageError(std::string("bad path: ") + e.what());
    } catch (const std::invalid_argument& e) {
        throw UsageError(e.what());
    }
}

// Prints one JSON document per line, sorted by serialization.
void stream(std::vector<json> items) {
    std::vector<std::string> lines;
    for (const json& j : items) lines.push_back(j.dump());
    std::sort(lines.begin(), lines.end());
    for (const auto& l : lines) std::cout << l << "\n";
}

json check_json(const Check& c) {
    return {{"name", c.name},         {"cases", c.cases},     {"failures", c.failures}, {"gating", c.gating},
            {"passed", c.passed()}, {"samples", c.samples}, {"notes", c.notes}};
}

int report(const std::string& suite, const RunConfig& cfg, const Suite& s, double secs, const std::string& csv, json extra) {
    json checks = json::array();
    for (const Check& c : s.checks) checks.push_back(check_json(c));
    json out = {{"suite", suite}, {"n", cfg.n}, {"passed", s.ok()}, {"seconds", secs}, {"checks", checks}};
    if (!extra.is_null()) out["cell"] = std::move(extra);
    std::cout << out.dump(2) << "\n";
    if (!csv.empty()) {
        std::ofstream f(csv);
        f << "suite,check,cases,failures,gating,passed\n";
        for (const Check& c : s.checks)
            f << suite << ",\"" << c.name << "\"," << c.cases << "," << c.failures << "," << c.gating << "," << c.passed() << "\n";
    }
    return s.ok() ? 0 : 1;
}

int cmd_enumerate(const std::string& kind, const RunConfig& cfg, const std::string& label) {
    cfg.validate();
    std::vector<json> items;
    if (kind == "crystal") {
        if (label.empty()) throw UsageError("--label is required");
        Label lab;
        try {
            lab = Label::parse(label, cfg.n);
        } catch (const std::exception& e) {
            throw UsageError(e.what());
        }
        for (const Column& c : get_crystal(cfg.n, lab).elems) items.push_back(element_json(cfg.n, lab, c));
    } else if (kind == "rc") {
        for (const RiggedConfig& rc : enumerate_rc(cfg.n, cfg.weight(), cfg.spec())) items.push_back(rc_json(rc));
    } else {
        for (const TensorElement& p : enumerate_paths(cfg.n, cfg.weight(), cfg.spec())) {
            json j = path_json(cfg.n, p);
            j["energy"] = tensor_energy(cfg.n, p).value;
            items.push_back(j);
        }
    }
    stream(std::move(items));
    return 0;
}

int cmd_biject(const std::string& dir, const std::string& input, const std::string& variant, bool trace) {
    const json in = read_input(input);
    json out;
    if (dir == "forward") {
        const RiggedConfig rc = parse_rc(in);
        const int n = rc.n;
        if (variant == "tilde") {
            TensorElement p = phi_tilde(rc);
            out = {{"path", path_json(n, p)}, {"cc", cc(rc)}, {"energy", tensor_energy(n, p).value}};
        } else {
            std::vector<DeltaResult> steps;
            TensorElement p = phi_traced(rc, trace ? &steps : nullptr);
            out = {{"path", path_json(n, p)}, {"cc", cc(rc)}};
            if (trace) {
                json t = json::array();
                for (const DeltaResult& d : steps) t.push_back(delta_json(n, d));
                out["trace"] = t;
            }
        }
    } else {
        const TensorElement p = parse_path(in);
        const int n = in.at("n").get<int>();
        if (variant == "tilde") throw UsageError("--variant tilde is forward only");
        RiggedConfig rc;
        try {
            rc = phi_inv(n, p);
        } catch (const std::exception& e) {
            throw UsageError(std::string("no preimage: ") + e.what());
        }
        out = {{"rc", rc_json(rc)}};
    }
    std::cout << out.dump(2) << "\n";
    return 0;
}

int cmd_verify(const std::string& suite, const RunConfig& cfg, const std::string& csv) {
    cfg.validate();
    cfg.apply_cache();
    const auto t0 = std::chrono::steady_clock::now();
    const bool single = !cfg.B.empty() || !cfg.lambda.empty();
    std::vector<Cell> cells;
    json cell;
    if (single) {
        Cell c{cfg.n, cfg.spec(), cfg.weight()};
        cells.push_back(c);
        QPolynomial x = x_sum(c.n, c.lambda, c.B), m = m_sum(c.n, c.lambda, c.B);
        cell = {{"B", cfg.B}, {"lambda", c.lambda.lambda()}, {"x", poly_json(x)}, {"m", poly_json(m)}};
    } else if (suite != "rmatrix-oracle") {
        if (cfg.max_factors < 1) throw UsageError("--max-factors must be positive");
        cells = sweep_cells(cfg.n, cfg.max_factors);
    }

    Suite s;
    // "all" is every property suite; the printed-table oracle only runs when asked for.
    auto want = [&](const char* name) { return suite == "all" || suite == name; };
    if (want("bijection")) s.merge(check_bijection(cells, cfg.threads));
    if (want("stat")) {
        if (single)
            s.checks.push_back(verify_stat(cfg.n, cells[0].lambda, cells[0].B));
        else
            s.merge(check_stat(cells, cfg.threads));
    }
    if (want("xm")) s.merge(check_xm(cells, cfg.threads));
    if (want("lemmas")) {
        s.merge(check_lemmas(cells, cfg.threads));
        s.merge(check_corresp(cells, cfg.threads));
        s.merge(check_emb(cells, cfg.threads));
        if (!single) s.merge(check_hat_lemmas(cfg.n, cfg.max_factors - 1));
    }
    if (suite == "rmatrix-oracle") s.merge(check_rtables(cfg.n));
    if (suite == "all") {
        s.checks.push_back(check_affine_sigma(cfg.n));
        s.checks.push_back(check_hat_isos(cfg.n));
        s.merge(check_fill_drop());
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    return report(suite, cfg, s, secs, csv, cell);
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Type D_n^(1) KR crystals, rigged configurations and the bijection between them"};
    app.require_subcommand(1);
    RunConfig cfg;
    if (const char* d = std::getenv("DKR_CACHE_DIR")) cfg.cache_dir = d;

    auto add_common = [&](CLI::App* c) {
        c->add_option("--n", cfg.n, "rank of D_n (n >= 4)");
        c->add_option("--B", cfg.B, "factors B_L,...,B_1, e.g. KR:1,KR:2,HatNm1");
        c->add_option("--lambda", cfg.lambda, "Lambda coefficients, e.g. 0,1,0,0");
        c->add_option("--cache-dir", cfg.cache_dir, "R-matrix cache directory (default $DKR_CACHE_DIR)");
    };

    std::string kind, label;
    auto* en = app.add_subcommand("enumerate", "stream crystal elements, rigged configurations or paths");
    en->add_option("kind", kind)->required()->check(CLI::IsMember({"crystal", "rc", "paths"}));
    en->add_option("--label", label, "crystal label, e.g. KR:2");
    add_common(en);

    std::string dir, input, variant = "plain";
    bool trace = false;
    auto* bj = app.add_subcommand("biject", "Phi (forward) or its inverse on one JSON input");
    bj->add_option("direction", dir)->required()->check(CLI::IsMember({"forward", "inverse"}));
    bj->add_option("--input", input, "JSON file, - for stdin")->default_val("-");
    bj->add_option("--variant", variant)->check(CLI::IsMember({"plain", "tilde"}));
    bj->add_flag("--trace", trace, "include every delta step");

    std::string suite, csv;
    auto* vf = app.add_subcommand("verify", "run a verification suite; exit 0 iff every gating check passes");
    vf->add_option("suite", suite)->required()->check(CLI::IsMember({"bijection", "stat", "xm", "lemmas", "rmatrix-oracle", "all"}));
    vf->add_option("--max-factors", cfg.max_factors, "largest number of factors in the sweep");
    vf->add_option("--threads", cfg.threads, "worker threads, 0 = hardware");
    vf->add_option("--csv", csv, "also write the check table as CSV");
    add_common(vf);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int rc = app.exit(e);
        return rc == 0 ? 0 : 2;
    }

    try {
        if (*en) return cmd_enumerate(kind, cfg, label);
        if (*bj) return cmd_biject(dir, input, variant, trace);
        return cmd_verify(suite, cfg, csv);
    } catch (const UsageError& e) {
        std::cout << json{{"error", e.what()}}.dump() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cout << json{{"error", e.what()}}.dump() << "\n";
        return 2;
    }
}
