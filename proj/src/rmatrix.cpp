#include "dkr/rmatrix.hpp"

#include <cstdlib>
#include <filesystem>
#include <limits>
#include <tuple>
#include <fstream>
#include <map>
#include <memory>
#include <mutex>
#include <queue>
#include <stdexcept>

#include <json.hpp>

namespace dkr {

namespace {

using Key = std::tuple<int, Label, Label>;

int pair_size(const Crystal& a, const Crystal& b) { return a.size() * b.size(); }

Weight pair_weight(const Crystal& L, const Crystal& R, int x) { return L.wt[x / R.size()] + R.wt[x % R.size()]; }

std::string pair_str(const Crystal& L, const Crystal& R, int x) {
    return L.elems[x / R.size()].str() + " ⊗ " + R.elems[x % R.size()].str();
}

uint64_t checksum(const std::vector<int>& v) {
    uint64_t h = 1469598103934665603ull;
    for (int x : v) h = (h ^ static_cast<uint64_t>(x + 1)) * 1099511628211ull;
    return h;
}

std::optional<std::filesystem::path> cache_file(int n, Label b1, Label b2) {
    const char* dir = std::getenv("DKR_CACHE_DIR");
    if (!dir || !*dir) return std::nullopt;
    std::string name = "R_D" + std::to_string(n) + "_" + b1.str(n) + "_" + b2.str(n) + ".json";
    for (char& c : name)
        if (c == ':') c = '-';
    return std::filesystem::path(dir) / name;
}

std::optional<std::vector<int>> load_r(int n, Label b1, Label b2, const Crystal& C1, const Crystal& C2) {
    auto path = cache_file(n, b1, b2);
    if (!path || !std::filesystem::exists(*path)) return std::nullopt;
    try {
        std::ifstream in(*path);
        nlohmann::json j = nlohmann::json::parse(in);
        if (j.at("n") != n || j.at("B1") != b1.str(n) || j.at("B2") != b2.str(n)) return std::nullopt;
        std::map<std::string, int> target;
        const int N = pair_size(C1, C2);
        for (int y = 0; y < N; ++y) target[pair_str(C2, C1, y)] = y;
        std::vector<int> map(N, -1);
        const auto& m = j.at("map");
        for (int x = 0; x < N; ++x) map[x] = target.at(m.at(pair_str(C1, C2, x)).get<std::string>());
        if (j.at("checksum").get<uint64_t>() != checksum(map)) return std::nullopt;
        return map;
    } catch (const std::exception&) {
        return std::nullopt;  // unreadable cache is recomputed
    }
}

void store_r(int n, const RMap& r, const Crystal& C1, const Crystal& C2) {
    auto path = cache_file(n, r.b1, r.b2);
    if (!path) return;
    nlohmann::json j;
    j["n"] = n;
    j["B1"] = r.b1.str(n);
    j["B2"] = r.b2.str(n);
    j["checksum"] = checksum(r.map);
    nlohmann::json m = nlohmann::json::object();
    for (int x = 0; x < static_cast<int>(r.map.size()); ++x) m[pair_str(C1, C2, x)] = pair_str(C2, C1, r.map[x]);
    j["map"] = std::move(m);
    std::filesystem::create_directories(path->parent_path());
    std::ofstream(*path) << j.dump(1);
}

std::unique_ptr<RMap> build_r(int n, Label b1, Label b2) {
    const Crystal& C1 = get_crystal(n, b1);
    const Crystal& C2 = get_crystal(n, b2);
    auto r = std::make_unique<RMap>();
    r->n = n;
    r->b1 = b1;
    r->b2 = b2;
    if (auto cached = load_r(n, b1, b2, C1, C2)) {
        r->map = std::move(*cached);
        return r;
    }
    const int N = pair_size(C1, C2);
    const int seed = C1.u * C2.size() + C2.u;
    const Weight w = pair_weight(C1, C2, seed);
    int seed_img = -1, count_src = 0;
    for (int x = 0; x < N; ++x)
        if (pair_weight(C1, C2, x) == w) ++count_src;
    for (int y = 0; y < N; ++y)
        if (pair_weight(C2, C1, y) == w) {
            if (seed_img >= 0) seed_img = -2;
            else if (seed_img == -1) seed_img = y;
        }
    if (count_src != 1 || seed_img < 0)
        throw std::logic_error("R-matrix seed weight " + w.str() + " is not unique for " + b1.str(n) + " ⊗ " +
                               b2.str(n));
    r->map.assign(N, -1);
    r->map[seed] = seed_img;
    std::queue<int> q;
    q.push(seed);
    int mapped = 1;
    while (!q.empty()) {
        int x = q.front();
        q.pop();
        int y = r->map[x];
        for (int i = 0; i <= n; ++i)
            for (bool lower : {true, false}) {
                int x2 = lower ? pair_f(C1, C2, x, i) : pair_e(C1, C2, x, i);
                int y2 = lower ? pair_f(C2, C1, y, i) : pair_e(C2, C1, y, i);
                if ((x2 < 0) != (y2 < 0))
                    throw std::logic_error("R-matrix propagation: arrow " + std::to_string(i) + " exists on one side only");
                if (x2 < 0) continue;
                if (r->map[x2] < 0) {
                    r->map[x2] = y2;
                    ++mapped;
                    q.push(x2);
                } else if (r->map[x2] != y2) {
                    throw std::logic_error("R-matrix propagation is inconsistent at " + pair_str(C1, C2, x2));
                }
            }
    }
    if (mapped != N) throw std::logic_error("R-matrix BFS left elements unmapped");
    std::vector<char> hit(N, 0);
    for (int y : r->map) {
        if (hit[y]) throw std::logic_error("R-matrix is not injective");
        hit[y] = 1;
    }
    store_r(n, *r, C1, C2);
    return r;
}

// H(e_0 b) - H(b) for b = b2 (x) b1 with e_0 b defined: +1 when e_0 acts on
// the left factor of both b and R(b), -1 when on the right of both, else 0.
// This orientation is the one the highest weight tables are computed in.
int e0_step(const Crystal& C2, const Crystal& C1, const RMap& r, int x) {
    const int a = x / C1.size(), b = x % C1.size();
    const bool left = C2.eps[0][a] > C1.phi[0][b];
    const int y = r.map[x];  // in B1 (x) B2
    const int a2 = y / C2.size(), b2 = y % C2.size();
    const bool left_r = C1.eps[0][a2] > C2.phi[0][b2];
    if (left && left_r) return 1;
    if (!left && !left_r) return -1;
    return 0;
}

std::unique_ptr<HMap> build_h(int n, Label b2, Label b1) {
    const Crystal& C2 = get_crystal(n, b2);
    const Crystal& C1 = get_crystal(n, b1);
    const RMap& r = compute_r(n, b2, b1);
    auto h = std::make_unique<HMap>();
    h->n = n;
    h->b2 = b2;
    h->b1 = b1;
    const int N = pair_size(C2, C1);
    const int NONE = std::numeric_limits<int>::min();
    h->h.assign(N, NONE);
    const int seed = C2.u * C1.size() + C1.u;
    h->h[seed] = 0;
    std::queue<int> q;
    q.push(seed);
    auto visit = [&](int y, int val) {
        if (h->h[y] == NONE) {
            h->h[y] = val;
            q.push(y);
        } else if (h->h[y] != val) {
            throw std::logic_error("local energy is inconsistent at " + pair_str(C2, C1, y));
        }
    };
    while (!q.empty()) {
        int x = q.front();
        q.pop();
        for (int i = 1; i <= n; ++i) {
            int y = pair_f(C2, C1, x, i);
            if (y >= 0) visit(y, h->h[x]);
            y = pair_e(C2, C1, x, i);
            if (y >= 0) visit(y, h->h[x]);
        }
        int y = pair_e(C2, C1, x, 0);
        if (y >= 0) visit(y, h->h[x] + e0_step(C2, C1, r, x));
        y = pair_f(C2, C1, x, 0);
        if (y >= 0) visit(y, h->h[x] - e0_step(C2, C1, r, y));
    }
    for (int v : h->h)
        if (v == NONE) throw std::logic_error("local energy BFS left elements unvisited");
    return h;
}

}  // namespace

const RMap& compute_r(int n, Label b1, Label b2) {
    static std::recursive_mutex mu;
    static std::map<Key, std::unique_ptr<RMap>> cache;
    std::lock_guard<std::recursive_mutex> lock(mu);
    Key key{n, b1, b2};
    auto it = cache.find(key);
    if (it != cache.end()) return *it->second;
    return *cache.emplace(key, build_r(n, b1, b2)).first->second;
}

const HMap& local_energy(int n, Label b2, Label b1) {
    static std::recursive_mutex mu;
    static std::map<Key, std::unique_ptr<HMap>> cache;
    std::lock_guard<std::recursive_mutex> lock(mu);
    Key key{n, b2, b1};
    auto it = cache.find(key);
    if (it != cache.end()) return *it->second;
    return *cache.emplace(key, build_h(n, b2, b1)).first->second;
}

void apply_r_at(int n, Tensor& t, int pos) {
    if (pos < 0 || pos + 1 >= static_cast<int>(t.idx.size())) throw std::out_of_range("apply_r position");
    const Crystal* A = t.cr[pos];
    const Crystal* B = t.cr[pos + 1];
    const RMap& r = compute_r(n, A->label, B->label);
    int y = r.map[t.idx[pos] * B->size() + t.idx[pos + 1]];
    t.cr[pos] = B;
    t.cr[pos + 1] = A;
    t.idx[pos] = y / A->size();
    t.idx[pos + 1] = y % A->size();
}

int local_energy_at(int n, const Tensor& t, int pos) {
    if (pos < 0 || pos + 1 >= static_cast<int>(t.idx.size())) throw std::out_of_range("local energy position");
    const HMap& h = local_energy(n, t.cr[pos]->label, t.cr[pos + 1]->label);
    return h.h[t.idx[pos] * t.cr[pos + 1]->size() + t.idx[pos + 1]];
}

TensorElement apply_r(int n, const TensorElement& t, int i) {
    const int L = t.size();
    if (i < 1 || i > L - 1) throw std::out_of_range("apply_r: position " + std::to_string(i) + " out of range");
    Tensor x = Tensor::from(n, t);
    apply_r_at(n, x, L - 1 - i);
    return x.element();
}

std::vector<std::string> check_r(const RMap& r) {
    const Crystal& C1 = get_crystal(r.n, r.b1);
    const Crystal& C2 = get_crystal(r.n, r.b2);
    std::vector<std::string> bad;
    for (int x = 0; x < static_cast<int>(r.map.size()); ++x) {
        const int y = r.map[x];
        if (!(pair_weight(C1, C2, x) == pair_weight(C2, C1, y))) bad.push_back("weight at " + pair_str(C1, C2, x));
        for (int i = 0; i <= r.n; ++i) {
            int fx = pair_f(C1, C2, x, i), fy = pair_f(C2, C1, y, i);
            int ex = pair_e(C1, C2, x, i), ey = pair_e(C2, C1, y, i);
            if ((fx < 0 ? -1 : r.map[fx]) != fy) bad.push_back("f_" + std::to_string(i) + " at " + pair_str(C1, C2, x));
            if ((ex < 0 ? -1 : r.map[ex]) != ey) bad.push_back("e_" + std::to_string(i) + " at " + pair_str(C1, C2, x));
        }
    }
    return bad;
}

}  // namespace dkr
