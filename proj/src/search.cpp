#include "fr3/search.hpp"

#include "fr3/spherical.hpp"

#include <json.hpp>

#include <algorithm>
#include <array>
#include <atomic>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <mutex>
#include <numeric>
#include <thread>

namespace fr3 {

namespace {

using i128 = __int128;

long modinv(long a, long k) {
    // Extended Euclid; pre: gcd(a, k) = 1, k >= 1.
    long r0 = k, r1 = a % k, s0 = 0, s1 = 1;
    while (r1 != 0) {
        long q = r0 / r1;
        long r2 = r0 - q * r1;
        r0 = r1; r1 = r2;
        long s2 = s0 - q * s1;
        s0 = s1; s1 = s2;
    }
    return ((s0 % k) + k) % k;
}

// All solutions (k,l,m,n) with this fixed coprime pair l <= k: m runs over
// the residue class l^-1 (l^2-1) mod k with n = (k^2+l^2-1-lm)/k >= 0.
template <typename F>
void for_each_m(long k, long l, F&& cb) {
    long rhs = k * k + l * l - 1;
    long m0 = ((l * l - 1) % k * modinv(l % k == 0 ? 1 : l % k, k)) % k;
    if (k == 1) m0 = 0;
    for (long m = m0; l * m <= rhs; m += k) {
        long n = (rhs - l * m) / k;
        if (k == l && m < n) continue;  // keep the canonical orientation
        cb(m, n);
    }
}

// Perfect-square test for nonnegative 128-bit values.
bool is_square_i128(i128 v) {
    if (v < 0) return false;
    i128 r = (i128)sqrtl((long double)v);
    while (r > 0 && r * r > v) --r;
    while ((r + 1) * (r + 1) <= v) ++r;
    return r * r == v;
}

struct RawRing {
    long k, l, m, n;
    bool operator<(const RawRing& o) const {
        return std::array<long, 4>{k, l, m, n} < std::array<long, 4>{o.k, o.l, o.m, o.n};
    }
    bool operator==(const RawRing& o) const {
        return k == o.k && l == o.l && m == o.m && n == o.n;
    }
};

// Sieve one candidate: parity is already handled at the (k,l) level; here
// cyclotomic (c is a perfect square) runs in 128-bit arithmetic, the rare
// survivors are promoted to exact arithmetic for d-number and cubicity.
// Bounds: for k <= 10^6 every intermediate fits in 127 bits (m <= 2k^2/l,
// mn <= k^3/l, so A^2 <= 10^36 and c <= 4*10^36).
bool sieve_candidate(long k, long l, long m, long n) {
    i128 b = (i128)(k + n) * (k + n) + (i128)(l + m) * (l + m) + 9;
    i128 A = (i128)k * l - (i128)m * n;
    i128 B = 2 * ((i128)k * k - (i128)l * m) - 1;
    i128 c = 4 * b - 9 + A * A + B * B;
    if (!is_square_i128(c)) return false;
    auto ring = make_rank3(k, l, m, n);
    auto spec = codegree_spectrum(ring);
    return dnumber_test(spec) && spec.kind == Kind::Cubic;
}

std::string verdict_string(const Verdict& v) {
    switch (v.status) {
        case Status::Pass: return "pass";
        case Status::Eliminated: return "eliminated:" + v.eliminator;
        case Status::NeedsCenter: return "needs_center";
        default: return "needs_spherical";
    }
}

TableRow make_row(const Rank3Ring& ring) {
    auto spec = codegree_spectrum(ring);
    TableRow row{ring, spec.b, spec.c, cyclotomic_test(spec), dnumber_test(spec),
                 spec.kind, verdict_string(run_battery(ring))};
    return row;
}

std::string num_json(const Int& v) {
    static const Int cap = Int(1) << 53;
    std::string s = to_string(v);
    if (v > cap || v < -cap) return "\"" + s + "\"";
    return s;
}

struct ShardState {
    long last_k = 0;               // highest fully completed k in this shard
    std::vector<RawRing> rows;
};

void write_checkpoint_locked(const SearchConfig& cfg, const std::vector<ShardState>& shards) {
    nlohmann::json j;
    j["max_k"] = cfg.max_k;
    j["jobs"] = cfg.jobs;
    j["shards"] = nlohmann::json::array();
    for (const auto& s : shards) {
        nlohmann::json js;
        js["last_k"] = s.last_k;
        js["rows"] = nlohmann::json::array();
        for (const auto& r : s.rows) js["rows"].push_back({r.k, r.l, r.m, r.n});
        j["shards"].push_back(js);
    }
    std::string tmp = cfg.checkpoint + ".tmp";
    {
        std::ofstream f(tmp, std::ios::trunc);
        f << j.dump() << "\n";
    }
    std::rename(tmp.c_str(), cfg.checkpoint.c_str());
}

bool load_checkpoint(const SearchConfig& cfg, std::vector<ShardState>& shards) {
    std::ifstream f(cfg.checkpoint);
    if (!f) {
        std::fprintf(stderr, "search: checkpoint %s missing; starting fresh\n",
                     cfg.checkpoint.c_str());
        return false;
    }
    nlohmann::json j;
    try {
        f >> j;
        if (j.at("max_k").get<long>() != cfg.max_k || j.at("jobs").get<int>() != cfg.jobs ||
            j.at("shards").size() != shards.size()) {
            std::fprintf(stderr, "search: checkpoint config mismatch; starting fresh\n");
            return false;
        }
        for (size_t s = 0; s < shards.size(); ++s) {
            shards[s].last_k = j["shards"][s].at("last_k").get<long>();
            for (const auto& row : j["shards"][s].at("rows"))
                shards[s].rows.push_back({row.at(0).get<long>(), row.at(1).get<long>(),
                                          row.at(2).get<long>(), row.at(3).get<long>()});
        }
    } catch (const nlohmann::json::exception&) {
        std::fprintf(stderr, "search: checkpoint unreadable; starting fresh\n");
        for (auto& s : shards) s = ShardState{};
        return false;
    }
    return true;
}

}  // namespace

void enumerate_solutions(long max_k, const std::function<void(const Rank3Ring&)>& emit) {
    if (max_k < 1) throw std::invalid_argument("enumerate_solutions: max_k >= 1 required");
    for (long k = 1; k <= max_k; ++k)
        for (long l = 1; l <= k; ++l) {
            if (std::gcd(k, l) != 1) continue;
            for_each_m(k, l, [&](long m, long n) { emit(make_rank3(k, l, m, n)); });
        }
}

std::vector<Rank3Ring> enumerate_solutions(long max_k) {
    std::vector<Rank3Ring> out;
    enumerate_solutions(max_k, [&](const Rank3Ring& r) { out.push_back(r); });
    return out;
}

SearchResult run_table_search(const SearchConfig& config) {
    if (config.max_k < 1 || config.jobs < 1)
        throw std::invalid_argument("run_table_search: max_k >= 1 and jobs >= 1 required");
    if (config.max_k > 1000000)
        throw std::invalid_argument("run_table_search: max_k > 10^6 exceeds the 128-bit fast path");

    const int J = config.jobs;
    std::vector<ShardState> shards(J);
    if (config.resume && !config.checkpoint.empty()) load_checkpoint(config, shards);

    // Odd k only: both k and l must be odd to pass the parity sieve.
    // Shard s owns the odd values k with ((k-1)/2) % J == s, ascending.
    // All shard-state mutation happens under ckpt_mu so any thread can
    // serialize a consistent snapshot; the contended sections are rare (found
    // rows and per-k bookkeeping), the sieve itself runs lock-free.
    std::mutex ckpt_mu;
    auto worker = [&](int s) {
        long done_since_ckpt = 0;
        for (long k = 1 + 2 * s; k <= config.max_k; k += 2 * J) {
            if (k <= shards[s].last_k) continue;
            std::vector<RawRing> found;
            for (long l = 1; l <= k; l += 2) {
                if (std::gcd(k, l) != 1) continue;
                for_each_m(k, l, [&](long m, long n) {
                    if (sieve_candidate(k, l, m, n)) found.push_back({k, l, m, n});
                });
            }
            std::lock_guard<std::mutex> g(ckpt_mu);
            shards[s].rows.insert(shards[s].rows.end(), found.begin(), found.end());
            shards[s].last_k = k;
            if (!config.checkpoint.empty() && ++done_since_ckpt >= 8) {
                done_since_ckpt = 0;
                write_checkpoint_locked(config, shards);
            }
        }
    };
    if (J == 1) {
        worker(0);
    } else {
        std::vector<std::thread> pool;
        for (int s = 0; s < J; ++s) pool.emplace_back(worker, s);
        for (auto& t : pool) t.join();
    }
    if (!config.checkpoint.empty()) std::remove(config.checkpoint.c_str());

    std::vector<RawRing> merged;
    for (const auto& s : shards) merged.insert(merged.end(), s.rows.begin(), s.rows.end());
    std::sort(merged.begin(), merged.end());
    merged.erase(std::unique(merged.begin(), merged.end()), merged.end());

    SearchResult result;
    for (const auto& r : merged) result.rows.push_back(make_row(make_rank3(r.k, r.l, r.m, r.n)));
    for (long m = 0; m <= config.max_m; ++m)
        result.l0.push_back(make_row(make_rank3(1, 0, m, 0)));

    if (!config.out.empty()) {
        std::ofstream f(config.out, std::ios::trunc);
        for (const auto& row : result.rows) f << table_row_json(row) << "\n";
        std::ofstream f0(config.out + ".l0.jsonl", std::ios::trunc);
        for (const auto& row : result.l0) f0 << table_row_json(row) << "\n";
    }
    return result;
}

std::string table_row_json(const TableRow& row) {
    std::string s = "{";
    s += "\"k\":" + num_json(row.ring.k);
    s += ",\"l\":" + num_json(row.ring.l);
    s += ",\"m\":" + num_json(row.ring.m);
    s += ",\"n\":" + num_json(row.ring.n);
    s += ",\"b\":" + num_json(row.b);
    s += ",\"c\":" + num_json(row.c);
    s += ",\"cyclotomic\":" + std::string(row.cyclotomic ? "true" : "false");
    s += ",\"dnumber\":" + std::string(row.dnumber ? "true" : "false");
    s += ",\"kind\":\"" + kind_name(row.kind) + "\"";
    s += ",\"verdict\":\"" + row.verdict + "\"";
    s += "}";
    return s;
}

ClassifyReport classify_rank3(long max_m, long max_k) {
    if (max_m < 2 || max_k < 3)
        throw std::invalid_argument("classify_rank3: max_m >= 2 and max_k >= 3 required");
    ClassifyReport rep;

    // The pointed case: K(Z/3Z) is the group ring of Z/3Z, categorified by
    // Vec(Z/3Z).
    auto z3 = BasedRing::cyclic_group_ring(3);
    if (!z3.validate()) throw InternalInconsistency("classify_rank3: bad Z/3Z ring");
    rep.entries.push_back({z3.name, Status::Pass, ""});

    auto record = [&](const Rank3Ring& ring) {
        Verdict v = run_battery(ring);
        if (v.status == Status::NeedsSpherical) {
            auto pipeline = eliminate_cubic(ring);  // throws on unresolved survivors
            if (pipeline.eliminated) v = {Status::Eliminated, "spherical", ""};
        }
        rep.entries.push_back({ring.str(), v.status, v.eliminator});
    };

    for (long m = 0; m <= max_m; ++m) record(make_rank3(1, 0, m, 0));
    enumerate_solutions(max_k, record);

    for (const auto& e : rep.entries)
        if (e.status == Status::Pass) rep.survivors.push_back(e.name);
    return rep;
}

}  // namespace fr3
