#include "fr3/neargroup.hpp"

#include "fr3/cyclotomic.hpp"

#include <algorithm>
#include <numeric>

namespace fr3 {

bool GroupDescriptor::consistent() const {
    if (order < 1 || char_degrees.empty()) return false;
    Int sum = 0;
    bool all_one = true;
    for (int d : char_degrees) {
        if (d < 1) return false;
        sum += Int(d) * d;
        all_one = all_one && d == 1;
    }
    if (sum != order) return false;
    if (is_abelian != all_one) return false;
    if (is_cyclic && !is_abelian) return false;
    return true;
}

NearGroupRing make_neargroup(const GroupDescriptor& g, const Int& n) {
    if (!g.consistent()) throw std::invalid_argument("make_neargroup: bad group descriptor");
    if (g.order < 2) throw RankTooSmall("make_neargroup: |G| < 2 gives rank < 3");
    if (n < 0) throw std::invalid_argument("make_neargroup: n must be nonnegative");
    NearGroupRing r;
    r.group = g;
    r.n = n;
    Int disc = n * n + 4 * g.order;
    auto [s, f] = squarefree_decompose(disc);
    if (s == 1) {
        r.d_rational = true;
        r.d_plus = QuadElem::rational(Rat(n + f) / 2, 2);
        r.d_minus = QuadElem::rational(Rat(n - f) / 2, 2);
    } else {
        r.d_plus = QuadElem{Rat(n) / 2, Rat(f) / 2, s};
        r.d_minus = QuadElem{Rat(n) / 2, Rat(-f) / 2, s};
    }
    // d_+ d_- = -|G| and d_+ + d_- = n, exactly.
    if (!(r.d_plus * r.d_minus == QuadElem::rational(Rat(-g.order), r.d_plus.d)) ||
        !(r.d_plus + r.d_minus == QuadElem::rational(Rat(n), r.d_plus.d)))
        throw std::logic_error("make_neargroup: root identities failed");
    return r;
}

std::vector<std::pair<QuadElem, int>> neargroup_codegrees(const NearGroupRing& r) {
    std::vector<std::pair<QuadElem, int>> out;
    Int d = r.d_plus.d;
    bool trivial_skipped = false;
    for (int deg : r.group.char_degrees) {
        if (deg == 1 && !trivial_skipped) {
            trivial_skipped = true;  // the trivial character does not appear
            continue;
        }
        out.emplace_back(QuadElem::rational(Rat(r.group.order) / deg, d), deg);
    }
    QuadElem two_g = QuadElem::rational(Rat(2 * r.group.order), d);
    QuadElem nn = QuadElem::rational(Rat(r.n), d);
    out.emplace_back(two_g + nn * r.d_plus, 1);
    out.emplace_back(two_g + nn * r.d_minus, 1);
    return out;
}

bool completeness_check(const NearGroupRing& r) {
    Int d = r.d_plus.d;
    QuadElem sum = QuadElem::rational(Rat(0), d);
    for (const auto& [f, mult] : neargroup_codegrees(r))
        sum = sum + QuadElem::rational(Rat(mult), d) / f;
    return sum == QuadElem::rational(Rat(1), d);
}

NGCheck theorem_A1_check(const NearGroupRing& r) {
    if (r.d_rational) return NGCheck::Pass;
    if (!divides(r.group.order, r.n)) return NGCheck::Eliminated;
    if (!r.group.is_abelian) return NGCheck::Eliminated;
    return NGCheck::Pass;
}

NGCheck theorem_A3_check(const NearGroupRing& r) {
    if (r.group.is_abelian && 0 < r.n && r.n < r.group.order - 1) return NGCheck::Eliminated;
    if (r.n == r.group.order - 1 && !r.group.is_cyclic) return NGCheck::Eliminated;
    // Integral rings require n < |G|.
    if (r.d_rational && r.n >= r.group.order) return NGCheck::Eliminated;
    return NGCheck::Pass;
}

NearClassifyResult theorem_near_classify(long m, long N) {
    if (m <= 2) return {true, "", {}, 0};
    if (m % 2) return {false, "parity", {}, 0};
    if (m >= 6) {
        // m^2/4 + 4 >= (m-2) sqrt(m^2/4 + 2) must hold but fails for m >= 6:
        // compare squares exactly.
        Int lhs = (Int(m) * m / 4 + 4) * (Int(m) * m / 4 + 4);
        Int rhs = Int(m - 2) * (m - 2) * (Int(m) * m / 4 + 2);
        if (lhs < rhs) return {false, "inequality", {}, 0};
        throw std::logic_error("theorem_near_classify: inequality unexpectedly holds");
    }
    // m = 4: d in Q(sqrt(6)); alpha + beta = 2, both FS signs.
    auto [s, f] = squarefree_decompose(Int(m) * m / 4 + 2);
    if (f != 1) throw std::logic_error("theorem_near_classify: unexpected square factor");
    long sq = s.get_si();  // 6
    NearClassifyResult res{false, "roots_of_unity", {}, N};
    for (long alpha = 0; alpha <= m / 2; ++alpha) {
        long beta = m / 2 - alpha;
        for (int sign : {+1, -1}) {  // FS sign: +1 means the (m-2) branch
            Rat S0 = Rat(m) * m / 4 + 4 + 2 * alpha * beta;
            long root_coeff = sign > 0 ? (m - 2) : (m + 2);
            QuadElem S2{Rat(2 * alpha * beta) - Rat(m) * m / 4, Rat(-root_coeff), Int(sq)};
            QuadElem absS2 = S2.sign() < 0 ? -S2 : S2;
            if ((QuadElem::rational(S0, sq) - absS2).sign() < 0) continue;  // |S2| > S0
            // Surviving case: sum of S0 roots of unity must equal
            // S1 = -2*alpha*beta - (m/2) sqrt(m^2/4+2).
            CycInt target = CycInt::integer(N, Int(-2 * alpha * beta)) -
                            CycInt::integer(N, Int(m / 2)) * sqrt_in_cyclotomic(N, sq);
            auto sols = cyc_sum_search(target, static_cast<int>(S0.get_num().get_si()), N);
            if (sols.empty()) continue;  // no representation at all: contradiction
            bool all_contradicted = true;
            for (const auto& sol : sols) {
                std::vector<long> support = sol;
                support.erase(std::unique(support.begin(), support.end()), support.end());
                if (closed_under_squaring(support, N)) all_contradicted = false;
                res.multiset = sol;
            }
            if (!all_contradicted) return {true, "", res.multiset, N};
        }
    }
    return res;
}

std::vector<std::pair<QuadElem, int>> ngi1_decomposition(const NearGroupRing& r) {
    Int d = r.d_plus.d;
    if (!r.d_rational && !divides(r.group.order, r.n))
        throw DivisibilityViolation("ngi1_decomposition: |G| does not divide n");
    QuadElem ratio = QuadElem::rational(Rat(r.n) / Rat(r.group.order), d) * r.d_plus;
    std::vector<std::pair<QuadElem, int>> out;
    out.emplace_back(QuadElem::rational(Rat(1), d), 1);          // the unit
    out.emplace_back(QuadElem::rational(Rat(1), d) + ratio, 1);  // A_{E_-}
    bool trivial_skipped = false;
    for (int deg : r.group.char_degrees) {
        if (deg == 1 && !trivial_skipped) {
            trivial_skipped = true;
            continue;
        }
        out.emplace_back(QuadElem::rational(Rat(2 * deg), d) +
                             QuadElem::rational(Rat(deg), d) * ratio,
                         deg);
    }
    // Total dimension check: sum mult * dim = dim(C) = 2|G| + n d_+.
    QuadElem total = QuadElem::rational(Rat(0), d);
    for (const auto& [dim, mult] : out)
        total = total + QuadElem::rational(Rat(mult), d) * dim;
    if (!(total == QuadElem::rational(Rat(2 * r.group.order), d) +
                       QuadElem::rational(Rat(r.n), d) * r.d_plus))
        throw std::logic_error("ngi1_decomposition: dimension sum check failed");
    return out;
}

namespace {

GroupDescriptor cyclic(int k) {
    GroupDescriptor g;
    g.name = "c" + std::to_string(k);
    g.order = k;
    g.char_degrees.assign(k, 1);
    g.is_abelian = true;
    g.is_cyclic = true;
    return g;
}

GroupDescriptor named_nonabelian(const std::string& name) {
    GroupDescriptor g;
    g.name = name;
    g.order = 8;
    g.char_degrees = {1, 1, 1, 1, 2};  // D8 and Q8 share a character-degree pattern
    g.is_abelian = false;
    g.is_cyclic = false;
    return g;
}

GroupDescriptor product(const GroupDescriptor& a, const GroupDescriptor& b) {
    GroupDescriptor g;
    g.name = a.name + "x" + b.name;
    g.order = a.order * b.order;
    for (int da : a.char_degrees)
        for (int db : b.char_degrees) g.char_degrees.push_back(da * db);
    std::sort(g.char_degrees.begin(), g.char_degrees.end());
    g.is_abelian = a.is_abelian && b.is_abelian;
    g.is_cyclic = a.is_cyclic && b.is_cyclic && gcd(a.order, b.order) == 1;
    return g;
}

}  // namespace

std::vector<GroupDescriptor> group_catalog() {
    std::vector<GroupDescriptor> out;
    for (int k = 2; k <= 16; ++k) out.push_back(cyclic(k));
    out.push_back(product(cyclic(2), cyclic(2)));
    out.push_back(product(cyclic(2), cyclic(4)));
    out.push_back(named_nonabelian("d8"));
    out.push_back(named_nonabelian("q8"));
    return out;
}

GroupDescriptor parse_group_spec(const std::string& spec) {
    std::vector<GroupDescriptor> parts;
    size_t pos = 0;
    while (pos <= spec.size()) {
        size_t next = spec.find('x', pos);
        std::string tok = spec.substr(pos, next == std::string::npos ? next : next - pos);
        if (tok == "d8" || tok == "q8") {
            parts.push_back(named_nonabelian(tok));
        } else if (tok.size() >= 2 && tok[0] == 'c') {
            int k = 0;
            try {
                k = std::stoi(tok.substr(1));
            } catch (...) {
                throw std::invalid_argument("parse_group_spec: bad token '" + tok + "'");
            }
            if (k < 1) throw std::invalid_argument("parse_group_spec: bad order in '" + tok + "'");
            parts.push_back(cyclic(k));
        } else {
            throw std::invalid_argument("parse_group_spec: bad token '" + tok + "'");
        }
        if (next == std::string::npos) break;
        pos = next + 1;
    }
    if (parts.empty()) throw std::invalid_argument("parse_group_spec: empty spec");
    GroupDescriptor g = parts[0];
    for (size_t i = 1; i < parts.size(); ++i) g = product(g, parts[i]);
    if (!g.consistent()) throw std::invalid_argument("parse_group_spec: inconsistent catalog");
    return g;
}

}  // namespace fr3
