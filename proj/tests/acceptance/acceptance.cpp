// Acceptance runner: one PASS/FAIL line per criterion, nonzero exit on any failure.

#include "absplit/absplit.hpp"

#include <chrono>
#include <cstdio>
#include <functional>
#include <map>
#include <random>
#include <set>
#include <string>

using namespace absplit;

namespace {

struct Outcome {
    bool ok = true;
    std::string detail;

    void require(bool cond, const std::string& what) {
        if (cond) return;
        if (ok) detail = what;
        ok = false;
    }
};

template <class E, class F>
bool throws(F&& f) {
    try {
        f();
    } catch (const E&) {
        return true;
    } catch (...) {
        return false;
    }
    return false;
}

// 1. Projector family identities for g = 1..4, n in [-3, 3].
Outcome deninger_murre() {
    Outcome o;
    for (unsigned g = 1; g <= 4; ++g) {
        const auto rep = dm::verify_dm({g}, {-3, 3});
        for (const auto* f : rep.failures()) o.require(false, f->name + ": " + f->detail);
    }
    return o;
}

unsigned v2(std::int64_t x) {
    unsigned v = 0;
    for (; x % 2 == 0; x /= 2) ++v;
    return v;
}

// 2. Elliptic table and the squarefree sweep.
Outcome elliptic_table() {
    using namespace real_locus;
    Outcome o;
    o.require(component_count(quadratic_cm_data(-3)) == 1, "d=-3");
    o.require(component_count(quadratic_cm_data(-2)) == 2, "d=-2");
    o.require(component_count(quadratic_cm_data(-1, 0)) == 2 && component_count(quadratic_cm_data(-1, 1)) == 1,
              "d=-1");
    o.require(gamma_possibilities(quadratic_field(-1)) == std::set<std::uint64_t>{1, 2}, "d=-1 gamma");
    for (std::int64_t d = -49; d < 0; ++d) {
        bool sqfree = true;
        for (std::int64_t p = 2; p * p <= -d; ++p)
            if ((-d) % (p * p) == 0) sqfree = false;
        if (!sqfree) continue;
        const std::int64_t r = ((d % 4) + 4) % 4;
        const std::int64_t disc = r == 1 ? d : 4 * d;
        const unsigned ord = v2(disc);
        const std::set<std::uint64_t> expected = ord == 0 ? std::set<std::uint64_t>{1}
                                                 : ord == 3 ? std::set<std::uint64_t>{2}
                                                            : std::set<std::uint64_t>{1, 2};
        o.require(gamma_possibilities(quadratic_field(d)) == expected, "sweep d=" + std::to_string(d));
    }
    return o;
}

// 3. Cyclotomic table and bounds.
Outcome cyclotomic_table() {
    using namespace real_locus;
    Outcome o;
    for (std::uint64_t k : {5u, 7u, 9u}) o.require(component_count(cyclotomic_cm_data(k)) == 1, "k=" + std::to_string(k));
    o.require(component_count(cyclotomic_cm_data(12, 0)) == 4, "k=12 eps=0");
    o.require(component_count(cyclotomic_cm_data(8, 1)) == 1, "k=8 eps=1");
    for (std::uint64_t k = 3; k <= 64; ++k) {
        const auto f = cyclotomic_field(k);
        for (auto n : gamma_possibilities(f))
            o.require(n >= 1 && n <= (std::uint64_t{1} << f.g), "bounds k=" + std::to_string(k));
    }
    return o;
}

// 4. Rank conservation and primitive ranks from sl2 strings.
Outcome rank_conservation() {
    Outcome o;
    using Key = std::pair<unsigned, unsigned>;  // lowest degree, length; L raises degree by 2
    std::map<Key, std::uint64_t> strings{{{0, 1}, 1}};
    for (unsigned g = 1; g <= 8; ++g) {
        std::map<Key, std::uint64_t> next;
        for (const auto& [a, m] : strings) {
            next[{a.first, a.second + 1}] += m;  // (a) x (0,2)
            if (a.second >= 2) next[{a.first + 2, a.second - 1}] += m;
            next[{a.first + 1, a.second}] += 2 * m;  // (a) x 2*(1,1)
        }
        strings = std::move(next);
        const auto rep = motive::rank_conservation(motive::kunnemann_decompose(g));
        for (const auto* f : rep.failures()) o.require(false, f->name + ": " + f->detail);
        std::map<unsigned, std::uint64_t> by_low;
        for (const auto& [k, m] : strings) by_low[k.first] += m;
        for (unsigned i = 0; i <= g; ++i)
            o.require(motive::primitive_rank(g, i) == by_low[i],
                      "primitive rank g=" + std::to_string(g) + " i=" + std::to_string(i));
    }
    return o;
}

// 5. Homology of the product model against the claimed wedge.
Outcome topology_oracle() {
    Outcome o;
    for (unsigned g = 1; g <= 5; ++g)
        for (std::uint64_t n : {1u, 2u, 4u, 8u})
            for (const auto* f : topology::certify_splitting(g, n).checks.failures())
                o.require(false, f->name + ": " + f->detail);
    return o;
}

// 6. End-to-end elliptic corollary.
Outcome elliptic_corollary() {
    using namespace assembly;
    Outcome o;
    VarietyInput v;
    v.real_locus = QuadraticLocus{-2, std::nullopt};
    v.coefficient_ring = parse_lambda("Z[1/2]");
    v.rational_point = true;
    const auto e = assemble_splitting(v);
    SplittingExpression want;
    want.g = 1;
    want.lambda = CoefficientRing::localized({2});
    want.n_components = 2;
    want.status = SplitStatus::claimed;
    want.plus_part = {{0, 0, 0}, {0, 0, 1}, {2, 1, 0}};
    want.minus_part = {{0, 2}, {1, 2}};
    o.require(e == want, "Z[1/2] expression: " + render_text(e));
    o.require(render_text(e) == "S^{0,0} ∨ J_1 ∨ S^{2,1} ∨ 2·(S^{0,0} ∨ S^{1,0})", "Z[1/2] text: " + render_text(e));

    v.coefficient_ring = CoefficientRing::integers();
    const auto z = assemble_splitting(v);
    o.require(z.status == SplitStatus::refused && !z.claims_splitting(), "Z not refused");
    o.require(z.integral_fallback == IntegralFallback{1}, "Z fallback missing");
    o.require(render_text(z) == "S^{0,0} ∨ F ∨ S^{2,1}", "Z text: " + render_text(z));
    return o;
}

// 7. Property suites.
Outcome properties() {
    Outcome o;
    for (unsigned m = 0; m <= 12; ++m)
        for (unsigned l = 0; l <= 12; ++l) {
            Integer s = 0;
            for (unsigned k = 0; k <= 12; ++k) s += stirling_second(m, k) * stirling_first_signed(k, l);
            o.require(s == (m == l ? 1 : 0), "stirling orthogonality m=" + std::to_string(m));
        }

    std::mt19937_64 rng(2024);
    std::uniform_int_distribution<int> num(-9, 9), den(1, 6);
    for (std::size_t order = 1; order <= 12; ++order)
        for (int trial = 0; trial < 4; ++trial) {
            std::vector<Rational> c(order + 1);
            for (std::size_t k = 1; k <= order; ++k) c[k] = Rational(num(rng), den(rng));
            const TruncatedPoly p(order, c);
            o.require(poly_log1p(poly_exp(p) - TruncatedPoly::one(order)) == p, "exp/log order " + std::to_string(order));
            o.require(poly_exp(poly_log1p(p)) - TruncatedPoly::one(order) == p, "log/exp order " + std::to_string(order));
        }

    for (unsigned g = 1; g <= 4; ++g)
        for (int c = -3; c <= 3; ++c)
            for (unsigned m = 0; m <= 2 * g; ++m) {
                Integer s = 0;
                const unsigned n = 2 * g + 1;
                for (unsigned j = 0; j <= n; ++j) {
                    const Integer t = binomial(n, j) * ipow(Integer(static_cast<long long>(j) + c), m);
                    s += ((n - j) % 2 == 0) ? t : Integer(-t);
                }
                o.require(s == 0, "finite difference g=" + std::to_string(g) + " m=" + std::to_string(m));
                std::vector<Rational> tc(3 * g + 2);
                for (std::size_t k = 0; k < tc.size(); ++k) tc[k] = Rational(binomial(c, static_cast<unsigned>(k)));
                const auto lifted = poly_mul(TruncatedPoly::monomial(3 * g + 1, n), TruncatedPoly(3 * g + 1, tc));
                o.require(dm::phi_on_u_basis(m, lifted) == 0, "phi on ideal g=" + std::to_string(g));
            }

    for (unsigned g = 1; g <= 6; ++g) {
        const auto next = topology::torus_splitting(g + 1);
        const auto step = topology::torus_splitting_step(topology::torus_splitting(g));
        o.require(next == step, "torus recurrence g=" + std::to_string(g));
        for (unsigned i = 1; i <= g + 1; ++i)
            o.require(next.at(i + 1) == (binomial(g, i) + binomial(g, i - 1)).convert_to<std::uint64_t>(),
                      "pascal g=" + std::to_string(g));
    }

    std::uniform_int_distribution<int> entry(-6, 6), dim(1, 6);
    for (int trial = 0; trial < 40; ++trial) {
        IntMatrix a(dim(rng), dim(rng));
        for (std::size_t r = 0; r < a.rows(); ++r)
            for (std::size_t c = 0; c < a.cols(); ++c) a(r, c) = entry(rng);
        const auto s = smith_normal_form(a);
        o.require(s.U * a * s.V == s.D, "U A V != D");
        o.require(abs(determinant(s.U)) == 1 && abs(determinant(s.V)) == 1, "non-unimodular transform");
        const auto d = s.diagonal();
        for (std::size_t i = 0; i + 1 < d.size(); ++i)
            if (d[i] != 0) o.require(d[i + 1] % d[i] == 0, "divisibility chain");
    }
    return o;
}

// 8. Negative controls.
Outcome negative_controls() {
    using namespace assembly;
    Outcome o;
    auto fam = dm::dm_projectors({1});
    fam.projectors[1] = fam[1] + fam[0];
    const auto rep = dm::verify_projector_family(fam, {-3, 3});
    const Check* eig = rep.find("eigen_relation_left g=1");
    o.require(eig != nullptr && !eig->passed, "corrupted projector passed the eigen relation");

    VarietyInput bad_n;
    bad_n.g = 2;
    bad_n.real_locus = ExplicitCount{3};
    bad_n.rational_point = true;
    o.require(throws<InputError>([&] { assemble_splitting(bad_n); }), "n=3 accepted");

    VarietyInput no_eps;
    no_eps.real_locus = QuadraticLocus{-1, std::nullopt};
    no_eps.rational_point = true;
    o.require(throws<IncompleteInput>([&] { assemble_splitting(no_eps); }), "missing epsilon accepted");
    return o;
}

}  // namespace

int main() {
    struct Criterion {
        int id;
        const char* name;
        double limit_ms;
        std::function<Outcome()> run;
    };
    const Criterion criteria[] = {
        {1, "deninger-murre projectors g<=4", 5000, deninger_murre},
        {2, "elliptic component table", 1000, elliptic_table},
        {3, "cyclotomic component table", 1000, cyclotomic_table},
        {4, "rank conservation g<=8", 1000, rank_conservation},
        {5, "topology oracle g<=5", 10000, topology_oracle},
        {6, "elliptic corollary end to end", 1000, elliptic_corollary},
        {7, "property suites", 10000, properties},
        {8, "negative controls", 10000, negative_controls},
    };
    int failed = 0;
    for (const auto& c : criteria) {
        const auto t0 = std::chrono::steady_clock::now();
        Outcome o;
        try {
            o = c.run();
        } catch (const std::exception& e) {
            o.ok = false;
            o.detail = std::string("exception: ") + e.what();
        }
        const double ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0).count();
        if (o.ok && ms > c.limit_ms) {
            o.ok = false;
            o.detail = "over time budget";
        }
        std::printf("%s [%d] %s (%.1f ms, limit %.0f ms)%s%s\n", o.ok ? "PASS" : "FAIL", c.id, c.name, ms, c.limit_ms,
                    o.ok ? "" : ": ", o.detail.c_str());
        if (!o.ok) ++failed;
    }
    return failed == 0 ? 0 : 1;
}
