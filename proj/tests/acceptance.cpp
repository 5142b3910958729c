// Acceptance suite: one pass/fail line per criterion, exit code = number of
// failed criteria.  Run with --cli <path-to-growth-binary> to include the
// subprocess determinism check, --only-slow for the three-alphabet suite.

#include <chrono>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "growth/cochar.hpp"
#include "growth/combinatorics.hpp"
#include "growth/errors.hpp"
#include "growth/freealg.hpp"
#include "growth/grassmann.hpp"
#include "growth/matalg.hpp"
#include "growth/report.hpp"
#include "growth/symgroup.hpp"

using namespace growth;

namespace {

int failures = 0;

struct Timer {
    std::chrono::steady_clock::time_point start = std::chrono::steady_clock::now();
    double seconds() const {
        return std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    }
};

void report(int criterion, const std::string& what, bool pass, double seconds) {
    std::printf("[%s] criterion %2d: %s (%.1fs)\n", pass ? " ok " : "FAIL", criterion,
                what.c_str(), seconds);
    if (!pass) ++failures;
}

CocharacterDecomposition hooks(int n, int leg_mod2) {
    CocharacterDecomposition dec;
    dec.n = n;
    for (int leg = 0; leg < n; ++leg) {
        if (leg_mod2 >= 0 && leg % 2 != leg_mod2) continue;
        std::vector<int> parts{n - leg};
        for (int i = 0; i < leg; ++i) parts.push_back(1);
        dec.multiplicity[Partition(parts)] = 1;
    }
    return dec;
}

void criterion_1_codimensions(CocharEngine& g) {
    Timer t;
    bool ok = true;
    for (int n = 2; n <= 8; ++n) {
        ok &= g.codimension(n, Variant::plain) == (1 << (n - 1));
        ok &= g.codimension(n, Variant::central) == (1 << (n - 2));
        ok &= g.delta(n) == (1 << (n - 2));
    }
    double s = t.seconds();
    ok &= s <= 60.0;
    report(1, "c_n(G) = 2^(n-1), c_n^z(G) = delta_n(G) = 2^(n-2) for 2 <= n <= 8", ok, s);
}

void criterion_2_cocharacters(CocharEngine& g) {
    Timer t;
    bool ok = true;
    for (int n = 2; n <= 7; ++n) {
        ok &= g.cocharacter(n, Variant::plain) == hooks(n, -1);
        ok &= g.cocharacter(n, Variant::central) == hooks(n, 0);
        ok &= g.d_module_character(n) == hooks(n, 1);
    }
    report(2, "cocharacters of G: hooks / even-leg hooks / odd-leg hooks, 2 <= n <= 7", ok,
           t.seconds());
}

void criterion_3_restriction(CocharEngine& g) {
    Timer t;
    bool ok = true;
    for (int n = 2; n <= 7; ++n) ok &= verify_restriction_isomorphism(g, n);
    report(3, "restriction isomorphism chi_n^z(G) | S_{n-1} = chi_{n-1}(G), 2 <= n <= 7", ok,
           t.seconds());
}

void criterion_4_t_generation(CocharEngine& g) {
    Timer t;
    bool ok = true;
    for (int n = 1; n <= 6; ++n) ok &= verify_t_generation(g, n);
    report(4, "Id^z(G) is T-generated by [x,y] over T([[x,y],u]), containment + dimension, n <= 6",
           ok, t.seconds());
}

void criterion_5_cancellation() {
    Timer t;
    bool ok = true;
    NCPolynomial x1 = NCPolynomial::variable(1), x2 = NCPolynomial::variable(2),
                 x3 = NCPolynomial::variable(3);
    NCPolynomial triple = commutator(commutator(x1, x2), x3);
    for (int deg = 1; deg <= 5; ++deg) {
        std::mt19937_64 rng(0xC0FFEE + static_cast<std::uint64_t>(deg));
        for (int i = 0; i < 1000; ++i)
            ok &= check_lemma_cancellation2(random_multilinear(deg, rng));
        if (deg >= 3)
            for (const auto& h : t_ideal_multilinear({triple}, deg))
                ok &= check_lemma_cancellation2(h);
    }
    report(5, "x_n h central iff h an identity: 1000 random h per degree + Id(G) spanning sets",
           ok, t.seconds());
}

void criterion_6_dual_oracle() {
    Timer t;
    bool ok = true;
    for (int n = 1; n <= 5; ++n) {
        std::mt19937_64 rng(0xBEEF + static_cast<std::uint64_t>(n));
        for (int i = 0; i < 300; ++i) {
            MultilinearPolynomial h = random_multilinear(n, rng);
            ok &= is_identity_G(h) == is_identity_G_direct(h);
            ok &= is_central_G(h) == is_central_G_direct(h);
        }
    }
    report(6, "parity fast path = direct Grassmann evaluation on sparse inputs, n <= 5", ok,
           t.seconds());
}

void criterion_7_regev() {
    Timer t;
    PropertyLReport rep = check_property_L(2, 2);
    bool ok = rep.bijection_tuples == 576 && rep.all_scalar && rep.all_same_abs && rep.nonzero;
    ok &= rep.abs_value == 3;  // derived regression pin
    ok &= rep.proper_central();

    NCPolynomial g2 = g_poly(2, 2);
    MultilinearPolynomial m = multilinearize(g2, 2);
    ok &= is_central_Mk(m, 2) && !is_identity_Mk(m, 2);

    // slot alignment: polarized copy o of x_v <-> position of that
    // occurrence in the alternating-block monomial
    Word folded = regev_monomial(2, 2);
    for (int& v : folded) v = (v - 1) % 4 + 1;
    std::vector<int> seen(5, 0);
    std::vector<std::uint8_t> img;
    for (int v : folded) img.push_back(static_cast<std::uint8_t>((v - 1) * 2 + seen[v]++));
    GroupAlgebraElement aligned =
        left_translate(Permutation(img), semi_idempotent(regev_tableau(2, 2)));
    GroupAlgebraElement diff = m.algebra();
    diff -= aligned;  // d = 1, pinned
    ok &= diff.is_zero();

    double s = t.seconds();
    ok &= s <= 120.0;
    report(7, "property L over all 576 bijection pairs (|value| = 3); L, g2 proper central; "
              "multilinearized g2 = 1 * e_{T_nu}",
           ok, s);
}

void criterion_8_three_alphabets() {
    Timer t;
    PropertyLReport rep = check_property_L(2, 3);
    bool ok = rep.bijection_tuples == 13824 && rep.all_scalar && rep.all_same_abs && rep.nonzero;
    ok &= rep.abs_value == 12;  // derived regression pin
    ok &= rep.proper_central();
    double s = t.seconds();
    ok &= s <= 600.0;
    report(8, "three-alphabet L(x,y,z): proper central, property L analogue (|value| = 12)", ok,
           s);
}

void criterion_9_gluing() {
    Timer t;
    struct Case {
        Partition lambda, mu;
        Rational d;
    };
    // d values are derived pins under the fixed symmetrizer order
    std::vector<Case> cases{
        {Partition({2, 2}), Partition({1, 1}), 9},
        {Partition({1, 1}), Partition({1}), 2},
        {Partition({2, 1}), Partition({1}), 3},
        {Partition({2, 2}), Partition({2, 2}), 36},
        {Partition({2, 2, 2}), Partition({1, 1, 1}), 27},
    };
    bool ok = true;
    for (const Case& c : cases) {
        YoungTableau tl = YoungTableau::row_filled(c.lambda);
        YoungTableau tm = YoungTableau::row_filled(c.mu);
        NCPolynomial lhs = tableau_polynomial(glue_tableaux(tl, tm));
        NCPolynomial rhs = nc_multiply(tableau_polynomial(tl), tableau_polynomial(tm));
        rhs *= c.d;
        ok &= (lhs == rhs) && c.d > 0;
    }
    report(9, "gluing: e_{T_{lambda*mu}}(y) = d e_{T_lambda}(y) e_{T_mu}(y) on five pairs, d > 0",
           ok, t.seconds());
}

void criterion_10_sandwich() {
    Timer t;
    CocharEngine m(matrix_oracle(2));
    // c_n, c_n^z, delta_n, f^lambda: derived regression pins (matrix-unit
    // oracle as producer)
    struct Pin {
        int n, c, cz, delta;
        long f;
    };
    std::vector<Pin> pins{{2, 2, 2, 0, 0}, {3, 6, 6, 0, 0}, {4, 23, 21, 2, 2},
                          {5, 91, 75, 16, 5}, {6, 346, 266, 80, 9}};
    bool ok = true;
    for (const Pin& p : pins) {
        SandwichRecord sw = verify_sandwich(m, p.n, 2);
        ok &= sw.holds;
        ok &= sw.c_n == p.c && m.codimension(p.n, Variant::central) == p.cz && sw.delta == p.delta;
        ok &= sw.f_lambda == BigInt(p.f);
    }
    report(10, "matrix sandwich f^lambda <= delta_n(M_2) <= c_n(M_2), 2 <= n <= 6, pinned values",
           ok, t.seconds());
}

void criterion_11_rectangle_growth() {
    Timer t;
    bool ok = true;
    double prev = 0;
    for (int m = 1; m <= 50; ++m) {
        double g = rectangle_growth(2, m);
        ok &= (m == 1 || g > prev);
        ok &= g < 4.0;
        prev = g;
    }
    double at100 = rectangle_growth(2, 100);
    ok &= at100 > 3.4 && at100 < 4.0;
    ok &= std::abs(at100 - 3.6720319203) <= 1e-9 * at100;  // pinned value
    report(11, "rectangle dimensions: (f^(m^4))^(1/4m) strictly increasing to m = 50, > 3.4 at "
               "m = 100",
           ok, t.seconds());
}

void criterion_12_representation_base() {
    Timer t;
    bool ok = true;
    for (int n = 1; n <= 8; ++n) {
        BigInt sum = 0;
        for (const Partition& p : partitions_of(n)) {
            BigInt f = dimension(p);
            sum += f * f;
            ok &= f == BigInt(static_cast<long>(standard_tableaux(p).size()));
        }
        ok &= sum == factorial(static_cast<unsigned>(n));
    }
    for (int n = 2; n <= 7; ++n) {
        auto parts = partitions_of(n);
        for (const Partition& a : parts)
            for (const Partition& b : parts) {
                BigInt sum = 0;
                for (const Partition& c : parts)
                    sum += conjugacy_class_size(c) *
                           BigInt(static_cast<long>(character_value(a, c))) *
                           BigInt(static_cast<long>(character_value(b, c)));
                ok &= sum == (a == b ? factorial(static_cast<unsigned>(n)) : BigInt(0));
            }
    }
    report(12, "sum f^2 = n! and f = standard-tableau count (n <= 8); orthogonality (n <= 7)", ok,
           t.seconds());
}

std::string slurp(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

void criterion_13_determinism(const std::string& cli) {
    Timer t;
    RunConfig cfg;
    cfg.command = "grassmann";
    cfg.n_lo = 2;
    cfg.n_hi = 4;
    cfg.format = "json";
    bool ok = run_command(cfg).to_json_lines() == run_command(cfg).to_json_lines();
    if (!cli.empty()) {
        std::string base = "growth_acceptance_det";
        std::string p1 = "/tmp/" + base + "_1.jsonl";
        std::string p2 = "/tmp/" + base + "_2.jsonl";
        std::string cmd1 = cli + " grassmann --n 2..4 --format json --out " + p1;
        std::string cmd2 = cli + " grassmann --n 2..4 --format json --out " + p2;
        ok &= std::system(cmd1.c_str()) == 0;
        ok &= std::system(cmd2.c_str()) == 0;
        std::string a = slurp(p1), b = slurp(p2);
        ok &= !a.empty() && a == b;
        std::remove(p1.c_str());
        std::remove(p2.c_str());
    }
    report(13, "identical configs produce byte-identical JSON reports", ok, t.seconds());
}

}  // namespace

int main(int argc, char** argv) {
    std::string cli;
    bool only_slow = false;
    bool with_slow = false;
    for (int i = 1; i < argc; ++i) {
        std::string arg = argv[i];
        if (arg == "--cli" && i + 1 < argc) cli = argv[++i];
        else if (arg == "--only-slow") only_slow = true;
        else if (arg == "--with-slow") with_slow = true;
    }

    if (only_slow) {
        criterion_8_three_alphabets();
    } else {
        CocharEngine g(grassmann_oracle());
        criterion_1_codimensions(g);
        criterion_2_cocharacters(g);
        criterion_3_restriction(g);
        criterion_4_t_generation(g);
        criterion_5_cancellation();
        criterion_6_dual_oracle();
        criterion_7_regev();
        if (with_slow) criterion_8_three_alphabets();
        criterion_9_gluing();
        criterion_10_sandwich();
        criterion_11_rectangle_growth();
        criterion_12_representation_base();
        criterion_13_determinism(cli);
    }

    if (failures) std::printf("%d criterion(s) FAILED\n", failures);
    else std::printf("all criteria passed\n");
    return failures;
}
