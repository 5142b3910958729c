#include "growth/report.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <random>
#include <sstream>

#include "growth/cochar.hpp"
#include "growth/errors.hpp"
#include "growth/grassmann.hpp"
#include "growth/matalg.hpp"
#include "growth/symgroup.hpp"

namespace growth {

namespace {

using json = nlohmann::ordered_json;

std::string format_double(double v) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.12g", v);
    return buf;
}

json config_echo(const RunConfig& cfg) {
    json j;
    j["command"] = cfg.command;
    j["n"] = std::to_string(cfg.n_lo) + ".." + std::to_string(cfg.n_hi);
    if (cfg.command == "growth") j["m"] = std::to_string(cfg.m_lo) + ".." + std::to_string(cfg.m_hi);
    j["k"] = cfg.k;
    j["format"] = cfg.format;
    j["seed"] = cfg.seed;
    j["budget_gib"] = cfg.budget_gib;
    j["slow"] = cfg.slow;
    return j;
}

json checks_json(const std::vector<CheckResult>& checks) {
    json arr = json::array();
    for (const CheckResult& c : checks) {
        json j;
        j["name"] = c.name;
        j["pass"] = c.pass;
        if (!c.detail.empty()) j["detail"] = c.detail;
        arr.push_back(std::move(j));
    }
    return arr;
}

json cochar_json(const CocharacterDecomposition& dec) {
    json j = json::object();
    for (const Partition& p : partitions_of(dec.n)) {
        long long m = dec.at(p);
        if (m != 0) j[p.to_string()] = m;
    }
    return j;
}

struct Recorder {
    Report& report;
    std::vector<CheckResult> local;

    void check(const std::string& name, bool pass, const std::string& detail = "") {
        local.push_back({name, pass, detail});
        report.checks.push_back(local.back());
    }
    json flush_into(json record) {
        record["checks"] = checks_json(local);
        local.clear();
        if (report.config.line_sink) report.config.line_sink(record.dump());
        return record;
    }
};

json header_json(const RunConfig& cfg) {
    json header;
    header["schema"] = "growth-report/1";
    header["config"] = config_echo(cfg);
    return header;
}

json summary_json(const Report& rep) {
    json summary;
    summary["summary"]["checks"] = static_cast<int>(rep.checks.size());
    summary["summary"]["failed"] = rep.checks_failed();
    summary["summary"]["pass"] = rep.all_passed();
    if (rep.config.timings) summary["summary"]["seconds"] = rep.elapsed_seconds;
    return summary;
}

void apply_budget(CocharEngine& engine, const RunConfig& cfg, int n_hi) {
    if (n_hi <= engine.budget()) return;
    if (!cfg.budget_overridden)
        throw BudgetExceeded(engine.oracle().name() + ": n = " + std::to_string(n_hi) +
                             " is past the default budget n <= " +
                             std::to_string(engine.budget()) + "; pass --budget-gib to override");
    double est = estimate_gib(engine.oracle().name(), cfg.k, n_hi);
    if (est > 2.0)
        std::cerr << "# memory estimate for " << engine.oracle().name() << " at n=" << n_hi << ": "
                  << format_double(est) << " GiB\n";
    if (est > cfg.budget_gib)
        throw BudgetExceeded("estimated " + format_double(est) + " GiB exceeds --budget-gib " +
                             format_double(cfg.budget_gib));
    engine.set_budget(n_hi);
}

CocharacterDecomposition expected_hooks(int n, int leg_mod2) {
    // leg_mod2: -1 = all hooks, 0 = even legs, 1 = odd legs
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

long long pow2(int e) { return e < 0 ? 0 : (1LL << e); }

}  // namespace

bool Report::all_passed() const {
    for (const CheckResult& c : checks)
        if (!c.pass) return false;
    return true;
}

int Report::checks_failed() const {
    int n = 0;
    for (const CheckResult& c : checks)
        if (!c.pass) ++n;
    return n;
}

std::string Report::to_json_lines() const {
    std::ostringstream os;
    os << header_json(config).dump() << '\n';
    for (const json& r : records) os << r.dump() << '\n';
    os << summary_json(*this).dump() << '\n';
    return os.str();
}

std::string Report::to_csv() const {
    std::ostringstream os;
    for (std::size_t i = 0; i < csv_header.size(); ++i) {
        if (i) os << ',';
        os << csv_header[i];
    }
    os << '\n';
    for (const auto& row : csv_rows) {
        for (std::size_t i = 0; i < row.size(); ++i) {
            if (i) os << ',';
            os << row[i];
        }
        os << '\n';
    }
    return os.str();
}

std::string Report::to_text() const {
    std::ostringstream os;
    os << "command: " << config.command << "\n";
    std::vector<std::size_t> widths(csv_header.size());
    for (std::size_t i = 0; i < csv_header.size(); ++i) widths[i] = csv_header[i].size();
    for (const auto& row : csv_rows)
        for (std::size_t i = 0; i < row.size() && i < widths.size(); ++i)
            widths[i] = std::max(widths[i], row[i].size());
    auto line = [&](const std::vector<std::string>& row) {
        for (std::size_t i = 0; i < row.size(); ++i) {
            if (i) os << "  ";
            os << row[i];
            for (std::size_t p = row[i].size(); p < widths[std::min(i, widths.size() - 1)]; ++p)
                os << ' ';
        }
        os << '\n';
    };
    if (!csv_header.empty()) line(csv_header);
    for (const auto& row : csv_rows) line(row);
    int shown = 0;
    for (const CheckResult& c : checks)
        if (!c.pass) {
            os << "FAIL " << c.name << (c.detail.empty() ? "" : ": " + c.detail) << '\n';
            ++shown;
        }
    os << "checks: " << checks.size() << ", failed: " << checks_failed()
       << (all_passed() ? " (all passed)" : "") << '\n';
    return os.str();
}

std::string Report::render() const {
    if (config.format == "json") return to_json_lines();
    if (config.format == "csv") return to_csv();
    return to_text();
}

double estimate_gib(const std::string& oracle, int k, int n) {
    double fact = 1;
    for (int i = 2; i <= n; ++i) fact *= i;
    double bytes = 0;
    if (oracle == "G") {
        double eps = std::ldexp(1.0, n);
        bytes = fact * eps            // int8 sign matrix
                + (eps / 2) * fact * 8  // echelon basis
                + fact * 64;            // permutation tables
    } else {
        double units = static_cast<double>(k) * k;
        double rank_bound = std::min(fact, std::pow(units, n) * units);
        bytes = rank_bound * fact * 8 + fact * 64;
    }
    return bytes / (1024.0 * 1024.0 * 1024.0);
}

Report run_grassmann(const RunConfig& cfg) {
    Report rep;
    rep.config = cfg;
    rep.csv_header = {"n", "c_n", "c_n_z", "delta_n"};
    int lo = cfg.n_lo ? cfg.n_lo : 2;
    int hi = cfg.n_hi ? cfg.n_hi : 8;

    CocharEngine engine(grassmann_oracle());
    apply_budget(engine, cfg, hi);
    Recorder rec{rep, {}};
    // Cocharacters cost far more than codimensions; past this degree the
    // per-n record carries codimension data only.
    constexpr int kCocharLimit = 8;
    constexpr int kTGenLimit = 6;

    for (int n = lo; n <= hi; ++n) {
        int c = engine.codimension(n, Variant::plain);
        int cz = engine.codimension(n, Variant::central);
        int delta = engine.delta(n);
        json record;
        record["n"] = n;
        record["c_n"] = c;
        record["c_n_z"] = cz;
        record["delta_n"] = delta;
        rec.check("c_n(G) = 2^(n-1) at n=" + std::to_string(n), c == pow2(n - 1));
        if (n >= 2) {
            rec.check("c_n^z(G) = 2^(n-2) at n=" + std::to_string(n), cz == pow2(n - 2));
            rec.check("delta_n(G) = 2^(n-2) at n=" + std::to_string(n), delta == pow2(n - 2));
        } else {
            rec.check("c_1^z(G) = 1", cz == 1);
            rec.check("delta_1(G) = 0", delta == 0);
        }
        if (n <= kCocharLimit) {
            CocharacterDecomposition plain = engine.cocharacter(n, Variant::plain);
            CocharacterDecomposition central = engine.cocharacter(n, Variant::central);
            CocharacterDecomposition dmod = engine.d_module_character(n);
            record["cocharacter"] = cochar_json(plain);
            record["central_cocharacter"] = cochar_json(central);
            record["d_module_character"] = cochar_json(dmod);
            rec.check("plain cocharacter = hooks at n=" + std::to_string(n),
                      plain == expected_hooks(n, -1));
            rec.check("central cocharacter = even-leg hooks at n=" + std::to_string(n),
                      central == expected_hooks(n, 0));
            rec.check("D_n character = odd-leg hooks at n=" + std::to_string(n),
                      dmod == expected_hooks(n, 1));
            if (n >= 2)
                rec.check("restriction isomorphism at n=" + std::to_string(n),
                          verify_restriction_isomorphism(engine, n));
        }
        if (n <= kTGenLimit)
            rec.check("T-generation at n=" + std::to_string(n), verify_t_generation(engine, n));
        if (n >= 2 && n <= 7) {
            std::mt19937_64 rng(cfg.seed + 1000003ULL * static_cast<std::uint64_t>(n));
            bool ok = true;
            for (int i = 0; i < 25 && ok; ++i)
                ok = check_lemma_cancellation2(random_multilinear(n - 1, rng));
            rec.check("cancellation lemma spot checks at n=" + std::to_string(n), ok);
        }
        rep.records.push_back(rec.flush_into(std::move(record)));
        rep.csv_rows.push_back({std::to_string(n), std::to_string(c), std::to_string(cz),
                                std::to_string(delta)});
    }
    return rep;
}

Report run_matrix(const RunConfig& cfg) {
    Report rep;
    rep.config = cfg;
    rep.csv_header = {"n", "c_n", "c_n_z", "delta_n", "f_lambda", "ratio"};
    int lo = cfg.n_lo ? cfg.n_lo : 2;
    int hi = cfg.n_hi ? cfg.n_hi : 6;
    int k = cfg.k;

    CocharEngine engine(matrix_oracle(k));
    apply_budget(engine, cfg, hi);
    Recorder rec{rep, {}};

    for (int n = lo; n <= hi; ++n) {
        int c = engine.codimension(n, Variant::plain);
        int cz = engine.codimension(n, Variant::central);
        int delta = engine.delta(n);
        json record;
        record["n"] = n;
        record["c_n"] = c;
        record["c_n_z"] = cz;
        record["delta_n"] = delta;
        Rational ratio = c == 0 ? Rational(0) : Rational(cz, c);
        ratio.canonicalize();
        record["ratio_cz_over_c"] = to_string(ratio);
        rec.check("Id(A) inside Id^z(A) at n=" + std::to_string(n), cz <= c);
        std::string f_cell = "0";
        if (k == 1) {
            rec.check("every multilinear polynomial is central at n=" + std::to_string(n), cz == 0);
        } else {
            SandwichRecord sw = verify_sandwich(engine, n, k);
            record["f_lambda"] = to_string(sw.f_lambda);
            record["lambda"] = sw.lambda.to_string();
            rec.check("sandwich f^lambda <= delta_n <= c_n at n=" + std::to_string(n), sw.holds,
                      "f=" + to_string(sw.f_lambda) + " delta=" + std::to_string(sw.delta) +
                          " c=" + std::to_string(sw.c_n));
            f_cell = to_string(sw.f_lambda);
        }
        rep.records.push_back(rec.flush_into(std::move(record)));
        rep.csv_rows.push_back({std::to_string(n), std::to_string(c), std::to_string(cz),
                                std::to_string(delta), f_cell, to_string(ratio)});
    }
    return rep;
}

namespace {

// Proportionality h == d * ref with d nonzero; returns (holds, d).
std::pair<bool, Rational> proportional(const GroupAlgebraElement& h, const GroupAlgebraElement& ref) {
    if (ref.is_zero() || h.is_zero()) return {false, 0};
    const auto& [p0, c0] = *ref.terms().begin();
    Rational d = h.coefficient(p0) / c0;
    if (d == 0) return {false, 0};
    GroupAlgebraElement diff = h;
    GroupAlgebraElement scaled = ref;
    scaled *= d;
    diff -= scaled;
    return {diff.is_zero(), d};
}

// The permutation sending slot position to the polarized variable occupying
// it in the base monomial: occurrence o of variable v maps to (v-1)s + o + 1.
Permutation slot_alignment(const Word& folded, int s) {
    std::vector<int> seen(static_cast<std::size_t>(folded.size()) + 1, 0);
    std::vector<std::uint8_t> img;
    img.reserve(folded.size());
    for (int v : folded) {
        img.push_back(static_cast<std::uint8_t>((v - 1) * s + seen[static_cast<std::size_t>(v)]));
        ++seen[static_cast<std::size_t>(v)];
    }
    return Permutation(std::move(img));
}

struct GluingCase {
    Partition lambda;
    Partition mu;
};

}  // namespace

Report run_regev(const RunConfig& cfg) {
    Report rep;
    rep.config = cfg;
    rep.csv_header = {"check", "value", "pass"};
    int k = cfg.k;
    Recorder rec{rep, {}};
    auto emit = [&](const std::string& name, const std::string& value, bool pass) {
        json r;
        r["name"] = name;
        r["value"] = value;
        r["pass"] = pass;
        rep.records.push_back(rec.flush_into(std::move(r)));
        rep.csv_rows.push_back({name, value, pass ? "true" : "false"});
    };

    PropertyLReport two = check_property_L(k, 2, cfg.budget_overridden);
    rec.check("property L (s=2): every bijection pair scalar", two.all_scalar);
    rec.check("property L (s=2): common nonzero |value|", two.all_same_abs && two.nonzero);
    emit("property_L_s2_abs_value", to_string(two.abs_value),
         two.all_scalar && two.all_same_abs && two.nonzero);
    if (k <= 2) {
        rec.check("L(x,y) proper central", two.proper_central());
        emit("L_s2_proper_central", two.proper_central() ? "yes" : "no", two.proper_central());
    }

    if (k <= 2) {
        NCPolynomial g2 = g_poly(k, 2);
        MultilinearPolynomial m = multilinearize(g2, 2);
        bool central = is_central_Mk(m, k);
        bool identity = is_identity_Mk(m, k);
        rec.check("g2 proper central via full multilinearization", central && !identity);
        emit("g2_proper_central", central && !identity ? "yes" : "no", central && !identity);

        YoungTableau t_nu = regev_tableau(k, 2);
        Word folded = regev_monomial(k, 2);
        for (int& v : folded) v = (v - 1) % (k * k) + 1;
        GroupAlgebraElement aligned =
            left_translate(slot_alignment(folded, 2), semi_idempotent(t_nu));
        auto [prop, d] = proportional(m.algebra(), aligned);
        rec.check("multilinearized g2 = d * e_{T_nu} (slot-aligned)", prop && d != 0);
        emit("g2_e_T_nu_ratio", to_string(d), prop && d != 0);
    }

    std::vector<GluingCase> cases{
        {Partition({1, 1}), Partition({1})},
        {Partition({2, 2}), Partition({1, 1})},
        {Partition({2, 1}), Partition({1})},
        {Partition({2, 2}), Partition({2, 2})},
        {Partition({2, 2, 2}), Partition({1, 1, 1})},
    };
    for (const GluingCase& gc : cases) {
        YoungTableau tl = YoungTableau::row_filled(gc.lambda);
        YoungTableau tm = YoungTableau::row_filled(gc.mu);
        YoungTableau glued = glue_tableaux(tl, tm);
        NCPolynomial lhs = tableau_polynomial(glued);
        NCPolynomial rhs = nc_multiply(tableau_polynomial(tl), tableau_polynomial(tm));
        Rational d = 0;
        bool holds = false;
        if (!rhs.is_zero() && !lhs.is_zero()) {
            const auto& [w0, c0] = *rhs.terms().begin();
            d = lhs.coefficient(w0) / c0;
            NCPolynomial scaled = rhs;
            scaled *= d;
            holds = (lhs == scaled) && d > 0;
        }
        std::string name = "gluing (" + gc.lambda.to_string() + ")*(" + gc.mu.to_string() + ")";
        rec.check(name + " with positive d", holds);
        emit(name, "d=" + to_string(d), holds);
    }

    if (cfg.slow) {
        PropertyLReport three = check_property_L(k, 3, cfg.budget_overridden);
        rec.check("property L (s=3): every bijection triple scalar", three.all_scalar);
        rec.check("property L (s=3): common nonzero |value|", three.all_same_abs && three.nonzero);
        emit("property_L_s3_abs_value", to_string(three.abs_value),
             three.all_scalar && three.all_same_abs && three.nonzero);
        if (k <= 2) {
            rec.check("L(x,y,z) proper central", three.proper_central());
            emit("L_s3_proper_central", three.proper_central() ? "yes" : "no",
                 three.proper_central());
        }
    }
    return rep;
}

Report run_growth(const RunConfig& cfg) {
    Report rep;
    rep.config = cfg;
    rep.csv_header = {"kind", "k", "index", "exact", "value"};
    int k = cfg.k;
    int m_lo = cfg.m_lo ? cfg.m_lo : 1;
    int m_hi = cfg.m_hi ? cfg.m_hi : 50;
    Recorder rec{rep, {}};

    double prev = 0;
    bool increasing = true;
    bool bounded = true;
    bool all_one = true;
    for (int m = m_lo; m <= m_hi; ++m) {
        Partition mu(std::vector<int>(static_cast<std::size_t>(k) * k, m));
        BigInt f = dimension(mu);
        double g = rectangle_growth(k, m);
        if (m > m_lo && g <= prev) increasing = false;
        if (g >= static_cast<double>(k) * k) bounded = false;
        if (g != 1.0) all_one = false;
        prev = g;
        json r;
        r["kind"] = "rectangle";
        r["k"] = k;
        r["m"] = m;
        r["f"] = to_string(f);
        r["growth"] = g;
        r["precision"] = "1e-9";
        rep.records.push_back(rec.flush_into(std::move(r)));
        rep.csv_rows.push_back({"rectangle", std::to_string(k), std::to_string(m), to_string(f),
                                format_double(g)});
    }
    if (k == 1)
        rec.check("k=1 rectangles are trivial (growth = 1)", all_one);
    else
        rec.check("rectangle growth strictly increasing on the range", increasing);
    rec.check("rectangle growth bounded above by k^2", bounded);
    {
        json r;
        r["kind"] = "rectangle_summary";
        rep.records.push_back(rec.flush_into(std::move(r)));
    }

    if (k <= 2) {
        CocharEngine engine(matrix_oracle(k));
        int lo = cfg.n_lo ? cfg.n_lo : 2;
        int hi = cfg.n_hi ? cfg.n_hi : std::min(6, engine.budget());
        apply_budget(engine, cfg, hi);
        for (int n = lo; n <= hi; ++n) {
            int delta = engine.delta(n);
            double root = delta == 0 ? 0.0 : std::pow(static_cast<double>(delta), 1.0 / n);
            json r;
            r["kind"] = "trend";
            r["n"] = n;
            r["delta"] = delta;
            r["delta_root"] = root;
            rep.records.push_back(rec.flush_into(std::move(r)));
            rep.csv_rows.push_back({"trend", std::to_string(k), std::to_string(n),
                                    std::to_string(delta), format_double(root)});
        }
    }
    return rep;
}

Report run_command(const RunConfig& cfg) {
    auto t0 = std::chrono::steady_clock::now();
    if (cfg.line_sink) cfg.line_sink(header_json(cfg).dump());
    Report rep;
    if (cfg.command == "grassmann") rep = run_grassmann(cfg);
    else if (cfg.command == "matrix") rep = run_matrix(cfg);
    else if (cfg.command == "regev") rep = run_regev(cfg);
    else if (cfg.command == "growth") rep = run_growth(cfg);
    else throw std::invalid_argument("unknown command: " + cfg.command);
    rep.elapsed_seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    if (cfg.line_sink) cfg.line_sink(summary_json(rep).dump());
    return rep;
}

std::string write_report(const Report& report) {
    std::string bytes = report.render();
    if (!report.config.out_path.empty()) {
        std::ofstream out(report.config.out_path, std::ios::binary);
        if (!out) throw std::runtime_error("cannot open " + report.config.out_path);
        out << bytes;
    }
    return bytes;
}

}  // namespace growth
