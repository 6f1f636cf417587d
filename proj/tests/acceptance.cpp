// Acceptance run: one PASS/FAIL line per criterion, nonzero exit if any fails.
#include <chrono>
#include <fstream>
#include <functional>
#include <iomanip>
#include <iostream>
#include <random>
#include <sstream>
#include <string>
#include <thread>

#include <hurwitz/hurwitz.hpp>

#include "test_support.hpp"

using namespace hurwitz;

namespace {

struct Outcome {
    bool pass = true;
    std::string detail;

    void require(bool cond, const std::string& what)
    {
        if (!cond) {
            pass = false;
            detail += (detail.empty() ? "" : "; ") + what;
        }
    }
};

std::string join(const std::vector<int>& v)
{
    std::string s;
    for (int x : v) s += (s.empty() ? "" : ",") + std::to_string(x);
    return s;
}

Outcome max_table()
{
    Outcome o;
    std::vector<int> got;
    for (int n = 1; n <= 7; ++n) {
        const auto r = max_hurwitzian(make_alpha_O(n));
        o.require(r.exact, "n=" + std::to_string(n) + " not exhaustive");
        o.require(is_hurwitzian(make_alpha_O(n), r.witness) && static_cast<int>(r.witness.size()) == r.size,
                  "bad witness at n=" + std::to_string(n));
        got.push_back(r.size);
    }
    o.require(got == std::vector<int>{2, 4, 8, 8, 10, 12, 16}, "got " + join(got));
    if (o.pass) o.detail = "maxima " + join(got);
    return o;
}

Outcome constructions()
{
    Outcome o;
    for (int n : {2, 3, 5, 6, 7}) {
        const auto a = best_construction(n);
        o.require(static_cast<int>(a.size()) == rho(std::uint64_t{1} << n), "size at n=" + std::to_string(n));
        o.require(is_hurwitzian(make_alpha_O(n), a), "not Hurwitzian at n=" + std::to_string(n));
    }
    if (o.pass) o.detail = "sizes equal rho(2^n) for n = 2,3,5,6,7";
    return o;
}

Outcome hurwitz_radon()
{
    Outcome o;
    const std::vector<std::array<std::size_t, 3>> expected = {
        {2, 2, 2}, {4, 4, 4}, {8, 8, 8}, {10, 32, 32}, {12, 64, 64}, {16, 128, 128}};
    const int dims[] = {1, 2, 3, 5, 6, 7};
    for (std::size_t i = 0; i < expected.size(); ++i) {
        const auto id = hurwitz_radon_identity(dims[i]);
        const std::string tag = "[" + std::to_string(expected[i][0]) + "," + std::to_string(expected[i][1]) + "]";
        o.require(id.size() == expected[i], "size " + tag);
        o.require(verify_symbolic(id).holds, "verification " + tag);
    }
    if (o.pass) o.detail = "six identities verified by expansion";
    return o;
}

Outcome golay_example()
{
    Outcome o;
    const auto a = hurwitzian_from_hadamard(hadamard_paley(11));
    o.require(a.dim() == 11 && a.size() == 24, "Paley set has wrong shape");
    o.require(is_hurwitzian(make_alpha_O(11), a), "Paley set not Hurwitzian");
    const auto id = identity_for_set(a);
    o.require(id.size() == std::array<std::size_t, 3>{24, 2048, 2048}, "identity size");
    o.require(verify_symbolic(id).holds, "[24,2048,2048] not verified");
    std::ifstream in(std::string(HURWITZ_FIXTURES) + "/golay_h1_h2.txt");
    o.require(static_cast<bool>(in), "fixture missing");
    if (in) {
        const auto printed = read_vecset(in);
        o.require(printed.dim() == 11 && printed.size() == 24, "printed rows are not 24 distinct vectors");
        o.require(is_hurwitzian(make_alpha_O(11), printed), "printed rows not Hurwitzian");
    }
    if (o.pass) o.detail = "Paley and printed H1/H2 sets: 24 vectors, identity verified";
    return o;
}

Outcome conjecture()
{
    Outcome o;
    const auto rep = conjecture_check_n4(std::max(1U, std::thread::hardware_concurrency()));
    o.require(rep.forms == 16384, "form count");
    o.require(rep.global_max <= 8, "global max " + std::to_string(rep.global_max));
    if (o.pass) o.detail = "global max " + std::to_string(rep.global_max) + " over 16384 forms";
    return o;
}

Outcome properties()
{
    Outcome o;
    std::mt19937_64 rng(2024);
    for (int n = 1; n <= 6; ++n)
        for (int t = 0; t < 10; ++t) {
            const auto alpha = gen::random_cubic(n, rng);
            const auto rep = check_properties(alpha, twist_from_cubic(alpha));
            const bool exhaustive = rep.commutator.exhaustive && rep.associator.exhaustive &&
                                    rep.linear_second.exhaustive && rep.diagonal.exhaustive;
            o.require(rep.all() && exhaustive, "properties for " + to_text(alpha));
        }
    for (int n = 1; n <= 8; ++n) {
        const auto rep = check_properties(make_alpha_O(n), twist_from_cubic(make_alpha_O(n)));
        o.require(rep.all() && rep.associator.exhaustive && rep.linear_second.exhaustive,
                  "properties for alpha_O at n=" + std::to_string(n));
    }

    for (int n = 4; n <= 5; ++n)
        for (int t = 0; t < 20; ++t) {
            const auto base = TruthTable::of(gen::random_cubic(n, rng));
            for (std::uint64_t m = 0; m < (std::uint64_t{1} << n); ++m) {
                if (std::popcount(m) != 4) continue;
                o.require(!is_degree_le3(base + TruthTable::monomial(n, mask_indices(n, m))), "degree-4 term accepted");
            }
        }

    int agree = 0;
    for (int t = 0; t < 250; ++t) {
        const int n = 1 + static_cast<int>(rng() % 4);
        const std::size_t space = std::size_t{1} << n;
        const auto alpha = gen::random_cubic(n, rng);
        const auto a = gen::random_set(n, 1 + rng() % space, rng);
        const auto b = gen::random_set(n, 1 + rng() % space, rng);
        agree += lemma_condition(alpha, a, b) == verify_symbolic(build_identity(twist_from_cubic(alpha), a, b)).holds;
    }
    o.require(agree == 250, "lemma/symbolic disagreement on " + std::to_string(250 - agree) + " of 250");

    const auto id4 = hurwitz_radon_identity(2);
    for (std::size_t k = 0; k < id4.term_count(); ++k)
        o.require(!verify_symbolic(id4.with_flipped_sign(k)).holds, "undetected flip " + std::to_string(k));

    for (int t = 0; t < 120; ++t) {
        const int n = 2 + static_cast<int>(rng() % 5);
        const std::size_t cap = std::min<std::size_t>(8, std::size_t{1} << n);
        const auto a = gen::random_set(n, 1 + rng() % cap, rng);
        const auto b = gen::random_set(n, 1 + rng() % cap, rng);
        std::uint64_t ordered = 0;
        for (auto x : a)
            for (auto x2 : a)
                for (auto y : b)
                    for (auto y2 : b) ordered += x != x2 && y != y2 && x + x2 == y + y2;
        o.require(count_proper_quadruples(a, b) * 4 == ordered, "quadruple count mismatch");
    }
    if (o.pass) o.detail = "polarization, degree test, lemma, mutation and quadruple checks";
    return o;
}

Outcome quadruple_substitute()
{
    Outcome o;
    std::mt19937_64 rng(7);
    for (int t = 0; t < 300; ++t) {
        const int n = 1 + static_cast<int>(rng() % 6);
        const std::size_t space = std::size_t{1} << n;
        const auto alpha = gen::random_cubic(n, rng);
        const auto a = gen::random_set(n, 1 + rng() % space, rng);
        const auto b = gen::random_set(n, 1 + rng() % space, rng);
        o.require(hypothesis_check(alpha, a, b) == lemma_condition(alpha, a, b), "hypothesis differs from lemma");
    }
    std::ostringstream ratios;
    for (int n = 2; n <= 7; ++n) {
        const auto r = quadruple_report(make_alpha_O(n), best_construction(n), VecSet::full(n));
        o.require(r.hypothesis_holds, "hypothesis fails for construction at n=" + std::to_string(n));
        ratios << (n > 2 ? " " : "") << n << ':' << static_cast<int>(r.ratio * 100 + 0.5) / 100.0;
    }
    if (o.pass) o.detail = "equivalence on 300 instances; |A+B|/|A|^1.2 = " + ratios.str() + " (informational)";
    return o;
}

} // namespace

int main()
{
    const std::vector<std::pair<std::string, std::function<Outcome()>>> criteria = {
        {"1 alpha_O maximum table n=1..7", max_table},
        {"2 constructions reach rho(2^n)", constructions},
        {"3 Hurwitz-Radon identities", hurwitz_radon},
        {"4 Hadamard order-12 example", golay_example},
        {"5 no set of size 9 for any cubic form at n=4", conjecture},
        {"6 property suites", properties},
        {"7 quadruple hypothesis vs lemma (substitute check)", quadruple_substitute},
    };
    int failed = 0;
    for (const auto& [name, fn] : criteria) {
        const auto start = std::chrono::steady_clock::now();
        Outcome o;
        try {
            o = fn();
        } catch (const std::exception& e) {
            o.pass = false;
            o.detail = std::string("exception: ") + e.what();
        }
        const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
        std::cout << (o.pass ? "PASS" : "FAIL") << "  criterion " << name << " (" << std::fixed
                  << std::setprecision(2) << secs << " s): " << o.detail << std::endl;
        failed += !o.pass;
    }
    return failed == 0 ? 0 : 1;
}
