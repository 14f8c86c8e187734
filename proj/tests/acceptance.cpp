// Acceptance gate: eleven numbered criteria, each printing exactly one
// "criterion N: PASS/FAIL" line with its elapsed time and a short detail.
// Exit status is 0 iff every executed criterion passes within its time limit.
//
// Criteria 5, 6 and 8 check claims in their literally stated form, which the
// verification work shows to be false; they are expected to FAIL and print
// the first counterexample.  Running with --corrected switches those three
// criteria to the corrected statements, which pass.  Everything else is
// expected to PASS as stated.

#include <chrono>
#include <cmath>
#include <cstdint>
#include <cstring>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "diatomic/beatty.hpp"
#include "diatomic/contfrac.hpp"
#include "diatomic/fibonacci.hpp"
#include "diatomic/fibrep.hpp"
#include "diatomic/sigma_binet.hpp"
#include "diatomic/stern.hpp"
#include "diatomic/verify.hpp"
#include "diatomic/workspace.hpp"

using namespace diatomic;

namespace {

// Pinned numeric contract for the analytic criteria.
constexpr double kInvSqrt5 = 0.44721359549995793928;
constexpr double kRatioTol = 1e-6;            // criterion 8 limit ratio
constexpr double kSweepWindowLo = 0.4470;     // criterion 8 literal window
constexpr double kSweepWindowHi = 0.4473;
constexpr double kMertensTolPerTerm = 1e-6;   // criterion 9
constexpr double kClosedFormTol = 1e-9;       // criterion 10
constexpr double kProbeTol = 1e-3;            // criterion 10

struct Outcome {
    bool pass = true;
    std::string detail;
};

void note(Outcome& o, const std::string& text) {
    if (!o.detail.empty()) o.detail += "; ";
    o.detail += text;
}

// Run one verification suite at the given bound (0 = suite default) and fold
// the result into the outcome.
void fold_suite(Outcome& o, const char* name, uint64_t bound = 0) {
    Workspace ws;
    VerifyOptions opt;
    opt.bound = bound;
    const SuiteResult r = verify_run(name, ws, opt);
    if (r.failures == 0) {
        note(o, std::string(name) + " ok (" + std::to_string(r.cases) +
                    " cases)");
    } else {
        o.pass = false;
        std::string ex = r.examples.empty() ? r.summary : r.examples.front();
        note(o, std::string(name) + " FAILED " + std::to_string(r.failures) +
                    "/" + std::to_string(r.cases) + " [" + ex + "]");
    }
}

uint64_t fib_u(unsigned n) { return fib(n).convert_to<uint64_t>(); }

// ---------------------------------------------------------------- criteria

Outcome criterion_1(bool) {
    Outcome o;
    fold_suite(o, "printed-prefixes");
    return o;
}

Outcome criterion_2(bool) {
    Outcome o;
    fold_suite(o, "thm-3-6", 65536);
    return o;
}

Outcome criterion_3(bool) {
    Outcome o;
    fold_suite(o, "stern-bijection", 200);
    fold_suite(o, "thm-3-11", 300);
    return o;
}

Outcome criterion_4(bool) {
    Outcome o;
    fold_suite(o, "box-inverse", 12);
    fold_suite(o, "thm-3-9", 12);
    fold_suite(o, "f-powers", 18);
    return o;
}

Outcome criterion_5(bool corrected) {
    Outcome o;
    fold_suite(o, "r-oracle", 100000);
    fold_suite(o, "lemma-4-6", 20);
    fold_suite(o, "mediant", 20);
    fold_suite(o, "crushed-r", 22);
    if (corrected) {
        fold_suite(o, "row-symmetry", 20);
        return o;
    }
    // Literal row reflection: R_{F_m + k} == R_{F_{m+1} - k} over the row.
    RTable table;
    table.ensure(fib_u(22));
    uint64_t checked = 0, bad = 0;
    std::string first;
    for (unsigned m = 4; m <= 20; ++m) {
        for (uint64_t k = 0; k <= fib_u(m - 1); ++k) {
            ++checked;
            const BigInt& lhs = table.at(fib_u(m) + k);
            const BigInt& rhs = table.at(fib_u(m + 1) - k);
            if (lhs != rhs) {
                ++bad;
                if (first.empty()) {
                    std::ostringstream os;
                    os << "m=" << m << " k=" << k << ": R_" << fib_u(m) + k
                       << "=" << lhs << " but R_" << fib_u(m + 1) - k << "="
                       << rhs;
                    first = os.str();
                }
            }
        }
    }
    if (bad > 0) {
        o.pass = false;
        note(o, "literal row reflection fails " + std::to_string(bad) + "/" +
                    std::to_string(checked) + " [first: " + first +
                    "]; the index-shifted form passes (--corrected)");
    } else {
        note(o, "literal row reflection ok (" + std::to_string(checked) +
                    " cases)");
    }
    return o;
}

Outcome criterion_6(bool corrected) {
    Outcome o;
    fold_suite(o, "thm-4-2", 10000);
    fold_suite(o, "thm-4-3", 10000);
    fold_suite(o, "beatty-partition", 10000);
    fold_suite(o, "triple-rho", 10000);
    if (corrected) {
        fold_suite(o, "alpha-beta", 5000);
        return o;
    }
    // Literal introduction claims: R_{alpha(n)} == R_n and
    // R_{beta(n)} == R_n + R_{n+1} for the stated Beatty-like maps.
    RTable table;
    BigInt top = beta_beatty(BigInt(5000)) + 2;
    table.ensure(top.convert_to<size_t>());
    uint64_t checked = 0, bad = 0;
    std::string first;
    for (uint64_t n = 1; n <= 5000; ++n) {
        const uint64_t a = alpha_beatty(BigInt(n)).convert_to<uint64_t>();
        const uint64_t b = beta_beatty(BigInt(n)).convert_to<uint64_t>();
        ++checked;
        if (table.at(a) != table.at(n)) {
            ++bad;
            if (first.empty()) {
                std::ostringstream os;
                os << "alpha: n=" << n << ": R_" << a << "=" << table.at(a)
                   << " but R_" << n << "=" << table.at(n);
                first = os.str();
            }
        }
        ++checked;
        if (table.at(b) != table.at(n) + table.at(n + 1)) {
            ++bad;
            if (first.empty()) {
                std::ostringstream os;
                os << "beta: n=" << n << ": R_" << b << "=" << table.at(b)
                   << " but R_" << n << "+R_" << n + 1 << "="
                   << table.at(n) + table.at(n + 1);
                first = os.str();
            }
        }
    }
    if (bad > 0) {
        o.pass = false;
        note(o, "literal alpha/beta transport fails " + std::to_string(bad) +
                    "/" + std::to_string(checked) + " [first: " + first +
                    "]; the shifted form passes (--corrected)");
    } else {
        note(o, "literal alpha/beta transport ok");
    }
    return o;
}

Outcome criterion_7(bool) {
    Outcome o;
    fold_suite(o, "sigma-binet-stern", 4096);
    fold_suite(o, "c-integrality", 5000);
    fold_suite(o, "thm-5-1", 18);
    fold_suite(o, "cor-5-2", 18);
    return o;
}

Outcome criterion_8(bool corrected) {
    Outcome o;
    const double r = coons_tyler_ratio(jacobsthal(30).convert_to<uint64_t>());
    if (std::fabs(r - kInvSqrt5) <= kRatioTol) {
        note(o, "limit ratio at the Jacobsthal index ok (" +
                    std::to_string(r) + ")");
    } else {
        o.pass = false;
        note(o, "limit ratio off: got " + std::to_string(r));
    }
    if (corrected) {
        fold_suite(o, "coons-tyler", uint64_t{1} << 20);
        return o;
    }
    const auto [mx, arg] = coons_tyler_max(2, uint64_t{1} << 20);
    if (mx >= kSweepWindowLo && mx <= kSweepWindowHi) {
        note(o, "sweep max in the stated window");
    } else {
        o.pass = false;
        std::ostringstream os;
        os << "sweep max over [2, 2^20] is " << mx << " at n=" << arg
           << ", outside the stated window [" << kSweepWindowLo << ", "
           << kSweepWindowHi
           << "]; restated windows pass (--corrected)";
        note(o, os.str());
    }
    return o;
}

Outcome criterion_9(bool) {
    Outcome o;
    const auto mu = mobius_sieve(2000);
    // Independent prefix sums of mu(q) over 2 <= q < x: the exponential side
    // ranges over reduced fractions in (0,1), which excludes q = 1 entirely
    // and admits denominator q only while q < x.
    int64_t mert = 0;
    uint64_t next = 1;
    const std::vector<uint64_t> xs = {100, 500, 2000};
    for (uint64_t x : xs) {
        while (next + 1 < x) {
            ++next;
            mert += mu[next];
        }
        const ExpSum s = stern_exponential_sum(x);
        const double tol =
            kMertensTolPerTerm * std::max<double>(1.0, double(s.terms));
        const double err =
            std::abs(s.value - std::complex<double>(double(mert), 0.0));
        if (s.mertens == mert && err <= tol) {
            std::ostringstream os;
            os << "x=" << x << " ok (M=" << mert << ", " << s.terms
               << " terms, err " << err << ")";
            note(o, os.str());
        } else {
            o.pass = false;
            std::ostringstream os;
            os << "x=" << x << ": sum " << s.value.real() << "+"
               << s.value.imag() << "i vs Mertens " << mert << " (tol " << tol
               << ")";
            note(o, os.str());
        }
    }
    return o;
}

Outcome criterion_10(bool) {
    Outcome o;
    const double phi = (1.0 + std::sqrt(5.0)) / 2.0;
    RTable table;
    const unsigned m = 28;
    bool closed_ok = true, probe_ok = true;
    std::string first;
    for (int c = 1; c <= 5; ++c) {
        CFWord w;
        w.terms = {BigInt(c)};
        const double y = q_inverse_series(w);
        const double want = std::pow(phi, 1.0 - 2.0 * c);
        if (std::fabs(y - want) > kClosedFormTol) {
            closed_ok = false;
            if (first.empty()) {
                first = "closed form [" + std::to_string(c) + "]: got " +
                        std::to_string(y);
            }
        }
        uint64_t k = uint64_t(std::llround(y * double(fib_u(m))));
        if (k >= fib_u(m - 1)) k = fib_u(m - 1) - 1;  // clamp into the row
        const double q = q_value(k, m, table).convert_to<double>();
        if (std::fabs(q - 1.0 / double(c)) > kProbeTol) {
            probe_ok = false;
            if (first.empty()) {
                first = "probe c=" + std::to_string(c) + ": q=" +
                        std::to_string(q);
            }
        }
    }
    if (closed_ok) {
        note(o, "single-letter closed forms ok at 1e-9");
    }
    if (probe_ok) {
        note(o, "five ratio probes within 1e-3 of 1/c");
    }
    if (!closed_ok || !probe_ok) {
        o.pass = false;
        note(o, "first mismatch: " + first);
    }
    return o;
}

Outcome criterion_11(bool) {
    Outcome o;
    SfTable sf;
    CTable c;
    const ConjectureReport rep = run_conjectures(2000, sf, c);
    uint64_t cases = 0;
    for (const auto& e : rep.entries) cases += e.cases;
    if (rep.total_violations() == 0) {
        note(o, "4 conjecture sweeps to 2000, " + std::to_string(cases) +
                    " cases, zero violations");
    } else {
        o.pass = false;
        std::string first;
        for (const auto& e : rep.entries) {
            if (!e.violations.empty()) {
                first = "(" + e.id + ") " + e.violations.front();
                break;
            }
        }
        note(o, std::to_string(rep.total_violations()) +
                    " violation(s), first: " + first);
    }
    return o;
}

struct Criterion {
    int id;
    double limit_s;
    Outcome (*run)(bool corrected);
};

const Criterion kCriteria[] = {
    {1, 1.0, criterion_1},   {2, 10.0, criterion_2}, {3, 30.0, criterion_3},
    {4, 30.0, criterion_4},  {5, 60.0, criterion_5}, {6, 10.0, criterion_6},
    {7, 60.0, criterion_7},  {8, 60.0, criterion_8}, {9, 60.0, criterion_9},
    {10, 10.0, criterion_10}, {11, 120.0, criterion_11},
};

}  // namespace

int main(int argc, char** argv) {
    int only = 0;
    bool corrected = false;
    for (int i = 1; i < argc; ++i) {
        if (std::strcmp(argv[i], "--criterion") == 0 && i + 1 < argc) {
            only = std::atoi(argv[++i]);
        } else if (std::strcmp(argv[i], "--corrected") == 0) {
            corrected = true;
        } else {
            std::cerr << "usage: acceptance [--criterion N] [--corrected]\n";
            return 2;
        }
    }
    if (only < 0 || only > 11) {
        std::cerr << "error: criterion must be 1..11\n";
        return 2;
    }
    if (corrected && only != 5 && only != 6 && only != 8) {
        std::cerr << "error: --corrected applies to criteria 5, 6 and 8\n";
        return 2;
    }

    bool all_pass = true;
    for (const Criterion& c : kCriteria) {
        if (only != 0 && c.id != only) continue;
        const auto t0 = std::chrono::steady_clock::now();
        Outcome o;
        try {
            o = c.run(corrected);
        } catch (const std::exception& e) {
            o.pass = false;
            o.detail = std::string("exception: ") + e.what();
        }
        const double secs =
            std::chrono::duration<double>(std::chrono::steady_clock::now() -
                                          t0)
                .count();
        const bool in_time = secs <= c.limit_s;
        const bool pass = o.pass && in_time;
        all_pass = all_pass && pass;
        std::ostringstream line;
        line.setf(std::ios::fixed);
        line.precision(2);
        line << "criterion " << c.id << (corrected ? " (corrected)" : "")
             << ": " << (pass ? "PASS" : "FAIL") << " — " << o.detail;
        if (!in_time) {
            line << "; over time limit";
        }
        line << " (" << secs << " s, limit " << c.limit_s << " s)";
        std::cout << line.str() << "\n";
    }
    return all_pass ? 0 : 1;
}
