#include "diatomic/fibrep.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <unordered_map>

namespace diatomic {

namespace {

constexpr uint64_t kMaxTable = 80'000'000;  // RTable / DP size guard

std::vector<uint64_t> fibs_upto_u64(uint64_t n) {
    std::vector<uint64_t> f;  // F_2, F_3, ... <= n
    uint64_t a = 1, b = 2;
    while (a <= n) {
        f.push_back(a);
        uint64_t c = a + b;
        a = b;
        b = c;
    }
    return f;
}

}  // namespace

std::vector<BigInt> r_table_dp(uint64_t n) {
    if (n > kMaxTable) throw std::range_error("r_table_dp: bound too large");
    std::vector<BigInt> ways(n + 1, BigInt(0));
    ways[0] = 1;
    for (uint64_t f : fibs_upto_u64(n)) {
        for (uint64_t v = n; v >= f; --v) {
            if (ways[v - f] != 0) ways[v] += ways[v - f];
        }
    }
    return ways;
}

BigInt r_count(uint64_t n) {
    if (n > kMaxTable) throw std::range_error("r_count: argument too large");
    return r_table_dp(n)[n];
}

BigInt r_count_recursive(uint64_t n) {
    thread_local std::unordered_map<uint64_t, BigInt> memo;
    if (n <= 1) return 1;  // R_0 = R_1 = 1
    if (auto it = memo.find(n); it != memo.end()) return it->second;
    ShiftClass cls = classify_shift(BigInt(n));
    uint64_t m = cls.m.convert_to<uint64_t>();
    BigInt out = cls.is_rho2 ? r_count_recursive(m) + r_count_recursive(m - 1)
                             : r_count_recursive(m);
    memo.emplace(n, out);
    return out;
}

void RTable::ensure(size_t n) {
    std::lock_guard<std::mutex> lock(grow_);
    if (values_.size() > n) return;
    if (n > kMaxTable) throw std::range_error("RTable: bound too large");
    size_t old = values_.size();
    values_.resize(n + 1);
    if (old == 0) {
        values_[0] = 1;
        old = 1;
    }
    // Walk rho2 and T with two pointers; every index t >= 1 must be hit by
    // exactly one of them (the sequences tile the positive integers).
    uint64_t i = 1, next_rho2 = rho2_u64(1);
    uint64_t j = 0, next_t = t_u64(0);
    while (next_rho2 < old) next_rho2 = rho2_u64(++i);
    while (next_t < old) next_t = t_u64(++j);
    for (uint64_t t = old; t <= n; ++t) {
        if (t == next_rho2) {
            if (t == next_t) throw std::logic_error("RTable: rho2/T overlap");
            values_[t] = values_[i] + values_[i - 1];
            next_rho2 = rho2_u64(++i);
        } else if (t == next_t) {
            values_[t] = values_[j];
            next_t = t_u64(++j);
        } else {
            throw std::logic_error("RTable: index in neither rho2 nor T");
        }
    }
}

void RTable::adopt(std::vector<BigInt> v) {
    std::lock_guard<std::mutex> lock(grow_);
    if (v.size() > values_.size()) values_ = std::move(v);
}

std::pair<BigInt, BigInt> q_raw(uint64_t k, unsigned n, RTable& table) {
    if (n < 2 || n > 32) throw std::range_error("q_raw: n outside [2, 32]");
    const auto& f = fib_upto(n + 1);
    BigInt fn = f[n];
    if (BigInt(k) >= f[n - 1]) throw std::domain_error("q_raw: k must satisfy k < F_{n-1}");
    uint64_t hi = (fn + k).convert_to<uint64_t>();
    table.ensure(hi);
    return {table.at(k), table.at(hi)};
}

Rational q_value(uint64_t k, unsigned n, RTable& table) {
    auto [p, q] = q_raw(k, n, table);
    return Rational(p, q);
}

double q_inverse_series(const CFWord& cf, unsigned depth) {
    if (cf.terms.empty()) throw std::domain_error("q_inverse_series: empty word");
    for (const BigInt& c : cf.terms) {
        if (c < 1) throw std::domain_error("q_inverse_series: term < 1");
    }
    const double phi = (1.0 + std::sqrt(5.0)) / 2.0;
    size_t count = depth == 0 ? cf.terms.size() : depth;
    double sum = 0.0;
    double partial = 0.0;  // c_1 + ... + c_k
    for (size_t k = 0; k < count; ++k) {
        const BigInt& c = cf.terms[k % cf.terms.size()];
        partial += c.convert_to<double>();
        double expo = 2.0 * partial - 1.0;
        if (expo > 1400) break;  // phi^-expo underflows
        double term = std::pow(phi, -expo);
        sum += (k % 2 == 0) ? term : -term;
    }
    return sum;
}

RCrushedArray crushed_array_r(unsigned rows, RTable& table) {
    if (rows < 1 || rows > 25) throw std::range_error("crushed_array_r: rows outside [1, 25]");
    const auto& f = fib_upto(rows + 3);
    table.ensure((f[rows + 3] - 2).convert_to<uint64_t>());
    RCrushedArray out;
    out.rows.resize(rows);
    for (unsigned i = 1; i <= rows; ++i) {
        uint64_t lo = (f[i + 2] - 1).convert_to<uint64_t>();
        uint64_t hi = (f[i + 3] - 2).convert_to<uint64_t>();
        auto& row = out.rows[i - 1];
        row.reserve(hi - lo + 1);
        for (uint64_t t = lo; t <= hi; ++t) row.push_back(table.at(t));
    }
    return out;
}

const GraphVertex* GraphG::find(unsigned row, uint64_t value) const {
    auto it = std::lower_bound(vertices.begin(), vertices.end(), std::pair{row, value},
                               [](const GraphVertex& v, const std::pair<unsigned, uint64_t>& key) {
                                   return std::pair{v.row, v.value} < key;
                               });
    if (it == vertices.end() || it->row != row || it->value != value) return nullptr;
    return &*it;
}

GraphG graph_g(unsigned depth) {
    if (depth < 1 || depth > 16) throw std::range_error("graph_g: depth outside [1, 16]");
    GraphG g;
    g.depth = depth;

    GraphVertex apex;
    apex.paths = 1;
    g.vertices.push_back(apex);

    const double phi = (1.0 + std::sqrt(5.0)) / 2.0;
    size_t row_begin = 0;  // first vertex of the current row
    for (unsigned r = 1; r <= depth; ++r) {
        size_t row_end = g.vertices.size();
        double scale = std::pow(phi, -static_cast<double>(r - 1));
        // Parents are sorted by value, so the child stream rho(m) + digit is
        // non-decreasing and equal values are adjacent: merging a duplicate
        // only ever targets the most recently appended vertex.
        for (size_t pi = row_begin; pi < row_end; ++pi) {
            for (int digit = 0; digit <= 1; ++digit) {
                uint64_t v = rho_u64(g.vertices[pi].value) + static_cast<uint64_t>(digit);
                bool fresh = g.vertices.size() == row_end || g.vertices.back().value != v;
                if (fresh) {
                    GraphVertex child;
                    child.row = r + 1;
                    child.value = v;
                    child.x = g.vertices[pi].x + scale * (2.0 * digit - 1.0);
                    child.y = g.vertices[pi].y - scale;
                    g.vertices.push_back(std::move(child));
                }
                size_t ci = g.vertices.size() - 1;
                g.vertices[ci].paths += g.vertices[pi].paths;
                g.edges.emplace_back(pi, ci);
            }
        }
        row_begin = row_end;
    }
    return g;
}

}  // namespace diatomic
