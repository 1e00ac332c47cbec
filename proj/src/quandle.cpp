#include "quandlink/quandle.hpp"

#include <algorithm>
#include <cctype>
#include <istream>
#include <stdexcept>

#include "quandlink/errors.hpp"

namespace quandlink {

OperationMatrix::OperationMatrix(int order, std::vector<int> entries)
    : order_(order), entries_(std::move(entries)) {
    if (order_ < 1) throw std::invalid_argument("matrix order must be >= 1");
    if (entries_.size() != static_cast<std::size_t>(order_) * order_)
        throw std::invalid_argument("matrix must have order*order entries, got " +
                                    std::to_string(entries_.size()));
    for (std::size_t k = 0; k < entries_.size(); ++k) {
        int v = entries_[k];
        if (v < 1 || v > order_)
            throw std::invalid_argument("matrix entry at row " + std::to_string(k / order_ + 1) +
                                        ", column " + std::to_string(k % order_ + 1) + " is " +
                                        std::to_string(v) + ", outside 1.." + std::to_string(order_));
    }
}

void OperationMatrix::set(int a, int b, int value) {
    if (value < 1 || value > order_)
        throw std::invalid_argument("matrix entry " + std::to_string(value) + " outside 1.." +
                                    std::to_string(order_));
    entries_[static_cast<std::size_t>(a - 1) * order_ + (b - 1)] = value;
}

std::string AxiomViolation::describe() const {
    switch (axiom) {
    case QuandleAxiom::Idempotence:
        return "axiom (i): " + std::to_string(a) + " ▷ " + std::to_string(a) +
               " != " + std::to_string(a);
    case QuandleAxiom::RightInvertibility:
        return "axiom (ii): column " + std::to_string(b) + " is not a permutation (value " +
               std::to_string(a) + " has " + std::to_string(c) + " preimages)";
    case QuandleAxiom::SelfDistributivity:
        return "axiom (iii): (a▷b)▷c != (a▷c)▷(b▷c) at (a,b,c) = (" + std::to_string(a) + "," +
               std::to_string(b) + "," + std::to_string(c) + ")";
    }
    return "unknown axiom violation";
}

QuandleVerification verify_quandle(const OperationMatrix& m) {
    const int n = m.order();
    QuandleVerification result;

    for (int a = 1; a <= n; ++a)
        if (m.at(a, a) != a)
            result.violations.push_back({QuandleAxiom::Idempotence, a, a, 0});

    // Axiom (ii): each column must be a permutation. Report every value
    // whose preimage count under c ↦ c▷b is not exactly one.
    bool columns_ok = true;
    for (int b = 1; b <= n; ++b) {
        std::vector<int> preimages(n + 1, 0);
        for (int c = 1; c <= n; ++c) preimages[m.at(c, b)]++;
        for (int a = 1; a <= n; ++a)
            if (preimages[a] != 1) {
                result.violations.push_back({QuandleAxiom::RightInvertibility, a, b, preimages[a]});
                columns_ok = false;
            }
    }

    for (int a = 1; a <= n; ++a)
        for (int b = 1; b <= n; ++b)
            for (int c = 1; c <= n; ++c)
                if (m.at(m.at(a, b), c) != m.at(m.at(a, c), m.at(b, c)))
                    result.violations.push_back({QuandleAxiom::SelfDistributivity, a, b, c});

    if (!result.violations.empty()) return result;

    // Dual table: a ▷⁻¹ b is the unique c with c ▷ b = a. Columns are
    // permutations at this point, so inversion is well defined.
    (void)columns_ok;
    std::vector<int> dual_entries(static_cast<std::size_t>(n) * n, 0);
    for (int b = 1; b <= n; ++b)
        for (int c = 1; c <= n; ++c) {
            int a = m.at(c, b);
            dual_entries[static_cast<std::size_t>(a - 1) * n + (b - 1)] = c;
        }

    result.quandle = Quandle(m, OperationMatrix(n, std::move(dual_entries)));
    return result;
}

namespace {

Quandle verified_or_die(const OperationMatrix& m, const char* what) {
    auto v = verify_quandle(m);
    if (!v.ok()) throw std::logic_error(std::string(what) + ": construction produced a non-quandle");
    return *std::move(v.quandle);
}

} // namespace

Quandle make_trivial(int n) {
    if (n < 1) throw std::invalid_argument("trivial quandle needs order >= 1");
    std::vector<int> entries(static_cast<std::size_t>(n) * n);
    for (int a = 1; a <= n; ++a)
        for (int b = 1; b <= n; ++b) entries[static_cast<std::size_t>(a - 1) * n + (b - 1)] = a;
    return verified_or_die(OperationMatrix(n, std::move(entries)), "make_trivial");
}

Quandle make_xn(int n) {
    if (n < 2) throw std::invalid_argument("X_n is defined for n >= 2");
    const int order = n + 1;
    std::vector<int> entries(static_cast<std::size_t>(order) * order);
    auto put = [&](int a, int b, int v) {
        entries[static_cast<std::size_t>(a - 1) * order + (b - 1)] = v;
    };
    for (int a = 1; a <= n; ++a) {
        for (int b = 1; b <= n; ++b) put(a, b, a);
        put(a, order, a % n + 1); // the shift column; n wraps to 1
    }
    for (int b = 1; b <= order; ++b) put(order, b, order);
    return verified_or_die(OperationMatrix(order, std::move(entries)), "make_xn");
}

OrbitDecomposition orbits(const Quandle& q) {
    const int n = q.order();
    OrbitDecomposition d;
    d.orbit_of.assign(n + 1, -1);
    for (int start = 1; start <= n; ++start) {
        if (d.orbit_of[start] != -1) continue;
        int index = static_cast<int>(d.orbits.size());
        std::vector<int> members;
        std::vector<int> stack{start};
        d.orbit_of[start] = index;
        while (!stack.empty()) {
            int a = stack.back();
            stack.pop_back();
            members.push_back(a);
            for (int x = 1; x <= n; ++x) {
                for (int next : {q.op(a, x), q.inv(a, x)}) {
                    if (d.orbit_of[next] == -1) {
                        d.orbit_of[next] = index;
                        stack.push_back(next);
                    }
                }
            }
        }
        std::sort(members.begin(), members.end());
        d.orbits.push_back(std::move(members));
    }
    return d;
}

bool is_connected(const Quandle& q) { return orbits(q).orbits.size() == 1; }

bool is_trivial_orbit_quandle(const Quandle& q) {
    auto d = orbits(q);
    for (const auto& orbit : d.orbits)
        for (int a : orbit)
            for (int b : orbit)
                if (q.op(a, b) != a) return false;
    return true;
}

Quandle subquandle(const Quandle& q, const std::vector<int>& elements) {
    std::vector<int> elems(elements);
    std::sort(elems.begin(), elems.end());
    elems.erase(std::unique(elems.begin(), elems.end()), elems.end());
    if (elems.empty()) throw std::invalid_argument("subquandle needs a nonempty element set");

    const int n = q.order();
    std::vector<int> local(n + 1, 0); // element -> 1-based local label
    for (std::size_t k = 0; k < elems.size(); ++k) {
        int e = elems[k];
        if (e < 1 || e > n) throw std::invalid_argument("subquandle element out of range");
        local[e] = static_cast<int>(k) + 1;
    }

    const int m = static_cast<int>(elems.size());
    std::vector<int> entries(static_cast<std::size_t>(m) * m);
    for (int i = 0; i < m; ++i)
        for (int j = 0; j < m; ++j) {
            int image = q.op(elems[i], elems[j]);
            if (local[image] == 0)
                throw std::invalid_argument("element set is not closed under the operation");
            if (local[q.inv(elems[i], elems[j])] == 0)
                throw std::invalid_argument("element set is not closed under the dual operation");
            entries[static_cast<std::size_t>(i) * m + j] = local[image];
        }
    return verified_or_die(OperationMatrix(m, std::move(entries)), "subquandle");
}

OperationMatrix read_operation_matrix(std::istream& in) {
    std::vector<long long> values;
    std::string line;
    int line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        if (auto hash = line.find('#'); hash != std::string::npos) line.resize(hash);
        std::size_t i = 0;
        while (i < line.size()) {
            if (std::isspace(static_cast<unsigned char>(line[i]))) {
                ++i;
                continue;
            }
            std::size_t start = i;
            bool negative = line[i] == '-';
            if (negative) ++i;
            std::size_t digits = 0;
            long long v = 0;
            while (i < line.size() && std::isdigit(static_cast<unsigned char>(line[i]))) {
                v = v * 10 + (line[i] - '0');
                if (v > 1'000'000'000)
                    throw ParseError("matrix value too large", line_no, static_cast<int>(start) + 1);
                ++i;
                ++digits;
            }
            if (digits == 0 || (i < line.size() && !std::isspace(static_cast<unsigned char>(line[i]))))
                throw ParseError("expected an integer", line_no, static_cast<int>(start) + 1);
            values.push_back(negative ? -v : v);
        }
    }
    if (values.empty()) throw ParseError("empty matrix file");
    long long n = values[0];
    if (n < 1 || n > 4096) throw ParseError("matrix order must be in 1..4096, got " + std::to_string(n));
    std::size_t expected = 1 + static_cast<std::size_t>(n) * static_cast<std::size_t>(n);
    if (values.size() < expected)
        throw ParseError("expected " + std::to_string(expected - 1) + " entries for order " +
                         std::to_string(n) + ", found " + std::to_string(values.size() - 1));
    if (values.size() > expected)
        throw ParseError("trailing data after the matrix entries");

    std::vector<int> entries;
    entries.reserve(expected - 1);
    for (std::size_t k = 1; k < values.size(); ++k) {
        long long v = values[k];
        if (v < 1 || v > n)
            throw ParseError("matrix entry " + std::to_string(v) + " outside 1.." + std::to_string(n));
        entries.push_back(static_cast<int>(v));
    }
    return OperationMatrix(static_cast<int>(n), std::move(entries));
}

} // namespace quandlink
