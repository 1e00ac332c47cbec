#pragma once

#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

namespace quandlink {

// Operation table of a binary operation on {1..n}: at(a, b) = a ▷ b.
// Construction checks shape and entry range only; quandle axioms are the
// job of verify_quandle.
class OperationMatrix {
public:
    OperationMatrix(int order, std::vector<int> entries);

    int order() const { return order_; }
    int at(int a, int b) const { return entries_[static_cast<std::size_t>(a - 1) * order_ + (b - 1)]; }
    void set(int a, int b, int value);

    const std::vector<int>& entries() const { return entries_; }

    bool operator==(const OperationMatrix&) const = default;

private:
    int order_;
    std::vector<int> entries_; // row-major, values in 1..order
};

enum class QuandleAxiom {
    Idempotence,        // a ▷ a = a
    RightInvertibility, // every column is a permutation
    SelfDistributivity, // (a▷b)▷c = (a▷c)▷(b▷c)
};

struct AxiomViolation {
    QuandleAxiom axiom;
    int a = 0;
    int b = 0;
    int c = 0; // witness triple; for RightInvertibility, c = number of preimages found

    std::string describe() const;
    bool operator==(const AxiomViolation&) const = default;
};

class Quandle;
struct QuandleVerification;
QuandleVerification verify_quandle(const OperationMatrix& m);

// A verified quandle: the forward table plus the dual table obtained by
// inverting each column permutation. Immutable once built.
class Quandle {
public:
    int order() const { return op_.order(); }

    int op(int a, int b) const { return op_.at(a, b); }   // a ▷ b
    int inv(int a, int b) const { return dual_.at(a, b); } // a ▷⁻¹ b

    // sign >= 0 applies ▷, sign < 0 applies ▷⁻¹
    int apply(int a, int b, int sign) const { return sign >= 0 ? op(a, b) : inv(a, b); }

    const OperationMatrix& matrix() const { return op_; }
    const OperationMatrix& dual_matrix() const { return dual_; }

    bool operator==(const Quandle& other) const { return op_ == other.op_; }

private:
    friend struct QuandleVerification;
    friend QuandleVerification verify_quandle(const OperationMatrix&);

    Quandle(OperationMatrix op, OperationMatrix dual) : op_(std::move(op)), dual_(std::move(dual)) {}

    OperationMatrix op_;
    OperationMatrix dual_;
};

struct QuandleVerification {
    std::optional<Quandle> quandle;         // set iff violations is empty
    std::vector<AxiomViolation> violations; // complete list, not just the first

    bool ok() const { return quandle.has_value(); }
};

// verify_quandle checks all three axioms by full enumeration and, on
// success, builds the dual table. Entry-range problems are rejected
// earlier, by the OperationMatrix constructor, and are a different kind of
// failure.

// T_n: a ▷ b = a for all a, b. Requires n >= 1.
Quandle make_trivial(int n);

// The (n+1)-element quandle on {1..n+1} where column n+1 cyclically shifts
// 1..n (n wraps to 1), row n+1 is constant, and everything else acts
// trivially. Requires n >= 2.
Quandle make_xn(int n);

struct OrbitDecomposition {
    std::vector<int> orbit_of;            // element -> index into orbits; [0] unused (-1)
    std::vector<std::vector<int>> orbits; // each sorted ascending; ordered by least element
};

// Connected components of the graph with an edge a — a▷x for every x.
OrbitDecomposition orbits(const Quandle& q);

bool is_connected(const Quandle& q);

// True iff every orbit, as a subquandle, is trivial (a ▷ b = a on it).
bool is_trivial_orbit_quandle(const Quandle& q);

// Restriction of q to a ▷-closed subset, relabeled 1..k by ascending element.
// Throws std::invalid_argument if the subset is empty or not closed.
Quandle subquandle(const Quandle& q, const std::vector<int>& elements);

// File format: first integer is n, followed by n*n entries in row-major
// order; '#' starts a comment that runs to end of line.
OperationMatrix read_operation_matrix(std::istream& in);

} // namespace quandlink
