#pragma once

#include <memory>
#include <stdexcept>
#include <vector>

#include "ospbi/laurent.hpp"

namespace ospbi {

// Immutable linear operator on LaurentPoly, built as an expression tree over
// the primitives multiply-by-x^j, d/dx, reflection, Dunkl(mu) and scalar,
// closed under sum and composition. Copies share the tree.
class LinOp {
public:
    static LinOp mul_pow(long j);
    static LinOp derivative();
    static LinOp reflection();
    static LinOp dunkl(Rational mu);
    static LinOp scalar(Rational c);
    static LinOp identity() { return scalar(Rational(1)); }

    LaurentPoly operator()(const LaurentPoly& p) const { return apply_node(node_.get(), p); }

    friend LinOp operator+(const LinOp& f, const LinOp& g);
    friend LinOp operator-(const LinOp& f, const LinOp& g);
    // Composition: (f * g)(p) = f(g(p)) -- g acts first, matching the usual
    // operator-product notation.
    friend LinOp operator*(const LinOp& f, const LinOp& g);
    friend LinOp operator*(const Rational& a, const LinOp& f);

private:
    struct Node;
    std::shared_ptr<const Node> node_;
    explicit LinOp(std::shared_ptr<const Node> n) : node_(std::move(n)) {}
    static LaurentPoly apply_node(const Node* n, const LaurentPoly& p);
};

inline LaurentPoly apply(const LinOp& op, const LaurentPoly& p) { return op(p); }

struct BasisWindow {
    long lo;
    long hi;
    long size() const { return hi - lo + 1; }
    friend bool operator==(const BasisWindow&, const BasisWindow&) = default;
};

// Raised when the image of a basis monomial escapes the destination window.
struct WindowOverflow : std::runtime_error {
    long column_exponent;
    long escaped_exponent;
    WindowOverflow(long col, long esc);
};

// Columns of an operator in the monomial basis: cols[j] holds the
// coefficients of op(x^(src.lo+j)) on the exponents dst.lo..dst.hi
// (ascending). src == dst gives the usual square matrix.
struct ColumnMatrix {
    BasisWindow src;
    BasisWindow dst;
    std::vector<std::vector<Rational>> cols;
    friend bool operator==(const ColumnMatrix&, const ColumnMatrix&) = default;
};

// Throws WindowOverflow if some image leaves dst.
ColumnMatrix op_columns(const LinOp& op, BasisWindow src, BasisWindow dst);
ColumnMatrix op_matrix(const LinOp& op, BasisWindow w);

// Matrix product of column matrices: (f.g) with g.src -> g.dst == f.src ->
// f.dst, i.e. columns of the composition "apply g, then f".
ColumnMatrix matmul(const ColumnMatrix& f, const ColumnMatrix& g);

}  // namespace ospbi
