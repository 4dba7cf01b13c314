#include "ospbi/linop.hpp"

#include <string>

namespace ospbi {

struct LinOp::Node {
    enum class Kind { MulPow, Derivative, Reflection, Dunkl, Scalar, Add, Compose };
    Kind kind;
    long j = 0;   // MulPow
    Rational c;   // Dunkl parameter or Scalar factor
    std::shared_ptr<const Node> a, b;
};

LinOp LinOp::mul_pow(long j) {
    auto n = std::make_shared<Node>();
    n->kind = Node::Kind::MulPow;
    n->j = j;
    return LinOp(std::move(n));
}

LinOp LinOp::derivative() {
    auto n = std::make_shared<Node>();
    n->kind = Node::Kind::Derivative;
    return LinOp(std::move(n));
}

LinOp LinOp::reflection() {
    auto n = std::make_shared<Node>();
    n->kind = Node::Kind::Reflection;
    return LinOp(std::move(n));
}

LinOp LinOp::dunkl(Rational mu) {
    auto n = std::make_shared<Node>();
    n->kind = Node::Kind::Dunkl;
    n->c = std::move(mu);
    return LinOp(std::move(n));
}

LinOp LinOp::scalar(Rational c) {
    auto n = std::make_shared<Node>();
    n->kind = Node::Kind::Scalar;
    n->c = std::move(c);
    return LinOp(std::move(n));
}

LinOp operator+(const LinOp& f, const LinOp& g) {
    auto n = std::make_shared<LinOp::Node>();
    n->kind = LinOp::Node::Kind::Add;
    n->a = f.node_;
    n->b = g.node_;
    return LinOp(std::move(n));
}

LinOp operator-(const LinOp& f, const LinOp& g) { return f + Rational(-1) * g; }

LinOp operator*(const LinOp& f, const LinOp& g) {
    auto n = std::make_shared<LinOp::Node>();
    n->kind = LinOp::Node::Kind::Compose;
    n->a = f.node_;
    n->b = g.node_;
    return LinOp(std::move(n));
}

LinOp operator*(const Rational& a, const LinOp& f) { return LinOp::scalar(a) * f; }

LaurentPoly LinOp::apply_node(const Node* n, const LaurentPoly& p) {
    switch (n->kind) {
        case Node::Kind::MulPow:
            return ospbi::mul_pow(p, n->j);
        case Node::Kind::Derivative:
            return ospbi::derivative(p);
        case Node::Kind::Reflection:
            return reflect(p);
        case Node::Kind::Dunkl:
            return ospbi::dunkl(n->c, p);
        case Node::Kind::Scalar:
            return n->c * p;
        case Node::Kind::Add:
            return apply_node(n->a.get(), p) + apply_node(n->b.get(), p);
        case Node::Kind::Compose:
            return apply_node(n->a.get(), apply_node(n->b.get(), p));
    }
    throw std::logic_error("unreachable LinOp node kind");
}

WindowOverflow::WindowOverflow(long col, long esc)
    : std::runtime_error("image of x^" + std::to_string(col) + " escapes the window at x^" +
                         std::to_string(esc)),
      column_exponent(col),
      escaped_exponent(esc) {}

ColumnMatrix op_columns(const LinOp& op, BasisWindow src, BasisWindow dst) {
    if (src.lo > src.hi || dst.lo > dst.hi) throw std::invalid_argument("empty basis window");
    ColumnMatrix m;
    m.src = src;
    m.dst = dst;
    m.cols.reserve(static_cast<size_t>(src.size()));
    for (long n = src.lo; n <= src.hi; ++n) {
        LaurentPoly img = op(LaurentPoly::mono(n));
        if (!img.is_zero()) {
            if (img.lo_exp() < dst.lo) throw WindowOverflow(n, img.lo_exp());
            if (img.hi_exp() > dst.hi) throw WindowOverflow(n, img.hi_exp());
        }
        std::vector<Rational> col(static_cast<size_t>(dst.size()), Rational(0));
        for (const auto& [e, v] : img.c) col[static_cast<size_t>(e - dst.lo)] = v;
        m.cols.push_back(std::move(col));
    }
    return m;
}

ColumnMatrix op_matrix(const LinOp& op, BasisWindow w) { return op_columns(op, w, w); }

ColumnMatrix matmul(const ColumnMatrix& f, const ColumnMatrix& g) {
    if (!(g.dst == f.src))
        throw std::invalid_argument("matmul window mismatch: inner windows differ");
    ColumnMatrix m;
    m.src = g.src;
    m.dst = f.dst;
    const size_t rows = static_cast<size_t>(f.dst.size());
    const size_t inner = static_cast<size_t>(f.src.size());
    for (const auto& gcol : g.cols) {
        std::vector<Rational> col(rows, Rational(0));
        for (size_t k = 0; k < inner; ++k) {
            if (gcol[k].is_zero()) continue;
            for (size_t i = 0; i < rows; ++i) col[i] += gcol[k] * f.cols[k][i];
        }
        m.cols.push_back(std::move(col));
    }
    return m;
}

}  // namespace ospbi
